use crate::render::{render_table, Table};
use crate::{CliError, Format, Method, Suite, EXIT_OK, EXIT_VERIFY};
use serde::Serialize;
use std::io::Write;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use strengthlab::{
    bounds, enumerate, graph6_decode, graph6_encode, ramsey, verify, EnumCursor, Graph, Numbering,
    RamseyCheckpoint, RamseyResult,
};

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

// ---------------------------------------------------------------------------
// strength
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct NumberingReport<'a> {
    labels: &'a [u32],
    strength: u32,
}

#[derive(Serialize)]
struct StrengthReport<'a> {
    order: usize,
    size: usize,
    graph6: String,
    strength: Option<u32>,
    method: &'a str,
    witness_numbering: Option<NumberingReport<'a>>,
    witness_source: Option<&'a str>,
    max_fk_in_complement: Option<usize>,
    /// n + min degree, when there is no isolated vertex
    lower_bound_min_degree: Option<u32>,
    /// 2n - independence number
    upper_bound_independence: Option<u32>,
    complement_strength: Option<u32>,
    /// present under --method both
    methods_agree: Option<bool>,
    note: Option<&'a str>,
}

pub fn strength(
    edges: Option<String>,
    graph6: Option<String>,
    method: Method,
    allow_empty_report: bool,
) -> Result<u8, CliError> {
    let g = parse_graph(edges, graph6)?;
    if g.order() == 0 {
        return Err(CliError::domain("the graph has no vertices"));
    }
    if g.is_edgeless() {
        if allow_empty_report {
            print_json(&StrengthReport {
                order: g.order(),
                size: 0,
                graph6: graph6_encode(&g),
                strength: None,
                method: "none",
                witness_numbering: None,
                witness_source: None,
                max_fk_in_complement: None,
                lower_bound_min_degree: None,
                upper_bound_independence: None,
                complement_strength: complement_strength(&g),
                methods_agree: None,
                note: Some("strength is undefined for edgeless graphs"),
            });
            return Ok(EXIT_OK);
        }
        return Err(CliError::domain(
            "strength is undefined for edgeless graphs (use --allow-empty-report)",
        ));
    }
    if matches!(method, Method::Bruteforce | Method::Both)
        && g.order() > strengthlab::strength::BRUTEFORCE_WITNESS_MAX_ORDER
    {
        return Err(CliError::budget(format!(
            "brute force is budgeted to order {}, got {}",
            strengthlab::strength::BRUTEFORCE_WITNESS_MAX_ORDER,
            g.order()
        )));
    }

    let (result, method_name, agree) = match method {
        Method::Characterization => (strengthlab::strength(&g)?, "fk-characterization", None),
        Method::Bruteforce => (strengthlab::strength_bruteforce(&g)?, "brute-force", None),
        Method::Both => {
            let a = strengthlab::strength(&g)?;
            let b = strengthlab::strength_bruteforce(&g)?;
            let agree = a.value == b.value;
            (a, "both", Some(agree))
        }
    };

    let witness = witness_report(&result.witness);
    print_json(&StrengthReport {
        order: g.order(),
        size: g.size(),
        graph6: graph6_encode(&g),
        strength: Some(result.value),
        method: method_name,
        witness_numbering: witness,
        witness_source: Some(match result.witness_source {
            strengthlab::strength::WitnessSource::BruteForce => "brute-force",
            strengthlab::strength::WitnessSource::CharacterizationDerived => {
                "characterization-derived"
            }
        }),
        max_fk_in_complement: result.max_fk_in_complement,
        lower_bound_min_degree: strengthlab::strength_lower_bound(&g).ok(),
        upper_bound_independence: strengthlab::strength_upper_bound_beta(&g).ok(),
        complement_strength: complement_strength(&g),
        methods_agree: agree,
        note: None,
    });
    Ok(EXIT_OK)
}

fn witness_report(n: &Numbering) -> Option<NumberingReport<'_>> {
    Some(NumberingReport {
        labels: n.labels(),
        strength: n.strength_value()?,
    })
}

fn complement_strength(g: &Graph) -> Option<u32> {
    let comp = g.complement();
    if comp.is_edgeless() {
        None
    } else {
        strengthlab::strength(&comp).ok().map(|r| r.value)
    }
}

fn parse_graph(edges: Option<String>, graph6: Option<String>) -> Result<Graph, CliError> {
    match (edges, graph6) {
        (Some(e), None) => Ok(Graph::from_edge_list_str(&e)?),
        (None, Some(g6)) => Ok(graph6_decode(g6.trim().as_bytes())?),
        _ => Err(CliError::input(
            "provide exactly one of --edges or --graph6",
        )),
    }
}

// ---------------------------------------------------------------------------
// ramsey
// ---------------------------------------------------------------------------

#[derive(Serialize, serde::Deserialize)]
struct RamseyReport {
    s: u32,
    t: u32,
    status: String,
    value: Option<u32>,
    lower: u32,
    upper: Option<u32>,
    known_value: Option<u32>,
    witness_graph6: Option<String>,
    witness_family: Option<String>,
    witness_order: Option<usize>,
    classes_examined: u64,
}

impl RamseyReport {
    fn new(r: &RamseyResult) -> Self {
        RamseyReport {
            s: r.s,
            t: r.t,
            status: match r.status {
                ramsey::RamseyStatus::Exact => "exact",
                ramsey::RamseyStatus::Bounded => "bounded",
            }
            .to_string(),
            value: r.value,
            lower: r.lower,
            upper: r.upper,
            known_value: r.known_value,
            witness_graph6: r.witness.as_ref().map(graph6_encode),
            witness_family: r.witness.as_ref().and_then(Graph::family_name),
            witness_order: r.witness.as_ref().map(Graph::order),
            classes_examined: r.classes_examined,
        }
    }
}

/// On-disk checkpoint wrapper: the search state plus, once finished, the
/// final report so a re-run just replays it.
#[derive(Serialize)]
struct CheckpointFile<'a> {
    done: bool,
    state: Option<&'a RamseyCheckpoint>,
    result: Option<&'a RamseyReport>,
}

#[derive(serde::Deserialize)]
struct CheckpointFileOwned {
    done: bool,
    state: Option<RamseyCheckpoint>,
    result: Option<RamseyReport>,
}

pub fn ramsey(s: u32, t: u32, max_n: usize, checkpoint: Option<PathBuf>) -> Result<u8, CliError> {
    let resume = match checkpoint
        .as_deref()
        .map(load_checkpoint)
        .transpose()?
        .flatten()
    {
        Some(CheckpointState::Done(result)) => {
            eprintln!("checkpoint is complete; replaying its result");
            print_json(&result);
            return Ok(EXIT_OK);
        }
        Some(CheckpointState::InFlight(state)) => {
            eprintln!(
                "resuming from checkpoint: {} classes examined so far",
                state.classes_examined
            );
            Some(state)
        }
        None => None,
    };

    if let Some(total) = ramsey::classes_at_order(max_n) {
        eprintln!("search space at the cap: {total} classes of order {max_n}");
    }
    let started = std::time::Instant::now();
    let mut last_save_err: Option<String> = None;
    let result = ramsey::ramsey_fk_resumable(
        s,
        t,
        max_n,
        resume,
        |state| {
            if let Some(path) = checkpoint.as_deref() {
                let file = CheckpointFile {
                    done: false,
                    state: Some(state),
                    result: None,
                };
                if let Err(e) = write_json_atomic(path, &file) {
                    last_save_err = Some(e.message);
                }
            }
        },
        |order, classes| {
            let total = ramsey::classes_at_order(order).unwrap_or(0);
            eprintln!("order {order}: {classes}/{total} classes");
        },
    )?;
    if let Some(e) = last_save_err {
        eprintln!("warning: checkpoint writes failed: {e}");
    }

    let report = RamseyReport::new(&result);
    if let Some(path) = checkpoint.as_deref() {
        let file = CheckpointFile {
            done: true,
            state: None,
            result: Some(&report),
        };
        write_json_atomic(path, &file)?;
    }
    let elapsed = started.elapsed();
    eprintln!(
        "examined {} classes in {:.2?} ({:.0} classes/sec)",
        result.classes_examined,
        elapsed,
        result.classes_examined as f64 / elapsed.as_secs_f64().max(1e-9)
    );
    print_json(&report);
    Ok(EXIT_OK)
}

enum CheckpointState {
    Done(Box<RamseyReport>),
    InFlight(RamseyCheckpoint),
}

fn load_checkpoint(path: &Path) -> Result<Option<CheckpointState>, CliError> {
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(path)?;
    let file: CheckpointFileOwned = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("corrupt checkpoint {}: {e}", path.display())))?;
    match (file.done, file.state, file.result) {
        (true, _, Some(result)) => Ok(Some(CheckpointState::Done(Box::new(result)))),
        (false, Some(state), _) => Ok(Some(CheckpointState::InFlight(state))),
        _ => Err(CliError::input(format!(
            "corrupt checkpoint {}: inconsistent fields",
            path.display()
        ))),
    }
}

fn write_json_atomic<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let tmp = path.with_extension("tmp");
    let mut f = std::fs::File::create(&tmp)?;
    serde_json::to_writer_pretty(&mut f, value)
        .map_err(|e| CliError::input(format!("checkpoint write failed: {e}")))?;
    f.flush()?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// fmax
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct FmaxReport {
    n: usize,
    f_max: u32,
    classes_examined: u64,
    witness_graph6: Option<(String, String)>,
    witness_families: Option<(Option<String>, Option<String>)>,
}

pub fn fmax(n: usize, witnesses: bool) -> Result<u8, CliError> {
    if n < 3 {
        return Err(CliError::input(format!(
            "no order-{n} graph has both sides of the pair nonempty"
        )));
    }
    if n > bounds::F_MAX_ORDER_CAP {
        return Err(CliError::budget(format!(
            "f(n) enumeration is budgeted to order {}, got {n}",
            bounds::F_MAX_ORDER_CAP
        )));
    }
    if let Some(total) = bounds::f_max_classes(n) {
        eprintln!("sweeping {total} classes of order {n}");
        if n == 10 {
            eprintln!("note: order 10 takes minutes of wall time");
        }
    }
    let started = std::time::Instant::now();
    let result = bounds::f_max_with_progress(n, |classes| {
        eprintln!("{classes} classes...");
    })?;
    eprintln!("done in {:.2?}", started.elapsed());
    print_json(&FmaxReport {
        n,
        f_max: result.value,
        classes_examined: result.classes_examined,
        witness_graph6: witnesses.then(|| {
            (
                graph6_encode(&result.witness.0),
                graph6_encode(&result.witness.1),
            )
        }),
        witness_families: witnesses.then(|| {
            (
                result.witness.0.family_name(),
                result.witness.1.family_name(),
            )
        }),
    });
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

pub fn tables(which: u8, format: Format) -> Result<u8, CliError> {
    let table = match which {
        1 => table1()?,
        2 => table2()?,
        3 => table3()?,
        4 => table4()?,
        _ => unreachable!("clap bounds the id"),
    };
    print!("{}", render_table(&table, format));
    Ok(EXIT_OK)
}

fn table1() -> Result<Table, CliError> {
    let mut rows = Vec::new();
    for &(s, t, _) in &verify::TABLE1_RFSFT {
        let value = match ramsey::fk_ramsey_knowledge(s, t)? {
            ramsey::FkKnowledge::Exact(v) => v,
            ramsey::FkKnowledge::Range { .. } => {
                return Err(CliError::input(format!(
                    "r(F_{s},F_{t}) has no closed form"
                )))
            }
        };
        rows.push(vec![format!("F_{s}"), format!("F_{t}"), value.to_string()]);
    }
    Ok(Table {
        title: "small Ramsey numbers r(F_s, F_t)",
        columns: vec!["G_1", "G_2", "r(G_1,G_2)"],
        rows,
    })
}

fn table2() -> Result<Table, CliError> {
    let mut rows = Vec::new();
    rows.push(vec![
        "3".into(),
        "7".into(),
        "the unique pair K_{1,2} / K_1 + K_2".into(),
    ]);
    for n in 4..=12u32 {
        match bounds::f_via_ramsey(n)? {
            bounds::FValue::Exact { value, pairs } => {
                let reasons: Vec<String> = pairs
                    .iter()
                    .map(|&(s, t)| {
                        let v = match ramsey::fk_ramsey_knowledge(s, t) {
                            Ok(ramsey::FkKnowledge::Exact(v)) => format!("= {v}"),
                            Ok(ramsey::FkKnowledge::Range { lower, .. }) => {
                                format!(">= {lower}")
                            }
                            Err(_) => unreachable!("pairs come from the scan"),
                        };
                        format!("r(F_{s},F_{t}) {v}")
                    })
                    .collect();
                rows.push(vec![
                    n.to_string(),
                    value.to_string(),
                    reasons.join(" and "),
                ]);
            }
            bounds::FValue::Interval { lower, upper, .. } => {
                rows.push(vec![
                    n.to_string(),
                    format!("[{lower},{upper}]"),
                    "open".into(),
                ]);
            }
        }
    }
    Ok(Table {
        title: "small values of f(n)",
        columns: vec!["n", "f(n)", "reason"],
        rows,
    })
}

fn table3() -> Result<Table, CliError> {
    // constant runs of sigma over [3, 35], with the binding pair taken at
    // the last order of each run (the value that closes the range)
    let mut rows = Vec::new();
    let mut lo = 3u32;
    while lo <= 35 {
        let value = bounds::sigma(lo)?;
        let mut hi = lo;
        while hi < 35 && bounds::sigma(hi + 1)? == value {
            hi += 1;
        }
        let (_, reasons) = bounds::sigma_with_reasons(hi)?;
        let reason = reasons
            .iter()
            .map(|&(s, t, r)| format!("r({s},{t}) = {r}"))
            .collect::<Vec<_>>()
            .join(" and ");
        rows.push(vec![format!("[{lo},{hi}]"), value.to_string(), reason]);
        lo = hi + 1;
    }
    Ok(Table {
        title: "values of sigma_n for n in [3,35]",
        columns: vec!["n", "sigma_n", "reason"],
        rows,
    })
}

fn table4() -> Result<Table, CliError> {
    let rows = bounds::bounds_table(3, 35)?
        .into_iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.rho.to_string(),
                r.rho_prime.to_string(),
                r.upper.to_string(),
            ]
        })
        .collect();
    Ok(Table {
        title: "bounds for str(G) + str(complement(G))",
        columns: vec!["n", "rho_n", "rho'_n", "4n - sigma_n"],
        rows,
    })
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

pub fn verify(suite: Suite, max_order: usize) -> Result<u8, CliError> {
    if !(2..=7).contains(&max_order) {
        return Err(CliError::budget(format!(
            "--max-order must lie in [2,7], got {max_order}"
        )));
    }
    let checks = match suite {
        Suite::All => verify::all_suites(max_order)?,
        Suite::Strength => verify::strength_suite(max_order)?,
        Suite::Theorems => verify::theorem_suite(max_order)?,
        Suite::Tables => verify::table_suite()?,
        Suite::Enumeration => verify::enumeration_suite(max_order)?,
    };
    for c in &checks {
        println!(
            "[{}] {}: {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.details
        );
    }
    let failed = verify::failures(&checks);
    println!("{} checks, {} failed", checks.len(), failed);
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY })
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

pub fn enumerate(
    n: usize,
    shard: Option<(usize, usize)>,
    count_only: bool,
    cursor_path: Option<PathBuf>,
    limit: Option<u64>,
) -> Result<u8, CliError> {
    if let Some(total) = enumerate::CLASS_COUNTS.get(n.wrapping_sub(1)) {
        if n >= 11 {
            eprintln!("estimated work: {total} classes at order {n}; expect a very long run");
        }
    }
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut emitted = 0u64;
    let visit = |g: &Graph| -> ControlFlow<()> {
        if !count_only {
            writeln!(out, "{}", graph6_encode(g)).expect("stdout");
        }
        emitted += 1;
        if limit.is_some_and(|l| emitted >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };

    let visited = match (shard, cursor_path.as_deref()) {
        (Some((shard, shard_count)), None) => {
            enumerate::enumerate_partitioned(n, shard, shard_count, visit)?
        }
        (None, Some(path)) => {
            let cursor = if path.exists() {
                let text = std::fs::read_to_string(path)?;
                let c = EnumCursor::from_json(&text)?;
                eprintln!("resuming after {} visited classes", c.visited);
                c
            } else {
                EnumCursor::start(n)?
            };
            if cursor.order != n {
                return Err(CliError::input(format!(
                    "cursor is for order {}, not {n}",
                    cursor.order
                )));
            }
            let (count, final_cursor) = enumerate::cursor_resume(&cursor, visit)?;
            std::fs::write(path, final_cursor.to_json())?;
            eprintln!("cursor saved to {}", path.display());
            count
        }
        (None, None) => enumerate::enumerate_graphs(n, visit)?,
        (Some(_), Some(_)) => unreachable!("clap forbids the combination"),
    };
    out.flush()?;
    eprintln!("{visited} classes visited");
    if count_only {
        println!("{visited}");
    }
    Ok(EXIT_OK)
}
