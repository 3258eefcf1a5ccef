//! Closed-form bounds and exact values for `f(n)`, the maximum of
//! `str(G) + str(complement(G))` over order-`n` graphs with both sides
//! nonempty, plus the registry-driven `sigma_n` and the bounds table over
//! `n` in `[3, 35]`.

use crate::canon::{canonical_form, string_bits};
use crate::enumerate::{sweep_units, UnitReport, CLASS_COUNTS};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ramsey::{fk_ramsey_knowledge, known_classical, FkKnowledge};
use crate::strength::max_fk_subgraph;
use std::ops::ControlFlow;

/// Lower bound `rho_n = 3n + floor(n/2) - 3`, attained by the split
/// clique pair `K_{n/2} + K_{n-n/2}` against its complement.
pub fn rho(n: u32) -> Result<u32> {
    if n < 3 {
        return Err(Error::Domain(format!("rho is defined for n >= 3, got {n}")));
    }
    Ok(3 * n + n / 2 - 3)
}

/// Lower bound `rho'_n = 4n - 2*ceil((3 + sqrt(8n-7))/2) + 2`, evaluated
/// in exact integer arithmetic: `8n-7` is a perfect square at n = 4, 11,
/// 29, ..., where a floating-point square root could tip the ceiling.
pub fn rho_prime(n: u32) -> Result<u32> {
    if n < 3 {
        return Err(Error::Domain(format!(
            "rho_prime is defined for n >= 3, got {n}"
        )));
    }
    let d = (8 * n - 7) as u64;
    let mut c = d.isqrt();
    if c * c < d {
        c += 1; // c = ceil(sqrt(d)); for integer 2m-3, 2m-3 >= sqrt(d) iff 2m-3 >= c
    }
    let m = (3 + c as u32).div_ceil(2);
    Ok(4 * n - 2 * m + 2)
}

const SIGMA_MIN: u32 = 3;
const SIGMA_MAX: u32 = 35;

/// `sigma_n`: the least `a + b` over `a, b >= 1` with `r(a+1, b+1) > n`,
/// resolved purely from the known classical values. Outside `[3, 35]`
/// the registry cannot justify an answer and the call errors rather than
/// extrapolate.
pub fn sigma(n: u32) -> Result<u32> {
    Ok(sigma_with_reasons(n)?.0)
}

/// A registry entry `(s, t, r(s,t))` certifying a sigma value.
pub type SigmaReason = (u32, u32, u32);

/// `sigma_n` together with every registry pair attaining the minimum at
/// this `n`.
pub fn sigma_with_reasons(n: u32) -> Result<(u32, Vec<SigmaReason>)> {
    if !(SIGMA_MIN..=SIGMA_MAX).contains(&n) {
        return Err(Error::InsufficientRamseyData(n));
    }
    for sum in 2..=20 {
        let mut reasons = Vec::new();
        for a in 1..=sum / 2 {
            let b = sum - a;
            if let Some(r) = known_classical(a + 1, b + 1) {
                if r > n {
                    reasons.push((a + 1, b + 1, r));
                }
            }
        }
        if !reasons.is_empty() {
            return Ok((sum, reasons));
        }
    }
    unreachable!("r(3,9) = 36 settles every n <= 35")
}

// ---------------------------------------------------------------------------
// f(n) by exhaustive enumeration
// ---------------------------------------------------------------------------

/// Order cap for [`f_max`]: n = 9 runs in minutes, n = 10 is the outer
/// limit of desk scale.
pub const F_MAX_ORDER_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct FMaxResult {
    pub value: u32,
    /// pair attaining the maximum: a representative and its complement,
    /// canonical-first, deterministic under any parallel schedule
    pub witness: (Graph, Graph),
    pub classes_examined: u64,
    /// every containment profile `(max_fk(G), max_fk(complement))` seen
    /// over the valid pairs: the order fails to arrow `(F_s, F_t)`
    /// exactly when some profile is below `(s, t)` componentwise
    pub fk_pairs: Vec<(u32, u32)>,
}

struct PairScan {
    best: Option<(u32, u128, u128, Graph, Graph)>,
    profile: u128,
    classes: u64,
}

/// Exact `f(n)` over the isomorphism classes of order `n`, skipping the
/// two classes whose side of the pair is edgeless (`K_n` and its
/// complement) and visiting each unordered pair `{G, complement}` once.
pub fn f_max(n: usize) -> Result<FMaxResult> {
    f_max_with_progress(n, |_| {})
}

pub fn f_max_with_progress(n: usize, mut progress: impl FnMut(u64)) -> Result<FMaxResult> {
    if !(3..=F_MAX_ORDER_CAP).contains(&n) {
        return Err(Error::Domain(format!(
            "f(n) enumeration covers 3 <= n <= {F_MAX_ORDER_CAP}, got {n}"
        )));
    }
    let chunk = if n <= 8 { 4096 } else { 128 };
    let mut total = PairScan {
        best: None,
        profile: 0,
        classes: 0,
    };
    sweep_units(
        n,
        0,
        chunk,
        |unit| {
            let mut scan = PairScan {
                best: None,
                profile: 0,
                classes: 0,
            };
            unit.expand(n, &mut |g| {
                scan.classes += 1;
                scan_pair(g, n, &mut scan);
                ControlFlow::Continue(())
            });
            UnitReport {
                path: unit.path.clone(),
                classes: scan.classes,
                value: scan,
            }
        },
        |reports| {
            for r in reports {
                total.classes += r.classes;
                total.profile |= r.value.profile;
                merge_best(&mut total.best, r.value.best);
            }
            progress(total.classes);
            ControlFlow::Continue(())
        },
    )?;

    let (value, _, _, g, comp) = total.best.expect("every n >= 3 has a valid pair");
    let mut fk_pairs = Vec::new();
    for a in 1..=n as u32 {
        for b in 1..=n as u32 {
            if total.profile >> profile_index(n, a, b) & 1 == 1 {
                fk_pairs.push((a, b));
            }
        }
    }
    Ok(FMaxResult {
        value,
        witness: (g, comp),
        classes_examined: total.classes,
        fk_pairs,
    })
}

fn profile_index(n: usize, a: u32, b: u32) -> u32 {
    debug_assert!(a >= 1 && b >= 1 && a as usize <= n && b as usize <= n);
    (a - 1) * n as u32 + (b - 1)
}

fn scan_pair(g: &Graph, n: usize, scan: &mut PairScan) {
    if g.is_edgeless() {
        return;
    }
    let comp = g.complement();
    if comp.is_edgeless() {
        return;
    }
    // enumerated representatives are canonically labeled, so their own
    // string is the canonical form; pairs are processed at the member
    // with the greater form
    let gbits = string_bits(n, g.rows());
    let cbits = canonical_form(&comp).expect("order within budget").bits();
    if gbits < cbits {
        return;
    }
    let a = max_fk_subgraph(&comp).expect("nonempty order") as u32;
    let b = max_fk_subgraph(g).expect("nonempty order") as u32;
    scan.profile |= 1u128 << profile_index(n, a, b);
    scan.profile |= 1u128 << profile_index(n, b, a);
    let full = crate::graph::low_bits(n);
    let sum = if g.covered_vertices() == full && comp.covered_vertices() == full {
        // no isolated vertex on either side: the raw containment values
        // are the strength values
        4 * n as u32 - a - b
    } else {
        let (sg, _) = crate::strength::strength_value(g).expect("nonempty");
        let (sc, _) = crate::strength::strength_value(&comp).expect("nonempty");
        sg + sc
    };
    let cand = (sum, gbits, cbits, g.clone(), comp);
    merge_best(&mut scan.best, Some(cand));
}

fn merge_best(
    into: &mut Option<(u32, u128, u128, Graph, Graph)>,
    cand: Option<(u32, u128, u128, Graph, Graph)>,
) {
    let Some(c) = cand else { return };
    match into {
        None => *into = Some(c),
        Some(cur) => {
            // maximize the sum; break ties toward the smaller canonical
            // pair so the witness is schedule-independent
            if c.0 > cur.0 || (c.0 == cur.0 && (c.1, c.2) < (cur.1, cur.2)) {
                *into = Some(c);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// f(n) through Ramsey numbers
// ---------------------------------------------------------------------------

/// Outcome of evaluating `f(n) = 4n - min{s+t : r(F_s,F_t) > n} + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FValue {
    /// the minimum is certain and attained by a pair with
    /// `max(s,t) <= n`; `pairs` lists every such minimizing pair
    Exact { value: u32, pairs: Vec<(u32, u32)> },
    /// open `r(F_s, F_t)` values (or a failed side condition) leave a gap
    Interval {
        lower: u32,
        upper: u32,
        unresolved: Vec<(u32, u32)>,
    },
}

impl FValue {
    pub fn exact_value(&self) -> Option<u32> {
        match self {
            FValue::Exact { value, .. } => Some(*value),
            FValue::Interval { .. } => None,
        }
    }
}

#[derive(PartialEq)]
enum PairStatus {
    CertainlyAbove,
    CertainlyAtMost,
    Unknown,
}

fn pair_status(s: u32, t: u32, n: u32) -> PairStatus {
    match fk_ramsey_knowledge(s, t).expect("2 <= s <= t") {
        FkKnowledge::Exact(v) => {
            if v > n {
                PairStatus::CertainlyAbove
            } else {
                PairStatus::CertainlyAtMost
            }
        }
        FkKnowledge::Range { lower, upper } => {
            if lower > n {
                PairStatus::CertainlyAbove
            } else if upper.is_some_and(|u| u <= n) {
                PairStatus::CertainlyAtMost
            } else {
                PairStatus::Unknown
            }
        }
    }
}

/// `f(n)` from Ramsey data alone. Exact where the minimizing pair sum is
/// certain from known values and proven bounds and the identity's side
/// condition `n >= max{s,t}` holds there; otherwise the sound interval,
/// with the pairs whose open status blocks exactness.
pub fn f_via_ramsey(n: u32) -> Result<FValue> {
    if n < 4 {
        return Err(Error::Domain(format!(
            "the Ramsey route to f(n) needs n >= 4, got {n}"
        )));
    }
    let mut min_possible: Option<u32> = None;
    let mut unresolved = Vec::new();
    // scan sums ascending until a certain qualifying pair satisfies the
    // side condition; (4, n) with r = 2n-1 > n guarantees termination
    for sum in 4..=(n + 4) {
        let mut side_ok_pairs = Vec::new();
        for s in 2..=sum / 2 {
            let t = sum - s;
            match pair_status(s, t, n) {
                PairStatus::CertainlyAbove => {
                    min_possible.get_or_insert(sum);
                    if t <= n {
                        side_ok_pairs.push((s, t));
                    }
                }
                PairStatus::Unknown => {
                    min_possible.get_or_insert(sum);
                    unresolved.push((s, t));
                }
                PairStatus::CertainlyAtMost => {}
            }
        }
        if !side_ok_pairs.is_empty() {
            let certain = sum;
            let possible = min_possible.expect("set on or before this sum");
            return Ok(if possible == certain {
                FValue::Exact {
                    value: 4 * n - certain + 2,
                    pairs: side_ok_pairs,
                }
            } else {
                FValue::Interval {
                    lower: 4 * n - certain + 2,
                    upper: 4 * n - possible + 2,
                    unresolved,
                }
            });
        }
    }
    unreachable!("the pair (4, n) always qualifies with the side condition")
}

// ---------------------------------------------------------------------------
// the bounds table
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, serde::Serialize)]
pub struct BoundsRow {
    pub n: u32,
    pub rho: u32,
    pub rho_prime: u32,
    pub sigma: u32,
    /// `4n - sigma_n`
    pub upper: u32,
    /// exact `f(n)` where established: enumeration at n = 3, the Ramsey
    /// identity for n in [4, 12]
    pub f_exact: Option<u32>,
    /// witness pair as graph6, attached where enumeration is cheap
    pub f_witness: Option<(String, String)>,
}

/// Order cap below which table rows also carry enumeration witnesses.
const TABLE_WITNESS_CAP: u32 = 7;

/// Fully populated rows for `n` in `[n_from, n_to]`, both within the
/// registry range `[3, 35]`.
pub fn bounds_table(n_from: u32, n_to: u32) -> Result<Vec<BoundsRow>> {
    if n_from < SIGMA_MIN || n_to > SIGMA_MAX || n_from > n_to {
        let offending = if n_to > SIGMA_MAX { n_to } else { n_from };
        return Err(Error::InsufficientRamseyData(offending));
    }
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        let sigma_n = sigma(n)?;
        let f_exact = if n == 3 {
            Some(7)
        } else if n <= 12 {
            f_via_ramsey(n)?.exact_value()
        } else {
            None
        };
        let f_witness = if n <= TABLE_WITNESS_CAP {
            let fm = f_max(n as usize)?;
            debug_assert_eq!(Some(fm.value), f_exact);
            Some((
                crate::graph6::graph6_encode(&fm.witness.0),
                crate::graph6::graph6_encode(&fm.witness.1),
            ))
        } else {
            None
        };
        rows.push(BoundsRow {
            n,
            rho: rho(n)?,
            rho_prime: rho_prime(n)?,
            sigma: sigma_n,
            upper: 4 * n - sigma_n,
            f_exact,
            f_witness,
        });
    }
    Ok(rows)
}

/// Classes the `f_max` sweep at order `n` will visit, for work estimates.
pub fn f_max_classes(n: usize) -> Option<u64> {
    CLASS_COUNTS.get(n.wrapping_sub(1)).copied()
}
