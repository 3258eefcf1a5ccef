use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args[1].parse().unwrap();
    let s: u32 = args[2].parse().unwrap();
    let t: u32 = args[3].parse().unwrap();
    let start = Instant::now();
    let out = strengthlab::arrows_fk_with_progress(n, s, t, |c| {
        eprint!("\r{c} classes...");
    })
    .unwrap();
    eprintln!();
    println!(
        "arrows({n},{s},{t}) = {} examined={} witness={:?} in {:.2?}",
        out.arrows,
        out.classes_examined,
        out.counterexample.map(|g| strengthlab::graph6_encode(&g)),
        start.elapsed()
    );
}
