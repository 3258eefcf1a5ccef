use std::ops::ControlFlow;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(8);
    let t = Instant::now();
    let count = strengthlab::enumerate_graphs(n, |_| ControlFlow::Continue(())).unwrap();
    println!("sequential n={n}: {count} classes in {:.2?}", t.elapsed());
}
