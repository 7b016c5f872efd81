//! Exhaustive invariant-flag check on `GL_n(q)`.
//!
//! `cargo run --release --example flag_scan -- 3 3`

use std::time::Instant;

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let grid: Vec<(usize, u64)> = match args.as_slice() {
        [n, q] => vec![(*n as usize, *q)],
        _ => vec![(3, 2), (3, 3), (4, 2), (3, 4)],
    };
    for (n, q) in grid {
        let t = Instant::now();
        match sp2g::flag::flag_scan(n, q) {
            Ok(s) => {
                println!("GL_{n}({q}): {} ({} eligible, {:.2?})", s.summary(), s.eligible, t.elapsed());
                for (case, count) in &s.by_case {
                    println!("    {count:>8}  {case}");
                }
                for v in s.violations.iter().take(5) {
                    println!("    violation: {v}");
                }
            }
            Err(e) => println!("GL_{n}({q}): {e}"),
        }
    }
}
