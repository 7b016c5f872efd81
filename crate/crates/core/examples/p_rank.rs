//! p-rank upper bounds for one group, then the full grid check.
//!
//!     cargo run --example p_rank -- "E8(2)"

use sp2g::catalog::GroupId;
use sp2g::rank::{p_rank_upper_bound, rank_grid, GRID_PRIMES};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "C_5(3)".into());
    let g: GroupId = name.parse().expect("group name");
    let lie = g.as_lie().expect("a group of Lie type");
    for p in [3, 5, 7, 11, 13, 17, 19, 31] {
        match p_rank_upper_bound(lie, p) {
            Ok(b) => println!("{g}  p = {p:>2}  m0 = {:>2}  rank <= {}", b.m0, b.bound),
            Err(e) => println!("{g}  p = {p:>2}  {e}"),
        }
    }
    let grid = rank_grid();
    println!(
        "grid over primes {GRID_PRIMES:?}: {} shapes, {} cases, {} violations",
        grid.shapes,
        grid.cases,
        grid.violations.len()
    );
}
