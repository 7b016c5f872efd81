//! Braid relation for pairs of 3x3 unitriangular matrices with corner μ.

use sp2g::flag::{braid_scan, MuCondition, TriangularShape};

fn main() {
    for shape in [TriangularShape::Full, TriangularShape::LastColumn] {
        for cond in [MuCondition::Golden, MuCondition::SixthRoot] {
            println!("{shape:?} shape against {}", cond.label());
            for q in [2, 3, 4, 5, 7, 8, 9] {
                let s = braid_scan(q, shape, cond).expect("small field");
                println!(
                    "  GF({q}): roots {:?}, {} pairs, {} braid ({} unequal), {} counterexamples",
                    s.condition_roots, s.pairs, s.braid_pairs, s.unequal_braid_pairs, s.counterexamples
                );
                if let Some((mu, p, qm, braid)) = s.samples.first() {
                    println!("      e.g. mu = {mu}, P = {p}, Q = {qm}, braid = {braid}");
                }
            }
        }
    }
}
