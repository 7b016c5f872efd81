use rayon::prelude::*;

use super::field::{Elem, FiniteField};
use super::matrix::FFMatrix;
use super::FlagError;

/// Largest field accepted by [`golden_braid_scan`].
pub const GOLDEN_SCAN_MAX_FIELD: u32 = 9;

/// `PQP = QPQ`.
pub fn braid_check(p: &FFMatrix, q: &FFMatrix) -> bool {
    p.mul(q).mul(p) == q.mul(p).mul(q)
}

/// One (δ, ε) instance of the three-cycle triple product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleProduct {
    pub delta: Elem,
    pub epsilon: Elem,
    pub holds: bool,
}

/// `[[0,δ,0],[0,0,δ⁻¹],[1,0,0]]`.
pub fn three_cycle(f: &std::sync::Arc<FiniteField>, delta: Elem) -> FFMatrix {
    let inv = f.inv(delta).expect("δ must be a unit");
    FFMatrix::new(f.clone(), 3, vec![0, delta, 0, 0, 0, inv, 1, 0, 0]).expect("valid entries")
}

/// Checks `P̂Q̂P̂ = diag(δε⁻¹, 1, εδ⁻¹)` for every pair of units of GF(q).
pub fn triple_product_check(q: u64) -> Result<Vec<TripleProduct>, FlagError> {
    let f = FiniteField::of_order(q)?;
    let mut out = Vec::new();
    for delta in 1..f.size() {
        for epsilon in 1..f.size() {
            let p = three_cycle(&f, delta);
            let qm = three_cycle(&f, epsilon);
            let expect = FFMatrix::diagonal(
                f.clone(),
                &[f.div(delta, epsilon), 1, f.div(epsilon, delta)],
            );
            out.push(TripleProduct { delta, epsilon, holds: p.mul(&qm).mul(&p) == expect });
        }
    }
    Ok(out)
}

/// The order-two eigenspace swap for one ω with ω² = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapCheck {
    pub omega: Elem,
    /// `T̂P̂T̂⁻¹P̂⁻¹ = ωI` for `T̂ = diag(ω, 1)`.
    pub commutator: bool,
    pub determinant: bool,
    pub braid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapReport {
    pub q: u64,
    /// In characteristic 2 the only square root of 1 is 1, so no nontrivial
    /// swap exists and the checks below are degenerate.
    pub characteristic_two: bool,
    pub checks: Vec<SwapCheck>,
}

impl SwapReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.commutator && c.determinant && c.braid)
    }
}

/// Checks `P̂ = [[0,-ω],[1,0]] = Q̂` for every ω with ω² = 1 in GF(q).
pub fn swap_check(q: u64) -> Result<SwapReport, FlagError> {
    let f = FiniteField::of_order(q)?;
    let checks = f
        .elements()
        .filter(|&w| w != 0 && f.mul(w, w) == 1)
        .map(|w| {
            let p = FFMatrix::new(f.clone(), 2, vec![0, f.neg(w), 1, 0]).expect("valid entries");
            let t = FFMatrix::diagonal(f.clone(), &[w, 1]);
            let comm = t.mul(&p).mul(&t.inverse().unwrap()).mul(&p.inverse().unwrap());
            SwapCheck {
                omega: w,
                commutator: comm == FFMatrix::identity(f.clone(), 2).scale(w),
                determinant: p.det() == w,
                braid: braid_check(&p, &p),
            }
        })
        .collect();
    Ok(SwapReport { q, characteristic_two: f.p() == 2, checks })
}

/// Which polynomial in μ the scan tests as the exceptional condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuCondition {
    /// μ² − μ − 1 = 0.
    Golden,
    /// μ² − μ + 1 = 0, i.e. μ is a primitive sixth root of unity.
    SixthRoot,
}

impl MuCondition {
    pub fn holds(self, f: &FiniteField, mu: Elem) -> bool {
        let v = f.sub(f.mul(mu, mu), mu);
        match self {
            MuCondition::Golden => v == 1,
            MuCondition::SixthRoot => f.add(v, 1) == 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MuCondition::Golden => "mu^2 - mu - 1 = 0",
            MuCondition::SixthRoot => "mu^2 - mu + 1 = 0",
        }
    }
}

/// Shape of the matrices in a scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangularShape {
    /// `[[1,a,b],[0,1,c],[0,0,μ]]`.
    Full,
    /// `[[1,0,b],[0,1,c],[0,0,μ]]`.
    LastColumn,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidScan {
    pub q: u64,
    pub shape: TriangularShape,
    pub condition: MuCondition,
    /// Admissible μ: units other than 1.
    pub mus: Vec<Elem>,
    /// μ among `mus` satisfying the condition.
    pub condition_roots: Vec<Elem>,
    pub pairs: u64,
    pub braid_pairs: u64,
    pub unequal_braid_pairs: u64,
    /// Pairs where the braid relation disagrees with `P = Q or condition(μ)`.
    pub counterexamples: u64,
    /// Up to a few counterexamples, as `(μ, P, Q, braid holds)`.
    pub samples: Vec<(Elem, FFMatrix, FFMatrix, bool)>,
}

impl BraidScan {
    pub fn passes(&self) -> bool {
        self.counterexamples == 0
    }
}

const SAMPLE_LIMIT: usize = 3;

/// Scans every pair of unitriangular-with-corner-μ 3×3 matrices of the given
/// shape over GF(q), comparing the braid relation with `P = Q or condition(μ)`.
pub fn braid_scan(q: u64, shape: TriangularShape, condition: MuCondition) -> Result<BraidScan, FlagError> {
    let f = FiniteField::of_order(q)?;
    if f.size() > GOLDEN_SCAN_MAX_FIELD {
        return Err(FlagError::InvalidField(format!("scan supports fields of size at most {GOLDEN_SCAN_MAX_FIELD}")));
    }
    let s = u64::from(f.size());
    let free = match shape {
        TriangularShape::Full => 3,
        TriangularShape::LastColumn => 2,
    };
    let per = s.pow(free);
    let build = |mu: Elem, mut idx: u64| {
        let mut e = [0 as Elem; 3];
        for slot in e.iter_mut().skip(3 - free as usize) {
            *slot = (idx % s) as Elem;
            idx /= s;
        }
        let [a, b, c] = e;
        FFMatrix::new(f.clone(), 3, vec![1, a, b, 0, 1, c, 0, 0, mu]).expect("valid entries")
    };
    let mus: Vec<Elem> = f.elements().filter(|&m| m != 0 && m != 1).collect();
    let condition_roots = mus.iter().copied().filter(|&m| condition.holds(&f, m)).collect();

    #[derive(Default)]
    struct Acc {
        braid: u64,
        unequal: u64,
        bad: u64,
        samples: Vec<(Elem, FFMatrix, FFMatrix, bool)>,
    }
    let merge = |mut x: Acc, y: Acc| {
        x.braid += y.braid;
        x.unequal += y.unequal;
        x.bad += y.bad;
        x.samples.extend(y.samples);
        x.samples.sort_by(|a, b| (a.0, a.1.entries(), a.2.entries()).cmp(&(b.0, b.1.entries(), b.2.entries())));
        x.samples.truncate(SAMPLE_LIMIT);
        x
    };
    let acc = mus
        .par_iter()
        .flat_map(|&mu| (0..per).into_par_iter().map(move |i| (mu, i)))
        .map(|(mu, i)| {
            let p = build(mu, i);
            let cond = condition.holds(&f, mu);
            let mut acc = Acc::default();
            for j in 0..per {
                let qm = build(mu, j);
                let braid = braid_check(&p, &qm);
                let predicted = i == j || cond;
                acc.braid += u64::from(braid);
                acc.unequal += u64::from(braid && i != j);
                if braid != predicted {
                    acc.bad += 1;
                    if acc.samples.len() < SAMPLE_LIMIT {
                        acc.samples.push((mu, p.clone(), qm, braid));
                    }
                }
            }
            acc
        })
        .reduce(Acc::default, merge);
    Ok(BraidScan {
        q,
        shape,
        condition,
        pairs: mus.len() as u64 * per * per,
        mus,
        condition_roots,
        braid_pairs: acc.braid,
        unequal_braid_pairs: acc.unequal,
        counterexamples: acc.bad,
        samples: acc.samples,
    })
}

/// The literal scan: full upper-unitriangular shape, golden condition.
pub fn golden_braid_scan(q: u64) -> Result<BraidScan, FlagError> {
    braid_scan(q, TriangularShape::Full, MuCondition::Golden)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_product_over_gf7() {
        let r = triple_product_check(7).unwrap();
        assert_eq!(r.len(), 36);
        assert!(r.iter().all(|t| t.holds));
    }

    #[test]
    fn swap_over_gf5() {
        let r = swap_check(5).unwrap();
        assert_eq!(r.checks.iter().map(|c| c.omega).collect::<Vec<_>>(), [1, 4]);
        assert!(r.all_hold());
        let r2 = swap_check(4).unwrap();
        assert!(r2.characteristic_two);
        assert_eq!(r2.checks.len(), 1);
    }

    #[test]
    fn last_column_family_follows_sixth_root_condition() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let s = braid_scan(q, TriangularShape::LastColumn, MuCondition::SixthRoot).unwrap();
            assert!(s.passes(), "q = {q}: {:?}", s.samples);
        }
    }

    #[test]
    fn golden_condition_in_gf2_is_vacuous() {
        let s = golden_braid_scan(2).unwrap();
        assert_eq!(s.pairs, 0);
        assert!(s.passes());
    }
}
