use std::sync::Arc;

use super::eigen::{eigen_data, span};
use super::field::{Elem, FiniteField};
use super::matrix::{nullspace, rref, FFMatrix};
use super::FlagError;

/// Upper bound on `|F|^{dim commutant}` for centralizer enumeration.
pub const CENTRALIZER_BUDGET: u64 = 1 << 20;

/// Nested subspaces `U ≤ U'` of `F^n`, as RREF row bases over the splitting field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub field: Arc<FiniteField>,
    pub n: usize,
    pub u: Vec<Vec<Elem>>,
    pub u_prime: Vec<Vec<Elem>>,
}

/// Which branch of the construction produced a flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagCase {
    SingleRootCyclic,
    SingleRoot,
    TwoRootsLine,
    TwoRoots,
    ManyRoots,
}

impl Flag {
    pub fn dims(&self) -> (usize, usize) {
        (self.u.len(), self.u_prime.len())
    }

    /// `dim U`, `dim U'/U`, `dim V/U'` are all at most n-2, and U ≤ U'.
    pub fn is_valid(&self) -> bool {
        let (a, b) = self.dims();
        let bound = self.n.saturating_sub(2);
        contains(&self.field, &self.u_prime, &self.u, self.n) && a <= bound && b - a <= bound && self.n - b <= bound
    }

    /// Whether `M` maps U into U and U' into U'.
    pub fn is_preserved_by(&self, m: &FFMatrix) -> Result<bool, FlagError> {
        let m = m.embed(&self.field)?;
        let stable = |w: &Vec<Vec<Elem>>| {
            let images: Vec<Vec<Elem>> = w.iter().map(|v| m.apply(v)).collect();
            contains(&self.field, w, &images, self.n)
        };
        Ok(stable(&self.u) && stable(&self.u_prime))
    }
}

/// Whether every vector lies in the span of the RREF basis `w`.
fn contains(f: &FiniteField, w: &[Vec<Elem>], vectors: &[Vec<Elem>], n: usize) -> bool {
    let mut all = w.to_vec();
    all.extend(vectors.iter().cloned());
    rref(f, all, n).len() == w.len()
}

/// Builds the flag for X following the case split on the number of distinct
/// eigenvalues over the splitting field.
pub fn invariant_flag(x: &FFMatrix) -> Result<Flag, FlagError> {
    Ok(invariant_flag_with_case(x)?.0)
}

pub fn invariant_flag_with_case(x: &FFMatrix) -> Result<(Flag, FlagCase), FlagError> {
    let n = x.n();
    if n < 3 {
        return Err(FlagError::Dimension(n));
    }
    let e = eigen_data(x)?;
    if e.max_geometric() + 1 >= n {
        return Err(FlagError::PreconditionViolated { max_eigenspace: e.max_geometric(), n });
    }
    let f = e.field.clone();
    let sp = |vs: &[Vec<Elem>]| span(&f, vs, n);
    let (u, u_prime, case) = match e.values.as_slice() {
        [one] => {
            let es = e.eigenspace(one.value);
            if es.len() == 1 {
                (sp(&es), sp(&e.kernel_sq(one.value)), FlagCase::SingleRootCyclic)
            } else {
                (sp(&es), sp(&es), FlagCase::SingleRoot)
            }
        }
        [a, b] => {
            // μ has the smaller eigenspace; ties go to the earlier value.
            let (mu, lambda) = if b.geometric < a.geometric { (b, a) } else { (a, b) };
            let e_mu = e.eigenspace(mu.value);
            if e_mu.len() == 1 {
                let mut both = e_mu.clone();
                both.extend(e.eigenspace(lambda.value));
                (sp(&e_mu), sp(&both), FlagCase::TwoRootsLine)
            } else {
                assert!(e_mu.len() <= n / 2 && n / 2 <= n - 2);
                (sp(&e_mu), sp(&e_mu), FlagCase::TwoRoots)
            }
        }
        [l1, l2, ..] => {
            let e1 = e.eigenspace(l1.value);
            let mut both = e1.clone();
            both.extend(e.eigenspace(l2.value));
            (sp(&e1), sp(&both), FlagCase::ManyRoots)
        }
        [] => unreachable!("characteristic polynomial splits"),
    };
    Ok((Flag { field: f, n, u, u_prime }, case))
}

/// Basis of the commutant `{Y : XY = YX}` over the field of X.
pub fn commutant_basis(x: &FFMatrix) -> Vec<FFMatrix> {
    let f = x.field();
    let n = x.n();
    let mut rows = vec![vec![0; n * n]; n * n];
    // Row (i,j) of XY - YX; unknown y_kl sits in column k*n + l.
    for i in 0..n {
        for j in 0..n {
            let row = &mut rows[i * n + j];
            for k in 0..n {
                row[k * n + j] = f.add(row[k * n + j], x.get(i, k));
                row[i * n + k] = f.sub(row[i * n + k], x.get(k, j));
            }
        }
    }
    nullspace(f, rows, n * n)
        .into_iter()
        .map(|v| FFMatrix::new(f.clone(), n, v).expect("valid entries"))
        .collect()
}

/// All invertible matrices commuting with X.
pub fn centralizer(x: &FFMatrix) -> Result<Vec<FFMatrix>, FlagError> {
    let basis = commutant_basis(x);
    let f = x.field();
    let q = u64::from(f.size());
    let total = u32::try_from(basis.len())
        .ok()
        .and_then(|d| q.checked_pow(d))
        .filter(|&t| t <= CENTRALIZER_BUDGET)
        .ok_or(FlagError::TooLarge { dimension: basis.len(), field_size: f.size(), budget: CENTRALIZER_BUDGET })?;
    let mut out = Vec::new();
    for idx in 0..total {
        let mut r = idx;
        let mut y = FFMatrix::zero(f.clone(), x.n());
        for b in &basis {
            let c = (r % q) as Elem;
            r /= q;
            if c != 0 {
                y = y.add(&b.scale(c));
            }
        }
        if y.is_invertible() {
            out.push(y);
        }
    }
    Ok(out)
}

/// Outcome of checking one matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlagCheck {
    /// The precondition fails, so no flag is required.
    Ineligible,
    Verified { case: FlagCase, centralizer_size: usize },
    Violation(String),
}

/// Builds the flag and checks it against the whole centralizer, and against
/// the commutant over the splitting field.
pub fn check_flag(x: &FFMatrix) -> Result<FlagCheck, FlagError> {
    let (flag, case) = match invariant_flag_with_case(x) {
        Ok(r) => r,
        Err(FlagError::PreconditionViolated { .. }) => return Ok(FlagCheck::Ineligible),
        Err(e) => return Err(e),
    };
    if !flag.is_valid() {
        return Ok(FlagCheck::Violation(format!("{x}: bad dimensions {:?}", flag.dims())));
    }
    let cent = centralizer(x)?;
    for y in &cent {
        if !flag.is_preserved_by(y)? {
            return Ok(FlagCheck::Violation(format!("{x}: not preserved by {y}")));
        }
    }
    for b in commutant_basis(x) {
        if !flag.is_preserved_by(&b)? {
            return Ok(FlagCheck::Violation(format!("{x}: not preserved by commutant element {b}")));
        }
    }
    Ok(FlagCheck::Verified { case, centralizer_size: cent.len() })
}

