//! p-rank bounds for groups of Lie type via cyclotomic multiplicities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::arith::nt;
use crate::catalog::{
    universal_factorization, universal_shape, GroupId, LieFamily, LieGroup, SporadicRecord, Version,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RankError {
    #[error("{p} is not an odd prime coprime to q = {q}")]
    InvalidPrime { p: u64, q: u64 },
    #[error("{p} divides {q}")]
    NotCoprime { q: String, p: u64 },
    #[error("{0} is not a group of Lie type")]
    NotLie(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PRankBound {
    pub group: GroupId,
    pub p: u64,
    pub m0: u32,
    pub bound: u32,
}

/// Least `m >= 1` with `q^m ≡ 1 (mod p)`.
pub fn multiplicative_order(q: &BigInt, p: u64) -> Result<u32, RankError> {
    let pb = BigInt::from(p);
    let r = q.mod_floor(&pb);
    if r.is_zero() {
        return Err(RankError::NotCoprime {
            q: q.to_string(),
            p,
        });
    }
    let r = r.to_u64().unwrap();
    let mut acc = r;
    let mut m = 1;
    while acc != 1 % p {
        acc = ((u128::from(acc) * u128::from(r)) % u128::from(p)) as u64;
        m += 1;
    }
    Ok(m)
}

/// Upper bound on the p-rank: the multiplicity of `Φ_{m0}` in the universal
/// order. Suzuki and Ree groups are read in `s = √q`, where the relevant
/// cyclotomic index doubles.
pub fn p_rank_upper_bound(g: &LieGroup, p: u64) -> Result<PRankBound, RankError> {
    let q = g.q();
    if p == 2 || !nt::is_prime(p) || q.is_multiple_of(p) {
        return Err(RankError::InvalidPrime { p, q });
    }
    let m0 = multiplicative_order(&BigInt::from(q), p)?;
    let bound = if g.family().is_suzuki_ree() {
        root_shape_multiplicity(g, 2 * m0)
    } else {
        universal_factorization(g.family(), g.rank()).multiplicity(m0)
    };
    Ok(PRankBound {
        group: GroupId::Lie(*g),
        p,
        m0,
        bound,
    })
}

fn root_shape_multiplicity(g: &LieGroup, d: u32) -> u32 {
    let shape = universal_shape(g.family(), g.rank()).in_root(2);
    crate::arith::factor_cyclotomic(&shape.polynomial())
        .expect("cyclotomic product")
        .multiplicity(d)
}

/// Sporadic groups outside the centralizer table are excluded by the rank
/// criterion alone.
pub fn sporadic_rank_excluded(k: &SporadicRecord) -> bool {
    k.g_k.is_none()
}

pub const GRID_FIELDS: [u64; 6] = [2, 3, 4, 5, 8, 9];
pub const GRID_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];
pub const GRID_MAX_RANK: u32 = 8;

/// Result of [`rank_grid`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RankGrid {
    /// Order shapes checked for repeated cyclotomic factors.
    pub shapes: usize,
    /// (group, prime) pairs bounded.
    pub cases: usize,
    pub violations: Vec<String>,
}

/// Checks, for every family and rank up to [`GRID_MAX_RANK`], that no single
/// `q^n - ω` factor of the order shape repeats a cyclotomic factor, and that
/// the p-rank bound never exceeds the rank over the field and prime grid.
pub fn rank_grid() -> RankGrid {
    let mut grid = RankGrid::default();
    for fam in LieFamily::ALL {
        let ranks = match fam.fixed_rank() {
            Some(r) => r..=r,
            None => fam.min_rank()..=GRID_MAX_RANK,
        };
        for rank in ranks {
            let shape = universal_shape(fam, rank);
            let mut shapes = vec![shape.clone()];
            if fam.is_suzuki_ree() {
                shapes.push(shape.in_root(2));
            }
            for s in &shapes {
                grid.shapes += 1;
                for f in &s.factors {
                    let fac = crate::arith::factor_cyclotomic(&f.polynomial()).expect("cyclotomic product");
                    if fac.factors.values().any(|&e| e > 1) {
                        grid.violations.push(format!("{} rank {rank}: repeated factor in {f:?}", fam.symbol()));
                    }
                }
            }
            for q in GRID_FIELDS {
                let Ok(g) = LieGroup::new(fam, rank, q, Version::Universal) else {
                    continue;
                };
                for p in GRID_PRIMES.into_iter().filter(|p| q % p != 0) {
                    let b = p_rank_upper_bound(&g, p).expect("valid prime");
                    grid.cases += 1;
                    if b.bound > rank {
                        grid.violations.push(format!("{g}, p = {p}: bound {} > rank {rank}", b.bound));
                    }
                }
            }
        }
    }
    grid
}
