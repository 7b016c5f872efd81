//! Cyclotomic polynomials and cyclotomic factorization of order polynomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::IntPoly;
use super::ArithError;

fn cache() -> &'static Mutex<HashMap<u32, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial, obtained by dividing `x^d - 1` by every
/// `Phi_e` with `e | d`, `e < d`.
pub fn cyclotomic(d: u32) -> Arc<IntPoly> {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return Arc::clone(p);
    }
    let mut p = IntPoly::binomial(d as usize, 1);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        p = p
            .div_exact_monic(&cyclotomic(e))
            .expect("Phi_e divides x^d - 1 for e | d");
    }
    let p = Arc::new(p);
    cache().lock().unwrap().insert(d, Arc::clone(&p));
    p
}

/// A polynomial written as `x^N * prod_d Phi_d(x)^{e_d} * residual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorization {
    pub q_power: u32,
    pub factors: BTreeMap<u32, u32>,
    pub residual: IntPoly,
}

impl CycloFactorization {
    pub fn new(q_power: u32, factors: BTreeMap<u32, u32>) -> Self {
        CycloFactorization {
            q_power,
            factors: factors.into_iter().filter(|&(_, e)| e > 0).collect(),
            residual: IntPoly::one(),
        }
    }

    /// Multiplicity of `Phi_d`.
    pub fn multiplicity(&self, d: u32) -> u32 {
        self.factors.get(&d).copied().unwrap_or(0)
    }

    /// Multiplies the factorizations.
    pub fn combine(&self, other: &CycloFactorization) -> CycloFactorization {
        let mut factors = self.factors.clone();
        for (&d, &e) in &other.factors {
            *factors.entry(d).or_default() += e;
        }
        CycloFactorization {
            q_power: self.q_power + other.q_power,
            factors,
            residual: &self.residual * &other.residual,
        }
    }

    /// Multiplies the factors back out into a single polynomial.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::monomial(BigInt::one(), self.q_power as usize);
        for (&d, &e) in &self.factors {
            acc = &acc * &cyclotomic(d).pow(e);
        }
        &acc * &self.residual
    }

    /// Exact value `q^N * prod Phi_d(q)^{e_d}` (times the residual).
    pub fn eval_at(&self, q: &BigInt) -> BigInt {
        let mut acc = num_traits::pow(q.clone(), self.q_power as usize);
        for (&d, &e) in &self.factors {
            acc *= num_traits::pow(cyclotomic(d).eval(q), e as usize);
        }
        if !self.residual.is_one() {
            acc *= self.residual.eval(q);
        }
        acc
    }
}

fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Writes `p` as a power of `x` times cyclotomic polynomials by greedy trial
/// division, `d` ascending, each `Phi_d` divided out as often as it goes.
pub fn factor_cyclotomic(p: &IntPoly) -> Result<CycloFactorization, ArithError> {
    if p.is_zero() {
        return Err(ArithError::NotCyclotomicProduct(p.to_string()));
    }
    let q_power = p.x_valuation();
    let mut rest = p.shift_down(q_power);
    let max_d = rest.degree().unwrap_or(0);
    let mut factors = BTreeMap::new();
    // Phi_d has degree phi(d) >= sqrt(d/2), so d never needs to exceed 2 * deg^2.
    let bound = (2 * max_d * max_d).max(2) as u32;
    let mut d = 1u32;
    while rest.degree().unwrap_or(0) > 0 && d <= bound {
        let phi_deg = euler_phi(d) as usize;
        if phi_deg <= rest.degree().unwrap_or(0) {
            let phi = cyclotomic(d);
            while let Some(q) = rest.div_exact_monic(&phi) {
                *factors.entry(d).or_insert(0u32) += 1;
                rest = q;
                if rest.degree().unwrap_or(0) < phi_deg {
                    break;
                }
            }
        }
        d += 1;
    }
    if !rest.is_one() {
        return Err(ArithError::NotCyclotomicProduct(p.to_string()));
    }
    Ok(CycloFactorization {
        q_power: q_power as u32,
        factors,
        residual: rest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(*cyclotomic(2), IntPoly::from_i64(&[1, 1]));
        assert_eq!(*cyclotomic(6), IntPoly::from_i64(&[1, -1, 1]));
    }

    #[test]
    fn non_cyclotomic_input_is_rejected() {
        let p = IntPoly::from_i64(&[1, 1, 1, 1, 1, 1, 2]);
        assert!(matches!(
            factor_cyclotomic(&p),
            Err(ArithError::NotCyclotomicProduct(_))
        ));
        assert!(factor_cyclotomic(&IntPoly::from_i64(&[2, 1])).is_err());
        assert!(factor_cyclotomic(&IntPoly::zero()).is_err());
    }

    #[test]
    fn phi_one_at_two_is_one() {
        let f = CycloFactorization::new(0, BTreeMap::from([(1, 1)]));
        assert_eq!(f.eval_at(&BigInt::from(2)), BigInt::one());
    }
}
