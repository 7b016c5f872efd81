//! Exact integer arithmetic: integer polynomials, cyclotomic factorization and
//! factorials. Nothing in here ever rounds.

mod cyclotomic;
pub mod nt;
mod poly;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

pub use cyclotomic::{cyclotomic, factor_cyclotomic, CycloFactorization};
pub use poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("not a product of x^N and cyclotomic polynomials: {0}")]
    NotCyclotomicProduct(String),
}

/// `n!`, by balanced product splitting.
pub fn factorial(n: u64) -> BigUint {
    fn range_product(lo: u64, hi: u64) -> BigUint {
        // product of lo..=hi
        if lo > hi {
            return BigUint::one();
        }
        if hi - lo < 16 {
            return (lo..=hi).fold(BigUint::one(), |acc, k| acc * k);
        }
        let mid = lo + (hi - lo) / 2;
        range_product(lo, mid) * range_product(mid + 1, hi)
    }
    range_product(2, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(1), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(20), BigUint::from(2432902008176640000u64));
    }

    #[test]
    fn factorial_matches_naive_product() {
        let naive = (1..=100u64).fold(BigUint::one(), |acc, k| acc * k);
        assert_eq!(factorial(100), naive);
    }
}
