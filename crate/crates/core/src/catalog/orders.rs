use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};

use super::family::LieFamily;
use crate::arith::{factor_cyclotomic, CycloFactorization, IntPoly};

/// The root of unity in a factor `q^n - ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Omega {
    One,
    MinusOne,
    /// The two primitive cube roots together: `(q^n - ζ)(q^n - ζ²) = q^{2n} + q^n + 1`.
    CubeRootPair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShapeFactor {
    pub n: u32,
    pub omega: Omega,
}

impl ShapeFactor {
    pub const fn minus(n: u32) -> Self {
        ShapeFactor { n, omega: Omega::One }
    }

    pub const fn plus(n: u32) -> Self {
        ShapeFactor {
            n,
            omega: Omega::MinusOne,
        }
    }

    pub const fn pair(n: u32) -> Self {
        ShapeFactor {
            n,
            omega: Omega::CubeRootPair,
        }
    }

    /// How many `q^{n_i} - ω_i` factors this stands for.
    pub fn weight(&self) -> u32 {
        match self.omega {
            Omega::CubeRootPair => 2,
            _ => 1,
        }
    }

    pub fn polynomial(&self) -> IntPoly {
        let n = self.n as usize;
        match self.omega {
            Omega::One => IntPoly::binomial(n, 1),
            Omega::MinusOne => IntPoly::binomial(n, -1),
            Omega::CubeRootPair => {
                let mut c = vec![BigInt::from(0); 2 * n + 1];
                c[0] = BigInt::one();
                c[n] = BigInt::one();
                c[2 * n] = BigInt::one();
                IntPoly::new(c)
            }
        }
    }

    /// Cyclotomic exponents read off directly from the divisor lattice.
    pub fn cyclotomic_exponents(&self) -> BTreeMap<u32, u32> {
        let n = self.n;
        let (top, skip) = match self.omega {
            Omega::One => (n, None),
            Omega::MinusOne => (2 * n, Some(n)),
            Omega::CubeRootPair => (3 * n, Some(n)),
        };
        (1..=top)
            .filter(|d| top % d == 0 && skip.is_none_or(|s| s % d != 0))
            .map(|d| (d, 1))
            .collect()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let qn: BigInt = Pow::pow(q, self.n);
        match self.omega {
            Omega::One => qn - 1,
            Omega::MinusOne => qn + 1,
            Omega::CubeRootPair => &qn * &qn + &qn + 1,
        }
    }
}

/// `q^N ∏ (q^{n_i} - ω_i)`: the order of the universal version as a polynomial in q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderShape {
    pub q_power: u32,
    pub factors: Vec<ShapeFactor>,
}

impl OrderShape {
    /// Number of `q^{n_i} - ω_i` factors; equals the rank.
    pub fn weight(&self) -> u32 {
        self.factors.iter().map(ShapeFactor::weight).sum()
    }

    pub fn polynomial(&self) -> IntPoly {
        let mut p = IntPoly::monomial(BigInt::one(), self.q_power as usize);
        for f in &self.factors {
            p = &p * &f.polynomial();
        }
        p
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        let mut acc: BigInt = Pow::pow(q, self.q_power);
        for f in &self.factors {
            acc *= f.eval(q);
        }
        acc
    }

    /// Substitute `q = s^k`.
    pub fn in_root(&self, k: u32) -> OrderShape {
        OrderShape {
            q_power: self.q_power * k,
            factors: self
                .factors
                .iter()
                .map(|f| ShapeFactor { n: f.n * k, ..*f })
                .collect(),
        }
    }

    /// Direct cyclotomic factorization (no polynomial division).
    pub fn cyclotomic_direct(&self) -> CycloFactorization {
        let mut factors = BTreeMap::new();
        for f in &self.factors {
            for (d, e) in f.cyclotomic_exponents() {
                *factors.entry(d).or_insert(0) += e;
            }
        }
        CycloFactorization::new(self.q_power, factors)
    }
}

pub fn universal_shape(family: LieFamily, rank: u32) -> OrderShape {
    use LieFamily::*;
    use ShapeFactor as F;
    let n = rank;
    let (q_power, factors): (u32, Vec<ShapeFactor>) = match family {
        A => (n * (n + 1) / 2, (1..=n).map(|i| F::minus(i + 1)).collect()),
        TwistedA => (
            n * (n + 1) / 2,
            (1..=n)
                .map(|i| if i % 2 == 1 { F::minus(i + 1) } else { F::plus(i + 1) })
                .collect(),
        ),
        B | C => (n * n, (1..=n).map(|i| F::minus(2 * i)).collect()),
        D | TwistedD => {
            let top = if family == D { F::minus(n) } else { F::plus(n) };
            let mut v = vec![top];
            v.extend((1..n).map(|i| F::minus(2 * i)));
            (n * (n - 1), v)
        }
        TrialityD4 => (12, vec![F::pair(4), F::minus(6), F::minus(2)]),
        G2 => (6, vec![F::minus(6), F::minus(2)]),
        ReeG2 => (3, vec![F::plus(3), F::minus(1)]),
        F4 => (24, [12, 8, 6, 2].map(F::minus).to_vec()),
        ReeF4 => (
            12,
            vec![F::plus(6), F::minus(4), F::plus(3), F::minus(1)],
        ),
        E6 => (36, [12, 9, 8, 6, 5, 2].map(F::minus).to_vec()),
        TwistedE6 => (
            36,
            vec![
                F::minus(12),
                F::plus(9),
                F::minus(8),
                F::minus(6),
                F::plus(5),
                F::minus(2),
            ],
        ),
        E7 => (63, [18, 14, 12, 10, 8, 6, 2].map(F::minus).to_vec()),
        E8 => (120, [30, 24, 20, 18, 14, 12, 8, 2].map(F::minus).to_vec()),
        SuzukiB2 => (2, vec![F::plus(2), F::minus(1)]),
    };
    OrderShape { q_power, factors }
}

/// Cyclotomic factorization of the universal order, computed by division
/// and memoized per (family, rank).
pub fn universal_factorization(family: LieFamily, rank: u32) -> Arc<CycloFactorization> {
    static CACHE: OnceLock<Mutex<HashMap<(LieFamily, u32), Arc<CycloFactorization>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&(family, rank)) {
        return f.clone();
    }
    let f = Arc::new(
        factor_cyclotomic(&universal_shape(family, rank).polynomial())
            .expect("order shapes are products of cyclotomic polynomials"),
    );
    cache.lock().unwrap().insert((family, rank), f.clone());
    f
}

pub fn universal_order(family: LieFamily, rank: u32, q: u64) -> BigInt {
    universal_shape(family, rank).eval(&BigInt::from(q))
}

/// `|universal| / |adjoint|`.
pub fn center_divisor(family: LieFamily, rank: u32, q: u64) -> u64 {
    use LieFamily::*;
    let n = u64::from(rank);
    match family {
        A => (n + 1).gcd(&(q - 1)),
        TwistedA => (n + 1).gcd(&(q + 1)),
        B | C | E7 => 2u64.gcd(&(q - 1)),
        D => {
            let r = pow_mod4(q, rank);
            4u64.gcd(&((r + 3) % 4))
        }
        TwistedD => {
            let r = pow_mod4(q, rank);
            4u64.gcd(&((r + 1) % 4))
        }
        E6 => 3u64.gcd(&(q - 1)),
        TwistedE6 => 3u64.gcd(&(q + 1)),
        _ => 1,
    }
}

/// Largest center divisor over all q for the given family and rank.
pub fn max_center_divisor(family: LieFamily, rank: u32) -> u64 {
    use LieFamily::*;
    match family {
        A | TwistedA => u64::from(rank) + 1,
        B | C | E7 => 2,
        D | TwistedD => 4,
        E6 | TwistedE6 => 3,
        _ => 1,
    }
}

fn pow_mod4(q: u64, e: u32) -> u64 {
    crate::arith::nt::pow_mod(q % 4, u64::from(e), 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(family: LieFamily, rank: u32, q: u64) -> BigInt {
        universal_order(family, rank, q) / center_divisor(family, rank, q)
    }

    #[test]
    fn shapes_have_rank_many_factors() {
        for fam in LieFamily::ALL {
            let ranks: Vec<u32> = match fam.fixed_rank() {
                Some(r) => vec![r],
                None => (fam.min_alias_rank()..=9).collect(),
            };
            for r in ranks {
                assert_eq!(universal_shape(fam, r).weight(), r, "{fam:?} rank {r}");
            }
        }
    }

    #[test]
    fn division_and_direct_factorizations_agree() {
        for fam in LieFamily::ALL {
            let ranks: Vec<u32> = match fam.fixed_rank() {
                Some(r) => vec![r],
                None => (fam.min_alias_rank()..=8).collect(),
            };
            for r in ranks {
                let shape = universal_shape(fam, r);
                assert_eq!(*universal_factorization(fam, r), shape.cyclotomic_direct());
            }
        }
    }

    #[test]
    fn known_orders() {
        use LieFamily::*;
        assert_eq!(adj(A, 2, 4), BigInt::from(20160));
        assert_eq!(adj(TwistedA, 3, 2), BigInt::from(25920));
        assert_eq!(adj(C, 2, 3), BigInt::from(25920));
        assert_eq!(adj(TrialityD4, 4, 2), BigInt::from(211341312u64));
        assert_eq!(adj(ReeF4, 4, 2), BigInt::from(35942400u64));
        assert_eq!(adj(G2, 2, 3), BigInt::from(4245696u64));
        assert_eq!(adj(ReeG2, 2, 27), BigInt::from(10073444472u64));
        assert_eq!(adj(SuzukiB2, 2, 2), BigInt::from(20));
        assert_eq!(adj(SuzukiB2, 2, 8), BigInt::from(29120));
        let a1: Vec<BigInt> = [4, 5, 7, 8, 9, 11, 13].iter().map(|&q| adj(A, 1, q)).collect();
        let want: Vec<BigInt> = [60, 60, 168, 504, 360, 660, 1092].map(BigInt::from).to_vec();
        assert_eq!(a1, want);
    }

    #[test]
    fn center_divisors() {
        use LieFamily::*;
        assert_eq!(center_divisor(A, 1, 4), 1);
        assert_eq!(center_divisor(A, 2, 4), 3);
        assert_eq!(center_divisor(C, 5, 2), 1);
        assert_eq!(center_divisor(D, 4, 3), 4);
        assert_eq!(center_divisor(D, 5, 3), 2);
        assert_eq!(center_divisor(TwistedD, 5, 3), 4);
        assert_eq!(center_divisor(TwistedE6, 6, 2), 3);
        for fam in LieFamily::ALL {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 11] {
                let r = fam.fixed_rank().unwrap_or(5);
                assert!(center_divisor(fam, r, q) <= max_center_divisor(fam, r));
            }
        }
    }
}
