use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use sp2g::arith::{cyclotomic, factor_cyclotomic, CycloFactorization, IntPoly};

/// Schoolbook division on i128 coefficient vectors (lowest first), exact or None.
fn naive_div(num: &[i128], den: &[i128]) -> Option<Vec<i128>> {
    let mut r = num.to_vec();
    let dl = den.len();
    assert_eq!(*den.last().unwrap(), 1);
    if r.len() < dl {
        return None;
    }
    let mut q = vec![0i128; r.len() - dl + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + dl - 1];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            r[i + j] -= c * d;
        }
    }
    r.iter().all(|&x| x == 0).then_some(q)
}

fn to_i128(p: &IntPoly) -> Vec<i128> {
    p.coeffs().iter().map(|c| i128::try_from(c).unwrap()).collect()
}

/// `Phi_n` by dividing `x^n - 1` by every `Phi_d`, `d | n`, `d < n`.
fn naive_cyclotomic(n: usize, memo: &mut BTreeMap<usize, Vec<i128>>) -> Vec<i128> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i128; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi = naive_cyclotomic(d, memo);
            p = naive_div(&p, &phi).expect("exact");
        }
    }
    memo.insert(n, p.clone());
    p
}

fn totient(n: u32) -> u32 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u32
}

#[test]
fn phi_12_matches_naive_division() {
    let mut memo = BTreeMap::new();
    assert_eq!(naive_cyclotomic(12, &mut memo), vec![1, 0, -1, 0, 1]);
    assert_eq!(to_i128(&cyclotomic(12)), vec![1, 0, -1, 0, 1]);
}

#[test]
fn cyclotomics_match_naive_division() {
    let mut memo = BTreeMap::new();
    for n in 1..=60 {
        assert_eq!(to_i128(&cyclotomic(n as u32)), naive_cyclotomic(n, &mut memo), "Phi_{n}");
    }
}

#[test]
fn worked_factorizations() {
    let f = factor_cyclotomic(&IntPoly::from_i64(&[-1, 0, 1])).unwrap();
    assert_eq!(f.factors, BTreeMap::from([(1, 1), (2, 1)]));
    let f = factor_cyclotomic(&IntPoly::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1])).unwrap();
    assert_eq!(f.factors, BTreeMap::from([(3, 1), (6, 1), (12, 1)]));
    // x^3 (x^2 - 1)(x^3 - 1)
    let p = &(&IntPoly::monomial(BigInt::from(1), 3) * &IntPoly::binomial(2, 1)) * &IntPoly::binomial(3, 1);
    let f = factor_cyclotomic(&p).unwrap();
    assert_eq!(f.q_power, 3);
    assert_eq!(f.factors, BTreeMap::from([(1, 2), (2, 1), (3, 1)]));
    // and the oracle agrees on the cofactor
    let mut memo = BTreeMap::new();
    let mut rest = to_i128(&p)[3..].to_vec();
    for d in [1, 1, 2, 3] {
        rest = naive_div(&rest, &naive_cyclotomic(d, &mut memo)).unwrap();
    }
    assert_eq!(rest, vec![1]);
    assert_eq!(
        CycloFactorization::new(0, BTreeMap::from([(1, 1)])).eval_at(&BigInt::from(2)),
        BigInt::from(1)
    );
}

#[test]
fn non_products_are_rejected() {
    assert!(factor_cyclotomic(&IntPoly::from_i64(&[1, 1, 2])).is_err());
    assert!(factor_cyclotomic(&IntPoly::from_i64(&[-2, 1])).is_err());
}

fn shape_factor() -> impl Strategy<Value = (usize, i64)> {
    (1usize..=12, prop_oneof![Just(1i64), Just(-1i64)])
}

proptest! {
    #[test]
    fn phi_degree_is_totient(d in 1u32..=200) {
        prop_assert_eq!(cyclotomic(d).degree(), Some(totient(d) as usize));
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_1(n in 1u32..=60) {
        let mut p = IntPoly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            p = &p * &cyclotomic(d);
        }
        prop_assert_eq!(p, IntPoly::binomial(n as usize, 1));
    }

    #[test]
    fn factorization_round_trips(
        q_power in 0usize..6,
        factors in prop::collection::vec(shape_factor(), 0..5),
        q in 2i64..50,
    ) {
        let mut p = IntPoly::monomial(BigInt::from(1), q_power);
        for &(n, c) in &factors {
            p = &p * &IntPoly::binomial(n, c);
        }
        let f = factor_cyclotomic(&p).unwrap();
        prop_assert!(f.residual.is_one());
        prop_assert_eq!(f.expand(), p.clone());
        let q = BigInt::from(q);
        prop_assert_eq!(f.eval_at(&q), p.eval(&q));
    }

    #[test]
    fn eval_at_matches_naive_product(
        q_power in 0u32..8,
        exps in prop::collection::btree_map(1u32..30, 1u32..4, 0..5),
        q in 2i64..1000,
    ) {
        let f = CycloFactorization::new(q_power, exps.clone());
        let qb = BigInt::from(q);
        let mut naive = num_traits::Pow::pow(&qb, q_power);
        for (&d, &e) in &exps {
            let v = cyclotomic(d).coeffs().iter().rev().fold(BigInt::from(0), |acc, c| acc * &qb + c);
            for _ in 0..e {
                naive *= &v;
            }
        }
        prop_assert_eq!(f.eval_at(&qb), naive);
    }
}
