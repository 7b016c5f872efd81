//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use sp2g::catalog::{order, Catalog, GroupId, LieFamily, Sporadic};

/// Trial division.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut r = q;
            while r.is_multiple_of(p) {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

/// Names of the adjoint groups that are not simple, as displayed.
const NOT_SIMPLE: [&str; 8] = ["A_1(2)", "A_1(3)", "2A_2(2)", "C_2(2)", "G_2(2)", "2B_2(2)", "2G_2(3)", "2F_4(2)"];

/// Rewrites one name by a table of isomorphisms, to a fixed point.
fn normalize(name: String) -> String {
    let mut name = name;
    loop {
        let next = match name.as_str() {
            "A_1(4)" | "A_1(5)" => "Alt_5".to_string(),
            "A_1(9)" => "Alt_6".to_string(),
            "A_2(2)" => "A_1(7)".to_string(),
            "A_3(2)" => "Alt_8".to_string(),
            "2A_3(2)" => "C_2(3)".to_string(),
            s => {
                if let Some(rest) = s.strip_prefix("2D_3(") {
                    format!("2A_3({rest}")
                } else if let Some(rest) = s.strip_prefix("D_3(") {
                    format!("A_3({rest}")
                } else if let Some(rest) = s.strip_prefix("B_") {
                    let (rank, q) = rest.split_once('(').unwrap();
                    let q: u64 = q.trim_end_matches(')').parse().unwrap();
                    if rank == "2" || q.is_multiple_of(2) {
                        format!("C_{rank}({q})")
                    } else {
                        s.to_string()
                    }
                } else {
                    s.to_string()
                }
            }
        };
        if next == name {
            return name;
        }
        name = next;
    }
}

/// Every simple group of order at most `n`, by brute force over all
/// parameters up to a generous cap, as sorted `(name, order)` pairs.
pub fn naive_simple_below(n: &BigInt) -> Vec<(String, BigInt)> {
    const Q_CAP: u64 = 5000;
    const RANK_CAP: u32 = 12;
    let mut found: Vec<(String, BigInt)> = Vec::new();
    let mut m = 5;
    loop {
        let a = GroupId::alternating(m).unwrap();
        let o = order(&a).unwrap();
        if o > *n {
            break;
        }
        found.push((a.to_string(), o));
        m += 1;
    }
    for s in Sporadic::ALL {
        let o = Catalog::embedded().sporadic_order(s).clone();
        if o <= *n {
            found.push((GroupId::Sporadic(s).to_string(), o));
        }
    }
    let tits = order(&GroupId::Tits).unwrap();
    if tits <= *n {
        found.push(("Tits".to_string(), tits));
    }
    for fam in LieFamily::ALL {
        for rank in 1..=RANK_CAP {
            for q in (2..=Q_CAP).filter(|&q| is_prime_power(q)) {
                let Ok(g) = GroupId::lie(fam, rank, q) else {
                    continue;
                };
                // Adjoint orders are not monotone in q; universal ones are,
                // and no center up to rank 12 has more than 13 elements.
                let univ = GroupId::lie_universal(fam, rank, q).unwrap();
                if order(&univ).unwrap() > n * 16 {
                    break;
                }
                let o = order(&g).unwrap();
                if o > *n {
                    continue;
                }
                let name = normalize(g.to_string());
                if !NOT_SIMPLE.contains(&name.as_str()) {
                    found.push((name, o));
                }
            }
        }
    }
    found.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    found.dedup();
    found
}

/// `n!` by repeated multiplication.
pub fn slow_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut chunk: u128 = 1;
    for i in 1..=n {
        let next = chunk * u128::from(i);
        if next > u128::from(u64::MAX) {
            acc *= chunk;
            chunk = u128::from(i);
        } else {
            chunk = next;
        }
    }
    acc * chunk
}
