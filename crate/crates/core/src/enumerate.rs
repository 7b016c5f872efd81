//! Simple groups of order at most a bound.
//!
//! Groups of Lie type are first grouped into strata, one per (family, rank),
//! each covering every admissible field size up to a computed bound. A stratum
//! can be expanded into its individual groups when its field-size bound is
//! small enough.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::arith::factorial;
use crate::catalog::{
    canonicalize, is_simple, max_center_divisor, order, sp_order, universal_order, Catalog,
    GroupId, LieFamily, Sporadic,
};

/// Largest field size an explicit expansion will sieve up to.
pub const EXPANSION_Q_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("bound must be at least 60")]
    BoundTooSmall,
    #[error("{stratum} needs field sizes up to {q_bound}; explicit expansion stops at {limit}")]
    TooLarge {
        stratum: String,
        q_bound: String,
        limit: u64,
    },
}

/// Admissible field sizes of a stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QDomain {
    PrimePowers,
    /// Odd prime powers: `B_n(2^m)` is folded into `C_n(2^m)`.
    OddPrimePowers,
    /// `p^(2m+1)`.
    OddPowersOf(u64),
}

impl QDomain {
    pub fn of(family: LieFamily) -> QDomain {
        match family {
            LieFamily::SuzukiB2 | LieFamily::ReeF4 => QDomain::OddPowersOf(2),
            LieFamily::ReeG2 => QDomain::OddPowersOf(3),
            LieFamily::B => QDomain::OddPrimePowers,
            _ => QDomain::PrimePowers,
        }
    }

    pub fn smallest(self) -> u64 {
        match self {
            QDomain::PrimePowers => 2,
            QDomain::OddPrimePowers => 3,
            QDomain::OddPowersOf(p) => p,
        }
    }

    pub fn contains(self, q: u64) -> bool {
        let Some((p, k)) = crate::arith::nt::prime_power(q) else {
            return false;
        };
        match self {
            QDomain::PrimePowers => true,
            QDomain::OddPrimePowers => p != 2,
            QDomain::OddPowersOf(r) => p == r && k % 2 == 1,
        }
    }
}

/// All groups `family_rank(q)` with q in `domain` and adjoint order at most the bound.
/// `q_bound` is an upper bound on such q (universal order over the largest
/// possible center is monotone in q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub family: LieFamily,
    pub rank: u32,
    pub domain: QDomain,
    pub q_bound: BigInt,
    pub bound: BigInt,
}

impl Stratum {
    pub fn label(&self) -> String {
        let sym = self.family.symbol();
        let dom = match self.domain {
            QDomain::PrimePowers => "q".to_string(),
            QDomain::OddPrimePowers => "q odd".to_string(),
            QDomain::OddPowersOf(p) => format!("q = {p}^(2m+1)"),
        };
        format!("{sym}_{}(q), {dom}, q <= {}", self.rank, self.q_bound)
    }

    pub fn is_expandable(&self) -> bool {
        self.q_bound <= BigInt::from(EXPANSION_Q_LIMIT)
    }

    /// Simple, canonical members, in increasing q.
    pub fn members(&self, prime_powers: &PrimePowers) -> Result<Vec<(GroupId, BigInt)>, EnumError> {
        let q_bound = self
            .q_bound
            .to_u64()
            .filter(|&q| q <= EXPANSION_Q_LIMIT)
            .ok_or_else(|| self.too_large())?;
        assert!(
            prime_powers.limit >= q_bound,
            "prime-power table does not reach {q_bound}"
        );
        Ok(prime_powers
            .list
            .iter()
            .take_while(|&&q| q <= q_bound)
            .filter(|&&q| self.domain.contains(q))
            .filter_map(|&q| {
                let g = GroupId::lie(self.family, self.rank, q).ok()?;
                if !is_simple(&g) || canonicalize(g) != g {
                    return None;
                }
                let o = order(&g).ok()?;
                (o <= self.bound).then_some((g, o))
            })
            .collect())
    }

    /// Points of the stratum that are not simple or are listed under another name.
    pub fn special_points(&self) -> Vec<(GroupId, GroupId)> {
        (2..=9u64)
            .filter(|&q| self.domain.contains(q) && BigInt::from(q) <= self.q_bound)
            .filter_map(|q| GroupId::lie(self.family, self.rank, q).ok())
            .filter(|g| order(g).is_ok_and(|o| o <= self.bound))
            .filter(|g| !is_simple(g) || canonicalize(*g) != *g)
            .map(|g| (g, canonicalize(g)))
            .collect()
    }

    fn too_large(&self) -> EnumError {
        EnumError::TooLarge {
            stratum: self.label(),
            q_bound: self.q_bound.to_string(),
            limit: EXPANSION_Q_LIMIT,
        }
    }
}

/// Lowest rank at which a series gets its own stratum. `C_2` holds the
/// `B_2 = C_2` groups, and `D_3`, `2D_3` are folded into `A_3`, `2A_3`.
fn stratum_min_rank(family: LieFamily) -> u32 {
    match family {
        LieFamily::B => 3,
        LieFamily::C => 2,
        f => f.min_rank(),
    }
}

/// Largest integer q with `universal(q) <= n * dmax`.
fn q_bound(family: LieFamily, rank: u32, n: &BigInt, dmax: u64) -> BigInt {
    let cap = n * dmax;
    let fits = |q: &BigInt| -> bool {
        let qq = q.to_u64();
        match qq {
            Some(q) => universal_order(family, rank, q) <= cap,
            None => crate::catalog::universal_shape(family, rank).eval(q) <= cap,
        }
    };
    let mut lo = BigInt::from(1);
    let mut hi = BigInt::from(2);
    while fits(&hi) {
        lo = hi.clone();
        hi *= 2;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Strata of groups of Lie type whose order may not exceed `n`.
pub fn lie_strata(n: &BigInt) -> Vec<Stratum> {
    let mut out = Vec::new();
    for family in LieFamily::ALL {
        let domain = QDomain::of(family);
        let q0 = domain.smallest();
        let ranks: Box<dyn Iterator<Item = u32>> = match family.fixed_rank() {
            Some(r) => Box::new(std::iter::once(r)),
            None => Box::new(stratum_min_rank(family)..),
        };
        let mut prev_lower: Option<BigInt> = None;
        for rank in ranks {
            let dmax = max_center_divisor(family, rank);
            let lower = universal_order(family, rank, q0) / dmax;
            if let Some(p) = &prev_lower {
                assert!(lower > *p, "orders not increasing in rank for {family:?}");
            }
            if &lower > n {
                break;
            }
            prev_lower = Some(lower);
            let q_bound = q_bound(family, rank, n, dmax);
            out.push(Stratum {
                family,
                rank,
                domain,
                q_bound,
                bound: n.clone(),
            });
        }
    }
    out
}

/// All prime powers up to `limit`, ascending.
#[derive(Debug, Clone)]
pub struct PrimePowers {
    pub limit: u64,
    pub list: Vec<u64>,
}

impl PrimePowers {
    pub fn up_to(limit: u64) -> PrimePowers {
        PrimePowers {
            limit,
            list: prime_powers_up_to(limit),
        }
    }
}

fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    let lim = limit as usize;
    if lim < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; lim + 1];
    let mut out = Vec::new();
    for p in 2..=lim {
        if composite[p] {
            continue;
        }
        let mut m = p * p;
        while m <= lim {
            composite[m] = true;
            m += p;
        }
        let mut pk = p as u64;
        while pk <= limit {
            out.push(pk);
            match pk.checked_mul(p as u64) {
                Some(x) => pk = x,
                None => break,
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub bound: BigInt,
    pub groups: Vec<(GroupId, BigInt)>,
}

impl EnumerationResult {
    pub fn ids(&self) -> Vec<GroupId> {
        self.groups.iter().map(|(g, _)| *g).collect()
    }
}

/// Alternating groups of order at most `n`.
pub fn alternating_below(n: &BigInt) -> Vec<(GroupId, BigInt)> {
    (5u32..)
        .map(|k| (GroupId::Alternating(k), BigInt::from(factorial(u64::from(k))) / 2))
        .take_while(|(_, o)| o <= n)
        .collect()
}

pub fn sporadic_below(catalog: &Catalog, n: &BigInt) -> Vec<(GroupId, BigInt)> {
    Sporadic::ALL
        .iter()
        .map(|&s| (GroupId::Sporadic(s), catalog.sporadic_order(s).clone()))
        .filter(|(_, o)| o <= n)
        .collect()
}

pub fn sort_groups(groups: &mut [(GroupId, BigInt)]) {
    groups.sort_by(|(a, oa), (b, ob)| oa.cmp(ob).then_with(|| a.to_string().cmp(&b.to_string())));
}

/// Every non-abelian simple group of order at most `n`, up to isomorphism.
pub fn enumerate_simple_below(n: &BigInt) -> Result<EnumerationResult, EnumError> {
    if *n < BigInt::from(60) {
        return Err(EnumError::BoundTooSmall);
    }
    let strata = lie_strata(n);
    if let Some(s) = strata.iter().find(|s| !s.is_expandable()) {
        return Err(s.too_large());
    }
    let q_max = strata
        .iter()
        .map(|s| s.q_bound.to_u64().unwrap())
        .max()
        .unwrap_or(2);
    let pp = PrimePowers::up_to(q_max);
    let lie: Vec<Vec<(GroupId, BigInt)>> = strata
        .par_iter()
        .map(|s| s.members(&pp))
        .collect::<Result<_, _>>()?;

    let mut seen = BTreeSet::new();
    let mut groups = Vec::new();
    let tits = order(&GroupId::Tits).expect("Tits order");
    let explicit = alternating_below(n)
        .into_iter()
        .chain(sporadic_below(Catalog::embedded(), n))
        .chain((tits <= *n).then_some((GroupId::Tits, tits)))
        .chain(lie.into_iter().flatten());
    for (g, o) in explicit {
        let c = canonicalize(g);
        if is_simple(&c) && seen.insert(c) {
            groups.push((c, o));
        }
    }
    sort_groups(&mut groups);
    Ok(EnumerationResult {
        bound: n.clone(),
        groups,
    })
}

/// Least g with `|K| < |Sp_2g(2)|`.
pub fn g_of(order: &BigInt) -> u32 {
    (1..).find(|&g| *order < sp_order(g)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(r: &EnumerationResult) -> Vec<String> {
        r.groups.iter().map(|(g, _)| g.to_string()).collect()
    }

    #[test]
    fn small_bounds() {
        let r = enumerate_simple_below(&BigInt::from(720)).unwrap();
        assert_eq!(names(&r), ["Alt_5", "A_1(7)", "Alt_6", "A_1(8)", "A_1(11)"]);
        let r = enumerate_simple_below(&BigInt::from(60)).unwrap();
        assert_eq!(names(&r), ["Alt_5"]);
        assert!(enumerate_simple_below(&BigInt::from(59)).is_err());
    }

    #[test]
    fn order_20160_keeps_both_groups() {
        let r = enumerate_simple_below(&BigInt::from(20160)).unwrap();
        let n = names(&r);
        let tail: Vec<_> = n.iter().rev().take(2).rev().cloned().collect();
        assert_eq!(tail, ["A_2(4)", "Alt_8"]);
    }

    #[test]
    fn below_sp6() {
        let r = enumerate_simple_below(&sp_order(3)).unwrap();
        let n = names(&r);
        for s in ["M_11", "M_12", "J_1", "M_22", "J_2", "C_3(2)"] {
            assert!(n.contains(&s.to_string()), "{s}");
        }
    }

    #[test]
    fn huge_bound_refuses_expansion() {
        assert!(matches!(
            enumerate_simple_below(&sp_order(8)),
            Err(EnumError::TooLarge { .. })
        ));
        assert!(!lie_strata(&sp_order(10)).is_empty());
    }

    #[test]
    fn genus_of_order() {
        assert_eq!(g_of(&BigInt::from(60)), 2);
        assert_eq!(g_of(&BigInt::from(898128000u64)), 4);
    }

    #[test]
    fn prime_power_sieve() {
        assert_eq!(prime_powers_up_to(16), [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
    }
}
