use num_bigint::BigInt;

use super::rules::{Exclusion, Fact, FactorExclusion, FactorRule, Rel, RuleId, Verdict};
use super::FilterError;
use crate::catalog::{is_simple, sp_order, Catalog, GroupId, LieFamily, LieGroup};
use crate::degrees::{mcg_min_index, min_perm_degree, natural_proj_dim};
use crate::enumerate::g_of;
use crate::rank::sporadic_rank_excluded;

fn excluded(rule: RuleId, facts: Vec<Fact>) -> Verdict {
    Verdict::Excluded(Exclusion {
        rule,
        facts,
        factors: Vec::new(),
    })
}

/// The `g = 3` exception for `G_2` and `2G_2` in the rank criterion.
pub(crate) fn rank_rule_applies(family: LieFamily, rank: u32, g: u32) -> bool {
    rank < g && !(g == 3 && matches!(family, LieFamily::G2 | LieFamily::ReeG2))
}

pub(crate) fn classical_proj_dim(family: LieFamily, rank: u32) -> u32 {
    use LieFamily::*;
    match family {
        A | TwistedA => rank + 1,
        B => 2 * rank + 1,
        _ => 2 * rank,
    }
}

pub fn classify(k: &GroupId, g: u32) -> Result<Verdict, FilterError> {
    classify_with(Catalog::embedded(), k, g)
}

/// Verdict for `k` at genus `g`. An exclusion whose witness fails is
/// returned as [`Verdict::Unresolved`].
pub fn classify_with(catalog: &Catalog, k: &GroupId, g: u32) -> Result<Verdict, FilterError> {
    if g < 3 {
        return Err(FilterError::GenusTooSmall(g));
    }
    if !is_simple(k) {
        return Err(FilterError::NotSimple(k.to_string()));
    }
    let order = catalog.order(k)?;
    let bound = sp_order(g);
    if order > bound {
        return Err(FilterError::OutOfScope {
            group: k.to_string(),
            order: order.to_string(),
            bound: bound.to_string(),
        });
    }
    let idx = mcg_min_index(g).expect("g >= 3");
    let verdict = match k {
        GroupId::Cyclic(_) => return Err(FilterError::NotSimple(k.to_string())),
        GroupId::Alternating(n) => {
            if BigInt::from(*n) < idx {
                excluded(
                    RuleId::AltPermDegree,
                    vec![Fact::new("degree < least subgroup index", *n, Rel::Lt, idx)],
                )
            } else {
                excluded(
                    RuleId::AltOrderChain,
                    vec![Fact::new("|Alt_n| > |Sp_2g(2)|", order, Rel::Gt, bound)],
                )
            }
        }
        GroupId::Tits => excluded(
            RuleId::ExcDthree,
            vec![Fact::new("rank of Levi/centralizer factors < g", 2, Rel::Lt, g)],
        ),
        GroupId::Lie(l) if l.family().is_classical() => classify_classical(k, l, g, order, bound)?,
        GroupId::Lie(l) => classify_exceptional(l, g, order, bound),
        GroupId::Sporadic(s) => {
            let rec = catalog.record(*s);
            let gk = g_of(&order);
            if sporadic_rank_excluded(rec) {
                excluded(
                    RuleId::SporadicRank,
                    vec![Fact::new("g(K) <= g", gk, Rel::Le, g)],
                )
            } else {
                sporadic_centralizer(catalog, rec, gk, &order)?
            }
        }
    };
    let verdict = verdict.checked();
    if let Verdict::Survivor { facts } = &verdict {
        if let Some(f) = facts.iter().find(|f| !f.holds()) {
            return Err(FilterError::WitnessFailed {
                group: k.to_string(),
                fact: f.to_string(),
            });
        }
    }
    Ok(verdict)
}

fn classify_classical(
    k: &GroupId,
    l: &LieGroup,
    g: u32,
    order: BigInt,
    bound: BigInt,
) -> Result<Verdict, FilterError> {
    let dim = natural_proj_dim(k).expect("classical");
    if dim < 2 * g {
        return Ok(excluded(
            RuleId::ClassicalProjdim,
            vec![Fact::new("natural projective dimension < 2g", dim, Rel::Lt, 2 * g)],
        ));
    }
    let idx = mcg_min_index(g).expect("g >= 3");
    let at_genus = l.q() == 2 && l.rank() == g;
    Ok(match l.family() {
        LieFamily::TwistedD if at_genus => excluded(
            RuleId::ClassicalPermdegree,
            vec![Fact::new(
                "permutation degree < least subgroup index",
                min_perm_degree(k, g).expect("2D_g(2)"),
                Rel::Lt,
                idx,
            )],
        ),
        LieFamily::D if at_genus => excluded(
            RuleId::ClassicalUniqueness,
            vec![
                Fact::new(
                    "permutation degree = least subgroup index",
                    min_perm_degree(k, g).expect("D_g(2)"),
                    Rel::Eq,
                    idx,
                ),
                Fact::new("|D_g(2)| != |Sp_2g(2)|", order, Rel::Ne, bound),
            ],
        ),
        LieFamily::C if at_genus => Verdict::Survivor {
            facts: vec![
                Fact::new("|K| = |Sp_2g(2)|", order, Rel::Eq, bound),
                Fact::new("natural projective dimension = 2g", dim, Rel::Eq, 2 * g),
            ],
        },
        _ => return Err(FilterError::Unclassified(k.to_string())),
    })
}

fn classify_exceptional(l: &LieGroup, g: u32, order: BigInt, bound: BigInt) -> Verdict {
    let fam = l.family();
    if matches!(fam, LieFamily::TrialityD4 | LieFamily::ReeF4) {
        excluded(
            RuleId::ExcDthree,
            vec![Fact::new("rank of Levi/centralizer factors < g", 2, Rel::Lt, g)],
        )
    } else if rank_rule_applies(fam, l.rank(), g) {
        excluded(
            RuleId::ExcRank,
            vec![Fact::new("rank < g", l.rank(), Rel::Lt, g)],
        )
    } else {
        // In range only if an order inequality is false; the verdict is then unresolved.
        excluded(
            RuleId::ExcOrderIneq,
            vec![Fact::new("|K| > |Sp_2g(2)|", order, Rel::Gt, bound)],
        )
    }
}

fn sporadic_centralizer(
    catalog: &Catalog,
    rec: &crate::catalog::SporadicRecord,
    gk: u32,
    order: &BigInt,
) -> Result<Verdict, FilterError> {
    let recorded = rec.g_k.expect("listed");
    let h = recorded - 1;
    let facts = vec![
        Fact::new("g(K) recomputed = g(K) listed", gk, Rel::Eq, recorded),
        Fact::new("genus g(K)-1 >= 3", h, Rel::Ge, 3),
    ];
    let idx = mcg_min_index(h).map_err(|_| FilterError::GenusTooSmall(h))?;
    let sp_h = sp_order(h);
    let mut factors = Vec::new();
    for f in rec.centralizer_factors.as_deref().unwrap_or(&[]) {
        let ex = match f {
            GroupId::Alternating(n) => FactorExclusion {
                factor: *f,
                rule: FactorRule::AlternatingIndex,
                facts: vec![Fact::new("degree < least subgroup index at g(K)-1", *n, Rel::Lt, idx.clone())],
            },
            GroupId::Lie(l) if rank_rule_applies(l.family(), l.rank(), h) => FactorExclusion {
                factor: *f,
                rule: FactorRule::LieRank,
                facts: vec![Fact::new("rank < g(K)-1", l.rank(), Rel::Lt, h)],
            },
            GroupId::Lie(l) if l.family().is_classical() => FactorExclusion {
                factor: *f,
                rule: FactorRule::LieProjdim,
                facts: vec![Fact::new(
                    "natural projective dimension < 2(g(K)-1)",
                    classical_proj_dim(l.family(), l.rank()),
                    Rel::Lt,
                    2 * h,
                )],
            },
            GroupId::Sporadic(_) => {
                let fo = catalog.order(f)?;
                FactorExclusion {
                    factor: *f,
                    rule: FactorRule::SmallerSporadic,
                    facts: vec![
                        Fact::new("|factor| < |Sp_2(g(K)-1)(2)|", fo.clone(), Rel::Lt, sp_h.clone()),
                        Fact::new("|factor| < |K|", fo, Rel::Lt, order.clone()),
                    ],
                }
            }
            _ => return Err(FilterError::Unclassified(format!("centralizer factor {f}"))),
        };
        factors.push(ex);
    }
    Ok(Verdict::Excluded(Exclusion {
        rule: RuleId::SporadicCentralizer,
        facts,
        factors,
    }))
}
