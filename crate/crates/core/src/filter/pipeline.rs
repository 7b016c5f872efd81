use num_bigint::BigInt;
use rayon::prelude::*;

use super::chain::verify_alt_chain;
use super::classify::{classical_proj_dim, classify_with, rank_rule_applies};
use super::rules::{Exclusion, Fact, Rel, RuleId, Verdict};
use super::FilterError;
use crate::catalog::{is_simple, order, sp_order, Catalog, GroupId, LieFamily};
use crate::degrees::mcg_min_index;
use crate::enumerate::{
    alternating_below, lie_strata, sort_groups, sporadic_below, PrimePowers, QDomain, Stratum,
};

#[derive(Clone, Debug)]
pub enum Subject {
    Group(GroupId),
    /// A whole (family, rank) stratum sharing one verdict.
    Stratum(Stratum),
    /// A family or tail of a family with no member in range.
    Family(String),
}

impl Subject {
    pub fn label(&self) -> String {
        match self {
            Subject::Group(g) => g.to_string(),
            Subject::Stratum(s) => s.label(),
            Subject::Family(s) => s.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub subject: Subject,
    pub order: Option<BigInt>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct ExclusionReport {
    pub genus: u32,
    pub bound: BigInt,
    pub entries: Vec<Entry>,
    /// Groups that are not excluded: the survivor proper plus anything unresolved.
    pub survivors: Vec<GroupId>,
}

impl ExclusionReport {
    pub fn group_entries(&self) -> impl Iterator<Item = (&GroupId, &Entry)> {
        self.entries.iter().filter_map(|e| match &e.subject {
            Subject::Group(g) => Some((g, e)),
            _ => None,
        })
    }

    pub fn find(&self, g: &GroupId) -> Option<&Entry> {
        self.group_entries().find(|(h, _)| *h == g).map(|(_, e)| e)
    }

    /// Exclusions or survivor certificates whose witness does not hold.
    pub fn failed_witnesses(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|e| !matches!(e.verdict, Verdict::Unresolved(_)))
            .filter_map(|e| e.verdict.failed_fact().map(|f| format!("{}: {f}", e.subject.label())))
            .collect()
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &Entry> {
        self.entries
            .iter()
            .filter(|e| matches!(e.verdict, Verdict::Unresolved(_)))
    }
}

fn excluded(rule: RuleId, facts: Vec<Fact>) -> Verdict {
    Verdict::Excluded(Exclusion {
        rule,
        facts,
        factors: Vec::new(),
    })
}

/// Verdict shared by every member of a stratum, if there is one.
fn stratum_verdict(s: &Stratum, g: u32) -> Option<Verdict> {
    let fam = s.family;
    if fam.is_classical() {
        let dim = classical_proj_dim(fam, s.rank);
        return (dim < 2 * g).then(|| {
            excluded(
                RuleId::ClassicalProjdim,
                vec![Fact::new("natural projective dimension < 2g", dim, Rel::Lt, 2 * g)],
            )
        });
    }
    if matches!(fam, LieFamily::TrialityD4 | LieFamily::ReeF4) {
        return Some(excluded(
            RuleId::ExcDthree,
            vec![Fact::new("rank of Levi/centralizer factors < g", 2, Rel::Lt, g)],
        ));
    }
    rank_rule_applies(fam, s.rank, g)
        .then(|| excluded(RuleId::ExcRank, vec![Fact::new("rank < g", s.rank, Rel::Lt, g)]))
}

/// Smallest simple member of an exceptional family.
fn smallest_simple(fam: LieFamily) -> GroupId {
    let dom = QDomain::of(fam);
    (dom.smallest()..)
        .filter(|&q| dom.contains(q))
        .filter_map(|q| GroupId::lie(fam, fam.fixed_rank().unwrap(), q).ok())
        .find(is_simple)
        .unwrap()
}

pub fn run_pipeline(g: u32) -> Result<ExclusionReport, FilterError> {
    run_pipeline_with(Catalog::embedded(), g)
}

/// Classifies every simple group of order at most `|Sp_2g(2)|`.
pub fn run_pipeline_with(catalog: &Catalog, g: u32) -> Result<ExclusionReport, FilterError> {
    if g < 3 {
        return Err(FilterError::GenusTooSmall(g));
    }
    let bound = sp_order(g);

    let mut candidates = alternating_below(&bound);
    candidates.extend(sporadic_below(catalog, &bound));
    let tits = order(&GroupId::Tits)?;
    if tits <= bound {
        candidates.push((GroupId::Tits, tits));
    }

    let strata = lie_strata(&bound);
    let mut stratum_entries = Vec::new();
    let mut to_expand = Vec::new();
    for s in strata {
        match stratum_verdict(&s, g) {
            Some(v) => stratum_entries.push(Entry {
                subject: Subject::Stratum(s),
                order: None,
                verdict: v,
            }),
            None => to_expand.push(s),
        }
    }
    let q_max = to_expand
        .iter()
        .map(|s| u64::try_from(&s.q_bound).unwrap_or(u64::MAX))
        .max()
        .unwrap_or(2);
    if let Some(s) = to_expand.iter().find(|s| !s.is_expandable()) {
        return Err(FilterError::Enumeration(s.members(&PrimePowers::up_to(2)).unwrap_err()));
    }
    let pp = PrimePowers::up_to(q_max);
    for s in &to_expand {
        candidates.extend(s.members(&pp).map_err(FilterError::Enumeration)?);
    }
    sort_groups(&mut candidates);
    candidates.dedup_by(|a, b| a.0 == b.0);

    let group_entries: Vec<Entry> = candidates
        .par_iter()
        .map(|(k, o)| {
            classify_with(catalog, k, g).map(|verdict| Entry {
                subject: Subject::Group(*k),
                order: Some(o.clone()),
                verdict,
            })
        })
        .collect::<Result<_, _>>()?;

    let mut tail_entries = Vec::new();
    for fam in LieFamily::ALL.into_iter().filter(|f| f.is_exceptional()) {
        let rank = fam.fixed_rank().unwrap();
        if matches!(fam, LieFamily::TrialityD4 | LieFamily::ReeF4) || rank_rule_applies(fam, rank, g) {
            continue;
        }
        let smallest = smallest_simple(fam);
        let smallest_order = order(&smallest)?;
        if smallest_order <= bound {
            // Members in range are classified individually.
            continue;
        }
        tail_entries.push(Entry {
            subject: Subject::Family(format!("{fam}(q), all q")),
            order: None,
            verdict: excluded(
                RuleId::ExcOrderIneq,
                vec![Fact::new(
                    format!("|{smallest}| > |Sp_2g(2)|"),
                    smallest_order,
                    Rel::Gt,
                    bound.clone(),
                )],
            ),
        });
    }
    let chain = verify_alt_chain(g)?;
    let idx = mcg_min_index(g).expect("g >= 3");
    tail_entries.push(Entry {
        subject: Subject::Family(format!("Alt_n, n >= {idx}")),
        order: None,
        verdict: excluded(
            RuleId::AltOrderChain,
            chain
                .steps
                .iter()
                .flat_map(|s| s.facts.iter().cloned())
                .chain(chain.direct)
                .collect(),
        ),
    });

    let survivors = group_entries
        .iter()
        .filter(|e| !e.verdict.is_excluded())
        .filter_map(|e| match e.subject {
            Subject::Group(k) => Some(k),
            _ => None,
        })
        .collect();
    let mut entries = group_entries;
    entries.extend(stratum_entries);
    entries.extend(tail_entries);
    let report = ExclusionReport {
        genus: g,
        bound,
        entries,
        survivors,
    };
    if let Some(f) = report.failed_witnesses().into_iter().next() {
        return Err(FilterError::WitnessFailed {
            group: f,
            fact: "in pipeline report".into(),
        });
    }
    Ok(report)
}
