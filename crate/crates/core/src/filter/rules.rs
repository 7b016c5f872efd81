use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::catalog::GroupId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RuleId {
    AltPermDegree,
    AltOrderChain,
    ClassicalProjdim,
    ClassicalPermdegree,
    ClassicalUniqueness,
    ExcRank,
    ExcDthree,
    ExcOrderIneq,
    SporadicRank,
    SporadicCentralizer,
}

impl RuleId {
    pub const ALL: [RuleId; 10] = [
        RuleId::AltPermDegree,
        RuleId::AltOrderChain,
        RuleId::ClassicalProjdim,
        RuleId::ClassicalPermdegree,
        RuleId::ClassicalUniqueness,
        RuleId::ExcRank,
        RuleId::ExcDthree,
        RuleId::ExcOrderIneq,
        RuleId::SporadicRank,
        RuleId::SporadicCentralizer,
    ];

    pub fn id(self) -> &'static str {
        match self {
            RuleId::AltPermDegree => "ALT_PERM_DEGREE",
            RuleId::AltOrderChain => "ALT_ORDER_CHAIN",
            RuleId::ClassicalProjdim => "CLASSICAL_PROJDIM",
            RuleId::ClassicalPermdegree => "CLASSICAL_PERMDEGREE",
            RuleId::ClassicalUniqueness => "CLASSICAL_UNIQUENESS",
            RuleId::ExcRank => "EXC_RANK",
            RuleId::ExcDthree => "EXC_DTHREE",
            RuleId::ExcOrderIneq => "EXC_ORDER_INEQ",
            RuleId::SporadicRank => "SPORADIC_RANK",
            RuleId::SporadicCentralizer => "SPORADIC_CENTRALIZER",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            RuleId::AltPermDegree => {
                "mapping class group in genus g has no proper subgroup of index below 2^(g-1)(2^g-1), \
                 so it has no non-trivial action on fewer points"
            }
            RuleId::AltOrderChain => {
                "Alt_n with n >= 2^(g-1)(2^g-1) is larger than Sp_2g(2) (exact factorial bound)"
            }
            RuleId::ClassicalProjdim => {
                "projective representations of the mapping class group in dimension below 2g are trivial"
            }
            RuleId::ClassicalPermdegree => {
                "2D_g(2) acts on 2^(g-1)(2^g-1)-1 points, below the least subgroup index"
            }
            RuleId::ClassicalUniqueness => {
                "D_g(2) has a subgroup of the least index; the subgroup of that index is unique \
                 and has quotient Sp_2g(2), which D_g(2) is not"
            }
            RuleId::ExcRank => {
                "groups of Lie type of rank below g receive only trivial maps \
                 (G_2 and 2G_2 are not covered at g = 3)"
            }
            RuleId::ExcDthree => {
                "3D_4 and 2F_4 (and the Tits group): Levi and centralizer factors have rank at most 2"
            }
            RuleId::ExcOrderIneq => {
                "smallest simple member of the family is larger than Sp_2g(2)"
            }
            RuleId::SporadicRank => {
                "some m-rank (m = 4 or an odd prime) is below g(K); decided by absence from the \
                 centralizer table, not recomputed here. The table rests on partial 4-rank \
                 computations and may list groups that are in fact rank-excluded"
            }
            RuleId::SporadicCentralizer => {
                "every simple factor of a centralizer of an element of order 2 or 3 receives only \
                 trivial maps in genus g(K)-1"
            }
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rel {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "!=")]
    Ne,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Rel {
    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Ge => ">=",
            Rel::Gt => ">",
        }
    }
}

/// A numeric witness: `lhs rel rhs`, both sides recomputed when built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub label: String,
    pub lhs: BigInt,
    pub rel: Rel,
    pub rhs: BigInt,
}

impl Fact {
    pub fn new(label: impl Into<String>, lhs: impl Into<BigInt>, rel: Rel, rhs: impl Into<BigInt>) -> Fact {
        Fact {
            label: label.into(),
            lhs: lhs.into(),
            rel,
            rhs: rhs.into(),
        }
    }

    pub fn holds(&self) -> bool {
        match self.rel {
            Rel::Lt => self.lhs < self.rhs,
            Rel::Le => self.lhs <= self.rhs,
            Rel::Eq => self.lhs == self.rhs,
            Rel::Ne => self.lhs != self.rhs,
            Rel::Ge => self.lhs >= self.rhs,
            Rel::Gt => self.lhs > self.rhs,
        }
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} {} {}", self.label, self.lhs, self.rel.symbol(), self.rhs)
    }
}

/// How a centralizer factor of a sporadic group is disposed of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorRule {
    AlternatingIndex,
    LieRank,
    LieProjdim,
    SmallerSporadic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorExclusion {
    pub factor: GroupId,
    pub rule: FactorRule,
    pub facts: Vec<Fact>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exclusion {
    pub rule: RuleId,
    pub facts: Vec<Fact>,
    pub factors: Vec<FactorExclusion>,
}

impl Exclusion {
    pub fn all_facts(&self) -> impl Iterator<Item = &Fact> {
        self.facts
            .iter()
            .chain(self.factors.iter().flat_map(|f| f.facts.iter()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Survivor { facts: Vec<Fact> },
    Excluded(Exclusion),
    /// The only applicable rule has a witness that does not hold.
    Unresolved(Exclusion),
}

impl Verdict {
    /// Rule of an exclusion (or of the failed attempt).
    pub fn rule(&self) -> Option<RuleId> {
        match self {
            Verdict::Survivor { .. } => None,
            Verdict::Excluded(e) | Verdict::Unresolved(e) => Some(e.rule),
        }
    }

    pub fn is_excluded(&self) -> bool {
        matches!(self, Verdict::Excluded(_))
    }

    pub fn facts(&self) -> Vec<&Fact> {
        match self {
            Verdict::Survivor { facts } => facts.iter().collect(),
            Verdict::Excluded(e) | Verdict::Unresolved(e) => e.all_facts().collect(),
        }
    }

    /// First witness that does not hold, if any.
    pub fn failed_fact(&self) -> Option<&Fact> {
        self.facts().into_iter().find(|f| !f.holds())
    }

    /// Demotes an exclusion whose witness fails to `Unresolved`.
    pub(crate) fn checked(self) -> Verdict {
        match self {
            Verdict::Excluded(e) if e.all_facts().any(|f| !f.holds()) => Verdict::Unresolved(e),
            v => v,
        }
    }
}
