use num_bigint::BigInt;
use num_traits::Pow;

use super::rules::{Fact, Rel};
use super::FilterError;
use crate::arith::factorial;
use crate::catalog::{order, sp_order, GroupId, LieFamily};
use crate::degrees::mcg_min_index;

/// Largest genus for which the factorial steps are evaluated exactly.
pub const EXACT_FACTORIAL_MAX_GENUS: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepMethod {
    Exact,
    /// Follows from `n! > 2 (n/4)^n`, valid for every n >= 1 since e < 4.
    Lemma,
}

#[derive(Clone, Debug)]
pub struct ChainStep {
    pub index: usize,
    pub description: String,
    pub method: StepMethod,
    pub facts: Vec<Fact>,
}

#[derive(Clone, Debug)]
pub struct ChainTrace {
    pub genus: u32,
    /// `n = 2^{g-1}(2^g - 1)`.
    pub degree: BigInt,
    pub steps: Vec<ChainStep>,
    /// `n!/2 > |Sp_2g(2)|` evaluated directly (small genus only).
    pub direct: Option<Fact>,
    /// The step with exponent `9g^2 - 27` in place of `9g(g-3)`; kept for
    /// diagnostics, it is false for every g >= 2.
    pub variant_step: Fact,
}

/// Checks `|Alt_n| > |Sp_2g(2)|` for `n = 2^{g-1}(2^g - 1)` through
/// `n!/2 > m^n > m^{9g} = 2^{9g(g-3)}(2^g-1)^{9g} > |Sp_2g(2)|`, with `m = n/4`.
pub fn verify_alt_chain(g: u32) -> Result<ChainTrace, FilterError> {
    let n = mcg_min_index(g).map_err(|_| FilterError::GenusTooSmall(g))?;
    let n_u64 = u64::try_from(&n).expect("degree fits");
    let two = BigInt::from(2);
    let top = Pow::pow(&two, g) - 1u32;
    let m: BigInt = Pow::pow(&two, g - 3) * &top;
    let sp = sp_order(g);
    let exact = g <= EXACT_FACTORIAL_MAX_GENUS;

    let half_fact = exact.then(|| BigInt::from(factorial(n_u64)) / 2u32);
    let mut steps = Vec::new();
    steps.push(ChainStep {
        index: 1,
        description: "n!/2 > m^n".into(),
        method: if exact { StepMethod::Exact } else { StepMethod::Lemma },
        facts: match &half_fact {
            Some(hf) => {
                let mn: BigInt = Pow::pow(&m, n_u64);
                vec![Fact::new("n!/2 > (n/4)^n", hf.clone(), Rel::Gt, mn)]
            }
            None => Vec::new(),
        },
    });
    steps.push(ChainStep {
        index: 2,
        description: "m^n > m^{9g}".into(),
        method: StepMethod::Exact,
        facts: vec![
            Fact::new("n > 9g", n.clone(), Rel::Gt, 9 * g),
            Fact::new("m >= 2", m.clone(), Rel::Ge, 2),
        ],
    });
    let m9g: BigInt = Pow::pow(&m, 9 * g);
    let rhs3: BigInt = Pow::pow(&two, 9 * g * (g - 3)) * Pow::pow(&top, 9 * g);
    steps.push(ChainStep {
        index: 3,
        description: "m^{9g} = 2^{9g(g-3)} (2^g-1)^{9g}".into(),
        method: StepMethod::Exact,
        facts: vec![Fact::new("m^{9g} = 2^{9g(g-3)}(2^g-1)^{9g}", m9g.clone(), Rel::Eq, rhs3.clone())],
    });
    steps.push(ChainStep {
        index: 4,
        description: "2^{9g(g-3)} (2^g-1)^{9g} > |Sp_2g(2)|".into(),
        method: StepMethod::Exact,
        facts: vec![Fact::new("2^{9g(g-3)}(2^g-1)^{9g} > |Sp_2g(2)|", rhs3, Rel::Gt, sp.clone())],
    });

    for s in &steps {
        if s.facts.iter().any(|f| !f.holds()) {
            return Err(FilterError::ChainStepFailed { genus: g, step: s.index });
        }
    }
    let direct = half_fact.map(|hf| Fact::new("n!/2 > |Sp_2g(2)|", hf, Rel::Gt, sp.clone()));
    if direct.as_ref().is_some_and(|f| !f.holds()) {
        return Err(FilterError::ChainStepFailed { genus: g, step: 0 });
    }
    let variant: BigInt = Pow::pow(&two, 9 * g * g - 27) * Pow::pow(&top, 9 * g);
    Ok(ChainTrace {
        genus: g,
        degree: n,
        steps,
        direct,
        variant_step: Fact::new("m^{9g} > 2^{9g^2-27}(2^g-1)^{9g}", m9g, Rel::Gt, variant),
    })
}

#[derive(Clone, Debug)]
pub struct Inequality {
    pub label: &'static str,
    pub facts: Vec<Fact>,
}

impl Inequality {
    pub fn holds(&self) -> bool {
        self.facts.iter().all(Fact::holds)
    }
}

fn ord(f: LieFamily, q: u64) -> BigInt {
    order(&GroupId::lie(f, f.fixed_rank().unwrap(), q).unwrap()).unwrap()
}

/// Checks [`exceptional_inequalities`], failing on the first false one.
pub fn verify_exceptional_inequalities() -> Result<Vec<Inequality>, FilterError> {
    let list = exceptional_inequalities();
    for (i, ineq) in list.iter().enumerate() {
        if !ineq.holds() {
            return Err(FilterError::InequalityFailed(format!("({}) {}", i + 1, ineq.label)));
        }
    }
    Ok(list)
}

/// The order comparisons meant to place each exceptional family of rank at
/// least g above `Sp_2g(2)`, plus `3D_4(2)` and `2F_4(2)` against `Sp_6(2)`.
/// Evaluated, not asserted.
pub fn exceptional_inequalities() -> Vec<Inequality> {
    use LieFamily::*;
    vec![
        Inequality {
            label: "|2G_2(27)| > |G_2(3)| > |Sp_6(2)|",
            facts: vec![
                Fact::new("|2G_2(27)| > |G_2(3)|", ord(ReeG2, 27), Rel::Gt, ord(G2, 3)),
                Fact::new("|G_2(3)| > |Sp_6(2)|", ord(G2, 3), Rel::Gt, sp_order(3)),
            ],
        },
        Inequality {
            label: "|F_4(2)| > |Sp_8(2)|",
            facts: vec![Fact::new("|F_4(2)| > |Sp_8(2)|", ord(F4, 2), Rel::Gt, sp_order(4))],
        },
        Inequality {
            label: "|E_6(2)| > |2E_6(2)| > |Sp_12(2)|",
            facts: vec![
                Fact::new("|E_6(2)| > |2E_6(2)|", ord(E6, 2), Rel::Gt, ord(TwistedE6, 2)),
                Fact::new("|2E_6(2)| > |Sp_12(2)|", ord(TwistedE6, 2), Rel::Gt, sp_order(6)),
            ],
        },
        Inequality {
            label: "|E_7(2)| > |Sp_14(2)|",
            facts: vec![Fact::new("|E_7(2)| > |Sp_14(2)|", ord(E7, 2), Rel::Gt, sp_order(7))],
        },
        Inequality {
            label: "|E_8(2)| > |Sp_16(2)|",
            facts: vec![Fact::new("|E_8(2)| > |Sp_16(2)|", ord(E8, 2), Rel::Gt, sp_order(8))],
        },
        Inequality {
            label: "|3D_4(2)| and |2F_4(2)| against |Sp_6(2)|",
            facts: vec![
                Fact::new("|3D_4(2)| > |Sp_6(2)|", ord(TrialityD4, 2), Rel::Gt, sp_order(3)),
                Fact::new("|2F_4(2)| > |Sp_6(2)|", ord(ReeF4, 2), Rel::Gt, sp_order(3)),
            ],
        },
    ]
}
