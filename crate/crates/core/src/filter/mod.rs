//! Classification of the simple groups below `|Sp_2g(2)|` by exclusion rule.

mod chain;
mod classify;
mod pipeline;
mod rules;

pub use chain::{
    exceptional_inequalities, verify_alt_chain, verify_exceptional_inequalities, ChainStep, ChainTrace, Inequality,
    StepMethod, EXACT_FACTORIAL_MAX_GENUS,
};
pub use classify::{classify, classify_with};
pub use pipeline::{run_pipeline, run_pipeline_with, Entry, ExclusionReport, Subject};
pub use rules::{Exclusion, Fact, FactorExclusion, FactorRule, Rel, RuleId, Verdict};

use crate::catalog::CatalogError;
use crate::enumerate::EnumError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FilterError {
    #[error("genus {0} is below 3")]
    GenusTooSmall(u32),
    #[error("{0} is not a non-abelian simple group")]
    NotSimple(String),
    #[error("|{group}| = {order} exceeds {bound}")]
    OutOfScope {
        group: String,
        order: String,
        bound: String,
    },
    #[error("no rule applies to {0}")]
    Unclassified(String),
    #[error("witness for {group} does not hold {fact}")]
    WitnessFailed { group: String, fact: String },
    #[error("alternating chain, genus {genus}: step {step} failed")]
    ChainStepFailed { genus: u32, step: usize },
    #[error("order inequality {0} failed")]
    InequalityFailed(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Enumeration(EnumError),
}
