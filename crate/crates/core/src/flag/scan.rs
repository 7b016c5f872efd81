use std::collections::BTreeMap;

use rayon::prelude::*;

use super::field::FiniteField;
use super::invariant::{check_flag, FlagCase, FlagCheck};
use super::matrix::FFMatrix;
use super::FlagError;

/// Largest number of matrices `q^{n²}` an exhaustive scan will visit.
pub const SCAN_MATRIX_LIMIT: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagScan {
    pub n: usize,
    pub q: u64,
    /// Invertible matrices visited.
    pub matrices: u64,
    pub eligible: u64,
    pub by_case: BTreeMap<String, u64>,
    pub violations: Vec<String>,
}

impl FlagScan {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!("{} matrices scanned, {} violations", self.matrices, self.violations.len())
    }
}

fn case_name(c: FlagCase) -> &'static str {
    match c {
        FlagCase::SingleRootCyclic => "one eigenvalue, line eigenspace",
        FlagCase::SingleRoot => "one eigenvalue",
        FlagCase::TwoRootsLine => "two eigenvalues, line eigenspace",
        FlagCase::TwoRoots => "two eigenvalues",
        FlagCase::ManyRoots => "three or more eigenvalues",
    }
}

/// Validates `(n, q)` for [`flag_scan`] and returns `q^{n²}`.
pub fn flag_scan_bounds(n: usize, q: u64) -> Result<u64, FlagError> {
    FiniteField::of_order(q)?;
    if !(3..=super::matrix::MAX_DIM).contains(&n) {
        return Err(FlagError::Dimension(n));
    }
    u32::try_from(n * n)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .filter(|&t| t <= SCAN_MATRIX_LIMIT)
        .ok_or(FlagError::ScanTooLarge { n, q, limit: SCAN_MATRIX_LIMIT })
}

/// Checks the flag construction on every element of `GL_n(q)`.
pub fn flag_scan(n: usize, q: u64) -> Result<FlagScan, FlagError> {
    let total = flag_scan_bounds(n, q)?;
    let f = FiniteField::of_order(q)?;
    let results: Vec<(u64, FlagCheck)> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let x = FFMatrix::from_index(f.clone(), n, i);
            x.is_invertible().then(|| check_flag(&x).map(|r| (i, r)))
        })
        .collect::<Result<_, _>>()?;
    let mut scan = FlagScan {
        n,
        q,
        matrices: results.len() as u64,
        eligible: 0,
        by_case: BTreeMap::new(),
        violations: Vec::new(),
    };
    for (_, r) in results {
        match r {
            FlagCheck::Ineligible => {}
            FlagCheck::Verified { case, .. } => {
                scan.eligible += 1;
                *scan.by_case.entry(case_name(case).to_string()).or_default() += 1;
            }
            FlagCheck::Violation(msg) => {
                scan.eligible += 1;
                scan.violations.push(msg);
            }
        }
    }
    Ok(scan)
}
