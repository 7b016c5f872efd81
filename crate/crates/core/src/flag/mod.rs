//! Linear algebra over finite fields: the invariant flag of a matrix whose
//! eigenspaces are all small, its exhaustive check against centralizers, and
//! braid-relation identities for small matrices.

mod braid;
mod eigen;
mod field;
mod fpoly;
mod invariant;
mod matrix;
mod scan;

pub use braid::{
    braid_check, braid_scan, golden_braid_scan, swap_check, three_cycle, triple_product_check,
    BraidScan, MuCondition, SwapCheck, SwapReport, TriangularShape, TripleProduct, GOLDEN_SCAN_MAX_FIELD,
};
pub use eigen::{char_poly, eigen_data, span, splitting_field, EigenData, Eigenvalue};
pub use field::{Elem, FiniteField, MAX_FIELD_SIZE};
pub use fpoly::FPoly;
pub use invariant::{
    centralizer, check_flag, commutant_basis, invariant_flag, invariant_flag_with_case, Flag, FlagCase,
    FlagCheck, CENTRALIZER_BUDGET,
};
pub use matrix::{nullspace, rref, FFMatrix, MAX_DIM, MIN_DIM};
pub use scan::{flag_scan, flag_scan_bounds, FlagScan, SCAN_MATRIX_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlagError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("unsupported dimension {0} (matrices are 1x1 to 5x5; scans need n >= 3)")]
    Dimension(usize),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("an eigenspace has dimension {max_eigenspace} >= n - 1 = {}", n - 1)]
    PreconditionViolated { max_eigenspace: usize, n: usize },
    #[error("centralizer enumeration needs {field_size}^{dimension} > {budget} candidates")]
    TooLarge { dimension: usize, field_size: u32, budget: u64 },
    #[error("GL_{n}({q}) scan exceeds {limit} matrices (q^(n^2) must be at most {limit})")]
    ScanTooLarge { n: usize, q: u64, limit: u64 },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centralizer_examples() {
        let f2 = FiniteField::get(2, 1).unwrap();
        assert_eq!(centralizer(&FFMatrix::identity(f2.clone(), 2)).unwrap().len(), 6);
        let c = FFMatrix::companion(&FPoly::new(f2, vec![1, 1, 1])).unwrap();
        assert_eq!(centralizer(&c).unwrap().len(), 3);
        let f4 = FiniteField::get(2, 2).unwrap();
        let d = FFMatrix::diagonal(f4.clone(), &[1, f4.generator()]);
        assert_eq!(centralizer(&d).unwrap().len(), 9);
    }

    #[test]
    fn flag_examples() {
        let f7 = FiniteField::get(7, 1).unwrap();
        let d = FFMatrix::diagonal(f7.clone(), &[2, 3, 5]);
        let (flag, case) = invariant_flag_with_case(&d).unwrap();
        assert_eq!(case, FlagCase::ManyRoots);
        assert_eq!(flag.u, vec![vec![1, 0, 0]]);
        assert_eq!(flag.u_prime, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let j = FFMatrix::from_rows(f7.clone(), &[&[4, 1, 0], &[0, 4, 1], &[0, 0, 4]]).unwrap();
        let (flag, case) = invariant_flag_with_case(&j).unwrap();
        assert_eq!(case, FlagCase::SingleRootCyclic);
        assert_eq!(flag.dims(), (1, 2));
        let id = FFMatrix::identity(f7, 3);
        assert!(matches!(invariant_flag(&id), Err(FlagError::PreconditionViolated { .. })));
    }

    #[test]
    fn gl3_2_scan() {
        let s = flag_scan(3, 2).unwrap();
        assert_eq!(s.summary(), "168 matrices scanned, 0 violations");
    }
}
