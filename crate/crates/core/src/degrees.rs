//! Natural projective dimensions and the few permutation degrees the
//! exclusion argument needs.

use num_bigint::BigInt;
use num_traits::Pow;

use crate::catalog::{GroupId, LieFamily};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DegreeError {
    #[error("{0} is not a classical group")]
    NotClassical(String),
    #[error("genus {0} is below 3")]
    GenusTooSmall(u32),
}

pub fn natural_proj_dim(g: &GroupId) -> Result<u32, DegreeError> {
    use LieFamily::*;
    let not = || DegreeError::NotClassical(g.to_string());
    let l = g.as_lie().ok_or_else(not)?;
    let n = l.rank();
    match l.family() {
        A | TwistedA => Ok(n + 1),
        B => Ok(2 * n + 1),
        C | D | TwistedD => Ok(2 * n),
        _ => Err(not()),
    }
}

/// Least index of a proper subgroup of the mapping class group in genus `g`:
/// `2^{g-1}(2^g - 1)`.
pub fn mcg_min_index(g: u32) -> Result<BigInt, DegreeError> {
    if g < 3 {
        return Err(DegreeError::GenusTooSmall(g));
    }
    let two = BigInt::from(2);
    Ok(Pow::pow(&two, g - 1) * (Pow::pow(&two, g) - 1u32))
}

/// Minimal faithful permutation degree, for `C_g(2)`, `D_g(2)` and `2D_g(2)` only.
pub fn min_perm_degree(k: &GroupId, genus: u32) -> Option<BigInt> {
    let l = k.as_lie()?;
    if l.q() != 2 || l.rank() != genus || genus < 3 {
        return None;
    }
    let idx = mcg_min_index(genus).ok()?;
    match l.family() {
        LieFamily::C | LieFamily::D => Some(idx),
        LieFamily::TwistedD => Some(idx - 1u32),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> GroupId {
        GroupId::parse_or_panic(s)
    }

    #[test]
    fn proj_dims() {
        assert_eq!(natural_proj_dim(&p("A_3(2)")), Ok(4));
        assert_eq!(natural_proj_dim(&p("C_5(2)")), Ok(10));
        assert_eq!(natural_proj_dim(&p("B_2(3)")), Ok(5));
        assert!(natural_proj_dim(&p("G_2(3)")).is_err());
        assert!(natural_proj_dim(&p("M11")).is_err());
    }

    #[test]
    fn indices() {
        assert_eq!(mcg_min_index(3), Ok(BigInt::from(28)));
        assert_eq!(mcg_min_index(4), Ok(BigInt::from(120)));
        assert_eq!(mcg_min_index(10), Ok(BigInt::from(523776)));
        assert_eq!(mcg_min_index(2), Err(DegreeError::GenusTooSmall(2)));
        assert_eq!(min_perm_degree(&p("C_3(2)"), 3), Some(BigInt::from(28)));
        assert_eq!(min_perm_degree(&p("2D_4(2)"), 4), Some(BigInt::from(119)));
        assert_eq!(min_perm_degree(&p("M"), 10), None);
        for g in 3..=12 {
            let d = format!("2D_{g}(2)");
            assert!(min_perm_degree(&p(&d), g).unwrap() < mcg_min_index(g).unwrap());
        }
    }
}
