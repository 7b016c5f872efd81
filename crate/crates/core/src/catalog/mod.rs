//! Group identifiers, exact orders, and the sporadic table.

mod canonical;
mod family;
mod group;
mod orders;
mod sporadic;

use num_bigint::BigInt;
use num_traits::{One, Pow};

pub use canonical::{canonicalize, is_simple};
pub use family::{FieldRestriction, LieFamily, Version};
pub use group::{GroupId, LieGroup, ParseError, Sporadic};
pub use orders::{
    center_divisor, max_center_divisor, universal_factorization, universal_order,
    universal_shape, Omega, OrderShape, ShapeFactor,
};
pub use sporadic::{Catalog, SporadicRecord, EMBEDDED_DATA};

use crate::arith::factorial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("sporadic data, line {line}: {message}")]
    Data { line: usize, message: String },
}

/// `|Sp_2g(2)| = 2^{g²} ∏_{i=1}^{g} (4^i - 1)`.
pub fn sp_order(g: u32) -> BigInt {
    let mut acc: BigInt = Pow::pow(BigInt::from(2), g * g);
    let mut four_i = BigInt::one();
    for _ in 0..g {
        four_i *= 4;
        acc *= &four_i - 1u32;
    }
    acc
}

impl Catalog {
    pub fn order(&self, g: &GroupId) -> Result<BigInt, CatalogError> {
        g.validate()?;
        Ok(match g {
            GroupId::Cyclic(p) => BigInt::from(*p),
            GroupId::Alternating(n) => BigInt::from(factorial(u64::from(*n))) / 2,
            GroupId::Lie(l) => {
                let u = universal_order(l.family(), l.rank(), l.q());
                match l.version() {
                    Version::Universal => u,
                    Version::Adjoint => u / center_divisor(l.family(), l.rank(), l.q()),
                }
            }
            GroupId::Sporadic(s) => self.sporadic_order(*s).clone(),
            GroupId::Tits => universal_order(LieFamily::ReeF4, 4, 2) / 2,
        })
    }
}

/// Exact order, using the embedded sporadic table.
pub fn order(g: &GroupId) -> Result<BigInt, CatalogError> {
    Catalog::embedded().order(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp_orders() {
        assert_eq!(sp_order(1), BigInt::from(6));
        assert_eq!(sp_order(3), BigInt::from(1451520));
        assert_eq!(
            sp_order(10).to_string(),
            "1132992015386677099994486205757869431795095310094129168384000000"
        );
        for g in 1..=10 {
            let c = GroupId::lie(LieFamily::C, g.max(2), 2).unwrap();
            if g >= 2 {
                assert_eq!(order(&c).unwrap(), sp_order(g));
            }
        }
    }

    #[test]
    fn small_orders() {
        let o = |s: &str| order(&GroupId::parse_or_panic(s)).unwrap();
        assert_eq!(o("Alt_5"), BigInt::from(60));
        assert_eq!(o("A_1(2)"), BigInt::from(6));
        assert_eq!(o("C_2(2)"), BigInt::from(720));
        assert_eq!(o("Tits"), BigInt::from(17971200));
        assert_eq!(o("Tits") * 2, o("2F4(2)"));
        assert_eq!(o("2B2(2)"), BigInt::from(20));
    }
}
