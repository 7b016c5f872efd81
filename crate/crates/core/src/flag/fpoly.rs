use std::fmt;
use std::sync::Arc;

use super::field::{Elem, FiniteField};
use super::FlagError;

/// Polynomial over a finite field, lowest coefficient first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct FPoly {
    field: Arc<FiniteField>,
    coeffs: Vec<Elem>,
}

impl FPoly {
    pub fn new(field: Arc<FiniteField>, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FPoly { field, coeffs }
    }

    pub fn one(field: Arc<FiniteField>) -> Self {
        FPoly::new(field, vec![1])
    }

    /// `t - a`.
    pub fn linear(field: Arc<FiniteField>, a: Elem) -> Self {
        let c = field.neg(a);
        FPoly::new(field, vec![c, 1])
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, other: &FPoly) -> FPoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                f.add(a, b)
            })
            .collect();
        FPoly::new(f.clone(), c)
    }

    pub fn scale(&self, s: Elem) -> FPoly {
        let f = &self.field;
        FPoly::new(f.clone(), self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn neg(&self) -> FPoly {
        let f = &self.field;
        FPoly::new(f.clone(), self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &FPoly) -> FPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FPoly) -> FPoly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return FPoly::new(f.clone(), Vec::new());
        }
        let mut c = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        FPoly::new(f.clone(), c)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &FPoly) -> (FPoly, FPoly) {
        let f = &self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(d.coeffs[dd]).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let mut q = vec![0; r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let c = f.mul(r[top], lead_inv);
            q[top - dd] = c;
            for (i, &di) in d.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = f.sub(r[idx], f.mul(c, di));
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (FPoly::new(f.clone(), q), FPoly::new(f.clone(), r))
    }

    /// Image under a field embedding.
    pub fn embed(&self, big: &Arc<FiniteField>) -> Result<FPoly, FlagError> {
        let table = self.field.embedding_into(big)?;
        Ok(FPoly::new(
            big.clone(),
            self.coeffs.iter().map(|&c| table[c as usize]).collect(),
        ))
    }

    /// Roots with multiplicity, by exhaustive search, sorted by code.
    pub fn roots(&self) -> Vec<(Elem, usize)> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        for a in self.field.elements() {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let lin = FPoly::linear(self.field.clone(), a);
            let mut mult = 0;
            while rest.degree().unwrap_or(0) > 0 && rest.eval(a) == 0 {
                rest = rest.div_rem(&lin).0;
                mult += 1;
            }
            if mult > 0 {
                out.push((a, mult));
            }
        }
        out
    }

    /// True when the polynomial is a product of linear factors.
    pub fn splits(&self) -> bool {
        let n: usize = self.roots().iter().map(|r| r.1).sum();
        Some(n) == self.degree()
    }
}

impl fmt::Debug for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if self.field.k() == 1 {
                c.to_string()
            } else {
                format!("[{c}]")
            };
            match (i, c) {
                (0, _) => write!(f, "{coef}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{coef}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{coef}t^{i}")?,
            }
        }
        Ok(())
    }
}
