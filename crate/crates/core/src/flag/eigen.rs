use std::sync::Arc;

use super::field::{Elem, FiniteField};
use super::fpoly::FPoly;
use super::matrix::{rref, FFMatrix};
use super::FlagError;

/// `det(tI - X)`, via reduction to upper Hessenberg form.
pub fn char_poly(x: &FFMatrix) -> FPoly {
    let f = x.field().clone();
    let n = x.n();
    let mut h = x.rows();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if p != j + 1 {
            h.swap(p, j + 1);
            for row in h.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]).unwrap();
        for i in j + 2..n {
            let c = f.mul(h[i][j], inv);
            if c == 0 {
                continue;
            }
            for k in 0..n {
                let v = f.mul(c, h[j + 1][k]);
                h[i][k] = f.sub(h[i][k], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(c, row[i]);
                row[j + 1] = f.add(row[j + 1], v);
            }
        }
    }
    // p_m = (t - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{i<j≤m} h_{j,j-1}) p_{i-1}
    let mut ps: Vec<FPoly> = vec![FPoly::one(f.clone())];
    for m in 0..n {
        let mut pm = FPoly::linear(f.clone(), h[m][m]).mul(&ps[m]);
        let mut prod = 1;
        for i in (0..m).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            if prod == 0 {
                break;
            }
            let c = f.mul(h[i][m], prod);
            pm = pm.sub(&ps[i].scale(c));
        }
        ps.push(pm);
    }
    ps.pop().unwrap()
}

/// Smallest m such that the characteristic polynomial splits over `GF(q^m)`,
/// together with that field.
pub fn splitting_field(x: &FFMatrix) -> Result<(u32, Arc<FiniteField>), FlagError> {
    let base = x.field();
    let chi = char_poly(x);
    for m in 1..=60 {
        let big = FiniteField::get(base.p(), base.k() * m)?;
        if chi.embed(&big)?.splits() {
            return Ok((m, big));
        }
    }
    Err(FlagError::InvalidField("no splitting field within range".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    /// Element of the splitting field.
    pub value: Elem,
    pub algebraic: usize,
    /// `dim ker(X - λI)`.
    pub geometric: usize,
    /// `dim ker(X - λI)^2`.
    pub kernel_sq: usize,
}

#[derive(Clone, Debug)]
pub struct EigenData {
    pub field: Arc<FiniteField>,
    /// Degree of the splitting field over the base field.
    pub degree: u32,
    pub char_poly: FPoly,
    /// Matrix over the splitting field.
    pub matrix: FFMatrix,
    /// Sorted by code, which is the lexicographic order on coefficient
    /// vectors with the top coefficient most significant.
    pub values: Vec<Eigenvalue>,
}

impl EigenData {
    pub fn eigenspace(&self, lambda: Elem) -> Vec<Vec<Elem>> {
        self.matrix.shift(lambda).nullspace()
    }

    pub fn kernel_sq(&self, lambda: Elem) -> Vec<Vec<Elem>> {
        let s = self.matrix.shift(lambda);
        s.mul(&s).nullspace()
    }

    pub fn max_geometric(&self) -> usize {
        self.values.iter().map(|e| e.geometric).max().unwrap_or(0)
    }
}

pub fn eigen_data(x: &FFMatrix) -> Result<EigenData, FlagError> {
    let (degree, big) = splitting_field(x)?;
    let xm = x.embed(&big)?;
    let chi = char_poly(x);
    let values = chi
        .embed(&big)?
        .roots()
        .into_iter()
        .map(|(value, algebraic)| {
            let s = xm.shift(value);
            Eigenvalue {
                value,
                algebraic,
                geometric: x.n() - s.rank(),
                kernel_sq: x.n() - s.mul(&s).rank(),
            }
        })
        .collect();
    Ok(EigenData { field: big, degree, char_poly: chi, matrix: xm, values })
}

/// Canonical basis (RREF rows) of the span of some vectors.
pub fn span(f: &FiniteField, vectors: &[Vec<Elem>], n: usize) -> Vec<Vec<Elem>> {
    rref(f, vectors.to_vec(), n)
}
