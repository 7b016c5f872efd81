use std::fmt;
use std::sync::Arc;

use super::field::{Elem, FiniteField};
use super::fpoly::FPoly;
use super::FlagError;

/// Supported matrix sizes.
pub const MIN_DIM: usize = 1;
pub const MAX_DIM: usize = 5;

/// Square matrix over a finite field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FFMatrix {
    field: Arc<FiniteField>,
    n: usize,
    a: Vec<Elem>,
}

impl std::hash::Hash for FiniteField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.p(), self.k()).hash(state);
    }
}

impl FFMatrix {
    pub fn new(field: Arc<FiniteField>, n: usize, entries: Vec<Elem>) -> Result<Self, FlagError> {
        if !(MIN_DIM..=MAX_DIM).contains(&n) {
            return Err(FlagError::Dimension(n));
        }
        if entries.len() != n * n {
            return Err(FlagError::Shape(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        if let Some(&e) = entries.iter().find(|&&e| e >= field.size()) {
            return Err(FlagError::Shape(format!("{e} is not an element of {field:?}")));
        }
        Ok(FFMatrix { field, n, a: entries })
    }

    /// Matrix from integer rows, reduced into the prime field.
    pub fn from_rows(field: Arc<FiniteField>, rows: &[&[i64]]) -> Result<Self, FlagError> {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(FlagError::Shape("rows must form a square".into()));
            }
            a.extend(r.iter().map(|&x| field.from_int(x)));
        }
        FFMatrix::new(field, n, a)
    }

    /// The `index`-th matrix in base-|F| order of its row-major entries.
    pub fn from_index(field: Arc<FiniteField>, n: usize, mut index: u64) -> Self {
        let q = u64::from(field.size());
        let a = (0..n * n)
            .map(|_| {
                let e = (index % q) as Elem;
                index /= q;
                e
            })
            .collect();
        FFMatrix { field, n, a }
    }

    pub fn zero(field: Arc<FiniteField>, n: usize) -> Self {
        FFMatrix { field, n, a: vec![0; n * n] }
    }

    pub fn identity(field: Arc<FiniteField>, n: usize) -> Self {
        FFMatrix::diagonal(field, &vec![1; n])
    }

    pub fn diagonal(field: Arc<FiniteField>, d: &[Elem]) -> Self {
        let n = d.len();
        let mut m = FFMatrix::zero(field, n);
        for (i, &x) in d.iter().enumerate() {
            m.a[i * n + i] = x;
        }
        m
    }

    /// Companion matrix of a monic polynomial.
    pub fn companion(poly: &FPoly) -> Result<Self, FlagError> {
        let f = poly.field().clone();
        let n = poly.degree().unwrap_or(0);
        if n == 0 || poly.coeffs()[n] != 1 {
            return Err(FlagError::Shape("companion needs a monic polynomial of positive degree".into()));
        }
        let mut a = vec![0; n * n];
        for i in 1..n {
            a[i * n + i - 1] = 1;
        }
        for i in 0..n {
            a[i * n + n - 1] = f.neg(poly.coeffs()[i]);
        }
        FFMatrix::new(f, n, a)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Elem] {
        &self.a
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.a[i * self.n + j] = v;
    }

    fn same_shape(&self, other: &FFMatrix) {
        assert!(self.n == other.n && self.field == other.field, "shape or field mismatch");
    }

    pub fn mul(&self, other: &FFMatrix) -> FFMatrix {
        self.same_shape(other);
        let (f, n) = (&self.field, self.n);
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out[idx] = f.add(out[idx], f.mul(x, other.a[k * n + j]));
                }
            }
        }
        FFMatrix { field: f.clone(), n, a: out }
    }

    pub fn add(&self, other: &FFMatrix) -> FFMatrix {
        self.same_shape(other);
        let f = &self.field;
        let a = self.a.iter().zip(&other.a).map(|(&x, &y)| f.add(x, y)).collect();
        FFMatrix { field: f.clone(), n: self.n, a }
    }

    pub fn sub(&self, other: &FFMatrix) -> FFMatrix {
        self.same_shape(other);
        let f = &self.field;
        let a = self.a.iter().zip(&other.a).map(|(&x, &y)| f.sub(x, y)).collect();
        FFMatrix { field: f.clone(), n: self.n, a }
    }

    pub fn scale(&self, s: Elem) -> FFMatrix {
        let f = &self.field;
        FFMatrix { field: f.clone(), n: self.n, a: self.a.iter().map(|&x| f.mul(x, s)).collect() }
    }

    /// `self - λI`.
    pub fn shift(&self, lambda: Elem) -> FFMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = self.field.sub(m.get(i, i), lambda);
            m.set(i, i, v);
        }
        m
    }

    pub fn transpose(&self) -> FFMatrix {
        let n = self.n;
        let mut m = self.clone();
        for i in 0..n {
            for j in 0..n {
                m.a[j * n + i] = self.a[i * n + j];
            }
        }
        m
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.a.chunks(self.n).map(<[Elem]>::to_vec).collect()
    }

    /// Image under a field embedding.
    pub fn embed(&self, big: &Arc<FiniteField>) -> Result<FFMatrix, FlagError> {
        if self.field == *big {
            return Ok(self.clone());
        }
        let t = self.field.embedding_into(big)?;
        Ok(FFMatrix { field: big.clone(), n: self.n, a: self.a.iter().map(|&x| t[x as usize]).collect() })
    }

    pub fn rank(&self) -> usize {
        rref(&self.field, self.rows(), self.n).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn det(&self) -> Elem {
        let f = &self.field;
        let n = self.n;
        let mut m = self.rows();
        let mut det = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| m[r][c] != 0) else {
                return 0;
            };
            if p != c {
                m.swap(p, c);
                det = f.neg(det);
            }
            det = f.mul(det, m[c][c]);
            let inv = f.inv(m[c][c]).unwrap();
            for r in c + 1..n {
                let factor = f.mul(m[r][c], inv);
                if factor != 0 {
                    for j in c..n {
                        let v = f.mul(factor, m[c][j]);
                        m[r][j] = f.sub(m[r][j], v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<FFMatrix> {
        let f = &self.field;
        let n = self.n;
        let mut aug: Vec<Vec<Elem>> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| Elem::from(i == j)));
                r
            })
            .collect();
        let red = rref(f, std::mem::take(&mut aug), 2 * n);
        if red.len() < n || (0..n).any(|i| red[i][i] != 1) {
            return None;
        }
        let a = red.iter().take(n).flat_map(|r| r[n..].to_vec()).collect();
        Some(FFMatrix { field: f.clone(), n, a })
    }

    /// Column vectors spanning the null space, one per free column of the RREF.
    pub fn nullspace(&self) -> Vec<Vec<Elem>> {
        nullspace(&self.field, self.rows(), self.n)
    }

    /// `M v` for a column vector.
    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |acc, j| f.add(acc, f.mul(self.get(i, j), v[j]))))
            .collect()
    }

    /// `Y^{-1} M Y`; panics when Y is singular.
    pub fn conjugate_by(&self, y: &FFMatrix) -> FFMatrix {
        y.inverse().expect("conjugator must be invertible").mul(self).mul(y)
    }
}

/// Reduced row echelon form; zero rows are dropped.
pub fn rref(f: &FiniteField, mut rows: Vec<Vec<Elem>>, ncols: usize) -> Vec<Vec<Elem>> {
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]).unwrap();
        for j in 0..ncols {
            rows[r][j] = f.mul(rows[r][j], inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..ncols {
                    let v = f.mul(factor, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], v);
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// Basis of `{x : A x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(f: &FiniteField, rows: Vec<Vec<Elem>>, ncols: usize) -> Vec<Vec<Elem>> {
    let red = rref(f, rows, ncols);
    let pivots: Vec<usize> = red.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0; ncols];
            v[free] = 1;
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.a.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "[{}]", cells.join(","))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let f = FiniteField::get(3, 1).unwrap();
        let m = FFMatrix::from_rows(f.clone(), &[&[1, 2, 0], &[0, 1, 1], &[2, 0, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FFMatrix::identity(f.clone(), 3));
        assert_ne!(m.det(), 0);
        let s = FFMatrix::from_rows(f, &[&[1, 2], &[2, 1]]).unwrap();
        assert_eq!(s.det(), 0);
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
        let ns = s.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(s.apply(&ns[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn gl2_2_has_six_elements() {
        let f = FiniteField::get(2, 1).unwrap();
        let count = (0..16).filter(|&i| FFMatrix::from_index(f.clone(), 2, i).is_invertible()).count();
        assert_eq!(count, 6);
    }
}
