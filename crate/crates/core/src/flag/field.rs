use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::FlagError;
use crate::arith::nt;

/// Field element: the base-p digits of the code are its coefficients in the
/// polynomial basis `1, α, α², ...`.
pub type Elem = u32;

/// Largest field this module builds.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;
const ADD_TABLE_MAX: u32 = 1024;

/// `GF(p^k)`, with `α` a root of the lexicographically first primitive
/// polynomial of degree k (for k = 1, `α` is the least primitive root).
pub struct FiniteField {
    p: u32,
    k: u32,
    size: u32,
    /// Monic modulus, low coefficient first (`[0, 1]`, i.e. `x`, for k = 1).
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
    add: Vec<Elem>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// Shared instance of `GF(p^k)`.
    pub fn get(p: u32, k: u32) -> Result<Arc<FiniteField>, FlagError> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<FiniteField>>>> = OnceLock::new();
        if !nt::is_prime(u64::from(p)) || k == 0 {
            return Err(FlagError::InvalidField(format!("{p}^{k}")));
        }
        let size = u64::from(p).checked_pow(k).filter(|&s| s <= u64::from(MAX_FIELD_SIZE));
        let Some(size) = size else {
            return Err(FlagError::InvalidField(format!("{p}^{k} exceeds {MAX_FIELD_SIZE}")));
        };
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.lock().unwrap().get(&(p, k)) {
            return Ok(f.clone());
        }
        let f = Arc::new(FiniteField::build(p, k, size as u32));
        Ok(cache.lock().unwrap().entry((p, k)).or_insert(f).clone())
    }

    /// `GF(q)` for a prime power q.
    pub fn of_order(q: u64) -> Result<Arc<FiniteField>, FlagError> {
        let (p, k) = nt::prime_power(q).ok_or_else(|| FlagError::InvalidField(q.to_string()))?;
        FiniteField::get(p as u32, k)
    }

    fn build(p: u32, k: u32, size: u32) -> FiniteField {
        let (modulus, exp) = if k == 1 {
            let g = (1..p)
                .find(|&g| multiplicative_order_mod(g, p) == p - 1)
                .unwrap_or(1);
            let mut exp = Vec::with_capacity(p as usize - 1);
            let mut x = 1u32;
            for _ in 0..p - 1 {
                exp.push(x);
                x = x * g % p;
            }
            (vec![0, 1], exp)
        } else {
            primitive_modulus(p, k, size)
        };
        let mut log = vec![0u32; size as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let mut field = FiniteField {
            p,
            k,
            size,
            modulus,
            exp,
            log,
            add: Vec::new(),
        };
        if size <= ADD_TABLE_MAX {
            let mut add = vec![0; (size * size) as usize];
            for a in 0..size {
                for b in 0..size {
                    add[(a * size + b) as usize] = field.add_digits(a, b, false);
                }
            }
            field.add = add;
        }
        field
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size
    }

    /// Generator of the multiplicative group.
    pub fn generator(&self) -> Elem {
        self.exp.get(1).copied().unwrap_or(1)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(i64::from(self.p)) as Elem
    }

    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let mut a = a;
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn add_digits(&self, a: Elem, b: Elem, subtract: bool) -> Elem {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let (da, db) = (a % self.p, b % self.p);
            let d = if subtract {
                (da + self.p - db) % self.p
            } else {
                (da + db) % self.p
            };
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.add.is_empty() {
            self.add_digits(a, b, false)
        } else {
            self.add[(a * self.size + b) as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.add_digits(0, a, true)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.add.is_empty() {
            self.add_digits(a, b, true)
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.size - 1;
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= n { s - n } else { s }) as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let n = self.size - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    /// `a / b`; panics on division by zero.
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b).expect("division by zero"))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = u64::from(self.size - 1);
        self.exp[((u64::from(self.log[a as usize]) * (e % n)) % n) as usize]
    }

    /// Evaluates a polynomial with prime-field coefficients (low first) at `x`.
    fn eval_prime_poly(&self, coeffs: &[u32], x: Elem) -> Elem {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Embedding `self -> big`, as a lookup table on codes. Requires
    /// `self.k | big.k`. The image of `α` is the least root (by code) of
    /// this field's modulus in `big`.
    pub fn embedding_into(self: &Arc<Self>, big: &Arc<FiniteField>) -> Result<Arc<Vec<Elem>>, FlagError> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, u32, u32), Arc<Vec<Elem>>>>> = OnceLock::new();
        if self.p != big.p || !big.k.is_multiple_of(self.k) {
            return Err(FlagError::InvalidField(format!("no embedding {self:?} -> {big:?}")));
        }
        let key = (self.p, self.k, big.k);
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let table: Vec<Elem> = if self.k == 1 {
            (0..self.size).collect()
        } else {
            let beta = big
                .elements()
                .find(|&b| big.eval_prime_poly(&self.modulus, b) == 0)
                .expect("modulus splits in an extension");
            (0..self.size)
                .map(|a| big.eval_prime_poly(&self.digits(a), beta))
                .collect()
        };
        let table = Arc::new(table);
        cache.lock().unwrap().insert(key, table.clone());
        Ok(table)
    }
}

fn multiplicative_order_mod(g: u32, p: u32) -> u32 {
    let mut x = g % p;
    let mut m = 1;
    while x != 1 {
        x = x * g % p;
        m += 1;
        if m > p {
            return 0;
        }
    }
    m
}

/// First monic degree-k polynomial (coefficient vectors ordered by code)
/// for which x has order `p^k - 1`; returns it with the table of powers of x.
fn primitive_modulus(p: u32, k: u32, size: u32) -> (Vec<u32>, Vec<Elem>) {
    let ku = k as usize;
    for t in 0..size {
        let mut low = Vec::with_capacity(ku);
        let mut r = t;
        for _ in 0..k {
            low.push(r % p);
            r /= p;
        }
        if low[0] == 0 {
            continue;
        }
        // Powers of x, as digit vectors, reduced by x^k = -Σ low_i x^i.
        let mut cur = vec![0u32; ku];
        cur[0] = 1;
        let mut exp = Vec::with_capacity(size as usize - 1);
        let mut ok = true;
        for i in 0..size - 1 {
            let code = cur.iter().rev().fold(0, |acc, &d| acc * p + d);
            if i > 0 && code == 1 {
                ok = false;
                break;
            }
            exp.push(code);
            let top = cur[ku - 1];
            for j in (1..ku).rev() {
                cur[j] = (cur[j - 1] + p * p - top * low[j] % p) % p;
            }
            cur[0] = (p * p - top * low[0] % p) % p;
        }
        if ok && cur.iter().rev().fold(0, |acc, &d| acc * p + d) == 1 {
            let mut modulus = low;
            modulus.push(1);
            return (modulus, exp);
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axioms(f: &FiniteField) {
        let els: Vec<Elem> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for &b in els.iter().step_by(3) {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(f.add(a, b), b), a);
                for &c in els.iter().step_by(5) {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4), (3, 3)] {
            axioms(&FiniteField::get(p, k).unwrap());
        }
    }

    #[test]
    fn moduli() {
        assert_eq!(FiniteField::get(2, 2).unwrap().modulus(), [1, 1, 1]);
        assert_eq!(FiniteField::get(3, 2).unwrap().modulus(), [2, 1, 1]);
        assert_eq!(FiniteField::get(7, 1).unwrap().generator(), 3);
        assert!(FiniteField::get(4, 1).is_err());
        assert!(FiniteField::of_order(6).is_err());
    }

    #[test]
    fn embeddings_are_ring_homomorphisms() {
        for (p, k, m) in [(2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 1, 4), (3, 1, 3), (2, 3, 2)] {
            let small = FiniteField::get(p, k).unwrap();
            let big = FiniteField::get(p, k * m).unwrap();
            let e = small.embedding_into(&big).unwrap();
            for a in small.elements() {
                for b in small.elements() {
                    assert_eq!(e[small.add(a, b) as usize], big.add(e[a as usize], e[b as usize]));
                    assert_eq!(e[small.mul(a, b) as usize], big.mul(e[a as usize], e[b as usize]));
                }
            }
        }
        let a = FiniteField::get(2, 2).unwrap();
        let b = FiniteField::get(2, 3).unwrap();
        assert!(a.embedding_into(&b).is_err());
    }
}
