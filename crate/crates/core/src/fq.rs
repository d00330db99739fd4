//! Finite fields `F_{p^k}` for `k <= 4`, as `F_p[x]` modulo the smallest
//! monic irreducible of degree `k`.

use thiserror::Error;

use crate::padic::is_prime;

pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large for word-sized field arithmetic")]
    PrimeTooLarge(u64),
    #[error("extension degree {0} is outside 1..={MAX_DEGREE}")]
    Degree(usize),
}

/// Element of `F_{p^k}`: coordinates `c_0 + c_1 x + ... + c_{k-1} x^{k-1}`,
/// unused coordinates zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FqElement {
    c: [u64; MAX_DEGREE],
}

impl FqElement {
    pub fn coordinates(&self) -> &[u64; MAX_DEGREE] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: usize,
    /// `m_0..m_{k-1}` of the monic modulus `x^k + m_{k-1} x^{k-1} + ... + m_0`.
    modulus: [u64; MAX_DEGREE],
    size: u64,
}

/// Remainder of `a` modulo the monic `b` over `F_p`; coefficients low to high.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = r.pop().expect("nonempty");
        if lead != 0 {
            let off = r.len() - db;
            for (j, &bj) in b[..db].iter().enumerate() {
                r[off + j] = (r[off + j] + (p - lead) * bj) % p;
            }
        }
    }
    r
}

/// Monic polynomial of degree `k` whose lower coefficients are the base-`p`
/// digits of `index`, low to high.
fn monic_from_index(mut index: u64, p: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k + 1);
    for _ in 0..k {
        out.push(index % p);
        index /= p;
    }
    out.push(1);
    out
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for index in 0..p.pow(d as u32) {
            let g = monic_from_index(index, p, d);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible `x^k + m_{k-1} x^{k-1} + ... + m_0` of degree `k`
/// over `F_p` whose coefficient word `(m_{k-1}, ..., m_0)` is smallest in
/// lexicographic order. Returned low to high, including the leading 1.
pub fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    (0..p.pow(k as u32))
        .map(|i| monic_from_index(i, p, k))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

impl FiniteField {
    pub fn new(p: u64, k: usize) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !(1..=MAX_DEGREE).contains(&k) {
            return Err(FieldError::Degree(k));
        }
        let size = p
            .checked_pow(k as u32)
            .ok_or(FieldError::PrimeTooLarge(p))?;
        let f = smallest_irreducible(p, k);
        let mut modulus = [0; MAX_DEGREE];
        modulus[..k].copy_from_slice(&f[..k]);
        Ok(FiniteField {
            p,
            k,
            modulus,
            size,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// The modulus low to high, including the leading 1.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.modulus[..self.k].to_vec();
        m.push(1);
        m
    }

    pub fn zero(&self) -> FqElement {
        FqElement::default()
    }

    pub fn one(&self) -> FqElement {
        self.from_u64(1)
    }

    /// Image of an integer under `Z -> F_p -> F_{p^k}`.
    pub fn from_u64(&self, x: u64) -> FqElement {
        let mut c = [0; MAX_DEGREE];
        c[0] = x % self.p;
        FqElement { c }
    }

    /// The element whose coordinates are the base-`p` digits of `index`;
    /// a bijection from `0..size` onto the field.
    pub fn element(&self, mut index: u64) -> FqElement {
        let mut c = [0; MAX_DEGREE];
        for x in c.iter_mut().take(self.k) {
            *x = index % self.p;
            index /= self.p;
        }
        FqElement { c }
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        (0..self.size).map(|i| self.element(i))
    }

    pub fn add(&self, a: FqElement, b: FqElement) -> FqElement {
        let mut c = a.c;
        for (x, y) in c.iter_mut().zip(&b.c).take(self.k) {
            *x = (*x + y) % self.p;
        }
        FqElement { c }
    }

    pub fn neg(&self, a: FqElement) -> FqElement {
        FqElement {
            c: a.c.map(|x| (self.p - x) % self.p),
        }
    }

    pub fn sub(&self, a: FqElement, b: FqElement) -> FqElement {
        self.add(a, self.neg(b))
    }

    pub fn scale(&self, a: FqElement, s: u64) -> FqElement {
        let s = s % self.p;
        FqElement {
            c: a.c.map(|x| x * s % self.p),
        }
    }

    pub fn mul(&self, a: FqElement, b: FqElement) -> FqElement {
        let (p, k) = (self.p, self.k);
        let mut prod = [0u64; 2 * MAX_DEGREE - 1];
        for i in 0..k {
            if a.c[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p;
            }
        }
        for d in (k..2 * k - 1).rev() {
            let t = prod[d];
            if t == 0 {
                continue;
            }
            for j in 0..k {
                prod[d - k + j] = (prod[d - k + j] + (p - t) * self.modulus[j]) % p;
            }
        }
        let mut c = [0; MAX_DEGREE];
        c[..k].copy_from_slice(&prod[..k]);
        FqElement { c }
    }

    pub fn pow(&self, a: FqElement, mut e: u64) -> FqElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FqElement) -> Option<FqElement> {
        if a.is_zero() {
            return None;
        }
        Some(self.pow(a, self.size - 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chosen_moduli() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(5, 2), vec![2, 0, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(smallest_irreducible(3, 1), vec![0, 1]);
        // x^4 + 1 = (x^2 + x + 2)(x^2 + 2x + 2) over F_3
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 3));
        assert!(is_irreducible(&smallest_irreducible(3, 4), 3));
    }

    #[test]
    fn field_axioms() {
        for (p, k) in [(2, 1), (2, 4), (3, 3), (5, 2), (7, 2)] {
            let f = FiniteField::new(p, k).unwrap();
            let all: Vec<_> = f.elements().collect();
            assert_eq!(all.len() as u64, f.size());
            for &a in &all {
                if a.is_zero() {
                    assert_eq!(f.inv(a), None);
                    continue;
                }
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), f.one());
                assert_eq!(f.pow(a, f.size() - 1), f.one());
                assert_eq!(f.add(a, f.neg(a)), f.zero());
            }
            // the multiplicative group is cyclic: some element has full order
            let n = f.size() - 1;
            let generator = all.iter().any(|&a| {
                !a.is_zero()
                    && (1..n)
                        .filter(|d| n.is_multiple_of(*d))
                        .all(|d| f.pow(a, d) != f.one())
            });
            assert!(generator, "p={p} k={k}");
        }
    }

    #[test]
    fn distributive() {
        let f = FiniteField::new(3, 3).unwrap();
        for i in (0..27).step_by(4) {
            for j in (0..27).step_by(5) {
                for l in (0..27).step_by(7) {
                    let (a, b, c) = (f.element(i), f.element(j), f.element(l));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(FiniteField::new(5, 5), Err(FieldError::Degree(5)));
        assert_eq!(FiniteField::new(5, 0), Err(FieldError::Degree(0)));
    }
}
