//! Homogeneous plane cubics over `F_p`: point counts and smoothness.

use std::fmt;

use thiserror::Error;

use crate::fq::{FieldError, FiniteField, FqElement};
use crate::padic::is_prime;

/// Exponents `(i, j, l)` of `X^i Y^j Z^l`, in coefficient order.
pub const MONOMIALS: [(u32, u32, u32); 10] = [
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CubicError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large for point counting")]
    PrimeTooLarge(u64),
    #[error("the zero form is not a cubic")]
    ZeroForm,
    #[error("t = {t} is zero mod {p}")]
    ZeroParameter { p: u64, t: u64 },
    #[error("cubic is singular")]
    Singular,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCubic {
    p: u64,
    coeffs: [u64; 10],
}

/// A homogeneous form as a list of `(coefficient, exponents)`.
type Form = Vec<(u64, [u32; 3])>;

impl PlaneCubic {
    pub fn new(p: u64, coeffs: [u64; 10]) -> Result<Self, CubicError> {
        if !is_prime(p) {
            return Err(CubicError::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(CubicError::PrimeTooLarge(p));
        }
        let coeffs = coeffs.map(|c| c % p);
        if coeffs.iter().all(|&c| c == 0) {
            return Err(CubicError::ZeroForm);
        }
        Ok(PlaneCubic { p, coeffs })
    }

    /// From integer coefficients, reduced mod `p`.
    pub fn from_signed(p: u64, coeffs: [i64; 10]) -> Result<Self, CubicError> {
        let m = p as i64;
        Self::new(p, coeffs.map(|c| c.rem_euclid(m) as u64))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64; 10] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: u32, j: u32, l: u32) -> u64 {
        MONOMIALS
            .iter()
            .position(|&m| m == (i, j, l))
            .map_or(0, |idx| self.coeffs[idx])
    }

    fn form(&self) -> Form {
        MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, &c)| c != 0)
            .map(|(&(i, j, l), &c)| (c, [i, j, l]))
            .collect()
    }

    fn eval_fp(&self, x: u64, y: u64, z: u64) -> u64 {
        let p = self.p;
        let pw = |b: u64, e: u32| (0..e).fold(1u64, |acc, _| acc * b % p);
        MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .fold(0, |acc, (&(i, j, l), &c)| {
                (acc + c * (pw(x, i) * pw(y, j) % p * pw(z, l) % p)) % p
            })
    }

    /// Zeros among the `p^2 + p + 1` points `(x:y:1)`, `(x:1:0)`, `(1:0:0)`.
    pub fn count_projective_points(&self) -> u64 {
        let p = self.p;
        let affine: u64 = (0..p)
            .map(|x| (0..p).filter(|&y| self.eval_fp(x, y, 1) == 0).count() as u64)
            .sum();
        let infinity = (0..p).filter(|&x| self.eval_fp(x, 1, 0) == 0).count() as u64;
        affine + infinity + u64::from(self.eval_fp(1, 0, 0) == 0)
    }

    /// `F` and its three partial derivatives.
    fn gradient_system(&self) -> [Form; 4] {
        let f = self.form();
        let partial = |v: usize| -> Form {
            f.iter()
                .filter(|(_, e)| e[v] > 0)
                .filter_map(|&(c, e)| {
                    let c = c * u64::from(e[v]) % self.p;
                    let mut e = e;
                    e[v] -= 1;
                    (c != 0).then_some((c, e))
                })
                .collect()
        };
        [f.clone(), partial(0), partial(1), partial(2)]
    }

    /// True when `F`, `F_X`, `F_Y`, `F_Z` have no common zero in
    /// `P^2(F_{p^k})` for any `k <= 4`. A singular point of a plane cubic has
    /// residue degree at most 4, so this decides smoothness.
    pub fn is_smooth(&self) -> Result<bool, CubicError> {
        let system = self.gradient_system();
        for k in 1..=4 {
            let field = FiniteField::new(self.p, k)?;
            if has_common_zero(&field, &system) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p + 1 - #C(F_p)` for a smooth cubic.
    pub fn a_p(&self) -> Result<i64, CubicError> {
        if !self.is_smooth()? {
            return Err(CubicError::Singular);
        }
        Ok(self.p as i64 + 1 - self.count_projective_points() as i64)
    }
}

impl fmt::Display for PlaneCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(i, j, l), &c) in MONOMIALS.iter().zip(&self.coeffs) {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}*")?;
            }
            let mut parts = Vec::new();
            for (name, e) in [("X", i), ("Y", j), ("Z", l)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        write!(f, " over F_{}", self.p)
    }
}

/// Coefficients of the fiber `t(X+Z)(Y+Z)(X+Y+Z) - XYZ` over `F_p`.
pub fn apery_fiber(p: u64, t: u64) -> Result<PlaneCubic, CubicError> {
    if !is_prime(p) {
        return Err(CubicError::NotPrime(p));
    }
    if t.is_multiple_of(p) {
        return Err(CubicError::ZeroParameter { p, t });
    }
    // linear forms as coefficient triples of (X, Y, Z)
    let factors: [[i64; 3]; 3] = [[1, 0, 1], [0, 1, 1], [1, 1, 1]];
    let mut coeffs = [0i64; 10];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let w = factors[0][a] * factors[1][b] * factors[2][c];
                if w == 0 {
                    continue;
                }
                let mut e = [0u32; 3];
                e[a] += 1;
                e[b] += 1;
                e[c] += 1;
                let idx = MONOMIALS
                    .iter()
                    .position(|&m| m == (e[0], e[1], e[2]))
                    .expect("cubic monomial");
                coeffs[idx] += w;
            }
        }
    }
    let t = (t % p) as i64;
    let mut coeffs = coeffs.map(|c| c * t);
    coeffs[4] -= 1;
    PlaneCubic::from_signed(p, coeffs)
}

/// Univariate polynomial over `F_q`, low to high, trailing zeros stripped.
type UPoly = Vec<FqElement>;

fn trim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(FqElement::is_zero) {
        a.pop();
    }
    a
}

fn upoly_rem(field: &FiniteField, a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let inv = field
        .inv(*b.last().expect("nonzero divisor"))
        .expect("nonzero lead");
    while r.len() > db {
        let lead = r.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let q = field.mul(lead, inv);
        let off = r.len() - db;
        for (j, &bj) in b[..db].iter().enumerate() {
            r[off + j] = field.sub(r[off + j], field.mul(q, bj));
        }
    }
    trim(r)
}

fn upoly_gcd(field: &FiniteField, a: UPoly, b: UPoly) -> UPoly {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = upoly_rem(field, &a, &b);
        a = std::mem::replace(&mut b, r);
    }
    a
}

fn upoly_eval(field: &FiniteField, a: &UPoly, x: FqElement) -> FqElement {
    a.iter()
        .rev()
        .fold(field.zero(), |acc, &c| field.add(field.mul(acc, x), c))
}

/// Restriction of `form` to a line, as a polynomial in the free coordinate
/// `v`: the coordinate `free` is `v`, the others take the given values.
fn restrict(field: &FiniteField, form: &Form, free: usize, fixed: [FqElement; 3]) -> UPoly {
    let mut out = vec![field.zero(); 4];
    for &(c, e) in form {
        let mut coeff = field.from_u64(c);
        for v in 0..3 {
            if v != free {
                coeff = field.mul(coeff, field.pow(fixed[v], u64::from(e[v])));
            }
        }
        out[e[free] as usize] = field.add(out[e[free] as usize], coeff);
    }
    trim(out)
}

/// Whether some point of the line has all forms vanishing; the line is
/// parametrized by the coordinate `free`.
fn line_has_common_zero(
    field: &FiniteField,
    system: &[Form],
    free: usize,
    fixed: [FqElement; 3],
) -> bool {
    let g = system
        .iter()
        .map(|form| restrict(field, form, free, fixed))
        .fold(Vec::new(), |g, h| upoly_gcd(field, g, h));
    match g.len() {
        0 => true,
        1 => false,
        _ => field.elements().any(|v| upoly_eval(field, &g, v).is_zero()),
    }
}

/// Whether the forms share a zero in `P^2(F_q)`, sweeping the lines
/// `X = x` on `Z = 1`, then `Z = 0, Y = 1`, then the point `(1:0:0)`.
fn has_common_zero(field: &FiniteField, system: &[Form]) -> bool {
    let (zero, one) = (field.zero(), field.one());
    if field
        .elements()
        .any(|x| line_has_common_zero(field, system, 1, [x, zero, one]))
    {
        return true;
    }
    if line_has_common_zero(field, system, 0, [zero, one, zero]) {
        return true;
    }
    system
        .iter()
        .all(|form| eval_point(field, form, [one, zero, zero]).is_zero())
}

fn eval_point(field: &FiniteField, form: &Form, pt: [FqElement; 3]) -> FqElement {
    form.iter().fold(field.zero(), |acc, &(c, e)| {
        let mut t = field.from_u64(c);
        for v in 0..3 {
            t = field.mul(t, field.pow(pt[v], u64::from(e[v])));
        }
        field.add(acc, t)
    })
}
