//! Sparse multivariate Laurent polynomials over `Z` or `Z/p^K`, and truncated
//! power series over `Z/p^K`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::padic::{PadicError, PadicInt, Precision};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {0} vs {1}")]
    Arity(usize, usize),
    #[error("coefficient ring mismatch: {0} vs {1}")]
    Ring(String, String),
    #[error("series shape mismatch")]
    SeriesShape,
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(BigUint),
    #[error("monomial coefficient {0} is not invertible")]
    NonUnitMonomial(BigInt),
    #[error("negative power of a non-monomial")]
    NegativePower,
    #[error(transparent)]
    Padic(#[from] PadicError),
}

pub type Result<T> = std::result::Result<T, PolyError>;

/// Exponent vector of a Laurent monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(arity: usize) -> Self {
        ExponentVector(vec![0; arity])
    }

    pub fn unit(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        ExponentVector(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, m: i64) -> Self {
        ExponentVector(self.0.iter().map(|x| x * m).collect())
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Coefficient ring of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffRing {
    Exact,
    Modular(Arc<Precision>),
}

impl CoeffRing {
    pub fn modular(p: u64, k: u32) -> Result<Self> {
        Ok(CoeffRing::Modular(Precision::new(p, k)?))
    }

    fn reduce(&self, c: BigInt) -> BigInt {
        match self {
            CoeffRing::Exact => c,
            CoeffRing::Modular(ctx) => c.mod_floor(&BigInt::from(ctx.modulus().clone())),
        }
    }

    fn small_modulus(&self) -> Option<u64> {
        match self {
            CoeffRing::Modular(ctx) => ctx.modulus().to_u64().filter(|&m| m < 1 << 63),
            CoeffRing::Exact => None,
        }
    }

    /// Inverse of `c` in the ring, when it exists.
    pub fn invert(&self, c: &BigInt) -> Option<BigInt> {
        match self {
            CoeffRing::Exact => {
                if c.abs().is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            CoeffRing::Modular(ctx) => {
                let x = PadicInt::new(ctx, c.clone());
                x.unit_inverse()
                    .ok()
                    .map(|inv| BigInt::from(inv.residue().clone()))
            }
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Exact => write!(f, "Z"),
            CoeffRing::Modular(ctx) => write!(f, "Z/{}^{}", ctx.p(), ctx.k()),
        }
    }
}

/// A Laurent polynomial in `arity` variables, stored sparsely in
/// lexicographic exponent order with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    arity: usize,
    ring: CoeffRing,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(arity: usize, ring: CoeffRing) -> Self {
        LaurentPoly {
            arity,
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, ring: CoeffRing, c: impl Into<BigInt>) -> Self {
        Self::monomial(arity, ring, ExponentVector::zero(arity), c)
    }

    pub fn one(arity: usize, ring: CoeffRing) -> Self {
        Self::constant(arity, ring, 1)
    }

    pub fn monomial(
        arity: usize,
        ring: CoeffRing,
        exponent: ExponentVector,
        c: impl Into<BigInt>,
    ) -> Self {
        assert_eq!(exponent.arity(), arity);
        let mut poly = Self::zero(arity, ring);
        poly.add_term(exponent, c.into());
        poly
    }

    /// Variable `x_{index+1}` (zero-based index).
    pub fn variable(arity: usize, ring: CoeffRing, index: usize) -> Self {
        Self::monomial(arity, ring, ExponentVector::unit(arity, index), 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, E>(arity: usize, ring: CoeffRing, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, BigInt)>,
        E: Into<ExponentVector>,
    {
        let mut poly = Self::zero(arity, ring);
        for (e, c) in terms {
            let e = e.into();
            if e.arity() != arity {
                return Err(PolyError::Arity(arity, e.arity()));
            }
            poly.add_term(e, c);
        }
        Ok(poly)
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                let c = self.ring.reduce(c);
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                let sum = self.ring.reduce(slot.get() + c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn as_monomial(&self) -> Option<(&ExponentVector, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(PolyError::Arity(self.arity, other.arity));
        }
        if self.ring != other.ring {
            return Err(PolyError::Ring(
                self.ring.to_string(),
                other.ring.to_string(),
            ));
        }
        Ok(())
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Result<BigInt> {
        if e.arity() != self.arity {
            return Err(PolyError::Arity(self.arity, e.arity()));
        }
        Ok(self.terms.get(e).cloned().unwrap_or_default())
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&ExponentVector::zero(self.arity))
            .cloned()
            .unwrap_or_default()
    }

    /// Same polynomial with coefficients reduced into `ring`. Exact to
    /// modular, or modular to a lower precision of the same prime.
    pub fn to_ring(&self, ring: &CoeffRing) -> Result<Self> {
        if let (CoeffRing::Modular(a), CoeffRing::Modular(b)) = (&self.ring, ring) {
            if a.p() != b.p() || b.k() > a.k() {
                return Err(PolyError::Ring(self.ring.to_string(), ring.to_string()));
            }
        }
        if let (CoeffRing::Modular(_), CoeffRing::Exact) = (&self.ring, ring) {
            return Err(PolyError::Ring(self.ring.to_string(), ring.to_string()));
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), ring.reduce(c.clone())))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(LaurentPoly {
            arity: self.arity,
            ring: ring.clone(),
            terms,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let slot = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *slot = self.ring.reduce(&*slot + c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            arity: self.arity,
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.clone(), self.ring.reduce(x * c)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        LaurentPoly {
            arity: self.arity,
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.add(shift), c.clone()))
            .collect();
        LaurentPoly {
            arity: self.arity,
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `A(x^m)`: every exponent vector scaled by `m`.
    pub fn substitute_power(&self, m: u64) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        let m = i64::try_from(m).expect("substitution power fits in i64");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.scale(m), c.clone()))
            .collect();
        LaurentPoly {
            arity: self.arity,
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Per-coordinate bounds of the support.
    pub fn bounds(&self) -> Option<Vec<(i64, i64)>> {
        let mut iter = self.terms.keys();
        let first = iter.next()?;
        let mut b: Vec<(i64, i64)> = first.entries().iter().map(|&x| (x, x)).collect();
        for e in iter {
            for (slot, &x) in b.iter_mut().zip(e.entries()) {
                slot.0 = slot.0.min(x);
                slot.1 = slot.1.max(x);
            }
        }
        Some(b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity, self.ring.clone()));
        }
        let layout = PackedLayout::new(&self.bounds().unwrap(), &other.bounds().unwrap());
        let terms = match (layout, self.ring.small_modulus()) {
            (Some(layout), Some(m)) => mul_packed_mod(self, other, &layout, m),
            (Some(layout), None) => mul_packed_big(self, other, &layout, &self.ring),
            (None, _) => mul_generic(self, other),
        };
        Ok(LaurentPoly {
            arity: self.arity,
            ring: self.ring.clone(),
            terms,
        })
    }

    /// `A^n`. Small bases are multiplied in one factor at a time, which is
    /// cheaper for sparse inputs than squaring the large intermediate powers;
    /// larger bases use binary powering.
    pub fn pow(&self, n: u64) -> Self {
        let one = Self::one(self.arity, self.ring.clone());
        if n == 0 {
            return one;
        }
        if let Some((e, c)) = self.as_monomial() {
            let c = match &self.ring {
                CoeffRing::Exact => num_traits::pow::Pow::pow(c, n),
                CoeffRing::Modular(ctx) => {
                    BigInt::from(PadicInt::new(ctx, c.clone()).pow(n).residue().clone())
                }
            };
            return Self::monomial(self.arity, self.ring.clone(), e.scale(n as i64), c);
        }
        if (self.len() as u64) <= n {
            let mut acc = self.clone();
            for _ in 1..n {
                acc = acc.mul(self).expect("same ring");
            }
            return acc;
        }
        let mut result = one;
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// `A^n` for a possibly negative `n`; negative powers need a monomial
    /// with an invertible coefficient.
    pub fn pow_signed(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            return Ok(self.pow(n as u64));
        }
        let (e, c) = self.as_monomial().ok_or(PolyError::NegativePower)?;
        let inv = self
            .ring
            .invert(c)
            .ok_or_else(|| PolyError::NonUnitMonomial(c.clone()))?;
        Ok(Self::monomial(self.arity, self.ring.clone(), e.neg(), inv).pow(n.unsigned_abs()))
    }

    /// Divides by a monomial whose coefficient is a unit of the ring.
    pub fn div_monomial(&self, divisor: &Self) -> Result<Self> {
        self.compatible(divisor)?;
        let inverse = divisor.pow_signed(-1)?;
        self.mul(&inverse)
    }

    /// `[A * B]_0` without forming the product.
    pub fn constant_term_of_product(&self, other: &Self) -> Result<BigInt> {
        self.compatible(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = BigInt::zero();
        for (e, c) in &small.terms {
            if let Some(d) = large.terms.get(&e.neg()) {
                acc += c * d;
            }
        }
        Ok(self.ring.reduce(acc))
    }

    /// Smallest p-adic valuation among the coefficients, `None` for zero.
    /// Capped at the precision in modular mode.
    pub fn min_valuation(&self, p: u64) -> Option<u32> {
        let p = BigInt::from(p);
        let cap = match &self.ring {
            CoeffRing::Modular(ctx) => ctx.k(),
            CoeffRing::Exact => u32::MAX,
        };
        self.terms
            .values()
            .map(|c| {
                let mut v = 0u32;
                let mut x = c.clone();
                while v < cap && !x.is_zero() {
                    let (q, r) = x.div_rem(&p);
                    if !r.is_zero() {
                        break;
                    }
                    x = q;
                    v += 1;
                }
                v
            })
            .min()
    }

    /// True when every coefficient is divisible by `p^s`.
    pub fn divisible_by(&self, p: u64, s: u32) -> bool {
        let m = BigInt::from(p).pow(s);
        self.terms.values().all(|c| c.is_multiple_of(&m))
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical form, accepted back by the parser: terms in increasing
    /// lexicographic exponent order, `x<i>^<e>` factors joined with `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == Sign::Minus;
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !magnitude.is_one() || e.is_zero() {
                factors.push(magnitude.to_string());
            }
            for (j, &x) in e.entries().iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(format!("x{}", j + 1)),
                    _ => factors.push(format!("x{}^{}", j + 1, x)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Mixed-radix packing of exponent vectors of a product into one `u64` key.
/// The first coordinate is most significant, so key order is lexicographic.
struct PackedLayout {
    lo_a: Vec<i64>,
    lo_b: Vec<i64>,
    lo: Vec<i64>,
    radix: Vec<u64>,
    stride: Vec<u64>,
    total: u64,
}

impl PackedLayout {
    fn new(a: &[(i64, i64)], b: &[(i64, i64)]) -> Option<Self> {
        let d = a.len();
        let mut radix = Vec::with_capacity(d);
        for i in 0..d {
            let width = (a[i].1 - a[i].0).checked_add(b[i].1 - b[i].0)?;
            radix.push(u64::try_from(width).ok()?.checked_add(1)?);
        }
        let mut stride = vec![1u64; d];
        let mut total = 1u64;
        for i in (0..d).rev() {
            stride[i] = total;
            total = total.checked_mul(radix[i])?;
        }
        Some(PackedLayout {
            lo_a: a.iter().map(|x| x.0).collect(),
            lo_b: b.iter().map(|x| x.0).collect(),
            lo: a.iter().zip(b).map(|(x, y)| x.0 + y.0).collect(),
            radix,
            stride,
            total,
        })
    }

    fn pack(&self, e: &ExponentVector, lo: &[i64]) -> u64 {
        e.entries()
            .iter()
            .zip(lo)
            .zip(&self.stride)
            .map(|((&x, &l), &s)| (x - l) as u64 * s)
            .sum()
    }

    fn unpack(&self, key: u64) -> ExponentVector {
        ExponentVector(
            (0..self.lo.len())
                .map(|i| ((key / self.stride[i]) % self.radix[i]) as i64 + self.lo[i])
                .collect(),
        )
    }

    fn use_dense(&self, pairs: usize, max_cells: u64) -> bool {
        self.total <= max_cells && self.total <= 16 * pairs as u64
    }
}

fn packed_operands(
    a: &LaurentPoly,
    b: &LaurentPoly,
    layout: &PackedLayout,
) -> (Vec<u64>, Vec<u64>) {
    let ka = a
        .terms
        .keys()
        .map(|e| layout.pack(e, &layout.lo_a))
        .collect();
    let kb = b
        .terms
        .keys()
        .map(|e| layout.pack(e, &layout.lo_b))
        .collect();
    (ka, kb)
}

fn mul_packed_mod(
    a: &LaurentPoly,
    b: &LaurentPoly,
    layout: &PackedLayout,
    m: u64,
) -> BTreeMap<ExponentVector, BigInt> {
    let (ka, kb) = packed_operands(a, b, layout);
    let ca: Vec<u64> = a.terms.values().map(|c| c.to_u64().unwrap()).collect();
    let cb: Vec<u64> = b.terms.values().map(|c| c.to_u64().unwrap()).collect();
    // Below 2^32 the products fit in u64 and the reduction can wait.
    let lazy = m < 1 << 32;
    let product = |x: u64, y: u64| -> u128 {
        if lazy {
            (x * y) as u128
        } else {
            (x as u128 * y as u128) % m as u128
        }
    };
    let pairs = ka.len() * kb.len();
    let mut out = Vec::new();
    if layout.use_dense(pairs, 1 << 22) {
        let mut acc = vec![0u128; layout.total as usize];
        for (&k1, &c1) in ka.iter().zip(&ca) {
            for (&k2, &c2) in kb.iter().zip(&cb) {
                acc[(k1 + k2) as usize] += product(c1, c2);
            }
        }
        for (key, v) in acc.into_iter().enumerate() {
            let r = (v % m as u128) as u64;
            if r != 0 {
                out.push((key as u64, r));
            }
        }
    } else {
        let mut acc: HashMap<u64, u128> = HashMap::with_capacity(ka.len() + kb.len());
        for (&k1, &c1) in ka.iter().zip(&ca) {
            for (&k2, &c2) in kb.iter().zip(&cb) {
                *acc.entry(k1 + k2).or_insert(0) += product(c1, c2);
            }
        }
        out.extend(
            acc.into_iter()
                .map(|(k, v)| (k, (v % m as u128) as u64))
                .filter(|&(_, r)| r != 0),
        );
    }
    out.into_iter()
        .map(|(k, c)| (layout.unpack(k), BigInt::from(c)))
        .collect()
}

fn mul_packed_big(
    a: &LaurentPoly,
    b: &LaurentPoly,
    layout: &PackedLayout,
    ring: &CoeffRing,
) -> BTreeMap<ExponentVector, BigInt> {
    let (ka, kb) = packed_operands(a, b, layout);
    let ca: Vec<&BigInt> = a.terms.values().collect();
    let cb: Vec<&BigInt> = b.terms.values().collect();
    let pairs = ka.len() * kb.len();
    let mut out = Vec::new();
    if layout.use_dense(pairs, 1 << 20) {
        let mut acc = vec![BigInt::zero(); layout.total as usize];
        for (&k1, &c1) in ka.iter().zip(&ca) {
            for (&k2, &c2) in kb.iter().zip(&cb) {
                acc[(k1 + k2) as usize] += c1 * c2;
            }
        }
        for (key, v) in acc.into_iter().enumerate() {
            let v = ring.reduce(v);
            if !v.is_zero() {
                out.push((key as u64, v));
            }
        }
    } else {
        let mut acc: HashMap<u64, BigInt> = HashMap::new();
        for (&k1, &c1) in ka.iter().zip(&ca) {
            for (&k2, &c2) in kb.iter().zip(&cb) {
                *acc.entry(k1 + k2).or_default() += c1 * c2;
            }
        }
        out.extend(
            acc.into_iter()
                .map(|(k, v)| (k, ring.reduce(v)))
                .filter(|(_, v)| !v.is_zero()),
        );
    }
    out.into_iter()
        .map(|(k, c)| (layout.unpack(k), c))
        .collect()
}

fn mul_generic(a: &LaurentPoly, b: &LaurentPoly) -> BTreeMap<ExponentVector, BigInt> {
    let mut acc: HashMap<ExponentVector, BigInt> = HashMap::new();
    for (e1, c1) in &a.terms {
        for (e2, c2) in &b.terms {
            *acc.entry(e1.add(e2)).or_default() += c1 * c2;
        }
    }
    acc.into_iter()
        .map(|(e, c)| (e, a.ring.reduce(c)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Constant terms `[A^n]_0` for `n = 0..=n_max`, with coefficients in `ring`.
///
/// The running power is multiplied by `A` once per step. Terms that can no
/// longer reach the origin in the remaining steps are dropped, so the running
/// polynomial is only `A^n` up to terms that cannot affect later constant terms.
pub fn constant_term_sequence(
    a: &LaurentPoly,
    n_max: usize,
    ring: &CoeffRing,
) -> Result<Vec<BigInt>> {
    let base = a.to_ring(ring)?;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut running = LaurentPoly::one(a.arity(), ring.clone());
    out.push(running.constant_term());
    let Some(bounds) = base.bounds() else {
        out.resize(n_max + 1, BigInt::zero());
        return Ok(out);
    };
    for n in 1..=n_max {
        running = running.mul(&base)?;
        let remaining = (n_max - n) as i64;
        running.terms.retain(|e, _| {
            e.entries()
                .iter()
                .zip(&bounds)
                .all(|(&x, &(lo, hi))| -remaining * hi <= x && x <= -remaining * lo)
        });
        out.push(running.constant_term());
    }
    Ok(out)
}

/// Truncated power series `c_0 + c_1 X + ... + c_N X^N` over `Z/p^K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    ctx: Arc<Precision>,
    coeffs: Vec<BigUint>,
}

impl TruncSeries {
    /// Series with cutoff `n`; missing coefficients are zero, extra ones
    /// beyond `X^n` are dropped.
    pub fn new(ctx: &Arc<Precision>, coeffs: &[BigInt], n: usize) -> Self {
        let m = BigInt::from(ctx.modulus().clone());
        let mut c: Vec<BigUint> = coeffs
            .iter()
            .take(n + 1)
            .map(|x| x.mod_floor(&m).to_biguint().unwrap())
            .collect();
        c.resize(n + 1, BigUint::zero());
        TruncSeries {
            ctx: Arc::clone(ctx),
            coeffs: c,
        }
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn precision(&self) -> &Arc<Precision> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx || self.coeffs.len() != other.coeffs.len() {
            return Err(PolyError::SeriesShape);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.ctx.modulus();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % m)
            .collect();
        Ok(TruncSeries {
            ctx: Arc::clone(&self.ctx),
            coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len();
        let m = self.ctx.modulus();
        let mut out = vec![BigUint::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        for c in &mut out {
            *c %= m;
        }
        Ok(TruncSeries {
            ctx: Arc::clone(&self.ctx),
            coeffs: out,
        })
    }

    /// `F(X^p)` truncated at the same cutoff.
    pub fn compose_x_pow(&self, p: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![BigUint::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(p) {
                Some(j) if j < n => out[j] = c.clone(),
                _ => break,
            }
        }
        TruncSeries {
            ctx: Arc::clone(&self.ctx),
            coeffs: out,
        }
    }

    /// `G` with `F G = 1` up to the cutoff, by `g_n = -c_0^{-1} sum_{i=1}^n c_i g_{n-i}`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = PadicInt::new(&self.ctx, BigInt::from(self.coeffs[0].clone()));
        let inv0 = c0
            .unit_inverse()
            .map_err(|_| PolyError::NonUnitConstant(self.coeffs[0].clone()))?
            .residue()
            .clone();
        let m = self.ctx.modulus();
        let n = self.coeffs.len();
        let mut g: Vec<BigUint> = Vec::with_capacity(n);
        g.push(inv0.clone());
        for k in 1..n {
            let mut acc = BigUint::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &g[k - i];
            }
            let acc = acc % m;
            let neg = (m - acc) % m;
            g.push(neg * &inv0 % m);
        }
        Ok(TruncSeries {
            ctx: Arc::clone(&self.ctx),
            coeffs: g,
        })
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(&[i64], i64)], ring: CoeffRing) -> LaurentPoly {
        let d = terms.first().map(|t| t.0.len()).unwrap_or(1);
        LaurentPoly::from_terms(
            d,
            ring,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
        .unwrap()
    }

    fn x_plus_inv() -> LaurentPoly {
        poly(&[(&[1], 1), (&[-1], 1)], CoeffRing::Exact)
    }

    fn apery() -> LaurentPoly {
        // (1+x)(1+y)(1+x+y)/(xy), expanded by hand
        poly(
            &[
                (&[-1, -1], 1),
                (&[0, -1], 2),
                (&[1, -1], 1),
                (&[-1, 0], 2),
                (&[0, 0], 3),
                (&[1, 0], 1),
                (&[-1, 1], 1),
                (&[0, 1], 1),
            ],
            CoeffRing::Exact,
        )
    }

    #[test]
    fn difference_of_squares() {
        let a = x_plus_inv();
        let b = poly(&[(&[1], 1), (&[-1], -1)], CoeffRing::Exact);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod, poly(&[(&[2], 1), (&[-2], -1)], CoeffRing::Exact));
    }

    #[test]
    fn add_inverse_is_empty() {
        let a = apery();
        assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn square_mod_four() {
        let ring = CoeffRing::modular(2, 2).unwrap();
        let a = poly(&[(&[1], 1), (&[0], 1)], ring.clone());
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, poly(&[(&[2], 1), (&[1], 2), (&[0], 1)], ring));
    }

    #[test]
    fn mismatches_are_errors() {
        let a = x_plus_inv();
        let b = apery();
        assert!(matches!(a.add(&b), Err(PolyError::Arity(1, 2))));
        let m = a.to_ring(&CoeffRing::modular(3, 1).unwrap()).unwrap();
        assert!(matches!(a.mul(&m), Err(PolyError::Ring(..))));
        assert!(a.coefficient(&ExponentVector::new(vec![0, 0])).is_err());
    }

    #[test]
    fn powers() {
        let a = x_plus_inv();
        assert_eq!(a.pow(0), LaurentPoly::one(1, CoeffRing::Exact));
        assert_eq!(
            a.pow(2),
            poly(&[(&[2], 1), (&[0], 2), (&[-2], 1)], CoeffRing::Exact)
        );
        let ap = apery().pow(1);
        assert_eq!(ap.len(), 8);
        assert_eq!(ap.constant_term(), BigInt::from(3));
    }

    #[test]
    fn binary_and_iterated_powers_agree() {
        // a base with more terms than the exponent takes the binary route
        let a = apery().pow(3);
        assert!(a.len() as u64 > 4);
        let mut iterated = LaurentPoly::one(2, CoeffRing::Exact);
        for _ in 0..4 {
            iterated = iterated.mul(&a).unwrap();
        }
        assert_eq!(a.pow(4), iterated);
    }

    #[test]
    fn substitution() {
        let a = x_plus_inv();
        assert_eq!(
            a.substitute_power(2),
            poly(&[(&[2], 1), (&[-2], 1)], CoeffRing::Exact)
        );
        assert_eq!(a.substitute_power(1), a);
        let b = poly(&[(&[0, 0], 3), (&[1, -1], 1)], CoeffRing::Exact);
        assert_eq!(
            b.substitute_power(3),
            poly(&[(&[0, 0], 3), (&[3, -3], 1)], CoeffRing::Exact)
        );
    }

    #[test]
    fn coefficients() {
        assert_eq!(x_plus_inv().pow(2).constant_term(), BigInt::from(2));
        assert_eq!(apery().constant_term(), BigInt::from(3));
        let x2 = poly(&[(&[2], 1)], CoeffRing::Exact);
        assert_eq!(
            x2.coefficient(&ExponentVector::new(vec![0])).unwrap(),
            BigInt::zero()
        );
    }

    #[test]
    fn sequences() {
        let seq = constant_term_sequence(&x_plus_inv(), 4, &CoeffRing::Exact).unwrap();
        assert_eq!(seq, [1, 0, 2, 0, 6].map(BigInt::from));
        let seq = constant_term_sequence(&apery(), 4, &CoeffRing::Exact).unwrap();
        assert_eq!(seq, [1, 3, 19, 147, 1251].map(BigInt::from));
        let five = LaurentPoly::constant(1, CoeffRing::Exact, 5);
        let seq = constant_term_sequence(&five, 2, &CoeffRing::Exact).unwrap();
        assert_eq!(seq, [1, 5, 25].map(BigInt::from));
        let zero = LaurentPoly::zero(1, CoeffRing::Exact);
        let seq = constant_term_sequence(&zero, 2, &CoeffRing::Exact).unwrap();
        assert_eq!(seq, [1, 0, 0].map(BigInt::from));
    }

    #[test]
    fn modular_sequence_matches_reduced_exact() {
        let exact = constant_term_sequence(&apery(), 30, &CoeffRing::Exact).unwrap();
        let ring = CoeffRing::modular(3, 4).unwrap();
        let modular = constant_term_sequence(&apery(), 30, &ring).unwrap();
        for (a, b) in exact.iter().zip(&modular) {
            assert_eq!(a.mod_floor(&BigInt::from(81)), *b);
        }
    }

    #[test]
    fn printer() {
        assert_eq!(
            apery().to_string(),
            "x1^-1*x2^-1 + 2*x1^-1 + x1^-1*x2 + 2*x2^-1 + 3 + x2 + x1*x2^-1 + x1"
        );
        assert_eq!(LaurentPoly::zero(1, CoeffRing::Exact).to_string(), "0");
        assert_eq!(
            poly(&[(&[0], -1), (&[1], -2)], CoeffRing::Exact).to_string(),
            "-1 - 2*x1"
        );
    }

    fn ctx(p: u64, k: u32) -> Arc<Precision> {
        Precision::new(p, k).unwrap()
    }

    fn series(p: u64, k: u32, c: &[i64], n: usize) -> TruncSeries {
        let c: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        TruncSeries::new(&ctx(p, k), &c, n)
    }

    #[test]
    fn geometric_series() {
        let f = series(5, 2, &[1, -1], 3);
        assert_eq!(f.invert().unwrap(), series(5, 2, &[1, 1, 1, 1], 3));
    }

    #[test]
    fn compose() {
        let f = series(5, 1, &[1, 3], 10);
        assert_eq!(f.compose_x_pow(5), series(5, 1, &[1, 0, 0, 0, 0, 3], 10));
    }

    #[test]
    fn invert_non_unit() {
        let f = series(5, 2, &[0, 1], 3);
        assert!(matches!(f.invert(), Err(PolyError::NonUnitConstant(_))));
        let f = series(5, 2, &[10, 1], 3);
        assert!(f.invert().is_err());
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-3i64..=3, -3i64..=3), -5i64..=5), 0..6).prop_map(|terms| {
            LaurentPoly::from_terms(
                2,
                CoeffRing::Exact,
                terms
                    .into_iter()
                    .map(|((a, b), c)| (vec![a, b], BigInt::from(c))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn constant_term_is_convolution(a in small_poly(), b in small_poly()) {
            // dense oracle over the box [-6, 6]^2
            let mut expected = BigInt::zero();
            for i in -6i64..=6 {
                for j in -6i64..=6 {
                    let e = ExponentVector::new(vec![i, j]);
                    expected += a.coefficient(&e).unwrap() * b.coefficient(&e.neg()).unwrap();
                }
            }
            prop_assert_eq!(a.mul(&b).unwrap().constant_term(), expected.clone());
            prop_assert_eq!(a.constant_term_of_product(&b).unwrap(), expected);
        }

        #[test]
        fn powers_add(a in small_poly(), m in 0u64..4, n in 0u64..4) {
            prop_assert_eq!(a.pow(m + n), a.pow(m).mul(&a.pow(n)).unwrap());
        }

        #[test]
        fn modular_mul_is_reduced_exact_mul(a in small_poly(), b in small_poly(), pi in 0usize..3, k in 1u32..5) {
            let ring = CoeffRing::modular([2u64, 3, 5][pi], k).unwrap();
            let lhs = a.to_ring(&ring).unwrap().mul(&b.to_ring(&ring).unwrap()).unwrap();
            prop_assert_eq!(lhs, a.mul(&b).unwrap().to_ring(&ring).unwrap());
        }

        #[test]
        fn series_times_inverse(c in prop::collection::vec(any::<u16>(), 1..20), pi in 0usize..3, k in 1u32..4) {
            let p = [2u64, 3, 5][pi];
            let mut c: Vec<i64> = c.into_iter().map(|x| x as i64).collect();
            if c[0] % p as i64 == 0 {
                c[0] += 1;
            }
            let f = series(p, k, &c, c.len() - 1);
            prop_assert!(f.mul(&f.invert().unwrap()).unwrap().is_one());
        }
    }
}
