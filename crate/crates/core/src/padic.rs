//! Bounded-precision p-adic integers.
//!
//! A [`PadicInt`] is a residue modulo `p^K` that remembers its prime and its
//! precision. Arithmetic never coerces precision: combining values with
//! different `(p, K)` is an error.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("mismatched precision: ({p1}, {k1}) vs ({p2}, {k2})")]
    Mismatch { p1: u64, k1: u32, p2: u64, k2: u32 },
    #[error("{0} is not a p-adic unit")]
    NotUnit(BigUint),
    #[error("teichmuller lift requested for t = {t} divisible by p = {p}")]
    TeichmullerOfZero { t: u64, p: u64 },
}

pub type Result<T> = std::result::Result<T, PadicError>;

/// Deterministic trial-division primality test; primes here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The ring `Z/p^K`, with the prime checked once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Precision {
    p: u64,
    k: u32,
    modulus: BigUint,
}

impl Precision {
    pub fn new(p: u64, k: u32) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(PadicError::NotPrime(p));
        }
        if k == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        Ok(Arc::new(Precision {
            p,
            k,
            modulus: BigUint::from(p).pow(k),
        }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }
}

/// An element of `Z_p` known modulo `p^K`. The residue is kept in `[0, p^K)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicInt {
    ctx: Arc<Precision>,
    residue: BigUint,
}

impl fmt::Debug for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.residue, self.ctx.p, self.ctx.k)
    }
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl PadicInt {
    pub fn new(ctx: &Arc<Precision>, value: impl Into<BigInt>) -> Self {
        let m = BigInt::from(ctx.modulus.clone());
        let r = value.into().mod_floor(&m);
        PadicInt {
            ctx: Arc::clone(ctx),
            residue: r.to_biguint().expect("mod_floor is nonnegative"),
        }
    }

    pub fn from_u64(ctx: &Arc<Precision>, value: u64) -> Self {
        PadicInt {
            ctx: Arc::clone(ctx),
            residue: BigUint::from(value) % &ctx.modulus,
        }
    }

    pub fn zero(ctx: &Arc<Precision>) -> Self {
        PadicInt {
            ctx: Arc::clone(ctx),
            residue: BigUint::zero(),
        }
    }

    pub fn one(ctx: &Arc<Precision>) -> Self {
        Self::from_u64(ctx, 1)
    }

    pub fn precision(&self) -> &Arc<Precision> {
        &self.ctx
    }

    pub fn p(&self) -> u64 {
        self.ctx.p
    }

    pub fn k(&self) -> u32 {
        self.ctx.k
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.residue.to_u64()
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ctx.p != other.ctx.p || self.ctx.k != other.ctx.k {
            return Err(PadicError::Mismatch {
                p1: self.ctx.p,
                k1: self.ctx.k,
                p2: other.ctx.p,
                k2: other.ctx.k,
            });
        }
        Ok(())
    }

    fn with_residue(&self, residue: BigUint) -> Self {
        PadicInt {
            ctx: Arc::clone(&self.ctx),
            residue,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_residue((&self.residue + &other.residue) % &self.ctx.modulus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = &self.ctx.modulus;
        Ok(self.with_residue((&self.residue + m - &other.residue) % m))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_residue((&self.residue * &other.residue) % &self.ctx.modulus))
    }

    pub fn neg(&self) -> Self {
        let m = &self.ctx.modulus;
        self.with_residue((m - &self.residue) % m)
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with_residue(self.residue.modpow(&BigUint::from(e), &self.ctx.modulus))
    }

    /// Largest `v <= K` with `p^v` dividing the residue. The zero residue
    /// reports `K`, meaning only "at least K".
    pub fn valuation(&self) -> u32 {
        let p = BigUint::from(self.ctx.p);
        let mut r = self.residue.clone();
        let mut v = 0;
        while v < self.ctx.k && !r.is_zero() {
            let (q, rem) = r.div_rem(&p);
            if !rem.is_zero() {
                return v;
            }
            r = q;
            v += 1;
        }
        self.ctx.k
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == 0
    }

    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(PadicError::NotUnit(self.residue.clone()));
        }
        let m = BigInt::from(self.ctx.modulus.clone());
        let a = BigInt::from(self.residue.clone());
        let g = a.extended_gcd(&m);
        debug_assert!(g.gcd.is_one());
        Ok(PadicInt::new(&self.ctx, g.x))
    }

    /// Same value known to a lower precision `k <= K`.
    pub fn reduce(&self, k: u32) -> Result<Self> {
        if k > self.ctx.k {
            return Err(PadicError::Mismatch {
                p1: self.ctx.p,
                k1: self.ctx.k,
                p2: self.ctx.p,
                k2: k,
            });
        }
        let ctx = Precision::new(self.ctx.p, k)?;
        let residue = &self.residue % &ctx.modulus;
        Ok(PadicInt { ctx, residue })
    }
}

/// Teichmüller lift of `t` mod `p`: the `(p-1)`-st root of unity congruent to
/// `t`, obtained by iterating `z -> z^p` until it stabilises mod `p^K`.
pub fn teichmuller(p: u64, t: u64, k: u32) -> Result<PadicInt> {
    let ctx = Precision::new(p, k)?;
    if t.is_multiple_of(p) {
        return Err(PadicError::TeichmullerOfZero { t, p });
    }
    let mut z = PadicInt::from_u64(&ctx, t % p);
    // each step gains one digit, so K steps always suffice
    for _ in 0..=k {
        let next = z.pow(p);
        if next == z {
            break;
        }
        z = next;
    }
    Ok(z)
}

/// The unit root `u` of `T^2 - a T + p` modulo `p^K`, for `a` a unit
/// (ordinary case), by Newton iteration from `u = a mod p`.
pub fn hensel_quadratic_unit_root(a: &PadicInt, k: u32) -> Result<PadicInt> {
    if !a.is_unit() {
        return Err(PadicError::NotUnit(a.residue.clone()));
    }
    let ctx = Precision::new(a.p(), k)?;
    let a_big = BigInt::from(a.residue.clone());
    let a = PadicInt::new(&ctx, a_big.clone());
    let p = PadicInt::from_u64(&ctx, ctx.p());
    let two = PadicInt::from_u64(&ctx, 2);
    let mut u = PadicInt::new(&ctx, a_big.mod_floor(&BigInt::from(ctx.p())));
    // quadratic convergence: the number of correct digits doubles per step
    let mut correct = 1u32;
    while correct < k {
        let value = u.mul(&u)?.sub(&a.mul(&u)?)?.add(&p)?;
        let slope = two.mul(&u)?.sub(&a)?;
        u = u.sub(&value.mul(&slope.unit_inverse()?)?)?;
        correct *= 2;
    }
    Ok(u)
}
