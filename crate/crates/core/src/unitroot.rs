//! Approximants `w_s(z) = f_s(z) / f_{s-1}(z^p)` to the analytic continuation
//! of `f(z)/f(z^p)`, and their comparison with unit roots of zeta functions of
//! the Apéry fibers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::apery::apery_numbers_mod;
use crate::cubic::{apery_fiber, CubicError};
use crate::padic::{
    hensel_quadratic_unit_root, is_prime, teichmuller, PadicError, PadicInt, Precision,
};

#[derive(Debug, Error)]
pub enum UnitRootError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("t = {t} is zero mod {p}")]
    ZeroParameter { p: u64, t: u64 },
    #[error("depth s must be at least 1")]
    ZeroDepth,
    #[error("z has precision {have} but depth {need} was requested")]
    PrecisionTooLow { have: u32, need: u32 },
    #[error("sequence has {have} terms but {need} are needed")]
    SequenceTooShort { need: usize, have: usize },
    #[error("f_{s}(z^p) = {value} is not a unit, so z is outside the domain")]
    OutsideDomain { s: u32, value: BigUint },
    #[error("failed to build worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    Cubic(#[from] CubicError),
}

pub type Result<T> = std::result::Result<T, UnitRootError>;

fn need(b: &[BigInt], n: usize) -> Result<()> {
    if b.len() < n {
        return Err(UnitRootError::SequenceTooShort {
            need: n,
            have: b.len(),
        });
    }
    Ok(())
}

fn term_count(p: u64, s: u32) -> usize {
    p.pow(s) as usize
}

/// Whether `f_1(z) != 0 mod p`.
pub fn dwork_domain_test(b: &[BigInt], p: u64, z: u64) -> Result<bool> {
    need(b, p as usize)?;
    let m = BigInt::from(p);
    let z = BigInt::from(z % p);
    let value = b[..p as usize]
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * &z + c).mod_floor(&m));
    Ok(!value.is_zero())
}

/// `f_s(z)` at the precision of `z`.
pub fn eval_truncation(b: &[BigInt], p: u64, s: u32, z: &PadicInt) -> Result<PadicInt> {
    let n = term_count(p, s);
    need(b, n)?;
    let ctx = z.precision();
    let mut acc = PadicInt::zero(ctx);
    for c in b[..n].iter().rev() {
        acc = acc.mul(z)?.add(&PadicInt::new(ctx, c.clone()))?;
    }
    Ok(acc)
}

/// `f_s(z) / f_{s-1}(z^p) mod p^s`.
pub fn omega_approx(b: &[BigInt], p: u64, z: &PadicInt, s: u32) -> Result<PadicInt> {
    if s == 0 {
        return Err(UnitRootError::ZeroDepth);
    }
    if z.k() < s {
        return Err(UnitRootError::PrecisionTooLow {
            have: z.k(),
            need: s,
        });
    }
    let z = z.reduce(s)?;
    let num = eval_truncation(b, p, s, &z)?;
    let den = eval_truncation(b, p, s - 1, &z.pow(p))?;
    let inv = den
        .unit_inverse()
        .map_err(|_| UnitRootError::OutsideDomain {
            s: s - 1,
            value: den.residue().clone(),
        })?;
    Ok(num.mul(&inv)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberStatus {
    Ordinary,
    Supersingular,
    Singular,
}

impl FiberStatus {
    pub fn name(self) -> &'static str {
        match self {
            FiberStatus::Ordinary => "ordinary",
            FiberStatus::Supersingular => "supersingular",
            FiberStatus::Singular => "singular",
        }
    }
}

/// The unit root and `w_s(z_t)` modulo `p^s` at one depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitRootLevel {
    pub s: u32,
    pub unit_root: BigUint,
    pub omega: BigUint,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaReport {
    pub p: u64,
    pub t: u64,
    pub s: u32,
    pub smooth: bool,
    pub points: u64,
    pub status: FiberStatus,
    /// `p + 1 - #E_t(F_p)`, for smooth fibers.
    pub a_p: Option<i64>,
    /// `a_p mod p` and `f_1(t) mod p`, for smooth fibers.
    pub hasse: Option<(u64, u64)>,
    /// Whether `t` lies in the domain `f_1(t) != 0 mod p`.
    pub in_domain: bool,
    /// Unit-root comparisons for `1..=s`; empty unless ordinary.
    pub levels: Vec<UnitRootLevel>,
}

impl ZetaReport {
    pub fn hasse_holds(&self) -> Option<bool> {
        self.hasse.map(|(a, f)| a == f)
    }

    /// Ordinariness and membership in the domain coincide on smooth fibers.
    pub fn consistent(&self) -> bool {
        !self.smooth || (self.status == FiberStatus::Ordinary) == self.in_domain
    }

    /// No check on this fiber failed. Singular and supersingular fibers pass
    /// when the checks that apply to them do.
    pub fn passed(&self) -> bool {
        self.hasse_holds() != Some(false)
            && self.consistent()
            && self.levels.iter().all(|l| l.agree)
    }
}

/// The Apéry numbers needed by [`unit_root_compare_with`]: `b_n mod p^s`
/// for `n < p^s`.
pub fn apery_terms(p: u64, s: u32) -> Vec<BigInt> {
    apery_numbers_mod(term_count(p, s) - 1, &BigInt::from(p).pow(s))
}

/// Counts points on the fiber at `t`, and when it is smooth and ordinary
/// compares the unit root of `T^2 - a_p T + p` with `w_j(z_t)` for `j <= s`.
pub fn unit_root_compare(p: u64, t: u64, s: u32) -> Result<ZetaReport> {
    if !is_prime(p) {
        return Err(UnitRootError::NotPrime(p));
    }
    if s == 0 {
        return Err(UnitRootError::ZeroDepth);
    }
    unit_root_compare_with(&apery_terms(p, s), p, t, s)
}

/// As [`unit_root_compare`], with `b_n mod p^s` for `n < p^s` supplied.
pub fn unit_root_compare_with(b: &[BigInt], p: u64, t: u64, s: u32) -> Result<ZetaReport> {
    if s == 0 {
        return Err(UnitRootError::ZeroDepth);
    }
    if t.is_multiple_of(p) {
        return Err(UnitRootError::ZeroParameter { p, t });
    }
    need(b, term_count(p, s))?;
    let t = t % p;
    let cubic = apery_fiber(p, t)?;
    let smooth = cubic.is_smooth()?;
    let points = cubic.count_projective_points();
    let in_domain = dwork_domain_test(b, p, t)?;
    let mut report = ZetaReport {
        p,
        t,
        s,
        smooth,
        points,
        status: FiberStatus::Singular,
        a_p: None,
        hasse: None,
        in_domain,
        levels: Vec::new(),
    };
    if !smooth {
        return Ok(report);
    }
    let a_p = p as i64 + 1 - points as i64;
    let a_mod = a_p.rem_euclid(p as i64) as u64;
    let f1 = eval_truncation(b, p, 1, &PadicInt::from_u64(&Precision::new(p, 1)?, t))?;
    report.a_p = Some(a_p);
    report.hasse = Some((a_mod, f1.to_u64().expect("residue below p")));
    if a_mod == 0 {
        report.status = FiberStatus::Supersingular;
        return Ok(report);
    }
    report.status = FiberStatus::Ordinary;
    let z = teichmuller(p, t, s)?;
    let a = PadicInt::new(&Precision::new(p, s)?, a_p);
    for j in 1..=s {
        let u = hensel_quadratic_unit_root(&a, j)?;
        let w = omega_approx(b, p, &z, j)?;
        report.levels.push(UnitRootLevel {
            s: j,
            agree: u.residue() == w.residue(),
            unit_root: u.residue().clone(),
            omega: w.residue().clone(),
        });
    }
    Ok(report)
}

/// Reports for every `t` in `1..p`, in order of `t`, on at most `jobs`
/// worker threads (`None` for the default pool).
pub fn unit_root_sweep(p: u64, s: u32, jobs: Option<usize>) -> Result<Vec<ZetaReport>> {
    if !is_prime(p) {
        return Err(UnitRootError::NotPrime(p));
    }
    if s == 0 {
        return Err(UnitRootError::ZeroDepth);
    }
    let b = apery_terms(p, s);
    let run = || -> Result<Vec<ZetaReport>> {
        (1..p)
            .into_par_iter()
            .map(|t| unit_root_compare_with(&b, p, t, s))
            .collect()
    };
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| UnitRootError::Pool(e.to_string()))?
            .install(run),
        None => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apery::apery_numbers;

    #[test]
    fn domain_examples() {
        let b = apery_numbers(20);
        assert!(dwork_domain_test(&b, 5, 0).unwrap());
        // 1 + 3z + 4z^2 + 2z^3 + z^4 mod 5
        let roots: Vec<u64> = (0..5)
            .filter(|&z| !dwork_domain_test(&b, 5, z).unwrap())
            .collect();
        for &z in &roots {
            let v = 1 + 3 * z + 4 * z * z + 2 * z.pow(3) + z.pow(4);
            assert_eq!(v % 5, 0);
        }
        assert_eq!(roots, vec![2]);
        let delta: Vec<BigInt> = (0..20).map(|n| BigInt::from(u8::from(n == 0))).collect();
        assert!((0..7).all(|z| dwork_domain_test(&delta, 7, z).unwrap()));
    }

    #[test]
    fn omega_depth_one() {
        let b = apery_numbers(400);
        let ctx = Precision::new(7, 1).unwrap();
        for z in 0..7 {
            let zp = PadicInt::from_u64(&ctx, z);
            if !dwork_domain_test(&b, 7, z).unwrap() {
                continue;
            }
            let w = omega_approx(&b, 7, &zp, 1).unwrap();
            assert_eq!(w, eval_truncation(&b, 7, 1, &zp).unwrap());
        }
        let z = PadicInt::from_u64(&ctx, 3);
        assert!(matches!(
            omega_approx(&b, 7, &z, 2),
            Err(UnitRootError::PrecisionTooLow { have: 1, need: 2 })
        ));
    }

    #[test]
    fn omega_refines() {
        let b = apery_numbers(7usize.pow(3));
        for t in 1..7 {
            if !dwork_domain_test(&b, 7, t).unwrap() {
                continue;
            }
            let z = teichmuller(7, t, 3).unwrap();
            let w2 = omega_approx(&b, 7, &z, 2).unwrap();
            let w3 = omega_approx(&b, 7, &z, 3).unwrap();
            assert_eq!(w3.reduce(2).unwrap(), w2, "t={t}");
        }
    }

    #[test]
    fn outside_domain_is_reported() {
        let b = apery_numbers(30);
        // z = 2 is a root of f_1 mod 5, and so is 2^5 = 2
        let z = PadicInt::from_u64(&Precision::new(5, 2).unwrap(), 2);
        assert!(matches!(
            omega_approx(&b, 5, &z, 2),
            Err(UnitRootError::OutsideDomain { s: 1, .. })
        ));
    }

    #[test]
    fn compare_at_seven() {
        let reports = unit_root_sweep(7, 3, Some(2)).unwrap();
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(r.smooth);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.status, FiberStatus::Ordinary);
            let a = r.a_p.unwrap();
            assert_eq!(r.levels[0].unit_root, BigUint::from(a.rem_euclid(7) as u64));
        }
        let by_t: Vec<i64> = reports.iter().map(|r| r.a_p.unwrap()).collect();
        assert_eq!(by_t, vec![-2, -2, -2, 3, 3, -2]);
        assert_eq!(reports[0].levels[2].unit_root, BigUint::from(222u32));
        assert_eq!(reports[3].levels[2].omega, BigUint::from(164u32));
    }

    #[test]
    fn singular_fiber_reported() {
        let r = unit_root_compare(5, 2, 2).unwrap();
        assert_eq!(r.status, FiberStatus::Singular);
        assert!(r.levels.is_empty() && r.a_p.is_none());
        assert!(matches!(
            unit_root_compare(5, 0, 1),
            Err(UnitRootError::ZeroParameter { .. })
        ));
    }
}
