//! Congruences between truncations `f_s(X) = sum_{n < p^s} b_n X^n` of the
//! generating series of constant terms, and between the terms themselves.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::ghost::{c_from_b, digits, length_p, reconstruct_b, GhostContext, GhostError};
use crate::laurent::{constant_term_sequence, CoeffRing, LaurentPoly, PolyError, TruncSeries};
use crate::padic::{PadicError, Precision};
use crate::polytope::is_admissible;

#[derive(Debug, Error)]
pub enum CongruenceError {
    #[error("polynomial is not admissible: {0}; pass --force to run anyway")]
    NotAdmissible(String),
    #[error("b_0 = {0} is not a unit mod p, so f(X^p) has no inverse and the quotient form c1 is ill-posed; c2 remains checkable")]
    NonUnitLeading(BigInt),
    #[error("working precision K = {k} is below the depth s = {s}")]
    PrecisionBelowDepth { k: u32, s: u32 },
    #[error("depth s must be at least 1")]
    ZeroDepth,
    #[error("sequence has {have} terms but {need} are needed")]
    SequenceTooShort { need: usize, have: usize },
    #[error("{0} is too large")]
    TooLarge(&'static str),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ghost(#[from] GhostError),
}

pub type Result<T> = std::result::Result<T, CongruenceError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    C1,
    C2,
    Dig2,
    Digit,
    Lemma,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::C1 => "c1",
            CheckKind::C2 => "c2",
            CheckKind::Dig2 => "dig2",
            CheckKind::Digit => "digit",
            CheckKind::Lemma => "lemma",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaProperty {
    /// `c_n` from the indecomposable sum against `c_n` from the sequence.
    Agreement,
    /// `c_n = 0 mod p^{l(n)-1}`.
    Valuation,
    /// The digit-partition sum of `c` against `b_n`.
    Reconstruction,
}

impl LemmaProperty {
    pub fn name(self) -> &'static str {
        match self {
            LemmaProperty::Agreement => "agreement",
            LemmaProperty::Valuation => "valuation",
            LemmaProperty::Reconstruction => "reconstruction",
        }
    }
}

/// The first offending coefficient or index, with both sides reduced modulo
/// the modulus `p^e` of the comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Coefficient {
        power: usize,
        lhs: BigInt,
        rhs: BigInt,
    },
    Index {
        n: u64,
        lhs: BigInt,
        rhs: BigInt,
    },
    Pair {
        n: u64,
        m: u64,
        lhs: BigInt,
        rhs: BigInt,
    },
    Lemma {
        n: u64,
        property: LemmaProperty,
        lhs: BigInt,
        rhs: BigInt,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Coefficient { power, lhs, rhs } => {
                write!(f, "coefficient of X^{power}: {lhs} != {rhs}")
            }
            Witness::Index { n, lhs, rhs } => write!(f, "n = {n}: {lhs} != {rhs}"),
            Witness::Pair { n, m, lhs, rhs } => write!(f, "(n, m) = ({n}, {m}): {lhs} != {rhs}"),
            Witness::Lemma {
                n,
                property,
                lhs,
                rhs,
            } => {
                write!(f, "n = {n}, {}: {lhs} != {rhs}", property.name())
            }
        }
    }
}

/// Parameters of one check, echoed in its report. Unused ones are `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub p: u64,
    pub s: Option<u32>,
    pub precision: Option<u32>,
    pub cutoff: Option<u64>,
    pub n_max: Option<u64>,
    pub m_max: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub check: CheckKind,
    pub params: CheckParams,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// Number of individual residue comparisons made.
    pub comparisons: u64,
    /// Admissibility of the polynomial; `None` for a bare sequence.
    pub admissible: Option<bool>,
    pub elapsed: Duration,
}

impl CongruenceReport {
    fn new(
        check: CheckKind,
        params: CheckParams,
        witness: Option<Witness>,
        comparisons: u64,
    ) -> Self {
        CongruenceReport {
            check,
            params,
            passed: witness.is_none(),
            witness,
            comparisons,
            admissible: None,
            elapsed: Duration::ZERO,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    /// Working precision `K`; defaults to `s`.
    pub precision: Option<u32>,
    /// Run on non-admissible polynomials.
    pub force: bool,
}

fn pow_usize(p: u64, e: u32) -> Result<usize> {
    p.checked_pow(e)
        .and_then(|v| usize::try_from(v).ok())
        .ok_or(CongruenceError::TooLarge("p^s"))
}

fn modulus(p: u64, e: u32) -> BigInt {
    BigInt::from(p).pow(e)
}

fn need(b: &[BigInt], n: usize) -> Result<()> {
    if b.len() < n {
        return Err(CongruenceError::SequenceTooShort {
            need: n,
            have: b.len(),
        });
    }
    Ok(())
}

/// `f_s` as a truncated series with cutoff `p^s - 1`, over `Z/p^K`.
pub fn f_trunc(b: &[BigInt], p: u64, s: u32, k: u32) -> Result<TruncSeries> {
    let len = pow_usize(p, s)?;
    need(b, len)?;
    let ctx = Precision::new(p, k)?;
    Ok(TruncSeries::new(&ctx, &b[..len], len - 1))
}

fn reduce_all(values: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    values.iter().map(|v| v.mod_floor(m)).collect()
}

fn poly_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce_all(&out, m)
}

fn compose_pow(a: &[BigInt], p: u64) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let p = p as usize;
    let mut out = vec![BigInt::zero(); (a.len() - 1) * p + 1];
    for (i, x) in a.iter().enumerate() {
        out[i * p] = x.clone();
    }
    out
}

/// Smallest power where `lhs` and `rhs` differ modulo `m`, missing entries
/// counting as zero.
fn first_difference(lhs: &[BigInt], rhs: &[BigInt], m: &BigInt) -> (Option<Witness>, u64) {
    let n = lhs.len().max(rhs.len());
    let zero = BigInt::zero();
    for i in 0..n {
        let a = lhs.get(i).unwrap_or(&zero).mod_floor(m);
        let b = rhs.get(i).unwrap_or(&zero).mod_floor(m);
        if a != b {
            return (
                Some(Witness::Coefficient {
                    power: i,
                    lhs: a,
                    rhs: b,
                }),
                i as u64 + 1,
            );
        }
    }
    (None, n as u64)
}

fn working_precision(s: u32, precision: Option<u32>) -> Result<u32> {
    if s == 0 {
        return Err(CongruenceError::ZeroDepth);
    }
    let k = precision.unwrap_or(s);
    if k < s {
        return Err(CongruenceError::PrecisionBelowDepth { k, s });
    }
    Ok(k)
}

/// `f_{s+1}(X) f_{s-1}(X^p) = f_s(X) f_s(X^p) mod p^s`, both products formed
/// in full over `Z/p^K`.
pub fn check_c2_sequence(
    b: &[BigInt],
    p: u64,
    s: u32,
    precision: Option<u32>,
) -> Result<CongruenceReport> {
    let k = working_precision(s, precision)?;
    let work = modulus(p, k);
    let lens = [pow_usize(p, s - 1)?, pow_usize(p, s)?, pow_usize(p, s + 1)?];
    need(b, lens[2])?;
    let f = |i: usize| reduce_all(&b[..lens[i]], &work);
    let lhs = poly_mul(&f(2), &compose_pow(&f(0), p), &work);
    let fs = f(1);
    let rhs = poly_mul(&fs, &compose_pow(&fs, p), &work);
    let (witness, comparisons) = first_difference(&lhs, &rhs, &modulus(p, s));
    let params = CheckParams {
        p,
        s: Some(s),
        precision: Some(k),
        ..Default::default()
    };
    Ok(CongruenceReport::new(
        CheckKind::C2,
        params,
        witness,
        comparisons,
    ))
}

/// `f(X)/f(X^p) = f_s(X)/f_{s-1}(X^p) mod p^s` as series up to `X^cutoff`.
pub fn check_c1_sequence(
    b: &[BigInt],
    p: u64,
    s: u32,
    cutoff: usize,
    precision: Option<u32>,
) -> Result<CongruenceReport> {
    let k = working_precision(s, precision)?;
    let len_s = pow_usize(p, s)?;
    need(b, (cutoff + 1).max(len_s))?;
    let ctx: Arc<Precision> = Precision::new(p, k)?;
    if b[0].mod_floor(&BigInt::from(p)).is_zero() {
        return Err(CongruenceError::NonUnitLeading(b[0].clone()));
    }
    let f = TruncSeries::new(&ctx, &b[..=cutoff], cutoff);
    let fs = TruncSeries::new(&ctx, &b[..len_s], cutoff);
    let fs1 = TruncSeries::new(&ctx, &b[..len_s / p as usize], cutoff);
    let lhs = f.mul(&f.compose_x_pow(p as usize).invert()?)?;
    let rhs = fs.mul(&fs1.compose_x_pow(p as usize).invert()?)?;
    let to_int = |t: &TruncSeries| -> Vec<BigInt> {
        t.coeffs().iter().map(|c| BigInt::from(c.clone())).collect()
    };
    let (witness, comparisons) = first_difference(&to_int(&lhs), &to_int(&rhs), &modulus(p, s));
    let params = CheckParams {
        p,
        s: Some(s),
        precision: Some(k),
        cutoff: Some(cutoff as u64),
        ..Default::default()
    };
    Ok(CongruenceReport::new(
        CheckKind::C1,
        params,
        witness,
        comparisons,
    ))
}

/// `b_n = b_{n_0} b_{n_1} ... mod p` over the base-`p` digits of each `n <= cutoff`.
pub fn check_digit_product_sequence(b: &[BigInt], p: u64, cutoff: u64) -> Result<CongruenceReport> {
    let len = usize::try_from(cutoff).map_err(|_| CongruenceError::TooLarge("N"))? + 1;
    need(b, len)?;
    let m = BigInt::from(p);
    let mut witness = None;
    let mut comparisons = 0;
    for n in 0..=cutoff {
        comparisons += 1;
        let lhs = b[n as usize].mod_floor(&m);
        let rhs = digits(n, p)
            .iter()
            .fold(BigInt::one(), |acc, &d| acc * &b[d as usize])
            .mod_floor(&m);
        if lhs != rhs {
            witness = Some(Witness::Index { n, lhs, rhs });
            break;
        }
    }
    let params = CheckParams {
        p,
        cutoff: Some(cutoff),
        ..Default::default()
    };
    Ok(CongruenceReport::new(
        CheckKind::Digit,
        params,
        witness,
        comparisons,
    ))
}

/// `b_{n+m p^s} b_{floor(n/p)} = b_n b_{floor(n/p)+m p^{s-1}} mod p^s` for
/// `n <= n_max`, `m <= m_max`, scanned in lexicographic order of `(n, m)`.
pub fn check_dig2_sequence(
    b: &[BigInt],
    p: u64,
    s: u32,
    n_max: u64,
    m_max: u64,
) -> Result<CongruenceReport> {
    if s == 0 {
        return Err(CongruenceError::ZeroDepth);
    }
    let ps = p.checked_pow(s).ok_or(CongruenceError::TooLarge("p^s"))?;
    let top = m_max
        .checked_mul(ps)
        .and_then(|v| v.checked_add(n_max))
        .and_then(|v| usize::try_from(v).ok())
        .ok_or(CongruenceError::TooLarge("n_max + m_max p^s"))?;
    need(b, top + 1)?;
    let md = modulus(p, s);
    let at = |i: u64| &b[i as usize];
    let mut witness = None;
    let mut comparisons = 0;
    'outer: for n in 0..=n_max {
        for m in 0..=m_max {
            comparisons += 1;
            let q = n / p;
            let lhs = (at(n + m * ps) * at(q)).mod_floor(&md);
            let rhs = (at(n) * at(q + m * (ps / p))).mod_floor(&md);
            if lhs != rhs {
                witness = Some(Witness::Pair { n, m, lhs, rhs });
                break 'outer;
            }
        }
    }
    let params = CheckParams {
        p,
        s: Some(s),
        n_max: Some(n_max),
        m_max: Some(m_max),
        ..Default::default()
    };
    Ok(CongruenceReport::new(
        CheckKind::Dig2,
        params,
        witness,
        comparisons,
    ))
}

fn gate(lambda: &LaurentPoly, force: bool) -> Result<bool> {
    let report = is_admissible(lambda);
    if !report.admissible && !force {
        return Err(CongruenceError::NotAdmissible(report.explanation()));
    }
    Ok(report.admissible)
}

fn sequence_mod(lambda: &LaurentPoly, p: u64, k: u32, n_max: usize) -> Result<Vec<BigInt>> {
    let ring = CoeffRing::modular(p, k)?;
    Ok(constant_term_sequence(lambda, n_max, &ring)?)
}

fn finish(mut report: CongruenceReport, admissible: bool, start: Instant) -> CongruenceReport {
    report.admissible = Some(admissible);
    report.elapsed = start.elapsed();
    report
}

pub fn check_c2(
    lambda: &LaurentPoly,
    p: u64,
    s: u32,
    opts: CheckOptions,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let admissible = gate(lambda, opts.force)?;
    let k = working_precision(s, opts.precision)?;
    let b = sequence_mod(lambda, p, k, pow_usize(p, s + 1)? - 1)?;
    Ok(finish(
        check_c2_sequence(&b, p, s, Some(k))?,
        admissible,
        start,
    ))
}

/// Default series cutoff `p^{s+1} - 1`.
pub fn default_cutoff(p: u64, s: u32) -> Result<u64> {
    Ok(pow_usize(p, s + 1)? as u64 - 1)
}

pub fn check_c1(
    lambda: &LaurentPoly,
    p: u64,
    s: u32,
    cutoff: Option<u64>,
    opts: CheckOptions,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let admissible = gate(lambda, opts.force)?;
    let k = working_precision(s, opts.precision)?;
    let cutoff = match cutoff {
        Some(n) => usize::try_from(n).map_err(|_| CongruenceError::TooLarge("N"))?,
        None => default_cutoff(p, s)? as usize,
    };
    let b = sequence_mod(lambda, p, k, cutoff.max(pow_usize(p, s)? - 1))?;
    Ok(finish(
        check_c1_sequence(&b, p, s, cutoff, Some(k))?,
        admissible,
        start,
    ))
}

pub fn check_digit_product(
    lambda: &LaurentPoly,
    p: u64,
    cutoff: u64,
    opts: CheckOptions,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let admissible = gate(lambda, opts.force)?;
    let n = usize::try_from(cutoff).map_err(|_| CongruenceError::TooLarge("N"))?;
    let b = sequence_mod(lambda, p, 1, n)?;
    Ok(finish(
        check_digit_product_sequence(&b, p, cutoff)?,
        admissible,
        start,
    ))
}

pub fn check_dig2(
    lambda: &LaurentPoly,
    p: u64,
    s: u32,
    n_max: u64,
    m_max: u64,
    opts: CheckOptions,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let admissible = gate(lambda, opts.force)?;
    if s == 0 {
        return Err(CongruenceError::ZeroDepth);
    }
    let top = p
        .checked_pow(s)
        .and_then(|ps| ps.checked_mul(m_max))
        .and_then(|v| v.checked_add(n_max))
        .and_then(|v| usize::try_from(v).ok())
        .ok_or(CongruenceError::TooLarge("n_max + m_max p^s"))?;
    let b = sequence_mod(lambda, p, s, top)?;
    Ok(finish(
        check_dig2_sequence(&b, p, s, n_max, m_max)?,
        admissible,
        start,
    ))
}

/// For `1 <= n <= n_max`: the constant term of the indecomposable sum agrees
/// with `c_n` recovered from the sequence modulo `p^{l(n)+1}`, is divisible by
/// `p^{l(n)-1}`, and the digit-partition sum of `c` gives back `b_n`.
/// `c_0 = 1` is a convention and is not compared.
pub fn check_lemma(
    lambda: &LaurentPoly,
    p: u64,
    n_max: u64,
    opts: CheckOptions,
) -> Result<CongruenceReport> {
    let start = Instant::now();
    let admissible = gate(lambda, opts.force)?;
    let top = usize::try_from(n_max).map_err(|_| CongruenceError::TooLarge("n_max"))?;
    let k = opts.precision.unwrap_or(0).max(length_p(n_max, p) + 1);
    let ring = CoeffRing::modular(p, k)?;
    let reduced = lambda.to_ring(&ring)?;
    let work = modulus(p, k);
    let b = constant_term_sequence(&reduced, top, &ring)?;
    let oracle = c_from_b(&b, n_max, p, &work);
    let mut ctx = GhostContext::new(&reduced, p)?;
    let mut direct = vec![BigInt::one()];
    for n in 1..=n_max {
        direct.push(ctx.c_direct(n)?);
    }
    let mut witness = None;
    let mut comparisons = 0;
    for n in 1..=n_max {
        let l = length_p(n, p);
        let i = n as usize;
        let agree = modulus(p, l + 1);
        let (lhs, rhs) = (direct[i].mod_floor(&agree), oracle[i].mod_floor(&agree));
        comparisons += 1;
        if lhs != rhs {
            witness = Some(Witness::Lemma {
                n,
                property: LemmaProperty::Agreement,
                lhs,
                rhs,
            });
            break;
        }
        let vmod = modulus(p, l - 1);
        let residue = direct[i].mod_floor(&vmod);
        comparisons += 1;
        if !residue.is_zero() {
            witness = Some(Witness::Lemma {
                n,
                property: LemmaProperty::Valuation,
                lhs: residue,
                rhs: BigInt::zero(),
            });
            break;
        }
        let rebuilt = reconstruct_b(&direct, n, p).mod_floor(&work);
        let target = b[i].mod_floor(&work);
        comparisons += 1;
        if rebuilt != target {
            witness = Some(Witness::Lemma {
                n,
                property: LemmaProperty::Reconstruction,
                lhs: rebuilt,
                rhs: target,
            });
            break;
        }
    }
    let params = CheckParams {
        p,
        precision: Some(k),
        n_max: Some(n_max),
        ..Default::default()
    };
    let report = CongruenceReport::new(CheckKind::Lemma, params, witness, comparisons);
    Ok(finish(report, admissible, start))
}

/// `v_p` of a nonzero integer, `None` for zero.
pub fn valuation(x: &BigInt, p: u64) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0;
    let mut y = x.clone();
    while (&y % &p).is_zero() {
        y /= &p;
        v += 1;
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apery::{apery_lambda, apery_numbers};
    use crate::polyparse::parse_poly;

    #[test]
    fn truncation_examples() {
        let b = apery_numbers(30);
        let f = f_trunc(&b, 5, 1, 1).unwrap();
        let c: Vec<u64> = f.coeffs().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(c, vec![1, 3, 4, 2, 1]);
        let f0 = f_trunc(&b, 5, 0, 2).unwrap();
        assert_eq!(f0.cutoff(), 0);
        assert_eq!(f_trunc(&b, 2, 1, 3).unwrap().coeffs().len(), 2);
    }

    #[test]
    fn c2_examples() {
        let opts = CheckOptions::default();
        assert!(check_c2(&apery_lambda(), 2, 2, opts).unwrap().passed);
        let l = parse_poly("x1+x1^-1", 1).unwrap();
        let r = check_c2(&l, 3, 1, opts).unwrap();
        assert!(r.passed);
        assert_eq!(r.admissible, Some(true));
    }

    #[test]
    fn c2_corrupted() {
        let mut b = apery_numbers(20);
        b[7] += 1;
        let r = check_c2_sequence(&b, 2, 2, None).unwrap();
        assert!(!r.passed);
        match r.witness.unwrap() {
            Witness::Coefficient { power, lhs, rhs } => {
                assert_eq!(power, 7);
                assert_ne!(lhs, rhs);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c1_examples() {
        let opts = CheckOptions::default();
        assert!(
            check_c1(&apery_lambda(), 3, 2, Some(100), opts)
                .unwrap()
                .passed
        );
        let b = apery_numbers(40);
        assert!(check_c1_sequence(&b, 3, 3, 0, None).unwrap().passed);
        let scaled: Vec<BigInt> = b.iter().map(|x| x * 3).collect();
        assert!(matches!(
            check_c1_sequence(&scaled, 3, 1, 10, None),
            Err(CongruenceError::NonUnitLeading(_))
        ));
    }

    #[test]
    fn c1_and_c2_agree() {
        let clean = apery_numbers(130);
        for (p, s) in [(2u64, 1u32), (2, 2), (3, 1), (5, 1)] {
            let top = p.pow(s + 1) as usize;
            for bad in 1..top {
                let mut b = clean.clone();
                b[bad] += 1;
                let c2 = check_c2_sequence(&b, p, s, None).unwrap();
                let c1 = check_c1_sequence(&b, p, s, top - 1, None).unwrap();
                assert_eq!(c1.passed, c2.passed, "p={p} s={s} bad={bad}");
            }
        }
    }

    #[test]
    fn digit_examples() {
        let b = apery_numbers(100);
        assert!(check_digit_product_sequence(&b, 2, 2).unwrap().passed);
        assert!(check_digit_product_sequence(&b, 3, 4).unwrap().passed);
        assert!(check_digit_product_sequence(&b, 5, 4).unwrap().passed);
        assert!(check_digit_product_sequence(&b, 7, 99).unwrap().passed);
        let mut bad = b.clone();
        bad[10] += 1;
        let r = check_digit_product_sequence(&bad, 3, 50).unwrap();
        assert!(matches!(r.witness, Some(Witness::Index { n: 10, .. })));
    }

    #[test]
    fn dig2_examples() {
        let b = apery_numbers(60);
        assert!(check_dig2_sequence(&b, 2, 2, 15, 3).unwrap().passed);
        assert!(check_dig2_sequence(&b, 3, 1, 5, 0).unwrap().passed);
        let mut bad = b.clone();
        bad[9] += 1;
        let r = check_dig2_sequence(&bad, 2, 2, 15, 3).unwrap();
        // b_9 first enters as b_{n + m 4} with (n, m) = (1, 2)
        assert!(
            matches!(r.witness, Some(Witness::Pair { n: 1, m: 2, .. })),
            "{:?}",
            r.witness
        );
    }

    #[test]
    fn lemma_small() {
        let r = check_lemma(&apery_lambda(), 2, 15, CheckOptions::default()).unwrap();
        assert!(r.passed, "{:?}", r.witness);
        assert_eq!(r.comparisons, 45);
    }

    #[test]
    fn refuses_non_admissible() {
        let l = parse_poly("(x1+x1^-1)^3", 1).unwrap();
        assert!(matches!(
            check_c2(&l, 3, 1, CheckOptions::default()),
            Err(CongruenceError::NotAdmissible(_))
        ));
        let forced = CheckOptions {
            force: true,
            ..Default::default()
        };
        assert_eq!(check_c2(&l, 3, 1, forced).unwrap().admissible, Some(false));
    }

    #[test]
    fn precision_validation() {
        let b = apery_numbers(30);
        assert!(matches!(
            check_c2_sequence(&b, 2, 2, Some(1)),
            Err(CongruenceError::PrecisionBelowDepth { k: 1, s: 2 })
        ));
        assert!(check_c2_sequence(&b, 2, 2, Some(4)).unwrap().passed);
        assert!(matches!(
            check_c2_sequence(&b, 2, 0, None),
            Err(CongruenceError::ZeroDepth)
        ));
    }

    fn poly_pow(a: &[BigInt], e: u64, m: &BigInt) -> Vec<BigInt> {
        (0..e).fold(vec![BigInt::one()], |acc, _| poly_mul(&acc, a, m))
    }

    fn divisible(v: &[BigInt], m: &BigInt) -> bool {
        v.iter().all(|x| x.mod_floor(m).is_zero())
    }

    fn diff(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect()
    }

    #[test]
    fn ingredient_congruences() {
        let b = apery_numbers(400);
        for p in [2u64, 3, 5, 7] {
            let f = |s: u32| b[..p.pow(s) as usize].to_vec();
            let big = modulus(p, 8);
            let pm = |e: u32| modulus(p, e);
            let f1p = poly_pow(&f(1), p, &big);
            assert!(
                divisible(&diff(&f1p, &compose_pow(&f(1), p)), &pm(1)),
                "p={p}"
            );
            let smax = if p <= 3 { 3 } else { 2 };
            for s in 1..=smax {
                let prod = poly_mul(&f(1), &compose_pow(&f(s - 1), p), &big);
                assert!(divisible(&diff(&f(s), &prod), &pm(1)), "p={p} s={s}");
                for k in s..=s + 2 {
                    if p.pow(k) > 400 {
                        continue;
                    }
                    let a = poly_mul(&f(k), &compose_pow(&f(s - 1), p), &big);
                    let c = poly_mul(&compose_pow(&f(k - 1), p), &f(s), &big);
                    assert!(divisible(&diff(&a, &c), &pm(s)), "p={p} s={s} k={k}");
                }
            }
        }
    }

    #[test]
    fn valuation_helper() {
        assert_eq!(valuation(&BigInt::from(24), 2), Some(3));
        assert_eq!(valuation(&BigInt::zero(), 2), None);
    }
}
