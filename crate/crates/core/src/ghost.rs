//! Ghost terms `R_s(L) = L^{p^s} - L(x^p)^{p^{s-1}}`, tuples `m` with
//! `0 <= m_i <= i`, and the sequence `c_n` obtained from sums of ghost-term
//! products over indecomposable tuples.
//!
//! `c_n` is computed two ways: directly as the constant term of the
//! indecomposable sum `I^n`, and by inverting the digit-block convolution
//! `b_n = sum c_{n1} ... c_{nr}` over block partitions of the base-p digits of
//! `n`. The second route is only an oracle for the first.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::laurent::{CoeffRing, LaurentPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GhostError {
    #[error("precision p^{k} too low for ghost term R_{s}")]
    PrecisionTooLow { k: u32, s: u32 },
    #[error("prime {p} does not match the coefficient ring {ring}")]
    PrimeMismatch { p: u64, ring: String },
    #[error("tuple {0} is not in S_k (need 0 <= m_i <= i)")]
    InvalidTuple(String),
    #[error("tuple length {len} does not match the {digits} base-p digits of n")]
    TupleLength { len: usize, digits: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Result<T> = std::result::Result<T, GhostError>;

/// Number of base-`p` digits of `n`, with `length_p(0) = 1`.
pub fn length_p(n: u64, p: u64) -> u32 {
    let mut len = 1;
    let mut n = n / p;
    while n > 0 {
        len += 1;
        n /= p;
    }
    len
}

/// Little-endian base-`p` digits; `digits(0) = [0]`.
pub fn digits(n: u64, p: u64) -> Vec<u64> {
    let mut out = vec![n % p];
    let mut n = n / p;
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

fn check_ring(lambda: &LaurentPoly, p: u64, s: u32) -> Result<()> {
    if let CoeffRing::Modular(ctx) = lambda.ring() {
        if ctx.p() != p {
            return Err(GhostError::PrimeMismatch {
                p,
                ring: lambda.ring().to_string(),
            });
        }
        if ctx.k() < s {
            return Err(GhostError::PrecisionTooLow { k: ctx.k(), s });
        }
    }
    Ok(())
}

/// Multiplies `acc = L^from` by `L` until it reaches `L^to`.
fn raise(mut acc: LaurentPoly, from: u64, to: u64, lambda: &LaurentPoly) -> LaurentPoly {
    debug_assert!(from <= to);
    for _ in from..to {
        acc = acc.mul(lambda).expect("same ring");
    }
    acc
}

/// `R_s(L)`; `R_0(L) = L`.
pub fn ghost_term(lambda: &LaurentPoly, p: u64, s: u32) -> Result<LaurentPoly> {
    check_ring(lambda, p, s)?;
    if s == 0 {
        return Ok(lambda.clone());
    }
    let lower = p.pow(s - 1);
    let base = lambda.pow(lower);
    let full = raise(base.clone(), lower, lower * p, lambda);
    Ok(full.sub(&base.substitute_power(p))?)
}

/// `L^{p^s} - sum_{i=0}^{s} R_i(L)(x^{p^{s-i}})`, which vanishes identically.
pub fn ghost_decomposition_residual(lambda: &LaurentPoly, p: u64, s: u32) -> Result<LaurentPoly> {
    check_ring(lambda, p, s)?;
    let mut residual = lambda.pow(p.pow(s));
    for i in 0..=s {
        let r = ghost_term(lambda, p, i)?;
        residual = residual.sub(&r.substitute_power(p.pow(s - i)))?;
    }
    Ok(residual)
}

/// A tuple `(m_0, ..., m_{k-1})` with `0 <= m_i <= i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GhostTuple(Vec<u32>);

impl GhostTuple {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() || entries.iter().enumerate().any(|(i, &m)| m as usize > i) {
            return Err(GhostError::InvalidTuple(format!("{entries:?}")));
        }
        Ok(GhostTuple(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|m| = sum m_i`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `m' * m''`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        GhostTuple(e)
    }

    /// A tuple is indecomposable iff for every `i` in `1..k` some `j >= i`
    /// has `m_j > j - i`.
    pub fn is_indecomposable(&self) -> bool {
        let m = &self.0;
        (1..m.len()).all(|i| (i..m.len()).any(|j| m[j] as usize > j - i))
    }
}

impl fmt::Display for GhostTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All of `S_k` in lexicographic order; `|S_k| = k!`.
pub fn enumerate_tuples(k: usize) -> Vec<GhostTuple> {
    let mut out = vec![Vec::with_capacity(k)];
    for i in 0..k as u32 {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=i).map(move |m| {
                    let mut t = prefix.clone();
                    t.push(m);
                    t
                })
            })
            .collect();
    }
    out.into_iter().map(GhostTuple).collect()
}

pub fn enumerate_indecomposable(k: usize) -> Vec<GhostTuple> {
    enumerate_tuples(k)
        .into_iter()
        .filter(GhostTuple::is_indecomposable)
        .collect()
}

/// A split of the base-p digit string of `n` into consecutive blocks
/// `n = n^(1) * ... * n^(r)` (least significant block first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitPartition {
    pub p: u64,
    pub digits: Vec<u64>,
    /// Block lengths, least significant block first.
    pub lengths: Vec<u32>,
    pub values: Vec<u64>,
}

impl DigitPartition {
    /// Reassembles `n` by concatenating the block expansions.
    pub fn concatenate(&self) -> u64 {
        let mut n = 0;
        let mut shift = 1u64;
        for (&v, &len) in self.values.iter().zip(&self.lengths) {
            n += v * shift;
            shift *= self.p.pow(len);
        }
        n
    }
}

/// All block partitions of the digits of `n >= 1`: every block is a single
/// digit or has a nonzero top digit, so each block's length is `length_p` of
/// its value.
pub fn digit_partitions(n: u64, p: u64) -> Vec<DigitPartition> {
    let ds = digits(n, p);
    let len = ds.len();
    let mut out = Vec::new();
    // bit i of the mask set: cut between digit i and digit i+1
    for mask in 0u64..(1 << (len - 1)) {
        let mut lengths = Vec::new();
        let mut values = Vec::new();
        let mut start = 0;
        let mut ok = true;
        for i in 0..len {
            let cut = i == len - 1 || mask >> i & 1 == 1;
            if !cut {
                continue;
            }
            let block = &ds[start..=i];
            if block.len() > 1 && *block.last().unwrap() == 0 {
                ok = false;
                break;
            }
            lengths.push(block.len() as u32);
            values.push(block.iter().rev().fold(0, |acc, &d| acc * p + d));
            start = i + 1;
        }
        if ok {
            out.push(DigitPartition {
                p,
                digits: ds.clone(),
                lengths,
                values,
            });
        }
    }
    out.sort_by(|a, b| {
        a.lengths
            .len()
            .cmp(&b.lengths.len())
            .then(b.lengths.cmp(&a.lengths))
    });
    out
}

/// `c_n` from the sequence `b` by inverting the digit-block convolution:
/// `c_n = b_n - sum over partitions with r >= 2 of c_{n1} ... c_{nr}`, with
/// `c_0 = 1`. Returns `c_0..=c_{n_max}` modulo `modulus`.
pub fn c_from_b(b: &[BigInt], n_max: u64, p: u64, modulus: &BigInt) -> Vec<BigInt> {
    assert!(b.len() as u64 > n_max, "need b_0..=b_{n_max}");
    let mut c: Vec<BigInt> = Vec::with_capacity(n_max as usize + 1);
    c.push(BigInt::one().mod_floor(modulus));
    for n in 1..=n_max {
        let mut acc = b[n as usize].clone();
        for part in digit_partitions(n, p) {
            if part.values.len() < 2 {
                continue;
            }
            // every block has fewer digits than n, hence a smaller value
            let prod = part
                .values
                .iter()
                .fold(BigInt::one(), |acc, &v| acc * &c[v as usize]);
            acc -= prod;
        }
        c.push(acc.mod_floor(modulus));
    }
    c
}

/// `sum over all partitions of n of c_{n1} ... c_{nr}`; equals `b_n`.
pub fn reconstruct_b(c: &[BigInt], n: u64, p: u64) -> BigInt {
    if n == 0 {
        return c[0].clone();
    }
    digit_partitions(n, p)
        .iter()
        .map(|part| {
            part.values
                .iter()
                .fold(BigInt::one(), |acc, &v| acc * &c[v as usize])
        })
        .sum()
}

/// Computes ghost-term products and indecomposable sums for one `L` and `p`,
/// caching the powers `L^e` and ghost terms `R_s(L^a)` it needs.
pub struct GhostContext {
    lambda: LaurentPoly,
    p: u64,
    powers: HashMap<u64, LaurentPoly>,
    ghosts: HashMap<(u64, u32), LaurentPoly>,
}

impl GhostContext {
    pub fn new(lambda: &LaurentPoly, p: u64) -> Result<Self> {
        check_ring(lambda, p, 0)?;
        let mut powers = HashMap::new();
        powers.insert(0, LaurentPoly::one(lambda.arity(), lambda.ring().clone()));
        powers.insert(1, lambda.clone());
        Ok(GhostContext {
            lambda: lambda.clone(),
            p,
            powers,
            ghosts: HashMap::new(),
        })
    }

    pub fn lambda(&self) -> &LaurentPoly {
        &self.lambda
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(self.lambda.arity(), self.lambda.ring().clone())
    }

    fn one(&self) -> LaurentPoly {
        LaurentPoly::one(self.lambda.arity(), self.lambda.ring().clone())
    }

    /// `L^e`, extended from the largest cached power below `e`.
    pub fn power(&mut self, e: u64) -> LaurentPoly {
        if let Some(x) = self.powers.get(&e) {
            return x.clone();
        }
        let (&from, base) = self
            .powers
            .iter()
            .filter(|(&k, _)| k < e)
            .max_by_key(|(&k, _)| k)
            .expect("L^0 is cached");
        let result = raise(base.clone(), from, e, &self.lambda);
        self.powers.insert(e, result.clone());
        result
    }

    /// `R_s(L^a) = L^{a p^s} - L^{a p^{s-1}}(x^p)`.
    pub fn ghost_of_power(&mut self, a: u64, s: u32) -> Result<LaurentPoly> {
        check_ring(&self.lambda, self.p, s)?;
        if let Some(x) = self.ghosts.get(&(a, s)) {
            return Ok(x.clone());
        }
        let r = if s == 0 {
            self.power(a)
        } else if a == 0 {
            // R_s(1) = 1 - 1
            self.zero()
        } else {
            let hi = self.power(a * self.p.pow(s));
            let lo = self.power(a * self.p.pow(s - 1)).substitute_power(self.p);
            hi.sub(&lo)?
        };
        self.ghosts.insert((a, s), r.clone());
        Ok(r)
    }

    /// The factors `R_{m_i}(L^{n_i})(x^{p^{i - m_i}})` of `R^n_m`.
    pub fn tuple_factors(&mut self, n: u64, m: &GhostTuple) -> Result<Vec<LaurentPoly>> {
        let ds = digits(n, self.p);
        if ds.len() != m.len() {
            return Err(GhostError::TupleLength {
                len: m.len(),
                digits: ds.len(),
            });
        }
        ds.iter()
            .zip(m.entries())
            .enumerate()
            .map(|(i, (&digit, &mi))| {
                let r = self.ghost_of_power(digit, mi)?;
                Ok(r.substitute_power(self.p.pow(i as u32 - mi)))
            })
            .collect()
    }

    /// `R^n_{m,L} = prod_i R_{m_i}(L^{n_i})(x^{p^{i - m_i}})`.
    pub fn tuple_ghost_product(&mut self, n: u64, m: &GhostTuple) -> Result<LaurentPoly> {
        let factors = self.tuple_factors(n, m)?;
        let mut acc = self.one();
        for f in factors {
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    /// `I^n_L`: the sum of `R^n_m` over indecomposable `m` of length `l(n)`.
    pub fn indecomposable_sum(&mut self, n: u64) -> Result<LaurentPoly> {
        let k = length_p(n, self.p) as usize;
        let mut acc = self.zero();
        for m in enumerate_indecomposable(k) {
            acc = acc.add(&self.tuple_ghost_product(n, &m)?)?;
        }
        Ok(acc)
    }

    /// `c_n = [I^n]_0`. Each product's constant term is taken against its
    /// largest factor instead of expanding the full product.
    pub fn c_direct(&mut self, n: u64) -> Result<BigInt> {
        let k = length_p(n, self.p) as usize;
        let mut total = BigInt::zero();
        for m in enumerate_indecomposable(k) {
            let mut factors = self.tuple_factors(n, &m)?;
            if factors.iter().any(LaurentPoly::is_zero) {
                continue;
            }
            factors.sort_by_key(LaurentPoly::len);
            let largest = factors.pop().expect("at least one digit");
            let mut rest = self.one();
            for f in &factors {
                rest = rest.mul(f)?;
            }
            total += rest.constant_term_of_product(&largest)?;
        }
        Ok(match self.lambda.ring() {
            CoeffRing::Modular(ctx) => total.mod_floor(&BigInt::from(ctx.modulus().clone())),
            CoeffRing::Exact => total,
        })
    }

    /// `I^{n1}(x) I^{n2}(x^{p^{l(n1)}}) ...` for one digit partition.
    pub fn shifted_indecomposable_product(&mut self, part: &DigitPartition) -> Result<LaurentPoly> {
        let mut acc = self.one();
        let mut shift = 0u32;
        for (&v, &len) in part.values.iter().zip(&part.lengths) {
            let i = self.indecomposable_sum(v)?;
            acc = acc.mul(&i.substitute_power(self.p.pow(shift)))?;
            shift += len;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::constant_term_sequence;
    use crate::polyparse::parse_poly;

    const APERY: &str = "(1+x1)*(1+x2)*(1+x1+x2)/(x1*x2)";

    fn x_plus_inv() -> LaurentPoly {
        parse_poly("x1 + x1^-1", 1).unwrap()
    }

    fn t(e: &[u32]) -> GhostTuple {
        GhostTuple::new(e.to_vec()).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(length_p(0, 2), 1);
        assert_eq!(length_p(5, 2), 3);
        for p in [2u64, 3, 5, 7] {
            for k in 0..6 {
                assert_eq!(length_p(p.pow(k), p), k + 1);
                assert_eq!(length_p(p.pow(k + 1) - 1, p), k + 1);
            }
        }
    }

    #[test]
    fn ghost_term_examples() {
        let l = x_plus_inv();
        assert_eq!(ghost_term(&l, 2, 1).unwrap(), parse_poly("2", 1).unwrap());
        assert_eq!(
            ghost_term(&l, 3, 1).unwrap(),
            parse_poly("3*x1 + 3*x1^-1", 1).unwrap()
        );
        let a = parse_poly(APERY, 2).unwrap();
        assert_eq!(ghost_term(&a, 5, 0).unwrap(), a);
    }

    #[test]
    fn ghost_term_precision() {
        let ring = CoeffRing::modular(3, 1).unwrap();
        let l = x_plus_inv().to_ring(&ring).unwrap();
        assert!(matches!(
            ghost_term(&l, 3, 2),
            Err(GhostError::PrecisionTooLow { k: 1, s: 2 })
        ));
        assert!(matches!(
            ghost_term(&l, 2, 1),
            Err(GhostError::PrimeMismatch { .. })
        ));
    }

    #[test]
    fn decomposition_residuals() {
        assert!(ghost_decomposition_residual(&x_plus_inv(), 2, 2)
            .unwrap()
            .is_zero());
        let a = parse_poly(APERY, 2).unwrap();
        assert!(ghost_decomposition_residual(&a, 2, 1).unwrap().is_zero());
        let one = parse_poly("1", 2).unwrap();
        for s in 0..4 {
            assert!(ghost_decomposition_residual(&one, 3, s).unwrap().is_zero());
            if s > 0 {
                assert!(ghost_term(&one, 3, s).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn tuples() {
        assert_eq!(enumerate_tuples(2), vec![t(&[0, 0]), t(&[0, 1])]);
        assert_eq!(enumerate_indecomposable(2), vec![t(&[0, 1])]);
        assert_eq!(
            enumerate_indecomposable(3),
            vec![t(&[0, 0, 2]), t(&[0, 1, 1]), t(&[0, 1, 2])]
        );
        assert_eq!(enumerate_indecomposable(1), vec![t(&[0])]);
        let mut factorial = 1;
        for k in 1..=7 {
            factorial *= k;
            assert_eq!(enumerate_tuples(k).len(), factorial);
        }
        assert!(GhostTuple::new(vec![1]).is_err());
        assert!(GhostTuple::new(vec![0, 2]).is_err());
        assert_eq!(t(&[0]).concat(&t(&[0, 1])), t(&[0, 0, 1]));
    }

    #[test]
    fn indecomposable_weight_bound() {
        for k in 1..=7 {
            for m in enumerate_indecomposable(k) {
                assert!(m.weight() as usize >= k - 1, "{m}");
            }
        }
    }

    #[test]
    fn partitions() {
        let values = |n, p| -> Vec<Vec<u64>> {
            digit_partitions(n, p)
                .into_iter()
                .map(|d| d.values)
                .collect()
        };
        assert_eq!(values(5, 2), vec![vec![5], vec![1, 2], vec![1, 0, 1]]);
        assert_eq!(values(2, 2), vec![vec![2], vec![0, 1]]);
        assert_eq!(values(4, 5), vec![vec![4]]);
        for n in 1..200 {
            for part in digit_partitions(n, 3) {
                assert_eq!(part.concatenate(), n);
                for (&v, &len) in part.values.iter().zip(&part.lengths) {
                    assert_eq!(length_p(v, 3), len);
                }
            }
        }
    }

    #[test]
    fn tuple_products() {
        let mut ctx = GhostContext::new(&x_plus_inv(), 2).unwrap();
        assert_eq!(
            ctx.tuple_ghost_product(2, &t(&[0, 1])).unwrap(),
            parse_poly("2", 1).unwrap()
        );
        assert_eq!(ctx.tuple_ghost_product(1, &t(&[0])).unwrap(), x_plus_inv());
        assert!(matches!(
            ctx.tuple_ghost_product(2, &t(&[0])),
            Err(GhostError::TupleLength { .. })
        ));
        // summing over all of S_2 recovers L^3
        let mut sum = LaurentPoly::zero(1, CoeffRing::Exact);
        for m in enumerate_tuples(2) {
            sum = sum.add(&ctx.tuple_ghost_product(3, &m).unwrap()).unwrap();
        }
        assert_eq!(sum, x_plus_inv().pow(3));
    }

    #[test]
    fn indecomposable_sums() {
        let mut ctx = GhostContext::new(&x_plus_inv(), 2).unwrap();
        assert_eq!(
            ctx.indecomposable_sum(2).unwrap(),
            parse_poly("2", 1).unwrap()
        );
        assert_eq!(
            ctx.indecomposable_sum(0).unwrap(),
            parse_poly("1", 1).unwrap()
        );
        assert_eq!(ctx.c_direct(2).unwrap(), BigInt::from(2));
        assert_eq!(ctx.c_direct(0).unwrap(), BigInt::one());
        let a = parse_poly(APERY, 2).unwrap();
        let mut ctx = GhostContext::new(&a, 5).unwrap();
        let b = constant_term_sequence(&a, 4, &CoeffRing::Exact).unwrap();
        for n in 0..5u64 {
            assert_eq!(ctx.indecomposable_sum(n).unwrap(), a.pow(n));
            assert_eq!(ctx.c_direct(n).unwrap(), b[n as usize]);
        }
    }

    #[test]
    fn c_from_b_examples() {
        let l = x_plus_inv();
        let b = constant_term_sequence(&l, 8, &CoeffRing::Exact).unwrap();
        let big = BigInt::from(1u64 << 40);
        let c = c_from_b(&b, 8, 2, &big);
        assert_eq!(c[0], BigInt::one());
        assert_eq!(c[1], b[1]);
        assert_eq!(c[2], BigInt::from(2));
        let a = parse_poly(APERY, 2).unwrap();
        let b = constant_term_sequence(&a, 7, &CoeffRing::Exact).unwrap();
        let c = c_from_b(&b, 7, 7, &big);
        assert_eq!(c[7], &b[7] - &b[1]);
    }

    #[test]
    fn reconstruct_examples() {
        let c: Vec<BigInt> = (0..6).map(|i| BigInt::from(10 + i)).collect();
        // n = 5 = 101_2: c5 + c1 c2 + c1 c0 c1
        let expected = &c[5] + &c[1] * &c[2] + &c[1] * &c[0] * &c[1];
        assert_eq!(reconstruct_b(&c, 5, 2), expected);
        assert_eq!(reconstruct_b(&c, 1, 2), c[1]);
    }

    #[test]
    fn full_tuple_sum_is_power() {
        for (src, d) in [(APERY, 2), ("x1 + x1^-1", 1)] {
            let l = parse_poly(src, d).unwrap();
            for p in [2u64, 3] {
                let mut ctx = GhostContext::new(&l, p).unwrap();
                for n in 1..=15u64 {
                    let k = length_p(n, p) as usize;
                    let mut sum = LaurentPoly::zero(d, CoeffRing::Exact);
                    for m in enumerate_tuples(k) {
                        sum = sum.add(&ctx.tuple_ghost_product(n, &m).unwrap()).unwrap();
                    }
                    assert_eq!(sum, l.pow(n), "p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn splitting_identity() {
        let l = parse_poly(APERY, 2).unwrap();
        for p in [2u64, 3] {
            let mut ctx = GhostContext::new(&l, p).unwrap();
            for n in 1..=10u64 {
                let mut sum = LaurentPoly::zero(2, CoeffRing::Exact);
                for part in digit_partitions(n, p) {
                    sum = sum
                        .add(&ctx.shifted_indecomposable_product(&part).unwrap())
                        .unwrap();
                }
                assert_eq!(sum, l.pow(n), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn constant_term_factorizes() {
        let l = parse_poly(APERY, 2).unwrap();
        for p in [2u64, 3] {
            let mut ctx = GhostContext::new(&l, p).unwrap();
            for n in 1..=12u64 {
                for part in digit_partitions(n, p) {
                    let lhs = ctx
                        .shifted_indecomposable_product(&part)
                        .unwrap()
                        .constant_term();
                    let mut rhs = BigInt::one();
                    for &v in &part.values {
                        rhs *= ctx.c_direct(v).unwrap();
                    }
                    assert_eq!(lhs, rhs, "p={p} n={n} {:?}", part.values);
                }
            }
        }
    }

    #[test]
    fn c_direct_valuation() {
        let l = parse_poly(APERY, 2).unwrap();
        let ring = CoeffRing::modular(3, 5).unwrap();
        let mut ctx = GhostContext::new(&l.to_ring(&ring).unwrap(), 3).unwrap();
        for n in 0..27u64 {
            let c = ctx.c_direct(n).unwrap();
            let need = BigInt::from(3u64.pow(length_p(n, 3) - 1));
            assert!(c.is_multiple_of(&need), "n={n} c={c}");
        }
    }
}
