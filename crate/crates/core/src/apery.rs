//! The Apéry family: `L = (1+x1)(1+x2)(1+x1+x2)/(x1 x2)`, whose constant
//! terms `b_n = sum_k C(n,k)^2 C(n+k,k)` are the Apéry numbers for `zeta(2)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;
use crate::polyparse::parse_poly;

pub const APERY_LAMBDA: &str = "(1+x1)*(1+x2)*(1+x1+x2)/(x1*x2)";

pub fn apery_lambda() -> LaurentPoly {
    parse_poly(APERY_LAMBDA, 2).expect("valid polynomial")
}

/// `b_0..=b_{n_max}` reduced modulo `modulus`, from the exact recurrence
/// `n^2 b_n = (11 n^2 - 11 n + 3) b_{n-1} + (n-1)^2 b_{n-2}`.
///
/// Only the two previous exact values are kept, so long sequences (the unit
/// root needs `n < p^s`) stay cheap where powering `L` would not.
pub fn apery_numbers_mod(n_max: usize, modulus: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    out.push(cur.mod_floor(modulus));
    for n in 1..=n_max as u64 {
        let n2 = BigInt::from(n * n);
        let a = BigInt::from(11 * n * n - 11 * n + 3);
        let c = BigInt::from((n - 1) * (n - 1));
        let next = (&a * &cur + &c * &prev) / &n2;
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.mod_floor(modulus));
    }
    out
}

/// Exact Apéry numbers `b_0..=b_{n_max}`.
pub fn apery_numbers(n_max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    out.push(cur.clone());
    for n in 1..=n_max as u64 {
        let next = (BigInt::from(11 * n * n - 11 * n + 3) * &cur
            + BigInt::from((n - 1) * (n - 1)) * &prev)
            / BigInt::from(n * n);
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}
