//! Constant terms of powers of Laurent polynomials, the ghost-term
//! decomposition behind their congruences modulo prime powers, and p-adic
//! unit roots of the Apéry family of elliptic curves.

pub mod apery;
pub mod cli;
pub mod congruence;
pub mod cubic;
pub mod fq;
pub mod ghost;
pub mod laurent;
pub mod padic;
pub mod polyparse;
pub mod polytope;
pub mod report;
pub mod simplex;
pub mod unitroot;
