//! Newton polytopes and exact hull-membership tests.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::laurent::{ExponentVector, LaurentPoly};
use crate::simplex::{int, LpOutcome, Rational, StandardLp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Closed,
    StrictInterior,
}

/// Convex hull of a finite set of lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    arity: usize,
    points: Vec<ExponentVector>,
    vertices: Vec<ExponentVector>,
}

fn closed_lp(generators: &[ExponentVector], q: &[Rational]) -> StandardLp {
    let d = q.len();
    let n = generators.len();
    let mut a = vec![vec![Rational::zero(); n]; d + 1];
    for (j, g) in generators.iter().enumerate() {
        for (k, &x) in g.entries().iter().enumerate() {
            a[k][j] = int(x);
        }
        a[d][j] = int(1);
    }
    let mut b = q.to_vec();
    b.push(int(1));
    StandardLp {
        a,
        b,
        c: vec![Rational::zero(); n],
    }
}

/// Maximize `eps` with `q + eps * w` in the hull for every `w = +-e_k`.
fn interior_lp(generators: &[ExponentVector], q: &[Rational]) -> StandardLp {
    let d = q.len();
    let n = generators.len();
    let blocks = 2 * d;
    let cols = blocks * n + 1;
    let eps = cols - 1;
    let mut a = Vec::with_capacity(blocks * (d + 1));
    let mut b = Vec::with_capacity(blocks * (d + 1));
    for block in 0..blocks {
        let axis = block / 2;
        let sign = if block % 2 == 0 { 1 } else { -1 };
        for (k, qk) in q.iter().enumerate() {
            let mut row = vec![Rational::zero(); cols];
            for (j, g) in generators.iter().enumerate() {
                row[block * n + j] = int(g.entries()[k]);
            }
            if k == axis {
                row[eps] = int(-sign);
            }
            a.push(row);
            b.push(qk.clone());
        }
        let mut row = vec![Rational::zero(); cols];
        for j in 0..n {
            row[block * n + j] = int(1);
        }
        a.push(row);
        b.push(int(1));
    }
    let mut c = vec![Rational::zero(); cols];
    c[eps] = int(1);
    StandardLp { a, b, c }
}

fn contains(generators: &[ExponentVector], q: &[Rational], mode: Membership) -> bool {
    match mode {
        Membership::Closed => closed_lp(generators, q).solve() != LpOutcome::Infeasible,
        Membership::StrictInterior => match interior_lp(generators, q).solve() {
            LpOutcome::Optimal { value, .. } => value.is_positive(),
            // a bounded hull cannot give an unbounded step
            LpOutcome::Unbounded => unreachable!("hull of finitely many points is bounded"),
            LpOutcome::Infeasible => false,
        },
    }
}

fn integer_point(e: &ExponentVector) -> Vec<Rational> {
    e.entries().iter().map(|&x| int(x)).collect()
}

impl LatticePolytope {
    pub fn new(arity: usize, points: impl IntoIterator<Item = ExponentVector>) -> Self {
        let mut points: Vec<ExponentVector> = points.into_iter().collect();
        assert!(points.iter().all(|p| p.arity() == arity));
        points.sort();
        points.dedup();
        let vertices = if points.len() <= 1 {
            points.clone()
        } else {
            points
                .iter()
                .enumerate()
                .filter(|(i, v)| {
                    let others: Vec<ExponentVector> = points
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| j != i)
                        .map(|(_, p)| p.clone())
                        .collect();
                    !contains(&others, &integer_point(v), Membership::Closed)
                })
                .map(|(_, v)| v.clone())
                .collect()
        };
        LatticePolytope {
            arity,
            points,
            vertices,
        }
    }

    /// Newton polytope of the support of `poly`.
    pub fn newton(poly: &LaurentPoly) -> Self {
        Self::new(poly.arity(), poly.support())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn contains(&self, q: &[Rational], mode: Membership) -> bool {
        assert_eq!(q.len(), self.arity, "arity mismatch");
        if self.vertices.is_empty() {
            return false;
        }
        contains(&self.vertices, q, mode)
    }

    pub fn contains_lattice_point(&self, e: &ExponentVector, mode: Membership) -> bool {
        self.contains(&integer_point(e), mode)
    }

    /// Whether `e / scale` lies in the closed polytope.
    pub fn contains_scaled(&self, e: &ExponentVector, scale: &BigInt) -> bool {
        let q: Vec<Rational> = e
            .entries()
            .iter()
            .map(|&x| Rational::new(BigInt::from(x), scale.clone()))
            .collect();
        self.contains(&q, Membership::Closed)
    }

    /// Integer points of the interior. Interior points lie strictly inside
    /// the bounding box of the support, so only that open box is scanned.
    pub fn interior_lattice_points(&self) -> Vec<ExponentVector> {
        let Some(first) = self.points.first() else {
            return Vec::new();
        };
        let mut lo = first.entries().to_vec();
        let mut hi = lo.clone();
        for p in &self.points {
            for (k, &x) in p.entries().iter().enumerate() {
                lo[k] = lo[k].min(x);
                hi[k] = hi[k].max(x);
            }
        }
        if lo.iter().zip(&hi).any(|(l, h)| h - l < 2) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur: Vec<i64> = lo.iter().map(|l| l + 1).collect();
        loop {
            let e = ExponentVector::new(cur.clone());
            if self.contains_lattice_point(&e, Membership::StrictInterior) {
                out.push(e);
            }
            // odometer over the open box, last coordinate fastest
            let mut k = self.arity;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] + 1 < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k] + 1;
            }
        }
    }
}

/// Outcome of the "origin is the only interior lattice point" test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub vertices: Vec<ExponentVector>,
    pub interior_points: Vec<ExponentVector>,
}

impl AdmissibilityReport {
    /// Interior points other than the origin.
    pub fn offending_points(&self) -> Vec<&ExponentVector> {
        self.interior_points
            .iter()
            .filter(|e| !e.is_zero())
            .collect()
    }

    pub fn explanation(&self) -> String {
        if self.admissible {
            return "origin is the only interior lattice point".into();
        }
        let pts: Vec<String> = self.interior_points.iter().map(|e| e.to_string()).collect();
        if self.interior_points.iter().any(|e| e.is_zero()) {
            format!(
                "Newton polytope has {} interior lattice points: {}",
                pts.len(),
                pts.join(" ")
            )
        } else if pts.is_empty() {
            "origin is not an interior point of the Newton polytope".into()
        } else {
            format!(
                "origin is not interior; interior lattice points: {}",
                pts.join(" ")
            )
        }
    }
}

pub fn is_admissible(poly: &LaurentPoly) -> AdmissibilityReport {
    let polytope = LatticePolytope::newton(poly);
    let interior = polytope.interior_lattice_points();
    let admissible = interior.len() == 1 && interior[0].is_zero();
    AdmissibilityReport {
        admissible,
        vertices: polytope.vertices().to_vec(),
        interior_points: interior,
    }
}
