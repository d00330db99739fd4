//! Exact rational linear programming: two-phase tableau simplex with Bland's
//! rule, for the small programs that hull membership needs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, x: Vec<Rational> },
}

/// `maximize c.x subject to A x = b, x >= 0`.
#[derive(Debug, Clone)]
pub struct StandardLp {
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    // reduced costs r_j = c_j - c_B B^{-1} A_j
    cost: Vec<Rational>,
    value: Rational,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x /= &pivot;
        }
        self.rhs[row] /= &pivot;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let factor = self.rows[i][col].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = self.cost[col].clone();
        if !factor.is_zero() {
            for (x, y) in self.cost.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
            self.value += &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// Runs simplex iterations over the columns `0..active`. Returns false
    /// when the objective is unbounded.
    fn optimize(&mut self, active: usize) -> bool {
        loop {
            // Bland: lowest-index improving column
            let Some(col) = (0..active).find(|&j| self.cost[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((r, v)) => ratio < *v || (ratio == *v && self.basis[i] < self.basis[*r]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

impl StandardLp {
    pub fn solve(&self) -> LpOutcome {
        let m = self.a.len();
        let n = self.c.len();
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for (row, b) in self.a.iter().zip(&self.b) {
            debug_assert_eq!(row.len(), n);
            let flip = b.is_negative();
            let mut r: Vec<Rational> = row
                .iter()
                .map(|x| if flip { -x.clone() } else { x.clone() })
                .collect();
            r.extend((0..m).map(|_| Rational::zero()));
            rows.push(r);
            rhs.push(if flip { -b.clone() } else { b.clone() });
        }
        for (i, r) in rows.iter_mut().enumerate() {
            r[n + i] = Rational::one();
        }
        // phase one: maximize -(sum of artificials)
        let mut cost = vec![Rational::zero(); n + m];
        let mut value = Rational::zero();
        for (r, b) in rows.iter().zip(&rhs) {
            for j in 0..n {
                cost[j] += &r[j];
            }
            value -= b;
        }
        let mut t = Tableau {
            rows,
            rhs,
            basis: (n..n + m).collect(),
            cost,
            value,
        };
        t.optimize(n + m);
        if !t.value.is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive remaining (zero-level) artificials out of the basis
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= n {
                match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for r in t.rows.iter_mut() {
            r.truncate(n);
        }
        // phase two
        let mut cost = self.c.clone();
        let mut value = Rational::zero();
        for (i, &bj) in t.basis.iter().enumerate() {
            let cb = self.c[bj].clone();
            if cb.is_zero() {
                continue;
            }
            for (c, a) in cost.iter_mut().zip(&t.rows[i]) {
                *c -= &cb * a;
            }
            value += &cb * &t.rhs[i];
        }
        t.cost = cost;
        t.value = value;
        if !t.optimize(n) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Rational::zero(); n];
        for (i, &bj) in t.basis.iter().enumerate() {
            x[bj] = t.rhs[i].clone();
        }
        LpOutcome::Optimal { value: t.value, x }
    }
}

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}
