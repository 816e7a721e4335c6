//! Exact rational linear programming for covering-type problems.
//!
//! Solves `min c·x  s.t.  A x >= b, x >= 0` with `c >= 0` by running a
//! least-index (Bland) simplex on the dual `max b·y  s.t.  Aᵀy <= c, y >= 0`,
//! whose origin is feasible because `c >= 0`. The primal optimum is read off
//! the reduced costs of the dual slacks, and both solutions are returned so
//! callers can check the duality certificate themselves.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    costs: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LpSolution {
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    #[serde(serialize_with = "ser_rationals")]
    pub primal: Vec<Rational>,
    #[serde(serialize_with = "ser_rationals")]
    pub dual: Vec<Rational>,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn ser_rationals<S: serde::Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

impl LinearProgram {
    pub fn new(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>, costs: Vec<Rational>) -> Result<Self> {
        if matrix.len() != rhs.len() {
            return Err(Error::InvalidProgram(format!("{} rows but {} right-hand sides", matrix.len(), rhs.len())));
        }
        if let Some(i) = matrix.iter().position(|row| row.len() != costs.len()) {
            return Err(Error::InvalidProgram(format!("row {i} does not have {} columns", costs.len())));
        }
        if costs.iter().any(|c| c.is_negative()) {
            return Err(Error::InvalidProgram("costs must be nonnegative".into()));
        }
        Ok(LinearProgram { matrix, rhs, costs })
    }

    pub fn from_integers(matrix: &[Vec<i64>], rhs: &[i64], costs: &[i64]) -> Result<Self> {
        let q = |v: &[i64]| v.iter().map(|&x| rational(x)).collect::<Vec<_>>();
        Self::new(matrix.iter().map(|r| q(r)).collect(), q(rhs), q(costs))
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn columns(&self) -> usize {
        self.costs.len()
    }

    /// Optimal primal/dual pair, or `Precondition` if the primal is infeasible.
    pub fn solve(&self) -> Result<LpSolution> {
        let m = self.rows();
        let n = self.columns();
        let width = m + n;
        // one tableau row per dual constraint (primal column), rhs last
        let mut tab: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                let mut row = Vec::with_capacity(width + 1);
                row.extend(self.matrix.iter().map(|r| r[j].clone()));
                row.extend((0..n).map(|k| if k == j { Rational::one() } else { Rational::zero() }));
                row.push(self.costs[j].clone());
                row
            })
            .collect();
        let mut obj: Vec<Rational> = self.rhs.iter().map(|b| -b.clone()).collect();
        obj.extend((0..=n).map(|_| Rational::zero()));
        let mut basis: Vec<usize> = (m..m + n).collect();

        while let Some(enter) = (0..width).find(|&k| obj[k].is_negative()) {
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..n {
                if !tab[r][enter].is_positive() {
                    continue;
                }
                let ratio = &tab[r][width] / &tab[r][enter];
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*best_r]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((pr, _)) = leave else {
                return Err(Error::Precondition("covering program is infeasible".into()));
            };
            pivot(&mut tab, &mut obj, pr, enter);
            basis[pr] = enter;
        }

        let mut dual = vec![Rational::zero(); m];
        for (r, &b) in basis.iter().enumerate() {
            if b < m {
                dual[b] = tab[r][width].clone();
            }
        }
        let primal = obj[m..m + n].to_vec();
        let solution = LpSolution { value: obj[width].clone(), primal, dual };
        debug_assert!(self.certifies(&solution));
        Ok(solution)
    }

    /// Checks primal and dual feasibility and equal objective values, which
    /// together prove optimality.
    pub fn certifies(&self, s: &LpSolution) -> bool {
        let n = self.columns();
        if s.primal.len() != n || s.dual.len() != self.rows() {
            return false;
        }
        let nonneg = s.primal.iter().chain(&s.dual).all(|v| !v.is_negative());
        let primal_ok = self
            .matrix
            .iter()
            .zip(&self.rhs)
            .all(|(row, b)| dot(row, &s.primal) >= *b);
        let dual_ok = (0..n).all(|j| {
            let used: Rational = self.matrix.iter().zip(&s.dual).map(|(row, y)| &row[j] * y).sum();
            used <= self.costs[j]
        });
        let primal_value = dot(&self.costs, &s.primal);
        let dual_value = dot(&self.rhs, &s.dual);
        nonneg && primal_ok && dual_ok && primal_value == s.value && dual_value == s.value
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn pivot(tab: &mut [Vec<Rational>], obj: &mut [Rational], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for v in tab[pr].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tab[pr].clone();
    let eliminate = |row: &mut [Rational]| {
        let factor = row[pc].clone();
        if factor.is_zero() {
            return;
        }
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    };
    for (r, row) in tab.iter_mut().enumerate() {
        if r != pr {
            eliminate(row);
        }
    }
    eliminate(obj);
}
