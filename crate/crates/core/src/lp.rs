//! Exact linear programming over the rationals.
//!
//! Dense two-phase simplex on `A x = b, x >= 0` with Bland's rule, so it
//! always terminates. Infeasibility comes with a Farkas certificate `h`
//! satisfying `hᵀA >= 0` and `hᵀb < 0`, which callers can re-check without
//! trusting the solver.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Outcome of a feasibility query.
#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<Q>),
    /// Farkas certificate `h` with `hᵀA >= 0`, `hᵀb < 0`.
    Infeasible(Vec<Q>),
}

/// Outcome of a minimization.
#[derive(Clone, Debug, PartialEq)]
pub enum Optimum {
    Optimal { x: Vec<Q>, value: Q },
    Infeasible(Vec<Q>),
    Unbounded,
}

/// An equality-form program `A x = b, x >= 0`.
#[derive(Clone, Debug)]
pub struct EqualityProgram {
    pub a: Vec<Vec<Q>>,
    pub b: Vec<Q>,
}

impl EqualityProgram {
    pub fn new(a: Vec<Vec<Q>>, b: Vec<Q>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} constraint rows but {} right-hand sides",
                a.len(),
                b.len()
            )));
        }
        let k = a.first().map_or(0, |r| r.len());
        if a.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch("ragged constraint matrix".into()));
        }
        Ok(EqualityProgram { a, b })
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.a.first().map_or(0, |r| r.len())
    }

    pub fn feasible(&self, budget: &Budget) -> Result<Feasibility> {
        let mut t = Tableau::phase_one(self);
        t.run(budget, |_| true)?;
        if !t.obj[t.rhs()].is_zero() {
            return Ok(Feasibility::Infeasible(t.farkas()));
        }
        Ok(Feasibility::Feasible(t.solution(self.cols())))
    }

    pub fn minimize(&self, c: &[Q], budget: &Budget) -> Result<Optimum> {
        if c.len() != self.cols() {
            return Err(Error::DimensionMismatch(format!(
                "objective has {} entries for {} variables",
                c.len(),
                self.cols()
            )));
        }
        let mut t = Tableau::phase_one(self);
        t.run(budget, |_| true)?;
        if !t.obj[t.rhs()].is_zero() {
            return Ok(Optimum::Infeasible(t.farkas()));
        }
        t.drive_out_artificials();
        t.set_objective(c);
        let k = self.cols();
        if !t.run(budget, |j| j < k)? {
            return Ok(Optimum::Unbounded);
        }
        let x = t.solution(k);
        let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
        Ok(Optimum::Optimal { x, value })
    }

    /// `hᵀA >= 0` and `hᵀb < 0`: certifies that no `x >= 0` solves `A x = b`.
    pub fn check_farkas(&self, h: &[Q]) -> bool {
        if h.len() != self.rows() {
            return false;
        }
        let hb: Q = h.iter().zip(&self.b).map(|(x, y)| x * y).sum();
        hb.is_negative()
            && (0..self.cols()).all(|j| {
                let s: Q = h.iter().zip(&self.a).map(|(hi, row)| hi * &row[j]).sum();
                !s.is_negative()
            })
    }

    /// `x >= 0` and `A x = b` exactly.
    pub fn check_solution(&self, x: &[Q]) -> bool {
        x.len() == self.cols()
            && x.iter().all(|v| !v.is_negative())
            && self.a.iter().zip(&self.b).all(|(row, bi)| {
                let s: Q = row.iter().zip(x).map(|(a, v)| a * v).sum();
                &s == bi
            })
    }
}

struct Tableau {
    /// Constraint rows: `k` originals, `m` artificials, then the rhs.
    rows: Vec<Vec<Q>>,
    /// Reduced costs in the same layout; the rhs slot holds `-objective`.
    obj: Vec<Q>,
    basis: Vec<usize>,
    /// Sign applied to each original row to make its rhs nonnegative.
    signs: Vec<bool>,
    k: usize,
    m: usize,
}

impl Tableau {
    fn phase_one(p: &EqualityProgram) -> Self {
        let m = p.rows();
        let k = p.cols();
        let mut rows = Vec::with_capacity(m);
        let mut signs = Vec::with_capacity(m);
        for (i, (row, bi)) in p.a.iter().zip(&p.b).enumerate() {
            let neg = bi.is_negative();
            let mut r: Vec<Q> = row.iter().map(|x| if neg { -x } else { x.clone() }).collect();
            r.extend((0..m).map(|j| if j == i { Q::one() } else { Q::zero() }));
            r.push(if neg { -bi } else { bi.clone() });
            rows.push(r);
            signs.push(neg);
        }
        let mut obj = vec![Q::zero(); k + m + 1];
        for j in (0..k).chain(std::iter::once(k + m)) {
            obj[j] = -rows.iter().map(|r| &r[j]).sum::<Q>();
        }
        Tableau {
            rows,
            obj,
            basis: (k..k + m).collect(),
            signs,
            k,
            m,
        }
    }

    fn rhs(&self) -> usize {
        self.k + self.m
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, y) in self.obj.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's-rule iterations over columns allowed by `eligible`. Returns
    /// false when the objective is unbounded below.
    fn run(&mut self, budget: &Budget, eligible: impl Fn(usize) -> bool) -> Result<bool> {
        let rhs = self.rhs();
        loop {
            budget.tick("simplex pivot")?;
            let Some(c) = (0..rhs).find(|&j| eligible(j) && self.obj[j].is_negative()) else {
                return Ok(true);
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Ok(false),
            }
        }
    }

    fn farkas(&self) -> Vec<Q> {
        // y_i = 1 - (reduced cost of artificial i); h = -S y
        (0..self.m)
            .map(|i| {
                let y = Q::one() - &self.obj[self.k + i];
                if self.signs[i] {
                    y
                } else {
                    -y
                }
            })
            .collect()
    }

    fn solution(&self, k: usize) -> Vec<Q> {
        let mut x = vec![Q::zero(); k];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < k {
                x[b] = self.rows[i][self.rhs()].clone();
            }
        }
        x
    }

    /// After a zero-cost phase one, replaces basic artificials by original
    /// columns, dropping rows that turn out to be redundant.
    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.k {
                match (0..self.k).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    fn set_objective(&mut self, c: &[Q]) {
        let rhs = self.rhs();
        let mut obj = vec![Q::zero(); rhs + 1];
        obj[..self.k].clone_from_slice(c);
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &c[b];
            if !cb.is_zero() {
                for (o, x) in obj.iter_mut().zip(row) {
                    *o -= cb * x;
                }
            }
        }
        self.obj = obj;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prog(a: &[&[i64]], b: &[i64]) -> EqualityProgram {
        EqualityProgram::new(
            a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
            b.iter().map(|&x| q(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn feasible_system_returns_exact_solution() {
        let p = prog(&[&[1, 1, 0], &[0, 1, 1]], &[1, 1]);
        match p.feasible(&Budget::unlimited()).unwrap() {
            Feasibility::Feasible(x) => assert!(p.check_solution(&x)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_system_has_farkas_certificate() {
        // x + y = 1 and x + y = 2
        let p = prog(&[&[1, 1], &[1, 1]], &[1, 2]);
        match p.feasible(&Budget::unlimited()).unwrap() {
            Feasibility::Infeasible(h) => assert!(p.check_farkas(&h)),
            other => panic!("{other:?}"),
        }
        // x - y = -1 with negative rhs flipped internally, plus x + y = 0
        let p = prog(&[&[1, -1], &[1, 1]], &[-1, 0]);
        match p.feasible(&Budget::unlimited()).unwrap() {
            Feasibility::Infeasible(h) => assert!(p.check_farkas(&h)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn minimize_with_redundant_rows() {
        // x + y + z = 2, duplicated; minimize x - z
        let p = prog(&[&[1, 1, 1], &[1, 1, 1]], &[2, 2]);
        match p.minimize(&[q(1), q(0), q(-1)], &Budget::unlimited()).unwrap() {
            Optimum::Optimal { x, value } => {
                assert!(p.check_solution(&x));
                assert_eq!(value, q(-2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbounded_detected() {
        let p = prog(&[&[1, -1]], &[0]);
        assert_eq!(
            p.minimize(&[q(-1), q(0)], &Budget::unlimited()).unwrap(),
            Optimum::Unbounded
        );
    }

    #[test]
    fn fractional_vertex() {
        // 2x = 1
        let p = prog(&[&[2]], &[1]);
        match p.feasible(&Budget::unlimited()).unwrap() {
            Feasibility::Feasible(x) => assert_eq!(x[0], Q::new(1.into(), 2.into())),
            other => panic!("{other:?}"),
        }
    }
}
