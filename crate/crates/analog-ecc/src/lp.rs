//! Small dense linear-programming solver: bounded-variable primal simplex
//! with Bland's rule, two phases, generic over the scalar mode.
//!
//! The instances solved here are tiny and often degenerate (zonotope
//! membership systems routinely carry duplicated generator columns), so
//! cycling protection matters more than speed. Free variables are handled
//! natively through infinite bounds, unboundedness is detected exactly in
//! rational mode, and infeasible systems come back with a Farkas certificate
//! that downstream code turns into a separating hyperplane.

use crate::error::{Error, Result};
use crate::numerics::{Matrix, Scalar, Vector};

/// Dense LP in equality + box-bound form: maximize `objective . x` subject to
/// `eq_matrix x = eq_rhs` and `lower <= x <= upper`. `None` bounds are
/// infinite.
#[derive(Clone, Debug)]
pub struct LpProblem<S> {
    pub objective: Vec<S>,
    pub eq_matrix: Matrix<S>,
    pub eq_rhs: Vec<S>,
    pub lower: Vec<Option<S>>,
    pub upper: Vec<Option<S>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solver outcome. `point`/`objective_value` are present at `Optimal`.
///
/// `dual` holds the equality-row multipliers: at `Optimal` they satisfy the
/// usual sign conditions on reduced costs; at `Infeasible` they form a Farkas
/// direction `u` with `u.b > sum_j max_{x_j in [l_j,u_j]} (u.a_j) x_j`, the
/// raw material for separation certificates.
#[derive(Clone, Debug)]
pub struct LpSolution<S> {
    pub status: LpStatus,
    pub point: Option<Vec<S>>,
    pub objective_value: Option<S>,
    pub dual: Option<Vec<S>>,
}

#[derive(Clone, Debug, PartialEq)]
enum VarState {
    Basic(usize),
    AtLower,
    AtUpper,
    /// Nonbasic free variable parked at zero.
    FreeZero,
}

impl<S: Scalar> LpProblem<S> {
    pub fn new(
        objective: Vec<S>,
        eq_matrix: Matrix<S>,
        eq_rhs: Vec<S>,
        lower: Vec<Option<S>>,
        upper: Vec<Option<S>>,
    ) -> Result<Self> {
        let n = eq_matrix.cols();
        if objective.len() != n || lower.len() != n || upper.len() != n {
            return Err(Error::dim(format!(
                "LP with {n} columns: objective/bounds lengths {}/{}/{}",
                objective.len(),
                lower.len(),
                upper.len()
            )));
        }
        if eq_rhs.len() != eq_matrix.rows() {
            return Err(Error::dim(format!(
                "LP rhs length {} vs {} rows",
                eq_rhs.len(),
                eq_matrix.rows()
            )));
        }
        for j in 0..n {
            if let (Some(l), Some(u)) = (&lower[j], &upper[j]) {
                if l > u {
                    return Err(Error::input(format!("bounds of variable {j} cross: {l} > {u}")));
                }
            }
        }
        Ok(LpProblem {
            objective,
            eq_matrix,
            eq_rhs,
            lower,
            upper,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.eq_matrix.cols()
    }

    pub fn num_rows(&self) -> usize {
        self.eq_matrix.rows()
    }
}

/// Maximize the problem. Status is always correct; on `Optimal` the point is
/// feasible and the sign conditions on reduced costs are re-verified before
/// returning (exactly in rational mode).
pub fn solve<S: Scalar>(problem: &LpProblem<S>) -> Result<LpSolution<S>> {
    Simplex::new(problem)?.run(false)
}

/// Phase-1 feasibility of the equality-plus-box system (objective ignored).
pub fn feasible<S: Scalar>(problem: &LpProblem<S>) -> Result<bool> {
    Ok(feasible_point(problem)?.is_some())
}

/// Phase-1 feasibility, returning a feasible point when one exists.
pub fn feasible_point<S: Scalar>(problem: &LpProblem<S>) -> Result<Option<Vec<S>>> {
    let sol = Simplex::new(problem)?.run(true)?;
    Ok(match sol.status {
        LpStatus::Optimal => sol.point,
        _ => None,
    })
}

struct Simplex<'a, S> {
    problem: &'a LpProblem<S>,
    m: usize,
    n: usize,
    lower: Vec<Option<S>>,
    upper: Vec<Option<S>>,
    /// B^{-1} * cols, kept in step with `binv` by pivoting.
    tab: Matrix<S>,
    binv: Matrix<S>,
    basis: Vec<usize>,
    state: Vec<VarState>,
    iteration_cap: usize,
}

impl<'a, S: Scalar> Simplex<'a, S> {
    fn new(problem: &'a LpProblem<S>) -> Result<Self> {
        let m = problem.num_rows();
        let n = problem.num_vars();

        let mut state = Vec::with_capacity(n + m);
        for j in 0..n {
            state.push(match (&problem.lower[j], &problem.upper[j]) {
                (Some(_), _) => VarState::AtLower,
                (None, Some(_)) => VarState::AtUpper,
                (None, None) => VarState::FreeZero,
            });
        }

        // residual of the initial bound-parked point decides artificial signs
        let mut residual = problem.eq_rhs.clone();
        for j in 0..n {
            let v = nonbasic_value(&state[j], &problem.lower[j], &problem.upper[j]);
            if v.is_zero() {
                continue;
            }
            for i in 0..m {
                residual[i] = residual[i].clone() - problem.eq_matrix.at(i, j).clone() * v.clone();
            }
        }

        let mut cols = Matrix::zeros(m, n + m);
        for i in 0..m {
            for j in 0..n {
                *cols.at_mut(i, j) = problem.eq_matrix.at(i, j).clone();
            }
        }
        let mut lower = problem.lower.clone();
        let mut upper = problem.upper.clone();
        let mut basis = Vec::with_capacity(m);
        let mut binv = Matrix::zeros(m, m);
        for i in 0..m {
            let sign = if residual[i] >= S::zero() { S::one() } else { -S::one() };
            *cols.at_mut(i, n + i) = sign.clone();
            *binv.at_mut(i, i) = sign;
            lower.push(Some(S::zero()));
            upper.push(None);
            basis.push(n + i);
            state.push(VarState::Basic(i));
        }
        let tab = binv.matmul(&cols)?;

        Ok(Simplex {
            problem,
            m,
            n,
            lower,
            upper,
            tab,
            binv,
            basis,
            state,
            iteration_cap: 10 * (n + m).max(1),
        })
    }

    fn run(mut self, feasibility_only: bool) -> Result<LpSolution<S>> {
        // Phase 1: drive the artificial variables to zero.
        let mut phase1_obj = vec![S::zero(); self.n + self.m];
        for j in self.n..self.n + self.m {
            phase1_obj[j] = -S::one();
        }
        if self.optimize(&phase1_obj)? == LoopEnd::Unbounded {
            return Err(Error::Internal(
                "phase-1 objective cannot be unbounded".to_string(),
            ));
        }
        let infeasibility = (self.n..self.n + self.m)
            .map(|j| self.current_value(j))
            .fold(S::zero(), |a, b| a + b);
        let feas_tol = {
            let b_scale = self
                .problem
                .eq_rhs
                .iter()
                .fold(S::zero(), |a, b| if b.abs() > a { b.abs() } else { a });
            S::pivot_tol() * (S::one() + b_scale)
        };
        if infeasibility > feas_tol {
            let y = self.row_multipliers(&phase1_obj);
            let farkas = y.into_iter().map(|v| -v).collect();
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                point: None,
                objective_value: None,
                dual: Some(farkas),
            });
        }
        if feasibility_only {
            return Ok(LpSolution {
                status: LpStatus::Optimal,
                point: Some(self.structural_point()),
                objective_value: None,
                dual: None,
            });
        }

        // Phase 2: pin artificials at zero and optimize the real objective.
        for j in self.n..self.n + self.m {
            self.upper[j] = Some(S::zero());
            if !matches!(self.state[j], VarState::Basic(_)) {
                self.state[j] = VarState::AtLower;
            }
        }
        let mut phase2_obj = vec![S::zero(); self.n + self.m];
        phase2_obj[..self.n].clone_from_slice(&self.problem.objective);
        if self.optimize(&phase2_obj)? == LoopEnd::Unbounded {
            return Ok(LpSolution {
                status: LpStatus::Unbounded,
                point: None,
                objective_value: None,
                dual: None,
            });
        }

        let point = self.structural_point();
        let mut objective_value = S::zero();
        for j in 0..self.n {
            objective_value =
                objective_value + self.problem.objective[j].clone() * point[j].clone();
        }
        let dual = self.row_multipliers(&phase2_obj);
        self.verify_optimal(&point, &phase2_obj)?;
        Ok(LpSolution {
            status: LpStatus::Optimal,
            point: Some(point),
            objective_value: Some(objective_value),
            dual: Some(dual),
        })
    }

    /// Primal simplex loop under the given objective, Bland's rule on both
    /// the entering and leaving choices.
    fn optimize(&mut self, obj: &[S]) -> Result<LoopEnd> {
        for _ in 0..self.iteration_cap {
            let beta = self.basic_values();
            let reduced = self.reduced_costs(obj);

            // entering: smallest improving index
            let mut entering: Option<(usize, bool)> = None; // (var, increasing)
            for j in 0..self.n + self.m {
                let improving = match self.state[j] {
                    VarState::Basic(_) => None,
                    _ if self.is_fixed(j) => None,
                    VarState::AtLower => (reduced[j] > S::pivot_tol()).then_some(true),
                    VarState::AtUpper => (reduced[j] < -S::pivot_tol()).then_some(false),
                    VarState::FreeZero => {
                        if reduced[j] > S::pivot_tol() {
                            Some(true)
                        } else if reduced[j] < -S::pivot_tol() {
                            Some(false)
                        } else {
                            None
                        }
                    }
                };
                if let Some(increasing) = improving {
                    entering = Some((j, increasing));
                    break;
                }
            }
            let Some((q, increasing)) = entering else {
                return Ok(LoopEnd::Optimal);
            };

            // ratio test; own limit is the distance to the opposite bound
            let own_limit = match self.state[q] {
                VarState::AtLower => match (&self.lower[q], &self.upper[q]) {
                    (Some(l), Some(u)) => Some(u.clone() - l.clone()),
                    _ => None,
                },
                VarState::AtUpper => match (&self.lower[q], &self.upper[q]) {
                    (Some(l), Some(u)) => Some(u.clone() - l.clone()),
                    _ => None,
                },
                // FreeZero has two infinite bounds by construction
                VarState::FreeZero => None,
                VarState::Basic(_) => unreachable!("entering variable is nonbasic"),
            };

            let mut best: Option<(S, Option<usize>, usize)> = own_limit.map(|t| (t, None, q));
            for r in 0..self.m {
                let w = self.tab.at(r, q).clone();
                let delta = if increasing { -w } else { w.clone() };
                let v = self.basis[r];
                let limit = if delta > S::pivot_tol() {
                    self.upper[v]
                        .as_ref()
                        .map(|u| (u.clone() - beta[r].clone()) / delta.clone())
                } else if delta < -S::pivot_tol() {
                    self.lower[v]
                        .as_ref()
                        .map(|l| (l.clone() - beta[r].clone()) / delta.clone())
                } else {
                    None
                };
                if let Some(mut t) = limit {
                    if t < S::zero() {
                        t = S::zero(); // float drift guard
                    }
                    let replace = match &best {
                        None => true,
                        Some((bt, _, bv)) => t < *bt || (t == *bt && v < *bv),
                    };
                    if replace {
                        best = Some((t, Some(r), v));
                    }
                }
            }

            match best {
                None => return Ok(LoopEnd::Unbounded),
                Some((_, None, _)) => {
                    // bound flip, no basis change
                    self.state[q] = if increasing {
                        VarState::AtUpper
                    } else {
                        VarState::AtLower
                    };
                }
                Some((_, Some(r), leaving)) => {
                    let w = self.tab.at(r, q).clone();
                    let delta_positive = if increasing { w < S::zero() } else { w > S::zero() };
                    self.state[leaving] = if delta_positive {
                        VarState::AtUpper
                    } else {
                        VarState::AtLower
                    };
                    self.basis[r] = q;
                    self.state[q] = VarState::Basic(r);
                    self.pivot(r, q)?;
                }
            }
        }
        Err(Error::IterationLimit {
            limit: self.iteration_cap,
        })
    }

    fn pivot(&mut self, r: usize, q: usize) -> Result<()> {
        let p = self.tab.at(r, q).clone();
        if p.is_negligible() {
            return Err(Error::Internal("pivot on a negligible element".to_string()));
        }
        for c in 0..self.n + self.m {
            let v = self.tab.at(r, c).clone() / p.clone();
            *self.tab.at_mut(r, c) = v;
        }
        for c in 0..self.m {
            let v = self.binv.at(r, c).clone() / p.clone();
            *self.binv.at_mut(r, c) = v;
        }
        for i in 0..self.m {
            if i == r {
                continue;
            }
            let f = self.tab.at(i, q).clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..self.n + self.m {
                let v = self.tab.at(i, c).clone() - f.clone() * self.tab.at(r, c).clone();
                *self.tab.at_mut(i, c) = v;
            }
            for c in 0..self.m {
                let v = self.binv.at(i, c).clone() - f.clone() * self.binv.at(r, c).clone();
                *self.binv.at_mut(i, c) = v;
            }
        }
        Ok(())
    }

    fn is_fixed(&self, j: usize) -> bool {
        matches!((&self.lower[j], &self.upper[j]), (Some(l), Some(u)) if l == u)
    }

    fn nonbasic_value(&self, j: usize) -> S {
        nonbasic_value(&self.state[j], &self.lower[j], &self.upper[j])
    }

    fn current_value(&self, j: usize) -> S {
        match self.state[j] {
            VarState::Basic(r) => self.basic_values()[r].clone(),
            _ => self.nonbasic_value(j),
        }
    }

    /// x_B = B^{-1} b - sum over nonbasic j of (B^{-1} a_j) val_j, recomputed
    /// from scratch every iteration; instances are small enough that the
    /// robustness is worth more than the flops.
    fn basic_values(&self) -> Vec<S> {
        let mut beta: Vec<S> = (0..self.m)
            .map(|i| {
                let mut acc = S::zero();
                for c in 0..self.m {
                    acc = acc + self.binv.at(i, c).clone() * self.problem.eq_rhs[c].clone();
                }
                acc
            })
            .collect();
        for j in 0..self.n + self.m {
            if matches!(self.state[j], VarState::Basic(_)) {
                continue;
            }
            let v = self.nonbasic_value(j);
            if v.is_zero() {
                continue;
            }
            for (i, b) in beta.iter_mut().enumerate() {
                *b = b.clone() - self.tab.at(i, j).clone() * v.clone();
            }
        }
        beta
    }

    fn reduced_costs(&self, obj: &[S]) -> Vec<S> {
        (0..self.n + self.m)
            .map(|j| {
                let mut yaj = S::zero();
                for r in 0..self.m {
                    let cb = &obj[self.basis[r]];
                    if cb.is_zero() {
                        continue;
                    }
                    yaj = yaj + cb.clone() * self.tab.at(r, j).clone();
                }
                obj[j].clone() - yaj
            })
            .collect()
    }

    /// y = c_B^T B^{-1}, the equality-row multipliers under `obj`.
    fn row_multipliers(&self, obj: &[S]) -> Vec<S> {
        (0..self.m)
            .map(|i| {
                let mut acc = S::zero();
                for r in 0..self.m {
                    let cb = &obj[self.basis[r]];
                    if cb.is_zero() {
                        continue;
                    }
                    acc = acc + cb.clone() * self.binv.at(r, i).clone();
                }
                acc
            })
            .collect()
    }

    fn structural_point(&self) -> Vec<S> {
        let beta = self.basic_values();
        (0..self.n)
            .map(|j| match self.state[j] {
                VarState::Basic(r) => beta[r].clone(),
                _ => self.nonbasic_value(j),
            })
            .collect()
    }

    /// Complementary-slackness style re-verification of the claimed optimum:
    /// primal feasibility plus the sign conditions on reduced costs. Exact in
    /// rational mode; small residual tolerances in float mode.
    fn verify_optimal(&self, point: &[S], obj: &[S]) -> Result<()> {
        let eq_tol = if S::EXACT {
            S::zero()
        } else {
            let scale = S::one()
                + point
                    .iter()
                    .fold(S::zero(), |a, b| if b.abs() > a { b.abs() } else { a });
            S::from_f64(1e-8) * scale
        };
        let residual = self
            .problem
            .eq_matrix
            .mat_vec(&Vector::new(point.to_vec()))?;
        for (i, r) in residual.iter().enumerate() {
            let diff = (r.clone() - self.problem.eq_rhs[i].clone()).abs();
            if diff > eq_tol {
                return Err(Error::Internal(format!(
                    "optimal point violates equality row {i} by {diff}"
                )));
            }
        }
        let bound_tol = if S::EXACT { S::zero() } else { S::from_f64(1e-9) };
        for j in 0..self.n {
            if let Some(l) = &self.problem.lower[j] {
                if point[j].clone() + bound_tol.clone() < *l {
                    return Err(Error::Internal(format!("variable {j} below lower bound")));
                }
            }
            if let Some(u) = &self.problem.upper[j] {
                if point[j].clone() - bound_tol.clone() > *u {
                    return Err(Error::Internal(format!("variable {j} above upper bound")));
                }
            }
        }
        let slack_tol = if S::EXACT { S::zero() } else { S::from_f64(1e-7) };
        let reduced = self.reduced_costs(obj);
        for j in 0..self.n + self.m {
            if self.is_fixed(j) {
                continue;
            }
            let ok = match self.state[j] {
                VarState::Basic(_) => true,
                VarState::AtLower => reduced[j] <= slack_tol,
                VarState::AtUpper => reduced[j] >= -slack_tol.clone(),
                VarState::FreeZero => reduced[j].abs() <= slack_tol,
            };
            if !ok {
                return Err(Error::Internal(format!(
                    "reduced-cost sign condition fails at variable {j}"
                )));
            }
        }
        Ok(())
    }
}

fn nonbasic_value<S: Scalar>(state: &VarState, lower: &Option<S>, upper: &Option<S>) -> S {
    match state {
        VarState::AtLower => lower.clone().expect("AtLower requires a finite lower bound"),
        VarState::AtUpper => upper.clone().expect("AtUpper requires a finite upper bound"),
        VarState::FreeZero => S::zero(),
        VarState::Basic(_) => unreachable!("nonbasic value of a basic variable"),
    }
}

#[derive(PartialEq, Eq)]
enum LoopEnd {
    Optimal,
    Unbounded,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn box_problem<S: Scalar>(
        objective: &[i64],
        rows: &[&[i64]],
        rhs: &[i64],
        lower: &[Option<i64>],
        upper: &[Option<i64>],
    ) -> LpProblem<S> {
        let eq = if rows.is_empty() {
            Matrix::zeros(0, objective.len())
        } else {
            Matrix::from_int_rows(rows)
        };
        LpProblem::new(
            objective.iter().map(|&c| S::from_int(c)).collect(),
            eq,
            rhs.iter().map(|&b| S::from_int(b)).collect(),
            lower.iter().map(|l| l.map(S::from_int)).collect(),
            upper.iter().map(|u| u.map(S::from_int)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn maximize_over_unit_interval() {
        let p: LpProblem<f64> = box_problem(&[1], &[], &[], &[Some(0)], &[Some(1)]);
        let s = solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.objective_value.unwrap(), 1.0);
        assert_eq!(s.point.unwrap()[0], 1.0);
    }

    #[test]
    fn infeasible_equality_outside_box() {
        let p: LpProblem<Rational> =
            box_problem(&[1], &[&[1]], &[2], &[Some(0)], &[Some(1)]);
        let s = solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Infeasible);
        // Farkas direction: u*b must strictly exceed the box maximum of (u*a) x
        let u = s.dual.unwrap()[0].clone();
        let box_max = if u > Rational::zero() { u.clone() } else { Rational::zero() };
        assert!(u.clone() * Rational::from_int(2) > box_max);
    }

    #[test]
    fn zonotope_extent_along_axis() {
        // maximize c with c*(1,0) = a1*(1,0) + a2*(1,0) + a3*(0,1), |ai| <= 1
        // hand enumeration gives c = 2
        let p: LpProblem<Rational> = box_problem(
            &[1, 0, 0, 0],
            &[&[1, -1, -1, 0], &[0, 0, 0, -1]],
            &[0, 0],
            &[None, Some(-1), Some(-1), Some(-1)],
            &[None, Some(1), Some(1), Some(1)],
        );
        let s = solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.objective_value.unwrap(), Rational::from_int(2));
    }

    #[test]
    fn unbounded_free_variable() {
        let p: LpProblem<Rational> = box_problem(&[1], &[], &[], &[None], &[None]);
        assert_eq!(solve(&p).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn feasibility_phase_only() {
        let inside: LpProblem<f64> = box_problem(&[0], &[&[1]], &[0], &[Some(-1)], &[Some(1)]);
        assert!(feasible(&inside).unwrap());
        let outside: LpProblem<f64> = box_problem(&[0], &[&[1]], &[3], &[Some(-1)], &[Some(1)]);
        assert!(!feasible(&outside).unwrap());
    }

    #[test]
    fn degenerate_duplicated_columns_terminate() {
        // ten copies of the same generator: heavily degenerate ratio tests
        let rows: Vec<Vec<Rational>> = vec![
            (0..10).map(|_| Rational::from_int(1)).collect(),
            (0..10).map(|_| Rational::from_int(0)).collect(),
        ];
        let p = LpProblem::new(
            vec![Rational::from_int(1); 10],
            Matrix::from_rows(rows).unwrap(),
            vec![Rational::from_int(5), Rational::from_int(0)],
            vec![Some(Rational::from_int(-1)); 10],
            vec![Some(Rational::from_int(1)); 10],
        )
        .unwrap();
        let s = solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
    }

    #[test]
    fn malformed_dimensions_rejected() {
        let bad = LpProblem::new(
            vec![1.0, 2.0],
            Matrix::<f64>::identity(3),
            vec![0.0; 3],
            vec![None; 3],
            vec![None; 3],
        );
        assert!(bad.is_err());
        let crossing = LpProblem::new(
            vec![1.0],
            Matrix::<f64>::identity(1),
            vec![0.0],
            vec![Some(2.0)],
            vec![Some(1.0)],
        );
        assert!(crossing.is_err());
    }

    fn random_lp(rng: &mut ChaCha8Rng) -> LpProblem<f64> {
        let m = rng.gen_range(1..=6);
        let n = rng.gen_range(m..=14);
        let a = Matrix::from_fn(m, n, |_, _| f64::from(rng.gen_range(-4..=4)));
        let x0: Vec<f64> = (0..n).map(|_| f64::from(rng.gen_range(-2..=2))).collect();
        // rhs reachable from an interior-ish point so both statuses occur but
        // feasible instances dominate
        let mut rhs = vec![0.0; m];
        if rng.gen_bool(0.8) {
            for i in 0..m {
                for j in 0..n {
                    rhs[i] += a.at(i, j) * x0[j];
                }
            }
        } else {
            for r in rhs.iter_mut() {
                *r = f64::from(rng.gen_range(-20..=20));
            }
        }
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for _ in 0..n {
            let l = if rng.gen_bool(0.15) {
                None
            } else {
                Some(f64::from(rng.gen_range(-3..=-1)))
            };
            let u = if rng.gen_bool(0.15) {
                None
            } else {
                Some(f64::from(rng.gen_range(2..=3)))
            };
            lower.push(l);
            upper.push(u);
        }
        let objective: Vec<f64> = (0..n).map(|_| f64::from(rng.gen_range(-5..=5))).collect();
        LpProblem::new(objective, a, rhs, lower, upper).unwrap()
    }

    fn to_rational(p: &LpProblem<f64>) -> LpProblem<Rational> {
        LpProblem::new(
            p.objective.iter().map(|&c| Rational::from_f64(c)).collect(),
            p.eq_matrix.convert(),
            p.eq_rhs.iter().map(|&b| Rational::from_f64(b)).collect(),
            p.lower.iter().map(|l| l.map(Rational::from_f64)).collect(),
            p.upper.iter().map(|u| u.map(Rational::from_f64)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn float_and_rational_agree_on_random_lps() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for trial in 0..500 {
            let pf = random_lp(&mut rng);
            let pr = to_rational(&pf);
            let sf = solve(&pf).unwrap();
            let sr = solve(&pr).unwrap();
            assert_eq!(sf.status, sr.status, "trial {trial} status mismatch");
            if sf.status == LpStatus::Optimal {
                let vf = sf.objective_value.unwrap();
                let vr = sr.objective_value.unwrap().to_f64();
                assert!(
                    (vf - vr).abs() <= 1e-7 * (1.0 + vf.abs().max(vr.abs())),
                    "trial {trial}: {vf} vs {vr}"
                );
            }
        }
    }
}
