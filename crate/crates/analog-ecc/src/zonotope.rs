//! Geometry of generator zonotopes: the sets `{ sum_j a_j g_j : |a_j| <= 1 }`
//! spanned by the columns of a parity-check matrix.
//!
//! Everything a height computation needs reduces to four questions about such
//! a set: the support function along a direction, membership of a scaled
//! point, the largest scaling of a direction that stays inside, and a
//! separating hyperplane for points outside. Membership and scaling are
//! answered by LPs; in the plane there is also a closed-form backend used to
//! cross-check the LP answers exactly.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lp::{self, LpProblem, LpStatus};
use crate::numerics::{ExtendedScalar, Matrix, Scalar, Vector};

/// Centrally symmetric convex polytope given by its generator list.
/// Zero generators are legal (they encode unconstrained coordinates of a
/// degenerate code) and are simply invisible to the geometry.
#[derive(Clone, Debug, PartialEq)]
pub struct Zonotope<S> {
    dim: usize,
    generators: Vec<Vector<S>>,
}

impl<S: Scalar> Zonotope<S> {
    pub fn new(dim: usize, generators: Vec<Vector<S>>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::dim(format!(
                "generator of length {} in a {dim}-dimensional zonotope",
                bad.len()
            )));
        }
        Ok(Zonotope { dim, generators })
    }

    /// Generators are the columns of `m`.
    pub fn from_matrix_columns(m: &Matrix<S>) -> Self {
        Zonotope {
            dim: m.rows(),
            generators: m.columns().collect(),
        }
    }

    /// Generators are the columns of `m` except column `skip`.
    pub fn from_matrix_columns_excluding(m: &Matrix<S>, skip: usize) -> Self {
        Zonotope {
            dim: m.rows(),
            generators: (0..m.cols())
                .filter(|&c| c != skip)
                .map(|c| m.col(c))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector<S>] {
        &self.generators
    }

    /// Support function: max over the zonotope of `<u, .>`, which for a
    /// generator representation is the sum of `|<u, g_j>|`.
    pub fn support(&self, u: &Vector<S>) -> Result<S> {
        if u.len() != self.dim {
            return Err(Error::dim(format!(
                "support direction of length {} in dimension {}",
                u.len(),
                self.dim
            )));
        }
        let mut acc = S::zero();
        for g in &self.generators {
            acc = acc + g.dot(u)?.abs();
        }
        Ok(acc)
    }

    fn scaled_generator_matrix(&self, scale: &S) -> Matrix<S> {
        Matrix::from_fn(self.dim, self.generators.len(), |i, j| {
            self.generators[j][i].clone() * scale.clone()
        })
    }

    fn membership_problem(&self, p: &Vector<S>, scale: &S) -> Result<LpProblem<S>> {
        if p.len() != self.dim {
            return Err(Error::dim(format!(
                "point of length {} in dimension {}",
                p.len(),
                self.dim
            )));
        }
        if *scale < S::zero() {
            return Err(Error::input(
                "membership scale must be nonnegative".to_string(),
            ));
        }
        let n = self.generators.len();
        LpProblem::new(
            vec![S::zero(); n],
            self.scaled_generator_matrix(scale),
            p.as_slice().to_vec(),
            vec![Some(-S::one()); n],
            vec![Some(S::one()); n],
        )
    }

    /// Is `p` in `scale * Z`? Decided by LP feasibility of
    /// `p = sum_j a_j (scale g_j), |a_j| <= 1`. Scale zero degenerates to
    /// `p = 0`, which the same system answers.
    pub fn contains(&self, p: &Vector<S>, scale: &S) -> Result<bool> {
        lp::feasible(&self.membership_problem(p, scale)?)
    }

    /// Membership coefficients `a` with `p = sum_j a_j (scale g_j)`, when inside.
    pub fn membership_multipliers(&self, p: &Vector<S>, scale: &S) -> Result<Option<Vec<S>>> {
        lp::feasible_point(&self.membership_problem(p, scale)?)
    }

    /// sup { c >= 0 : c d in Z }, together with the generator coefficients
    /// attaining it. `Infinite` when the LP is unbounded (d = 0, or d inside
    /// the lineality of a degenerate generator set); 0 when d points outside
    /// the cone of the zonotope.
    pub fn max_scaling_with_multipliers(
        &self,
        d: &Vector<S>,
    ) -> Result<(ExtendedScalar<S>, Option<Vec<S>>)> {
        if d.len() != self.dim {
            return Err(Error::dim(format!(
                "direction of length {} in dimension {}",
                d.len(),
                self.dim
            )));
        }
        let n = self.generators.len();
        // variables: [c, a_0 .. a_{n-1}], maximize c
        // rows: c d - sum_j a_j g_j = 0
        let eq = Matrix::from_fn(self.dim, n + 1, |i, j| {
            if j == 0 {
                d[i].clone()
            } else {
                -self.generators[j - 1][i].clone()
            }
        });
        let mut objective = vec![S::zero(); n + 1];
        objective[0] = S::one();
        let mut lower = vec![Some(-S::one()); n + 1];
        let mut upper = vec![Some(S::one()); n + 1];
        lower[0] = Some(S::zero());
        upper[0] = None;
        let problem = LpProblem::new(objective, eq, vec![S::zero(); self.dim], lower, upper)?;
        let sol = lp::solve(&problem)?;
        match sol.status {
            LpStatus::Unbounded => Ok((ExtendedScalar::Infinite, None)),
            LpStatus::Optimal => {
                let point = sol.point.expect("optimal LP carries a point");
                let c = point[0].clone();
                Ok((ExtendedScalar::Finite(c), Some(point[1..].to_vec())))
            }
            LpStatus::Infeasible => Err(Error::Internal(
                "scaling LP is feasible at c = 0 by construction".to_string(),
            )),
        }
    }

    pub fn max_scaling(&self, d: &Vector<S>) -> Result<ExtendedScalar<S>> {
        Ok(self.max_scaling_with_multipliers(d)?.0)
    }

    /// A direction `u` with `<u, p>` strictly above the support value, when
    /// `p` lies outside the zonotope; `None` when `p` is inside. The
    /// certificate comes from the Farkas dual of the membership LP and is
    /// normalized to infinity-norm 1; it is re-verified against `support`
    /// before being returned.
    pub fn separation_certificate(&self, p: &Vector<S>) -> Result<Option<Vector<S>>> {
        let problem = self.membership_problem(p, &S::one())?;
        let sol = lp::solve(&problem)?;
        if sol.status != LpStatus::Infeasible {
            return Ok(None);
        }
        let raw = sol
            .dual
            .ok_or_else(|| Error::Internal("infeasible LP without Farkas dual".to_string()))?;
        let u = Vector::new(raw);
        let norm = u.inf_norm();
        if norm.is_zero() {
            return Err(Error::Internal("zero Farkas direction".to_string()));
        }
        let u: Vector<S> = u.iter().map(|v| v.clone() / norm.clone()).collect();
        let lhs = u.dot(p)?;
        let rhs = self.support(&u)?;
        let margin = if S::EXACT {
            S::zero()
        } else {
            S::from_f64(1e-9) * (S::one() + lhs.abs())
        };
        if lhs.clone() - rhs.clone() <= margin {
            return Err(Error::Internal(format!(
                "separation certificate failed re-verification: {lhs} vs {rhs}"
            )));
        }
        Ok(Some(u))
    }

    /// Nonzero generators flipped into the closed upper half-plane and merged
    /// by direction, sorted by ascending angle.
    fn merged_planar_generators(&self) -> Result<Vec<Vector<S>>> {
        if self.dim != 2 {
            return Err(Error::input(format!(
                "planar backend requires dimension 2, got {}",
                self.dim
            )));
        }
        let mut dirs: Vec<Vector<S>> = Vec::new();
        for g in &self.generators {
            if g.is_zero() {
                continue;
            }
            let flip = g[1] < S::zero() || (g[1].is_zero() && g[0] < S::zero());
            let h: Vector<S> = if flip {
                g.iter().map(|v| -v.clone()).collect()
            } else {
                g.clone()
            };
            if let Some(existing) = dirs.iter_mut().find(|e| cross(e, &h).is_negligible()) {
                *existing = existing.add(&h)?;
            } else {
                dirs.push(h);
            }
        }
        dirs.sort_by(|a, b| {
            let c = cross(a, b);
            if c > S::zero() {
                std::cmp::Ordering::Less
            } else if c < S::zero() {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        Ok(dirs)
    }

    /// Vertices of the zonogon in counterclockwise order (standard angular
    /// sweep). A single-direction set collapses to the two segment endpoints;
    /// an all-zero generator list collapses to the origin.
    pub fn vertices_2d(&self) -> Result<Vec<Vector<S>>> {
        let dirs = self.merged_planar_generators()?;
        if dirs.is_empty() {
            return Ok(vec![Vector::zeros(2)]);
        }
        let mut start = Vector::zeros(2);
        for g in &dirs {
            start = start.sub(g)?;
        }
        if dirs.len() == 1 {
            let end = start.scale(&-S::one());
            return Ok(vec![start, end]);
        }
        let mut vertices = Vec::with_capacity(2 * dirs.len());
        let mut v = start.clone();
        vertices.push(v.clone());
        for g in &dirs {
            v = v.add(&g.scale(&S::from_int(2)))?;
            vertices.push(v.clone());
        }
        // second chain is the reflection; drop the shared endpoints
        for g in dirs.iter().take(dirs.len() - 1) {
            v = v.sub(&g.scale(&S::from_int(2)))?;
            vertices.push(v.clone());
        }
        Ok(vertices)
    }

    /// Exact planar value of [`Zonotope::max_scaling`]: the minimum over the
    /// zonogon's facet normals (perpendiculars of the distinct generator
    /// directions, plus the direction itself when the set is a segment) of
    /// `support(u) / |<u, d>|`.
    pub fn max_scaling_2d(&self, d: &Vector<S>) -> Result<ExtendedScalar<S>> {
        if d.len() != 2 {
            return Err(Error::dim(format!("planar direction of length {}", d.len())));
        }
        if d.is_zero() {
            return Err(Error::input(
                "planar scaling direction must be nonzero".to_string(),
            ));
        }
        let dirs = self.merged_planar_generators()?;
        if dirs.is_empty() {
            return Ok(ExtendedScalar::Finite(S::zero()));
        }
        let mut normals: Vec<Vector<S>> = dirs
            .iter()
            .map(|g| Vector::new(vec![-g[1].clone(), g[0].clone()]))
            .collect();
        if dirs.len() == 1 {
            // segment: the endpoints bound movement along the segment itself
            normals.push(dirs[0].clone());
        }
        let mut best: Option<S> = None;
        for u in &normals {
            let pairing = u.dot(d)?.abs();
            if pairing.is_negligible() {
                continue;
            }
            let bound = self.support(u)? / pairing;
            if best.as_ref().map_or(true, |b| bound < *b) {
                best = Some(bound);
            }
        }
        Ok(match best {
            Some(b) => ExtendedScalar::Finite(b),
            None => ExtendedScalar::Infinite,
        })
    }

    /// JSON form: the matrix whose columns are the generators.
    pub fn to_json(&self) -> Value {
        let m = Matrix::from_fn(self.dim, self.generators.len(), |i, j| {
            self.generators[j][i].clone()
        });
        m.to_json()
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let m = Matrix::<S>::from_json(v)?;
        Ok(Self::from_matrix_columns(&m))
    }
}

fn cross<S: Scalar>(a: &Vector<S>, b: &Vector<S>) -> S {
    a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone()
}
