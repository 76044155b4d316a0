//! m-heights of vectors and the 1-height of codes.
//!
//! The 1-height of a nonzero vector is the ratio between its largest and
//! second-largest absolute coordinates; the 1-height of a code is the maximum
//! over its nonzero codewords. It controls single-error detection: a code
//! with 1-height `h` admits a sound detector exactly when the outlier
//! threshold satisfies `Delta >= (2h + 2) delta`.
//!
//! The code-level quantity is computed by three mutually checking routes:
//!
//! * syndrome space: for each coordinate `i`, the largest `c` with
//!   `c m_i` inside the zonotope of the remaining parity columns;
//! * codeword space: for each `i`, maximize `x_i` over the kernel of the
//!   parity-check matrix with every other coordinate clamped to `[-1, 1]`;
//! * an exact planar backend for redundancy-2 codes.
//!
//! All three agree exactly in rational mode; tests and the verification
//! campaigns hold them to that.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::lp::{self, LpProblem, LpStatus};
use crate::numerics::{Matrix, Scalar, Vector};
use crate::zonotope::Zonotope;

pub use crate::numerics::ExtendedScalar;

/// An `[n, k]` real code given by a full-row-rank parity-check matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CodeSpec<S> {
    n: usize,
    k: usize,
    parity_check: Matrix<S>,
}

impl<S: Scalar> CodeSpec<S> {
    /// Validates shape and rank: an `(n-k) x n` matrix of full row rank with
    /// `1 <= k < n`.
    pub fn new(parity_check: Matrix<S>) -> Result<Self> {
        let n = parity_check.cols();
        let rows = parity_check.rows();
        if rows == 0 || rows >= n {
            return Err(Error::InvalidCode(format!(
                "parity-check of shape {rows}x{n} leaves no valid dimension k"
            )));
        }
        if parity_check.rank() != rows {
            return Err(Error::InvalidCode(format!(
                "parity-check of shape {rows}x{n} is rank deficient"
            )));
        }
        Ok(CodeSpec {
            n,
            k: n - rows,
            parity_check,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn parity_check(&self) -> &Matrix<S> {
        &self.parity_check
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        self.parity_check.col(j)
    }

    /// Basis of the code itself (columns span the kernel of the parity check).
    pub fn kernel_basis(&self) -> Matrix<S> {
        self.parity_check.kernel_basis()
    }

    pub fn syndrome(&self, y: &Vector<S>) -> Result<Vector<S>> {
        self.parity_check.mat_vec(y)
    }

    /// Is `x` a codeword? Exact in rational mode, residual-based in float mode.
    pub fn is_codeword(&self, x: &Vector<S>) -> Result<bool> {
        let s = self.syndrome(x)?;
        let tol = if S::EXACT { S::zero() } else { S::from_f64(1e-8) };
        Ok(s.iter().all(|v| v.abs() <= tol))
    }

    pub fn convert<T: Scalar>(&self) -> Result<CodeSpec<T>> {
        CodeSpec::new(self.parity_check.convert())
    }

    pub fn to_json(&self) -> Value {
        self.parity_check.to_json()
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        CodeSpec::new(Matrix::from_json(v)?)
    }
}

/// Which algorithm computed a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Pick for the caller (currently the zonotope LP, valid for every code).
    Auto,
    /// Syndrome-space zonotope scaling LPs.
    ZonotopeLp,
    /// Codeword-space LPs maximizing one coordinate at a time.
    PrimalLp,
    /// Closed-form planar backend; redundancy-2 codes only.
    Exact2d,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::ZonotopeLp => "lp",
            Method::PrimalLp => "primal",
            Method::Exact2d => "exact2d",
        }
    }

    pub fn parse(s: &str) -> Result<Method> {
        Ok(match s {
            "auto" => Method::Auto,
            "lp" => Method::ZonotopeLp,
            "primal" => Method::PrimalLp,
            "exact2d" => Method::Exact2d,
            other => return Err(Error::input(format!("unknown method {other:?}"))),
        })
    }
}

/// Result of a code-level 1-height computation.
///
/// When finite, `witness` is a codeword attaining the height at coordinate
/// `arg_coordinate` (smallest such index), and `gamma1 = 2 (h1 + 1)` is the
/// unit-noise detection threshold.
#[derive(Clone, Debug)]
pub struct HeightReport<S> {
    pub h1: ExtendedScalar<S>,
    pub gamma1: ExtendedScalar<S>,
    pub arg_coordinate: usize,
    pub witness: Option<Vector<S>>,
    pub method: Method,
}

impl<S: Scalar> HeightReport<S> {
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "h1": self.h1.to_json(),
            "gamma1": self.gamma1.to_json(),
            "coordinate": self.arg_coordinate,
            "witness": match &self.witness {
                Some(w) => w.to_json(),
                None => Value::Null,
            },
            "method": self.method.tag(),
        })
    }
}

/// The m-height of a nonzero vector: sort absolute values descending and take
/// `|x_(0)| / |x_(m)|`; infinite when `m >= n` or the m-th value is zero.
pub fn vector_m_height<S: Scalar>(x: &Vector<S>, m: usize) -> Result<ExtendedScalar<S>> {
    if x.is_zero() {
        return Err(Error::input("m-height of the zero vector".to_string()));
    }
    if m >= x.len() {
        return Ok(ExtendedScalar::Infinite);
    }
    let mut magnitudes: Vec<S> = x.iter().map(|v| v.abs()).collect();
    magnitudes.sort_by(|a, b| b.partial_cmp(a).expect("finite magnitudes"));
    let denom = magnitudes[m].clone();
    if denom.is_zero() {
        return Ok(ExtendedScalar::Infinite);
    }
    Ok(ExtendedScalar::Finite(magnitudes[0].clone() / denom))
}

/// 1-height of a code, via the method of choice. `Auto` is the zonotope LP.
pub fn code_h1<S: Scalar>(code: &CodeSpec<S>, method: Method) -> Result<HeightReport<S>> {
    match method {
        Method::Auto | Method::ZonotopeLp => h1_zonotope(code),
        Method::PrimalLp => code_h1_primal(code),
        Method::Exact2d => h1_exact2d(code),
    }
}

/// Detection threshold `(2 h1 + 2) delta` for noise bound `delta > 0`.
pub fn gamma_threshold<S: Scalar>(h1: &ExtendedScalar<S>, delta: &S) -> Result<ExtendedScalar<S>> {
    if *delta <= S::zero() {
        return Err(Error::input("noise bound delta must be positive".to_string()));
    }
    let two = S::from_int(2);
    Ok(h1
        .clone()
        .map(|h| (two.clone() * h + two.clone()) * delta.clone()))
}

/// Proven lower bound on the 1-height of every `[n, k]` code:
/// `max(1, k / (n - k))`. The ceiling strengthening is reported elsewhere but
/// never asserted when `n - k` does not divide `k`.
pub fn h1_lower_bound<S: Scalar>(n: usize, k: usize) -> Result<S> {
    if k == 0 || k >= n {
        return Err(Error::input(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    let ratio = S::from_ratio(k as i64, (n - k) as i64);
    Ok(if ratio > S::one() { ratio } else { S::one() })
}

fn infinite_report<S: Scalar>(coordinate: usize, method: Method) -> HeightReport<S> {
    HeightReport {
        h1: ExtendedScalar::Infinite,
        gamma1: ExtendedScalar::Infinite,
        arg_coordinate: coordinate,
        witness: None,
        method,
    }
}

fn finish_report<S: Scalar>(
    code: &CodeSpec<S>,
    h1: S,
    coordinate: usize,
    witness: Vector<S>,
    method: Method,
) -> Result<HeightReport<S>> {
    if !code.is_codeword(&witness)? {
        return Err(Error::Internal(
            "height witness is not a codeword".to_string(),
        ));
    }
    let achieved = vector_m_height(&witness, 1)?;
    let ok = match &achieved {
        ExtendedScalar::Infinite => false,
        ExtendedScalar::Finite(a) => {
            if S::EXACT {
                *a == h1
            } else {
                (a.clone() - h1.clone()).abs() <= S::from_f64(1e-8) * (S::one() + h1.abs())
            }
        }
    };
    if !ok {
        return Err(Error::Internal(format!(
            "height witness attains {achieved}, expected {h1}"
        )));
    }
    let two = S::from_int(2);
    let gamma1 = two.clone() * (h1.clone() + S::one());
    Ok(HeightReport {
        h1: ExtendedScalar::Finite(h1),
        gamma1: ExtendedScalar::Finite(gamma1),
        arg_coordinate: coordinate,
        witness: Some(witness),
        method,
    })
}

/// Smallest-index zero parity column, if any: such a coordinate is entirely
/// unconstrained, the code has a weight-1 codeword, and the height is infinite.
fn zero_column<S: Scalar>(code: &CodeSpec<S>) -> Option<usize> {
    (0..code.n()).find(|&j| code.column(j).is_zero())
}

/// Witness from the scaling multipliers at coordinate `i`: the codeword with
/// `x_i = c` and `x_j = -a_j` for the remaining coordinates.
fn witness_from_multipliers<S: Scalar>(
    n: usize,
    i: usize,
    c: &S,
    multipliers: &[S],
) -> Vector<S> {
    let mut x = vec![S::zero(); n];
    x[i] = c.clone();
    let mut idx = 0;
    for (j, slot) in x.iter_mut().enumerate() {
        if j == i {
            continue;
        }
        *slot = -multipliers[idx].clone();
        idx += 1;
    }
    Vector::new(x)
}

fn h1_zonotope<S: Scalar>(code: &CodeSpec<S>) -> Result<HeightReport<S>> {
    if let Some(j) = zero_column(code) {
        return Ok(infinite_report(j, Method::ZonotopeLp));
    }
    let h = code.parity_check();
    let mut best: Option<(S, usize, Vec<S>)> = None;
    for i in 0..code.n() {
        let z_i = Zonotope::from_matrix_columns_excluding(h, i);
        let (scaling, multipliers) = z_i.max_scaling_with_multipliers(&h.col(i))?;
        match scaling {
            ExtendedScalar::Infinite => return Ok(infinite_report(i, Method::ZonotopeLp)),
            ExtendedScalar::Finite(c) => {
                if best.as_ref().map_or(true, |(b, _, _)| c > *b) {
                    best = Some((c, i, multipliers.expect("finite scaling has multipliers")));
                }
            }
        }
    }
    let (c, i, multipliers) = best.expect("n >= 2 coordinates scanned");
    let witness = witness_from_multipliers(code.n(), i, &c, &multipliers);
    finish_report(code, c, i, witness, Method::ZonotopeLp)
}

/// Independent codeword-space oracle: for each coordinate maximize `x_i`
/// subject to `H x = 0` and `|x_j| <= 1` for `j != i` (`x_i` free). Maximizing
/// `+x_i` alone is enough: codes are centrally symmetric, so the `-x_i`
/// optimum is its mirror image.
pub fn code_h1_primal<S: Scalar>(code: &CodeSpec<S>) -> Result<HeightReport<S>> {
    let n = code.n();
    let h = code.parity_check();
    let mut best: Option<(S, usize, Vec<S>)> = None;
    for i in 0..n {
        let mut objective = vec![S::zero(); n];
        objective[i] = S::one();
        let mut lower = vec![Some(-S::one()); n];
        let mut upper = vec![Some(S::one()); n];
        lower[i] = None;
        upper[i] = None;
        let problem = LpProblem::new(
            objective,
            h.clone(),
            vec![S::zero(); h.rows()],
            lower,
            upper,
        )?;
        let sol = lp::solve(&problem)?;
        match sol.status {
            LpStatus::Unbounded => return Ok(infinite_report(i, Method::PrimalLp)),
            LpStatus::Infeasible => {
                return Err(Error::Internal(
                    "kernel LP is feasible at x = 0 by construction".to_string(),
                ))
            }
            LpStatus::Optimal => {
                let value = sol.objective_value.expect("optimal value");
                if best.as_ref().map_or(true, |(b, _, _)| value > *b) {
                    best = Some((value, i, sol.point.expect("optimal point")));
                }
            }
        }
    }
    let (c, i, point) = best.expect("n >= 2 coordinates scanned");
    finish_report(code, c, i, Vector::new(point), Method::PrimalLp)
}

/// The least-L1 witness attaining a finite report: among codewords with
/// `x_i = h1` at the report's coordinate and `|x_j| <= 1` elsewhere, minimize
/// `sum |x_j|`. Simplex vertices can carry sum-zero excursions in coordinates
/// the height does not see; this refinement removes them, and for the block
/// constructions it collapses to the extremal codeword pattern exactly.
pub fn canonical_witness<S: Scalar>(
    code: &CodeSpec<S>,
    report: &HeightReport<S>,
) -> Result<Option<Vector<S>>> {
    let ExtendedScalar::Finite(c) = &report.h1 else {
        return Ok(None);
    };
    let n = code.n();
    let i = report.arg_coordinate;
    let h = code.parity_check();
    let rows = h.rows();
    // variables: x_0..x_{n-1}, then per j != i a magnitude t_j and two slacks
    // for t_j - x_j >= 0 and t_j + x_j >= 0
    let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let nt = others.len();
    let num_vars = n + 3 * nt;
    let mut eq = Matrix::zeros(rows + 2 * nt, num_vars);
    let rhs = vec![S::zero(); rows + 2 * nt];
    for r in 0..rows {
        for j in 0..n {
            *eq.at_mut(r, j) = h.at(r, j).clone();
        }
    }
    for (idx, &j) in others.iter().enumerate() {
        let t = n + idx;
        let s_minus = n + nt + idx;
        let s_plus = n + 2 * nt + idx;
        let r1 = rows + 2 * idx;
        let r2 = rows + 2 * idx + 1;
        *eq.at_mut(r1, t) = S::one();
        *eq.at_mut(r1, j) = -S::one();
        *eq.at_mut(r1, s_minus) = -S::one();
        *eq.at_mut(r2, t) = S::one();
        *eq.at_mut(r2, j) = S::one();
        *eq.at_mut(r2, s_plus) = -S::one();
    }
    let mut objective = vec![S::zero(); num_vars];
    let mut lower: Vec<Option<S>> = vec![Some(-S::one()); num_vars];
    let mut upper: Vec<Option<S>> = vec![Some(S::one()); num_vars];
    lower[i] = Some(c.clone());
    upper[i] = Some(c.clone());
    for v in n..num_vars {
        objective[v] = if v < n + nt { -S::one() } else { S::zero() };
        lower[v] = Some(S::zero());
        upper[v] = if v < n + nt { Some(S::one()) } else { None };
    }
    let problem = LpProblem::new(objective, eq, rhs, lower, upper)?;
    let sol = lp::solve(&problem)?;
    if sol.status != LpStatus::Optimal {
        return Err(Error::Internal(format!(
            "witness refinement LP ended {:?}",
            sol.status
        )));
    }
    let point = sol.point.expect("optimal point");
    let witness = Vector::new(point[..n].to_vec());
    if !code.is_codeword(&witness)? {
        return Err(Error::Internal(
            "refined witness is not a codeword".to_string(),
        ));
    }
    Ok(Some(witness))
}

/// Closed-form planar route for redundancy-2 codes. The value comes from the
/// zonogon facet formula; only the witness is reconstructed through the
/// scaling LP afterwards.
fn h1_exact2d<S: Scalar>(code: &CodeSpec<S>) -> Result<HeightReport<S>> {
    if code.redundancy() != 2 {
        return Err(Error::input(format!(
            "exact2d requires redundancy 2, this code has {}",
            code.redundancy()
        )));
    }
    if let Some(j) = zero_column(code) {
        return Ok(infinite_report(j, Method::Exact2d));
    }
    let h = code.parity_check();
    let mut best: Option<(S, usize)> = None;
    for i in 0..code.n() {
        let z_i = Zonotope::from_matrix_columns_excluding(h, i);
        match z_i.max_scaling_2d(&h.col(i))? {
            ExtendedScalar::Infinite => return Ok(infinite_report(i, Method::Exact2d)),
            ExtendedScalar::Finite(c) => {
                if best.as_ref().map_or(true, |(b, _)| c > *b) {
                    best = Some((c, i));
                }
            }
        }
    }
    let (c, i) = best.expect("n >= 2 coordinates scanned");
    let z_i = Zonotope::from_matrix_columns_excluding(h, i);
    let (_, multipliers) = z_i.max_scaling_with_multipliers(&h.col(i))?;
    let witness = witness_from_multipliers(
        code.n(),
        i,
        &c,
        &multipliers.ok_or_else(|| Error::Internal("missing scaling multipliers".to_string()))?,
    );
    finish_report(code, c, i, witness, Method::Exact2d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Rational;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn two_block_h<S: Scalar>(n: usize) -> Matrix<S> {
        Matrix::from_fn(2, n, |i, j| {
            let first_half = j < n / 2;
            if (i == 0) == first_half {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    #[test]
    fn vector_heights_from_definitions() {
        let x: Vector<f64> = Vector::from_ints(&[2, -1, -1, 0, 0, 0]);
        assert_eq!(
            vector_m_height(&x, 1).unwrap(),
            ExtendedScalar::Finite(2.0)
        );
        let tied: Vector<f64> = Vector::from_ints(&[5, 5, 1]);
        assert_eq!(
            vector_m_height(&tied, 1).unwrap(),
            ExtendedScalar::Finite(1.0)
        );
        let spike: Vector<f64> = Vector::from_ints(&[3, 0, 0]);
        assert_eq!(vector_m_height(&spike, 1).unwrap(), ExtendedScalar::Infinite);
        assert_eq!(vector_m_height(&spike, 5).unwrap(), ExtendedScalar::Infinite);
        let zero: Vector<f64> = Vector::zeros(3);
        assert!(vector_m_height(&zero, 1).is_err());
    }

    #[test]
    fn height_is_scale_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(2..=8);
            let x: Vector<f64> = (0..n).map(|_| rng.gen_range(-4.0..4.0)).collect();
            if x.is_zero() {
                continue;
            }
            let lambda = rng.gen_range(0.1..9.0) * if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
            let a = vector_m_height(&x, 1).unwrap().to_f64();
            let b = vector_m_height(&x.scale(&lambda), 1).unwrap().to_f64();
            if a.is_finite() {
                assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
            } else {
                assert!(b.is_infinite());
            }
        }
    }

    #[test]
    fn two_block_codes_have_exact_heights() {
        for (n, expected) in [(4usize, 1i64), (6, 2), (8, 3)] {
            let code = CodeSpec::<Rational>::new(two_block_h(n)).unwrap();
            let report = code_h1(&code, Method::Auto).unwrap();
            assert_eq!(
                report.h1,
                ExtendedScalar::Finite(Rational::from_int(expected)),
                "n = {n}"
            );
            assert_eq!(
                report.gamma1,
                ExtendedScalar::Finite(Rational::from_int(2 * (expected + 1)))
            );
            let w = report.witness.unwrap();
            assert!(code.is_codeword(&w).unwrap());
        }
    }

    #[test]
    fn primal_oracle_matches_on_two_block_n6() {
        let code = CodeSpec::<Rational>::new(two_block_h(6)).unwrap();
        let report = code_h1_primal(&code).unwrap();
        assert_eq!(report.h1, ExtendedScalar::Finite(Rational::from_int(2)));
    }

    #[test]
    fn zero_parity_column_means_infinite_height() {
        let h: Matrix<f64> = Matrix::from_int_rows(&[&[1, 0, 0, 1], &[0, 0, 1, 1]]);
        let code = CodeSpec::new(h).unwrap();
        for method in [Method::ZonotopeLp, Method::PrimalLp, Method::Exact2d] {
            let report = code_h1(&code, method).unwrap();
            assert_eq!(report.h1, ExtendedScalar::Infinite);
            assert_eq!(report.arg_coordinate, 1);
            assert!(report.witness.is_none());
        }
    }

    #[test]
    fn all_three_routes_agree_on_random_redundancy2_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(88);
        for trial in 0..30 {
            let n = rng.gen_range(4..=7);
            let hf: Matrix<f64> = Matrix::from_fn(2, n, |_, _| rng.gen_range(-2.0..2.0));
            let Ok(code_f) = CodeSpec::new(hf.clone()) else {
                continue;
            };
            let a = code_h1(&code_f, Method::ZonotopeLp).unwrap().h1.to_f64();
            let b = code_h1(&code_f, Method::PrimalLp).unwrap().h1.to_f64();
            let c = code_h1(&code_f, Method::Exact2d).unwrap().h1.to_f64();
            assert!((a - b).abs() <= 1e-7 * (1.0 + a.abs()), "trial {trial}");
            assert!((a - c).abs() <= 1e-7 * (1.0 + a.abs()), "trial {trial}");

            let code_r: CodeSpec<Rational> = code_f.convert().unwrap();
            let ra = code_h1(&code_r, Method::ZonotopeLp).unwrap().h1;
            let rb = code_h1(&code_r, Method::PrimalLp).unwrap().h1;
            let rc = code_h1(&code_r, Method::Exact2d).unwrap().h1;
            assert_eq!(ra, rb, "trial {trial}");
            assert_eq!(ra, rc, "trial {trial}");
        }
    }

    #[test]
    fn permuting_columns_preserves_h1_and_transports_the_witness() {
        let mut rng = ChaCha8Rng::seed_from_u64(66);
        for _ in 0..10 {
            let n = rng.gen_range(5..=7);
            let hf: Matrix<f64> = Matrix::from_fn(2, n, |_, _| rng.gen_range(-2.0..2.0));
            let Ok(code) = CodeSpec::new(hf) else { continue };
            let base = code_h1(&code, Method::Auto).unwrap();

            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let permuted_h = Matrix::from_fn(2, n, |i, j| *code.parity_check().at(i, perm[j]));
            let permuted = CodeSpec::new(permuted_h).unwrap();
            let report = code_h1(&permuted, Method::Auto).unwrap();

            assert!(
                (report.h1.to_f64() - base.h1.to_f64()).abs()
                    <= 1e-7 * (1.0 + base.h1.to_f64().abs())
            );
            // transporting the permuted witness back gives a codeword of the
            // base code attaining the same height
            let w = report.witness.unwrap();
            let mut back = vec![0.0; n];
            for j in 0..n {
                back[perm[j]] = w[j];
            }
            let back = Vector::new(back);
            assert!(code.is_codeword(&back).unwrap());
            let h_back = vector_m_height(&back, 1).unwrap().to_f64();
            assert!((h_back - base.h1.to_f64()).abs() <= 1e-7 * (1.0 + h_back.abs()));
        }
    }

    #[test]
    fn random_codes_respect_the_lower_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for _ in 0..40 {
            let (n, k) = (7usize, 5usize);
            let hf: Matrix<f64> = Matrix::from_fn(n - k, n, |_, _| rng.gen_range(-1.0..1.0));
            let Ok(code) = CodeSpec::new(hf) else { continue };
            let h1 = code_h1(&code, Method::Auto).unwrap().h1.to_f64();
            let bound: f64 = h1_lower_bound(n, k).unwrap();
            assert!(h1 >= bound - 1e-7);
            // any nonzero vector has height >= 1 as well
            assert!(h1 >= 1.0 - 1e-9);
        }
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(h1_lower_bound::<Rational>(8, 6).unwrap(), Rational::from_int(3));
        assert_eq!(h1_lower_bound::<Rational>(9, 6).unwrap(), Rational::from_int(2));
        assert_eq!(
            h1_lower_bound::<Rational>(7, 5).unwrap(),
            Rational::from_ratio(5, 2)
        );
        // k <= n - k clamps to 1
        assert_eq!(h1_lower_bound::<Rational>(6, 2).unwrap(), Rational::from_int(1));
        assert!(h1_lower_bound::<Rational>(5, 5).is_err());
    }

    #[test]
    fn gamma_threshold_formula() {
        let h3 = ExtendedScalar::Finite(Rational::from_int(3));
        assert_eq!(
            gamma_threshold(&h3, &Rational::one()).unwrap(),
            ExtendedScalar::Finite(Rational::from_int(8))
        );
        let h1 = ExtendedScalar::Finite(Rational::from_int(1));
        assert_eq!(
            gamma_threshold(&h1, &Rational::from_ratio(1, 2)).unwrap(),
            ExtendedScalar::Finite(Rational::from_int(2))
        );
        let inf: ExtendedScalar<Rational> = ExtendedScalar::Infinite;
        assert_eq!(
            gamma_threshold(&inf, &Rational::one()).unwrap(),
            ExtendedScalar::Infinite
        );
        assert!(gamma_threshold(&h3, &Rational::zero()).is_err());
    }

    #[test]
    fn report_json_shape() {
        let code = CodeSpec::<Rational>::new(two_block_h(4)).unwrap();
        let report = code_h1(&code, Method::Auto).unwrap();
        let j = report.to_json();
        assert_eq!(j["h1"], serde_json::json!("1"));
        assert_eq!(j["gamma1"], serde_json::json!("4"));
        assert_eq!(j["method"], serde_json::json!("lp"));
        assert!(j["witness"].is_array());
    }

    #[test]
    fn rejects_rank_deficient_parity_checks() {
        let h: Matrix<f64> = Matrix::from_int_rows(&[&[1, 1, 0, 0], &[2, 2, 0, 0]]);
        assert!(CodeSpec::new(h).is_err());
    }
}
