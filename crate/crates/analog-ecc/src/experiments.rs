//! Randomized campaigns that check the height bounds, the low-rank trace
//! bound, the tightness of the block constructions, the detector guarantee,
//! and the checksum-protected GEMM, emitting machine-readable reports.
//!
//! Campaigns are deterministic: every trial derives its RNG seed from the
//! campaign seed and the trial index, trials run in parallel, and results are
//! aggregated in trial order, so identical seeds reproduce identical reports
//! byte for byte.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::abft;
use crate::channel::{self, ChannelParams, Compliance, InjectionSpec, Verdict};
use crate::constructions::{block_code, extremal_vector, problem_b_code, random_code};
use crate::error::{Error, Result};
use crate::heights::{
    canonical_witness, code_h1, gamma_threshold, h1_lower_bound, vector_m_height, CodeSpec,
    ExtendedScalar, Method,
};
use crate::numerics::{Matrix, Rational, Scalar, Vector};

/// Cap the rayon worker pool (first call wins; later calls are ignored).
pub fn set_worker_threads(n: usize) {
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
}

fn derive_seed(base: u64, trial: u64) -> u64 {
    base.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub seed: u64,
    pub detail: String,
}

/// Aggregated campaign outcome plus the per-trial rows behind it.
#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub trials: usize,
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub mean: Option<f64>,
    pub failures: Vec<Failure>,
    pub pass: bool,
    pub trial_header: Vec<String>,
    pub trial_rows: Vec<Vec<String>>,
}

struct TrialOutcome {
    seed: u64,
    value: Option<f64>,
    row: Vec<String>,
    failure: Option<String>,
}

impl CampaignReport {
    fn from_outcomes(
        name: &str,
        parameters: BTreeMap<String, String>,
        header: &[&str],
        outcomes: Vec<TrialOutcome>,
    ) -> Self {
        let mut min = None;
        let mut max = None;
        let mut sum = 0.0;
        let mut count = 0usize;
        let mut failures = Vec::new();
        let mut rows = Vec::with_capacity(outcomes.len());
        for o in &outcomes {
            if let Some(v) = o.value {
                min = Some(min.map_or(v, |m: f64| m.min(v)));
                max = Some(max.map_or(v, |m: f64| m.max(v)));
                sum += v;
                count += 1;
            }
            if let Some(detail) = &o.failure {
                failures.push(Failure {
                    seed: o.seed,
                    detail: detail.clone(),
                });
            }
            rows.push(o.row.clone());
        }
        CampaignReport {
            name: name.to_string(),
            parameters,
            trials: outcomes.len(),
            min,
            max,
            mean: (count > 0).then(|| sum / count as f64),
            pass: failures.is_empty(),
            failures,
            trial_header: header.iter().map(|s| s.to_string()).collect(),
            trial_rows: rows,
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Per-trial rows; fields never contain separators, so no quoting.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.trial_header.join(","));
        out.push('\n');
        for row in &self.trial_rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.17e}")
}

/// Sample `trials` random `[n, k]` codes and check the proven height bound
/// `h1 >= max(1, k/(n-k)) - 1e-7` on each, recording the minimum observed.
pub fn lower_bound_campaign(
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<CampaignReport> {
    let bound: f64 = h1_lower_bound(n, k)?;
    let outcomes: Vec<TrialOutcome> = (0..trials as u64)
        .into_par_iter()
        .map(|t| -> Result<TrialOutcome> {
            let trial_seed = derive_seed(seed, t);
            let code: CodeSpec<f64> = random_code(n, k, trial_seed)?;
            let h1 = code_h1(&code, Method::Auto)?.h1.to_f64();
            let failure = (h1 < bound - 1e-7).then(|| format!("h1 = {h1} below bound {bound}"));
            Ok(TrialOutcome {
                seed: trial_seed,
                value: Some(h1),
                row: vec![trial_seed.to_string(), fmt_f64(h1), fmt_f64(bound)],
                failure,
            })
        })
        .collect::<Result<_>>()?;
    let parameters = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        ("k".to_string(), k.to_string()),
        ("seed".to_string(), seed.to_string()),
        ("bound".to_string(), bound.to_string()),
    ]);
    Ok(CampaignReport::from_outcomes(
        "lower_bound",
        parameters,
        &["seed", "h1", "bound"],
        outcomes,
    ))
}

/// Determinant by Gaussian elimination with partial pivoting. Independent of
/// the `trace` code path; used only to back the characteristic-polynomial
/// oracle below.
fn det_f64(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for i in col + 1..n {
            let f = a[i][col] / a[col][col];
            for j in col..n {
                a[i][j] -= f * a[col][j];
            }
        }
    }
    det
}

/// Eigenvalue sum of `a` read off the characteristic polynomial: evaluate
/// `det(x I - A)` at integer points, take finite differences of
/// `p(x) - x^n`, and return minus the leading coefficient of the remainder.
/// Touches neither the diagonal sum nor any shared kernel.
fn eigenvalue_sum_via_char_poly(a: &Matrix<f64>) -> f64 {
    let n = a.rows();
    let mut q: Vec<f64> = (0..=n as i64)
        .map(|x| {
            let shifted: Vec<Vec<f64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let diag = if i == j { x as f64 } else { 0.0 };
                            diag - a.at(i, j)
                        })
                        .collect()
                })
                .collect();
            det_f64(shifted) - (x as f64).powi(n as i32)
        })
        .collect();
    // leading coefficient of the degree <= n-1 remainder
    for _ in 0..n - 1 {
        for i in 0..q.len() - 1 {
            q[i] = q[i + 1] - q[i];
        }
        q.pop();
    }
    let mut factorial = 1.0;
    for i in 2..n {
        factorial *= i as f64;
    }
    -q[0] / factorial
}

/// Draw `A = U M^T` with standard-normal `U, M` of shape `n x r`, normalize
/// to unit infinity norm, and check the rank-r trace bound `Tr(A) <= r` with
/// slack 1e-9. For `n <= 6` the trace is cross-checked against the
/// characteristic-polynomial eigenvalue sum.
pub fn trace_lemma_campaign(
    n: usize,
    r: usize,
    trials: usize,
    seed: u64,
) -> Result<CampaignReport> {
    if r == 0 || r > n {
        return Err(Error::input(format!("need 1 <= r <= n, got r={r}, n={n}")));
    }
    let outcomes: Vec<TrialOutcome> = (0..trials as u64)
        .into_par_iter()
        .map(|t| -> Result<TrialOutcome> {
            let trial_seed = derive_seed(seed, t);
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
            let mut gauss = |_: usize, _: usize| -> f64 { rng.sample(StandardNormal) };
            let u = Matrix::from_fn(n, r, &mut gauss);
            let m = Matrix::from_fn(n, r, &mut gauss);
            let a = u.matmul(&m.transpose())?;
            let scale = a.inf_norm();
            if scale == 0.0 {
                return Ok(TrialOutcome {
                    seed: trial_seed,
                    value: Some(0.0),
                    row: vec![trial_seed.to_string(), fmt_f64(0.0), r.to_string()],
                    failure: None,
                });
            }
            let a = a.scale(&(1.0 / scale));
            let trace = a.trace()?;
            let mut failure = None;
            if trace > r as f64 + 1e-9 {
                failure = Some(format!("trace {trace} exceeds rank bound {r}"));
            } else if n <= 6 {
                let eig_sum = eigenvalue_sum_via_char_poly(&a);
                if (trace - eig_sum).abs() > 1e-8 {
                    failure = Some(format!(
                        "trace {trace} disagrees with eigenvalue sum {eig_sum}"
                    ));
                }
            }
            Ok(TrialOutcome {
                seed: trial_seed,
                value: Some(trace),
                row: vec![trial_seed.to_string(), fmt_f64(trace), r.to_string()],
                failure,
            })
        })
        .collect::<Result<_>>()?;
    let parameters = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        ("r".to_string(), r.to_string()),
        ("seed".to_string(), seed.to_string()),
    ]);
    Ok(CampaignReport::from_outcomes(
        "trace_lemma",
        parameters,
        &["seed", "trace", "rank_bound"],
        outcomes,
    ))
}

/// Does the witness look like the extremal codeword up to coordinate
/// symmetry and scaling: one entry of magnitude `c s`, `c` entries of
/// magnitude `s`, zeros elsewhere (for c = 1, two entries of equal magnitude).
fn matches_extremal_pattern(w: &Vector<Rational>, n: usize, k: usize) -> bool {
    let c = k / (n - k);
    let big = w.inf_norm();
    if big.is_zero() {
        return false;
    }
    let small = big.clone() / Rational::from_int(c as i64);
    let mut count_big = 0;
    let mut count_small = 0;
    let mut count_zero = 0;
    for e in w.iter() {
        let a = e.abs();
        if a.is_zero() {
            count_zero += 1;
        } else if a == big {
            count_big += 1;
        } else if a == small {
            count_small += 1;
        } else {
            return false;
        }
    }
    if c == 1 {
        count_big == 2 && count_zero == n - 2 && count_small == 0
    } else {
        count_big == 1 && count_small == c && count_zero == n - 1 - c
    }
}

/// Exact-mode sweep over every construction with `n <= max_n`: two-block
/// codes must attain `n/2 - 1` and block codes `k/(n-k)`, with witnesses
/// matching the extremal codeword up to symmetry.
pub fn tightness_suite(max_n: usize) -> Result<CampaignReport> {
    if max_n < 4 {
        return Err(Error::input("tightness sweep needs max_n >= 4".to_string()));
    }
    let mut outcomes = Vec::new();
    let mut push = |label: String,
                    n: usize,
                    k: usize,
                    h1: &ExtendedScalar<Rational>,
                    expected: Rational,
                    extra_failure: Option<String>| {
        let got = h1.to_f64();
        let failure = match h1 {
            ExtendedScalar::Finite(v) if *v == expected => extra_failure,
            _ => Some(format!("{label}: h1 = {h1} differs from exact {expected}")),
        };
        outcomes.push(TrialOutcome {
            seed: 0,
            value: Some(got),
            row: vec![
                label,
                n.to_string(),
                k.to_string(),
                got.to_string(),
                expected.to_string(),
            ],
            failure,
        });
    };

    for n in (4..=max_n).step_by(2) {
        let code: CodeSpec<Rational> = problem_b_code(n)?;
        let report = code_h1(&code, Method::Auto)?;
        let expected = Rational::from_int((n / 2 - 1) as i64);
        let witness_ok = canonical_witness(&code, &report)?
            .map(|w| matches_extremal_pattern(&w, n, n - 2))
            .unwrap_or(false);
        let extra = (!witness_ok).then(|| format!("two_block n={n}: witness pattern mismatch"));
        push(format!("two_block_{n}"), n, n - 2, &report.h1, expected, extra);
    }

    for n in 4..=max_n {
        for k in 1..n {
            let r = n - k;
            if !(k > r && r >= 2 && k % r == 0) {
                continue;
            }
            let code: CodeSpec<Rational> = block_code(n, k)?;
            let report = code_h1(&code, Method::Auto)?;
            let expected = Rational::from_int((k / r) as i64);
            let x_star: Vector<Rational> = extremal_vector(n, k)?;
            let mut extra = None;
            if !code.is_codeword(&x_star)? {
                extra = Some(format!("block {n},{k}: extremal vector not in kernel"));
            } else if vector_m_height(&x_star, 1)? != ExtendedScalar::Finite(expected.clone()) {
                extra = Some(format!("block {n},{k}: extremal vector misses the bound"));
            } else if !canonical_witness(&code, &report)?
                .map(|w| matches_extremal_pattern(&w, n, k))
                .unwrap_or(false)
            {
                extra = Some(format!("block {n},{k}: witness pattern mismatch"));
            }
            push(format!("block_{n}_{k}"), n, k, &report.h1, expected, extra);
        }
    }

    let parameters = BTreeMap::from([("max_n".to_string(), max_n.to_string())]);
    Ok(CampaignReport::from_outcomes(
        "tightness",
        parameters,
        &["construction", "n", "k", "h1", "expected"],
        outcomes,
    ))
}

/// Exercise the detector on a code with finite height: clean trials must
/// never flag, single outliers at relative margin 1e-6 above the threshold
/// must always flag, and an LP-built masking pair at margin 1e-6 below must
/// slip through, certifying sharpness.
pub fn decoder_campaign(
    code: &CodeSpec<f64>,
    delta: f64,
    trials: usize,
    seed: u64,
) -> Result<CampaignReport> {
    let report = code_h1(code, Method::Auto)?;
    let ExtendedScalar::Finite(h1) = report.h1 else {
        return Err(Error::input(
            "decoder campaign requires a code with finite height".to_string(),
        ));
    };
    let gamma = gamma_threshold(&ExtendedScalar::Finite(h1), &delta)?.to_f64();
    let params = ChannelParams::new(delta, gamma)?;
    let n = code.n();
    let k = code.k();

    let mut outcomes: Vec<TrialOutcome> = (0..trials as u64)
        .into_par_iter()
        .map(|t| -> Result<TrialOutcome> {
            let trial_seed = derive_seed(seed, t);
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
            let coeffs: Vector<f64> = (0..k).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let (inj, expect_flag, magnitude, position) = if t % 2 == 0 {
                (InjectionSpec::none(), false, 0.0, n) // position n encodes "none"
            } else {
                let position = rng.gen_range(0..n);
                let stretch: f64 = rng.gen_range(1.0..3.0);
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                let magnitude = sign * gamma * (1.0 + 1e-6) * stretch;
                (
                    InjectionSpec::single(position, magnitude),
                    true,
                    magnitude,
                    position,
                )
            };
            let trace = channel::transmit(code, &coeffs, &params, &inj, rng.gen())?;
            let compliance = channel::compliance_check(&trace, &params);
            let mut failure = None;
            if compliance != Compliance::Pass {
                failure = Some(format!("compliance violation {compliance:?}"));
            } else if expect_flag && trace.verdict != Verdict::Flagged {
                failure = Some(format!("missed detection at |e| = {}", magnitude.abs()));
            } else if !expect_flag && trace.verdict != Verdict::Empty {
                failure = Some("false alarm on outlier-free trace".to_string());
            }
            let verdict = match trace.verdict {
                Verdict::Empty => "empty",
                Verdict::Flagged => "flagged",
            };
            Ok(TrialOutcome {
                seed: trial_seed,
                value: None,
                row: vec![
                    trial_seed.to_string(),
                    n.to_string(),
                    k.to_string(),
                    fmt_f64(h1),
                    fmt_f64(delta),
                    fmt_f64(magnitude),
                    position.to_string(),
                    verdict.to_string(),
                    if failure.is_none() { "pass" } else { "fail" }.to_string(),
                ],
                failure,
            })
        })
        .collect::<Result<_>>()?;

    // sharpness: a masking pair just below the threshold must exist and slip by
    let masking_magnitude = gamma * (1.0 - 1e-6);
    let masked = channel::masking_pair(code, &delta, &masking_magnitude, report.arg_coordinate)?;
    let (masking_failure, masking_verdict) = match masked {
        None => (
            Some("no masking pair below the threshold".to_string()),
            "absent",
        ),
        Some((noise, inj)) => {
            let y = noise.add(&inj.to_vector(n)?)?;
            match channel::detect(code, &y, &delta)? {
                Verdict::Empty => (None, "empty"),
                Verdict::Flagged => (
                    Some("masking pair was flagged; threshold not sharp".to_string()),
                    "flagged",
                ),
            }
        }
    };
    outcomes.push(TrialOutcome {
        seed,
        value: None,
        row: vec![
            seed.to_string(),
            n.to_string(),
            k.to_string(),
            fmt_f64(h1),
            fmt_f64(delta),
            fmt_f64(masking_magnitude),
            report.arg_coordinate.to_string(),
            masking_verdict.to_string(),
            if masking_failure.is_none() { "pass" } else { "fail" }.to_string(),
        ],
        failure: masking_failure,
    });

    let parameters = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        ("k".to_string(), k.to_string()),
        ("delta".to_string(), delta.to_string()),
        ("gamma".to_string(), gamma.to_string()),
        ("seed".to_string(), seed.to_string()),
    ]);
    Ok(CampaignReport::from_outcomes(
        "decoder",
        parameters,
        &[
            "seed",
            "n",
            "k",
            "h1",
            "delta",
            "magnitude",
            "position",
            "verdict",
            "compliance",
        ],
        outcomes,
    ))
}

/// Per trial: a fresh random protected product must verify clean, then a
/// single payload-cell fault of the given magnitude is injected and, when it
/// exceeds twice the residual tolerance, must be detected with the correct
/// block coordinates.
pub fn abft_campaign(
    m: usize,
    ell: usize,
    n: usize,
    parts: usize,
    trials: usize,
    magnitude: f64,
    seed: u64,
) -> Result<CampaignReport> {
    let layout = abft::AbftLayout::new(m, ell, n, parts, parts)?;
    let outcomes: Vec<TrialOutcome> = (0..trials as u64)
        .into_par_iter()
        .map(|t| -> Result<TrialOutcome> {
            let trial_seed = derive_seed(seed, t);
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
            let a: Matrix<f64> = Matrix::from_fn(m, ell, |_, _| rng.gen_range(-1.0..1.0));
            let b: Matrix<f64> = Matrix::from_fn(ell, n, |_, _| rng.gen_range(-1.0..1.0));
            let ap = abft::encode_left(&a, &layout)?;
            let bp = abft::encode_right(&b, &layout)?;
            let tol = abft::suggested_tolerance(&ap, &bp);
            let cp = abft::protected_gemm(&ap, &bp)?;

            let mut failure = None;
            if !abft::verify(&cp, &tol)?.is_empty() {
                failure = Some("violations on a fault-free product".to_string());
            }

            let pr = rng.gen_range(0..m);
            let pc = rng.gen_range(0..n);
            let signed = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
            let faulty = abft::inject_fault(
                &cp,
                (layout.encoded_row_of(pr), layout.encoded_col_of(pc)),
                &signed,
            )?;
            let violations = abft::verify(&faulty, &tol)?;
            let detected = !violations.is_empty();
            if failure.is_none() && magnitude.abs() > 2.0 * tol {
                let expected_block = (pr / layout.row_block(), pc / layout.col_block());
                let row_hit = violations.iter().any(|v| {
                    v.kind == abft::ViolationKind::Row
                        && (v.block_row, v.block_col) == expected_block
                });
                let col_hit = violations.iter().any(|v| {
                    v.kind == abft::ViolationKind::Col
                        && (v.block_row, v.block_col) == expected_block
                });
                if violations.len() != 2 || !row_hit || !col_hit {
                    failure = Some(format!(
                        "fault at ({pr},{pc}) produced {} violations instead of the \
                         row/col pair at block {expected_block:?}",
                        violations.len()
                    ));
                }
            }
            Ok(TrialOutcome {
                seed: trial_seed,
                value: None,
                row: vec![
                    trial_seed.to_string(),
                    pr.to_string(),
                    pc.to_string(),
                    fmt_f64(signed),
                    detected.to_string(),
                    violations.len().to_string(),
                ],
                failure,
            })
        })
        .collect::<Result<_>>()?;
    let parameters = BTreeMap::from([
        ("m".to_string(), m.to_string()),
        ("ell".to_string(), ell.to_string()),
        ("n".to_string(), n.to_string()),
        ("parts".to_string(), parts.to_string()),
        ("magnitude".to_string(), magnitude.to_string()),
        ("seed".to_string(), seed.to_string()),
    ]);
    Ok(CampaignReport::from_outcomes(
        "abft_injection",
        parameters,
        &["seed", "row", "col", "magnitude", "detected", "violations"],
        outcomes,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bound_campaign_passes_at_small_sizes() {
        for (n, k, bound) in [(6usize, 4usize, 2.0), (9, 6, 2.0), (4, 2, 1.0)] {
            let report = lower_bound_campaign(n, k, 50, 7).unwrap();
            assert!(report.pass, "({n},{k}): {:?}", report.failures.first());
            assert!(report.min.unwrap() >= bound - 1e-7);
            assert_eq!(report.trials, 50);
        }
    }

    #[test]
    fn trace_lemma_campaign_passes_and_hits_the_boundary_cases() {
        let report = trace_lemma_campaign(6, 3, 500, 11).unwrap();
        assert!(report.pass, "{:?}", report.failures.first());
        assert!(report.max.unwrap() <= 3.0 + 1e-9);

        // identity-plus-zero padding meets the bound exactly
        let mut a: Matrix<f64> = Matrix::zeros(5, 5);
        *a.at_mut(0, 0) = 1.0;
        *a.at_mut(1, 1) = 1.0;
        assert_eq!(a.inf_norm(), 1.0);
        assert_eq!(a.trace().unwrap(), 2.0);

        // rotation block: unit norm, zero trace, complex eigenvalue pair
        let rot: Matrix<f64> = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        assert_eq!(rot.inf_norm(), 1.0);
        assert_eq!(rot.trace().unwrap(), 0.0);
        let eig = eigenvalue_sum_via_char_poly(&rot);
        assert!(eig.abs() < 1e-10);
    }

    #[test]
    fn char_poly_oracle_matches_trace_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(2..=6);
            let a: Matrix<f64> = Matrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
            let eig = eigenvalue_sum_via_char_poly(&a);
            assert!(
                (eig - a.trace().unwrap()).abs() <= 1e-8,
                "n={n}: {eig} vs {}",
                a.trace().unwrap()
            );
        }
    }

    #[test]
    fn tightness_suite_is_exact_up_to_n_12() {
        let report = tightness_suite(12).unwrap();
        assert!(report.pass, "{:?}", report.failures.first());
        // 5 two-block sizes (4..12 even) plus blocks (6,4),(8,6),(9,6),(10,8),(12,10),(12,9),(12,8)
        assert_eq!(report.trials, 12);
        assert_eq!(report.min, Some(1.0));
        assert_eq!(report.max, Some(5.0));
    }

    #[test]
    fn decoder_campaign_small_run() {
        let code: CodeSpec<f64> = problem_b_code(6).unwrap();
        let report = decoder_campaign(&code, 1.0, 400, 13).unwrap();
        assert!(report.pass, "{:?}", report.failures.first());
        assert_eq!(report.trials, 401); // masking witness appended
    }

    #[test]
    fn abft_campaign_detects_large_faults_and_ignores_zero() {
        let report = abft_campaign(4, 4, 4, 2, 100, 1e3, 17).unwrap();
        assert!(report.pass, "{:?}", report.failures.first());
        assert!(report.trial_rows.iter().all(|row| row[4] == "true"));

        let silent = abft_campaign(4, 4, 4, 2, 50, 0.0, 17).unwrap();
        assert!(silent.pass);
        assert!(silent.trial_rows.iter().all(|row| row[4] == "false"));
    }

    #[test]
    fn campaigns_are_deterministic_byte_for_byte() {
        let a = lower_bound_campaign(6, 4, 20, 42).unwrap();
        let b = lower_bound_campaign(6, 4, 20, 42).unwrap();
        assert_eq!(
            serde_json::to_string(&a.to_json()).unwrap(),
            serde_json::to_string(&b.to_json()).unwrap()
        );
        assert_eq!(a.to_csv(), b.to_csv());

        let c = trace_lemma_campaign(4, 2, 50, 1).unwrap();
        let d = trace_lemma_campaign(4, 2, 50, 1).unwrap();
        assert_eq!(c.to_csv(), d.to_csv());
    }
}
