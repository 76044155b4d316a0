//! The bounded-noise-plus-outlier channel `y = c + eps + e` and a sound
//! single-error detector.
//!
//! Noise is entry-wise bounded by `delta`; outliers are sparse spikes that
//! must be flagged once they exceed the threshold `Delta`. The detector
//! computes the syndrome `H y` and flags exactly when it falls outside the
//! `delta`-scaled syndrome zonotope, which makes it sound by construction:
//! no noise pattern alone can trip it, and any single outlier beyond
//! `(2 h1 + 2) delta` must trip it. Just below that threshold, masking
//! noise exists and [`masking_pair`] constructs it by LP, so the threshold
//! is sharp, not merely sufficient.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::heights::CodeSpec;
use crate::numerics::{Scalar, Vector};
use crate::zonotope::Zonotope;

/// Channel thresholds: noise bound `delta > 0` and outlier threshold
/// `big_delta >= 0`.
#[derive(Clone, Debug)]
pub struct ChannelParams<S> {
    pub delta: S,
    pub big_delta: S,
}

impl<S: Scalar> ChannelParams<S> {
    pub fn new(delta: S, big_delta: S) -> Result<Self> {
        if delta <= S::zero() {
            return Err(Error::input("noise bound delta must be positive".to_string()));
        }
        if big_delta < S::zero() {
            return Err(Error::input(
                "outlier threshold must be nonnegative".to_string(),
            ));
        }
        Ok(ChannelParams { delta, big_delta })
    }
}

/// Sparse outlier pattern: distinct positions with magnitudes.
#[derive(Clone, Debug, Default)]
pub struct InjectionSpec<S> {
    entries: Vec<(usize, S)>,
}

impl<S: Scalar> InjectionSpec<S> {
    pub fn new(entries: Vec<(usize, S)>) -> Result<Self> {
        for (idx, (p, _)) in entries.iter().enumerate() {
            if entries[..idx].iter().any(|(q, _)| q == p) {
                return Err(Error::input(format!("duplicate outlier position {p}")));
            }
        }
        Ok(InjectionSpec { entries })
    }

    pub fn none() -> Self {
        InjectionSpec { entries: Vec::new() }
    }

    pub fn single(position: usize, magnitude: S) -> Self {
        InjectionSpec {
            entries: vec![(position, magnitude)],
        }
    }

    pub fn entries(&self) -> &[(usize, S)] {
        &self.entries
    }

    pub fn to_vector(&self, n: usize) -> Result<Vector<S>> {
        let mut e = vec![S::zero(); n];
        for (p, mag) in &self.entries {
            if *p >= n {
                return Err(Error::input(format!("outlier position {p} out of range {n}")));
            }
            e[*p] = mag.clone();
        }
        Ok(Vector::new(e))
    }
}

/// Detector output: the empty location set (nothing to report) or the
/// detection flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Empty,
    Flagged,
}

/// One channel use: codeword, noise, outliers, received word, and the
/// detector's verdict on the received word.
#[derive(Clone, Debug)]
pub struct TransmissionTrace<S> {
    pub codeword: Vector<S>,
    pub noise: Vector<S>,
    pub outliers: Vector<S>,
    pub received: Vector<S>,
    pub verdict: Verdict,
}

/// Soundness clauses for a (tau = 0, sigma = 1) detector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// No false alarm: `e = 0` implies the empty verdict.
    D1,
    /// No missed outlier: an empty verdict implies no `|e_j| > Delta`.
    D2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compliance {
    Pass,
    Fail(Clause),
}

/// Encode `message_coeffs` (length k) through the kernel basis, add uniform
/// noise on `[-delta, delta]` and the requested outliers, and run the
/// detector. Deterministic per seed.
pub fn transmit<S: Scalar>(
    code: &CodeSpec<S>,
    message_coeffs: &Vector<S>,
    params: &ChannelParams<S>,
    inj: &InjectionSpec<S>,
    seed: u64,
) -> Result<TransmissionTrace<S>> {
    if message_coeffs.len() != code.k() {
        return Err(Error::dim(format!(
            "message of length {} for a k = {} code",
            message_coeffs.len(),
            code.k()
        )));
    }
    let codeword = code.kernel_basis().mat_vec(message_coeffs)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise: Vector<S> = (0..code.n())
        .map(|_| {
            let u: f64 = rng.gen_range(-1.0..=1.0);
            params.delta.clone() * S::from_f64(u)
        })
        .collect();
    let outliers = inj.to_vector(code.n())?;
    let received = codeword.add(&noise)?.add(&outliers)?;
    let verdict = detect(code, &received, &params.delta)?;
    Ok(TransmissionTrace {
        codeword,
        noise,
        outliers,
        received,
        verdict,
    })
}

/// Syndrome detector: empty verdict iff `H y` lies in the `delta`-scaled
/// syndrome zonotope. `delta = 0` degenerates to an exact syndrome-zero test.
pub fn detect<S: Scalar>(code: &CodeSpec<S>, y: &Vector<S>, delta: &S) -> Result<Verdict> {
    if *delta < S::zero() {
        return Err(Error::input("noise bound must be nonnegative".to_string()));
    }
    let syndrome = code.syndrome(y)?;
    let s_h = Zonotope::from_matrix_columns(code.parity_check());
    Ok(if s_h.contains(&syndrome, delta)? {
        Verdict::Empty
    } else {
        Verdict::Flagged
    })
}

/// Check one trace against the (tau = 0, sigma = 1) soundness clauses with
/// threshold `params.big_delta`. Detection of sub-threshold outliers is
/// optional either way, so such traces pass regardless of verdict.
pub fn compliance_check<S: Scalar>(
    trace: &TransmissionTrace<S>,
    params: &ChannelParams<S>,
) -> Compliance {
    let e_zero = trace.outliers.is_zero();
    if e_zero && trace.verdict != Verdict::Empty {
        return Compliance::Fail(Clause::D1);
    }
    if trace.verdict == Verdict::Empty {
        let above = trace
            .outliers
            .iter()
            .any(|e| e.abs() > params.big_delta.clone());
        if above {
            return Compliance::Fail(Clause::D2);
        }
    }
    Compliance::Pass
}

/// Adversarial noise that hides a single outlier of the given magnitude at
/// `coordinate`: returns `(eps, e)` with `||eps||_inf <= delta` whose combined
/// syndrome stays inside the detector's acceptance region, or `None` when the
/// magnitude is too large to hide. Strictly below `(2 h1 + 2) delta` at the
/// height-attaining coordinate, this always succeeds, which is exactly the
/// sharpness of the detection threshold.
pub fn masking_pair<S: Scalar>(
    code: &CodeSpec<S>,
    delta: &S,
    magnitude: &S,
    coordinate: usize,
) -> Result<Option<(Vector<S>, InjectionSpec<S>)>> {
    if *delta <= S::zero() {
        return Err(Error::input("noise bound delta must be positive".to_string()));
    }
    if coordinate >= code.n() {
        return Err(Error::input(format!(
            "coordinate {coordinate} out of range {}",
            code.n()
        )));
    }
    let s_h = Zonotope::from_matrix_columns(code.parity_check());
    let target = code.column(coordinate).scale(magnitude);
    let two_delta = S::from_int(2) * delta.clone();
    // magnitude * m_i = H (2 delta b) for box coefficients b; then
    // eps = -delta b pushes the combined syndrome back inside delta S_H.
    let Some(b) = s_h.membership_multipliers(&target, &two_delta)? else {
        return Ok(None);
    };
    let noise: Vector<S> = b.iter().map(|v| -(delta.clone() * v.clone())).collect();
    Ok(Some((
        noise,
        InjectionSpec::single(coordinate, magnitude.clone()),
    )))
}
