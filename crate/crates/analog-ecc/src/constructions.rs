//! Builders for the codes whose 1-heights are known exactly, plus seeded
//! random codes for campaigns.
//!
//! The workhorse is the block construction: split the `n` coordinates into
//! `n - k` contiguous blocks of equal size and constrain each block to sum to
//! zero. Its 1-height is exactly `k / (n - k)`, attained by the extremal
//! codeword `(k/(n-k), -1, ..., -1, 0, ..., 0)`. The two-block code is the
//! even-length special case with redundancy 2 and height `n/2 - 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::heights::CodeSpec;
use crate::numerics::{Matrix, Scalar, Vector};

/// Coordinate arithmetic of the block construction: `block_count = n - k`
/// blocks of `block_size = n / (n - k)` coordinates each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    block_count: usize,
    block_size: usize,
}

impl BlockLayout {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if !(k > n - k && n - k >= 2) {
            return Err(Error::input(format!(
                "block layout needs k > n-k >= 2, got n={n}, k={k}"
            )));
        }
        if k % (n - k) != 0 {
            return Err(Error::input(format!(
                "block layout needs (n-k) | k, got n={n}, k={k}"
            )));
        }
        Ok(BlockLayout {
            block_count: n - k,
            block_size: n / (n - k),
        })
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn len(&self) -> usize {
        self.block_count * self.block_size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Coordinate -> (block, offset).
    pub fn locate(&self, coord: usize) -> (usize, usize) {
        (coord / self.block_size, coord % self.block_size)
    }

    /// (block, offset) -> coordinate.
    pub fn coord(&self, block: usize, offset: usize) -> usize {
        block * self.block_size + offset
    }
}

/// Even-length code cut by two constraints: the first and second halves each
/// sum to zero. Height `n/2 - 1`, exactly.
pub fn problem_b_code<S: Scalar>(n: usize) -> Result<CodeSpec<S>> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::input(format!(
            "two-block construction needs even n >= 4, got {n}"
        )));
    }
    let h = Matrix::from_fn(2, n, |i, j| {
        if (i == 0) == (j < n / 2) {
            S::one()
        } else {
            S::zero()
        }
    });
    CodeSpec::new(h)
}

/// Sum-to-zero block code: row `i` of the parity check is the 0/1 indicator
/// of block `i`. Requires `k > n-k >= 2` and `(n-k) | k`; height `k/(n-k)`,
/// exactly.
pub fn block_code<S: Scalar>(n: usize, k: usize) -> Result<CodeSpec<S>> {
    let layout = BlockLayout::new(n, k)?;
    let h = Matrix::from_fn(layout.block_count(), n, |i, j| {
        if layout.locate(j).0 == i {
            S::one()
        } else {
            S::zero()
        }
    });
    CodeSpec::new(h)
}

/// The codeword attaining the block code's height: first entry `k/(n-k)`,
/// followed by `k/(n-k)` entries of -1 (filling block 0), zeros elsewhere.
pub fn extremal_vector<S: Scalar>(n: usize, k: usize) -> Result<Vector<S>> {
    let layout = BlockLayout::new(n, k)?;
    let c = k / (n - k); // block_size - 1
    let mut entries = vec![S::zero(); n];
    entries[0] = S::from_int(c as i64);
    for e in entries.iter_mut().take(layout.block_size()).skip(1) {
        *e = -S::one();
    }
    Ok(Vector::new(entries))
}

const RESAMPLE_LIMIT: usize = 100;

/// Random `[n, k]` code with independent standard-normal parity entries,
/// resampled until full rank, deterministic per seed. The same seed yields
/// the same matrix in both scalar modes (entries are sampled as binary64 and
/// converted exactly).
pub fn random_code<S: Scalar>(n: usize, k: usize, seed: u64) -> Result<CodeSpec<S>> {
    if k == 0 || k >= n {
        return Err(Error::input(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_LIMIT {
        let h: Matrix<S> = Matrix::from_fn(n - k, n, |_, _| {
            let g: f64 = rng.sample(StandardNormal);
            S::from_f64(g)
        });
        if let Ok(code) = CodeSpec::new(h) {
            return Ok(code);
        }
    }
    Err(Error::Internal(format!(
        "no full-rank sample in {RESAMPLE_LIMIT} attempts for n={n}, k={k}"
    )))
}

/// A named construction, as it appears on the wire:
/// `{"construction": "problem_b" | "block" | "random", "n": .., "k": .., "seed": ..}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    ProblemB { n: usize },
    Block { n: usize, k: usize },
    Random { n: usize, k: usize, seed: u64 },
}

impl Construction {
    pub fn build<S: Scalar>(&self) -> Result<CodeSpec<S>> {
        match *self {
            Construction::ProblemB { n } => problem_b_code(n),
            Construction::Block { n, k } => block_code(n, k),
            Construction::Random { n, k, seed } => random_code(n, k, seed),
        }
    }

    pub fn to_json(&self) -> Value {
        match *self {
            Construction::ProblemB { n } => {
                serde_json::json!({"construction": "problem_b", "n": n})
            }
            Construction::Block { n, k } => {
                serde_json::json!({"construction": "block", "n": n, "k": k})
            }
            Construction::Random { n, k, seed } => {
                serde_json::json!({"construction": "random", "n": n, "k": k, "seed": seed})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let name = v
            .get("construction")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing \"construction\" tag".to_string()))?;
        let field = |key: &str| -> Result<u64> {
            v.get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse(format!("missing \"{key}\"")))
        };
        Ok(match name {
            "problem_b" => Construction::ProblemB {
                n: field("n")? as usize,
            },
            "block" => Construction::Block {
                n: field("n")? as usize,
                k: field("k")? as usize,
            },
            "random" => Construction::Random {
                n: field("n")? as usize,
                k: field("k")? as usize,
                seed: field("seed")?,
            },
            other => return Err(Error::Parse(format!("unknown construction {other:?}"))),
        })
    }
}
