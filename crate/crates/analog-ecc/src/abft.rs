//! Partitioned checksum protection for GEMM.
//!
//! The left operand gets one checksum row per block row (the ones-vector
//! combination of that block's rows), interleaved directly after the block;
//! the right operand gets one checksum column per block column. Multiplying
//! the encoded operands with a plain GEMM yields a product in which every
//! block carries both checksum identities, so a single corrupted cell breaks
//! exactly one row identity and one column identity, and their intersection
//! names the block.
//!
//! Verification recomputes each checksum line from the payload it protects.
//! Corner cells (checksums of checksums) are not independently checked: they
//! are discarded on payload extraction, a corrupted corner harms nothing, and
//! leaving them out keeps the violation pattern canonical (payload fault =>
//! one row plus one column violation; checksum-line fault => exactly one).

use crate::error::{Error, Result};
use crate::numerics::{Matrix, Scalar};

/// Partition geometry for one protected multiply: `A` is `m x ell` with
/// `row_parts` block rows, `B` is `ell x n` with `col_parts` block columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbftLayout {
    pub m: usize,
    pub ell: usize,
    pub n: usize,
    pub row_parts: usize,
    pub col_parts: usize,
}

/// What an encoded row or column position holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lane {
    /// Payload at this original index.
    Payload(usize),
    /// Checksum of this block.
    Checksum(usize),
}

impl AbftLayout {
    pub fn new(m: usize, ell: usize, n: usize, row_parts: usize, col_parts: usize) -> Result<Self> {
        if m == 0 || ell == 0 || n == 0 || row_parts == 0 || col_parts == 0 {
            return Err(Error::input("layout dimensions must be positive".to_string()));
        }
        if m % row_parts != 0 {
            return Err(Error::input(format!(
                "row partition {row_parts} does not divide m = {m}"
            )));
        }
        if n % col_parts != 0 {
            return Err(Error::input(format!(
                "column partition {col_parts} does not divide n = {n}"
            )));
        }
        Ok(AbftLayout {
            m,
            ell,
            n,
            row_parts,
            col_parts,
        })
    }

    pub fn row_block(&self) -> usize {
        self.m / self.row_parts
    }

    pub fn col_block(&self) -> usize {
        self.n / self.col_parts
    }

    pub fn encoded_rows(&self) -> usize {
        self.m + self.row_parts
    }

    pub fn encoded_cols(&self) -> usize {
        self.n + self.col_parts
    }

    /// Classify an encoded row index.
    pub fn row_lane(&self, r: usize) -> Lane {
        let stride = self.row_block() + 1;
        let block = r / stride;
        let offset = r % stride;
        if offset == self.row_block() {
            Lane::Checksum(block)
        } else {
            Lane::Payload(block * self.row_block() + offset)
        }
    }

    /// Classify an encoded column index.
    pub fn col_lane(&self, c: usize) -> Lane {
        let stride = self.col_block() + 1;
        let block = c / stride;
        let offset = c % stride;
        if offset == self.col_block() {
            Lane::Checksum(block)
        } else {
            Lane::Payload(block * self.col_block() + offset)
        }
    }

    pub fn checksum_row_of(&self, block: usize) -> usize {
        block * (self.row_block() + 1) + self.row_block()
    }

    pub fn checksum_col_of(&self, block: usize) -> usize {
        block * (self.col_block() + 1) + self.col_block()
    }

    /// Original payload row index -> encoded row index.
    pub fn encoded_row_of(&self, payload_row: usize) -> usize {
        let block = payload_row / self.row_block();
        let offset = payload_row % self.row_block();
        block * (self.row_block() + 1) + offset
    }

    /// Original payload column index -> encoded column index.
    pub fn encoded_col_of(&self, payload_col: usize) -> usize {
        let block = payload_col / self.col_block();
        let offset = payload_col % self.col_block();
        block * (self.col_block() + 1) + offset
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Product,
}

/// A matrix with its checksum rows and/or columns interleaved.
#[derive(Clone, Debug, PartialEq)]
pub struct ProtectedMatrix<S> {
    data: Matrix<S>,
    layout: AbftLayout,
    side: Side,
}

impl<S: Scalar> ProtectedMatrix<S> {
    pub fn encoded(&self) -> &Matrix<S> {
        &self.data
    }

    pub fn layout(&self) -> &AbftLayout {
        &self.layout
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Strip checksum lanes, recovering the original payload.
    pub fn payload(&self) -> Matrix<S> {
        let keep_row = |r: usize| match self.side {
            Side::Right => Lane::Payload(r),
            _ => self.layout.row_lane(r),
        };
        let keep_col = |c: usize| match self.side {
            Side::Left => Lane::Payload(c),
            _ => self.layout.col_lane(c),
        };
        let rows: Vec<usize> = (0..self.data.rows())
            .filter(|&r| matches!(keep_row(r), Lane::Payload(_)))
            .collect();
        let cols: Vec<usize> = (0..self.data.cols())
            .filter(|&c| matches!(keep_col(c), Lane::Payload(_)))
            .collect();
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.data.at(rows[i], cols[j]).clone()
        })
    }
}

/// Interleave one checksum row (block column sums) after each block row of `a`.
pub fn encode_left<S: Scalar>(a: &Matrix<S>, layout: &AbftLayout) -> Result<ProtectedMatrix<S>> {
    if a.rows() != layout.m || a.cols() != layout.ell {
        return Err(Error::dim(format!(
            "left operand {}x{} does not match layout {}x{}",
            a.rows(),
            a.cols(),
            layout.m,
            layout.ell
        )));
    }
    let rb = layout.row_block();
    let data = Matrix::from_fn(layout.encoded_rows(), layout.ell, |r, c| {
        match layout.row_lane(r) {
            Lane::Payload(orig) => a.at(orig, c).clone(),
            Lane::Checksum(block) => {
                let mut sum = S::zero();
                for i in 0..rb {
                    sum = sum + a.at(block * rb + i, c).clone();
                }
                sum
            }
        }
    });
    Ok(ProtectedMatrix {
        data,
        layout: *layout,
        side: Side::Left,
    })
}

/// Interleave one checksum column (block row sums) after each block column of `b`.
pub fn encode_right<S: Scalar>(b: &Matrix<S>, layout: &AbftLayout) -> Result<ProtectedMatrix<S>> {
    if b.rows() != layout.ell || b.cols() != layout.n {
        return Err(Error::dim(format!(
            "right operand {}x{} does not match layout {}x{}",
            b.rows(),
            b.cols(),
            layout.ell,
            layout.n
        )));
    }
    let cb = layout.col_block();
    let data = Matrix::from_fn(layout.ell, layout.encoded_cols(), |r, c| {
        match layout.col_lane(c) {
            Lane::Payload(orig) => b.at(r, orig).clone(),
            Lane::Checksum(block) => {
                let mut sum = S::zero();
                for j in 0..cb {
                    sum = sum + b.at(r, block * cb + j).clone();
                }
                sum
            }
        }
    });
    Ok(ProtectedMatrix {
        data,
        layout: *layout,
        side: Side::Right,
    })
}

/// Plain GEMM of the encoded operands; the result carries both families of
/// checksum identities blockwise.
pub fn protected_gemm<S: Scalar>(
    ap: &ProtectedMatrix<S>,
    bp: &ProtectedMatrix<S>,
) -> Result<ProtectedMatrix<S>> {
    if ap.side != Side::Left || bp.side != Side::Right {
        return Err(Error::input(
            "protected_gemm expects a Left and a Right operand".to_string(),
        ));
    }
    if ap.layout != bp.layout {
        return Err(Error::input("operand layouts differ".to_string()));
    }
    let data = ap.data.matmul(&bp.data)?;
    Ok(ProtectedMatrix {
        data,
        layout: ap.layout,
        side: Side::Product,
    })
}

/// Float-mode residual budget for verifying a product of these operands:
/// `1e-9 * ell * max(|entry|)^2` over both encoded operands. Zero in rational
/// mode, where the identities are exact.
pub fn suggested_tolerance<S: Scalar>(ap: &ProtectedMatrix<S>, bp: &ProtectedMatrix<S>) -> S {
    if S::EXACT {
        return S::zero();
    }
    let mut max_abs = S::zero();
    for m in [&ap.data, &bp.data] {
        for r in 0..m.rows() {
            for e in m.row(r) {
                let a = e.abs();
                if a > max_abs {
                    max_abs = a;
                }
            }
        }
    }
    S::from_f64(1e-9) * S::from_int(ap.layout.ell as i64) * max_abs.clone() * max_abs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Row,
    Col,
}

/// One broken checksum identity, located by block coordinates. `residual` is
/// the largest identity violation seen in that block.
#[derive(Clone, Debug)]
pub struct Violation<S> {
    pub kind: ViolationKind,
    pub block_row: usize,
    pub block_col: usize,
    pub residual: S,
}

/// Recompute every checksum identity of a product from the payload it
/// protects and report the block coordinates where the residual exceeds
/// `tolerance`. An empty list means no detected error.
pub fn verify<S: Scalar>(cp: &ProtectedMatrix<S>, tolerance: &S) -> Result<Vec<Violation<S>>> {
    if cp.side != Side::Product {
        return Err(Error::input("verify expects a Product".to_string()));
    }
    let layout = &cp.layout;
    let data = &cp.data;
    let rb = layout.row_block();
    let cb = layout.col_block();

    let mut worst: Vec<Vec<[Option<S>; 2]>> =
        vec![vec![[None, None]; layout.col_parts]; layout.row_parts];

    // row identities: stored checksum row vs column sums of its block,
    // at every payload column
    for block_row in 0..layout.row_parts {
        let chk = layout.checksum_row_of(block_row);
        for c in 0..layout.encoded_cols() {
            let Lane::Payload(_) = layout.col_lane(c) else {
                continue;
            };
            let block_col = match layout.col_lane(c) {
                Lane::Payload(orig) => orig / cb,
                Lane::Checksum(_) => unreachable!(),
            };
            let mut sum = S::zero();
            for i in 0..rb {
                let r = layout.encoded_row_of(block_row * rb + i);
                sum = sum + data.at(r, c).clone();
            }
            let residual = (sum - data.at(chk, c).clone()).abs();
            if residual > *tolerance {
                let slot = &mut worst[block_row][block_col][0];
                if slot.as_ref().map_or(true, |w| residual > *w) {
                    *slot = Some(residual);
                }
            }
        }
    }

    // column identities: stored checksum column vs row sums of its block,
    // at every payload row
    for block_col in 0..layout.col_parts {
        let chk = layout.checksum_col_of(block_col);
        for r in 0..layout.encoded_rows() {
            let Lane::Payload(orig_row) = layout.row_lane(r) else {
                continue;
            };
            let block_row = orig_row / rb;
            let mut sum = S::zero();
            for j in 0..cb {
                let c = layout.encoded_col_of(block_col * cb + j);
                sum = sum + data.at(r, c).clone();
            }
            let residual = (sum - data.at(r, chk).clone()).abs();
            if residual > *tolerance {
                let slot = &mut worst[block_row][block_col][1];
                if slot.as_ref().map_or(true, |w| residual > *w) {
                    *slot = Some(residual);
                }
            }
        }
    }

    let mut violations = Vec::new();
    for (kind_idx, kind) in [(0, ViolationKind::Row), (1, ViolationKind::Col)] {
        for block_row in 0..layout.row_parts {
            for block_col in 0..layout.col_parts {
                if let Some(residual) = worst[block_row][block_col][kind_idx].clone() {
                    violations.push(Violation {
                        kind,
                        block_row,
                        block_col,
                        residual,
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// Add `magnitude` at one encoded cell, copy-on-write.
pub fn inject_fault<S: Scalar>(
    cp: &ProtectedMatrix<S>,
    position: (usize, usize),
    magnitude: &S,
) -> Result<ProtectedMatrix<S>> {
    let (r, c) = position;
    if r >= cp.data.rows() || c >= cp.data.cols() {
        return Err(Error::input(format!(
            "fault position ({r}, {c}) outside {}x{}",
            cp.data.rows(),
            cp.data.cols()
        )));
    }
    let mut out = cp.clone();
    let cur = out.data.at(r, c).clone();
    *out.data.at_mut(r, c) = cur + magnitude.clone();
    Ok(out)
}
