use std::ops::Index;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::numerics::Scalar;

/// Dense vector. Thin wrapper so domain code reads as math, not as `Vec` plumbing.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(entries: Vec<S>) -> Self {
        Vector { entries }
    }

    pub fn zeros(len: usize) -> Self {
        Vector {
            entries: vec![S::zero(); len],
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Vector {
            entries: v.iter().map(|&x| S::from_int(x)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, S> {
        self.entries.iter()
    }

    pub fn as_slice(&self) -> &[S] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<S> {
        self.entries
    }

    pub fn set(&mut self, i: usize, v: S) {
        self.entries[i] = v;
    }

    pub fn dot(&self, other: &Vector<S>) -> Result<S> {
        if self.len() != other.len() {
            return Err(Error::dim(format!(
                "dot of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        let mut acc = S::zero();
        for (a, b) in self.iter().zip(other.iter()) {
            acc = acc + a.clone() * b.clone();
        }
        Ok(acc)
    }

    pub fn inf_norm(&self) -> S {
        let mut best = S::zero();
        for e in self.iter() {
            let a = e.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    pub fn is_zero(&self) -> bool {
        self.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, c: &S) -> Vector<S> {
        Vector::new(self.iter().map(|e| e.clone() * c.clone()).collect())
    }

    pub fn add(&self, other: &Vector<S>) -> Result<Vector<S>> {
        if self.len() != other.len() {
            return Err(Error::dim("vector add length mismatch".to_string()));
        }
        Ok(Vector::new(
            self.iter()
                .zip(other.iter())
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Vector<S>) -> Result<Vector<S>> {
        if self.len() != other.len() {
            return Err(Error::dim("vector sub length mismatch".to_string()));
        }
        Ok(Vector::new(
            self.iter()
                .zip(other.iter())
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        ))
    }

    /// Convert entry-wise between scalar modes through binary64 (exact in the
    /// float -> rational direction).
    pub fn convert<T: Scalar>(&self) -> Vector<T> {
        Vector::new(self.iter().map(|e| T::from_f64(e.to_f64())).collect())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.iter().map(|e| e.to_json()).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("vector JSON must be an array".to_string()))?;
        Ok(Vector::new(
            arr.iter().map(S::from_json).collect::<Result<Vec<_>>>()?,
        ))
    }
}

impl<S: Scalar> Index<usize> for Vector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.entries[i]
    }
}

impl<S: Scalar> FromIterator<S> for Vector<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Vector::new(iter.into_iter().collect())
    }
}

/// Dense row-major matrix. Problem sizes here are tiny; no sparsity, no tiling.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim(format!(
                "matrix {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dim("ragged rows".to_string()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| S::from_int(x)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut S {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector<S> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vector<S>> + '_ {
        (0..self.cols).map(|c| self.col(c))
    }

    pub fn transpose(&self) -> Matrix<S> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// max over rows of the sum of absolute entry values.
    pub fn inf_norm(&self) -> S {
        let mut best = S::zero();
        for r in 0..self.rows {
            let mut sum = S::zero();
            for e in self.row(r) {
                sum = sum + e.abs();
            }
            if sum > best {
                best = sum;
            }
        }
        best
    }

    /// Sum of diagonal entries; rejects non-square input.
    pub fn trace(&self) -> Result<S> {
        if self.rows != self.cols {
            return Err(Error::dim(format!(
                "trace of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let mut acc = S::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        Ok(acc)
    }

    pub fn matmul(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "matmul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<S> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.at(i, t).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = cur + a.clone() * other.at(t, j).clone();
                }
            }
        }
        Ok(out)
    }

    pub fn mat_vec(&self, v: &Vector<S>) -> Result<Vector<S>> {
        if self.cols != v.len() {
            return Err(Error::dim(format!(
                "mat_vec {}x{} by vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for (a, x) in self.row(r).iter().zip(v.iter()) {
                    acc = acc + a.clone() * x.clone();
                }
                acc
            })
            .collect())
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e.clone() * c.clone()).collect(),
        }
    }

    /// Gauss-Jordan reduction. Returns the reduced matrix and the pivot columns.
    /// Pivot selection is by maximal absolute value; entries within the pivot
    /// tolerance count as zero (exact zero test in rational mode).
    fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            // best pivot in this column at or below prow
            let mut best = prow;
            for r in prow + 1..m.rows {
                if m.at(r, col).abs() > m.at(best, col).abs() {
                    best = r;
                }
            }
            if m.at(best, col).is_negligible() {
                continue;
            }
            if best != prow {
                for c in 0..m.cols {
                    let tmp = m.at(prow, c).clone();
                    *m.at_mut(prow, c) = m.at(best, c).clone();
                    *m.at_mut(best, c) = tmp;
                }
            }
            let p = m.at(prow, col).clone();
            for c in 0..m.cols {
                let v = m.at(prow, c).clone() / p.clone();
                *m.at_mut(prow, c) = v;
            }
            for r in 0..m.rows {
                if r == prow || m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col).clone();
                for c in 0..m.cols {
                    let v = m.at(r, c).clone() - f.clone() * m.at(prow, c).clone();
                    *m.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the kernel {x : A x = 0}. The basis has
    /// cols(A) - rank(A) columns; composing with A gives zero (exactly in
    /// rational mode).
    pub fn kernel_basis(&self) -> Matrix<S> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (bi, &f) in free.iter().enumerate() {
            *basis.at_mut(f, bi) = S::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                *basis.at_mut(pcol, bi) = -r.at(prow, f).clone();
            }
        }
        basis
    }

    /// Convert entry-wise between scalar modes through binary64 (exact in the
    /// float -> rational direction).
    pub fn convert<T: Scalar>(&self) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| T::from_f64(e.to_f64())).collect(),
        }
    }

    /// JSON object {"rows": r, "cols": c, "data": [row-major entries]}.
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "rows": self.rows,
            "cols": self.cols,
            "data": Value::Array(self.data.iter().map(|e| e.to_json()).collect()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("matrix JSON must be an object".to_string()))?;
        let rows = obj
            .get("rows")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing \"rows\"".to_string()))? as usize;
        let cols = obj
            .get("cols")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing \"cols\"".to_string()))? as usize;
        let data = obj
            .get("data")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing \"data\" array".to_string()))?
            .iter()
            .map(S::from_json)
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(rows, cols, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<f64> {
        Matrix::from_fn(rows, cols, |_, _| rng.gen_range(-10.0..10.0))
    }

    #[test]
    fn inf_norm_identity_and_signed_rows() {
        let i3: Matrix<f64> = Matrix::identity(3);
        assert_eq!(i3.inf_norm(), 1.0);
        let m: Matrix<f64> = Matrix::from_int_rows(&[&[1, -1], &[0, 0]]);
        assert_eq!(m.inf_norm(), 2.0);
    }

    #[test]
    fn inf_norm_matches_independent_row_sums() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = random_matrix(&mut rng, 4, 4);
        // independent loop, no shared code path
        let mut expected: f64 = 0.0;
        for i in 0..4 {
            let mut s = 0.0;
            for j in 0..4 {
                s += a.at(i, j).abs();
            }
            expected = expected.max(s);
        }
        assert_eq!(a.inf_norm(), expected);
    }

    #[test]
    fn trace_identity_and_rotation() {
        let i4: Matrix<f64> = Matrix::identity(4);
        assert_eq!(i4.trace().unwrap(), 4.0);
        let rot: Matrix<f64> = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        assert_eq!(rot.trace().unwrap(), 0.0);
        let rect: Matrix<f64> = Matrix::zeros(2, 3);
        assert!(rect.trace().is_err());
    }

    #[test]
    fn trace_of_u_mt_equals_inner_product_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = random_matrix(&mut rng, 5, 2);
        let m = random_matrix(&mut rng, 5, 2);
        let a = u.matmul(&m.transpose()).unwrap();
        let mut expected = 0.0;
        for i in 0..5 {
            for t in 0..2 {
                expected += u.at(i, t) * m.at(i, t);
            }
        }
        assert!((a.trace().unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn rank_basics() {
        let z: Matrix<f64> = Matrix::zeros(3, 4);
        assert_eq!(z.rank(), 0);
        let h: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(h.rank(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 6, 2);
        let b = random_matrix(&mut rng, 2, 6);
        assert!(a.matmul(&b).unwrap().rank() <= 2);
    }

    #[test]
    fn kernel_basis_shapes_and_membership() {
        let i3: Matrix<Rational> = Matrix::identity(3);
        assert_eq!(i3.kernel_basis().cols(), 0);

        let h: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let basis = h.kernel_basis();
        assert_eq!(basis.cols(), 2);
        // (1,-1,0,0) must lie in the kernel and in the basis span
        let v: Vector<Rational> = Vector::from_ints(&[1, -1, 0, 0]);
        assert!(h.mat_vec(&v).unwrap().is_zero());
        let stacked = Matrix::from_fn(3, 4, |i, j| {
            if i < 2 {
                basis.at(j, i).clone()
            } else {
                v[j].clone()
            }
        });
        assert_eq!(stacked.rank(), 2);
    }

    #[test]
    fn kernel_of_random_rank2_wide_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = random_matrix(&mut rng, 2, 6);
        assert_eq!(a.rank(), 2);
        let basis = a.kernel_basis();
        assert_eq!(basis.cols(), 4);
        let residual = a.matmul(&basis).unwrap();
        for i in 0..residual.rows() {
            for j in 0..residual.cols() {
                assert!(residual.at(i, j).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn kernel_composition_is_exactly_zero_in_rational_mode() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let af = random_matrix(&mut rng, 3, 7);
            let a: Matrix<Rational> = af.convert();
            let basis = a.kernel_basis();
            let residual = a.matmul(&basis).unwrap();
            for i in 0..residual.rows() {
                for j in 0..residual.cols() {
                    assert!(residual.at(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn matmul_identity_ones_and_naive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_matrix(&mut rng, 3, 3);
        let i3 = Matrix::identity(3);
        assert_eq!(a.matmul(&i3).unwrap(), a);

        let ones_row: Matrix<f64> = Matrix::from_fn(1, 5, |_, _| 1.0);
        let ones_col: Matrix<f64> = Matrix::from_fn(5, 1, |_, _| 1.0);
        assert_eq!(*ones_row.matmul(&ones_col).unwrap().at(0, 0), 5.0);

        let b = random_matrix(&mut rng, 3, 3);
        let prod = a.matmul(&b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = 0.0;
                for t in 0..3 {
                    acc += a.at(i, t) * b.at(t, j);
                }
                assert!((prod.at(i, j) - acc).abs() < 1e-12);
            }
        }

        assert!(a.matmul(&random_matrix(&mut rng, 4, 2)).is_err());
    }

    #[test]
    fn rank_agrees_with_transpose_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=8);
            let cols = rng.gen_range(1..=12);
            let a = random_matrix(&mut rng, rows, cols);
            assert_eq!(a.rank(), a.transpose().rank());
        }
    }

    #[test]
    fn float_and_rational_modes_agree_on_well_conditioned_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let n = rng.gen_range(2..=12);
            let af = random_matrix(&mut rng, n, n);
            let ar: Matrix<Rational> = af.convert();
            let rel = |x: f64, y: f64| (x - y).abs() / (1.0 + x.abs().max(y.abs()));
            assert!(rel(af.inf_norm(), ar.inf_norm().to_f64()) < 1e-9);
            assert!(rel(af.trace().unwrap(), ar.trace().unwrap().to_f64()) < 1e-9);
            let pf = af.matmul(&af).unwrap();
            let pr = ar.matmul(&ar).unwrap();
            for i in 0..n {
                for j in 0..n {
                    assert!(rel(*pf.at(i, j), pr.at(i, j).to_f64()) < 1e-9);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let h: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let j = h.to_json();
        assert_eq!(Matrix::<Rational>::from_json(&j).unwrap(), h);
        let m: Matrix<f64> = Matrix::from_int_rows(&[&[2, -3], &[0, 5]]);
        assert_eq!(Matrix::<f64>::from_json(&m.to_json()).unwrap(), m);
        assert!(Matrix::<f64>::from_json(&serde_json::json!({"rows": 2})).is_err());
    }
}
