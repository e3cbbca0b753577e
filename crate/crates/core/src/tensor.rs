//! Dense row-major vectors and matrices over `f64`.
//!
//! Problem sizes in this crate are tiny, so every kernel is a plain loop
//! over contiguous storage: no BLAS, no strides, no views. Scalars are
//! represented as rank-1 tensors of length 1.

use crate::error::{Error, Result};
use crate::rng::Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<f64>,
}

impl Tensor {
    pub fn vector(data: Vec<f64>) -> Tensor {
        Tensor {
            shape: vec![data.len()],
            data,
        }
    }

    /// Row-major matrix; `data.len()` must equal `rows * cols`.
    pub fn matrix(rows: usize, cols: usize, data: Vec<f64>) -> Result<Tensor> {
        if rows * cols != data.len() {
            return Err(Error::Shape {
                op: "matrix",
                lhs: vec![rows, cols],
                rhs: vec![data.len()],
            });
        }
        Ok(Tensor {
            shape: vec![rows, cols],
            data,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Tensor> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Usage("from_rows: ragged rows".into()));
        }
        Tensor::matrix(rows.len(), cols, rows.concat())
    }

    /// Rank-1 length-1 tensor; the scalar convention everywhere in this crate.
    pub fn scalar(value: f64) -> Tensor {
        Tensor::vector(vec![value])
    }

    pub fn zeros_vector(len: usize) -> Tensor {
        Tensor::vector(vec![0.0; len])
    }

    pub fn zeros_matrix(rows: usize, cols: usize) -> Tensor {
        Tensor {
            shape: vec![rows, cols],
            data: vec![0.0; rows * cols],
        }
    }

    pub fn zeros_like(&self) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: vec![0.0; self.data.len()],
        }
    }

    pub fn identity(n: usize) -> Tensor {
        let mut t = Tensor::zeros_matrix(n, n);
        for i in 0..n {
            t.data[i * n + i] = 1.0;
        }
        t
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn is_scalar(&self) -> bool {
        self.shape == [1]
    }

    /// Value of a rank-1 length-1 tensor. Callers must check `is_scalar`.
    pub fn scalar_value(&self) -> f64 {
        debug_assert!(self.is_scalar(), "scalar_value on shape {:?}", self.shape);
        self.data[0]
    }

    pub fn rows(&self) -> usize {
        debug_assert_eq!(self.rank(), 2);
        self.shape[0]
    }

    pub fn cols(&self) -> usize {
        debug_assert_eq!(self.rank(), 2);
        self.shape[1]
    }

    pub fn at(&self, row: usize, col: usize) -> f64 {
        debug_assert_eq!(self.rank(), 2);
        self.data[row * self.shape[1] + col]
    }

    fn same_shape(&self, other: &Tensor, op: &'static str) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::Shape {
                op,
                lhs: self.shape.clone(),
                rhs: other.shape.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Tensor {
            shape: self.shape.clone(),
            data,
        })
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other, "sub")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Tensor {
            shape: self.shape.clone(),
            data,
        })
    }

    pub fn scale(&self, factor: f64) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|a| factor * a).collect(),
        }
    }

    /// Elementwise product.
    pub fn mul(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other, "mul")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .collect();
        Ok(Tensor {
            shape: self.shape.clone(),
            data,
        })
    }

    /// Inner product over entries (row-major flattening for matrices).
    pub fn dot(&self, other: &Tensor) -> Result<f64> {
        self.same_shape(other, "dot")?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .sum())
    }

    pub fn sum_squares(&self) -> f64 {
        self.data.iter().map(|a| a * a).sum()
    }

    pub fn l2_norm(&self) -> f64 {
        self.sum_squares().sqrt()
    }

    pub fn l1_norm(&self) -> f64 {
        self.data.iter().map(|a| a.abs()).sum()
    }

    pub fn linf_norm(&self) -> f64 {
        self.data.iter().fold(0.0, |m, a| m.max(a.abs()))
    }

    pub fn transpose(&self) -> Result<Tensor> {
        if self.rank() != 2 {
            return Err(Error::Shape {
                op: "transpose",
                lhs: self.shape.clone(),
                rhs: vec![],
            });
        }
        let (r, c) = (self.rows(), self.cols());
        let mut data = vec![0.0; r * c];
        for i in 0..r {
            for j in 0..c {
                data[j * r + i] = self.data[i * c + j];
            }
        }
        Tensor::matrix(c, r, data)
    }

    /// Matrix-vector product: `self` is J x K, `x` has length K.
    pub fn matvec(&self, x: &Tensor) -> Result<Tensor> {
        if self.rank() != 2 || x.rank() != 1 || self.cols() != x.len() {
            return Err(Error::Shape {
                op: "matvec",
                lhs: self.shape.clone(),
                rhs: x.shape.clone(),
            });
        }
        let (rows, cols) = (self.rows(), self.cols());
        let mut out = vec![0.0; rows];
        for i in 0..rows {
            let row = &self.data[i * cols..(i + 1) * cols];
            let mut acc = 0.0;
            for (a, b) in row.iter().zip(&x.data) {
                acc += a * b;
            }
            out[i] = acc;
        }
        Ok(Tensor::vector(out))
    }

    /// Transposed matrix-vector product: `self` is J x K, `v` has length J;
    /// equals `self.transpose().matvec(v)` without forming the transpose.
    pub fn matvec_t(&self, v: &Tensor) -> Result<Tensor> {
        if self.rank() != 2 || v.rank() != 1 || self.rows() != v.len() {
            return Err(Error::Shape {
                op: "matvec_t",
                lhs: self.shape.clone(),
                rhs: v.shape.clone(),
            });
        }
        let (rows, cols) = (self.rows(), self.cols());
        let mut out = vec![0.0; cols];
        for k in 0..cols {
            let mut acc = 0.0;
            for j in 0..rows {
                acc += self.data[j * cols + k] * v.data[j];
            }
            out[k] = acc;
        }
        Ok(Tensor::vector(out))
    }

    /// Outer product of two vectors: result[i][j] = self[i] * other[j].
    pub fn outer(&self, other: &Tensor) -> Result<Tensor> {
        if self.rank() != 1 || other.rank() != 1 {
            return Err(Error::Shape {
                op: "outer",
                lhs: self.shape.clone(),
                rhs: other.shape.clone(),
            });
        }
        let (r, c) = (self.len(), other.len());
        let mut data = vec![0.0; r * c];
        for i in 0..r {
            for j in 0..c {
                data[i * c + j] = self.data[i] * other.data[j];
            }
        }
        Tensor::matrix(r, c, data)
    }

    /// Soft thresholding, `sign(z_i) * max(|z_i| - tau, 0)`, with the
    /// convention sign(0) = 0 so zero is an exact fixed point.
    pub fn soft_threshold(&self, tau: f64) -> Result<Tensor> {
        if tau < 0.0 || tau.is_nan() {
            return Err(Error::Domain(format!(
                "soft_threshold requires tau >= 0, got {tau}"
            )));
        }
        let data = self.data.iter().map(|&z| soft_threshold_entry(z, tau)).collect();
        Ok(Tensor {
            shape: self.shape.clone(),
            data,
        })
    }
}

pub(crate) fn soft_threshold_entry(z: f64, tau: f64) -> f64 {
    if z > tau {
        z - tau
    } else if z < -tau {
        z + tau
    } else {
        0.0
    }
}

/// Vector of i.i.d. standard-normal entries drawn from `rng`.
pub fn randn_vector(rng: &mut Rng, len: usize) -> Result<Tensor> {
    if len == 0 {
        return Err(Error::Domain("randn_vector requires len >= 1".into()));
    }
    Ok(Tensor::vector((0..len).map(|_| rng.normal()).collect()))
}

/// Matrix of i.i.d. standard-normal entries, filled in row-major order.
pub fn randn_matrix(rng: &mut Rng, rows: usize, cols: usize) -> Result<Tensor> {
    if rows == 0 || cols == 0 {
        return Err(Error::Domain("randn_matrix requires rows, cols >= 1".into()));
    }
    Tensor::matrix(rows, cols, (0..rows * cols).map(|_| rng.normal()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{x} vs {y}");
        }
    }

    #[test]
    fn matvec_identity() {
        let a = Tensor::identity(2);
        let x = Tensor::vector(vec![3.0, -1.0]);
        assert_eq!(a.matvec(&x).unwrap().data(), &[3.0, -1.0]);
    }

    #[test]
    fn matvec_hand_row_sums() {
        let a = Tensor::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let x = Tensor::vector(vec![1.0, 1.0]);
        assert_eq!(a.matvec(&x).unwrap().data(), &[3.0, 7.0]);
    }

    #[test]
    fn matvec_zero_matrix() {
        let a = Tensor::zeros_matrix(3, 2);
        let x = Tensor::vector(vec![5.0, -7.0]);
        assert_eq!(a.matvec(&x).unwrap().data(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn matvec_shape_error_names_both_shapes() {
        let a = Tensor::zeros_matrix(3, 2);
        let x = Tensor::vector(vec![1.0; 3]);
        match a.matvec(&x) {
            Err(Error::Shape { op, lhs, rhs }) => {
                assert_eq!(op, "matvec");
                assert_eq!(lhs, vec![3, 2]);
                assert_eq!(rhs, vec![3]);
            }
            other => panic!("expected shape error, got {other:?}"),
        }
    }

    #[test]
    fn matvec_t_identity() {
        let a = Tensor::identity(2);
        let v = Tensor::vector(vec![1.0, 2.0]);
        assert_eq!(a.matvec_t(&v).unwrap().data(), &[1.0, 2.0]);
    }

    #[test]
    fn matvec_t_hand_column_read() {
        let a = Tensor::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let v = Tensor::vector(vec![1.0, 0.0]);
        assert_eq!(a.matvec_t(&v).unwrap().data(), &[1.0, 2.0]);
    }

    #[test]
    fn matvec_t_matches_transpose_then_matvec() {
        let mut rng = Rng::new(11);
        let a = randn_matrix(&mut rng, 5, 8).unwrap();
        let v = randn_vector(&mut rng, 5).unwrap();
        let direct = a.matvec_t(&v).unwrap();
        let via_transpose = a.transpose().unwrap().matvec(&v).unwrap();
        assert_close(direct.data(), via_transpose.data(), 1e-12);
    }

    #[test]
    fn soft_threshold_hand_values() {
        let z = Tensor::vector(vec![1.0, 0.5]);
        assert_eq!(z.soft_threshold(0.25).unwrap().data(), &[0.75, 0.25]);
    }

    #[test]
    fn soft_threshold_zero_tau_is_identity() {
        let z = Tensor::vector(vec![1.0, -0.5, 0.0]);
        assert_eq!(z.soft_threshold(0.0).unwrap().data(), z.data());
    }

    #[test]
    fn soft_threshold_full_shrinkage() {
        let z = Tensor::vector(vec![0.2, -0.3, 0.1]);
        assert_eq!(z.soft_threshold(0.5).unwrap().data(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn soft_threshold_negative_tau_rejected() {
        let z = Tensor::vector(vec![1.0]);
        assert!(matches!(z.soft_threshold(-0.1), Err(Error::Domain(_))));
    }

    // Per-coordinate brute-force minimization of 0.5*(u-z)^2 + tau*|u| over a
    // grid; independent oracle for the proximal-operator identity.
    fn prox_l1_grid(z: f64, tau: f64, grid_step: f64) -> f64 {
        let span = z.abs() + tau + 1.0;
        let n = (2.0 * span / grid_step).ceil() as usize;
        let mut best_u = -span;
        let mut best_val = f64::INFINITY;
        for i in 0..=n {
            let u = -span + i as f64 * grid_step;
            let val = 0.5 * (u - z) * (u - z) + tau * u.abs();
            if val < best_val {
                best_val = val;
                best_u = u;
            }
        }
        best_u
    }

    #[test]
    fn soft_threshold_is_prox_of_l1() {
        let mut rng = Rng::new(5);
        for _ in 0..50 {
            let z = 3.0 * rng.normal();
            let tau = rng.uniform();
            let grid = prox_l1_grid(z, tau, 1e-4);
            let direct = soft_threshold_entry(z, tau);
            assert!(
                (grid - direct).abs() <= 2e-4,
                "prox mismatch at z={z}, tau={tau}: grid {grid} vs {direct}"
            );
        }
    }

    #[test]
    fn randn_deterministic_and_seed_sensitive() {
        let a = randn_matrix(&mut Rng::new(17), 4, 3).unwrap();
        let b = randn_matrix(&mut Rng::new(17), 4, 3).unwrap();
        assert_eq!(a, b);
        let c = randn_matrix(&mut Rng::new(18), 4, 3).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn randn_rejects_zero_sizes() {
        assert!(randn_vector(&mut Rng::new(0), 0).is_err());
        assert!(randn_matrix(&mut Rng::new(0), 0, 3).is_err());
    }

    #[test]
    fn transpose_round_trip() {
        let a = Tensor::from_rows(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]).unwrap();
        let t = a.transpose().unwrap();
        assert_eq!(t.shape(), &[3, 2]);
        assert_eq!(t.transpose().unwrap(), a);
    }

    #[test]
    fn outer_shapes_and_values() {
        let u = Tensor::vector(vec![1.0, 2.0]);
        let v = Tensor::vector(vec![3.0, 4.0, 5.0]);
        let o = u.outer(&v).unwrap();
        assert_eq!(o.shape(), &[2, 3]);
        assert_eq!(o.data(), &[3.0, 4.0, 5.0, 6.0, 8.0, 10.0]);
    }

    proptest! {
        // Adjoint identity: <A x, v> == <x, A^T v>.
        #[test]
        fn adjoint_identity(seed in 0u64..1000) {
            let mut rng = Rng::new(seed);
            let a = randn_matrix(&mut rng, 4, 6).unwrap();
            let x = randn_vector(&mut rng, 6).unwrap();
            let v = randn_vector(&mut rng, 4).unwrap();
            let lhs = a.matvec(&x).unwrap().dot(&v).unwrap();
            let rhs = x.dot(&a.matvec_t(&v).unwrap()).unwrap();
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            prop_assert!((lhs - rhs).abs() / scale < 1e-12);
        }

        // The proximal operator is non-expansive in l2.
        #[test]
        fn soft_threshold_nonexpansive(seed in 0u64..1000) {
            let mut rng = Rng::new(seed);
            let a = randn_vector(&mut rng, 8).unwrap();
            let b = randn_vector(&mut rng, 8).unwrap();
            let tau = rng.uniform() * 2.0;
            let da = a.soft_threshold(tau).unwrap();
            let db = b.soft_threshold(tau).unwrap();
            let after = da.sub(&db).unwrap().l2_norm();
            let before = a.sub(&b).unwrap().l2_norm();
            prop_assert!(after <= before + 1e-12);
        }

        // Kernels are pure functions: identical inputs, bit-identical outputs.
        #[test]
        fn kernels_deterministic(seed in 0u64..200) {
            let mut rng = Rng::new(seed);
            let a = randn_matrix(&mut rng, 3, 5).unwrap();
            let x = randn_vector(&mut rng, 5).unwrap();
            let y1 = a.matvec(&x).unwrap();
            let y2 = a.matvec(&x).unwrap();
            prop_assert_eq!(y1, y2);
        }
    }
}
