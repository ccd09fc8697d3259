//! Dense row-major matrices over a [`Scalar`] backend.

use crate::scalar::Scalar;
use std::ops::{Index, IndexMut};

/// A dense `rows x cols` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    /// Builds a matrix from row-major data. Panics if the length is wrong.
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "matrix data length {} does not match {}x{}",
            data.len(),
            rows,
            cols
        );
        Mat { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::new(rows, cols, vec![S::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::scaled_identity(n, S::one())
    }

    pub fn scaled_identity(n: usize, diag: S) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = diag.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat::new(rows, cols, data)
    }

    /// Builds a matrix from integer rows; handy for fixtures.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat::from_fn(r, c, |i, j| S::from_int(rows[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Mat::new(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Mat::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scalar_mul(&self, k: &S) -> Self {
        self.map(|x| k.clone() * x.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Mat::<S>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + term;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        (0..self.rows).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Kronecker (tensor) product, blocks of `other` scaled by entries of `self`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Mat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out[(i * other.rows + p, j * other.cols + q)] =
                            a.clone() * other[(p, q)].clone();
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum of two matrices.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Block-diagonal sum of `copies` copies of `self`.
    pub fn direct_sum_copies(&self, copies: usize) -> Self {
        assert!(copies >= 1);
        let mut out = self.clone();
        for _ in 1..copies {
            out = out.direct_sum(self);
        }
        out
    }

    /// Largest entry magnitude; the scale reference for tolerance checks.
    pub fn max_mag(&self) -> f64 {
        self.data.iter().map(|x| x.mag()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Scale-aware symmetry test (exact equality on exact backends).
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.symmetry_defect(1) == 0.0
    }

    /// Scale-aware antisymmetry test, including the diagonal.
    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && self.symmetry_defect(-1) == 0.0
    }

    /// Max magnitude of `self - sign * self^T` entries that exceed tolerance;
    /// 0.0 when the (anti)symmetry holds.
    fn symmetry_defect(&self, sign: i8) -> f64 {
        let scale = self.max_mag();
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in 0..self.rows {
                let mirrored = if sign < 0 {
                    -self[(j, i)].clone()
                } else {
                    self[(j, i)].clone()
                };
                let d = self[(i, j)].clone() - mirrored;
                if !d.negligible_at(scale) {
                    worst = worst.max(d.mag());
                }
            }
        }
        worst
    }

    /// The standard symplectic form as a block-diagonal sum of 2x2 blocks
    /// `[[0,1],[-1,0]]`; its Pfaffian is exactly 1.
    pub fn standard_symplectic(dim: usize) -> Self {
        assert!(dim.is_multiple_of(2), "symplectic form needs even dimension");
        let block: Mat<S> = Mat::from_int_rows(&[vec![0, 1], vec![-1, 0]]);
        block.direct_sum_copies(dim / 2)
    }

    /// Converts entries into another scalar type.
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Mat<T> {
        Mat::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }
}

impl<S> Index<(usize, usize)> for Mat<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}
