//! Kronecker products, row-major `vec`/`mat`, and the reduction of
//! `A·X·B = C` to `(A ⊗ Bᵀ)·vec(X) = vec(C)`.

use std::fmt;

use crate::error::{Error, Result, Shape};
use crate::field::{Field, Ring};
use crate::linsys::{solve_right, AffineSolution};
use crate::matrix::Matrix;

/// Block matrix `(a_{i,j}·B)`.
pub fn kronecker<T: Ring + fmt::Display>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let (p, q) = (b.rows(), b.cols());
    Matrix::from_fn(a.rows() * p, a.cols() * q, |i, j| {
        let (bi, ri) = ((i - 1) / p, (i - 1) % p);
        let (bj, rj) = ((j - 1) / q, (j - 1) % q);
        a.at(bi, bj).clone() * b.at(ri, rj).clone()
    })
}

/// Index bookkeeping for flattening an `m×n` matrix row by row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VecIndexMap {
    pub rows: usize,
    pub cols: usize,
}

impl VecIndexMap {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols }
    }

    pub fn len(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// 1-based `(i, j)` to 1-based `(i − 1)·n + j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j));
        (i - 1) * self.cols + j
    }

    /// 1-based `k` to `(⌈k/n⌉, ((k − 1) mod n) + 1)`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        assert!((1..=self.len()).contains(&k));
        (k.div_ceil(self.cols), (k - 1) % self.cols + 1)
    }
}

/// Rows of `x` stacked into one column.
pub fn vec<T: Ring + fmt::Display>(x: &Matrix<T>) -> Matrix<T> {
    Matrix::column(x.entries().to_vec())
}

pub fn mat<T: Ring + fmt::Display>(v: &Matrix<T>, rows: usize, cols: usize) -> Result<Matrix<T>, T> {
    if v.cols() != 1 || v.rows() != rows * cols {
        return Err(Error::LengthMismatch {
            len: v.rows() * v.cols(),
            shape: Shape(rows, cols),
        });
    }
    let map = VecIndexMap::new(rows, cols);
    let mut out = Matrix::zeros(rows, cols);
    for (k, x) in v.entries().iter().enumerate() {
        let (i, j) = map.position(k + 1);
        out.set(i, j, x.clone());
    }
    Ok(out)
}

/// The solution set of `A·X·B = C` as an affine set over `vec(X)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KronSolution<T> {
    /// `A ⊗ Bᵀ`.
    pub system: Matrix<T>,
    /// `vec(C)`.
    pub rhs: Matrix<T>,
    /// Shape of `X`.
    pub unknown: Shape,
    pub solution: AffineSolution<T>,
}

impl<T: Field> KronSolution<T> {
    pub fn contains(&self, x: &Matrix<T>) -> bool {
        x.shape() == self.unknown && self.solution.contains(&vec(x))
    }

    pub fn particular(&self) -> Matrix<T> {
        mat(&self.solution.particular, self.unknown.0, self.unknown.1).expect("sized by construction")
    }

    /// `mat(particular + directrix·t)`.
    pub fn member(&self, t: &[T]) -> Result<Matrix<T>, T> {
        mat(&self.solution.point(t)?, self.unknown.0, self.unknown.1)
    }

    pub fn dimension(&self) -> usize {
        self.solution.dimension
    }
}

pub fn solve_axb_via_kron<T: Field>(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>) -> Result<KronSolution<T>, T> {
    if c.rows() != a.rows() || c.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            op: "A·X·B = C (C must be rows(A)×cols(B))",
            left: Shape(a.rows(), b.cols()),
            right: c.shape(),
        });
    }
    let system = kronecker(a, &b.transpose());
    let rhs = vec(c);
    let solution = solve_right(&system, &rhs)?;
    Ok(KronSolution {
        system,
        rhs,
        unknown: Shape(a.cols(), b.rows()),
        solution,
    })
}
