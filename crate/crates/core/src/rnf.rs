//! Rank normal form `Q·A·P = E_a` and the elimination routines built on it.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Regular `Q` (m×m) and `P` (n×n) with `Q·A·P = E_a`, `a = rank(A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankNormalForm<T> {
    pub q: Matrix<T>,
    pub p: Matrix<T>,
    pub rank: usize,
}

impl<T: Field> RankNormalForm<T> {
    /// The `E_a` pattern for a source of shape `m×n`.
    pub fn pattern(&self) -> Matrix<T> {
        Matrix::rank_pattern(self.q.rows(), self.p.cols(), self.rank)
    }

    /// Exact check of `Q·A·P = E_a`.
    pub fn verifies(&self, a: &Matrix<T>) -> bool {
        match self.q.checked_mul(a).and_then(|qa| qa.checked_mul(&self.p)) {
            Ok(e) => e == self.pattern(),
            Err(_) => false,
        }
    }
}

/// Row operations accumulate into `Q`, column operations into `P`.
///
/// Pivoting is positional: columns are scanned left to right and the topmost
/// nonzero entry at or below the current pivot row is taken. Identical inputs
/// therefore give identical factors.
pub fn rank_normal_form<T: Field>(a: &Matrix<T>) -> RankNormalForm<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut work = a.clone();
    let mut q = Matrix::<T>::identity(m);
    let pivots = reduce_rows(&mut work, &mut q);
    let rank = pivots.len();

    // Column permutation bringing pivot columns to the front, in order.
    let mut order: Vec<usize> = pivots.clone();
    order.extend((0..n).filter(|c| !pivots.contains(c)));
    let mut p = Matrix::from_fn(n, n, |i, j| if order[j - 1] == i - 1 { T::one() } else { T::zero() });
    let reduced = work.checked_mul(&p).expect("square permutation");

    // Clear the top-right block with column operations col_j -= r_kj · col_k.
    let mut clear = Matrix::<T>::identity(n);
    for k in 0..rank {
        for j in rank..n {
            let x = reduced.at(k, j);
            if !x.is_zero() {
                *clear.at_mut(k, j) = -x.clone();
            }
        }
    }
    p = p.checked_mul(&clear).expect("square");
    RankNormalForm { q, p, rank }
}

/// Gauss–Jordan to reduced row echelon form in place, applying the same row
/// operations to `ops`. Returns pivot column indices (0-based).
pub(crate) fn reduce_rows<T: Field>(work: &mut Matrix<T>, ops: &mut Matrix<T>) -> Vec<usize> {
    let (m, n) = (work.rows(), work.cols());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        let Some(found) = (row..m).find(|&r| !work.at(r, col).is_zero()) else {
            continue;
        };
        swap_rows(work, row, found);
        swap_rows(ops, row, found);
        let inv = work.at(row, col).try_inv().expect("nonzero pivot");
        scale_row(work, row, &inv);
        scale_row(ops, row, &inv);
        for r in 0..m {
            if r == row {
                continue;
            }
            let factor = work.at(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            add_row_multiple(work, r, row, &factor);
            add_row_multiple(ops, r, row, &factor);
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn swap_rows<T: Clone>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for c in 0..m.cols() {
        let x = m.at(a, c).clone();
        *m.at_mut(a, c) = m.at(b, c).clone();
        *m.at_mut(b, c) = x;
    }
}

fn scale_row<T: Field>(m: &mut Matrix<T>, r: usize, k: &T) {
    for c in 0..m.cols() {
        let x = m.at(r, c).clone();
        *m.at_mut(r, c) = x * k.clone();
    }
}

/// `row[target] -= factor · row[source]`
fn add_row_multiple<T: Field>(m: &mut Matrix<T>, target: usize, source: usize, factor: &T) {
    for c in 0..m.cols() {
        let s = m.at(source, c).clone();
        if s.is_zero() {
            continue;
        }
        let x = m.at(target, c).clone();
        *m.at_mut(target, c) = x - factor.clone() * s;
    }
}

pub fn rank<T: Field>(a: &Matrix<T>) -> usize {
    let mut work = a.clone();
    let mut sink = Matrix::<T>::zeros(a.rows(), 0);
    reduce_rows(&mut work, &mut sink).len()
}

/// Reduced row echelon form and its pivot columns (0-based).
pub fn rref<T: Field>(a: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut work = a.clone();
    let mut sink = Matrix::<T>::zeros(a.rows(), 0);
    let pivots = reduce_rows(&mut work, &mut sink);
    (work, pivots)
}

pub fn inverse_regular<T: Field>(m: &Matrix<T>) -> Result<Matrix<T>, T> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.shape()));
    }
    let mut work = m.clone();
    let mut inv = Matrix::<T>::identity(m.rows());
    if reduce_rows(&mut work, &mut inv).len() < m.rows() {
        return Err(Error::Singular);
    }
    Ok(inv)
}

/// Determinant by forward elimination.
pub fn determinant<T: Field>(m: &Matrix<T>) -> Result<T, T> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.shape()));
    }
    let n = m.rows();
    let mut work = m.clone();
    let mut det = T::one();
    for col in 0..n {
        let Some(found) = (col..n).find(|&r| !work.at(r, col).is_zero()) else {
            return Ok(T::zero());
        };
        if found != col {
            swap_rows(&mut work, col, found);
            det = -det;
        }
        let pivot = work.at(col, col).clone();
        let inv = pivot.try_inv().expect("nonzero pivot");
        for r in col + 1..n {
            let factor = work.at(r, col).clone() * inv.clone();
            if !factor.is_zero() {
                add_row_multiple(&mut work, r, col, &factor);
            }
        }
        det = det * pivot;
    }
    Ok(det)
}

impl<T: Field + fmt::Display> Matrix<T> {
    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn rank_normal_form(&self) -> RankNormalForm<T> {
        rank_normal_form(self)
    }

    pub fn inverse(&self) -> Result<Matrix<T>, T> {
        inverse_regular(self)
    }
}
