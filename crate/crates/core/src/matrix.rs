//! Dense row-major matrices over a [`Ring`].
//!
//! Public indices are 1-based: `get(1, 1)` is the top-left entry. Zero-sized
//! matrices are allowed so that empty blocks (`a×0`, `0×b`) compose uniformly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result, Shape};
use crate::field::Ring;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    /// Entry at 1-based `(i, j)`. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) out of range for {} matrix",
            self.shape()
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    /// Overwrites the entry at 1-based `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) out of range for {} matrix",
            self.shape()
        );
        self.data[(i - 1) * self.cols + (j - 1)] = value;
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn at_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    /// Iterator over rows as slices.
    pub fn row_slices(&self) -> impl Iterator<Item = &[T]> {
        let cols = self.cols;
        (0..self.rows).map(move |r| &self.data[r * cols..(r + 1) * cols])
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Ring + fmt::Display> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, T> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                len: data.len(),
                shape: Shape(rows, cols),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds from nested rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// `f` receives 1-based indices.
    pub fn from_fn<F: FnMut(usize, usize) -> T>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// `[[I_a, 0], [0, 0]]` of shape `rows×cols`.
    pub fn rank_pattern(rows: usize, cols: usize, a: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| if i == j && i <= a { T::one() } else { T::zero() })
    }

    pub fn column(entries: Vec<T>) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    pub fn row_vector(entries: Vec<T>) -> Self {
        Self {
            rows: 1,
            cols: entries.len(),
            data: entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| k.clone() * x.clone())
    }

    fn mismatch(&self, op: &'static str, other: &Self) -> Error<T> {
        Error::DimensionMismatch {
            op,
            left: self.shape(),
            right: other.shape(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, T> {
        if self.shape() != other.shape() {
            return Err(self.mismatch("addition", other));
        }
        Ok(self.zip_with(other, |x, y| x.clone() + y.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, T> {
        if self.shape() != other.shape() {
            return Err(self.mismatch("subtraction", other));
        }
        Ok(self.zip_with(other, |x, y| x.clone() - y.clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, T> {
        if self.cols != other.rows {
            return Err(self.mismatch("multiplication", other));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = self.at(r, k);
                if x.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let y = other.at(k, c);
                    if y.is_zero() {
                        continue;
                    }
                    let cell = out.at_mut(r, c);
                    *cell = cell.clone() + x.clone() * y.clone();
                }
            }
        }
        Ok(out)
    }

    fn zip_with<F: Fn(&T, &T) -> T>(&self, other: &Self, f: F) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(x, y)| f(x, y)).collect(),
        }
    }

    /// Copies the 0-based half-open window `rows × cols`.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        assert!(rows.end <= self.rows && cols.end <= self.cols, "window out of range");
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.clone() {
            for c in cols.clone() {
                data.push(self.at(r, c).clone());
            }
        }
        Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Assembles `[[tl, tr], [bl, br]]`.
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Result<Self, T> {
        if tl.rows != tr.rows {
            return Err(tl.mismatch("block row", tr));
        }
        if bl.rows != br.rows {
            return Err(bl.mismatch("block row", br));
        }
        if tl.cols != bl.cols {
            return Err(tl.mismatch("block column", bl));
        }
        if tr.cols != br.cols {
            return Err(tr.mismatch("block column", br));
        }
        let cols = tl.cols + tr.cols;
        Ok(Self::from_fn(tl.rows + bl.rows, cols, |i, j| {
            let (r, c) = (i - 1, j - 1);
            match (r < tl.rows, c < tl.cols) {
                (true, true) => tl.at(r, c).clone(),
                (true, false) => tr.at(r, c - tl.cols).clone(),
                (false, true) => bl.at(r - tl.rows, c).clone(),
                (false, false) => br.at(r - tl.rows, c - tl.cols).clone(),
            }
        }))
    }

    /// Side-by-side concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, T> {
        if self.rows != other.rows {
            return Err(self.mismatch("horizontal concatenation", other));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j <= self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Lifts every entry into another ring.
    pub fn lift<U: Ring + fmt::Display, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        self.map(f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, 'b, T: Ring + fmt::Display> $tr<&'b Matrix<T>> for &'a Matrix<T> {
            type Output = Matrix<T>;
            /// Panics on incompatible shapes; use the `checked_*` form to get an error.
            fn $m(self, rhs: &'b Matrix<T>) -> Matrix<T> {
                match self.$checked(rhs) {
                    Ok(m) => m,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl<T: Ring + fmt::Display> $tr for Matrix<T> {
            type Output = Matrix<T>;
            fn $m(self, rhs: Matrix<T>) -> Matrix<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<T: Ring + fmt::Display> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Bracketed rows with right-aligned columns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let mut widths = vec![0; self.cols];
        for (k, cell) in cells.iter().enumerate() {
            let w = &mut widths[k % self.cols.max(1)];
            *w = (*w).max(cell.chars().count());
        }
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c], width = widths[c])?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactMatrix;

    fn m(rows: Vec<Vec<i64>>) -> ExactMatrix {
        ExactMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Into::into).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(&a * &ExactMatrix::identity(2), a);
        assert_eq!(&ExactMatrix::identity(2) * &a, a);
    }

    #[test]
    fn zero_annihilates() {
        let a = m(vec![vec![1, 2, 3], vec![3, 4, 5]]);
        assert_eq!(&a * &ExactMatrix::zeros(3, 4), ExactMatrix::zeros(2, 4));
    }

    #[test]
    fn transpose_is_involutive() {
        let a = m(vec![vec![1, 2, 3], vec![3, 4, 5]]);
        assert_eq!(a.transpose().shape(), Shape(3, 2));
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn shape_mismatch_names_both_shapes() {
        let a = m(vec![vec![1, 2, 3]]);
        let b = m(vec![vec![1, 2]]);
        let err = a.checked_mul(&b).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                op: "multiplication",
                left: Shape(1, 3),
                right: Shape(1, 2)
            }
        );
        assert!(err.to_string().contains("1×3") && err.to_string().contains("1×2"));
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn one_based_indexing() {
        let mut a = m(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(a.get(2, 1), &3.into());
        a.set(1, 2, 7.into());
        assert_eq!(a.entries()[1], 7.into());
    }

    #[test]
    fn blocks_with_empty_parts() {
        let i2 = ExactMatrix::identity(2);
        let empty_r = ExactMatrix::zeros(2, 0);
        let empty_b = ExactMatrix::zeros(0, 2);
        let empty = ExactMatrix::zeros(0, 0);
        assert_eq!(ExactMatrix::from_blocks(&i2, &empty_r, &empty_b, &empty).unwrap(), i2);
    }

    #[test]
    fn display_aligns_columns() {
        let a = m(vec![vec![1, -20], vec![300, 4]]);
        assert_eq!(a.to_string(), "[  1  -20]\n[300    4]");
    }
}
