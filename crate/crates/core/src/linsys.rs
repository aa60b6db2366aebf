//! General solutions of `A·x = c` and `x·B = c` from a single {1}-inverse.
//!
//! With `Q·A·P = E_a` and `c' = Q·c`, the system is consistent iff the last
//! `m − a` coordinates of `c'` vanish. The particular solution is
//! `P·[c'_1 … c'_a 0 … 0]ᵀ` and the trailing `n − a` columns of `P` span the
//! homogeneous solutions. Choosing the `V` block of the {1}-inverse with a
//! single nonzero column `j` (where `c'_j ≠ 0`) sweeps that span freely.

use crate::error::{Error, Result, Shape};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::oneinv::OneInverseFamily;
use crate::polyring::{Poly, SymMatrix, Symbols};
use crate::rnf::rank;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `A·x = c` with `x` a column.
    Right,
    /// `x·B = c` with `x` a row.
    Left,
}

/// One step of the constructive solve, in the order performed.
#[derive(Debug, Clone, PartialEq)]
pub enum LinsysStep<T> {
    /// `A` and `c` were transposed to solve `x·B = c` as `Bᵀ·xᵀ = cᵀ`.
    Transposed,
    NormalForm {
        rank: usize,
        q: Matrix<T>,
        p: Matrix<T>,
    },
    Transformed {
        c_prime: Matrix<T>,
    },
    Consistent {
        zero_tail: usize,
    },
    /// Smallest 1-based `j ≤ a` with `c'_j ≠ 0`.
    Pivot {
        j: usize,
        value: T,
    },
    /// Right-hand side is zero; the `V` sweep does not apply.
    Homogeneous,
    /// The `V` block with `v_{i,j}/c'_j` in column `j` and zeros elsewhere.
    VForm {
        v: SymMatrix<T>,
    },
    Particular {
        x: Matrix<T>,
    },
    Directrix {
        basis: Matrix<T>,
        dimension: usize,
    },
}

/// `particular + span(directrix)`; the directrix basis is stored as columns
/// for [`Side::Right`] and as rows for [`Side::Left`].
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolution<T> {
    pub side: Side,
    pub particular: Matrix<T>,
    pub directrix: Matrix<T>,
    pub dimension: usize,
    pub rank: usize,
    pub pivot: Option<(usize, T)>,
    pub trace: Vec<LinsysStep<T>>,
}

impl<T: Field> AffineSolution<T> {
    fn column_form(&self) -> (Matrix<T>, Matrix<T>) {
        match self.side {
            Side::Right => (self.particular.clone(), self.directrix.clone()),
            Side::Left => (self.particular.transpose(), self.directrix.transpose()),
        }
    }

    /// `particular + Σ tᵢ·basisᵢ`.
    pub fn point(&self, t: &[T]) -> Result<Matrix<T>, T> {
        if t.len() != self.dimension {
            return Err(Error::LengthMismatch {
                len: t.len(),
                shape: Shape(self.dimension, 1),
            });
        }
        let (p, d) = self.column_form();
        let x = &p + &(&d * &Matrix::column(t.to_vec()));
        Ok(match self.side {
            Side::Right => x,
            Side::Left => x.transpose(),
        })
    }

    /// Membership of `x` in the affine set.
    pub fn contains(&self, x: &Matrix<T>) -> bool {
        if x.shape() != self.particular.shape() {
            return false;
        }
        let x = match self.side {
            Side::Right => x.clone(),
            Side::Left => x.transpose(),
        };
        let (p, d) = self.column_form();
        let shift = &x - &p;
        let augmented = d.hstack(&shift).expect("same height");
        rank(&augmented) == rank(&d)
    }

    /// The `V` block that makes `A⁽¹⁾·c = particular + directrix·targets`.
    /// `None` for a homogeneous right-hand side or the wrong target count.
    pub fn v_block_for(&self, targets: &[T]) -> Option<Matrix<T>> {
        let (j, value) = self.pivot.as_ref()?;
        if targets.len() != self.dimension {
            return None;
        }
        let inv = value.try_inv()?;
        let mut v = Matrix::zeros(self.dimension, self.rank);
        for (i, t) in targets.iter().enumerate() {
            v.set(i + 1, *j, t.clone() * inv.clone());
        }
        Some(v)
    }
}

fn require_column<T: Field>(a: &Matrix<T>, c: &Matrix<T>) -> Result<(), T> {
    if c.shape() != Shape(a.rows(), 1) {
        return Err(Error::DimensionMismatch {
            op: "right-hand side",
            left: a.shape(),
            right: c.shape(),
        });
    }
    Ok(())
}

/// Solves `A·x = c` for a column `c`.
pub fn solve_right<T: Field>(a: &Matrix<T>, c: &Matrix<T>) -> Result<AffineSolution<T>, T> {
    require_column(a, c)?;
    let family = OneInverseFamily::new(a);
    let rnf = family.rank_normal_form();
    let (m, n, r) = (a.rows(), a.cols(), rnf.rank);
    let mut trace = vec![LinsysStep::NormalForm {
        rank: r,
        q: rnf.q.clone(),
        p: rnf.p.clone(),
    }];

    let c_prime = &rnf.q * c;
    trace.push(LinsysStep::Transformed {
        c_prime: c_prime.clone(),
    });
    let tail: Vec<T> = c_prime.entries()[r..].to_vec();
    if tail.iter().any(|x| !x.is_zero()) {
        return Err(Error::InconsistentSystem { tail });
    }
    trace.push(LinsysStep::Consistent { zero_tail: m - r });

    let pivot = c_prime.entries()[..r]
        .iter()
        .position(|x| !x.is_zero())
        .map(|k| (k + 1, c_prime.entries()[k].clone()));
    match &pivot {
        Some((j, value)) => {
            trace.push(LinsysStep::Pivot {
                j: *j,
                value: value.clone(),
            });
            trace.push(LinsysStep::VForm {
                v: v_form(n - r, r, *j, value),
            });
        }
        None => trace.push(LinsysStep::Homogeneous),
    }

    let mut head = c_prime.entries()[..r].to_vec();
    head.resize(n, T::zero());
    let particular = &rnf.p * &Matrix::column(head);
    let directrix = rnf.p.submatrix(0..n, r..n);
    trace.push(LinsysStep::Particular { x: particular.clone() });
    trace.push(LinsysStep::Directrix {
        basis: directrix.clone(),
        dimension: n - r,
    });
    Ok(AffineSolution {
        side: Side::Right,
        particular,
        directrix,
        dimension: n - r,
        rank: r,
        pivot,
        trace,
    })
}

fn v_form<T: Field>(rows: usize, cols: usize, j: usize, value: &T) -> SymMatrix<T> {
    let mut symbols = Symbols::new();
    let inv = value.try_inv().expect("pivot is nonzero");
    SymMatrix::from_fn(rows, cols, |i, col| {
        if col == j {
            let v = symbols
                .fresh::<T>(&format!("v_{{{i},{j}}}"))
                .expect("indices are distinct");
            Poly::var(&v).scale(&inv)
        } else {
            Poly::constant(T::zero())
        }
    })
}

/// Solves `x·B = c` for a row `c` by transposition.
pub fn solve_left<T: Field>(b: &Matrix<T>, c: &Matrix<T>) -> Result<AffineSolution<T>, T> {
    if c.shape() != Shape(1, b.cols()) {
        return Err(Error::DimensionMismatch {
            op: "left-hand side row",
            left: b.shape(),
            right: c.shape(),
        });
    }
    let inner = solve_right(&b.transpose(), &c.transpose())?;
    let mut trace = vec![LinsysStep::Transposed];
    trace.extend(inner.trace);
    Ok(AffineSolution {
        side: Side::Left,
        particular: inner.particular.transpose(),
        directrix: inner.directrix.transpose(),
        dimension: inner.dimension,
        rank: inner.rank,
        pivot: inner.pivot,
        trace,
    })
}

/// `x = A⁽¹⁾·c` for the member with the given `V` block (and `U = W = 0`,
/// which only ever multiply the zero tail of `Q·c`).
pub fn general_inverse_solution<T: Field>(a: &Matrix<T>, c: &Matrix<T>, v: &Matrix<T>) -> Result<Matrix<T>, T> {
    require_column(a, c)?;
    let family = OneInverseFamily::new(a);
    let r = family.rank();
    let c_prime = &family.rank_normal_form().q * c;
    let tail: Vec<T> = c_prime.entries()[r..].to_vec();
    if tail.iter().any(|x| !x.is_zero()) {
        return Err(Error::InconsistentSystem { tail });
    }
    let shapes = family.block_shapes();
    let g = family.instantiate(
        &Matrix::zeros(shapes.u.0, shapes.u.1),
        v,
        &Matrix::zeros(shapes.w.0, shapes.w.1),
    )?;
    Ok(&g * c)
}
