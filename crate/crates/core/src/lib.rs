//! Exact generalized inverses and reproductive solutions of `AXB = C`.
//!
//! The linear algebra is generic over a [`Field`] scalar; the aliases below
//! pin the Gaussian rationals used by the command-line tool.
//!
//! ```
//! use ginv::axb::penrose_general_solution;
//! use ginv::represent::{representability_probe, ProbeBudget, RepresentabilityVerdict};
//! use ginv::{ExactMatrix, GaussianRational as G};
//!
//! let m = |rows: &[&[i64]]| {
//!     ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| G::from(x)).collect()).collect())
//! };
//! let a = m(&[&[1, 2, 1], &[0, 1, 0], &[1, 1, 1]]);
//! let b = m(&[&[1, 1], &[1, 1], &[2, 2]]);
//! let c = m(&[&[-3, -3], &[-1, -1], &[-2, -2]]);
//!
//! let gs = penrose_general_solution(&a, &b, &c)?;
//! assert!(gs.is_reproductive());
//! assert_eq!(gs.solution_dimension(), 7);
//!
//! let x1 = m(&[&[-7, 1, 1], &[-1, 0, 0], &[0, 1, 1]]);
//! let probe = representability_probe(&a, &b, &c, &x1, ProbeBudget::default())?;
//! assert!(matches!(probe.verdict, RepresentabilityVerdict::ProvenInfeasible(_)));
//! # Ok::<(), ginv::Error<G>>(())
//! ```

pub mod axb;
pub mod cli;
pub mod error;
pub mod field;
pub mod kron;
pub mod linsys;
pub mod matrix;
pub mod mxfile;
pub mod oneinv;
pub mod polyring;
pub mod report;
pub mod represent;
pub mod rnf;
pub mod scalar;

pub use error::{Error, Shape};
pub use field::{Field, Ring};
pub use matrix::Matrix;
pub use polyring::{Poly, SymMatrix, Symbols, Variable};
pub use rnf::{inverse_regular, rank, rank_normal_form, RankNormalForm};
pub use scalar::{parse_scalar, GaussianRational, Rational};

/// Dense matrix over Q(i).
pub type ExactMatrix = Matrix<GaussianRational>;
/// Dense matrix over Q.
pub type RationalMatrix = Matrix<Rational>;
pub type Matrix64 = Matrix<f64>;
pub type Matrix32 = Matrix<f32>;
/// Polynomial over Q(i).
pub type ExactPoly = Poly<GaussianRational>;
pub type ExactSymMatrix = SymMatrix<GaussianRational>;
