use std::fmt;

use thiserror::Error;

use crate::matrix::Matrix;

/// Matrix shape, displayed as `rows×cols`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape(pub usize, pub usize);

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{}", self.0, self.1)
    }
}

/// Errors raised by the linear-algebra layer, generic over the scalar so that
/// diagnostics can carry exact residuals.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error<T: fmt::Debug + fmt::Display> {
    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: Shape,
        right: Shape,
    },
    #[error("{len} entries cannot form a {shape} matrix")]
    LengthMismatch { len: usize, shape: Shape },
    #[error("expected a square matrix, got {0}")]
    NotSquare(Shape),
    #[error("matrix is singular")]
    Singular,
    #[error("supplied matrix is not a {{1}}-inverse of {which}")]
    NotOneInverse { which: &'static str },
    #[error("candidate is not a solution; A·X·B − C =\n{residual}")]
    NotASolution { residual: Matrix<T> },
    #[error("equation is inconsistent; A·A⁽¹⁾·C·B⁽¹⁾·B − C =\n{residual}")]
    Inconsistent { residual: Matrix<T> },
    #[error("linear system is inconsistent; trailing coordinates of Q·c are {}", render_list(.tail))]
    InconsistentSystem { tail: Vec<T> },
    #[error("block {block} must be {expected}, got {found}")]
    BlockShape {
        block: &'static str,
        expected: Shape,
        found: Shape,
    },
    #[error("need {needed} parameter names, got {given}")]
    InsufficientNames { needed: usize, given: usize },
    #[error("duplicate parameter name {0:?}")]
    DuplicateName(String),
    #[error("variable {0} has no value")]
    UnboundVariable(String),
    #[error("polynomial system is not bilinear in the two parameter groups")]
    NotBilinear,
}

fn render_list<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub type Result<V, T> = std::result::Result<V, Error<T>>;
