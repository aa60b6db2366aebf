//! Consistency and general solutions of `A·X·B = C`, and the special
//! one-sided equations `AX = 0`, `AX = A`, `XA = 0`, `XA = A`, `AXA = A`.

use std::fmt;

use crate::error::{Error, Result, Shape};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::oneinv::{canonical_one_inverse, is_one_inverse};
use crate::rnf::rank;

/// The affine map `g(Y) = X0 + Y − L·Y·R` whose image is the solution set of
/// an equation `A·X·B = C`, with `L = A⁽¹⁾A` and `R = BB⁽¹⁾`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralSolutionMap<T> {
    pub x0: Matrix<T>,
    pub l: Matrix<T>,
    pub r: Matrix<T>,
}

impl<T: Field> GeneralSolutionMap<T> {
    /// Shape of the unknown `X`.
    pub fn unknown_shape(&self) -> Shape {
        self.x0.shape()
    }

    pub fn apply(&self, y: &Matrix<T>) -> Result<Matrix<T>, T> {
        if y.shape() != self.x0.shape() {
            return Err(Error::DimensionMismatch {
                op: "solution map argument",
                left: self.x0.shape(),
                right: y.shape(),
            });
        }
        Ok(&(&self.x0 + y) - &(&(&self.l * y) * &self.r))
    }

    /// `X0 − L·X0·R`; zero exactly when the map is idempotent, since
    /// `g(g(Y)) = g(Y) + X0 − L·X0·R`.
    pub fn reproductivity_defect(&self) -> Matrix<T> {
        &self.x0 - &(&(&self.l * &self.x0) * &self.r)
    }

    pub fn is_reproductive(&self) -> bool {
        self.reproductivity_defect().is_zero()
    }

    /// Dimension of the image of `Y ↦ Y − L·Y·R`, i.e. of the solution set.
    pub fn solution_dimension(&self) -> usize {
        let n = self.x0.rows() * self.x0.cols();
        let lifted = crate::kron::kronecker(&self.l, &self.r.transpose());
        rank(&(&Matrix::identity(n) - &lifted))
    }

    /// `L² = L` and `R² = R`.
    pub fn has_projector_factors(&self) -> bool {
        &self.l * &self.l == self.l && &self.r * &self.r == self.r
    }
}

fn check_shapes<T: Field>(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>) -> Result<(), T> {
    if c.rows() != a.rows() || c.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            op: "A·X·B = C (C must be rows(A)×cols(B))",
            left: Shape(a.rows(), b.cols()),
            right: c.shape(),
        });
    }
    Ok(())
}

fn require_one_inverse<T: Field>(a: &Matrix<T>, a1: &Matrix<T>, which: &'static str) -> Result<(), T> {
    if !is_one_inverse(a, a1)? {
        return Err(Error::NotOneInverse { which });
    }
    Ok(())
}

/// `A·A⁽¹⁾·C·B⁽¹⁾·B − C`.
pub fn consistency_residual<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    a1: &Matrix<T>,
    b1: &Matrix<T>,
) -> Result<Matrix<T>, T> {
    check_shapes(a, b, c)?;
    require_one_inverse(a, a1, "A")?;
    require_one_inverse(b, b1, "B")?;
    Ok(&(&(&(&(a * a1) * c) * b1) * b) - c)
}

/// The verdict does not depend on which {1}-inverses are supplied.
pub fn consistency_check<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    a1: &Matrix<T>,
    b1: &Matrix<T>,
) -> Result<bool, T> {
    Ok(consistency_residual(a, b, c, a1, b1)?.is_zero())
}

/// Penrose's solution with the canonical (zero-block) {1}-inverses.
pub fn penrose_general_solution<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
) -> Result<GeneralSolutionMap<T>, T> {
    penrose_with(a, b, c, &canonical_one_inverse(a), &canonical_one_inverse(b))
}

/// `X0 = A⁽¹⁾·C·B⁽¹⁾` for the supplied {1}-inverses.
pub fn penrose_with<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    a1: &Matrix<T>,
    b1: &Matrix<T>,
) -> Result<GeneralSolutionMap<T>, T> {
    let residual = consistency_residual(a, b, c, a1, b1)?;
    if !residual.is_zero() {
        return Err(Error::Inconsistent { residual });
    }
    Ok(GeneralSolutionMap {
        x0: &(a1 * c) * b1,
        l: a1 * a,
        r: b * b1,
    })
}

/// General solution around an arbitrary particular solution `x0`.
pub fn shifted_general_solution<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    x0: &Matrix<T>,
) -> Result<GeneralSolutionMap<T>, T> {
    shifted_with(a, b, c, x0, &canonical_one_inverse(a), &canonical_one_inverse(b))
}

pub fn shifted_with<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    x0: &Matrix<T>,
    a1: &Matrix<T>,
    b1: &Matrix<T>,
) -> Result<GeneralSolutionMap<T>, T> {
    check_shapes(a, b, c)?;
    require_one_inverse(a, a1, "A")?;
    require_one_inverse(b, b1, "B")?;
    let residual = &(&a.checked_mul(x0)? * b) - c;
    if !residual.is_zero() {
        return Err(Error::NotASolution { residual });
    }
    Ok(GeneralSolutionMap {
        x0: x0.clone(),
        l: a1 * a,
        r: b * b1,
    })
}

/// `A·X·B − C`.
pub fn solution_residual<T: Field>(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>, x: &Matrix<T>) -> Result<Matrix<T>, T> {
    check_shapes(a, b, c)?;
    a.checked_mul(x)?.checked_mul(b)?.checked_sub(c)
}

/// The five one-sided equations in a square `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialEquation {
    AxZero,
    AxA,
    XaZero,
    XaA,
    AxaA,
}

impl SpecialEquation {
    pub const ALL: [SpecialEquation; 5] = [
        SpecialEquation::AxZero,
        SpecialEquation::AxA,
        SpecialEquation::XaZero,
        SpecialEquation::XaA,
        SpecialEquation::AxaA,
    ];

    /// Whether `x` satisfies the equation for the square matrix `a`.
    pub fn holds<T: Field>(self, a: &Matrix<T>, x: &Matrix<T>) -> bool {
        if !a.is_square() || x.shape() != a.shape() {
            return false;
        }
        match self {
            Self::AxZero => (a * x).is_zero(),
            Self::AxA => a * x == *a,
            Self::XaZero => (x * a).is_zero(),
            Self::XaA => x * a == *a,
            Self::AxaA => &(a * x) * a == *a,
        }
    }
}

impl fmt::Display for SpecialEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AxZero => "AX=0",
            Self::AxA => "AX=A",
            Self::XaZero => "XA=0",
            Self::XaA => "XA=A",
            Self::AxaA => "AXA=A",
        })
    }
}

impl std::str::FromStr for SpecialEquation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Self::ALL
            .into_iter()
            .find(|e| e.to_string().eq_ignore_ascii_case(&cleaned))
            .ok_or_else(|| format!("unknown equation {s:?}; expected one of AX=0, AX=A, XA=0, XA=A, AXA=A"))
    }
}

fn special_projectors<T: Field>(
    a: &Matrix<T>,
    b1: &Matrix<T>,
    case: SpecialEquation,
) -> Result<(Matrix<T>, Matrix<T>), T> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.shape()));
    }
    require_one_inverse(a, b1, "A")?;
    let n = a.rows();
    let id = Matrix::identity(n);
    Ok(match case {
        SpecialEquation::AxZero | SpecialEquation::AxA => (b1 * a, id),
        SpecialEquation::XaZero | SpecialEquation::XaA => (id, a * b1),
        SpecialEquation::AxaA => (b1 * a, a * b1),
    })
}

/// Prešić's forms: particular solutions `0`, `I`, `0`, `I`, `B`.
pub fn presic_solution<T: Field>(
    a: &Matrix<T>,
    b1: &Matrix<T>,
    case: SpecialEquation,
) -> Result<GeneralSolutionMap<T>, T> {
    let (l, r) = special_projectors(a, b1, case)?;
    let n = a.rows();
    let x0 = match case {
        SpecialEquation::AxZero | SpecialEquation::XaZero => Matrix::zeros(n, n),
        SpecialEquation::AxA | SpecialEquation::XaA => Matrix::identity(n),
        SpecialEquation::AxaA => b1.clone(),
    };
    Ok(GeneralSolutionMap { x0, l, r })
}

/// Haverić's reproductive forms: particular solutions `0`, `BA`, `0`, `AB`, `BAB`.
pub fn haveric_solution<T: Field>(
    a: &Matrix<T>,
    b1: &Matrix<T>,
    case: SpecialEquation,
) -> Result<GeneralSolutionMap<T>, T> {
    let (l, r) = special_projectors(a, b1, case)?;
    let n = a.rows();
    let x0 = match case {
        SpecialEquation::AxZero | SpecialEquation::XaZero => Matrix::zeros(n, n),
        SpecialEquation::AxA => b1 * a,
        SpecialEquation::XaA => a * b1,
        SpecialEquation::AxaA => &(b1 * a) * b1,
    };
    Ok(GeneralSolutionMap { x0, l, r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactMatrix;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect())
    }

    fn example() -> (ExactMatrix, ExactMatrix, ExactMatrix) {
        (
            m(&[&[1, 2, 1], &[0, 1, 0], &[1, 1, 1]]),
            m(&[&[1, 1], &[1, 1], &[2, 2]]),
            m(&[&[-3, -3], &[-1, -1], &[-2, -2]]),
        )
    }

    fn x1() -> ExactMatrix {
        m(&[&[-7, 1, 1], &[-1, 0, 0], &[0, 1, 1]])
    }

    #[test]
    fn worked_example_is_consistent() {
        let (a, b, c) = example();
        let a1 = canonical_one_inverse(&a);
        let b1 = canonical_one_inverse(&b);
        assert!(consistency_check(&a, &b, &c, &a1, &b1).unwrap());
    }

    #[test]
    fn homogeneous_is_always_consistent() {
        let (a, b, _) = example();
        let c = ExactMatrix::zeros(3, 2);
        let gs = penrose_general_solution(&a, &b, &c).unwrap();
        assert!(gs.x0.is_zero());
        assert!(gs.is_reproductive());
    }

    #[test]
    fn unreachable_right_hand_side_is_inconsistent() {
        let a = m(&[&[1, 0], &[0, 0]]);
        let b = ExactMatrix::identity(2);
        let c = m(&[&[0, 0], &[0, 1]]);
        let a1 = canonical_one_inverse(&a);
        assert!(!consistency_check(&a, &b, &c, &a1, &b).unwrap());
        let err = penrose_general_solution(&a, &b, &c).unwrap_err();
        assert_eq!(
            err,
            Error::Inconsistent {
                residual: m(&[&[0, 0], &[0, -1]])
            }
        );
    }

    #[test]
    fn non_inverse_supplied_is_a_contract_error() {
        let (a, b, c) = example();
        let b1 = canonical_one_inverse(&b);
        let err = consistency_check(&a, &b, &c, &ExactMatrix::zeros(3, 3), &b1).unwrap_err();
        assert_eq!(err, Error::NotOneInverse { which: "A" });
    }

    #[test]
    fn penrose_particular_solution_of_worked_example() {
        let (a, b, c) = example();
        let gs = penrose_general_solution(&a, &b, &c).unwrap();
        assert_eq!(gs.x0, m(&[&[-1, 0, 0], &[-1, 0, 0], &[0, 0, 0]]));
        assert_eq!(&(&a * &gs.x0) * &b, c);
        assert!(gs.is_reproductive());
        assert!(gs.has_projector_factors());
        assert_eq!(gs.solution_dimension(), 7);
        assert_eq!(gs.apply(&gs.x0).unwrap(), gs.x0);
        assert_eq!(gs.apply(&ExactMatrix::zeros(3, 3)).unwrap(), gs.x0);
    }

    #[test]
    fn identity_equation_has_unique_solution() {
        let i = ExactMatrix::identity(2);
        let gs = penrose_general_solution(&i, &i, &i).unwrap();
        assert_eq!(gs.l, i);
        assert_eq!(gs.r, i);
        assert_eq!(gs.apply(&m(&[&[5, 6], &[7, 8]])).unwrap(), i);
    }

    #[test]
    fn shifted_map_around_x1_is_not_reproductive() {
        let (a, b, c) = example();
        let gs = shifted_general_solution(&a, &b, &c, &x1()).unwrap();
        assert!(!gs.is_reproductive());
        let y = m(&[&[1, 2, 3], &[0, -1, 4], &[2, 2, -5]]);
        let x = gs.apply(&y).unwrap();
        assert_eq!(&(&a * &x) * &b, c);
    }

    #[test]
    fn shifted_with_penrose_particular_equals_penrose() {
        let (a, b, c) = example();
        let p = penrose_general_solution(&a, &b, &c).unwrap();
        let s = shifted_general_solution(&a, &b, &c, &p.x0).unwrap();
        assert_eq!(p, s);
    }

    #[test]
    fn shifted_rejects_non_solution() {
        let (a, b, c) = example();
        let err = shifted_general_solution(&a, &b, &c, &ExactMatrix::zeros(3, 3)).unwrap_err();
        assert_eq!(
            err,
            Error::NotASolution {
                residual: &ExactMatrix::zeros(3, 2) - &c
            }
        );
    }

    #[test]
    fn regular_ax_eq_a_collapses_to_identity() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let b1 = a.inverse().unwrap();
        let gs = presic_solution(&a, &b1, SpecialEquation::AxA).unwrap();
        assert_eq!(gs.l, ExactMatrix::identity(2));
        assert_eq!(gs.apply(&m(&[&[3, 4], &[5, 6]])).unwrap(), ExactMatrix::identity(2));
    }

    #[test]
    fn axa_at_zero_returns_the_inverse() {
        let (a, _, _) = example();
        let b1 = canonical_one_inverse(&a);
        let gs = presic_solution(&a, &b1, SpecialEquation::AxaA).unwrap();
        let x = gs.apply(&ExactMatrix::zeros(3, 3)).unwrap();
        assert_eq!(x, b1);
        assert!(is_one_inverse(&a, &x).unwrap());
    }

    #[test]
    fn haveric_particulars_and_shared_lines() {
        let (a, _, _) = example();
        let b1 = canonical_one_inverse(&a);
        let h = haveric_solution(&a, &b1, SpecialEquation::AxA).unwrap();
        assert_eq!(h.x0, &b1 * &a);
        assert!(h.is_reproductive());
        let h = haveric_solution(&a, &b1, SpecialEquation::AxaA).unwrap();
        assert_eq!(h.x0, &(&b1 * &a) * &b1);
        assert!(h.is_reproductive());
        for case in [SpecialEquation::AxZero, SpecialEquation::XaZero] {
            assert_eq!(
                presic_solution(&a, &b1, case).unwrap(),
                haveric_solution(&a, &b1, case).unwrap()
            );
        }
    }

    #[test]
    fn special_cases_reject_bad_input() {
        let b = m(&[&[1, 1], &[1, 1], &[2, 2]]);
        assert!(matches!(
            presic_solution(&b, &ExactMatrix::zeros(2, 3), SpecialEquation::AxA),
            Err(Error::NotSquare(_))
        ));
        let (a, _, _) = example();
        assert_eq!(
            haveric_solution(&a, &ExactMatrix::zeros(3, 3), SpecialEquation::AxA),
            Err(Error::NotOneInverse { which: "A" })
        );
    }

    #[test]
    fn equation_names_parse() {
        for case in SpecialEquation::ALL {
            assert_eq!(case.to_string().parse::<SpecialEquation>().unwrap(), case);
        }
        assert!("AXB=C".parse::<SpecialEquation>().is_err());
    }
}
