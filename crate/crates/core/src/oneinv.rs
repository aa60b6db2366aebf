//! All {1}-inverses of a matrix through the block parametrization
//! `G = P·[[I_a, U], [V, W]]·Q` over a rank normal form `Q·A·P = E_a`.

use std::fmt;

use crate::error::{Error, Result, Shape};
use crate::field::{Field, Ring};
use crate::matrix::Matrix;
use crate::polyring::{constant_matrix, Poly, SymMatrix, Symbols, Variable};
use crate::rnf::{inverse_regular, rank_normal_form, RankNormalForm};

/// The affine set `A{1}` of an `m×n` matrix `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct OneInverseFamily<T> {
    rows: usize,
    cols: usize,
    rnf: RankNormalForm<T>,
}

/// Shapes of the free blocks `U` (a×(m−a)), `V` ((n−a)×a), `W` ((n−a)×(m−a)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockShapes {
    pub u: Shape,
    pub v: Shape,
    pub w: Shape,
}

impl BlockShapes {
    pub fn parameter_count(&self) -> usize {
        self.u.0 * self.u.1 + self.v.0 * self.v.1 + self.w.0 * self.w.1
    }
}

/// The three free blocks of one family member.
#[derive(Debug, Clone, PartialEq)]
pub struct Blocks<T> {
    pub u: Matrix<T>,
    pub v: Matrix<T>,
    pub w: Matrix<T>,
}

/// How symbolic parameters are named.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParameterNames {
    /// `u_{i,j}`, `v_{i,j}`, `w_{i,j}`; with a tag `t`, `u^t_{i,j}` and so on.
    Indexed { tag: Option<String> },
    /// Exactly `k` names consumed in the order U, V, W, each row-major.
    Explicit(Vec<String>),
}

impl ParameterNames {
    pub fn indexed() -> Self {
        Self::Indexed { tag: None }
    }

    pub fn tagged(tag: &str) -> Self {
        Self::Indexed {
            tag: Some(tag.to_string()),
        }
    }

    pub fn explicit<S: AsRef<str>>(names: &[S]) -> Self {
        Self::Explicit(names.iter().map(|s| s.as_ref().to_string()).collect())
    }
}

/// Symbolic family member with its parameters in U, V, W row-major order.
#[derive(Debug, Clone)]
pub struct SymbolicFamily<T> {
    pub matrix: SymMatrix<T>,
    pub parameters: Vec<Variable>,
    pub shapes: BlockShapes,
}

impl<T: Field> SymbolicFamily<T> {
    /// Splits parameter values (in `parameters` order) into blocks.
    pub fn blocks_from_values(&self, values: &[T]) -> Blocks<T> {
        assert_eq!(values.len(), self.parameters.len(), "one value per parameter");
        split_blocks(self.shapes, values)
    }
}

fn split_blocks<T: Field>(shapes: BlockShapes, values: &[T]) -> Blocks<T> {
    let mut rest = values.iter().cloned();
    let mut take = |s: Shape| {
        let data: Vec<T> = rest.by_ref().take(s.0 * s.1).collect();
        Matrix::new(s.0, s.1, data).expect("sized by shape")
    };
    let u = take(shapes.u);
    let v = take(shapes.v);
    let w = take(shapes.w);
    Blocks { u, v, w }
}

/// `P·[[I_a, U], [V, W]]·Q`, shared by the numeric and symbolic paths.
fn assemble<R: Ring + fmt::Display>(
    p: &Matrix<R>,
    q: &Matrix<R>,
    u: &Matrix<R>,
    v: &Matrix<R>,
    w: &Matrix<R>,
) -> Result<Matrix<R>, R> {
    let core = Matrix::from_blocks(&Matrix::identity(u.rows()), u, v, w)?;
    p.checked_mul(&core)?.checked_mul(q)
}

impl<T: Field> OneInverseFamily<T> {
    pub fn new(a: &Matrix<T>) -> Self {
        Self {
            rows: a.rows(),
            cols: a.cols(),
            rnf: rank_normal_form(a),
        }
    }

    pub fn source_shape(&self) -> Shape {
        Shape(self.rows, self.cols)
    }

    pub fn rank_normal_form(&self) -> &RankNormalForm<T> {
        &self.rnf
    }

    pub fn rank(&self) -> usize {
        self.rnf.rank
    }

    pub fn block_shapes(&self) -> BlockShapes {
        let (m, n, a) = (self.rows, self.cols, self.rnf.rank);
        BlockShapes {
            u: Shape(a, m - a),
            v: Shape(n - a, a),
            w: Shape(n - a, m - a),
        }
    }

    /// `k = m·n − a²`.
    pub fn parameter_count(&self) -> usize {
        self.rows * self.cols - self.rnf.rank * self.rnf.rank
    }

    pub fn instantiate(&self, u: &Matrix<T>, v: &Matrix<T>, w: &Matrix<T>) -> Result<Matrix<T>, T> {
        let shapes = self.block_shapes();
        for (block, expected, found) in [
            ("U", shapes.u, u.shape()),
            ("V", shapes.v, v.shape()),
            ("W", shapes.w, w.shape()),
        ] {
            if expected != found {
                return Err(Error::BlockShape { block, expected, found });
            }
        }
        assemble(&self.rnf.p, &self.rnf.q, u, v, w)
    }

    pub fn instantiate_blocks(&self, blocks: &Blocks<T>) -> Result<Matrix<T>, T> {
        self.instantiate(&blocks.u, &blocks.v, &blocks.w)
    }

    pub fn zero_blocks(&self) -> Blocks<T> {
        let s = self.block_shapes();
        Blocks {
            u: Matrix::zeros(s.u.0, s.u.1),
            v: Matrix::zeros(s.v.0, s.v.1),
            w: Matrix::zeros(s.w.0, s.w.1),
        }
    }

    /// The member with all-zero blocks.
    pub fn canonical(&self) -> Matrix<T> {
        self.instantiate_blocks(&self.zero_blocks())
            .expect("zero blocks have family shapes")
    }

    /// Recovers the blocks of `g` when it belongs to the family: `P⁻¹·G·Q⁻¹`
    /// must have `I_a` as its top-left block.
    pub fn blocks_of(&self, g: &Matrix<T>) -> Option<Blocks<T>> {
        if g.shape() != Shape(self.cols, self.rows) {
            return None;
        }
        let p_inv = inverse_regular(&self.rnf.p).ok()?;
        let q_inv = inverse_regular(&self.rnf.q).ok()?;
        let h = p_inv.checked_mul(g).ok()?.checked_mul(&q_inv).ok()?;
        let a = self.rnf.rank;
        let (n, m) = (self.cols, self.rows);
        if h.submatrix(0..a, 0..a) != Matrix::identity(a) {
            return None;
        }
        Some(Blocks {
            u: h.submatrix(0..a, a..m),
            v: h.submatrix(a..n, 0..a),
            w: h.submatrix(a..n, a..m),
        })
    }

    /// Symbolic member whose entries are affine in the `k` parameters.
    pub fn symbolic(&self, names: &ParameterNames, symbols: &mut Symbols) -> Result<SymbolicFamily<T>, T> {
        let shapes = self.block_shapes();
        let k = shapes.parameter_count();
        let labels: Vec<String> = match names {
            ParameterNames::Explicit(list) => {
                if list.len() < k {
                    return Err(Error::InsufficientNames {
                        needed: k,
                        given: list.len(),
                    });
                }
                list[..k].to_vec()
            }
            ParameterNames::Indexed { tag } => {
                let tag = tag.as_deref().map(|t| format!("^{t}")).unwrap_or_default();
                let mut out = Vec::with_capacity(k);
                for (letter, s) in [("u", shapes.u), ("v", shapes.v), ("w", shapes.w)] {
                    for i in 1..=s.0 {
                        for j in 1..=s.1 {
                            out.push(format!("{letter}{tag}_{{{i},{j}}}"));
                        }
                    }
                }
                out
            }
        };
        let parameters = labels
            .iter()
            .map(|name| symbols.fresh(name))
            .collect::<Result<Vec<_>, T>>()?;
        let polys: Vec<Poly<T>> = parameters.iter().map(Poly::var).collect();
        let mut rest = polys.into_iter();
        let mut take = |s: Shape| {
            let data: Vec<Poly<T>> = rest.by_ref().take(s.0 * s.1).collect();
            SymMatrix::new(s.0, s.1, data).expect("sized by shape")
        };
        let (u, v, w) = (take(shapes.u), take(shapes.v), take(shapes.w));
        let matrix = assemble(&constant_matrix(&self.rnf.p), &constant_matrix(&self.rnf.q), &u, &v, &w)
            .expect("block shapes agree with the normal form");
        Ok(SymbolicFamily {
            matrix,
            parameters,
            shapes,
        })
    }
}

pub fn family_from<T: Field>(a: &Matrix<T>) -> OneInverseFamily<T> {
    OneInverseFamily::new(a)
}

/// The zero-block {1}-inverse of `a`.
pub fn canonical_one_inverse<T: Field>(a: &Matrix<T>) -> Matrix<T> {
    OneInverseFamily::new(a).canonical()
}

/// Exact test of `A·G·A = A`; `g` must be `n×m` for an `m×n` source.
pub fn is_one_inverse<T: Field>(a: &Matrix<T>, g: &Matrix<T>) -> Result<bool, T> {
    if g.shape() != Shape(a.cols(), a.rows()) {
        return Err(Error::DimensionMismatch {
            op: "{1}-inverse check",
            left: a.shape(),
            right: g.shape(),
        });
    }
    Ok(&(a * g) * a == *a)
}

pub fn symbolic_family<T: Field>(
    a: &Matrix<T>,
    names: &ParameterNames,
    symbols: &mut Symbols,
) -> Result<SymbolicFamily<T>, T> {
    OneInverseFamily::new(a).symbolic(names, symbols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{evaluate_matrix, Assignment};
    use crate::{ExactMatrix, GaussianRational as G};
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect())
    }

    fn example_a() -> ExactMatrix {
        m(&[&[1, 2, 1], &[0, 1, 0], &[1, 1, 1]])
    }

    fn example_b() -> ExactMatrix {
        m(&[&[1, 1], &[1, 1], &[2, 2]])
    }

    #[test]
    fn regular_matrix_has_a_unique_member() {
        let fam = family_from(&ExactMatrix::identity(3));
        assert_eq!(fam.parameter_count(), 0);
        assert_eq!(fam.canonical(), ExactMatrix::identity(3));
        let mut s = Symbols::new();
        let sym = fam.symbolic(&ParameterNames::indexed(), &mut s).unwrap();
        assert!(sym.parameters.is_empty());
        assert_eq!(sym.matrix, constant_matrix(&ExactMatrix::identity(3)));
    }

    #[test]
    fn parameter_counts_of_worked_example() {
        assert_eq!(family_from(&example_a()).parameter_count(), 5);
        assert_eq!(family_from(&example_b()).parameter_count(), 5);
        let shapes = family_from(&example_b()).block_shapes();
        assert_eq!(shapes.u, Shape(1, 2));
        assert_eq!(shapes.v, Shape(1, 1));
        assert_eq!(shapes.w, Shape(1, 2));
    }

    #[test]
    fn canonical_member_is_a_one_inverse() {
        for a in [example_a(), example_b(), ExactMatrix::zeros(2, 3)] {
            let g = canonical_one_inverse(&a);
            assert!(is_one_inverse(&a, &g).unwrap());
        }
    }

    #[test]
    fn zero_is_not_a_one_inverse_of_nonzero() {
        assert!(!is_one_inverse(&example_a(), &ExactMatrix::zeros(3, 3)).unwrap());
        assert!(is_one_inverse(&example_b(), &ExactMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn block_shape_mismatch() {
        let fam = family_from(&example_a());
        let err = fam
            .instantiate(
                &ExactMatrix::zeros(2, 2),
                &ExactMatrix::zeros(1, 2),
                &ExactMatrix::zeros(1, 1),
            )
            .unwrap_err();
        assert!(matches!(err, Error::BlockShape { block: "U", .. }));
    }

    #[test]
    fn symbolic_evaluation_matches_instantiation() {
        let fam = family_from(&example_a());
        let mut s = Symbols::new();
        let sym = fam
            .symbolic(&ParameterNames::explicit(&["a", "b", "c", "d", "e"]), &mut s)
            .unwrap();
        let values: Vec<G> = [3, -1, 2, 5, 7].iter().map(|&x| G::from(x)).collect();
        let assignment: Assignment<G> = sym.parameters.iter().cloned().zip(values.iter().cloned()).collect();
        let numeric = fam.instantiate_blocks(&sym.blocks_from_values(&values)).unwrap();
        assert_eq!(evaluate_matrix(&sym.matrix, &assignment).unwrap(), numeric);
        assert!(is_one_inverse(&example_a(), &numeric).unwrap());
        for p in sym.matrix.entries() {
            assert!(p.is_affine());
        }
        let residual = (&(&constant_matrix(&example_a()) * &sym.matrix) * &constant_matrix(&example_a()))
            - constant_matrix(&example_a());
        assert!(residual.entries().iter().all(Poly::is_zero));
    }

    #[test]
    fn insufficient_names() {
        let mut s = Symbols::new();
        let err = symbolic_family(&example_b(), &ParameterNames::explicit(&["g", "h"]), &mut s).unwrap_err();
        assert_eq!(err, Error::InsufficientNames { needed: 5, given: 2 });
    }

    #[test]
    fn blocks_round_trip() {
        let fam = family_from(&example_b());
        let blocks = Blocks {
            u: m(&[&[1, -2]]),
            v: m(&[&[3]]),
            w: m(&[&[0, 4]]),
        };
        let g = fam.instantiate_blocks(&blocks).unwrap();
        assert_eq!(fam.blocks_of(&g), Some(blocks));
        assert!(fam.blocks_of(&ExactMatrix::zeros(2, 3)).is_none());
    }
}
