//! Semi-decision of whether a solution `X` of `A·X·B = C` can be written as
//! `A⁽¹⁾·C·B⁽¹⁾` for some choice of {1}-inverses.
//!
//! The entries of `G_A(α)·C·G_B(β) − X` form a system that is bilinear in the
//! two parameter groups. Staged exact linear elimination either reaches a
//! nonzero constant (an independently replayable proof of infeasibility),
//! empties the system (a witness), or stalls; a seeded alternating search then
//! fixes one group and solves linearly for the other. Only exact elimination
//! ever yields `ProvenInfeasible`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::axb::solution_residual;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::oneinv::{is_one_inverse, OneInverseFamily, ParameterNames};
use crate::polyring::{constant_matrix, evaluate_matrix, Assignment, Monomial, Poly, SymMatrix, Symbols, Variable};
use crate::rnf::reduce_rows;

/// `G_A(α)·C·G_B(β)` together with its factors and parameter groups.
#[derive(Debug, Clone)]
pub struct SymbolicProduct<T> {
    pub matrix: SymMatrix<T>,
    pub left: SymMatrix<T>,
    pub right: SymMatrix<T>,
    pub alpha: Vec<Variable>,
    pub beta: Vec<Variable>,
}

impl<T: Field> SymbolicProduct<T> {
    /// Builds the product from caller-supplied symbolic {1}-inverse families.
    /// Both must satisfy `A·G·A = A` identically; that they cover all of the
    /// respective `A{1}` is the caller's responsibility.
    pub fn from_families(
        a: &Matrix<T>,
        b: &Matrix<T>,
        c: &Matrix<T>,
        left: SymMatrix<T>,
        right: SymMatrix<T>,
    ) -> Result<Self, T> {
        for (m, g, which) in [(a, &left, "A"), (b, &right, "B")] {
            let mm = constant_matrix(m);
            let residual = g
                .checked_mul(&mm)
                .and_then(|gm| mm.checked_mul(&gm))
                .map_err(|_| Error::NotOneInverse { which })?
                - mm;
            if !residual.is_zero() {
                return Err(Error::NotOneInverse { which });
            }
        }
        let alpha: Vec<Variable> = crate::polyring::matrix_variables(&left).into_iter().collect();
        let beta: Vec<Variable> = crate::polyring::matrix_variables(&right).into_iter().collect();
        if alpha.iter().any(|v| beta.contains(v)) {
            return Err(Error::DuplicateName("shared between the two families".into()));
        }
        let matrix = &(&left * &constant_matrix(c)) * &right;
        Ok(Self {
            matrix,
            left,
            right,
            alpha,
            beta,
        })
    }

    /// Degree at most one in each parameter group, entry by entry.
    pub fn is_bilinear(&self) -> bool {
        let alpha: BTreeSet<Variable> = self.alpha.iter().cloned().collect();
        let beta: BTreeSet<Variable> = self.beta.iter().cloned().collect();
        self.matrix
            .entries()
            .iter()
            .all(|p| p.degree_in(&alpha) <= 1 && p.degree_in(&beta) <= 1)
    }

    /// Numeric factors at a full assignment; unassigned parameters read as 0.
    pub fn instantiate(&self, values: &Assignment<T>) -> Result<(Matrix<T>, Matrix<T>), T> {
        let mut full = values.clone();
        for v in self.alpha.iter().chain(&self.beta) {
            full.entry(v.clone()).or_insert_with(T::zero);
        }
        Ok((
            evaluate_matrix(&self.left, &full)?,
            evaluate_matrix(&self.right, &full)?,
        ))
    }
}

/// Default parameter names: single letters (skipping `f` and `i`) when both
/// families fit, otherwise tagged indexed names `u^A_{i,j}`, `u^B_{i,j}`.
pub fn default_names(k_a: usize, k_b: usize) -> (ParameterNames, ParameterNames) {
    const LETTERS: &str = "abcdeghjklmnopqrstuvwxyz";
    if k_a + k_b <= LETTERS.len() {
        let letters: Vec<String> = LETTERS.chars().map(String::from).collect();
        (
            ParameterNames::Explicit(letters[..k_a].to_vec()),
            ParameterNames::Explicit(letters[k_a..k_a + k_b].to_vec()),
        )
    } else {
        (ParameterNames::tagged("A"), ParameterNames::tagged("B"))
    }
}

pub fn symbolic_product<T: Field>(a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>) -> Result<SymbolicProduct<T>, T> {
    let fa = OneInverseFamily::new(a);
    let fb = OneInverseFamily::new(b);
    let (na, nb) = default_names(fa.parameter_count(), fb.parameter_count());
    symbolic_product_named(a, b, c, &na, &nb)
}

pub fn symbolic_product_named<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    names_a: &ParameterNames,
    names_b: &ParameterNames,
) -> Result<SymbolicProduct<T>, T> {
    let mut symbols = Symbols::new();
    let left = OneInverseFamily::new(a).symbolic(names_a, &mut symbols)?;
    let right = OneInverseFamily::new(b).symbolic(names_b, &mut symbols)?;
    if c.rows() != a.rows() || c.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            op: "A⁽¹⁾·C·B⁽¹⁾",
            left: crate::Shape(a.rows(), b.cols()),
            right: c.shape(),
        });
    }
    let matrix = &(&left.matrix * &constant_matrix(c)) * &right.matrix;
    Ok(SymbolicProduct {
        matrix,
        left: left.matrix,
        right: right.matrix,
        alpha: left.parameters,
        beta: right.parameters,
    })
}

/// Why an equation in a proof holds (as `poly = 0`).
#[derive(Debug, Clone, PartialEq)]
pub enum Reason<T> {
    /// Entry `(row, col)` (1-based) of the system `X0(α, β) − X`.
    Given { row: usize, col: usize },
    /// `Σ coefficient · equation[index]`.
    Combination(Vec<(T, usize)>),
    /// `equation[target]` with `var` replaced using `equation[using]`, which
    /// has the form `var + rest` with `var` absent from `rest`.
    Substitution { target: usize, var: Variable, using: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProofStep<T> {
    pub equation: Poly<T>,
    pub reason: Reason<T>,
}

/// Linear consequences of the system ending in a nonzero constant.
#[derive(Debug, Clone, PartialEq)]
pub struct InfeasibilityProof<T> {
    pub steps: Vec<ProofStep<T>>,
}

impl<T: Field> InfeasibilityProof<T> {
    /// The nonzero constant `k` of the final equation `k = 0`.
    pub fn contradiction(&self) -> Option<T> {
        self.steps
            .last()
            .and_then(|s| s.equation.constant_value())
            .filter(|k| !k.is_zero())
    }

    /// Re-derives every step against `system` and checks the final constant.
    pub fn replay(&self, system: &SymMatrix<T>) -> bool {
        for (k, step) in self.steps.iter().enumerate() {
            let expected = match &step.reason {
                Reason::Given { row, col } => {
                    if *row == 0 || *col == 0 || *row > system.rows() || *col > system.cols() {
                        return false;
                    }
                    system.get(*row, *col).clone()
                }
                Reason::Combination(terms) => {
                    if terms.iter().any(|(_, i)| *i >= k) {
                        return false;
                    }
                    terms.iter().fold(Poly::constant(T::zero()), |acc, (coef, i)| {
                        acc + self.steps[*i].equation.scale(coef)
                    })
                }
                Reason::Substitution { target, var, using } => {
                    if *target >= k || *using >= k {
                        return false;
                    }
                    let Some(rest) = definition_rest(&self.steps[*using].equation, var) else {
                        return false;
                    };
                    self.steps[*target].equation.substitute(var, &-rest)
                }
            };
            if expected != step.equation {
                return false;
            }
        }
        self.contradiction().is_some()
    }
}

/// For `p = var + rest` with `var` not in `rest`, returns `rest`.
fn definition_rest<T: Field>(p: &Poly<T>, var: &Variable) -> Option<Poly<T>> {
    let lead = Monomial::of(var);
    if !p.coefficient(&lead).is_one() {
        return None;
    }
    let rest = p.clone() - Poly::var(var);
    (!rest.variables().contains(var)).then_some(rest)
}

/// Parameter values reproducing `X` together with the numeric inverses.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness<T> {
    pub assignment: Assignment<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
}

impl<T: Field> Witness<T> {
    /// `G_A ∈ A{1}`, `G_B ∈ B{1}` and `G_A·C·G_B = X`.
    pub fn verify(&self, a: &Matrix<T>, b: &Matrix<T>, c: &Matrix<T>, x: &Matrix<T>) -> bool {
        is_one_inverse(a, &self.left).unwrap_or(false)
            && is_one_inverse(b, &self.right).unwrap_or(false)
            && self
                .left
                .checked_mul(c)
                .and_then(|lc| lc.checked_mul(&self.right))
                .is_ok_and(|p| p == *x)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RepresentabilityVerdict<T> {
    Witness(Witness<T>),
    ProvenInfeasible(InfeasibilityProof<T>),
    Unknown(String),
}

impl<T> RepresentabilityVerdict<T> {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Witness(_) => "Witness",
            Self::ProvenInfeasible(_) => "ProvenInfeasible",
            Self::Unknown(_) => "Unknown",
        }
    }
}

/// Limits and seed for the alternating search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeBudget {
    /// Sampled points per parameter group.
    pub samples: usize,
    /// Bound on numerator and denominator of sampled rationals.
    pub height: i64,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 20_110_517;

impl Default for ProbeBudget {
    fn default() -> Self {
        Self {
            samples: 32,
            height: 5,
            seed: DEFAULT_SEED,
        }
    }
}

/// Everything a probe computed, so callers can replay or render it.
#[derive(Debug, Clone)]
pub struct Probe<T> {
    pub product: SymbolicProduct<T>,
    /// `X0(α, β) − X`.
    pub system: SymMatrix<T>,
    pub verdict: RepresentabilityVerdict<T>,
}

pub fn representability_probe<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    x: &Matrix<T>,
    budget: ProbeBudget,
) -> Result<Probe<T>, T> {
    let product = symbolic_product(a, b, c)?;
    probe_with_product(a, b, c, x, product, budget)
}

pub fn probe_with_product<T: Field>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    x: &Matrix<T>,
    product: SymbolicProduct<T>,
    budget: ProbeBudget,
) -> Result<Probe<T>, T> {
    let residual = solution_residual(a, b, c, x)?;
    if !residual.is_zero() {
        return Err(Error::NotASolution { residual });
    }
    if !product.is_bilinear() {
        return Err(Error::NotBilinear);
    }
    let system = product
        .matrix
        .checked_sub(&constant_matrix(x))
        .map_err(|_| Error::DimensionMismatch {
            op: "A⁽¹⁾·C·B⁽¹⁾ − X",
            left: product.matrix.shape(),
            right: x.shape(),
        })?;
    let verdict = Eliminator::new(&system).run(a, b, c, x, &product, budget);
    Ok(Probe {
        product,
        system,
        verdict,
    })
}

struct Eliminator<T> {
    steps: Vec<ProofStep<T>>,
    active: Vec<usize>,
    definitions: Vec<(Variable, Poly<T>)>,
}

enum Stage {
    Contradiction(usize),
    Stalled,
    Exhausted,
    Continue,
}

impl<T: Field> Eliminator<T> {
    fn new(system: &SymMatrix<T>) -> Self {
        let mut steps = Vec::new();
        for row in 1..=system.rows() {
            for col in 1..=system.cols() {
                let equation = system.get(row, col).clone();
                if !equation.is_zero() {
                    steps.push(ProofStep {
                        equation,
                        reason: Reason::Given { row, col },
                    });
                }
            }
        }
        let active = (0..steps.len()).collect();
        Self {
            steps,
            active,
            definitions: Vec::new(),
        }
    }

    fn push(&mut self, equation: Poly<T>, reason: Reason<T>) -> usize {
        self.steps.push(ProofStep { equation, reason });
        self.steps.len() - 1
    }

    fn run(
        mut self,
        a: &Matrix<T>,
        b: &Matrix<T>,
        c: &Matrix<T>,
        x: &Matrix<T>,
        product: &SymbolicProduct<T>,
        budget: ProbeBudget,
    ) -> RepresentabilityVerdict<T> {
        loop {
            match self.round() {
                Stage::Contradiction(k) => return RepresentabilityVerdict::ProvenInfeasible(self.proof_of(k)),
                Stage::Exhausted => {
                    let values = self.back_substitute(Assignment::new(), product);
                    return match witness_from(values, a, b, c, x, product) {
                        Some(w) => RepresentabilityVerdict::Witness(w),
                        None => RepresentabilityVerdict::Unknown(
                            "elimination emptied the system but the witness failed verification".into(),
                        ),
                    };
                }
                Stage::Stalled => break,
                Stage::Continue => {}
            }
        }
        self.alternate(a, b, c, x, product, budget)
    }

    /// One pass: solve the affine equations, substitute into the rest.
    fn round(&mut self) -> Stage {
        if let Some(&k) = self.active.iter().find(|&&k| is_contradiction(&self.steps[k].equation)) {
            return Stage::Contradiction(k);
        }
        if self.active.is_empty() {
            return Stage::Exhausted;
        }
        let (affine, residual): (Vec<usize>, Vec<usize>) =
            self.active.iter().partition(|&&k| self.steps[k].equation.is_affine());
        if affine.is_empty() {
            return Stage::Stalled;
        }

        let vars: Vec<Variable> = affine
            .iter()
            .flat_map(|&k| self.steps[k].equation.variables())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut coeffs = Matrix::<T>::zeros(affine.len(), vars.len());
        for (r, &k) in affine.iter().enumerate() {
            let (linear, _) = self.steps[k].equation.linear_parts().expect("affine");
            for (cidx, v) in vars.iter().enumerate() {
                if let Some(x) = linear.get(v) {
                    coeffs.set(r + 1, cidx + 1, x.clone());
                }
            }
        }
        let mut ops = Matrix::<T>::identity(affine.len());
        let pivots = reduce_rows(&mut coeffs, &mut ops);

        let mut pivot_rows = Vec::new();
        for r in 0..affine.len() {
            let terms: Vec<(T, usize)> = (0..affine.len())
                .filter(|&s| !ops.get(r + 1, s + 1).is_zero())
                .map(|s| (ops.get(r + 1, s + 1).clone(), affine[s]))
                .collect();
            let equation = terms.iter().fold(Poly::constant(T::zero()), |acc, (coef, k)| {
                acc + self.steps[*k].equation.scale(coef)
            });
            if r < pivots.len() {
                let k = self.push(equation, Reason::Combination(terms));
                pivot_rows.push((vars[pivots[r]].clone(), k));
            } else if !equation.is_zero() {
                let k = self.push(equation, Reason::Combination(terms));
                return Stage::Contradiction(k);
            }
        }

        let mut next = Vec::new();
        for k in residual {
            let mut current = k;
            for (var, using) in &pivot_rows {
                let eq = &self.steps[current].equation;
                if !eq.variables().contains(var) {
                    continue;
                }
                let rest = definition_rest(&self.steps[*using].equation, var).expect("reduced row");
                let substituted = eq.substitute(var, &-rest);
                current = self.push(
                    substituted,
                    Reason::Substitution {
                        target: current,
                        var: var.clone(),
                        using: *using,
                    },
                );
            }
            if !self.steps[current].equation.is_zero() {
                next.push(current);
            }
        }
        for (var, using) in &pivot_rows {
            let rest = definition_rest(&self.steps[*using].equation, var).expect("reduced row");
            self.definitions.push((var.clone(), -rest));
        }
        self.active = next;
        Stage::Continue
    }

    /// Steps reachable from `k`, renumbered in order.
    fn proof_of(&self, k: usize) -> InfeasibilityProof<T> {
        let mut needed = BTreeSet::new();
        let mut stack = vec![k];
        while let Some(s) = stack.pop() {
            if !needed.insert(s) {
                continue;
            }
            match &self.steps[s].reason {
                Reason::Given { .. } => {}
                Reason::Combination(terms) => stack.extend(terms.iter().map(|(_, i)| *i)),
                Reason::Substitution { target, using, .. } => stack.extend([*target, *using]),
            }
        }
        let renumber: BTreeMap<usize, usize> = needed.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let steps = needed
            .iter()
            .map(|&old| {
                let step = &self.steps[old];
                let reason = match &step.reason {
                    Reason::Given { row, col } => Reason::Given { row: *row, col: *col },
                    Reason::Combination(terms) => {
                        Reason::Combination(terms.iter().map(|(c, i)| (c.clone(), renumber[i])).collect())
                    }
                    Reason::Substitution { target, var, using } => Reason::Substitution {
                        target: renumber[target],
                        var: var.clone(),
                        using: renumber[using],
                    },
                };
                ProofStep {
                    equation: step.equation.clone(),
                    reason,
                }
            })
            .collect();
        InfeasibilityProof { steps }
    }

    /// Completes `values` (free parameters default to zero) and resolves
    /// eliminated parameters from their definitions, latest first.
    fn back_substitute(&self, mut values: Assignment<T>, product: &SymbolicProduct<T>) -> Assignment<T> {
        let defined: BTreeSet<&Variable> = self.definitions.iter().map(|(v, _)| v).collect();
        for v in product.alpha.iter().chain(&product.beta) {
            if !defined.contains(v) {
                values.entry(v.clone()).or_insert_with(T::zero);
            }
        }
        for (var, expr) in self.definitions.iter().rev() {
            let value = expr
                .evaluate(&values)
                .expect("definitions only mention resolved parameters");
            values.insert(var.clone(), value);
        }
        values
    }

    /// Fix one parameter group at sampled points and solve linearly for the
    /// other, alternating, within the budget.
    fn alternate(
        &self,
        a: &Matrix<T>,
        b: &Matrix<T>,
        c: &Matrix<T>,
        x: &Matrix<T>,
        product: &SymbolicProduct<T>,
        budget: ProbeBudget,
    ) -> RepresentabilityVerdict<T> {
        let remaining: BTreeSet<Variable> = self
            .active
            .iter()
            .flat_map(|&k| self.steps[k].equation.variables())
            .collect();
        let alpha: Vec<Variable> = product
            .alpha
            .iter()
            .filter(|v| remaining.contains(v))
            .cloned()
            .collect();
        let beta: Vec<Variable> = product.beta.iter().filter(|v| remaining.contains(v)).cloned().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        let height = budget.height.max(1);
        for attempt in 0..budget.samples {
            for fixed in [&beta, &alpha] {
                let sample: Assignment<T> = fixed
                    .iter()
                    .map(|v| {
                        let value = if attempt == 0 {
                            T::zero()
                        } else {
                            let num = T::from_int(rng.gen_range(-height..=height));
                            let den = T::from_int(rng.gen_range(1..=height));
                            num * den.try_inv().expect("positive")
                        };
                        (v.clone(), value)
                    })
                    .collect();
                let reduced: Vec<Poly<T>> = self
                    .active
                    .iter()
                    .map(|&k| self.steps[k].equation.partial_evaluate(&sample))
                    .collect();
                let Some(solved) = solve_affine(&reduced) else {
                    continue;
                };
                let mut values = sample;
                values.extend(solved);
                let values = self.back_substitute(values, product);
                if let Some(w) = witness_from(values, a, b, c, x, product) {
                    return RepresentabilityVerdict::Witness(w);
                }
            }
        }
        RepresentabilityVerdict::Unknown(format!(
            "{} bilinear equations remain after elimination; no witness within {} samples",
            self.active.len(),
            budget.samples
        ))
    }
}

fn is_contradiction<T: Field>(p: &Poly<T>) -> bool {
    p.constant_value().is_some_and(|k| !k.is_zero())
}

/// One solution of an affine system (free variables at zero), if consistent.
fn solve_affine<T: Field>(system: &[Poly<T>]) -> Option<Assignment<T>> {
    let mut vars = BTreeSet::new();
    let mut rows = Vec::new();
    for p in system {
        let (linear, constant) = p.linear_parts()?;
        vars.extend(linear.keys().cloned());
        rows.push((linear, constant));
    }
    let vars: Vec<Variable> = vars.into_iter().collect();
    let n = vars.len();
    let mut aug = Matrix::<T>::zeros(rows.len(), n + 1);
    for (r, (linear, constant)) in rows.iter().enumerate() {
        for (cidx, v) in vars.iter().enumerate() {
            if let Some(x) = linear.get(v) {
                aug.set(r + 1, cidx + 1, x.clone());
            }
        }
        aug.set(r + 1, n + 1, -constant.clone());
    }
    let mut sink = Matrix::<T>::zeros(rows.len(), 0);
    let pivots = reduce_rows(&mut aug, &mut sink);
    if pivots.contains(&n) {
        return None;
    }
    let mut values: Assignment<T> = vars.iter().map(|v| (v.clone(), T::zero())).collect();
    for (r, &p) in pivots.iter().enumerate() {
        values.insert(vars[p].clone(), aug.get(r + 1, n + 1).clone());
    }
    Some(values)
}

fn witness_from<T: Field>(
    values: Assignment<T>,
    a: &Matrix<T>,
    b: &Matrix<T>,
    c: &Matrix<T>,
    x: &Matrix<T>,
    product: &SymbolicProduct<T>,
) -> Option<Witness<T>> {
    let (left, right) = product.instantiate(&values).ok()?;
    let witness = Witness {
        assignment: values,
        left,
        right,
    };
    witness.verify(a, b, c, x).then_some(witness)
}

/// `lhs = rhs` with the constant moved to the right, e.g. `-3cg-dg = 1`.
pub fn render_equation<T: Field>(p: &Poly<T>) -> String {
    let constant = p.coefficient(&Monomial::one());
    let lhs = p.clone() - Poly::constant(constant.clone());
    format!("{lhs} = {}", -constant)
}

impl<T: Field> fmt::Display for ProofStep<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eq = render_equation(&self.equation);
        match &self.reason {
            Reason::Given { row, col } => write!(f, "{eq}    [entry ({row},{col})]"),
            Reason::Combination(terms) => {
                let parts: Vec<String> = terms.iter().map(|(c, i)| format!("{c}·[{}]", i + 1)).collect();
                write!(f, "{eq}    [{}]", parts.join(" + "))
            }
            Reason::Substitution { target, var, using } => {
                write!(f, "{eq}    [[{}] with {var} from [{}]]", target + 1, using + 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactMatrix, GaussianRational as G};

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

    #[test]
    fn x1_is_proven_infeasible() {
        let (a, b, c) = example();
        let x1 = m(&[&[-7, 1, 1], &[-1, 0, 0], &[0, 1, 1]]);
        let probe = representability_probe(&a, &b, &c, &x1, ProbeBudget::default()).unwrap();
        let RepresentabilityVerdict::ProvenInfeasible(proof) = &probe.verdict else {
            panic!("expected a proof, got {:?}", probe.verdict.label());
        };
        assert!(proof.replay(&probe.system));
        assert!(proof.contradiction().is_some());
    }

    #[test]
    fn canonical_product_has_zero_witness() {
        let (a, b, c) = example();
        let x = &(&crate::oneinv::canonical_one_inverse(&a) * &c) * &crate::oneinv::canonical_one_inverse(&b);
        let probe = representability_probe(&a, &b, &c, &x, ProbeBudget::default()).unwrap();
        let RepresentabilityVerdict::Witness(w) = &probe.verdict else {
            panic!("expected a witness");
        };
        assert!(w.verify(&a, &b, &c, &x));
        assert!(w.assignment.values().all(|v| *v == G::from(0)));
    }

    #[test]
    fn non_solution_is_rejected() {
        let (a, b, c) = example();
        let err = representability_probe(&a, &b, &c, &ExactMatrix::zeros(3, 3), ProbeBudget::default()).unwrap_err();
        assert!(matches!(err, Error::NotASolution { .. }));
    }

    #[test]
    fn identity_product_is_constant() {
        let i = ExactMatrix::identity(2);
        let p = symbolic_product(&i, &i, &i).unwrap();
        assert_eq!(p.matrix, constant_matrix(&i));
    }

    #[test]
    fn tampered_proof_fails_replay() {
        let (a, b, c) = example();
        let x1 = m(&[&[-7, 1, 1], &[-1, 0, 0], &[0, 1, 1]]);
        let probe = representability_probe(&a, &b, &c, &x1, ProbeBudget::default()).unwrap();
        let RepresentabilityVerdict::ProvenInfeasible(mut proof) = probe.verdict else {
            panic!()
        };
        let last = proof.steps.len() - 1;
        proof.steps[last].equation = Poly::constant(G::from(5));
        assert!(!proof.replay(&probe.system));
    }

    #[test]
    fn equations_render_with_constant_on_the_right() {
        let mut s = Symbols::new();
        let g = Poly::var(&s.fresh::<G>("g").unwrap());
        assert_eq!(render_equation(&g), "g = 0");
        assert_eq!(render_equation(&Poly::constant(G::from(-1))), "0 = 1");
        assert_eq!(render_equation(&(g + Poly::constant(G::from(2)))), "g = -2");
    }
}
