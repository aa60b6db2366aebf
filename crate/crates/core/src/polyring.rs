//! Sparse multivariate polynomials and matrices of them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Ring};
use crate::matrix::Matrix;

/// A named indeterminate. Equality, ordering and hashing use the id only.
#[derive(Clone)]
pub struct Variable {
    id: u32,
    name: Arc<str>,
}

impl Variable {
    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl PartialEq for Variable {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Variable {}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.id.cmp(&other.id)
    }
}

impl std::hash::Hash for Variable {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.name, self.id)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Allocates variables with distinct ids and names for one computation.
#[derive(Debug, Clone, Default)]
pub struct Symbols {
    vars: Vec<Variable>,
}

impl Symbols {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fresh variable; names must be unique within this context.
    pub fn fresh<T: fmt::Debug + fmt::Display>(&mut self, name: &str) -> Result<Variable, T> {
        if self.vars.iter().any(|v| &*v.name == name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        let var = Variable {
            id: self.vars.len() as u32,
            name: Arc::from(name),
        };
        self.vars.push(var.clone());
        Ok(var)
    }

    pub fn lookup(&self, name: &str) -> Option<&Variable> {
        self.vars.iter().find(|v| &*v.name == name)
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }
}

/// Power product, sorted by variable id with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn of(var: &Variable) -> Self {
        Self(vec![(var.clone(), 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn exponent(&self, var: &Variable) -> u32 {
        self.0.iter().find(|(v, _)| v == var).map_or(0, |(_, e)| *e)
    }

    fn times(&self, other: &Self) -> Self {
        let mut merged: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in self.0.iter().chain(&other.0) {
            *merged.entry(v.clone()).or_default() += e;
        }
        Self(merged.into_iter().collect())
    }

    fn without(&self, var: &Variable) -> Self {
        Self(self.0.iter().filter(|(v, _)| v != var).cloned().collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded, then lexicographic on `(id, exponent)` pairs.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let lhs = self.0.iter().map(|(v, e)| (v.id, *e));
            let rhs = other.0.iter().map(|(v, e)| (v.id, *e));
            lhs.cmp(rhs)
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let short = self.0.iter().all(|(v, _)| v.name.chars().count() == 1);
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 && !short {
                f.write_str("*")?;
            }
            f.write_str(&v.name)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub type Assignment<T> = BTreeMap<Variable, T>;

/// Polynomial with no stored zero coefficients; zero is the empty map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Ring> Poly<T> {
    pub fn constant(c: T) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: &Variable) -> Self {
        Self::term(Monomial::of(v), T::one())
    }

    pub fn term(m: Monomial, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    fn accumulate(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree; zero for constants and for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest combined exponent of variables in `group` over all terms.
    pub fn degree_in(&self, group: &BTreeSet<Variable>) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0.iter().filter(|(v, _)| group.contains(v)).map(|(_, e)| e).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_affine(&self) -> bool {
        self.total_degree() <= 1
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<T> {
        self.is_constant().then(|| self.coefficient(&Monomial::one()))
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    /// Replaces every occurrence of `var` with `by`.
    pub fn substitute(&self, var: &Variable, by: &Poly<T>) -> Poly<T> {
        let mut out = Poly::zero();
        let mut powers: Vec<Poly<T>> = vec![Poly::one()];
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            if e == 0 {
                out.accumulate(m.clone(), c.clone());
                continue;
            }
            while powers.len() <= e {
                let next = powers.last().expect("nonempty").clone() * by.clone();
                powers.push(next);
            }
            let rest = Poly::term(m.without(var), c.clone());
            out = out + rest * powers[e].clone();
        }
        out
    }

    /// Substitutes the assigned variables, leaving the others symbolic.
    pub fn partial_evaluate(&self, values: &Assignment<T>) -> Poly<T> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for (v, e) in &m.0 {
                match values.get(v) {
                    Some(x) => {
                        for _ in 0..*e {
                            coeff = coeff * x.clone();
                        }
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            out.accumulate(Monomial(kept), coeff);
        }
        out
    }

    /// Degree ≤ 1 split into per-variable coefficients and the constant term.
    pub fn linear_parts(&self) -> Option<(BTreeMap<Variable, T>, T)> {
        if !self.is_affine() {
            return None;
        }
        let mut coeffs = BTreeMap::new();
        let mut constant = T::zero();
        for (m, c) in &self.terms {
            match m.0.as_slice() {
                [] => constant = c.clone(),
                [(v, 1)] => {
                    coeffs.insert(v.clone(), c.clone());
                }
                _ => unreachable!("affine"),
            }
        }
        Some((coeffs, constant))
    }

    pub fn scale(&self, k: &T) -> Poly<T> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.accumulate(m.clone(), k.clone() * c.clone());
        }
        out
    }
}

impl<T: Ring + fmt::Display> Poly<T> {
    pub fn evaluate(&self, values: &Assignment<T>) -> Result<T, T> {
        let mut total = T::zero();
        for (m, c) in &self.terms {
            let mut x = c.clone();
            for (v, e) in &m.0 {
                let value = values
                    .get(v)
                    .ok_or_else(|| Error::UnboundVariable(v.name.to_string()))?;
                for _ in 0..*e {
                    x = x * value.clone();
                }
            }
            total = total + x;
        }
        Ok(total)
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(mut self, rhs: Poly<T>) -> Poly<T> {
        for (m, c) in rhs.terms {
            self.accumulate(m, c);
        }
        self
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        self + (-rhs)
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.accumulate(ma.times(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Field> fmt::Display for Poly<T> {
    /// Constant first, then by ascending degree, e.g. `-1+3c+d-3cg`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let text = if m.is_one() {
                c.to_string()
            } else if c.is_one() {
                m.to_string()
            } else if (-c.clone()).is_one() {
                format!("-{m}")
            } else {
                let s = c.to_string();
                let tail = s.get(1..).unwrap_or("");
                if tail.contains(['+', '-']) || s.contains('i') {
                    format!("({s}){m}")
                } else {
                    format!("{s}{m}")
                }
            };
            if k > 0 && !text.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&text)?;
        }
        Ok(())
    }
}

/// Matrix of polynomial entries.
pub type SymMatrix<T> = Matrix<Poly<T>>;

/// Embeds a constant matrix.
pub fn constant_matrix<T: Field>(m: &Matrix<T>) -> SymMatrix<T> {
    m.map(|x| Poly::constant(x.clone()))
}

/// Evaluates every entry; fails on the first unbound variable.
pub fn evaluate_matrix<T: Field>(m: &SymMatrix<T>, values: &Assignment<T>) -> Result<Matrix<T>, T> {
    let entries = m
        .entries()
        .iter()
        .map(|p| p.evaluate(values))
        .collect::<Result<Vec<_>, T>>()?;
    Matrix::new(m.rows(), m.cols(), entries)
}

pub fn sym_matmul<T: Field>(a: &SymMatrix<T>, b: &SymMatrix<T>) -> Result<SymMatrix<T>, Poly<T>> {
    a.checked_mul(b)
}

/// Union of the variables of every entry.
pub fn matrix_variables<T: Field>(m: &SymMatrix<T>) -> BTreeSet<Variable> {
    m.entries().iter().flat_map(Poly::variables).collect()
}

/// Polynomials of total degree ≤ 1 versus the rest, order preserved.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSplit<T> {
    pub affine: Vec<Poly<T>>,
    pub residual: Vec<Poly<T>>,
}

pub fn affine_decompose<T: Ring>(system: &[Poly<T>]) -> AffineSplit<T> {
    let (affine, residual) = system.iter().cloned().partition(Poly::is_affine);
    AffineSplit { affine, residual }
}
