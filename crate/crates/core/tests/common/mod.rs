#![allow(dead_code)]

use ginv::{ExactMatrix, ExactPoly, ExactSymMatrix, GaussianRational, Rational, Symbols};
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type G = GaussianRational;

pub fn m(rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| G::from(x)).collect()).collect())
}

/// A, B, C and the non-representable solution X1 of the worked example.
pub fn worked_example() -> (ExactMatrix, ExactMatrix, ExactMatrix, ExactMatrix) {
    (
        m(&[&[1, 2, 1], &[0, 1, 0], &[1, 1, 1]]),
        m(&[&[1, 1], &[1, 1], &[2, 2]]),
        m(&[&[-3, -3], &[-1, -1], &[-2, -2]]),
        m(&[&[-7, 1, 1], &[-1, 0, 0], &[0, 1, 1]]),
    )
}

/// Parses sums of terms like `-3cg`, `+2h`, `1`, where every letter is a
/// single-character variable looked up in (or added to) `symbols`.
pub fn poly(text: &str, symbols: &mut Symbols) -> ExactPoly {
    let mut total = ExactPoly::zero();
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut k = 0;
    while k < chars.len() {
        let mut sign = 1i64;
        if chars[k] == '+' || chars[k] == '-' {
            if chars[k] == '-' {
                sign = -1;
            }
            k += 1;
        }
        let start = k;
        while k < chars.len() && chars[k].is_ascii_digit() {
            k += 1;
        }
        let coeff: i64 = if k > start {
            chars[start..k].iter().collect::<String>().parse().unwrap()
        } else {
            1
        };
        let mut term = ExactPoly::constant(G::from(sign * coeff));
        while k < chars.len() && chars[k].is_ascii_alphabetic() {
            let name = chars[k].to_string();
            let var = match symbols.lookup(&name) {
                Some(v) => v.clone(),
                None => symbols.fresh::<G>(&name).unwrap(),
            };
            term = term * ExactPoly::var(&var);
            k += 1;
        }
        total = total + term;
    }
    total
}

pub fn sym(rows: &[&[&str]], symbols: &mut Symbols) -> ExactSymMatrix {
    ExactSymMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|t| poly(t, symbols)).collect())
            .collect(),
    )
}

pub fn small<R: Rng>(rng: &mut R, height: i64) -> G {
    let num = rng.gen_range(-height..=height);
    let den = rng.gen_range(1..=height.max(1));
    G::ratio(num, den)
}

pub fn small_complex<R: Rng>(rng: &mut R, height: i64) -> G {
    &small(rng, height) + &(&small(rng, height) * &G::i())
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, height: i64) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| small(rng, height))
}

/// A rows×cols matrix of rank exactly `target`, built as a product of
/// random factors and retried until the oracle agrees on the rank.
pub fn random_with_rank<R: Rng>(rng: &mut R, rows: usize, cols: usize, target: usize) -> ExactMatrix {
    loop {
        let l = random_matrix(rng, rows, target, 3);
        let r = random_matrix(rng, target, cols, 3);
        let a = if target == 0 {
            ExactMatrix::zeros(rows, cols)
        } else {
            &l * &r
        };
        if oracle::rank(&a) == target {
            return a;
        }
    }
}

/// Textbook elimination over Q(i), written independently of the library.
pub mod oracle {
    use super::*;

    type Row = Vec<G>;

    fn rows_of(a: &ExactMatrix) -> Vec<Row> {
        a.row_slices().map(|r| r.to_vec()).collect()
    }

    fn is_zero(x: &G) -> bool {
        x.re().is_zero() && x.im().is_zero()
    }

    fn div(x: &G, y: &G) -> G {
        // (a+bi)/(c+di) = (a+bi)(c-di)/(c²+d²)
        let n: Rational = y.re() * y.re() + y.im() * y.im();
        let re = (x.re() * y.re() + x.im() * y.im()) / &n;
        let im = (x.im() * y.re() - x.re() * y.im()) / &n;
        G::new(re, im)
    }

    /// Reduced row echelon form and pivot columns. The pivot is the entry
    /// with the largest `|re| + |im|`, unlike the library's topmost rule.
    pub fn rref(rows: &mut [Row], cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows.len() {
                break;
            }
            let best = (r..rows.len()).filter(|&i| !is_zero(&rows[i][c])).max_by(|&i, &j| {
                let (x, y) = (&rows[i][c], &rows[j][c]);
                (x.re().abs() + x.im().abs())
                    .cmp(&(y.re().abs() + y.im().abs()))
                    .then(j.cmp(&i))
            });
            let Some(p) = best else { continue };
            rows.swap(r, p);
            let pv = rows[r][c].clone();
            for x in rows[r].iter_mut() {
                *x = div(x, &pv);
            }
            for i in 0..rows.len() {
                if i != r && !is_zero(&rows[i][c]) {
                    let f = rows[i][c].clone();
                    let pivot_row = rows[r].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(a: &ExactMatrix) -> usize {
        let mut rows = rows_of(a);
        rref(&mut rows, a.cols()).len()
    }

    /// Solves `A·x = c` for a column `c`: a particular solution and a
    /// null-space basis (as columns), or `None` when inconsistent.
    pub fn solve(a: &ExactMatrix, c: &ExactMatrix) -> Option<(ExactMatrix, ExactMatrix)> {
        let n = a.cols();
        let mut rows: Vec<Row> = rows_of(a)
            .into_iter()
            .zip(c.entries().iter())
            .map(|(mut r, x)| {
                r.push(x.clone());
                r
            })
            .collect();
        let pivots = rref(&mut rows, n + 1);
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut particular = vec![G::zero(); n];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = rows[r][n].clone();
        }
        let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let mut basis = ExactMatrix::zeros(n, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f + 1, k + 1, G::one());
            for (r, &p) in pivots.iter().enumerate() {
                basis.set(p + 1, k + 1, -rows[r][f].clone());
            }
        }
        Some((ExactMatrix::column(particular), basis))
    }
}
