//! Exact complex scalars with rational real and imaginary parts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};
use thiserror::Error;

use crate::field::Field;

/// Reduced fraction of arbitrary-precision integers; the denominator is kept
/// positive and zero is `0/1`.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar {text:?} at column {}: {message}", .position + 1)]
pub struct ParseScalarError {
    pub text: String,
    /// Byte offset into `text` where parsing stopped.
    pub position: usize,
    pub message: String,
}

/// An element of Q(i).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        Self::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
    }

    /// `num/den`, real. Panics when `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(Rational::new(num.into(), den.into()), Rational::zero())
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`, zero only for zero.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Components as `[re_num, re_den, im_num, im_den]`.
    pub fn parts(&self) -> [BigInt; 4] {
        [
            self.re.numer().clone(),
            self.re.denom().clone(),
            self.im.numer().clone(),
            self.im.denom().clone(),
        ]
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_integers(1, 0)
    }
}

impl FromPrimitive for GaussianRational {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Self::from_integers(n, 0))
    }

    fn from_u64(n: u64) -> Option<Self> {
        Some(Self::real(Rational::from_integer(n.into())))
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integers(n, 0)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl Field for GaussianRational {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_real() && rhs.is_real() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let magnitude = self.im.abs();
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if !self.re.is_zero() {
            write!(f, "{}{}", self.re, sign)?;
        } else if self.im.is_negative() {
            f.write_str("-")?;
        }
        if !magnitude.is_one() {
            write!(f, "{magnitude}")?;
        }
        f.write_str("i")
    }
}

/// Parses `re`, `re±im i`, `im i`, `i` and `-i`, where each part is
/// `[-]int[/int]` (the imaginary coefficient after `±` is unsigned and may be
/// omitted).
pub fn parse_scalar(text: &str) -> Result<GaussianRational, ParseScalarError> {
    Cursor {
        text,
        bytes: text.as_bytes(),
        pos: 0,
    }
    .scalar()
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn fail<T>(&self, message: &str) -> Result<T, ParseScalarError> {
        Err(ParseScalarError {
            text: self.text.to_string(),
            position: self.pos,
            message: message.to_string(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.bytes.len()
    }

    fn scalar(mut self) -> Result<GaussianRational, ParseScalarError> {
        if self.at_end() {
            return self.fail("empty scalar");
        }
        let negative = self.eat(b'-');
        if self.eat(b'i') {
            return self.finish(GaussianRational::from_integers(0, if negative { -1 } else { 1 }));
        }
        let mut re = self.unsigned_rational()?;
        if negative {
            re = -re;
        }
        if self.at_end() {
            return Ok(GaussianRational::real(re));
        }
        if self.eat(b'i') {
            return self.finish(GaussianRational::new(Rational::zero(), re));
        }
        let im_negative = match self.peek() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => return self.fail("expected '+', '-' or 'i'"),
        };
        self.pos += 1;
        let mut im = if self.peek() == Some(b'i') {
            Rational::one()
        } else {
            self.unsigned_rational()?
        };
        if im_negative {
            im = -im;
        }
        if !self.eat(b'i') {
            return self.fail("expected 'i' after imaginary part");
        }
        self.finish(GaussianRational::new(re, im))
    }

    fn finish(&self, value: GaussianRational) -> Result<GaussianRational, ParseScalarError> {
        if self.at_end() {
            Ok(value)
        } else {
            self.fail("unexpected trailing characters")
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseScalarError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.fail("expected digits");
        }
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    fn unsigned_rational(&mut self) -> Result<Rational, ParseScalarError> {
        let num = self.integer()?;
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(num));
        }
        let den_pos = self.pos;
        let den = self.integer()?;
        if den.is_zero() {
            self.pos = den_pos;
            return self.fail("zero denominator");
        }
        Ok(Rational::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_addition() {
        let sum = GaussianRational::ratio(1, 2) + GaussianRational::ratio(1, 3);
        assert_eq!(sum, GaussianRational::ratio(5, 6));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from(-1));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let x = GaussianRational::from_integers(1, 1);
        assert_eq!(x.inv().unwrap(), GaussianRational::new(q(1, 2), q(-1, 2)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let one = GaussianRational::one();
        assert_eq!(
            one.checked_div(&GaussianRational::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(GaussianRational::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn parses_grammar_cases() {
        assert_eq!(
            parse_scalar("3/2-1/3i").unwrap(),
            GaussianRational::new(q(3, 2), q(-1, 3))
        );
        assert_eq!(parse_scalar("-i").unwrap(), GaussianRational::from_integers(0, -1));
        assert_eq!(parse_scalar("0").unwrap(), GaussianRational::zero());
        assert_eq!(parse_scalar("i").unwrap(), GaussianRational::i());
        assert_eq!(parse_scalar("1+i").unwrap(), GaussianRational::from_integers(1, 1));
        assert_eq!(parse_scalar("-2/4").unwrap(), GaussianRational::ratio(-1, 2));
        assert_eq!(parse_scalar("-1/3i").unwrap(), GaussianRational::new(q(0, 1), q(-1, 3)));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse_scalar("1/0").unwrap_err();
        assert_eq!(err.position, 2);
        let err = parse_scalar("1+2").unwrap_err();
        assert_eq!(err.position, 3);
        let err = parse_scalar("1x").unwrap_err();
        assert_eq!(err.position, 1);
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("--1").is_err());
        assert!(parse_scalar("1+-2i").is_err());
        assert!(parse_scalar("ii").is_err());
    }

    #[test]
    fn renders_canonically() {
        let cases = [
            (GaussianRational::new(q(3, 2), q(-1, 3)), "3/2-1/3i"),
            (GaussianRational::from_integers(0, -1), "-i"),
            (GaussianRational::from_integers(0, 1), "i"),
            (GaussianRational::from_integers(0, 3), "3i"),
            (GaussianRational::from_integers(-2, 1), "-2+i"),
            (GaussianRational::zero(), "0"),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
        }
    }

    #[test]
    fn zero_is_canonical() {
        let z = GaussianRational::ratio(1, 3) - GaussianRational::ratio(2, 6);
        assert_eq!(z.parts()[1], BigInt::from(1));
        assert_eq!(z, GaussianRational::zero());
    }
}
