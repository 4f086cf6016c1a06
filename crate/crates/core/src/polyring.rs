//! Dense univariate polynomials in `k` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial `c0 + c1*k + c2*k^2 + ...`.
///
/// The coefficient vector is kept canonical: it is either empty (the zero
/// polynomial) or its last entry is nonzero, so derived equality is
/// polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `k - 1`, the polynomial that shows up everywhere in this crate.
    pub fn k_minus_one() -> Self {
        Self::from_i64s(&[-1, 1])
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `k^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `k (k-1) ... (k-n+1)`.
    pub fn falling_factorial(n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, i| {
            acc * Self::from_coeffs(vec![-BigInt::from(i), BigInt::one()])
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by `k^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Self {
        let c = c.into();
        Self::from_coeffs(self.coeffs.iter().map(|a| a * &c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Exact division over the integers.
    ///
    /// Fails with [`Error::Inexact`] carrying the remainder at the point the
    /// long division stopped, either because the remainder's degree dropped
    /// below the divisor's or a leading coefficient did not divide.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Precondition("division by the zero polynomial".into()));
        };
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if rem.is_empty() {
                Ok(Self::zero())
            } else {
                Err(Error::Inexact { remainder: self.clone() })
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                rem.truncate(i + dd + 1);
                return Err(Error::Inexact { remainder: Self::from_coeffs(rem) });
            }
            let q = top / lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        let rem = Self::from_coeffs(rem);
        if rem.is_zero() {
            Ok(Self::from_coeffs(quot))
        } else {
            Err(Error::Inexact { remainder: rem })
        }
    }

    /// Ascending coefficient list, e.g. `[0, 2, -3, 1]`; `[]` for zero.
    pub fn to_coeff_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for IntPoly {
    /// Human-readable form with descending powers, e.g. `k^3 - 3*k^2 + 2*k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                1 if unit => f.write_str("k")?,
                1 => write!(f, "{abs}*k")?,
                _ if unit => write!(f, "k^{i}")?,
                _ => write!(f, "{abs}*k^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = IntPoly::from_coeffs(trimmed);
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = IntPoly::from_coeffs(trimmed);
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { (&self).$m(&rhs) }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly { (&self).$m(rhs) }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}
