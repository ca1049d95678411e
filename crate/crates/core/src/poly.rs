//! Dense univariate polynomials.
//!
//! A [`Polynomial`] stores `coeffs[i]` as the coefficient of `x^i`. The
//! representation is kept canonical: the highest stored coefficient is never
//! an exact zero, and the zero polynomial has no coefficients at all.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{domain, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Default)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `coef * x^degree`
    pub fn monomial(coef: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = coef;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).copied().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Returns `(coefficient, degree)` when exactly one coefficient is nonzero.
    pub fn as_monomial(&self) -> Option<(T, usize)> {
        let mut nonzero = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (deg, c) = nonzero.next()?;
        match nonzero.next() {
            None => Some((*c, deg)),
            Some(_) => None,
        }
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Term-wise derivative.
    pub fn diff(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * T::from_count(i))
                .collect(),
        )
    }

    /// Antiderivative with zero constant of integration.
    pub fn integrate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| c / T::from_count(i + 1)),
        );
        Self::new(coeffs)
    }

    /// Horner evaluation. Rejects non-finite abscissae.
    pub fn eval(&self, x: T) -> Result<T> {
        if !x.is_finite() {
            return Err(domain(format!("polynomial evaluated at non-finite x = {x}")));
        }
        Ok(self.horner(x))
    }

    pub(crate) fn horner(&self, x: T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * x + c)
    }

    /// Coefficient-wise comparison with an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| (self.coeff(i) - other.coeff(i)).abs() <= tol)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(T, T) -> T) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| op(self.coeff(i), other.coeff(i))).collect())
    }

    fn convolve(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Self::new(out)
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " {} ", if c.is_sign_negative() { '-' } else { '+' })?;
            } else if c.is_sign_negative() {
                write!(f, "-")?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag:e}")?,
                1 => write!(f, "{mag:e}*x")?,
                _ => write!(f, "{mag:e}*x^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<T: Scalar> $tr<&Polynomial<T>> for &Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                $body(self, rhs)
            }
        }
        impl<T: Scalar> $tr<&Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                $body(&self, rhs)
            }
        }
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $method(self, rhs: Polynomial<T>) -> Polynomial<T> {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Polynomial<T>, b: &Polynomial<T>| a.zip_with(b, |x, y| x + y));
forward_binop!(Sub, sub, |a: &Polynomial<T>, b: &Polynomial<T>| a.zip_with(b, |x, y| x - y));
forward_binop!(Mul, mul, |a: &Polynomial<T>, b: &Polynomial<T>| a.convolve(b));

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        self.scale(-T::one())
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}
