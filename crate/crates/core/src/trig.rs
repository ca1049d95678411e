//! Trigonometric series in `x` with polynomial-in-`t` coefficients.
//!
//! A [`TrigSeries`] represents
//!
//! ```text
//! S(x, t) = sum_k [ C_k(t) cos(k x) + S_k(t) sin(k x) ]
//! ```
//!
//! over a finite set of non-negative harmonics `k`. Products are expanded with
//! the product-to-sum identities, so the structure closes under multiplication
//! and differentiation in either variable.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{domain, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// One harmonic: `cos_part(t) cos(kx) + sin_part(t) sin(kx)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigTerm<T> {
    pub harmonic: u32,
    pub cos_part: Polynomial<T>,
    pub sin_part: Polynomial<T>,
}

impl<T: Scalar> TrigTerm<T> {
    fn is_empty(&self) -> bool {
        self.cos_part.is_zero() && self.sin_part.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrigSeries<T> {
    terms: BTreeMap<u32, TrigTerm<T>>,
}

impl<T: Scalar> TrigSeries<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// `p(t) * cos(k x)`
    pub fn cos(harmonic: u32, p: Polynomial<T>) -> Self {
        let mut s = Self::zero();
        s.accumulate(harmonic, p, Polynomial::zero());
        s
    }

    /// `p(t) * sin(k x)`; vanishes identically for `k = 0`.
    pub fn sin(harmonic: u32, p: Polynomial<T>) -> Self {
        let mut s = Self::zero();
        s.accumulate(harmonic, Polynomial::zero(), p);
        s
    }

    /// Polynomial in `t` with no `x` dependence.
    pub fn from_poly(p: Polynomial<T>) -> Self {
        Self::cos(0, p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, harmonic: u32) -> Option<&TrigTerm<T>> {
        self.terms.get(&harmonic)
    }

    /// Terms in ascending harmonic order.
    pub fn terms(&self) -> impl Iterator<Item = &TrigTerm<T>> {
        self.terms.values()
    }

    pub fn harmonics(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().copied()
    }

    pub fn max_harmonic(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Adds `cos_part cos(kx) + sin_part sin(kx)` in place, keeping canonical form.
    fn accumulate(&mut self, harmonic: u32, cos_part: Polynomial<T>, sin_part: Polynomial<T>) {
        // sin(0 x) = 0
        let sin_part = if harmonic == 0 { Polynomial::zero() } else { sin_part };
        if cos_part.is_zero() && sin_part.is_zero() {
            return;
        }
        let entry = self.terms.entry(harmonic).or_insert_with(|| TrigTerm {
            harmonic,
            cos_part: Polynomial::zero(),
            sin_part: Polynomial::zero(),
        });
        entry.cos_part = &entry.cos_part + &cos_part;
        entry.sin_part = &entry.sin_part + &sin_part;
        if entry.is_empty() {
            self.terms.remove(&harmonic);
        }
    }

    /// Adds `p cos(m x)` for signed `m`.
    fn accumulate_cos_signed(&mut self, m: i64, p: Polynomial<T>) {
        self.accumulate(m.unsigned_abs() as u32, p, Polynomial::zero());
    }

    /// Adds `p sin(m x)` for signed `m`, using `sin(-a) = -sin(a)`.
    fn accumulate_sin_signed(&mut self, m: i64, p: Polynomial<T>) {
        let p = if m < 0 { -p } else { p };
        self.accumulate(m.unsigned_abs() as u32, Polynomial::zero(), p);
    }

    fn map_parts(&self, f: impl Fn(&Polynomial<T>) -> Polynomial<T>) -> Self {
        let mut out = Self::zero();
        for term in self.terms.values() {
            out.accumulate(term.harmonic, f(&term.cos_part), f(&term.sin_part));
        }
        out
    }

    pub fn scale(&self, s: T) -> Self {
        self.map_parts(|p| p.scale(s))
    }

    /// Multiplies every part by a polynomial in `t`.
    pub fn mul_poly(&self, p: &Polynomial<T>) -> Self {
        self.map_parts(|q| q * p)
    }

    /// `d/dx`: `cos(kx) -> -k sin(kx)`, `sin(kx) -> k cos(kx)`.
    pub fn diff_x(&self) -> Self {
        let mut out = Self::zero();
        for term in self.terms.values() {
            let k = T::from_count(term.harmonic as usize);
            out.accumulate(term.harmonic, term.sin_part.scale(k), term.cos_part.scale(-k));
        }
        out
    }

    /// `d/dt` applied to every coefficient polynomial.
    pub fn diff_t(&self) -> Self {
        self.map_parts(Polynomial::diff)
    }

    /// Antiderivative in `t` with zero constant, so the result vanishes at `t = 0`.
    pub fn integrate_t(&self) -> Self {
        self.map_parts(Polynomial::integrate)
    }

    /// Evaluates the series. Rejects non-finite arguments.
    pub fn eval(&self, x: T, t: T) -> Result<T> {
        if !x.is_finite() || !t.is_finite() {
            return Err(domain(format!("trig series evaluated at non-finite (x, t) = ({x}, {t})")));
        }
        Ok(self.terms.values().fold(T::zero(), |acc, term| {
            let kx = T::from_count(term.harmonic as usize) * x;
            acc + term.cos_part.horner(t) * kx.cos() + term.sin_part.horner(t) * kx.sin()
        }))
    }

    /// Per-harmonic, per-coefficient comparison with an absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        let zero = Polynomial::zero();
        let keys: std::collections::BTreeSet<u32> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.into_iter().all(|k| {
            let (ac, as_) = self.parts(k, &zero);
            let (bc, bs) = other.parts(k, &zero);
            ac.approx_eq(bc, tol) && as_.approx_eq(bs, tol)
        })
    }

    fn parts<'a>(&'a self, k: u32, zero: &'a Polynomial<T>) -> (&'a Polynomial<T>, &'a Polynomial<T>) {
        self.terms
            .get(&k)
            .map_or((zero, zero), |t| (&t.cos_part, &t.sin_part))
    }

    /// Checks the canonical-form invariants.
    pub fn is_canonical(&self) -> bool {
        let canonical_poly = |p: &Polynomial<T>| p.coeffs().last().is_none_or(|c| !c.is_zero());
        self.terms.iter().all(|(&k, term)| {
            term.harmonic == k
                && !term.is_empty()
                && (k != 0 || term.sin_part.is_zero())
                && canonical_poly(&term.cos_part)
                && canonical_poly(&term.sin_part)
        })
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for term in other.terms.values() {
            out.accumulate(term.harmonic, term.cos_part.clone(), term.sin_part.clone());
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        let half = T::half();
        for a in self.terms.values() {
            for b in other.terms.values() {
                let j = a.harmonic as i64;
                let k = b.harmonic as i64;
                let cc = (&a.cos_part * &b.cos_part).scale(half);
                let ss = (&a.sin_part * &b.sin_part).scale(half);
                let sc = (&a.sin_part * &b.cos_part).scale(half);
                let cs = (&a.cos_part * &b.sin_part).scale(half);

                // cos a cos b = [cos(a-b) + cos(a+b)] / 2
                // sin a sin b = [cos(a-b) - cos(a+b)] / 2
                out.accumulate_cos_signed(j - k, &cc + &ss);
                out.accumulate_cos_signed(j + k, &cc - &ss);
                // sin a cos b = [sin(a+b) + sin(a-b)] / 2
                // cos a sin b = [sin(a+b) - sin(a-b)] / 2
                out.accumulate_sin_signed(j + k, &sc + &cs);
                out.accumulate_sin_signed(j - k, &sc - &cs);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<T: Scalar> $tr<&TrigSeries<T>> for &TrigSeries<T> {
            type Output = TrigSeries<T>;
            fn $method(self, rhs: &TrigSeries<T>) -> TrigSeries<T> {
                $body(self, rhs)
            }
        }
        impl<T: Scalar> $tr<&TrigSeries<T>> for TrigSeries<T> {
            type Output = TrigSeries<T>;
            fn $method(self, rhs: &TrigSeries<T>) -> TrigSeries<T> {
                $body(&self, rhs)
            }
        }
        impl<T: Scalar> $tr for TrigSeries<T> {
            type Output = TrigSeries<T>;
            fn $method(self, rhs: TrigSeries<T>) -> TrigSeries<T> {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &TrigSeries<T>, b: &TrigSeries<T>| a.add_ref(b));
forward_binop!(Sub, sub, |a: &TrigSeries<T>, b: &TrigSeries<T>| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &TrigSeries<T>, b: &TrigSeries<T>| a.mul_ref(b));

impl<T: Scalar> Neg for &TrigSeries<T> {
    type Output = TrigSeries<T>;
    fn neg(self) -> TrigSeries<T> {
        self.scale(-T::one())
    }
}

impl<T: Scalar> Neg for TrigSeries<T> {
    type Output = TrigSeries<T>;
    fn neg(self) -> TrigSeries<T> {
        -&self
    }
}
