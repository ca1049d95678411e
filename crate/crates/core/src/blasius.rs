//! Homotopy perturbation series for the Blasius boundary layer.
//!
//! The similarity profile satisfies `f''' + f f'' / 2 = 0` with
//! `f(0) = f'(0) = 0` and `f'(inf) = 1`. The series starts from the two-term
//! Taylor guess `F_0 = (alpha / 2) eta^2`, where `alpha = f''(0)` is supplied
//! by the caller, and each higher order solves
//!
//! ```text
//! F_n''' = -1/2 * sum_{k=0}^{n-1} F_k F_{n-1-k}''
//! ```
//!
//! by triple integration with zero constants, so `F_n(0) = F_n'(0) = F_n''(0) = 0`
//! for `n >= 1`. Every `F_n` is a single monomial of degree `3n + 2`.

use crate::engine::{hpm_solve, HpmProblem};
use crate::error::{contract, domain, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::MAX_ORDER;

/// Wall curvature `f''(0)` used when no shooting result is injected.
pub const TABULATED_ALPHA: f64 = 0.332057;

/// Evaluation range beyond which the truncated series is not trusted.
pub const TRUSTED_ETA_MAX: f64 = 4.0;

/// The Blasius HPM problem for a given wall curvature.
#[derive(Debug, Clone, Copy)]
pub struct BlasiusProblem<T> {
    alpha: T,
}

impl<T: Scalar> BlasiusProblem<T> {
    pub fn new(alpha: T) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }
}

fn check_alpha<T: Scalar>(alpha: T) -> Result<()> {
    if !alpha.is_finite() || alpha <= T::zero() {
        return Err(domain(format!("wall curvature must be positive and finite, got {alpha}")));
    }
    Ok(())
}

impl<T: Scalar> HpmProblem for BlasiusProblem<T> {
    type Term = Polynomial<T>;

    fn name(&self) -> &str {
        "blasius"
    }

    fn order_zero(&self) -> Result<Polynomial<T>> {
        blasius_order_zero(self.alpha)
    }

    fn rhs_at_order(&self, n: usize, prev: &[Polynomial<T>]) -> Result<Polynomial<T>> {
        blasius_rhs(prev, n)
    }

    fn invert_linear(&self, rhs: Polynomial<T>) -> Polynomial<T> {
        rhs.integrate().integrate().integrate()
    }
}

/// `(alpha / 2) eta^2`
pub fn blasius_order_zero<T: Scalar>(alpha: T) -> Result<Polynomial<T>> {
    check_alpha(alpha)?;
    Ok(Polynomial::monomial(alpha * T::half(), 2))
}

/// `-1/2 * sum_{k<n} F_k F_{n-1-k}''`; `prev` must hold exactly orders `0..n`.
pub fn blasius_rhs<T: Scalar>(prev: &[Polynomial<T>], n: usize) -> Result<Polynomial<T>> {
    if n == 0 {
        return Err(contract("blasius right-hand side is defined for n >= 1"));
    }
    if prev.len() != n {
        return Err(contract(format!(
            "blasius rhs at order {n} needs {n} previous terms, got {}",
            prev.len()
        )));
    }
    let second: Vec<_> = prev.iter().map(|p| p.diff().diff()).collect();
    let sum = (0..n).fold(Polynomial::zero(), |acc, k| acc + &prev[k] * &second[n - 1 - k]);
    Ok(sum.scale(-T::half()))
}

/// Truncated series `F_0 ... F_N` for a given wall curvature.
#[derive(Debug, Clone, PartialEq)]
pub struct BlasiusSeries<T> {
    pub alpha: T,
    pub terms: Vec<Polynomial<T>>,
}

/// One row of the coefficient table: `F_n = coefficient * eta^degree`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonomialTerm<T> {
    pub order: usize,
    pub degree: usize,
    pub coefficient: T,
}

/// Profile value and its first two derivatives at one `eta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfilePoint<T> {
    pub f: T,
    pub fp: T,
    pub fpp: T,
}

/// Runs the cascade up to `order` (at most [`MAX_ORDER`]).
pub fn blasius_series<T: Scalar>(alpha: T, order: usize) -> Result<BlasiusSeries<T>> {
    if order > MAX_ORDER {
        return Err(domain(format!("order {order} exceeds the supported maximum {MAX_ORDER}")));
    }
    let problem = BlasiusProblem::new(alpha)?;
    let series = hpm_solve(&problem, order)?;
    Ok(BlasiusSeries { alpha, terms: series.terms })
}

impl<T: Scalar> BlasiusSeries<T> {
    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    /// Partial sum at `p = 1`.
    pub fn assembled(&self) -> Polynomial<T> {
        self.terms.iter().fold(Polynomial::zero(), |acc, t| acc + t)
    }

    /// The monomial `(order, degree, coefficient)` of each term.
    pub fn coefficients(&self) -> Vec<MonomialTerm<T>> {
        self.terms
            .iter()
            .enumerate()
            .map(|(order, p)| {
                let (coefficient, degree) = p.as_monomial().unwrap_or((T::zero(), 3 * order + 2));
                MonomialTerm { order, degree, coefficient }
            })
            .collect()
    }

    /// `f`, `f'`, `f''` of the assembled series at `eta >= 0`.
    pub fn eval(&self, eta: T) -> Result<ProfilePoint<T>> {
        if !eta.is_finite() || eta < T::zero() {
            return Err(domain(format!("eta must be finite and non-negative, got {eta}")));
        }
        let f = self.assembled();
        let fp = f.diff();
        let fpp = fp.diff();
        Ok(ProfilePoint { f: f.eval(eta)?, fp: fp.eval(eta)?, fpp: fpp.eval(eta)? })
    }

    /// `f''' + f f'' / 2` of the assembled series.
    pub fn residual(&self) -> Polynomial<T> {
        let f = self.assembled();
        let fpp = f.diff().diff();
        &fpp.diff() + &(&f * &fpp).scale(T::half())
    }
}
