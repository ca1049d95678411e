//! Homotopy perturbation series for the one-dimensional coupled Burgers system
//!
//! ```text
//! u_t = u_xx + 2 u u_x - (u v)_x
//! v_t = v_xx + 2 v v_x - (u v)_x
//! ```
//!
//! with `u(x, 0) = v(x, 0) = cos x`. The linear part inverted at each order is
//! `d/dt` with zero initial data; everything else is pushed to the right-hand
//! side, so
//!
//! ```text
//! d/dt u_n = (u_{n-1})_xx + 2 sum_k u_k (u_{n-1-k})_x - sum_k (u_k v_{n-1-k})_x
//! ```
//!
//! and symmetrically for `v`. The exact solution is `cos x * exp(-t)` for both.

use std::marker::PhantomData;
use std::ops::Add;

use crate::engine::{hpm_solve, HpmProblem};
use crate::error::{contract, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::trig::TrigSeries;

/// Which unknown of the pair an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    U,
    V,
}

/// One order of the expansion: `(u_n, v_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldPair<T> {
    pub u: TrigSeries<T>,
    pub v: TrigSeries<T>,
}

impl<'a, T: Scalar> Add<&'a FieldPair<T>> for FieldPair<T> {
    type Output = FieldPair<T>;

    fn add(self, rhs: &'a FieldPair<T>) -> FieldPair<T> {
        FieldPair { u: self.u + &rhs.u, v: self.v + &rhs.v }
    }
}

/// `(cos x, cos x)`
pub fn burgers_initial<T: Scalar>() -> (TrigSeries<T>, TrigSeries<T>) {
    let c = TrigSeries::cos(1, Polynomial::constant(T::one()));
    (c.clone(), c)
}

/// Right-hand side of `d/dt w_n` for `w = u` or `w = v`. Both histories must
/// hold exactly the orders `0..n`.
pub fn burgers_rhs<T: Scalar>(
    prev_u: &[TrigSeries<T>],
    prev_v: &[TrigSeries<T>],
    n: usize,
    which: Component,
) -> Result<TrigSeries<T>> {
    if n == 0 {
        return Err(contract("burgers right-hand side is defined for n >= 1"));
    }
    if prev_u.len() != n || prev_v.len() != n {
        return Err(contract(format!(
            "burgers rhs at order {n} needs {n} previous terms, got u: {}, v: {}",
            prev_u.len(),
            prev_v.len()
        )));
    }
    let own = match which {
        Component::U => prev_u,
        Component::V => prev_v,
    };
    let m = n - 1;
    let own_x: Vec<_> = own.iter().map(TrigSeries::diff_x).collect();

    let mut self_advection = TrigSeries::zero();
    let mut coupling = TrigSeries::zero();
    for k in 0..=m {
        self_advection = self_advection + &(&own[k] * &own_x[m - k]);
        coupling = coupling + &(&prev_u[k] * &prev_v[m - k]);
    }
    let diffusion = own_x[m].diff_x();
    Ok(diffusion + &self_advection.scale(T::two()) - coupling.diff_x())
}

/// The coupled Burgers HPM problem with cosine initial data.
#[derive(Debug, Clone, Copy, Default)]
pub struct CoupledBurgers<T>(PhantomData<T>);

impl<T: Scalar> CoupledBurgers<T> {
    pub fn new() -> Self {
        Self(PhantomData)
    }
}

impl<T: Scalar> HpmProblem for CoupledBurgers<T> {
    type Term = FieldPair<T>;

    fn name(&self) -> &str {
        "burgers"
    }

    fn order_zero(&self) -> Result<FieldPair<T>> {
        let (u, v) = burgers_initial();
        Ok(FieldPair { u, v })
    }

    fn rhs_at_order(&self, n: usize, prev: &[FieldPair<T>]) -> Result<FieldPair<T>> {
        let us: Vec<_> = prev.iter().map(|p| p.u.clone()).collect();
        let vs: Vec<_> = prev.iter().map(|p| p.v.clone()).collect();
        Ok(FieldPair {
            u: burgers_rhs(&us, &vs, n, Component::U)?,
            v: burgers_rhs(&us, &vs, n, Component::V)?,
        })
    }

    fn invert_linear(&self, rhs: FieldPair<T>) -> FieldPair<T> {
        FieldPair { u: rhs.u.integrate_t(), v: rhs.v.integrate_t() }
    }
}

/// Truncated series `(u_0, v_0) ... (u_N, v_N)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BurgersSeries<T> {
    pub u_terms: Vec<TrigSeries<T>>,
    pub v_terms: Vec<TrigSeries<T>>,
}

pub fn burgers_series<T: Scalar>(order: usize) -> Result<BurgersSeries<T>> {
    let series = hpm_solve(&CoupledBurgers::<T>::new(), order)?;
    let (u_terms, v_terms) = series.terms.into_iter().map(|p| (p.u, p.v)).unzip();
    Ok(BurgersSeries { u_terms, v_terms })
}

/// `(cos x e^-t, cos x e^-t)`
pub fn burgers_exact<T: Scalar>(x: T, t: T) -> (T, T) {
    let w = x.cos() * (-t).exp();
    (w, w)
}

impl<T: Scalar> BurgersSeries<T> {
    pub fn order(&self) -> usize {
        self.u_terms.len() - 1
    }

    /// Partial sums `(U, V)` at `p = 1`.
    pub fn assembled(&self) -> (TrigSeries<T>, TrigSeries<T>) {
        let sum = |ts: &[TrigSeries<T>]| ts.iter().fold(TrigSeries::zero(), |acc, t| acc + t);
        (sum(&self.u_terms), sum(&self.v_terms))
    }

    /// Series truncated to its first `order + 1` terms.
    pub fn truncated(&self, order: usize) -> Self {
        let keep = (order + 1).min(self.u_terms.len());
        Self { u_terms: self.u_terms[..keep].to_vec(), v_terms: self.v_terms[..keep].to_vec() }
    }

    pub fn eval(&self, x: T, t: T) -> Result<(T, T)> {
        let (u, v) = self.assembled();
        Ok((u.eval(x, t)?, v.eval(x, t)?))
    }

    /// Symbolic residuals `(R_u, R_v)` of the assembled partial sums, with
    /// `R_w = w_t - w_xx - 2 w w_x + (u v)_x`.
    pub fn residual(&self) -> (TrigSeries<T>, TrigSeries<T>) {
        let (u, v) = self.assembled();
        let uv_x = (&u * &v).diff_x();
        let one = |w: &TrigSeries<T>| {
            let w_x = w.diff_x();
            w.diff_t() - &w_x.diff_x() - &(w * &w_x).scale(T::two()) + &uv_x
        };
        (one(&u), one(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    type S = TrigSeries<f64>;

    fn cos_t(coef: f64, power: usize) -> S {
        S::cos(1, Polynomial::monomial(coef, power))
    }

    #[test]
    fn initial_examples() {
        let (u, v) = burgers_initial::<f64>();
        assert_eq!(u, v);
        assert_eq!(u.eval(0.0, 0.0).unwrap(), 1.0);
        assert!((u.eval(PI, 0.0).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn rhs_first_order() {
        let (u0, v0) = burgers_initial::<f64>();
        let r = burgers_rhs(std::slice::from_ref(&u0), std::slice::from_ref(&v0), 1, Component::U).unwrap();
        assert!(r.approx_eq(&cos_t(-1.0, 0), 1e-15), "{r:?}");
        let rv = burgers_rhs(&[u0], &[v0], 1, Component::V).unwrap();
        assert_eq!(r, rv);
    }

    #[test]
    fn rhs_second_order() {
        let (u0, v0) = burgers_initial::<f64>();
        let u1 = cos_t(-1.0, 1);
        let r = burgers_rhs(&[u0, u1.clone()], &[v0, u1], 2, Component::U).unwrap();
        assert!(r.approx_eq(&cos_t(1.0, 1), 1e-15), "{r:?}");
        assert!(r.integrate_t().approx_eq(&cos_t(0.5, 2), 1e-15));
    }

    #[test]
    fn rhs_length_mismatch() {
        let (u0, v0) = burgers_initial::<f64>();
        assert!(burgers_rhs(std::slice::from_ref(&u0), &[], 1, Component::U).is_err());
        assert!(burgers_rhs(&[u0], &[v0], 2, Component::V).is_err());
    }

    #[test]
    fn series_examples() {
        let s = burgers_series::<f64>(3).unwrap();
        let expected = [1.0, -1.0, 0.5, -1.0 / 6.0];
        for (n, c) in expected.iter().enumerate() {
            assert!(s.u_terms[n].approx_eq(&cos_t(*c, n), 1e-15), "order {n}");
        }
        let s0 = burgers_series::<f64>(0).unwrap();
        assert_eq!(s0.u_terms.len(), 1);
        assert_eq!(s0.order(), 0);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(burgers_exact(0.0, 0.0), (1.0, 1.0));
        let (u, v) = burgers_exact(0.0f64, 1.0);
        assert!((u - 0.367879).abs() < 1e-6 && u == v);
        let (u, _) = burgers_exact(PI / 2.0, 3.0);
        assert!(u.abs() < 1e-16);
    }

    #[test]
    fn eval_examples() {
        let s = burgers_series::<f64>(3).unwrap();
        let (u, v) = s.eval(0.0, 1.0).unwrap();
        assert!((u - 1.0 / 3.0).abs() < 1e-15 && u == v);
        for n in [0, 2, 5] {
            let (u, v) = burgers_series::<f64>(n).unwrap().eval(0.7, 0.0).unwrap();
            assert_eq!((u, v), (0.7f64.cos(), 0.7f64.cos()));
        }
        let (u, _) = burgers_series::<f64>(8).unwrap().eval(0.0, 1.0).unwrap();
        assert!((u - (-1.0f64).exp()).abs() < 3e-5);
    }

    #[test]
    fn order_zero_residual_is_cos() {
        let s = burgers_series::<f64>(0).unwrap();
        let (ru, rv) = s.residual();
        assert!(ru.approx_eq(&cos_t(1.0, 0), 1e-15), "{ru:?}");
        assert_eq!(ru, rv);
    }

    #[test]
    fn single_precision_series() {
        let s = burgers_series::<f32>(4).unwrap();
        let (u, _) = s.eval(0.0, 0.5).unwrap();
        let exact = 1.0 - 0.5 + 0.125 - 0.5f32.powi(3) / 6.0 + 0.5f32.powi(4) / 24.0;
        assert!((u - exact).abs() < 1e-6);
    }
}
