//! Order-by-order homotopy perturbation driver.
//!
//! Writing the unknown as `v = v_0 + p v_1 + p^2 v_2 + ...` and collecting like
//! powers of the embedding parameter `p` turns a nonlinear problem into a
//! cascade of linear ones. Every order has the shape
//!
//! ```text
//! L[v_n] = rhs_n(v_0, ..., v_{n-1})
//! ```
//!
//! so a problem only has to say how to build `rhs_n` from the lower orders and
//! how to invert the linear operator `L`. The approximate solution is the
//! partial sum at `p = 1`.

use std::ops::Add;

use crate::error::{HpmError, Result};

/// A problem that can be expanded order by order.
pub trait HpmProblem {
    /// Coefficient domain of a single order (a polynomial, a pair of series, ...).
    type Term: Clone;

    fn name(&self) -> &str;

    /// Initial approximation `v_0`, carrying all nonzero boundary or initial data.
    fn order_zero(&self) -> Result<Self::Term>;

    /// Right-hand side of the order-`n` linear problem. `prev` holds exactly
    /// the orders `0..n`; implementations must not look past it.
    fn rhs_at_order(&self, n: usize, prev: &[Self::Term]) -> Result<Self::Term>;

    /// Solves `L[v] = rhs` with homogeneous data.
    fn invert_linear(&self, rhs: Self::Term) -> Self::Term;
}

/// Truncated series `v_0, ..., v_N` produced by [`hpm_solve`].
#[derive(Debug, Clone, PartialEq)]
pub struct HpmSeries<Term> {
    pub problem: String,
    pub terms: Vec<Term>,
}

impl<Term> HpmSeries<Term> {
    /// Truncation order `N` (number of terms minus one).
    pub fn order(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }
}

impl<Term> HpmSeries<Term>
where
    Term: Clone + for<'a> Add<&'a Term, Output = Term>,
{
    /// Partial sum at `p = 1`.
    pub fn assemble(&self) -> Option<Term> {
        hpm_assemble(&self.terms)
    }
}

/// Runs the cascade up to and including `order`.
pub fn hpm_solve<P: HpmProblem + ?Sized>(problem: &P, order: usize) -> Result<HpmSeries<P::Term>> {
    let mut terms = Vec::with_capacity(order + 1);
    terms.push(problem.order_zero()?);
    for n in 1..=order {
        let rhs = problem
            .rhs_at_order(n, &terms[..n])
            .map_err(|e| HpmError::AtOrder { order: n, source: Box::new(e) })?;
        terms.push(problem.invert_linear(rhs));
    }
    Ok(HpmSeries { problem: problem.name().to_owned(), terms })
}

/// Sums a list of terms; `None` when the list is empty.
pub fn hpm_assemble<Term>(terms: &[Term]) -> Option<Term>
where
    Term: Clone + for<'a> Add<&'a Term, Output = Term>,
{
    let (first, rest) = terms.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, t| acc + t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::contract;

    /// y' = y, y(0) = 1 with L = d/dt: v_n = t^n / n!.
    struct Exponential;

    impl HpmProblem for Exponential {
        type Term = crate::Poly;

        fn name(&self) -> &str {
            "exp"
        }

        fn order_zero(&self) -> Result<Self::Term> {
            Ok(crate::Poly::constant(1.0))
        }

        fn rhs_at_order(&self, n: usize, prev: &[Self::Term]) -> Result<Self::Term> {
            Ok(prev[n - 1].clone())
        }

        fn invert_linear(&self, rhs: Self::Term) -> Self::Term {
            rhs.integrate()
        }
    }

    struct FailsAtThree;

    impl HpmProblem for FailsAtThree {
        type Term = crate::Poly;

        fn name(&self) -> &str {
            "fails"
        }

        fn order_zero(&self) -> Result<Self::Term> {
            Ok(crate::Poly::constant(1.0))
        }

        fn rhs_at_order(&self, n: usize, prev: &[Self::Term]) -> Result<Self::Term> {
            if n == 3 {
                return Err(contract("boom"));
            }
            Ok(prev[n - 1].clone())
        }

        fn invert_linear(&self, rhs: Self::Term) -> Self::Term {
            rhs
        }
    }

    #[test]
    fn exponential_cascade() {
        let s = hpm_solve(&Exponential, 5).unwrap();
        assert_eq!(s.order(), 5);
        assert_eq!(s.problem, "exp");
        let sum = s.assemble().unwrap();
        let fact = [1.0, 1.0, 2.0, 6.0, 24.0, 120.0];
        for (k, f) in fact.iter().enumerate() {
            assert!((sum.coeff(k) - 1.0 / f).abs() < 1e-15);
        }
    }

    #[test]
    fn order_zero_only() {
        let s = hpm_solve(&Exponential, 0).unwrap();
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.assemble().unwrap(), crate::Poly::constant(1.0));
    }

    #[test]
    fn failure_carries_order() {
        match hpm_solve(&FailsAtThree, 5) {
            Err(HpmError::AtOrder { order, .. }) => assert_eq!(order, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(hpm_solve(&FailsAtThree, 2).is_ok());
    }

    #[test]
    fn assemble_empty_is_none() {
        assert!(hpm_assemble::<crate::Poly>(&[]).is_none());
    }
}
