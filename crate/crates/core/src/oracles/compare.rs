use crate::blasius::BlasiusSeries;
use crate::burgers::{burgers_exact, BurgersSeries};
use crate::error::{domain, Result};
use crate::scalar::Scalar;

use super::shooting::ShootingResult;

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow<T> {
    /// Evaluation point: `[eta]` for Blasius, `[x, t]` for Burgers.
    pub point: Vec<T>,
    pub approx: T,
    pub reference: T,
    pub abs_err: T,
}

/// Pointwise comparison of an approximation against a reference.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport<T> {
    pub label: String,
    pub rows: Vec<ErrorRow<T>>,
    pub max_err: T,
    pub rms_err: T,
}

impl<T: Scalar> ErrorReport<T> {
    pub fn from_rows(label: impl Into<String>, rows: Vec<ErrorRow<T>>) -> Self {
        let max_err = rows.iter().fold(T::zero(), |m, r| m.max(r.abs_err));
        let rms_err = if rows.is_empty() {
            T::zero()
        } else {
            let sq = rows.iter().fold(T::zero(), |s, r| s + r.abs_err * r.abs_err);
            (sq / T::from_count(rows.len())).sqrt().min(max_err)
        };
        Self { label: label.into(), rows, max_err, rms_err }
    }
}

fn row<T: Scalar>(point: Vec<T>, approx: T, reference: T) -> ErrorRow<T> {
    ErrorRow { point, approx, reference, abs_err: (approx - reference).abs() }
}

/// Series `f` against the shooting trajectory at each `eta`.
pub fn blasius_compare<T: Scalar>(
    series: &BlasiusSeries<T>,
    result: &ShootingResult<T>,
    etas: &[T],
) -> Result<ErrorReport<T>> {
    let rows = etas
        .iter()
        .map(|&eta| {
            if eta < T::zero() || eta > result.eta_max {
                return Err(domain(format!(
                    "eta = {eta} outside oracle range [0, {}]",
                    result.eta_max
                )));
            }
            let approx = series.eval(eta)?.f;
            let reference = result.interpolate(eta)?.f;
            Ok(row(vec![eta], approx, reference))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorReport::from_rows(format!("blasius order {}", series.order()), rows))
}

/// `f''' + f f'' / 2` of the assembled series at one `eta`.
pub fn blasius_residual_at<T: Scalar>(series: &BlasiusSeries<T>, eta: T) -> Result<T> {
    series.residual().eval(eta)
}

/// Separate reports for the two unknowns.
#[derive(Debug, Clone, PartialEq)]
pub struct BurgersReport<T> {
    pub u: ErrorReport<T>,
    pub v: ErrorReport<T>,
}

impl<T: Scalar> BurgersReport<T> {
    pub fn max_err(&self) -> T {
        self.u.max_err.max(self.v.max_err)
    }

    pub fn rms_err(&self) -> T {
        self.u.rms_err.max(self.v.rms_err)
    }
}

/// Partial sums against `cos x e^-t` on the tensor grid `grid_x x grid_t`.
pub fn burgers_compare<T: Scalar>(
    series: &BurgersSeries<T>,
    grid_x: &[T],
    grid_t: &[T],
) -> Result<BurgersReport<T>> {
    let (u_sum, v_sum) = series.assembled();
    let mut u_rows = Vec::with_capacity(grid_x.len() * grid_t.len());
    let mut v_rows = Vec::with_capacity(grid_x.len() * grid_t.len());
    for &t in grid_t {
        for &x in grid_x {
            let (u_ref, v_ref) = burgers_exact(x, t);
            u_rows.push(row(vec![x, t], u_sum.eval(x, t)?, u_ref));
            v_rows.push(row(vec![x, t], v_sum.eval(x, t)?, v_ref));
        }
    }
    let order = series.order();
    Ok(BurgersReport {
        u: ErrorReport::from_rows(format!("burgers u order {order}"), u_rows),
        v: ErrorReport::from_rows(format!("burgers v order {order}"), v_rows),
    })
}

/// Max absolute residual of both equations over the grid.
pub fn pde_residual<T: Scalar>(
    series: &BurgersSeries<T>,
    grid_x: &[T],
    grid_t: &[T],
) -> Result<(T, T)> {
    if grid_x.is_empty() || grid_t.is_empty() {
        return Err(domain("residual grid is empty"));
    }
    let (ru, rv) = series.residual();
    let mut max = (T::zero(), T::zero());
    for &t in grid_t {
        for &x in grid_x {
            max.0 = max.0.max(ru.eval(x, t)?.abs());
            max.1 = max.1.max(rv.eval(x, t)?.abs());
        }
    }
    Ok(max)
}
