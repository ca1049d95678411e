//! Shooting on the wall curvature for `f''' + f f'' / 2 = 0`.
//!
//! The boundary value problem is integrated as an initial value problem from
//! `(f, f', f'') = (0, 0, alpha)` out to a finite `eta_max` standing in for
//! infinity, and `alpha` is adjusted until `f'(eta_max) = 1`.

use crate::error::{domain, HpmError, Result};
use crate::scalar::Scalar;

use super::rk4::rk4_step;

/// One stored sample `(eta, f, f', f'')` of a shot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRow<T> {
    pub eta: T,
    pub f: T,
    pub fp: T,
    pub fpp: T,
}

/// Far-field slope of one shot together with the stored samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ShootOutcome<T> {
    pub fp_at_end: T,
    pub trajectory: Vec<TrajectoryRow<T>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig<T> {
    /// Finite stand-in for `eta -> inf`.
    pub eta_max: T,
    /// RK4 step.
    pub step: T,
    /// Spacing of the stored trajectory samples.
    pub sample_spacing: T,
    /// Target `|f'(eta_max) - 1|`.
    pub tol: T,
    /// Initial bracket on `alpha`; the mismatch must change sign across it.
    pub bracket: (T, T),
    /// Bisection steps taken before switching to secant updates.
    pub bisection_steps: usize,
    pub max_iterations: usize,
}

impl<T: Scalar> Default for ShootingConfig<T> {
    fn default() -> Self {
        Self {
            eta_max: T::lit(10.0),
            step: T::lit(1e-3),
            sample_spacing: T::lit(0.01),
            tol: T::lit(1e-10),
            bracket: (T::lit(0.1), T::lit(1.0)),
            bisection_steps: 10,
            max_iterations: 50,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShootingResult<T> {
    /// Converged wall curvature `f''(0)`.
    pub alpha: T,
    pub eta_max: T,
    pub trajectory: Vec<TrajectoryRow<T>>,
    pub iterations: usize,
    /// `|f'(eta_max) - 1|` at the converged `alpha`.
    pub final_mismatch: T,
}

impl<T: Scalar> ShootingResult<T> {
    /// Linear interpolation of the stored samples at `eta`.
    pub fn interpolate(&self, eta: T) -> Result<TrajectoryRow<T>> {
        interpolate(&self.trajectory, eta)
    }
}

fn interpolate<T: Scalar>(rows: &[TrajectoryRow<T>], eta: T) -> Result<TrajectoryRow<T>> {
    let (first, last) = match (rows.first(), rows.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(domain("empty trajectory")),
    };
    if !eta.is_finite() || eta < first.eta || eta > last.eta {
        return Err(domain(format!(
            "eta = {eta} outside trajectory range [{}, {}]",
            first.eta, last.eta
        )));
    }
    // First sample with eta >= query.
    let hi = rows.partition_point(|r| r.eta < eta);
    if rows[hi].eta == eta || hi == 0 {
        return Ok(rows[hi]);
    }
    let (a, b) = (&rows[hi - 1], &rows[hi]);
    let w = (eta - a.eta) / (b.eta - a.eta);
    let lerp = |x: T, y: T| x + w * (y - x);
    Ok(TrajectoryRow { eta, f: lerp(a.f, b.f), fp: lerp(a.fp, b.fp), fpp: lerp(a.fpp, b.fpp) })
}

fn blasius_field<T: Scalar>(y: &[T; 3]) -> [T; 3] {
    [y[1], y[2], -T::half() * y[0] * y[2]]
}

/// Integrates from `(0, 0, alpha)` to `eta_max` with step `h`, storing a
/// sample every `sample_spacing` (and always the final point).
pub fn blasius_shoot<T: Scalar>(
    alpha: T,
    eta_max: T,
    h: T,
    sample_spacing: T,
) -> Result<ShootOutcome<T>> {
    if !alpha.is_finite() {
        return Err(domain(format!("alpha must be finite, got {alpha}")));
    }
    if !(eta_max.is_finite() && eta_max > T::zero()) {
        return Err(domain(format!("eta_max must be positive, got {eta_max}")));
    }
    if !(h.is_finite() && h > T::zero()) {
        return Err(domain(format!("step must be positive, got {h}")));
    }
    let steps = (eta_max / h).ceil().to_usize().unwrap_or(1).max(1);
    let h = eta_max / T::from_count(steps);
    let stride = (sample_spacing / h).round().to_usize().unwrap_or(1).max(1);

    let mut y = [T::zero(), T::zero(), alpha];
    let mut trajectory = Vec::with_capacity(steps / stride + 2);
    trajectory.push(TrajectoryRow { eta: T::zero(), f: y[0], fp: y[1], fpp: y[2] });
    for i in 1..=steps {
        y = rk4_step(blasius_field, &y, h).map_err(|_| HpmError::Integration {
            eta: (T::from_count(i - 1) * h).to_f64().unwrap_or(f64::NAN),
        })?;
        if i % stride == 0 || i == steps {
            let eta = if i == steps { eta_max } else { T::from_count(i) * h };
            trajectory.push(TrajectoryRow { eta, f: y[0], fp: y[1], fpp: y[2] });
        }
    }
    Ok(ShootOutcome { fp_at_end: y[1], trajectory })
}

/// Recovers `f''(0)` from `f'(eta_max) = 1` by bisection followed by secant steps.
pub fn find_alpha<T: Scalar>(cfg: &ShootingConfig<T>) -> Result<ShootingResult<T>> {
    if !(cfg.tol.is_finite() && cfg.tol > T::zero()) {
        return Err(domain(format!("tolerance must be positive, got {}", cfg.tol)));
    }
    let shoot = |alpha: T| blasius_shoot(alpha, cfg.eta_max, cfg.step, cfg.sample_spacing);
    let mismatch = |out: &ShootOutcome<T>| out.fp_at_end - T::one();

    let (mut lo, mut hi) = cfg.bracket;
    let mut g_lo = mismatch(&shoot(lo)?);
    let mut g_hi = mismatch(&shoot(hi)?);
    if g_lo.signum() == g_hi.signum() {
        return Err(HpmError::NoBracket {
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
        });
    }

    let done = |alpha: T, out: ShootOutcome<T>, iterations: usize| ShootingResult {
        alpha,
        eta_max: cfg.eta_max,
        final_mismatch: mismatch(&out).abs(),
        trajectory: out.trajectory,
        iterations,
    };

    let mut iterations = 0;
    while iterations < cfg.bisection_steps.min(cfg.max_iterations) {
        iterations += 1;
        let mid = (lo + hi) * T::half();
        let out = shoot(mid)?;
        let g_mid = mismatch(&out);
        if g_mid.abs() <= cfg.tol {
            return Ok(done(mid, out, iterations));
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
            g_hi = g_mid;
        }
    }

    let (mut x0, mut g0, mut x1, mut g1) = (lo, g_lo, hi, g_hi);
    while iterations < cfg.max_iterations {
        iterations += 1;
        if g1 == g0 {
            break;
        }
        let x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
        let out = shoot(x2)?;
        let g2 = mismatch(&out);
        if g2.abs() <= cfg.tol {
            return Ok(done(x2, out, iterations));
        }
        (x0, g0, x1, g1) = (x1, g1, x2, g2);
    }
    Err(HpmError::NotConverged {
        iterations,
        mismatch: g1.abs().to_f64().unwrap_or(f64::NAN),
    })
}

/// [`find_alpha`] with the default configuration and the given tolerance.
pub fn blasius_find_alpha<T: Scalar>(tol: T) -> Result<ShootingResult<T>> {
    find_alpha(&ShootingConfig { tol, ..ShootingConfig::default() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_curvature_stays_at_rest() {
        let out = blasius_shoot(0.0, 10.0, 1e-3, 0.01).unwrap();
        assert_eq!(out.fp_at_end, 0.0);
        assert!(out.trajectory.iter().all(|r| r.f == 0.0 && r.fp == 0.0 && r.fpp == 0.0));
    }

    #[test]
    fn tabulated_curvature_saturates() {
        let out = blasius_shoot(0.332057f64, 10.0, 1e-3, 0.01).unwrap();
        assert!((out.fp_at_end - 1.0).abs() < 1e-3);
    }

    #[test]
    fn trajectory_layout() {
        let out = blasius_shoot(0.5, 2.0, 1e-3, 0.01).unwrap();
        assert_eq!(out.trajectory.len(), 201);
        assert_eq!(out.trajectory[0], TrajectoryRow { eta: 0.0, f: 0.0, fp: 0.0, fpp: 0.5 });
        assert!(out.trajectory.windows(2).all(|w| w[0].eta < w[1].eta));
        assert_eq!(out.trajectory.last().unwrap().eta, 2.0);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(blasius_shoot(f64::NAN, 10.0, 1e-3, 0.01).is_err());
        assert!(blasius_shoot(0.3, 0.0, 1e-3, 0.01).is_err());
        assert!(blasius_shoot(0.3, 10.0, 0.0, 0.01).is_err());
        assert!(blasius_find_alpha(0.0).is_err());
    }

    #[test]
    fn blow_up_is_reported() {
        // Large negative curvature drives f'' -> -inf within a short distance.
        match blasius_shoot(-1e3, 10.0, 1e-2, 0.01) {
            Err(HpmError::Integration { eta }) => assert!(eta > 0.0 && eta < 10.0),
            other => panic!("expected blow-up, got {:?}", other.map(|o| o.fp_at_end)),
        }
    }

    #[test]
    fn missing_sign_change() {
        let cfg = ShootingConfig { bracket: (1.0, 2.0), ..ShootingConfig::<f64>::default() };
        assert!(matches!(find_alpha(&cfg), Err(HpmError::NoBracket { .. })));
    }

    #[test]
    fn iteration_cap() {
        let cfg = ShootingConfig { max_iterations: 3, ..ShootingConfig::<f64>::default() };
        assert!(matches!(find_alpha(&cfg), Err(HpmError::NotConverged { iterations: 3, .. })));
    }

    #[test]
    fn loose_tolerance_agrees() {
        let loose = blasius_find_alpha(1e-4f64).unwrap();
        let tight = blasius_find_alpha(1e-10).unwrap();
        assert!((loose.alpha - tight.alpha).abs() < 1e-3);
        assert!(loose.iterations <= tight.iterations);
        assert!(loose.final_mismatch <= 1e-4);
    }

    #[test]
    fn interpolation() {
        let out = blasius_shoot(0.332057f64, 2.0, 1e-3, 0.01).unwrap();
        let rows = &out.trajectory;
        let mid = interpolate(rows, 0.005).unwrap();
        assert!((mid.f - 0.5 * (rows[0].f + rows[1].f)).abs() < 1e-15);
        assert_eq!(interpolate(rows, 0.0).unwrap(), rows[0]);
        assert!(interpolate(rows, 2.5).is_err());
        assert!(interpolate(rows, -0.1).is_err());
    }
}
