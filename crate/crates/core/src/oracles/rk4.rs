use crate::error::{domain, HpmError, Result};
use crate::scalar::Scalar;

/// One classical fourth-order Runge-Kutta step for the autonomous system `y' = f(y)`.
///
/// Fails when `h` is not a positive finite number or when any stage produces a
/// non-finite value.
pub fn rk4_step<T, F, const N: usize>(f: F, y: &[T; N], h: T) -> Result<[T; N]>
where
    T: Scalar,
    F: Fn(&[T; N]) -> [T; N],
{
    if !(h.is_finite() && h > T::zero()) {
        return Err(domain(format!("step size must be positive and finite, got {h}")));
    }
    if y.iter().any(|v| !v.is_finite()) {
        return Err(domain("state contains non-finite entries"));
    }
    let axpy = |a: T, k: &[T; N]| -> [T; N] { std::array::from_fn(|i| y[i] + a * k[i]) };

    let half = h * T::half();
    let k1 = f(y);
    let k2 = f(&axpy(half, &k1));
    let k3 = f(&axpy(half, &k2));
    let k4 = f(&axpy(h, &k3));
    let sixth = h / T::lit(6.0);
    let out: [T; N] =
        std::array::from_fn(|i| y[i] + sixth * (k1[i] + T::two() * (k2[i] + k3[i]) + k4[i]));
    if out.iter().any(|v| !v.is_finite()) {
        return Err(HpmError::Integration { eta: f64::NAN });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_step() {
        let y = rk4_step(|y: &[f64; 1]| [y[0]], &[1.0], 0.1).unwrap();
        let taylor = 1.0 + 0.1 + 0.005 + 0.1f64.powi(3) / 6.0 + 0.1f64.powi(4) / 24.0;
        assert!((y[0] - taylor).abs() < 1e-15);
        assert!((y[0] - 1.105170833).abs() < 1e-9);
    }

    #[test]
    fn trivial_fields() {
        assert_eq!(rk4_step(|_: &[f64; 2]| [0.0, 0.0], &[3.0, -2.0], 0.7).unwrap(), [3.0, -2.0]);
        assert_eq!(rk4_step(|_: &[f64; 1]| [1.0], &[0.0], 0.5).unwrap(), [0.5]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(rk4_step(|y: &[f64; 1]| [y[0]], &[1.0], 0.0).is_err());
        assert!(rk4_step(|y: &[f64; 1]| [y[0]], &[1.0], -0.1).is_err());
        assert!(rk4_step(|y: &[f64; 1]| [y[0]], &[f64::NAN], 0.1).is_err());
        assert!(rk4_step(|y: &[f64; 1]| [y[0] * 1e308], &[1e308], 1.0).is_err());
    }

    #[test]
    fn fourth_order_convergence() {
        let integrate = |steps: usize| {
            let h = 1.0 / steps as f64;
            let mut y = [1.0];
            for _ in 0..steps {
                y = rk4_step(|y: &[f64; 1]| [y[0]], &y, h).unwrap();
            }
            (y[0] - std::f64::consts::E).abs()
        };
        let ratio = integrate(10) / integrate(20);
        assert!((12.0..=20.0).contains(&ratio), "ratio {ratio}");
    }
}
