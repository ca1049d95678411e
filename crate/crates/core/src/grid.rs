use crate::scalar::Scalar;

/// `n` evenly spaced points from `a` to `b` inclusive; `[a]` when `n == 1`.
pub fn linspace<T: Scalar>(a: T, b: T, n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let last = T::from_count(n - 1);
            (0..n)
                .map(|i| if i == n - 1 { b } else { a + (b - a) * T::from_count(i) / last })
                .collect()
        }
    }
}

/// `0, step, 2 step, ...` up to and including `max` (within a small slack).
pub fn stepped<T: Scalar>(max: T, step: T) -> Vec<T> {
    let count = (max / step + T::lit(1e-9)).floor().to_usize().unwrap_or(0);
    (0..=count).map(|i| T::from_count(i) * step).collect()
}

/// Default Burgers scan: 65 points on `[0, 2 pi]`.
pub fn default_x_grid<T: Scalar>() -> Vec<T> {
    linspace(T::zero(), T::lit(std::f64::consts::TAU), 65)
}

/// Default Burgers scan: 21 points on `[0, t_max]`.
pub fn default_t_grid<T: Scalar>(t_max: T) -> Vec<T> {
    linspace(T::zero(), t_max, 21)
}
