//! Semi-analytical series solutions by the homotopy perturbation method.
//!
//! The crate has three layers:
//!
//! * [`poly`] and [`trig`]: the coefficient domains the order-by-order
//!   recurrences live in (polynomials in one variable, and cosine/sine series
//!   in `x` with polynomial-in-`t` coefficients);
//! * [`engine`]: a driver generic over the coefficient domain that runs the
//!   cascade and sums the series at `p = 1`;
//! * [`blasius`] and [`burgers`]: the two concrete problems.
//!
//! [`oracles`] holds the independent references used to check them: an RK4
//! shooting solver for the Blasius wall curvature and the closed-form Burgers
//! solution.
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! at the crate root fix the scalar to `f64`.

pub mod blasius;
pub mod burgers;
pub mod engine;
pub mod error;
pub mod golden;
pub mod grid;
pub mod keyvalue;
pub mod oracles;
pub mod poly;
pub mod scalar;
pub mod trig;

pub use blasius::{blasius_order_zero, blasius_rhs, blasius_series, TABULATED_ALPHA};
pub use burgers::{burgers_exact, burgers_initial, burgers_rhs, burgers_series, Component};
pub use engine::{hpm_assemble, hpm_solve, HpmProblem, HpmSeries};
pub use error::{HpmError, Result};
pub use scalar::Scalar;

/// Highest truncation order the solvers accept.
pub const MAX_ORDER: usize = 12;

pub type Poly = poly::Polynomial<f64>;
pub type PolyF32 = poly::Polynomial<f32>;
pub type TrigTerm = trig::TrigTerm<f64>;
pub type TrigSeries = trig::TrigSeries<f64>;
pub type TrigSeriesF32 = trig::TrigSeries<f32>;
pub type BlasiusSeries = blasius::BlasiusSeries<f64>;
pub type BurgersSeries = burgers::BurgersSeries<f64>;
pub type ShootingResult = oracles::ShootingResult<f64>;
pub type ErrorReport = oracles::ErrorReport<f64>;
