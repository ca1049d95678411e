//! Independent numerical ground truth for the series solutions.
//!
//! Nothing in here consults the HPM cascade: the Blasius reference comes from
//! shooting on the far-field condition `f'(inf) = 1` with a fixed-step RK4
//! integrator, and the Burgers reference is the closed form `cos x e^-t`.

mod compare;
mod rk4;
mod shooting;

pub use compare::{
    blasius_compare, blasius_residual_at, burgers_compare, pde_residual, BurgersReport,
    ErrorReport, ErrorRow,
};
pub use rk4::rk4_step;
pub use shooting::{
    blasius_find_alpha, blasius_shoot, find_alpha, ShootOutcome, ShootingConfig, ShootingResult,
    TrajectoryRow,
};
