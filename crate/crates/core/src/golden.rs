//! Oracle constants frozen into `tests/data/oracle_golden.txt`.
//!
//! The file is regenerated with `hpm golden --output <path>`; the integration
//! tests recompute every entry and compare.

use std::collections::BTreeMap;

use crate::blasius::TABULATED_ALPHA;
use crate::error::{HpmError, Result};
use crate::keyvalue;
use crate::oracles::{blasius_find_alpha, blasius_shoot, rk4_step, ShootingConfig};

/// Monomial coefficients `c_n` of `F_n = c_n eta^(3n+2)` from the scalar
/// recurrence, without going through the polynomial algebra.
pub fn blasius_monomial_recurrence(alpha: f64, order: usize) -> Vec<f64> {
    let deg = |k: usize| (3 * k + 2) as f64;
    let mut c = vec![alpha / 2.0];
    for n in 1..=order {
        let conv: f64 = (0..n)
            .map(|k| {
                let j = n - 1 - k;
                c[k] * c[j] * deg(j) * (deg(j) - 1.0)
            })
            .sum();
        let m = (3 * n) as f64;
        c.push(-0.5 * conv / (m * (m + 1.0) * (m + 2.0)));
    }
    c
}

/// Computes every golden constant from scratch.
pub fn compute_oracle_constants() -> Result<BTreeMap<String, f64>> {
    let cfg = ShootingConfig::<f64>::default();
    let mut out = BTreeMap::new();

    out.insert("rk4_exp_step_h0.1".into(), rk4_step(|y: &[f64; 1]| [y[0]], &[1.0], 0.1)?[0]);

    for (key, alpha) in [("shoot_fp_end_alpha_0.1", 0.1), ("shoot_fp_end_alpha_1", 1.0)] {
        let fp = blasius_shoot(alpha, cfg.eta_max, cfg.step, cfg.sample_spacing)?.fp_at_end;
        out.insert(key.into(), fp);
    }

    let shot = blasius_find_alpha(1e-10)?;
    out.insert("shoot_alpha".into(), shot.alpha);
    for eta in [0.5, 1.0, 1.5, 2.0] {
        out.insert(format!("shoot_f_eta_{eta:.1}"), shot.interpolate(eta)?.f);
    }

    for (n, c) in blasius_monomial_recurrence(TABULATED_ALPHA, 6).into_iter().enumerate() {
        out.insert(format!("blasius_coeff_deg{}", 3 * n + 2), c);
    }
    Ok(out)
}

pub fn render_golden(constants: &BTreeMap<String, f64>) -> String {
    keyvalue::render(
        &["oracle constants; regenerate with `hpm golden`"],
        constants.iter().map(|(k, v)| (k.as_str(), format!("{v:.17e}"))),
    )
}

pub fn parse_golden(text: &str) -> Result<BTreeMap<String, f64>> {
    keyvalue::parse(text)?
        .into_iter()
        .map(|(k, v)| {
            let x = v.parse::<f64>().map_err(|e| HpmError::Parse {
                line: 0,
                message: format!("{k}: {e}"),
            })?;
            Ok((k, x))
        })
        .collect()
}
