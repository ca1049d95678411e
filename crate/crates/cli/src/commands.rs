use hpm_core::blasius::{blasius_series, TABULATED_ALPHA, TRUSTED_ETA_MAX};
use hpm_core::burgers::{burgers_exact, burgers_series};
use hpm_core::grid::{linspace, stepped};
use hpm_core::oracles::{blasius_compare, burgers_compare, find_alpha, pde_residual, ShootingConfig};
use hpm_core::{BurgersSeries, ShootingResult};

use crate::config::{AlphaMode, Problem, RunConfig};
use crate::table::{CoefficientRow, Meta, Table};
use crate::CliError;

fn shoot() -> Result<ShootingResult, CliError> {
    Ok(find_alpha(&ShootingConfig::<f64>::default())?)
}

/// Wall curvature for the series plus the shooting reference.
fn blasius_setup(cfg: &RunConfig) -> Result<(f64, ShootingResult), CliError> {
    if cfg.eta_max > TRUSTED_ETA_MAX {
        eprintln!(
            "warning: eta-max {} is beyond {TRUSTED_ETA_MAX}; the truncated series diverges there",
            cfg.eta_max
        );
    }
    let oracle = shoot()?;
    let alpha = match cfg.alpha_mode {
        AlphaMode::Paper => TABULATED_ALPHA,
        AlphaMode::Shoot => oracle.alpha,
    };
    Ok((alpha, oracle))
}

fn blasius_meta(command: &str, cfg: &RunConfig, alpha: f64, oracle: &ShootingResult) -> Vec<(&'static str, Meta)> {
    vec![
        ("command", Meta::Text(command.into())),
        ("problem", Meta::Text("blasius".into())),
        ("order", Meta::Int(cfg.order)),
        ("alpha", Meta::Num(alpha)),
        ("alpha_mode", Meta::Text(alpha_mode_name(cfg.alpha_mode).into())),
        ("oracle_alpha", Meta::Num(oracle.alpha)),
        ("oracle_iterations", Meta::Int(oracle.iterations)),
    ]
}

fn alpha_mode_name(mode: AlphaMode) -> &'static str {
    match mode {
        AlphaMode::Paper => "paper",
        AlphaMode::Shoot => "shoot",
    }
}

fn burgers_meta(command: &str, cfg: &RunConfig) -> Vec<(&'static str, Meta)> {
    vec![
        ("command", Meta::Text(command.into())),
        ("problem", Meta::Text("burgers".into())),
        ("order", Meta::Int(cfg.order)),
        ("alpha", Meta::Null),
        ("x_steps", Meta::Int(cfg.x_steps)),
        ("t_max", Meta::Num(cfg.t_max)),
        ("t_steps", Meta::Int(cfg.t_steps)),
    ]
}

pub fn cmd_blasius(cfg: &RunConfig) -> Result<Table, CliError> {
    let (alpha, oracle) = blasius_setup(cfg)?;
    let series = blasius_series(alpha, cfg.order)?;
    let etas = stepped(cfg.eta_max, cfg.eta_step);
    let report = blasius_compare(&series, &oracle, &etas)?;

    let mut rows = Vec::with_capacity(etas.len());
    for (eta, r) in etas.iter().zip(&report.rows) {
        let p = series.eval(*eta)?;
        rows.push(vec![*eta, p.f, p.fp, p.fpp, r.reference, r.abs_err]);
    }
    let coefficients = series
        .coefficients()
        .into_iter()
        .map(|c| CoefficientRow { n: c.order, degree: c.degree, coefficient: c.coefficient })
        .collect();
    Ok(Table {
        meta: blasius_meta("blasius", cfg, alpha, &oracle),
        coefficients: Some(coefficients),
        columns: vec!["eta", "f_hpm", "fp_hpm", "fpp_hpm", "f_ref", "abs_err"],
        rows,
        summary: vec![("max_err", report.max_err), ("rms_err", report.rms_err)],
    })
}

fn burgers_grids(cfg: &RunConfig) -> (Vec<f64>, Vec<f64>) {
    (linspace(0.0, std::f64::consts::TAU, cfg.x_steps), linspace(0.0, cfg.t_max, cfg.t_steps))
}

fn burgers_summary(series: &BurgersSeries, xs: &[f64], ts: &[f64]) -> Result<(f64, f64, f64), CliError> {
    let report = burgers_compare(series, xs, ts)?;
    let (ru, rv) = pde_residual(series, xs, ts)?;
    Ok((report.max_err(), report.rms_err(), ru.max(rv)))
}

pub fn cmd_burgers(cfg: &RunConfig) -> Result<Table, CliError> {
    let series = burgers_series::<f64>(cfg.order)?;
    let (xs, ts) = burgers_grids(cfg);
    let (u_sum, _) = series.assembled();

    let mut rows = Vec::with_capacity(xs.len() * ts.len());
    for &t in &ts {
        for &x in &xs {
            let u = u_sum.eval(x, t)?;
            let (u_exact, _) = burgers_exact(x, t);
            rows.push(vec![x, t, u, u_exact, (u - u_exact).abs()]);
        }
    }
    let (max_err, rms_err, residual_max) = burgers_summary(&series, &xs, &ts)?;
    Ok(Table {
        meta: burgers_meta("burgers", cfg),
        coefficients: None,
        columns: vec!["x", "t", "u_hpm", "u_exact", "abs_err"],
        rows,
        summary: vec![("max_err", max_err), ("rms_err", rms_err), ("residual_max", residual_max)],
    })
}

pub fn cmd_convergence(cfg: &RunConfig) -> Result<Table, CliError> {
    let problem = cfg
        .problem
        .ok_or_else(|| CliError::Usage("convergence needs --problem {blasius|burgers}".into()))?;
    let columns = vec!["order", "max_err", "rms_err", "residual_max"];
    match problem {
        Problem::Blasius => {
            let (alpha, oracle) = blasius_setup(cfg)?;
            let etas = stepped(cfg.eta_max, cfg.eta_step);
            let full = blasius_series(alpha, cfg.order)?;
            let mut rows = Vec::new();
            for n in 0..=cfg.order {
                let series = hpm_core::blasius::BlasiusSeries { alpha, terms: full.terms[..=n].to_vec() };
                let report = blasius_compare(&series, &oracle, &etas)?;
                let residual = series.residual();
                let residual_max = etas
                    .iter()
                    .map(|&e| residual.eval(e).map(f64::abs))
                    .try_fold(0.0f64, |m, r| r.map(|r| m.max(r)))?;
                rows.push(vec![n as f64, report.max_err, report.rms_err, residual_max]);
            }
            Ok(Table {
                meta: blasius_meta("convergence", cfg, alpha, &oracle),
                columns,
                rows,
                ..Table::default()
            })
        }
        Problem::Burgers => {
            let full = burgers_series::<f64>(cfg.order)?;
            let (xs, ts) = burgers_grids(cfg);
            let mut rows = Vec::new();
            for n in 0..=cfg.order {
                let (max_err, rms_err, residual_max) = burgers_summary(&full.truncated(n), &xs, &ts)?;
                rows.push(vec![n as f64, max_err, rms_err, residual_max]);
            }
            Ok(Table { meta: burgers_meta("convergence", cfg), columns, rows, ..Table::default() })
        }
    }
}
