//! End-to-end verification sweep behind `fs-lab verify`.

use crate::bounds::{self, branch1, branch2, branch3, branch4};
use crate::concave::{self, AlphaParam, CoeffPair};
use crate::error::Result;
use crate::oracle::{self, OracleGrid};

pub const ORACLE_REL_TOL: f64 = 1e-5;
pub const CONTINUITY_TOL: f64 = 1e-10;
pub const SHARPNESS_TOL: f64 = 1e-9;

/// Order of the series used for sharpness checks.
const SHARPNESS_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub alphas: Vec<f64>,
    /// Number of `lambda` values per `alpha` in `[t0 - 0.2, t4 + 0.2]`.
    pub steps: usize,
    pub grid: OracleGrid,
    /// Added to every closed-form value before comparison. Nonzero only
    /// when exercising the failure path.
    pub bound_perturbation: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            alphas: vec![1.1, 1.25, 1.5, 1.75, 2.0],
            steps: 101,
            grid: OracleGrid::default(),
            bound_perturbation: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Breach {
    pub check: &'static str,
    pub alpha: f64,
    pub lambda: f64,
    pub deviation: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub oracle_points: usize,
    pub max_oracle_rel_dev: f64,
    pub max_continuity_dev: f64,
    pub max_sharpness_dev: f64,
    pub breaches: Vec<Breach>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.breaches.is_empty()
    }

    fn record(&mut self, check: &'static str, alpha: f64, lambda: f64, deviation: f64, tolerance: f64) {
        let slot = match check {
            "oracle" => &mut self.max_oracle_rel_dev,
            "continuity" => &mut self.max_continuity_dev,
            _ => &mut self.max_sharpness_dev,
        };
        *slot = slot.max(deviation);
        if !(deviation <= tolerance) {
            self.breaches.push(Breach {
                check,
                alpha,
                lambda,
                deviation,
                tolerance,
            });
        }
    }
}

/// Equispaced `lambda` values over `[t0 - 0.2, t4 + 0.2]`.
pub fn lambda_sweep(alpha: AlphaParam, steps: usize) -> Vec<f64> {
    let t = bounds::thresholds(alpha);
    let (lo, hi) = (t.t0 - 0.2, t.t4 + 0.2);
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps.max(2) - 1) as f64)
        .collect()
}

/// Sample points covering every branch and the shared endpoints.
fn sharpness_lambdas(alpha: AlphaParam) -> Vec<f64> {
    let t = bounds::thresholds(alpha);
    vec![
        t.t0 - 0.5,
        t.t1,
        t.t2,
        0.5 * (t.t2 + t.t3),
        t.t3,
        0.5 * (t.t3 + t.lam2),
        t.lam2,
        t.t4,
        t.t4 + 0.5,
    ]
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let bump = config.bound_perturbation;
    for &a in &config.alphas {
        let alpha = AlphaParam::new(a)?;

        for lambda in lambda_sweep(alpha, config.steps) {
            let bound = bounds::fs_bound(alpha, lambda).value + bump;
            let found = oracle::maximize_reduced(alpha, lambda, config.grid).value;
            report.record("oracle", a, lambda, (found - bound).abs() / bound.abs(), ORACLE_REL_TOL);
            report.oracle_points += 1;
        }

        let t = bounds::thresholds(alpha);
        for (lambda, left, right) in [
            (t.t2, branch1(alpha, t.t2), branch2(alpha, t.t2)),
            (t.t3, branch2(alpha, t.t3), branch3(alpha, t.t3)),
            (t.lam2, branch3(alpha, t.lam2), branch4(alpha, t.lam2)),
        ] {
            report.record("continuity", a, lambda, (left - right).abs(), CONTINUITY_TOL);
        }

        for lambda in sharpness_lambdas(alpha) {
            let ext = concave::regime_extremal(alpha, lambda, SHARPNESS_ORDER)?;
            let achieved = concave::functional(CoeffPair::from_series(&ext.series)?, lambda);
            let bound = bounds::fs_bound(alpha, lambda).value + bump;
            report.record("sharpness", a, lambda, (achieved - bound).abs(), SHARPNESS_TOL);
        }
    }
    Ok(report)
}
