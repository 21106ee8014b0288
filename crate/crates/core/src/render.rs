//! Text, JSON and CSV renderings used by the `fs-lab` binary.
//!
//! Every number goes through [`fmt_num`] / [`round_sig9`], so output is
//! byte-stable for identical inputs.

use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use crate::bounds::{self, BoundResult, Extremal, Thresholds};
use crate::concave::{self, AlphaParam, CoeffPair, RegimeExtremal};
use crate::error::Result;
use crate::format::{fmt_num, round_sig9};
use crate::oracle::{self, OracleGrid};
use crate::series::ComplexSeries;
use crate::starlike;
use crate::Complex64;

fn thresholds_json(t: &Thresholds) -> Value {
    json!({
        "t0": round_sig9(t.t0),
        "t1": round_sig9(t.t1),
        "t2": round_sig9(t.t2),
        "lam1": round_sig9(t.lam1),
        "lam2": round_sig9(t.lam2),
        "t3": round_sig9(t.t3),
        "t4": round_sig9(t.t4),
    })
}

fn extremal_json(e: &Extremal) -> Value {
    match *e {
        Extremal::CaseDParams { r_m } => json!({ "kind": e.kind(), "r_m": round_sig9(r_m) }),
        Extremal::CaseFTheta { theta0 } => json!({ "kind": e.kind(), "theta0": round_sig9(theta0) }),
        _ => json!({ "kind": e.kind() }),
    }
}

fn extremal_text(e: &Extremal) -> String {
    match *e {
        Extremal::CaseDParams { r_m } => format!("{}(r_m={})", e.kind(), fmt_num(r_m)),
        Extremal::CaseFTheta { theta0 } => format!("{}(theta0={})", e.kind(), fmt_num(theta0)),
        _ => e.kind().to_string(),
    }
}

pub fn bound_json(alpha: AlphaParam, lambda: f64, b: &BoundResult) -> String {
    let v = json!({
        "alpha": round_sig9(alpha.get()),
        "lambda": round_sig9(lambda),
        "bound": round_sig9(b.value),
        "regime": b.regime.as_str(),
        "thresholds": thresholds_json(&b.thresholds),
        "extremal": extremal_json(&b.extremal),
    });
    format!("{v}\n")
}

pub fn bound_text(alpha: AlphaParam, lambda: f64, b: &BoundResult) -> String {
    let t = &b.thresholds;
    let mut out = String::new();
    writeln!(out, "alpha: {}", fmt_num(alpha.get())).unwrap();
    writeln!(out, "lambda: {}", fmt_num(lambda)).unwrap();
    writeln!(out, "bound: {}", fmt_num(b.value)).unwrap();
    writeln!(out, "regime: {}", b.regime).unwrap();
    writeln!(
        out,
        "thresholds: t0={} t1={} t2={} lam1={} lam2={} t3={} t4={}",
        fmt_num(t.t0),
        fmt_num(t.t1),
        fmt_num(t.t2),
        fmt_num(t.lam1),
        fmt_num(t.lam2),
        fmt_num(t.t3),
        fmt_num(t.t4)
    )
    .unwrap();
    writeln!(out, "extremal: {}", extremal_text(&b.extremal)).unwrap();
    out
}

/// Optional comparison columns for [`curve_csv`].
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CurveCompare {
    pub oracle: bool,
    pub classical: bool,
    pub koepf: bool,
}

/// Bound against `lambda` on `steps` equispaced points, endpoints included.
/// The classical column is left empty outside `[0, 1]`.
pub fn curve_csv(
    alpha: AlphaParam,
    lambda_min: f64,
    lambda_max: f64,
    steps: usize,
    compare: CurveCompare,
    grid: OracleGrid,
) -> String {
    let mut out = String::from("lambda,bound,regime");
    if compare.oracle {
        out.push_str(",oracle");
    }
    if compare.classical {
        out.push_str(",classical_s");
    }
    if compare.koepf {
        out.push_str(",koepf_starlike");
    }
    out.push('\n');

    let span = lambda_max - lambda_min;
    for i in 0..steps {
        let lambda = if i + 1 == steps {
            lambda_max
        } else {
            lambda_min + span * i as f64 / (steps - 1) as f64
        };
        let b = bounds::fs_bound(alpha, lambda);
        write!(out, "{},{},{}", fmt_num(lambda), fmt_num(b.value), b.regime).unwrap();
        if compare.oracle {
            let m = oracle::maximize_reduced(alpha, lambda, grid);
            write!(out, ",{}", fmt_num(m.value)).unwrap();
        }
        if compare.classical {
            out.push(',');
            if let Ok(v) = bounds::classical_s_bound(lambda) {
                out.push_str(&fmt_num(v));
            }
        }
        if compare.koepf {
            write!(out, ",{}", fmt_num(starlike::koepf_bound(lambda))).unwrap();
        }
        out.push('\n');
    }
    out
}

/// An extremal function with its achieved functional and the bound.
#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub alpha: AlphaParam,
    pub lambda: f64,
    pub order: usize,
    pub extremal: RegimeExtremal,
    pub achieved: f64,
    pub bound: f64,
}

pub fn extremal_report(alpha: AlphaParam, lambda: f64, order: usize) -> Result<ExtremalReport> {
    let extremal = concave::regime_extremal(alpha, lambda, order.max(3))?;
    let achieved = concave::functional(CoeffPair::from_series(&extremal.series)?, lambda);
    Ok(ExtremalReport {
        alpha,
        lambda,
        order,
        extremal,
        achieved,
        bound: bounds::fs_bound(alpha, lambda).value,
    })
}

impl ExtremalReport {
    fn coefficients(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.extremal.series.coeffs().iter().copied().enumerate().skip(1).take(self.order)
    }

    pub fn to_json(&self) -> String {
        let coeffs: Vec<Value> = self
            .coefficients()
            .map(|(n, c)| json!({ "n": n, "re": round_sig9(c.re), "im": round_sig9(c.im) }))
            .collect();
        let s = &self.extremal.schur;
        let v = json!({
            "alpha": round_sig9(self.alpha.get()),
            "lambda": round_sig9(self.lambda),
            "regime": self.extremal.regime.as_str(),
            "extremal": extremal_json(&self.extremal.descriptor),
            "c0": [round_sig9(s.c0().re), round_sig9(s.c0().im)],
            "c1": [round_sig9(s.c1().re), round_sig9(s.c1().im)],
            "note": self.extremal.note,
            "coefficients": coeffs,
            "achieved": round_sig9(self.achieved),
            "bound": round_sig9(self.bound),
        });
        format!("{v}\n")
    }

    /// Columns `n,re,im,achieved,bound`; the last two repeat on every row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,re,im,achieved,bound\n");
        let (achieved, bound) = (fmt_num(self.achieved), fmt_num(self.bound));
        for (n, c) in self.coefficients() {
            writeln!(out, "{n},{},{},{achieved},{bound}", fmt_num(c.re), fmt_num(c.im)).unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {message}")]
pub struct CoeffParseError {
    pub line: usize,
    pub message: String,
}

/// Parses one `re,im` coefficient per line, starting with the constant term,
/// which must be zero. Blank lines are skipped.
pub fn parse_coefficients(text: &str) -> std::result::Result<ComplexSeries, CoeffParseError> {
    let mut coeffs = Vec::new();
    let mut first_line = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| CoeffParseError { line: idx + 1, message };
        let (re, im) = line
            .split_once(',')
            .ok_or_else(|| bad(format!("expected `re,im`, got {line:?}")))?;
        let re: f64 = re.trim().parse().map_err(|_| bad(format!("bad real part {re:?}")))?;
        let im: f64 = im.trim().parse().map_err(|_| bad(format!("bad imaginary part {im:?}")))?;
        first_line.get_or_insert(idx + 1);
        coeffs.push(Complex64::new(re, im));
    }
    match (coeffs.first(), first_line) {
        (None, _) => Err(CoeffParseError {
            line: 0,
            message: "no coefficients".into(),
        }),
        (Some(c0), Some(line)) if *c0 != Complex64::new(0.0, 0.0) => Err(CoeffParseError {
            line,
            message: format!("constant term must be 0, got {c0}"),
        }),
        _ if coeffs.len() < 3 => Err(CoeffParseError {
            line: first_line.unwrap_or(0),
            message: "need at least a0, a1, a2".into(),
        }),
        _ => Ok(ComplexSeries::new(coeffs)),
    }
}
