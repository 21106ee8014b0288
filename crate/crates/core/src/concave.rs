//! Concave univalent functions built from starlike data.
//!
//! `f` belongs to `Co(alpha)` exactly when
//! `f' = (1 - z)^{-(alpha+1)} (z/phi)^{(alpha-1)/2}` for a starlike `phi`.
//! Membership is screened by sampling `Re P_f` over a polar grid.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::bounds::{self, Extremal, Regime};
use crate::error::{Error, Result};
use crate::series::ComplexSeries;
use crate::starlike::{self, SchurPoint, StarlikeSeries};

const ALPHA_MARGIN: f64 = 1e-9;

/// Opening-angle parameter, `1 < alpha <= 2`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AlphaParam(f64);

impl AlphaParam {
    /// Values within `1e-9` of 1 are rejected; values within `1e-9` above 2
    /// are clamped to 2.
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > 1.0 + ALPHA_MARGIN && alpha <= 2.0 + ALPHA_MARGIN {
            Ok(Self(alpha.min(2.0)))
        } else {
            Err(Error::InvalidAlpha(alpha))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Second and third Taylor coefficients of a normalized `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoeffPair {
    pub a2: Complex64,
    pub a3: Complex64,
}

impl CoeffPair {
    pub fn from_series(f: &ComplexSeries) -> Result<Self> {
        match (f.coeff(2), f.coeff(3)) {
            (Some(a2), Some(a3)) => Ok(Self { a2, a3 }),
            _ => Err(Error::OrderTooSmall {
                have: f.order(),
                need: 3,
            }),
        }
    }
}

fn one(order: usize) -> ComplexSeries {
    ComplexSeries::constant(Complex64::new(1.0, 0.0), order)
}

/// `(1 - z)^{-(alpha+1)}`.
fn pole_factor(alpha: AlphaParam, order: usize) -> Result<ComplexSeries> {
    ComplexSeries::linear(Complex64::new(-1.0, 0.0), order).pow_real(-(alpha.get() + 1.0))
}

/// Integrates `f'` built from `phi`, returning `f` to the given order.
pub fn f_from_phi(phi: &StarlikeSeries, alpha: AlphaParam, order: usize) -> Result<ComplexSeries> {
    if order < 1 {
        return Err(Error::OrderTooSmall { have: 0, need: 1 });
    }
    let phi_over_z = phi.series().truncate(order)?.div_z()?;
    let z_over_phi = one(order - 1).div(&phi_over_z)?;
    let df = pole_factor(alpha, order - 1)?.mul(&z_over_phi.pow_real((alpha.get() - 1.0) / 2.0)?);
    Ok(df.integrate())
}

pub fn a23_from_phi23(phi2: Complex64, phi3: Complex64, alpha: AlphaParam) -> CoeffPair {
    let a = alpha.get();
    CoeffPair {
        a2: (a + 1.0) / 2.0 - (a - 1.0) / 4.0 * phi2,
        a3: (a + 1.0) * (a + 2.0) / 6.0 - (a * a - 1.0) / 6.0 * phi2 - (a - 1.0) / 6.0 * phi3
            + (a * a - 1.0) / 24.0 * phi2 * phi2,
    }
}

/// `|a3 - lambda a2^2|`.
pub fn functional(c: CoeffPair, lambda: f64) -> f64 {
    (c.a3 - lambda * c.a2 * c.a2).norm()
}

/// `P_f = 2/(alpha-1) [ (alpha+1)/2 (1+z)/(1-z) - 1 - z f''/f' ]` to the
/// given order; needs `f` of order at least `order + 1`.
pub fn p_transform(f: &ComplexSeries, alpha: AlphaParam, order: usize) -> Result<ComplexSeries> {
    if order < 1 {
        return Err(Error::OrderTooSmall { have: 0, need: 1 });
    }
    let a = alpha.get();
    let df = f.truncate(order + 1)?.derivative()?;
    let d2f = df.derivative()?;
    let log_deriv = d2f.div(&df.truncate(order - 1)?)?.mul_z();
    let mut mobius = vec![Complex64::new(2.0, 0.0); order + 1];
    mobius[0] = Complex64::new(1.0, 0.0);
    let mobius = ComplexSeries::new(mobius);
    let bracket = mobius
        .scale(Complex64::new((a + 1.0) / 2.0, 0.0))
        .sub(&one(order))
        .sub(&log_deriv);
    Ok(bracket.scale(Complex64::new(2.0 / (a - 1.0), 0.0)))
}

/// Polar sample grid for [`check_concave`]. Radii are
/// `max_radius * i / radial_steps` for `i = 1..=radial_steps`, angles
/// `2 pi j / angular_steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcaveGrid {
    pub radial_steps: usize,
    pub angular_steps: usize,
    pub max_radius: f64,
}

impl Default for ConcaveGrid {
    fn default() -> Self {
        Self {
            radial_steps: 64,
            angular_steps: 128,
            max_radius: 0.99,
        }
    }
}

/// Minimum of `Re P_f` over the sample grid, using the truncated series of
/// `P_f` (order one less than `f`). A positive result is necessary for
/// membership, not a proof of it; the truncation error at radius `r` is of
/// size `r^N / (1 - r)`, so high orders are needed as `max_radius -> 1`.
pub fn check_concave(f: &ComplexSeries, alpha: AlphaParam, grid: ConcaveGrid) -> Result<f64> {
    let p = p_transform(f, alpha, f.order().saturating_sub(1))?;
    let mut min = f64::INFINITY;
    for i in 1..=grid.radial_steps {
        let r = grid.max_radius * i as f64 / grid.radial_steps as f64;
        for j in 0..grid.angular_steps {
            let z = Complex64::from_polar(r, TAU * j as f64 / grid.angular_steps as f64);
            let re = p.eval(z).re;
            // an overflowing truncated sum certifies nothing
            min = if re.is_finite() { min.min(re) } else { f64::NEG_INFINITY };
        }
    }
    Ok(min)
}

/// `f = [((1+z)/(1-z))^alpha - 1] / (2 alpha)`, integrated from
/// `f' = (1+z)^{alpha-1} (1-z)^{-(alpha+1)}`.
pub fn outer_extremal(alpha: AlphaParam, order: usize) -> Result<ComplexSeries> {
    if order < 1 {
        return Err(Error::OrderTooSmall { have: 0, need: 1 });
    }
    let zero_factor = ComplexSeries::linear(Complex64::new(1.0, 0.0), order - 1).pow_real(alpha.get() - 1.0)?;
    Ok(pole_factor(alpha, order - 1)?.mul(&zero_factor).integrate())
}

/// Branch-3 extremal: `f' = (1 - z e^{i theta0})^{alpha-1} / (1 - z)^{alpha+1}`.
pub fn case_f_extremal(alpha: AlphaParam, lambda: f64, order: usize) -> Result<ComplexSeries> {
    if order < 1 {
        return Err(Error::OrderTooSmall { have: 0, need: 1 });
    }
    let theta0 = bounds::case_f_theta0(alpha, lambda)?;
    let rotation = -Complex64::from_polar(1.0, theta0);
    let zero_factor = ComplexSeries::linear(rotation, order - 1).pow_real(alpha.get() - 1.0)?;
    Ok(pole_factor(alpha, order - 1)?.mul(&zero_factor).integrate())
}

/// The member of `Co(alpha)` whose starlike factor comes from the Schur
/// completion of `p` (see [`SchurPoint::omega`]).
pub fn extremal_from_schur(alpha: AlphaParam, p: &SchurPoint, order: usize) -> Result<ComplexSeries> {
    let omega = p.omega(order)?;
    let phi = starlike::starlike_from_omega(&omega, order)?;
    f_from_phi(&phi, alpha, order)
}

/// Extremal function for the regime that `lambda` falls in.
#[derive(Debug, Clone)]
pub struct RegimeExtremal {
    pub series: ComplexSeries,
    pub regime: Regime,
    pub descriptor: Extremal,
    pub schur: SchurPoint,
    /// Set when the extremal is one member of a family.
    pub note: Option<&'static str>,
}

/// Radius used for the representative of the free family at `lambda = 2/3`.
pub const CASE_E_RADIUS: f64 = 0.5;

pub fn regime_extremal(alpha: AlphaParam, lambda: f64, order: usize) -> Result<RegimeExtremal> {
    let bound = bounds::fs_bound(alpha, lambda);
    let quad = bounds::quad_coeffs(alpha, lambda);
    let zero = Complex64::new(0.0, 0.0);
    let mut note = None;
    let (series, schur) = match bound.extremal {
        Extremal::OuterExtremal => (
            outer_extremal(alpha, order)?,
            SchurPoint::new(Complex64::new(-1.0, 0.0), zero)?,
        ),
        Extremal::CaseFTheta { theta0 } => (
            case_f_extremal(alpha, lambda, order)?,
            SchurPoint::new(Complex64::from_polar(1.0, theta0), zero)?,
        ),
        Extremal::CaseDParams { r_m } => {
            let c0 = Complex64::new(-r_m, 0.0);
            let p = SchurPoint::new(c0, quad.aligned_c1(c0))?;
            (extremal_from_schur(alpha, &p, order)?, p)
        }
        Extremal::CaseEFree => {
            note = Some("one-parameter family c0 = i r, r in (0,1]; showing r = 1/2");
            let c0 = Complex64::new(0.0, CASE_E_RADIUS);
            let p = SchurPoint::new(c0, quad.aligned_c1(c0))?;
            (extremal_from_schur(alpha, &p, order)?, p)
        }
    };
    Ok(RegimeExtremal {
        series,
        regime: bound.regime,
        descriptor: bound.extremal,
        schur,
        note,
    })
}
