//! Starlike functions generated from Schur data.
//!
//! Every normalized starlike `phi` satisfies
//! `z phi'/phi = (1 + z w)/(1 - z w)` for an analytic `w` mapping the disk
//! into its closure. Only `c0 = w(0)` and `c1 = w'(0)` reach the second and
//! third coefficients of `phi`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::ComplexSeries;

const MODULUS_TOL: f64 = 1e-12;

/// First two Taylor coefficients of a Schur function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchurPoint {
    c0: Complex64,
    c1: Complex64,
}

impl SchurPoint {
    pub fn new(c0: Complex64, c1: Complex64) -> Result<Self> {
        let c0_abs = c0.norm();
        let c1_abs = c1.norm();
        if c0_abs > 1.0 + MODULUS_TOL || c1_abs > 1.0 - c0_abs * c0_abs + MODULUS_TOL {
            return Err(Error::InvalidSchurPoint { c0_abs, c1_abs });
        }
        Ok(Self { c0, c1 })
    }

    pub fn c0(&self) -> Complex64 {
        self.c0
    }

    pub fn c1(&self) -> Complex64 {
        self.c1
    }

    /// True when `|c1| = 1 - |c0|^2`, i.e. the data extends to a disk automorphism.
    pub fn on_boundary(&self) -> bool {
        (self.c1.norm() - (1.0 - self.c0.norm_sqr())).abs() <= MODULUS_TOL
    }

    /// A Schur function with these first two coefficients:
    /// `w = (c0 + z v)/(1 + conj(c0) z v)` with `v = c1/(1 - |c0|^2)`.
    /// For boundary data `|v| = 1` and this is the Blaschke factor.
    pub fn omega(&self, order: usize) -> Result<ComplexSeries> {
        let rest = 1.0 - self.c0.norm_sqr();
        if rest <= MODULUS_TOL {
            return Ok(ComplexSeries::constant(self.c0, order));
        }
        mobius_completion(self.c0, self.c1 / rest, order)
    }
}

fn mobius_completion(c0: Complex64, v: Complex64, order: usize) -> Result<ComplexSeries> {
    let mut num = ComplexSeries::constant(c0, order);
    let den = ComplexSeries::linear(c0.conj() * v, order);
    if order >= 1 {
        num = num.add(&ComplexSeries::identity(order).scale(v));
    }
    num.div(&den)
}

/// Degree-one Blaschke factor `(c0 + eta z)/(1 + conj(c0) eta z)`.
///
/// For `|c0| = 1` the factor collapses to the constant `c0`.
pub fn blaschke_omega(c0: Complex64, eta: Complex64, order: usize) -> Result<ComplexSeries> {
    if c0.norm() > 1.0 + MODULUS_TOL {
        return Err(Error::InvalidModulus(format!("|c0| = {} > 1", c0.norm())));
    }
    if (eta.norm() - 1.0).abs() > MODULUS_TOL {
        return Err(Error::InvalidModulus(format!("|eta| = {} != 1", eta.norm())));
    }
    if 1.0 - c0.norm_sqr() <= MODULUS_TOL {
        return Ok(ComplexSeries::constant(c0, order));
    }
    mobius_completion(c0, eta, order)
}

/// A normalized starlike series, `phi = z + phi_2 z^2 + ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct StarlikeSeries {
    phi: ComplexSeries,
}

impl StarlikeSeries {
    /// Accepts `phi` only if it starts `0 + 1 z`.
    pub fn new(phi: ComplexSeries) -> Result<Self> {
        let ok = phi.order() >= 1
            && phi.coeffs()[0].norm() <= MODULUS_TOL
            && (phi.coeffs()[1] - 1.0).norm() <= MODULUS_TOL;
        if !ok {
            let head: Vec<_> = phi.coeffs().iter().take(2).collect();
            return Err(Error::NotNormalized(format!("{head:?}")));
        }
        Ok(Self { phi })
    }

    pub fn series(&self) -> &ComplexSeries {
        &self.phi
    }

    pub fn into_series(self) -> ComplexSeries {
        self.phi
    }

    pub fn order(&self) -> usize {
        self.phi.order()
    }

    /// Coefficient `phi_n`, `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<Complex64> {
        self.phi.coeff(n)
    }
}

/// Solves `z phi' = p phi` with `p = (1 + z w)/(1 - z w)` and `phi_1 = 1`.
pub fn starlike_from_omega(omega: &ComplexSeries, order: usize) -> Result<StarlikeSeries> {
    if order < 1 {
        return Err(Error::OrderTooSmall { have: 0, need: 1 });
    }
    let zw = omega.truncate(order - 1)?.mul_z();
    let one = ComplexSeries::constant(Complex64::new(1.0, 0.0), order);
    let p = one.add(&zw).div(&one.sub(&zw))?;

    let mut phi = vec![Complex64::new(0.0, 0.0); order + 1];
    phi[1] = Complex64::new(1.0, 0.0);
    for n in 2..=order {
        let acc: Complex64 = (1..n).map(|k| p.coeffs()[k] * phi[n - k]).sum();
        phi[n] = acc / (n as f64 - 1.0);
    }
    Ok(StarlikeSeries {
        phi: ComplexSeries::new(phi),
    })
}

/// `(phi_2, phi_3) = (2 c0, c1 + 3 c0^2)`.
pub fn phi23_from_schur(p: &SchurPoint) -> (Complex64, Complex64) {
    (2.0 * p.c0, p.c1 + 3.0 * p.c0 * p.c0)
}

/// Sharp bound of `|b3 - lambda b2^2|` over normalized starlike functions.
pub fn koepf_bound(lambda: f64) -> f64 {
    1.0_f64.max((3.0 - 4.0 * lambda).abs())
}
