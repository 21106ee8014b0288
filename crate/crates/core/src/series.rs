//! Truncated power series with complex coefficients.
//!
//! A series of order `N` stores the coefficients of `z^0 ..= z^N`. Terms of
//! higher degree are unknown, not zero, so every binary operation truncates
//! to the smaller order of its operands.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 16;

/// Below this modulus a constant term is treated as zero by [`ComplexSeries::div`].
pub const DIV_EPS: f64 = 1e-14;

const UNIT_CONSTANT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries {
    coeffs: Vec<Complex64>,
}

impl ComplexSeries {
    /// Wraps `coeffs`, where `coeffs[k]` multiplies `z^k`.
    ///
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zeros(order: usize) -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0); order + 1])
    }

    /// The constant `c`.
    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zeros(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `z`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zeros(order);
        if order >= 1 {
            s.coeffs[1] = Complex64::new(1.0, 0.0);
        }
        s
    }

    /// `1 + a z`.
    pub fn linear(a: Complex64, order: usize) -> Self {
        let mut s = Self::constant(Complex64::new(1.0, 0.0), order);
        if order >= 1 {
            s.coeffs[1] = a;
        }
        s
    }

    /// `1 / (1 - z)`.
    pub fn geometric(order: usize) -> Self {
        Self::new(vec![Complex64::new(1.0, 0.0); order + 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient of `z^k`; `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<Complex64> {
        self.coeffs.get(k).copied()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderTooSmall {
                have: self.order(),
                need: order,
            });
        }
        Ok(Self::new(self.coeffs[..=order].to_vec()))
    }

    pub fn scale(&self, a: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        linear_combine(Complex64::new(1.0, 0.0), self, Complex64::new(1.0, 0.0), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        linear_combine(Complex64::new(1.0, 0.0), self, Complex64::new(-1.0, 0.0), other)
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum())
            .collect();
        Self::new(coeffs)
    }

    /// The quotient `u` with `u * other = self` to the smaller order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let t0 = other.coeffs[0];
        if t0.norm() < DIV_EPS {
            return Err(Error::ZeroConstantTerm(t0.norm()));
        }
        let n = self.order().min(other.order());
        let mut u: Vec<Complex64> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let acc: Complex64 = (1..=k).map(|j| other.coeffs[j] * u[k - j]).sum();
            u.push((self.coeffs[k] - acc) / t0);
        }
        Ok(Self::new(u))
    }

    /// `self^gamma` for a series with constant term 1, taking the branch with
    /// value 1 at the origin.
    ///
    /// Uses the recurrence obtained from `u' s = gamma s' u`:
    /// `n u_n = sum_{k=1}^{n} ((gamma + 1) k - n) s_k u_{n-k}`.
    pub fn pow_real(&self, gamma: f64) -> Result<Self> {
        let s0 = self.coeffs[0];
        if (s0 - Complex64::new(1.0, 0.0)).norm() > UNIT_CONSTANT_TOL {
            return Err(Error::ConstantTermNotOne {
                re: s0.re,
                im: s0.im,
            });
        }
        let n = self.order();
        let mut u: Vec<Complex64> = Vec::with_capacity(n + 1);
        u.push(Complex64::new(1.0, 0.0));
        for m in 1..=n {
            let acc: Complex64 = (1..=m)
                .map(|k| ((gamma + 1.0) * k as f64 - m as f64) * self.coeffs[k] * u[m - k])
                .sum();
            u.push(acc / (m as f64 * s0));
        }
        Ok(Self::new(u))
    }

    /// Antiderivative vanishing at 0; raises the order by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c / (k as f64 + 1.0)),
        );
        Self::new(coeffs)
    }

    /// Termwise derivative; lowers the order by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() < 1 {
            return Err(Error::OrderTooSmall { have: 0, need: 1 });
        }
        Ok(Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        ))
    }

    /// `z * self`. Exact, so the order grows by one.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// `self / z` for a series without constant term; the order drops by one.
    pub fn div_z(&self) -> Result<Self> {
        if self.order() < 1 {
            return Err(Error::OrderTooSmall { have: 0, need: 1 });
        }
        let c0 = self.coeffs[0];
        if c0.norm() > DIV_EPS {
            return Err(Error::NotNormalized(format!(
                "cannot divide by z, constant term is {c0}"
            )));
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// Horner evaluation of the truncated sum.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Largest coefficient-wise distance to `other` over the common order.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `a * s + b * t`, truncated at the smaller order.
pub fn linear_combine(a: Complex64, s: &ComplexSeries, b: Complex64, t: &ComplexSeries) -> ComplexSeries {
    ComplexSeries::new(
        s.coeffs
            .iter()
            .zip(&t.coeffs)
            .map(|(&x, &y)| a * x + b * y)
            .collect(),
    )
}
