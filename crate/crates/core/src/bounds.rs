//! Closed-form Fekete-Szego bound for `Co(alpha)`.
//!
//! Writing the functional through Schur data gives
//! `a3 - lambda a2^2 = A + B c0 + C c0^2 + D c1` with real `A, B, C, D`.
//! The maximum over `|c0| <= 1, |c1| <= 1 - |c0|^2` splits into four
//! branches in `lambda`, separated by `t2 = 2(alpha-1)/(3 alpha)`, `2/3` and
//! `lam2`. The finer proof cases are exposed through [`proof_case`] and
//! [`AuxFunctions`] for diagnostics and tests.

use std::fmt;

use num_complex::Complex64;

use crate::concave::AlphaParam;
use crate::error::{Error, Result};

/// Radius values this close above 1 are clamped into the unit interval.
const RADIUS_TOL: f64 = 1e-12;
const WINDOW_TOL: f64 = 1e-12;
const COSINE_TOL: f64 = 1e-10;

/// Real coefficients of `A + B c0 + C c0^2 + D c1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl QuadCoeffs {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    /// `A + B c0 + C c0^2`.
    pub fn head(&self, c0: Complex64) -> Complex64 {
        self.a + c0 * (self.b + self.c * c0)
    }

    /// `A + B c0 + C c0^2 + D c1`.
    pub fn value(&self, c0: Complex64, c1: Complex64) -> Complex64 {
        self.head(c0) + self.d * c1
    }

    /// `|A + B c0 + C c0^2| + |D| (1 - |c0|^2)`: the maximum over all
    /// admissible `c1` for fixed `c0`.
    pub fn reduced(&self, c0: Complex64) -> f64 {
        self.head(c0).norm() + self.d.abs() * (1.0 - c0.norm_sqr()).max(0.0)
    }

    /// The `c1` of modulus `1 - |c0|^2` with `D c1` pointing along the head
    /// term, so that [`QuadCoeffs::value`] attains [`QuadCoeffs::reduced`].
    pub fn aligned_c1(&self, c0: Complex64) -> Complex64 {
        let radius = (1.0 - c0.norm_sqr()).max(0.0);
        let head = self.head(c0);
        let dir = if head.norm() > 0.0 { head / head.norm() } else { Complex64::new(1.0, 0.0) };
        let sign = if self.d < 0.0 { -1.0 } else { 1.0 };
        dir * (sign * radius)
    }
}

pub fn quad_coeffs(alpha: AlphaParam, lambda: f64) -> QuadCoeffs {
    let a = alpha.get();
    QuadCoeffs {
        a: (a + 1.0) * (a + 2.0) / 6.0 - lambda * (a + 1.0).powi(2) / 4.0,
        b: (a * a - 1.0) * (lambda / 2.0 - 1.0 / 3.0),
        c: -(a - 1.0) * (4.0 - 2.0 * a + 3.0 * lambda * (a - 1.0)) / 12.0,
        d: -(a - 1.0) / 6.0,
    }
}

/// Case boundaries in `lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub t0: f64,
    pub t1: f64,
    pub t2: f64,
    pub lam1: f64,
    pub lam2: f64,
    pub t3: f64,
    pub t4: f64,
}

pub fn thresholds(alpha: AlphaParam) -> Thresholds {
    let a = alpha.get();
    let a2 = a * a;
    let root = (8.0 * a2 + 1.0).sqrt();
    Thresholds {
        t0: 2.0 * (a - 3.0) / (3.0 * (a - 1.0)),
        t1: 2.0 * (a - 2.0) / (3.0 * (a - 1.0)),
        t2: 2.0 * (a - 1.0) / (3.0 * a),
        lam1: (4.0 * a2 - 1.0 - root) / (6.0 * a2),
        lam2: (4.0 * a2 - 1.0 + root) / (6.0 * a2),
        t3: 2.0 / 3.0,
        t4: 2.0 * (a + 2.0) / (3.0 * (a + 1.0)),
    }
}

/// `j(lambda) = alpha^2 (3 lambda - 2)^2 - 4 + 3 lambda`, with roots `lam1`, `lam2`.
pub fn j_poly(alpha: AlphaParam, lambda: f64) -> f64 {
    let a = alpha.get();
    a * a * (3.0 * lambda - 2.0).powi(2) - 4.0 + 3.0 * lambda
}

/// `(2 alpha^2 + 1)/3 - lambda alpha^2`.
pub fn branch1(alpha: AlphaParam, lambda: f64) -> f64 {
    let a = alpha.get();
    (2.0 * a * a + 1.0) / 3.0 - lambda * a * a
}

pub fn branch2(alpha: AlphaParam, lambda: f64) -> f64 {
    let a = alpha.get();
    (a * (10.0 - 9.0 * lambda) - (3.0 * lambda - 2.0))
        / (9.0 * (2.0 - lambda) + 3.0 * a * (3.0 * lambda - 2.0))
}

pub fn branch3(alpha: AlphaParam, lambda: f64) -> f64 {
    let a = alpha.get();
    let den = (4.0 - 3.0 * lambda).powi(2) - a * a * (3.0 * lambda - 2.0).powi(2);
    a * (1.0 - lambda) * (12.0 * (1.0 - lambda) / den).sqrt()
}

pub fn branch4(alpha: AlphaParam, lambda: f64) -> f64 {
    -branch1(alpha, lambda)
}

/// The four intervals of the piecewise bound. Shared endpoints belong to the
/// branch on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Branch1,
    Branch2,
    Branch3,
    Branch4,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Branch1 => "Branch1",
            Regime::Branch2 => "Branch2_gRm",
            Regime::Branch3 => "Branch3_k1",
            Regime::Branch4 => "Branch4",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Schur data of an extremal function, by regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extremal {
    /// `c0 = -1`: `f = ((1+z)/(1-z))^alpha - 1) / (2 alpha)`.
    OuterExtremal,
    /// `c0 = -r_m` with aligned `c1`.
    CaseDParams { r_m: f64 },
    /// `c0 = i r` for any `r` in `(0, 1]`, aligned `c1`.
    CaseEFree,
    /// `c0 = exp(i theta0)`, `c1 = 0`.
    CaseFTheta { theta0: f64 },
}

impl Extremal {
    pub fn kind(&self) -> &'static str {
        match self {
            Extremal::OuterExtremal => "OuterExtremal",
            Extremal::CaseDParams { .. } => "CaseDParams",
            Extremal::CaseEFree => "CaseEFree",
            Extremal::CaseFTheta { .. } => "CaseFTheta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub value: f64,
    pub regime: Regime,
    pub thresholds: Thresholds,
    pub extremal: Extremal,
}

pub fn regime(alpha: AlphaParam, lambda: f64) -> Regime {
    let t = thresholds(alpha);
    if lambda <= t.t2 {
        Regime::Branch1
    } else if lambda <= t.t3 {
        Regime::Branch2
    } else if lambda <= t.lam2 {
        Regime::Branch3
    } else {
        Regime::Branch4
    }
}

/// Sharp upper bound of `|a3 - lambda a2^2|` over `Co(alpha)`.
pub fn fs_bound(alpha: AlphaParam, lambda: f64) -> BoundResult {
    let thresholds = thresholds(alpha);
    let regime = regime(alpha, lambda);
    let (value, extremal) = match regime {
        Regime::Branch1 => (branch1(alpha, lambda), Extremal::OuterExtremal),
        Regime::Branch2 if lambda == thresholds.t3 => (branch2(alpha, lambda), Extremal::CaseEFree),
        Regime::Branch2 => {
            let r_m = aux_functions(alpha, lambda)
                .r_m
                .expect("r_m lies in (0, 1] on the open branch-2 window");
            (branch2(alpha, lambda), Extremal::CaseDParams { r_m })
        }
        Regime::Branch3 => {
            let theta0 = case_f_theta0(alpha, lambda).expect("branch-3 window is the Case F window");
            (branch3(alpha, lambda), Extremal::CaseFTheta { theta0 })
        }
        Regime::Branch4 => (branch4(alpha, lambda), Extremal::OuterExtremal),
    };
    BoundResult {
        value,
        regime,
        thresholds,
        extremal,
    }
}

/// Angle `theta0 in [0, pi]` of the unimodular `c0` attaining branch 3,
/// from `cos theta0 = -B (A + C) / (4 A C)`.
pub fn case_f_theta0(alpha: AlphaParam, lambda: f64) -> Result<f64> {
    let t = thresholds(alpha);
    if lambda < t.t3 - WINDOW_TOL || lambda > t.lam2 + WINDOW_TOL {
        return Err(Error::OutOfRegime {
            lambda,
            lo: t.t3,
            hi: t.lam2,
        });
    }
    let q = quad_coeffs(alpha, lambda);
    let cos = -q.b * (q.a + q.c) / (4.0 * q.a * q.c);
    if cos.abs() > 1.0 + COSINE_TOL {
        return Err(Error::CosineOutOfRange(cos));
    }
    Ok(cos.clamp(-1.0, 1.0).acos())
}

/// Sharp bound for the whole class `S`, valid on `[0, 1]`.
pub fn classical_s_bound(lambda: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::DomainError(lambda));
    }
    if lambda == 1.0 {
        return Ok(1.0);
    }
    Ok(1.0 + 2.0 * (-2.0 * lambda / (1.0 - lambda)).exp())
}

/// Proof-level case labels, finer than [`Regime`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProofCase {
    Case1,
    CaseA,
    CaseB,
    CaseC,
    CaseD,
    CaseE,
    CaseF,
    CaseG,
    Case2,
}

pub fn proof_case(alpha: AlphaParam, lambda: f64) -> ProofCase {
    let t = thresholds(alpha);
    if lambda <= t.t0 {
        ProofCase::Case1
    } else if lambda >= t.t4 {
        ProofCase::Case2
    } else if lambda < t.t1 {
        ProofCase::CaseA
    } else if lambda == t.t1 {
        ProofCase::CaseB
    } else if lambda < t.t2 {
        ProofCase::CaseC
    } else if lambda < t.t3 {
        ProofCase::CaseD
    } else if lambda == t.t3 {
        ProofCase::CaseE
    } else if lambda <= t.lam2 {
        ProofCase::CaseF
    } else {
        ProofCase::CaseG
    }
}

/// Auxiliary functions of the case analysis at fixed `(alpha, lambda)`.
///
/// With `c0 = r e^{i theta}` and `x = cos theta`,
/// `|A + B c0 + C c0^2|^2 = h(r, x)`. Radii are present only inside the
/// window where they are defined and only when they land in `(0, 1]`.
#[derive(Debug, Clone, Copy)]
pub struct AuxFunctions {
    pub quad: QuadCoeffs,
    alpha: f64,
    /// Maximizer of `g` (Case D).
    pub r_m: Option<f64>,
    /// Root of `x(r) = -1` (Case D, `lambda >= lam1`).
    pub r_0: Option<f64>,
    /// Root of `x(r) = 1` (Case F).
    pub r_1: Option<f64>,
    /// Maximizer of `l` (Case F).
    pub r_n: Option<f64>,
    /// Root of `x(r) = -1` (Case G).
    pub r_2: Option<f64>,
}

impl AuxFunctions {
    fn tail(&self, r: f64) -> f64 {
        (self.alpha - 1.0) / 6.0 * (1.0 - r * r)
    }

    /// Vertex of `h` in `x`.
    pub fn x_of_r(&self, r: f64) -> f64 {
        let QuadCoeffs { a, b, c, .. } = self.quad;
        -b * (a + c * r * r) / (4.0 * a * c * r)
    }

    pub fn h(&self, r: f64, x: f64) -> f64 {
        let QuadCoeffs { a, b, c, .. } = self.quad;
        (a - c * r * r).powi(2) + b * b * r * r + 2.0 * b * r * (a + c * r * r) * x + 4.0 * a * c * r * r * x * x
    }

    /// Reduced objective along `c0 = -r`.
    pub fn g(&self, r: f64) -> f64 {
        let QuadCoeffs { a, b, c, .. } = self.quad;
        a - b * r + c * r * r + self.tail(r)
    }

    /// Reduced objective along `c0 = r`.
    pub fn l(&self, r: f64) -> f64 {
        let QuadCoeffs { a, b, c, .. } = self.quad;
        a + b * r + c * r * r + self.tail(r)
    }

    /// Reduced objective along `c0 = -r` when the head term is negative.
    pub fn n(&self, r: f64) -> f64 {
        let QuadCoeffs { a, b, c, .. } = self.quad;
        -a + b * r - c * r * r + self.tail(r)
    }

    /// Reduced objective at the interior vertex `x = x(r)`.
    pub fn k(&self, r: f64) -> f64 {
        let QuadCoeffs { a, b, c, .. } = self.quad;
        (a - c * r * r) * (1.0 - b * b / (4.0 * a * c)).sqrt() + self.tail(r)
    }
}

fn unit_radius(r: f64) -> Option<f64> {
    (r.is_finite() && r > 0.0 && r <= 1.0 + RADIUS_TOL).then(|| r.min(1.0))
}

pub fn aux_functions(alpha: AlphaParam, lambda: f64) -> AuxFunctions {
    let t = thresholds(alpha);
    let quad = quad_coeffs(alpha, lambda);
    let QuadCoeffs { a, b, c, .. } = quad;
    let am1_3 = (alpha.get() - 1.0) / 3.0;
    let disc = 1.0 - b * b / (4.0 * a * c);
    let sq = disc.sqrt();

    let case_d = lambda >= t.t2 && lambda < t.t3;
    let case_f = lambda > t.t3 && lambda <= t.lam2;
    let case_g = lambda > t.lam2 && lambda < t.t4;

    let r_m = case_d.then(|| -b / (-2.0 * c + am1_3)).and_then(unit_radius);
    let r_0 = (case_d && lambda >= t.lam1)
        .then(|| b / (2.0 * c * (1.0 + sq)))
        .and_then(unit_radius);
    let r_1 = case_f.then(|| b / (-2.0 * c * (1.0 + sq))).and_then(unit_radius);
    let r_n = case_f.then(|| b / (-2.0 * c + am1_3)).and_then(unit_radius);
    // positive root of x(r) = -1; B > 0 and C < 0 here
    let r_2 = case_g.then(|| b / (2.0 * c * (1.0 - sq))).and_then(unit_radius);

    AuxFunctions {
        quad,
        alpha: alpha.get(),
        r_m,
        r_0,
        r_1,
        r_n,
        r_2,
    }
}
