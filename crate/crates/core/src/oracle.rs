//! Brute-force maximization of `|A + B c0 + C c0^2 + D c1|` over Schur data.
//!
//! Independent of the case analysis in [`crate::bounds`]: it only uses the
//! quadruple `(A, B, C, D)` and the constraint `|c1| <= 1 - |c0|^2`.
//! Grids are traversed row-major (radius outer, angle inner) and ties keep
//! the first point seen, so results do not depend on the thread count.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::bounds::{quad_coeffs, QuadCoeffs};
use crate::concave::AlphaParam;

/// Points per refinement window side: the previous cell is split in ten
/// in each direction around the incumbent.
const REFINE_HALF: i32 = 10;
const REFINE_SHRINK: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleGrid {
    pub radial_steps: usize,
    pub angular_steps: usize,
    pub refine_iters: usize,
}

impl Default for OracleGrid {
    fn default() -> Self {
        Self {
            radial_steps: 400,
            angular_steps: 400,
            refine_iters: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedMax {
    pub value: f64,
    /// Argmax in the closed unit disk.
    pub c0: Complex64,
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    r: f64,
    theta: f64,
}

impl Candidate {
    fn at(q: &QuadCoeffs, r: f64, theta: f64) -> Self {
        Self {
            value: q.reduced(Complex64::from_polar(r, theta)),
            r,
            theta,
        }
    }
}

fn keep_first_max(best: Candidate, next: Candidate) -> Candidate {
    if next.value > best.value {
        next
    } else {
        best
    }
}

pub fn maximize_reduced(alpha: AlphaParam, lambda: f64, grid: OracleGrid) -> ReducedMax {
    maximize_reduced_quad(&quad_coeffs(alpha, lambda), grid)
}

/// Maximum over the closed disk of `|A + B c0 + C c0^2| + |D| (1 - |c0|^2)`.
///
/// Coarse polar grid with radii `i / (radial_steps - 1)` and angles
/// `2 pi j / angular_steps`, then `refine_iters` rounds of a 21 x 21 local
/// grid whose spacing shrinks tenfold each round. The incumbent is part of
/// every local grid, so refinement never lowers the value.
pub fn maximize_reduced_quad(q: &QuadCoeffs, grid: OracleGrid) -> ReducedMax {
    assert!(
        grid.radial_steps >= 8 && grid.angular_steps >= 8,
        "oracle grid needs at least 8 steps per direction"
    );
    let dr = 1.0 / (grid.radial_steps - 1) as f64;
    let dtheta = TAU / grid.angular_steps as f64;

    let rows: Vec<Candidate> = (0..grid.radial_steps)
        .into_par_iter()
        .map(|i| {
            let r = i as f64 * dr;
            (0..grid.angular_steps)
                .map(|j| Candidate::at(q, r, j as f64 * dtheta))
                .reduce(keep_first_max)
                .expect("non-empty row")
        })
        .collect();
    let mut best = rows.into_iter().reduce(keep_first_max).expect("non-empty grid");

    let (mut dr, mut dtheta) = (dr, dtheta);
    for _ in 0..grid.refine_iters {
        dr /= REFINE_SHRINK;
        dtheta /= REFINE_SHRINK;
        let center = best;
        for i in -REFINE_HALF..=REFINE_HALF {
            let r = (center.r + i as f64 * dr).clamp(0.0, 1.0);
            for j in -REFINE_HALF..=REFINE_HALF {
                best = keep_first_max(best, Candidate::at(q, r, center.theta + j as f64 * dtheta));
            }
        }
    }

    ReducedMax {
        value: best.value,
        c0: Complex64::from_polar(best.r, best.theta),
    }
}

pub fn maximize_full(alpha: AlphaParam, lambda: f64, steps: usize) -> f64 {
    maximize_full_quad(&quad_coeffs(alpha, lambda), steps)
}

/// Direct search over `c0 = r e^{i theta}` and `c1 = s (1 - r^2) e^{i psi}`
/// with `steps` points in each of `r, theta, s, psi`.
pub fn maximize_full_quad(q: &QuadCoeffs, steps: usize) -> f64 {
    assert!(steps >= 8, "oracle grid needs at least 8 steps per direction");
    let unit = 1.0 / (steps - 1) as f64;
    let turn = TAU / steps as f64;
    let phases: Vec<Complex64> = (0..steps).map(|l| Complex64::from_polar(1.0, l as f64 * turn)).collect();

    let rows: Vec<f64> = (0..steps)
        .into_par_iter()
        .map(|i| {
            let r = i as f64 * unit;
            let room = 1.0 - r * r;
            let mut best = f64::NEG_INFINITY;
            for j in 0..steps {
                let head = q.head(Complex64::from_polar(r, j as f64 * turn));
                for k in 0..steps {
                    let scale = q.d * k as f64 * unit * room;
                    for phase in &phases {
                        best = best.max((head + scale * phase).norm());
                    }
                }
            }
            best
        })
        .collect();
    rows.into_iter().fold(f64::NEG_INFINITY, f64::max)
}
