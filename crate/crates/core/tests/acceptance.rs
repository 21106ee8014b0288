//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use concave_fs::bounds::{
    self, branch1, branch2, branch3, branch4, classical_s_bound, fs_bound, j_poly, thresholds, QuadCoeffs, Regime,
};
use concave_fs::concave::{self, functional, AlphaParam, CoeffPair, ConcaveGrid};
use concave_fs::oracle::{self, OracleGrid};
use concave_fs::starlike::{self, SchurPoint};
use concave_fs::{Complex64, ComplexSeries};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;

const ALPHAS: [f64; 5] = [1.1, 1.25, 1.5, 1.75, 2.0];
const CONCAVE_ORDER: usize = 2048;

fn al(a: f64) -> AlphaParam {
    AlphaParam::new(a).unwrap()
}

fn alpha_samples(n: usize) -> impl Iterator<Item = f64> {
    (1..=n).map(move |i| 1.0 + i as f64 / n as f64)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let grid = OracleGrid {
        radial_steps: 400,
        angular_steps: 400,
        refine_iters: 3,
    };
    let mut worst = 0.0f64;
    let mut seen = Vec::new();
    for a in ALPHAS {
        let alpha = al(a);
        let t = thresholds(alpha);
        let (lo, hi) = (t.t0 - 0.2, t.t4 + 0.2);
        for i in 0..101 {
            let lambda = lo + (hi - lo) * i as f64 / 100.0;
            let b = fs_bound(alpha, lambda);
            if !seen.contains(&b.regime) {
                seen.push(b.regime);
            }
            let found = oracle::maximize_reduced(alpha, lambda, grid).value;
            let rel = (found - b.value).abs() / b.value.abs().max(f64::MIN_POSITIVE);
            if rel > 1e-5 {
                return Err(format!("alpha {a} lambda {lambda}: oracle {found} vs bound {}", b.value));
            }
            worst = worst.max(rel);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if seen.len() != 4 {
        return Err(format!("sweep reached only {} branches", seen.len()));
    }
    if elapsed >= 60.0 {
        return Err(format!("took {elapsed:.1} s"));
    }
    Ok(format!("max rel dev {worst:.2e} over 505 points in {elapsed:.1} s"))
}

fn branch_continuity() -> Check {
    let mut worst = 0.0f64;
    for a in alpha_samples(50) {
        let alpha = al(a);
        let t = thresholds(alpha);
        let gaps = [
            (branch1(alpha, t.t2) - branch2(alpha, t.t2)).abs(),
            (branch2(alpha, t.t3) - branch3(alpha, t.t3)).abs(),
            (branch3(alpha, t.lam2) - branch4(alpha, t.lam2)).abs(),
        ];
        for g in gaps {
            if !(g <= 1e-10) {
                return Err(format!("alpha {a}: gap {g:e}"));
            }
            worst = worst.max(g);
        }
    }
    Ok(format!("max gap {worst:.2e}"))
}

// ((1 + z) / (1 - z))^alpha - 1, over 2 alpha
fn outer_closed_form(alpha: f64, order: usize) -> ComplexSeries {
    let one_plus = ComplexSeries::linear(c(1.0, 0.0), order);
    let one_minus = ComplexSeries::linear(c(-1.0, 0.0), order);
    let p = one_plus.div(&one_minus).unwrap().pow_real(alpha).unwrap();
    p.sub(&ComplexSeries::constant(c(1.0, 0.0), order)).scale(c(1.0 / (2.0 * alpha), 0.0))
}

fn outer_sharpness() -> Check {
    let order = 8;
    let mut worst = 0.0f64;
    let mut count = 0;
    for a in alpha_samples(20) {
        let alpha = al(a);
        let f = concave::outer_extremal(alpha, order).map_err(|e| e.to_string())?;
        let g = outer_closed_form(a, order);
        if f.max_abs_diff(&g) > 1e-12 {
            return Err(format!("alpha {a}: extremal differs from closed form by {:e}", f.max_abs_diff(&g)));
        }
        let coeffs = CoeffPair::from_series(&f).map_err(|e| e.to_string())?;
        let t = thresholds(alpha);
        let left = (0..10).map(|i| t.t0 - 2.0 + (t.t2 - t.t0 + 2.0) * i as f64 / 10.0);
        let right = (1..=10).map(|i| t.lam2 + 2.0 * i as f64 / 10.0);
        for lambda in left.chain(right) {
            let b = fs_bound(alpha, lambda);
            if !matches!(b.regime, Regime::Branch1 | Regime::Branch4) {
                return Err(format!("alpha {a} lambda {lambda}: unexpected regime {}", b.regime));
            }
            let dev = (functional(coeffs, lambda) - b.value).abs();
            if dev > 1e-9 {
                return Err(format!("alpha {a} lambda {lambda}: deviation {dev:e}"));
            }
            worst = worst.max(dev);
            count += 1;
        }
    }
    let two = CoeffPair::from_series(&concave::outer_extremal(al(2.0), order).unwrap()).unwrap();
    let (v0, v1) = (functional(two, 0.0), functional(two, 1.0));
    if (v0 - 3.0).abs() > 1e-9 || (v1 - 1.0).abs() > 1e-9 {
        return Err(format!("alpha 2: got {v0} at lambda 0 and {v1} at lambda 1"));
    }
    Ok(format!("max dev {worst:.2e} over {count} points; alpha 2 gives {v0} and {v1}"))
}

fn case_f_sharpness() -> Check {
    let alpha = al(2.0);
    let expected = branch3(alpha, 0.7);
    let f = concave::case_f_extremal(alpha, 0.7, 8).map_err(|e| e.to_string())?;
    let got = functional(CoeffPair::from_series(&f).map_err(|e| e.to_string())?, 0.7);
    let dev = (got - expected).abs();
    if dev > 1e-9 {
        return Err(format!("achieved {got}, branch value {expected}"));
    }
    Ok(format!("achieved {got:.10}, branch value {expected:.10}"))
}

fn case_e_exactness() -> Check {
    let mut worst = 0.0f64;
    for a in ALPHAS {
        let alpha = al(a);
        let q = bounds::quad_coeffs(alpha, 2.0 / 3.0);
        for i in 1..=9 {
            let c0 = c(0.0, i as f64 / 10.0);
            let p = SchurPoint::new(c0, q.aligned_c1(c0)).map_err(|e| e.to_string())?;
            let f = concave::extremal_from_schur(alpha, &p, 6).map_err(|e| e.to_string())?;
            let v = functional(CoeffPair::from_series(&f).map_err(|e| e.to_string())?, 2.0 / 3.0);
            let dev = (v - a / 3.0).abs();
            if dev > 1e-10 {
                return Err(format!("alpha {a} r {}: {v} vs {}", c0.im, a / 3.0));
            }
            worst = worst.max(dev);
        }
    }
    Ok(format!("max dev {worst:.2e}"))
}

fn phi_functional(p: &SchurPoint, lambda: f64) -> Result<f64, String> {
    let omega = p.omega(6).map_err(|e| e.to_string())?;
    let phi = starlike::starlike_from_omega(&omega, 6).map_err(|e| e.to_string())?;
    let (p2, p3) = (phi.coeff(2).unwrap(), phi.coeff(3).unwrap());
    Ok((p3 - lambda * p2 * p2).norm())
}

fn koepf_lemma() -> Check {
    let grid = OracleGrid {
        radial_steps: 200,
        angular_steps: 200,
        refine_iters: 3,
    };
    let koebe = SchurPoint::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
    let inner = SchurPoint::new(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
    let mut worst = 0.0f64;
    for i in 0..41 {
        let lambda = -1.0 + 3.0 * i as f64 / 40.0;
        let expected = starlike::koepf_bound(lambda);
        // phi3 - lambda phi2^2 = c1 + (3 - 4 lambda) c0^2
        let q = QuadCoeffs::new(0.0, 0.0, 3.0 - 4.0 * lambda, 1.0);
        let found = oracle::maximize_reduced_quad(&q, grid).value;
        let dev = (found - expected).abs();
        if dev > 1e-6 {
            return Err(format!("lambda {lambda}: brute force {found} vs {expected}"));
        }
        worst = worst.max(dev);
        let d = (lambda - 0.75).abs();
        let mut witnesses = Vec::new();
        if d >= 0.25 - 1e-12 {
            witnesses.push(&koebe);
        }
        if d <= 0.25 + 1e-12 {
            witnesses.push(&inner);
        }
        for w in witnesses {
            let v = phi_functional(w, lambda)?;
            if (v - expected).abs() > 1e-6 {
                return Err(format!("lambda {lambda}: witness {:?} gives {v}", w.c0()));
            }
        }
    }
    Ok(format!("max dev {worst:.2e} over 41 points, witnesses attain"))
}

fn membership_screen() -> Check {
    let mut rng = StdRng::seed_from_u64(20);
    let grid = ConcaveGrid::default();
    let mut lowest = f64::INFINITY;
    for _ in 0..20 {
        let a = rng.random_range(1.01..=2.0);
        let alpha = al(a);
        let t = thresholds(alpha);
        let outer_lambda = if rng.random_bool(0.5) {
            rng.random_range(t.t0 - 1.0..=t.t2)
        } else {
            rng.random_range(t.lam2..=t.t4 + 1.0)
        };
        let case_f_lambda = rng.random_range(t.t3..=t.lam2);
        let candidates = [
            ("outer", outer_lambda, concave::outer_extremal(alpha, CONCAVE_ORDER)),
            ("case F", case_f_lambda, concave::case_f_extremal(alpha, case_f_lambda, CONCAVE_ORDER)),
        ];
        for (name, lambda, f) in candidates {
            let f = f.map_err(|e| e.to_string())?;
            let p = concave::p_transform(&f, alpha, 8).map_err(|e| e.to_string())?;
            let p0 = p.coeff(0).unwrap();
            if (p0 - c(1.0, 0.0)).norm() > 1e-12 {
                return Err(format!("{name} alpha {a} lambda {lambda}: P_f(0) = {p0}"));
            }
            let m = concave::check_concave(&f, alpha, grid).map_err(|e| e.to_string())?;
            if !(m > 0.0) {
                return Err(format!("{name} alpha {a} lambda {lambda}: min Re P_f = {m}"));
            }
            lowest = lowest.min(m);
        }
    }
    Ok(format!("40 extremals, smallest min Re P_f {lowest:.6}"))
}

fn threshold_identities() -> Check {
    let mut worst = 0.0f64;
    for a in alpha_samples(100) {
        let alpha = al(a);
        let t = thresholds(alpha);
        let ordered = t.t0 < t.t1 && t.t1 < t.t2 && t.t2 <= t.lam1 && t.lam1 < t.t3 && t.t3 < t.lam2 && t.lam2 < t.t4;
        if !ordered {
            return Err(format!("alpha {a}: ordering fails {t:?}"));
        }
        let r = j_poly(alpha, t.lam1).abs().max(j_poly(alpha, t.lam2).abs());
        if r > 1e-10 {
            return Err(format!("alpha {a}: j residual {r:e}"));
        }
        worst = worst.max(r);
    }
    Ok(format!("100 alphas ordered, max j residual {worst:.2e}"))
}

fn random_series(rng: &mut StdRng, order: usize) -> ComplexSeries {
    let mut coeffs: Vec<Complex64> = (0..order).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
    coeffs[0] = c(1.0, 0.0);
    ComplexSeries::new(coeffs)
}

fn series_engine() -> Check {
    let one_minus = ComplexSeries::linear(c(-1.0, 0.0), 16);
    let inv_sq = one_minus.pow_real(-2.0).map_err(|e| e.to_string())?;
    for (n, &a) in inv_sq.coeffs().iter().enumerate() {
        if a != c((n + 1) as f64, 0.0) {
            return Err(format!("(1 - z)^-2 coefficient {n} is {a}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let s = random_series(&mut rng, 12);
        let t = random_series(&mut rng, 12);
        let half = s.pow_real(0.5).map_err(|e| e.to_string())?;
        let cube = s.pow_real(3.0).map_err(|e| e.to_string())?;
        let q = s.div(&t).map_err(|e| e.to_string())?;
        let scale = q.coeffs().iter().map(|z| z.norm()).fold(1.0, f64::max);
        let devs = [
            half.mul(&half).max_abs_diff(&s),
            cube.max_abs_diff(&s.mul(&s).mul(&s)) / cube.coeffs().iter().map(|z| z.norm()).fold(1.0, f64::max),
            q.mul(&t).max_abs_diff(&s) / scale,
        ];
        for d in devs {
            if d > 1e-10 {
                return Err(format!("round trip deviation {d:e}"));
            }
            worst = worst.max(d);
        }
    }
    Ok(format!("(1 - z)^-2 exact to n = 15, max round-trip dev {worst:.2e}"))
}

fn classical_sanity() -> Check {
    let cl = classical_s_bound(0.0).map_err(|e| e.to_string())?;
    let b0 = fs_bound(al(2.0), 0.0).value;
    let b1 = fs_bound(al(2.0), 1.0).value;
    if (cl - 3.0).abs() > 1e-12 || (b0 - 3.0).abs() > 1e-12 || (b1 - 1.0).abs() > 1e-12 {
        return Err(format!("classical(0) = {cl}, bound(2, 0) = {b0}, bound(2, 1) = {b1}"));
    }
    Ok(format!("classical(0) = {cl}, bound(2, 0) = {b0}, bound(2, 1) = {b1}"))
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Check); 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("branch continuity", branch_continuity),
        ("outer extremal sharpness", outer_sharpness),
        ("case F sharpness", case_f_sharpness),
        ("case E exactness", case_e_exactness),
        ("starlike lemma by brute force", koepf_lemma),
        ("membership screen", membership_screen),
        ("thresholds and roots", threshold_identities),
        ("series engine", series_engine),
        ("classical comparison", classical_sanity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
