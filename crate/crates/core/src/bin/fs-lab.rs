use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use concave_fs::concave::{self, AlphaParam, ConcaveGrid};
use concave_fs::format::fmt_num;
use concave_fs::oracle::OracleGrid;
use concave_fs::render::{self, CurveCompare};
use concave_fs::verify::{self, VerifyConfig};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "fs-lab", version, about = "Fekete-Szego bounds for concave univalent functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListingFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Compare {
    Oracle,
    Classical,
    Koepf,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form bound, regime, thresholds and extremal descriptor.
    Bound {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: BoundFormat,
    },
    /// Bound against lambda as CSV.
    Curve {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda_max: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',')]
        compare: Vec<Compare>,
    },
    /// Oracle sweep, branch continuity and extremal sharpness checks.
    Verify {
        #[arg(long = "alpha", value_delimiter = ',', default_values_t = [1.1, 1.25, 1.5, 1.75, 2.0])]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        /// Shift every closed-form value; for exercising the failure path.
        #[arg(long, hide = true, default_value_t = 0.0, allow_hyphen_values = true)]
        perturb_bound: f64,
    },
    /// Taylor coefficients of the extremal function for the regime of lambda.
    Extremal {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ListingFormat,
    },
    /// Sampled screen of Re P_f > 0 for coefficients read from a file.
    CheckConcave {
        coeff_file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 64)]
        radial_steps: usize,
        #[arg(long, default_value_t = 128)]
        angular_steps: usize,
        #[arg(long, default_value_t = 0.99)]
        max_radius: f64,
    },
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn configure_threads() {
    let Ok(raw) = std::env::var("FS_LAB_THREADS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(0) => {}
        Ok(n) => {
            // only fails if a pool already exists
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        Err(_) => eprintln!("warning: ignoring FS_LAB_THREADS={raw:?}"),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match cli.command {
        Command::Bound { alpha, lambda, format } => {
            let alpha = match AlphaParam::new(alpha) {
                Ok(a) => a,
                Err(e) => return usage_error(e),
            };
            let b = concave_fs::fs_bound(alpha, lambda);
            let out = match format {
                BoundFormat::Json => render::bound_json(alpha, lambda, &b),
                BoundFormat::Text => render::bound_text(alpha, lambda, &b),
            };
            print!("{out}");
            ExitCode::SUCCESS
        }
        Command::Curve {
            alpha,
            lambda_min,
            lambda_max,
            steps,
            out,
            compare,
        } => {
            let alpha = match AlphaParam::new(alpha) {
                Ok(a) => a,
                Err(e) => return usage_error(e),
            };
            if !(lambda_min < lambda_max) {
                return usage_error("lambda-min must be smaller than lambda-max");
            }
            if steps < 2 {
                return usage_error("steps must be at least 2");
            }
            let compare = CurveCompare {
                oracle: compare.contains(&Compare::Oracle),
                classical: compare.contains(&Compare::Classical),
                koepf: compare.contains(&Compare::Koepf),
            };
            let csv = render::curve_csv(alpha, lambda_min, lambda_max, steps, compare, OracleGrid::default());
            if let Err(e) = fs::write(&out, csv) {
                return usage_error(format!("cannot write {}: {e}", out.display()));
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            alphas,
            steps,
            perturb_bound,
        } => {
            if steps < 2 {
                return usage_error("steps must be at least 2");
            }
            let config = VerifyConfig {
                alphas,
                steps,
                bound_perturbation: perturb_bound,
                ..VerifyConfig::default()
            };
            let report = match verify::run(&config) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            println!("oracle points: {}", report.oracle_points);
            println!(
                "max oracle relative deviation: {} (tol {})",
                fmt_num(report.max_oracle_rel_dev),
                fmt_num(verify::ORACLE_REL_TOL)
            );
            println!(
                "max branch continuity gap: {} (tol {})",
                fmt_num(report.max_continuity_dev),
                fmt_num(verify::CONTINUITY_TOL)
            );
            println!(
                "max extremal sharpness gap: {} (tol {})",
                fmt_num(report.max_sharpness_dev),
                fmt_num(verify::SHARPNESS_TOL)
            );
            for b in &report.breaches {
                println!(
                    "BREACH {} alpha={} lambda={} deviation={} tol={}",
                    b.check,
                    fmt_num(b.alpha),
                    fmt_num(b.lambda),
                    fmt_num(b.deviation),
                    fmt_num(b.tolerance)
                );
            }
            if report.passed() {
                println!("verify: PASS");
                ExitCode::SUCCESS
            } else {
                println!("verify: FAIL ({} breaches)", report.breaches.len());
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
        Command::Extremal {
            alpha,
            lambda,
            order,
            format,
        } => {
            let alpha = match AlphaParam::new(alpha) {
                Ok(a) => a,
                Err(e) => return usage_error(e),
            };
            if order < 1 {
                return usage_error("order must be at least 1");
            }
            let report = match render::extremal_report(alpha, lambda, order) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            if let (ListingFormat::Csv, Some(note)) = (format, report.extremal.note) {
                eprintln!("note: {note}");
            }
            match format {
                ListingFormat::Json => print!("{}", report.to_json()),
                ListingFormat::Csv => print!("{}", report.to_csv()),
            }
            ExitCode::SUCCESS
        }
        Command::CheckConcave {
            coeff_file,
            alpha,
            radial_steps,
            angular_steps,
            max_radius,
        } => {
            let alpha = match AlphaParam::new(alpha) {
                Ok(a) => a,
                Err(e) => return usage_error(e),
            };
            if !(max_radius > 0.0 && max_radius < 1.0) || radial_steps == 0 || angular_steps == 0 {
                return usage_error("grid needs 0 < max-radius < 1 and positive step counts");
            }
            let text = match fs::read_to_string(&coeff_file) {
                Ok(t) => t,
                Err(e) => return usage_error(format!("cannot read {}: {e}", coeff_file.display())),
            };
            let f = match render::parse_coefficients(&text) {
                Ok(f) => f,
                Err(e) => return usage_error(format!("{}: {e}", coeff_file.display())),
            };
            let grid = ConcaveGrid {
                radial_steps,
                angular_steps,
                max_radius,
            };
            let min = match concave::check_concave(&f, alpha, grid) {
                Ok(m) => m,
                Err(e) => return usage_error(e),
            };
            println!("order: {}", f.order());
            println!("min Re P_f: {}", fmt_num(min));
            if min > 0.0 {
                println!("verdict: PASS");
                ExitCode::SUCCESS
            } else {
                println!("verdict: FAIL");
                ExitCode::from(EXIT_VERIFY_FAILED)
            }
        }
    }
}
