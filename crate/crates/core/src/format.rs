//! Fixed numeric formatting for CLI output: values are rounded to nine
//! significant digits and then printed in their shortest form.

/// `x` rounded to nine significant digits. Negative zero becomes zero.
pub fn round_sig9(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x == 0.0 {
        return 0.0;
    }
    let r: f64 = format!("{x:.8e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn fmt_num(x: f64) -> String {
    format!("{}", round_sig9(x))
}
