//! Fixed numeric formatting for report files.
//!
//! All floating-point values written to delimited-text outputs go through
//! [`sig6`], which renders 6 significant digits in the style of C's `%.6g`.
//! Using one formatter everywhere keeps repeated runs byte-identical.

/// Format `x` with 6 significant digits, `%.6g` style: fixed notation for
/// moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn sig6(x: f64) -> String {
    sig(x, 6)
}

/// Format `x` with `digits` significant digits.
pub fn sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }

    // Round to `digits` significant digits via scientific formatting, then
    // decide presentation off the rounded exponent.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = split_sci(&sci);
    if (-4..6).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x_rounded(&mantissa, exp)))
    } else {
        let m = trim_zeros(&mantissa);
        format!("{}e{}", m, exp)
    }
}

fn split_sci(s: &str) -> (String, i32) {
    let (m, e) = s.split_once('e').expect("scientific format");
    (m.to_string(), e.parse::<i32>().expect("exponent"))
}

fn x_rounded(mantissa: &str, exp: i32) -> f64 {
    format!("{mantissa}e{exp}").parse::<f64>().expect("rounded value")
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0');
    t.trim_end_matches('.').to_string()
}
