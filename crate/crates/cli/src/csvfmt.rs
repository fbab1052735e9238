//! Deterministic number formatting for CSV output: '.' decimal separator,
//! 12 significant digits, fixed notation for moderate exponents and
//! e-notation otherwise, trailing zeros trimmed.

pub fn fmt_g12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{x:.11e}");
    let (_, exp) = sci.split_once('e').expect("{:e} always carries an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let (mantissa, _) = sci.split_once('e').unwrap();
        format!("{}e{}", trim_zeros(mantissa.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Optional value: empty field when absent.
pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_g12).unwrap_or_default()
}

/// Effective-potential field 1/w, empty where the landscape is nonpositive.
/// Values inside rounding distance of zero count as nonpositive so boundary
/// zeros do not emit spurious 1/epsilon spikes.
pub fn fmt_effective(w: f64) -> String {
    if w > 1e-12 {
        fmt_g12(1.0 / w)
    } else {
        String::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_g12(1.5198658211001), "1.5198658211");
        assert_eq!(fmt_g12(34.40680735069181), "34.4068073507");
        assert_eq!(fmt_g12(-0.25), "-0.25");
        assert_eq!(fmt_g12(0.0), "0");
    }

    #[test]
    fn scientific_for_extreme_magnitudes() {
        assert_eq!(fmt_g12(-1.3707842370868573e-5), "-1.37078423709e-5");
        assert_eq!(fmt_g12(1.0e-9), "1e-9");
        assert_eq!(fmt_g12(3.25e13), "3.25e13");
        assert_eq!(fmt_g12(1.2e-4), "0.00012");
    }

    #[test]
    fn round_trips_through_parse() {
        for &x in &[1.5198658211, 0.1, 6.0, 1e-7, 123456.789012] {
            let s = fmt_g12(x);
            let back: f64 = s.parse().unwrap();
            assert!((back - x).abs() <= 1e-11 * x.abs().max(1.0), "{x} -> {s}");
        }
    }
}
