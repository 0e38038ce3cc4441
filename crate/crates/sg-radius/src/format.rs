//! Numeric text formatting shared by the CSV/JSON emitters and the CLI.

/// 17 significant digits, scientific notation; round-trips any f64.
pub fn fmt_g17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Human-facing 6-decimal form.
pub fn fmt_f6(x: f64) -> String {
    format!("{x:.6}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g17_round_trips() {
        for &x in &[0.1876918171442589f64, 1.0, -0.5, 3.333e-9, 0.43473049731694737] {
            let s = fmt_g17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn f6_matches_quoting_precision() {
        assert_eq!(fmt_f6(0.73830927372330937), "0.738309");
        assert_eq!(fmt_f6(0.3012208636084862), "0.301221");
    }
}
