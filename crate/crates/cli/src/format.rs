//! Deterministic float formatting for CSV output: 12 significant digits,
//! trailing zeros trimmed, scientific notation outside a readable range.

const SIGNIFICANT_DIGITS: usize = 12;

/// Format with 12 significant digits, `%g`-style.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-4..SIGNIFICANT_DIGITS as i32).contains(&exponent) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exponent).max(0) as usize;
        trim_trailing_zeros(format!("{x:.decimals$}"))
    } else {
        let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
        // Trim zeros inside the mantissa: "1.5000e-7" -> "1.5e-7".
        match s.split_once('e') {
            Some((mantissa, exp)) => {
                format!("{}e{}", trim_trailing_zeros(mantissa.to_string()), exp)
            }
            None => s,
        }
    }
}

fn trim_trailing_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// One CSV line from string cells, `,`-separated with `\n` terminator.
pub fn csv_line<I: IntoIterator<Item = String>>(cells: I) -> String {
    let mut line = cells.into_iter().collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}
