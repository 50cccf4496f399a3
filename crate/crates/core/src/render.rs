//! Decimal rendering of bound reports as CSV, markdown and plain text.

use crate::volume::BoundReport;

/// Largest number of significant digits accepted by [`format_sig`].
pub const MAX_DIGITS: usize = 15;
/// Linear values are printed only when `|log10| < LINEAR_LIMIT`.
pub const LINEAR_LIMIT: f64 = 300.0;

pub const COLUMNS: [&str; 12] = [
    "n", "d0", "k0", "C1", "C2", "R_G", "r0", "L", "log10_VolUn", "log10_Vball", "log10_C", "C",
];

/// `%g`-style rendering with `digits` significant digits and trailing zeros
/// removed.
pub fn format_sig(x: f64, digits: usize) -> String {
    let digits = digits.clamp(1, MAX_DIGITS);
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// A positive quantity given by its natural log: linear when representable
/// in print, otherwise `10^<log10>`.
pub fn format_from_log(ln: f64, digits: usize) -> String {
    let l10 = ln / std::f64::consts::LN_10;
    if l10.abs() < LINEAR_LIMIT {
        format_sig(ln.exp(), digits)
    } else {
        format!("10^{}", format_sig(l10, digits))
    }
}

pub fn row(r: &BoundReport, digits: usize) -> Vec<String> {
    let f = |x: f64| format_sig(x, digits);
    vec![
        r.n.to_string(),
        r.d0.to_string(),
        f(r.k0),
        f(r.c1),
        f(r.c2),
        f(r.r_g),
        f(r.r0),
        f(r.l),
        f(r.log10_vol_un()),
        f(r.log10_v_ball()),
        f(r.log10_c()),
        format_from_log(r.log_C, digits),
    ]
}

pub fn csv(reports: &[BoundReport], digits: usize) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for r in reports {
        out.push_str(&row(r, digits).join(","));
        out.push('\n');
    }
    out
}

pub fn markdown(reports: &[BoundReport], digits: usize) -> String {
    let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
    let header: Vec<String> = COLUMNS.iter().map(|c| c.to_string()).collect();
    let mut out = line(&header);
    out.push_str(&line(&vec!["---".to_string(); COLUMNS.len()]));
    for r in reports {
        out.push_str(&line(&row(r, digits)));
    }
    out
}

/// Whitespace-aligned columns.
pub fn plain_table(reports: &[BoundReport], digits: usize) -> String {
    let rows: Vec<Vec<String>> = std::iter::once(COLUMNS.iter().map(|c| c.to_string()).collect())
        .chain(reports.iter().map(|r| row(r, digits)))
        .collect();
    let widths: Vec<usize> = (0..COLUMNS.len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// One `key: value` line per report field.
pub fn plain_report(r: &BoundReport, digits: usize) -> String {
    let f = |x: f64| format_sig(x, digits);
    let source = match r.radius_source {
        crate::volume::RadiusSource::Printed => "printed",
        crate::volume::RadiusSource::Computed => "computed",
    };
    let lines = [
        ("n", r.n.to_string()),
        ("d0", r.d0.to_string()),
        ("k0", f(r.k0)),
        ("C1", f(r.c1)),
        ("C2", f(r.c2)),
        ("R_G", f(r.r_g)),
        ("r0", format!("{} ({source})", f(r.r0))),
        ("L", f(r.l)),
        ("log_vol_Un", f(r.log_vol_Un)),
        ("log_V_ball", f(r.log_V_ball)),
        ("log_C", f(r.log_C)),
        ("C", format_from_log(r.log_C, digits)),
        ("crosscheck_residual", f(r.crosscheck_residual)),
        ("limit_coeff", f(r.limit_coeff)),
        ("limit_coeff_deviation", f(r.limit_coeff_deviation)),
    ];
    lines.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::volume::{orbifold_bound, BoundOptions};

    #[test]
    fn sig_formatting() {
        assert_eq!(format_sig(14.25, 6), "14.25");
        assert_eq!(format_sig(2.918039464e-9, 6), "2.91804e-9");
        assert_eq!(format_sig(0.0016768155827788, 6), "0.00167682");
        assert_eq!(format_sig(1234567.0, 6), "1.23457e6");
        assert_eq!(format_sig(999999.6, 6), "1e6");
        assert_eq!(format_sig(-0.5, 3), "-0.5");
        assert_eq!(format_sig(1.0, 6), "1");
        assert_eq!(format_sig(std::f64::consts::PI, 15), "3.14159265358979");
        assert_eq!(format_sig(0.0, 6), "0");
    }

    #[test]
    fn log_strings() {
        assert_eq!(format_from_log(2f64.ln(), 6), "2");
        assert_eq!(format_from_log(-1000.0 * std::f64::consts::LN_10, 6), "10^-1000");
    }

    #[test]
    fn csv_shape() {
        let reps: Vec<_> = (1..=3).map(|n| orbifold_bound(n, &BoundOptions::default()).unwrap()).collect();
        let out = csv(&reps, 6);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "n,d0,k0,C1,C2,R_G,r0,L,log10_VolUn,log10_Vball,log10_C,C");
        assert_eq!(lines.len(), 4);
        assert!(lines[2].starts_with("2,8,23.25,1,1,"));
        assert!(lines[2].ends_with(",2.91804e-9"));
        assert!(lines.iter().all(|l| l.split(',').count() == 12));
        let md = markdown(&reps, 6);
        assert_eq!(md.lines().nth(1).unwrap().matches("---").count(), 12);
    }
}
