use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::run::SweepRow;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "cycle,orientation,n_phi0,theta_eta,gamma,alpha,efficiency,status";

const SIGNIFICANT_DIGITS: usize = 12;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros
/// dropped, exponent form outside `1e-4 <= |v| < 1e12`.
pub fn format_g12(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa.to_string()), exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn row_line(row: &SweepRow) -> String {
    let p = &row.point;
    format!(
        "{},{},{},{},{},{},{},{}",
        p.cycle.as_str(),
        p.orientation.as_str(),
        format_g12(p.n_phi0),
        format_g12(p.theta_eta),
        format_g12(p.gamma),
        format_g12(p.alpha),
        row.efficiency.map(format_g12).unwrap_or_default(),
        row.status,
    )
}

pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::Validation("no rows to write".to_string()));
    }
    out.write_all(CSV_HEADER.as_bytes())?;
    out.write_all(b"\n")?;
    for row in rows {
        out.write_all(row_line(row).as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn csv_string(rows: &[SweepRow]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is ASCII"))
}

pub fn emit_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    let file = File::create(path)?;
    write_csv(rows, BufWriter::new(file))
}
