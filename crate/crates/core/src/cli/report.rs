//! Verification reports and their three output formats.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::cli::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Numeric,
    Symbolic,
    Both,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Numeric => "numeric",
            Method::Symbolic => "symbolic",
            Method::Both => "both",
        }
    }
}

/// One identity at one weight. `lhs` and `rhs` are values at `T = 0`;
/// `residual` is the largest `|lhs − rhs|` over the `T`-coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: String,
    pub weight: u32,
    pub digits: u32,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub pass: bool,
    pub method: Method,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn write_reports(
    out: &mut dyn Write,
    reports: &[VerifyReport],
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, reports)
                .map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                w.serialize(r).map_err(|e| CliError::Io(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{} {} w={} D={} residual={} method={} {}ms",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.identity,
                    r.weight,
                    r.digits,
                    r.residual,
                    r.method.label(),
                    r.elapsed_ms
                )?;
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            writeln!(out, "{} checked, {} failed", reports.len(), failed)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerifyReport {
        VerifyReport {
            identity: "KT-main".into(),
            weight: 4,
            digits: 40,
            lhs: "1.0".into(),
            rhs: "1.0".into(),
            residual: "2.000e-42".into(),
            pass: true,
            method: Method::Both,
            elapsed_ms: 12,
        }
    }

    #[test]
    fn json_round_trip() {
        let r = vec![sample()];
        let mut buf = Vec::new();
        write_reports(&mut buf, &r, Format::Json).unwrap();
        let back: Vec<VerifyReport> = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_columns_follow_the_schema() {
        let mut buf = Vec::new();
        write_reports(&mut buf, &[sample()], Format::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(
            header,
            "identity,weight,digits,lhs,rhs,residual,pass,method,elapsed_ms"
        );
        assert!(text.lines().nth(1).unwrap().ends_with(",true,both,12"));
    }
}
