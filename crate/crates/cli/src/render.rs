//! Report envelope and the three output formats.

use clap::ValueEnum;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

/// A command result that can be printed in every format.
pub trait Render: Serialize {
    fn csv(&self) -> Result<String, CliError>;
    fn pretty(&self) -> String;
}

#[derive(Serialize)]
pub struct Envelope<'a, C: Serialize, R: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: &'a C,
    pub pass: bool,
    pub result: &'a R,
}

pub fn render<C: Serialize, R: Render>(
    format: Format,
    command: &'static str,
    config: &C,
    pass: bool,
    result: &R,
) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let env = Envelope {
                tool: env!("CARGO_BIN_NAME"),
                version: env!("CARGO_PKG_VERSION"),
                command,
                config,
                pass,
                result,
            };
            let mut s = serde_json::to_string_pretty(&env)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => result.csv(),
        Format::Pretty => Ok(result.pretty()),
    }
}

/// Writes `rows` (header first) as CSV.
pub fn csv_rows<I, R, S>(rows: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = S>,
    S: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// `1 + 2q + q^2`.
pub fn series(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| match (d, c) {
            (0, c) => c.to_string(),
            (d, 1) => q_power(d),
            (d, c) => format!("{c}{}", q_power(d)),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn q_power(d: usize) -> String {
    if d == 1 {
        "q".into()
    } else {
        format!("q^{d}")
    }
}
