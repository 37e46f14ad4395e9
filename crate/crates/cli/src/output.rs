use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

/// Where and how a command writes its result.
#[derive(Debug, Clone, Args)]
pub struct OutputSpec {
    /// Output format; each command has its own default.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    /// Significant digits for floats in table output.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u8).range(4..=17))]
    pub digits: u8,
}

impl OutputSpec {
    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    pub fn writer(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.output {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

/// Shortest string that parses back to the same `f64`.
pub fn float(x: f64) -> String {
    format!("{x:?}")
}

/// `%g`-style rendering with `digits` significant digits.
pub fn float_sig(x: f64, digits: u8) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits as usize;
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if exp < -4 || exp >= digits as i32 {
        sci
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    }
}

/// Left-aligned text table with a header row.
pub fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_round_trip() {
        assert_eq!(float(0.25), "0.25");
        assert_eq!(float(1.0), "1.0");
        assert_eq!(float(1e-20), "1e-20");
        let third = 1.0 / 3.0;
        assert_eq!(float(third).parse::<f64>().unwrap(), third);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(float_sig(0.04710432974559687, 4), "0.04710");
        assert_eq!(float_sig(5.590881e-4, 5), "0.00055909");
        assert_eq!(float_sig(5.590881e-5, 5), "5.5909e-5");
        assert_eq!(float_sig(3.25317, 4), "3.253");
        assert_eq!(float_sig(123456.0, 4), "1.235e5");
        assert_eq!(float_sig(0.0, 6), "0");
    }

    #[test]
    fn table_alignment() {
        let mut buf = Vec::new();
        write_table(
            &mut buf,
            &["n", "value"],
            &[
                vec!["1".into(), "0.5".into()],
                vec!["10".into(), "0.25".into()],
            ],
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n   value\n1   0.5\n10  0.25\n"
        );
    }
}
