use std::io::{self, Write};

use clap::Args;
use num_bigint::BigUint;
use serde::Serialize;

use rectcomp::table::{self, CheckKind, Indexing, Tolerance};
use rectcomp::{
    count, count_support, enumerate, enumerate_support, normal_distance, pmf_s, pmf_x, Error,
    PartBounds, RectSpec, UpperBound, DEFAULT_ENUMERATION_GUARD,
};

use crate::output::{float, float_sig, write_table, Format, OutputSpec};

/// Environment variable overriding the enumeration guard of `count --verify`.
pub const GUARD_ENV: &str = "RECTCOMP_ENUM_GUARD";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Guard(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Guard(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

pub type CmdResult = Result<Status, CliError>;

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    /// Part width l; each entry sums the l+1 entries above it.
    #[arg(long)]
    pub l: usize,
    /// Last row index to emit.
    #[arg(long = "rows")]
    pub k_max: usize,
    #[command(flatten)]
    pub out: OutputSpec,
}

pub fn triangle(args: &TriangleArgs, out: &mut dyn Write) -> CmdResult {
    let rows: Vec<Vec<String>> = rectcomp::RowBuilder::new(args.l)
        .take(args.k_max + 1)
        .map(|row| row.entries().iter().map(BigUint::to_string).collect())
        .collect();
    match args.out.format_or(Format::Csv) {
        Format::Csv => {
            writeln!(out, "k,n,coeff")?;
            for (k, row) in rows.iter().enumerate() {
                for (n, coeff) in row.iter().enumerate() {
                    writeln!(out, "{k},{n},{coeff}")?;
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                k: usize,
                entries: &'a [String],
            }
            let rows: Vec<Row> = rows
                .iter()
                .enumerate()
                .map(|(k, entries)| Row { k, entries })
                .collect();
            write_json(out, &rows)?;
        }
        Format::Table => {
            for row in &rows {
                writeln!(out, "{}", row.join(" "))?;
            }
        }
    }
    Ok(Status::Ok)
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Target integer n.
    #[arg(long)]
    pub n: usize,
    /// Number of parts k.
    #[arg(long)]
    pub k: usize,
    /// Lower part bound a.
    #[arg(long, conflicts_with = "support")]
    pub a: Option<usize>,
    /// Upper part bound b, or "inf".
    #[arg(long, conflicts_with = "support")]
    pub b: Option<String>,
    /// Comma-separated set of allowed part sizes.
    #[arg(long, value_delimiter = ',')]
    pub support: Option<Vec<usize>>,
    /// Cross-check the count by explicit enumeration.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub out: OutputSpec,
}

fn parse_upper(b: Option<&str>) -> Result<UpperBound, CliError> {
    match b {
        None => Ok(UpperBound::Unbounded),
        Some(s) if s.eq_ignore_ascii_case("inf") => Ok(UpperBound::Unbounded),
        Some(s) => s.parse().map(UpperBound::Finite).map_err(|_| {
            CliError::Usage(format!(
                "invalid upper bound {s:?}: expected an integer or \"inf\""
            ))
        }),
    }
}

fn enumeration_guard() -> Result<u64, CliError> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v.parse().map_err(|_| {
            CliError::Usage(format!(
                "{GUARD_ENV} must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_ENUMERATION_GUARD),
    }
}

pub fn count_cmd(args: &CountArgs, out: &mut dyn Write) -> CmdResult {
    let counted = match &args.support {
        Some(support) => count_support(args.n, args.k, support)?,
        None => {
            let bounds = PartBounds::new(args.a.unwrap_or(0), parse_upper(args.b.as_deref())?)?;
            count(args.n, args.k, bounds)
        }
    };
    let enumerated = if args.verify {
        let guard = enumeration_guard()?;
        let listed = match &args.support {
            Some(support) => enumerate_support(args.n, args.k, support, guard)?.count(),
            None => {
                let bounds = PartBounds::new(args.a.unwrap_or(0), parse_upper(args.b.as_deref())?)?;
                enumerate(args.n, args.k, bounds, guard)?.count()
            }
        };
        Some(BigUint::from(listed))
    } else {
        None
    };
    let agrees = enumerated.as_ref().map(|e| *e == counted);

    match args.out.format_or(Format::Table) {
        Format::Json => {
            #[derive(Serialize)]
            struct Report {
                count: String,
                #[serde(skip_serializing_if = "Option::is_none")]
                enumerated: Option<String>,
                #[serde(skip_serializing_if = "Option::is_none")]
                agrees: Option<bool>,
            }
            write_json(
                out,
                &Report {
                    count: counted.to_string(),
                    enumerated: enumerated.as_ref().map(BigUint::to_string),
                    agrees,
                },
            )?;
        }
        Format::Csv => {
            writeln!(out, "count,enumerated,agrees")?;
            writeln!(
                out,
                "{},{},{}",
                counted,
                enumerated
                    .as_ref()
                    .map(BigUint::to_string)
                    .unwrap_or_default(),
                agrees.map(|a| a.to_string()).unwrap_or_default()
            )?;
        }
        Format::Table => {
            writeln!(out, "{counted}")?;
            if let Some(e) = &enumerated {
                let verdict = if agrees == Some(true) {
                    "agrees"
                } else {
                    "DISAGREES"
                };
                writeln!(out, "enumeration: {e} ({verdict})")?;
            }
        }
    }
    Ok(if agrees == Some(false) {
        Status::CheckFailed
    } else {
        Status::Ok
    })
}

#[derive(Debug, Args)]
pub struct DistArgs {
    /// Lower part bound a.
    #[arg(long, default_value_t = 0)]
    pub a: usize,
    /// Upper part bound b.
    #[arg(long)]
    pub b: usize,
    /// Maximum number of parts m.
    #[arg(long)]
    pub m: usize,
    /// Omit the normal reference column (required when a = b).
    #[arg(long)]
    pub no_normal: bool,
    #[command(flatten)]
    pub out: OutputSpec,
}

pub fn dist(args: &DistArgs, out: &mut dyn Write) -> CmdResult {
    let spec = RectSpec::new(args.a, args.b, args.m)?;
    let normal = if args.no_normal {
        None
    } else {
        if args.a == args.b {
            return Err(Error::DegenerateVariance(args.a).into());
        }
        Some(spec.normal_ref())
    };
    let x = pmf_x(&spec);
    let s = pmf_s(&spec);
    let lo = *x.support().start().min(s.support().start());
    let hi = *x.support().end().max(s.support().end());
    let rows: Vec<(i64, f64, f64, Option<f64>)> = (lo..=hi)
        .map(|n| {
            (
                n,
                x.probability_f64(n),
                s.probability_f64(n),
                normal.map(|r| r.cell_mass(n)),
            )
        })
        .collect();

    match args.out.format_or(Format::Csv) {
        Format::Csv => {
            writeln!(
                out,
                "{}",
                if normal.is_some() {
                    "n,pmf_x,pmf_s,normal"
                } else {
                    "n,pmf_x,pmf_s"
                }
            )?;
            for (n, px, ps, nm) in &rows {
                match nm {
                    Some(nm) => writeln!(out, "{n},{},{},{}", float(*px), float(*ps), float(*nm))?,
                    None => writeln!(out, "{n},{},{}", float(*px), float(*ps))?,
                }
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                n: i64,
                pmf_x: f64,
                pmf_s: f64,
                #[serde(skip_serializing_if = "Option::is_none")]
                normal: Option<f64>,
            }
            let rows: Vec<Row> = rows
                .iter()
                .map(|&(n, pmf_x, pmf_s, normal)| Row {
                    n,
                    pmf_x,
                    pmf_s,
                    normal,
                })
                .collect();
            write_json(out, &rows)?;
        }
        Format::Table => {
            let d = args.out.digits;
            let mut header = vec!["n", "pmf_x", "pmf_s"];
            if normal.is_some() {
                header.push("normal");
            }
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(n, px, ps, nm)| {
                    let mut row = vec![n.to_string(), float_sig(*px, d), float_sig(*ps, d)];
                    row.extend(nm.map(|v| float_sig(v, d)));
                    row
                })
                .collect();
            write_table(out, &header, &cells)?;
        }
    }
    Ok(Status::Ok)
}

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Compare against the published values and exit 1 on any mismatch.
    #[arg(long)]
    pub check: bool,
    /// Evaluate column m with m parts instead of the published m - 1.
    #[arg(long)]
    pub literal_m: bool,
    #[command(flatten)]
    pub out: OutputSpec,
}

pub fn table1(args: &Table1Args, out: &mut dyn Write) -> CmdResult {
    let indexing = if args.literal_m {
        Indexing::Literal
    } else {
        Indexing::Printed
    };
    let grid = table::compute(indexing);
    let d = args.out.digits;

    match args.out.format_or(Format::Table) {
        Format::Csv => {
            writeln!(out, "l,m,parts,max_abs_diff,factor")?;
            for cell in grid.cells.iter().flatten() {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    cell.l,
                    cell.m,
                    cell.parts,
                    float(cell.max_abs_diff),
                    cell.factor.map(float).unwrap_or_default()
                )?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Cell {
                l: usize,
                m: usize,
                parts: usize,
                max_abs_diff: f64,
                factor: Option<f64>,
            }
            let cells: Vec<Cell> = grid
                .cells
                .iter()
                .flatten()
                .map(|c| Cell {
                    l: c.l,
                    m: c.m,
                    parts: c.parts,
                    max_abs_diff: c.max_abs_diff,
                    factor: c.factor,
                })
                .collect();
            write_json(out, &cells)?;
        }
        Format::Table => {
            let mut header = vec!["l".to_string()];
            for (col, &m) in table::COLUMNS.iter().enumerate() {
                let parts = grid.cells[col][0].parts;
                header.push(format!("m={m} (parts={parts})"));
                header.push("factor".to_string());
            }
            let rows: Vec<Vec<String>> = (0..table::WIDTHS.len())
                .map(|row| {
                    let mut cells = vec![format!("l={}", table::WIDTHS[row])];
                    for col in 0..table::COLUMNS.len() {
                        let cell = &grid.cells[col][row];
                        cells.push(float_sig(cell.max_abs_diff, d));
                        cells.push(cell.factor.map(|f| format!("{f:.2}")).unwrap_or_default());
                    }
                    cells
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            write_table(out, &header, &rows)?;
        }
    }

    if !args.check {
        return Ok(Status::Ok);
    }
    let items = table::check(&grid);
    writeln!(out)?;
    for item in &items {
        let kind = match item.kind {
            CheckKind::Cell => "cell",
            CheckKind::Factor => "factor",
        };
        let tol = match item.tolerance {
            Tolerance::Absolute(t) => format!("abs<={t}"),
            Tolerance::Relative(t) => format!("rel<={t}"),
        };
        writeln!(
            out,
            "{} {kind} l={} m={} computed={} expected={} deviation={} {tol}",
            if item.passed { "PASS" } else { "FAIL" },
            item.l,
            item.m,
            float_sig(item.computed, d),
            item.expected,
            float_sig(item.deviation, 3),
        )?;
    }
    let failed = items.iter().filter(|i| !i.passed).count();
    writeln!(
        out,
        "{} of {} checks passed",
        items.len() - failed,
        items.len()
    )?;
    Ok(if failed == 0 {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

#[derive(Debug, Args)]
pub struct NormalityArgs {
    /// Lower part bound a.
    #[arg(long, default_value_t = 0)]
    pub a: usize,
    /// Upper part bound b.
    #[arg(long)]
    pub b: usize,
    /// Comma-separated list of maximum part counts.
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    /// Exit 1 unless the KS distance strictly decreases along the m list.
    #[arg(long)]
    pub assert_decreasing: bool,
    #[command(flatten)]
    pub out: OutputSpec,
}

pub fn normality(args: &NormalityArgs, out: &mut dyn Write) -> CmdResult {
    let reports = args
        .m
        .iter()
        .map(|&m| Ok((m, normal_distance(&RectSpec::new(args.a, args.b, m)?)?)))
        .collect::<Result<Vec<_>, Error>>()?;

    match args.out.format_or(Format::Csv) {
        Format::Csv => {
            writeln!(out, "m,mu,sigma2,ks,max_density_diff,peak")?;
            for (m, r) in &reports {
                writeln!(
                    out,
                    "{m},{},{},{},{},{}",
                    float(r.normal.mu),
                    float(r.normal.sigma2),
                    float(r.ks),
                    float(r.max_density_diff),
                    r.peak
                )?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                m: usize,
                mu: f64,
                sigma2: f64,
                ks: f64,
                max_density_diff: f64,
                peak: i64,
            }
            let rows: Vec<Row> = reports
                .iter()
                .map(|(m, r)| Row {
                    m: *m,
                    mu: r.normal.mu,
                    sigma2: r.normal.sigma2,
                    ks: r.ks,
                    max_density_diff: r.max_density_diff,
                    peak: r.peak,
                })
                .collect();
            write_json(out, &rows)?;
        }
        Format::Table => {
            let d = args.out.digits;
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|(m, r)| {
                    vec![
                        m.to_string(),
                        float_sig(r.normal.mu, d),
                        float_sig(r.normal.sigma2, d),
                        float_sig(r.ks, d),
                        float_sig(r.max_density_diff, d),
                        r.peak.to_string(),
                    ]
                })
                .collect();
            write_table(
                out,
                &["m", "mu", "sigma2", "ks", "max_density_diff", "peak"],
                &rows,
            )?;
        }
    }

    let decreasing = reports.windows(2).all(|w| w[1].1.ks < w[0].1.ks);
    Ok(if args.assert_decreasing && !decreasing {
        Status::CheckFailed
    } else {
        Status::Ok
    })
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// Lower part bound a.
    #[arg(long, default_value_t = 0)]
    pub a: usize,
    /// Upper part bound b.
    #[arg(long)]
    pub b: usize,
    /// Maximum number of parts m.
    #[arg(long)]
    pub m: usize,
    /// Number of compositions to draw.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub count: u64,
    /// Generator seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputSpec,
}

pub fn sample(args: &SampleArgs, out: &mut dyn Write) -> CmdResult {
    let spec = RectSpec::new(args.a, args.b, args.m)?;
    let draws = rectcomp::CompositionSampler::new(spec, args.seed).take(args.count as usize);
    let join = |parts: &[usize]| {
        parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    match args.out.format_or(Format::Csv) {
        Format::Csv | Format::Table => {
            writeln!(out, "index,sum,parts")?;
            for (i, c) in draws.enumerate() {
                writeln!(out, "{i},{},{}", c.sum(), join(c.parts()))?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Draw {
                index: usize,
                sum: usize,
                parts: Vec<usize>,
            }
            let rows: Vec<Draw> = draws
                .enumerate()
                .map(|(index, c)| Draw {
                    index,
                    sum: c.sum(),
                    parts: c.into_parts(),
                })
                .collect();
            write_json(out, &rows)?;
        }
    }
    Ok(Status::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_bound_parsing() {
        assert_eq!(parse_upper(Some("inf")).unwrap(), UpperBound::Unbounded);
        assert_eq!(parse_upper(Some("INF")).unwrap(), UpperBound::Unbounded);
        assert_eq!(parse_upper(Some("7")).unwrap(), UpperBound::Finite(7));
        assert_eq!(parse_upper(None).unwrap(), UpperBound::Unbounded);
        assert_eq!(parse_upper(Some("x")).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn library_errors_map_to_exit_codes() {
        let guard = Error::GuardExceeded {
            states: BigUint::from(10u32),
            guard: 1,
        };
        assert_eq!(CliError::from(guard).exit_code(), 3);
        assert_eq!(CliError::from(Error::DegenerateVariance(1)).exit_code(), 2);
    }
}
