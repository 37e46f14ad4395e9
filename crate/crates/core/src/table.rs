//! The published grid of `max_n |P[X = n] - P[S = n]|` and its decay factors.
//!
//! The printed grid is labelled by the maximum number of parts `m`, but its
//! values are those of the rectangle with `m - 1` parts: every printed
//! scientific-notation cell agrees with that computation to five significant
//! digits, while evaluating at `m` itself is off by a factor of about
//! `(m - 1) / m`. [`Indexing`] selects between the two readings.

use crate::distributions::{error_decomposition, RectSpec};

/// Part widths `l` of the grid rows.
pub const WIDTHS: [usize; 7] = [1, 2, 4, 8, 16, 32, 64];
/// Column labels `m`.
pub const COLUMNS: [usize; 2] = [10, 20];

/// Absolute tolerance for cells printed with four decimals.
pub const FIXED_ABS_TOL: f64 = 5e-5;
/// Relative tolerance for cells printed in scientific notation.
pub const SCIENTIFIC_REL_TOL: f64 = 1e-3;
/// Absolute tolerance for decay factors.
pub const FACTOR_ABS_TOL: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Printed {
    /// Four decimal places, e.g. `0.0471`.
    Fixed(f64),
    /// Scientific notation with five significant digits, e.g. `5.5909e-4`.
    Scientific(f64),
}

impl Printed {
    pub fn value(self) -> f64 {
        match self {
            Printed::Fixed(v) | Printed::Scientific(v) => v,
        }
    }

    pub fn tolerance(self) -> Tolerance {
        match self {
            Printed::Fixed(_) => Tolerance::Absolute(FIXED_ABS_TOL),
            Printed::Scientific(_) => Tolerance::Relative(SCIENTIFIC_REL_TOL),
        }
    }
}

use Printed::{Fixed, Scientific};

/// Printed cells, indexed `[column][row]`.
pub const PRINTED_CELLS: [[Printed; 7]; 2] = [
    [
        Fixed(0.0471),
        Fixed(0.0191),
        Fixed(0.0064),
        Fixed(0.0019),
        Scientific(5.5909e-4),
        Scientific(1.4871e-4),
        Scientific(3.8399e-5),
    ],
    [
        Fixed(0.0240),
        Fixed(0.0093),
        Fixed(0.0031),
        Scientific(9.5016e-4),
        Scientific(2.6494e-4),
        Scientific(7.0291e-5),
        Scientific(1.8126e-5),
    ],
];

/// Printed decay factors `cell(l/2) / cell(l)`, indexed `[column][row]`; the
/// first row has none.
pub const PRINTED_FACTORS: [[Option<f64>; 7]; 2] = [
    [
        None,
        Some(2.46),
        Some(2.94),
        Some(3.25),
        Some(3.56),
        Some(3.75),
        Some(3.82),
    ],
    [
        None,
        Some(2.57),
        Some(2.96),
        Some(3.30),
        Some(3.58),
        Some(3.76),
        Some(3.87),
    ],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Indexing {
    /// Column `m` is evaluated with `m - 1` parts, which reproduces the printed values.
    #[default]
    Printed,
    /// Column `m` is evaluated with `m` parts.
    Literal,
}

impl Indexing {
    pub fn parts_for(self, column: usize) -> usize {
        match self {
            Indexing::Printed => column - 1,
            Indexing::Literal => column,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub l: usize,
    /// Column label.
    pub m: usize,
    /// Maximum number of parts actually evaluated.
    pub parts: usize,
    pub max_abs_diff: f64,
    /// `max_abs_diff` of the previous row over this one.
    pub factor: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub indexing: Indexing,
    /// Cells indexed `[column][row]`.
    pub cells: Vec<Vec<Cell>>,
}

/// Computes the full grid.
pub fn compute(indexing: Indexing) -> Table {
    let cells = COLUMNS
        .iter()
        .map(|&m| {
            let parts = indexing.parts_for(m);
            let mut prev: Option<f64> = None;
            WIDTHS
                .iter()
                .map(|&l| {
                    let spec = RectSpec::rectangle(l, parts).expect("grid parameters are valid");
                    let diff = error_decomposition(&spec)
                        .expect("grid widths are positive")
                        .max_abs_diff;
                    let cell = Cell {
                        l,
                        m,
                        parts,
                        max_abs_diff: diff,
                        factor: prev.map(|p| p / diff),
                    };
                    prev = Some(diff);
                    cell
                })
                .collect()
        })
        .collect();
    Table { indexing, cells }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    Absolute(f64),
    Relative(f64),
}

impl Tolerance {
    /// Deviation of `computed` from `expected` in this tolerance's terms.
    pub fn deviation(self, computed: f64, expected: f64) -> f64 {
        match self {
            Tolerance::Absolute(_) => (computed - expected).abs(),
            Tolerance::Relative(_) => (computed / expected - 1.0).abs(),
        }
    }

    pub fn limit(self) -> f64 {
        match self {
            Tolerance::Absolute(t) | Tolerance::Relative(t) => t,
        }
    }

    pub fn accepts(self, computed: f64, expected: f64) -> bool {
        self.deviation(computed, expected) <= self.limit()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Cell,
    Factor,
}

/// One comparison of a computed value against the printed grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckItem {
    pub kind: CheckKind,
    pub l: usize,
    pub m: usize,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: Tolerance,
    pub deviation: f64,
    pub passed: bool,
}

/// Compares every cell and decay factor against the printed grid.
pub fn check(table: &Table) -> Vec<CheckItem> {
    let mut items = Vec::new();
    for (col, cells) in table.cells.iter().enumerate() {
        for (row, cell) in cells.iter().enumerate() {
            let printed = PRINTED_CELLS[col][row];
            items.push(item(
                CheckKind::Cell,
                cell,
                cell.max_abs_diff,
                printed.value(),
                printed.tolerance(),
            ));
        }
        for (row, cell) in cells.iter().enumerate() {
            if let (Some(computed), Some(expected)) = (cell.factor, PRINTED_FACTORS[col][row]) {
                items.push(item(
                    CheckKind::Factor,
                    cell,
                    computed,
                    expected,
                    Tolerance::Absolute(FACTOR_ABS_TOL),
                ));
            }
        }
    }
    items
}

fn item(
    kind: CheckKind,
    cell: &Cell,
    computed: f64,
    expected: f64,
    tolerance: Tolerance,
) -> CheckItem {
    CheckItem {
        kind,
        l: cell.l,
        m: cell.m,
        computed,
        expected,
        tolerance,
        deviation: tolerance.deviation(computed, expected),
        passed: tolerance.accepts(computed, expected),
    }
}
