//! Closed-form divider costs for each adder family, the generic composition
//! rule, and the 32-bit comparison against published fast dividers.
//!
//! Rows are evaluated in real arithmetic and rounded up once at the end.
//! Under [`Rounding::CeilRealLog`] the floor brackets some rows put around
//! logarithms are ignored; [`Rounding::StrictFloor`] honours them. Logs
//! without brackets are always real-valued. `ω` of a fractional argument is
//! taken at its ceiling.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::divider::DividerKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CostError {
    #[error("unknown adder row `{0}`")]
    UnknownRow(String),
    #[error("radix must satisfy 2 < r <= n (got r={radix}, n={n})")]
    InvalidRadix { radix: u64, n: u64 },
    #[error("the higher-radix row needs a radix")]
    MissingRadix,
    #[error("n must be ≥ 1")]
    ZeroWidth,
    #[error("row {row} evaluates to a non-positive value at n={n}")]
    NonPositive { row: AdderRow, n: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Rounding {
    #[default]
    CeilRealLog,
    StrictFloor,
}

impl fmt::Display for Rounding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rounding::CeilRealLog => "ceil-real-log",
            Rounding::StrictFloor => "strict-floor",
        })
    }
}

impl FromStr for Rounding {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ceil-real-log" => Ok(Rounding::CeilRealLog),
            "strict-floor" => Ok(Rounding::StrictFloor),
            other => Err(format!("unknown rounding `{other}` (ceil-real-log | strict-floor)")),
        }
    }
}

/// A (TD, TC, QC) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Costs {
    pub toffoli_depth: u64,
    pub toffoli_count: u64,
    pub qubit_count: u64,
}

impl Costs {
    pub const fn new(toffoli_depth: u64, toffoli_count: u64, qubit_count: u64) -> Self {
        Costs {
            toffoli_depth,
            toffoli_count,
            qubit_count,
        }
    }
}

/// Costs of one adder at width n+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AdderCosts {
    pub toffoli_depth: u64,
    pub toffoli_count: u64,
    pub ancillas: u64,
}

/// Ones in the binary expansion of `n`, computed as `n - Σ_{y≥1} ⌊n / 2^y⌋`.
pub fn omega(n: u64) -> u64 {
    let mut halves = 0;
    let mut p = n >> 1;
    while p > 0 {
        halves += p;
        p >>= 1;
    }
    n - halves
}

/// Divider cost from the cost of its adder.
///
/// Non-restoring: `n·TD_add + 3n + 1`, `n·TC_add + 3n + 1`, `4n + 2 + Anc`.
/// Restoring: `n·TD_add + 3n² + n`, `n·TC_add + 3n² + n`, `4n + 1 + Anc`.
pub fn compose(adder: AdderCosts, n: u64, kind: DividerKind) -> Costs {
    let extra = match kind {
        DividerKind::NonRestoring => 3 * n + 1,
        DividerKind::Restoring => 3 * n * n + n,
    };
    let qc_base = match kind {
        DividerKind::NonRestoring => 4 * n + 2,
        DividerKind::Restoring => 4 * n + 1,
    };
    Costs {
        toffoli_depth: n * adder.toffoli_depth + extra,
        toffoli_count: n * adder.toffoli_count + extra,
        qubit_count: qc_base + adder.ancillas,
    }
}

/// The adder families with a published divider cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdderRow {
    Vbe,
    Cuccaro,
    DraperCla,
    TakahashiLowAncilla,
    TakahashiRca,
    TakahashiCombination,
    WangRca,
    GidneyRca,
    GayathriRca,
    HigherRadix,
    Ling,
}

impl AdderRow {
    pub const ALL: [AdderRow; 11] = [
        AdderRow::Vbe,
        AdderRow::Cuccaro,
        AdderRow::DraperCla,
        AdderRow::TakahashiLowAncilla,
        AdderRow::TakahashiRca,
        AdderRow::TakahashiCombination,
        AdderRow::WangRca,
        AdderRow::GidneyRca,
        AdderRow::GayathriRca,
        AdderRow::HigherRadix,
        AdderRow::Ling,
    ];

    pub fn id(self) -> &'static str {
        match self {
            AdderRow::Vbe => "vbe",
            AdderRow::Cuccaro => "cuccaro",
            AdderRow::DraperCla => "draper_cla",
            AdderRow::TakahashiLowAncilla => "takahashi_low_ancilla",
            AdderRow::TakahashiRca => "takahashi_rca",
            AdderRow::TakahashiCombination => "takahashi_combination",
            AdderRow::WangRca => "wang_rca",
            AdderRow::GidneyRca => "gidney_rca",
            AdderRow::GayathriRca => "gayathri_rca",
            AdderRow::HigherRadix => "higher_radix",
            AdderRow::Ling => "ling",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            AdderRow::Vbe => "VBE RCA",
            AdderRow::Cuccaro => "Cuccaro RCA",
            AdderRow::DraperCla => "Draper CLA",
            AdderRow::TakahashiLowAncilla => "Takahashi Low-ancilla",
            AdderRow::TakahashiRca => "Takahashi RCA",
            AdderRow::TakahashiCombination => "Takahashi C",
            AdderRow::WangRca => "Wang RCA",
            AdderRow::GidneyRca => "Gidney RCA",
            AdderRow::GayathriRca => "Gayathri RCA",
            AdderRow::HigherRadix => "Higher Radix",
            AdderRow::Ling => "Ling",
        }
    }

    pub fn needs_radix(self) -> bool {
        self == AdderRow::HigherRadix
    }
}

impl fmt::Display for AdderRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for AdderRow {
    type Err = CostError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AdderRow::ALL
            .into_iter()
            .find(|r| r.id() == s)
            .ok_or_else(|| CostError::UnknownRow(s.to_string()))
    }
}

/// Rounds up, ignoring float noise just above an integer.
fn settle(x: f64) -> i64 {
    let tol = 1e-9 * x.abs().max(1.0);
    (x - tol).ceil() as i64
}

/// Real-valued non-restoring (TD, TC, QC) for one row.
fn raw_nonrestoring(row: AdderRow, n: u64, radix: u64, rounding: Rounding) -> [f64; 3] {
    let nf = n as f64;
    let lg = |x: f64| x.log2();
    // a logarithm written inside floor brackets
    let flg = |x: f64| match rounding {
        Rounding::CeilRealLog => x.log2(),
        Rounding::StrictFloor => x.log2().floor(),
    };
    let om = |x: f64| omega(x.ceil() as u64) as f64;
    let poly = |a: f64, b: f64| a * nf * nf + b * nf + 1.0;

    match row {
        AdderRow::Vbe => [poly(4.0, 5.0), poly(4.0, 5.0), 5.0 * nf + 6.0],
        AdderRow::Cuccaro => [poly(2.0, 4.0), poly(2.0, 4.0), 4.0 * nf + 6.0],
        AdderRow::DraperCla => {
            let td = 11.0 * nf
                + nf * flg(nf)
                + nf * flg(nf + 1.0)
                + nf * flg(nf / 3.0)
                + nf * flg((nf + 1.0) / 3.0)
                + 1.0;
            let tc = 10.0 * nf * nf
                - 3.0 * nf * om(nf)
                - 3.0 * nf * om(nf + 1.0)
                - 3.0 * nf * flg(nf)
                - 3.0 * nf * flg(nf + 1.0)
                + 6.0 * nf
                + 1.0;
            let qc = 6.0 * nf - om(nf + 1.0) - flg(nf + 1.0) + 6.0;
            [td, tc, qc]
        }
        AdderRow::TakahashiLowAncilla => [
            30.0 * nf * lg(nf + 1.0) + 3.0 * nf + 1.0,
            poly(28.0, 31.0),
            4.0 * nf + (3.0 * nf + 3.0) / lg(nf + 1.0) + 4.0,
        ],
        AdderRow::TakahashiRca => [poly(2.0, 4.0), poly(2.0, 4.0), 4.0 * nf + 5.0],
        AdderRow::TakahashiCombination => [
            18.0 * nf * lg(nf + 1.0) + 3.0 * nf + 1.0,
            poly(7.0, 10.0),
            4.0 * nf + (3.0 * nf + 3.0) / lg(nf + 1.0) + 4.0,
        ],
        AdderRow::WangRca | AdderRow::GayathriRca => {
            [poly(1.0, 4.0), poly(1.0, 4.0), 5.0 * nf + 6.0]
        }
        AdderRow::GidneyRca => [poly(1.0, 4.0), poly(2.0, 3.0), 5.0 * nf + 4.0],
        AdderRow::HigherRadix => {
            let r = radix as f64;
            let td = 4.0 * nf * lg(nf + 1.0) + 3.0 * r * nf
                - 2.0 * nf * lg(r)
                - 2.0 * nf * lg(3.0 * r)
                + 2.0 * nf * lg(r - 2.0)
                + 5.0 * nf
                + 1.0;
            let tc = 8.0 * nf * nf
                - nf * (nf + 1.0) / r
                - ((n * n) % radix) as f64
                - 3.0 * nf * om((nf + 1.0) / r)
                - 3.0 * nf * lg(nf + 1.0)
                + 3.0 * nf * lg(r)
                + 8.0 * nf
                + 1.0;
            let qc = 6.0 * nf - lg(nf + 1.0) + (nf + 1.0) / r - om((nf + 1.0) / r) + lg(r) + 5.0;
            [td, tc, qc]
        }
        AdderRow::Ling => {
            let half = (nf + 1.0) / 2.0;
            let td = 12.0 * nf + 2.0 * nf * flg(half) + 2.0 * nf * flg((nf + 1.0) / 6.0) + 1.0;
            let tc = 13.0 * nf * nf - 6.0 * nf * om(half) - 6.0 * nf * flg(half) + 2.0 * nf + 1.0;
            let qc = 14.0 * nf - 6.0 * om(half) - 6.0 * flg(half) + 4.0;
            [td, tc, qc]
        }
    }
}

/// Evaluates one row at bit-width `n`. `radix` is required for (and only
/// used by) [`AdderRow::HigherRadix`], where `2 < r <= n`.
pub fn evaluate_row(
    row: AdderRow,
    n: u64,
    radix: Option<u64>,
    kind: DividerKind,
    rounding: Rounding,
) -> Result<Costs, CostError> {
    if n == 0 {
        return Err(CostError::ZeroWidth);
    }
    let radix = if row.needs_radix() {
        let r = radix.ok_or(CostError::MissingRadix)?;
        if r <= 2 || r > n {
            return Err(CostError::InvalidRadix { radix: r, n });
        }
        r
    } else {
        0
    };
    let [mut td, mut tc, mut qc] = raw_nonrestoring(row, n, radix, rounding);
    if kind == DividerKind::Restoring {
        let nf = n as f64;
        let delta = 3.0 * nf * nf + nf - (3.0 * nf + 1.0);
        td += delta;
        tc += delta;
        qc -= 1.0;
    }
    let vals = [settle(td), settle(tc), settle(qc)];
    if vals.iter().any(|&v| v <= 0) {
        return Err(CostError::NonPositive { row, n });
    }
    Ok(Costs::new(vals[0] as u64, vals[1] as u64, vals[2] as u64))
}

/// A published divider used as the comparison reference at n = 32.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Baseline {
    pub name: &'static str,
    pub costs: Costs,
}

pub const BASELINE_WIDTH: u64 = 32;

pub const GOLDSCHMIDT: Baseline = Baseline {
    name: "Goldschmidt",
    costs: Costs::new(17_850, 117_187, 30_008),
};

pub const NEWTON_RAPHSON: Baseline = Baseline {
    name: "Newton-Raphson",
    costs: Costs::new(13_506, 93_376, 23_996),
};

pub const BASELINES: [Baseline; 2] = [GOLDSCHMIDT, NEWTON_RAPHSON];

/// A percentage held in hundredths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Percent(pub i64);

impl Percent {
    /// `100·(baseline − ours)/baseline`, rounded half away from zero to
    /// hundredths.
    pub fn improvement(baseline: u64, ours: u64) -> Percent {
        let num = 10_000 * (baseline as i128 - ours as i128);
        let den = baseline as i128;
        let q = (2 * num.abs() + den) / (2 * den);
        Percent((num.signum() * q) as i64)
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 100.0
    }
}

impl fmt::Display for Percent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let a = self.0.abs();
        write!(f, "{sign}{}.{:02}", a / 100, a % 100)
    }
}

impl Serialize for Percent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Improvement {
    pub toffoli_depth: Percent,
    pub toffoli_count: Percent,
    pub qubit_count: Percent,
}

impl Improvement {
    pub fn against(baseline: Costs, ours: Costs) -> Self {
        Improvement {
            toffoli_depth: Percent::improvement(baseline.toffoli_depth, ours.toffoli_depth),
            toffoli_count: Percent::improvement(baseline.toffoli_count, ours.toffoli_count),
            qubit_count: Percent::improvement(baseline.qubit_count, ours.qubit_count),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub divider: String,
    #[serde(flatten)]
    pub costs: Costs,
    /// Against Newton-Raphson; only at n = 32 and only for proposed dividers.
    pub improvement: Option<Improvement>,
}

pub fn divider_label(kind: DividerKind, row: AdderRow) -> String {
    format!("{}+{}", kind.label(), row.label())
}

/// The four proposed-divider lines of the published 32-bit comparison.
pub const PUBLISHED_ENTRIES: [(DividerKind, AdderRow); 4] = [
    (DividerKind::Restoring, AdderRow::Ling),
    (DividerKind::Restoring, AdderRow::TakahashiCombination),
    (DividerKind::NonRestoring, AdderRow::Ling),
    (DividerKind::NonRestoring, AdderRow::TakahashiCombination),
];

/// Every (kind, row) pair, higher-radix included only when a radix is given.
pub fn all_entries(radix: Option<u64>) -> Vec<(DividerKind, AdderRow)> {
    DividerKind::ALL
        .into_iter()
        .flat_map(|k| AdderRow::ALL.into_iter().map(move |r| (k, r)))
        .filter(|(_, r)| !r.needs_radix() || radix.is_some())
        .collect()
}

/// Comparison table at width `n`. At n = 32 the baselines lead the table
/// and proposed rows carry improvements against Newton-Raphson.
pub fn comparison_table(
    n: u64,
    entries: &[(DividerKind, AdderRow)],
    radix: Option<u64>,
    rounding: Rounding,
) -> Result<Vec<TableRow>, CostError> {
    let with_baselines = n == BASELINE_WIDTH;
    let mut rows = Vec::new();
    if with_baselines {
        rows.extend(BASELINES.iter().map(|b| TableRow {
            divider: b.name.to_string(),
            costs: b.costs,
            improvement: None,
        }));
    }
    for &(kind, row) in entries {
        let costs = evaluate_row(row, n, radix, kind, rounding)?;
        rows.push(TableRow {
            divider: divider_label(kind, row),
            costs,
            improvement: with_baselines.then(|| Improvement::against(NEWTON_RAPHSON.costs, costs)),
        });
    }
    Ok(rows)
}

/// A row whose value depends on whether floor brackets are honoured.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub divider: String,
    pub ceil_real_log: Costs,
    pub strict_floor: Costs,
}

/// Lists every (kind, row) whose two rounding readings disagree at `n`.
pub fn rounding_audit(n: u64, radix: Option<u64>) -> Result<Vec<AuditEntry>, CostError> {
    let mut out = Vec::new();
    for (kind, row) in all_entries(radix) {
        let a = evaluate_row(row, n, radix, kind, Rounding::CeilRealLog)?;
        let b = evaluate_row(row, n, radix, kind, Rounding::StrictFloor)?;
        if a != b {
            out.push(AuditEntry {
                divider: divider_label(kind, row),
                ceil_real_log: a,
                strict_floor: b,
            });
        }
    }
    Ok(out)
}
