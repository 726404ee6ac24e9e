//! Registry of exactly checkable identities and conjectures.
//!
//! Each entry pairs a parameter-domain enumerator with an exact check
//! that evaluates both sides as rationals. For proven statements a
//! counterexample is a build-blocking bug; for conjectures it is a
//! finding, reported as data with the exact values of both sides.
//!
//! `list-ids` (or [`all_entries`]) shows the id-to-statement table.

mod registry;

use std::time::Instant;

use serde::Serialize;

use crate::arith::ExactRational;
use crate::error::Error;
use crate::exec::map_ordered;
use crate::floorsum::excess;

pub use registry::all_entries;

/// How an entry's statement is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Proved; a counterexample is an implementation bug.
    Proven,
    /// Conjectured; a counterexample is a reportable finding.
    Conjecture,
    /// Reproduction of a fixed table of values.
    Table,
}

/// One registered identity.
pub struct Entry {
    pub id: &'static str,
    pub kind: Kind,
    /// The checked statement, in plain language.
    pub summary: &'static str,
    /// Largest parameter the stated domain intends; `sweep` uses it when
    /// the caller does not pass a bound.
    pub default_max: u64,
    pub(crate) enumerate: fn(u64) -> Vec<Vec<i64>>,
    pub(crate) check: fn(&[i64]) -> Result<IdentityReport, Error>,
}

/// Outcome of one identity check at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Vec<i64>,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub pass: bool,
}

impl IdentityReport {
    pub(crate) fn new(id: &str, params: &[i64], lhs: ExactRational, rhs: ExactRational) -> Self {
        IdentityReport { id: id.to_string(), params: params.to_vec(), pass: lhs == rhs, lhs, rhs }
    }
}

/// Aggregate of a sweep over an entry's parameter domain.
///
/// Only failures are kept, capped at [`MAX_REPORTED_COUNTEREXAMPLES`];
/// `counterexamples_total` carries the uncapped count. Everything except
/// `wall_time_s` is a deterministic function of (id, max_n).
#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub id: String,
    pub domain: String,
    pub cases_checked: u64,
    pub counterexamples: Vec<IdentityReport>,
    pub counterexamples_total: u64,
    pub wall_time_s: f64,
}

pub const MAX_REPORTED_COUNTEREXAMPLES: usize = 20;

/// Width contract shared by all sweeps.
const MAX_SWEEP_BOUND: u64 = 1 << 40;

pub fn lookup(id: &str) -> Result<&'static Entry, Error> {
    all_entries().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Check a single parameter point of a registered identity.
pub fn check(id: &str, params: &[i64]) -> Result<IdentityReport, Error> {
    (lookup(id)?.check)(params)
}

/// Enumerate an entry's domain up to `max_n` and check every case.
///
/// Cases run on `jobs` workers; the summary is identical for any job
/// count. Panics only on internal errors (enumerated parameters always
/// satisfy the entry's own domain).
pub fn sweep(id: &str, max_n: u64, jobs: usize) -> Result<SweepSummary, Error> {
    let entry = lookup(id)?;
    if max_n > MAX_SWEEP_BOUND {
        return Err(Error::domain(format!("max {max_n} exceeds the 2^40 width contract")));
    }
    if jobs == 0 {
        return Err(Error::domain("jobs must be >= 1".to_string()));
    }
    let started = Instant::now();
    let cases = (entry.enumerate)(max_n);
    let reports = map_ordered(&cases, jobs, |params| {
        (entry.check)(params).expect("enumerated parameters must satisfy the entry's domain")
    });
    let cases_checked = reports.len() as u64;
    let failures: Vec<IdentityReport> = reports.into_iter().filter(|r| !r.pass).collect();
    Ok(SweepSummary {
        id: entry.id.to_string(),
        domain: format!("{} [max {max_n}]", entry.summary),
        cases_checked,
        counterexamples_total: failures.len() as u64,
        counterexamples: failures.into_iter().take(MAX_REPORTED_COUNTEREXAMPLES).collect(),
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}

/// Mean of excess(m)/m per residue class of m mod 4 over the top decade
/// [max_n - max_n/10, max_n], with the deviation from the conjectured
/// limits 1/8, 0, -1/8, -1/4 for classes 0, 1, 2, 3.
#[derive(Debug, Clone, Serialize)]
pub struct TrendRow {
    pub residue_class: u8,
    pub cases: u64,
    pub mean_ratio: f64,
    pub limit: f64,
    pub deviation: f64,
}

pub fn residue_trend(max_n: u64) -> Result<[TrendRow; 4], Error> {
    if max_n < 4000 {
        return Err(Error::domain(format!("trend needs max >= 4000, got {max_n}")));
    }
    let lo = max_n - max_n / 10;
    let limits = [0.125f64, 0.0, -0.125, -0.25];
    let mut sums = [0.0f64; 4];
    let mut counts = [0u64; 4];
    for m in lo..=max_n {
        let class = (m % 4) as usize;
        sums[class] += (excess(m) / ExactRational::from(m)).to_f64();
        counts[class] += 1;
    }
    Ok(std::array::from_fn(|c| {
        let mean = sums[c] / counts[c] as f64;
        TrendRow {
            residue_class: c as u8,
            cases: counts[c],
            mean_ratio: mean,
            limit: limits[c],
            deviation: (mean - limits[c]).abs(),
        }
    }))
}

/// One row of the excess-series artifact: n, the exact value of
/// excess(n), and excess(n)/n to six decimals (round half to even).
#[derive(Debug, Clone, Serialize)]
pub struct FigureRow {
    pub n: u64,
    pub value: ExactRational,
    pub ratio: String,
}

pub fn figure_series(max_n: u64) -> Vec<FigureRow> {
    (1..=max_n)
        .map(|n| {
            let value = excess(n);
            let ratio = (value / ExactRational::from(n)).to_decimal(6);
            FigureRow { n, value, ratio }
        })
        .collect()
}
