//! Verification suites and their reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::betti::{betti_d, betti_p_summation, crosscheck, Status};
use crate::error::{Error, Result};
use crate::hilbert::{verify_additivity, ORACLE_DEGREE_LIMIT};
use crate::orbitmod::{consistency_checks, Ideal};
use crate::resolve::{self, support_check, verify_equivariant};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest `n` the brute-force suites accept without an explicit override.
pub const RESOLVE_N_MAX: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportItem {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    pub skip: usize,
    pub documented_discrepancy: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub items: Vec<ReportItem>,
    pub summary: Summary,
    pub version: String,
}

impl Report {
    pub fn new(command: &str, parameters: &[(&str, String)]) -> Self {
        Report {
            command: command.to_string(),
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            items: Vec::new(),
            summary: Summary::default(),
            version: VERSION.to_string(),
        }
    }

    pub fn push(&mut self, id: impl Into<String>, status: Status, expected: impl ToString, actual: impl ToString) {
        self.items.push(ReportItem {
            id: id.into(),
            status,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
        let s = &mut self.summary;
        s.total += 1;
        match status {
            Status::Match => s.matched += 1,
            Status::Mismatch => s.mismatch += 1,
            Status::Skip => s.skip += 1,
            Status::DocumentedDiscrepancy => s.documented_discrepancy += 1,
        }
    }

    pub fn compare<T: PartialEq + fmt::Display>(&mut self, id: impl Into<String>, expected: T, actual: T) {
        let status = if expected == actual {
            Status::Match
        } else {
            Status::Mismatch
        };
        self.push(id, status, expected, actual);
    }

    /// Appends the items of another report, prefixing their ids.
    pub fn absorb(&mut self, other: Report) {
        for it in other.items {
            self.push(format!("{}/{}", other.command, it.id), it.status, it.expected, it.actual);
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.mismatch == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tor,
    Characters,
    Hilbert,
    Crosscheck,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tor" => Ok(Suite::Tor),
            "characters" => Ok(Suite::Characters),
            "hilbert" => Ok(Suite::Hilbert),
            "crosscheck" => Ok(Suite::Crosscheck),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        }
    }
}

fn check_resolve_bound(n: usize, unsafe_large: bool) -> Result<()> {
    if n > RESOLVE_N_MAX && !unsafe_large {
        return Err(Error::DegreeLimit {
            limit: RESOLVE_N_MAX,
            requested: n,
        });
    }
    Ok(())
}

fn formula(ideal: Ideal, n: usize, p: usize, q: usize) -> BigInt {
    match ideal {
        Ideal::P => betti_p_summation(n, p, q),
        Ideal::D => betti_d(n, p, q),
    }
}

/// Brute-force Betti table against the formula (summation form for P).
pub fn suite_tor(n: usize, ideal: Ideal, max_degree: Option<usize>, unsafe_large: bool) -> Result<Report> {
    check_resolve_bound(n, unsafe_large)?;
    let mut params = vec![("n", n.to_string()), ("ideal", ideal.to_string())];
    if let Some(d) = max_degree {
        params.push(("max_degree", d.to_string()));
    }
    let mut report = Report::new("tor", &params);
    let table = resolve::betti_table(n, ideal, max_degree)?;
    let max_q = max_degree.unwrap_or(2 * n + 2);
    for p in 0..2 * n {
        for q in p + 1..=(p + 5).min(max_q) {
            let expected = formula(ideal, n, p, q);
            let actual = table.get(p, q);
            if expected == BigInt::from(0) && actual == BigInt::from(0) {
                continue;
            }
            report.compare(format!("beta[{p},{q}]"), expected, actual);
        }
    }
    Ok(report)
}

/// Brute-force characters of Tor against the descriptor decompositions, plus the relations
/// between descriptor families and the support check.
pub fn suite_characters(n: usize, ideal: Ideal, unsafe_large: bool) -> Result<Report> {
    check_resolve_bound(n, unsafe_large)?;
    let mut report = Report::new("characters", &[("n", n.to_string()), ("ideal", ideal.to_string())]);
    for it in verify_equivariant(ideal, n)? {
        report.push(
            format!("p={} {}", it.p, it.pattern),
            it.status,
            &it.descriptor,
            &it.brute_force,
        );
    }
    if ideal == Ideal::P {
        let s = support_check(ideal, n)?;
        report.compare(
            format!(
                "support: {} multidegrees + {} sampled",
                s.multidegrees_checked, s.sample_checked
            ),
            "0 violations".to_string(),
            format!("{} violations", s.violations.len()),
        );
    }
    for it in consistency_checks(n)? {
        let status = if it.holds() {
            Status::Match
        } else {
            Status::Mismatch
        };
        report.push(format!("{} at {}", it.relation, it.pattern), status, &it.rhs, &it.lhs);
    }
    Ok(report)
}

/// Closed-form Hilbert functions against the monomial oracle for every `n' <= n`.
pub fn suite_hilbert(n: usize, max_degree: usize) -> Result<Report> {
    if max_degree > ORACLE_DEGREE_LIMIT {
        return Err(Error::DegreeLimit {
            limit: ORACLE_DEGREE_LIMIT,
            requested: max_degree,
        });
    }
    let mut report = Report::new("hilbert", &[("n", n.to_string()), ("max_degree", max_degree.to_string())]);
    for m in 1..=n {
        let r = verify_additivity(m, max_degree)?;
        for v in &r.violations {
            report.push(format!("n={m} {:?} {}", v.multidegree, v.check), Status::Mismatch, v.expected, v.actual);
        }
        report.push(
            format!("n={m}: {} multidegrees, {} comparisons", r.multidegrees, r.comparisons),
            if r.ok() { Status::Match } else { Status::Mismatch },
            "0 violations",
            format!("{} violations", r.violations.len()),
        );
    }
    Ok(report)
}

/// Formula families against each other; rows with `n <= resolve_n_max` are also checked
/// against the brute force.
pub fn suite_crosscheck(n_max: usize, resolve_n_max: usize) -> Result<Report> {
    let mut report = Report::new(
        "crosscheck",
        &[("n_max", n_max.to_string()), ("resolve_n_max", resolve_n_max.to_string())],
    );
    let rows = crosscheck(n_max)?;
    let mut tables = BTreeMap::new();
    for n in 2..=resolve_n_max.min(n_max) {
        tables.insert(n, resolve::betti_table(n, Ideal::P, None)?);
    }
    for r in &rows {
        let id = format!("n={} p={} q={}", r.n, r.p, r.q);
        let actual = format!(
            "closed={} ghsw={} descriptors={} closed_shifted={}",
            r.closed, r.ghsw, r.descriptors, r.closed_shifted
        );
        report.push(id.clone(), r.status, format!("summation={}", r.summation), actual);
        if let Some(t) = tables.get(&r.n) {
            report.compare(format!("{id} resolve"), r.summation.clone(), t.get(r.p, r.q));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n: usize,
    pub n_max: usize,
    pub max_degree: Option<usize>,
    pub ideal: Ideal,
    pub unsafe_large: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n: 3,
            n_max: 10,
            max_degree: None,
            ideal: Ideal::P,
            unsafe_large: false,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    let hilbert_degree = opts.max_degree.unwrap_or(8);
    match suite {
        Suite::Tor => suite_tor(opts.n, opts.ideal, opts.max_degree, opts.unsafe_large),
        Suite::Characters => suite_characters(opts.n, opts.ideal, opts.unsafe_large),
        Suite::Hilbert => suite_hilbert(opts.n, hilbert_degree),
        Suite::Crosscheck => suite_crosscheck(opts.n_max, RESOLVE_N_MAX.min(opts.n)),
        Suite::All => {
            let mut report = Report::new(
                "all",
                &[
                    ("n", opts.n.to_string()),
                    ("n_max", opts.n_max.to_string()),
                    ("ideal", opts.ideal.to_string()),
                    ("max_degree", hilbert_degree.to_string()),
                ],
            );
            report.absorb(suite_tor(opts.n, opts.ideal, None, opts.unsafe_large)?);
            report.absorb(suite_characters(opts.n, opts.ideal, opts.unsafe_large)?);
            report.absorb(suite_hilbert(opts.n, hilbert_degree)?);
            report.absorb(suite_crosscheck(opts.n_max, RESOLVE_N_MAX.min(opts.n))?);
            Ok(report)
        }
    }
}
