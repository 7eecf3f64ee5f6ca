//! Graded Betti numbers of P and D: the summation and closed forms, the GHSW formulas, and
//! totals read off the descriptor lists.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, multinomial};
use crate::error::{Error, Result};
use crate::orbitmod::{descriptors, Ideal};

fn c(a: usize, b: usize) -> BigInt {
    binomial(a as i64, b as i64)
}

fn ci(a: i64, b: i64) -> BigInt {
    binomial(a, b)
}

fn pow2(k: usize) -> BigInt {
    BigInt::from(1) << k
}

/// Multinomial that vanishes when the blocks do not fit into `n`.
fn multinom(n: usize, parts: &[usize]) -> BigInt {
    if parts.iter().sum::<usize>() > n {
        return BigInt::zero();
    }
    let parts: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
    BigInt::from(multinomial(n, &parts).expect("nonnegative blocks fitting in n"))
}

pub fn betti_p_summation(n: usize, p: usize, q: usize) -> BigInt {
    if p == 0 && q == 2 {
        return c(n, 2);
    }
    if q == p + 3 {
        let mut s = BigInt::zero();
        for a in 0..=p.div_ceil(2) {
            let rest = p + 1 - 2 * a;
            s += multinom(n, &[a, 2, rest]) * pow2(rest);
        }
        return s - c(n, p + 3) * (pow2(p + 3) - 2);
    }
    if q == p + 4 {
        let mut s = BigInt::zero();
        for a in 3..=(p + 4) / 2 {
            let b = p + 4 - 2 * a;
            s += multinom(n, &[a, b]) * c(a - 1, 2) * pow2(b);
        }
        return s;
    }
    BigInt::zero()
}

/// The closed forms, with the third strand exactly as printed.
pub fn betti_p_closed(n: usize, p: usize, q: usize) -> BigInt {
    let (n, pi) = (n as i64, p as i64);
    if p == 0 && q == 2 {
        return ci(n, 2);
    }
    if q == p + 3 {
        return ci(n, 2) * ci(2 * n - 4, pi + 1) - ci(n, pi + 3) * (pow2(p + 3) - 2);
    }
    if q == p + 4 {
        return ci(n, 2) * ci(2 * n - 4, pi - 1) - BigInt::from(n) * ci(2 * n - 2, pi + 1) + ci(2 * n, pi + 3)
            - ci(n, pi + 3) * pow2(p + 3);
    }
    BigInt::zero()
}

/// Third-strand closed form with every index moved up by one:
/// `C(n,2)C(2n-4,p) - nC(2n-2,p+2) + C(2n,p+4) - C(n,p+4)2^{p+4}`.
pub fn betti_p_closed_shifted(n: usize, p: usize, q: usize) -> BigInt {
    if q != p + 4 {
        return betti_p_closed(n, p, q);
    }
    let (n, pi) = (n as i64, p as i64);
    ci(n, 2) * ci(2 * n - 4, pi) - BigInt::from(n) * ci(2 * n - 2, pi + 2) + ci(2 * n, pi + 4)
        - ci(n, pi + 4) * pow2(p + 4)
}

pub fn betti_p_ghsw(n: usize, p: usize, q: usize) -> BigInt {
    let third = |top: usize| {
        let mut s = BigInt::zero();
        for a in 3..=top / 2 {
            let r = top - 2 * a;
            s += pow2(r) * c(n, a) * (if n >= a { c(n - a, r) } else { BigInt::zero() }) * c(a - 1, 2);
        }
        s
    };
    if p == 0 && q == 2 {
        return c(n, 2);
    }
    let (ni, pi) = (n as i64, p as i64);
    if q == p + 3 {
        return BigInt::from(2) * ci(ni, pi + 3) - ci(2 * ni, pi + 3) + ci(ni + 1, 2) * ci(2 * ni - 2, pi + 1)
            - BigInt::from(2) * ci(2 * ni - 3, pi) * ci(ni, 2)
            + third(p + 3);
    }
    if q == p + 4 {
        return third(p + 4);
    }
    BigInt::zero()
}

pub fn betti_d(n: usize, p: usize, q: usize) -> BigInt {
    let (ni, pi) = (n as i64, p as i64);
    if q == p + 2 {
        return ci(ni, pi + 2) * (pow2(p + 2) - 2);
    }
    if q == p + 3 {
        return BigInt::from(ni) * ci(2 * ni - 2, pi + 1) + ci(ni, pi + 3) * pow2(p + 3) - ci(2 * ni, pi + 3);
    }
    BigInt::zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Summation,
    Closed,
    Ghsw,
    Descriptors,
    Resolve,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Summation => "summation",
            Method::Closed => "closed",
            Method::Ghsw => "ghsw",
            Method::Descriptors => "descriptors",
            Method::Resolve => "resolve",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "summation" => Ok(Method::Summation),
            "closed" => Ok(Method::Closed),
            "ghsw" => Ok(Method::Ghsw),
            "descriptors" => Ok(Method::Descriptors),
            "resolve" => Ok(Method::Resolve),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiTableRepr", try_from = "BettiTableRepr")]
pub struct BettiTable {
    pub n: usize,
    pub ideal: Ideal,
    pub provenance: Method,
    entries: BTreeMap<(usize, usize), BigInt>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    p: usize,
    q: usize,
    #[serde(with = "crate::bigjson")]
    dim: BigInt,
}

#[derive(Serialize, Deserialize)]
struct BettiTableRepr {
    n: usize,
    ideal: Ideal,
    provenance: Method,
    entries: Vec<BettiEntry>,
}

impl From<BettiTable> for BettiTableRepr {
    fn from(t: BettiTable) -> Self {
        BettiTableRepr {
            n: t.n,
            ideal: t.ideal,
            provenance: t.provenance,
            entries: t.entries.into_iter().map(|((p, q), dim)| BettiEntry { p, q, dim }).collect(),
        }
    }
}

impl TryFrom<BettiTableRepr> for BettiTable {
    type Error = Error;

    fn try_from(r: BettiTableRepr) -> Result<Self> {
        let mut t = BettiTable::new(r.n, r.ideal, r.provenance);
        for e in r.entries {
            t.set(e.p, e.q, e.dim)?;
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn new(n: usize, ideal: Ideal, provenance: Method) -> Self {
        BettiTable {
            n,
            ideal,
            provenance,
            entries: BTreeMap::new(),
        }
    }

    /// Stores a value; zeros are dropped and negative values rejected.
    pub fn set(&mut self, p: usize, q: usize, v: BigInt) -> Result<()> {
        if v.is_negative() {
            return Err(Error::NegativeMultiplicity {
                context: format!("beta_{{{p},{q}}} ({})", self.provenance),
                detail: v.to_string(),
            });
        }
        if v.is_zero() {
            self.entries.remove(&(p, q));
        } else {
            self.entries.insert((p, q), v);
        }
        Ok(())
    }

    pub fn add(&mut self, p: usize, q: usize, v: &BigInt) -> Result<()> {
        let cur = self.get(p, q);
        self.set(p, q, cur + v)
    }

    pub fn get(&self, p: usize, q: usize) -> BigInt {
        self.entries.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(p, q), v)| (p, q, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Same nonzero entries, regardless of provenance.
    pub fn same_values(&self, other: &BettiTable) -> bool {
        self.n == other.n && self.ideal == other.ideal && self.entries == other.entries
    }
}

fn formula_table(n: usize, ideal: Ideal, method: Method, f: fn(usize, usize, usize) -> BigInt) -> Result<BettiTable> {
    let mut t = BettiTable::new(n, ideal, method);
    for p in 0..=2 * n {
        for q in p + 1..=p + 5 {
            t.set(p, q, f(n, p, q))?;
        }
    }
    Ok(t)
}

/// Sums orbit-module dimensions per `(p, q)`.
pub fn betti_from_descriptors(n: usize, ideal: Ideal) -> Result<BettiTable> {
    let mut t = BettiTable::new(n, ideal, Method::Descriptors);
    for d in descriptors(n, ideal, true)? {
        t.add(d.p, d.q, &d.dim())?;
    }
    Ok(t)
}

/// A table from one of the formula families or from the descriptors. The brute-force table
/// lives in [`crate::resolve::betti_table`].
pub fn betti_table(n: usize, ideal: Ideal, method: Method) -> Result<BettiTable> {
    if n < 2 {
        return Err(Error::InvalidN(format!("n = {n}, need n >= 2")));
    }
    match (ideal, method) {
        (_, Method::Descriptors) => betti_from_descriptors(n, ideal),
        (Ideal::P, Method::Summation) => formula_table(n, ideal, method, betti_p_summation),
        (Ideal::P, Method::Closed) => formula_table(n, ideal, method, betti_p_closed),
        (Ideal::P, Method::Ghsw) => formula_table(n, ideal, method, betti_p_ghsw),
        (Ideal::D, Method::Closed) => formula_table(n, ideal, method, betti_d),
        (Ideal::D, m @ (Method::Summation | Method::Ghsw)) => Err(Error::InvalidArgument(format!(
            "no {m} formula for D; use closed, descriptors or resolve"
        ))),
        (_, Method::Resolve) => crate::resolve::betti_table(n, ideal, None),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    Skip,
    DocumentedDiscrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Skip => "skip",
            Status::DocumentedDiscrepancy => "documented-discrepancy",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckRow {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    #[serde(with = "crate::bigjson")]
    pub summation: BigInt,
    #[serde(with = "crate::bigjson")]
    pub closed: BigInt,
    #[serde(with = "crate::bigjson")]
    pub closed_shifted: BigInt,
    #[serde(with = "crate::bigjson")]
    pub ghsw: BigInt,
    #[serde(with = "crate::bigjson")]
    pub descriptors: BigInt,
    pub status: Status,
}

/// Compares the formula families and the descriptor totals for every `n` in `2..=n_max`.
///
/// A row is a documented discrepancy when everything agrees except the printed third-strand
/// closed form.
pub fn crosscheck(n_max: usize) -> Result<Vec<CrosscheckRow>> {
    let per_n: Vec<Vec<CrosscheckRow>> = (2..=n_max)
        .into_par_iter()
        .map(|n| -> Result<Vec<CrosscheckRow>> {
            let desc = betti_from_descriptors(n, Ideal::P)?;
            let mut rows = Vec::new();
            for p in 0..=2 * n {
                for q in p + 1..=p + 5 {
                    let row = CrosscheckRow {
                        n,
                        p,
                        q,
                        summation: betti_p_summation(n, p, q),
                        closed: betti_p_closed(n, p, q),
                        closed_shifted: betti_p_closed_shifted(n, p, q),
                        ghsw: betti_p_ghsw(n, p, q),
                        descriptors: desc.get(p, q),
                        status: Status::Match,
                    };
                    let core = row.summation == row.ghsw && row.summation == row.descriptors;
                    let status = if !core {
                        Status::Mismatch
                    } else if row.closed == row.summation {
                        Status::Match
                    } else if q == p + 4 {
                        Status::DocumentedDiscrepancy
                    } else {
                        Status::Mismatch
                    };
                    let all_zero = [&row.summation, &row.closed, &row.ghsw, &row.descriptors]
                        .iter()
                        .all(|v| v.is_zero());
                    if !all_zero {
                        rows.push(CrosscheckRow { status, ..row });
                    }
                }
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(per_n.into_iter().flatten().collect())
}
