//! Output formats for tables, equivariant descriptions and reports.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::orbitmod::{descriptors, Ideal, OrbitModule};
use crate::reps::VirtualRep;
use crate::verify::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Markdown grid: rows are `q - p`, columns are `p`, zeros shown as `.`.
pub fn betti_grid(t: &BettiTable) -> String {
    let entries: Vec<_> = t.entries().collect();
    let mut out = format!("Betti table of {} for n = {} ({})\n\n", t.ideal, t.n, t.provenance);
    if entries.is_empty() {
        out.push_str("(empty)\n");
        return out;
    }
    let max_p = entries.iter().map(|e| e.0).max().unwrap_or(0);
    let rows: std::collections::BTreeSet<usize> = entries.iter().map(|e| e.1 - e.0).collect();
    out.push_str("| q-p \\ p |");
    for p in 0..=max_p {
        let _ = write!(out, " {p} |");
    }
    out.push_str("\n|---|");
    for _ in 0..=max_p {
        out.push_str("---|");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(out, "| {r} |");
        for p in 0..=max_p {
            let v = t.get(p, p + r);
            if v == BigInt::from(0) {
                out.push_str(" . |");
            } else {
                let _ = write!(out, " {v} |");
            }
        }
        out.push('\n');
    }
    out
}

pub fn render_betti(t: &BettiTable, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(t),
        Format::Csv => {
            let mut out = String::from("p,q,dim\n");
            for (p, q, v) in t.entries() {
                let _ = writeln!(out, "{p},{q},{v}");
            }
            Ok(out)
        }
        Format::Md => Ok(betti_grid(t)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantEntry {
    pub p: usize,
    pub q: usize,
    #[serde(with = "crate::bigjson")]
    pub dim: BigInt,
    pub orbits: Vec<OrbitModule>,
    pub decomposition: VirtualRep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantDoc {
    pub n: usize,
    pub ideal: Ideal,
    pub g2: bool,
    pub entries: Vec<EquivariantEntry>,
}

impl EquivariantDoc {
    pub fn build(n: usize, ideal: Ideal, g2: bool) -> Result<Self> {
        let mut entries = Vec::new();
        for d in descriptors(n, ideal, g2)? {
            if d.modules.is_empty() {
                continue;
            }
            entries.push(EquivariantEntry {
                p: d.p,
                q: d.q,
                dim: d.dim(),
                decomposition: d.decompose()?,
                orbits: d.modules,
            });
        }
        entries.sort_by_key(|e| (e.p, e.q));
        Ok(EquivariantDoc { n, ideal, g2, entries })
    }
}

pub fn render_equivariant(doc: &EquivariantDoc, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => {
            let mut out = String::from("p,q,dim,orbit,orbit_dim\n");
            for e in &doc.entries {
                for m in &e.orbits {
                    let _ = writeln!(out, "{},{},{},{},{}", e.p, e.q, e.dim, csv_field(&m.to_string()), m.dim());
                }
            }
            Ok(out)
        }
        Format::Md => {
            let group = if doc.g2 { "S_n x S_2" } else { "S_n" };
            let mut out = format!("Equivariant Betti numbers of {} for n = {} ({group})\n", doc.ideal, doc.n);
            for e in &doc.entries {
                let _ = write!(out, "\n## p = {}, q = {} (dim {})\n\n", e.p, e.q, e.dim);
                for m in &e.orbits {
                    let _ = writeln!(out, "- {m}: dim {}, {}", m.dim(), m.decompose()?);
                }
                let _ = writeln!(out, "\nirreducibles: {}", e.decomposition);
            }
            Ok(out)
        }
    }
}

pub fn render_report(r: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut out = String::from("id,status,expected,actual\n");
            for it in &r.items {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(&it.id),
                    it.status,
                    csv_field(&it.expected),
                    csv_field(&it.actual)
                );
            }
            Ok(out)
        }
        Format::Md => {
            let mut out = format!("# verify {}\n\n", r.command);
            for (k, v) in &r.parameters {
                let _ = writeln!(out, "- {k}: {v}");
            }
            out.push_str("\n| id | status | expected | actual |\n|---|---|---|---|\n");
            for it in &r.items {
                let cell = |s: &str| s.replace('|', "\\|");
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    cell(&it.id),
                    it.status,
                    cell(&it.expected),
                    cell(&it.actual)
                );
            }
            let s = &r.summary;
            let _ = writeln!(
                out,
                "\n{} items: {} match, {} mismatch, {} skip, {} documented discrepancy",
                s.total, s.matched, s.mismatch, s.skip, s.documented_discrepancy
            );
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_table, Method};

    #[test]
    fn csv_and_grid() {
        let t = betti_table(3, Ideal::P, Method::Summation).unwrap();
        let csv = render_betti(&t, Format::Csv).unwrap();
        assert!(csv.starts_with("p,q,dim\n0,2,3\n"));
        let md = render_betti(&t, Format::Md).unwrap();
        assert!(md.contains("| 2 | 3 | . | . |"));
        assert!(md.contains("| 4 | . | . | 1 |"));
    }

    #[test]
    fn equivariant_roundtrip() {
        let doc = EquivariantDoc::build(3, Ideal::P, true).unwrap();
        assert_eq!(doc.entries[0].dim, BigInt::from(3));
        let s = render_equivariant(&doc, Format::Json).unwrap();
        let back: EquivariantDoc = serde_json::from_str(&s).unwrap();
        assert_eq!(back, doc);
        for e in &doc.entries {
            assert_eq!(BigInt::from(e.decomposition.dim()), e.dim);
        }
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("x"), "x");
    }
}
