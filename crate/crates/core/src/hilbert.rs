//! Multigraded Hilbert functions of S, m_xy, D, P and the two cokernels C1 = m_xy/D and
//! C2 = D/P, in closed form and by counting monomials.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest total degree the monomial oracle will enumerate by default.
pub const ORACLE_DEGREE_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NamedModule {
    S,
    Mxy,
    D,
    P,
    C1,
    C2,
}

impl NamedModule {
    pub const ALL: [NamedModule; 6] = [
        NamedModule::S,
        NamedModule::Mxy,
        NamedModule::D,
        NamedModule::P,
        NamedModule::C1,
        NamedModule::C2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NamedModule::S => "S",
            NamedModule::Mxy => "m_xy",
            NamedModule::D => "D",
            NamedModule::P => "P",
            NamedModule::C1 => "C1",
            NamedModule::C2 => "C2",
        }
    }
}

impl fmt::Display for NamedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NamedModule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedModule::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown module {s:?}")))
    }
}

pub fn support(a: &[usize]) -> Vec<usize> {
    (0..a.len()).filter(|&i| a[i] != 0).collect()
}

/// Closed-form multigraded Hilbert function.
pub fn hf_closed(module: NamedModule, a: &[usize]) -> u64 {
    let supp = support(a);
    let total: u64 = a.iter().map(|&x| x as u64 + 1).product();
    match module {
        NamedModule::S => total,
        NamedModule::Mxy => {
            if supp.is_empty() {
                0
            } else {
                total - 2
            }
        }
        NamedModule::D => {
            if supp.len() >= 2 {
                total - 2
            } else {
                0
            }
        }
        NamedModule::P => match supp.len() {
            0 | 1 => 0,
            2 => (a[supp[0]] * a[supp[1]]) as u64,
            _ => total - 2,
        },
        NamedModule::C1 => match supp.as_slice() {
            [i] => a[*i] as u64 - 1,
            _ => 0,
        },
        NamedModule::C2 => match supp.as_slice() {
            [i, j] => (a[*i] + a[*j] - 1) as u64,
            _ => 0,
        },
    }
}

/// A monomial in x_1..x_n, y_1..y_n as (x exponents, y exponents).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Monomial {
    pub fn multidegree(&self) -> Vec<usize> {
        self.x.iter().zip(&self.y).map(|(a, b)| a + b).collect()
    }

    fn divisible_by(&self, xs: &[usize], ys: &[usize]) -> bool {
        let mut need_x = vec![0; self.x.len()];
        let mut need_y = vec![0; self.y.len()];
        for &i in xs {
            need_x[i] += 1;
        }
        for &j in ys {
            need_y[j] += 1;
        }
        (0..self.x.len()).all(|i| self.x[i] >= need_x[i] && self.y[i] >= need_y[i])
    }
}

/// All monomials of multidegree `a`; there are Π(a_i + 1) of them.
pub fn monomials_of(a: &[usize]) -> Vec<Monomial> {
    let mut out = vec![Monomial {
        x: Vec::with_capacity(a.len()),
        y: Vec::with_capacity(a.len()),
    }];
    for &ai in a {
        let mut next = Vec::with_capacity(out.len() * (ai + 1));
        for m in &out {
            for u in 0..=ai {
                let mut m2 = m.clone();
                m2.x.push(u);
                m2.y.push(ai - u);
                next.push(m2);
            }
        }
        out = next;
    }
    out
}

pub fn in_mxy(m: &Monomial) -> bool {
    m.x.iter().any(|&e| e > 0) && m.y.iter().any(|&e| e > 0)
}

pub fn in_d(m: &Monomial) -> bool {
    let n = m.x.len();
    (0..n).any(|i| m.x[i] > 0 && (0..n).any(|j| j != i && m.y[j] > 0))
}

/// Membership in the initial ideal of P under the antidiagonal order, generated by
/// x_j y_i (i < j), x_i y_j y_k and x_i x_j y_k (i < j < k).
pub fn in_init_p(m: &Monomial) -> bool {
    let n = m.x.len();
    for i in 0..n {
        for j in i + 1..n {
            if m.divisible_by(&[j], &[i]) {
                return true;
            }
            for k in j + 1..n {
                if m.divisible_by(&[i], &[j, k]) || m.divisible_by(&[i, j], &[k]) {
                    return true;
                }
            }
        }
    }
    false
}

fn c1_basis(a: &[usize]) -> Vec<Monomial> {
    let supp = support(a);
    let [i] = supp.as_slice() else {
        return Vec::new();
    };
    let n = a.len();
    let d = a[*i];
    if d < 2 {
        return Vec::new();
    }
    (0..=d - 2)
        .map(|u| {
            let mut m = Monomial {
                x: vec![0; n],
                y: vec![0; n],
            };
            m.x[*i] = 1 + u;
            m.y[*i] = 1 + (d - 2 - u);
            m
        })
        .collect()
}

fn c2_basis(a: &[usize]) -> Vec<Monomial> {
    let supp = support(a);
    let [i, j] = supp.as_slice() else {
        return Vec::new();
    };
    let (i, j, n) = (*i, *j, a.len());
    let mut out = Vec::new();
    for u in 0..a[i] {
        for v in 0..a[j] {
            // cofactor x_i^u y_i^(a_i-1-u) x_j^v y_j^(a_j-1-v), skipping multiples of x_i y_j
            if u >= 1 && a[j] - 1 - v >= 1 {
                continue;
            }
            let mut m = Monomial {
                x: vec![0; n],
                y: vec![0; n],
            };
            m.x[i] = u + 1;
            m.y[i] = a[i] - 1 - u;
            m.x[j] = v;
            m.y[j] = a[j] - v;
            out.push(m);
        }
    }
    out
}

pub fn hf_oracle(module: NamedModule, a: &[usize]) -> Result<u64> {
    hf_oracle_bounded(module, a, ORACLE_DEGREE_LIMIT)
}

pub fn hf_oracle_bounded(module: NamedModule, a: &[usize], limit: usize) -> Result<u64> {
    let deg: usize = a.iter().sum();
    if deg > limit {
        return Err(Error::DegreeLimit {
            limit,
            requested: deg,
        });
    }
    let count = |pred: fn(&Monomial) -> bool| monomials_of(a).iter().filter(|m| pred(m)).count() as u64;
    let checked_basis = |basis: Vec<Monomial>| -> Result<u64> {
        let distinct: BTreeSet<&Monomial> = basis.iter().collect();
        if distinct.len() != basis.len() || basis.iter().any(|m| m.multidegree() != a || !in_mxy(m)) {
            return Err(Error::InvalidArgument(format!("degenerate cokernel basis at {a:?}")));
        }
        Ok(basis.len() as u64)
    };
    match module {
        NamedModule::S => Ok(monomials_of(a).len() as u64),
        NamedModule::Mxy => Ok(count(in_mxy)),
        NamedModule::D => Ok(count(in_d)),
        NamedModule::P => Ok(count(in_init_p)),
        NamedModule::C1 => {
            let basis = c1_basis(a);
            if basis.iter().any(in_d) {
                return Err(Error::InvalidArgument(format!("C1 basis meets D at {a:?}")));
            }
            checked_basis(basis)
        }
        NamedModule::C2 => {
            let basis = c2_basis(a);
            if !basis.iter().all(in_d) {
                return Err(Error::InvalidArgument(format!("C2 basis leaves D at {a:?}")));
            }
            checked_basis(basis)
        }
    }
}

/// All multidegrees in `N^n` of total degree at most `max_degree`, in lexicographic order.
pub fn multidegrees_up_to(n: usize, max_degree: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_degree, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertViolation {
    pub multidegree: Vec<usize>,
    pub check: String,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditivityReport {
    pub n: usize,
    pub max_degree: usize,
    pub multidegrees: usize,
    pub comparisons: usize,
    pub violations: Vec<HilbertViolation>,
}

impl AdditivityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_multidegree(a: &[usize]) -> Result<(usize, Vec<HilbertViolation>)> {
    let mut out = Vec::new();
    let mut comparisons = 0;
    let mut closed = [0u64; 6];
    let mut oracle = [0u64; 6];
    for (k, m) in NamedModule::ALL.into_iter().enumerate() {
        closed[k] = hf_closed(m, a);
        oracle[k] = hf_oracle(m, a)?;
        comparisons += 1;
        if closed[k] != oracle[k] {
            out.push(HilbertViolation {
                multidegree: a.to_vec(),
                check: format!("closed vs oracle {m}"),
                expected: closed[k],
                actual: oracle[k],
            });
        }
    }
    // indices into NamedModule::ALL: S, Mxy, D, P, C1, C2
    for (label, vals) in [("closed", &closed), ("oracle", &oracle)] {
        comparisons += 2;
        if vals[2] + vals[4] != vals[1] {
            out.push(HilbertViolation {
                multidegree: a.to_vec(),
                check: format!("{label}: HF(D) + HF(C1) = HF(m_xy)"),
                expected: vals[1],
                actual: vals[2] + vals[4],
            });
        }
        if vals[3] + vals[5] != vals[2] {
            out.push(HilbertViolation {
                multidegree: a.to_vec(),
                check: format!("{label}: HF(P) + HF(C2) = HF(D)"),
                expected: vals[2],
                actual: vals[3] + vals[5],
            });
        }
    }
    Ok((comparisons, out))
}

/// Compare closed forms with the monomial oracle and check both short exact sequences on every
/// multidegree of total degree at most `max_degree`.
pub fn verify_additivity(n: usize, max_degree: usize) -> Result<AdditivityReport> {
    let degrees = multidegrees_up_to(n, max_degree);
    let results: Vec<(usize, Vec<HilbertViolation>)> = degrees
        .par_iter()
        .map(|a| check_multidegree(a))
        .collect::<Result<_>>()?;
    let mut report = AdditivityReport {
        n,
        max_degree,
        multidegrees: degrees.len(),
        comparisons: 0,
        violations: Vec::new(),
    };
    for (c, v) in results {
        report.comparisons += c;
        report.violations.extend(v);
    }
    Ok(report)
}

/// Coefficients of the single-graded Hilbert series of P up to degree `max_degree`, obtained
/// by summing the multigraded closed form.
pub fn hilbert_series_p(n: usize, max_degree: usize) -> Vec<u64> {
    let mut out = vec![0u64; max_degree + 1];
    for a in multidegrees_up_to(n, max_degree) {
        out[a.iter().sum::<usize>()] += hf_closed(NamedModule::P, &a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_examples() {
        assert_eq!(hf_closed(NamedModule::P, &[1, 1, 1, 0]), 6);
        assert_eq!(hf_closed(NamedModule::P, &[2, 1, 0]), 2);
        assert_eq!(hf_closed(NamedModule::C2, &[2, 1, 0]), 2);
        assert_eq!(hf_closed(NamedModule::S, &[2, 1]), 6);
        for m in NamedModule::ALL {
            let expect = if m == NamedModule::S { 1 } else { 0 };
            assert_eq!(hf_closed(m, &[0, 0, 0]), expect);
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(hf_oracle(NamedModule::D, &[1, 1, 0]).unwrap(), 2);
        assert_eq!(hf_oracle(NamedModule::Mxy, &[2, 0, 0]).unwrap(), 1);
        assert_eq!(hf_oracle(NamedModule::P, &[1, 1, 1]).unwrap(), 6);
        assert!(matches!(
            hf_oracle_bounded(NamedModule::S, &[5, 5], 8),
            Err(Error::DegreeLimit { .. })
        ));
    }

    #[test]
    fn single_support_forced_values() {
        for d in 1..6 {
            let a = [d, 0, 0];
            assert_eq!(hf_closed(NamedModule::D, &a), 0);
            assert_eq!(hf_closed(NamedModule::P, &a), 0);
            assert_eq!(hf_closed(NamedModule::Mxy, &a), hf_closed(NamedModule::C1, &a));
        }
    }

    #[test]
    fn additivity_n3() {
        let r = verify_additivity(3, 6).unwrap();
        assert!(r.ok(), "{:?}", r.violations);
        assert_eq!(r.multidegrees, 84);
    }

    #[test]
    fn orbit_invariance() {
        for a in multidegrees_up_to(4, 5) {
            let mut sorted = a.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            for m in NamedModule::ALL {
                assert_eq!(hf_closed(m, &a), hf_closed(m, &sorted));
            }
        }
    }
}
