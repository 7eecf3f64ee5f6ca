//! Partition combinatorics for the symmetric groups.
//!
//! Partitions index both the irreducible representations (Specht modules) and the conjugacy
//! classes (cycle types) of `S_n`. Everything here is small-shape arithmetic: enumeration,
//! hook lengths, Littlewood–Richardson coefficients by tableau enumeration, and
//! Murnaghan–Nakayama character values via rim-hook removal on beta-sets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reps::VirtualRep;

/// A weakly decreasing sequence of positive integers.
///
/// Partitions of the same size are ordered reverse-lexicographically, so `[3] < [2,1] < [1,1,1]`.
/// Partitions of different sizes are ordered by size first.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A partition of `n` read as the cycle lengths of a conjugacy class of `S_n`.
pub type CycleType = Partition;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row shape `[k]` (empty when `k = 0`).
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The one-column shape `[1^k]`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// The hook `[a, 1^l]`.
    pub fn hook(arm: usize, leg: usize) -> Self {
        let mut parts = Vec::with_capacity(leg + 1);
        if arm > 0 {
            parts.push(arm);
        }
        parts.extend(std::iter::repeat_n(1, leg));
        Self::from_unsorted(parts)
    }

    /// Two-column shape `[2^twos, 1^ones]`.
    pub fn two_column(twos: usize, ones: usize) -> Self {
        let mut parts = vec![2; twos];
        parts.extend(std::iter::repeat_n(1, ones));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length `i`, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicities `m_k` of each part size `k`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Exponent notation, e.g. `[2,1^2]`.
    pub fn exponent_string(&self) -> String {
        let mut out = String::from("[");
        let mut first = true;
        for (k, m) in self.multiplicities().into_iter().rev() {
            if !first {
                out.push(',');
            }
            first = false;
            if m == 1 {
                out.push_str(&k.to_string());
            } else {
                out.push_str(&format!("{k}^{m}"));
            }
        }
        out.push(']');
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Accepts `2,1,1`, `[2,1,1]` and exponent notation `[2,1^2]`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let bad = || Error::InvalidPartition(s.to_string());
            let base: usize = base.parse().map_err(|_| bad())?;
            let exp: usize = exp.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

/// All partitions of `k` in reverse-lexicographic order, `[k]` first and `[1^k]` last.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of standard Young tableaux of shape `lambda`, by the hook-length formula.
pub fn hook_dim(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j) - i - 1;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    (factorial(lambda.size()) / hooks)
        .to_u64()
        .expect("dimension fits in u64 for the supported shapes")
}

/// `n! / (p_1! ... p_l! (n - sum p_i)!)`.
pub fn multinomial(n: usize, parts: &[i64]) -> Result<BigUint> {
    let mut used = 0usize;
    let mut denom = BigUint::one();
    for &p in parts {
        if p < 0 {
            return Err(Error::NegativePart(p));
        }
        used += p as usize;
        denom *= factorial(p as usize);
    }
    if used > n {
        return Err(Error::InvalidArgument(format!(
            "multinomial parts sum to {used} > {n}"
        )));
    }
    denom *= factorial(n - used);
    Ok(factorial(n) / denom)
}

/// Binomial coefficient with `C(a, b) = 0` whenever `b < 0`, `b > a` or `a < 0`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Size of the conjugacy class of `S_n` with cycle type `mu`: `n! / z_mu`.
pub fn class_size(mu: &CycleType) -> u64 {
    let mut z = BigUint::one();
    for (k, m) in mu.multiplicities() {
        z *= factorial(m) * BigUint::from(k).pow(m as u32);
    }
    (factorial(mu.size()) / z).to_u64().expect("class size fits in u64")
}

/// Littlewood–Richardson coefficients `c^nu_{lambda, mu}` for all `nu`, by enumerating
/// LR tableaux of shape `nu / lambda` and content `mu`.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let mut counts: Vec<Vec<usize>> = Vec::new();
    lr_fill(lambda.parts().to_vec(), 0, mu.parts(), &mut counts, &mut out);
    out
}

// Adds the boxes labelled `label` as a horizontal strip, row by row, subject to the lattice
// condition: (#label in rows 0..=r) <= (#(label-1) in rows 0..r).
fn lr_fill(
    shape: Vec<usize>,
    label: usize,
    content: &[usize],
    counts: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if label == content.len() {
        *out.entry(Partition::from_unsorted(shape)).or_insert(0) += 1;
        return;
    }
    let rows = shape.len() + 1;
    let mut added = vec![0usize; rows];
    strip_rows(&shape, label, content[label], 0, 0, &mut added, counts, content, out);
}

#[allow(clippy::too_many_arguments)]
fn strip_rows(
    shape: &[usize],
    label: usize,
    remaining: usize,
    row: usize,
    cum: usize,
    added: &mut Vec<usize>,
    counts: &mut Vec<Vec<usize>>,
    content: &[usize],
    out: &mut BTreeMap<Partition, u64>,
) {
    if row == added.len() {
        if remaining > 0 {
            return;
        }
        let mut next = shape.to_vec();
        next.push(0);
        for (r, &t) in added.iter().enumerate() {
            next[r] += t;
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        counts.push(added.clone());
        lr_fill(next, label + 1, content, counts, out);
        counts.pop();
        return;
    }
    let old = shape.get(row).copied().unwrap_or(0);
    let cap = if row == 0 {
        remaining
    } else {
        (shape[row - 1] - old).min(remaining)
    };
    let lattice_cap = if label == 0 {
        usize::MAX
    } else {
        let prev: usize = counts[label - 1].iter().take(row).sum();
        prev.saturating_sub(cum)
    };
    for t in 0..=cap.min(lattice_cap) {
        added[row] = t;
        strip_rows(shape, label, remaining - t, row + 1, cum + t, added, counts, content, out);
    }
    added[row] = 0;
}

/// The product `[lambda] . [mu]` in the representation ring, i.e. `Ind([lambda], [mu])`.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> VirtualRep {
    let n = lambda.size() + mu.size();
    let mut rep = VirtualRep::zero(n);
    for (nu, c) in lr_coefficients(lambda, mu) {
        rep.add_term(nu, c as i64);
    }
    rep
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect()
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

fn mn_rec(beta: &mut Vec<usize>, parts: &[usize], memo: &mut MnMemo) -> i64 {
    let Some((&k, rest)) = parts.split_first() else {
        return 1;
    };
    let mut sorted = beta.clone();
    sorted.sort_unstable();
    let key = (sorted, parts.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for idx in 0..beta.len() {
        let b = beta[idx];
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        beta[idx] = target;
        let v = mn_rec(beta, rest, memo);
        beta[idx] = b;
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// Irreducible character value `chi_lambda(mu)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(&mut beta_set(lambda), mu.parts(), &mut memo))
}

/// The full character table of `S_n`, rows and columns in canonical partition order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    shapes: Vec<Partition>,
    class_sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let shapes = partitions_of(n);
        let mut memo = HashMap::new();
        let values = shapes
            .iter()
            .map(|lambda| {
                shapes
                    .iter()
                    .map(|mu| mn_rec(&mut beta_set(lambda), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let class_sizes = shapes.iter().map(class_size).collect();
        CharacterTable {
            n,
            shapes,
            class_sizes,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n`; used both as irreducible labels and as class labels.
    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    pub fn value(&self, irrep: usize, class: usize) -> i64 {
        self.values[irrep][class]
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.shapes.iter().position(|p| p == lambda)
    }
}
