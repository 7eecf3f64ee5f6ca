//! Orbit modules `(rho_1, ..., rho_l)_<d_1^p_1, ..., d_l^p_l>` and the descriptor lists for
//! Ext(P, C), Ext(D, C), the exterior algebra A and the intermediate source modules.
//!
//! A pattern `(2^a, 1^b, 0^r) x (a+b-c, a+c)` is always stored through its canonical
//! representative, with at least as many x's as y's (so `c <= b/2`).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinat::{multinomial, Partition};
use crate::error::{Error, Result};
use crate::reps::{induce, S2Label, VirtualRep};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultidegreePattern {
    n: usize,
    /// `(value, multiplicity)`, values strictly decreasing, multiplicities positive,
    /// multiplicities summing to `n`.
    blocks: Vec<(usize, usize)>,
    bidegree: Option<(usize, usize)>,
}

impl MultidegreePattern {
    /// Builds a pattern from its nonzero blocks; the remaining coordinates form the 0 block.
    pub fn new(n: usize, blocks: &[(usize, usize)], bidegree: Option<(usize, usize)>) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &(d, p) in blocks {
            if p == 0 {
                continue;
            }
            if d == 0 {
                return Err(Error::MalformedPattern("0 block is implicit".into()));
            }
            if out.last().is_some_and(|&(prev, _)| prev <= d) {
                return Err(Error::MalformedPattern(format!("{blocks:?} values not strictly decreasing")));
            }
            out.push((d, p));
        }
        let used: usize = out.iter().map(|b| b.1).sum();
        if used > n {
            return Err(Error::MalformedPattern(format!("{blocks:?} has more than {n} entries")));
        }
        if used < n {
            out.push((0, n - used));
        }
        let pat = MultidegreePattern {
            n,
            blocks: out,
            bidegree,
        };
        if let Some((x, y)) = bidegree {
            if x + y != pat.total_degree() {
                return Err(Error::MalformedPattern(format!(
                    "bidegree ({x},{y}) does not add up to {}",
                    pat.total_degree()
                )));
            }
        }
        Ok(pat)
    }

    /// `(2^a, 1^b, 0^{n-a-b})`, optionally with bidegree `(a+b-c, a+c)`.
    pub fn abc(n: usize, a: usize, b: usize, c: Option<usize>) -> Result<Self> {
        if a + b > n {
            return Err(Error::PatternOutOfRange(format!("a + b = {} > n = {n}", a + b)));
        }
        let bidegree = match c {
            Some(c) if c > b / 2 => {
                return Err(Error::MalformedPattern(format!("c = {c} exceeds b/2 for b = {b}")))
            }
            Some(c) => Some((a + b - c, a + c)),
            None => None,
        };
        Self::new(n, &[(2, a), (1, b)], bidegree)
    }

    /// Canonical pattern of the orbit of a raw multidegree.
    pub fn from_multidegree(a: &[usize], bidegree: Option<(usize, usize)>) -> Result<Self> {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &v in a.iter().filter(|&&v| v > 0) {
            *counts.entry(v).or_insert(0) += 1;
        }
        let blocks: Vec<(usize, usize)> = counts.into_iter().rev().collect();
        let bidegree = bidegree.map(|(x, y)| (x.max(y), x.min(y)));
        Self::new(a.len(), &blocks, bidegree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn bidegree(&self) -> Option<(usize, usize)> {
        self.bidegree
    }

    pub fn total_degree(&self) -> usize {
        self.blocks.iter().map(|(d, p)| d * p).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.bidegree.is_some_and(|(x, y)| x == y)
    }

    /// `(a, b)` when the values lie in `{2, 1, 0}`.
    pub fn ab(&self) -> Option<(usize, usize)> {
        let mut a = 0;
        let mut b = 0;
        for &(d, p) in &self.blocks {
            match d {
                2 => a = p,
                1 => b = p,
                0 => {}
                _ => return None,
            }
        }
        Some((a, b))
    }

    /// The sorted (weakly decreasing) representative.
    pub fn representative(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|&(d, p)| std::iter::repeat_n(d, p))
            .collect()
    }

    pub fn contains(&self, a: &[usize]) -> bool {
        let mut sorted = a.to_vec();
        sorted.sort_unstable_by(|x, y| y.cmp(x));
        sorted == self.representative()
    }

    /// Number of distinct multidegrees in the `S_n`-orbit.
    pub fn orbit_size(&self) -> BigInt {
        let parts: Vec<i64> = self.blocks.iter().map(|b| b.1 as i64).collect();
        BigInt::from(multinomial(self.n, &parts).expect("blocks sum to n"))
    }

    /// All multidegrees in the `S_n`-orbit, in lexicographic order.
    pub fn orbit(&self) -> Vec<Vec<usize>> {
        let mut cur = self.representative();
        cur.sort_unstable();
        let mut out = vec![cur.clone()];
        while next_permutation(&mut cur) {
            out.push(cur.clone());
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for MultidegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, &(d, p)) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if p == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{p}")?;
            }
        }
        write!(f, ">")?;
        if let Some((x, y)) = self.bidegree {
            write!(f, "x({x},{y})")?;
        }
        Ok(())
    }
}

/// `(rho_1, ..., rho_l)_<pattern>`, tensored with an `S_2` part when the pattern carries a
/// bidegree. The `S_2` part is `Ind` exactly when the bidegree is asymmetric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "OrbitModuleRepr", try_from = "OrbitModuleRepr")]
pub struct OrbitModule {
    pattern: MultidegreePattern,
    block_reps: Vec<VirtualRep>,
    g2: Option<S2Label>,
}

impl OrbitModule {
    pub fn new(pattern: MultidegreePattern, block_reps: Vec<VirtualRep>, g2: Option<S2Label>) -> Result<Self> {
        if block_reps.len() != pattern.blocks.len() {
            return Err(Error::MalformedPattern(format!(
                "{} block reps for {} blocks",
                block_reps.len(),
                pattern.blocks.len()
            )));
        }
        for (rep, &(_, p)) in block_reps.iter().zip(&pattern.blocks) {
            if rep.n() != p || rep.has_s2() {
                return Err(Error::SizeMismatch {
                    expected: p,
                    found: rep.n(),
                });
            }
        }
        let expected = match pattern.bidegree {
            None => None,
            Some((x, y)) if x != y => Some(S2Label::Ind),
            Some(_) => match g2 {
                Some(S2Label::Ind) | None => {
                    return Err(Error::MalformedPattern(format!(
                        "symmetric bidegree needs a one-dimensional S_2 part in {pattern}"
                    )))
                }
                l => l,
            },
        };
        if g2 != expected {
            return Err(Error::MalformedPattern(format!("S_2 part {g2:?} does not fit {pattern}")));
        }
        Ok(OrbitModule {
            pattern,
            block_reps,
            g2,
        })
    }

    pub fn pattern(&self) -> &MultidegreePattern {
        &self.pattern
    }

    pub fn block_reps(&self) -> &[VirtualRep] {
        &self.block_reps
    }

    pub fn g2(&self) -> Option<S2Label> {
        self.g2
    }

    /// `multinomial(n; p_1, ..., p_l) * prod dim(rho_i) * dim(S_2 part)`.
    pub fn dim(&self) -> BigInt {
        let blocks: BigInt = self.block_reps.iter().map(|r| BigInt::from(r.dim())).product();
        self.pattern.orbit_size() * blocks * BigInt::from(self.g2.map_or(1, S2Label::dim))
    }

    /// The `S_n` (or `S_n x S_2`) representation, by Littlewood–Richardson induction.
    pub fn decompose(&self) -> Result<VirtualRep> {
        for r in &self.block_reps {
            r.require_effective(&format!("block of {}", self.pattern))?;
        }
        let ind = induce(&self.block_reps)?;
        match self.g2 {
            None => Ok(ind),
            Some(l) => ind.tensor_s2(l),
        }
    }
}

impl fmt::Display for OrbitModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.block_reps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")_{}", self.pattern)?;
        if let Some(l) = self.g2 {
            write!(f, " ⊠ {l}")?;
        }
        Ok(())
    }
}

type BlockTerms = Vec<(Partition, i64)>;

#[derive(Serialize, Deserialize)]
struct OrbitModuleRepr {
    pattern: Vec<(usize, usize)>,
    bidegree: Option<(usize, usize)>,
    blocks: Vec<BlockTerms>,
    g2: Option<S2Label>,
    #[serde(with = "crate::bigjson")]
    dim: BigInt,
}

impl From<OrbitModule> for OrbitModuleRepr {
    fn from(m: OrbitModule) -> Self {
        let dim = m.dim();
        OrbitModuleRepr {
            pattern: m.pattern.blocks.clone(),
            bidegree: m.pattern.bidegree,
            blocks: m
                .block_reps
                .iter()
                .map(|r| r.terms().map(|(i, k)| (i.shape.clone(), k)).collect())
                .collect(),
            g2: m.g2,
            dim,
        }
    }
}

impl TryFrom<OrbitModuleRepr> for OrbitModule {
    type Error = Error;

    fn try_from(r: OrbitModuleRepr) -> Result<Self> {
        let nonzero: Vec<(usize, usize)> = r.pattern.iter().copied().filter(|b| b.0 > 0).collect();
        let n = r.pattern.iter().map(|b| b.1).sum();
        let pattern = MultidegreePattern::new(n, &nonzero, r.bidegree)?;
        if pattern.blocks != r.pattern {
            return Err(Error::MalformedPattern(format!("{:?} is not canonical", r.pattern)));
        }
        let reps = r
            .blocks
            .into_iter()
            .zip(&pattern.blocks)
            .map(|(terms, &(_, p))| VirtualRep::from_terms(p, terms))
            .collect::<Result<Vec<_>>>()?;
        let m = OrbitModule::new(pattern, reps, r.g2)?;
        if m.dim() != r.dim {
            return Err(Error::InvalidArgument(format!("stored dim {} != {}", r.dim, m.dim())));
        }
        Ok(m)
    }
}

/// All nonzero orbit modules of `Ext^p(-, C)` in internal degree `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandDescriptor {
    pub p: usize,
    pub q: usize,
    pub strand: u8,
    pub modules: Vec<OrbitModule>,
}

impl StrandDescriptor {
    pub fn dim(&self) -> BigInt {
        self.modules.iter().map(OrbitModule::dim).sum()
    }

    pub fn decompose(&self) -> Result<VirtualRep> {
        let mut modules = self.modules.iter();
        let first = modules
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty descriptor".into()))?
            .decompose()?;
        modules.try_fold(first, |acc, m| acc.add(&m.decompose()?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SourceKind {
    /// The per-index source modules S_i.
    Si,
    /// The maximal ideal of the exterior algebra twisted by the sign of S_2.
    Mef,
    /// Sources of degree one in the determinantal direction.
    DetDeg1,
    /// Sources of degree two in the determinantal direction.
    DetDeg2,
}

fn irr(shape: Partition) -> VirtualRep {
    VirtualRep::irreducible(shape)
}

fn ind(blocks: &[Partition]) -> VirtualRep {
    let reps: Vec<VirtualRep> = blocks.iter().cloned().map(irr).collect();
    induce(&reps).expect("plain blocks")
}

/// One middle-block rep per `S_2` label, for the symmetric case `c = b/2`.
type SymmetricTerms = Vec<(VirtualRep, usize)>;

/// Emits `(F, M, [r])` modules: one `Ind`-module when `2c != b`, else one module per
/// `(middle rep, sign exponent)` pair, merged by label.
fn emit(
    n: usize,
    (a, b, c): (usize, usize, usize),
    first: &VirtualRep,
    asym: impl FnOnce() -> VirtualRep,
    sym: impl FnOnce() -> SymmetricTerms,
) -> Result<Vec<OrbitModule>> {
    let pattern = MultidegreePattern::abc(n, a, b, Some(c))?;
    let r = n - a - b;
    let reps_for = |middle: VirtualRep| {
        let mut v = Vec::new();
        if a > 0 {
            v.push(first.clone());
        }
        if b > 0 {
            v.push(middle);
        }
        if r > 0 {
            v.push(VirtualRep::trivial(r));
        }
        v
    };
    if 2 * c != b {
        let m = asym();
        if m.is_zero() || first.is_zero() {
            return Ok(Vec::new());
        }
        return Ok(vec![OrbitModule::new(pattern, reps_for(m), Some(S2Label::Ind))?]);
    }
    let mut by_label: BTreeMap<S2Label, VirtualRep> = BTreeMap::new();
    for (m, e) in sym() {
        let label = S2Label::sign_power(e);
        let slot = by_label.entry(label).or_insert_with(|| VirtualRep::zero(b));
        *slot = slot.add(&m)?;
    }
    let mut out = Vec::new();
    for (label, m) in by_label {
        if m.is_zero() || first.is_zero() {
            continue;
        }
        out.push(OrbitModule::new(pattern.clone(), reps_for(m), Some(label))?);
    }
    Ok(out)
}

fn a_middle_asym(b: usize, c: usize) -> VirtualRep {
    ind(&[Partition::column(b - c), Partition::column(c)])
}

/// `[2^{c-j}, 1^{2j}]` with sign exponent `base + c - j`, for `j = 0..=c`.
fn a_middle_sym(c: usize, base: usize) -> SymmetricTerms {
    (0..=c)
        .map(|j| (irr(Partition::two_column(c - j, 2 * j)), base + c - j))
        .collect()
}

fn check_abc(n: usize, a: usize, b: usize, c: usize) -> Result<()> {
    if a + b > n {
        return Err(Error::PatternOutOfRange(format!("a + b = {} > n = {n}", a + b)));
    }
    if c > b / 2 {
        return Err(Error::MalformedPattern(format!("c = {c} exceeds b/2 for b = {b}")));
    }
    Ok(())
}

/// The piece of the exterior algebra A on the 2n dual variables in the orbit of
/// `(2^a, 1^b, 0^r) x (a+b-c, a+c)`.
pub fn exterior_orbit_rep(n: usize, a: usize, b: usize, c: usize) -> Result<Vec<OrbitModule>> {
    check_abc(n, a, b, c)?;
    emit(
        n,
        (a, b, c),
        &irr(Partition::row(a)),
        || a_middle_asym(b, c),
        || a_middle_sym(c, a),
    )
}

pub fn source_module_descriptors(
    kind: SourceKind,
    n: usize,
    a: usize,
    b: usize,
    c: usize,
) -> Result<Vec<OrbitModule>> {
    check_abc(n, a, b, c)?;
    let out_of_range = |why: &str| Err(Error::PatternOutOfRange(format!("{kind:?} at (a,b,c) = ({a},{b},{c}): {why}")));
    match kind {
        SourceKind::Si => {
            if a < 1 {
                return out_of_range("needs a >= 1");
            }
            let first = ind(&[Partition::row(1), Partition::row(a - 1)]);
            emit(n, (a, b, c), &first, || a_middle_asym(b, c), || a_middle_sym(c, a - 1))
        }
        SourceKind::Mef => {
            if 2 * a + b < 2 || (a == 0 && c == 0) {
                return out_of_range("needs 2a + b >= 2 and c >= 1 when a = 0");
            }
            emit(
                n,
                (a, b, c),
                &irr(Partition::row(a)),
                || a_middle_asym(b, c),
                || a_middle_sym(c, a + 1),
            )
        }
        SourceKind::DetDeg1 => {
            if b < 2 || c < 1 {
                return out_of_range("needs b >= 2 and c >= 1");
            }
            emit(
                n,
                (a, b, c),
                &irr(Partition::row(a)),
                || {
                    ind(&[
                        Partition::column(2),
                        Partition::column(b - 1 - c),
                        Partition::column(c - 1),
                    ])
                },
                || {
                    (0..c)
                        .map(|j| {
                            let m = ind(&[Partition::column(2), Partition::two_column(c - 1 - j, 2 * j)]);
                            (m, a + c - j)
                        })
                        .collect()
                },
            )
        }
        SourceKind::DetDeg2 => {
            if a < 2 {
                return out_of_range("needs a >= 2");
            }
            let first = ind(&[Partition::column(2), Partition::row(a - 2)]);
            emit(n, (a, b, c), &first, || a_middle_asym(b, c), || a_middle_sym(c, a - 1))
        }
    }
}

fn sub_modules(lhs: &[OrbitModule], rhs: &[OrbitModule], context: &str) -> Result<Vec<OrbitModule>> {
    // both sides share the pattern and the first and last blocks; subtract middle blocks label by label
    let mut by_label: BTreeMap<Option<S2Label>, (OrbitModule, VirtualRep)> = BTreeMap::new();
    let middle_index = |m: &OrbitModule| m.pattern.blocks.iter().position(|b| b.0 == 1);
    for (sign, list) in [(1, lhs), (-1, rhs)] {
        for m in list {
            let k = middle_index(m).ok_or_else(|| Error::MalformedPattern(format!("{} has no 1 block", m.pattern)))?;
            let entry = by_label
                .entry(m.g2)
                .or_insert_with(|| (m.clone(), VirtualRep::zero(m.block_reps[k].n())));
            entry.1 = entry.1.add(&m.block_reps[k].scale(sign))?;
        }
    }
    let mut out = Vec::new();
    for (_, (mut template, middle)) in by_label {
        middle.require_effective(context)?;
        if middle.is_zero() {
            continue;
        }
        let k = middle_index(&template).expect("checked above");
        template.block_reps[k] = middle;
        out.push(template);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ideal {
    P,
    D,
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ideal::P => "P",
            Ideal::D => "D",
        })
    }
}

impl std::str::FromStr for Ideal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Ideal::P),
            "D" | "d" => Ok(Ideal::D),
            _ => Err(Error::InvalidArgument(format!("unknown ideal {s:?}"))),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidN(format!("n = {n}, need n >= 2")));
    }
    Ok(())
}

fn group(items: Vec<(usize, usize, Vec<OrbitModule>)>) -> Vec<StrandDescriptor> {
    let mut map: BTreeMap<(usize, usize), Vec<OrbitModule>> = BTreeMap::new();
    for (p, q, mods) in items {
        map.entry((p, q)).or_default().extend(mods);
    }
    map.into_iter()
        .filter(|(_, m)| !m.is_empty())
        .map(|((p, q), modules)| StrandDescriptor {
            p,
            q,
            strand: (q - p - 1) as u8,
            modules,
        })
        .collect()
}

/// Ext^p(P, C) as `S_n x S_2` orbit modules, one descriptor per nonzero `(p, q)`.
pub fn ext_p_descriptors_g2(n: usize) -> Result<Vec<StrandDescriptor>> {
    check_n(n)?;
    let mut items = Vec::new();
    // generators
    let pat = MultidegreePattern::abc(n, 0, 2, Some(1))?;
    let mut reps = vec![VirtualRep::trivial(2)];
    if n > 2 {
        reps.push(VirtualRep::trivial(n - 2));
    }
    items.push((0, 2, vec![OrbitModule::new(pat, reps, Some(S2Label::Triv))?]));
    // second strand on <1^b>: a = 0, b = p + 3
    for b in 3..=n {
        for c in 1..=b / 2 {
            let det = source_module_descriptors(SourceKind::DetDeg1, n, 0, b, c)?;
            let mef = source_module_descriptors(SourceKind::Mef, n, 0, b, c)?;
            let diff = sub_modules(&det, &mef, &format!("Ext(P) at <1^{b}>, c = {c}"))?;
            items.push((b - 3, b, diff));
        }
    }
    for a in 1..=n {
        for b in 0..=n - a {
            // second strand with a >= 1: 2a + b = p + 3, b >= 2
            if b >= 2 && 2 * a + b >= 3 {
                for c in 1..=b / 2 {
                    let m = source_module_descriptors(SourceKind::DetDeg1, n, a, b, c)?;
                    items.push((2 * a + b - 3, 2 * a + b, m));
                }
            }
            // third strand: 2a + b = p + 4, a >= 3
            if a >= 3 {
                let first = irr(Partition::hook(a - 2, 2));
                for c in 0..=b / 2 {
                    let m = emit(n, (a, b, c), &first, || a_middle_asym(b, c), || a_middle_sym(c, a - 1))?;
                    items.push((2 * a + b - 4, 2 * a + b, m));
                }
            }
        }
    }
    Ok(group(items))
}

/// Ext^p(P, C) as `S_n` orbit modules, with the sums over `c` already taken.
pub fn ext_p_descriptors_sn(n: usize) -> Result<Vec<StrandDescriptor>> {
    check_n(n)?;
    let mut items = Vec::new();
    let pat = MultidegreePattern::abc(n, 0, 2, None)?;
    let mut reps = vec![VirtualRep::trivial(2)];
    if n > 2 {
        reps.push(VirtualRep::trivial(n - 2));
    }
    items.push((0, 2, vec![OrbitModule::new(pat, reps, None)?]));
    let with_blocks = |a: usize, b: usize, first: VirtualRep, middle: VirtualRep| -> Result<OrbitModule> {
        let pat = MultidegreePattern::abc(n, a, b, None)?;
        let mut reps = Vec::new();
        if a > 0 {
            reps.push(first);
        }
        if b > 0 {
            reps.push(middle);
        }
        if n > a + b {
            reps.push(VirtualRep::trivial(n - a - b));
        }
        OrbitModule::new(pat, reps, None)
    };
    // second strand, <1^{p+3}>
    for b in 3..=n {
        let p = b - 3;
        let mut m = VirtualRep::zero(b);
        for c in 0..=p + 1 {
            m = m.add(&ind(&[
                Partition::column(2),
                Partition::column(p + 1 - c),
                Partition::column(c),
            ]))?;
            m = m.sub(&ind(&[Partition::column(p + 2 - c), Partition::column(c + 1)]))?;
        }
        m.require_effective(&format!("second strand at <1^{b}>"))?;
        if !m.is_zero() {
            items.push((p, b, vec![with_blocks(0, b, VirtualRep::zero(0), m)?]));
        }
    }
    for a in 1..=n {
        for b in 0..=n - a {
            if b >= 2 {
                let mut m = VirtualRep::zero(b);
                for c in 0..=b - 2 {
                    m = m.add(&ind(&[
                        Partition::column(2),
                        Partition::column(b - 2 - c),
                        Partition::column(c),
                    ]))?;
                }
                items.push((2 * a + b - 3, 2 * a + b, vec![with_blocks(a, b, irr(Partition::row(a)), m)?]));
            }
            if a >= 3 {
                let mut m = VirtualRep::zero(b);
                for c in 0..=b {
                    m = m.add(&a_middle_asym(b, c))?;
                }
                let first = irr(Partition::hook(a - 2, 2));
                items.push((2 * a + b - 4, 2 * a + b, vec![with_blocks(a, b, first, m)?]));
            }
        }
    }
    Ok(group(items))
}

/// Ext^p(P, C); with `g2` set the `S_2` factor is kept.
pub fn ext_p_descriptors(n: usize, g2: bool) -> Result<Vec<StrandDescriptor>> {
    if g2 {
        ext_p_descriptors_g2(n)
    } else {
        ext_p_descriptors_sn(n)
    }
}

fn ext_d_ii(n: usize, a: usize, b: usize, c: usize) -> Result<Vec<OrbitModule>> {
    check_abc(n, a, b, c)?;
    let first = irr(Partition::hook(a - 1, 1));
    emit(n, (a, b, c), &first, || a_middle_asym(b, c), || a_middle_sym(c, a - 1))
}

/// Ext^p(D, C) as `S_n x S_2` orbit modules.
pub fn ext_d_descriptors(n: usize) -> Result<Vec<StrandDescriptor>> {
    check_n(n)?;
    let mut items = Vec::new();
    for b in 2..=n {
        for c in 1..=b / 2 {
            items.push((b - 2, b, source_module_descriptors(SourceKind::Mef, n, 0, b, c)?));
        }
    }
    for a in 2..=n {
        for b in 0..=n - a {
            for c in 0..=b / 2 {
                items.push((2 * a + b - 3, 2 * a + b, ext_d_ii(n, a, b, c)?));
            }
        }
    }
    Ok(group(items))
}

pub fn descriptors(n: usize, ideal: Ideal, g2: bool) -> Result<Vec<StrandDescriptor>> {
    match ideal {
        Ideal::P => ext_p_descriptors(n, g2),
        Ideal::D if g2 => ext_d_descriptors(n),
        Ideal::D => ext_d_descriptors(n).and_then(|ds| ds.into_iter().map(restrict_descriptor).collect()),
    }
}

fn restrict_descriptor(d: StrandDescriptor) -> Result<StrandDescriptor> {
    let mut modules = Vec::new();
    for m in d.modules {
        let copies = m.g2.map_or(1, S2Label::dim);
        let pattern = MultidegreePattern {
            bidegree: None,
            ..m.pattern.clone()
        };
        for _ in 0..copies {
            modules.push(OrbitModule::new(pattern.clone(), m.block_reps.clone(), None)?);
        }
    }
    Ok(StrandDescriptor { modules, ..d })
}

/// Sum of all modules of one descriptor list living on the given pattern (ignoring bidegree),
/// as a representation.
pub fn decompose_on_pattern(descs: &[StrandDescriptor], p: usize, pattern: &MultidegreePattern) -> Result<Option<VirtualRep>> {
    let mut acc: Option<VirtualRep> = None;
    for d in descs.iter().filter(|d| d.p == p) {
        for m in &d.modules {
            if m.pattern.blocks == pattern.blocks && m.pattern.bidegree == pattern.bidegree {
                let r = m.decompose()?;
                acc = Some(match acc {
                    None => r,
                    Some(x) => x.add(&r)?,
                });
            }
        }
    }
    Ok(acc)
}

/// One consistency relation between descriptor families, evaluated at one pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyItem {
    pub relation: String,
    pub pattern: String,
    pub lhs: VirtualRep,
    pub rhs: VirtualRep,
}

impl ConsistencyItem {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.lhs.is_effective()
    }
}

fn total(n: usize, mods: &[OrbitModule]) -> Result<VirtualRep> {
    mods.iter()
        .try_fold(VirtualRep::zero_s2(n), |acc, m| acc.add(&m.decompose()?))
}

/// Checks the relations tying Ext(P), Ext(D), A and the source modules together, for every
/// admissible pattern of `S_n x S_2` type.
pub fn consistency_checks(n: usize) -> Result<Vec<ConsistencyItem>> {
    check_n(n)?;
    let ext_p = ext_p_descriptors_g2(n)?;
    let ext_d = ext_d_descriptors(n)?;
    let find = |descs: &[StrandDescriptor], pat: &MultidegreePattern, p: usize| -> Result<VirtualRep> {
        let mut acc = VirtualRep::zero_s2(n);
        for d in descs.iter().filter(|d| d.p == p) {
            for m in d.modules.iter().filter(|m| &m.pattern == pat) {
                acc = acc.add(&m.decompose()?)?;
            }
        }
        Ok(acc)
    };
    let mut out = Vec::new();
    let mut push = |relation: &str, pat: &MultidegreePattern, lhs: VirtualRep, rhs: VirtualRep| {
        out.push(ConsistencyItem {
            relation: relation.to_string(),
            pattern: pat.to_string(),
            lhs,
            rhs,
        })
    };
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=b / 2 {
                let pat = MultidegreePattern::abc(n, a, b, Some(c))?;
                let q = 2 * a + b;
                let src = |k| source_module_descriptors(k, n, a, b, c).and_then(|m| total(n, &m));
                if q >= 2 && !(a == 0 && c == 0) {
                    let mef = src(SourceKind::Mef)?;
                    let ext = total(n, &exterior_orbit_rep(n, a, b, c)?)?;
                    push("m_ef = A twisted by sign", &pat, mef.clone(), ext.twist_sign());
                    if a == 0 {
                        push("Ext(D) first strand = m_ef", &pat, find(&ext_d, &pat, b - 2)?, mef.clone());
                        if b >= 3 {
                            let det1 = src(SourceKind::DetDeg1)?;
                            push("Ext(P) second strand on <1^b> = det_deg1 - m_ef", &pat, find(&ext_p, &pat, b - 3)?, det1.sub(&mef)?);
                        }
                    } else {
                        let dii = if a >= 2 { find(&ext_d, &pat, q - 3)? } else { VirtualRep::zero_s2(n) };
                        push("Ext(D) second strand = S_i - m_ef", &pat, dii, src(SourceKind::Si)?.sub(&mef)?);
                    }
                }
                if a >= 1 && b >= 2 && c >= 1 {
                    push("Ext(P) second strand with a >= 1 = det_deg1", &pat, find(&ext_p, &pat, q - 3)?, src(SourceKind::DetDeg1)?);
                }
                if a >= 2 {
                    let det2 = src(SourceKind::DetDeg2)?;
                    let dii = total(n, &ext_d_ii(n, a, b, c)?)?;
                    push("Ext(P) third strand = det_deg2 - Ext(D) second strand", &pat, find(&ext_p, &pat, q - 4)?, det2.sub(&dii)?);
                }
            }
        }
    }
    Ok(out)
}
