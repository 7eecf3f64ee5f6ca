//! Virtual representations of `S_n` and `S_n x S_2`.
//!
//! A [`VirtualRep`] is a formal integer combination of irreducibles. Over `S_n x S_2` the
//! irreducibles are pairs `[lambda] ⊠ triv` and `[lambda] ⊠ sign`; the two-dimensional
//! induced representation of `S_2` is never stored, it is expanded into `triv + sign` on entry.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{lr_coefficients, partitions_of, CharacterTable, CycleType, Partition};
use crate::error::{Error, Result};

/// Representation of the `S_2` swapping the rows `x <-> y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum S2Label {
    /// `[2]`
    Triv,
    /// `[1^2]`
    Sign,
    /// `[2] + [1^2]`, induced from the trivial subgroup.
    Ind,
}

impl S2Label {
    /// `[1^2]^{⊗k}`.
    pub fn sign_power(k: usize) -> Self {
        if k.is_multiple_of(2) {
            S2Label::Triv
        } else {
            S2Label::Sign
        }
    }

    pub fn dim(self) -> u64 {
        match self {
            S2Label::Ind => 2,
            _ => 1,
        }
    }

    /// Character value on the identity (`swap = false`) or the transposition.
    pub fn value(self, swap: bool) -> i64 {
        match (self, swap) {
            (S2Label::Triv, _) => 1,
            (S2Label::Sign, false) => 1,
            (S2Label::Sign, true) => -1,
            (S2Label::Ind, false) => 2,
            (S2Label::Ind, true) => 0,
        }
    }

    pub fn components(self) -> &'static [S2Label] {
        match self {
            S2Label::Triv => &[S2Label::Triv],
            S2Label::Sign => &[S2Label::Sign],
            S2Label::Ind => &[S2Label::Triv, S2Label::Sign],
        }
    }

    /// Tensor with the sign representation.
    pub fn twist(self) -> Self {
        match self {
            S2Label::Triv => S2Label::Sign,
            S2Label::Sign => S2Label::Triv,
            S2Label::Ind => S2Label::Ind,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            S2Label::Triv => "triv",
            S2Label::Sign => "sign",
            S2Label::Ind => "ind",
        }
    }
}

impl fmt::Display for S2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for S2Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triv" => Ok(S2Label::Triv),
            "sign" => Ok(S2Label::Sign),
            "ind" => Ok(S2Label::Ind),
            other => Err(Error::InvalidArgument(format!("unknown S_2 label {other}"))),
        }
    }
}

/// An irreducible of `S_n` (`s2 = None`) or of `S_n x S_2` (`s2` is `Triv` or `Sign`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Irrep {
    pub shape: Partition,
    pub s2: Option<S2Label>,
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s2 {
            None => write!(f, "{}", self.shape.exponent_string()),
            Some(l) => write!(f, "{}⊠{}", self.shape.exponent_string(), l),
        }
    }
}

/// A conjugacy class of `S_n` (or `S_n x S_2`, where `swap` records the `S_2` component).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassKey {
    pub cycle: CycleType,
    pub swap: bool,
}

/// Integer-valued class function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    pub n: usize,
    pub s2: bool,
    pub values: BTreeMap<ClassKey, i64>,
}

impl ClassFunction {
    pub fn zero(n: usize, s2: bool) -> Self {
        let mut values = BTreeMap::new();
        for cycle in partitions_of(n) {
            values.insert(ClassKey { cycle: cycle.clone(), swap: false }, 0);
            if s2 {
                values.insert(ClassKey { cycle, swap: true }, 0);
            }
        }
        ClassFunction { n, s2, values }
    }

    pub fn get(&self, cycle: &CycleType, swap: bool) -> i64 {
        self.values
            .get(&ClassKey { cycle: cycle.clone(), swap })
            .copied()
            .unwrap_or(0)
    }
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VirtualRepRepr", try_from = "VirtualRepRepr")]
pub struct VirtualRep {
    n: usize,
    s2: bool,
    terms: BTreeMap<Irrep, i64>,
}

#[derive(Serialize, Deserialize)]
struct VirtualRepRepr {
    n: usize,
    s2: bool,
    terms: Vec<(Irrep, i64)>,
}

impl From<VirtualRep> for VirtualRepRepr {
    fn from(r: VirtualRep) -> Self {
        VirtualRepRepr {
            n: r.n,
            s2: r.s2,
            terms: r.terms.into_iter().collect(),
        }
    }
}

impl TryFrom<VirtualRepRepr> for VirtualRep {
    type Error = Error;

    fn try_from(r: VirtualRepRepr) -> Result<Self> {
        let mut rep = if r.s2 {
            VirtualRep::zero_s2(r.n)
        } else {
            VirtualRep::zero(r.n)
        };
        for (irrep, m) in r.terms {
            rep.check_irrep(&irrep)?;
            match irrep.s2 {
                None => rep.add_term(irrep.shape, m),
                Some(l) => rep.add_term_s2(irrep.shape, l, m),
            }
        }
        Ok(rep)
    }
}

impl VirtualRep {
    pub fn zero(n: usize) -> Self {
        VirtualRep {
            n,
            s2: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_s2(n: usize) -> Self {
        VirtualRep {
            n,
            s2: true,
            terms: BTreeMap::new(),
        }
    }

    pub fn irreducible(shape: Partition) -> Self {
        let mut r = Self::zero(shape.size());
        r.add_term(shape, 1);
        r
    }

    pub fn irreducible_s2(shape: Partition, label: S2Label) -> Self {
        let mut r = Self::zero_s2(shape.size());
        r.add_term_s2(shape, label, 1);
        r
    }

    /// Trivial representation `[n]`.
    pub fn trivial(n: usize) -> Self {
        Self::irreducible(Partition::row(n))
    }

    /// Sign representation `[1^n]`.
    pub fn sign(n: usize) -> Self {
        Self::irreducible(Partition::column(n))
    }

    /// Builds a plain `S_n` representation from `(shape, multiplicity)` pairs.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Partition, i64)>) -> Result<Self> {
        let mut r = Self::zero(n);
        for (shape, m) in terms {
            if shape.size() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: shape.size(),
                });
            }
            r.add_term(shape, m);
        }
        Ok(r)
    }

    fn check_irrep(&self, irrep: &Irrep) -> Result<()> {
        if irrep.shape.size() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: irrep.shape.size(),
            });
        }
        if irrep.s2.is_some() != self.s2 {
            return Err(Error::AmbientMismatch(format!(
                "term {irrep} does not match the ambient group"
            )));
        }
        Ok(())
    }

    fn bump(&mut self, irrep: Irrep, m: i64) {
        if m == 0 {
            return;
        }
        match self.terms.entry(irrep) {
            Entry::Vacant(e) => {
                e.insert(m);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    /// Adds `m [shape]`. Panics if `shape` has the wrong size or the rep carries an `S_2` factor.
    pub fn add_term(&mut self, shape: Partition, m: i64) {
        assert!(!self.s2, "plain term added to an S_n x S_2 representation");
        assert_eq!(shape.size(), self.n, "term {shape} in a representation of S_{}", self.n);
        self.bump(Irrep { shape, s2: None }, m);
    }

    /// Adds `m [shape] ⊠ label`, expanding `Ind` into `triv + sign`.
    pub fn add_term_s2(&mut self, shape: Partition, label: S2Label, m: i64) {
        assert!(self.s2, "S_2-labelled term added to a plain representation");
        assert_eq!(shape.size(), self.n, "term {shape} in a representation of S_{}", self.n);
        for &l in label.components() {
            self.bump(
                Irrep {
                    shape: shape.clone(),
                    s2: Some(l),
                },
                m,
            );
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_s2(&self) -> bool {
        self.s2
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Irrep, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn multiplicity(&self, shape: &Partition, s2: Option<S2Label>) -> i64 {
        self.terms
            .get(&Irrep {
                shape: shape.clone(),
                s2,
            })
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same_ambient(&self, other: &VirtualRep) -> Result<()> {
        if self.n != other.n || self.s2 != other.s2 {
            return Err(Error::AmbientMismatch(format!(
                "S_{}{} vs S_{}{}",
                self.n,
                if self.s2 { " x S_2" } else { "" },
                other.n,
                if other.s2 { " x S_2" } else { "" },
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.check_same_ambient(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.bump(k.clone(), *v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> VirtualRep {
        let mut out = VirtualRep {
            n: self.n,
            s2: self.s2,
            terms: BTreeMap::new(),
        };
        if k != 0 {
            out.terms = self.terms.iter().map(|(i, &v)| (i.clone(), v * k)).collect();
        }
        out
    }

    /// Dimension: `sum mult * dim [lambda]`.
    pub fn dim(&self) -> i64 {
        self.terms
            .iter()
            .map(|(irrep, &m)| m * crate::combinat::hook_dim(&irrep.shape) as i64)
            .sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m >= 0)
    }

    /// Fails with a diagnostic naming `context` if any multiplicity is negative.
    pub fn require_effective(&self, context: &str) -> Result<()> {
        if self.is_effective() {
            Ok(())
        } else {
            Err(Error::NegativeMultiplicity {
                context: context.to_string(),
                detail: self.to_string(),
            })
        }
    }

    /// `self ⊠ label` as a representation of `S_n x S_2`.
    pub fn tensor_s2(&self, label: S2Label) -> Result<VirtualRep> {
        if self.s2 {
            return Err(Error::AmbientMismatch(
                "representation already carries an S_2 factor".into(),
            ));
        }
        let mut out = VirtualRep::zero_s2(self.n);
        for (irrep, &m) in &self.terms {
            out.add_term_s2(irrep.shape.clone(), label, m);
        }
        Ok(out)
    }

    /// Restriction from `S_n x S_2` to `S_n`.
    pub fn restrict_to_sn(&self) -> VirtualRep {
        let mut out = VirtualRep::zero(self.n);
        for (irrep, &m) in &self.terms {
            out.add_term(irrep.shape.clone(), m);
        }
        out
    }

    /// Tensor with `[n] ⊠ sign`; identity on plain representations.
    pub fn twist_sign(&self) -> VirtualRep {
        let mut out = VirtualRep {
            n: self.n,
            s2: self.s2,
            terms: BTreeMap::new(),
        };
        for (irrep, &m) in &self.terms {
            out.bump(
                Irrep {
                    shape: irrep.shape.clone(),
                    s2: irrep.s2.map(S2Label::twist),
                },
                m,
            );
        }
        out
    }

    pub fn character_vector(&self) -> ClassFunction {
        let table = CharacterTable::new(self.n);
        self.character_with(&table)
    }

    pub fn character_with(&self, table: &CharacterTable) -> ClassFunction {
        assert_eq!(table.n(), self.n);
        let mut cf = ClassFunction::zero(self.n, self.s2);
        for (irrep, &m) in &self.terms {
            let row = table.index_of(&irrep.shape).expect("shape of size n");
            for (col, cycle) in table.shapes().iter().enumerate() {
                let chi = table.value(row, col);
                let swaps: &[bool] = if self.s2 { &[false, true] } else { &[false] };
                for &swap in swaps {
                    let s2v = irrep.s2.map_or(1, |l| l.value(swap));
                    *cf.values
                        .get_mut(&ClassKey {
                            cycle: cycle.clone(),
                            swap,
                        })
                        .expect("all classes present") += m * chi * s2v;
                }
            }
        }
        cf
    }
}

/// Inverse of [`VirtualRep::character_vector`] via the orthogonality relations.
pub fn decompose_character(chi: &ClassFunction) -> Result<VirtualRep> {
    let table = CharacterTable::new(chi.n);
    decompose_with(chi, &table)
}

pub fn decompose_with(chi: &ClassFunction, table: &CharacterTable) -> Result<VirtualRep> {
    let n = chi.n;
    let order: i128 = table.class_sizes().iter().map(|&c| c as i128).sum::<i128>()
        * if chi.s2 { 2 } else { 1 };
    let labels: Vec<Option<S2Label>> = if chi.s2 {
        vec![Some(S2Label::Triv), Some(S2Label::Sign)]
    } else {
        vec![None]
    };
    let swaps: &[bool] = if chi.s2 { &[false, true] } else { &[false] };
    let mut out = if chi.s2 {
        VirtualRep::zero_s2(n)
    } else {
        VirtualRep::zero(n)
    };
    for (row, shape) in table.shapes().iter().enumerate() {
        for label in &labels {
            let mut acc: i128 = 0;
            for (col, cycle) in table.shapes().iter().enumerate() {
                for &swap in swaps {
                    let v = chi.get(cycle, swap) as i128;
                    let irr = table.value(row, col) as i128 * label.map_or(1, |l| l.value(swap)) as i128;
                    acc += table.class_sizes()[col] as i128 * v * irr;
                }
            }
            let irrep = Irrep {
                shape: shape.clone(),
                s2: *label,
            };
            if acc % order != 0 {
                return Err(Error::NotACharacter(irrep.to_string()));
            }
            out.bump(irrep, (acc / order) as i64);
        }
    }
    Ok(out)
}

/// `Ind` from the Young subgroup `S_{k_1} x ... x S_{k_l}` of the outer tensor product of
/// the blocks, by iterated Littlewood–Richardson products.
pub fn induce(blocks: &[VirtualRep]) -> Result<VirtualRep> {
    if let Some(b) = blocks.iter().find(|b| b.s2) {
        return Err(Error::AmbientMismatch(format!(
            "cannot induce the S_n x S_2 representation {b}"
        )));
    }
    let n: usize = blocks.iter().map(|b| b.n).sum();
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::from([(Partition::empty(), 1)]);
    for block in blocks {
        let mut next: BTreeMap<Partition, i64> = BTreeMap::new();
        for (lam, &m1) in &acc {
            for (irrep, &m2) in &block.terms {
                for (nu, c) in lr_coefficients(lam, &irrep.shape) {
                    *next.entry(nu).or_insert(0) += m1 * m2 * c as i64;
                }
            }
        }
        next.retain(|_, v| *v != 0);
        acc = next;
    }
    VirtualRep::from_terms(n, acc)
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (irrep, &m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if m < 0 { " - " } else { " + " })?;
            } else if m < 0 {
                write!(f, "-")?;
            }
            if m.abs() != 1 {
                write!(f, "{}", m.abs())?;
            }
            write!(f, "{irrep}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VirtualRep(S_{}{}: {})", self.n, if self.s2 { "xS_2" } else { "" }, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn irr(s: &str) -> VirtualRep {
        VirtualRep::irreducible(p(s))
    }

    #[test]
    fn arithmetic() {
        let a = irr("2,1");
        assert_eq!(a.add(&a).unwrap(), a.scale(2));
        let sum = irr("3").add(&irr("2,1")).unwrap();
        assert_eq!(sum.sub(&irr("3")).unwrap(), irr("2,1"));
        assert_eq!(a.add(&VirtualRep::zero(3)).unwrap(), a);
        assert!(a.add(&irr("2")).is_err());
        assert!(a.add(&a.tensor_s2(S2Label::Triv).unwrap()).is_err());
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn induce_examples() {
        let got = induce(&[irr("2"), irr("2")]).unwrap();
        let want = VirtualRep::from_terms(4, [(p("4"), 1), (p("3,1"), 1), (p("2,2"), 1)]).unwrap();
        assert_eq!(got, want);
        assert_eq!(got.dim(), 6);

        let got = induce(&[irr("1,1"), irr("1")]).unwrap();
        let want = VirtualRep::from_terms(3, [(p("2,1"), 1), (p("1,1,1"), 1)]).unwrap();
        assert_eq!(got, want);

        assert_eq!(induce(&[irr("3,1")]).unwrap(), irr("3,1"));
        // empty blocks are the identity
        assert_eq!(induce(&[irr("3,1"), VirtualRep::trivial(0)]).unwrap(), irr("3,1"));
    }

    #[test]
    fn dims() {
        let r = VirtualRep::from_terms(4, [(p("3,1"), 1), (p("2,2"), 2), (p("2,1,1"), 1)]).unwrap();
        assert_eq!(r.dim(), 10);
        assert_eq!(VirtualRep::trivial(6).dim(), 1);
        let s2 = irr("2,1").tensor_s2(S2Label::Ind).unwrap();
        assert_eq!(s2.dim(), 4);
    }

    #[test]
    fn character_vectors_s3() {
        let classes = [p("1,1,1"), p("2,1"), p("3")];
        let vals = |r: &VirtualRep| -> Vec<i64> {
            let cf = r.character_vector();
            classes.iter().map(|c| cf.get(c, false)).collect()
        };
        assert_eq!(vals(&irr("3")), vec![1, 1, 1]);
        assert_eq!(vals(&irr("1,1,1")), vec![1, -1, 1]);
        assert_eq!(vals(&irr("2,1")), vec![2, 0, -1]);
    }

    fn class_fn(n: usize, vals: &[(&str, i64)]) -> ClassFunction {
        let mut cf = ClassFunction::zero(n, false);
        for (c, v) in vals {
            cf.values.insert(
                ClassKey {
                    cycle: p(c),
                    swap: false,
                },
                *v,
            );
        }
        cf
    }

    #[test]
    fn decompose_examples() {
        let regular = class_fn(3, &[("1,1,1", 6), ("2,1", 0), ("3", 0)]);
        let want = VirtualRep::from_terms(3, [(p("3"), 1), (p("2,1"), 2), (p("1,1,1"), 1)]).unwrap();
        assert_eq!(decompose_character(&regular).unwrap(), want);

        assert_eq!(decompose_character(&irr("2,1").character_vector()).unwrap(), irr("2,1"));

        // permutation action on three points
        let perm = class_fn(3, &[("1,1,1", 3), ("2,1", 1), ("3", 0)]);
        let want = VirtualRep::from_terms(3, [(p("3"), 1), (p("2,1"), 1)]).unwrap();
        assert_eq!(decompose_character(&perm).unwrap(), want);

        let bogus = class_fn(3, &[("1,1,1", 1), ("2,1", 0), ("3", 0)]);
        assert!(matches!(decompose_character(&bogus), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn s2_characters() {
        let r = irr("2,1").tensor_s2(S2Label::Ind).unwrap();
        assert_eq!(r.multiplicity(&p("2,1"), Some(S2Label::Triv)), 1);
        assert_eq!(r.multiplicity(&p("2,1"), Some(S2Label::Sign)), 1);
        let cf = r.character_vector();
        assert_eq!(cf.get(&p("1,1,1"), false), 4);
        assert_eq!(cf.get(&p("1,1,1"), true), 0);
        assert_eq!(decompose_character(&cf).unwrap(), r);
        let s = irr("3").tensor_s2(S2Label::Sign).unwrap();
        assert_eq!(s.character_vector().get(&p("3"), true), -1);
        assert_eq!(s.twist_sign(), irr("3").tensor_s2(S2Label::Triv).unwrap());
        assert_eq!(r.restrict_to_sn(), irr("2,1").scale(2));
    }

    #[test]
    fn display_and_json() {
        let r = VirtualRep::from_terms(4, [(p("3,1"), 1), (p("2,2"), 2), (p("2,1,1"), 1)]).unwrap();
        assert_eq!(r.to_string(), "[3,1] + 2[2^2] + [2,1^2]");
        let json = serde_json::to_string(&r).unwrap();
        let back: VirtualRep = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(irr("2").sub(&irr("1,1")).unwrap().to_string(), "[2] - [1^2]");
    }
}
