//! Brute-force Tor of P and D through the Koszul complex on the 2n variables.
//!
//! Everything is computed piece by piece in a fixed multidegree `a` and x-degree `k` (the
//! y-degree is then `|a| - k`). Variable `v < n` is `x_v`, variable `n + i` is `y_i`.
//! The complex is `Λ^p(vars) ⊗ S/I`, and `Tor_p(I) = H_{p+1}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, Method, Status};
use crate::combinat::{multinomial, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::exactla::{
    image_basis, kernel_basis, q, rref, to_integer, trace_on_subquotient, ExactMatrix, SparseVec, SubspaceBasis, Q,
};
use crate::orbitmod::{decompose_on_pattern, descriptors, Ideal, MultidegreePattern};
use crate::reps::{decompose_character, ClassFunction, ClassKey, VirtualRep};

pub type Mono = Vec<u8>;

/// `(sigma, tau)` acting by `x_i -> x_sigma(i)`, `y_i -> y_sigma(i)`, then swapping `x` and `y`
/// when `swap` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub sigma: Vec<usize>,
    pub swap: bool,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement {
            sigma: (0..n).collect(),
            swap: false,
        }
    }

    /// The canonical representative of a class: cycles of the given lengths on consecutive
    /// indices, smallest indices first.
    pub fn class_representative(cycle: &Partition, swap: bool) -> Self {
        let mut sigma = Vec::with_capacity(cycle.size());
        let mut start = 0;
        for &len in cycle.parts() {
            for k in 0..len {
                sigma.push(start + (k + 1) % len);
            }
            start += len;
        }
        GroupElement { sigma, swap }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn act_var(&self, v: usize) -> usize {
        let n = self.n();
        let (row, col) = (v / n, v % n);
        let row = if self.swap { 1 - row } else { row };
        row * n + self.sigma[col]
    }

    pub fn act_multidegree(&self, a: &[usize]) -> Vec<usize> {
        let mut out = vec![0; a.len()];
        for (i, &v) in a.iter().enumerate() {
            out[self.sigma[i]] = v;
        }
        out
    }

    pub fn act_mono(&self, m: &[u8]) -> Mono {
        let mut out = vec![0; m.len()];
        for (v, &e) in m.iter().enumerate() {
            out[self.act_var(v)] = e;
        }
        out
    }

    /// Whether the element maps the piece `(a, k)` to itself.
    pub fn fixes(&self, a: &[usize], xdeg: usize) -> bool {
        let total: usize = a.iter().sum();
        self.act_multidegree(a) == a && (!self.swap || 2 * xdeg == total)
    }
}

/// Image of a sorted wedge index set, re-sorted, with the sign of the sorting permutation.
fn act_wedge(g: &GroupElement, t: &[usize]) -> (Vec<usize>, bool) {
    let mut img: Vec<usize> = t.iter().map(|&v| g.act_var(v)).collect();
    let mut negative = false;
    for i in 0..img.len() {
        for j in 0..img.len() - 1 - i {
            if img[j] > img[j + 1] {
                img.swap(j, j + 1);
                negative = !negative;
            }
        }
    }
    (img, negative)
}

/// Monomials of multidegree `a` and x-degree `k`, with the quotient `(S/I)` worked out by
/// row-reducing the span of generators times monomials.
#[derive(Debug)]
pub struct QuotientPiece {
    monomials: Vec<Mono>,
    index: HashMap<Mono, usize>,
    ideal_rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
    basis: Vec<usize>,
    basis_pos: Vec<Option<usize>>,
}

fn monomials_with(n: usize, a: &[usize], xdeg: usize) -> Vec<Mono> {
    fn rec(n: usize, a: &[usize], i: usize, left: usize, cur: &mut Mono, out: &mut Vec<Mono>) {
        if i == a.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = a[i + 1..].iter().sum();
        for u in 0..=a[i].min(left) {
            if left - u > rest {
                continue;
            }
            cur[i] = u as u8;
            cur[n + i] = (a[i] - u) as u8;
            rec(n, a, i + 1, left - u, cur, out);
        }
        cur[i] = 0;
        cur[n + i] = 0;
    }
    let mut out = Vec::new();
    rec(n, a, 0, xdeg, &mut vec![0; 2 * n], &mut out);
    out
}

impl QuotientPiece {
    fn new(ideal: Ideal, n: usize, a: &[usize], xdeg: usize) -> Self {
        let total: usize = a.iter().sum();
        let monomials = if xdeg <= total {
            monomials_with(n, a, xdeg)
        } else {
            Vec::new()
        };
        let index: HashMap<Mono, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut spanning: Vec<SparseVec> = Vec::new();
        if xdeg >= 1 && total > xdeg {
            for i in 0..n {
                for j in 0..n {
                    if i == j || a[i] == 0 || a[j] == 0 || (ideal == Ideal::P && i > j) {
                        continue;
                    }
                    let mut rest = a.to_vec();
                    rest[i] -= 1;
                    rest[j] -= 1;
                    for m in monomials_with(n, &rest, xdeg - 1) {
                        let mut terms: BTreeMap<usize, Q> = BTreeMap::new();
                        let mut mul = |xv: usize, yv: usize| {
                            let mut m2 = m.clone();
                            m2[xv] += 1;
                            m2[n + yv] += 1;
                            *terms.entry(index[&m2]).or_insert_with(Q::zero) += Q::one();
                        };
                        mul(i, j);
                        if ideal == Ideal::P {
                            mul(j, i);
                        }
                        spanning.push(terms.into_iter().filter(|(_, v)| !v.is_zero()).collect());
                    }
                }
            }
        }
        let (ideal_rows, pivots) = rref(spanning);
        let mut pivot_row = vec![None; monomials.len()];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_row[c] = Some(r);
        }
        let basis: Vec<usize> = (0..monomials.len()).filter(|&i| pivot_row[i].is_none()).collect();
        let mut basis_pos = vec![None; monomials.len()];
        for (k, &i) in basis.iter().enumerate() {
            basis_pos[i] = Some(k);
        }
        QuotientPiece {
            monomials,
            index,
            ideal_rows,
            pivot_row,
            basis,
            basis_pos,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal_rows.len()
    }

    pub fn monomials(&self) -> &[Mono] {
        &self.monomials
    }

    pub fn basis_monomial(&self, k: usize) -> &Mono {
        &self.monomials[self.basis[k]]
    }

    /// Coordinates of the class of a monomial in the quotient basis.
    pub fn reduce(&self, m: &Mono) -> SparseVec {
        let i = *self.index.get(m).expect("monomial of this piece");
        if let Some(k) = self.basis_pos[i] {
            return vec![(k, Q::one())];
        }
        let row = &self.ideal_rows[self.pivot_row[i].expect("pivot")];
        row.iter()
            .filter(|(c, _)| *c != i)
            .map(|(c, v)| (self.basis_pos[*c].expect("non-pivot column"), -v.clone()))
            .collect()
    }
}

/// Basis of `Λ^p ⊗ S/I` in one piece: wedge set `T` paired with a quotient basis element of
/// the complementary degree.
#[derive(Debug)]
pub struct KoszulBasis {
    elems: Vec<(Vec<usize>, usize)>,
    pieces: HashMap<Vec<usize>, Arc<QuotientPiece>>,
    index: HashMap<(Vec<usize>, usize), usize>,
}

impl KoszulBasis {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

fn subsets(m: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for v in start..m {
            if m - v < p - cur.len() {
                break;
            }
            cur.push(v);
            rec(m, p, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, p, 0, &mut Vec::new(), &mut out);
    out
}

/// The homology `H_k` of one piece: cycles, boundaries and the basis they live in.
#[derive(Debug)]
pub struct HomologyPiece {
    pub k: usize,
    pub basis: KoszulBasis,
    pub cycles: SubspaceBasis,
    pub boundaries: SubspaceBasis,
}

impl HomologyPiece {
    pub fn dim(&self) -> usize {
        self.cycles.dim() - self.boundaries.dim()
    }
}

type PieceCache = HashMap<(Vec<usize>, usize), Arc<QuotientPiece>>;

pub const DEFAULT_DEGREE_LIMIT: usize = 16;

/// Computes and caches quotient pieces for one ideal and one `n`.
pub struct Resolver {
    n: usize,
    ideal: Ideal,
    degree_limit: usize,
    pieces: Mutex<PieceCache>,
}

impl Resolver {
    pub fn new(n: usize, ideal: Ideal) -> Self {
        Self::with_degree_limit(n, ideal, DEFAULT_DEGREE_LIMIT)
    }

    pub fn with_degree_limit(n: usize, ideal: Ideal, degree_limit: usize) -> Self {
        Resolver {
            n,
            ideal,
            degree_limit,
            pieces: Mutex::new(HashMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ideal(&self) -> Ideal {
        self.ideal
    }

    fn check(&self, a: &[usize]) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        let total: usize = a.iter().sum();
        if total > self.degree_limit {
            return Err(Error::DegreeLimit {
                limit: self.degree_limit,
                requested: total,
            });
        }
        Ok(())
    }

    pub fn piece(&self, a: &[usize], xdeg: usize) -> Result<Arc<QuotientPiece>> {
        self.check(a)?;
        let key = (a.to_vec(), xdeg);
        if let Some(p) = self.pieces.lock().expect("cache lock").get(&key) {
            return Ok(p.clone());
        }
        let piece = Arc::new(QuotientPiece::new(self.ideal, self.n, a, xdeg));
        self.pieces.lock().expect("cache lock").insert(key, piece.clone());
        Ok(piece)
    }

    pub fn koszul_basis(&self, p: usize, a: &[usize], xdeg: usize) -> Result<KoszulBasis> {
        self.check(a)?;
        let n = self.n;
        let total: usize = a.iter().sum();
        let mut elems = Vec::new();
        let mut pieces = HashMap::new();
        let mut index = HashMap::new();
        if p <= 2 * n && xdeg <= total {
            for t in subsets(2 * n, p) {
                let mut rest = a.to_vec();
                let mut xs = 0;
                let mut fits = true;
                for &v in &t {
                    if v < n {
                        xs += 1;
                    }
                    if rest[v % n] == 0 {
                        fits = false;
                        break;
                    }
                    rest[v % n] -= 1;
                }
                let ys = p - xs;
                if !fits || xs > xdeg || ys > total - xdeg {
                    continue;
                }
                let piece = self.piece(&rest, xdeg - xs)?;
                for k in 0..piece.dim() {
                    index.insert((t.clone(), k), elems.len());
                    elems.push((t.clone(), k));
                }
                pieces.insert(t, piece);
            }
        }
        Ok(KoszulBasis { elems, pieces, index })
    }

    /// Matrix of `∂_p: K_p -> K_{p-1}` in the piece `(a, xdeg)`.
    pub fn differential(&self, p: usize, a: &[usize], xdeg: usize) -> Result<ExactMatrix> {
        let src = self.koszul_basis(p, a, xdeg)?;
        let dst = if p == 0 {
            None
        } else {
            Some(self.koszul_basis(p - 1, a, xdeg)?)
        };
        self.differential_between(&src, dst.as_ref())
    }

    fn differential_between(&self, src: &KoszulBasis, dst: Option<&KoszulBasis>) -> Result<ExactMatrix> {
        let Some(dst) = dst else {
            return Ok(ExactMatrix::zeros(0, src.len()));
        };
        let mut m = ExactMatrix::zeros(dst.len(), src.len());
        for (col, (t, k)) in src.elems.iter().enumerate() {
            let mono = src.pieces[t].basis_monomial(*k);
            for (pos, &v) in t.iter().enumerate() {
                let mut t2 = t.clone();
                t2.remove(pos);
                let mut m2 = mono.clone();
                m2[v] += 1;
                let target = &dst.pieces[&t2];
                let sign = if pos % 2 == 0 { q(1) } else { q(-1) };
                for (k2, coeff) in target.reduce(&m2) {
                    let row = dst.index[&(t2.clone(), k2)];
                    m.add_to(row, col, &sign * coeff);
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `g` on `K_p` in a piece that `g` maps to itself.
    pub fn action(&self, p: usize, a: &[usize], xdeg: usize, g: &GroupElement) -> Result<ExactMatrix> {
        let basis = self.koszul_basis(p, a, xdeg)?;
        self.action_on(&basis, a, xdeg, g)
    }

    fn action_on(&self, basis: &KoszulBasis, a: &[usize], xdeg: usize, g: &GroupElement) -> Result<ExactMatrix> {
        if !g.fixes(a, xdeg) {
            return Err(Error::InvalidArgument(format!(
                "group element does not fix the piece {a:?} with x-degree {xdeg}"
            )));
        }
        let mut m = ExactMatrix::zeros(basis.len(), basis.len());
        for (col, (t, k)) in basis.elems.iter().enumerate() {
            let mono = basis.pieces[t].basis_monomial(*k);
            let (t2, negative) = act_wedge(g, t);
            let target = basis
                .pieces
                .get(&t2)
                .ok_or_else(|| Error::StabilityViolation(format!("wedge {t:?} maps outside the piece")))?;
            let sign = if negative { q(-1) } else { q(1) };
            for (k2, coeff) in target.reduce(&g.act_mono(mono)) {
                m.add_to(basis.index[&(t2.clone(), k2)], col, &sign * coeff);
            }
        }
        Ok(m)
    }

    /// `H_k(K ⊗ S/I)` in one piece.
    pub fn homology(&self, k: usize, a: &[usize], xdeg: usize) -> Result<HomologyPiece> {
        let basis = self.koszul_basis(k, a, xdeg)?;
        let lower = if k == 0 {
            None
        } else {
            Some(self.koszul_basis(k - 1, a, xdeg)?)
        };
        let upper = self.koszul_basis(k + 1, a, xdeg)?;
        let d_k = self.differential_between(&basis, lower.as_ref())?;
        let d_up = self.differential_between(&upper, Some(&basis))?;
        Ok(HomologyPiece {
            k,
            cycles: kernel_basis(&d_k),
            boundaries: image_basis(&d_up),
            basis,
        })
    }

    /// `dim Tor_p(I)` in the piece `(a, xdeg)`.
    pub fn tor_dim_piece(&self, p: usize, a: &[usize], xdeg: usize) -> Result<usize> {
        Ok(self.homology(p + 1, a, xdeg)?.dim())
    }

    /// `dim Tor_p(I)_a`, summed over bidegrees.
    pub fn tor_dim(&self, p: usize, a: &[usize]) -> Result<usize> {
        let total: usize = a.iter().sum();
        (0..=total).map(|k| self.tor_dim_piece(p, a, k)).sum()
    }

    /// Trace of `g` on `Tor_p(I)` in a piece fixed by `g`.
    pub fn tor_trace_piece(&self, p: usize, a: &[usize], xdeg: usize, g: &GroupElement) -> Result<Q> {
        let h = self.homology(p + 1, a, xdeg)?;
        if h.basis.is_empty() {
            return Ok(Q::zero());
        }
        let m = self.action_on(&h.basis, a, xdeg, g)?;
        trace_on_subquotient(&m, &h.cycles, &h.boundaries)
    }

    /// Character of `S_n x S_2` on `Tor_p(I)` summed over the orbit of a pattern. Without a
    /// bidegree every bidegree is included.
    pub fn tor_character(&self, p: usize, pattern: &MultidegreePattern) -> Result<ClassFunction> {
        let n = self.n;
        if pattern.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: pattern.n(),
            });
        }
        let total = pattern.total_degree();
        let xdegs: Vec<usize> = match pattern.bidegree() {
            Some((x, y)) if x == y => vec![x],
            Some((x, y)) => vec![x, y],
            None => (0..=total).collect(),
        };
        let orbit = pattern.orbit();
        let mut cf = ClassFunction::zero(n, true);
        let rep = pattern.representative();
        let mut id_dim = 0usize;
        for &k in &xdegs {
            id_dim += self.tor_dim_piece(p, &rep, k)?;
        }
        for key in cf.values.keys().cloned().collect::<Vec<ClassKey>>() {
            let g = GroupElement::class_representative(&key.cycle, key.swap);
            let value = if g.sigma.iter().enumerate().all(|(i, &s)| i == s) && !g.swap {
                // the identity: every piece of the orbit has the dimension of the representative
                BigInt::from(id_dim) * pattern.orbit_size()
            } else {
                let mut acc = Q::zero();
                for a in orbit.iter().filter(|a| g.act_multidegree(a) == **a) {
                    for &k in xdegs.iter().filter(|&&k| g.fixes(a, k)) {
                        acc += self.tor_trace_piece(p, a, k, &g)?;
                    }
                }
                let v = to_integer(&acc)
                    .ok_or_else(|| Error::NotACharacter(format!("trace {acc} at class {:?}", key.cycle)))?;
                BigInt::from(v)
            };
            let v: i64 = value
                .try_into()
                .map_err(|_| Error::NotACharacter("trace out of range".into()))?;
            cf.values.insert(key, v);
        }
        Ok(cf)
    }

    pub fn tor_representation(&self, p: usize, pattern: &MultidegreePattern) -> Result<VirtualRep> {
        decompose_character(&self.tor_character(p, pattern)?)
    }
}

/// The multidegree-`a` quotient data summed over bidegrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialBasis {
    pub multidegree: Vec<usize>,
    pub monomials: Vec<Vec<usize>>,
    pub ideal_dim: usize,
    pub quotient: Vec<Vec<usize>>,
}

pub fn graded_quotient_basis(ideal: Ideal, a: &[usize]) -> Result<MonomialBasis> {
    let r = Resolver::new(a.len(), ideal);
    let total: usize = a.iter().sum();
    let mut out = MonomialBasis {
        multidegree: a.to_vec(),
        monomials: Vec::new(),
        ideal_dim: 0,
        quotient: Vec::new(),
    };
    let widen = |m: &Mono| m.iter().map(|&e| e as usize).collect::<Vec<usize>>();
    for k in 0..=total {
        let piece = r.piece(a, k)?;
        out.monomials.extend(piece.monomials().iter().map(widen));
        out.ideal_dim += piece.ideal_dim();
        out.quotient.extend((0..piece.dim()).map(|i| widen(piece.basis_monomial(i))));
    }
    Ok(out)
}

/// `∂_p` at multidegree `a`, block diagonal over the x-degrees.
pub fn koszul_differential(ideal: Ideal, p: usize, a: &[usize]) -> Result<ExactMatrix> {
    let r = Resolver::new(a.len(), ideal);
    let total: usize = a.iter().sum();
    let blocks: Vec<ExactMatrix> = (0..=total).map(|k| r.differential(p, a, k)).collect::<Result<_>>()?;
    let rows: usize = blocks.iter().map(ExactMatrix::rows).sum();
    let cols: usize = blocks.iter().map(ExactMatrix::cols).sum();
    let mut out = ExactMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in &blocks {
        for c in 0..b.cols() {
            for (r, v) in b.column(c) {
                out.add_to(r0 + r, c0 + c, v.clone());
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    Ok(out)
}

pub fn tor_dim(ideal: Ideal, p: usize, a: &[usize]) -> Result<usize> {
    Resolver::new(a.len(), ideal).tor_dim(p, a)
}

pub fn tor_character(ideal: Ideal, p: usize, pattern: &MultidegreePattern) -> Result<ClassFunction> {
    Resolver::new(pattern.n(), ideal).tor_character(p, pattern)
}

/// Brute-force Betti table, from every multidegree of total degree at most `max_degree`
/// (default `2n + 2`), one sorted representative per orbit.
pub fn betti_table(n: usize, ideal: Ideal, max_degree: Option<usize>) -> Result<BettiTable> {
    let max_q = max_degree.unwrap_or(2 * n + 2);
    let resolver = Resolver::with_degree_limit(n, ideal, max_q.max(DEFAULT_DEGREE_LIMIT));
    let reps: Vec<Partition> = (0..=max_q)
        .flat_map(partitions_of)
        .filter(|l| l.len() <= n)
        .collect();
    let contributions: Vec<Vec<(usize, usize, BigInt)>> = reps
        .par_iter()
        .map(|lam| -> Result<Vec<(usize, usize, BigInt)>> {
            let mut a = lam.parts().to_vec();
            a.resize(n, 0);
            let pat = MultidegreePattern::from_multidegree(&a, None)?;
            let orbit = pat.orbit_size();
            let mut out = Vec::new();
            for p in 0..2 * n {
                let d = resolver.tor_dim(p, &a)?;
                if d > 0 {
                    out.push((p, lam.size(), &orbit * BigInt::from(d)));
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut table = BettiTable::new(n, ideal, Method::Resolve);
    for (p, q, v) in contributions.into_iter().flatten() {
        table.add(p, q, &v)?;
    }
    Ok(table)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantItem {
    pub p: usize,
    pub q: usize,
    pub pattern: String,
    pub brute_force: VirtualRep,
    pub descriptor: VirtualRep,
    pub dim: i64,
    pub status: Status,
}

/// For every `(p, pattern x bidegree)` where either side is nonzero, compares the decomposed
/// brute-force character of Tor with the descriptor decomposition.
pub fn verify_equivariant(ideal: Ideal, n: usize) -> Result<Vec<EquivariantItem>> {
    let descs = descriptors(n, ideal, true)?;
    let resolver = Resolver::new(n, ideal);
    let mut patterns = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=b / 2 {
                if 2 * a + b > 0 {
                    patterns.push(MultidegreePattern::abc(n, a, b, Some(c))?);
                }
            }
        }
    }
    let jobs: Vec<(usize, MultidegreePattern)> = patterns
        .iter()
        .flat_map(|pat| (0..2 * n).map(move |p| (p, pat.clone())))
        .collect();
    let items: Vec<Option<EquivariantItem>> = jobs
        .par_iter()
        .map(|(p, pat)| -> Result<Option<EquivariantItem>> {
            let brute = resolver.tor_representation(*p, pat)?;
            let desc = decompose_on_pattern(&descs, *p, pat)?.unwrap_or_else(|| VirtualRep::zero_s2(n));
            if brute.is_zero() && desc.is_zero() {
                return Ok(None);
            }
            let status = if brute == desc && brute.is_effective() {
                Status::Match
            } else {
                Status::Mismatch
            };
            Ok(Some(EquivariantItem {
                p: *p,
                q: pat.total_degree(),
                pattern: pat.to_string(),
                dim: brute.dim(),
                brute_force: brute,
                descriptor: desc,
                status,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(items.into_iter().flatten().collect())
}

/// Multidegrees with an entry of at least 3 at which Tor(P) is checked to vanish.
pub const SUPPORT_SAMPLE: [&[usize]; 10] = [
    &[3],
    &[3, 1],
    &[3, 1, 1],
    &[3, 1, 1, 1],
    &[3, 2],
    &[3, 2, 1],
    &[3, 2, 2],
    &[3, 3],
    &[4, 1, 1],
    &[3, 2, 1, 1],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportViolation {
    pub multidegree: Vec<usize>,
    pub p: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub n: usize,
    pub multidegrees_checked: usize,
    pub sample_checked: usize,
    pub violations: Vec<SupportViolation>,
}

fn is_support_pattern(a: &[usize]) -> bool {
    a.iter().all(|&v| v <= 2)
}

/// Tor of `ideal` must vanish away from the orbits of `(2^a, 1^b, 0^r)`. Checks every
/// multidegree with entries at most 2 (and at most 3 when `n <= 3`), plus the fixed sample
/// padded with zeros.
pub fn support_check(ideal: Ideal, n: usize) -> Result<SupportReport> {
    let resolver = Resolver::new(n, ideal);
    let bound = if n <= 3 { 3 } else { 2 };
    let mut grid = vec![Vec::new()];
    for _ in 0..n {
        grid = grid
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..=bound).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    let mut sample: Vec<Vec<usize>> = Vec::new();
    for s in SUPPORT_SAMPLE.iter().filter(|s| s.len() <= n) {
        let mut a = s.to_vec();
        a.resize(n, 0);
        if !grid.contains(&a) {
            sample.push(a);
        }
    }
    let all: Vec<&Vec<usize>> = grid.iter().chain(sample.iter()).collect();
    let found: Vec<Vec<SupportViolation>> = all
        .par_iter()
        .map(|a| -> Result<Vec<SupportViolation>> {
            let mut out = Vec::new();
            for p in 0..2 * n {
                let dim = resolver.tor_dim(p, a)?;
                if dim > 0 && !is_support_pattern(a) {
                    out.push(SupportViolation {
                        multidegree: a.to_vec(),
                        p,
                        dim,
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(SupportReport {
        n,
        multidegrees_checked: grid.len(),
        sample_checked: sample.len(),
        violations: found.into_iter().flatten().collect(),
    })
}

/// Number of multidegree orbits with nonzero Tor; handy for sizing reports.
pub fn orbit_count(n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for a in 0..=n {
        for b in 0..=n - a {
            total += BigInt::from(multinomial(n, &[a as i64, b as i64]).expect("fits"));
        }
    }
    total
}
