//! Exact linear algebra over `Q`.
//!
//! Matrices are stored as sparse column lists since Koszul differentials have only a handful of
//! nonzeros per column. Bases of subspaces are kept in reduced row echelon form, which makes
//! coordinates of a member vector readable straight off the pivot positions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// Sparse vector: `(index, value)` pairs, strictly increasing index, no zero values.
pub type SparseVec = Vec<(usize, Q)>;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.columns[i].push((i, Q::one()));
        }
        m
    }

    pub fn from_dense(rows: usize, cols: usize, entries: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, row) in entries.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.add_to(r, c, v.clone());
            }
        }
        m
    }

    pub fn from_i64(entries: &[Vec<i64>]) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let dense: Vec<Vec<Q>> = entries.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        Self::from_dense(rows, cols, &dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, Q)] {
        &self.columns[c]
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: Q) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) out of range");
        if v.is_zero() {
            return;
        }
        let col = &mut self.columns[c];
        match col.binary_search_by_key(&r, |(i, _)| *i) {
            Ok(pos) => {
                col[pos].1 += v;
                if col[pos].1.is_zero() {
                    col.remove(pos);
                }
            }
            Err(pos) => col.insert(pos, (r, v)),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        let col = &self.columns[c];
        match col.binary_search_by_key(&r, |(i, _)| *i) {
            Ok(pos) => col[pos].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Row-major sparse view.
    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                rows[*r].push((c, v.clone()));
            }
        }
        rows
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            columns: self.sparse_rows(),
        }
    }

    /// `self * v` for a dense vector `v` of length `cols`.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Q::zero(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            if v[c].is_zero() {
                continue;
            }
            for (r, a) in col {
                out[*r] += a * &v[c];
            }
        }
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for (j, col) in other.columns.iter().enumerate() {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    *acc.entry(*i).or_insert_with(Q::zero) += a * b;
                }
            }
            out.columns[j] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }
}

// v <- v - factor * w
fn axpy(v: &SparseVec, factor: &Q, w: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j == w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i == v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_w {
            out.push((w[j].0, -(factor * &w[j].1)));
            j += 1;
        } else {
            let val = &v[i].1 - factor * &w[j].1;
            if !val.is_zero() {
                out.push((v[i].0, val));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup(v: &SparseVec, idx: usize) -> Option<&Q> {
    v.binary_search_by_key(&idx, |(i, _)| *i).ok().map(|p| &v[p].1)
}

/// Reduced row echelon form of the span of `vectors`. Returns the nonzero rows, sorted by
/// pivot column, each with a leading 1.
pub fn rref(vectors: impl IntoIterator<Item = SparseVec>) -> (Vec<SparseVec>, Vec<usize>) {
    let mut pivots: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for mut v in vectors {
        while let Some((lead, coeff)) = v.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => v = axpy(&v, &coeff, p),
                None => {
                    let inv = coeff.recip();
                    for (_, x) in v.iter_mut() {
                        *x *= &inv;
                    }
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    // back substitution, last pivot first
    let cols: Vec<usize> = pivots.keys().copied().collect();
    for (k, &c) in cols.iter().enumerate().rev() {
        let prow = pivots[&c].clone();
        for &other in &cols[..k] {
            let row = pivots.get_mut(&other).expect("pivot row");
            if let Some(f) = lookup(row, c).cloned() {
                *row = axpy(row, &f, &prow);
            }
        }
    }
    let rows = pivots.into_values().collect();
    (rows, cols)
}

/// A subspace of `Q^ambient`, stored as an RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let (rows, pivots) = rref(vectors);
        debug_assert!(rows.iter().all(|r| r.last().is_none_or(|(i, _)| *i < ambient)));
        SubspaceBasis {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Q>> {
        let coords: Vec<Q> = self
            .pivots
            .iter()
            .map(|&p| lookup(v, p).cloned().unwrap_or_else(Q::zero))
            .collect();
        let mut rest = v.clone();
        for (c, row) in coords.iter().zip(&self.rows) {
            if !c.is_zero() {
                rest = axpy(&rest, c, row);
            }
        }
        rest.is_empty().then_some(coords)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}

/// Exact rank by fraction-free (Bareiss) elimination over `Z` after clearing denominators.
pub fn rank(m: &ExactMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .to_dense()
        .into_iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * Q::from_integer(l.clone())).to_integer())
                .collect()
        })
        .filter(|row: &Vec<BigInt>| row.iter().any(|x| !x.is_zero()))
        .collect();
    let rows = a.len();
    let cols = m.cols();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Rank over `F_p`; `None` if some denominator vanishes mod `p`.
pub fn rank_mod(m: &ExactMatrix, prime: u64) -> Option<usize> {
    let p = BigInt::from(prime);
    let reduce = |x: &Q| -> Option<u64> {
        let num = ((x.numer() % &p) + &p) % &p;
        let den = ((x.denom() % &p) + &p) % &p;
        if den.is_zero() {
            return None;
        }
        let inv = den.modpow(&(&p - 2u32), &p);
        (num * inv % &p).to_u64()
    };
    let mut a: Vec<Vec<u64>> = Vec::with_capacity(m.rows());
    for row in m.to_dense() {
        let mut out = Vec::with_capacity(row.len());
        for x in &row {
            out.push(reduce(x)?);
        }
        a.push(out);
    }
    let mulmod = |x: u64, y: u64| ((x as u128 * y as u128) % prime as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let rows = a.len();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = powmod(a[r][c], prime - 2);
        for i in r + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = mulmod(a[i][c], inv);
            for j in c..m.cols() {
                let sub = mulmod(f, a[r][j]);
                a[i][j] = (a[i][j] + prime - sub) % prime;
            }
        }
        r += 1;
    }
    Some(r)
}

/// Two fixed 31-bit primes used to screen ranks.
pub const SCREEN_PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

pub fn kernel_basis(m: &ExactMatrix) -> SubspaceBasis {
    let (rows, pivots) = rref(m.sparse_rows());
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut kernel = Vec::new();
    for free in (0..m.cols()).filter(|c| !pivot_set.contains(c)) {
        let mut v: BTreeMap<usize, Q> = BTreeMap::from([(free, Q::one())]);
        for (row, &pc) in rows.iter().zip(&pivots) {
            if let Some(x) = lookup(row, free) {
                v.insert(pc, -x.clone());
            }
        }
        kernel.push(v.into_iter().collect());
    }
    SubspaceBasis::span(m.cols(), kernel)
}

pub fn image_basis(m: &ExactMatrix) -> SubspaceBasis {
    SubspaceBasis::span(m.rows(), m.columns.iter().cloned())
}

fn apply_sparse(sigma: &ExactMatrix, v: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
    for (c, x) in v {
        for (r, a) in sigma.column(*c) {
            *acc.entry(*r).or_insert_with(Q::zero) += a * x;
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Trace of `sigma` restricted to a stable subspace.
pub fn trace_on_stable(sigma: &ExactMatrix, basis: &SubspaceBasis) -> Result<Q> {
    if sigma.rows() != basis.ambient() || sigma.cols() != basis.ambient() {
        return Err(Error::InvalidArgument(format!(
            "{}x{} matrix acting on a subspace of Q^{}",
            sigma.rows(),
            sigma.cols(),
            basis.ambient()
        )));
    }
    let mut trace = Q::zero();
    for (i, b) in basis.vectors().iter().enumerate() {
        let image = apply_sparse(sigma, b);
        let coords = basis.coordinates(&image).ok_or_else(|| {
            Error::StabilityViolation(format!("image of basis vector {i} leaves the subspace"))
        })?;
        trace += &coords[i];
    }
    Ok(trace)
}

/// Trace of the action induced by `sigma` on `K / I`.
pub fn trace_on_subquotient(sigma: &ExactMatrix, k: &SubspaceBasis, i: &SubspaceBasis) -> Result<Q> {
    if !k.contains_subspace(i) {
        return Err(Error::StabilityViolation("I is not contained in K".into()));
    }
    Ok(trace_on_stable(sigma, k)? - trace_on_stable(sigma, i)?)
}

/// Integer value of a rational known to be integral.
pub fn to_integer(x: &Q) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_negative(x: &Q) -> bool {
    x.is_negative()
}
