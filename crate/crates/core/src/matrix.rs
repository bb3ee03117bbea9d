//! Sparse matrices over `Q[q, q^-1]` and over `Q`, plus an incremental
//! exact row-echelon basis for rank computations at specialized `q`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qscalar::{exact_div, QLaurent, Rational};

/// Column-major sparse matrix with Laurent-polynomial entries.
///
/// Each column is sorted by row index and holds no zero entries, so derived
/// equality is entrywise equality.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, QLaurent)>>,
}

fn normalize_column(map: BTreeMap<usize, QLaurent>) -> Vec<(usize, QLaurent)> {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| QLaurent::one()).collect())
    }

    pub fn diagonal(entries: Vec<QLaurent>) -> Self {
        let n = entries.len();
        let data = entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| if e.is_zero() { Vec::new() } else { vec![(i, e)] })
            .collect();
        Self { rows: n, cols: n, data }
    }

    /// Builds from columns given as `(row, value)` lists in any order.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, QLaurent)>>) -> Self {
        let cols = columns.len();
        let data = columns
            .into_iter()
            .map(|col| {
                let mut map = BTreeMap::new();
                for (r, v) in col {
                    assert!(r < rows, "row {r} out of range");
                    *map.entry(r).or_insert_with(QLaurent::zero) += &v;
                }
                normalize_column(map)
            })
            .collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, QLaurent)] {
        &self.data[c]
    }

    pub fn get(&self, r: usize, c: usize) -> QLaurent {
        self.data[c]
            .binary_search_by_key(&r, |e| e.0)
            .map(|i| self.data[c][i].1.clone())
            .unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let data = rhs
            .data
            .iter()
            .map(|col| {
                // Most operators here are monomial (one entry per column).
                if let [(k, v)] = col.as_slice() {
                    return self.data[*k].iter().map(|(r, a)| (*r, a * v)).collect();
                }
                let mut acc: BTreeMap<usize, QLaurent> = BTreeMap::new();
                for (k, v) in col {
                    for (r, a) in &self.data[*k] {
                        *acc.entry(*r).or_insert_with(QLaurent::zero) += &(a * v);
                    }
                }
                normalize_column(acc)
            })
            .collect();
        QMatrix { rows: self.rows, cols: rhs.cols, data }
    }

    fn combine(&self, rhs: &QMatrix, subtract: bool) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in sum");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, QLaurent> = a.iter().cloned().collect();
                for (r, v) in b {
                    let slot = acc.entry(*r).or_insert_with(QLaurent::zero);
                    if subtract {
                        *slot -= v;
                    } else {
                        *slot += v;
                    }
                }
                normalize_column(acc)
            })
            .collect();
        QMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, rhs: &QMatrix) -> QMatrix {
        self.combine(rhs, false)
    }

    pub fn sub(&self, rhs: &QMatrix) -> QMatrix {
        self.combine(rhs, true)
    }

    pub fn scale(&self, c: &QLaurent) -> QMatrix {
        self.map_entries(|v| Ok(v * c)).expect("scaling cannot fail")
    }

    /// `A B - q^k B A`.
    pub fn q_commutator(&self, rhs: &QMatrix, k: i64) -> QMatrix {
        self.mul(rhs).sub(&rhs.mul(self).scale(&QLaurent::q_pow(k)))
    }

    pub fn commutator(&self, rhs: &QMatrix) -> QMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn pow(&self, e: u32) -> QMatrix {
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_entries<F>(&self, mut f: F) -> Result<QMatrix>
    where
        F: FnMut(&QLaurent) -> Result<QLaurent>,
    {
        let mut data = Vec::with_capacity(self.cols);
        for col in &self.data {
            let mut out = Vec::with_capacity(col.len());
            for (r, v) in col {
                let w = f(v)?;
                if !w.is_zero() {
                    out.push((*r, w));
                }
            }
            data.push(out);
        }
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Entrywise exact division by a scalar.
    pub fn exact_div_scalar(&self, den: &QLaurent) -> Result<QMatrix> {
        self.map_entries(|v| exact_div(v, den))
    }

    /// Kronecker product; basis index `(a, b)` maps to `a * rhs.rows + b`.
    pub fn kron(&self, rhs: &QMatrix) -> QMatrix {
        let rows = self.rows * rhs.rows;
        let mut data = Vec::with_capacity(self.cols * rhs.cols);
        for ca in &self.data {
            for cb in &rhs.data {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (ra, va) in ca {
                    for (rb, vb) in cb {
                        col.push((ra * rhs.rows + rb, va * vb));
                    }
                }
                col.retain(|(_, v)| !v.is_zero());
                data.push(col);
            }
        }
        QMatrix { rows, cols: self.cols * rhs.cols, data }
    }

    /// First column at which `self` and `rhs` differ.
    pub fn first_difference(&self, rhs: &QMatrix) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        (0..self.cols).find(|&c| self.data[c] != rhs.data[c])
    }

    pub fn first_nonzero_column(&self) -> Option<usize> {
        (0..self.cols).find(|&c| !self.data[c].is_empty())
    }

    /// Diagonal entries if the matrix is square and diagonal.
    pub fn diagonal_entries(&self) -> Option<Vec<QLaurent>> {
        if self.rows != self.cols {
            return None;
        }
        let mut out = Vec::with_capacity(self.cols);
        for (c, col) in self.data.iter().enumerate() {
            match col.as_slice() {
                [] => out.push(QLaurent::zero()),
                [(r, v)] if *r == c => out.push(v.clone()),
                _ => return None,
            }
        }
        Some(out)
    }

    /// Inverse of a diagonal matrix whose entries are Laurent units.
    pub fn invert_diagonal(&self) -> Result<QMatrix> {
        let diag = self
            .diagonal_entries()
            .ok_or_else(|| Error::NotInvertible("matrix is not diagonal".into()))?;
        let inv = diag.iter().map(QLaurent::inverse).collect::<Result<Vec<_>>>()?;
        Ok(QMatrix::diagonal(inv))
    }

    pub fn specialize(&self, q: &Rational) -> Result<RatMatrix> {
        let mut data = Vec::with_capacity(self.cols);
        for col in &self.data {
            let mut out = Vec::with_capacity(col.len());
            for (r, v) in col {
                let x = v.specialize(q)?;
                if !x.is_zero() {
                    out.push((*r, x));
                }
            }
            data.push(out);
        }
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> QMatrix {
        let mut cols: Vec<Vec<(usize, QLaurent)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.data.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        QMatrix { rows: self.cols, cols: self.rows, data: cols }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for (c, col) in self.data.iter().enumerate() {
            for (r, v) in col {
                writeln!(f, "  ({r}, {c}) = {v}")?;
            }
        }
        write!(f, "]")
    }
}

pub type RatVec = BTreeMap<usize, Rational>;

/// Column-major sparse rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl RatMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.data[c]
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    pub fn apply(&self, v: &RatVec) -> RatVec {
        let mut out: RatVec = BTreeMap::new();
        for (c, x) in v {
            for (r, a) in &self.data[*c] {
                let slot = out.entry(*r).or_insert_with(Rational::zero);
                *slot += a * x;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// Incrementally built echelon basis of a subspace of `Q^N`.
///
/// Every stored vector has a distinct pivot equal to its smallest index and a
/// unit coefficient there.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    by_pivot: BTreeMap<usize, RatVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.by_pivot.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: RatVec) -> RatVec {
        v.retain(|_, x| !x.is_zero());
        while let Some((&k, x)) = v.iter().next() {
            let Some(b) = self.by_pivot.get(&k) else { break };
            let x = x.clone();
            for (i, bi) in b {
                let slot = v.entry(*i).or_insert_with(Rational::zero);
                *slot -= &x * bi;
                if slot.is_zero() {
                    v.remove(i);
                }
            }
        }
        v
    }

    /// Inserts `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, v: RatVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else { return false };
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        self.by_pivot.insert(pivot, r);
        true
    }

    pub fn vectors(&self) -> impl Iterator<Item = &RatVec> {
        self.by_pivot.values()
    }

    pub fn contains(&self, v: &RatVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}

/// Rank of a set of rational vectors.
pub fn rank_of<I: IntoIterator<Item = RatVec>>(vectors: I) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::rational_int;

    fn q(k: i64) -> QLaurent {
        QLaurent::q_pow(k)
    }

    #[test]
    fn product_and_kron() {
        let a = QMatrix::from_columns(2, vec![vec![], vec![(0, QLaurent::one())]]);
        let d = QMatrix::diagonal(vec![q(1), q(-1)]);
        let ad = a.mul(&d);
        assert_eq!(ad.get(0, 1), q(-1));
        let da = d.mul(&a);
        assert_eq!(da.get(0, 1), q(1));
        let k = d.kron(&d);
        assert_eq!(k.diagonal_entries().unwrap(), vec![q(2), QLaurent::one(), QLaurent::one(), q(-2)]);
        assert!(d.mul(&d.invert_diagonal().unwrap()).is_identity());
    }

    #[test]
    fn echelon_rank() {
        let v = |xs: &[(usize, i64)]| -> RatVec { xs.iter().map(|(i, x)| (*i, rational_int(*x))).collect() };
        let mut b = EchelonBasis::new();
        assert!(b.insert(v(&[(0, 1), (1, 2)])));
        assert!(b.insert(v(&[(1, 1), (2, 1)])));
        assert!(!b.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert!(b.insert(v(&[(2, 5)])));
        assert_eq!(b.rank(), 3);
        assert!(!b.insert(RatVec::new()));
    }
}
