//! Basis states `v(l)` of the braided exterior algebra, sparse vectors over
//! [`QLaurent`], and the column-major grid indexing.
//!
//! All public indices are one-based. Internally position `k` of a state is
//! bit `k - 1` of a `u64`, so a state on at most 64 positions is one word.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qscalar::QLaurent;

pub const MAX_POSITIONS: usize = 64;

/// An occupancy word `l in {0,1}^N`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    len: u8,
    bits: u64,
}

fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

impl BasisState {
    /// The vacuum `v(0...0)`.
    pub fn vacuum(len: usize) -> Result<Self> {
        Self::from_bits(0, len)
    }

    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_POSITIONS {
            return Err(Error::OutOfRange(format!("state length {len} exceeds {MAX_POSITIONS}")));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::OutOfRange(format!("bits {bits:#x} beyond length {len}")));
        }
        Ok(Self { len: len as u8, bits })
    }

    /// State with the given one-based positions occupied.
    pub fn from_positions(positions: &[usize], len: usize) -> Result<Self> {
        let mut s = Self::vacuum(len)?;
        for &p in positions {
            s.check_position(p)?;
            s.bits |= 1 << (p - 1);
        }
        Ok(s)
    }

    /// Parses a bitstring `"l_1 l_2 ... l_N"` (left is position 1).
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        for (i, c) in chars.iter().enumerate() {
            match c {
                '0' => {}
                '1' if i < 64 => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("bad bitstring {s:?}"))),
            }
        }
        Self::from_bits(bits, chars.len())
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Index of this state in the `2^N` matrix realization.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    pub fn degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    fn check_position(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.len() {
            return Err(Error::OutOfRange(format!("position {k} outside 1..={}", self.len)));
        }
        Ok(())
    }

    pub fn occupied(&self, k: usize) -> bool {
        debug_assert!(k >= 1 && k <= self.len());
        self.bits >> (k - 1) & 1 == 1
    }

    pub fn with_set(&self, k: usize) -> Self {
        Self { len: self.len, bits: self.bits | 1 << (k - 1) }
    }

    pub fn with_cleared(&self, k: usize) -> Self {
        Self { len: self.len, bits: self.bits & !(1 << (k - 1)) }
    }

    /// `l_1 + ... + l_{k-1}`.
    pub fn prefix_parity(&self, k: usize) -> Result<usize> {
        self.check_position(k)?;
        Ok(self.prefix_count(k))
    }

    /// Unchecked variant of [`prefix_parity`](Self::prefix_parity).
    #[inline]
    pub(crate) fn prefix_count(&self, k: usize) -> usize {
        (self.bits & low_mask(k - 1)).count_ones() as usize
    }

    /// Occupied positions in increasing order.
    pub fn positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&k| self.occupied(k)).collect()
    }

    /// Iterates every state of length `len` in index order.
    pub fn all(len: usize) -> impl Iterator<Item = BasisState> {
        assert!(len < 64, "enumerating all states needs len < 64");
        (0u64..1 << len).map(move |bits| BasisState { len: len as u8, bits })
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 1..=self.len() {
            write!(f, "{}", if self.occupied(k) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({self})")
    }
}

impl Serialize for BasisState {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A sparse element of the braided exterior algebra on `len` positions.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QVector {
    len: usize,
    entries: BTreeMap<BasisState, QLaurent>,
}

impl QVector {
    pub fn zero(len: usize) -> Self {
        Self { len, entries: BTreeMap::new() }
    }

    pub fn basis(state: BasisState) -> Self {
        Self::term(state, QLaurent::one())
    }

    pub fn term(state: BasisState, coeff: QLaurent) -> Self {
        let mut v = Self::zero(state.len());
        v.add_term(state, &coeff);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn coefficient(&self, state: &BasisState) -> QLaurent {
        self.entries.get(state).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisState, &QLaurent)> {
        self.entries.iter()
    }

    pub fn add_term(&mut self, state: BasisState, coeff: &QLaurent) {
        assert_eq!(state.len(), self.len, "state length does not match vector length");
        if coeff.is_zero() {
            return;
        }
        let slot = self.entries.entry(state).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.entries.remove(&state);
        }
    }

    pub fn checked_add(&self, rhs: &QVector) -> Result<QVector> {
        if self.len != rhs.len {
            return Err(Error::LengthMismatch { expected: self.len, found: rhs.len });
        }
        let mut out = self.clone();
        for (s, c) in &rhs.entries {
            out.add_term(*s, c);
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &QVector) -> QVector {
        self.checked_add(rhs).expect("vector length mismatch")
    }

    pub fn sub(&self, rhs: &QVector) -> QVector {
        self.add(&rhs.scale(&QLaurent::from_int(-1)))
    }

    pub fn scale(&self, c: &QLaurent) -> QVector {
        let mut out = QVector::zero(self.len);
        if c.is_zero() {
            return out;
        }
        for (s, v) in &self.entries {
            out.add_term(*s, &(v * c));
        }
        out
    }

    /// `Some(c)` if `self == c * other` for a scalar `c`.
    pub fn proportionality(&self, other: &QVector) -> Option<QLaurent> {
        if self.len != other.len {
            return None;
        }
        if other.is_zero() {
            return self.is_zero().then(QLaurent::zero);
        }
        let (s0, c0) = other.entries.iter().next().unwrap();
        let ratio = crate::qscalar::exact_div(&self.coefficient(s0), c0).ok()?;
        (other.scale(&ratio) == *self).then_some(ratio)
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.entries.iter().map(|(s, c)| format!("({c}) v({s})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

struct Entry<'a>(&'a BasisState, &'a QLaurent);

impl Serialize for Entry<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Entry", 2)?;
        st.serialize_field("state", self.0)?;
        st.serialize_field("coeff", self.1)?;
        st.end()
    }
}

impl Serialize for QVector {
    /// JSON array of `{state, coeff}` pairs sorted by the state bitstring.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut items: Vec<(String, &BasisState, &QLaurent)> =
            self.entries.iter().map(|(s, c)| (s.to_string(), s, c)).collect();
        items.sort_by(|a, b| a.0.cmp(&b.0));
        let mut seq = serializer.serialize_seq(Some(items.len()))?;
        for (_, s, c) in items {
            seq.serialize_element(&Entry(s, c))?;
        }
        seq.end()
    }
}

/// An `n x m` grid whose cell `(i, j)` sits at linear position `i + (j-1) n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GridShape {
    pub n: usize,
    pub m: usize,
}

impl GridShape {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::OutOfRange(format!("grid {n} x {m} must have n, m >= 1")));
        }
        if n * m > MAX_POSITIONS {
            return Err(Error::OutOfRange(format!("grid {n} x {m} exceeds {MAX_POSITIONS} positions")));
        }
        Ok(Self { n, m })
    }

    pub fn size(&self) -> usize {
        self.n * self.m
    }

    pub fn grid_to_linear(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || i > self.n || j == 0 || j > self.m {
            return Err(Error::OutOfRange(format!("cell ({i}, {j}) outside {} x {}", self.n, self.m)));
        }
        Ok(self.cell(i, j))
    }

    /// Unchecked `i + (j-1) n`.
    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> usize {
        i + (j - 1) * self.n
    }

    pub fn linear_to_grid(&self, k: usize) -> Result<(usize, usize)> {
        if k == 0 || k > self.size() {
            return Err(Error::OutOfRange(format!("linear index {k} outside 1..={}", self.size())));
        }
        Ok(((k - 1) % self.n + 1, (k - 1) / self.n + 1))
    }

    /// Row and column occupation counts.
    pub fn row_col_weights(&self, state: &BasisState) -> Result<(Vec<usize>, Vec<usize>)> {
        if state.len() != self.size() {
            return Err(Error::LengthMismatch { expected: self.size(), found: state.len() });
        }
        let mut rows = vec![0; self.n];
        let mut cols = vec![0; self.m];
        for j in 1..=self.m {
            for i in 1..=self.n {
                if state.occupied(self.cell(i, j)) {
                    rows[i - 1] += 1;
                    cols[j - 1] += 1;
                }
            }
        }
        Ok((rows, cols))
    }

    /// Text occupancy diagram, one grid row per line (`#` occupied, `.` vacant).
    pub fn diagram(&self, state: &BasisState) -> String {
        let mut out = String::new();
        for i in 1..=self.n {
            let row: Vec<&str> = (1..=self.m)
                .map(|j| if state.occupied(self.cell(i, j)) { "#" } else { "." })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn grid_to_linear(shape: GridShape, i: usize, j: usize) -> Result<usize> {
    shape.grid_to_linear(i, j)
}

pub fn prefix_parity(state: &BasisState, k: usize) -> Result<usize> {
    state.prefix_parity(k)
}

pub fn row_col_weights(shape: GridShape, state: &BasisState) -> Result<(Vec<usize>, Vec<usize>)> {
    shape.row_col_weights(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_indexing() {
        let g = GridShape::new(3, 4).unwrap();
        assert_eq!(g.grid_to_linear(2, 3).unwrap(), 8);
        assert_eq!(g.grid_to_linear(1, 1).unwrap(), 1);
        assert_eq!(g.grid_to_linear(3, 4).unwrap(), 12);
        assert!(g.grid_to_linear(0, 1).is_err());
        assert!(g.grid_to_linear(4, 1).is_err());
        assert!(g.grid_to_linear(1, 5).is_err());
        assert_eq!(g.linear_to_grid(8).unwrap(), (2, 3));
    }

    #[test]
    fn grid_shape_bounds() {
        assert!(GridShape::new(0, 3).is_err());
        assert!(GridShape::new(8, 9).is_err());
        assert!(GridShape::new(8, 8).is_ok());
    }

    #[test]
    fn prefix_parity_cases() {
        assert_eq!(BasisState::parse("1011").unwrap().prefix_parity(3).unwrap(), 1);
        assert_eq!(BasisState::parse("0000").unwrap().prefix_parity(4).unwrap(), 0);
        assert_eq!(BasisState::parse("1111").unwrap().prefix_parity(1).unwrap(), 0);
        assert!(BasisState::parse("1111").unwrap().prefix_parity(5).is_err());
    }

    #[test]
    fn weights() {
        let g = GridShape::new(2, 2).unwrap();
        let s = BasisState::parse("1011").unwrap();
        assert_eq!(g.row_col_weights(&s).unwrap(), (vec![2, 1], vec![1, 2]));
        let g = GridShape::new(3, 3).unwrap();
        assert_eq!(
            g.row_col_weights(&BasisState::vacuum(9).unwrap()).unwrap(),
            (vec![0; 3], vec![0; 3])
        );
        let g = GridShape::new(2, 3).unwrap();
        assert_eq!(
            g.row_col_weights(&BasisState::parse("111111").unwrap()).unwrap(),
            (vec![3, 3], vec![2, 2, 2])
        );
    }

    #[test]
    fn bitstring_roundtrip_and_64() {
        let s = BasisState::parse("0110").unwrap();
        assert_eq!(s.to_string(), "0110");
        assert_eq!(s.positions(), vec![2, 3]);
        let full = BasisState::from_bits(u64::MAX, 64).unwrap();
        assert_eq!(full.degree(), 64);
        assert_eq!(full.prefix_parity(64).unwrap(), 63);
        assert!(BasisState::from_bits(0b100, 2).is_err());
    }

    #[test]
    fn vector_json() {
        let a = BasisState::parse("10").unwrap();
        let b = BasisState::parse("01").unwrap();
        let mut v = QVector::zero(2);
        v.add_term(b, &QLaurent::q_pow(-1));
        v.add_term(a, &QLaurent::one());
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"[{"state":"01","coeff":{"-1":"1/1"}},{"state":"10","coeff":{"0":"1/1"}}]"#
        );
    }

    #[test]
    fn cancellation_removes_entries() {
        let a = BasisState::parse("10").unwrap();
        let v = QVector::basis(a);
        assert!(v.sub(&v).is_zero());
    }
}
