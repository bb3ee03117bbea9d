//! Quantum Clifford generators acting on the braided exterior algebra, and
//! scalar-weighted words over them.
//!
//! Every word acts monomially on basis states: a state goes to a signed
//! power of `q` times another state, or to zero. Operators are compared by
//! realizing them as sparse matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fockspace::{BasisState, QVector};
use crate::matrix::QMatrix;
use crate::qgroup::{compare, vanishes, BasisLabels, RelationCheck};
use crate::qscalar::{QLaurent, Rational};

/// Default bound on the number of positions for matrix realizations.
pub const DEFAULT_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    /// `psi_k`: vacates position `k`.
    Annihilate,
    /// `psi_k^dagger`: occupies position `k`.
    Create,
    /// `omega_k`: scales by `q^{-l_k}`.
    Omega,
    /// `omega_k^{-1}`: scales by `q^{l_k}`.
    OmegaInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordGen {
    pub kind: GenKind,
    pub index: usize,
}

impl CliffordGen {
    pub fn psi(k: usize) -> Self {
        Self { kind: GenKind::Annihilate, index: k }
    }

    pub fn psid(k: usize) -> Self {
        Self { kind: GenKind::Create, index: k }
    }

    pub fn omega(k: usize) -> Self {
        Self { kind: GenKind::Omega, index: k }
    }

    pub fn omega_inv(k: usize) -> Self {
        Self { kind: GenKind::OmegaInv, index: k }
    }

    /// `omega_k^e` for `e = +1` or `-1`.
    pub fn omega_pow(k: usize, e: i64) -> Self {
        if e >= 0 {
            Self::omega(k)
        } else {
            Self::omega_inv(k)
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self.kind, GenKind::Omega | GenKind::OmegaInv)
    }

    /// Acts on `(negated, q exponent, state)`; `None` means the result is zero.
    #[inline]
    fn act(&self, acc: (bool, i64, BasisState)) -> Option<(bool, i64, BasisState)> {
        let (neg, e, s) = acc;
        let k = self.index;
        match self.kind {
            GenKind::Annihilate => {
                if !s.occupied(k) {
                    return None;
                }
                Some((neg ^ (s.prefix_count(k) & 1 == 1), e, s.with_cleared(k)))
            }
            GenKind::Create => {
                if s.occupied(k) {
                    return None;
                }
                Some((neg ^ (s.prefix_count(k) & 1 == 1), e, s.with_set(k)))
            }
            GenKind::Omega => Some((neg, e - s.occupied(k) as i64, s)),
            GenKind::OmegaInv => Some((neg, e + s.occupied(k) as i64, s)),
        }
    }
}

impl fmt::Display for CliffordGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.index;
        match self.kind {
            GenKind::Annihilate => write!(f, "psi{k}"),
            GenKind::Create => write!(f, "psid{k}"),
            GenKind::Omega => write!(f, "w{k}"),
            GenKind::OmegaInv => write!(f, "w{k}^-1"),
        }
    }
}

/// Applies a word (rightmost letter first) to a basis state.
///
/// Returns the sign, the power of `q` and the image state, or `None` if the
/// word kills the state.
pub fn apply_word(word: &[CliffordGen], state: BasisState) -> Option<(bool, i64, BasisState)> {
    word.iter().rev().try_fold((false, 0i64, state), |acc, g| g.act(acc))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Quantum,
    /// The `q = 1` Clifford algebra: no `omega` letters, rational coefficients.
    Classical,
}

/// A linear combination of Clifford words on `len` positions.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorExpr {
    len: usize,
    flavor: Flavor,
    terms: Vec<(QLaurent, Vec<CliffordGen>)>,
}

impl OperatorExpr {
    pub fn zero(len: usize, flavor: Flavor) -> Self {
        Self { len, flavor, terms: Vec::new() }
    }

    pub fn identity(len: usize, flavor: Flavor) -> Self {
        Self { len, flavor, terms: vec![(QLaurent::one(), Vec::new())] }
    }

    /// A single weighted word, validated against the space and flavor.
    pub fn word(len: usize, flavor: Flavor, coeff: QLaurent, word: Vec<CliffordGen>) -> Result<Self> {
        let mut out = Self::zero(len, flavor);
        out.push_term(coeff, word)?;
        Ok(out)
    }

    pub fn quantum(len: usize, coeff: QLaurent, word: Vec<CliffordGen>) -> Result<Self> {
        Self::word(len, Flavor::Quantum, coeff, word)
    }

    pub fn classical(len: usize, coeff: i64, word: Vec<CliffordGen>) -> Result<Self> {
        Self::word(len, Flavor::Classical, QLaurent::from_int(coeff), word)
    }

    pub fn gen(len: usize, flavor: Flavor, g: CliffordGen) -> Result<Self> {
        Self::word(len, flavor, QLaurent::one(), vec![g])
    }

    pub fn push_term(&mut self, coeff: QLaurent, word: Vec<CliffordGen>) -> Result<()> {
        for g in &word {
            if g.index == 0 || g.index > self.len {
                return Err(Error::OutOfRange(format!("generator {g} on {} positions", self.len)));
            }
            if self.flavor == Flavor::Classical && g.is_diagonal() {
                return Err(Error::ClassicalOmega);
            }
        }
        let coeff = self.normalize_coeff(coeff);
        if !coeff.is_zero() {
            self.terms.push((coeff, word));
        }
        Ok(())
    }

    fn normalize_coeff(&self, c: QLaurent) -> QLaurent {
        match self.flavor {
            Flavor::Quantum => c,
            Flavor::Classical => {
                QLaurent::constant(c.specialize(&Rational::from_integer(1.into())).expect("q = 1 is nonzero"))
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn terms(&self) -> &[(QLaurent, Vec<CliffordGen>)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, rhs: &OperatorExpr) {
        assert_eq!(self.len, rhs.len, "operators act on different spaces");
        assert_eq!(self.flavor, rhs.flavor, "mixing quantum and classical operators");
    }

    pub fn add(&self, rhs: &OperatorExpr) -> OperatorExpr {
        self.check_compatible(rhs);
        let mut out = self.clone();
        out.terms.extend(rhs.terms.iter().cloned());
        out
    }

    pub fn scale(&self, c: &QLaurent) -> OperatorExpr {
        let c = self.normalize_coeff(c.clone());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            self.terms.iter().map(|(k, w)| (k * &c, w.clone())).collect()
        };
        OperatorExpr { len: self.len, flavor: self.flavor, terms }
    }

    pub fn sub(&self, rhs: &OperatorExpr) -> OperatorExpr {
        self.add(&rhs.scale(&QLaurent::from_int(-1)))
    }

    /// Composition `self * rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &OperatorExpr) -> OperatorExpr {
        self.check_compatible(rhs);
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, wa) in &self.terms {
            for (b, wb) in &rhs.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                terms.push((a * b, w));
            }
        }
        OperatorExpr { len: self.len, flavor: self.flavor, terms }
    }

    /// `self * rhs - q^k rhs * self`.
    pub fn q_commutator(&self, rhs: &OperatorExpr, k: i64) -> OperatorExpr {
        self.mul(rhs).sub(&rhs.mul(self).scale(&QLaurent::q_pow(k)))
    }

    pub fn commutator(&self, rhs: &OperatorExpr) -> OperatorExpr {
        self.q_commutator(rhs, 0)
    }

    /// Image of one basis state.
    pub fn apply_state(&self, state: BasisState) -> QVector {
        let mut out = QVector::zero(self.len);
        for (c, w) in &self.terms {
            if let Some((neg, e, s)) = apply_word(w, state) {
                let mut t = c.shift(e);
                if neg {
                    t = -t;
                }
                out.add_term(s, &t);
            }
        }
        out
    }

    pub fn apply(&self, v: &QVector) -> Result<QVector> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch { expected: self.len, found: v.len() });
        }
        let mut out = QVector::zero(self.len);
        for (s, c) in v.iter() {
            for (t, d) in self.apply_state(*s).iter() {
                out.add_term(*t, &(c * d));
            }
        }
        Ok(out)
    }

    /// Matrix realization on `2^len` basis states, refusing `len > cap`.
    pub fn to_matrix_capped(&self, cap: usize) -> Result<QMatrix> {
        if self.len > cap || self.len >= 64 {
            return Err(Error::CapExceeded { len: self.len, cap });
        }
        let columns = BasisState::all(self.len)
            .map(|s| {
                let mut col: BTreeMap<usize, QLaurent> = BTreeMap::new();
                for (c, w) in &self.terms {
                    if let Some((neg, e, t)) = apply_word(w, s) {
                        let mut x = c.shift(e);
                        if neg {
                            x = -x;
                        }
                        *col.entry(t.index()).or_default() += &x;
                    }
                }
                col.into_iter().collect()
            })
            .collect();
        Ok(QMatrix::from_columns(1 << self.len, columns))
    }

    pub fn to_matrix(&self) -> Result<QMatrix> {
        self.to_matrix_capped(DEFAULT_CAP)
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, (c, w)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            let coeff = if c.terms().len() > 1 { format!("({c})") } else { c.to_string() };
            let mut parts: Vec<String> = Vec::new();
            if !c.is_one() || w.is_empty() {
                parts.push(coeff);
            }
            parts.extend(w.iter().map(ToString::to_string));
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorExpr[{}; {:?}] {}", self.len, self.flavor, self)
    }
}

/// The anticommutation relations among the `psi`, `psid` and, in the quantum
/// flavor, the identities `psi psid + q^{+-1} psid psi = omega^{-+1}`, all as
/// matrices on `len` positions.
pub fn check_clifford(len: usize, flavor: Flavor, cap: usize) -> Result<Vec<RelationCheck>> {
    let labels = BasisLabels::Fock(len);
    let mat = |g: CliffordGen| OperatorExpr::gen(len, flavor, g)?.to_matrix_capped(cap);
    let psi = (1..=len).map(|k| mat(CliffordGen::psi(k))).collect::<Result<Vec<_>>>()?;
    let psid = (1..=len).map(|k| mat(CliffordGen::psid(k))).collect::<Result<Vec<_>>>()?;
    let id = QMatrix::identity(1 << len);
    let zero = QMatrix::zeros(1 << len, 1 << len);
    let mut out = Vec::new();
    for i in 0..len {
        for j in 0..len {
            let idx = vec![i + 1, j + 1];
            if i <= j {
                let a = psi[i].mul(&psi[j]).add(&psi[j].mul(&psi[i]));
                out.push(vanishes("psi_i psi_j + psi_j psi_i = 0", idx.clone(), &a, &labels));
                let b = psid[i].mul(&psid[j]).add(&psid[j].mul(&psid[i]));
                out.push(vanishes("psid_i psid_j + psid_j psid_i = 0", idx.clone(), &b, &labels));
            }
            let c = psi[i].mul(&psid[j]).add(&psid[j].mul(&psi[i]));
            let want = if i == j { &id } else { &zero };
            out.push(compare("psi_i psid_j + psid_j psi_i = delta_ij", idx, &c, want, &labels));
        }
    }
    if flavor == Flavor::Quantum {
        for k in 1..=len {
            let a = psi[k - 1].mul(&psid[k - 1]);
            let b = psid[k - 1].mul(&psi[k - 1]);
            let lhs = a.add(&b.scale(&QLaurent::q_pow(1)));
            out.push(compare("psi psid + q psid psi = w^-1", vec![k], &lhs, &mat(CliffordGen::omega_inv(k))?, &labels));
            let lhs = a.add(&b.scale(&QLaurent::q_pow(-1)));
            out.push(compare("psi psid + q^-1 psid psi = w", vec![k], &lhs, &mat(CliffordGen::omega(k))?, &labels));
        }
    }
    Ok(out)
}
