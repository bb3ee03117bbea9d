//! Type A quantum groups `U_q(gl_p)`: generators, Cartan data, matrix
//! representations, both comultiplications, and an exhaustive relation
//! checker including the two forms of the q-Serre relations.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fockspace::BasisState;
use crate::matrix::QMatrix;
use crate::qscalar::{q_binomial, QLaurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QGenKind {
    E,
    F,
    K,
    KInv,
    L,
    LInv,
}

/// A Chevalley-type generator `E_i`, `F_i`, `K_i^{+-1}` or `L_i^{+-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QGroupGen {
    pub kind: QGenKind,
    pub index: usize,
}

impl QGroupGen {
    pub fn e(i: usize) -> Self {
        Self { kind: QGenKind::E, index: i }
    }
    pub fn f(i: usize) -> Self {
        Self { kind: QGenKind::F, index: i }
    }
    pub fn k(i: usize) -> Self {
        Self { kind: QGenKind::K, index: i }
    }
    pub fn k_inv(i: usize) -> Self {
        Self { kind: QGenKind::KInv, index: i }
    }
    pub fn l(i: usize) -> Self {
        Self { kind: QGenKind::L, index: i }
    }
    pub fn l_inv(i: usize) -> Self {
        Self { kind: QGenKind::LInv, index: i }
    }

    /// Checks the index against `U_q(gl_p)`.
    pub fn validate(&self, p: usize) -> Result<()> {
        let max = match self.kind {
            QGenKind::L | QGenKind::LInv => p,
            _ => p.saturating_sub(1),
        };
        if self.index == 0 || self.index > max {
            return Err(Error::OutOfRange(format!("{self} is not a generator of U_q(gl_{p})")));
        }
        Ok(())
    }

    /// Every generator of `U_q(gl_p)`: `E`, `F`, `K^{+-1}`, then `L^{+-1}`.
    pub fn all(p: usize) -> Vec<QGroupGen> {
        let mut out = Vec::new();
        for i in 1..p {
            out.push(Self::e(i));
        }
        for i in 1..p {
            out.push(Self::f(i));
        }
        for i in 1..p {
            out.push(Self::k(i));
            out.push(Self::k_inv(i));
        }
        for i in 1..=p {
            out.push(Self::l(i));
            out.push(Self::l_inv(i));
        }
        out
    }

    /// `E`, `F` and `L^{+-1}`, which generate the algebra.
    pub fn generating_set(p: usize) -> Vec<QGroupGen> {
        let mut out = Vec::new();
        for i in 1..p {
            out.push(Self::e(i));
            out.push(Self::f(i));
        }
        for i in 1..=p {
            out.push(Self::l(i));
            out.push(Self::l_inv(i));
        }
        out
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, inv) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let mut chars = body.chars();
        let head = chars.next().ok_or_else(|| Error::Parse("empty generator".into()))?;
        let index: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator index in {s:?}")))?;
        let kind = match (head, inv) {
            ('E', false) => QGenKind::E,
            ('F', false) => QGenKind::F,
            ('K', false) => QGenKind::K,
            ('K', true) => QGenKind::KInv,
            ('L', false) => QGenKind::L,
            ('L', true) => QGenKind::LInv,
            _ => return Err(Error::Parse(format!("unknown generator {s:?}"))),
        };
        Ok(Self { kind, index })
    }
}

impl fmt::Display for QGroupGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.index;
        match self.kind {
            QGenKind::E => write!(f, "E{i}"),
            QGenKind::F => write!(f, "F{i}"),
            QGenKind::K => write!(f, "K{i}"),
            QGenKind::KInv => write!(f, "K{i}^-1"),
            QGenKind::L => write!(f, "L{i}"),
            QGenKind::LInv => write!(f, "L{i}^-1"),
        }
    }
}

impl Serialize for QGroupGen {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Cartan matrix of type `A_{p-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    p: usize,
    a: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn type_a(p: usize) -> Self {
        let r = p.saturating_sub(1);
        let a = (1..=r)
            .map(|i| (1..=r).map(|j| cartan_entry(i, j)).collect())
            .collect();
        Self { p, a }
    }

    pub fn rank(&self) -> usize {
        self.p
    }

    /// `a_ij`, one-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i - 1][j - 1]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }
}

fn cartan_entry(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// `<eps_i, alpha_j>`: the exponent by which `L_i` rescales `E_j`.
pub fn l_weight(i: usize, j: usize) -> i64 {
    (i == j) as i64 - (i == j + 1) as i64
}

/// How basis indices of a representation are rendered in witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabels {
    /// `v_1, ..., v_p`.
    Natural,
    /// Bitstring states on the given number of positions.
    Fock(usize),
    /// Tensor products; each factor has the given labels and dimension.
    Tensor(Vec<(BasisLabels, usize)>),
}

impl BasisLabels {
    pub fn label(&self, index: usize) -> String {
        match self {
            BasisLabels::Natural => format!("v{}", index + 1),
            BasisLabels::Fock(len) => BasisState::from_bits(index as u64, *len)
                .map(|s| s.to_string())
                .unwrap_or_else(|_| format!("#{index}")),
            BasisLabels::Tensor(factors) => {
                let mut rest = index;
                let mut parts = Vec::with_capacity(factors.len());
                for (lab, dim) in factors.iter().rev() {
                    parts.push(lab.label(rest % dim));
                    rest /= dim;
                }
                parts.reverse();
                parts.join("⊗")
            }
        }
    }

    fn flattened(self, dim: usize) -> Vec<(BasisLabels, usize)> {
        match self {
            BasisLabels::Tensor(f) => f,
            other => vec![(other, dim)],
        }
    }
}

/// A matrix representation of `U_q(gl_p)`, stored by its generators.
///
/// `K_i` is realized as `L_i L_{i+1}^{-1}` and every inverse is the actual
/// inverse matrix on the module.
#[derive(Clone, Debug)]
pub struct Representation {
    rank: usize,
    dim: usize,
    e: Vec<QMatrix>,
    f: Vec<QMatrix>,
    l: Vec<QMatrix>,
    l_inv: Vec<QMatrix>,
    labels: BasisLabels,
}

impl Representation {
    /// Builds from `E_i`, `F_i` (`p - 1` each) and diagonal `L_i` (`p`).
    pub fn new(e: Vec<QMatrix>, f: Vec<QMatrix>, l: Vec<QMatrix>, labels: BasisLabels) -> Result<Self> {
        let l_inv = l.iter().map(QMatrix::invert_diagonal).collect::<Result<Vec<_>>>()?;
        Self::with_inverses(e, f, l, l_inv, labels)
    }

    /// Like [`new`](Self::new) but with the `L_i^{-1}` supplied.
    pub fn with_inverses(
        e: Vec<QMatrix>,
        f: Vec<QMatrix>,
        l: Vec<QMatrix>,
        l_inv: Vec<QMatrix>,
        labels: BasisLabels,
    ) -> Result<Self> {
        let rank = l.len();
        if rank == 0 {
            return Err(Error::OutOfRange("rank must be at least 1".into()));
        }
        if e.len() + 1 != rank || f.len() + 1 != rank || l_inv.len() != rank {
            return Err(Error::RankMismatch(rank, e.len() + 1));
        }
        let dim = l[0].rows();
        for m in e.iter().chain(&f).chain(&l).chain(&l_inv) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::LengthMismatch { expected: dim, found: m.rows() });
            }
        }
        Ok(Self { rank, dim, e, f, l, l_inv, labels })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &BasisLabels {
        &self.labels
    }

    pub fn e(&self, i: usize) -> &QMatrix {
        &self.e[i - 1]
    }

    pub fn f(&self, i: usize) -> &QMatrix {
        &self.f[i - 1]
    }

    pub fn l(&self, i: usize) -> &QMatrix {
        &self.l[i - 1]
    }

    pub fn l_inv(&self, i: usize) -> &QMatrix {
        &self.l_inv[i - 1]
    }

    pub fn k(&self, i: usize) -> QMatrix {
        self.l(i).mul(self.l_inv(i + 1))
    }

    pub fn k_inv(&self, i: usize) -> QMatrix {
        self.l_inv(i).mul(self.l(i + 1))
    }

    pub fn matrix(&self, g: QGroupGen) -> Result<QMatrix> {
        g.validate(self.rank)?;
        let i = g.index;
        Ok(match g.kind {
            QGenKind::E => self.e(i).clone(),
            QGenKind::F => self.f(i).clone(),
            QGenKind::K => self.k(i),
            QGenKind::KInv => self.k_inv(i),
            QGenKind::L => self.l(i).clone(),
            QGenKind::LInv => self.l_inv(i).clone(),
        })
    }

    /// Replaces one `E_i`, e.g. to corrupt a representation on purpose.
    pub fn with_e(mut self, i: usize, m: QMatrix) -> Self {
        self.e[i - 1] = m;
        self
    }
}

/// The natural `p`-dimensional module.
pub fn natural_rep(p: usize) -> Result<Representation> {
    if p == 0 {
        return Err(Error::OutOfRange("rank must be at least 1".into()));
    }
    let one = || QLaurent::one();
    let e = (1..p).map(|i| QMatrix::from_columns(p, unit_columns(p, i, i - 1))).collect();
    let f = (1..p).map(|i| QMatrix::from_columns(p, unit_columns(p, i - 1, i))).collect();
    let l = (1..=p)
        .map(|i| QMatrix::diagonal((1..=p).map(|j| if i == j { QLaurent::q_pow(1) } else { one() }).collect()))
        .collect();
    Representation::new(e, f, l, BasisLabels::Natural)
}

/// Columns of the matrix unit sending basis vector `col` to `row` (zero-based).
fn unit_columns(p: usize, col: usize, row: usize) -> Vec<Vec<(usize, QLaurent)>> {
    (0..p).map(|c| if c == col { vec![(row, QLaurent::one())] } else { Vec::new() }).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coproduct {
    /// `E -> E (x) K + 1 (x) E`, `F -> F (x) 1 + K^-1 (x) F`.
    #[serde(rename = "delta")]
    Standard,
    /// `E -> E (x) 1 + K (x) E`, `F -> F (x) K^-1 + 1 (x) F`.
    #[serde(rename = "delta_tilde")]
    Backward,
}

/// Tensor product of two representations through the chosen coproduct.
pub fn tensor_pair(a: &Representation, b: &Representation, conv: Coproduct) -> Result<Representation> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch(a.rank, b.rank));
    }
    let ia = QMatrix::identity(a.dim);
    let ib = QMatrix::identity(b.dim);
    let mut e = Vec::with_capacity(a.rank - 1);
    let mut f = Vec::with_capacity(a.rank - 1);
    for i in 1..a.rank {
        match conv {
            Coproduct::Standard => {
                e.push(a.e(i).kron(&b.k(i)).add(&ia.kron(b.e(i))));
                f.push(a.f(i).kron(&ib).add(&a.k_inv(i).kron(b.f(i))));
            }
            Coproduct::Backward => {
                e.push(a.e(i).kron(&ib).add(&a.k(i).kron(b.e(i))));
                f.push(a.f(i).kron(&b.k_inv(i)).add(&ia.kron(b.f(i))));
            }
        }
    }
    let l = (1..=a.rank).map(|i| a.l(i).kron(b.l(i))).collect();
    let l_inv = (1..=a.rank).map(|i| a.l_inv(i).kron(b.l_inv(i))).collect();
    let mut labels = a.labels.clone().flattened(a.dim);
    labels.extend(b.labels.clone().flattened(b.dim));
    Representation::with_inverses(e, f, l, l_inv, BasisLabels::Tensor(labels))
}

/// Iterated tensor product, combining factors left to right.
pub fn coproduct_rep(factors: &[Representation], conv: Coproduct) -> Result<Representation> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::OutOfRange("need at least one factor".into()))?;
    rest.iter().try_fold(first.clone(), |acc, r| tensor_pair(&acc, r, conv))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One verified identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub indices: Vec<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Compares `lhs` and `rhs`, naming the first basis vector where they differ.
pub fn compare(relation: &str, indices: Vec<usize>, lhs: &QMatrix, rhs: &QMatrix, labels: &BasisLabels) -> RelationCheck {
    let witness = lhs.first_difference(rhs).map(|c| labels.label(c));
    RelationCheck {
        relation: relation.to_string(),
        indices,
        status: Status::from_bool(witness.is_none()),
        witness,
    }
}

/// Checks `lhs == 0`.
pub fn vanishes(relation: &str, indices: Vec<usize>, lhs: &QMatrix, labels: &BasisLabels) -> RelationCheck {
    let witness = lhs.first_nonzero_column().map(|c| labels.label(c));
    RelationCheck {
        relation: relation.to_string(),
        indices,
        status: Status::from_bool(witness.is_none()),
        witness,
    }
}

/// Every defining relation except the q-Serre relations, as matrix identities.
pub fn check_relations(rep: &Representation) -> Vec<RelationCheck> {
    let p = rep.rank;
    let r = p - 1;
    let lab = &rep.labels;
    let cartan = CartanData::type_a(p);
    let id = QMatrix::identity(rep.dim);
    let k: Vec<QMatrix> = (1..=r).map(|i| rep.k(i)).collect();
    let k_inv: Vec<QMatrix> = (1..=r).map(|i| rep.k_inv(i)).collect();
    let mut out = Vec::new();

    for i in 1..=p {
        for j in i + 1..=p {
            out.push(compare("L_i L_j = L_j L_i", vec![i, j], &rep.l(i).mul(rep.l(j)), &rep.l(j).mul(rep.l(i)), lab));
        }
        out.push(compare("L_i L_i^-1 = 1", vec![i], &rep.l(i).mul(rep.l_inv(i)), &id, lab));
    }
    for i in 1..=r {
        for j in i + 1..=r {
            out.push(compare("K_i K_j = K_j K_i", vec![i, j], &k[i - 1].mul(&k[j - 1]), &k[j - 1].mul(&k[i - 1]), lab));
        }
        out.push(compare("K_i K_i^-1 = 1", vec![i], &k[i - 1].mul(&k_inv[i - 1]), &id, lab));
    }
    for i in 1..=r {
        for j in 1..=r {
            let a = cartan.a(i, j);
            let lhs = k[i - 1].mul(rep.e(j)).mul(&k_inv[i - 1]);
            out.push(compare("K_i E_j K_i^-1 = q^a_ij E_j", vec![i, j], &lhs, &rep.e(j).scale(&QLaurent::q_pow(a)), lab));
            let lhs = k[i - 1].mul(rep.f(j)).mul(&k_inv[i - 1]);
            out.push(compare("K_i F_j K_i^-1 = q^-a_ij F_j", vec![i, j], &lhs, &rep.f(j).scale(&QLaurent::q_pow(-a)), lab));
        }
    }
    for i in 1..=p {
        for j in 1..=r {
            let w = l_weight(i, j);
            let lhs = rep.l(i).mul(rep.e(j)).mul(rep.l_inv(i));
            out.push(compare("L_i E_j L_i^-1 = q^<e_i,a_j> E_j", vec![i, j], &lhs, &rep.e(j).scale(&QLaurent::q_pow(w)), lab));
            let lhs = rep.l(i).mul(rep.f(j)).mul(rep.l_inv(i));
            out.push(compare("L_i F_j L_i^-1 = q^-<e_i,a_j> F_j", vec![i, j], &lhs, &rep.f(j).scale(&QLaurent::q_pow(-w)), lab));
        }
    }
    let q_diff = QLaurent::q_pow(1) - QLaurent::q_pow(-1);
    for i in 1..=r {
        for j in 1..=r {
            let lhs = rep.e(i).commutator(rep.f(j));
            let name = "[E_i, F_j] = delta_ij (K_i - K_i^-1)/(q - q^-1)";
            if i != j {
                out.push(vanishes(name, vec![i, j], &lhs, lab));
                continue;
            }
            match k[i - 1].sub(&k_inv[i - 1]).exact_div_scalar(&q_diff) {
                Ok(rhs) => out.push(compare(name, vec![i, j], &lhs, &rhs, lab)),
                Err(err) => out.push(RelationCheck {
                    relation: name.to_string(),
                    indices: vec![i, j],
                    status: Status::Fail,
                    witness: Some(err.to_string()),
                }),
            }
        }
    }
    out
}

/// The q-Serre relations for `E` and `F`, in the binomial and the nested
/// q-commutator forms; distant generators must commute.
pub fn check_serre(rep: &Representation) -> Vec<RelationCheck> {
    let r = rep.rank - 1;
    let lab = &rep.labels;
    let binom: Vec<QLaurent> = (0..=2).map(|k| q_binomial(2, k).expect("valid q-binomial")).collect();
    let mut out = Vec::new();
    for (name, xs) in [("E", &rep.e), ("F", &rep.f)] {
        for i in 1..=r {
            for j in 1..=r {
                if i == j {
                    continue;
                }
                let (xi, xj) = (&xs[i - 1], &xs[j - 1]);
                if i.abs_diff(j) > 1 {
                    out.push(vanishes(&format!("[{name}_i, {name}_j] = 0"), vec![i, j], &xi.commutator(xj), lab));
                    continue;
                }
                let xi2 = xi.mul(xi);
                let sum = xi2
                    .mul(xj)
                    .scale(&binom[0])
                    .sub(&xi.mul(xj).mul(xi).scale(&binom[1]))
                    .add(&xj.mul(&xi2).scale(&binom[2]));
                out.push(vanishes(&format!("q-Serre binomial ({name})"), vec![i, j], &sum, lab));
                let nested = xi.q_commutator(&xi.q_commutator(xj, 1), -1);
                out.push(vanishes(&format!("q-Serre nested ({name})"), vec![i, j], &nested, lab));
            }
        }
    }
    out
}

/// Compares `(D (x) id) D` with `(id (x) D) D` on three factors for every
/// generator.
pub fn check_coassociativity(a: &Representation, b: &Representation, c: &Representation, conv: Coproduct) -> Result<Vec<RelationCheck>> {
    let left = tensor_pair(&tensor_pair(a, b, conv)?, c, conv)?;
    let right = tensor_pair(a, &tensor_pair(b, c, conv)?, conv)?;
    QGroupGen::all(a.rank)
        .into_iter()
        .map(|g| {
            Ok(compare(
                &format!("coassociativity {g}"),
                vec![g.index],
                &left.matrix(g)?,
                &right.matrix(g)?,
                &left.labels,
            ))
        })
        .collect()
}

pub fn all_pass(checks: &[RelationCheck]) -> bool {
    checks.iter().all(RelationCheck::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_module_actions() {
        let r = natural_rep(3).unwrap();
        assert_eq!(r.e(1).get(0, 1), QLaurent::one());
        assert_eq!(r.f(1).get(1, 0), QLaurent::one());
        assert_eq!(r.l(2).get(1, 1), QLaurent::q_pow(1));
        assert!(all_pass(&check_relations(&r)));
        assert!(all_pass(&check_serre(&r)));
    }

    #[test]
    fn corrupted_e_fails_with_witness() {
        let r = natural_rep(3).unwrap().with_e(1, QMatrix::zeros(3, 3));
        let checks = check_relations(&r);
        let bad = checks
            .iter()
            .find(|c| c.relation.starts_with("[E_i, F_j]") && c.indices == [1, 1])
            .unwrap();
        assert_eq!(bad.status, Status::Fail);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn cartan_matrix() {
        let c = CartanData::type_a(4);
        assert_eq!(c.matrix(), &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
    }

    #[test]
    fn generator_parse_roundtrip() {
        for g in QGroupGen::all(3) {
            assert_eq!(QGroupGen::parse(&g.to_string()).unwrap(), g);
        }
    }
}
