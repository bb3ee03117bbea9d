//! The maps `Phi_{q,n}`, `Theta`, `lambda_q`, `rho_q` and their classical
//! counterparts, realized as Clifford words or formal words over
//! `U_q(gl_nm)`, together with the checks that tie them together.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fockspace::GridShape;
use crate::matrix::{QMatrix, RatMatrix};
use crate::qclifford::{CliffordGen, Flavor, OperatorExpr};
use crate::qgroup::{
    compare, coproduct_rep, vanishes, BasisLabels, Coproduct, QGenKind, QGroupGen, RelationCheck, Representation,
    Status,
};
use crate::qscalar::{QLaurent, Rational};

/// `Phi_{q,p}`: `U_q(gl_p)` into the quantum Clifford algebra on `p` positions.
pub fn phi_q(p: usize, g: QGroupGen) -> Result<OperatorExpr> {
    g.validate(p)?;
    let i = g.index;
    let (coeff, word) = match g.kind {
        QGenKind::E => (
            QLaurent::q_pow(-1),
            vec![CliffordGen::omega_inv(i), CliffordGen::psid(i), CliffordGen::psi(i + 1)],
        ),
        QGenKind::F => (QLaurent::one(), vec![CliffordGen::omega(i), CliffordGen::psid(i + 1), CliffordGen::psi(i)]),
        QGenKind::L => (QLaurent::one(), vec![CliffordGen::omega_inv(i)]),
        QGenKind::LInv => (QLaurent::one(), vec![CliffordGen::omega(i)]),
        QGenKind::K => (QLaurent::one(), vec![CliffordGen::omega_inv(i), CliffordGen::omega(i + 1)]),
        QGenKind::KInv => (QLaurent::one(), vec![CliffordGen::omega(i), CliffordGen::omega_inv(i + 1)]),
    };
    OperatorExpr::quantum(p, coeff, word)
}

/// Which diagonal correction factor: along a row (for `gl_n`) or down a
/// column (for `gl_m`), over the cells before or after the anchor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaOrientation {
    /// `kappa_{i,<j}`, `Lambda_{i,<j}`.
    RowLeft,
    /// `kappa_{i,>j}`, `Lambda_{i,>j}`.
    RowRight,
    /// `kappa_{<i,j}`.
    ColAbove,
    /// `kappa_{>i,j}`.
    ColBelow,
}

/// An ordered product of `omega^{+-1}` (or `K^{+-1}` in `U_q(gl_nm)`)
/// anchored at grid cell `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KappaFactor {
    pub shape: GridShape,
    pub orientation: KappaOrientation,
    pub i: usize,
    pub j: usize,
}

impl KappaFactor {
    pub fn new(shape: GridShape, orientation: KappaOrientation, i: usize, j: usize) -> Self {
        Self { shape, orientation, i, j }
    }

    /// Pairs `(a, b)` of linear positions: the factor is `prod w_a^{-1} w_b`.
    fn pairs(&self) -> Vec<(usize, usize)> {
        let (n, m) = (self.shape.n, self.shape.m);
        let (i, j) = (self.i, self.j);
        match self.orientation {
            KappaOrientation::RowLeft => (1..j).map(|p| (i + (p - 1) * n, i + 1 + (p - 1) * n)).collect(),
            KappaOrientation::RowRight => (j + 1..=m).map(|p| (i + (p - 1) * n, i + 1 + (p - 1) * n)).collect(),
            KappaOrientation::ColAbove => (1..i).map(|p| (p + (j - 1) * n, p + j * n)).collect(),
            KappaOrientation::ColBelow => (i + 1..=n).map(|p| (p + (j - 1) * n, p + j * n)).collect(),
        }
    }

    /// The `omega` word, or that of the inverse factor.
    pub fn omega_word(&self, inverse: bool) -> Vec<CliffordGen> {
        let s = if inverse { -1 } else { 1 };
        self.pairs()
            .into_iter()
            .flat_map(|(a, b)| [CliffordGen::omega_pow(a, -s), CliffordGen::omega_pow(b, s)])
            .collect()
    }

    /// The same factor written with `K^{(nm)}` generators; only defined for
    /// the row orientations, where `w_a^{-1} w_{a+1}` is the image of `K_a`.
    pub fn k_word(&self, inverse: bool) -> Result<Vec<QGroupGen>> {
        match self.orientation {
            KappaOrientation::RowLeft | KappaOrientation::RowRight => Ok(self
                .pairs()
                .into_iter()
                .map(|(a, _)| if inverse { QGroupGen::k_inv(a) } else { QGroupGen::k(a) })
                .collect()),
            _ => Err(Error::UnsupportedGenerator("column factors have no U_q(gl_nm) form".into())),
        }
    }
}

fn check_gen(g: QGroupGen, p: usize) -> Result<()> {
    g.validate(p)
}

/// `lambda_q`: `U_q(gl_n)` acting on `/\_q(V^(nm))`.
pub fn lambda_q(shape: GridShape, g: QGroupGen) -> Result<OperatorExpr> {
    let (n, m) = (shape.n, shape.m);
    check_gen(g, n)?;
    let len = shape.size();
    let i = g.index;
    let mut op = OperatorExpr::zero(len, Flavor::Quantum);
    match g.kind {
        QGenKind::E => {
            for j in 1..=m {
                let a = i + (j - 1) * n;
                let mut w = vec![CliffordGen::omega_inv(a), CliffordGen::psid(a), CliffordGen::psi(a + 1)];
                w.extend(KappaFactor::new(shape, KappaOrientation::RowRight, i, j).omega_word(false));
                op.push_term(QLaurent::q_pow(-1), w)?;
            }
        }
        QGenKind::F => {
            for j in 1..=m {
                let a = i + (j - 1) * n;
                let mut w = vec![CliffordGen::omega(a)];
                w.extend(KappaFactor::new(shape, KappaOrientation::RowLeft, i, j).omega_word(true));
                w.extend([CliffordGen::psid(a + 1), CliffordGen::psi(a)]);
                op.push_term(QLaurent::one(), w)?;
            }
        }
        QGenKind::L | QGenKind::LInv => {
            let s = if g.kind == QGenKind::L { -1 } else { 1 };
            op.push_term(QLaurent::one(), (1..=m).map(|j| CliffordGen::omega_pow(i + (j - 1) * n, s)).collect())?;
        }
        QGenKind::K | QGenKind::KInv => {
            let s = if g.kind == QGenKind::K { 1 } else { -1 };
            let w = (1..=m)
                .flat_map(|j| {
                    let a = i + (j - 1) * n;
                    [CliffordGen::omega_pow(a, -s), CliffordGen::omega_pow(a + 1, s)]
                })
                .collect();
            op.push_term(QLaurent::one(), w)?;
        }
    }
    Ok(op)
}

/// `rho_q`: `U_q(gl_m)` acting on `/\_q(V^(nm))`.
pub fn rho_q(shape: GridShape, g: QGroupGen) -> Result<OperatorExpr> {
    let (n, m) = (shape.n, shape.m);
    check_gen(g, m)?;
    let len = shape.size();
    let j = g.index;
    let mut op = OperatorExpr::zero(len, Flavor::Quantum);
    match g.kind {
        QGenKind::E => {
            for i in 1..=n {
                let mut w = KappaFactor::new(shape, KappaOrientation::ColAbove, i, j).omega_word(false);
                w.extend([CliffordGen::psid(i + (j - 1) * n), CliffordGen::psi(i + j * n)]);
                op.push_term(QLaurent::one(), w)?;
            }
        }
        QGenKind::F => {
            for i in 1..=n {
                let mut w = vec![CliffordGen::psid(i + j * n), CliffordGen::psi(i + (j - 1) * n)];
                w.extend(KappaFactor::new(shape, KappaOrientation::ColBelow, i, j).omega_word(true));
                op.push_term(QLaurent::one(), w)?;
            }
        }
        QGenKind::L | QGenKind::LInv => {
            let s = if g.kind == QGenKind::L { -1 } else { 1 };
            op.push_term(QLaurent::one(), (1..=n).map(|i| CliffordGen::omega_pow(i + (j - 1) * n, s)).collect())?;
        }
        QGenKind::K | QGenKind::KInv => {
            let s = if g.kind == QGenKind::K { 1 } else { -1 };
            let w = (1..=n)
                .flat_map(|i| [CliffordGen::omega_pow(i + (j - 1) * n, -s), CliffordGen::omega_pow(i + j * n, s)])
                .collect();
            op.push_term(QLaurent::one(), w)?;
        }
    }
    Ok(op)
}

/// Classical `lambda`; `L_i` is the row degree operator and `K_i` the
/// difference of consecutive row degrees. Inverses do not exist here.
pub fn classical_lambda(shape: GridShape, g: QGroupGen) -> Result<OperatorExpr> {
    let (n, m) = (shape.n, shape.m);
    check_gen(g, n)?;
    let cells = |r: usize| (1..=m).map(move |j| r + (j - 1) * n);
    classical_map(shape.size(), g, |r| cells(r).collect(), |i| {
        cells(i).map(|a| (a, a + 1)).collect()
    })
}

/// Classical `rho`, with column degree operators.
pub fn classical_rho(shape: GridShape, g: QGroupGen) -> Result<OperatorExpr> {
    let (n, m) = (shape.n, shape.m);
    check_gen(g, m)?;
    let cells = |c: usize| (1..=n).map(move |i| i + (c - 1) * n);
    classical_map(shape.size(), g, |c| cells(c).collect(), |j| {
        cells(j).map(|a| (a, a + n)).collect()
    })
}

/// Shared shape of the classical maps: `E` is `sum psid_a psi_b` over the
/// pairs, `F` the transpose, `L` the degree operator on a set of cells.
fn classical_map<C, P>(len: usize, g: QGroupGen, cells: C, pairs: P) -> Result<OperatorExpr>
where
    C: Fn(usize) -> Vec<usize>,
    P: Fn(usize) -> Vec<(usize, usize)>,
{
    let mut op = OperatorExpr::zero(len, Flavor::Classical);
    let i = g.index;
    let degree = |op: &mut OperatorExpr, r: usize, c: i64| -> Result<()> {
        for a in cells(r) {
            op.push_term(QLaurent::from_int(c), vec![CliffordGen::psid(a), CliffordGen::psi(a)])?;
        }
        Ok(())
    };
    match g.kind {
        QGenKind::E => {
            for (a, b) in pairs(i) {
                op.push_term(QLaurent::one(), vec![CliffordGen::psid(a), CliffordGen::psi(b)])?;
            }
        }
        QGenKind::F => {
            for (a, b) in pairs(i) {
                op.push_term(QLaurent::one(), vec![CliffordGen::psid(b), CliffordGen::psi(a)])?;
            }
        }
        QGenKind::L => degree(&mut op, i, 1)?,
        QGenKind::K => {
            degree(&mut op, i, 1)?;
            degree(&mut op, i + 1, -1)?;
        }
        QGenKind::LInv | QGenKind::KInv => {
            return Err(Error::UnsupportedGenerator(format!("{g} in the classical Lie algebra")));
        }
    }
    Ok(op)
}

/// A scalar-weighted sum of words over `U_q(gl_p)` generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalExpr {
    pub rank: usize,
    pub terms: Vec<(QLaurent, Vec<QGroupGen>)>,
}

impl FormalExpr {
    /// Image in a representation; words act right to left.
    pub fn evaluate(&self, rep: &Representation) -> Result<QMatrix> {
        if rep.rank() != self.rank {
            return Err(Error::RankMismatch(self.rank, rep.rank()));
        }
        let mut acc = QMatrix::zeros(rep.dim(), rep.dim());
        for (c, w) in &self.terms {
            let mut m = QMatrix::identity(rep.dim());
            for g in w {
                m = m.mul(&rep.matrix(*g)?);
            }
            acc = acc.add(&m.scale(c));
        }
        Ok(acc)
    }
}

impl fmt::Display for FormalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| {
                let mut s: Vec<String> = Vec::new();
                if !c.is_one() || w.is_empty() {
                    s.push(c.to_string());
                }
                s.extend(w.iter().map(ToString::to_string));
                s.join(" ")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `Theta`: `U_q(gl_n)` into `U_q(gl_nm)`.
pub fn theta(shape: GridShape, g: QGroupGen) -> Result<FormalExpr> {
    let (n, m) = (shape.n, shape.m);
    check_gen(g, n)?;
    let i = g.index;
    let one = QLaurent::one;
    let terms = match g.kind {
        QGenKind::E => (1..=m)
            .map(|j| {
                let mut w = vec![QGroupGen::e(i + (j - 1) * n)];
                w.extend(KappaFactor::new(shape, KappaOrientation::RowRight, i, j).k_word(false)?);
                Ok((one(), w))
            })
            .collect::<Result<Vec<_>>>()?,
        QGenKind::F => (1..=m)
            .map(|j| {
                let mut w = KappaFactor::new(shape, KappaOrientation::RowLeft, i, j).k_word(true)?;
                w.push(QGroupGen::f(i + (j - 1) * n));
                Ok((one(), w))
            })
            .collect::<Result<Vec<_>>>()?,
        QGenKind::L => vec![(one(), (1..=m).map(|j| QGroupGen::l(i + (j - 1) * n)).collect())],
        QGenKind::LInv => vec![(one(), (1..=m).map(|j| QGroupGen::l_inv(i + (j - 1) * n)).collect())],
        QGenKind::K => vec![(
            one(),
            (1..=m)
                .flat_map(|j| [QGroupGen::l(i + (j - 1) * n), QGroupGen::l_inv(i + 1 + (j - 1) * n)])
                .collect(),
        )],
        QGenKind::KInv => vec![(
            one(),
            (1..=m)
                .flat_map(|j| [QGroupGen::l_inv(i + (j - 1) * n), QGroupGen::l(i + 1 + (j - 1) * n)])
                .collect(),
        )],
    };
    Ok(FormalExpr { rank: shape.size(), terms })
}

/// The named maps, for reporting and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Phi,
    Theta,
    Lambda,
    Rho,
    ClassicalLambda,
    ClassicalRho,
}

/// Lists the terms of a map applied to one generator.
pub fn explain(map: MapKind, shape: GridShape, g: QGroupGen) -> Result<String> {
    Ok(match map {
        MapKind::Phi => format!("Phi_q,{}({g}) = {}", shape.size(), phi_q(shape.size(), g)?),
        MapKind::Theta => format!("Theta({g}) = {}", theta(shape, g)?),
        MapKind::Lambda => format!("lambda_q({g}) = {}", lambda_q(shape, g)?),
        MapKind::Rho => format!("rho_q({g}) = {}", rho_q(shape, g)?),
        MapKind::ClassicalLambda => format!("lambda({g}) = {}", classical_lambda(shape, g)?),
        MapKind::ClassicalRho => format!("rho({g}) = {}", classical_rho(shape, g)?),
    })
}

fn rep_from<F>(rank: usize, len: usize, cap: usize, map: F) -> Result<Representation>
where
    F: Fn(QGroupGen) -> Result<OperatorExpr>,
{
    let mats = |gens: Vec<QGroupGen>| -> Result<Vec<QMatrix>> {
        gens.into_iter().map(|g| map(g)?.to_matrix_capped(cap)).collect()
    };
    Representation::with_inverses(
        mats((1..rank).map(QGroupGen::e).collect())?,
        mats((1..rank).map(QGroupGen::f).collect())?,
        mats((1..=rank).map(QGroupGen::l).collect())?,
        mats((1..=rank).map(QGroupGen::l_inv).collect())?,
        BasisLabels::Fock(len),
    )
}

/// `Phi_{q,p}` as a representation on `/\_q(V^(p))`.
pub fn phi_rep(p: usize, cap: usize) -> Result<Representation> {
    rep_from(p, p, cap, |g| phi_q(p, g))
}

pub fn lambda_rep(shape: GridShape, cap: usize) -> Result<Representation> {
    rep_from(shape.n, shape.size(), cap, |g| lambda_q(shape, g))
}

pub fn rho_rep(shape: GridShape, cap: usize) -> Result<Representation> {
    rep_from(shape.m, shape.size(), cap, |g| rho_q(shape, g))
}

/// Generators of the classical images used in commutant checks.
fn classical_gens(p: usize) -> Vec<QGroupGen> {
    QGroupGen::all(p)
        .into_iter()
        .filter(|g| !matches!(g.kind, QGenKind::LInv | QGenKind::KInv))
        .collect()
}

/// `[lambda(X), rho(Y)] = 0` for every pair of generators.
pub fn check_commutant(shape: GridShape, flavor: Flavor, cap: usize) -> Result<Vec<RelationCheck>> {
    let (gens_n, gens_m) = match flavor {
        Flavor::Quantum => (QGroupGen::all(shape.n), QGroupGen::all(shape.m)),
        Flavor::Classical => (classical_gens(shape.n), classical_gens(shape.m)),
    };
    let left = gens_n
        .iter()
        .map(|&g| {
            let op = match flavor {
                Flavor::Quantum => lambda_q(shape, g)?,
                Flavor::Classical => classical_lambda(shape, g)?,
            };
            Ok((g, op.to_matrix_capped(cap)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let right = gens_m
        .iter()
        .map(|&g| {
            let op = match flavor {
                Flavor::Quantum => rho_q(shape, g)?,
                Flavor::Classical => classical_rho(shape, g)?,
            };
            Ok((g, op.to_matrix_capped(cap)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = BasisLabels::Fock(shape.size());
    let (lname, rname) = match flavor {
        Flavor::Quantum => ("lambda_q", "rho_q"),
        Flavor::Classical => ("lambda", "rho"),
    };
    let mut out = Vec::with_capacity(left.len() * right.len());
    for (x, a) in &left {
        for (y, b) in &right {
            out.push(vanishes(
                &format!("[{lname}({x}), {rname}({y})] = 0"),
                vec![x.index, y.index],
                &a.commutator(b),
                &labels,
            ));
        }
    }
    Ok(out)
}

/// `lambda_q = Phi_{q,nm} o Theta` for every generator of `U_q(gl_n)`.
pub fn check_composition(shape: GridShape, cap: usize) -> Result<Vec<RelationCheck>> {
    let phi = phi_rep(shape.size(), cap)?;
    QGroupGen::all(shape.n)
        .into_iter()
        .map(|g| {
            let lhs = lambda_q(shape, g)?.to_matrix_capped(cap)?;
            let rhs = theta(shape, g)?.evaluate(&phi)?;
            Ok(compare(&format!("lambda_q({g}) = Phi(Theta({g}))"), vec![g.index], &lhs, &rhs, phi.labels()))
        })
        .collect()
}

/// Entrywise `q -> 1` of the matrix realization.
pub fn dequantize(op: &OperatorExpr, cap: usize) -> Result<RatMatrix> {
    op.to_matrix_capped(cap)?.specialize(&Rational::from_integer(1.into()))
}

/// For root vectors, the `q -> 1` limit equals the classical image. For
/// group-likes, the limit is the identity and the quantum operator is
/// `q` raised to the classical degree operator (inverted for inverses).
pub fn check_dequantization(shape: GridShape, cap: usize) -> Result<Vec<RelationCheck>> {
    let mut out = Vec::new();
    let len = shape.size();
    let labels = BasisLabels::Fock(len);
    type Maps = (
        &'static str,
        usize,
        fn(GridShape, QGroupGen) -> Result<OperatorExpr>,
        fn(GridShape, QGroupGen) -> Result<OperatorExpr>,
    );
    let maps: [Maps; 2] = [
        ("lambda_q", shape.n, lambda_q, classical_lambda),
        ("rho_q", shape.m, rho_q, classical_rho),
    ];
    for (name, p, quantum, classical) in maps {
        for g in QGroupGen::all(p) {
            let qm = quantum(shape, g)?.to_matrix_capped(cap)?;
            let at_one = qm.specialize(&Rational::from_integer(1.into()))?;
            let relation = format!("{name}({g}) at q = 1");
            let witness = match g.kind {
                QGenKind::E | QGenKind::F => {
                    let cm = classical(shape, g)?.to_matrix_capped(cap)?.specialize(&Rational::from_integer(1.into()))?;
                    first_rat_difference(&at_one, &cm)
                }
                _ => {
                    let (base, sign) = match g.kind {
                        QGenKind::L => (QGroupGen::l(g.index), 1),
                        QGenKind::LInv => (QGroupGen::l(g.index), -1),
                        QGenKind::K => (QGroupGen::k(g.index), 1),
                        _ => (QGroupGen::k(g.index), -1),
                    };
                    let degrees = classical(shape, base)?.to_matrix_capped(cap)?;
                    first_rat_difference(&at_one, &RatMatrix::identity(1 << len))
                        .or_else(|| exponential_mismatch(&qm, &degrees, sign))
                }
            };
            out.push(RelationCheck {
                relation,
                indices: vec![g.index],
                status: Status::from_bool(witness.is_none()),
                witness: witness.map(|c| labels.label(c)),
            });
        }
    }
    Ok(out)
}

fn first_rat_difference(a: &RatMatrix, b: &RatMatrix) -> Option<usize> {
    (0..a.cols()).find(|&c| a.column(c) != b.column(c))
}

/// First column where `quantum` is not `diag(q^{sign * d})` for the diagonal
/// integer matrix `degrees`.
fn exponential_mismatch(quantum: &QMatrix, degrees: &QMatrix, sign: i64) -> Option<usize> {
    let dq = quantum.diagonal_entries()?;
    let dd = degrees.diagonal_entries()?;
    dq.iter().zip(&dd).position(|(x, d)| {
        let e = d.as_monomial().filter(|(_, k)| *k == 0).map(|(c, _)| c.to_integer());
        let e = match (d.is_zero(), e) {
            (true, _) => 0i64,
            (false, Some(v)) => match i64::try_from(v) {
                Ok(v) => v,
                Err(_) => return true,
            },
            (false, None) => return true,
        };
        *x != QLaurent::q_pow(sign * e)
    })
}

/// Joint eigenvalue exponents of the `L_i` on each basis vector.
pub fn l_weight_multiset(rep: &Representation) -> Result<BTreeMap<Vec<i64>, usize>> {
    let diags = (1..=rep.rank())
        .map(|i| {
            rep.l(i)
                .diagonal_entries()
                .ok_or_else(|| Error::NotInvertible(format!("L{i} is not diagonal")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = BTreeMap::new();
    for b in 0..rep.dim() {
        let w = diags
            .iter()
            .map(|d| match d[b].as_monomial() {
                Some((c, k)) if c == &Rational::from_integer(1.into()) => Ok(k),
                _ => Err(Error::NotInvertible(format!("L eigenvalue {} is not a power of q", d[b]))),
            })
            .collect::<Result<Vec<_>>>()?;
        *out.entry(w).or_insert(0) += 1;
    }
    Ok(out)
}

/// Character-level comparison of `/\_q(V^(nm))` under `lambda_q` with the
/// `m`-fold coproduct action on `/\_q(V^(n))^{(x) m}`.
pub fn check_tensor_power_characters(shape: GridShape, cap: usize) -> Result<RelationCheck> {
    let lam = lambda_rep(shape, cap)?;
    let factor = phi_rep(shape.n, cap)?;
    let tensor = coproduct_rep(&vec![factor; shape.m], Coproduct::Standard)?;
    let a = l_weight_multiset(&lam)?;
    let b = l_weight_multiset(&tensor)?;
    let witness = a
        .iter()
        .find(|(w, c)| b.get(*w) != Some(c))
        .or_else(|| b.iter().find(|(w, c)| a.get(*w) != Some(c)))
        .map(|(w, _)| format!("weight {w:?}"));
    Ok(RelationCheck {
        relation: "L-weight multiset of lambda_q equals that of the tensor power".into(),
        indices: vec![shape.n, shape.m],
        status: Status::from_bool(witness.is_none()),
        witness,
    })
}

/// Dense integer `nm x nm` matrices for `gl_nm`.
pub type IntMatrix = Vec<Vec<i64>>;

fn matrix_unit(size: usize, a: usize, b: usize) -> IntMatrix {
    let mut m = vec![vec![0; size]; size];
    m[a - 1][b - 1] = 1;
    m
}

fn int_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

fn int_commutator(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let ab = int_mul(a, b);
    let ba = int_mul(b, a);
    ab.iter().zip(&ba).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect()).collect()
}

/// The image of `E_j^{(m)}` in `gl_nm`, built from nested commutators
/// `[[[E_a, E_{a+1}], E_{a+2}], ..., E_{a+n-1}]` with `a = i + (j-1)n`.
pub fn classical_nested_root_vector(shape: GridShape, j: usize) -> Result<IntMatrix> {
    let (n, m) = (shape.n, shape.m);
    if j == 0 || j >= m {
        return Err(Error::OutOfRange(format!("E{j} is not a generator of gl_{m}")));
    }
    let size = shape.size();
    let mut total = vec![vec![0; size]; size];
    for i in 1..=n {
        let a = i + (j - 1) * n;
        let mut acc = matrix_unit(size, a, a + 1);
        for b in a + 1..a + n {
            acc = int_commutator(&acc, &matrix_unit(size, b, b + 1));
        }
        for (t, r) in total.iter_mut().zip(&acc) {
            for (x, y) in t.iter_mut().zip(r) {
                *x += y;
            }
        }
    }
    Ok(total)
}

/// `sum_i M_{i+(j-1)n, i+jn}`.
pub fn column_shift_matrix(shape: GridShape, j: usize) -> IntMatrix {
    let size = shape.size();
    let mut out = vec![vec![0; size]; size];
    for i in 1..=shape.n {
        out[i + (j - 1) * shape.n - 1][i + j * shape.n - 1] = 1;
    }
    out
}
