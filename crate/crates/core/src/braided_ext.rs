//! The braided exterior algebra `/\_q(V^(n))` as an algebra: normal ordering
//! under `v_i^2 = 0`, `v_i v_j = -q v_j v_i` (`i < j`), multiplication, the
//! quantized inner and exterior multiplication operators, and the
//! module-algebra action of `U_q(gl_n)`.

use crate::error::{Error, Result};
use crate::fockspace::{BasisState, QVector};
use crate::qclifford::{CliffordGen, OperatorExpr};
use crate::embeddings::phi_q;
use crate::qgroup::{compare, BasisLabels, QGenKind, QGroupGen, RelationCheck, Status};
use crate::qscalar::QLaurent;

/// `(-q^{-1})^k`.
fn swap_factor(k: usize) -> QLaurent {
    QLaurent::signed_q_pow(if k % 2 == 0 { 1 } else { -1 }, -(k as i64))
}

/// Normal-orders the product `v_{w_1} v_{w_2} ... ` on `n` generators.
///
/// Returns `None` when a letter repeats. Each inversion costs `-q^{-1}`.
pub fn normalize(letters: &[usize], n: usize) -> Result<Option<(QLaurent, BasisState)>> {
    let mut state = BasisState::vacuum(n)?;
    let mut inversions = 0usize;
    for (pos, &a) in letters.iter().enumerate() {
        if a == 0 || a > n {
            return Err(Error::OutOfRange(format!("generator v{a} with n = {n}")));
        }
        if state.occupied(a) {
            return Ok(None);
        }
        inversions += letters[..pos].iter().filter(|&&b| b > a).count();
        state = state.with_set(a);
    }
    Ok(Some((swap_factor(inversions), state)))
}

/// Product of two basis monomials.
pub fn mul_states(a: BasisState, b: BasisState) -> Option<(QLaurent, BasisState)> {
    if a.bits() & b.bits() != 0 {
        return None;
    }
    let inversions: usize = b.positions().iter().map(|&y| a.positions().iter().filter(|&&x| x > y).count()).sum();
    let merged = BasisState::from_bits(a.bits() | b.bits(), a.len()).expect("same length");
    Some((swap_factor(inversions), merged))
}

/// Bilinear product in `/\_q(V^(n))`.
pub fn mul(a: &QVector, b: &QVector) -> Result<QVector> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
    }
    let mut out = QVector::zero(a.len());
    for (s, x) in a.iter() {
        for (t, y) in b.iter() {
            if let Some((c, u)) = mul_states(*s, *t) {
                out.add_term(u, &(&(x * y) * &c));
            }
        }
    }
    Ok(out)
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("index {i} outside 1..={n}")));
    }
    Ok(())
}

/// `iota_i^q = (prod_{k<i} w_k^{-1}) psi_i`.
pub fn iota_q(i: usize, n: usize) -> Result<OperatorExpr> {
    check_index(i, n)?;
    let mut word: Vec<CliffordGen> = (1..i).map(CliffordGen::omega_inv).collect();
    word.push(CliffordGen::psi(i));
    OperatorExpr::quantum(n, QLaurent::one(), word)
}

/// `eps_i^q = (prod_{k<i} w_k) psi_i^dagger`.
pub fn eps_q(i: usize, n: usize) -> Result<OperatorExpr> {
    check_index(i, n)?;
    let mut word: Vec<CliffordGen> = (1..i).map(CliffordGen::omega).collect();
    word.push(CliffordGen::psid(i));
    OperatorExpr::quantum(n, QLaurent::one(), word)
}

/// `iota_i^q v(l) = (-q)^{l_1 + ... + l_{i-1}} v(l - e_i)`, evaluated directly.
pub fn iota_q_direct(i: usize, state: BasisState) -> Result<Option<(QLaurent, BasisState)>> {
    check_index(i, state.len())?;
    if !state.occupied(i) {
        return Ok(None);
    }
    let k = state.prefix_parity(i)?;
    let sign = if k % 2 == 0 { 1 } else { -1 };
    Ok(Some((QLaurent::signed_q_pow(sign, k as i64), state.with_cleared(i))))
}

/// `eps_i^q v(l) = (-q^{-1})^{l_1 + ... + l_{i-1}} v(l + e_i)`, evaluated directly.
pub fn eps_q_direct(i: usize, state: BasisState) -> Result<Option<(QLaurent, BasisState)>> {
    check_index(i, state.len())?;
    if state.occupied(i) {
        return Ok(None);
    }
    let k = state.prefix_parity(i)?;
    Ok(Some((swap_factor(k), state.with_set(i))))
}

/// Action of a generator on the natural module: `X v_j = c v_{j'}` or zero.
pub fn natural_action(g: QGroupGen, j: usize) -> Option<(QLaurent, usize)> {
    let i = g.index;
    let delta = |a: usize, b: usize| (a == b) as i64;
    match g.kind {
        QGenKind::E => (j == i + 1).then(|| (QLaurent::one(), i)),
        QGenKind::F => (j == i).then(|| (QLaurent::one(), i + 1)),
        QGenKind::L => Some((QLaurent::q_pow(delta(i, j)), j)),
        QGenKind::LInv => Some((QLaurent::q_pow(-delta(i, j)), j)),
        QGenKind::K => Some((QLaurent::q_pow(delta(i, j) - delta(i + 1, j)), j)),
        QGenKind::KInv => Some((QLaurent::q_pow(delta(i + 1, j) - delta(i, j)), j)),
    }
}

fn counit(g: QGroupGen) -> QLaurent {
    match g.kind {
        QGenKind::E | QGenKind::F => QLaurent::zero(),
        _ => QLaurent::one(),
    }
}

/// `X` acting on a basis monomial through the iterated coproduct of `X`
/// applied to its ordered factors, followed by renormalization.
pub fn module_algebra_state(g: QGroupGen, state: BasisState) -> Result<QVector> {
    let n = state.len();
    g.validate(n)?;
    let letters = state.positions();
    let mut out = QVector::zero(n);
    if letters.is_empty() {
        out.add_term(state, &counit(g));
        return Ok(out);
    }
    // Each summand of the iterated coproduct is a tensor of generators, one
    // per factor: group-likes act on every factor, while E (F) acts at one
    // position with K (K^{-1}) on the later (earlier) factors.
    // `None` marks an identity factor.
    let d = letters.len();
    let summands: Vec<Vec<Option<QGroupGen>>> = match g.kind {
        QGenKind::E => (0..d)
            .map(|k| {
                (0..d)
                    .map(|p| match p.cmp(&k) {
                        std::cmp::Ordering::Less => None,
                        std::cmp::Ordering::Equal => Some(g),
                        std::cmp::Ordering::Greater => Some(QGroupGen::k(g.index)),
                    })
                    .collect()
            })
            .collect(),
        QGenKind::F => (0..d)
            .map(|k| {
                (0..d)
                    .map(|p| match p.cmp(&k) {
                        std::cmp::Ordering::Less => Some(QGroupGen::k_inv(g.index)),
                        std::cmp::Ordering::Equal => Some(g),
                        std::cmp::Ordering::Greater => None,
                    })
                    .collect()
            })
            .collect(),
        _ => vec![vec![Some(g); d]],
    };
    for t in summands {
        let mut coeff = QLaurent::one();
        let mut image = Vec::with_capacity(d);
        let mut dead = false;
        for (x, &j) in t.iter().zip(&letters) {
            let Some(x) = x else {
                image.push(j);
                continue;
            };
            match natural_action(*x, j) {
                Some((c, j2)) => {
                    coeff = &coeff * &c;
                    image.push(j2);
                }
                None => {
                    dead = true;
                    break;
                }
            }
        }
        if dead {
            continue;
        }
        if let Some((c, s)) = normalize(&image, n)? {
            out.add_term(s, &(&coeff * &c));
        }
    }
    Ok(out)
}

/// Linear extension of [`module_algebra_state`].
pub fn module_algebra_action(g: QGroupGen, v: &QVector) -> Result<QVector> {
    let mut out = QVector::zero(v.len());
    for (s, c) in v.iter() {
        for (t, d) in module_algebra_state(g, *s)?.iter() {
            out.add_term(*t, &(c * d));
        }
    }
    Ok(out)
}

/// Compares the module-algebra action with `Phi_{q,n}` on every basis state
/// for every `E_i`, `F_i`, `L_i^{+-1}`.
pub fn check_module_algebra(n: usize) -> Result<Vec<RelationCheck>> {
    let mut out = Vec::new();
    for g in QGroupGen::generating_set(n) {
        let phi = phi_q(n, g)?;
        let mut witness = None;
        for s in BasisState::all(n) {
            if module_algebra_state(g, s)? != phi.apply_state(s) {
                witness = Some(s.to_string());
                break;
            }
        }
        out.push(RelationCheck {
            relation: format!("{g} acts as Phi({g})"),
            indices: vec![g.index],
            status: Status::from_bool(witness.is_none()),
            witness,
        });
    }
    Ok(out)
}

/// `eps_i iota_{i+1} = Phi(E_i)` and `eps_{i+1} iota_i = Phi(F_i)`.
pub fn check_inner_exterior_factorization(n: usize, cap: usize) -> Result<Vec<RelationCheck>> {
    let labels = BasisLabels::Fock(n);
    let mut out = Vec::new();
    for i in 1..n {
        let e = eps_q(i, n)?.mul(&iota_q(i + 1, n)?).to_matrix_capped(cap)?;
        out.push(compare("eps_i iota_i+1 = Phi(E_i)", vec![i], &e, &phi_q(n, QGroupGen::e(i))?.to_matrix_capped(cap)?, &labels));
        let f = eps_q(i + 1, n)?.mul(&iota_q(i, n)?).to_matrix_capped(cap)?;
        out.push(compare("eps_i+1 iota_i = Phi(F_i)", vec![i], &f, &phi_q(n, QGroupGen::f(i))?.to_matrix_capped(cap)?, &labels));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> BasisState {
        BasisState::parse(s).unwrap()
    }

    #[test]
    fn normal_ordering() {
        let (c, s) = normalize(&[2, 1], 2).unwrap().unwrap();
        assert_eq!((c, s), (QLaurent::signed_q_pow(-1, -1), st("11")));
        assert!(normalize(&[1, 1], 2).unwrap().is_none());
        let (c, s) = normalize(&[3, 1, 2], 3).unwrap().unwrap();
        assert_eq!((c, s), (QLaurent::q_pow(-2), st("111")));
    }

    #[test]
    fn products() {
        let a = QVector::basis(st("10"));
        let b = QVector::basis(st("01"));
        assert_eq!(mul(&a, &b).unwrap(), QVector::basis(st("11")));
        assert_eq!(mul(&b, &a).unwrap(), QVector::term(st("11"), QLaurent::signed_q_pow(-1, -1)));
        assert!(mul(&a, &a).unwrap().is_zero());
    }

    #[test]
    fn inner_exterior_operators() {
        let iota = iota_q(2, 2).unwrap();
        assert_eq!(iota.apply_state(st("11")), QVector::term(st("10"), QLaurent::signed_q_pow(-1, 1)));
        let eps = eps_q(1, 2).unwrap();
        assert_eq!(eps.apply_state(st("01")), QVector::basis(st("11")));
        for s in BasisState::all(4) {
            for i in 1..=4 {
                let want = iota_q_direct(i, s).unwrap().map(|(c, t)| QVector::term(t, c)).unwrap_or(QVector::zero(4));
                assert_eq!(iota_q(i, 4).unwrap().apply_state(s), want);
                let want = eps_q_direct(i, s).unwrap().map(|(c, t)| QVector::term(t, c)).unwrap_or(QVector::zero(4));
                assert_eq!(eps_q(i, 4).unwrap().apply_state(s), want);
            }
        }
    }

    #[test]
    fn module_algebra_matches_phi() {
        for n in 1..=4 {
            assert!(check_module_algebra(n).unwrap().iter().all(RelationCheck::passed));
            assert!(check_inner_exterior_factorization(n, 16).unwrap().iter().all(RelationCheck::passed));
        }
    }

    #[test]
    fn module_algebra_examples() {
        assert_eq!(module_algebra_state(QGroupGen::e(1), st("01")).unwrap(), QVector::basis(st("10")));
        assert_eq!(
            module_algebra_state(QGroupGen::l(1), st("11")).unwrap(),
            QVector::term(st("11"), QLaurent::q_pow(1))
        );
        assert!(module_algebra_state(QGroupGen::e(1), st("100")).unwrap().is_zero());
        assert!(module_algebra_state(QGroupGen::f(2), st("00")).is_err());
    }
}
