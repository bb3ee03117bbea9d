//! Weights and Casimir eigenvalues for `gl_p`, and the braiding `R` on
//! `V (x) V` for the natural module, built from its two eigenspaces.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{rank_of, QMatrix, RatVec};
use crate::qgroup::{
    compare, natural_rep, tensor_pair, vanishes, BasisLabels, Coproduct, QGroupGen, RelationCheck, Status,
};
use crate::qscalar::{exact_div, QLaurent, Rational};

/// A weight in the orthonormal `eps` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(p: usize) -> Self {
        Weight(vec![0; p])
    }

    /// `eps_i` in rank `p`.
    pub fn eps(i: usize, p: usize) -> Self {
        let mut w = vec![0; p];
        w[i - 1] = 1;
        Weight(w)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn inner(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// `<alpha_i, self>` with `alpha_i = eps_i - eps_{i+1}`.
    pub fn simple_pairing(&self, i: usize) -> i64 {
        self.0[i - 1] - self.0[i]
    }
}

/// The Weyl vector `(p-1, ..., 1, 0)`.
pub fn weyl_vector(p: usize) -> Weight {
    Weight((0..p).rev().map(|k| k as i64).collect())
}

/// `<lambda, lambda + 2 rho>`.
pub fn casimir_eig(lambda: &Weight, p: usize) -> Result<i64> {
    casimir_eig_with_rho(lambda, &weyl_vector(p))
}

/// Casimir eigenvalue for an arbitrary choice of `rho`.
pub fn casimir_eig_with_rho(lambda: &Weight, rho: &Weight) -> Result<i64> {
    if lambda.0.len() != rho.0.len() {
        return Err(Error::LengthMismatch { expected: rho.0.len(), found: lambda.0.len() });
    }
    Ok(lambda.inner(&lambda.add(&rho.scale(2))))
}

/// `sign * q^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedQPow {
    pub sign: i64,
    pub exponent: i64,
}

impl SignedQPow {
    pub fn to_laurent(self) -> QLaurent {
        QLaurent::signed_q_pow(self.sign, self.exponent)
    }
}

impl fmt::Display for SignedQPow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// Scalar by which `R` acts on `V_nu` inside `V_mu (x) V_mu`, for
/// `mu = eps_1` and `nu` either `2 eps_1` or `eps_1 + eps_2`.
pub fn braiding_eigenvalue(mu: &Weight, nu: &Weight, p: usize) -> Result<SignedQPow> {
    braiding_eigenvalue_with_rho(mu, nu, &weyl_vector(p))
}

pub fn braiding_eigenvalue_with_rho(mu: &Weight, nu: &Weight, rho: &Weight) -> Result<SignedQPow> {
    let p = rho.0.len();
    if p == 0 {
        return Err(Error::OutOfRange("braiding needs rank at least 1".into()));
    }
    if *mu != Weight::eps(1, p) {
        return Err(Error::OutOfRange(format!("only mu = eps_1 is supported, got {:?}", mu.0)));
    }
    let symmetric = Weight::eps(1, p).scale(2);
    // The q -> 1 limit is the flip, which is +1 on Sym^2 and -1 on /\^2.
    let sign = if *nu == symmetric {
        1
    } else if p >= 2 && *nu == Weight::eps(1, p).add(&Weight::eps(2, p)) {
        -1
    } else {
        return Err(Error::OutOfRange(format!("{:?} is not a constituent of V (x) V", nu.0)));
    };
    let twice = casimir_eig_with_rho(nu, rho)? - 2 * casimir_eig_with_rho(mu, rho)?;
    if twice % 2 != 0 {
        return Err(Error::OutOfRange(format!("non-integral braiding exponent {twice}/2")));
    }
    Ok(SignedQPow { sign, exponent: twice / 2 })
}

fn tensor_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// The symmetric eigenvectors `v_i (x) v_i` and `v_i (x) v_j + q v_j (x) v_i`.
pub fn symmetric_vectors(n: usize) -> Vec<Vec<(usize, QLaurent)>> {
    let mut out: Vec<Vec<(usize, QLaurent)>> = (1..=n).map(|i| vec![(tensor_index(n, i, i), QLaurent::one())]).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(vec![(tensor_index(n, i, j), QLaurent::one()), (tensor_index(n, j, i), QLaurent::q_pow(1))]);
        }
    }
    out
}

/// The antisymmetric eigenvectors `v_i (x) v_j - q^{-1} v_j (x) v_i`.
pub fn antisymmetric_vectors(n: usize) -> Vec<Vec<(usize, QLaurent)>> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(vec![
                (tensor_index(n, i, j), QLaurent::one()),
                (tensor_index(n, j, i), QLaurent::signed_q_pow(-1, -1)),
            ]);
        }
    }
    out
}

/// `R` acting by `plus` on the symmetric span and `minus` on the
/// antisymmetric span, assembled column by column.
pub fn build_rhat_with(n: usize, plus: &QLaurent, minus: &QLaurent) -> Result<QMatrix> {
    let dim = n * n;
    let mut columns: Vec<Vec<(usize, QLaurent)>> = vec![Vec::new(); dim];
    for i in 1..=n {
        columns[tensor_index(n, i, i)] = vec![(tensor_index(n, i, i), plus.clone())];
    }
    // In the basis (v_i v_j, v_j v_i) the eigenvectors are a = (1, q) and
    // b = (1, -q^-1). Expand each basis vector t = x a + y b by Cramer's rule
    // and divide the recombined image by the determinant at the end.
    let q = QLaurent::q_pow(1);
    let qi = QLaurent::q_pow(-1);
    let (a0, a1) = (QLaurent::one(), q.clone());
    let (b0, b1) = (QLaurent::one(), -&qi);
    let det = &(&a0 * &b1) - &(&a1 * &b0);
    for i in 1..=n {
        for j in i + 1..=n {
            for (t0, t1, col) in [
                (QLaurent::one(), QLaurent::zero(), tensor_index(n, i, j)),
                (QLaurent::zero(), QLaurent::one(), tensor_index(n, j, i)),
            ] {
                let x = &(&t0 * &b1) - &(&t1 * &b0);
                let y = &(&a0 * &t1) - &(&a1 * &t0);
                let px = plus * &x;
                let my = minus * &y;
                let c0 = exact_div(&(&(&px * &a0) + &(&my * &b0)), &det)?;
                let c1 = exact_div(&(&(&px * &a1) + &(&my * &b1)), &det)?;
                columns[col] = vec![(tensor_index(n, i, j), c0), (tensor_index(n, j, i), c1)];
            }
        }
    }
    Ok(QMatrix::from_columns(dim, columns))
}

/// The braiding on `V^(n) (x) V^(n)`.
pub fn build_rhat(n: usize) -> Result<QMatrix> {
    build_rhat_with(n, &QLaurent::q_pow(1), &QLaurent::signed_q_pow(-1, -1))
}

/// A deliberately wrong braiding with the two eigenvalues exchanged.
pub fn build_rhat_swapped(n: usize) -> Result<QMatrix> {
    build_rhat_with(n, &QLaurent::signed_q_pow(-1, -1), &QLaurent::q_pow(1))
}

fn tensor_labels(n: usize, k: usize) -> BasisLabels {
    BasisLabels::Tensor(vec![(BasisLabels::Natural, n); k])
}

pub fn check_yang_baxter(r: &QMatrix, n: usize) -> RelationCheck {
    let id = QMatrix::identity(n);
    let r1 = r.kron(&id);
    let r2 = id.kron(r);
    let lhs = r1.mul(&r2).mul(&r1);
    let rhs = r2.mul(&r1).mul(&r2);
    compare("R1 R2 R1 = R2 R1 R2", vec![n], &lhs, &rhs, &tensor_labels(n, 3))
}

pub fn check_hecke(r: &QMatrix, n: usize) -> RelationCheck {
    let id = QMatrix::identity(n * n);
    let lhs = r.sub(&id.scale(&QLaurent::q_pow(1))).mul(&r.add(&id.scale(&QLaurent::q_pow(-1))));
    vanishes("(R - q)(R + q^-1) = 0", vec![n], &lhs, &tensor_labels(n, 2))
}

/// `[R, Delta(X)] = 0` for every generator `X` of `U_q(gl_n)`.
pub fn check_intertwiner(r: &QMatrix, n: usize) -> Result<Vec<RelationCheck>> {
    let nat = natural_rep(n)?;
    let vv = tensor_pair(&nat, &nat, Coproduct::Standard)?;
    QGroupGen::all(n)
        .into_iter()
        .map(|g| {
            let d = vv.matrix(g)?;
            Ok(vanishes(&format!("[R, Delta({g})] = 0"), vec![g.index], &r.commutator(&d), vv.labels()))
        })
        .collect()
}

/// `R` at `q = 1` is the flip `v_i (x) v_j -> v_j (x) v_i`.
pub fn check_flip_limit(r: &QMatrix, n: usize) -> Result<RelationCheck> {
    let at_one = r.specialize(&Rational::from_integer(1.into()))?;
    let witness = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let want = [(tensor_index(n, j, i), Rational::from_integer(1.into()))];
            at_one.column(tensor_index(n, i, j)) != want
        })
        .map(|(i, j)| format!("v{i}⊗v{j}"));
    Ok(RelationCheck {
        relation: "R at q = 1 is the flip".into(),
        indices: vec![n],
        status: Status::from_bool(witness.is_none()),
        witness,
    })
}

fn column_vector(dim: usize, v: &[(usize, QLaurent)]) -> QMatrix {
    QMatrix::from_columns(dim, vec![v.to_vec()])
}

/// `R` acts on each listed eigenvector by the predicted braiding scalar.
pub fn check_eigenvalues(r: &QMatrix, n: usize) -> Result<Vec<RelationCheck>> {
    let dim = n * n;
    let mu = Weight::eps(1, n);
    let mut cases = vec![("symmetric", mu.scale(2), symmetric_vectors(n))];
    // V (x) V has no antisymmetric constituent when n = 1.
    if n >= 2 {
        cases.push(("antisymmetric", mu.add(&Weight::eps(2, n)), antisymmetric_vectors(n)));
    }
    let mut out = Vec::new();
    for (name, nu, vectors) in cases {
        let ev = braiding_eigenvalue(&mu, &nu, n)?.to_laurent();
        let bad = vectors.iter().position(|v| {
            let x = column_vector(dim, v);
            r.mul(&x) != x.scale(&ev)
        });
        out.push(RelationCheck {
            relation: format!("R = {ev} on the {name} eigenvectors"),
            indices: vec![n],
            status: Status::from_bool(bad.is_none()),
            witness: bad.map(|k| format!("eigenvector #{}", k + 1)),
        });
    }
    Ok(out)
}

/// The highest weight vectors `v_1 (x) v_1` and `v_1 (x) v_2 - q^-1 v_2 (x) v_1`
/// are killed by every `Delta(E_i)` and have the expected `K` weights.
pub fn check_square_highest_weights(n: usize) -> Result<Vec<RelationCheck>> {
    let dim = n * n;
    let nat = natural_rep(n)?;
    let vv = tensor_pair(&nat, &nat, Coproduct::Standard)?;
    let mu = Weight::eps(1, n);
    let mut cases = vec![("v1⊗v1", mu.scale(2), vec![(tensor_index(n, 1, 1), QLaurent::one())])];
    if n >= 2 {
        cases.push((
            "v1⊗v2 - q^-1 v2⊗v1",
            mu.add(&Weight::eps(2, n)),
            vec![(tensor_index(n, 1, 2), QLaurent::one()), (tensor_index(n, 2, 1), QLaurent::signed_q_pow(-1, -1))],
        ));
    }
    let mut out = Vec::new();
    for (name, nu, v) in cases {
        let x = column_vector(dim, &v);
        for i in 1..n {
            let killed = vv.e(i).mul(&x).is_zero();
            let weight_ok = vv.k(i).mul(&x) == x.scale(&QLaurent::q_pow(nu.simple_pairing(i)));
            out.push(RelationCheck {
                relation: format!("{name} is a highest weight vector"),
                indices: vec![i],
                status: Status::from_bool(killed && weight_ok),
                witness: (!(killed && weight_ok)).then(|| format!("E{i} or K{i} on {name}")),
            });
        }
    }
    Ok(out)
}

/// Dimensions of the `+q` eigenspace (`Sym^2_q`) and of the degree-two part
/// of the quotient, measured by exact rank at `q = 2`.
pub fn sym2q_dims(n: usize) -> Result<(usize, usize)> {
    let r = build_rhat(n)?;
    let dim = n * n;
    let shifted = r.sub(&QMatrix::identity(dim).scale(&QLaurent::q_pow(1)));
    let at = shifted.specialize(&Rational::from_integer(2.into()))?;
    let rank = rank_of((0..dim).map(|c| at.column(c).iter().cloned().collect::<RatVec>()));
    let plus = dim - rank;
    // The listed symmetric vectors must lie in, and span, the eigenspace.
    let sym = symmetric_vectors(n);
    for v in &sym {
        let x = column_vector(dim, v);
        if !shifted.mul(&x).is_zero() {
            return Err(Error::RankMismatch(plus, sym.len()));
        }
    }
    let sym_rank = rank_of(sym.iter().map(|v| {
        column_vector(dim, v)
            .specialize(&Rational::from_integer(2.into()))
            .map(|m| m.column(0).iter().cloned().collect::<RatVec>())
            .unwrap_or_default()
    }));
    if sym_rank != plus {
        return Err(Error::RankMismatch(plus, sym_rank));
    }
    Ok((plus, dim - plus))
}

/// Every braiding check for the natural module of `U_q(gl_n)`.
pub fn check_braiding(n: usize) -> Result<Vec<RelationCheck>> {
    let r = build_rhat(n)?;
    let mut out = vec![check_yang_baxter(&r, n), check_hecke(&r, n)];
    out.extend(check_intertwiner(&r, n)?);
    out.extend(check_eigenvalues(&r, n)?);
    out.push(check_flip_limit(&r, n)?);
    out.extend(check_square_highest_weights(n)?);
    let dims = sym2q_dims(n);
    let expected = (n * (n + 1) / 2, n * (n - 1) / 2);
    out.push(RelationCheck {
        relation: "dim Sym^2_q = n(n+1)/2, quotient degree 2 = n(n-1)/2".into(),
        indices: vec![n],
        status: Status::from_bool(dims.as_ref().ok() == Some(&expected)),
        witness: match dims {
            Ok(d) if d == expected => None,
            Ok(d) => Some(format!("{d:?}")),
            Err(e) => Some(e.to_string()),
        },
    });
    Ok(out)
}
