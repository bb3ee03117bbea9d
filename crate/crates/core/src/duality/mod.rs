//! Partitions in the `n x m` box, joint highest weight vectors, the
//! multiplicity-free decomposition of `⋀_q(V^(nm))` under the commuting
//! `lambda_q` and `rho_q` actions, and the dual Cauchy identity.

pub mod multipoly;
pub mod partition;
pub mod spans;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::embeddings::{classical_lambda, classical_rho, lambda_q, phi_q, rho_q};
use crate::error::{Error, Result};
use crate::fockspace::{BasisState, GridShape, QVector};
use crate::matrix::{EchelonBasis, RatVec};
use crate::qclifford::{Flavor, OperatorExpr};
use crate::qgroup::{QGroupGen, RelationCheck, Status};
use crate::qscalar::{QLaurent, Rational};

pub use multipoly::{schur_poly, schur_poly_in, MultiPoly};
pub use partition::{binomial, partitions_in_box, weyl_dim, Partition};
pub use spans::{closure, joint_kernel_dimension, total_rank, JointWeight, SpecializedAction};

fn check(relation: String, indices: Vec<usize>, witness: Option<String>) -> RelationCheck {
    RelationCheck { relation, indices, status: Status::from_bool(witness.is_none()), witness }
}

/// The monic basis state whose occupied cells form the Young diagram of `mu`.
pub fn hwv(mu: &Partition, shape: GridShape, _flavor: Flavor) -> Result<QVector> {
    Ok(QVector::basis(mu.diagram_state(shape)?))
}

fn annihilates(op: &OperatorExpr, v: &QVector) -> Result<Option<String>> {
    let image = op.apply(v)?;
    let witness = image.iter().next().map(|(s, c)| format!("{op} yields {c} v({s})"));
    Ok(witness)
}

fn eigen(op: &OperatorExpr, v: &QVector, value: &QLaurent) -> Result<Option<String>> {
    let image = op.apply(v)?;
    let expected = v.scale(value);
    Ok((image != expected).then(|| format!("{op} does not act by {value}")))
}

/// Highest weight checks for an arbitrary basis state against expected row
/// and column weights. The state need not come from a partition.
pub fn joint_hwv_checks(
    state: BasisState,
    shape: GridShape,
    flavor: Flavor,
    rows: &[usize],
    cols: &[usize],
) -> Result<Vec<RelationCheck>> {
    let v = QVector::basis(state);
    let mut out = Vec::new();
    let sides: [(&str, usize, &[usize]); 2] = [("lambda", shape.n, rows), ("rho", shape.m, cols)];
    for (side, p, weights) in sides {
        let map = |g: QGroupGen| -> Result<OperatorExpr> {
            match (side, flavor) {
                ("lambda", Flavor::Quantum) => lambda_q(shape, g),
                ("lambda", Flavor::Classical) => classical_lambda(shape, g),
                (_, Flavor::Quantum) => rho_q(shape, g),
                (_, Flavor::Classical) => classical_rho(shape, g),
            }
        };
        let tag = match flavor {
            Flavor::Quantum => format!("{side}_q"),
            Flavor::Classical => side.to_string(),
        };
        for i in 1..p {
            let op = map(QGroupGen::e(i))?;
            out.push(check(format!("{tag}(E{i}) v = 0"), vec![i], annihilates(&op, &v)?));
        }
        for i in 1..=p {
            let w = weights[i - 1] as i64;
            let (op, value, name) = match flavor {
                Flavor::Quantum => (map(QGroupGen::l(i))?, QLaurent::q_pow(w), format!("q^{w}")),
                Flavor::Classical => (map(QGroupGen::l(i))?, QLaurent::from_int(w), w.to_string()),
            };
            out.push(check(format!("{tag}(L{i}) v = {name} v"), vec![i], eigen(&op, &v, &value)?));
        }
        if flavor == Flavor::Quantum {
            for i in 1..p {
                let w = weights[i - 1] as i64 - weights[i] as i64;
                let op = map(QGroupGen::k(i))?;
                out.push(check(format!("{tag}(K{i}) v = q^{w} v"), vec![i], eigen(&op, &v, &QLaurent::q_pow(w))?));
            }
        }
    }
    Ok(out)
}

/// Checks that `hwv(mu)` is killed by every raising operator of both
/// factors and has weight `mu` on the left and `mu'` on the right.
pub fn verify_hwv(mu: &Partition, shape: GridShape, flavor: Flavor) -> Result<Vec<RelationCheck>> {
    let state = mu.diagram_state(shape)?;
    joint_hwv_checks(state, shape, flavor, &mu.padded(shape.n), &mu.conjugate().padded(shape.m))
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionIdentity {
    pub n: usize,
    pub m: usize,
    /// `sum_{|mu| = k} dim_n * dim_m` for each `k`.
    pub by_degree: Vec<u64>,
    pub expected: Vec<u64>,
    pub total: u64,
    pub status: Status,
}

pub fn dimension_identity(n: usize, m: usize) -> Result<DimensionIdentity> {
    let nm = n * m;
    let mut by_degree = vec![0u64; nm + 1];
    for mu in partitions_in_box(n, m) {
        by_degree[mu.size()] += weyl_dim(&mu, n)? * weyl_dim(&mu.conjugate(), m)?;
    }
    let expected: Vec<u64> = (0..=nm as u64).map(|k| binomial(nm as u64, k)).collect();
    let total = by_degree.iter().sum();
    let ok = by_degree == expected && nm < 64 && total == 1u64 << nm;
    Ok(DimensionIdentity { n, m, by_degree, expected, total, status: Status::from_bool(ok) })
}

fn validate_spec_values(values: &[Rational]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::OutOfRange("at least one specialization value is required".into()));
    }
    for v in values {
        let one = Rational::from_integer(1.into());
        if *v == Rational::from_integer(0.into()) || *v == one || *v == -one {
            return Err(Error::OutOfRange(format!("specialization value {} must be nonzero and not ±1", v)));
        }
    }
    Ok(())
}

fn lowering_ops(shape: GridShape) -> Result<Vec<OperatorExpr>> {
    let mut ops = Vec::new();
    for i in 1..shape.n {
        ops.push(lambda_q(shape, QGroupGen::f(i))?);
    }
    for j in 1..shape.m {
        ops.push(rho_q(shape, QGroupGen::f(j))?);
    }
    Ok(ops)
}

fn raising_ops(shape: GridShape) -> Result<Vec<OperatorExpr>> {
    let mut ops = Vec::new();
    for i in 1..shape.n {
        ops.push(lambda_q(shape, QGroupGen::e(i))?);
    }
    for j in 1..shape.m {
        ops.push(rho_q(shape, QGroupGen::e(j))?);
    }
    Ok(ops)
}

/// Span dimensions at one specialization value.
#[derive(Clone, Debug, Serialize)]
pub struct SpanAtValue {
    pub q: String,
    /// One entry per partition, in `partitions_in_box` order.
    pub dims: Vec<usize>,
    /// Rank of the union of all closures.
    pub joint_rank: usize,
    /// Vectors killed by every raising operator.
    pub kernel_count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanReport {
    pub n: usize,
    pub m: usize,
    pub partitions: Vec<Partition>,
    pub expected: Vec<u64>,
    pub values: Vec<SpanAtValue>,
    pub anomalies: Vec<String>,
    pub status: Status,
}

fn span_at(shape: GridShape, partitions: &[Partition], expected: &[u64], q: &Rational, cap: usize) -> Result<SpanAtValue> {
    let action = SpecializedAction::new(shape, &lowering_ops(shape)?, q, cap)?;
    let mut joint: BTreeMap<JointWeight, EchelonBasis> = BTreeMap::new();
    let mut dims = Vec::with_capacity(partitions.len());
    for (mu, &bound) in partitions.iter().zip(expected) {
        let state = mu.diagram_state(shape)?;
        let start: RatVec = [(state.index(), Rational::from_integer(1.into()))].into_iter().collect();
        let spaces = closure(&action, start, bound as usize + 1);
        dims.push(total_rank(&spaces));
        for (w, basis) in spaces {
            let slot = joint.entry(w).or_default();
            for v in basis.vectors() {
                slot.insert(v.clone());
            }
        }
    }
    let kernel = SpecializedAction::new(shape, &raising_ops(shape)?, q, cap)?;
    Ok(SpanAtValue {
        q: q.to_string(),
        dims,
        joint_rank: total_rank(&joint),
        kernel_count: joint_kernel_dimension(&kernel),
    })
}

/// Closes every highest weight vector under the lowering operators of both
/// factors at each specialization value and compares the span dimensions
/// with the Weyl dimension products.
pub fn cyclic_span_dims(shape: GridShape, spec_values: &[Rational], cap: usize) -> Result<SpanReport> {
    validate_spec_values(spec_values)?;
    if shape.size() > cap {
        return Err(Error::CapExceeded { len: shape.size(), cap });
    }
    let partitions = partitions_in_box(shape.n, shape.m);
    let expected = partitions
        .iter()
        .map(|mu| Ok(weyl_dim(mu, shape.n)? * weyl_dim(&mu.conjugate(), shape.m)?))
        .collect::<Result<Vec<u64>>>()?;
    let values = spec_values
        .iter()
        .map(|q| span_at(shape, &partitions, &expected, q, cap))
        .collect::<Result<Vec<_>>>()?;

    let mut anomalies = Vec::new();
    for (k, mu) in partitions.iter().enumerate() {
        let seen: Vec<usize> = values.iter().map(|v| v.dims[k]).collect();
        if seen.windows(2).any(|w| w[0] != w[1]) {
            let detail: Vec<String> = values.iter().map(|v| format!("q={}: {}", v.q, v.dims[k])).collect();
            anomalies.push(Error::SpecializationAnomaly(format!("{mu}: {}", detail.join(", "))).to_string());
        }
    }
    let full = 1usize << shape.size();
    let count = binomial((shape.n + shape.m) as u64, shape.n as u64) as usize;
    let ok = anomalies.is_empty()
        && values.iter().all(|v| {
            v.dims.iter().zip(&expected).all(|(&d, &e)| d as u64 == e)
                && v.dims.iter().sum::<usize>() == full
                && v.joint_rank == full
                && v.kernel_count == count
        });
    Ok(SpanReport {
        n: shape.n,
        m: shape.m,
        partitions,
        expected,
        values,
        anomalies,
        status: Status::from_bool(ok),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FundamentalEntry {
    pub state: String,
    pub degree: usize,
    pub span_dim: usize,
    pub expected: u64,
    pub checks: Vec<RelationCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FundamentalReport {
    pub n: usize,
    pub vectors: Vec<FundamentalEntry>,
    pub status: Status,
}

/// The states `v(gamma_j)` with the first `j` positions occupied are
/// highest weight for `Phi_{q,n}` and generate the degree-`j` component.
pub fn fundamental_decomp(n: usize, q: &Rational, cap: usize) -> Result<FundamentalReport> {
    validate_spec_values(std::slice::from_ref(q))?;
    let shape = GridShape::new(n, 1)?;
    let raising = (1..n).map(|i| phi_q(n, QGroupGen::e(i))).collect::<Result<Vec<_>>>()?;
    let lowering = (1..n).map(|i| phi_q(n, QGroupGen::f(i))).collect::<Result<Vec<_>>>()?;
    let action = SpecializedAction::new(shape, &lowering, q, cap)?;
    let mut vectors = Vec::new();
    for j in 0..=n {
        let positions: Vec<usize> = (1..=j).collect();
        let state = BasisState::from_positions(&positions, n)?;
        let v = QVector::basis(state);
        let mut checks = Vec::new();
        for (i, op) in raising.iter().enumerate() {
            checks.push(check(format!("Phi(E{}) v = 0", i + 1), vec![i + 1], annihilates(op, &v)?));
        }
        let expected = binomial(n as u64, j as u64);
        let start: RatVec = [(state.index(), Rational::from_integer(1.into()))].into_iter().collect();
        let span_dim = total_rank(&closure(&action, start, expected as usize + 1));
        vectors.push(FundamentalEntry { state: state.to_string(), degree: j, span_dim, expected, checks });
    }
    let ok = vectors.iter().all(|e| e.span_dim as u64 == e.expected && e.checks.iter().all(RelationCheck::passed));
    Ok(FundamentalReport { n, vectors, status: Status::from_bool(ok) })
}

/// On every basis state the `L` generators of both factors act by powers of
/// `q` whose exponents are the row and column degrees, bounded by `m` and `n`.
pub fn check_hw_bounds(shape: GridShape) -> Result<RelationCheck> {
    let lam = (1..=shape.n).map(|i| lambda_q(shape, QGroupGen::l(i))).collect::<Result<Vec<_>>>()?;
    let rho = (1..=shape.m).map(|j| rho_q(shape, QGroupGen::l(j))).collect::<Result<Vec<_>>>()?;
    let exponent = |op: &OperatorExpr, s: BasisState| -> Option<i64> {
        let image = op.apply_state(s);
        let (t, c) = image.iter().next()?;
        let (coeff, e) = c.as_monomial()?;
        (image.nnz() == 1 && *t == s && *coeff == Rational::from_integer(1.into())).then_some(e)
    };
    let mut witness = None;
    'outer: for s in BasisState::all(shape.size()) {
        let (rows, cols) = shape.row_col_weights(&s)?;
        for (ops, weights, bound) in [(&lam, &rows, shape.m), (&rho, &cols, shape.n)] {
            for (op, &w) in ops.iter().zip(weights.iter()) {
                match exponent(op, s) {
                    Some(e) if e == w as i64 && e >= 0 && e as usize <= bound => {}
                    _ => {
                        witness = Some(format!("{op} on v({s})"));
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(check(format!("L-weights bounded by the {}x{} box", shape.n, shape.m), vec![shape.n, shape.m], witness))
}

#[derive(Clone, Debug, Serialize)]
pub struct CauchyReport {
    pub n: usize,
    pub m: usize,
    pub terms: usize,
    pub schur_sum_equal: bool,
    pub enumeration_equal: bool,
    pub status: Status,
}

/// Compares `prod (1 + a_i b_j)` with the sum of `s_mu(a) s_mu'(b)` and with
/// the joint weight generating function of the basis states.
pub fn dual_cauchy_check(n: usize, m: usize) -> Result<CauchyReport> {
    let shape = GridShape::new(n, m)?;
    let nvars = n + m;
    let mut product = MultiPoly::one(nvars);
    for i in 0..n {
        for j in 0..m {
            let factor = MultiPoly::one(nvars).add(&MultiPoly::var(i, nvars).mul(&MultiPoly::var(n + j, nvars)));
            product = product.mul(&factor);
        }
    }
    let mut schur_sum = MultiPoly::zero(nvars);
    for mu in partitions_in_box(n, m) {
        let left = schur_poly_in(&mu, n, 0, nvars);
        let right = schur_poly_in(&mu.conjugate(), m, n, nvars);
        schur_sum = schur_sum.add(&left.mul(&right));
    }
    let mut enumeration = MultiPoly::zero(nvars);
    for s in BasisState::all(shape.size()) {
        let (rows, cols) = shape.row_col_weights(&s)?;
        let e = rows.iter().chain(&cols).map(|&d| d as u32).collect();
        enumeration.add_term(e, Rational::from_integer(1.into()));
    }
    let schur_sum_equal = product == schur_sum;
    let enumeration_equal = product == enumeration;
    Ok(CauchyReport {
        n,
        m,
        terms: product.len(),
        schur_sum_equal,
        enumeration_equal,
        status: Status::from_bool(schur_sum_equal && enumeration_equal),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionEntry {
    pub mu: Partition,
    pub mu_conj: Partition,
    pub dim_n: u64,
    pub dim_m: u64,
    pub span_dim: usize,
    pub hwv_state: String,
    pub checks: Vec<RelationCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub m: usize,
    pub spec_values: Vec<String>,
    pub partitions: Vec<PartitionEntry>,
    pub total: usize,
    pub degree_profile: Vec<usize>,
    pub joint_rank: Vec<usize>,
    pub kernel_count: Vec<usize>,
    pub anomalies: Vec<String>,
    pub status: Status,
}

/// Everything the decomposition needs in one report: highest weight checks
/// in both flavors, span dimensions at every specialization value, the
/// degree profile and the multiplicity-free kernel count.
pub fn decompose(shape: GridShape, spec_values: &[Rational], cap: usize) -> Result<DecompositionReport> {
    let spans = cyclic_span_dims(shape, spec_values, cap)?;
    let identity = dimension_identity(shape.n, shape.m)?;
    let first = &spans.values[0];
    let mut degree_profile = vec![0usize; shape.size() + 1];
    let mut partitions = Vec::new();
    for (k, mu) in spans.partitions.iter().enumerate() {
        let conj = mu.conjugate();
        let dim_n = weyl_dim(mu, shape.n)?;
        let dim_m = weyl_dim(&conj, shape.m)?;
        let span_dim = first.dims[k];
        degree_profile[mu.size()] += span_dim;
        let mut checks = verify_hwv(mu, shape, Flavor::Quantum)?;
        checks.extend(verify_hwv(mu, shape, Flavor::Classical)?);
        for v in &spans.values {
            let d = v.dims[k];
            let witness = (d as u64 != dim_n * dim_m).then(|| format!("span dimension {d} at q={}", v.q));
            checks.push(check(format!("span at q={} has dimension dim_n * dim_m", v.q), vec![k], witness));
        }
        partitions.push(PartitionEntry {
            mu: mu.clone(),
            mu_conj: conj,
            dim_n,
            dim_m,
            span_dim,
            hwv_state: mu.diagram_state(shape)?.to_string(),
            checks,
        });
    }
    let profile_ok = degree_profile.iter().zip(&identity.expected).all(|(&a, &b)| a as u64 == b);
    let ok = spans.status == Status::Pass
        && identity.status == Status::Pass
        && profile_ok
        && partitions.iter().all(|p| p.checks.iter().all(RelationCheck::passed));
    Ok(DecompositionReport {
        n: shape.n,
        m: shape.m,
        spec_values: spans.values.iter().map(|v| v.q.clone()).collect(),
        total: degree_profile.iter().sum(),
        degree_profile,
        joint_rank: spans.values.iter().map(|v| v.joint_rank).collect(),
        kernel_count: spans.values.iter().map(|v| v.kernel_count).collect(),
        anomalies: spans.anomalies,
        partitions,
        status: Status::from_bool(ok),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::rational_int;

    fn shape(n: usize, m: usize) -> GridShape {
        GridShape::new(n, m).unwrap()
    }

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn hwv_examples() {
        let s = shape(2, 2);
        let v = hwv(&part("2,1"), s, Flavor::Quantum).unwrap();
        assert_eq!(v, QVector::basis(BasisState::parse("1110").unwrap()));
        let checks = verify_hwv(&part("2,1"), s, Flavor::Quantum).unwrap();
        assert!(checks.iter().all(RelationCheck::passed), "{checks:?}");
        assert!(checks.iter().any(|c| c.relation == "lambda_q(K1) v = q^1 v"));
        assert!(checks.iter().any(|c| c.relation == "rho_q(K1) v = q^1 v"));
        assert!(verify_hwv(&Partition::empty(), s, Flavor::Classical).unwrap().iter().all(RelationCheck::passed));
        assert!(hwv(&part("3"), s, Flavor::Quantum).is_err());
    }

    #[test]
    fn off_diagram_state_is_not_highest_weight() {
        let s = shape(2, 2);
        let state = BasisState::from_positions(&[s.cell(1, 2)], 4).unwrap();
        assert_eq!(state.to_string(), "0010");
        let checks = joint_hwv_checks(state, s, Flavor::Quantum, &[1, 0], &[0, 1]).unwrap();
        let failing: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.relation.as_str()).collect();
        assert_eq!(failing, ["rho_q(E1) v = 0"]);
    }

    #[test]
    fn dimension_identity_examples() {
        let d = dimension_identity(2, 2).unwrap();
        assert_eq!(d.by_degree, [1, 4, 6, 4, 1]);
        assert_eq!(d.total, 16);
        assert_eq!(dimension_identity(2, 3).unwrap().total, 64);
        assert_eq!(dimension_identity(1, 5).unwrap().status, Status::Pass);
    }

    #[test]
    fn spans_small_shapes() {
        let values = [rational_int(2), rational_int(3)];
        let r = cyclic_span_dims(shape(2, 2), &values, 16).unwrap();
        assert_eq!(r.values[0].dims, [1, 4, 3, 3, 4, 1]);
        assert_eq!(r.status, Status::Pass);
        let r = cyclic_span_dims(shape(1, 2), &values, 16).unwrap();
        assert_eq!(r.values[1].dims, [1, 2, 1]);
        assert!(cyclic_span_dims(shape(1, 2), &[rational_int(1)], 16).is_err());
    }

    #[test]
    fn fundamental_vectors() {
        let r = fundamental_decomp(3, &rational_int(2), 16).unwrap();
        let dims: Vec<usize> = r.vectors.iter().map(|e| e.span_dim).collect();
        assert_eq!(dims, [1, 3, 3, 1]);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(fundamental_decomp(1, &rational_int(2), 16).unwrap().vectors.len(), 2);
    }

    #[test]
    fn cauchy_small() {
        let r = dual_cauchy_check(1, 1).unwrap();
        assert_eq!(r.terms, 2);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(dual_cauchy_check(2, 3).unwrap().status, Status::Pass);
    }

    #[test]
    fn bounds_hold() {
        assert!(check_hw_bounds(shape(2, 3)).unwrap().passed());
    }
}
