//! Exact span computations at specialized `q`: lowering closures of highest
//! weight vectors and joint kernels of the raising operators, both organized
//! by joint weight space.

use std::collections::{BTreeMap, VecDeque};

use crate::error::Result;
use crate::fockspace::{BasisState, GridShape};
use crate::matrix::{EchelonBasis, RatMatrix, RatVec};
use crate::qclifford::OperatorExpr;
use crate::qscalar::Rational;

/// Joint weight: row degrees then column degrees.
pub type JointWeight = (Vec<usize>, Vec<usize>);

/// Operators specialized at one value of `q`, plus the weight of every basis
/// state so vectors can be filed by weight space.
pub struct SpecializedAction {
    shape: GridShape,
    ops: Vec<RatMatrix>,
}

impl SpecializedAction {
    pub fn new(shape: GridShape, ops: &[OperatorExpr], q: &Rational, cap: usize) -> Result<Self> {
        let ops = ops
            .iter()
            .map(|op| op.to_matrix_capped(cap)?.specialize(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { shape, ops })
    }

    pub fn ops(&self) -> &[RatMatrix] {
        &self.ops
    }

    pub fn weight_of_index(&self, index: usize) -> JointWeight {
        let s = BasisState::from_bits(index as u64, self.shape.size()).expect("index within range");
        self.shape.row_col_weights(&s).expect("state matches shape")
    }

    fn weight_of(&self, v: &RatVec) -> Option<JointWeight> {
        v.keys().next().map(|&i| self.weight_of_index(i))
    }
}

/// The closure of `start` under the operators, as echelon bases per weight
/// space. Stops early once the total dimension exceeds `cap`.
pub fn closure(action: &SpecializedAction, start: RatVec, cap: usize) -> BTreeMap<JointWeight, EchelonBasis> {
    let mut spaces: BTreeMap<JointWeight, EchelonBasis> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut total = 0usize;
    if let Some(w) = action.weight_of(&start) {
        spaces.entry(w).or_default().insert(start.clone());
        queue.push_back(start);
        total = 1;
    }
    while let Some(v) = queue.pop_front() {
        if total > cap {
            break;
        }
        for op in action.ops() {
            let image = op.apply(&v);
            let Some(w) = action.weight_of(&image) else { continue };
            if spaces.entry(w).or_default().insert(image.clone()) {
                total += 1;
                queue.push_back(image);
            }
        }
    }
    spaces
}

pub fn total_rank(spaces: &BTreeMap<JointWeight, EchelonBasis>) -> usize {
    spaces.values().map(EchelonBasis::rank).sum()
}

/// Number of vectors killed by every operator, summed over weight spaces:
/// `dim W - rank` of the stacked operator restricted to `W`.
pub fn joint_kernel_dimension(action: &SpecializedAction) -> usize {
    let size = action.shape.size();
    let dim = 1usize << size;
    let mut spaces: BTreeMap<JointWeight, Vec<usize>> = BTreeMap::new();
    for index in 0..dim {
        spaces.entry(action.weight_of_index(index)).or_default().push(index);
    }
    spaces
        .values()
        .map(|indices| {
            let mut basis = EchelonBasis::new();
            for &c in indices {
                let mut stacked = RatVec::new();
                for (k, op) in action.ops().iter().enumerate() {
                    for (r, x) in op.column(c) {
                        stacked.insert(k * dim + r, x.clone());
                    }
                }
                basis.insert(stacked);
            }
            indices.len() - basis.rank()
        })
        .sum()
}
