use std::collections::BTreeMap;
use std::fmt;

use cyclotomic::CycloField;
use schnizer::Module;
use serde::{Deserialize, Serialize};

use crate::ModError;

/// Exponents (w_1, ..., w_n) in [0, l) with t_i u = eps^{w_i} u.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The t-weight of the basis vector u(code).
pub fn weight_of<F: CycloField>(md: &Module<F>, code: u64) -> WeightVector {
    let l = md.shape().l() as i64;
    WeightVector((1..=md.spec().rank()).map(|i| md.t_exponent(i, code).rem_euclid(l) as u32).collect())
}

/// All basis codes grouped by weight, codes ascending within each block.
pub fn weight_blocks<F: CycloField>(md: &Module<F>, bound: u64) -> Result<BTreeMap<WeightVector, Vec<u64>>, ModError> {
    let dim = md.shape().dim();
    if dim > bound {
        return Err(ModError::BoundExceeded { dim, bound });
    }
    let mut blocks: BTreeMap<WeightVector, Vec<u64>> = BTreeMap::new();
    for code in 0..dim {
        blocks.entry(weight_of(md, code)).or_default().push(code);
    }
    Ok(blocks)
}
