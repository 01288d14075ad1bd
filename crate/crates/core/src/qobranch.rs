//! A quasi-ordinary branch given by its characteristic exponents, and the
//! lattice tower `Z^d = M_0 ⊂ M_1 ⊂ ... ⊂ M_g = M` they generate.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::conegeom::leq_sigma;
use crate::error::{Error, Result};
use crate::intlat::{Lattice, RatVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchSpec {
    pub label: String,
    pub dim: usize,
    /// `λ_1 ≤ ... ≤ λ_g`; empty for a smooth branch.
    pub char_exponents: Vec<RatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchLattices {
    /// `M_0, ..., M_g`.
    pub tower: Vec<Lattice>,
    /// `[M_j : M_{j-1}]` for `j = 1..g`.
    pub step_indices: Vec<u64>,
    #[serde(rename = "M")]
    pub m: Lattice,
    #[serde(rename = "N")]
    pub n: Lattice,
    /// `[M : M_0]`.
    pub degree_n: u64,
}

impl BranchSpec {
    pub fn new(label: impl Into<String>, dim: usize, char_exponents: Vec<RatVec>) -> Self {
        BranchSpec {
            label: label.into(),
            dim,
            char_exponents,
        }
    }
}

fn to_u64(x: BigInt) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::Overflow)
}

/// Validates the exponents and builds the tower, `M`, `N = M^∨` and `[M : Z^d]`.
pub fn build_tower(spec: &BranchSpec) -> Result<BranchLattices> {
    let base = Lattice::standard(spec.dim)?;
    for (j, lambda) in spec.char_exponents.iter().enumerate() {
        if lambda.dim() != spec.dim {
            return Err(Error::DimensionMismatch {
                expected: spec.dim,
                found: lambda.dim(),
            });
        }
        if !lambda.is_nonnegative() || lambda.is_zero() {
            return Err(Error::NegativeExponent { position: j + 1 });
        }
    }
    for (j, pair) in spec.char_exponents.windows(2).enumerate() {
        if !leq_sigma(&pair[0], &pair[1])? {
            return Err(Error::ChainOrder {
                first: j + 1,
                second: j + 2,
            });
        }
    }

    let mut tower = vec![base.clone()];
    let mut step_indices = Vec::with_capacity(spec.char_exponents.len());
    for (j, lambda) in spec.char_exponents.iter().enumerate() {
        let prev = tower.last().expect("tower starts with M_0");
        if prev.contains(lambda)? {
            return Err(Error::NotCharacteristic { position: j + 1 });
        }
        let mut gens = prev.basis();
        gens.push(lambda.clone());
        let next = Lattice::from_generators(&gens)?;
        step_indices.push(to_u64(prev.index_in(&next)?)?);
        tower.push(next);
    }

    let m = tower.last().expect("nonempty tower").clone();
    let n = m.dual();
    let degree_n = to_u64(base.index_in(&m)?)?;
    Ok(BranchLattices {
        tower,
        step_indices,
        m,
        n,
        degree_n,
    })
}
