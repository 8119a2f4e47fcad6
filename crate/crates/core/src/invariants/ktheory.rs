use std::fmt;

use serde::{Deserialize, Serialize};

use super::blocks::KerCoker;
use super::homology::{coeff_from_blocks, g_from_blocks};
use super::{report::validate, InvariantError};
use crate::abgroups::{direct_sum, direct_sum_marked, render_mark, FgAbGroup, MarkedAbGroup};
use crate::polyring::IntPoly;

/// `(K_0, [1]_0, K_1)`, with the unit class stored as the mark of `K_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTriple")]
pub struct KTriple {
    k0: MarkedAbGroup,
    k1: FgAbGroup,
}

#[derive(Deserialize)]
struct RawTriple {
    k0: MarkedAbGroup,
    k1: FgAbGroup,
}

impl TryFrom<RawTriple> for KTriple {
    type Error = InvariantError;

    fn try_from(raw: RawTriple) -> Result<Self, InvariantError> {
        KTriple::new(raw.k0, raw.k1)
    }
}

impl KTriple {
    /// Enforces `rank K_0 = rank K_1`.
    pub fn new(k0: MarkedAbGroup, k1: FgAbGroup) -> Result<Self, InvariantError> {
        if k0.group().free_rank() != k1.free_rank() {
            return Err(InvariantError::Internal(format!(
                "rank K0 = {} but rank K1 = {}",
                k0.group().free_rank(),
                k1.free_rank()
            )));
        }
        Ok(KTriple { k0, k1 })
    }

    pub fn k0(&self) -> &MarkedAbGroup {
        &self.k0
    }

    pub fn k1(&self) -> &FgAbGroup {
        &self.k1
    }
}

impl fmt::Display for KTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K0 = {}, unit = {}, K1 = {}",
            self.k0.group(),
            render_mark(self.k0.mark()),
            self.k1
        )
    }
}

/// `K_0 = ⊕_{j≥0} Coker(id - Λ^{2j+1}) ⊕ ⊕_{j≥1} Ker(id - Λ^{2j})` with the
/// unit `1 ∈ Coker(id - Λ^1)`, and
/// `K_1 = ⊕_{j≥1} Coker(id - Λ^{2j}) ⊕ ⊕_{j≥0} Ker(id - Λ^{2j+1})`.
pub(crate) fn ktriple_from_blocks(blocks: &[KerCoker]) -> Result<KTriple, InvariantError> {
    let d = blocks.len() - 1;
    let mut k0_parts = Vec::new();
    for k in (1..=d).step_by(2) {
        let b = &blocks[k];
        let part = match &b.unit_class {
            Some(unit) => MarkedAbGroup::new(b.cokernel.clone(), unit.clone())
                .map_err(|e| InvariantError::Internal(e.to_string()))?,
            None => MarkedAbGroup::zero(b.cokernel.clone()),
        };
        k0_parts.push(part);
    }
    for k in (2..=d).step_by(2) {
        k0_parts.push(MarkedAbGroup::zero(blocks[k].kernel.clone()));
    }
    let mut k1_parts = Vec::new();
    k1_parts.extend((2..=d).step_by(2).map(|k| blocks[k].cokernel.clone()));
    k1_parts.extend((1..=d).step_by(2).map(|k| blocks[k].kernel.clone()));
    KTriple::new(
        direct_sum_marked(&k0_parts).normalize_cyclic(),
        direct_sum(&k1_parts),
    )
}

pub fn k_theory_q(f: &IntPoly) -> Result<KTriple, InvariantError> {
    validate(f)?;
    ktriple_from_blocks(&super::all_blocks(f)?)
}

/// The K-groups assembled from homology instead:
/// `K_0 ≅ H_0(G, C) ⊕ ⊕_{j≥1} H_{2j+1}(G)` and `K_1 ≅ ⊕_{j≥1} H_{2j}(G)`.
pub fn k_theory_via_homology(f: &IntPoly) -> Result<(FgAbGroup, FgAbGroup), InvariantError> {
    validate(f)?;
    let blocks = super::all_blocks(f)?;
    Ok(groups_via_homology(&blocks))
}

pub(crate) fn groups_via_homology(blocks: &[KerCoker]) -> (FgAbGroup, FgAbGroup) {
    let d = blocks.len() - 1;
    let g = g_from_blocks(blocks);
    let coeff = coeff_from_blocks(blocks);
    let mut k0 = vec![coeff.get(0)];
    k0.extend((3..=d + 1).step_by(2).map(|i| g.get(i)));
    let k1: Vec<FgAbGroup> = (2..=d + 1).step_by(2).map(|i| g.get(i)).collect();
    (direct_sum(&k0), direct_sum(&k1))
}
