use std::fmt;

use serde::{Deserialize, Serialize};

use super::blocks::KerCoker;
use super::{report::validate, InvariantError};
use crate::abgroups::{direct_sum, FgAbGroup};
use crate::polyring::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyEntry {
    pub degree: usize,
    pub group: FgAbGroup,
}

/// Homology groups by degree. Only nontrivial groups are stored, in
/// increasing degree, so equal tables mean equal homology.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyTable {
    entries: Vec<HomologyEntry>,
}

impl HomologyTable {
    pub fn from_groups<I: IntoIterator<Item = (usize, FgAbGroup)>>(groups: I) -> Self {
        let mut entries: Vec<HomologyEntry> = groups
            .into_iter()
            .filter(|(_, g)| !g.is_trivial())
            .map(|(degree, group)| HomologyEntry { degree, group })
            .collect();
        entries.sort_by_key(|e| e.degree);
        entries.dedup_by_key(|e| e.degree);
        HomologyTable { entries }
    }

    pub fn entries(&self) -> &[HomologyEntry] {
        &self.entries
    }

    pub fn get(&self, degree: usize) -> FgAbGroup {
        self.entries
            .iter()
            .find(|e| e.degree == degree)
            .map_or_else(FgAbGroup::trivial, |e| e.group.clone())
    }

    /// Degrees with nontrivial homology.
    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.degree).collect()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.entries.last().map(|e| e.degree)
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0 in every degree");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("H_{} = {}", e.degree, e.group))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

fn coker(blocks: &[KerCoker], k: usize) -> FgAbGroup {
    blocks.get(k).map_or_else(FgAbGroup::trivial, |b| b.cokernel.clone())
}

fn ker(blocks: &[KerCoker], k: usize) -> FgAbGroup {
    blocks.get(k).map_or_else(FgAbGroup::trivial, |b| b.kernel.clone())
}

/// `H_0 = Z` and `H_{k+1} = Coker(id - Λ^{k+1}) ⊕ Ker(id - Λ^k)` for `0 <= k <= d`.
pub(crate) fn g_from_blocks(blocks: &[KerCoker]) -> HomologyTable {
    let d = blocks.len() - 1;
    let higher = (0..=d).map(|k| (k + 1, direct_sum(&[coker(blocks, k + 1), ker(blocks, k)])));
    HomologyTable::from_groups(std::iter::once((0, FgAbGroup::free(1))).chain(higher))
}

/// `H_0 = Coker(id - Λ^1)` and `H_k = Coker(id - Λ^{k+1}) ⊕ Ker(id - Λ^k)` for `1 <= k <= d`.
pub(crate) fn coeff_from_blocks(blocks: &[KerCoker]) -> HomologyTable {
    let d = blocks.len() - 1;
    let higher = (1..=d).map(|k| (k, direct_sum(&[coker(blocks, k + 1), ker(blocks, k)])));
    HomologyTable::from_groups(std::iter::once((0, coker(blocks, 1))).chain(higher))
}

/// Homology of the group `G_λ = Z[λ, λ^{-1}] ⋊ λ^Z`.
pub fn homology_g(f: &IntPoly) -> Result<HomologyTable, InvariantError> {
    validate(f)?;
    Ok(g_from_blocks(&super::all_blocks(f)?))
}

/// Homology of `G_λ` with coefficients in the compactly supported integer
/// functions on the positive cone.
pub fn homology_coeff(f: &IntPoly) -> Result<HomologyTable, InvariantError> {
    validate(f)?;
    Ok(coeff_from_blocks(&super::all_blocks(f)?))
}
