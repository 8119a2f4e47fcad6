use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::GroupError;
use crate::exactalg::{cokernel, IntMatrix};

/// A finitely generated abelian group `Z^r ⊕ Z/d1 ⊕ … ⊕ Z/ds` in invariant
/// factor form: every `di ≥ 2` and `d1 | d2 | … | ds`.
///
/// The representation is canonical, so `==` decides isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGroup")]
pub struct FgAbGroup {
    #[serde(rename = "rank")]
    free_rank: usize,
    #[serde(with = "crate::serde_int::vec")]
    torsion: Vec<BigInt>,
}

#[derive(Deserialize)]
struct RawGroup {
    rank: usize,
    #[serde(with = "crate::serde_int::vec")]
    torsion: Vec<BigInt>,
}

impl TryFrom<RawGroup> for FgAbGroup {
    type Error = GroupError;

    fn try_from(raw: RawGroup) -> Result<Self, GroupError> {
        let chain_ok = raw.torsion.iter().all(|d| *d >= BigInt::from(2))
            && raw.torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        if !chain_ok {
            return Err(GroupError::NotCanonical);
        }
        Ok(FgAbGroup {
            free_rank: raw.rank,
            torsion: raw.torsion,
        })
    }
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/mZ`, read with the nonnegative convention: `m = 0` gives `Z` and
    /// `m = ±1` the trivial group.
    pub fn cyclic(m: impl Into<BigInt>) -> Self {
        let m = m.into().abs();
        if m.is_zero() {
            Self::free(1)
        } else if m.is_one() {
            Self::trivial()
        } else {
            FgAbGroup {
                free_rank: 0,
                torsion: vec![m],
            }
        }
    }

    /// Canonical form of `⊕ Z/mi` for arbitrary integers `mi` (zeros are
    /// free summands).
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Self {
        let parts: Vec<_> = orders.into_iter().map(Self::cyclic).collect();
        direct_sum(&parts)
    }

    /// `Z^rank ⊕ ⊕ Z/ti`, canonicalized.
    pub fn from_invariants(rank: usize, torsion: &[i64]) -> Self {
        let orders = torsion
            .iter()
            .map(|&t| BigInt::from(t))
            .chain(std::iter::repeat_n(BigInt::zero(), rank));
        Self::from_cyclic_orders(orders)
    }

    pub(crate) fn from_canonical_parts(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        debug_assert!(torsion.iter().all(|d| *d > BigInt::one()));
        debug_assert!(torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        FgAbGroup { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Number of cyclic summands in the canonical decomposition.
    pub fn generator_count(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    /// Orders of the canonical generators, torsion first, `0` for free ones.
    pub fn generator_orders(&self) -> Vec<BigInt> {
        self.torsion
            .iter()
            .cloned()
            .chain(std::iter::repeat_n(BigInt::zero(), self.free_rank))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_cyclic(&self) -> bool {
        self.generator_count() <= 1
    }

    /// Group order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" (+) "))
    }
}

/// A group with a distinguished element, given in the canonical coordinates
/// of the group: one entry per invariant factor (in `[0, d)`), then one per
/// free generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMarked")]
pub struct MarkedAbGroup {
    group: FgAbGroup,
    #[serde(with = "crate::serde_int::vec")]
    mark: Vec<BigInt>,
}

#[derive(Deserialize)]
struct RawMarked {
    group: FgAbGroup,
    #[serde(with = "crate::serde_int::vec")]
    mark: Vec<BigInt>,
}

impl TryFrom<RawMarked> for MarkedAbGroup {
    type Error = GroupError;

    fn try_from(raw: RawMarked) -> Result<Self, GroupError> {
        let reduced = MarkedAbGroup::new(raw.group, raw.mark.clone())?;
        if reduced.mark != raw.mark {
            return Err(GroupError::NotCanonical);
        }
        Ok(reduced)
    }
}

impl MarkedAbGroup {
    /// Torsion coordinates are reduced into `[0, d)`.
    pub fn new(group: FgAbGroup, mark: Vec<BigInt>) -> Result<Self, GroupError> {
        if mark.len() != group.generator_count() {
            return Err(GroupError::MarkLength {
                expected: group.generator_count(),
                found: mark.len(),
            });
        }
        let mark = mark
            .into_iter()
            .zip(group.generator_orders())
            .map(|(x, d)| if d.is_zero() { x } else { x.mod_floor(&d) })
            .collect();
        Ok(MarkedAbGroup { group, mark })
    }

    pub fn zero(group: FgAbGroup) -> Self {
        let mark = vec![BigInt::zero(); group.generator_count()];
        MarkedAbGroup { group, mark }
    }

    /// `(Z/mZ, x)` under the nonnegative modulus convention.
    pub fn cyclic(m: impl Into<BigInt>, x: impl Into<BigInt>) -> Self {
        let group = FgAbGroup::cyclic(m);
        let mark = if group.is_trivial() {
            Vec::new()
        } else {
            vec![x.into()]
        };
        Self::new(group, mark).expect("cyclic mark has one coordinate")
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn mark(&self) -> &[BigInt] {
        &self.mark
    }

    pub fn torsion_part(&self) -> &[BigInt] {
        &self.mark[..self.group.torsion.len()]
    }

    pub fn free_part(&self) -> &[BigInt] {
        &self.mark[self.group.torsion.len()..]
    }

    /// For `Z/d` and `Z`, rewrites the mark in the generator for which it
    /// reads `gcd(x, d)` resp. `|x|`. Other groups are returned unchanged.
    pub fn normalize_cyclic(self) -> Self {
        let g = &self.group;
        let mark = match (g.free_rank, g.torsion.len()) {
            (0, 1) => vec![self.mark[0].gcd(&g.torsion[0])],
            (1, 0) => vec![self.mark[0].abs()],
            _ => return self,
        };
        MarkedAbGroup::new(self.group, mark).expect("same shape")
    }

    /// Whether the mark generates the whole group.
    pub fn is_generator(&self) -> bool {
        let g = &self.group;
        match (g.free_rank, g.torsion.len()) {
            (0, 0) => true,
            (1, 0) => self.mark[0].abs().is_one(),
            (0, 1) => self.mark[0].gcd(&g.torsion[0]).is_one(),
            _ => false,
        }
    }
}

impl fmt::Display for MarkedAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.group, render_mark(&self.mark))
    }
}

/// Renders a mark as a bare integer for one coordinate, `0` for the empty
/// mark and `(a, b, …)` otherwise.
pub fn render_mark(mark: &[BigInt]) -> String {
    match mark {
        [] => "0".to_string(),
        [x] => x.to_string(),
        xs => {
            let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
            format!("({})", inner.join(", "))
        }
    }
}

fn concatenated_relations(parts: &[&FgAbGroup]) -> IntMatrix {
    let orders: Vec<BigInt> = parts.iter().flat_map(|g| g.generator_orders()).collect();
    IntMatrix::diagonal(&orders)
}

/// Canonical form of a direct sum.
pub fn direct_sum(parts: &[FgAbGroup]) -> FgAbGroup {
    let refs: Vec<&FgAbGroup> = parts.iter().collect();
    cokernel(&concatenated_relations(&refs)).0
}

/// Direct sum of marked groups; the result carries the sum of the marks,
/// transported into canonical coordinates.
pub fn direct_sum_marked(parts: &[MarkedAbGroup]) -> MarkedAbGroup {
    let refs: Vec<&FgAbGroup> = parts.iter().map(|m| &m.group).collect();
    let (group, map) = cokernel(&concatenated_relations(&refs));
    let joined: Vec<BigInt> = parts.iter().flat_map(|m| m.mark.iter().cloned()).collect();
    let mark = map.apply(&joined);
    MarkedAbGroup::new(group, mark).expect("class map matches the canonical generators")
}

pub fn groups_isomorphic(a: &FgAbGroup, b: &FgAbGroup) -> bool {
    a == b
}
