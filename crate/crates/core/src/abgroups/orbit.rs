//! Orbits of marked elements under the automorphism group.
//!
//! Write `G = Z^r ⊕ T` with `T` the torsion subgroup. Since `Hom(T, Z^r) = 0`,
//! every automorphism has the block form `(x, t) ↦ (A x, ψ(x) + β(t))` with
//! `A ∈ GL_r(Z)`, `ψ ∈ Hom(Z^r, T)` and `β ∈ Aut(T)`. The orbit of `(x, t)` is
//! therefore determined by `c = content(x)` together with the orbit of
//! `t + cT` in `T/cT` under the maps induced by `Aut(T)`.
//!
//! The torsion orbit comes from a closed form when `T` is cyclic and from a
//! breadth-first search over generators of `Aut(T)` otherwise: unit
//! multiplications of single factors and the elementary transvections
//! `x_i += (d_i / gcd(d_i, d_j)) x_j`.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{GroupError, MarkedAbGroup};
use crate::arith;

/// Default limit on the number of orbit states a search may visit.
pub const DEFAULT_ORBIT_BOUND: usize = 1_000_000;

/// Hashable orbit invariant of a marked element: the content of its free part
/// and the lexicographically least element of its torsion orbit in `T/cT`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitKey {
    #[serde(with = "crate::serde_int")]
    pub content: BigInt,
    #[serde(with = "crate::serde_int::vec")]
    pub torsion_rep: Vec<BigInt>,
}

/// Full torsion orbit of a mark, as computed by the breadth-first search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkOrbit {
    pub content: BigInt,
    /// `gcd(c, d_i)` per torsion factor (`d_i` itself when `c = 0`).
    pub quotient_moduli: Vec<BigInt>,
    /// Orbit members in `T/cT`, sorted.
    pub members: Vec<Vec<BigInt>>,
}

fn content(xs: &[BigInt]) -> BigInt {
    xs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

fn quotient_moduli(torsion: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    torsion.iter().map(|d| d.gcd(c)).collect()
}

/// The orbit of the mark's torsion coordinates in `T/cT`, by exhaustive
/// search. Fails once more than `bound` states would be visited.
pub fn mark_orbit(m: &MarkedAbGroup, bound: usize) -> Result<MarkOrbit, GroupError> {
    let torsion = m.group().torsion();
    let c = content(m.free_part());
    let moduli = quotient_moduli(torsion, &c);
    let start: Vec<BigInt> = m
        .torsion_part()
        .iter()
        .zip(&moduli)
        .map(|(t, q)| t.mod_floor(q))
        .collect();

    let undecided = GroupError::UndecidedAtBound { bound };
    let to_word = |x: &BigInt| x.to_u64().filter(|&v| v < (1u64 << 62));
    let q: Vec<u64> = moduli
        .iter()
        .map(to_word)
        .collect::<Option<_>>()
        .ok_or_else(|| undecided.clone())?;
    let d: Vec<BigInt> = torsion.to_vec();
    let active: Vec<usize> = (0..q.len()).filter(|&i| q[i] > 1).collect();

    enum Move {
        Scale { i: usize, unit: u64 },
        Shear { i: usize, j: usize, factor: u64 },
    }
    let mut moves = Vec::new();
    let budget = bound as u64;
    for &i in &active {
        let units = arith::unit_group_generators(q[i], budget).ok_or_else(|| undecided.clone())?;
        moves.extend(units.into_iter().map(|unit| Move::Scale { i, unit }));
    }
    for &i in &active {
        for &j in &active {
            if i == j {
                continue;
            }
            let f = (&d[i] / d[i].gcd(&d[j])).mod_floor(&BigInt::from(q[i]));
            let factor = f.to_u64().expect("reduced below a word-sized modulus");
            if factor != 0 {
                moves.push(Move::Shear { i, j, factor });
            }
        }
    }

    let start: Vec<u64> = start.iter().map(|x| x.to_u64().expect("reduced")).collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        for mv in &moves {
            let mut next = state.clone();
            match *mv {
                Move::Scale { i, unit } => next[i] = arith::mul_mod(next[i], unit, q[i]),
                Move::Shear { i, j, factor } => {
                    let add = arith::mul_mod(factor, next[j] % q[i], q[i]);
                    next[i] = (next[i] + add) % q[i];
                }
            }
            if !seen.contains(&next) {
                if seen.len() >= bound {
                    return Err(undecided);
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }

    let mut members: Vec<Vec<BigInt>> = seen
        .into_iter()
        .map(|s| s.into_iter().map(BigInt::from).collect())
        .collect();
    members.sort();
    Ok(MarkOrbit {
        content: c,
        quotient_moduli: moduli,
        members,
    })
}

/// Canonical orbit invariant of the mark.
pub fn orbit_key(m: &MarkedAbGroup, bound: usize) -> Result<OrbitKey, GroupError> {
    let torsion = m.group().torsion();
    let c = content(m.free_part());
    if torsion.len() <= 1 {
        // cyclic T/cT = Z/q: units act transitively on elements with equal gcd(t, q)
        let torsion_rep = match (torsion.first(), m.torsion_part().first()) {
            (Some(d), Some(t)) => {
                let q = d.gcd(&c);
                vec![t.gcd(&q).mod_floor(&q)]
            }
            _ => Vec::new(),
        };
        return Ok(OrbitKey {
            content: c,
            torsion_rep,
        });
    }
    let orbit = mark_orbit(m, bound)?;
    let torsion_rep = orbit.members.into_iter().next().expect("orbit contains the mark");
    Ok(OrbitKey {
        content: orbit.content,
        torsion_rep,
    })
}

/// Whether some automorphism of the common group carries one mark to the
/// other. Groups that differ are never marked-isomorphic.
pub fn marked_isomorphic(
    a: &MarkedAbGroup,
    b: &MarkedAbGroup,
    bound: usize,
) -> Result<bool, GroupError> {
    if a.group() != b.group() {
        return Ok(false);
    }
    if a.mark() == b.mark() {
        return Ok(true);
    }
    Ok(orbit_key(a, bound)? == orbit_key(b, bound)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroups::FgAbGroup;

    fn marked(rank: usize, torsion: &[i64], mark: &[i64]) -> MarkedAbGroup {
        let group = FgAbGroup::from_invariants(rank, torsion);
        MarkedAbGroup::new(group, mark.iter().map(|&x| BigInt::from(x)).collect()).unwrap()
    }

    fn iso(a: &MarkedAbGroup, b: &MarkedAbGroup) -> bool {
        marked_isomorphic(a, b, DEFAULT_ORBIT_BOUND).unwrap()
    }

    #[test]
    fn cyclic_examples() {
        assert!(iso(&MarkedAbGroup::cyclic(6, 1), &MarkedAbGroup::cyclic(6, 5)));
        assert!(!iso(&MarkedAbGroup::cyclic(6, 2), &MarkedAbGroup::cyclic(6, 3)));
        for n in -12..=0i64 {
            let m = 4 * n + 6;
            assert!(!iso(&MarkedAbGroup::cyclic(m, 2), &MarkedAbGroup::cyclic(m, 1)));
        }
        assert!(!iso(&MarkedAbGroup::cyclic(6, 1), &MarkedAbGroup::cyclic(5, 1)));
    }

    #[test]
    fn free_part_content() {
        // (Z, 2) vs (Z, -2) vs (Z, 4)
        assert!(iso(&marked(1, &[], &[2]), &marked(1, &[], &[-2])));
        assert!(!iso(&marked(1, &[], &[2]), &marked(1, &[], &[4])));
        // Z/4 ⊕ Z: (1, 2) ~ (3, 2), and (2, 2) ~ (0, 2) since 2T = {0, 2}
        assert!(iso(&marked(1, &[4], &[1, 2]), &marked(1, &[4], &[3, 2])));
        assert!(iso(&marked(1, &[4], &[2, 2]), &marked(1, &[4], &[0, 2])));
        assert!(!iso(&marked(1, &[4], &[1, 2]), &marked(1, &[4], &[0, 2])));
        // primitive free part absorbs all torsion
        assert!(iso(&marked(1, &[4], &[1, 1]), &marked(1, &[4], &[0, -1])));
        assert!(iso(&marked(2, &[2, 4], &[1, 3, 2, 3]), &marked(2, &[2, 4], &[0, 0, 0, 1])));
    }

    #[test]
    fn noncyclic_torsion() {
        // Z/2 ⊕ Z/4: the order-2 elements (1,0) and (0,2) lie in different orbits
        // ((0,2) = 2·(0,1) has height one), while (1,2) ~ (1,0).
        let a = marked(0, &[2, 4], &[1, 0]);
        let b = marked(0, &[2, 4], &[0, 2]);
        let c = marked(0, &[2, 4], &[1, 2]);
        assert!(!iso(&a, &b));
        assert!(iso(&a, &c));
        // all nonzero elements of (Z/3)^2 form one orbit
        let orbit = mark_orbit(&marked(0, &[3, 3], &[1, 2]), 100).unwrap();
        assert_eq!(orbit.members.len(), 8);
    }

    #[test]
    fn bound_is_enforced() {
        let m = marked(0, &[1024, 1024], &[1, 0]);
        assert_eq!(
            mark_orbit(&m, 10),
            Err(GroupError::UndecidedAtBound { bound: 10 })
        );
        assert_eq!(
            marked_isomorphic(&m, &marked(0, &[1024, 1024], &[3, 0]), 10),
            Err(GroupError::UndecidedAtBound { bound: 10 })
        );
    }
}
