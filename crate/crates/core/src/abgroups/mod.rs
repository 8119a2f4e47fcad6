//! Finitely generated abelian groups in invariant factor form, marked
//! elements, and the decision of isomorphism of marked groups.

mod group;
mod orbit;

pub use group::{
    direct_sum, direct_sum_marked, groups_isomorphic, render_mark, FgAbGroup, MarkedAbGroup,
};
pub use orbit::{
    mark_orbit, marked_isomorphic, orbit_key, MarkOrbit, OrbitKey, DEFAULT_ORBIT_BOUND,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("orbit enumeration exceeded the bound of {bound} states")]
    UndecidedAtBound { bound: usize },
    #[error("mark has {found} coordinates, the group has {expected} generators")]
    MarkLength { expected: usize, found: usize },
    #[error("group data is not in canonical invariant factor form")]
    NotCanonical,
}
