//! The invariants of `Q^λ` computed from the minimal polynomial of `λ`.
//!
//! Everything reduces to kernels and cokernels of the blocks
//! `id - Λ^k φ`, `0 <= k <= d`, where `φ` is multiplication by `λ` on
//! `Z[λ] ≅ Z^d`. Exterior powers above `d` vanish, so every direct sum below
//! is finite.

mod blocks;
mod checks;
mod homology;
mod ktheory;
mod report;
pub mod table;

pub use blocks::{exterior_block, ker_coker, KerCoker};
pub use checks::{closed_form_check, literal_final_clause_holds, ClosedFormCheck};
pub use homology::{homology_coeff, homology_g, HomologyEntry, HomologyTable};
pub use ktheory::{k_theory_q, k_theory_via_homology, KTriple};
pub use report::{full_report, validate, BlockSummary, ConsistencyChecks, InvariantReport};

pub(crate) use blocks::all_blocks;

use thiserror::Error;

use crate::abgroups::GroupError;
use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error("polynomial has no positive real root other than 1")]
    NoAdmissibleRoot,
    #[error("degree {degree} exceeds the supported maximum of {max}")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("coefficients too large for the exact irreducibility test")]
    CoefficientTooLarge,
    #[error("exterior power {k} out of range for degree {degree}")]
    KOutOfRange { k: usize, degree: usize },
    #[error("closed form check '{check}' failed: computed {computed}, expected {expected}")]
    ClosedFormFailed {
        check: String,
        computed: String,
        expected: String,
    },
    #[error("orbit enumeration exceeded the bound of {bound} states")]
    UndecidedAtBound { bound: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

impl InvariantError {
    /// Stable machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            InvariantError::Parse(_) => "parse",
            InvariantError::NotMonic => "not_monic",
            InvariantError::NotIrreducible => "not_irreducible",
            InvariantError::NoAdmissibleRoot => "no_admissible_root",
            InvariantError::UnsupportedDegree { .. } => "unsupported_degree",
            InvariantError::CoefficientTooLarge => "coefficient_too_large",
            InvariantError::KOutOfRange { .. } => "k_out_of_range",
            InvariantError::ClosedFormFailed { .. } => "closed_form_failed",
            InvariantError::UndecidedAtBound { .. } => "undecided_at_bound",
            InvariantError::Internal(_) => "internal",
        }
    }

    /// Whether the input was refused, as opposed to the computation failing.
    pub fn is_refusal(&self) -> bool {
        !matches!(
            self,
            InvariantError::ClosedFormFailed { .. }
                | InvariantError::UndecidedAtBound { .. }
                | InvariantError::Internal(_)
        )
    }
}

impl From<PolyError> for InvariantError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Syntax { .. } | PolyError::ZeroPolynomial => {
                InvariantError::Parse(e.to_string())
            }
            PolyError::NotMonic => InvariantError::NotMonic,
            PolyError::ConstantPolynomial => InvariantError::NotIrreducible,
            PolyError::UnsupportedDegree { degree, max } => {
                InvariantError::UnsupportedDegree { degree, max }
            }
            PolyError::CoefficientTooLarge => InvariantError::CoefficientTooLarge,
            PolyError::EndpointIsRoot { .. } | PolyError::EmptyInterval => {
                InvariantError::Internal(e.to_string())
            }
        }
    }
}

impl From<GroupError> for InvariantError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::UndecidedAtBound { bound } => InvariantError::UndecidedAtBound { bound },
            other => InvariantError::Internal(other.to_string()),
        }
    }
}
