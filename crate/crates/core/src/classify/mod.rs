//! Comparison of the algebras `Q^λ`: unital and stable isomorphism through
//! the marked K-triple, recognition and realization of Cuntz algebras, the
//! homological Cartan invariants, and a grid search for pairs the K-triple
//! identifies but the Cartan invariants separate.

mod search;

pub use search::{search_pairs, SearchPair, SearchResult, MAX_GRID};

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abgroups::{groups_isomorphic, marked_isomorphic, FgAbGroup};
use crate::invariants::{full_report, HomologyTable, InvariantError, InvariantReport, KTriple};
use crate::polyring::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl ClassifyError {
    pub fn code(&self) -> &'static str {
        match self {
            ClassifyError::Invariant(e) => e.code(),
            ClassifyError::InvalidParameter(_) => "invalid_parameter",
            ClassifyError::VerificationFailed(_) => "verification_failed",
            ClassifyError::Precondition(_) => "precondition",
        }
    }

    pub fn is_refusal(&self) -> bool {
        match self {
            ClassifyError::Invariant(e) => e.is_refusal(),
            ClassifyError::InvalidParameter(_) | ClassifyError::Precondition(_) => true,
            ClassifyError::VerificationFailed(_) => false,
        }
    }
}


/// Whether `Q^λ` is a Cuntz algebra `O_n`, up to unital or only stable
/// isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CuntzVerdict {
    UnitalIso {
        #[serde(with = "crate::serde_int")]
        n: BigInt,
    },
    StableOnly {
        #[serde(with = "crate::serde_int")]
        n: BigInt,
    },
    NotCuntz,
}

impl fmt::Display for CuntzVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuntzVerdict::UnitalIso { n } => write!(f, "O_{n} (unital)"),
            CuntzVerdict::StableOnly { n } => write!(f, "O_{n} (stable only)"),
            CuntzVerdict::NotCuntz => write!(f, "not a Cuntz algebra"),
        }
    }
}

/// `O_n` has K-triple `(Z/(n-1), 1, 0)`; trivial `K_0` is read as `O_2`.
pub fn cuntz_verdict(t: &KTriple) -> CuntzVerdict {
    let k0 = t.k0().group();
    if !t.k1().is_trivial() || !k0.is_finite() || !(k0.is_cyclic() || k0.is_trivial()) {
        return CuntzVerdict::NotCuntz;
    }
    let n = k0.order().expect("finite") + BigInt::one();
    if t.k0().is_generator() {
        CuntzVerdict::UnitalIso { n }
    } else {
        CuntzVerdict::StableOnly { n }
    }
}

pub fn cuntz_class(f: &IntPoly) -> Result<CuntzVerdict, ClassifyError> {
    Ok(full_report(f)?.cuntz)
}

/// The outcome of comparing two algebras `Q^λ`, `Q^μ`.
///
/// `cartan_invariants_equal` compares `Γ/(1-λ)Γ` and every `H_i(G)`,
/// `i >= 2`. These are necessary for an isomorphism of Cartan pairs, so
/// `true` only means the pairs are not distinguished.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonVerdict {
    pub same_unital_k: bool,
    pub same_stable_k: bool,
    pub cartan_invariants_equal: bool,
    pub notes: Vec<String>,
}

fn differing_cartan_degrees(
    a: (&HomologyTable, &HomologyTable),
    b: (&HomologyTable, &HomologyTable),
) -> Vec<String> {
    let mut out = Vec::new();
    let (a_coeff, a_g) = a;
    let (b_coeff, b_g) = b;
    if a_coeff.get(0) != b_coeff.get(0) {
        out.push(format!(
            "H_0 with coefficients differs: {} vs {}",
            a_coeff.get(0),
            b_coeff.get(0)
        ));
    }
    let top = a_g.top_degree().max(b_g.top_degree()).unwrap_or(0);
    for i in 2..=top {
        if a_g.get(i) != b_g.get(i) {
            out.push(format!("H_{i}(G) differs: {} vs {}", a_g.get(i), b_g.get(i)));
        }
    }
    out
}

pub fn cartan_invariants_equal(a: &InvariantReport, b: &InvariantReport) -> bool {
    differing_cartan_degrees(
        (&a.homology_coeff, &a.homology_g),
        (&b.homology_coeff, &b.homology_g),
    )
    .is_empty()
}

pub fn compare_reports(
    a: &InvariantReport,
    b: &InvariantReport,
    bound: usize,
) -> Result<ComparisonVerdict, ClassifyError> {
    let (ta, tb) = (&a.ktriple, &b.ktriple);
    let same_k1 = groups_isomorphic(ta.k1(), tb.k1());
    let same_stable_k = groups_isomorphic(ta.k0().group(), tb.k0().group()) && same_k1;
    let same_unital_k =
        same_stable_k && marked_isomorphic(ta.k0(), tb.k0(), bound).map_err(InvariantError::from)?;

    let mut notes = Vec::new();
    if !groups_isomorphic(ta.k0().group(), tb.k0().group()) {
        notes.push(format!("K0 differs: {} vs {}", ta.k0().group(), tb.k0().group()));
    }
    if !same_k1 {
        notes.push(format!("K1 differs: {} vs {}", ta.k1(), tb.k1()));
    }
    if same_stable_k && !same_unital_k {
        notes.push("K0 agrees but no automorphism matches the unit classes".to_string());
    }
    let cartan = differing_cartan_degrees(
        (&a.homology_coeff, &a.homology_g),
        (&b.homology_coeff, &b.homology_g),
    );
    let cartan_invariants_equal = cartan.is_empty();
    if cartan_invariants_equal {
        notes.push("Cartan invariants not distinguished".to_string());
    } else {
        notes.extend(cartan);
    }
    Ok(ComparisonVerdict {
        same_unital_k,
        same_stable_k,
        cartan_invariants_equal,
        notes,
    })
}

pub fn compare(f: &IntPoly, g: &IntPoly, bound: usize) -> Result<ComparisonVerdict, ClassifyError> {
    compare_reports(&full_report(f)?, &full_report(g)?, bound)
}

/// A quadratic `f` with `Q^λ ≅ O_n` unitally, together with its report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuntzRealization {
    #[serde(with = "crate::serde_int")]
    pub n: BigInt,
    pub poly: IntPoly,
    pub report: InvariantReport,
}

/// `T^2 - (n + 2) T + 2`, checked to realize `O_n`.
pub fn find_cuntz_realization(n: &BigInt) -> Result<CuntzRealization, ClassifyError> {
    if *n < BigInt::from(2) {
        return Err(ClassifyError::InvalidParameter(format!("n = {n}, need n >= 2")));
    }
    let f = IntPoly::monic(&[BigInt::from(2), -(n + BigInt::from(2))]);
    let report = full_report(&f).map_err(|e| match e {
        e if e.is_refusal() => ClassifyError::VerificationFailed(format!("{f}: {e}")),
        e => ClassifyError::Invariant(e),
    })?;
    let want = CuntzVerdict::UnitalIso { n: n.clone() };
    if report.cuntz != want {
        return Err(ClassifyError::VerificationFailed(format!(
            "{f} gives {}, expected {want}",
            report.cuntz
        )));
    }
    Ok(CuntzRealization {
        n: n.clone(),
        poly: f,
        report,
    })
}

/// For `Q^λ ≅ O_n`: the coefficient homology is `Z/(n-1)` in degree 0 and
/// vanishes above.
pub fn onness_homology_check(f: &IntPoly) -> Result<bool, ClassifyError> {
    let report = full_report(f)?;
    let CuntzVerdict::UnitalIso { n } = &report.cuntz else {
        return Err(ClassifyError::Precondition(format!(
            "{f} gives {}, not a unital Cuntz algebra",
            report.cuntz
        )));
    };
    let expected = HomologyTable::from_groups([(0, FgAbGroup::cyclic(n - BigInt::one()))]);
    Ok(report.homology_coeff == expected)
}
