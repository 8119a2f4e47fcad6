//! Integer polynomials: parsing and rendering, evaluation, companion
//! matrices, irreducibility over Q and Sturm-chain root certificates.

mod irreducible;
mod poly;
mod sturm;

pub use irreducible::{is_irreducible_q, MAX_IRREDUCIBILITY_DEGREE};
pub use poly::{companion_matrix, parse_poly, IntPoly};
pub use sturm::{admissible_root, admissible_roots, count_real_roots, RootCertificate, RootSide};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("the zero polynomial is not allowed")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must have positive degree")]
    ConstantPolynomial,
    #[error("degree {degree} exceeds the supported maximum of {max}")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("constant term too large for the exact factor search")]
    CoefficientTooLarge,
    #[error("interval endpoint {point} is a root")]
    EndpointIsRoot { point: String },
    #[error("interval is empty")]
    EmptyInterval,
}
