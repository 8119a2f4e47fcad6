//! Exact K-theory and group homology invariants of the Kirchberg algebras
//! `Q^λ` attached to positive algebraic integers `λ ≠ 1`.
//!
//! From the minimal polynomial `f` of `λ` the crate builds the companion
//! matrix `φ` (multiplication by `λ` on `Z[λ]`), the blocks `id - Λ^k φ` for
//! `k = 0..=d`, their kernels and cokernels via Smith normal form, and from
//! those the marked triple `(K_0, [1]_0, K_1)` together with the homology
//! groups used to tell Cartan pairs apart.

pub mod abgroups;
mod arith;
pub mod exactalg;
pub mod polyring;
pub mod serde_int;
pub mod classify;
pub mod invariants;
