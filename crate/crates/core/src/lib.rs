//! Combinatorics of finite Weyl groups acting on finite-level torus characters,
//! dimension polynomials for induced-module bookkeeping, incidence algebras of
//! Boolean lattices, and representations of the associated bound quivers.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`roots`] — Cartan matrices, root data, and a fully enumerated Weyl group
//!   table (lengths, descent sets, parabolic data, coset representatives).
//! * [`chars`] — characters of a split torus at a fixed finite level, with the
//!   Weyl action, orbits and stabilizers.
//! * [`sets`] — the derived subsets of `W` (Y_K, Z_J, descent-window filters),
//!   summand labels, and the descent-complementing involution.
//! * [`dims`] — dimension polynomials in `v` and composition-factor vectors.
//! * [`incidence`] — the incidence algebra of the Boolean lattice on `n`
//!   points, its radical, projectives, heredity chains and reciprocity.
//! * [`quiver`] — the Hasse quiver bound by parallelogram relations, its Tits
//!   form, and box-restricted weak-positivity searches.
//! * [`reps`] — matrix representations of the bound quiver: Hom spaces,
//!   endomorphism radicals, indecomposability, Krull-Schmidt decomposition,
//!   classification for small `n`, and the three-case analysis for `n = 3`.
//! * [`verify`] — cross-module verification checks used by the CLI and the
//!   acceptance test suite.

pub mod chars;
pub mod dims;
pub mod error;
pub mod incidence;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod reps;
pub mod roots;
pub mod sets;
pub mod subset;
pub mod verify;

pub use error::Error;
pub use subset::SubsetMask;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
