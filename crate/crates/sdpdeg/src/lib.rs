//! Exact computation of the algebraic degree of semidefinite programming.
//!
//! For generic data, the optimal solution of a semidefinite program with an
//! n × n matrix variable and m linear constraints has entries that are
//! algebraic numbers. When the optimal matrix has rank r, the minimal
//! polynomials of those entries share one degree δ(m, n, r) that depends
//! only on the parameter triple — an intersection number on the
//! Grassmannian G(r, n). This crate computes it exactly, two independent
//! ways:
//!
//! * [`localization`] — the production path: a fixed-point sum over the
//!   C(n, r) coordinate subspaces, evaluated in arbitrary-precision rational
//!   arithmetic with a deterministic parallel reduction;
//! * [`schubert`] — the oracle path: Pieri-rule Schubert calculus in the
//!   cohomology ring of G(r, n), structurally unrelated to the first, kept
//!   around to cross-examine it.
//!
//! [`verify`] drives the two against each other along with two internal
//! consistency laws (invariance under the choice of specialization, and the
//! duality δ(m,n,r) = δ(C(n+1,2)−m, n, n−r)). The `sdpdeg` binary exposes
//! all of it on the command line; the `examples/` directory shows each major
//! capability as a small program.
//!
//! ```
//! use sdpdeg::{delta, ProblemTriple, Specialization};
//!
//! let triple = ProblemTriple::new(3, 3, 1)?;
//! let value = delta(&triple, &Specialization::sequential(3))?;
//! assert_eq!(value, 4.into());
//! # Ok::<(), sdpdeg::Error>(())
//! ```
//!
//! No floating point is used anywhere: every intermediate value is an exact
//! integer or rational, so equal inputs give byte-equal outputs regardless
//! of thread count or platform.

pub mod cli;
pub mod epoly;
pub mod error;
mod fault;
pub mod localization;
pub mod report;
pub mod schubert;
pub mod subsets;
pub mod symfunc;
pub mod verify;

pub use error::{Error, InternalError, ParamError};
pub use localization::{
    delta, delta_certified, delta_raw_sum, m_window, rank_rows, window_triples, DegreeResult,
    ProblemTriple, Specialization, SpecializationStrategy,
};
pub use schubert::delta_via_schubert;
pub use verify::{cross_check, verify_window, VerifyOptions, VerifyReport};

/// Arbitrary-precision integer used throughout (re-exported for callers).
pub use num_bigint::BigInt;
/// Arbitrary-precision rational in lowest terms — the only scalar the
/// fixed-point sum is accumulated in.
pub use num_rational::BigRational as ExactRational;
