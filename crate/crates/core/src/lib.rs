//! Exact combinatorics engine for mesh patterns on permutations.
//!
//! The crate provides:
//!
//! - [`perm`]: permutations in one-line notation, the classical statistics
//!   (exc, inv, rec, arec, erec, earec, rar, succ), and the three symmetry
//!   maps inverse / reverse / complement;
//! - [`enumerate`]: lexicographic enumeration, ranking and unranking of
//!   S_n, and rank-partitioned parallel sweeps;
//! - [`mesh`]: mesh patterns `(tau, R)`, occurrence counting, pattern
//!   symmetry transforms, and the named-pattern catalog;
//! - [`involution`]: the antirecord involutions Phi and Psi built from the
//!   sub-maps phi1/phi2 and psi1/psi2, with step traces and gap-restricted
//!   counting;
//! - [`poly`], [`series`], [`cfrac`]: exact integer multivariate
//!   polynomials, truncated power series, and Stieltjes/Jacobi continued
//!   fractions, together with brute-force generating functions;
//! - [`equidist`]: joint distributions over S_n and equidistribution /
//!   bijection reports;
//! - [`verify`]: the named check suites run by tests and the CLI.
//!
//! Everything is exact integer arithmetic; every distribution claim is
//! decided by exhaustive enumeration at desk scale (default cap n <= 10).

pub mod cfrac;
pub mod enumerate;
pub mod equidist;
mod error;
pub mod involution;
pub mod mesh;
pub mod perm;
pub mod poly;
pub mod series;
pub mod verify;

pub use enumerate::{factorial, iter_all, rank, unrank, SweepOptions, DEFAULT_CAP};
pub use error::Error;
pub use mesh::{MeshPattern, Occurrence, PatternName, Symmetry};
pub use perm::{word_complement, Permutation, StatisticKind};
