//! Exact, reproducible checks of the finite-group, representation-theoretic and
//! combinatorial facts behind Jordan constants of volume-preserving plane Cremona
//! transformations.
//!
//! * [`group`]: finite groups closed from generators, with conjugacy classes, derived
//!   subgroup and `{±1}`-characters.
//! * [`jordan`]: normal-subgroup lattices and the Jordan index.
//! * [`lemma52`]: the groups `(Z/n)² ⋊ D₆` whose Jordan index is 12.
//! * [`dualcomplex`]: boundary cycles of log Calabi–Yau surfaces, blow-up rules and
//!   the symmetry table per del Pezzo degree.
//! * [`repcheck`]: invariant lines of subgroups of `S₅` on the anticanonical space of
//!   the quintic del Pezzo surface.
//! * [`conicfibers`]: abelian actions on singular conic-bundle fibers and swap-free
//!   subgroups.
//! * [`report`] / [`suite`]: verification rows and the suites the CLI runs.

pub mod conicfibers;
pub mod dualcomplex;
pub mod error;
pub mod group;
pub mod groupfile;
pub mod jordan;
pub mod lemma52;
pub mod linalg;
pub mod repcheck;
pub mod report;
pub mod suite;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational matrices.
pub type RationalMatrix = linalg::Matrix<BigRational>;
/// Integer matrices, reduced fraction-free.
pub type IntMatrix = linalg::Matrix<BigInt>;
/// Machine-word rationals, for small hand-checked examples.
pub type SmallRationalMatrix = linalg::Matrix<num_rational::Ratio<i64>>;
