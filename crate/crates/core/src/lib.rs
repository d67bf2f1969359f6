//! Decide normality of nilpotent orbit closures in orthogonal and symplectic
//! Lie algebras from partition data.
//!
//! The combinatorial pipeline runs `partitions` → `degeneration` →
//! `reduction` → `classification` → `normality`. The `matrix_oracle` module
//! builds explicit nilpotent matrices over the rationals and recomputes orbit
//! dimensions by exact linear algebra, independently of the combinatorics.
//!
//! The oracle works in characteristic 0. Orbit dimensions and the
//! degeneration order do not depend on the characteristic as long as it is
//! not 2, so the quantities it checks are the ones the combinatorics uses.

pub mod cache;
pub mod classification;
pub mod cli;
pub mod degeneration;
pub mod error;
pub mod linalg;
pub mod matrix_oracle;
pub mod normality;
pub mod partitions;
pub mod reduction;

pub use classification::{classify_core, classify_minimal_degeneration, DegenType, Family};
pub use degeneration::{dominates, hasse, minimal_degenerations, DegenPair, PosetGraph};
pub use error::{Error, Result};
pub use normality::{decide, survey, NormalityVerdict, Verdict};
pub use partitions::{EpsDiagram, FormType, Limits, Partition};
pub use reduction::{irreducible_core, ReductionResult};
