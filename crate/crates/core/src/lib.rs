//! Exhaustive verification of social choice correspondences on
//! strict-preference profiles.
//!
//! A [`Correspondence`] maps every profile of a finite [`DomainIndex`] to a
//! non-empty set of alternatives. The [`axioms`] module sweeps the whole
//! domain for each condition and returns a canonical first witness; the
//! [`analysis`] module builds the theorem harness, height and gap
//! diagnostics, and the deviation search on top of those sweeps.

pub mod alternative;
pub mod analysis;
pub mod axioms;
pub mod domain;
mod error;
pub mod permutation;
pub mod profile;
pub mod ranking;
pub mod rules;
pub mod symmetry;
pub mod transposition;

pub use alternative::{Alternative, ChoiceSet, Universe, MAX_ALTERNATIVES};
pub use axioms::{check_axiom, Axiom, AxiomReport, Verdict, Violation};
pub use domain::{enumerate_orderings, DomainIndex, SizeLimits};
pub use error::{Error, Result};
pub use permutation::Permutation;
pub use profile::Profile;
pub use ranking::Ranking;
pub use rules::{Correspondence, Rule, TableFile};
pub use symmetry::{orbit, orbit_assignment, Symmetries};
pub use transposition::TranspositionSite;
