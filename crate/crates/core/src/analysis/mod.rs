//! Diagnostics built on the axiom checkers: height and gap, the theorem
//! harness, deviation search and example reproduction.

mod height;
mod reproduce;
mod search;
mod steps;
mod theorem;

pub use height::{gap, height, height_with_cap, profile_height, HeightResult, DEFAULT_WITNESS_CAP};
pub use reproduce::{reproduce_example, Claim, ExampleReport};
pub use search::{
    candidate_sets, perturbation_search, Deviation, DeviationRecord, SearchMode, SearchRecord,
    SearchResult,
};
pub use steps::{gap_steps, transposition_partner, GapStep, StepOutcome};
pub use theorem::{
    differences_from_pareto, theorem_applies, theorem_axioms, verify_theorem, TheoremRecord,
    TheoremReport, TheoremVerdict,
};
