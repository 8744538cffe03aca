//! Search for correspondences that agree with `G_P` except on one profile
//! or one symmetry orbit and still satisfy a given axiom list.
//!
//! Candidates only shrink `G_P(u)` while keeping every top, so they pass
//! Pareto and tops-in at the deviated profiles by construction. Acceptance
//! re-checks only constraints within one move of a deviated profile, since
//! `G_P` satisfies every axiom among unmodified profiles.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alternative::{ChoiceSet, Universe};
use crate::axioms::{Axiom, Probe};
use crate::domain::DomainIndex;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::profile::Profile;
use crate::rules::Correspondence;
use crate::symmetry::{orbit_assignment, Symmetries};

/// Base profiles handed to the worker pool at a time.
const CHUNK: u64 = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// One deviated profile.
    Single,
    /// One profile and every image under relabeling alternatives and
    /// reordering individuals, with the set relabeled alongside.
    Orbit,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Single => "single",
            SearchMode::Orbit => "orbit",
        })
    }
}

impl FromStr for SearchMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(SearchMode::Single),
            "orbit" => Ok(SearchMode::Orbit),
            _ => Err(Error::Config(format!(
                "unknown search mode '{s}' (single or orbit)"
            ))),
        }
    }
}

/// A set of profiles, in index order, each with its replacement value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub mode: SearchMode,
    pub assignments: Vec<(Profile, ChoiceSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviationRecord {
    pub profiles: Vec<String>,
    pub choice_sets: Vec<Vec<String>>,
}

impl Deviation {
    pub fn profiles(&self) -> impl Iterator<Item = &Profile> {
        self.assignments.iter().map(|(u, _)| u)
    }

    /// The value assigned at `u`, if `u` is deviated.
    pub fn value_at(&self, u: &Profile) -> Option<ChoiceSet> {
        self.assignments
            .iter()
            .find(|(v, _)| v == u)
            .map(|(_, s)| *s)
    }

    /// `G_P` with this deviation applied.
    pub fn correspondence(&self, universe: &Universe, n: usize) -> Result<Correspondence> {
        Correspondence::with_overrides(
            Correspondence::pareto(universe.clone(), n)?,
            self.assignments.iter().cloned(),
        )
    }

    pub fn record(&self, universe: &Universe) -> DeviationRecord {
        DeviationRecord {
            profiles: self
                .assignments
                .iter()
                .map(|(u, _)| u.format(universe))
                .collect(),
            choice_sets: self
                .assignments
                .iter()
                .map(|(_, s)| universe.set_labels(*s))
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub deviations: Vec<Deviation>,
    /// Candidate deviations tested.
    pub candidates: u64,
    /// True when the whole candidate space was examined.
    pub exhausted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub m: usize,
    pub n: usize,
    pub mode: SearchMode,
    pub axioms: Vec<Axiom>,
    pub budget: u64,
    pub candidates: u64,
    pub exhausted: bool,
    pub deviations: Vec<DeviationRecord>,
}

impl SearchResult {
    pub fn record(
        &self,
        d: &DomainIndex,
        universe: &Universe,
        axioms: &[Axiom],
        mode: SearchMode,
        budget: u64,
    ) -> SearchRecord {
        SearchRecord {
            m: d.alternatives(),
            n: d.individuals(),
            mode,
            axioms: axioms.to_vec(),
            budget,
            candidates: self.candidates,
            exhausted: self.exhausted,
            deviations: self.deviations.iter().map(|x| x.record(universe)).collect(),
        }
    }
}

/// Every `S` with `T(u) ⊆ S ⊊ G_P(u)`, ascending by mask.
pub fn candidate_sets(u: &Profile) -> impl Iterator<Item = ChoiceSet> {
    let tops = u.tops();
    let pareto = u.pareto_set();
    pareto
        .difference(tops)
        .subsets()
        .map(move |extra| tops.union(extra))
        .filter(move |&s| s != pareto)
}

/// True when no image of `u` under the groups has an index below `k`.
fn is_orbit_minimum(
    d: &DomainIndex,
    k: u64,
    u: &Profile,
    thetas: &[Permutation],
    rhos: &[Permutation],
) -> bool {
    for theta in thetas {
        let relabeled = u.apply_alternative_permutation(theta).expect("sizes match");
        for rho in rhos {
            let v = relabeled
                .apply_individual_permutation(rho)
                .expect("sizes match");
            if d.index_of(&v) < k {
                return false;
            }
        }
    }
    true
}

/// Accepted candidates at one base profile, in candidate order.
fn candidates_at(
    d: &DomainIndex,
    universe: &Universe,
    axioms: &[Axiom],
    mode: SearchMode,
    k: u64,
    groups: &(Vec<Permutation>, Vec<Permutation>),
) -> (u64, Vec<Deviation>) {
    let n = d.individuals();
    let u = d.profile_at(k);
    let mut examined = 0;
    let mut found = Vec::new();
    if candidate_sets(&u).next().is_none() {
        return (0, found);
    }
    if mode == SearchMode::Orbit {
        // An orbit minimum always has the identity as its first ranking.
        let tail = d.total() / d.orderings().len() as u64;
        if k >= tail || !is_orbit_minimum(d, k, &u, &groups.0, &groups.1) {
            return (0, found);
        }
    }
    let gp = Correspondence::pareto(universe.clone(), n).expect("validated sizes");
    for s in candidate_sets(&u) {
        examined += 1;
        let assignments: Vec<(Profile, ChoiceSet)> = match mode {
            SearchMode::Single => vec![(u.clone(), s)],
            SearchMode::Orbit => match orbit_assignment(&u, s, Symmetries::BOTH) {
                Some(map) => map.into_values().collect(),
                None => continue,
            },
        };
        let g = Correspondence::with_overrides(gp.clone(), assignments.iter().cloned())
            .expect("assignments match the domain");
        let probe = Probe::new(&g);
        let accepted = axioms.iter().all(|&a| {
            assignments
                .iter()
                .all(|(p, _)| probe.involving(a, p).is_none())
        });
        if accepted {
            found.push(Deviation { mode, assignments });
        }
    }
    (examined, found)
}

/// Deviations of `G_P` over `d` that satisfy every axiom in `axioms`.
///
/// Stops once `budget` deviations are found. Base profiles are processed in
/// index order in fixed chunks, so the output is the same for any number of
/// worker threads.
pub fn perturbation_search(
    d: &DomainIndex,
    universe: &Universe,
    axioms: &[Axiom],
    mode: SearchMode,
    budget: u64,
) -> Result<SearchResult> {
    if budget == 0 {
        return Err(Error::Argument("search budget must be at least 1".into()));
    }
    if universe.size() != d.alternatives() {
        return Err(Error::Mismatch(format!(
            "{} labels for {} alternatives",
            universe.size(),
            d.alternatives()
        )));
    }
    let groups = match mode {
        SearchMode::Single => (Vec::new(), Vec::new()),
        SearchMode::Orbit => (
            Permutation::all(d.alternatives()),
            Permutation::all(d.individuals()),
        ),
    };
    let mut deviations = Vec::new();
    let mut candidates = 0;
    let mut start = 0;
    while start < d.total() {
        let end = (start + CHUNK).min(d.total());
        let batch: Vec<(u64, Vec<Deviation>)> = (start..end)
            .into_par_iter()
            .map(|k| candidates_at(d, universe, axioms, mode, k, &groups))
            .collect();
        for (examined, found) in batch {
            candidates += examined;
            deviations.extend(found);
        }
        start = end;
        if deviations.len() as u64 >= budget {
            break;
        }
    }
    let truncated = deviations.len() as u64 > budget;
    deviations.truncate(budget as usize);
    Ok(SearchResult {
        deviations,
        candidates,
        exhausted: start >= d.total() && !truncated,
    })
}
