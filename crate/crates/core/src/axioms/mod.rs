//! Exhaustive axiom checkers over the full profile domain.
//!
//! Every checker sweeps profiles in ascending canonical index and reports
//! the first violation in that order, so the witness is the same for any
//! number of worker threads.

mod local;
mod violation;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domain::DomainIndex;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::rules::Correspondence;

pub(crate) use local::Probe;
pub use violation::{Violation, WitnessRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Pareto,
    TopsIn,
    Balancedness,
    Monotonicity,
    WeakMonotonicity,
    StrongStability,
    Anonymity,
    Neutrality,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Pareto,
        Axiom::TopsIn,
        Axiom::Balancedness,
        Axiom::Monotonicity,
        Axiom::WeakMonotonicity,
        Axiom::StrongStability,
        Axiom::Anonymity,
        Axiom::Neutrality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Pareto => "pareto",
            Axiom::TopsIn => "tops-in",
            Axiom::Balancedness => "balancedness",
            Axiom::Monotonicity => "monotonicity",
            Axiom::WeakMonotonicity => "weak-monotonicity",
            Axiom::StrongStability => "strong-stability",
            Axiom::Anonymity => "anonymity",
            Axiom::Neutrality => "neutrality",
        }
    }

    /// Comma-separated names, or `all`.
    pub fn parse_list(text: &str) -> Result<Vec<Axiom>> {
        if text.trim() == "all" {
            return Ok(Axiom::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let a: Axiom = part.parse()?;
            if !out.contains(&a) {
                out.push(a);
            }
        }
        if out.is_empty() {
            return Err(Error::Config("empty axiom list".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown axiom '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub witness: Option<Violation>,
    /// Profiles up to and including the witness, or the whole domain on a pass.
    pub profiles_scanned: u64,
}

/// JSON shape of an [`AxiomReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub axiom: Axiom,
    pub verdict: Verdict,
    pub witness: Option<WitnessRecord>,
    pub profiles_scanned: u64,
}

impl AxiomReport {
    pub fn verdict(&self) -> Verdict {
        if self.witness.is_some() {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn record(&self, g: &Correspondence) -> ReportRecord {
        ReportRecord {
            axiom: self.axiom,
            verdict: self.verdict(),
            witness: self.witness.as_ref().map(|w| w.record(g)),
            profiles_scanned: self.profiles_scanned,
        }
    }
}

/// Errors unless `g` is defined over exactly `d`'s sizes.
pub(crate) fn check_match(g: &Correspondence, d: &DomainIndex) -> Result<()> {
    if g.alternatives() != d.alternatives() || g.individuals() != d.individuals() {
        return Err(Error::Mismatch(format!(
            "'{}' is defined over (m = {}, n = {}); domain is (m = {}, n = {})",
            g.name(),
            g.alternatives(),
            g.individuals(),
            d.alternatives(),
            d.individuals()
        )));
    }
    Ok(())
}

/// First profile (by canonical index) where `probe` reports something.
pub(crate) fn first_in_domain<T: Send>(
    d: &DomainIndex,
    probe: impl Fn(u64, &Profile) -> Option<T> + Sync,
) -> Option<(u64, T)> {
    (0..d.total()).into_par_iter().find_map_first(|k| {
        let u = d.profile_at(k);
        probe(k, &u).map(|t| (k, t))
    })
}

pub fn check_axiom(axiom: Axiom, g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_match(g, d)?;
    let probe = Probe::new(g);
    let found = first_in_domain(d, |_, u| probe.at(axiom, u));
    Ok(match found {
        Some((k, v)) => AxiomReport {
            axiom,
            witness: Some(v),
            profiles_scanned: k + 1,
        },
        None => AxiomReport {
            axiom,
            witness: None,
            profiles_scanned: d.total(),
        },
    })
}

pub fn check_pareto_condition(g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_axiom(Axiom::Pareto, g, d)
}

pub fn check_tops_in(g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_axiom(Axiom::TopsIn, g, d)
}

pub fn check_balancedness(g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_axiom(Axiom::Balancedness, g, d)
}

/// One-rank raises only; an arbitrary raise is a chain of them.
pub fn check_monotonicity(g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_axiom(Axiom::Monotonicity, g, d)
}

pub fn check_weak_monotonicity(g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_axiom(Axiom::WeakMonotonicity, g, d)
}

pub fn check_strong_stability(g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_axiom(Axiom::StrongStability, g, d)
}

/// Adjacent transpositions generate every permutation of the individuals.
pub fn check_anonymity(g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_axiom(Axiom::Anonymity, g, d)
}

/// Adjacent transpositions generate every relabeling of the alternatives.
pub fn check_neutrality(g: &Correspondence, d: &DomainIndex) -> Result<AxiomReport> {
    check_axiom(Axiom::Neutrality, g, d)
}

/// One row per rule, one report per requested axiom, in the given orders.
#[derive(Clone, Debug)]
pub struct AxiomMatrix {
    pub axioms: Vec<Axiom>,
    pub rows: Vec<(Correspondence, Vec<AxiomReport>)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub m: usize,
    pub n: usize,
    pub axioms: Vec<Axiom>,
    pub rows: Vec<MatrixRowRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixRowRecord {
    pub rule: String,
    pub reports: Vec<ReportRecord>,
}

impl AxiomMatrix {
    pub fn all_pass(&self) -> bool {
        self.rows
            .iter()
            .all(|(_, r)| r.iter().all(AxiomReport::passed))
    }

    pub fn report(&self, rule: &str, axiom: Axiom) -> Option<&AxiomReport> {
        let (_, reports) = self.rows.iter().find(|(g, _)| g.name() == rule)?;
        reports.iter().find(|r| r.axiom == axiom)
    }

    pub fn record(&self, d: &DomainIndex) -> MatrixRecord {
        MatrixRecord {
            m: d.alternatives(),
            n: d.individuals(),
            axioms: self.axioms.clone(),
            rows: self
                .rows
                .iter()
                .map(|(g, reports)| MatrixRowRecord {
                    rule: g.name().to_string(),
                    reports: reports.iter().map(|r| r.record(g)).collect(),
                })
                .collect(),
        }
    }
}

pub fn axiom_matrix(
    rules: &[Correspondence],
    axioms: &[Axiom],
    d: &DomainIndex,
) -> Result<AxiomMatrix> {
    let mut rows = Vec::with_capacity(rules.len());
    for g in rules {
        let reports = axioms
            .iter()
            .map(|&a| check_axiom(a, g, d))
            .collect::<Result<Vec<_>>>()?;
        rows.push((g.clone(), reports));
    }
    Ok(AxiomMatrix {
        axioms: axioms.to_vec(),
        rows,
    })
}

/// Runs `f` on a dedicated pool of `workers` threads (`0` = rayon default).
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axiom_names_round_trip() {
        for a in Axiom::ALL {
            assert_eq!(a.name().parse::<Axiom>().unwrap(), a);
            assert_eq!(
                serde_json::to_string(&a).unwrap(),
                format!("\"{}\"", a.name())
            );
        }
        assert_eq!(Axiom::parse_list("all").unwrap().len(), 8);
        assert_eq!(
            Axiom::parse_list("pareto, tops-in,pareto").unwrap(),
            vec![Axiom::Pareto, Axiom::TopsIn]
        );
        assert!(Axiom::parse_list("pareto,iia").is_err());
        assert!(Axiom::parse_list(" ").is_err());
    }

    #[test]
    fn mismatched_domain_is_an_error() {
        let g = Correspondence::from_name("pareto", 3, 2).unwrap();
        let d = DomainIndex::new(3, 3).unwrap();
        assert!(check_tops_in(&g, &d).is_err());
    }
}
