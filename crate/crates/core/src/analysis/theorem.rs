//! Checks a correspondence against the characterization theorems: if it
//! satisfies a theorem's axiom list, it must coincide with `G_P`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::axioms::{check_axiom, check_match, Axiom, AxiomReport, ReportRecord};
use crate::domain::DomainIndex;
use crate::error::{Error, Result};
use crate::rules::Correspondence;

use super::search::DeviationRecord;

/// Differing profiles listed in a theorem record.
pub const DIFFERENCE_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremVerdict {
    #[serde(rename = "consistent-equal")]
    ConsistentEqual,
    #[serde(rename = "consistent-counterexample")]
    ConsistentCounterexample,
    #[serde(rename = "THEOREM-CONTRADICTION")]
    TheoremContradiction,
}

impl TheoremVerdict {
    pub fn name(self) -> &'static str {
        match self {
            TheoremVerdict::ConsistentEqual => "consistent-equal",
            TheoremVerdict::ConsistentCounterexample => "consistent-counterexample",
            TheoremVerdict::TheoremContradiction => "THEOREM-CONTRADICTION",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub theorem: u8,
    pub verdict: TheoremVerdict,
    pub reports: Vec<AxiomReport>,
    /// Profiles where `G ≠ G_P`.
    pub differences: u64,
    /// First differing profiles by index with `G`'s value there.
    pub deviations: Vec<(crate::profile::Profile, crate::alternative::ChoiceSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRecord {
    pub theorem: u8,
    pub rule: String,
    pub m: usize,
    pub n: usize,
    pub verdict: TheoremVerdict,
    pub failing_axiom: Option<Axiom>,
    pub failing_axioms: Vec<Axiom>,
    pub reports: Vec<ReportRecord>,
    pub differences: u64,
    pub deviations: Vec<DeviationRecord>,
}

impl TheoremReport {
    pub fn failing_axioms(&self) -> Vec<Axiom> {
        self.reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.axiom)
            .collect()
    }

    pub fn failing_axiom(&self) -> Option<Axiom> {
        self.failing_axioms().first().copied()
    }

    pub fn record(&self, g: &Correspondence) -> TheoremRecord {
        let universe = g.universe();
        TheoremRecord {
            theorem: self.theorem,
            rule: g.name().to_string(),
            m: g.alternatives(),
            n: g.individuals(),
            verdict: self.verdict,
            failing_axiom: self.failing_axiom(),
            failing_axioms: self.failing_axioms(),
            reports: self.reports.iter().map(|r| r.record(g)).collect(),
            differences: self.differences,
            deviations: self
                .deviations
                .iter()
                .map(|(u, s)| DeviationRecord {
                    profiles: vec![g.format_profile(u)],
                    choice_sets: vec![universe.set_labels(*s)],
                })
                .collect(),
        }
    }
}

/// Axiom list of theorem `k`.
pub fn theorem_axioms(k: u8) -> Result<&'static [Axiom]> {
    use Axiom::*;
    Ok(match k {
        1 => &[Pareto, TopsIn],
        2 => &[Pareto, TopsIn, Balancedness],
        3 => &[Pareto, TopsIn, Balancedness, Monotonicity],
        4 => &[
            Pareto,
            TopsIn,
            Balancedness,
            WeakMonotonicity,
            StrongStability,
        ],
        _ => return Err(Error::Argument(format!("theorem {k} outside 1..=4"))),
    })
}

/// Whether theorem `k` speaks about `m` alternatives.
pub fn theorem_applies(k: u8, m: usize) -> bool {
    match k {
        1 => m == 2,
        2 => m == 3,
        3 => m == 4,
        4 => m >= 5,
        _ => false,
    }
}

/// Profiles where `g` differs from `G_P`, with the first `cap` of them.
pub fn differences_from_pareto(
    g: &Correspondence,
    d: &DomainIndex,
    cap: usize,
) -> Result<(
    u64,
    Vec<(crate::profile::Profile, crate::alternative::ChoiceSet)>,
)> {
    check_match(g, d)?;
    let differs = |k: u64| {
        let u = d.profile_at(k);
        let s = g.value(&u);
        (s != u.pareto_set()).then_some((u, s))
    };
    let count = (0..d.total())
        .into_par_iter()
        .filter(|&k| differs(k).is_some())
        .count() as u64;
    let first = (0..d.total()).filter_map(differs).take(cap).collect();
    Ok((count, first))
}

pub fn verify_theorem(k: u8, g: &Correspondence, d: &DomainIndex) -> Result<TheoremReport> {
    let axioms = theorem_axioms(k)?;
    if !theorem_applies(k, d.alternatives()) {
        let need = match k {
            1 => "m = 2",
            2 => "m = 3",
            3 => "m = 4",
            _ => "m >= 5",
        };
        return Err(Error::Mismatch(format!(
            "theorem {k} concerns {need}; domain has m = {}",
            d.alternatives()
        )));
    }
    check_match(g, d)?;
    let reports = axioms
        .iter()
        .map(|&a| check_axiom(a, g, d))
        .collect::<Result<Vec<_>>>()?;
    let (differences, deviations) = differences_from_pareto(g, d, DIFFERENCE_CAP)?;
    let verdict = if reports.iter().any(|r| !r.passed()) {
        TheoremVerdict::ConsistentCounterexample
    } else if differences == 0 {
        TheoremVerdict::ConsistentEqual
    } else {
        TheoremVerdict::TheoremContradiction
    };
    Ok(TheoremReport {
        theorem: k,
        verdict,
        reports,
        differences,
        deviations,
    })
}
