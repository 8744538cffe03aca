//! Replays of the individual moves the characterization arguments rely on,
//! run against concrete correspondences.

use crate::alternative::Alternative;
use crate::domain::DomainIndex;
use crate::error::Result;
use crate::profile::Profile;
use crate::rules::Correspondence;

use super::height::{gap, height_with_cap};

/// For Pareto optimal `w` ranked second by `i` (0-based), an individual
/// who ranks `w` above `i`'s top. Such an individual always exists, since
/// otherwise the top would dominate `w`.
pub fn transposition_partner(u: &Profile, i: usize, w: Alternative) -> Option<usize> {
    let top = u.ranking(i).top();
    if top == w {
        return None;
    }
    (0..u.individuals()).find(|&j| u.ranking(j).prefers(w, top))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    /// `G(v) = G(u)`.
    Unchanged,
    /// `G(v) = G(u) \ {x}`.
    LostLowered,
    /// `G(v) = G(u) ∪ {a}` with `a` previously unchosen.
    GainedNeighbour,
    /// None of the three.
    Violation,
}

/// One strong-stability move at a minimal-height profile: chosen `x` is
/// the nearest chosen alternative above unchosen Pareto optimal `w` in
/// `u(i)`, and is lowered just below its neighbour `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapStep {
    pub profile: Profile,
    pub individual: usize,
    pub w: Alternative,
    pub x: Alternative,
    pub a: Alternative,
    pub gap: usize,
    pub image: Profile,
    pub outcome: StepOutcome,
    /// Gap of `w` for the same individual after the move, when defined.
    pub new_gap: Option<usize>,
    /// `a` is Pareto dominated at `u`.
    pub a_dominated: bool,
    /// `x` is Pareto dominated after the move.
    pub x_dominated_after: bool,
}

impl GapStep {
    /// The outcome is one of the three permitted ones, and outcomes that
    /// keep `x` shrink the gap by exactly one.
    pub fn consistent(&self) -> bool {
        match self.outcome {
            StepOutcome::Violation => false,
            StepOutcome::Unchanged | StepOutcome::GainedNeighbour => {
                self.new_gap == Some(self.gap - 1)
            }
            StepOutcome::LostLowered => true,
        }
    }
}

fn classify(
    g: &Correspondence,
    u: &Profile,
    v: &Profile,
    x: Alternative,
    a: Alternative,
) -> StepOutcome {
    let before = g.value(u);
    let after = g.value(v);
    if after == before {
        StepOutcome::Unchanged
    } else if after == before.without(x) && !after.is_empty() {
        StepOutcome::LostLowered
    } else if !before.contains(a) && after == before.with(a) {
        StepOutcome::GainedNeighbour
    } else {
        StepOutcome::Violation
    }
}

/// Every positive-gap move at the first `cap` minimal-height profiles.
pub fn gap_steps(g: &Correspondence, d: &DomainIndex, cap: usize) -> Result<Vec<GapStep>> {
    let result = height_with_cap(g, d, cap)?;
    let Some(h) = result.height else {
        return Ok(Vec::new());
    };
    let mut steps = Vec::new();
    for u in &result.minimal {
        let gu = g.value(u);
        let missing = u.pareto_set().difference(gu);
        for i in 0..u.individuals() {
            let r = u.ranking(i);
            for w in missing.iter().filter(|&w| r.rank_of(w) == h) {
                let Ok(width) = gap(g, u, i, w) else {
                    continue;
                };
                if width == 0 {
                    continue;
                }
                let x = r.at(r.position_of(w) - width - 1);
                let a = r.below(x).expect("x sits above w");
                let image = u.lower_one(i, x)?;
                let outcome = classify(g, u, &image, x, a);
                let new_gap = match outcome {
                    StepOutcome::Unchanged | StepOutcome::GainedNeighbour => {
                        gap(g, &image, i, w).ok()
                    }
                    _ => None,
                };
                steps.push(GapStep {
                    profile: u.clone(),
                    individual: i,
                    w,
                    x,
                    a,
                    gap: width,
                    outcome,
                    new_gap,
                    a_dominated: !u.pareto_set().contains(a),
                    x_dominated_after: !image.pareto_set().contains(x),
                    image,
                });
            }
        }
    }
    Ok(steps)
}
