use serde::{Deserialize, Serialize};

use crate::alternative::{Alternative, ChoiceSet};
use crate::permutation::Permutation;
use crate::profile::Profile;
use crate::rules::Correspondence;
use crate::symmetry::relabel_set;
use crate::transposition::TranspositionSite;

use super::Axiom;

/// One concrete counterexample to an axiom. Individuals are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `dominator` Pareto dominates `dominated`, yet `dominated ∈ G(u)`.
    Pareto {
        profile: Profile,
        dominator: Alternative,
        dominated: Alternative,
    },
    /// `top = u(i)[1]` is not chosen.
    TopsIn {
        profile: Profile,
        individual: usize,
        top: Alternative,
    },
    /// `G(v) ≠ G(u)` for `v` obtained by the transposition pair `site`.
    Balancedness {
        profile: Profile,
        site: TranspositionSite,
        image: Profile,
    },
    /// Raising chosen `raised` one rank for `individual` drops it or admits
    /// something new.
    Monotonicity {
        profile: Profile,
        individual: usize,
        raised: Alternative,
        image: Profile,
    },
    /// Raising chosen `raised` one rank for `individual` drops it.
    WeakMonotonicity {
        profile: Profile,
        individual: usize,
        raised: Alternative,
        image: Profile,
    },
    /// Lowering chosen `lowered` just below `neighbour` for `individual`
    /// produces none of the three permitted outcomes.
    StrongStability {
        profile: Profile,
        individual: usize,
        lowered: Alternative,
        neighbour: Alternative,
        image: Profile,
    },
    /// Exchanging individuals `first` and `first + 1` changes the choice.
    Anonymity {
        profile: Profile,
        first: usize,
        image: Profile,
    },
    /// Relabeling `first` ↔ `first + 1` does not relabel the choice.
    Neutrality {
        profile: Profile,
        first: Alternative,
        image: Profile,
    },
}

/// Serializable form of a witness, with profiles in text form and
/// individuals numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub profiles: Vec<String>,
    pub individuals: Vec<usize>,
    pub alternatives: Vec<String>,
    pub observed: Vec<String>,
    pub expected: String,
}

impl Violation {
    pub fn axiom(&self) -> Axiom {
        match self {
            Violation::Pareto { .. } => Axiom::Pareto,
            Violation::TopsIn { .. } => Axiom::TopsIn,
            Violation::Balancedness { .. } => Axiom::Balancedness,
            Violation::Monotonicity { .. } => Axiom::Monotonicity,
            Violation::WeakMonotonicity { .. } => Axiom::WeakMonotonicity,
            Violation::StrongStability { .. } => Axiom::StrongStability,
            Violation::Anonymity { .. } => Axiom::Anonymity,
            Violation::Neutrality { .. } => Axiom::Neutrality,
        }
    }

    /// The source profile of the witness.
    pub fn profile(&self) -> &Profile {
        match self {
            Violation::Pareto { profile, .. }
            | Violation::TopsIn { profile, .. }
            | Violation::Balancedness { profile, .. }
            | Violation::Monotonicity { profile, .. }
            | Violation::WeakMonotonicity { profile, .. }
            | Violation::StrongStability { profile, .. }
            | Violation::Anonymity { profile, .. }
            | Violation::Neutrality { profile, .. } => profile,
        }
    }

    /// Every profile the witness mentions, source first.
    pub fn profiles(&self) -> Vec<&Profile> {
        match self {
            Violation::Pareto { profile, .. } | Violation::TopsIn { profile, .. } => vec![profile],
            Violation::Balancedness { profile, image, .. }
            | Violation::Monotonicity { profile, image, .. }
            | Violation::WeakMonotonicity { profile, image, .. }
            | Violation::StrongStability { profile, image, .. }
            | Violation::Anonymity { profile, image, .. }
            | Violation::Neutrality { profile, image, .. } => vec![profile, image],
        }
    }

    /// Re-derives the witness from scratch against `g`: the move must be
    /// the stated one and the stated condition must fail.
    pub fn replay(&self, g: &Correspondence) -> bool {
        let Ok(gu) = g.evaluate(self.profile()) else {
            return false;
        };
        match self {
            Violation::Pareto {
                profile,
                dominator,
                dominated,
            } => {
                profile.pareto_dominates(*dominator, *dominated) == Ok(true)
                    && gu.contains(*dominated)
            }
            Violation::TopsIn {
                profile,
                individual,
                top,
            } => {
                *individual < profile.individuals()
                    && profile.ranking(*individual).top() == *top
                    && !gu.contains(*top)
            }
            Violation::Balancedness {
                profile,
                site,
                image,
            } => profile.apply_transposition(site).as_ref() == Ok(image) && g.value(image) != gu,
            Violation::Monotonicity {
                profile,
                individual,
                raised,
                image,
            } => {
                gu.contains(*raised)
                    && profile.raise_one(*individual, *raised).as_ref() == Ok(image)
                    && {
                        let gv = g.value(image);
                        !gv.contains(*raised) || !gv.is_subset_of(gu)
                    }
            }
            Violation::WeakMonotonicity {
                profile,
                individual,
                raised,
                image,
            } => {
                gu.contains(*raised)
                    && profile.raise_one(*individual, *raised).as_ref() == Ok(image)
                    && !g.value(image).contains(*raised)
            }
            Violation::StrongStability {
                profile,
                individual,
                lowered,
                neighbour,
                image,
            } => {
                gu.contains(*lowered)
                    && *individual < profile.individuals()
                    && profile.ranking(*individual).below(*lowered) == Some(*neighbour)
                    && profile.lower_one(*individual, *lowered).as_ref() == Ok(image)
                    && !stable_outcome(gu, g.value(image), *lowered, *neighbour)
            }
            Violation::Anonymity {
                profile,
                first,
                image,
            } => {
                let rho = Permutation::swap(profile.individuals(), *first, first + 1);
                rho.is_ok_and(|rho| {
                    profile.apply_individual_permutation(&rho).as_ref() == Ok(image)
                }) && g.value(image) != gu
            }
            Violation::Neutrality {
                profile,
                first,
                image,
            } => {
                let theta =
                    Permutation::swap(profile.alternatives(), first.index(), first.index() + 1);
                theta.is_ok_and(|theta| {
                    profile.apply_alternative_permutation(&theta).as_ref() == Ok(image)
                        && g.value(image) != relabel_set(gu, &theta)
                })
            }
        }
    }

    pub fn record(&self, g: &Correspondence) -> WitnessRecord {
        let universe = g.universe();
        let label = |x: &Alternative| universe.label(*x).to_string();
        let set = |s: ChoiceSet| universe.format_set(s);
        let gu = g.value(self.profile());
        let observed: Vec<String> = self.profiles().iter().map(|p| set(g.value(p))).collect();
        let (individuals, alternatives, expected): (Vec<usize>, Vec<String>, String) = match self {
            Violation::Pareto {
                dominator,
                dominated,
                ..
            } => (
                vec![],
                vec![label(dominator), label(dominated)],
                format!(
                    "{} not in G(u): it is Pareto dominated by {}",
                    label(dominated),
                    label(dominator)
                ),
            ),
            Violation::TopsIn {
                individual, top, ..
            } => (
                vec![individual + 1],
                vec![label(top)],
                format!(
                    "{} in G(u): it is individual {}'s top",
                    label(top),
                    individual + 1
                ),
            ),
            Violation::Balancedness { site, .. } => (
                vec![site.i + 1, site.j + 1],
                vec![label(&site.x), label(&site.y)],
                format!("G(v) = {}", set(gu)),
            ),
            Violation::Monotonicity {
                individual, raised, ..
            } => (
                vec![individual + 1],
                vec![label(raised)],
                format!("{} in G(v) and G(v) within {}", label(raised), set(gu)),
            ),
            Violation::WeakMonotonicity {
                individual, raised, ..
            } => (
                vec![individual + 1],
                vec![label(raised)],
                format!("{} in G(v)", label(raised)),
            ),
            Violation::StrongStability {
                individual,
                lowered,
                neighbour,
                ..
            } => {
                let mut allowed = vec![set(gu)];
                let without = gu.without(*lowered);
                if !without.is_empty() {
                    allowed.push(set(without));
                }
                if !gu.contains(*neighbour) {
                    allowed.push(set(gu.with(*neighbour)));
                }
                (
                    vec![individual + 1],
                    vec![label(lowered), label(neighbour)],
                    format!("G(v) one of {}", allowed.join(" ")),
                )
            }
            Violation::Anonymity { first, .. } => (
                vec![first + 1, first + 2],
                vec![],
                format!("G(v) = {}", set(gu)),
            ),
            Violation::Neutrality { first, .. } => {
                let second = Alternative::new(first.index() + 1);
                let theta = Permutation::swap(universe.size(), first.index(), second.index())
                    .expect("adjacent alternatives");
                (
                    vec![],
                    vec![label(first), label(&second)],
                    format!("G(v) = {}", set(relabel_set(gu, &theta))),
                )
            }
        };
        WitnessRecord {
            profiles: self
                .profiles()
                .iter()
                .map(|p| g.format_profile(p))
                .collect(),
            individuals,
            alternatives,
            observed,
            expected,
        }
    }
}

/// Outcomes permitted by strong stability after lowering chosen `x`
/// below its neighbour `y`: unchanged, lose `x`, or gain a new `y`.
#[inline]
pub(crate) fn stable_outcome(
    before: ChoiceSet,
    after: ChoiceSet,
    x: Alternative,
    y: Alternative,
) -> bool {
    after == before
        || (after == before.without(x) && !after.is_empty())
        || (!before.contains(y) && after == before.with(y))
}
