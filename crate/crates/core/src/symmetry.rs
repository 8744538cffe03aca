//! Orbits of profiles under relabeling alternatives and reordering individuals.

use std::collections::BTreeMap;

use crate::alternative::ChoiceSet;
use crate::domain::index_in;
use crate::permutation::Permutation;
use crate::profile::Profile;
use crate::ranking::factorial;

/// Image of a choice set under a relabeling `θ`.
pub fn relabel_set(set: ChoiceSet, theta: &Permutation) -> ChoiceSet {
    set.iter()
        .map(|x| crate::alternative::Alternative::new(theta.apply(x.index())))
        .collect()
}

/// Which symmetry groups to close over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetries {
    pub alternatives: bool,
    pub individuals: bool,
}

impl Symmetries {
    pub const BOTH: Symmetries = Symmetries {
        alternatives: true,
        individuals: true,
    };
}

/// Every distinct image of `u`, keyed by canonical profile index, together
/// with one relabeling `θ` producing it.
pub fn orbit(u: &Profile, which: Symmetries) -> BTreeMap<u64, (Profile, Permutation)> {
    let m = u.alternatives();
    let n = u.individuals();
    let thetas = if which.alternatives {
        Permutation::all(m)
    } else {
        vec![Permutation::identity(m)]
    };
    let rhos = if which.individuals {
        Permutation::all(n)
    } else {
        vec![Permutation::identity(n)]
    };
    let base = factorial(m) as u64;
    let mut out = BTreeMap::new();
    for theta in &thetas {
        let relabeled = u.apply_alternative_permutation(theta).expect("sizes match");
        for rho in &rhos {
            let v = relabeled
                .apply_individual_permutation(rho)
                .expect("sizes match");
            out.entry(index_in(base, &v))
                .or_insert_with(|| (v, theta.clone()));
        }
    }
    out
}

/// Images of `(u, S)` across the orbit of `u`, or `None` when two group
/// elements send `u` to the same profile but `S` to different sets.
pub fn orbit_assignment(
    u: &Profile,
    set: ChoiceSet,
    which: Symmetries,
) -> Option<BTreeMap<u64, (Profile, ChoiceSet)>> {
    let m = u.alternatives();
    let n = u.individuals();
    let base = factorial(m) as u64;
    let thetas = if which.alternatives {
        Permutation::all(m)
    } else {
        vec![Permutation::identity(m)]
    };
    let rhos = if which.individuals {
        Permutation::all(n)
    } else {
        vec![Permutation::identity(n)]
    };
    let mut out: BTreeMap<u64, (Profile, ChoiceSet)> = BTreeMap::new();
    for theta in &thetas {
        let relabeled = u.apply_alternative_permutation(theta).expect("sizes match");
        let image_set = relabel_set(set, theta);
        for rho in &rhos {
            let v = relabeled
                .apply_individual_permutation(rho)
                .expect("sizes match");
            match out.entry(index_in(base, &v)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert((v, image_set));
                }
                std::collections::btree_map::Entry::Occupied(e) => {
                    if e.get().1 != image_set {
                        return None;
                    }
                }
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternative::Universe;

    #[test]
    fn unanimous_orbit_has_m_factorial_members() {
        let l = Universe::xyzwt(3).unwrap();
        let u = Profile::parse("xyz|xyz", &l).unwrap();
        assert_eq!(orbit(&u, Symmetries::BOTH).len(), 6);
        let only_n = Symmetries {
            alternatives: false,
            individuals: true,
        };
        assert_eq!(orbit(&u, only_n).len(), 1);
    }

    #[test]
    fn inconsistent_assignment_is_detected() {
        let l = Universe::xyzwt(3).unwrap();
        // swapping y and z while swapping the two individuals fixes u
        let u = Profile::parse("xyz|xzy", &l).unwrap();
        let y_only = l.parse_set(&["x", "y"]).unwrap();
        assert!(orbit_assignment(&u, y_only, Symmetries::BOTH).is_none());
        let sym = l.parse_set(&["x", "y", "z"]).unwrap();
        assert!(orbit_assignment(&u, sym, Symmetries::BOTH).is_some());
    }
}
