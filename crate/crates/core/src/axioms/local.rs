//! Per-profile axiom probes.
//!
//! [`Probe::at`] checks every constraint whose source is `u`, in canonical
//! order (individual, then alternative indices), returning the first
//! failure. [`Probe::involving`] additionally covers constraints that end at
//! `u`, which is what a table differing from `G_P` only at `u` can break.

use crate::alternative::Alternative;
use crate::permutation::Permutation;
use crate::profile::Profile;
use crate::rules::Correspondence;
use crate::symmetry::relabel_set;

use super::violation::{stable_outcome, Violation};
use super::Axiom;

pub(crate) struct Probe<'a> {
    g: &'a Correspondence,
    adjacent_relabelings: Vec<Permutation>,
}

impl<'a> Probe<'a> {
    pub fn new(g: &'a Correspondence) -> Self {
        let m = g.alternatives();
        Probe {
            g,
            adjacent_relabelings: (0..m - 1)
                .map(|a| Permutation::swap(m, a, a + 1).expect("in range"))
                .collect(),
        }
    }

    pub fn at(&self, axiom: Axiom, u: &Profile) -> Option<Violation> {
        let g = self.g;
        let gu = g.value(u);
        let n = u.individuals();
        let m = u.alternatives();
        match axiom {
            Axiom::Pareto => {
                for a in 0..m {
                    let x = Alternative::new(a);
                    for y in gu.iter() {
                        if y != x && u.rankings().iter().all(|r| r.prefers(x, y)) {
                            return Some(Violation::Pareto {
                                profile: u.clone(),
                                dominator: x,
                                dominated: y,
                            });
                        }
                    }
                }
                None
            }
            Axiom::TopsIn => (0..n).find_map(|i| {
                let top = u.ranking(i).top();
                (!gu.contains(top)).then(|| Violation::TopsIn {
                    profile: u.clone(),
                    individual: i,
                    top,
                })
            }),
            Axiom::Balancedness => {
                let mut found: Option<Violation> = None;
                let mut best = (usize::MAX, usize::MAX, usize::MAX, usize::MAX);
                u.for_each_site(|site| {
                    let key = (site.i, site.j, site.x.index(), site.y.index());
                    if key >= best {
                        return;
                    }
                    let v = u.apply_site_unchecked(&site);
                    if g.value(&v) != gu {
                        best = key;
                        found = Some(Violation::Balancedness {
                            profile: u.clone(),
                            site,
                            image: v,
                        });
                    }
                });
                found
            }
            Axiom::Monotonicity | Axiom::WeakMonotonicity => {
                let weak = axiom == Axiom::WeakMonotonicity;
                for i in 0..n {
                    let r = u.ranking(i);
                    for x in gu.iter() {
                        let p = r.position_of(x);
                        if p == 0 {
                            continue;
                        }
                        let v = u.swapped(i, p - 1);
                        let gv = g.value(&v);
                        let ok = gv.contains(x) && (weak || gv.is_subset_of(gu));
                        if !ok {
                            return Some(if weak {
                                Violation::WeakMonotonicity {
                                    profile: u.clone(),
                                    individual: i,
                                    raised: x,
                                    image: v,
                                }
                            } else {
                                Violation::Monotonicity {
                                    profile: u.clone(),
                                    individual: i,
                                    raised: x,
                                    image: v,
                                }
                            });
                        }
                    }
                }
                None
            }
            Axiom::StrongStability => {
                for i in 0..n {
                    let r = u.ranking(i);
                    for x in gu.iter() {
                        let p = r.position_of(x);
                        if p + 1 == m {
                            continue;
                        }
                        let y = r.at(p + 1);
                        let v = u.swapped(i, p);
                        if !stable_outcome(gu, g.value(&v), x, y) {
                            return Some(Violation::StrongStability {
                                profile: u.clone(),
                                individual: i,
                                lowered: x,
                                neighbour: y,
                                image: v,
                            });
                        }
                    }
                }
                None
            }
            Axiom::Anonymity => (0..n - 1).find_map(|k| {
                let v = u.swap_individuals(k, k + 1);
                (g.value(&v) != gu).then(|| Violation::Anonymity {
                    profile: u.clone(),
                    first: k,
                    image: v,
                })
            }),
            Axiom::Neutrality => {
                self.adjacent_relabelings
                    .iter()
                    .enumerate()
                    .find_map(|(a, theta)| {
                        let v = u.apply_alternative_permutation(theta).expect("sizes match");
                        (g.value(&v) != relabel_set(gu, theta)).then(|| Violation::Neutrality {
                            profile: u.clone(),
                            first: Alternative::new(a),
                            image: v,
                        })
                    })
            }
        }
    }

    /// Every constraint touching `u` as source or target.
    ///
    /// Balancedness, anonymity and neutrality constraints are symmetric
    /// (their moves are involutions), so the source check at `u` covers
    /// them. Raises and lowers are not: those are re-checked from every
    /// profile one adjacent swap away.
    pub fn involving(&self, axiom: Axiom, u: &Profile) -> Option<Violation> {
        if let Some(v) = self.at(axiom, u) {
            return Some(v);
        }
        match axiom {
            Axiom::Monotonicity | Axiom::WeakMonotonicity | Axiom::StrongStability => {
                let m = u.alternatives();
                for i in 0..u.individuals() {
                    for p in 0..m - 1 {
                        let q = u.swapped(i, p);
                        if let Some(v) = self.at(axiom, &q) {
                            return Some(v);
                        }
                    }
                }
                None
            }
            _ => None,
        }
    }
}
