//! Which axioms each named rule satisfies and violates at a stated size.
//!
//! Every entry classifies all eight axioms.

use crate::axioms::Axiom;

#[derive(Clone, Debug)]
pub struct RuleCatalogEntry {
    pub name: &'static str,
    /// Domain the claims are stated for.
    pub size: (usize, usize),
    pub satisfies: &'static [Axiom],
    pub violates: &'static [Axiom],
    pub note: &'static str,
}

use Axiom::*;

const ALL_BUT_PARETO: &[Axiom] = &[
    TopsIn,
    Balancedness,
    Monotonicity,
    WeakMonotonicity,
    StrongStability,
    Anonymity,
    Neutrality,
];

const CATALOG: &[RuleCatalogEntry] = &[
    RuleCatalogEntry {
        name: "pareto",
        size: (3, 3),
        satisfies: &Axiom::ALL,
        violates: &[],
        note: "satisfies every condition, including strong stability",
    },
    RuleCatalogEntry {
        name: "tops",
        size: (3, 3),
        satisfies: &[
            Pareto,
            TopsIn,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
            Neutrality,
        ],
        violates: &[Balancedness, StrongStability],
        note: "union of tops; unbalanced and unstable",
    },
    RuleCatalogEntry {
        name: "borda",
        size: (3, 3),
        satisfies: &[
            Pareto,
            Balancedness,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
            Neutrality,
        ],
        violates: &[TopsIn, StrongStability],
        note: "balanced but not tops-in; fails strong stability",
    },
    RuleCatalogEntry {
        name: "plurality",
        size: (3, 3),
        satisfies: &[
            Pareto,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
            Neutrality,
        ],
        violates: &[TopsIn, Balancedness, StrongStability],
        note: "neither tops-in nor balanced",
    },
    RuleCatalogEntry {
        name: "copeland",
        size: (3, 3),
        satisfies: &[
            Pareto,
            Balancedness,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
            Neutrality,
        ],
        violates: &[TopsIn, StrongStability],
        note: "balanced; fails strong stability",
    },
    RuleCatalogEntry {
        name: "dictator:1",
        size: (3, 3),
        satisfies: &[Pareto, Monotonicity, WeakMonotonicity, Neutrality],
        violates: &[TopsIn, Balancedness, StrongStability, Anonymity],
        note: "dictatorship fails strong stability",
    },
    RuleCatalogEntry {
        name: "all",
        size: (3, 3),
        satisfies: ALL_BUT_PARETO,
        violates: &[Pareto],
        note: "G(u) = X: every condition except Pareto",
    },
    RuleCatalogEntry {
        name: "example:1",
        size: (3, 3),
        satisfies: ALL_BUT_PARETO,
        violates: &[Pareto],
        note: "tops-in but not Pareto",
    },
    RuleCatalogEntry {
        name: "example:2",
        size: (2, 3),
        satisfies: &[
            Pareto,
            Balancedness,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
            Neutrality,
        ],
        violates: &[TopsIn, StrongStability],
        note: "plurality with two alternatives: Pareto but not tops-in",
    },
    RuleCatalogEntry {
        name: "example:3",
        size: (3, 3),
        satisfies: &[
            Pareto,
            TopsIn,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
            Neutrality,
        ],
        violates: &[Balancedness, StrongStability],
        note: "union of tops at m = 3",
    },
    RuleCatalogEntry {
        name: "example:4",
        size: (3, 3),
        satisfies: &[Pareto, Balancedness],
        violates: &[
            TopsIn,
            Monotonicity,
            WeakMonotonicity,
            StrongStability,
            Anonymity,
            Neutrality,
        ],
        note: "{x} at the voter's paradox profile",
    },
    RuleCatalogEntry {
        name: "example:5",
        size: (4, 3),
        satisfies: &[Pareto, TopsIn, Balancedness],
        violates: &[
            Monotonicity,
            WeakMonotonicity,
            StrongStability,
            Anonymity,
            Neutrality,
        ],
        note: "T(u*) at a profile without transposition pairs",
    },
    RuleCatalogEntry {
        name: "example:5:orbit",
        size: (4, 3),
        satisfies: &[Pareto, TopsIn, Balancedness, Anonymity, Neutrality],
        violates: &[Monotonicity, WeakMonotonicity, StrongStability],
        note: "T on the symmetry orbit of u*",
    },
    RuleCatalogEntry {
        name: "example:6",
        size: (4, 3),
        satisfies: &[
            Pareto,
            Balancedness,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
        ],
        violates: &[TopsIn, StrongStability, Neutrality],
        note: "G_P without a fixed alternative t",
    },
    RuleCatalogEntry {
        name: "example:7",
        size: (4, 3),
        satisfies: &[
            Pareto,
            TopsIn,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
            Neutrality,
        ],
        violates: &[Balancedness, StrongStability],
        note: "union of tops at m = 4",
    },
    RuleCatalogEntry {
        name: "example:8",
        size: (5, 2),
        satisfies: &[
            Pareto,
            TopsIn,
            Balancedness,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
        ],
        violates: &[StrongStability, Neutrality],
        note: "{x, z} on a two-profile subdomain",
    },
    RuleCatalogEntry {
        name: "example:8:neutral",
        size: (5, 2),
        satisfies: &[
            Pareto,
            TopsIn,
            Balancedness,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
            Neutrality,
        ],
        violates: &[StrongStability],
        note: "T on every relabeling of the two-profile subdomain",
    },
    RuleCatalogEntry {
        name: "example:9",
        size: (5, 3),
        satisfies: &[
            Pareto,
            TopsIn,
            Balancedness,
            Monotonicity,
            WeakMonotonicity,
            Anonymity,
        ],
        violates: &[StrongStability, Neutrality],
        note: "T on profiles from an eight-ordering catalog, first two once each",
    },
    RuleCatalogEntry {
        name: "example:9:unrestricted",
        size: (5, 3),
        satisfies: &[Pareto, TopsIn, Balancedness, Anonymity],
        violates: &[Monotonicity, WeakMonotonicity, StrongStability, Neutrality],
        note: "same catalog without the exactly-once restriction",
    },
    RuleCatalogEntry {
        name: "example:10",
        size: (3, 3),
        satisfies: &[
            Pareto,
            TopsIn,
            Monotonicity,
            WeakMonotonicity,
            StrongStability,
        ],
        violates: &[Balancedness, Anonymity, Neutrality],
        note: "{a, c} at two profiles; stable but unbalanced",
    },
    RuleCatalogEntry {
        name: "example:11",
        size: (3, 3),
        satisfies: ALL_BUT_PARETO,
        violates: &[Pareto],
        note: "top two at complete-agreement profiles",
    },
];

pub fn catalog() -> &'static [RuleCatalogEntry] {
    CATALOG
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::Correspondence;

    #[test]
    fn names_are_unique_and_resolvable() {
        let mut names: Vec<&str> = catalog().iter().map(|e| e.name).collect();
        for e in catalog() {
            Correspondence::from_name(e.name, e.size.0, e.size.1).unwrap();
            assert!(
                e.satisfies.iter().all(|a| !e.violates.contains(a)),
                "{}",
                e.name
            );
            for a in Axiom::ALL {
                assert!(
                    e.satisfies.contains(&a) || e.violates.contains(&a),
                    "{} {a}",
                    e.name
                );
            }
        }
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(names.len(), before);
    }
}
