use pareto_core::analysis::{
    gap_steps, perturbation_search, transposition_partner, SearchMode, StepOutcome,
};
use pareto_core::rules::catalog;
use pareto_core::*;
use proptest::prelude::*;

fn domain(m: usize, n: usize) -> DomainIndex {
    DomainIndex::new(m, n).unwrap()
}

fn pareto(m: usize, n: usize) -> Correspondence {
    Correspondence::pareto(Universe::xyzwt(m).unwrap(), n).unwrap()
}

fn alt(k: usize) -> Alternative {
    Alternative::new(k)
}

#[test]
fn index_round_trips_exhaustively_on_small_domains() {
    for m in 2..=4 {
        for n in 2..=3 {
            let d = domain(m, n);
            for (k, u) in d.profiles().enumerate() {
                assert_eq!(d.profile_index(&u).unwrap(), k as u64);
                assert_eq!(d.index_profile(k as u64).unwrap(), u);
            }
            assert!(d.index_profile(d.total()).is_err());
        }
    }
}

#[test]
fn profiles_come_in_lexicographic_order() {
    let d = domain(3, 2);
    let u = Universe::xyzwt(3).unwrap();
    let all: Vec<String> = d.profiles().map(|p| p.format(&u)).collect();
    assert_eq!(all.first().unwrap(), "xyz|xyz");
    assert_eq!(all[1], "xyz|xzy");
    assert_eq!(all.last().unwrap(), "zyx|zyx");
    let mut sorted = all.clone();
    sorted.sort();
    assert_eq!(all, sorted);
}

#[test]
fn tops_are_pareto_optimal_and_pareto_sets_are_nonempty() {
    for (m, n) in [(2, 2), (3, 3), (4, 3), (5, 2)] {
        for u in domain(m, n).profiles() {
            let p = u.pareto_set();
            assert!(!p.is_empty());
            assert!(u.tops().is_subset_of(p));
        }
    }
}

#[test]
fn two_alternatives_collapse_to_tops() {
    for n in 2..=4 {
        for u in domain(2, n).profiles() {
            let tops = u.tops();
            if tops.len() == 2 {
                assert_eq!(u.pareto_set(), tops);
            } else {
                assert_eq!(u.pareto_set(), ChoiceSet::singleton(u.ranking(0).top()));
            }
        }
    }
}

/// Every `(x, y, i, j)` with `x` just above `y` for `i` and just below for `j`.
fn brute_force_sites(u: &Profile) -> Vec<(usize, usize, usize, usize)> {
    let m = u.alternatives();
    let n = u.individuals();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for x in 0..m {
                for y in 0..m {
                    if x == y {
                        continue;
                    }
                    let ri = u.ranking(i);
                    let rj = u.ranking(j);
                    let adjacent_i = ri.rank_of(alt(y)) == ri.rank_of(alt(x)) + 1;
                    let adjacent_j = rj.rank_of(alt(x)) == rj.rank_of(alt(y)) + 1;
                    if adjacent_i && adjacent_j {
                        out.push((x, y, i, j));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

#[test]
fn transposition_sites_match_brute_force() {
    for (m, n) in [(2, 3), (3, 3), (4, 2)] {
        for u in domain(m, n).profiles() {
            let mut found: Vec<_> = u
                .transposition_sites()
                .iter()
                .map(|s| (s.x.index(), s.y.index(), s.i, s.j))
                .collect();
            found.sort_unstable();
            assert_eq!(found, brute_force_sites(&u), "{u:?}");
            for s in u.transposition_sites() {
                let v = u.apply_transposition(&s).unwrap();
                assert!(v.is_transposition_site(&s.reversed()));
                assert_eq!(v.apply_transposition(&s.reversed()).unwrap(), u);
            }
        }
    }
}

#[test]
fn witnesses_replay_for_every_catalog_failure() {
    for e in catalog()
        .iter()
        .filter(|e| e.size.0.pow(e.size.1 as u32) < 100_000)
    {
        let (m, n) = e.size;
        let g = Correspondence::from_name(e.name, m, n).unwrap();
        let d = domain(m, n);
        for &a in e.violates {
            let r = check_axiom(a, &g, &d).unwrap();
            let w = r.witness.expect("catalog violation");
            assert_eq!(w.axiom(), a);
            assert!(w.replay(&g), "{} {a}", e.name);
            assert_eq!(
                d.profile_index(w.profile()).unwrap() + 1,
                r.profiles_scanned
            );
            let rec = w.record(&g);
            for (text, p) in rec.profiles.iter().zip(w.profiles()) {
                assert_eq!(&g.parse_profile(text).unwrap(), p);
            }
        }
    }
}

#[test]
fn witness_is_the_first_failing_profile() {
    let g = Correspondence::from_name("tops", 3, 3).unwrap();
    let d = domain(3, 3);
    let r = check_axiom(Axiom::Balancedness, &g, &d).unwrap();
    let k = r.profiles_scanned - 1;
    for earlier in 0..k {
        let u = d.index_profile(earlier).unwrap();
        for s in u.transposition_sites() {
            assert_eq!(g.value(&u.apply_transposition(&s).unwrap()), g.value(&u));
        }
    }
}

#[test]
fn example_eleven_fails_pareto_at_a_unanimous_profile() {
    let g = Correspondence::from_name("example:11", 3, 2).unwrap();
    let r = check_axiom(Axiom::Pareto, &g, &domain(3, 2)).unwrap();
    match r.witness.unwrap() {
        Violation::Pareto {
            profile,
            dominator,
            dominated,
        } => {
            assert!(profile.is_unanimous());
            assert_eq!(profile.ranking(0).top(), dominator);
            assert_eq!(profile.ranking(0).at(1), dominated);
        }
        other => panic!("unexpected witness {other:?}"),
    }
}

#[test]
fn borda_instability_loses_x_and_gains_y_at_once() {
    let g = Correspondence::from_name("borda", 3, 3).unwrap();
    let r = check_axiom(Axiom::StrongStability, &g, &domain(3, 3)).unwrap();
    let Some(Violation::StrongStability {
        profile,
        lowered,
        neighbour,
        image,
        ..
    }) = r.witness
    else {
        panic!("borda is stable");
    };
    let before = g.value(&profile);
    assert_eq!(g.value(&image), before.without(lowered).with(neighbour));
}

#[test]
fn dictator_fails_anonymity() {
    let g = Correspondence::from_name("dictator:1", 3, 3).unwrap();
    let r = check_axiom(Axiom::Anonymity, &g, &domain(3, 3)).unwrap();
    assert!(r.witness.unwrap().replay(&g));
}

#[test]
fn monotonicity_implies_weak_monotonicity() {
    for e in catalog()
        .iter()
        .filter(|e| e.size.0.pow(e.size.1 as u32) < 100_000)
    {
        let (m, n) = e.size;
        let g = Correspondence::from_name(e.name, m, n).unwrap();
        let d = domain(m, n);
        if check_axiom(Axiom::Monotonicity, &g, &d).unwrap().passed() {
            assert!(
                check_axiom(Axiom::WeakMonotonicity, &g, &d)
                    .unwrap()
                    .passed(),
                "{}",
                e.name
            );
        }
    }
}

/// Every single-profile candidate, checked against the whole domain.
fn brute_force_single_deviations(m: usize, n: usize, axioms: &[Axiom]) -> Vec<(u64, ChoiceSet)> {
    let d = domain(m, n);
    let u = Universe::xyzwt(m).unwrap();
    let mut out = Vec::new();
    for (k, p) in d.profiles().enumerate() {
        for s in pareto_core::analysis::candidate_sets(&p) {
            let g = Correspondence::with_overrides(pareto(m, n), [(p.clone(), s)]).unwrap();
            let g = g.with_universe(u.clone()).unwrap();
            if axioms
                .iter()
                .all(|&a| check_axiom(a, &g, &d).unwrap().passed())
            {
                out.push((k as u64, s));
            }
        }
    }
    out
}

#[test]
fn local_acceptance_matches_full_sweeps() {
    for (m, n) in [(3, 3), (4, 2)] {
        for a in Axiom::ALL {
            let d = domain(m, n);
            let universe = Universe::xyzwt(m).unwrap();
            let found =
                perturbation_search(&d, &universe, &[a], SearchMode::Single, u64::MAX).unwrap();
            assert!(found.exhausted);
            let local: Vec<(u64, ChoiceSet)> = found
                .deviations
                .iter()
                .map(|x| {
                    (
                        d.profile_index(&x.assignments[0].0).unwrap(),
                        x.assignments[0].1,
                    )
                })
                .collect();
            assert_eq!(
                local,
                brute_force_single_deviations(m, n, &[a]),
                "{a} at ({m}, {n})"
            );
        }
    }
}

#[test]
fn searched_deviations_survive_full_sweeps() {
    let cases: [(usize, usize, &str, SearchMode); 3] = [
        (4, 3, "pareto,tops-in,balancedness", SearchMode::Single),
        (
            4,
            3,
            "pareto,tops-in,balancedness,anonymity,neutrality",
            SearchMode::Orbit,
        ),
        (
            5,
            2,
            "pareto,tops-in,balancedness,monotonicity,weak-monotonicity,anonymity,neutrality",
            SearchMode::Orbit,
        ),
    ];
    for (m, n, axioms, mode) in cases {
        let d = domain(m, n);
        let universe = Universe::xyzwt(m).unwrap();
        let axioms = Axiom::parse_list(axioms).unwrap();
        let found = perturbation_search(&d, &universe, &axioms, mode, 40).unwrap();
        assert!(!found.deviations.is_empty());
        for x in &found.deviations {
            let g = x.correspondence(&universe, n).unwrap();
            for &a in &axioms {
                assert!(
                    check_axiom(a, &g, &d).unwrap().passed(),
                    "{a} {:?}",
                    x.record(&universe)
                );
            }
        }
    }
}

#[test]
fn rank_two_pareto_alternatives_have_a_transposition_partner() {
    for n in 2..=3 {
        for u in domain(3, n).profiles() {
            let p = u.pareto_set();
            for i in 0..n {
                let w = u.ranking(i).at(1);
                if p.contains(w) {
                    let j = transposition_partner(&u, i, w).expect("partner");
                    assert!(u.ranking(j).prefers(w, u.ranking(i).top()));
                }
            }
        }
    }
}

#[test]
fn gap_steps_follow_the_stability_trichotomy() {
    let mut seen = 0;
    for e in catalog()
        .iter()
        .filter(|e| e.size.0.pow(e.size.1 as u32) < 100_000)
    {
        let (m, n) = e.size;
        let g = Correspondence::from_name(e.name, m, n).unwrap();
        let d = domain(m, n);
        let stable = check_axiom(Axiom::StrongStability, &g, &d)
            .unwrap()
            .passed();
        for step in gap_steps(&g, &d, 64).unwrap() {
            seen += 1;
            if step.outcome == StepOutcome::Violation {
                assert!(!stable, "{}", e.name);
                let v = Violation::StrongStability {
                    profile: step.profile.clone(),
                    individual: step.individual,
                    lowered: step.x,
                    neighbour: step.a,
                    image: step.image.clone(),
                };
                assert!(v.replay(&g));
            } else {
                assert!(step.consistent(), "{} {step:?}", e.name);
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn lowering_x_in_example_eight_is_the_violating_step() {
    let g = Correspondence::from_name("example:8", 5, 2).unwrap();
    let steps = gap_steps(&g, &domain(5, 2), 8).unwrap();
    let u = g.parse_profile("xywzt|ztwxy").unwrap();
    let step = steps
        .iter()
        .find(|s| s.profile == u && s.individual == 0)
        .unwrap();
    assert_eq!(step.gap, 1);
    assert_eq!(step.outcome, StepOutcome::Violation);
    assert_eq!(g.format_profile(&step.image), "yxwzt|ztwxy");
}

fn arbitrary_profile(m: usize, n: usize) -> impl Strategy<Value = Profile> {
    let d = domain(m, n);
    (0..d.total()).prop_map(move |k| d.index_profile(k).unwrap())
}

fn arbitrary_alternatives(m: usize) -> impl Strategy<Value = Permutation> {
    Just((0..m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(&v).unwrap())
}

proptest! {
    #[test]
    fn index_round_trips_at_five_alternatives(k in 0u64..(120u64.pow(3))) {
        let d = domain(5, 3);
        let u = d.index_profile(k).unwrap();
        prop_assert_eq!(d.profile_index(&u).unwrap(), k);
    }

    #[test]
    fn text_round_trips(u in arbitrary_profile(5, 3)) {
        let labels = Universe::xyzwt(5).unwrap();
        prop_assert_eq!(Profile::parse(&u.format(&labels), &labels).unwrap(), u);
    }

    #[test]
    fn ranks_follow_relabeling(u in arbitrary_profile(4, 3), theta in arbitrary_alternatives(4)) {
        let v = u.apply_alternative_permutation(&theta).unwrap();
        for i in 0..3 {
            for x in 0..4 {
                let image = alt(theta.apply(x));
                prop_assert_eq!(v.ranking(i).rank_of(image), u.ranking(i).rank_of(alt(x)));
            }
        }
    }

    #[test]
    fn pareto_commutes_with_both_symmetries(
        u in arbitrary_profile(4, 3),
        theta in arbitrary_alternatives(4),
        rho in Just(vec![0usize, 1, 2]).prop_shuffle(),
    ) {
        let rho = Permutation::new(&rho).unwrap();
        let v = u.apply_alternative_permutation(&theta).unwrap();
        prop_assert_eq!(v.pareto_set(), symmetry::relabel_set(u.pareto_set(), &theta));
        let w = u.apply_individual_permutation(&rho).unwrap();
        prop_assert_eq!(w.pareto_set(), u.pareto_set());
    }

    #[test]
    fn raise_and_lower_are_inverse(u in arbitrary_profile(5, 2), i in 0usize..2, x in 0usize..5) {
        let x = alt(x);
        if let Ok(v) = u.raise_one(i, x) {
            prop_assert_eq!(v.ranking(i).rank_of(x) + 1, u.ranking(i).rank_of(x));
            prop_assert_eq!(v.lower_one(i, x).unwrap(), u.clone());
        } else {
            prop_assert_eq!(u.ranking(i).top(), x);
        }
    }

    #[test]
    fn raise_to_just_below_keeps_other_orders(
        u in arbitrary_profile(5, 2),
        i in 0usize..2,
        x in 0usize..5,
        y in 0usize..5,
    ) {
        let (x, y) = (alt(x), alt(y));
        if let Ok(v) = u.raise_to_just_below(i, x, y) {
            prop_assert_eq!(v.ranking(i).below(y), Some(x));
            for a in 0..5 {
                for b in 0..5 {
                    let (a, b) = (alt(a), alt(b));
                    if a != x && b != x {
                        prop_assert_eq!(v.ranking(i).prefers(a, b), u.ranking(i).prefers(a, b));
                    }
                }
            }
        }
    }
}
