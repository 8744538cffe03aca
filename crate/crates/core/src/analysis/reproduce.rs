//! Re-derives each worked example from scratch: where it deviates from
//! `G_P`, what it chooses there, and which axioms it passes and fails.

use std::collections::HashMap;

use serde::Serialize;

use crate::alternative::{Alternative, ChoiceSet};
use crate::axioms::{check_axiom, Axiom};
use crate::domain::DomainIndex;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::Ranking;
use crate::rules::{
    catalog, Correspondence, EXAMPLE_10_PROFILES, EXAMPLE_4_PROFILE, EXAMPLE_5_PROFILE,
    EXAMPLE_8_PROFILES, EXAMPLE_9_CATALOG,
};
use crate::symmetry::{orbit, Symmetries};
use crate::transposition::TranspositionSite;

use super::height::{gap, height};
use super::theorem::{differences_from_pareto, theorem_axioms};

/// Listed deviation profiles beyond which only the count is compared.
const LISTED: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub claim: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub example: u8,
    pub claims: Vec<Claim>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.holds)
    }
}

#[derive(Default)]
struct Claims {
    claims: Vec<Claim>,
    /// Axiom verdicts already computed, by rule name.
    verdicts: HashMap<(String, Axiom), bool>,
}

impl Claims {
    fn push(&mut self, claim: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.claims.push(Claim {
            claim: claim.into(),
            holds,
            detail: detail.into(),
        });
    }

    /// Every axiom the catalog lists for `name`, checked at its stated size.
    fn catalog_axioms(&mut self, name: &str) -> Result<Correspondence> {
        let entry = catalog()
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::Config(format!("no catalog entry '{name}'")))?;
        let (m, n) = entry.size;
        let g = Correspondence::from_name(name, m, n)?;
        let d = DomainIndex::new(m, n)?;
        for &a in entry.satisfies {
            let r = check_axiom(a, &g, &d)?;
            self.verdicts.insert((name.to_string(), a), r.passed());
            let detail = match &r.witness {
                None => format!("{} profiles checked", r.profiles_scanned),
                Some(w) => format!("witness at {}", g.format_profile(w.profile())),
            };
            self.push(format!("{name} satisfies {a}"), r.passed(), detail);
        }
        for &a in entry.violates {
            let r = check_axiom(a, &g, &d)?;
            self.verdicts.insert((name.to_string(), a), r.passed());
            let (holds, detail) = match &r.witness {
                None => (
                    false,
                    format!("no violation in {} profiles", r.profiles_scanned),
                ),
                Some(w) => {
                    let shown: Vec<String> =
                        w.profiles().iter().map(|p| g.format_profile(p)).collect();
                    (w.replay(&g), format!("witness {}", shown.join(" -> ")))
                }
            };
            self.push(format!("{name} violates {a}"), holds, detail);
        }
        Ok(g)
    }

    fn value(&mut self, g: &Correspondence, profile: &str, expected: &[&str]) -> Result<()> {
        let u = g.parse_profile(profile)?;
        let want = g.universe().parse_set(expected)?;
        let got = g.evaluate(&u)?;
        self.push(
            format!(
                "{}({profile}) = {}",
                g.name(),
                g.universe().format_set(want)
            ),
            got == want,
            format!("computed {}", g.universe().format_set(got)),
        );
        Ok(())
    }

    fn pareto_value(&mut self, g: &Correspondence, profile: &str, expected: &[&str]) -> Result<()> {
        let u = g.parse_profile(profile)?;
        let want = g.universe().parse_set(expected)?;
        let got = u.pareto_set();
        self.push(
            format!("G_P({profile}) = {}", g.universe().format_set(want)),
            got == want,
            format!("computed {}", g.universe().format_set(got)),
        );
        Ok(())
    }

    /// `g` differs from `G_P` at exactly `expected`.
    fn deviation_set(&mut self, g: &Correspondence, expected: &[Profile]) -> Result<()> {
        let d = DomainIndex::new(g.alternatives(), g.individuals())?;
        let (count, listed) = differences_from_pareto(g, &d, LISTED)?;
        let mut want: Vec<u64> = expected
            .iter()
            .map(|u| d.profile_index(u))
            .collect::<Result<_>>()?;
        want.sort_unstable();
        want.dedup();
        let got: Vec<u64> = listed.iter().map(|(u, _)| d.index_of(u)).collect();
        self.push(
            format!(
                "{} differs from G_P at exactly {} profiles",
                g.name(),
                want.len()
            ),
            count == want.len() as u64 && got == want,
            format!("{count} differing profiles"),
        );
        Ok(())
    }

    /// `g` differs from `G_P` exactly where `declared` holds, counted.
    fn deviation_count(
        &mut self,
        g: &Correspondence,
        description: &str,
        declared: impl Fn(&Profile) -> bool,
    ) -> Result<()> {
        let d = DomainIndex::new(g.alternatives(), g.individuals())?;
        let mut mismatch = None;
        let mut count = 0u64;
        for u in d.profiles() {
            let differs = g.value(&u) != u.pareto_set();
            count += differs as u64;
            if differs != declared(&u) && mismatch.is_none() {
                mismatch = Some(g.format_profile(&u));
            }
        }
        let holds = mismatch.is_none();
        let detail = match mismatch {
            None => format!("{count} differing profiles"),
            Some(p) => format!("first disagreement at {p}"),
        };
        self.push(
            format!("{} differs from G_P exactly {description}", g.name()),
            holds,
            detail,
        );
        Ok(())
    }

    fn no_sites(&mut self, g: &Correspondence, u: &Profile) {
        let sites = u.transposition_sites();
        self.push(
            format!("no transposition pair at {}", g.format_profile(u)),
            sites.is_empty(),
            format!("{} sites", sites.len()),
        );
    }

    /// Among theorem `k`'s conditions, `g` fails `failing` and nothing else.
    fn theorem(&mut self, k: u8, g: &Correspondence, failing: Axiom) -> Result<()> {
        let d = DomainIndex::new(g.alternatives(), g.individuals())?;
        let mut failed = Vec::new();
        for &a in theorem_axioms(k)? {
            let key = (g.name().to_string(), a);
            let passed = match self.verdicts.get(&key) {
                Some(&p) => p,
                None => {
                    let p = check_axiom(a, g, &d)?.passed();
                    self.verdicts.insert(key, p);
                    p
                }
            };
            if !passed {
                failed.push(a);
            }
        }
        self.push(
            format!(
                "{} meets every condition of theorem {k} except {failing}",
                g.name()
            ),
            failed == [failing],
            format!(
                "fails {:?}",
                failed.iter().map(|a| a.name()).collect::<Vec<_>>()
            ),
        );
        Ok(())
    }
}

fn parse(g: &Correspondence, text: &str) -> Result<Profile> {
    g.parse_profile(text)
}

fn label(g: &Correspondence, c: char) -> Result<Alternative> {
    g.universe()
        .alternative(c)
        .ok_or_else(|| Error::Config(format!("no alternative '{c}'")))
}

/// Checks every claim made about example `k` (1..=11).
pub fn reproduce_example(k: u8) -> Result<ExampleReport> {
    let mut c = Claims::default();
    match k {
        1 => {
            let g = c.catalog_axioms("example:1")?;
            let all = g.universe().full_set();
            c.value(&g, "xyz|xyz|xyz", &["x", "y", "z"])?;
            c.deviation_count(&g, "where G_P is not X", |u| u.pareto_set() != all)?;
        }
        2 => {
            let g = c.catalog_axioms("example:2")?;
            c.value(&g, "xy|xy|yx", &["x"])?;
            c.pareto_value(&g, "xy|xy|yx", &["x", "y"])?;
            c.deviation_count(&g, "where both alternatives are tops", |u| {
                u.tops().len() == 2
            })?;
        }
        3 => {
            let g = c.catalog_axioms("example:3")?;
            c.value(&g, "xyz|zyx|zyx", &["x", "z"])?;
            c.pareto_value(&g, "xyz|zyx|zyx", &["x", "y", "z"])?;
            c.deviation_count(
                &g,
                "where a Pareto optimal alternative is nobody's top",
                |u| u.pareto_set() != u.tops(),
            )?;
        }
        4 => {
            let g = c.catalog_axioms("example:4")?;
            let u = parse(&g, EXAMPLE_4_PROFILE)?;
            c.value(&g, EXAMPLE_4_PROFILE, &["x"])?;
            c.pareto_value(&g, EXAMPLE_4_PROFILE, &["x", "y", "z"])?;
            c.no_sites(&g, &u);
            c.deviation_set(&g, &[u])?;
            c.theorem(2, &g, Axiom::TopsIn)?;
        }
        5 => reproduce_5(&mut c)?,
        6 => {
            let g = c.catalog_axioms("example:6")?;
            let t = label(&g, 'w')?;
            c.value(&g, "wxyz|xyzw|xyzw", &["x"])?;
            c.pareto_value(&g, "wxyz|xyzw|xyzw", &["w", "x"])?;
            c.value(&g, "wxyz|wxyz|wxyz", &["w"])?;
            c.deviation_count(&g, "where t is Pareto optimal but not alone", |u| {
                let p = u.pareto_set();
                p.contains(t) && p.len() > 1
            })?;
            c.theorem(3, &g, Axiom::TopsIn)?;
        }
        7 => {
            let g = c.catalog_axioms("example:7")?;
            c.value(&g, "xyzw|wzyx|wzyx", &["x", "w"])?;
            c.pareto_value(&g, "xyzw|wzyx|wzyx", &["x", "y", "z", "w"])?;
            c.theorem(3, &g, Axiom::Balancedness)?;
        }
        8 => reproduce_8(&mut c)?,
        9 => reproduce_9(&mut c)?,
        10 => reproduce_10(&mut c)?,
        11 => {
            let g = c.catalog_axioms("example:11")?;
            c.value(&g, "xyz|xyz|xyz", &["x", "y"])?;
            c.value(&g, "xyz|xyz|yxz", &["x", "y"])?;
            c.deviation_count(&g, "at complete-agreement profiles", Profile::is_unanimous)?;
        }
        _ => {
            return Err(Error::Argument(format!(
                "no example {k} (examples are 1..=11)"
            )))
        }
    }
    Ok(ExampleReport {
        example: k,
        claims: c.claims,
    })
}

fn reproduce_5(c: &mut Claims) -> Result<()> {
    let g = c.catalog_axioms("example:5")?;
    let u = parse(&g, EXAMPLE_5_PROFILE)?;
    c.value(&g, EXAMPLE_5_PROFILE, &["x", "y", "z"])?;
    c.pareto_value(&g, EXAMPLE_5_PROFILE, &["x", "y", "z", "w"])?;
    c.no_sites(&g, &u);
    c.deviation_set(&g, std::slice::from_ref(&u))?;

    let z = label(&g, 'z')?;
    let v = u.raise_one(1, z)?;
    let gv = g.evaluate(&v)?;
    let want = g.universe().full_set();
    c.push(
        format!(
            "raising z for #2 at u* gives G(v) = {}",
            g.universe().format_set(want)
        ),
        gv == want,
        format!(
            "v = {}, G(v) = {}",
            g.format_profile(&v),
            g.universe().format_set(gv)
        ),
    );
    c.theorem(3, &g, Axiom::Monotonicity)?;

    let d = DomainIndex::new(4, 3)?;
    let h = height(&g, &d)?;
    c.push(
        "height 2, attained only at u*",
        h.height == Some(2) && h.collection_size == 1 && h.minimal == [u.clone()],
        format!("height {:?}, |C| = {}", h.height, h.collection_size),
    );
    let w = label(&g, 'w')?;
    let width = gap(&g, &u, 1, w)?;
    c.push(
        "gap of w for #2 at u* is 0",
        width == 0,
        format!("gap {width}"),
    );

    let g = c.catalog_axioms("example:5:orbit")?;
    let images: Vec<Profile> = orbit(&u, Symmetries::BOTH)
        .into_values()
        .map(|(p, _)| p)
        .collect();
    let tops_everywhere = images.iter().all(|p| g.value(p) == p.tops());
    c.push(
        "the orbit variant chooses T on every image of u*",
        tops_everywhere,
        format!("{} images", images.len()),
    );
    c.deviation_set(&g, &images)?;
    Ok(())
}

fn reproduce_8(c: &mut Claims) -> Result<()> {
    let g = c.catalog_axioms("example:8")?;
    let u = parse(&g, EXAMPLE_8_PROFILES[0])?;
    let u_star = parse(&g, EXAMPLE_8_PROFILES[1])?;
    for p in EXAMPLE_8_PROFILES {
        c.value(&g, p, &["x", "z"])?;
        c.pareto_value(&g, p, &["x", "z", "w"])?;
    }
    c.no_sites(&g, &u);
    c.no_sites(&g, &u_star);
    let swapped =
        u.apply_individual_permutation(&crate::permutation::Permutation::swap(2, 0, 1)?)?;
    c.push(
        "u* exchanges the two individuals of u",
        swapped == u_star,
        g.format_profile(&swapped),
    );
    c.deviation_set(&g, &[u.clone(), u_star.clone()])?;

    let x = label(&g, 'x')?;
    let v = u.lower_one(0, x)?;
    let gv = g.evaluate(&v)?;
    let want = g.universe().parse_set(&["x", "y", "z", "w"])?;
    c.push(
        "lowering x below y for #1 at u gives G(v) = {x,y,z,w}",
        gv == want,
        format!(
            "v = {}, G(v) = {}",
            g.format_profile(&v),
            g.universe().format_set(gv)
        ),
    );
    c.theorem(4, &g, Axiom::StrongStability)?;

    let d = DomainIndex::new(5, 2)?;
    let h = height(&g, &d)?;
    c.push(
        "height 3, attained at u and u* only",
        h.height == Some(3) && h.collection_size == 2 && h.minimal == [u.clone(), u_star.clone()],
        format!("height {:?}, |C| = {}", h.height, h.collection_size),
    );
    let w = label(&g, 'w')?;
    let width = gap(&g, &u, 0, w)?;
    c.push(
        "gap of w for #1 at u is 1",
        width == 1,
        format!("gap {width}"),
    );

    let g = c.catalog_axioms("example:8:neutral")?;
    let mut images = Vec::new();
    for seed in [&u, &u_star] {
        let closure = orbit(
            seed,
            Symmetries {
                alternatives: true,
                individuals: false,
            },
        );
        images.extend(closure.into_values().map(|(p, _)| p));
    }
    let tops_everywhere = images.iter().all(|p| g.value(p) == p.tops());
    c.push(
        "the neutral variant chooses T on every relabeling of D",
        tops_everywhere,
        format!("{} profiles", images.len()),
    );
    c.deviation_set(&g, &images)?;
    Ok(())
}

fn reproduce_9(c: &mut Claims) -> Result<()> {
    let g = c.catalog_axioms("example:9")?;
    let universe = g.universe().clone();
    let catalog_orderings: Vec<Ranking> = EXAMPLE_9_CATALOG
        .iter()
        .map(|s| Ranking::parse(s, &universe))
        .collect::<Result<_>>()?;
    let xz = universe.parse_set(&["x", "z"])?;
    let in_d = |u: &Profile| {
        u.rankings().iter().all(|r| catalog_orderings.contains(r))
            && u.rankings()
                .iter()
                .filter(|r| **r == catalog_orderings[0])
                .count()
                == 1
            && u.rankings()
                .iter()
                .filter(|r| **r == catalog_orderings[1])
                .count()
                == 1
    };
    c.value(&g, "xywzt|ztwxy|xyztw", &["x", "z"])?;
    c.value(&g, "xyztw|ztwxy|xywzt", &["x", "z"])?;
    c.deviation_count(&g, "on the profiles of D where G_P is not {x,z}", |u| {
        in_d(u) && u.pareto_set() != xz
    })?;
    c.theorem(4, &g, Axiom::StrongStability)?;

    let g = c.catalog_axioms("example:9:unrestricted")?;
    let u = parse(&g, "xywzt|ztwxy|ztwxy")?;
    let v_text = "xywzt|ztxwy|ztwxy";
    let v = parse(&g, v_text)?;
    let x = label(&g, 'x')?;
    c.push(
        "v raises x one rank for #2 at u",
        u.raise_one(1, x)? == v,
        v_text.to_string(),
    );
    c.value(&g, "xywzt|ztwxy|ztwxy", &["x", "z"])?;
    c.value(&g, v_text, &["x", "z", "w"])?;
    let gv = g.value(&v);
    c.push(
        "x stays chosen at v but w is new",
        gv.contains(x) && !gv.is_subset_of(g.value(&u)),
        g.universe().format_set(gv),
    );
    c.deviation_count(&g, "on catalog profiles where T is not G_P", |p| {
        p.rankings().iter().all(|r| catalog_orderings.contains(r)) && p.tops() != p.pareto_set()
    })?;
    Ok(())
}

fn reproduce_10(c: &mut Claims) -> Result<()> {
    let g = c.catalog_axioms("example:10")?;
    let profiles: Vec<Profile> = EXAMPLE_10_PROFILES
        .iter()
        .map(|p| parse(&g, p))
        .collect::<Result<_>>()?;
    for p in EXAMPLE_10_PROFILES {
        c.value(&g, p, &["a", "c"])?;
        c.pareto_value(&g, p, &["a", "b", "c"])?;
    }
    c.deviation_set(&g, &profiles)?;

    let site = TranspositionSite {
        x: label(&g, 'c')?,
        y: label(&g, 'b')?,
        i: 0,
        j: 2,
    };
    let u1 = &profiles[0];
    let v = u1.apply_transposition(&site)?;
    c.push(
        "(c, b) is a transposition pair for #1 and #3 at u1",
        u1.is_transposition_site(&site),
        g.format_profile(&v),
    );
    c.value(&g, "bca|acb|acb", &["a", "b", "c"])?;
    let gv = g.value(&v);
    c.push(
        "the transposition changes G from {a,c} to {a,b,c}",
        g.format_profile(&v) == "bca|acb|acb" && gv == ChoiceSet::full(3),
        g.universe().format_set(gv),
    );
    c.theorem(4, &g, Axiom::Balancedness)?;
    Ok(())
}
