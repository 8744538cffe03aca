//! The eleven worked example correspondences, each built exactly as defined.

use crate::alternative::{ChoiceSet, Universe};
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::Ranking;
use crate::symmetry::{orbit, Symmetries};

use super::{CatalogDomain, Correspondence, Rule};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleVariant {
    Base,
    /// Example 5 spread over the orbit of `u*` under permutations of X and N.
    Orbit,
    /// Example 8 spread over all relabelings of its two profiles.
    Neutral,
    /// Example 9 without the "first two orderings exactly once" restriction.
    Unrestricted,
    /// Example 6 with an explicit excluded alternative.
    Excluding(char),
}

pub const EXAMPLE_4_PROFILE: &str = "xyz|yzx|zxy";
pub const EXAMPLE_5_PROFILE: &str = "xyzw|ywxz|zwxy";
pub const EXAMPLE_8_PROFILES: [&str; 2] = ["xywzt|ztwxy", "ztwxy|xywzt"];
pub const EXAMPLE_9_CATALOG: [&str; 8] = [
    "xywzt", "ztwxy", "xyztw", "xzytw", "xztyw", "zxytw", "zxtyw", "ztxyw",
];
pub const EXAMPLE_10_PROFILES: [&str; 2] = ["cba|acb|abc", "cba|cab|abc"];

/// The `(m, n)` each example is stated at.
pub fn example_default_size(id: u8) -> Option<(usize, usize)> {
    Some(match id {
        1 => (3, 3),
        2 => (2, 3),
        3 | 4 | 10 | 11 => (3, 3),
        5..=7 => (4, 3),
        8 => (5, 2),
        9 => (5, 3),
        _ => return None,
    })
}

fn universe_for(id: u8, m: usize) -> Result<Universe> {
    if id == 10 {
        Universe::with_labels("abc")
    } else {
        Universe::xyzwt(m)
    }
}

fn require(id: u8, ok: bool, what: &str, m: usize, n: usize) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Config(format!(
            "example {id} is defined for {what}; got (m = {m}, n = {n})"
        )))
    }
}

/// Builds example `id` (1..=11) over `(m, n)`.
pub fn example_rule(id: u8, variant: ExampleVariant, m: usize, n: usize) -> Result<Correspondence> {
    use ExampleVariant::*;
    let allowed = match id {
        5 => matches!(variant, Base | Orbit),
        6 => matches!(variant, Base | Excluding(_)),
        8 => matches!(variant, Base | Neutral),
        9 => matches!(variant, Base | Unrestricted),
        1..=11 => variant == Base,
        _ => {
            return Err(Error::Config(format!(
                "no example {id} (examples are 1..=11)"
            )))
        }
    };
    if !allowed {
        return Err(Error::Config(format!(
            "example {id} has no {variant:?} variant"
        )));
    }
    if n < 2 {
        return Err(Error::Size(format!("n = {n} (need at least 2)")));
    }
    let universe = universe_for(id, m)?;
    let name = match variant {
        Base => format!("example:{id}"),
        Orbit => format!("example:{id}:orbit"),
        Neutral => format!("example:{id}:neutral"),
        Unrestricted => format!("example:{id}:unrestricted"),
        Excluding(c) => format!("example:{id}:{c}"),
    };
    let plain = |rule: Rule| Correspondence::new(name.clone(), rule, universe.clone(), n);
    let pareto = || Correspondence::pareto(universe.clone(), n);
    let parse = |text: &str| Profile::parse(text, &universe);

    let g = match id {
        1 => plain(Rule::All)?,
        2 => {
            require(id, m == 2 && n == 3, "m = 2, n = 3", m, n)?;
            plain(Rule::Plurality)?
        }
        3 => {
            require(id, m >= 3, "m >= 3", m, n)?;
            plain(Rule::Tops)?
        }
        4 => {
            require(id, m == 3 && n == 3, "m = n = 3", m, n)?;
            let star = parse(EXAMPLE_4_PROFILE)?;
            let x = universe.alternative('x').expect("x is a label");
            Correspondence::with_overrides(pareto()?, [(star, ChoiceSet::singleton(x))])?
        }
        5 => {
            require(id, m == 4 && n == 3, "m = 4, n = 3", m, n)?;
            let star = parse(EXAMPLE_5_PROFILE)?;
            let profiles: Vec<Profile> = if variant == Orbit {
                orbit(&star, Symmetries::BOTH)
                    .into_values()
                    .map(|(p, _)| p)
                    .collect()
            } else {
                vec![star]
            };
            tops_on(pareto()?, profiles)?
        }
        6 => {
            require(id, m == 4, "m = 4", m, n)?;
            let t = match variant {
                Excluding(c) => universe
                    .alternative(c)
                    .ok_or_else(|| Error::Config(format!("unknown alternative '{c}'")))?,
                _ => crate::alternative::Alternative::new(m - 1),
            };
            plain(Rule::ParetoExcept(t))?
        }
        7 => {
            require(id, m == 4, "m = 4", m, n)?;
            plain(Rule::Tops)?
        }
        8 => {
            require(id, m == 5 && n == 2, "m = 5, n = 2", m, n)?;
            let seeds = EXAMPLE_8_PROFILES
                .iter()
                .map(|t| parse(t))
                .collect::<Result<Vec<_>>>()?;
            let profiles: Vec<Profile> = if variant == Neutral {
                let only_x = Symmetries {
                    alternatives: true,
                    individuals: false,
                };
                let mut all = std::collections::BTreeMap::new();
                for s in &seeds {
                    all.extend(orbit(s, only_x));
                }
                all.into_values().map(|(p, _)| p).collect()
            } else {
                seeds
            };
            tops_on(pareto()?, profiles)?
        }
        9 => {
            require(id, m == 5 && n >= 3, "m = 5, n >= 3", m, n)?;
            let catalog = EXAMPLE_9_CATALOG
                .iter()
                .map(|t| Ranking::parse(t, &universe))
                .collect::<Result<Vec<_>>>()?;
            let domain = CatalogDomain::new(m, &catalog, variant != Unrestricted);
            plain(Rule::CatalogDomain(domain))?
        }
        10 => {
            require(id, m == 3 && n == 3, "m = n = 3", m, n)?;
            let ac = universe.parse_set(&["a", "c"])?;
            let overrides = EXAMPLE_10_PROFILES
                .iter()
                .map(|t| Ok((parse(t)?, ac)))
                .collect::<Result<Vec<_>>>()?;
            Correspondence::with_overrides(pareto()?, overrides)?
        }
        11 => plain(Rule::AgreementTopTwo)?,
        _ => unreachable!(),
    };
    Ok(g.rename(name).with_fixed_labels())
}

fn tops_on(default: Correspondence, profiles: Vec<Profile>) -> Result<Correspondence> {
    let overrides: Vec<(Profile, ChoiceSet)> = profiles
        .into_iter()
        .map(|p| {
            let tops = p.tops();
            (p, tops)
        })
        .collect();
    Correspondence::with_overrides(default, overrides)
}

/// Parses the part of a rule name after `example:`.
pub(crate) fn from_name(text: &str, m: usize, n: usize) -> Result<Correspondence> {
    let mut parts = text.splitn(2, ':');
    let id: u8 = parts
        .next()
        .unwrap_or_default()
        .parse()
        .map_err(|_| Error::Config(format!("bad example number in 'example:{text}'")))?;
    let variant = match parts.next() {
        None => ExampleVariant::Base,
        Some("orbit") => ExampleVariant::Orbit,
        Some("neutral") => ExampleVariant::Neutral,
        Some("unrestricted") => ExampleVariant::Unrestricted,
        Some(label) if id == 6 && label.chars().count() == 1 => {
            ExampleVariant::Excluding(label.chars().next().expect("one char"))
        }
        Some(other) => {
            return Err(Error::Config(format!("unknown example variant '{other}'")));
        }
    };
    example_rule(id, variant, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(g: &Correspondence, text: &str) -> String {
        let u = g.parse_profile(text).unwrap();
        g.universe().format_set(g.evaluate(&u).unwrap())
    }

    #[test]
    fn sizes_are_enforced() {
        assert!(example_rule(4, ExampleVariant::Base, 3, 2).is_err());
        assert!(example_rule(9, ExampleVariant::Base, 5, 2).is_err());
        assert!(example_rule(12, ExampleVariant::Base, 3, 3).is_err());
        assert!(example_rule(4, ExampleVariant::Orbit, 3, 3).is_err());
        assert!(Correspondence::from_name("example:5:neutral", 4, 3).is_err());
    }

    #[test]
    fn example_four_at_the_paradox() {
        let g = Correspondence::from_name("example:4", 3, 3).unwrap();
        assert_eq!(eval(&g, "xyz|yzx|zxy"), "{x}");
        assert_eq!(eval(&g, "xyz|yzx|zyx"), "{x,y,z}");
    }

    #[test]
    fn example_six_drops_t_unless_alone() {
        let g = Correspondence::from_name("example:6", 4, 2).unwrap();
        assert_eq!(eval(&g, "xyzw|wxyz"), "{x}");
        assert_eq!(eval(&g, "wxyz|wxyz"), "{w}");
        let gx = Correspondence::from_name("example:6:x", 4, 2).unwrap();
        assert_eq!(eval(&gx, "xyzw|wxyz"), "{w}");
    }

    #[test]
    fn example_eight_and_its_neutral_variant() {
        let g = Correspondence::from_name("example:8", 5, 2).unwrap();
        assert_eq!(eval(&g, "xywzt|ztwxy"), "{x,z}");
        assert_eq!(eval(&g, "ztwxy|xywzt"), "{x,z}");
        // relabeled copy is untouched by the base rule, but not by G*
        assert_eq!(eval(&g, "yxwtz|tzwyx"), "{y,w,t}");
        let star = Correspondence::from_name("example:8:neutral", 5, 2).unwrap();
        assert_eq!(eval(&star, "yxwtz|tzwyx"), "{y,t}");
    }

    #[test]
    fn example_nine_membership() {
        let g = Correspondence::from_name("example:9", 5, 3).unwrap();
        assert_eq!(eval(&g, "xywzt|ztwxy|xzytw"), "{x,z}");
        // C1 twice: outside the restricted domain
        assert_eq!(eval(&g, "xywzt|ztwxy|xywzt"), "{x,z,w}");
        let unrestricted = Correspondence::from_name("example:9:unrestricted", 5, 3).unwrap();
        assert_eq!(eval(&unrestricted, "xywzt|ztwxy|ztwxy"), "{x,z}");
        assert_eq!(eval(&unrestricted, "xywzt|ztxwy|ztwxy"), "{x,z,w}");
    }

    #[test]
    fn example_eleven_top_two() {
        let g = Correspondence::from_name("example:11", 3, 2).unwrap();
        assert_eq!(eval(&g, "xyz|xyz"), "{x,y}");
        assert_eq!(eval(&g, "xyz|xzy"), "{x}");
    }
}
