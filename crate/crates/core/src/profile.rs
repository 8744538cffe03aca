//! Preference profiles and the elementary moves between them.
//!
//! Individuals are 0-based here; witnesses and the CLI print them 1-based.

use std::fmt;

use smallvec::SmallVec;

use crate::alternative::{Alternative, ChoiceSet, Universe};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::ranking::Ranking;

pub(crate) type Rankings = SmallVec<[Ranking; 6]>;

/// One strict ranking per individual, all over the same `m` alternatives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    rankings: Rankings,
}

impl Profile {
    pub fn new(rankings: impl IntoIterator<Item = Ranking>) -> Result<Self> {
        let rankings: Rankings = rankings.into_iter().collect();
        if rankings.len() < 2 {
            return Err(Error::Size(format!(
                "profile of {} individuals (need at least 2)",
                rankings.len()
            )));
        }
        let m = rankings[0].len();
        if rankings.iter().any(|r| r.len() != m) {
            return Err(Error::Argument(
                "rankings in a profile must share one universe".into(),
            ));
        }
        Ok(Profile { rankings })
    }

    pub(crate) fn from_rankings_unchecked(rankings: Rankings) -> Self {
        debug_assert!(rankings.len() >= 2);
        Profile { rankings }
    }

    /// Parses the `xyz|yzx|zxy` text format: one ordering per individual,
    /// top to bottom, separated by `|`. Whitespace around `|` is ignored.
    pub fn parse(text: &str, universe: &Universe) -> Result<Self> {
        let mut rankings = Rankings::new();
        let mut column = 1;
        for segment in text.split('|') {
            let leading = segment.chars().take_while(|c| c.is_whitespace()).count();
            let body = segment.trim();
            let start = column + leading;
            if body.is_empty() {
                return Err(Error::parse(start, "empty ordering"));
            }
            let ranking = Ranking::parse(body, universe).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse {
                    position: start + position - 1,
                    message: format!("individual {}: {message}", rankings.len() + 1),
                },
                other => other,
            })?;
            rankings.push(ranking);
            column += segment.chars().count() + 1;
        }
        if rankings.len() < 2 {
            return Err(Error::parse(
                1,
                "a profile needs at least two individuals separated by '|'",
            ));
        }
        Ok(Profile { rankings })
    }

    /// Renders the profile in the `xyz|yzx|zxy` text format.
    pub fn format(&self, universe: &Universe) -> String {
        let parts: Vec<String> = self
            .rankings
            .iter()
            .map(|r| r.display(universe).to_string())
            .collect();
        parts.join("|")
    }

    /// Number of individuals `n`.
    #[inline]
    pub fn individuals(&self) -> usize {
        self.rankings.len()
    }

    /// Number of alternatives `m`.
    #[inline]
    pub fn alternatives(&self) -> usize {
        self.rankings[0].len()
    }

    #[inline]
    pub fn ranking(&self, i: usize) -> &Ranking {
        &self.rankings[i]
    }

    pub fn rankings(&self) -> &[Ranking] {
        &self.rankings
    }

    /// `x ≻_i y` for every individual `i`. Errors when `x == y`.
    pub fn pareto_dominates(&self, x: Alternative, y: Alternative) -> Result<bool> {
        if x == y {
            return Err(Error::Argument(
                "Pareto dominance compares two distinct alternatives".into(),
            ));
        }
        self.check_alternative(x)?;
        self.check_alternative(y)?;
        Ok(self.rankings.iter().all(|r| r.prefers(x, y)))
    }

    /// Union of the individuals' top alternatives.
    pub fn tops(&self) -> ChoiceSet {
        self.rankings.iter().map(Ranking::top).collect()
    }

    /// Alternatives nobody Pareto dominates.
    ///
    /// `x` is dominated iff the intersection over individuals of the sets
    /// ranked above `x` is non-empty.
    pub fn pareto_set(&self) -> ChoiceSet {
        let m = self.alternatives();
        let mut dominators = [u8::MAX; crate::alternative::MAX_ALTERNATIVES];
        for r in &self.rankings {
            let mut above = 0u8;
            for p in 0..m {
                let x = r.at(p).index();
                dominators[x] &= above;
                above |= 1 << x;
            }
        }
        let mut set = ChoiceSet::EMPTY;
        for (x, &d) in dominators[..m].iter().enumerate() {
            if d == 0 {
                set.insert(Alternative::new(x));
            }
        }
        set
    }

    /// Everyone holds the same ranking.
    pub fn is_unanimous(&self) -> bool {
        self.rankings.iter().all(|r| *r == self.rankings[0])
    }

    /// Swaps `x` with the alternative immediately above it in `u(i)`.
    pub fn raise_one(&self, i: usize, x: Alternative) -> Result<Profile> {
        self.check_individual(i)?;
        self.check_alternative(x)?;
        let p = self.rankings[i].position_of(x);
        if p == 0 {
            return Err(Error::Precondition(format!(
                "alternative {} is already individual {}'s top",
                x.index(),
                i + 1
            )));
        }
        let mut v = self.clone();
        v.rankings[i].swap_adjacent(p - 1);
        Ok(v)
    }

    /// Swaps `x` with the alternative immediately below it in `u(i)`.
    pub fn lower_one(&self, i: usize, x: Alternative) -> Result<Profile> {
        self.check_individual(i)?;
        self.check_alternative(x)?;
        let p = self.rankings[i].position_of(x);
        if p + 1 == self.alternatives() {
            return Err(Error::Precondition(format!(
                "alternative {} is already individual {}'s bottom",
                x.index(),
                i + 1
            )));
        }
        let mut v = self.clone();
        v.rankings[i].swap_adjacent(p);
        Ok(v)
    }

    /// Moves `x` up in `u(i)` to the slot immediately below `y`.
    /// Requires `x` below `y`.
    pub fn raise_to_just_below(&self, i: usize, x: Alternative, y: Alternative) -> Result<Profile> {
        self.check_individual(i)?;
        self.check_alternative(x)?;
        self.check_alternative(y)?;
        if x == y || !self.rankings[i].prefers(y, x) {
            return Err(Error::Precondition(format!(
                "raising requires alternative {} below {} for individual {}",
                x.index(),
                y.index(),
                i + 1
            )));
        }
        let mut v = self.clone();
        v.rankings[i].move_just_below(x, y);
        Ok(v)
    }

    /// Moves `x` down in `u(i)` to the slot immediately below `y`.
    /// Requires `x` above `y`.
    pub fn lower_to_just_below(&self, i: usize, x: Alternative, y: Alternative) -> Result<Profile> {
        self.check_individual(i)?;
        self.check_alternative(x)?;
        self.check_alternative(y)?;
        if x == y || !self.rankings[i].prefers(x, y) {
            return Err(Error::Precondition(format!(
                "lowering requires alternative {} above {} for individual {}",
                x.index(),
                y.index(),
                i + 1
            )));
        }
        let mut v = self.clone();
        v.rankings[i].move_just_below(x, y);
        Ok(v)
    }

    /// Swaps the alternatives at positions `p`, `p + 1` of `u(i)`, unchecked.
    pub(crate) fn swapped(&self, i: usize, p: usize) -> Profile {
        let mut v = self.clone();
        v.rankings[i].swap_adjacent(p);
        v
    }

    /// Relabels the alternatives in every ranking by `θ`.
    pub fn apply_alternative_permutation(&self, theta: &Permutation) -> Result<Profile> {
        if theta.len() != self.alternatives() {
            return Err(Error::Argument(format!(
                "permutation of {} alternatives applied to a profile over {}",
                theta.len(),
                self.alternatives()
            )));
        }
        Ok(Profile {
            rankings: self.rankings.iter().map(|r| r.relabel(theta)).collect(),
        })
    }

    /// The profile `(u(ρ(1)), ..., u(ρ(n)))`.
    pub fn apply_individual_permutation(&self, rho: &Permutation) -> Result<Profile> {
        if rho.len() != self.individuals() {
            return Err(Error::Argument(format!(
                "permutation of {} individuals applied to a profile of {}",
                rho.len(),
                self.individuals()
            )));
        }
        Ok(Profile {
            rankings: (0..rho.len())
                .map(|k| self.rankings[rho.apply(k)])
                .collect(),
        })
    }

    /// Exchanges the rankings of individuals `a` and `b`, unchecked.
    pub(crate) fn swap_individuals(&self, a: usize, b: usize) -> Profile {
        let mut v = self.clone();
        v.rankings.swap(a, b);
        v
    }

    fn check_individual(&self, i: usize) -> Result<()> {
        if i < self.individuals() {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "individual {} outside 1..={}",
                i + 1,
                self.individuals()
            )))
        }
    }

    fn check_alternative(&self, x: Alternative) -> Result<()> {
        if x.index() < self.alternatives() {
            Ok(())
        } else {
            Err(Error::Argument(format!(
                "alternative {} outside a universe of {}",
                x.index(),
                self.alternatives()
            )))
        }
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rankings.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyzw() -> Universe {
        Universe::xyzwt(4).unwrap()
    }

    #[test]
    fn parse_and_format_round_trip() {
        let u = xyzw();
        let p = Profile::parse(" xyzw | ywxz|zwxy ", &u).unwrap();
        assert_eq!(p.individuals(), 3);
        assert_eq!(p.format(&u), "xyzw|ywxz|zwxy");
    }

    #[test]
    fn parse_errors_carry_columns() {
        let u = xyzw();
        match Profile::parse("xyzw|ywqz", &u) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 8),
            other => panic!("unexpected {other:?}"),
        }
        match Profile::parse("xyzw|  xyz", &u) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 8),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Profile::parse("xyzw", &u),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Profile::parse("xyzw||xyzw", &u),
            Err(Error::Parse { position: 6, .. })
        ));
        assert!(matches!(
            Profile::parse("xyzx|xyzw", &u),
            Err(Error::Parse { position: 4, .. })
        ));
    }

    #[test]
    fn dominance_needs_distinct_alternatives() {
        let u = xyzw();
        let p = Profile::parse("xyzw|xyzw", &u).unwrap();
        let x = Alternative::new(0);
        assert!(p.pareto_dominates(x, x).is_err());
        assert!(p.pareto_dominates(x, Alternative::new(1)).unwrap());
        assert!(!p.pareto_dominates(Alternative::new(1), x).unwrap());
    }

    #[test]
    fn boundary_moves_are_rejected() {
        let u = xyzw();
        let p = Profile::parse("xyzw|ywxz", &u).unwrap();
        let x = Alternative::new(0);
        let w = Alternative::new(3);
        assert!(p.raise_one(0, x).is_err());
        assert!(p.lower_one(0, w).is_err());
        assert!(p.raise_one(5, w).is_err());
        assert!(p.raise_to_just_below(0, x, w).is_err());
        assert!(p.lower_to_just_below(0, w, x).is_err());
    }

    #[test]
    fn just_below_moves() {
        let u = xyzw();
        let p = Profile::parse("xyzw|ywxz", &u).unwrap();
        let (x, y, z, w) = (
            Alternative::new(0),
            Alternative::new(1),
            Alternative::new(2),
            Alternative::new(3),
        );
        let v = p.raise_to_just_below(1, z, y).unwrap();
        assert_eq!(v.format(&u), "xyzw|yzwx");
        let v = p.lower_to_just_below(0, x, z).unwrap();
        assert_eq!(v.format(&u), "yzxw|ywxz");
        // adjacent target: identical to a single swap
        assert_eq!(
            p.lower_to_just_below(0, x, y).unwrap(),
            p.lower_one(0, x).unwrap()
        );
        // already just below: identity
        assert_eq!(p.raise_to_just_below(0, w, z).unwrap(), p);
    }
}
