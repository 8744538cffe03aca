//! Strict orderings of the alternatives.

use std::fmt;

use crate::alternative::{Alternative, ChoiceSet, Universe, MAX_ALTERNATIVES};
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// A strict ranking of `m` alternatives, best first.
///
/// Both directions are stored: `ranks[p]` is the alternative at position `p`
/// (position 0 = rank 1 = top) and `positions[x]` is the position of `x`.
/// Slots at or beyond `m` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ranking {
    m: u8,
    ranks: [u8; MAX_ALTERNATIVES],
    positions: [u8; MAX_ALTERNATIVES],
}

impl Ranking {
    /// Builds a ranking from its alternatives, top first.
    pub fn new(order: &[Alternative]) -> Result<Self> {
        let m = order.len();
        if !(1..=MAX_ALTERNATIVES).contains(&m) {
            return Err(Error::Size(format!("ranking of {m} alternatives")));
        }
        let mut ranks = [0u8; MAX_ALTERNATIVES];
        let mut positions = [0u8; MAX_ALTERNATIVES];
        let mut seen = ChoiceSet::EMPTY;
        for (p, &x) in order.iter().enumerate() {
            if x.index() >= m || seen.contains(x) {
                return Err(Error::Argument(format!(
                    "{order:?} is not a permutation of 0..{m}"
                )));
            }
            seen.insert(x);
            ranks[p] = x.index() as u8;
            positions[x.index()] = p as u8;
        }
        Ok(Ranking {
            m: m as u8,
            ranks,
            positions,
        })
    }

    /// `0 > 1 > ... > m-1`, the lexicographically first ranking.
    pub fn identity(m: usize) -> Self {
        let order: Vec<Alternative> = (0..m).map(Alternative::new).collect();
        Ranking::new(&order).expect("identity is a permutation")
    }

    /// Parses a run of labels, e.g. `"xyzw"`.
    pub fn parse(text: &str, universe: &Universe) -> Result<Self> {
        let mut order = Vec::with_capacity(universe.size());
        for (k, c) in text.chars().enumerate() {
            let x = universe
                .alternative(c)
                .ok_or_else(|| Error::parse(k + 1, format!("unknown alternative '{c}'")))?;
            if order.contains(&x) {
                return Err(Error::parse(k + 1, format!("'{c}' listed twice")));
            }
            order.push(x);
        }
        if order.len() != universe.size() {
            return Err(Error::parse(
                1,
                format!(
                    "ordering lists {} of {} alternatives",
                    order.len(),
                    universe.size()
                ),
            ));
        }
        Ranking::new(&order)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.m as usize
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// Alternative at 0-based position `p`.
    #[inline]
    pub fn at(&self, p: usize) -> Alternative {
        debug_assert!(p < self.len());
        Alternative::new(self.ranks[p] as usize)
    }

    #[inline]
    pub fn top(&self) -> Alternative {
        self.at(0)
    }

    #[inline]
    pub fn bottom(&self) -> Alternative {
        self.at(self.len() - 1)
    }

    /// 0-based position of `x`.
    #[inline]
    pub fn position_of(&self, x: Alternative) -> usize {
        debug_assert!(x.index() < self.len());
        self.positions[x.index()] as usize
    }

    /// 1-based rank of `x` (1 = top).
    #[inline]
    pub fn rank_of(&self, x: Alternative) -> usize {
        self.position_of(x) + 1
    }

    #[inline]
    pub fn prefers(&self, x: Alternative, y: Alternative) -> bool {
        self.positions[x.index()] < self.positions[y.index()]
    }

    /// The alternative immediately below `x`, if any.
    pub fn below(&self, x: Alternative) -> Option<Alternative> {
        let p = self.position_of(x) + 1;
        (p < self.len()).then(|| self.at(p))
    }

    /// The alternative immediately above `x`, if any.
    pub fn above(&self, x: Alternative) -> Option<Alternative> {
        let p = self.position_of(x);
        (p > 0).then(|| self.at(p - 1))
    }

    /// Set of alternatives ranked strictly above `x`.
    pub fn upper_set(&self, x: Alternative) -> ChoiceSet {
        (0..self.position_of(x)).map(|p| self.at(p)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Alternative> + '_ {
        (0..self.len()).map(|p| self.at(p))
    }

    /// Swaps the alternatives at positions `p` and `p + 1`.
    pub(crate) fn swap_adjacent(&mut self, p: usize) {
        debug_assert!(p + 1 < self.len());
        self.ranks.swap(p, p + 1);
        self.positions[self.ranks[p] as usize] = p as u8;
        self.positions[self.ranks[p + 1] as usize] = (p + 1) as u8;
    }

    /// Removes `x` and reinserts it immediately below `y`, keeping every
    /// other relative order.
    pub(crate) fn move_just_below(&mut self, x: Alternative, y: Alternative) {
        let from = self.position_of(x);
        let y_pos = self.position_of(y);
        let to = if from < y_pos { y_pos } else { y_pos + 1 };
        if from < to {
            for p in from..to {
                self.swap_adjacent(p);
            }
        } else {
            for p in (to..from).rev() {
                self.swap_adjacent(p);
            }
        }
    }

    /// Applies a relabeling `θ` of the alternatives: `θ(x)` takes the place of `x`.
    pub fn relabel(&self, theta: &Permutation) -> Ranking {
        debug_assert_eq!(theta.len(), self.len());
        let order: Vec<Alternative> = self
            .iter()
            .map(|x| Alternative::new(theta.apply(x.index())))
            .collect();
        Ranking::new(&order).expect("relabeling preserves permutations")
    }

    /// Position of this ranking in the lexicographic enumeration of all
    /// `m!` rankings (Lehmer code read as a factorial-base number).
    pub fn lex_index(&self) -> usize {
        let m = self.len();
        let mut index = 0usize;
        let mut used = 0u8;
        for p in 0..m {
            let x = self.ranks[p];
            let smaller_unused = (used & ((1u8 << x).wrapping_sub(1))).count_ones() as usize;
            let digit = x as usize - smaller_unused;
            index = index * (m - p) + digit;
            used |= 1 << x;
        }
        index
    }

    /// Inverse of [`Ranking::lex_index`]. Panics if `index >= m!`.
    pub fn from_lex_index(m: usize, index: usize) -> Ranking {
        assert!(index < factorial(m), "lexicographic index out of range");
        let mut digits = [0usize; MAX_ALTERNATIVES];
        let mut rest = index;
        for p in (0..m).rev() {
            let base = m - p;
            digits[p] = rest % base;
            rest /= base;
        }
        let mut remaining: Vec<u8> = (0..m as u8).collect();
        let order: Vec<Alternative> = digits[..m]
            .iter()
            .map(|&d| Alternative::new(remaining.remove(d) as usize))
            .collect();
        Ranking::new(&order).expect("factorial decoding yields a permutation")
    }

    pub fn display<'a>(&'a self, universe: &'a Universe) -> impl fmt::Display + 'a {
        DisplayRanking {
            ranking: self,
            universe,
        }
    }
}

impl fmt::Debug for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.iter().map(Alternative::index))
            .finish()
    }
}

struct DisplayRanking<'a> {
    ranking: &'a Ranking,
    universe: &'a Universe,
}

impl fmt::Display for DisplayRanking<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.ranking.iter() {
            write!(f, "{}", self.universe.label(x))?;
        }
        Ok(())
    }
}

pub(crate) fn factorial(m: usize) -> usize {
    (1..=m).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(order: &[usize]) -> Ranking {
        let v: Vec<Alternative> = order.iter().map(|&k| Alternative::new(k)).collect();
        Ranking::new(&v).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        let a = Alternative::new;
        assert!(Ranking::new(&[a(0), a(0)]).is_err());
        assert!(Ranking::new(&[a(0), a(2)]).is_err());
    }

    #[test]
    fn lex_index_endpoints() {
        assert_eq!(r(&[0, 1, 2]).lex_index(), 0);
        assert_eq!(r(&[2, 1, 0]).lex_index(), 5);
        assert_eq!(r(&[1, 0, 2]).lex_index(), 2);
        for k in 0..24 {
            assert_eq!(Ranking::from_lex_index(4, k).lex_index(), k);
        }
    }

    #[test]
    fn move_just_below_both_directions() {
        // 0 1 2 3 -> move 0 below 2 -> 1 2 0 3
        let mut x = r(&[0, 1, 2, 3]);
        x.move_just_below(Alternative::new(0), Alternative::new(2));
        assert_eq!(x, r(&[1, 2, 0, 3]));
        // 0 1 2 3 -> move 3 below 0 -> 0 3 1 2
        let mut y = r(&[0, 1, 2, 3]);
        y.move_just_below(Alternative::new(3), Alternative::new(0));
        assert_eq!(y, r(&[0, 3, 1, 2]));
        // already directly below: no-op
        let mut z = r(&[0, 1, 2, 3]);
        z.move_just_below(Alternative::new(2), Alternative::new(1));
        assert_eq!(z, r(&[0, 1, 2, 3]));
    }

    #[test]
    fn neighbours_and_ranks() {
        let u = Universe::xyzwt(4).unwrap();
        let x = Ranking::parse("xwyz", &u).unwrap();
        let w = u.alternative('w').unwrap();
        assert_eq!(x.rank_of(w), 2);
        assert_eq!(x.rank_of(x.top()), 1);
        assert_eq!(x.above(w), u.alternative('x'));
        assert_eq!(x.below(w), u.alternative('y'));
        assert_eq!(x.above(x.top()), None);
        assert_eq!(x.display(&u).to_string(), "xwyz");
    }
}
