//! Alternatives, their display labels, and subsets of alternatives.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest number of alternatives any ranking can hold.
pub const MAX_ALTERNATIVES: usize = 8;

/// One alternative, identified by its index in `[0, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alternative(u8);

impl Alternative {
    /// Panics if `index >= MAX_ALTERNATIVES`.
    pub const fn new(index: usize) -> Self {
        assert!(index < MAX_ALTERNATIVES, "alternative index out of range");
        Alternative(index as u8)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub(crate) const fn bit(self) -> u8 {
        1 << self.0
    }
}

/// A subset of alternatives stored as a bit mask (bit `k` = alternative `k`).
///
/// Correspondence values are always non-empty; the empty set only shows up
/// as an intermediate (e.g. `G(u) \ {x}` when `G(u) = {x}`).
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChoiceSet(u8);

impl ChoiceSet {
    pub const EMPTY: ChoiceSet = ChoiceSet(0);

    pub const fn from_bits(bits: u8) -> Self {
        ChoiceSet(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub fn singleton(x: Alternative) -> Self {
        ChoiceSet(x.bit())
    }

    /// All of `X` for a universe of `m` alternatives.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_ALTERNATIVES);
        ChoiceSet(((1u16 << m) - 1) as u8)
    }

    #[inline]
    pub fn contains(self, x: Alternative) -> bool {
        self.0 & x.bit() != 0
    }

    #[inline]
    pub fn with(self, x: Alternative) -> Self {
        ChoiceSet(self.0 | x.bit())
    }

    #[inline]
    pub fn without(self, x: Alternative) -> Self {
        ChoiceSet(self.0 & !x.bit())
    }

    pub fn insert(&mut self, x: Alternative) {
        self.0 |= x.bit();
    }

    pub fn union(self, other: Self) -> Self {
        ChoiceSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ChoiceSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ChoiceSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = Alternative> {
        let bits = self.0;
        (0..MAX_ALTERNATIVES)
            .filter(move |k| bits & (1 << k) != 0)
            .map(Alternative::new)
    }

    /// Every subset of `self`, in ascending mask order.
    pub fn subsets(self) -> impl Iterator<Item = ChoiceSet> {
        let full = self.0 as u16;
        // Standard submask walk, reversed to ascending order.
        let mut masks: SmallVec<[u8; 256]> = SmallVec::new();
        let mut sub = full;
        loop {
            masks.push(sub as u8);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
        masks.into_iter().rev().map(ChoiceSet)
    }
}

impl FromIterator<Alternative> for ChoiceSet {
    fn from_iter<I: IntoIterator<Item = Alternative>>(iter: I) -> Self {
        let mut set = ChoiceSet::EMPTY;
        for x in iter {
            set.insert(x);
        }
        set
    }
}

impl fmt::Debug for ChoiceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(Alternative::index))
            .finish()
    }
}

/// Display labels for the alternatives `0..m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    labels: SmallVec<[char; MAX_ALTERNATIVES]>,
}

const XYZWT: [char; 5] = ['x', 'y', 'z', 'w', 't'];

impl Universe {
    /// Labels `a, b, c, ...`.
    pub fn alphabetic(m: usize) -> Result<Self> {
        check_size(m)?;
        Ok(Universe {
            labels: (0..m).map(|k| (b'a' + k as u8) as char).collect(),
        })
    }

    /// Labels `x, y, z, w, t` (truncated to `m`), falling back to
    /// alphabetic labels for `m > 5`.
    pub fn xyzwt(m: usize) -> Result<Self> {
        check_size(m)?;
        if m > XYZWT.len() {
            return Universe::alphabetic(m);
        }
        Ok(Universe {
            labels: XYZWT[..m].iter().copied().collect(),
        })
    }

    /// Labels in the given order, e.g. `"abc"`.
    pub fn with_labels(labels: &str) -> Result<Self> {
        let labels: SmallVec<[char; MAX_ALTERNATIVES]> = labels.chars().collect();
        check_size(labels.len())?;
        for (k, c) in labels.iter().enumerate() {
            if c.is_whitespace() || *c == '|' {
                return Err(Error::Argument(format!("'{c}' cannot be used as a label")));
            }
            if labels[..k].contains(c) {
                return Err(Error::Argument(format!("label '{c}' appears twice")));
            }
        }
        Ok(Universe { labels })
    }

    /// Recovers a universe from the set of labels seen in some input.
    ///
    /// A label set equal to a prefix of `x, y, z, w, t` keeps that order;
    /// anything else is ordered by character value.
    pub fn infer(seen: impl IntoIterator<Item = char>) -> Result<Self> {
        let mut labels: Vec<char> = seen.into_iter().collect();
        labels.sort_unstable();
        labels.dedup();
        check_size(labels.len())?;
        let m = labels.len();
        if m <= XYZWT.len() {
            let mut prefix = XYZWT[..m].to_vec();
            prefix.sort_unstable();
            if prefix == labels {
                return Universe::xyzwt(m);
            }
        }
        Universe::with_labels(&labels.into_iter().collect::<String>())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: Alternative) -> char {
        self.labels[x.index()]
    }

    pub fn labels(&self) -> &[char] {
        &self.labels
    }

    pub fn alternative(&self, label: char) -> Option<Alternative> {
        self.labels
            .iter()
            .position(|&c| c == label)
            .map(Alternative::new)
    }

    pub fn alternatives(&self) -> impl Iterator<Item = Alternative> {
        (0..self.size()).map(Alternative::new)
    }

    pub fn full_set(&self) -> ChoiceSet {
        ChoiceSet::full(self.size())
    }

    /// `{a,c}` style rendering, members in label order.
    pub fn format_set(&self, set: ChoiceSet) -> String {
        let inner: Vec<String> = self.set_labels(set);
        format!("{{{}}}", inner.join(","))
    }

    pub fn set_labels(&self, set: ChoiceSet) -> Vec<String> {
        set.iter().map(|x| self.label(x).to_string()).collect()
    }

    /// Parses a list of single-character labels such as `["x", "z"]`.
    pub fn parse_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ChoiceSet> {
        let mut set = ChoiceSet::EMPTY;
        for label in labels {
            let label = label.as_ref();
            let mut chars = label.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(Error::Argument(format!(
                    "'{label}' is not a single-character label"
                )));
            };
            let x = self
                .alternative(c)
                .ok_or_else(|| Error::Argument(format!("unknown alternative '{c}'")))?;
            set.insert(x);
        }
        Ok(set)
    }
}

fn check_size(m: usize) -> Result<()> {
    if (2..=MAX_ALTERNATIVES).contains(&m) {
        Ok(())
    } else {
        Err(Error::Size(format!(
            "{m} alternatives (supported: 2..={MAX_ALTERNATIVES})"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_ascending_and_complete() {
        let s = ChoiceSet::from_bits(0b1010);
        let subs: Vec<u8> = s.subsets().map(ChoiceSet::bits).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(ChoiceSet::full(8).subsets().count(), 256);
    }

    #[test]
    fn inferred_universe_keeps_xyzw_order() {
        let u = Universe::infer("wzyx".chars()).unwrap();
        assert_eq!(u.labels(), &['x', 'y', 'z', 'w']);
        let u = Universe::infer("cab".chars()).unwrap();
        assert_eq!(u.labels(), &['a', 'b', 'c']);
        assert!(Universe::infer("x".chars()).is_err());
    }

    #[test]
    fn labels_must_be_distinct() {
        assert!(Universe::with_labels("aba").is_err());
        assert!(Universe::with_labels("a|").is_err());
        assert!(Universe::alphabetic(9).is_err());
    }

    #[test]
    fn set_formatting() {
        let u = Universe::with_labels("abc").unwrap();
        let s = u.parse_set(&["c", "a"]).unwrap();
        assert_eq!(u.format_set(s), "{a,c}");
        assert!(u.parse_set(&["ab"]).is_err());
        assert!(u.parse_set(&["q"]).is_err());
    }
}
