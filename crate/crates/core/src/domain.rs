//! Canonical enumeration of the full profile domain `L(X)^N`.
//!
//! Rankings are listed in lexicographic order of their rank sequences and a
//! profile's index is the base-`m!` number whose digits are the individuals'
//! ranking indices, individual 1 most significant. Witnesses are reported
//! against this order, so it must never change.

use crate::alternative::MAX_ALTERNATIVES;
use crate::error::{Error, Result};
use crate::profile::{Profile, Rankings};
use crate::ranking::{factorial, Ranking};

/// Caps on the domain sizes accepted by [`DomainIndex::with_limits`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeLimits {
    pub max_alternatives: usize,
    pub max_individuals: usize,
}

impl Default for SizeLimits {
    fn default() -> Self {
        SizeLimits {
            max_alternatives: MAX_ALTERNATIVES,
            max_individuals: 6,
        }
    }
}

/// All `m!` rankings of `m` alternatives in lexicographic order.
pub fn enumerate_orderings(m: usize) -> Result<Vec<Ranking>> {
    if !(2..=MAX_ALTERNATIVES).contains(&m) {
        return Err(Error::Size(format!(
            "cannot enumerate rankings of {m} alternatives (supported: 2..={MAX_ALTERNATIVES})"
        )));
    }
    Ok((0..factorial(m))
        .map(|k| Ranking::from_lex_index(m, k))
        .collect())
}

#[derive(Clone, Debug)]
pub struct DomainIndex {
    m: usize,
    n: usize,
    table: Vec<Ranking>,
    total: u64,
}

impl DomainIndex {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        DomainIndex::with_limits(m, n, SizeLimits::default())
    }

    pub fn with_limits(m: usize, n: usize, limits: SizeLimits) -> Result<Self> {
        if m < 2 || m > limits.max_alternatives.min(MAX_ALTERNATIVES) {
            return Err(Error::Size(format!(
                "m = {m} (supported: 2..={})",
                limits.max_alternatives.min(MAX_ALTERNATIVES)
            )));
        }
        if n < 2 || n > limits.max_individuals {
            return Err(Error::Size(format!(
                "n = {n} (supported: 2..={})",
                limits.max_individuals
            )));
        }
        let table = enumerate_orderings(m)?;
        let total = (0..n)
            .try_fold(1u64, |acc, _| acc.checked_mul(table.len() as u64))
            .ok_or_else(|| Error::Size(format!("({m}!)^{n} profiles overflow a 64-bit index")))?;
        Ok(DomainIndex { m, n, table, total })
    }

    pub fn alternatives(&self) -> usize {
        self.m
    }

    pub fn individuals(&self) -> usize {
        self.n
    }

    /// `(m!)^n`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn orderings(&self) -> &[Ranking] {
        &self.table
    }

    pub fn index_profile(&self, k: u64) -> Result<Profile> {
        if k >= self.total {
            return Err(Error::OutOfRange {
                index: k,
                total: self.total,
            });
        }
        Ok(self.profile_at(k))
    }

    /// Hot-path decoding; `k` must be in range.
    #[inline]
    pub(crate) fn profile_at(&self, k: u64) -> Profile {
        let base = self.table.len() as u64;
        let mut rankings: Rankings = smallvec::smallvec![self.table[0]; self.n];
        let mut rest = k;
        for slot in rankings.iter_mut().rev() {
            *slot = self.table[(rest % base) as usize];
            rest /= base;
        }
        Profile::from_rankings_unchecked(rankings)
    }

    pub fn profile_index(&self, u: &Profile) -> Result<u64> {
        self.check(u)?;
        Ok(self.index_of(u))
    }

    #[inline]
    pub(crate) fn index_of(&self, u: &Profile) -> u64 {
        index_in(self.table.len() as u64, u)
    }

    pub fn check(&self, u: &Profile) -> Result<()> {
        if u.alternatives() != self.m || u.individuals() != self.n {
            return Err(Error::Mismatch(format!(
                "profile over (m = {}, n = {}) given to a domain over (m = {}, n = {})",
                u.alternatives(),
                u.individuals(),
                self.m,
                self.n
            )));
        }
        Ok(())
    }

    pub fn profiles(&self) -> impl Iterator<Item = Profile> + '_ {
        (0..self.total).map(move |k| self.profile_at(k))
    }
}

/// Canonical index of `u` in a domain whose rankings number `base = m!`.
#[inline]
pub(crate) fn index_in(base: u64, u: &Profile) -> u64 {
    u.rankings()
        .iter()
        .fold(0u64, |acc, r| acc * base + r.lex_index() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_guards() {
        assert!(enumerate_orderings(1).is_err());
        assert!(enumerate_orderings(9).is_err());
        assert!(DomainIndex::new(3, 1).is_err());
        assert!(DomainIndex::new(3, 7).is_err());
        let wide = SizeLimits {
            max_individuals: 7,
            ..SizeLimits::default()
        };
        assert_eq!(
            DomainIndex::with_limits(3, 7, wide).unwrap().total(),
            6u64.pow(7)
        );
        let overflow = SizeLimits {
            max_individuals: 10,
            ..SizeLimits::default()
        };
        assert!(DomainIndex::with_limits(8, 10, overflow).is_err());
    }

    #[test]
    fn out_of_range_and_mismatch() {
        let d = DomainIndex::new(2, 2).unwrap();
        assert!(matches!(d.index_profile(4), Err(Error::OutOfRange { .. })));
        let other = DomainIndex::new(3, 2).unwrap().index_profile(0).unwrap();
        assert!(matches!(d.profile_index(&other), Err(Error::Mismatch(_))));
    }
}
