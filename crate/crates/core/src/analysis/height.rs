//! Height and gap diagnostics for correspondences that leave some Pareto
//! optimal alternative unchosen.

use rayon::prelude::*;

use crate::alternative::Alternative;
use crate::axioms::check_match;
use crate::domain::DomainIndex;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::rules::Correspondence;

/// Number of example profiles kept per collection.
pub const DEFAULT_WITNESS_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightResult {
    /// Minimum of `h(v)` over the collection `C`; `None` when `C` is empty.
    pub height: Option<usize>,
    /// `|C|`: profiles with an unchosen Pareto optimal alternative.
    pub collection_size: u64,
    /// Profiles of `C` attaining the height (`C′`), first ones by index.
    pub minimal: Vec<Profile>,
    /// `|C′|`.
    pub minimal_size: u64,
    /// `(v, h(v))` for the first profiles of `C` by index.
    pub levels: Vec<(Profile, usize)>,
}

/// `h(v)`: the best (smallest) rank at which any alternative of
/// `G_P(v) \ G(v)` sits in any individual's ranking.
pub fn profile_height(g: &Correspondence, v: &Profile) -> Option<usize> {
    let missing = v.pareto_set().difference(g.value(v));
    if missing.is_empty() {
        return None;
    }
    missing
        .iter()
        .flat_map(|w| v.rankings().iter().map(move |r| r.rank_of(w)))
        .min()
}

pub fn height(g: &Correspondence, d: &DomainIndex) -> Result<HeightResult> {
    height_with_cap(g, d, DEFAULT_WITNESS_CAP)
}

pub fn height_with_cap(g: &Correspondence, d: &DomainIndex, cap: usize) -> Result<HeightResult> {
    check_match(g, d)?;
    let (best, size) = (0..d.total())
        .into_par_iter()
        .map(|k| match profile_height(g, &d.profile_at(k)) {
            Some(h) => (h, 1u64),
            None => (usize::MAX, 0),
        })
        .reduce(|| (usize::MAX, 0), |a, b| (a.0.min(b.0), a.1 + b.1));
    if size == 0 {
        return Ok(HeightResult {
            height: None,
            collection_size: 0,
            minimal: Vec::new(),
            minimal_size: 0,
            levels: Vec::new(),
        });
    }
    let mut minimal = Vec::new();
    let mut minimal_size = 0;
    let mut levels = Vec::new();
    for v in d.profiles() {
        if let Some(h) = profile_height(g, &v) {
            if h == best {
                minimal_size += 1;
                if minimal.len() < cap {
                    minimal.push(v.clone());
                }
            }
            if levels.len() < cap {
                levels.push((v, h));
            }
        }
    }
    Ok(HeightResult {
        height: Some(best),
        collection_size: size,
        minimal,
        minimal_size,
        levels,
    })
}

/// Number of alternatives in `u(i)` strictly between `w` and the nearest
/// chosen alternative above it. `i` is 0-based.
pub fn gap(g: &Correspondence, u: &Profile, i: usize, w: Alternative) -> Result<usize> {
    let gu = g.evaluate(u)?;
    if i >= u.individuals() {
        return Err(Error::Argument(format!(
            "individual {} outside 1..={}",
            i + 1,
            u.individuals()
        )));
    }
    if w.index() >= u.alternatives() {
        return Err(Error::Argument(format!(
            "alternative {} outside the universe",
            w.index()
        )));
    }
    if !u.pareto_set().contains(w) {
        return Err(Error::Diagnostic(format!(
            "{} is not Pareto optimal at {}",
            g.universe().label(w),
            g.format_profile(u)
        )));
    }
    if gu.contains(w) {
        return Err(Error::Diagnostic(format!(
            "{} is chosen at {}",
            g.universe().label(w),
            g.format_profile(u)
        )));
    }
    let r = u.ranking(i);
    let pw = r.position_of(w);
    (0..pw)
        .rev()
        .find(|&p| gu.contains(r.at(p)))
        .map(|p| pw - p - 1)
        .ok_or_else(|| {
            Error::Diagnostic(format!(
                "no chosen alternative above {} for individual {}",
                g.universe().label(w),
                i + 1
            ))
        })
}
