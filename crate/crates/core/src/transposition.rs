//! Transposition pairs: an adjacent pair ranked one way by one individual and
//! the other way by another.

use crate::alternative::Alternative;
use crate::error::{Error, Result};
use crate::profile::Profile;

/// `x` sits immediately above `y` for individual `i`, and `y` immediately
/// above `x` for individual `j`. Always `i < j`; `(x, y)` is oriented by `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TranspositionSite {
    pub x: Alternative,
    pub y: Alternative,
    pub i: usize,
    pub j: usize,
}

impl Profile {
    /// Every transposition site, each unordered pair of individuals and
    /// unordered pair of alternatives once, ordered by `(i, j, position in u(i))`.
    pub fn transposition_sites(&self) -> Vec<TranspositionSite> {
        let mut sites = Vec::new();
        self.for_each_site(|s| sites.push(s));
        sites
    }

    pub(crate) fn for_each_site(&self, mut f: impl FnMut(TranspositionSite)) {
        let n = self.individuals();
        let m = self.alternatives();
        for i in 0..n {
            let ri = self.ranking(i);
            for j in i + 1..n {
                let rj = self.ranking(j);
                for p in 0..m - 1 {
                    let x = ri.at(p);
                    let y = ri.at(p + 1);
                    let q = rj.position_of(y);
                    if q + 1 < m && rj.at(q + 1) == x {
                        f(TranspositionSite { x, y, i, j });
                    }
                }
            }
        }
    }

    pub fn is_transposition_site(&self, s: &TranspositionSite) -> bool {
        let n = self.individuals();
        let m = self.alternatives();
        if s.i >= n || s.j >= n || s.i == s.j || s.x == s.y {
            return false;
        }
        if s.x.index() >= m || s.y.index() >= m {
            return false;
        }
        self.ranking(s.i).below(s.x) == Some(s.y) && self.ranking(s.j).below(s.y) == Some(s.x)
    }

    /// Transposes `x` and `y` for both individuals of the site.
    pub fn apply_transposition(&self, s: &TranspositionSite) -> Result<Profile> {
        if !self.is_transposition_site(s) {
            return Err(Error::Precondition(format!(
                "{s:?} is not a transposition site of this profile"
            )));
        }
        Ok(self.apply_site_unchecked(s))
    }

    pub(crate) fn apply_site_unchecked(&self, s: &TranspositionSite) -> Profile {
        let pi = self.ranking(s.i).position_of(s.x);
        let pj = self.ranking(s.j).position_of(s.y);
        self.swapped(s.i, pi).swapped(s.j, pj)
    }
}

impl TranspositionSite {
    /// The site at the transposed profile that leads back.
    pub fn reversed(&self) -> TranspositionSite {
        TranspositionSite {
            x: self.y,
            y: self.x,
            i: self.i,
            j: self.j,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternative::Universe;

    #[test]
    fn invalid_site_is_rejected() {
        let u = Universe::xyzwt(3).unwrap();
        let p = Profile::parse("xyz|yxz", &u).unwrap();
        let good = TranspositionSite {
            x: Alternative::new(0),
            y: Alternative::new(1),
            i: 0,
            j: 1,
        };
        assert!(p.is_transposition_site(&good));
        assert_eq!(p.apply_transposition(&good).unwrap().format(&u), "yxz|xyz");
        assert!(p.apply_transposition(&good.reversed()).is_err());
        let bad = TranspositionSite { j: 0, ..good };
        assert!(p.apply_transposition(&bad).is_err());
    }

    #[test]
    fn reversed_site_undoes_the_move() {
        let u = Universe::xyzwt(3).unwrap();
        let p = Profile::parse("xyz|yxz|zyx", &u).unwrap();
        for s in p.transposition_sites() {
            let v = p.apply_transposition(&s).unwrap();
            assert_eq!(v.apply_transposition(&s.reversed()).unwrap(), p);
        }
    }
}
