//! The standard correspondences. Score-based rules return every maximizer.

use crate::alternative::{Alternative, ChoiceSet, MAX_ALTERNATIVES};
use crate::profile::Profile;

/// `G_P(u)`: the Pareto optimal alternatives.
pub fn pareto_set(u: &Profile) -> ChoiceSet {
    u.pareto_set()
}

/// `T(u)`: the union of the individuals' tops.
pub fn tops_union(u: &Profile) -> ChoiceSet {
    u.tops()
}

pub fn constant_all(u: &Profile) -> ChoiceSet {
    ChoiceSet::full(u.alternatives())
}

/// `{u(i)[1]}`. `i` is 0-based.
pub fn dictatorship(u: &Profile, i: usize) -> ChoiceSet {
    ChoiceSet::singleton(u.ranking(i).top())
}

/// Rank `k` earns `m - k` points.
pub fn borda(u: &Profile) -> ChoiceSet {
    let m = u.alternatives();
    let mut score = [0i32; MAX_ALTERNATIVES];
    for r in u.rankings() {
        for p in 0..m {
            score[r.at(p).index()] += (m - 1 - p) as i32;
        }
    }
    argmax(&score[..m])
}

pub fn plurality(u: &Profile) -> ChoiceSet {
    let m = u.alternatives();
    let mut score = [0i32; MAX_ALTERNATIVES];
    for r in u.rankings() {
        score[r.top().index()] += 1;
    }
    argmax(&score[..m])
}

/// Pairwise-majority wins minus losses; ties count zero.
pub fn copeland(u: &Profile) -> ChoiceSet {
    let m = u.alternatives();
    let n = u.individuals() as i32;
    let mut score = [0i32; MAX_ALTERNATIVES];
    for a in 0..m {
        for b in a + 1..m {
            let (x, y) = (Alternative::new(a), Alternative::new(b));
            let for_x = u.rankings().iter().filter(|r| r.prefers(x, y)).count() as i32;
            let for_y = n - for_x;
            match for_x.cmp(&for_y) {
                std::cmp::Ordering::Greater => {
                    score[a] += 1;
                    score[b] -= 1;
                }
                std::cmp::Ordering::Less => {
                    score[a] -= 1;
                    score[b] += 1;
                }
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    argmax(&score[..m])
}

fn argmax(score: &[i32]) -> ChoiceSet {
    let best = *score.iter().max().expect("at least two alternatives");
    score
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == best)
        .map(|(k, _)| Alternative::new(k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternative::Universe;

    fn p(text: &str, m: usize) -> (Profile, Universe) {
        let u = Universe::xyzwt(m).unwrap();
        (Profile::parse(text, &u).unwrap(), u)
    }

    #[test]
    fn unanimous_profile() {
        let (u, l) = p("xyz|xyz|xyz", 3);
        for rule in [pareto_set, tops_union, borda, plurality, copeland] {
            assert_eq!(l.format_set(rule(&u)), "{x}");
        }
    }

    #[test]
    fn voters_paradox() {
        let (u, l) = p("xyz|yzx|zxy", 3);
        assert_eq!(l.format_set(copeland(&u)), "{x,y,z}");
        assert_eq!(l.format_set(borda(&u)), "{x,y,z}");
        assert_eq!(l.format_set(pareto_set(&u)), "{x,y,z}");
    }

    #[test]
    fn plurality_two_alternatives() {
        let (u, l) = p("xy|xy|yx", 2);
        assert_eq!(l.format_set(plurality(&u)), "{x}");
        assert_eq!(l.format_set(tops_union(&u)), "{x,y}");
    }

    #[test]
    fn dictator_and_constant() {
        let (u, l) = p("xyz|zyx", 3);
        assert_eq!(l.format_set(dictatorship(&u, 1)), "{z}");
        assert_eq!(l.format_set(constant_all(&u)), "{x,y,z}");
    }
}
