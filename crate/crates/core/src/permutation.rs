use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A permutation of `0..len`, used both for relabeling alternatives and for
/// reordering individuals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: SmallVec<[u8; 8]>,
}

impl Permutation {
    pub fn new(image: &[usize]) -> Result<Self> {
        let len = image.len();
        let mut seen = vec![false; len];
        for &k in image {
            if k >= len || std::mem::replace(&mut seen[k], true) {
                return Err(Error::Argument(format!(
                    "{image:?} is not a permutation of 0..{len}"
                )));
            }
        }
        Ok(Permutation {
            image: image.iter().map(|&k| k as u8).collect(),
        })
    }

    pub fn identity(len: usize) -> Self {
        Permutation {
            image: (0..len as u8).collect(),
        }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn swap(len: usize, a: usize, b: usize) -> Result<Self> {
        if a >= len || b >= len {
            return Err(Error::Argument(format!("swap({a}, {b}) outside 0..{len}")));
        }
        let mut p = Permutation::identity(len);
        p.image.swap(a, b);
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.image[k] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut image: SmallVec<[u8; 8]> = SmallVec::from_elem(0, self.len());
        for (k, &v) in self.image.iter().enumerate() {
            image[v as usize] = k as u8;
        }
        Permutation { image }
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            image: other
                .image
                .iter()
                .map(|&k| self.image[k as usize])
                .collect(),
        }
    }

    /// All `len!` permutations in lexicographic order of their images.
    pub fn all(len: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..len).collect();
        loop {
            out.push(Permutation::new(&current).expect("valid permutation"));
            // next lexicographic permutation
            let Some(i) = (1..len).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let pivot = i - 1;
            let j = (pivot + 1..len)
                .rev()
                .find(|&j| current[j] > current[pivot])
                .expect("a larger element exists after the pivot");
            current.swap(pivot, j);
            current[i..].reverse();
        }
        out
    }
}
