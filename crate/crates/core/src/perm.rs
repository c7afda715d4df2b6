//! Permutations in one-line notation, with rank functions and pattern search.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::Error;

/// A permutation of `{1, .., n}` in one-line notation.
///
/// The word lists images left to right: `word[k]` is the image of `k + 1`.
/// All public indices and values are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, rejecting non-bijections.
    pub fn from_word(word: Vec<usize>) -> Result<Self, Error> {
        if word.is_empty() {
            return Err(Error::Parse {
                pos: 1,
                msg: "empty permutation".to_string(),
            });
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (k, &v) in word.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::Parse {
                    pos: k + 1,
                    msg: format!("value {v} out of range 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::Parse {
                    pos: k + 1,
                    msg: format!("repeated value {v}"),
                });
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    /// The identity permutation on `{1, .., n}`.
    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    /// Ambient size `n`.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// The one-line word.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for 1-based `i`.
    ///
    /// Panics if `i` is out of range.
    pub fn apply(&self, i: usize) -> usize {
        assert!(
            (1..=self.n()).contains(&i),
            "row index {i} out of range 1..={}",
            self.n()
        );
        self.word[i - 1]
    }

    /// The inverse permutation: `inverse().apply(self.apply(i)) == i`.
    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.n()];
        for (k, &v) in self.word.iter().enumerate() {
            word[v - 1] = k + 1;
        }
        Self { word }
    }

    /// Coxeter length: the number of inversions, pairs `i < j` with `w(i) > w(j)`.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.word.len() {
            for j in i + 1..self.word.len() {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Rank function: the number of 1s of the permutation matrix weakly
    /// northwest of `(i, j)`, i.e. `#{a <= i : w(a) <= j}`.
    ///
    /// Panics if `i` or `j` is out of range.
    pub fn rank(&self, i: usize, j: usize) -> usize {
        let n = self.n();
        assert!(
            (1..=n).contains(&i) && (1..=n).contains(&j),
            "cell ({i},{j}) out of range for n = {n}"
        );
        self.word[..i].iter().filter(|&&v| v <= j).count()
    }

    /// Searches for an embedding of the pattern `u`: indices `i_1 < .. < i_m`
    /// such that `w(i_1), .., w(i_m)` is in the same relative order as `u`.
    ///
    /// Returns the lexicographically first embedding (1-based indices), or
    /// `None` when `w` avoids `u`.
    pub fn contains_pattern(&self, u: &Permutation) -> Option<Vec<usize>> {
        let m = u.n();
        if m > self.n() {
            return None;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(m);
        if Self::pattern_search(&self.word, u.word(), 0, &mut chosen) {
            Some(chosen.iter().map(|&p| p + 1).collect())
        } else {
            None
        }
    }

    fn pattern_search(w: &[usize], u: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == u.len() {
            return true;
        }
        let remaining = u.len() - k;
        if start + remaining > w.len() {
            return false;
        }
        for p in start..=w.len() - remaining {
            let v = w[p];
            // extending keeps the chosen subsequence order-isomorphic to u
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(t, &q)| (w[q] < v) == (u[t] < u[k]));
            if consistent {
                chosen.push(p);
                if Self::pattern_search(w, u, p + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// True when `w` avoids the pattern `u`.
    pub fn avoids(&self, u: &Permutation) -> bool {
        self.contains_pattern(u).is_none()
    }

    /// Vexillary means 2143-avoiding.
    pub fn is_vexillary(&self) -> bool {
        self.avoids(&Permutation::from_word(vec![2, 1, 4, 3]).expect("2143 is a permutation"))
    }

    /// The 0/1 matrix with a 1 at `(i, w(i))` for every row `i` (0-based storage).
    pub fn permutation_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut m = vec![vec![0u8; n]; n];
        for (k, &v) in self.word.iter().enumerate() {
            m[k][v - 1] = 1;
        }
        m
    }
}

/// All permutations of `{1, .., n}` in lexicographic word order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n).permutations(n).map(|word| Permutation { word })
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string ("3142", single-digit values only) or a
    /// comma-separated list ("6,1,9,7,2,3,4,5,8"). The comma form is
    /// mandatory once any value exceeds 9.
    fn from_str(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                pos: 1,
                msg: "empty permutation".to_string(),
            });
        }
        let word = if text.contains(',') {
            text.split(',')
                .enumerate()
                .map(|(k, tok)| {
                    tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                        pos: k + 1,
                        msg: format!("malformed token {:?}", tok.trim()),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            text.chars()
                .enumerate()
                .map(|(k, c)| {
                    c.to_digit(10).map(|d| d as usize).ok_or(Error::Parse {
                        pos: k + 1,
                        msg: format!("malformed character {c:?}"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Permutation::from_word(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().join(","))
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.word.serialize(serializer)
    }
}
