//! Plane permutations: a long cycle `s` (the upper row) paired with an arbitrary
//! permutation `pi` (the lower row, `pi(s_i)` under `s_i`).
//!
//! The word of `s` always starts at 1, and `<_s` is the order of that word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePermutation {
    /// 0-based word of `s`, `word[0] == 0`.
    word: Vec<usize>,
    pi: Permutation,
}

/// Classification of every element under `<_s`. All sets hold sorted 1-based elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceedanceStats {
    pub exceedances: Vec<usize>,
    pub anti_exceedances: Vec<usize>,
    /// `pi^{-1}(min_s c)` for each cycle `c` of `pi`.
    pub trivial: Vec<usize>,
    /// Anti-exceedances that are not trivial.
    pub ntaes: Vec<usize>,
}

impl PlanePermutation {
    /// Pairs the long cycle `s` with `pi`.
    pub fn new(s: &Permutation, pi: Permutation) -> Result<Self> {
        if s.n() != pi.n() {
            return Err(Error::SizeMismatch {
                left: s.n(),
                right: pi.n(),
            });
        }
        if s.n() == 0 || !s.is_long_cycle() {
            return Err(Error::InvalidPermutation(format!("{s} is not a long cycle")));
        }
        Ok(PlanePermutation {
            word: word_from_zero(s),
            pi,
        })
    }

    /// From the 1-based word of `s`, which is rotated to start at 1.
    pub fn from_word(word: &[usize], pi: Permutation) -> Result<Self> {
        let n = word.len();
        let s = Permutation::from_cycles(n, &[word.to_vec()])?;
        if n != pi.n() {
            return Err(Error::SizeMismatch { left: n, right: pi.n() });
        }
        PlanePermutation::new(&s, pi)
    }

    /// From the two displayed rows: `top` is the word of `s`, `bottom[i] = pi(top[i])`.
    pub fn from_rows(top: &[usize], bottom: &[usize]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::SizeMismatch {
                left: top.len(),
                right: bottom.len(),
            });
        }
        let n = top.len();
        let mut images = vec![0; n];
        for (&x, &y) in top.iter().zip(bottom) {
            if x == 0 || x > n || y == 0 || y > n {
                return Err(Error::InvalidPermutation(format!("element out of [{n}]")));
            }
            images[x - 1] = y;
        }
        let pi = Permutation::from_one_line(&images)?;
        PlanePermutation::from_word(top, pi)
    }

    /// The plane permutation with long cycle `s` and diagonal `d`, so `pi = d^{-1} s`.
    pub fn with_diagonal(s: &Permutation, d: &Permutation) -> Result<Self> {
        let pi = d.inverse().compose(s)?;
        PlanePermutation::new(s, pi)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// 1-based word `(s_0, ..., s_{n-1})`, `s_0 = 1`.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|x| x + 1).collect()
    }

    pub fn s(&self) -> Permutation {
        Permutation::from_cycles(self.n(), &[self.word()]).expect("word is a permutation")
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    /// `D = s pi^{-1}`.
    pub fn diagonal(&self) -> Permutation {
        self.s()
            .compose(&self.pi.inverse())
            .expect("sizes agree by construction")
    }

    /// The diagonal read off the array: `D(pi(s_{i-1})) = s_i`, cyclically.
    pub fn diagonal_from_pairs(&self) -> Permutation {
        let n = self.n();
        let pi = self.pi.as_slice();
        let mut image = vec![0; n];
        for i in 0..n {
            let below = pi[self.word[i]];
            image[below] = self.word[(i + 1) % n];
        }
        Permutation::from_zero_based(image).expect("diagonal pairs form a bijection")
    }

    /// Position of each 0-based element in the word.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n()];
        for (i, &x) in self.word.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    pub fn exceedance_stats(&self) -> ExceedanceStats {
        let pos = self.positions();
        let pi = self.pi.as_slice();
        let inv = self.pi.inverse();
        let mut is_trivial = vec![false; self.n()];
        for cycle in self.pi.cycles_zero_based() {
            let min = *cycle.iter().min_by_key(|&&x| pos[x]).unwrap();
            is_trivial[inv.as_slice()[min]] = true;
        }
        let mut stats = ExceedanceStats {
            exceedances: Vec::new(),
            anti_exceedances: Vec::new(),
            trivial: Vec::new(),
            ntaes: Vec::new(),
        };
        for x in 0..self.n() {
            if pos[x] < pos[pi[x]] {
                stats.exceedances.push(x + 1);
            } else {
                stats.anti_exceedances.push(x + 1);
                if is_trivial[x] {
                    stats.trivial.push(x + 1);
                } else {
                    stats.ntaes.push(x + 1);
                }
            }
        }
        stats
    }

    /// Number of exceedances `a`.
    pub fn exceedance_count(&self) -> usize {
        exceedance_count_raw(&self.word, self.pi.as_slice())
    }

    /// `Ne(p)`, the number of non-trivial anti-exceedances.
    pub fn ne(&self) -> usize {
        self.n() - self.pi.cycle_count() - self.exceedance_count()
    }

    /// Swaps the adjacent diagonal blocks `[s_i, s_j]` and `[s_{j+1}, s_k]`,
    /// positions into the word with `1 <= i <= j < k <= n-1`.
    pub fn transpose_blocks(&self, i: usize, j: usize, k: usize) -> Result<PlanePermutation> {
        let n = self.n();
        if !(1 <= i && i <= j && j < k && k < n) {
            return Err(Error::Index(format!(
                "need 1 <= i <= j < k <= {} for h = ({i},{j},{k})",
                n.saturating_sub(1)
            )));
        }
        let w = &self.word;
        let pi = self.pi.as_slice();
        let mut word = Vec::with_capacity(n);
        word.extend_from_slice(&w[..i]);
        word.extend_from_slice(&w[j + 1..=k]);
        word.extend_from_slice(&w[i..=j]);
        word.extend_from_slice(&w[k + 1..]);
        let mut image = pi.to_vec();
        image[w[i - 1]] = pi[w[j]];
        image[w[k]] = pi[w[i - 1]];
        image[w[j]] = pi[w[k]];
        Ok(PlanePermutation {
            word,
            pi: Permutation::from_zero_based(image)?,
        })
    }

    /// `p' = (s^{-1}, D_p^{-1})`, with the word of `s^{-1}` starting at 1.
    pub fn reflect(&self) -> PlanePermutation {
        let mut word = Vec::with_capacity(self.n());
        word.push(self.word[0]);
        word.extend(self.word[1..].iter().rev());
        PlanePermutation {
            word,
            pi: self.diagonal().inverse(),
        }
    }

    /// The two rows as text, columns right-aligned.
    pub fn two_row(&self) -> String {
        let top = self.word();
        let bottom: Vec<usize> = top.iter().map(|&x| self.pi.apply(x)).collect();
        let width = self.n().to_string().len();
        let row = |v: &[usize]| {
            v.iter()
                .map(|x| format!("{x:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}\n{}", row(&top), row(&bottom))
    }
}

pub(crate) fn exceedance_count_raw(word: &[usize], pi: &[usize]) -> usize {
    let mut pos = [0usize; 64];
    let mut pos_vec;
    let pos: &mut [usize] = if word.len() <= 64 {
        &mut pos[..word.len()]
    } else {
        pos_vec = vec![0; word.len()];
        &mut pos_vec
    };
    for (i, &x) in word.iter().enumerate() {
        pos[x] = i;
    }
    (0..word.len()).filter(|&x| pos[x] < pos[pi[x]]).count()
}

fn word_from_zero(s: &Permutation) -> Vec<usize> {
    let img = s.as_slice();
    let mut word = Vec::with_capacity(s.n());
    let mut x = 0;
    for _ in 0..s.n() {
        word.push(x);
        x = img[x];
    }
    word
}

impl fmt::Display for PlanePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.two_row())
    }
}

impl FromStr for PlanePermutation {
    type Err = Error;

    /// Two whitespace-separated rows on separate lines.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        match rows.as_slice() {
            [top, bottom] => PlanePermutation::from_rows(top, bottom),
            _ => Err(Error::Parse(format!("expected two rows, got {}", rows.len()))),
        }
    }
}

/// JSON form `{"s": [word of s], "pi": [one-line images of pi]}`, 1-based.
#[derive(Serialize, Deserialize)]
struct PlaneJson {
    s: Vec<usize>,
    pi: Vec<usize>,
}

impl Serialize for PlanePermutation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PlaneJson {
            s: self.word(),
            pi: self.pi.as_slice().iter().map(|v| v + 1).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PlanePermutation {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PlaneJson::deserialize(de)?;
        let pi = Permutation::from_one_line(&raw.pi).map_err(D::Error::custom)?;
        PlanePermutation::from_word(&raw.s, pi).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, long_cycle_iter};

    fn example() -> PlanePermutation {
        PlanePermutation::from_rows(&[1, 5, 4, 6, 2, 3], &[5, 4, 1, 3, 6, 2]).unwrap()
    }

    #[test]
    fn diagonal_two_ways() {
        let p = example();
        assert_eq!(p.diagonal(), p.diagonal_from_pairs());
        let s = p.s();
        let same = PlanePermutation::new(&s, s.clone()).unwrap();
        assert!(same.diagonal().is_identity());
        let id = PlanePermutation::new(&s, Permutation::identity(6)).unwrap();
        assert_eq!(id.diagonal(), s);
    }

    #[test]
    fn example_statistics() {
        let p = example();
        let st = p.exceedance_stats();
        assert!(st.exceedances.contains(&1));
        assert!(st.anti_exceedances.contains(&2));
        assert_eq!(st.anti_exceedances, vec![2, 3, 4]);
        assert_eq!(st.trivial, vec![2, 4]);
        assert_eq!(st.ntaes, vec![3]);
        assert_eq!(p.ne(), 1);
        assert_eq!(p.exceedance_count(), 3);
    }

    #[test]
    fn identity_vertical_has_no_exceedances() {
        for s in long_cycle_iter(5) {
            let p = PlanePermutation::new(&s, Permutation::identity(5)).unwrap();
            let st = p.exceedance_stats();
            assert!(st.exceedances.is_empty());
            assert_eq!(st.trivial.len(), 5);
            assert_eq!(p.ne(), 0);
        }
    }

    #[test]
    fn dichotomy_and_ne_formula() {
        let s = Permutation::standard_long_cycle(5);
        for pi in all_permutations(5) {
            let p = PlanePermutation::new(&s, pi).unwrap();
            let st = p.exceedance_stats();
            assert_eq!(st.exceedances.len() + st.anti_exceedances.len(), 5);
            assert_eq!(st.ntaes.len(), p.ne());
            assert_eq!(st.trivial.len(), p.pi().cycle_count());
        }
    }

    #[test]
    fn small_transposition() {
        let s = Permutation::standard_long_cycle(3);
        let p = PlanePermutation::new(&s, Permutation::identity(3)).unwrap();
        let q = p.transpose_blocks(1, 1, 2).unwrap();
        assert_eq!(q.word(), vec![1, 3, 2]);
        assert_eq!(p.diagonal(), s);
        assert_eq!(q.diagonal(), s);
        assert!(p.transpose_blocks(0, 1, 2).is_err());
        assert!(p.transpose_blocks(1, 2, 2).is_err());
        assert!(p.transpose_blocks(1, 1, 3).is_err());
    }

    #[test]
    fn equal_length_transposition_is_an_involution() {
        let p = example();
        let q = p.transpose_blocks(1, 2, 4).unwrap();
        assert_eq!(q.transpose_blocks(1, 2, 4).unwrap(), p);
    }

    #[test]
    fn reflection_of_identity_vertical() {
        let s = Permutation::standard_long_cycle(4);
        let p = PlanePermutation::new(&s, Permutation::identity(4)).unwrap();
        let r = p.reflect();
        assert_eq!(p.ne(), 0);
        assert_eq!(r.ne(), 0);
        assert_eq!(r.word(), vec![1, 4, 3, 2]);
    }

    #[test]
    fn reflection_identity_on_example() {
        let p = example();
        let r = p.reflect();
        let lhs = p.ne() + r.ne();
        let rhs = 7 - p.pi().cycle_count() - p.diagonal().cycle_count();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_and_json_roundtrip() {
        let p = example();
        assert_eq!(p.two_row(), "1 5 4 6 2 3\n5 4 1 3 6 2");
        assert_eq!(p.two_row().parse::<PlanePermutation>().unwrap(), p);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"s":[1,5,4,6,2,3],"pi":[5,6,2,1,4,3]}"#);
        assert_eq!(serde_json::from_str::<PlanePermutation>(&json).unwrap(), p);
        assert!("1 2\n2".parse::<PlanePermutation>().is_err());
    }

    #[test]
    fn rejects_non_long_cycles() {
        let s: Permutation = "(1 2)(3)".parse().unwrap();
        assert!(PlanePermutation::new(&s, Permutation::identity(3)).is_err());
    }
}
