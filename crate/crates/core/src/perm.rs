//! Permutations of `[n]`, their cycle structure, and long cycles.
//!
//! Elements are 1-based in every public text format and in [`Permutation::apply`];
//! the stored image vector is 0-based.
//!
//! Composition acts on the left: `p.compose(&q)` maps `x` to `p(q(x))`.

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::partition::{IntegerPartition, PartitionSequence};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_zero_based(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection of [{n}]",
                    image.iter().map(|x| x + 1).collect::<Vec<_>>()
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds from 1-based one-line notation, `[3, 1, 2]` meaning 1->3, 2->1, 3->2.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("element 0 in one-line form".into()));
        }
        Permutation::from_zero_based(images.iter().map(|&v| v - 1).collect())
    }

    /// Builds from disjoint 1-based cycles on `[n]`; omitted elements are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "bad or repeated element {x} in cycles on [{n}]"
                    )));
                }
                seen[x - 1] = true;
                image[x - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { image })
    }

    /// The long cycle `(w_0 w_1 ... w_{n-1})` from a 0-based word.
    pub(crate) fn from_word_zero_based(word: &[usize]) -> Self {
        let n = word.len();
        let mut image = vec![0; n];
        for i in 0..n {
            image[word[i]] = word[(i + 1) % n];
        }
        Permutation { image }
    }

    /// The canonical permutation of type `lambda`: cycles of non-increasing
    /// length on consecutive integers, `(1 .. l_1)(l_1+1 .. l_1+l_2)...`.
    pub fn representative(lambda: &IntegerPartition) -> Self {
        let mut image = Vec::with_capacity(lambda.n());
        let mut start = 0;
        for &len in lambda.parts() {
            for i in 0..len {
                image.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation { image }
    }

    /// `(1 2 ... n)`.
    pub fn standard_long_cycle(n: usize) -> Self {
        Permutation {
            image: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// 0-based image slice.
    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    /// Image of the 1-based element `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1] + 1
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// 0-based cycles, each starting at its minimum, sorted by minimum.
    pub fn cycles_zero_based(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Canonical 1-based cycle list.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_zero_based()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x + 1).collect())
            .collect()
    }

    /// `C(p)`, the number of disjoint cycles (fixed points included).
    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if !seen[start] {
                count += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.image[x];
                }
            }
        }
        count
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        IntegerPartition::from_parts(self.cycles_zero_based().iter().map(Vec::len).collect())
    }

    pub fn is_even(&self) -> bool {
        (self.n() - self.cycle_count()).is_multiple_of(2)
    }

    pub fn is_long_cycle(&self) -> bool {
        self.cycle_count() == 1
    }

    /// True iff every cycle stays inside one block of `alpha`.
    pub fn is_alpha_separated(&self, alpha: &Composition) -> bool {
        if alpha.n() != self.n() {
            return false;
        }
        let block = alpha.block_map();
        self.image.iter().enumerate().all(|(x, &y)| block[x] == block[y])
    }

    /// The sequence of cycle types induced on the blocks of `alpha`.
    pub fn alpha_type(&self, alpha: &Composition) -> Result<PartitionSequence> {
        if alpha.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: alpha.n(),
            });
        }
        if !self.is_alpha_separated(alpha) {
            return Err(Error::NotSeparated(alpha.to_string()));
        }
        let block = alpha.block_map();
        let mut lengths = vec![Vec::new(); alpha.len()];
        for cycle in self.cycles_zero_based() {
            lengths[block[cycle[0]]].push(cycle.len());
        }
        let seq = lengths.into_iter().map(IntegerPartition::from_parts).collect();
        PartitionSequence::new(alpha.clone(), seq)
    }

    /// Number of cycles inside each block of `alpha`.
    pub fn d_vector(&self, alpha: &Composition) -> Result<Vec<usize>> {
        Ok(self.alpha_type(alpha)?.lengths())
    }

    /// Lexicographic rank of the one-line form among all `n!` permutations.
    pub fn rank(&self) -> usize {
        rank_zero_based(&self.image)
    }

    pub fn unrank(n: usize, mut index: usize) -> Permutation {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut image = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial_usize(i);
            image.push(pool.remove(index / f));
            index %= f;
        }
        Permutation { image }
    }

    /// One-line form, 1-based, space separated.
    pub fn one_line(&self) -> String {
        self.image
            .iter()
            .map(|v| (v + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn factorial_usize(n: usize) -> usize {
    (1..=n).product()
}

pub(crate) fn rank_zero_based(image: &[usize]) -> usize {
    let n = image.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = image[i + 1..].iter().filter(|&&v| v < image[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// `p(q(x))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn cycle_type(p: &Permutation) -> IntegerPartition {
    p.cycle_type()
}

impl fmt::Display for Permutation {
    /// Canonical cycle form including fixed points, e.g. `(1 3)(2)(4 5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts cycle form `(1 2 3)(4)` (size = largest element) or one-line
    /// form `3 1 2` / `3,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            parse_cycles(s, None)
        } else {
            let images = s
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad element {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if images.is_empty() {
                return Err(Error::Parse("empty permutation".into()));
            }
            Permutation::from_one_line(&images)
        }
    }
}

/// Parses cycle notation; `n` defaults to the largest element mentioned.
pub fn parse_cycles(s: &str, n: Option<usize>) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
        let cycle = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad element {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if cycle.is_empty() {
            return Err(Error::Parse(format!("empty cycle in {s:?}")));
        }
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    let max = cycles.iter().flatten().copied().max().unwrap_or(0);
    let n = n.unwrap_or(max);
    if max > n {
        return Err(Error::SizeMismatch { left: n, right: max });
    }
    if n == 0 {
        return Err(Error::Parse("empty permutation".into()));
    }
    Permutation::from_cycles(n, &cycles)
}

/// Iterator over all `(n-1)!` long cycles on `[n]`, in lexicographic order of
/// the cycle word `(1, w_2, ..., w_n)`.
#[derive(Clone, Debug)]
pub struct LongCycles {
    word: Vec<usize>,
    done: bool,
}

impl LongCycles {
    pub fn new(n: usize) -> Self {
        LongCycles {
            word: (0..n).collect(),
            done: n == 0,
        }
    }

    /// Starts at the long cycle with the given index.
    pub fn starting_at(n: usize, index: usize) -> Self {
        let done = n == 0 || index >= factorial_usize(n.saturating_sub(1));
        let word = if done {
            Vec::new()
        } else {
            long_cycle_word(n, index)
        };
        LongCycles { word, done }
    }

    /// Advances the word in place; returns false past the last cycle.
    pub(crate) fn advance_word(word: &mut [usize]) -> bool {
        next_permutation(&mut word[1..])
    }
}

impl Iterator for LongCycles {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let p = Permutation::from_word_zero_based(&self.word);
        if !Self::advance_word(&mut self.word) {
            self.done = true;
        }
        Some(p)
    }
}

pub fn long_cycle_iter(n: usize) -> LongCycles {
    LongCycles::new(n)
}

/// 0-based cycle word (starting with 0) of the long cycle with lexicographic index `index`.
pub fn long_cycle_word(n: usize, index: usize) -> Vec<usize> {
    let tail = Permutation::unrank(n - 1, index);
    std::iter::once(0)
        .chain(tail.as_slice().iter().map(|&v| v + 1))
        .collect()
}

/// Standard lexicographic successor; false when `v` was the last arrangement.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All `n!` permutations of `[n]` in lexicographic order of the one-line form.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let cur = current.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            current = Some(next);
        }
        Some(Permutation { image: cur })
    })
}
