//! Integer compositions and the consecutive blocks they cut `[n]` into.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A composition `(a_1, ..., a_k)` of `n` with strictly positive parts.
///
/// Block `i` is the interval of `[n]` of length `a_i` that starts right after
/// block `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Composition { parts })
    }

    /// The one-block composition `(n)`.
    pub fn single(n: usize) -> Result<Self> {
        Composition::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Zero-based element ranges of the blocks.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&a| {
                let r = start..start + a;
                start += a;
                r
            })
            .collect()
    }

    /// Block index of every zero-based element.
    pub fn block_map(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i, a))
            .collect()
    }

    /// The composition with part `i` (zero-based) decremented, or `None` when
    /// that part is 1 and would vanish.
    pub fn decrement(&self, i: usize) -> Option<Composition> {
        if self.parts[i] < 2 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        Some(Composition { parts })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `2,3,1` and `(2,3,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = parse_usize_list(inner)?;
        Composition::new(parts)
    }
}

/// Parses a comma-separated list of non-negative integers.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad list entry {t:?}: {e}")))
        })
        .collect()
}

/// All `2^(n-1)` compositions of `n >= 1`, ordered by their cut bitmask.
pub fn compositions(n: usize) -> impl Iterator<Item = Composition> {
    let count: u64 = if n == 0 { 0 } else { 1u64 << (n - 1) };
    (0..count).map(move |mask| {
        let mut parts = Vec::new();
        let mut run = 1;
        for bit in 0..n - 1 {
            if mask >> bit & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        Composition { parts }
    })
}

/// Compositions of `n` with exactly `k` parts.
pub fn compositions_with_parts(n: usize, k: usize) -> impl Iterator<Item = Composition> {
    compositions(n).filter(move |c| c.len() == k)
}
