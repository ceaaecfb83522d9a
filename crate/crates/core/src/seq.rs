//! Sequences, extended index intervals and subsequence embeddings.
//!
//! All positions handed out by this module are 1-based. Position `0` and
//! `len + 1` are the virtual sentinels of a sequence; they are valid as
//! interval endpoints and as embedding values but never hold a symbol.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{McsError, Result};

/// An immutable sequence of symbols, addressed 1-based.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seq {
    symbols: Vec<char>,
}

impl Seq {
    pub fn new(symbols: Vec<char>) -> Self {
        Seq { symbols }
    }

    pub fn empty() -> Self {
        Seq::default()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-based position `i`.
    ///
    /// Panics when `i` is a sentinel (`0` or `len + 1`) or beyond.
    #[inline]
    pub fn at(&self, i: usize) -> char {
        assert!(
            i >= 1 && i <= self.len(),
            "position {i} is outside 1..={}",
            self.len()
        );
        self.symbols[i - 1]
    }

    /// Symbol at 1-based position `i`, or `None` for sentinels and out-of-range positions.
    #[inline]
    pub fn get(&self, i: usize) -> Option<char> {
        if i == 0 {
            None
        } else {
            self.symbols.get(i - 1).copied()
        }
    }

    pub fn as_slice(&self) -> &[char] {
        &self.symbols
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.symbols.iter().copied()
    }

    /// `S[i..=j]` with 1-based inclusive bounds; empty when `j < i`.
    /// Bounds are clipped to the indices of the sequence.
    pub fn substring(&self, i: usize, j: usize) -> Seq {
        let lo = i.max(1);
        let hi = j.min(self.len());
        if lo > hi {
            Seq::empty()
        } else {
            Seq::new(self.symbols[lo - 1..hi].to_vec())
        }
    }

    /// The sequence with position `i` removed.
    pub fn delete(&self, i: usize) -> Result<Seq> {
        if i == 0 || i > self.len() {
            return Err(McsError::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        let mut symbols = self.symbols.clone();
        symbols.remove(i - 1);
        Ok(Seq::new(symbols))
    }

    pub fn concat(&self, other: &Seq) -> Seq {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Seq::new(symbols)
    }

    /// Concatenation of all parts, in order.
    pub fn concat_all<'a, I: IntoIterator<Item = &'a Seq>>(parts: I) -> Seq {
        let mut symbols = Vec::new();
        for p in parts {
            symbols.extend_from_slice(&p.symbols);
        }
        Seq::new(symbols)
    }

    pub fn into_vec(self) -> Vec<char> {
        self.symbols
    }
}

impl From<&str> for Seq {
    fn from(s: &str) -> Self {
        Seq::new(s.chars().collect())
    }
}

impl From<String> for Seq {
    fn from(s: String) -> Self {
        Seq::from(s.as_str())
    }
}

impl From<Vec<char>> for Seq {
    fn from(symbols: Vec<char>) -> Self {
        Seq::new(symbols)
    }
}

impl FromStr for Seq {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(Seq::from(s))
    }
}

impl FromIterator<char> for Seq {
    fn from_iter<I: IntoIterator<Item = char>>(iter: I) -> Self {
        Seq::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Whether an interval endpoint belongs to the interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Closed,
    Open,
}

/// An interval over the extended positions `[0, len + 1]` of one sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtInterval {
    pub left: usize,
    pub right: usize,
    pub left_bound: Bound,
    pub right_bound: Bound,
}

impl ExtInterval {
    pub fn new(left: usize, left_bound: Bound, right: usize, right_bound: Bound) -> Self {
        ExtInterval {
            left,
            right,
            left_bound,
            right_bound,
        }
    }

    /// `[l, r]`
    pub fn closed(left: usize, right: usize) -> Self {
        Self::new(left, Bound::Closed, right, Bound::Closed)
    }

    /// `(l, r)`
    pub fn open(left: usize, right: usize) -> Self {
        Self::new(left, Bound::Open, right, Bound::Open)
    }

    /// `[l, r)`
    pub fn closed_open(left: usize, right: usize) -> Self {
        Self::new(left, Bound::Closed, right, Bound::Open)
    }

    /// `(l, r]`
    pub fn open_closed(left: usize, right: usize) -> Self {
        Self::new(left, Bound::Open, right, Bound::Closed)
    }

    /// `⟨X⟩ = [0, len + 1]`, the full extended range of a sequence of length `len`.
    pub fn full(len: usize) -> Self {
        Self::closed(0, len + 1)
    }

    /// The integer points of the interval, ignoring which of them are real indices.
    fn points(&self) -> Option<(usize, usize)> {
        let lo = match self.left_bound {
            Bound::Closed => self.left,
            Bound::Open => self.left + 1,
        };
        let hi = match self.right_bound {
            Bound::Closed => self.right,
            Bound::Open => self.right.checked_sub(1)?,
        };
        (lo <= hi).then_some((lo, hi))
    }

    /// The indices `1..=len` of a sequence of length `len` contained in the interval.
    /// The range is empty when the interval contains no indices.
    pub fn indices(&self, len: usize) -> RangeInclusive<usize> {
        match self.points() {
            Some((lo, hi)) => {
                let lo = lo.max(1);
                let hi = hi.min(len);
                if lo <= hi {
                    lo..=hi
                } else {
                    empty_range()
                }
            }
            None => empty_range(),
        }
    }

    pub fn contains_no_indices(&self, len: usize) -> bool {
        self.indices(len).is_empty()
    }

    /// Substring of `s` formed by the indices in this interval.
    pub fn slice(&self, s: &Seq) -> Seq {
        let r = self.indices(s.len());
        if r.is_empty() {
            Seq::empty()
        } else {
            s.substring(*r.start(), *r.end())
        }
    }

    /// True when both endpoints lie in `[0, len + 1]`.
    pub fn within(&self, len: usize) -> bool {
        self.left <= len + 1 && self.right <= len + 1
    }
}

#[allow(clippy::reversed_empty_ranges)]
fn empty_range() -> RangeInclusive<usize> {
    1..=0
}

/// A strictly increasing map from the positions of `X` into the positions of `S`.
///
/// Only the image is materialized; the sentinels `0 ↦ 0` and `|X|+1 ↦ |S|+1`
/// are answered by [`EmbeddingMap::get`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingMap {
    image: Vec<usize>,
    target_len: usize,
}

impl EmbeddingMap {
    /// Builds a map from an image. Returns `None` unless the image is strictly
    /// increasing, lies in `1..=target_len`, and matches symbol for symbol.
    pub fn from_image(x: &Seq, s: &Seq, image: Vec<usize>) -> Option<Self> {
        if image.len() != x.len() {
            return None;
        }
        let mut prev = 0;
        for (k, &p) in image.iter().enumerate() {
            if p <= prev || p > s.len() || s.at(p) != x.at(k + 1) {
                return None;
            }
            prev = p;
        }
        Some(EmbeddingMap {
            image,
            target_len: s.len(),
        })
    }

    /// Image of position `i` in `0..=|X|+1`.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else if i == self.image.len() + 1 {
            self.target_len + 1
        } else {
            self.image[i - 1]
        }
    }

    /// Ascending image `[Φ(1), …, Φ(|X|)]`.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    pub fn source_len(&self) -> usize {
        self.image.len()
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }
}

/// Greedy left-to-right test of `x ⊆ s`.
pub fn is_subsequence(x: &Seq, s: &Seq) -> bool {
    let mut it = s.iter();
    x.iter().all(|c| it.any(|d| d == c))
}

fn not_subsequence(x: &Seq, s: &Seq) -> McsError {
    McsError::NotSubsequence {
        needle: x.to_string(),
        haystack: s.to_string(),
    }
}

/// The pointwise smallest embedding of `x` into `s`.
pub fn left_embedding(x: &Seq, s: &Seq) -> Result<EmbeddingMap> {
    let mut image = Vec::with_capacity(x.len());
    let mut p = 0;
    for c in x.iter() {
        p += 1;
        while p <= s.len() && s.at(p) != c {
            p += 1;
        }
        if p > s.len() {
            return Err(not_subsequence(x, s));
        }
        image.push(p);
    }
    Ok(EmbeddingMap {
        image,
        target_len: s.len(),
    })
}

/// The pointwise largest embedding of `x` into `s`, matched greedily from the right.
pub fn right_embedding(x: &Seq, s: &Seq) -> Result<EmbeddingMap> {
    let mut image = vec![0; x.len()];
    // p is one past the next candidate position
    let mut p = s.len() + 1;
    for k in (1..=x.len()).rev() {
        let c = x.at(k);
        p -= 1;
        while p >= 1 && s.at(p) != c {
            p -= 1;
        }
        if p == 0 {
            return Err(not_subsequence(x, s));
        }
        image[k - 1] = p;
    }
    Ok(EmbeddingMap {
        image,
        target_len: s.len(),
    })
}

/// Length of the longest common prefix of `a` and `b`.
pub fn longest_common_prefix(a: &Seq, b: &Seq) -> usize {
    a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count()
}
