//! Linear-time reduction of a common supersequence of two strings to a
//! minimal one.
//!
//! The sweep walks `S` left to right while tracking, for each input, the
//! next position of its right embedding into `S` and the last position of
//! its left embedding into the surviving string. A position survives only
//! if it is where some input's left embedding lands, which makes it
//! essential for that input.

use crate::error::{McsError, Result};
use crate::seq::{right_embedding, Seq};

/// Ascending indices of `s` used by the right embedding of `x`.
pub fn build_right_embedding_image(s: &Seq, x: &Seq) -> Result<Vec<usize>> {
    Ok(right_embedding(x, s)?.into_image())
}

/// Per-input cursor of the sweep.
struct Tracker<'a> {
    input: &'a Seq,
    /// right-embedding image followed by the `|S|+1` sentinel
    right: Vec<usize>,
    /// next input position to match (1-based)
    next: usize,
    /// last left-embedding position in the surviving string
    last_left: usize,
}

impl<'a> Tracker<'a> {
    fn new(s: &Seq, input: &'a Seq, id: usize) -> Result<Self> {
        let mut right = build_right_embedding_image(s, input).map_err(|_| {
            McsError::NotCommonSupersequence {
                input: id,
                text: input.to_string(),
            }
        })?;
        right.push(s.len() + 1);
        Ok(Tracker {
            input,
            right,
            next: 1,
            last_left: 0,
        })
    }

    /// Advances the left embedding when `pos` is the right-embedding position
    /// of the next unmatched input symbol.
    fn step(&mut self, s: &Seq, deleted: &[bool], pos: usize) {
        if pos != self.right[self.next - 1] {
            return;
        }
        let want = self.input.at(self.next);
        self.last_left += 1;
        while deleted[self.last_left] || s.at(self.last_left) != want {
            self.last_left += 1;
        }
        self.next += 1;
    }
}

/// Reduces `s`, a common supersequence of `a` and `b`, to a minimal common
/// supersequence that is a subsequence of `s`. `O(|S|)`.
pub fn reduce_two(s: &Seq, a: &Seq, b: &Seq) -> Result<Seq> {
    reduce_two_observed(s, a, b, |_, _| {})
}

/// [`reduce_two`] with a hook called at the start of every sweep iteration
/// with the current position and the deletion marks (index 0 unused).
pub(crate) fn reduce_two_observed<F>(s: &Seq, a: &Seq, b: &Seq, mut observe: F) -> Result<Seq>
where
    F: FnMut(usize, &[bool]),
{
    let mut ta = Tracker::new(s, a, 0)?;
    let mut tb = Tracker::new(s, b, 1)?;
    let mut deleted = vec![false; s.len() + 1];

    for pos in 1..=s.len() {
        observe(pos, &deleted);
        ta.step(s, &deleted, pos);
        tb.step(s, &deleted, pos);
        if ta.last_left != pos && tb.last_left != pos {
            deleted[pos] = true;
        }
    }

    Ok((1..=s.len())
        .filter(|&i| !deleted[i])
        .map(|i| s.at(i))
        .collect())
}

/// A minimal common supersequence of `a` and `b`, obtained by reducing `a·b`.
pub fn mcs_two(a: &Seq, b: &Seq) -> Seq {
    reduce_two(&a.concat(b), a, b).expect("a·b is a common supersequence of a and b")
}
