//! Reduction of a common supersequence of `k` strings in `O(N log N)`,
//! where `N` is the total input length.
//!
//! The output is grown in an [`OccString`]. All right-embedding positions
//! of all inputs are swept in one merged array; at each of them the owning
//! input asks the output for the next occurrence of the symbol after its
//! last matched position, and the symbol is appended only when no such
//! occurrence exists.

mod occ;

pub use occ::OccString;

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{McsError, Result};
use crate::seq::{right_embedding, Seq};

/// One right-embedding position of one input string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MergedREntry {
    /// 1-based position in the supersequence.
    pub s_index: usize,
    /// 0-based position of the input in the input list.
    pub string_id: usize,
}

/// Right-embedding images of every input, merged ascending by `s_index`.
/// Ties are ordered by ascending `string_id`.
pub fn merge_right_embeddings(s: &Seq, inputs: &[Seq]) -> Result<Vec<MergedREntry>> {
    let images = inputs
        .iter()
        .enumerate()
        .map(|(id, x)| {
            right_embedding(x, s).map(|e| e.into_image()).map_err(|_| {
                McsError::NotCommonSupersequence {
                    input: id,
                    text: x.to_string(),
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let total = images.iter().map(Vec::len).sum();
    let mut merged = Vec::with_capacity(total);
    let mut heap: BinaryHeap<Reverse<(usize, usize, usize)>> = images
        .iter()
        .enumerate()
        .filter_map(|(id, img)| img.first().map(|&p| Reverse((p, id, 0))))
        .collect();
    while let Some(Reverse((s_index, string_id, k))) = heap.pop() {
        merged.push(MergedREntry { s_index, string_id });
        if let Some(&next) = images[string_id].get(k + 1) {
            heap.push(Reverse((next, string_id, k + 1)));
        }
    }
    Ok(merged)
}

/// Operation counts of one [`reduce_k_with_stats`] run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReduceStats {
    pub find_next_calls: usize,
    pub inserts: usize,
    pub iterations: usize,
}

/// Loop state handed to observers at the start of each sweep iteration.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) struct LoopState<'a> {
    pub pos: usize,
    pub output: &'a OccString,
    pub last_left: &'a [usize],
    pub merged: &'a [MergedREntry],
    pub cursor: usize,
}

/// Reduces `s`, a common supersequence of every input, to a minimal common
/// supersequence that is a subsequence of `s`.
pub fn reduce_k(s: &Seq, inputs: &[Seq]) -> Result<Seq> {
    reduce_k_with_stats(s, inputs).map(|(out, _)| out)
}

/// [`reduce_k`] that also reports how much work the sweep did.
pub fn reduce_k_with_stats(s: &Seq, inputs: &[Seq]) -> Result<(Seq, ReduceStats)> {
    reduce_k_observed(s, inputs, |_| {})
}

pub(crate) fn reduce_k_observed<F>(
    s: &Seq,
    inputs: &[Seq],
    mut observe: F,
) -> Result<(Seq, ReduceStats)>
where
    F: FnMut(&LoopState<'_>),
{
    let mut output = OccString::new(s);
    let mut last_left = vec![0usize; inputs.len()];
    let merged = merge_right_embeddings(s, inputs)?;
    let mut stats = ReduceStats::default();

    let mut pos = 1;
    let mut cursor = 0;
    while pos <= s.len() {
        observe(&LoopState {
            pos,
            output: &output,
            last_left: &last_left,
            merged: &merged,
            cursor,
        });
        stats.iterations += 1;
        match merged.get(cursor) {
            Some(&MergedREntry { s_index, string_id }) if s_index == pos => {
                let c = s.at(pos);
                let next = output.find_next(c, last_left[string_id]);
                stats.find_next_calls += 1;
                if next == output.len() + 1 {
                    output.insert(c)?;
                    stats.inserts += 1;
                }
                last_left[string_id] = next;
                cursor += 1;
            }
            _ => pos += 1,
        }
    }
    Ok((output.build_str(s)?, stats))
}

/// A minimal common supersequence of all inputs, obtained by reducing their concatenation.
pub fn mcs_k(inputs: &[Seq]) -> Seq {
    reduce_k(&Seq::concat_all(inputs), inputs)
        .expect("the concatenation is a common supersequence of its parts")
}
