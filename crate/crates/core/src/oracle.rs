//! Brute-force ground truth. Everything here is meant to be obviously
//! correct rather than fast, and shares no code path with the algorithms it
//! checks beyond the plain subsequence test.

use std::collections::{BTreeSet, HashSet};

use crate::enumgraph::{SeqPair, Side, Vertex};
use crate::error::{McsError, Result};
use crate::seq::{is_subsequence, Seq};

/// Default cap on the number of candidate strings an oracle may examine.
pub const DEFAULT_CANDIDATE_CAP: u128 = 2_000_000;

/// `s` contains every input and deleting any single position loses one of them.
pub fn brute_is_minimal(s: &Seq, inputs: &[Seq]) -> bool {
    if !inputs.iter().all(|x| is_subsequence(x, s)) {
        return false;
    }
    (1..=s.len()).all(|i| {
        let shorter = s.delete(i).expect("index in range");
        inputs.iter().any(|x| !is_subsequence(x, &shorter))
    })
}

fn union_alphabet(a: &Seq, b: &Seq) -> Vec<char> {
    a.iter()
        .chain(b.iter())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// All minimal common supersequences of `a` and `b` with length at most `max_len`.
///
/// Candidates are built symbol by symbol; a symbol is only appended when it
/// extends the greedy left match of `a` or of `b`. Every position of a minimal
/// common supersequence is the left-embedding image of some input position, so
/// no answer is pruned. Every full candidate is then checked with
/// [`brute_is_minimal`].
pub fn brute_mcs_set(a: &Seq, b: &Seq, max_len: usize) -> Result<BTreeSet<Seq>> {
    brute_mcs_set_capped(a, b, max_len, DEFAULT_CANDIDATE_CAP)
}

pub fn brute_mcs_set_capped(a: &Seq, b: &Seq, max_len: usize, cap: u128) -> Result<BTreeSet<Seq>> {
    let mut walk = Walk {
        inputs: [a.clone(), b.clone()],
        min_len: a.len().max(b.len()),
        max_len,
        cap,
        visited: 0,
        prefix: Vec::new(),
        out: BTreeSet::new(),
    };
    walk.step(0, 0)?;
    Ok(walk.out)
}

struct Walk {
    inputs: [Seq; 2],
    min_len: usize,
    max_len: usize,
    cap: u128,
    visited: u128,
    prefix: Vec<char>,
    out: BTreeSet<Seq>,
}

impl Walk {
    /// Extends the prefix, which has matched `ia` symbols of `a` and `ib` of `b` greedily.
    fn step(&mut self, ia: usize, ib: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(McsError::SearchSpaceTooLarge {
                candidates: self.visited,
                cap: self.cap,
            });
        }
        let [a, b] = &self.inputs;
        if ia == a.len() && ib == b.len() {
            if self.prefix.len() >= self.min_len {
                let cand = Seq::new(self.prefix.clone());
                if brute_is_minimal(&cand, &self.inputs) {
                    self.out.insert(cand);
                }
            }
            return Ok(());
        }
        if self.prefix.len() == self.max_len {
            return Ok(());
        }
        let (na, nb) = (a.get(ia + 1), b.get(ib + 1));
        let mut next: Vec<char> = [na, nb].into_iter().flatten().collect();
        next.sort_unstable();
        next.dedup();
        for c in next {
            self.prefix.push(c);
            self.step(
                ia + usize::from(na == Some(c)),
                ib + usize::from(nb == Some(c)),
            )?;
            self.prefix.pop();
        }
        Ok(())
    }
}

/// Same set as [`brute_mcs_set`], by testing every string over the union
/// alphabet with length in `max(|A|,|B|)..=max_len`.
pub fn brute_mcs_set_exhaustive(
    a: &Seq,
    b: &Seq,
    max_len: usize,
    cap: u128,
) -> Result<BTreeSet<Seq>> {
    let alphabet = union_alphabet(a, b);
    let min_len = a.len().max(b.len());
    let m = alphabet.len() as u128;
    let total: u128 = (min_len..=max_len)
        .map(|l| m.checked_pow(l as u32).unwrap_or(u128::MAX))
        .fold(0u128, |acc, x| acc.saturating_add(x));
    if total > cap {
        return Err(McsError::SearchSpaceTooLarge {
            candidates: total,
            cap,
        });
    }
    let inputs = [a.clone(), b.clone()];
    let mut out = BTreeSet::new();
    for len in min_len..=max_len {
        if alphabet.is_empty() {
            if len == 0 && brute_is_minimal(&Seq::empty(), &inputs) {
                out.insert(Seq::empty());
            }
            continue;
        }
        let mut digits = vec![0usize; len];
        loop {
            let cand: Seq = digits.iter().map(|&d| alphabet[d]).collect();
            if brute_is_minimal(&cand, &inputs) {
                out.insert(cand);
            }
            // odometer increment
            let mut k = len;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < alphabet.len() {
                    break;
                }
                digits[k] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// Definitional fill test: the open interval `(x, x_end)` of `x_str` fills the
/// index range `lo..=hi` of `y_str` (clipped to real indices).
pub fn brute_fills(x_str: &Seq, x: usize, x_end: usize, y_str: &Seq, lo: usize, hi: usize) -> bool {
    if x >= x_end || x_end > x_str.len() + 1 {
        return false;
    }
    let target = y_str.substring(lo, hi);
    let piece = x_str.substring(x + 1, x_end - 1);
    if !is_subsequence(&piece, &target) {
        return false;
    }
    let grow_left = x >= 1 && is_subsequence(&x_str.substring(x, x_end - 1), &target);
    let grow_right =
        x_end <= x_str.len() && is_subsequence(&x_str.substring(x + 1, x_end), &target);
    !grow_left && !grow_right
}

/// Out-edges of `v` by trying every `(y', x')` against the closed-fill and
/// open-fill conditions, with a non-empty label. Sorted by `(y', x')`.
pub fn brute_edges(pair: &SeqPair, v: Vertex) -> Vec<Vertex> {
    let x_str = pair.side(v.consumed);
    let y_str = pair.side(v.emit());
    let mut out = Vec::new();
    if !pair.is_valid(v) {
        return out;
    }
    for y_end in v.y..=y_str.len() + 1 {
        if v.y.max(1) > y_end.min(y_str.len()) {
            continue;
        }
        for x_end in v.x + 1..=x_str.len() + 1 {
            let closed = brute_fills(x_str, v.x, x_end, y_str, v.y, y_end);
            let open = brute_fills(x_str, v.x, x_end, y_str, v.y + 1, y_end);
            if closed && open {
                out.push(Vertex::new(v.emit(), y_end, x_end));
            }
        }
    }
    out
}

/// Vertices on some start-to-end path of the full graph, by forward and
/// backward reachability over [`brute_edges`].
pub fn brute_st_vertices(pair: &SeqPair) -> BTreeSet<Vertex> {
    let mut all = Vec::new();
    for side in [Side::A, Side::B] {
        let nx = pair.side(side).len();
        let ny = pair.side(side.other()).len();
        for x in 0..=nx + 1 {
            for y in 0..=ny + 1 {
                all.push(Vertex::new(side, x, y));
            }
        }
    }
    let edges: Vec<(Vertex, Vec<Vertex>)> =
        all.iter().map(|&v| (v, brute_edges(pair, v))).collect();

    let mut forward: HashSet<Vertex> = HashSet::new();
    let mut stack: Vec<Vertex> = pair.start_nodes().to_vec();
    while let Some(v) = stack.pop() {
        if forward.insert(v) {
            let (_, out) = edges.iter().find(|(u, _)| *u == v).expect("vertex listed");
            stack.extend(out.iter().copied());
        }
    }

    let mut backward: HashSet<Vertex> = pair.end_nodes().into_iter().collect();
    loop {
        let before = backward.len();
        for (v, out) in &edges {
            if out.iter().any(|w| backward.contains(w)) {
                backward.insert(*v);
            }
        }
        if backward.len() == before {
            break;
        }
    }

    forward.intersection(&backward).copied().collect()
}
