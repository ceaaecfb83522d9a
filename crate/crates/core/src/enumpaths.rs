//! Enumeration and counting of all minimal common supersequences of two strings.
//!
//! The common prefix of the inputs is stripped first; every answer is that
//! prefix followed by an answer for the two suffixes. The suffixes are
//! enumerated as labels of start-to-end paths of [`EnumGraph`] by a
//! depth-first search that recomputes out-edges on demand and abandons a
//! vertex once its largest useful `y'` has been passed, so every step of
//! the search leads to an output within `O(|A| + |B|)` work.

use num_bigint::BigUint;

use crate::enumgraph::{build_st_subgraph, EdgeCursor, EnumGraph, SeqPair, Vertex};
use crate::seq::{longest_common_prefix, Seq};

struct Frame {
    v: Vertex,
    cursor: EdgeCursor,
    limit: usize,
    base_len: usize,
}

enum Mode {
    /// A single answer known without a graph; `None` once emitted.
    Single(Option<Seq>),
    Graph {
        graph: EnumGraph,
        stack: Vec<Frame>,
        next_start: usize,
    },
}

/// Pull-based stream of every minimal common supersequence of two strings.
///
/// Order is deterministic: paths from `(A,0,B,0)` precede those from
/// `(B,0,A,0)`, and out-edges are taken by ascending `y'`.
pub struct McsEnumerator {
    mode: Mode,
    buffer: Vec<char>,
    steps: u64,
    last_delay: u64,
}

impl McsEnumerator {
    pub fn new(a: &Seq, b: &Seq) -> Self {
        let p = longest_common_prefix(a, b);
        let x = a.substring(p + 1, a.len());
        let y = b.substring(p + 1, b.len());
        let mode = if y.is_empty() {
            Mode::Single(Some(a.clone()))
        } else if x.is_empty() {
            Mode::Single(Some(b.clone()))
        } else {
            let graph = build_st_subgraph(&x, &y).expect("suffixes share no common prefix");
            Mode::Graph {
                graph,
                stack: Vec::new(),
                next_start: 0,
            }
        };
        McsEnumerator {
            mode,
            buffer: a.as_slice()[..p].to_vec(),
            steps: 0,
            last_delay: 0,
        }
    }

    /// The graph over the stripped suffixes, when one was needed.
    pub fn graph(&self) -> Option<&EnumGraph> {
        match &self.mode {
            Mode::Graph { graph, .. } => Some(graph),
            Mode::Single(_) => None,
        }
    }

    /// Recurrence and backtrack steps spent between the previous output and the last one.
    pub fn last_delay(&self) -> u64 {
        self.last_delay
    }

    /// Steps spent since the last output.
    pub fn pending_steps(&self) -> u64 {
        self.steps
    }

    fn push_frame(graph: &EnumGraph, stack: &mut Vec<Frame>, v: Vertex, base_len: usize) {
        let limit = graph
            .max_target_y(v)
            .expect("only inner vertices of the subgraph are pushed");
        stack.push(Frame {
            v,
            cursor: EdgeCursor::new(graph.pair(), v),
            limit,
            base_len,
        });
    }

    fn advance(&mut self) -> Option<Seq> {
        let Mode::Graph {
            graph,
            stack,
            next_start,
        } = &mut self.mode
        else {
            unreachable!()
        };
        let pair: &SeqPair = graph.pair();
        loop {
            let Some(frame) = stack.last_mut() else {
                let starts = pair.start_nodes();
                while *next_start < starts.len() && !graph.contains(starts[*next_start]) {
                    *next_start += 1;
                }
                let &start = starts.get(*next_start)?;
                *next_start += 1;
                let base = self.buffer.len();
                Self::push_frame(graph, stack, start, base);
                continue;
            };

            if frame.cursor.peek_y().is_none_or(|y| y > frame.limit) {
                self.buffer.truncate(frame.base_len);
                stack.pop();
                self.steps += 1;
                continue;
            }
            let Some((y_end, x_end)) = frame.cursor.next_edge(pair, &mut self.steps) else {
                continue;
            };
            let v = frame.v;
            let target = Vertex::new(v.emit(), y_end, x_end);
            if !graph.contains(target) {
                continue;
            }
            let base_len = frame.base_len;
            self.buffer.truncate(base_len);
            let y_str = pair.side(v.emit());
            let lo = v.y.max(1);
            let hi = y_end.min(y_str.len());
            self.buffer.extend_from_slice(&y_str.as_slice()[lo - 1..hi]);
            if pair.is_end(target) {
                return Some(Seq::new(self.buffer.clone()));
            }
            let len = self.buffer.len();
            Self::push_frame(graph, stack, target, len);
        }
    }
}

impl Iterator for McsEnumerator {
    type Item = Seq;

    fn next(&mut self) -> Option<Seq> {
        let out = match &mut self.mode {
            Mode::Single(s) => {
                self.steps += 1;
                s.take()
            }
            Mode::Graph { .. } => self.advance(),
        };
        if out.is_some() {
            self.last_delay = self.steps;
            self.steps = 0;
        }
        out
    }
}

/// Every minimal common supersequence of `a` and `b`, each exactly once.
pub fn enumerate_mcs(a: &Seq, b: &Seq) -> McsEnumerator {
    McsEnumerator::new(a, b)
}

/// Per-output delays (recurrence steps plus backtrack steps since the
/// previous output) for at most `limit` outputs.
pub fn delay_probe(a: &Seq, b: &Seq, limit: Option<usize>) -> Vec<u64> {
    let mut e = McsEnumerator::new(a, b);
    let mut delays = Vec::new();
    while limit.is_none_or(|l| delays.len() < l) {
        if e.next().is_none() {
            break;
        }
        delays.push(e.last_delay());
    }
    delays
}

/// Exact number of minimal common supersequences of `a` and `b`.
pub fn count_mcs(a: &Seq, b: &Seq) -> BigUint {
    let e = McsEnumerator::new(a, b);
    match e.graph() {
        None => BigUint::from(1u32),
        Some(g) => count_paths(g),
    }
}

/// Number of start-to-end paths of `graph`.
pub fn count_paths(graph: &EnumGraph) -> BigUint {
    let pair = graph.pair();
    let mut memo: Vec<Option<BigUint>> = vec![None; pair.vertex_slots()];
    for v in pair.end_nodes() {
        if graph.contains(v) {
            memo[pair.index(v)] = Some(BigUint::from(1u32));
        }
    }

    let mut total = BigUint::default();
    for start in pair.start_nodes() {
        if !graph.contains(start) {
            continue;
        }
        // post-order over the subgraph; children are summed once all are known
        let mut stack = vec![(start, false)];
        while let Some((v, expanded)) = stack.pop() {
            let idx = pair.index(v);
            if memo[idx].is_some() {
                continue;
            }
            if expanded {
                let sum = graph
                    .st_edges_from(v)
                    .map(|e| memo[pair.index(e.target)].as_ref().expect("child counted"))
                    .sum();
                memo[idx] = Some(sum);
            } else {
                stack.push((v, true));
                for e in graph.st_edges_from(v) {
                    if memo[pair.index(e.target)].is_none() {
                        stack.push((e.target, false));
                    }
                }
            }
        }
        total += memo[pair.index(start)].as_ref().expect("start counted");
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn s(x: &str) -> Seq {
        Seq::from(x)
    }

    fn all(a: &str, b: &str) -> Vec<String> {
        enumerate_mcs(&s(a), &s(b)).map(|x| x.to_string()).collect()
    }

    #[test]
    fn two_letters() {
        assert_eq!(all("a", "b"), vec!["ba", "ab"]);
        assert_eq!(count_mcs(&s("a"), &s("b")), BigUint::from(2u32));
        assert_eq!(delay_probe(&s("a"), &s("b"), None).len(), 2);
    }

    #[test]
    fn identical_inputs() {
        assert_eq!(all("abc", "abc"), vec!["abc"]);
        assert_eq!(all("", ""), vec![""]);
        assert_eq!(count_mcs(&s("abc"), &s("abc")), BigUint::from(1u32));
        assert_eq!(delay_probe(&s("abc"), &s("abc"), None).len(), 1);
    }

    #[test]
    fn containment() {
        assert_eq!(all("ac", "abc"), vec!["abc"]);
        assert_eq!(all("abc", ""), vec!["abc"]);
        assert_eq!(all("", "xy"), vec!["xy"]);
        // not a prefix, still contained
        assert_eq!(all("bc", "abc"), vec!["abc"]);
    }

    #[test]
    fn intro_example() {
        let got: BTreeSet<_> = all("xay", "zaw").into_iter().collect();
        assert!(got.contains("xayzaw"));
        assert_eq!(got.len(), 8);
    }

    #[test]
    fn block_example() {
        let a = s("accdabcdcdab");
        let b = s("bcbabcdcdcdd");
        let target = s("accdbcbabcdcdabcdd");
        assert!(enumerate_mcs(&a, &b).any(|x| x == target));
    }

    #[test]
    fn count_matches_stream() {
        for (a, b) in [("bacba", "abcca"), ("abab", "acbcb"), ("aab", "bba")] {
            let n = enumerate_mcs(&s(a), &s(b)).count();
            assert_eq!(count_mcs(&s(a), &s(b)), BigUint::from(n));
        }
    }

    #[test]
    fn limit_truncates_probe() {
        assert_eq!(delay_probe(&s("xay"), &s("zaw"), Some(3)).len(), 3);
    }
}
