//! The supersequence graph whose start-to-end paths spell out the minimal
//! common supersequences of two strings.
//!
//! A vertex `(X, x, Y, y)` records that `X` has been consumed through the
//! open cursor `x` and that the next block is copied from `Y` starting at
//! position `y`. An edge to `(Y, y', X, x')` copies `Y[y..=y']` and lets
//! the open interval `(x, x')` of `X` be absorbed by it: `(x, x')` must fill
//! both `Y[y..=y']` and `Y[y+1..=y']`, i.e. it is the largest piece of `X`
//! starting after `x` that embeds there, and it cannot be extended to the
//! left.
//!
//! Edges are never materialized. They are recomputed on demand from four
//! fill-bound rows that advance together one `y'` at a time, so a vertex's
//! out-edges cost `O(|Y|)` and the graph needs `O(|A|·|B|)` space.

use std::fmt::{self, Write as _};

use crate::error::{McsError, Result};
use crate::seq::{longest_common_prefix, ExtInterval, Seq};

/// Which of the two input strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// The pair of strings a graph is built over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqPair {
    pub a: Seq,
    pub b: Seq,
}

impl SeqPair {
    pub fn new(a: Seq, b: Seq) -> Self {
        SeqPair { a, b }
    }

    pub fn side(&self, side: Side) -> &Seq {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    /// Number of vertex slots, `2 · (|A|+2) · (|B|+2)`.
    pub fn vertex_slots(&self) -> usize {
        2 * (self.a.len() + 2) * (self.b.len() + 2)
    }

    pub fn start_nodes(&self) -> [Vertex; 2] {
        [Vertex::new(Side::A, 0, 0), Vertex::new(Side::B, 0, 0)]
    }

    pub fn end_nodes(&self) -> [Vertex; 2] {
        let (na, nb) = (self.a.len(), self.b.len());
        [
            Vertex::new(Side::A, na + 1, nb + 1),
            Vertex::new(Side::B, nb + 1, na + 1),
        ]
    }

    pub fn is_end(&self, v: Vertex) -> bool {
        v.x == self.side(v.consumed).len() + 1 && v.y == self.side(v.emit()).len() + 1
    }

    /// Dense index of `v` in `0..vertex_slots()`.
    pub fn index(&self, v: Vertex) -> usize {
        let (na, nb) = (self.a.len(), self.b.len());
        match v.consumed {
            Side::A => v.x * (nb + 2) + v.y,
            Side::B => (na + 2) * (nb + 2) + v.x * (na + 2) + v.y,
        }
    }

    pub fn vertex_at(&self, idx: usize) -> Vertex {
        let (na, nb) = (self.a.len(), self.b.len());
        let half = (na + 2) * (nb + 2);
        if idx < half {
            Vertex::new(Side::A, idx / (nb + 2), idx % (nb + 2))
        } else {
            let r = idx - half;
            Vertex::new(Side::B, r / (na + 2), r % (na + 2))
        }
    }

    /// True when `v`'s cursors lie in the extended ranges of their strings.
    pub fn is_valid(&self, v: Vertex) -> bool {
        v.x <= self.side(v.consumed).len() + 1 && v.y <= self.side(v.emit()).len() + 1
    }
}

/// A vertex `(X, x, Y, y)`: `X` is the `consumed` side, `Y` the other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub consumed: Side,
    pub x: usize,
    pub y: usize,
}

impl Vertex {
    pub fn new(consumed: Side, x: usize, y: usize) -> Self {
        Vertex { consumed, x, y }
    }

    /// The side the next edge label is copied from.
    pub fn emit(&self) -> Side {
        self.consumed.other()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})",
            self.consumed,
            self.x,
            self.emit(),
            self.y
        )
    }
}

/// An edge `(X, x, Y, y) → (Y, y', X, x')` labelled by `Y[[y, y'+1)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: Vertex,
    pub target: Vertex,
    pub label: ExtInterval,
}

impl Edge {
    fn new(source: Vertex, y_end: usize, x_end: usize) -> Self {
        Edge {
            source,
            target: Vertex::new(source.emit(), y_end, x_end),
            label: ExtInterval::closed_open(source.y, y_end + 1),
        }
    }

    pub fn label_text(&self, pair: &SeqPair) -> Seq {
        self.label.slice(pair.side(self.source.emit()))
    }
}

/// `l(x, ·)`: the largest `x'` such that `X[x+1..x'-1]` embeds into `Y[lo..=hi]`.
/// Positions of `Y` outside `1..=|Y|` contribute nothing; the result is at most `|X|+1`.
pub fn fill_bound(x_str: &Seq, y_str: &Seq, x: usize, lo: usize, hi: usize) -> usize {
    let mut l = x + 1;
    for j in lo.max(1)..=hi.min(y_str.len()) {
        l = advance_bound(x_str, l, y_str.at(j));
    }
    l
}

#[inline]
fn advance_bound(x_str: &Seq, l: usize, c: char) -> usize {
    if l <= x_str.len() && x_str.at(l) == c {
        l + 1
    } else {
        l
    }
}

/// Streams `l(x, y, y')` for `y' = y-1, y, y+1, …, |Y|+1`, one recurrence step per item.
pub fn fill_bound_row<'a>(
    x_str: &'a Seq,
    y_str: &'a Seq,
    x: usize,
    y: usize,
) -> impl Iterator<Item = usize> + 'a {
    let steps = y_str.len() + 3 - y.min(y_str.len() + 2);
    (0..steps).scan(x + 1, move |l, k| {
        if k > 0 {
            // y' = y - 1 + k
            if let Some(c) = y_str.get(y + k - 1) {
                *l = advance_bound(x_str, *l, c);
            }
        }
        Some(*l)
    })
}

/// Whether the open interval `(x, x')` of `x_str` fills `j` in `y_str`: `X[(x, x')]`
/// embeds into `Y[j]` and no larger interval around it does.
pub fn fills(x_str: &Seq, x: usize, x_end: usize, y_str: &Seq, j: ExtInterval) -> bool {
    if x >= x_end || x_end > x_str.len() + 1 {
        return false;
    }
    let r = j.indices(y_str.len());
    let (lo, hi) = if r.is_empty() {
        (1, 0)
    } else {
        (*r.start(), *r.end())
    };
    fill_bound(x_str, y_str, x, lo, hi) == x_end
        && (x == 0 || fill_bound(x_str, y_str, x - 1, lo, hi) < x_end)
}

/// Incremental out-edge enumeration for one vertex.
///
/// Keeps `l(x, y, y')`, `l(x-1, y, y')`, `l(x, y+1, y')` and `l(x-1, y+1, y')`
/// for the current `y'`; each step consumes `Y[y'+1]` into all four.
#[derive(Debug, Clone)]
pub(crate) struct EdgeCursor {
    v: Vertex,
    y_end: usize,
    rows: [usize; 4],
    has_prev: bool,
    fresh: bool,
    done: bool,
}

impl EdgeCursor {
    pub(crate) fn new(pair: &SeqPair, v: Vertex) -> Self {
        let x_str = pair.side(v.consumed);
        let y_str = pair.side(v.emit());
        let done = v.x > x_str.len() || v.y > y_str.len() || y_str.is_empty();
        let has_prev = v.x >= 1;
        let mut rows = [v.x + 1, v.x, v.x + 1, v.x];
        if !done {
            if let Some(c) = y_str.get(v.y) {
                rows[0] = advance_bound(x_str, rows[0], c);
                if has_prev {
                    rows[1] = advance_bound(x_str, rows[1], c);
                }
            }
        }
        EdgeCursor {
            v,
            y_end: v.y,
            rows,
            has_prev,
            fresh: true,
            done,
        }
    }

    /// The `y'` the cursor will examine next, if any.
    pub(crate) fn peek_y(&self) -> Option<usize> {
        if self.done {
            None
        } else if self.fresh {
            Some(self.y_end)
        } else {
            Some(self.y_end + 1)
        }
    }

    /// Next `(y', x')` with an edge, ascending in `y'`. Each examined `y'` adds one to `steps`.
    pub(crate) fn next_edge(&mut self, pair: &SeqPair, steps: &mut u64) -> Option<(usize, usize)> {
        if self.done {
            return None;
        }
        let x_str = pair.side(self.v.consumed);
        let y_str = pair.side(self.v.emit());
        let y_last = y_str.len() + 1;
        let min_end = self.v.y.max(1);
        loop {
            if self.fresh {
                self.fresh = false;
            } else {
                if self.y_end == y_last {
                    self.done = true;
                    return None;
                }
                self.y_end += 1;
                if let Some(c) = y_str.get(self.y_end) {
                    self.rows[0] = advance_bound(x_str, self.rows[0], c);
                    self.rows[2] = advance_bound(x_str, self.rows[2], c);
                    if self.has_prev {
                        self.rows[1] = advance_bound(x_str, self.rows[1], c);
                        self.rows[3] = advance_bound(x_str, self.rows[3], c);
                    }
                }
            }
            *steps += 1;
            let x_end = self.rows[0];
            let left_maximal = !self.has_prev || (x_end > self.rows[1] && x_end > self.rows[3]);
            if self.y_end >= min_end && x_end == self.rows[2] && left_maximal {
                return Some((self.y_end, x_end));
            }
        }
    }
}

/// Iterator over all out-edges of a vertex in the full supersequence graph.
pub struct EdgeIter<'a> {
    pair: &'a SeqPair,
    cursor: EdgeCursor,
    steps: u64,
}

impl EdgeIter<'_> {
    /// Number of `y'` values examined so far.
    pub fn steps(&self) -> u64 {
        self.steps
    }
}

impl Iterator for EdgeIter<'_> {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        let v = self.cursor.v;
        self.cursor
            .next_edge(self.pair, &mut self.steps)
            .map(|(y_end, x_end)| Edge::new(v, y_end, x_end))
    }
}

/// Out-edges of `v` in the full graph, ascending by `y'`.
pub fn edges_from(pair: &SeqPair, v: Vertex) -> EdgeIter<'_> {
    EdgeIter {
        pair,
        cursor: EdgeCursor::new(pair, v),
        steps: 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Absent,
    End,
    /// Largest `y'` of an edge into the subgraph.
    Inner(u32),
}

/// The subgraph induced by vertices lying on start-to-end paths.
///
/// Stores one slot per vertex and no adjacency; edges are recomputed on demand.
#[derive(Debug, Clone)]
pub struct EnumGraph {
    pair: SeqPair,
    slots: Vec<Slot>,
    build_steps: u64,
}

impl EnumGraph {
    pub fn pair(&self) -> &SeqPair {
        &self.pair
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.pair.is_valid(v) && self.slots[self.pair.index(v)] != Slot::Absent
    }

    /// Largest `y'` of an out-edge of `v` that stays in the subgraph.
    /// `None` for end nodes and absent vertices.
    pub fn max_target_y(&self, v: Vertex) -> Option<usize> {
        if !self.pair.is_valid(v) {
            return None;
        }
        match self.slots[self.pair.index(v)] {
            Slot::Inner(y) => Some(y as usize),
            _ => None,
        }
    }

    /// Vertices of the subgraph, ordered by `(X, x, y)`.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| **s != Slot::Absent)
            .map(|(i, _)| self.pair.vertex_at(i))
    }

    pub fn vertex_count(&self) -> usize {
        self.slots.iter().filter(|s| **s != Slot::Absent).count()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }

    /// Total `y'` steps spent during construction.
    pub fn build_steps(&self) -> u64 {
        self.build_steps
    }

    /// Out-edges of `v` that stay inside the subgraph, ascending by `y'`.
    pub fn st_edges_from(&self, v: Vertex) -> impl Iterator<Item = Edge> + '_ {
        let limit = self.max_target_y(v);
        edges_from(&self.pair, v)
            .take_while(move |e| limit.is_some_and(|m| e.target.x <= m))
            .filter(move |e| self.contains(e.target))
    }

    /// Graphviz rendering: vertices in `(X, x, y)` order, then edges labelled
    /// with the substrings they copy. Byte-identical across runs.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph mcs {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for v in self.vertices() {
            for e in self.st_edges_from(v) {
                let label = escape_dot(&e.label_text(&self.pair).to_string());
                let _ = writeln!(out, "  \"{v}\" -> \"{}\" [label=\"{label}\"];", e.target);
            }
        }
        out.push_str("}\n");
        out
    }
}

fn escape_dot(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out
}

/// Computes the start-to-end subgraph of the supersequence graph of `a` and `b`.
///
/// The strings must not share a non-empty common prefix. `O((|A|+|B|)³)` time,
/// `O(|A|·|B|)` space.
pub fn build_st_subgraph(a: &Seq, b: &Seq) -> Result<EnumGraph> {
    let p = longest_common_prefix(a, b);
    if p > 0 {
        return Err(McsError::SharedPrefix(p));
    }
    let pair = SeqPair::new(a.clone(), b.clone());
    let slots_len = pair.vertex_slots();

    const UNSEEN: u8 = 0;
    const OPEN: u8 = 1;
    const DONE: u8 = 2;
    let mut state = vec![UNSEEN; slots_len];
    let mut alive = vec![false; slots_len];
    let mut max_y = vec![0u32; slots_len];
    let mut steps = 0u64;

    struct Frame {
        idx: usize,
        cursor: EdgeCursor,
        pending: Option<(usize, usize)>,
    }

    for start in pair.start_nodes() {
        let sidx = pair.index(start);
        if state[sidx] != UNSEEN {
            continue;
        }
        state[sidx] = OPEN;
        let mut stack = vec![Frame {
            idx: sidx,
            cursor: EdgeCursor::new(&pair, start),
            pending: None,
        }];
        while let Some(frame) = stack.last_mut() {
            let v = frame.idx;
            if let Some((w, y_end)) = frame.pending.take() {
                if alive[w] {
                    alive[v] = true;
                    max_y[v] = y_end as u32;
                }
            }
            let Some((y_end, x_end)) = frame.cursor.next_edge(&pair, &mut steps) else {
                state[v] = DONE;
                stack.pop();
                continue;
            };
            let target = Vertex::new(pair.vertex_at(v).emit(), y_end, x_end);
            let w = pair.index(target);
            if pair.is_end(target) {
                state[w] = DONE;
                alive[w] = true;
            }
            match state[w] {
                DONE => {
                    if alive[w] {
                        alive[v] = true;
                        max_y[v] = y_end as u32;
                    }
                }
                UNSEEN => {
                    frame.pending = Some((w, y_end));
                    state[w] = OPEN;
                    stack.push(Frame {
                        idx: w,
                        cursor: EdgeCursor::new(&pair, target),
                        pending: None,
                    });
                }
                _ => unreachable!("edges strictly increase x + y, so the graph is acyclic"),
            }
        }
    }

    let slots = (0..slots_len)
        .map(|i| {
            if state[i] != DONE || !alive[i] {
                Slot::Absent
            } else if pair.is_end(pair.vertex_at(i)) {
                Slot::End
            } else {
                Slot::Inner(max_y[i])
            }
        })
        .collect();

    Ok(EnumGraph {
        pair,
        slots,
        build_steps: steps,
    })
}
