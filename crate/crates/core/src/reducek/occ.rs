use std::collections::HashMap;

use crate::error::{McsError, Result};
use crate::seq::Seq;

/// An append-only string stored as per-symbol occurrence arrays.
///
/// The arrays are sized from a template `T`: symbol `σ` may be appended at
/// most as many times as it occurs in `T`. Appends are `O(1)`; next-occurrence
/// queries binary-search a single array.
#[derive(Debug, Clone)]
pub struct OccString {
    ids: HashMap<char, usize>,
    occ: Vec<Vec<usize>>,
    capacity: Vec<usize>,
    len: usize,
}

impl OccString {
    /// Empty structure with capacities counted from `template`. `O(|T|)`.
    pub fn new(template: &Seq) -> Self {
        let mut ids = HashMap::new();
        let mut capacity: Vec<usize> = Vec::new();
        for c in template.iter() {
            let id = *ids.entry(c).or_insert_with(|| {
                capacity.push(0);
                capacity.len() - 1
            });
            capacity[id] += 1;
        }
        let occ = capacity.iter().map(|&n| Vec::with_capacity(n)).collect();
        OccString {
            ids,
            occ,
            capacity,
            len: 0,
        }
    }

    /// Length of the stored string.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Maximum number of occurrences of `symbol`; zero for symbols absent from the template.
    pub fn capacity(&self, symbol: char) -> usize {
        self.ids.get(&symbol).map_or(0, |&id| self.capacity[id])
    }

    /// Positions (ascending, 1-based) at which `symbol` occurs in the stored string.
    pub fn occurrences(&self, symbol: char) -> &[usize] {
        self.ids.get(&symbol).map_or(&[], |&id| &self.occ[id])
    }

    /// Appends `symbol`.
    pub fn insert(&mut self, symbol: char) -> Result<()> {
        let exceeded = |capacity| McsError::CapacityExceeded { symbol, capacity };
        let id = *self.ids.get(&symbol).ok_or_else(|| exceeded(0))?;
        let arr = &mut self.occ[id];
        if arr.len() == self.capacity[id] {
            return Err(exceeded(self.capacity[id]));
        }
        self.len += 1;
        arr.push(self.len);
        Ok(())
    }

    /// Smallest `j > i` with `S[j] = symbol`, or `|S| + 1` if there is none.
    pub fn find_next(&self, symbol: char, i: usize) -> usize {
        let arr = self.occurrences(symbol);
        let k = arr.partition_point(|&p| p <= i);
        arr.get(k).copied().unwrap_or(self.len + 1)
    }

    /// Rebuilds the stored string by scanning `template`. `O(|T|)`.
    pub fn build_str(&self, template: &Seq) -> Result<Seq> {
        let mut cursor = vec![0usize; self.occ.len()];
        let mut out = Vec::with_capacity(self.len);
        for c in template.iter() {
            if out.len() == self.len {
                break;
            }
            let Some(&id) = self.ids.get(&c) else {
                return Err(McsError::Inconsistent(format!(
                    "template symbol {c:?} was not in the construction template"
                )));
            };
            if self.occ[id].get(cursor[id]) == Some(&(out.len() + 1)) {
                cursor[id] += 1;
                out.push(c);
            }
        }
        if out.len() != self.len {
            return Err(McsError::Inconsistent(format!(
                "recovered {} of {} symbols",
                out.len(),
                self.len
            )));
        }
        Ok(Seq::new(out))
    }
}
