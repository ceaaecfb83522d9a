//! Minimal common supersequences.
//!
//! * [`reduce2`]: `O(n)` reduction of a common supersequence of two strings
//!   to a minimal one, and [`mcs_two`] built on it.
//! * [`reducek`]: `O(N log N)` reduction for `k` strings using an
//!   occurrence-array string, and [`mcs_k`].
//! * [`enumgraph`] / [`enumpaths`]: every minimal common supersequence of two
//!   strings as a path label of a DAG, enumerated with linear delay after
//!   cubic preprocessing, plus exact counting.
//! * [`minimality`]: linear-time verification through essential indices.
//! * [`oracle`]: brute-force references used by the test suites.

pub mod cli;
pub mod enumgraph;
pub mod enumpaths;
pub mod error;
pub mod minimality;
pub mod oracle;
pub mod reduce2;
pub mod reducek;
pub mod seq;

pub use enumgraph::{build_st_subgraph, EnumGraph, Side, Vertex};
pub use enumpaths::{count_mcs, delay_probe, enumerate_mcs, McsEnumerator};
pub use error::{McsError, Result};
pub use minimality::{check_minimal, essential_indices, verify_minimal, Verdict};
pub use reduce2::{mcs_two, reduce_two};
pub use reducek::{mcs_k, reduce_k, OccString};
pub use seq::{is_subsequence, left_embedding, right_embedding, Seq};
