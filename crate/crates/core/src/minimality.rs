//! Essential indices and a linear-time minimality check.
//!
//! Index `i` of `S` is essential for input position `j` of `X` exactly when
//! the left and right embeddings of `X` into `S` both send `j` to `i`. A
//! common supersequence is minimal iff each of its indices is essential for
//! at least one input.

use crate::error::{McsError, Result};
use crate::seq::{left_embedding, right_embedding, Seq};

/// Indices of `s` whose deletion breaks `x ⊆ s`, ascending.
pub fn essential_indices(s: &Seq, x: &Seq) -> Result<Vec<usize>> {
    let left = left_embedding(x, s)?;
    let right = right_embedding(x, s)?;
    Ok(left
        .image()
        .iter()
        .zip(right.image())
        .filter(|(l, r)| l == r)
        .map(|(&l, _)| l)
        .collect())
}

/// Whether deleting `s[i]` breaks `x` but only because of `x[j]`.
pub fn is_essential_for_pair(s: &Seq, i: usize, x: &Seq, j: usize) -> Result<bool> {
    if i == 0 || i > s.len() {
        return Err(McsError::IndexOutOfRange {
            index: i,
            len: s.len(),
        });
    }
    if j == 0 || j > x.len() {
        return Err(McsError::IndexOutOfRange {
            index: j,
            len: x.len(),
        });
    }
    let left = left_embedding(x, s)?;
    let right = right_embedding(x, s)?;
    Ok(left.get(j) == i && right.get(j) == i)
}

/// Outcome of [`check_minimal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Minimal,
    /// Input `input` (0-based) is not a subsequence of `S`.
    NotSupersequence {
        input: usize,
    },
    /// `S[index]` can be deleted while keeping every input.
    Deletable {
        index: usize,
    },
}

/// Classifies `s` against `inputs`, reporting the first deletable index if any.
/// Runs in `O(k · (|S| + max |A_j|))`.
pub fn check_minimal(s: &Seq, inputs: &[Seq]) -> Verdict {
    let mut essential = vec![false; s.len() + 1];
    for (input, x) in inputs.iter().enumerate() {
        match essential_indices(s, x) {
            Ok(idx) => idx.into_iter().for_each(|i| essential[i] = true),
            Err(_) => return Verdict::NotSupersequence { input },
        }
    }
    match (1..=s.len()).find(|&i| !essential[i]) {
        Some(index) => Verdict::Deletable { index },
        None => Verdict::Minimal,
    }
}

/// True iff `s` is a minimal common supersequence of `inputs`.
pub fn verify_minimal(s: &Seq, inputs: &[Seq]) -> bool {
    check_minimal(s, inputs) == Verdict::Minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::is_subsequence;

    fn s(x: &str) -> Seq {
        Seq::from(x)
    }

    fn deletion_oracle(s: &Seq, x: &Seq) -> Vec<usize> {
        (1..=s.len())
            .filter(|&i| !is_subsequence(x, &s.delete(i).unwrap()))
            .collect()
    }

    #[test]
    fn essential_examples() {
        let e = essential_indices(&s("abcbacb"), &s("abab")).unwrap();
        assert!(e.contains(&5));
        assert_eq!(e, deletion_oracle(&s("abcbacb"), &s("abab")));
        assert_eq!(e, vec![1, 5, 7]);
        assert_eq!(
            essential_indices(&s("abcd"), &s("abcd")).unwrap(),
            vec![1, 2, 3, 4]
        );
    }

    #[test]
    fn pair_examples() {
        assert!(is_essential_for_pair(&s("abcbacb"), 5, &s("abab"), 3).unwrap());
        // abab ⊄ bcbacb, so index 1 is essential for (1, abab)
        assert!(is_essential_for_pair(&s("abcbacb"), 1, &s("abab"), 1).unwrap());
        assert!(!is_essential_for_pair(&s("aa"), 1, &s("a"), 1).unwrap());
        assert!(matches!(
            is_essential_for_pair(&s("ab"), 3, &s("a"), 1),
            Err(McsError::IndexOutOfRange { index: 3, len: 2 })
        ));
        assert!(is_essential_for_pair(&s("ab"), 1, &s("a"), 2).is_err());
    }

    #[test]
    fn pair_matches_definition() {
        // i essential for (j, X): every embedding of X into S sends j to i
        fn embeddings(
            t: &[char],
            x: &[char],
            from: usize,
            acc: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if acc.len() == x.len() {
                out.push(acc.clone());
                return;
            }
            for i in from..t.len() {
                if t[i] == x[acc.len()] {
                    acc.push(i + 1);
                    embeddings(t, x, i + 1, acc, out);
                    acc.pop();
                }
            }
        }
        for (t, x) in [("abcbacb", "abab"), ("aabba", "ab"), ("abcabc", "cab")] {
            let (t, x) = (s(t), s(x));
            let mut all = Vec::new();
            embeddings(t.as_slice(), x.as_slice(), 0, &mut Vec::new(), &mut all);
            for i in 1..=t.len() {
                for j in 1..=x.len() {
                    let def = all.iter().all(|e| e[j - 1] == i);
                    assert_eq!(
                        is_essential_for_pair(&t, i, &x, j).unwrap(),
                        def,
                        "{t} {x} i={i} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn verify_examples() {
        let inputs = [s("abab"), s("acbcb")];
        assert!(verify_minimal(&s("abacbcb"), &inputs));
        assert!(!verify_minimal(&s("ababacbcb"), &inputs));
        assert_eq!(
            check_minimal(&s("ababacbcb"), &inputs),
            Verdict::Deletable { index: 1 }
        );
        assert!(verify_minimal(&s("ab"), &[s("ab")]));
        assert_eq!(
            check_minimal(&s("ab"), &[s("ab"), s("c")]),
            Verdict::NotSupersequence { input: 1 }
        );
        assert!(verify_minimal(&s(""), &[s("")]));
        assert!(!verify_minimal(&s("a"), &[]));
    }
}
