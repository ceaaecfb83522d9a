#![allow(dead_code)]

use mcsup::Seq;
use rand::prelude::*;

pub fn s(x: &str) -> Seq {
    Seq::from(x)
}

pub fn random_seq(rng: &mut impl Rng, alphabet: &[char], len: usize) -> Seq {
    (0..len).map(|_| *alphabet.choose(rng).unwrap()).collect()
}

/// A uniformly random interleaving of `parts`.
pub fn interleave(rng: &mut impl Rng, parts: &[Seq]) -> Seq {
    let mut owners: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| std::iter::repeat_n(i, p.len()))
        .collect();
    owners.shuffle(rng);
    let mut next = vec![0usize; parts.len()];
    owners
        .into_iter()
        .map(|i| {
            next[i] += 1;
            parts[i].at(next[i])
        })
        .collect()
}

/// An interleaving of `parts` with `noise` random symbols scattered through it.
pub fn noisy_supersequence(
    rng: &mut impl Rng,
    parts: &[Seq],
    alphabet: &[char],
    noise: usize,
) -> Seq {
    let mut v = interleave(rng, parts).into_vec();
    for _ in 0..noise {
        let at = rng.gen_range(0..=v.len());
        v.insert(at, *alphabet.choose(rng).unwrap());
    }
    Seq::new(v)
}

/// All strings over `alphabet` with length at most `max_len`, shortest first.
pub fn all_strings(alphabet: &[char], max_len: usize) -> Vec<Seq> {
    let mut out = vec![Seq::empty()];
    let mut layer = vec![Vec::<char>::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Seq::new));
    }
    out
}
