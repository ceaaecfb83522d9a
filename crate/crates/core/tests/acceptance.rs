//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_strings, noisy_supersequence, random_seq, s};
use mcsup::enumgraph::{edges_from, SeqPair, Side};
use mcsup::oracle::{brute_edges, brute_is_minimal, brute_mcs_set, brute_st_vertices};
use mcsup::reduce2::build_right_embedding_image;
use mcsup::{
    build_st_subgraph, delay_probe, enumerate_mcs, is_subsequence, reduce_k, reduce_two,
    verify_minimal, OccString, Seq, Vertex,
};
use rand::prelude::*;

/// Delay bound: at most `DELAY_C * n` steps between consecutive outputs.
/// Calibrated once on the probe below (observed max 1.80·n at n = 64) and frozen.
const DELAY_C: f64 = 4.0;
/// Outputs examined per pair by the delay probe.
const DELAY_OUTPUTS: usize = 300;

type Outcome = std::result::Result<String, String>;
type Criterion = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> std::result::Result<(), String> {
    ensure(elapsed < limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn median(mut v: Vec<Duration>) -> Duration {
    v.sort();
    v[v.len() / 2]
}

fn enum_set(a: &Seq, b: &Seq) -> std::result::Result<BTreeSet<Seq>, String> {
    let list: Vec<Seq> = enumerate_mcs(a, b).collect();
    let set: BTreeSet<Seq> = list.iter().cloned().collect();
    ensure(set.len() == list.len(), || {
        format!(
            "({a}, {b}): {} outputs but {} distinct",
            list.len(),
            set.len()
        )
    })?;
    Ok(set)
}

fn compare_with_brute(a: &Seq, b: &Seq) -> std::result::Result<usize, String> {
    let got = enum_set(a, b)?;
    let want = brute_mcs_set(a, b, a.len() + b.len()).map_err(|e| e.to_string())?;
    ensure(got == want, || {
        let extra: Vec<_> = got.difference(&want).collect();
        let missing: Vec<_> = want.difference(&got).collect();
        format!("({a}, {b}): extra {extra:?}, missing {missing:?}")
    })?;
    Ok(got.len())
}

fn c1_reduction_example() -> Outcome {
    let (sup, a, b) = (s("ababacbcb"), s("abab"), s("acbcb"));
    let t = Instant::now();
    let out = reduce_two(&sup, &a, &b).map_err(|e| e.to_string())?;
    let ra = build_right_embedding_image(&sup, &a).map_err(|e| e.to_string())?;
    let rb = build_right_embedding_image(&sup, &b).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    ensure(out == s("abacbcb"), || format!("got {out}"))?;
    ensure(ra == [3, 4, 5, 9], || format!("r_A = {ra:?}"))?;
    ensure(rb == [5, 6, 7, 8, 9], || format!("r_B = {rb:?}"))?;
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("abacbcb in {elapsed:?}"))
}

fn c2_block_example() -> Outcome {
    let (a, b) = (s("accdabcdcdab"), s("bcbabcdcdcdd"));
    let target = s("accdbcbabcdcdabcdd");
    let t = Instant::now();
    ensure(verify_minimal(&target, &[a.clone(), b.clone()]), || {
        "not minimal".into()
    })?;
    let found = enumerate_mcs(&a, &b).any(|x| x == target);
    let elapsed = t.elapsed();
    ensure(found, || "not enumerated".into())?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("verified and enumerated in {elapsed:?}"))
}

fn c3_intro_example() -> Outcome {
    let (a, b) = (s("xay"), s("zaw"));
    let t = Instant::now();
    ensure(enumerate_mcs(&a, &b).any(|x| x == s("xayzaw")), || {
        "xayzaw missing".into()
    })?;
    let n = compare_with_brute(&a, &b)?;
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("{n} MCSs, equal to brute force, in {elapsed:?}"))
}

fn c4_oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let words = all_strings(&['a', 'b'], 4);
    let mut pairs = 0;
    for a in &words {
        for b in &words {
            compare_with_brute(a, b)?;
            pairs += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x4d4353);
    for _ in 0..200 {
        let la = rng.gen_range(0..=6);
        let lb = rng.gen_range(0..=6);
        let a = random_seq(&mut rng, &['a', 'b', 'c'], la);
        let b = random_seq(&mut rng, &['a', 'b', 'c'], lb);
        compare_with_brute(&a, &b)?;
        pairs += 1;
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(120))?;
    Ok(format!("{pairs} pairs equal to brute force in {elapsed:?}"))
}

fn c5_minimality_suite() -> Outcome {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(5);
    let full = ['a', 'b', 'c', 'd'];
    for case in 0..1000 {
        let sigma = &full[..rng.gen_range(1..=4)];
        let k = rng.gen_range(1..=8);
        let inputs: Vec<Seq> = (0..k)
            .map(|_| {
                let n = rng.gen_range(0..=30);
                random_seq(&mut rng, sigma, n)
            })
            .collect();
        let noise = rng.gen_range(0..=20);
        let sup = noisy_supersequence(&mut rng, &inputs, sigma, noise);
        let out = reduce_k(&sup, &inputs).map_err(|e| format!("case {case}: {e}"))?;
        ensure(verify_minimal(&out, &inputs), || {
            format!("case {case}: verify_minimal")
        })?;
        ensure(brute_is_minimal(&out, &inputs), || {
            format!("case {case}: brute_is_minimal")
        })?;
        ensure(is_subsequence(&out, &sup), || {
            format!("case {case}: not within S")
        })?;
        ensure(inputs.iter().all(|x| is_subsequence(x, &out)), || {
            format!("case {case}: lost an input")
        })?;
    }
    let elapsed = t.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("1000 instances in {elapsed:?}"))
}

fn time_reduce_two(rng: &mut StdRng, n: usize) -> Duration {
    let sigma = ['a', 'b', 'c', 'd'];
    let runs = (0..3)
        .map(|_| {
            let a = random_seq(rng, &sigma, n / 2);
            let b = random_seq(rng, &sigma, n / 2);
            let sup = common::interleave(rng, &[a.clone(), b.clone()]);
            let t = Instant::now();
            let out = reduce_two(&sup, &a, &b).unwrap();
            let d = t.elapsed();
            assert!(!out.is_empty());
            d
        })
        .collect();
    median(runs)
}

fn time_graph(rng: &mut StdRng, n: usize) -> Duration {
    let sigma = ['a', 'b', 'c', 'd'];
    let pairs: Vec<(Seq, Seq)> = (0..4)
        .map(|_| loop {
            let a = random_seq(rng, &sigma, n);
            let b = random_seq(rng, &sigma, n);
            if a.get(1) != b.get(1) {
                break (a, b);
            }
        })
        .collect();
    let runs = (0..3)
        .map(|_| {
            let t = Instant::now();
            for (a, b) in &pairs {
                let g = build_st_subgraph(a, b).unwrap();
                assert!(!g.is_empty());
            }
            t.elapsed()
        })
        .collect();
    median(runs)
}

fn c6_scaling() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    // warm-up
    time_reduce_two(&mut rng, 100_000);
    let t1 = time_reduce_two(&mut rng, 100_000);
    let t2 = time_reduce_two(&mut rng, 200_000);
    let ratio_a = t2.as_secs_f64() / t1.as_secs_f64();

    let inputs: Vec<Seq> = (0..64)
        .map(|_| random_seq(&mut rng, &['a', 'b', 'c', 'd'], 1000))
        .collect();
    let sup = Seq::concat_all(&inputs);
    let runs = (0..3)
        .map(|_| {
            let t = Instant::now();
            reduce_k(&sup, &inputs).unwrap();
            t.elapsed()
        })
        .collect();
    let tk = median(runs);

    time_graph(&mut rng, 50);
    let g1 = time_graph(&mut rng, 100);
    let g2 = time_graph(&mut rng, 200);
    let ratio_c = g2.as_secs_f64() / g1.as_secs_f64();

    let detail = format!(
        "(a) reduce_two {t1:?} -> {t2:?}, ratio {ratio_a:.2}; (b) reduce_k 64x1000 {tk:?}; \
         (c) graph {g1:?} -> {g2:?}, ratio {ratio_c:.2}"
    );
    ensure(ratio_a <= 2.5, || format!("(a) ratio too high: {detail}"))?;
    ensure(tk < Duration::from_secs(1), || {
        format!("(b) too slow: {detail}")
    })?;
    ensure(ratio_c <= 12.0, || format!("(c) ratio too high: {detail}"))?;
    Ok(detail)
}

fn c7_delay() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let sigma = ['a', 'b', 'c', 'd'];
    let mut per_n = Vec::new();
    for n in [64usize, 128, 256] {
        let mut worst = 0u64;
        for _ in 0..50 {
            let a = random_seq(&mut rng, &sigma, n);
            let b = random_seq(&mut rng, &sigma, n);
            let delays = delay_probe(&a, &b, Some(DELAY_OUTPUTS));
            worst = worst.max(delays.into_iter().max().unwrap_or(0));
        }
        let ratio = worst as f64 / n as f64;
        ensure(ratio <= DELAY_C, || {
            format!("n={n}: max delay {worst} exceeds {DELAY_C}·n")
        })?;
        per_n.push((n, worst, ratio));
    }
    let growth = per_n[2].2 / per_n[0].2;
    let detail = per_n
        .iter()
        .map(|(n, w, r)| format!("n={n}: {w} ({r:.2}n)"))
        .collect::<Vec<_>>()
        .join(", ");
    ensure(growth <= 2.0, || {
        format!("max/n grew {growth:.2}x: {detail}")
    })?;
    Ok(format!("{detail}; growth {growth:.2}x"))
}

fn c8_occurrence_arrays() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let sigma = ['a', 'b', 'c', 'd', 'e'];
    let mut queries = 0;
    while queries < 10_000 {
        let len = rng.gen_range(1..=60);
        let template = random_seq(&mut rng, &sigma, len);
        let mut occ = OccString::new(&template);
        let mut text = Vec::new();
        for c in template.iter() {
            if rng.gen_bool(0.6) {
                occ.insert(c).map_err(|e| e.to_string())?;
                text.push(c);
            }
        }
        for _ in 0..100 {
            let c = *sigma.choose(&mut rng).unwrap();
            let i = rng.gen_range(0..=text.len());
            let want = (i + 1..=text.len())
                .find(|&j| text[j - 1] == c)
                .unwrap_or(text.len() + 1);
            let got = occ.find_next(c, i);
            ensure(got == want, || {
                format!(
                    "find_next({c}, {i}) on {:?}: {got} != {want}",
                    Seq::new(text.clone())
                )
            })?;
            queries += 1;
        }
    }
    for round in 0..200 {
        let len = rng.gen_range(0..=80);
        let template = random_seq(&mut rng, &sigma, len);
        let sub: Seq = template.iter().filter(|_| rng.gen_bool(0.5)).collect();
        let mut occ = OccString::new(&template);
        for c in sub.iter() {
            occ.insert(c).map_err(|e| e.to_string())?;
        }
        let back = occ
            .build_str(&template)
            .map_err(|e| format!("round {round}: {e}"))?;
        ensure(back == sub, || format!("round {round}: {back} != {sub}"))?;
    }
    Ok(format!("{queries} queries and 200 round trips"))
}

fn c9_graph_conformance() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let sigma = ['a', 'b', 'c'];
    let mut instances = 0;
    let mut vertices = 0;
    while instances < 300 {
        let la = rng.gen_range(0..=5);
        let lb = rng.gen_range(0..=5);
        let a = random_seq(&mut rng, &sigma, la);
        let b = random_seq(&mut rng, &sigma, lb);
        if a.get(1).is_some() && a.get(1) == b.get(1) {
            continue;
        }
        let pair = SeqPair::new(a.clone(), b.clone());
        for side in [Side::A, Side::B] {
            let nx = pair.side(side).len();
            let ny = pair.side(side.other()).len();
            for x in 0..=nx + 1 {
                for y in 0..=ny + 1 {
                    let v = Vertex::new(side, x, y);
                    let got: Vec<Vertex> = edges_from(&pair, v).map(|e| e.target).collect();
                    let want = brute_edges(&pair, v);
                    ensure(got == want, || {
                        format!("({a}, {b}) at {v}: {got:?} != {want:?}")
                    })?;
                    vertices += 1;
                }
            }
        }
        let graph = build_st_subgraph(&a, &b).map_err(|e| e.to_string())?;
        let got: BTreeSet<Vertex> = graph.vertices().collect();
        let want = brute_st_vertices(&pair);
        ensure(got == want, || {
            format!("({a}, {b}): st vertices {got:?} != {want:?}")
        })?;
        instances += 1;
    }
    Ok(format!("{instances} pairs, {vertices} vertices"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("1 reduction example", c1_reduction_example),
        ("2 block example", c2_block_example),
        ("3 two-word example", c3_intro_example),
        ("4 enumeration equals brute force", c4_oracle_equivalence),
        ("5 reduce_k minimality", c5_minimality_suite),
        ("6 complexity scaling", c6_scaling),
        ("7 enumeration delay", c7_delay),
        ("8 occurrence arrays", c8_occurrence_arrays),
        ("9 graph conformance", c9_graph_conformance),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
