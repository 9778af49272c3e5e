use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::temporal::{Params, TemporalGraph, TimeEdge, VertexId};

/// Random static skeleton (each pair with probability `edge_prob`), then each
/// skeleton edge appears at each `t` in `[1, lifetime]` with probability `time_prob`.
pub fn gen_random(n: usize, lifetime: u32, edge_prob: f64, time_prob: f64, seed: u64) -> Result<TemporalGraph> {
    for p in [edge_prob, time_prob] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InfeasibleGenerator(format!("probability {p} outside [0, 1]")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = TemporalGraph::with_vertices(n);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if !rng.gen_bool(edge_prob) {
                continue;
            }
            for t in 1..=lifetime {
                if rng.gen_bool(time_prob) {
                    g.insert(TimeEdge::new(VertexId(u), VertexId(v), t))?;
                }
            }
        }
    }
    Ok(g)
}

/// Random `delta1`-dense subset of `[a, b]`: each time is kept with
/// probability one half unless skipping it would leave a gap too long.
fn dense_times(rng: &mut ChaCha8Rng, a: u32, b: u32, delta1: u32) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    let mut prev = a - 1;
    for t in a..=b {
        let forced = t - prev == delta1 || (t == b && b + 1 - prev > delta1) || (t == b && out.is_empty());
        if forced || rng.gen_bool(0.5) {
            out.push(t);
            prev = t;
        }
    }
    out
}

/// A cluster temporal graph with `perturbations` random toggles applied.
///
/// Vertices are shuffled into groups of one to four; each group gets a run of
/// intervals at least `Δ2` apart, and every pair of the group is made dense
/// on each of them.
pub fn gen_planted(n: usize, lifetime: u32, params: Params, seed: u64, perturbations: usize) -> Result<TemporalGraph> {
    if n == 0 || lifetime == 0 {
        return Err(Error::InfeasibleGenerator(
            "need at least one vertex and one timestep".into(),
        ));
    }
    let universe = n * (n - 1) / 2 * lifetime as usize;
    if perturbations > universe {
        return Err(Error::InfeasibleGenerator(format!(
            "{perturbations} toggles requested but only {universe} time-edges exist"
        )));
    }
    let (d1, d2) = (params.delta1(), params.delta2());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(&mut rng);
    let mut g = TemporalGraph::with_vertices(n);
    let mut rest = &order[..];
    while !rest.is_empty() {
        let size = rng.gen_range(1..=rest.len().min(4));
        let (group, tail) = rest.split_at(size);
        rest = tail;
        let mut a = rng.gen_range(1..=lifetime.min(1 + d1));
        while a <= lifetime {
            let b = (a + rng.gen_range(0..=2 * d1)).min(lifetime);
            for (i, &x) in group.iter().enumerate() {
                for &y in &group[i + 1..] {
                    for t in dense_times(&mut rng, a, b, d1) {
                        g.insert(TimeEdge::new(VertexId(x), VertexId(y), t))?;
                    }
                }
            }
            a = b + d2 + rng.gen_range(0..=d1);
        }
    }
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    for idx in sample(&mut rng, universe, perturbations) {
        let (u, v) = pairs[idx % pairs.len()];
        let e = TimeEdge::new(VertexId(u), VertexId(v), (idx / pairs.len()) as u32 + 1);
        if !g.remove(&e) {
            g.insert(e)?;
        }
    }
    Ok(g)
}

/// Appearance lists for the edges of a path on `n` vertices: each edge gets
/// between zero and `sigma` distinct times in `[1, lifetime]`, sorted.
pub fn gen_path(n: usize, lifetime: u32, sigma: usize, seed: u64) -> Vec<Vec<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = sigma.min(lifetime as usize);
    (1..n)
        .map(|_| {
            let count = rng.gen_range(0..=cap);
            let mut times: Vec<u32> = sample(&mut rng, lifetime as usize, count)
                .into_iter()
                .map(|i| i as u32 + 1)
                .collect();
            times.sort_unstable();
            times
        })
        .collect()
}

/// Five vertices `a..e` that fail recognition although every induced
/// subgraph on four vertices passes (for `delta2 > delta1 > 1`).
pub fn counterexample_five(delta2: u32) -> TemporalGraph {
    let mut g = TemporalGraph::with_labels(&["a", "b", "c", "d", "e"]);
    for (x, y, t) in [
        ("a", "c", 1),
        ("b", "c", 1),
        ("a", "b", 2),
        ("c", "d", delta2 + 2),
        ("c", "e", delta2 + 2),
        ("d", "e", delta2 + 1),
    ] {
        g.add_labelled(x, y, t).expect("valid time-edge");
    }
    g
}
