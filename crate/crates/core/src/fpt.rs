//! Bounded search tree for editing.
//!
//! A graph that is not a cluster temporal graph has a violating induced
//! subgraph on at most five vertices (three when `Δ1 = 1`). Any solution must
//! toggle some time-edge between two of those vertices, at a time within the
//! lifetime `[1, T]`, which gives at most `10T` branches per level.

use crate::modification::ModificationSet;
use crate::saturation::{
    characterisation_subset_size, first_violating_subset_in, is_cluster_time_edges, RecognitionCache,
};
use crate::temporal::{Params, TemporalGraph, TimeEdge};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FptOptions {
    /// Size bound for violating subsets; defaults to the characterisation bound.
    pub subset_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FptOutcome {
    pub decision: bool,
    pub witness: Option<ModificationSet>,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

struct Search<'a> {
    g: &'a TemporalGraph,
    params: Params,
    lifetime: u32,
    subset_size: usize,
    cache: RecognitionCache,
    /// Current time-edge set, sorted in `(u, v, t)` order.
    edges: Vec<TimeEdge>,
    path: Vec<TimeEdge>,
    nodes: u64,
}

impl Search<'_> {
    fn toggle(&mut self, e: TimeEdge) {
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                self.edges.remove(pos);
            }
            Err(pos) => self.edges.insert(pos, e),
        }
    }

    fn run(&mut self, budget: usize) -> bool {
        self.nodes += 1;
        if is_cluster_time_edges(&self.edges, self.params) {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let violator = first_violating_subset_in(
            self.g.vertex_count(),
            &self.edges,
            self.params,
            self.subset_size,
            Some(&mut self.cache),
        )
        .expect("a non-cluster graph has a small violating subgraph");
        for (j, &x) in violator.iter().enumerate() {
            for &y in &violator[j + 1..] {
                for t in 1..=self.lifetime {
                    let e = TimeEdge::new(x, y, t);
                    if self.path.contains(&e) {
                        continue;
                    }
                    self.toggle(e);
                    self.path.push(e);
                    if self.run(budget - 1) {
                        return true;
                    }
                    self.path.pop();
                    self.toggle(e);
                }
            }
        }
        false
    }
}

/// Decides whether at most `budget` edits make `g` a `(Δ1, Δ2)`-cluster
/// temporal graph. The witness is the first one found, not necessarily a
/// smallest one.
pub fn fpt_solve_with(g: &TemporalGraph, params: Params, budget: usize, options: FptOptions) -> FptOutcome {
    let mut search = Search {
        g,
        params,
        lifetime: g.lifetime(),
        subset_size: options
            .subset_size
            .unwrap_or_else(|| characterisation_subset_size(params)),
        cache: RecognitionCache::new(),
        edges: g.time_edges(),
        path: Vec::new(),
        nodes: 0,
    };
    let decision = search.run(budget);
    FptOutcome {
        decision,
        witness: decision.then(|| ModificationSet::toggles(g, search.path.iter().copied())),
        nodes: search.nodes,
    }
}

pub fn fpt_solve(g: &TemporalGraph, params: Params, budget: usize) -> FptOutcome {
    fpt_solve_with(g, params, budget, FptOptions::default())
}

/// Smallest budget up to `k_max` for which [`fpt_solve`] succeeds, with its witness.
pub fn min_edit_distance(g: &TemporalGraph, params: Params, k_max: usize) -> Option<(usize, ModificationSet)> {
    (0..=k_max).find_map(|k| {
        let out = fpt_solve(g, params, k);
        out.witness.map(|w| (k, w))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{counterexample_five, etc_bruteforce, gen_planted, gen_random, OracleCaps};
    use crate::saturation::is_cluster_temporal_graph;
    use crate::temporal::VertexId;
    use proptest::prelude::*;

    fn e(u: u32, v: u32, t: u32) -> TimeEdge {
        TimeEdge::new(VertexId(u), VertexId(v), t)
    }

    #[test]
    fn counterexample_needs_two_edits() {
        let g = counterexample_five(3);
        let p = Params::new(2, 3).unwrap();
        let out = fpt_solve(&g, p, 1);
        assert!(!out.decision && out.witness.is_none());
        let out = fpt_solve(&g, p, 2);
        assert!(out.decision);
        let w = out.witness.unwrap();
        assert!(w.len() <= 2);
        assert!(is_cluster_temporal_graph(&g.apply_modifications(&w).unwrap(), p));
        assert_eq!(min_edit_distance(&g, p, 3).unwrap().0, 2);
    }

    #[test]
    fn trivial_and_small_cases() {
        let p = Params::new(1, 2).unwrap();
        let g = TemporalGraph::from_time_edges(3, [e(0, 1, 1), e(0, 1, 2)]).unwrap();
        let out = fpt_solve(&g, p, 0);
        assert!(out.decision);
        assert!(out.witness.unwrap().is_empty());
        assert_eq!(min_edit_distance(&g, p, 2).unwrap().0, 0);

        let g = TemporalGraph::from_time_edges(3, [e(0, 1, 1), e(1, 2, 1)]).unwrap();
        let (k, w) = min_edit_distance(&g, p, 2).unwrap();
        assert_eq!((k, w.len()), (1, 1));
        // deleting (0 1, 1) is the first branch
        assert_eq!(w.deletions().next().unwrap().edge, e(0, 1, 1));
        assert!(min_edit_distance(&g, p, 0).is_none());
    }

    fn small_graph() -> impl Strategy<Value = (TemporalGraph, Params)> {
        (0u64..100_000, 2usize..7, 1u32..6, 1u32..3, 1u32..3, prop::bool::ANY).prop_map(
            |(seed, n, lifetime, d1, extra, planted)| {
                let p = Params::new(d1, d1 + extra).unwrap();
                let g = if planted {
                    let universe = n * (n - 1) / 2 * lifetime as usize;
                    gen_planted(n, lifetime, p, seed, (seed as usize % 3).min(universe)).unwrap()
                } else {
                    gen_random(n, lifetime, 0.5, 0.3, seed).unwrap()
                };
                (g, p)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_oracle((g, p) in small_graph(), k in 0usize..3) {
            let caps = OracleCaps { max_budget: 2, ..OracleCaps::default() };
            let oracle = etc_bruteforce(&g, p, k, caps).unwrap();
            let out = fpt_solve(&g, p, k);
            prop_assert_eq!(out.decision, oracle.decision);
            if let Some(w) = out.witness {
                prop_assert!(w.len() <= k);
                prop_assert!(is_cluster_temporal_graph(&g.apply_modifications(&w).unwrap(), p));
            }
        }

        #[test]
        fn decision_is_monotone_in_budget((g, p) in small_graph()) {
            let decisions: Vec<bool> = (0..3).map(|k| fpt_solve(&g, p, k).decision).collect();
            prop_assert!(decisions.windows(2).all(|w| w[0] <= w[1]));
        }

        #[test]
        fn triangles_suffice_when_delta1_is_one((g, _) in small_graph(), extra in 1u32..4, k in 0usize..3) {
            let p = Params::new(1, 1 + extra).unwrap();
            let three = fpt_solve_with(&g, p, k, FptOptions { subset_size: Some(3) }).decision;
            let five = fpt_solve_with(&g, p, k, FptOptions { subset_size: Some(5) }).decision;
            prop_assert_eq!(three, five);
        }
    }
}
