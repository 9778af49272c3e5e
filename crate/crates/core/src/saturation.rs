//! Saturated partitions and recognition of cluster temporal graphs.
//!
//! Every set of time-edges splits uniquely into maximal `Δ2`-indivisible
//! blocks. A graph is a `(Δ1, Δ2)`-cluster temporal graph exactly when each
//! block is a `Δ1`-temporal clique, which gives a polynomial recogniser. The
//! local check of [`subset_characterisation_check`] tests the same property
//! through induced subgraphs on at most five vertices (three when `Δ1 = 1`).

use std::collections::{HashMap, VecDeque};
use std::ops::Range;

use itertools::Itertools;
use smallvec::SmallVec;

use crate::temporal::{is_dense, Interval, Params, Template, TemporalGraph, TimeEdge, VertexId};

/// Whether two templates are `delta2`-independent: disjoint vertex sets, or
/// intervals at least `delta2` apart.
pub fn templates_independent(c1: &Template, c2: &Template, delta2: u32) -> bool {
    c1.interval.distance(&c2.interval) >= delta2 || !c1.shares_vertex(c2)
}

/// One block of a saturated partition with the template it generates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted in `(u, v, t)` order.
    pub edges: Vec<TimeEdge>,
    pub template: Template,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SaturatedPartition {
    /// Ordered by each block's earliest time-edge in `(t, u, v)` order.
    pub blocks: Vec<Block>,
}

impl SaturatedPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Runs the merge procedure again, starting from the current blocks, and
    /// reports how many merges it performs. Zero for a genuine partition.
    pub fn remerge_count(&self, delta2: u32) -> usize {
        let list = self
            .blocks
            .iter()
            .map(|b| WorkBlock::from_edges(b.edges.clone()))
            .collect();
        merge_until_stable(list, delta2).1
    }

    /// Whether every block is a `delta1`-temporal clique.
    pub fn all_cliques(&self, delta1: u32) -> bool {
        self.blocks
            .iter()
            .all(|b| block_is_clique(&b.edges, b.template.vertices.len(), b.template.interval, delta1))
    }
}

/// Bitmask over vertex ids; inline for graphs up to 128 vertices.
#[derive(Clone, Debug)]
struct VertexMask(SmallVec<[u64; 2]>);

impl VertexMask {
    fn of_edge(e: &TimeEdge) -> Self {
        let mut m = VertexMask(SmallVec::new());
        m.set(e.u.index());
        m.set(e.v.index());
        m
    }

    fn set(&mut self, i: usize) {
        let w = i / 64;
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << (i % 64);
    }

    fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    fn union_with(&mut self, other: &Self) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), 0);
        }
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn to_vertices(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.count());
        for (wi, &w) in self.0.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(VertexId((wi * 64 + b) as u32));
                bits &= bits - 1;
            }
        }
        out
    }
}

/// A list entry of the merge procedure, with its generated template cached.
#[derive(Clone, Debug)]
struct WorkBlock {
    edges: Vec<TimeEdge>,
    verts: VertexMask,
    interval: Interval,
}

impl WorkBlock {
    fn single(e: TimeEdge) -> Self {
        WorkBlock {
            edges: vec![e],
            verts: VertexMask::of_edge(&e),
            interval: Interval { a: e.t, b: e.t },
        }
    }

    fn from_edges(edges: Vec<TimeEdge>) -> Self {
        let mut it = edges.iter();
        let mut block = WorkBlock::single(*it.next().expect("blocks are non-empty"));
        for e in it {
            block.verts.union_with(&VertexMask::of_edge(e));
            block.interval = block.interval.hull(&Interval { a: e.t, b: e.t });
        }
        block.edges = edges;
        block
    }

    fn independent(&self, other: &WorkBlock, delta2: u32) -> bool {
        self.interval.distance(&other.interval) >= delta2 || !self.verts.intersects(&other.verts)
    }

    fn absorb(&mut self, other: WorkBlock) {
        self.edges.extend(other.edges);
        self.verts.union_with(&other.verts);
        self.interval = self.interval.hull(&other.interval);
    }
}

/// Repeated passes over the list: the head block merges with the first later
/// block it is not independent of, and passes repeat until one makes no merge.
/// Returns the final list and the number of merges performed.
fn merge_until_stable(list: Vec<WorkBlock>, delta2: u32) -> (Vec<WorkBlock>, usize) {
    let mut current: VecDeque<WorkBlock> = list.into();
    let mut merges = 0;
    loop {
        let mut next = Vec::with_capacity(current.len());
        let mut merged_this_pass = false;
        while let Some(mut head) = current.pop_front() {
            if let Some(j) = current.iter().position(|other| !head.independent(other, delta2)) {
                let other = current.remove(j).expect("index from position");
                head.absorb(other);
                merges += 1;
                merged_this_pass = true;
            }
            next.push(head);
        }
        current = next.into();
        if !merged_this_pass {
            return (current.into(), merges);
        }
    }
}

/// The unique partition of `edges` into `delta2`-saturated blocks.
pub fn partition_time_edges(edges: &[TimeEdge], delta2: u32) -> SaturatedPartition {
    let list = edges.iter().copied().map(WorkBlock::single).collect();
    let (blocks, _) = merge_until_stable(list, delta2);
    let mut blocks: Vec<Block> = blocks
        .into_iter()
        .map(|mut w| {
            w.edges.sort_unstable();
            w.edges.dedup();
            Block {
                template: Template {
                    vertices: w.verts.to_vertices(),
                    interval: w.interval,
                },
                edges: w.edges,
            }
        })
        .collect();
    blocks.sort_by_key(|b| b.edges.iter().map(|e| (e.t, e.u, e.v)).min());
    SaturatedPartition { blocks }
}

pub fn saturated_partition(g: &TemporalGraph, delta2: u32) -> SaturatedPartition {
    partition_time_edges(&g.time_edges(), delta2)
}

/// Density of every vertex pair of a block over `interval`, using the block's
/// own appearances. `edges` must be sorted in `(u, v, t)` order.
fn block_is_clique(edges: &[TimeEdge], vertex_count: usize, interval: Interval, delta1: u32) -> bool {
    let needed = vertex_count * (vertex_count - 1) / 2;
    let mut pairs = 0;
    let mut times: SmallVec<[u32; 16]> = SmallVec::new();
    for (_, group) in &edges.iter().chunk_by(|e| e.pair()) {
        pairs += 1;
        times.clear();
        times.extend(group.map(|e| e.t));
        if !is_dense(&times, delta1, interval) {
            return false;
        }
    }
    pairs == needed
}

/// Recognition on a raw time-edge set (vertices without edges are irrelevant).
pub fn is_cluster_time_edges(edges: &[TimeEdge], params: Params) -> bool {
    let list: Vec<WorkBlock> = edges.iter().copied().map(WorkBlock::single).collect();
    let (blocks, _) = merge_until_stable(list, params.delta2());
    blocks.into_iter().all(|mut b| {
        b.edges.sort_unstable();
        block_is_clique(&b.edges, b.verts.count(), b.interval, params.delta1())
    })
}

/// Whether `g` is a `(Δ1, Δ2)`-cluster temporal graph.
pub fn is_cluster_temporal_graph(g: &TemporalGraph, params: Params) -> bool {
    is_cluster_time_edges(&g.time_edges(), params)
}

/// Size bound on the subsets the local characterisation needs.
pub fn characterisation_subset_size(params: Params) -> usize {
    if params.delta1() == 1 {
        3
    } else {
        5
    }
}

/// Memo of recognition results keyed by an induced time-edge set.
#[derive(Debug, Default)]
pub struct RecognitionCache {
    map: HashMap<Vec<TimeEdge>, bool>,
    hits: u64,
}

impl RecognitionCache {
    const MAX_ENTRIES: usize = 1 << 20;

    pub fn new() -> Self {
        Self::default()
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    fn check(&mut self, edges: &[TimeEdge], params: Params) -> bool {
        if let Some(&known) = self.map.get(edges) {
            self.hits += 1;
            return known;
        }
        let ok = is_cluster_time_edges(edges, params);
        if self.map.len() >= Self::MAX_ENTRIES {
            self.map.clear();
        }
        self.map.insert(edges.to_vec(), ok);
        ok
    }
}

/// Time-edges sorted by `(u, v, t)` with an index from static pair to slice range.
struct PairIndex<'a> {
    edges: &'a [TimeEdge],
    ranges: HashMap<(VertexId, VertexId), Range<usize>>,
}

impl<'a> PairIndex<'a> {
    fn new(edges: &'a [TimeEdge]) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut ranges = HashMap::new();
        let mut start = 0;
        for i in 1..=edges.len() {
            if i == edges.len() || edges[i].pair() != edges[start].pair() {
                ranges.insert(edges[start].pair(), start..i);
                start = i;
            }
        }
        PairIndex { edges, ranges }
    }

    fn induced_into(&self, subset: &[VertexId], out: &mut Vec<TimeEdge>) {
        out.clear();
        for (i, &x) in subset.iter().enumerate() {
            for &y in &subset[i + 1..] {
                if let Some(r) = self.ranges.get(&(x, y)) {
                    out.extend_from_slice(&self.edges[r.clone()]);
                }
            }
        }
    }
}

/// First vertex subset of size `2..=max_size` (by size, then lexicographically
/// by sorted ids) whose induced subgraph is not a cluster temporal graph.
///
/// Single vertices induce no time-edges and are skipped. `edges` must be
/// sorted in `(u, v, t)` order and duplicate-free.
pub fn first_violating_subset_in(
    vertex_count: usize,
    edges: &[TimeEdge],
    params: Params,
    max_size: usize,
    mut cache: Option<&mut RecognitionCache>,
) -> Option<Vec<VertexId>> {
    let index = PairIndex::new(edges);
    let mut induced = Vec::new();
    for size in 2..=max_size.min(vertex_count) {
        for subset in (0..vertex_count as u32).map(VertexId).combinations(size) {
            index.induced_into(&subset, &mut induced);
            if induced.is_empty() {
                continue;
            }
            let ok = match cache.as_deref_mut() {
                Some(c) => c.check(&induced, params),
                None => is_cluster_time_edges(&induced, params),
            };
            if !ok {
                return Some(subset);
            }
        }
    }
    None
}

pub fn first_violating_subset(g: &TemporalGraph, params: Params, max_size: usize) -> Option<Vec<VertexId>> {
    first_violating_subset_in(g.vertex_count(), &g.time_edges(), params, max_size, None)
}

/// The local test: `(true, None)` if every induced subgraph on at most five
/// vertices (three when `Δ1 = 1`) is a cluster temporal graph, otherwise
/// `(false, Some(first violating subset))`.
pub fn subset_characterisation_check(g: &TemporalGraph, params: Params) -> (bool, Option<Vec<VertexId>>) {
    let violator = first_violating_subset(g, params, characterisation_subset_size(params));
    (violator.is_none(), violator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(a: u32, b: u32) -> Interval {
        Interval::new(a, b).unwrap()
    }

    fn tpl(vs: &[u32], a: u32, b: u32) -> Template {
        Template::new(vs.iter().map(|&v| VertexId(v)).collect(), iv(a, b))
    }

    fn graph(n: usize, edges: &[(u32, u32, u32)]) -> TemporalGraph {
        TemporalGraph::from_time_edges(
            n,
            edges
                .iter()
                .map(|&(u, v, t)| TimeEdge::new(VertexId(u), VertexId(v), t)),
        )
        .unwrap()
    }

    // a=0 b=1 c=2 d=3 e=4
    fn ce5(delta2: u32) -> TemporalGraph {
        graph(
            5,
            &[
                (0, 2, 1),
                (1, 2, 1),
                (0, 1, 2),
                (2, 3, delta2 + 2),
                (2, 4, delta2 + 2),
                (3, 4, delta2 + 1),
            ],
        )
    }

    #[test]
    fn independence_examples() {
        assert!(templates_independent(&tpl(&[0, 1], 1, 2), &tpl(&[2, 3], 1, 2), 3));
        assert!(templates_independent(&tpl(&[0, 1], 1, 2), &tpl(&[1, 2], 5, 6), 3));
        assert!(!templates_independent(&tpl(&[0, 1], 1, 2), &tpl(&[1, 2], 5, 6), 4));
    }

    #[test]
    fn partition_examples() {
        let p = saturated_partition(&ce5(3), 3);
        assert_eq!(p.len(), 1);
        assert_eq!(p.blocks[0].edges.len(), 6);
        assert_eq!(p.blocks[0].template, tpl(&[0, 1, 2, 3, 4], 1, 5));

        let p = saturated_partition(&graph(2, &[(0, 1, 1), (0, 1, 4)]), 3);
        assert_eq!(p.len(), 2);

        let p = saturated_partition(&graph(3, &[(0, 1, 1), (1, 2, 1)]), 2);
        assert_eq!(p.len(), 1);
        assert_eq!(p.blocks[0].template, tpl(&[0, 1, 2], 1, 1));

        assert!(saturated_partition(&TemporalGraph::with_vertices(3), 2).is_empty());
    }

    #[test]
    fn recognition_examples() {
        let p = Params::new(2, 3).unwrap();
        assert!(!is_cluster_temporal_graph(&ce5(3), p));
        assert!(is_cluster_temporal_graph(&graph(2, &[(0, 1, 4)]), p));
        assert!(is_cluster_temporal_graph(
            &graph(2, &[(0, 1, 4)]),
            Params::new(1, 9).unwrap()
        ));
        assert!(is_cluster_temporal_graph(&TemporalGraph::new(), p));
    }

    #[test]
    fn two_vertex_graphs_can_fail() {
        // one block over [1, 3] that is not 1-dense
        let g = graph(2, &[(0, 1, 1), (0, 1, 3)]);
        let p = Params::new(1, 3).unwrap();
        assert!(!is_cluster_temporal_graph(&g, p));
        assert_eq!(
            subset_characterisation_check(&g, p),
            (false, Some(vec![VertexId(0), VertexId(1)]))
        );
    }

    #[test]
    fn characterisation_examples() {
        let p = Params::new(2, 3).unwrap();
        let (ok, w) = subset_characterisation_check(&ce5(3), p);
        assert!(!ok);
        assert_eq!(w.unwrap(), (0..5).map(VertexId).collect::<Vec<_>>());

        let p = Params::new(1, 2).unwrap();
        assert_eq!(subset_characterisation_check(&graph(2, &[(0, 1, 1)]), p), (true, None));
        let (ok, w) = subset_characterisation_check(&graph(3, &[(0, 1, 1), (1, 2, 1)]), p);
        assert!(!ok);
        assert_eq!(w.unwrap(), vec![VertexId(0), VertexId(1), VertexId(2)]);
    }

    /// Exhaustive definition-level oracle for tiny edge sets: a set is
    /// indivisible iff no partition into >= 2 pairwise independent parts exists.
    fn indivisible(edges: &[TimeEdge], delta2: u32) -> bool {
        fn search(edges: &[TimeEdge], delta2: u32, labels: &mut Vec<usize>) -> bool {
            if labels.len() == edges.len() {
                let parts = labels.iter().max().map_or(0, |m| m + 1);
                if parts < 2 {
                    return false;
                }
                let tpls: Vec<Template> = (0..parts)
                    .map(|p| {
                        let group: Vec<TimeEdge> =
                            (0..edges.len()).filter(|&i| labels[i] == p).map(|i| edges[i]).collect();
                        crate::temporal::generate_template(&group).unwrap()
                    })
                    .collect();
                return (0..parts).all(|i| (i + 1..parts).all(|j| templates_independent(&tpls[i], &tpls[j], delta2)));
            }
            let next = labels.iter().max().map_or(0, |m| m + 1);
            for l in 0..=next {
                labels.push(l);
                if search(edges, delta2, labels) {
                    return true;
                }
                labels.pop();
            }
            false
        }
        !search(edges, delta2, &mut Vec::new())
    }

    #[test]
    fn ce5_block_is_indivisible_by_definition() {
        let g = ce5(3);
        assert!(indivisible(&g.time_edges(), 3));
        assert!(!indivisible(&graph(2, &[(0, 1, 1), (0, 1, 4)]).time_edges(), 3));
    }

    fn arb_edges(n: u32, max_t: u32, max_len: usize) -> impl Strategy<Value = Vec<TimeEdge>> {
        proptest::collection::btree_set((0..n, 1..n, 1..=max_t), 0..max_len).prop_map(move |raw| {
            let mut v: Vec<TimeEdge> = raw
                .into_iter()
                .map(|(x, d, t)| TimeEdge::new(VertexId(x), VertexId((x + d) % n), t))
                .filter(|e| e.u != e.v)
                .collect();
            v.sort();
            v.dedup();
            v
        })
    }

    proptest! {
        #[test]
        fn blocks_are_independent_and_indivisible(edges in arb_edges(5, 7, 7), delta2 in 1u32..5) {
            let p = partition_time_edges(&edges, delta2);
            let mut all: Vec<TimeEdge> = p.blocks.iter().flat_map(|b| b.edges.clone()).collect();
            all.sort();
            prop_assert_eq!(&all, &edges);
            for (i, b) in p.blocks.iter().enumerate() {
                prop_assert!(indivisible(&b.edges, delta2));
                for c in &p.blocks[i + 1..] {
                    prop_assert!(templates_independent(&b.template, &c.template, delta2));
                }
            }
            prop_assert_eq!(p.remerge_count(delta2), 0);
        }

        #[test]
        fn partition_ignores_input_order(edges in arb_edges(6, 8, 12), delta2 in 1u32..5, seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut shuffled = edges.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(partition_time_edges(&edges, delta2), partition_time_edges(&shuffled, delta2));
        }

        #[test]
        fn recognition_is_hereditary(edges in arb_edges(6, 6, 10), d1 in 1u32..3, extra in 1u32..3, keep in proptest::collection::btree_set(0u32..6, 0..6)) {
            let p = Params::new(d1, d1 + extra).unwrap();
            let g = TemporalGraph::from_time_edges(6, edges).unwrap();
            prop_assume!(is_cluster_temporal_graph(&g, p));
            let keep: Vec<VertexId> = keep.into_iter().map(VertexId).collect();
            prop_assert!(is_cluster_temporal_graph(&g.induce(&keep).unwrap(), p));
        }
    }
}
