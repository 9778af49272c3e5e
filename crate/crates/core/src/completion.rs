//! Completion by additions only.
//!
//! Additions never split a saturated block, so the optimum completes each
//! block of the saturated partition into a temporal clique on its own
//! template. For one vertex pair of a block with template interval `[a, b]`,
//! the fewest appearances to add follows from the gaps between consecutive
//! existing appearances, bracketed by the sentinels `a − 1` and `b + 1`.

use std::collections::BTreeMap;

use crate::modification::{Modification, ModificationSet};
use crate::saturation::saturated_partition;
use crate::temporal::{Interval, Params, TemporalGraph, TimeEdge, VertexId};

/// Fewest points to place strictly between two markers `gap` apart so that
/// consecutive distances are all at most `delta1`.
pub fn min_insertions_for_gap(gap: u32, delta1: u32) -> u32 {
    debug_assert!(gap >= 1 && delta1 >= 1);
    gap.div_ceil(delta1) - 1
}

/// Fewest appearances to add to `times` (sorted, all inside `interval`) to
/// make the pair `delta1`-dense in `interval` without leaving it.
pub fn min_insertions(times: &[u32], interval: Interval, delta1: u32) -> u32 {
    let mut prev = interval.a - 1;
    let mut total = 0;
    for &t in times.iter().chain(std::iter::once(&(interval.b + 1))) {
        total += min_insertions_for_gap(t - prev, delta1);
        prev = t;
    }
    // an interval shorter than delta1 still needs one appearance
    if times.is_empty() && total == 0 {
        1
    } else {
        total
    }
}

/// The appearances [`min_insertions`] counts, placed at `prev + Δ1`,
/// `prev + 2Δ1`, ... inside each gap (or at `a` for a short empty interval).
pub fn canonical_insertions(times: &[u32], interval: Interval, delta1: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut prev = interval.a - 1;
    for &t in times.iter().chain(std::iter::once(&(interval.b + 1))) {
        let m = min_insertions_for_gap(t - prev, delta1);
        out.extend((1..=m).map(|j| prev + delta1 * j));
        prev = t;
    }
    if times.is_empty() && out.is_empty() {
        out.push(interval.a);
    }
    out
}

/// Count given by flooring each over-long gap with sentinels `a` and `b`.
/// Kept for comparison only; it is not the minimum in general.
pub fn floor_spacing_count(times: &[u32], interval: Interval, delta1: u32) -> u32 {
    let mut prev = interval.a;
    let mut total = 0;
    for &t in times.iter().chain(std::iter::once(&interval.b)) {
        let gap = t - prev;
        if gap > delta1 {
            total += gap / delta1;
        }
        prev = t;
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionResult {
    pub min_additions: usize,
    /// Additions only, one per counted appearance.
    pub additions: ModificationSet,
    /// [`floor_spacing_count`] summed over the same pairs.
    pub floor_spacing_estimate: usize,
}

impl CompletionResult {
    pub fn decide(&self, budget: usize) -> bool {
        self.min_additions <= budget
    }
}

/// Minimum completion of `g` into a `(Δ1, Δ2)`-cluster temporal graph.
pub fn complete(g: &TemporalGraph, params: Params) -> CompletionResult {
    let delta1 = params.delta1();
    let partition = saturated_partition(g, params.delta2());
    let mut additions = ModificationSet::new();
    let mut estimate = 0usize;
    for block in &partition.blocks {
        let interval = block.template.interval;
        let mut by_pair: BTreeMap<(VertexId, VertexId), Vec<u32>> = BTreeMap::new();
        for e in &block.edges {
            by_pair.entry(e.pair()).or_default().push(e.t);
        }
        let vs = &block.template.vertices;
        for (i, &x) in vs.iter().enumerate() {
            for &y in &vs[i + 1..] {
                let times = by_pair.get(&(x, y)).map_or(&[][..], Vec::as_slice);
                estimate += floor_spacing_count(times, interval, delta1) as usize;
                for t in canonical_insertions(times, interval, delta1) {
                    additions.insert(Modification::add(TimeEdge::new(x, y, t)));
                }
            }
        }
    }
    CompletionResult {
        min_additions: additions.len(),
        additions,
        floor_spacing_estimate: estimate,
    }
}
