//! Exact editing for temporal graphs whose underlying graph is a path.
//!
//! Every cluster of an optimal solution spans a contiguous stretch
//! `v_ℓ..v_r` of the path, and its interval must contain an appearance of
//! each path edge inside the stretch. Sweeping the path from left to right,
//! the state at `v_i` is the collection of clusters containing `v_{i-1}` and
//! `v_i`, each cut down to `v_ℓ..v_i`. Those clusters all share `v_i`, so
//! their intervals are pairwise `Δ2` apart and there are at most `σ` of them.

use std::collections::{BTreeMap, HashMap};

use crate::completion::{canonical_insertions, min_insertions};
use crate::error::{Error, Result};
use crate::modification::ModificationSet;
use crate::temporal::{Interval, Params, Template, TemporalGraph, TimeEdge, VertexId};

/// A path `v_1 .. v_n` (ids `0..n`) with the appearances of each edge `v_i v_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathInstance {
    labels: Vec<String>,
    edge_times: Vec<Vec<u32>>,
    sigma: usize,
    params: Params,
}

impl PathInstance {
    /// `edge_times[i]` lists the appearances of the `i`-th path edge. The path
    /// has `edge_times.len() + 1` vertices labelled `v1, v2, ...`.
    pub fn new(edge_times: Vec<Vec<u32>>, sigma: usize, params: Params) -> Result<Self> {
        let labels = (1..=edge_times.len() + 1).map(|i| format!("v{i}")).collect();
        Self::with_labels(labels, edge_times, sigma, params)
    }

    fn with_labels(labels: Vec<String>, mut edge_times: Vec<Vec<u32>>, sigma: usize, params: Params) -> Result<Self> {
        debug_assert_eq!(labels.len(), if labels.is_empty() { 0 } else { edge_times.len() + 1 });
        for (i, ts) in edge_times.iter_mut().enumerate() {
            ts.sort_unstable();
            ts.dedup();
            if ts.first() == Some(&0) {
                return Err(Error::InvalidTimeEdge(TimeEdge::new(
                    VertexId(i as u32),
                    VertexId(i as u32 + 1),
                    0,
                )));
            }
            if ts.len() > sigma {
                return Err(Error::SigmaExceeded {
                    edge: i,
                    count: ts.len(),
                    sigma,
                });
            }
        }
        Ok(PathInstance {
            labels,
            edge_times,
            sigma,
            params,
        })
    }

    /// Orders the vertices of a linear forest into one path, joining the
    /// components left to right by edges without appearances. Returns the
    /// instance and, for each path position, the vertex of `g` placed there.
    pub fn from_graph(g: &TemporalGraph, sigma: Option<usize>, params: Params) -> Result<(Self, Vec<VertexId>)> {
        let n = g.vertex_count();
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for ((u, v), _) in g.static_edges() {
            adj[u.index()].push(v);
            adj[v.index()].push(u);
        }
        if let Some(v) = (0..n).find(|&v| adj[v].len() > 2) {
            return Err(Error::NotAPath(format!(
                "vertex {} has degree {}",
                g.label(VertexId(v as u32)),
                adj[v].len()
            )));
        }
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for start in 0..n {
            if seen[start] || adj[start].len() == 2 {
                continue;
            }
            let (mut prev, mut cur) = (None, VertexId(start as u32));
            loop {
                seen[cur.index()] = true;
                order.push(cur);
                match adj[cur.index()].iter().find(|&&w| Some(w) != prev) {
                    Some(&next) => (prev, cur) = (Some(cur), next),
                    None => break,
                }
            }
        }
        if order.len() < n {
            return Err(Error::NotAPath("the graph contains a cycle".into()));
        }
        let edge_times = order.windows(2).map(|w| g.times(w[0], w[1]).to_vec()).collect();
        let labels = order.iter().map(|&v| g.label(v).to_owned()).collect();
        let sigma = sigma.unwrap_or_else(|| g.max_appearances());
        Ok((Self::with_labels(labels, edge_times, sigma, params)?, order))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Appearances of the edge `v_{i-1} v_i` (0-based vertex index `i ≥ 1`).
    pub fn edge_times(&self, i: usize) -> &[u32] {
        &self.edge_times[i - 1]
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn lifetime(&self) -> u32 {
        self.edge_times
            .iter()
            .filter_map(|ts| ts.last().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn to_graph(&self) -> TemporalGraph {
        let mut g = TemporalGraph::with_labels(&self.labels);
        for (i, ts) in self.edge_times.iter().enumerate() {
            for &t in ts {
                g.insert(TimeEdge::new(VertexId(i as u32), VertexId(i as u32 + 1), t))
                    .expect("times are positive");
            }
        }
        g
    }

    fn has_appearance_in(&self, i: usize, interval: Interval) -> bool {
        self.edge_times(i).iter().any(|&t| interval.contains(t))
    }
}

/// A cluster cut down to `v_left ..= v_i` at the level of vertex `v_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathTemplate {
    pub left: usize,
    pub interval: Interval,
}

impl PathTemplate {
    pub fn to_template(self, i: usize) -> Template {
        Template::new((self.left..=i).map(|v| VertexId(v as u32)).collect(), self.interval)
    }
}

/// The clusters containing `v_{i-1}` and `v_i`, sorted by `(left, a, b)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FeasibleCollection {
    templates: Vec<PathTemplate>,
}

impl FeasibleCollection {
    pub fn new(mut templates: Vec<PathTemplate>) -> Self {
        templates.sort_unstable();
        templates.dedup();
        FeasibleCollection { templates }
    }

    pub fn templates(&self) -> &[PathTemplate] {
        &self.templates
    }

    pub fn is_empty(&self) -> bool {
        self.templates.is_empty()
    }

    /// Whether the collection is valid at vertex `i`: each template starts
    /// left of `i`, has an appearance of every path edge it spans inside its
    /// interval, and the intervals are pairwise `Δ2` apart.
    pub fn is_feasible(&self, inst: &PathInstance, i: usize) -> bool {
        let delta2 = inst.params.delta2();
        self.templates
            .iter()
            .all(|p| p.left < i && (p.left + 1..=i).all(|k| inst.has_appearance_in(k, p.interval)))
            && self.templates.iter().enumerate().all(|(j, p)| {
                self.templates[j + 1..]
                    .iter()
                    .all(|q| p.interval.distance(&q.interval) >= delta2)
            })
    }
}

/// Whether `next` (at vertex `i`) can follow `prev` (at vertex `i - 1`):
/// every template of `next` reaching past `v_{i-1}` continues a template of
/// `prev` with the same interval, and every template of `prev` that ends at
/// `v_{i-1}` is `Δ2`-independent of all templates of `next`.
pub fn extends(prev: &FeasibleCollection, next: &FeasibleCollection, inst: &PathInstance, i: usize) -> bool {
    let delta2 = inst.params.delta2();
    let continued = |p: &PathTemplate| next.templates.contains(p);
    next.templates
        .iter()
        .all(|q| q.left + 1 == i || prev.templates.contains(q))
        && prev.templates.iter().filter(|p| !continued(p)).all(|p| {
            next.templates
                .iter()
                .all(|q| p.interval.distance(&q.interval) >= delta2)
        })
}

/// Additions joining `v_i` to the vertices `v_left .. v_{i-2}`, which are
/// never adjacent in the input.
pub fn cost_f(coll: &FeasibleCollection, i: usize, delta1: u32) -> usize {
    coll.templates
        .iter()
        .map(|p| (i - p.left - 1) * min_insertions(&[], p.interval, delta1) as usize)
        .sum()
}

/// Appearances of `v_{i-1} v_i` outside every interval of the collection; they must be deleted.
pub fn cost_g(coll: &FeasibleCollection, edge_times: &[u32]) -> usize {
    edge_times
        .iter()
        .filter(|&&t| !coll.templates.iter().any(|p| p.interval.contains(t)))
        .count()
}

/// Additions making `v_{i-1} v_i` dense on every interval of the collection.
pub fn cost_h(coll: &FeasibleCollection, edge_times: &[u32], delta1: u32) -> usize {
    coll.templates
        .iter()
        .map(|p| {
            let inside: Vec<u32> = edge_times.iter().copied().filter(|&t| p.interval.contains(t)).collect();
            min_insertions(&inside, p.interval, delta1) as usize
        })
        .sum()
}

fn level_cost(coll: &FeasibleCollection, inst: &PathInstance, i: usize) -> usize {
    let d1 = inst.params.delta1();
    let times = inst.edge_times(i);
    cost_f(coll, i, d1) + cost_g(coll, times) + cost_h(coll, times, d1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSolution {
    pub min_cost: usize,
    pub decision: bool,
    /// Relative to [`PathInstance::to_graph`].
    pub witness: ModificationSet,
    /// The clusters of the edited graph.
    pub templates: Vec<Template>,
}

struct Entry {
    cost: usize,
    back: usize,
}

/// One table level: collections in canonical order with their best cost and
/// the index of the chosen predecessor in the previous level.
type Level = BTreeMap<FeasibleCollection, Entry>;

/// Intervals `[a, b] ⊆ [1, T]` containing an appearance of `v_{i-1} v_i`, in `(a, b)` order.
fn new_intervals(inst: &PathInstance, i: usize) -> Vec<Interval> {
    let times = inst.edge_times(i);
    let lifetime = inst.lifetime();
    let mut out = Vec::new();
    for a in 1..=lifetime {
        for b in a..=lifetime {
            if times.iter().any(|&t| a <= t && t <= b) {
                out.push(Interval { a, b });
            }
        }
    }
    out
}

/// All sets of pairwise `delta2`-apart intervals from `candidates` (sorted by
/// start), passed to `visit` as they are built.
fn independent_subsets(
    candidates: &[Interval],
    delta2: u32,
    chosen: &mut Vec<Interval>,
    visit: &mut dyn FnMut(&[Interval]),
) {
    visit(chosen);
    for (j, &c) in candidates.iter().enumerate() {
        if chosen.last().is_none_or(|last| c.a >= last.b + delta2) {
            chosen.push(c);
            independent_subsets(&candidates[j + 1..], delta2, chosen, visit);
            chosen.pop();
        }
    }
}

fn build_levels(inst: &PathInstance) -> Vec<Vec<(FeasibleCollection, Entry)>> {
    let delta2 = inst.params.delta2();
    let mut levels: Vec<Vec<(FeasibleCollection, Entry)>> =
        vec![vec![(FeasibleCollection::default(), Entry { cost: 0, back: 0 })]];
    for i in 1..inst.vertex_count() {
        let fresh = new_intervals(inst, i);
        let mut level = Level::new();
        let mut costs: HashMap<FeasibleCollection, usize> = HashMap::new();
        for (pi, (prev, pe)) in levels[i - 1].iter().enumerate() {
            let open: Vec<bool> = prev
                .templates
                .iter()
                .map(|p| inst.has_appearance_in(i, p.interval))
                .collect();
            let extendable: Vec<PathTemplate> = prev
                .templates
                .iter()
                .zip(&open)
                .filter(|(_, &o)| o)
                .map(|(p, _)| *p)
                .collect();
            // fresh two-vertex clusters must keep clear of every cluster of prev
            let clear: Vec<Interval> = fresh
                .iter()
                .copied()
                .filter(|c| prev.templates.iter().all(|p| p.interval.distance(c) >= delta2))
                .collect();
            for mask in 0u32..1 << extendable.len() {
                let kept: Vec<PathTemplate> = extendable
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, p)| *p)
                    .collect();
                // dropped templates close at v_{i-1} and must be apart from the kept ones
                let closed_ok = prev
                    .templates
                    .iter()
                    .filter(|p| !kept.contains(p))
                    .all(|p| kept.iter().all(|q| p.interval.distance(&q.interval) >= delta2));
                if !closed_ok {
                    continue;
                }
                independent_subsets(&clear, delta2, &mut Vec::new(), &mut |added| {
                    let mut ts = kept.clone();
                    ts.extend(added.iter().map(|&interval| PathTemplate { left: i - 1, interval }));
                    let next = FeasibleCollection::new(ts);
                    let own = *costs.entry(next.clone()).or_insert_with_key(|c| level_cost(c, inst, i));
                    let total = pe.cost + own;
                    match level.get_mut(&next) {
                        Some(e) if e.cost <= total => {}
                        Some(e) => *e = Entry { cost: total, back: pi },
                        None => {
                            level.insert(next, Entry { cost: total, back: pi });
                        }
                    }
                });
            }
        }
        levels.push(level.into_iter().collect());
    }
    levels
}

/// Minimum number of time-edge edits turning the path instance into a
/// `(Δ1, Δ2)`-cluster temporal graph, with a witness.
pub fn solve_path(inst: &PathInstance, budget: usize) -> PathSolution {
    let levels = build_levels(inst);
    let last = levels.len() - 1;
    let (mut idx, best) = levels[last]
        .iter()
        .enumerate()
        .min_by_key(|(_, (_, e))| e.cost)
        .map(|(j, (_, e))| (j, e.cost))
        .expect("every level holds the empty collection");
    // walk the back-pointers and collect each cluster where it closes
    let mut templates = Vec::new();
    let mut later: Option<&FeasibleCollection> = None;
    for i in (0..=last).rev() {
        let (coll, entry) = &levels[i][idx];
        for p in &coll.templates {
            if later.is_none_or(|l| !l.templates.contains(p)) {
                templates.push(p.to_template(i));
            }
        }
        later = Some(coll);
        idx = entry.back;
    }
    templates.sort();
    let g = inst.to_graph();
    let target = materialise(&g, &templates, inst.params.delta1());
    let witness = ModificationSet::toggles(&g, g.symmetric_difference(&target).expect("same vertex set"));
    debug_assert_eq!(witness.len(), best);
    PathSolution {
        min_cost: best,
        decision: best <= budget,
        witness,
        templates,
    }
}

/// The cluster temporal graph with the given clusters that keeps every input
/// appearance inside a cluster and adds the canonical fill.
fn materialise(g: &TemporalGraph, templates: &[Template], delta1: u32) -> TemporalGraph {
    let mut h = TemporalGraph::with_labels(g.labels());
    for c in templates {
        for (j, &x) in c.vertices.iter().enumerate() {
            for &y in &c.vertices[j + 1..] {
                let inside: Vec<u32> = g
                    .times(x, y)
                    .iter()
                    .copied()
                    .filter(|&t| c.interval.contains(t))
                    .collect();
                for t in inside
                    .iter()
                    .copied()
                    .chain(canonical_insertions(&inside, c.interval, delta1))
                {
                    h.insert(TimeEdge::new(x, y, t)).expect("positive time");
                }
            }
        }
    }
    h
}

/// Runs [`solve_path`] on a linear forest and maps the witness back to the
/// vertex ids of `g`.
pub fn solve_path_graph(
    g: &TemporalGraph,
    params: Params,
    sigma: Option<usize>,
    budget: usize,
) -> Result<PathSolution> {
    let (inst, order) = PathInstance::from_graph(g, sigma, params)?;
    let sol = solve_path(&inst, budget);
    let map = |v: VertexId| order[v.index()];
    let witness = ModificationSet::toggles(g, sol.witness.edges().map(|e| TimeEdge::new(map(e.u), map(e.v), e.t)));
    let templates = sol
        .templates
        .iter()
        .map(|c| Template::new(c.vertices.iter().map(|&v| map(v)).collect(), c.interval))
        .collect();
    Ok(PathSolution {
        witness,
        templates,
        ..sol
    })
}
