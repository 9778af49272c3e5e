//! Temporal graphs, time-edges, intervals and templates.
//!
//! A temporal graph is a static graph whose edges carry a non-empty set of
//! positive integer appearance times. Vertices are interned: callers address
//! them by string label, the library by dense [`VertexId`]s `0..n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::modification::{ModificationSet, Op};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An appearance of the undirected edge `uv` at time `t`.
///
/// Constructed through [`TimeEdge::new`], which stores the endpoints with
/// `u < v`. The derived order is `(u, v, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimeEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub t: u32,
}

impl TimeEdge {
    pub fn new(x: VertexId, y: VertexId, t: u32) -> Self {
        let (u, v) = if x <= y { (x, y) } else { (y, x) };
        TimeEdge { u, v, t }
    }

    pub fn pair(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    fn validate(&self) -> Result<()> {
        if self.t == 0 || self.u == self.v {
            return Err(Error::InvalidTimeEdge(*self));
        }
        Ok(())
    }
}

impl fmt::Display for TimeEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{}, {})", self.u, self.v, self.t)
    }
}

/// Closed interval `[a, b]` of timesteps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub a: u32,
    pub b: u32,
}

impl Interval {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a > b {
            return Err(Error::InvalidInterval { a, b });
        }
        Ok(Interval { a, b })
    }

    // never zero, so there is no `is_empty`
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u32 {
        self.b - self.a + 1
    }

    pub fn contains(&self, t: u32) -> bool {
        self.a <= t && t <= self.b
    }

    /// `min |s - t|` over `s` in `self` and `t` in `other`; zero when they overlap.
    pub fn distance(&self, other: &Interval) -> u32 {
        if self.b < other.a {
            other.a - self.b
        } else {
            self.a.saturating_sub(other.b)
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            a: self.a.min(other.a),
            b: self.b.max(other.b),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

/// The blueprint `(X, [a, b])` of a candidate clique.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Template {
    /// Sorted, duplicate-free.
    pub vertices: Vec<VertexId>,
    pub interval: Interval,
}

impl Template {
    pub fn new(mut vertices: Vec<VertexId>, interval: Interval) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Template { vertices, interval }
    }

    pub fn shares_vertex(&self, other: &Template) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// The pair `(Δ1, Δ2)`: clique density window and cluster separation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    delta1: u32,
    delta2: u32,
}

impl Params {
    pub fn new(delta1: u32, delta2: u32) -> Result<Self> {
        if delta1 == 0 || delta2 <= delta1 {
            return Err(Error::InvalidParams { delta1, delta2 });
        }
        Ok(Params { delta1, delta2 })
    }

    pub fn delta1(&self) -> u32 {
        self.delta1
    }

    pub fn delta2(&self) -> u32 {
        self.delta2
    }
}

/// Whether an edge with the sorted appearance list `times` is `delta1`-dense
/// in `interval`: every window `[τ, τ + Δ1 − 1]` with
/// `τ ∈ [a, max(a, b − Δ1 + 1)]` holds an appearance.
///
/// When the interval is shorter than `delta1` the single window overhangs
/// `b`, and appearances past `b` count. Callers choose which appearances to
/// pass in.
pub fn is_dense(times: &[u32], delta1: u32, interval: Interval) -> bool {
    debug_assert!(times.windows(2).all(|w| w[0] <= w[1]));
    let last = interval.a.max((interval.b + 1).saturating_sub(delta1));
    // smallest window start not yet known to be covered
    let mut start = interval.a;
    let mut idx = times.partition_point(|&t| t < start);
    while start <= last {
        match times.get(idx) {
            Some(&t) if t < start + delta1 => {
                start = t + 1;
                idx += 1;
            }
            _ => return false,
        }
    }
    true
}

/// The template `(V(S), L(S))` generated by a set of time-edges.
pub fn generate_template(edges: &[TimeEdge]) -> Result<Template> {
    let first = edges.first().ok_or(Error::EmptyTimeEdgeSet)?;
    let mut interval = Interval::new(first.t, first.t)?;
    let mut vertices = Vec::with_capacity(edges.len() * 2);
    for e in edges {
        interval = interval.hull(&Interval { a: e.t, b: e.t });
        vertices.push(e.u);
        vertices.push(e.v);
    }
    Ok(Template::new(vertices, interval))
}

/// Whether `edges` forms a `delta1`-temporal clique: every vertex pair of the
/// generated template is dense over the generated lifetime, counting only
/// appearances inside `edges`.
pub fn is_temporal_clique(edges: &[TimeEdge], delta1: u32) -> Result<bool> {
    let template = generate_template(edges)?;
    let mut by_pair: BTreeMap<(VertexId, VertexId), Vec<u32>> = BTreeMap::new();
    for e in edges {
        by_pair.entry(e.pair()).or_default().push(e.t);
    }
    let k = template.vertices.len();
    if by_pair.len() < k * (k - 1) / 2 {
        return Ok(false);
    }
    Ok(by_pair.values_mut().all(|times| {
        times.sort_unstable();
        is_dense(times, delta1, template.interval)
    }))
}

/// A temporal graph with interned vertex labels.
///
/// Appearance lists are kept sorted and duplicate-free; inserting an existing
/// time-edge is a no-op. No static edge is stored with an empty list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TemporalGraph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    appearances: BTreeMap<(VertexId, VertexId), Vec<u32>>,
}

impl TemporalGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph on `n` vertices labelled `"0"`, `"1"`, ...
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for i in 0..n {
            g.add_vertex(&i.to_string());
        }
        g
    }

    pub fn with_labels<S: AsRef<str>>(labels: &[S]) -> Self {
        let mut g = Self::new();
        for l in labels {
            g.add_vertex(l.as_ref());
        }
        g
    }

    /// Builds a graph on `n` numerically labelled vertices from raw time-edges.
    pub fn from_time_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = TimeEdge>,
    {
        let mut g = Self::with_vertices(n);
        for e in edges {
            g.insert(e)?;
        }
        Ok(g)
    }

    /// Interns `label`, returning the existing id if already present.
    pub fn add_vertex(&mut self, label: &str) -> VertexId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = VertexId(self.labels.len() as u32);
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        id
    }

    pub fn vertex_id(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    /// Adds a time-edge by label, interning unseen labels.
    pub fn add_labelled(&mut self, x: &str, y: &str, t: u32) -> Result<bool> {
        let u = self.add_vertex(x);
        let v = self.add_vertex(y);
        self.insert(TimeEdge::new(u, v, t))
    }

    /// Inserts a time-edge; returns `false` if it was already present.
    pub fn insert(&mut self, e: TimeEdge) -> Result<bool> {
        e.validate()?;
        self.check_vertex(e.v)?;
        let times = self.appearances.entry(e.pair()).or_default();
        match times.binary_search(&e.t) {
            Ok(_) => Ok(false),
            Err(pos) => {
                times.insert(pos, e.t);
                Ok(true)
            }
        }
    }

    /// Removes a time-edge; returns `false` if it was absent.
    pub fn remove(&mut self, e: &TimeEdge) -> bool {
        let Some(times) = self.appearances.get_mut(&e.pair()) else {
            return false;
        };
        let Ok(pos) = times.binary_search(&e.t) else {
            return false;
        };
        times.remove(pos);
        if times.is_empty() {
            self.appearances.remove(&e.pair());
        }
        true
    }

    pub fn contains(&self, e: &TimeEdge) -> bool {
        self.times(e.u, e.v).binary_search(&e.t).is_ok()
    }

    /// Sorted appearance times of the static edge `xy` (empty if absent).
    pub fn times(&self, x: VertexId, y: VertexId) -> &[u32] {
        let key = if x <= y { (x, y) } else { (y, x) };
        self.appearances.get(&key).map_or(&[], Vec::as_slice)
    }

    /// Static edges with their appearance lists, ordered by endpoint ids.
    pub fn static_edges(&self) -> impl Iterator<Item = ((VertexId, VertexId), &[u32])> {
        self.appearances.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    pub fn static_edge_count(&self) -> usize {
        self.appearances.len()
    }

    /// All time-edges in `(u, v, t)` order.
    pub fn time_edges(&self) -> Vec<TimeEdge> {
        self.appearances
            .iter()
            .flat_map(|(&(u, v), ts)| ts.iter().map(move |&t| TimeEdge { u, v, t }))
            .collect()
    }

    pub fn time_edge_count(&self) -> usize {
        self.appearances.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.appearances.is_empty()
    }

    /// Largest appearance time, or 0 for a graph without time-edges.
    pub fn lifetime(&self) -> u32 {
        self.appearances
            .values()
            .filter_map(|ts| ts.last().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn min_time(&self) -> Option<u32> {
        self.appearances.values().filter_map(|ts| ts.first().copied()).min()
    }

    pub fn max_appearances(&self) -> usize {
        self.appearances.values().map(Vec::len).max().unwrap_or(0)
    }

    /// Shifts all times so that the earliest appearance is at time 1.
    pub fn normalise_times(&self) -> TemporalGraph {
        let mut g = self.clone();
        if let Some(min) = self.min_time() {
            for ts in g.appearances.values_mut() {
                for t in ts.iter_mut() {
                    *t = *t - min + 1;
                }
            }
        }
        g
    }

    /// `G[A]`: the graph on vertex set `subset` keeping the time-edges with both
    /// endpoints in it. Vertices are renumbered in increasing id order and keep
    /// their labels.
    pub fn induce(&self, subset: &[VertexId]) -> Result<TemporalGraph> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut remap = vec![None; self.vertex_count()];
        let mut g = TemporalGraph::new();
        for &v in &sorted {
            self.check_vertex(v)?;
            remap[v.index()] = Some(g.add_vertex(self.label(v)));
        }
        for (&(u, v), ts) in &self.appearances {
            if let (Some(nu), Some(nv)) = (remap[u.index()], remap[v.index()]) {
                g.appearances.insert((nu, nv), ts.clone());
            }
        }
        Ok(g)
    }

    /// `G|[a,b]`: same vertex set, time-edges with `t` in `interval`.
    pub fn restrict(&self, interval: Interval) -> TemporalGraph {
        let mut g = TemporalGraph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            appearances: BTreeMap::new(),
        };
        for (&k, ts) in &self.appearances {
            let kept: Vec<u32> = ts.iter().copied().filter(|&t| interval.contains(t)).collect();
            if !kept.is_empty() {
                g.appearances.insert(k, kept);
            }
        }
        g
    }

    /// Time-edges present in exactly one of the two graphs, in `(u, v, t)` order.
    pub fn symmetric_difference(&self, other: &TemporalGraph) -> Result<Vec<TimeEdge>> {
        if self.labels != other.labels {
            return Err(Error::VertexUniverseMismatch);
        }
        let mine = self.time_edges();
        let theirs = other.time_edges();
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < mine.len() || j < theirs.len() {
            match (mine.get(i), theirs.get(j)) {
                (Some(x), Some(y)) if x == y => {
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(*x);
                    i += 1;
                }
                (Some(_), Some(y)) => {
                    out.push(*y);
                    j += 1;
                }
                (Some(x), None) => {
                    out.push(*x);
                    i += 1;
                }
                (None, Some(y)) => {
                    out.push(*y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Ok(out)
    }

    /// Applies additions and deletions. Every operation must toggle: adding a
    /// present time-edge or deleting an absent one is rejected.
    pub fn apply_modifications(&self, mods: &ModificationSet) -> Result<TemporalGraph> {
        let mut g = self.clone();
        for m in mods.iter() {
            let toggled = match m.op {
                Op::Add => g.insert(m.edge)?,
                Op::Delete => g.remove(&m.edge),
            };
            if !toggled {
                return Err(Error::NonTogglingModification(m.to_string()));
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() >= self.labels.len() {
            return Err(Error::UnknownVertex(v.index()));
        }
        Ok(())
    }
}
