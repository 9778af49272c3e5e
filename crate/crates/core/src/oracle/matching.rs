use itertools::Itertools;

use crate::error::{Error, Result};
use crate::oracle::OracleCaps;
use crate::temporal::{Params, TemporalGraph, TimeEdge, VertexId};

/// Temporal matching on a path `v1 - v2 - ... - vn`: `edge_times[i]` lists the
/// appearances of `v(i+1) v(i+2)`. Asks for `k` pairwise `delta`-independent
/// time-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TmInstance {
    pub edge_times: Vec<Vec<u32>>,
    pub delta: u32,
    pub k: usize,
}

impl TmInstance {
    /// Path graph labelled `v1..vn`; an instance without edges has no vertices.
    pub fn to_graph(&self) -> Result<TemporalGraph> {
        let n = if self.edge_times.is_empty() {
            0
        } else {
            self.edge_times.len() + 1
        };
        let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let mut g = TemporalGraph::with_labels(&labels);
        for (i, times) in self.edge_times.iter().enumerate() {
            for &t in times {
                g.insert(TimeEdge::new(VertexId(i as u32), VertexId(i as u32 + 1), t))?;
            }
        }
        Ok(g)
    }

    pub fn time_edge_count(&self) -> usize {
        self.edge_times.iter().map(|ts| ts.iter().unique().count()).sum()
    }
}

fn independent(x: &TimeEdge, y: &TimeEdge, delta: u32) -> bool {
    let disjoint = x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v;
    disjoint || x.t.abs_diff(y.t) >= delta
}

/// Whether some `k` time-edges are pairwise `delta`-independent. Only the
/// vertex and lifetime caps apply; `k` itself is not capped.
pub fn tm_bruteforce(inst: &TmInstance, caps: OracleCaps) -> Result<bool> {
    let g = inst.to_graph()?;
    if g.vertex_count() > caps.max_vertices || g.lifetime() > caps.max_lifetime {
        return Err(Error::OracleScaleLimit(format!(
            "{} vertices, lifetime {}",
            g.vertex_count(),
            g.lifetime()
        )));
    }
    let edges = g.time_edges();
    Ok(edges.iter().combinations(inst.k).any(|set| {
        set.iter()
            .tuple_combinations()
            .all(|(x, y)| independent(x, y, inst.delta))
    }))
}

/// An editing instance equivalent to a temporal matching instance.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: TemporalGraph,
    pub params: Params,
    pub budget: usize,
    /// Set when `delta != 2`, where the equivalence is not guaranteed.
    pub warning: Option<String>,
}

/// Spreads every appearance `t` to `4t - 3` and asks for editing with
/// `Δ1 = 1`, `Δ2 = 5` and budget `|E| - k`, `|E|` counting time-edges.
pub fn reduce_tm_to_etc(inst: &TmInstance) -> Result<Reduction> {
    let edges = inst.time_edge_count();
    if inst.k > edges {
        return Err(Error::ReductionOutOfRange { k: inst.k, edges });
    }
    let spread = TmInstance {
        edge_times: inst
            .edge_times
            .iter()
            .map(|ts| ts.iter().map(|&t| 4 * t - 3).collect())
            .collect(),
        ..inst.clone()
    };
    let warning = (inst.delta != 2).then(|| {
        format!(
            "reduction is only known to be correct for delta = 2, got {}",
            inst.delta
        )
    });
    Ok(Reduction {
        graph: spread.to_graph()?,
        params: Params::new(1, 5)?,
        budget: edges - inst.k,
        warning,
    })
}
