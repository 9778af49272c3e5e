use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::modification::{Modification, ModificationSet};
use crate::saturation::is_cluster_time_edges;
use crate::temporal::{Params, TemporalGraph, TimeEdge, VertexId};

/// Scale limits beyond which the exhaustive solvers refuse to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_vertices: usize,
    pub max_lifetime: u32,
    pub max_budget: usize,
    /// Worker threads for the enumeration; results do not depend on it.
    pub threads: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_vertices: 7,
            max_lifetime: 6,
            max_budget: 3,
            threads: 1,
        }
    }
}

impl OracleCaps {
    fn check(&self, g: &TemporalGraph, budget: usize) -> Result<()> {
        if g.vertex_count() > self.max_vertices {
            return Err(Error::OracleScaleLimit(format!(
                "{} vertices > {}",
                g.vertex_count(),
                self.max_vertices
            )));
        }
        if g.lifetime() > self.max_lifetime {
            return Err(Error::OracleScaleLimit(format!(
                "lifetime {} > {}",
                g.lifetime(),
                self.max_lifetime
            )));
        }
        if budget > self.max_budget {
            return Err(Error::OracleScaleLimit(format!(
                "budget {} > {}",
                budget, self.max_budget
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOutcome {
    pub decision: bool,
    /// The canonically first successful modification set, hence a smallest one.
    pub witness: Option<ModificationSet>,
}

/// Every time-edge on the vertex set of `g` with a time in `[1, T]`, in
/// `(t, u, v)` order.
fn universe(g: &TemporalGraph) -> Vec<TimeEdge> {
    let n = g.vertex_count() as u32;
    let mut out = Vec::new();
    for t in 1..=g.lifetime() {
        for u in 0..n {
            for v in u + 1..n {
                out.push(TimeEdge::new(VertexId(u), VertexId(v), t));
            }
        }
    }
    out
}

/// Evaluates toggle sets against a fixed base graph.
struct Tester<'a> {
    candidates: &'a [TimeEdge],
    present: &'a [bool],
    fixed: &'a [TimeEdge],
    params: Params,
    toggled: Vec<bool>,
    edges: Vec<TimeEdge>,
}

impl Tester<'_> {
    fn accepts(&mut self, combo: &[usize]) -> bool {
        for &i in combo {
            self.toggled[i] = true;
        }
        self.edges.clear();
        self.edges.extend_from_slice(self.fixed);
        let (present, toggled) = (self.present, &self.toggled);
        self.edges.extend(
            self.candidates
                .iter()
                .enumerate()
                .filter(|&(i, _)| present[i] != toggled[i])
                .map(|(_, e)| *e),
        );
        let ok = is_cluster_time_edges(&self.edges, self.params);
        for &i in combo {
            self.toggled[i] = false;
        }
        ok
    }
}

/// Tries toggle sets drawn from `candidates` by size `0..=max_size`, each
/// size in lexicographic index order, and returns the first accepted one.
///
/// With several threads, the sets of one size are sharded by their first
/// index; the smallest first index with a success wins, so the answer does
/// not depend on scheduling.
fn first_accepted(
    g: &TemporalGraph,
    candidates: &[TimeEdge],
    max_size: usize,
    params: Params,
    threads: usize,
) -> Option<Vec<TimeEdge>> {
    let present: Vec<bool> = candidates.iter().map(|e| g.contains(e)).collect();
    // time-edges of g outside the candidate list never change
    let fixed: Vec<TimeEdge> = {
        let mut listed = candidates.to_vec();
        listed.sort_unstable();
        g.time_edges()
            .into_iter()
            .filter(|e| listed.binary_search(e).is_err())
            .collect()
    };
    let tester = || Tester {
        candidates,
        present: &present,
        fixed: &fixed,
        params,
        toggled: vec![false; candidates.len()],
        edges: Vec::with_capacity(fixed.len() + candidates.len()),
    };
    let m = candidates.len();
    if tester().accepts(&[]) {
        return Some(Vec::new());
    }
    for size in 1..=max_size.min(m) {
        // first accepted set among those starting at index `first`
        let scan = |t: &mut Tester, first: usize| {
            (first + 1..m).combinations(size - 1).find_map(|rest| {
                let mut combo = Vec::with_capacity(size);
                combo.push(first);
                combo.extend(rest);
                t.accepts(&combo).then_some(combo)
            })
        };
        let found = if threads <= 1 {
            let mut t = tester();
            (0..m).find_map(|first| scan(&mut t, first))
        } else {
            let next = AtomicUsize::new(0);
            let best: Mutex<Option<Vec<usize>>> = Mutex::new(None);
            std::thread::scope(|s| {
                for _ in 0..threads {
                    s.spawn(|| {
                        let mut t = tester();
                        loop {
                            let first = next.fetch_add(1, Ordering::Relaxed);
                            let beaten = best.lock().unwrap().as_ref().is_some_and(|b| b[0] < first);
                            if first >= m || beaten {
                                break;
                            }
                            if let Some(combo) = scan(&mut t, first) {
                                let mut slot = best.lock().unwrap();
                                if slot.as_ref().is_none_or(|b| combo[0] < b[0]) {
                                    *slot = Some(combo);
                                }
                                break;
                            }
                        }
                    });
                }
            });
            best.into_inner().unwrap()
        };
        if let Some(combo) = found {
            return Some(combo.into_iter().map(|i| candidates[i]).collect());
        }
    }
    None
}

/// Exhaustive editing: is there a set of at most `budget` additions and
/// deletions, with times in `[1, T]`, turning `g` into a cluster temporal graph?
pub fn etc_bruteforce(g: &TemporalGraph, params: Params, budget: usize, caps: OracleCaps) -> Result<OracleOutcome> {
    caps.check(g, budget)?;
    let found = first_accepted(g, &universe(g), budget, params, caps.threads);
    Ok(OracleOutcome {
        decision: found.is_some(),
        witness: found.map(|edges| ModificationSet::toggles(g, edges)),
    })
}

/// Smallest edit set within `caps.max_budget`, or `None` if every set that
/// small fails.
pub fn etc_min_cost(g: &TemporalGraph, params: Params, caps: OracleCaps) -> Result<Option<ModificationSet>> {
    Ok(etc_bruteforce(g, params, caps.max_budget, caps)?.witness)
}

/// Smallest addition-only completion within `caps.max_budget`, with times in `[1, T]`.
pub fn ctc_bruteforce(g: &TemporalGraph, params: Params, caps: OracleCaps) -> Result<Option<ModificationSet>> {
    caps.check(g, caps.max_budget)?;
    let absent: Vec<TimeEdge> = universe(g).into_iter().filter(|e| !g.contains(e)).collect();
    Ok(first_accepted(g, &absent, caps.max_budget, params, caps.threads)
        .map(|edges| edges.into_iter().map(Modification::add).collect()))
}
