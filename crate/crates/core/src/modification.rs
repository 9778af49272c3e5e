//! Time-edge modification sets.

use std::fmt;

use crate::temporal::{TemporalGraph, TimeEdge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Delete,
    Add,
}

impl Op {
    pub fn as_str(self) -> &'static str {
        match self {
            Op::Delete => "delete",
            Op::Add => "add",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modification {
    pub op: Op,
    pub edge: TimeEdge,
}

impl Modification {
    pub fn add(edge: TimeEdge) -> Self {
        Modification { op: Op::Add, edge }
    }

    pub fn delete(edge: TimeEdge) -> Self {
        Modification { op: Op::Delete, edge }
    }

    fn key(&self) -> (u32, u32, u32, Op) {
        (self.edge.t, self.edge.u.0, self.edge.v.0, self.op)
    }
}

// ordered by (t, u, v, op), deletions first
impl Ord for Modification {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Modification {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Modification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.op.as_str(), self.edge)
    }
}

/// A sorted set of additions and deletions, one entry per time-edge at most.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModificationSet {
    mods: Vec<Modification>,
}

impl ModificationSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Turns a set of time-edges into toggles relative to `g`: present ones
    /// become deletions, absent ones additions.
    pub fn toggles<I>(g: &TemporalGraph, edges: I) -> Self
    where
        I: IntoIterator<Item = TimeEdge>,
    {
        edges
            .into_iter()
            .map(|e| {
                if g.contains(&e) {
                    Modification::delete(e)
                } else {
                    Modification::add(e)
                }
            })
            .collect()
    }

    /// Inserts `m` unless its time-edge is already listed; returns whether it was inserted.
    pub fn insert(&mut self, m: Modification) -> bool {
        if self.mods.iter().any(|x| x.edge == m.edge) {
            return false;
        }
        let pos = self.mods.partition_point(|x| x < &m);
        self.mods.insert(pos, m);
        true
    }

    pub fn len(&self) -> usize {
        self.mods.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mods.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Modification> {
        self.mods.iter()
    }

    pub fn additions(&self) -> impl Iterator<Item = &Modification> {
        self.mods.iter().filter(|m| m.op == Op::Add)
    }

    pub fn deletions(&self) -> impl Iterator<Item = &Modification> {
        self.mods.iter().filter(|m| m.op == Op::Delete)
    }

    pub fn edges(&self) -> impl Iterator<Item = TimeEdge> + '_ {
        self.mods.iter().map(|m| m.edge)
    }

    /// Latest time touched by any modification.
    pub fn max_time(&self) -> Option<u32> {
        self.mods.iter().map(|m| m.edge.t).max()
    }

    pub fn min_time(&self) -> Option<u32> {
        self.mods.iter().map(|m| m.edge.t).min()
    }
}

impl FromIterator<Modification> for ModificationSet {
    fn from_iter<I: IntoIterator<Item = Modification>>(iter: I) -> Self {
        let mut set = ModificationSet::new();
        for m in iter {
            set.insert(m);
        }
        set
    }
}

impl<'a> IntoIterator for &'a ModificationSet {
    type Item = &'a Modification;
    type IntoIter = std::slice::Iter<'a, Modification>;

    fn into_iter(self) -> Self::IntoIter {
        self.mods.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::VertexId;

    #[test]
    fn total_order_is_time_then_endpoints_then_delete_first() {
        let e = |u, v, t| TimeEdge::new(VertexId(u), VertexId(v), t);
        let set: ModificationSet = [
            Modification::add(e(0, 1, 2)),
            Modification::delete(e(1, 2, 1)),
            Modification::add(e(0, 2, 1)),
            Modification::delete(e(0, 1, 1)),
        ]
        .into_iter()
        .collect();
        let order: Vec<(u32, u32, u32)> = set.iter().map(|m| (m.edge.t, m.edge.u.0, m.edge.v.0)).collect();
        assert_eq!(order, [(1, 0, 1), (1, 0, 2), (1, 1, 2), (2, 0, 1)]);
        assert!(Modification::delete(e(0, 1, 1)) < Modification::add(e(0, 1, 1)));
    }

    #[test]
    fn duplicate_time_edges_are_rejected() {
        let e = TimeEdge::new(VertexId(0), VertexId(1), 1);
        let mut set = ModificationSet::new();
        assert!(set.insert(Modification::add(e)));
        assert!(!set.insert(Modification::delete(e)));
        assert_eq!(set.len(), 1);
    }
}
