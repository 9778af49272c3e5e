//! Recognition, completion and editing of temporal graphs into
//! `(Δ1, Δ2)`-cluster temporal graphs.
//!
//! A `(Δ1, Δ2)`-cluster temporal graph is a temporal graph whose time-edges
//! split into pairwise `Δ2`-independent `Δ1`-temporal cliques. The crate
//! provides:
//!
//! * [`saturation`]: the unique saturated partition, polynomial recognition
//!   and the local (at most five vertex) characterisation check;
//! * [`completion`]: exact minimum completion using additions only;
//! * [`path_dp`]: an exact editing solver for temporal paths with few
//!   appearances per edge;
//! * [`fpt`]: a bounded search tree editing solver parameterised by budget
//!   and lifetime;
//! * [`oracle`]: brute-force ground truth, the temporal matching reduction and
//!   instance generators.

pub mod completion;
pub mod error;
pub mod fpt;
pub mod modification;
pub mod oracle;
pub mod path_dp;
pub mod saturation;
pub mod temporal;

pub use error::{Error, Result};
pub use modification::{Modification, ModificationSet, Op};
pub use saturation::{
    is_cluster_temporal_graph, saturated_partition, subset_characterisation_check, SaturatedPartition,
};
pub use temporal::{Interval, Params, Template, TemporalGraph, TimeEdge, VertexId};
