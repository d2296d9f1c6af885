//! Ribbon graphs with half-ribbons (HERGs).
//!
//! A HERG is a ribbon graph in which some ribbons are attached to a single
//! vertex only. This crate models them as rotation–twist systems, traces their
//! boundary (closed faces and external cycles), builds geometric duals, and
//! evaluates the associated polynomial invariants exactly.

pub mod corpus;
pub mod dual;
pub mod edit;
pub mod error;
pub mod fixtures;
pub mod herg;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod poly;
pub mod topology;
pub mod verify;

pub use crate::error::HergError;
pub use crate::herg::{
    complete, prune, underlying, EdgeRecord, HalfRibbonRecord, Herg, HergParts, ValidationReport,
    VertexRecord, Violation,
};
