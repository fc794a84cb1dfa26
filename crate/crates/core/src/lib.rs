//! Combinatorics of rational homogeneous spaces `G/P`.
//!
//! A space `G/P` is a Dynkin diagram with a set of marked nodes. This crate
//! builds the diagrams and their root systems, enumerates Weyl groups and
//! parabolic subgroups, and answers questions about the family of
//! `Q`-cycles on `G/P`: their dimension and type, the reduction of `Q` mod
//! `P`, whether chains of cycles connect the space, and the least chain
//! length that does.

pub mod connectivity;
pub mod dynkin;
pub mod error;
pub mod geometry;
pub mod report;
pub mod roots;
pub mod weyl;

pub use connectivity::{
    boundary_codim_class, brute_force_reduction, chain_analysis, connectivity_quotient,
    exception_flags, is_cycle_connected, is_separating, reduction, BoundaryClass, ChainAnalysis,
    ExceptionFlags, LargerAutomorphism, ReductionResult,
};
pub use dynkin::{parse_diagram_spec, DynkinDiagram, Edge, Family, Marking, SimpleFactor};
pub use error::{Error, Result};
pub use geometry::{
    cycle_descriptor, dim_flag, dual_cycle_dim, tower_dims, CycleDescriptor, ParabolicPair,
    TowerDims,
};
pub use roots::{generate_roots, Root, RootIdx, RootSystem};
pub use weyl::{product_set, ElementKey, WeylElement, WeylLimit, WeylSubset};
