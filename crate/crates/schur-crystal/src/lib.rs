//! Exact combinatorics for generalized Schur partition identities.
//!
//! The crate implements, at desk scale and with integer-exact checks:
//!
//! - partition classes: strict/regular/class-regular families, the
//!   Rogers-Ramanujan classes, Andrews' three-parameter families, the
//!   refined class at modulus 5, restricted p-strict partitions, and the
//!   gap-and-pattern class `S_p` in three equivalent formulations;
//! - the block decomposition `lambda -> (lambda^+, lambda^-)` with its
//!   inverse, the zigzag replacement laws, and the partial-sum identities
//!   behind them;
//! - precrystal operators: the tensor product rule, the signature
//!   algorithm, crystal-graph generation with DOT export, the operator
//!   structure on `S_p` in which every lowering step adds one box, and the
//!   letter/word crystals `B^{n,s}` with their ground-state paths;
//! - the insertion map carving a strict class out of `S_p`, with both
//!   image-form and pattern-avoidance membership;
//! - truncated arbitrary-precision series for the counting cross-checks.

pub mod block_decomp;
pub mod classes;
pub mod kn_crystal;
pub mod partitions;
pub mod precrystal;
pub mod registry;
pub mod schur_construction;
pub mod series_count;
pub mod sp_class;
pub mod sp_crystal;

pub use partitions::{OddModulus, Partition, PartitionError, SubpatternTemplate, TemplateEntry};
pub use precrystal::{crystal_graph, to_dot, CrystalGraph, Precrystal};
pub use registry::{BoundClass, ClassSpec};
