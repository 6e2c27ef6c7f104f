//! Boundaries of finite graphs and the inequalities they satisfy.
//!
//! A vertex lies in the boundary `∂G` when some other vertex is strictly closer
//! to its average neighbor than to itself. This crate computes `∂G` exactly and
//! checks the analytic estimates that use it as a Dirichlet set: exit times of
//! random walks, the lowest Dirichlet eigenvalue, a Hardy inequality, a maximum
//! principle, hot-spot behaviour of the second Laplacian eigenvector, and the
//! support of energy-maximizing measures.
//!
//! ```
//! use graph_boundary::{all_pairs_distances, boundary_set, generators};
//!
//! let g = generators::grid(3, 3);
//! let d = all_pairs_distances(&g);
//! let b = boundary_set(&g, &d);
//! assert_eq!(b.len(), 8);
//! assert!(!b.contains(4));
//! ```

pub mod abp;
pub mod boundary;
pub mod energy;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hardy;
pub mod io;
pub mod linalg;
pub mod spectral;
pub mod walks;

pub use boundary::{boundary_set, boundary_via_levels, BoundarySet};
pub use error::{Error, Result};
pub use graph::{all_pairs_distances, build_graph, DistanceMatrix, Graph};
