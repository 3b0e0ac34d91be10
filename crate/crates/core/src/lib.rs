//! Cyclic prefix-sum certificates and their graph applications.
//!
//! - [`cyclic`]: rotation certificates for strict bounds on the sum of a
//!   cyclic list of rationals.
//! - [`graph`]: simple graphs, generators, tiles, transitive partitions and
//!   decompositions.
//! - [`domination`]: validators and exact solvers for domination parameters,
//!   including prefix-pruned searches over a transitive partition.
//! - [`crossing`]: combinatorial drawings, crossing weights per piece and
//!   prefix certificates for crossing counts.
//! - [`formats`]: the text and JSON file formats shared with the CLI.

#![forbid(unsafe_code)]

pub mod budget;
pub mod crossing;
pub mod cyclic;
pub mod domination;
pub mod formats;
pub mod graph;
pub mod rational;

pub use budget::{Budget, BudgetExceeded};
pub use cyclic::{CyclicList, Direction, RotationCertificate};
pub use graph::{Graph, VertexSet};
pub use rational::Rational;
