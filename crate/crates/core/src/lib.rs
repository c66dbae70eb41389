//! Graph energy laboratory.
//!
//! * [`graph`]: simple undirected graphs, named families, degree statistics.
//! * [`spectral`]: dense symmetric eigensolver, graph energy, closed forms.
//! * [`bounds`]: upper bounds on energy and star partitions of trees.
//! * [`random`]: preferential-attachment trees, random recursive trees, G(n, p).
//! * [`asymptotics`]: limit laws and series constants for preferential-attachment trees.
//! * [`harness`]: table generators and reproducible Monte Carlo experiments.

pub mod asymptotics;
pub mod bounds;
pub mod graph;
pub mod harness;
pub mod random;
pub mod spectral;

pub use graph::Graph;
pub use spectral::{energy, Spectrum};
