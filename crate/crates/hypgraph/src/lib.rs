//! Exact Gromov hyperbolicity constants of finite unit-edge graphs.
//!
//! The crate computes the sharp Rips constant δ(G) of a simple connected
//! graph whose edges all have length 1, together with a witnessing geodesic
//! triangle, and implements the closed-form extremal bounds over the family
//! 𝒢(n,m) of such graphs: the exact minimum A(n,m), the lower/upper bounds
//! b₁(n,m) ≤ B(n,m) ≤ b₂(n,m) for the maximum, the witness-graph
//! constructions behind them, and a seeded connected random-graph model for
//! property checks.
//!
//! All metric arithmetic is exact: lengths are integer counts of 1/8 edge.

pub mod bounds;
pub mod construct;
pub mod decompose;
pub mod enumerate;
pub mod geodesic;
pub mod graph;
pub mod hyperbolicity;
pub mod length;
pub mod point;
pub mod random;
pub mod verify;

pub use graph::{DistanceMatrix, Graph, GraphError};
pub use hyperbolicity::{delta_exact, delta_via_blocks, DeltaResult, Mode};
pub use length::{EighthLength, Quarter};
pub use point::GraphPoint;
