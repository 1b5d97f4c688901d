//! Eventually periodic subsets of ω, their Boolean and almost-inclusion
//! calculus, coordinate sets with rank/select, and lazily queried points.

mod ground;
mod oracle;
pub(crate) mod periodic;
mod set;
mod ternary;

pub use ground::GroundSet;
pub use oracle::{prefix_agree, Oracle, OraclePoint, Point};
pub use periodic::{gcd, lcm};
pub use set::{BoolOp, EvPeriodicSet, Finiteness};
pub use ternary::TernaryStream;
