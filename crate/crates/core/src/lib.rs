//! Decentralized multi-robot task allocation with payload bookkeeping.
//!
//! This crate implements CBPA (consensus-based payload algorithm): each robot
//! alternates a payload bundle construction phase, in which it greedily bids
//! tasks by lowest marginal cost and commits payload to coalitions, with a
//! consensus phase, in which robots exchange their time / payload assignment
//! matrices over a static network and resolve conflicts with per-task update
//! rules. Two reference allocators are included for comparison: a one-award-
//! per-round auction (AOA) and a single-winner-per-task CBBA variant.
//!
//! Everything is deterministic: scenarios carry a seed, agents run in
//! synchronous rounds, and all tie-breaking is total.

pub mod baselines;
pub mod belief;
pub mod bundle_builder;
pub mod consensus;
pub mod engine;
pub mod geometry;
pub mod metrics;
pub mod payload_alloc;
pub mod scenario;

pub use belief::{AgentBelief, ConstraintViolation, PayloadKind};
pub use bundle_builder::Bid;
pub use consensus::ConsensusMessage;
pub use engine::{AllocationResult, RoundTrace};
pub use geometry::Point;
pub use metrics::{GainParams, MetricsReport};
pub use scenario::{AlgoConstants, Robot, Scenario, Task, Topology, TopologyKind};

/// Absolute tolerance for comparing times and start times.
pub const TIME_EPS: f64 = 1e-9;

/// Absolute tolerance below which a payload amount or residual demand is
/// treated as zero.
pub const PAYLOAD_EPS: f64 = 1e-9;
