//! NSGA-III on the many-objective OneJumpZeroJump benchmark family.
//!
//! The crate has three parts:
//!
//! * the algorithm itself — bitstring genomes with uniform crossover and
//!   standard bit mutation ([`genome`]), non-dominated sorting
//!   ([`dominance`]), and the NSGA-III engine with its reference-point
//!   niching survival selection ([`nsga3`]);
//! * the `m`-OJZJ benchmark with its closed-form Pareto front and a
//!   brute-force oracle for small instances ([`ojzj`]);
//! * a seeded, reproducible experiment harness that measures generations
//!   until the whole Pareto front is covered and writes CSV reports
//!   ([`experiments`]), with per-generation instrumentation in [`metrics`].
//!
//! Every random decision flows through [`rng::RandomStream`], so a run is a
//! pure function of its seed.

pub mod dominance;
pub mod error;
pub mod experiments;
pub mod genome;
pub mod metrics;
pub mod nsga3;
pub mod ojzj;
pub mod rng;

pub use error::Error;
pub use genome::Genome;
pub use ojzj::{ObjectiveVector, OjzjInstance, RVector};
pub use rng::RandomStream;
