//! Reachability verdicts, orbit statistics and experiments.

mod experiment;
mod orbit;
mod random;
mod reachability;

pub use experiment::{
    parity_walk_check, theorem_experiment, theorem_shapes, GeneratorParity, ParityWalkReport,
    Status, TheoremReport, TheoremRow, FORCED_SHAPES,
};
pub use orbit::{orbit_stats, DistanceTable, OrbitReport};
pub use random::{random_instance, random_walk, seeded_rng, Policy};
pub use reachability::{
    decide_dims, decide_instance, Reachability, Verdict, SUFFICIENCY_CAVEAT, THEOREM,
};
