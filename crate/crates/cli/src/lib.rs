//! Support library for the `recolor` binary: JSON file formats, seeded
//! instance generators, and DOT exports of the diagnostic graphs.

pub mod export;
pub mod format;
pub mod generate;

pub use format::{GraphFile, InstanceFile, PlanFile, StepFile};
