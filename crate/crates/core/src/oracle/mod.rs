//! Exhaustive generators and relational checkers.

pub mod corpus;
pub mod gen;
pub mod relational;
pub mod suites;

pub use gen::{
    enumerate_envs, enumerate_terms, for_each_focalized, sample_envs, sample_focalized, GenConfig,
};
pub use suites::{run_suite, Report, SUITES};
