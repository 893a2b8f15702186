//! Computable upper bounds on Kolmogorov complexity, and what they buy you.
//!
//! The library measures the complexity of data three ways — arithmetic coding
//! under arbitrary probability models, exhaustive minimal expression-tree
//! search, and a bitstring repetition language — and feeds those measurements
//! into generalization bounds, no-free-lunch verifications, and hypothesis
//! tests, all at desk scale with seeded determinism.
//!
//! Start with the runnable programs in `examples/`; each one exercises a
//! major capability end to end. The `kcl` binary exposes the same operations
//! as subcommands.

pub mod cli;
pub mod coding;
pub mod rng;
