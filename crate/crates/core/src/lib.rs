//! Exact invariants of links of normal complex surface singularities.
//!
//! - [`todd`]: the Todd multiplicative sequence and genus evaluation.
//! - [`plumbing`]: weighted plumbing graphs, intersection forms, canonical cycles.
//! - [`brieskorn`]: Milnor number, geometric genus, signature and resolution
//!   graph of `x^a + y^b + z^c`.
//! - [`frames`]: the ℤ-torsor of SU(2)-frames, Ê and its reductions mod 24 and 12.
//! - [`enumerate`]: weight and genus sweeps on a fixed graph.
//! - [`graphfile`], [`cli`]: text formats and the command-line surface.

#![allow(clippy::needless_range_loop)]

pub mod acceptance;
pub mod brieskorn;
pub mod cli;
pub mod enumerate;
pub mod frames;
pub mod graphfile;
pub mod plumbing;
pub mod todd;
