//! Geometric graph edit distance on unit interval graphs.
//!
//! * [`dispersal`]: exact O(n log n) minimum-movement dispersal of unit intervals.
//! * [`editor`]: edgeless, acyclic and k-clique-free edits built on it.
//! * [`oracle`]: brute-force optimizers and validators.
//! * [`reductions`]: the weighted-interval instance from 3-Partition and the
//!   weighted unit-disk gadgets from Planar 3-SAT, with their predicates.
//!
//! All arithmetic is exact ([`Rational`]).

pub mod dispersal;
pub mod editor;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod random;
pub mod rational;
pub mod reductions;

pub use rational::{q, Rational};
