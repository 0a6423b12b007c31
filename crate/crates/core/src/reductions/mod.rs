//! Hardness constructions: weighted intervals from 3-Partition and weighted
//! unit-disk gadgets from Planar 3-SAT, with the predicates that check them.

pub mod disks;
pub mod gadgets;
pub mod three_partition;
pub mod holes;
pub mod blocking;
pub mod layout;
pub mod svg;
