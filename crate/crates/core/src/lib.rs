//! Exact computation of the action of automorphisms of a surface isogenous to a
//! product on its integral cohomology.

pub mod catalog;
pub mod cli;
pub mod elliptic;
pub mod fpgroup;
pub mod invariants;
pub mod linalg;
pub mod monodromy;
