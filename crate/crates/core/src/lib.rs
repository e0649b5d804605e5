//! Finite permutation groups, their structural predicates, and a brute-force
//! harness that checks the structure of groups generated by two subnormal
//! supersoluble subgroups.
//!
//! Groups are fully enumerated (desk-scale orders only). Products are read
//! left to right; see [`perm`].

pub mod catalog;
pub mod cli;
pub mod error;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod spec;
pub mod structure;
pub mod verify;

pub use error::{Error, ParseError, Result, SpecError};
pub use group::{generate, Group, Limits, Subgroup};
pub use lattice::SubnormalVerdict;
pub use perm::Permutation;
pub use spec::GroupSpec;
pub use structure::{Formation, PropertyReport, QuotientGroup};
