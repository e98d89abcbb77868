//! Exact computations with finite permutation groups, aimed at checking the
//! inequality `p^(d(G) - 2) <= |G| / exp(G)` (with `p` the smallest prime
//! dividing `|G|`) and the identities around it.
//!
//! Permutations act on `{1, ..., n}`; products apply the left factor first.

pub mod arith;
pub mod bigser;
pub mod catalog;
pub mod chain;
pub mod config;
pub mod constructions;
pub mod error;
pub mod group;
pub mod invariants;
pub mod landau;
pub mod lattice;
pub mod perm;
pub mod quotient;
pub mod runner;
pub mod table;
pub mod theorem;

pub use config::Caps;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
