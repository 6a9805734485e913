//! Finite permutation group computations centered on Hall subgroups,
//! sylowizers, and permutability, with a verification harness that checks
//! structural statements exhaustively over catalogs of small groups.
//!
//! # Composition convention
//!
//! Permutations compose **left to right**: `(a.compose(&b))` applies `a`
//! first, so `(a*b)(i) = b(a(i))`. Conjugation is the right action
//! `a^g = g^{-1} a g`, which gives `(a^g)^h = a^{gh}`.
//!
//! ```
//! use sylowizer::Perm;
//!
//! let a = Perm::parse("(1 2)", 3).unwrap();
//! let b = Perm::parse("(2 3)", 3).unwrap();
//! let ab = a.compose(&b).unwrap();
//! // point 1 goes to 2 under a, then 2 goes to 3 under b
//! assert_eq!(ab.apply(0), 2);
//! assert_eq!(ab.to_string(), "(1 3 2)");
//! ```
//!
//! # Overview
//!
//! - [`perm`]: permutations in cycle notation, composition, orders.
//! - [`group`]: groups from generators, stabilizer chains, element tables.
//! - [`lattice`]: the full subgroup lattice of a small group.
//! - [`sigma`]: partitions of the primes, Hall subgroups, complete Hall sets.
//! - [`sylowizer`]: sylowizers and the permutability predicates.
//! - [`classify`]: solubility, supersolubility, nilpotence, and friends.
//! - [`harness`]: statement checkers and catalog-wide verification runs.
//! - [`catalog`]: group files and built-in families.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod group;
pub mod harness;
pub mod lattice;
pub mod perm;
pub mod sigma;
pub mod sylowizer;

pub use catalog::{builtin_catalog, default_catalog, GroupFile};
pub use error::{Error, Result};
pub use group::{Group, Quotient, SubgroupRef};
pub use lattice::{all_subgroups, SubgroupLattice};
pub use perm::Perm;
pub use sigma::{Block, SigmaPartition, SigmaProfile};

// Keep the book's code snippets compiling: every chapter is run as a doctest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/sigma.md")]
    mod sigma {}
    #[doc = include_str!("../../../book/src/sylowizers.md")]
    mod sylowizers {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
}
