//! Exact arithmetic on numerical semigroups and the n-permutation property.
//!
//! A numerical semigroup is a co-finite submonoid of the non-negative
//! integers under addition. This crate builds such semigroups from a
//! generating set with gcd 1 and answers the classic questions exactly:
//! membership, Apéry sets, the Frobenius number, and ordered element
//! enumeration. On top of that sits the n-permutation property: when the
//! increasing sequence of positive elements is reduced modulo n and cut
//! into consecutive blocks of length n, every block must contain each
//! residue class exactly once, and the first block must generate the
//! whole semigroup.
//!
//! The crate ships a catalogue of sixteen parametrized families of
//! 3-permutation semigroups ([`families::FamilyId`]) together with their
//! explicit structural descriptions, a generic n-element family for any
//! block size n ≥ 3, and a pruned exhaustive search ([`search`]) that
//! enumerates all n-permutation semigroups in a multiplicity window.
//!
//! All arithmetic is exact over `i64`; constructors reject inputs large
//! enough that intermediate values could overflow. Every type is
//! immutable after construction and safe to share across threads.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the
//! companion `persemi` crate carries the CLI and file formats.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod families;
pub mod permblock;
pub mod search;
pub mod semigroup;

pub use error::Error;
pub use semigroup::{
    arith_seq_contains, arith_seq_frobenius, AperyTable, Elements, GeneratorSet, Semigroup,
};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
