//! Loop-theory toolkit.
//!
//! Two halves, one bridge:
//!
//! * Finite loops given as Cayley tables ([`loops`]), their left
//!   multiplication groups as permutation groups ([`perm`], [`group`]),
//!   and simplicity certificates obtained by testing the multiplication
//!   group for simplicity with an exhaustive fallback ([`mlt`]).
//! * The infinite K-loop of positive-definite unimodular matrices under
//!   the transversal operation induced by polar decomposition
//!   ([`scalar`], [`mat`], [`polar`]), exercised by fixed-seed residual
//!   suites ([`report`]).
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the
//! command-line front end live in the companion `loopcert-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod group;
pub mod loops;
pub mod mat;
pub mod mlt;
pub mod perm;
pub mod polar;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod search;
pub mod tables;

pub use group::PermutationGroup;
pub use loops::CayleyTable;
pub use mlt::Certificate;
pub use perm::Permutation;

/// Version string stamped into certificates and reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
