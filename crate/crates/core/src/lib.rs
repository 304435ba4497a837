//! Desk-scale combinatorics of nilpotent orbits and cuspidal pairs for the
//! classical groups, together with the explicit correspondence bijections
//! between induction-series labels and orbit labels, and brute-force
//! verification of the counting identities tying the two sides together.
//!
//! The crate is organized bottom-up:
//!
//! - [`partition`]: partitions, compositions, multipartitions, bipartitions,
//!   and restricted enumeration;
//! - [`orbit`]: nilpotent orbit parametrizations per group kind, distinguished
//!   orbits, local-system counts, I/II decorations, and orbit saturation;
//! - [`series`]: the catalog of Levi classes carrying cuspidal data, the data
//!   themselves, and irreducible-representation counts of relative Weyl
//!   groups;
//! - [`correspondence`]: the explicit bijections (block maps, their
//!   character-twisted versions, the assembled orbit maps, and the ordinary
//!   Springer map in characteristic 2);
//! - [`verify`]: independent left/right evaluation of every counting identity
//!   with structured pass/fail reports.
//!
//! Everything is pure and immutable; all functions are safe to call from any
//! number of threads. The crate is `no_std` (with `alloc`).

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod correspondence;
pub mod error;
pub mod orbit;
pub mod partition;
pub mod series;
pub mod verify;

pub use error::Error;
pub use orbit::{Decoration, GroupKind, OrbitLabel};
pub use partition::{Bipartition, Composition, Multipartition, Partition, PartitionClass};
pub use series::{CuspidalDatum, LeviLabel, SlCharacter, WeylShape};
