//! The crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by fallible operations in this crate.
///
/// Enumeration and arithmetic on valid inputs never fail; the variants below
/// cover domain violations (bad group sizes, labels outside an orbit set,
/// maps queried outside their domain) and requests the underlying theory does
/// not support (e.g. an explicit correspondence table for `Sp` away from
/// characteristic 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A modulus or size argument that must be a prime was not.
    NotPrime(u32),
    /// `prime_to_part` was asked about `n = 0`.
    ZeroSize,
    /// Dominance comparison of partitions of different sizes.
    SizeMismatch {
        /// Size of the left-hand partition.
        left: u64,
        /// Size of the right-hand partition.
        right: u64,
    },
    /// Regular bipartitions are only defined away from characteristic 2.
    BipartitionsModTwo,
    /// A group size parameter outside the valid range for its kind.
    InvalidGroup(String),
    /// An orbit label that does not belong to the ambient group's orbit set.
    InvalidOrbitLabel(String),
    /// A partition that is not distinguished for the stated residual group.
    NotDistinguished(String),
    /// A decoration supplied where none is allowed, or missing where one is
    /// required.
    DecorationMismatch(String),
    /// A multipartition whose component indices or sizes do not match the
    /// required shape.
    ComponentMismatch(String),
    /// A partition violating an `l`-regularity requirement.
    NotRegular(String),
    /// A character whose order fails the divisibility the map requires.
    BadCharacter(String),
    /// A Levi label that carries no cuspidal datum.
    NoCuspidalData(String),
    /// Irreducible labels requested for a relative Weyl group where only the
    /// count is defined.
    LabelsUnavailable(String),
    /// A correspondence table the theory does not determine.
    TableUnavailable(String),
    /// Inverse lookup of a pair label absent from the table.
    EntryNotFound(String),
    /// A verification check queried with parameters it does not apply to.
    UnsupportedCheck(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(l) => write!(f, "{l} is not prime"),
            Error::ZeroSize => write!(f, "argument must be a positive integer"),
            Error::SizeMismatch { left, right } => {
                write!(f, "partitions have different sizes ({left} vs {right})")
            }
            Error::BipartitionsModTwo => {
                write!(f, "regular bipartitions are undefined for l = 2")
            }
            Error::InvalidGroup(s) => write!(f, "invalid group: {s}"),
            Error::InvalidOrbitLabel(s) => write!(f, "invalid orbit label: {s}"),
            Error::NotDistinguished(s) => write!(f, "not a distinguished partition: {s}"),
            Error::DecorationMismatch(s) => write!(f, "decoration mismatch: {s}"),
            Error::ComponentMismatch(s) => write!(f, "component mismatch: {s}"),
            Error::NotRegular(s) => write!(f, "regularity violation: {s}"),
            Error::BadCharacter(s) => write!(f, "bad character: {s}"),
            Error::NoCuspidalData(s) => write!(f, "no cuspidal data: {s}"),
            Error::LabelsUnavailable(s) => write!(f, "labels unavailable: {s}"),
            Error::TableUnavailable(s) => write!(f, "table unavailable: {s}"),
            Error::EntryNotFound(s) => write!(f, "entry not found: {s}"),
            Error::UnsupportedCheck(s) => write!(f, "unsupported check: {s}"),
        }
    }
}

impl core::error::Error for Error {}
