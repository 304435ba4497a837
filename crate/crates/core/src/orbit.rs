//! Nilpotent orbit parametrizations for the classical group kinds.
//!
//! Orbits are labelled by constrained partitions (Jordan types). In type D
//! with size divisible by 4, very even partitions label two orbits apiece,
//! told apart by a formal I/II decoration. The decoration convention is fixed
//! once: a saturated orbit copies the decoration of the inducing Levi. No
//! matrix representatives are ever computed.

use crate::arith;
use crate::error::Error;
use crate::partition::{self, Partition, PartitionClass};
use crate::series::SlCharacter;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A classical group, identified by kind and size parameter.
///
/// `Sp` carries the (even) matrix size `2n`; `So`/`Spin` carry `N >= 3`;
/// `Sl` carries `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    /// Special linear group of rank parameter `n`.
    Sl(u32),
    /// Symplectic group of matrix size `2n` (the stored value).
    Sp(u32),
    /// Special orthogonal group of matrix size `N`.
    So(u32),
    /// Spin group of matrix size `N`.
    Spin(u32),
}

impl GroupKind {
    /// The stored size parameter.
    pub fn size(self) -> u32 {
        match self {
            GroupKind::Sl(n) | GroupKind::Sp(n) | GroupKind::So(n) | GroupKind::Spin(n) => n,
        }
    }

    /// Checks the size constraints for the kind.
    pub fn validate(self) -> Result<(), Error> {
        let ok = match self {
            GroupKind::Sl(n) => n >= 1,
            GroupKind::Sp(n) => n >= 2 && n % 2 == 0,
            GroupKind::So(n) | GroupKind::Spin(n) => n >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGroup(format!("{self}")))
        }
    }

    /// The partition class cutting out this kind's nilpotent orbit set.
    pub fn orbit_class(self) -> PartitionClass {
        match self {
            GroupKind::Sl(_) => PartitionClass::All,
            GroupKind::Sp(_) => PartitionClass::EvenMultiplicityOdds,
            GroupKind::So(_) | GroupKind::Spin(_) => PartitionClass::EvenMultiplicityEvens,
        }
    }

    /// The partition class of distinguished orbit partitions.
    ///
    /// For `Sl` the only distinguished orbit is the regular one; the class
    /// view is only meaningful for `Sp`/`So`/`Spin`.
    pub fn distinguished_class(self) -> PartitionClass {
        match self {
            GroupKind::Sl(_) => PartitionClass::All,
            GroupKind::Sp(_) => PartitionClass::DistinctEven,
            GroupKind::So(_) | GroupKind::Spin(_) => PartitionClass::DistinctOdd,
        }
    }

    /// Whether very even partitions label split orbit pairs here.
    pub fn splits_very_even(self) -> bool {
        matches!(self, GroupKind::So(n) | GroupKind::Spin(n) if n % 4 == 0)
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Sl(n) => write!(f, "SL({n})"),
            GroupKind::Sp(n) => write!(f, "Sp({n})"),
            GroupKind::So(n) => write!(f, "SO({n})"),
            GroupKind::Spin(n) => write!(f, "Spin({n})"),
        }
    }
}

/// The formal I/II tag on split very even orbits and Levi classes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    /// No decoration.
    #[default]
    None,
    /// First representative.
    I,
    /// Second representative.
    II,
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decoration::None => write!(f, "none"),
            Decoration::I => write!(f, "I"),
            Decoration::II => write!(f, "II"),
        }
    }
}

/// A nilpotent orbit label: a partition plus an optional I/II decoration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitLabel {
    partition: Partition,
    decoration: Decoration,
}

impl OrbitLabel {
    /// An undecorated label.
    pub fn undecorated(partition: Partition) -> Self {
        OrbitLabel { partition, decoration: Decoration::None }
    }

    /// A label with an explicit decoration.
    pub fn new(partition: Partition, decoration: Decoration) -> Self {
        OrbitLabel { partition, decoration }
    }

    /// The underlying partition (Jordan type).
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// The decoration tag.
    pub fn decoration(&self) -> Decoration {
        self.decoration
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        match self.decoration {
            Decoration::None => Ok(()),
            Decoration::I => write!(f, "^I"),
            Decoration::II => write!(f, "^II"),
        }
    }
}

/// Whether `lam` is very even: all parts even with even multiplicities.
pub fn is_very_even(lam: &Partition) -> bool {
    lam.is_member(PartitionClass::AllPartsEvenEvenMult)
}

/// The complete duplicate-free orbit label list for the group, in
/// reverse-lexicographic partition order. Very even partitions are emitted
/// twice (I then II) when the kind splits them.
pub fn orbit_labels(kind: GroupKind) -> Vec<OrbitLabel> {
    kind.validate().expect("invalid group kind");
    let mut out = Vec::new();
    for lam in partition::enumerate(kind.size(), kind.orbit_class()) {
        if kind.splits_very_even() && is_very_even(&lam) {
            out.push(OrbitLabel::new(lam.clone(), Decoration::I));
            out.push(OrbitLabel::new(lam, Decoration::II));
        } else {
            out.push(OrbitLabel::undecorated(lam));
        }
    }
    out
}

/// The distinguished orbit labels. Never decorated: a partition with
/// distinct odd parts is never very even.
pub fn distinguished_orbit_labels(kind: GroupKind) -> Vec<OrbitLabel> {
    kind.validate().expect("invalid group kind");
    match kind {
        GroupKind::Sl(n) => {
            // Only the regular orbit.
            vec![OrbitLabel::undecorated(Partition::new(vec![n]))]
        }
        _ => partition::enumerate(kind.size(), kind.distinguished_class())
            .into_iter()
            .map(OrbitLabel::undecorated)
            .collect(),
    }
}

/// Checks that `label` belongs to the orbit label set of `kind`.
pub fn validate_orbit_label(kind: GroupKind, label: &OrbitLabel) -> Result<(), Error> {
    kind.validate()?;
    let lam = label.partition();
    if lam.size() != kind.size() as u64 || !lam.is_member(kind.orbit_class()) {
        return Err(Error::InvalidOrbitLabel(format!("{label} for {kind}")));
    }
    let needs_decoration = kind.splits_very_even() && is_very_even(lam);
    if needs_decoration == (label.decoration() == Decoration::None) {
        return Err(Error::DecorationMismatch(format!("{label} for {kind}")));
    }
    Ok(())
}

/// Number of irreducible equivariant local systems on the orbit, over a
/// field of characteristic `l`.
///
/// `Sl`: one rank-one system per central character, so the prime-to-`l` part
/// of `gcd(λ)`. `Sp`/`So` at `l = 2`: only the constant sheaf. `Sp` at odd
/// `l`: `2^(number of even part values)`. `So` at odd `l`: `2^a(λ)` where
/// `a(λ)` is one less than the number of odd part values, or 0 on split very
/// even orbits. `Spin` local systems are not modelled here; only their
/// counting enters, via [`spin_epsilon_labels`].
pub fn local_system_count(kind: GroupKind, label: &OrbitLabel, l: u32) -> Result<u64, Error> {
    if !arith::is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    if matches!(kind, GroupKind::Spin(_)) {
        return Err(Error::UnsupportedCheck(format!(
            "local systems for {kind} are counted through the epsilon sector, not per orbit"
        )));
    }
    validate_orbit_label(kind, label)?;
    let lam = label.partition();
    Ok(match kind {
        GroupKind::Sl(_) => arith::prime_to_part(lam.gcd(), l)?,
        GroupKind::Sp(_) => {
            if l == 2 {
                1
            } else {
                let even_values =
                    lam.multiplicities().support().filter(|v| v % 2 == 0).count() as u32;
                1u64.checked_shl(even_values).expect("count overflowed u64")
            }
        }
        GroupKind::So(n) => {
            // Only the constant sheaf in characteristic 2; a single system
            // on split very even orbits at odd l.
            if l == 2 || (n % 2 == 0 && is_very_even(lam)) {
                1
            } else {
                let odd_values =
                    lam.multiplicities().support().filter(|v| v % 2 == 1).count() as u32;
                debug_assert!(odd_values >= 1);
                1u64.checked_shl(odd_values - 1).expect("count overflowed u64")
            }
        }
        GroupKind::Spin(_) => unreachable!(),
    })
}

/// All pairs `(λ, χ)` with `λ` a partition of `n` and `χ` a character of the
/// centre whose order divides the prime-to-`l` part of `gcd(λ)`.
///
/// This is the full simple-object label set for `Sl(n)` in characteristic
/// `l`. Partitions in reverse-lex order, characters by increasing residue.
pub fn sl_pair_labels(n: u32, l: u32) -> Vec<(Partition, SlCharacter)> {
    assert!(n >= 1, "Sl size must be positive");
    assert!(arith::is_prime(l), "{l} is not prime");
    let modulus = arith::prime_to_part(n as u64, l).expect("n >= 1");
    let mut out = Vec::new();
    for lam in partition::enumerate(n, PartitionClass::All) {
        let g = arith::prime_to_part(lam.gcd(), l).expect("gcd >= 1");
        // Characters of order dividing g: the subgroup of size g, i.e. the
        // multiples of modulus / g.
        debug_assert_eq!(modulus % g, 0);
        let step = modulus / g;
        for k in 0..g {
            out.push((lam.clone(), SlCharacter::new(modulus, k * step).unwrap()));
        }
    }
    out
}

/// Orbit partitions of `Spin(N)` supporting a local system in a sector where
/// the kernel element acts by -1: orthogonal partitions whose odd part
/// values all have multiplicity at most 1. Reverse-lex order.
pub fn spin_epsilon_labels(n: u32) -> Vec<Partition> {
    assert!(n >= 3, "Spin size must be at least 3");
    partition::enumerate(n, PartitionClass::EvenMultiplicityEvens)
        .into_iter()
        .filter(|lam| {
            lam.multiplicities()
                .entries()
                .all(|(v, m)| v % 2 == 0 || m <= 1)
        })
        .collect()
}

/// Saturation: the orbit of `kind` induced from a distinguished orbit `mu`
/// of the residual factor and a regular block orbit of shape `gl_blocks`,
/// with Jordan type `mu ∪ gl_blocks ∪ gl_blocks`.
///
/// `levi_decoration` is the inducing Levi's decoration; it is copied onto
/// the result exactly when the result is a split very even label, and it is
/// an error for the two sides to disagree.
pub fn saturate(
    kind: GroupKind,
    mu: &Partition,
    gl_blocks: &Partition,
    levi_decoration: Decoration,
) -> Result<OrbitLabel, Error> {
    kind.validate()?;
    if matches!(kind, GroupKind::Sl(_) | GroupKind::Spin(_)) {
        return Err(Error::InvalidGroup(format!("saturate is defined for Sp and SO, not {kind}")));
    }
    let total = kind.size() as u64;
    let blocks = 2 * gl_blocks.size();
    if blocks > total {
        return Err(Error::InvalidGroup(format!(
            "blocks {gl_blocks} too large for {kind}"
        )));
    }
    let residual = total - blocks;
    if mu.size() != residual || !mu.is_member(kind.distinguished_class()) {
        return Err(Error::NotDistinguished(format!(
            "{mu} is not distinguished for the residual factor of size {residual}"
        )));
    }
    let result = mu.union(&gl_blocks.union(gl_blocks));
    debug_assert!(result.is_member(kind.orbit_class()));
    let split = kind.splits_very_even() && is_very_even(&result);
    match (split, levi_decoration) {
        (true, Decoration::None) => Err(Error::DecorationMismatch(format!(
            "{result} is very even in {kind}: a Levi decoration is required"
        ))),
        (false, Decoration::I | Decoration::II) => Err(Error::DecorationMismatch(format!(
            "{result} is not a split very even orbit of {kind}"
        ))),
        (_, dec) => Ok(OrbitLabel::new(result, dec)),
    }
}
