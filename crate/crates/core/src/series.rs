//! The catalog of induction series: which Levi classes carry cuspidal data,
//! the data themselves, and the irreducible-representation counts of the
//! relative Weyl groups attached to them.
//!
//! Levi classes of a classical group are labelled by a multiset of GL block
//! sizes plus a residual classical factor. A Levi label is only constructible
//! through [`cuspidal_levis`], so every label in circulation genuinely
//! carries cuspidal data.
//!
//! Conventions fixed here (and exercised by the verifier): residual factors
//! of size 0 are allowed and count as carrying the trivial cuspidal datum, so
//! triangular and square residual sizes include 0. Spin data away from
//! characteristic 2 are recorded once per central-character sector, indexed
//! 0 (and 1 when the size is even).

use crate::arith::{self, add_counts, mul_counts};
use crate::error::Error;
use crate::orbit::{Decoration, GroupKind, OrbitLabel};
use crate::partition::{
    self, Composition, Multipartition, Partition, PartitionClass,
};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

/// A character of the centre of `Sl(n)`, stored as a residue modulo the
/// prime-to-`l` part of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlCharacter {
    modulus: u64,
    residue: u64,
}

impl SlCharacter {
    /// A character with the given modulus and residue.
    pub fn new(modulus: u64, residue: u64) -> Result<Self, Error> {
        if modulus == 0 || residue >= modulus {
            return Err(Error::BadCharacter(format!("{residue} mod {modulus}")));
        }
        Ok(SlCharacter { modulus, residue })
    }

    /// The trivial character.
    pub fn trivial(modulus: u64) -> Self {
        SlCharacter::new(modulus, 0).expect("modulus must be positive")
    }

    /// The group order this character lives in.
    pub fn modulus(self) -> u64 {
        self.modulus
    }

    /// The residue representing the character.
    pub fn residue(self) -> u64 {
        self.residue
    }

    /// The multiplicative order of the character.
    pub fn order(self) -> u64 {
        self.modulus / arith::gcd(self.residue, self.modulus)
    }

    /// Whether this is the trivial character.
    pub fn is_trivial(self) -> bool {
        self.residue == 0
    }
}

impl fmt::Display for SlCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.residue, self.modulus)
    }
}

/// A conjugacy class of Levi subgroups carrying cuspidal data.
///
/// `gl_blocks` is the multiset of GL factor sizes; `residual` is the size
/// parameter of the remaining classical factor (0 when absent, always 0 for
/// `Sl`). The decoration distinguishes the two classes of a type D Levi with
/// no residual factor and all block sizes even.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeviLabel {
    kind: GroupKind,
    gl_blocks: Partition,
    residual: u32,
    decoration: Decoration,
}

impl LeviLabel {
    pub(crate) fn new(
        kind: GroupKind,
        gl_blocks: Partition,
        residual: u32,
        decoration: Decoration,
    ) -> Self {
        debug_assert!(match kind {
            GroupKind::Sl(n) => gl_blocks.size() == n as u64 && residual == 0,
            _ => 2 * gl_blocks.size() + residual as u64 == kind.size() as u64,
        });
        LeviLabel { kind, gl_blocks, residual, decoration }
    }

    /// The ambient group.
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// The GL block sizes, as a partition.
    pub fn gl_blocks(&self) -> &Partition {
        &self.gl_blocks
    }

    /// Size parameter of the residual classical factor (0 when absent).
    pub fn residual(&self) -> u32 {
        self.residual
    }

    /// The I/II decoration, if any.
    pub fn decoration(&self) -> Decoration {
        self.decoration
    }

    /// Whether this is the Levi equal to the whole group.
    pub fn is_full_group(&self) -> bool {
        match self.kind {
            GroupKind::Sl(n) => self.gl_blocks.parts() == [n],
            _ => self.gl_blocks.is_empty(),
        }
    }
}

impl fmt::Display for LeviLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L(nu={}", self.gl_blocks)?;
        match self.decoration {
            Decoration::None => {}
            d => write!(f, "^{d}")?,
        }
        if self.residual > 0 {
            let residual_kind = match self.kind {
                GroupKind::Sl(_) => unreachable!("Sl Levis have no residual factor"),
                GroupKind::Sp(_) => "Sp",
                GroupKind::So(_) => "SO",
                GroupKind::Spin(_) => "Spin",
            };
            write!(f, "; {residual_kind}({})", self.residual)?;
        }
        write!(f, ")")
    }
}

/// One cuspidal datum: a Levi class, the distinguished partition of its
/// residual factor supporting the datum (the GL blocks always carry their
/// regular orbits), and, in type A, the central character.
///
/// For `Spin` away from characteristic 2, data in the sectors where the
/// kernel element acts by -1 carry a sector index (0, and 1 when the size is
/// even); data visible on the orthogonal group carry none.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CuspidalDatum {
    levi: LeviLabel,
    residual_orbit: OrbitLabel,
    character: Option<SlCharacter>,
    spin_sector: Option<u8>,
}

impl CuspidalDatum {
    /// The owning Levi class.
    pub fn levi(&self) -> &LeviLabel {
        &self.levi
    }

    /// The distinguished residual-factor orbit supporting the datum.
    pub fn residual_orbit(&self) -> &OrbitLabel {
        &self.residual_orbit
    }

    /// The central character (present exactly in type A).
    pub fn character(&self) -> Option<SlCharacter> {
        self.character
    }

    /// The Spin sector index, if this datum lives in a sector where the
    /// kernel element acts by -1.
    pub fn spin_sector(&self) -> Option<u8> {
        self.spin_sector
    }
}

impl fmt::Display for CuspidalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, mu={}", self.levi, self.residual_orbit)?;
        if let Some(chi) = self.character {
            write!(f, ", chi={chi}")?;
        }
        if let Some(s) = self.spin_sector {
            write!(f, ", sector={s}")?;
        }
        write!(f, ")")
    }
}

/// The isomorphism type of a relative Weyl group, as far as counting its
/// modular irreducibles requires.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeylShape {
    /// A product of symmetric groups, one per block-size multiplicity.
    SymmetricProduct(Composition),
    /// A product of hyperoctahedral (type B) groups.
    HyperoctahedralProduct(Composition),
    /// An index-2 subgroup of a hyperoctahedral product (type D at half
    /// size with odd block gcd).
    TypeDIndexTwo(Composition),
}

impl WeylShape {
    /// The multiplicity composition of the owning Levi's blocks.
    pub fn multiplicities(&self) -> &Composition {
        match self {
            WeylShape::SymmetricProduct(a)
            | WeylShape::HyperoctahedralProduct(a)
            | WeylShape::TypeDIndexTwo(a) => a,
        }
    }
}

impl fmt::Display for WeylShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylShape::SymmetricProduct(a) => write!(f, "Sym{a}"),
            WeylShape::HyperoctahedralProduct(a) => write!(f, "Hyper{a}"),
            WeylShape::TypeDIndexTwo(a) => write!(f, "TypeD{a}"),
        }
    }
}

/// The distinguished symplectic partition `(2j, 2j-2, ..., 4, 2)`.
fn sp_staircase(j: u64) -> Partition {
    Partition::from_descending((1..=j).rev().map(|i| 2 * i as u32).collect())
}

/// The distinguished orthogonal partition `(2j-1, 2j-3, ..., 3, 1)`.
fn so_staircase(j: u64) -> Partition {
    Partition::from_descending((1..=j).rev().map(|i| 2 * i as u32 - 1).collect())
}

/// The Spin sector staircase: `(2j-1, 2j-5, ..., 5, 1)` for odd `j`,
/// `(2j-1, 2j-5, ..., 7, 3)` for even `j`, empty for `j = 0`.
fn spin_staircase(j: u64) -> Partition {
    let mut parts = Vec::new();
    let mut v = 2i64 * j as i64 - 1;
    while v >= 1 {
        parts.push(v as u32);
        v -= 4;
    }
    Partition::from_descending(parts)
}

/// All Levi classes of `kind` whose cuspidal-pair set in characteristic `l`
/// is nonempty. Duplicate-free and deterministically ordered: block size
/// ascending, blocks reverse-lexicographic, I before II.
pub fn cuspidal_levis(kind: GroupKind, l: u32) -> Vec<LeviLabel> {
    kind.validate().expect("invalid group kind");
    assert!(arith::is_prime(l), "{l} is not prime");
    let size = kind.size();
    let mut out = Vec::new();
    match kind {
        GroupKind::Sl(n) => {
            // nu = d * rho with d dividing the prime-to-l part of n and rho
            // a power-of-l partition of n/d.
            let modulus = arith::prime_to_part(n as u64, l).expect("n >= 1");
            for d in arith::divisors(modulus) {
                for rho in partition::enumerate(n / d as u32, PartitionClass::PowersOf(l)) {
                    out.push(LeviLabel::new(kind, rho.scale(d as u32), 0, Decoration::None));
                }
            }
        }
        GroupKind::Sp(_) => {
            let n = size / 2;
            for k in 0..=n {
                let residual = size - 2 * k;
                if l != 2 && arith::triangular_index((residual / 2) as u64).is_none() {
                    continue;
                }
                for nu in partition::enumerate(k, PartitionClass::PowersOf(l)) {
                    out.push(LeviLabel::new(kind, nu, residual, Decoration::None));
                }
            }
        }
        GroupKind::So(_) | GroupKind::Spin(_) => {
            let half = size / 2;
            for k in 0..=half {
                // GL(nu) x SO(2) is conjugate to GL(nu) x GL(1).
                if size % 2 == 0 && k + 1 == half {
                    continue;
                }
                let residual = size - 2 * k;
                if l == 2 {
                    for nu in partition::enumerate(k, PartitionClass::PowersOf(2)) {
                        let split = kind.splits_very_even()
                            && k == half
                            && nu.multiplicity_of(1) == 0;
                        if split {
                            out.push(LeviLabel::new(kind, nu.clone(), residual, Decoration::I));
                            out.push(LeviLabel::new(kind, nu, residual, Decoration::II));
                        } else {
                            out.push(LeviLabel::new(kind, nu, residual, Decoration::None));
                        }
                    }
                } else {
                    let square = arith::square_index(residual as u64).is_some();
                    if square {
                        for nu in partition::enumerate(k, PartitionClass::PowersOf(l)) {
                            out.push(LeviLabel::new(kind, nu, residual, Decoration::None));
                        }
                    }
                    // Sector where the kernel element acts by -1: blocks are
                    // doubled power-of-l partitions and the residual size is
                    // triangular. At k = 0 the full-group label may already
                    // be present from the square branch.
                    if matches!(kind, GroupKind::Spin(_))
                        && k % 2 == 0
                        && arith::triangular_index(residual as u64).is_some()
                        && !(k == 0 && square)
                    {
                        for nu_half in partition::enumerate(k / 2, PartitionClass::PowersOf(l)) {
                            out.push(LeviLabel::new(kind, nu_half.scale(2), residual, Decoration::None));
                        }
                    }
                }
            }
        }
    }
    out
}

/// The distinguished partition class of the residual factor of `kind`.
fn residual_distinguished_class(kind: GroupKind) -> PartitionClass {
    match kind {
        GroupKind::Sl(_) => PartitionClass::All,
        GroupKind::Sp(_) => PartitionClass::DistinctEven,
        GroupKind::So(_) | GroupKind::Spin(_) => PartitionClass::DistinctOdd,
    }
}

/// The cuspidal data carried by a Levi class, in characteristic `l`.
///
/// Type A blocks contribute one datum per central character of exact order
/// `d` (the common prime-to-`l` part of the block sizes); `Sp`/`SO` in
/// characteristic 2 contribute one datum per distinguished residual
/// partition; away from characteristic 2 each qualifying Levi carries
/// exactly one datum per sector, supported on a staircase partition.
pub fn cuspidal_data(levi: &LeviLabel, l: u32) -> Result<Vec<CuspidalDatum>, Error> {
    assert!(arith::is_prime(l), "{l} is not prime");
    let kind = levi.kind();
    let mut out = Vec::new();
    match kind {
        GroupKind::Sl(n) => {
            let modulus = arith::prime_to_part(n as u64, l).expect("n >= 1");
            let parts = levi.gl_blocks().parts();
            let d = arith::prime_to_part(parts[0] as u64, l).expect("parts are positive");
            let uniform = parts
                .iter()
                .all(|&p| arith::prime_to_part(p as u64, l) == Ok(d));
            if !uniform {
                return Err(Error::NoCuspidalData(format!(
                    "{levi}: blocks do not share one prime-to-{l} part"
                )));
            }
            debug_assert_eq!(modulus % d, 0);
            // Characters of exact order d: residues (modulus/d) * t with t
            // prime to d.
            for t in 0..d {
                if arith::gcd(t, d) == 1 {
                    out.push(CuspidalDatum {
                        levi: levi.clone(),
                        residual_orbit: OrbitLabel::undecorated(Partition::empty()),
                        character: Some(SlCharacter::new(modulus, t * (modulus / d))?),
                        spin_sector: None,
                    });
                }
            }
        }
        GroupKind::Sp(_) | GroupKind::So(_) | GroupKind::Spin(_) => {
            let residual = levi.residual();
            let two_sided = l == 2;
            if two_sided {
                if !levi.gl_blocks().is_member(PartitionClass::PowersOf(2)) {
                    return Err(Error::NoCuspidalData(format!(
                        "{levi}: blocks are not powers of 2"
                    )));
                }
                for mu in partition::enumerate(residual, residual_distinguished_class(kind)) {
                    out.push(CuspidalDatum {
                        levi: levi.clone(),
                        residual_orbit: OrbitLabel::undecorated(mu),
                        character: None,
                        spin_sector: None,
                    });
                }
            } else {
                let blocks_l = levi.gl_blocks().is_member(PartitionClass::PowersOf(l));
                match kind {
                    GroupKind::Sp(_) => {
                        let j = arith::triangular_index((residual / 2) as u64);
                        if let (true, Some(j)) = (blocks_l, j) {
                            out.push(CuspidalDatum {
                                levi: levi.clone(),
                                residual_orbit: OrbitLabel::undecorated(sp_staircase(j)),
                                character: None,
                                spin_sector: None,
                            });
                        }
                    }
                    GroupKind::So(_) | GroupKind::Spin(_) => {
                        if blocks_l {
                            if let Some(j) = arith::square_index(residual as u64) {
                                out.push(CuspidalDatum {
                                    levi: levi.clone(),
                                    residual_orbit: OrbitLabel::undecorated(so_staircase(j)),
                                    character: None,
                                    spin_sector: None,
                                });
                            }
                        }
                        if matches!(kind, GroupKind::Spin(_)) {
                            let halved = levi
                                .gl_blocks()
                                .parts()
                                .iter()
                                .all(|&p| p % 2 == 0)
                                .then(|| {
                                    Partition::new(
                                        levi.gl_blocks()
                                            .parts()
                                            .iter()
                                            .map(|&p| p / 2)
                                            .collect::<Vec<_>>(),
                                    )
                                });
                            let eps_blocks = halved
                                .map(|h| h.is_member(PartitionClass::PowersOf(l)))
                                .unwrap_or(false);
                            if eps_blocks {
                                if let Some(j) = arith::triangular_index(residual as u64) {
                                    let sectors: &[u8] =
                                        if kind.size() % 2 == 0 { &[0, 1] } else { &[0] };
                                    for &s in sectors {
                                        out.push(CuspidalDatum {
                                            levi: levi.clone(),
                                            residual_orbit: OrbitLabel::undecorated(
                                                spin_staircase(j),
                                            ),
                                            character: None,
                                            spin_sector: Some(s),
                                        });
                                    }
                                }
                            }
                        }
                    }
                    GroupKind::Sl(_) => unreachable!(),
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NoCuspidalData(format!("{levi} at l = {l}")));
    }
    Ok(out)
}

/// The relative Weyl group shape of a Levi class.
///
/// Symmetric products in type A; hyperoctahedral products in type C, and in
/// types B/D when a residual factor remains or the block gcd is even; the
/// index-2 subgroup in type D at half size with odd block gcd.
pub fn weyl_shape(levi: &LeviLabel) -> WeylShape {
    let mults = levi.gl_blocks().multiplicities();
    match levi.kind() {
        GroupKind::Sl(_) => WeylShape::SymmetricProduct(mults),
        GroupKind::Sp(_) => WeylShape::HyperoctahedralProduct(mults),
        GroupKind::So(_) | GroupKind::Spin(_) => {
            let at_half = levi.residual() == 0;
            if at_half && levi.gl_blocks().gcd() % 2 == 1 {
                WeylShape::TypeDIndexTwo(mults)
            } else {
                WeylShape::HyperoctahedralProduct(mults)
            }
        }
    }
}

/// Number of irreducible representations of the relative Weyl group over a
/// field of characteristic `l`.
///
/// Symmetric products count `l`-regular multipartitions. Hyperoctahedral
/// products count the same in characteristic 2 and `l`-regular bipartition
/// families otherwise. For the index-2 type D subgroup away from
/// characteristic 2, Clifford theory gives
/// `(B - F)/2 + 2F` where `B` counts bipartition families and `F` the
/// swap-fixed ones.
pub fn irr_count(shape: &WeylShape, l: u32) -> u64 {
    assert!(arith::is_prime(l), "{l} is not prime");
    match shape {
        WeylShape::SymmetricProduct(a) => partition::count_multipartition_families(a, Some(l)),
        WeylShape::HyperoctahedralProduct(a) => {
            if l == 2 {
                partition::count_multipartition_families(a, Some(2))
            } else {
                partition::count_bipartition_families(a, Some(l)).expect("l != 2")
            }
        }
        WeylShape::TypeDIndexTwo(a) => {
            if l == 2 {
                partition::count_multipartition_families(a, Some(2))
            } else {
                let b = partition::count_bipartition_families(a, Some(l)).expect("l != 2");
                let f = a
                    .halved()
                    .map(|h| partition::count_multipartition_families(&h, Some(l)))
                    .unwrap_or(0);
                debug_assert_eq!((b - f) % 2, 0);
                add_counts((b - f) / 2, mul_counts(2, f))
            }
        }
    }
}

/// Explicit irreducible labels, where the crate needs them: symmetric
/// products at any characteristic, and hyperoctahedral or type D shapes in
/// characteristic 2 (their irreducibles pull back from the symmetric
/// quotient). Errors otherwise; only the counts are defined there.
pub fn irr_labels(shape: &WeylShape, l: u32) -> Result<Vec<Multipartition>, Error> {
    assert!(arith::is_prime(l), "{l} is not prime");
    match shape {
        WeylShape::SymmetricProduct(a) => Ok(partition::enumerate_multipartitions(a, Some(l))),
        WeylShape::HyperoctahedralProduct(a) | WeylShape::TypeDIndexTwo(a) => {
            if l == 2 {
                Ok(partition::enumerate_multipartitions(a, Some(2)))
            } else {
                Err(Error::LabelsUnavailable(format!(
                    "{shape} at l = {l}: only the count is defined"
                )))
            }
        }
    }
}

/// The closed-form number of cuspidal pairs for the full group.
///
/// For `Spin` away from characteristic 2, the count covers all sectors: the
/// orthogonal-sector pair (present when the size is a square) plus one pair
/// per sector with the kernel acting by -1 (present when the size is
/// triangular; one sector for odd size, two for even).
pub fn closed_form_cuspidal_count(kind: GroupKind, l: u32) -> u64 {
    kind.validate().expect("invalid group kind");
    assert!(arith::is_prime(l), "{l} is not prime");
    let size = kind.size();
    match kind {
        GroupKind::Sl(n) => {
            arith::euler_phi(arith::prime_to_part(n as u64, l).expect("n >= 1"))
        }
        GroupKind::Sp(_) => {
            if l == 2 {
                partition::count(size / 2, PartitionClass::LRegular(2))
            } else {
                u64::from(arith::triangular_index((size / 2) as u64).is_some())
            }
        }
        GroupKind::So(_) => {
            if l == 2 {
                partition::count(size, PartitionClass::DistinctOdd)
            } else {
                u64::from(arith::square_index(size as u64).is_some())
            }
        }
        GroupKind::Spin(_) => {
            if l == 2 {
                partition::count(size, PartitionClass::DistinctOdd)
            } else {
                let sectors = if size % 2 == 0 { 2 } else { 1 };
                u64::from(arith::square_index(size as u64).is_some())
                    + sectors * u64::from(arith::triangular_index(size as u64).is_some())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn blocks_of(levis: &[LeviLabel]) -> Vec<Partition> {
        levis.iter().map(|l| l.gl_blocks().clone()).collect()
    }

    #[test]
    fn character_orders() {
        let chi = SlCharacter::new(6, 2).unwrap();
        assert_eq!(chi.order(), 3);
        assert!(SlCharacter::trivial(5).is_trivial());
        assert_eq!(SlCharacter::trivial(5).order(), 1);
        assert!(SlCharacter::new(4, 4).is_err());
        assert!(SlCharacter::new(0, 0).is_err());
    }

    #[test]
    fn sl6_l2_levis() {
        let levis = cuspidal_levis(GroupKind::Sl(6), 2);
        let mut got: BTreeSet<Partition> = blocks_of(&levis).into_iter().collect();
        let expected: BTreeSet<Partition> = [
            p(&[4, 2]),
            p(&[4, 1, 1]),
            p(&[2, 2, 2]),
            p(&[2, 2, 1, 1]),
            p(&[2, 1, 1, 1, 1]),
            p(&[1, 1, 1, 1, 1, 1]),
            p(&[6]),
            p(&[3, 3]),
        ]
        .into_iter()
        .collect();
        assert_eq!(levis.len(), 8);
        assert_eq!(got, expected);
        // Labels are duplicate-free.
        got.clear();
        for levi in &levis {
            assert!(got.insert(levi.gl_blocks().clone()));
        }
    }

    #[test]
    fn sp4_l2_levis() {
        let levis = cuspidal_levis(GroupKind::Sp(4), 2);
        assert_eq!(
            blocks_of(&levis),
            [Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])]
        );
    }

    #[test]
    fn sp2_l3_levis() {
        // nu = () with residual 2 (1 is triangular) and nu = (1) with
        // residual 0 (0 is triangular).
        let levis = cuspidal_levis(GroupKind::Sp(2), 3);
        assert_eq!(levis.len(), 2);
        assert_eq!(levis[0].gl_blocks(), &Partition::empty());
        assert_eq!(levis[0].residual(), 2);
        assert_eq!(levis[1].gl_blocks(), &p(&[1]));
        assert_eq!(levis[1].residual(), 0);
    }

    #[test]
    fn so8_l2_decorated_levis() {
        let levis = cuspidal_levis(GroupKind::So(8), 2);
        // k = 3 = half - 1 is excluded.
        assert!(levis.iter().all(|l| l.gl_blocks().size() != 3));
        let decorated: Vec<&LeviLabel> = levis
            .iter()
            .filter(|l| l.decoration() != Decoration::None)
            .collect();
        // nu in Part(4,2) with no part 1: (4) and (2,2), each I and II.
        assert_eq!(decorated.len(), 4);
        assert_eq!(decorated[0].gl_blocks(), &p(&[4]));
        assert_eq!(decorated[0].decoration(), Decoration::I);
        assert_eq!(decorated[1].gl_blocks(), &p(&[4]));
        assert_eq!(decorated[1].decoration(), Decoration::II);
        assert_eq!(decorated[2].gl_blocks(), &p(&[2, 2]));
        // nu = (2,1,1) and (1,1,1,1) stay undecorated at k = 4.
        let undecorated_k4: Vec<&LeviLabel> = levis
            .iter()
            .filter(|l| l.residual() == 0 && l.decoration() == Decoration::None)
            .collect();
        assert_eq!(blocks_of(&undecorated_k4.into_iter().cloned().collect::<Vec<_>>()),
            [p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn so_l3_levis_squares_only() {
        // SO(9), l=3: residuals must be squares: k=0 (9), k=4 (1).
        let levis = cuspidal_levis(GroupKind::So(9), 3);
        let residuals: BTreeSet<u32> = levis.iter().map(|l| l.residual()).collect();
        assert_eq!(residuals, BTreeSet::from([1, 9]));
        // k=4: Part(4,3) = {(3,1),(1,1,1,1)}.
        let k4: Vec<Partition> = levis
            .iter()
            .filter(|l| l.residual() == 1)
            .map(|l| l.gl_blocks().clone())
            .collect();
        assert_eq!(k4, [p(&[3, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn spin_l3_levis_both_sectors() {
        // Spin(9), l=3: orthogonal-sector Levis as for SO(9), plus
        // epsilon-sector Levis nu = 2*nu' with triangular residual:
        // residual 3 (k=3 odd: skipped), residual 1 (k=4: nu'=Part(2,3)={(1,1)}),
        // T_j in {0,1,3,6,10,...}: residual in {1,3} for k in {4,3}; k must
        // be even, so only k=4, nu=(2,2).
        let levis = cuspidal_levis(GroupKind::Spin(9), 3);
        let so_side: Vec<&LeviLabel> = levis
            .iter()
            .filter(|l| l.gl_blocks().parts().iter().all(|&q| q % 2 == 1) || l.gl_blocks().is_empty())
            .collect();
        assert_eq!(so_side.len(), 3); // (), (3,1), (1^4)
        let eps_side: Vec<&LeviLabel> = levis
            .iter()
            .filter(|l| !l.gl_blocks().is_empty() && l.gl_blocks().parts().iter().all(|&q| q % 2 == 0))
            .collect();
        assert_eq!(eps_side.len(), 1);
        assert_eq!(eps_side[0].gl_blocks(), &p(&[2, 2]));
        assert_eq!(eps_side[0].residual(), 1);
    }

    #[test]
    fn sl_cuspidal_data_characters() {
        // SL(6), nu=(6), l=2: two characters of order 3.
        let levis = cuspidal_levis(GroupKind::Sl(6), 2);
        let full = levis.iter().find(|l| l.gl_blocks() == &p(&[6])).unwrap();
        let data = cuspidal_data(full, 2).unwrap();
        assert_eq!(data.len(), 2);
        for d in &data {
            assert_eq!(d.character().unwrap().order(), 3);
        }
        // Characters pairwise distinct.
        assert_ne!(data[0].character(), data[1].character());
    }

    #[test]
    fn sp8_full_levi_data() {
        let levis = cuspidal_levis(GroupKind::Sp(8), 2);
        let full = levis.iter().find(|l| l.is_full_group()).unwrap();
        let data = cuspidal_data(full, 2).unwrap();
        let mus: Vec<Partition> = data
            .iter()
            .map(|d| d.residual_orbit().partition().clone())
            .collect();
        assert_eq!(mus, [p(&[8]), p(&[6, 2])]);
    }

    #[test]
    fn sp6_full_levi_l5() {
        let levis = cuspidal_levis(GroupKind::Sp(6), 5);
        let full = levis.iter().find(|l| l.is_full_group()).unwrap();
        let data = cuspidal_data(full, 5).unwrap();
        assert_eq!(data.len(), 1);
        assert_eq!(data[0].residual_orbit().partition(), &p(&[4, 2]));
    }

    #[test]
    fn staircases() {
        assert_eq!(sp_staircase(0), Partition::empty());
        assert_eq!(sp_staircase(3), p(&[6, 4, 2]));
        assert_eq!(so_staircase(0), Partition::empty());
        assert_eq!(so_staircase(3), p(&[5, 3, 1]));
        assert_eq!(spin_staircase(0), Partition::empty());
        assert_eq!(spin_staircase(1), p(&[1]));
        assert_eq!(spin_staircase(2), p(&[3]));
        assert_eq!(spin_staircase(3), p(&[5, 1]));
        assert_eq!(spin_staircase(4), p(&[7, 3]));
        // Sizes are triangular and parts lie in the distinguished class.
        for j in 0..=8u64 {
            assert_eq!(sp_staircase(j).size(), j * (j + 1));
            assert_eq!(so_staircase(j).size(), j * j);
            assert_eq!(spin_staircase(j).size(), j * (j + 1) / 2);
            assert!(spin_staircase(j).is_member(PartitionClass::DistinctOdd));
        }
    }

    #[test]
    fn residual_orbits_are_distinguished() {
        for (kind, l) in [
            (GroupKind::Sl(8), 2),
            (GroupKind::Sp(10), 2),
            (GroupKind::Sp(12), 3),
            (GroupKind::So(11), 2),
            (GroupKind::So(12), 2),
            (GroupKind::So(13), 3),
            (GroupKind::Spin(12), 5),
            (GroupKind::Spin(10), 3),
        ] {
            for levi in cuspidal_levis(kind, l) {
                for datum in cuspidal_data(&levi, l).unwrap() {
                    let mu = datum.residual_orbit().partition();
                    assert_eq!(mu.size(), levi.residual() as u64);
                    assert!(mu.is_member(residual_distinguished_class(kind)));
                }
            }
        }
    }

    #[test]
    fn weyl_shapes() {
        let levis = cuspidal_levis(GroupKind::Sl(6), 2);
        let l33 = levis.iter().find(|l| l.gl_blocks() == &p(&[3, 3])).unwrap();
        assert_eq!(
            weyl_shape(l33),
            WeylShape::SymmetricProduct(Composition::new([(3, 2)]))
        );

        let levis = cuspidal_levis(GroupKind::Sp(8), 2);
        let l21 = levis.iter().find(|l| l.gl_blocks() == &p(&[2, 1])).unwrap();
        assert_eq!(
            weyl_shape(l21),
            WeylShape::HyperoctahedralProduct(Composition::new([(1, 1), (2, 1)]))
        );

        let levis = cuspidal_levis(GroupKind::So(8), 3);
        let l31 = levis.iter().find(|l| l.gl_blocks() == &p(&[3, 1])).unwrap();
        assert_eq!(
            weyl_shape(l31),
            WeylShape::TypeDIndexTwo(Composition::new([(1, 1), (3, 1)]))
        );

        // Even block gcd at half size keeps the full hyperoctahedral group.
        let levis = cuspidal_levis(GroupKind::Spin(8), 3);
        let l22 = levis.iter().find(|l| l.gl_blocks() == &p(&[2, 2])).unwrap();
        assert_eq!(
            weyl_shape(l22),
            WeylShape::HyperoctahedralProduct(Composition::new([(2, 2)]))
        );
    }

    #[test]
    fn irr_counts() {
        assert_eq!(
            irr_count(&WeylShape::SymmetricProduct(Composition::new([(1, 2)])), 2),
            1
        );
        assert_eq!(
            irr_count(&WeylShape::HyperoctahedralProduct(Composition::new([(1, 1)])), 3),
            2
        );
        // Clifford formula vs brute-force sigma-fixed count.
        for m in 0..=8u32 {
            for l in [3u32, 5] {
                let shape = WeylShape::TypeDIndexTwo(Composition::new([(1, m)]));
                let b = partition::count_bipartitions(m, Some(l)).unwrap();
                let fixed = partition::enumerate_bipartitions(m, Some(l))
                    .unwrap()
                    .into_iter()
                    .filter(|bp| *bp == bp.swapped())
                    .count() as u64;
                assert_eq!(irr_count(&shape, l), (b - fixed) / 2 + 2 * fixed, "m={m} l={l}");
            }
        }
        // Characteristic 2 collapses hyperoctahedral counts onto symmetric ones.
        for a in [
            Composition::new([(1, 3)]),
            Composition::new([(1, 1), (2, 2)]),
            Composition::empty(),
        ] {
            assert_eq!(
                irr_count(&WeylShape::HyperoctahedralProduct(a.clone()), 2),
                irr_count(&WeylShape::SymmetricProduct(a.clone()), 2)
            );
            assert_eq!(
                irr_count(&WeylShape::TypeDIndexTwo(a.clone()), 2),
                irr_count(&WeylShape::SymmetricProduct(a), 2)
            );
        }
    }

    #[test]
    fn irr_label_availability() {
        let a = Composition::new([(1, 1), (2, 1)]);
        let sym = irr_labels(&WeylShape::SymmetricProduct(a.clone()), 2).unwrap();
        assert_eq!(sym.len(), 1);
        assert_eq!(sym[0].component(1), p(&[1]));
        assert_eq!(sym[0].component(2), p(&[1]));
        assert!(irr_labels(&WeylShape::HyperoctahedralProduct(a.clone()), 2).is_ok());
        assert!(irr_labels(&WeylShape::HyperoctahedralProduct(a.clone()), 3).is_err());
        assert!(irr_labels(&WeylShape::TypeDIndexTwo(a), 5).is_err());
        let empty = irr_labels(&WeylShape::SymmetricProduct(Composition::empty()), 3).unwrap();
        assert_eq!(empty, vec![Multipartition::empty()]);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_cuspidal_count(GroupKind::Sl(12), 2), 2); // phi(3)
        assert_eq!(closed_form_cuspidal_count(GroupKind::Sp(8), 2), 2); // |Part_2(4)|
        assert_eq!(closed_form_cuspidal_count(GroupKind::So(9), 3), 1); // 9 = 3^2
        assert_eq!(closed_form_cuspidal_count(GroupKind::Sp(10), 3), 0); // 5 not triangular
        assert_eq!(closed_form_cuspidal_count(GroupKind::Sp(12), 7), 1); // 6 = T_3
        assert_eq!(closed_form_cuspidal_count(GroupKind::Spin(10), 3), 2); // 10 = T_4, even size: both sectors
        assert_eq!(closed_form_cuspidal_count(GroupKind::Spin(6), 5), 2); // 6 = T_3, two sectors
        assert_eq!(closed_form_cuspidal_count(GroupKind::Spin(36), 5), 3); // 36 = 6^2 = T_8
    }

    #[test]
    fn full_group_data_match_closed_form() {
        for l in [2u32, 3, 5] {
            for n in 1..=30u32 {
                let kinds = [
                    Some(GroupKind::Sl(n)),
                    (n >= 2 && n % 2 == 0).then_some(GroupKind::Sp(n)),
                    (n >= 3).then_some(GroupKind::So(n)),
                    (n >= 3).then_some(GroupKind::Spin(n)),
                ];
                for kind in kinds.into_iter().flatten() {
                    let total: u64 = cuspidal_levis(kind, l)
                        .iter()
                        .filter(|levi| levi.is_full_group())
                        .map(|levi| cuspidal_data(levi, l).unwrap().len() as u64)
                        .sum();
                    assert_eq!(
                        total,
                        closed_form_cuspidal_count(kind, l),
                        "{kind} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn every_catalog_levi_has_data() {
        for l in [2u32, 3] {
            for kind in [
                GroupKind::Sl(9),
                GroupKind::Sp(12),
                GroupKind::So(11),
                GroupKind::So(12),
                GroupKind::Spin(12),
            ] {
                for levi in cuspidal_levis(kind, l) {
                    let data = cuspidal_data(&levi, l).unwrap();
                    assert!(!data.is_empty());
                }
            }
        }
    }

    #[test]
    fn spin10_sector_data_doubled() {
        // Spin(10): 10 = T_4, even size, so the full-group label carries two
        // sector data.
        let levis = cuspidal_levis(GroupKind::Spin(10), 3);
        let full = levis.iter().find(|l| l.is_full_group()).unwrap();
        let data = cuspidal_data(full, 3).unwrap();
        assert_eq!(data.len(), 2);
        assert_eq!(data[0].spin_sector(), Some(0));
        assert_eq!(data[1].spin_sector(), Some(1));
        assert_eq!(data[0].residual_orbit().partition(), &p(&[7, 3]));
    }
}
