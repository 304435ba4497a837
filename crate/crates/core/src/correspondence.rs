//! The explicit correspondence maps: the block map assembling a partition
//! from a power-of-`l` shape and a regular multipartition label, its
//! character-twisted type A version, the characteristic-2 orbit maps for
//! types B/C/D (decorated in type D at size divisible by 4), the ordinary
//! Springer map they restrict to, and full self-describing tables with
//! inverse lookup.

use crate::arith;
use crate::error::Error;
use crate::orbit::{self, Decoration, GroupKind, OrbitLabel};
use crate::partition::{Multipartition, Partition, PartitionClass};
use crate::series::{self, CuspidalDatum, SlCharacter};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

/// Identifies one induction series by its seeding cuspidal datum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesKey {
    datum: CuspidalDatum,
}

impl SeriesKey {
    /// Wraps a cuspidal datum drawn from the series catalog.
    pub fn new(datum: CuspidalDatum) -> Self {
        SeriesKey { datum }
    }

    /// The underlying cuspidal datum.
    pub fn datum(&self) -> &CuspidalDatum {
        &self.datum
    }
}

impl fmt::Display for SeriesKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.datum)
    }
}

/// One row of a correspondence table: an irreducible label of the series'
/// relative Weyl group and the simple-object label it corresponds to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorrespondenceEntry {
    series: SeriesKey,
    irr_label: Multipartition,
    orbit: OrbitLabel,
    character: Option<SlCharacter>,
}

impl CorrespondenceEntry {
    /// The series this entry belongs to.
    pub fn series(&self) -> &SeriesKey {
        &self.series
    }

    /// The relative Weyl group irreducible label, indexed by the Levi's
    /// block sizes.
    pub fn irr_label(&self) -> &Multipartition {
        &self.irr_label
    }

    /// The orbit side of the pair label.
    pub fn orbit(&self) -> &OrbitLabel {
        &self.orbit
    }

    /// The central character of the pair label (type A only).
    pub fn character(&self) -> Option<SlCharacter> {
        self.character
    }
}

/// The block map: sends a multipartition over the multiplicities of a
/// power-of-`l` partition `nu` to `Σ_v v · (λ^{(v)})^t`, summing over the
/// distinct part values `v` of `nu`.
///
/// Components are indexed by the part value itself, not its exponent.
/// Assembled over all `nu`, this is a bijection onto the partitions of
/// `|nu|`.
pub fn psi_co(nu: &Partition, lam: &Multipartition, l: u32) -> Result<Partition, Error> {
    assert!(arith::is_prime(l), "{l} is not prime");
    if !nu.is_member(PartitionClass::PowersOf(l)) {
        return Err(Error::ComponentMismatch(format!(
            "{nu} has parts that are not powers of {l}"
        )));
    }
    let mults = nu.multiplicities();
    for (v, _) in lam.components() {
        if mults.get(v) == 0 {
            return Err(Error::ComponentMismatch(format!(
                "component at {v} has no matching part value in {nu}"
            )));
        }
    }
    let mut total = Partition::empty();
    for (v, m) in mults.entries() {
        let comp = lam.component(v);
        if comp.size() != m as u64 {
            return Err(Error::ComponentMismatch(format!(
                "component at {v} is {comp}, expected a partition of {m}"
            )));
        }
        if !comp.is_member(PartitionClass::LRegular(l)) {
            return Err(Error::NotRegular(format!("component at {v}: {comp}")));
        }
        total = total.pointwise_sum(&comp.transpose().scale(v));
    }
    Ok(total)
}

/// The character-twisted block map for type A: scales the block map of
/// `rho` by the order of `chi` and tags the result with `chi`.
///
/// `chi` must live modulo the prime-to-`l` part of `n`, and `rho` must be a
/// power-of-`l` partition of `n` divided by the order of `chi`. Assembled
/// over all `(chi, rho)`, this is a bijection onto the pair label set of
/// `Sl(n)`.
pub fn xi_co(
    n: u32,
    l: u32,
    chi: SlCharacter,
    rho: &Partition,
    lam: &Multipartition,
) -> Result<(Partition, SlCharacter), Error> {
    assert!(n >= 1, "Sl size must be positive");
    assert!(arith::is_prime(l), "{l} is not prime");
    let modulus = arith::prime_to_part(n as u64, l).expect("n >= 1");
    if chi.modulus() != modulus {
        return Err(Error::BadCharacter(format!(
            "{chi} has modulus {}, expected {modulus}",
            chi.modulus()
        )));
    }
    let e = chi.order();
    if rho.size() * e != n as u64 {
        return Err(Error::ComponentMismatch(format!(
            "{rho} has size {}, expected {n}/{e}",
            rho.size()
        )));
    }
    let base = psi_co(rho, lam, l)?;
    Ok((base.scale(e as u32), chi))
}

/// The characteristic-2 orbit map for `Sp`/`SO`: unites a distinguished
/// residual partition with two copies of the block map's output, copying the
/// Levi decoration onto the result when it is a split very even orbit.
pub fn omega_co(
    kind: GroupKind,
    nu: &Partition,
    levi_decoration: Decoration,
    mu: &Partition,
    lam: &Multipartition,
) -> Result<OrbitLabel, Error> {
    let gl = psi_co(nu, lam, 2)?;
    orbit::saturate(kind, mu, &gl, levi_decoration)
}

/// The ordinary (un-generalized) modular Springer map in characteristic 2:
/// a 2-regular partition of half the size maps to the doubled transpose,
/// padded with a single 1 in odd sizes.
pub fn springer_ordinary(kind: GroupKind, lam: &Partition) -> Result<Partition, Error> {
    kind.validate()?;
    if matches!(kind, GroupKind::Sl(_) | GroupKind::Spin(_)) {
        return Err(Error::InvalidGroup(format!(
            "the ordinary map is defined for Sp and SO, not {kind}"
        )));
    }
    let size = kind.size();
    if lam.size() != (size / 2) as u64 {
        return Err(Error::ComponentMismatch(format!(
            "{lam} is not a partition of {}",
            size / 2
        )));
    }
    if !lam.is_member(PartitionClass::LRegular(2)) {
        return Err(Error::NotRegular(format!("{lam}")));
    }
    let t = lam.transpose();
    let doubled = t.union(&t);
    Ok(if size % 2 == 1 {
        doubled.union(&Partition::new([1]))
    } else {
        doubled
    })
}

/// The full correspondence table for the cases the theory determines
/// explicitly: type A at any characteristic, and `Sp`/`SO` in
/// characteristic 2. Exactly one entry per (series, irreducible label)
/// pair; the orbit/character coordinates exhaust the simple-object label
/// set once.
pub fn full_table(kind: GroupKind, l: u32) -> Result<Vec<CorrespondenceEntry>, Error> {
    kind.validate()?;
    if !arith::is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    match kind {
        GroupKind::Sl(n) => {
            let mut out = Vec::new();
            for levi in series::cuspidal_levis(kind, l) {
                let d = arith::prime_to_part(levi.gl_blocks().part(0) as u64, l)
                    .expect("blocks are positive") as u32;
                let rho = Partition::new(
                    levi.gl_blocks()
                        .parts()
                        .iter()
                        .map(|&q| q / d)
                        .collect::<Vec<_>>(),
                );
                let labels = series::irr_labels(&series::weyl_shape(&levi), l)?;
                for datum in series::cuspidal_data(&levi, l)? {
                    let chi = datum.character().expect("type A data carry characters");
                    for lam in &labels {
                        let (part, chi) = xi_co(n, l, chi, &rho, &lam.divide_indices(d))?;
                        out.push(CorrespondenceEntry {
                            series: SeriesKey::new(datum.clone()),
                            irr_label: lam.clone(),
                            orbit: OrbitLabel::undecorated(part),
                            character: Some(chi),
                        });
                    }
                }
            }
            Ok(out)
        }
        GroupKind::Sp(_) | GroupKind::So(_) if l == 2 => {
            let mut out = Vec::new();
            for levi in series::cuspidal_levis(kind, l) {
                let labels = series::irr_labels(&series::weyl_shape(&levi), 2)?;
                for datum in series::cuspidal_data(&levi, 2)? {
                    let mu = datum.residual_orbit().partition();
                    for lam in &labels {
                        let orbit =
                            omega_co(kind, levi.gl_blocks(), levi.decoration(), mu, lam)?;
                        out.push(CorrespondenceEntry {
                            series: SeriesKey::new(datum.clone()),
                            irr_label: lam.clone(),
                            orbit,
                            character: None,
                        });
                    }
                }
            }
            Ok(out)
        }
        _ => Err(Error::TableUnavailable(format!(
            "the explicit correspondence for {kind} at l = {l} is not determined; only its size is"
        ))),
    }
}

/// Finds the unique entry whose pair label matches `(orbit, character)`.
pub fn inverse_lookup<'t>(
    table: &'t [CorrespondenceEntry],
    orbit: &OrbitLabel,
    character: Option<SlCharacter>,
) -> Result<&'t CorrespondenceEntry, Error> {
    table
        .iter()
        .find(|e| e.orbit() == orbit && e.character() == character)
        .ok_or_else(|| match character {
            Some(chi) => Error::EntryNotFound(format!("({orbit}, {chi})")),
            None => Error::EntryNotFound(format!("{orbit}")),
        })
}
