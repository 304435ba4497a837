//! Brute-force verification of the counting identities and bijections.
//!
//! Every check computes its left-hand side from orbit enumeration and its
//! right-hand side from the series catalog (or a directly reduced closed
//! form), so the two sides never share a code path. Reports are plain data;
//! nothing here writes output.
//!
//! Two of the identities are displayed in the source material with a
//! strictly positive staircase index, but desk computation shows the
//! identities hold only when index 0 (an empty residual factor) is admitted.
//! The affected reports carry the alternate strict-index value in
//! `rhs_strict_k_positive` so the discrepancy stays visible.

use crate::arith::{self, add_counts};
use crate::correspondence;
use crate::error::Error;
use crate::orbit::{self, GroupKind, OrbitLabel};
use crate::partition::{self, Partition, PartitionClass};
use crate::series::{self, CuspidalDatum, LeviLabel};
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// The counting identities under verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// Type A series count: pair labels vs summed series sizes.
    SlSeriesCount,
    /// Symplectic orbit count vs series sizes in characteristic 2.
    SpL2Count,
    /// Symplectic weighted pair count vs bipartition families, odd
    /// characteristic (strict-index variant reported).
    SpLOddCount,
    /// Odd orthogonal orbit count vs series sizes in characteristic 2.
    SoOddL2Count,
    /// Even orthogonal orbit count vs undecorated series sizes in
    /// characteristic 2.
    SoEvenL2Count,
    /// Very even orbit count vs the decorated extra series in
    /// characteristic 2.
    SoEvenL2Extra,
    /// Orthogonal weighted pair count vs series sizes (including the
    /// index-2 Clifford formula), odd characteristic.
    SoLOddCount,
    /// Spin sector label count vs bipartition families, odd characteristic
    /// (strict-index variant reported).
    SpinLOddCount,
    /// Bipartition families summed over power-of-l shapes vs all
    /// bipartitions.
    BipartLadic,
    /// Master consistency: full pair-set size vs total series size, per
    /// group kind.
    MasterCuspidalCount,
}

impl IdentityId {
    /// All identities, in report order.
    pub const ALL: [IdentityId; 10] = [
        IdentityId::SlSeriesCount,
        IdentityId::SpL2Count,
        IdentityId::SpLOddCount,
        IdentityId::SoOddL2Count,
        IdentityId::SoEvenL2Count,
        IdentityId::SoEvenL2Extra,
        IdentityId::SoLOddCount,
        IdentityId::SpinLOddCount,
        IdentityId::BipartLadic,
        IdentityId::MasterCuspidalCount,
    ];

    /// Stable kebab-case name, used by the CLI.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::SlSeriesCount => "sl-series-count",
            IdentityId::SpL2Count => "sp-l2-count",
            IdentityId::SpLOddCount => "sp-lodd-count",
            IdentityId::SoOddL2Count => "so-odd-l2-count",
            IdentityId::SoEvenL2Count => "so-even-l2-count",
            IdentityId::SoEvenL2Extra => "so-even-l2-extra",
            IdentityId::SoLOddCount => "so-lodd-count",
            IdentityId::SpinLOddCount => "spin-lodd-count",
            IdentityId::BipartLadic => "bipart-ladic",
            IdentityId::MasterCuspidalCount => "master-cuspidal-count",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnsupportedCheck(format!("unknown identity {s}")))
    }
}

/// The explicitly verified bijections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BijectionId {
    /// The block map onto all partitions.
    PsiCo,
    /// The character-twisted block map onto type A pair labels.
    XiCo,
    /// The assembled characteristic-2 orbit map (undecorated kinds).
    Omega,
    /// The decorated orbit map for type D at size divisible by 4.
    OmegaPrime,
    /// The Spin sector count identity (cardinalities only; no combinatorial
    /// map is given for it).
    SpinEpsilonF,
    /// The saturation bijection from (distinguished, arbitrary) pairs onto
    /// orbit partitions.
    SpSoF,
}

impl BijectionId {
    /// All bijection checks, in report order.
    pub const ALL: [BijectionId; 6] = [
        BijectionId::PsiCo,
        BijectionId::XiCo,
        BijectionId::Omega,
        BijectionId::OmegaPrime,
        BijectionId::SpinEpsilonF,
        BijectionId::SpSoF,
    ];

    /// Stable kebab-case name, used by the CLI.
    pub fn name(self) -> &'static str {
        match self {
            BijectionId::PsiCo => "psi-co",
            BijectionId::XiCo => "xi-co",
            BijectionId::Omega => "omega",
            BijectionId::OmegaPrime => "omega-prime",
            BijectionId::SpinEpsilonF => "spin-epsilon-f",
            BijectionId::SpSoF => "sp-so-f",
        }
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BijectionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BijectionId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnsupportedCheck(format!("unknown bijection {s}")))
    }
}

/// What a report verifies: a counting identity or a bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    /// A counting identity.
    Identity(IdentityId),
    /// A bijection check.
    Bijection(BijectionId),
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::Identity(id) => write!(f, "{id}"),
            CheckId::Bijection(id) => write!(f, "{id}"),
        }
    }
}

/// Outcome of one check at one parameter point. Plain data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Which check ran.
    pub check: CheckId,
    /// The group the check ran over, when one is singled out.
    pub group: Option<GroupKind>,
    /// The size parameter as passed (the identity's natural parameter).
    pub size: u32,
    /// The characteristic.
    pub ell: u32,
    /// Left-hand side: orbit/pair enumeration.
    pub lhs: u64,
    /// Right-hand side: series summation (or reduced closed form).
    pub rhs: u64,
    /// The alternate right-hand side under the strictly-positive staircase
    /// index convention, where that convention differs.
    pub rhs_strict_k_positive: Option<u64>,
    /// Whether the check passed.
    pub pass: bool,
}

impl VerificationReport {
    fn counts(check: CheckId, group: Option<GroupKind>, size: u32, ell: u32, lhs: u64, rhs: u64) -> Self {
        VerificationReport {
            check,
            group,
            size,
            ell,
            lhs,
            rhs,
            rhs_strict_k_positive: None,
            pass: lhs == rhs,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        if let Some(g) = self.group {
            write!(f, " {g}")?;
        } else {
            write!(f, " size={}", self.size)?;
        }
        write!(f, " l={}: lhs={} rhs={}", self.ell, self.lhs, self.rhs)?;
        if let Some(strict) = self.rhs_strict_k_positive {
            write!(f, " rhs[k>0]={strict}")?;
        }
        write!(f, " {}", if self.pass { "pass" } else { "FAIL" })
    }
}

fn require_prime(l: u32) -> Result<(), Error> {
    if arith::is_prime(l) {
        Ok(())
    } else {
        Err(Error::NotPrime(l))
    }
}

fn require_odd_prime(check: &str, l: u32) -> Result<(), Error> {
    require_prime(l)?;
    if l == 2 {
        return Err(Error::UnsupportedCheck(format!("{check} applies to odd characteristic only")));
    }
    Ok(())
}

fn require_two(check: &str, l: u32) -> Result<(), Error> {
    if l != 2 {
        return Err(Error::UnsupportedCheck(format!("{check} applies to characteristic 2 only")));
    }
    Ok(())
}

/// Total series size over the catalog, with per-Levi and per-datum filters.
fn series_total(
    kind: GroupKind,
    l: u32,
    keep_levi: impl Fn(&LeviLabel) -> bool,
    keep_datum: impl Fn(&CuspidalDatum) -> bool,
) -> u64 {
    let mut total = 0u64;
    for levi in series::cuspidal_levis(kind, l) {
        if !keep_levi(&levi) {
            continue;
        }
        let per_series = series::irr_count(&series::weyl_shape(&levi), l);
        for datum in series::cuspidal_data(&levi, l).expect("catalog Levis carry data") {
            if keep_datum(&datum) {
                total = add_counts(total, per_series);
            }
        }
    }
    total
}

/// Full pair-set size by orbit enumeration.
fn pair_set_size(kind: GroupKind, l: u32) -> u64 {
    match kind {
        GroupKind::Sl(n) => orbit::sl_pair_labels(n, l).len() as u64,
        GroupKind::Sp(_) | GroupKind::So(_) => orbit::orbit_labels(kind)
            .iter()
            .map(|label| orbit::local_system_count(kind, label, l).expect("catalog labels are valid"))
            .fold(0u64, add_counts),
        GroupKind::Spin(n) => {
            if l == 2 {
                orbit::orbit_labels(kind).len() as u64
            } else {
                let sectors = if n % 2 == 0 { 2 } else { 1 };
                add_counts(
                    pair_set_size(GroupKind::So(n), l),
                    sectors * orbit::spin_epsilon_labels(n).len() as u64,
                )
            }
        }
    }
}

/// Master consistency for one group: pair-set size vs total series size.
pub fn verify_master(kind: GroupKind, l: u32) -> Result<VerificationReport, Error> {
    kind.validate()?;
    require_prime(l)?;
    let lhs = pair_set_size(kind, l);
    let rhs = series_total(kind, l, |_| true, |_| true);
    Ok(VerificationReport::counts(
        CheckId::Identity(IdentityId::MasterCuspidalCount),
        Some(kind),
        kind.size(),
        l,
        lhs,
        rhs,
    ))
}

/// Runs one counting identity at one parameter point.
///
/// `size` is the identity's natural parameter: the rank `n` for the type A
/// and symplectic identities (the group is `Sp(2n)`), the matrix size `N`
/// for the orthogonal and Spin ones, the total `m` for the bipartition
/// identity. For the master identity, the check runs over every kind
/// realizable at that matrix size and the report aggregates them.
pub fn verify(id: IdentityId, size: u32, l: u32) -> Result<VerificationReport, Error> {
    require_prime(l)?;
    let check = CheckId::Identity(id);
    match id {
        IdentityId::SlSeriesCount => {
            if size == 0 {
                return Err(Error::InvalidGroup(format!("SL({size})")));
            }
            let kind = GroupKind::Sl(size);
            let lhs = orbit::sl_pair_labels(size, l).len() as u64;
            let rhs = series_total(kind, l, |_| true, |_| true);
            Ok(VerificationReport::counts(check, Some(kind), size, l, lhs, rhs))
        }
        IdentityId::SpL2Count => {
            require_two(id.name(), l)?;
            let kind = GroupKind::Sp(2 * size);
            kind.validate()?;
            let lhs = partition::count(2 * size, PartitionClass::EvenMultiplicityOdds);
            let rhs = series_total(kind, 2, |_| true, |_| true);
            Ok(VerificationReport::counts(check, Some(kind), size, l, lhs, rhs))
        }
        IdentityId::SpLOddCount => {
            require_odd_prime(id.name(), l)?;
            let kind = GroupKind::Sp(2 * size);
            kind.validate()?;
            let lhs = pair_set_size(kind, l);
            let rhs = series_total(kind, l, |_| true, |_| true);
            let strict = series_total(kind, l, |levi| levi.residual() > 0, |_| true);
            let mut report = VerificationReport::counts(check, Some(kind), size, l, lhs, rhs);
            report.rhs_strict_k_positive = Some(strict);
            Ok(report)
        }
        IdentityId::SoOddL2Count => {
            require_two(id.name(), l)?;
            if size % 2 == 0 {
                return Err(Error::UnsupportedCheck(format!("{id} needs an odd size, got {size}")));
            }
            let kind = GroupKind::So(size);
            kind.validate()?;
            let lhs = partition::count(size, PartitionClass::EvenMultiplicityEvens);
            let rhs = series_total(kind, 2, |_| true, |_| true);
            Ok(VerificationReport::counts(check, Some(kind), size, l, lhs, rhs))
        }
        IdentityId::SoEvenL2Count => {
            require_two(id.name(), l)?;
            if size % 2 == 1 {
                return Err(Error::UnsupportedCheck(format!("{id} needs an even size, got {size}")));
            }
            let kind = GroupKind::So(size);
            kind.validate()?;
            let lhs = partition::count(size, PartitionClass::EvenMultiplicityEvens);
            // Decorated Levi pairs are counted once here; the II half is the
            // extra identity's right-hand side.
            let rhs = series_total(
                kind,
                2,
                |levi| levi.decoration() != crate::orbit::Decoration::II,
                |_| true,
            );
            Ok(VerificationReport::counts(check, Some(kind), size, l, lhs, rhs))
        }
        IdentityId::SoEvenL2Extra => {
            require_two(id.name(), l)?;
            if size % 2 == 1 {
                return Err(Error::UnsupportedCheck(format!("{id} needs an even size, got {size}")));
            }
            let kind = GroupKind::So(size);
            kind.validate()?;
            let lhs = partition::count(size, PartitionClass::AllPartsEvenEvenMult);
            let rhs = series_total(
                kind,
                2,
                |levi| levi.decoration() == crate::orbit::Decoration::II,
                |_| true,
            );
            Ok(VerificationReport::counts(check, Some(kind), size, l, lhs, rhs))
        }
        IdentityId::SoLOddCount => {
            require_odd_prime(id.name(), l)?;
            let kind = GroupKind::So(size);
            kind.validate()?;
            let lhs = pair_set_size(kind, l);
            let rhs = series_total(kind, l, |_| true, |_| true);
            Ok(VerificationReport::counts(check, Some(kind), size, l, lhs, rhs))
        }
        IdentityId::SpinLOddCount => {
            require_odd_prime(id.name(), l)?;
            let kind = GroupKind::Spin(size);
            kind.validate()?;
            let lhs = orbit::spin_epsilon_labels(size).len() as u64;
            // One sector's worth of series.
            let keep = |d: &CuspidalDatum| d.spin_sector() == Some(0);
            let rhs = series_total(kind, l, |_| true, keep);
            let strict = series_total(kind, l, |levi| levi.residual() > 0, keep);
            let mut report = VerificationReport::counts(check, Some(kind), size, l, lhs, rhs);
            report.rhs_strict_k_positive = Some(strict);
            Ok(report)
        }
        IdentityId::BipartLadic => {
            require_odd_prime(id.name(), l)?;
            let lhs = partition::count_bipartitions(size, None)?;
            let mut rhs = 0u64;
            for nu in partition::enumerate(size, PartitionClass::PowersOf(l)) {
                rhs = add_counts(
                    rhs,
                    partition::count_bipartition_families(&nu.multiplicities(), Some(l))?,
                );
            }
            Ok(VerificationReport::counts(check, None, size, l, lhs, rhs))
        }
        IdentityId::MasterCuspidalCount => {
            let mut lhs = 0u64;
            let mut rhs = 0u64;
            let mut pass = true;
            let mut any = false;
            for kind in kinds_at_size(size) {
                let report = verify_master(kind, l)?;
                lhs = add_counts(lhs, report.lhs);
                rhs = add_counts(rhs, report.rhs);
                pass &= report.pass;
                any = true;
            }
            if !any {
                return Err(Error::InvalidGroup(format!("no classical group of size {size}")));
            }
            let mut report = VerificationReport::counts(check, None, size, l, lhs, rhs);
            report.pass = pass;
            Ok(report)
        }
    }
}

/// The classical kinds realizable at a given matrix size.
fn kinds_at_size(size: u32) -> Vec<GroupKind> {
    let mut kinds = Vec::new();
    if size >= 1 {
        kinds.push(GroupKind::Sl(size));
    }
    if size >= 2 && size % 2 == 0 {
        kinds.push(GroupKind::Sp(size));
    }
    if size >= 3 {
        kinds.push(GroupKind::So(size));
        kinds.push(GroupKind::Spin(size));
    }
    kinds
}

/// Exhaustively checks one of the explicit bijections over the stated group.
///
/// For `PsiCo`/`XiCo` the group must be `Sl(n)`; for `Omega` it must be
/// `Sp` (even size) or `SO` of size not divisible by 4, in characteristic 2;
/// for `OmegaPrime`, `SO` of size divisible by 4 in characteristic 2;
/// `SpSoF` accepts `Sp`/`SO` at any characteristic (the map is
/// characteristic-free); `SpinEpsilonF` compares cardinalities only, as no
/// combinatorial map is given for it.
pub fn verify_bijection(map: BijectionId, kind: GroupKind, l: u32) -> Result<VerificationReport, Error> {
    kind.validate()?;
    require_prime(l)?;
    let check = CheckId::Bijection(map);
    let size = kind.size();
    match map {
        BijectionId::PsiCo => {
            let GroupKind::Sl(n) = kind else {
                return Err(Error::UnsupportedCheck(format!("psi-co runs over Sl, got {kind}")));
            };
            let mut images: BTreeSet<Partition> = BTreeSet::new();
            let mut domain = 0u64;
            for nu in partition::enumerate(n, PartitionClass::PowersOf(l)) {
                for lam in partition::enumerate_multipartitions(&nu.multiplicities(), Some(l)) {
                    let image = correspondence::psi_co(&nu, &lam, l)?;
                    debug_assert_eq!(image.size(), n as u64);
                    images.insert(image);
                    domain += 1;
                }
            }
            let codomain = partition::count(n, PartitionClass::All);
            let injective = images.len() as u64 == domain;
            let mut report =
                VerificationReport::counts(check, Some(kind), size, l, domain, codomain);
            report.pass = injective && domain == codomain;
            Ok(report)
        }
        BijectionId::XiCo => {
            let GroupKind::Sl(n) = kind else {
                return Err(Error::UnsupportedCheck(format!("xi-co runs over Sl, got {kind}")));
            };
            let modulus = arith::prime_to_part(n as u64, l).expect("n >= 1");
            let mut images: BTreeSet<(Partition, series::SlCharacter)> = BTreeSet::new();
            let mut domain = 0u64;
            for residue in 0..modulus {
                let chi = series::SlCharacter::new(modulus, residue)?;
                let e = chi.order();
                for rho in partition::enumerate((n as u64 / e) as u32, PartitionClass::PowersOf(l)) {
                    for lam in
                        partition::enumerate_multipartitions(&rho.multiplicities(), Some(l))
                    {
                        images.insert(correspondence::xi_co(n, l, chi, &rho, &lam)?);
                        domain += 1;
                    }
                }
            }
            let codomain: BTreeSet<(Partition, series::SlCharacter)> =
                orbit::sl_pair_labels(n, l).into_iter().collect();
            let injective = images.len() as u64 == domain;
            let onto = images == codomain;
            let mut report = VerificationReport::counts(
                check,
                Some(kind),
                size,
                l,
                domain,
                codomain.len() as u64,
            );
            report.pass = injective && onto;
            Ok(report)
        }
        BijectionId::Omega | BijectionId::OmegaPrime => {
            require_two(map.name(), l)?;
            let decorated = kind.splits_very_even();
            match (map, &kind) {
                (BijectionId::Omega, GroupKind::Sp(_)) => {}
                (BijectionId::Omega, GroupKind::So(_)) if !decorated => {}
                (BijectionId::OmegaPrime, GroupKind::So(_)) if decorated => {}
                _ => {
                    return Err(Error::UnsupportedCheck(format!("{map} does not apply to {kind}")));
                }
            }
            let mut images: BTreeSet<OrbitLabel> = BTreeSet::new();
            let mut domain = 0u64;
            for levi in series::cuspidal_levis(kind, 2) {
                let labels = series::irr_labels(&series::weyl_shape(&levi), 2)?;
                for datum in series::cuspidal_data(&levi, 2)? {
                    for lam in &labels {
                        images.insert(correspondence::omega_co(
                            kind,
                            levi.gl_blocks(),
                            levi.decoration(),
                            datum.residual_orbit().partition(),
                            lam,
                        )?);
                        domain += 1;
                    }
                }
            }
            let codomain: BTreeSet<OrbitLabel> = orbit::orbit_labels(kind).into_iter().collect();
            let injective = images.len() as u64 == domain;
            let onto = images == codomain;
            let mut report = VerificationReport::counts(
                check,
                Some(kind),
                size,
                l,
                domain,
                codomain.len() as u64,
            );
            report.pass = injective && onto;
            Ok(report)
        }
        BijectionId::SpSoF => {
            if matches!(kind, GroupKind::Sl(_) | GroupKind::Spin(_)) {
                return Err(Error::UnsupportedCheck(format!("sp-so-f runs over Sp or SO, got {kind}")));
            }
            let mut images: BTreeSet<Partition> = BTreeSet::new();
            let mut domain = 0u64;
            for m in 0..=size / 2 {
                let residual = size - 2 * m;
                for mu in partition::enumerate(residual, kind.distinguished_class()) {
                    for lam in partition::enumerate(m, PartitionClass::All) {
                        images.insert(mu.union(&lam.union(&lam)));
                        domain += 1;
                    }
                }
            }
            let codomain = partition::count(size, kind.orbit_class());
            let injective = images.len() as u64 == domain;
            let mut report =
                VerificationReport::counts(check, Some(kind), size, l, domain, codomain);
            report.pass = injective && domain == codomain;
            Ok(report)
        }
        BijectionId::SpinEpsilonF => {
            let GroupKind::Spin(n) = kind else {
                return Err(Error::UnsupportedCheck(format!("spin-epsilon-f runs over Spin, got {kind}")));
            };
            require_odd_prime(map.name(), l)?;
            let lhs = orbit::spin_epsilon_labels(n).len() as u64;
            // Directly reduced right-hand side: sum of bipartition counts
            // over splittings 4m' + T_j = N with j >= 0.
            let mut rhs = 0u64;
            let mut strict = 0u64;
            for m in 0..=(n / 4) {
                let residual = n - 4 * m;
                if let Some(j) = arith::triangular_index(residual as u64) {
                    let term = partition::count_bipartitions(m, None)?;
                    rhs = add_counts(rhs, term);
                    if j > 0 {
                        strict = add_counts(strict, term);
                    }
                }
            }
            let mut report = VerificationReport::counts(check, Some(kind), size, l, lhs, rhs);
            report.rhs_strict_k_positive = Some(strict);
            Ok(report)
        }
    }
}

/// Runs every applicable identity and bijection check with sizes up to
/// `max_size` and characteristics drawn from `primes`. Individual failures
/// are recorded in the reports, never raised. Deterministic order: identity
/// checks first, then bijections, each sorted by (check, size, prime).
pub fn verify_all(max_size: u32, primes: &[u32]) -> Vec<VerificationReport> {
    let mut primes: Vec<u32> = primes.iter().copied().filter(|&l| arith::is_prime(l)).collect();
    primes.sort_unstable();
    primes.dedup();
    let mut out = Vec::new();

    for id in IdentityId::ALL {
        for size in 0..=max_size {
            for &l in &primes {
                if identity_applies(id, size, l) {
                    out.push(verify(id, size, l).expect("applicable check"));
                }
            }
        }
    }
    for map in BijectionId::ALL {
        for size in 0..=max_size {
            for &l in &primes {
                for kind in bijection_groups(map, size, l) {
                    out.push(verify_bijection(map, kind, l).expect("applicable check"));
                }
            }
        }
    }
    out
}

/// Whether `verify(id, size, l)` is an applicable combination.
fn identity_applies(id: IdentityId, size: u32, l: u32) -> bool {
    match id {
        IdentityId::SlSeriesCount => size >= 1,
        IdentityId::SpL2Count => size >= 1 && l == 2,
        IdentityId::SpLOddCount => size >= 1 && l != 2,
        IdentityId::SoOddL2Count => size >= 3 && size % 2 == 1 && l == 2,
        IdentityId::SoEvenL2Count | IdentityId::SoEvenL2Extra => {
            size >= 4 && size % 2 == 0 && l == 2
        }
        IdentityId::SoLOddCount => size >= 3 && l != 2,
        IdentityId::SpinLOddCount => size >= 3 && l != 2,
        IdentityId::BipartLadic => l != 2,
        IdentityId::MasterCuspidalCount => !kinds_at_size(size).is_empty(),
    }
}

/// The groups `verify_bijection(map, _, l)` accepts at a given matrix size.
fn bijection_groups(map: BijectionId, size: u32, l: u32) -> Vec<GroupKind> {
    match map {
        BijectionId::PsiCo | BijectionId::XiCo => {
            if size >= 1 {
                vec![GroupKind::Sl(size)]
            } else {
                Vec::new()
            }
        }
        BijectionId::Omega => {
            let mut kinds = Vec::new();
            if l == 2 {
                if size >= 2 && size % 2 == 0 {
                    kinds.push(GroupKind::Sp(size));
                }
                if size >= 3 && size % 4 != 0 {
                    kinds.push(GroupKind::So(size));
                }
            }
            kinds
        }
        BijectionId::OmegaPrime => {
            if l == 2 && size >= 4 && size % 4 == 0 {
                vec![GroupKind::So(size)]
            } else {
                Vec::new()
            }
        }
        BijectionId::SpinEpsilonF => {
            if l != 2 && size >= 3 {
                vec![GroupKind::Spin(size)]
            } else {
                Vec::new()
            }
        }
        BijectionId::SpSoF => {
            let mut kinds = Vec::new();
            if size >= 2 && size % 2 == 0 {
                kinds.push(GroupKind::Sp(size));
            }
            if size >= 3 {
                kinds.push(GroupKind::So(size));
            }
            kinds
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp_l2_spot_n2() {
        let report = verify(IdentityId::SpL2Count, 2, 2).unwrap();
        assert_eq!(report.lhs, 4);
        assert_eq!(report.rhs, 4);
        assert!(report.pass);
    }

    #[test]
    fn sp_lodd_spot_n1() {
        let report = verify(IdentityId::SpLOddCount, 1, 3).unwrap();
        assert_eq!(report.lhs, 3);
        assert_eq!(report.rhs, 3);
        assert_eq!(report.rhs_strict_k_positive, Some(1));
        assert!(report.pass);
    }

    #[test]
    fn so_lodd_spot_n5() {
        let report = verify(IdentityId::SoLOddCount, 5, 3).unwrap();
        assert_eq!(report.lhs, 5);
        assert_eq!(report.rhs, 5);
        assert!(report.pass);
    }

    #[test]
    fn so_odd_l2_spot_n5() {
        let report = verify(IdentityId::SoOddL2Count, 5, 2).unwrap();
        assert_eq!(report.lhs, 4);
        assert!(report.pass);
    }

    #[test]
    fn spin_lodd_spots() {
        let r3 = verify(IdentityId::SpinLOddCount, 3, 3).unwrap();
        assert_eq!(r3.lhs, 1);
        assert!(r3.pass);
        let r4 = verify(IdentityId::SpinLOddCount, 4, 3).unwrap();
        assert_eq!(r4.lhs, 2);
        assert_eq!(r4.rhs, 2);
        // The strict convention loses the empty-residual term and fails here.
        assert_eq!(r4.rhs_strict_k_positive, Some(0));
        assert!(r4.pass);
    }

    #[test]
    fn strict_convention_pins() {
        // n=1 symplectic: strict right-hand side drops to 1 against lhs 3.
        let sp = verify(IdentityId::SpLOddCount, 1, 3).unwrap();
        assert_ne!(sp.lhs, sp.rhs_strict_k_positive.unwrap());
        // N=4 Spin: strict right-hand side is 0 against lhs 2.
        let spin = verify(IdentityId::SpinLOddCount, 4, 3).unwrap();
        assert_ne!(spin.lhs, spin.rhs_strict_k_positive.unwrap());
    }

    #[test]
    fn bipart_ladic_small() {
        for l in [3u32, 5, 7] {
            for m in 0..=25 {
                let report = verify(IdentityId::BipartLadic, m, l).unwrap();
                assert!(report.pass, "{report}");
            }
        }
    }

    #[test]
    fn unsupported_combinations_error() {
        assert!(verify(IdentityId::SpL2Count, 3, 3).is_err());
        assert!(verify(IdentityId::SpLOddCount, 3, 2).is_err());
        assert!(verify(IdentityId::SoOddL2Count, 4, 2).is_err());
        assert!(verify(IdentityId::SoEvenL2Count, 5, 2).is_err());
        assert!(verify(IdentityId::BipartLadic, 4, 2).is_err());
        assert!(verify(IdentityId::SlSeriesCount, 5, 4).is_err());
    }

    #[test]
    fn master_aggregate_runs() {
        let report = verify(IdentityId::MasterCuspidalCount, 8, 2).unwrap();
        assert!(report.pass, "{report}");
        assert!(report.group.is_none());
    }

    #[test]
    fn psi_co_bijective() {
        for l in [2u32, 3, 5] {
            for n in 1..=30 {
                let report = verify_bijection(BijectionId::PsiCo, GroupKind::Sl(n), l).unwrap();
                assert!(report.pass, "{report}");
            }
        }
    }

    #[test]
    fn xi_co_spot_n6_l2() {
        let report = verify_bijection(BijectionId::XiCo, GroupKind::Sl(6), 2).unwrap();
        assert_eq!(report.lhs, 15);
        assert_eq!(report.rhs, 15);
        assert!(report.pass);
    }

    #[test]
    fn omega_spot_sp8() {
        let report = verify_bijection(BijectionId::Omega, GroupKind::Sp(8), 2).unwrap();
        assert!(report.pass, "{report}");
        assert_eq!(report.rhs, partition::count(8, PartitionClass::EvenMultiplicityOdds));
    }

    #[test]
    fn omega_prime_spot_so8() {
        let report = verify_bijection(BijectionId::OmegaPrime, GroupKind::So(8), 2).unwrap();
        assert_eq!(report.rhs, 12);
        assert!(report.pass, "{report}");
    }

    #[test]
    fn omega_kind_checks() {
        assert!(verify_bijection(BijectionId::Omega, GroupKind::So(8), 2).is_err());
        assert!(verify_bijection(BijectionId::OmegaPrime, GroupKind::So(7), 2).is_err());
        assert!(verify_bijection(BijectionId::Omega, GroupKind::Sp(8), 3).is_err());
    }

    #[test]
    fn spin_epsilon_spot_n4() {
        let report = verify_bijection(BijectionId::SpinEpsilonF, GroupKind::Spin(4), 3).unwrap();
        assert_eq!(report.lhs, 2);
        assert_eq!(report.rhs, 2);
        assert!(report.pass);
    }

    #[test]
    fn verify_all_passes_at_size_10() {
        let reports = verify_all(10, &[2, 3]);
        assert!(!reports.is_empty());
        for report in &reports {
            assert!(report.pass, "{report}");
        }
    }

    #[test]
    fn verify_all_degenerate() {
        for report in verify_all(1, &[2]) {
            assert!(report.pass, "{report}");
        }
    }

    #[test]
    fn verify_all_at_two_omits_odd_characteristic_checks() {
        let reports = verify_all(10, &[2]);
        assert!(reports
            .iter()
            .all(|r| r.check != CheckId::Identity(IdentityId::SpLOddCount)));
        assert!(reports
            .iter()
            .all(|r| r.check != CheckId::Identity(IdentityId::BipartLadic)));
        for report in &reports {
            assert!(report.pass, "{report}");
        }
    }

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        for map in BijectionId::ALL {
            assert_eq!(map.name().parse::<BijectionId>().unwrap(), map);
        }
        assert!("no-such-check".parse::<IdentityId>().is_err());
    }
}
