//! Integer partitions and the handful of operations on them that the rest of
//! the crate is built from: transpose, part-union, pointwise sum, scaling,
//! multiplicity vectors, dominance, and restricted enumeration.
//!
//! Partitions are stored as dense weakly decreasing part lists. Enumeration
//! is always in reverse-lexicographic order (largest first), so every listing
//! in the crate is deterministic and diffable.

use crate::arith::{self, add_counts, mul_counts};
use crate::error::Error;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A partition: a weakly decreasing finite sequence of positive integers.
///
/// The empty sequence is the unique partition of 0. No zero parts are ever
/// stored. The derived ordering is lexicographic on the part list, which on
/// partitions of a fixed number restricts to the reverse-lexicographic
/// enumeration order used throughout.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from arbitrary parts: zeros dropped, order fixed.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Internal fast path for parts already sorted weakly decreasing.
    pub(crate) fn from_descending(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition { parts }
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The `i`-th part (0-indexed), reading 0 beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transpose partition: row lengths of the reflected Young diagram.
    ///
    /// Characterized by `t[i] - t[i+1] = m_i(self)`; an involution.
    pub fn transpose(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let mut t = Vec::with_capacity(first as usize);
        for j in 0..first {
            let col = self.parts.iter().take_while(|&&p| p > j).count();
            t.push(col as u32);
        }
        Partition::from_descending(t)
    }

    /// Multiset union of parts: `(a ∪ b)^t = a^t + b^t`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                merged.push(self.parts[i]);
                i += 1;
            } else {
                merged.push(other.parts[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.parts[i..]);
        merged.extend_from_slice(&other.parts[j..]);
        Partition::from_descending(merged)
    }

    /// Pointwise sum: `(a + b)[i] = a[i] + b[i]`, missing parts read as 0.
    pub fn pointwise_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let mut parts = Vec::with_capacity(n);
        for i in 0..n {
            parts.push(
                self.part(i)
                    .checked_add(other.part(i))
                    .expect("part overflowed u32"),
            );
        }
        Partition::from_descending(parts)
    }

    /// Every part multiplied by `k`; `k = 0` yields the empty partition.
    pub fn scale(&self, k: u32) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_mul(k).expect("part overflowed u32"))
            .collect();
        Partition::from_descending(parts)
    }

    /// The multiplicity composition `m(λ)`: part value → multiplicity.
    pub fn multiplicities(&self) -> Composition {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        Composition { counts }
    }

    /// Multiplicity of the value `v` among the parts.
    pub fn multiplicity_of(&self, v: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == v).count() as u32
    }

    /// Greatest common divisor of the parts; 0 for the empty partition.
    pub fn gcd(&self) -> u64 {
        self.parts.iter().fold(0u64, |g, &p| arith::gcd(g, p as u64))
    }

    /// Membership test for the restricted partition families.
    pub fn is_member(&self, class: PartitionClass) -> bool {
        match class {
            PartitionClass::All => true,
            PartitionClass::PowersOf(l) => {
                debug_assert!(arith::is_prime(l));
                self.parts.iter().all(|&p| arith::is_power_of(p as u64, l as u64))
            }
            PartitionClass::LRegular(l) => {
                debug_assert!(arith::is_prime(l));
                self.multiplicities().entries().all(|(_, m)| m < l)
            }
            PartitionClass::DistinctEven => {
                self.parts.iter().all(|&p| p % 2 == 0)
                    && self.parts.windows(2).all(|w| w[0] > w[1])
            }
            PartitionClass::DistinctOdd => {
                self.parts.iter().all(|&p| p % 2 == 1)
                    && self.parts.windows(2).all(|w| w[0] > w[1])
            }
            PartitionClass::EvenMultiplicityOdds => self
                .multiplicities()
                .entries()
                .all(|(v, m)| v % 2 == 0 || m % 2 == 0),
            PartitionClass::EvenMultiplicityEvens => self
                .multiplicities()
                .entries()
                .all(|(v, m)| v % 2 == 1 || m % 2 == 0),
            PartitionClass::AllPartsEvenEvenMult => self
                .multiplicities()
                .entries()
                .all(|(v, m)| v % 2 == 0 && m % 2 == 0),
        }
    }

    /// Dominance order: true iff every prefix sum of `self` is at most the
    /// corresponding prefix sum of `other`. Errors on unequal sizes.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, Error> {
        let (a, b) = (self.size(), other.size());
        if a != b {
            return Err(Error::SizeMismatch { left: a, right: b });
        }
        let mut sa = 0u64;
        let mut sb = 0u64;
        for i in 0..self.len().max(other.len()) {
            sa += self.part(i) as u64;
            sb += other.part(i) as u64;
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,2,1"` or `"[4,2,1]"`; the empty string or `"[]"` is the
    /// empty partition. Parts are sorted, so any order is accepted.
    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidOrbitLabel(String::from("unparseable part")))?;
            if p == 0 {
                return Err(Error::InvalidOrbitLabel(String::from("zero part")));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// A composition: finitely many nonzero counts indexed by positive integers.
///
/// Zero entries are never stored, so equality is equality of supports and
/// values.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    counts: BTreeMap<u32, u32>,
}

impl Composition {
    /// Builds a composition from `(index, count)` pairs; zero counts dropped,
    /// repeated indices summed. Index 0 is not a valid position.
    pub fn new(entries: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut counts = BTreeMap::new();
        for (i, c) in entries {
            assert!(i >= 1, "composition indices start at 1");
            if c > 0 {
                *counts.entry(i).or_insert(0) += c;
            }
        }
        Composition { counts }
    }

    /// The empty composition.
    pub const fn empty() -> Self {
        Composition { counts: BTreeMap::new() }
    }

    /// The count at index `i` (0 if absent).
    pub fn get(&self, i: u32) -> u32 {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    /// `(index, count)` pairs in increasing index order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&i, &c)| (i, c))
    }

    /// Indices with nonzero count, increasing.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts.keys().copied()
    }

    /// Sum of all counts.
    pub fn norm(&self) -> u64 {
        self.counts.values().map(|&c| c as u64).sum()
    }

    /// Number of indices in the support.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    /// Whether the support is empty.
    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Halves every count, or returns `None` if any count is odd.
    pub fn halved(&self) -> Option<Composition> {
        let mut counts = BTreeMap::new();
        for (&i, &c) in &self.counts {
            if c % 2 != 0 {
                return None;
            }
            counts.insert(i, c / 2);
        }
        Some(Composition { counts })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, c)) in self.entries().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}:{c}")?;
        }
        write!(f, "}}")
    }
}

/// A family of partitions indexed by positive integers, almost all empty.
///
/// Components equal to the empty partition are not stored; the family over
/// a composition `a` has exactly one component per index in the support of
/// `a`, a partition of `a_i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: BTreeMap<u32, Partition>,
}

impl Multipartition {
    /// Builds a family from `(index, partition)` pairs; empty partitions are
    /// dropped. Panics if an index repeats.
    pub fn new(entries: impl IntoIterator<Item = (u32, Partition)>) -> Self {
        let mut components = BTreeMap::new();
        for (i, p) in entries {
            assert!(i >= 1, "multipartition indices start at 1");
            if !p.is_empty() {
                let old = components.insert(i, p);
                assert!(old.is_none(), "repeated multipartition index {i}");
            }
        }
        Multipartition { components }
    }

    /// The empty family.
    pub const fn empty() -> Self {
        Multipartition { components: BTreeMap::new() }
    }

    /// The component at index `i`; the empty partition if absent.
    pub fn component(&self, i: u32) -> Partition {
        self.components.get(&i).cloned().unwrap_or_default()
    }

    /// Stored `(index, component)` pairs, increasing index order.
    pub fn components(&self) -> impl Iterator<Item = (u32, &Partition)> + '_ {
        self.components.iter().map(|(&i, p)| (i, p))
    }

    /// The induced composition `i -> |component_i|`.
    pub fn induced(&self) -> Composition {
        Composition::new(
            self.components
                .iter()
                .map(|(&i, p)| (i, p.size() as u32)),
        )
    }

    /// Whether every stored component is empty (i.e. the family is empty).
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Re-indexes the family by dividing every index by `d`.
    ///
    /// Used to pass between the label sets of a Levi with blocks `d·ρ` and
    /// the corresponding power-of-`l` shape `ρ`. Panics if an index is not a
    /// multiple of `d`.
    pub fn divide_indices(&self, d: u32) -> Multipartition {
        assert!(d >= 1);
        Multipartition {
            components: self
                .components
                .iter()
                .map(|(&i, p)| {
                    assert!(i % d == 0, "index {i} is not a multiple of {d}");
                    (i / d, p.clone())
                })
                .collect(),
        }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, p)) in self.components().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}:{p}")?;
        }
        write!(f, "}}")
    }
}

/// An ordered pair of partitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    /// First component.
    pub first: Partition,
    /// Second component.
    pub second: Partition,
}

impl Bipartition {
    /// Pairs up two partitions.
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    /// Total size of the two components.
    pub fn size(&self) -> u64 {
        self.first.size() + self.second.size()
    }

    /// The pair with the two components exchanged.
    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.clone())
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// The restricted partition families used as enumeration filters.
///
/// A closed enumeration rather than arbitrary predicates, so membership is
/// serializable in CLI output. Primes carried by variants must be genuine
/// primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartitionClass {
    /// All partitions.
    All,
    /// All parts are powers of the given prime (including the 0th power, 1).
    PowersOf(u32),
    /// No part repeats `l` or more times.
    LRegular(u32),
    /// Distinct even parts.
    DistinctEven,
    /// Distinct odd parts.
    DistinctOdd,
    /// Every odd part value occurs with even multiplicity (symplectic orbit
    /// partitions).
    EvenMultiplicityOdds,
    /// Every even part value occurs with even multiplicity (orthogonal orbit
    /// partitions).
    EvenMultiplicityEvens,
    /// All parts even, all multiplicities even (very even partitions).
    AllPartsEvenEvenMult,
}

/// Length of the run of `v` at the end of `buf`.
fn trailing_run(buf: &[u32], v: u32) -> u32 {
    buf.iter().rev().take_while(|&&p| p == v).count() as u32
}

/// May `p` be appended to the partial partition `buf`?
///
/// For run-parity classes this also closes out the preceding run, pruning
/// subtrees that cannot recover.
fn push_ok(class: PartitionClass, buf: &[u32], p: u32) -> bool {
    let closes_run = |need_even_for: fn(u32) -> bool| match buf.last() {
        Some(&l) if l > p && need_even_for(l) => trailing_run(buf, l) % 2 == 0,
        _ => true,
    };
    match class {
        PartitionClass::All => true,
        PartitionClass::PowersOf(l) => arith::is_power_of(p as u64, l as u64),
        PartitionClass::LRegular(l) => trailing_run(buf, p) + 1 < l,
        PartitionClass::DistinctEven => p % 2 == 0 && buf.last() != Some(&p),
        PartitionClass::DistinctOdd => p % 2 == 1 && buf.last() != Some(&p),
        PartitionClass::EvenMultiplicityOdds => closes_run(|v| v % 2 == 1),
        PartitionClass::EvenMultiplicityEvens => closes_run(|v| v % 2 == 0),
        PartitionClass::AllPartsEvenEvenMult => p % 2 == 0 && closes_run(|_| true),
    }
}

/// Final check on a completed partition (the last run was never closed).
fn tail_ok(class: PartitionClass, buf: &[u32]) -> bool {
    let last_run_even = |need_even_for: fn(u32) -> bool| match buf.last() {
        Some(&l) if need_even_for(l) => trailing_run(buf, l) % 2 == 0,
        _ => true,
    };
    match class {
        PartitionClass::EvenMultiplicityOdds => last_run_even(|v| v % 2 == 1),
        PartitionClass::EvenMultiplicityEvens => last_run_even(|v| v % 2 == 0),
        PartitionClass::AllPartsEvenEvenMult => last_run_even(|_| true),
        _ => true,
    }
}

fn gen_rec(
    rem: u32,
    max: u32,
    class: PartitionClass,
    buf: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if rem == 0 {
        if tail_ok(class, buf) {
            f(buf);
        }
        return;
    }
    let mut p = rem.min(max);
    while p >= 1 {
        if push_ok(class, buf, p) {
            buf.push(p);
            gen_rec(rem - p, p, class, buf, f);
            buf.pop();
        }
        p -= 1;
    }
}

/// Visits every partition of `n` in the class, in reverse-lexicographic
/// order, as a sorted slice.
pub fn for_each(n: u32, class: PartitionClass, mut f: impl FnMut(&[u32])) {
    if let PartitionClass::PowersOf(l) | PartitionClass::LRegular(l) = class {
        assert!(arith::is_prime(l), "{l} is not prime");
    }
    let mut buf = Vec::new();
    gen_rec(n, n.max(1), class, &mut buf, &mut f);
}

/// All partitions of `n` in the class, reverse-lexicographic, no duplicates.
pub fn enumerate(n: u32, class: PartitionClass) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each(n, class, |parts| {
        out.push(Partition::from_descending(parts.to_vec()));
    });
    out
}

/// Number of partitions of `n` in the class.
pub fn count(n: u32, class: PartitionClass) -> u64 {
    let mut c = 0u64;
    for_each(n, class, |_| c = add_counts(c, 1));
    c
}

/// The enumeration class for single components of a family: `l`-regular when
/// the flag is set, otherwise unrestricted.
fn component_class(l_regular: Option<u32>) -> PartitionClass {
    match l_regular {
        Some(l) => PartitionClass::LRegular(l),
        None => PartitionClass::All,
    }
}

/// All families `(λ^{(i)})` with `λ^{(i)}` a partition of `a_i`, each
/// `l`-regular when the flag is set.
///
/// The family over the empty composition is the single empty family. Order:
/// odometer over the support with the largest index varying fastest, each
/// component in reverse-lexicographic order.
pub fn enumerate_multipartitions(a: &Composition, l_regular: Option<u32>) -> Vec<Multipartition> {
    let class = component_class(l_regular);
    let support: Vec<u32> = a.support().collect();
    let menus: Vec<Vec<Partition>> = support.iter().map(|&i| enumerate(a.get(i), class)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; menus.len()];
    'outer: loop {
        out.push(Multipartition::new(
            support
                .iter()
                .zip(&choice)
                .enumerate()
                .map(|(k, (&i, &c))| (i, menus[k][c].clone())),
        ));
        for k in (0..menus.len()).rev() {
            choice[k] += 1;
            if choice[k] < menus[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    out
}

/// `Π_i |Part(a_i)|` (or the `l`-regular refinement).
pub fn count_multipartition_families(a: &Composition, l_regular: Option<u32>) -> u64 {
    let class = component_class(l_regular);
    a.entries()
        .fold(1u64, |acc, (_, c)| mul_counts(acc, count(c, class)))
}

/// Number of bipartitions of `m`, optionally `l`-regular in both slots.
///
/// Errors on `l = 2`: regular bipartitions only label the wreath-product
/// representations away from characteristic 2.
pub fn count_bipartitions(m: u32, l_regular: Option<u32>) -> Result<u64, Error> {
    if l_regular == Some(2) {
        return Err(Error::BipartitionsModTwo);
    }
    let class = component_class(l_regular);
    let mut total = 0u64;
    for j in 0..=m {
        total = add_counts(total, mul_counts(count(j, class), count(m - j, class)));
    }
    Ok(total)
}

/// `Π_i |Bipart(a_i)|` (or the `l`-regular refinement), with the same `l = 2`
/// restriction as [`count_bipartitions`].
pub fn count_bipartition_families(a: &Composition, l_regular: Option<u32>) -> Result<u64, Error> {
    let mut acc = 1u64;
    for (_, c) in a.entries() {
        acc = mul_counts(acc, count_bipartitions(c, l_regular)?);
    }
    Ok(acc)
}

/// All bipartitions of `m`, optionally `l`-regular; first component in
/// reverse-lex order varying slowest.
pub fn enumerate_bipartitions(m: u32, l_regular: Option<u32>) -> Result<Vec<Bipartition>, Error> {
    if l_regular == Some(2) {
        return Err(Error::BipartitionsModTwo);
    }
    let class = component_class(l_regular);
    let mut out = Vec::new();
    for j in (0..=m).rev() {
        for first in enumerate(j, class) {
            for second in enumerate(m - j, class) {
                out.push(Bipartition::new(first.clone(), second));
            }
        }
    }
    Ok(out)
}
