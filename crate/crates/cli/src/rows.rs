//! Flat row types for CLI output, with one JSON schema and one TSV rendering
//! per command. Partitions serialize as arrays of parts, compositions and
//! multipartitions as arrays of `[index, ...]` pairs in increasing index
//! order, decorations as `"none" | "I" | "II"`, characters as
//! `{"modulus": m, "residue": r}`.

use serde::Serialize;
use springer_core::correspondence::CorrespondenceEntry;
use springer_core::orbit::{Decoration, OrbitLabel};
use springer_core::partition::{Composition, Multipartition, Partition};
use springer_core::series::{CuspidalDatum, LeviLabel, SlCharacter, WeylShape};
use springer_core::verify::VerificationReport;

pub fn parts(p: &Partition) -> Vec<u32> {
    p.parts().to_vec()
}

pub fn decoration_str(d: Decoration) -> &'static str {
    match d {
        Decoration::None => "none",
        Decoration::I => "I",
        Decoration::II => "II",
    }
}

pub fn composition_pairs(c: &Composition) -> Vec<(u32, u32)> {
    c.entries().collect()
}

pub fn multipartition_pairs(m: &Multipartition) -> Vec<(u32, Vec<u32>)> {
    m.components().map(|(i, p)| (i, parts(p))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterJson {
    pub modulus: u64,
    pub residue: u64,
}

impl CharacterJson {
    pub fn of(chi: SlCharacter) -> Self {
        CharacterJson { modulus: chi.modulus(), residue: chi.residue() }
    }
}

/// Cell renderings shared by the TSV and plain-text formats.
pub mod cell {
    use super::*;

    pub fn partition(parts: &[u32]) -> String {
        let body: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        format!("[{}]", body.join(","))
    }

    pub fn composition(pairs: &[(u32, u32)]) -> String {
        let body: Vec<String> = pairs.iter().map(|(i, c)| format!("{i}:{c}")).collect();
        format!("{{{}}}", body.join(","))
    }

    pub fn multipartition(pairs: &[(u32, Vec<u32>)]) -> String {
        let body: Vec<String> = pairs
            .iter()
            .map(|(i, p)| format!("{i}:{}", partition(p)))
            .collect();
        format!("{{{}}}", body.join(","))
    }

    pub fn character(chi: &Option<CharacterJson>) -> String {
        match chi {
            Some(c) => format!("{}/{}", c.residue, c.modulus),
            None => "-".to_string(),
        }
    }

    pub fn opt_u64(v: Option<u64>) -> String {
        v.map_or_else(|| "-".to_string(), |x| x.to_string())
    }

    pub fn opt_u8(v: Option<u8>) -> String {
        v.map_or_else(|| "-".to_string(), |x| x.to_string())
    }

    pub fn opt_str(v: &Option<String>) -> String {
        v.clone().unwrap_or_else(|| "-".to_string())
    }
}

/// A table of rows renderable in every output format.
pub trait Row: Serialize {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitRow {
    pub partition: Vec<u32>,
    pub decoration: &'static str,
    pub distinguished: bool,
    pub local_systems: u64,
}

impl Row for OrbitRow {
    fn header() -> &'static [&'static str] {
        &["partition", "decoration", "distinguished", "local_systems"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            cell::partition(&self.partition),
            self.decoration.to_string(),
            self.distinguished.to_string(),
            self.local_systems.to_string(),
        ]
    }
}

pub fn weyl_shape_str(shape: &WeylShape) -> &'static str {
    match shape {
        WeylShape::SymmetricProduct(_) => "symmetric",
        WeylShape::HyperoctahedralProduct(_) => "hyperoctahedral",
        WeylShape::TypeDIndexTwo(_) => "type-d-index-two",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LeviRow {
    pub blocks: Vec<u32>,
    pub decoration: &'static str,
    pub residual: u32,
    pub weyl_shape: &'static str,
    pub multiplicities: Vec<(u32, u32)>,
    pub irr_count: u64,
    pub cuspidal_data: u64,
}

impl LeviRow {
    pub fn of(levi: &LeviLabel, irr_count: u64, data: u64) -> Self {
        let shape = springer_core::series::weyl_shape(levi);
        LeviRow {
            blocks: parts(levi.gl_blocks()),
            decoration: decoration_str(levi.decoration()),
            residual: levi.residual(),
            weyl_shape: weyl_shape_str(&shape),
            multiplicities: composition_pairs(shape.multiplicities()),
            irr_count,
            cuspidal_data: data,
        }
    }
}

impl Row for LeviRow {
    fn header() -> &'static [&'static str] {
        &["blocks", "decoration", "residual", "weyl_shape", "multiplicities", "irr_count", "cuspidal_data"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            cell::partition(&self.blocks),
            self.decoration.to_string(),
            self.residual.to_string(),
            self.weyl_shape.to_string(),
            cell::composition(&self.multiplicities),
            self.irr_count.to_string(),
            self.cuspidal_data.to_string(),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CuspidalRow {
    pub levi_blocks: Vec<u32>,
    pub levi_decoration: &'static str,
    pub residual: u32,
    pub orbit: Vec<u32>,
    pub character: Option<CharacterJson>,
    pub spin_sector: Option<u8>,
    pub irr_count: u64,
}

impl CuspidalRow {
    pub fn of(datum: &CuspidalDatum, irr_count: u64) -> Self {
        CuspidalRow {
            levi_blocks: parts(datum.levi().gl_blocks()),
            levi_decoration: decoration_str(datum.levi().decoration()),
            residual: datum.levi().residual(),
            orbit: parts(datum.residual_orbit().partition()),
            character: datum.character().map(CharacterJson::of),
            spin_sector: datum.spin_sector(),
            irr_count,
        }
    }
}

impl Row for CuspidalRow {
    fn header() -> &'static [&'static str] {
        &["levi_blocks", "levi_decoration", "residual", "orbit", "character", "spin_sector", "irr_count"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            cell::partition(&self.levi_blocks),
            self.levi_decoration.to_string(),
            self.residual.to_string(),
            cell::partition(&self.orbit),
            cell::character(&self.character),
            cell::opt_u8(self.spin_sector),
            self.irr_count.to_string(),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryRow {
    pub levi_blocks: Vec<u32>,
    pub levi_decoration: &'static str,
    pub residual: u32,
    pub cuspidal_orbit: Vec<u32>,
    pub series_character: Option<CharacterJson>,
    pub irr_label: Vec<(u32, Vec<u32>)>,
    pub orbit: Vec<u32>,
    pub orbit_decoration: &'static str,
    pub character: Option<CharacterJson>,
}

impl EntryRow {
    pub fn of(entry: &CorrespondenceEntry) -> Self {
        let datum = entry.series().datum();
        EntryRow {
            levi_blocks: parts(datum.levi().gl_blocks()),
            levi_decoration: decoration_str(datum.levi().decoration()),
            residual: datum.levi().residual(),
            cuspidal_orbit: parts(datum.residual_orbit().partition()),
            series_character: datum.character().map(CharacterJson::of),
            irr_label: multipartition_pairs(entry.irr_label()),
            orbit: parts(entry.orbit().partition()),
            orbit_decoration: decoration_str(entry.orbit().decoration()),
            character: entry.character().map(CharacterJson::of),
        }
    }
}

impl Row for EntryRow {
    fn header() -> &'static [&'static str] {
        &[
            "levi_blocks",
            "levi_decoration",
            "residual",
            "cuspidal_orbit",
            "series_character",
            "irr_label",
            "orbit",
            "orbit_decoration",
            "character",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            cell::partition(&self.levi_blocks),
            self.levi_decoration.to_string(),
            self.residual.to_string(),
            cell::partition(&self.cuspidal_orbit),
            cell::character(&self.series_character),
            cell::multipartition(&self.irr_label),
            cell::partition(&self.orbit),
            self.orbit_decoration.to_string(),
            cell::character(&self.character),
        ]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrdinaryRow {
    pub label: Vec<u32>,
    pub orbit: Vec<u32>,
}

impl Row for OrdinaryRow {
    fn header() -> &'static [&'static str] {
        &["label", "orbit"]
    }

    fn cells(&self) -> Vec<String> {
        vec![cell::partition(&self.label), cell::partition(&self.orbit)]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub check: String,
    pub group: Option<String>,
    pub size: u32,
    pub ell: u32,
    pub lhs: u64,
    pub rhs: u64,
    pub rhs_strict_k_positive: Option<u64>,
    pub pass: bool,
}

impl ReportRow {
    pub fn of(report: &VerificationReport) -> Self {
        ReportRow {
            check: report.check.to_string(),
            group: report.group.map(|g| g.to_string()),
            size: report.size,
            ell: report.ell,
            lhs: report.lhs,
            rhs: report.rhs,
            rhs_strict_k_positive: report.rhs_strict_k_positive,
            pass: report.pass,
        }
    }
}

impl Row for ReportRow {
    fn header() -> &'static [&'static str] {
        &["check", "group", "size", "ell", "lhs", "rhs", "rhs_strict_k_positive", "pass"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.check.clone(),
            cell::opt_str(&self.group),
            self.size.to_string(),
            self.ell.to_string(),
            self.lhs.to_string(),
            self.rhs.to_string(),
            cell::opt_u64(self.rhs_strict_k_positive),
            self.pass.to_string(),
        ]
    }
}

pub fn orbit_label_of(label: &OrbitLabel) -> (Vec<u32>, &'static str) {
    (parts(label.partition()), decoration_str(label.decoration()))
}
