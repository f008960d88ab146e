//! Stable machine-readable report format for the CLI, mirroring the
//! analysis verdicts, plus the human-readable text rendering.

use serde::{Deserialize, Serialize};

use crate::graded::AnalysisReport;
use crate::threegen::ThreeGenReport;

/// Bumped whenever a field of [`ReportDocument`] changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyEntry {
    pub class: usize,
    pub omega: u64,
    pub omega_prime: u64,
    pub a: u32,
    pub b: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub level: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleBasisEntry {
    pub exponent: u64,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeGenSection {
    pub k: u32,
    pub defect_unique: bool,
    pub defect_is_k_g3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub frobenius: i64,
    pub symmetric: bool,
    pub reduction_number: u32,
    pub nilpotency_index: u32,
    pub apery: Vec<AperyEntry>,
    pub max_ap_m: Vec<u64>,
    pub m_pure: bool,
    pub cm: bool,
    pub buchsbaum: bool,
    pub g_gorenstein: bool,
    pub socle_basis: Vec<SocleBasisEntry>,
    pub lambda: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threegen: Option<ThreeGenSection>,
}

impl ReportDocument {
    pub fn from_analysis(analysis: &AnalysisReport, threegen: Option<&ThreeGenReport>) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            generators: analysis.generators.clone(),
            multiplicity: analysis.multiplicity,
            frobenius: analysis.frobenius,
            symmetric: analysis.symmetric,
            reduction_number: analysis.reduction_number,
            nilpotency_index: analysis.nilpotency_index,
            apery: analysis
                .apery_records
                .iter()
                .map(|rec| AperyEntry {
                    class: rec.class_index,
                    omega: rec.omega,
                    omega_prime: rec.omega_prime,
                    a: rec.a,
                    b: rec.b,
                    level: rec.level,
                })
                .collect(),
            max_ap_m: analysis.max_ap_m.clone(),
            m_pure: analysis.m_pure,
            cm: analysis.cm,
            buchsbaum: analysis.buchsbaum,
            g_gorenstein: analysis.g_gorenstein,
            socle_basis: analysis
                .socle_basis
                .entries
                .iter()
                .map(|e| SocleBasisEntry {
                    exponent: e.exponent,
                    order: e.order,
                })
                .collect(),
            lambda: analysis.lambda as u64,
            threegen: threegen.map(|tg| ThreeGenSection {
                k: tg.k,
                defect_unique: tg.defect_unique,
                defect_is_k_g3: tg.defect_is_k_g3,
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(",");
        writeln!(out, "semigroup        <{gens}>").unwrap();
        writeln!(out, "multiplicity     {}", self.multiplicity).unwrap();
        writeln!(out, "frobenius        {}", self.frobenius).unwrap();
        writeln!(out, "symmetric        {}", self.symmetric).unwrap();
        writeln!(out, "reduction number {}", self.reduction_number).unwrap();
        writeln!(out, "nilpotency index {}", self.nilpotency_index).unwrap();
        writeln!(out, "apery classes    (class: omega, omega', a, b[, level])").unwrap();
        for e in &self.apery {
            match e.level {
                Some(level) => writeln!(
                    out,
                    "  {:>3}: {:>6} {:>6} {:>3} {:>3}  level {level}",
                    e.class, e.omega, e.omega_prime, e.a, e.b
                )
                .unwrap(),
                None => writeln!(
                    out,
                    "  {:>3}: {:>6} {:>6} {:>3} {:>3}",
                    e.class, e.omega, e.omega_prime, e.a, e.b
                )
                .unwrap(),
            }
        }
        let mam = self
            .max_ap_m
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(out, "max Apery (<=_M) {{{mam}}}").unwrap();
        writeln!(out, "M-pure           {}", self.m_pure).unwrap();
        writeln!(out, "Cohen-Macaulay   {}", self.cm).unwrap();
        writeln!(out, "Buchsbaum        {}", self.buchsbaum).unwrap();
        writeln!(out, "Gorenstein G(m)  {}", self.g_gorenstein).unwrap();
        let basis = self
            .socle_basis
            .iter()
            .map(|e| format!("t^{} (order {})", e.exponent, e.order))
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(out, "socle basis      {{{basis}}}").unwrap();
        writeln!(out, "lambda           {}", self.lambda).unwrap();
        if let Some(tg) = &self.threegen {
            writeln!(
                out,
                "threegen         k = {}, defect unique = {}, defect = k*g3: {}",
                tg.k, tg.defect_unique, tg.defect_is_k_g3
            )
            .unwrap();
        }
        out
    }
}
