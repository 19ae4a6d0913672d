use logfol_core::indices::{PointRecord, StratumTotal};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumEntry {
    pub subset: Vec<usize>,
    pub dim: usize,
    pub milnor_total: usize,
    /// `Σ d^i` for the restricted foliation; absent on point strata.
    pub classical: Option<u64>,
}

impl From<&StratumTotal> for StratumEntry {
    fn from(s: &StratumTotal) -> Self {
        StratumEntry { subset: s.subset.clone(), dim: s.dim, milnor_total: s.milnor_total, classical: s.classical }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointEntry {
    pub point: String,
    pub components: Vec<usize>,
    pub milnor: usize,
    pub log: i64,
    /// Homological index, only defined on the divisor.
    pub hom: Option<i64>,
    pub on_divisor: bool,
}

impl From<&PointRecord> for PointEntry {
    fn from(r: &PointRecord) -> Self {
        PointEntry {
            point: r.point.to_string(),
            components: r.indices.components.clone(),
            milnor: r.indices.milnor,
            log: r.indices.log,
            hom: r.indices.hom,
            on_divisor: r.on_divisor(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaCheck {
    pub closed_form: i64,
    pub positive_arguments: i64,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub degree: u32,
    pub hyperplanes: usize,
    pub validation: Vec<Check>,
    pub lhs_chern: i64,
    pub rhs_total: i64,
    pub verified: bool,
    pub complement_milnor_sum: usize,
    pub divisor_log_sum: i64,
    pub strata: Vec<StratumEntry>,
    pub points: Vec<PointEntry>,
    pub sigma: Option<SigmaCheck>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "P^{}, foliation degree {}, {} hyperplane(s)", self.n, self.degree, self.hyperplanes);
        for c in &self.validation {
            let _ = writeln!(out, "  check {:<24} {}", c.name, if c.passed { "ok" } else { "FAILED" });
        }
        let _ = writeln!(out, "lhs (Chern number)      {}", self.lhs_chern);
        let _ = writeln!(out, "rhs (index sum)         {}", self.rhs_total);
        let _ = writeln!(out, "  off the divisor       {}", self.complement_milnor_sum);
        let _ = writeln!(out, "  on the divisor        {}", self.divisor_log_sum);
        let _ = writeln!(out, "verified                {}", self.verified);
        if let Some(s) = &self.sigma {
            let _ = writeln!(out, "closed form             {} ({})", s.closed_form, if s.agrees { "agrees" } else { "DISAGREES" });
            let _ = writeln!(out, "positive-argument form  {}", s.positive_arguments);
        }
        let _ = writeln!(out, "strata:");
        for s in &self.strata {
            let classical = s.classical.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(out, "  {:<12} dim {}  milnor {:>4}  classical {}", format!("{:?}", s.subset), s.dim, s.milnor_total, classical);
        }
        out.push_str(&points_text(&self.points));
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

pub fn points_text(points: &[PointEntry]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "points:");
    for p in points {
        let hom = p.hom.map(|h| h.to_string()).unwrap_or_else(|| "off D".into());
        let _ = writeln!(
            out,
            "  {:<16} on {:<10} mu {:>3}  log {:>3}  hom {}",
            p.point,
            format!("{:?}", p.components),
            p.milnor,
            p.log,
            hom
        );
    }
    out
}
