//! Aggregated per-permutation analysis reports and their stable JSON form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::ci::{ci_verdict, CiVerdict};
use crate::diagram::{ascii_render, essential_set, rothe_diagram, Diagram, EssentialCell};
use crate::error::Error;
use crate::generators::{elusive_minors, Minor};
use crate::perm::Permutation;
use crate::verify::{minimality_certificates, MinimalityCertificate};

/// Everything the analysis of one permutation produces.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AnalysisReport {
    pub permutation: Permutation,
    pub n: usize,
    pub length: usize,
    pub diagram: Diagram,
    pub essential: Vec<EssentialCell>,
    pub essential_count: usize,
    pub elusive: Vec<Minor>,
    pub histogram: BTreeMap<usize, usize>,
    pub ci: CiVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Vec<MinimalityCertificate>>,
}

/// Full analysis of `w`; certificates are built and checked only on request.
pub fn analyze(w: &Permutation, with_certificates: bool) -> Result<AnalysisReport, Error> {
    let gens = elusive_minors(w);
    let ci = ci_verdict(w)?;
    let certificates = if with_certificates {
        Some(minimality_certificates(w)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        permutation: w.clone(),
        n: w.n(),
        length: w.length(),
        diagram: rothe_diagram(w),
        essential: essential_set(w),
        essential_count: gens.essential_count(),
        elusive: gens.elusive,
        histogram: gens.degree_histogram,
        ci,
        certificates,
    })
}

/// Serializes any value through `serde_json::Value`, which sorts every object
/// key; identical inputs therefore produce byte-identical output.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("report serialization cannot fail");
    serde_json::to_string(&value).expect("JSON value rendering cannot fail")
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        to_sorted_json(self)
    }

    /// Human-readable report, including the diagram rendering and a
    /// degree-histogram table.
    pub fn render_text(&self) -> String {
        let w = &self.permutation;
        let mut out = String::new();
        let _ = writeln!(out, "w = {w}   (n = {}, length = {})", self.n, self.length);
        let _ = writeln!(out);
        let _ = writeln!(out, "{}", ascii_render(w));
        let _ = writeln!(out);
        if self.essential.is_empty() {
            let _ = writeln!(out, "essential set: empty");
        } else {
            let _ = writeln!(out, "essential set (cell, rank):");
            for ec in &self.essential {
                let _ = writeln!(out, "  {}  rank {}", ec.cell, ec.rank);
            }
        }
        let _ = writeln!(out, "essential minors: {}", self.essential_count);
        let _ = writeln!(
            out,
            "minimal generators (elusive minors): {}",
            self.elusive.len()
        );
        for (degree, count) in &self.histogram {
            let _ = writeln!(out, "  degree {degree}: {count}");
        }
        if !self.elusive.is_empty() {
            let _ = writeln!(out, "generators:");
            for m in &self.elusive {
                let _ = writeln!(out, "  {m}");
            }
        }
        let ci = &self.ci;
        if ci.by_count {
            let _ = writeln!(
                out,
                "complete intersection: yes ({} generators = length {})",
                ci.elusive_count, ci.length
            );
        } else {
            let _ = writeln!(
                out,
                "complete intersection: no ({} generators, length {})",
                ci.elusive_count, ci.length
            );
        }
        match &ci.pattern_witness {
            None => {
                let _ = writeln!(out, "pattern check agrees: avoids 1342, 1432, 1423");
            }
            Some(witness) => {
                let _ = writeln!(
                    out,
                    "pattern check agrees: contains {} at positions {:?}",
                    witness
                        .pattern
                        .iter()
                        .map(usize::to_string)
                        .collect::<String>(),
                    witness.positions
                );
            }
        }
        if let Some(certs) = &self.certificates {
            let _ = writeln!(
                out,
                "minimality certificates: {} (all checked)",
                certs.len()
            );
            for c in certs {
                let _ = writeln!(
                    out,
                    "  {}: value {} at 1s {:?}, {} vanishing checks",
                    c.minor,
                    c.value_at_point,
                    c.point.ones(),
                    c.vanishing_checked
                );
            }
        }
        out
    }
}

/// The closing record of a survey stream.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SurveySummary {
    pub n: usize,
    pub total: usize,
    pub ci_count: usize,
}

/// One cover assignment in a Gröbner cover report.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CoverEntry {
    pub minor: Minor,
    pub by: Minor,
}

/// JSON-facing result of a `groebner` run.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GroebnerReport {
    pub w: Permutation,
    pub order: String,
    pub mode: String,
    pub pass: bool,
    pub forced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs_skipped: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<CoverEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncovered: Option<Vec<Minor>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub traces: Option<Vec<serde_json::Value>>,
}

/// JSON-facing result of a `witness` run.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WitnessReport {
    pub w: Permutation,
    pub certificate: MinimalityCertificate,
}
