//! One-shot analysis of a function, serializable as JSON.

use serde::Serialize;

use crate::boolfn::BooleanFunction;
use crate::classify::{classify_spectrum, support_rank};
use crate::spectral::{autocorrelation_from_spectrum, wht};

/// Schema for [`AnalysisReport`] as JSON.
pub const ANALYSIS_REPORT_SCHEMA: &str = include_str!("../docs/analysis_report.schema.json");

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Plateau {
    pub s: usize,
    pub amplitude: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub weight: u64,
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plateaued: Option<Plateau>,
    pub bent: bool,
    pub support_size: usize,
    pub classification: &'static str,
    pub support_rank: usize,
    pub lambda_dim: usize,
    pub partially_bent: bool,
    pub autocorr_nonzero_count: usize,
}

pub fn analyze(f: &BooleanFunction) -> AnalysisReport {
    let n = f.num_vars();
    let spec = wht(f);
    let ac = autocorrelation_from_spectrum(&spec);
    let support = spec.support();
    let full = 1i64 << n;
    let lambda = ac.values().iter().enumerate().filter(|(_, d)| d.abs() == full).map(|(a, _)| a as u32);
    let amp = 1i32 << (n / 2);
    AnalysisReport {
        n,
        weight: f.weight(),
        degree: f.degree(),
        plateaued: spec.plateaued_profile().map(|p| Plateau { s: p.s, amplitude: p.amplitude }),
        bent: n.is_multiple_of(2) && spec.values().iter().all(|w| w.abs() == amp),
        support_size: support.len(),
        classification: classify_spectrum(&spec).label(),
        support_rank: support_rank(&support),
        lambda_dim: crate::bits::rank_of(lambda),
        partially_bent: support.len() * ac.nonzero_count() == f.len(),
        autocorr_nonzero_count: ac.nonzero_count(),
    }
}
