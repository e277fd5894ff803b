//! Runs the whole verification pipeline for one prime and renders the result.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cover::{
    build_cover, check_h_matrices, check_relations, check_transition, cocycle_check, det_periodicity_check,
    gluing_substitution_check, matrix_ideal_shift_check, section_ring_identity_check, specialize_w0,
};
use crate::curve::CurveContext;
use crate::error::{Error, Result};
use crate::fiber::{component_stats, enumerate_fiber, verify_census, verify_stats, ComponentStats};
use crate::field::check_odd_prime;
use crate::oracle::{cross_check, MIN_POINTS};
use crate::syzygy::{
    build_catalog, check_alpha, check_catalog, check_independence, check_kernel_relation, check_mutation_sensitivity,
};
use crate::verdict::Verdict;

/// Samples drawn per matrix size for the matrix shift identities.
pub const SHIFT_SAMPLES: usize = 100;
/// Field in which the matrix shift identities are sampled.
pub const SHIFT_PRIME: u64 = 7;

/// Which groups of checks to run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckSelection {
    pub lemmas: bool,
    pub cover: bool,
    pub fiber: bool,
}

impl CheckSelection {
    pub const ALL: Self = Self { lemmas: true, cover: true, fiber: true };
    pub const NONE: Self = Self { lemmas: false, cover: false, fiber: false };
}

impl FromStr for CheckSelection {
    type Err = Error;

    /// Comma-separated list of `lemmas`, `cover`, `fiber` and `all`. The
    /// empty string selects nothing.
    fn from_str(s: &str) -> Result<Self> {
        let mut sel = Self::NONE;
        for part in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match part {
                "lemmas" => sel.lemmas = true,
                "cover" => sel.cover = true,
                "fiber" => sel.fiber = true,
                "all" => sel = Self::ALL,
                other => return Err(Error::InvalidSelection(other.to_string())),
            }
        }
        Ok(sel)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn from_verdict(name: &str, verdict: Verdict) -> Self {
        let (status, detail) = match verdict {
            Ok(()) => (CheckStatus::Pass, String::new()),
            Err(m) => (CheckStatus::Fail, m.0),
        };
        Self { name: name.to_string(), status, detail }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportStats {
    pub components: u64,
    pub total_fiber: u64,
    pub degree: u64,
    pub genus_base: u64,
    pub genus_component: u64,
    pub eta_field_degree: u32,
    pub fiber_field_degree: u32,
}

impl From<&ComponentStats> for ReportStats {
    fn from(s: &ComponentStats) -> Self {
        Self {
            components: s.component_count,
            total_fiber: s.total_fiber,
            degree: s.degree_per_component,
            genus_base: s.genus_base,
            genus_component: s.genus_component,
            eta_field_degree: s.eta_field_degree,
            fiber_field_degree: s.fiber_field_degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineInfo {
    pub version: String,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub prime: u64,
    /// `pass` unless some check failed.
    pub overall: CheckStatus,
    pub checks: Vec<CheckResult>,
    pub stats: ReportStats,
    pub engine: EngineInfo,
}

impl CoverReport {
    pub fn passed(&self) -> bool {
        self.overall == CheckStatus::Pass
    }

    /// Counts skipped checks as failures.
    pub fn make_strict(&mut self) {
        if self.checks.iter().any(|c| c.status == CheckStatus::Skipped) {
            self.overall = CheckStatus::Fail;
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn lemma_checks(p: u64, out: &mut Vec<CheckResult>) -> Result<()> {
    let cat = build_catalog(p)?;
    let checks: [(&str, fn(&_) -> Verdict); 5] = [
        ("syzygy.catalog", check_catalog),
        ("syzygy.kernel", check_kernel_relation),
        ("syzygy.alpha", check_alpha),
        ("syzygy.independence", check_independence),
        ("syzygy.mutation", check_mutation_sensitivity),
    ];
    for (name, check) in checks {
        out.push(CheckResult::from_verdict(name, check(&cat)));
    }
    Ok(())
}

fn cover_checks(p: u64, seed: u64, out: &mut Vec<CheckResult>) -> Result<()> {
    let ctx = CurveContext::fermat(p)?;
    let data = build_cover(p)?;
    let mut push = |name: &str, v: Verdict| out.push(CheckResult::from_verdict(name, v));
    push("cover.transition", check_transition(&ctx));
    push("cover.base_change", check_h_matrices(&ctx));
    push("cover.cocycle", cocycle_check(&ctx));
    push("cover.relations", check_relations(&data));
    push("cover.gluing", gluing_substitution_check(&ctx));
    push("cover.section_ring", section_ring_identity_check(&ctx));
    push("cover.det_periodicity", det_periodicity_check(&ctx));
    push("cover.w0", specialize_w0(&ctx));
    for n in [2, 3] {
        push(&format!("cover.matrix_shift_n{n}"), matrix_ideal_shift_check(SHIFT_PRIME, n, SHIFT_SAMPLES, seed));
    }
    push("cover.oracle", cross_check(p, MIN_POINTS, seed));
    Ok(())
}

/// Runs the selected checks for `p` and collects the report. Stats are
/// always included; the census is attempted only when fiber checks are
/// selected and is skipped when the field exceeds `cap`.
pub fn run_verification(p: u64, selection: CheckSelection, seed: u64, cap: u64) -> Result<CoverReport> {
    check_odd_prime(p)?;
    let mut checks = Vec::new();
    if selection.lemmas {
        lemma_checks(p, &mut checks)?;
    }
    if selection.cover {
        cover_checks(p, seed, &mut checks)?;
    }
    let mut census = None;
    if selection.fiber {
        match enumerate_fiber(p, cap) {
            Ok(c) => {
                checks.push(CheckResult::from_verdict("fiber.census", verify_census(&c)));
                census = Some(c);
            }
            Err(e @ Error::FieldTooLarge { .. }) => checks.push(CheckResult {
                name: "fiber.census".to_string(),
                status: CheckStatus::Skipped,
                detail: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    let stats = component_stats(p, census.as_ref())?;
    if selection.fiber {
        checks.push(CheckResult::from_verdict("fiber.stats", verify_stats(&stats)));
    }
    let overall = if checks.iter().any(|c| c.status == CheckStatus::Fail) {
        CheckStatus::Fail
    } else {
        CheckStatus::Pass
    };
    Ok(CoverReport {
        prime: p,
        overall,
        checks,
        stats: ReportStats::from(&stats),
        engine: EngineInfo { version: env!("CARGO_PKG_VERSION").to_string(), seed },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Json,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "text" => Ok(Self::Text),
            other => Err(Error::InvalidFormat(other.to_string())),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json(r: &CoverReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> Result<CoverReport> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_text(r: &CoverReport) -> String {
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0).max(5);
    let mut s = String::new();
    let _ = writeln!(s, "prime {}: {}", r.prime, r.overall.as_str());
    let _ = writeln!(s, "engine {} seed {}", r.engine.version, r.engine.seed);
    if !r.checks.is_empty() {
        let _ = writeln!(s, "\n{:<width$}  {:<7}  detail", "check", "status");
        for c in &r.checks {
            let row = format!("{:<width$}  {:<7}  {}", c.name, c.status.as_str(), c.detail);
            let _ = writeln!(s, "{}", row.trim_end());
        }
    }
    let st = &r.stats;
    let _ = writeln!(s);
    let rows = [
        ("components", st.components as u128),
        ("total_fiber", st.total_fiber as u128),
        ("degree", st.degree as u128),
        ("genus_base", st.genus_base as u128),
        ("genus_component", st.genus_component as u128),
        ("eta_field_degree", st.eta_field_degree as u128),
        ("fiber_field_degree", st.fiber_field_degree as u128),
    ];
    for (k, v) in rows {
        let _ = writeln!(s, "{k:<18}  {v}");
    }
    s
}

pub fn render(r: &CoverReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => to_json(r),
        ReportFormat::Text => to_text(r),
    }
}

pub fn emit_report(r: &CoverReport, format: ReportFormat, dest: &mut impl Write) -> Result<()> {
    dest.write_all(render(r, format).as_bytes()).map_err(|e| Error::Io(e.to_string()))?;
    dest.flush().map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_parsing() {
        assert_eq!("all".parse::<CheckSelection>().unwrap(), CheckSelection::ALL);
        assert_eq!("".parse::<CheckSelection>().unwrap(), CheckSelection::NONE);
        let s: CheckSelection = "cover, fiber".parse().unwrap();
        assert!(!s.lemmas && s.cover && s.fiber);
        assert!("bogus".parse::<CheckSelection>().is_err());
    }

    #[test]
    fn status_serializes_lowercase() {
        assert_eq!(serde_json::to_string(&CheckStatus::Skipped).unwrap(), "\"skipped\"");
    }
}
