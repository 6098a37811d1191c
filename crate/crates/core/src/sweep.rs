//! Grid runs comparing the closed form, the construction and (optionally)
//! the exact oracle, with CSV and JSON reports.

use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::construct_unchecked;
use crate::error::Result;
use crate::formula::{
    closed_form_span, hypothesis_holds, hypothesis_min_k, CaseTag, HypothesisCheck, Variant,
};
use crate::graph::PathPowerGraph;
use crate::oracle::{rc_exact, OracleConfig, OracleOutcome};
use crate::verify::check_coloring;

pub const CSV_HEADER: [&str; 10] = [
    "n",
    "m",
    "k",
    "case",
    "diam",
    "formula_consistent",
    "formula_as_printed",
    "constructed_span",
    "oracle_span",
    "status",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Every available value agrees.
    Match,
    /// Some available value disagrees with the formula.
    Mismatch,
    /// The construction failed the radio condition.
    Invalid,
    /// Oracle budget ran out before the search completed.
    Inconclusive,
    /// Oracle requested but the instance is outside its limits.
    Skipped,
    /// `k` is outside the closed-form regime; nothing is claimed.
    Uncertified,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Invalid => "invalid",
            Status::Inconclusive => "inconclusive",
            Status::Skipped => "skipped",
            Status::Uncertified => "uncertified",
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Status::Mismatch | Status::Invalid)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Witnesses {
    pub constructed_colors: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_colors: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportRow {
    pub n: usize,
    pub m: usize,
    pub k: u64,
    pub case: CaseTag,
    pub diam: usize,
    pub formula_consistent: i64,
    pub formula_as_printed: i64,
    pub constructed_span: u64,
    pub oracle_span: Option<u64>,
    pub status: Status,
    /// Full colorings, attached only to failing rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Witnesses>,
}

/// Evaluates one instance against the formula `variant`.
pub fn evaluate_instance(
    g: &PathPowerGraph,
    k: u64,
    variant: Variant,
    oracle: Option<&OracleConfig>,
) -> Result<ReportRow> {
    let consistent = closed_form_span(g, k, Variant::Consistent, HypothesisCheck::Unchecked)?.value;
    let as_printed = closed_form_span(g, k, Variant::AsPrinted, HypothesisCheck::Unchecked)?.value;
    let formula = match variant {
        Variant::Consistent => consistent,
        Variant::AsPrinted => as_printed,
    };
    let constructed = construct_unchecked(g, k)?;
    let valid = check_coloring(&constructed).valid;

    let outcome = match oracle {
        Some(cfg) if g.vertex_count() <= cfg.max_vertices && k > g.diameter() as u64 => {
            Some(rc_exact(g, k, cfg)?)
        }
        _ => None,
    };
    let oracle_span = outcome.as_ref().and_then(OracleOutcome::exact_value);

    let disagrees =
        constructed.span() as i64 != formula || oracle_span.is_some_and(|v| v as i64 != formula);
    let status = if !hypothesis_holds(g, k) {
        Status::Uncertified
    } else if !valid {
        Status::Invalid
    } else if disagrees {
        Status::Mismatch
    } else if oracle.is_some() && outcome.is_none() {
        Status::Skipped
    } else if oracle.is_some() && oracle_span.is_none() {
        Status::Inconclusive
    } else {
        Status::Match
    };
    let witnesses = status.is_failure().then(|| Witnesses {
        constructed_colors: constructed.colors().to_vec(),
        oracle_colors: outcome.as_ref().map(|o| o.witness().colors().to_vec()),
    });

    Ok(ReportRow {
        n: g.n(),
        m: g.m(),
        k,
        case: CaseTag::of(g),
        diam: g.diameter(),
        formula_consistent: consistent,
        formula_as_printed: as_printed,
        constructed_span: constructed.span(),
        oracle_span,
        status,
        witnesses,
    })
}

/// Runs the oracle on every instance and compares it with the construction
/// and the formula.
pub fn certify_closed_form(
    instances: &[(PathPowerGraph, u64)],
    variant: Variant,
    oracle: &OracleConfig,
) -> Result<SweepReport> {
    let rows = instances
        .iter()
        .map(|(g, k)| evaluate_instance(g, *k, variant, Some(oracle)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KMode {
    /// `hyp + from ..= hyp + to`, with `hyp` the smallest admissible k.
    HypOffsets {
        from: u64,
        to: u64,
    },
    Explicit(Vec<u64>),
}

impl FromStr for KMode {
    type Err = String;

    /// Accepts `hyp`, `hyp..hyp+2`, `hyp+1..hyp+5`, or `3,4,7` / `3..6`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.starts_with("hyp") {
            let offset = |part: &str| -> std::result::Result<u64, String> {
                match part.trim().strip_prefix("hyp") {
                    Some("") => Ok(0),
                    Some(rest) => rest
                        .strip_prefix('+')
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(|| format!("bad k offset `{part}`")),
                    None => Err(format!("expected `hyp[+d]`, got `{part}`")),
                }
            };
            let (from, to) = match s.split_once("..") {
                Some((a, b)) => (offset(a)?, offset(b.trim_start_matches('='))?),
                None => (offset(s)?, offset(s)?),
            };
            if from > to {
                return Err(format!("empty k range `{s}`"));
            }
            return Ok(KMode::HypOffsets { from, to });
        }
        let mut ks = Vec::new();
        for part in s.split(',') {
            let r = parse_range::<u64>(part)?;
            ks.extend(r);
        }
        if ks.is_empty() || ks.contains(&0) {
            return Err(format!("k list `{s}` must be non-empty and positive"));
        }
        Ok(KMode::Explicit(ks))
    }
}

/// Parses `a..b` (inclusive), `a..=b` or a single value.
pub fn parse_range<T>(s: &str) -> std::result::Result<RangeInclusive<T>, String>
where
    T: FromStr + PartialOrd + Copy,
{
    let s = s.trim();
    let parse = |x: &str| {
        x.trim()
            .parse::<T>()
            .map_err(|_| format!("`{x}` is not a valid number"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => (parse(s)?, parse(s)?),
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub n_range: RangeInclusive<usize>,
    pub m_range: RangeInclusive<usize>,
    pub k_mode: KMode,
    pub variant: Variant,
    pub oracle: Option<OracleConfig>,
    pub parallel: bool,
}

impl SweepSpec {
    /// Instances in `(n, m, k)` order; pairs with `m > n` or `m = 0` are
    /// left out.
    pub fn instances(&self) -> Vec<(PathPowerGraph, u64)> {
        let mut out = Vec::new();
        for n in self.n_range.clone() {
            for m in self.m_range.clone() {
                let Ok(g) = PathPowerGraph::new(n, m) else {
                    continue;
                };
                match &self.k_mode {
                    KMode::HypOffsets { from, to } => {
                        let hyp = hypothesis_min_k(&g);
                        out.extend((hyp + from..=hyp + to).map(|k| (g, k)));
                    }
                    KMode::Explicit(ks) => out.extend(ks.iter().map(|&k| (g, k))),
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepReport {
    pub rows: Vec<ReportRow>,
}

impl SweepReport {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status.is_failure()).count()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for r in &self.rows {
            w.write_record([
                r.n.to_string(),
                r.m.to_string(),
                r.k.to_string(),
                r.case.to_string(),
                r.diam.to_string(),
                r.formula_consistent.to_string(),
                r.formula_as_printed.to_string(),
                r.constructed_span.to_string(),
                r.oracle_span.map(|v| v.to_string()).unwrap_or_default(),
                r.status.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(&self.rows)
    }
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepReport> {
    let instances = spec.instances();
    let eval = |(g, k): &(PathPowerGraph, u64)| {
        evaluate_instance(g, *k, spec.variant, spec.oracle.as_ref())
    };
    let rows = if spec.parallel {
        instances.par_iter().map(eval).collect::<Result<Vec<_>>>()?
    } else {
        instances.iter().map(eval).collect::<Result<Vec<_>>>()?
    };
    Ok(SweepReport { rows })
}
