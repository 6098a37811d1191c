//! Radio-condition checking and the optimal/loose decomposition of a
//! coloring's color sequence.
//!
//! A consecutive pair `(v_i, v_(i+1))` always has gap at least
//! `k - f(v_i) - f(v_(i+1)) + eps`. Pairs meeting it with equality are
//! optimal; maximal runs of optimal pairs form the `X` runs and the
//! remaining vertices form the (possibly empty) `Y` runs in
//! `Y_0 X_1 Y_1 ... X_t Y_t`.

use serde::Serialize;

use crate::coloring::{ColorSequence, RadioColoring};
use crate::error::{Error, Result};
use crate::formula::{alpha1_from_layers, epsilon};
use crate::graph::Vertex;
use crate::layering::{Layering, Parity, Side};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub distance: usize,
    pub gap: u64,
    pub required: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub valid: bool,
    pub span: u64,
    pub violations: Vec<Violation>,
}

/// Checks `|c(u) - c(v)| >= k + 1 - d(u, v)` on every unordered pair and
/// lists every violation.
pub fn check_coloring(coloring: &RadioColoring) -> ValidityReport {
    let g = coloring.graph();
    let k = coloring.k() as i64;
    let mut violations = Vec::new();
    for u in g.vertices() {
        for v in u + 1..=g.n() {
            let distance = g.dist(u, v);
            let required = k + 1 - distance as i64;
            let gap = coloring.color(u).abs_diff(coloring.color(v));
            if (gap as i64) < required {
                violations.push(Violation {
                    u,
                    v,
                    distance,
                    gap,
                    required,
                });
            }
        }
    }
    ValidityReport {
        valid: violations.is_empty(),
        span: coloring.span(),
        violations,
    }
}

pub fn sequence_of(coloring: &RadioColoring) -> Result<ColorSequence> {
    coloring.sequence()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairClass {
    Optimal,
    Loose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Leftist,
    Balanced,
    Rightist,
}

/// `k - f(u) - f(v) + eps`.
pub fn layer_gap_bound(layering: &Layering, k: u64, u: Vertex, v: Vertex) -> i64 {
    k as i64 - layering.layer_of(u) as i64 - layering.layer_of(v) as i64
        + epsilon(layering.parity())
}

fn classify_gap(
    layering: &Layering,
    coloring: &RadioColoring,
    u: Vertex,
    v: Vertex,
) -> Result<PairClass> {
    let gap = coloring.color(v) as i64 - coloring.color(u) as i64;
    let bound = layer_gap_bound(layering, coloring.k(), u, v);
    match gap.cmp(&bound) {
        std::cmp::Ordering::Less => Err(Error::GapBelowBound { u, v, gap, bound }),
        std::cmp::Ordering::Equal => Ok(PairClass::Optimal),
        std::cmp::Ordering::Greater => Ok(PairClass::Loose),
    }
}

/// Classifies `(vi, vj)`, which must be consecutive in color order with
/// `vi` first.
pub fn classify_pair(
    layering: &Layering,
    coloring: &RadioColoring,
    vi: Vertex,
    vj: Vertex,
) -> Result<PairClass> {
    let g = coloring.graph();
    g.check_vertex(vi)?;
    g.check_vertex(vj)?;
    let (lo, hi) = (coloring.color(vi), coloring.color(vj));
    let between = g
        .vertices()
        .any(|w| w != vi && w != vj && (lo..=hi).contains(&coloring.color(w)));
    if vi == vj || lo >= hi || between {
        return Err(Error::NotConsecutive { u: vi, v: vj });
    }
    classify_gap(layering, coloring, vi, vj)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RunKind {
    Loose,
    Optimal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Run {
    pub kind: RunKind,
    pub vertices: Vec<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polarity: Option<Polarity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Decomposition {
    /// `Y_0, X_1, Y_1, ..., X_t, Y_t`; `Y` runs may be empty.
    pub runs: Vec<Run>,
    pub t: usize,
    pub loose_lengths: Vec<usize>,
    pub pair_classes: Vec<PairClass>,
    pub alpha2: i64,
}

impl Decomposition {
    pub fn loose_pair_count(&self) -> usize {
        self.pair_classes
            .iter()
            .filter(|&&c| c == PairClass::Loose)
            .count()
    }

    pub fn optimal_runs(&self) -> impl Iterator<Item = &Run> {
        self.runs.iter().filter(|r| r.kind == RunKind::Optimal)
    }

    pub fn flatten(&self) -> Vec<Vertex> {
        self.runs
            .iter()
            .flat_map(|r| r.vertices.iter().copied())
            .collect()
    }
}

pub fn decompose(layering: &Layering, coloring: &RadioColoring) -> Result<Decomposition> {
    let report = check_coloring(coloring);
    if !report.valid {
        return Err(Error::InvalidColoring {
            violations: report.violations.len(),
        });
    }
    let seq = coloring.sequence()?;
    let order = seq.order();
    let pair_classes = order
        .windows(2)
        .map(|w| classify_gap(layering, coloring, w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;

    // Vertex index ranges [start, end] of maximal optimal runs.
    let mut spans: Vec<(usize, usize)> = Vec::new();
    for (i, class) in pair_classes.iter().enumerate() {
        if *class != PairClass::Optimal {
            continue;
        }
        match spans.last_mut() {
            Some((_, end)) if *end == i => *end = i + 1,
            _ => spans.push((i, i + 1)),
        }
    }

    let even = layering.parity() == Parity::Even;
    let mut runs = Vec::with_capacity(2 * spans.len() + 1);
    let mut loose_lengths = Vec::with_capacity(spans.len() + 1);
    let mut cursor = 0;
    for &(start, end) in &spans {
        loose_lengths.push(start - cursor);
        runs.push(Run {
            kind: RunKind::Loose,
            vertices: order[cursor..start].to_vec(),
            polarity: None,
        });
        let vertices = order[start..=end].to_vec();
        let polarity = if even {
            Some(run_polarity(&vertices, layering)?)
        } else {
            None
        };
        runs.push(Run {
            kind: RunKind::Optimal,
            vertices,
            polarity,
        });
        cursor = end + 1;
    }
    loose_lengths.push(order.len() - cursor);
    runs.push(Run {
        kind: RunKind::Loose,
        vertices: order[cursor..].to_vec(),
        polarity: None,
    });

    let t = spans.len();
    let ends = layering.layer_of(order[0]) + layering.layer_of(order[order.len() - 1]);
    let alpha2 = ends as i64 + loose_lengths.iter().sum::<usize>() as i64 + t as i64 - 1;
    Ok(Decomposition {
        runs,
        t,
        loose_lengths,
        pair_classes,
        alpha2,
    })
}

/// Compares the number of left vertices in an optimal run with the number
/// of right and central vertices together.
pub fn run_polarity(run: &[Vertex], layering: &Layering) -> Result<Polarity> {
    if layering.parity() != Parity::Even {
        return Err(Error::PolarityUndefined);
    }
    if run.len() < 2 {
        return Err(Error::SingletonRun);
    }
    for &v in run {
        layering.graph().check_vertex(v)?;
    }
    let left = run
        .iter()
        .filter(|&&v| layering.side_of(v) == Some(Side::Left))
        .count();
    let other = run.len() - left;
    Ok(match left.cmp(&other) {
        std::cmp::Ordering::Greater => Polarity::Leftist,
        std::cmp::Ordering::Equal => Polarity::Balanced,
        std::cmp::Ordering::Less => Polarity::Rightist,
    })
}

/// `alpha1 + alpha2(coloring)`, a lower bound on the coloring's span.
pub fn lower_bound_certificate(layering: &Layering, coloring: &RadioColoring) -> Result<i64> {
    let decomposition = decompose(layering, coloring)?;
    Ok(alpha1_from_layers(layering, coloring.k()) + decomposition.alpha2)
}
