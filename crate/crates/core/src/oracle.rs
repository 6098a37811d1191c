//! Exact radio k-chromatic number by branch-and-bound over color orders.
//!
//! For `k > diam` every radio coloring is injective, so it is determined up
//! to span by the order of its colors, and for a fixed order the greedy
//! "as early as every earlier vertex allows" coloring has minimum span.
//! The search therefore enumerates vertex orders, prefix by prefix.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::coloring::{check_permutation, RadioColoring};
use crate::error::{Error, Result};
use crate::formula::epsilon;
use crate::graph::{PathPowerGraph, Vertex};
use crate::layering::Layering;

/// Colors along `order` under full-history greedy:
/// `c(v_i) = max(c(v_(i-1)) + 1, max_{j<i} c(v_j) + k + 1 - d(v_j, v_i))`.
pub fn greedy_colors_along(g: &PathPowerGraph, order: &[Vertex], k: u64) -> Vec<u64> {
    let mut along: Vec<u64> = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        let mut c = along.last().map_or(0, |&last| last + 1);
        for (j, &u) in order[..i].iter().enumerate() {
            let need = (along[j] + k + 1).saturating_sub(g.dist(u, v) as u64);
            c = c.max(need);
        }
        along.push(c);
    }
    along
}

/// The minimum-span coloring whose color order is `order`.
pub fn greedy_coloring_of_order(
    g: &PathPowerGraph,
    order: &[Vertex],
    k: u64,
) -> Result<RadioColoring> {
    check_permutation(g, order)?;
    let along = greedy_colors_along(g, order, k);
    let mut colors = vec![0; g.vertex_count()];
    for (&v, &c) in order.iter().zip(&along) {
        colors[v] = c;
    }
    RadioColoring::new(*g, k, colors)
}

pub fn greedy_span_of_order(g: &PathPowerGraph, order: &[Vertex], k: u64) -> Result<u64> {
    Ok(greedy_coloring_of_order(g, order, k)?.span())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PruneBound {
    /// Each remaining vertex adds at least 1.
    Unit,
    /// Layer gaps and cheapest incoming edges over the remaining vertices.
    #[default]
    Layered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
    /// Cap on search nodes; `None` searches to completion.
    pub node_budget: Option<u64>,
    pub parallel: bool,
    pub bound: PruneBound,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_vertices: 11,
            node_budget: None,
            parallel: false,
            bound: PruneBound::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Exact {
        value: u64,
        witness: RadioColoring,
        nodes: u64,
    },
    /// Budget ran out: the optimum lies in `lower_bound..=incumbent`.
    Inconclusive {
        lower_bound: u64,
        incumbent: u64,
        witness: RadioColoring,
        nodes: u64,
    },
}

impl OracleOutcome {
    pub fn exact_value(&self) -> Option<u64> {
        match self {
            OracleOutcome::Exact { value, .. } => Some(*value),
            OracleOutcome::Inconclusive { .. } => None,
        }
    }

    pub fn witness(&self) -> &RadioColoring {
        match self {
            OracleOutcome::Exact { witness, .. } | OracleOutcome::Inconclusive { witness, .. } => {
                witness
            }
        }
    }
}

struct Problem {
    size: usize,
    /// `k + 1 - d(u, v)`, row-major.
    weight: Vec<u64>,
    layer: Vec<u64>,
    /// `k + eps`.
    layer_base: u64,
    bound: PruneBound,
}

impl Problem {
    fn new(g: &PathPowerGraph, k: u64, bound: PruneBound) -> Self {
        let size = g.vertex_count();
        let layering = Layering::new(*g);
        let weight = (0..size * size)
            .map(|i| k + 1 - g.dist(i / size, i % size) as u64)
            .collect();
        let layer = g.vertices().map(|v| layering.layer_of(v) as u64).collect();
        Self {
            size,
            weight,
            layer,
            layer_base: (k as i64 + epsilon(layering.parity())) as u64,
            bound,
        }
    }

    #[inline]
    fn w(&self, u: usize, v: usize) -> u64 {
        self.weight[u * self.size + v]
    }

    /// Lower bound on the span still to be added after `last` when the
    /// vertices in `remaining` are placed.
    fn completion_bound(&self, last: usize, remaining: u64) -> u64 {
        let count = remaining.count_ones() as u64;
        if count == 0 {
            return 0;
        }
        match self.bound {
            PruneBound::Unit => count,
            PruneBound::Layered => {
                let mut layer_sum = 0;
                let mut min_layer = u64::MAX;
                let mut incoming = 0;
                for x in bits(remaining) {
                    layer_sum += self.layer[x];
                    min_layer = min_layer.min(self.layer[x]);
                    let mut cheapest = self.w(last, x);
                    for y in bits(remaining & !(1 << x)) {
                        cheapest = cheapest.min(self.w(y, x));
                    }
                    incoming += cheapest;
                }
                // Path last -> p_1 -> ... -> p_r, each gap >= k + eps - f - f'.
                let layered = (count * self.layer_base + min_layer)
                    .saturating_sub(self.layer[last] + 2 * layer_sum);
                layered.max(incoming).max(count)
            }
        }
    }
}

fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let b = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(b)
        }
    })
}

struct Shared<'a> {
    problem: &'a Problem,
    global_best: AtomicU64,
    nodes: AtomicU64,
    budget: u64,
    exhausted: AtomicBool,
}

struct RootSearch<'a> {
    shared: &'a Shared<'a>,
    order: Vec<usize>,
    colors: Vec<u64>,
    best: u64,
    best_order: Option<Vec<usize>>,
}

impl RootSearch<'_> {
    fn descend(&mut self, remaining: u64) {
        let shared = self.shared;
        if shared.exhausted.load(Ordering::Relaxed) {
            return;
        }
        if shared.nodes.fetch_add(1, Ordering::Relaxed) >= shared.budget {
            shared.exhausted.store(true, Ordering::Relaxed);
            return;
        }
        let last_color = *self.colors.last().expect("root placed");
        if remaining == 0 {
            if last_color < self.best {
                self.best = last_color;
                self.best_order = Some(self.order.clone());
                shared.global_best.fetch_min(last_color, Ordering::Relaxed);
            }
            return;
        }
        let problem = shared.problem;
        for v in bits(remaining) {
            let mut c = last_color + 1;
            for (&u, &cu) in self.order.iter().zip(&self.colors) {
                c = c.max(cu + problem.w(u, v));
            }
            let rest = remaining & !(1 << v);
            let bound = c + problem.completion_bound(v, rest);
            // Strict improvement within this root; ties with other roots
            // are kept so each root reports its own first optimum.
            if bound >= self.best || bound > shared.global_best.load(Ordering::Relaxed) {
                continue;
            }
            self.order.push(v);
            self.colors.push(c);
            self.descend(rest);
            self.order.pop();
            self.colors.pop();
        }
    }
}

/// Exact `rc_k` of `g` for `k > diam`.
///
/// Ties are broken lexicographically by vertex order, with the first vertex
/// restricted to the left half by reflection symmetry; the witness is the
/// same whether or not the roots are searched in parallel.
pub fn rc_exact(g: &PathPowerGraph, k: u64, config: &OracleConfig) -> Result<OracleOutcome> {
    let size = g.vertex_count();
    let limit = config.max_vertices.min(64);
    if size > limit {
        return Err(Error::OracleTooLarge {
            vertices: size,
            limit,
        });
    }
    if k <= g.diameter() as u64 {
        return Err(Error::OracleNeedsDistinctColors {
            k,
            diam: g.diameter(),
        });
    }

    let problem = Problem::new(g, k, config.bound);
    let identity: Vec<Vertex> = g.vertices().collect();
    let seed = *greedy_colors_along(g, &identity, k).last().expect("n >= 1");
    let full: u64 = if size == 64 {
        u64::MAX
    } else {
        (1 << size) - 1
    };
    let shared = Shared {
        problem: &problem,
        global_best: AtomicU64::new(seed),
        nodes: AtomicU64::new(0),
        budget: config.node_budget.unwrap_or(u64::MAX),
        exhausted: AtomicBool::new(false),
    };

    let roots: Vec<usize> = (0..size).filter(|&r| 2 * r <= g.n()).collect();
    let run_root = |root: usize| {
        let mut search = RootSearch {
            shared: &shared,
            order: vec![root],
            colors: vec![0],
            best: seed + 1,
            best_order: None,
        };
        search.descend(full & !(1 << root));
        search.best_order.map(|order| (search.best, order))
    };
    let found: Vec<Option<(u64, Vec<usize>)>> = if config.parallel {
        roots.par_iter().map(|&r| run_root(r)).collect()
    } else {
        roots.iter().map(|&r| run_root(r)).collect()
    };

    let (value, order) = found
        .into_iter()
        .flatten()
        .min_by_key(|(value, _)| *value)
        .unwrap_or((seed, identity));
    let witness = greedy_coloring_of_order(g, &order, k)?;
    debug_assert_eq!(witness.span(), value);
    let nodes = shared.nodes.load(Ordering::Relaxed);

    if shared.exhausted.load(Ordering::Relaxed) {
        let lower_bound = roots
            .iter()
            .map(|&r| problem.completion_bound(r, full & !(1 << r)))
            .min()
            .unwrap_or(0);
        return Ok(OracleOutcome::Inconclusive {
            lower_bound: lower_bound.min(value),
            incumbent: value,
            witness,
            nodes,
        });
    }
    Ok(OracleOutcome::Exact {
        value,
        witness,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::check_coloring;

    fn g(n: usize, m: usize) -> PathPowerGraph {
        PathPowerGraph::new(n, m).unwrap()
    }

    #[test]
    fn greedy_span_examples() {
        assert_eq!(
            greedy_span_of_order(&g(4, 2), &[3, 0, 4, 1, 2], 3).unwrap(),
            9
        );
        assert_eq!(
            greedy_span_of_order(&g(4, 2), &[0, 1, 2, 3, 4], 3).unwrap(),
            12
        );
        for k in 1..6 {
            assert_eq!(greedy_span_of_order(&g(1, 1), &[1, 0], k).unwrap(), k);
        }
        assert!(greedy_span_of_order(&g(4, 2), &[0, 1, 2], 3).is_err());
    }

    #[test]
    fn exact_examples() {
        let cfg = OracleConfig::default();
        for (n, m, k, want) in [(4, 2, 3, 9), (5, 3, 3, 12), (6, 2, 5, 22)] {
            let out = rc_exact(&g(n, m), k, &cfg).unwrap();
            assert_eq!(out.exact_value(), Some(want), "n={n} m={m} k={k}");
            assert!(check_coloring(out.witness()).valid);
            assert_eq!(out.witness().span(), want);
        }
    }

    #[test]
    fn bounds_and_parallelism_agree() {
        for n in 2..=7 {
            for m in 1..=n.min(3) {
                let graph = g(n, m);
                let k = graph.diameter() as u64 + 1;
                let base = rc_exact(&graph, k, &OracleConfig::default()).unwrap();
                let unit = OracleConfig {
                    bound: PruneBound::Unit,
                    ..OracleConfig::default()
                };
                let par = OracleConfig {
                    parallel: true,
                    ..OracleConfig::default()
                };
                for cfg in [unit, par] {
                    let other = rc_exact(&graph, k, &cfg).unwrap();
                    assert_eq!(other.exact_value(), base.exact_value());
                    assert_eq!(other.witness(), base.witness());
                }
            }
        }
    }

    #[test]
    fn limits() {
        assert_eq!(
            rc_exact(&g(11, 3), 6, &OracleConfig::default()),
            Err(Error::OracleTooLarge {
                vertices: 12,
                limit: 11
            })
        );
        assert_eq!(
            rc_exact(&g(4, 2), 2, &OracleConfig::default()),
            Err(Error::OracleNeedsDistinctColors { k: 2, diam: 2 })
        );
    }

    #[test]
    fn budget_exhaustion_is_explicit() {
        let cfg = OracleConfig {
            node_budget: Some(5),
            ..OracleConfig::default()
        };
        match rc_exact(&g(8, 2), 6, &cfg).unwrap() {
            OracleOutcome::Inconclusive {
                lower_bound,
                incumbent,
                witness,
                ..
            } => {
                assert!(lower_bound <= incumbent);
                assert_eq!(witness.span(), incumbent);
                assert!(check_coloring(&witness).valid);
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }
}
