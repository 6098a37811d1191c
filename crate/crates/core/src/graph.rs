//! The m-th power of a path on n+1 vertices.
//!
//! Vertices are integer positions `0..=n`; two vertices are adjacent when
//! their positions differ by at most `m`. The metric is closed-form, so no
//! adjacency structure is ever materialized.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct PathPowerGraph {
    n: usize,
    m: usize,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    m: usize,
}

impl TryFrom<RawGraph> for PathPowerGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        PathPowerGraph::new(raw.n, raw.m)
    }
}

impl PathPowerGraph {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::EmptyPath);
        }
        if m < 1 {
            return Err(Error::ZeroPower);
        }
        if m > n {
            return Err(Error::PowerExceedsLength { n, m });
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        0..=self.n
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v <= self.n
    }

    /// Graph distance `ceil(|u - v| / m)`.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<usize> {
        for x in [u, v] {
            if !self.contains(x) {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        Ok(self.dist(u, v))
    }

    /// Unchecked distance for callers that already hold valid positions.
    #[inline]
    pub(crate) fn dist(&self, u: Vertex, v: Vertex) -> usize {
        u.abs_diff(v).div_ceil(self.m)
    }

    pub fn diameter(&self) -> usize {
        self.n.div_ceil(self.m)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_errors() {
        assert_eq!(PathPowerGraph::new(4, 2).unwrap().vertices().count(), 5);
        assert_eq!(PathPowerGraph::new(5, 3).unwrap().vertex_count(), 6);
        assert_eq!(
            PathPowerGraph::new(4, 7),
            Err(Error::PowerExceedsLength { n: 4, m: 7 })
        );
        assert_eq!(PathPowerGraph::new(0, 1), Err(Error::EmptyPath));
        assert_eq!(PathPowerGraph::new(3, 0), Err(Error::ZeroPower));
    }

    #[test]
    fn distance_examples() {
        let g = PathPowerGraph::new(6, 2).unwrap();
        assert_eq!(g.distance(1, 4).unwrap(), 2);
        assert_eq!(g.distance(3, 3).unwrap(), 0);
        let g = PathPowerGraph::new(5, 3).unwrap();
        assert_eq!(g.distance(0, 5).unwrap(), 2);
        assert_eq!(
            g.distance(0, 6),
            Err(Error::VertexOutOfRange { vertex: 6, n: 5 })
        );
    }

    #[test]
    fn diameter_examples() {
        let d = |n, m| PathPowerGraph::new(n, m).unwrap().diameter();
        assert_eq!(d(4, 2), 2);
        assert_eq!(d(5, 2), 3);
        assert_eq!(d(5, 3), 2);
    }

    #[test]
    fn diameter_is_max_pairwise_distance() {
        for n in 1..=40 {
            for m in 1..=n {
                let g = PathPowerGraph::new(n, m).unwrap();
                let max = g
                    .vertices()
                    .flat_map(|u| g.vertices().map(move |v| (u, v)))
                    .map(|(u, v)| g.dist(u, v))
                    .max()
                    .unwrap();
                assert_eq!(g.diameter(), max, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn metric_axioms() {
        for n in 1..=20 {
            for m in 1..=n {
                let g = PathPowerGraph::new(n, m).unwrap();
                for u in g.vertices() {
                    assert_eq!(g.dist(u, u), 0);
                    for v in g.vertices() {
                        assert_eq!(g.dist(u, v), g.dist(v, u));
                        if u != v {
                            assert!(g.dist(u, v) > 0);
                        }
                        for w in g.vertices() {
                            assert!(g.dist(u, w) <= g.dist(u, v) + g.dist(v, w));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn deserialize_validates() {
        let g: PathPowerGraph = serde_json::from_str(r#"{"n":4,"m":2}"#).unwrap();
        assert_eq!(g.diameter(), 2);
        assert!(serde_json::from_str::<PathPowerGraph>(r#"{"n":4,"m":7}"#).is_err());
    }
}
