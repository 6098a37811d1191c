use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PathPowerGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Constructed,
    FromColoring,
}

/// Vertices listed in increasing color order (`v_0, v_1, ..., v_n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorSequence {
    order: Vec<Vertex>,
    provenance: Provenance,
}

impl ColorSequence {
    pub fn new(g: &PathPowerGraph, order: Vec<Vertex>, provenance: Provenance) -> Result<Self> {
        check_permutation(g, &order)?;
        Ok(Self { order, provenance })
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn into_order(self) -> Vec<Vertex> {
        self.order
    }
}

pub(crate) fn check_permutation(g: &PathPowerGraph, order: &[Vertex]) -> Result<()> {
    if order.len() != g.vertex_count() {
        return Err(Error::WrongVertexCount {
            expected: g.vertex_count(),
            found: order.len(),
        });
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in order {
        if v > g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation { n: g.n() });
        }
    }
    Ok(())
}

/// A color per vertex position, together with the instance and `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadioColoring {
    graph: PathPowerGraph,
    k: u64,
    colors: Vec<u64>,
}

impl RadioColoring {
    pub fn new(graph: PathPowerGraph, k: u64, colors: Vec<u64>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if colors.len() != graph.vertex_count() {
            return Err(Error::WrongVertexCount {
                expected: graph.vertex_count(),
                found: colors.len(),
            });
        }
        Ok(Self { graph, k, colors })
    }

    pub fn graph(&self) -> &PathPowerGraph {
        &self.graph
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> u64 {
        self.colors[v]
    }

    pub fn span(&self) -> u64 {
        let max = self.colors.iter().max().copied().unwrap_or(0);
        let min = self.colors.iter().min().copied().unwrap_or(0);
        max - min
    }

    /// Vertices sorted by color; ties are an error.
    pub fn sequence(&self) -> Result<ColorSequence> {
        let mut order: Vec<Vertex> = self.graph.vertices().collect();
        order.sort_by_key(|&v| (self.colors[v], v));
        for w in order.windows(2) {
            if self.colors[w[0]] == self.colors[w[1]] {
                return Err(Error::ColorTie {
                    u: w[0],
                    v: w[1],
                    color: self.colors[w[0]],
                });
            }
        }
        Ok(ColorSequence {
            order,
            provenance: Provenance::FromColoring,
        })
    }

    pub fn to_file(&self) -> Result<ColoringFile> {
        Ok(ColoringFile {
            n: self.graph.n(),
            m: self.graph.m(),
            k: self.k,
            colors: self.colors.clone(),
            sequence: Some(self.sequence()?.into_order()),
            span: Some(self.span()),
        })
    }
}

/// On-disk coloring format: `{n, m, k, colors, sequence, span}` with colors
/// indexed by position. `sequence` and `span` are derived and optional on
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    pub n: usize,
    pub m: usize,
    pub k: u64,
    pub colors: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<u64>,
}

impl ColoringFile {
    pub fn into_coloring(self) -> Result<RadioColoring> {
        let graph = PathPowerGraph::new(self.n, self.m)?;
        RadioColoring::new(graph, self.k, self.colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_sorts_by_color() {
        let g = PathPowerGraph::new(4, 2).unwrap();
        let c = RadioColoring::new(g, 3, vec![2, 6, 9, 0, 4]).unwrap();
        assert_eq!(c.sequence().unwrap().order(), &[3, 0, 4, 1, 2]);
        assert_eq!(c.span(), 9);
    }

    #[test]
    fn sequence_rejects_ties() {
        let g = PathPowerGraph::new(4, 2).unwrap();
        let c = RadioColoring::new(g, 3, vec![2, 6, 2, 0, 4]).unwrap();
        assert_eq!(
            c.sequence(),
            Err(Error::ColorTie {
                u: 0,
                v: 2,
                color: 2
            })
        );
    }

    #[test]
    fn two_vertex_sequence() {
        let g = PathPowerGraph::new(1, 1).unwrap();
        let c = RadioColoring::new(g, 3, vec![3, 0]).unwrap();
        assert_eq!(c.sequence().unwrap().order(), &[1, 0]);
    }

    #[test]
    fn wrong_length_rejected() {
        let g = PathPowerGraph::new(4, 2).unwrap();
        assert_eq!(
            RadioColoring::new(g, 3, vec![0, 1]),
            Err(Error::WrongVertexCount {
                expected: 5,
                found: 2
            })
        );
        assert!(ColorSequence::new(&g, vec![0, 1, 2, 3, 3], Provenance::Constructed).is_err());
    }

    #[test]
    fn file_round_trip() {
        let g = PathPowerGraph::new(4, 2).unwrap();
        let c = RadioColoring::new(g, 3, vec![2, 6, 9, 0, 4]).unwrap();
        let text = serde_json::to_string(&c.to_file().unwrap()).unwrap();
        assert_eq!(
            text,
            r#"{"n":4,"m":2,"k":3,"colors":[2,6,9,0,4],"sequence":[3,0,4,1,2],"span":9}"#
        );
        let back: ColoringFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_coloring().unwrap(), c);
    }
}
