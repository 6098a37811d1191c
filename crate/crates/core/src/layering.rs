//! Layers around the centre of a path power and the two-sided vertex names.
//!
//! `L_0` is the single vertex at position `qm` for even diameter, or the
//! clique `qm..=qm+m` for odd diameter. `L_i` holds the vertices at distance
//! `i` from `L_0`. Within a layer, left vertices are ranked `l_i1..l_im` by
//! increasing gap to `c_0` and right vertices `r_i1..` likewise. Names are a
//! view over positions: nothing here stores the graph twice.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{PathPowerGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: usize) -> Self {
        if value.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A left or right vertex addressed as `(layer, rank)`, i.e. `l_ij` / `r_ij`.
///
/// Layer 0 on the right is used for central vertices temporarily renamed
/// `r_0j = c_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SideVertex {
    pub side: Side,
    pub layer: usize,
    pub rank: usize,
}

impl SideVertex {
    pub fn left(layer: usize, rank: usize) -> Self {
        Self {
            side: Side::Left,
            layer,
            rank,
        }
    }

    pub fn right(layer: usize, rank: usize) -> Self {
        Self {
            side: Side::Right,
            layer,
            rank,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexName {
    Central(usize),
    Side(SideVertex),
}

impl fmt::Display for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexName::Central(j) => write!(f, "c{j}"),
            VertexName::Side(sv) => {
                let tag = match sv.side {
                    Side::Left => 'l',
                    Side::Right => 'r',
                };
                if sv.layer < 10 && sv.rank < 10 {
                    write!(f, "{tag}{}{}", sv.layer, sv.rank)
                } else {
                    write!(f, "{tag}{}_{}", sv.layer, sv.rank)
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    graph: PathPowerGraph,
    diam: usize,
    q: usize,
    parity: Parity,
    layer_of: Vec<usize>,
    layers: Vec<Vec<Vertex>>,
    s_layer: usize,
    s_mod: usize,
}

impl Layering {
    pub fn new(graph: PathPowerGraph) -> Self {
        let (n, m) = (graph.n(), graph.m());
        let diam = graph.diameter();
        let q = diam / 2;
        let parity = Parity::of(diam);
        let c0 = q * m;
        let last_central = match parity {
            Parity::Even => c0,
            Parity::Odd => c0 + m,
        };
        debug_assert!(last_central <= n);

        let layer_of: Vec<usize> = (0..=n)
            .map(|v| {
                if v < c0 {
                    (c0 - v).div_ceil(m)
                } else if v > last_central {
                    (v - last_central).div_ceil(m)
                } else {
                    0
                }
            })
            .collect();
        let mut layers = vec![Vec::new(); q + 1];
        for (v, &i) in layer_of.iter().enumerate() {
            layers[i].push(v);
        }

        let central_count = last_central - c0 + 1;
        let s_layer = (n + 1 + m) - 2 * q * m - central_count;
        Self {
            graph,
            diam,
            q,
            parity,
            layer_of,
            layers,
            s_layer,
            s_mod: n % m,
        }
    }

    pub fn graph(&self) -> &PathPowerGraph {
        &self.graph
    }

    pub fn diameter(&self) -> usize {
        self.diam
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Size of the right half of `L_q`: `(n+1) - (2q-1)m - |L_0|`.
    pub fn s_layer(&self) -> usize {
        self.s_layer
    }

    /// `n mod m`.
    pub fn s_mod(&self) -> usize {
        self.s_mod
    }

    pub fn layer_of(&self, v: Vertex) -> usize {
        self.layer_of[v]
    }

    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    pub fn centre(&self) -> Vertex {
        self.q * self.graph.m()
    }

    pub fn centrals(&self) -> &[Vertex] {
        &self.layers[0]
    }

    pub fn central(&self, j: usize) -> Option<Vertex> {
        (j < self.layers[0].len()).then(|| self.centre() + j)
    }

    /// Number of right vertices in layer `i` (`i >= 1`).
    fn right_width(&self, i: usize) -> usize {
        if i == self.q {
            self.s_layer
        } else {
            self.graph.m()
        }
    }

    /// Position of a named side vertex, if the name exists.
    ///
    /// Right names with layer 0 address central vertices `c_j` (`j >= 1`).
    pub fn position(&self, sv: SideVertex) -> Option<Vertex> {
        let m = self.graph.m();
        if sv.rank < 1 || sv.rank > m || sv.layer > self.q {
            return None;
        }
        match sv.side {
            Side::Left => (sv.layer >= 1).then(|| self.centre() - (sv.layer - 1) * m - sv.rank),
            Side::Right => {
                if sv.layer == 0 {
                    return match self.parity {
                        Parity::Odd => self.central(sv.rank),
                        Parity::Even => None,
                    };
                }
                if sv.rank > self.right_width(sv.layer) {
                    return None;
                }
                let base = self.centrals().last().copied().unwrap_or(self.centre());
                Some(base + (sv.layer - 1) * m + sv.rank)
            }
        }
    }

    pub fn name_of(&self, v: Vertex) -> VertexName {
        let m = self.graph.m();
        let c0 = self.centre();
        let last = *self.centrals().last().expect("L_0 is never empty");
        if v < c0 {
            let gap = c0 - v;
            VertexName::Side(SideVertex::left(gap.div_ceil(m), (gap - 1) % m + 1))
        } else if v > last {
            let gap = v - last;
            VertexName::Side(SideVertex::right(gap.div_ceil(m), (gap - 1) % m + 1))
        } else {
            VertexName::Central(v - c0)
        }
    }

    pub fn side_of(&self, v: Vertex) -> Option<Side> {
        match self.name_of(v) {
            VertexName::Central(_) => None,
            VertexName::Side(sv) => Some(sv.side),
        }
    }

    pub fn left_vertices(&self) -> Vec<SideVertex> {
        let m = self.graph.m();
        (1..=self.q)
            .flat_map(|i| (1..=m).map(move |j| SideVertex::left(i, j)))
            .collect()
    }

    pub fn right_vertices(&self) -> Vec<SideVertex> {
        (1..=self.q)
            .flat_map(|i| (1..=self.right_width(i)).map(move |j| SideVertex::right(i, j)))
            .collect()
    }

    pub fn to_json(&self) -> LayeringJson {
        let names = self
            .graph
            .vertices()
            .map(|v| (self.name_of(v).to_string(), v))
            .collect();
        LayeringJson {
            n: self.graph.n(),
            m: self.graph.m(),
            q: self.q,
            diam: self.diam,
            layers: self.layers.clone(),
            names,
            s_layer: self.s_layer,
            s_mod: self.s_mod,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LayeringJson {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub diam: usize,
    pub layers: Vec<Vec<Vertex>>,
    pub names: BTreeMap<String, Vertex>,
    pub s_layer: usize,
    pub s_mod: usize,
}
