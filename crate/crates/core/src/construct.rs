//! The optimal color order and its greedy coloring.
//!
//! Side vertices are ordered column by column (rank `j` first); inside a
//! column the layer index alternates direction, starting upward in `≺1` at
//! rank 1 and upward in `≺2` at rank `m`. An alternating chain interleaves
//! one side ascending in `≺1` with the other side descending in `≺2`.

use crate::coloring::{ColorSequence, Provenance, RadioColoring};
use crate::error::{Error, Result};
use crate::formula::{require_hypothesis, CaseTag};
use crate::graph::{PathPowerGraph, Vertex};
use crate::layering::{Layering, Parity, SideVertex};

fn signed(layer: usize, exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        layer as i64
    } else {
        -(layer as i64)
    }
}

fn prec1_key(v: &SideVertex) -> (usize, i64) {
    (v.rank, signed(v.layer, v.rank + 1))
}

fn prec2_key(v: &SideVertex, m: usize) -> (usize, i64) {
    (v.rank, signed(v.layer, m + v.rank))
}

fn same_side(a: &SideVertex, b: &SideVertex) -> Result<()> {
    if a.side == b.side {
        Ok(())
    } else {
        Err(Error::MixedSides)
    }
}

/// `a ≺1 b`: lower rank first; equal ranks compare `(-1)^(j-1) i`.
pub fn prec1_less(a: &SideVertex, b: &SideVertex) -> Result<bool> {
    same_side(a, b)?;
    Ok(prec1_key(a) < prec1_key(b))
}

/// `a ≺2 b`: lower rank first; equal ranks compare `(-1)^(m-j) i`.
pub fn prec2_less(a: &SideVertex, b: &SideVertex, m: usize) -> Result<bool> {
    same_side(a, b)?;
    Ok(prec2_key(a, m) < prec2_key(b, m))
}

fn uniform_side(vs: &[SideVertex]) -> Result<()> {
    match vs.split_first() {
        Some((first, rest)) => rest.iter().try_for_each(|v| same_side(first, v)),
        None => Ok(()),
    }
}

/// Interleaves `ascending` sorted by `≺1` with `descending` sorted by `≺2`
/// in reverse: `(a_1, b_1, a_2, b_2, ...)`.
pub fn alternating_chain(
    mut ascending: Vec<SideVertex>,
    mut descending: Vec<SideVertex>,
    m: usize,
) -> Result<Vec<SideVertex>> {
    if ascending.len() != descending.len() {
        return Err(Error::UnequalSides {
            ascending: ascending.len(),
            descending: descending.len(),
        });
    }
    uniform_side(&ascending)?;
    uniform_side(&descending)?;
    ascending.sort_by_key(prec1_key);
    descending.sort_by_key(|v| std::cmp::Reverse(prec2_key(v, m)));
    Ok(ascending
        .into_iter()
        .zip(descending)
        .flat_map(|(a, b)| [a, b])
        .collect())
}

fn positions(layering: &Layering, chain: &[SideVertex]) -> Vec<Vertex> {
    chain
        .iter()
        .map(|&sv| {
            layering
                .position(sv)
                .expect("chain names come from the layering")
        })
        .collect()
}

/// Right vertices ascending in `≺1`, interleaved with left vertices
/// descending in `≺2`.
pub fn special_chain(layering: &Layering) -> Result<Vec<Vertex>> {
    let m = layering.graph().m();
    let chain = alternating_chain(layering.right_vertices(), layering.left_vertices(), m)?;
    Ok(positions(layering, &chain))
}

/// Left vertices ascending in `≺1`, interleaved with right vertices
/// descending in `≺2`.
pub fn reverse_chain(layering: &Layering) -> Result<Vec<Vertex>> {
    let m = layering.graph().m();
    let chain = alternating_chain(layering.left_vertices(), layering.right_vertices(), m)?;
    Ok(positions(layering, &chain))
}

/// The color order of the optimal coloring for each of the four cases.
///
/// In the odd-diameter cases the central block is placed after the whole
/// reverse chain, so that both ends of the sequence are central (or the
/// chain starts next to the centre) and every consecutive pair is optimal.
pub fn case_sequence(layering: &Layering) -> ColorSequence {
    let g = *layering.graph();
    let m = g.m();
    let case = CaseTag::of(&g);
    let s = layering.s_mod();
    let central = |j: usize| layering.central(j).expect("central index in range");

    let order: Vec<Vertex> = match (case.parity, case.divides) {
        (Parity::Even, true) => {
            let mut order = special_chain(layering).expect("sides balance when m | n");
            order.push(central(0));
            order
        }
        (Parity::Odd, true) => {
            let mut order = vec![central(m)];
            order.extend(reverse_chain(layering).expect("sides balance when m | n"));
            order.extend((0..m).map(central));
            order
        }
        (Parity::Odd, false) => {
            // Centrals c_(s+1)..c_m stand in for the missing right vertices.
            let mut rights = layering.right_vertices();
            rights.extend((s + 1..=m).map(|j| SideVertex::right(0, j)));
            let chain = alternating_chain(layering.left_vertices(), rights, m)
                .expect("renamed centrals balance the sides");
            let mut order = positions(layering, &chain);
            order.extend((0..=s).map(central));
            order
        }
        (Parity::Even, false) => {
            // l_11..l_1(m-s) are held back and appended after c_0.
            let held = m - s;
            let lefts: Vec<SideVertex> = layering
                .left_vertices()
                .into_iter()
                .filter(|v| !(v.layer == 1 && v.rank <= held))
                .collect();
            let chain = alternating_chain(layering.right_vertices(), lefts, m)
                .expect("held-back lefts balance the sides");
            let mut order = positions(layering, &chain);
            order.push(central(0));
            order.extend(positions(
                layering,
                &(1..=held)
                    .map(|j| SideVertex::left(1, j))
                    .collect::<Vec<_>>(),
            ));
            order
        }
    };
    ColorSequence::new(&g, order, Provenance::Constructed).expect("case sequence is a permutation")
}

/// `psi(v_0) = 0`, `psi(v_(i+1)) = psi(v_i) + k + 1 - d(v_i, v_(i+1))`.
///
/// Only consecutive pairs are looked at; validity of the result is a
/// property of the order, not of this function.
pub fn greedy_color(g: &PathPowerGraph, seq: &ColorSequence, k: u64) -> Result<RadioColoring> {
    let order = seq.order();
    let mut colors = vec![0u64; g.vertex_count()];
    let mut current = 0u64;
    for w in order.windows(2) {
        // k + 1 - d can only underflow when k < diam - 1; clamp to a
        // strictly increasing sequence there.
        let step = (k + 1).saturating_sub(g.dist(w[0], w[1]) as u64).max(1);
        current += step;
        colors[w[1]] = current;
    }
    RadioColoring::new(*g, k, colors)
}

pub fn construct_optimal(g: &PathPowerGraph, k: u64) -> Result<RadioColoring> {
    require_hypothesis(g, k)?;
    construct_unchecked(g, k)
}

/// Same construction without the hypothesis check; the result carries no
/// optimality (or even validity) guarantee.
pub fn construct_unchecked(g: &PathPowerGraph, k: u64) -> Result<RadioColoring> {
    let layering = Layering::new(*g);
    greedy_color(g, &case_sequence(&layering), k)
}
