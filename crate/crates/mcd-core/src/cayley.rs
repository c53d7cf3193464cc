//! Cayley, Bi-Cayley, and mixed Cayley digraph construction.
//!
//! Arcs follow the left-multiplication convention: g → s·g. Mixed
//! Cayley vertices (g, i) are encoded as the flat index g + i·|G|.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::group::{ElementSet, Group};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedCayleyParams {
    pub group: Group,
    pub s0: ElementSet,
    pub s1: ElementSet,
    pub t0: ElementSet,
    pub t1: ElementSet,
}

impl MixedCayleyParams {
    pub fn new(
        group: Group,
        s0: ElementSet,
        s1: ElementSet,
        t0: ElementSet,
        t1: ElementSet,
    ) -> Result<Self> {
        if s0.contains(0) || s1.contains(0) {
            return Err(Error::IdentityInConnectionSet);
        }
        for set in [&s0, &s1, &t0, &t1] {
            if let Some(&m) = set.members.iter().find(|&&m| m >= group.order) {
                return Err(Error::ElementOutOfRange {
                    index: m,
                    order: group.order,
                });
            }
        }
        Ok(MixedCayleyParams {
            group,
            s0,
            s1,
            t0,
            t1,
        })
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.group.order
    }

    /// (g, layer) → flat vertex index.
    pub fn vertex_index(&self, g: usize, layer: usize) -> usize {
        g + layer * self.group.order
    }

    /// Flat vertex index → (g, layer).
    pub fn layered(&self, v: usize) -> (usize, usize) {
        (v % self.group.order, v / self.group.order)
    }

    pub fn vertex_labels(&self) -> Vec<String> {
        (0..self.vertex_count())
            .map(|v| {
                let (g, i) = self.layered(v);
                format!("{g}.{i}")
            })
            .collect()
    }
}

/// Cay(G, S): arcs g → s·g for every g ∈ G, s ∈ S.
pub fn build_cayley(g: &Group, s: &ElementSet) -> Result<Digraph> {
    if s.contains(0) {
        return Err(Error::IdentityInConnectionSet);
    }
    let arcs = (0..g.order)
        .flat_map(|x| s.members.iter().map(move |&e| (x, e)))
        .map(|(x, e)| (x, g.mul(e, x)));
    Digraph::from_arcs(g.order, arcs)
}

/// BD(G, T₀, T₁): arcs (g,0) → (t₀·g,1) and (t₁·g,1) → (g,0).
pub fn build_bicayley(g: &Group, t0: &ElementSet, t1: &ElementSet) -> Result<Digraph> {
    let n = g.order;
    let arcs = (0..n)
        .flat_map(|x| t0.members.iter().map(move |&t| (x, n + g.mul(t, x))))
        .chain((0..n).flat_map(|x| t1.members.iter().map(move |&t| (n + g.mul(t, x), x))));
    Digraph::from_arcs(2 * n, arcs)
}

/// MD(G, S₀, S₁, T₀, T₁): the union of the two layer Cayley digraphs
/// and the Bi-Cayley digraph.
pub fn build_mixed(p: &MixedCayleyParams) -> Result<Digraph> {
    let g = &p.group;
    let n = g.order;
    let layer0 = (0..n)
        .flat_map(|x| p.s0.members.iter().map(move |&s| (x, s)))
        .map(|(x, s)| (x, g.mul(s, x)));
    let layer1 = (0..n)
        .flat_map(|x| p.s1.members.iter().map(move |&s| (x, s)))
        .map(|(x, s)| (n + x, n + g.mul(s, x)));
    let down = (0..n)
        .flat_map(|x| p.t0.members.iter().map(move |&t| (x, t)))
        .map(|(x, t)| (x, n + g.mul(t, x)));
    let up = (0..n)
        .flat_map(|x| p.t1.members.iter().map(move |&t| (x, t)))
        .map(|(x, t)| (n + g.mul(t, x), x));
    let mut md = Digraph::from_arcs(2 * n, layer0.chain(layer1).chain(down).chain(up))?;
    md.vertex_labels = Some(p.vertex_labels());
    Ok(md)
}

/// The right translation R(a): (g, i) ↦ (g·a, i), as a vertex
/// permutation over the flat encoding.
pub fn right_translation(p: &MixedCayleyParams, a: usize) -> Vec<usize> {
    let n = p.group.order;
    (0..2 * n)
        .map(|v| {
            let (g, i) = p.layered(v);
            p.vertex_index(p.group.mul(g, a), i)
        })
        .collect()
}

/// Applies a vertex permutation to the arc set, returning it sorted.
pub fn permute_arcs(x: &Digraph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut arcs: Vec<(usize, usize)> = x
        .arcs()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    arcs.sort_unstable();
    arcs
}
