//! Directed-graph substrate: adjacency, degrees, strong connectivity,
//! arc boundaries, induced subdigraphs, reverse.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    pub vertex_count: usize,
    pub out_adj: Vec<Vec<usize>>,
    pub in_adj: Vec<Vec<usize>>,
    pub vertex_labels: Option<Vec<String>>,
}

/// Canonical (sorted, duplicate-free) vertex subset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet {
    pub members: Vec<usize>,
    pub universe: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSummary {
    pub delta_plus: usize,
    pub delta_minus: usize,
    pub delta: usize,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>, universe: usize) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&m| m >= universe) {
            return Err(Error::InvalidFragment);
        }
        Ok(VertexSet { members, universe })
    }

    pub fn from_mask(mask: u64, universe: usize) -> Self {
        VertexSet {
            members: (0..universe).filter(|v| mask >> v & 1 == 1).collect(),
            universe,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            members: (0..self.universe).filter(|&v| !self.contains(v)).collect(),
            universe: self.universe,
        }
    }
}

impl Digraph {
    /// Builds a digraph from an arc list. Self-loops and parallel arcs
    /// are rejected.
    pub fn from_arcs(
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut out_adj = vec![Vec::new(); vertex_count];
        let mut in_adj = vec![Vec::new(); vertex_count];
        let mut seen = std::collections::HashSet::new();
        for (u, v) in arcs {
            if u == v || u >= vertex_count || v >= vertex_count || !seen.insert((u, v)) {
                return Err(Error::BadArc(u, v));
            }
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for adj in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            adj.sort_unstable();
        }
        Ok(Digraph {
            vertex_count,
            out_adj,
            in_adj,
            vertex_labels: None,
        })
    }

    /// All arcs sorted by (tail, head).
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count)
            .flat_map(|u| self.out_adj[u].iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    pub fn degrees(&self) -> Result<(DegreeSummary, Vec<(usize, usize)>)> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyDigraph);
        }
        let per_vertex: Vec<(usize, usize)> = (0..self.vertex_count)
            .map(|v| (self.out_adj[v].len(), self.in_adj[v].len()))
            .collect();
        let delta_plus = per_vertex.iter().map(|d| d.0).min().unwrap();
        let delta_minus = per_vertex.iter().map(|d| d.1).min().unwrap();
        Ok((
            DegreeSummary {
                delta_plus,
                delta_minus,
                delta: delta_plus.min(delta_minus),
            },
            per_vertex,
        ))
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        self.reaches_all(&self.out_adj) && self.reaches_all(&self.in_adj)
    }

    fn reaches_all(&self, adj: &[Vec<usize>]) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.vertex_count
    }

    /// ω⁺(A) or ω⁻(A), sorted by (tail, head).
    pub fn arc_boundary(&self, a: &VertexSet, sign: Sign) -> Result<Vec<(usize, usize)>> {
        if a.is_empty() || a.len() == self.vertex_count {
            return Err(Error::InvalidFragment);
        }
        let mut in_a = vec![false; self.vertex_count];
        for &v in &a.members {
            in_a[v] = true;
        }
        let mut out = Vec::new();
        match sign {
            Sign::Positive => {
                for &u in &a.members {
                    for &v in &self.out_adj[u] {
                        if !in_a[v] {
                            out.push((u, v));
                        }
                    }
                }
            }
            Sign::Negative => {
                for &v in &a.members {
                    for &u in &self.in_adj[v] {
                        if !in_a[u] {
                            out.push((u, v));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Subdigraph induced by `a`, reindexed. The returned map sends new
    /// vertex indices back to indices in `self`.
    pub fn induced_subdigraph(&self, a: &VertexSet) -> Result<(Digraph, Vec<usize>)> {
        if a.is_empty() {
            return Err(Error::InvalidFragment);
        }
        let mut new_index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in a.members.iter().enumerate() {
            new_index[v] = i;
        }
        let arcs: Vec<(usize, usize)> = a
            .members
            .iter()
            .flat_map(|&u| {
                self.out_adj[u]
                    .iter()
                    .filter(|&&v| new_index[v] != usize::MAX)
                    .map(|&v| (new_index[u], new_index[v]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut sub = Digraph::from_arcs(a.len(), arcs)?;
        if let Some(labels) = &self.vertex_labels {
            sub.vertex_labels = Some(a.members.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((sub, a.members.clone()))
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            vertex_count: self.vertex_count,
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            vertex_labels: self.vertex_labels.clone(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.out_adj == self.in_adj
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Per-vertex out-neighbor bitmasks, for subset scans. Only valid
    /// for vertex_count ≤ 64.
    pub fn out_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count <= 64);
        self.out_adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }

    pub fn in_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count <= 64);
        self.in_adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.vertex_labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Graphviz DOT rendering, byte-deterministic.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for v in 0..self.vertex_count {
            s.push_str(&format!("  \"{}\";\n", self.label(v)));
        }
        for (u, v) in self.arcs() {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.label(u),
                self.label(v)
            ));
        }
        s.push_str("}\n");
        s
    }

    /// Directed n-cycle 0 → 1 → ... → n-1 → 0.
    pub fn directed_cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    /// Complete symmetric digraph on n vertices.
    pub fn complete_symmetric(n: usize) -> Digraph {
        Digraph::from_arcs(
            n,
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))),
        )
        .unwrap()
    }
}
