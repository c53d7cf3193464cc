//! Arc connectivity, λ-atoms, λ-superatoms, and the max-λ / super-λ
//! verdicts, computed directly from the definitions.
//!
//! Two independent routes are provided for λ (unit-capacity max flow
//! vs exhaustive subset minimization) and for the super-λ predicate
//! (exhaustive fragment scan vs contracted-pair flows).

use crate::cayley::MixedCayleyParams;
use crate::digraph::{Digraph, Sign, VertexSet};
use crate::error::{Error, Result};
use crate::flow::Dinic;
use serde::{Deserialize, Serialize};

/// Default cap on exhaustive subset enumeration (2^20 subsets).
pub const DEFAULT_SUBSET_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcFragment {
    pub vertices: VertexSet,
    pub sign: Sign,
    pub boundary_size: usize,
}

/// Regular-degree profile of an atom's induced subdigraph: `r0`/`r1`
/// are the in-layer regular degrees, `p`/`q` the cross-layer
/// out/in degrees per layer-0 vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub r0: usize,
    pub r1: usize,
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomReport {
    pub sign: Sign,
    pub lambda: usize,
    pub atoms: Vec<ArcFragment>,
    pub superatoms: Vec<ArcFragment>,
    /// Per-atom (|A ∩ X₀|, |A ∩ X₁|); filled only for mixed Cayley input.
    pub atom_layer_split: Vec<(usize, usize)>,
    /// (r₀, r₁, p, q) of the first atom; filled only for mixed Cayley
    /// input whose atoms are layer-regular.
    pub induced_degree_profile: Option<DegreeProfile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub lambda: usize,
    pub delta_plus: usize,
    pub delta_minus: usize,
    pub delta: usize,
    pub is_max_lambda: bool,
    pub is_super_lambda: bool,
    pub witness_cut: Vec<(usize, usize)>,
    pub nontrivial_cut_witness: Option<ArcFragment>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub status: CheckStatus,
    pub detail: Option<String>,
}

fn require_strong(x: &Digraph) -> Result<()> {
    if x.vertex_count == 0 {
        return Err(Error::EmptyDigraph);
    }
    if !x.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    Ok(())
}

fn unit_flow_network(x: &Digraph) -> Dinic {
    let mut d = Dinic::new(x.vertex_count);
    for (u, v) in x.arcs() {
        d.add_edge(u, v, 1);
    }
    d
}

/// λ(X) by unit-capacity max flow, minimized over (s→v) and (v→s) for
/// fixed s = 0 and all v ≠ 0. Also returns a minimum cut; among all
/// cuts produced by the optimal flow runs, the lexicographically least
/// arc list is chosen.
pub fn arc_connectivity(x: &Digraph) -> Result<(usize, Vec<(usize, usize)>)> {
    require_strong(x)?;
    if x.vertex_count < 2 {
        return Err(Error::InvalidFragment);
    }
    let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
    for v in 1..x.vertex_count {
        for (s, t) in [(0, v), (v, 0)] {
            let mut net = unit_flow_network(x);
            let flow = net.max_flow(s, t) as usize;
            if best.as_ref().is_some_and(|(b, _)| flow > *b) {
                continue;
            }
            let side = VertexSet::new(net.residual_source_side(s), x.vertex_count)?;
            let cut = x.arc_boundary(&side, Sign::Positive)?;
            debug_assert_eq!(cut.len(), flow);
            match &mut best {
                Some((b, w)) if flow == *b => {
                    if cut < *w {
                        *w = cut;
                    }
                }
                _ => best = Some((flow, cut)),
            }
        }
    }
    Ok(best.expect("at least one vertex pair"))
}

fn check_subset_cap(x: &Digraph, cap: usize) -> Result<()> {
    if x.vertex_count > cap || x.vertex_count > 63 {
        return Err(Error::Capacity {
            what: "vertex count for exhaustive subset search",
            size: x.vertex_count,
            cap: cap.min(63),
        });
    }
    Ok(())
}

/// Exact λ(X) by exhaustive minimization of |ω⁺(A)| over all proper
/// nonempty subsets. Independent oracle for `arc_connectivity`.
pub fn arc_connectivity_bruteforce(x: &Digraph, cap: usize) -> Result<usize> {
    require_strong(x)?;
    check_subset_cap(x, cap)?;
    let n = x.vertex_count;
    let out_masks = x.out_masks();
    let full: u64 = if n == 63 { !0 >> 1 } else { (1 << n) - 1 };
    let mut best = usize::MAX;
    for mask in 1..full {
        let mut size = 0usize;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            size += (out_masks[v] & !mask).count_ones() as usize;
        }
        best = best.min(size);
    }
    Ok(best)
}

fn boundary_size_mask(masks: &[u64], a: u64) -> usize {
    let mut size = 0usize;
    let mut rest = a;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        size += (masks[v] & !a).count_ones() as usize;
    }
    size
}

/// All λ-atoms and λ-superatoms for the given sign, by exhaustive
/// fragment scan.
pub fn lambda_atoms(x: &Digraph, sign: Sign, cap: usize) -> Result<AtomReport> {
    require_strong(x)?;
    check_subset_cap(x, cap)?;
    let (lambda, _) = arc_connectivity(x)?;
    let n = x.vertex_count;
    let masks = match sign {
        Sign::Positive => x.out_masks(),
        Sign::Negative => x.in_masks(),
    };
    let full: u64 = (1 << n) - 1;
    let mut atom_size = usize::MAX;
    let mut super_size = usize::MAX;
    for mask in 1..full {
        if boundary_size_mask(&masks, mask) == lambda {
            let card = mask.count_ones() as usize;
            atom_size = atom_size.min(card);
            if card >= 2 {
                super_size = super_size.min(card);
            }
        }
    }
    let mut atoms = Vec::new();
    let mut superatoms = Vec::new();
    for mask in 1..full {
        let card = mask.count_ones() as usize;
        if card != atom_size && card != super_size {
            continue;
        }
        if boundary_size_mask(&masks, mask) != lambda {
            continue;
        }
        let frag = ArcFragment {
            vertices: VertexSet::from_mask(mask, n),
            sign,
            boundary_size: lambda,
        };
        if card == atom_size {
            atoms.push(frag.clone());
        }
        if card == super_size {
            superatoms.push(frag);
        }
    }
    atoms.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    superatoms.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(AtomReport {
        sign,
        lambda,
        atoms,
        superatoms,
        atom_layer_split: Vec::new(),
        induced_degree_profile: None,
    })
}

/// Splits a fragment of a mixed Cayley digraph into its two layers.
pub fn layer_split(p: &MixedCayleyParams, frag: &ArcFragment) -> (Vec<usize>, Vec<usize>) {
    let n = p.group.order;
    let mut layer0 = Vec::new();
    let mut layer1 = Vec::new();
    for &v in &frag.vertices.members {
        if v < n {
            layer0.push(v);
        } else {
            layer1.push(v - n);
        }
    }
    (layer0, layer1)
}

/// (r₀, r₁, p, q) of the subdigraph induced by a fragment, or None
/// when the induced degrees are not layer-constant.
pub fn induced_degree_profile(
    p: &MixedCayleyParams,
    x: &Digraph,
    frag: &ArcFragment,
) -> Option<DegreeProfile> {
    let n = p.group.order;
    let in_a = |v: usize| frag.vertices.contains(v);
    let (a0, a1) = layer_split(p, frag);
    if a0.is_empty() || a1.is_empty() {
        return None;
    }
    let constant = |degrees: Vec<usize>| -> Option<usize> {
        let first = degrees[0];
        degrees.iter().all(|&d| d == first).then_some(first)
    };
    // In-layer out/in degrees must agree (each Yᵢ is rᵢ-regular).
    let r0_out = constant(
        a0.iter()
            .map(|&g| x.out_adj[g].iter().filter(|&&v| v < n && in_a(v)).count())
            .collect(),
    )?;
    let r0_in = constant(
        a0.iter()
            .map(|&g| x.in_adj[g].iter().filter(|&&v| v < n && in_a(v)).count())
            .collect(),
    )?;
    let r1_out = constant(
        a1.iter()
            .map(|&g| {
                x.out_adj[n + g]
                    .iter()
                    .filter(|&&v| v >= n && in_a(v))
                    .count()
            })
            .collect(),
    )?;
    let r1_in = constant(
        a1.iter()
            .map(|&g| {
                x.in_adj[n + g]
                    .iter()
                    .filter(|&&v| v >= n && in_a(v))
                    .count()
            })
            .collect(),
    )?;
    if r0_out != r0_in || r1_out != r1_in {
        return None;
    }
    // Cross-layer degrees: p = d⁺ of layer-0 vertices into A₁,
    // q = d⁻ of layer-0 vertices from A₁; must match the layer-1 view.
    let p_cross = constant(
        a0.iter()
            .map(|&g| x.out_adj[g].iter().filter(|&&v| v >= n && in_a(v)).count())
            .collect(),
    )?;
    let q_cross = constant(
        a0.iter()
            .map(|&g| x.in_adj[g].iter().filter(|&&v| v >= n && in_a(v)).count())
            .collect(),
    )?;
    let p_from_a1 = constant(
        a1.iter()
            .map(|&g| {
                x.in_adj[n + g]
                    .iter()
                    .filter(|&&v| v < n && in_a(v))
                    .count()
            })
            .collect(),
    )?;
    let q_from_a1 = constant(
        a1.iter()
            .map(|&g| {
                x.out_adj[n + g]
                    .iter()
                    .filter(|&&v| v < n && in_a(v))
                    .count()
            })
            .collect(),
    )?;
    if p_cross != p_from_a1 || q_cross != q_from_a1 {
        return None;
    }
    Some(DegreeProfile {
        r0: r0_out,
        r1: r1_out,
        p: p_cross,
        q: q_cross,
    })
}

/// Fills `atom_layer_split` and `induced_degree_profile` for an atom
/// report computed on a mixed Cayley digraph.
pub fn annotate_atoms(p: &MixedCayleyParams, x: &Digraph, report: &mut AtomReport) {
    report.atom_layer_split = report
        .atoms
        .iter()
        .map(|a| {
            let (l0, l1) = layer_split(p, a);
            (l0.len(), l1.len())
        })
        .collect();
    report.induced_degree_profile = report
        .atoms
        .first()
        .and_then(|a| induced_degree_profile(p, x, a));
}

/// True iff the cut equals the full out-arc set or in-arc set of a
/// single vertex.
pub fn cut_is_trivial(x: &Digraph, cut: &[(usize, usize)]) -> bool {
    if cut.is_empty() {
        return false;
    }
    let (tail0, head0) = cut[0];
    if cut.iter().all(|&(u, _)| u == tail0) && cut.len() == x.out_adj[tail0].len() {
        return true;
    }
    cut.iter().all(|&(_, v)| v == head0) && cut.len() == x.in_adj[head0].len()
}

/// Super-λ predicate by exhaustive fragment scan: X is super-λ iff
/// every minimum cut equals, as an arc set, some vertex's full in-arc
/// or out-arc set.
pub fn is_super_lambda(x: &Digraph, cap: usize) -> Result<(bool, Option<ArcFragment>)> {
    require_strong(x)?;
    if x.vertex_count < 4 {
        return Err(Error::InvalidFragment);
    }
    check_subset_cap(x, cap)?;
    let (lambda, _) = arc_connectivity(x)?;
    let n = x.vertex_count;
    let out_masks = x.out_masks();
    let full: u64 = (1 << n) - 1;
    let mut witness: Option<ArcFragment> = None;
    for mask in 1..full {
        if boundary_size_mask(&out_masks, mask) != lambda {
            continue;
        }
        let a = VertexSet::from_mask(mask, n);
        let cut = x.arc_boundary(&a, Sign::Positive)?;
        if cut_is_trivial(x, &cut) {
            continue;
        }
        let frag = ArcFragment {
            vertices: a,
            sign: Sign::Positive,
            boundary_size: lambda,
        };
        let better = match &witness {
            Some(w) => {
                (frag.vertices.len(), &frag.vertices.members)
                    < (w.vertices.len(), &w.vertices.members)
            }
            None => true,
        };
        if better {
            witness = Some(frag);
        }
    }
    Ok((witness.is_none(), witness))
}

/// Super-λ predicate by contracted-pair flows: for every pair of
/// source vertices and disjoint pair of sink vertices, a super-source
/// and super-sink are attached and a unit-capacity max flow taken.
/// The minimum over all runs equals λ iff a minimum cut with at least
/// two vertices on each side exists; each such cut is then tested for
/// arc-set triviality.
pub fn is_super_lambda_flow(x: &Digraph) -> Result<(bool, Option<ArcFragment>)> {
    require_strong(x)?;
    let n = x.vertex_count;
    if n < 4 {
        return Err(Error::InvalidFragment);
    }
    let (lambda, _) = arc_connectivity(x)?;
    let source = n;
    let sink = n + 1;
    let inf = (x.arc_count() + 1) as u32;
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                for d in c + 1..n {
                    if d == a || d == b {
                        continue;
                    }
                    let mut net = Dinic::new(n + 2);
                    for (u, v) in x.arcs() {
                        net.add_edge(u, v, 1);
                    }
                    net.add_edge(source, a, inf);
                    net.add_edge(source, b, inf);
                    net.add_edge(c, sink, inf);
                    net.add_edge(d, sink, inf);
                    let flow = net.max_flow(source, sink) as usize;
                    if flow != lambda {
                        continue;
                    }
                    let side: Vec<usize> = net
                        .residual_source_side(source)
                        .into_iter()
                        .filter(|&v| v < n)
                        .collect();
                    let frag_set = VertexSet::new(side, n)?;
                    let cut = x.arc_boundary(&frag_set, Sign::Positive)?;
                    if !cut_is_trivial(x, &cut) {
                        return Ok((
                            false,
                            Some(ArcFragment {
                                vertices: frag_set,
                                sign: Sign::Positive,
                                boundary_size: lambda,
                            }),
                        ));
                    }
                }
            }
        }
    }
    Ok((true, None))
}

/// Full connectivity report: λ, degrees, max-λ and super-λ flags with
/// witnesses. Uses the exhaustive super-λ route within `cap`, the flow
/// route above it.
pub fn connectivity_report(x: &Digraph, cap: usize) -> Result<ConnectivityReport> {
    let (lambda, witness_cut) = arc_connectivity(x)?;
    let (deg, _) = x.degrees()?;
    let (is_super, nontrivial) = if x.vertex_count <= cap.min(63) {
        is_super_lambda(x, cap)?
    } else {
        is_super_lambda_flow(x)?
    };
    Ok(ConnectivityReport {
        lambda,
        delta_plus: deg.delta_plus,
        delta_minus: deg.delta_minus,
        delta: deg.delta,
        is_max_lambda: lambda == deg.delta,
        is_super_lambda: is_super,
        witness_cut,
        nontrivial_cut_witness: nontrivial,
    })
}

/// Evaluates the atom-structure lemmas on a computed atom report for a
/// mixed Cayley digraph. Applicable when λ < δ; when λ = δ the
/// superatom size bound is checked instead.
pub fn atom_structure_checks(
    p: &MixedCayleyParams,
    x: &Digraph,
    report: &AtomReport,
) -> Vec<PropertyOutcome> {
    let mut out = Vec::new();
    let (deg, _) = x.degrees().expect("nonempty");
    let delta = deg.delta;
    let lambda = report.lambda;
    let outcome = |name: &str, status: CheckStatus, detail: Option<String>| PropertyOutcome {
        name: name.to_string(),
        status,
        detail,
    };
    if lambda >= delta {
        for name in [
            "atom_induces_strong_subdigraph",
            "atom_size_at_least_delta_plus_one",
            "atom_layer_intersections_at_least_two",
            "atom_layers_balanced",
            "atoms_pairwise_disjoint",
            "atoms_partition_vertices",
        ] {
            out.push(outcome(name, CheckStatus::NotApplicable, None));
        }
        // Max-λ path: superatoms, when present, have at least δ vertices.
        let status = if report.superatoms.is_empty() {
            CheckStatus::NotApplicable
        } else if report.superatoms.iter().all(|a| a.vertices.len() >= delta) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        out.push(outcome("superatom_size_at_least_delta", status, None));
        return out;
    }

    let mut strong = CheckStatus::Pass;
    let mut strong_detail = None;
    let mut size = CheckStatus::Pass;
    let mut layers = CheckStatus::Pass;
    let mut balance = CheckStatus::Pass;
    for atom in &report.atoms {
        let (sub, _) = x
            .induced_subdigraph(&atom.vertices)
            .expect("atom is nonempty");
        if !sub.is_strongly_connected() {
            strong = CheckStatus::Fail;
            strong_detail = Some(format!(
                "atom {:?} induces a non-strong subdigraph",
                atom.vertices.members
            ));
        }
        if atom.vertices.len() < delta + 1 {
            size = CheckStatus::Fail;
        }
        let (l0, l1) = layer_split(p, atom);
        if l0.len() < 2 || l1.len() < 2 {
            layers = CheckStatus::Fail;
        }
        if l0.len() != l1.len() {
            balance = CheckStatus::Fail;
        }
    }
    out.push(outcome(
        "atom_induces_strong_subdigraph",
        strong,
        strong_detail,
    ));
    out.push(outcome("atom_size_at_least_delta_plus_one", size, None));
    out.push(outcome(
        "atom_layer_intersections_at_least_two",
        layers,
        None,
    ));
    out.push(outcome("atom_layers_balanced", balance, None));

    let mut covered = vec![0usize; x.vertex_count];
    for atom in &report.atoms {
        for &v in &atom.vertices.members {
            covered[v] += 1;
        }
    }
    let disjoint = covered.iter().all(|&c| c <= 1);
    let partition = covered.iter().all(|&c| c == 1);
    out.push(outcome(
        "atoms_pairwise_disjoint",
        if disjoint {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        None,
    ));
    out.push(outcome(
        "atoms_partition_vertices",
        if partition {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        None,
    ));
    out.push(outcome(
        "superatom_size_at_least_delta",
        CheckStatus::NotApplicable,
        None,
    ));
    out
}
