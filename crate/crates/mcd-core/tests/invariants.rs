use mcd_core::cayley::{build_cayley, build_mixed, permute_arcs, right_translation};
use mcd_core::connectivity::{arc_connectivity, arc_connectivity_bruteforce};
use mcd_core::digraph::{Digraph, Sign, VertexSet};
use mcd_core::group::{ElementSet, Group};
use mcd_core::MixedCayleyParams;
use proptest::prelude::*;

fn arbitrary_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::ANY, n * n).prop_map(move |bits| {
            let arcs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn subsets(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| (m.count_ones() as usize) <= max_size)
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect()
}

proptest! {
    #[test]
    fn boundary_duality(x in arbitrary_digraph(6)) {
        let n = x.vertex_count;
        for mask in 1u64..(1 << n) - 1 {
            let a = VertexSet::from_mask(mask, n);
            let neg = x.arc_boundary(&a, Sign::Negative).unwrap();
            let pos = x.arc_boundary(&a.complement(), Sign::Positive).unwrap();
            prop_assert_eq!(neg, pos);
        }
    }

    #[test]
    fn lambda_reverse_invariance(x in arbitrary_digraph(7)) {
        if x.is_strongly_connected() {
            let (l, _) = arc_connectivity(&x).unwrap();
            let (lr, _) = arc_connectivity(&x.reverse()).unwrap();
            prop_assert_eq!(l, lr);
        }
    }

    #[test]
    fn lambda_at_most_delta(x in arbitrary_digraph(7)) {
        if x.is_strongly_connected() {
            let (l, _) = arc_connectivity(&x).unwrap();
            let (d, _) = x.degrees().unwrap();
            prop_assert!(l <= d.delta);
            prop_assert_eq!(l, arc_connectivity_bruteforce(&x, 20).unwrap());
        }
    }
}

#[test]
fn cayley_lambda_equals_degree() {
    // Every strongly connected Cay(G, S) has λ = δ = |S|.
    for g in [
        Group::cyclic(4).unwrap(),
        Group::cyclic(5).unwrap(),
        Group::cyclic(6).unwrap(),
        Group::cyclic(7).unwrap(),
        Group::cyclic(8).unwrap(),
        Group::symmetric(3).unwrap(),
        Group::dihedral(4).unwrap(),
        Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(4).unwrap()).unwrap(),
    ] {
        for s in subsets(g.order, g.order)
            .into_iter()
            .filter(|s| !s.contains(&0))
        {
            if s.is_empty() {
                continue;
            }
            let set = ElementSet::new(s.iter().copied(), g.order).unwrap();
            let x = build_cayley(&g, &set).unwrap();
            if !x.is_strongly_connected() {
                continue;
            }
            let (lambda, _) = arc_connectivity(&x).unwrap();
            let (deg, _) = x.degrees().unwrap();
            assert_eq!(lambda, deg.delta, "Cay({}, {:?})", g.name, set.members);
            assert_eq!(deg.delta, set.len(), "Cay({}, {:?})", g.name, set.members);
        }
    }
}

#[test]
fn right_translation_automorphism_exhaustive() {
    // R(a) preserves the arc set of every MD over small groups.
    for g in [
        Group::cyclic(3).unwrap(),
        Group::cyclic(4).unwrap(),
        Group::symmetric(3).unwrap(),
        Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(2).unwrap()).unwrap(),
    ] {
        let n = g.order;
        for s0 in subsets(n, 2) {
            if s0.contains(&0) {
                continue;
            }
            for t0 in subsets(n, 1) {
                if t0.is_empty() {
                    continue;
                }
                let p = MixedCayleyParams::new(
                    g.clone(),
                    ElementSet::new(s0.iter().copied(), n).unwrap(),
                    ElementSet::new(s0.iter().copied(), n).unwrap(),
                    ElementSet::new(t0.iter().copied(), n).unwrap(),
                    ElementSet::new(t0.iter().copied(), n).unwrap(),
                )
                .unwrap();
                let x = build_mixed(&p).unwrap();
                let arcs = x.arcs();
                for a in 0..n {
                    let perm = right_translation(&p, a);
                    assert_eq!(permute_arcs(&x, &perm), arcs);
                }
            }
        }
    }
}

#[test]
fn positive_fragments_match_reverse_negative() {
    // A positive fragment of X is a negative fragment of the reverse.
    let g = Group::cyclic(4).unwrap();
    let p = MixedCayleyParams::new(
        g,
        ElementSet::new([2], 4).unwrap(),
        ElementSet::new([2], 4).unwrap(),
        ElementSet::new([0, 1], 4).unwrap(),
        ElementSet::new([0, 2], 4).unwrap(),
    )
    .unwrap();
    let x = build_mixed(&p).unwrap();
    let r = x.reverse();
    for mask in 1u64..(1 << 8) - 1 {
        let a = VertexSet::from_mask(mask, 8);
        let pos = x.arc_boundary(&a, Sign::Positive).unwrap().len();
        let neg = r.arc_boundary(&a, Sign::Negative).unwrap().len();
        assert_eq!(pos, neg);
    }
}
