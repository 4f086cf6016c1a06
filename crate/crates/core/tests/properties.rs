//! Structural invariants of the polynomials, flows and duality, checked on
//! random multigraphs and random plane graphs.

use graphpoly::flows::{
    degeneracy, for_each_balanced_flow, is_balanced, restrict, support_subgraph,
};
use graphpoly::identity::w_function;
use graphpoly::planar::{
    random_plane_graph, verify_cor2, verify_duality_correspondence, verify_eq4, verify_eq5, verify_eq6,
};
use graphpoly::{
    chromatic_polynomial, flow_polynomial, verify_theorem, FlowAssignment, IntPoly, Limits, Multigraph,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |e| Multigraph::new(n, e).unwrap())
    })
}

fn plane_graph(max_m: usize) -> impl Strategy<Value = graphpoly::PlaneGraph> {
    (any::<u64>(), 0..=max_m).prop_map(|(seed, m)| random_plane_graph(&mut ChaCha8Rng::seed_from_u64(seed), m))
}

fn balanced_flows(g: &Multigraph, k: u32) -> Vec<FlowAssignment> {
    let mut out = Vec::new();
    for_each_balanced_flow(g, k, &Limits::default(), |t, _| out.push(FlowAssignment::new(k, t.to_vec()).unwrap()))
        .unwrap();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theorem_on_random_multigraphs(g in multigraph(6, 9)) {
        let v = verify_theorem(&g).unwrap();
        prop_assert!(v.passed, "{:?}", v);
    }

    #[test]
    fn chromatic_deletion_contraction(g in multigraph(6, 8), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.m() > 0);
        let e = pick.index(g.m());
        prop_assume!(!g.edges()[e].is_loop());
        let lhs = chromatic_polynomial(&g);
        let rhs = chromatic_polynomial(&g.delete_edge(e).unwrap()) - chromatic_polynomial(&g.contract_edge(e).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn orientation_invariance(g in multigraph(4, 6), pick in any::<prop::sample::Index>(), k in 1u32..=3) {
        prop_assume!(g.m() > 0);
        let e = pick.index(g.m());
        let flipped = g.reverse_edge(e).unwrap();
        prop_assert_eq!(flow_polynomial(&g), flow_polynomial(&flipped));
        prop_assert_eq!(chromatic_polynomial(&g), chromatic_polynomial(&flipped));
        let mut seen = 0;
        for t in balanced_flows(&g, k) {
            let s = t.negate_edge(e);
            prop_assert!(is_balanced(&flipped, &s));
            prop_assert_eq!(degeneracy(&t), degeneracy(&s));
            seen += 1;
        }
        prop_assert_eq!(seen, balanced_flows(&flipped, k).len());
    }

    #[test]
    fn balanced_flows_form_a_module(g in multigraph(4, 6), k in 1u32..=4, r in 0u32..8) {
        let flows = balanced_flows(&g, k);
        for pair in flows.windows(2) {
            prop_assert!(is_balanced(&g, &pair[0].add(&pair[1])));
        }
        for t in &flows {
            prop_assert!(is_balanced(&g, &t.scale(r)));
        }
        // There are exactly k^(m - n + c) of them.
        let cyclomatic = g.m() + g.components().count - g.n();
        prop_assert_eq!(flows.len() as u64, u64::from(k).pow(cyclomatic as u32));
    }

    #[test]
    fn support_bijection(g in multigraph(4, 6), k in 1u32..=3) {
        // Each balanced flow is a nowhere-zero flow on its support, so
        // summing F over all edge subgraphs counts every balanced flow once.
        let flows = balanced_flows(&g, k);
        for t in &flows {
            let sub = support_subgraph(&g, t).unwrap();
            let r = restrict(t, &sub);
            prop_assert!(r.is_nowhere_zero());
            prop_assert!(is_balanced(&sub.graph, &r));
        }
        let kb = BigInt::from(k);
        let total: BigInt = g
            .edge_subgraphs(&Limits::default())
            .unwrap()
            .map(|h| flow_polynomial(&h.graph).eval(&kb))
            .sum();
        prop_assert_eq!(total, BigInt::from(flows.len()));
    }

    #[test]
    fn bridges_kill_the_flow_polynomial(g in multigraph(5, 7)) {
        if g.has_bridge() {
            prop_assert!(flow_polynomial(&g).is_zero());
        }
        // A pendant edge is always a bridge.
        let mut edges: Vec<_> = g.edges().iter().map(|e| (e.tail, e.head)).collect();
        edges.push((0, g.n()));
        let pendant = Multigraph::new(g.n() + 1, edges).unwrap();
        prop_assert!(pendant.has_bridge());
        prop_assert!(flow_polynomial(&pendant).is_zero());
    }

    #[test]
    fn disjoint_union_multiplies(a in multigraph(4, 5), b in multigraph(4, 5)) {
        let u = a.disjoint_union(&b);
        prop_assert_eq!(chromatic_polynomial(&u), chromatic_polynomial(&a) * chromatic_polynomial(&b));
        prop_assert_eq!(flow_polynomial(&u), flow_polynomial(&a) * flow_polynomial(&b));
        let w = w_function(&u);
        prop_assert!(w.same_function(&w_function(&a).mul(&w_function(&b))));
        prop_assert_eq!(w.k_shift, w_function(&a).k_shift + w_function(&b).k_shift);
    }

    #[test]
    fn one_point_join_multiplies(
        a in multigraph(4, 5), b in multigraph(4, 5),
        i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(),
    ) {
        let (v1, v2) = (i.index(a.n()), j.index(b.n()));
        let joined = a.one_point_join(&b, v1, v2).unwrap();
        let product = chromatic_polynomial(&a) * chromatic_polynomial(&b);
        prop_assert_eq!(chromatic_polynomial(&joined) * IntPoly::k(), product);
        prop_assert_eq!(flow_polynomial(&joined), flow_polynomial(&a) * flow_polynomial(&b));
        let w = w_function(&joined);
        let expected = w_function(&a).mul(&w_function(&b)).div_k();
        prop_assert_eq!(&w, &expected);
        prop_assert_eq!(w.k_shift, w_function(&a).k_shift + w_function(&b).k_shift - 1);
    }

    #[test]
    fn subdivision_keeps_w(g in multigraph(4, 6), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.m() > 0);
        let s = g.subdivide_edge(pick.index(g.m())).unwrap();
        prop_assert_eq!(w_function(&s), w_function(&g));
    }

    #[test]
    fn planar_identities_on_random_plane_graphs(pg in plane_graph(8)) {
        let limits = Limits::default();
        prop_assert!(verify_eq4(&pg).passed);
        prop_assert!(verify_eq5(&pg, &limits).unwrap().passed);
        prop_assert!(verify_eq6(&pg, &limits).unwrap().passed);
        if pg.graph().m() > 1 {
            prop_assert!(verify_cor2(&pg).unwrap().passed);
        }
        // The dual of the dual has the same polynomials.
        let back = pg.dual().dual();
        prop_assert_eq!(chromatic_polynomial(back.graph()), chromatic_polynomial(pg.graph()));
    }

    #[test]
    fn properness_transport(pg in plane_graph(6), k in 2u32..=3) {
        let r = verify_duality_correspondence(&pg, k, &Limits::default()).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
        prop_assert_eq!(r.properness_mismatches, 0);
        let kb = BigInt::from(k);
        prop_assert_eq!(BigInt::from(r.proper_colorings), chromatic_polynomial(pg.dual().graph()).eval(&kb));
        prop_assert_eq!(BigInt::from(r.nowhere_zero_flows), flow_polynomial(pg.graph()).eval(&kb));
    }
}
