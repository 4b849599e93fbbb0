use graphpow_core::*;
use proptest::prelude::*;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Random connected graph: a random tree plus random extra edges.
fn arb_connected(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1));
        let extra = proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2);
        (parents, extra).prop_map(move |(parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            let mut it = extra.into_iter();
            for j in 1..n {
                for i in 0..j {
                    // sparse extras keep the graphs varied
                    if it.next().unwrap() && (i + j) % 3 == 0 {
                        edges.push((i, j));
                    }
                }
            }
            edges.sort_unstable();
            edges.dedup();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn aut(g: &Graph) -> AutomorphismSet {
    enumerate_automorphisms(g, &SymmetryLimits::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn power_distances_are_ceilings(g in arb_connected(1, 9), k in 1usize..5) {
        let m = metrics(&g);
        let pm = metrics(&power(&g, k).unwrap());
        for u in 0..g.n() {
            for v in 0..g.n() {
                let d = m.dist(u, v) as usize;
                prop_assert_eq!(pm.dist(u, v) as usize, d.div_ceil(k));
            }
        }
    }

    #[test]
    fn powers_compose(g in arb_graph(0, 8), a in 1usize..4, b in 1usize..4) {
        let nested = power(&power(&g, a).unwrap(), b).unwrap();
        prop_assert!(graph_equal(&nested, &power(&g, a * b).unwrap()));
    }

    #[test]
    fn subdivision_shape(g in arb_graph(0, 7), k in 1usize..5) {
        let sg = subdivide(&g, k).unwrap();
        prop_assert_eq!(sg.graph.n(), g.n() + (k - 1) * g.edge_count());
        prop_assert_eq!(sg.graph.edge_count(), k * g.edge_count());
        let m = metrics(&g);
        let sm = metrics(&sg.graph);
        for u in 0..g.n() {
            for v in 0..g.n() {
                let d = m.dist(u, v);
                let expect = if d == INFINITE { INFINITE } else { d * k as u32 };
                prop_assert_eq!(sm.dist(u, v), expect);
            }
        }
        for v in g.n()..sg.graph.n() {
            prop_assert_eq!(sg.graph.degree(v), 2);
            let (e, l) = sg.locate(v).unwrap();
            prop_assert_eq!(sg.superedges[e].internal[l - 1], v);
        }
    }

    #[test]
    fn automorphisms_form_a_group(g in arb_graph(0, 7)) {
        let a = aut(&g);
        prop_assert!(a.elements()[0].is_identity());
        prop_assert!(a.is_group());
        for p in a.elements() {
            prop_assert!(is_automorphism(&g, p).unwrap());
        }
    }

    #[test]
    fn base_group_embeds_in_power_group(g in arb_connected(1, 7), k in 2usize..4) {
        prop_assert!(is_subgroup(&aut(&g), &aut(&power(&g, k).unwrap())).unwrap());
    }

    #[test]
    fn edge_action_is_a_homomorphism(g in arb_graph(2, 6)) {
        let a = aut(&g);
        for p in a.elements().iter().take(12) {
            for q in a.elements().iter().take(12) {
                let pq = edge_action(&g, &p.then(q)).unwrap();
                let ep = edge_action(&g, p).unwrap();
                let eq = edge_action(&g, q).unwrap();
                let composed: Vec<usize> = ep.iter().map(|&e| eq[e]).collect();
                prop_assert_eq!(pq, composed);
            }
        }
    }

    #[test]
    fn search_certificates_distinguish(g in arb_connected(1, 7)) {
        let a = aut(&g);
        let lim = SearchLimits::default();
        let d = minimum_labels(&g, &a, LabelKind::Vertex, &lim).unwrap();
        prop_assert!(is_distinguishing(&g, &a, &d.certificate).unwrap());
        prop_assert_eq!(d.certificate.labels_used() as u32, d.value);
        if d.value > 1 {
            prop_assert!(find_distinguishing(&g, &a, LabelKind::Vertex, d.value - 1, &lim)
                .unwrap()
                .is_none());
        }
        let t = minimum_labels(&g, &a, LabelKind::Total, &lim).unwrap();
        prop_assert!(t.value <= d.value);
        prop_assert!(is_distinguishing(&g, &a, &t.certificate).unwrap());
    }

    #[test]
    fn distinguishing_number_of_power_never_drops(g in arb_connected(2, 6), k in 2usize..4) {
        let lim = SearchLimits::default();
        let base = distinguishing_number(&g, &lim).unwrap().value;
        let pow = distinguishing_number(&power(&g, k).unwrap(), &lim).unwrap().value;
        prop_assert!(base <= pow);
    }

    #[test]
    fn relabeling_preserves_invariants(g in arb_connected(1, 6), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.relabel_by_order(&order);
        let lim = SearchLimits::default();
        prop_assert_eq!(aut(&g).order(), aut(&h).order());
        prop_assert_eq!(
            distinguishing_number(&g, &lim).unwrap().value,
            distinguishing_number(&h, &lim).unwrap().value
        );
    }
}

#[test]
fn bound_monotonicity() {
    for k in 1..=4 {
        let mut prev = 0;
        for delta in 1..=200 {
            let s = sphere_bound(k, delta);
            assert!(s >= 2 && s >= prev);
            prev = s;
        }
    }
    for k in 2..=5 {
        for dp in 1..=100u64 {
            let s = tuple_bound(dp, k);
            assert!(reversal_classes(s, k) >= dp as u128);
            assert!(reversal_classes(s - 1, k) < dp as u128);
        }
    }
}
