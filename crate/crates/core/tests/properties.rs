use matchspec::families::{build, parse_family, FamilySpec};
use matchspec::graph6::{parse_graph6, to_graph6};
use matchspec::iso::{are_isomorphic, canonical_form};
use matchspec::matching::{
    berge_tutte_deficiency, is_1_excludable, is_1_excludable_criterion, is_k_extendable, is_k_extendable_chen,
    max_matching, recheck_exclusion_witness, recheck_extension_witness,
};
use matchspec::spectral::{characteristic_polynomial, eigenvalues, spectral_radius};
use matchspec::{Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn small_spec() -> impl Strategy<Value = FamilySpec> {
    let leaf = prop_oneof![
        (1..5usize).prop_map(FamilySpec::Complete),
        (2..5usize).prop_map(FamilySpec::Empty),
        (3..6usize).prop_map(FamilySpec::PendantComplete),
        (2..4usize, 2..4usize).prop_map(|(p, q)| FamilySpec::BridgedCompletes(p, q)),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(FamilySpec::Union),
            (inner.clone(), inner).prop_map(|(a, b)| FamilySpec::Join(Box::new(a), Box::new(b))),
        ]
    })
    .prop_filter("at most 40 vertices", |s| s.order().is_ok_and(|n| n <= 40))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let s = to_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn join_and_union_counts(a in graph(8), b in graph(8)) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.order(), a.order() + b.order());
        prop_assert_eq!(j.size(), a.size() + b.size() + a.order() * b.order());
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(u.size(), a.size() + b.size());
    }

    #[test]
    fn degree_sum_is_twice_size(g in graph(16)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn relabeling_preserves_isomorphism_class((g, perm) in graph_with_perm(10)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn isomorphism_agrees_with_canonical_form(a in graph(6), b in graph(6)) {
        prop_assert_eq!(are_isomorphic(&a, &b), canonical_form(&a) == canonical_form(&b));
    }

    #[test]
    fn odd_components_bounded(g in graph(10), mask in any::<u64>()) {
        let n = g.order();
        let s = VertexSet(mask & ((1u64 << n) - 1));
        let o = g.odd_components(s);
        prop_assert!(o <= n - s.len());
        prop_assert_eq!(o % 2, (n - s.len()) % 2);
    }

    #[test]
    fn blossom_matches_berge_tutte(g in graph(10)) {
        let m = max_matching(&g);
        let mut seen = 0u64;
        for &(u, v) in &m.edges {
            prop_assert!(g.has_edge(u, v));
            prop_assert_eq!(seen & ((1 << u) | (1 << v)), 0);
            seen |= (1 << u) | (1 << v);
        }
        let (d, _) = berge_tutte_deficiency(&g).unwrap();
        prop_assert_eq!(2 * m.size, g.order() - d);
    }

    #[test]
    fn extension_witnesses_recheck(g in graph(8), k in 1..3usize) {
        let v = is_k_extendable(&g, k);
        let c = is_k_extendable_chen(&g, k).unwrap();
        prop_assert_eq!(v.holds, c.holds);
        for verdict in [&v, &c] {
            if let Some(w) = &verdict.witness {
                prop_assert!(!verdict.holds);
                prop_assert!(recheck_extension_witness(&g, k, w));
            }
        }
    }

    #[test]
    fn exclusion_witnesses_recheck(g in graph(8)) {
        let v = is_1_excludable(&g);
        if let Some(w) = &v.witness {
            prop_assert!(!v.holds);
            prop_assert!(recheck_exclusion_witness(&g, w));
        }
        prop_assume!(g.is_connected());
        let c = is_1_excludable_criterion(&g).unwrap();
        prop_assert_eq!(v.holds, c.holds);
        if let Some(w) = &c.witness {
            prop_assert!(!c.holds);
            prop_assert!(recheck_exclusion_witness(&g, w));
        }
    }

    #[test]
    fn perron_pair(g in graph(14)) {
        let r = spectral_radius(&g);
        prop_assert!(r.residual <= 1e-9, "residual {}", r.residual);
        let ev = eigenvalues(&g);
        prop_assert!((ev[0] - r.rho).abs() <= 1e-9);
        prop_assert!(ev.iter().sum::<f64>().abs() <= 1e-8);
        prop_assert!(r.rho <= ((2 * g.size()) as f64).sqrt() + 1e-9);
        if g.is_connected() && g.order() > 1 {
            prop_assert!(r.perron.iter().all(|&x| x > 0.0));
        }
    }

    #[test]
    fn charpoly_vanishes_on_spectrum(g in graph(9)) {
        let a: Vec<Vec<i128>> = g.adjacency_matrix().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
        let p = characteristic_polynomial(&a).unwrap();
        for x in eigenvalues(&g) {
            let scale = (1.0 + x.abs()).powi(g.order() as i32);
            prop_assert!(p.eval(x).abs() <= 1e-7 * scale * (1 << g.order()) as f64, "p({x}) = {}", p.eval(x));
        }
    }

    #[test]
    fn family_display_round_trip(spec in small_spec()) {
        let text = spec.to_string();
        let parsed = parse_family(&text).unwrap();
        let a = build(&spec).unwrap();
        let b = build(&parsed).unwrap();
        prop_assert_eq!(a.order(), spec.order().unwrap());
        prop_assert!(are_isomorphic(&a, &b), "{} reparsed as {}", text, parsed);
    }
}
