use hedgehog_core::combinatorics::choose3;
use hedgehog_core::generate::{random_hedgehog, random_one_degenerate};
use hedgehog_core::io::{format_colouring_explicit, format_graph, format_hedgehog, format_hypergraph};
use hedgehog_core::io::{parse_colouring_file, parse_graph, parse_hedgehog, parse_hypergraph, ColouringFile};
use hedgehog_core::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn triple_rank_round_trips(n in 3usize..2000, seed: u64) {
        let mut rng = SplitMix64::new(seed);
        let r = rng.next_u64() % choose3(n as u64);
        let (i, j, k) = triple_unrank(r, n).unwrap();
        prop_assert!(i < j && j < k && k < n);
        prop_assert_eq!(triple_rank(i, j, k, n).unwrap(), r);
    }

    #[test]
    fn hedgehogs_round_trip_and_are_one_degenerate(n in 3usize..120, seed: u64) {
        let h = random_hedgehog(n, &mut SplitMix64::new(seed));
        let hg = to_hypergraph(&h);
        prop_assert_eq!(validate_hedgehog(&hg, h.body()).unwrap(), h.clone());
        prop_assert_eq!(degeneracy3(&hg).value, 1);
        prop_assert_eq!(parse_hedgehog(&format_hedgehog(&h)).unwrap(), h);
    }

    #[test]
    fn spike_pair_graph_degeneracy_bound(n in 3usize..500, seed: u64) {
        let h = random_hedgehog(n, &mut SplitMix64::new(seed));
        let f = spike_pair_graph(&h);
        prop_assert!(f.edge_count() <= h.spikes().len());
        prop_assert!(h.spikes().len() <= h.n_total());
        let d = degeneracy2(&f).value as f64;
        prop_assert!(d <= 2.0 * (h.n_total() as f64).sqrt());
    }

    #[test]
    fn hstar_heavy_pairs_carry_enough_spikes(b in 2usize..12, k_off in 0usize..12, m in 0usize..8, extra in 0usize..40) {
        let k = 1 + k_off % b;
        let base = HStarParams { b, k, m, n_total: 0 };
        let p = HStarParams { n_total: base.required_vertices() as usize + extra, ..base };
        let h = build_hstar(&p).unwrap();
        prop_assert_eq!(h.vertex_count(), p.n_total);
        let mult = h.pair_multiplicities();
        prop_assert_eq!(mult.len(), b * (b - 1) / 2);
        for ((u, v), c) in mult {
            prop_assert!(c >= 1);
            if v < k {
                prop_assert!(c > m, "pair ({u},{v}) has {c} spikes");
            }
        }
    }

    #[test]
    fn decomposition_partitions_edges(seed: u64) {
        let h = random_one_degenerate(40, &mut SplitMix64::new(seed));
        let parts = decompose_hedgehogs(&h).unwrap();
        let mut edges: Vec<_> = parts.iter().flat_map(|p| p.edges()).collect();
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        prop_assert_eq!(before, edges.len());
        prop_assert_eq!(&edges[..], h.edges());
        for p in &parts {
            prop_assert!(validate_hedgehog(&to_hypergraph(p), p.body()).is_ok());
        }
    }

    #[test]
    fn file_formats_round_trip(n in 0usize..40, p in 0.0f64..1.0, seed: u64) {
        let g = sample_gnp(n, p, seed).unwrap();
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g.clone());
        let c = TripleColouring::random(n.min(25), p, seed).unwrap();
        let text = format_colouring_explicit(&c).unwrap();
        prop_assert_eq!(parse_colouring_file(&text).unwrap(), ColouringFile::Explicit(c));
        if n >= 3 {
            let h = random_one_degenerate(n, &mut SplitMix64::new(seed));
            prop_assert_eq!(parse_hypergraph(&format_hypergraph(&h)).unwrap(), h);
        }
    }
}
