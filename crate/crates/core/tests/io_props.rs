//! Round trips for the text formats, with graph6 checked against a
//! straightforward encoder written here from the format definition.

use eod_core::amenability::{Flavor, Label, WeakPartition};
use eod_core::eod::{find_eod_set, parse_vertex_set, EodCertificate, SearchOptions};
use eod_core::io::{parse_edge_list, parse_graph, parse_graph6, to_edge_list, to_graph6, GraphFormat};
use eod_core::trees::TreeTrace;
use eod_core::{Graph, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// graph6 for `n <= 62`: one byte `n + 63`, then the upper triangle
/// column by column, six bits per byte, each byte offset by 63.
fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
        out.push((v + 63) as char);
    }
    out
}

fn arb_kr_partition(max_n: usize) -> impl Strategy<Value = WeakPartition> {
    (2usize..=5, 1..=max_n).prop_flat_map(|(r, n)| {
        proptest::collection::vec(0..=r, n).prop_map(move |ls| {
            let labels = ls
                .into_iter()
                .map(|l| if l == 0 { Label::Zero } else { Label::Class(l) })
                .collect();
            WeakPartition::new(Flavor::Kr(r), labels).unwrap()
        })
    })
}

fn arb_kmn_partition(max_n: usize) -> impl Strategy<Value = WeakPartition> {
    (1usize..=3, 0usize..=2, 1..=max_n).prop_flat_map(|(m, extra, n)| {
        let flavor = Flavor::Kmn(m, m + extra);
        let labels = flavor.labels();
        proptest::collection::vec(0..labels.len(), n)
            .prop_map(move |ix| WeakPartition::new(flavor, ix.into_iter().map(|i| labels[i]).collect()).unwrap())
    })
}

proptest! {
    #[test]
    fn graph6_matches_reference(g in arb_graph(20)) {
        let ours = to_graph6(&g).unwrap();
        prop_assert_eq!(&ours, &reference_graph6(&g));
        prop_assert_eq!(parse_graph6(&ours).unwrap(), g.clone());
        prop_assert_eq!(parse_graph(&ours, GraphFormat::Graph6).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        let text = to_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn kr_partition_text_round_trip(p in arb_kr_partition(15)) {
        let back = WeakPartition::parse(&p.to_text(), p.flavor(), p.order()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn kmn_partition_text_round_trip(p in arb_kmn_partition(15)) {
        let back = WeakPartition::parse(&p.to_text(), p.flavor(), p.order()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn vertex_set_round_trip(vs in proptest::collection::btree_set(0usize..200, 0..30)) {
        let d: VertexSet = vs.into_iter().collect();
        prop_assert_eq!(parse_vertex_set(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn certificate_round_trip(g in arb_graph(10)) {
        let cert = find_eod_set(&g, &SearchOptions::default()).unwrap();
        let back: EodCertificate = cert.to_string().parse().unwrap();
        prop_assert_eq!(back.found(), cert.found());
        prop_assert_eq!(back.to_string(), cert.to_string());
    }
}

#[test]
fn trace_text_round_trip() {
    for text in [
        "(leaf 3)",
        "(type-b 0 0 (leaf 3) (leaf 3))",
        "(type-a 2 3-4 3-4 flipped (leaf 3) (type-b 0 0 (leaf 3) (leaf 3)))",
    ] {
        let trace: TreeTrace = text.parse().unwrap();
        assert_eq!(trace.to_string(), text);
    }
}
