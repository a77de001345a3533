use proptest::prelude::*;
use threshold_dim::io::{parse_edge_list, to_dot, write_edge_list};
use threshold_dim::Graph;

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..14).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
            let mut edges: Vec<(usize, usize)> =
                pairs.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn canonical_text_round_trips(g in graph()) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn edge_order_and_orientation_do_not_matter(g in graph()) {
        let mut lines: Vec<String> = g.edges().map(|(u, v)| format!("{v} {u}")).collect();
        lines.reverse();
        let text = format!("{} {}\n{}\n", g.order(), g.edge_count(), lines.join("\n"));
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn dot_lists_every_vertex_and_edge(g in graph()) {
        let dot = to_dot(&g, &[0]);
        prop_assert_eq!(dot.matches(" -- ").count(), g.edge_count());
        prop_assert!(dot.contains("  0 [color=black];"));
    }
}
