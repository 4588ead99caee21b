//! Round-trip one graph through every interchange format.
//!
//! ```bash
//! cargo run -p layerlab --example convert_formats
//! ```

use layerlab::graph::{emit_graph, parse_graph, GraphFormat};

fn main() -> anyhow::Result<()> {
    let source = "Graph G has 5 nodes, numbered from 1 to 5. Graph G has 4 edges.\n\
                  This is the list of edge connections:\n\
                  [1, 2],[2, 3],[2, 4],[2, 5]\n";
    let graph = parse_graph(source, GraphFormat::EdgeListText)?;
    println!(
        "parsed {} nodes / {} edges from edge-list text\n",
        graph.node_count(),
        graph.edge_count()
    );

    for format in GraphFormat::ALL {
        let text = emit_graph(&graph, format)?;
        let back = parse_graph(&text, format)?;
        assert_eq!(back.node_id_set(), graph.node_id_set());
        assert_eq!(back.edge_pair_multiset(), graph.edge_pair_multiset());
        println!("--- {format} ({} bytes, round-trips) ---", text.len());
        println!("{text}");
    }
    Ok(())
}
