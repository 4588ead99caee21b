//! Measure rank-distance edge lengths under a BFS layering and show
//! why same-layer edges are removed first.
//!
//! ```bash
//! cargo run -p layerlab --example edge_length_study
//! ```

use layerlab::graph::{Graph, NodeId};
use layerlab::layout::{
    assign_layers_bfs, edge_lengths, remove_same_layer_edges, total_edge_length,
};

fn main() -> anyhow::Result<()> {
    let graph = Graph::from_pairs(
        false,
        8,
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (1, 2), // same layer under BFS from 0, pruned below
            (3, 4),
            (4, 5),
            (3, 6),
            (6, 7),
            (5, 7),
        ],
    )?;
    let bfs = assign_layers_bfs(&graph, NodeId(0))?;
    println!("{}", bfs.ranks);

    // every BFS tree or cross edge spans at most one layer, so the
    // pruned graph's total length equals its edge count
    let pruned = remove_same_layer_edges(&graph, &bfs.ranks)?;
    let lengths = edge_lengths(&pruned, &bfs.ranks)?;
    for (edge, len) in pruned.edges().iter().zip(&lengths) {
        println!("edge ({}, {}) spans {} layer(s)", edge.source, edge.target, len);
    }
    let total = total_edge_length(&pruned, &bfs.ranks)?;
    println!(
        "total edge length {} over {} edges",
        total,
        pruned.edge_count()
    );
    assert_eq!(total, pruned.edge_count() as u64);
    Ok(())
}
