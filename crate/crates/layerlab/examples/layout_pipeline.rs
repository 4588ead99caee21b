//! The full layered-drawing pipeline on one graph: BFS layer
//! assignment, same-layer edge removal, median-sweep ordering, grid
//! coordinates, and an SVG drawing.
//!
//! ```bash
//! cargo run -p layerlab --example layout_pipeline
//! ```

use layerlab::graph::{Graph, NodeId};
use layerlab::layout::{
    assign_coordinates, assign_layers_bfs, count_crossings_total, median_sweep,
    remove_same_layer_edges, SweepDirection,
};
use layerlab::render::{render_layout_svg, SvgStyle};

fn main() -> anyhow::Result<()> {
    let graph = Graph::from_pairs(
        false,
        11,
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (2, 6),
            (3, 7),
            (4, 7),
            (5, 8),
            (6, 8),
            (7, 9),
            (8, 9),
            (9, 10),
            (3, 4), // same layer, dropped before drawing
        ],
    )?;

    let bfs = assign_layers_bfs(&graph, NodeId(0))?;
    println!("ranks from node 0:\n{}", bfs.ranks);

    let pruned = remove_same_layer_edges(&graph, &bfs.ranks)?;
    println!(
        "pruned {} same-layer edges, {} remain",
        graph.edge_count() - pruned.edge_count(),
        pruned.edge_count()
    );

    let before = count_crossings_total(&pruned, &bfs.ordering)?;
    let swept = median_sweep(&pruned, &bfs.ordering, 1, SweepDirection::Down)?;
    let after = count_crossings_total(&pruned, &swept)?;
    println!(
        "crossings: {} before sweep, {} after\nordering after one down pass:\n{}",
        before.total, after.total, swept
    );

    let positions = assign_coordinates(&swept, 90.0);
    let svg = render_layout_svg(&pruned, &positions, &SvgStyle::default())?;
    let path = std::env::temp_dir().join("layerlab_pipeline.svg");
    std::fs::write(&path, svg.xml())?;
    println!("drawing written to {}", path.display());
    Ok(())
}
