//! Count edge crossings between two node layers, list the crossing
//! pairs, and show how reordering changes the count.
//!
//! ```bash
//! cargo run -p layerlab --example count_crossings
//! ```

use layerlab::graph::NodeId;
use layerlab::layout::{count_crossings_bipartite, crossing_pairs};

fn ids(raw: &[u32]) -> Vec<NodeId> {
    raw.iter().copied().map(NodeId).collect()
}

fn main() -> anyhow::Result<()> {
    let top = ids(&[6, 4, 7, 8, 9, 2]);
    let bottom = ids(&[5, 10]);
    let edges: Vec<(NodeId, NodeId)> = [(6, 5), (6, 10), (4, 5), (4, 10)]
        .iter()
        .map(|&(a, b)| (NodeId(a), NodeId(b)))
        .collect();

    let total = count_crossings_bipartite(&top, &bottom, &edges)?;
    println!("top    {top:?}\nbottom {bottom:?}\ncrossings: {total}");
    for (e1, e2) in crossing_pairs(&top, &bottom, &edges)? {
        println!("  ({}, {}) crosses ({}, {})", e1.0, e1.1, e2.0, e2.1);
    }

    // these four edges connect {6, 4} to {5, 10} completely, so one
    // crossing survives any reordering; dropping an edge frees it
    let swapped = ids(&[4, 6, 7, 8, 9, 2]);
    let total = count_crossings_bipartite(&swapped, &bottom, &edges)?;
    println!("\nafter swapping 6 and 4 on top: still {total} crossing(s)");
    let without = [edges[0], edges[1], edges[3]];
    let total = count_crossings_bipartite(&top, &bottom, &without)?;
    println!("without edge (4, 5): {total} crossing(s)");

    // the count matches a brute-force scan over edge pairs
    let brute = {
        let pos_top: Vec<usize> = edges
            .iter()
            .map(|e| top.iter().position(|&n| n == e.0).unwrap())
            .collect();
        let pos_bot: Vec<usize> = edges
            .iter()
            .map(|e| bottom.iter().position(|&n| n == e.1).unwrap())
            .collect();
        let mut count = 0u64;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let a = (pos_top[i], pos_bot[i]);
                let b = (pos_top[j], pos_bot[j]);
                if (a.0 < b.0 && a.1 > b.1) || (a.0 > b.0 && a.1 < b.1) {
                    count += 1;
                }
            }
        }
        count
    };
    let fast = count_crossings_bipartite(&top, &bottom, &edges)?;
    assert_eq!(fast, brute);
    println!("fast counter agrees with the O(m^2) scan: {fast}");
    Ok(())
}
