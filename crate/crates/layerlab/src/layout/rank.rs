//! Layer assignment by breadth-first search from a source node.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, VecDeque};

use super::{LayeredOrdering, LayoutError, RankAssignment};
use crate::graph::{Graph, NodeId};

/// Result of [`assign_layers_bfs`]: shortest-path ranks plus the layer
/// lists in discovery order, with unreachable nodes called out instead of
/// silently dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayering {
    pub ranks: RankAssignment,
    /// One list per rank; nodes appear in the order BFS discovered them.
    pub ordering: LayeredOrdering,
    /// Nodes with no path from the source, ascending id.
    pub unreachable: Vec<NodeId>,
}

/// Undirected adjacency in edge-input order: each edge appends to both
/// endpoint lists at its input position. Discovery order (and therefore
/// every layer list) is fixed by this construction.
fn adjacency(g: &Graph) -> BTreeMap<NodeId, Vec<NodeId>> {
    let mut adj: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
    for n in g.nodes() {
        adj.entry(n.id).or_default();
    }
    for e in g.edges() {
        adj.get_mut(&e.source).expect("validated endpoint").push(e.target);
        adj.get_mut(&e.target).expect("validated endpoint").push(e.source);
    }
    adj
}

/// Rank every node reachable from `source` by its unweighted shortest-path
/// distance, treating edges as undirected. Plain FIFO search; neighbor
/// order is edge-input order.
pub fn assign_layers_bfs(g: &Graph, source: NodeId) -> Result<BfsLayering, LayoutError> {
    if !g.has_node(source) {
        return Err(LayoutError::UnknownNode(source));
    }
    let adj = adjacency(g);
    let mut ranks = RankAssignment::new(Some(source));
    let mut layers: Vec<Vec<NodeId>> = vec![vec![source]];
    let mut queue = VecDeque::from([source]);
    ranks.set(source, 0);
    while let Some(v) = queue.pop_front() {
        let next = ranks.rank(v).expect("queued nodes are ranked") + 1;
        for &w in &adj[&v] {
            if ranks.rank(w).is_none() {
                ranks.set(w, next);
                if layers.len() <= next as usize {
                    layers.push(Vec::new());
                }
                layers[next as usize].push(w);
                queue.push_back(w);
            }
        }
    }
    let unreachable: Vec<NodeId> = g
        .node_ids()
        .into_iter()
        .filter(|id| ranks.rank(*id).is_none())
        .collect();
    let ordering = LayeredOrdering::from_layers(layers).expect("BFS visits each node once");
    Ok(BfsLayering {
        ranks,
        ordering,
        unreachable,
    })
}

/// Drop edges whose endpoints share a rank; nodes are untouched.
pub fn remove_same_layer_edges(g: &Graph, ranks: &RankAssignment) -> Result<Graph, LayoutError> {
    let mut out = Graph::new(g.directed());
    for n in g.nodes() {
        out.add_node(n.clone()).expect("source graph has unique ids");
    }
    for e in g.edges() {
        let rs = ranks.rank(e.source).ok_or(LayoutError::MissingNode(e.source))?;
        let rt = ranks.rank(e.target).ok_or(LayoutError::MissingNode(e.target))?;
        if rs != rt {
            out.add_edge(e.clone()).expect("endpoints copied above");
        }
    }
    Ok(out)
}

/// Assign each node a layer drawn uniformly from `0..num_layers`,
/// deterministically in `seed`. Layers may come out empty.
pub fn random_layering(g: &Graph, num_layers: u32, seed: u64) -> RankAssignment {
    assert!(num_layers >= 1, "at least one layer is required");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks = RankAssignment::new(None);
    for id in g.node_ids() {
        ranks.set(id, rng.random_range(0..num_layers));
    }
    ranks
}

/// The weakest property that makes a layering shortest-path-consistent:
/// every node ranked, the source at 0, and every node at rank k > 0
/// adjacent to some node at rank k - 1.
pub fn is_valid_bfs_layering(g: &Graph, source: NodeId, ranks: &RankAssignment) -> bool {
    if ranks.rank(source) != Some(0) {
        return false;
    }
    let adj = adjacency(g);
    for id in g.node_ids() {
        let Some(rank) = ranks.rank(id) else {
            return false;
        };
        if rank > 0
            && !adj[&id]
                .iter()
                .any(|&nb| ranks.rank(nb) == Some(rank - 1))
        {
            return false;
        }
    }
    true
}
