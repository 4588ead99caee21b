//! Edge-crossing counts between consecutive layers.
//!
//! Two edges of a bipartite gap cross when the order of their endpoints
//! flips between the sides; pairs sharing an endpoint never cross. The
//! count runs in O(E log E) via an accumulator tree, and
//! [`crossing_pairs`] enumerates the actual pairs for small instances.

use std::collections::BTreeMap;

use super::{LayeredOrdering, LayoutError};
use crate::graph::{Graph, NodeId};

/// Crossing totals per consecutive-layer gap; `per_gap[i]` covers layers
/// `i` and `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingReport {
    pub per_gap: Vec<u64>,
    pub total: u64,
}

/// Count of inserted values strictly greater than a query, maintained in
/// logarithmic time.
struct AccumulatorTree {
    tree: Vec<u64>,
    inserted: u64,
}

impl AccumulatorTree {
    fn new(size: usize) -> Self {
        AccumulatorTree {
            tree: vec![0; size + 1],
            inserted: 0,
        }
    }

    /// How many inserted values are <= value (0-based value).
    fn prefix(&self, value: usize) -> u64 {
        let mut i = value + 1;
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    }

    fn insert(&mut self, value: usize) {
        self.inserted += 1;
        let mut i = value + 1;
        while i < self.tree.len() {
            self.tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }
}

/// Count inversions among position pairs: unordered pairs where the order
/// of the first components opposes the order of the second. Pairs equal
/// in either component (shared endpoint) contribute nothing.
fn count_inversions(pairs: &mut Vec<(usize, usize)>, b_size: usize) -> u64 {
    // Sorting by (a, b) makes every earlier entry have a' <= a; a crossing
    // is then exactly an earlier b' > b. Ties in a are sorted by b, so
    // same-source pairs land in the prefix and are never counted.
    pairs.sort_unstable();
    let mut tree = AccumulatorTree::new(b_size);
    let mut total = 0;
    for &(_, b) in pairs.iter() {
        total += tree.inserted - tree.prefix(b);
        tree.insert(b);
    }
    total
}

fn position_map(order: &[NodeId]) -> Result<BTreeMap<NodeId, usize>, LayoutError> {
    let mut map = BTreeMap::new();
    for (i, &node) in order.iter().enumerate() {
        if map.insert(node, i).is_some() {
            return Err(LayoutError::DuplicateNode(node));
        }
    }
    Ok(map)
}

/// Resolve an edge to (index in A, index in B), accepting either endpoint
/// orientation.
fn bipartite_positions(
    pos_a: &BTreeMap<NodeId, usize>,
    pos_b: &BTreeMap<NodeId, usize>,
    edge: (NodeId, NodeId),
) -> Result<(usize, usize), LayoutError> {
    let (u, v) = edge;
    match (pos_a.get(&u), pos_b.get(&v)) {
        (Some(&a), Some(&b)) => Ok((a, b)),
        _ => match (pos_a.get(&v), pos_b.get(&u)) {
            (Some(&a), Some(&b)) => Ok((a, b)),
            _ => {
                let missing = if pos_a.contains_key(&u) || pos_b.contains_key(&u) {
                    v
                } else {
                    u
                };
                Err(LayoutError::UnknownNode(missing))
            }
        },
    }
}

/// Crossings between two ordered sides of a bipartite gap.
pub fn count_crossings_bipartite(
    order_a: &[NodeId],
    order_b: &[NodeId],
    edges: &[(NodeId, NodeId)],
) -> Result<u64, LayoutError> {
    let pos_a = position_map(order_a)?;
    let pos_b = position_map(order_b)?;
    let mut pairs = Vec::with_capacity(edges.len());
    for &edge in edges {
        pairs.push(bipartite_positions(&pos_a, &pos_b, edge)?);
    }
    Ok(count_inversions(&mut pairs, order_b.len()))
}

/// Every crossing pair of edges, in input-order pairs (i < j), edges kept
/// in their input orientation. Quadratic; meant for answers and debugging.
pub fn crossing_pairs(
    order_a: &[NodeId],
    order_b: &[NodeId],
    edges: &[(NodeId, NodeId)],
) -> Result<Vec<((NodeId, NodeId), (NodeId, NodeId))>, LayoutError> {
    let pos_a = position_map(order_a)?;
    let pos_b = position_map(order_b)?;
    let resolved: Vec<(usize, usize)> = edges
        .iter()
        .map(|&e| bipartite_positions(&pos_a, &pos_b, e))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for i in 0..resolved.len() {
        for j in (i + 1)..resolved.len() {
            let (a1, b1) = resolved[i];
            let (a2, b2) = resolved[j];
            // The product form is negative exactly for opposing orders and
            // zero whenever an endpoint is shared.
            if (a1 as i64 - a2 as i64) * (b1 as i64 - b2 as i64) < 0 {
                out.push((edges[i], edges[j]));
            }
        }
    }
    Ok(out)
}

/// Total crossings of a layered ordering: the sum over consecutive-layer
/// gaps. The ordering must place every graph node exactly once and every
/// edge must span exactly one gap; longer (or same-layer) edges are
/// rejected, not split.
pub fn count_crossings_total(
    g: &Graph,
    lo: &LayeredOrdering,
) -> Result<CrossingReport, LayoutError> {
    let positions = lo.positions();
    for id in g.node_ids() {
        if !positions.contains_key(&id) {
            return Err(LayoutError::MissingNode(id));
        }
    }
    for layer in lo.layers() {
        for &node in layer {
            if !g.has_node(node) {
                return Err(LayoutError::UnknownNode(node));
            }
        }
    }

    let gaps = lo.num_layers().saturating_sub(1);
    let mut gap_pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); gaps];
    for e in g.edges() {
        let (ls, is_) = positions[&e.source];
        let (lt, it) = positions[&e.target];
        let span = ls.abs_diff(lt);
        if span != 1 {
            return Err(LayoutError::LongEdge(e.source, e.target, span as u32));
        }
        // Orient each edge upper-layer-first within its gap.
        let (gap, a, b) = if ls < lt { (ls, is_, it) } else { (lt, it, is_) };
        gap_pairs[gap].push((a, b));
    }

    let mut per_gap = Vec::with_capacity(gaps);
    for (gap, mut pairs) in gap_pairs.into_iter().enumerate() {
        let b_size = lo.layer(gap + 1).len();
        per_gap.push(count_inversions(&mut pairs, b_size));
    }
    let total = per_gap.iter().sum();
    Ok(CrossingReport { per_gap, total })
}
