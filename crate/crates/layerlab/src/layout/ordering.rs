//! Within-layer ordering by the median heuristic.
//!
//! One downward pass re-sorts every layer by the median index of its
//! neighbors in the next layer, where all indices are read from the
//! pass's input state (a layer's own re-sort never feeds its neighbors'
//! keys within the same pass). Upward passes mirror this against the
//! previous layer. Sorting is stable and ascending, so all-equal keys
//! leave a layer untouched.

use std::collections::BTreeMap;

use super::{LayeredOrdering, LayoutError};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepDirection {
    /// Key each layer on its neighbors one layer below (higher index).
    Down,
    /// Key each layer on its neighbors one layer above.
    Up,
}

/// Median of a set of in-layer indices, stored doubled so that the
/// even-cardinality mean of two middles stays an exact integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct MedianKey(u64);

impl MedianKey {
    /// No neighbors means key 0 by convention.
    pub const ZERO: MedianKey = MedianKey(0);

    fn of_indices(sorted: &[usize]) -> MedianKey {
        if sorted.is_empty() {
            return MedianKey::ZERO;
        }
        let n = sorted.len();
        let doubled = if n % 2 == 1 {
            2 * sorted[n / 2] as u64
        } else {
            (sorted[n / 2 - 1] + sorted[n / 2]) as u64
        };
        MedianKey(doubled)
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

fn undirected_neighbors(g: &Graph) -> BTreeMap<NodeId, Vec<NodeId>> {
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

fn check_consistent(g: &Graph, lo: &LayeredOrdering) -> Result<(), LayoutError> {
    for layer in lo.layers() {
        for &node in layer {
            if !g.has_node(node) {
                return Err(LayoutError::UnknownNode(node));
            }
        }
    }
    let placed = lo.positions();
    for id in g.node_ids() {
        if !placed.contains_key(&id) {
            return Err(LayoutError::MissingNode(id));
        }
    }
    Ok(())
}

/// Median keys for one layer of `lo`, neighbors read from the reference
/// layer (`layer + 1` for [`SweepDirection::Down`], `layer - 1` for up)
/// in the order `lo` currently holds. Returned in the layer's order.
pub fn median_keys(
    g: &Graph,
    lo: &LayeredOrdering,
    layer: usize,
    direction: SweepDirection,
) -> Result<Vec<(NodeId, MedianKey)>, LayoutError> {
    check_consistent(g, lo)?;
    Ok(keys_unchecked(&undirected_neighbors(g), lo, layer, direction))
}

fn keys_unchecked(
    adj: &BTreeMap<NodeId, Vec<NodeId>>,
    lo: &LayeredOrdering,
    layer: usize,
    direction: SweepDirection,
) -> Vec<(NodeId, MedianKey)> {
    let reference: Option<BTreeMap<NodeId, usize>> = match direction {
        SweepDirection::Down => lo.layers().get(layer + 1),
        SweepDirection::Up => layer.checked_sub(1).and_then(|i| lo.layers().get(i)),
    }
    .map(|l| l.iter().enumerate().map(|(i, &n)| (n, i)).collect());

    lo.layer(layer)
        .iter()
        .map(|&node| {
            let mut indices: Vec<usize> = reference
                .as_ref()
                .map(|positions| {
                    adj[&node]
                        .iter()
                        .filter_map(|nb| positions.get(nb).copied())
                        .collect()
                })
                .unwrap_or_default();
            indices.sort_unstable();
            (node, MedianKey::of_indices(&indices))
        })
        .collect()
}

/// Run `passes` sweeps over the ordering and return the result. Every
/// node keeps its layer; only positions within layers change.
pub fn median_sweep(
    g: &Graph,
    lo: &LayeredOrdering,
    passes: u32,
    direction: SweepDirection,
) -> Result<LayeredOrdering, LayoutError> {
    assert!(passes >= 1, "at least one pass is required");
    check_consistent(g, lo)?;
    let adj = undirected_neighbors(g);
    let mut current = lo.clone();
    for _ in 0..passes {
        let order: Vec<usize> = match direction {
            SweepDirection::Down => (0..current.num_layers()).collect(),
            SweepDirection::Up => (0..current.num_layers()).rev().collect(),
        };
        let mut layers: Vec<Vec<NodeId>> = current.layers().to_vec();
        for li in order {
            // Keys come from `current`, the pass input, so the reference
            // layer is always read before its own re-sort.
            let mut keyed = keys_unchecked(&adj, &current, li, direction);
            keyed.sort_by_key(|&(_, key)| key);
            layers[li] = keyed.into_iter().map(|(n, _)| n).collect();
        }
        current = LayeredOrdering::from_layers(layers).expect("re-sorting preserves the node set");
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ordering(layers: &[&[u32]]) -> LayeredOrdering {
        LayeredOrdering::from_layers(
            layers
                .iter()
                .map(|l| l.iter().map(|&n| NodeId(n)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// 10-node, 12-edge instance with hand-computed keys: in layer 1,
    /// node 1 sees next-layer indices {0..5} (median 2.5) and node 3 sees
    /// {0, 3} (median 1.5), so layer 1 re-sorts to [3, 1].
    fn wide() -> (Graph, LayeredOrdering) {
        let g = Graph::from_pairs(
            false,
            10,
            &[
                (0, 1),
                (1, 2),
                (3, 2),
                (0, 3),
                (4, 5),
                (6, 5),
                (1, 7),
                (1, 6),
                (1, 4),
                (3, 4),
                (1, 8),
                (1, 9),
            ],
        )
        .unwrap();
        let lo = ordering(&[&[0], &[1, 3], &[2, 7, 6, 4, 8, 9], &[5]]);
        (g, lo)
    }

    #[test]
    fn keys_match_hand_computation() {
        let (g, lo) = wide();
        let keys = median_keys(&g, &lo, 1, SweepDirection::Down).unwrap();
        assert_eq!(keys[0], (NodeId(1), MedianKey(5))); // 2.5 doubled
        assert_eq!(keys[1], (NodeId(3), MedianKey(3))); // 1.5 doubled
        assert_eq!(keys[0].1.as_f64(), 2.5);
        assert_eq!(keys[1].1.as_f64(), 1.5);
    }

    #[test]
    fn sweep_reorders_layer_one_and_leaves_ties_alone() {
        let (g, lo) = wide();
        let swept = median_sweep(&g, &lo, 1, SweepDirection::Down).unwrap();
        assert_eq!(
            swept.to_string(),
            "Layer 0: [0]\nLayer 1: [3, 1]\nLayer 2: [2, 7, 6, 4, 8, 9]\nLayer 3: [5]\n"
        );
        // Layer 2 keys are all zero (only 6 and 4 have a next-layer
        // neighbor, and it sits at index 0), so the stable sort holds it.
        let keys = median_keys(&g, &lo, 2, SweepDirection::Down).unwrap();
        assert!(keys.iter().all(|&(_, k)| k == MedianKey::ZERO));
    }

    #[test]
    fn single_layer_is_unchanged() {
        let g = Graph::from_pairs(false, 3, &[]).unwrap();
        let lo = ordering(&[&[2, 0, 1]]);
        let swept = median_sweep(&g, &lo, 1, SweepDirection::Down).unwrap();
        assert_eq!(swept, lo);
    }

    #[test]
    fn sweep_output_is_a_layer_permutation() {
        let (g, lo) = wide();
        for direction in [SweepDirection::Down, SweepDirection::Up] {
            for passes in 1..=3 {
                let swept = median_sweep(&g, &lo, passes, direction).unwrap();
                assert!(swept.is_layer_permutation_of(&lo), "{direction:?} x{passes}");
            }
        }
    }

    #[test]
    fn up_sweep_keys_read_the_previous_layer() {
        let (g, lo) = wide();
        let keys = median_keys(&g, &lo, 3, SweepDirection::Up).unwrap();
        // Node 5's neighbors 4 and 6 sit at indices 3 and 2 of layer 2.
        assert_eq!(keys[0], (NodeId(5), MedianKey(5)));
    }

    #[test]
    fn inconsistent_orderings_are_rejected() {
        let (g, _) = wide();
        let missing = ordering(&[&[0]]);
        assert!(matches!(
            median_sweep(&g, &missing, 1, SweepDirection::Down),
            Err(LayoutError::MissingNode(_))
        ));
        let stray = ordering(&[&[0, 99]]);
        assert!(matches!(
            median_sweep(&g, &stray, 1, SweepDirection::Down),
            Err(LayoutError::UnknownNode(NodeId(99)))
        ));
    }
}
