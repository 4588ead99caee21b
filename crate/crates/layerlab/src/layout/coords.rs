//! Grid coordinates for an ordered layering: the layer fixes x, the
//! position within the layer fixes y.

use std::collections::BTreeMap;

use super::LayeredOrdering;
use crate::graph::NodeId;

#[derive(Debug, Clone, PartialEq)]
pub struct GridPositions {
    spacing: f64,
    positions: BTreeMap<NodeId, (f64, f64)>,
}

impl GridPositions {
    pub fn get(&self, node: NodeId) -> Option<(f64, f64)> {
        self.positions.get(&node).copied()
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Iterate in ascending node id.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, (f64, f64))> + '_ {
        self.positions.iter().map(|(&n, &p)| (n, p))
    }

    /// Extent of the occupied grid as (max x, max y); (0, 0) when empty.
    pub fn extent(&self) -> (f64, f64) {
        self.positions.values().fold((0.0, 0.0), |(mx, my), &(x, y)| {
            (mx.max(x), my.max(y))
        })
    }
}

/// Place node at layer l, in-layer index i on (l * spacing, i * spacing).
/// Distinct nodes get distinct coordinates by construction.
pub fn assign_coordinates(lo: &LayeredOrdering, spacing: f64) -> GridPositions {
    assert!(
        spacing.is_finite() && spacing > 0.0,
        "spacing must be positive"
    );
    let mut positions = BTreeMap::new();
    for (li, layer) in lo.layers().iter().enumerate() {
        for (idx, &node) in layer.iter().enumerate() {
            positions.insert(node, (li as f64 * spacing, idx as f64 * spacing));
        }
    }
    GridPositions { spacing, positions }
}
