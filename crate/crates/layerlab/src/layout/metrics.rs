//! Edge-length accounting over a layer assignment.

use super::{LayoutError, RankAssignment};
use crate::graph::Graph;

/// Length of every edge in input order: |layer(source) - layer(target)|.
/// Same-layer edges have length 0.
pub fn edge_lengths(g: &Graph, ranks: &RankAssignment) -> Result<Vec<u64>, LayoutError> {
    g.edges()
        .iter()
        .map(|e| {
            let rs = ranks.rank(e.source).ok_or(LayoutError::MissingNode(e.source))?;
            let rt = ranks.rank(e.target).ok_or(LayoutError::MissingNode(e.target))?;
            Ok(rs.abs_diff(rt) as u64)
        })
        .collect()
}

/// Sum of all edge lengths.
pub fn total_edge_length(g: &Graph, ranks: &RankAssignment) -> Result<u64, LayoutError> {
    Ok(edge_lengths(g, ranks)?.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NodeId;
    use crate::layout::LayeredOrdering;

    #[test]
    fn sums_absolute_layer_differences() {
        // 11 nodes over 6 layers; per-edge lengths 2+1+4+3+3+2+3+2 = 20.
        let g = Graph::from_pairs(
            false,
            11,
            &[(0, 6), (1, 6), (7, 4), (3, 8), (2, 9), (2, 10), (0, 10), (10, 4)],
        )
        .unwrap();
        let lo: LayeredOrdering =
            "Layer 0: [0]\nLayer 1: [1, 2, 3, 7]\nLayer 2: [6]\nLayer 3: [10]\nLayer 4: [5, 8, 9]\nLayer 5: [4]\n"
                .parse()
                .unwrap();
        let ranks = lo.to_ranks();
        assert_eq!(
            edge_lengths(&g, &ranks).unwrap(),
            vec![2, 1, 4, 3, 3, 2, 3, 2]
        );
        assert_eq!(total_edge_length(&g, &ranks).unwrap(), 20);
    }

    #[test]
    fn zero_for_single_layer_and_error_for_missing_ranks() {
        let g = Graph::from_pairs(false, 3, &[(0, 1), (1, 2)]).unwrap();
        let flat = RankAssignment::from_pairs(None, &[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(total_edge_length(&g, &flat).unwrap(), 0);

        let partial = RankAssignment::from_pairs(None, &[(0, 0), (1, 1)]);
        assert_eq!(
            total_edge_length(&g, &partial).unwrap_err(),
            LayoutError::MissingNode(NodeId(2))
        );
    }
}
