//! Layered-drawing oracles: breadth-first rank assignment, median-based
//! within-layer ordering, crossing and edge-length metrics, and grid
//! coordinates. Everything here is a pure function of its inputs; seeds
//! make the one randomized helper repeatable.

mod coords;
mod crossings;
mod metrics;
mod ordering;
mod rank;

pub use coords::{assign_coordinates, GridPositions};
pub use crossings::{
    count_crossings_bipartite, count_crossings_total, crossing_pairs, CrossingReport,
};
pub use metrics::{edge_lengths, total_edge_length};
pub use ordering::{median_keys, median_sweep, MedianKey, SweepDirection};
pub use rank::{
    assign_layers_bfs, is_valid_bfs_layering, random_layering, remove_same_layer_edges,
    BfsLayering,
};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::graph::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LayoutError {
    #[error("node {0} is not part of the graph")]
    UnknownNode(NodeId),
    #[error("node {0} has no layer")]
    MissingNode(NodeId),
    #[error("node {0} appears more than once")]
    DuplicateNode(NodeId),
    #[error("edge ({0}, {1}) spans {2} layers; exactly one is required here")]
    LongEdge(NodeId, NodeId, u32),
    #[error("line {0}: {1}")]
    BadText(usize, String),
}

/// Map from node to layer number, with the BFS source recorded when one
/// exists (randomized layerings have none).
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(from = "RankRows", into = "RankRows")]
pub struct RankAssignment {
    source: Option<NodeId>,
    ranks: BTreeMap<NodeId, u32>,
}

/// Serialized form of [`RankAssignment`]: explicit pairs instead of an
/// integer-keyed map, so the JSON stays ordinary.
#[derive(serde::Serialize, serde::Deserialize)]
struct RankRows {
    source: Option<NodeId>,
    ranks: Vec<(NodeId, u32)>,
}

impl From<RankAssignment> for RankRows {
    fn from(r: RankAssignment) -> Self {
        RankRows {
            source: r.source,
            ranks: r.ranks.into_iter().collect(),
        }
    }
}

impl From<RankRows> for RankAssignment {
    fn from(rows: RankRows) -> Self {
        RankAssignment {
            source: rows.source,
            ranks: rows.ranks.into_iter().collect(),
        }
    }
}

impl RankAssignment {
    pub fn new(source: Option<NodeId>) -> Self {
        RankAssignment {
            source,
            ranks: BTreeMap::new(),
        }
    }

    pub fn from_pairs(source: Option<NodeId>, pairs: &[(u32, u32)]) -> Self {
        let mut r = RankAssignment::new(source);
        for &(id, rank) in pairs {
            r.set(NodeId(id), rank);
        }
        r
    }

    pub fn set(&mut self, node: NodeId, rank: u32) {
        self.ranks.insert(node, rank);
    }

    pub fn rank(&self, node: NodeId) -> Option<u32> {
        self.ranks.get(&node).copied()
    }

    pub fn source(&self) -> Option<NodeId> {
        self.source
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn max_rank(&self) -> Option<u32> {
        self.ranks.values().copied().max()
    }

    /// Iterate in ascending node id.
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, u32)> + '_ {
        self.ranks.iter().map(|(&n, &r)| (n, r))
    }

    /// Group into layer lists, ascending node id within each layer. Pass a
    /// layer count to keep trailing empty layers; it is raised if a rank
    /// exceeds it.
    pub fn to_ordering(&self, num_layers: Option<usize>) -> LayeredOrdering {
        let needed = self.max_rank().map(|m| m as usize + 1).unwrap_or(0);
        let n = num_layers.unwrap_or(0).max(needed);
        let mut layers: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for (&node, &rank) in &self.ranks {
            layers[rank as usize].push(node);
        }
        LayeredOrdering { layers }
    }
}

/// `<id> - <rank>` per line, ascending id.
impl fmt::Display for RankAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (&node, &rank) in &self.ranks {
            writeln!(f, "{node} - {rank}")?;
        }
        Ok(())
    }
}

impl FromStr for RankAssignment {
    type Err = LayoutError;

    /// Accepts `<id> - <rank>` and `<id>: <rank>` lines; blank lines skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = RankAssignment::new(None);
        for (i, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (id, rank) = split_pair_line(line)
                .ok_or_else(|| LayoutError::BadText(i + 1, format!("expected <id> - <rank>, got {line:?}")))?;
            let node = NodeId(id);
            if out.rank(node).is_some() {
                return Err(LayoutError::DuplicateNode(node));
            }
            out.set(node, rank);
        }
        Ok(out)
    }
}

/// Split "7 - 3" or "7: 3" into (7, 3).
pub(crate) fn split_pair_line(line: &str) -> Option<(u32, u32)> {
    let (left, right) = line
        .split_once('-')
        .or_else(|| line.split_once(':'))?;
    Some((left.trim().parse().ok()?, right.trim().parse().ok()?))
}

/// Ordered layers: `layers[i][j]` is the node at index `j` of layer `i`.
/// Layers may be empty; a node appears at most once overall.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "Vec<Vec<NodeId>>", into = "Vec<Vec<NodeId>>")]
pub struct LayeredOrdering {
    layers: Vec<Vec<NodeId>>,
}

impl TryFrom<Vec<Vec<NodeId>>> for LayeredOrdering {
    type Error = LayoutError;

    fn try_from(layers: Vec<Vec<NodeId>>) -> Result<Self, LayoutError> {
        LayeredOrdering::from_layers(layers)
    }
}

impl From<LayeredOrdering> for Vec<Vec<NodeId>> {
    fn from(lo: LayeredOrdering) -> Self {
        lo.layers
    }
}

impl LayeredOrdering {
    pub fn from_layers(layers: Vec<Vec<NodeId>>) -> Result<Self, LayoutError> {
        let mut seen = std::collections::BTreeSet::new();
        for layer in &layers {
            for &node in layer {
                if !seen.insert(node) {
                    return Err(LayoutError::DuplicateNode(node));
                }
            }
        }
        Ok(LayeredOrdering { layers })
    }

    pub fn layers(&self) -> &[Vec<NodeId>] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &[NodeId] {
        &self.layers[i]
    }

    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    pub fn node_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// node → (layer index, index within layer)
    pub fn positions(&self) -> BTreeMap<NodeId, (usize, usize)> {
        let mut map = BTreeMap::new();
        for (li, layer) in self.layers.iter().enumerate() {
            for (idx, &node) in layer.iter().enumerate() {
                map.insert(node, (li, idx));
            }
        }
        map
    }

    pub fn to_ranks(&self) -> RankAssignment {
        let mut r = RankAssignment::new(None);
        for (li, layer) in self.layers.iter().enumerate() {
            for &node in layer {
                r.set(node, li as u32);
            }
        }
        r
    }

    /// True when both sides have the same layer count and each layer holds
    /// the same node set (order within layers is free).
    pub fn is_layer_permutation_of(&self, other: &LayeredOrdering) -> bool {
        self.layers.len() == other.layers.len()
            && self.layers.iter().zip(&other.layers).all(|(a, b)| {
                let mut a = a.clone();
                let mut b = b.clone();
                a.sort_unstable();
                b.sort_unstable();
                a == b
            })
    }
}

/// `Layer <i>: [a, b, c]` per line.
impl fmt::Display for LayeredOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, layer) in self.layers.iter().enumerate() {
            let body = layer
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            writeln!(f, "Layer {i}: [{body}]")?;
        }
        Ok(())
    }
}

impl FromStr for LayeredOrdering {
    type Err = LayoutError;

    /// Strict form of the Display output: `Layer k: [...]` lines with k
    /// counting up from 0; blank lines skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut layers: Vec<Vec<NodeId>> = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| LayoutError::BadText(i + 1, msg);
            let nodes = parse_layer_line(line, layers.len())
                .map_err(bad)?;
            layers.push(nodes);
        }
        LayeredOrdering::from_layers(layers)
    }
}

/// Parse one `Layer <k>: [a, b]` line, checking `k == expected`.
pub(crate) fn parse_layer_line(line: &str, expected: usize) -> Result<Vec<NodeId>, String> {
    let rest = line
        .strip_prefix("Layer ")
        .ok_or_else(|| format!("expected a line starting with \"Layer\", got {line:?}"))?;
    let (num, body) = rest
        .split_once(':')
        .ok_or_else(|| "missing ':' after the layer number".to_string())?;
    let k: usize = num
        .trim()
        .parse()
        .map_err(|_| format!("bad layer number {:?}", num.trim()))?;
    if k != expected {
        return Err(format!("expected layer {expected}, found layer {k}"));
    }
    let body = body.trim();
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| format!("expected [ ... ] after the layer number, got {body:?}"))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map(NodeId)
                .map_err(|_| format!("bad node id {:?}", tok.trim()))
        })
        .collect()
}
