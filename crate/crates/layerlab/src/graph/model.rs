use std::collections::BTreeSet;
use std::fmt;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Integer node identifier.
///
/// Ids are non-negative and unique within a graph but need not start at
/// zero; the edge-list text format records the range explicitly, so both
/// 0-based and 1-based corpora parse cleanly.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for NodeId {
    fn from(v: u32) -> Self {
        NodeId(v)
    }
}

/// A node with optional attributes. Labels come from generated graphs
/// ("Node 1") and from DOT names ("Alice"); timestamps are calendar dates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeData {
    pub id: NodeId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<NaiveDate>,
}

impl NodeData {
    pub fn plain(id: NodeId) -> Self {
        NodeData {
            id,
            label: None,
            timestamp: None,
        }
    }
}

/// A directed or undirected edge, depending on the owning graph's flag.
/// Weights, when present, are finite and strictly positive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub source: NodeId,
    pub target: NodeId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<f64>,
}

impl Edge {
    pub fn plain(source: NodeId, target: NodeId) -> Self {
        Edge {
            source,
            target,
            weight: None,
        }
    }

    /// Endpoints as an unordered pair (smaller id first).
    pub fn unordered(&self) -> (NodeId, NodeId) {
        if self.source <= self.target {
            (self.source, self.target)
        } else {
            (self.target, self.source)
        }
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("duplicate node id {0}")]
    DuplicateNode(NodeId),
    #[error("edge endpoint {0} is not a node of the graph")]
    DanglingEndpoint(NodeId),
    #[error("edge weight must be finite and positive, got {0}")]
    BadWeight(f64),
    #[error("{format} parse error at line {line}, column {col}: {message}")]
    Parse {
        format: &'static str,
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{format} cannot carry {detail}; emit with allow_lossy to drop it")]
    LossyEmission {
        format: &'static str,
        detail: String,
    },
    #[error("{format} cannot represent this graph: {detail}")]
    NotRepresentable {
        format: &'static str,
        detail: String,
    },
    #[error("infeasible generation request: {0}")]
    Infeasible(String),
}

impl GraphError {
    pub(crate) fn parse_at(
        format: &'static str,
        text: &str,
        offset: usize,
        message: impl Into<String>,
    ) -> Self {
        let (line, col) = line_col(text, offset);
        GraphError::Parse {
            format,
            line,
            col,
            message: message.into(),
        }
    }
}

/// 1-based line and column for a byte offset.
pub(crate) fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let clamped = offset.min(text.len());
    let mut line = 1;
    let mut col = 1;
    for b in text.as_bytes()[..clamped].iter() {
        if *b == b'\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

/// An attribute-light graph: a node list and an edge list in input order,
/// plus a single directedness flag. Self-loops and parallel edges are
/// allowed here; the layout stage rejects what it cannot draw.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Graph {
    directed: bool,
    nodes: Vec<NodeData>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn new(directed: bool) -> Self {
        Graph {
            directed,
            nodes: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Build a graph from parts, validating id uniqueness, edge endpoints,
    /// and weight sanity.
    pub fn build(
        directed: bool,
        nodes: Vec<NodeData>,
        edges: Vec<Edge>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(directed);
        for n in nodes {
            g.add_node(n)?;
        }
        for e in edges {
            g.add_edge(e)?;
        }
        Ok(g)
    }

    /// Convenience constructor: nodes `0..node_count`, unweighted edges.
    pub fn from_pairs(
        directed: bool,
        node_count: u32,
        pairs: &[(u32, u32)],
    ) -> Result<Self, GraphError> {
        let nodes = (0..node_count).map(|i| NodeData::plain(NodeId(i))).collect();
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::plain(NodeId(a), NodeId(b)))
            .collect();
        Graph::build(directed, nodes, edges)
    }

    pub fn add_node(&mut self, node: NodeData) -> Result<(), GraphError> {
        if self.has_node(node.id) {
            return Err(GraphError::DuplicateNode(node.id));
        }
        self.nodes.push(node);
        Ok(())
    }

    pub fn add_edge(&mut self, edge: Edge) -> Result<(), GraphError> {
        for end in [edge.source, edge.target] {
            if !self.has_node(end) {
                return Err(GraphError::DanglingEndpoint(end));
            }
        }
        if let Some(w) = edge.weight {
            if !w.is_finite() || w <= 0.0 {
                return Err(GraphError::BadWeight(w));
            }
        }
        self.edges.push(edge);
        Ok(())
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn nodes(&self) -> &[NodeData] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_node(&self, id: NodeId) -> bool {
        self.nodes.iter().any(|n| n.id == id)
    }

    pub fn node(&self, id: NodeId) -> Option<&NodeData> {
        self.nodes.iter().find(|n| n.id == id)
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes.iter().map(|n| n.id)
    }

    /// Smallest and largest node id, if the graph has any nodes.
    pub fn id_range(&self) -> Option<(NodeId, NodeId)> {
        let min = self.nodes.iter().map(|n| n.id).min()?;
        let max = self.nodes.iter().map(|n| n.id).max()?;
        Some((min, max))
    }

    /// True when the ids form the contiguous range `min..=max`.
    pub fn has_contiguous_ids(&self) -> bool {
        match self.id_range() {
            None => true,
            Some((lo, hi)) => (hi.0 - lo.0) as usize + 1 == self.nodes.len(),
        }
    }

    pub fn has_self_loop(&self) -> bool {
        self.edges.iter().any(|e| e.source == e.target)
    }

    pub fn has_weights(&self) -> bool {
        self.edges.iter().any(|e| e.weight.is_some())
    }

    pub fn has_labels(&self) -> bool {
        self.nodes.iter().any(|n| n.label.is_some())
    }

    pub fn has_timestamps(&self) -> bool {
        self.nodes.iter().any(|n| n.timestamp.is_some())
    }

    /// The name a human-facing format uses for a node: its label when
    /// present, otherwise the id rendered in decimal.
    pub fn display_name(&self, id: NodeId) -> String {
        match self.node(id).and_then(|n| n.label.as_deref()) {
            Some(label) => label.to_string(),
            None => id.to_string(),
        }
    }

    /// Distinct unordered endpoint pairs, ignoring direction, weights, and
    /// parallel duplicates. This is the "simple topology" used when two
    /// graphs are compared for equivalent structure.
    pub fn simple_undirected_pairs(&self) -> BTreeSet<(NodeId, NodeId)> {
        self.edges.iter().map(Edge::unordered).collect()
    }

    /// Edge multiset as (source, target) pairs, for round-trip checks.
    pub fn edge_pair_multiset(&self) -> Vec<(NodeId, NodeId)> {
        let mut pairs: Vec<_> = self.edges.iter().map(|e| (e.source, e.target)).collect();
        pairs.sort();
        pairs
    }

    /// Node id set, for round-trip checks.
    pub fn node_id_set(&self) -> BTreeSet<NodeId> {
        self.node_ids().collect()
    }

    /// A graph is bulbaceous when its edge count is a multiple of its node
    /// count. The empty graph counts as bulbaceous (zero is a multiple of
    /// anything, and an empty graph has zero edges).
    pub fn is_bulbaceous(&self) -> bool {
        let n = self.nodes.len();
        n == 0 || self.edges.len() % n == 0
    }

    /// A graph is flamboyous when no two edges connect the same set of
    /// nodes, direction ignored. Graphs without duplicate edges, including
    /// the empty graph, are flamboyous.
    pub fn is_flamboyous(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.unordered()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_duplicate_ids_and_dangling_edges() {
        let dup = Graph::build(
            false,
            vec![NodeData::plain(NodeId(0)), NodeData::plain(NodeId(0))],
            vec![],
        );
        assert!(matches!(dup, Err(GraphError::DuplicateNode(NodeId(0)))));

        let dangling = Graph::build(
            false,
            vec![NodeData::plain(NodeId(0))],
            vec![Edge::plain(NodeId(0), NodeId(3))],
        );
        assert!(matches!(
            dangling,
            Err(GraphError::DanglingEndpoint(NodeId(3)))
        ));
    }

    #[test]
    fn build_rejects_bad_weights() {
        for w in [0.0, -1.5, f64::NAN, f64::INFINITY] {
            let mut g = Graph::from_pairs(false, 2, &[]).unwrap();
            let got = g.add_edge(Edge {
                source: NodeId(0),
                target: NodeId(1),
                weight: Some(w),
            });
            assert!(matches!(got, Err(GraphError::BadWeight(_))), "weight {w}");
        }
    }

    #[test]
    fn bulbaceous_is_edge_count_multiple_of_node_count() {
        let g = Graph::from_pairs(false, 2, &[(0, 1), (0, 1), (0, 1), (1, 0)]).unwrap();
        assert!(g.is_bulbaceous(), "2 nodes, 4 edges");

        let mut six = Graph::from_pairs(false, 2, &[]).unwrap();
        for _ in 0..6 {
            six.add_edge(Edge::plain(NodeId(0), NodeId(1))).unwrap();
        }
        assert!(six.is_bulbaceous(), "2 nodes, 6 edges");

        let g = Graph::from_pairs(false, 3, &[(0, 1), (0, 1), (0, 2), (1, 2), (1, 2)]).unwrap();
        assert!(!g.is_bulbaceous(), "3 nodes, 5 edges");
    }

    #[test]
    fn flamboyous_rejects_duplicate_unordered_pairs() {
        let g = Graph::from_pairs(false, 3, &[(0, 1), (0, 1), (0, 2), (1, 2), (1, 2)]).unwrap();
        assert!(!g.is_flamboyous());

        let path = Graph::from_pairs(false, 5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(path.is_flamboyous());

        // Direction does not matter: (1, 0) duplicates (0, 1).
        let flipped = Graph::from_pairs(false, 2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!flipped.is_flamboyous());

        let empty = Graph::new(false);
        assert!(empty.is_flamboyous());
        assert!(empty.is_bulbaceous());
    }

    #[test]
    fn simple_pairs_collapse_direction_and_duplicates() {
        let g = Graph::from_pairs(true, 3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        let pairs = g.simple_undirected_pairs();
        assert_eq!(pairs.len(), 2);
        assert!(pairs.contains(&(NodeId(0), NodeId(1))));
        assert!(pairs.contains(&(NodeId(1), NodeId(2))));
    }
}
