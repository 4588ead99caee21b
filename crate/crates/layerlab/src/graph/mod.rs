//! Graph model, interchange formats, generation, and simple properties.
//!
//! Graphs are small (tens of nodes), attribute-light, and immutable once
//! built, so the representation favors clarity: node and edge lists in
//! input order, with validation at construction time.

pub mod dot;
pub mod edge_list;
pub mod generate;
pub mod graphml;
pub mod json_graph;
mod model;
pub(crate) mod scan;

pub use generate::{generate_connected_graph, generate_random_graph, GenerateSpec};
pub use model::{Edge, Graph, GraphError, NodeData, NodeId};

use serde::{Deserialize, Serialize};

/// The four interchange formats the toolkit reads and writes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    /// Plain-text edge list with a fixed two-sentence preamble.
    EdgeListText,
    /// JSON document with `nodes` and `edges` arrays.
    JsonGraph,
    /// Minimal GraphML: node ids and edge endpoints only.
    GraphmlSubset,
    /// Minimal DOT: node and edge statements, `penwidth` as the only attribute.
    DotSubset,
}

impl GraphFormat {
    pub const ALL: [GraphFormat; 4] = [
        GraphFormat::EdgeListText,
        GraphFormat::JsonGraph,
        GraphFormat::GraphmlSubset,
        GraphFormat::DotSubset,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::EdgeListText => "edge-list",
            GraphFormat::JsonGraph => "json",
            GraphFormat::GraphmlSubset => "graphml",
            GraphFormat::DotSubset => "dot",
        }
    }
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "edge-list" | "edgelist" | "edge_list" | "txt" => Ok(GraphFormat::EdgeListText),
            "json" | "json-graph" => Ok(GraphFormat::JsonGraph),
            "graphml" | "xml" => Ok(GraphFormat::GraphmlSubset),
            "dot" | "gv" => Ok(GraphFormat::DotSubset),
            other => Err(format!(
                "unknown graph format {other:?}; expected edge-list, json, graphml, or dot"
            )),
        }
    }
}

impl std::fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Controls for lossy emission. Formats that cannot carry an attribute
/// present on the graph refuse to emit unless `allow_lossy` is set.
#[derive(Debug, Clone, Copy, Default)]
pub struct EmitOptions {
    pub allow_lossy: bool,
}

/// Parse `text` as `format` into a validated [`Graph`].
pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::EdgeListText => edge_list::parse(text),
        GraphFormat::JsonGraph => json_graph::parse(text),
        GraphFormat::GraphmlSubset => graphml::parse(text),
        GraphFormat::DotSubset => dot::parse(text),
    }
}

/// Emit `g` in `format`, refusing to drop attributes the format cannot carry.
pub fn emit_graph(g: &Graph, format: GraphFormat) -> Result<String, GraphError> {
    emit_graph_with(g, format, EmitOptions::default())
}

/// Emit `g` in `format` with explicit lossiness control.
pub fn emit_graph_with(
    g: &Graph,
    format: GraphFormat,
    opts: EmitOptions,
) -> Result<String, GraphError> {
    match format {
        GraphFormat::EdgeListText => edge_list::emit(g, opts),
        GraphFormat::JsonGraph => json_graph::emit(g),
        GraphFormat::GraphmlSubset => graphml::emit(g, opts),
        GraphFormat::DotSubset => dot::emit(g, opts),
    }
}
