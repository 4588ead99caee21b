//! JSON graph documents:
//!
//! ```json
//! {
//!   "directed": false,
//!   "nodes": [ {"id": 1, "label": "Node 1", "timestamp": "1970-01-01"} ],
//!   "edges": [ {"source": 1, "target": 2, "weight": 3.0} ]
//! }
//! ```
//!
//! `label`, `timestamp`, `weight`, and `directed` are optional; unknown
//! fields are ignored on input. A document without a `directed` flag is
//! read as directed, matching the source/target wording of the edges.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use super::model::{Edge, Graph, GraphError, NodeData, NodeId};

const FORMAT: &str = "json";
const DATE_FMT: &str = "%Y-%m-%d";

#[derive(Serialize, Deserialize)]
struct Doc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    directed: Option<bool>,
    nodes: Vec<Node>,
    edges: Vec<EdgeRow>,
}

#[derive(Serialize, Deserialize)]
struct Node {
    id: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    timestamp: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRow {
    source: u32,
    target: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<f64>,
}

pub fn emit(g: &Graph) -> Result<String, GraphError> {
    let doc = Doc {
        directed: Some(g.directed()),
        nodes: g
            .nodes()
            .iter()
            .map(|n| Node {
                id: n.id.0,
                label: n.label.clone(),
                timestamp: n.timestamp.map(|d| d.format(DATE_FMT).to_string()),
            })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeRow {
                source: e.source.0,
                target: e.target.0,
                weight: e.weight,
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("graph document serializes");
    text.push('\n');
    Ok(text)
}

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let doc: Doc = serde_json::from_str(text).map_err(|e| GraphError::Parse {
        format: FORMAT,
        line: e.line(),
        col: e.column(),
        message: e.to_string(),
    })?;

    let mut nodes = Vec::with_capacity(doc.nodes.len());
    for n in doc.nodes {
        let timestamp = match n.timestamp {
            None => None,
            Some(raw) => Some(NaiveDate::parse_from_str(&raw, DATE_FMT).map_err(|_| {
                GraphError::Parse {
                    format: FORMAT,
                    line: 0,
                    col: 0,
                    message: format!("node {}: timestamp {raw:?} is not a YYYY-MM-DD date", n.id),
                }
            })?),
        };
        nodes.push(NodeData {
            id: NodeId(n.id),
            label: n.label,
            timestamp,
        });
    }
    let edges = doc
        .edges
        .into_iter()
        .map(|e| Edge {
            source: NodeId(e.source),
            target: NodeId(e.target),
            weight: e.weight,
        })
        .collect();
    Graph::build(doc.directed.unwrap_or(true), nodes, edges)
}
