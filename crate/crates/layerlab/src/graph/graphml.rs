//! Minimal GraphML: topology only.
//!
//! Only `<graph edgedefault=...>`, `<node id=...>`, and
//! `<edge source=... target=...>` are interpreted. Keys, data entries,
//! and every other element are skipped, so attribute-rich corpora still
//! load (their extras are discarded). Node ids may be bare integers or
//! integers with an `n` prefix (`n0`, `n1`, ...).

use std::collections::BTreeMap;

use super::model::{Edge, Graph, GraphError, NodeData, NodeId};
use super::EmitOptions;

const FORMAT: &str = "graphml";

pub fn emit(g: &Graph, opts: EmitOptions) -> Result<String, GraphError> {
    if !opts.allow_lossy {
        for (present, what) in [
            (g.has_weights(), "edge weights"),
            (g.has_labels(), "node labels"),
            (g.has_timestamps(), "node timestamps"),
        ] {
            if present {
                return Err(GraphError::LossyEmission {
                    format: FORMAT,
                    detail: what.into(),
                });
            }
        }
    }
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
    out.push_str(&format!(
        "  <graph id=\"G\" edgedefault=\"{}\">\n",
        if g.directed() { "directed" } else { "undirected" }
    ));
    for n in g.nodes() {
        out.push_str(&format!("    <node id=\"n{}\"/>\n", n.id));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "    <edge source=\"n{}\" target=\"n{}\"/>\n",
            e.source, e.target
        ));
    }
    out.push_str("  </graph>\n</graphml>\n");
    Ok(out)
}

struct Tag {
    name: String,
    attrs: BTreeMap<String, String>,
    closing: bool,
    offset: usize,
}

/// Scan the next tag starting at or after `from`. Quotes inside attribute
/// values are respected when looking for the closing `>`.
fn next_tag(text: &str, from: usize) -> Result<Option<(Tag, usize)>, GraphError> {
    let bytes = text.as_bytes();
    let mut i = from;
    loop {
        match bytes[i..].iter().position(|&b| b == b'<') {
            None => return Ok(None),
            Some(rel) => i += rel,
        }
        let rest = &text[i..];
        // Skip prolog, comments, and doctype declarations.
        if rest.starts_with("<?") {
            match rest.find("?>") {
                Some(end) => {
                    i += end + 2;
                    continue;
                }
                None => return Err(GraphError::parse_at(FORMAT, text, i, "unterminated <? ... ?>")),
            }
        }
        if rest.starts_with("<!--") {
            match rest.find("-->") {
                Some(end) => {
                    i += end + 3;
                    continue;
                }
                None => return Err(GraphError::parse_at(FORMAT, text, i, "unterminated comment")),
            }
        }
        if rest.starts_with("<!") {
            match rest.find('>') {
                Some(end) => {
                    i += end + 1;
                    continue;
                }
                None => return Err(GraphError::parse_at(FORMAT, text, i, "unterminated <! ... >")),
            }
        }
        break;
    }

    let start = i;
    let mut j = i + 1;
    let closing = text[j..].starts_with('/');
    if closing {
        j += 1;
    }
    let name_start = j;
    while j < text.len() {
        let c = bytes[j];
        if c.is_ascii_alphanumeric() || c == b'_' || c == b'-' || c == b':' {
            j += 1;
        } else {
            break;
        }
    }
    if j == name_start {
        return Err(GraphError::parse_at(FORMAT, text, start, "tag without a name"));
    }
    let name = text[name_start..j].to_string();

    let mut attrs = BTreeMap::new();
    loop {
        while j < text.len() && bytes[j].is_ascii_whitespace() {
            j += 1;
        }
        if j >= text.len() {
            return Err(GraphError::parse_at(FORMAT, text, start, "unterminated tag"));
        }
        if bytes[j] == b'>' {
            j += 1;
            break;
        }
        if bytes[j] == b'/' {
            j += 1;
            continue;
        }
        let key_start = j;
        while j < text.len() && bytes[j] != b'=' && !bytes[j].is_ascii_whitespace() && bytes[j] != b'>'
        {
            j += 1;
        }
        let key = text[key_start..j].to_string();
        while j < text.len() && bytes[j].is_ascii_whitespace() {
            j += 1;
        }
        if j >= text.len() || bytes[j] != b'=' {
            // Attribute without a value; tolerate and move on.
            continue;
        }
        j += 1;
        while j < text.len() && bytes[j].is_ascii_whitespace() {
            j += 1;
        }
        if j >= text.len() || (bytes[j] != b'"' && bytes[j] != b'\'') {
            return Err(GraphError::parse_at(
                FORMAT,
                text,
                j.min(text.len()),
                format!("attribute {key} must use a quoted value"),
            ));
        }
        let quote = bytes[j];
        j += 1;
        let val_start = j;
        while j < text.len() && bytes[j] != quote {
            j += 1;
        }
        if j >= text.len() {
            return Err(GraphError::parse_at(FORMAT, text, val_start, "unterminated attribute value"));
        }
        attrs.insert(key, text[val_start..j].to_string());
        j += 1;
    }

    Ok(Some((
        Tag {
            name,
            attrs,
            closing,
            offset: start,
        },
        j,
    )))
}

fn parse_node_ref(text: &str, tag: &Tag, raw: &str) -> Result<NodeId, GraphError> {
    let digits = raw.strip_prefix('n').unwrap_or(raw);
    digits
        .parse::<u32>()
        .map(NodeId)
        .map_err(|_| {
            GraphError::parse_at(
                FORMAT,
                text,
                tag.offset,
                format!("node reference {raw:?} is not an integer or n<integer>"),
            )
        })
}

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut pos = 0;
    let mut directed = false;
    let mut in_graph = false;
    let mut seen_graph = false;
    let mut nodes: Vec<NodeData> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();

    while let Some((tag, next)) = next_tag(text, pos)? {
        pos = next;
        match tag.name.as_str() {
            "graph" if !tag.closing => {
                if seen_graph {
                    return Err(GraphError::parse_at(
                        FORMAT,
                        text,
                        tag.offset,
                        "multiple <graph> elements are not supported",
                    ));
                }
                seen_graph = true;
                in_graph = true;
                directed = match tag.attrs.get("edgedefault").map(String::as_str) {
                    Some("directed") => true,
                    Some("undirected") | None => false,
                    Some(other) => {
                        return Err(GraphError::parse_at(
                            FORMAT,
                            text,
                            tag.offset,
                            format!("unknown edgedefault {other:?}"),
                        ))
                    }
                };
            }
            "graph" => in_graph = false,
            "node" if !tag.closing => {
                if !in_graph {
                    return Err(GraphError::parse_at(
                        FORMAT,
                        text,
                        tag.offset,
                        "<node> outside a <graph> element",
                    ));
                }
                let raw = tag.attrs.get("id").ok_or_else(|| {
                    GraphError::parse_at(FORMAT, text, tag.offset, "<node> without an id")
                })?;
                nodes.push(NodeData::plain(parse_node_ref(text, &tag, raw)?));
            }
            "edge" if !tag.closing => {
                if !in_graph {
                    return Err(GraphError::parse_at(
                        FORMAT,
                        text,
                        tag.offset,
                        "<edge> outside a <graph> element",
                    ));
                }
                let source = tag.attrs.get("source").ok_or_else(|| {
                    GraphError::parse_at(FORMAT, text, tag.offset, "<edge> without a source")
                })?;
                let target = tag.attrs.get("target").ok_or_else(|| {
                    GraphError::parse_at(FORMAT, text, tag.offset, "<edge> without a target")
                })?;
                edges.push(Edge::plain(
                    parse_node_ref(text, &tag, source)?,
                    parse_node_ref(text, &tag, target)?,
                ));
            }
            _ => {}
        }
    }

    if !seen_graph {
        return Err(GraphError::parse_at(FORMAT, text, 0, "no <graph> element found"));
    }
    Graph::build(directed, nodes, edges)
}
