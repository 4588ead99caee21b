//! DOT: `graph`/`digraph` with bare node statements, edge statements, and
//! an optional `penwidth` attribute carrying edge weight.
//!
//! Names survive a round trip: an all-digit name is taken as that node id,
//! any other name is kept as the node label and assigned an id above the
//! largest numeric one. Chained edges (`a -- b -- c`) expand pairwise.

use std::collections::BTreeMap;

use super::model::{Edge, Graph, GraphError, NodeData, NodeId};
use super::scan::Scanner;
use super::EmitOptions;

const FORMAT: &str = "dot";

fn is_bare_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        None => false,
        Some(c) if c.is_ascii_digit() => name.chars().all(|c| c.is_ascii_digit()),
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        Some(_) => false,
    }
}

fn quote_name(name: &str) -> String {
    if is_bare_identifier(name) {
        name.to_string()
    } else {
        format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

pub fn emit(g: &Graph, opts: EmitOptions) -> Result<String, GraphError> {
    if g.has_timestamps() && !opts.allow_lossy {
        return Err(GraphError::LossyEmission {
            format: FORMAT,
            detail: "node timestamps".into(),
        });
    }
    // Names must be unambiguous to parse back into the same ids.
    let mut seen: BTreeMap<String, NodeId> = BTreeMap::new();
    for n in g.nodes() {
        let name = g.display_name(n.id);
        if let Some(prev) = seen.insert(name.clone(), n.id) {
            return Err(GraphError::NotRepresentable {
                format: FORMAT,
                detail: format!("nodes {prev} and {} would both be written as {name:?}", n.id),
            });
        }
        if name.chars().all(|c| c.is_ascii_digit()) && name != n.id.to_string() {
            return Err(GraphError::NotRepresentable {
                format: FORMAT,
                detail: format!("numeric label {name:?} on node {} would change its id", n.id),
            });
        }
    }

    let (keyword, op) = if g.directed() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = format!("{keyword} G {{\n");
    for n in g.nodes() {
        out.push_str(&format!("  {};\n", quote_name(&g.display_name(n.id))));
    }
    for e in g.edges() {
        let src = quote_name(&g.display_name(e.source));
        let dst = quote_name(&g.display_name(e.target));
        match e.weight {
            Some(w) => out.push_str(&format!("  {src} {op} {dst} [penwidth={w}];\n")),
            None => out.push_str(&format!("  {src} {op} {dst};\n")),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn skip_ws_and_comments(s: &mut Scanner<'_>) -> Result<(), GraphError> {
    loop {
        s.skip_ws();
        if s.rest().starts_with("//") {
            let cut = s.rest().find('\n').map(|i| i + 1).unwrap_or(s.rest().len());
            s.advance(cut);
        } else if s.rest().starts_with("/*") {
            match s.rest().find("*/") {
                Some(i) => s.advance(i + 2),
                None => return Err(s.error("unterminated /* comment")),
            }
        } else {
            return Ok(());
        }
    }
}

/// A name token: bare identifier, integer, or double-quoted string.
fn parse_name(s: &mut Scanner<'_>) -> Result<String, GraphError> {
    if s.peek() == Some('"') {
        s.advance(1);
        let mut out = String::new();
        loop {
            match s.peek() {
                None => return Err(s.error("unterminated quoted name")),
                Some('"') => {
                    s.advance(1);
                    return Ok(out);
                }
                Some('\\') => {
                    s.advance(1);
                    match s.peek() {
                        Some(c @ ('"' | '\\')) => {
                            out.push(c);
                            s.advance(1);
                        }
                        _ => return Err(s.error("unsupported escape in quoted name")),
                    }
                }
                Some(c) => {
                    out.push(c);
                    s.advance(c.len_utf8());
                }
            }
        }
    }
    let rest = s.rest();
    let len = rest
        .char_indices()
        .find(|(_, c)| !c.is_ascii_alphanumeric() && *c != '_')
        .map(|(i, _)| i)
        .unwrap_or(rest.len());
    if len == 0 {
        return Err(s.error("expected a node name"));
    }
    let name = rest[..len].to_string();
    s.advance(len);
    Ok(name)
}

/// An attribute value: quoted string or a bare token, which unlike a node
/// name may be a numeric literal ("2.5", "-1").
fn parse_attr_value(s: &mut Scanner<'_>) -> Result<String, GraphError> {
    if s.peek() == Some('"') {
        return parse_name(s);
    }
    let rest = s.rest();
    let len = rest
        .char_indices()
        .find(|(_, c)| !c.is_ascii_alphanumeric() && !matches!(c, '_' | '.' | '-' | '+'))
        .map(|(i, _)| i)
        .unwrap_or(rest.len());
    if len == 0 {
        return Err(s.error("expected an attribute value"));
    }
    let value = rest[..len].to_string();
    s.advance(len);
    Ok(value)
}

/// `[penwidth=<number>]`, the only attribute this reader understands.
fn parse_attr_list(s: &mut Scanner<'_>) -> Result<Option<f64>, GraphError> {
    s.advance(1); // consume '['
    let mut weight = None;
    loop {
        skip_ws_and_comments(s)?;
        match s.peek() {
            Some(']') => {
                s.advance(1);
                return Ok(weight);
            }
            Some(',') => {
                s.advance(1);
                continue;
            }
            None => return Err(s.error("unterminated attribute list")),
            _ => {}
        }
        let key = parse_name(s)?;
        skip_ws_and_comments(s)?;
        if s.peek() != Some('=') {
            return Err(s.error(format!("attribute {key} is missing a value")));
        }
        s.advance(1);
        skip_ws_and_comments(s)?;
        let value = parse_attr_value(s)?;
        if key == "penwidth" {
            let w: f64 = value
                .parse()
                .map_err(|_| s.error(format!("penwidth {value:?} is not a number")))?;
            weight = Some(w);
        } else {
            return Err(s.error(format!("unsupported attribute {key}")));
        }
    }
}

enum Stmt {
    Node(String),
    Edge {
        chain: Vec<String>,
        weight: Option<f64>,
    },
}

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut s = Scanner::new(text, FORMAT);
    skip_ws_and_comments(&mut s)?;
    if s.rest().starts_with("strict") {
        s.advance("strict".len());
        skip_ws_and_comments(&mut s)?;
    }
    let directed = if s.rest().starts_with("digraph") {
        s.advance("digraph".len());
        true
    } else if s.rest().starts_with("graph") {
        s.advance("graph".len());
        false
    } else {
        return Err(s.error("expected graph or digraph"));
    };
    let op = if directed { "->" } else { "--" };

    skip_ws_and_comments(&mut s)?;
    if s.peek() != Some('{') {
        // Optional graph name before the body.
        parse_name(&mut s)?;
        skip_ws_and_comments(&mut s)?;
    }
    if s.peek() != Some('{') {
        return Err(s.error("expected {"));
    }
    s.advance(1);

    let mut stmts: Vec<Stmt> = Vec::new();
    loop {
        skip_ws_and_comments(&mut s)?;
        match s.peek() {
            None => return Err(s.error("unterminated graph body")),
            Some('}') => {
                s.advance(1);
                break;
            }
            Some(';') => {
                s.advance(1);
                continue;
            }
            _ => {}
        }
        let first = parse_name(&mut s)?;
        skip_ws_and_comments(&mut s)?;
        let mut chain = vec![first];
        while s.rest().starts_with(op) {
            s.advance(op.len());
            skip_ws_and_comments(&mut s)?;
            chain.push(parse_name(&mut s)?);
            skip_ws_and_comments(&mut s)?;
        }
        for wrong in ["--", "->"] {
            if wrong != op && s.rest().starts_with(wrong) {
                return Err(s.error(format!(
                    "edge operator {wrong} does not match the graph keyword"
                )));
            }
        }
        let weight = if s.peek() == Some('[') {
            parse_attr_list(&mut s)?
        } else {
            None
        };
        if chain.len() == 1 {
            if weight.is_some() {
                return Err(s.error("penwidth on a node statement"));
            }
            stmts.push(Stmt::Node(chain.pop().expect("single name")));
        } else {
            stmts.push(Stmt::Edge { chain, weight });
        }
    }
    skip_ws_and_comments(&mut s)?;
    if !s.at_end() {
        return Err(s.error("trailing input after closing }"));
    }

    // First pass fixes the id space: digit names claim their own value,
    // everything else is numbered above the largest claimed id.
    let mut order: Vec<String> = Vec::new();
    let register = |name: &str, order: &mut Vec<String>| {
        if !order.iter().any(|n| n == name) {
            order.push(name.to_string());
        }
    };
    for stmt in &stmts {
        match stmt {
            Stmt::Node(name) => register(name, &mut order),
            Stmt::Edge { chain, .. } => {
                for name in chain {
                    register(name, &mut order);
                }
            }
        }
    }
    let mut ids: BTreeMap<String, NodeId> = BTreeMap::new();
    let mut next_id: u32 = order
        .iter()
        .filter_map(|n| n.parse::<u32>().ok())
        .map(|v| v + 1)
        .max()
        .unwrap_or(0);
    let mut nodes: Vec<NodeData> = Vec::new();
    for name in &order {
        let (id, label) = match name.parse::<u32>() {
            Ok(v) => (NodeId(v), None),
            Err(_) => {
                let id = NodeId(next_id);
                next_id += 1;
                (id, Some(name.clone()))
            }
        };
        ids.insert(name.clone(), id);
        nodes.push(NodeData {
            id,
            label,
            timestamp: None,
        });
    }

    let mut edges: Vec<Edge> = Vec::new();
    for stmt in &stmts {
        if let Stmt::Edge { chain, weight } = stmt {
            for pair in chain.windows(2) {
                edges.push(Edge {
                    source: ids[&pair[0]],
                    target: ids[&pair[1]],
                    weight: *weight,
                });
            }
        }
    }
    Graph::build(directed, nodes, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_named_scene_graph() {
        let text = "graph scene {\n  Alice; Bob; Claire;\n  Alice -- Bob;\n  Alice -- Claire;\n}\n";
        let g = parse(text).unwrap();
        assert!(!g.directed());
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.display_name(NodeId(0)), "Alice");
        assert_eq!(g.display_name(NodeId(2)), "Claire");
    }

    #[test]
    fn numeric_names_claim_their_ids() {
        let g = parse("digraph { 5 -> 0; 5 -> extra; }").unwrap();
        let ids = g.node_id_set();
        assert!(ids.contains(&NodeId(5)) && ids.contains(&NodeId(0)));
        // "extra" lands above the largest numeric id.
        assert!(ids.contains(&NodeId(6)));
        assert_eq!(g.display_name(NodeId(6)), "extra");
    }

    #[test]
    fn penwidth_becomes_weight_and_round_trips() {
        let text = "graph G {\n  a -- b [penwidth=2.5];\n}";
        let g = parse(text).unwrap();
        assert_eq!(g.edges()[0].weight, Some(2.5));
        let emitted = emit(&g, EmitOptions::default()).unwrap();
        let back = parse(&emitted).unwrap();
        assert_eq!(back.edges()[0].weight, Some(2.5));
        assert_eq!(back.display_name(back.edges()[0].source), "a");
    }

    #[test]
    fn edge_chains_expand_pairwise() {
        let g = parse("graph { a -- b -- c; }").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn operator_must_match_keyword() {
        let err = parse("graph G { a -> b; }").unwrap_err();
        assert!(err.to_string().contains("->"), "{err}");
        assert!(parse("digraph G { a -- b; }").is_err());
    }

    #[test]
    fn rejects_unknown_attributes_and_trailing_text() {
        assert!(parse("graph { a -- b [color=red]; }").is_err());
        assert!(parse("graph { a; } trailing words").is_err());
    }

    #[test]
    fn quoted_names_allow_spaces() {
        let g = parse("graph { \"Dr. Ed\" -- Alice; }").unwrap();
        assert_eq!(g.display_name(NodeId(0)), "Dr. Ed");
        let emitted = emit(&g, EmitOptions::default()).unwrap();
        assert!(emitted.contains("\"Dr. Ed\""));
    }

    #[test]
    fn emit_refuses_ambiguous_names() {
        let mut g = Graph::new(false);
        g.add_node(NodeData {
            id: NodeId(0),
            label: Some("x".into()),
            timestamp: None,
        })
        .unwrap();
        g.add_node(NodeData {
            id: NodeId(1),
            label: Some("x".into()),
            timestamp: None,
        })
        .unwrap();
        assert!(matches!(
            emit(&g, EmitOptions::default()),
            Err(GraphError::NotRepresentable { .. })
        ));
    }
}
