//! Plain-text edge list with a fixed preamble:
//!
//! ```text
//! Graph G has 3 nodes, numbered from 0 to 2. Graph G has 2 edges.
//! This is the list of edge connections:
//! [0, 1],[1, 2]
//! ```
//!
//! The emitter always writes the form above: one-line preamble, then the
//! `[a, b]` pairs comma-separated on a single line. The parser also
//! accepts the preamble split over two lines and pairs separated by
//! newlines instead of commas, since both spellings occur in the wild.
//! The declared range decides whether ids are 0-based or 1-based.

use super::model::{Graph, GraphError, NodeData, NodeId};
use super::scan::Scanner;
use super::EmitOptions;

const FORMAT: &str = "edge-list";

pub fn emit(g: &Graph, opts: EmitOptions) -> Result<String, GraphError> {
    let (lo, hi) = g.id_range().ok_or_else(|| GraphError::NotRepresentable {
        format: FORMAT,
        detail: "the format needs at least one node".into(),
    })?;
    if !g.has_contiguous_ids() {
        return Err(GraphError::NotRepresentable {
            format: FORMAT,
            detail: format!("node ids must form a contiguous range, got gaps in {lo}..={hi}"),
        });
    }
    if !opts.allow_lossy {
        if g.has_weights() {
            return Err(GraphError::LossyEmission {
                format: FORMAT,
                detail: "edge weights".into(),
            });
        }
        if g.has_labels() {
            return Err(GraphError::LossyEmission {
                format: FORMAT,
                detail: "node labels".into(),
            });
        }
        if g.has_timestamps() {
            return Err(GraphError::LossyEmission {
                format: FORMAT,
                detail: "node timestamps".into(),
            });
        }
    }

    let mut out = format!(
        "Graph G has {} nodes, numbered from {} to {}. Graph G has {} edges.\n\
         This is the list of edge connections:\n",
        g.node_count(),
        lo,
        hi,
        g.edge_count()
    );
    let pairs: Vec<String> = g
        .edges()
        .iter()
        .map(|e| format!("[{}, {}]", e.source, e.target))
        .collect();
    if !pairs.is_empty() {
        out.push_str(&pairs.join(","));
        out.push('\n');
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut s = Scanner::new(text, FORMAT);
    s.skip_ws();
    s.expect_str("Graph G has ")?;
    let declared_nodes = s.parse_u32()?;
    s.expect_str(" nodes, numbered from ")?;
    let lo = s.parse_u32()?;
    s.expect_str(" to ")?;
    let hi = s.parse_u32()?;
    s.expect_str(".")?;
    s.skip_ws();
    s.expect_str("Graph G has ")?;
    let declared_edges = s.parse_u32()?;
    s.expect_str(" edges.")?;
    s.skip_ws();
    s.expect_str("This is the list of edge connections:")?;

    if hi < lo || (hi - lo) as usize + 1 != declared_nodes as usize {
        return Err(s.error(format!(
            "preamble declares {declared_nodes} nodes but the range {lo}..={hi} holds {}",
            if hi < lo { 0 } else { (hi - lo) as usize + 1 }
        )));
    }

    let mut pairs = Vec::with_capacity(declared_edges as usize);
    for i in 0..declared_edges {
        s.skip_ws();
        if i > 0 {
            s.eat(',');
            s.skip_ws();
        }
        s.expect_str("[")?;
        s.skip_inline_ws();
        let a = s.parse_u32()?;
        s.skip_inline_ws();
        s.expect_str(",")?;
        s.skip_inline_ws();
        let b = s.parse_u32()?;
        s.skip_inline_ws();
        s.expect_str("]")?;
        for end in [a, b] {
            if end < lo || end > hi {
                return Err(s.error(format!(
                    "edge endpoint {end} is outside the declared range {lo}..={hi}"
                )));
            }
        }
        pairs.push((a, b));
    }
    s.skip_ws();
    if !s.at_end() {
        return Err(s.error(format!(
            "expected end of input after {declared_edges} declared edges"
        )));
    }

    let nodes = (lo..=hi).map(|i| NodeData::plain(NodeId(i))).collect();
    let edges = pairs
        .into_iter()
        .map(|(a, b)| super::model::Edge::plain(NodeId(a), NodeId(b)))
        .collect();
    Graph::build(false, nodes, edges)
}

#[cfg(test)]
mod tests {
    use super::super::model::Edge;
    use super::*;

    #[test]
    fn emits_the_exact_single_line_form() {
        let g = Graph::from_pairs(false, 2, &[(0, 1)]).unwrap();
        assert_eq!(
            emit(&g, EmitOptions::default()).unwrap(),
            "Graph G has 2 nodes, numbered from 0 to 1. Graph G has 1 edges.\n\
             This is the list of edge connections:\n\
             [0, 1]\n"
        );
    }

    #[test]
    fn parses_comma_separated_pairs_on_one_line() {
        let text = "Graph G has 10 nodes, numbered from 0 to 9. Graph G has 10 edges.\n\
                    This is the list of edge connections:\n\
                    [5, 0],[6, 1],[6, 2],[2, 7],[7, 4],[8, 2],[9, 7],[9, 8],[9, 5],[3, 5]\n";
        let g = parse(text).unwrap();
        assert_eq!(g.node_count(), 10);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.edges()[0], Edge::plain(NodeId(5), NodeId(0)));
        assert_eq!(g.edges()[9], Edge::plain(NodeId(3), NodeId(5)));
    }

    #[test]
    fn parses_one_pair_per_line_with_a_one_based_range() {
        let text = "Graph G has 5 nodes, numbered from 1 to 5.\n\
                    Graph G has 4 edges.\n  \n\
                    This is the list of edge connections:\n\
                    [1, 2]\n[2, 3]\n[2, 4]\n[2, 5]\n";
        let g = parse(text).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.id_range(), Some((NodeId(1), NodeId(5))));
        assert_eq!(g.edges()[3], Edge::plain(NodeId(2), NodeId(5)));
    }

    #[test]
    fn round_trips_its_own_output() {
        let g = Graph::from_pairs(false, 4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let text = emit(&g, EmitOptions::default()).unwrap();
        let back = parse(&text).unwrap();
        assert_eq!(back.node_id_set(), g.node_id_set());
        assert_eq!(back.edge_pair_multiset(), g.edge_pair_multiset());
    }

    #[test]
    fn rejects_count_mismatches_and_out_of_range_endpoints() {
        let short = "Graph G has 3 nodes, numbered from 0 to 2. Graph G has 2 edges.\n\
                     This is the list of edge connections:\n[0, 1]\n";
        assert!(matches!(parse(short), Err(GraphError::Parse { .. })));

        let bad_range = "Graph G has 4 nodes, numbered from 0 to 2. Graph G has 0 edges.\n\
                         This is the list of edge connections:\n";
        assert!(matches!(parse(bad_range), Err(GraphError::Parse { .. })));

        let stray = "Graph G has 2 nodes, numbered from 1 to 2. Graph G has 1 edges.\n\
                     This is the list of edge connections:\n[1, 3]\n";
        let err = parse(stray).unwrap_err();
        assert!(err.to_string().contains("outside the declared range"), "{err}");
    }

    #[test]
    fn reports_positions_in_parse_errors() {
        let text = "Graph G has 2 nodes, numbered from 0 to 1. Graph G has 1 edges.\n\
                    This is the list of edge connections:\n[0; 1]\n";
        match parse(text) {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn refuses_lossy_emission_unless_asked() {
        let mut g = Graph::from_pairs(false, 2, &[]).unwrap();
        g.add_edge(Edge {
            source: NodeId(0),
            target: NodeId(1),
            weight: Some(2.5),
        })
        .unwrap();
        assert!(matches!(
            emit(&g, EmitOptions::default()),
            Err(GraphError::LossyEmission { .. })
        ));
        let text = emit(&g, EmitOptions { allow_lossy: true }).unwrap();
        assert!(text.contains("[0, 1]"));
    }
}
