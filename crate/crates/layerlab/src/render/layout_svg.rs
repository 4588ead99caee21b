//! Node-link rendering of a layered drawing on grid positions.

use super::{xml_escape, RenderError, SvgDocument};
use crate::graph::{Graph, NodeId};
use crate::layout::GridPositions;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgStyle {
    pub margin: f64,
    pub node_radius: f64,
    /// false: layers run left to right (x = layer). true: top to bottom.
    pub layers_top_down: bool,
    pub show_labels: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            margin: 40.0,
            node_radius: 14.0,
            layers_top_down: false,
            show_labels: true,
        }
    }
}

/// Stroke width grows linearly with edge weight and is kept in a legible
/// band; unweighted edges use the base width.
fn stroke_width(weight: Option<f64>) -> f64 {
    match weight {
        Some(w) => (1.0 + w).clamp(0.5, 8.0),
        None => 1.0,
    }
}

/// Does `p` lie on the open segment `a`..`b` (excluding the endpoints)?
fn on_segment(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> bool {
    const EPS: f64 = 1e-6;
    let (abx, aby) = (b.0 - a.0, b.1 - a.1);
    let (apx, apy) = (p.0 - a.0, p.1 - a.1);
    let cross = abx * apy - aby * apx;
    let len = (abx * abx + aby * aby).sqrt();
    if len < EPS || cross.abs() > EPS * len.max(1.0) {
        return false;
    }
    let t = (apx * abx + apy * aby) / (len * len);
    t > EPS && t < 1.0 - EPS
}

/// Draw the graph with straight edges and labeled circles. Arrowheads
/// appear only on directed graphs. A node whose center sits on another
/// edge's line is reported as a warning, since such a drawing misreads as
/// the edge ending there.
pub fn render_layout_svg(
    g: &Graph,
    pos: &GridPositions,
    style: &SvgStyle,
) -> Result<SvgDocument, RenderError> {
    let place = |id: NodeId| -> Result<(f64, f64), RenderError> {
        let (x, y) = pos.get(id).ok_or(RenderError::MissingPosition(id))?;
        Ok(if style.layers_top_down { (y, x) } else { (x, y) })
    };
    let mut coords: Vec<(NodeId, (f64, f64))> = Vec::with_capacity(g.node_count());
    for n in g.nodes() {
        coords.push((n.id, place(n.id)?));
    }
    let (max_x, max_y) = coords
        .iter()
        .fold((0.0f64, 0.0f64), |(mx, my), &(_, (x, y))| (mx.max(x), my.max(y)));
    let m = style.margin;
    let width = max_x + 2.0 * m;
    let height = max_y + 2.0 * m;

    let mut warnings = Vec::new();
    for e in g.edges() {
        let a = coords.iter().find(|(id, _)| *id == e.source).expect("checked").1;
        let b = coords.iter().find(|(id, _)| *id == e.target).expect("checked").1;
        for &(id, p) in &coords {
            if id != e.source && id != e.target && on_segment(a, b, p) {
                warnings.push(format!(
                    "edge ({}, {}) passes through the center of node {}",
                    e.source, e.target, id
                ));
            }
        }
    }

    let mut body = String::new();
    if g.directed() {
        body.push_str(
            "  <defs>\n    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" \
             markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\n      \
             <polygon points=\"0,0 10,5 0,10\" fill=\"#444444\"/>\n    </marker>\n  </defs>\n",
        );
    }

    body.push_str("  <g stroke=\"#444444\" fill=\"none\">\n");
    for e in g.edges() {
        let (ax, ay) = coords.iter().find(|(id, _)| *id == e.source).expect("checked").1;
        let (bx, by) = coords.iter().find(|(id, _)| *id == e.target).expect("checked").1;
        // Pull the endpoints back to the circle rims so arrowheads stay
        // visible.
        let (dx, dy) = (bx - ax, by - ay);
        let dist = (dx * dx + dy * dy).sqrt();
        let (ax, ay, bx, by) = if dist > 2.0 * style.node_radius {
            let ux = dx / dist;
            let uy = dy / dist;
            (
                ax + ux * style.node_radius,
                ay + uy * style.node_radius,
                bx - ux * style.node_radius,
                by - uy * style.node_radius,
            )
        } else {
            (ax, ay, bx, by)
        };
        let marker = if g.directed() {
            " marker-end=\"url(#arrow)\""
        } else {
            ""
        };
        body.push_str(&format!(
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke-width=\"{}\"{marker}/>\n",
            m + ax,
            m + ay,
            m + bx,
            m + by,
            stroke_width(e.weight),
        ));
    }
    body.push_str("  </g>\n");

    body.push_str("  <g fill=\"#eef2fb\" stroke=\"#2b4a87\" stroke-width=\"1\">\n");
    for &(_, (x, y)) in &coords {
        body.push_str(&format!(
            "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n",
            m + x,
            m + y,
            style.node_radius
        ));
    }
    body.push_str("  </g>\n");

    if style.show_labels {
        body.push_str(
            "  <g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" fill=\"#111111\">\n",
        );
        for &(id, (x, y)) in &coords {
            body.push_str(&format!(
                "    <text x=\"{}\" y=\"{}\">{}</text>\n",
                m + x,
                m + y + 4.0,
                xml_escape(&g.display_name(id))
            ));
        }
        body.push_str("  </g>\n");
    }

    Ok(SvgDocument::new(width, height, body, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::{assign_coordinates, LayeredOrdering};

    fn ordering(layers: &[&[u32]]) -> LayeredOrdering {
        LayeredOrdering::from_layers(
            layers
                .iter()
                .map(|l| l.iter().map(|&n| NodeId(n)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn minimal_document_has_one_circle_and_label() {
        let g = Graph::from_pairs(false, 1, &[]).unwrap();
        let pos = assign_coordinates(&ordering(&[&[0]]), 100.0);
        let svg = render_layout_svg(&g, &pos, &SvgStyle::default()).unwrap().xml();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<text").count(), 1);
        assert_eq!(svg.matches("<line").count(), 0);
    }

    #[test]
    fn element_counts_match_graph_size() {
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
        let lo = ordering(&[&[0], &[3, 1], &[2, 7, 6, 4, 8, 9], &[5]]);
        let pos = assign_coordinates(&lo, 100.0);
        let svg = render_layout_svg(&g, &pos, &SvgStyle::default()).unwrap().xml();
        assert_eq!(svg.matches("<circle").count(), 10);
        assert_eq!(svg.matches("<line").count(), 12);
        assert_eq!(svg.matches("<path").count(), 0);
        // Undirected: no arrowheads.
        assert!(!svg.contains("marker-end"));
    }

    #[test]
    fn directed_graphs_get_arrowheads() {
        let g = Graph::from_pairs(true, 2, &[(0, 1)]).unwrap();
        let pos = assign_coordinates(&ordering(&[&[0], &[1]]), 80.0);
        let svg = render_layout_svg(&g, &pos, &SvgStyle::default()).unwrap().xml();
        assert!(svg.contains("marker-end=\"url(#arrow)\""));
        assert!(svg.contains("<marker id=\"arrow\""));
    }

    #[test]
    fn stroke_width_is_monotone_in_weight() {
        let widths: Vec<f64> = [0.5, 1.0, 1.5, 2.5, 3.5]
            .iter()
            .map(|&w| stroke_width(Some(w)))
            .collect();
        for pair in widths.windows(2) {
            assert!(pair[0] < pair[1], "{widths:?} must increase");
        }
        assert_eq!(stroke_width(Some(100.0)), 8.0);
        assert_eq!(stroke_width(None), 1.0);
    }

    #[test]
    fn node_on_an_edge_line_raises_a_warning() {
        // Nodes 0, 1, 2 are collinear on one layer axis and 0-2 is an
        // edge passing straight through node 1.
        let g = Graph::from_pairs(false, 3, &[(0, 2)]).unwrap();
        let lo = ordering(&[&[0], &[1], &[2]]);
        // Force all three onto one line: single-row layers share y = 0.
        let pos = assign_coordinates(&lo, 90.0);
        let doc = render_layout_svg(&g, &pos, &SvgStyle::default()).unwrap();
        assert_eq!(doc.warnings().len(), 1);
        assert!(doc.warnings()[0].contains("node 1"), "{:?}", doc.warnings());
        assert!(doc.xml().contains("<!-- warning:"));
    }

    #[test]
    fn missing_position_is_an_error() {
        let g = Graph::from_pairs(false, 2, &[(0, 1)]).unwrap();
        let pos = assign_coordinates(&ordering(&[&[0]]), 50.0);
        assert_eq!(
            render_layout_svg(&g, &pos, &SvgStyle::default()).unwrap_err(),
            RenderError::MissingPosition(NodeId(1))
        );
    }

    #[test]
    fn emission_is_deterministic() {
        let g = Graph::from_pairs(true, 3, &[(0, 1), (1, 2)]).unwrap();
        let pos = assign_coordinates(&ordering(&[&[0], &[1], &[2]]), 70.0);
        let a = render_layout_svg(&g, &pos, &SvgStyle::default()).unwrap().xml();
        let b = render_layout_svg(&g, &pos, &SvgStyle::default()).unwrap().xml();
        assert_eq!(a, b);
    }
}
