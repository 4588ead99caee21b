//! The oracle: reference answers computed by the layout engine.
//!
//! `oracle_response` returns the text a perfect responder would send for
//! a prompt, in the output format the prompt asks for. These strings
//! feed three places: the embedded answers of in-context examples, the
//! oracle responder, and the closure tests that pipe oracle output back
//! through the parser and scorer.

use super::pool::{GenerationConstraints, GraphProperty, TaskPayload};
use super::{HarnessError, Strategy};
use crate::graph::{emit_graph, GenerateSpec, Graph, GraphFormat};
use crate::layout::{
    assign_coordinates, assign_layers_bfs, count_crossings_bipartite, crossing_pairs,
    median_sweep, total_edge_length, LayeredOrdering, SweepDirection,
};
use crate::render::{render_layout_svg, SvgStyle};

/// Seed for the oracle's generated graphs. Any fixed value works; the
/// point is that the oracle is a function of the payload alone.
const GENERATION_SEED: u64 = 0xD15C0;

pub fn oracle_response(
    strategy: Strategy,
    payload: &TaskPayload,
) -> Result<String, HarnessError> {
    match payload {
        TaskPayload::LayerAssignment { graph, source } => {
            let layering = assign_layers_bfs(graph, *source)?;
            // Discovery order, layer by layer; the separator matches the
            // format line of the strategy's template.
            let sep = match strategy {
                Strategy::Steps => ": ",
                _ => " - ",
            };
            let mut lines = Vec::with_capacity(graph.node_count());
            for (depth, layer) in layering.ordering.layers().iter().enumerate() {
                for node in layer {
                    lines.push(format!("{node}{sep}{depth}"));
                }
            }
            Ok(lines.join("\n"))
        }
        TaskPayload::SortLayers { graph, ordering } => {
            let swept = median_sweep(graph, ordering, 1, SweepDirection::Down)?;
            Ok(swept.to_string().trim_end().to_string())
        }
        TaskPayload::CountCrossings { gap } => match strategy {
            Strategy::Standard => {
                let pairs = crossing_pairs(&gap.side_a, &gap.side_b, &gap.edges)?;
                if pairs.is_empty() {
                    Ok("[]".to_string())
                } else {
                    Ok(pairs
                        .iter()
                        .map(|((a, b), (c, d))| format!("({a}, {b}) and ({c}, {d})"))
                        .collect::<Vec<_>>()
                        .join("\n"))
                }
            }
            Strategy::Steps | Strategy::Icl(_) => {
                let n = count_crossings_bipartite(&gap.side_a, &gap.side_b, &gap.edges)?;
                Ok(n.to_string())
            }
        },
        TaskPayload::EdgeLength { graph, ordering } => {
            let total = total_edge_length(graph, &ordering.to_ranks())?;
            Ok(total.to_string())
        }
        TaskPayload::GraphGeneration { constraints } => {
            let graph = generate_for(constraints)?;
            Ok(emit_graph(&graph, GraphFormat::JsonGraph)?.trim_end().to_string())
        }
        TaskPayload::FormatConversion { graph, to, .. } => {
            Ok(emit_graph(graph, *to)?.trim_end().to_string())
        }
        TaskPayload::PropertyCheck { property, graph } => {
            let holds = match property {
                GraphProperty::Bulbaceous => graph.is_bulbaceous(),
                GraphProperty::Flamboyous => graph.is_flamboyous(),
            };
            Ok(if holds { "Yes." } else { "No." }.to_string())
        }
        TaskPayload::GraphFromScene { truth, .. } => {
            Ok(emit_graph(truth, GraphFormat::DotSubset)?.trim_end().to_string())
        }
        TaskPayload::SceneFromGraph { graph } => Ok(scene_for(graph)),
        TaskPayload::SvgFromDot { graph } => svg_for(graph),
    }
}

fn generate_for(c: &GenerationConstraints) -> Result<Graph, HarnessError> {
    let mut spec = GenerateSpec::new(c.node_count as u32, c.edge_count as u32);
    if let Some(floor) = c.min_weight {
        spec = spec.weight_floor(floor);
    }
    if let Some((start, end)) = c.date_range {
        spec = spec.timestamps(start, end);
    }
    Ok(crate::graph::generate_random_graph(&spec, GENERATION_SEED)?)
}

/// A deterministic office-day description that names every node and
/// narrates one interaction per distinct edge.
fn scene_for(graph: &Graph) -> String {
    let names: Vec<String> = graph
        .nodes()
        .iter()
        .map(|n| graph.display_name(n.id))
        .collect();
    let roster = join_names(&names);
    let mut out = format!("{roster} came into the office in the morning.");
    for (a, b) in graph.simple_undirected_pairs() {
        out.push_str(&format!(
            " During the day, {} spent some time working with {}.",
            graph.display_name(a),
            graph.display_name(b)
        ));
    }
    out.push_str(" By evening everyone had gone home.");
    out
}

fn join_names(names: &[String]) -> String {
    match names.len() {
        0 => "Nobody".to_string(),
        1 => names[0].clone(),
        _ => format!(
            "{} and {}",
            names[..names.len() - 1].join(", "),
            names[names.len() - 1]
        ),
    }
}

/// Draw the graph on a simple grid: node ids in order, chunked into
/// rows. The drawing is not a layered layout, but every node gets a
/// circle and every edge a line, which is what the task asks for.
fn svg_for(graph: &Graph) -> Result<String, HarnessError> {
    let ids: Vec<_> = graph.node_ids().collect();
    if ids.is_empty() {
        return Ok("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"80\" height=\"80\"></svg>"
            .to_string());
    }
    let row_len = (ids.len() as f64).sqrt().ceil() as usize;
    let rows: Vec<Vec<_>> = ids.chunks(row_len).map(<[_]>::to_vec).collect();
    let ordering = LayeredOrdering::from_layers(rows)?;
    let positions = assign_coordinates(&ordering, 90.0);
    let doc = render_layout_svg(graph, &positions, &SvgStyle::default())
        .expect("grid positions cover every node");
    Ok(doc.xml().trim_end().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, NodeData, NodeId};
    use crate::harness::pool::BipartiteGap;

    #[test]
    fn rank_answer_follows_discovery_order() {
        let g = Graph::from_pairs(
            true,
            10,
            &[
                (5, 0),
                (6, 1),
                (6, 2),
                (2, 7),
                (7, 4),
                (8, 2),
                (9, 7),
                (9, 8),
                (9, 5),
                (3, 5),
            ],
        )
        .unwrap();
        let payload = TaskPayload::LayerAssignment {
            graph: g,
            source: NodeId(0),
        };
        let text = oracle_response(Strategy::Standard, &payload).unwrap();
        assert_eq!(
            text,
            "0 - 0\n5 - 1\n9 - 2\n3 - 2\n7 - 3\n8 - 3\n2 - 4\n4 - 4\n6 - 5\n1 - 6"
        );
        let steps = oracle_response(Strategy::Steps, &payload).unwrap();
        assert!(steps.starts_with("0: 0\n5: 1\n"));
    }

    #[test]
    fn crossing_answers_match_strategy_format() {
        let gap = BipartiteGap {
            side_a: vec![NodeId(6), NodeId(4), NodeId(7), NodeId(8), NodeId(9), NodeId(2)],
            side_b: vec![NodeId(5), NodeId(10)],
            edges: vec![
                (NodeId(4), NodeId(5)),
                (NodeId(6), NodeId(5)),
                (NodeId(6), NodeId(10)),
                (NodeId(4), NodeId(10)),
            ],
        };
        let payload = TaskPayload::CountCrossings { gap };
        assert_eq!(
            oracle_response(Strategy::Standard, &payload).unwrap(),
            "(4, 5) and (6, 10)"
        );
        assert_eq!(oracle_response(Strategy::Icl(3), &payload).unwrap(), "1");
    }

    #[test]
    fn empty_crossing_list_is_the_empty_list() {
        let payload = TaskPayload::CountCrossings {
            gap: BipartiteGap {
                side_a: vec![NodeId(0)],
                side_b: vec![NodeId(1)],
                edges: vec![(NodeId(0), NodeId(1))],
            },
        };
        assert_eq!(oracle_response(Strategy::Standard, &payload).unwrap(), "[]");
        assert_eq!(oracle_response(Strategy::Steps, &payload).unwrap(), "0");
    }

    #[test]
    fn generation_answer_meets_its_own_constraints() {
        let constraints = GenerationConstraints {
            node_count: 5,
            edge_count: 7,
            min_weight: Some(2.0),
            date_range: Some((
                chrono::NaiveDate::from_ymd_opt(1970, 1, 1).unwrap(),
                chrono::NaiveDate::from_ymd_opt(1970, 12, 31).unwrap(),
            )),
        };
        let text = oracle_response(
            Strategy::Standard,
            &TaskPayload::GraphGeneration {
                constraints: constraints.clone(),
            },
        )
        .unwrap();
        let g = crate::graph::parse_graph(&text, GraphFormat::JsonGraph).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edge_count(), 7);
        assert!(g.edges().iter().all(|e| e.weight.unwrap() > 2.0));
        assert!(g.nodes().iter().all(|n| n.timestamp.is_some()));
    }

    #[test]
    fn scene_answer_names_every_node() {
        let g = Graph::build(
            false,
            ["Alice", "Bob", "Claire"]
                .iter()
                .enumerate()
                .map(|(i, name)| NodeData {
                    id: NodeId(i as u32),
                    label: Some((*name).to_string()),
                    timestamp: None,
                })
                .collect(),
            vec![Edge::plain(NodeId(0), NodeId(1))],
        )
        .unwrap();
        let scene = scene_for(&g);
        for name in ["Alice", "Bob", "Claire"] {
            assert!(scene.contains(name), "{scene}");
        }
    }

    #[test]
    fn svg_answer_draws_circles_and_lines() {
        let g = Graph::from_pairs(false, 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let svg = svg_for(&g).unwrap();
        assert_eq!(svg.matches("<circle").count(), 5);
        assert!(svg.matches("<line").count() >= 5);
    }
}
