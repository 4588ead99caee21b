//! Scoring: compare a parsed answer against the oracle's truth.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use super::parse::ParsedAnswer;
use super::pool::{GenerationConstraints, GraphProperty, TaskPayload};
use super::{CrossingDelta, HarnessError, ScoreOutcome, TaskKind};
use crate::graph::{parse_graph, Graph, GraphFormat, NodeId};
use crate::layout::{
    assign_layers_bfs, count_crossings_bipartite, count_crossings_total, is_valid_bfs_layering,
    total_edge_length, LayeredOrdering, RankAssignment,
};

/// The reference value an answer is scored against, saved alongside
/// every transcript record so scoring can be rerun offline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TruthValue {
    Ranks {
        graph: Graph,
        source: NodeId,
        ranks: RankAssignment,
    },
    Ordering {
        graph: Graph,
        input: LayeredOrdering,
        input_crossings: u64,
    },
    Number {
        value: i64,
    },
    Constraints {
        constraints: GenerationConstraints,
    },
    Conversion {
        graph: Graph,
        format: GraphFormat,
    },
    Topology {
        graph: Graph,
    },
    Names {
        names: Vec<String>,
    },
    SvgShape {
        nodes: usize,
        edges: usize,
    },
    YesNo {
        value: bool,
    },
}

/// Compute the truth for one instance.
pub fn truth_of(payload: &TaskPayload) -> Result<TruthValue, HarnessError> {
    Ok(match payload {
        TaskPayload::LayerAssignment { graph, source } => {
            let layering = assign_layers_bfs(graph, *source)?;
            TruthValue::Ranks {
                graph: graph.clone(),
                source: *source,
                ranks: layering.ranks,
            }
        }
        TaskPayload::SortLayers { graph, ordering } => {
            let input_crossings = count_crossings_total(graph, ordering)?.total;
            TruthValue::Ordering {
                graph: graph.clone(),
                input: ordering.clone(),
                input_crossings,
            }
        }
        TaskPayload::CountCrossings { gap } => TruthValue::Number {
            value: count_crossings_bipartite(&gap.side_a, &gap.side_b, &gap.edges)? as i64,
        },
        TaskPayload::EdgeLength { graph, ordering } => TruthValue::Number {
            value: total_edge_length(graph, &ordering.to_ranks())? as i64,
        },
        TaskPayload::GraphGeneration { constraints } => TruthValue::Constraints {
            constraints: constraints.clone(),
        },
        TaskPayload::FormatConversion { graph, to, .. } => TruthValue::Conversion {
            graph: graph.clone(),
            format: *to,
        },
        TaskPayload::PropertyCheck { property, graph } => TruthValue::YesNo {
            value: match property {
                GraphProperty::Bulbaceous => graph.is_bulbaceous(),
                GraphProperty::Flamboyous => graph.is_flamboyous(),
            },
        },
        TaskPayload::GraphFromScene { truth, .. } => TruthValue::Topology {
            graph: truth.clone(),
        },
        TaskPayload::SceneFromGraph { graph } => TruthValue::Names {
            names: graph
                .nodes()
                .iter()
                .map(|n| graph.display_name(n.id))
                .collect(),
        },
        TaskPayload::SvgFromDot { graph } => TruthValue::SvgShape {
            nodes: graph.node_count(),
            edges: graph.edge_count(),
        },
    })
}

/// Score a parsed answer against the truth. A shape mismatch between
/// the two is a harness bug, not a model failure, and raises an error.
pub fn score(
    task: TaskKind,
    parsed: &ParsedAnswer,
    truth: &TruthValue,
) -> Result<ScoreOutcome, HarnessError> {
    match (truth, parsed) {
        (
            TruthValue::Ranks {
                graph,
                source,
                ranks,
            },
            ParsedAnswer::Ranks { ranks: answer },
        ) => Ok(score_ranks(graph, *source, ranks, answer)),
        (
            TruthValue::Ordering {
                graph,
                input,
                input_crossings,
            },
            ParsedAnswer::Layers { layers },
        ) => score_ordering(graph, input, *input_crossings, layers),
        (TruthValue::Number { value }, ParsedAnswer::Number { value: answer }) => {
            Ok(match answer.cmp(value) {
                std::cmp::Ordering::Equal => ScoreOutcome::Correct,
                std::cmp::Ordering::Greater => ScoreOutcome::IncorrectOver,
                std::cmp::Ordering::Less => ScoreOutcome::IncorrectUnder,
            })
        }
        (TruthValue::Constraints { constraints }, ParsedAnswer::GraphDoc { graph }) => {
            Ok(score_generation(constraints, graph))
        }
        (TruthValue::Conversion { graph, format }, ParsedAnswer::Document { text }) => {
            Ok(score_conversion(graph, *format, text))
        }
        (TruthValue::Topology { graph }, ParsedAnswer::GraphDoc { graph: answer }) => {
            Ok(score_scene_graph(answer, graph))
        }
        (TruthValue::Names { names }, ParsedAnswer::Prose { text }) => {
            Ok(score_name_coverage(names, text))
        }
        (TruthValue::SvgShape { nodes, edges }, ParsedAnswer::Svg { text }) => {
            Ok(score_svg(*nodes, *edges, text))
        }
        (TruthValue::YesNo { value }, ParsedAnswer::YesNo { value: answer }) => {
            Ok(if answer == value {
                ScoreOutcome::Correct
            } else {
                ScoreOutcome::PartialRatio {
                    ratio: 0.0,
                    valid: None,
                }
            })
        }
        (truth, parsed) => Err(HarnessError::AnswerShape {
            task,
            detail: format!(
                "truth {} cannot score answer {}",
                truth_label(truth),
                answer_label(parsed)
            ),
        }),
    }
}

/// |answer - truth| for numeric tasks; None for everything else.
pub fn numeric_abs_error(parsed: &ParsedAnswer, truth: &TruthValue) -> Option<f64> {
    match (truth, parsed) {
        (TruthValue::Number { value }, ParsedAnswer::Number { value: answer }) => {
            Some((answer - value).abs() as f64)
        }
        _ => None,
    }
}

fn truth_label(t: &TruthValue) -> &'static str {
    match t {
        TruthValue::Ranks { .. } => "ranks",
        TruthValue::Ordering { .. } => "ordering",
        TruthValue::Number { .. } => "number",
        TruthValue::Constraints { .. } => "constraints",
        TruthValue::Conversion { .. } => "conversion",
        TruthValue::Topology { .. } => "topology",
        TruthValue::Names { .. } => "names",
        TruthValue::SvgShape { .. } => "svg-shape",
        TruthValue::YesNo { .. } => "yes-no",
    }
}

fn answer_label(p: &ParsedAnswer) -> &'static str {
    match p {
        ParsedAnswer::Ranks { .. } => "ranks",
        ParsedAnswer::Layers { .. } => "layers",
        ParsedAnswer::Number { .. } => "number",
        ParsedAnswer::YesNo { .. } => "yes-no",
        ParsedAnswer::GraphDoc { .. } => "graph",
        ParsedAnswer::Document { .. } => "document",
        ParsedAnswer::Svg { .. } => "svg",
        ParsedAnswer::Prose { .. } => "prose",
    }
}

// ---------------------------------------------------------------------
// per-task scorers

/// Fraction of nodes ranked exactly as the truth ranks them, over all
/// graph nodes, plus a flag for whether the answer is a valid layering
/// in its own right (total, source at 0, each rank adjacent to the
/// previous one).
fn score_ranks(
    graph: &Graph,
    source: NodeId,
    truth: &RankAssignment,
    answer: &[(NodeId, u32)],
) -> ScoreOutcome {
    let correct = answer
        .iter()
        .filter(|(node, rank)| truth.rank(*node) == Some(*rank))
        .count();
    let mut as_assignment = RankAssignment::new(Some(source));
    for &(node, rank) in answer {
        as_assignment.set(node, rank);
    }
    let valid = is_valid_bfs_layering(graph, source, &as_assignment);
    ScoreOutcome::PartialRatio {
        ratio: correct as f64 / graph.node_count().max(1) as f64,
        valid: Some(valid),
    }
}

fn score_ordering(
    graph: &Graph,
    input: &LayeredOrdering,
    input_crossings: u64,
    answer: &LayeredOrdering,
) -> Result<ScoreOutcome, HarnessError> {
    if !answer.is_layer_permutation_of(input) {
        return Ok(ScoreOutcome::malformed("non-permutation"));
    }
    let after = count_crossings_total(graph, answer)?.total;
    let delta = match after.cmp(&input_crossings) {
        std::cmp::Ordering::Less => CrossingDelta::Fewer,
        std::cmp::Ordering::Equal => CrossingDelta::Equal,
        std::cmp::Ordering::Greater => CrossingDelta::More,
    };
    Ok(ScoreOutcome::OrderingDelta { delta })
}

/// Each stated constraint is one check: node count, edge count, and the
/// optional weight floor and timestamp range. All pass = Correct.
fn score_generation(constraints: &GenerationConstraints, graph: &Graph) -> ScoreOutcome {
    let mut passed = 0usize;
    let total = constraints.total_checks();
    if graph.node_count() == constraints.node_count {
        passed += 1;
    }
    if graph.edge_count() == constraints.edge_count {
        passed += 1;
    }
    if let Some(floor) = constraints.min_weight {
        if !graph.edges().is_empty()
            && graph
                .edges()
                .iter()
                .all(|e| e.weight.is_some_and(|w| w > floor))
        {
            passed += 1;
        }
    }
    if let Some((start, end)) = constraints.date_range {
        if !graph.nodes().is_empty()
            && graph
                .nodes()
                .iter()
                .all(|n| n.timestamp.is_some_and(|t| t >= start && t <= end))
        {
            passed += 1;
        }
    }
    if passed == total {
        ScoreOutcome::Correct
    } else {
        ScoreOutcome::PartialRatio {
            ratio: passed as f64 / total as f64,
            valid: None,
        }
    }
}

/// Same node ids and the same unordered edge multiset = Correct;
/// otherwise the fraction of the truth's edge multiset recovered.
fn score_conversion(truth: &Graph, format: GraphFormat, text: &str) -> ScoreOutcome {
    let converted = match parse_graph(text, format) {
        Ok(g) => g,
        Err(e) => return ScoreOutcome::malformed(format!("unparseable-graph: {e}")),
    };
    let nodes_match = converted.node_id_set() == truth.node_id_set();
    let truth_edges = unordered_multiset(truth);
    let answer_edges = unordered_multiset(&converted);
    if nodes_match && truth_edges == answer_edges {
        return ScoreOutcome::Correct;
    }
    let overlap = multiset_intersection(&truth_edges, &answer_edges);
    ScoreOutcome::PartialRatio {
        ratio: if truth_edges.is_empty() {
            // node mismatch got us here; no edges to award
            0.0
        } else {
            overlap as f64 / truth_edges.len() as f64
        },
        valid: None,
    }
}

fn unordered_multiset(g: &Graph) -> Vec<(NodeId, NodeId)> {
    let mut pairs: Vec<(NodeId, NodeId)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (e.source, e.target);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

fn multiset_intersection(a: &[(NodeId, NodeId)], b: &[(NodeId, NodeId)]) -> usize {
    let (mut i, mut j, mut shared) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                shared += 1;
                i += 1;
                j += 1;
            }
        }
    }
    shared
}

/// People are matched by display name, interactions by undirected
/// simple pairs of names: a directed answer naming the same pairs scores
/// Correct against an undirected truth.
pub fn score_scene_graph(answer: &Graph, truth: &Graph) -> ScoreOutcome {
    let truth_names = name_set(truth);
    let answer_names = name_set(answer);
    let truth_pairs = name_pairs(truth);
    let answer_pairs = name_pairs(answer);
    if truth_names == answer_names && truth_pairs == answer_pairs {
        return ScoreOutcome::Correct;
    }
    let overlap = truth_pairs.intersection(&answer_pairs).count();
    ScoreOutcome::PartialRatio {
        ratio: if truth_pairs.is_empty() {
            0.0
        } else {
            overlap as f64 / truth_pairs.len() as f64
        },
        valid: None,
    }
}

fn name_set(g: &Graph) -> BTreeSet<String> {
    g.nodes().iter().map(|n| g.display_name(n.id)).collect()
}

fn name_pairs(g: &Graph) -> BTreeSet<(String, String)> {
    g.edges()
        .iter()
        .filter_map(|e| {
            let a = g.display_name(e.source);
            let b = g.display_name(e.target);
            match a.cmp(&b) {
                std::cmp::Ordering::Less => Some((a, b)),
                std::cmp::Ordering::Greater => Some((b, a)),
                std::cmp::Ordering::Equal => None, // self-interaction carries no pair
            }
        })
        .collect()
}

/// Every node name must appear in the text on word boundaries.
fn score_name_coverage(names: &[String], text: &str) -> ScoreOutcome {
    if names.is_empty() {
        return ScoreOutcome::Correct;
    }
    let found = names.iter().filter(|name| mentions(text, name)).count();
    if found == names.len() {
        ScoreOutcome::Correct
    } else {
        ScoreOutcome::PartialRatio {
            ratio: found as f64 / names.len() as f64,
            valid: None,
        }
    }
}

fn mentions(text: &str, name: &str) -> bool {
    if name.is_empty() {
        return false;
    }
    let bytes = text.as_bytes();
    for (i, _) in text.match_indices(name) {
        let before_ok = i == 0 || !bytes[i - 1].is_ascii_alphanumeric();
        let end = i + name.len();
        let after_ok = end >= bytes.len() || !bytes[end].is_ascii_alphanumeric();
        if before_ok && after_ok {
            return true;
        }
    }
    false
}

/// Two checks: one circle or ellipse per node, and at least one line,
/// path, or polyline per edge. Ill-formed markup is malformed outright.
fn score_svg(nodes: usize, edges: usize, text: &str) -> ScoreOutcome {
    if !xml_well_formed(text) {
        return ScoreOutcome::malformed("svg-not-well-formed");
    }
    let shapes = count_tags(text, &["circle", "ellipse"]);
    let strokes = count_tags(text, &["line", "path", "polyline"]);
    let mut passed = 0;
    if shapes == nodes {
        passed += 1;
    }
    if strokes >= edges {
        passed += 1;
    }
    if passed == 2 {
        ScoreOutcome::Correct
    } else {
        ScoreOutcome::PartialRatio {
            ratio: passed as f64 / 2.0,
            valid: None,
        }
    }
}

fn count_tags(text: &str, names: &[&str]) -> usize {
    names
        .iter()
        .map(|name| {
            let open = format!("<{name}");
            text.match_indices(&open)
                .filter(|(i, _)| {
                    let after = i + open.len();
                    text.as_bytes()
                        .get(after)
                        .is_none_or(|b| !b.is_ascii_alphanumeric())
                })
                .count()
        })
        .sum()
}

/// Minimal well-formedness: every open tag closes in order, quotes
/// inside tags are balanced, and at least one element exists.
/// Declarations, comments, and processing instructions are skipped.
fn xml_well_formed(text: &str) -> bool {
    let bytes = text.as_bytes();
    let mut stack: Vec<&str> = Vec::new();
    let mut seen_element = false;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'<' {
            i += 1;
            continue;
        }
        if text[i..].starts_with("<!--") {
            match text[i..].find("-->") {
                Some(end) => i += end + 3,
                None => return false,
            }
            continue;
        }
        if text[i..].starts_with("<?") {
            match text[i..].find("?>") {
                Some(end) => i += end + 2,
                None => return false,
            }
            continue;
        }
        if text[i..].starts_with("<!") {
            match text[i..].find('>') {
                Some(end) => i += end + 1,
                None => return false,
            }
            continue;
        }
        let closing = text[i..].starts_with("</");
        let name_start = i + if closing { 2 } else { 1 };
        let Some(tag_end) = tag_end(text, i) else {
            return false;
        };
        let name: &str = text[name_start..tag_end]
            .split(|c: char| c.is_whitespace() || c == '/' || c == '>')
            .next()
            .unwrap_or("");
        if name.is_empty() {
            return false;
        }
        if closing {
            if stack.pop() != Some(name) {
                return false;
            }
        } else {
            seen_element = true;
            let self_closing = text[..tag_end].ends_with('/');
            if !self_closing {
                stack.push(name);
            }
        }
        i = tag_end + 1;
    }
    stack.is_empty() && seen_element
}

/// Index of the `>` ending the tag opened at `start`, skipping quoted
/// attribute values.
fn tag_end(text: &str, start: usize) -> Option<usize> {
    let mut quote: Option<u8> = None;
    for (off, &b) in text.as_bytes()[start..].iter().enumerate() {
        match quote {
            Some(q) => {
                if b == q {
                    quote = None;
                }
            }
            None => match b {
                b'"' | b'\'' => quote = Some(b),
                b'>' => return Some(start + off),
                _ => {}
            },
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, NodeData};

    fn labeled(names: &[&str], pairs: &[(u32, u32)], directed: bool) -> Graph {
        Graph::build(
            directed,
            names
                .iter()
                .enumerate()
                .map(|(i, name)| NodeData {
                    id: NodeId(i as u32),
                    label: Some((*name).to_string()),
                    timestamp: None,
                })
                .collect(),
            pairs
                .iter()
                .map(|&(a, b)| Edge::plain(NodeId(a), NodeId(b)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_scoring_counts_exact_matches() {
        let g = Graph::from_pairs(true, 4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let truth = truth_of(&TaskPayload::LayerAssignment {
            graph: g,
            source: NodeId(0),
        })
        .unwrap();
        let parsed = ParsedAnswer::Ranks {
            ranks: vec![
                (NodeId(0), 0),
                (NodeId(1), 1),
                (NodeId(2), 1), // wrong
                (NodeId(3), 3),
            ],
        };
        match score(TaskKind::LayerAssignment, &parsed, &truth).unwrap() {
            ScoreOutcome::PartialRatio { ratio, valid } => {
                assert!((ratio - 0.75).abs() < 1e-9);
                assert_eq!(valid, Some(false));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn perfect_ranks_are_a_full_valid_ratio() {
        let g = Graph::from_pairs(true, 3, &[(0, 1), (1, 2)]).unwrap();
        let payload = TaskPayload::LayerAssignment {
            graph: g,
            source: NodeId(0),
        };
        let truth = truth_of(&payload).unwrap();
        let parsed = ParsedAnswer::Ranks {
            ranks: vec![(NodeId(0), 0), (NodeId(1), 1), (NodeId(2), 2)],
        };
        assert_eq!(
            score(TaskKind::LayerAssignment, &parsed, &truth).unwrap(),
            ScoreOutcome::PartialRatio {
                ratio: 1.0,
                valid: Some(true)
            }
        );
    }

    #[test]
    fn ordering_deltas_compare_crossings() {
        let g = Graph::from_pairs(true, 4, &[(0, 2), (1, 3)]).unwrap();
        let input = LayeredOrdering::from_layers(vec![
            vec![NodeId(0), NodeId(1)],
            vec![NodeId(3), NodeId(2)],
        ])
        .unwrap();
        let payload = TaskPayload::SortLayers {
            graph: g,
            ordering: input.clone(),
        };
        let truth = truth_of(&payload).unwrap();
        // input has 1 crossing; swapping the second layer removes it
        let better = ParsedAnswer::Layers {
            layers: LayeredOrdering::from_layers(vec![
                vec![NodeId(0), NodeId(1)],
                vec![NodeId(2), NodeId(3)],
            ])
            .unwrap(),
        };
        assert_eq!(
            score(TaskKind::SortLayers, &better, &truth).unwrap(),
            ScoreOutcome::OrderingDelta {
                delta: CrossingDelta::Fewer
            }
        );
        let same = ParsedAnswer::Layers { layers: input };
        assert_eq!(
            score(TaskKind::SortLayers, &same, &truth).unwrap(),
            ScoreOutcome::OrderingDelta {
                delta: CrossingDelta::Equal
            }
        );
    }

    #[test]
    fn non_permutations_are_malformed() {
        let g = Graph::from_pairs(true, 3, &[(0, 1), (0, 2)]).unwrap();
        let input = LayeredOrdering::from_layers(vec![
            vec![NodeId(0)],
            vec![NodeId(1), NodeId(2)],
        ])
        .unwrap();
        let truth = truth_of(&TaskPayload::SortLayers {
            graph: g,
            ordering: input,
        })
        .unwrap();
        let shuffled_across = ParsedAnswer::Layers {
            layers: LayeredOrdering::from_layers(vec![
                vec![NodeId(0), NodeId(1)],
                vec![NodeId(2)],
            ])
            .unwrap(),
        };
        assert_eq!(
            score(TaskKind::SortLayers, &shuffled_across, &truth).unwrap(),
            ScoreOutcome::malformed("non-permutation")
        );
    }

    #[test]
    fn scene_graph_scoring_ignores_direction() {
        let truth = labeled(
            &["Alice", "Bob", "Claire"],
            &[(0, 1), (1, 2), (0, 2)],
            false,
        );
        let directed_answer = labeled(
            &["Alice", "Bob", "Claire"],
            &[(1, 0), (2, 1), (0, 2)],
            true,
        );
        assert_eq!(
            score_scene_graph(&directed_answer, &truth),
            ScoreOutcome::Correct
        );
        let partial = labeled(&["Alice", "Bob", "Claire"], &[(0, 1), (1, 2)], false);
        match score_scene_graph(&partial, &truth) {
            ScoreOutcome::PartialRatio { ratio, .. } => {
                assert!((ratio - 2.0 / 3.0).abs() < 1e-9);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn name_coverage_requires_whole_words() {
        let truth = TruthValue::Names {
            names: vec!["Ed".into(), "Alice".into()],
        };
        let full = ParsedAnswer::Prose {
            text: "Alice chatted with Ed.".into(),
        };
        assert_eq!(
            score(TaskKind::SceneFromGraph, &full, &truth).unwrap(),
            ScoreOutcome::Correct
        );
        let sneaky = ParsedAnswer::Prose {
            text: "Alice edited the Edited file.".into(),
        };
        match score(TaskKind::SceneFromGraph, &sneaky, &truth).unwrap() {
            ScoreOutcome::PartialRatio { ratio, .. } => assert!((ratio - 0.5).abs() < 1e-9),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn svg_scoring_counts_shapes() {
        let good = "<svg width=\"10\" height=\"10\"><circle cx=\"1\"/><circle cx=\"2\"/><line x1=\"0\"/></svg>";
        assert_eq!(score_svg(2, 1, good), ScoreOutcome::Correct);
        assert_eq!(
            score_svg(3, 1, good),
            ScoreOutcome::PartialRatio {
                ratio: 0.5,
                valid: None
            }
        );
        assert_eq!(
            score_svg(2, 1, "<svg><circle></svg>"),
            ScoreOutcome::malformed("svg-not-well-formed")
        );
    }

    #[test]
    fn xml_checker_handles_quotes_and_nesting() {
        assert!(xml_well_formed("<svg><g><line a=\"<>\"/></g></svg>"));
        assert!(!xml_well_formed("<svg><g></svg></g>"));
        assert!(!xml_well_formed("<svg>"));
        assert!(!xml_well_formed("no markup"));
        assert!(xml_well_formed("<!-- note --><svg/>"));
    }

    #[test]
    fn conversion_scoring_compares_multisets() {
        let truth = Graph::from_pairs(false, 3, &[(0, 1), (1, 2)]).unwrap();
        let text = crate::graph::emit_graph(&truth, GraphFormat::JsonGraph).unwrap();
        assert_eq!(
            score_conversion(&truth, GraphFormat::JsonGraph, &text),
            ScoreOutcome::Correct
        );
        match score_conversion(&truth, GraphFormat::JsonGraph, "not json") {
            ScoreOutcome::Malformed { reason } => {
                assert!(reason.starts_with("unparseable-graph"), "{reason}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn generation_scoring_checks_each_constraint() {
        let constraints = GenerationConstraints {
            node_count: 3,
            edge_count: 2,
            min_weight: Some(1.0),
            date_range: None,
        };
        let mut edges = vec![
            Edge {
                source: NodeId(0),
                target: NodeId(1),
                weight: Some(2.0),
            },
            Edge {
                source: NodeId(1),
                target: NodeId(2),
                weight: Some(3.0),
            },
        ];
        let nodes: Vec<NodeData> = (0..3).map(|i| NodeData::plain(NodeId(i))).collect();
        let good = Graph::build(false, nodes.clone(), edges.clone()).unwrap();
        assert_eq!(score_generation(&constraints, &good), ScoreOutcome::Correct);
        edges[0].weight = Some(0.5); // violates the floor
        let bad = Graph::build(false, nodes, edges).unwrap();
        match score_generation(&constraints, &bad) {
            ScoreOutcome::PartialRatio { ratio, .. } => {
                assert!((ratio - 2.0 / 3.0).abs() < 1e-9);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn shape_mismatch_is_a_harness_error() {
        let truth = TruthValue::Number { value: 3 };
        let parsed = ParsedAnswer::Prose { text: "3".into() };
        assert!(score(TaskKind::CountCrossings, &parsed, &truth).is_err());
    }
}
