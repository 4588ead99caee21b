//! Built-in demonstration corpus: task instances for every task kind,
//! with enough instances per task to support in-context prompts, plus a
//! set of recorded chat responses for offline scoring and replay demos.
//!
//! Everything here is plain data. The graphs are small (10-11 nodes)
//! and every layering is proper: each edge spans exactly one layer.

use crate::graph::{Edge, Graph, GraphFormat, NodeData, NodeId};
use crate::harness::{
    BipartiteGap, ExamplePool, GenerationConstraints, GraphProperty, Strategy, TaskInstance,
    TaskKind, TaskPayload,
};
use crate::layout::LayeredOrdering;
use chrono::NaiveDate;

fn digraph(nodes: u32, pairs: &[(u32, u32)]) -> Graph {
    Graph::from_pairs(true, nodes, pairs).expect("demo graph is valid")
}

fn layers(rows: &[&[u32]]) -> LayeredOrdering {
    let rows: Vec<Vec<NodeId>> = rows
        .iter()
        .map(|row| row.iter().map(|&id| NodeId(id)).collect())
        .collect();
    LayeredOrdering::from_layers(rows).expect("demo layering is valid")
}

fn gap(side_a: &[u32], side_b: &[u32], edges: &[(u32, u32)]) -> BipartiteGap {
    BipartiteGap {
        side_a: side_a.iter().map(|&id| NodeId(id)).collect(),
        side_b: side_b.iter().map(|&id| NodeId(id)).collect(),
        edges: edges
            .iter()
            .map(|&(a, b)| (NodeId(a), NodeId(b)))
            .collect(),
    }
}

fn named_graph(names: &[&str], edges: &[(u32, u32, Option<f64>)]) -> Graph {
    let nodes = names
        .iter()
        .enumerate()
        .map(|(i, name)| NodeData {
            id: NodeId(i as u32),
            label: Some((*name).to_string()),
            timestamp: None,
        })
        .collect();
    let edges = edges
        .iter()
        .map(|&(a, b, weight)| Edge {
            source: NodeId(a),
            target: NodeId(b),
            weight,
        })
        .collect();
    Graph::build(false, nodes, edges).expect("demo graph is valid")
}

// ---------------------------------------------------------------------
// layer assignment

fn rank_main_graph() -> Graph {
    digraph(
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
}

fn rank_pool_graphs() -> Vec<Graph> {
    vec![
        digraph(
            11,
            &[
                (0, 1),
                (0, 2),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 1),
                (1, 5),
                (3, 1),
                (3, 2),
                (1, 7),
                (7, 8),
                (8, 3),
                (9, 8),
                (10, 1),
                (10, 6),
            ],
        ),
        digraph(
            11,
            &[
                (0, 7),
                (7, 1),
                (6, 2),
                (2, 5),
                (5, 3),
                (4, 8),
                (8, 3),
                (1, 9),
                (9, 6),
                (10, 1),
                (10, 6),
                (10, 5),
            ],
        ),
        digraph(
            11,
            &[
                (0, 1),
                (1, 2),
                (3, 4),
                (4, 5),
                (5, 6),
                (0, 5),
                (3, 0),
                (3, 2),
                (0, 7),
                (7, 8),
                (1, 8),
                (9, 4),
                (7, 9),
                (2, 5),
                (10, 6),
                (10, 1),
                (10, 3),
            ],
        ),
    ]
}

// ---------------------------------------------------------------------
// sorting layers

fn sort_main() -> (Graph, LayeredOrdering) {
    (
        digraph(
            11,
            &[
                (2, 5),
                (1, 6),
                (6, 3),
                (0, 1),
                (2, 4),
                (2, 7),
                (1, 8),
                (1, 2),
                (1, 9),
                (9, 5),
                (5, 10),
                (7, 10),
            ],
        ),
        layers(&[&[0], &[1], &[6, 8, 2, 9], &[3, 5, 4, 7], &[10]]),
    )
}

fn sort_pool() -> Vec<(Graph, LayeredOrdering)> {
    vec![
        (
            digraph(
                10,
                &[
                    (3, 2),
                    (0, 3),
                    (4, 5),
                    (4, 1),
                    (3, 4),
                    (1, 7),
                    (8, 7),
                    (2, 8),
                    (4, 6),
                    (3, 9),
                ],
            ),
            layers(&[&[0], &[3], &[2, 4, 9], &[8, 5, 1, 6], &[7]]),
        ),
        (
            digraph(
                10,
                &[
                    (0, 1),
                    (3, 2),
                    (4, 3),
                    (4, 5),
                    (2, 7),
                    (8, 6),
                    (7, 8),
                    (4, 9),
                    (0, 4),
                ],
            ),
            layers(&[&[0], &[1, 4], &[3, 5, 9], &[2], &[7], &[8], &[6]]),
        ),
        (
            digraph(
                10,
                &[
                    (2, 5),
                    (1, 4),
                    (3, 1),
                    (9, 2),
                    (9, 3),
                    (9, 8),
                    (9, 6),
                    (9, 7),
                    (0, 9),
                    (6, 1),
                ],
            ),
            layers(&[&[0], &[9], &[2, 3, 8, 6, 7], &[5, 1], &[4]]),
        ),
        (
            digraph(
                10,
                &[
                    (0, 8),
                    (8, 1),
                    (8, 2),
                    (2, 7),
                    (7, 3),
                    (6, 3),
                    (2, 6),
                    (6, 4),
                    (9, 5),
                    (4, 9),
                ],
            ),
            layers(&[&[0], &[8], &[1, 2], &[7, 6], &[3, 4], &[9], &[5]]),
        ),
        (
            digraph(
                11,
                &[
                    (0, 5),
                    (5, 1),
                    (1, 6),
                    (8, 4),
                    (0, 8),
                    (9, 2),
                    (8, 9),
                    (5, 10),
                    (10, 2),
                    (8, 10),
                    (10, 6),
                    (10, 7),
                    (10, 3),
                ],
            ),
            layers(&[&[0], &[5, 8], &[1, 10, 4, 9], &[6, 2, 7, 3]]),
        ),
    ]
}

// ---------------------------------------------------------------------
// counting crossings

fn cross_main() -> BipartiteGap {
    gap(
        &[6, 4, 7, 8, 9, 2],
        &[5, 10],
        &[(4, 5), (6, 5), (6, 10), (4, 10)],
    )
}

fn cross_pool() -> Vec<BipartiteGap> {
    vec![
        gap(&[0], &[5], &[(0, 5)]),
        gap(&[1], &[6, 7], &[(1, 6), (1, 7)]),
        gap(
            &[7, 4, 2, 3],
            &[9, 8, 5],
            &[(3, 8), (3, 9), (4, 9), (2, 8), (2, 5)],
        ),
        gap(&[9], &[5], &[(9, 5)]),
        gap(&[3, 5, 4, 7], &[10], &[(5, 10), (7, 10)]),
    ]
}

// ---------------------------------------------------------------------
// edge length

fn length_main() -> (Graph, LayeredOrdering) {
    (
        digraph(
            11,
            &[
                (0, 6),
                (1, 6),
                (7, 4),
                (3, 8),
                (2, 9),
                (2, 10),
                (0, 10),
                (10, 4),
            ],
        ),
        layers(&[&[0], &[1, 2, 3, 7], &[6], &[10], &[5, 8, 9], &[4]]),
    )
}

fn length_pool() -> Vec<(Graph, LayeredOrdering)> {
    vec![
        (
            digraph(
                11,
                &[
                    (0, 1),
                    (1, 2),
                    (0, 3),
                    (5, 4),
                    (5, 6),
                    (1, 6),
                    (1, 8),
                    (8, 2),
                    (7, 4),
                    (9, 2),
                    (9, 3),
                    (7, 10),
                ],
            ),
            layers(&[&[0], &[1, 5, 7, 9], &[8], &[6, 10], &[3], &[2, 4]]),
        ),
        (
            digraph(
                11,
                &[
                    (0, 1),
                    (1, 2),
                    (3, 2),
                    (0, 3),
                    (7, 6),
                    (7, 1),
                    (1, 6),
                    (4, 1),
                    (4, 3),
                    (1, 8),
                    (2, 8),
                    (2, 5),
                    (9, 5),
                    (9, 6),
                    (3, 10),
                    (1, 10),
                    (0, 10),
                ],
            ),
            layers(&[&[0], &[4, 7, 9], &[3], &[1], &[2, 6, 10], &[5, 8]]),
        ),
        (
            digraph(
                11,
                &[
                    (0, 7),
                    (1, 7),
                    (6, 2),
                    (5, 2),
                    (5, 3),
                    (0, 2),
                    (8, 9),
                    (9, 3),
                    (10, 6),
                    (10, 9),
                ],
            ),
            layers(&[&[0], &[1, 4, 5, 8], &[10], &[6, 9], &[2, 3, 7]]),
        ),
        (
            digraph(
                11,
                &[
                    (0, 6),
                    (6, 1),
                    (7, 1),
                    (7, 2),
                    (7, 4),
                    (9, 3),
                    (4, 9),
                    (5, 10),
                ],
            ),
            // layer 4 is genuinely empty in this one
            layers(&[&[0], &[7], &[2, 4, 6], &[5, 9], &[], &[1, 3, 8, 10]]),
        ),
        (
            digraph(
                11,
                &[
                    (4, 2),
                    (2, 5),
                    (1, 5),
                    (6, 1),
                    (0, 7),
                    (3, 8),
                    (1, 2),
                    (6, 9),
                    (0, 9),
                    (10, 5),
                ],
            ),
            layers(&[&[0], &[3, 4, 6, 7, 10], &[8, 9], &[1], &[2], &[5]]),
        ),
    ]
}

// ---------------------------------------------------------------------
// properties, conversion, generation

fn property_graphs() -> Vec<(GraphProperty, Graph)> {
    vec![
        (
            GraphProperty::Bulbaceous,
            Graph::from_pairs(false, 2, &[(0, 1), (0, 1), (0, 1), (0, 1)]).unwrap(),
        ),
        (
            GraphProperty::Bulbaceous,
            Graph::from_pairs(false, 2, &[(0, 1); 6]).unwrap(),
        ),
        (
            GraphProperty::Flamboyous,
            Graph::from_pairs(false, 3, &[(0, 1), (0, 1), (0, 2), (1, 2), (1, 2)]).unwrap(),
        ),
        (
            GraphProperty::Flamboyous,
            Graph::from_pairs(false, 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        ),
    ]
}

fn convert_main_graph() -> Graph {
    // ids start at 1 so the edge-list text declares a 1-based range
    let nodes = (1..=5).map(|id| NodeData::plain(NodeId(id))).collect();
    let edges = [(1, 2), (2, 3), (2, 4), (2, 5)]
        .iter()
        .map(|&(a, b)| Edge::plain(NodeId(a), NodeId(b)))
        .collect();
    Graph::build(true, nodes, edges).expect("demo graph is valid")
}

// ---------------------------------------------------------------------
// scenes

/// Five colleagues; six undirected interactions.
pub fn office_graph() -> Graph {
    named_graph(
        &["Alice", "Bob", "Claire", "Daniel", "Ed"],
        &[
            (0, 1, None),
            (0, 2, None),
            (1, 3, None),
            (3, 2, None),
            (3, 4, None),
            (2, 4, None),
        ],
    )
}

/// The same topology with interaction strengths as weights.
pub fn office_graph_weighted() -> Graph {
    named_graph(
        &["Alice", "Bob", "Claire", "Daniel", "Ed"],
        &[
            (0, 1, Some(3.5)),
            (0, 2, Some(1.0)),
            (1, 3, Some(2.5)),
            (3, 2, Some(0.5)),
            (3, 4, Some(1.5)),
            (2, 4, Some(0.5)),
        ],
    )
}

pub fn office_scene() -> &'static str {
    OFFICE_SCENE
}

pub fn office_scene_weighted() -> &'static str {
    OFFICE_SCENE_WEIGHTED
}

const OFFICE_SCENE: &str = "When first entering the office, Alice greeted Bob who was sitting at his desk and working at the final report. Until the end of the day, Alice never left her cubicle, only briefly talking with Claire during lunch. Most of the afternoon, Daniel and Bob were doing pair programming in the side room, and at the end of the day Dani, Claire and Ed had a meeting.";

const OFFICE_SCENE_WEIGHTED: &str = "When first entering the office, Alice greeted Bob who was sitting at his desk and working at the final report. Until the end of the day, Alice never left her cubicle, only briefly talking with Claire during lunch and sharing half of her sandwich with Bob. Most of the afternoon, Daniel and Bob were doing pair programming in the side room, and at the end of the day Dani, Claire and Ed had a meeting. After the meeting, Daniel and Ed stayed a little bit late working on a side project. Because Alice had given him half of her sandwich at lunch, Bob offered to give her a ride home and she accepted.";

// ---------------------------------------------------------------------
// the pool

/// Every built-in task instance, keyed by stable ids. Pool instances
/// (`*-pool-N`) exist so in-context prompts have solved examples to
/// draw from; `*-main` instances are the query targets the recorded
/// responses answer.
pub fn example_pool() -> ExamplePool {
    let mut instances = Vec::new();

    instances.push(TaskInstance::new(
        "rank-main",
        TaskPayload::LayerAssignment {
            graph: rank_main_graph(),
            source: NodeId(0),
        },
    ));
    for (i, graph) in rank_pool_graphs().into_iter().enumerate() {
        instances.push(TaskInstance::new(
            format!("rank-pool-{}", i + 1),
            TaskPayload::LayerAssignment {
                graph,
                source: NodeId(0),
            },
        ));
    }

    let (graph, ordering) = sort_main();
    instances.push(TaskInstance::new(
        "sort-main",
        TaskPayload::SortLayers { graph, ordering },
    ));
    for (i, (graph, ordering)) in sort_pool().into_iter().enumerate() {
        instances.push(TaskInstance::new(
            format!("sort-pool-{}", i + 1),
            TaskPayload::SortLayers { graph, ordering },
        ));
    }

    instances.push(TaskInstance::new(
        "cross-main",
        TaskPayload::CountCrossings { gap: cross_main() },
    ));
    for (i, gap) in cross_pool().into_iter().enumerate() {
        instances.push(TaskInstance::new(
            format!("cross-pool-{}", i + 1),
            TaskPayload::CountCrossings { gap },
        ));
    }

    let (graph, ordering) = length_main();
    instances.push(TaskInstance::new(
        "length-main",
        TaskPayload::EdgeLength { graph, ordering },
    ));
    for (i, (graph, ordering)) in length_pool().into_iter().enumerate() {
        instances.push(TaskInstance::new(
            format!("length-pool-{}", i + 1),
            TaskPayload::EdgeLength { graph, ordering },
        ));
    }

    instances.push(TaskInstance::new(
        "gen-plain",
        TaskPayload::GraphGeneration {
            constraints: GenerationConstraints::plain(5, 7),
        },
    ));
    instances.push(TaskInstance::new(
        "gen-attrs",
        TaskPayload::GraphGeneration {
            constraints: GenerationConstraints {
                node_count: 5,
                edge_count: 7,
                min_weight: Some(2.0),
                date_range: Some((
                    NaiveDate::from_ymd_opt(1970, 1, 1).unwrap(),
                    NaiveDate::from_ymd_opt(1970, 12, 31).unwrap(),
                )),
            },
        },
    ));

    instances.push(TaskInstance::new(
        "convert-main",
        TaskPayload::FormatConversion {
            graph: convert_main_graph(),
            from: GraphFormat::EdgeListText,
            to: GraphFormat::JsonGraph,
        },
    ));

    for (i, (property, graph)) in property_graphs().into_iter().enumerate() {
        let id = match (property, i) {
            (GraphProperty::Bulbaceous, 0) => "prop-bulb-1",
            (GraphProperty::Bulbaceous, _) => "prop-bulb-2",
            (GraphProperty::Flamboyous, 2) => "prop-flam-1",
            (GraphProperty::Flamboyous, _) => "prop-flam-2",
        };
        instances.push(TaskInstance::new(id, TaskPayload::PropertyCheck {
            property,
            graph,
        }));
    }

    instances.push(TaskInstance::new(
        "scene-to-graph",
        TaskPayload::GraphFromScene {
            scene: OFFICE_SCENE.to_string(),
            truth: office_graph(),
            weighted: false,
        },
    ));
    instances.push(TaskInstance::new(
        "scene-to-graph-weighted",
        TaskPayload::GraphFromScene {
            scene: OFFICE_SCENE_WEIGHTED.to_string(),
            truth: office_graph_weighted(),
            weighted: true,
        },
    ));
    instances.push(TaskInstance::new(
        "graph-to-scene",
        TaskPayload::SceneFromGraph {
            graph: office_graph(),
        },
    ));
    instances.push(TaskInstance::new(
        "dot-to-svg",
        TaskPayload::SvgFromDot {
            graph: office_graph(),
        },
    ));

    ExamplePool::new(instances).expect("demo ids are unique")
}

// ---------------------------------------------------------------------
// recorded responses

/// A response actually returned by a chat model for one of the demo
/// instances, kept for offline scoring and replay demonstrations.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordedResponse {
    pub task: TaskKind,
    pub strategy: Strategy,
    pub instance_id: &'static str,
    pub text: &'static str,
}

/// Recorded model responses for the `*-main`, generation, property,
/// and scene instances.
pub fn recorded_responses() -> Vec<RecordedResponse> {
    let entry = |task, strategy, instance_id, text| RecordedResponse {
        task,
        strategy,
        instance_id,
        text,
    };
    vec![
        entry(
            TaskKind::LayerAssignment,
            Strategy::Standard,
            "rank-main",
            RANK_MAIN_STANDARD,
        ),
        entry(
            TaskKind::LayerAssignment,
            Strategy::Steps,
            "rank-main",
            RANK_MAIN_STEPS,
        ),
        entry(
            TaskKind::LayerAssignment,
            Strategy::Icl(3),
            "rank-main",
            RANK_MAIN_ICL,
        ),
        entry(
            TaskKind::SortLayers,
            Strategy::Standard,
            "sort-main",
            SORT_MAIN_STANDARD,
        ),
        entry(
            TaskKind::SortLayers,
            Strategy::Steps,
            "sort-main",
            SORT_MAIN_STEPS,
        ),
        entry(
            TaskKind::SortLayers,
            Strategy::Icl(5),
            "sort-main",
            SORT_MAIN_ICL,
        ),
        entry(
            TaskKind::CountCrossings,
            Strategy::Standard,
            "cross-main",
            CROSS_MAIN_STANDARD,
        ),
        entry(
            TaskKind::CountCrossings,
            Strategy::Steps,
            "cross-main",
            CROSS_MAIN_STEPS,
        ),
        entry(TaskKind::CountCrossings, Strategy::Icl(5), "cross-main", "2"),
        entry(
            TaskKind::EdgeLength,
            Strategy::Standard,
            "length-main",
            "30",
        ),
        entry(
            TaskKind::EdgeLength,
            Strategy::Steps,
            "length-main",
            LENGTH_MAIN_STEPS,
        ),
        entry(TaskKind::EdgeLength, Strategy::Icl(5), "length-main", "15"),
        entry(
            TaskKind::GraphGeneration,
            Strategy::Standard,
            "gen-plain",
            GEN_PLAIN_RESPONSE,
        ),
        entry(
            TaskKind::GraphGeneration,
            Strategy::Standard,
            "gen-attrs",
            GEN_ATTRS_RESPONSE,
        ),
        entry(
            TaskKind::PropertyCheck,
            Strategy::Standard,
            "prop-bulb-1",
            PROP_BULB_1_RESPONSE,
        ),
        entry(
            TaskKind::PropertyCheck,
            Strategy::Standard,
            "prop-bulb-2",
            "Yes.",
        ),
        entry(
            TaskKind::PropertyCheck,
            Strategy::Standard,
            "prop-flam-1",
            "No.",
        ),
        entry(
            TaskKind::PropertyCheck,
            Strategy::Standard,
            "prop-flam-2",
            "The answer is: Yes.",
        ),
        entry(
            TaskKind::GraphFromScene,
            Strategy::Standard,
            "scene-to-graph",
            SCENE_TO_GRAPH_RESPONSE,
        ),
        entry(
            TaskKind::GraphFromScene,
            Strategy::Standard,
            "scene-to-graph-weighted",
            SCENE_TO_GRAPH_WEIGHTED_RESPONSE,
        ),
        entry(
            TaskKind::SceneFromGraph,
            Strategy::Standard,
            "graph-to-scene",
            GRAPH_TO_SCENE_RESPONSE,
        ),
    ]
}

const RANK_MAIN_STANDARD: &str = "\
0 - 0
5 - 1
6 - 1
3 - 2
1 - 2
2 - 2
7 - 3
9 - 3
8 - 3
4 - 4";

const RANK_MAIN_STEPS: &str = "\
Starting from node 0, we can perform a breadth-first search to assign a layer number to each node in the graph. Here's the algorithm step by step:

Assign node 0 to layer 0
Find all neighbors of node 0: nodes 5. Assign them to layer 1.
Find all neighbors of nodes in layer 1 that do not already belong to a layer: nodes 3, 6. Assign them to layer 2.
Find all neighbors of nodes in layer 2 that do not already belong to a layer: nodes 1, 2, 7. Assign them to layer 3.
Find all neighbors of nodes in layer 3 that do not already belong to a layer: nodes 4, 8, 9. Assign them to layer 4.
Now all nodes have been assigned to a layer, so we can write the final result:

0: 0
5: 1
3: 2
6: 1
1: 3
2: 3
7: 3
4: 4
8: 4
9: 4";

const RANK_MAIN_ICL: &str = "\
0 - 1
5 - 1
6 - 1
2 - 2
7 - 2
1 - 2
8 - 3
9 - 3
4 - 3
3 - 4";

const SORT_MAIN_STANDARD: &str = "\
Layer 0: [0]
Layer 1: [1]
Layer 2: [8, 6, 2, 9]
Layer 3: [7, 5, 4, 3]
Layer 4: [10]";

const SORT_MAIN_STEPS: &str = "\
Here are the requested outputs:

First output:

Layer 0: [0]
Neighbors of 0: []

Layer 1: [1]
Neighbors of 1: [6, 8, 2, 9]

Layer 2: [6, 8, 2, 9]
Neighbors of 6: [3]
Neighbors of 8: []
Neighbors of 2: [5, 4, 7]
Neighbors of 9: [5]

Layer 3: [3, 5, 4, 7]
Neighbors of 3: []
Neighbors of 5: [10]
Neighbors of 4: []
Neighbors of 7: [10]

Layer 4: [10]
Neighbors of 10: []

Indices:

Index of 6: 0
Index of 8: 1
Index of 2: 2
Index of 9: 3
Median of indices: 1.5

Index of 3: 0
Index of 5: 1
Index of 4: 2
Index of 7: 3
Median of indices: 1.5

Second output:

Layer 0:
0 -> 0

Layer 1:
1 -> 1.5

Layer 2:
6 -> 0
8 -> 0
2 -> 2
9 -> 3
Median of layer: 1.5

Layer 3:
3 -> 0
5 -> 1
4 -> 2
7 -> 3
Median of layer: 1.5

Layer 4:
10 -> 0

Third output:

Layer 0: [0]
Layer 1: [1]
Layer 2: [8, 6, 2, 9]
Layer 3: [5, 3, 4, 7]
Layer 4: [10]";

const SORT_MAIN_ICL: &str = "\
Layer 0: [0]
Layer 1: [1]
Layer 2: [8, 9, 2, 6]
Layer 3: [7, 5, 4, 3]
Layer 4: [10]";

const CROSS_MAIN_STANDARD: &str = "\
(6, 5) and (4, 10)
(6, 10) and (4, 5)";

const CROSS_MAIN_STEPS: &str = "\
First, let's exclude the cases where there is only one edge or one of the arrays has length 1, as instructed:

There is more than one edge, so we keep going.
Array A has more than one element, so we keep going.
Array B has more than one element, so we keep going.
Next, let's exclude the pairs that have the same first element and the pairs that have the same second element:

Pairs with the same first element: [(6, 5), (6, 10)].
Pairs with the same second element: [(4, 10)].
Now, let's consider every pair of edges left:

(4, 5) and (6, 5): (4,5) => s1 = 1, t1 = 0, s2 = 0, t2 = 0; (6,5) => s1 = 2, t1 = 0, s2 = 0, t2 = 0.
(4, 5) and (4, 10): (4,5) => s1 = 1, t1 = 0, s2 = 0, t2 = 1; (4,10) => s1 = 1, t1 = 0, s2 = 0, t2 = 1.
(6, 5) and (4, 10): (6,5) => s1 = 2, t1 = 0, s2 = 0, t2 = 1; (4,10) => s1 = 1, t1 = 0, s2 = 0, t2 = 1.
Next, let's exclude the pairs for which s1 > s2 and t1 < t2, and s1 < s2 and t1 > t2:

(4, 5) and (6, 5): s1 < s2 and t1 < t2, so we keep this pair.
(4, 5) and (4, 10): s1 = s2, so we exclude this pair.
(6, 5) and (4, 10): s1 > s2 and t1 > t2, so we exclude this pair.
Therefore, we are left with only one edge pair that satisfies all the conditions, which is (4, 5) and (6, 5). Hence, the number of edges left is 1.";

const LENGTH_MAIN_STEPS: &str = "\
The layer of the source node and the layer of the target node for each edge are:

(0, 6) -> Layer 0 to Layer 2
(1, 6) -> Layer 1 to Layer 2
(7, 4) -> Layer 1 to Layer 5
(3, 8) -> Layer 1 to Layer 4
(2, 9) -> Layer 1 to Layer 4
(2, 10) -> Layer 1 to Layer 3
(0, 10) -> Layer 0 to Layer 3
(10, 4) -> Layer 3 to Layer 5

The associated length for each edge is:

(0, 6) -> 2 - 0 = 2
(1, 6) -> 2 - 1 = 1
(7, 4) -> 5 - 1 = 4
(3, 8) -> 4 - 1 = 3
(2, 9) -> 4 - 1 = 3
(2, 10) -> 3 - 1 = 2
(0, 10) -> 3 - 0 = 3
(10, 4) -> 5 - 3 = 2

The total sum of the lengths is:

2 + 1 + 4 + 3 + 3 + 2 + 3 + 2 = 18

Therefore, the final sum is 18.";

const GEN_PLAIN_RESPONSE: &str = r#"{
  "nodes": [
    {"id": 1, "label": "Node 1"},
    {"id": 2, "label": "Node 2"},
    {"id": 3, "label": "Node 3"},
    {"id": 4, "label": "Node 4"},
    {"id": 5, "label": "Node 5"},
  ],
  "edges": [
    {"source": 1, "target": 2},
    {"source": 1, "target": 3},
    {"source": 1, "target": 4},
    {"source": 2, "target": 3},
    {"source": 3, "target": 4},
    {"source": 4, "target": 5},
    {"source": 5, "target": 1}
  ]
}"#;

const GEN_ATTRS_RESPONSE: &str = r#"{
  "nodes": [
    { "id": 1, "timestamp": "1970-01-01" },
    { "id": 2, "timestamp": "1970-02-01" },
    { "id": 3, "timestamp": "1970-03-01" },
    { "id": 4, "timestamp": "1970-04-01" },
    { "id": 5, "timestamp": "1970-05-01" }
  ],
  "edges": [
    { "source": 1, "target": 2, "weight": 3 },
    { "source": 1, "target": 3, "weight": 4 },
    { "source": 1, "target": 4, "weight": 5 },
    { "source": 2, "target": 3, "weight": 6 },
    { "source": 2, "target": 4, "weight": 7 },
    { "source": 3, "target": 4, "weight": 8 },
    { "source": 4, "target": 5, "weight": 9 }
  ]
}"#;

const PROP_BULB_1_RESPONSE: &str = "Yes, graph G is bulbaceous. The definition of a bulbaceous graph states that the number of edges must be a multiple of the number of nodes, and in the case of graph G, the number of edges (4) is a multiple of the number of nodes (2). Therefore, graph G is bulbaceous.";

const SCENE_TO_GRAPH_RESPONSE: &str = "\
    digraph scene {
    Alice;
    Bob;
    Claire;
    Daniel;
    Ed;

    Alice -> Bob;
    Alice -> Claire;
    Bob -> Daniel;
    Daniel -> Bob;
    Daniel -> Claire;
    Daniel -> Ed;
    Claire -> Daniel;
    Claire -> Ed;
}
The above DOT graph represents the scene described in the prompt. Each character is a node, and whenever two characters interact, there is an edge between them. For example, Alice greets Bob when she first enters the office, so there is an edge between Alice and Bob. Similarly, Alice briefly talks with Claire during lunch, so there is an edge between Alice and Claire. Daniel and Bob do pair programming, so there is an edge between them. Finally, Daniel, Claire, and Ed have a meeting at the end of the day, so there are edges between Daniel and Claire, Daniel and Ed, and Claire and Ed.";

const SCENE_TO_GRAPH_WEIGHTED_RESPONSE: &str = "\
    graph scene {
    Alice -- Bob [penwidth=3.5];
    Alice -- Claire [penwidth=1.0];
    Bob -- Claire [penwidth=0.5];
    Bob -- Daniel [penwidth=2.5];
    Claire -- Daniel [penwidth=0.5];
    Daniel -- Ed [penwidth=1.5];
}

The above DOT graph represents the scene described in the prompt as an undirected graph, with the thickness of the edges quantifying the amount of interaction between the characters. The thicker the edge, the more interaction there is between the two characters.

For example, Alice greets Bob when she first enters the office, so there is a thick edge between Alice and Bob. Alice shares half of her sandwich with Bob, which is not represented in this graph. Bob offers to give Alice a ride home, which is not represented in this graph.

Similarly, Daniel and Bob do pair programming, so there is a thick edge between them. Daniel, Claire, and Ed have a meeting at the end of the day, so there are thinner edges between them. Finally, Daniel and Ed work on a side project, which is indicated by a thin edge between them.

Note that the thickness of the edges is somewhat subjective and can be adjusted based on the level of interaction that you want to emphasize. Also, the edges between Bob and Claire, and between Claire and Daniel, are very thin, indicating a small amount of interaction.";

const GRAPH_TO_SCENE_RESPONSE: &str = "\
It's a typical workday at the office, and the team is collaborating on a project. Alice is busy typing away at her computer, exchanging ideas with Bob and Claire, who are both sitting at their desks nearby. Bob and Alice catch up on some tasks they need to complete together, while Claire provides some helpful insights based on her experience with similar projects.

Meanwhile, Daniel is having a one-on-one meeting with Bob, discussing some new features they need to implement. They brainstorm ideas, and Daniel takes notes on his laptop. After their meeting, Bob heads over to Daniel's desk to get some more details on a specific task.

Later in the day, Claire and Daniel meet up to work on a presentation they need to deliver the following day. They huddle around Claire's computer, discussing the best way to convey their ideas to the audience. As they work, Ed pops over to Claire's desk to ask her about a deadline for a different project.

The day winds down, and the team members start to pack up their things. They wave goodbye and head out, ready to tackle another day of work together tomorrow.";
