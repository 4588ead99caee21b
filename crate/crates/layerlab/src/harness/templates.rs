//! Prompt construction.
//!
//! Every template here is frozen: tests assert the produced prompts
//! byte-for-byte, including irregular whitespace and wording. Do not
//! "fix" typos or spacing in the template strings; the scoring fixtures
//! were recorded against exactly these prompts.

use serde::{Deserialize, Serialize};

use super::pool::{
    BipartiteGap, ExamplePool, GenerationConstraints, GraphProperty, TaskInstance, TaskPayload,
};
use super::{HarnessError, Strategy, TaskKind};
use crate::graph::{emit_graph, Graph, GraphFormat, NodeId};
use crate::layout::LayeredOrdering;

/// Knobs for prompt construction.
#[derive(Debug, Clone)]
pub struct PromptOptions {
    /// Hard ceiling on prompt length in characters. The default leaves
    /// comfortable headroom for 10-11 node graphs under every strategy,
    /// including five-example in-context prompts.
    pub char_limit: usize,
}

impl Default for PromptOptions {
    fn default() -> Self {
        PromptOptions { char_limit: 8000 }
    }
}

/// One fully built prompt, ready to send, with enough metadata to
/// rebuild or audit it later.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PromptSpec {
    /// `{instance_id}-{strategy}-s{seed}`
    pub id: String,
    pub task: TaskKind,
    pub strategy: Strategy,
    pub instance_id: String,
    /// Seed used for in-context example sampling. Recorded for all
    /// strategies so reruns are reproducible.
    pub seed: u64,
    /// Ids of the solved examples embedded in the prompt, in prompt
    /// order. Empty unless the strategy is in-context.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub icl_example_ids: Vec<String>,
    pub text: String,
}

/// Build the prompt for `instance` under `strategy`.
///
/// In-context strategies draw solved examples from `pool` (never the
/// instance itself) and embed the oracle's answer for each, so the
/// examples are correct by construction.
pub fn build_prompt(
    instance: &TaskInstance,
    strategy: Strategy,
    pool: &ExamplePool,
    seed: u64,
    opts: &PromptOptions,
) -> Result<PromptSpec, HarnessError> {
    let task = instance.kind();
    if !task.supports_all_strategies() && strategy != Strategy::Standard {
        return Err(HarnessError::UnsupportedStrategy { task, strategy });
    }

    let mut icl_example_ids = Vec::new();
    let text = match strategy {
        Strategy::Icl(k) => {
            let examples = pool.sample(task, k as usize, &instance.id, seed)?;
            icl_example_ids = examples.iter().map(|e| e.id.clone()).collect();
            let mut blocks = Vec::with_capacity(examples.len());
            for ex in &examples {
                let answer = super::answer::oracle_response(strategy, &ex.payload)?;
                blocks.push((icl_input_block(&ex.payload)?, answer));
            }
            let query = icl_input_block(&instance.payload)?;
            icl_prompt(&instance.payload, &blocks, &query)
        }
        Strategy::Standard | Strategy::Steps => direct_prompt(&instance.payload, strategy)?,
    };

    let chars = text.chars().count();
    if chars > opts.char_limit {
        return Err(HarnessError::PromptTooLong {
            chars,
            limit: opts.char_limit,
        });
    }

    Ok(PromptSpec {
        id: format!("{}-{}-s{}", instance.id, strategy, seed),
        task,
        strategy,
        instance_id: instance.id.clone(),
        seed,
        icl_example_ids,
        text,
    })
}

// ---------------------------------------------------------------------
// shared formatting helpers

/// `[(5, 0), (6, 1)]`
fn tuple_list(pairs: &[(NodeId, NodeId)]) -> String {
    let body: Vec<String> = pairs.iter().map(|(a, b)| format!("({a}, {b})")).collect();
    format!("[{}]", body.join(", "))
}

fn graph_tuples(g: &Graph) -> String {
    let pairs: Vec<(NodeId, NodeId)> = g.edges().iter().map(|e| (e.source, e.target)).collect();
    tuple_list(&pairs)
}

/// `[6, 4, 7]`
fn id_array(ids: &[NodeId]) -> String {
    let body: Vec<String> = ids.iter().map(|n| n.to_string()).collect();
    format!("[{}]", body.join(", "))
}

/// `Layer 0: [1, 2]` lines, one per layer, each followed by a newline.
/// `trailing_space` reproduces the variant with one space before the
/// newline.
fn layer_lines(ordering: &LayeredOrdering, trailing_space: bool) -> String {
    let mut out = String::new();
    for (i, layer) in ordering.layers().iter().enumerate() {
        out.push_str(&format!("Layer {i}: {}", id_array(layer)));
        if trailing_space {
            out.push(' ');
        }
        out.push('\n');
    }
    out
}

fn edge_list_text(g: &Graph) -> Result<String, HarnessError> {
    Ok(emit_graph(g, GraphFormat::EdgeListText)?)
}

// ---------------------------------------------------------------------
// direct (standard / steps) prompts

fn direct_prompt(payload: &TaskPayload, strategy: Strategy) -> Result<String, HarnessError> {
    match payload {
        TaskPayload::LayerAssignment { graph, source } => match strategy {
            Strategy::Standard => rank_standard(graph, *source),
            Strategy::Steps => Ok(rank_steps(graph, *source)),
            Strategy::Icl(_) => unreachable!("in-context prompts are built in build_prompt"),
        },
        TaskPayload::SortLayers { graph, ordering } => Ok(match strategy {
            Strategy::Standard => sort_standard(graph, ordering),
            Strategy::Steps => sort_steps(graph, ordering),
            Strategy::Icl(_) => unreachable!(),
        }),
        TaskPayload::CountCrossings { gap } => Ok(match strategy {
            Strategy::Standard => crossings_standard(gap),
            Strategy::Steps => crossings_steps(gap),
            Strategy::Icl(_) => unreachable!(),
        }),
        TaskPayload::EdgeLength { graph, ordering } => Ok(length_direct(graph, ordering, strategy)),
        TaskPayload::GraphGeneration { constraints } => Ok(generation_prompt(constraints)),
        TaskPayload::FormatConversion { graph, from, to } => conversion_prompt(graph, *from, *to),
        TaskPayload::PropertyCheck { property, graph } => Ok(property_prompt(*property, graph)),
        TaskPayload::GraphFromScene {
            scene, weighted, ..
        } => Ok(scene_to_graph_prompt(scene, *weighted)),
        TaskPayload::SceneFromGraph { graph } => graph_to_scene_prompt(graph),
        TaskPayload::SvgFromDot { graph } => svg_prompt(graph),
    }
}

fn rank_instruction(source: NodeId) -> String {
    format!(
        "Perform a rank assignment on the graph. Use node {source} as a source for the graph. \
         Each node must be assigned to a rank that is equal to the shortest path between that \
         node and the source. Thus, node {source} will be assigned to rank 0, and the neighbors \
         of node {source} will be assigned to rank 1."
    )
}

const RANK_FORMAT_LINE: &str = "Write no explanations, only respond with the id of each node \
                                and the rank it has been assigned to in a format <id> - <rank>.";

fn rank_standard(graph: &Graph, source: NodeId) -> Result<String, HarnessError> {
    Ok(format!(
        "{}{}\n{}",
        edge_list_text(graph)?,
        rank_instruction(source),
        RANK_FORMAT_LINE
    ))
}

fn rank_steps(graph: &Graph, source: NodeId) -> String {
    let mut out = format!(
        "You are a powerful algorithm for graph drawing. Your job is to answer questions \
         regarding graphs. This is a list of directed edges in a graph::\n\
         \n\
         edge_list: {}\n\
         \n\
         Start from node {source}. Node {source} belongs to layer 0.\n\
         \n\
         Find all the neighbors of node {source}. Assign all the neighbors of node {source} to \
         layer number 1.\n\
         Then write the list of nodes belonging to layer 1 in a code block, one node per line, \
         formatted as node: layer.\n\
         \n",
        graph_tuples(graph)
    );
    // The scaffold always spells out layers 2 through 5; the closing
    // sentence covers deeper graphs. Layer 2 alone has a comma after
    // "layer 2".
    for k in 2u32..=5 {
        let comma = if k == 2 { "," } else { "" };
        out.push_str(&format!(
            "Find all neighbors of the nodes in layer {} that do not already belong to a layer. \
             Assign to them depth {k}. \n\
             Then write the list of nodes belonging to layer {k}{comma} in a code block, one \
             node per line, formatted as node: layer.\n\
             \n",
            k - 1
        ));
    }
    out.push_str(
        "Repeat the process, incrementing the layer, until there are no more nodes that are not \
         assigned to any layer\n\
         Write the final result in a code block, one node per line, formatted as node: layer.",
    );
    out
}

/// The edge list plus layer mapping header shared by the sorting
/// prompts. The first layer line sits on the description line after two
/// spaces; every layer line carries a trailing space.
fn sort_preamble(graph: &Graph, ordering: &LayeredOrdering) -> String {
    format!(
        "This is a list of directed edges in a layered graph.\n\
         {}\n\
         \n\
         This is the description of what nodes are contained in what layer:  {}\n",
        graph_tuples(graph),
        layer_lines(ordering, true).trim_end_matches('\n')
    )
}

const SORT_RULES: &str = "Start from layer 0. \n\
    Consider every node in layer 0, and for each node consider its neighbors in the next layer. \n\
    For each node in layer 0, calculate the positions of the neighbors in the next layer. \n\
    Then, sort the nodes in layer 0 based on the median position of their neighbors.\n\
    If a number is NaN, then it is equal to 0.\n\
    If a node has no neighbors, assign an associated median of 0.";

const SORT_FINALE: &str = "Finally, I want you to write the layers and the nodes in them once \
    more, but the nodes in the layers have to be sorted according to their associated median \
    value.\n\
    Like this:\n\
    Layer 0: [<sorted nodes in layer 0>]\n\
    If node A has an associated median value that is less than the associated median value of \
    node B, then node A must come before node B.";

fn sort_standard(graph: &Graph, ordering: &LayeredOrdering) -> String {
    format!(
        "{}\n\
         Write no code and no explanations.\n\
         \n\
         {SORT_RULES}\n\
         \n\
         Repeat the process for every layer.\n\
         \n\
         {SORT_FINALE} ",
        sort_preamble(graph, ordering)
    )
}

fn sort_steps(graph: &Graph, ordering: &LayeredOrdering) -> String {
    format!(
        "{}\n\
         Start from layer 0. \n\
         List every node in layer 0, and for each node list its neighbors in the next layer. \n\
         Like this: \n\
         Layer 0: [<node1>, <node2>, ...]\n\
         Neighbors of <node1>: [<neighbor1>, <neighbor2>, ...]\n\
         \n\
         Then, for every one of the neighbors, write their index in their layer. So if node 6 \
         belongs to layer 2 and is in the fourth position in layer 2, its index is 3.\n\
         Like this:\n\
         Index of <neighbor1>: <value>\n\
         And under each set of indices write the median of the indices.\n\
         \n\
         Now I want you to start again from layer 0, and this time I want you to list the nodes \
         in every layer and their associated medians.\n\
         Like this:\n\
         Layer 0:\n\
         <node 0> -> <median of the neighbors of node 0>\n\
         \n\
         If a number is NaN, then it is equal to 0.\n\
         If a node has no neighbors, assign an associated median of 0.\n\
         \n\
         Finally, I want you to write the layers and the nodes in them once more, but the nodes \
         in the layers have to be sorted according to their associated median value. \n\
         Like this:\n\
         Layer 0: [<sorted nodes in layer 0>]\n\
         If node A has an associated median value that is less than the associated median value \
         of node B, then node A must come before node B. \n\
         This time, write no additional information other than the layers and the sorted nodes.",
        sort_preamble(graph, ordering)
    )
}

fn crossings_standard(gap: &BipartiteGap) -> String {
    format!(
        "Given the following arrays: \n\
         A: {}\n\
         B: {}\n\
         \n\
         And the following list of tuples:\n\
         Tuples: {}\n\
         \n\
         Where for each tuple the first element of comes from array A, and the second element \
         comes from array B.\n\
         \n\
         Assuming this is a bipartite graph, count the edge crossings. Two edges that share a \
         source or a target can not cross. Two edges cross if the order of their sources is \
         opposite to the order of their targets.\n\
         \n\
         Exclude all edge crossings where edges have the same source or the same target.\n\
         \n\
         Write no explanations and no code. Return the pairs of edges that cross, one per line. \
         There might be no edge crossings - in that case, return an empty list.",
        id_array(&gap.side_a),
        id_array(&gap.side_b),
        tuple_list(&gap.edges)
    )
}

fn crossings_steps(gap: &BipartiteGap) -> String {
    format!(
        "You are a very advanced program that can help me with counting edge crossings in a \
         bipartite graph. Write the answer to the following question.\n\
         \n\
         Given the following arrays: \n\
         A: {}\n\
         B: {}\n\
         \n\
         And the following list of edges:\n\
         Tuples: {}\n\
         \n\
         Where for each edges the first element comes from array A, and the second element \
         comes from array B.\n\
         \n\
         VERY IMPORTANT: If there is a single edge, write 0 and stop writing!. If array A has \
         length 1, write 0 and stop writing!. If array B has length 1, write 0 and stop \
         writing!\n\
         \n\
         Otherwise keep going and consider all the combinations of edge pairs. \n\
         \n\
         Then, exclude all the pairs that have the same first element. Write the list.\n\
         Then, exclude all the pairs that have the same second element. Write the list again.\n\
         \n\
         Now for every pair of edges left, consider the first one. Say that s1 is the index of \
         its first element in A, and t1 is the index of its second element in B. Then consider \
         the second edge. Say that s2 is the index of its first element in A, and t2 is the \
         index of its second element in B.\n\
         Write down s1, t1, s2 and t2 for every pair, like this:\n\
         <pair> => s1 = <value>, t1 = <value>, s2 = <value>, t2 = <value>\n\
         \n\
         Now exclude all the pairs for which s1 > s2 and t1 < t2. Write the list again.\n\
         \n\
         Now exclude all the pairs for which s1 < s2 and t1 > t2. Write the list again.\n\
         \n\
         Write the number of edges left as a number.",
        id_array(&gap.side_a),
        id_array(&gap.side_b),
        tuple_list(&gap.edges)
    )
}

const LENGTH_RULE: &str = "Count the total edge length. The edge length of each edge e is \
    always equal to the absolute value of the number of the layer the target is contained in, \
    minus the number of the layer the source is contained in. The edge length can't be negative.";

fn length_direct(graph: &Graph, ordering: &LayeredOrdering, strategy: Strategy) -> String {
    let tail = match strategy {
        Strategy::Standard => {
            "Write no explanations and no code. Return the total sum of the lengths."
        }
        Strategy::Steps => {
            "First, for each edge, write the layer of the source node and the layer of the \
             target node.\n\
             Then, write each edge and its associated length.\n\
             In the end, write the total sum of the lengths.\n\
             Write the final sum in a separate line at the end."
        }
        Strategy::Icl(_) => unreachable!(),
    };
    format!(
        "The following is the description of a layered graph. \n\
         A layered graph is a graph where each node is contained in a single layer.\n\
         The following is the list of directed edges, formatted as [(<source_id>, \
         <target_id>)].\n\
         \n\
         edge_list: {}\n\
         \n\
         The second is a mapping of layers to the nodes contained within. Every array is a \
         different layer, and the numbers in every array indicate the nodes in that layer.\n\
         \n\
         {}\n\
         {LENGTH_RULE}\n\
         \n\
         {tail}",
        graph_tuples(graph),
        layer_lines(ordering, true)
    )
}

fn generation_prompt(c: &GenerationConstraints) -> String {
    let mut out = format!(
        "Generate a graph for me. Write no explanations, exclusively write the json \
         representation of the graph. I want the graph to have {} nodes and {} edges.",
        c.node_count, c.edge_count
    );
    if let Some((start, end)) = c.date_range {
        out.push_str(&format!(
            " I want every node to have a timestamp from {} to {}.",
            start.format("%B %-d, %Y"),
            end.format("%B %-d, %Y")
        ));
    }
    if let Some(floor) = c.min_weight {
        out.push_str(&format!(
            " I want every edge to have a weight associated with it, which must be higher \
             than {}.",
            trim_float(floor)
        ));
    }
    out
}

/// `2` for 2.0, `2.5` for 2.5.
fn trim_float(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

fn format_phrase(f: GraphFormat) -> &'static str {
    match f {
        GraphFormat::EdgeListText => "plain text edge list",
        GraphFormat::JsonGraph => "JSON graph",
        GraphFormat::GraphmlSubset => "GraphML",
        GraphFormat::DotSubset => "DOT",
    }
}

fn conversion_prompt(
    graph: &Graph,
    from: GraphFormat,
    to: GraphFormat,
) -> Result<String, HarnessError> {
    Ok(format!(
        "The following graph is written in the {} format:\n\
         \n\
         {}\n\
         Rewrite the same graph in the {} format. Write no explanations, exclusively write the \
         converted graph.",
        format_phrase(from),
        emit_graph(graph, from)?,
        format_phrase(to)
    ))
}

fn property_prompt(property: GraphProperty, graph: &Graph) -> String {
    match property {
        GraphProperty::Bulbaceous => format!(
            "A graph is bulbaceous if its number of edges is a multiple of its number of \
             nodes. \n \n\
             Graph G has {} nodes and {} edges.\n \n\
             Is graph G bulbaceous?\n\
             \n\
             Write no explanations.",
            graph.node_count(),
            graph.edge_count()
        ),
        GraphProperty::Flamboyous => {
            let ids: Vec<String> = graph.node_ids().map(|n| n.to_string()).collect();
            let id_phrase = match ids.len() {
                0 => String::new(),
                1 => ids[0].clone(),
                _ => format!(
                    "{} and {}",
                    ids[..ids.len() - 1].join(", "),
                    ids[ids.len() - 1]
                ),
            };
            let edges: Vec<String> = graph
                .edges()
                .iter()
                .map(|e| format!("({}, {})", e.source, e.target))
                .collect();
            format!(
                "A graph is flamboyous if there are no two edges connecting the same set of \
                 nodes. \n \n\
                 Graph G has {} nodes ({id_phrase}) and {} edges.\n\
                 The edges of G are: {}\n \n\
                 Is graph G flamboyous?\n \n\
                 Write no explanations.",
                graph.node_count(),
                graph.edge_count(),
                edges.join(" ")
            )
        }
    }
}

fn scene_to_graph_prompt(scene: &str, weighted: bool) -> String {
    if weighted {
        format!(
            "I am going to give you a description of a short scene, and I would like you to \
             provide me with a DOT graph representation in a code block where each person in \
             the scene is a node, and whenever two characters interact there is an edge \
             between them. I want you to quantify the amount of interactions between people \
             with edge thickness, please:\n\
             \n\
             {scene}"
        )
    } else {
        format!(
            "I am going to give you a description of a short scene, and I would like you to \
             provide me with a DOT graph representation in a code block where each person in \
             the scene is a node, and whenever two characters interact there is an edge \
             between them:\n\
             \n\
             {scene}"
        )
    }
}

fn graph_to_scene_prompt(graph: &Graph) -> Result<String, HarnessError> {
    Ok(format!(
        "I am going to give you a DOT graph format where each node is a person, and each edge \
         represents that these people interacted in some way, such as chatting, having a \
         meeting, working together, or something. I want you to write a short description of a \
         day at the office that reproduces the topology of the graph:\n\
         \n\
         {}",
        emit_graph(graph, GraphFormat::DotSubset)?
    ))
}

fn svg_prompt(graph: &Graph) -> Result<String, HarnessError> {
    Ok(format!(
        "I am going to give you a graph in DOT format. Draw this graph as an SVG image: every \
         node must appear as a circle with its name next to it, and every edge as a line \
         between the circles of its endpoints. Write no explanations, exclusively write the \
         SVG markup.\n\
         \n\
         {}",
        emit_graph(graph, GraphFormat::DotSubset)?
    ))
}

// ---------------------------------------------------------------------
// in-context prompts

/// The `## Input:` body for one instance, without the `## Input:` line
/// itself. Only the four scaffolded tasks have in-context templates.
fn icl_input_block(payload: &TaskPayload) -> Result<String, HarnessError> {
    Ok(match payload {
        TaskPayload::LayerAssignment { graph, .. } => edge_list_text(graph)?,
        TaskPayload::SortLayers { graph, ordering } => format!(
            "Directed edges:\n{}\nLayer node mapping:\n{}",
            graph_tuples(graph),
            layer_lines(ordering, false)
        ),
        TaskPayload::CountCrossings { gap } => format!(
            "Layer arrays:\nA: {}\nB: {}\nEdge tuples:\nTuples: {}\n",
            id_array(&gap.side_a),
            id_array(&gap.side_b),
            tuple_list(&gap.edges)
        ),
        TaskPayload::EdgeLength { graph, ordering } => format!(
            "List of edges formatted as [<source_id>, <target_id>]:\n\
             edges = {}\n\
             Mapping of layers to nodes:\n\
             ranks = {}",
            graph_tuples(graph),
            layer_lines(ordering, false)
        ),
        other => {
            return Err(HarnessError::UnsupportedStrategy {
                task: other.kind(),
                strategy: Strategy::Icl(3),
            })
        }
    })
}

fn icl_prompt(payload: &TaskPayload, examples: &[(String, String)], query: &str) -> String {
    match payload {
        TaskPayload::LayerAssignment { source, .. } => {
            // Layer assignment keeps the bare Input:/Answer: framing.
            // The shared instruction names the query's source, so pools
            // used for in-context sampling keep one source throughout.
            let mut out = format!("{} \n{}\n", rank_instruction(*source), RANK_FORMAT_LINE);
            for (input, answer) in examples {
                out.push_str(&format!("\nInput:\n{input}Answer:\n{answer}\n"));
            }
            out.push_str(&format!("\nInput:\n{query}Answer:"));
            out
        }
        TaskPayload::SortLayers { .. } => {
            let header = format!(
                "We want to reduce edge crossings on a layered graph drawing.\n\
                 You are given a  list of directed edges in a layered graph, and a mapping of \
                 which nodes are contained in which layer.\n\
                 {SORT_RULES}\n\
                 Repeat the process for every layer.\n\
                 {SORT_FINALE}\n"
            );
            markdown_blocks(header, examples, query)
        }
        TaskPayload::CountCrossings { .. } => {
            let header = "You are a very advanced program that can help me with counting edge \
                 crossings in a bipartite graph.\n\
                 I will provide you with the arrays of nodes of layers A and B and a list of \
                 edges as tuples.\n\
                 For each edge the first element comes from array A, and the second element \
                 comes from array B.\n\
                 \n\
                 Assuming this is a bipartite graph, count the edge crossings. \n\
                 Two edges that share a source or a target can not cross. \n\
                 Two edges cross if the order of their sources is opposite to the order of \
                 their targets.\n\
                 \n\
                 Exclude all crossings where edges have the same source or the same target.\n\
                 \n\
                 Write no explanations and no code. Return the number of edges that cross. \
                 There might be no edge crossings - in that case, return 0.\n"
                .to_string();
            markdown_blocks(header, examples, query)
        }
        TaskPayload::EdgeLength { .. } => {
            let header = format!(
                "A layered graph is a graph where each node is contained in a single layer.\n\
                 A layered graph is described by list of directed edges, formatted as \
                 [(<source_id>, <target_id>)], and a mapping of layers to the nodes contained \
                 within.\n\
                 Every array in the mapping is a different layer, and the numbers in every \
                 array indicate the nodes in that layer.\n\
                 \n\
                 Count the total edge length. \n\
                 The edge length of each edge e is always equal to the absolute value of the \
                 number of the layer the target is contained in, minus the number of the layer \
                 the source is contained in.\n\
                 The edge length can't be negative.\n\
                 \n\
                 Write no explanations and no code. Return the total sum of the lengths.\n"
            );
            let mut out = header;
            // Length blocks run straight into "## Answer:" without a
            // blank line, unlike the other two markdown framings.
            for (input, answer) in examples {
                out.push_str(&format!("\n## Input:\n{input}## Answer:\n{answer}\n"));
            }
            out.push_str(&format!("\n## Input:\n{query}## Answer:"));
            out
        }
        other => unreachable!("icl_input_block already rejected {}", other.kind()),
    }
}

/// `## Input:` / `## Answer:` framing with a blank line before each
/// answer heading.
fn markdown_blocks(header: String, examples: &[(String, String)], query: &str) -> String {
    let mut out = header;
    for (input, answer) in examples {
        out.push_str(&format!("\n## Input:\n{input}\n## Answer:\n{answer}\n"));
    }
    out.push_str(&format!("\n## Input:\n{query}\n## Answer:"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, Graph, NodeData};
    use chrono::NaiveDate;

    fn rank_instance() -> TaskInstance {
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
        TaskInstance::new(
            "rank-main",
            TaskPayload::LayerAssignment {
                graph: g,
                source: NodeId(0),
            },
        )
    }

    #[test]
    fn rank_standard_prompt_is_frozen() {
        let pool = ExamplePool::default();
        let spec = build_prompt(
            &rank_instance(),
            Strategy::Standard,
            &pool,
            0,
            &PromptOptions::default(),
        )
        .unwrap();
        let expected = "Graph G has 10 nodes, numbered from 0 to 9. Graph G has 10 edges.\n\
            This is the list of edge connections:\n\
            [5, 0],[6, 1],[6, 2],[2, 7],[7, 4],[8, 2],[9, 7],[9, 8],[9, 5],[3, 5]\n\
            Perform a rank assignment on the graph. Use node 0 as a source for the graph. Each \
            node must be assigned to a rank that is equal to the shortest path between that \
            node and the source. Thus, node 0 will be assigned to rank 0, and the neighbors of \
            node 0 will be assigned to rank 1.\n\
            Write no explanations, only respond with the id of each node and the rank it has \
            been assigned to in a format <id> - <rank>.";
        assert_eq!(spec.text, expected);
        assert_eq!(spec.id, "rank-main-standard-s0");
    }

    #[test]
    fn rank_steps_prompt_spells_out_five_layers() {
        let pool = ExamplePool::default();
        let spec = build_prompt(
            &rank_instance(),
            Strategy::Steps,
            &pool,
            0,
            &PromptOptions::default(),
        )
        .unwrap();
        assert!(spec.text.starts_with(
            "You are a powerful algorithm for graph drawing. Your job is to answer questions \
             regarding graphs. This is a list of directed edges in a graph::\n\n\
             edge_list: [(5, 0), (6, 1), (6, 2), (2, 7), (7, 4), (8, 2), (9, 7), (9, 8), \
             (9, 5), (3, 5)]\n\nStart from node 0. Node 0 belongs to layer 0.\n"
        ));
        // the layer-2 sentence alone carries a comma
        assert!(spec
            .text
            .contains("belonging to layer 2, in a code block"));
        assert!(spec.text.contains("belonging to layer 3 in a code block"));
        assert!(spec.text.contains("Assign to them depth 5. \n"));
        assert!(spec.text.ends_with(
            "Repeat the process, incrementing the layer, until there are no more nodes that \
             are not assigned to any layer\n\
             Write the final result in a code block, one node per line, formatted as node: \
             layer."
        ));
    }

    #[test]
    fn unsupported_strategies_are_rejected() {
        let pool = ExamplePool::default();
        let inst = TaskInstance::new(
            "gen",
            TaskPayload::GraphGeneration {
                constraints: GenerationConstraints::plain(5, 7),
            },
        );
        let err = build_prompt(&inst, Strategy::Steps, &pool, 0, &PromptOptions::default())
            .unwrap_err();
        assert!(matches!(err, HarnessError::UnsupportedStrategy { .. }));
    }

    #[test]
    fn char_budget_is_enforced() {
        let pool = ExamplePool::default();
        let err = build_prompt(
            &rank_instance(),
            Strategy::Standard,
            &pool,
            0,
            &PromptOptions { char_limit: 50 },
        )
        .unwrap_err();
        assert!(matches!(err, HarnessError::PromptTooLong { limit: 50, .. }));
    }

    #[test]
    fn generation_prompt_spells_out_constraints() {
        let plain = generation_prompt(&GenerationConstraints::plain(5, 7));
        assert_eq!(
            plain,
            "Generate a graph for me. Write no explanations, exclusively write the json \
             representation of the graph. I want the graph to have 5 nodes and 7 edges."
        );
        let full = generation_prompt(&GenerationConstraints {
            node_count: 5,
            edge_count: 7,
            min_weight: Some(2.0),
            date_range: Some((
                NaiveDate::from_ymd_opt(1970, 1, 1).unwrap(),
                NaiveDate::from_ymd_opt(1970, 12, 31).unwrap(),
            )),
        });
        assert_eq!(
            full,
            "Generate a graph for me. Write no explanations, exclusively write the json \
             representation of the graph. I want the graph to have 5 nodes and 7 edges. I want \
             every node to have a timestamp from January 1, 1970 to December 31, 1970. I want \
             every edge to have a weight associated with it, which must be higher than 2."
        );
    }

    #[test]
    fn property_prompts_are_frozen() {
        let g2 = Graph::build(
            false,
            vec![NodeData::plain(NodeId(0)), NodeData::plain(NodeId(1))],
            vec![Edge::plain(NodeId(0), NodeId(1)); 4],
        )
        .unwrap();
        assert_eq!(
            property_prompt(GraphProperty::Bulbaceous, &g2),
            "A graph is bulbaceous if its number of edges is a multiple of its number of \
             nodes. \n \n\
             Graph G has 2 nodes and 4 edges.\n \n\
             Is graph G bulbaceous?\n\n\
             Write no explanations."
        );

        let g3 = Graph::build(
            false,
            (0..3).map(|i| NodeData::plain(NodeId(i))).collect(),
            [(0, 1), (0, 1), (0, 2), (1, 2), (1, 2)]
                .into_iter()
                .map(|(a, b)| Edge::plain(NodeId(a), NodeId(b)))
                .collect(),
        )
        .unwrap();
        assert_eq!(
            property_prompt(GraphProperty::Flamboyous, &g3),
            "A graph is flamboyous if there are no two edges connecting the same set of \
             nodes. \n \n\
             Graph G has 3 nodes (0, 1 and 2) and 5 edges.\n\
             The edges of G are: (0, 1) (0, 1) (0, 2) (1, 2) (1, 2)\n \n\
             Is graph G flamboyous?\n \n\
             Write no explanations."
        );
    }
}
