//! Frozen reference prompts for the four layered-drawing tasks. These
//! constants pin the emitted text byte for byte; a template change
//! that alters any prompt fails here on purpose. Update a constant
//! only when its wording is meant to change.

use layerlab::demo::example_pool;
use layerlab::harness::{build_prompt, PromptOptions, PromptSpec, Strategy};

fn built(id: &str, strategy: Strategy, seed: u64) -> PromptSpec {
    let pool = example_pool();
    let instance = pool.get(id).unwrap();
    build_prompt(instance, strategy, &pool, seed, &PromptOptions::default()).unwrap()
}

const RANK_STANDARD: &str = r#"Graph G has 10 nodes, numbered from 0 to 9. Graph G has 10 edges.
This is the list of edge connections:
[5, 0],[6, 1],[6, 2],[2, 7],[7, 4],[8, 2],[9, 7],[9, 8],[9, 5],[3, 5]
Perform a rank assignment on the graph. Use node 0 as a source for the graph. Each node must be assigned to a rank that is equal to the shortest path between that node and the source. Thus, node 0 will be assigned to rank 0, and the neighbors of node 0 will be assigned to rank 1.
Write no explanations, only respond with the id of each node and the rank it has been assigned to in a format <id> - <rank>."#;

const RANK_STEPS: &str = r#"You are a powerful algorithm for graph drawing. Your job is to answer questions regarding graphs. This is a list of directed edges in a graph::

edge_list: [(5, 0), (6, 1), (6, 2), (2, 7), (7, 4), (8, 2), (9, 7), (9, 8), (9, 5), (3, 5)]

Start from node 0. Node 0 belongs to layer 0.

Find all the neighbors of node 0. Assign all the neighbors of node 0 to layer number 1.
Then write the list of nodes belonging to layer 1 in a code block, one node per line, formatted as node: layer.

Find all neighbors of the nodes in layer 1 that do not already belong to a layer. Assign to them depth 2. 
Then write the list of nodes belonging to layer 2, in a code block, one node per line, formatted as node: layer.

Find all neighbors of the nodes in layer 2 that do not already belong to a layer. Assign to them depth 3. 
Then write the list of nodes belonging to layer 3 in a code block, one node per line, formatted as node: layer.

Find all neighbors of the nodes in layer 3 that do not already belong to a layer. Assign to them depth 4. 
Then write the list of nodes belonging to layer 4 in a code block, one node per line, formatted as node: layer.

Find all neighbors of the nodes in layer 4 that do not already belong to a layer. Assign to them depth 5. 
Then write the list of nodes belonging to layer 5 in a code block, one node per line, formatted as node: layer.

Repeat the process, incrementing the layer, until there are no more nodes that are not assigned to any layer
Write the final result in a code block, one node per line, formatted as node: layer."#;

const RANK_ICL: &str = r#"Perform a rank assignment on the graph. Use node 0 as a source for the graph. Each node must be assigned to a rank that is equal to the shortest path between that node and the source. Thus, node 0 will be assigned to rank 0, and the neighbors of node 0 will be assigned to rank 1. 
Write no explanations, only respond with the id of each node and the rank it has been assigned to in a format <id> - <rank>.

Input:
Graph G has 11 nodes, numbered from 0 to 10. Graph G has 15 edges.
This is the list of edge connections:
[0, 1],[0, 2],[3, 4],[4, 5],[5, 6],[6, 1],[1, 5],[3, 1],[3, 2],[1, 7],[7, 8],[8, 3],[9, 8],[10, 1],[10, 6]
Answer:
0 - 0
1 - 1
2 - 1
6 - 2
5 - 2
3 - 2
7 - 2
10 - 2
4 - 3
8 - 3
9 - 4

Input:
Graph G has 11 nodes, numbered from 0 to 10. Graph G has 12 edges.
This is the list of edge connections:
[0, 7],[7, 1],[6, 2],[2, 5],[5, 3],[4, 8],[8, 3],[1, 9],[9, 6],[10, 1],[10, 6],[10, 5]
Answer:
0 - 0
7 - 1
1 - 2
9 - 3
10 - 3
6 - 4
5 - 4
2 - 5
3 - 5
8 - 6
4 - 7

Input:
Graph G has 11 nodes, numbered from 0 to 10. Graph G has 17 edges.
This is the list of edge connections:
[0, 1],[1, 2],[3, 4],[4, 5],[5, 6],[0, 5],[3, 0],[3, 2],[0, 7],[7, 8],[1, 8],[9, 4],[7, 9],[2, 5],[10, 6],[10, 1],[10, 3]
Answer:
0 - 0
1 - 1
5 - 1
3 - 1
7 - 1
2 - 2
8 - 2
10 - 2
4 - 2
6 - 2
9 - 2

Input:
Graph G has 10 nodes, numbered from 0 to 9. Graph G has 10 edges.
This is the list of edge connections:
[5, 0],[6, 1],[6, 2],[2, 7],[7, 4],[8, 2],[9, 7],[9, 8],[9, 5],[3, 5]
Answer:"#;

const SORT_STANDARD: &str = r#"This is a list of directed edges in a layered graph.
[(2, 5), (1, 6), (6, 3), (0, 1), (2, 4), (2, 7), (1, 8), (1, 2), (1, 9), (9, 5), (5, 10), (7, 10)]

This is the description of what nodes are contained in what layer:  Layer 0: [0] 
Layer 1: [1] 
Layer 2: [6, 8, 2, 9] 
Layer 3: [3, 5, 4, 7] 
Layer 4: [10] 

Write no code and no explanations.

Start from layer 0. 
Consider every node in layer 0, and for each node consider its neighbors in the next layer. 
For each node in layer 0, calculate the positions of the neighbors in the next layer. 
Then, sort the nodes in layer 0 based on the median position of their neighbors.
If a number is NaN, then it is equal to 0.
If a node has no neighbors, assign an associated median of 0.

Repeat the process for every layer.

Finally, I want you to write the layers and the nodes in them once more, but the nodes in the layers have to be sorted according to their associated median value.
Like this:
Layer 0: [<sorted nodes in layer 0>]
If node A has an associated median value that is less than the associated median value of node B, then node A must come before node B. "#;

const SORT_STEPS: &str = r#"This is a list of directed edges in a layered graph.
[(2, 5), (1, 6), (6, 3), (0, 1), (2, 4), (2, 7), (1, 8), (1, 2), (1, 9), (9, 5), (5, 10), (7, 10)]

This is the description of what nodes are contained in what layer:  Layer 0: [0] 
Layer 1: [1] 
Layer 2: [6, 8, 2, 9] 
Layer 3: [3, 5, 4, 7] 
Layer 4: [10] 

Start from layer 0. 
List every node in layer 0, and for each node list its neighbors in the next layer. 
Like this: 
Layer 0: [<node1>, <node2>, ...]
Neighbors of <node1>: [<neighbor1>, <neighbor2>, ...]

Then, for every one of the neighbors, write their index in their layer. So if node 6 belongs to layer 2 and is in the fourth position in layer 2, its index is 3.
Like this:
Index of <neighbor1>: <value>
And under each set of indices write the median of the indices.

Now I want you to start again from layer 0, and this time I want you to list the nodes in every layer and their associated medians.
Like this:
Layer 0:
<node 0> -> <median of the neighbors of node 0>

If a number is NaN, then it is equal to 0.
If a node has no neighbors, assign an associated median of 0.

Finally, I want you to write the layers and the nodes in them once more, but the nodes in the layers have to be sorted according to their associated median value. 
Like this:
Layer 0: [<sorted nodes in layer 0>]
If node A has an associated median value that is less than the associated median value of node B, then node A must come before node B. 
This time, write no additional information other than the layers and the sorted nodes."#;

const SORT_ICL: &str = r#"We want to reduce edge crossings on a layered graph drawing.
You are given a  list of directed edges in a layered graph, and a mapping of which nodes are contained in which layer.
Start from layer 0. 
Consider every node in layer 0, and for each node consider its neighbors in the next layer. 
For each node in layer 0, calculate the positions of the neighbors in the next layer. 
Then, sort the nodes in layer 0 based on the median position of their neighbors.
If a number is NaN, then it is equal to 0.
If a node has no neighbors, assign an associated median of 0.
Repeat the process for every layer.
Finally, I want you to write the layers and the nodes in them once more, but the nodes in the layers have to be sorted according to their associated median value.
Like this:
Layer 0: [<sorted nodes in layer 0>]
If node A has an associated median value that is less than the associated median value of node B, then node A must come before node B.

## Input:
Directed edges:
[(3, 2), (0, 3), (4, 5), (4, 1), (3, 4), (1, 7), (8, 7), (2, 8), (4, 6), (3, 9)]
Layer node mapping:
Layer 0: [0]
Layer 1: [3]
Layer 2: [2, 4, 9]
Layer 3: [8, 5, 1, 6]
Layer 4: [7]

## Answer:
Layer 0: [0]
Layer 1: [3]
Layer 2: [2, 9, 4]
Layer 3: [8, 5, 1, 6]
Layer 4: [7]

## Input:
Directed edges:
[(0, 1), (3, 2), (4, 3), (4, 5), (2, 7), (8, 6), (7, 8), (4, 9), (0, 4)]
Layer node mapping:
Layer 0: [0]
Layer 1: [1, 4]
Layer 2: [3, 5, 9]
Layer 3: [2]
Layer 4: [7]
Layer 5: [8]
Layer 6: [6]

## Answer:
Layer 0: [0]
Layer 1: [1, 4]
Layer 2: [3, 5, 9]
Layer 3: [2]
Layer 4: [7]
Layer 5: [8]
Layer 6: [6]

## Input:
Directed edges:
[(2, 5), (1, 4), (3, 1), (9, 2), (9, 3), (9, 8), (9, 6), (9, 7), (0, 9), (6, 1)]
Layer node mapping:
Layer 0: [0]
Layer 1: [9]
Layer 2: [2, 3, 8, 6, 7]
Layer 3: [5, 1]
Layer 4: [4]

## Answer:
Layer 0: [0]
Layer 1: [9]
Layer 2: [2, 8, 7, 3, 6]
Layer 3: [5, 1]
Layer 4: [4]

## Input:
Directed edges:
[(0, 8), (8, 1), (8, 2), (2, 7), (7, 3), (6, 3), (2, 6), (6, 4), (9, 5), (4, 9)]
Layer node mapping:
Layer 0: [0]
Layer 1: [8]
Layer 2: [1, 2]
Layer 3: [7, 6]
Layer 4: [3, 4]
Layer 5: [9]
Layer 6: [5]

## Answer:
Layer 0: [0]
Layer 1: [8]
Layer 2: [1, 2]
Layer 3: [7, 6]
Layer 4: [3, 4]
Layer 5: [9]
Layer 6: [5]

## Input:
Directed edges:
[(0, 5), (5, 1), (1, 6), (8, 4), (0, 8), (9, 2), (8, 9), (5, 10), (10, 2), (8, 10), (10, 6), (10, 7), (10, 3)]
Layer node mapping:
Layer 0: [0]
Layer 1: [5, 8]
Layer 2: [1, 10, 4, 9]
Layer 3: [6, 2, 7, 3]

## Answer:
Layer 0: [0]
Layer 1: [5, 8]
Layer 2: [1, 4, 9, 10]
Layer 3: [6, 2, 7, 3]

## Input:
Directed edges:
[(2, 5), (1, 6), (6, 3), (0, 1), (2, 4), (2, 7), (1, 8), (1, 2), (1, 9), (9, 5), (5, 10), (7, 10)]
Layer node mapping:
Layer 0: [0]
Layer 1: [1]
Layer 2: [6, 8, 2, 9]
Layer 3: [3, 5, 4, 7]
Layer 4: [10]

## Answer:"#;

const CROSS_STANDARD: &str = r#"Given the following arrays: 
A: [6, 4, 7, 8, 9, 2]
B: [5, 10]

And the following list of tuples:
Tuples: [(4, 5), (6, 5), (6, 10), (4, 10)]

Where for each tuple the first element of comes from array A, and the second element comes from array B.

Assuming this is a bipartite graph, count the edge crossings. Two edges that share a source or a target can not cross. Two edges cross if the order of their sources is opposite to the order of their targets.

Exclude all edge crossings where edges have the same source or the same target.

Write no explanations and no code. Return the pairs of edges that cross, one per line. There might be no edge crossings - in that case, return an empty list."#;

const CROSS_STEPS: &str = r#"You are a very advanced program that can help me with counting edge crossings in a bipartite graph. Write the answer to the following question.

Given the following arrays: 
A: [6, 4, 7, 8, 9, 2]
B: [5, 10]

And the following list of edges:
Tuples: [(4, 5), (6, 5), (6, 10), (4, 10)]

Where for each edges the first element comes from array A, and the second element comes from array B.

VERY IMPORTANT: If there is a single edge, write 0 and stop writing!. If array A has length 1, write 0 and stop writing!. If array B has length 1, write 0 and stop writing!

Otherwise keep going and consider all the combinations of edge pairs. 

Then, exclude all the pairs that have the same first element. Write the list.
Then, exclude all the pairs that have the same second element. Write the list again.

Now for every pair of edges left, consider the first one. Say that s1 is the index of its first element in A, and t1 is the index of its second element in B. Then consider the second edge. Say that s2 is the index of its first element in A, and t2 is the index of its second element in B.
Write down s1, t1, s2 and t2 for every pair, like this:
<pair> => s1 = <value>, t1 = <value>, s2 = <value>, t2 = <value>

Now exclude all the pairs for which s1 > s2 and t1 < t2. Write the list again.

Now exclude all the pairs for which s1 < s2 and t1 > t2. Write the list again.

Write the number of edges left as a number."#;

const CROSS_ICL: &str = r#"You are a very advanced program that can help me with counting edge crossings in a bipartite graph.
I will provide you with the arrays of nodes of layers A and B and a list of edges as tuples.
For each edge the first element comes from array A, and the second element comes from array B.

Assuming this is a bipartite graph, count the edge crossings. 
Two edges that share a source or a target can not cross. 
Two edges cross if the order of their sources is opposite to the order of their targets.

Exclude all crossings where edges have the same source or the same target.

Write no explanations and no code. Return the number of edges that cross. There might be no edge crossings - in that case, return 0.

## Input:
Layer arrays:
A: [0]
B: [5]
Edge tuples:
Tuples: [(0, 5)]

## Answer:
0

## Input:
Layer arrays:
A: [1]
B: [6, 7]
Edge tuples:
Tuples: [(1, 6), (1, 7)]

## Answer:
0

## Input:
Layer arrays:
A: [7, 4, 2, 3]
B: [9, 8, 5]
Edge tuples:
Tuples: [(3, 8), (3, 9), (4, 9), (2, 8), (2, 5)]

## Answer:
3

## Input:
Layer arrays:
A: [9]
B: [5]
Edge tuples:
Tuples: [(9, 5)]

## Answer:
0

## Input:
Layer arrays:
A: [3, 5, 4, 7]
B: [10]
Edge tuples:
Tuples: [(5, 10), (7, 10)]

## Answer:
0

## Input:
Layer arrays:
A: [6, 4, 7, 8, 9, 2]
B: [5, 10]
Edge tuples:
Tuples: [(4, 5), (6, 5), (6, 10), (4, 10)]

## Answer:"#;

const LENGTH_STANDARD: &str = r#"The following is the description of a layered graph. 
A layered graph is a graph where each node is contained in a single layer.
The following is the list of directed edges, formatted as [(<source_id>, <target_id>)].

edge_list: [(0, 6), (1, 6), (7, 4), (3, 8), (2, 9), (2, 10), (0, 10), (10, 4)]

The second is a mapping of layers to the nodes contained within. Every array is a different layer, and the numbers in every array indicate the nodes in that layer.

Layer 0: [0] 
Layer 1: [1, 2, 3, 7] 
Layer 2: [6] 
Layer 3: [10] 
Layer 4: [5, 8, 9] 
Layer 5: [4] 

Count the total edge length. The edge length of each edge e is always equal to the absolute value of the number of the layer the target is contained in, minus the number of the layer the source is contained in. The edge length can't be negative.

Write no explanations and no code. Return the total sum of the lengths."#;

const LENGTH_STEPS: &str = r#"The following is the description of a layered graph. 
A layered graph is a graph where each node is contained in a single layer.
The following is the list of directed edges, formatted as [(<source_id>, <target_id>)].

edge_list: [(0, 6), (1, 6), (7, 4), (3, 8), (2, 9), (2, 10), (0, 10), (10, 4)]

The second is a mapping of layers to the nodes contained within. Every array is a different layer, and the numbers in every array indicate the nodes in that layer.

Layer 0: [0] 
Layer 1: [1, 2, 3, 7] 
Layer 2: [6] 
Layer 3: [10] 
Layer 4: [5, 8, 9] 
Layer 5: [4] 

Count the total edge length. The edge length of each edge e is always equal to the absolute value of the number of the layer the target is contained in, minus the number of the layer the source is contained in. The edge length can't be negative.

First, for each edge, write the layer of the source node and the layer of the target node.
Then, write each edge and its associated length.
In the end, write the total sum of the lengths.
Write the final sum in a separate line at the end."#;

const LENGTH_ICL: &str = r#"A layered graph is a graph where each node is contained in a single layer.
A layered graph is described by list of directed edges, formatted as [(<source_id>, <target_id>)], and a mapping of layers to the nodes contained within.
Every array in the mapping is a different layer, and the numbers in every array indicate the nodes in that layer.

Count the total edge length. 
The edge length of each edge e is always equal to the absolute value of the number of the layer the target is contained in, minus the number of the layer the source is contained in.
The edge length can't be negative.

Write no explanations and no code. Return the total sum of the lengths.

## Input:
List of edges formatted as [<source_id>, <target_id>]:
edges = [(0, 1), (1, 2), (0, 3), (5, 4), (5, 6), (1, 6), (1, 8), (8, 2), (7, 4), (9, 2), (9, 3), (7, 10)]
Mapping of layers to nodes:
ranks = Layer 0: [0]
Layer 1: [1, 5, 7, 9]
Layer 2: [8]
Layer 3: [6, 10]
Layer 4: [3]
Layer 5: [2, 4]
## Answer:
34

## Input:
List of edges formatted as [<source_id>, <target_id>]:
edges = [(0, 1), (1, 2), (3, 2), (0, 3), (7, 6), (7, 1), (1, 6), (4, 1), (4, 3), (1, 8), (2, 8), (2, 5), (9, 5), (9, 6), (3, 10), (1, 10), (0, 10)]
Mapping of layers to nodes:
ranks = Layer 0: [0]
Layer 1: [4, 7, 9]
Layer 2: [3]
Layer 3: [1]
Layer 4: [2, 6, 10]
Layer 5: [5, 8]
## Answer:
35

## Input:
List of edges formatted as [<source_id>, <target_id>]:
edges = [(0, 7), (1, 7), (6, 2), (5, 2), (5, 3), (0, 2), (8, 9), (9, 3), (10, 6), (10, 9)]
Mapping of layers to nodes:
ranks = Layer 0: [0]
Layer 1: [1, 4, 5, 8]
Layer 2: [10]
Layer 3: [6, 9]
Layer 4: [2, 3, 7]
## Answer:
23

## Input:
List of edges formatted as [<source_id>, <target_id>]:
edges = [(0, 6), (6, 1), (7, 1), (7, 2), (7, 4), (9, 3), (4, 9), (5, 10)]
Mapping of layers to nodes:
ranks = Layer 0: [0]
Layer 1: [7]
Layer 2: [2, 4, 6]
Layer 3: [5, 9]
Layer 4: []
Layer 5: [1, 3, 8, 10]
## Answer:
16

## Input:
List of edges formatted as [<source_id>, <target_id>]:
edges = [(4, 2), (2, 5), (1, 5), (6, 1), (0, 7), (3, 8), (1, 2), (6, 9), (0, 9), (10, 5)]
Mapping of layers to nodes:
ranks = Layer 0: [0]
Layer 1: [3, 4, 6, 7, 10]
Layer 2: [8, 9]
Layer 3: [1]
Layer 4: [2]
Layer 5: [5]
## Answer:
18

## Input:
List of edges formatted as [<source_id>, <target_id>]:
edges = [(0, 6), (1, 6), (7, 4), (3, 8), (2, 9), (2, 10), (0, 10), (10, 4)]
Mapping of layers to nodes:
ranks = Layer 0: [0]
Layer 1: [1, 2, 3, 7]
Layer 2: [6]
Layer 3: [10]
Layer 4: [5, 8, 9]
Layer 5: [4]
## Answer:"#;

#[test]
fn layer_assignment_prompts_are_frozen() {
    assert_eq!(
        built("rank-main", Strategy::Standard, 0).text,
        RANK_STANDARD
    );
    assert_eq!(built("rank-main", Strategy::Steps, 0).text, RANK_STEPS);
    let spec = built("rank-main", Strategy::icl(3).unwrap(), 5);
    assert_eq!(
        spec.icl_example_ids,
        ["rank-pool-1", "rank-pool-2", "rank-pool-3"]
    );
    assert_eq!(spec.text, RANK_ICL);
}

#[test]
fn sort_layers_prompts_are_frozen() {
    assert_eq!(
        built("sort-main", Strategy::Standard, 0).text,
        SORT_STANDARD
    );
    assert_eq!(built("sort-main", Strategy::Steps, 0).text, SORT_STEPS);
    let spec = built("sort-main", Strategy::icl(5).unwrap(), 7);
    assert_eq!(
        spec.icl_example_ids,
        [
            "sort-pool-1",
            "sort-pool-2",
            "sort-pool-3",
            "sort-pool-4",
            "sort-pool-5"
        ]
    );
    assert_eq!(spec.text, SORT_ICL);
}

#[test]
fn count_crossings_prompts_are_frozen() {
    assert_eq!(
        built("cross-main", Strategy::Standard, 0).text,
        CROSS_STANDARD
    );
    assert_eq!(built("cross-main", Strategy::Steps, 0).text, CROSS_STEPS);
    let spec = built("cross-main", Strategy::icl(5).unwrap(), 7);
    assert_eq!(
        spec.icl_example_ids,
        [
            "cross-pool-1",
            "cross-pool-2",
            "cross-pool-3",
            "cross-pool-4",
            "cross-pool-5"
        ]
    );
    assert_eq!(spec.text, CROSS_ICL);
}

#[test]
fn edge_length_prompts_are_frozen() {
    assert_eq!(
        built("length-main", Strategy::Standard, 0).text,
        LENGTH_STANDARD
    );
    assert_eq!(built("length-main", Strategy::Steps, 0).text, LENGTH_STEPS);
    let spec = built("length-main", Strategy::icl(5).unwrap(), 7);
    assert_eq!(
        spec.icl_example_ids,
        [
            "length-pool-1",
            "length-pool-2",
            "length-pool-3",
            "length-pool-4",
            "length-pool-5"
        ]
    );
    assert_eq!(spec.text, LENGTH_ICL);
}
