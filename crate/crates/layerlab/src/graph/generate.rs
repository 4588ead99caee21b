//! Seeded random graphs. Same spec + same seed = byte-identical graph.

use chrono::{Days, NaiveDate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use super::model::{Edge, Graph, GraphError, NodeData, NodeId};

/// What to generate. Construct with [`GenerateSpec::new`] and refine with
/// the builder methods.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerateSpec {
    pub node_count: u32,
    pub edge_count: u32,
    pub directed: bool,
    /// When false, duplicate node pairs may appear (self loops never do).
    pub simple: bool,
    /// Every edge gets a weight drawn uniformly from `(floor, floor + 10]`.
    pub weight_floor: Option<f64>,
    /// Every node gets a date drawn uniformly from the inclusive range.
    pub timestamp_range: Option<(NaiveDate, NaiveDate)>,
}

impl GenerateSpec {
    pub fn new(node_count: u32, edge_count: u32) -> Self {
        GenerateSpec {
            node_count,
            edge_count,
            directed: false,
            simple: true,
            weight_floor: None,
            timestamp_range: None,
        }
    }

    pub fn directed(mut self, directed: bool) -> Self {
        self.directed = directed;
        self
    }

    pub fn allow_duplicate_edges(mut self) -> Self {
        self.simple = false;
        self
    }

    pub fn weight_floor(mut self, floor: f64) -> Self {
        self.weight_floor = Some(floor);
        self
    }

    pub fn timestamps(mut self, start: NaiveDate, end: NaiveDate) -> Self {
        self.timestamp_range = Some((start, end));
        self
    }
}

fn all_pairs(n: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::with_capacity((n as usize * n.saturating_sub(1) as usize) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Pick `take` entries by partial Fisher-Yates; the selection order is the
/// edge order of the result.
fn pick<T: Copy>(pool: &mut [T], take: usize, rng: &mut ChaCha8Rng) -> Vec<T> {
    debug_assert!(take <= pool.len());
    for k in 0..take {
        let swap_with = k + rng.random_range(0..pool.len() - k);
        pool.swap(k, swap_with);
    }
    pool[..take].to_vec()
}

fn finish(
    spec: &GenerateSpec,
    pairs: Vec<(u32, u32)>,
    rng: &mut ChaCha8Rng,
) -> Result<Graph, GraphError> {
    let mut edges: Vec<Edge> = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let weight = spec
            .weight_floor
            .map(|floor| floor + 10.0 * (1.0 - rng.random::<f64>()));
        edges.push(Edge {
            source: NodeId(a),
            target: NodeId(b),
            weight,
        });
    }
    let mut nodes: Vec<NodeData> = (0..spec.node_count)
        .map(|i| NodeData::plain(NodeId(i)))
        .collect();
    if let Some((start, end)) = spec.timestamp_range {
        let span = (end - start).num_days();
        if span < 0 {
            return Err(GraphError::Infeasible(
                "timestamp range ends before it starts".into(),
            ));
        }
        for node in &mut nodes {
            let offset = rng.random_range(0..=span) as u64;
            node.timestamp = start.checked_add_days(Days::new(offset));
        }
    }
    Graph::build(spec.directed, nodes, edges)
}

/// Generate a graph from `spec`, deterministically in `seed`.
pub fn generate_random_graph(spec: &GenerateSpec, seed: u64) -> Result<Graph, GraphError> {
    let n = spec.node_count;
    let m = spec.edge_count as usize;
    if n == 0 && m > 0 {
        return Err(GraphError::Infeasible("edges without nodes".into()));
    }
    if n == 1 && m > 0 {
        return Err(GraphError::Infeasible(
            "a single node admits no self-loop-free edges".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = if spec.simple {
        let mut pool = all_pairs(n);
        if m > pool.len() {
            return Err(GraphError::Infeasible(format!(
                "{m} edges requested but a simple graph on {n} nodes holds at most {}",
                pool.len()
            )));
        }
        pick(&mut pool, m, &mut rng)
    } else {
        (0..m)
            .map(|_| {
                let a = rng.random_range(0..n);
                let b = loop {
                    let b = rng.random_range(0..n);
                    if b != a {
                        break b;
                    }
                };
                (a, b)
            })
            .collect()
    };
    finish(spec, pairs, &mut rng)
}

/// Like [`generate_random_graph`] in simple mode, but the result is always
/// connected: a random spanning tree over a shuffled node order is laid
/// down first, then the remaining edges are picked from the unused pairs.
pub fn generate_connected_graph(spec: &GenerateSpec, seed: u64) -> Result<Graph, GraphError> {
    let n = spec.node_count;
    let m = spec.edge_count as usize;
    if n == 0 {
        return Err(GraphError::Infeasible("a connected graph needs a node".into()));
    }
    let tree_edges = n as usize - 1;
    let max = (n as usize * (n as usize - 1)) / 2;
    if m < tree_edges || m > max {
        return Err(GraphError::Infeasible(format!(
            "a connected simple graph on {n} nodes needs between {tree_edges} and {max} edges, got {m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<u32> = (0..n).collect();
    for k in (1..order.len()).rev() {
        let j = rng.random_range(0..=k);
        order.swap(k, j);
    }
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(m);
    let mut used: BTreeSet<(u32, u32)> = BTreeSet::new();
    for i in 1..n as usize {
        let parent = order[rng.random_range(0..i)];
        let child = order[i];
        let key = (parent.min(child), parent.max(child));
        pairs.push((parent, child));
        used.insert(key);
    }
    let mut pool: Vec<(u32, u32)> = all_pairs(n)
        .into_iter()
        .filter(|p| !used.contains(p))
        .collect();
    pairs.extend(pick(&mut pool, m - tree_edges, &mut rng));
    finish(spec, pairs, &mut rng)
}
