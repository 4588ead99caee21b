//! Task instances and the example pool.
//!
//! A [`TaskInstance`] is one concrete question: the payload carries
//! everything needed to build its prompt, compute its truth, and score an
//! answer. The [`ExamplePool`] holds instances grouped by task so that
//! in-context prompts can sample solved examples, always excluding the
//! instance being asked.

use chrono::NaiveDate;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::{HarnessError, TaskKind};
use crate::graph::{Graph, GraphFormat, NodeId};
use crate::layout::LayeredOrdering;

/// One bipartite layer gap: the fixed left/right orderings and the edges
/// between them. Crossing questions are asked per gap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGap {
    pub side_a: Vec<NodeId>,
    pub side_b: Vec<NodeId>,
    pub edges: Vec<(NodeId, NodeId)>,
}

/// Checkable requirements for generated graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationConstraints {
    pub node_count: usize,
    pub edge_count: usize,
    /// Every edge weight must exceed this value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_weight: Option<f64>,
    /// Every node timestamp must fall inside this inclusive range.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub date_range: Option<(NaiveDate, NaiveDate)>,
}

impl GenerationConstraints {
    pub fn plain(node_count: usize, edge_count: usize) -> Self {
        GenerationConstraints {
            node_count,
            edge_count,
            min_weight: None,
            date_range: None,
        }
    }

    /// Number of individually checkable requirements.
    pub fn total_checks(&self) -> usize {
        2 + usize::from(self.min_weight.is_some()) + usize::from(self.date_range.is_some())
    }
}

/// Invented boolean graph properties used for definition-following checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphProperty {
    /// Edge count is a multiple of node count.
    Bulbaceous,
    /// No two edges connect the same pair of nodes.
    Flamboyous,
}

/// The task-specific data of one instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "task", rename_all = "kebab-case")]
pub enum TaskPayload {
    LayerAssignment {
        graph: Graph,
        source: NodeId,
    },
    SortLayers {
        graph: Graph,
        ordering: LayeredOrdering,
    },
    CountCrossings {
        gap: BipartiteGap,
    },
    EdgeLength {
        graph: Graph,
        ordering: LayeredOrdering,
    },
    GraphGeneration {
        constraints: GenerationConstraints,
    },
    FormatConversion {
        graph: Graph,
        from: GraphFormat,
        to: GraphFormat,
    },
    PropertyCheck {
        property: GraphProperty,
        graph: Graph,
    },
    GraphFromScene {
        scene: String,
        truth: Graph,
        /// Ask for interaction counts drawn as edge thickness.
        #[serde(default)]
        weighted: bool,
    },
    SceneFromGraph {
        graph: Graph,
    },
    SvgFromDot {
        graph: Graph,
    },
}

impl TaskPayload {
    pub fn kind(&self) -> TaskKind {
        match self {
            TaskPayload::LayerAssignment { .. } => TaskKind::LayerAssignment,
            TaskPayload::SortLayers { .. } => TaskKind::SortLayers,
            TaskPayload::CountCrossings { .. } => TaskKind::CountCrossings,
            TaskPayload::EdgeLength { .. } => TaskKind::EdgeLength,
            TaskPayload::GraphGeneration { .. } => TaskKind::GraphGeneration,
            TaskPayload::FormatConversion { .. } => TaskKind::FormatConversion,
            TaskPayload::PropertyCheck { .. } => TaskKind::PropertyCheck,
            TaskPayload::GraphFromScene { .. } => TaskKind::GraphFromScene,
            TaskPayload::SceneFromGraph { .. } => TaskKind::SceneFromGraph,
            TaskPayload::SvgFromDot { .. } => TaskKind::SvgFromDot,
        }
    }
}

/// One concrete question with a stable id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskInstance {
    pub id: String,
    #[serde(flatten)]
    pub payload: TaskPayload,
}

impl TaskInstance {
    pub fn new(id: impl Into<String>, payload: TaskPayload) -> Self {
        TaskInstance {
            id: id.into(),
            payload,
        }
    }

    pub fn kind(&self) -> TaskKind {
        self.payload.kind()
    }
}

/// Instances grouped by task, with seeded sampling for in-context
/// examples.
#[derive(Debug, Clone, Default)]
pub struct ExamplePool {
    by_task: BTreeMap<TaskKind, Vec<TaskInstance>>,
    ids: std::collections::BTreeSet<String>,
}

impl ExamplePool {
    pub fn new(instances: Vec<TaskInstance>) -> Result<Self, HarnessError> {
        let mut pool = ExamplePool::default();
        for inst in instances {
            pool.insert(inst)?;
        }
        Ok(pool)
    }

    pub fn insert(&mut self, instance: TaskInstance) -> Result<(), HarnessError> {
        if !self.ids.insert(instance.id.clone()) {
            return Err(HarnessError::DuplicateInstance(instance.id));
        }
        self.by_task
            .entry(instance.kind())
            .or_default()
            .push(instance);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn for_task(&self, task: TaskKind) -> &[TaskInstance] {
        self.by_task.get(&task).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn instances(&self) -> impl Iterator<Item = &TaskInstance> {
        self.by_task.values().flatten()
    }

    pub fn get(&self, id: &str) -> Result<&TaskInstance, HarnessError> {
        self.instances()
            .find(|i| i.id == id)
            .ok_or_else(|| HarnessError::UnknownInstance(id.to_string()))
    }

    /// Draw `k` distinct instances of `task`, never returning `exclude`.
    /// The draw is a seeded partial shuffle, so equal seeds give equal
    /// samples. Order within the sample follows the shuffle.
    pub fn sample(
        &self,
        task: TaskKind,
        k: usize,
        exclude: &str,
        seed: u64,
    ) -> Result<Vec<&TaskInstance>, HarnessError> {
        let mut eligible: Vec<&TaskInstance> = self
            .for_task(task)
            .iter()
            .filter(|i| i.id != exclude)
            .collect();
        if eligible.len() < k {
            return Err(HarnessError::PoolTooSmall {
                task,
                needed: k,
                available: eligible.len(),
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Partial Fisher-Yates: position i takes a uniform pick from i..n.
        for i in 0..k {
            let j = rng.random_range(i..eligible.len());
            eligible.swap(i, j);
        }
        eligible.truncate(k);
        Ok(eligible)
    }
}

/// Split a layered drawing into per-gap crossing instances, one per
/// consecutive layer pair. Every edge must connect adjacent layers.
/// Ids are `{base_id}-gap{i}` for the gap between layers `i` and `i+1`.
pub fn crossing_gap_instances(
    base_id: &str,
    graph: &Graph,
    ordering: &LayeredOrdering,
) -> Result<Vec<TaskInstance>, HarnessError> {
    let positions = ordering.positions();
    let mut per_gap: Vec<Vec<(NodeId, NodeId)>> =
        vec![Vec::new(); ordering.num_layers().saturating_sub(1)];
    for edge in graph.edges() {
        let (&(la, _), &(lb, _)) = match (positions.get(&edge.source), positions.get(&edge.target))
        {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(crate::layout::LayoutError::MissingNode(edge.source).into()),
        };
        let (lo, hi) = if la <= lb { (la, lb) } else { (lb, la) };
        if hi - lo != 1 {
            return Err(
                crate::layout::LayoutError::LongEdge(edge.source, edge.target, (hi - lo) as u32)
                    .into(),
            );
        }
        per_gap[lo].push((edge.source, edge.target));
    }
    Ok(per_gap
        .into_iter()
        .enumerate()
        .map(|(i, edges)| {
            TaskInstance::new(
                format!("{base_id}-gap{i}"),
                TaskPayload::CountCrossings {
                    gap: BipartiteGap {
                        side_a: ordering.layer(i).to_vec(),
                        side_b: ordering.layer(i + 1).to_vec(),
                        edges,
                    },
                },
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn tiny_gap(id: &str) -> TaskInstance {
        TaskInstance::new(
            id,
            TaskPayload::CountCrossings {
                gap: BipartiteGap {
                    side_a: vec![NodeId(0)],
                    side_b: vec![NodeId(1)],
                    edges: vec![(NodeId(0), NodeId(1))],
                },
            },
        )
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let err = ExamplePool::new(vec![tiny_gap("a"), tiny_gap("a")]).unwrap_err();
        assert!(matches!(err, HarnessError::DuplicateInstance(id) if id == "a"));
    }

    #[test]
    fn sampling_is_seeded_and_excludes_the_query() {
        let pool = ExamplePool::new((0..8).map(|i| tiny_gap(&format!("i{i}"))).collect()).unwrap();
        let a = pool.sample(TaskKind::CountCrossings, 5, "i3", 42).unwrap();
        let b = pool.sample(TaskKind::CountCrossings, 5, "i3", 42).unwrap();
        let ids: Vec<&str> = a.iter().map(|i| i.id.as_str()).collect();
        assert_eq!(
            ids,
            b.iter().map(|i| i.id.as_str()).collect::<Vec<_>>(),
            "same seed, same sample"
        );
        assert!(!ids.contains(&"i3"));
        let mut uniq = ids.clone();
        uniq.sort_unstable();
        uniq.dedup();
        assert_eq!(uniq.len(), 5);
    }

    #[test]
    fn sampling_reports_shortfall() {
        let pool = ExamplePool::new(vec![tiny_gap("only")]).unwrap();
        let err = pool
            .sample(TaskKind::CountCrossings, 3, "only", 1)
            .unwrap_err();
        assert!(
            matches!(err, HarnessError::PoolTooSmall { needed: 3, available: 0, .. }),
            "{err}"
        );
    }

    #[test]
    fn gap_decomposition_splits_every_gap() {
        let g = Graph::from_pairs(true, 5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let lo = LayeredOrdering::from_layers(vec![
            vec![NodeId(0)],
            vec![NodeId(1), NodeId(2)],
            vec![NodeId(3)],
            vec![NodeId(4)],
        ])
        .unwrap();
        let gaps = crossing_gap_instances("x", &g, &lo).unwrap();
        assert_eq!(gaps.len(), 3);
        assert_eq!(gaps[0].id, "x-gap0");
        match &gaps[1].payload {
            TaskPayload::CountCrossings { gap } => {
                assert_eq!(gap.side_a, vec![NodeId(1), NodeId(2)]);
                assert_eq!(gap.edges.len(), 2);
            }
            other => panic!("wrong payload {other:?}"),
        }
    }

    #[test]
    fn gap_decomposition_rejects_long_edges() {
        let g = Graph::from_pairs(true, 3, &[(0, 2)]).unwrap();
        let lo = LayeredOrdering::from_layers(vec![
            vec![NodeId(0)],
            vec![NodeId(1)],
            vec![NodeId(2)],
        ])
        .unwrap();
        assert!(crossing_gap_instances("x", &g, &lo).is_err());
    }
}
