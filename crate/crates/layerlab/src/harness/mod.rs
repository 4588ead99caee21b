//! The experiment harness: prompt construction for every task under the
//! three asking strategies, total answer parsing, scoring against the
//! layout oracles, batch execution, and report emission.
//!
//! The harness is organized as a pipeline of pure steps:
//!
//! ```text
//! TaskInstance --build_prompt--> PromptSpec --responder--> text
//!      |                                                     |
//!      +--truth_of--> TruthValue <--score-- parse_response --+
//! ```
//!
//! Everything before and after the responder call is deterministic, so
//! whole experiments replay byte-for-byte from their transcripts.

mod answer;
mod parse;
mod pool;
mod report;
mod run;
mod score;
mod templates;

pub use answer::oracle_response;
pub use parse::{parse_response, ParseFailure, ParsedAnswer};
pub use pool::{
    crossing_gap_instances, BipartiteGap, ExamplePool, GenerationConstraints, GraphProperty,
    TaskInstance, TaskPayload,
};
pub use report::{summarize, Report, ReportRow};
pub use run::{run_experiment, ExperimentRecord, RunOptions, SpecBundle};
pub use score::{numeric_abs_error, score, score_scene_graph, truth_of, TruthValue};
pub use templates::{build_prompt, PromptOptions, PromptSpec};

use serde::{Deserialize, Serialize};

use crate::graph::GraphError;
use crate::layout::LayoutError;

/// The ten prompt families. Each kind binds one template family, one
/// parser, and one scorer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TaskKind {
    /// Assign each node its shortest-path distance from a source node.
    LayerAssignment,
    /// Re-sort every layer of a layered drawing by neighbor medians.
    SortLayers,
    /// Count edge crossings in one bipartite layer gap.
    CountCrossings,
    /// Sum |layer(target) - layer(source)| over all edges.
    EdgeLength,
    /// Produce a JSON graph meeting count/attribute constraints.
    GraphGeneration,
    /// Rewrite a graph from one interchange format into another.
    FormatConversion,
    /// Decide an invented boolean property of a graph.
    PropertyCheck,
    /// Extract an interaction graph from a prose scene.
    GraphFromScene,
    /// Write a prose scene whose interactions mirror a graph.
    SceneFromGraph,
    /// Translate a DOT graph into an SVG drawing.
    SvgFromDot,
}

impl TaskKind {
    pub const ALL: [TaskKind; 10] = [
        TaskKind::LayerAssignment,
        TaskKind::SortLayers,
        TaskKind::CountCrossings,
        TaskKind::EdgeLength,
        TaskKind::GraphGeneration,
        TaskKind::FormatConversion,
        TaskKind::PropertyCheck,
        TaskKind::GraphFromScene,
        TaskKind::SceneFromGraph,
        TaskKind::SvgFromDot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TaskKind::LayerAssignment => "layer-assignment",
            TaskKind::SortLayers => "sort-layers",
            TaskKind::CountCrossings => "count-crossings",
            TaskKind::EdgeLength => "edge-length",
            TaskKind::GraphGeneration => "graph-generation",
            TaskKind::FormatConversion => "format-conversion",
            TaskKind::PropertyCheck => "property-check",
            TaskKind::GraphFromScene => "graph-from-scene",
            TaskKind::SceneFromGraph => "scene-from-graph",
            TaskKind::SvgFromDot => "svg-from-dot",
        }
    }

    /// Tasks whose final answer is a single integer.
    pub fn is_numeric(self) -> bool {
        matches!(self, TaskKind::CountCrossings | TaskKind::EdgeLength)
    }

    /// Tasks with step scaffolding and in-context example templates. The
    /// remaining kinds are asked in their plain form only.
    pub fn supports_all_strategies(self) -> bool {
        matches!(
            self,
            TaskKind::LayerAssignment
                | TaskKind::SortLayers
                | TaskKind::CountCrossings
                | TaskKind::EdgeLength
        )
    }
}

impl std::fmt::Display for TaskKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TaskKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TaskKind::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown task {s:?}"))
    }
}

/// How the question is asked: plain instruction, step-by-step scaffold,
/// or k solved examples prepended (in-context learning).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Standard,
    Steps,
    Icl(u8),
}

impl Strategy {
    pub const ICL_RANGE: std::ops::RangeInclusive<u8> = 3..=5;

    /// In-context variant with `k` examples; `k` must be 3, 4, or 5.
    pub fn icl(k: u8) -> Result<Strategy, HarnessError> {
        if Strategy::ICL_RANGE.contains(&k) {
            Ok(Strategy::Icl(k))
        } else {
            Err(HarnessError::BadIclCount(k))
        }
    }

    pub fn name(self) -> String {
        match self {
            Strategy::Standard => "standard".into(),
            Strategy::Steps => "steps".into(),
            Strategy::Icl(k) => format!("icl-{k}"),
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

impl std::str::FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(Strategy::Standard),
            "steps" => Ok(Strategy::Steps),
            other => match other.strip_prefix("icl-") {
                Some(k) => {
                    let k: u8 = k.parse().map_err(|_| format!("bad example count in {other:?}"))?;
                    Strategy::icl(k).map_err(|e| e.to_string())
                }
                None => Err(format!(
                    "unknown strategy {other:?}; expected standard, steps, or icl-<k>"
                )),
            },
        }
    }
}

impl Serialize for Strategy {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Strategy {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether a sorted ordering has fewer, equally many, or more crossings
/// than the ordering it started from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossingDelta {
    Fewer,
    Equal,
    More,
}

impl std::fmt::Display for CrossingDelta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CrossingDelta::Fewer => "fewer",
            CrossingDelta::Equal => "equal",
            CrossingDelta::More => "more",
        })
    }
}

/// The scored verdict on one answer.
///
/// Numeric tasks use the first four variants exclusively. Layer
/// assignment always scores as [`ScoreOutcome::PartialRatio`] with a
/// validity flag; layer sorting scores as [`ScoreOutcome::OrderingDelta`]
/// against the crossings of the input ordering.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ScoreOutcome {
    Correct,
    IncorrectOver,
    IncorrectUnder,
    /// No usable answer could be extracted; `reason` is a short code,
    /// optionally followed by detail after a colon.
    Malformed { reason: String },
    /// Fraction of the answer that matches the truth, in `[0, 1]`.
    /// For layerings, `valid` reports whether the answer is internally
    /// consistent (total, source at rank 0, every ranked node adjacent
    /// to the previous rank) independently of matching the oracle.
    PartialRatio {
        ratio: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        valid: Option<bool>,
    },
    OrderingDelta { delta: CrossingDelta },
}

impl ScoreOutcome {
    pub fn malformed(reason: impl Into<String>) -> ScoreOutcome {
        ScoreOutcome::Malformed {
            reason: reason.into(),
        }
    }

    pub fn is_correct(&self) -> bool {
        matches!(self, ScoreOutcome::Correct)
    }

    /// Stable bucket label for reports: partial ratios are bucketed to
    /// tenths so histograms stay readable.
    pub fn class_label(&self) -> String {
        match self {
            ScoreOutcome::Correct => "correct".into(),
            ScoreOutcome::IncorrectOver => "incorrect-over".into(),
            ScoreOutcome::IncorrectUnder => "incorrect-under".into(),
            ScoreOutcome::Malformed { .. } => "malformed".into(),
            ScoreOutcome::PartialRatio { ratio, .. } => {
                format!("ratio-{:.1}", (ratio * 10.0).round() / 10.0)
            }
            ScoreOutcome::OrderingDelta { delta } => format!("crossings-{delta}"),
        }
    }
}

/// Errors from prompt construction, pool sampling, scoring, and batch
/// plumbing. Parser failures are not errors; they become
/// [`ScoreOutcome::Malformed`].
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("the {task} pool has {available} other instances; {needed} are required")]
    PoolTooSmall {
        task: TaskKind,
        needed: usize,
        available: usize,
    },
    #[error("duplicate instance id {0:?} in the example pool")]
    DuplicateInstance(String),
    #[error("unknown instance id {0:?}")]
    UnknownInstance(String),
    #[error("{task} prompts come only in the standard form; {strategy} is not available")]
    UnsupportedStrategy { task: TaskKind, strategy: Strategy },
    #[error("prompt is {chars} characters, over the {limit}-character budget")]
    PromptTooLong { chars: usize, limit: usize },
    #[error("in-context prompts use 3 to 5 examples, got {0}")]
    BadIclCount(u8),
    #[error("answer and truth disagree in shape for {task}: {detail}")]
    AnswerShape { task: TaskKind, detail: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error("transcript i/o failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("transcript line is not a record: {0}")]
    Json(#[from] serde_json::Error),
}
