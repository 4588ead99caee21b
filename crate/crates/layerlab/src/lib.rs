//! layerlab is a laboratory for layered graph drawing: deterministic
//! implementations of the classic Sugiyama subtasks (layer assignment,
//! in-layer ordering, crossing and edge-length metrics, SVG rendering)
//! paired with an experiment harness that asks a chat model to solve the
//! same subtasks and scores the answers against the built-in oracles.
//!
//! The crate is organized around the pipeline:
//!
//! 1. [`graph`] - the graph model, four interchange formats, a seeded
//!    random generator, and ad-hoc boolean properties.
//! 2. [`layout`] - BFS layer assignment, same-layer edge pruning, the
//!    median ordering heuristic, crossing counts, edge lengths, and grid
//!    coordinates.
//! 3. [`render`] - deterministic SVG output for layouts and result
//!    histograms.
//! 4. [`harness`] - prompt construction (standard, stepwise, and
//!    in-context-learning variants), answer parsing, scoring, experiment
//!    runs, and report generation.
//! 5. [`client`] - chat-completion access: a real HTTP backend plus
//!    oracle, noisy, and replay responders for offline work.
//!
//! Every capability has a runnable example; start with
//! `cargo run --example layout_pipeline` or `cargo run --example
//! offline_experiment`. The `layerlab` binary exposes the same pipeline
//! as file-composable subcommands (`convert`, `layout`, `metrics`,
//! `prompts`, `run`, `score`, `report`, `generate`).
//!
//! Everything is deterministic: the same inputs and seeds produce byte
//! identical prompts, layouts, SVGs, and reports. Wall-clock timestamps
//! appear only in experiment transcripts.

pub mod cli;
pub mod client;
pub mod demo;
pub mod graph;
pub mod harness;
pub mod layout;
pub mod render;

pub use graph::{Edge, Graph, GraphError, GraphFormat, NodeData, NodeId};
pub use layout::{LayeredOrdering, LayoutError, RankAssignment};
