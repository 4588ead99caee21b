//! Chat-completion clients: one real HTTP responder and three mock
//! responders (oracle, noisy oracle, transcript replay) that make
//! experiments runnable and testable without a network.
//!
//! Every responder implements [`Responder`]. Requests carry an optional
//! `tag` — the prompt spec id — that mock responders use to find the
//! right answer; the HTTP responder ignores it and never sends it.

mod http;

pub use http::{HttpConfig, HttpResponder};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::harness::{oracle_response, SpecBundle, Strategy, TaskKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChatMessage {
    pub role: String,
    pub content: String,
}

impl ChatMessage {
    pub fn user(content: impl Into<String>) -> Self {
        ChatMessage {
            role: "user".into(),
            content: content.into(),
        }
    }
}

/// A chat completion request. The harness always sends exactly one user
/// message and no system message, at temperature 0 unless overridden.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChatRequest {
    pub model: String,
    pub messages: Vec<ChatMessage>,
    pub temperature: f64,
    pub max_tokens: u32,
    /// Correlation id (the prompt spec id). Mock responders key their
    /// answers on it; it is never serialized onto the wire.
    #[serde(skip)]
    pub tag: Option<String>,
}

impl ChatRequest {
    pub fn user(model: impl Into<String>, content: impl Into<String>) -> Self {
        ChatRequest {
            model: model.into(),
            messages: vec![ChatMessage::user(content)],
            temperature: 0.0,
            max_tokens: 2048,
            tag: None,
        }
    }

    pub fn tagged(mut self, tag: impl Into<String>) -> Self {
        self.tag = Some(tag.into());
        self
    }

    fn prompt_chars(&self) -> u64 {
        self.messages.iter().map(|m| m.content.chars().count() as u64).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TokenUsage {
    pub prompt_tokens: u64,
    pub completion_tokens: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChatResponse {
    pub content: String,
    pub finish_reason: String,
    pub usage: TokenUsage,
    pub latency_ms: u64,
}

impl ChatResponse {
    /// A locally produced response; usage is a 4-chars-per-token
    /// estimate so reports have plausible numbers to sum.
    fn local(content: String, prompt_chars: u64) -> Self {
        let completion_chars = content.chars().count() as u64;
        ChatResponse {
            content,
            finish_reason: "stop".into(),
            usage: TokenUsage {
                prompt_tokens: prompt_chars.div_ceil(4),
                completion_tokens: completion_chars.div_ceil(4),
            },
            latency_ms: 0,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ClientError {
    /// The service said to slow down (HTTP 429). Signaled distinctly so
    /// the runner can shrink its concurrency.
    #[error("rate limited by the endpoint")]
    RateLimited,
    #[error("transport failure: {0}")]
    Transport(String),
    #[error("endpoint returned status {status}: {body}")]
    Http { status: u16, body: String },
    #[error("gave up after {attempts} attempts: {last}")]
    ExhaustedRetries { attempts: u32, last: Box<ClientError> },
    #[error("no api key: environment variable {env} is not set")]
    MissingApiKey { env: String },
    #[error("request carries no tag or an unknown tag ({tag}); mock responders need one")]
    MissingBinding { tag: String },
    #[error("transcript has no response for spec {spec_id}")]
    ReplayMiss { spec_id: String },
    #[error("transcript unreadable: {0}")]
    BadTranscript(String),
}

impl ClientError {
    /// True when the failure is (or ends in) a rate limit.
    pub fn is_rate_limit(&self) -> bool {
        match self {
            ClientError::RateLimited => true,
            ClientError::ExhaustedRetries { last, .. } => last.is_rate_limit(),
            _ => false,
        }
    }
}

/// Anything that can answer a chat request.
pub trait Responder: Send + Sync {
    fn complete(&self, request: &ChatRequest) -> Result<ChatResponse, ClientError>;

    /// Short name for logs and transcripts.
    fn kind_name(&self) -> &'static str;
}

/// Which responder to run an experiment against. The CLI parses this
/// from flags; `build` turns it into a live responder.
#[derive(Debug, Clone, PartialEq)]
pub enum ResponderKind {
    Http(HttpConfig),
    Oracle,
    Noisy { rate: f64, seed: u64 },
    Replay(PathBuf),
}

impl ResponderKind {
    /// Instantiate the responder, binding mock responders to the spec
    /// bundles they will be asked about.
    pub fn build(&self, bundles: &[SpecBundle]) -> Result<Box<dyn Responder>, BuildError> {
        Ok(match self {
            ResponderKind::Http(config) => Box::new(HttpResponder::new(config.clone())?),
            ResponderKind::Oracle => Box::new(OracleResponder::for_bundles(bundles)?),
            ResponderKind::Noisy { rate, seed } => {
                Box::new(NoisyResponder::for_bundles(bundles, *rate, *seed)?)
            }
            ResponderKind::Replay(path) => Box::new(ReplayResponder::from_path(path)?),
        })
    }
}

/// Errors from building a responder.
#[derive(Debug, thiserror::Error)]
pub enum BuildError {
    #[error(transparent)]
    Client(#[from] ClientError),
    #[error(transparent)]
    Harness(#[from] crate::harness::HarnessError),
}

// ---------------------------------------------------------------------
// oracle

/// Answers every tagged request with a precomputed reference answer.
pub struct OracleResponder {
    answers: BTreeMap<String, String>,
}

impl OracleResponder {
    pub fn new(answers: BTreeMap<String, String>) -> Self {
        OracleResponder { answers }
    }

    pub fn for_bundles(bundles: &[SpecBundle]) -> Result<Self, crate::harness::HarnessError> {
        let mut answers = BTreeMap::new();
        for bundle in bundles {
            let answer = oracle_response(bundle.spec.strategy, &bundle.payload)?;
            answers.insert(bundle.spec.id.clone(), answer);
        }
        Ok(OracleResponder { answers })
    }

    fn lookup(&self, request: &ChatRequest) -> Result<&String, ClientError> {
        let tag = request.tag.as_deref().unwrap_or("");
        self.answers.get(tag).ok_or_else(|| ClientError::MissingBinding {
            tag: tag.to_string(),
        })
    }
}

impl Responder for OracleResponder {
    fn complete(&self, request: &ChatRequest) -> Result<ChatResponse, ClientError> {
        let answer = self.lookup(request)?;
        Ok(ChatResponse::local(answer.clone(), request.prompt_chars()))
    }

    fn kind_name(&self) -> &'static str {
        "oracle"
    }
}

// ---------------------------------------------------------------------
// noisy oracle

/// How a reference answer can be perturbed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AnswerShape {
    Number,
    RankLines,
    LayerLines,
    Verbatim,
}

fn shape_for(task: TaskKind, strategy: Strategy) -> AnswerShape {
    match task {
        TaskKind::LayerAssignment => AnswerShape::RankLines,
        TaskKind::SortLayers => AnswerShape::LayerLines,
        TaskKind::CountCrossings => match strategy {
            // the pair-listing answer has no numeric field to nudge
            Strategy::Standard => AnswerShape::Verbatim,
            _ => AnswerShape::Number,
        },
        TaskKind::EdgeLength => AnswerShape::Number,
        _ => AnswerShape::Verbatim,
    }
}

struct NoisyTarget {
    answer: String,
    shape: AnswerShape,
}

/// The oracle with mistakes: each answer is perturbed with probability
/// `rate`, deterministically in (`seed`, spec id). Numbers move by one,
/// layerings get one rank shifted, orderings get one adjacent swap.
pub struct NoisyResponder {
    targets: BTreeMap<String, NoisyTarget>,
    rate: f64,
    seed: u64,
}

impl NoisyResponder {
    pub fn for_bundles(
        bundles: &[SpecBundle],
        rate: f64,
        seed: u64,
    ) -> Result<Self, crate::harness::HarnessError> {
        let mut targets = BTreeMap::new();
        for bundle in bundles {
            let answer = oracle_response(bundle.spec.strategy, &bundle.payload)?;
            targets.insert(
                bundle.spec.id.clone(),
                NoisyTarget {
                    answer,
                    shape: shape_for(bundle.spec.task, bundle.spec.strategy),
                },
            );
        }
        Ok(NoisyResponder {
            targets,
            rate,
            seed,
        })
    }

    fn perturbed(&self, tag: &str, target: &NoisyTarget) -> String {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(tag.as_bytes()));
        if self.rate <= 0.0 || rng.random::<f64>() >= self.rate {
            return target.answer.clone();
        }
        match target.shape {
            AnswerShape::Number => nudge_number(&target.answer, &mut rng),
            AnswerShape::RankLines => shift_one_rank(&target.answer, &mut rng),
            AnswerShape::LayerLines => swap_adjacent(&target.answer, &mut rng),
            AnswerShape::Verbatim => target.answer.clone(),
        }
    }
}

impl Responder for NoisyResponder {
    fn complete(&self, request: &ChatRequest) -> Result<ChatResponse, ClientError> {
        let tag = request.tag.as_deref().unwrap_or("");
        let target = self
            .targets
            .get(tag)
            .ok_or_else(|| ClientError::MissingBinding {
                tag: tag.to_string(),
            })?;
        Ok(ChatResponse::local(
            self.perturbed(tag, target),
            request.prompt_chars(),
        ))
    }

    fn kind_name(&self) -> &'static str {
        "noisy"
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn nudge_number(answer: &str, rng: &mut ChaCha8Rng) -> String {
    match answer.trim().parse::<i64>() {
        Ok(value) => {
            let delta = if value == 0 || rng.random::<bool>() {
                1
            } else {
                -1
            };
            (value + delta).to_string()
        }
        Err(_) => answer.to_string(),
    }
}

/// Move one rank in a `<id> - <rank>` listing up or down by one.
fn shift_one_rank(answer: &str, rng: &mut ChaCha8Rng) -> String {
    let mut lines: Vec<String> = answer.lines().map(str::to_string).collect();
    let parsed: Vec<Option<(String, String, u32)>> = lines
        .iter()
        .map(|line| {
            for sep in [" - ", ": "] {
                if let Some((id, rank)) = line.split_once(sep) {
                    if let Ok(r) = rank.trim().parse::<u32>() {
                        return Some((id.to_string(), sep.to_string(), r));
                    }
                }
            }
            None
        })
        .collect();
    let candidates: Vec<usize> = (0..lines.len()).filter(|&i| parsed[i].is_some()).collect();
    if candidates.is_empty() {
        return answer.to_string();
    }
    let pick = candidates[rng.random_range(0..candidates.len())];
    let (id, sep, rank) = parsed[pick].clone().unwrap();
    let new_rank = if rank == 0 || rng.random::<bool>() {
        rank + 1
    } else {
        rank - 1
    };
    lines[pick] = format!("{id}{sep}{new_rank}");
    lines.join("\n")
}

/// Swap one adjacent pair inside one multi-node layer of a
/// `Layer i: [...]` listing.
fn swap_adjacent(answer: &str, rng: &mut ChaCha8Rng) -> String {
    let mut lines: Vec<String> = answer.lines().map(str::to_string).collect();
    let mut layers: Vec<(usize, usize, Vec<String>)> = Vec::new(); // (line, index, nodes)
    for (i, line) in lines.iter().enumerate() {
        let Some(rest) = line.trim().strip_prefix("Layer ") else {
            continue;
        };
        let Some((num, body)) = rest.split_once(':') else {
            continue;
        };
        let Ok(k) = num.trim().parse::<usize>() else {
            continue;
        };
        let body = body.trim();
        let Some(inner) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) else {
            continue;
        };
        let nodes: Vec<String> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|t| t.trim().to_string()).collect()
        };
        if nodes.len() >= 2 {
            layers.push((i, k, nodes));
        }
    }
    if layers.is_empty() {
        return answer.to_string();
    }
    let (line_idx, k, mut nodes) = layers[rng.random_range(0..layers.len())].clone();
    let j = rng.random_range(0..nodes.len() - 1);
    nodes.swap(j, j + 1);
    lines[line_idx] = format!("Layer {k}: [{}]", nodes.join(", "));
    lines.join("\n")
}

// ---------------------------------------------------------------------
// replay

/// Replays responses from a transcript, keyed by spec id. Lines only
/// need a `spec.id` and a `response` field, so any harness transcript
/// works as input.
pub struct ReplayResponder {
    responses: BTreeMap<String, String>,
}

#[derive(Deserialize)]
struct ReplayLine {
    spec: ReplaySpec,
    response: String,
}

#[derive(Deserialize)]
struct ReplaySpec {
    id: String,
}

impl ReplayResponder {
    pub fn from_path(path: &Path) -> Result<Self, ClientError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ClientError::BadTranscript(format!("{}: {e}", path.display())))?;
        Self::from_jsonl(&text)
    }

    pub fn from_jsonl(text: &str) -> Result<Self, ClientError> {
        let mut responses = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let record: ReplayLine = serde_json::from_str(line).map_err(|e| {
                ClientError::BadTranscript(format!("line {}: {e}", lineno + 1))
            })?;
            responses.insert(record.spec.id, record.response);
        }
        Ok(ReplayResponder { responses })
    }
}

impl Responder for ReplayResponder {
    fn complete(&self, request: &ChatRequest) -> Result<ChatResponse, ClientError> {
        let tag = request.tag.as_deref().unwrap_or("");
        match self.responses.get(tag) {
            Some(answer) => Ok(ChatResponse::local(
                answer.clone(),
                request.prompt_chars(),
            )),
            None => Err(ClientError::ReplayMiss {
                spec_id: tag.to_string(),
            }),
        }
    }

    fn kind_name(&self) -> &'static str {
        "replay"
    }
}
