//! Experiment execution: send built prompts to a responder, parse and
//! score the replies, and stream every record to a JSONL transcript.

use std::io::Write;
use std::time::{Duration, Instant};

use chrono::{SecondsFormat, Utc};
use serde::{Deserialize, Serialize};

use super::parse::{parse_response, ParsedAnswer};
use super::pool::{ExamplePool, TaskInstance, TaskPayload};
use super::score::{numeric_abs_error, score, truth_of, TruthValue};
use super::templates::{build_prompt, PromptOptions, PromptSpec};
use super::{HarnessError, ScoreOutcome, Strategy};
use crate::client::{ChatRequest, ChatResponse, ClientError, Responder};

/// A built prompt together with the task data it was built from, so
/// the runner can compute ground truth without re-reading the pool.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecBundle {
    pub spec: PromptSpec,
    pub payload: TaskPayload,
}

impl SpecBundle {
    pub fn new(spec: PromptSpec, payload: TaskPayload) -> Self {
        SpecBundle { spec, payload }
    }

    /// Build the prompt for one instance and bundle it with its data.
    pub fn build(
        instance: &TaskInstance,
        strategy: Strategy,
        pool: &ExamplePool,
        seed: u64,
        options: &PromptOptions,
    ) -> Result<Self, HarnessError> {
        let spec = build_prompt(instance, strategy, pool, seed, options)?;
        Ok(SpecBundle {
            spec,
            payload: instance.payload.clone(),
        })
    }
}

/// One fully processed prompt/response exchange. This is the JSONL
/// transcript line format; replays read the `spec.id` and `response`
/// fields back out of it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub spec: PromptSpec,
    pub truth: TruthValue,
    pub response: String,
    #[serde(default)]
    pub parsed: Option<ParsedAnswer>,
    pub outcome: ScoreOutcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abs_error: Option<f64>,
    pub model: String,
    pub started_at: String,
    pub finished_at: String,
    pub latency_ms: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    /// Upper bound on in-flight requests. Rate limits shrink the
    /// effective value by one per limited batch (never below one); it
    /// recovers one step per quiet cool-down interval.
    pub max_concurrency: usize,
    pub model: String,
    pub temperature: f64,
    pub max_tokens: u32,
    pub cooldown_secs: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max_concurrency: 4,
            model: "layerlab-oracle".into(),
            temperature: 0.0,
            max_tokens: 2048,
            cooldown_secs: 10,
        }
    }
}

struct CallResult {
    result: Result<ChatResponse, ClientError>,
    started_at: String,
    finished_at: String,
    latency_ms: u64,
}

fn timestamp() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true)
}

fn call(responder: &dyn Responder, request: &ChatRequest) -> CallResult {
    let started_at = timestamp();
    let clock = Instant::now();
    let result = responder.complete(request);
    CallResult {
        result,
        started_at,
        finished_at: timestamp(),
        latency_ms: clock.elapsed().as_millis() as u64,
    }
}

/// Run every bundle against the responder, in input order, writing one
/// JSONL line per record to `sink` as soon as its batch finishes.
///
/// Requests go out in batches of the current effective concurrency.
/// Transport failures become `malformed` outcomes rather than aborting
/// the run, so a transcript always has one line per prompt.
pub fn run_experiment(
    bundles: &[SpecBundle],
    responder: &dyn Responder,
    options: &RunOptions,
    sink: &mut dyn Write,
) -> Result<Vec<ExperimentRecord>, HarnessError> {
    let limit = options.max_concurrency.max(1);
    let mut effective = limit;
    let mut last_limited: Option<Instant> = None;
    let cooldown = Duration::from_secs(options.cooldown_secs);

    let mut records = Vec::with_capacity(bundles.len());
    let mut index = 0;
    while index < bundles.len() {
        let end = (index + effective).min(bundles.len());
        let batch = &bundles[index..end];

        let requests: Vec<ChatRequest> = batch
            .iter()
            .map(|bundle| ChatRequest {
                model: options.model.clone(),
                messages: vec![crate::client::ChatMessage::user(&bundle.spec.text)],
                temperature: options.temperature,
                max_tokens: options.max_tokens,
                tag: Some(bundle.spec.id.clone()),
            })
            .collect();

        let calls: Vec<CallResult> = std::thread::scope(|scope| {
            let handles: Vec<_> = requests
                .iter()
                .map(|request| scope.spawn(move || call(responder, request)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("request thread panicked"))
                .collect()
        });

        let limited = calls
            .iter()
            .any(|c| matches!(&c.result, Err(e) if e.is_rate_limit()));

        for (bundle, outcome) in batch.iter().zip(calls) {
            let record = finish_record(bundle, outcome, &options.model)?;
            serde_json::to_writer(&mut *sink, &record)?;
            sink.write_all(b"\n")?;
            records.push(record);
        }
        sink.flush()?;

        if limited {
            effective = effective.saturating_sub(1).max(1);
            last_limited = Some(Instant::now());
        } else if let Some(at) = last_limited {
            if effective < limit && at.elapsed() >= cooldown {
                effective += 1;
                last_limited = if effective < limit {
                    Some(Instant::now())
                } else {
                    None
                };
            }
        }

        index = end;
    }
    Ok(records)
}

fn finish_record(
    bundle: &SpecBundle,
    call: CallResult,
    model: &str,
) -> Result<ExperimentRecord, HarnessError> {
    let truth = truth_of(&bundle.payload)?;
    let (response, parsed, outcome) = match call.result {
        Ok(reply) => match parse_response(bundle.spec.task, &reply.content) {
            Ok(parsed) => {
                let outcome = score(bundle.spec.task, &parsed, &truth)?;
                (reply.content, Some(parsed), outcome)
            }
            Err(failure) => (
                reply.content,
                None,
                ScoreOutcome::malformed(failure.reason),
            ),
        },
        Err(error) => (
            String::new(),
            None,
            ScoreOutcome::malformed(format!("transport: {error}")),
        ),
    };
    let abs_error = parsed
        .as_ref()
        .and_then(|p| numeric_abs_error(p, &truth));
    Ok(ExperimentRecord {
        spec: bundle.spec.clone(),
        truth,
        response,
        parsed,
        outcome,
        abs_error,
        model: model.to_string(),
        started_at: call.started_at,
        finished_at: call.finished_at,
        latency_ms: call.latency_ms,
    })
}
