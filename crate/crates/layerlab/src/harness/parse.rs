//! Total answer parsing.
//!
//! `parse_response` never panics and never rejects input with an error
//! type other than [`ParseFailure`]; any byte sequence produces either a
//! parsed answer or a failure with a short reason code. Responses are
//! treated as chat transcripts: explanations may surround the answer, so
//! each extractor looks for the *last* plausible answer in the text.

use serde::{Deserialize, Serialize};

use super::TaskKind;
use crate::graph::{parse_graph, Graph, GraphFormat, NodeId};
use crate::layout::LayeredOrdering;

/// A structured reading of a response.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ParsedAnswer {
    /// `<id> - <rank>` lines (also `<id>: <rank>`), in answer order.
    Ranks { ranks: Vec<(NodeId, u32)> },
    /// A full `Layer i: [...]` listing.
    Layers { layers: LayeredOrdering },
    Number { value: i64 },
    YesNo { value: bool },
    /// A graph recovered from a JSON or DOT payload.
    GraphDoc { graph: Graph },
    /// Raw text whose format is only known to the scorer.
    Document { text: String },
    Svg { text: String },
    Prose { text: String },
}

/// Why a response could not be read. `reason` is a stable short code,
/// optionally followed by `: detail`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseFailure {
    pub reason: String,
}

impl ParseFailure {
    fn new(reason: impl Into<String>) -> Self {
        ParseFailure {
            reason: reason.into(),
        }
    }
}

impl std::fmt::Display for ParseFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.reason)
    }
}

impl std::error::Error for ParseFailure {}

/// Read `text` as an answer to a `task` prompt.
pub fn parse_response(task: TaskKind, text: &str) -> Result<ParsedAnswer, ParseFailure> {
    match task {
        TaskKind::LayerAssignment => parse_ranks(text),
        TaskKind::SortLayers => parse_layers(text),
        TaskKind::CountCrossings => parse_crossings(text),
        TaskKind::EdgeLength => match last_integer(text) {
            Some(value) => Ok(ParsedAnswer::Number { value }),
            None => Err(ParseFailure::new("no-number")),
        },
        TaskKind::GraphGeneration => parse_json_graph(text),
        TaskKind::FormatConversion => {
            let body = fenced_or_whole(text);
            if body.trim().is_empty() {
                Err(ParseFailure::new("empty-response"))
            } else {
                Ok(ParsedAnswer::Document {
                    text: body.trim_end().to_string(),
                })
            }
        }
        TaskKind::PropertyCheck => parse_yes_no(text),
        TaskKind::GraphFromScene => parse_dot_graph(text),
        TaskKind::SceneFromGraph => {
            if text.trim().is_empty() {
                Err(ParseFailure::new("empty-response"))
            } else {
                Ok(ParsedAnswer::Prose {
                    text: text.trim().to_string(),
                })
            }
        }
        TaskKind::SvgFromDot => parse_svg(text),
    }
}

// ---------------------------------------------------------------------
// line-run extractors

/// `<id> - <rank>` or `<id>: <rank>`, nothing else on the line.
fn rank_line(line: &str) -> Option<(NodeId, u32)> {
    let line = line.trim();
    let (id, rank) = line
        .split_once(" - ")
        .or_else(|| line.split_once('-').filter(|(a, _)| !a.trim().is_empty()))
        .or_else(|| line.split_once(':'))?;
    let id: u32 = id.trim().parse().ok()?;
    let rank: u32 = rank.trim().parse().ok()?;
    Some((NodeId(id), rank))
}

/// The last maximal run of consecutive lines matching `probe`. Blank
/// lines and code fences inside a run do not break it; any other
/// non-matching line does.
fn last_line_run<T>(text: &str, probe: impl Fn(&str) -> Option<T>) -> Vec<T> {
    let mut last: Vec<T> = Vec::new();
    let mut current: Vec<T> = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim();
        if let Some(item) = probe(line) {
            current.push(item);
        } else if trimmed.is_empty() || trimmed.starts_with("```") {
            // tolerated inside and around runs
        } else if !current.is_empty() {
            last = std::mem::take(&mut current);
        }
    }
    if !current.is_empty() {
        last = current;
    }
    last
}

fn parse_ranks(text: &str) -> Result<ParsedAnswer, ParseFailure> {
    let ranks = last_line_run(text, rank_line);
    if ranks.is_empty() {
        return Err(ParseFailure::new("no-rank-lines"));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (node, _) in &ranks {
        if !seen.insert(*node) {
            return Err(ParseFailure::new(format!("duplicate-node: {node}")));
        }
    }
    Ok(ParsedAnswer::Ranks { ranks })
}

fn try_layer_line(line: &str) -> Option<(usize, Vec<NodeId>)> {
    let trimmed = line.trim();
    let rest = trimmed.strip_prefix("Layer ")?;
    let (num, _) = rest.split_once(':')?;
    let k: usize = num.trim().parse().ok()?;
    let nodes = crate::layout::parse_layer_line(trimmed, k).ok()?;
    Some((k, nodes))
}

fn parse_layers(text: &str) -> Result<ParsedAnswer, ParseFailure> {
    let lines = last_line_run(text, try_layer_line);
    if lines.is_empty() {
        return Err(ParseFailure::new("no-layer-lines"));
    }
    for (i, (k, _)) in lines.iter().enumerate() {
        if *k != i {
            return Err(ParseFailure::new(format!(
                "bad-layer-lines: expected layer {i}, found layer {k}"
            )));
        }
    }
    let layers = LayeredOrdering::from_layers(lines.into_iter().map(|(_, l)| l).collect())
        .map_err(|e| ParseFailure::new(format!("duplicate-node: {e}")))?;
    Ok(ParsedAnswer::Layers { layers })
}

/// Exactly `(a, b) and (c, d)`, as the pair-listing prompts request.
fn pair_line(line: &str) -> Option<()> {
    let line = line.trim();
    let (left, right) = line.split_once(" and ")?;
    parse_pair(left).and(parse_pair(right))
}

fn parse_pair(token: &str) -> Option<()> {
    let inner = token.trim().strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    a.trim().parse::<u64>().ok()?;
    b.trim().parse::<u64>().ok()?;
    Some(())
}

fn parse_crossings(text: &str) -> Result<ParsedAnswer, ParseFailure> {
    // Pair listings win over stray integers: a "(4, 5) and (6, 10)" line
    // is the answer format of the pair-listing prompt, and counting the
    // lines is the only numeric reading of such an answer.
    let pairs = last_line_run(text, pair_line);
    if !pairs.is_empty() {
        return Ok(ParsedAnswer::Number {
            value: pairs.len() as i64,
        });
    }
    if let Some(value) = last_integer(text) {
        return Ok(ParsedAnswer::Number { value });
    }
    let lowered = text.to_lowercase();
    if lowered.contains("[]")
        || lowered.contains("empty list")
        || lowered.contains("no edge crossings")
    {
        return Ok(ParsedAnswer::Number { value: 0 });
    }
    Err(ParseFailure::new("no-count"))
}

/// The last standalone integer in the text: a digit run that is not
/// glued to a word, an identifier, or a decimal fraction. An `18.` at a
/// sentence end counts; neither half of `3.69` does.
fn last_integer(text: &str) -> Option<i64> {
    let bytes = text.as_bytes();
    let mut best: Option<i64> = None;
    let mut i = 0;
    while i < bytes.len() {
        if !bytes[i].is_ascii_digit() {
            i += 1;
            continue;
        }
        let mut start = i;
        let mut end = i;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        // optional sign, itself not glued to a word or number
        let mut signed = false;
        if start > 0 && bytes[start - 1] == b'-' {
            let before_sign_ok = start < 2 || !is_glue(bytes[start - 2]) && bytes[start - 2] != b'.';
            if before_sign_ok {
                signed = true;
            }
        }
        let prev_ok = if signed {
            true
        } else if start == 0 {
            true
        } else {
            let p = bytes[start - 1];
            !is_glue(p) && p != b'.' && p != b'-'
        };
        let next_ok = if end >= bytes.len() {
            true
        } else {
            match bytes[end] {
                b'.' => end + 1 >= bytes.len() || !bytes[end + 1].is_ascii_digit(),
                b => !is_glue(b),
            }
        };
        if prev_ok && next_ok {
            if signed {
                start -= 1;
            }
            if let Ok(value) = text[start..end].parse::<i64>() {
                best = Some(value);
            }
        }
        i = end;
    }
    best
}

fn is_glue(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

/// The later of the last word-bounded `yes` / `no` wins.
fn parse_yes_no(text: &str) -> Result<ParsedAnswer, ParseFailure> {
    let lowered = text.to_lowercase();
    let last_at = |word: &str| {
        lowered
            .match_indices(word)
            .filter(|(i, _)| word_bounded(&lowered, *i, word.len()))
            .map(|(i, _)| i)
            .last()
    };
    match (last_at("yes"), last_at("no")) {
        (Some(y), Some(n)) => Ok(ParsedAnswer::YesNo { value: y > n }),
        (Some(_), None) => Ok(ParsedAnswer::YesNo { value: true }),
        (None, Some(_)) => Ok(ParsedAnswer::YesNo { value: false }),
        (None, None) => Err(ParseFailure::new("no-yes-no")),
    }
}

fn word_bounded(text: &str, start: usize, len: usize) -> bool {
    let bytes = text.as_bytes();
    let before_ok = start == 0 || !bytes[start - 1].is_ascii_alphanumeric();
    let end = start + len;
    let after_ok = end >= bytes.len() || !bytes[end].is_ascii_alphanumeric();
    before_ok && after_ok
}

// ---------------------------------------------------------------------
// block extractors

/// Contents of the last complete ``` fence, language tag stripped.
fn last_fenced_block(text: &str) -> Option<&str> {
    let mut blocks = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    while let Some(open) = rest.find("```") {
        let after_open = offset + open + 3;
        let body_start = match text[after_open..].find('\n') {
            Some(nl) => after_open + nl + 1,
            None => break,
        };
        match text[body_start..].find("```") {
            Some(close) => {
                blocks.push(&text[body_start..body_start + close]);
                offset = body_start + close + 3;
                rest = &text[offset..];
            }
            None => break,
        }
    }
    blocks.pop()
}

fn fenced_or_whole(text: &str) -> &str {
    last_fenced_block(text).unwrap_or(text)
}

fn parse_json_graph(text: &str) -> Result<ParsedAnswer, ParseFailure> {
    let body = fenced_or_whole(text);
    let start = body.find('{');
    let end = body.rfind('}');
    let (start, end) = match (start, end) {
        (Some(s), Some(e)) if s < e => (s, e),
        _ => return Err(ParseFailure::new("no-json-object")),
    };
    let candidate = strip_trailing_commas(&body[start..=end]);
    match parse_graph(&candidate, GraphFormat::JsonGraph) {
        Ok(graph) => Ok(ParsedAnswer::GraphDoc { graph }),
        Err(e) => Err(ParseFailure::new(format!("bad-json: {e}"))),
    }
}

/// Drop `,` immediately before a closing brace or bracket, outside
/// strings. Recorded answers contain such commas and serde rejects them.
fn strip_trailing_commas(json: &str) -> String {
    let mut out = String::with_capacity(json.len());
    let mut in_string = false;
    let mut escaped = false;
    let chars: Vec<char> = json.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        if in_string {
            out.push(c);
            if escaped {
                escaped = false;
            } else if c == '\\' {
                escaped = true;
            } else if c == '"' {
                in_string = false;
            }
            continue;
        }
        match c {
            '"' => {
                in_string = true;
                out.push(c);
            }
            ',' => {
                let next = chars[i + 1..].iter().find(|ch| !ch.is_whitespace());
                if !matches!(next, Some('}') | Some(']')) {
                    out.push(c);
                }
            }
            _ => out.push(c),
        }
    }
    out
}

fn parse_dot_graph(text: &str) -> Result<ParsedAnswer, ParseFailure> {
    let body = fenced_or_whole(text);
    let mut last_err: Option<String> = None;
    for start in dot_starts(body).into_iter().rev() {
        let Some(candidate) = brace_balanced(&body[start..]) else {
            continue;
        };
        match parse_graph(candidate, GraphFormat::DotSubset) {
            Ok(graph) => return Ok(ParsedAnswer::GraphDoc { graph }),
            Err(e) => last_err = Some(e.to_string()),
        }
    }
    match last_err {
        Some(e) => Err(ParseFailure::new(format!("bad-dot: {e}"))),
        None => Err(ParseFailure::new("no-dot-graph")),
    }
}

/// Byte offsets of word-bounded `graph`, `digraph`, and `strict`
/// keywords: candidate starting points of a DOT document.
fn dot_starts(text: &str) -> Vec<usize> {
    let mut starts = Vec::new();
    for kw in ["strict", "digraph", "graph"] {
        for (i, _) in text.match_indices(kw) {
            if word_bounded(text, i, kw.len()) {
                starts.push(i);
            }
        }
    }
    starts.sort_unstable();
    starts.dedup();
    starts
}

/// The prefix of `text` through the brace that closes its first `{`.
fn brace_balanced(text: &str) -> Option<&str> {
    let open = text.find('{')?;
    let mut depth = 0usize;
    for (i, c) in text[open..].char_indices() {
        match c {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return Some(&text[..open + i + 1]);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_svg(text: &str) -> Result<ParsedAnswer, ParseFailure> {
    let body = fenced_or_whole(text);
    let start = body.rfind("<svg");
    let end = body.rfind("</svg>");
    match (start, end) {
        (Some(s), Some(e)) if s < e => Ok(ParsedAnswer::Svg {
            text: body[s..e + "</svg>".len()].to_string(),
        }),
        _ => Err(ParseFailure::new("no-svg")),
    }
}
