//! Aggregation of experiment records into outcome tables, CSV text,
//! and per-task outcome histograms.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::run::ExperimentRecord;
use super::{Strategy, TaskKind};
use crate::render::render_histogram_svg;

/// One count in the outcome table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub task: TaskKind,
    pub strategy: Strategy,
    pub outcome: String,
    pub count: u64,
}

/// Summary of an experiment: outcome counts per (task, strategy) and
/// the mean absolute error per task over numeric answers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub mean_abs_error: Vec<(TaskKind, f64)>,
}

fn strategy_key(strategy: Strategy) -> (u8, u8) {
    match strategy {
        Strategy::Standard => (0, 0),
        Strategy::Steps => (1, 0),
        Strategy::Icl(k) => (2, k),
    }
}

/// Canonical display order for outcome labels.
fn label_key(label: &str) -> (u8, String) {
    match label {
        "correct" => (0, String::new()),
        "incorrect-over" => (1, String::new()),
        "incorrect-under" => (2, String::new()),
        "crossings-fewer" => (3, String::new()),
        "crossings-equal" => (4, String::new()),
        "crossings-more" => (5, String::new()),
        _ if label.starts_with("ratio-") => (6, label.to_string()),
        "malformed" => (7, String::new()),
        _ => (8, label.to_string()),
    }
}

/// Count outcomes and average numeric errors across a record set.
pub fn summarize(records: &[ExperimentRecord]) -> Report {
    type Key = (TaskKind, (u8, u8), (u8, String));
    let mut counts: BTreeMap<Key, (Strategy, String, u64)> = BTreeMap::new();
    let mut errors: BTreeMap<TaskKind, (f64, u64)> = BTreeMap::new();

    for record in records {
        let task = record.spec.task;
        let strategy = record.spec.strategy;
        let label = record.outcome.class_label();
        let key = (task, strategy_key(strategy), label_key(&label));
        counts
            .entry(key)
            .and_modify(|(_, _, n)| *n += 1)
            .or_insert((strategy, label, 1));
        if let Some(err) = record.abs_error {
            let slot = errors.entry(task).or_insert((0.0, 0));
            slot.0 += err;
            slot.1 += 1;
        }
    }

    let rows = counts
        .into_iter()
        .map(|((task, _, _), (strategy, outcome, count))| ReportRow {
            task,
            strategy,
            outcome,
            count,
        })
        .collect();
    let mean_abs_error = errors
        .into_iter()
        .map(|(task, (sum, n))| (task, sum / n as f64))
        .collect();
    Report {
        rows,
        mean_abs_error,
    }
}

impl Report {
    /// CSV table: one count row per (task, strategy, outcome), then one
    /// `mean-abs-error` row per numeric task.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("task,strategy,outcome,count\n");
        for row in &self.rows {
            writeln!(
                out,
                "{},{},{},{}",
                row.task, row.strategy, row.outcome, row.count
            )
            .expect("string write");
        }
        for (task, error) in &self.mean_abs_error {
            writeln!(out, "{task},all,mean-abs-error,{error:.3}").expect("string write");
        }
        out
    }

    /// One outcome histogram per task, summed over strategies. Tasks
    /// whose counts cannot be drawn (none at all) are skipped.
    pub fn histograms(&self) -> Vec<(TaskKind, String)> {
        let mut per_task: BTreeMap<TaskKind, BTreeMap<(u8, String), (String, u64)>> =
            BTreeMap::new();
        for row in &self.rows {
            per_task
                .entry(row.task)
                .or_default()
                .entry(label_key(&row.outcome))
                .and_modify(|(_, n)| *n += row.count)
                .or_insert((row.outcome.clone(), row.count));
        }
        let mut charts = Vec::new();
        for (task, labels) in per_task {
            let buckets: Vec<(String, u64)> = labels.into_values().collect();
            let title = format!("{task} outcomes");
            if let Ok(svg) = render_histogram_svg(&buckets, &title) {
                charts.push((task, svg.xml()));
            }
        }
        charts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::score::TruthValue;
    use crate::harness::templates::PromptSpec;
    use crate::harness::ScoreOutcome;

    fn record(
        task: TaskKind,
        strategy: Strategy,
        outcome: ScoreOutcome,
        abs_error: Option<f64>,
    ) -> ExperimentRecord {
        ExperimentRecord {
            spec: PromptSpec {
                id: format!("{task}-{strategy}-s0"),
                task,
                strategy,
                instance_id: task.name().to_string(),
                seed: 0,
                icl_example_ids: Vec::new(),
                text: String::new(),
            },
            truth: TruthValue::Number { value: 5 },
            response: String::new(),
            parsed: None,
            outcome,
            abs_error,
            model: "test".into(),
            started_at: String::new(),
            finished_at: String::new(),
            latency_ms: 0,
        }
    }

    fn correct() -> ScoreOutcome {
        ScoreOutcome::Correct
    }

    #[test]
    fn counts_group_by_task_strategy_and_label() {
        let records = vec![
            record(TaskKind::EdgeLength, Strategy::Standard, correct(), Some(0.0)),
            record(TaskKind::EdgeLength, Strategy::Standard, correct(), Some(0.0)),
            record(
                TaskKind::EdgeLength,
                Strategy::Steps,
                ScoreOutcome::IncorrectOver,
                Some(3.0),
            ),
            record(
                TaskKind::CountCrossings,
                Strategy::Icl(4),
                ScoreOutcome::malformed("no-count"),
                None,
            ),
        ];
        let report = summarize(&records);
        assert_eq!(
            report.rows,
            vec![
                ReportRow {
                    task: TaskKind::CountCrossings,
                    strategy: Strategy::Icl(4),
                    outcome: "malformed".into(),
                    count: 1
                },
                ReportRow {
                    task: TaskKind::EdgeLength,
                    strategy: Strategy::Standard,
                    outcome: "correct".into(),
                    count: 2
                },
                ReportRow {
                    task: TaskKind::EdgeLength,
                    strategy: Strategy::Steps,
                    outcome: "incorrect-over".into(),
                    count: 1
                },
            ]
        );
        assert_eq!(
            report.mean_abs_error,
            vec![(TaskKind::EdgeLength, 1.0)]
        );
    }

    #[test]
    fn labels_sort_in_canonical_order_within_a_strategy() {
        let outcomes = [
            ScoreOutcome::malformed("x"),
            partial(0.5),
            ScoreOutcome::IncorrectUnder,
            correct(),
            partial(0.2),
        ];
        let records: Vec<_> = outcomes
            .into_iter()
            .map(|o| record(TaskKind::LayerAssignment, Strategy::Standard, o, None))
            .collect();
        let labels: Vec<String> = summarize(&records)
            .rows
            .into_iter()
            .map(|r| r.outcome)
            .collect();
        assert_eq!(
            labels,
            vec!["correct", "incorrect-under", "ratio-0.2", "ratio-0.5", "malformed"]
        );
    }

    fn partial(ratio: f64) -> ScoreOutcome {
        ScoreOutcome::PartialRatio { ratio, valid: None }
    }

    #[test]
    fn csv_has_counts_then_mean_error_rows() {
        let records = vec![
            record(TaskKind::EdgeLength, Strategy::Standard, correct(), Some(0.0)),
            record(
                TaskKind::EdgeLength,
                Strategy::Standard,
                ScoreOutcome::IncorrectOver,
                Some(4.0),
            ),
        ];
        let csv = summarize(&records).to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "task,strategy,outcome,count");
        assert_eq!(lines[1], "edge-length,standard,correct,1");
        assert_eq!(lines[2], "edge-length,standard,incorrect-over,1");
        assert_eq!(lines[3], "edge-length,all,mean-abs-error,2.000");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn histograms_merge_strategies_and_render() {
        let records = vec![
            record(TaskKind::EdgeLength, Strategy::Standard, correct(), None),
            record(TaskKind::EdgeLength, Strategy::Steps, correct(), None),
            record(
                TaskKind::EdgeLength,
                Strategy::Steps,
                ScoreOutcome::IncorrectOver,
                None,
            ),
        ];
        let charts = summarize(&records).histograms();
        assert_eq!(charts.len(), 1);
        let (task, xml) = &charts[0];
        assert_eq!(*task, TaskKind::EdgeLength);
        assert!(xml.contains("<svg"));
        assert!(xml.contains("correct"));
    }

    #[test]
    fn empty_records_make_an_empty_report() {
        let report = summarize(&[]);
        assert!(report.rows.is_empty());
        assert!(report.mean_abs_error.is_empty());
        assert_eq!(report.to_csv(), "task,strategy,outcome,count\n");
        assert!(report.histograms().is_empty());
    }
}
