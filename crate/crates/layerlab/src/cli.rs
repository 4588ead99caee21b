//! File-composable command line interface. Every subcommand reads and
//! writes plain files (graphs, layer orderings, prompt bundles, JSONL
//! transcripts, CSV reports) so pipelines can be built in a shell.
//!
//! Exit codes: 0 success, 1 usage error, 2 input parse error,
//! 3 infeasible request, 4 transport failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::client::{BuildError, ClientError, HttpConfig, ResponderKind};
use crate::graph::{
    emit_graph, generate_connected_graph, generate_random_graph, parse_graph, GenerateSpec, Graph,
    GraphError, GraphFormat, NodeId,
};
use crate::harness::{
    crossing_gap_instances, parse_response, score, summarize, ExperimentRecord, HarnessError,
    PromptOptions, RunOptions, ScoreOutcome, SpecBundle, Strategy, TaskInstance, TaskKind,
    TaskPayload,
};
use crate::layout::{
    assign_coordinates, assign_layers_bfs, count_crossings_total, median_sweep,
    remove_same_layer_edges, total_edge_length, LayoutError, SweepDirection,
};
use crate::render::{render_layout_svg, RenderError, SvgStyle};

/// Run the CLI against the process arguments; returns the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Run the CLI against explicit arguments; returns the exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(error) => {
            eprintln!("error: {}", error.message);
            error.code
        }
    }
}

#[derive(Parser)]
#[command(
    name = "layerlab",
    version,
    about = "Layered graph drawing laboratory: layouts, metrics, prompts, experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a graph file between formats
    Convert(ConvertArgs),
    /// Compute a layered layout and write every intermediate artifact
    Layout(LayoutArgs),
    /// Print crossing and edge-length metrics for a layered graph
    Metrics(MetricsArgs),
    /// Build prompt bundles for a task and strategy
    Prompts(PromptsArgs),
    /// Send prompt bundles to a responder and record a transcript
    Run(RunArgs),
    /// Re-parse and re-score the responses in a transcript
    Score(ScoreArgs),
    /// Summarize a transcript into a CSV table and outcome histograms
    Report(ReportArgs),
    /// Generate a random graph
    Generate(GenerateArgs),
}

// ---------------------------------------------------------------------
// error mapping

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn infeasible(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }

    fn transport(message: impl Into<String>) -> Self {
        CliError {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(error: GraphError) -> Self {
        match &error {
            GraphError::Infeasible(_)
            | GraphError::LossyEmission { .. }
            | GraphError::NotRepresentable { .. } => CliError::infeasible(error.to_string()),
            _ => CliError::parse(error.to_string()),
        }
    }
}

impl From<LayoutError> for CliError {
    fn from(error: LayoutError) -> Self {
        match &error {
            // a long edge means the metric is undefined for this input
            LayoutError::LongEdge(..) => CliError::infeasible(error.to_string()),
            _ => CliError::parse(error.to_string()),
        }
    }
}

impl From<HarnessError> for CliError {
    fn from(error: HarnessError) -> Self {
        match error {
            HarnessError::PoolTooSmall { .. }
            | HarnessError::UnsupportedStrategy { .. }
            | HarnessError::PromptTooLong { .. }
            | HarnessError::BadIclCount(_) => CliError::infeasible(error.to_string()),
            HarnessError::Graph(inner) => inner.into(),
            HarnessError::Layout(inner) => inner.into(),
            other => CliError::parse(other.to_string()),
        }
    }
}

impl From<ClientError> for CliError {
    fn from(error: ClientError) -> Self {
        match &error {
            // unreadable inputs and missing configuration are not
            // transport failures
            ClientError::BadTranscript(_) => CliError::parse(error.to_string()),
            ClientError::MissingApiKey { .. } => CliError::usage(error.to_string()),
            _ => CliError::transport(error.to_string()),
        }
    }
}

impl From<BuildError> for CliError {
    fn from(error: BuildError) -> Self {
        match error {
            BuildError::Client(inner) => inner.into(),
            BuildError::Harness(inner) => inner.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(error: std::io::Error) -> Self {
        CliError::parse(format!("io: {error}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(error: serde_json::Error) -> Self {
        CliError::parse(format!("json: {error}"))
    }
}

impl From<RenderError> for CliError {
    fn from(error: RenderError) -> Self {
        CliError::infeasible(error.to_string())
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Convert(args) => convert(args),
        Command::Layout(args) => layout(args),
        Command::Metrics(args) => metrics(args),
        Command::Prompts(args) => prompts(args),
        Command::Run(args) => run_command(args),
        Command::Score(args) => score_command(args),
        Command::Report(args) => report(args),
        Command::Generate(args) => generate(args),
    }
}

// ---------------------------------------------------------------------
// shared input helpers

fn parse_format(name: &str) -> Result<GraphFormat, CliError> {
    name.parse()
        .map_err(|_| CliError::usage(format!("unknown format: {name}")))
}

fn guess_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => GraphFormat::JsonGraph,
        Some("graphml") | Some("xml") => GraphFormat::GraphmlSubset,
        Some("dot") | Some("gv") => GraphFormat::DotSubset,
        _ => GraphFormat::EdgeListText,
    }
}

fn read_graph(path: &Path, from: Option<&str>) -> Result<Graph, CliError> {
    let format = match from {
        Some(name) => parse_format(name)?,
        None => guess_format(path),
    };
    let text = fs::read_to_string(path)?;
    Ok(parse_graph(&text, format)?)
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, content)?;
            println!("wrote {}", path.display());
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn parse_strategy(name: &str, icl_k: Option<u8>) -> Result<Strategy, CliError> {
    if name == "icl" {
        return Strategy::icl(icl_k.unwrap_or(3)).map_err(|e| CliError::usage(e.to_string()));
    }
    let strategy: Strategy = name
        .parse()
        .map_err(|_| CliError::usage(format!("unknown strategy: {name}")))?;
    match (strategy, icl_k) {
        (Strategy::Icl(_), Some(k)) => {
            Strategy::icl(k).map_err(|e| CliError::usage(e.to_string()))
        }
        _ => Ok(strategy),
    }
}

// ---------------------------------------------------------------------
// convert

#[derive(Args)]
struct ConvertArgs {
    /// Graph file to convert
    input: PathBuf,
    /// Input format (default: guessed from the extension)
    #[arg(long)]
    from: Option<String>,
    /// Output format: edge-list, json, graphml, or dot
    #[arg(long)]
    to: String,
    /// Output file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn convert(args: ConvertArgs) -> Result<(), CliError> {
    // validate flags before touching the filesystem
    let to = parse_format(&args.to)?;
    let graph = read_graph(&args.input, args.from.as_deref())?;
    let text = emit_graph(&graph, to)?;
    write_output(args.out.as_deref(), &text)
}

// ---------------------------------------------------------------------
// layout

#[derive(Args)]
struct LayoutArgs {
    /// Graph file to lay out
    input: PathBuf,
    #[arg(long)]
    from: Option<String>,
    /// BFS source node id
    #[arg(long, default_value_t = 0)]
    source: u32,
    /// Median sweep passes
    #[arg(long, default_value_t = 1)]
    passes: u32,
    /// Grid spacing between nodes
    #[arg(long, default_value_t = 90.0)]
    spacing: f64,
    /// Directory for ranks.txt, pruned.json, ordering.txt,
    /// positions.txt, layout.svg
    #[arg(long)]
    out: PathBuf,
}

fn layout(args: LayoutArgs) -> Result<(), CliError> {
    let graph = read_graph(&args.input, args.from.as_deref())?;
    let bfs = assign_layers_bfs(&graph, NodeId(args.source))?;
    if !bfs.unreachable.is_empty() {
        eprintln!(
            "warning: {} nodes unreachable from {} are left out of the layout",
            bfs.unreachable.len(),
            args.source
        );
    }
    let pruned = remove_same_layer_edges(&graph, &bfs.ranks)?;
    let swept = median_sweep(&pruned, &bfs.ordering, args.passes, SweepDirection::Down)?;
    let positions = assign_coordinates(&swept, args.spacing);
    let svg = render_layout_svg(&pruned, &positions, &SvgStyle::default())?;

    fs::create_dir_all(&args.out)?;
    let write = |name: &str, content: &str| -> Result<(), CliError> {
        let path = args.out.join(name);
        fs::write(&path, content)?;
        println!("wrote {}", path.display());
        Ok(())
    };
    write("ranks.txt", &bfs.ranks.to_string())?;
    write("pruned.json", &emit_graph(&pruned, GraphFormat::JsonGraph)?)?;
    write("ordering.txt", &swept.to_string())?;
    let mut position_lines = String::new();
    for node in pruned.node_ids() {
        if let Some((x, y)) = positions.get(node) {
            position_lines.push_str(&format!("{node}: ({x}, {y})\n"));
        }
    }
    write("positions.txt", &position_lines)?;
    write("layout.svg", &svg.xml())?;

    let crossings = count_crossings_total(&pruned, &swept)?;
    println!("crossings: {}", crossings.total);
    Ok(())
}

// ---------------------------------------------------------------------
// metrics

#[derive(Args)]
struct MetricsArgs {
    /// Graph file
    input: PathBuf,
    #[arg(long)]
    from: Option<String>,
    /// File with one `Layer N: [ids]` line per layer
    #[arg(long)]
    ordering: PathBuf,
}

fn metrics(args: MetricsArgs) -> Result<(), CliError> {
    let graph = read_graph(&args.input, args.from.as_deref())?;
    let text = fs::read_to_string(&args.ordering)?;
    let ordering = text
        .parse::<crate::layout::LayeredOrdering>()
        .map_err(CliError::from)?;
    let crossings = count_crossings_total(&graph, &ordering)?;
    println!("crossings: {}", crossings.total);
    let length = total_edge_length(&graph, &ordering.to_ranks())?;
    println!("edge-length: {length}");
    Ok(())
}

// ---------------------------------------------------------------------
// prompts

#[derive(Args)]
struct PromptsArgs {
    /// Graph files to derive task instances from
    inputs: Vec<PathBuf>,
    #[arg(long)]
    from: Option<String>,
    /// Task to build prompts for (default: every task with instances)
    #[arg(long)]
    task: Option<String>,
    /// Prompt strategy: standard, steps, icl, or icl-K
    #[arg(long, default_value = "standard")]
    strategy: String,
    /// Number of in-context examples (with --strategy icl)
    #[arg(long)]
    icl_k: Option<u8>,
    /// Seed for in-context example sampling
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// BFS source node for derived layerings
    #[arg(long, default_value_t = 0)]
    source: u32,
    /// Keep input graphs with at least this many nodes
    #[arg(long, default_value_t = 10)]
    min_nodes: usize,
    /// Keep input graphs with at most this many nodes
    #[arg(long, default_value_t = 11)]
    max_nodes: usize,
    /// Also build prompts for the built-in demo instances
    #[arg(long)]
    demo: bool,
    /// Prompt size ceiling in characters
    #[arg(long, default_value_t = 8000)]
    char_limit: usize,
    /// Output JSONL file of prompt bundles
    #[arg(long)]
    out: PathBuf,
}

/// Derive the layered-graph task instances one input graph supports.
fn derive_instances(
    stem: &str,
    graph: &Graph,
    source: NodeId,
    tasks: &[TaskKind],
) -> Result<Vec<TaskInstance>, CliError> {
    let bfs = assign_layers_bfs(graph, source)?;
    let pruned = remove_same_layer_edges(graph, &bfs.ranks)?;
    let mut instances = Vec::new();
    for &task in tasks {
        match task {
            TaskKind::LayerAssignment => instances.push(TaskInstance::new(
                format!("{stem}-rank"),
                TaskPayload::LayerAssignment {
                    graph: graph.clone(),
                    source,
                },
            )),
            TaskKind::SortLayers => instances.push(TaskInstance::new(
                format!("{stem}-sort"),
                TaskPayload::SortLayers {
                    graph: pruned.clone(),
                    ordering: bfs.ordering.clone(),
                },
            )),
            TaskKind::CountCrossings => instances.extend(crossing_gap_instances(
                &format!("{stem}-cross"),
                &pruned,
                &bfs.ordering,
            )?),
            TaskKind::EdgeLength => instances.push(TaskInstance::new(
                format!("{stem}-length"),
                TaskPayload::EdgeLength {
                    graph: pruned.clone(),
                    ordering: bfs.ordering.clone(),
                },
            )),
            // the remaining tasks carry their own data; they come from
            // the demo pool instead of input graphs
            _ => {}
        }
    }
    Ok(instances)
}

fn prompts(args: PromptsArgs) -> Result<(), CliError> {
    let strategy = parse_strategy(&args.strategy, args.icl_k)?;
    let explicit_task = match &args.task {
        Some(name) => Some(
            name.parse::<TaskKind>()
                .map_err(|_| CliError::usage(format!("unknown task: {name}")))?,
        ),
        None => None,
    };
    let tasks: Vec<TaskKind> = match explicit_task {
        Some(task) => vec![task],
        None => TaskKind::ALL
            .iter()
            .copied()
            .filter(|t| strategy == Strategy::Standard || t.supports_all_strategies())
            .collect(),
    };

    // demo instances always back the pool so in-context prompts have
    // solved examples to draw from
    let mut instances: Vec<TaskInstance> =
        crate::demo::example_pool().instances().cloned().collect();
    let demo_ids: Vec<String> = instances.iter().map(|i| i.id.clone()).collect();

    let mut derived_ids = Vec::new();
    for path in &args.inputs {
        let graph = read_graph(path, args.from.as_deref())?;
        let nodes = graph.node_ids().count();
        if nodes < args.min_nodes || nodes > args.max_nodes {
            eprintln!(
                "skipping {} ({nodes} nodes outside {}..={})",
                path.display(),
                args.min_nodes,
                args.max_nodes
            );
            continue;
        }
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("graph")
            .to_string();
        let derived = derive_instances(&stem, &graph, NodeId(args.source), &tasks)?;
        derived_ids.extend(derived.iter().map(|i| i.id.clone()));
        instances.extend(derived);
    }

    let pool = crate::harness::ExamplePool::new(instances)?;
    let target_ids: Vec<String> = if args.inputs.is_empty() || args.demo {
        let mut ids = demo_ids
            .iter()
            .filter(|id| {
                let task = pool.get(id).expect("demo id").kind();
                tasks.contains(&task)
            })
            .cloned()
            .collect::<Vec<_>>();
        ids.extend(derived_ids);
        ids
    } else {
        derived_ids
    };

    if target_ids.is_empty() {
        return Err(CliError::infeasible(
            "no instances to build prompts for (inputs filtered out and no demo fallback)",
        ));
    }

    let options = PromptOptions {
        char_limit: args.char_limit,
    };
    let mut lines = String::new();
    let mut count = 0usize;
    for id in &target_ids {
        let instance = pool.get(id)?;
        // skip unsupported combinations when sweeping all tasks
        if explicit_task.is_none()
            && strategy != Strategy::Standard
            && !instance.kind().supports_all_strategies()
        {
            continue;
        }
        let bundle = SpecBundle::build(instance, strategy, &pool, args.seed, &options)?;
        lines.push_str(&serde_json::to_string(&bundle)?);
        lines.push('\n');
        count += 1;
    }
    fs::write(&args.out, lines)?;
    println!("wrote {count} prompts to {}", args.out.display());
    Ok(())
}

// ---------------------------------------------------------------------
// run

#[derive(Args)]
struct RunArgs {
    /// Prompt bundle JSONL file (from `prompts`)
    #[arg(long)]
    bundles: PathBuf,
    /// Responder: http, oracle, noisy, or replay
    #[arg(long, default_value = "oracle")]
    responder: String,
    /// Chat endpoint URL (with --responder http)
    #[arg(long)]
    endpoint: Option<String>,
    /// Transcript to replay (with --responder replay)
    #[arg(long)]
    transcript: Option<PathBuf>,
    /// Perturbation probability (with --responder noisy)
    #[arg(long, default_value_t = 0.0)]
    noise_rate: f64,
    /// Seed for noise decisions
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "layerlab-oracle")]
    model: String,
    #[arg(long, default_value_t = 4)]
    max_concurrency: usize,
    #[arg(long, default_value_t = 0.0)]
    temperature: f64,
    #[arg(long, default_value_t = 2048)]
    max_tokens: u32,
    /// Seconds without rate limits before concurrency recovers a step
    #[arg(long, default_value_t = 10)]
    cooldown_secs: u64,
    /// Output transcript JSONL file
    #[arg(long)]
    out: PathBuf,
}

fn load_bundles(path: &Path) -> Result<Vec<SpecBundle>, CliError> {
    let text = fs::read_to_string(path)?;
    let mut bundles = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let bundle: SpecBundle = serde_json::from_str(line)
            .map_err(|e| CliError::parse(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
        bundles.push(bundle);
    }
    Ok(bundles)
}

fn run_command(args: RunArgs) -> Result<(), CliError> {
    let bundles = load_bundles(&args.bundles)?;
    let kind = match args.responder.as_str() {
        "http" => {
            let endpoint = args
                .endpoint
                .ok_or_else(|| CliError::usage("--responder http requires --endpoint"))?;
            ResponderKind::Http(HttpConfig::new(endpoint))
        }
        "oracle" => ResponderKind::Oracle,
        "noisy" => ResponderKind::Noisy {
            rate: args.noise_rate,
            seed: args.seed,
        },
        "replay" => {
            let path = args
                .transcript
                .ok_or_else(|| CliError::usage("--responder replay requires --transcript"))?;
            ResponderKind::Replay(path)
        }
        other => return Err(CliError::usage(format!("unknown responder: {other}"))),
    };
    let responder = kind.build(&bundles)?;
    let options = RunOptions {
        max_concurrency: args.max_concurrency,
        model: args.model,
        temperature: args.temperature,
        max_tokens: args.max_tokens,
        cooldown_secs: args.cooldown_secs,
    };
    let mut sink = fs::File::create(&args.out)?;
    let records = crate::harness::run_experiment(&bundles, responder.as_ref(), &options, &mut sink)
        .map_err(CliError::from)?;
    sink.flush()?;
    let transport_failures = records
        .iter()
        .filter(|r| {
            matches!(&r.outcome, ScoreOutcome::Malformed { reason } if reason.starts_with("transport:"))
        })
        .count();
    let correct = records.iter().filter(|r| r.outcome.is_correct()).count();
    println!(
        "ran {} prompts ({correct} correct, {transport_failures} transport failures) -> {}",
        records.len(),
        args.out.display()
    );
    // partial transport failures still leave a usable transcript; a run
    // where nothing got through is a transport failure overall
    if !records.is_empty() && transport_failures == records.len() {
        return Err(CliError::transport(format!(
            "all {} requests failed in transit",
            records.len()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------
// score

#[derive(Args)]
struct ScoreArgs {
    /// Transcript JSONL file to re-score
    #[arg(long)]
    transcript: PathBuf,
    /// Output JSONL file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load_records(path: &Path) -> Result<Vec<ExperimentRecord>, CliError> {
    let text = fs::read_to_string(path)?;
    let mut records = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: ExperimentRecord = serde_json::from_str(line)
            .map_err(|e| CliError::parse(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
        records.push(record);
    }
    Ok(records)
}

fn score_command(args: ScoreArgs) -> Result<(), CliError> {
    let mut records = load_records(&args.transcript)?;
    for record in &mut records {
        let transport_failure = record.response.is_empty()
            && matches!(&record.outcome, ScoreOutcome::Malformed { reason } if reason.starts_with("transport:"));
        if transport_failure {
            continue; // nothing to re-parse; keep the transport outcome
        }
        match parse_response(record.spec.task, &record.response) {
            Ok(parsed) => {
                record.outcome = score(record.spec.task, &parsed, &record.truth)?;
                record.abs_error = crate::harness::numeric_abs_error(&parsed, &record.truth);
                record.parsed = Some(parsed);
            }
            Err(failure) => {
                record.outcome = ScoreOutcome::malformed(failure.reason);
                record.parsed = None;
                record.abs_error = None;
            }
        }
    }
    let mut lines = String::new();
    for record in &records {
        lines.push_str(&serde_json::to_string(record)?);
        lines.push('\n');
    }
    let correct = records.iter().filter(|r| r.outcome.is_correct()).count();
    write_output(args.out.as_deref(), &lines)?;
    eprintln!("scored {} records ({correct} correct)", records.len());
    Ok(())
}

// ---------------------------------------------------------------------
// report

#[derive(Args)]
struct ReportArgs {
    /// Transcript JSONL file to summarize
    #[arg(long)]
    transcript: PathBuf,
    /// Output directory for report.csv and histogram SVGs
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn report(args: ReportArgs) -> Result<(), CliError> {
    let records = load_records(&args.transcript)?;
    let report = summarize(&records);
    fs::create_dir_all(&args.out)?;
    let csv_path = args.out.join("report.csv");
    fs::write(&csv_path, report.to_csv())?;
    println!("wrote {}", csv_path.display());
    for (task, xml) in report.histograms() {
        let path = args.out.join(format!("histogram-{}.svg", task.name()));
        fs::write(&path, xml)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

// ---------------------------------------------------------------------
// generate

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    nodes: u32,
    #[arg(long)]
    edges: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Require every edge weight to exceed this value
    #[arg(long)]
    min_weight: Option<f64>,
    /// Node timestamp range start (YYYY-MM-DD)
    #[arg(long)]
    date_start: Option<String>,
    /// Node timestamp range end (YYYY-MM-DD)
    #[arg(long)]
    date_end: Option<String>,
    /// Guarantee a connected graph
    #[arg(long)]
    connected: bool,
    /// Output format
    #[arg(long, default_value = "json")]
    format: String,
    /// Output file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let mut spec = GenerateSpec::new(args.nodes, args.edges);
    if let Some(floor) = args.min_weight {
        spec = spec.weight_floor(floor);
    }
    match (&args.date_start, &args.date_end) {
        (Some(start), Some(end)) => {
            let parse_date = |s: &str| {
                chrono::NaiveDate::parse_from_str(s, "%Y-%m-%d")
                    .map_err(|e| CliError::usage(format!("bad date {s}: {e}")))
            };
            spec = spec.timestamps(parse_date(start)?, parse_date(end)?);
        }
        (None, None) => {}
        _ => {
            return Err(CliError::usage(
                "--date-start and --date-end must be given together",
            ))
        }
    }
    let graph = if args.connected {
        generate_connected_graph(&spec, args.seed)?
    } else {
        generate_random_graph(&spec, args.seed)?
    };
    let format = parse_format(&args.format)?;
    let text = emit_graph(&graph, format)?;
    write_output(args.out.as_deref(), &text)
}
