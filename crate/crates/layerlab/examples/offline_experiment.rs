//! Run a full experiment offline: build prompt bundles for several
//! tasks, answer them with the built-in oracle responder, then repeat
//! with a noisy responder and compare outcome tables.
//!
//! ```bash
//! cargo run -p layerlab --example offline_experiment
//! ```

use layerlab::client::ResponderKind;
use layerlab::demo::example_pool;
use layerlab::harness::{
    run_experiment, summarize, PromptOptions, RunOptions, SpecBundle, Strategy, TaskKind,
};

fn main() -> anyhow::Result<()> {
    let pool = example_pool();
    let options = PromptOptions::default();
    let tasks = [
        TaskKind::LayerAssignment,
        TaskKind::SortLayers,
        TaskKind::CountCrossings,
        TaskKind::EdgeLength,
    ];

    let mut bundles = Vec::new();
    for instance in pool.instances() {
        if !tasks.contains(&instance.kind()) {
            continue;
        }
        for strategy in [Strategy::Standard, Strategy::Steps, Strategy::icl(3)?] {
            bundles.push(SpecBundle::build(instance, strategy, &pool, 0, &options)?);
        }
    }
    println!("built {} prompt bundles", bundles.len());

    let run_options = RunOptions::default();
    let mut transcript = Vec::new();

    let oracle = ResponderKind::Oracle.build(&bundles)?;
    let records = run_experiment(&bundles, oracle.as_ref(), &run_options, &mut transcript)?;
    println!("\noracle responder:\n{}", summarize(&records).to_csv());

    let noisy = ResponderKind::Noisy { rate: 0.4, seed: 9 }.build(&bundles)?;
    let mut transcript = Vec::new();
    let records = run_experiment(&bundles, noisy.as_ref(), &run_options, &mut transcript)?;
    println!("noisy responder (rate 0.4):\n{}", summarize(&records).to_csv());
    Ok(())
}
