//! Record an experiment transcript, then replay it and confirm the
//! replayed run reproduces the original outcomes byte for byte.
//!
//! ```bash
//! cargo run -p layerlab --example replay_transcript
//! ```

use layerlab::client::{ReplayResponder, ResponderKind};
use layerlab::demo::example_pool;
use layerlab::harness::{run_experiment, PromptOptions, RunOptions, SpecBundle, Strategy, TaskKind};

fn main() -> anyhow::Result<()> {
    let pool = example_pool();
    let options = PromptOptions::default();
    let mut bundles = Vec::new();
    for instance in pool.instances() {
        if instance.kind() == TaskKind::EdgeLength {
            bundles.push(SpecBundle::build(
                instance,
                Strategy::Steps,
                &pool,
                0,
                &options,
            )?);
        }
    }

    // first run: noisy answers, recorded to a JSONL transcript
    let noisy = ResponderKind::Noisy { rate: 0.5, seed: 4 }.build(&bundles)?;
    let mut transcript = Vec::new();
    let first = run_experiment(&bundles, noisy.as_ref(), &RunOptions::default(), &mut transcript)?;
    let jsonl = String::from_utf8(transcript)?;
    println!("recorded {} responses", first.len());

    // second run: no responder logic at all, answers come from the file
    let replay = ReplayResponder::from_jsonl(&jsonl)?;
    let mut sink = Vec::new();
    let second = run_experiment(&bundles, &replay, &RunOptions::default(), &mut sink)?;

    for (a, b) in first.iter().zip(&second) {
        assert_eq!(a.response, b.response);
        assert_eq!(a.outcome, b.outcome);
    }
    println!("replay reproduced every response and outcome");

    for record in &second {
        println!(
            "  {:30} {}",
            record.spec.id,
            record.outcome.class_label()
        );
    }
    Ok(())
}
