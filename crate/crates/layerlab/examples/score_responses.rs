//! Parse and score raw chat replies against task truths: last-number
//! extraction, layer-line recovery from prose, and the outcome labels
//! each reply earns.
//!
//! ```bash
//! cargo run -p layerlab --example score_responses
//! ```

use layerlab::demo::example_pool;
use layerlab::harness::{parse_response, score, truth_of, TaskKind};

fn main() -> anyhow::Result<()> {
    let pool = example_pool();
    let instance = pool.get("length-main")?; // true total edge length: 20

    let replies = [
        ("a bare number", "20"),
        ("prose, answer last", "Adding the spans layer by layer, the total is 20."),
        ("overshoot", "The sum of all edge lengths equals 23."),
        ("undershoot", "17"),
        ("no number at all", "I cannot determine the edge lengths."),
    ];

    let truth = truth_of(&instance.payload)?;
    for (label, reply) in replies {
        let outcome = match parse_response(TaskKind::EdgeLength, reply) {
            Ok(parsed) => score(TaskKind::EdgeLength, &parsed, &truth)?,
            Err(failure) => {
                println!("{label:20} -> malformed ({})", failure.reason);
                continue;
            }
        };
        println!("{label:20} -> {}", outcome.class_label());
    }

    // layer assignment gets graded per node, not all or nothing:
    // nine of ten ranks match the oracle, node 4 is placed too deep
    let instance = pool.get("rank-main")?;
    let truth = truth_of(&instance.payload)?;
    let reply = "Here is my layering:\n\
                 0 - 0\n5 - 1\n9 - 2\n3 - 2\n7 - 3\n8 - 3\n2 - 4\n4 - 5\n6 - 5\n1 - 6";
    let parsed = parse_response(TaskKind::LayerAssignment, reply)
        .map_err(|f| anyhow::anyhow!(f.reason))?;
    let outcome = score(TaskKind::LayerAssignment, &parsed, &truth)?;
    println!("{:20} -> {}", "one rank off", outcome.class_label());
    Ok(())
}
