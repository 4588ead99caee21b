//! Build chat prompts for one task under all three strategies and
//! print them.
//!
//! ```bash
//! cargo run -p layerlab --example build_prompts
//! ```

use layerlab::demo::example_pool;
use layerlab::harness::{build_prompt, PromptOptions, Strategy};

fn main() -> anyhow::Result<()> {
    let pool = example_pool();
    let instance = pool.get("cross-main")?;
    let options = PromptOptions::default();

    let standard = build_prompt(instance, Strategy::Standard, &pool, 0, &options)?;
    println!("=== standard ({} chars) ===\n{}", standard.text.len(), standard.text);

    let steps = build_prompt(instance, Strategy::Steps, &pool, 0, &options)?;
    println!(
        "=== steps ({} chars) ===\n{}",
        steps.text.len(),
        &steps.text[..steps.text.len().min(400)]
    );
    println!("...\n");

    let icl = build_prompt(instance, Strategy::icl(3)?, &pool, 7, &options)?;
    println!(
        "=== icl-3 ({} chars, examples {:?}) ===",
        icl.text.len(),
        icl.icl_example_ids
    );
    // in-context examples come from the pool, never the query instance
    assert!(!icl.icl_example_ids.contains(&instance.id));
    assert!(icl.text.contains("Answer:"));
    println!("(omitted; three solved input/answer pairs, then the query)");
    Ok(())
}
