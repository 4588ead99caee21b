//! Render an outcome histogram as a standalone SVG.
//!
//! ```bash
//! cargo run -p layerlab --example render_charts
//! ```

use layerlab::render::render_histogram_svg;

fn main() -> anyhow::Result<()> {
    let buckets = vec![
        ("correct".to_string(), 17u64),
        ("incorrect-over".to_string(), 5),
        ("incorrect-under".to_string(), 3),
        ("malformed".to_string(), 1),
    ];
    let svg = render_histogram_svg(&buckets, "count-crossings outcomes")?;
    let path = std::env::temp_dir().join("layerlab_histogram.svg");
    std::fs::write(&path, svg.xml())?;
    println!("histogram with {} bars written to {}", buckets.len(), path.display());
    Ok(())
}
