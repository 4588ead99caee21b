//! Bar charts for scored-outcome counts.

use super::{xml_escape, RenderError, SvgDocument};

const BAR_WIDTH: f64 = 56.0;
const BAR_GAP: f64 = 28.0;
const PLOT_HEIGHT: f64 = 180.0;
const MARGIN: f64 = 48.0;

/// One bar per bucket, left to right in input order, heights proportional
/// to counts. Rejects an empty bucket list and all-zero counts.
pub fn render_histogram_svg(
    buckets: &[(String, u64)],
    title: &str,
) -> Result<SvgDocument, RenderError> {
    if buckets.is_empty() {
        return Err(RenderError::EmptyBuckets);
    }
    let max = buckets.iter().map(|&(_, c)| c).max().expect("nonempty");
    if max == 0 {
        return Err(RenderError::AllZero);
    }

    let n = buckets.len() as f64;
    let width = 2.0 * MARGIN + n * BAR_WIDTH + (n - 1.0) * BAR_GAP;
    let height = 2.0 * MARGIN + PLOT_HEIGHT + 24.0;
    let base_y = MARGIN + PLOT_HEIGHT;

    let mut body = String::new();
    body.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\" fill=\"#111111\">{}</text>\n",
        width / 2.0,
        MARGIN - 18.0,
        xml_escape(title)
    ));
    // Axes.
    body.push_str(&format!(
        "  <g stroke=\"#444444\" stroke-width=\"1\">\n    <line x1=\"{m}\" y1=\"{top}\" x2=\"{m}\" y2=\"{base}\"/>\n    <line x1=\"{m}\" y1=\"{base}\" x2=\"{right}\" y2=\"{base}\"/>\n  </g>\n",
        m = MARGIN - 8.0,
        top = MARGIN,
        base = base_y,
        right = width - MARGIN + 8.0,
    ));

    body.push_str("  <g fill=\"#5b8dd9\">\n");
    for (i, &(_, count)) in buckets.iter().enumerate() {
        let h = PLOT_HEIGHT * count as f64 / max as f64;
        let x = MARGIN + i as f64 * (BAR_WIDTH + BAR_GAP);
        body.push_str(&format!(
            "    <rect x=\"{x}\" y=\"{}\" width=\"{BAR_WIDTH}\" height=\"{h}\"/>\n",
            base_y - h,
        ));
    }
    body.push_str("  </g>\n");

    body.push_str("  <g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" fill=\"#111111\">\n");
    for (i, (label, count)) in buckets.iter().enumerate() {
        let x = MARGIN + i as f64 * (BAR_WIDTH + BAR_GAP) + BAR_WIDTH / 2.0;
        let h = PLOT_HEIGHT * *count as f64 / max as f64;
        body.push_str(&format!(
            "    <text x=\"{x}\" y=\"{}\">{}</text>\n",
            base_y - h - 6.0,
            count
        ));
        body.push_str(&format!(
            "    <text x=\"{x}\" y=\"{}\">{}</text>\n",
            base_y + 18.0,
            xml_escape(label)
        ));
    }
    body.push_str("  </g>\n");

    Ok(SvgDocument::new(width, height, body, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn buckets(v: &[(&str, u64)]) -> Vec<(String, u64)> {
        v.iter().map(|&(l, c)| (l.to_string(), c)).collect()
    }

    #[test]
    fn single_bucket_fills_the_plot() {
        let svg = render_histogram_svg(&buckets(&[("Correct", 10)]), "outcomes")
            .unwrap()
            .xml();
        assert_eq!(svg.matches("<rect").count(), 1);
        assert!(svg.contains(&format!("height=\"{PLOT_HEIGHT}\"")));
    }

    #[test]
    fn four_buckets_draw_four_bars_in_order() {
        let svg = render_histogram_svg(
            &buckets(&[("Correct", 7), ("Over", 2), ("Under", 1), ("Malformed", 4)]),
            "counts",
        )
        .unwrap()
        .xml();
        assert_eq!(svg.matches("<rect").count(), 4);
        let correct = svg.find(">Correct<").unwrap();
        let over = svg.find(">Over<").unwrap();
        let under = svg.find(">Under<").unwrap();
        assert!(correct < over && over < under);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert_eq!(
            render_histogram_svg(&[], "t").unwrap_err(),
            RenderError::EmptyBuckets
        );
        assert_eq!(
            render_histogram_svg(&buckets(&[("Correct", 0), ("Malformed", 0)]), "t").unwrap_err(),
            RenderError::AllZero
        );
    }

    #[test]
    fn heights_scale_with_counts() {
        let svg = render_histogram_svg(&buckets(&[("a", 1), ("b", 2)]), "t")
            .unwrap()
            .xml();
        assert!(svg.contains("height=\"90\""));
        assert!(svg.contains("height=\"180\""));
    }
}
