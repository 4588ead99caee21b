//! Deterministic SVG output: layered drawings and report histograms.
//! Identical inputs emit byte-identical documents.

mod histogram;
mod layout_svg;

pub use histogram::render_histogram_svg;
pub use layout_svg::{render_layout_svg, SvgStyle};

use crate::graph::NodeId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RenderError {
    #[error("node {0} has no position")]
    MissingPosition(NodeId),
    #[error("a histogram needs at least one bucket")]
    EmptyBuckets,
    #[error("all bucket counts are zero")]
    AllZero,
}

/// A finished SVG image plus any warnings the renderer raised while
/// drawing (for example nodes lying on another edge's straight line).
#[derive(Debug, Clone, PartialEq)]
pub struct SvgDocument {
    width: f64,
    height: f64,
    body: String,
    warnings: Vec<String>,
}

impl SvgDocument {
    pub(crate) fn new(width: f64, height: f64, body: String, warnings: Vec<String>) -> Self {
        SvgDocument {
            width,
            height,
            body,
            warnings,
        }
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The complete document text.
    pub fn xml(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
            w = self.width,
            h = self.height
        ));
        for warning in &self.warnings {
            out.push_str(&format!("  <!-- warning: {} -->\n", xml_escape(warning)));
        }
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

impl std::fmt::Display for SvgDocument {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.xml())
    }
}

pub(crate) fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
