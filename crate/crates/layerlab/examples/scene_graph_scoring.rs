//! Score free-text answers for the scene-description tasks: extract a
//! DOT graph from a chat reply, compare it with the scene's true
//! relationship graph, and check a prose scene against a graph.
//!
//! ```bash
//! cargo run -p layerlab --example scene_graph_scoring
//! ```

use layerlab::demo::{office_graph, office_scene};
use layerlab::harness::{parse_response, score_scene_graph, ParsedAnswer, TaskKind};

fn main() -> anyhow::Result<()> {
    println!("scene:\n{}\n", office_scene());

    // a model reply: prose around a DOT block
    let reply = "Here is the graph extracted from the scene:\n\
                 \n\
                 digraph scene {\n\
                 \x20   Alice -> Bob\n\
                 \x20   Alice -> Claire\n\
                 \x20   Bob -> Daniel\n\
                 \x20   Daniel -> Claire\n\
                 \x20   Daniel -> Ed\n\
                 \x20   Claire -> Ed\n\
                 }\n\
                 \n\
                 Each edge is one conversation mentioned in the text.";
    let parsed = parse_response(TaskKind::GraphFromScene, reply)
        .map_err(|f| anyhow::anyhow!(f.reason))?;
    let ParsedAnswer::GraphDoc { graph: answer } = &parsed else {
        anyhow::bail!("expected a scene graph");
    };
    let outcome = score_scene_graph(answer, &office_graph());
    println!("extracted {} name pairs -> {}", answer.edge_count(), outcome.class_label());

    // one wrong endpoint costs one of the six pairs
    let off_by_one = reply.replace("Claire -> Ed", "Alice -> Ed");
    let parsed = parse_response(TaskKind::GraphFromScene, &off_by_one)
        .map_err(|f| anyhow::anyhow!(f.reason))?;
    let ParsedAnswer::GraphDoc { graph: answer } = &parsed else {
        anyhow::bail!("expected a scene graph");
    };
    let outcome = score_scene_graph(answer, &office_graph());
    println!("with one wrong edge            -> {}", outcome.class_label());

    Ok(())
}
