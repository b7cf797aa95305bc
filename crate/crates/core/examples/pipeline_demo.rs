//! Runs the full pipeline on one instance and prints what each stage did.

use quasitrail_core::endgame::{endgame_with_context, prepare_pipeline, EndgameOptions};
use quasitrail_core::gen::{attach_vertex, complete, gen_pendant_at, multiply_edges};
use quasitrail_core::id::{EdgeId, VertexId};

fn main() {
    // doubled K5 with an extra degree-3 vertex, carrying a pendant leaf so
    // the new vertex stays permanent
    let g = gen_pendant_at(
        &attach_vertex(&multiply_edges(&complete(5), 2), &[0, 1, 2]),
        VertexId(5),
    );
    let opts = EndgameOptions::default();
    let ctx = prepare_pipeline(&g, &opts).expect("instance qualifies");
    println!(
        "instance: {} vertices, {} edges; core: {} vertices; absorbed: {:?}; protected: {:?}",
        g.num_vertices(),
        g.num_edges(),
        ctx.core.core.num_vertices(),
        ctx.absorbed,
        ctx.core.protected,
    );
    for (e1, e2) in [(EdgeId(0), EdgeId(7)), (EdgeId(20), EdgeId(21))] {
        let outcome = endgame_with_context(&ctx, e1, e2, &opts).expect("trail");
        println!(
            "pair ({e1}, {e2}): route {:?}, {} edges, verified = {}",
            outcome.transcript.route,
            outcome.trail.len(),
            outcome.transcript.verified,
        );
    }
}
