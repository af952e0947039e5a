//! Fixtures shared by the benchmarks.

use hyperspectra::generators::{self, PartiteMode};
use hyperspectra::joins::BackbonePlan;
use hyperspectra::{rational, Hypergraph};

/// A strong 3-uniform complete multipartite hypergraph with `k` parts of size `part`.
pub fn multipartite(k: usize, part: usize) -> Hypergraph {
    generators::complete_multipartite(3, &vec![part; k], PartiteMode::Strong).expect("valid sizes")
}

/// A cycle backbone carrying `k` copies of `K^3_part`; keep `k * part` within the enumeration guard.
pub fn cycle_plan(k: usize, part: usize) -> BackbonePlan {
    let backbone = generators::cycle_graph(k).expect("k >= 3");
    let member = generators::complete_uniform(3, part, rational::one()).expect("valid order");
    BackbonePlan::uniform(backbone, vec![member; k], 3).expect("valid plan")
}
