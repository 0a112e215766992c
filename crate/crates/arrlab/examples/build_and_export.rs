//! Build arrangement graphs and their special families, then export one.

use arrlab::arrangement::{Arrangement, ArrangementGraph, GraphParams};
use arrlab::export;

fn main() -> anyhow::Result<()> {
    for (n, k) in [(4, 2), (5, 2), (5, 3), (6, 4), (5, 1), (5, 4)] {
        let g = ArrangementGraph::build(GraphParams::new(n, k)?)?;
        println!(
            "A({n},{k}): {} vertices, {} edges, degree {}, diameter {}, family {:?}",
            g.vertex_count(),
            g.topology().edge_count(),
            g.params().degree(),
            g.diameter(),
            g.family_tag(),
        );
    }

    // The vertex codec: labels are space-separated symbols, ranks are dense.
    let params = GraphParams::new(4, 2)?;
    let g = ArrangementGraph::build(params)?;
    let a = Arrangement::parse("3 1", params)?;
    let v = a.rank(params);
    println!("\nrank(\"3 1\") = {v}, neighbors:");
    for &w in g.neighbors(v) {
        println!("  {}", g.label(w));
    }

    println!("\nDOT output for A(4,2), first lines:");
    for line in export::to_dot(&g).lines().take(5) {
        println!("  {line}");
    }
    Ok(())
}
