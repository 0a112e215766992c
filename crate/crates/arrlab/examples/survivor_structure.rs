//! Fault injection and survivor-component structure.
//!
//! Within known fault budgets, removing vertices can only disconnect an
//! arrangement graph in a few specific ways: one isolated vertex, one
//! isolated edge, or (at the larger budget) two isolated vertices. The
//! structured witnesses below realize each shape exactly.

use arrlab::arrangement::{ArrangementGraph, GraphParams};
use arrlab::fault::{self, FaultPattern, Regime};

fn main() -> anyhow::Result<()> {
    let g = ArrangementGraph::build(GraphParams::new(6, 4)?)?;

    let (u, v) = g.topology().edges()[0];
    let (x, y) = fault::canonical_distance_two_pair(&g).expect("distance-2 pair");
    let patterns = [
        ("vertex neighborhood", FaultPattern::Vertex(0)),
        ("edge neighborhood", FaultPattern::Edge(u, v)),
        ("twin neighborhoods", FaultPattern::TwinNonAdjacent(x, y)),
    ];
    for (name, pattern) in patterns {
        let w = fault::witness_fault_set(&g, pattern)?;
        let verdict = fault::classify(&g, &w.faults, Regime::ThreeComponentBudget)?;
        println!(
            "{name}: |F| = {:2} -> {}",
            w.faults.len(),
            verdict.class.name()
        );
    }

    // The per-class fault distribution drives the structure proofs: classes
    // holding at least (k-1)(n-k) faults are "heavy", and the union of the
    // light classes always stays connected within budget.
    let w = fault::witness_fault_set(&g, FaultPattern::TwinNonAdjacent(x, y))?;
    let profile = fault::fault_profile(&g, &w.faults);
    println!(
        "\ntwin fault distribution per class: {:?} (threshold {})",
        profile.per_class, profile.threshold
    );
    println!("heavy classes: {:?}", profile.heavy);
    let light = fault::check_light_side_connected(&g, &w.faults);
    println!("light side connected: {}", light.connected);

    // One past the budget, a 3-vertex path can be cut off whole.
    let (a, b, c) = fault::canonical_path_pattern(&g).expect("path pattern");
    let w = fault::witness_fault_set(&g, FaultPattern::Path(a, b, c))?;
    let report = fault::components(g.topology(), &w.faults)?;
    println!(
        "\npath neighborhood: |F| = {} -> {}",
        w.faults.len(),
        report.class.name()
    );
    Ok(())
}
