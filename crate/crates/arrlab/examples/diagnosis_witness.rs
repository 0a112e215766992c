//! Comparison-based (MM*) diagnosis: syndromes, distinguishability, and the
//! witness pair that pins the conditional diagnosability.

use arrlab::arrangement::{ArrangementGraph, GraphParams};
use arrlab::diagnosis::{self, Adversary};
use arrlab::fault::FaultSet;

fn main() -> anyhow::Result<()> {
    let g = ArrangementGraph::build(GraphParams::new(4, 2)?)?;
    let scheme = diagnosis::comparison_scheme(g.topology());
    println!("A(4,2): {} comparisons in the MM* scheme", scheme.len());

    // A faulty vertex shows up in any syndrome it can emit.
    let f1 = FaultSet::new(g.vertex_count(), [0])?;
    let f2 = FaultSet::empty(g.vertex_count());
    let syndrome = diagnosis::simulate_syndrome(g.topology(), &f1, &Adversary::AllZero);
    println!(
        "syndrome of {{\"1 2\"}} compatible with fault-free: {}",
        diagnosis::is_compatible(g.topology(), &f2, &syndrome)?
    );
    let verdict = diagnosis::distinguishable_sd(g.topology(), &f1, &f2)?;
    println!("{}", serde_json::to_string_pretty(&verdict.to_json(&g, &f1, &f2))?);

    // The closed-form conditional diagnosability is tight: one size past the
    // bound there is a conditional pair no syndrome can separate.
    let g = ArrangementGraph::build(GraphParams::new(5, 4)?)?;
    let bound = diagnosis::conditional_diagnosability_bound(&g)?;
    let (f1, f2) = diagnosis::tc_witness_pair(&g)?;
    println!(
        "\nA(5,4): bound {bound}, witness pair sizes {} and {}",
        f1.len(),
        f2.len()
    );
    let sd = diagnosis::distinguishable_sd(g.topology(), &f1, &f2)?;
    let forced = diagnosis::distinguishable_forced(g.topology(), &f1, &f2)?;
    println!(
        "conditional: {} / {}; distinguishable: {} (structural), {} (forced-value)",
        diagnosis::is_conditional(g.topology(), &f1),
        diagnosis::is_conditional(g.topology(), &f2),
        sd.distinguishable,
        forced.distinguishable
    );
    Ok(())
}
