//! Run a batch of named verification claims and print one line per result.
//!
//! The same campaigns back the `arrlab verify` subcommand; claim names are
//! listed by `Claim::ALL`.

use arrlab::verify::{run_claim, Claim, RunConfig, VerifyError};

fn main() {
    let runs = [
        (Claim::CrossEdgeMatching, 5, 3),
        (Claim::NeighborDistribution, 5, 3),
        (Claim::EdgeNeighborhoodSize, 5, 3),
        (Claim::CommonNeighborTable, 4, 2),
        (Claim::DiameterFormula, 5, 3),
        (Claim::Connectivity, 4, 3),
        (Claim::TightlySuper, 4, 3),
        (Claim::HeavyClassCount, 5, 3),
        (Claim::LightSideConnected, 5, 3),
        (Claim::TwoComponentStructure, 5, 3),
        (Claim::ThreeComponentStructure, 6, 4),
        (Claim::TcUpperWitness, 5, 4),
        (Claim::TcSampledLowerBound, 5, 4),
    ];
    for (claim, n, k) in runs {
        let mut cfg = RunConfig::new(n, k);
        cfg.trials = 2_000;
        match run_claim(claim, &cfg) {
            Ok(report) => println!(
                "{:16} A({n},{k}): {} ({} mode, {} examined, {:.2?})",
                report.claim,
                if report.ok() { "verified" } else { "VIOLATED" },
                report.mode,
                report.examined,
                report.elapsed
            ),
            Err(VerifyError::OutOfScope { reason, .. }) => {
                println!("{:16} A({n},{k}): out of scope ({reason})", claim.tag())
            }
            Err(e) => println!("{:16} A({n},{k}): error: {e}", claim.tag()),
        }
    }
}
