//! Named verification campaigns over one arrangement graph.
//!
//! Each claim re-derives a structural statement from scratch (exhaustively
//! where feasible, by seeded sampling plus explicit witnesses otherwise) and
//! reports every violation verbatim so it can be replayed.

use crate::arrangement::{ArrangementGraph, GraphParams};
use crate::diagnosis::{self, chunk_sizes};
use crate::fault::{self, FaultPattern, FaultSet, Regime, StructureClass};
use crate::graph::SimpleGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Parameters of a verification run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub trials: u64,
    /// Overrides the claim's default maximum fault-set size where sampling
    /// is involved.
    pub max_fault: Option<usize>,
    /// Enables long-running exhaustive sweeps.
    pub long: bool,
}

impl RunConfig {
    pub fn new(n: usize, k: usize) -> Self {
        RunConfig {
            n,
            k,
            seed: 0,
            trials: 10_000,
            max_fault: None,
            long: false,
        }
    }
}

/// The verifiable claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    CrossEdgeMatching,
    NeighborDistribution,
    EdgeNeighborhoodSize,
    CommonNeighborTable,
    DiameterFormula,
    Connectivity,
    TightlySuper,
    HeavyClassCount,
    LightSideConnected,
    TwoComponentStructure,
    ThreeComponentStructure,
    TcUpperWitness,
    CheckerEquivalence,
    TcSampledLowerBound,
}

impl Claim {
    pub const ALL: [Claim; 14] = [
        Claim::CrossEdgeMatching,
        Claim::NeighborDistribution,
        Claim::EdgeNeighborhoodSize,
        Claim::CommonNeighborTable,
        Claim::DiameterFormula,
        Claim::Connectivity,
        Claim::TightlySuper,
        Claim::HeavyClassCount,
        Claim::LightSideConnected,
        Claim::TwoComponentStructure,
        Claim::ThreeComponentStructure,
        Claim::TcUpperWitness,
        Claim::CheckerEquivalence,
        Claim::TcSampledLowerBound,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Claim::CrossEdgeMatching => "eq-2.1",
            Claim::NeighborDistribution => "eq-2.2",
            Claim::EdgeNeighborhoodSize => "eq-2.4",
            Claim::CommonNeighborTable => "eq-2.5",
            Claim::DiameterFormula => "diameter",
            Claim::Connectivity => "kappa",
            Claim::TightlySuper => "thm-3.1",
            Claim::HeavyClassCount => "cor-3.5",
            Claim::LightSideConnected => "lemma-3.4",
            Claim::TwoComponentStructure => "thm-3.9",
            Claim::ThreeComponentStructure => "thm-3.12",
            Claim::TcUpperWitness => "thm-4.2",
            Claim::CheckerEquivalence => "lemma-4.1-equiv",
            Claim::TcSampledLowerBound => "thm-4.6-sampled",
        }
    }
}

impl FromStr for Claim {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .iter()
            .copied()
            .find(|c| c.tag() == s)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Machine-readable outcome of one claim run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: Value,
    pub mode: String,
    /// Candidates examined (subsets, pairs, vertices -- per claim).
    pub examined: u64,
    pub violations: Vec<Value>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Arrangement(#[from] crate::arrangement::ArrangementError),
    #[error(transparent)]
    Fault(#[from] crate::fault::FaultError),
    #[error(transparent)]
    Diagnosis(#[from] crate::diagnosis::DiagnosisError),
    #[error("claim {claim} is out of scope for n={n}, k={k}: {reason}")]
    OutOfScope {
        claim: &'static str,
        n: usize,
        k: usize,
        reason: String,
    },
}

/// Runs one claim and collects its report.
pub fn run_claim(claim: Claim, cfg: &RunConfig) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let g = if claim == Claim::CheckerEquivalence {
        None
    } else {
        Some(ArrangementGraph::build(GraphParams::new(cfg.n, cfg.k)?)?)
    };
    let (mode, examined, violations) = match claim {
        Claim::CrossEdgeMatching => cross_edge_matching(g.as_ref().unwrap()),
        Claim::NeighborDistribution => neighbor_distribution(g.as_ref().unwrap()),
        Claim::EdgeNeighborhoodSize => edge_neighborhood_size(g.as_ref().unwrap()),
        Claim::CommonNeighborTable => common_neighbor_table(g.as_ref().unwrap()),
        Claim::DiameterFormula => diameter_formula(g.as_ref().unwrap()),
        Claim::Connectivity => connectivity(g.as_ref().unwrap()),
        Claim::TightlySuper => tightly_super(g.as_ref().unwrap(), cfg)?,
        Claim::HeavyClassCount => heavy_class_count(g.as_ref().unwrap(), cfg)?,
        Claim::LightSideConnected => light_side_connected(g.as_ref().unwrap(), cfg)?,
        Claim::TwoComponentStructure => structure_regime(g.as_ref().unwrap(), cfg, Regime::TwoComponentBudget)?,
        Claim::ThreeComponentStructure => structure_regime(g.as_ref().unwrap(), cfg, Regime::ThreeComponentBudget)?,
        Claim::TcUpperWitness => tc_upper_witness(g.as_ref().unwrap())?,
        Claim::CheckerEquivalence => checker_equivalence(cfg),
        Claim::TcSampledLowerBound => tc_sampled_lower_bound(g.as_ref().unwrap(), cfg)?,
    };
    Ok(VerificationReport {
        claim: claim.tag().to_string(),
        parameters: json!({
            "n": cfg.n, "k": cfg.k, "seed": cfg.seed, "trials": cfg.trials,
            "max_fault": cfg.max_fault, "long": cfg.long,
        }),
        mode,
        examined,
        violations,
        elapsed: start.elapsed(),
    })
}

type Outcome = (String, u64, Vec<Value>);

fn cross_edge_matching(g: &ArrangementGraph) -> Outcome {
    let p = g.params();
    // (n-2)!/(n-k-1)! = (n-2)(n-3)...(n-k); empty product for k = 1.
    let expected = falling_factorial_range(p.n - 2, p.n - p.k);
    let mut violations = Vec::new();
    let mut examined = 0;
    for i in 1..=p.n {
        for j in 1..=p.n {
            if i == j {
                continue;
            }
            examined += 1;
            let edges = g.cross_edges(i, j).unwrap();
            if edges.len() != expected {
                violations.push(json!({
                    "pair": [i, j], "size": edges.len(), "expected": expected,
                }));
            }
            let mut seen = std::collections::HashSet::new();
            if !edges.iter().all(|&(a, b)| seen.insert(a) && seen.insert(b)) {
                violations.push(json!({"pair": [i, j], "problem": "not a matching"}));
            }
        }
    }
    ("exhaustive".into(), examined, violations)
}

/// Product `hi * (hi-1) * ... * lo`, or 1 when `hi < lo`.
fn falling_factorial_range(hi: usize, lo: usize) -> usize {
    if hi < lo {
        1
    } else {
        (lo..=hi).product()
    }
}

fn neighbor_distribution(g: &ArrangementGraph) -> Outcome {
    let p = g.params();
    let mut violations = Vec::new();
    let mut examined = 0;
    for u in 0..g.vertex_count() {
        examined += 1;
        let class = g.class_of(u);
        let outer: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| g.class_of(w) != class)
            .collect();
        let inner = g.neighbors(u).len() - outer.len();
        let outer_classes: std::collections::HashSet<usize> =
            outer.iter().map(|&w| g.class_of(w)).collect();
        if outer.len() != p.n - p.k
            || inner != (p.k - 1) * (p.n - p.k)
            || outer_classes.len() != outer.len()
        {
            violations.push(json!({
                "vertex": g.label(u), "outer": outer.len(), "inner": inner,
                "distinct_outer_classes": outer_classes.len(),
            }));
        }
    }
    // Second line: outer-neighbor sets of distinct vertices of one class are
    // disjoint.
    for class in g.decompose(p.k).unwrap() {
        let outer_of = |v: usize| -> Vec<usize> {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| g.class_of(w) != class.symbol)
                .collect()
        };
        for (idx, &u) in class.vertices.iter().enumerate() {
            let ou = outer_of(u);
            for &v in &class.vertices[idx + 1..] {
                examined += 1;
                if outer_of(v).iter().any(|w| ou.contains(w)) {
                    violations.push(json!({
                        "problem": "shared outer neighbor",
                        "u": g.label(u), "v": g.label(v),
                    }));
                }
            }
        }
    }
    ("exhaustive".into(), examined, violations)
}

fn edge_neighborhood_size(g: &ArrangementGraph) -> Outcome {
    let p = g.params();
    let expected = (2 * p.k - 1) * (p.n - p.k) - 1;
    let mut violations = Vec::new();
    let mut examined = 0;
    for (u, v) in g.topology().edges() {
        examined += 1;
        let nb = g.edge_neighborhood(u, v).unwrap();
        if nb.len() != expected || nb.contains(&u) || nb.contains(&v) {
            violations.push(json!({
                "edge": [g.label(u), g.label(v)], "size": nb.len(), "expected": expected,
            }));
        }
    }
    ("exhaustive".into(), examined, violations)
}

/// Common-neighbor counts by distance: `n-k-1` for adjacent pairs, 0 beyond
/// distance two. At distance two the count is exactly 1 when `n = k+1`; when
/// `n >= k+2` it is 1 or 2 (1 for rotation-type pairs, where one vertex reuses
/// a symbol the other holds in a different position, 2 otherwise), and the
/// upper value 2 must be attained.
fn common_neighbor_table(g: &ArrangementGraph) -> Outcome {
    let p = g.params();
    let mut violations = Vec::new();
    let mut examined = 0;
    let mut max_at_two = 0;
    for u in 0..g.vertex_count() {
        let dist = g.topology().bfs_distances(u);
        for (v, d) in dist.iter().enumerate().skip(u + 1) {
            examined += 1;
            let d = d.expect("connected");
            let got = g.common_neighbors(u, v).unwrap();
            let ok = match d {
                1 => got == p.n - p.k - 1,
                2 if p.n >= p.k + 2 => {
                    max_at_two = max_at_two.max(got);
                    got == 1 || got == 2
                }
                2 => got == 1,
                _ => got == 0,
            };
            if !ok {
                violations.push(json!({
                    "u": g.label(u), "v": g.label(v), "distance": d, "common": got,
                }));
            }
        }
    }
    if p.n >= p.k + 2 && max_at_two != 2 {
        violations.push(json!({
            "problem": "distance-two maximum not attained",
            "max_common": max_at_two, "expected": 2,
        }));
    }
    ("exhaustive".into(), examined, violations)
}

fn diameter_formula(g: &ArrangementGraph) -> Outcome {
    let p = g.params();
    let computed = g.diameter();
    let formula = 3 * p.k / 2;
    let violations = if computed == formula {
        Vec::new()
    } else {
        vec![json!({
            "problem": "diameter formula discrepancy",
            "computed": computed, "formula": formula,
        })]
    };
    ("exhaustive".into(), 1, violations)
}

fn connectivity(g: &ArrangementGraph) -> Outcome {
    let p = g.params();
    let expected = if g.topology().is_complete() {
        g.vertex_count() - 1
    } else {
        p.k * (p.n - p.k)
    };
    let computed = g.topology().connectivity();
    let violations = if computed == expected {
        Vec::new()
    } else {
        vec![json!({"computed": computed, "expected": expected})]
    };
    ("exhaustive".into(), 1, violations)
}

// Default candidate cap for exhaustive sweeps without --long.
const SHORT_SCAN_BUDGET: u64 = 2_000_000;

fn tightly_super(g: &ArrangementGraph, cfg: &RunConfig) -> Result<Outcome, VerifyError> {
    let p = g.params();
    let size = p.k * (p.n - p.k);
    let budget = if cfg.long { u64::MAX } else { SHORT_SCAN_BUDGET };
    let scan = fault::enumerate_separating_sets(g.topology(), size, budget)?;
    let mut violations = Vec::new();
    for f in &scan.sets {
        let report = fault::components(g.topology(), f)?;
        let ok = report.class == StructureClass::TwoComponentsSingleton && {
            let x = report.components[1][0];
            let mut nx: Vec<usize> = g.neighbors(x).to_vec();
            nx.sort_unstable();
            nx == f.members()
        };
        if !ok {
            violations.push(json!({
                "faults": f.labels(g),
                "class": report.class.name(),
            }));
        }
    }
    let mode = if scan.exhaustive { "exhaustive" } else { "partial" };
    Ok((mode.into(), scan.examined, violations))
}

/// Seeded sampling campaign shared by the structure claims: random fault sets
/// of size 1..=max plus the supplied structured witnesses, checked in
/// parallel chunks.
fn sampled_campaign<F>(
    g: &ArrangementGraph,
    cfg: &RunConfig,
    max_size: usize,
    witnesses: Vec<FaultSet>,
    check: F,
) -> (u64, Vec<Value>)
where
    F: Fn(&FaultSet) -> Option<Value> + Sync,
{
    let mut violations: Vec<Value> = witnesses.iter().filter_map(&check).collect();
    let chunks = chunk_sizes(cfg.trials, 64);
    let results: Vec<Vec<Value>> = crate::with_thread_pool(|| {
        use rayon::prelude::*;
        chunks
            .par_iter()
            .enumerate()
            .map(|(idx, &len)| {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(idx as u64));
                let mut bad = Vec::new();
                for _ in 0..len {
                    let size = rng.gen_range(1..=max_size);
                    let f = fault::random_fault_set(&mut rng, g.vertex_count(), size);
                    if let Some(v) = check(&f) {
                        bad.push(v);
                    }
                }
                bad
            })
            .collect()
    });
    for chunk in results {
        violations.extend(chunk);
    }
    (cfg.trials + witnesses.len() as u64, violations)
}

fn standard_witnesses(
    g: &ArrangementGraph,
    include_twin: bool,
) -> Result<Vec<FaultSet>, VerifyError> {
    let mut out = vec![fault::witness_fault_set(g, FaultPattern::Vertex(0))?.faults];
    let (u, v) = g.topology().edges()[0];
    out.push(fault::witness_fault_set(g, FaultPattern::Edge(u, v))?.faults);
    if include_twin {
        if let Some((x, y)) = fault::canonical_distance_two_pair(g) {
            out.push(fault::witness_fault_set(g, FaultPattern::TwinNonAdjacent(x, y))?.faults);
        }
    }
    Ok(out)
}

fn heavy_class_count(g: &ArrangementGraph, cfg: &RunConfig) -> Result<Outcome, VerifyError> {
    let p = g.params();
    if p.k < 3 {
        return Err(VerifyError::OutOfScope {
            claim: "cor-3.5",
            n: p.n,
            k: p.k,
            reason: "requires k >= 3".into(),
        });
    }
    let tier1 = (2 * p.k - 1) * (p.n - p.k) - 1;
    let tier2 = (3 * p.k - 2) * (p.n - p.k) - 3;
    let max_size = cfg.max_fault.unwrap_or(tier2);
    let witnesses = standard_witnesses(g, true)?;
    let (examined, violations) = sampled_campaign(g, cfg, max_size, witnesses, |f| {
        if !fault::is_separating(g.topology(), f).unwrap() {
            return None;
        }
        let heavy = fault::fault_profile(g, f).heavy.len();
        let bound = if f.len() <= tier1 {
            2
        } else if f.len() <= tier2 {
            3
        } else {
            return None;
        };
        if (1..=bound).contains(&heavy) {
            None
        } else {
            Some(json!({"faults": f.labels(g), "heavy_classes": heavy, "bound": bound}))
        }
    });
    Ok(("sampled".into(), examined, violations))
}

fn light_side_connected(g: &ArrangementGraph, cfg: &RunConfig) -> Result<Outcome, VerifyError> {
    let p = g.params();
    if p.k < 3 {
        return Err(VerifyError::OutOfScope {
            claim: "lemma-3.4",
            n: p.n,
            k: p.k,
            reason: "requires k >= 3".into(),
        });
    }
    let budget = (3 * p.k - 2) * (p.n - p.k) - 3;
    let max_size = cfg.max_fault.unwrap_or(budget).min(budget);
    let witnesses = standard_witnesses(g, p.k >= 4)?;
    let (examined, violations) = sampled_campaign(g, cfg, max_size, witnesses, |f| {
        if f.len() > budget {
            return None;
        }
        let check = fault::check_light_side_connected(g, f);
        if check.connected {
            None
        } else {
            Some(json!({"faults": f.labels(g), "problem": "light side disconnected"}))
        }
    });
    Ok(("sampled".into(), examined, violations))
}

fn structure_regime(
    g: &ArrangementGraph,
    cfg: &RunConfig,
    regime: Regime,
) -> Result<Outcome, VerifyError> {
    let p = g.params();
    if p.k < regime.min_k() {
        return Err(VerifyError::OutOfScope {
            claim: match regime {
                Regime::TwoComponentBudget => "thm-3.9",
                Regime::ThreeComponentBudget => "thm-3.12",
            },
            n: p.n,
            k: p.k,
            reason: format!("requires k >= {}", regime.min_k()),
        });
    }
    let budget = regime.budget(g);
    let max_size = cfg.max_fault.unwrap_or(budget).min(budget);
    let witnesses = standard_witnesses(g, regime == Regime::ThreeComponentBudget)?;
    let (examined, violations) = sampled_campaign(g, cfg, max_size, witnesses, |f| {
        let verdict = fault::classify(g, f, regime).unwrap();
        if verdict.violation {
            Some(json!({"faults": f.labels(g), "class": verdict.class.name()}))
        } else {
            None
        }
    });
    Ok(("sampled".into(), examined, violations))
}

fn tc_upper_witness(g: &ArrangementGraph) -> Result<Outcome, VerifyError> {
    let (f1, f2) = diagnosis::tc_witness_pair(g)?;
    let expected = diagnosis::conditional_diagnosability_bound(g)? + 1;
    let mut violations = Vec::new();
    if f1.len() != expected || f2.len() != expected {
        violations.push(json!({
            "problem": "witness size", "f1": f1.len(), "f2": f2.len(), "expected": expected,
        }));
    }
    for (name, f) in [("f1", &f1), ("f2", &f2)] {
        if !diagnosis::is_conditional(g.topology(), f) {
            violations.push(json!({"problem": "not conditional", "set": name}));
        }
    }
    let sd = diagnosis::distinguishable_sd(g.topology(), &f1, &f2)?;
    let forced = diagnosis::distinguishable_forced(g.topology(), &f1, &f2)?;
    if sd.distinguishable || forced.distinguishable {
        violations.push(json!({
            "problem": "witness pair distinguishable",
            "sd": sd.distinguishable, "forced": forced.distinguishable,
        }));
    }
    Ok(("witness".into(), 1, violations))
}

fn checker_equivalence(cfg: &RunConfig) -> Outcome {
    let graphs = if cfg.trials > 0 { cfg.trials } else { 200 };
    let pairs_per_graph = 50;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    let mut examined = 0;
    for _ in 0..graphs {
        let g = loop {
            let n = rng.gen_range(8..=14);
            let g = SimpleGraph::random_gnp(n, 0.35, &mut rng);
            if g.min_degree() >= 2 {
                break g;
            }
        };
        let n = g.vertex_count();
        for _ in 0..pairs_per_graph {
            let size = rng.gen_range(1..=n / 2);
            let f1 = fault::random_fault_set(&mut rng, n, size);
            let f2 = loop {
                let size = rng.gen_range(1..=n / 2);
                let f = fault::random_fault_set(&mut rng, n, size);
                if f != f1 {
                    break f;
                }
            };
            examined += 1;
            let sd = diagnosis::distinguishable_sd(&g, &f1, &f2).unwrap();
            let forced = diagnosis::distinguishable_forced(&g, &f1, &f2).unwrap();
            if sd.distinguishable != forced.distinguishable {
                violations.push(json!({
                    "vertices": n,
                    "edges": g.edges(),
                    "f1": f1.members(), "f2": f2.members(),
                    "sd": sd.distinguishable, "forced": forced.distinguishable,
                }));
            }
        }
    }
    ("sampled".into(), examined, violations)
}

fn tc_sampled_lower_bound(g: &ArrangementGraph, cfg: &RunConfig) -> Result<Outcome, VerifyError> {
    let t = match cfg.max_fault {
        Some(t) => t,
        None => diagnosis::conditional_diagnosability_bound(g)?,
    };
    let report = diagnosis::sample_lower_bound(g.topology(), t, cfg.trials, cfg.seed);
    let mut violations: Vec<Value> = report
        .violations
        .iter()
        .map(|(f1, f2)| json!({"f1": f1.labels(g), "f2": f2.labels(g)}))
        .collect();
    // Tightness: the closed-form witness pair one past the bound must be
    // indistinguishable.
    let bound = diagnosis::conditional_diagnosability_bound(g)?;
    if t >= bound {
        let (f1, f2) = diagnosis::tc_witness_pair(g)?;
        if diagnosis::distinguishable_sd(g.topology(), &f1, &f2)?.distinguishable {
            violations.push(json!({"problem": "upper witness distinguishable at t+1"}));
        }
    }
    Ok(("sampled".into(), report.trials + 1, violations))
}
