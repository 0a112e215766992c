//! Comparison-based fault diagnosis (MM* scheme).
//!
//! Every vertex compares each unordered pair of its neighbors and reports
//! agree (0) or disagree (1); a faulty comparator reports arbitrarily. Two
//! fault sets are distinguishable iff no syndrome is compatible with both.
//! Distinguishability is decided two independent ways: a structural scan for
//! the Sengupta-Dahbura conditions, and a symbolic forced-value conflict scan
//! over the whole comparison scheme. The module also builds the witness pairs
//! that pin the conditional diagnosability of arrangement graphs and provides
//! sampled and brute-force verification of the closed-form values.

use crate::arrangement::ArrangementGraph;
use crate::fault::{self, FaultSet};
use crate::graph::SimpleGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use thiserror::Error;

/// A labelled comparison `(u,v)_w`: comparator `w` compares its neighbors
/// `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

/// The MM* comparison scheme: one comparison per vertex and unordered pair of
/// its neighbors, ordered by comparator then pair.
pub fn comparison_scheme(g: &SimpleGraph) -> Vec<Comparison> {
    let mut scheme = Vec::new();
    for w in 0..g.vertex_count() {
        let nbrs = g.neighbors(w);
        for (i, &u) in nbrs.iter().enumerate() {
            for &v in &nbrs[i + 1..] {
                scheme.push(Comparison { u, v, w });
            }
        }
    }
    scheme
}

/// What a fault set forces a single comparison outcome to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForcedValue {
    /// Comparator and both compared vertices fault-free: outcome is 0.
    Forced0,
    /// Comparator fault-free, at least one compared vertex faulty: outcome 1.
    Forced1,
    /// Comparator faulty: outcome is arbitrary.
    Free,
}

pub fn forced_value(faults: &FaultSet, c: &Comparison) -> ForcedValue {
    if faults.contains(c.w) {
        ForcedValue::Free
    } else if faults.contains(c.u) || faults.contains(c.v) {
        ForcedValue::Forced1
    } else {
        ForcedValue::Forced0
    }
}

/// How free (faulty-comparator) outcomes are filled in during simulation.
#[derive(Clone, Debug)]
pub enum Adversary {
    AllZero,
    AllOne,
    /// Seeded coin flips, deterministic per seed.
    Random(u64),
    /// Mimics another fault set: free comparisons take the value the other
    /// set forces, or 0 where the other set leaves them free too.
    FrameOther(FaultSet),
}

/// A complete outcome map over the graph's comparison scheme, in scheme order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syndrome {
    outcomes: Vec<bool>,
}

impl Syndrome {
    pub fn outcomes(&self) -> &[bool] {
        &self.outcomes
    }
}

/// Produces a syndrome that `faults` can legitimately emit: forced
/// comparisons take their forced value, free ones are chosen by the
/// adversary.
pub fn simulate_syndrome(g: &SimpleGraph, faults: &FaultSet, adversary: &Adversary) -> Syndrome {
    let scheme = comparison_scheme(g);
    let mut rng = match adversary {
        Adversary::Random(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    let outcomes = scheme
        .iter()
        .map(|c| match forced_value(faults, c) {
            ForcedValue::Forced0 => false,
            ForcedValue::Forced1 => true,
            ForcedValue::Free => match adversary {
                Adversary::AllZero => false,
                Adversary::AllOne => true,
                Adversary::Random(_) => rng.as_mut().unwrap().gen_bool(0.5),
                Adversary::FrameOther(other) => {
                    matches!(forced_value(other, c), ForcedValue::Forced1)
                }
            },
        })
        .collect();
    Syndrome { outcomes }
}

/// True iff the syndrome can arise when exactly `faults` is the faulty set.
pub fn is_compatible(
    g: &SimpleGraph,
    faults: &FaultSet,
    syndrome: &Syndrome,
) -> Result<bool, DiagnosisError> {
    let scheme = comparison_scheme(g);
    if scheme.len() != syndrome.outcomes.len() {
        return Err(DiagnosisError::SyndromeDomainMismatch {
            expected: scheme.len(),
            got: syndrome.outcomes.len(),
        });
    }
    Ok(scheme
        .iter()
        .zip(&syndrome.outcomes)
        .all(|(c, &bit)| match forced_value(faults, c) {
            ForcedValue::Forced0 => !bit,
            ForcedValue::Forced1 => bit,
            ForcedValue::Free => true,
        }))
}

/// Which Sengupta-Dahbura condition a witness comparison certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdCondition {
    /// Comparator and one compared vertex outside both sets, the other
    /// compared vertex in the symmetric difference.
    Sd1,
    /// Both compared vertices in `F1 \ F2` (or `F2 \ F1`), comparator outside
    /// both sets.
    Sd2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishResult {
    pub distinguishable: bool,
    pub witness: Option<(Comparison, SdCondition)>,
}

impl DistinguishResult {
    fn not_distinguishable() -> Self {
        DistinguishResult {
            distinguishable: false,
            witness: None,
        }
    }

    fn with_witness(c: Comparison, cond: SdCondition) -> Self {
        DistinguishResult {
            distinguishable: true,
            witness: Some((c, cond)),
        }
    }

    pub fn to_json(&self, g: &ArrangementGraph, f1: &FaultSet, f2: &FaultSet) -> serde_json::Value {
        json!({
            "f1": f1.labels(g),
            "f2": f2.labels(g),
            "distinguishable": self.distinguishable,
            "witness": self.witness.as_ref().map(|(c, cond)| json!({
                "u": g.label(c.u),
                "v": g.label(c.v),
                "w": g.label(c.w),
                "condition": match cond { SdCondition::Sd1 => "SD-1", SdCondition::Sd2 => "SD-2" },
            })),
        })
    }
}

fn check_pair(f1: &FaultSet, f2: &FaultSet) -> Result<(), DiagnosisError> {
    if f1 == f2 {
        return Err(DiagnosisError::IdenticalSets);
    }
    Ok(())
}

/// Structural distinguishability scan per the Sengupta-Dahbura conditions.
///
/// Deterministic order: condition 1 witnesses are searched around the sorted
/// symmetric difference first, then condition 2 around each side.
pub fn distinguishable_sd(
    g: &SimpleGraph,
    f1: &FaultSet,
    f2: &FaultSet,
) -> Result<DistinguishResult, DiagnosisError> {
    check_pair(f1, f2)?;
    let outside = |v: usize| !f1.contains(v) && !f2.contains(v);
    // Condition 1: v in the symmetric difference, comparator w and second
    // compared vertex u outside both sets.
    for v in 0..g.vertex_count() {
        if f1.contains(v) == f2.contains(v) {
            continue;
        }
        for &w in g.neighbors(v) {
            if !outside(w) {
                continue;
            }
            for &u in g.neighbors(w) {
                if u != v && outside(u) {
                    return Ok(DistinguishResult::with_witness(
                        Comparison {
                            u: u.min(v),
                            v: u.max(v),
                            w,
                        },
                        SdCondition::Sd1,
                    ));
                }
            }
        }
    }
    // Condition 2: two vertices of one side-difference compared by a
    // comparator outside both sets.
    for (a, b) in [(f1, f2), (f2, f1)] {
        for &u in a.members() {
            if b.contains(u) {
                continue;
            }
            for &w in g.neighbors(u) {
                if !outside(w) {
                    continue;
                }
                for &v in g.neighbors(w) {
                    if v > u && a.contains(v) && !b.contains(v) {
                        return Ok(DistinguishResult::with_witness(
                            Comparison { u, v, w },
                            SdCondition::Sd2,
                        ));
                    }
                }
            }
        }
    }
    Ok(DistinguishResult::not_distinguishable())
}

/// Independent distinguishability oracle: scans the whole comparison scheme
/// for a comparison forced to different values by the two sets. Such a
/// conflict exists iff no syndrome is compatible with both sets.
pub fn distinguishable_forced(
    g: &SimpleGraph,
    f1: &FaultSet,
    f2: &FaultSet,
) -> Result<DistinguishResult, DiagnosisError> {
    check_pair(f1, f2)?;
    for c in comparison_scheme(g) {
        let a = forced_value(f1, &c);
        let b = forced_value(f2, &c);
        let conflict = matches!(
            (a, b),
            (ForcedValue::Forced0, ForcedValue::Forced1)
                | (ForcedValue::Forced1, ForcedValue::Forced0)
        );
        if conflict {
            let in_one_side = (f1.contains(c.u) && f1.contains(c.v) && !f2.contains(c.u) && !f2.contains(c.v))
                || (f2.contains(c.u) && f2.contains(c.v) && !f1.contains(c.u) && !f1.contains(c.v));
            let cond = if in_one_side {
                SdCondition::Sd2
            } else {
                SdCondition::Sd1
            };
            return Ok(DistinguishResult::with_witness(c, cond));
        }
    }
    Ok(DistinguishResult::not_distinguishable())
}

/// True iff `g - F` has no isolated vertex.
pub fn is_conditional(g: &SimpleGraph, faults: &FaultSet) -> bool {
    (0..g.vertex_count()).all(|v| {
        faults.contains(v) || g.neighbors(v).iter().any(|&w| !faults.contains(w))
    })
}

/// The indistinguishable conditional pair that makes the conditional
/// diagnosability bound tight.
///
/// For `n >= k+2` picks the lexicographically smallest vertices `x, y, z, u`
/// with `(x,u), (y,z)` cross edges and `(x,y)` an intra-class edge; for
/// `n = k+1` the smallest path `x-y-z`. With `A = N[{x,y,z}]`, the pair is
/// `F1 = A \ {y,z}` and `F2 = A \ {x,y}`.
pub fn tc_witness_pair(g: &ArrangementGraph) -> Result<(FaultSet, FaultSet), DiagnosisError> {
    let p = g.params();
    if p.k < 4 {
        return Err(DiagnosisError::OutOfTheoremScope { n: p.n, k: p.k });
    }
    let core = if p.n >= p.k + 2 {
        find_cross_square_path(g)
    } else {
        find_plain_path(g)
    }
    .ok_or(DiagnosisError::PatternNotFound)?;
    let (x, y, z) = core;
    let mut closed = g.vertex_set_neighborhood(&[x, y, z]);
    closed.extend_from_slice(&[x, y, z]);
    let n = g.vertex_count();
    let f1 = FaultSet::new(n, closed.iter().copied().filter(|&v| v != y && v != z)).unwrap();
    let f2 = FaultSet::new(n, closed.iter().copied().filter(|&v| v != x && v != y)).unwrap();
    Ok((f1, f2))
}

/// Smallest (x, y, z) with (x,y) intra-class, (y,z) a cross edge, and the
/// matching cross edge (x,u) into the same class as z.
fn find_cross_square_path(g: &ArrangementGraph) -> Option<(usize, usize, usize)> {
    for x in 0..g.vertex_count() {
        for &y in g.neighbors(x) {
            if g.class_of(y) != g.class_of(x) {
                continue;
            }
            for &z in g.neighbors(y) {
                if g.class_of(z) == g.class_of(y) {
                    continue;
                }
                // x must have its own cross edge into z's class.
                if g.neighbors(x)
                    .iter()
                    .any(|&u| g.class_of(u) == g.class_of(z) && g.topology().has_edge(u, z))
                {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

fn find_plain_path(g: &ArrangementGraph) -> Option<(usize, usize, usize)> {
    for x in 0..g.vertex_count() {
        for &y in g.neighbors(x) {
            for &z in g.neighbors(y) {
                if z != x && !g.topology().has_edge(x, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Closed-form conditional diagnosability, valid for `k >= 4`.
pub fn conditional_diagnosability_bound(g: &ArrangementGraph) -> Result<usize, DiagnosisError> {
    let p = g.params();
    if p.k < 4 {
        return Err(DiagnosisError::OutOfTheoremScope { n: p.n, k: p.k });
    }
    Ok(if p.n == p.k + 1 {
        3 * p.n - 7
    } else {
        (3 * p.k - 2) * (p.n - p.k) - 3
    })
}

/// Outcome of a sampled lower-bound campaign.
#[derive(Clone, Debug)]
pub struct SampleReport {
    pub seed: u64,
    pub trials: u64,
    pub t: usize,
    /// Indistinguishable pairs found (violations when `t <= t_c`).
    pub violations: Vec<(FaultSet, FaultSet)>,
    /// Draws aborted because no conditional set was found within the retry
    /// bound.
    pub failed_draws: u64,
}

impl SampleReport {
    pub fn to_json(&self, g: &ArrangementGraph) -> serde_json::Value {
        json!({
            "seed": self.seed,
            "trials": self.trials,
            "t": self.t,
            "violations": self.violations.iter()
                .map(|(f1, f2)| json!({"f1": f1.labels(g), "f2": f2.labels(g)}))
                .collect::<Vec<_>>(),
            "failed_draws": self.failed_draws,
        })
    }
}

const CONDITIONAL_DRAW_RETRIES: usize = 1000;

fn draw_conditional_set(
    g: &SimpleGraph,
    t: usize,
    rng: &mut impl Rng,
) -> Option<FaultSet> {
    for _ in 0..CONDITIONAL_DRAW_RETRIES {
        let size = rng.gen_range(1..=t);
        let f = fault::random_fault_set(rng, g.vertex_count(), size);
        if is_conditional(g, &f) {
            return Some(f);
        }
    }
    None
}

/// Draws `trials` seeded random pairs of distinct conditional fault sets of
/// sizes at most `t` and records every indistinguishable pair. Trials are
/// partitioned over worker threads by index range with per-range seeds;
/// `ARRLAB_THREADS` caps the worker count.
pub fn sample_lower_bound(g: &SimpleGraph, t: usize, trials: u64, seed: u64) -> SampleReport {
    assert!(t >= 1);
    let chunks: Vec<u64> = chunk_sizes(trials, 64);
    let run_chunk = |(idx, &len): (usize, &u64)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(idx as u64));
        let mut violations = Vec::new();
        let mut failed = 0u64;
        for _ in 0..len {
            let Some(f1) = draw_conditional_set(g, t, &mut rng) else {
                failed += 1;
                continue;
            };
            let mut f2 = None;
            for _ in 0..CONDITIONAL_DRAW_RETRIES {
                match draw_conditional_set(g, t, &mut rng) {
                    Some(c) if c != f1 => {
                        f2 = Some(c);
                        break;
                    }
                    Some(_) => continue,
                    None => break,
                }
            }
            let Some(f2) = f2 else {
                failed += 1;
                continue;
            };
            let verdict = distinguishable_sd(g, &f1, &f2).unwrap();
            if !verdict.distinguishable {
                violations.push((f1, f2));
            }
        }
        (violations, failed)
    };
    let results: Vec<(Vec<(FaultSet, FaultSet)>, u64)> = crate::with_thread_pool(|| {
        use rayon::prelude::*;
        chunks.par_iter().enumerate().map(run_chunk).collect()
    });
    let mut violations = Vec::new();
    let mut failed_draws = 0;
    for (v, f) in results {
        violations.extend(v);
        failed_draws += f;
    }
    SampleReport {
        seed,
        trials,
        t,
        violations,
        failed_draws,
    }
}

pub(crate) fn chunk_sizes(total: u64, chunks: u64) -> Vec<u64> {
    let chunks = chunks.min(total.max(1));
    (0..chunks)
        .map(|i| total / chunks + u64::from(i < total % chunks))
        .collect()
}

/// Brute-force conditional diagnosability certificate.
#[derive(Clone, Debug)]
pub struct TcCertificate {
    /// Largest `t` at which every pair of distinct conditional fault sets of
    /// sizes `<= t` is distinguishable.
    pub value: usize,
    /// An indistinguishable pair at sizes `<= value + 1`, when one exists
    /// below the search cap.
    pub indistinguishable: Option<(FaultSet, FaultSet)>,
    pub pairs_checked: u64,
}

/// Exact `t_c` by exhaustive pair checking, growing `t` until an
/// indistinguishable pair appears. Every verdict is cross-checked between the
/// structural and the forced-value checkers.
pub fn tc_exhaustive(
    g: &SimpleGraph,
    t_max: usize,
    budget: u64,
) -> Result<TcCertificate, DiagnosisError> {
    let n = g.vertex_count();
    let mut by_size: Vec<Vec<FaultSet>> = Vec::new();
    let mut pairs_checked = 0u64;
    for t in 1..=t_max.min(n - 1) {
        let mut fresh = Vec::new();
        let mut indices: Vec<usize> = (0..t).collect();
        loop {
            let f = FaultSet::new(n, indices.iter().copied()).unwrap();
            if is_conditional(g, &f) {
                fresh.push(f);
            }
            if !fault::next_combination(&mut indices, n) {
                break;
            }
        }
        // Pairs involving at least one fresh set; smaller pairs were checked
        // in earlier rounds.
        let older: Vec<&FaultSet> = by_size.iter().flatten().collect();
        for (i, f1) in fresh.iter().enumerate() {
            for f2 in older.iter().copied().chain(fresh[..i].iter()) {
                pairs_checked += 1;
                if pairs_checked > budget {
                    return Err(DiagnosisError::BudgetExceeded { verified_t: t - 1 });
                }
                let sd = distinguishable_sd(g, f1, f2).unwrap();
                let forced = distinguishable_forced(g, f1, f2).unwrap();
                assert_eq!(
                    sd.distinguishable, forced.distinguishable,
                    "checker disagreement on {:?} vs {:?}",
                    f1.members(),
                    f2.members()
                );
                if !sd.distinguishable {
                    return Ok(TcCertificate {
                        value: t - 1,
                        indistinguishable: Some((f1.clone(), f2.clone())),
                        pairs_checked,
                    });
                }
            }
        }
        by_size.push(fresh);
    }
    Ok(TcCertificate {
        value: t_max.min(n - 1),
        indistinguishable: None,
        pairs_checked,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagnosisError {
    #[error("fault sets are identical")]
    IdenticalSets,
    #[error("syndrome covers {got} comparisons, scheme has {expected}")]
    SyndromeDomainMismatch { expected: usize, got: usize },
    #[error("theorem requires k >= 4, got n={n}, k={k}")]
    OutOfTheoremScope { n: usize, k: usize },
    #[error("required vertex pattern not present")]
    PatternNotFound,
    #[error("pair budget exhausted; fully verified up to t={verified_t}")]
    BudgetExceeded { verified_t: usize },
}
