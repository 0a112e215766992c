//! Vertex-fault injection and survivor-structure analysis.
//!
//! Provides fault sets over dense vertex ids, survivor-component reports with
//! a structure classification, the per-class fault distribution with its
//! heavy/light split, exhaustive separating-set enumeration and the witness
//! constructions that make the structure theorems tight.

use crate::arrangement::ArrangementGraph;
use crate::graph::SimpleGraph;
use serde_json::json;
use thiserror::Error;

/// A set of faulty vertices of one particular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultSet {
    mask: Vec<bool>,
    members: Vec<usize>,
}

impl FaultSet {
    pub fn new(
        vertex_count: usize,
        vertices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, FaultError> {
        let mut mask = vec![false; vertex_count];
        for v in vertices {
            if v >= vertex_count {
                return Err(FaultError::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                });
            }
            mask[v] = true;
        }
        let members = (0..vertex_count).filter(|&v| mask[v]).collect();
        Ok(FaultSet { mask, members })
    }

    pub fn empty(vertex_count: usize) -> Self {
        FaultSet {
            mask: vec![false; vertex_count],
            members: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask[v]
    }

    /// Member vertices, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn vertex_count(&self) -> usize {
        self.mask.len()
    }

    pub fn labels(&self, g: &ArrangementGraph) -> Vec<String> {
        self.members.iter().map(|&v| g.label(v)).collect()
    }

    pub fn union(&self, other: &FaultSet) -> FaultSet {
        assert_eq!(self.mask.len(), other.mask.len());
        FaultSet::new(
            self.mask.len(),
            self.members.iter().chain(other.members.iter()).copied(),
        )
        .unwrap()
    }
}

/// Shape of the survivor graph after fault removal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureClass {
    Connected,
    /// Exactly two components, the smaller a single vertex.
    TwoComponentsSingleton,
    /// Exactly two components, the smaller two adjacent vertices.
    TwoComponentsEdge,
    /// Exactly three components, two of them single vertices.
    ThreeComponentsTwoSingletons,
    Other(String),
}

impl StructureClass {
    pub fn name(&self) -> String {
        match self {
            StructureClass::Connected => "connected".into(),
            StructureClass::TwoComponentsSingleton => "two-components-singleton".into(),
            StructureClass::TwoComponentsEdge => "two-components-edge".into(),
            StructureClass::ThreeComponentsTwoSingletons => {
                "three-components-two-singletons".into()
            }
            StructureClass::Other(d) => format!("other: {d}"),
        }
    }

    pub fn is_connected(&self) -> bool {
        matches!(self, StructureClass::Connected)
    }
}

/// Survivor components, largest first (ties broken by smallest member id).
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub components: Vec<Vec<usize>>,
    pub class: StructureClass,
}

impl ComponentReport {
    pub fn largest_size(&self) -> usize {
        self.components.first().map_or(0, |c| c.len())
    }

    pub fn to_json(&self, g: &ArrangementGraph, faults: &FaultSet) -> serde_json::Value {
        json!({
            "faults": faults.labels(g),
            "components": self.components.iter()
                .map(|c| c.iter().map(|&v| g.label(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "class": self.class.name(),
        })
    }
}

/// Exact connected components of `g - F`.
pub fn components(g: &SimpleGraph, faults: &FaultSet) -> Result<ComponentReport, FaultError> {
    check_same_graph(g, faults)?;
    let mut comps = g.components_without(faults.mask());
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let class = classify_components(g, &comps);
    Ok(ComponentReport {
        components: comps,
        class,
    })
}

fn classify_components(g: &SimpleGraph, comps: &[Vec<usize>]) -> StructureClass {
    match comps.len() {
        0 => StructureClass::Other("empty survivor graph".into()),
        1 => StructureClass::Connected,
        2 => {
            let small = &comps[1];
            match small.len() {
                1 => StructureClass::TwoComponentsSingleton,
                2 if g.has_edge(small[0], small[1]) => StructureClass::TwoComponentsEdge,
                len => StructureClass::Other(format!("two components, smaller has {len} vertices")),
            }
        }
        3 if comps[1].len() == 1 && comps[2].len() == 1 => {
            StructureClass::ThreeComponentsTwoSingletons
        }
        len => {
            let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
            StructureClass::Other(format!("{len} components of sizes {sizes:?}"))
        }
    }
}

/// True iff `g - F` has at least two components. `F` must not cover `V`.
pub fn is_separating(g: &SimpleGraph, faults: &FaultSet) -> Result<bool, FaultError> {
    check_same_graph(g, faults)?;
    if faults.len() == g.vertex_count() {
        return Err(FaultError::CoversAllVertices);
    }
    Ok(!g.is_connected_without(faults.mask()))
}

/// Per-class fault distribution over the last-position decomposition,
/// with the heavy/light split at threshold `(k-1)(n-k)`.
#[derive(Clone, Debug)]
pub struct FaultProfile {
    /// `per_class[i]` is the number of faults in the class of symbol `i+1`.
    pub per_class: Vec<usize>,
    /// Classes (1-based symbols) with at least `threshold` faults.
    pub heavy: Vec<usize>,
    /// The remaining classes.
    pub light: Vec<usize>,
    pub threshold: usize,
}

pub fn fault_profile(g: &ArrangementGraph, faults: &FaultSet) -> FaultProfile {
    let p = g.params();
    let threshold = (p.k - 1) * (p.n - p.k);
    let mut per_class = vec![0usize; p.n];
    for &v in faults.members() {
        per_class[g.class_of(v) - 1] += 1;
    }
    let (heavy, light) = (1..=p.n).partition(|&i| per_class[i - 1] >= threshold);
    FaultProfile {
        per_class,
        heavy,
        light,
        threshold,
    }
}

/// Result of the light-side connectivity check.
#[derive(Clone, Copy, Debug)]
pub struct LightSideCheck {
    /// Whether the union of light classes minus their faults is connected
    /// (vacuously true when empty).
    pub connected: bool,
    /// Whether `|F|` is within the `(3k-2)(n-k)-3` budget with `k >= 3`.
    pub within_budget: bool,
}

/// Connectivity of the light side `A^J - F_J` of the decomposition.
pub fn check_light_side_connected(g: &ArrangementGraph, faults: &FaultSet) -> LightSideCheck {
    let p = g.params();
    let within_budget = p.k >= 3 && faults.len() <= (3 * p.k - 2) * (p.n - p.k) - 3;
    let profile = fault_profile(g, faults);
    let light: Vec<bool> = (1..=p.n).map(|i| profile.light.contains(&i)).collect();
    // Remove everything outside the light classes plus the faults inside them.
    let removed: Vec<bool> = (0..g.vertex_count())
        .map(|v| !light[g.class_of(v) - 1] || faults.contains(v))
        .collect();
    LightSideCheck {
        connected: g.topology().is_connected_without(&removed),
        within_budget,
    }
}

/// Fault-budget regime of a survivor-structure theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `|F| <= (2k-1)(n-k)-1`, `k >= 3`: two components, smaller a vertex or
    /// an edge.
    TwoComponentBudget,
    /// `|F| <= (3k-2)(n-k)-4` (`n >= k+2`) or `|F| <= 3n-8` (`n = k+1`),
    /// `k >= 4`: additionally allows three components with two singletons.
    ThreeComponentBudget,
}

impl Regime {
    pub fn budget(&self, g: &ArrangementGraph) -> usize {
        let p = g.params();
        match self {
            Regime::TwoComponentBudget => (2 * p.k - 1) * (p.n - p.k) - 1,
            Regime::ThreeComponentBudget => {
                if p.n == p.k + 1 {
                    3 * p.n - 8
                } else {
                    (3 * p.k - 2) * (p.n - p.k) - 4
                }
            }
        }
    }

    pub fn min_k(&self) -> usize {
        match self {
            Regime::TwoComponentBudget => 3,
            Regime::ThreeComponentBudget => 4,
        }
    }

    pub fn allows(&self, class: &StructureClass) -> bool {
        match class {
            StructureClass::Connected
            | StructureClass::TwoComponentsSingleton
            | StructureClass::TwoComponentsEdge => true,
            StructureClass::ThreeComponentsTwoSingletons => {
                *self == Regime::ThreeComponentBudget
            }
            StructureClass::Other(_) => false,
        }
    }
}

/// Outcome of classifying a fault set against a regime.
#[derive(Clone, Debug)]
pub struct RegimeVerdict {
    pub class: StructureClass,
    /// Disconnected outcome outside the regime's allowed set.
    pub violation: bool,
    /// False when `k` is below the regime's theorem scope; the classification
    /// is still reported.
    pub in_scope: bool,
}

/// Recomputes survivor components from scratch and labels the outcome
/// against the given regime. Errors when `|F|` exceeds the regime budget.
pub fn classify(
    g: &ArrangementGraph,
    faults: &FaultSet,
    regime: Regime,
) -> Result<RegimeVerdict, FaultError> {
    let budget = regime.budget(g);
    if faults.len() > budget {
        return Err(FaultError::BudgetExceeded {
            size: faults.len(),
            budget,
        });
    }
    let report = components(g.topology(), faults)?;
    let in_scope = g.params().k >= regime.min_k();
    let violation = in_scope && !regime.allows(&report.class);
    Ok(RegimeVerdict {
        class: report.class,
        violation,
        in_scope,
    })
}

/// Result of an exhaustive (or budget-limited) separating-set scan.
#[derive(Clone, Debug)]
pub struct SeparatingSetScan {
    pub sets: Vec<FaultSet>,
    /// Candidate subsets actually examined.
    pub examined: u64,
    /// True iff every size-`size` subset was examined.
    pub exhaustive: bool,
}

/// Scans size-`size` vertex subsets in lexicographic order, up to `budget`
/// candidates, and collects the separating ones.
pub fn enumerate_separating_sets(
    g: &SimpleGraph,
    size: usize,
    budget: u64,
) -> Result<SeparatingSetScan, FaultError> {
    let n = g.vertex_count();
    if size < 1 || size >= n {
        return Err(FaultError::BadScanSize { size, count: n });
    }
    let fast = BitGraph::new(g);
    let mut sets = Vec::new();
    let mut examined: u64 = 0;
    let mut exhausted_budget = false;
    let mut indices: Vec<usize> = (0..size).collect();
    let mut removed = vec![false; n];
    loop {
        if examined >= budget {
            exhausted_budget = true;
            break;
        }
        examined += 1;
        let separating = match &fast {
            Some(bg) => !bg.connected_without(&indices),
            None => {
                for &v in &indices {
                    removed[v] = true;
                }
                let sep = !g.is_connected_without(&removed);
                for &v in &indices {
                    removed[v] = false;
                }
                sep
            }
        };
        if separating {
            sets.push(FaultSet::new(n, indices.iter().copied()).unwrap());
        }
        if !next_combination(&mut indices, n) {
            break;
        }
    }
    Ok(SeparatingSetScan {
        sets,
        examined,
        exhaustive: !exhausted_budget,
    })
}

/// Advances `indices` to the next lexicographic size-|indices| combination of
/// `0..n`. Returns false when exhausted.
pub(crate) fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - (k - i) {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Bitmask adjacency for graphs with at most 128 vertices; lets the
/// separating-set sweep test connectivity with word operations.
struct BitGraph {
    adj: Vec<u128>,
    full: u128,
}

impl BitGraph {
    fn new(g: &SimpleGraph) -> Option<Self> {
        let n = g.vertex_count();
        if n > 128 {
            return None;
        }
        let mut adj = vec![0u128; n];
        for (v, mask) in adj.iter_mut().enumerate() {
            for &w in g.neighbors(v) {
                *mask |= 1 << w;
            }
        }
        let full = if n == 128 { !0 } else { (1u128 << n) - 1 };
        Some(BitGraph { adj, full })
    }

    fn connected_without(&self, removed: &[usize]) -> bool {
        let mut alive = self.full;
        for &v in removed {
            alive &= !(1u128 << v);
        }
        if alive == 0 {
            return true;
        }
        let seed = 1u128 << alive.trailing_zeros();
        let mut reached = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0u128;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & alive & !reached;
            reached |= frontier;
        }
        reached == alive
    }
}

/// Fault patterns whose open neighborhood yields a structured separating set.
#[derive(Clone, Copy, Debug)]
pub enum FaultPattern {
    /// `F = N(x)`; isolates `x`.
    Vertex(usize),
    /// `F = N({x,y})` for an edge; isolates the edge.
    Edge(usize, usize),
    /// `F = N({x,y,z})` for a path with `(x,y)` inside a last-position class
    /// and `(y,z)` a cross edge; the survivors stay connected through the
    /// path itself.
    Path(usize, usize, usize),
    /// `F = N({x,y})` for non-adjacent `x,y` at distance two; isolates both.
    TwinNonAdjacent(usize, usize),
}

/// A structured fault set plus the pattern vertices it is built around.
#[derive(Clone, Debug)]
pub struct Witness {
    pub faults: FaultSet,
    pub survivors: Vec<usize>,
}

pub fn witness_fault_set(
    g: &ArrangementGraph,
    pattern: FaultPattern,
) -> Result<Witness, FaultError> {
    let n = g.vertex_count();
    let check = |v: usize| -> Result<(), FaultError> {
        if v >= n {
            Err(FaultError::VertexOutOfRange { vertex: v, count: n })
        } else {
            Ok(())
        }
    };
    let core: Vec<usize> = match pattern {
        FaultPattern::Vertex(x) => {
            check(x)?;
            vec![x]
        }
        FaultPattern::Edge(x, y) => {
            check(x)?;
            check(y)?;
            if !g.topology().has_edge(x, y) {
                return Err(FaultError::PatternNotRealizable(format!(
                    "({x}, {y}) is not an edge"
                )));
            }
            vec![x, y]
        }
        FaultPattern::Path(x, y, z) => {
            for v in [x, y, z] {
                check(v)?;
            }
            if !g.topology().has_edge(x, y) || g.class_of(x) != g.class_of(y) {
                return Err(FaultError::PatternNotRealizable(
                    "(x, y) must be an edge inside one last-position class".into(),
                ));
            }
            if !g.topology().has_edge(y, z) || g.class_of(y) == g.class_of(z) {
                return Err(FaultError::PatternNotRealizable(
                    "(y, z) must be a cross edge".into(),
                ));
            }
            vec![x, y, z]
        }
        FaultPattern::TwinNonAdjacent(x, y) => {
            check(x)?;
            check(y)?;
            if x == y
                || g.topology().has_edge(x, y)
                || g.common_neighbors(x, y).map_err(|_| {
                    FaultError::PatternNotRealizable("vertices must be distinct".into())
                })? == 0
            {
                return Err(FaultError::PatternNotRealizable(
                    "vertices must be non-adjacent at distance two".into(),
                ));
            }
            vec![x, y]
        }
    };
    let faults = FaultSet::new(n, g.vertex_set_neighborhood(&core)).unwrap();
    Ok(Witness {
        faults,
        survivors: core,
    })
}

/// Lexicographically smallest `(x, y, z)` realizing the path pattern.
///
/// When `n >= k+2` the endpoints are additionally required to share two
/// common neighbors (the generic distance-two type), which pins the fault-set
/// size at `(3k-2)(n-k)-3`.
pub fn canonical_path_pattern(g: &ArrangementGraph) -> Option<(usize, usize, usize)> {
    let generic = g.params().n >= g.params().k + 2;
    let mut fallback = None;
    for x in 0..g.vertex_count() {
        for &y in g.neighbors(x) {
            if g.class_of(y) != g.class_of(x) {
                continue;
            }
            for &z in g.neighbors(y) {
                if g.class_of(z) == g.class_of(y) {
                    continue;
                }
                if !generic || g.common_neighbors(x, z).unwrap() == 2 {
                    return Some((x, y, z));
                }
                fallback.get_or_insert((x, y, z));
            }
        }
    }
    fallback
}

/// Lexicographically smallest non-adjacent pair at distance two, preferring
/// the generic type with two common neighbors when `n >= k+2` (so the twin
/// fault set has size `2k(n-k)-2`).
pub fn canonical_distance_two_pair(g: &ArrangementGraph) -> Option<(usize, usize)> {
    let generic = g.params().n >= g.params().k + 2;
    let mut fallback = None;
    for x in 0..g.vertex_count() {
        for y in x + 1..g.vertex_count() {
            if g.topology().has_edge(x, y) {
                continue;
            }
            let common = g.common_neighbors(x, y).unwrap();
            if common == 0 {
                continue;
            }
            if !generic || common == 2 {
                return Some((x, y));
            }
            fallback.get_or_insert((x, y));
        }
    }
    fallback
}

/// Uniform random vertex subset of the given size (partial Fisher-Yates).
pub fn random_fault_set(
    rng: &mut impl rand::Rng,
    vertex_count: usize,
    size: usize,
) -> FaultSet {
    assert!(size <= vertex_count);
    let mut pool: Vec<usize> = (0..vertex_count).collect();
    for i in 0..size {
        let j = rng.gen_range(i..vertex_count);
        pool.swap(i, j);
    }
    FaultSet::new(vertex_count, pool[..size].iter().copied()).unwrap()
}

fn check_same_graph(g: &SimpleGraph, faults: &FaultSet) -> Result<(), FaultError> {
    if faults.vertex_count() != g.vertex_count() {
        return Err(FaultError::GraphMismatch {
            set: faults.vertex_count(),
            graph: g.vertex_count(),
        });
    }
    Ok(())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FaultError {
    #[error("fault vertex {vertex} out of range 0..{count}")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("fault set over {set} vertices used with a graph of {graph}")]
    GraphMismatch { set: usize, graph: usize },
    #[error("fault set covers all vertices")]
    CoversAllVertices,
    #[error("fault set of size {size} exceeds regime budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("scan size {size} must be in 1..{count}")]
    BadScanSize { size: usize, count: usize },
    #[error("pattern not realizable: {0}")]
    PatternNotRealizable(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::GraphParams;

    fn build(n: usize, k: usize) -> ArrangementGraph {
        ArrangementGraph::build(GraphParams::new(n, k).unwrap()).unwrap()
    }

    fn labels_to_set(g: &ArrangementGraph, labels: &[&str]) -> FaultSet {
        FaultSet::new(
            g.vertex_count(),
            labels.iter().map(|l| g.vertex_of_label(l).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn empty_faults_leave_graph_connected() {
        let g = build(4, 2);
        let report = components(g.topology(), &FaultSet::empty(12)).unwrap();
        assert_eq!(report.class, StructureClass::Connected);
        assert_eq!(report.largest_size(), 12);
        assert!(!is_separating(g.topology(), &FaultSet::empty(12)).unwrap());
    }

    #[test]
    fn neighborhood_isolates_a_vertex() {
        let g = build(5, 3);
        let x = 0;
        let f = FaultSet::new(60, g.neighbors(x).iter().copied()).unwrap();
        let report = components(g.topology(), &f).unwrap();
        assert_eq!(report.class, StructureClass::TwoComponentsSingleton);
        assert_eq!(report.components[1], vec![x]);
        assert!(is_separating(g.topology(), &f).unwrap());
    }

    #[test]
    fn a42_minimum_cut_into_two_four_cycles() {
        let g = build(4, 2);
        let f = labels_to_set(&g, &["1 3", "2 4", "3 1", "4 2"]);
        let report = components(g.topology(), &f).unwrap();
        assert_eq!(report.components.len(), 2);
        for comp in &report.components {
            assert_eq!(comp.len(), 4);
            // 4-cycle: every survivor keeps exactly two surviving neighbors.
            for &v in comp {
                let deg = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| comp.contains(&w))
                    .count();
                assert_eq!(deg, 2);
            }
        }
        assert!(matches!(report.class, StructureClass::Other(_)));
    }

    #[test]
    fn small_fault_sets_never_separate() {
        let g = build(4, 2);
        // kappa = 4; every size-3 subset keeps the graph connected.
        let scan = enumerate_separating_sets(g.topology(), 3, u64::MAX).unwrap();
        assert!(scan.exhaustive);
        assert_eq!(scan.examined, 220);
        assert!(scan.sets.is_empty());
    }

    #[test]
    fn covering_fault_set_is_rejected() {
        let g = build(4, 2);
        let f = FaultSet::new(12, 0..12).unwrap();
        assert_eq!(
            is_separating(g.topology(), &f),
            Err(FaultError::CoversAllVertices)
        );
    }

    #[test]
    fn profile_counts_and_heavy_split() {
        let g = build(5, 3);
        assert_eq!(fault_profile(&g, &FaultSet::empty(60)).heavy, Vec::<usize>::new());

        let x = 0;
        let f = FaultSet::new(60, g.neighbors(x).iter().copied()).unwrap();
        let profile = fault_profile(&g, &f);
        assert_eq!(profile.per_class.iter().sum::<usize>(), f.len());
        assert_eq!(profile.threshold, 4);
        // The inner neighbors fill x's own class to exactly the threshold.
        assert_eq!(profile.per_class[g.class_of(x) - 1], 4);
        assert_eq!(profile.heavy, vec![g.class_of(x)]);
    }

    #[test]
    fn light_side_connected_for_empty_and_small_sets() {
        let g = build(5, 3);
        let check = check_light_side_connected(&g, &FaultSet::empty(60));
        assert!(check.connected && check.within_budget);

        let f = FaultSet::new(60, g.neighbors(0).iter().copied()).unwrap();
        assert!(check_light_side_connected(&g, &f).connected);
    }

    #[test]
    fn classify_vertex_and_edge_witnesses() {
        let g = build(5, 3);
        let wv = witness_fault_set(&g, FaultPattern::Vertex(0)).unwrap();
        assert_eq!(wv.faults.len(), 6);
        let verdict = classify(&g, &wv.faults, Regime::TwoComponentBudget).unwrap();
        assert_eq!(verdict.class, StructureClass::TwoComponentsSingleton);
        assert!(!verdict.violation && verdict.in_scope);

        let (u, v) = g.topology().edges()[0];
        let we = witness_fault_set(&g, FaultPattern::Edge(u, v)).unwrap();
        assert_eq!(we.faults.len(), 9);
        let verdict = classify(&g, &we.faults, Regime::TwoComponentBudget).unwrap();
        assert_eq!(verdict.class, StructureClass::TwoComponentsEdge);
        assert!(!verdict.violation);
    }

    #[test]
    fn classify_twin_witness_in_three_component_regime() {
        let g = build(6, 4);
        let (x, y) = canonical_distance_two_pair(&g).unwrap();
        let w = witness_fault_set(&g, FaultPattern::TwinNonAdjacent(x, y)).unwrap();
        assert_eq!(w.faults.len(), 2 * 4 * 2 - 2);
        let verdict = classify(&g, &w.faults, Regime::ThreeComponentBudget).unwrap();
        assert_eq!(verdict.class, StructureClass::ThreeComponentsTwoSingletons);
        assert!(!verdict.violation && verdict.in_scope);
    }

    #[test]
    fn classify_rejects_oversized_sets() {
        let g = build(5, 3);
        let f = FaultSet::new(60, 0..12).unwrap();
        assert!(matches!(
            classify(&g, &f, Regime::TwoComponentBudget),
            Err(FaultError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn classify_k3_outside_three_component_scope() {
        let g = build(5, 3);
        let f = FaultSet::new(60, g.neighbors(0).iter().copied()).unwrap();
        let verdict = classify(&g, &f, Regime::ThreeComponentBudget).unwrap();
        assert!(!verdict.in_scope);
        assert!(!verdict.violation);
    }

    #[test]
    fn path_witness_size_and_survivors() {
        let g = build(6, 4);
        let (x, y, z) = canonical_path_pattern(&g).unwrap();
        let w = witness_fault_set(&g, FaultPattern::Path(x, y, z)).unwrap();
        // (3k-2)(n-k)-3 at (6,4): one past the three-component budget, and it
        // cuts off a path component of three vertices -- the outcome the
        // budget rules out.
        assert_eq!(w.faults.len(), 17);
        let report = components(g.topology(), &w.faults).unwrap();
        assert!(matches!(report.class, StructureClass::Other(_)));
        let mut path = vec![x, y, z];
        path.sort_unstable();
        assert_eq!(report.components[1], path);
    }

    #[test]
    fn unrealizable_patterns_are_rejected() {
        let g = build(4, 2);
        assert!(witness_fault_set(&g, FaultPattern::Edge(0, 0)).is_err());
        assert!(witness_fault_set(&g, FaultPattern::Vertex(99)).is_err());
        let (u, v) = g.topology().edges()[0];
        assert!(witness_fault_set(&g, FaultPattern::TwinNonAdjacent(u, v)).is_err());
    }

    #[test]
    fn scan_budget_is_respected() {
        let g = build(4, 2);
        let scan = enumerate_separating_sets(g.topology(), 4, 100).unwrap();
        assert!(!scan.exhaustive);
        assert_eq!(scan.examined, 100);
    }

    #[test]
    fn component_report_serializes_with_labels() {
        let g = build(4, 2);
        let f = labels_to_set(&g, &["1 2"]);
        let report = components(g.topology(), &f).unwrap();
        let value = report.to_json(&g, &f);
        assert_eq!(value["faults"], json!(["1 2"]));
        assert_eq!(value["class"], "connected");
    }
}
