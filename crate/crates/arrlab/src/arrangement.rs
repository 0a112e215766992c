//! The (n,k)-arrangement graph and its special-case families.
//!
//! Vertices are ordered k-tuples of distinct symbols from `{1..n}`; two
//! vertices are adjacent iff they differ in exactly one position. The module
//! provides the lexicographic vertex codec, materialized adjacency, the
//! last-position decomposition into classes, cross-edge matchings and the
//! common-neighbor counting identities used by the fault-analysis layer.

use crate::graph::SimpleGraph;
use thiserror::Error;

/// Family parameters: `n` symbols, arrangements of length `k`, `n > k >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphParams {
    pub n: usize,
    pub k: usize,
}

impl GraphParams {
    pub fn new(n: usize, k: usize) -> Result<Self, ArrangementError> {
        if k < 1 || n <= k {
            return Err(ArrangementError::InvalidParams { n, k });
        }
        Ok(GraphParams { n, k })
    }

    /// `n! / (n-k)!`
    pub fn vertex_count(&self) -> usize {
        falling_factorial(self.n, self.k)
    }

    /// Vertex degree `k(n-k)`.
    pub fn degree(&self) -> usize {
        self.k * (self.n - self.k)
    }
}

/// Product `a * (a-1) * ... * (a-b+1)`.
pub fn falling_factorial(a: usize, b: usize) -> usize {
    (0..b).fold(1usize, |acc, i| acc * (a - i))
}

/// An ordered tuple of `k` distinct symbols from `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrangement(Vec<u8>);

impl Arrangement {
    pub fn new(symbols: Vec<u8>, params: GraphParams) -> Result<Self, ArrangementError> {
        if symbols.len() != params.k {
            return Err(ArrangementError::Malformed(format!(
                "expected {} symbols, got {}",
                params.k,
                symbols.len()
            )));
        }
        let mut seen = vec![false; params.n + 1];
        for &s in &symbols {
            if s == 0 || s as usize > params.n {
                return Err(ArrangementError::Malformed(format!(
                    "symbol {s} out of range 1..={}",
                    params.n
                )));
            }
            if seen[s as usize] {
                return Err(ArrangementError::Malformed(format!("duplicate symbol {s}")));
            }
            seen[s as usize] = true;
        }
        Ok(Arrangement(symbols))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    /// Space-separated 1-based label, e.g. `"1 2 4"`.
    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(text: &str, params: GraphParams) -> Result<Self, ArrangementError> {
        let symbols = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u8>()
                    .map_err(|_| ArrangementError::Malformed(format!("bad symbol {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Arrangement::new(symbols, params)
    }

    /// Lexicographic rank among all arrangements of the family.
    pub fn rank(&self, params: GraphParams) -> usize {
        let mut used = vec![false; params.n + 1];
        let mut rank = 0;
        for (i, &s) in self.0.iter().enumerate() {
            let smaller_free = (1..s).filter(|&t| !used[t as usize]).count();
            rank += smaller_free * falling_factorial(params.n - 1 - i, params.k - 1 - i);
            used[s as usize] = true;
        }
        rank
    }

    /// Inverse of [`Arrangement::rank`].
    pub fn unrank(mut index: usize, params: GraphParams) -> Result<Self, ArrangementError> {
        let count = params.vertex_count();
        if index >= count {
            return Err(ArrangementError::IndexOutOfRange { index, count });
        }
        let mut free: Vec<u8> = (1..=params.n as u8).collect();
        let mut symbols = Vec::with_capacity(params.k);
        for i in 0..params.k {
            let block = falling_factorial(params.n - 1 - i, params.k - 1 - i);
            let pos = index / block;
            index %= block;
            symbols.push(free.remove(pos));
        }
        Ok(Arrangement(symbols))
    }
}

/// Which named family a graph instance belongs to, recognized from its
/// parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    General,
    /// `A(n,1)`, isomorphic to `K_n`.
    Complete,
    /// `A(n,n-1)`, isomorphic to the star graph `S_n`.
    Star,
    /// `A(n,n-2)`, isomorphic to the alternating group graph `AG_n`.
    AlternatingGroup,
}

/// One class `V^{j:i}` of the position-`j` decomposition.
#[derive(Clone, Debug)]
pub struct SubgraphClass {
    /// 1-based position that is fixed.
    pub position: usize,
    /// The fixed symbol, 1-based.
    pub symbol: usize,
    /// Member vertices, ascending.
    pub vertices: Vec<usize>,
}

/// `A(n,k)` with materialized adjacency and dense 0-based vertex ids in
/// lexicographic order of arrangements.
#[derive(Clone, Debug)]
pub struct ArrangementGraph {
    params: GraphParams,
    family: FamilyTag,
    topology: SimpleGraph,
    /// Last symbol of every vertex (its class in the last-position
    /// decomposition), cached for the fault-analysis hot paths.
    last_symbol: Vec<u8>,
}

// Vertex counts beyond this are out of scope for exhaustive desk analysis.
const MAX_VERTICES: usize = 2_000_000;

impl ArrangementGraph {
    pub fn build(params: GraphParams) -> Result<Self, ArrangementError> {
        let tag = if params.k == 1 {
            FamilyTag::Complete
        } else if params.k == params.n - 1 {
            FamilyTag::Star
        } else if params.k == params.n - 2 {
            FamilyTag::AlternatingGroup
        } else {
            FamilyTag::General
        };
        Self::build_tagged(params, tag)
    }

    fn build_tagged(params: GraphParams, family: FamilyTag) -> Result<Self, ArrangementError> {
        let count = params.vertex_count();
        if count > MAX_VERTICES {
            return Err(ArrangementError::TooLarge { count });
        }
        let mut adj = vec![Vec::with_capacity(params.degree()); count];
        let mut last_symbol = vec![0u8; count];
        let mut buf = Vec::with_capacity(params.k);
        for v in 0..count {
            let arr = Arrangement::unrank(v, params)?;
            last_symbol[v] = *arr.symbols().last().unwrap();
            let mut used = vec![false; params.n + 1];
            for &s in arr.symbols() {
                used[s as usize] = true;
            }
            for pos in 0..params.k {
                for s in 1..=params.n as u8 {
                    if used[s as usize] {
                        continue;
                    }
                    buf.clear();
                    buf.extend_from_slice(arr.symbols());
                    buf[pos] = s;
                    adj[v].push(Arrangement(buf.clone()).rank(params));
                }
            }
            adj[v].sort_unstable();
        }
        Ok(ArrangementGraph {
            params,
            family,
            topology: SimpleGraph::from_sorted_adjacency(adj),
            last_symbol,
        })
    }

    /// Named-family constructor: complete `K_n`, star `S_n` or alternating
    /// group graph `AG_n`, all built as arrangement graphs.
    pub fn family(tag: FamilyTag, n: usize) -> Result<Self, ArrangementError> {
        let k = match tag {
            FamilyTag::Complete if n >= 2 => 1,
            FamilyTag::Star if n >= 2 => n - 1,
            FamilyTag::AlternatingGroup if n >= 3 => n - 2,
            FamilyTag::General => return Err(ArrangementError::InvalidParams { n, k: 0 }),
            _ => return Err(ArrangementError::InvalidParams { n, k: 0 }),
        };
        Self::build_tagged(GraphParams::new(n, k)?, tag)
    }

    pub fn params(&self) -> GraphParams {
        self.params
    }

    pub fn family_tag(&self) -> FamilyTag {
        self.family
    }

    /// The underlying topology; all generic graph algorithms apply to it.
    pub fn topology(&self) -> &SimpleGraph {
        &self.topology
    }

    pub fn vertex_count(&self) -> usize {
        self.topology.vertex_count()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.topology.neighbors(v)
    }

    pub fn arrangement(&self, v: usize) -> Arrangement {
        Arrangement::unrank(v, self.params).expect("vertex id in range")
    }

    pub fn label(&self, v: usize) -> String {
        self.arrangement(v).label()
    }

    pub fn vertex_of_label(&self, text: &str) -> Result<usize, ArrangementError> {
        Ok(Arrangement::parse(text, self.params)?.rank(self.params))
    }

    /// Class (last symbol, 1-based) of a vertex in the default decomposition.
    pub fn class_of(&self, v: usize) -> usize {
        self.last_symbol[v] as usize
    }

    /// Partition of the vertex set by the symbol at `position` (1-based).
    /// Each class induces a copy of `A(n-1, k-1)`.
    pub fn decompose(&self, position: usize) -> Result<Vec<SubgraphClass>, ArrangementError> {
        if position < 1 || position > self.params.k {
            return Err(ArrangementError::PositionOutOfRange {
                position,
                k: self.params.k,
            });
        }
        let mut classes: Vec<SubgraphClass> = (1..=self.params.n)
            .map(|symbol| SubgraphClass {
                position,
                symbol,
                vertices: Vec::new(),
            })
            .collect();
        for v in 0..self.vertex_count() {
            let sym = self.arrangement(v).symbols()[position - 1] as usize;
            classes[sym - 1].vertices.push(v);
        }
        Ok(classes)
    }

    /// Edges between the last-position classes of symbols `i` and `j`.
    /// These form a perfect matching between the two classes of size
    /// `(n-2)!/(n-k-1)!`.
    pub fn cross_edges(&self, i: usize, j: usize) -> Result<Vec<(usize, usize)>, ArrangementError> {
        if i == j {
            return Err(ArrangementError::EqualSymbols { symbol: i });
        }
        for s in [i, j] {
            if s < 1 || s > self.params.n {
                return Err(ArrangementError::Malformed(format!(
                    "class symbol {s} out of range 1..={}",
                    self.params.n
                )));
            }
        }
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            if self.class_of(v) != i {
                continue;
            }
            for &w in self.neighbors(v) {
                if self.class_of(w) == j {
                    out.push((v, w));
                }
            }
        }
        Ok(out)
    }

    /// `|N(u) ∩ N(v)|` for distinct vertices.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<usize, ArrangementError> {
        if u == v {
            return Err(ArrangementError::IdenticalVertices { vertex: u });
        }
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let mut count = 0;
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(count)
    }

    /// Open neighborhood of an edge: all vertices adjacent to either endpoint,
    /// excluding both endpoints. Size is `(2k-1)(n-k)-1`.
    pub fn edge_neighborhood(&self, u: usize, v: usize) -> Result<Vec<usize>, ArrangementError> {
        if !self.topology.has_edge(u, v) {
            return Err(ArrangementError::NotAnEdge { u, v });
        }
        Ok(self.vertex_set_neighborhood(&[u, v]))
    }

    /// Open neighborhood `N(S) = (∪ N(s)) \ S`, ascending.
    pub fn vertex_set_neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().flat_map(|&s| self.neighbors(s)).copied().collect();
        out.sort_unstable();
        out.dedup();
        out.retain(|v| !set.contains(v));
        out
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.topology.distance(u, v).expect("arrangement graphs are connected")
    }

    pub fn diameter(&self) -> usize {
        self.topology.diameter()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("invalid parameters: need n > k >= 1, got n={n}, k={k}")]
    InvalidParams { n: usize, k: usize },
    #[error("graph too large: {count} vertices")]
    TooLarge { count: usize },
    #[error("malformed arrangement: {0}")]
    Malformed(String),
    #[error("vertex index {index} out of range 0..{count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("position {position} out of range 1..={k}")]
    PositionOutOfRange { position: usize, k: usize },
    #[error("cross-edge classes must differ, both are {symbol}")]
    EqualSymbols { symbol: usize },
    #[error("vertices must be distinct, both are {vertex}")]
    IdenticalVertices { vertex: usize },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, k: usize) -> GraphParams {
        GraphParams::new(n, k).unwrap()
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(GraphParams::new(3, 3).is_err());
        assert!(GraphParams::new(4, 0).is_err());
        assert!(GraphParams::new(2, 3).is_err());
    }

    #[test]
    fn rank_extremes_a42() {
        let p = params(4, 2);
        let first = Arrangement::new(vec![1, 2], p).unwrap();
        let last = Arrangement::new(vec![4, 3], p).unwrap();
        assert_eq!(first.rank(p), 0);
        assert_eq!(last.rank(p), 11);
    }

    #[test]
    fn rank_unrank_inverse_a42() {
        let p = params(4, 2);
        for v in 0..p.vertex_count() {
            let a = Arrangement::unrank(v, p).unwrap();
            assert_eq!(a.rank(p), v);
        }
    }

    #[test]
    fn unrank_out_of_range() {
        let p = params(4, 2);
        assert_eq!(
            Arrangement::unrank(12, p),
            Err(ArrangementError::IndexOutOfRange { index: 12, count: 12 })
        );
    }

    #[test]
    fn malformed_arrangements() {
        let p = params(4, 2);
        assert!(Arrangement::new(vec![1, 1], p).is_err());
        assert!(Arrangement::new(vec![1, 5], p).is_err());
        assert!(Arrangement::new(vec![1], p).is_err());
        assert!(Arrangement::parse("1 x", p).is_err());
    }

    #[test]
    fn a42_shape() {
        let g = ArrangementGraph::build(params(4, 2)).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.topology().edge_count(), 24);
        for v in 0..12 {
            assert_eq!(g.neighbors(v).len(), 4);
        }
    }

    #[test]
    fn a42_neighbors_of_12() {
        let g = ArrangementGraph::build(params(4, 2)).unwrap();
        let v = g.vertex_of_label("1 2").unwrap();
        let labels: Vec<String> = g.neighbors(v).iter().map(|&w| g.label(w)).collect();
        let mut expected = vec!["3 2", "4 2", "1 3", "1 4"];
        expected.sort();
        let mut got = labels.clone();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn a53_shape() {
        let g = ArrangementGraph::build(params(5, 3)).unwrap();
        assert_eq!(g.vertex_count(), 60);
        assert_eq!(g.topology().edge_count(), 180);
        for v in 0..60 {
            assert_eq!(g.neighbors(v).len(), 6);
        }
    }

    #[test]
    fn an1_is_complete() {
        let g = ArrangementGraph::build(params(5, 1)).unwrap();
        assert!(g.topology().is_complete());
        assert_eq!(g.neighbors(0).len(), 4);
        assert_eq!(g.diameter(), 1);
    }

    #[test]
    fn decompose_a42_last_position() {
        let g = ArrangementGraph::build(params(4, 2)).unwrap();
        let classes = g.decompose(2).unwrap();
        assert_eq!(classes.len(), 4);
        let mut all = Vec::new();
        for c in &classes {
            assert_eq!(c.vertices.len(), 3);
            // Each class induces A(3,1) = K_3.
            for &a in &c.vertices {
                let inner = c
                    .vertices
                    .iter()
                    .filter(|&&b| b != a && g.topology().has_edge(a, b))
                    .count();
                assert_eq!(inner, 2);
            }
            all.extend_from_slice(&c.vertices);
        }
        all.sort_unstable();
        assert_eq!(all, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn decompose_position_out_of_range() {
        let g = ArrangementGraph::build(params(4, 2)).unwrap();
        assert!(g.decompose(0).is_err());
        assert!(g.decompose(3).is_err());
    }

    #[test]
    fn decompose_class_sizes_a53() {
        let g = ArrangementGraph::build(params(5, 3)).unwrap();
        for pos in 1..=3 {
            for c in g.decompose(pos).unwrap() {
                assert_eq!(c.vertices.len(), 12);
            }
        }
    }

    #[test]
    fn cross_edges_sizes_and_matching() {
        for (n, k, want) in [(4, 2, 2), (5, 3, 6)] {
            let g = ArrangementGraph::build(params(n, k)).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let edges = g.cross_edges(i, j).unwrap();
                    assert_eq!(edges.len(), want, "E({i},{j}) in A({n},{k})");
                    let mut seen = std::collections::HashSet::new();
                    for (a, b) in edges {
                        assert!(seen.insert(a) && seen.insert(b), "not a matching");
                    }
                }
            }
        }
    }

    #[test]
    fn cross_edges_equal_symbols() {
        let g = ArrangementGraph::build(params(4, 2)).unwrap();
        assert!(g.cross_edges(2, 2).is_err());
    }

    #[test]
    fn common_neighbors_adjacent_a42() {
        let g = ArrangementGraph::build(params(4, 2)).unwrap();
        let u = g.vertex_of_label("1 2").unwrap();
        let v = g.vertex_of_label("1 3").unwrap();
        // n-k-1 = 1; the joint neighbor is "1 4".
        assert_eq!(g.common_neighbors(u, v).unwrap(), 1);
        assert!(g.common_neighbors(u, u).is_err());
    }

    #[test]
    fn edge_neighborhood_sizes() {
        let g = ArrangementGraph::build(params(4, 2)).unwrap();
        let (u, v) = g.topology().edges()[0];
        let nb = g.edge_neighborhood(u, v).unwrap();
        assert_eq!(nb.len(), 5);
        assert!(!nb.contains(&u) && !nb.contains(&v));
        // Non-edges are rejected.
        let w = *(0..12)
            .filter(|&w| w != u && !g.topology().has_edge(u, w))
            .collect::<Vec<_>>()
            .first()
            .unwrap();
        assert!(g.edge_neighborhood(u, w).is_err());
    }

    #[test]
    fn diameter_a42() {
        let g = ArrangementGraph::build(params(4, 2)).unwrap();
        assert_eq!(g.diameter(), 3);
        assert_eq!(g.distance(0, 0), 0);
    }

    #[test]
    fn family_constructors() {
        let star = ArrangementGraph::family(FamilyTag::Star, 5).unwrap();
        assert_eq!(star.vertex_count(), 120);
        assert_eq!(star.neighbors(0).len(), 4);
        assert_eq!(star.family_tag(), FamilyTag::Star);

        let ag = ArrangementGraph::family(FamilyTag::AlternatingGroup, 5).unwrap();
        assert_eq!(ag.vertex_count(), 60);
        assert_eq!(ag.neighbors(0).len(), 6);

        let complete = ArrangementGraph::family(FamilyTag::Complete, 6).unwrap();
        assert!(complete.topology().is_complete());
        assert_eq!(complete.vertex_count(), 6);

        assert!(ArrangementGraph::family(FamilyTag::AlternatingGroup, 2).is_err());
    }
}
