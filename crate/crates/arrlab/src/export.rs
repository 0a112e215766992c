//! Graph serialization: DOT, JSON and plain edge-list text.

use crate::arrangement::ArrangementGraph;
use serde::{Deserialize, Serialize};

/// JSON shape: `{n, k, vertices: [label...], edges: [[i,j]...]}` with `i < j`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub k: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn from_graph(g: &ArrangementGraph) -> Self {
        GraphJson {
            n: g.params().n,
            k: g.params().k,
            vertices: (0..g.vertex_count()).map(|v| g.label(v)).collect(),
            edges: g.topology().edges(),
        }
    }
}

/// Undirected DOT with arrangement labels as node names.
pub fn to_dot(g: &ArrangementGraph) -> String {
    let p = g.params();
    let mut out = format!("graph arrangement_{}_{} {{\n", p.n, p.k);
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  \"{}\";\n", g.label(v)));
    }
    for (u, v) in g.topology().edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.label(u), g.label(v)));
    }
    out.push_str("}\n");
    out
}

pub fn to_json(g: &ArrangementGraph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("serializable")
}

/// One `"i j"` line per edge, vertex indices, `i < j`.
pub fn to_edge_list(g: &ArrangementGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.topology().edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
