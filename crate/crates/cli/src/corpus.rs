//! Named instances bundled into the binary.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Graph,
    Hypergraph,
    Ideal,
    /// 0/1 covering matrix: `{"columns": n, "rows": [[0, 1, ...], ...]}`.
    Matrix,
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub kind: Kind,
    pub description: &'static str,
    pub text: &'static str,
}

pub const ENTRIES: &[Entry] = &[
    Entry { name: "c3", kind: Kind::Graph, description: "cycle C_3", text: include_str!("../corpus/c3.json") },
    Entry { name: "c4", kind: Kind::Graph, description: "cycle C_4", text: include_str!("../corpus/c4.json") },
    Entry { name: "c5", kind: Kind::Graph, description: "cycle C_5", text: include_str!("../corpus/c5.json") },
    Entry { name: "c6", kind: Kind::Graph, description: "cycle C_6", text: include_str!("../corpus/c6.json") },
    Entry { name: "c7", kind: Kind::Graph, description: "cycle C_7", text: include_str!("../corpus/c7.json") },
    Entry { name: "c8", kind: Kind::Graph, description: "cycle C_8", text: include_str!("../corpus/c8.json") },
    Entry { name: "c9", kind: Kind::Graph, description: "cycle C_9", text: include_str!("../corpus/c9.json") },
    Entry { name: "p4", kind: Kind::Graph, description: "path P_4", text: include_str!("../corpus/p4.json") },
    Entry { name: "p5", kind: Kind::Graph, description: "path P_5", text: include_str!("../corpus/p5.json") },
    Entry { name: "p6", kind: Kind::Graph, description: "path P_6", text: include_str!("../corpus/p6.json") },
    Entry { name: "c10", kind: Kind::Graph, description: "cycle C_10", text: include_str!("../corpus/c10.json") },
    Entry { name: "c11", kind: Kind::Graph, description: "cycle C_11", text: include_str!("../corpus/c11.json") },
    Entry { name: "c12", kind: Kind::Graph, description: "cycle C_12", text: include_str!("../corpus/c12.json") },
    Entry { name: "k23", kind: Kind::Graph, description: "complete bipartite graph K_{2,3}", text: include_str!("../corpus/k23.json") },
    Entry { name: "star3", kind: Kind::Graph, description: "star with centre 1 and three leaves", text: include_str!("../corpus/star3.json") },
    Entry { name: "bad", kind: Kind::Hypergraph, description: "bad hypergraph of length 3", text: include_str!("../corpus/bad.json") },
    Entry { name: "h3_c7", kind: Kind::Hypergraph, description: "3-vertex paths of the 7-cycle", text: include_str!("../corpus/h3_c7.json") },
    Entry { name: "bad_plus_146", kind: Kind::Hypergraph, description: "bad hypergraph plus the transversal {1,4,6}", text: include_str!("../corpus/bad_plus_146.json") },
    Entry { name: "bad_plus_456", kind: Kind::Hypergraph, description: "bad hypergraph plus the complement {4,5,6} of edge {1,2,3}", text: include_str!("../corpus/bad_plus_456.json") },
    Entry { name: "complete_222", kind: Kind::Hypergraph, description: "complete 3-partite 3-uniform hypergraph on classes {1,2},{3,4},{5,6}", text: include_str!("../corpus/complete_222.json") },
    Entry { name: "star3_cubic", kind: Kind::Ideal, description: "cubic path ideal of the 3-star", text: include_str!("../corpus/star3_cubic.json") },
    Entry { name: "application1_p7", kind: Kind::Matrix, description: "cyclic 3-window covering matrix, p = 7", text: include_str!("../corpus/application1_p7.json") },
    Entry { name: "application1_p9", kind: Kind::Matrix, description: "cyclic 3-window covering matrix, p = 9", text: include_str!("../corpus/application1_p9.json") },
    Entry { name: "application1_p12", kind: Kind::Matrix, description: "cyclic 3-window covering matrix, p = 12", text: include_str!("../corpus/application1_p12.json") },
    Entry { name: "application2_p5_band", kind: Kind::Matrix, description: "banded 5 x 6 covering matrix", text: include_str!("../corpus/application2_p5_band.json") },
];

pub fn get(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

pub fn of_kind(kind: Kind) -> impl Iterator<Item = &'static Entry> {
    ENTRIES.iter().filter(move |e| e.kind == kind)
}
