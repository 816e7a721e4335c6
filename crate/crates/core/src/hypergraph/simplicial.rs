use super::{Hypergraph, VertexSet};
use crate::error::{guard, Result};
use crate::par::Exec;

/// Largest edge count for the exhaustive subcollection test.
pub const DEFAULT_FOREST_BOUND: usize = 15;

/// Index of the first leaf of `edges`: an edge `F` that is alone, or has a
/// partner `G` with `H ∩ F ⊆ G` for every other edge `H`.
fn leaf_index(edges: &[VertexSet]) -> Option<usize> {
    if edges.len() == 1 {
        return Some(0);
    }
    (0..edges.len()).find(|&f| {
        let face = edges[f];
        (0..edges.len()).any(|g| {
            g != f
                && edges
                    .iter()
                    .enumerate()
                    .all(|(h, e)| h == f || e.intersection(face).is_subset(edges[g]))
        })
    })
}

fn select(edges: &[VertexSet], mask: u64) -> Vec<VertexSet> {
    edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect()
}

impl Hypergraph {
    pub fn find_leaf(&self) -> Option<VertexSet> {
        leaf_index(&self.edges).map(|i| self.edges[i])
    }

    /// Strips leaves one at a time. Succeeds on every simplicial forest, but
    /// can also succeed on hypergraphs that hide a leafless subcollection.
    pub fn greedy_leaf_elimination(&self) -> bool {
        let mut rest = self.edges.clone();
        while !rest.is_empty() {
            match leaf_index(&rest) {
                Some(i) => {
                    rest.remove(i);
                }
                None => return false,
            }
        }
        true
    }

    /// A nonempty subcollection of edges with no leaf (a simplicial cycle
    /// certificate), or `None` if every subcollection has one.
    pub fn leafless_subcollection(&self) -> Result<Option<Vec<VertexSet>>> {
        self.leafless_subcollection_with(Exec::default())
    }

    pub fn leafless_subcollection_with(&self, exec: Exec) -> Result<Option<Vec<VertexSet>>> {
        guard("edge count", self.edges.len(), DEFAULT_FOREST_BOUND)?;
        let total = 1u64 << self.edges.len();
        Ok(exec.find_first_index(1..total, |mask| {
            let sub = select(&self.edges, mask);
            leaf_index(&sub).is_none().then_some(sub)
        }))
    }

    /// Every nonempty subcollection of edges has a leaf. The greedy pass
    /// rejects quickly; acceptance always comes from the exhaustive test.
    pub fn is_simplicial_forest(&self) -> Result<bool> {
        guard("edge count", self.edges.len(), DEFAULT_FOREST_BOUND)?;
        if !self.greedy_leaf_elimination() {
            return Ok(false);
        }
        Ok(self.leafless_subcollection()?.is_none())
    }

    /// A connected simplicial forest.
    pub fn is_simplicial_tree(&self) -> Result<bool> {
        Ok(self.is_edge_connected() && self.is_simplicial_forest()?)
    }

    /// Edges form one connected piece (vacuously true with no edges).
    pub fn is_edge_connected(&self) -> bool {
        let Some(&first) = self.edges.first() else {
            return true;
        };
        let mut reached = first;
        let mut grew = true;
        while grew {
            grew = false;
            for e in &self.edges {
                if e.intersects(reached) && !e.is_subset(reached) {
                    reached = reached.union(*e);
                    grew = true;
                }
            }
        }
        self.edges.iter().all(|e| e.is_subset(reached))
    }
}
