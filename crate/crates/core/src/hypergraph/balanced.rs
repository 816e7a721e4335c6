use serde::Serialize;

use super::{Hypergraph, VertexSet};
use crate::error::{guard, Result};

pub const DEFAULT_BALANCE_BOUND: usize = 16;

/// Which hyperedge may rescue an odd cycle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BalanceMode {
    /// One of the cycle's own edges must hold three cycle vertices (the usual reading).
    #[default]
    Standard,
    /// Any edge of the hypergraph may hold the three cycle vertices.
    AnyEdge,
}

/// `x1, E1, x2, E2, ..., xk, Ek, x1` with `xi, x(i+1)` in `Ei`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<VertexSet>,
}

impl HyperCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    pub mode: BalanceMode,
    pub odd_cycle: Option<HyperCycle>,
}

impl Hypergraph {
    /// Searches for an odd cycle (length >= 3) with no rescuing edge.
    ///
    /// Cycles start at their least vertex. A prefix is abandoned as soon as a
    /// rescuing edge holds three of its vertices, since extending the cycle
    /// only adds vertices.
    pub fn is_balanced(&self, mode: BalanceMode) -> Result<BalanceReport> {
        guard("vertex count", self.vertex_count, DEFAULT_BALANCE_BOUND)?;
        guard("edge count", self.edges.len(), 64)?;
        let mut search = CycleSearch { h: self, mode, vertices: Vec::new(), edges: Vec::new(), found: None };
        for start in self.covered_vertices().iter() {
            search.vertices = vec![start];
            search.extend(VertexSet::singleton(start), 0);
            if search.found.is_some() {
                break;
            }
        }
        let odd_cycle = search.found;
        Ok(BalanceReport { balanced: odd_cycle.is_none(), mode, odd_cycle })
    }
}

struct CycleSearch<'a> {
    h: &'a Hypergraph,
    mode: BalanceMode,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    found: Option<HyperCycle>,
}

impl CycleSearch<'_> {
    fn rescued(&self, on_cycle: VertexSet, used: &[usize]) -> bool {
        match self.mode {
            BalanceMode::Standard => used.iter().any(|&i| self.h.edges[i].intersection(on_cycle).len() >= 3),
            BalanceMode::AnyEdge => self.h.edges.iter().any(|e| e.intersection(on_cycle).len() >= 3),
        }
    }

    fn extend(&mut self, on_cycle: VertexSet, used_edges: u64) {
        let start = self.vertices[0];
        let cur = *self.vertices.last().unwrap();
        for (i, e) in self.h.edges.iter().enumerate() {
            if used_edges >> i & 1 == 1 || !e.contains(cur) {
                continue;
            }
            self.edges.push(i);
            let k = self.edges.len();
            if k >= 3 && k % 2 == 1 && e.contains(start) && !self.rescued(on_cycle, &self.edges) {
                self.found = Some(HyperCycle {
                    vertices: self.vertices.clone(),
                    edges: self.edges.iter().map(|&j| self.h.edges[j]).collect(),
                });
                return;
            }
            for next in e.iter() {
                if next <= start || on_cycle.contains(next) {
                    continue;
                }
                let grown = on_cycle.with(next);
                if self.rescued(grown, &self.edges) {
                    continue;
                }
                self.vertices.push(next);
                self.extend(grown, used_edges | 1 << i);
                self.vertices.pop();
                if self.found.is_some() {
                    return;
                }
            }
            self.edges.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn graphs() {
        assert!(cycle_graph(4).is_balanced(BalanceMode::Standard).unwrap().balanced);
        assert!(cycle_graph(6).is_balanced(BalanceMode::Standard).unwrap().balanced);
        let report = cycle_graph(5).is_balanced(BalanceMode::Standard).unwrap();
        assert!(!report.balanced);
        let cycle = report.odd_cycle.unwrap();
        assert_eq!(cycle.vertices, vec![1, 2, 3, 4, 5]);
        assert_eq!(cycle.edges.len(), 5);
        let triangle = cycle_graph(3);
        assert!(!triangle.is_balanced(BalanceMode::Standard).unwrap().balanced);
    }

    #[test]
    fn bad_hypergraph_is_unbalanced() {
        // x2, {1,2,3}, x3, {3,4,5}, x5, {2,5,6}, x2 is an odd cycle with 2 cycle vertices per edge
        let report = bad().is_balanced(BalanceMode::Standard).unwrap();
        assert!(!report.balanced);
        assert_eq!(report.odd_cycle.unwrap().vertices, vec![2, 3, 5]);
    }

    #[test]
    fn modes_differ() {
        // the triangle 1-2-3 runs through edges holding two of its vertices each,
        // but the extra edge {1,2,3} holds all three
        let h = Hypergraph::new(7, vec![vec![1, 2, 5], vec![2, 3, 6], vec![1, 3, 7], vec![1, 2, 3]]).unwrap();
        assert!(!h.is_balanced(BalanceMode::Standard).unwrap().balanced);
        assert!(h.is_balanced(BalanceMode::AnyEdge).unwrap().balanced);
    }

    #[test]
    fn every_returned_cycle_is_a_genuine_unrescued_odd_cycle() {
        let hs = [
            bad(),
            cycle_graph(7),
            Hypergraph::new(6, vec![vec![1, 2, 3], vec![3, 4], vec![4, 5, 6], vec![1, 6]]).unwrap(),
        ];
        for h in hs {
            let Some(c) = h.is_balanced(BalanceMode::Standard).unwrap().odd_cycle else {
                continue;
            };
            let k = c.len();
            assert!(k >= 3 && k % 2 == 1);
            let on = VertexSet::from_vertices(c.vertices.iter().copied());
            assert_eq!(on.len(), k);
            for i in 0..k {
                assert!(c.edges[i].contains(c.vertices[i]) && c.edges[i].contains(c.vertices[(i + 1) % k]));
                assert!(c.edges[i].intersection(on).len() < 3);
            }
        }
    }
}
