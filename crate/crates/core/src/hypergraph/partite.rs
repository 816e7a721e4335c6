use serde::Serialize;

use super::{Hypergraph, VertexSet};
use crate::error::{Error, Result};

/// Disjoint vertex classes covering `1..=n`. Isolated vertices go to the first class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    classes: Vec<VertexSet>,
}

impl Partition {
    pub fn new(vertex_count: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let sets: Vec<VertexSet> = classes
            .iter()
            .map(|c| {
                if c.iter().any(|&v| v == 0 || v > vertex_count) {
                    Err(Error::InvalidPartition(format!("class {c:?} leaves 1..={vertex_count}")))
                } else {
                    Ok(VertexSet::from_vertices(c.iter().copied()))
                }
            })
            .collect::<Result<_>>()?;
        let mut seen = VertexSet::EMPTY;
        for (i, s) in sets.iter().enumerate() {
            if s.intersects(seen) {
                return Err(Error::InvalidPartition(format!("class {} overlaps an earlier class", i + 1)));
            }
            seen = seen.union(*s);
        }
        let universe = VertexSet::from_bits(super::universe_mask(vertex_count));
        if seen != universe {
            let missing = universe.difference(seen);
            return Err(Error::InvalidPartition(format!("vertices {missing} are in no class")));
        }
        Ok(Partition { classes: sets })
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Checks that every edge meets every class exactly once, which also
    /// makes each class a vertex cover.
    pub fn is_partition_of(&self, h: &Hypergraph) -> bool {
        self.classes.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(*c)) == h.vertex_mask()
            && h.edges().iter().all(|e| self.classes.iter().all(|c| e.intersection(*c).len() == 1))
    }
}

/// Three edges forming a copy of the bad hypergraph of length 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BadTriple {
    pub edges: [VertexSet; 3],
    pub support: VertexSet,
}

impl BadTriple {
    /// For each member edge `E`, the set `support \ E`.
    pub fn complements(&self) -> [VertexSet; 3] {
        self.edges.map(|e| self.support.difference(e))
    }

    fn from_edges(a: VertexSet, b: VertexSet, c: VertexSet) -> Option<Self> {
        let (ab, bc, ca) = (a.intersection(b), b.intersection(c), c.intersection(a));
        let bad = ab.len() == 1
            && bc.len() == 1
            && ca.len() == 1
            && ab != bc
            && bc != ca
            && ca != ab
            && ab.intersection(c).is_empty();
        let support = a.union(b).union(c);
        (bad && support.len() == 6).then_some(BadTriple { edges: [a, b, c], support })
    }
}

impl Hypergraph {
    /// An r-partition in which every edge meets each class exactly once,
    /// found by backtracking with classes opened in order of first use.
    pub fn find_r_partition(&self, r: usize) -> Result<Option<Partition>> {
        if !self.is_r_uniform(r) || r == 0 {
            return Err(Error::NotUniform(r));
        }
        let n = self.vertex_count;
        let covered = self.covered_vertices();
        let order: Vec<usize> = covered.iter().collect();
        let mut colour = vec![usize::MAX; n + 1];
        let incident: Vec<Vec<VertexSet>> = (0..=n)
            .map(|v| self.edges.iter().filter(|e| e.contains(v)).copied().collect())
            .collect();
        if !assign(&order, 0, 0, r, &incident, &mut colour) {
            return Ok(None);
        }
        let mut classes = vec![Vec::new(); r];
        for (v, &c) in colour.iter().enumerate().skip(1) {
            classes[if covered.contains(v) { c } else { 0 }].push(v);
        }
        let partition = Partition::new(n, classes)?;
        debug_assert!(partition.is_partition_of(self));
        Ok(Some(partition))
    }

    /// True iff every choice of one vertex per class is an edge.
    pub fn is_complete_r_partite(&self, partition: &Partition) -> Result<bool> {
        if !partition.is_partition_of(self) {
            return Err(Error::InvalidPartition("not an r-partition of this hypergraph".into()));
        }
        // every edge is one such selection, so completeness is a count
        let selections = partition
            .classes()
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
            .unwrap_or(usize::MAX);
        Ok(selections == self.edge_count())
    }

    /// All unordered edge triples isomorphic to the bad hypergraph of length 3.
    pub fn find_bad_triples(&self) -> Result<Vec<BadTriple>> {
        if !self.is_r_uniform(3) {
            return Err(Error::NotUniform(3));
        }
        let e = &self.edges;
        let mut out = Vec::new();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i].intersection(e[j]).len() != 1 {
                    continue;
                }
                for k in j + 1..e.len() {
                    if let Some(t) = BadTriple::from_edges(e[i], e[j], e[k]) {
                        out.push(t);
                    }
                }
            }
        }
        Ok(out)
    }
}

fn assign(
    order: &[usize],
    idx: usize,
    used: usize,
    r: usize,
    incident: &[Vec<VertexSet>],
    colour: &mut [usize],
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    for c in 0..r.min(used + 1) {
        let clash = incident[v].iter().any(|e| e.iter().any(|w| w != v && colour[w] == c));
        if clash {
            continue;
        }
        colour[v] = c;
        if assign(order, idx + 1, used.max(c + 1), r, incident, colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}
