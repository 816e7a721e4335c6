use std::collections::HashSet;

use serde::Serialize;

use super::{minimal_sets, Hypergraph, VertexSet};
use crate::error::{guard, Error, Result};
use crate::par::Exec;

pub const DEFAULT_MINOR_BOUND: usize = 14;

/// What happens to one vertex when forming a minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MinorOp {
    Keep,
    Delete,
    Contract,
}

/// Original vertex labels deleted and contracted to reach a minor. Deletions
/// are applied first; the two commute on distinct vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MinorTrace {
    pub deleted: Vec<usize>,
    pub contracted: Vec<usize>,
}

impl MinorTrace {
    pub fn ops(&self, vertex_count: usize) -> Vec<MinorOp> {
        (1..=vertex_count)
            .map(|v| {
                if self.deleted.contains(&v) {
                    MinorOp::Delete
                } else if self.contracted.contains(&v) {
                    MinorOp::Contract
                } else {
                    MinorOp::Keep
                }
            })
            .collect()
    }

    /// Replays the trace through the public operations: `deletion` one vertex
    /// at a time, then one simultaneous `contraction_of`.
    pub fn replay(&self, h: &Hypergraph) -> Result<Hypergraph> {
        // labels currently alive, so original names can be located after compaction
        let mut labels: Vec<usize> = (1..=h.vertex_count()).collect();
        let position = |labels: &[usize], v: usize| {
            labels
                .iter()
                .position(|&l| l == v)
                .map(|p| p + 1)
                .ok_or(Error::VariableOutOfRange { index: v, size: h.vertex_count() })
        };
        let mut cur = h.clone();
        for &v in &self.deleted {
            let (next, map) = cur.deletion(position(&labels, v)?)?;
            labels = map.into_iter().map(|i| labels[i - 1]).collect();
            cur = next;
        }
        let contracted = self.contracted.iter().map(|&v| position(&labels, v)).collect::<Result<Vec<_>>>()?;
        Ok(cur.contraction_of(&contracted)?.0)
    }
}

/// All distinct minors of a hypergraph, each with the first assignment (in
/// base-3 order, vertex 1 least significant) that produces it. Assignment 0
/// keeps every vertex, so the hypergraph itself comes first.
pub struct Minors<'a> {
    host: &'a Hypergraph,
    next: u64,
    total: u64,
    seen: HashSet<Hypergraph>,
}

impl Hypergraph {
    pub fn minors(&self) -> Result<Minors<'_>> {
        self.minors_bounded(DEFAULT_MINOR_BOUND)
    }

    pub fn minors_bounded(&self, bound: usize) -> Result<Minors<'_>> {
        guard("vertex count", self.vertex_count, bound)?;
        Ok(Minors { host: self, next: 0, total: 3u64.pow(self.vertex_count as u32), seen: HashSet::new() })
    }

    /// Minor for explicit deleted/contracted masks (0-based bits, disjoint).
    pub(crate) fn minor_by_masks(&self, deleted: u64, contracted: u64) -> Hypergraph {
        let keep = self.vertex_mask().bits() & !(deleted | contracted);
        let surviving = self
            .edges
            .iter()
            .filter(|e| e.bits() & deleted == 0)
            .map(|e| VertexSet::from_bits(e.bits() & !contracted))
            .collect();
        let edges = minimal_sets(surviving)
            .into_iter()
            .map(|e| VertexSet::from_bits(compress(e.bits(), keep)))
            .collect();
        Hypergraph::from_canonical(keep.count_ones() as usize, edges)
    }

    /// True iff every minor has the König property. On failure the report
    /// carries the first failing minor in enumeration order.
    pub fn has_packing(&self) -> Result<PackingReport> {
        self.has_packing_with(DEFAULT_MINOR_BOUND, Exec::default())
    }

    pub fn has_packing_with(&self, bound: usize, exec: Exec) -> Result<PackingReport> {
        let minors: Vec<(Hypergraph, MinorTrace)> = self.minors_bounded(bound)?.collect();
        let failure = exec.find_first(&minors, |(m, trace)| {
            let matching = m.matching_number();
            let cover = m.cover_number();
            (matching != cover).then(|| KonigFailure { minor: m.clone(), trace: trace.clone(), matching, cover })
        });
        Ok(PackingReport { holds: failure.is_none(), minors_checked: minors.len(), failure })
    }
}

impl Iterator for Minors<'_> {
    type Item = (Hypergraph, MinorTrace);

    fn next(&mut self) -> Option<Self::Item> {
        while self.next < self.total {
            let (deleted, contracted) = decode(self.next, self.host.vertex_count);
            self.next += 1;
            let minor = self.host.minor_by_masks(deleted, contracted);
            if self.seen.insert(minor.clone()) {
                let trace = MinorTrace {
                    deleted: VertexSet::from_bits(deleted).to_vec(),
                    contracted: VertexSet::from_bits(contracted).to_vec(),
                };
                return Some((minor, trace));
            }
        }
        None
    }
}

fn decode(mut index: u64, n: usize) -> (u64, u64) {
    let (mut deleted, mut contracted) = (0u64, 0u64);
    for i in 0..n {
        match index % 3 {
            1 => deleted |= 1 << i,
            2 => contracted |= 1 << i,
            _ => {}
        }
        index /= 3;
    }
    (deleted, contracted)
}

/// Packs the bits of `value` selected by `keep` into the low positions.
fn compress(value: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut pos = 0;
    let mut rest = keep;
    while rest != 0 {
        let i = rest.trailing_zeros();
        if value >> i & 1 == 1 {
            out |= 1 << pos;
        }
        pos += 1;
        rest &= rest - 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KonigFailure {
    pub minor: Hypergraph,
    pub trace: MinorTrace,
    pub matching: usize,
    pub cover: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingReport {
    pub holds: bool,
    pub minors_checked: usize,
    pub failure: Option<KonigFailure>,
}
