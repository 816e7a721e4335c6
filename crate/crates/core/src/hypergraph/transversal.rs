use super::{minimal_sets, Hypergraph, VertexSet};
use crate::error::{guard, Result};

pub const DEFAULT_TRANSVERSAL_BOUND: usize = 20;

impl Hypergraph {
    /// All inclusion-minimal vertex sets meeting every edge, in canonical order.
    ///
    /// Edge-by-edge expansion: the transversals of the first `k` edges that miss
    /// edge `k + 1` are extended by each of its vertices, then minimalized.
    pub fn minimal_transversals(&self) -> Result<Vec<VertexSet>> {
        self.minimal_transversals_bounded(DEFAULT_TRANSVERSAL_BOUND)
    }

    pub fn minimal_transversals_bounded(&self, bound: usize) -> Result<Vec<VertexSet>> {
        guard("vertex count", self.vertex_count, bound)?;
        let mut current = vec![VertexSet::EMPTY];
        for &edge in &self.edges {
            let mut next = Vec::with_capacity(current.len() * edge.len());
            for &t in &current {
                if t.intersects(edge) {
                    next.push(t);
                } else {
                    next.extend(edge.iter().map(|v| t.with(v)));
                }
            }
            current = minimal_keep_empty(next);
        }
        current.sort();
        Ok(current)
    }

    /// Maximum number of pairwise disjoint edges.
    pub fn matching_number(&self) -> usize {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| e.len());
        let mut best = 0;
        matching_search(&edges, 0, VertexSet::EMPTY, 0, &mut best);
        best
    }

    /// Minimum size of a vertex set meeting every edge (the height of the edge ideal).
    pub fn cover_number(&self) -> usize {
        let weights = vec![1u32; self.vertex_count];
        let masks: Vec<u64> = self.edges.iter().map(|e| e.bits()).collect();
        min_weight_hitting_set(&masks, &weights).0 as usize
    }

    pub fn has_konig(&self) -> bool {
        self.matching_number() == self.cover_number()
    }
}

/// Like `minimal_sets` but keeps the empty set, which is the lone transversal
/// of an edgeless hypergraph.
fn minimal_keep_empty(sets: Vec<VertexSet>) -> Vec<VertexSet> {
    if sets.iter().any(|s| s.is_empty()) {
        vec![VertexSet::EMPTY]
    } else {
        minimal_sets(sets)
    }
}

fn matching_search(edges: &[VertexSet], idx: usize, used: VertexSet, count: usize, best: &mut usize) {
    if count > *best {
        *best = count;
    }
    if idx == edges.len() || count + (edges.len() - idx) <= *best {
        return;
    }
    // edges are sorted by size, so the smallest remaining edge bounds how many more fit
    let free = edges[idx..].iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e)).difference(used);
    if count + free.len() / edges[idx].len().max(1) <= *best {
        return;
    }
    let e = edges[idx];
    if !e.intersects(used) {
        matching_search(edges, idx + 1, used.union(e), count + 1, best);
    }
    matching_search(edges, idx + 1, used, count, best);
}

/// Exact minimum-weight hitting set of `edges` (0-based bit masks) under
/// nonnegative `weights`. Returns `(cost, chosen mask)`.
///
/// Zero-weight vertices are taken for free. The rest are branched column by
/// column, heaviest first (ties by index). A greedy cover seeds the incumbent;
/// a greedy family of pairwise disjoint unhit edges, each charged its cheapest
/// still-available vertex, is a dual-feasible packing and bounds from below.
pub(crate) fn min_weight_hitting_set(edges: &[u64], weights: &[u32]) -> (u64, u64) {
    let n = weights.len();
    let free: u64 = (0..n).filter(|&i| weights[i] == 0).fold(0, |acc, i| acc | (1u64 << i));
    let unhit: Vec<u64> = edges.iter().copied().filter(|&e| e & free == 0).collect();
    if unhit.is_empty() {
        return (0, free);
    }
    let mut order: Vec<usize> = (0..n).filter(|&i| weights[i] > 0).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
    let (greedy_cost, greedy_mask) = greedy_cover(&unhit, weights);
    let mut search = HittingSearch {
        edges: &unhit,
        weights,
        order: &order,
        best_cost: greedy_cost,
        best_mask: greedy_mask,
    };
    search.descend(0, 0, 0, 0);
    (search.best_cost, search.best_mask | free)
}

fn greedy_cover(edges: &[u64], weights: &[u32]) -> (u64, u64) {
    let mut chosen = 0u64;
    let mut cost = 0u64;
    loop {
        let open: Vec<u64> = edges.iter().copied().filter(|&e| e & chosen == 0).collect();
        if open.is_empty() {
            return (cost, chosen);
        }
        // best hits-per-weight; compare h1/w1 > h2/w2 as h1*w2 > h2*w1
        let mut best: Option<(usize, u64, u64)> = None;
        for (i, &w) in weights.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let hits = open.iter().filter(|&&e| e >> i & 1 == 1).count() as u64;
            if hits == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((_, bh, bw)) => hits * bw > bh * w as u64,
            };
            if better {
                best = Some((i, hits, w as u64));
            }
        }
        let (i, _, w) = best.expect("every open edge has a positive-weight vertex");
        chosen |= 1u64 << i;
        cost += w;
    }
}

struct HittingSearch<'a> {
    edges: &'a [u64],
    weights: &'a [u32],
    order: &'a [usize],
    best_cost: u64,
    best_mask: u64,
}

impl HittingSearch<'_> {
    /// `pos` is the next column in `order`; `excluded` holds columns fixed to 0.
    fn descend(&mut self, pos: usize, chosen: u64, excluded: u64, cost: u64) {
        let open: Vec<u64> = self.edges.iter().copied().filter(|&e| e & chosen == 0).collect();
        if open.is_empty() {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best_mask = chosen;
            }
            return;
        }
        let Some(lower) = self.packing_bound(&open, excluded) else {
            return;
        };
        if cost + lower >= self.best_cost || pos == self.order.len() {
            return;
        }
        let col = self.order[pos];
        let bit = 1u64 << col;
        if open.iter().any(|&e| e & bit != 0) {
            self.descend(pos + 1, chosen | bit, excluded, cost + self.weights[col] as u64);
        }
        self.descend(pos + 1, chosen, excluded | bit, cost);
    }

    /// Lower bound on the extra cost, or `None` if some open edge can no longer be hit.
    fn packing_bound(&self, open: &[u64], excluded: u64) -> Option<u64> {
        let mut used = 0u64;
        let mut bound = 0u64;
        for &e in open {
            let avail = e & !excluded;
            if avail == 0 {
                return None;
            }
            if avail & used == 0 {
                used |= avail;
                let cheapest = bits(avail).map(|i| self.weights[i] as u64).min().unwrap_or(0);
                bound += cheapest;
            }
        }
        Some(bound)
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

#[cfg(test)]
pub(crate) fn brute_force_transversals(h: &Hypergraph) -> Vec<VertexSet> {
    let n = h.vertex_count();
    let hits = |s: u64| h.edges().iter().all(|e| e.bits() & s != 0);
    let mut out: Vec<VertexSet> = (0u64..1 << n)
        .filter(|&s| hits(s) && (0..n).all(|i| s >> i & 1 == 0 || !hits(s & !(1 << i))))
        .map(VertexSet::from_bits)
        .collect();
    out.sort();
    out
}
