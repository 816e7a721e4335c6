//! Brute-force oracles for cross-checking `sqfree-core` on tiny inputs.
//!
//! Nothing here shares code with the library under test. Vertex sets are
//! plain `u64` masks (bit `i` is vertex `i + 1`), monomials are exponent
//! slices, and every routine is the most literal exhaustive search available.
//! Expect exponential running times.

use std::collections::BTreeSet;

use itertools::Itertools;

/// Mask of a list of 1-based vertices.
pub fn mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << (v - 1))
}

pub fn meets_all(set: u64, edges: &[u64]) -> bool {
    edges.iter().all(|&e| e & set != 0)
}

/// Every inclusion-minimal subset of `{1..n}` meeting every edge, in mask order.
pub fn minimal_transversals(n: usize, edges: &[u64]) -> Vec<u64> {
    (0..1u64 << n)
        .filter(|&t| meets_all(t, edges) && (0..n).all(|i| t >> i & 1 == 0 || !meets_all(t & !(1 << i), edges)))
        .collect()
}

/// `m ∈ I^(level)` for the squarefree ideal with the given edges: the
/// exponent sum over every minimal prime reaches `level`.
pub struct SymbolicOracle {
    primes: Vec<u64>,
}

impl SymbolicOracle {
    pub fn new(n: usize, edges: &[u64]) -> Self {
        SymbolicOracle { primes: minimal_transversals(n, edges) }
    }

    pub fn contains(&self, m: &[u32], level: u32) -> bool {
        self.primes.iter().all(|&p| {
            let deg: u32 = m.iter().enumerate().filter(|(i, _)| p >> i & 1 == 1).map(|(_, &e)| e).sum();
            deg >= level
        })
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `m ∈ I^level`: some product of `level` generators (with repetition) divides `m`.
pub fn in_power(gens: &[Vec<u32>], m: &[u32], level: u32) -> bool {
    fn go(gens: &[Vec<u32>], start: usize, rest: &mut [u32], left: u32) -> bool {
        if left == 0 {
            return true;
        }
        for i in start..gens.len() {
            if divides(&gens[i], rest) {
                rest.iter_mut().zip(&gens[i]).for_each(|(r, g)| *r -= g);
                let found = go(gens, i, rest, left - 1);
                rest.iter_mut().zip(&gens[i]).for_each(|(r, g)| *r += g);
                if found {
                    return true;
                }
            }
        }
        false
    }
    go(gens, 0, &mut m.to_vec(), level)
}

/// Exponent vectors of the squarefree generators given by `edges`.
pub fn squarefree_gens(n: usize, edges: &[u64]) -> Vec<Vec<u32>> {
    edges.iter().map(|&e| (0..n).map(|i| (e >> i & 1) as u32).collect()).collect()
}

/// A monomial in `I^(level) \ I^level`, searched over the box `{0..level}^n`.
/// Minimal generators of `I^(level)` have every exponent at most `level`, so
/// the box suffices.
pub fn symbolic_gap(n: usize, edges: &[u64], level: u32) -> Option<Vec<u32>> {
    let symbolic = SymbolicOracle::new(n, edges);
    let gens = squarefree_gens(n, edges);
    let mut m = vec![0u32; n];
    loop {
        if symbolic.contains(&m, level) && !in_power(&gens, &m, level) {
            return Some(m);
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            if m[i] < level {
                m[i] += 1;
                break;
            }
            m[i] = 0;
            i += 1;
        }
    }
}

/// Minimal generators of `(I : x_var)`.
pub fn colon(gens: &[Vec<u32>], var: usize) -> BTreeSet<Vec<u32>> {
    let quotients: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut q = g.clone();
            q[var - 1] = q[var - 1].saturating_sub(1);
            q
        })
        .collect();
    minimal(&quotients)
}

pub fn minimal(gens: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    gens.iter()
        .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
        .cloned()
        .collect()
}

/// Largest number of pairwise disjoint edges.
pub fn matching_number(edges: &[u64]) -> usize {
    fn go(edges: &[u64], used: u64) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&e, rest)) => {
                let skip = go(rest, used);
                if e & used == 0 {
                    skip.max(1 + go(rest, used | e))
                } else {
                    skip
                }
            }
        }
    }
    go(edges, 0)
}

/// Smallest vertex cover of the edges.
pub fn cover_number(n: usize, edges: &[u64]) -> usize {
    (0..1u64 << n).filter(|&t| meets_all(t, edges)).map(|t| t.count_ones() as usize).min().unwrap_or(0)
}

/// `min Σ w_v x_v` over 0/1 covers `x`.
pub fn weighted_cover(n: usize, edges: &[u64], weights: &[u32]) -> u64 {
    (0..1u64 << n)
        .filter(|&t| meets_all(t, edges))
        .map(|t| (0..n).filter(|i| t >> i & 1 == 1).map(|i| weights[i] as u64).sum())
        .min()
        .unwrap_or(0)
}

/// `max Σ y_e` over nonnegative integer `y` with vertex loads at most `w_v`.
pub fn weighted_packing(n: usize, edges: &[u64], weights: &[u32]) -> u64 {
    fn go(edges: &[u64], room: &mut [u32]) -> u64 {
        let Some((&e, rest)) = edges.split_first() else {
            return 0;
        };
        let verts: Vec<usize> = (0..room.len()).filter(|i| e >> i & 1 == 1).collect();
        let cap = verts.iter().map(|&i| room[i]).min().unwrap_or(0);
        let mut best = 0;
        for y in 0..=cap {
            verts.iter().for_each(|&i| room[i] -= y);
            best = best.max(y as u64 + go(rest, room));
            verts.iter().for_each(|&i| room[i] += y);
        }
        best
    }
    go(edges, &mut weights[..n].to_vec())
}

/// `F` is a leaf of the collection if it is alone, or some other member `G`
/// satisfies `F ∩ H ⊆ F ∩ G` for every member `H ≠ F`.
pub fn has_leaf(collection: &[u64]) -> bool {
    if collection.len() == 1 {
        return true;
    }
    collection.iter().enumerate().any(|(f, &face)| {
        collection.iter().enumerate().any(|(g, &other)| {
            g != f && collection.iter().enumerate().all(|(h, &e)| h == f || (e & face) & !(other & face) == 0)
        })
    })
}

/// A nonempty subcollection with no leaf.
pub fn leafless_subcollection(edges: &[u64]) -> Option<Vec<u64>> {
    (1..1u64 << edges.len()).find_map(|pick| {
        let sub: Vec<u64> = edges.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &e)| e).collect();
        (!has_leaf(&sub)).then_some(sub)
    })
}

/// Can `{1..n}` be split into `r` classes so that every edge meets every
/// class exactly once? Plain backtracking over colourings.
pub fn has_r_partition(n: usize, edges: &[u64], r: usize) -> bool {
    fn go(v: usize, n: usize, edges: &[u64], r: usize, colour: &mut Vec<usize>) -> bool {
        // Edges whose last vertex is below `v` are fully coloured: check them.
        let done = |e: u64| 64 - e.leading_zeros() as usize <= v;
        for &e in edges.iter().filter(|&&e| done(e)) {
            let mut seen = vec![0usize; r];
            (0..v).filter(|i| e >> i & 1 == 1).for_each(|i| seen[colour[i]] += 1);
            if seen.iter().any(|&c| c != 1) {
                return false;
            }
        }
        if v == n {
            return true;
        }
        for c in 0..r {
            colour.push(c);
            if go(v + 1, n, edges, r, colour) {
                return true;
            }
            colour.pop();
        }
        false
    }
    go(0, n, edges, r, &mut Vec::new())
}

/// Connected bipartite graphs on `n` vertices, one per isomorphism class.
/// Edges are 1-based pairs `(a, b)` with `a < b`.
pub fn connected_bipartite_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect()).collect();
    let mut classes = BTreeSet::new();
    for pick in 0..1u64 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &p)| p).collect();
        if !two_colourable_and_connected(n, &edges) {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|image| (0..pairs.len()).filter(|&i| pick >> i & 1 == 1).fold(0u64, |m, i| m | 1 << image[i]))
            .min()
            .unwrap();
        classes.insert(canonical);
    }
    classes
        .into_iter()
        .map(|c| pairs.iter().enumerate().filter(|(i, _)| c >> i & 1 == 1).map(|(_, &(a, b))| (a + 1, b + 1)).collect())
        .collect()
}

fn two_colourable_and_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut queue = vec![0];
    while let Some(v) = queue.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            match side[w] {
                None => {
                    side[w] = side[v].map(|s| !s);
                    queue.push(w);
                }
                Some(s) if Some(s) == side[v] => return false,
                Some(_) => {}
            }
        }
    }
    side.iter().all(Option::is_some)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_basics() {
        let edges = [mask(&[1, 2]), mask(&[2, 3]), mask(&[1, 3])];
        assert_eq!(minimal_transversals(3, &edges), vec![0b011, 0b101, 0b110]);
        assert_eq!(matching_number(&edges), 1);
        assert_eq!(cover_number(3, &edges), 2);
        assert_eq!(symbolic_gap(3, &edges, 2), Some(vec![1, 1, 1]));
        assert_eq!(symbolic_gap(3, &edges, 1), None);
    }

    #[test]
    fn packing_counts_repeated_edges() {
        let edges = [mask(&[1, 2])];
        assert_eq!(weighted_packing(2, &edges, &[2, 3]), 2);
        assert_eq!(weighted_cover(2, &edges, &[2, 3]), 2);
    }

    #[test]
    fn bipartite_counts_match_the_known_sequence() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_bipartite_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 3, 5]);
    }

    #[test]
    fn triangle_is_leafless_path_is_not() {
        let triangle = [mask(&[1, 2]), mask(&[2, 3]), mask(&[1, 3])];
        assert!(leafless_subcollection(&triangle).is_some());
        let path = [mask(&[1, 2]), mask(&[2, 3]), mask(&[3, 4])];
        assert!(leafless_subcollection(&path).is_none());
    }

    #[test]
    fn three_partitions() {
        let edges = [mask(&[1, 2, 3]), mask(&[2, 3, 4])];
        assert!(has_r_partition(4, &edges, 3));
        let edges = [mask(&[1, 2, 3]), mask(&[1, 2, 4]), mask(&[1, 3, 4])];
        assert!(!has_r_partition(4, &edges, 3));
    }
}
