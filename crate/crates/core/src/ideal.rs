use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{check_universe, same_universe, Monomial};
use crate::par::Exec;

/// A monomial ideal given by its minimal generating set.
///
/// Generators form an antichain under divisibility and are kept sorted in
/// graded lexicographic order. The zero ideal has no generators; the unit
/// ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal subset, sorted. Processes one degree layer at a time:
/// a candidate survives iff no kept generator of strictly smaller degree divides it.
pub(crate) fn minimal_antichain(mut cands: Vec<Monomial>, exec: Exec) -> Vec<Monomial> {
    cands.sort_unstable();
    cands.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(cands.len());
    let mut start = 0;
    while start < cands.len() {
        let degree = cands[start].degree();
        let end = cands[start..]
            .iter()
            .position(|m| m.degree() != degree)
            .map_or(cands.len(), |off| start + off);
        let layer = &cands[start..end];
        if kept.is_empty() {
            kept.extend_from_slice(layer);
        } else {
            let prior = &kept;
            let survivors = exec.filter(layer, |m| !prior.iter().any(|k| k.divides_unchecked(m)));
            kept.extend(survivors);
        }
        start = end;
    }
    kept
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Result<Self> {
        check_universe(nvars)?;
        Ok(MonomialIdeal { nvars, gens: Vec::new() })
    }

    pub fn unit(nvars: usize) -> Result<Self> {
        Ok(MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)?] })
    }

    /// The ideal generated by `gens`, reduced to its minimal generators.
    pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        Self::minimalize_with(nvars, gens, Exec::default())
    }

    pub fn minimalize_with(nvars: usize, gens: impl IntoIterator<Item = Monomial>, exec: Exec) -> Result<Self> {
        check_universe(nvars)?;
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            same_universe(nvars, g.nvars())?;
        }
        Ok(MonomialIdeal { nvars, gens: minimal_antichain(gens, exec) })
    }

    /// Parses generators written as in [`Monomial::parse`].
    pub fn parse(nvars: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|g| Monomial::parse(nvars, g)).collect::<Result<Vec<_>>>()?;
        Self::minimalize(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// True iff no generator divides another (always holds for values of this type).
    pub fn is_antichain(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens.iter().enumerate().all(|(j, b)| i == j || !a.divides_unchecked(b)))
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        same_universe(self.nvars, m.nvars())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        same_universe(self.nvars, other.nvars)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_universe(self.nvars, other.nvars)?;
        Self::minimalize(self.nvars, self.gens.iter().chain(other.gens.iter()).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.product_with(other, Exec::default())
    }

    pub fn product_with(&self, other: &MonomialIdeal, exec: Exec) -> Result<MonomialIdeal> {
        same_universe(self.nvars, other.nvars)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                prods.push(f.mul(g)?);
            }
        }
        Ok(MonomialIdeal { nvars: self.nvars, gens: minimal_antichain(prods, exec) })
    }

    /// `I^n` by repeated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        self.power_with(n, Exec::default())
    }

    pub fn power_with(&self, n: u32, exec: Exec) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.nvars)?;
        for _ in 0..n {
            acc = acc.product_with(self, exec)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.intersection_with(other, Exec::default())
    }

    pub fn intersection_with(&self, other: &MonomialIdeal, exec: Exec) -> Result<MonomialIdeal> {
        same_universe(self.nvars, other.nvars)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                lcms.push(f.lcm_unchecked(g));
            }
        }
        Ok(MonomialIdeal { nvars: self.nvars, gens: minimal_antichain(lcms, exec) })
    }

    /// `(I : x_var)` for the 1-based variable `var`.
    pub fn colon_by_variable(&self, var: usize) -> Result<MonomialIdeal> {
        let gens = self.gens.iter().map(|g| g.colon_variable(var)).collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal { nvars: self.nvars, gens: minimal_antichain(gens, Exec::Sequential) })
    }

    /// Minimum generator degree.
    pub fn alpha(&self) -> Result<u32> {
        self.gens.first().map(Monomial::degree).ok_or(Error::AlphaUndefined)
    }

    /// Decides `m ∈ I^n` without forming `I^n`. On success returns generators
    /// `g_1 <= ... <= g_n` (canonical order, with repetition) whose product divides `m`.
    pub fn power_witness(&self, m: &Monomial, n: u32) -> Result<Option<Vec<Monomial>>> {
        same_universe(self.nvars, m.nvars())?;
        if n == 0 {
            return Ok(Some(Vec::new()));
        }
        let cands: Vec<&Monomial> = self.gens.iter().filter(|g| g.divides_unchecked(m)).collect();
        let Some(min_degree) = cands.iter().map(|g| g.degree()).min() else {
            return Ok(None);
        };
        let mut search = PowerSearch {
            cands: &cands,
            target: n as usize,
            min_degree: min_degree as u64,
            remaining: m.exponents().to_vec(),
            chosen: Vec::with_capacity(n as usize),
        };
        let remaining_degree = m.degree() as u64;
        if search.descend(0, remaining_degree) {
            Ok(Some(search.chosen.iter().map(|&i| cands[i].clone()).collect()))
        } else {
            Ok(None)
        }
    }

    pub fn contains_in_power(&self, m: &Monomial, n: u32) -> Result<bool> {
        Ok(self.power_witness(m, n)?.is_some())
    }
}

struct PowerSearch<'a> {
    cands: &'a [&'a Monomial],
    target: usize,
    min_degree: u64,
    remaining: Vec<u32>,
    chosen: Vec<usize>,
}

impl PowerSearch<'_> {
    fn fits(&self, g: &Monomial) -> bool {
        g.exponents().iter().zip(&self.remaining).all(|(a, b)| a <= b)
    }

    fn descend(&mut self, start: usize, remaining_degree: u64) -> bool {
        let depth = self.chosen.len();
        if depth == self.target {
            return true;
        }
        if remaining_degree < (self.target - depth) as u64 * self.min_degree {
            return false;
        }
        for j in start..self.cands.len() {
            let g = self.cands[j];
            if !self.fits(g) {
                continue;
            }
            for (r, e) in self.remaining.iter_mut().zip(g.exponents()) {
                *r -= e;
            }
            self.chosen.push(j);
            if self.descend(j, remaining_degree - g.degree() as u64) {
                return true;
            }
            self.chosen.pop();
            for (r, e) in self.remaining.iter_mut().zip(g.exponents()) {
                *r += e;
            }
        }
        false
    }
}

/// Same shape as the input schema: `{"vars": n, "gens": [[exponents], ...]}`.
impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let gens: Vec<&[u32]> = self.gens.iter().map(Monomial::exponents).collect();
        let mut s = serializer.serialize_struct("MonomialIdeal", 2)?;
        s.serialize_field("vars", &self.nvars)?;
        s.serialize_field("gens", &gens)?;
        s.end()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[{}]{}", self.nvars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(n, gens).unwrap()
    }

    fn mono(n: usize, s: &str) -> Monomial {
        Monomial::parse(n, s).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(3, &["x1x2", "x1x2x3", "x2x3"]), ideal(3, &["x1x2", "x2x3"]));
        assert!(MonomialIdeal::minimalize(3, []).unwrap().is_zero());
        let unit = MonomialIdeal::minimalize(3, [Monomial::one(3).unwrap(), mono(3, "x1")]).unwrap();
        assert!(unit.is_unit());
    }

    #[test]
    fn product_examples() {
        assert_eq!(ideal(4, &["x1x2"]).product(&ideal(4, &["x3x4"])).unwrap(), ideal(4, &["x1x2x3x4"]));
        let i = ideal(3, &["x1x2", "x2x3"]);
        assert_eq!(
            i.product(&i).unwrap(),
            ideal(3, &["x1^2x2^2", "x1x2^2x3", "x2^2x3^2"])
        );
        assert_eq!(i.product(&MonomialIdeal::unit(3).unwrap()).unwrap(), i);
        assert!(i.product(&MonomialIdeal::zero(3).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn power_examples() {
        let i = ideal(3, &["x1x2x3"]);
        assert_eq!(i.power(1).unwrap(), i);
        assert!(i.power(0).unwrap().is_unit());
        assert_eq!(i.power(2).unwrap(), ideal(3, &["x1^2x2^2x3^2"]));
        let bad = ideal(6, &["x1x2x3", "x3x4x5", "x2x5x6"]);
        let sq = bad.power(2).unwrap();
        assert_eq!(sq.len(), 6);
        assert!(sq.generators().iter().all(|g| g.degree() == 6 && !g.is_squarefree()));
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(ideal(2, &["x1"]).intersection(&ideal(2, &["x2"])).unwrap(), ideal(2, &["x1x2"]));
        assert_eq!(
            ideal(3, &["x1", "x2"]).intersection(&ideal(3, &["x1", "x3"])).unwrap(),
            ideal(3, &["x1", "x2x3"])
        );
        let i = ideal(3, &["x1x2", "x3^2"]);
        assert_eq!(i.intersection(&MonomialIdeal::unit(3).unwrap()).unwrap(), i);
    }

    #[test]
    fn colon_examples() {
        let i = ideal(4, &["x1x2x3", "x2x4"]);
        assert_eq!(i.colon_by_variable(1).unwrap(), ideal(4, &["x2x3", "x2x4"]));
        assert_eq!(ideal(4, &["x2x4"]).colon_by_variable(1).unwrap(), ideal(4, &["x2x4"]));
        // cubic path ideal of the 6-cycle, colon by x1
        let j = ideal(6, &["x1x2x3", "x2x3x4", "x3x4x5", "x4x5x6", "x1x5x6", "x1x2x6"]);
        assert_eq!(
            j.colon_by_variable(1).unwrap(),
            ideal(6, &["x3x4x5", "x2x3", "x2x6", "x5x6"])
        );
        assert!(j.colon_by_variable(7).is_err());
    }

    #[test]
    fn membership_examples() {
        let i = ideal(3, &["x1x2"]);
        assert!(i.contains(&mono(3, "x1x2x3")).unwrap());
        assert!(!i.contains(&mono(3, "x1x3")).unwrap());
        assert!(!MonomialIdeal::zero(3).unwrap().contains(&mono(3, "x1x2x3")).unwrap());
    }

    #[test]
    fn power_membership_examples() {
        let c5 = ideal(5, &["x1x2", "x2x3", "x3x4", "x4x5", "x1x5"]);
        let m = mono(5, "x1x2x3x4x5");
        let w = c5.power_witness(&m, 2).unwrap().unwrap();
        assert_eq!(w, vec![mono(5, "x1x2"), mono(5, "x3x4")]);
        assert!(!c5.contains_in_power(&m, 3).unwrap());
        let star = ideal(4, &["x1x2x3", "x1x2x4", "x1x3x4"]);
        assert!(!star.contains_in_power(&mono(4, "x1^2x2x3x4"), 2).unwrap());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(ideal(4, &["x1x2", "x2x3x4"]).alpha().unwrap(), 2);
        assert_eq!(MonomialIdeal::zero(2).unwrap().alpha(), Err(Error::AlphaUndefined));
    }

    fn arb_ideal(max_vars: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
        (1..=max_vars).prop_flat_map(move |n| {
            prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens).prop_map(move |gens| {
                MonomialIdeal::minimalize(n, gens.into_iter().map(|e| Monomial::new(e).unwrap())).unwrap()
            })
        })
    }

    fn arb_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
        (1usize..=5).prop_flat_map(|n| {
            let one = move || {
                prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=4).prop_map(move |gens| {
                    MonomialIdeal::minimalize(n, gens.into_iter().map(|e| Monomial::new(e).unwrap())).unwrap()
                })
            };
            (one(), one(), one())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn operations_yield_antichains((a, b, c) in arb_pair()) {
            prop_assert!(a.sum(&b).unwrap().is_antichain());
            prop_assert!(a.product(&b).unwrap().is_antichain());
            prop_assert!(a.intersection(&b).unwrap().is_antichain());
            prop_assert!(a.colon_by_variable(1).unwrap().is_antichain());
            prop_assert!(c.power(2).unwrap().is_antichain());
        }

        #[test]
        fn product_is_commutative_and_associative((a, b, c) in arb_pair()) {
            prop_assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
            prop_assert_eq!(
                a.product(&b).unwrap().product(&c).unwrap(),
                a.product(&b.product(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn intersection_is_contained_in_both((a, b, _c) in arb_pair()) {
            let i = a.intersection(&b).unwrap();
            prop_assert!(i.is_subset_of(&a).unwrap());
            prop_assert!(i.is_subset_of(&b).unwrap());
        }

        #[test]
        fn power_is_additive(i in arb_ideal(4, 4, 2), a in 0u32..3, b in 0u32..3) {
            prop_assert_eq!(i.power(a + b).unwrap(), i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap());
        }

        #[test]
        fn search_membership_matches_explicit_power(
            i in arb_ideal(6, 6, 2),
            n in 1u32..=3,
            seed in prop::collection::vec(0u32..=3, 6),
        ) {
            let exps: Vec<u32> = seed.into_iter().take(i.nvars()).collect();
            let m = Monomial::new(exps).unwrap();
            let explicit = i.power(n).unwrap().contains(&m).unwrap();
            let witness = i.power_witness(&m, n).unwrap();
            prop_assert_eq!(explicit, witness.is_some());
            if let Some(w) = witness {
                prop_assert_eq!(w.len(), n as usize);
                let prod = w.iter().try_fold(Monomial::one(i.nvars()).unwrap(), |acc, g| acc.mul(g)).unwrap();
                prop_assert!(prod.divides(&m).unwrap());
            }
        }

        #[test]
        fn alpha_of_square_doubles_for_equigenerated_squarefree(
            n in 2usize..=6,
            edges in prop::collection::vec(prop::collection::btree_set(1usize..=6, 2), 1..6),
        ) {
            let gens: Vec<Monomial> = edges
                .iter()
                .filter(|e| e.iter().all(|&v| v <= n))
                .map(|e| Monomial::squarefree(n, e.iter().copied()).unwrap())
                .collect();
            prop_assume!(!gens.is_empty());
            let i = MonomialIdeal::minimalize(n, gens).unwrap();
            prop_assert_eq!(i.power(2).unwrap().alpha().unwrap(), 2 * i.alpha().unwrap());
        }
    }
}
