//! Symbolic powers of squarefree monomial ideals.
//!
//! For a squarefree ideal `I` with minimal primes `P_C = (x_i : i ∈ C)`, the
//! symbolic power is `I^(n) = ∩_C P_C^n`, so `m ∈ I^(n)` iff the exponents of
//! `m` sum to at least `n` over every minimal vertex cover `C`.

use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{guard, Error, Result};
use crate::hypergraph::{min_weight_hitting_set, BadTriple, Hypergraph, VertexSet};
use crate::ideal::{minimal_antichain, MonomialIdeal};
use crate::lp::{LinearProgram, LpSolution, Rational};
use crate::monomial::{same_universe, Monomial};
use crate::par::Exec;

/// Cost guards for explicit symbolic powers.
pub const MAX_SYMBOLIC_VARS: usize = 16;
pub const MAX_SYMBOLIC_POWER: u32 = 8;

/// A nonzero, proper squarefree monomial ideal together with its minimal primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    ideal: MonomialIdeal,
    hypergraph: Hypergraph,
    primes: Vec<VertexSet>,
}

impl SquarefreeIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if ideal.is_zero() {
            return Err(Error::Precondition("the zero ideal has no minimal primes".into()));
        }
        let hypergraph = Hypergraph::of_ideal(&ideal)?;
        let primes = hypergraph.minimal_transversals()?;
        Ok(SquarefreeIdeal { ideal, hypergraph, primes })
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        Self::new(h.edge_ideal())
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    /// Variable sets of the minimal primes, in canonical order.
    pub fn minimal_primes(&self) -> &[VertexSet] {
        &self.primes
    }

    pub fn contains_symbolic(&self, m: &Monomial, n: u32) -> Result<bool> {
        same_universe(self.nvars(), m.nvars())?;
        Ok(self.contains_symbolic_unchecked(m, n))
    }

    fn contains_symbolic_unchecked(&self, m: &Monomial, n: u32) -> bool {
        self.primes.iter().all(|c| m.weight_on(c.bits()) >= n)
    }

    /// Independent membership test: `m ∈ I^(n)` iff `m / b ∈ I` for every
    /// monomial `b` dividing `m` with `deg b <= n - 1`.
    pub fn contains_symbolic_by_quotients(&self, m: &Monomial, n: u32) -> Result<bool> {
        same_universe(self.nvars(), m.nvars())?;
        if n == 0 {
            return Ok(true);
        }
        let mut quotient = m.exponents().to_vec();
        Ok(all_small_divisors(&mut quotient, 0, n - 1, &mut |q| {
            self.ideal.contains_unchecked(&Monomial::from_exps_unchecked(q.into()))
        }))
    }

    /// Minimal generators of `I^(n)`.
    pub fn symbolic_power(&self, n: u32) -> Result<MonomialIdeal> {
        self.symbolic_power_with(n, Exec::default())
    }

    /// Folds `J ↦ J ∩ P^n` over the primes, smallest first. The intersection
    /// with `P^n` is generated by `f·e` for `f` in `J` and `e` a monomial in
    /// the variables of `P` of degree `n - (weight of f on P)`.
    pub fn symbolic_power_with(&self, n: u32, exec: Exec) -> Result<MonomialIdeal> {
        let nvars = self.nvars();
        guard("variable count", nvars, MAX_SYMBOLIC_VARS)?;
        guard("symbolic power", n as usize, MAX_SYMBOLIC_POWER as usize)?;
        let mut primes = self.primes.clone();
        primes.sort_by_key(|p| p.len());
        let mut gens = vec![Monomial::one(nvars)?];
        for p in primes {
            let vars: Vec<usize> = p.iter().map(|v| v - 1).collect();
            let raised: Vec<Vec<Monomial>> = exec.map(&gens, |f| {
                let need = n.saturating_sub(f.weight_on(p.bits()));
                let mut out = Vec::new();
                let mut exps = f.exponents().to_vec();
                raise(&mut exps, &vars, 0, need, &mut out);
                out
            });
            gens = minimal_antichain(raised.into_iter().flatten().collect(), exec);
        }
        MonomialIdeal::minimalize_with(nvars, gens, exec)
    }

    /// `m ∈ I^(n)` is a minimal generator iff removing any one variable of
    /// its support leaves `I^(n)`.
    pub fn is_minimal_symbolic_generator(&self, m: &Monomial, n: u32) -> Result<bool> {
        if !self.contains_symbolic(m, n)? {
            return Err(Error::Precondition(format!("{m} is not in the symbolic power {n}")));
        }
        Ok((1..=self.nvars())
            .filter(|&v| m.exponent(v) > 0)
            .all(|v| !self.contains_symbolic_unchecked(&m.colon_variable(v).expect("in range"), n)))
    }

    /// Decides `I^(n) = I^n` by testing each minimal generator of `I^(n)` for
    /// membership in `I^n`; the first failure is the witness.
    pub fn equality_check(&self, n: u32) -> Result<EqualityReport> {
        self.equality_check_with(n, Exec::default())
    }

    pub fn equality_check_with(&self, n: u32, exec: Exec) -> Result<EqualityReport> {
        let symbolic = self.symbolic_power_with(n, exec)?;
        let gens = symbolic.generators();
        let witness = exec.find_first(gens, |g| (!self.ideal.contains_in_power(g, n).expect("same universe")).then(|| g.clone()));
        let Some(witness) = witness else {
            return Ok(EqualityReport { n, equal: true, witness: None, witness_checks: None, generators_checked: gens.len() });
        };
        let checks = WitnessChecks {
            in_symbolic_power: self.contains_symbolic(&witness, n)?,
            in_ordinary_power: self.ideal.contains_in_power(&witness, n)?,
        };
        if !checks.in_symbolic_power || checks.in_ordinary_power {
            return Err(Error::Conformance(format!("witness {witness} failed re-verification at n = {n}")));
        }
        Ok(EqualityReport { n, equal: false, witness: Some(witness), witness_checks: Some(checks), generators_checked: gens.len() })
    }

    /// Reports for `n = 1..=up_to`; with `stop_at_failure` the list ends at the first inequality.
    pub fn equality_up_to(&self, up_to: u32, stop_at_failure: bool) -> Result<Vec<EqualityReport>> {
        let mut out = Vec::new();
        for n in 1..=up_to {
            let report = self.equality_check(n)?;
            let failed = !report.equal;
            out.push(report);
            if failed && stop_at_failure {
                break;
            }
        }
        Ok(out)
    }

    /// `α(I^(m))` with a generator attaining it.
    pub fn alpha_symbolic_witness(&self, m: u32) -> Result<Monomial> {
        let n = self.nvars();
        guard("variable count", n, crate::hypergraph::DEFAULT_TRANSVERSAL_BOUND)?;
        let masks: Vec<u64> = self.primes.iter().map(|p| p.bits()).collect();
        let exps = AlphaSearch::run(&masks, n, m)?;
        Monomial::new(exps)
    }

    /// Minimum degree of `I^(m)`: the integer program `min Σ a_i` subject to
    /// `Σ_{i∈C} a_i >= m` for every minimal prime `C`.
    pub fn alpha_symbolic(&self, m: u32) -> Result<u32> {
        Ok(self.alpha_symbolic_witness(m)?.degree())
    }

    /// Optimum of the fractional relaxation of the `m = 1` program, with its certificate.
    pub fn fractional_cover(&self) -> Result<LpSolution> {
        let n = self.nvars();
        let masks: Vec<u64> = self.primes.iter().map(|p| p.bits()).collect();
        let rows: Vec<Vec<i64>> = masks.iter().map(|&c| (0..n).map(|i| (c >> i & 1) as i64).collect()).collect();
        LinearProgram::from_integers(&rows, &vec![1; rows.len()], &vec![1; n])?.solve()
    }

    /// `lp ≤ α̂(I) ≤ min_{m ≤ depth} α(I^(m))/m`.
    pub fn waldschmidt_bounds(&self, depth: u32) -> Result<WaldschmidtBounds> {
        if depth == 0 {
            return Err(Error::Precondition("sample depth must be positive".into()));
        }
        let lp_value = self.fractional_cover()?.value;
        let samples = (1..=depth).map(|m| Ok((m, self.alpha_symbolic(m)?))).collect::<Result<Vec<_>>>()?;
        let upper_bound = samples
            .iter()
            .map(|&(m, a)| Rational::new(a.into(), m.into()))
            .min()
            .expect("depth >= 1");
        for &(a, alpha_a) in &samples {
            if Rational::new(alpha_a.into(), a.into()) < lp_value {
                return Err(Error::Conformance(format!("α(I^({a}))/{a} fell below the LP bound")));
            }
            for &(b, alpha_b) in &samples {
                if let Some(&(_, alpha_sum)) = samples.iter().find(|&&(c, _)| c == a + b) {
                    if alpha_sum > alpha_a + alpha_b {
                        return Err(Error::Conformance(format!("subadditivity failed at {a} + {b}")));
                    }
                }
            }
        }
        let certified = lp_value == upper_bound;
        Ok(WaldschmidtBounds { lp_value, samples, upper_bound, certified })
    }
}

/// Calls `f` on `m / b` for each divisor `b` of degree at most `budget`;
/// stops early on the first `false`.
fn all_small_divisors(exps: &mut [u32], var: usize, budget: u32, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
    if var == exps.len() {
        return f(exps);
    }
    let original = exps[var];
    for take in 0..=original.min(budget) {
        exps[var] = original - take;
        if !all_small_divisors(exps, var + 1, budget - take, f) {
            exps[var] = original;
            return false;
        }
    }
    exps[var] = original;
    true
}

/// Pushes `exps · e` for every monomial `e` of degree `need` in `vars[from..]`.
fn raise(exps: &mut [u32], vars: &[usize], from: usize, need: u32, out: &mut Vec<Monomial>) {
    if need == 0 {
        out.push(Monomial::from_exps_unchecked(exps.to_vec().into()));
        return;
    }
    for (k, &v) in vars.iter().enumerate().skip(from) {
        exps[v] += 1;
        raise(exps, vars, k, need - 1, out);
        exps[v] -= 1;
    }
}

/// Branch and bound for `α(I^(m))`: variables are fixed in index order, and
/// each node is bounded below by the exact LP over the free variables.
struct AlphaSearch<'a> {
    primes: &'a [u64],
    n: usize,
    m: u32,
    best: u64,
    best_exps: Vec<u32>,
    current: Vec<u32>,
}

impl<'a> AlphaSearch<'a> {
    fn run(primes: &'a [u64], n: usize, m: u32) -> Result<Vec<u32>> {
        // incumbent: m on every vertex of a minimum hitting set of the primes
        let (size, hit) = min_weight_hitting_set(primes, &vec![1; n]);
        let best_exps: Vec<u32> = (0..n).map(|i| if hit >> i & 1 == 1 { m } else { 0 }).collect();
        let mut search = AlphaSearch { primes, n, m, best: size * m as u64, best_exps, current: vec![0; n] };
        search.descend(0, 0)?;
        Ok(search.best_exps)
    }

    fn residual(&self, depth: usize) -> Vec<(u64, u32)> {
        let fixed = (1u64 << depth) - 1;
        self.primes
            .iter()
            .map(|&c| {
                let got: u32 = (0..depth).filter(|&i| c >> i & 1 == 1).map(|i| self.current[i]).sum();
                (c & !fixed, self.m.saturating_sub(got))
            })
            .collect()
    }

    fn descend(&mut self, depth: usize, cost: u64) -> Result<()> {
        let residual = self.residual(depth);
        if residual.iter().all(|&(_, need)| need == 0) {
            if cost < self.best {
                self.best = cost;
                self.best_exps = self.current[..depth].iter().copied().chain(std::iter::repeat(0)).take(self.n).collect();
            }
            return Ok(());
        }
        if depth == self.n || residual.iter().any(|&(free, need)| need > 0 && free == 0) {
            return Ok(());
        }
        let bound = lp_bound(&residual, depth, self.n)?;
        if cost + bound >= self.best {
            return Ok(());
        }
        let top = residual.iter().filter(|&&(free, _)| free >> depth & 1 == 1).map(|&(_, need)| need).max().unwrap_or(0);
        for value in (0..=top).rev() {
            self.current[depth] = value;
            self.descend(depth + 1, cost + value as u64)?;
        }
        self.current[depth] = 0;
        Ok(())
    }
}

/// Ceiling of the LP optimum over variables `depth..n` for the unmet constraints.
fn lp_bound(residual: &[(u64, u32)], depth: usize, n: usize) -> Result<u64> {
    let rows: Vec<Vec<i64>> = residual
        .iter()
        .filter(|&&(_, need)| need > 0)
        .map(|&(free, _)| (depth..n).map(|i| (free >> i & 1) as i64).collect())
        .collect();
    let rhs: Vec<i64> = residual.iter().filter(|&&(_, need)| need > 0).map(|&(_, need)| need as i64).collect();
    let value = LinearProgram::from_integers(&rows, &rhs, &vec![1; n - depth])?.solve()?.value;
    Ok(value.ceil().to_integer().to_u64().unwrap_or(u64::MAX))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessChecks {
    pub in_symbolic_power: bool,
    pub in_ordinary_power: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub n: u32,
    pub equal: bool,
    pub witness: Option<Monomial>,
    pub witness_checks: Option<WitnessChecks>,
    pub generators_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WaldschmidtBounds {
    #[serde(serialize_with = "ser_q")]
    pub lp_value: Rational,
    pub samples: Vec<(u32, u32)>,
    #[serde(serialize_with = "ser_q")]
    pub upper_bound: Rational,
    /// The two bounds coincide, which pins the constant exactly.
    pub certified: bool,
}

fn ser_q<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// `r / (r - 1)`, the fractional chromatic number that the Waldschmidt
/// constant `r` of an r-uniform r-partite hypergraph yields through the known
/// identity `α̂ = χ* / (χ* - 1)`. Only the preconditions are checked here; the
/// identity itself is taken from the literature.
pub fn fractional_chromatic_from_waldschmidt(h: &Hypergraph, r: usize) -> Result<Rational> {
    if r < 2 {
        return Err(Error::Precondition("r must be at least 2".into()));
    }
    if h.edge_count() == 0 {
        return Err(Error::Precondition("the hypergraph needs an edge".into()));
    }
    if h.find_r_partition(r)?.is_none() {
        return Err(Error::Precondition(format!("the hypergraph is not {r}-partite")));
    }
    Ok(Rational::new((r as i64).into(), (r as i64 - 1).into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadnessReport {
    /// No bad triple, or every bad triple `B` has an edge `E` with `V(B) \ E` an edge.
    pub criterion: bool,
    /// `I^(2) = I^2`, computed directly.
    pub direct: bool,
    pub agree: bool,
    pub bad_triples: Vec<BadTriple>,
    /// First bad triple none of whose complements is an edge.
    pub unrescued: Option<BadTriple>,
    pub witness: Option<Monomial>,
    /// Supplementary: every bad triple's support is the disjoint union of two
    /// edges of `H`, not necessarily edges of the triple. This is exactly what
    /// `I^(2) = I^2` forces on the degree-6 product over the support.
    pub split_criterion: bool,
    pub split_agrees: bool,
    /// First bad triple whose support splits into no two edges.
    pub unsplit: Option<BadTriple>,
}

/// Compares the bad-triple criterion for `I^(2) = I^2` on a 3-uniform
/// 3-partite hypergraph with a direct computation.
pub fn check_badness_criterion(h: &Hypergraph) -> Result<BadnessReport> {
    if h.find_r_partition(3)?.is_none() {
        return Err(Error::Precondition("the hypergraph is not 3-partite".into()));
    }
    let bad_triples = h.find_bad_triples()?;
    let unrescued = bad_triples
        .iter()
        .find(|t| !t.complements().iter().any(|c| h.edges().contains(c)))
        .copied();
    let criterion = unrescued.is_none();
    let unsplit = bad_triples
        .iter()
        .find(|t| !h.edges().iter().any(|e| e.is_subset(t.support) && h.edges().contains(&t.support.difference(*e))))
        .copied();
    let report = SquarefreeIdeal::from_hypergraph(h)?.equality_check(2)?;
    Ok(BadnessReport {
        criterion,
        direct: report.equal,
        agree: criterion == report.equal,
        bad_triples,
        unrescued,
        witness: report.witness,
        split_criterion: unsplit.is_none(),
        split_agrees: unsplit.is_none() == report.equal,
        unsplit,
    })
}

/// Splits `J` along `x`: `I` is generated by the generators of `J` free of
/// `x`, and `L` by the generators of `(J : x)` not in `I`, so `J = I + x·L`.
pub fn decompose_by_variable(j: &MonomialIdeal, x: usize) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let nvars = j.nvars();
    let colon = j.colon_by_variable(x)?;
    let i = MonomialIdeal::minimalize(nvars, j.generators().iter().filter(|g| g.exponent(x) == 0).cloned())?;
    let l = MonomialIdeal::minimalize(nvars, colon.generators().iter().filter(|g| !i.contains_unchecked(g)).cloned())?;
    let rebuilt = l
        .generators()
        .iter()
        .map(|g| g.times_variable(x))
        .chain(i.generators().iter().cloned().map(Ok))
        .collect::<Result<Vec<_>>>()?;
    if MonomialIdeal::minimalize(nvars, rebuilt)? != *j {
        return Err(Error::Conformance(format!("I + x{x}·L does not rebuild J")));
    }
    Ok((i, l))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitViolation {
    pub k: u32,
    pub i: u32,
    pub monomial: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitContainmentReport {
    pub n: u32,
    pub holds: bool,
    pub pairs_checked: usize,
    pub violation: Option<SplitViolation>,
}

/// Checks `I^k ∩ I^i L^(n-i) ⊆ Σ_{j=k..n} I^j L^(n-j)` for all `0 <= i < k <= n`.
pub fn split_containment_check(i_ideal: &MonomialIdeal, l_ideal: &MonomialIdeal, n: u32) -> Result<SplitContainmentReport> {
    same_universe(i_ideal.nvars(), l_ideal.nvars())?;
    guard("variable count", i_ideal.nvars(), MAX_SYMBOLIC_VARS)?;
    guard("power", n as usize, MAX_SYMBOLIC_POWER as usize)?;
    let i_pow: Vec<MonomialIdeal> = (0..=n).map(|e| i_ideal.power(e)).collect::<Result<_>>()?;
    let l_pow: Vec<MonomialIdeal> = (0..=n).map(|e| l_ideal.power(e)).collect::<Result<_>>()?;
    // mixed[j] = I^j L^(n-j)
    let mixed: Vec<MonomialIdeal> = (0..=n as usize).map(|j| i_pow[j].product(&l_pow[n as usize - j])).collect::<Result<_>>()?;
    let mut pairs_checked = 0;
    for k in 1..=n {
        for i in 0..k {
            pairs_checked += 1;
            let left = i_pow[k as usize].intersection(&mixed[i as usize])?;
            let right = &mixed[k as usize..];
            if let Some(g) = left.generators().iter().find(|g| !right.iter().any(|r| r.contains_unchecked(g))) {
                let violation = SplitViolation { k, i, monomial: g.clone() };
                return Ok(SplitContainmentReport { n, holds: false, pairs_checked, violation: Some(violation) });
            }
        }
    }
    Ok(SplitContainmentReport { n, holds: true, pairs_checked, violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::rational;
    use proptest::prelude::*;

    fn mono(n: usize, s: &str) -> Monomial {
        Monomial::parse(n, s).unwrap()
    }

    fn sq(n: usize, gens: &[&str]) -> SquarefreeIdeal {
        SquarefreeIdeal::new(MonomialIdeal::parse(n, gens).unwrap()).unwrap()
    }

    fn bad() -> SquarefreeIdeal {
        sq(6, &["x1x2x3", "x3x4x5", "x2x5x6"])
    }

    fn star() -> SquarefreeIdeal {
        sq(4, &["x1x2x3", "x1x2x4", "x1x3x4"])
    }

    fn cycle(n: usize) -> SquarefreeIdeal {
        let gens: Vec<String> = (1..=n).map(|i| format!("x{}x{}", i, i % n + 1)).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        sq(n, &refs)
    }

    fn cycle_windows(n: usize) -> SquarefreeIdeal {
        let gens: Vec<String> = (0..n).map(|i| format!("x{}x{}x{}", i + 1, (i + 1) % n + 1, (i + 2) % n + 1)).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        sq(n, &refs)
    }

    fn complete_tripartite() -> SquarefreeIdeal {
        let mut gens = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    gens.push(Monomial::squarefree(6, [a, b, c]).unwrap());
                }
            }
        }
        SquarefreeIdeal::new(MonomialIdeal::minimalize(6, gens).unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn minimal_primes_examples() {
        let c4 = cycle(4);
        let shown: Vec<Vec<usize>> = c4.minimal_primes().iter().map(|p| p.to_vec()).collect();
        assert_eq!(shown, vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(bad().minimal_primes().len(), 7);
        assert_eq!(sq(3, &["x1x2x3"]).minimal_primes().len(), 3);
        assert_eq!(SquarefreeIdeal::new(MonomialIdeal::parse(2, &["x1^2"]).unwrap()), Err(Error::NotSquarefree));
    }

    #[test]
    fn membership_examples() {
        let top = mono(6, "x1x2x3x4x5x6");
        assert!(bad().contains_symbolic(&top, 2).unwrap());
        assert!(bad().contains_symbolic_by_quotients(&top, 2).unwrap());
        assert!(!bad().ideal().contains_in_power(&top, 2).unwrap());
        let w = mono(4, "x1^2x2x3x4");
        assert!(star().contains_symbolic(&w, 2).unwrap());
        assert!(star().contains_symbolic_by_quotients(&w, 2).unwrap());
        assert!(!star().ideal().contains_in_power(&w, 2).unwrap());
    }

    #[test]
    fn minimal_generator_examples() {
        assert!(bad().is_minimal_symbolic_generator(&mono(6, "x1x2x3x4x5x6"), 2).unwrap());
        assert!(star().is_minimal_symbolic_generator(&mono(4, "x1^2x2x3x4"), 2).unwrap());
        assert!(bad().is_minimal_symbolic_generator(&mono(6, "x1x2x3"), 1).unwrap());
        assert!(bad().is_minimal_symbolic_generator(&mono(6, "x1"), 2).is_err());
    }

    #[test]
    fn symbolic_power_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.symbolic_power(2).unwrap(), c4.ideal().power(2).unwrap());
        assert!(bad().symbolic_power(2).unwrap().generators().contains(&mono(6, "x1x2x3x4x5x6")));
        let p = sq(2, &["x1", "x2"]);
        assert_eq!(p.symbolic_power(2).unwrap(), MonomialIdeal::parse(2, &["x1^2", "x1x2", "x2^2"]).unwrap());
        assert!(bad().symbolic_power(9).unwrap_err().is_guard());
    }

    #[test]
    fn equality_examples() {
        let r = bad().equality_check(2).unwrap();
        assert!(!r.equal);
        assert_eq!(r.witness, Some(mono(6, "x1x2x3x4x5x6")));
        let r = star().equality_check(2).unwrap();
        assert_eq!(r.witness, Some(mono(4, "x1^2x2x3x4")));
        assert!(cycle(4).equality_up_to(4, false).unwrap().iter().all(|r| r.equal));
        let c5 = cycle(5).equality_up_to(3, true).unwrap();
        assert_eq!(c5.len(), 3);
        assert!(c5[0].equal && c5[1].equal);
        assert_eq!(c5[2].witness, Some(mono(5, "x1x2x3x4x5")));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let i = cycle_windows(7);
        for n in 1..=3 {
            assert_eq!(
                i.equality_check_with(n, Exec::Sequential).unwrap(),
                i.equality_check_with(n, Exec::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn alpha_examples() {
        let k = complete_tripartite();
        for m in 1..=4 {
            assert_eq!(k.alpha_symbolic(m).unwrap(), 3 * m);
        }
        assert_eq!(cycle(5).alpha_symbolic(1).unwrap(), 2);
        assert_eq!(cycle(5).alpha_symbolic(3).unwrap(), 5);
    }

    #[test]
    fn waldschmidt_examples() {
        let w = complete_tripartite().waldschmidt_bounds(3).unwrap();
        assert_eq!(w.lp_value, rational(3));
        assert_eq!(w.upper_bound, rational(3));
        assert!(w.certified);
        let k22 = sq(4, &["x1x3", "x1x4", "x2x3", "x2x4"]).waldschmidt_bounds(3).unwrap();
        assert_eq!((k22.lp_value.clone(), k22.certified), (rational(2), true));
        let c5 = cycle(5).waldschmidt_bounds(4).unwrap();
        assert_eq!(c5.lp_value, q(5, 3));
        assert!(c5.lp_value <= c5.upper_bound);
    }

    #[test]
    fn fractional_chromatic_formula() {
        let k = complete_tripartite();
        assert_eq!(fractional_chromatic_from_waldschmidt(k.hypergraph(), 3).unwrap(), q(3, 2));
        let k22 = sq(4, &["x1x3", "x1x4", "x2x3", "x2x4"]);
        assert_eq!(fractional_chromatic_from_waldschmidt(k22.hypergraph(), 2).unwrap(), rational(2));
        let k4 = sq(4, &["x1x2x3x4"]);
        assert_eq!(fractional_chromatic_from_waldschmidt(k4.hypergraph(), 4).unwrap(), q(4, 3));
        assert!(fractional_chromatic_from_waldschmidt(cycle(5).hypergraph(), 2).is_err());
    }

    #[test]
    fn badness_examples() {
        let h = bad().hypergraph().clone();
        let r = check_badness_criterion(&h).unwrap();
        assert!(!r.criterion && !r.direct && r.agree);
        // {4,5,6} is the complement of {1,2,3} inside the bad triple
        let r = check_badness_criterion(&h.with_edge(&[4, 5, 6]).unwrap()).unwrap();
        assert!(r.criterion && r.direct && r.agree);
        // with {1,4,6} every three of the four edges form a bad triple
        let r = check_badness_criterion(&h.with_edge(&[1, 4, 6]).unwrap()).unwrap();
        assert!(!r.criterion && !r.direct && r.agree);
        assert_eq!(r.bad_triples.len(), 4);
        let disjoint = Hypergraph::new(6, vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let r = check_badness_criterion(&disjoint).unwrap();
        assert!(r.criterion && r.direct);
    }

    #[test]
    fn criterion_misses_splits_outside_the_triple() {
        // {135, 236, 245} is bad with no complementary edge, yet its support
        // is 146 + 235, so x1..x6 is in I^2 and equality holds
        let h = Hypergraph::new(6, vec![vec![1, 3, 5], vec![1, 4, 6], vec![2, 3, 5], vec![2, 3, 6], vec![2, 4, 5]]).unwrap();
        let r = check_badness_criterion(&h).unwrap();
        assert!(!r.criterion && r.direct && !r.agree);
        assert!(r.split_criterion && r.split_agrees);
    }

    #[test]
    fn split_criterion_matches_direct_on_all_222_instances() {
        let triples: Vec<Vec<usize>> = (0..8).map(|m| vec![1 + (m & 1), 3 + (m >> 1 & 1), 5 + (m >> 2 & 1)]).collect();
        for mask in 1u32..256 {
            let edges = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| triples[i].clone()).collect();
            let r = check_badness_criterion(&Hypergraph::new(6, edges).unwrap()).unwrap();
            assert!(r.split_agrees, "mask {mask}");
        }
    }

    #[test]
    fn decomposition_examples() {
        let j = cycle_windows(6).ideal().clone();
        let (i, l) = decompose_by_variable(&j, 1).unwrap();
        assert_eq!(i, MonomialIdeal::parse(6, &["x2x3x4", "x3x4x5", "x4x5x6"]).unwrap());
        assert_eq!(l, MonomialIdeal::parse(6, &["x2x3", "x2x6", "x5x6"]).unwrap());
        let free = MonomialIdeal::parse(3, &["x2x3"]).unwrap();
        let (i, l) = decompose_by_variable(&free, 1).unwrap();
        assert_eq!(i, free);
        assert!(l.is_zero());
        let principal = MonomialIdeal::parse(3, &["x1x2x3"]).unwrap();
        let (i, l) = decompose_by_variable(&principal, 1).unwrap();
        assert!(i.is_zero());
        assert_eq!(l, MonomialIdeal::parse(3, &["x2x3"]).unwrap());
    }

    #[test]
    fn split_containment_examples() {
        let zero = MonomialIdeal::zero(4).unwrap();
        let l = MonomialIdeal::parse(4, &["x1x2", "x3x4"]).unwrap();
        assert!(split_containment_check(&zero, &l, 3).unwrap().holds);
        let (i, l) = decompose_by_variable(cycle_windows(9).ideal(), 1).unwrap();
        assert!(split_containment_check(&i, &l, 2).unwrap().holds);
        let r = split_containment_check(&i, &l, 1).unwrap();
        assert!(r.holds && r.pairs_checked == 1);
    }

    fn brute_alpha(primes: &[VertexSet], n: usize, m: u32) -> u32 {
        let mut best = u32::MAX;
        let total = (m as u64 + 1).pow(n as u32);
        for mut code in 0..total {
            let mut a = vec![0u32; n];
            for slot in a.iter_mut() {
                *slot = (code % (m as u64 + 1)) as u32;
                code /= m as u64 + 1;
            }
            if primes.iter().all(|p| p.iter().map(|v| a[v - 1]).sum::<u32>() >= m) {
                best = best.min(a.iter().sum());
            }
        }
        best
    }

    fn arb_squarefree(max_vars: usize, max_gens: usize) -> impl Strategy<Value = SquarefreeIdeal> {
        (2usize..=max_vars).prop_flat_map(move |n| {
            prop::collection::vec(1u64..(1 << n), 1..=max_gens).prop_map(move |masks| {
                let gens = masks.into_iter().map(|m| Monomial::from_mask(n, m));
                SquarefreeIdeal::new(MonomialIdeal::minimalize(n, gens).unwrap()).unwrap()
            })
        })
    }

    fn arb_monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::new(e).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn quotient_criterion_agrees(
            (i, m) in arb_squarefree(7, 8).prop_flat_map(|i| {
                let n = i.nvars();
                (Just(i), arb_monomial(n, 2))
            }),
            n in 1u32..=4,
        ) {
            prop_assert_eq!(i.contains_symbolic(&m, n).unwrap(), i.contains_symbolic_by_quotients(&m, n).unwrap());
        }

        #[test]
        fn symbolic_power_structure(i in arb_squarefree(6, 6), n in 1u32..=3) {
            let sym = i.symbolic_power(n).unwrap();
            for g in sym.generators() {
                prop_assert!(i.contains_symbolic(g, n).unwrap());
                prop_assert!(i.is_minimal_symbolic_generator(g, n).unwrap());
            }
            for g in i.ideal().power(n).unwrap().generators() {
                prop_assert!(i.contains_symbolic(g, n).unwrap());
            }
            // the generic intersection of the prime powers gives the same ideal
            let mut generic = MonomialIdeal::unit(i.nvars()).unwrap();
            for p in i.minimal_primes() {
                let prime = MonomialIdeal::minimalize(i.nvars(), p.iter().map(|v| Monomial::squarefree(i.nvars(), [v]).unwrap())).unwrap();
                generic = generic.intersection(&prime.power(n).unwrap()).unwrap();
            }
            prop_assert_eq!(&sym, &generic);
            if n == 1 {
                prop_assert_eq!(&sym, i.ideal());
            }
        }

        #[test]
        fn prime_powers_are_symbolic(n_vars in 1usize..=5, n in 1u32..=4) {
            let prime = MonomialIdeal::minimalize(n_vars, (1..=n_vars).map(|v| Monomial::squarefree(n_vars, [v]).unwrap())).unwrap();
            let i = SquarefreeIdeal::new(prime.clone()).unwrap();
            prop_assert_eq!(i.symbolic_power(n).unwrap(), prime.power(n).unwrap());
        }

        #[test]
        fn alpha_matches_brute_force(i in arb_squarefree(5, 5), m in 1u32..=3) {
            let alpha = i.alpha_symbolic(m).unwrap();
            prop_assert_eq!(alpha, brute_alpha(i.minimal_primes(), i.nvars(), m));
            prop_assert_eq!(alpha, i.symbolic_power(m).unwrap().alpha().unwrap());
            let w = i.alpha_symbolic_witness(m).unwrap();
            prop_assert!(i.contains_symbolic(&w, m).unwrap());
        }

        #[test]
        fn waldschmidt_sandwich(i in arb_squarefree(6, 5)) {
            let w = i.waldschmidt_bounds(4).unwrap();
            prop_assert!(w.lp_value <= w.upper_bound);
            for &(a, alpha_a) in &w.samples {
                for &(b, alpha_b) in &w.samples {
                    if let Some(&(_, s)) = w.samples.iter().find(|&&(c, _)| c == a + b) {
                        prop_assert!(s <= alpha_a + alpha_b);
                    }
                }
            }
        }

        #[test]
        fn equality_witnesses_are_genuine(i in arb_squarefree(6, 6), n in 2u32..=3) {
            let r = i.equality_check(n).unwrap();
            if let Some(w) = &r.witness {
                prop_assert!(i.contains_symbolic(w, n).unwrap());
                prop_assert!(!i.ideal().contains_in_power(w, n).unwrap());
            } else {
                prop_assert_eq!(i.symbolic_power(n).unwrap(), i.ideal().power(n).unwrap());
            }
        }
    }
}
