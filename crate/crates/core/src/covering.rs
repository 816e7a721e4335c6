//! Integer covering and packing programs over 0/1 matrices, their LP
//! relaxation, and scans for weight vectors where the two optima differ.
//!
//! Rows are edges and columns are vertices. For weights `c >= 0`:
//! - cover: `τ_c = min { c·x : A x >= 1, x ∈ N^n }`
//! - packing: `ν_c = max { 1·y : yᵀA <= c, y ∈ N^m }`
//!
//! and `ν_c <= LP_c <= τ_c` by weak duality.

use serde::{Deserialize, Serialize};

use crate::error::{guard, Error, Result};
use crate::hypergraph::{min_weight_hitting_set, Hypergraph};
use crate::lp::{LinearProgram, Rational};
use crate::par::Exec;
use crate::symbolic::{EqualityReport, SquarefreeIdeal};

pub const MAX_SCAN_COLUMNS: usize = 12;
pub const MAX_SCAN_WEIGHT: u32 = 3;
/// Gap certificates are re-derived by exhaustive search up to this many columns.
pub const EXHAUSTIVE_COLUMNS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverProgram {
    rows: Vec<Vec<u8>>,
    weights: Vec<u32>,
    #[serde(skip)]
    masks: Vec<u64>,
}

impl CoverProgram {
    pub fn new(rows: Vec<Vec<u8>>, weights: Vec<u32>) -> Result<Self> {
        let columns = weights.len();
        if columns > 64 {
            return Err(Error::InvalidProgram(format!("{columns} columns exceed the maximum of 64")));
        }
        let mut masks = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != columns {
                return Err(Error::InvalidProgram(format!("row {i} has {} entries, expected {columns}", row.len())));
            }
            if row.iter().any(|&v| v > 1) {
                return Err(Error::InvalidProgram(format!("row {i} is not 0/1")));
            }
            let mask = row.iter().enumerate().filter(|(_, &v)| v == 1).fold(0u64, |acc, (j, _)| acc | 1 << j);
            if mask == 0 {
                return Err(Error::InvalidProgram(format!("row {i} is zero")));
            }
            masks.push(mask);
        }
        Ok(CoverProgram { rows, weights, masks })
    }

    /// Incidence matrix of `h` with the given vertex weights.
    pub fn from_hypergraph(h: &Hypergraph, weights: Vec<u32>) -> Result<Self> {
        Self::new(h.incidence_matrix(), weights)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn columns(&self) -> usize {
        self.weights.len()
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != self.columns() {
            return Err(Error::InvalidProgram("weight length differs from column count".into()));
        }
        Ok(CoverProgram { rows: self.rows.clone(), weights, masks: self.masks.clone() })
    }

    /// `τ` and an optimal 0/1 `x`. Restricting to 0/1 loses nothing: lowering
    /// any `x_j > 1` to 1 keeps every row covered and never raises the cost.
    pub fn solve_cover(&self) -> CoverSolution {
        let (optimum, mask) = min_weight_hitting_set(&self.masks, &self.weights);
        let x = (0..self.columns()).map(|j| (mask >> j & 1) as u8).collect();
        CoverSolution { optimum, x }
    }

    /// `ν` and an optimal `y`.
    pub fn solve_packing(&self) -> PackingSolution {
        let tau = self.solve_cover().optimum;
        max_packing(&self.masks, &self.weights, tau)
    }

    /// `ν <= LP <= τ` with the exact LP optimum of the cover relaxation.
    pub fn lp_gap(&self) -> Result<LpGap> {
        let tau = self.solve_cover().optimum;
        let nu = max_packing(&self.masks, &self.weights, tau).optimum;
        let rows: Vec<Vec<i64>> = self.rows.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
        let costs: Vec<i64> = self.weights.iter().map(|&w| w as i64).collect();
        let lp = LinearProgram::from_integers(&rows, &vec![1; rows.len()], &costs)?.solve()?.value;
        if Rational::from_integer(nu.into()) > lp || lp > Rational::from_integer(tau.into()) {
            return Err(Error::Conformance(format!("weak duality violated: ν={nu}, LP={lp}, τ={tau}")));
        }
        Ok(LpGap { lp, tau, nu })
    }

    /// Minimum cover by trying every 0/1 vector.
    pub fn exhaustive_cover(&self) -> Result<u64> {
        guard("column count", self.columns(), 20)?;
        let n = self.columns();
        Ok((0u64..1 << n)
            .filter(|&s| self.masks.iter().all(|r| r & s != 0))
            .map(|s| (0..n).filter(|j| s >> j & 1 == 1).map(|j| self.weights[j] as u64).sum())
            .min()
            .unwrap_or(0))
    }

    /// Maximum packing by enumerating every feasible `y`.
    pub fn exhaustive_packing(&self) -> Result<u64> {
        guard("row count", self.masks.len(), 16)?;
        fn walk(rows: &[u64], caps: &mut [u32]) -> u64 {
            let Some((&row, rest)) = rows.split_first() else {
                return 0;
            };
            let cols: Vec<usize> = (0..caps.len()).filter(|j| row >> j & 1 == 1).collect();
            let top = cols.iter().map(|&j| caps[j]).min().unwrap_or(0);
            let mut best = 0;
            for y in 0..=top {
                cols.iter().for_each(|&j| caps[j] -= y);
                best = best.max(y as u64 + walk(rest, caps));
                cols.iter().for_each(|&j| caps[j] += y);
            }
            best
        }
        Ok(walk(&self.masks, &mut self.weights.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSolution {
    pub optimum: u64,
    pub x: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingSolution {
    pub optimum: u64,
    pub y: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LpGap {
    #[serde(serialize_with = "ser_q")]
    pub lp: Rational,
    pub tau: u64,
    pub nu: u64,
}

fn ser_q<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Branch and bound over `y`, rows in index order, larger values first.
/// `ceiling` is a known upper bound (normally `τ`); reaching it ends the search.
fn max_packing(rows: &[u64], caps: &[u32], ceiling: u64) -> PackingSolution {
    let mut search = PackingSearch {
        rows,
        ceiling,
        caps: caps.to_vec(),
        y: vec![0; rows.len()],
        best: 0,
        best_y: vec![0; rows.len()],
    };
    search.descend(0, 0);
    PackingSolution { optimum: search.best, y: search.best_y }
}

struct PackingSearch<'a> {
    rows: &'a [u64],
    ceiling: u64,
    caps: Vec<u32>,
    y: Vec<u32>,
    best: u64,
    best_y: Vec<u32>,
}

impl PackingSearch<'_> {
    fn row_room(&self, row: u64) -> u32 {
        bits(row).map(|j| self.caps[j]).min().unwrap_or(0)
    }

    /// Upper bound on what rows `idx..` can still add: the smaller of the
    /// summed per-row room and the cheapest cover of the live rows under the
    /// residual capacities.
    fn bound(&self, idx: usize) -> u64 {
        let live: Vec<u64> = self.rows[idx..].iter().copied().filter(|&r| self.row_room(r) > 0).collect();
        let room: u64 = live.iter().map(|&r| self.row_room(r) as u64).sum();
        if live.len() <= 1 {
            return room;
        }
        room.min(min_weight_hitting_set(&live, &self.caps).0)
    }

    fn descend(&mut self, idx: usize, total: u64) {
        if total > self.best {
            self.best = total;
            self.best_y.clone_from(&self.y);
        }
        if idx == self.rows.len() || self.best >= self.ceiling {
            return;
        }
        if total + self.bound(idx) <= self.best {
            return;
        }
        let row = self.rows[idx];
        let top = self.row_room(row);
        for v in (0..=top).rev() {
            bits(row).for_each(|j| self.caps[j] -= v);
            self.y[idx] = v;
            self.descend(idx + 1, total + v as u64);
            self.y[idx] = 0;
            bits(row).for_each(|j| self.caps[j] += v);
            if self.best >= self.ceiling {
                return;
            }
        }
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

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapCertificate {
    pub weights: Vec<u32>,
    pub tau: u64,
    pub nu: u64,
    #[serde(serialize_with = "ser_q")]
    pub lp: Rational,
    /// Both optima re-derived by exhaustive search (`None` above the size limit).
    pub exhaustive_agrees: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanVerdict {
    Gap,
    /// Necessary condition only: no gap among the tested weights.
    NoGapFound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MengerianReport {
    pub c_max: u32,
    pub weights_tested: u64,
    pub verdict: ScanVerdict,
    pub gap: Option<GapCertificate>,
    pub equality_cross_check: Option<Vec<EqualityReport>>,
    pub notes: Vec<String>,
}

/// Certificate for one weight vector, or `None` if `ν = τ` there.
pub fn weight_gap(program: &CoverProgram) -> Result<Option<GapCertificate>> {
    let tau = program.solve_cover().optimum;
    let nu = max_packing(&program.masks, &program.weights, tau).optimum;
    if nu == tau {
        return Ok(None);
    }
    let gap = program.lp_gap()?;
    let exhaustive_agrees = (program.columns() <= EXHAUSTIVE_COLUMNS)
        .then(|| Ok::<_, Error>(program.exhaustive_cover()? == tau && program.exhaustive_packing()? == nu))
        .transpose()?;
    if exhaustive_agrees == Some(false) {
        return Err(Error::Conformance(format!("solvers disagree with exhaustive search at {:?}", program.weights)));
    }
    Ok(Some(GapCertificate { weights: program.weights.clone(), tau, nu, lp: gap.lp, exhaustive_agrees }))
}

/// First weight vector in `{0..=c_max}^n`, in lexicographic order, where the
/// two optima differ. Returns the scan position and the certificate.
pub fn scan_weights(program: &CoverProgram, c_max: u32, exec: Exec) -> Result<(u64, Option<GapCertificate>)> {
    let n = program.columns();
    guard("column count", n, MAX_SCAN_COLUMNS)?;
    guard("weight bound", c_max as usize, MAX_SCAN_WEIGHT as usize)?;
    let base = c_max as u64 + 1;
    let total = base.pow(n as u32);
    let hit = exec.find_first_index(0..total, |index| {
        let weights = lex_weights(index, n, base);
        let tau = min_weight_hitting_set(&program.masks, &weights).0;
        let nu = max_packing(&program.masks, &weights, tau).optimum;
        (nu != tau).then_some((index, weights))
    });
    match hit {
        None => Ok((total, None)),
        Some((index, weights)) => Ok((index + 1, weight_gap(&program.with_weights(weights)?)?)),
    }
}

fn lex_weights(mut index: u64, n: usize, base: u64) -> Vec<u32> {
    let mut w = vec![0u32; n];
    for slot in w.iter_mut().rev() {
        *slot = (index % base) as u32;
        index /= base;
    }
    w
}

/// Searches `c ∈ {0..=c_max}^n` for a weight with `ν_c < τ_c`. Finding none
/// does not prove the hypergraph Mengerian. With `cross_check_up_to = Some(N)`
/// the verdict is compared against `I^(n) = I^n` for `n <= N`.
pub fn mengerian_scan(h: &Hypergraph, c_max: u32, cross_check_up_to: Option<u32>) -> Result<MengerianReport> {
    mengerian_scan_with(h, c_max, cross_check_up_to, Exec::default())
}

pub fn mengerian_scan_with(
    h: &Hypergraph,
    c_max: u32,
    cross_check_up_to: Option<u32>,
    exec: Exec,
) -> Result<MengerianReport> {
    guard("vertex count", h.vertex_count(), MAX_SCAN_COLUMNS)?;
    let mut notes = Vec::new();
    let (weights_tested, gap) = if h.edge_count() == 0 {
        (1, None)
    } else {
        let program = CoverProgram::from_hypergraph(h, vec![0; h.vertex_count()])?;
        scan_weights(&program, c_max, exec)?
    };
    let verdict = if gap.is_some() { ScanVerdict::Gap } else { ScanVerdict::NoGapFound };
    if verdict == ScanVerdict::NoGapFound {
        notes.push(format!("no gap for weights up to {c_max}; this is not a proof of the Mengerian property"));
    }
    let equality_cross_check = match cross_check_up_to {
        Some(up_to) if h.edge_count() > 0 => {
            let reports = SquarefreeIdeal::from_hypergraph(h)?.equality_up_to(up_to, true)?;
            let fails = reports.iter().any(|r| !r.equal);
            match (fails, verdict) {
                (true, ScanVerdict::NoGapFound) => notes.push(format!(
                    "equality fails by n = {up_to} but no gap was found with weights up to {c_max}: the weight bound is insufficient"
                )),
                (false, ScanVerdict::Gap) => notes.push(format!(
                    "a gap exists but equality holds up to n = {up_to}: the equality budget is insufficient"
                )),
                _ => {}
            }
            Some(reports)
        }
        _ => None,
    };
    Ok(MengerianReport { c_max, weights_tested, verdict, gap, equality_cross_check, notes })
}

/// Matrix of cyclic 3-windows: row `i` holds columns `i-2, i-1, i` mod `p`,
/// so row 1 is `{1, p-1, p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApplicationMatrix {
    pub rows: Vec<Vec<u8>>,
    pub columns: usize,
    pub warnings: Vec<String>,
}

pub fn application_matrix_cycle(p: usize) -> Result<ApplicationMatrix> {
    if p < 3 {
        return Err(Error::Precondition("the cyclic matrix needs p >= 3".into()));
    }
    guard("order", p, 64)?;
    let rows: Vec<Vec<u8>> = (0..p)
        .map(|i| {
            let mut row = vec![0u8; p];
            for back in 0..3 {
                row[(i + p - back) % p] = 1;
            }
            row
        })
        .collect();
    let mut warnings = Vec::new();
    if p == 3 {
        warnings.push("p = 3: all three windows are {1,2,3}; the rows are duplicates".into());
    }
    Ok(ApplicationMatrix { rows, columns: p, warnings })
}

/// Reading of the last row of the banded `p × (p+1)` matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathPattern {
    /// Every row `i` holds columns `max(1, i-2)..=i`; column `p+1` stays empty.
    #[default]
    Band,
    /// Rows `1..p-1` as in `Band`, and row `p` is the single column `p+1`.
    TailSingleton,
}

pub fn application_matrix_path(p: usize, pattern: PathPattern) -> Result<ApplicationMatrix> {
    if p < 3 {
        return Err(Error::Precondition("the band matrix needs p >= 3".into()));
    }
    guard("order", p + 1, 64)?;
    let band = |i: usize| -> Vec<u8> { (1..=p + 1).map(|j| (j + 2 >= i && j <= i) as u8).collect() };
    let mut rows: Vec<Vec<u8>> = (1..=p).map(band).collect();
    let mut warnings = Vec::new();
    match pattern {
        PathPattern::Band => warnings.push(format!("band reading: column {} is empty", p + 1)),
        PathPattern::TailSingleton => {
            rows[p - 1] = (1..=p + 1).map(|j| (j == p + 1) as u8).collect();
            warnings.push("tail-singleton reading: the last row is the single column p+1".into());
        }
    }
    Ok(ApplicationMatrix { rows, columns: p + 1, warnings })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApplicationReport {
    pub which: u8,
    pub p: usize,
    pub a_max: u32,
    pub pattern: Option<PathPattern>,
    pub weights_tested: u64,
    pub gap: Option<GapCertificate>,
    /// What the statement predicts: equality for every tested weight.
    pub expected_equality: bool,
    pub matches: bool,
    pub warnings: Vec<String>,
}

/// Scans the cyclic matrix; equality is expected exactly for `p ∈ {3, 6, 9}`.
pub fn application1_check(p: usize, a_max: u32) -> Result<ApplicationReport> {
    application1_check_with(p, a_max, Exec::default())
}

pub fn application1_check_with(p: usize, a_max: u32, exec: Exec) -> Result<ApplicationReport> {
    guard("order", p, 12)?;
    guard("weight bound", a_max as usize, 2)?;
    let m = application_matrix_cycle(p)?;
    let program = CoverProgram::new(m.rows, vec![0; p])?;
    let (weights_tested, gap) = scan_weights(&program, a_max, exec)?;
    let expected_equality = matches!(p, 3 | 6 | 9);
    Ok(ApplicationReport {
        which: 1,
        p,
        a_max,
        pattern: None,
        weights_tested,
        matches: expected_equality == gap.is_none(),
        gap,
        expected_equality,
        warnings: m.warnings,
    })
}

/// Scans the band matrix; equality is expected for every `p`.
pub fn application2_check(p: usize, a_max: u32, pattern: PathPattern) -> Result<ApplicationReport> {
    application2_check_with(p, a_max, pattern, Exec::default())
}

pub fn application2_check_with(p: usize, a_max: u32, pattern: PathPattern, exec: Exec) -> Result<ApplicationReport> {
    guard("order", p + 1, MAX_SCAN_COLUMNS)?;
    guard("weight bound", a_max as usize, 2)?;
    let m = application_matrix_path(p, pattern)?;
    let program = CoverProgram::new(m.rows, vec![0; p + 1])?;
    let (weights_tested, gap) = scan_weights(&program, a_max, exec)?;
    Ok(ApplicationReport {
        which: 2,
        p,
        a_max,
        pattern: Some(pattern),
        weights_tested,
        matches: gap.is_none(),
        gap,
        expected_equality: true,
        warnings: m.warnings,
    })
}
