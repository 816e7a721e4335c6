use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported variable universe. Supports are cached as `u64` masks.
pub const MAX_VARS: usize = 64;

/// A monomial `x^a` over a fixed universe of variables `x1..xn`.
///
/// Exponents are stored densely; the degree and the support mask are cached.
/// Ordering is graded lexicographic with `x1 > x2 > ... > xn`, ascending, so
/// lower degrees come first and within a degree `x1x2` precedes `x1x3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
    support: u64,
}

pub(crate) fn check_universe(nvars: usize) -> Result<()> {
    if nvars > MAX_VARS {
        Err(Error::UniverseTooLarge(nvars))
    } else {
        Ok(())
    }
}

pub(crate) fn same_universe(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(Error::UniverseMismatch { left, right })
    } else {
        Ok(())
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        check_universe(exps.len())?;
        let mut degree: u32 = 0;
        for &e in &exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Self::assemble(exps.into_boxed_slice(), degree))
    }

    /// The monomial `1` on `nvars` variables.
    pub fn one(nvars: usize) -> Result<Self> {
        Self::new(vec![0; nvars])
    }

    /// Product of the listed (1-based) variables, each to the first power.
    pub fn squarefree(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut exps = vec![0u32; nvars];
        for v in vars {
            if v == 0 || v > nvars {
                return Err(Error::VariableOutOfRange { index: v, size: nvars });
            }
            exps[v - 1] = 1;
        }
        Self::new(exps)
    }

    /// Builds a squarefree monomial from a 0-based support mask.
    pub(crate) fn from_mask(nvars: usize, mask: u64) -> Self {
        debug_assert!(nvars <= MAX_VARS);
        let exps: Vec<u32> = (0..nvars).map(|i| ((mask >> i) & 1) as u32).collect();
        let degree = mask.count_ones();
        Self::assemble(exps.into_boxed_slice(), degree)
    }

    /// Trusted constructor for internal arithmetic whose degree cannot overflow.
    pub(crate) fn from_exps_unchecked(exps: Box<[u32]>) -> Self {
        let degree = exps.iter().sum();
        Self::assemble(exps, degree)
    }

    fn assemble(exps: Box<[u32]>, degree: u32) -> Self {
        let support = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i));
        Monomial { exps, degree, support }
    }

    /// Parses `1`, `x3`, `x1^2*x2*x3` (also accepts `x1^2x2x3`).
    pub fn parse(nvars: usize, text: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("cannot parse monomial {text:?}"));
        let mut exps = vec![0u32; nvars];
        let compact: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if compact == "1" {
            return Self::new(exps);
        }
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            rest = rest.strip_prefix('x').ok_or_else(bad)?;
            let digits = rest.chars().take_while(char::is_ascii_digit).count();
            let var: usize = rest[..digits].parse().map_err(|_| bad())?;
            rest = &rest[digits..];
            let mut power = 1u32;
            if let Some(after) = rest.strip_prefix('^') {
                let digits = after.chars().take_while(char::is_ascii_digit).count();
                power = after[..digits].parse().map_err(|_| bad())?;
                rest = &after[digits..];
            }
            if var == 0 || var > nvars {
                return Err(Error::VariableOutOfRange { index: var, size: nvars });
            }
            exps[var - 1] = exps[var - 1].checked_add(power).ok_or(Error::ExponentOverflow)?;
        }
        Self::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of the 1-based variable `var`.
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Support as a 0-based bit mask.
    pub fn support_mask(&self) -> u64 {
        self.support
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        same_universe(self.nvars(), other.nvars())?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.support & !other.support == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        same_universe(self.nvars(), other.nvars())?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u32]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exps_unchecked(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        same_universe(self.nvars(), other.nvars())?;
        let exps: Box<[u32]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        Ok(Monomial::from_exps_unchecked(exps))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        same_universe(self.nvars(), other.nvars())?;
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u32>>>()?;
        Monomial::new(exps)
    }

    /// `self / divisor` when the division is exact.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Option<Monomial>> {
        if !divisor.divides(self)? {
            return Ok(None);
        }
        let exps: Box<[u32]> = self.exps.iter().zip(divisor.exps.iter()).map(|(a, b)| a - b).collect();
        Ok(Some(Monomial::from_exps_unchecked(exps)))
    }

    /// `self / gcd(self, x_var)`: lowers the exponent of `var` by one if present.
    pub fn colon_variable(&self, var: usize) -> Result<Monomial> {
        if var == 0 || var > self.nvars() {
            return Err(Error::VariableOutOfRange { index: var, size: self.nvars() });
        }
        let mut exps = self.exps.clone();
        exps[var - 1] = exps[var - 1].saturating_sub(1);
        Ok(Monomial::from_exps_unchecked(exps))
    }

    /// Multiplies by a single variable.
    pub fn times_variable(&self, var: usize) -> Result<Monomial> {
        if var == 0 || var > self.nvars() {
            return Err(Error::VariableOutOfRange { index: var, size: self.nvars() });
        }
        let mut exps = self.exps.to_vec();
        exps[var - 1] = exps[var - 1].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Monomial::new(exps)
    }

    /// Sum of the exponents over a 0-based variable mask.
    pub(crate) fn weight_on(&self, mask: u64) -> u32 {
        let mut rest = mask & self.support;
        let mut total = 0;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            total += self.exps[i];
            rest &= rest - 1;
        }
        total
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serializes as the display string, e.g. `"x1^2*x2"`.
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, s: &str) -> Monomial {
        Monomial::parse(n, s).unwrap()
    }

    #[test]
    fn divides_examples() {
        assert!(m(3, "x1x2").divides(&m(3, "x1^2x2x3")).unwrap());
        assert!(!m(3, "x1^2").divides(&m(3, "x1x2")).unwrap());
        assert!(Monomial::one(3).unwrap().divides(&m(3, "x2^5")).unwrap());
        assert!(matches!(
            m(3, "x1").divides(&m(4, "x1")),
            Err(Error::UniverseMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(m(3, "x1x2").lcm(&m(3, "x2x3")).unwrap(), m(3, "x1x2x3"));
        assert_eq!(m(3, "x1^2x3").lcm(&Monomial::one(3).unwrap()).unwrap(), m(3, "x1^2x3"));
        assert_eq!(m(3, "x1^2").lcm(&m(3, "x1")).unwrap(), m(3, "x1^2"));
    }

    #[test]
    fn grlex_order() {
        let mut v = [m(3, "x2x3"), m(3, "x1"), m(3, "x1x3"), m(3, "x1x2"), m(3, "x1^2")];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["x1", "x1^2", "x1*x2", "x1*x3", "x2*x3"]);
    }

    #[test]
    fn overflow_is_loud() {
        let big = Monomial::new(vec![u32::MAX, 0]).unwrap();
        assert_eq!(big.mul(&big), Err(Error::ExponentOverflow));
        assert_eq!(Monomial::new(vec![u32::MAX, 1]), Err(Error::ExponentOverflow));
    }

    #[test]
    fn parse_round_trips_display() {
        for s in ["1", "x1", "x1^2*x2*x3", "x4^3*x7"] {
            assert_eq!(m(7, s).to_string(), s);
        }
        assert!(Monomial::parse(3, "x4").is_err());
        assert!(Monomial::parse(3, "y1").is_err());
    }
}
