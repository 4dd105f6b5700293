//! Digit/carry arithmetic, validation and classification of palintiples.
//!
//! An `(n, b)`-palintiple is a base-`b` number equal to `n` times its own
//! digit reversal. Digits are stored least significant first (`digits[j]` is
//! `d_j`) and carries as `c_0 ..= c_{k+1}` with both zero sentinels, so that
//! the schoolbook recurrence
//!
//! ```text
//! n·d_{k−j} + c_j = d_j + b·c_{j+1}        (0 <= j <= k)
//! ```
//!
//! and its closed-form inverse can be indexed without bounds juggling.
//! Everything that crosses the crate boundary (literals, JSON) is most
//! significant first.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PalintipleError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed digits: {0}")]
    MalformedDigits(String),
    #[error("not a palintiple: {0}")]
    NotAPalintiple(String),
    #[error("digit d_{index} is not integral")]
    NonIntegral { index: usize },
    #[error("digit d_{index} = {value} is out of range")]
    OutOfRange { index: usize, value: i128 },
    #[error("not eligible: {0}")]
    NotEligible(String),
    #[error("cannot parse palintiple literal {0:?}")]
    Parse(String),
}

/// Relaxations of the default definition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Relaxations {
    /// Permit `d_0 = 0` (the reversal then has fewer digits).
    pub allow_trailing_zero: bool,
    /// Permit `n = 1` (palindromes).
    pub allow_unit_multiplier: bool,
}

fn check_parameters(n: u64, b: u64, relax: Relaxations) -> Result<(), PalintipleError> {
    let min_n = if relax.allow_unit_multiplier { 1 } else { 2 };
    if n < min_n {
        return Err(PalintipleError::InvalidParameters(format!(
            "multiplier {n} must be at least {min_n}"
        )));
    }
    if b <= n {
        return Err(PalintipleError::InvalidParameters(format!(
            "base {b} must exceed multiplier {n}"
        )));
    }
    Ok(())
}

fn check_digits(b: u64, digits: &[u64], relax: Relaxations) -> Result<(), PalintipleError> {
    if digits.len() < 2 {
        return Err(PalintipleError::MalformedDigits("need at least two digits".into()));
    }
    if let Some((j, d)) = digits.iter().enumerate().find(|(_, d)| **d >= b) {
        return Err(PalintipleError::MalformedDigits(format!("d_{j} = {d} is not a base-{b} digit")));
    }
    if digits[digits.len() - 1] == 0 {
        return Err(PalintipleError::MalformedDigits("leading digit is zero".into()));
    }
    if digits[0] == 0 && !relax.allow_trailing_zero {
        return Err(PalintipleError::MalformedDigits("trailing digit d_0 is zero".into()));
    }
    Ok(())
}

/// Runs the schoolbook multiplication of the reversal by `n` and returns the
/// carries `c_0 ..= c_{k+1}`, failing as soon as a produced digit differs.
///
/// `digits` are least significant first.
pub fn carries_from_digits(n: u64, b: u64, digits: &[u64]) -> Result<Vec<u64>, PalintipleError> {
    carries_from_digits_relaxed(n, b, digits, Relaxations::default())
}

pub fn carries_from_digits_relaxed(
    n: u64,
    b: u64,
    digits: &[u64],
    relax: Relaxations,
) -> Result<Vec<u64>, PalintipleError> {
    check_parameters(n, b, relax)?;
    check_digits(b, digits, relax)?;
    let k = digits.len() - 1;
    let mut carries = Vec::with_capacity(k + 2);
    carries.push(0u64);
    for j in 0..=k {
        let t = n as u128 * digits[k - j] as u128 + carries[j] as u128;
        let (q, r) = (t / b as u128, t % b as u128);
        if r != digits[j] as u128 {
            return Err(PalintipleError::NotAPalintiple(format!(
                "position {j}: n·d_{} + c_{j} = {t} leaves digit {r}, expected {}",
                k - j,
                digits[j]
            )));
        }
        // n·d + c <= n(b−1) + (n−1) < n·b, so the carry is below n
        debug_assert!(q < n as u128 || n == 1);
        carries.push(q as u64);
    }
    if carries[k + 1] != 0 {
        return Err(PalintipleError::NotAPalintiple(format!(
            "final carry c_{} = {} is not zero",
            k + 1,
            carries[k + 1]
        )));
    }
    Ok(carries)
}

/// Closed-form digits from a carry sequence `c_0 ..= c_{k+1}`:
///
/// ```text
/// d_j = (n·b·c_{k−j+1} − n·c_{k−j} + b·c_{j+1} − c_j) / (n² − 1)
/// ```
///
/// The result (least significant first) is re-validated through
/// [`carries_from_digits`].
pub fn digits_from_carries(n: u64, b: u64, carries: &[u64]) -> Result<Vec<u64>, PalintipleError> {
    check_parameters(n, b, Relaxations::default())?;
    if carries.len() < 3 {
        return Err(PalintipleError::InvalidParameters("need carries c_0..c_{k+1} with k >= 1".into()));
    }
    if carries[0] != 0 || carries[carries.len() - 1] != 0 {
        return Err(PalintipleError::InvalidParameters("carry sentinels c_0 and c_{k+1} must be zero".into()));
    }
    if let Some(c) = carries.iter().find(|c| **c >= n) {
        return Err(PalintipleError::InvalidParameters(format!("carry {c} is not below the multiplier {n}")));
    }
    let k = carries.len() - 2;
    let (ni, bi) = (n as i128, b as i128);
    let denom = ni * ni - 1;
    let c = |i: usize| carries[i] as i128;
    let mut digits = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let num = ni * bi * c(k - j + 1) - ni * c(k - j) + bi * c(j + 1) - c(j);
        if num % denom != 0 {
            return Err(PalintipleError::NonIntegral { index: j });
        }
        let d = num / denom;
        let end = j == 0 || j == k;
        if d < 0 || d >= bi || (end && d == 0) {
            return Err(PalintipleError::OutOfRange { index: j, value: d });
        }
        digits.push(d as u64);
    }
    let check = carries_from_digits(n, b, &digits)?;
    if check != carries {
        return Err(PalintipleError::NotAPalintiple("closed-form digits do not reproduce the carries".into()));
    }
    Ok(digits)
}

/// Exact value of a digit sequence (least significant first).
pub fn value_of(base: u64, digits_lsf: &[u64]) -> BigUint {
    digits_lsf
        .iter()
        .rev()
        .fold(BigUint::from(0u32), |acc, d| acc * base + *d)
}

/// Carry-pattern class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PalintipleClass {
    Symmetric,
    ShiftedSymmetric,
    Asymmetric,
}

impl fmt::Display for PalintipleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PalintipleClass::Symmetric => "symmetric",
            PalintipleClass::ShiftedSymmetric => "shifted-symmetric",
            PalintipleClass::Asymmetric => "asymmetric",
        })
    }
}

/// `b = (n+1)·q` and `c_j = (n−1)·r_j` for a binary sequence `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricProfile {
    pub q: u64,
    /// `r_0 ..= r_k`.
    pub r: Vec<u8>,
}

/// A validated `(n, b)`-palintiple. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Palintiple {
    multiplier: u64,
    base: u64,
    digits: Vec<u64>,
    carries: Vec<u64>,
}

impl Palintiple {
    /// Builds from most-significant-first digits.
    pub fn new(multiplier: u64, base: u64, digits_msf: &[u64]) -> Result<Self, PalintipleError> {
        let lsf: Vec<u64> = digits_msf.iter().rev().copied().collect();
        Self::from_lsf(multiplier, base, lsf)
    }

    pub fn from_lsf(multiplier: u64, base: u64, digits: Vec<u64>) -> Result<Self, PalintipleError> {
        Self::from_lsf_relaxed(multiplier, base, digits, Relaxations::default())
    }

    pub fn from_lsf_relaxed(
        multiplier: u64,
        base: u64,
        digits: Vec<u64>,
        relax: Relaxations,
    ) -> Result<Self, PalintipleError> {
        let carries = carries_from_digits_relaxed(multiplier, base, &digits, relax)?;
        let p = Palintiple { multiplier, base, digits, carries };
        debug_assert!(p.value() == p.reversal_value() * p.multiplier);
        Ok(p)
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// Number of digits, `k + 1`.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the leading digit.
    pub fn k(&self) -> usize {
        self.digits.len() - 1
    }

    /// `d_0 ..= d_k`.
    pub fn digits_lsf(&self) -> &[u64] {
        &self.digits
    }

    /// `d_k ..= d_0`.
    pub fn digits_msf(&self) -> Vec<u64> {
        self.digits.iter().rev().copied().collect()
    }

    pub fn digit(&self, j: usize) -> u64 {
        self.digits[j]
    }

    /// `d_j`, or zero for indices outside `0..=k`.
    pub fn digit_or_zero(&self, j: isize) -> u64 {
        if j < 0 {
            0
        } else {
            self.digits.get(j as usize).copied().unwrap_or(0)
        }
    }

    /// `c_0 ..= c_{k+1}`.
    pub fn carries(&self) -> &[u64] {
        &self.carries
    }

    pub fn carry(&self, j: usize) -> u64 {
        self.carries[j]
    }

    /// `c_j`, or zero for indices outside `0..=k+1`.
    pub fn carry_or_zero(&self, j: isize) -> u64 {
        if j < 0 {
            0
        } else {
            self.carries.get(j as usize).copied().unwrap_or(0)
        }
    }

    /// `c_k ..= c_0`, the order the literature prints them in.
    pub fn carries_msf(&self) -> Vec<u64> {
        self.carries[..=self.k()].iter().rev().copied().collect()
    }

    pub fn value(&self) -> BigUint {
        value_of(self.base, &self.digits)
    }

    pub fn reversal_value(&self) -> BigUint {
        let rev: Vec<u64> = self.digits.iter().rev().copied().collect();
        value_of(self.base, &rev)
    }

    pub fn classify(&self) -> PalintipleClass {
        classify_carries(&self.carries)
    }

    /// Decomposition of a symmetric palintiple with `(n+1) | b` and carries
    /// in `{0, n−1}`.
    pub fn symmetric_profile(&self) -> Result<SymmetricProfile, PalintipleError> {
        let (n, b) = (self.multiplier, self.base);
        if self.classify() != PalintipleClass::Symmetric {
            return Err(PalintipleError::NotEligible(format!("palintiple is {}", self.classify())));
        }
        if b % (n + 1) != 0 {
            return Err(PalintipleError::NotEligible(format!("{} does not divide {b}", n + 1)));
        }
        let k = self.k();
        let mut r = Vec::with_capacity(k + 1);
        for &c in &self.carries[..=k] {
            match c {
                0 => r.push(0u8),
                c if c == n - 1 => r.push(1u8),
                c => {
                    return Err(PalintipleError::NotEligible(format!("carry {c} is neither 0 nor {}", n - 1)))
                }
            }
        }
        let profile = SymmetricProfile { q: b / (n + 1), r };
        if !profile.is_well_formed() {
            return Err(PalintipleError::NotEligible("carry pattern is not a valid binary profile".into()));
        }
        Ok(profile)
    }

    /// Text literal `d_k,...,d_0@b*n`.
    pub fn literal(&self) -> String {
        format!("{}@{}*{}", join(&self.digits_msf()), self.base, self.multiplier)
    }

    pub fn to_record(&self) -> PalintipleRecord {
        PalintipleRecord {
            multiplier: self.multiplier,
            base: self.base,
            digits: self.digits_msf(),
            carries: self.carries_msf(),
            class: self.classify(),
        }
    }
}

impl fmt::Display for Palintiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl PartialOrd for Palintiple {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by `(n, b, length, value)`.
impl Ord for Palintiple {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.multiplier, self.base, self.digits.len())
            .cmp(&(other.multiplier, other.base, other.digits.len()))
            .then_with(|| self.digits.iter().rev().cmp(other.digits.iter().rev()))
    }
}

/// JSON shape of a palintiple; `carries` are `c_k ..= c_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalintipleRecord {
    pub multiplier: u64,
    pub base: u64,
    pub digits: Vec<u64>,
    pub carries: Vec<u64>,
    pub class: PalintipleClass,
}

impl TryFrom<&PalintipleRecord> for Palintiple {
    type Error = PalintipleError;

    fn try_from(r: &PalintipleRecord) -> Result<Self, Self::Error> {
        let p = Palintiple::new(r.multiplier, r.base, &r.digits)?;
        if p.carries_msf() != r.carries || p.classify() != r.class {
            return Err(PalintipleError::NotAPalintiple("record carries or class disagree with digits".into()));
        }
        Ok(p)
    }
}

pub(crate) fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Parsed but unvalidated `d_k,...,d_0@b*n` literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal {
    pub multiplier: u64,
    pub base: u64,
    /// Most significant first.
    pub digits: Vec<u64>,
}

impl FromStr for Literal {
    type Err = PalintipleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PalintipleError::Parse(s.to_string());
        let (digits, rest) = s.trim().split_once('@').ok_or_else(err)?;
        let (base, mult) = rest.split_once('*').ok_or_else(err)?;
        let digits = parse_list(digits).ok_or_else(err)?;
        let base = base.trim().parse().map_err(|_| err())?;
        let multiplier = mult.trim().parse().map_err(|_| err())?;
        Ok(Literal { multiplier, base, digits })
    }
}

impl Literal {
    pub fn validate(&self) -> Result<Palintiple, PalintipleError> {
        Palintiple::new(self.multiplier, self.base, &self.digits)
    }
}

impl FromStr for Palintiple {
    type Err = PalintipleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<Literal>()?.validate()
    }
}

/// Parses `"3,8,9"` (whitespace tolerant, optional parentheses).
pub fn parse_list(s: &str) -> Option<Vec<u64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return None;
    }
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// Class of a carry sequence `c_0 ..= c_{k+1}`.
pub fn classify_carries(carries: &[u64]) -> PalintipleClass {
    let k = carries.len() - 2;
    if (0..=k).all(|j| carries[j] == carries[k - j]) {
        PalintipleClass::Symmetric
    } else if (0..=k).all(|j| carries[j] == carries[k - j + 1]) {
        PalintipleClass::ShiftedSymmetric
    } else {
        PalintipleClass::Asymmetric
    }
}

impl SymmetricProfile {
    /// Palindromic, zero ends, `r_1 = r_{k−1} = 1`, and no isolated interior
    /// zero or one.
    pub fn is_well_formed(&self) -> bool {
        let r = &self.r;
        let k = r.len() - 1;
        if k < 2 || r[0] != 0 || r[k] != 0 || r[1] != 1 || r[k - 1] != 1 {
            return false;
        }
        if (0..=k).any(|j| r[j] != r[k - j]) {
            return false;
        }
        (1..k).all(|j| r[j] == r[j - 1] || r[j] == r[j + 1])
    }

    /// `r_j` with zero outside `0..=k`.
    pub fn r_or_zero(&self, j: isize) -> u8 {
        if j < 0 {
            0
        } else {
            self.r.get(j as usize).copied().unwrap_or(0)
        }
    }
}

/// One named invariant check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && !c.passed)
    }
}

/// Checks every defining invariant of a candidate without assuming any of
/// them. `carries` (`c_0 ..= c_{k+1}`) default to the schoolbook carries of
/// `n` times the reversal.
pub fn validate(n: u64, b: u64, digits_lsf: &[u64], carries: Option<&[u64]>) -> ValidationReport {
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| checks.push(Check { name, passed, detail });

    let params = n >= 2 && b > n;
    push("parameters", params, format!("n = {n}, b = {b}"));
    let len_ok = digits_lsf.len() >= 2;
    push("length", len_ok, format!("{} digits", digits_lsf.len()));
    let bounded = digits_lsf.iter().all(|d| *d < b);
    push("digit bounds", bounded, format!("all digits below {b}"));
    let ends = len_ok && digits_lsf[0] != 0 && digits_lsf[digits_lsf.len() - 1] != 0;
    push("nonzero end digits", ends, String::new());
    if !len_ok || b == 0 {
        return ValidationReport { checks };
    }

    let k = digits_lsf.len() - 1;
    let carries: Vec<u128> = match carries {
        Some(c) => c.iter().map(|x| *x as u128).collect(),
        None => {
            let mut c = vec![0u128];
            for j in 0..=k {
                let t = n as u128 * digits_lsf[k - j] as u128 + c[j];
                c.push(t / b as u128);
            }
            c
        }
    };
    let shape = carries.len() == k + 2;
    push("carry count", shape, format!("{} carries for {} digits", carries.len(), k + 1));
    if shape {
        let sentinels = carries[0] == 0 && carries[k + 1] == 0;
        push("carry sentinels", sentinels, format!("c_0 = {}, c_{} = {}", carries[0], k + 1, carries[k + 1]));
        let below = carries.iter().all(|c| *c < n.max(1) as u128);
        push("carry bound", below, format!("all carries below {n}"));
        let bad: Vec<usize> = (0..=k)
            .filter(|&j| {
                n as u128 * digits_lsf[k - j] as u128 + carries[j]
                    != digits_lsf[j] as u128 + b as u128 * carries[j + 1]
            })
            .collect();
        push("schoolbook recurrence", bad.is_empty(), format!("failing positions {bad:?}"));
    }
    let lhs = value_of(b, digits_lsf);
    let rev: Vec<u64> = digits_lsf.iter().rev().copied().collect();
    let rhs = value_of(b, &rev) * n;
    push("value identity", lhs == rhs, format!("{lhs} vs {n}·reversal = {rhs}"));
    ValidationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lsf(msf: &[u64]) -> Vec<u64> {
        msf.iter().rev().copied().collect()
    }

    #[test]
    fn carries_of_8712() {
        let c = carries_from_digits(4, 10, &lsf(&[8, 7, 1, 2])).unwrap();
        assert_eq!(c, vec![0, 3, 3, 0, 0]);
    }

    #[test]
    fn carries_of_base_139_instance() {
        let p = Palintiple::new(10, 139, &[28, 25, 108, 113, 2]).unwrap();
        assert_eq!(p.carries_msf(), vec![8, 7, 1, 2, 0]);
        assert_eq!(p.carry(5), 0);
    }

    #[test]
    fn twelve_is_not_a_double_reverse() {
        assert!(matches!(
            carries_from_digits(2, 10, &lsf(&[1, 2])),
            Err(PalintipleError::NotAPalintiple(_))
        ));
    }

    #[test]
    fn base_three_instance_carries() {
        let p = Palintiple::new(2, 3, &[2, 1, 2, 0, 1]).unwrap();
        assert_eq!(p.carries_msf(), vec![0, 1, 1, 1, 0]);
    }

    #[test]
    fn closed_form_digits() {
        assert_eq!(digits_from_carries(4, 10, &[0, 3, 3, 0, 0]).unwrap(), lsf(&[8, 7, 1, 2]));
        assert_eq!(
            digits_from_carries(10, 139, &[0, 2, 1, 7, 8, 0]).unwrap(),
            lsf(&[28, 25, 108, 113, 2])
        );
        assert!(matches!(
            digits_from_carries(3, 10, &[0, 0, 0, 0]),
            Err(PalintipleError::OutOfRange { .. })
        ));
    }

    #[test]
    fn closed_form_rejects_non_integral() {
        // (n² − 1) = 3 does not divide the numerator for d_0 here
        assert!(matches!(
            digits_from_carries(2, 10, &[0, 1, 0]),
            Err(PalintipleError::NonIntegral { .. } | PalintipleError::OutOfRange { .. })
        ));
    }

    #[test]
    fn validation_reports() {
        assert!(validate(4, 10, &lsf(&[8, 7, 1, 2]), None).passed());
        assert!(validate(5, 8, &lsf(&[5, 1, 0, 1]), None).passed());
        let bad = validate(4, 10, &lsf(&[8, 7, 2, 1]), None);
        assert!(!bad.passed());
        assert!(bad.failed("value identity"));
        let wrong_carries = validate(4, 10, &lsf(&[8, 7, 1, 2]), Some(&[0, 3, 2, 0, 0]));
        assert!(wrong_carries.failed("schoolbook recurrence"));
        assert!(!wrong_carries.failed("value identity"));
    }

    #[test]
    fn classes() {
        let sym = Palintiple::new(4, 10, &[8, 7, 1, 2]).unwrap();
        assert_eq!(sym.classify(), PalintipleClass::Symmetric);
        let shifted = Palintiple::new(2, 5, &[3, 1]).unwrap();
        assert_eq!(shifted.classify(), PalintipleClass::ShiftedSymmetric);
        let asym = Palintiple::new(10, 139, &[28, 25, 108, 113, 2]).unwrap();
        assert_eq!(asym.classify(), PalintipleClass::Asymmetric);
    }

    #[test]
    fn profiles() {
        let p = Palintiple::new(4, 10, &[8, 7, 1, 2]).unwrap();
        assert_eq!(p.symmetric_profile().unwrap(), SymmetricProfile { q: 2, r: vec![0, 1, 1, 0] });
        let p = Palintiple::new(9, 10, &[9, 8, 0, 1]).unwrap();
        assert_eq!(p.symmetric_profile().unwrap(), SymmetricProfile { q: 1, r: vec![0, 1, 1, 0] });
        let p = Palintiple::new(2, 5, &[3, 1]).unwrap();
        assert!(matches!(p.symmetric_profile(), Err(PalintipleError::NotEligible(_))));
    }

    #[test]
    fn literal_round_trip() {
        let p: Palintiple = "8,7,1,2@10*4".parse().unwrap();
        assert_eq!(p.literal(), "8,7,1,2@10*4");
        assert!("8,7,1,2@10".parse::<Literal>().is_err());
        assert!("8,7,2,1@10*4".parse::<Palintiple>().is_err());
    }

    #[test]
    fn record_json() {
        let p = Palintiple::new(4, 10, &[8, 7, 1, 2]).unwrap();
        let json = serde_json::to_string(&p.to_record()).unwrap();
        assert_eq!(
            json,
            r#"{"multiplier":4,"base":10,"digits":[8,7,1,2],"carries":[0,3,3,0],"class":"symmetric"}"#
        );
        let back: PalintipleRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Palintiple::try_from(&back).unwrap(), p);
    }

    #[test]
    fn relaxations() {
        assert!(Palintiple::new(1, 10, &[1, 2, 1]).is_err());
        let relax = Relaxations { allow_unit_multiplier: true, ..Default::default() };
        let p = Palintiple::from_lsf_relaxed(1, 10, vec![1, 2, 1], relax).unwrap();
        assert!(p.carries().iter().all(|c| *c == 0));
        let relax = Relaxations { allow_trailing_zero: true, ..Default::default() };
        assert!(Palintiple::from_lsf_relaxed(4, 10, vec![0, 2, 1, 7, 8], relax).is_err());
    }
}
