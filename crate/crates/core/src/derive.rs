//! Derived palintiple families.
//!
//! A derived `(n̂, b̂)`-palintiple has, as its carries, the digits of a
//! lower-base `(n, b)`-palintiple: either as-is or reversed, padded by one
//! zero on the low end (singly derived, `k + 2` digits) or by a zero on both
//! ends (doubly derived, `k + 3` digits). Fixing the carries and `n̂` turns
//! the closed-form digit formula into a set of linear congruences on `b̂`;
//! the solutions form an arithmetic progression `b̂ = s + α·P` and every new
//! digit is affine in `α`.
//!
//! Two independent routes produce families:
//!
//! * [`derive_family`] solves the congruences generically for any mode and
//!   multiplier;
//! * [`theorem_family`] evaluates the closed forms of the named families
//!   (Hoey, Sutcliffe, Pudwell and their reversed counterparts) after checking
//!   their hypotheses.
//!
//! Both are validated by instantiating the first admissible parameters.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{crt_all, gcd, mod_inverse, solve_linear_congruence, Residue};
use crate::instance::{Palintiple, PalintipleClass, PalintipleError};

/// Number of admissible parameters a family is instantiated at before it is
/// returned.
pub const VALIDATION_COUNT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeriveError {
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("carry {carry} is not below the new multiplier {nhat}")]
    CarryTooLarge { carry: u64, nhat: u64 },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("alpha = {alpha} violates the family constraint {constraint}")]
    ConstraintViolated { alpha: i128, constraint: String },
    #[error("internal defect, family instance failed validation: {0}")]
    ValidationFailed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DerivationMode {
    /// Carries `(d_k, …, d_0, 0)`.
    SingleForward,
    /// Carries `(0, d_k, …, d_0, 0)`.
    DoubleForward,
    /// Carries `(d_0, …, d_k, 0)`.
    SingleRho,
    /// Carries `(0, d_0, …, d_k, 0)`.
    DoubleRho,
}

impl DerivationMode {
    pub const ALL: [DerivationMode; 4] = [
        DerivationMode::SingleForward,
        DerivationMode::DoubleForward,
        DerivationMode::SingleRho,
        DerivationMode::DoubleRho,
    ];

    pub fn is_double(self) -> bool {
        matches!(self, DerivationMode::DoubleForward | DerivationMode::DoubleRho)
    }

    pub fn is_rho(self) -> bool {
        matches!(self, DerivationMode::SingleRho | DerivationMode::DoubleRho)
    }

    /// Carry sequence `ĉ_0 ..= ĉ_{K+1}` (sentinels included) that the derived
    /// palintiple must have.
    pub fn carries_for(self, source: &Palintiple) -> Vec<u64> {
        let mut body: Vec<u64> = source.digits_lsf().to_vec();
        if self.is_rho() {
            body.reverse();
        }
        let mut carries = Vec::with_capacity(body.len() + 4);
        carries.push(0);
        carries.extend(body);
        if self.is_double() {
            carries.push(0);
        }
        carries.push(0);
        carries
    }
}

impl fmt::Display for DerivationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivationMode::SingleForward => "single",
            DerivationMode::DoubleForward => "double",
            DerivationMode::SingleRho => "rho-single",
            DerivationMode::DoubleRho => "rho-double",
        })
    }
}

impl FromStr for DerivationMode {
    type Err = DeriveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "single" | "single-forward" => Ok(DerivationMode::SingleForward),
            "double" | "double-forward" => Ok(DerivationMode::DoubleForward),
            "rho-single" | "single-rho" => Ok(DerivationMode::SingleRho),
            "rho-double" | "double-rho" => Ok(DerivationMode::DoubleRho),
            _ => Err(DeriveError::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Hoey,
    Sutcliffe,
    Pudwell,
    RhoHoey,
    RhoSutcliffe,
    RhoPudwell,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Hoey,
        Theorem::Sutcliffe,
        Theorem::Pudwell,
        Theorem::RhoHoey,
        Theorem::RhoSutcliffe,
        Theorem::RhoPudwell,
    ];

    pub fn mode(self) -> DerivationMode {
        match self {
            Theorem::Hoey | Theorem::Sutcliffe => DerivationMode::SingleForward,
            Theorem::Pudwell => DerivationMode::DoubleForward,
            Theorem::RhoHoey | Theorem::RhoSutcliffe => DerivationMode::SingleRho,
            Theorem::RhoPudwell => DerivationMode::DoubleRho,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Hoey => "hoey",
            Theorem::Sutcliffe => "sutcliffe",
            Theorem::Pudwell => "pudwell",
            Theorem::RhoHoey => "rho-hoey",
            Theorem::RhoSutcliffe => "rho-sutcliffe",
            Theorem::RhoPudwell => "rho-pudwell",
        })
    }
}

impl FromStr for Theorem {
    type Err = DeriveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| DeriveError::InvalidArgument(format!("unknown theorem {s:?}")))
    }
}

/// `(a0 + a1·α) / den`, kept in lowest terms with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineValue {
    pub a0: i128,
    pub a1: i128,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub den: i128,
}

fn one() -> i128 {
    1
}

fn is_one(x: &i128) -> bool {
    *x == 1
}

impl AffineValue {
    pub fn new(a0: i128, a1: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = den.signum();
        let (a0, a1, den) = (a0 * sign, a1 * sign, den * sign);
        let g = gcd(gcd(a0, a1), den);
        AffineValue { a0: a0 / g, a1: a1 / g, den: den / g }
    }

    pub fn integer(a0: i128, a1: i128) -> Self {
        AffineValue { a0, a1, den: 1 }
    }

    /// Exact value at `alpha`, or `None` when not an integer.
    pub fn eval(&self, alpha: i128) -> Option<i128> {
        let num = self.a0 + self.a1 * alpha;
        (num % self.den == 0).then(|| num / self.den)
    }

    /// The residue class of `α` for which the value is an integer.
    pub fn integrality(&self) -> Option<Residue> {
        solve_linear_congruence(self.a1, -self.a0, self.den)
    }
}

impl fmt::Display for AffineValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lin = match (self.a0, self.a1) {
            (a0, 0) => a0.to_string(),
            (0, 1) => "α".to_string(),
            (0, a1) => format!("{a1}α"),
            (a0, 1) => format!("{a0}+α"),
            (a0, a1) if a1 < 0 => format!("{a0}{a1}α"),
            (a0, a1) => format!("{a0}+{a1}α"),
        };
        if self.den == 1 {
            f.write_str(&lin)
        } else {
            write!(f, "({lin})/{}", self.den)
        }
    }
}

/// Admissible parameters: `α` in a residue class, within `[min, max]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaConstraint {
    pub residue: i128,
    pub modulus: i128,
    /// Smallest `α >= 0` for which every digit is in range (may be 0).
    pub min: i128,
    /// Largest such `α`, if bounded.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max: Option<i128>,
}

impl AlphaConstraint {
    pub fn class(&self) -> Residue {
        Residue::new(self.residue, self.modulus)
    }

    pub fn admits(&self, alpha: i128, allow_zero: bool) -> bool {
        let floor = if allow_zero { 0 } else { 1 };
        alpha >= floor.max(self.min)
            && self.max.is_none_or(|m| alpha <= m)
            && self.class().contains(alpha)
    }

    /// Admissible values in increasing order (`α >= 1`, or `>= 0` when
    /// `allow_zero`).
    pub fn iter(&self, allow_zero: bool) -> impl Iterator<Item = i128> + '_ {
        let floor = if allow_zero { 0 } else { 1 };
        let start = self.class().first_at_least(floor.max(self.min));
        let step = self.modulus;
        let max = self.max;
        (0..)
            .map(move |i: i128| start + i * step)
            .take_while(move |a| max.is_none_or(|m| *a <= m))
    }
}

impl fmt::Display for AlphaConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus > 1 {
            write!(f, "α ≡ {} (mod {}), ", self.residue, self.modulus)?;
        }
        write!(f, "α >= {}", self.min.max(1))?;
        if let Some(m) = self.max {
            write!(f, ", α <= {m}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub mode: DerivationMode,
    pub theorem: Option<Theorem>,
    pub source: Palintiple,
}

/// A family of `(n̂, b̂(α))`-palintiples affine in `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricFamily {
    pub nhat: u64,
    pub base: AffineValue,
    /// `d̂_0 ..= d̂_K`.
    pub digits: Vec<AffineValue>,
    /// `ĉ_0 ..= ĉ_{K+1}`.
    pub carries: Vec<u64>,
    pub alpha: AlphaConstraint,
    pub provenance: Provenance,
}

impl ParametricFamily {
    /// `d̂_K ..= d̂_0`.
    pub fn digits_msf(&self) -> Vec<AffineValue> {
        self.digits.iter().rev().copied().collect()
    }

    /// `ĉ_K ..= ĉ_0`.
    pub fn carries_msf(&self) -> Vec<u64> {
        let k = self.digits.len() - 1;
        self.carries[..=k].iter().rev().copied().collect()
    }

    pub fn admissible(&self, count: usize) -> Vec<i128> {
        self.alpha.iter(false).take(count).collect()
    }

    pub fn to_record(&self) -> FamilyRecord {
        FamilyRecord {
            nhat: self.nhat,
            base: self.base,
            digits: self.digits_msf(),
            carries: self.carries_msf(),
            alpha: self.alpha,
            mode: self.provenance.mode,
            theorem: self.provenance.theorem,
            source: self.provenance.source.literal(),
        }
    }
}

impl fmt::Display for ParametricFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.digits_msf().iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "({}, {})-palintiples ({})_{} with carries {:?}, {}",
            self.nhat,
            self.base,
            digits.join(", "),
            self.base,
            self.carries_msf(),
            self.alpha
        )
    }
}

/// JSON form of a family; digits and carries most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub nhat: u64,
    pub base: AffineValue,
    pub digits: Vec<AffineValue>,
    pub carries: Vec<u64>,
    pub alpha: AlphaConstraint,
    pub mode: DerivationMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<Theorem>,
    pub source: String,
}

/// Generic singly/doubly (ρ-)derivation of `source` with multiplier `nhat`.
pub fn derive_family(source: &Palintiple, mode: DerivationMode, nhat: u64) -> Result<ParametricFamily, DeriveError> {
    if nhat < 2 {
        return Err(DeriveError::InvalidArgument(format!("new multiplier {nhat} must be at least 2")));
    }
    let carries = mode.carries_for(source);
    if let Some(&carry) = carries.iter().find(|c| **c >= nhat) {
        return Err(DeriveError::CarryTooLarge { carry, nhat });
    }
    let big_k = carries.len() - 2;
    let nh = nhat as i128;
    let modulus = nh * nh - 1;
    let c = |i: usize| carries[i] as i128;

    // j = 0 of the closed form: b̂·ĉ_1 ≡ n̂·ĉ_K (mod n̂² − 1)
    let base_class = solve_linear_congruence(c(1), nh * c(big_k), modulus).ok_or_else(|| {
        DeriveError::NoSolution(format!(
            "b̂·{} ≡ {} (mod {modulus}) has no solution",
            c(1),
            nh * c(big_k)
        ))
    })?;
    let (s, period) = (base_class.residue, base_class.modulus);
    let base = AffineValue::integer(s, period);

    // d̂_j = (b̂·A_j − B_j) / (n̂² − 1)
    let digits: Vec<AffineValue> = (0..=big_k)
        .map(|j| {
            let a = nh * c(big_k - j + 1) + c(j + 1);
            let b = nh * c(big_k - j) + c(j);
            AffineValue::new(s * a - b, period * a, modulus)
        })
        .collect();

    let class = integrality_class(&digits)?;
    finish(
        nhat,
        base,
        digits,
        carries,
        class,
        Provenance { mode, theorem: None, source: source.clone() },
    )
}

fn integrality_class(digits: &[AffineValue]) -> Result<Residue, DeriveError> {
    let mut classes = Vec::with_capacity(digits.len());
    for (j, d) in digits.iter().enumerate() {
        let class = d
            .integrality()
            .ok_or_else(|| DeriveError::NoSolution(format!("digit d̂_{j} = {d} is never integral")))?;
        classes.push(class);
    }
    crt_all(classes).ok_or_else(|| DeriveError::NoSolution("digit integrality conditions are incompatible".into()))
}

/// Integer interval `[lo, hi]` of `α >= 0`.
#[derive(Debug, Clone, Copy)]
struct Interval {
    lo: i128,
    hi: Option<i128>,
}

impl Interval {
    /// Intersects with `{α : u + v·α >= 0}`.
    fn require(&mut self, u: i128, v: i128) {
        match v.signum() {
            1 => self.lo = self.lo.max(Integer::div_ceil(&(-u), &v)),
            -1 => {
                let bound = Integer::div_floor(&u, &(-v));
                self.hi = Some(self.hi.map_or(bound, |h| h.min(bound)));
            }
            _ => {
                if u < 0 {
                    self.hi = Some(-1);
                }
            }
        }
    }
}

/// Computes the range of `α` keeping every digit in range, builds the family
/// and validates it by instantiation.
fn finish(
    nhat: u64,
    base: AffineValue,
    digits: Vec<AffineValue>,
    carries: Vec<u64>,
    class: Residue,
    provenance: Provenance,
) -> Result<ParametricFamily, DeriveError> {
    debug_assert_eq!(base.den, 1);
    let big_k = digits.len() - 1;
    let mut iv = Interval { lo: 0, hi: None };
    // b̂ > n̂
    iv.require(base.a0 - nhat as i128 - 1, base.a1);
    for (j, d) in digits.iter().enumerate() {
        let least = if j == 0 || j == big_k { 1 } else { 0 };
        // d̂_j >= least
        iv.require(d.a0 - least * d.den, d.a1);
        // d̂_j <= b̂ − 1
        iv.require(d.den * (base.a0 - 1) - d.a0, d.den * base.a1 - d.a1);
    }
    let alpha = AlphaConstraint { residue: class.residue, modulus: class.modulus, min: iv.lo, max: iv.hi };
    let family = ParametricFamily { nhat, base, digits, carries, alpha, provenance };
    let tested = family.admissible(VALIDATION_COUNT);
    if tested.is_empty() {
        return Err(DeriveError::NoSolution(format!(
            "no admissible α: {} with digits in range only for α in [{}, {:?}]",
            class_text(class),
            iv.lo,
            iv.hi
        )));
    }
    for a in tested {
        instantiate(&family, a)?;
    }
    Ok(family)
}

fn class_text(r: Residue) -> String {
    format!("α ≡ {} (mod {})", r.residue, r.modulus)
}

/// Evaluates the family at `alpha >= 1`.
pub fn instantiate(family: &ParametricFamily, alpha: i128) -> Result<Palintiple, DeriveError> {
    instantiate_with(family, alpha, false)
}

/// As [`instantiate`]; `allow_zero` also admits `α = 0` when the digits are
/// in range there.
pub fn instantiate_with(family: &ParametricFamily, alpha: i128, allow_zero: bool) -> Result<Palintiple, DeriveError> {
    if !family.alpha.admits(alpha, allow_zero) {
        return Err(DeriveError::ConstraintViolated { alpha, constraint: family.alpha.to_string() });
    }
    let defect = |what: String| DeriveError::ValidationFailed(format!("α = {alpha}: {what}"));
    let base = family.base.eval(alpha).ok_or_else(|| defect("base not integral".into()))?;
    let digits = family
        .digits
        .iter()
        .map(|d| d.eval(alpha).and_then(|v| u64::try_from(v).ok()))
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| defect("digit not a non-negative integer".into()))?;
    let base = u64::try_from(base).map_err(|_| defect("base out of range".into()))?;
    let p = Palintiple::from_lsf(family.nhat, base, digits).map_err(|e| defect(e.to_string()))?;
    if p.carries() != family.carries.as_slice() {
        return Err(defect(format!("carries {:?} differ from {:?}", p.carries_msf(), family.carries_msf())));
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Closed-form theorem families

fn fail(msg: impl Into<String>) -> DeriveError {
    DeriveError::HypothesisFailed(msg.into())
}

/// Family generated by the closed forms of `theorem`. `nhat` is required to
/// equal `b` for the Hoey and Pudwell types; for the Sutcliffe types `None`
/// picks the smallest multiplier in [`sutcliffe_candidates`].
pub fn theorem_family(source: &Palintiple, theorem: Theorem, nhat: Option<u64>) -> Result<ParametricFamily, DeriveError> {
    let b = source.base();
    match theorem {
        Theorem::Hoey | Theorem::RhoHoey | Theorem::Pudwell | Theorem::RhoPudwell => {
            if let Some(nh) = nhat {
                if nh != b {
                    return Err(fail(format!("the new multiplier must equal the base {b}, got {nh}")));
                }
            }
        }
        Theorem::Sutcliffe | Theorem::RhoSutcliffe => {}
    }
    let provenance = Provenance { mode: theorem.mode(), theorem: Some(theorem), source: source.clone() };
    match theorem {
        Theorem::Hoey => hoey(source, provenance),
        Theorem::RhoHoey => rho_hoey(source, provenance),
        Theorem::Sutcliffe | Theorem::RhoSutcliffe => {
            let rho = theorem == Theorem::RhoSutcliffe;
            let nhat = match nhat {
                Some(n) => n,
                None => *sutcliffe_candidates(source, rho, default_nhat_bound(source))
                    .first()
                    .ok_or_else(|| fail(format!("no multiplier up to {} satisfies the hypotheses", default_nhat_bound(source))))?,
            };
            sutcliffe(source, nhat, rho, provenance)
        }
        Theorem::Pudwell | Theorem::RhoPudwell => pudwell(source, theorem == Theorem::RhoPudwell, provenance),
    }
}

/// Default upper bound `2b²` on candidate multipliers.
pub fn default_nhat_bound(source: &Palintiple) -> u64 {
    2 * source.base() * source.base()
}

fn hoey_profile(source: &Palintiple) -> Result<crate::instance::SymmetricProfile, DeriveError> {
    source.symmetric_profile().map_err(|e| match e {
        PalintipleError::NotEligible(m) => fail(format!("source is not a 1089 palintiple: {m}")),
        other => fail(other.to_string()),
    })
}

fn hoey(source: &Palintiple, provenance: Provenance) -> Result<ParametricFamily, DeriveError> {
    let profile = hoey_profile(source)?;
    let (n, b, q) = (source.multiplier() as i128, source.base() as i128, profile.q as i128);
    let r = |j: isize| profile.r_or_zero(j) as i128;
    let digits: Vec<AffineValue> = (0..=source.len() as isize)
        .map(|j| {
            let a0 = n * n * q * r(j) + n * q * r(j - 2) - r(j - 1);
            let a1 = q * r(j + 1) + (q * n * b - 1) * r(j) - q * r(j - 1) + q * b * r(j - 2);
            AffineValue::integer(a0, a1)
        })
        .collect();
    let base = AffineValue::integer(n * b, b * b - 1);
    let carries = provenance.mode.carries_for(source);
    finish(source.base(), base, digits, carries, Residue::ANY, provenance)
}

/// `ℓ`, the least non-negative residue of `m·b` modulo `b² − 1` where `m` is
/// the inverse of `n`.
pub fn rho_hoey_offset(source: &Palintiple) -> Result<i128, DeriveError> {
    let (n, b) = (source.multiplier() as i128, source.base() as i128);
    let m = mod_inverse(n, b * b - 1)
        .ok_or_else(|| fail(format!("multiplier {n} is not invertible modulo {}", b * b - 1)))?;
    Ok((m * b).rem_euclid(b * b - 1))
}

fn rho_hoey(source: &Palintiple, provenance: Provenance) -> Result<ParametricFamily, DeriveError> {
    let profile = hoey_profile(source)?;
    let ell = rho_hoey_offset(source)?;
    let (n, b, q) = (source.multiplier() as i128, source.base() as i128, profile.q as i128);
    let bb = b * b - 1;
    let r = |j: isize| profile.r_or_zero(j) as i128;
    let digits: Vec<AffineValue> = (0..=source.len() as isize)
        .map(|j| {
            let num = (ell * n - b) * q * r(j + 1)
                + (b - ell - n * q + ell * b * q) * r(j)
                + (1 - b * ell - b * n * q + ell * q) * r(j - 1)
                + (ell * n * b - 1) * q * r(j - 2);
            let slope = n * q * r(j + 1) + (b * q - 1) * r(j) + (q - b) * r(j - 1) + b * n * q * r(j - 2);
            AffineValue::new(num, slope * bb, bb)
        })
        .collect();
    for (j, d) in digits.iter().enumerate() {
        if d.den != 1 {
            return Err(fail(format!("constant term of d̂_{j} = {d} is not integral")));
        }
    }
    let base = AffineValue::integer(ell, bb);
    let carries = provenance.mode.carries_for(source);
    finish(source.base(), base, digits, carries, Residue::ANY, provenance)
}

/// Quantities shared by the shifted-symmetric closed forms. In the forward
/// case `x = nb − 1` and `y = b − n`; the reversed case swaps them.
struct ShiftedTerms {
    n2: i128,
    x: i128,
    y: i128,
}

fn shifted_terms(source: &Palintiple, rho: bool) -> Result<ShiftedTerms, DeriveError> {
    if source.classify() != PalintipleClass::ShiftedSymmetric {
        return Err(fail(format!("source is {}, not shifted-symmetric", source.classify())));
    }
    let (n, b) = (source.multiplier() as i128, source.base() as i128);
    let n2 = n * n - 1;
    for (j, &c) in source.carries().iter().enumerate() {
        let c = c as i128;
        if ((b - n) * c) % n2 != 0 || ((n * b - 1) * c) % n2 != 0 {
            return Err(fail(format!("(b−n)·c_{j} and (nb−1)·c_{j} are not both divisible by {n2}")));
        }
    }
    let (x, y) = if rho { (b - n, n * b - 1) } else { (n * b - 1, b - n) };
    Ok(ShiftedTerms { n2, x, y })
}

/// Multipliers in `max digit + 1 ..= bound` satisfying the integrality and
/// congruence hypotheses of the (ρ-)Sutcliffe closed form.
pub fn sutcliffe_candidates(source: &Palintiple, rho: bool, bound: u64) -> Vec<u64> {
    let lo = source.digits_lsf().iter().max().copied().unwrap_or(0) + 1;
    (lo.max(2)..=bound)
        .filter(|&nh| sutcliffe_hypotheses(source, nh, rho).is_ok())
        .collect()
}

fn sutcliffe_hypotheses(source: &Palintiple, nhat: u64, rho: bool) -> Result<(ShiftedTerms, i128), DeriveError> {
    let t = shifted_terms(source, rho)?;
    let nh = nhat as i128;
    if nh < 2 {
        return Err(fail("new multiplier must be at least 2"));
    }
    if nh * t.x % t.y != 0 {
        return Err(fail(format!("s = {nh}·{}/{} is not an integer", t.x, t.y)));
    }
    let s = nh * t.x / t.y;
    if let Some(d) = source.digits_lsf().iter().find(|d| **d >= nhat) {
        return Err(fail(format!("new multiplier {nhat} does not exceed digit {d}")));
    }
    for (j, &c) in source.carries().iter().enumerate() {
        let c = c as i128;
        let lhs = s * (t.x * c / t.n2);
        let rhs = t.y * c / t.n2;
        if (lhs - rhs).rem_euclid(nh - 1) != 0 {
            return Err(fail(format!("congruence for c_{j} fails modulo {}", nh - 1)));
        }
    }
    Ok((t, s))
}

fn sutcliffe(source: &Palintiple, nhat: u64, rho: bool, provenance: Provenance) -> Result<ParametricFamily, DeriveError> {
    let (t, s) = sutcliffe_hypotheses(source, nhat, rho)?;
    let nh = nhat as i128;
    let modulus = nh * nh - 1;
    let end_digit = if rho { source.digit(source.k()) } else { source.digit(0) } as i128;
    let g = gcd(end_digit, modulus);
    let c = |j: isize| source.carry_or_zero(j) as i128;

    let mut digits = Vec::new();
    let mut classes = Vec::new();
    for j in 0..=source.len() as isize {
        // constant: [s·x − y]·c_j / ((n̂−1)(n²−1)) + x·c_{j−1}/(n²−1)
        let const_num = (s * t.x - t.y) * c(j) + (nh - 1) * t.x * c(j - 1);
        let const_den = (nh - 1) * t.n2;
        if const_num % const_den != 0 {
            return Err(fail(format!("constant term of d̂_{j} is not integral")));
        }
        // slope: [y·c_{j+1} + (n̂+1)·x·c_j + n̂·y·c_{j−1}] / (n²−1), then / g
        let slope_num = t.y * c(j + 1) + (nh + 1) * t.x * c(j) + nh * t.y * c(j - 1);
        if slope_num % t.n2 != 0 {
            return Err(fail(format!("slope of d̂_{j} is not integral before division by {g}")));
        }
        let slope = slope_num / t.n2;
        // g | α·slope
        classes.push(
            solve_linear_congruence(slope, 0, g)
                .expect("homogeneous congruence always has α ≡ 0 as a solution"),
        );
        digits.push(AffineValue::new(const_num / const_den * g, slope, g));
    }
    let class = crt_all(classes).expect("homogeneous classes all contain 0");
    let base = AffineValue::integer(s, modulus / g);
    let carries = provenance.mode.carries_for(source);
    finish(nhat, base, digits, carries, class, provenance)
}

fn pudwell(source: &Palintiple, rho: bool, provenance: Provenance) -> Result<ParametricFamily, DeriveError> {
    let (n, b) = (source.multiplier() as i128, source.base() as i128);
    let k = source.k() as isize;
    let n2 = n * n - 1;
    let bb = b * b - 1;
    let end_digit = if rho { source.digit(source.k()) } else { source.digit(0) } as i128;
    let big_d = gcd(end_digit, bb);
    let mut q = Vec::with_capacity(source.carries().len());
    for (j, &c) in source.carries().iter().enumerate() {
        let dc = big_d * c as i128;
        if dc % n2 != 0 {
            return Err(fail(format!("{n2} does not divide D·c_{j} = {dc}")));
        }
        q.push(dc / n2);
    }
    let q = |j: isize| if j < 0 { 0 } else { q.get(j as usize).copied().unwrap_or(0) };
    let d = |j: isize| source.digit_or_zero(j) as i128;

    let mut digits = Vec::new();
    let mut classes = Vec::new();
    for j in 0..=k + 2 {
        let (slope, offset) = if rho {
            (b * d(j - 2) + d(k - j), q(j) + n * q(j - 1))
        } else {
            (b * d(k - j + 2) + d(j), n * q(j) + q(j - 1))
        };
        // D | α·slope − offset
        let class = solve_linear_congruence(slope, offset, big_d)
            .ok_or_else(|| fail(format!("{big_d} never divides {slope}α − {offset} (digit d̂_{j})")))?;
        classes.push(class);
        digits.push(AffineValue::new(-offset, slope, big_d));
    }
    let class = crt_all(classes).ok_or_else(|| fail("divisibility conditions on α are incompatible"))?;
    let base = AffineValue::integer(0, bb / big_d);
    let carries = provenance.mode.carries_for(source);
    finish(source.base(), base, digits, carries, class, provenance)
}

// ---------------------------------------------------------------------------
// Permutiples

/// `target = multiplier · operand` in base `base`, both permutations of the
/// same digit multiset. Digits most significant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermutipleWitness {
    pub base: u64,
    pub multiplier: u64,
    pub target: Vec<u64>,
    pub operand: Vec<u64>,
}

/// Exhaustive search over bases, multipliers and distinct permutations with a
/// nonzero leading digit.
pub fn permutiple_search(
    digits: &[u64],
    bases: std::ops::RangeInclusive<u64>,
    multipliers: std::ops::RangeInclusive<u64>,
) -> Result<Vec<PermutipleWitness>, DeriveError> {
    if digits.is_empty() {
        return Err(DeriveError::InvalidArgument("empty digit multiset".into()));
    }
    let max_digit = *digits.iter().max().unwrap();
    if *bases.start() <= max_digit {
        return Err(DeriveError::InvalidArgument(format!("bases must exceed the largest digit {max_digit}")));
    }
    if *multipliers.start() < 2 {
        return Err(DeriveError::InvalidArgument("multipliers must be at least 2".into()));
    }
    let mut sorted = digits.to_vec();
    sorted.sort_unstable();
    let perms = distinct_permutations(&sorted);
    let len = sorted.len();
    let mut out = Vec::new();
    for base in bases {
        let limit = (base as u128).checked_pow(len as u32);
        for operand in perms.iter().filter(|p| p[0] != 0) {
            let value = operand.iter().fold(0u128, |acc, d| acc * base as u128 + *d as u128);
            for m in multipliers.clone() {
                let target = value * m as u128;
                if limit.is_some_and(|l| target >= l) {
                    break;
                }
                let mut t = target;
                let mut tdigits = vec![0u64; len];
                for slot in tdigits.iter_mut().rev() {
                    *slot = (t % base as u128) as u64;
                    t /= base as u128;
                }
                if tdigits[0] == 0 {
                    continue;
                }
                let mut check = tdigits.clone();
                check.sort_unstable();
                if check == sorted {
                    out.push(PermutipleWitness { base, multiplier: m, target: tdigits, operand: operand.clone() });
                }
            }
        }
    }
    Ok(out)
}

/// All distinct permutations of a sorted sequence, in lexicographic order.
fn distinct_permutations(sorted: &[u64]) -> Vec<Vec<u64>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, b: u64, msf: &[u64]) -> Palintiple {
        Palintiple::new(n, b, msf).unwrap()
    }

    fn msf_digits(f: &ParametricFamily) -> Vec<(i128, i128, i128)> {
        f.digits_msf().iter().map(|d| (d.a0, d.a1, d.den)).collect()
    }

    #[test]
    fn hoey_from_base_three_generic() {
        let f = derive_family(&p(2, 3, &[2, 1, 2, 0, 1]), DerivationMode::SingleForward, 3).unwrap();
        assert_eq!(f.base, AffineValue::integer(6, 8));
        assert_eq!(
            msf_digits(&f),
            vec![(2, 3, 1), (1, 2, 1), (5, 7, 1), (3, 5, 1), (4, 6, 1), (0, 1, 1)]
        );
        assert_eq!(f.carries_msf(), vec![2, 1, 2, 0, 1, 0]);
        assert_eq!(f.alpha.modulus, 1);
    }

    #[test]
    fn sutcliffe_generic() {
        let f = derive_family(&p(2, 5, &[3, 1]), DerivationMode::SingleForward, 5).unwrap();
        assert_eq!(f.base, AffineValue::integer(15, 24));
        assert_eq!(msf_digits(&f), vec![(3, 5, 1), (11, 18, 1), (0, 1, 1)]);
        assert_eq!(f.carries_msf(), vec![3, 1, 0]);
        let first = instantiate(&f, 1).unwrap();
        assert_eq!((first.multiplier(), first.base(), first.digits_msf()), (5, 39, vec![8, 29, 1]));
    }

    #[test]
    fn unsolvable_end_congruence() {
        let err = derive_family(&p(2, 14, &[9, 4]), DerivationMode::SingleForward, 3).unwrap_err();
        assert!(matches!(err, DeriveError::CarryTooLarge { .. } | DeriveError::NoSolution(_)), "{err}");
        // with a multiplier large enough for the carries the congruence itself fails
        let err = derive_family(&p(2, 14, &[9, 4]), DerivationMode::SingleForward, 11).unwrap_err();
        assert!(matches!(err, DeriveError::NoSolution(_)), "{err}");
    }

    #[test]
    fn double_rho_from_base_23() {
        let f = derive_family(&p(11, 23, &[21, 1]), DerivationMode::DoubleRho, 34).unwrap();
        let hit = f
            .alpha
            .iter(false)
            .take(50)
            .map(|a| instantiate(&f, a).unwrap())
            .find(|x| x.base() == 55)
            .expect("(34,55) member");
        assert_eq!(hit.digits_msf(), vec![34, 1, 0, 1]);
        assert_eq!(hit.carries_msf(), vec![0, 1, 21, 0]);
    }

    #[test]
    fn hoey_closed_form() {
        let f = theorem_family(&p(4, 10, &[8, 7, 1, 2]), Theorem::Hoey, None).unwrap();
        assert_eq!(f.base, AffineValue::integer(40, 99));
        let x = instantiate(&f, 1).unwrap();
        assert_eq!(x.digits_msf(), vec![28, 25, 108, 113, 2]);
        assert_eq!(x.carries_msf(), vec![8, 7, 1, 2, 0]);
    }

    #[test]
    fn pudwell_closed_form() {
        let f = theorem_family(&p(6, 55, &[47, 7]), Theorem::Pudwell, None).unwrap();
        assert_eq!(f.base, AffineValue::integer(0, 432));
        assert_eq!(msf_digits(&f), vec![(0, 55, 1), (-1, 2585, 7), (-6, 47, 7), (0, 1, 1)]);
        assert_eq!((f.alpha.residue, f.alpha.modulus), (4, 7));
    }

    #[test]
    fn rho_hoey_closed_form() {
        let src = p(4, 10, &[8, 7, 1, 2]);
        assert_eq!(rho_hoey_offset(&src).unwrap(), 52);
        let f = theorem_family(&src, Theorem::RhoHoey, None).unwrap();
        assert_eq!(f.base, AffineValue::integer(52, 99));
        assert_eq!(
            msf_digits(&f),
            vec![(42, 80, 1), (37, 72, 1), (5, 11, 1), (14, 27, 1), (4, 8, 1)]
        );
        assert_eq!(f.carries_msf(), vec![2, 1, 7, 8, 0]);
        assert_eq!(f.alpha.min, 0);
        assert!(instantiate(&f, 0).is_err());
        let zero = instantiate_with(&f, 0, true).unwrap();
        assert_eq!(zero.base(), 52);
    }

    #[test]
    fn rho_sutcliffe_closed_form() {
        let f = theorem_family(&p(2, 5, &[3, 1]), Theorem::RhoSutcliffe, Some(9)).unwrap();
        assert_eq!(f.base, AffineValue::integer(3, 80));
        assert_eq!(msf_digits(&f), vec![(1, 27, 1), (0, 10, 1), (0, 3, 1)]);
        assert_eq!(f.carries_msf(), vec![1, 3, 0]);
    }

    #[test]
    fn sutcliffe_rejects_non_integral_offset() {
        let err = theorem_family(&p(2, 14, &[9, 4]), Theorem::Sutcliffe, Some(14)).unwrap_err();
        assert!(matches!(err, DeriveError::HypothesisFailed(ref m) if m.contains("not an integer")), "{err}");
    }

    #[test]
    fn sutcliffe_default_multiplier() {
        let src = p(2, 5, &[3, 1]);
        let c = sutcliffe_candidates(&src, false, 12);
        assert_eq!(&c[..2], &[5, 9]);
        assert_eq!(theorem_family(&src, Theorem::Sutcliffe, None).unwrap().nhat, 5);
    }

    #[test]
    fn rho_pudwell_closed_form() {
        let f = theorem_family(&p(2, 5, &[3, 1]), Theorem::RhoPudwell, None).unwrap();
        assert_eq!(f.base, AffineValue::integer(0, 8));
        assert_eq!(msf_digits(&f), vec![(0, 5, 1), (-2, 5, 3), (-1, 1, 3), (0, 1, 1)]);
        assert_eq!((f.alpha.residue, f.alpha.modulus), (1, 3));
        let x = instantiate(&f, 1).unwrap();
        assert_eq!(x.digits_msf(), vec![5, 1, 0, 1]);
        assert_eq!(x.carries_msf(), vec![0, 1, 3, 0]);
        assert!(matches!(instantiate(&f, 2), Err(DeriveError::ConstraintViolated { .. })));
    }

    #[test]
    fn wrong_multiplier_for_hoey() {
        let err = theorem_family(&p(4, 10, &[8, 7, 1, 2]), Theorem::Hoey, Some(11)).unwrap_err();
        assert!(matches!(err, DeriveError::HypothesisFailed(_)));
        let err = theorem_family(&p(2, 5, &[3, 1]), Theorem::Hoey, None).unwrap_err();
        assert!(matches!(err, DeriveError::HypothesisFailed(_)));
    }

    #[test]
    fn affine_display() {
        assert_eq!(AffineValue::integer(2, 3).to_string(), "2+3α");
        assert_eq!(AffineValue::new(-1, 2585, 7).to_string(), "(-1+2585α)/7");
        assert_eq!(AffineValue::integer(0, 1).to_string(), "α");
        assert_eq!(AffineValue::new(4, 6, 2), AffineValue::integer(2, 3));
    }

    #[test]
    fn permutations_are_distinct_and_complete() {
        let perms = distinct_permutations(&[0, 1, 1, 2]);
        assert_eq!(perms.len(), 12);
        let mut dedup = perms.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 12);
    }

    #[test]
    fn small_permutiple() {
        let w = permutiple_search(&[2, 1, 0], 4..=4, 2..=3).unwrap();
        assert!(w.contains(&PermutipleWitness { base: 4, multiplier: 2, target: vec![2, 1, 0], operand: vec![1, 0, 2] }));
    }
}
