//! Palinomials and digit polynomials.
//!
//! For an `(n, b)`-palintiple with digits `d_0 ..= d_k` and carries `c_j`:
//!
//! ```text
//! Pal(x) = Σ (d_j − n·d_{k−j}) x^j        D(x)  = Σ d_j x^j
//! C(x)   = Σ_{j=1..k} c_j x^{j−1}         D̄(x) = Σ d_{k−j} x^j
//! ```
//!
//! and `Pal = (x − b)·C` always. Every identity below is checked as an exact
//! polynomial equation with denominators cleared.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::instance::Palintiple;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;
pub const ROOT_PRODUCT_TOLERANCE: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 10_000;
pub const DEFAULT_SEED: u64 = 1089;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PalinomialError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
}

/// Integer polynomial, coefficients stored lowest degree first with no
/// trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `x − r`.
    pub fn x_minus(r: impl Into<BigInt>) -> Self {
        Self::new(vec![-r.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `den^deg · p(num/den)`, zero exactly when `num/den` is a root
    /// (for `den != 0`).
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        // Horner with each step scaled by den
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    /// Division with remainder over the integers. `None` when some quotient
    /// coefficient is not an integer.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Option<(IntPolynomial, IntPolynomial)> {
        let lead = divisor.leading()?;
        let dd = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd - 1];
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self` over ℤ.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    fn to_complex(&self) -> Vec<Complex64> {
        self.coeffs
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
            .collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if i == 0 || !a.is_one() {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `{"coeffs": [c0, c1, ...]}`; coefficients outside `i64` become strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Coeffs<'a>(&'a [BigInt]);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for c in self.0 {
                    match c.to_i64() {
                        Some(v) => seq.serialize_element(&v)?,
                        None => seq.serialize_element(&c.to_string())?,
                    }
                }
                seq.end()
            }
        }
        let mut st = serializer.serialize_struct("IntPolynomial", 1)?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

// ---------------------------------------------------------------------------
// Polynomials of an instance

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polynomials {
    pub pal: IntPolynomial,
    pub digit: IntPolynomial,
    pub reverse_digit: IntPolynomial,
    pub carry: IntPolynomial,
}

fn from_u64s(values: impl Iterator<Item = u64>) -> IntPolynomial {
    IntPolynomial::new(values.map(BigInt::from).collect())
}

pub fn palinomial(p: &Palintiple) -> IntPolynomial {
    let d = p.digits_lsf();
    let (n, k) = (BigInt::from(p.multiplier()), p.k());
    IntPolynomial::new((0..=k).map(|j| BigInt::from(d[j]) - &n * BigInt::from(d[k - j])).collect())
}

pub fn digit_polynomial(p: &Palintiple) -> IntPolynomial {
    from_u64s(p.digits_lsf().iter().copied())
}

pub fn reverse_digit_polynomial(p: &Palintiple) -> IntPolynomial {
    from_u64s(p.digits_lsf().iter().rev().copied())
}

/// `Σ_{j=1..k} c_j x^{j−1}`.
pub fn carry_polynomial(p: &Palintiple) -> IntPolynomial {
    from_u64s(p.carries()[1..=p.k()].iter().copied())
}

pub fn build_polynomials(p: &Palintiple) -> Polynomials {
    Polynomials {
        pal: palinomial(p),
        digit: digit_polynomial(p),
        reverse_digit: reverse_digit_polynomial(p),
        carry: carry_polynomial(p),
    }
}

// ---------------------------------------------------------------------------
// Identities

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityKind {
    /// `Pal = (x − b)·C`.
    LinearFactor,
    /// `(n−1)(x−b)·D = (d_k x² − x + d_0)·Pal`.
    DigitPoly1089,
    /// `(n−1)(x−b)·D̄ = (d_0 x² − x + d_k)·Pal`.
    DigitPoly1089Reverse,
    /// `c_k(x−b)·D = (d_k x + d_0)·Pal`.
    DigitPolyShifted,
    /// `c_k(x−b)·D̄ = (d_0 x + d_k)·Pal`.
    DigitPolyShiftedReverse,
    /// `s(x−b)·P̂al = (x−b̂)·f·Pal`, `f` the forward factor of the source.
    DerivedForward,
    /// As above with `d_0` and `d_k` exchanged in `f`.
    DerivedRho,
    /// `P̂al₁·(x−b̂₂) = P̂al₂·(x−b̂₁)`.
    TwoFamiliesLinear,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 8] = [
        IdentityKind::LinearFactor,
        IdentityKind::DigitPoly1089,
        IdentityKind::DigitPoly1089Reverse,
        IdentityKind::DigitPolyShifted,
        IdentityKind::DigitPolyShiftedReverse,
        IdentityKind::DerivedForward,
        IdentityKind::DerivedRho,
        IdentityKind::TwoFamiliesLinear,
    ];

    /// Number of derived instances the check consumes.
    pub fn derived_arity(self) -> usize {
        match self {
            IdentityKind::DerivedForward | IdentityKind::DerivedRho => 1,
            IdentityKind::TwoFamiliesLinear => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub kind: IdentityKind,
    pub passed: bool,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    pub residual: IntPolynomial,
}

impl IdentityOutcome {
    fn compare(kind: IdentityKind, lhs: IntPolynomial, rhs: IntPolynomial) -> Self {
        let residual = &lhs - &rhs;
        IdentityOutcome { kind, passed: residual.is_zero(), lhs, rhs, residual }
    }
}

/// Whether `c_j = c_{k−j}` for all `j` and `(n + 1) | b`.
pub fn is_1089_source(p: &Palintiple) -> bool {
    let k = p.k() as isize;
    p.base().is_multiple_of(p.multiplier() + 1) && (0..=k).all(|j| p.carry_or_zero(j) == p.carry_or_zero(k - j))
}

/// Whether `c_j = c_{k−j+1}` for all `j`.
pub fn is_shifted_source(p: &Palintiple) -> bool {
    let k = p.k() as isize;
    (0..=k + 1).all(|j| p.carry_or_zero(j) == p.carry_or_zero(k - j + 1))
}

/// `(scale, factor)` such that `scale·(x−b)·D = factor·Pal` (or the reverse
/// digit version when `reverse`).
fn digit_relation(p: &Palintiple, reverse: bool) -> Result<(BigInt, IntPolynomial), PalinomialError> {
    let d = p.digits_lsf();
    let (lo, hi) = if reverse { (d[p.k()], d[0]) } else { (d[0], d[p.k()]) };
    if is_1089_source(p) {
        let f = IntPolynomial::new(vec![BigInt::from(lo), BigInt::from(-1), BigInt::from(hi)]);
        Ok((BigInt::from(p.multiplier() - 1), f))
    } else if is_shifted_source(p) {
        let f = IntPolynomial::new(vec![BigInt::from(lo), BigInt::from(hi)]);
        Ok((BigInt::from(p.carry(p.k())), f))
    } else {
        Err(PalinomialError::PreconditionFailed(format!(
            "{} is neither symmetric with (n+1) | b nor shifted-symmetric",
            p.literal()
        )))
    }
}

/// Carries `c_1 ..` of `derived` with trailing zeros dropped.
fn carry_body(derived: &Palintiple) -> Vec<u64> {
    let mut c = derived.carries()[1..].to_vec();
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// Checks that `derived` carries the digits of `source` (reversed for ρ).
fn require_derived(source: &Palintiple, derived: &Palintiple, rho: bool) -> Result<(), PalinomialError> {
    let mut expected = source.digits_lsf().to_vec();
    if rho {
        expected.reverse();
    }
    if carry_body(derived) == expected {
        Ok(())
    } else {
        Err(PalinomialError::PreconditionFailed(format!(
            "{} is not {}derived from {}",
            derived.literal(),
            if rho { "rho-" } else { "" },
            source.literal()
        )))
    }
}

fn derived_is_rho(source: &Palintiple, derived: &Palintiple) -> Result<bool, PalinomialError> {
    if require_derived(source, derived, false).is_ok() {
        Ok(false)
    } else {
        require_derived(source, derived, true).map(|_| true)
    }
}

/// Checks one identity exactly. `derived` holds as many instances as
/// [`IdentityKind::derived_arity`] asks for.
pub fn check_identity(
    kind: IdentityKind,
    p: &Palintiple,
    derived: &[Palintiple],
) -> Result<IdentityOutcome, PalinomialError> {
    if derived.len() != kind.derived_arity() {
        return Err(PalinomialError::PreconditionFailed(format!(
            "{kind} takes {} derived instance(s), got {}",
            kind.derived_arity(),
            derived.len()
        )));
    }
    let x_minus_b = IntPolynomial::x_minus(p.base());
    let pal = palinomial(p);
    let require = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(PalinomialError::PreconditionFailed(format!("{} is not {what}", p.literal())))
        }
    };
    let outcome = match kind {
        IdentityKind::LinearFactor => IdentityOutcome::compare(kind, pal, &x_minus_b * &carry_polynomial(p)),
        IdentityKind::DigitPoly1089 | IdentityKind::DigitPoly1089Reverse => {
            require(is_1089_source(p), "symmetric with (n+1) | b")?;
            let reverse = kind == IdentityKind::DigitPoly1089Reverse;
            let (s, f) = digit_relation(p, reverse)?;
            let d = if reverse { reverse_digit_polynomial(p) } else { digit_polynomial(p) };
            IdentityOutcome::compare(kind, &x_minus_b.scale(&s) * &d, &f * &pal)
        }
        IdentityKind::DigitPolyShifted | IdentityKind::DigitPolyShiftedReverse => {
            require(is_shifted_source(p), "shifted-symmetric")?;
            let reverse = kind == IdentityKind::DigitPolyShiftedReverse;
            let (s, f) = digit_relation(p, reverse)?;
            let d = if reverse { reverse_digit_polynomial(p) } else { digit_polynomial(p) };
            IdentityOutcome::compare(kind, &x_minus_b.scale(&s) * &d, &f * &pal)
        }
        IdentityKind::DerivedForward | IdentityKind::DerivedRho => {
            let rho = kind == IdentityKind::DerivedRho;
            let q = &derived[0];
            require_derived(p, q, rho)?;
            let (s, f) = digit_relation(p, rho)?;
            let lhs = &x_minus_b.scale(&s) * &palinomial(q);
            let rhs = &(&IntPolynomial::x_minus(q.base()) * &f) * &pal;
            IdentityOutcome::compare(kind, lhs, rhs)
        }
        IdentityKind::TwoFamiliesLinear => {
            let (q1, q2) = (&derived[0], &derived[1]);
            let rho1 = derived_is_rho(p, q1)?;
            let rho2 = derived_is_rho(p, q2)?;
            if rho1 != rho2 {
                return Err(PalinomialError::PreconditionFailed(
                    "both instances must be derived in the same direction".into(),
                ));
            }
            digit_relation(p, rho1)?;
            let lhs = &palinomial(q1) * &IntPolynomial::x_minus(q2.base());
            let rhs = &palinomial(q2) * &IntPolynomial::x_minus(q1.base());
            IdentityOutcome::compare(kind, lhs, rhs)
        }
    };
    Ok(outcome)
}

/// `D = f · core` (or `D̄`), core `= Pal / (s·(x − b))`.
pub fn digit_factorization(p: &Palintiple, reverse: bool) -> Result<Vec<IntPolynomial>, PalinomialError> {
    let (s, f) = digit_relation(p, reverse)?;
    let core = palinomial(p)
        .div_exact(&IntPolynomial::x_minus(p.base()).scale(&s))
        .ok_or_else(|| PalinomialError::PreconditionFailed("palinomial does not split as expected".into()))?;
    Ok(vec![f, core])
}

/// `P̂al = (x − b̂) · f · core` for an instance derived from `p`.
pub fn derived_factorization(p: &Palintiple, derived: &Palintiple) -> Result<Vec<IntPolynomial>, PalinomialError> {
    let rho = derived_is_rho(p, derived)?;
    let mut factors = vec![IntPolynomial::x_minus(derived.base())];
    factors.extend(digit_factorization(p, rho)?);
    Ok(factors)
}

pub fn product(factors: &[IntPolynomial]) -> IntPolynomial {
    factors.iter().fold(IntPolynomial::constant(1), |acc, f| &acc * f)
}

/// Linear quotients `P̂al_i / D` for two instances derived from `p` in the
/// same direction; each must divide exactly and have degree one.
pub fn shared_factor_quotients(
    p: &Palintiple,
    q1: &Palintiple,
    q2: &Palintiple,
) -> Result<(IntPolynomial, IntPolynomial), PalinomialError> {
    let rho = derived_is_rho(p, q1)?;
    if derived_is_rho(p, q2)? != rho {
        return Err(PalinomialError::PreconditionFailed("mixed derivation directions".into()));
    }
    let shared = if rho { reverse_digit_polynomial(p) } else { digit_polynomial(p) };
    let quotient = |q: &Palintiple| {
        palinomial(q)
            .div_exact(&shared)
            .filter(|r| r.degree() == Some(1))
            .ok_or_else(|| PalinomialError::PreconditionFailed(format!("{} does not share the factor", q.literal())))
    };
    Ok((quotient(q1)?, quotient(q2)?))
}

/// The extra root `ω = −(b − n)/(nb − 1)` of the digit polynomial of a
/// shifted-symmetric instance, as `(numerator, denominator)`.
pub fn shifted_extra_root(p: &Palintiple) -> (BigInt, BigInt) {
    let (n, b) = (BigInt::from(p.multiplier()), BigInt::from(p.base()));
    (-(&b - &n), &n * &b - 1)
}

// ---------------------------------------------------------------------------
// Roots

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnitCircleOutcome {
    pub passed: bool,
    /// Root with `| |ξ| − 1 |` smallest.
    pub witness: Complex64,
    pub distance: f64,
    pub roots: Vec<Complex64>,
}

/// All complex roots with multiplicity, by Aberth–Ehrlich iteration from
/// perturbed points on a circle.
pub fn find_roots(q: &IntPolynomial, seed: u64) -> Result<Vec<Complex64>, PalinomialError> {
    let degree = q.degree().filter(|d| *d >= 1).ok_or_else(|| {
        PalinomialError::InvalidPolynomial(format!("degree of {q} must be at least 1"))
    })?;
    let zeros = q.coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let reduced: Vec<Complex64> = q.to_complex()[zeros..].to_vec();
    if reduced.iter().any(|c| !c.re.is_finite()) {
        return Err(PalinomialError::InvalidPolynomial("coefficients exceed f64 range".into()));
    }
    let m = degree - zeros;
    if m == 0 {
        return Ok(roots);
    }
    let lead = reduced[m];
    let monic: Vec<Complex64> = reduced.iter().map(|c| c / lead).collect();
    let radius = monic[..m].iter().map(|c| c.norm()).fold(1.0, f64::max);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut z: Vec<Complex64> = (0..m)
        .map(|j| {
            let theta = std::f64::consts::TAU * (j as f64 + rng.gen_range(0.0..0.5)) / m as f64 + 0.4;
            Complex64::from_polar(radius * rng.gen_range(0.9..1.1), theta)
        })
        .collect();

    let eval = |x: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };

    for _ in 0..MAX_ITERATIONS {
        let mut moved = 0.0f64;
        for j in 0..m {
            let (p, dp) = eval(z[j]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..m).filter(|&i| i != j).map(|i| 1.0 / (z[j] - z[i])).sum();
            let step = ratio / (1.0 - ratio * sum);
            if step.re.is_finite() && step.im.is_finite() {
                z[j] -= step;
                moved = moved.max(step.norm() / (1.0 + z[j].norm()));
            }
        }
        if moved < 1e-15 {
            roots.extend(z);
            return Ok(roots);
        }
    }
    Err(PalinomialError::NoConvergence { iterations: MAX_ITERATIONS })
}

pub fn unit_circle_root_check(q: &IntPolynomial, tol: f64) -> Result<UnitCircleOutcome, PalinomialError> {
    unit_circle_root_check_seeded(q, tol, DEFAULT_SEED)
}

pub fn unit_circle_root_check_seeded(
    q: &IntPolynomial,
    tol: f64,
    seed: u64,
) -> Result<UnitCircleOutcome, PalinomialError> {
    let roots = find_roots(q, seed)?;
    let (witness, distance) = roots
        .iter()
        .map(|r| (*r, (r.norm() - 1.0).abs()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("degree at least one");
    Ok(UnitCircleOutcome { passed: distance <= tol, witness, distance, roots })
}

/// Product of the two roots of `d_k x² − x + d_0`, found numerically.
pub fn quadratic_root_product(p: &Palintiple, seed: u64) -> Result<Complex64, PalinomialError> {
    let d = p.digits_lsf();
    let f = IntPolynomial::new(vec![BigInt::from(d[0]), BigInt::from(-1), BigInt::from(d[p.k()])]);
    let roots = find_roots(&f, seed)?;
    Ok(roots[0] * roots[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, b: u64, d: &[u64]) -> Palintiple {
        Palintiple::new(n, b, d).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn arithmetic() {
        let a = poly(&[1, 1]);
        let b = poly(&[-1, 1]);
        assert_eq!(&a * &b, poly(&[-1, 0, 1]));
        assert_eq!(&(&a * &b) - &poly(&[-1, 0, 1]), IntPolynomial::zero());
        assert_eq!(poly(&[-1, 0, 1]).div_exact(&a), Some(b.clone()));
        assert_eq!(poly(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(poly(&[1, 2]).div_rem(&poly(&[0, 2])), Some((poly(&[1]), poly(&[1]))));
        assert_eq!(poly(&[1, 1]).div_rem(&poly(&[0, 2])), None);
        assert_eq!(poly(&[0, 0, 0]).degree(), None);
        assert_eq!(poly(&[3, 0, -1, 1]).to_string(), "x^3 - x^2 + 3");
        assert_eq!(poly(&[2, 3]).eval_homogeneous(&BigInt::from(-2), &BigInt::from(3)), BigInt::zero());
    }

    #[test]
    fn json_shape() {
        let big = IntPolynomial::new(vec![BigInt::from(1), BigInt::from(i64::MAX) * 4]);
        assert_eq!(
            serde_json::to_string(&big).unwrap(),
            r#"{"coeffs":[1,"36893488147419103228"]}"#
        );
    }

    #[test]
    fn worked_seven_digit_example() {
        let src = p(4, 10, &[8, 7, 9, 9, 9, 1, 2]);
        let cyclotomic = poly(&[1, 1, 1, 1, 1]);
        let polys = build_polynomials(&src);
        assert_eq!(polys.pal, poly(&[-30, -27, -27, -27, -27, 3]));
        assert_eq!(polys.pal, (&IntPolynomial::x_minus(10) * &cyclotomic).scale(&BigInt::from(3)));

        let hat = p(10, 139, &[28, 25, 136, 138, 138, 110, 113, 2]);
        let out = check_identity(IdentityKind::DerivedForward, &src, std::slice::from_ref(&hat)).unwrap();
        assert!(out.passed, "{}", out.residual);
        let factors = derived_factorization(&src, &hat).unwrap();
        assert_eq!(factors, vec![IntPolynomial::x_minus(139), poly(&[2, -1, 8]), cyclotomic]);
        assert_eq!(product(&factors), palinomial(&hat));
    }

    #[test]
    fn four_digit_example() {
        let q = p(4, 10, &[8, 7, 1, 2]);
        assert_eq!(carry_polynomial(&q), poly(&[3, 3]));
        let out = check_identity(IdentityKind::LinearFactor, &q, &[]).unwrap();
        assert!(out.passed);
        assert_eq!(out.lhs, poly(&[-30, -27, 3]));
        for kind in [IdentityKind::DigitPoly1089, IdentityKind::DigitPoly1089Reverse] {
            assert!(check_identity(kind, &q, &[]).unwrap().passed);
        }
        assert!(matches!(
            check_identity(IdentityKind::DigitPolyShifted, &q, &[]),
            Err(PalinomialError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn shifted_example() {
        let q = p(2, 5, &[3, 1]);
        assert_eq!(palinomial(&q), IntPolynomial::x_minus(5));
        for kind in [IdentityKind::DigitPolyShifted, IdentityKind::DigitPolyShiftedReverse] {
            assert!(check_identity(kind, &q, &[]).unwrap().passed);
        }
        let (num, den) = shifted_extra_root(&q);
        assert_eq!(digit_polynomial(&q).eval_homogeneous(&num, &den), BigInt::zero());
    }

    #[test]
    fn unit_palindrome_has_zero_palinomial() {
        let relaxed = crate::instance::Relaxations { allow_unit_multiplier: true, ..Default::default() };
        let q = Palintiple::from_lsf_relaxed(1, 10, vec![1, 2, 1], relaxed).unwrap();
        assert!(palinomial(&q).is_zero());
    }

    #[test]
    fn two_families_differ_linearly() {
        let src = p(2, 5, &[3, 1]);
        let fam = crate::derive::derive_family(&src, crate::derive::DerivationMode::SingleForward, 5).unwrap();
        let a = crate::derive::instantiate(&fam, 1).unwrap();
        let b = crate::derive::instantiate(&fam, 2).unwrap();
        let out = check_identity(IdentityKind::TwoFamiliesLinear, &src, &[a.clone(), b.clone()]).unwrap();
        assert!(out.passed);
        let (l1, l2) = shared_factor_quotients(&src, &a, &b).unwrap();
        assert_eq!((l1, l2), (IntPolynomial::x_minus(39), IntPolynomial::x_minus(63)));
    }

    #[test]
    fn wrong_arity_or_source() {
        let src = p(4, 10, &[8, 7, 1, 2]);
        assert!(check_identity(IdentityKind::DerivedForward, &src, &[]).is_err());
        let other = p(9, 10, &[9, 8, 0, 1]);
        assert!(check_identity(IdentityKind::DerivedForward, &src, &[other]).is_err());
    }

    #[test]
    fn unit_circle_examples() {
        let out = unit_circle_root_check(&poly(&[1, 1, 1, 1, 1]), DEFAULT_TOLERANCE).unwrap();
        assert!(out.passed);
        assert!(out.roots.iter().all(|r| (r.norm() - 1.0).abs() < 1e-9));
        let out = unit_circle_root_check(&poly(&[3, 3]), DEFAULT_TOLERANCE).unwrap();
        assert!(out.passed && (out.witness + 1.0).norm() < 1e-12);
        assert!(!unit_circle_root_check(&poly(&[-10, 1]), DEFAULT_TOLERANCE).unwrap().passed);
        assert!(matches!(find_roots(&poly(&[4]), 0), Err(PalinomialError::InvalidPolynomial(_))));
        let roots = find_roots(&poly(&[0, 0, -1, 1]), 7).unwrap();
        assert_eq!(roots.iter().filter(|r| r.norm() == 0.0).count(), 2);
    }

    #[test]
    fn quadratic_roots_multiply_to_inverse_multiplier() {
        let prod = quadratic_root_product(&p(4, 10, &[8, 7, 1, 2]), DEFAULT_SEED).unwrap();
        assert!((prod - Complex64::new(0.25, 0.0)).norm() < ROOT_PRODUCT_TOLERANCE);
    }

    #[test]
    fn pal_at_one_is_nonzero() {
        for q in [p(4, 10, &[8, 7, 1, 2]), p(2, 5, &[3, 1]), p(9, 10, &[9, 8, 0, 1])] {
            assert!(!palinomial(&q).eval(&BigInt::one()).is_zero());
        }
    }
}
