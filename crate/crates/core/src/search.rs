//! Enumeration of palintiples.
//!
//! [`enumerate_length`] walks carry pairs `(c_j, c_{k−j+1})` from the outside
//! of the number inwards, choosing one mirrored digit pair per step; this is
//! the accepting-walk structure of the Young graph, generated on the fly.
//! [`brute_force_oracle`] is the definitional check over every integer of the
//! requested length and shares no code with the walk.

use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::derive::{derive_family, DerivationMode, FamilyRecord};
use crate::instance::{Palintiple, PalintipleClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("result cap of {cap} reached; {} results returned", partial.len())]
    CapExceeded { cap: usize, partial: Vec<Palintiple> },
    #[error("search space {size} exceeds the oracle bound {bound}")]
    BoundExceeded { size: u128, bound: u128 },
}

/// Multipliers to search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multipliers {
    One(u64),
    /// Every `2 <= n < b`.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub base: u64,
    pub multipliers: Multipliers,
    pub lengths: RangeInclusive<usize>,
    pub cap: Option<usize>,
}

impl EnumerationQuery {
    pub fn new(multiplier: u64, base: u64, length: usize) -> Self {
        EnumerationQuery { base, multipliers: Multipliers::One(multiplier), lengths: length..=length, cap: None }
    }

    fn validate(&self) -> Result<Vec<u64>, SearchError> {
        if *self.lengths.start() < 2 || self.lengths.is_empty() {
            return Err(SearchError::InvalidQuery("lengths must be at least 2".into()));
        }
        match self.multipliers {
            Multipliers::One(n) if n >= 2 && n < self.base => Ok(vec![n]),
            Multipliers::One(n) => Err(SearchError::InvalidQuery(format!(
                "need 2 <= n < b, got n = {n}, b = {}",
                self.base
            ))),
            Multipliers::All if self.base > 2 => Ok((2..self.base).collect()),
            Multipliers::All => Err(SearchError::InvalidQuery("base must exceed 2".into())),
        }
    }
}

/// All palintiples matching the query, sorted by `(n, length, value)`.
pub fn enumerate_palintiples(query: &EnumerationQuery) -> Result<Vec<Palintiple>, SearchError> {
    let mults = query.validate()?;
    let b = query.base;
    let cells: Vec<(u64, usize)> = mults
        .iter()
        .flat_map(|&n| query.lengths.clone().map(move |l| (n, l)))
        .collect();
    let mut all: Vec<Palintiple> = cells
        .par_iter()
        .flat_map_iter(|&(n, l)| enumerate_length(n, b, l))
        .collect();
    all.sort();
    all.dedup();
    if let Some(cap) = query.cap {
        if all.len() > cap {
            all.truncate(cap);
            return Err(SearchError::CapExceeded { cap, partial: all });
        }
    }
    Ok(all)
}

/// Every `(n, b)`-palintiple with exactly `length` digits, sorted by value.
pub fn enumerate_length(n: u64, b: u64, length: usize) -> Vec<Palintiple> {
    assert!(n >= 2 && b > n && length >= 2);
    let mut walk = Walk { n, b, length, low: Vec::new(), high: Vec::new(), out: Vec::new() };
    walk.descend(0, 0);
    walk.out.sort();
    walk.out
}

struct Walk {
    n: u64,
    b: u64,
    length: usize,
    /// d_0, d_1, …
    low: Vec<u64>,
    /// d_k, d_{k−1}, …
    high: Vec<u64>,
    out: Vec<Palintiple>,
}

impl Walk {
    fn descend(&mut self, u: u64, w: u64) {
        let step = self.low.len();
        let half = self.length / 2;
        if step == half {
            self.finish(u, w);
            return;
        }
        let (n, b) = (self.n, self.b);
        let first = step == 0;
        for d_high in 0..b {
            // n·d_high + u = d_low + b·u'
            let t = n * d_high + u;
            let (d_low, u2) = (t % b, t / b);
            // n·d_low + w' = d_high + b·w
            let rhs = d_high + b * w;
            let lhs = n * d_low;
            if rhs < lhs {
                continue;
            }
            let w2 = rhs - lhs;
            if w2 >= n {
                continue;
            }
            if first && (d_low == 0 || d_high == 0) {
                continue;
            }
            self.low.push(d_low);
            self.high.push(d_high);
            self.descend(u2, w2);
            self.low.pop();
            self.high.pop();
        }
    }

    fn finish(&mut self, u: u64, w: u64) {
        let middle = if self.length.is_multiple_of(2) {
            if u != w {
                return;
            }
            None
        } else {
            // (n − 1)·d_mid = b·w − u
            let num = self.b * w;
            if num < u || !(num - u).is_multiple_of(self.n - 1) {
                return;
            }
            let d = (num - u) / (self.n - 1);
            if d >= self.b {
                return;
            }
            Some(d)
        };
        let mut digits = self.low.clone();
        digits.extend(middle);
        digits.extend(self.high.iter().rev());
        let p = Palintiple::from_lsf(self.n, self.b, digits).expect("accepting walk yields a palintiple");
        self.out.push(p);
    }
}

/// Default ceiling on `b^L` for the brute-force oracle.
pub const ORACLE_BOUND: u128 = 1_000_000_000;

/// Loops over every `length`-digit base-`b` integer with nonzero units digit
/// and keeps those equal to `n` times their reversal.
pub fn brute_force_oracle(n: u64, b: u64, length: usize) -> Result<Vec<Palintiple>, SearchError> {
    brute_force_oracle_bounded(n, b, length, ORACLE_BOUND)
}

pub fn brute_force_oracle_bounded(n: u64, b: u64, length: usize, bound: u128) -> Result<Vec<Palintiple>, SearchError> {
    if n < 2 || b <= n || length < 2 {
        return Err(SearchError::InvalidQuery(format!("need 2 <= n < b and length >= 2 (n = {n}, b = {b})")));
    }
    let size = (b as u128).checked_pow(length as u32).unwrap_or(u128::MAX);
    if size > bound {
        return Err(SearchError::BoundExceeded { size, bound });
    }
    let (b, lo, hi) = (b, (size / b as u128) as u64, size as u64);
    let mut found = Vec::new();
    let mut digits = vec![0u64; length];
    for p in lo..hi {
        if p % b == 0 {
            continue;
        }
        let mut x = p;
        let mut rev = 0u64;
        for slot in digits.iter_mut() {
            *slot = x % b;
            rev = rev * b + *slot;
            x /= b;
        }
        if rev.checked_mul(n) == Some(p) {
            found.push(Palintiple::from_lsf(n, b, digits.clone()).expect("oracle hit is a palintiple"));
        }
    }
    Ok(found)
}

/// A derived family found by a scan, with the input it was derived from.
#[derive(Debug, Clone, Serialize)]
pub struct ScanWitness {
    pub source: String,
    pub nhat: u64,
    pub family: FamilyRecord,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub scan: String,
    pub population: String,
    pub max_base: u64,
    pub lengths: Vec<usize>,
    pub instances_examined: usize,
    pub candidates_tested: usize,
    pub witnesses: Vec<ScanWitness>,
    pub elapsed: String,
}

/// Looks for doubly-derived palintiples with `n̂ ≠ b` from every
/// shifted-symmetric `(n, b)`-palintiple with `b <= max_base` and one of the
/// given lengths.
///
/// Candidates are the `n̂ > max digit`, `n̂ ≠ b`, such that for every carry
/// `n̂ − 1` divides `D(b−1)c_j/(n−1)` and `n̂ + 1` divides `D(b+1)c_j/(n+1)`
/// with `D = gcd(d_0, n̂² − 1)`; each is passed to the full construction.
pub fn scan_pudwell_nonstandard(max_base: u64, lengths: &[usize]) -> ScanReport {
    let start = Instant::now();
    let per_base: Vec<(usize, usize, Vec<ScanWitness>)> = (3..=max_base)
        .into_par_iter()
        .map(|b| {
            let mut examined = 0;
            let mut tested = 0;
            let mut witnesses = Vec::new();
            for n in 2..b {
                for &l in lengths {
                    for p in enumerate_length(n, b, l) {
                        if p.classify() != PalintipleClass::ShiftedSymmetric {
                            continue;
                        }
                        examined += 1;
                        for nhat in pudwell_candidates(&p) {
                            tested += 1;
                            if let Ok(f) = derive_family(&p, DerivationMode::DoubleForward, nhat) {
                                witnesses.push(ScanWitness { source: p.literal(), nhat, family: f.to_record() });
                            }
                        }
                    }
                }
            }
            (examined, tested, witnesses)
        })
        .collect();
    let mut report = ScanReport {
        scan: "pudwell-nonstandard".into(),
        population: format!(
            "all shifted-symmetric (n,b)-palintiples with 2 <= n < b <= {max_base} and length in {lengths:?}"
        ),
        max_base,
        lengths: lengths.to_vec(),
        instances_examined: 0,
        candidates_tested: 0,
        witnesses: Vec::new(),
        elapsed: String::new(),
    };
    for (e, t, w) in per_base {
        report.instances_examined += e;
        report.candidates_tested += t;
        report.witnesses.extend(w);
    }
    report.elapsed = format!("{:.3}s", start.elapsed().as_secs_f64());
    report
}

/// New multipliers `n̂ ≠ b` passing the necessary divisibility conditions.
pub fn pudwell_candidates(p: &Palintiple) -> Vec<u64> {
    let b = p.base();
    divisibility_candidates(p).into_iter().filter(|&nhat| nhat != b).collect()
}

/// All `n̂ > max digit` passing the divisibility conditions, `n̂ = b`
/// included.
pub fn divisibility_candidates(p: &Palintiple) -> Vec<u64> {
    let (n, b) = (p.multiplier() as u128, p.base() as u128);
    let d0 = p.digit(0) as u128;
    let max_digit = *p.digits_lsf().iter().max().unwrap() as u128;
    let carries: Vec<u128> = p.carries().iter().filter(|c| **c != 0).map(|c| *c as u128).collect();
    let Some(&c) = carries.first() else { return Vec::new() };
    // n̂ + 1 divides D(b+1)c/(n+1), which divides d_0(b+1)c/(n+1)
    let bound = d0 * (b + 1) * c / (n + 1);
    let mut out = Vec::new();
    for m in divisors(bound) {
        if m < 3 {
            continue;
        }
        let nhat = m - 1;
        if nhat <= max_digit {
            continue;
        }
        let big_d = gcd_u(d0, nhat * nhat - 1);
        let ok = carries.iter().all(|&c| {
            let lo = big_d * (b - 1) * c;
            let hi = big_d * (b + 1) * c;
            lo.is_multiple_of((nhat - 1) * (n - 1)) && hi.is_multiple_of((nhat + 1) * (n + 1))
        });
        if ok {
            out.push(nhat as u64);
        }
    }
    out
}

fn gcd_u(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn divisors(x: u128) -> Vec<u128> {
    if x == 0 {
        return Vec::new();
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u128;
    while i * i <= x {
        if x.is_multiple_of(i) {
            small.push(i);
            if i * i != x {
                large.push(x / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn msf(ps: &[Palintiple]) -> Vec<Vec<u64>> {
        ps.iter().map(|p| p.digits_msf()).collect()
    }

    #[test]
    fn famous_four_digit_cases() {
        assert_eq!(msf(&enumerate_length(9, 10, 4)), vec![vec![9, 8, 0, 1]]);
        assert_eq!(msf(&enumerate_length(4, 10, 4)), vec![vec![8, 7, 1, 2]]);
        assert!(msf(&enumerate_length(2, 3, 5)).contains(&vec![2, 1, 2, 0, 1]));
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(msf(&brute_force_oracle(4, 10, 4).unwrap()), vec![vec![8, 7, 1, 2]]);
        assert_eq!(msf(&brute_force_oracle(9, 10, 4).unwrap()), vec![vec![9, 8, 0, 1]]);
        assert!(brute_force_oracle(2, 10, 2).unwrap().is_empty());
        assert!(matches!(
            brute_force_oracle(2, 10, 10),
            Err(SearchError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn query_over_all_multipliers_and_cap() {
        let q = EnumerationQuery { base: 10, multipliers: Multipliers::All, lengths: 2..=6, cap: None };
        let all = enumerate_palintiples(&q).unwrap();
        let got: Vec<(u64, Vec<u64>)> = all.iter().map(|p| (p.multiplier(), p.digits_msf())).collect();
        assert_eq!(
            got,
            vec![
                (4, vec![8, 7, 1, 2]),
                (4, vec![8, 7, 9, 1, 2]),
                (4, vec![8, 7, 9, 9, 1, 2]),
                (9, vec![9, 8, 0, 1]),
                (9, vec![9, 8, 9, 0, 1]),
                (9, vec![9, 8, 9, 9, 0, 1]),
            ]
        );
        let capped = EnumerationQuery { cap: Some(2), ..q };
        match enumerate_palintiples(&capped) {
            Err(SearchError::CapExceeded { partial, .. }) => assert_eq!(partial.len(), 2),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn bad_queries() {
        assert!(enumerate_palintiples(&EnumerationQuery::new(10, 10, 4)).is_err());
        assert!(enumerate_palintiples(&EnumerationQuery::new(2, 10, 1)).is_err());
    }

    #[test]
    fn tiny_pudwell_scan_is_empty() {
        let r = scan_pudwell_nonstandard(4, &[2, 3]);
        assert_eq!(r.instances_examined, 0);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn candidate_filter_keeps_every_success() {
        let mut standard = 0;
        for b in 3..=16u64 {
            for n in 2..b {
                for p in [2, 3].into_iter().flat_map(|l| enumerate_length(n, b, l)) {
                    if p.classify() != PalintipleClass::ShiftedSymmetric {
                        continue;
                    }
                    let kept = divisibility_candidates(&p);
                    let max_digit = *p.digits_lsf().iter().max().unwrap();
                    for nhat in max_digit + 1..=2 * b * b {
                        if derive_family(&p, DerivationMode::DoubleForward, nhat).is_ok() {
                            assert!(kept.contains(&nhat), "{} n̂={nhat}", p.literal());
                            standard += (nhat == b) as usize;
                        }
                    }
                }
            }
        }
        assert!(standard > 0);
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
