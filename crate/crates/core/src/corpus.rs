//! Regression corpus of published worked examples.
//!
//! Each [`Fixture`] is plain data: a citation, a short description and a list
//! of [`Check`]s evaluated against the library. Two known misprints are
//! stored in corrected form with a note explaining the correction.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::derive::{
    derive_family, instantiate_with, permutiple_search, rho_hoey_offset, theorem_family, AffineValue,
    DerivationMode, DeriveError, ParametricFamily, Theorem,
};
use crate::instance::{digits_from_carries, Palintiple, PalintipleClass};
use crate::palinomial::{derived_factorization, palinomial, product, IntPolynomial};
use crate::search::{enumerate_length, scan_pudwell_nonstandard};
use crate::young::{build_young_graph, correspondence_check, is_1089_graph, isomorphic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Topic {
    Instances,
    Search,
    Families,
    Permutiples,
    Palinomials,
    Young,
}

impl Topic {
    pub const ALL: [Topic; 6] =
        [Topic::Instances, Topic::Search, Topic::Families, Topic::Permutiples, Topic::Palinomials, Topic::Young];

    pub fn name(self) -> &'static str {
        match self {
            Topic::Instances => "instances",
            Topic::Search => "search",
            Topic::Families => "families",
            Topic::Permutiples => "permutiples",
            Topic::Palinomials => "palinomials",
            Topic::Young => "young",
        }
    }
}

impl fmt::Display for Topic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Topic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Topic::ALL
            .into_iter()
            .find(|t| t.name() == s || t.name().trim_end_matches('s') == s)
            .ok_or_else(|| {
                let names: Vec<_> = Topic::ALL.iter().map(|t| t.name()).collect();
                format!("unknown topic {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Quoted from the published text.
    Quoted,
    /// Follows immediately from definitions.
    Trivial,
    /// Computed independently by exact evaluation.
    Computed,
}

/// `(n, b, digits)`, digits most significant first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inst {
    pub n: u64,
    pub b: u64,
    pub digits: &'static [u64],
}

impl Inst {
    fn build(&self) -> Result<Palintiple, String> {
        Palintiple::new(self.n, self.b, self.digits).map_err(|e| format!("{self}: {e}"))
    }
}

impl fmt::Display for Inst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}){:?}", self.n, self.b, self.digits)
    }
}

const fn inst(n: u64, b: u64, digits: &'static [u64]) -> Inst {
    Inst { n, b, digits }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Mode(DerivationMode, u64),
    Theorem(Theorem, Option<u64>),
}

impl Route {
    fn family(&self, source: &Palintiple) -> Result<ParametricFamily, DeriveError> {
        match *self {
            Route::Mode(mode, nhat) => derive_family(source, mode, nhat),
            Route::Theorem(t, nhat) => theorem_family(source, t, nhat),
        }
    }
}

/// `(a0, a1, den)` for `(a0 + a1·α)/den`.
pub type Affine = (i128, i128, i128);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Carries `c_k ..= c_0`.
    CarriesOf { p: Inst, carries: &'static [u64] },
    /// Carries `c_{k+1} ..= c_0` determine the digits.
    DigitsOf { n: u64, b: u64, carries: &'static [u64], digits: &'static [u64] },
    Validates(Inst),
    Class(Inst, PalintipleClass),
    EnumerationContains { n: u64, b: u64, len: usize, digits: &'static [u64] },
    EnumerationEquals { n: u64, b: u64, len: usize, all: &'static [&'static [u64]] },
    PudwellScanEmpty { max_base: u64, lengths: &'static [usize] },
    FamilyShape {
        source: Inst,
        route: Route,
        base: Affine,
        digits: &'static [Affine],
        carries: &'static [u64],
        /// `(residue, modulus)` of admissible α.
        alpha_class: Option<(i128, i128)>,
    },
    FamilyBase { source: Inst, route: Route, base: Affine },
    FamilyInstance { source: Inst, route: Route, alpha: i128, allow_zero: bool, expected: Inst, carries: &'static [u64] },
    FamilyRejected { source: Inst, route: Route, error: &'static str },
    RhoHoeyOffset { source: Inst, ell: i128 },
    PalinomialFactors { p: Inst, factors: &'static [&'static [i64]] },
    DerivedFactors { source: Inst, derived: Inst, factors: &'static [&'static [i64]] },
    PermutipleFound {
        digits: &'static [u64],
        bases: (u64, u64),
        multipliers: (u64, u64),
        witness: (u64, u64, &'static [u64], &'static [u64]),
    },
    PermutipleNone { digits: &'static [u64], bases: (u64, u64), multipliers: (u64, u64) },
    YoungNodes { n: u64, b: u64, nodes: &'static [(u64, u64)] },
    LabelsAreNodes { labels_of: (u64, u64), nodes_of: (u64, u64) },
    YoungWalk { n: u64, b: u64, len: usize, digits: &'static [u64] },
    YoungIsomorphic { a: (u64, u64), b: (u64, u64), expected: bool },
    Is1089 { n: u64, b: u64, expected: bool },
    Correspondence {
        lower: (u64, u64),
        upper: (u64, u64),
        max_len: usize,
        forward: bool,
        backward: bool,
        counterexample: Option<(&'static [u64], &'static [u64])>,
    },
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn affine(v: Affine) -> AffineValue {
    AffineValue::new(v.0, v.1, v.2)
}

fn show<T: fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

impl Check {
    pub fn run(&self) -> Result<(), String> {
        match *self {
            Check::CarriesOf { p, carries } => {
                let got = p.build()?.carries_msf();
                ensure(got == carries, || format!("{p}: carries {got:?}, expected {carries:?}"))
            }
            Check::DigitsOf { n, b, carries, digits } => {
                let lsf: Vec<u64> = carries.iter().rev().copied().collect();
                let mut got = digits_from_carries(n, b, &lsf).map_err(|e| e.to_string())?;
                got.reverse();
                ensure(got == digits, || format!("({n},{b}) carries {carries:?}: digits {got:?}, expected {digits:?}"))
            }
            Check::Validates(p) => p.build().map(|_| ()),
            Check::Class(p, class) => {
                let got = p.build()?.classify();
                ensure(got == class, || format!("{p}: class {got:?}, expected {class:?}"))
            }
            Check::EnumerationContains { n, b, len, digits } => {
                let found = enumerate_length(n, b, len).iter().any(|p| p.digits_msf() == digits);
                ensure(found, || format!("({n},{b}) length {len}: {digits:?} not enumerated"))
            }
            Check::EnumerationEquals { n, b, len, all } => {
                let got: Vec<Vec<u64>> = enumerate_length(n, b, len).iter().map(|p| p.digits_msf()).collect();
                let want: Vec<Vec<u64>> = all.iter().map(|d| d.to_vec()).collect();
                ensure(got == want, || format!("({n},{b}) length {len}: got {got:?}, expected {want:?}"))
            }
            Check::PudwellScanEmpty { max_base, lengths } => {
                let r = scan_pudwell_nonstandard(max_base, lengths);
                ensure(r.witnesses.is_empty(), || {
                    let w: Vec<_> = r.witnesses.iter().map(|w| format!("{} n̂={}", w.source, w.nhat)).collect();
                    format!("scan found witnesses: {}", w.join("; "))
                })
            }
            Check::FamilyShape { source, route, base, digits, carries, alpha_class } => {
                let f = route.family(&source.build()?).map_err(|e| e.to_string())?;
                let want: Vec<AffineValue> = digits.iter().map(|d| affine(*d)).collect();
                ensure(f.base == affine(base), || format!("base {}, expected {}", f.base, affine(base)))?;
                ensure(f.digits_msf() == want, || {
                    format!("digits {}, expected {}", show(&f.digits_msf()), show(&want))
                })?;
                ensure(f.carries_msf() == carries, || format!("carries {:?}, expected {carries:?}", f.carries_msf()))?;
                if let Some((r, m)) = alpha_class {
                    let c = f.alpha.class();
                    ensure((c.residue, c.modulus) == (r, m), || {
                        format!("α class {} mod {}, expected {r} mod {m}", c.residue, c.modulus)
                    })?;
                }
                Ok(())
            }
            Check::FamilyBase { source, route, base } => {
                let f = route.family(&source.build()?).map_err(|e| e.to_string())?;
                ensure(f.base == affine(base), || format!("base {}, expected {}", f.base, affine(base)))
            }
            Check::FamilyInstance { source, route, alpha, allow_zero, expected, carries } => {
                let f = route.family(&source.build()?).map_err(|e| e.to_string())?;
                let p = instantiate_with(&f, alpha, allow_zero).map_err(|e| format!("α = {alpha}: {e}"))?;
                let got = (p.multiplier(), p.base(), p.digits_msf());
                ensure(got == (expected.n, expected.b, expected.digits.to_vec()), || {
                    format!("α = {alpha}: got {}, expected {expected}", p.literal())
                })?;
                ensure(p.carries_msf() == carries, || {
                    format!("α = {alpha}: carries {:?}, expected {carries:?}", p.carries_msf())
                })
            }
            Check::FamilyRejected { source, route, error } => match route.family(&source.build()?) {
                Ok(f) => Err(format!("expected {error}, derived {f}")),
                Err(e) => {
                    let name = format!("{e:?}");
                    ensure(name.starts_with(error), || format!("expected {error}, got {e}"))
                }
            },
            Check::RhoHoeyOffset { source, ell } => {
                let got = rho_hoey_offset(&source.build()?).map_err(|e| e.to_string())?;
                ensure(got == ell, || format!("ℓ = {got}, expected {ell}"))
            }
            Check::PalinomialFactors { p, factors } => {
                let pal = palinomial(&p.build()?);
                let want = product(&factors.iter().map(|f| IntPolynomial::from_i64(f)).collect::<Vec<_>>());
                ensure(pal == want, || format!("Pal = {pal}, expected {want}"))
            }
            Check::DerivedFactors { source, derived, factors } => {
                let (s, d) = (source.build()?, derived.build()?);
                let got = derived_factorization(&s, &d).map_err(|e| e.to_string())?;
                let want: Vec<IntPolynomial> = factors.iter().map(|f| IntPolynomial::from_i64(f)).collect();
                ensure(got == want, || format!("factors {}, expected {}", show(&got), show(&want)))?;
                let pal = palinomial(&d);
                ensure(product(&got) == pal, || format!("product of factors differs from {pal}"))
            }
            Check::PermutipleFound { digits, bases, multipliers, witness } => {
                let found = permutiple_search(digits, bases.0..=bases.1, multipliers.0..=multipliers.1)
                    .map_err(|e| e.to_string())?;
                let (base, m, target, operand) = witness;
                let hit = found
                    .iter()
                    .any(|w| w.base == base && w.multiplier == m && w.target == target && w.operand == operand);
                ensure(hit, || format!("{target:?}_{base} = {m}·{operand:?}_{base} not found"))
            }
            Check::PermutipleNone { digits, bases, multipliers } => {
                let found = permutiple_search(digits, bases.0..=bases.1, multipliers.0..=multipliers.1)
                    .map_err(|e| e.to_string())?;
                ensure(found.is_empty(), || format!("unexpected witnesses {found:?}"))
            }
            Check::YoungNodes { n, b, nodes } => {
                let g = build_young_graph(n, b).map_err(|e| e.to_string())?;
                ensure(g.nodes() == nodes, || format!("Y({n},{b}) nodes {:?}, expected {nodes:?}", g.nodes()))
            }
            Check::LabelsAreNodes { labels_of, nodes_of } => {
                let g = build_young_graph(labels_of.0, labels_of.1).map_err(|e| e.to_string())?;
                let h = build_young_graph(nodes_of.0, nodes_of.1).map_err(|e| e.to_string())?;
                let nodes: BTreeSet<(u64, u64)> = h.nodes().iter().copied().collect();
                ensure(g.labels() == nodes, || format!("labels {:?} vs nodes {nodes:?}", g.labels()))
            }
            Check::YoungWalk { n, b, len, digits } => {
                let g = build_young_graph(n, b).map_err(|e| e.to_string())?;
                let hit = g.accepted_paths(len).iter().any(|p| p.digits_msf() == digits);
                ensure(hit, || format!("Y({n},{b}) accepts no walk spelling {digits:?}"))
            }
            Check::YoungIsomorphic { a, b, expected } => {
                let ga = build_young_graph(a.0, a.1).map_err(|e| e.to_string())?;
                let gb = build_young_graph(b.0, b.1).map_err(|e| e.to_string())?;
                let got = isomorphic(&ga, &gb).map_err(|e| e.to_string())?;
                ensure(got == expected, || format!("Y{a:?} ≅ Y{b:?} is {got}, expected {expected}"))
            }
            Check::Is1089 { n, b, expected } => {
                let g = build_young_graph(n, b).map_err(|e| e.to_string())?;
                let got = is_1089_graph(&g);
                ensure(got == expected, || format!("Y({n},{b}) 1089: {got}, expected {expected}"))
            }
            Check::Correspondence { lower, upper, max_len, forward, backward, counterexample } => {
                let r = correspondence_check(lower.0, lower.1, upper.0, upper.1, max_len);
                ensure(r.carries_are_palintiples == forward && r.palintiples_are_carries == backward, || {
                    format!(
                        "directions ({}, {}), expected ({forward}, {backward})",
                        r.carries_are_palintiples, r.palintiples_are_carries
                    )
                })?;
                if let Some((digits, carries)) = counterexample {
                    let literal = Palintiple::new(upper.0, upper.1, digits).map_err(|e| e.to_string())?.literal();
                    let hit = r.carry_counterexamples.iter().any(|c| c.palintiple == literal && c.carries == carries);
                    ensure(hit, || format!("counterexample {literal} with carries {carries:?} not reported"))?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub id: &'static str,
    pub topic: Topic,
    /// Quoted phrase locating the example.
    pub citation: &'static str,
    pub input: &'static str,
    pub expected: &'static str,
    pub source: Source,
    /// Correction applied to the published text, if any.
    pub note: Option<&'static str>,
    /// Excluded unless long-running fixtures are requested.
    pub long: bool,
    pub checks: &'static [Check],
}

impl Fixture {
    pub fn run(&self) -> FixtureResult {
        let failure = self.checks.iter().find_map(|c| c.run().err());
        FixtureResult {
            id: self.id,
            topic: self.topic,
            citation: self.citation,
            source: self.source,
            passed: failure.is_none(),
            detail: failure,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureResult {
    pub id: &'static str,
    pub topic: Topic,
    pub citation: &'static str,
    pub source: Source,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub results: Vec<FixtureResult>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CorpusFilter {
    pub topic: Option<Topic>,
    pub include_long: bool,
}

pub fn run_corpus(fixtures: &[Fixture], filter: CorpusFilter) -> CorpusReport {
    let mut results = Vec::new();
    let mut skipped = 0;
    for f in fixtures {
        if filter.topic.is_some_and(|t| t != f.topic) {
            continue;
        }
        if f.long && !filter.include_long {
            skipped += 1;
            continue;
        }
        results.push(f.run());
    }
    let passed = results.iter().filter(|r| r.passed).count();
    CorpusReport { total: results.len(), passed, failed: results.len() - passed, skipped, results }
}

static FAULT: &[Check] = &[Check::CarriesOf { p: inst(4, 10, &[8, 7, 1, 3]), carries: &[0, 3, 3, 0] }];

/// Copy of `fixtures` with one digit of the first fixture changed, for
/// checking that failures are detected and reported.
pub fn with_injected_fault(fixtures: &[Fixture]) -> Vec<Fixture> {
    let mut out = fixtures.to_vec();
    if let Some(first) = out.first_mut() {
        first.checks = FAULT;
    }
    out
}

use DerivationMode::*;
use Theorem as T;

const P8712: Inst = inst(4, 10, &[8, 7, 1, 2]);
const P10_139: Inst = inst(10, 139, &[28, 25, 108, 113, 2]);
const P31: Inst = inst(2, 5, &[3, 1]);
const P21201: Inst = inst(2, 3, &[2, 1, 2, 0, 1]);
const P8799912: Inst = inst(4, 10, &[8, 7, 9, 9, 9, 1, 2]);

pub static FIXTURES: &[Fixture] = &[
    Fixture {
        id: "carries-8712",
        topic: Topic::Instances,
        citation: "(c_3,c_2,c_1, c_0)=(0,3,3,0)",
        input: "(4,10) digits 8,7,1,2",
        expected: "carries (0,3,3,0)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::CarriesOf { p: P8712, carries: &[0, 3, 3, 0] }],
    },
    Fixture {
        id: "carries-10-139",
        topic: Topic::Instances,
        citation: "carries given by",
        input: "(10,139) digits 28,25,108,113,2",
        expected: "carries (8,7,1,2,0)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::CarriesOf { p: P10_139, carries: &[8, 7, 1, 2, 0] }],
    },
    Fixture {
        id: "digits-from-carries-8712",
        topic: Topic::Instances,
        citation: "(c_3,c_2,c_1, c_0)=(0,3,3,0)",
        input: "(4,10) carries 0,0,3,3,0",
        expected: "digits 8,7,1,2",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::DigitsOf { n: 4, b: 10, carries: &[0, 0, 3, 3, 0], digits: &[8, 7, 1, 2] }],
    },
    Fixture {
        id: "digits-from-carries-10-139",
        topic: Topic::Instances,
        citation: "carries given by",
        input: "(10,139) carries 0,8,7,1,2,0",
        expected: "digits 28,25,108,113,2",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::DigitsOf {
            n: 10,
            b: 139,
            carries: &[0, 8, 7, 1, 2, 0],
            digits: &[28, 25, 108, 113, 2],
        }],
    },
    Fixture {
        id: "validate-8712",
        topic: Topic::Instances,
        citation: "8712 = 4 · 2178",
        input: "(4,10) digits 8,7,1,2",
        expected: "valid",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Validates(P8712)],
    },
    Fixture {
        id: "validate-5-8",
        topic: Topic::Instances,
        citation: "(5\\alpha,\\frac{5 \\alpha-2}{3},\\frac{\\alpha-1}{3},\\alpha)_{8\\alpha}",
        input: "(5,8) digits 5,1,0,1",
        expected: "valid (2625 = 5·525)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Validates(inst(5, 8, &[5, 1, 0, 1]))],
    },
    Fixture {
        id: "class-symmetric",
        topic: Topic::Instances,
        citation: "example of a symmetric palintiple",
        input: "(4,10) digits 8,7,1,2",
        expected: "symmetric",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Class(P8712, PalintipleClass::Symmetric)],
    },
    Fixture {
        id: "class-shifted",
        topic: Topic::Instances,
        citation: "p is trivially shifted-symmetric",
        input: "(2,5) digits 3,1",
        expected: "shifted-symmetric",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Class(P31, PalintipleClass::ShiftedSymmetric)],
    },
    Fixture {
        id: "class-asymmetric",
        topic: Topic::Instances,
        citation: "there exists an asymmetric",
        input: "(10,139) digits 28,25,108,113,2",
        expected: "asymmetric",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Class(P10_139, PalintipleClass::Asymmetric)],
    },
    Fixture {
        id: "carries-14-129",
        topic: Topic::Instances,
        citation: "$(37, 89, 2)_{129}$ with carries $(9,4,0)$",
        input: "(14,129) digits 37,89,2",
        expected: "carries (9,4,0)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::CarriesOf { p: inst(14, 129, &[37, 89, 2]), carries: &[9, 4, 0] }],
    },
    Fixture {
        id: "carries-4-23",
        topic: Topic::Instances,
        citation: "$(6,15,1)_{23}$, with carries $(c_2,c_1,c_0)=(2,1,0)$",
        input: "(4,23) digits 6,15,1",
        expected: "carries (2,1,0)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::CarriesOf { p: inst(4, 23, &[6, 15, 1]), carries: &[2, 1, 0] }],
    },
    Fixture {
        id: "carries-11-17",
        topic: Topic::Instances,
        citation: "$(c_3,c_2,c_1,c_0)=(3, 8, 9, 0)$",
        input: "(11,17) digits 14,12,5,1",
        expected: "carries (3,8,9,0)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::CarriesOf { p: inst(11, 17, &[14, 12, 5, 1]), carries: &[3, 8, 9, 0] }],
    },
    Fixture {
        id: "carries-9-14",
        topic: Topic::Instances,
        citation: "(11, 9, 1, 4, 1)_9",
        input: "(9,14) digits 11,9,1,4,1",
        expected: "carries (2,1,6,7,0)",
        source: Source::Quoted,
        note: Some("printed with base 9, impossible for digit 11; base 14 gives 447525 = 9·49725"),
        long: false,
        checks: &[Check::CarriesOf { p: inst(9, 14, &[11, 9, 1, 4, 1]), carries: &[2, 1, 6, 7, 0] }],
    },
    Fixture {
        id: "walk-2-3",
        topic: Topic::Search,
        citation: "constructed from the $(2,3)$-palintiple",
        input: "n = 2, b = 3, length 5",
        expected: "includes 2,1,2,0,1",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::EnumerationContains { n: 2, b: 3, len: 5, digits: &[2, 1, 2, 0, 1] }],
    },
    Fixture {
        id: "enumerate-4-10",
        topic: Topic::Search,
        citation: "8712 = 4 · 2178",
        input: "n = 4, b = 10, length 4",
        expected: "exactly 8712",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::EnumerationEquals { n: 4, b: 10, len: 4, all: &[&[8, 7, 1, 2]] }],
    },
    Fixture {
        id: "enumerate-9-10",
        topic: Topic::Search,
        citation: "9801 = 9 · 1089",
        input: "n = 9, b = 10, length 4",
        expected: "exactly 9801",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::EnumerationEquals { n: 9, b: 10, len: 4, all: &[&[9, 8, 0, 1]] }],
    },
    Fixture {
        id: "pudwell-scan-100",
        topic: Topic::Search,
        citation: "yielded no Pudwell palintiples",
        input: "shifted-symmetric sources, b <= 100, lengths 2..3",
        expected: "no n̂ ≠ b witnesses",
        source: Source::Quoted,
        note: Some("reduced bound; the full bound is the long fixture pudwell-scan-500"),
        long: false,
        checks: &[Check::PudwellScanEmpty { max_base: 100, lengths: &[2, 3] }],
    },
    Fixture {
        id: "pudwell-scan-500",
        topic: Topic::Search,
        citation: "all possibilities for all $b \\leq 500$",
        input: "shifted-symmetric sources, b <= 500, lengths 2..3",
        expected: "no n̂ ≠ b witnesses",
        source: Source::Quoted,
        note: None,
        long: true,
        checks: &[Check::PudwellScanEmpty { max_base: 500, lengths: &[2, 3] }],
    },
    Fixture {
        id: "hoey-family-2-3",
        topic: Topic::Families,
        citation: "(3,6+8\\alpha)",
        input: "(2,3) 2,1,2,0,1, single derivation, n̂ = 3",
        expected: "base 6+8α, digits (2+3α, 1+2α, 5+7α, 3+5α, 4+6α, α)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[
            Check::FamilyShape {
                source: P21201,
                route: Route::Mode(SingleForward, 3),
                base: (6, 8, 1),
                digits: &[(2, 3, 1), (1, 2, 1), (5, 7, 1), (3, 5, 1), (4, 6, 1), (0, 1, 1)],
                carries: &[2, 1, 2, 0, 1, 0],
                alpha_class: Some((0, 1)),
            },
            Check::FamilyShape {
                source: P21201,
                route: Route::Theorem(T::Hoey, None),
                base: (6, 8, 1),
                digits: &[(2, 3, 1), (1, 2, 1), (5, 7, 1), (3, 5, 1), (4, 6, 1), (0, 1, 1)],
                carries: &[2, 1, 2, 0, 1, 0],
                alpha_class: Some((0, 1)),
            },
        ],
    },
    Fixture {
        id: "hoey-table-2-3",
        topic: Topic::Families,
        citation: "(8, 5, 19, 13, 16, 2)_{22}",
        input: "Hoey family of (2,3) 2,1,2,0,1 at α = 1, 2, 3",
        expected: "(3,14), (3,22), (3,30) rows of the table",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[
            Check::FamilyInstance {
                source: P21201,
                route: Route::Theorem(T::Hoey, None),
                alpha: 1,
                allow_zero: false,
                expected: inst(3, 14, &[5, 3, 12, 8, 10, 1]),
                carries: &[2, 1, 2, 0, 1, 0],
            },
            Check::FamilyInstance {
                source: P21201,
                route: Route::Theorem(T::Hoey, None),
                alpha: 2,
                allow_zero: false,
                expected: inst(3, 22, &[8, 5, 19, 13, 16, 2]),
                carries: &[2, 1, 2, 0, 1, 0],
            },
            Check::FamilyInstance {
                source: P21201,
                route: Route::Theorem(T::Hoey, None),
                alpha: 3,
                allow_zero: false,
                expected: inst(3, 30, &[11, 7, 26, 18, 22, 3]),
                carries: &[2, 1, 2, 0, 1, 0],
            },
        ],
    },
    Fixture {
        id: "sutcliffe-family-2-5",
        topic: Topic::Families,
        citation: "(3+5\\alpha,11+18\\alpha,\\alpha)_{15+24\\alpha}",
        input: "(2,5) 3,1, single derivation, n̂ = 5",
        expected: "base 15+24α, digits (3+5α, 11+18α, α); α = 1 gives (8,29,1) base 39",
        source: Source::Quoted,
        note: Some("labelled (5,5+24α) in the text; its own subscript 15+24α is used"),
        long: false,
        checks: &[
            Check::FamilyShape {
                source: P31,
                route: Route::Mode(SingleForward, 5),
                base: (15, 24, 1),
                digits: &[(3, 5, 1), (11, 18, 1), (0, 1, 1)],
                carries: &[3, 1, 0],
                alpha_class: None,
            },
            Check::FamilyInstance {
                source: P31,
                route: Route::Theorem(T::Sutcliffe, Some(5)),
                alpha: 1,
                allow_zero: false,
                expected: inst(5, 39, &[8, 29, 1]),
                carries: &[3, 1, 0],
            },
        ],
    },
    Fixture {
        id: "sutcliffe-9-107",
        topic: Topic::Families,
        citation: "$(9,107)$-palintiple $(12,40,1)_{107}$",
        input: "(2,5) 3,1, Sutcliffe with n̂ = 9 at α = 1",
        expected: "(9,107) digits 12,40,1 with carries (3,1,0)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::FamilyInstance {
            source: P31,
            route: Route::Theorem(T::Sutcliffe, Some(9)),
            alpha: 1,
            allow_zero: false,
            expected: inst(9, 107, &[12, 40, 1]),
            carries: &[3, 1, 0],
        }],
    },
    Fixture {
        id: "double-rho-11-23",
        topic: Topic::Families,
        citation: "carries $(0,1,21,0)$",
        input: "(11,23) 21,1, double ρ-derivation, n̂ = 34",
        expected: "(34,55) digits 34,1,0,1 with carries (0,1,21,0)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::FamilyInstance {
            source: inst(11, 23, &[21, 1]),
            route: Route::Mode(DoubleRho, 34),
            alpha: 1,
            allow_zero: false,
            expected: inst(34, 55, &[34, 1, 0, 1]),
            carries: &[0, 1, 21, 0],
        }],
    },
    Fixture {
        id: "hoey-4-10",
        topic: Topic::Families,
        citation: "there exists an asymmetric",
        input: "Hoey family of (4,10) 8,7,1,2",
        expected: "base 40+99α; α = 1 gives (10,139) 28,25,108,113,2",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[
            Check::FamilyBase { source: P8712, route: Route::Theorem(T::Hoey, None), base: (40, 99, 1) },
            Check::FamilyInstance {
                source: P8712,
                route: Route::Theorem(T::Hoey, None),
                alpha: 1,
                allow_zero: false,
                expected: P10_139,
                carries: &[8, 7, 1, 2, 0],
            },
        ],
    },
    Fixture {
        id: "pudwell-6-55",
        topic: Topic::Families,
        citation: "congruent to 4 modulo 7",
        input: "Pudwell family of (6,55) 47,7",
        expected: "base 432α, digits (55α, (2585α−1)/7, (47α−6)/7, α), α ≡ 4 (mod 7)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::FamilyShape {
            source: inst(6, 55, &[47, 7]),
            route: Route::Theorem(T::Pudwell, None),
            base: (0, 432, 1),
            digits: &[(0, 55, 1), (-1, 2585, 7), (-6, 47, 7), (0, 1, 1)],
            carries: &[0, 47, 7, 0],
            alpha_class: Some((4, 7)),
        }],
    },
    Fixture {
        id: "rho-hoey-4-10",
        topic: Topic::Families,
        citation: "$\\ell=52$",
        input: "ρ-Hoey family of (4,10) 8,7,1,2",
        expected: "ℓ = 52, base 52+99α, digits (42+80α, 37+72α, 5+11α, 14+27α, 4+8α)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[
            Check::RhoHoeyOffset { source: P8712, ell: 52 },
            Check::FamilyShape {
                source: P8712,
                route: Route::Theorem(T::RhoHoey, None),
                base: (52, 99, 1),
                digits: &[(42, 80, 1), (37, 72, 1), (5, 11, 1), (14, 27, 1), (4, 8, 1)],
                carries: &[2, 1, 7, 8, 0],
                alpha_class: None,
            },
        ],
    },
    Fixture {
        id: "rho-sutcliffe-2-5",
        topic: Topic::Families,
        citation: "(1+27\\alpha,10\\alpha,3 \\alpha)_{3+80\\alpha}",
        input: "ρ-Sutcliffe family of (2,5) 3,1 with n̂ = 9",
        expected: "base 3+80α, digits (1+27α, 10α, 3α)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::FamilyShape {
            source: P31,
            route: Route::Theorem(T::RhoSutcliffe, Some(9)),
            base: (3, 80, 1),
            digits: &[(1, 27, 1), (0, 10, 1), (0, 3, 1)],
            carries: &[1, 3, 0],
            alpha_class: None,
        }],
    },
    Fixture {
        id: "sutcliffe-2-14-fails",
        topic: Topic::Families,
        citation: "is not an integer",
        input: "Sutcliffe construction from (2,14) 9,4 with n̂ = 14",
        expected: "hypothesis fails (s = 14·27/12)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::FamilyRejected {
            source: inst(2, 14, &[9, 4]),
            route: Route::Theorem(T::Sutcliffe, Some(14)),
            error: "HypothesisFailed",
        }],
    },
    Fixture {
        id: "rho-pudwell-2-5",
        topic: Topic::Families,
        citation: "(5\\alpha,\\frac{5 \\alpha-2}{3},\\frac{\\alpha-1}{3},\\alpha)_{8\\alpha}",
        input: "ρ-Pudwell family of (2,5) 3,1",
        expected: "base 8α, α ≡ 1 (mod 3); α = 1 gives (5,8) 5,1,0,1 with carries (0,1,3,0)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[
            Check::FamilyShape {
                source: P31,
                route: Route::Theorem(T::RhoPudwell, None),
                base: (0, 8, 1),
                digits: &[(0, 5, 1), (-2, 5, 3), (-1, 1, 3), (0, 1, 1)],
                carries: &[0, 1, 3, 0],
                alpha_class: Some((1, 3)),
            },
            Check::FamilyInstance {
                source: P31,
                route: Route::Theorem(T::RhoPudwell, None),
                alpha: 1,
                allow_zero: false,
                expected: inst(5, 8, &[5, 1, 0, 1]),
                carries: &[0, 1, 3, 0],
            },
        ],
    },
    Fixture {
        id: "permutiple-4",
        topic: Topic::Permutiples,
        citation: "$(2, 1, 0)_4 = 2 \\cdot (1, 0, 2)_4$",
        input: "digits 2,1,0, base 4, multipliers 2..3",
        expected: "(2,1,0)_4 = 2·(1,0,2)_4",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::PermutipleFound {
            digits: &[2, 1, 0],
            bases: (4, 4),
            multipliers: (2, 3),
            witness: (4, 2, &[2, 1, 0], &[1, 0, 2]),
        }],
    },
    Fixture {
        id: "permutiple-none-3-8-9",
        topic: Topic::Permutiples,
        citation: "there is no permutation, base, or multiplier",
        input: "digits 3,8,9, bases 10..64, multipliers 2..63",
        expected: "no witness",
        source: Source::Quoted,
        note: Some("checked to the stated finite bound"),
        long: false,
        checks: &[Check::PermutipleNone { digits: &[3, 8, 9], bases: (10, 64), multipliers: (2, 63) }],
    },
    Fixture {
        id: "permutiple-9",
        topic: Topic::Permutiples,
        citation: "is a base-9 permutiple",
        input: "digits 2,1,6,7, base 9, multipliers 2..8",
        expected: "(6,7,2,1)_9 = 4·(1,6,2,7)_9",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::PermutipleFound {
            digits: &[2, 1, 6, 7],
            bases: (9, 9),
            multipliers: (2, 8),
            witness: (9, 4, &[6, 7, 2, 1], &[1, 6, 2, 7]),
        }],
    },
    Fixture {
        id: "palinomial-8799912",
        topic: Topic::Palinomials,
        citation: "$3(x-10)(x^4+x^3+x^2+x+1)$",
        input: "(4,10) digits 8,7,9,9,9,1,2",
        expected: "Pal = 3(x−10)(x⁴+x³+x²+x+1)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::PalinomialFactors { p: P8799912, factors: &[&[3], &[-10, 1], &[1, 1, 1, 1, 1]] }],
    },
    Fixture {
        id: "derived-palinomial-10-139",
        topic: Topic::Palinomials,
        citation: "$(x-139)(8 x^2-x+2)(x^4+x^3+x^2+x+1)$",
        input: "(10,139) digits 28,25,136,138,138,110,113,2 derived from (4,10) 8,7,9,9,9,1,2",
        expected: "P̂al = (x−139)(8x²−x+2)(x⁴+x³+x²+x+1)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::DerivedFactors {
            source: P8799912,
            derived: inst(10, 139, &[28, 25, 136, 138, 138, 110, 113, 2]),
            factors: &[&[-139, 1], &[2, -1, 8], &[1, 1, 1, 1, 1]],
        }],
    },
    Fixture {
        id: "young-9-10-nodes",
        topic: Topic::Young,
        citation: "form $[0,0]$, $[0,n-1]$, $[n-1,0]$, or $[n-1,n-1]$",
        input: "Y(9,10)",
        expected: "nodes (0,0), (0,8), (8,0), (8,8)",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::YoungNodes { n: 9, b: 10, nodes: &[(0, 0), (0, 8), (8, 0), (8, 8)] }],
    },
    Fixture {
        id: "young-labels-become-nodes",
        topic: Topic::Young,
        citation: "become the ``carry-nodes'' of the latter",
        input: "edge labels of Y(2,3), nodes of Y(3,14)",
        expected: "equal sets",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::LabelsAreNodes { labels_of: (2, 3), nodes_of: (3, 14) }],
    },
    Fixture {
        id: "young-walk-2-3",
        topic: Topic::Young,
        citation: "constructed from the $(2,3)$-palintiple",
        input: "accepting walks of Y(2,3), length 5",
        expected: "includes 2,1,2,0,1",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::YoungWalk { n: 2, b: 3, len: 5, digits: &[2, 1, 2, 0, 1] }],
    },
    Fixture {
        id: "young-3-14-3-22",
        topic: Topic::Young,
        citation: "every $Y(3,6+8\\alpha)$ is isomorphic to $Y(3,14)$",
        input: "Y(3,14), Y(3,22)",
        expected: "isomorphic",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::YoungIsomorphic { a: (3, 14), b: (3, 22), expected: true }],
    },
    Fixture {
        id: "young-3-14-not-1089",
        topic: Topic::Young,
        citation: "isomorphic to $Y(3,14)$",
        input: "Y(3,14)",
        expected: "not the 1089 graph",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Is1089 { n: 3, b: 14, expected: false }],
    },
    Fixture {
        id: "correspond-2-3-3-14",
        topic: Topic::Young,
        citation: "can be ``derived'' from the Young graph",
        input: "(2,3) against (3,14), lengths up to 8",
        expected: "both directions hold",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Correspondence {
            lower: (2, 3),
            upper: (3, 14),
            max_len: 8,
            forward: true,
            backward: true,
            counterexample: None,
        }],
    },
    Fixture {
        id: "correspond-2-5-9-107",
        topic: Topic::Young,
        citation: "carries $(6,2,0)$  which are not",
        input: "(2,5) against (9,107), lengths up to 6",
        expected: "carries of (24,80,2)_107 are (6,2,0), not a (2,5)-palintiple",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Correspondence {
            lower: (2, 5),
            upper: (9, 107),
            max_len: 6,
            forward: false,
            backward: true,
            counterexample: Some((&[24, 80, 2], &[6, 2, 0])),
        }],
    },
    Fixture {
        id: "correspond-2-5-5-39",
        topic: Topic::Young,
        citation: "the family of $(5,39)$-palintiples can be constructed",
        input: "(2,5) against (5,39), lengths up to 6",
        expected: "both directions hold",
        source: Source::Quoted,
        note: None,
        long: false,
        checks: &[Check::Correspondence {
            lower: (2, 5),
            upper: (5, 39),
            max_len: 6,
            forward: true,
            backward: true,
            counterexample: None,
        }],
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<_> = FIXTURES.iter().map(|f| f.id).collect();
        assert_eq!(ids.len(), FIXTURES.len());
        assert!(FIXTURES.len() >= 25);
    }

    #[test]
    fn topic_names_round_trip() {
        for t in Topic::ALL {
            assert_eq!(t.name().parse::<Topic>(), Ok(t));
        }
        assert_eq!("palinomial".parse::<Topic>(), Ok(Topic::Palinomials));
        assert!("6".parse::<Topic>().is_err());
    }

    #[test]
    fn palinomial_topic_passes() {
        let r = run_corpus(FIXTURES, CorpusFilter { topic: Some(Topic::Palinomials), include_long: false });
        assert_eq!(r.total, 2);
        assert!(r.all_passed(), "{:?}", r.results);
    }

    #[test]
    fn injected_fault_is_reported_once() {
        let fixtures = with_injected_fault(FIXTURES);
        let r = run_corpus(&fixtures, CorpusFilter { topic: Some(Topic::Instances), include_long: false });
        assert_eq!(r.failed, 1);
        assert_eq!(r.results.iter().find(|r| !r.passed).unwrap().id, "carries-8712");
    }
}
