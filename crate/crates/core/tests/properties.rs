use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use palintiple::instance::{carries_from_digits, digits_from_carries};
use palintiple::palinomial::{check_identity, palinomial, IdentityKind};
use palintiple::search::{brute_force_oracle, enumerate_length};
use palintiple::young::Skeleton;
use palintiple::{derive_family, instantiate, theorem_family, DerivationMode, Palintiple, PalintipleClass, Theorem};

fn params(max_base: u64) -> impl Strategy<Value = (u64, u64)> {
    (3..=max_base).prop_flat_map(|b| (2..b, Just(b)))
}

fn instances(max_base: u64, max_len: usize) -> impl Strategy<Value = Vec<Palintiple>> {
    (params(max_base), 2..=max_len).prop_map(|((n, b), l)| enumerate_length(n, b, l))
}

/// Digit `j` from the carries alone.
fn eq1_digit(p: &Palintiple, j: usize) -> i128 {
    let (n, b, k) = (p.multiplier() as i128, p.base() as i128, p.k() as isize);
    let c = |i: isize| p.carry_or_zero(i) as i128;
    let j = j as isize;
    let num = n * b * c(k - j + 1) - n * c(k - j) + b * c(j + 1) - c(j);
    assert_eq!(num % (n * n - 1), 0);
    num / (n * n - 1)
}

const MODES: [DerivationMode; 4] =
    [DerivationMode::SingleForward, DerivationMode::DoubleForward, DerivationMode::SingleRho, DerivationMode::DoubleRho];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn carries_round_trip(((n, b), digits) in params(20).prop_flat_map(|(n, b)| {
        (Just((n, b)), prop::collection::vec(0..b, 2..=6))
    })) {
        if let Ok(carries) = carries_from_digits(n, b, &digits) {
            prop_assert_eq!(digits_from_carries(n, b, &carries).unwrap(), digits);
        }
    }

    #[test]
    fn enumerated_instances_round_trip(ps in instances(16, 6)) {
        for p in ps {
            let back = digits_from_carries(p.multiplier(), p.base(), p.carries()).unwrap();
            prop_assert_eq!(back.as_slice(), p.digits_lsf());
            for j in 0..=p.k() {
                prop_assert_eq!(eq1_digit(&p, j), p.digit(j) as i128);
            }
            prop_assert_eq!(p.value(), p.reversal_value() * p.multiplier());
        }
    }

    #[test]
    fn enumeration_matches_oracle(((n, b), l) in (params(16), 2usize..=4)) {
        prop_assert_eq!(enumerate_length(n, b, l), brute_force_oracle(n, b, l).unwrap());
    }

    #[test]
    fn divisible_bases_give_symmetric_instances(ps in instances(16, 6)) {
        for p in ps.into_iter().filter(|p| p.base() % (p.multiplier() + 1) == 0) {
            prop_assert_eq!(p.classify(), PalintipleClass::Symmetric);
        }
    }

    #[test]
    fn linear_factor_and_value_at_one(ps in instances(16, 6)) {
        for p in ps {
            let out = check_identity(IdentityKind::LinearFactor, &p, &[]).unwrap();
            prop_assert!(out.passed, "{}: {}", p.literal(), out.residual);
            prop_assert!(!palinomial(&p).eval(&BigInt::one()).is_zero());
        }
    }

    #[test]
    fn canonical_form_ignores_node_order(
        (g, perm) in (2usize..=6).prop_flat_map(|m| (skeleton(m), Just((0..m).collect::<Vec<usize>>()).prop_shuffle()))
    ) {
        let h = g.permuted(&perm);
        prop_assert_eq!(g.canonical_form(64).unwrap(), h.canonical_form(64).unwrap());
    }

    #[test]
    fn canonical_form_matches_brute_force(
        (g, h) in (2usize..=5).prop_flat_map(|m| (skeleton(m), skeleton(m)))
    ) {
        let same = g.canonical_form(64).unwrap() == h.canonical_form(64).unwrap();
        prop_assert_eq!(same, g.brute_force_isomorphic(&h));
    }
}

/// Random sparse skeletons on `m` nodes; low entropy so isomorphic pairs
/// occur often.
fn skeleton(m: usize) -> impl Strategy<Value = Skeleton> {
    (
        0..m,
        prop::collection::vec(any::<bool>(), m),
        prop::collection::vec(any::<bool>(), m),
        prop::collection::vec(prop::sample::select(vec![0u32, 0, 0, 1, 2]), m * m),
    )
        .prop_map(move |(start, even, odd, flat)| Skeleton {
            start,
            even,
            odd,
            matrix: flat.chunks(m).map(|r| r.to_vec()).collect(),
        })
}

#[test]
fn derived_families_are_asymmetric_and_inherit_carries() {
    let mut families = 0;
    for b in 3..=10u64 {
        for n in 2..b {
            for src in (2..=4).flat_map(|l| enumerate_length(n, b, l)) {
                if src.classify() == PalintipleClass::Asymmetric {
                    continue;
                }
                let lo = *src.digits_lsf().iter().max().unwrap() + 1;
                for mode in MODES {
                    let kind = if mode.is_rho() { IdentityKind::DerivedRho } else { IdentityKind::DerivedForward };
                    for nhat in lo..=2 * b * b {
                        let Ok(f) = derive_family(&src, mode, nhat) else { continue };
                        families += 1;
                        assert_eq!(mode.carries_for(&src), f.carries);
                        for alpha in f.admissible(3) {
                            let q = instantiate(&f, alpha).unwrap();
                            assert_eq!(q.classify(), PalintipleClass::Asymmetric, "{}", q.literal());
                            assert_eq!(q.carries(), f.carries.as_slice());
                            let out = check_identity(kind, &src, std::slice::from_ref(&q)).unwrap();
                            assert!(out.passed, "{} from {}: {}", q.literal(), src.literal(), out.residual);
                        }
                    }
                }
            }
        }
    }
    assert!(families > 10, "only {families} families exercised");
}

#[test]
fn every_closed_form_agrees_with_generic_route() {
    let mut checked = 0;
    for b in 3..=12u64 {
        for n in 2..b {
            for src in (2..=4).flat_map(|l| enumerate_length(n, b, l)) {
                for theorem in [
                    Theorem::Hoey,
                    Theorem::RhoHoey,
                    Theorem::Sutcliffe,
                    Theorem::RhoSutcliffe,
                    Theorem::Pudwell,
                    Theorem::RhoPudwell,
                ] {
                    let Ok(t) = theorem_family(&src, theorem, None) else { continue };
                    let g = derive_family(&src, theorem.mode(), t.nhat).unwrap();
                    for alpha in t.admissible(3) {
                        let q = instantiate(&t, alpha).unwrap();
                        let num = q.base() as i128 * g.base.den - g.base.a0;
                        assert_eq!(num % g.base.a1, 0);
                        let r = instantiate(&g, num / g.base.a1).unwrap();
                        assert_eq!(q.digits_lsf(), r.digits_lsf());
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 10, "only {checked} instances compared");
}
