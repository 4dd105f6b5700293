//! Small exact integer helpers: gcds, modular inverses, linear congruences
//! and a residue-class combiner for non-coprime moduli.

use num_integer::Integer;

/// A residue class `x ≡ residue (mod modulus)` with `0 <= residue < modulus`.
///
/// A modulus of 1 means "every integer".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Residue {
    pub residue: i128,
    pub modulus: i128,
}

impl Residue {
    pub const ANY: Residue = Residue { residue: 0, modulus: 1 };

    pub fn new(residue: i128, modulus: i128) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        Residue { residue: residue.rem_euclid(modulus), modulus }
    }

    pub fn contains(&self, x: i128) -> bool {
        x.rem_euclid(self.modulus) == self.residue
    }

    /// Smallest member of the class that is `>= lower`.
    pub fn first_at_least(&self, lower: i128) -> i128 {
        lower + (self.residue - lower).rem_euclid(self.modulus)
    }

    /// Intersection of two classes; `None` when incompatible.
    pub fn intersect(&self, other: &Residue) -> Option<Residue> {
        crt_pair(*self, *other)
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// Modular inverse of `a` modulo `m > 0`, if it exists.
pub fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    if m == 1 {
        return Some(0);
    }
    let e = a.rem_euclid(m).extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m))
}

/// Solves `a·x ≡ c (mod m)` for `m > 0`.
///
/// Returns the full solution set as a residue class modulo `m / gcd(a, m)`.
pub fn solve_linear_congruence(a: i128, c: i128, m: i128) -> Option<Residue> {
    assert!(m > 0);
    let a = a.rem_euclid(m);
    let c = c.rem_euclid(m);
    let g = gcd(a, m);
    if c % g != 0 {
        return None;
    }
    let m2 = m / g;
    let inv = mod_inverse(a / g, m2)?;
    let x = mul_mod(c / g, inv, m2);
    Some(Residue::new(x, m2))
}

/// Combines two residue classes (generalised Chinese remaindering).
pub fn crt_pair(x: Residue, y: Residue) -> Option<Residue> {
    let (r1, m1) = (x.residue, x.modulus);
    let (r2, m2) = (y.residue, y.modulus);
    let g = gcd(m1, m2);
    if (r2 - r1).rem_euclid(g) != 0 {
        return None;
    }
    let l = m1 / g * m2;
    let m2g = m2 / g;
    // r1 + m1·t ≡ r2 (mod m2)  ⇒  (m1/g)·t ≡ (r2−r1)/g (mod m2/g)
    let t = if m2g == 1 {
        0
    } else {
        let inv = mod_inverse((m1 / g).rem_euclid(m2g), m2g)?;
        mul_mod(((r2 - r1) / g).rem_euclid(m2g), inv, m2g)
    };
    Some(Residue::new(r1 + m1 * t, l))
}

/// Folds a list of classes into one; the empty list gives `Residue::ANY`.
pub fn crt_all<I: IntoIterator<Item = Residue>>(classes: I) -> Option<Residue> {
    classes.into_iter().try_fold(Residue::ANY, crt_pair)
}

fn mul_mod(a: i128, b: i128, m: i128) -> i128 {
    a.checked_mul(b)
        .map(|p| p.rem_euclid(m))
        .expect("modular product overflowed i128")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn congruence_matches_brute_force() {
        for m in 1..40i128 {
            for a in -5..45i128 {
                for c in 0..m {
                    let brute: Vec<i128> = (0..m).filter(|x| (a * x - c).rem_euclid(m) == 0).collect();
                    match solve_linear_congruence(a, c, m) {
                        None => assert!(brute.is_empty(), "a={a} c={c} m={m}"),
                        Some(r) => {
                            let got: Vec<i128> = (0..m).filter(|x| r.contains(*x)).collect();
                            assert_eq!(got, brute, "a={a} c={c} m={m}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn crt_matches_brute_force() {
        for m1 in 1..13i128 {
            for m2 in 1..13i128 {
                for r1 in 0..m1 {
                    for r2 in 0..m2 {
                        let a = Residue::new(r1, m1);
                        let b = Residue::new(r2, m2);
                        let lcm = m1 / gcd(m1, m2) * m2;
                        let brute: Vec<i128> =
                            (0..lcm).filter(|x| a.contains(*x) && b.contains(*x)).collect();
                        match crt_pair(a, b) {
                            None => assert!(brute.is_empty()),
                            Some(c) => {
                                assert_eq!(c.modulus, lcm);
                                assert_eq!(brute, vec![c.residue]);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_of_four_mod_ninety_nine() {
        assert_eq!(mod_inverse(4, 99), Some(25));
        assert_eq!(mod_inverse(3, 99), None);
    }

    #[test]
    fn first_member() {
        let r = Residue::new(4, 7);
        assert_eq!(r.first_at_least(1), 4);
        assert_eq!(r.first_at_least(5), 11);
        assert_eq!(Residue::ANY.first_at_least(3), 3);
    }
}
