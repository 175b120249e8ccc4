//! Integer factorization by trial division and perfect-power tests.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::exact::{Integer, Rational};

/// Trial division stops at this prime bound; anything left is reported as an
/// unfactored cofactor.
pub const TRIAL_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub negative: bool,
    pub primes: Vec<(Integer, u32)>,
    /// Part above the trial bound, if not 1. Prime when below the bound squared.
    pub cofactor: Option<Integer>,
}

pub fn factorize(n: &Integer) -> Factorization {
    assert!(!n.is_zero(), "factorize(0)");
    let negative = n.is_negative();
    let mut m = n.abs();
    let mut primes = Vec::new();
    let mut push = |p: Integer, m: &mut Integer| {
        let mut e = 0;
        while (&*m % &p).is_zero() {
            *m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p, e));
        }
    };
    push(Integer::from(2), &mut m);
    let mut p = 3u64;
    while p <= TRIAL_BOUND {
        let pb = Integer::from(p);
        if &pb * &pb > m {
            break;
        }
        push(pb, &mut m);
        p += 2;
    }
    let cofactor = if m.is_one() {
        None
    } else if m <= Integer::from(TRIAL_BOUND) * Integer::from(TRIAL_BOUND) {
        primes.push((m, 1));
        None
    } else {
        Some(m)
    };
    Factorization {
        negative,
        primes,
        cofactor,
    }
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }

    pub fn value(&self) -> Integer {
        let mut v = self
            .primes
            .iter()
            .fold(Integer::one(), |a, (p, e)| a * p.pow(*e));
        if let Some(c) = &self.cofactor {
            v *= c;
        }
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// Exponent of `p`.
    pub fn valuation(&self, p: &Integer) -> u32 {
        self.primes.iter().find(|(q, _)| q == p).map_or(0, |(_, e)| *e)
    }
}

impl fmt::Display for Factorization {
    /// `2^13 · 3^2 · 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .primes
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        if let Some(c) = &self.cofactor {
            parts.push(format!("({c})"));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{}{}", if self.negative { "-" } else { "" }, parts.join(" · "))
    }
}

fn is_int_power(n: &Integer, k: u32) -> bool {
    let r = n.nth_root(k);
    &r.pow(k) == n
}

/// Whether `r` is the `k`-th power of a rational.
pub fn is_rational_power(r: &Rational, k: u32) -> bool {
    if k % 2 == 0 && r.is_negative() {
        return false;
    }
    is_int_power(r.numer(), k) && is_int_power(r.denom(), k)
}

/// Whether `a x^k = b z^k` has a solution in nonzero integers `x, z`, that is
/// whether `a / b` is a `k`-th power of a rational.
pub fn related_by_power(a: &Integer, b: &Integer, k: u32) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    is_rational_power(&Rational::new(b.clone(), a.clone()), k)
}

/// A prime whose exponents in `a` and `b` differ by a non-multiple of `k`,
/// from complete factorizations.
pub fn power_obstruction(a: &Factorization, b: &Factorization, k: u32) -> Option<Integer> {
    let mut primes: Vec<&Integer> = a.primes.iter().chain(&b.primes).map(|(p, _)| p).collect();
    primes.sort();
    primes.dedup();
    primes
        .into_iter()
        .find(|p| (a.valuation(p) as i64 - b.valuation(p) as i64).mod_floor(&(k as i64)) != 0)
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn small_factorizations() {
        let f = factorize(&int(-360));
        assert!(f.negative);
        assert_eq!(f.to_string(), "-2^3 · 3^2 · 5");
        assert_eq!(f.value(), int(-360));
        assert_eq!(factorize(&int(1)).to_string(), "1");
        assert_eq!(factorize(&int(999_983)).primes, vec![(int(999_983), 1)]);
    }

    #[test]
    fn powers() {
        assert!(is_rational_power(&Rational::new(int(-8), int(27)), 3));
        assert!(!is_rational_power(&Rational::new(int(-4), int(9)), 2));
        assert!(related_by_power(&int(3), &int(3 * 32), 5));
        assert!(!related_by_power(&int(3), &int(3 * 16), 5));
    }
}
