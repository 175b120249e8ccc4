use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::ring::{rational_to_string, Rational, Ring};

/// Laurent polynomial in `u = y^{1/2}`.
///
/// Exponents are stored as integer powers of `u`, so `y^r` with `r` a
/// half-integer is the key `2r`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct YLaurent {
    terms: BTreeMap<i32, Rational>,
}

impl YLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * u^exp`.
    pub fn monomial(c: Rational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.vanishes() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds from `(u-exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in iter {
            out.add_term(e, c);
        }
        out
    }

    /// `c * y^exp` for an integer power of `y`.
    pub fn y_power(c: Rational, exp: i32) -> Self {
        Self::monomial(c, 2 * exp)
    }

    pub fn add_term(&mut self, exp: i32, c: Rational) {
        if c.vanishes() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.vanishes() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterates `(u-exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// True for `c * u^k` with `c` nonzero.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn shift(&self, by: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// Substitutes `u -> u^k` (k may be negative).
    pub fn substitute_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// `y -> y^{-1}`.
    pub fn invert_variable(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Evaluates at a rational value of `u`.
    pub fn eval(&self, u: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(u.clone(), *e as usize)
            } else {
                num_traits::pow(u.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `u = 1`.
    pub fn value_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// All exponents of `u` are even (integral powers of `y`).
    pub fn has_integral_y_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Splits as `u^shift * p(u)` with `p(0) != 0`; `None` for zero.
    pub(crate) fn to_upoly(&self) -> Option<(i32, UPoly)> {
        let lo = self.min_exp()?;
        let hi = self.max_exp()?;
        let mut coeffs = vec![Rational::zero(); (hi - lo) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        Some((lo, UPoly::new(coeffs)))
    }

    pub(crate) fn from_upoly(shift: i32, p: &UPoly) -> Self {
        Self::from_terms(
            p.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i32, c.clone())),
        )
    }
}

impl Ring for YLaurent {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.vanishes() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.recip(), -e))
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.vanishes() {
            return None;
        }
        if self.vanishes() {
            return Some(Self::zero());
        }
        let (sa, a) = self.to_upoly()?;
        let (sb, b) = divisor.to_upoly()?;
        let (q, r) = a.div_rem(&b);
        r.vanishes().then(|| Self::from_upoly(sa - sb, &q))
    }
}

impl fmt::Debug for YLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for YLaurent {
    /// Writes in terms of `y`, e.g. `y^(1/2) + 10 + y^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = *c < Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match (*e % 2 == 0, *e) {
                (_, 0) => String::new(),
                (true, 2) => "y".to_string(),
                (true, _) => format!("y^{}", e / 2),
                (false, _) => format!("y^({}/2)", e),
            };
            if var.is_empty() {
                write!(f, "{}", rational_to_string(&mag))?;
            } else if mag.is_unity() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", rational_to_string(&mag))?;
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial over the rationals, used for exact division
/// and gcd of Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly {
    pub(crate) coeffs: Vec<Rational>,
}

impl UPoly {
    pub(crate) fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.vanishes()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub(crate) fn vanishes(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.coeffs.last().expect("lead of zero polynomial")
    }

    pub(crate) fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.vanishes(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        if self.coeffs.len() < d.coeffs.len() {
            return (UPoly::new(Vec::new()), self.clone());
        }
        let dl = d.lead().recip();
        let dd = d.degree();
        let mut quot = vec![Rational::zero(); self.coeffs.len() - d.coeffs.len() + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &dl;
            if c.vanishes() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub(crate) fn monic(&self) -> UPoly {
        if self.vanishes() {
            return self.clone();
        }
        let l = self.lead().recip();
        UPoly::new(self.coeffs.iter().map(|c| c * &l).collect())
    }

    /// Monic greatest common divisor.
    pub(crate) fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.vanishes() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{frac, rat};

    fn lp(terms: &[(i32, i64)]) -> YLaurent {
        YLaurent::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    #[test]
    fn exact_division_of_theta_leading_terms() {
        // (u^2 - u^-2) / (u - u^-1) = u + u^-1
        let num = lp(&[(2, 1), (-2, -1)]);
        let den = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(num.div_exact(&den).unwrap(), lp(&[(1, 1), (-1, 1)]));
        assert!(den.div_exact(&num).is_none());
    }

    #[test]
    fn inverse_only_for_monomials() {
        assert_eq!(lp(&[(3, 2)]).try_inverse().unwrap(), YLaurent::monomial(frac(1, 2), -3));
        assert!(lp(&[(0, 1), (2, -1)]).try_inverse().is_none());
    }

    #[test]
    fn display_uses_y_exponents() {
        assert_eq!(lp(&[(2, 1), (0, 10), (-2, 1)]).to_string(), "y + 10 + y^-1");
        assert_eq!(lp(&[(1, 1), (-1, -1)]).to_string(), "y^(1/2) - y^(-1/2)");
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = UPoly::new(vec![rat(-2), rat(1), rat(1)]);
        let b = UPoly::new(vec![rat(3), rat(-4), rat(1)]);
        assert_eq!(a.gcd(&b), UPoly::new(vec![rat(-1), rat(1)]));
    }
}
