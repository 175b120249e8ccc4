use std::fmt;

use super::ring::{frac, rat, Rational, Ring};
use crate::error::{Error, Result};

/// Power series `c_0 + c_1 t + ... + c_N t^N` truncated at order `N`.
///
/// Coefficients live in any [`Ring`]; nothing past `t^N` is ever stored or
/// produced. Binary operations on series of different orders truncate to
/// the smaller order.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Pads with zeros (built from `zero`) or truncates to hold orders `0..=order`.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize, zero: &R) -> Self {
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(zero.zero_like());
        }
        Self { coeffs }
    }

    pub fn constant(c: R, order: usize) -> Self {
        let zero = c.zero_like();
        Self::from_coeffs(vec![c], order, &zero)
    }

    /// `c * t^k`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let zero = c.zero_like();
        let mut v = vec![zero.clone(); order + 1];
        if k <= order {
            v[k] = c;
        }
        Self { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        Self::from_coeffs(self.coeffs.clone(), order, &zero)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn derivative(&self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut v: Vec<R> = (1..self.coeffs.len())
            .map(|k| self.coeffs[k].scale(&rat(k as i64)))
            .collect();
        v.push(zero);
        Self { coeffs: v }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NonUnit)?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for j in 1..=k {
                if self.coeffs[j].vanishes() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[j].times(&out[k - j]));
            }
            out.push(acc.times(&inv0).negate());
        }
        Ok(Self { coeffs: out })
    }

    /// Exact quotient `self / d`, dividing by the leading coefficient of `d`
    /// exactly at each step. Works when that coefficient is not a unit but
    /// the quotient still lies in the coefficient ring.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let n = self.order().min(d.order());
        let d0 = &d.coeffs[0];
        if d0.vanishes() {
            return Err(Error::Division("divisor has zero constant term".into()));
        }
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if d.coeffs[j].vanishes() {
                    continue;
                }
                acc = acc.minus(&d.coeffs[j].times(&out[k - j]));
            }
            let q = acc
                .div_exact(d0)
                .ok_or_else(|| Error::Division(format!("coefficient {k} is not divisible")))?;
            out.push(q);
        }
        Ok(Self { coeffs: out })
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_unity() {
            return Err(Error::LogConstant);
        }
        let n = self.order();
        let zero = self.coeffs[0].zero_like();
        let mut l: Vec<R> = vec![zero.clone(); n + 1];
        for m in 1..=n {
            // m l_m = m f_m - sum_{k=1}^{m-1} k l_k f_{m-k}
            let mut acc = self.coeffs[m].scale(&rat(m as i64));
            for k in 1..m {
                if l[k].vanishes() || self.coeffs[m - k].vanishes() {
                    continue;
                }
                acc = acc.minus(&l[k].times(&self.coeffs[m - k]).scale(&rat(k as i64)));
            }
            l[m] = acc.scale(&frac(1, m as i64));
        }
        Ok(Self { coeffs: l })
    }

    /// Exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].vanishes() {
            return Err(Error::ExpConstant);
        }
        let n = self.order();
        let one = self.coeffs[0].one_like();
        let mut e: Vec<R> = Vec::with_capacity(n + 1);
        e.push(one);
        for m in 1..=n {
            // m e_m = sum_{k=1}^{m} k g_k e_{m-k}
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=m {
                if self.coeffs[k].vanishes() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[k].times(&e[m - k]).scale(&rat(k as i64)));
            }
            e.push(acc.scale(&frac(1, m as i64)));
        }
        Ok(Self { coeffs: e })
    }

    /// Substitutes `t -> c t`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut p = Rational::from_integer(1.into());
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x.scale(&p));
            p *= c;
        }
        Self { coeffs: out }
    }
}

impl<R: Ring> Ring for TruncSeries<R> {
    fn zero_like(&self) -> Self {
        let z = self.coeffs[0].zero_like();
        Self::from_coeffs(Vec::new(), self.order(), &z)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.coeffs[0].one_like(), self.order())
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(|c| c.vanishes())
    }
    fn plus(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k].plus(&other.coeffs[k])).collect(),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n).map(|k| self.coeffs[k].minus(&other.coeffs[k])).collect(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n + 1];
        for i in 0..=n {
            if self.coeffs[i].vanishes() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].vanishes() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&self.coeffs[i].times(&other.coeffs[j]));
            }
        }
        Self { coeffs: out }
    }
    fn negate(&self) -> Self {
        self.map(|c| c.negate())
    }
    fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        TruncSeries::div_exact(self, divisor).ok()
    }
}

impl<R: Ring> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.vanishes())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0 + O(t^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(t^{})", parts.join(" + "), self.order() + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ser(v: &[i64], order: usize) -> TruncSeries<Rational> {
        TruncSeries::from_coeffs(v.iter().map(|&c| rat(c)).collect(), order, &rat(0))
    }

    #[test]
    fn inverse_of_one_plus_x() {
        assert_eq!(ser(&[1, 1], 3).inverse().unwrap(), ser(&[1, -1, 1, -1], 3));
    }

    #[test]
    fn inverse_of_one_is_one() {
        assert_eq!(ser(&[1], 5).inverse().unwrap(), ser(&[1], 5));
    }

    #[test]
    fn inverse_of_square_multiplies_back() {
        let f = ser(&[1, 2, 1], 4);
        let g = f.inverse().unwrap();
        assert_eq!(f.times(&g), ser(&[1], 4));
        // (1+x)^-2 = sum (-1)^k (k+1) x^k
        assert_eq!(g, ser(&[1, -2, 3, -4, 5], 4));
    }

    #[test]
    fn inverse_needs_unit_constant() {
        assert_eq!(ser(&[0, 1], 3).inverse(), Err(Error::NonUnit));
    }

    #[test]
    fn log_and_exp_constants() {
        assert_eq!(ser(&[1], 4).log().unwrap(), ser(&[0], 4));
        assert_eq!(ser(&[0], 4).exp().unwrap(), ser(&[1], 4));
        assert_eq!(ser(&[2], 4).log(), Err(Error::LogConstant));
        assert_eq!(ser(&[1], 4).exp(), Err(Error::ExpConstant));
    }

    #[test]
    fn log_one_plus_x_is_mercator() {
        // Mercator: log(1+x) = sum_{k>=1} (-1)^{k+1} x^k / k
        let expected = TruncSeries::from_coeffs(
            (0..=4)
                .map(|k| if k == 0 { rat(0) } else { frac(if k % 2 == 1 { 1 } else { -1 }, k) })
                .collect(),
            4,
            &rat(0),
        );
        assert_eq!(ser(&[1, 1], 4).log().unwrap(), expected);
    }

    #[test]
    fn exp_log_round_trip() {
        let f = ser(&[1, 1, 3], 5);
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
    }

    #[test]
    fn exact_division_with_nonunit_leading_coefficient() {
        // (2 + 4t + 2t^2) / (2 + 2t) = 1 + t over the integers-as-rationals is fine,
        // the interesting case is Laurent coefficients (tested in qseries).
        let a = ser(&[2, 4, 2], 2);
        let b = ser(&[2, 2], 2);
        assert_eq!(a.div_exact(&b).unwrap(), ser(&[1, 1], 2));
    }
}
