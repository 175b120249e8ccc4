use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::ring::{rational_to_string, Rational, Ring};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    /// The linear form `sum_i coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.vanishes() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.vanishes() {
            self.terms.remove(&exps);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True if every term has total degree `d`.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// Keeps only terms whose weighted degree `sum w_i e_i` is at most `max`.
    pub fn truncate_weighted(&self, weights: &[u32], max: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let w: u32 = e.iter().zip(weights).map(|(a, b)| a * b).sum();
            if w <= max {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Product keeping only terms of weighted degree at most `max`.
    pub fn times_truncated(&self, other: &Self, weights: &[u32], max: u32) -> Self {
        let wdeg = |e: &[u32]| -> u32 { e.iter().zip(weights).map(|(a, b)| a * b).sum() };
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let wa = wdeg(ea);
            for (eb, cb) in &other.terms {
                if wa + wdeg(eb) > max {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.vanishes());
        Self {
            nvars: self.nvars,
            terms: acc,
        }
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, t: &[Rational]) -> Result<Rational> {
        if t.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: t.len(),
            });
        }
        let maxdeg: Vec<u32> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Rational>> = t
            .iter()
            .zip(&maxdeg)
            .map(|(x, &m)| {
                let mut v = vec![Rational::one()];
                for k in 0..m as usize {
                    let next = &v[k] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term *= &powers[i][k as usize];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitutes `x_i -> images[i]` (a ring homomorphism).
    pub fn compose(&self, images: &[MultiPoly]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(target), p.clone()])
            .collect();
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap().times(&images[i]);
                    cache[i].push(next);
                }
                if k > 0 {
                    term = term.times(&cache[i][k as usize]);
                }
            }
            out = out.plus(&term);
        }
        Ok(out)
    }

    /// Leading term in the (lexicographic) monomial order.
    pub fn leading_term(&self) -> Option<(&[u32], &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (e.as_slice(), c))
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars)
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
        }
        out.terms.retain(|_, c| !c.vanishes());
        out
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.vanishes());
        Self {
            nvars: self.nvars,
            terms: acc,
        }
    }
    fn negate(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn scale(&self, c: &Rational) -> Self {
        if c.vanishes() {
            return self.zero_like();
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next()?;
            if e.iter().all(|&k| k == 0) {
                return Some(Self::constant(self.nvars, c.recip()));
            }
        }
        None
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, k)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    rational_to_string(c)
                } else {
                    format!("{}*{}", rational_to_string(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;

    #[test]
    fn eval_linear() {
        let p = MultiPoly::var(2, 0).plus(&MultiPoly::var(2, 1));
        assert_eq!(p.eval(&[rat(1), rat(2)]).unwrap(), rat(3));
    }

    #[test]
    fn eval_zero_polynomial() {
        assert_eq!(MultiPoly::zero(3).eval(&[rat(5), rat(-2), rat(7)]).unwrap(), rat(0));
    }

    #[test]
    fn eval_dimension_mismatch() {
        let p = MultiPoly::var(2, 0);
        assert_eq!(
            p.eval(&[rat(1)]),
            Err(Error::Dimension {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn add_term_cancels() {
        let mut p = MultiPoly::var(2, 1);
        p.add_term(vec![0, 1], rat(-1));
        assert!(p.vanishes());
    }

    #[test]
    fn compose_is_substitution() {
        // (x1 * x2) with x1 -> x1 + x2, x2 -> x1 - x2 gives x1^2 - x2^2
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        let p = x1.times(&x2);
        let q = p.compose(&[x1.plus(&x2), x1.minus(&x2)]).unwrap();
        assert_eq!(q, x1.times(&x1).minus(&x2.times(&x2)));
    }
}
