//! Truncated q-expansions of theta functions, modular forms and weak Jacobi
//! forms, with coefficients Laurent polynomials in `u = y^{1/2}`.
//!
//! The theta function with the `y`-dependence is normalized as
//! `θ(q, y) = q^{1/8} (u - u^{-1}) ∏ (1 - q^l)(1 - q^l y)(1 - q^l / y)`,
//! so that `θ² / η⁶ = y - 2 + y^{-1} + O(q)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer as _;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{frac, rat, rational_to_string, Rational, Ring, TruncSeries, YLaurent};

/// `q^offset * sum_k c_k q^{k/step}`, known through `q^{offset + order}`.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiSeries {
    offset: Rational,
    step: usize,
    order: usize,
    coeffs: TruncSeries<YLaurent>,
    weight: Option<Rational>,
    index: Option<Rational>,
}

fn y() -> YLaurent {
    YLaurent::monomial(rat(1), 2)
}

fn y_inv() -> YLaurent {
    YLaurent::monomial(rat(1), -2)
}

/// Multiplies `v` in place by `1 + c s^k`, truncating at its length.
fn mul_binomial(v: &mut [YLaurent], c: &YLaurent, k: usize) {
    if k >= v.len() {
        return;
    }
    for i in (k..v.len()).rev() {
        if !v[i - k].vanishes() {
            let t = v[i - k].times(c);
            v[i] = v[i].plus(&t);
        }
    }
}

impl JacobiSeries {
    /// Coefficients `c_0..c_{order*step}` start at `q^offset`.
    pub fn new(offset: Rational, step: usize, order: usize, coeffs: Vec<YLaurent>) -> Self {
        assert!(step == 1 || step == 2, "q-steps of 1 or 1/2");
        Self {
            offset,
            step,
            order,
            coeffs: TruncSeries::from_coeffs(coeffs, order * step, &YLaurent::zero()),
            weight: None,
            index: None,
        }
    }

    pub fn constant(c: YLaurent, order: usize) -> Self {
        Self::new(rat(0), 1, order, vec![c])
    }

    pub fn with_metadata(mut self, weight: Rational, index: Rational) -> Self {
        self.weight = Some(weight);
        self.index = Some(index);
        self
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// 1 for integral q-powers, 2 when half-integral powers occur.
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn weight(&self) -> Option<&Rational> {
        self.weight.as_ref()
    }

    pub fn index(&self) -> Option<&Rational> {
        self.index.as_ref()
    }

    /// Coefficient of `q^{offset + k/step}`.
    pub fn coeff(&self, k: usize) -> &YLaurent {
        self.coeffs.coeff(k)
    }

    pub fn coeffs(&self) -> &[YLaurent] {
        self.coeffs.coeffs()
    }

    /// Coefficient of `q^n` for integral steps and zero offset.
    pub fn q_coeff(&self, n: usize) -> &YLaurent {
        assert_eq!(self.step, 1, "integral steps");
        self.coeffs.coeff(n)
    }

    fn with_step(&self, step: usize) -> Self {
        if step == self.step {
            return self.clone();
        }
        let m = step / self.step;
        let mut v = vec![YLaurent::zero(); self.order * step + 1];
        for (k, c) in self.coeffs.coeffs().iter().enumerate() {
            v[k * m] = c.clone();
        }
        Self {
            step,
            coeffs: TruncSeries::from_coeffs(v, self.order * step, &YLaurent::zero()),
            ..self.clone()
        }
    }

    /// Drops to integral steps when no half-integral power survives.
    pub fn normalized(&self) -> Self {
        if self.step == 2 && self.coeffs.coeffs().iter().skip(1).step_by(2).all(|c| c.vanishes()) {
            let v: Vec<YLaurent> = self.coeffs.coeffs().iter().step_by(2).cloned().collect();
            Self {
                step: 1,
                coeffs: TruncSeries::from_coeffs(v, self.order, &YLaurent::zero()),
                ..self.clone()
            }
        } else {
            self.clone()
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self, usize) {
        let step = self.step.lcm(&other.step);
        let order = self.order.min(other.order);
        (
            self.with_step(step).truncate(order),
            other.with_step(step).truncate(order),
            order,
        )
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs.truncate(order * self.step),
            ..self.clone()
        }
    }

    fn meta(a: &Option<Rational>, b: &Option<Rational>, f: impl Fn(&Rational, &Rational) -> Rational) -> Option<Rational> {
        match (a, b) {
            (Some(x), Some(y)) => Some(f(x, y)),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, order) = self.aligned(other);
        Self {
            offset: &self.offset + &other.offset,
            step: a.step,
            order,
            coeffs: a.coeffs.times(&b.coeffs),
            weight: Self::meta(&self.weight, &other.weight, |x, y| x + y),
            index: Self::meta(&self.index, &other.index, |x, y| x + y),
        }
        .normalized()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(YLaurent::one(), self.order);
        out.weight = self.weight.as_ref().map(|_| rat(0));
        out.index = self.index.as_ref().map(|_| rat(0));
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.offset != other.offset {
            return Err(Error::OffsetMismatch(
                rational_to_string(&self.offset),
                rational_to_string(&other.offset),
            ));
        }
        let (a, b, order) = self.aligned(other);
        let same = |x: &Option<Rational>, y: &Option<Rational>| if x == y { x.clone() } else { None };
        Ok(Self {
            offset: self.offset.clone(),
            step: a.step,
            order,
            coeffs: a.coeffs.plus(&b.coeffs),
            weight: same(&self.weight, &other.weight),
            index: same(&self.index, &other.index),
        }
        .normalized())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.scale(c),
            ..self.clone()
        }
    }

    /// Exact quotient. The divisor's leading coefficient must divide every
    /// step of the long division.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.coeffs.coeff(0).vanishes() {
            return Err(Error::Division("divisor has vanishing leading coefficient".into()));
        }
        let (a, b, order) = self.aligned(other);
        Ok(Self {
            offset: &self.offset - &other.offset,
            step: a.step,
            order,
            coeffs: a.coeffs.div_exact(&b.coeffs)?,
            weight: Self::meta(&self.weight, &other.weight, |x, y| x - y),
            index: Self::meta(&self.index, &other.index, |x, y| x - y),
        }
        .normalized())
    }

    /// `y -> y^k`.
    pub fn substitute_y_power(&self, k: i32) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| c.substitute_power(k)),
            index: self.index.as_ref().map(|i| i * rat(i64::from(k * k))),
            ..self.clone()
        }
    }

    /// `y -> 1/y`.
    pub fn invert_y(&self) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| c.invert_variable()),
            ..self.clone()
        }
    }

    /// `y -> 1`.
    pub fn at_y_one(&self) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| YLaurent::constant(c.value_at_one())),
            index: None,
            ..self.clone()
        }
    }

    /// Slots `(n, r)` with `r` the exponent of `u`, and their coefficients,
    /// for integral steps up to `order`.
    pub fn flatten(&self, order: usize) -> BTreeMap<(usize, i32), Rational> {
        let s = self.normalized();
        assert_eq!(s.step, 1, "integral steps");
        let mut out = BTreeMap::new();
        for n in 0..=order.min(s.order) {
            for (r, c) in s.coeffs.coeff(n).terms() {
                out.insert((n, r), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for JacobiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.offset.is_zero() {
            write!(f, "q^({}) * ", rational_to_string(&self.offset))?;
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.coeffs().iter().enumerate() {
            if c.vanishes() {
                continue;
            }
            let e = frac(k as i64, self.step as i64);
            parts.push(if e.is_zero() {
                format!("({c})")
            } else {
                format!("({c})*q^{}", rational_to_string(&e))
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "[{} + O(q^{})]", parts.join(" + "), self.order + 1)
    }
}

/// `q^{1/8} (u - u^{-1}) ∏ (1 - q^l)(1 - q^l y)(1 - q^l / y)`.
pub fn theta1(order: usize) -> JacobiSeries {
    let mut v = vec![YLaurent::zero(); order + 1];
    v[0] = YLaurent::from_terms([(1, rat(1)), (-1, rat(-1))]);
    for l in 1..=order {
        mul_binomial(&mut v, &YLaurent::constant(rat(-1)), l);
        mul_binomial(&mut v, &y().negate(), l);
        mul_binomial(&mut v, &y_inv().negate(), l);
    }
    JacobiSeries::new(frac(1, 8), 1, order, v).with_metadata(frac(1, 2), frac(1, 2))
}

/// `q^{1/8} (u + u^{-1}) ∏ (1 - q^n)(1 + q^n y)(1 + q^n / y)`.
pub fn theta2(order: usize) -> JacobiSeries {
    let mut v = vec![YLaurent::zero(); order + 1];
    v[0] = YLaurent::from_terms([(1, rat(1)), (-1, rat(1))]);
    for n in 1..=order {
        mul_binomial(&mut v, &YLaurent::constant(rat(-1)), n);
        mul_binomial(&mut v, &y(), n);
        mul_binomial(&mut v, &y_inv(), n);
    }
    JacobiSeries::new(frac(1, 8), 1, order, v).with_metadata(frac(1, 2), frac(1, 2))
}

/// `∏ (1 - q^n)(1 ± q^{n-1/2} y)(1 ± q^{n-1/2} / y)`, in steps of `q^{1/2}`.
fn theta34(order: usize, sign: i64) -> JacobiSeries {
    let len = 2 * order;
    let mut v = vec![YLaurent::zero(); len + 1];
    v[0] = YLaurent::one();
    for n in 1..=order {
        mul_binomial(&mut v, &YLaurent::constant(rat(-1)), 2 * n);
        mul_binomial(&mut v, &y().scale(&rat(sign)), 2 * n - 1);
        mul_binomial(&mut v, &y_inv().scale(&rat(sign)), 2 * n - 1);
    }
    JacobiSeries::new(rat(0), 2, order, v).with_metadata(frac(1, 2), frac(1, 2))
}

pub fn theta3(order: usize) -> JacobiSeries {
    theta34(order, 1)
}

pub fn theta4(order: usize) -> JacobiSeries {
    theta34(order, -1)
}

/// `q^{1/24} ∏ (1 - q^n)`.
pub fn eta(order: usize) -> JacobiSeries {
    let mut v = vec![YLaurent::zero(); order + 1];
    v[0] = YLaurent::one();
    for n in 1..=order {
        mul_binomial(&mut v, &YLaurent::constant(rat(-1)), n);
    }
    JacobiSeries::new(frac(1, 24), 1, order, v).with_metadata(frac(1, 2), rat(0))
}

fn sigma(n: usize, k: u32) -> Rational {
    let s: u128 = (1..=n).filter(|d| n % d == 0).map(|d| (d as u128).pow(k)).sum();
    Rational::from_integer(s.into())
}

fn eisenstein(order: usize, k: u32, c: i64) -> JacobiSeries {
    let v = (0..=order)
        .map(|n| {
            if n == 0 {
                YLaurent::one()
            } else {
                YLaurent::constant(rat(c) * sigma(n, k))
            }
        })
        .collect();
    JacobiSeries::new(rat(0), 1, order, v).with_metadata(rat(i64::from(k) + 1), rat(0))
}

/// `1 + 240 sum sigma_3(n) q^n`.
pub fn eisenstein4(order: usize) -> JacobiSeries {
    eisenstein(order, 3, 240)
}

/// `1 - 504 sum sigma_5(n) q^n`.
pub fn eisenstein6(order: usize) -> JacobiSeries {
    eisenstein(order, 5, -504)
}

/// Weight 0, index 1: `4 sum_k (θ_k(q, y) / θ_k(q, 1))^2` over `k = 2, 3, 4`.
pub fn phi_0_1(order: usize) -> Result<JacobiSeries> {
    let mut acc: Option<JacobiSeries> = None;
    for th in [theta2(order), theta3(order), theta4(order)] {
        let r = th.div(&th.at_y_one())?;
        let sq = r.mul(&r);
        acc = Some(match acc {
            None => sq,
            Some(a) => a.add(&sq)?,
        });
    }
    let out = acc.expect("three terms").scale(&rat(4)).normalized();
    Ok(out.with_metadata(rat(0), rat(1)))
}

/// Weight -2, index 1: `θ² / η⁶`.
pub fn phi_m2_1(order: usize) -> Result<JacobiSeries> {
    let t = theta1(order);
    let out = t.mul(&t).div(&eta(order).pow(6))?;
    Ok(out.with_metadata(rat(-2), rat(1)))
}

/// Weight 0, index 3/2: `θ(q, y²) / θ(q, y)`.
pub fn phi_0_32(order: usize) -> Result<JacobiSeries> {
    let t = theta1(order);
    let out = t.substitute_y_power(2).div(&t)?;
    Ok(out.with_metadata(rat(0), frac(3, 2)))
}

/// Exponents of `φ_{0,3/2} E_4^a E_6^b φ_{0,1}^c φ_{-2,1}^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub e: u32,
}

impl BasisMonomial {
    pub fn weight(&self) -> i64 {
        4 * i64::from(self.a) + 6 * i64::from(self.b) - 2 * i64::from(self.e)
    }

    pub fn index(&self) -> Rational {
        rat(i64::from(self.c + self.e)) + frac(3, 2)
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::from("phi_0_3/2");
        for (name, k) in [("E4", self.a), ("E6", self.b), ("phi_0_1", self.c), ("phi_-2_1", self.e)] {
            match k {
                0 => {}
                1 => s.push_str(&format!(" {name}")),
                _ => s.push_str(&format!(" {name}^{k}")),
            }
        }
        write!(f, "{s}")
    }
}

/// Monomial basis of weak Jacobi forms of weight 0 and index `d/2`.
#[derive(Debug, Clone)]
pub struct BasisSet {
    d: usize,
    order: usize,
    monomials: Vec<BasisMonomial>,
    elements: Vec<JacobiSeries>,
}

/// Monomials ordered by the power of `φ_{-2,1}`, then by decreasing power of `E_6`.
pub fn basis_monomials(d: usize) -> Result<Vec<BasisMonomial>> {
    if d < 3 || d % 2 == 0 {
        return Err(Error::BasisDimension(d));
    }
    let m = ((d - 3) / 2) as u32;
    let mut out = Vec::new();
    for e in 0..=m {
        for b in (0..=e / 3).rev() {
            if (e - 3 * b) % 2 == 0 {
                out.push(BasisMonomial {
                    a: (e - 3 * b) / 2,
                    b,
                    c: m - e,
                    e,
                });
            }
        }
    }
    Ok(out)
}

pub fn basis_weight0(d: usize, order: usize) -> Result<BasisSet> {
    let monomials = basis_monomials(d)?;
    let (p32, e4, e6, p01, pm21) = (
        phi_0_32(order)?,
        eisenstein4(order),
        eisenstein6(order),
        phi_0_1(order)?,
        phi_m2_1(order)?,
    );
    let elements = monomials
        .iter()
        .map(|m| {
            p32.mul(&e4.pow(m.a))
                .mul(&e6.pow(m.b))
                .mul(&p01.pow(m.c))
                .mul(&pm21.pow(m.e))
        })
        .collect();
    Ok(BasisSet {
        d,
        order,
        monomials,
        elements,
    })
}

impl BasisSet {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn monomials(&self) -> &[BasisMonomial] {
        &self.monomials
    }

    pub fn elements(&self) -> &[JacobiSeries] {
        &self.elements
    }

    /// Slots `(n, r)` in lexicographic order, over the support of the basis
    /// and of `extra`.
    fn slots(&self, extra: Option<&JacobiSeries>) -> Vec<(usize, i32)> {
        let mut s: BTreeSet<(usize, i32)> = BTreeSet::new();
        for e in self.elements.iter().chain(extra) {
            s.extend(e.flatten(self.order).into_keys());
        }
        s.into_iter().collect()
    }

    fn row(f: &JacobiSeries, slots: &[(usize, i32)], order: usize) -> Vec<Rational> {
        let m = f.flatten(order);
        slots
            .iter()
            .map(|k| m.get(k).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }

    /// Flattened coefficient matrix, one row per basis element.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        let slots = self.slots(None);
        self.elements.iter().map(|e| Self::row(e, &slots, self.order)).collect()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix())
    }

    /// Coefficients of `f` in the basis, from its q-expansion up to the
    /// basis order.
    pub fn decompose(&self, f: &JacobiSeries) -> Result<Vec<Rational>> {
        let f = f.normalized();
        if !f.offset().is_zero() {
            return Err(Error::OffsetMismatch(rational_to_string(f.offset()), "0".into()));
        }
        if f.order() < self.order {
            return Err(Error::Dimension {
                expected: self.order,
                got: f.order(),
            });
        }
        let slots = self.slots(Some(&f));
        let rows: Vec<Vec<Rational>> = self.elements.iter().map(|e| Self::row(e, &slots, self.order)).collect();
        linalg::solve_combination(&rows, &Self::row(&f, &slots, self.order))
    }

    /// `sum_k coeffs[k] v_k`.
    pub fn combine(&self, coeffs: &[Rational]) -> Result<JacobiSeries> {
        if coeffs.len() != self.len() {
            return Err(Error::Dimension {
                expected: self.len(),
                got: coeffs.len(),
            });
        }
        let mut acc = self.elements[0].scale(&coeffs[0]);
        for (e, c) in self.elements.iter().zip(coeffs).skip(1) {
            acc = acc.add(&e.scale(c))?;
        }
        Ok(acc)
    }
}
