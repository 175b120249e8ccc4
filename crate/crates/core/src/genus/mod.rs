//! Elliptic genus of a Calabi–Yau complete intersection, as a universal
//! polynomial in Chern numbers and as a vector in the weak Jacobi form basis.

pub mod symmetric;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::ring::factorial;
use crate::exact::{frac, rat, Rational, Ring, TruncSeries, YLaurent, YRationalFn};
use crate::localize::{partitions, ChernMonomial, ChernTable, CompleteIntersection, EquivariantPoint};
use crate::qseries::{BasisSet, JacobiSeries};

/// Series in `x` whose coefficients are q-series over `R`.
pub type XQSeries<R> = TruncSeries<TruncSeries<R>>;

fn xq_const<R: Ring>(c: R, dx: usize, nq: usize) -> XQSeries<R> {
    TruncSeries::constant(TruncSeries::constant(c, nq), dx)
}

/// `e^{s x}` with `s = ±1`.
fn exp_x(sign: i64, dx: usize) -> TruncSeries<Rational> {
    let v = (0..=dx)
        .map(|k| Rational::new(Ring::pow(&rat(sign), k as u32).to_integer(), factorial(k as u32)))
        .collect();
    TruncSeries::from_coeffs(v, dx, &rat(0))
}

/// `x / (1 - e^{-x})`.
fn todd_series(dx: usize) -> TruncSeries<Rational> {
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    let v = (0..=dx)
        .map(|k| Rational::new(Ring::pow(&rat(-1), k as u32).to_integer(), factorial(k as u32 + 1)))
        .collect();
    TruncSeries::from_coeffs(v, dx, &rat(0))
        .inverse()
        .expect("constant term 1")
}

/// `1 + c q^m e^{s x}` as an x-series of q-series.
fn binomial_factor(c: &YLaurent, m: usize, sign: i64, dx: usize, nq: usize) -> XQSeries<YLaurent> {
    let e = exp_x(sign, dx);
    let v = (0..=dx)
        .map(|k| {
            let mut inner = vec![YLaurent::zero(); nq + 1];
            if k == 0 {
                inner[0] = YLaurent::one();
            }
            if m <= nq {
                inner[m] = inner[m].plus(&c.scale(e.coeff(k)));
            }
            TruncSeries::from_coeffs(inner, nq, &YLaurent::zero())
        })
        .collect();
    TruncSeries::from_coeffs(v, dx, &TruncSeries::constant(YLaurent::zero(), nq))
}

/// Characteristic series
/// `Q(x) = y^{-1/2} x/(1-e^{-x}) prod_{n>=1} (1 - y q^{n-1} e^{-x})(1 - y^{-1} q^n e^x) / ((1 - q^n e^{-x})(1 - q^n e^x))`
/// to order `d` in `x` and `N` in `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharSeries {
    d: usize,
    order: usize,
    series: XQSeries<YLaurent>,
}

pub fn char_series(d: usize, n: usize) -> CharSeries {
    let y = YLaurent::monomial(rat(1), 2);
    let y_inv = YLaurent::monomial(rat(1), -2);
    let minus = |c: &YLaurent| c.negate();
    let todd = todd_series(d).map(|c| TruncSeries::constant(YLaurent::constant(c.clone()), n));
    let mut q = todd.scale_by(&TruncSeries::constant(YLaurent::monomial(rat(1), -1), n));
    q = q.times(&binomial_factor(&minus(&y), 0, -1, d, n));
    for m in 1..=n {
        q = q.times(&binomial_factor(&minus(&y), m, -1, d, n));
        q = q.times(&binomial_factor(&minus(&y_inv), m, 1, d, n));
        for sign in [-1, 1] {
            let den = binomial_factor(&YLaurent::constant(rat(-1)), m, sign, d, n);
            q = q.times(&den.inverse().expect("constant term 1 - q^m"));
        }
    }
    CharSeries { d, order: n, series: q }
}

impl CharSeries {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn series(&self) -> &XQSeries<YLaurent> {
        &self.series
    }

    /// Coefficient of `x^k`, a q-series.
    pub fn coeff(&self, k: usize) -> &TruncSeries<YLaurent> {
        self.series.coeff(k)
    }

    /// The x-series at `q^0`.
    pub fn at_q0(&self) -> TruncSeries<YLaurent> {
        self.series.map(|c| c.coeff(0).clone())
    }

    /// Specialization at a rational value of `u = y^{1/2}`.
    pub fn at_u(&self, u: &Rational) -> XQSeries<Rational> {
        self.series.map(|c| c.map(|l| l.eval(u)))
    }

    /// `Q(x)/Q(0)`, with coefficients rational in `u`.
    pub fn normalized(&self) -> Result<XQSeries<YRationalFn>> {
        let q = self.series.map(|c| c.map(|l| YRationalFn::from_laurent(l.clone())));
        let inv = q.coeff(0).inverse()?;
        Ok(q.scale_by(&inv))
    }
}

/// The `q = 0` limit `y^{-1/2} x (1 - y e^{-x}) / (1 - e^{-x})`, built directly.
pub fn chi_y_series(d: usize) -> TruncSeries<YLaurent> {
    let todd = todd_series(d);
    let e = exp_x(-1, d);
    let v = (0..=d)
        .map(|k| {
            // x/(1-e^{-x}) * (1 - y e^{-x}), then times u^{-1}
            let mut l = YLaurent::zero();
            l.add_term(-1, todd.coeff(k).clone());
            let s = (0..=k).fold(rat(0), |a, j| a + todd.coeff(j) * e.coeff(k - j));
            l.add_term(1, -s);
            l
        })
        .collect();
    TruncSeries::from_coeffs(v, d, &YLaurent::zero())
}

/// The elliptic genus of a `d`-fold as a polynomial in its Chern numbers:
/// one q-series per Chern monomial of degree `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernGenusFormula {
    d: usize,
    order: usize,
    terms: Vec<(ChernMonomial, JacobiSeries)>,
}

impl ChernGenusFormula {
    fn from_map(d: usize, order: usize, map: BTreeMap<Vec<u32>, Vec<YLaurent>>) -> Self {
        let mut terms: Vec<(ChernMonomial, JacobiSeries)> = map
            .into_iter()
            .map(|(parts, c)| (ChernMonomial::new(parts), JacobiSeries::new(rat(0), 1, order, c)))
            .collect();
        // table order: lexicographically descending partitions
        terms.sort_by(|a, b| b.0.parts().cmp(a.0.parts()));
        Self { d, order, terms }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &[(ChernMonomial, JacobiSeries)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, m: &ChernMonomial) -> Option<&JacobiSeries> {
        self.terms.iter().find(|(k, _)| k == m).map(|(_, v)| v)
    }

    /// Drops every monomial containing `c_1`.
    pub fn restrict_c1_zero(&self) -> Self {
        Self {
            d: self.d,
            order: self.order,
            terms: self.terms.iter().filter(|(m, _)| !m.parts().contains(&1)).cloned().collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            d: self.d,
            order: order.min(self.order),
            terms: self.terms.iter().map(|(m, s)| (m.clone(), s.truncate(order))).collect(),
        }
    }

    /// Each coefficient series in the basis.
    pub fn decompose(&self, basis: &BasisSet) -> Result<Vec<(ChernMonomial, Vec<Rational>)>> {
        self.terms
            .par_iter()
            .map(|(m, s)| Ok((m.clone(), basis.decompose(s)?)))
            .collect()
    }
}

fn laurent_or_err(f: &YRationalFn, what: impl Fn() -> String) -> Result<YLaurent> {
    f.to_laurent().ok_or_else(|| Error::NonLaurent(what()))
}

/// `prod_i Q(x_i)` in degree `d`, through `q^N`: factors out `Q(0)^d`,
/// expands `exp(sum_k a_k p_k)` with `a = log(Q/Q(0))` and converts power
/// sums to Chern classes.
pub fn genus_in_chern(d: usize, n: usize) -> Result<ChernGenusFormula> {
    let cs = char_series(d, n);
    let a = cs.normalized()?.log()?;
    let q0 = cs.coeff(0).map(|l| YRationalFn::from_laurent(l.clone()));
    let scale = Ring::pow(&q0, d as u32);
    // the (1 - y) denominators of a_mu are cleared by Q(0)^d partition by
    // partition, so the contraction runs over Laurent polynomials
    let weights = partitions(d as u32, 1)
        .into_par_iter()
        .map(|mu| {
            let w = mu
                .iter()
                .fold(scale.clone(), |acc, &k| acc.times(a.coeff(k as usize)))
                .scale(&symmetric::multiplicity_factorial(&mu).recip());
            let c = w
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, f)| laurent_or_err(f, || format!("p_{mu:?} at q^{k}")))
                .collect::<Result<Vec<_>>>()?;
            Ok((mu, TruncSeries::from_coeffs(c, n, &YLaurent::zero())))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    let zero = TruncSeries::constant(YLaurent::zero(), n);
    let map = symmetric::contract_power_sums(&weights, d, &zero)
        .into_iter()
        .map(|(parts, s)| (parts, s.into_coeffs()))
        .collect();
    Ok(ChernGenusFormula::from_map(d, n, map))
}

/// The `q^0` part of [`genus_in_chern`], computed from [`chi_y_series`] in the
/// monomial symmetric basis, without logarithms or power sums.
pub fn chi_y_formula(d: usize) -> ChernGenusFormula {
    let b = chi_y_series(d);
    let map = symmetric::multiplicative_sequence_monomial(b.coeffs(), d)
        .into_iter()
        .map(|(k, v)| (k, vec![v]))
        .collect();
    ChernGenusFormula::from_map(d, 0, map)
}

/// The elliptic genus of one variety.
#[derive(Debug, Clone, PartialEq)]
pub struct GenusValue {
    d: usize,
    series: JacobiSeries,
}

impl GenusValue {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn series(&self) -> &JacobiSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn q_coeff(&self, n: usize) -> &YLaurent {
        self.series.q_coeff(n)
    }

    /// `y^{d/2}` times the `q^0` coefficient, at `y = 1`.
    pub fn euler_specialization(&self) -> Rational {
        self.series.q_coeff(0).shift(self.d as i32).value_at_one()
    }

    /// Value at a rational `u = y^{1/2}`, one entry per power of q.
    pub fn at_u(&self, u: &Rational) -> Vec<Rational> {
        (0..=self.order()).map(|n| self.q_coeff(n).eval(u)).collect()
    }

    pub fn decompose(&self, basis: &BasisSet) -> Result<Vec<Rational>> {
        basis.decompose(&self.series)
    }
}

/// Contracts the formula against a Chern table. Monomials containing `c_1`
/// are skipped (they vanish on a Calabi–Yau); every other monomial must be
/// in the table.
pub fn elliptic_genus(formula: &ChernGenusFormula, table: &ChernTable) -> Result<GenusValue> {
    let n = formula.order();
    let mut acc = vec![YLaurent::zero(); n + 1];
    for (m, s) in formula.terms() {
        if m.parts().contains(&1) {
            continue;
        }
        let v = table.get(m).ok_or_else(|| Error::MissingMonomial(m.to_string()))?;
        let v = Rational::from_integer(v.clone());
        for (k, slot) in acc.iter_mut().enumerate() {
            let c = s.q_coeff(k);
            if !c.vanishes() {
                *slot = slot.plus(&c.scale(&v));
            }
        }
    }
    let d = formula.d();
    let series = JacobiSeries::new(rat(0), 1, n, acc).with_metadata(rat(0), frac(d as i64, 2));
    Ok(GenusValue { d, series })
}

/// Outcome of a coefficient-wise comparison of two genera.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusComparison {
    /// `(n, r)`: power of q and exponent of `u = y^{1/2}`.
    pub differing: Vec<(usize, i32)>,
}

impl GenusComparison {
    pub fn equal(&self) -> bool {
        self.differing.is_empty()
    }
}

impl fmt::Display for GenusComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal() {
            return write!(f, "genera agree");
        }
        let s: Vec<String> = self.differing.iter().map(|(n, r)| format!("q^{n} u^{r}")).collect();
        write!(f, "genera differ at {}", s.join(", "))
    }
}

pub fn compare_genera(g1: &GenusValue, g2: &GenusValue) -> GenusComparison {
    let n = g1.order().min(g2.order());
    let a = g1.series.flatten(n);
    let b = g2.series.flatten(n);
    let mut keys: Vec<(usize, i32)> = a.keys().chain(b.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    let differing = keys.into_iter().filter(|k| a.get(k) != b.get(k)).collect();
    GenusComparison { differing }
}

/// The elliptic genus at `u`, computed directly by localization on the
/// ambient space: `sum_w e(E) prod_T Q / prod_E Q / e(T)`, through `q^N`.
pub fn genus_by_localization(
    ci: &CompleteIntersection,
    point: &EquivariantPoint,
    u: &Rational,
    n: usize,
) -> Result<Vec<Rational>> {
    let d = ci.dim();
    let q = char_series(d, n).at_u(u);
    let q_inv = q.inverse()?;
    let roots = ci.chern_roots();
    let terms = (0..point.num_cosets())
        .into_par_iter()
        .map(|k| {
            let nu: Vec<Rational> = roots.iter().map(|w| point.eval_weight(k, w)).collect();
            let mut prod = xq_const(rat(1), d, n);
            for t in point.tangent_values(k) {
                prod = prod.times(&q.dilate(t));
            }
            for b in &nu {
                prod = prod.times(&q_inv.dilate(b));
            }
            let w = nu.iter().fold(rat(1), |a, b| a * b) / point.euler_tangent(k);
            prod.coeff(d).scale(&w)
        })
        .collect::<Vec<_>>();
    let sum = terms
        .into_iter()
        .fold(TruncSeries::constant(rat(0), n), |a, b| a.plus(&b));
    Ok(sum.into_coeffs())
}
