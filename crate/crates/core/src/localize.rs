//! Integration over `X = G/P` and over zero loci `Y ⊂ X` of sections of
//! homogeneous bundles, by summing over torus-fixed points.
//!
//! Each fixed point is a coset `wW_P`. At a generic point `t` of the Cartan
//! subalgebra every equivariant class becomes a rational number, so an
//! integral is a finite exact sum of rationals.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::ring::as_integer;
use crate::exact::{rat, Integer, MultiPoly, Rational, Ring, TruncSeries};
use crate::parabolic::{BundleWeights, CrossedDiagram, ParabolicData, WeightConvention};
use crate::rootsys::{Weight, WeylElement};

const MAX_ATTEMPTS: usize = 64;
const COORD_BOUND: i64 = 1000;

/// The zero locus of a general section of the homogeneous bundle attached
/// to a Levi module, inside `G/P`.
#[derive(Debug, Clone)]
pub struct CompleteIntersection {
    pd: ParabolicData,
    bundle: BundleWeights,
    conv: WeightConvention,
}

impl CompleteIntersection {
    pub fn new(diagram: &CrossedDiagram, lambda: &Weight) -> Result<Self> {
        let pd = ParabolicData::new(diagram);
        let bundle = pd.levi_irrep_weights(lambda)?;
        Ok(Self {
            pd,
            bundle,
            conv: WeightConvention::FROZEN,
        })
    }

    pub fn from_parts(pd: ParabolicData, bundle: BundleWeights, conv: WeightConvention) -> Self {
        Self { pd, bundle, conv }
    }

    pub fn with_convention(&self, conv: WeightConvention) -> Self {
        Self {
            conv,
            ..self.clone()
        }
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.pd
    }

    pub fn bundle(&self) -> &BundleWeights {
        &self.bundle
    }

    pub fn convention(&self) -> WeightConvention {
        self.conv
    }

    pub fn ambient_dim(&self) -> usize {
        self.pd.dim()
    }

    pub fn bundle_rank(&self) -> usize {
        self.bundle.rank()
    }

    /// `dim X - rank E`; zero if the bundle is too large.
    pub fn dim(&self) -> usize {
        self.pd.dim().saturating_sub(self.bundle.rank())
    }

    pub fn tangent_weights(&self) -> Vec<Vec<i64>> {
        self.pd.tangent_weights(self.conv)
    }

    pub fn chern_roots(&self) -> Vec<Vec<i64>> {
        self.bundle.chern_roots(self.conv)
    }

    /// First Chern class of `Y`, which is `c_1(T_X) - c_1(E)`, as a weight.
    pub fn first_chern_class(&self) -> Weight {
        let r = self.pd.rank();
        let sum = |v: Vec<Vec<i64>>| v.iter().fold(Weight::zero(r), |a, w| a.add(&Weight::from_ints(w)));
        sum(self.tangent_weights()).sub(&sum(self.chern_roots()))
    }
}

/// Exact symbolic check that `c_1(Y) = 0`.
pub fn first_chern_class_check(ci: &CompleteIntersection) -> bool {
    ci.first_chern_class().is_zero()
}

fn pair(w: &[i64], s: &[Rational]) -> Rational {
    w.iter()
        .zip(s)
        .filter(|(c, _)| **c != 0)
        .fold(Rational::from_integer(0.into()), |acc, (c, x)| acc + x * rat(*c))
}

/// A point `t` at which no tangent weight vanishes at any fixed point.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivariantPoint {
    t: Vec<Rational>,
    /// Per coset `w`, the point `w^T t`, at which base-point weights are
    /// evaluated to give the weights at `wP`.
    shifted: Vec<Vec<Rational>>,
    tangent: Vec<Vec<Rational>>,
}

impl EquivariantPoint {
    /// Draws integer points from a seeded generator until one is generic.
    pub fn generic(pd: &ParabolicData, conv: WeightConvention, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_ATTEMPTS {
            let t: Vec<Rational> = (0..pd.rank())
                .map(|_| rat(rng.gen_range(-COORD_BOUND..=COORD_BOUND)))
                .collect();
            if let Some(p) = Self::at(pd, conv, t) {
                return Ok(p);
            }
        }
        Err(Error::Genericity(MAX_ATTEMPTS))
    }

    /// The point `t`, or `None` if some tangent weight vanishes there.
    pub fn at(pd: &ParabolicData, conv: WeightConvention, t: Vec<Rational>) -> Option<Self> {
        let tw = pd.tangent_weights(conv);
        let shifted: Vec<Vec<Rational>> = pd.coset_reps().iter().map(|w| transpose_act(w, &t)).collect();
        let tangent: Vec<Vec<Rational>> = shifted
            .iter()
            .map(|s| tw.iter().map(|mu| pair(mu, s)).collect())
            .collect();
        if tangent.iter().flatten().any(|v| v.vanishes()) {
            return None;
        }
        Some(Self { t, shifted, tangent })
    }

    pub fn t(&self) -> &[Rational] {
        &self.t
    }

    pub fn num_cosets(&self) -> usize {
        self.shifted.len()
    }

    /// Value at coset `k` of a base-point weight.
    pub fn eval_weight(&self, k: usize, w: &[i64]) -> Rational {
        pair(w, &self.shifted[k])
    }

    pub fn shifted(&self, k: usize) -> &[Rational] {
        &self.shifted[k]
    }

    /// Tangent weights of `X` at coset `k`.
    pub fn tangent_values(&self, k: usize) -> &[Rational] {
        &self.tangent[k]
    }

    /// Equivariant Euler class of `T_X` at coset `k`.
    pub fn euler_tangent(&self, k: usize) -> Rational {
        self.tangent[k].iter().fold(rat(1), |a, b| a * b)
    }
}

/// `(w x)(t) = x(w^T t)` for a weight `x`.
fn transpose_act(w: &WeylElement, t: &[Rational]) -> Vec<Rational> {
    let n = w.rank();
    (0..n)
        .map(|i| {
            (0..n).fold(rat(0), |acc, j| {
                let m = w.entry(j, i);
                if m == 0 {
                    acc
                } else {
                    acc + &t[j] * rat(m)
                }
            })
        })
        .collect()
}

/// `∫_X x` for a polynomial `x` in the weight coordinates, at a generic point.
pub fn integrate_numeric(point: &EquivariantPoint, x: &MultiPoly) -> Result<Rational> {
    let terms: Result<Vec<Rational>> = (0..point.num_cosets())
        .into_par_iter()
        .map(|k| Ok(x.eval(point.shifted(k))? / point.euler_tangent(k)))
        .collect();
    Ok(terms?.iter().fold(rat(0), |a, b| a + b))
}

/// `∫_X x` as an identity of rational functions, without choosing a point.
///
/// Every tangent weight at a fixed point is a root, so each summand is
/// `± (w x) * (product of the remaining positive roots) / L` with `L` the
/// product of all positive roots; the numerators must add up to `c L`.
pub fn integrate_symbolic(pd: &ParabolicData, conv: WeightConvention, x: &MultiPoly) -> Result<Rational> {
    let n = pd.rank();
    if x.nvars() != n {
        return Err(Error::Dimension {
            expected: n,
            got: x.nvars(),
        });
    }
    let d = pd.dim() as u32;
    if !x.is_homogeneous_of(d) {
        return Err(Error::Degree {
            expected: d as usize,
            got: x.degree().unwrap_or(0) as usize,
        });
    }
    let rs = pd.root_system();
    for &j in pd.levi_nodes() {
        if rs.simple_reflection(j).act_poly(x)? != *x {
            return Err(Error::NotInvariant);
        }
    }
    let pos: Vec<MultiPoly> = rs.positive_roots().iter().map(|r| r.to_poly()).collect();
    let tw = pd.tangent_weights(conv);
    let mut total = MultiPoly::zero(n);
    for w in pd.coset_reps() {
        let mut used = vec![false; pos.len()];
        let mut sign = rat(1);
        for mu in &tw {
            let (idx, positive) = rs.classify_root(&w.act_ints(mu)).expect("tangent weights are roots");
            used[idx] = true;
            if !positive {
                sign = -sign;
            }
        }
        let mut term = w.act_poly(x)?.scale(&sign);
        for (k, p) in pos.iter().enumerate() {
            if !used[k] {
                term = term.times(p);
            }
        }
        total = total.plus(&term);
    }
    let l = pos.iter().fold(MultiPoly::one(n), |a, p| a.times(p));
    let c = match (total.leading_term(), l.leading_term()) {
        (None, _) => rat(0),
        (Some((e, a)), Some((f, b))) if e == f => a / b,
        _ => return Err(Error::NotConstant),
    };
    if total != l.scale(&c) {
        return Err(Error::NotConstant);
    }
    Ok(c)
}

/// Equivariant Chern classes of `Y` at the base point, `C_0..C_order`, as
/// polynomials: the graded pieces of `prod (1 + mu) / prod (1 + nu)`.
pub fn chern_class_polys(ci: &CompleteIntersection, order: usize) -> Vec<MultiPoly> {
    let n = ci.parabolic().rank();
    let linear = |w: &[i64]| MultiPoly::linear(&w.iter().map(|&c| rat(c)).collect::<Vec<_>>());
    let one = MultiPoly::one(n);
    let factor = |w: &[i64]| TruncSeries::from_coeffs(vec![one.clone(), linear(w)], order, &one.zero_like());
    let num = ci
        .tangent_weights()
        .iter()
        .fold(TruncSeries::constant(one.clone(), order), |a, w| a.times(&factor(w)));
    let den = ci
        .chern_roots()
        .iter()
        .fold(TruncSeries::constant(one.clone(), order), |a, w| a.times(&factor(w)));
    num.times(&den.inverse().expect("constant term is one")).into_coeffs()
}

/// Top Chern class of the bundle at the base point.
pub fn bundle_euler_poly(ci: &CompleteIntersection) -> MultiPoly {
    let n = ci.parabolic().rank();
    ci.chern_roots().iter().fold(MultiPoly::one(n), |a, w| {
        a.times(&MultiPoly::linear(&w.iter().map(|&c| rat(c)).collect::<Vec<_>>()))
    })
}

/// Partitions of `n` into parts `>= min_part`, parts in decreasing order,
/// listed in decreasing lexicographic order.
pub fn partitions(n: u32, min_part: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (min..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

/// A monomial `c_{i(1)} ... c_{i(n)}`, parts in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChernMonomial {
    parts: Vec<u32>,
}

impl ChernMonomial {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Degree-`d` monomials without `c_1`, in table order.
    pub fn all_without_c1(d: u32) -> Vec<Self> {
        partitions(d, 2).into_iter().map(|p| Self { parts: p }).collect()
    }
}

impl fmt::Display for ChernMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| format!("c{p}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl std::str::FromStr for ChernMonomial {
    type Err = Error;

    /// Parses `"c13 c2 c2"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split_whitespace()
            .map(|t| {
                t.strip_prefix('c')
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad Chern monomial {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Self::new(parts))
    }
}

#[derive(Debug, Clone, PartialEq)]
struct CosetChern {
    c: Vec<Rational>,
    /// `prod nu / prod mu`
    weight: Rational,
    bundle_c1: Rational,
}

/// Localized Chern data of `Y` at every fixed point of `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernData {
    d: usize,
    cosets: Vec<CosetChern>,
}

impl ChernData {
    pub fn new(ci: &CompleteIntersection, point: &EquivariantPoint) -> Self {
        let d = ci.dim();
        let roots = ci.chern_roots();
        let cosets = (0..point.num_cosets())
            .into_par_iter()
            .map(|k| {
                let nu: Vec<Rational> = roots.iter().map(|w| point.eval_weight(k, w)).collect();
                let mut c = vec![rat(0); d + 1];
                c[0] = rat(1);
                for mu in point.tangent_values(k) {
                    for p in (1..=d).rev() {
                        let v = &c[p - 1] * mu;
                        c[p] += v;
                    }
                }
                // divide by (1 + nu s): c_p -= nu c_{p-1}, ascending
                for v in &nu {
                    for p in 1..=d {
                        let x = &c[p - 1] * v;
                        c[p] -= x;
                    }
                }
                let num = nu.iter().fold(rat(1), |a, b| a * b);
                let bundle_c1 = nu.iter().fold(rat(0), |a, b| a + b);
                CosetChern {
                    c,
                    weight: num / point.euler_tangent(k),
                    bundle_c1,
                }
            })
            .collect();
        Self { d, cosets }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn num_cosets(&self) -> usize {
        self.cosets.len()
    }

    /// `C_p` at coset `k`.
    pub fn chern(&self, k: usize, p: usize) -> &Rational {
        &self.cosets[k].c[p]
    }

    /// `∫_Y` of a monomial of full degree.
    pub fn integrate_monomial(&self, m: &ChernMonomial) -> Result<Rational> {
        if m.degree() as usize != self.d {
            return Err(Error::Degree {
                expected: self.d,
                got: m.degree() as usize,
            });
        }
        Ok(self
            .cosets
            .iter()
            .map(|cc| {
                m.parts()
                    .iter()
                    .fold(cc.weight.clone(), |a, &p| a * &cc.c[p as usize])
            })
            .fold(rat(0), |a, b| a + b))
    }

    /// `∫_Y c_1(E)^d`.
    pub fn line_degree(&self) -> Rational {
        self.cosets
            .iter()
            .map(|cc| Ring::pow(&cc.bundle_c1, self.d as u32) * &cc.weight)
            .fold(rat(0), |a, b| a + b)
    }
}

/// Chern numbers of `Y` over all monomials without `c_1`, in table order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernTable {
    label: String,
    rows: Vec<(ChernMonomial, Integer)>,
}

impl ChernTable {
    pub fn new(label: impl Into<String>, rows: Vec<(ChernMonomial, Integer)>) -> Self {
        Self {
            label: label.into(),
            rows,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rows(&self) -> &[(ChernMonomial, Integer)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, m: &ChernMonomial) -> Option<&Integer> {
        self.rows.iter().find(|(k, _)| k == m).map(|(_, v)| v)
    }

    pub fn as_map(&self) -> BTreeMap<ChernMonomial, Integer> {
        self.rows.iter().cloned().collect()
    }

    /// A copy with one value replaced.
    pub fn with_value(&self, m: &ChernMonomial, v: Integer) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|(k, old)| (k.clone(), if k == m { v.clone() } else { old.clone() }))
            .collect();
        Self::new(self.label.clone(), rows)
    }
}

fn integral(r: Rational, what: impl Fn() -> String) -> Result<Integer> {
    as_integer(&r).ok_or_else(|| Error::NonIntegral(format!("{} = {}", what(), r)))
}

pub fn chern_table(ci: &CompleteIntersection, point: &EquivariantPoint, label: &str) -> Result<ChernTable> {
    let data = ChernData::new(ci, point);
    let monomials = ChernMonomial::all_without_c1(data.dim() as u32);
    let rows = monomials
        .into_par_iter()
        .map(|m| {
            let v = data.integrate_monomial(&m)?;
            let v = integral(v, || m.to_string())?;
            Ok((m, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChernTable::new(label, rows))
}

pub fn line_degree(ci: &CompleteIntersection, point: &EquivariantPoint) -> Result<Integer> {
    integral(ChernData::new(ci, point).line_degree(), || "line degree".to_string())
}

/// `∫_Y c_d`.
pub fn euler_number(ci: &CompleteIntersection, point: &EquivariantPoint) -> Result<Integer> {
    let data = ChernData::new(ci, point);
    let m = ChernMonomial::new(vec![data.dim() as u32]);
    integral(data.integrate_monomial(&m)?, || m.to_string())
}
