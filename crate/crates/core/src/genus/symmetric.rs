//! Symmetric functions in `d` formal Chern roots.
//!
//! Polynomials in the Chern classes are [`MultiPoly`]s in `d` variables,
//! variable `i` standing for `c_{i+1}`.

use std::collections::{BTreeMap, HashMap};

use crate::exact::ring::factorial;
use crate::exact::{frac, rat, MultiPoly, Rational, Ring};
use crate::localize::partitions;

/// `p_0, ..., p_d` in terms of `c_1, ..., c_d` by Newton's identities
/// `p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k`.
pub fn power_sums(d: usize) -> Vec<MultiPoly> {
    let c = |i: usize| MultiPoly::var(d, i - 1);
    let mut p = vec![MultiPoly::constant(d, rat(d as i64))];
    for k in 1..=d {
        let sign = |i: usize| if i % 2 == 1 { rat(1) } else { rat(-1) };
        let mut acc = c(k).scale(&(sign(k) * rat(k as i64)));
        for i in 1..k {
            acc = acc.plus(&c(i).times(&p[k - i]).scale(&sign(i)));
        }
        p.push(acc);
    }
    p
}

/// `c_0, ..., c_d` from numeric power sums `p_1..p_d` (`p[0]` is ignored),
/// by `k c_k = sum_{i=1}^k (-1)^{i-1} c_{k-i} p_i`.
pub fn elementary_from_power_sums(p: &[Rational]) -> Vec<Rational> {
    let d = p.len() - 1;
    let mut c = vec![rat(1)];
    for k in 1..=d {
        let mut acc = rat(0);
        for i in 1..=k {
            let t = &c[k - i] * &p[i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        c.push(acc * frac(1, k as i64));
    }
    c
}

/// Numeric power sums `p_0..p_d` from `c_1..c_d` (`c[0]` must be 1).
pub fn power_sums_from_elementary(c: &[Rational]) -> Vec<Rational> {
    let d = c.len() - 1;
    let mut p = vec![rat(d as i64)];
    for k in 1..=d {
        let mut acc = rat(0);
        for i in 1..k {
            let t = &c[i] * &p[k - i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        let t = &c[k] * rat(k as i64);
        if k % 2 == 1 {
            acc += t;
        } else {
            acc -= t;
        }
        p.push(acc);
    }
    p
}

/// `p_mu` in the Chern classes for every partition `mu` of `d`, in table order.
pub fn power_sum_products(d: usize) -> Vec<(Vec<u32>, MultiPoly)> {
    let p = power_sums(d);
    let mut memo: HashMap<Vec<u32>, MultiPoly> = HashMap::new();
    fn get(mu: &[u32], p: &[MultiPoly], memo: &mut HashMap<Vec<u32>, MultiPoly>) -> MultiPoly {
        if mu.len() == 1 {
            return p[mu[0] as usize].clone();
        }
        if let Some(v) = memo.get(mu) {
            return v.clone();
        }
        let rest = get(&mu[1..], p, memo);
        let v = p[mu[0] as usize].times(&rest);
        memo.insert(mu.to_vec(), v.clone());
        v
    }
    partitions(d as u32, 1)
        .into_iter()
        .map(|mu| {
            let v = get(&mu, &p, &mut memo);
            (mu, v)
        })
        .collect()
}

/// `prod_k m_k!` for the multiplicities `m_k` of `mu`.
pub fn multiplicity_factorial(mu: &[u32]) -> Rational {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &k in mu {
        *counts.entry(k).or_default() += 1;
    }
    counts
        .values()
        .fold(rat(1), |a, &m| a * Rational::from_integer(factorial(m)))
}

/// `sum_mu w_mu p_mu` as a polynomial in the Chern classes, keyed by Chern
/// monomial (parts in descending order). Partitions missing from `w` count
/// as zero.
pub fn contract_power_sums<R: Ring>(w: &BTreeMap<Vec<u32>, R>, d: usize, zero: &R) -> BTreeMap<Vec<u32>, R> {
    let mut out: BTreeMap<Vec<u32>, R> = partitions(d as u32, 1).into_iter().map(|m| (m, zero.clone())).collect();
    for (mu, pm) in power_sum_products(d) {
        let Some(coef) = w.get(&mu) else { continue };
        if coef.vanishes() {
            continue;
        }
        for (exps, c) in pm.terms() {
            let slot = out.get_mut(&exps_to_parts(exps)).expect("degree d monomial");
            *slot = slot.plus(&coef.scale(c));
        }
    }
    out
}

/// Weights `prod_j a_{mu_j} / prod_k m_k!` of `p_mu` in the degree-`d` part of
/// `exp(sum_k a_k p_k)`. `a[0]` is ignored.
pub fn exp_weights<R: Ring>(a: &[R], d: usize) -> BTreeMap<Vec<u32>, R> {
    partitions(d as u32, 1)
        .into_iter()
        .map(|mu| {
            let c = mu
                .iter()
                .fold(a[0].one_like(), |acc, &k| acc.times(&a[k as usize]))
                .scale(&multiplicity_factorial(&mu).recip());
            (mu, c)
        })
        .collect()
}

/// Degree-`d` part of `exp(sum_k a_k p_k)` in the Chern classes.
pub fn exp_power_sums<R: Ring>(a: &[R], d: usize) -> BTreeMap<Vec<u32>, R> {
    contract_power_sums(&exp_weights(a, d), d, &a[0].zero_like())
}

fn exps_to_parts(exps: &[u32]) -> Vec<u32> {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate().rev() {
        for _ in 0..e {
            parts.push(i as u32 + 1);
        }
    }
    parts
}

/// A monomial symmetric function `m_lambda` in `d` variables, stored as the
/// multiplicity of each exponent value (zeros included).
type Shape = BTreeMap<u32, usize>;

fn shape_of(lambda: &[u32], d: usize) -> Shape {
    let mut s = Shape::new();
    s.insert(0, d - lambda.len());
    for &v in lambda {
        *s.entry(v).or_default() += 1;
    }
    s.retain(|_, n| *n > 0);
    s
}

fn parts_of(s: &Shape) -> Vec<u32> {
    let mut v = Vec::new();
    for (&val, &n) in s.iter().rev() {
        if val > 0 {
            v.extend(std::iter::repeat_n(val, n));
        }
    }
    v
}

fn binom(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// `m_lambda * e_k` in the monomial basis.
fn times_elementary(f: &BTreeMap<Vec<u32>, u128>, k: usize, d: usize) -> BTreeMap<Vec<u32>, u128> {
    let mut out = BTreeMap::new();
    for (lambda, &coef) in f {
        let shape = shape_of(lambda, d);
        let groups: Vec<(u32, usize)> = shape.iter().map(|(&v, &n)| (v, n)).collect();
        let mut raise = vec![0usize; groups.len()];
        choose_raises(&groups, 0, k, &mut raise, &mut |raise| {
            // value v loses raise[v] entries to v+1
            let mut nu = Shape::new();
            for (g, &(v, n)) in groups.iter().enumerate() {
                *nu.entry(v).or_default() += n - raise[g];
                *nu.entry(v + 1).or_default() += raise[g];
            }
            nu.retain(|_, n| *n > 0);
            // subsets of nu's positions that lower back to lambda
            let mult = groups
                .iter()
                .enumerate()
                .filter(|(g, _)| raise[*g] > 0)
                .fold(1u128, |acc, (g, &(v, _))| acc * binom(nu[&(v + 1)], raise[g]));
            *out.entry(parts_of(&nu)).or_insert(0) += coef * mult;
        });
    }
    out
}

fn choose_raises(groups: &[(u32, usize)], g: usize, left: usize, raise: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if g == groups.len() {
        if left == 0 {
            f(raise);
        }
        return;
    }
    for j in 0..=groups[g].1.min(left) {
        raise[g] = j;
        choose_raises(groups, g + 1, left - j, raise, f);
    }
    raise[g] = 0;
}

/// Expansion of every `e_mu`, `mu` a partition of `d`, in the monomial basis.
pub fn elementary_in_monomials(d: usize) -> BTreeMap<Vec<u32>, BTreeMap<Vec<u32>, u128>> {
    let mut memo: HashMap<Vec<u32>, BTreeMap<Vec<u32>, u128>> = HashMap::new();
    let mut one = BTreeMap::new();
    one.insert(Vec::new(), 1u128);
    memo.insert(Vec::new(), one);
    fn get(mu: &[u32], d: usize, memo: &mut HashMap<Vec<u32>, BTreeMap<Vec<u32>, u128>>) -> BTreeMap<Vec<u32>, u128> {
        if let Some(v) = memo.get(mu) {
            return v.clone();
        }
        let rest = get(&mu[1..], d, memo);
        let v = times_elementary(&rest, mu[0] as usize, d);
        memo.insert(mu.to_vec(), v.clone());
        v
    }
    partitions(d as u32, 1)
        .into_iter()
        .map(|mu| {
            let v = get(&mu, d, &mut memo);
            (mu, v)
        })
        .collect()
}

fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let n = lambda.first().copied().unwrap_or(0);
    (1..=n).map(|i| lambda.iter().filter(|&&p| p >= i).count() as u32).collect()
}

/// Degree-`d` part of `prod_{i=1}^d Q(x_i)` in the Chern classes, for
/// `Q = b_0 + b_1 x + ...`, by expanding in monomial symmetric functions and
/// solving the unitriangular change of basis to products of `c_k`.
pub fn multiplicative_sequence_monomial<R: Ring>(b: &[R], d: usize) -> BTreeMap<Vec<u32>, R> {
    let e = elementary_in_monomials(d);
    let mut k: BTreeMap<Vec<u32>, R> = BTreeMap::new();
    // lexicographically descending refines dominance; e_{lambda'} has
    // leading term m_lambda with coefficient 1
    for lambda in partitions(d as u32, 1) {
        let beta = lambda
            .iter()
            .fold(Ring::pow(&b[0], (d - lambda.len()) as u32), |acc, &p| acc.times(&b[p as usize]));
        let mut acc = beta;
        for (mu, kmu) in &k {
            if let Some(&m) = e[mu].get(&lambda) {
                acc = acc.minus(&kmu.scale(&Rational::from_integer(m.into())));
            }
        }
        let mu = conjugate(&lambda);
        debug_assert_eq!(e[&mu].get(&lambda), Some(&1));
        k.insert(mu, acc);
    }
    k
}
