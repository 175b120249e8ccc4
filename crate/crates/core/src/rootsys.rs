//! Simple root systems, weights in the fundamental-weight basis, and Weyl
//! groups acting on them.
//!
//! Node numbering is Bourbaki's. For F4 the double edge joins nodes 2 and 3,
//! with nodes 1, 2 long and 3, 4 short.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{rat, MultiPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Squared root lengths, normalized so the long roots of a simply-laced
    /// system have length 2.
    fn squared_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Diagram edges as 0-based node pairs.
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                (0..n - 1).map(|i| (i, i + 1)).collect()
            }
            Family::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        Self::new(family, rank)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// A weight `sum_i c_i omega_i`, stored by its coordinates `c_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![Rational::zero(); rank])
    }

    /// `omega_i`, 0-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coords[i] = Rational::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Integer coordinates, if integral and within `i64`.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    i64::try_from(c.numer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coords.iter().map(|a| a * c).collect())
    }

    /// Value of the weight at a point `t` of the Cartan subalgebra,
    /// `sum_i c_i t_i`.
    pub fn pair(&self, t: &[Rational]) -> Rational {
        self.coords
            .iter()
            .zip(t)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// The weight as a linear polynomial in the coordinate variables.
    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::linear(&self.coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(crate::exact::rational_to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Element of the Weyl group, as an integer matrix on fundamental-weight
/// coordinates. Column `i` is the image of `omega_i`.
#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        Self {
            rank,
            matrix,
            word: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry in row `j`, column `i`.
    pub fn entry(&self, j: usize, i: usize) -> i64 {
        self.matrix[j * self.rank + i]
    }

    /// A word in 0-based simple reflections whose product is this element
    /// (reduced when produced by [`RootSystem::weyl_group`]).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    pub fn act(&self, w: &Weight) -> Result<Weight> {
        if w.rank() != self.rank {
            return Err(Error::Dimension {
                expected: self.rank,
                got: w.rank(),
            });
        }
        let n = self.rank;
        let coords = (0..n)
            .map(|j| {
                (0..n).fold(Rational::zero(), |acc, i| {
                    let m = self.matrix[j * n + i];
                    if m == 0 {
                        acc
                    } else {
                        acc + &w.coords[i] * rat(m)
                    }
                })
            })
            .collect();
        Ok(Weight::new(coords))
    }

    /// Integer action, used on roots in the hot paths.
    pub fn act_ints(&self, v: &[i64]) -> Vec<i64> {
        let n = self.rank;
        (0..n)
            .map(|j| (0..n).map(|i| self.matrix[j * n + i] * v[i]).sum())
            .collect()
    }

    /// Linear extension to polynomials in the coordinate variables.
    pub fn act_poly(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.nvars() != self.rank {
            return Err(Error::Dimension {
                expected: self.rank,
                got: p.nvars(),
            });
        }
        let n = self.rank;
        // x_i -> sum_j M_ji x_j
        let images: Vec<MultiPoly> = (0..n)
            .map(|i| MultiPoly::linear(&(0..n).map(|j| rat(self.matrix[j * n + i])).collect::<Vec<_>>()))
            .collect();
        p.compose(&images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank;
        let mut matrix = vec![0; n * n];
        for j in 0..n {
            for k in 0..n {
                let a = self.matrix[j * n + k];
                if a == 0 {
                    continue;
                }
                for i in 0..n {
                    matrix[j * n + i] += a * other.matrix[k * n + i];
                }
            }
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Self {
            rank: n,
            matrix,
            word,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank;
        let m: Vec<Vec<Rational>> = (0..n)
            .map(|j| (0..n).map(|i| rat(self.matrix[j * n + i])).collect())
            .collect();
        let inv = linalg::inverse(&m).expect("Weyl elements are invertible");
        let matrix = inv
            .iter()
            .flat_map(|row| row.iter().map(|c| i64::try_from(c.numer()).expect("integral inverse")))
            .collect();
        Self {
            rank: n,
            matrix,
            word: self.word.iter().rev().copied().collect(),
        }
    }
}

/// A simple root system with its Cartan data and positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: DynkinType,
    cartan: Vec<Vec<i64>>,
    sq_lengths: Vec<i64>,
    gram_omega: Vec<Vec<Rational>>,
    positive: Vec<Vec<i64>>,
    positive_simple: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, (usize, bool)>,
}

impl RootSystem {
    pub fn new(ty: DynkinType) -> Self {
        let n = ty.rank();
        let len = ty.squared_lengths();
        let mut form = vec![vec![0i64; n]; n];
        for i in 0..n {
            form[i][i] = len[i];
        }
        for (i, j) in ty.edges() {
            let v = -len[i].max(len[j]) / 2;
            form[i][j] = v;
            form[j][i] = v;
        }
        // A_ij = <alpha_i, alpha_j^vee>, so row i is alpha_i in omega coordinates.
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * form[i][j] / len[j]).collect())
            .collect();

        // A G = D with D = diag(|alpha_j|^2 / 2)
        let a_rat: Vec<Vec<Rational>> = cartan.iter().map(|r| r.iter().map(|&c| rat(c)).collect()).collect();
        let a_inv = linalg::inverse(&a_rat).expect("Cartan matrix is invertible");
        let gram_omega = (0..n)
            .map(|i| (0..n).map(|j| &a_inv[i][j] * rat(len[j]) / rat(2)).collect())
            .collect();

        let positive_simple = reflection_closure(&cartan);
        let positive: Vec<Vec<i64>> = positive_simple
            .iter()
            .map(|beta| (0..n).map(|j| (0..n).map(|k| beta[k] * cartan[k][j]).sum()).collect())
            .collect();
        let mut lookup = HashMap::new();
        for (idx, r) in positive.iter().enumerate() {
            lookup.insert(r.clone(), (idx, true));
            lookup.insert(r.iter().map(|c| -c).collect(), (idx, false));
        }
        Self {
            ty,
            cartan,
            sq_lengths: len,
            gram_omega,
            positive,
            positive_simple,
            lookup,
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared lengths of the simple roots.
    pub fn squared_lengths(&self) -> &[i64] {
        &self.sq_lengths
    }

    /// Dimension of the Lie algebra.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::from_ints(&self.cartan[i])
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    /// Positive roots in omega coordinates, sorted by height.
    pub fn positive_roots(&self) -> Vec<Weight> {
        self.positive.iter().map(|r| Weight::from_ints(r)).collect()
    }

    pub fn positive_roots_int(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Positive roots as coefficient vectors over the simple roots.
    pub fn positive_roots_simple_coords(&self) -> &[Vec<i64>] {
        &self.positive_simple
    }

    /// All roots, positive followed by their negatives.
    pub fn roots(&self) -> Vec<Weight> {
        let pos = self.positive_roots();
        let neg: Vec<Weight> = pos.iter().map(|w| w.neg()).collect();
        pos.into_iter().chain(neg).collect()
    }

    /// `Some((index, positive?))` if `v` (omega coordinates) is a root.
    pub fn classify_root(&self, v: &[i64]) -> Option<(usize, bool)> {
        self.lookup.get(v).copied()
    }

    /// The invariant form on weights.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coords[j].is_zero() {
                    continue;
                }
                acc += &a.coords[i] * &b.coords[j] * &self.gram_omega[i][j];
            }
        }
        acc
    }

    /// Half the sum of the positive roots, which is `sum_i omega_i`.
    pub fn rho(&self) -> Weight {
        Weight::from_ints(&vec![1; self.rank()])
    }

    /// Dimension of the irreducible module of highest weight `lambda` by
    /// the Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Rational {
        let rho = self.rho();
        let lr = lambda.add(&rho);
        self.positive_roots().iter().fold(Rational::one(), |acc, b| {
            acc * self.inner(&lr, b) / self.inner(&rho, b)
        })
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        let n = self.rank();
        let mut w = WeylElement::identity(n);
        // image of omega_i is omega_i - alpha_i
        for j in 0..n {
            w.matrix[j * n + i] -= self.cartan[i][j];
        }
        w.word = vec![i];
        w
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive
            .iter()
            .filter(|r| {
                let img = w.act_ints(r);
                !self.lookup.get(&img).expect("Weyl group permutes roots").1
            })
            .count()
    }

    /// Breadth-first enumeration of the subgroup generated by the given
    /// simple reflections (0-based). Words are reduced in that subgroup.
    pub fn generated_subgroup(&self, generators: &[usize]) -> Vec<WeylElement> {
        let gens: Vec<WeylElement> = generators.iter().map(|&i| self.simple_reflection(i)).collect();
        let start = WeylElement::identity(self.rank());
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(start.matrix.clone());
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in &gens {
                let next = out[k].compose(g);
                if seen.insert(next.matrix.clone()) {
                    out.push(next);
                    queue.push_back(out.len() - 1);
                }
            }
        }
        out
    }

    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.generated_subgroup(&all)
    }

    /// The element of maximal length.
    pub fn longest_element(&self, group: &[WeylElement]) -> WeylElement {
        group
            .iter()
            .max_by_key(|w| self.length(w))
            .cloned()
            .expect("group is non-empty")
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ty)
    }
}

/// Positive roots from the simple roots by closure under simple reflections,
/// in simple-root coordinates, ordered by height and then lexicographically.
fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            // <beta, alpha_i^vee> = sum_j beta_j A_ji
            let c: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
            if c == 0 {
                continue;
            }
            let mut r = beta.clone();
            r[i] -= c;
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

/// True if every coordinate is non-negative.
pub fn is_dominant(lambda: &Weight) -> bool {
    lambda.coords().iter().all(|c| !c.is_negative())
}

