//! Parabolic subgroups from crossed Dynkin diagrams: Levi data, tangent
//! weights of `G/P`, minimal coset representatives and weights of
//! irreducible Levi modules.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::rootsys::{DynkinType, RootSystem, Weight, WeylElement};

/// A Dynkin diagram with some nodes crossed out. Nodes are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossedDiagram {
    ty: DynkinType,
    crossed: BTreeSet<usize>,
}

impl CrossedDiagram {
    pub fn new(ty: DynkinType, crossed: &[usize]) -> Result<Self> {
        if crossed.is_empty() {
            return Err(Error::EmptyCrossing);
        }
        for &node in crossed {
            if node == 0 || node > ty.rank() {
                return Err(Error::NodeOutOfRange {
                    node,
                    rank: ty.rank(),
                });
            }
        }
        Ok(Self {
            ty,
            crossed: crossed.iter().copied().collect(),
        })
    }

    /// Every node crossed: the Borel subgroup.
    pub fn borel(ty: DynkinType) -> Self {
        let all: Vec<usize> = (1..=ty.rank()).collect();
        Self::new(ty, &all).expect("all nodes are in range")
    }

    pub fn dynkin(&self) -> DynkinType {
        self.ty
    }

    pub fn crossed(&self) -> Vec<usize> {
        self.crossed.iter().copied().collect()
    }

    /// Uncrossed nodes, 0-based.
    pub fn levi_nodes(&self) -> Vec<usize> {
        (0..self.ty.rank())
            .filter(|i| !self.crossed.contains(&(i + 1)))
            .collect()
    }

    /// Non-negative on every uncrossed node.
    pub fn is_p_dominant(&self, lambda: &Weight) -> bool {
        self.levi_nodes()
            .iter()
            .all(|&i| !lambda.coords()[i].is_negative())
    }
}

impl fmt::Display for CrossedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.crossed.iter().map(|n| n.to_string()).collect();
        write!(f, "{} crossed {{{}}}", self.ty, c.join(","))
    }
}

pub fn is_g_dominant(lambda: &Weight) -> bool {
    crate::rootsys::is_dominant(lambda)
}

/// Signs applied to the tangent and bundle weight multisets before they
/// enter the localization integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightConvention {
    pub negate_tangent: bool,
    pub negate_bundle: bool,
}

impl WeightConvention {
    /// Tangent weights are the negative roots outside the Levi; the bundle
    /// is the dual of the Levi module, so its weights are negated.
    pub const FROZEN: Self = Self {
        negate_tangent: false,
        negate_bundle: true,
    };

    pub const ALL: [Self; 4] = [
        Self {
            negate_tangent: false,
            negate_bundle: false,
        },
        Self {
            negate_tangent: false,
            negate_bundle: true,
        },
        Self {
            negate_tangent: true,
            negate_bundle: false,
        },
        Self {
            negate_tangent: true,
            negate_bundle: true,
        },
    ];
}

impl Default for WeightConvention {
    fn default() -> Self {
        Self::FROZEN
    }
}

fn signed(w: &[Vec<i64>], negate: bool) -> Vec<Vec<i64>> {
    if negate {
        w.iter().map(|v| v.iter().map(|c| -c).collect()).collect()
    } else {
        w.to_vec()
    }
}

#[derive(Debug, Clone)]
pub struct ParabolicData {
    diagram: CrossedDiagram,
    roots: RootSystem,
    levi: Vec<usize>,
    levi_positive: Vec<Vec<i64>>,
    gp: Vec<Vec<i64>>,
    coset_reps: Vec<WeylElement>,
    levi_group: Vec<WeylElement>,
}

impl ParabolicData {
    pub fn new(diagram: &CrossedDiagram) -> Self {
        let roots = RootSystem::new(diagram.dynkin());
        let levi = diagram.levi_nodes();
        let in_levi = |beta: &[i64]| {
            beta.iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || levi.contains(&i))
        };
        let mut levi_positive = Vec::new();
        let mut gp = Vec::new();
        for (beta, omega) in roots
            .positive_roots_simple_coords()
            .iter()
            .zip(roots.positive_roots_int())
        {
            if in_levi(beta) {
                levi_positive.push(omega.clone());
            } else {
                gp.push(omega.iter().map(|c| -c).collect());
            }
        }
        let levi_roots: Vec<Vec<i64>> = levi.iter().map(|&j| roots.cartan()[j].clone()).collect();
        // w is minimal in wW_P iff w(alpha_j) > 0 for every Levi simple root.
        let coset_reps: Vec<WeylElement> = roots
            .weyl_group()
            .into_iter()
            .filter(|w| {
                levi_roots.iter().all(|a| {
                    roots
                        .classify_root(&w.act_ints(a))
                        .expect("Weyl group permutes roots")
                        .1
                })
            })
            .collect();
        let levi_group = roots.generated_subgroup(&levi);
        Self {
            diagram: diagram.clone(),
            roots,
            levi,
            levi_positive,
            gp,
            coset_reps,
            levi_group,
        }
    }

    pub fn diagram(&self) -> &CrossedDiagram {
        &self.diagram
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    /// Uncrossed nodes, 0-based.
    pub fn levi_nodes(&self) -> &[usize] {
        &self.levi
    }

    /// Positive roots of the Levi factor, omega coordinates.
    pub fn levi_positive_roots(&self) -> Vec<Weight> {
        self.levi_positive.iter().map(|r| Weight::from_ints(r)).collect()
    }

    /// The weights of `g/p`: negative roots outside the span of the Levi
    /// simple roots.
    pub fn gp_weights(&self) -> Vec<Weight> {
        self.gp.iter().map(|r| Weight::from_ints(r)).collect()
    }

    pub fn gp_weights_int(&self) -> &[Vec<i64>] {
        &self.gp
    }

    /// Tangent weights of `G/P` at the base point under a convention.
    pub fn tangent_weights(&self, conv: WeightConvention) -> Vec<Vec<i64>> {
        signed(&self.gp, conv.negate_tangent)
    }

    pub fn dim(&self) -> usize {
        self.gp.len()
    }

    pub fn coset_reps(&self) -> &[WeylElement] {
        &self.coset_reps
    }

    pub fn levi_group(&self) -> &[WeylElement] {
        &self.levi_group
    }

    pub fn levi_weyl_order(&self) -> usize {
        self.levi_group.len()
    }

    /// Same data with other representatives of the same cosets, e.g. `w u`
    /// for `u` in the Levi Weyl group.
    pub fn with_coset_reps(&self, reps: Vec<WeylElement>) -> Self {
        assert_eq!(reps.len(), self.coset_reps.len(), "one representative per coset");
        Self {
            coset_reps: reps,
            ..self.clone()
        }
    }

    /// Levi half-sum of positive roots.
    fn levi_rho(&self) -> Weight {
        let s = self
            .levi_positive
            .iter()
            .fold(Weight::zero(self.rank()), |acc, r| acc.add(&Weight::from_ints(r)));
        s.scale(&crate::exact::frac(1, 2))
    }

    /// Dimension of the irreducible Levi module of highest weight `lambda`,
    /// by the Weyl dimension formula over the Levi positive roots.
    pub fn levi_weyl_dimension(&self, lambda: &Weight) -> Rational {
        let rho = self.levi_rho();
        let lr = lambda.add(&rho);
        self.levi_positive_roots().iter().fold(rat(1), |acc, b| {
            acc * self.roots.inner(&lr, b) / self.roots.inner(&rho, b)
        })
    }

    /// Weights with multiplicities of the irreducible Levi module with
    /// highest weight `lambda`, by Freudenthal's formula level by level.
    pub fn levi_irrep_weights(&self, lambda: &Weight) -> Result<BundleWeights> {
        if lambda.rank() != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                got: lambda.rank(),
            });
        }
        if !lambda.is_integral() {
            return Err(Error::NotIntegral(lambda.to_string()));
        }
        if !self.diagram.is_p_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let rs = &self.roots;
        let rho = self.levi_rho();
        let pos = self.levi_positive_roots();
        let simple: Vec<Weight> = self.levi.iter().map(|&j| rs.simple_root(j)).collect();
        let lr = lambda.add(&rho);
        let top = rs.inner(&lr, &lr);

        let mut mult: BTreeMap<Weight, Rational> = BTreeMap::new();
        mult.insert(lambda.clone(), rat(1));
        let mut level: BTreeSet<Weight> = BTreeSet::from([lambda.clone()]);
        loop {
            let candidates: BTreeSet<Weight> = level
                .iter()
                .flat_map(|mu| simple.iter().map(move |a| mu.sub(a)))
                .collect();
            let mut next = BTreeSet::new();
            for mu in candidates {
                let mut num = Rational::zero();
                for beta in &pos {
                    let mut k = 1;
                    loop {
                        let up = mu.add(&beta.scale(&rat(k)));
                        match mult.get(&up) {
                            Some(m) => num += m * rs.inner(&up, beta),
                            None => break,
                        }
                        k += 1;
                    }
                }
                if num.is_zero() {
                    continue;
                }
                let mr = mu.add(&rho);
                let den = &top - rs.inner(&mr, &mr);
                if den.is_zero() {
                    return Err(Error::NotDominant(format!("degenerate Freudenthal step at {mu}")));
                }
                let m = rat(2) * num / den;
                if !m.is_zero() {
                    mult.insert(mu.clone(), m);
                    next.insert(mu);
                }
            }
            if next.is_empty() {
                break;
            }
            level = next;
        }
        let weights = mult
            .into_iter()
            .map(|(w, m)| {
                let m = usize::try_from(m.to_integer()).expect("multiplicities are small positive integers");
                (w, m)
            })
            .collect();
        Ok(BundleWeights {
            highest: lambda.clone(),
            weights,
        })
    }
}

/// Weight multiset of a Levi module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleWeights {
    highest: Weight,
    weights: Vec<(Weight, usize)>,
}

impl BundleWeights {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// Distinct weights with multiplicities, sorted.
    pub fn weights(&self) -> &[(Weight, usize)] {
        &self.weights
    }

    /// Each weight repeated by multiplicity, integer coordinates.
    pub fn expanded_int(&self) -> Vec<Vec<i64>> {
        self.weights
            .iter()
            .flat_map(|(w, m)| std::iter::repeat_n(w.as_ints().expect("integral weights"), *m))
            .collect()
    }

    pub fn expanded(&self) -> Vec<Weight> {
        self.weights
            .iter()
            .flat_map(|(w, m)| std::iter::repeat_n(w.clone(), *m))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.weights.iter().map(|(_, m)| m).sum()
    }

    /// Chern roots of the bundle at the base point under a convention.
    pub fn chern_roots(&self, conv: WeightConvention) -> Vec<Vec<i64>> {
        signed(&self.expanded_int(), conv.negate_bundle)
    }

    pub fn sum(&self) -> Weight {
        let r = self.highest.rank();
        self.expanded().iter().fold(Weight::zero(r), |acc, w| acc.add(w))
    }
}
