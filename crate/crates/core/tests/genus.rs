use std::collections::BTreeMap;
use std::sync::OnceLock;

use ellgenus::exact::{frac, parse_rational, rat, Rational, Ring, YLaurent};
use ellgenus::genus::symmetric::{
    elementary_from_power_sums, exp_power_sums, multiplicative_sequence_monomial, power_sums,
    power_sums_from_elementary,
};
use ellgenus::genus::*;
use ellgenus::localize::{chern_table, euler_number, ChernMonomial, ChernTable, CompleteIntersection, EquivariantPoint};
use ellgenus::parabolic::CrossedDiagram;
use ellgenus::qseries::{basis_weight0, phi_0_32, BasisSet};
use ellgenus::reference::{genus_formula_signed, EULER_NUMBER, GENUS_FORMULA, GENUS_VECTOR};
use ellgenus::rootsys::Weight;
use ellgenus::Error;
use proptest::prelude::*;

fn variety(t: &str, crossed: &[usize], l: &[i64]) -> CompleteIntersection {
    CompleteIntersection::new(&CrossedDiagram::new(t.parse().unwrap(), crossed).unwrap(), &Weight::from_ints(l)).unwrap()
}

fn point(ci: &CompleteIntersection, seed: u64) -> EquivariantPoint {
    EquivariantPoint::generic(ci.parabolic(), ci.convention(), seed).unwrap()
}

fn formula() -> &'static ChernGenusFormula {
    static F: OnceLock<ChernGenusFormula> = OnceLock::new();
    F.get_or_init(|| genus_in_chern(17, 1).unwrap())
}

fn basis() -> &'static BasisSet {
    static B: OnceLock<BasisSet> = OnceLock::new();
    B.get_or_init(|| basis_weight0(17, 1).unwrap())
}

/// F4 crossed at node 2 (i = 0) or node 3 (i = 1), bundle of weight omega_2 + omega_3.
fn y(i: usize) -> CompleteIntersection {
    variety("F4", &[i + 2], &[0, 1, 1, 0])
}

fn table(i: usize) -> &'static ChernTable {
    static T: [OnceLock<ChernTable>; 2] = [OnceLock::new(), OnceLock::new()];
    T[i].get_or_init(|| chern_table(&y(i), &point(&y(i), 0), "Y").unwrap())
}

fn vector() -> Vec<Rational> {
    GENUS_VECTOR.iter().map(|s| parse_rational(s).unwrap()).collect()
}

#[test]
fn char_series_constant_term() {
    let q = char_series(5, 2);
    assert_eq!(q.coeff(0).coeff(0), &YLaurent::from_terms([(-1, rat(1)), (1, rat(-1))]));
    assert_eq!(q.at_q0(), chi_y_series(5));
    assert_eq!(char_series(17, 1).at_q0(), chi_y_series(17));
}

fn bernoulli_plus(n: usize) -> Vec<Rational> {
    // sum_{j<=m} C(m+1, j) B_j = 0, then B_1 -> +1/2
    let mut b = vec![rat(1)];
    for m in 1..=n {
        let mut s = rat(0);
        let mut c = rat(1);
        for (j, bj) in b.iter().enumerate() {
            s += &c * bj;
            c = c * rat((m + 1 - j) as i64) / rat(j as i64 + 1);
        }
        b.push(-s / rat(m as i64 + 1));
    }
    if n >= 1 {
        b[1] = frac(1, 2);
    }
    b
}

/// Q at `u = r`, expanded as a finite sum of `coef q^n e^{c x}` terms times
/// `x/(1 - e^{-x})`, each geometric factor summed out directly.
fn naive_char_series(r: &Rational, d: usize, nq: usize) -> Vec<Vec<Rational>> {
    type Exp = BTreeMap<(usize, i64), Rational>;
    fn mul(a: &Exp, b: &Exp, nq: usize) -> Exp {
        let mut out = Exp::new();
        for ((n1, c1), v1) in a {
            for ((n2, c2), v2) in b {
                if n1 + n2 <= nq {
                    *out.entry((n1 + n2, c1 + c2)).or_insert_with(|| rat(0)) += v1 * v2;
                }
            }
        }
        out
    }
    let yv = r * r;
    let mut e: Exp = [((0, 0), r.recip())].into_iter().collect();
    let binom = |c: Rational, n: usize, s: i64| -> Exp { [((0, 0), rat(1)), ((n, s), c)].into_iter().collect() };
    e = mul(&e, &binom(-yv.clone(), 0, -1), nq);
    for n in 1..=nq {
        e = mul(&e, &binom(-yv.clone(), n, -1), nq);
        e = mul(&e, &binom(-yv.recip(), n, 1), nq);
        for s in [-1, 1] {
            let geo: Exp = (0..=nq / n).map(|j| ((n * j, s * j as i64), rat(1))).collect();
            e = mul(&e, &geo, nq);
        }
    }
    let b = bernoulli_plus(d);
    let fact = |k: usize| (1..=k).fold(rat(1), |a, i| a * rat(i as i64));
    let todd: Vec<Rational> = (0..=d).map(|k| &b[k] / fact(k)).collect();
    let mut out = vec![vec![rat(0); nq + 1]; d + 1];
    for ((n, c), v) in &e {
        for k in 0..=d {
            // [x^k] e^{c x} x/(1-e^{-x})
            let mut s = rat(0);
            for j in 0..=k {
                s += &todd[k - j] * Ring::pow(&rat(*c), j as u32) / fact(j);
            }
            out[k][*n] += v * s;
        }
    }
    out
}

#[test]
fn char_series_matches_term_by_term_product() {
    for r in [frac(2, 3), rat(3), frac(-5, 2)] {
        let (d, nq) = (9, 3);
        let q = char_series(d, nq).at_u(&r);
        let naive = naive_char_series(&r, d, nq);
        for k in 0..=d {
            assert_eq!(q.coeff(k).coeffs(), &naive[k][..], "x^{k}");
        }
    }
}

#[test]
fn two_routes_agree_at_q0() {
    for d in [1, 2, 3, 4, 5, 7] {
        assert_eq!(genus_in_chern(d, 1).unwrap().truncate(0), chi_y_formula(d), "d = {d}");
    }
    assert_eq!(formula().truncate(0), chi_y_formula(17));
}

#[test]
fn three_fold_formula() {
    let f = genus_in_chern(3, 2).unwrap();
    assert_eq!(f.len(), 3);
    let r = f.restrict_c1_zero();
    assert_eq!(r.len(), 1);
    let b = basis_weight0(3, 2).unwrap();
    // a CY3 has genus (c_3 / 2) phi_{0,3/2}
    assert_eq!(b.decompose(&r.terms()[0].1).unwrap(), vec![frac(1, 2)]);
}

#[test]
fn restricted_formula_has_the_66_monomials() {
    assert_eq!(formula().len(), 297);
    let r = formula().restrict_c1_zero();
    assert_eq!(r.len(), 66);
    let want: Vec<ChernMonomial> = ChernMonomial::all_without_c1(17);
    let got: Vec<ChernMonomial> = r.terms().iter().map(|(m, _)| m.clone()).collect();
    assert_eq!(got, want);
}

#[test]
fn formula_in_the_basis_matches_the_printed_table() {
    let dec = formula().restrict_c1_zero().decompose(basis()).unwrap();
    let signed: BTreeMap<(usize, Vec<u32>), Rational> = genus_formula_signed()
        .into_iter()
        .map(|(k, p, c)| ((k, p.to_vec()), c))
        .collect();
    assert_eq!(signed.len(), 210);
    let mut nonzero = 0;
    for (m, v) in &dec {
        for (k, c) in v.iter().enumerate() {
            let want = signed.get(&(k + 1, m.parts().to_vec())).cloned().unwrap_or_else(|| rat(0));
            assert_eq!(c, &want, "{m} on v{}", k + 1);
            nonzero += usize::from(!c.vanishes());
        }
    }
    assert_eq!(nonzero, 210);
}

#[test]
fn spot_coefficients_verbatim() {
    let dec: BTreeMap<Vec<u32>, Vec<Rational>> = formula()
        .restrict_c1_zero()
        .decompose(basis())
        .unwrap()
        .into_iter()
        .map(|(m, v)| (m.parts().to_vec(), v))
        .collect();
    let printed = |k: usize, p: &[u32]| {
        let (_, _, s) = GENUS_FORMULA.iter().find(|(i, q, _)| *i == k && *q == p).unwrap();
        parse_rational(s).unwrap()
    };
    // leading entries carry the printed outer sign
    let cases: [(usize, &[u32], &str); 12] = [
        (1, &[17], "1/71663616"),
        (2, &[14, 3], "-1/119439360"),
        (3, &[12, 3, 2], "-1/250822656"),
        (8, &[4, 3, 2, 2, 2, 2, 2], "-1/11496038400"),
        (2, &[17], "-1/19906560"),
        (2, &[15, 2], "1/119439360"),
        (3, &[17], "5/250822656"),
        (4, &[17], "13/298598400"),
        (5, &[17], "-41/1532805120"),
        (6, &[17], "37/11412430848"),
        (7, &[17], "-41/6469632000"),
        (7, &[15, 2], "67/12939264000"),
    ];
    for (k, p, want) in cases {
        let want = parse_rational(want).unwrap();
        assert_eq!(dec[p][k - 1], want, "{p:?} on v{k}");
        // bracket magnitude as printed
        let shown = printed(k, p);
        assert!(shown == want || shown == -want.clone());
    }
    assert_eq!(printed(8, &[4, 3, 2, 2, 2, 2, 2]), frac(1, 11496038400));
    assert_eq!(printed(2, &[14, 3]), frac(1, 119439360));
    assert_eq!(printed(3, &[12, 3, 2]), frac(1, 250822656));
}

#[test]
fn both_seventeen_folds_have_the_published_genus() {
    let g1 = elliptic_genus(formula(), table(0)).unwrap();
    let g2 = elliptic_genus(formula(), table(1)).unwrap();
    assert_eq!(g1.decompose(basis()).unwrap(), vector());
    assert_eq!(g2.decompose(basis()).unwrap(), vector());
    assert!(compare_genera(&g1, &g2).equal());
    assert!(compare_genera(&g1, &g1).equal());
    assert_eq!(g1.series().weight(), Some(&rat(0)));
    assert_eq!(g1.series().index(), Some(&frac(17, 2)));
    // zero residual: the vector rebuilds the series exactly
    let rebuilt = basis().combine(&vector()).unwrap();
    assert_eq!(rebuilt.coeffs(), g1.series().coeffs());
}

#[test]
fn perturbed_table_changes_the_genus() {
    let t = table(0);
    let m = ChernMonomial::new(vec![9, 4, 4]);
    let bumped = t.with_value(&m, t.get(&m).unwrap() + 1);
    let g = elliptic_genus(formula(), t).unwrap();
    let h = elliptic_genus(formula(), &bumped).unwrap();
    let cmp = compare_genera(&g, &h);
    assert!(!cmp.equal());
    assert!(cmp.to_string().contains("q^0"), "{cmp}");
    // the slots that moved are exactly the support of the c9 c4 c4 coefficient
    let support: Vec<(usize, i32)> = formula().get(&m).unwrap().flatten(1).into_keys().collect();
    assert_eq!(cmp.differing, support);
}

#[test]
fn missing_monomial_is_an_error() {
    let t = table(0);
    let rows = t.rows()[1..].to_vec();
    let short = ChernTable::new("short", rows);
    assert!(matches!(elliptic_genus(formula(), &short), Err(Error::MissingMonomial(_))));
}

#[test]
fn euler_specialization_for_the_seventeen_folds() {
    let e = parse_rational(EULER_NUMBER).unwrap();
    for i in 0..2 {
        let g = elliptic_genus(formula(), table(i)).unwrap();
        assert_eq!(g.euler_specialization(), e);
        let chi = euler_number(&y(i), &point(&y(i), 3)).unwrap();
        assert_eq!(Rational::from_integer(chi), e);
    }
}

#[test]
fn g2_calabi_yau_threefolds() {
    let f = genus_in_chern(3, 3).unwrap();
    let b = basis_weight0(3, 3).unwrap();
    for c in [1, 2] {
        let v = variety("G2", &[c], &[1, 1]);
        let p = point(&v, 0);
        let t = chern_table(&v, &p, "G2").unwrap();
        assert_eq!(t.len(), 1);
        let g = elliptic_genus(&f, &t).unwrap();
        let chi = Rational::from_integer(euler_number(&v, &p).unwrap());
        assert_eq!(g.euler_specialization(), chi);
        let dec = g.decompose(&b).unwrap();
        assert_eq!(dec, vec![&chi / rat(2)]);
        let phi = phi_0_32(3).unwrap().scale(&(&chi / rat(2)));
        assert_eq!(g.series().coeffs(), phi.coeffs());
    }
}

#[test]
fn genus_by_localization_matches_the_formula() {
    for i in 0..2 {
        let g = elliptic_genus(formula(), table(i)).unwrap();
        let p = point(&y(i), 5);
        for u in [frac(2, 3), rat(3)] {
            assert_eq!(genus_by_localization(&y(i), &p, &u, 1).unwrap(), g.at_u(&u));
        }
    }
    let v = variety("G2", &[2], &[1, 1]);
    let p = point(&v, 1);
    let g = elliptic_genus(&genus_in_chern(3, 4).unwrap(), &chern_table(&v, &p, "G2").unwrap()).unwrap();
    for u in [frac(1, 2), frac(-7, 3)] {
        assert_eq!(genus_by_localization(&v, &p, &u, 4).unwrap(), g.at_u(&u));
    }
}

#[test]
fn newton_polynomials_agree_with_the_numeric_recursion() {
    let d = 6;
    let p = power_sums(d);
    let c: Vec<Rational> = [1, 3, -2, 5, 7, -1, 4].map(rat).to_vec();
    let numeric = power_sums_from_elementary(&c);
    for k in 1..=d {
        assert_eq!(p[k].eval(&c[1..]).unwrap(), numeric[k], "p_{k}");
    }
}

#[test]
fn surface_formula_at_q0() {
    let f = genus_in_chern(2, 0).unwrap();
    // c1^2 and c2 coefficients at q^0, expressed in u
    let c2 = f.get(&ChernMonomial::new(vec![2])).unwrap().q_coeff(0).clone();
    let c11 = f.get(&ChernMonomial::new(vec![1, 1])).unwrap().q_coeff(0).clone();
    // chi_y of a surface: u^{-2} (chi_0 - chi_1 y + chi_2 y^2) with chi_0 = (c1^2 + c2)/12
    assert_eq!(c2.coeff(-2), frac(1, 12));
    assert_eq!(c11.coeff(-2), frac(1, 12));
    // y = 1 gives the Euler number c_2
    assert_eq!(c2.value_at_one(), rat(1));
    assert_eq!(c11.value_at_one(), rat(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn newton_round_trip(v in prop::collection::vec((-40i64..40, 1i64..9), 17)) {
        let mut p = vec![rat(17)];
        p.extend(v.iter().map(|&(n, d)| frac(n, d)));
        let c = elementary_from_power_sums(&p);
        let back = power_sums_from_elementary(&c);
        prop_assert_eq!(&back[1..], &p[1..]);
    }

    #[test]
    fn monomial_and_log_routes_agree(v in prop::collection::vec((-9i64..9, 1i64..5), 6)) {
        let d = 6;
        let mut b = vec![rat(1)];
        b.extend(v.iter().map(|&(n, k)| frac(n, k)));
        let q = ellgenus::exact::TruncSeries::from_coeffs(b.clone(), d, &rat(0));
        let a = q.log().unwrap();
        let via_log = exp_power_sums(a.coeffs(), d);
        let via_monomials = multiplicative_sequence_monomial(&b, d);
        prop_assert_eq!(via_log, via_monomials);
    }
}
