use ellgenus::exact::{rat, Integer, MultiPoly, Ring};
use ellgenus::localize::{
    chern_class_polys, bundle_euler_poly, chern_table, first_chern_class_check, integrate_numeric,
    integrate_symbolic, line_degree, partitions, ChernData, ChernMonomial, CompleteIntersection,
    EquivariantPoint,
};
use ellgenus::parabolic::{CrossedDiagram, ParabolicData, WeightConvention};
use ellgenus::reference::CHERN_NUMBERS;
use ellgenus::rootsys::{DynkinType, Weight};
use ellgenus::Error;

fn ty(s: &str) -> DynkinType {
    s.parse().unwrap()
}

fn variety(t: &str, crossed: &[usize], l: &[i64]) -> CompleteIntersection {
    CompleteIntersection::new(&CrossedDiagram::new(ty(t), crossed).unwrap(), &Weight::from_ints(l)).unwrap()
}

fn y(i: usize) -> CompleteIntersection {
    variety("F4", &[i + 2], &[0, 1, 1, 0])
}

fn point(ci: &CompleteIntersection, seed: u64) -> EquivariantPoint {
    EquivariantPoint::generic(ci.parabolic(), ci.convention(), seed).unwrap()
}

fn big(s: &str) -> Integer {
    s.parse().unwrap()
}

#[test]
fn partitions_of_17_without_ones() {
    let p = partitions(17, 2);
    assert_eq!(p.len(), 66);
    // p(17) - p(16) by brute force count
    assert_eq!(partitions(17, 1).len() - partitions(16, 1).len(), 66);
    let published: Vec<Vec<u32>> = CHERN_NUMBERS.iter().map(|(m, _, _)| m.to_vec()).collect();
    assert_eq!(p, published);
}

#[test]
fn monomial_parse_and_display() {
    let m: ChernMonomial = "c13 c2 c2".parse().unwrap();
    assert_eq!(m.parts(), &[13, 2, 2]);
    assert_eq!(m.to_string(), "c13 c2 c2");
    assert!("x3".parse::<ChernMonomial>().is_err());
}

#[test]
fn dimensions_of_the_17_folds() {
    for i in 0..2 {
        let v = y(i);
        assert_eq!(v.ambient_dim(), 20);
        assert_eq!(v.bundle_rank(), 3);
        assert_eq!(v.dim(), 17);
        assert!(first_chern_class_check(&v));
    }
    assert!(!first_chern_class_check(&variety("F4", &[2], &[0, 0, 0, 1])));
}

#[test]
fn only_the_dual_bundle_conventions_are_calabi_yau() {
    let v = y(0);
    for conv in WeightConvention::ALL {
        let cy = first_chern_class_check(&v.with_convention(conv));
        assert_eq!(cy, conv.negate_tangent != conv.negate_bundle, "{conv:?}");
    }
}

#[test]
fn points_are_deterministic_and_generic() {
    let v = y(1);
    let a = point(&v, 7);
    assert_eq!(a, point(&v, 7));
    assert_ne!(a.t(), point(&v, 8).t());
    for k in 0..a.num_cosets() {
        assert!(a.tangent_values(k).iter().all(|x| !x.vanishes()));
    }
}

#[test]
fn non_generic_point_is_rejected() {
    let v = y(0);
    assert!(EquivariantPoint::at(v.parabolic(), v.convention(), vec![rat(0); 4]).is_none());
}

#[test]
fn chern_series_starts_with_one() {
    let v = y(0);
    let data = ChernData::new(&v, &point(&v, 0));
    assert_eq!(data.num_cosets(), 96);
    for k in 0..96 {
        assert_eq!(data.chern(k, 0), &rat(1));
    }
}

#[test]
fn spot_values() {
    let (y1, y2) = (y(0), y(1));
    let d1 = ChernData::new(&y1, &point(&y1, 0));
    let d2 = ChernData::new(&y2, &point(&y2, 0));
    let m = |s: &str| s.parse::<ChernMonomial>().unwrap();
    assert_eq!(d1.integrate_monomial(&m("c17")).unwrap(), big("-12566964323536824").into());
    assert_eq!(d2.integrate_monomial(&m("c15 c2")).unwrap(), big("-17771184345938256").into());
    assert_eq!(
        d1.integrate_monomial(&m("c3 c2 c2 c2 c2 c2 c2 c2")).unwrap(),
        big("-21029331652313088").into()
    );
    assert_eq!(d2.integrate_monomial(&m("c9 c4 c4")).unwrap(), big("-25550516571066072").into());
    assert!(matches!(d1.integrate_monomial(&m("c16")), Err(Error::Degree { .. })));
}

#[test]
fn full_tables_match_and_are_point_independent() {
    for i in 0..2 {
        let v = y(i);
        let a = chern_table(&v, &point(&v, 0), "Y").unwrap();
        let b = chern_table(&v, &point(&v, 1), "Y").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 66);
        for ((m, val), (parts, y1, y2)) in a.rows().iter().zip(CHERN_NUMBERS.iter()) {
            assert_eq!(m.parts(), *parts);
            assert_eq!(*val, big(if i == 0 { y1 } else { y2 }), "{m}");
        }
    }
}

#[test]
fn mixed_conventions_miss_the_published_euler_number() {
    let v = y(0);
    let target: ellgenus::exact::Rational = big("-12566964323536824").into();
    let m = ChernMonomial::new(vec![17]);
    for conv in WeightConvention::ALL {
        let w = v.with_convention(conv);
        let val = ChernData::new(&w, &point(&w, 0)).integrate_monomial(&m).unwrap();
        assert_eq!(val == target, conv.negate_tangent != conv.negate_bundle, "{conv:?}");
    }
}

#[test]
fn line_degrees() {
    let expect1 = big("2").pow(13) * 9 * big("5").pow(18) * 13 * 17 * 3413;
    let expect2 = big("2").pow(7) * 9 * 5 * big("7").pow(18) * big("13").pow(3) * 17;
    assert_eq!(line_degree(&y(0), &point(&y(0), 0)).unwrap(), expect1);
    assert_eq!(line_degree(&y(1), &point(&y(1), 3)).unwrap(), expect2);
}

#[test]
fn euler_characteristic_of_p1() {
    let pd = ParabolicData::new(&CrossedDiagram::borel(ty("A1")));
    let conv = WeightConvention::FROZEN;
    let c1 = pd.tangent_weights(conv).iter().fold(MultiPoly::zero(1), |a, w| {
        a.plus(&Weight::from_ints(w).to_poly())
    });
    assert_eq!(integrate_symbolic(&pd, conv, &c1).unwrap(), rat(2));
    let p = EquivariantPoint::generic(&pd, conv, 0).unwrap();
    assert_eq!(integrate_numeric(&p, &c1).unwrap(), rat(2));
}

#[test]
fn hyperplane_class_on_projective_spaces() {
    // O(1) restricts to the weight -omega_1 at the base point
    for n in 1..=4usize {
        let pd = ParabolicData::new(&CrossedDiagram::new(ty(&format!("A{n}")), &[1]).unwrap());
        let conv = WeightConvention::FROZEN;
        let h = Weight::fundamental(n, 0).neg().to_poly();
        let x = h.pow(n as u32);
        let p = EquivariantPoint::generic(&pd, conv, 0).unwrap();
        assert_eq!(integrate_numeric(&p, &x).unwrap(), rat(1), "P^{n}");
        assert_eq!(integrate_symbolic(&pd, conv, &x).unwrap(), rat(1), "P^{n}");
    }
}

#[test]
fn omega1_squared_on_p2() {
    let pd = ParabolicData::new(&CrossedDiagram::new(ty("A2"), &[1]).unwrap());
    let x = Weight::fundamental(2, 0).to_poly().pow(2);
    assert_eq!(integrate_symbolic(&pd, WeightConvention::FROZEN, &x).unwrap(), rat(1));
}

#[test]
fn symbolic_route_validates_input() {
    let pd = ParabolicData::new(&CrossedDiagram::new(ty("A2"), &[1]).unwrap());
    let conv = WeightConvention::FROZEN;
    assert!(matches!(
        integrate_symbolic(&pd, conv, &Weight::fundamental(2, 0).to_poly()),
        Err(Error::Degree { .. })
    ));
    // omega_2^2 is not invariant under the Levi reflection s_2
    let x = Weight::fundamental(2, 1).to_poly().pow(2);
    assert_eq!(integrate_symbolic(&pd, conv, &x), Err(Error::NotInvariant));
}

#[test]
fn g2_threefolds_symbolic_and_numeric_agree() {
    for c in [1, 2] {
        let v = variety("G2", &[c], &[1, 1]);
        assert_eq!(v.dim(), 3);
        assert!(first_chern_class_check(&v));
        let x = chern_class_polys(&v, 3)[3].times(&bundle_euler_poly(&v));
        let sym = integrate_symbolic(v.parabolic(), v.convention(), &x).unwrap();
        let pt = point(&v, 0);
        assert_eq!(integrate_numeric(&pt, &x).unwrap(), sym);
        let num = ChernData::new(&v, &pt).integrate_monomial(&ChernMonomial::new(vec![3])).unwrap();
        assert_eq!(num, sym);
        assert!(sym.is_integer());
    }
}

#[test]
fn representatives_can_be_moved_within_cosets() {
    let v = y(1);
    let pd = v.parabolic();
    let levi = pd.levi_group();
    let reps = pd
        .coset_reps()
        .iter()
        .enumerate()
        .map(|(k, w)| w.compose(&levi[(7 * k + 3) % levi.len()]))
        .collect();
    let moved = CompleteIntersection::from_parts(pd.with_coset_reps(reps), v.bundle().clone(), v.convention());
    let m = ChernMonomial::new(vec![9, 4, 4]);
    let a = ChernData::new(&v, &point(&v, 2)).integrate_monomial(&m).unwrap();
    let b = ChernData::new(&moved, &point(&moved, 2)).integrate_monomial(&m).unwrap();
    assert_eq!(a, b);
}
