use ellgenus::exact::{frac, rat, Rational, Ring, YLaurent};
use ellgenus::qseries::*;
use ellgenus::Error;
use proptest::prelude::*;

fn lp(terms: &[(i32, i64)]) -> YLaurent {
    YLaurent::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
}

fn ints(s: &JacobiSeries) -> Vec<Rational> {
    s.coeffs().iter().map(|c| c.value_at_one()).collect()
}

#[test]
fn theta1_leading_term_and_offset() {
    let t = theta1(3);
    assert_eq!(t.offset(), &frac(1, 8));
    assert_eq!(t.coeff(0), &lp(&[(1, 1), (-1, -1)]));
}

#[test]
fn theta1_is_odd_in_y() {
    let t = theta1(6);
    assert_eq!(t.invert_y(), t.scale(&rat(-1)));
}

#[test]
fn eisenstein_series() {
    let e4 = eisenstein4(5);
    let e6 = eisenstein6(3);
    assert_eq!(ints(&e4), [1, 240, 2160, 6720, 17520, 30240].map(rat));
    assert_eq!(ints(&e6), [1, -504, -16632, -122976].map(rat));
    assert_eq!(e4.offset(), &rat(0));
}

#[test]
fn eta_to_the_24_is_the_discriminant() {
    let d = eta(4).pow(24);
    assert_eq!(d.offset(), &rat(1));
    // Ramanujan tau
    assert_eq!(ints(&d), [1, -24, 252, -1472, 4830].map(rat));
}

#[test]
fn jacobi_quartic_identity_at_y_one() {
    let n = 10;
    let t2 = theta2(n).at_y_one().pow(4);
    let t3 = theta3(n).at_y_one().pow(4);
    let t4 = theta4(n).at_y_one().pow(4);
    assert_eq!(t2.offset(), &frac(1, 2));
    // θ₂⁴ carries q^{1/2}; realign it in half steps against θ₃⁴, θ₄⁴
    let lhs = t2.mul(&JacobiSeries::new(frac(-1, 2), 2, n, vec![YLaurent::zero(), YLaurent::one()]));
    let lhs = lhs.add(&t4).unwrap();
    assert_eq!(lhs.truncate(n - 1).coeffs(), t3.truncate(n - 1).coeffs());
}

#[test]
fn discriminant_identity() {
    let n = 10;
    let e4 = eisenstein4(n);
    let e6 = eisenstein6(n);
    let lhs = e4.pow(3).sub(&e6.pow(2)).unwrap();
    let eta24 = eta(n).pow(24).scale(&rat(1728));
    // shift eta^24's offset 1 into the coefficient list
    let mut v = vec![YLaurent::zero()];
    v.extend(eta24.coeffs().iter().take(n).cloned());
    let rhs = JacobiSeries::new(rat(0), 1, n, v);
    assert_eq!(lhs.coeffs(), rhs.coeffs());
}

#[test]
fn weak_jacobi_forms_at_q0_and_q1() {
    let p01 = phi_0_1(2).unwrap();
    let pm21 = phi_m2_1(2).unwrap();
    let p32 = phi_0_32(2).unwrap();
    for p in [&p01, &pm21, &p32] {
        assert_eq!(p.offset(), &rat(0));
        assert_eq!(p.step(), 1);
    }
    assert_eq!(p01.q_coeff(0), &lp(&[(2, 1), (0, 10), (-2, 1)]));
    assert_eq!(pm21.q_coeff(0), &lp(&[(2, 1), (0, -2), (-2, 1)]));
    assert_eq!(p32.q_coeff(0), &lp(&[(1, 1), (-1, 1)]));
    assert_eq!(p01.q_coeff(1), &lp(&[(4, 10), (2, -64), (0, 108), (-2, -64), (-4, 10)]));
    assert_eq!(pm21.q_coeff(1), &lp(&[(4, -2), (2, 8), (0, -12), (-2, 8), (-4, -2)]));
    assert_eq!(p01.weight(), Some(&rat(0)));
    assert_eq!(pm21.index(), Some(&rat(1)));
    assert_eq!(p32.index(), Some(&frac(3, 2)));
}

#[test]
fn values_at_y_one() {
    let n = 6;
    let p01 = phi_0_1(n).unwrap().at_y_one();
    let pm21 = phi_m2_1(n).unwrap().at_y_one();
    let p32 = phi_0_32(n).unwrap().at_y_one();
    let mut twelve = vec![rat(0); n + 1];
    twelve[0] = rat(12);
    assert_eq!(ints(&p01), twelve);
    assert!(ints(&pm21).iter().all(|c| c.vanishes()));
    let mut two = vec![rat(0); n + 1];
    two[0] = rat(2);
    assert_eq!(ints(&p32), two);
}

#[test]
fn y_symmetry() {
    for p in [phi_0_1(5).unwrap(), phi_m2_1(5).unwrap(), phi_0_32(5).unwrap()] {
        assert_eq!(p.invert_y(), p);
    }
}

#[test]
fn index_three_halves_form_has_odd_u_exponents() {
    let p = phi_0_32(6).unwrap();
    for c in p.coeffs() {
        assert!(c.terms().all(|(e, _)| e % 2 != 0), "{c}");
    }
}

#[test]
fn offsets_cancel() {
    let t = theta1(2);
    assert_eq!(t.mul(&t).offset(), &frac(1, 4));
    assert_eq!(eta(2).pow(6).offset(), &frac(1, 4));
}

#[test]
fn sums_need_matching_offsets() {
    assert!(matches!(theta1(2).add(&eta(2)), Err(Error::OffsetMismatch(_, _))));
}

#[test]
fn basis_for_d17() {
    let b = basis_weight0(17, 1).unwrap();
    assert_eq!(b.len(), 8);
    let m: Vec<(u32, u32, u32, u32)> = b.monomials().iter().map(|m| (m.a, m.b, m.c, m.e)).collect();
    assert_eq!(
        m,
        vec![
            (0, 0, 7, 0),
            (1, 0, 5, 2),
            (0, 1, 4, 3),
            (2, 0, 3, 4),
            (1, 1, 2, 5),
            (0, 2, 1, 6),
            (3, 0, 1, 6),
            (2, 1, 0, 7)
        ]
    );
    for mono in b.monomials() {
        assert_eq!(mono.weight(), 0);
        assert_eq!(mono.index(), frac(17, 2));
    }
    for e in b.elements() {
        assert_eq!(e.weight(), Some(&rat(0)));
        assert_eq!(e.index(), Some(&frac(17, 2)));
    }
    assert_eq!(b.rank(), 8);
}

#[test]
fn rank_deficient_at_order_zero() {
    let b = basis_weight0(17, 0).unwrap();
    assert!(b.rank() < 8);
    assert_eq!(b.decompose(&b.elements()[0]), Err(Error::RankDeficient));
}

#[test]
fn small_bases() {
    let b = basis_weight0(3, 2).unwrap();
    assert_eq!(b.len(), 1);
    assert_eq!(b.elements()[0], phi_0_32(2).unwrap());
    assert_eq!(basis_weight0(5, 1).unwrap().len(), 1);
    assert!(matches!(basis_weight0(4, 1), Err(Error::BasisDimension(4))));
    assert!(matches!(basis_weight0(1, 1), Err(Error::BasisDimension(1))));
}

#[test]
fn self_decomposition_and_linearity() {
    let b = basis_weight0(17, 1).unwrap();
    let mut e3 = vec![rat(0); 8];
    e3[2] = rat(1);
    assert_eq!(b.decompose(&b.elements()[2]).unwrap(), e3);
    let f = b.elements()[0].scale(&rat(2)).add(&b.elements()[4].scale(&frac(1, 2))).unwrap();
    let mut want = vec![rat(0); 8];
    want[0] = rat(2);
    want[4] = frac(1, 2);
    assert_eq!(b.decompose(&f).unwrap(), want);
}

#[test]
fn forms_outside_the_span_are_rejected() {
    let b = basis_weight0(17, 1).unwrap();
    assert_eq!(b.decompose(&phi_0_1(1).unwrap()), Err(Error::NotInSpan));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn decompose_inverts_combine(v in prop::collection::vec((-50i64..50, 1i64..20), 8)) {
        let b = basis_weight0(17, 1).unwrap();
        let coeffs: Vec<Rational> = v.iter().map(|&(n, d)| frac(n, d)).collect();
        let f = b.combine(&coeffs).unwrap();
        prop_assert_eq!(b.decompose(&f).unwrap(), coeffs);
    }
}
