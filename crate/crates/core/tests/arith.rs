use ellgenus::arith::{factorize, is_rational_power, power_obstruction, related_by_power};
use ellgenus::exact::{Integer, Rational};
use ellgenus::localize::{line_degree, EquivariantPoint};
use ellgenus::reference::LINE_DEGREE_FACTORS;
use ellgenus::verify::seventeen_fold;
use proptest::prelude::*;

fn degree(crossed: usize) -> Integer {
    let ci = seventeen_fold(crossed).unwrap();
    let p = EquivariantPoint::generic(ci.parabolic(), ci.convention(), 5).unwrap();
    line_degree(&ci, &p).unwrap()
}

#[test]
fn line_degrees_factor_as_published() {
    for (i, crossed) in [2, 3].into_iter().enumerate() {
        let f = factorize(&degree(crossed));
        assert!(f.is_complete() && !f.negative);
        let got: Vec<(u64, u32)> = f.primes.iter().map(|(p, e)| (p.to_string().parse().unwrap(), *e)).collect();
        assert_eq!(got, LINE_DEGREE_FACTORS[i].to_vec());
    }
}

#[test]
fn no_common_seventeenth_power() {
    let (a, b) = (degree(2), degree(3));
    assert!(!related_by_power(&a, &b, 17));
    let p = power_obstruction(&factorize(&a), &factorize(&b), 17).unwrap();
    assert_eq!(p, Integer::from(2));
    let fa = factorize(&a);
    let fb = factorize(&b);
    assert_eq!(fa.valuation(&p) as i64 - fb.valuation(&p) as i64, 6);
}

proptest! {
    #[test]
    fn factorization_multiplies_back(n in 1i64..10_000_000_000) {
        let f = factorize(&Integer::from(n));
        prop_assert!(f.is_complete());
        prop_assert_eq!(f.value(), Integer::from(n));
    }

    #[test]
    fn powers_are_detected(a in 1i64..2000, b in 1i64..2000, k in 1u32..6, s in 1i64..50) {
        let r = Rational::new(Integer::from(a), Integer::from(b));
        prop_assert!(is_rational_power(&num_pow(&r, k), k));
        let x = Integer::from(s);
        let xk = num_pow(&Rational::from_integer(x), k);
        prop_assert!(related_by_power(&Integer::from(a), &(Integer::from(a) * xk.numer()), k));
    }
}

fn num_pow(r: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::from_integer(Integer::from(1)), |acc, _| acc * r)
}
