use num_bigint::BigInt;
use proptest::prelude::*;

use super::uni;
use super::*;
use crate::error::Error;

fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

fn q_poch_inf(order: i64) -> QSeries {
    QSeries::from_univariate(&uni::poch_inf(1, 1, order as usize), 0, order)
}

#[test]
fn partition_numbers_from_inverse() {
    let p = q_poch_inf(12).invert().unwrap();
    let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for (n, e) in expected.iter().enumerate() {
        assert_eq!(p.coeff(n as i64, 0), b(*e));
    }
    assert_eq!(p.floor(), 0);
    assert_eq!(p.order(), 12);
}

#[test]
fn euler_pentagonal() {
    let e = uni::poch_inf(1, 1, 30);
    for (n, c) in e.iter().enumerate() {
        let mut expected = 0i64;
        for k in -5i64..=5 {
            if (k * (3 * k - 1) / 2) as usize == n {
                expected = if k % 2 == 0 { 1 } else { -1 };
            }
        }
        assert_eq!(*c, b(expected), "n = {n}");
    }
}

#[test]
fn shift_of_polynomial() {
    let s = (&ZPoly::one() + &ZPoly::monomial(b(1), 1, 2)).to_series(10).unwrap();
    let t = s.shift_z(-1).unwrap();
    let expected = (&ZPoly::one() + &ZPoly::monomial(b(1), 1, 1)).to_series(9).unwrap();
    assert_eq!(QSeries::equal_to_order(&t, &expected, 9).unwrap(), None);
    assert_eq!(t.order(), 9);
}

#[test]
fn invert_laurent_monomial_lead() {
    let s = (&ZPoly::q_pow(2) + &ZPoly::monomial(b(3), 1, 3)).to_series(10).unwrap();
    let inv = s.invert().unwrap();
    assert_eq!(inv.floor(), -2);
    assert_eq!(inv.order(), 6);
    let prod = &s * &inv;
    assert_eq!(QSeries::equal_to_order(&prod, &QSeries::one(6), prod.order()).unwrap(), None);
}

#[test]
fn invert_rejects_non_units() {
    let two = (&ZPoly::constant(2) + &ZPoly::q()).to_series(5).unwrap();
    assert_eq!(two.invert(), Err(Error::NonUnitLeadingTerm));
    let zlead = (&ZPoly::z() + &ZPoly::q()).to_series(5).unwrap();
    assert_eq!(zlead.invert(), Err(Error::NonUnitLeadingTerm));
    assert_eq!(QSeries::zero(5).invert(), Err(Error::NonUnitLeadingTerm));
}

#[test]
fn floor_underflow_is_reported() {
    let s = ZPoly::q_pow(70).to_series(200).unwrap();
    assert!(matches!(s.invert(), Err(Error::FloorUnderflow { exponent: -70, .. })));
}

#[test]
fn laurent_product_loses_order() {
    let a = ZPoly::q_pow(-1).to_series(5).unwrap();
    let c = q_poch_inf(5);
    let p = &a * &c;
    assert_eq!(p.order(), 4);
    assert_eq!(p.coeff(-1, 0), b(1));
    assert_eq!(p.coeff(0, 0), b(-1));
}

#[test]
fn divergence_reports_smallest_pair() {
    let a = ZPoly::monomial(b(2), 3, 4).to_series(10).unwrap();
    let c = &a + &ZPoly::monomial(b(1), 1, 4).to_series(10).unwrap();
    let d = QSeries::equal_to_order(&a, &c, 10).unwrap().unwrap();
    assert_eq!((d.qexp, d.zdeg, d.left, d.right), (4, 1, b(0), b(1)));
    assert!(matches!(
        QSeries::equal_to_order(&a, &c, 11),
        Err(Error::InsufficientOrder { requested: 11, available: 10 })
    ));
}

#[test]
fn eval_points() {
    let p = &(&ZPoly::one() + &ZPoly::monomial(b(2), 1, 1)) + &ZPoly::monomial(b(5), 2, 1);
    let s = p.to_series(3).unwrap();
    assert_eq!(s.eval_z(ZPoint::One).coeff(1, 0), b(7));
    assert_eq!(s.eval_z(ZPoint::Zero).coeff(1, 0), b(0));
    assert_eq!(s.eval_z(ZPoint::Zero).coeff(0, 0), b(1));
}

#[test]
fn json_wire_format() {
    let p = &ZPoly::monomial(b(-3), 2, -1) + &ZPoly::monomial(b(7), 0, 2);
    let s = p.to_series(4).unwrap();
    let text = s.to_json();
    assert_eq!(text, r#"{"floor":-1,"order":4,"coeffs":[[-1,[[2,"-3"]]],[2,[[0,"7"]]]]}"#);
    assert_eq!(QSeries::from_json(&text).unwrap(), s);
    assert!(QSeries::from_json(r#"{"floor":0,"order":3,"coeffs":[[2,[]],[1,[]]]}"#).is_err());
}

#[test]
fn qbinom_small() {
    assert_eq!(uni::qbinom_poly(4, 2, 1), [1, 1, 2, 1, 1].map(b).to_vec());
    assert_eq!(uni::qbinom_poly(3, 1, 2), [1, 0, 1, 0, 1].map(b).to_vec());
    assert!(uni::qbinom_poly(3, 4, 1).is_empty());
}

#[test]
fn zpoly_display_and_pochhammer() {
    let p = ZPoly::z_pochhammer(1, 2);
    assert_eq!(p.to_string(), "1 - z*q - z*q^2 + z^2*q^3");
    assert_eq!(p.shift_z(1).to_string(), "1 - z*q^2 - z*q^3 + z^2*q^5");
}

fn arb_series(order: i64) -> impl Strategy<Value = QSeries> {
    proptest::collection::vec((0i64..=order, 0u32..4, -5i64..=5), 0..12).prop_map(move |ts| {
        QSeries::from_terms(order, ts.into_iter().map(|(q, z, c)| (q, z, BigInt::from(c)))).unwrap()
    })
}

fn arb_unit(order: i64) -> impl Strategy<Value = QSeries> {
    (arb_series(order), prop::bool::ANY).prop_map(move |(s, neg)| {
        let tail = s.mul_monomial(&BigInt::from(1), 0, 1).truncate(order).unwrap();
        let lead = QSeries::one(order).scale(&BigInt::from(if neg { -1 } else { 1 }));
        &lead + &tail
    })
}

fn same(a: &QSeries, b: &QSeries) -> bool {
    let n = a.order().min(b.order());
    QSeries::equal_to_order(a, b, n).unwrap().is_none()
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_series(8), x in arb_series(8), c in arb_series(8)) {
        prop_assert!(same(&(&(&a + &x) + &c), &(&a + &(&x + &c))));
        prop_assert!(same(&(&a * &x), &(&x * &a)));
        prop_assert!(same(&(&(&a * &x) * &c), &(&a * &(&x * &c))));
        prop_assert!(same(&(&a * &(&x + &c)), &(&(&a * &x) + &(&a * &c))));
        prop_assert!(same(&(&a - &a), &QSeries::zero(8)));
    }

    #[test]
    fn inverse_is_two_sided(u in arb_unit(10)) {
        let inv = u.invert().unwrap();
        prop_assert!(same(&(&u * &inv), &QSeries::one(10)));
        prop_assert!(same(&inv.invert().unwrap(), &u));
    }

    #[test]
    fn shift_composes(a in arb_series(10), i in 0i64..3, j in 0i64..3) {
        let lhs = a.shift_z(i).unwrap().shift_z(j).unwrap();
        let rhs = a.shift_z(i + j).unwrap();
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn shift_is_multiplicative(a in arb_series(8), x in arb_series(8), j in 0i64..3) {
        let lhs = (&a * &x).shift_z(j).unwrap();
        let rhs = &a.shift_z(j).unwrap() * &x.shift_z(j).unwrap();
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn json_roundtrip(a in arb_series(9)) {
        prop_assert_eq!(QSeries::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn zpoly_series_homomorphism(ts in proptest::collection::vec((0u32..3, -2i64..4, -3i64..=3), 0..6),
                                 us in proptest::collection::vec((0u32..3, -2i64..4, -3i64..=3), 0..6)) {
        let mk = |v: &Vec<(u32, i64, i64)>| {
            let mut p = ZPoly::zero();
            for &(z, q, c) in v { p.add_term(z, q, BigInt::from(c)); }
            p
        };
        let (p, r) = (mk(&ts), mk(&us));
        let lhs = (&p * &r).to_series(12).unwrap();
        let rhs = p.to_series(20).unwrap().mul_zpoly(&r);
        prop_assert!(QSeries::equal_to_order(&lhs, &rhs, 12).unwrap().is_none());
    }
}
