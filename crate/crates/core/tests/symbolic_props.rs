use cylq_core::symbolic::{
    eval_combo, search_certificate, CertEntry, Certificate, Family, RelInstance, RelationId, SAtom, SCombo,
    SearchBounds,
};
use cylq_core::{QSeries, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = ZPoly> {
    prop_oneof![
        Just(ZPoly::one()),
        Just(ZPoly::constant(-1)),
        Just(ZPoly::q()),
        Just(ZPoly::monomial(BigInt::from(-1), 1, 1)),
        Just(ZPoly::constant(2)),
    ]
}

fn combo(modulus: u32, len: usize) -> impl Strategy<Value = SCombo> {
    proptest::collection::vec((proptest::collection::vec(-2i64..=3, len), coeff()), 0..5).prop_map(move |ts| {
        let mut c = SCombo::zero();
        for (s, p) in ts {
            c.add_term(SAtom::new(modulus, s).unwrap(), p);
        }
        c
    })
}

fn certificate(modulus: u32) -> impl Strategy<Value = Certificate> {
    let ids = RelationId::all(modulus).unwrap();
    let n = ids.len();
    proptest::collection::vec((0..n, -1i64..=2, coeff()), 1..4).prop_map(move |es| Certificate {
        modulus,
        entries: es
            .into_iter()
            .map(|(i, a, coeff)| CertEntry {
                coeff,
                relation: RelInstance { id: ids[i], args: vec![a] },
            })
            .collect(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn shift_is_invertible(c in combo(8, 4), j in 0i64..4) {
        prop_assert_eq!(c.shift_z(j).shift_z(-j), c.clone());
        prop_assert_eq!(c.shift_z(j).sub(&c.shift_z(j)), SCombo::zero());
    }

    #[test]
    fn combo_text_roundtrip(c in combo(10, 4)) {
        let back = cylq_core::symbolic::parse_combo(&c.to_string(), 10).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn certificate_text_roundtrip(cert in certificate(6)) {
        let back = Certificate::parse(&cert.to_string(), 6).unwrap();
        prop_assert_eq!(back.expand().unwrap(), cert.expand().unwrap());
    }

    #[test]
    fn random_certificates_vanish(cert in certificate(7)) {
        let s = eval_combo(&cert.expand().unwrap(), 16).unwrap();
        prop_assert_eq!(QSeries::equal_to_order(&s, &QSeries::zero(16), 16).unwrap(), None);
    }

    #[test]
    fn search_recovers_some_certificate(cert in certificate(6)) {
        let target = cert.expand().unwrap();
        let bounds = SearchBounds { window: (-2, 3), zdeg: 1, qdeg: 2, ..SearchBounds::default() };
        let (found, _) = search_certificate(&target, 6, &bounds).unwrap();
        prop_assert!(found.check(&target).unwrap().valid);
    }
}

#[test]
fn relation_instance_display() {
    let id = RelationId::with_index(Family::R2, 11, 2).unwrap();
    let inst = RelInstance { id, args: vec![0, 1, 0, 1, 1, 0] };
    assert_eq!(inst.to_string(), "R2_2(0, 1, 0, 1, 1, 0)");
    assert!(inst.expand().is_ok());
}
