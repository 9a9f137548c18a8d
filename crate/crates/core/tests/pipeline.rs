use cylq_core::cylindric::{all_profiles, enumerate_fc, f_from_h, solve_h_recursion};
use cylq_core::suite::theorems::{random_weierstrass, verify_weierstrass};
use cylq_core::suite::{lookup, verify_sum_product, CATALOG, STORED_CERTIFICATES};
use cylq_core::symbolic::{derive_below_line, h_symbolic, Origin};
use cylq_core::{Error, Profile, QSeries, Status};

#[test]
fn stored_certificates_parse() {
    assert_eq!(STORED_CERTIFICATES.len(), 12);
    for s in STORED_CERTIFICATES {
        let c = s.certificate().unwrap();
        assert_eq!(c.modulus, s.modulus);
        assert_eq!(s.profile().modulus(), s.modulus);
    }
}

#[test]
fn derivation_reproduces_stored_mod_seven() {
    let derived = derive_below_line(4).unwrap();
    let (stored, origin) = h_symbolic(Profile::new([2, 2, 0])).unwrap();
    assert_eq!(origin, Origin::Stored);
    assert_eq!(derived[&Profile::new([2, 2, 0])], stored);
}

#[test]
fn recursion_matches_brute_force_at_level_three() {
    let h = solve_h_recursion(3, 10).unwrap();
    for c in all_profiles(3) {
        let f = f_from_h(&h[&c]).unwrap();
        let b = enumerate_fc(c.parts(), 10).unwrap();
        assert_eq!(QSeries::equal_to_order(&f, &b, 10).unwrap(), None, "{c}");
    }
}

#[test]
fn catalog_lookup() {
    assert!(CATALOG.len() >= 15);
    assert!(lookup("322").is_ok());
    assert!(matches!(verify_sum_product("999", 10), Err(Error::UnknownIdentity(_))));
    assert_eq!(verify_sum_product("330", 30).unwrap().status, Status::VerifiedToOrder);
}

#[test]
fn weierstrass_determinism_and_zero_terms() {
    let a = random_weierstrass(3, 9, 3, 5, 15).unwrap();
    assert_eq!(a, random_weierstrass(3, 9, 3, 5, 15).unwrap());
    let r = verify_weierstrass(&[0, 1], &[1, 0], 9, 20).unwrap();
    assert_eq!(r.status, Status::VerifiedToOrder);
}
