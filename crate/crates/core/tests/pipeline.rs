mod common;

use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skeltrop::io::{emit_certificate, parse_input};
use skeltrop::rational::Rational;
use skeltrop::sections::{canonical_order_matrix, restrict_affine};
use skeltrop::tropicalizer::{
    check_unimodular, separation_certificate, CertificateEvidence, CheckOptions,
};
use skeltrop::{check_faithful, CheckMode, Overall, PiecewiseAffineMap};

#[test]
fn named_fixtures_are_faithful_in_both_modes() {
    for fx in common::named_fixtures() {
        let m = canonical_order_matrix(&fx.complex);
        let r = check_faithful(&fx.complex, &m, &CheckOptions::default()).unwrap();
        assert_eq!(r.overall, Overall::Faithful, "{}", fx.label);
        assert!(r.defects.is_empty(), "{}", fx.label);
        assert!(
            r.pairs.iter().all(|p| p.paths_agree() == Some(true)),
            "{}",
            fx.label
        );
    }
}

#[test]
fn random_orders_keep_the_canonical_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for fx in common::random_fixtures(30) {
        let m = common::random_orders(&fx.complex, &mut rng);
        let r = check_faithful(&fx.complex, &m, &CheckOptions::with_mode(CheckMode::Both)).unwrap();
        assert_eq!(r.overall, Overall::Faithful, "{}", fx.label);
        assert!(r.defects.is_empty());
    }
}

#[test]
fn vertex_images_follow_the_unit_pattern() {
    for fx in common::named_fixtures() {
        let c = &fx.complex;
        let f = PiecewiseAffineMap::build(c, &canonical_order_matrix(c)).unwrap();
        for s in c.strata() {
            assert!(check_unimodular(&f, s.id).verdict);
            for (a, &j) in s.vertices.iter().enumerate() {
                let image = f.vertex_image(s.id, a);
                for &k in &s.vertices {
                    let want = i64::from(k != j);
                    assert_eq!(image[k - 1], want.into(), "{} {}", fx.label, s.name);
                }
            }
        }
    }
}

#[test]
fn separation_values_on_a_path() {
    let fx = common::named_fixtures()
        .into_iter()
        .find(|f| f.label == "path(4)")
        .unwrap();
    let c = &fx.complex;
    let m = canonical_order_matrix(c);
    let f = PiecewiseAffineMap::build(c, &m).unwrap();
    let s = c.by_name("1-2").unwrap().id;
    let t = c.by_name("3-4").unwrap().id;
    let cert = separation_certificate(&f, &m, s, t).unwrap().unwrap();
    assert!(cert.separates());
    let g = restrict_affine(&m, cert.vertex, c.stratum(s)).unwrap();
    let half = Rational::new(1.into(), 2.into());
    let v = g.evaluate(&[half.clone(), half]);
    assert!(v > cert.relint_range.0 && v < cert.relint_range.1);
    assert!(cert.other_lower_bound >= Rational::one());
}

#[test]
fn document_round_trip_and_stable_certificate() {
    for fx in common::random_fixtures(10) {
        let text = fx.doc.to_pretty_json();
        let doc = parse_input(&text).unwrap();
        assert_eq!(doc, fx.doc);
        assert_eq!(parse_input(&doc.to_pretty_json()).unwrap(), doc);
        let p = doc.resolve().unwrap();
        let a = check_faithful(&p.complex, &p.orders, &p.options(None, 1)).unwrap();
        let b = check_faithful(&p.complex, &p.orders, &p.options(None, 3)).unwrap();
        assert_eq!(
            emit_certificate(&doc, &p.complex, &a),
            emit_certificate(&doc, &p.complex, &b)
        );
    }
}

#[test]
fn disconnected_complex_is_noted() {
    let fx = common::named_fixtures()
        .into_iter()
        .find(|f| f.label == "simplex_boundary(1)")
        .unwrap();
    let r = check_faithful(
        &fx.complex,
        &canonical_order_matrix(&fx.complex),
        &CheckOptions::default(),
    )
    .unwrap();
    assert_eq!(r.overall, Overall::Faithful);
    assert!(r.notes.iter().any(|n| n.contains("disconnected")));
    assert!(matches!(
        r.pairs[0].certificate,
        Some(CertificateEvidence::Separation(_))
    ));
}
