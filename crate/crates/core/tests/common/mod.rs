#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use skeltrop::io::{generate_fixture, FixtureKind, InputDocument};
use skeltrop::rational::Rational;
use skeltrop::sections::canonical_order_matrix;
use skeltrop::{DualComplex, OrderMatrix};

pub struct Fixture {
    pub label: String,
    pub doc: InputDocument,
    pub complex: DualComplex,
}

fn fixture(label: String, kind: FixtureKind) -> Fixture {
    let doc = generate_fixture(kind).expect("fixture parameters");
    let complex = doc.build_complex().expect("fixture builds");
    Fixture {
        label,
        doc,
        complex,
    }
}

/// At least `count` distinct random simplicial complexes with `ell <= 6`, `d <= 3`.
pub fn random_fixtures(count: usize) -> Vec<Fixture> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let ell = 1 + (seed % 6) as usize;
        let d = 1 + ((seed / 6) % 3) as usize;
        let f = fixture(
            format!("random({ell},{d},{seed})"),
            FixtureKind::Random { ell, d, seed },
        );
        if seen.insert((ell, d, f.doc.complex.facets.clone())) {
            out.push(f);
        }
        seed += 1;
    }
    out
}

pub fn named_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(fixture(format!("cycle({n})"), FixtureKind::Cycle(n)));
    }
    for n in 2..=8 {
        out.push(fixture(format!("path({n})"), FixtureKind::Path(n)));
    }
    for k in 1..=4 {
        out.push(fixture(
            format!("simplex_boundary({k})"),
            FixtureKind::SimplexBoundary(k),
        ));
    }
    out
}

pub fn simplicial_suite() -> Vec<Fixture> {
    let mut all = named_fixtures();
    all.extend(random_fixtures(200));
    all
}

/// Canonical orders with every non-adjacent off-diagonal entry drawn from `1..=5`.
pub fn random_orders<R: Rng>(c: &DualComplex, rng: &mut R) -> OrderMatrix {
    let mut m = canonical_order_matrix(c);
    for i in 1..=c.ell() {
        for j in 1..=c.ell() {
            if i != j && !c.adjacent(i, j) {
                m.set_order(i, j, rng.gen_range(1..=5));
            }
        }
    }
    m
}

/// Random barycentric point with `r` coordinates; `positive` keeps it in the open simplex.
pub fn random_point<R: Rng>(r: usize, positive: bool, rng: &mut R) -> Vec<Rational> {
    loop {
        let lo = i64::from(positive);
        let w: Vec<i64> = (0..r).map(|_| rng.gen_range(lo..=12)).collect();
        let total: i64 = w.iter().sum();
        if total > 0 {
            return w
                .iter()
                .map(|&x| Rational::new(x.into(), total.into()))
                .collect();
        }
    }
}
