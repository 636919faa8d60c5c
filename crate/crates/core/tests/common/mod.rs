#![allow(dead_code)]

use proptest::prelude::RngExt;
use proptest::test_runner::{RngAlgorithm, TestRng};
use zmc::paraholo::{Membership, ParaExpr, RegionSpec};
use zmc::weierstrass::{data, integrand, Formula, Kind, SurfacePatch, WeierstrassData};
use zmc::ParaComplex;

pub fn rng() -> TestRng {
    TestRng::deterministic_rng(RngAlgorithm::ChaCha)
}

pub fn pc(re: f64, im: f64) -> ParaComplex {
    ParaComplex::new(re, im)
}

/// Uniform random points of the region whose finite-difference stencil of
/// step `h` also lies inside.
pub fn region_points(rng: &mut TestRng, region: &RegionSpec, count: usize, h: f64) -> Vec<ParaComplex> {
    let r = region.rect;
    let mut out = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        assert!(tries < 100 * count, "region `{}` is too thin to sample", region.name);
        let z = pc(rng.random_range(r.u_min..r.u_max), rng.random_range(r.v_min..r.v_max));
        let stencil = [pc(h, 0.0), pc(-h, 0.0), pc(0.0, h), pc(0.0, -h), pc(0.0, 0.0)];
        if stencil.iter().all(|d| region.classify(z + *d) == Membership::Inside) {
            out.push(z);
        }
    }
    out
}

pub fn standard_data() -> Vec<WeierstrassData> {
    vec![
        data::enneper(),
        data::plane(),
        data::scherk(true),
        data::scherk(false),
        data::catenoid(true),
        data::catenoid(false),
    ]
}

/// Every expression attached to a data set: `g`, `ω`, both integrands,
/// stored simplified integrands and the closed-form primitives.
pub fn expressions_of(d: &WeierstrassData) -> Vec<(String, ParaExpr)> {
    let mut out = vec![("g".to_string(), d.g.clone()), ("omega".to_string(), d.omega.clone())];
    for kind in [Kind::First, Kind::Third] {
        for (k, e) in integrand(d, kind).into_iter().enumerate() {
            out.push((format!("{kind:?} integrand[{k}]"), e));
        }
        for (k, e) in d.integrand_form(kind).into_iter().enumerate() {
            out.push((format!("{kind:?} form[{k}]"), e));
        }
    }
    for f in [Formula::F1, Formula::F3] {
        if let Some(p) = SurfacePatch::new(d.clone(), f).primitive() {
            for (k, e) in p.iter().enumerate() {
                out.push((format!("{:?} primitive[{k}]", f.kind()), e.clone()));
            }
        }
    }
    out
}
