mod common;

use std::f64::consts::PI;

use common::rng;
use proptest::prelude::RngExt;
use zmc::catalog::{graph_eval, graphs, EntireGraph, ImplicitSurface};
use zmc::verify::{
    causal_classify, component_census, hausdorff, umbilic_scan, zmc_residual, zmc_residual_with_step, Causal,
    CensusOptions, Mode, Window,
};
use zmc::ZmcError;

/// Discriminant of graph_S1p in closed form.
fn s1p_discriminant(x: f64, y: f64) -> f64 {
    let e = (2.0 * y).exp();
    (2.0 - e + e * (2.0 * x).cos()) / (2.0 + e + e * (2.0 * x).cos())
}

#[test]
fn causal_labels_match_the_closed_form_discriminant() {
    let g = graphs::GRAPH_S1P;
    let w = Window::new(-4.0 * PI, 4.0 * PI, -6.0, 6.0);
    let n = 300;
    let (mut space, mut time) = (0, 0);
    for j in 0..n {
        for i in 0..n {
            let (x, y) = w.cell(n, i, j);
            let exact = s1p_discriminant(x, y);
            let label = causal_classify(&g, x, y).label;
            if exact.abs() <= 1e-6 {
                continue;
            }
            let want = if exact > 0.0 { Causal::Spacelike } else { Causal::Timelike };
            assert_eq!(label, want, "({x}, {y}): discriminant {exact:e}");
            // the space-like set is {e^{2y} < 2 / (1 − cos 2x)}
            let inside = (2.0 * y).exp() * (1.0 - (2.0 * x).cos()) < 2.0;
            assert_eq!(inside, label == Causal::Spacelike, "({x}, {y})");
            match label {
                Causal::Spacelike => space += 1,
                _ => time += 1,
            }
        }
    }
    assert!(space > 0 && time > 0);
}

#[test]
fn census_finds_one_spacelike_and_many_timelike_components() {
    let c = component_census(
        &graphs::GRAPH_S1P,
        Window::new(-4.0 * PI, 4.0 * PI, -6.0, 6.0),
        600,
        CensusOptions::default(),
    )
    .unwrap();
    assert_eq!(c.spacelike_components, 1);
    assert!(c.timelike_components > 4, "{}", c.timelike_components);
    let c2 = component_census(&graphs::GRAPH_C2, Window::square(5.0), 400, CensusOptions::default()).unwrap();
    assert_eq!((c2.spacelike_components, c2.timelike_components), (1, 2));
}

#[test]
fn census_rejects_coarse_grids() {
    let err = component_census(&graphs::GRAPH_S1P, Window::square(1.0), 8, CensusOptions::default()).unwrap_err();
    assert!(matches!(err, ZmcError::Config(_)));
}

#[test]
fn finite_difference_residual_converges_at_second_order() {
    let g = graphs::GRAPH_S1P;
    let mut r = rng();
    let err = |h: f64, x: f64, y: f64| {
        (zmc_residual_with_step(&g, x, y, Mode::Fd, h).unwrap() - zmc_residual(&g, x, y, Mode::Analytic).unwrap()).abs()
    };
    let mut checked = 0;
    for _ in 0..200 {
        let (x, y) = (r.random_range(-PI..PI), r.random_range(-1.5..1.5));
        let (e2, e3, e4) = (err(1e-2, x, y), err(1e-3, x, y), err(1e-4, x, y));
        // skip points where the leading error term happens to vanish
        if e2 < 1e-6 {
            continue;
        }
        let ratio = e3 / e2;
        assert!((0.5e-2..=2e-2).contains(&ratio), "({x}, {y}): {e2:e} -> {e3:e}");
        // at h = 1e−4 the O(ε/h²) rounding of second differences is of the
        // same size as the truncation error, so only non-growth is required
        assert!(e4 <= e3 + 1e-7, "({x}, {y}): {e3:e} -> {e4:e}");
        checked += 1;
    }
    assert!(checked > 100);
}

#[test]
fn lightlike_plane_graph_is_entire_and_mixed() {
    let g = graphs::GRAPH_E4;
    let w = Window::square(4.0);
    let n = 120;
    let mut labels = [0usize; 3];
    for j in 0..n {
        for i in 0..n {
            let (a, b) = w.cell(n, i, j);
            let p = graph_eval(&g, a, b);
            assert!(p.is_finite());
            assert!(ImplicitSurface::E4.residual(p).abs() <= 1e-12, "{p}");
            labels[causal_classify(&g, a, b).label as usize] += 1;
        }
    }
    assert!(labels[Causal::Spacelike as usize] > 0 && labels[Causal::Timelike as usize] > 0);
    assert!(matches!(zmc_residual(&g, 0.0, 0.0, Mode::Analytic), Err(ZmcError::Config(_))));
}

#[test]
fn planes_are_umbilic_everywhere() {
    let plane = EntireGraph::affine(0.3, -0.2, 1.0);
    let u = umbilic_scan(&plane, Window::square(2.0), 40).unwrap();
    assert_eq!(u.cells_used, 1600);
    assert!(u.min_residual <= 1e-9);
    assert!(zmc_residual(&plane, 0.4, 0.1, Mode::Analytic).unwrap().abs() <= 1e-15);
}

#[test]
fn lightlike_band_scales_with_tolerance() {
    let g = graphs::GRAPH_S1P;
    // on the boundary curve e^{2y}(1 − cos 2x) = 2 at x = π/2: y = 0
    let label = causal_classify(&g, PI / 2.0, 0.0);
    assert!(label.discriminant.abs() <= 1e-12);
    assert_eq!(label.label, Causal::Lightlike);
}

#[test]
fn hausdorff_is_symmetric_and_zero_on_identical_sets() {
    use zmc::ParaComplex as Z;
    let a = vec![Z::new(0.0, 0.0), Z::new(1.0, 0.0)];
    let b = vec![Z::new(0.0, 0.5), Z::new(1.0, 0.0)];
    assert_eq!(hausdorff(&a, &a), 0.0);
    assert_eq!(hausdorff(&a, &b), hausdorff(&b, &a));
    assert!((hausdorff(&a, &b) - 0.5).abs() < 1e-15);
}
