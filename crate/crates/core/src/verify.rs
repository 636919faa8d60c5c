//! Numerical checks: ZMC equation residuals, causal character, component
//! census, implicit membership, metric-singular loci, congruences and umbilics.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::catalog::{graph_eval, EntireGraph, GraphPlane, ImplicitSurface, Partials};
use crate::error::{Result, ZmcError};
use crate::minkowski::{cross, inner, Isometry, Point3};
use crate::paracomplex::ParaComplex;
use crate::paraholo::{Membership, Rect};
use crate::weierstrass::SurfacePatch;

/// Default relative width of the light-like band.
pub const TAU_LIGHT: f64 = 1e-9;

/// Rectangle in graph coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Window {
    pub const fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Window { x_min, x_max, y_min, y_max }
    }

    pub fn square(half: f64) -> Self {
        Window::new(-half, half, -half, half)
    }

    pub fn dx(&self, n: usize) -> f64 {
        (self.x_max - self.x_min) / n as f64
    }

    pub fn dy(&self, n: usize) -> f64 {
        (self.y_max - self.y_min) / n as f64
    }

    /// Centre of cell `(i, j)` of an `n × n` grid.
    pub fn cell(&self, n: usize, i: usize, j: usize) -> (f64, f64) {
        (
            self.x_min + (i as f64 + 0.5) * self.dx(n),
            self.y_min + (j as f64 + 0.5) * self.dy(n),
        )
    }

    pub fn to_rect(self) -> Rect {
        Rect::new(self.x_min, self.x_max, self.y_min, self.y_max)
    }
}

impl From<Rect> for Window {
    fn from(r: Rect) -> Self {
        Window::new(r.u_min, r.u_max, r.v_min, r.v_max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Analytic,
    Fd,
}

fn require_s(g: &EntireGraph) -> Result<()> {
    if g.plane != GraphPlane::Spacelike {
        return Err(ZmcError::Config(format!(
            "`{}` is a graph over a light-like plane; the check needs a graph over a space-like plane",
            g.name
        )));
    }
    Ok(())
}

fn zmc_lhs(p: Partials) -> f64 {
    (1.0 - p.fy * p.fy) * p.fxx + 2.0 * p.fx * p.fy * p.fxy + (1.0 - p.fx * p.fx) * p.fyy
}

/// Default step of the finite-difference mode.
pub const FD_STEP: f64 = 1e-4;

/// `(1 − f_y²) f_xx + 2 f_x f_y f_xy + (1 − f_x²) f_yy` at `(x, y)`.
pub fn zmc_residual(g: &EntireGraph, x: f64, y: f64, mode: Mode) -> Result<f64> {
    zmc_residual_with_step(g, x, y, mode, FD_STEP)
}

pub fn zmc_residual_with_step(g: &EntireGraph, x: f64, y: f64, mode: Mode, h: f64) -> Result<f64> {
    require_s(g)?;
    let p = match mode {
        Mode::Analytic => g
            .partials(x, y)
            .ok_or_else(|| ZmcError::Config(format!("`{}` has no closed-form partials", g.name)))?,
        Mode::Fd => g.partials_fd(x, y, h),
    };
    Ok(zmc_lhs(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Causal {
    Spacelike,
    Timelike,
    Lightlike,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CausalLabel {
    pub label: Causal,
    pub discriminant: f64,
}

fn label(disc: f64, scale: f64, tau: f64) -> CausalLabel {
    let label = if disc.abs() <= tau * scale {
        Causal::Lightlike
    } else if disc > 0.0 {
        Causal::Spacelike
    } else {
        Causal::Timelike
    };
    CausalLabel { label, discriminant: disc }
}

/// `det` of the induced metric of the graph in its own coordinates, with the
/// scale used for the light-like band. Type S: `1 − f_x² − f_y²`. Type L:
/// `−f_η − f_x²/4`.
pub fn graph_discriminant(g: &EntireGraph, a: f64, b: f64) -> (f64, f64) {
    let p = g.partials(a, b).unwrap_or_else(|| g.partials_fd(a, b, 1e-6));
    match g.plane {
        GraphPlane::Spacelike => {
            let q = p.fx * p.fx + p.fy * p.fy;
            (1.0 - q, 1.0 + q)
        }
        GraphPlane::Lightlike => {
            let q = 0.25 * p.fx * p.fx;
            (-p.fy - q, 1.0 + p.fy.abs() + q)
        }
    }
}

pub fn causal_classify(g: &EntireGraph, a: f64, b: f64) -> CausalLabel {
    causal_classify_tol(g, a, b, TAU_LIGHT)
}

pub fn causal_classify_tol(g: &EntireGraph, a: f64, b: f64, tau: f64) -> CausalLabel {
    let (d, s) = graph_discriminant(g, a, b);
    label(d, s, tau)
}

/// Causal character of a parametrized patch from the sign of `det I` (finite differences).
pub fn classify_patch(p: &SurfacePatch, z: ParaComplex, h: f64, tau: f64) -> Result<CausalLabel> {
    let ff = p.first_fundamental_form_fd(z, h)?;
    let scale = ff.e.abs().max(ff.g.abs()).max(ff.f.abs()).powi(2).max(f64::MIN_POSITIVE);
    Ok(label(ff.det(), scale, tau))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentInfo {
    pub label: Causal,
    pub cells: usize,
    /// `[x_min, x_max, y_min, y_max]` over cell centres.
    pub bbox: [f64; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub window: Window,
    pub grid: usize,
    pub tol: f64,
    pub edge_samples: usize,
    pub spacelike_components: usize,
    pub timelike_components: usize,
    pub lightlike_cells: usize,
    pub components: Vec<ComponentInfo>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CensusOptions {
    pub tau: f64,
    /// Interior samples on each grid edge; an edge only joins two cells if
    /// every sample carries the same (non-light-like) label.
    pub edge_samples: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            tau: TAU_LIGHT,
            edge_samples: 16,
        }
    }
}

/// Connected components of the space-like and time-like parts on an `n × n`
/// cell grid (4-neighbour). Cells in the light-like band belong to no component.
pub fn component_census(g: &EntireGraph, window: Window, n: usize, opts: CensusOptions) -> Result<CensusReport> {
    if n < 16 {
        return Err(ZmcError::Config(format!("census grid must be at least 16 per axis, got {n}")));
    }
    let idx = |i: usize, j: usize| j * n + i;
    let labels: Vec<Causal> = (0..n * n)
        .map(|k| {
            let (x, y) = window.cell(n, k % n, k / n);
            causal_classify_tol(g, x, y, opts.tau).label
        })
        .collect();
    let edge_ok = |a: (f64, f64), b: (f64, f64), want: Causal| {
        (1..=opts.edge_samples).all(|k| {
            let s = k as f64 / (opts.edge_samples + 1) as f64;
            let (x, y) = (a.0 + s * (b.0 - a.0), a.1 + s * (b.1 - a.1));
            causal_classify_tol(g, x, y, opts.tau).label == want
        })
    };
    let mut comp = vec![usize::MAX; n * n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n * n {
        if comp[start] != usize::MAX || labels[start] == Causal::Lightlike {
            continue;
        }
        let id = components.len();
        let want = labels[start];
        let mut info = ComponentInfo {
            label: want,
            cells: 0,
            bbox: [f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY],
        };
        comp[start] = id;
        queue.push_back(start);
        while let Some(k) = queue.pop_front() {
            let (i, j) = (k % n, k / n);
            let here = window.cell(n, i, j);
            info.cells += 1;
            info.bbox = [
                info.bbox[0].min(here.0),
                info.bbox[1].max(here.0),
                info.bbox[2].min(here.1),
                info.bbox[3].max(here.1),
            ];
            let mut nbrs = [None; 4];
            if i > 0 {
                nbrs[0] = Some((i - 1, j));
            }
            if i + 1 < n {
                nbrs[1] = Some((i + 1, j));
            }
            if j > 0 {
                nbrs[2] = Some((i, j - 1));
            }
            if j + 1 < n {
                nbrs[3] = Some((i, j + 1));
            }
            for (ni, nj) in nbrs.into_iter().flatten() {
                let m = idx(ni, nj);
                if comp[m] == usize::MAX && labels[m] == want && edge_ok(here, window.cell(n, ni, nj), want) {
                    comp[m] = id;
                    queue.push_back(m);
                }
            }
        }
        components.push(info);
    }
    let count = |c: Causal| components.iter().filter(|i| i.label == c).count();
    Ok(CensusReport {
        window,
        grid: n,
        tol: opts.tau,
        edge_samples: opts.edge_samples,
        spacelike_components: count(Causal::Spacelike),
        timelike_components: count(Causal::Timelike),
        lightlike_cells: labels.iter().filter(|l| **l == Causal::Lightlike).count(),
        components,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipReport {
    pub surface: String,
    pub samples: usize,
    pub max_residual: f64,
    pub argmax_location: Option<Point3>,
}

/// `max |Ψ(p)|` over the points.
pub fn membership_residual(points: &[Point3], s: ImplicitSurface) -> f64 {
    membership_report(points, s).max_residual
}

pub fn membership_report(points: &[Point3], s: ImplicitSurface) -> MembershipReport {
    let mut rep = MembershipReport {
        surface: s.name().to_string(),
        samples: points.len(),
        max_residual: 0.0,
        argmax_location: None,
    };
    for p in points {
        let r = s.residual(*p).abs();
        if exceeds(r, rep.max_residual) {
            rep.max_residual = r;
            rep.argmax_location = Some(*p);
        }
    }
    rep
}

/// Placed points of a patch at the in-region cell centres of an `n × n` grid.
/// Whether `r` replaces `worst` as the running maximum. NaN wins and then sticks,
/// so a single undefined residual fails the whole check.
fn exceeds(r: f64, worst: f64) -> bool {
    !worst.is_nan() && (r.is_nan() || r > worst)
}

pub fn patch_samples(p: &SurfacePatch, n: usize) -> Result<Vec<Point3>> {
    p.region().samples(n).into_iter().map(|z| p.placed_point(z)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingularScanOptions {
    /// Nodes need `|λ| < threshold`.
    pub threshold: f64,
    /// ... and an estimated distance to the zero set of `λ` of at most this many grid steps.
    pub max_steps: f64,
}

impl Default for SingularScanOptions {
    fn default() -> Self {
        SingularScanOptions {
            threshold: 0.05,
            max_steps: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularScan {
    pub grid: usize,
    pub step: f64,
    pub points: Vec<ParaComplex>,
    /// Indices into `points`, grouped by 8-connectivity on the grid.
    pub clusters: Vec<Vec<usize>>,
    /// Grid nodes inside the excluded band of the region (not scanned).
    pub excluded: usize,
}

/// Grid nodes of the region's rectangle where the conformal factor vanishes.
///
/// `√|λ|` vanishes linearly across a degenerate curve; a node is reported
/// when `|λ|` is below the threshold and `√|λ| / |∇√|λ||` (one-sided grid
/// gradients) puts it within `max_steps` grid steps of the curve.
pub fn singular_locus_scan(p: &SurfacePatch, n: usize, opts: SingularScanOptions) -> SingularScan {
    let region = p.region();
    let rect = region.rect;
    let step = ((rect.u_max - rect.u_min) / (n - 1) as f64).max((rect.v_max - rect.v_min) / (n - 1) as f64);
    let (du, dv) = ((rect.u_max - rect.u_min) / (n - 1) as f64, (rect.v_max - rect.v_min) / (n - 1) as f64);
    let mut excluded = 0;
    let mu: Vec<Option<f64>> = (0..n * n)
        .map(|k| {
            let z = rect.node(n, k % n, k / n);
            match region.classify(z) {
                Membership::Inside => p.conformal_factor(z).ok().filter(|l| l.is_finite()).map(|l| l.abs().sqrt()),
                Membership::Excluded => {
                    excluded += 1;
                    None
                }
                _ => None,
            }
        })
        .collect();
    let at = |i: usize, j: usize| mu[j * n + i];
    let one_sided = |c: f64, a: Option<f64>, b: Option<f64>, h: f64| {
        let da = a.map(|v| (v - c).abs()).unwrap_or(0.0);
        let db = b.map(|v| (v - c).abs()).unwrap_or(0.0);
        da.max(db) / h
    };
    let mut flagged = vec![usize::MAX; n * n];
    let mut points = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let Some(m) = at(i, j) else { continue };
            if m * m >= opts.threshold {
                continue;
            }
            let left = if i > 0 { at(i - 1, j) } else { None };
            let right = if i + 1 < n { at(i + 1, j) } else { None };
            let down = if j > 0 { at(i, j - 1) } else { None };
            let up = if j + 1 < n { at(i, j + 1) } else { None };
            let gu = one_sided(m, left, right, du);
            let gv = one_sided(m, down, up, dv);
            let grad = gu.hypot(gv);
            let dist = if m == 0.0 { 0.0 } else if grad > 0.0 { m / grad } else { f64::INFINITY };
            if dist <= opts.max_steps * step {
                flagged[j * n + i] = points.len();
                points.push(rect.node(n, i, j));
            }
        }
    }
    let mut cluster_of = vec![usize::MAX; points.len()];
    let mut clusters = Vec::new();
    for start in 0..n * n {
        let s = flagged[start];
        if s == usize::MAX || cluster_of[s] != usize::MAX {
            continue;
        }
        let id = clusters.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        cluster_of[s] = id;
        while let Some(k) = stack.pop() {
            members.push(flagged[k]);
            let (i, j) = ((k % n) as i64, (k / n) as i64);
            for (di, dj) in [(-1, -1), (0, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1)] {
                let (a, b) = (i + di, j + dj);
                if a < 0 || b < 0 || a >= n as i64 || b >= n as i64 {
                    continue;
                }
                let m = b as usize * n + a as usize;
                let f = flagged[m];
                if f != usize::MAX && cluster_of[f] == usize::MAX {
                    cluster_of[f] = id;
                    stack.push(m);
                }
            }
        }
        members.sort_unstable();
        clusters.push(members);
    }
    SingularScan {
        grid: n,
        step,
        points,
        clusters,
        excluded,
    }
}

/// Symmetric Hausdorff distance between a point set and a densely sampled curve.
pub fn hausdorff(points: &[ParaComplex], curve: &[ParaComplex]) -> f64 {
    let d = |a: ParaComplex, set: &[ParaComplex]| set.iter().map(|b| (a - *b).euclid()).fold(f64::INFINITY, f64::min);
    let one = points.iter().map(|p| d(*p, curve)).fold(0.0, f64::max);
    let two = curve.iter().map(|c| d(*c, points)).fold(0.0, f64::max);
    one.max(two)
}

/// `max |Ψ_b(iso(p))|` over samples of `a`.
pub fn congruence_residual(b: ImplicitSurface, iso: &Isometry, samples: &[Point3]) -> f64 {
    samples.iter().map(|p| b.residual(iso.apply(*p)).abs()).fold(0.0, f64::max)
}

/// Points of `a` above an `n × n` grid of the window, from the closed-form
/// height solver, keeping `|t| ≤ t_max` and `|Ψ_a| ≤ 1e−9`.
pub fn implicit_samples(a: ImplicitSurface, window: Window, n: usize, t_max: f64) -> Vec<Point3> {
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let (x, y) = window.cell(n, i, j);
            for t in a.solve_t(x, y) {
                let p = Point3::new(t, x, y);
                if t.is_finite() && t.abs() <= t_max && a.residual(p).abs() <= 1e-9 {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CongruenceReport {
    pub from: String,
    pub to: String,
    pub isometry: Isometry,
    pub map: String,
    pub samples: usize,
    pub max_residual: f64,
}

/// Searches the 16 signed axis permutations (with time reversal) combined
/// with translations on the lattice `kπ/2`, `|k| ≤ 4`, in `x` and `y`, then
/// polishes the best translation by Gauss–Newton on the residuals.
pub fn find_isometry(a: ImplicitSurface, b: ImplicitSurface, samples: &[Point3]) -> Result<CongruenceReport> {
    if samples.is_empty() {
        return Err(ZmcError::DomainViolation(format!("no samples of {}", a.name())));
    }
    if let Some(p) = samples.iter().find(|p| a.residual(**p).abs() > 1e-9) {
        return Err(ZmcError::DomainViolation(format!("sample {p} is not on {}", a.name())));
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut shifts: Vec<i32> = (-4..=4).collect();
    shifts.sort_by_key(|k| k.abs());
    let mut best: Option<(f64, Isometry)> = None;
    for lin in Isometry::signed_permutations() {
        for &kx in &shifts {
            for &ky in &shifts {
                let iso = lin.with_translation(Point3::new(0.0, kx as f64 * half_pi, ky as f64 * half_pi));
                let r = congruence_residual(b, &iso, samples);
                // keep the first (simplest) candidate unless a later one is clearly better
                if best.is_none_or(|(br, _)| r < 0.5 * br && br - r > 1e-13) {
                    best = Some((r, iso));
                }
            }
        }
    }
    let (_, mut iso) = best.expect("non-empty search");
    iso = polish(b, iso, samples);
    let max_residual = congruence_residual(b, &iso, samples);
    Ok(CongruenceReport {
        from: a.name().to_string(),
        to: b.name().to_string(),
        isometry: iso,
        map: iso.describe(),
        samples: samples.len(),
        max_residual,
    })
}

/// Gauss–Newton on the translation; accepted only if it lowers the max residual.
fn polish(b: ImplicitSurface, iso: Isometry, samples: &[Point3]) -> Isometry {
    let mut cur = iso;
    let mut cur_r = congruence_residual(b, &cur, samples);
    for _ in 0..10 {
        if cur_r < 1e-14 {
            break;
        }
        let h = 1e-7;
        // normal equations JᵀJ δ = −Jᵀr
        let mut jtj = [[0.0; 3]; 3];
        let mut jtr = [0.0; 3];
        for p in samples {
            let q = cur.apply(*p);
            let r = b.residual(q);
            let mut grad = [0.0; 3];
            for (k, g) in grad.iter_mut().enumerate() {
                let mut e = [0.0; 3];
                e[k] = h;
                let d = Point3::from_array(e);
                *g = (b.residual(q + d) - b.residual(q - d)) / (2.0 * h);
            }
            for r_ in 0..3 {
                jtr[r_] += grad[r_] * r;
                for c in 0..3 {
                    jtj[r_][c] += grad[r_] * grad[c];
                }
            }
        }
        let Some(delta) = solve3(jtj, [-jtr[0], -jtr[1], -jtr[2]]) else { break };
        let mut next = cur;
        next.translation = cur.translation + Point3::from_array(delta);
        let r = congruence_residual(b, &next, samples);
        if r < cur_r {
            cur = next;
            cur_r = r;
        } else {
            break;
        }
    }
    cur
}

fn solve3(m: [[f64; 3]; 3], rhs: [f64; 3]) -> Option<[f64; 3]> {
    let det = |a: [[f64; 3]; 3]| {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    let d = det(m);
    let scale = m.iter().flatten().fold(0.0f64, |s, v| s.max(v.abs()));
    if d.abs() <= 1e-12 * scale.powi(3) {
        return None;
    }
    let mut out = [0.0; 3];
    for (c, o) in out.iter_mut().enumerate() {
        let mut a = m;
        for r in 0..3 {
            a[r][c] = rhs[r];
        }
        *o = det(a) / d;
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UmbilicReport {
    pub window: Window,
    pub grid: usize,
    pub cells_used: usize,
    pub min_residual: f64,
    pub argmin_location: Option<[f64; 2]>,
}

/// Minimum discriminant for a cell to enter the umbilic scan.
pub const UMBILIC_MIN_DISCRIMINANT: f64 = 0.05;

/// `‖II − ½ tr(I⁻¹ II) I‖_F` at a space-like point of a type-S graph, from
/// finite-difference partials. `None` where the discriminant is below the cut-off.
pub fn umbilic_residual(g: &EntireGraph, x: f64, y: f64, h: f64) -> Option<f64> {
    let p = g.partials_fd(x, y, h);
    let disc = 1.0 - p.fx * p.fx - p.fy * p.fy;
    if disc < UMBILIC_MIN_DISCRIMINANT {
        return None;
    }
    let (fx_vec, fy_vec) = (Point3::new(p.fx, 1.0, 0.0), Point3::new(p.fy, 0.0, 1.0));
    let (e, f, gg) = (inner(fx_vec, fx_vec), inner(fx_vec, fy_vec), inner(fy_vec, fy_vec));
    let n = cross(fx_vec, fy_vec);
    let nu = n * (1.0 / inner(n, n).abs().sqrt());
    let sec = |v: f64| inner(Point3::new(v, 0.0, 0.0), nu);
    let (l, m, nn) = (sec(p.fxx), sec(p.fxy), sec(p.fyy));
    let det = e * gg - f * f;
    let trace = (gg * l - 2.0 * f * m + e * nn) / det;
    let k = 0.5 * trace;
    let (a, b, c) = (l - k * e, m - k * f, nn - k * gg);
    Some((a * a + 2.0 * b * b + c * c).sqrt())
}

pub fn umbilic_scan(g: &EntireGraph, window: Window, n: usize) -> Result<UmbilicReport> {
    require_s(g)?;
    let mut rep = UmbilicReport {
        window,
        grid: n,
        cells_used: 0,
        min_residual: f64::INFINITY,
        argmin_location: None,
    };
    for j in 0..n {
        for i in 0..n {
            let (x, y) = window.cell(n, i, j);
            if let Some(r) = umbilic_residual(g, x, y, 1e-4) {
                rep.cells_used += 1;
                if r < rep.min_residual {
                    rep.min_residual = r;
                    rep.argmin_location = Some([x, y]);
                }
            }
        }
    }
    Ok(rep)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZmcReport {
    pub graph: String,
    pub mode: Mode,
    pub samples: usize,
    pub max_residual: f64,
    pub argmax_location: Option<[f64; 2]>,
}

/// Maximum ZMC residual over the cell centres of an `n × n` grid.
pub fn zmc_scan(g: &EntireGraph, window: Window, n: usize, mode: Mode) -> Result<ZmcReport> {
    let mut rep = ZmcReport {
        graph: g.name.to_string(),
        mode,
        samples: 0,
        max_residual: 0.0,
        argmax_location: None,
    };
    for j in 0..n {
        for i in 0..n {
            let (x, y) = window.cell(n, i, j);
            let r = zmc_residual(g, x, y, mode)?.abs();
            rep.samples += 1;
            if exceeds(r, rep.max_residual) {
                rep.max_residual = r;
                rep.argmax_location = Some([x, y]);
            }
        }
    }
    Ok(rep)
}

/// Points of a graph over the cell centres of an `n × n` grid, with labels.
pub fn graph_samples(g: &EntireGraph, window: Window, n: usize) -> Vec<(Point3, CausalLabel)> {
    (0..n * n)
        .map(|k| {
            let (a, b) = window.cell(n, k % n, k / n);
            (graph_eval(g, a, b), causal_classify(g, a, b))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub samples: usize,
    pub max_error: f64,
    pub argmax_location: Option<ParaComplex>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub grid: usize,
    pub checks: Vec<IdentityCheck>,
    pub max_error: f64,
}

/// Algebraic identities of the para-complex functions on a deterministic
/// `n × n` grid over `[−3, 3]²`. Points within `1e−3` of the null cone are
/// skipped by the checks that divide by a null component.
pub fn identity_suite(n: usize) -> Result<IdentityReport> {
    use crate::paraholo::ParaExpr;
    let rect = Rect::square(3.0);
    let d_arctan = ParaExpr::z().arctan().deriv();
    type Check = Box<dyn Fn(ParaComplex) -> Result<Option<f64>>>;
    let checks: Vec<(&'static str, Check)> = vec![
        ("log(exp z) = z", Box::new(|z: ParaComplex| Ok(Some((z.exp().log()? - z).euclid())))),
        (
            "arctan' = 1/(1 + z^2) = cos^2(arctan z)",
            Box::new(move |z: ParaComplex| {
                let d = d_arctan.eval(z)?;
                let c = z.arctan().cos();
                let inv = (ParaComplex::ONE + z * z).checked_recip()?;
                Ok(Some((d - c * c).euclid().max((d - inv).euclid())))
            }),
        ),
        (
            "N2(1 + z^2) = (1 + (u - v)^2)(1 + (u + v)^2)",
            Box::new(|z: ParaComplex| {
                let lhs = (ParaComplex::ONE + z * z).norm2();
                let rhs = (1.0 + (z.re - z.im).powi(2)) * (1.0 + (z.re + z.im).powi(2));
                Ok(Some((lhs - rhs).abs() / rhs))
            }),
        ),
        (
            "z * (1/z) = 1",
            Box::new(|z: ParaComplex| {
                let nl = z.to_null();
                if nl.plus.abs() < 1e-3 || nl.minus.abs() < 1e-3 {
                    return Ok(None);
                }
                Ok(Some((z * z.checked_recip()? - ParaComplex::ONE).euclid()))
            }),
        ),
        (
            "exp(a + b) = exp(a) exp(b)",
            Box::new(|z: ParaComplex| {
                let w = ParaComplex::new(0.5 * z.im, -0.25 * z.re);
                let lhs = (z + w).exp();
                Ok(Some((lhs - z.exp() * w.exp()).euclid() / (1.0 + lhs.euclid())))
            }),
        ),
    ];
    let mut out = Vec::new();
    for (name, f) in &checks {
        let mut c = IdentityCheck {
            name,
            samples: 0,
            max_error: 0.0,
            argmax_location: None,
        };
        for z in rect.cell_centers(n) {
            if let Some(e) = f(z)? {
                c.samples += 1;
                if exceeds(e, c.max_error) {
                    c.max_error = e;
                    c.argmax_location = Some(z);
                }
            }
        }
        out.push(c);
    }
    let max_error = out.iter().map(|c| c.max_error).fold(0.0, f64::max);
    Ok(IdentityReport {
        grid: n,
        checks: out,
        max_error,
    })
}
