//! The four representation formulas for zero mean curvature surfaces in ℝ³₁
//! from para-holomorphic Weierstrass data `(g, ω)`.
//!
//! First kind (`F1` = Re, `F2` = Im): `∫ (−1−g², j(1−g²), 2g) ω dz`.
//! Third kind (`F3` = Re, `F4` = Im): `∫ (−1−g², 2jg, −1+g²) ω dz`.
//! Every patch is translated so that it passes through the origin at its base point.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZmcError};
use crate::minkowski::{cross, inner, Isometry, Point3};
use crate::paracomplex::{NullPair, ParaComplex, TAU_INV};
use crate::paraholo::{antiderivative, LineIntegrator, NormSign, ParaExpr, Rect, RegionSpec};
use crate::quadrature::{Quadrature, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    First,
    Third,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Formula {
    F1,
    F2,
    F3,
    F4,
}

impl Formula {
    pub const ALL: [Formula; 4] = [Formula::F1, Formula::F2, Formula::F3, Formula::F4];

    pub fn kind(self) -> Kind {
        match self {
            Formula::F1 | Formula::F2 => Kind::First,
            Formula::F3 | Formula::F4 => Kind::Third,
        }
    }

    /// `F2` and `F4` take the imaginary part of the integral.
    pub fn is_conjugate(self) -> bool {
        matches!(self, Formula::F2 | Formula::F4)
    }

    /// The formula sharing this one's integrand.
    pub fn conjugate(self) -> Formula {
        match self {
            Formula::F1 => Formula::F2,
            Formula::F2 => Formula::F1,
            Formula::F3 => Formula::F4,
            Formula::F4 => Formula::F3,
        }
    }

    fn part(self, w: ParaComplex) -> f64 {
        if self.is_conjugate() {
            w.im
        } else {
            w.re
        }
    }

    fn point(self, v: Triple) -> Point3 {
        Point3::new(self.part(v.0[0]), self.part(v.0[1]), self.part(v.0[2]))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            Formula::F1 => 1,
            Formula::F2 => 2,
            Formula::F3 => 3,
            Formula::F4 => 4,
        };
        write!(f, "F{n}")
    }
}

impl FromStr for Formula {
    type Err = ZmcError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().trim_start_matches('F') {
            "1" => Ok(Formula::F1),
            "2" => Ok(Formula::F2),
            "3" => Ok(Formula::F3),
            "4" => Ok(Formula::F4),
            _ => Err(ZmcError::Config(format!("unknown formula `{s}` (expected F1..F4)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeierstrassData {
    pub name: String,
    pub g: ParaExpr,
    pub omega: ParaExpr,
    pub base: ParaComplex,
    pub region: RegionSpec,
    /// Algebraically simplified first-kind integrand (same values as the raw one),
    /// used to find closed-form antiderivatives.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_kind_form: Option<[ParaExpr; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub third_kind_form: Option<[ParaExpr; 3]>,
}

impl WeierstrassData {
    /// New data with the region's base point.
    pub fn new(name: impl Into<String>, g: ParaExpr, omega: ParaExpr, region: RegionSpec) -> Self {
        let base = region.base_point();
        WeierstrassData {
            name: name.into(),
            g,
            omega,
            base,
            region,
            first_kind_form: None,
            third_kind_form: None,
        }
    }

    pub fn with_forms(mut self, first: Option<[ParaExpr; 3]>, third: Option<[ParaExpr; 3]>) -> Self {
        self.first_kind_form = first;
        self.third_kind_form = third;
        self
    }

    pub fn with_rect(mut self, rect: Rect) -> Self {
        self.region.rect = rect;
        self
    }

    /// The simplified integrand when one is attached, else the raw one.
    pub fn integrand_form(&self, kind: Kind) -> [ParaExpr; 3] {
        let stored = match kind {
            Kind::First => &self.first_kind_form,
            Kind::Third => &self.third_kind_form,
        };
        stored.clone().unwrap_or_else(|| integrand(self, kind))
    }

    /// `(1 − N²(g))² N²(ω)`; zero on the metric-singular set of the first kind.
    pub fn nondegeneracy(&self, z: ParaComplex) -> Result<f64> {
        let (g, w) = (self.g.eval(z)?, self.omega.eval(z)?);
        Ok((1.0 - g.norm2()).powi(2) * w.norm2())
    }
}

/// Integrand triple of the first or third kind, built from `g` and `ω` without simplification.
pub fn integrand(d: &WeierstrassData, kind: Kind) -> [ParaExpr; 3] {
    let g = || d.g.clone();
    let w = || d.omega.clone();
    let g2 = || g().powi(2);
    match kind {
        Kind::First => [
            (-1.0 - g2()) * w(),
            (ParaExpr::j() * (1.0 - g2())) * w(),
            (2.0 * g()) * w(),
        ],
        Kind::Third => [
            (-1.0 - g2()) * w(),
            (ParaExpr::constant(ParaComplex::new(0.0, 2.0)) * g()) * w(),
            (g2() - 1.0) * w(),
        ],
    }
}

fn eval_triple(exprs: &[ParaExpr; 3], z: ParaComplex) -> Result<Triple> {
    Ok(Triple([exprs[0].eval(z)?, exprs[1].eval(z)?, exprs[2].eval(z)?]))
}

/// `g' = (g−1)/(g+1)`, `ω' = (1+g)² ω / 2`. The region gains the constraint
/// `N²(g+1) ≠ 0`. The first-kind integrand of the result equals the third-kind
/// integrand of the input.
pub fn dual_transform(d: &WeierstrassData) -> WeierstrassData {
    let g = d.g.clone();
    let g_new = (g.clone() - 1.0) / (g.clone() + 1.0);
    let w_new = ((g.clone() + 1.0).powi(2) * d.omega.clone()) / 2.0;
    let region = d
        .region
        .clone()
        .with_constraint(g + 1.0, NormSign::Nonzero);
    WeierstrassData {
        name: format!("{}_dual", d.name),
        g: g_new,
        omega: w_new,
        base: d.base,
        region,
        first_kind_form: d.third_kind_form.clone(),
        third_kind_form: None,
    }
}

/// `λ` with first fundamental form `λ(du² − dv²)`:
/// `−(1 − N²(g))² N²(ω)` for the first kind, `−(2 Re g)² N²(ω)` for the third,
/// negated for the conjugate formulas `F2`, `F4`.
pub fn conformal_factor(d: &WeierstrassData, formula: Formula, z: ParaComplex) -> Result<f64> {
    let (g, w) = (d.g.eval(z)?, d.omega.eval(z)?);
    let a = match formula.kind() {
        Kind::First => (1.0 - g.norm2()).powi(2),
        Kind::Third => (2.0 * g.re).powi(2),
    };
    let lambda = -a * w.norm2();
    Ok(if formula.is_conjugate() { -lambda } else { lambda })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalMode {
    ClosedForm,
    Numeric,
}

/// Where a patch sits in space: `p ↦ iso(scale · (p + offset))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Placement {
    pub scale: f64,
    pub offset: Point3,
    pub isometry: Isometry,
}

impl Default for Placement {
    fn default() -> Self {
        Placement {
            scale: 1.0,
            offset: Point3::ORIGIN,
            isometry: Isometry::IDENTITY,
        }
    }
}

impl Placement {
    pub fn apply(&self, p: Point3) -> Point3 {
        self.isometry.apply((p + self.offset) * self.scale)
    }
}

#[derive(Debug, Clone)]
pub struct SurfacePatch {
    pub data: WeierstrassData,
    pub formula: Formula,
    pub mode: EvalMode,
    pub placement: Placement,
    pub integrator: LineIntegrator,
    primitive: Option<[ParaExpr; 3]>,
    primitive_at_base: Option<Triple>,
}

impl SurfacePatch {
    /// Uses the closed-form mode when every integrand component has a table
    /// antiderivative, otherwise numeric line integrals.
    pub fn new(data: WeierstrassData, formula: Formula) -> Self {
        let form = data.integrand_form(formula.kind());
        let primitive = match (antiderivative(&form[0]), antiderivative(&form[1]), antiderivative(&form[2])) {
            (Some(a), Some(b), Some(c)) => Some([a, b, c]),
            _ => None,
        };
        let primitive_at_base = primitive.as_ref().and_then(|p| eval_triple(p, data.base).ok());
        let primitive = primitive_at_base.and(primitive);
        let mode = if primitive.is_some() {
            EvalMode::ClosedForm
        } else {
            EvalMode::Numeric
        };
        SurfacePatch {
            data,
            formula,
            mode,
            placement: Placement::default(),
            integrator: LineIntegrator::default(),
            primitive,
            primitive_at_base,
        }
    }

    pub fn with_mode(mut self, mode: EvalMode) -> Result<Self> {
        if mode == EvalMode::ClosedForm && self.primitive.is_none() {
            return Err(ZmcError::Config(format!(
                "no closed-form antiderivative for `{}` {}",
                self.data.name, self.formula
            )));
        }
        self.mode = mode;
        Ok(self)
    }

    pub fn with_placement(mut self, placement: Placement) -> Self {
        self.placement = placement;
        self
    }

    pub fn has_closed_form(&self) -> bool {
        self.primitive.is_some()
    }

    /// The closed-form antiderivative, if any.
    pub fn primitive(&self) -> Option<&[ParaExpr; 3]> {
        self.primitive.as_ref()
    }

    /// The real or imaginary part of the closed-form antiderivative at the base
    /// point: adding it to the translated patch gives the untranslated one.
    pub fn primitive_offset(&self) -> Option<Point3> {
        self.primitive_at_base.map(|v| self.formula.point(v))
    }

    pub fn region(&self) -> &RegionSpec {
        &self.data.region
    }

    /// `F(z)` with `F(base) = 0`.
    pub fn evaluate(&self, z: ParaComplex) -> Result<Point3> {
        if !self.data.region.contains(z) {
            return Err(ZmcError::DomainViolation(format!(
                "{z} is not in region `{}` ({:?})",
                self.data.region.name,
                self.data.region.classify(z)
            )));
        }
        self.evaluate_unchecked(z)
    }

    /// As [`SurfacePatch::evaluate`] without the region test (finite-difference stencils).
    fn evaluate_unchecked(&self, z: ParaComplex) -> Result<Point3> {
        let v = match (self.mode, &self.primitive, self.primitive_at_base) {
            (EvalMode::ClosedForm, Some(p), Some(base)) => eval_triple(p, z)? - base,
            _ => {
                let exprs = integrand(&self.data, self.formula.kind());
                let f = |w: ParaComplex| eval_triple(&exprs, w);
                self.integrator.between(&f, self.data.base, z, Some(&self.data.region))?
            }
        };
        let p = self.formula.point(v);
        if !p.is_finite() {
            return Err(ZmcError::DomainViolation(format!("immersion is not finite at {z}")));
        }
        Ok(p)
    }

    /// The patch point after its placement (scale, offset, isometry).
    pub fn placed_point(&self, z: ParaComplex) -> Result<Point3> {
        Ok(self.placement.apply(self.evaluate(z)?))
    }

    pub fn conformal_factor(&self, z: ParaComplex) -> Result<f64> {
        conformal_factor(&self.data, self.formula, z)
    }

    fn stencil(&self, z: ParaComplex, h: f64) -> Result<[Point3; 9]> {
        let mut out = [Point3::ORIGIN; 9];
        for (k, slot) in out.iter_mut().enumerate() {
            let (i, j) = ((k % 3) as f64 - 1.0, (k / 3) as f64 - 1.0);
            let w = z + ParaComplex::new(i * h, j * h);
            *slot = self.evaluate_unchecked(w).map_err(|e| {
                ZmcError::DomainViolation(format!("finite-difference stencil at {w} left the domain: {e}"))
            })?;
        }
        Ok(out)
    }

    /// `(⟨F_u,F_u⟩, ⟨F_u,F_v⟩, ⟨F_v,F_v⟩)` by central differences.
    pub fn first_fundamental_form_fd(&self, z: ParaComplex, h: f64) -> Result<FundamentalForm> {
        let s = self.stencil(z, h)?;
        let (fu, fv) = ((s[5] - s[3]) * (0.5 / h), (s[7] - s[1]) * (0.5 / h));
        Ok(FundamentalForm {
            e: inner(fu, fu),
            f: inner(fu, fv),
            g: inner(fv, fv),
        })
    }

    /// Mean curvature from finite-difference first and second fundamental
    /// forms. `None` where the tangent plane is (numerically) light-like.
    pub fn mean_curvature_fd(&self, z: ParaComplex, h: f64) -> Result<Option<f64>> {
        let s = self.stencil(z, h)?;
        let c = s[4];
        let fu = (s[5] - s[3]) * (0.5 / h);
        let fv = (s[7] - s[1]) * (0.5 / h);
        let fuu = (s[5] - c * 2.0 + s[3]) * (1.0 / (h * h));
        let fvv = (s[7] - c * 2.0 + s[1]) * (1.0 / (h * h));
        let fuv = (s[8] - s[6] - s[2] + s[0]) * (0.25 / (h * h));
        let n = cross(fu, fv);
        let nn = inner(n, n);
        let first = FundamentalForm {
            e: inner(fu, fu),
            f: inner(fu, fv),
            g: inner(fv, fv),
        };
        let det = first.det();
        let scale = first.e.abs().max(first.g.abs()).max(first.f.abs());
        if nn.abs() <= 1e-9 * scale * scale || det.abs() <= 1e-12 {
            return Ok(None);
        }
        let nu = n * (1.0 / nn.abs().sqrt());
        let (l, m, nn2) = (inner(fuu, nu), inner(fuv, nu), inner(fvv, nu));
        Ok(Some((first.e * nn2 - 2.0 * first.f * m + first.g * l) / (2.0 * det)))
    }
}

/// Symmetric 2×2 form `[[e, f], [f, g]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FundamentalForm {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

impl FundamentalForm {
    pub fn det(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }
}

/// `F(base) = 0` immersion of the given formula at `z`.
pub fn evaluate_immersion(p: &SurfacePatch, z: ParaComplex) -> Result<Point3> {
    p.evaluate(z)
}

/// The immersion rewritten in null coordinates: with `z = (x+y) + j(x−y)`,
/// `u + v = 2x` and `u − v = 2y`, and each component is
/// `½(P(2x) ± M(2y))` where `P`, `M` are one-variable integrals of the null
/// components of the integrand. The sign is `+` for `F1`, `F3` and `−` for `F2`, `F4`.
pub fn null_form_immersion(d: &WeierstrassData, formula: Formula, x: f64, y: f64) -> Result<Point3> {
    let exprs = integrand(d, formula.kind());
    let b = d.base.to_null();
    let quad = Quadrature::default();
    let comp = |plus: bool, to: f64| -> Result<Triple> {
        let from = if plus { b.plus } else { b.minus };
        quad.integrate(
            |sigma: f64| {
                let np = if plus { NullPair::new(sigma, b.minus) } else { NullPair::new(b.plus, sigma) };
                let v = eval_triple(&exprs, np.to_para()).map_err(|e| {
                    ZmcError::DomainViolation(format!("null-coordinate integrand undefined at {}: {e}", np.to_para()))
                })?;
                let pick = |w: ParaComplex| {
                    let n = w.to_null();
                    ParaComplex::real(if plus { n.plus } else { n.minus })
                };
                Ok(Triple([pick(v.0[0]), pick(v.0[1]), pick(v.0[2])]))
            },
            from,
            to,
        )
    };
    let p = comp(true, 2.0 * x)?;
    let m = comp(false, 2.0 * y)?;
    let sign = if formula.is_conjugate() { -1.0 } else { 1.0 };
    let c = |k: usize| 0.5 * (p.0[k].re + sign * m.0[k].re);
    Ok(Point3::new(c(0), c(1), c(2)))
}

/// Maps the null-coordinate input `(x, y)` to the para-complex parameter.
pub fn null_input_to_z(x: f64, y: f64) -> ParaComplex {
    ParaComplex::new(x + y, x - y)
}

pub fn first_fundamental_form_fd(p: &SurfacePatch, z: ParaComplex, h: f64) -> Result<FundamentalForm> {
    p.first_fundamental_form_fd(z, h)
}

pub fn mean_curvature_fd(p: &SurfacePatch, z: ParaComplex, h: f64) -> Result<Option<f64>> {
    p.mean_curvature_fd(z, h)
}

/// `|N²(w)| ≤ τ·|w|²`.
pub fn is_light_like_value(w: ParaComplex) -> bool {
    w.is_null_within(TAU_INV)
}

/// Standard Weierstrass data sets.
pub mod data {
    use super::*;

    fn z() -> ParaExpr {
        ParaExpr::z()
    }

    /// Enneper data `g = z`, `ω = 1` on `[−3, 3]²`.
    pub fn enneper() -> WeierstrassData {
        WeierstrassData::new(
            "enneper",
            z(),
            ParaExpr::real(1.0),
            RegionSpec::rect("square3", Rect::square(3.0)),
        )
    }

    /// `g = 0`, `ω = 1`: a time-like plane.
    pub fn plane() -> WeierstrassData {
        WeierstrassData::new(
            "plane",
            ParaExpr::real(0.0),
            ParaExpr::real(1.0),
            RegionSpec::rect("square3", Rect::square(3.0)),
        )
    }

    /// `(z + 1)/(z − 1)`.
    pub fn cayley() -> ParaExpr {
        (z() + 1.0) / (z() - 1.0)
    }

    /// Scherk data `g = −z`, `ω = 1/(z⁴ − 1)` on `D₊` (`N²((z+1)/(z−1)) > 0`)
    /// or `D₋` (`< 0`), kept 0.05 away from the light-like lines through `±1`.
    pub fn scherk(plus: bool) -> WeierstrassData {
        let sign = if plus { NormSign::Positive } else { NormSign::Negative };
        let mut region = RegionSpec::rect(if plus { "dplus" } else { "dminus" }, Rect::square(3.0))
            .with_constraint(cayley(), sign)
            .with_excluded(&[-1.0, 1.0], &[-1.0, 1.0], 0.05);
        if !plus {
            region = region.with_anchor(ParaComplex::new(1.0, -1.0));
        }
        let half = |e: ParaExpr| 0.5 * e;
        let zp1 = || z().powi(2) + 1.0;
        let zm1 = || z().powi(2) - 1.0;
        let log_a = || half(1.0 / (z() + 1.0) - 1.0 / (z() - 1.0));
        let first = [
            log_a(),
            half(ParaExpr::constant(ParaComplex::new(0.0, -2.0)) / zp1()),
            half(2.0 * z() / zp1() - 2.0 * z() / zm1()),
        ];
        let two_j = || ParaExpr::constant(ParaComplex::new(0.0, 2.0));
        let third = [
            log_a(),
            half(two_j() * z() / zp1() - two_j() * z() / zm1()),
            half(2.0 / zp1()),
        ];
        WeierstrassData::new(
            if plus { "scherk_dplus" } else { "scherk_dminus" },
            -z(),
            1.0 / (z().powi(4) - 1.0),
            region,
        )
        .with_forms(Some(first), Some(third))
    }

    /// Catenoid data `g = z`, `ω = −1/z²` on the component of `N²(z) > 0`
    /// with `u > 0` (base 1) or of `N²(z) < 0` with `v > 0` (base j).
    pub fn catenoid(positive: bool) -> WeierstrassData {
        let region = if positive {
            RegionSpec::rect("npos", Rect::new(0.0, 3.0, -3.0, 3.0))
                .with_constraint(z(), NormSign::Positive)
                .with_anchor(ParaComplex::ONE)
        } else {
            RegionSpec::rect("nneg", Rect::new(-3.0, 3.0, 0.0, 3.0))
                .with_constraint(z(), NormSign::Negative)
                .with_anchor(ParaComplex::J)
        }
        .with_excluded(&[0.0], &[0.0], 0.05);
        let inv2 = || z().powi(-2);
        let first = [
            inv2() + 1.0,
            ParaExpr::constant(ParaComplex::new(0.0, -1.0)) * (inv2() - 1.0),
            -2.0 / z(),
        ];
        WeierstrassData::new(
            if positive { "catenoid_npos" } else { "catenoid_nneg" },
            z(),
            -1.0 / z().powi(2),
            region,
        )
        .with_forms(Some(first), None)
    }
}

#[cfg(test)]
mod tests {
    use super::data::*;
    use super::*;
    use approx::assert_relative_eq;

    fn pc(re: f64, im: f64) -> ParaComplex {
        ParaComplex::new(re, im)
    }

    fn assert_point(p: Point3, t: f64, x: f64, y: f64, tol: f64) {
        assert!(
            (p - Point3::new(t, x, y)).max_abs() <= tol,
            "{p} != ({t}, {x}, {y})"
        );
    }

    #[test]
    fn formula_parsing() {
        assert_eq!("F3".parse::<Formula>().unwrap(), Formula::F3);
        assert_eq!("f2".parse::<Formula>().unwrap(), Formula::F2);
        assert_eq!("4".parse::<Formula>().unwrap(), Formula::F4);
        assert!("F5".parse::<Formula>().is_err());
        assert_eq!(Formula::F4.to_string(), "F4");
    }

    #[test]
    fn enneper_integrands() {
        let d = enneper();
        let z = ParaExpr::z;
        let want_first = [
            -1.0 - z().powi(2),
            ParaExpr::j() * (1.0 - z().powi(2)),
            2.0 * z(),
        ];
        let want_third = [
            -1.0 - z().powi(2),
            ParaExpr::constant(pc(0.0, 2.0)) * z(),
            z().powi(2) - 1.0,
        ];
        for p in [pc(0.3, -1.2), pc(2.0, 0.5)] {
            for (got, want) in integrand(&d, Kind::First).iter().zip(&want_first) {
                assert_eq!(got.eval(p).unwrap(), want.eval(p).unwrap());
            }
            for (got, want) in integrand(&d, Kind::Third).iter().zip(&want_third) {
                assert_eq!(got.eval(p).unwrap(), want.eval(p).unwrap());
            }
        }
    }

    #[test]
    fn scherk_integrand_at_zero() {
        let d = scherk(true);
        let v = eval_triple(&integrand(&d, Kind::First), ParaComplex::ZERO).unwrap();
        assert_eq!(v.0, [pc(1.0, 0.0), pc(0.0, -1.0), pc(0.0, 0.0)]);
    }

    #[test]
    fn stored_forms_match_raw_integrands() {
        for d in [scherk(true), scherk(false), catenoid(true), catenoid(false)] {
            for kind in [Kind::First, Kind::Third] {
                let (raw, form) = (integrand(&d, kind), d.integrand_form(kind));
                for p in d.region.samples(15) {
                    let (a, b) = (eval_triple(&raw, p).unwrap(), eval_triple(&form, p).unwrap());
                    assert!((a - b).0.iter().all(|w| w.euclid() <= 1e-9 * (1.0 + b.0[0].euclid())), "{} at {p}", d.name);
                }
            }
        }
    }

    #[test]
    fn enneper_immersion_examples() {
        let d = enneper();
        let f4 = SurfacePatch::new(d.clone(), Formula::F4);
        assert_eq!(f4.mode, EvalMode::ClosedForm);
        assert_point(f4.evaluate(pc(1.0, 1.0)).unwrap(), -7.0 / 3.0, 2.0, 1.0 / 3.0, 1e-14);
        let f3 = SurfacePatch::new(d.clone(), Formula::F3);
        assert_point(f3.evaluate(pc(1.0, 0.0)).unwrap(), -4.0 / 3.0, 0.0, -2.0 / 3.0, 1e-14);
        for f in Formula::ALL {
            let p = SurfacePatch::new(d.clone(), f);
            assert_eq!(p.evaluate(d.base).unwrap(), Point3::ORIGIN);
        }
        let numeric = SurfacePatch::new(d, Formula::F4).with_mode(EvalMode::Numeric).unwrap();
        assert_point(numeric.evaluate(pc(1.0, 1.0)).unwrap(), -7.0 / 3.0, 2.0, 1.0 / 3.0, 1e-12);
    }

    #[test]
    fn modes_agree() {
        for (d, f) in [
            (enneper(), Formula::F1),
            (scherk(true), Formula::F2),
            (scherk(false), Formula::F3),
            (catenoid(true), Formula::F1),
            (catenoid(false), Formula::F2),
        ] {
            let closed = SurfacePatch::new(d.clone(), f);
            assert!(closed.has_closed_form(), "{}", d.name);
            let numeric = closed.clone().with_mode(EvalMode::Numeric).unwrap();
            // stay inside the base point's connected component
            let near: Vec<_> = d
                .region
                .samples(12)
                .into_iter()
                .filter(|z| numeric.evaluate(*z).is_ok())
                .collect();
            assert!(!near.is_empty(), "{}", d.name);
            for z in near {
                let (a, b) = (closed.evaluate(z).unwrap(), numeric.evaluate(z).unwrap());
                assert!((a - b).max_abs() <= 1e-7, "{} {f} at {z}: {a} vs {b}", d.name);
            }
        }
    }

    #[test]
    fn dual_transform_examples() {
        let d = enneper();
        let t = dual_transform(&d);
        let p = pc(2.0, 0.0);
        assert_relative_eq!(t.g.eval(p).unwrap().re, 1.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(t.omega.eval(p).unwrap().re, 4.5, epsilon = 1e-15);
        let a = eval_triple(&integrand(&t, Kind::First), p).unwrap();
        let b = eval_triple(&integrand(&d, Kind::Third), p).unwrap();
        assert!((a - b).0.iter().all(|w| w.euclid() < 1e-12));

        let s = dual_transform(&scherk(true));
        assert_relative_eq!(s.omega.eval(ParaComplex::ZERO).unwrap().re, -0.5, epsilon = 1e-15);
        // g = −z has g + 1 null on the lines through z = 1
        assert!(!s.region.contains(pc(1.2, 0.2)));
    }

    #[test]
    fn conformal_factor_examples() {
        let d = enneper();
        assert_eq!(conformal_factor(&d, Formula::F1, ParaComplex::ZERO).unwrap(), -1.0);
        assert_eq!(conformal_factor(&d, Formula::F2, ParaComplex::ZERO).unwrap(), 1.0);
        let on_locus = pc(2f64.sqrt(), 1.0);
        assert!(conformal_factor(&d, Formula::F1, on_locus).unwrap().abs() < 1e-14);
        assert_eq!(conformal_factor(&d, Formula::F3, ParaComplex::ONE).unwrap(), -4.0);
    }

    #[test]
    fn null_form_examples() {
        let d = enneper();
        assert_eq!(null_form_immersion(&d, Formula::F1, 0.0, 0.0).unwrap(), Point3::ORIGIN);
        for f in Formula::ALL {
            let p = SurfacePatch::new(d.clone(), f);
            for (x, y) in [(0.3, -0.7), (-1.0, 0.9), (0.8, 0.8)] {
                let a = null_form_immersion(&d, f, x, y).unwrap();
                let b = p.evaluate(null_input_to_z(x, y)).unwrap();
                assert!((a - b).max_abs() < 1e-10, "{f} at ({x}, {y}): {a} vs {b}");
            }
        }
    }

    #[test]
    fn fundamental_form_examples() {
        let p = SurfacePatch::new(enneper(), Formula::F1);
        let ff = p.first_fundamental_form_fd(ParaComplex::ZERO, 1e-4).unwrap();
        assert!((ff.e + 1.0).abs() < 1e-7 && ff.f.abs() < 1e-7 && (ff.g - 1.0).abs() < 1e-7);

        let p = SurfacePatch::new(plane(), Formula::F1);
        let ff = p.first_fundamental_form_fd(pc(0.4, -1.1), 1e-3).unwrap();
        assert!((ff.e + 1.0).abs() < 1e-10 && ff.f.abs() < 1e-10 && (ff.g - 1.0).abs() < 1e-10);

        let p = SurfacePatch::new(enneper(), Formula::F1);
        let ff = p.first_fundamental_form_fd(pc(2f64.sqrt(), 1.0), 1e-4).unwrap();
        assert!(ff.det().abs() < 1e-6);
    }

    #[test]
    fn enneper_is_zero_mean_curvature() {
        for f in Formula::ALL {
            let p = SurfacePatch::new(enneper(), f);
            for z in Rect::square(1.5).cell_centers(7) {
                if p.conformal_factor(z).unwrap().abs() < 0.1 {
                    continue;
                }
                if let Some(h) = p.mean_curvature_fd(z, 1e-3).unwrap() {
                    assert!(h.abs() <= 1e-4, "{f} at {z}: H = {h}");
                }
            }
        }
    }
}
