//! Named surfaces: Weierstrass patches, implicit equations and entire graphs.

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Result, ZmcError};
use crate::minkowski::{from_lightlike, Isometry, LightlikeCoords, Point3};
use crate::paracomplex::{ParaComplex, PolarBranch, PolarForm};
use crate::weierstrass::{data, Formula, Placement, SurfacePatch, WeierstrassData};

pub use crate::minkowski::{from_lightlike as lightlike_inverse, lightlike_coords};

/// Implicit zero sets `Ψ(t, x, y) = 0`. Scherk-type sets use the squared form,
/// which is smooth across both sign components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ImplicitSurface {
    S1,
    S1p,
    S2,
    S2p,
    S3,
    S3p,
    S4,
    S4p,
    E3,
    E4,
    C1,
    C2,
    C1p,
    C2p,
    K1,
    K2,
    K3,
    K4,
}

impl ImplicitSurface {
    pub const ALL: [ImplicitSurface; 18] = {
        use ImplicitSurface::*;
        [S1, S1p, S2, S2p, S3, S3p, S4, S4p, E3, E4, C1, C2, C1p, C2p, K1, K2, K3, K4]
    };

    pub fn name(self) -> &'static str {
        use ImplicitSurface::*;
        match self {
            S1 => "S1",
            S1p => "S1p",
            S2 => "S2",
            S2p => "S2p",
            S3 => "S3",
            S3p => "S3p",
            S4 => "S4",
            S4p => "S4p",
            E3 => "E3",
            E4 => "E4",
            C1 => "C1",
            C2 => "C2",
            C1p => "C1p",
            C2p => "C2p",
            K1 => "K1",
            K2 => "K2",
            K3 => "K3",
            K4 => "K4",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let short = name
            .trim_start_matches("scherk_")
            .trim_start_matches("enneper_")
            .trim_start_matches("catenoid_")
            .trim_start_matches("kobayashi_");
        Self::ALL.into_iter().find(|s| s.name() == short)
    }

    pub fn residual(self, p: Point3) -> f64 {
        use ImplicitSurface::*;
        let Point3 { t, x, y } = p;
        let sq = |v: f64| v * v;
        match self {
            S1 => sq(t.cosh()) - (2.0 * y).exp() * sq(x.cos()),
            S1p => sq(t.sinh()) - (2.0 * y).exp() * sq(x.cos()),
            S2 => sq(y.sinh()) - sq(t.sinh()) * sq(x.sin()),
            S2p => sq(y.cosh()) - sq(t.cosh()) * sq(x.sin()),
            S3 => sq(t.cosh()) * sq(y.cos()) - sq(x.cosh()),
            S3p => sq(t.sinh()) * sq(y.cos()) - sq(x.sinh()),
            S4 => sq(t.sinh()) - (2.0 * x).exp() * sq(y.sin()),
            S4p => sq(t.cosh()) - (2.0 * x).exp() * sq(y.sin()),
            E3 => t * t - y * y - sq(sq(t + y)) / 12.0 - x * x,
            E4 => (t - y) + (t + y).powi(3) / 6.0 - x * (t + y),
            C1 => t * t - x * x - sq(y.sinh()),
            C2 => t - x * y.tanh(),
            C1p => x * x - t * t - sq(y.cosh()),
            C2p => t * y.tanh() - x,
            K1 => t.exp() * x.cosh() - y.cosh(),
            K2 => t.sin() - x.sin() * y.sin(),
            K3 => t.cos() * x.cosh() - y.cos(),
            K4 => t.sinh() + y.exp() * x.sin(),
        }
    }

    /// Smallest `|residual|` over the sign components, each in its linear
    /// (unsquared) form. Equals `|residual|` for surfaces with one component.
    pub fn component_residual(self, p: Point3) -> f64 {
        use ImplicitSurface::*;
        let Point3 { t, x, y } = p;
        let pair = |a: f64, b: f64| (a - b).abs().min((a + b).abs());
        match self {
            S1 => pair(t.cosh(), y.exp() * x.cos()),
            S1p => pair(t.sinh(), y.exp() * x.cos()),
            S2 => pair(y.sinh(), t.sinh() * x.sin()),
            S2p => pair(y.cosh(), t.cosh() * x.sin()),
            S3 => pair(t.cosh() * y.cos(), x.cosh()),
            S3p => pair(t.sinh() * y.cos(), x.sinh()),
            S4 => pair(t.sinh(), x.exp() * y.sin()),
            S4p => pair(t.cosh(), x.exp() * y.sin()),
            other => other.residual(p).abs(),
        }
    }

    pub fn formula(self) -> &'static str {
        use ImplicitSurface::*;
        match self {
            S1 => "cosh(t)^2 - exp(2*y)*cos(x)^2",
            S1p => "sinh(t)^2 - exp(2*y)*cos(x)^2",
            S2 => "sinh(y)^2 - sinh(t)^2*sin(x)^2",
            S2p => "cosh(y)^2 - cosh(t)^2*sin(x)^2",
            S3 => "cosh(t)^2*cos(y)^2 - cosh(x)^2",
            S3p => "sinh(t)^2*cos(y)^2 - sinh(x)^2",
            S4 => "sinh(t)^2 - exp(2*x)*sin(y)^2",
            S4p => "cosh(t)^2 - exp(2*x)*sin(y)^2",
            E3 => "t^2 - y^2 - (t + y)^4/12 - x^2",
            E4 => "(t - y) + (t + y)^3/6 - x*(t + y)",
            C1 => "t^2 - x^2 - sinh(y)^2",
            C2 => "t - x*tanh(y)",
            C1p => "x^2 - t^2 - cosh(y)^2",
            C2p => "t*tanh(y) - x",
            K1 => "exp(t)*cosh(x) - cosh(y)",
            K2 => "sin(t) - sin(x)*sin(y)",
            K3 => "cos(t)*cosh(x) - cos(y)",
            K4 => "sinh(t) + exp(y)*sin(x)",
        }
    }

    /// Sign components of the zero set, each as `expr = 0`.
    pub fn components(self) -> Vec<&'static str> {
        use ImplicitSurface::*;
        match self {
            S1 => vec!["cosh(t) - exp(y)*cos(x)", "cosh(t) + exp(y)*cos(x)"],
            S1p => vec!["sinh(t) - exp(y)*cos(x)", "sinh(t) + exp(y)*cos(x)"],
            S2 => vec!["sinh(y) - sinh(t)*sin(x)", "sinh(y) + sinh(t)*sin(x)"],
            S2p => vec!["cosh(y) - cosh(t)*sin(x)", "cosh(y) + cosh(t)*sin(x)"],
            S3 => vec!["cosh(t)*cos(y) - cosh(x)", "cosh(t)*cos(y) + cosh(x)"],
            S3p => vec!["sinh(t)*cos(y) - sinh(x)", "sinh(t)*cos(y) + sinh(x)"],
            S4 => vec!["sinh(t) - exp(x)*sin(y)", "sinh(t) + exp(x)*sin(y)"],
            S4p => vec!["cosh(t) - exp(x)*sin(y)", "cosh(t) + exp(x)*sin(y)"],
            other => vec![other.formula()],
        }
    }

    pub fn causal_notes(self) -> &'static str {
        use ImplicitSurface::*;
        match self {
            S1p => "entire graph of mixed type; the space-like part is connected",
            E4 => "entire graph over a light-like plane, mixed type",
            C1 | C1p | C2p => "no space-like points",
            C2 => "entire graph of mixed type over a space-like plane",
            K1 => "entire graph of mixed type",
            K2 => "triply periodic, with cone-like singular points",
            K3 => "no time-like points",
            K4 => "entire graph of mixed type, congruent to S4",
            _ => "",
        }
    }

    /// Heights `t` with `Ψ(t, x, y) = 0` above `(x, y)`, where the equation
    /// can be solved in closed form.
    pub fn solve_t(self, x: f64, y: f64) -> Vec<f64> {
        use ImplicitSurface::*;
        let pm = |v: f64| if v == 0.0 { vec![0.0] } else { vec![v, -v] };
        let acosh_pm = |c: f64| if c >= 1.0 { pm(c.acosh()) } else { vec![] };
        match self {
            S1 => acosh_pm(y.exp() * x.cos().abs()),
            S1p => pm((y.exp() * x.cos()).asinh()),
            S2 => {
                let s = x.sin();
                if s.abs() < 1e-12 {
                    vec![]
                } else {
                    pm((y.sinh() / s).asinh())
                }
            }
            S2p => {
                let s = x.sin().abs();
                if s < 1e-12 {
                    vec![]
                } else {
                    acosh_pm(y.cosh() / s)
                }
            }
            S3 => {
                let c = y.cos().abs();
                if c < 1e-12 {
                    vec![]
                } else {
                    acosh_pm(x.cosh() / c)
                }
            }
            S3p => {
                let c = y.cos();
                if c.abs() < 1e-12 {
                    vec![]
                } else {
                    pm((x.sinh() / c).asinh())
                }
            }
            S4 => pm((x.exp() * y.sin()).asinh()),
            S4p => acosh_pm(x.exp() * y.sin().abs()),
            C1 => pm((x * x + y.sinh().powi(2)).sqrt()),
            C2 => vec![x * y.tanh()],
            C1p => {
                let r = x * x - y.cosh().powi(2);
                if r >= 0.0 {
                    pm(r.sqrt())
                } else {
                    vec![]
                }
            }
            C2p => {
                let th = y.tanh();
                if th.abs() < 1e-12 {
                    vec![]
                } else {
                    vec![x / th]
                }
            }
            K1 => vec![(y.cosh() / x.cosh()).ln()],
            K2 => {
                let s = x.sin() * y.sin();
                vec![s.asin()]
            }
            K3 => {
                let c = y.cos() / x.cosh();
                pm(c.acos())
            }
            K4 => vec![(-y.exp() * x.sin()).asinh()],
            E3 | E4 => vec![],
        }
    }

    pub fn to_json(self) -> Value {
        json!({
            "name": self.name(),
            "residual": self.formula(),
            "components": self.components(),
            "causal": self.causal_notes(),
        })
    }
}

impl Serialize for ImplicitSurface {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphPlane {
    /// `(x, y) ↦ (f(x, y), x, y)`.
    Spacelike,
    /// `(x, η) ↦` the point with `t + y = η`, `t − y = f(x, η)`.
    Lightlike,
}

/// First and second partial derivatives of a graph function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Partials {
    pub fx: f64,
    pub fy: f64,
    pub fxx: f64,
    pub fxy: f64,
    pub fyy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphFn {
    /// `arcsinh(eʸ cos x)`.
    ArcsinhExpCos,
    /// `arcsinh(−eʸ sin x)`.
    ArcsinhExpSinNeg,
    /// `x tanh y`.
    XTanhY,
    /// `ζ = xη − η³/6` over the light-like plane.
    EnneperLightlike,
    /// `a x + b y + c`.
    Affine { a: f64, b: f64, c: f64 },
}

/// `w` with `w_xx = −w`, `w_yy = w`, `w_xy = w_x`, composed into `arcsinh(w)`.
fn asinh_partials(w: f64, wx: f64) -> Partials {
    let q = 1.0 + w * w;
    let rq = q.sqrt();
    let q32 = q * rq;
    let (wy, wxx, wxy, wyy) = (w, -w, wx, w);
    Partials {
        fx: wx / rq,
        fy: wy / rq,
        fxx: wxx / rq - w * wx * wx / q32,
        fxy: wxy / rq - w * wx * wy / q32,
        fyy: wyy / rq - w * wy * wy / q32,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntireGraph {
    pub name: &'static str,
    pub plane: GraphPlane,
    pub function: GraphFn,
}

impl EntireGraph {
    pub fn affine(a: f64, b: f64, c: f64) -> Self {
        EntireGraph {
            name: "affine",
            plane: GraphPlane::Spacelike,
            function: GraphFn::Affine { a, b, c },
        }
    }

    pub fn f(&self, a: f64, b: f64) -> f64 {
        match self.function {
            GraphFn::ArcsinhExpCos => (b.exp() * a.cos()).asinh(),
            GraphFn::ArcsinhExpSinNeg => (-b.exp() * a.sin()).asinh(),
            GraphFn::XTanhY => a * b.tanh(),
            GraphFn::EnneperLightlike => a * b - b.powi(3) / 6.0,
            GraphFn::Affine { a: ca, b: cb, c } => ca * a + cb * b + c,
        }
    }

    /// Closed-form partials, where registered.
    pub fn partials(&self, x: f64, y: f64) -> Option<Partials> {
        match self.function {
            GraphFn::ArcsinhExpCos => {
                let e = y.exp();
                Some(asinh_partials(e * x.cos(), -e * x.sin()))
            }
            GraphFn::ArcsinhExpSinNeg => {
                let e = y.exp();
                Some(asinh_partials(-e * x.sin(), -e * x.cos()))
            }
            GraphFn::XTanhY => {
                let th = y.tanh();
                let sech2 = 1.0 - th * th;
                Some(Partials {
                    fx: th,
                    fy: x * sech2,
                    fxx: 0.0,
                    fxy: sech2,
                    fyy: -2.0 * x * sech2 * th,
                })
            }
            GraphFn::EnneperLightlike => Some(Partials {
                fx: y,
                fy: x - 0.5 * y * y,
                fxx: 0.0,
                fxy: 1.0,
                fyy: -y,
            }),
            GraphFn::Affine { a, b, .. } => Some(Partials {
                fx: a,
                fy: b,
                fxx: 0.0,
                fxy: 0.0,
                fyy: 0.0,
            }),
        }
    }

    /// Central-difference partials with step `h`.
    pub fn partials_fd(&self, x: f64, y: f64, h: f64) -> Partials {
        let f = |a: f64, b: f64| self.f(a, b);
        let c = f(x, y);
        let (xp, xm, yp, ym) = (f(x + h, y), f(x - h, y), f(x, y + h), f(x, y - h));
        Partials {
            fx: (xp - xm) / (2.0 * h),
            fy: (yp - ym) / (2.0 * h),
            fxx: (xp - 2.0 * c + xm) / (h * h),
            fyy: (yp - 2.0 * c + ym) / (h * h),
            fxy: (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4.0 * h * h),
        }
    }

    pub fn formula(&self) -> String {
        match self.function {
            GraphFn::ArcsinhExpCos => "t = asinh(exp(y)*cos(x))".into(),
            GraphFn::ArcsinhExpSinNeg => "t = asinh(-exp(y)*sin(x))".into(),
            GraphFn::XTanhY => "t = x*tanh(y)".into(),
            GraphFn::EnneperLightlike => "t - y = x*(t + y) - (t + y)^3/6".into(),
            GraphFn::Affine { a, b, c } => format!("t = {a}*x + {b}*y + {c}"),
        }
    }
}

impl Serialize for EntireGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({ "name": self.name, "plane": self.plane, "formula": self.formula() }).serialize(s)
    }
}

/// Point of the graph over graph coordinates `(a, b)`: `(x, y)` for type S,
/// `(x, η)` for type L.
pub fn graph_eval(g: &EntireGraph, a: f64, b: f64) -> Point3 {
    let v = g.f(a, b);
    match g.plane {
        GraphPlane::Spacelike => Point3::new(v, a, b),
        GraphPlane::Lightlike => from_lightlike(LightlikeCoords { x: a, eta: b, zeta: v }),
    }
}

pub mod graphs {
    use super::*;

    pub const GRAPH_S1P: EntireGraph = EntireGraph {
        name: "graph_S1p",
        plane: GraphPlane::Spacelike,
        function: GraphFn::ArcsinhExpCos,
    };
    pub const GRAPH_E4: EntireGraph = EntireGraph {
        name: "graph_E4",
        plane: GraphPlane::Lightlike,
        function: GraphFn::EnneperLightlike,
    };
    pub const GRAPH_C2: EntireGraph = EntireGraph {
        name: "graph_C2",
        plane: GraphPlane::Spacelike,
        function: GraphFn::XTanhY,
    };
    pub const GRAPH_K4: EntireGraph = EntireGraph {
        name: "graph_K4",
        plane: GraphPlane::Spacelike,
        function: GraphFn::ArcsinhExpSinNeg,
    };
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub data: Option<WeierstrassData>,
    pub formula: Option<Formula>,
    pub placement: Placement,
    pub implicit: Option<ImplicitSurface>,
    pub graph: Option<EntireGraph>,
    pub tags: Vec<&'static str>,
    pub notes: &'static str,
}

impl CatalogEntry {
    /// The parametrized patch with its placement, when the entry has one.
    pub fn patch(&self) -> Option<SurfacePatch> {
        let data = self.data.clone()?;
        Some(SurfacePatch::new(data, self.formula?).with_placement(self.placement))
    }

    pub fn has_parametrization(&self) -> bool {
        self.data.is_some() || self.graph.is_some()
    }

    pub fn summary_json(&self) -> Value {
        json!({ "name": self.name, "tags": self.tags, "notes": self.notes })
    }

    pub fn to_json(&self) -> Value {
        let data = self.data.as_ref().map(|d| {
            json!({
                "name": d.name,
                "g": d.g.to_string(),
                "omega": d.omega.to_string(),
                "base": d.base,
                "region": d.region,
            })
        });
        json!({
            "name": self.name,
            "tags": self.tags,
            "notes": self.notes,
            "data": data,
            "formula": self.formula,
            "placement": self.placement,
            "implicit": self.implicit,
            "graph": self.graph,
        })
    }
}

impl Serialize for CatalogEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

pub const NAMES: [&str; 24] = [
    "enneper_E3",
    "enneper_E4",
    "enneper_timelike_F1",
    "enneper_timelike_F2",
    "scherk_S1",
    "scherk_S1p",
    "scherk_S2",
    "scherk_S2p",
    "scherk_S3",
    "scherk_S3p",
    "scherk_S4",
    "scherk_S4p",
    "catenoid_C1",
    "catenoid_C2",
    "catenoid_C1p",
    "catenoid_C2p",
    "kobayashi_K1",
    "kobayashi_K2",
    "kobayashi_K3",
    "kobayashi_K4",
    "graph_S1p",
    "graph_E4",
    "graph_C2",
    "graph_K4",
];

#[allow(clippy::too_many_arguments)]
fn patch_entry(
    name: &'static str,
    data: WeierstrassData,
    formula: Formula,
    scale: f64,
    isometry: Isometry,
    implicit: Option<ImplicitSurface>,
    tags: Vec<&'static str>,
    notes: &'static str,
) -> CatalogEntry {
    // Place the patch by the closed-form antiderivative itself rather than
    // the base-point translate, so the point set lands on the implicit surface.
    let offset = SurfacePatch::new(data.clone(), formula)
        .primitive_offset()
        .unwrap_or(Point3::ORIGIN);
    CatalogEntry {
        name,
        data: Some(data),
        formula: Some(formula),
        placement: Placement {
            scale,
            offset,
            isometry,
        },
        implicit,
        graph: None,
        tags,
        notes,
    }
}

fn implicit_entry(name: &'static str, s: ImplicitSurface, notes: &'static str) -> CatalogEntry {
    CatalogEntry {
        name,
        data: None,
        formula: None,
        placement: Placement::default(),
        implicit: Some(s),
        graph: None,
        tags: vec!["implicit", "kobayashi"],
        notes,
    }
}

fn graph_entry(g: EntireGraph, s: ImplicitSurface, notes: &'static str) -> CatalogEntry {
    let plane = match g.plane {
        GraphPlane::Spacelike => "graph-S",
        GraphPlane::Lightlike => "graph-L",
    };
    CatalogEntry {
        name: g.name,
        data: None,
        formula: None,
        placement: Placement::default(),
        implicit: Some(s),
        graph: Some(g),
        tags: vec!["graph", plane, "entire", "mixed-type"],
        notes,
    }
}

pub fn get(name: &str) -> Result<CatalogEntry> {
    use Formula::*;
    let name: &'static str = NAMES
        .iter()
        .copied()
        .find(|n| *n == name)
        .ok_or_else(|| ZmcError::UnknownEntry(name.to_string()))?;
    use ImplicitSurface as I;
    let id = Isometry::IDENTITY;
    let scherk = |name, plus: bool, f: Formula, s: I, notes| {
        let region = if plus { "D+" } else { "D-" };
        patch_entry(name, data::scherk(plus), f, 2.0, id, Some(s), vec!["scherk", "weierstrass", region], notes)
    };
    let catenoid = |name, positive: bool, f: Formula, s: I, iso, notes| {
        let region = if positive { "N2>0" } else { "N2<0" };
        patch_entry(name, data::catenoid(positive), f, 0.5, iso, Some(s), vec!["catenoid", "weierstrass", region], notes)
    };
    let entry = match name {
        "enneper_E3" => patch_entry(
            name,
            data::enneper(),
            F3,
            1.0,
            id,
            Some(I::E3),
            vec!["enneper", "weierstrass"],
            "Enneper data g = z, omega = 1 through the third formula",
        ),
        "enneper_E4" => patch_entry(
            name,
            data::enneper(),
            F4,
            1.0,
            id,
            Some(I::E4),
            vec!["enneper", "weierstrass", "mixed-type"],
            "Enneper data through the fourth formula; an entire graph over a light-like plane",
        ),
        "enneper_timelike_F1" => patch_entry(
            name,
            data::enneper(),
            F1,
            1.0,
            id,
            None,
            vec!["enneper", "weierstrass", "timelike"],
            "time-like Enneper surface; singular along u^2 - v^2 = 1",
        ),
        "enneper_timelike_F2" => patch_entry(
            name,
            data::enneper(),
            F2,
            1.0,
            id,
            None,
            vec!["enneper", "weierstrass", "timelike"],
            "conjugate of the time-like Enneper surface; singular along u^2 - v^2 = 1",
        ),
        "scherk_S1" => scherk(name, true, F1, I::S1, "Scherk data g = -z, omega = 1/(z^4 - 1), first formula on D+"),
        "scherk_S1p" => scherk(name, false, F1, I::S1p, "first formula on D-; contains the entire graph sinh t = e^y cos x"),
        "scherk_S2" => scherk(name, true, F2, I::S2, "second formula on D+"),
        "scherk_S2p" => scherk(name, false, F2, I::S2p, "second formula on D-"),
        "scherk_S3" => scherk(name, true, F3, I::S3, "third formula on D+; congruent to S2p"),
        "scherk_S3p" => scherk(name, false, F3, I::S3p, "third formula on D-; congruent to S2"),
        "scherk_S4" => scherk(name, true, F4, I::S4, "fourth formula on D+; congruent to S1p"),
        "scherk_S4p" => scherk(name, false, F4, I::S4p, "fourth formula on D-; congruent to S1"),
        "catenoid_C1" => catenoid(name, true, F1, I::C1, id, "catenoid data g = z, omega = -1/z^2, first formula, N2(z) > 0"),
        "catenoid_C2" => catenoid(
            name,
            true,
            F2,
            I::C2,
            Isometry::REFLECT_Y,
            "second formula, N2(z) > 0; reflected in y to match t = x tanh y",
        ),
        "catenoid_C1p" => catenoid(name, false, F1, I::C1p, id, "first formula, N2(z) < 0"),
        "catenoid_C2p" => catenoid(
            name,
            false,
            F2,
            I::C2p,
            Isometry::REFLECT_Y,
            "second formula, N2(z) < 0; reflected in y to match t tanh y = x",
        ),
        "kobayashi_K1" => implicit_entry(name, I::K1, "space-like maximal surface from the Scherk data as holomorphic data"),
        "kobayashi_K2" => implicit_entry(name, I::K2, "conjugate of K1"),
        "kobayashi_K3" => implicit_entry(name, I::K3, "second maximal-surface formula"),
        "kobayashi_K4" => implicit_entry(name, I::K4, "conjugate of K3; congruent to S4"),
        "graph_S1p" => graph_entry(graphs::GRAPH_S1P, I::S1p, "t = arcsinh(e^y cos x); mixed type, not a Kobayashi surface"),
        "graph_E4" => graph_entry(graphs::GRAPH_E4, I::E4, "zeta = x eta - eta^3/6 over the light-like plane"),
        "graph_C2" => graph_entry(graphs::GRAPH_C2, I::C2, "t = x tanh y"),
        "graph_K4" => graph_entry(graphs::GRAPH_K4, I::K4, "t = arcsinh(-e^y sin x)"),
        other => unreachable!("`{other}` is listed in NAMES"),
    };
    Ok(entry)
}

pub fn list() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| get(n).expect("built-in entry")).collect()
}

pub fn list_json() -> Value {
    Value::Array(list().iter().map(CatalogEntry::summary_json).collect())
}

/// Para-complex parameter from catenoid polar coordinates on the component
/// holding the patch base point (`u > 0` for `N² > 0`, `v > 0` for `N² < 0`).
pub fn catenoid_polar_parameter(positive: bool, s: f64, t: f64) -> ParaComplex {
    PolarForm {
        sign: 1.0,
        s,
        t,
        branch: if positive { PolarBranch::NormPositive } else { PolarBranch::NormNegative },
    }
    .compose()
}
