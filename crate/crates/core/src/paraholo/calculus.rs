//! Para-holomorphic calculus on expressions: Cauchy–Riemann residuals,
//! null splitting, line integrals of the closed form `φ dz`, and a small
//! table of closed-form antiderivatives.

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZmcError};
use crate::paracomplex::{NullPair, ParaComplex};
use crate::paraholo::expr::ParaExpr;
use crate::paraholo::region::{Rect, RegionSpec};
use crate::quadrature::{QuadValue, Quadrature, Triple};

/// Central-difference partials `(X_u, Y_u, X_v, Y_v)` of `f = X + jY`.
fn partials<F>(f: &F, z: ParaComplex, h: f64) -> Result<[f64; 4]>
where
    F: Fn(ParaComplex) -> Result<ParaComplex>,
{
    let at = |w: ParaComplex| {
        f(w).map_err(|e| ZmcError::DomainViolation(format!("stencil point {w} left the domain: {e}")))
    };
    let du = at(z + ParaComplex::real(h))? - at(z - ParaComplex::real(h))?;
    let dv = at(z + ParaComplex::new(0.0, h))? - at(z - ParaComplex::new(0.0, h))?;
    let s = 0.5 / h;
    Ok([du.re * s, du.im * s, dv.re * s, dv.im * s])
}

/// `max(|X_u − Y_v|, |X_v − Y_u|)` for an arbitrary map, by central differences.
pub fn cr_residual_fn<F>(f: F, z: ParaComplex, h: f64) -> Result<f64>
where
    F: Fn(ParaComplex) -> Result<ParaComplex>,
{
    let [xu, yu, xv, yv] = partials(&f, z, h)?;
    Ok((xu - yv).abs().max((xv - yu).abs()))
}

pub fn cr_residual(e: &ParaExpr, z: ParaComplex, h: f64) -> Result<f64> {
    cr_residual_fn(|w| e.eval(w), z, h)
}

/// Mismatch between the symbolic derivative and `X_u + jY_u`, normalised as
/// `|φ'_sym − φ'_fd| / (1 + |φ'_sym|)`.
pub fn deriv_mismatch(e: &ParaExpr, z: ParaComplex, h: f64) -> Result<f64> {
    let [xu, yu, _, _] = partials(&|w| e.eval(w), z, h)?;
    let sym = e.deriv().eval(z)?;
    let fd = ParaComplex::new(xu, yu);
    Ok((sym - fd).euclid() / (1.0 + sym.euclid()))
}

/// A para-holomorphic expression split into its two null components
/// `f₁(u+v)` and `f₂(u−v)` on a rectangle, so that
/// `e(z) = ½(f₁+f₂) + j·½(f₁−f₂)`. The constants are fixed by the value at the
/// rectangle centre (`f₁(c) = re + im`, `f₂(c) = re − im`).
/// `(coordinate, value)` pairs of one null component.
pub type Samples = Vec<(f64, f64)>;

#[derive(Debug, Clone)]
pub struct NullSplit {
    expr: ParaExpr,
    pub rect: Rect,
    pub center: NullPair,
    pub center_value: ParaComplex,
}

pub fn null_split(e: &ParaExpr, region: &RegionSpec) -> Result<NullSplit> {
    let rect = region.rect;
    let c = rect.center();
    let center_value = e
        .eval(c)
        .map_err(|err| ZmcError::DomainViolation(format!("rectangle centre {c} not in domain: {err}")))?;
    Ok(NullSplit {
        expr: e.clone(),
        rect,
        center: c.to_null(),
        center_value,
    })
}

impl NullSplit {
    /// `f₁` at null coordinate `s = u + v`.
    pub fn f1(&self, s: f64) -> Result<f64> {
        let z = NullPair::new(s, self.center.minus).to_para();
        Ok(self.expr.eval(z)?.to_null().plus)
    }

    /// `f₂` at null coordinate `d = u − v`.
    pub fn f2(&self, d: f64) -> Result<f64> {
        let z = NullPair::new(self.center.plus, d).to_para();
        Ok(self.expr.eval(z)?.to_null().minus)
    }

    pub fn reconstruct(&self, z: ParaComplex) -> Result<ParaComplex> {
        let p = z.to_null();
        Ok(NullPair::new(self.f1(p.plus)?, self.f2(p.minus)?).to_para())
    }

    /// Range of `u + v` and of `u − v` over the rectangle.
    pub fn ranges(&self) -> ((f64, f64), (f64, f64)) {
        let r = self.rect;
        (
            (r.u_min + r.v_min, r.u_max + r.v_max),
            (r.u_min - r.v_max, r.u_max - r.v_min),
        )
    }

    /// `n` evenly spaced samples of each component over its range.
    pub fn sample(&self, n: usize) -> Result<(Samples, Samples)> {
        let ((p0, p1), (m0, m1)) = self.ranges();
        let at = |a: f64, b: f64, k: usize| a + (b - a) * k as f64 / (n.max(2) - 1) as f64;
        let f1 = (0..n)
            .map(|k| {
                let s = at(p0, p1, k);
                self.f1(s).map(|v| (s, v))
            })
            .collect::<Result<_>>()?;
        let f2 = (0..n)
            .map(|k| {
                let d = at(m0, m1, k);
                self.f2(d).map(|v| (d, v))
            })
            .collect::<Result<_>>()?;
        Ok((f1, f2))
    }
}

/// Values that can be multiplied by a para-complex `dz`.
pub trait ParaScalable: QuadValue {
    fn scale(self, c: ParaComplex) -> Self;
}

impl ParaScalable for ParaComplex {
    fn scale(self, c: ParaComplex) -> Self {
        self * c
    }
}

impl ParaScalable for Triple {
    fn scale(self, c: ParaComplex) -> Self {
        Triple([self.0[0] * c, self.0[1] * c, self.0[2] * c])
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polyline(pub Vec<ParaComplex>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathKind {
    /// Single straight segment.
    Straight,
    /// Along `u` first, then along `v`.
    AxisL,
    /// Along the `ε₁` light-like direction first, then `ε₂`.
    NullL,
}

impl Polyline {
    pub fn new(points: Vec<ParaComplex>) -> Self {
        Polyline(points)
    }

    pub fn build(kind: PathKind, z0: ParaComplex, z1: ParaComplex) -> Self {
        match kind {
            PathKind::Straight => Polyline(vec![z0, z1]),
            PathKind::AxisL => Polyline(vec![z0, ParaComplex::new(z1.re, z0.im), z1]),
            PathKind::NullL => {
                let (a, b) = (z0.to_null(), z1.to_null());
                Polyline(vec![z0, NullPair::new(b.plus, a.minus).to_para(), z1])
            }
        }
    }

    pub fn start(&self) -> ParaComplex {
        self.0[0]
    }

    pub fn end(&self) -> ParaComplex {
        *self.0.last().expect("non-empty polyline")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct LineIntegrator {
    pub quad: Quadrature,
    /// Allowed disagreement between two independent paths (relative to `max(1, |I|)`).
    pub path_tol: f64,
}

impl Default for LineIntegrator {
    fn default() -> Self {
        LineIntegrator {
            quad: Quadrature::default(),
            path_tol: 1e-8,
        }
    }
}

impl LineIntegrator {
    /// `∫ φ dz` along a polyline, where `φ dz = (X du + Y dv) + j(Y du + X dv)`.
    pub fn along<T, F>(&self, f: &F, path: &Polyline, region: Option<&RegionSpec>) -> Result<T>
    where
        T: ParaScalable,
        F: Fn(ParaComplex) -> Result<T>,
    {
        let mut total = T::zero();
        for seg in path.0.windows(2) {
            let (a, b) = (seg[0], seg[1]);
            let dz = b - a;
            if dz == ParaComplex::ZERO {
                continue;
            }
            let g = |t: f64| -> Result<T> {
                let z = a + dz * t;
                if let Some(r) = region {
                    if !r.contains(z) {
                        return Err(ZmcError::DomainViolation(format!(
                            "integration path leaves region `{}` at {z}",
                            r.name
                        )));
                    }
                }
                Ok(f(z)?.scale(dz))
            };
            total = total + self.quad.integrate(g, 0.0, 1.0)?;
        }
        Ok(total)
    }

    /// Integrates from `z0` to `z1` along the straight segment and along an
    /// L-shaped path, and fails with [`ZmcError::PathDependent`] if they differ.
    pub fn between<T, F>(&self, f: &F, z0: ParaComplex, z1: ParaComplex, region: Option<&RegionSpec>) -> Result<T>
    where
        T: ParaScalable,
        F: Fn(ParaComplex) -> Result<T>,
    {
        let straight = self.along(f, &Polyline::build(PathKind::Straight, z0, z1), region)?;
        let corner = ParaComplex::new(z1.re, z0.im);
        let second = match region {
            Some(r) if !r.contains(corner) => PathKind::NullL,
            _ => PathKind::AxisL,
        };
        let other = self.along(f, &Polyline::build(second, z0, z1), region)?;
        let gap = (straight - other).magnitude();
        if gap > self.path_tol * straight.magnitude().max(1.0) {
            return Err(ZmcError::PathDependent { discrepancy: gap });
        }
        Ok(straight)
    }
}

pub fn line_integral(e: &ParaExpr, path: &Polyline) -> Result<ParaComplex> {
    LineIntegrator::default().along(&|z| e.eval(z), path, None)
}

/// Two-path checked integral of `e` from `z0` to `z1`.
pub fn integrate(e: &ParaExpr, z0: ParaComplex, z1: ParaComplex, region: Option<&RegionSpec>) -> Result<ParaComplex> {
    LineIntegrator::default().between(&|z| e.eval(z), z0, z1, region)
}

fn const_value(e: &ParaExpr) -> Option<ParaComplex> {
    if e.contains_var() {
        return None;
    }
    e.eval(ParaComplex::ZERO).ok()
}

/// `z ± k` with constant `k`.
fn is_linear_monic(e: &ParaExpr) -> bool {
    match e {
        ParaExpr::Var => true,
        ParaExpr::Add(a, b) => {
            (**a == ParaExpr::Var && const_value(b).is_some())
                || (**b == ParaExpr::Var && const_value(a).is_some())
        }
        ParaExpr::Sub(a, b) => **a == ParaExpr::Var && const_value(b).is_some(),
        _ => false,
    }
}

/// `z² ± k` with constant `k`; returns `k`'s sign-carrying value when matched.
fn quadratic_shift(e: &ParaExpr) -> Option<ParaComplex> {
    let is_sq = |x: &ParaExpr| matches!(x, ParaExpr::Pow(b, 2) if **b == ParaExpr::Var);
    match e {
        ParaExpr::Add(a, b) if is_sq(a) => const_value(b),
        ParaExpr::Add(a, b) if is_sq(b) => const_value(a),
        ParaExpr::Sub(a, b) if is_sq(a) => const_value(b).map(|k| -k),
        _ => None,
    }
}

/// Coefficient `c` when `e` is `c·z`.
fn linear_coefficient(e: &ParaExpr) -> Option<ParaComplex> {
    match e {
        ParaExpr::Var => Some(ParaComplex::ONE),
        ParaExpr::Mul(a, b) if **b == ParaExpr::Var => const_value(a),
        ParaExpr::Mul(a, b) if **a == ParaExpr::Var => const_value(b),
        _ => None,
    }
}

/// Closed-form antiderivative for sums of table entries: polynomials,
/// `c/(z ± k)`, `c·z/(z² ± k)` and `c/(z² + 1)`. Returns `None` when the
/// integrand is not in the table.
pub fn antiderivative(e: &ParaExpr) -> Option<ParaExpr> {
    use ParaExpr as E;
    if let Some(c) = const_value(e) {
        return Some(E::Const(c) * E::z());
    }
    match e {
        E::Var => Some(0.5 * E::z().powi(2)),
        E::Pow(b, n) if **b == E::Var => {
            if *n == -1 {
                Some(E::z().log())
            } else {
                let m = n + 1;
                Some((1.0 / m as f64) * E::z().powi(m))
            }
        }
        E::Add(a, b) => Some(antiderivative(a)? + antiderivative(b)?),
        E::Sub(a, b) => Some(antiderivative(a)? - antiderivative(b)?),
        E::Neg(a) => Some(-antiderivative(a)?),
        E::Mul(a, b) => {
            if let Some(c) = const_value(a) {
                Some(E::Const(c) * antiderivative(b)?)
            } else if let Some(c) = const_value(b) {
                Some(E::Const(c) * antiderivative(a)?)
            } else {
                None
            }
        }
        E::Div(a, b) => {
            if let Some(c) = const_value(b) {
                return Some(antiderivative(a)? / E::Const(c));
            }
            if let Some(c) = const_value(a) {
                if is_linear_monic(b) {
                    return Some(E::Const(c) * (**b).clone().log());
                }
                if quadratic_shift(b) == Some(ParaComplex::ONE) {
                    return Some(E::Const(c) * E::z().arctan());
                }
                return None;
            }
            let k = linear_coefficient(a)?;
            quadratic_shift(b)?;
            Some(E::Const(k * 0.5) * (**b).clone().log())
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paraholo::region::NormSign;
    use approx::assert_relative_eq;

    fn pc(re: f64, im: f64) -> ParaComplex {
        ParaComplex::new(re, im)
    }

    #[test]
    fn cr_residual_examples() {
        let z = ParaExpr::z;
        assert!(cr_residual(&z().powi(2), pc(0.7, -1.3), 1e-5).unwrap() <= 1e-9);
        assert!(cr_residual(&z().exp(), pc(1.0, 2.0), 1e-5).unwrap() <= 1e-7);
        let conj_like = cr_residual_fn(|w| Ok(w.conj()), pc(0.2, 0.1), 1e-5).unwrap();
        assert_relative_eq!(conj_like, 2.0, epsilon = 1e-8);
    }

    #[test]
    fn deriv_mismatch_small() {
        let e = ParaExpr::z().arctan() * ParaExpr::z().sinh();
        assert!(deriv_mismatch(&e, pc(0.3, 0.8), 1e-5).unwrap() < 1e-8);
    }

    #[test]
    fn stencil_outside_domain() {
        let e = 1.0 / (ParaExpr::z() - 1.0);
        // z + j·h lands exactly on the light-like line through 1
        let r = cr_residual(&e, pc(1.5, 0.25), 0.25);
        assert!(matches!(r, Err(ZmcError::DomainViolation(_))));
    }

    #[test]
    fn null_split_examples() {
        let region = RegionSpec::rect("box", Rect::square(1.0));
        let id = null_split(&ParaExpr::z(), &region).unwrap();
        assert_eq!(id.f1(0.7).unwrap(), 0.7);
        assert_eq!(id.f2(-0.2).unwrap(), -0.2);

        let sq = null_split(&ParaExpr::z().powi(2), &region).unwrap();
        assert_relative_eq!(sq.f1(3.0).unwrap(), 9.0, epsilon = 1e-12);

        let ex = null_split(&ParaExpr::z().exp(), &region).unwrap();
        for s in [-1.5, 0.0, 0.4, 2.0] {
            assert_relative_eq!(ex.f1(s).unwrap(), f64::exp(s), max_relative = 1e-14);
            assert_relative_eq!(ex.f2(s).unwrap(), f64::exp(s), max_relative = 1e-14);
        }
    }

    #[test]
    fn null_split_reconstructs() {
        let e = (ParaExpr::z().powi(2) + 1.0).arctan() * ParaExpr::z().cosh();
        let region = RegionSpec::rect("box", Rect::new(-0.5, 1.5, -1.0, 0.3));
        let s = null_split(&e, &region).unwrap();
        let c = region.rect.center();
        let v = e.eval(c).unwrap();
        assert_relative_eq!(s.f1(c.re + c.im).unwrap(), v.re + v.im, epsilon = 1e-14);
        assert_relative_eq!(s.f2(c.re - c.im).unwrap(), v.re - v.im, epsilon = 1e-14);
        for z in region.rect.cell_centers(12) {
            let (a, b) = (s.reconstruct(z).unwrap(), e.eval(z).unwrap());
            assert!((a - b).euclid() <= 1e-10, "{z}");
        }
        let (f1, f2) = s.sample(5).unwrap();
        assert_eq!((f1.len(), f2.len()), (5, 5));
    }

    #[test]
    fn line_integral_examples() {
        let z = ParaExpr::z;
        let z1 = pc(0.6, -1.1);
        let v = line_integral(&ParaExpr::real(1.0), &Polyline::new(vec![ParaComplex::ZERO, z1])).unwrap();
        assert_relative_eq!(v.re, z1.re, epsilon = 1e-14);
        assert_relative_eq!(v.im, z1.im, epsilon = 1e-14);

        let v = integrate(&(2.0 * z()), ParaComplex::ZERO, pc(1.0, 1.0), None).unwrap();
        assert_relative_eq!(v.re, 2.0, epsilon = 1e-13);
        assert_relative_eq!(v.im, 2.0, epsilon = 1e-13);

        let v = integrate(&(1.0 / (z().powi(2) + 1.0)), ParaComplex::ZERO, ParaComplex::ONE, None).unwrap();
        assert_relative_eq!(v.re, std::f64::consts::FRAC_PI_4, epsilon = 1e-12);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn path_dependence_detected_across_null_locus() {
        // 1/(z-1) integrated around the excluded lines through z=1: the two
        // paths cross the singular set differently.
        let e = 1.0 / (ParaExpr::z() - 1.0);
        let region = RegionSpec::rect("box", Rect::square(3.0))
            .with_constraint(ParaExpr::z() - 1.0, NormSign::Nonzero)
            .with_excluded(&[1.0], &[1.0], 0.01);
        let r = integrate(&e, pc(0.0, 0.0), pc(2.5, 0.0), Some(&region));
        assert!(matches!(r, Err(ZmcError::DomainViolation(_))));
    }

    #[test]
    fn antiderivative_table() {
        let z = ParaExpr::z;
        let cases = [
            z().powi(3) - 2.0 * z() + 5.0,
            1.0 / (z() + 1.0) - 1.0 / (z() - 1.0),
            2.0 * z() / (z().powi(2) + 1.0) - 2.0 * z() / (z().powi(2) - 1.0),
            ParaExpr::constant(pc(0.0, -2.0)) / (z().powi(2) + 1.0),
            z().powi(-2) + 1.0,
            -2.0 / z(),
            (ParaExpr::real(-1.0) - z().powi(2)) * 1.0,
        ];
        for e in &cases {
            let a = antiderivative(e).unwrap_or_else(|| panic!("not in table: {e}"));
            for p in [pc(2.3, 0.4), pc(-0.3, 0.1), pc(0.2, 1.7)] {
                let (d, want) = (a.deriv().eval(p).unwrap(), e.eval(p).unwrap());
                assert!((d - want).euclid() < 1e-12 * (1.0 + want.euclid()), "{e} at {p}");
            }
        }
        assert!(antiderivative(&z().exp()).is_none());
        assert!(antiderivative(&(1.0 / (z().powi(4) - 1.0))).is_none());
    }
}
