//! Para-complex (split-complex) numbers `u + jv` with `j² = 1`.
//!
//! The ring has zero divisors along the two light-like lines `u = ±v`. Every
//! elementary function here is defined through the null decomposition
//! `z = ε₁(u+v) + ε₂(u−v)` with `ε₁ = (1+j)/2`, `ε₂ = (1−j)/2`: a real function
//! `f` lifts to `ε₁ f(u+v) + ε₂ f(u−v)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ZmcError};

/// Null-cone detection threshold, relative to `re² + im²`.
pub const TAU_INV: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ParaComplex {
    pub re: f64,
    pub im: f64,
}

impl ParaComplex {
    pub const ZERO: ParaComplex = ParaComplex { re: 0.0, im: 0.0 };
    pub const ONE: ParaComplex = ParaComplex { re: 1.0, im: 0.0 };
    /// The hyperbolic unit.
    pub const J: ParaComplex = ParaComplex { re: 0.0, im: 1.0 };

    #[inline]
    pub const fn new(re: f64, im: f64) -> Self {
        ParaComplex { re, im }
    }

    #[inline]
    pub const fn real(re: f64) -> Self {
        ParaComplex { re, im: 0.0 }
    }

    /// `N²(z) = z·z̄ = u² − v²`.
    #[inline]
    pub fn norm2(self) -> f64 {
        // (u+v)(u−v) keeps full relative accuracy near the cone.
        (self.re + self.im) * (self.re - self.im)
    }

    #[inline]
    pub fn conj(self) -> Self {
        ParaComplex::new(self.re, -self.im)
    }

    /// `|z| = √|N²(z)|`.
    #[inline]
    pub fn modulus(self) -> f64 {
        self.norm2().abs().sqrt()
    }

    /// Euclidean length of `(u, v)`; used only for tolerances.
    #[inline]
    pub fn euclid(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// True when `z` lies within `tol` (relative to `u² + v²`) of the null cone.
    pub fn is_null_within(self, tol: f64) -> bool {
        let scale = self.re * self.re + self.im * self.im;
        scale == 0.0 || self.norm2().abs() <= tol * scale
    }

    #[inline]
    pub fn is_null(self) -> bool {
        self.is_null_within(TAU_INV)
    }

    pub fn checked_recip(self) -> Result<Self> {
        if self.is_null() {
            return Err(ZmcError::NonInvertible { divisor: self });
        }
        let n = self.norm2();
        Ok(ParaComplex::new(self.re / n, -self.im / n))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.is_null() {
            return Err(ZmcError::NonInvertible { divisor: rhs });
        }
        let n = rhs.norm2();
        let p = self * rhs.conj();
        Ok(ParaComplex::new(p.re / n, p.im / n))
    }

    /// Integer power. Negative exponents require an invertible base.
    pub fn checked_powi(self, n: i32) -> Result<Self> {
        // Componentwise in null coordinates, so this is exact up to rounding.
        let p = self.to_null();
        if n < 0 && self.is_null() {
            return Err(ZmcError::NonInvertible { divisor: self });
        }
        Ok(NullPair::new(p.plus.powi(n), p.minus.powi(n)).to_para())
    }

    #[inline]
    pub fn to_null(self) -> NullPair {
        NullPair {
            plus: self.re + self.im,
            minus: self.re - self.im,
        }
    }

    #[inline]
    pub fn from_null(p: NullPair) -> Self {
        p.to_para()
    }

    /// Applies a real function to both null components.
    #[inline]
    pub fn map_null(self, f: impl Fn(f64) -> f64) -> Self {
        let p = self.to_null();
        NullPair::new(f(p.plus), f(p.minus)).to_para()
    }

    pub fn exp(self) -> Self {
        let e = self.re.exp();
        ParaComplex::new(e * self.im.cosh(), e * self.im.sinh())
    }

    /// `log z = log√|N²(z)| + j·log√(|u+v|/|u−v|)`, defined off the null cone.
    pub fn log(self) -> Result<Self> {
        if self.is_null() {
            return Err(ZmcError::NullConeArgument { op: "log", arg: self });
        }
        Ok(self.map_null(|x| x.abs().ln()))
    }

    pub fn arctan(self) -> Self {
        self.map_null(f64::atan)
    }

    pub fn sin(self) -> Self {
        self.map_null(f64::sin)
    }

    pub fn cos(self) -> Self {
        self.map_null(f64::cos)
    }

    pub fn sinh(self) -> Self {
        self.map_null(f64::sinh)
    }

    pub fn cosh(self) -> Self {
        self.map_null(f64::cosh)
    }

    /// Hyperbolic argument `t` of the polar form.
    pub fn argh(self) -> Result<f64> {
        Ok(self.polar_decompose()?.t)
    }

    pub fn polar_decompose(self) -> Result<PolarForm> {
        if self.is_null() {
            return Err(ZmcError::NullConeArgument { op: "argh", arg: self });
        }
        let n = self.norm2();
        let s = 0.5 * n.abs().ln();
        if n > 0.0 {
            Ok(PolarForm {
                sign: self.re.signum(),
                s,
                t: (self.im / self.re).atanh(),
                branch: PolarBranch::NormPositive,
            })
        } else {
            Ok(PolarForm {
                sign: self.im.signum(),
                s,
                t: (self.re / self.im).atanh(),
                branch: PolarBranch::NormNegative,
            })
        }
    }

    pub fn polar_compose(p: PolarForm) -> Self {
        p.compose()
    }
}

impl fmt::Display for ParaComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{}-{}j", self.re, -self.im)
        } else {
            write!(f, "{}+{}j", self.re, self.im)
        }
    }
}

impl From<f64> for ParaComplex {
    fn from(re: f64) -> Self {
        ParaComplex::real(re)
    }
}

impl Add for ParaComplex {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        ParaComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ParaComplex {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        ParaComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ParaComplex {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        ParaComplex::new(
            self.re * rhs.re + self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for ParaComplex {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: f64) -> Self {
        ParaComplex::new(self.re * rhs, self.im * rhs)
    }
}

impl Mul<ParaComplex> for f64 {
    type Output = ParaComplex;
    #[inline]
    fn mul(self, rhs: ParaComplex) -> ParaComplex {
        rhs * self
    }
}

impl Div<f64> for ParaComplex {
    type Output = Self;
    #[inline]
    fn div(self, rhs: f64) -> Self {
        ParaComplex::new(self.re / rhs, self.im / rhs)
    }
}

impl Neg for ParaComplex {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        ParaComplex::new(-self.re, -self.im)
    }
}

impl AddAssign for ParaComplex {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for ParaComplex {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for ParaComplex {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(a: ParaComplex, b: ParaComplex, op: ArithOp) -> Result<ParaComplex> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// Coordinates with respect to the idempotent basis `ε₁, ε₂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NullPair {
    /// Coefficient of `ε₁`, equal to `u + v`.
    pub plus: f64,
    /// Coefficient of `ε₂`, equal to `u − v`.
    pub minus: f64,
}

impl NullPair {
    pub const fn new(plus: f64, minus: f64) -> Self {
        NullPair { plus, minus }
    }

    pub fn to_para(self) -> ParaComplex {
        ParaComplex::new(0.5 * (self.plus + self.minus), 0.5 * (self.plus - self.minus))
    }
}

impl Mul for NullPair {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        NullPair::new(self.plus * rhs.plus, self.minus * rhs.minus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolarBranch {
    /// `N² > 0`: `z = ±eˢ(cosh t + j sinh t)`.
    NormPositive,
    /// `N² < 0`: `z = ±eˢ(sinh t + j cosh t)`.
    NormNegative,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarForm {
    /// `+1.0` or `-1.0`.
    pub sign: f64,
    /// Log-modulus.
    pub s: f64,
    /// Hyperbolic argument.
    pub t: f64,
    pub branch: PolarBranch,
}

impl PolarForm {
    pub fn compose(self) -> ParaComplex {
        let r = self.sign * self.s.exp();
        let (c, sh) = (self.t.cosh(), self.t.sinh());
        match self.branch {
            PolarBranch::NormPositive => ParaComplex::new(r * c, r * sh),
            PolarBranch::NormNegative => ParaComplex::new(r * sh, r * c),
        }
    }
}

/// Free-function spellings of the elementary operations.
pub fn norm2(z: ParaComplex) -> f64 {
    z.norm2()
}

pub fn conj(z: ParaComplex) -> ParaComplex {
    z.conj()
}

pub fn modulus(z: ParaComplex) -> f64 {
    z.modulus()
}

pub fn to_null(z: ParaComplex) -> NullPair {
    z.to_null()
}

pub fn from_null(p: NullPair) -> ParaComplex {
    p.to_para()
}

/// A real function together with the open set it is defined on.
#[derive(Clone)]
pub struct RealFn {
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    domain: Arc<dyn Fn(f64) -> bool + Send + Sync>,
}

impl RealFn {
    pub fn new(
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        domain: impl Fn(f64) -> bool + Send + Sync + 'static,
    ) -> Self {
        RealFn {
            f: Arc::new(f),
            domain: Arc::new(domain),
        }
    }

    /// A function defined on all of ℝ.
    pub fn total(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        RealFn::new(f, |_| true)
    }

    pub fn contains(&self, x: f64) -> bool {
        x.is_finite() && (self.domain)(x)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !self.contains(x) {
            return Err(ZmcError::DomainViolation(format!(
                "{x} is outside the domain of the real function"
            )));
        }
        Ok((self.f)(x))
    }

    /// `self ∘ inner`, defined where `inner` is defined and lands in `self`'s domain.
    pub fn compose(&self, inner: &RealFn) -> RealFn {
        let (outer_f, outer_d) = (self.f.clone(), self.domain.clone());
        let (inner_f, inner_d) = (inner.f.clone(), inner.domain.clone());
        let inner_f2 = inner_f.clone();
        RealFn {
            f: Arc::new(move |x| outer_f(inner_f(x))),
            domain: Arc::new(move |x| {
                if !inner_d(x) {
                    return false;
                }
                let y = inner_f2(x);
                y.is_finite() && outer_d(y)
            }),
        }
    }
}

impl fmt::Debug for RealFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("RealFn")
    }
}

/// The para-holomorphic lift `f̃(u+jv) = ε₁ f(u+v) + ε₂ f(u−v)` of a real function.
#[derive(Clone, Debug)]
pub struct LiftedFn {
    base: RealFn,
}

pub fn tilde_extend(f: RealFn) -> LiftedFn {
    LiftedFn { base: f }
}

impl LiftedFn {
    pub fn real(&self) -> &RealFn {
        &self.base
    }

    /// Defined iff both `u+v` and `u−v` lie in the domain of `f`.
    pub fn eval(&self, z: ParaComplex) -> Result<ParaComplex> {
        let p = z.to_null();
        let plus = self.base.eval(p.plus).map_err(|_| {
            ZmcError::DomainViolation(format!("u+v = {} outside the lifted domain at {z}", p.plus))
        })?;
        let minus = self.base.eval(p.minus).map_err(|_| {
            ZmcError::DomainViolation(format!("u-v = {} outside the lifted domain at {z}", p.minus))
        })?;
        Ok(NullPair::new(plus, minus).to_para())
    }

    pub fn compose(&self, inner: &LiftedFn) -> LiftedFn {
        LiftedFn {
            base: self.base.compose(&inner.base),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pc(re: f64, im: f64) -> ParaComplex {
        ParaComplex::new(re, im)
    }

    #[test]
    fn zero_divisors() {
        assert_eq!(pc(1.0, 1.0) * pc(1.0, -1.0), ParaComplex::ZERO);
        assert_eq!(ParaComplex::J * ParaComplex::J, ParaComplex::ONE);
    }

    #[test]
    fn conj_product_is_norm() {
        assert_eq!(pc(2.0, 1.0) * pc(2.0, -1.0), pc(3.0, 0.0));
        assert_eq!(pc(3.0, 2.0).norm2(), 5.0);
        assert_eq!(pc(3.0, 2.0).conj(), pc(3.0, -2.0));
        assert_relative_eq!(pc(1.0, 2.0).modulus(), 3f64.sqrt());
    }

    #[test]
    fn division_by_null_fails() {
        let err = arith(ParaComplex::ONE, pc(1.0, 1.0), ArithOp::Div).unwrap_err();
        assert!(matches!(err, ZmcError::NonInvertible { .. }));
        assert!(ParaComplex::ZERO.checked_recip().is_err());
        // near-null inside the band
        assert!(pc(1.0, 1.0 + 1e-14).checked_recip().is_err());
        assert!(pc(1.0, 1.0 - 1e-6).checked_recip().is_ok());
    }

    #[test]
    fn div_inverts_mul() {
        let (a, b) = (pc(0.3, -1.7), pc(2.5, 0.4));
        let q = (a * b).checked_div(b).unwrap();
        assert_relative_eq!(q.re, a.re, epsilon = 1e-14);
        assert_relative_eq!(q.im, a.im, epsilon = 1e-14);
    }

    #[test]
    fn argh_and_polar() {
        assert_relative_eq!(pc(1f64.cosh(), 1f64.sinh()).argh().unwrap(), 1.0, epsilon = 1e-14);
        assert_eq!(pc(5.0, 0.0).argh().unwrap(), 0.0);
        let e2 = 2f64.exp();
        let z = pc(-e2 * 3f64.sinh(), -e2 * 3f64.cosh());
        let p = z.polar_decompose().unwrap();
        assert_eq!(p.sign, -1.0);
        assert_eq!(p.branch, PolarBranch::NormNegative);
        assert_relative_eq!(p.s, 2.0, epsilon = 1e-13);
        assert_relative_eq!(p.t, 3.0, epsilon = 1e-13);
        assert!(matches!(
            pc(2.0, -2.0).argh(),
            Err(ZmcError::NullConeArgument { .. })
        ));
    }

    #[test]
    fn null_coordinates() {
        assert_eq!(pc(2.0, 1.0).to_null(), NullPair::new(3.0, 1.0));
        assert_eq!(from_null(NullPair::new(0.0, 0.0)), ParaComplex::ZERO);
        let z = pc(1.0, 1.0);
        assert_eq!((z * z).to_null(), NullPair::new(4.0, 0.0));
        assert_eq!((z * z).to_null(), z.to_null() * z.to_null());
    }

    #[test]
    fn elementary_functions() {
        let e = pc(0.0, 2.0).exp();
        assert_relative_eq!(e.re, 2f64.cosh(), epsilon = 1e-14);
        assert_relative_eq!(e.im, 2f64.sinh(), epsilon = 1e-14);

        let z = pc(1f64.exp() * 2f64.cosh(), 1f64.exp() * 2f64.sinh());
        let l = z.log().unwrap();
        assert_relative_eq!(l.re, 1.0, epsilon = 1e-14);
        assert_relative_eq!(l.im, 2.0, epsilon = 1e-14);

        let a = pc(0.0, 1.0).arctan();
        assert_relative_eq!(a.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(a.im, std::f64::consts::FRAC_PI_4, epsilon = 1e-15);

        assert!(matches!(
            pc(1.0, -1.0).log(),
            Err(ZmcError::NullConeArgument { .. })
        ));
    }

    #[test]
    fn exp_log_inverse_only_on_right_quadrant() {
        let z = pc(2.0, 0.5);
        let back = z.log().unwrap().exp();
        assert_relative_eq!(back.re, z.re, epsilon = 1e-14);
        assert_relative_eq!(back.im, z.im, epsilon = 1e-14);
        // eˢ(sinh t + j cosh t) comes back as eˢ(cosh t + j sinh t)
        let (s, t) = (0.4f64, 0.9f64);
        let w = pc(s.exp() * t.sinh(), s.exp() * t.cosh());
        let back = w.log().unwrap().exp();
        assert_relative_eq!(back.re, s.exp() * t.cosh(), epsilon = 1e-14);
        assert_relative_eq!(back.im, s.exp() * t.sinh(), epsilon = 1e-14);
    }

    #[test]
    fn tilde_extend_basics() {
        let sq = tilde_extend(RealFn::total(|x| x * x));
        assert_eq!(sq.eval(pc(1.0, 1.0)).unwrap(), pc(2.0, 2.0));

        let asinh = tilde_extend(RealFn::total(f64::asinh));
        assert_eq!(asinh.eval(pc(0.7, 0.0)).unwrap(), pc(0.7f64.asinh(), 0.0));

        let recip = tilde_extend(RealFn::new(|x| 1.0 / x, |x| x != 0.0));
        let r = recip.eval(pc(1.0, 2.0)).unwrap();
        let d = ParaComplex::ONE.checked_div(pc(1.0, 2.0)).unwrap();
        assert_relative_eq!(r.re, -1.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(r.im, 2.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(r.re, d.re, epsilon = 1e-15);
        assert_relative_eq!(r.im, d.im, epsilon = 1e-15);

        assert!(matches!(
            recip.eval(pc(1.0, 1.0)),
            Err(ZmcError::DomainViolation(_))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(pc(3.0, -2.0).to_string(), "3-2j");
        assert_eq!(pc(0.5, 1.0).to_string(), "0.5+1j");
    }
}
