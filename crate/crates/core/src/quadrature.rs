//! Adaptive composite Gauss–Legendre quadrature on a real interval.
//!
//! Each panel is compared against the sum over its two halves; a panel is
//! accepted once the two levels agree to the relative tolerance, otherwise it
//! is bisected.

use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use crate::error::{Result, ZmcError};
use crate::paracomplex::ParaComplex;

const ORDER: usize = 10;

/// Values that can be accumulated by the integrator.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    /// Any norm; only used for convergence tests.
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for ParaComplex {
    fn zero() -> Self {
        ParaComplex::ZERO
    }
    fn magnitude(&self) -> f64 {
        self.re.abs().max(self.im.abs())
    }
}

/// Three para-complex components integrated together.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triple(pub [ParaComplex; 3]);

impl Add for Triple {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Triple([self.0[0] + r.0[0], self.0[1] + r.0[1], self.0[2] + r.0[2]])
    }
}

impl Sub for Triple {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Triple([self.0[0] - r.0[0], self.0[1] - r.0[1], self.0[2] - r.0[2]])
    }
}

impl Mul<f64> for Triple {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Triple([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }
}

impl QuadValue for Triple {
    fn zero() -> Self {
        Triple([ParaComplex::ZERO; 3])
    }
    fn magnitude(&self) -> f64 {
        self.0.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(ORDER))
}

#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            rel_tol: 1e-10,
            max_depth: 30,
        }
    }
}

impl Quadrature {
    /// Integrates `f` over `[a, b]`. Errors from `f` are propagated; failure to
    /// converge is reported as a domain violation (the integrand is singular on
    /// or near the interval).
    pub fn integrate<T, F>(&self, f: F, a: f64, b: f64) -> Result<T>
    where
        T: QuadValue,
        F: Fn(f64) -> Result<T>,
    {
        if a == b {
            return Ok(T::zero());
        }
        let (whole, l1) = self.panel(&f, a, b)?;
        // Absolute floor from the L1 size of the integrand over the interval.
        let floor = l1 * 1e-3;
        self.refine(&f, a, b, whole, floor, 0)
    }

    fn panel<T, F>(&self, f: &F, a: f64, b: f64) -> Result<(T, f64)>
    where
        T: QuadValue,
        F: Fn(f64) -> Result<T>,
    {
        let (nodes, weights) = rule();
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = T::zero();
        let mut l1 = 0.0;
        for (x, w) in nodes.iter().zip(weights) {
            let v = f(mid + half * x)?;
            l1 += w * v.magnitude();
            acc = acc + v * *w;
        }
        Ok((acc * half, l1 * half.abs()))
    }

    fn refine<T, F>(&self, f: &F, a: f64, b: f64, whole: T, floor: f64, depth: u32) -> Result<T>
    where
        T: QuadValue,
        F: Fn(f64) -> Result<T>,
    {
        let m = 0.5 * (a + b);
        let (left, _) = self.panel(f, a, m)?;
        let (right, _) = self.panel(f, m, b)?;
        let halves = left + right;
        let diff = (halves - whole).magnitude();
        if !diff.is_finite() {
            return Err(ZmcError::DomainViolation(format!(
                "integrand is not finite on [{a}, {b}]"
            )));
        }
        if diff <= self.rel_tol * halves.magnitude().max(floor) {
            return Ok(halves);
        }
        if depth >= self.max_depth {
            return Err(ZmcError::DomainViolation(format!(
                "quadrature did not converge on [{a}, {b}] (integrand singular nearby?)"
            )));
        }
        let l = self.refine(f, a, m, left, floor, depth + 1)?;
        let r = self.refine(f, m, b, right, floor, depth + 1)?;
        Ok(l + r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rule_is_exact_for_polynomials() {
        let (x, w) = gauss_legendre(ORDER);
        assert_relative_eq!(w.iter().sum::<f64>(), 2.0, epsilon = 1e-14);
        // degree 2n-1 exact
        let deg = 2 * ORDER as i32 - 2;
        let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg)).sum();
        assert_relative_eq!(s, 2.0 / (deg as f64 + 1.0), epsilon = 1e-14);
    }

    #[test]
    fn smooth_and_peaked_integrands() {
        let q = Quadrature::default();
        let v: f64 = q.integrate(|x: f64| Ok(x.exp()), 0.0, 3.0).unwrap();
        assert_relative_eq!(v, 3f64.exp() - 1.0, max_relative = 1e-12);
        let v: f64 = q
            .integrate(|x: f64| Ok(1.0 / (1e-4 + x * x)), -1.0, 1.0)
            .unwrap();
        assert_relative_eq!(v, 2.0 * (1.0 / 1e-2) * (1.0f64 / 1e-2).atan(), max_relative = 1e-9);
    }

    #[test]
    fn zero_integral_converges() {
        let q = Quadrature::default();
        let v: f64 = q.integrate(|x: f64| Ok(x.sin()), -2.0, 2.0).unwrap();
        assert!(v.abs() < 1e-14);
    }

    #[test]
    fn singular_integrand_is_reported() {
        let q = Quadrature::default();
        let r: Result<f64> = q.integrate(|x: f64| Ok(1.0 / (x - 0.3)), 0.0, 1.0);
        assert!(matches!(r, Err(ZmcError::DomainViolation(_))));
    }
}
