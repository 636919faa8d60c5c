//! Lorentz–Minkowski 3-space ℝ³₁ with coordinates `(t, x, y)` and inner
//! product `−dt² + dx² + dy²`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point3 {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

/// Tangent vectors share the point representation.
pub type Vec3 = Point3;

impl Point3 {
    pub const ORIGIN: Point3 = Point3 { t: 0.0, x: 0.0, y: 0.0 };

    pub const fn new(t: f64, x: f64, y: f64) -> Self {
        Point3 { t, x, y }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Point3::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.t, self.x, self.y]
    }

    pub fn is_finite(self) -> bool {
        self.t.is_finite() && self.x.is_finite() && self.y.is_finite()
    }

    /// Euclidean length, for tolerances only.
    pub fn euclid(self) -> f64 {
        (self.t * self.t + self.x * self.x + self.y * self.y).sqrt()
    }

    pub fn max_abs(self) -> f64 {
        self.t.abs().max(self.x.abs()).max(self.y.abs())
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t, self.x, self.y)
    }
}

impl Add for Point3 {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Point3::new(self.t + r.t, self.x + r.x, self.y + r.y)
    }
}

impl Sub for Point3 {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Point3::new(self.t - r.t, self.x - r.x, self.y - r.y)
    }
}

impl Mul<f64> for Point3 {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Point3::new(self.t * k, self.x * k, self.y * k)
    }
}

impl Neg for Point3 {
    type Output = Self;
    fn neg(self) -> Self {
        Point3::new(-self.t, -self.x, -self.y)
    }
}

/// `⟨a, b⟩ = −a_t b_t + a_x b_x + a_y b_y`.
pub fn inner(a: Vec3, b: Vec3) -> f64 {
    -a.t * b.t + a.x * b.x + a.y * b.y
}

/// Lorentzian cross product: `⟨a × b, c⟩ = det(a, b, c)`, so the result is
/// Lorentz-orthogonal to both factors.
pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    let e = [
        a.x * b.y - a.y * b.x,
        a.y * b.t - a.t * b.y,
        a.t * b.x - a.x * b.t,
    ];
    Point3::new(-e[0], e[1], e[2])
}

/// Light-like coordinates `(x, η, ζ)` with `η = t + y`, `ζ = t − y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LightlikeCoords {
    pub x: f64,
    pub eta: f64,
    pub zeta: f64,
}

pub fn lightlike_coords(p: Point3) -> LightlikeCoords {
    LightlikeCoords {
        x: p.x,
        eta: p.t + p.y,
        zeta: p.t - p.y,
    }
}

pub fn from_lightlike(c: LightlikeCoords) -> Point3 {
    Point3::new(0.5 * (c.eta + c.zeta), c.x, 0.5 * (c.eta - c.zeta))
}

/// Isometry of ℝ³₁ built from a signed permutation of the spatial axes, an
/// optional time reversal, and a translation. Applied as
/// `p ↦ (±t, s_x·p_a, s_y·p_b) + translation` with `(a, b)` = `(x, y)` or `(y, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    pub swap_xy: bool,
    pub sign_x: f64,
    pub sign_y: f64,
    pub flip_t: bool,
    pub translation: Point3,
}

impl Default for Isometry {
    fn default() -> Self {
        Isometry::IDENTITY
    }
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        swap_xy: false,
        sign_x: 1.0,
        sign_y: 1.0,
        flip_t: false,
        translation: Point3::ORIGIN,
    };

    /// `(t, x, y) ↦ (t, x, −y)`.
    pub const REFLECT_Y: Isometry = Isometry {
        swap_xy: false,
        sign_x: 1.0,
        sign_y: -1.0,
        flip_t: false,
        translation: Point3::ORIGIN,
    };

    pub fn linear(self, p: Point3) -> Point3 {
        let (a, b) = if self.swap_xy { (p.y, p.x) } else { (p.x, p.y) };
        let t = if self.flip_t { -p.t } else { p.t };
        Point3::new(t, self.sign_x * a, self.sign_y * b)
    }

    pub fn apply(self, p: Point3) -> Point3 {
        self.linear(p) + self.translation
    }

    pub fn with_translation(mut self, translation: Point3) -> Self {
        self.translation = translation;
        self
    }

    /// The 16 linear parts: axis swap, two spatial signs, time reversal.
    pub fn signed_permutations() -> Vec<Isometry> {
        let mut out = Vec::with_capacity(16);
        for swap_xy in [false, true] {
            for sign_x in [1.0, -1.0] {
                for sign_y in [1.0, -1.0] {
                    for flip_t in [false, true] {
                        out.push(Isometry {
                            swap_xy,
                            sign_x,
                            sign_y,
                            flip_t,
                            translation: Point3::ORIGIN,
                        });
                    }
                }
            }
        }
        out
    }

    /// Human-readable image of `(t, x, y)`, e.g. `(t, pi/2 - y, x)`.
    pub fn describe(&self) -> String {
        let term = |name: &str, sign: f64, shift: f64| {
            let base = if sign < 0.0 { format!("-{name}") } else { name.to_string() };
            if shift == 0.0 {
                base
            } else if shift < 0.0 {
                format!("{base} - {}", -shift)
            } else {
                format!("{base} + {shift}")
            }
        };
        let (a, b) = if self.swap_xy { ("y", "x") } else { ("x", "y") };
        format!(
            "({}, {}, {})",
            term("t", if self.flip_t { -1.0 } else { 1.0 }, self.translation.t),
            term(a, self.sign_x, self.translation.x),
            term(b, self.sign_y, self.translation.y)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cross_is_orthogonal() {
        let a = Point3::new(0.3, -1.2, 2.0);
        let b = Point3::new(1.5, 0.4, -0.7);
        let n = cross(a, b);
        assert!(inner(n, a).abs() < 1e-14);
        assert!(inner(n, b).abs() < 1e-14);
        // the normal of the space-like plane t = 0 is time-like
        let n = cross(Point3::new(0.0, 1.0, 0.0), Point3::new(0.0, 0.0, 1.0));
        assert!(inner(n, n) < 0.0);
    }

    #[test]
    fn lightlike_examples() {
        let c = lightlike_coords(Point3::new(1.0, 0.0, 1.0));
        assert_eq!((c.x, c.eta, c.zeta), (0.0, 2.0, 0.0));
        assert_eq!(from_lightlike(c), Point3::new(1.0, 0.0, 1.0));
        let c = lightlike_coords(Point3::new(-7.0 / 3.0, 2.0, 1.0 / 3.0));
        assert_relative_eq!(c.x, 2.0);
        assert_relative_eq!(c.eta, -2.0, epsilon = 1e-15);
        assert_relative_eq!(c.zeta, -8.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn isometries_preserve_the_inner_product() {
        let (a, b) = (Point3::new(0.3, -1.2, 2.0), Point3::new(1.5, 0.4, -0.7));
        for iso in Isometry::signed_permutations() {
            assert_relative_eq!(inner(iso.linear(a), iso.linear(b)), inner(a, b), epsilon = 1e-15);
        }
        assert_eq!(Isometry::signed_permutations().len(), 16);
    }

    #[test]
    fn describe_reads_back() {
        let iso = Isometry {
            swap_xy: true,
            sign_x: -1.0,
            sign_y: 1.0,
            flip_t: false,
            translation: Point3::new(0.0, 1.5, 0.0),
        };
        assert_eq!(iso.describe(), "(t, -y + 1.5, x)");
        assert_eq!(iso.apply(Point3::new(1.0, 2.0, 3.0)), Point3::new(1.0, -1.5, 2.0));
    }
}
