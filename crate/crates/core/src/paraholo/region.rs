use serde::{Deserialize, Serialize};

use crate::paracomplex::{ParaComplex, TAU_INV};
use crate::paraholo::expr::ParaExpr;

/// Axis-aligned rectangle in the `(u, v)` parameter plane (closed).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub u_min: f64,
    pub u_max: f64,
    pub v_min: f64,
    pub v_max: f64,
}

impl Rect {
    pub const fn new(u_min: f64, u_max: f64, v_min: f64, v_max: f64) -> Self {
        Rect {
            u_min,
            u_max,
            v_min,
            v_max,
        }
    }

    pub const fn square(half: f64) -> Self {
        Rect::new(-half, half, -half, half)
    }

    pub fn contains(&self, z: ParaComplex) -> bool {
        z.re >= self.u_min && z.re <= self.u_max && z.im >= self.v_min && z.im <= self.v_max
    }

    pub fn center(&self) -> ParaComplex {
        ParaComplex::new(0.5 * (self.u_min + self.u_max), 0.5 * (self.v_min + self.v_max))
    }

    /// Grid node `(i, j)` of an `n × n` node grid including the edges.
    pub fn node(&self, n: usize, i: usize, j: usize) -> ParaComplex {
        let t = |k: usize| if n <= 1 { 0.5 } else { k as f64 / (n - 1) as f64 };
        ParaComplex::new(
            self.u_min + t(i) * (self.u_max - self.u_min),
            self.v_min + t(j) * (self.v_max - self.v_min),
        )
    }

    /// Cell-centred sample `(i, j)` of an `n × n` grid.
    pub fn cell_center(&self, n: usize, i: usize, j: usize) -> ParaComplex {
        let t = |k: usize| (k as f64 + 0.5) / n as f64;
        ParaComplex::new(
            self.u_min + t(i) * (self.u_max - self.u_min),
            self.v_min + t(j) * (self.v_max - self.v_min),
        )
    }

    /// All `n × n` cell centres, row-major in `v` then `u`.
    pub fn cell_centers(&self, n: usize) -> impl Iterator<Item = ParaComplex> + '_ {
        (0..n).flat_map(move |j| (0..n).map(move |i| self.cell_center(n, i, j)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormSign {
    /// `N²(e(z)) > 0`.
    Positive,
    /// `N²(e(z)) < 0`.
    Negative,
    /// `N²(e(z)) ≠ 0`.
    Nonzero,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignConstraint {
    pub expr: ParaExpr,
    pub sign: NormSign,
}

/// Light-like lines `u+v = c` and `u−v = c` that the region keeps a
/// Euclidean distance `margin` away from.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct NullLines {
    pub plus: Vec<f64>,
    pub minus: Vec<f64>,
    pub margin: f64,
}

impl NullLines {
    pub fn distance(&self, z: ParaComplex) -> f64 {
        let p = z.to_null();
        let d_plus = self.plus.iter().map(|c| (p.plus - c).abs());
        let d_minus = self.minus.iter().map(|c| (p.minus - c).abs());
        d_plus.chain(d_minus).fold(f64::INFINITY, f64::min) / std::f64::consts::SQRT_2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Inside,
    /// Inside the rectangle but violating a sign constraint.
    Outside,
    /// Within the margin of an excluded line, or a constraint could not be evaluated.
    Excluded,
    OutOfBounds,
}

/// Open sampling region: a bounding rectangle intersected with sign
/// conditions on `N²` of sub-expressions, minus a band around excluded lines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub name: String,
    pub rect: Rect,
    #[serde(default)]
    pub constraints: Vec<SignConstraint>,
    #[serde(default)]
    pub excluded: NullLines,
    /// Preferred base point when the origin is not inside.
    #[serde(default)]
    pub anchor: Option<ParaComplex>,
}

impl RegionSpec {
    pub fn rect(name: impl Into<String>, rect: Rect) -> Self {
        RegionSpec {
            name: name.into(),
            rect,
            constraints: Vec::new(),
            excluded: NullLines::default(),
            anchor: None,
        }
    }

    pub fn with_constraint(mut self, expr: ParaExpr, sign: NormSign) -> Self {
        self.constraints.push(SignConstraint { expr, sign });
        self
    }

    pub fn with_excluded(mut self, plus: &[f64], minus: &[f64], margin: f64) -> Self {
        self.excluded.plus.extend_from_slice(plus);
        self.excluded.minus.extend_from_slice(minus);
        self.excluded.margin = self.excluded.margin.max(margin);
        self
    }

    pub fn with_anchor(mut self, anchor: ParaComplex) -> Self {
        self.anchor = Some(anchor);
        self
    }

    pub fn with_rect(mut self, rect: Rect) -> Self {
        self.rect = rect;
        self
    }

    pub fn classify(&self, z: ParaComplex) -> Membership {
        if !self.rect.contains(z) {
            return Membership::OutOfBounds;
        }
        let has_lines = !(self.excluded.plus.is_empty() && self.excluded.minus.is_empty());
        if has_lines && self.excluded.distance(z) <= self.excluded.margin {
            return Membership::Excluded;
        }
        for c in &self.constraints {
            let w = match c.expr.eval(z) {
                Ok(w) if w.is_finite() => w,
                _ => return Membership::Excluded,
            };
            if w.is_null_within(TAU_INV) {
                return Membership::Excluded;
            }
            let n = w.norm2();
            let ok = match c.sign {
                NormSign::Positive => n > 0.0,
                NormSign::Negative => n < 0.0,
                NormSign::Nonzero => true,
            };
            if !ok {
                return Membership::Outside;
            }
        }
        Membership::Inside
    }

    pub fn contains(&self, z: ParaComplex) -> bool {
        self.classify(z) == Membership::Inside
    }

    /// Base point convention: the origin when it is inside, else the anchor,
    /// else the rectangle centre.
    pub fn base_point(&self) -> ParaComplex {
        if self.contains(ParaComplex::ZERO) {
            ParaComplex::ZERO
        } else if let Some(a) = self.anchor {
            a
        } else {
            self.rect.center()
        }
    }

    /// In-region cell centres of an `n × n` grid over the bounding rectangle.
    pub fn samples(&self, n: usize) -> Vec<ParaComplex> {
        self.rect.cell_centers(n).filter(|z| self.contains(*z)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scherk_plus_region() {
        let z = ParaExpr::z;
        let a = (z() + 1.0) / (z() - 1.0);
        let r = RegionSpec::rect("dplus", Rect::square(3.0))
            .with_constraint(a, NormSign::Positive)
            .with_excluded(&[-1.0, 1.0], &[-1.0, 1.0], 0.05);
        assert_eq!(r.classify(ParaComplex::ZERO), Membership::Inside);
        // u+v = 0, u-v = 2: mixed sides of the lines, so N²(A) < 0
        assert_eq!(r.classify(ParaComplex::new(1.0, -1.0)), Membership::Outside);
        assert_eq!(r.classify(ParaComplex::new(0.5, 0.5)), Membership::Excluded);
        assert_eq!(r.classify(ParaComplex::new(5.0, 0.0)), Membership::OutOfBounds);
        assert_eq!(r.base_point(), ParaComplex::ZERO);
        let s = r.samples(20);
        assert!(!s.is_empty() && s.iter().all(|p| r.contains(*p)));
    }

    #[test]
    fn anchor_used_when_origin_outside() {
        let r = RegionSpec::rect("npos", Rect::square(2.0))
            .with_constraint(ParaExpr::z(), NormSign::Positive)
            .with_anchor(ParaComplex::ONE);
        assert_eq!(r.base_point(), ParaComplex::ONE);
    }

    #[test]
    fn margin_is_euclidean() {
        let lines = NullLines {
            plus: vec![1.0],
            minus: vec![],
            margin: 0.05,
        };
        // (0.5, 0.5) lies on u+v=1; moving along (1,1)/√2 by d gives distance d
        let d = 0.2;
        let p = ParaComplex::new(0.5 + d / 2f64.sqrt(), 0.5 + d / 2f64.sqrt());
        assert!((lines.distance(p) - d).abs() < 1e-12);
    }
}
