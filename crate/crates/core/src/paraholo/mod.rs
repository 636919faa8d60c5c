//! Para-holomorphic expressions, their domains, and calculus on them.

pub mod calculus;
pub mod expr;
pub mod parse;
pub mod region;

pub use calculus::{
    antiderivative, cr_residual, cr_residual_fn, deriv_mismatch, integrate, line_integral, null_split,
    LineIntegrator, NullSplit, ParaScalable, PathKind, Polyline,
};
pub use expr::{ParaExpr, UnaryFn};
pub use region::{Membership, NormSign, NullLines, Rect, RegionSpec, SignConstraint};
