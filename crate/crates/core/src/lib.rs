//! Para-complex calculus and zero mean curvature surfaces in Lorentz–Minkowski 3-space.

pub mod error;
pub mod paracomplex;
pub mod paraholo;
pub mod quadrature;

pub use error::{Result, ZmcError};
pub use paracomplex::{NullPair, ParaComplex, TAU_INV};
pub mod catalog;
pub mod cli;
pub mod mesh;
pub mod minkowski;
pub mod report;
pub mod verify;
pub mod weierstrass;

pub use minkowski::Point3;
