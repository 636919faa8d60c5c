use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, ZmcError};
use crate::paracomplex::ParaComplex;

/// Elementary functions available as expression nodes. All are lifts of the
/// corresponding real function through the null decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryFn {
    Exp,
    Log,
    Arctan,
    Sinh,
    Cosh,
    Sin,
    Cos,
}

impl UnaryFn {
    pub const ALL: [UnaryFn; 7] = [
        UnaryFn::Exp,
        UnaryFn::Log,
        UnaryFn::Arctan,
        UnaryFn::Sinh,
        UnaryFn::Cosh,
        UnaryFn::Sin,
        UnaryFn::Cos,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UnaryFn::Exp => "exp",
            UnaryFn::Log => "log",
            UnaryFn::Arctan => "arctan",
            UnaryFn::Sinh => "sinh",
            UnaryFn::Cosh => "cosh",
            UnaryFn::Sin => "sin",
            UnaryFn::Cos => "cos",
        }
    }

    pub fn from_name(name: &str) -> Option<UnaryFn> {
        UnaryFn::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn apply(self, z: ParaComplex) -> Result<ParaComplex> {
        Ok(match self {
            UnaryFn::Exp => z.exp(),
            UnaryFn::Log => z.log()?,
            UnaryFn::Arctan => z.arctan(),
            UnaryFn::Sinh => z.sinh(),
            UnaryFn::Cosh => z.cosh(),
            UnaryFn::Sin => z.sin(),
            UnaryFn::Cos => z.cos(),
        })
    }
}

/// Closed-form expression in the single para-complex variable `z`.
#[derive(Debug, Clone, PartialEq)]
pub enum ParaExpr {
    Var,
    Const(ParaComplex),
    Add(Box<ParaExpr>, Box<ParaExpr>),
    Sub(Box<ParaExpr>, Box<ParaExpr>),
    Mul(Box<ParaExpr>, Box<ParaExpr>),
    Div(Box<ParaExpr>, Box<ParaExpr>),
    Neg(Box<ParaExpr>),
    Pow(Box<ParaExpr>, i32),
    Func(UnaryFn, Box<ParaExpr>),
    /// `outer(inner(z))`.
    Compose(Box<ParaExpr>, Box<ParaExpr>),
}

impl ParaExpr {
    pub fn z() -> Self {
        ParaExpr::Var
    }

    pub fn constant(c: ParaComplex) -> Self {
        ParaExpr::Const(c)
    }

    pub fn real(x: f64) -> Self {
        ParaExpr::Const(ParaComplex::real(x))
    }

    pub fn j() -> Self {
        ParaExpr::Const(ParaComplex::J)
    }

    pub fn powi(self, n: i32) -> Self {
        ParaExpr::Pow(Box::new(self), n)
    }

    pub fn apply(self, f: UnaryFn) -> Self {
        ParaExpr::Func(f, Box::new(self))
    }

    pub fn exp(self) -> Self {
        self.apply(UnaryFn::Exp)
    }

    pub fn log(self) -> Self {
        self.apply(UnaryFn::Log)
    }

    pub fn arctan(self) -> Self {
        self.apply(UnaryFn::Arctan)
    }

    pub fn sinh(self) -> Self {
        self.apply(UnaryFn::Sinh)
    }

    pub fn cosh(self) -> Self {
        self.apply(UnaryFn::Cosh)
    }

    pub fn sin(self) -> Self {
        self.apply(UnaryFn::Sin)
    }

    pub fn cos(self) -> Self {
        self.apply(UnaryFn::Cos)
    }

    /// `self(inner(z))`.
    pub fn compose(self, inner: ParaExpr) -> Self {
        ParaExpr::Compose(Box::new(self), Box::new(inner))
    }

    pub fn as_const(&self) -> Option<ParaComplex> {
        match self {
            ParaExpr::Const(c) => Some(*c),
            _ => None,
        }
    }

    pub fn contains_var(&self) -> bool {
        match self {
            ParaExpr::Var => true,
            ParaExpr::Const(_) => false,
            ParaExpr::Add(a, b) | ParaExpr::Sub(a, b) | ParaExpr::Mul(a, b) | ParaExpr::Div(a, b) => {
                a.contains_var() || b.contains_var()
            }
            ParaExpr::Neg(a) | ParaExpr::Pow(a, _) | ParaExpr::Func(_, a) => a.contains_var(),
            // the outer expression is evaluated at the inner one
            ParaExpr::Compose(outer, inner) => outer.contains_var() && inner.contains_var(),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            ParaExpr::Var | ParaExpr::Const(_) => 1,
            ParaExpr::Add(a, b)
            | ParaExpr::Sub(a, b)
            | ParaExpr::Mul(a, b)
            | ParaExpr::Div(a, b)
            | ParaExpr::Compose(a, b) => 1 + a.size() + b.size(),
            ParaExpr::Neg(a) | ParaExpr::Pow(a, _) | ParaExpr::Func(_, a) => 1 + a.size(),
        }
    }

    /// Evaluates at `z`. Errors carry the innermost sub-expression that failed.
    pub fn eval(&self, z: ParaComplex) -> Result<ParaComplex> {
        let at = |e: ZmcError| match e {
            tagged @ ZmcError::AtNode { .. } => tagged,
            other => ZmcError::AtNode {
                node: self.to_string(),
                source: Box::new(other),
            },
        };
        match self {
            ParaExpr::Var => Ok(z),
            ParaExpr::Const(c) => Ok(*c),
            ParaExpr::Add(a, b) => Ok(a.eval(z)? + b.eval(z)?),
            ParaExpr::Sub(a, b) => Ok(a.eval(z)? - b.eval(z)?),
            ParaExpr::Mul(a, b) => Ok(a.eval(z)? * b.eval(z)?),
            ParaExpr::Div(a, b) => {
                let (x, y) = (a.eval(z)?, b.eval(z)?);
                x.checked_div(y).map_err(at)
            }
            ParaExpr::Neg(a) => Ok(-a.eval(z)?),
            ParaExpr::Pow(a, n) => a.eval(z)?.checked_powi(*n).map_err(at),
            ParaExpr::Func(f, a) => f.apply(a.eval(z)?).map_err(at),
            ParaExpr::Compose(outer, inner) => outer.eval(inner.eval(z)?),
        }
    }

    /// Symbolic derivative with respect to `z`.
    pub fn deriv(&self) -> ParaExpr {
        use ParaExpr as E;
        match self {
            E::Var => E::real(1.0),
            E::Const(_) => E::real(0.0),
            E::Add(a, b) => sum(a.deriv(), b.deriv()),
            E::Sub(a, b) => difference(a.deriv(), b.deriv()),
            E::Mul(a, b) => sum(
                product(a.deriv(), (**b).clone()),
                product((**a).clone(), b.deriv()),
            ),
            E::Div(a, b) => {
                let num = difference(
                    product(a.deriv(), (**b).clone()),
                    product((**a).clone(), b.deriv()),
                );
                quotient(num, (**b).clone().powi(2))
            }
            E::Neg(a) => negate(a.deriv()),
            E::Pow(a, n) => match n {
                0 => E::real(0.0),
                1 => a.deriv(),
                _ => product(
                    product(E::real(*n as f64), (**a).clone().powi(n - 1)),
                    a.deriv(),
                ),
            },
            E::Func(f, a) => {
                let inner = (**a).clone();
                let outer = match f {
                    UnaryFn::Exp => inner.exp(),
                    UnaryFn::Log => quotient(E::real(1.0), inner),
                    UnaryFn::Arctan => quotient(E::real(1.0), E::real(1.0) + inner.powi(2)),
                    UnaryFn::Sinh => inner.cosh(),
                    UnaryFn::Cosh => inner.sinh(),
                    UnaryFn::Sin => inner.cos(),
                    UnaryFn::Cos => negate(inner.sin()),
                };
                product(outer, a.deriv())
            }
            E::Compose(outer, inner) => product(
                outer.deriv().compose((**inner).clone()),
                inner.deriv(),
            ),
        }
    }
}

fn is_zero(e: &ParaExpr) -> bool {
    e.as_const() == Some(ParaComplex::ZERO)
}

fn is_one(e: &ParaExpr) -> bool {
    e.as_const() == Some(ParaComplex::ONE)
}

// Constant-folding constructors used by `deriv` to keep trees small.
fn sum(a: ParaExpr, b: ParaExpr) -> ParaExpr {
    match (a.as_const(), b.as_const()) {
        (Some(x), Some(y)) => ParaExpr::Const(x + y),
        _ if is_zero(&a) => b,
        _ if is_zero(&b) => a,
        _ => ParaExpr::Add(Box::new(a), Box::new(b)),
    }
}

fn difference(a: ParaExpr, b: ParaExpr) -> ParaExpr {
    match (a.as_const(), b.as_const()) {
        (Some(x), Some(y)) => ParaExpr::Const(x - y),
        _ if is_zero(&b) => a,
        _ if is_zero(&a) => negate(b),
        _ => ParaExpr::Sub(Box::new(a), Box::new(b)),
    }
}

fn product(a: ParaExpr, b: ParaExpr) -> ParaExpr {
    match (a.as_const(), b.as_const()) {
        (Some(x), Some(y)) => ParaExpr::Const(x * y),
        _ if is_zero(&a) || is_zero(&b) => ParaExpr::real(0.0),
        _ if is_one(&a) => b,
        _ if is_one(&b) => a,
        _ => ParaExpr::Mul(Box::new(a), Box::new(b)),
    }
}

fn quotient(a: ParaExpr, b: ParaExpr) -> ParaExpr {
    if is_zero(&a) {
        return ParaExpr::real(0.0);
    }
    if is_one(&b) {
        return a;
    }
    ParaExpr::Div(Box::new(a), Box::new(b))
}

fn negate(a: ParaExpr) -> ParaExpr {
    match a {
        ParaExpr::Const(c) => ParaExpr::Const(-c),
        ParaExpr::Neg(inner) => *inner,
        other => ParaExpr::Neg(Box::new(other)),
    }
}

impl From<f64> for ParaExpr {
    fn from(x: f64) -> Self {
        ParaExpr::real(x)
    }
}

impl From<ParaComplex> for ParaExpr {
    fn from(c: ParaComplex) -> Self {
        ParaExpr::Const(c)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $node:ident) => {
        impl<R: Into<ParaExpr>> $tr<R> for ParaExpr {
            type Output = ParaExpr;
            fn $m(self, rhs: R) -> ParaExpr {
                ParaExpr::$node(Box::new(self), Box::new(rhs.into()))
            }
        }

        impl $tr<ParaExpr> for f64 {
            type Output = ParaExpr;
            fn $m(self, rhs: ParaExpr) -> ParaExpr {
                ParaExpr::$node(Box::new(ParaExpr::real(self)), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for ParaExpr {
    type Output = ParaExpr;
    fn neg(self) -> ParaExpr {
        ParaExpr::Neg(Box::new(self))
    }
}

fn write_const(f: &mut fmt::Formatter<'_>, c: ParaComplex) -> fmt::Result {
    if c.im == 0.0 {
        write!(f, "{}", c.re)
    } else if c.re == 0.0 && c.im == 1.0 {
        f.write_str("j")
    } else {
        write!(f, "c({}, {})", c.re, c.im)
    }
}

/// Prefix notation, e.g. `div(1, sub(pow(z, 4), 1))`. Round-trips through
/// [`ParaExpr::parse`](crate::paraholo::parse).
impl fmt::Display for ParaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParaExpr::Var => f.write_str("z"),
            ParaExpr::Const(c) => write_const(f, *c),
            ParaExpr::Add(a, b) => write!(f, "add({a}, {b})"),
            ParaExpr::Sub(a, b) => write!(f, "sub({a}, {b})"),
            ParaExpr::Mul(a, b) => write!(f, "mul({a}, {b})"),
            ParaExpr::Div(a, b) => write!(f, "div({a}, {b})"),
            ParaExpr::Neg(a) => write!(f, "neg({a})"),
            ParaExpr::Pow(a, n) => write!(f, "pow({a}, {n})"),
            ParaExpr::Func(u, a) => write!(f, "{}({a})", u.name()),
            ParaExpr::Compose(a, b) => write!(f, "compose({a}, {b})"),
        }
    }
}

impl Serialize for ParaExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ParaExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
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
    fn eval_examples() {
        let z = ParaExpr::z;
        assert_eq!(z().powi(2).eval(pc(1.0, 1.0)).unwrap(), pc(2.0, 2.0));
        let e = 1.0 / (z().powi(4) - 1.0);
        assert_eq!(e.eval(ParaComplex::ZERO).unwrap(), pc(-1.0, 0.0));
        let a = ((z() + 1.0) / (z() - 1.0)).log();
        let v = a.eval(pc(3.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 2f64.ln(), epsilon = 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn eval_error_names_the_node() {
        let e = ParaExpr::real(2.0) + 1.0 / (ParaExpr::z() - 1.0);
        let err = e.eval(pc(2.0, 1.0)).unwrap_err();
        assert_eq!(err.node(), Some("div(1, sub(z, 1))"));
        assert!(matches!(err.root_cause(), ZmcError::NonInvertible { .. }));

        let err = (ParaExpr::z() - 1.0).log().eval(pc(1.5, 0.5)).unwrap_err();
        assert_eq!(err.node(), Some("log(sub(z, 1))"));
        assert!(matches!(err.root_cause(), ZmcError::NullConeArgument { .. }));
    }

    #[test]
    fn deriv_examples() {
        let z = ParaExpr::z;
        assert_eq!(z().powi(3).deriv().eval(pc(1.0, 1.0)).unwrap(), pc(6.0, 6.0));
        assert_eq!(z().arctan().deriv().eval(ParaComplex::ZERO).unwrap(), ParaComplex::ONE);
        let d = (z().powi(2) + 1.0).log().deriv().eval(ParaComplex::ONE).unwrap();
        assert_relative_eq!(d.re, 1.0, epsilon = 1e-15);
        assert_relative_eq!(d.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn deriv_folds_constants() {
        assert_eq!(ParaExpr::z().deriv(), ParaExpr::real(1.0));
        assert_eq!((ParaExpr::z() * 3.0).deriv(), ParaExpr::real(3.0));
        assert_eq!(ParaExpr::real(2.0).powi(5).deriv(), ParaExpr::real(0.0));
    }

    #[test]
    fn compose_chain_rule() {
        // sin(z²)' = 2z cos(z²)
        let e = ParaExpr::z().sin().compose(ParaExpr::z().powi(2));
        let z0 = pc(0.4, -0.3);
        let got = e.deriv().eval(z0).unwrap();
        let want = z0 * 2.0 * (z0 * z0).cos();
        assert_relative_eq!(got.re, want.re, epsilon = 1e-14);
        assert_relative_eq!(got.im, want.im, epsilon = 1e-14);
    }

    #[test]
    fn display_prefix() {
        let e = 1.0 / (ParaExpr::z().powi(4) - 1.0);
        assert_eq!(e.to_string(), "div(1, sub(pow(z, 4), 1))");
        let e = ParaExpr::constant(pc(0.5, -2.0)) * ParaExpr::j();
        assert_eq!(e.to_string(), "mul(c(0.5, -2), j)");
    }
}
