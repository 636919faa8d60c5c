//! Parser for the prefix text format written by `Display for ParaExpr`.
//!
//! ```text
//! expr   := number | "z" | "j" | "pi" | ident "(" expr ("," expr)* ")"
//! ident  := add | sub | mul | div | neg | pow | c | compose | exp | log | ...
//! ```

use std::str::FromStr;

use crate::error::{Result, ZmcError};
use crate::paracomplex::ParaComplex;
use crate::paraholo::expr::{ParaExpr, UnaryFn};

impl FromStr for ParaExpr {
    type Err = ZmcError;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

impl ParaExpr {
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> ZmcError {
        ZmcError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<ParaExpr> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' || c == '+' || c == '.' => {
                Ok(ParaExpr::real(self.number()?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let len = self
                    .rest()
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(self.rest().len());
                let ident = &self.src[start..start + len];
                self.pos += len;
                self.call_or_atom(ident, start)
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let bytes = self.rest().as_bytes();
        let mut end = 0;
        let mut prev = b' ';
        while end < bytes.len() {
            let b = bytes[end];
            let ok = b.is_ascii_digit()
                || b == b'.'
                || b == b'e'
                || b == b'E'
                || ((b == b'-' || b == b'+') && (end == 0 || prev == b'e' || prev == b'E'));
            if !ok {
                break;
            }
            prev = b;
            end += 1;
        }
        let text = &self.rest()[..end];
        let v = text
            .parse::<f64>()
            .map_err(|_| self.error(format!("bad number `{text}`")))?;
        self.pos += end;
        Ok(v)
    }

    fn args(&mut self) -> Result<Vec<ParaExpr>> {
        self.expect('(')?;
        let mut out = vec![self.expr()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(self.expr()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn call_or_atom(&mut self, ident: &str, start: usize) -> Result<ParaExpr> {
        match ident {
            "z" => return Ok(ParaExpr::Var),
            "j" => return Ok(ParaExpr::j()),
            "pi" => return Ok(ParaExpr::real(std::f64::consts::PI)),
            _ => {}
        }
        let arity_err = |n: usize| ZmcError::Parse {
            pos: start,
            msg: format!("`{ident}` takes {n} argument(s)"),
        };
        if ident == "pow" {
            self.expect('(')?;
            let base = self.expr()?;
            self.expect(',')?;
            let n = self.number()?;
            self.expect(')')?;
            if n.fract() != 0.0 || n.abs() > i32::MAX as f64 {
                return Err(ZmcError::Parse {
                    pos: start,
                    msg: format!("pow exponent must be an integer, got {n}"),
                });
            }
            return Ok(base.powi(n as i32));
        }
        if ident == "c" {
            self.expect('(')?;
            let re = self.number()?;
            self.expect(',')?;
            let im = self.number()?;
            self.expect(')')?;
            return Ok(ParaExpr::constant(ParaComplex::new(re, im)));
        }
        let mut args = self.args()?;
        let binary = |args: &mut Vec<ParaExpr>| -> Result<(Box<ParaExpr>, Box<ParaExpr>)> {
            if args.len() != 2 {
                return Err(arity_err(2));
            }
            let b = args.pop().unwrap();
            let a = args.pop().unwrap();
            Ok((Box::new(a), Box::new(b)))
        };
        match ident {
            "add" => binary(&mut args).map(|(a, b)| ParaExpr::Add(a, b)),
            "sub" => binary(&mut args).map(|(a, b)| ParaExpr::Sub(a, b)),
            "mul" => binary(&mut args).map(|(a, b)| ParaExpr::Mul(a, b)),
            "div" => binary(&mut args).map(|(a, b)| ParaExpr::Div(a, b)),
            "compose" => binary(&mut args).map(|(a, b)| ParaExpr::Compose(a, b)),
            "neg" => {
                if args.len() != 1 {
                    return Err(arity_err(1));
                }
                Ok(ParaExpr::Neg(Box::new(args.pop().unwrap())))
            }
            other => match UnaryFn::from_name(other) {
                Some(f) => {
                    if args.len() != 1 {
                        return Err(arity_err(1));
                    }
                    Ok(ParaExpr::Func(f, Box::new(args.pop().unwrap())))
                }
                None => Err(ZmcError::Parse {
                    pos: start,
                    msg: format!("unknown function `{other}`"),
                }),
            },
        }
    }
}
