//! Expression trees in one real variable.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Ln,
    Sqrt,
    Abs,
    /// Sign function; only produced by differentiating `abs`.
    Sgn,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
            Func::Sgn => "sgn",
        }
    }

    /// Functions accepted by the parser.
    pub fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }

    fn apply(self, a: f64) -> f64 {
        match self {
            Func::Sin => a.sin(),
            Func::Cos => a.cos(),
            Func::Exp => a.exp(),
            Func::Ln => a.ln(),
            Func::Sqrt => a.sqrt(),
            Func::Abs => a.abs(),
            Func::Sgn => {
                if a > 0.0 {
                    1.0
                } else if a < 0.0 {
                    -1.0
                } else {
                    0.0
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

fn integer_exponent(e: f64) -> Option<i32> {
    (e.fract() == 0.0 && e.abs() <= 64.0).then_some(e as i32)
}

impl Expr {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Expr::Num(c) => *c,
            Expr::X => x,
            Expr::Neg(a) => -a.eval(x),
            Expr::Add(a, b) => a.eval(x) + b.eval(x),
            Expr::Sub(a, b) => a.eval(x) - b.eval(x),
            Expr::Mul(a, b) => a.eval(x) * b.eval(x),
            Expr::Div(a, b) => a.eval(x) / b.eval(x),
            Expr::Pow(a, b) => {
                let base = a.eval(x);
                match **b {
                    Expr::Num(e) => match integer_exponent(e) {
                        Some(n) => base.powi(n),
                        None => base.powf(e),
                    },
                    ref b => base.powf(b.eval(x)),
                }
            }
            Expr::Call(f, a) => f.apply(a.eval(x)),
        }
    }

    pub fn depends_on_x(&self) -> bool {
        match self {
            Expr::Num(_) => false,
            Expr::X => true,
            Expr::Neg(a) | Expr::Call(_, a) => a.depends_on_x(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Pow(a, b) => a.depends_on_x() || b.depends_on_x(),
        }
    }

    /// Arguments of `abs` and `sgn` nodes: the points where they vanish are
    /// candidate kinks or jumps.
    pub fn kink_arguments(&self) -> Vec<&Expr> {
        let mut out = Vec::new();
        self.collect_kinks(&mut out);
        out
    }

    fn collect_kinks<'a>(&'a self, out: &mut Vec<&'a Expr>) {
        match self {
            Expr::Num(_) | Expr::X => {}
            Expr::Call(f, a) => {
                if matches!(f, Func::Abs | Func::Sgn) && a.depends_on_x() {
                    out.push(a);
                }
                a.collect_kinks(out);
            }
            Expr::Neg(a) => a.collect_kinks(out),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Pow(a, b) => {
                a.collect_kinks(out);
                b.collect_kinks(out);
            }
        }
    }

    /// Exact symbolic derivative with light constant folding.
    ///
    /// `g^c` and `c^g` are supported; `g^h` with both sides depending on `x`
    /// is rejected.
    pub fn derivative(&self) -> Result<Expr> {
        Ok(match self {
            Expr::Num(_) => num(0.0),
            Expr::X => num(1.0),
            Expr::Neg(a) => neg(a.derivative()?),
            Expr::Add(a, b) => add(a.derivative()?, b.derivative()?),
            Expr::Sub(a, b) => sub(a.derivative()?, b.derivative()?),
            Expr::Mul(a, b) => add(
                mul(a.derivative()?, (**b).clone()),
                mul((**a).clone(), b.derivative()?),
            ),
            Expr::Div(a, b) => {
                let (da, db) = (a.derivative()?, b.derivative()?);
                if is_zero(&db) {
                    div(da, (**b).clone())
                } else {
                    div(
                        sub(mul(da, (**b).clone()), mul((**a).clone(), db)),
                        pow((**b).clone(), num(2.0)),
                    )
                }
            }
            Expr::Pow(a, b) => match (a.depends_on_x(), b.depends_on_x()) {
                (_, false) => {
                    let exponent = (**b).clone();
                    let lowered = match exponent {
                        Expr::Num(e) => num(e - 1.0),
                        ref e => sub(e.clone(), num(1.0)),
                    };
                    mul(
                        mul(exponent, pow((**a).clone(), lowered)),
                        a.derivative()?,
                    )
                }
                (false, true) => mul(
                    mul(self.clone(), call(Func::Ln, (**a).clone())),
                    b.derivative()?,
                ),
                (true, true) => {
                    return Err(Error::Unsupported(format!(
                        "power with variable base and exponent: {self}"
                    )))
                }
            },
            Expr::Call(f, a) => {
                let inner = (**a).clone();
                let outer = match f {
                    Func::Sin => call(Func::Cos, inner),
                    Func::Cos => neg(call(Func::Sin, inner)),
                    Func::Exp => call(Func::Exp, inner),
                    Func::Ln => div(num(1.0), inner),
                    Func::Sqrt => div(num(1.0), mul(num(2.0), call(Func::Sqrt, inner))),
                    Func::Abs => call(Func::Sgn, inner),
                    Func::Sgn => num(0.0),
                };
                mul(outer, a.derivative()?)
            }
        })
    }
}

fn is_zero(e: &Expr) -> bool {
    matches!(e, Expr::Num(c) if *c == 0.0)
}

fn is_one(e: &Expr) -> bool {
    matches!(e, Expr::Num(c) if *c == 1.0)
}

pub(crate) fn num(c: f64) -> Expr {
    Expr::Num(c)
}

pub(crate) fn neg(a: Expr) -> Expr {
    match a {
        Expr::Num(c) => Expr::Num(-c),
        Expr::Neg(inner) => *inner,
        a => Expr::Neg(Box::new(a)),
    }
}

pub(crate) fn add(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (a, b) if is_zero(&b) => a,
        (a, b) if is_zero(&a) => b,
        (Expr::Num(x), Expr::Num(y)) => Expr::Num(x + y),
        (a, b) => Expr::Add(Box::new(a), Box::new(b)),
    }
}

pub(crate) fn sub(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (a, b) if is_zero(&b) => a,
        (a, b) if is_zero(&a) => neg(b),
        (Expr::Num(x), Expr::Num(y)) => Expr::Num(x - y),
        (a, b) => Expr::Sub(Box::new(a), Box::new(b)),
    }
}

pub(crate) fn mul(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (a, _) if is_zero(&a) => num(0.0),
        (_, b) if is_zero(&b) => num(0.0),
        (a, b) if is_one(&a) => b,
        (a, b) if is_one(&b) => a,
        (Expr::Num(x), Expr::Num(y)) => Expr::Num(x * y),
        (a, b) => Expr::Mul(Box::new(a), Box::new(b)),
    }
}

pub(crate) fn div(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (a, _) if is_zero(&a) => num(0.0),
        (a, b) if is_one(&b) => a,
        (a, b) => Expr::Div(Box::new(a), Box::new(b)),
    }
}

pub(crate) fn pow(a: Expr, b: Expr) -> Expr {
    match (a, b) {
        (_, b) if is_zero(&b) => num(1.0),
        (a, b) if is_one(&b) => a,
        (a, b) => Expr::Pow(Box::new(a), Box::new(b)),
    }
}

pub(crate) fn call(f: Func, a: Expr) -> Expr {
    Expr::Call(f, Box::new(a))
}

fn fmt_number(c: f64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // Debug prints the shortest representation that parses back exactly.
    write!(f, "{c:?}")
}

fn fmt_atom(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Num(c) if *c >= 0.0 => fmt_number(*c, f),
        Expr::X | Expr::Call(..) => write!(f, "{e}"),
        _ => write!(f, "({e})"),
    }
}

/// Prints in the parser's grammar, except for `sgn`, which has no surface syntax.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(c) if *c < 0.0 => {
                write!(f, "-")?;
                fmt_number(-c, f)
            }
            Expr::Num(c) => fmt_number(*c, f),
            Expr::X => write!(f, "x"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                fmt_atom(a, f)
            }
            Expr::Add(a, b) => {
                fmt_atom(a, f)?;
                write!(f, " + ")?;
                fmt_atom(b, f)
            }
            Expr::Sub(a, b) => {
                fmt_atom(a, f)?;
                write!(f, " - ")?;
                fmt_atom(b, f)
            }
            Expr::Mul(a, b) => {
                fmt_atom(a, f)?;
                write!(f, " * ")?;
                fmt_atom(b, f)
            }
            Expr::Div(a, b) => {
                fmt_atom(a, f)?;
                write!(f, " / ")?;
                fmt_atom(b, f)
            }
            Expr::Pow(a, b) => match **b {
                Expr::Num(e) => {
                    fmt_atom(a, f)?;
                    write!(f, "^")?;
                    fmt_number(e, f)
                }
                ref b => write!(f, "exp(({b}) * ln({a}))"),
            },
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}
