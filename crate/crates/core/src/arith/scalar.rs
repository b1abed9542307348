use std::fmt;

use super::lex::{zeta_atom, Cursor, ParseError, Tok};
use super::{ArithError, Cyc3, Cyc4, Cyc5, Field, Rational};

/// A scalar whose field is determined at runtime.
///
/// Rationals combine with any order (ℚ embeds in every ℚ(ζₙ)); two different
/// cyclotomic orders never combine.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Z3(Cyc3),
    Z4(Cyc4),
    Z5(Cyc5),
}

macro_rules! dispatch2 {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {{
        let order = join_order($a.order(), $b.order())?;
        Ok(match ($a.promote(order)?, $b.promote(order)?) {
            (Scalar::Rational($x), Scalar::Rational($y)) => Scalar::Rational($body),
            (Scalar::Z3($x), Scalar::Z3($y)) => Scalar::Z3($body),
            (Scalar::Z4($x), Scalar::Z4($y)) => Scalar::Z4($body),
            (Scalar::Z5($x), Scalar::Z5($y)) => Scalar::Z5($body),
            _ => unreachable!("promotion yields matching variants"),
        })
    }};
}

fn join_order(left: u32, right: u32) -> Result<u32, ArithError> {
    match (left, right) {
        (1, r) => Ok(r),
        (l, 1) => Ok(l),
        (l, r) if l == r => Ok(l),
        (l, r) => Err(ArithError::IncompatibleFields { left: l, right: r }),
    }
}

impl Scalar {
    pub fn order(&self) -> u32 {
        match self {
            Scalar::Rational(_) => 1,
            Scalar::Z3(_) => 3,
            Scalar::Z4(_) => 4,
            Scalar::Z5(_) => 5,
        }
    }

    pub fn zeta(order: u32) -> Result<Scalar, ArithError> {
        match order {
            1 => Ok(Scalar::Rational(<Rational as Field>::one())),
            3 => Ok(Scalar::Z3(Cyc3::zeta())),
            4 => Ok(Scalar::Z4(Cyc4::zeta())),
            5 => Ok(Scalar::Z5(Cyc5::zeta())),
            n => Err(ArithError::UnsupportedOrder(n)),
        }
    }

    /// Re-expresses `self` in ℚ(ζ_order). Fails unless `self` is rational or
    /// already of that order.
    pub fn promote(&self, order: u32) -> Result<Scalar, ArithError> {
        if self.order() == order {
            return Ok(self.clone());
        }
        let Scalar::Rational(q) = self else {
            return Err(ArithError::IncompatibleFields { left: self.order(), right: order });
        };
        match order {
            3 => Ok(Scalar::Z3(Cyc3::from_rational(q.clone()))),
            4 => Ok(Scalar::Z4(Cyc4::from_rational(q.clone()))),
            5 => Ok(Scalar::Z5(Cyc5::from_rational(q.clone()))),
            n => Err(ArithError::UnsupportedOrder(n)),
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Z3(c) => c.to_rational(),
            Scalar::Z4(c) => c.to_rational(),
            Scalar::Z5(c) => c.to_rational(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => Field::is_zero(q),
            Scalar::Z3(c) => c.is_zero(),
            Scalar::Z4(c) => c.is_zero(),
            Scalar::Z5(c) => c.is_zero(),
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ArithError> {
        dispatch2!(self, rhs, |a, b| a + &b)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ArithError> {
        dispatch2!(self, rhs, |a, b| a - &b)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ArithError> {
        dispatch2!(self, rhs, |a, b| a * &b)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q.clone()),
            Scalar::Z3(c) => Scalar::Z3(-c.clone()),
            Scalar::Z4(c) => Scalar::Z4(-c.clone()),
            Scalar::Z5(c) => Scalar::Z5(-c.clone()),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ArithError> {
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(Field::inv(q)?),
            Scalar::Z3(c) => Scalar::Z3(c.inv()?),
            Scalar::Z4(c) => Scalar::Z4(c.inv()?),
            Scalar::Z5(c) => Scalar::Z5(c.inv()?),
        })
    }

    pub fn pow(&self, k: i64) -> Result<Scalar, ArithError> {
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(Field::pow(q, k)?),
            Scalar::Z3(c) => Scalar::Z3(c.pow(k)?),
            Scalar::Z4(c) => Scalar::Z4(c.pow(k)?),
            Scalar::Z5(c) => Scalar::Z5(c.pow(k)?),
        })
    }

    /// Parses a scalar literal: rationals `p/q` or `p`, atoms `z3`, `z4`, `z5`
    /// with `^k` powers, combined by `+`, `-`, `*` and parentheses.
    pub fn parse(text: &str) -> Result<Scalar, ParseError> {
        let mut cur = Cursor::new(text)?;
        let value = parse_expr(&mut cur)?;
        cur.expect_end()?;
        Ok(value)
    }
}

fn arith_err(pos: usize, e: ArithError) -> ParseError {
    ParseError::new(pos, e.to_string())
}

fn parse_expr(cur: &mut Cursor) -> Result<Scalar, ParseError> {
    let mut negate = false;
    if cur.eat(&Tok::Minus) {
        negate = true;
    } else {
        cur.eat(&Tok::Plus);
    }
    let mut acc = parse_term(cur)?;
    if negate {
        acc = acc.neg();
    }
    loop {
        let pos = cur.pos();
        if cur.eat(&Tok::Plus) {
            let t = parse_term(cur)?;
            acc = acc.checked_add(&t).map_err(|e| arith_err(pos, e))?;
        } else if cur.eat(&Tok::Minus) {
            let t = parse_term(cur)?;
            acc = acc.checked_sub(&t).map_err(|e| arith_err(pos, e))?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(cur: &mut Cursor) -> Result<Scalar, ParseError> {
    let mut acc = parse_factor(cur)?;
    loop {
        let pos = cur.pos();
        if !cur.eat(&Tok::Star) {
            return Ok(acc);
        }
        let f = parse_factor(cur)?;
        acc = acc.checked_mul(&f).map_err(|e| arith_err(pos, e))?;
    }
}

fn parse_factor(cur: &mut Cursor) -> Result<Scalar, ParseError> {
    let pos = cur.pos();
    match cur.next().map(|t| t.tok) {
        Some(Tok::Num(n)) => {
            if cur.eat(&Tok::Slash) {
                let dpos = cur.pos();
                match cur.next().map(|t| t.tok) {
                    Some(Tok::Num(d)) if d != 0.into() => Ok(Scalar::Rational(Rational::new(n, d))),
                    Some(Tok::Num(_)) => Err(ParseError::new(dpos, "division by zero")),
                    _ => Err(ParseError::new(dpos, "expected denominator")),
                }
            } else {
                Ok(Scalar::Rational(Rational::from_integer(n)))
            }
        }
        Some(Tok::Ident(name)) => {
            let order = zeta_atom(&name)
                .ok_or_else(|| ParseError::new(pos, format!("unknown scalar atom '{name}'")))?;
            let k = cur.exponent()?;
            let z = Scalar::zeta(order).map_err(|e| arith_err(pos, e))?;
            z.pow(k as i64).map_err(|e| arith_err(pos, e))
        }
        Some(Tok::LParen) => {
            let inner = parse_expr(cur)?;
            if !cur.eat(&Tok::RParen) {
                return Err(ParseError::new(cur.pos(), "expected ')'"));
            }
            Ok(inner)
        }
        Some(Tok::Minus) => Ok(parse_factor(cur)?.neg()),
        Some(t) => Err(ParseError::new(pos, format!("unexpected token {t:?}"))),
        None => Err(ParseError::new(pos, "unexpected end of input")),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Z3(c) => write!(f, "{c}"),
            Scalar::Z4(c) => write!(f, "{c}"),
            Scalar::Z5(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn parses_literals() {
        assert_eq!(Scalar::parse("1/2 + 1/3").unwrap(), Scalar::Rational(rat(5, 6)));
        assert_eq!(Scalar::parse("z5 + z5^2 + z5^3 + z5^4").unwrap(), Scalar::parse("-1").unwrap().promote(5).unwrap());
        assert_eq!(Scalar::parse("z4*z4").unwrap().to_rational(), Some(rat(-1, 1)));
        let s = Scalar::parse("z5^2 - 1/2").unwrap();
        assert_eq!(s.to_string(), "z5^2 - 1/2");
        assert_eq!(Scalar::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn incompatible_fields_are_rejected() {
        let a = Scalar::zeta(3).unwrap();
        let b = Scalar::zeta(5).unwrap();
        assert_eq!(a.checked_add(&b), Err(ArithError::IncompatibleFields { left: 3, right: 5 }));
        assert!(Scalar::parse("z3 + z4").is_err());
        // rationals embed
        assert!(a.checked_mul(&Scalar::Rational(rat(2, 1))).is_ok());
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(Scalar::parse("").unwrap_err().message, "empty input");
        assert_eq!(Scalar::parse("1 + ").unwrap_err().position, 4);
        assert_eq!(Scalar::parse("1/0").unwrap_err().position, 2);
        assert_eq!(Scalar::parse("w7").unwrap_err().position, 0);
    }

    #[test]
    fn powers_and_inverses() {
        assert_eq!(Scalar::zeta(5).unwrap().pow(5).unwrap().to_rational(), Some(rat(1, 1)));
        assert_eq!(Scalar::Rational(rat(2, 1)).pow(-2).unwrap(), Scalar::Rational(rat(1, 4)));
        assert_eq!(Scalar::Rational(rat(0, 1)).pow(-1), Err(ArithError::DivisionByZero));
        assert_eq!(Scalar::zeta(5).unwrap().inv().unwrap(), Scalar::zeta(5).unwrap().pow(4).unwrap());
    }
}
