//! Polynomial literal grammar.
//!
//! ```text
//! expr   ::= term (('+'|'-') term)*
//! term   ::= factor ('*' factor)*
//! factor ::= scalar | var ('^' nat)? | '(' expr ')' ('^' nat)?
//! ```
//!
//! Scalars follow the scalar literal grammar (`p/q`, `z5^2`, ...). A leading
//! `-` is accepted before any term or factor.

use std::fmt;
use std::sync::Arc;

use super::{Monomial, PolyError, Polynomial, RingDescriptor};
use crate::arith::lex::{zeta_atom, Cursor, ParseError, Tok};
use crate::arith::{Field, Rational, Scalar};

impl<F: Field> Polynomial<F> {
    pub fn parse(text: &str, desc: &Arc<RingDescriptor>) -> Result<Self, PolyError> {
        if F::ORDER != desc.field_order() {
            return Err(PolyError::InvalidDescriptor(format!(
                "descriptor field order {} does not match coefficient field order {}",
                desc.field_order(),
                F::ORDER
            )));
        }
        let mut cur = Cursor::new(text)?;
        let p = Parser { desc }.expr(&mut cur)?;
        cur.expect_end()?;
        Ok(p)
    }
}

struct Parser<'a> {
    desc: &'a Arc<RingDescriptor>,
}

impl Parser<'_> {
    fn expr<F: Field>(&self, cur: &mut Cursor) -> Result<Polynomial<F>, PolyError> {
        let negate = if cur.eat(&Tok::Minus) {
            true
        } else {
            cur.eat(&Tok::Plus);
            false
        };
        let mut acc = self.term(cur)?;
        if negate {
            acc = -&acc;
        }
        loop {
            if cur.eat(&Tok::Plus) {
                acc = &acc + &self.term(cur)?;
            } else if cur.eat(&Tok::Minus) {
                acc = &acc - &self.term(cur)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<F: Field>(&self, cur: &mut Cursor) -> Result<Polynomial<F>, PolyError> {
        let mut acc = self.factor(cur)?;
        while cur.eat(&Tok::Star) {
            acc = &acc * &self.factor(cur)?;
        }
        Ok(acc)
    }

    fn factor<F: Field>(&self, cur: &mut Cursor) -> Result<Polynomial<F>, PolyError> {
        let pos = cur.pos();
        let tok = cur.next().map(|t| t.tok);
        match tok {
            Some(Tok::Num(n)) => {
                let q = if cur.eat(&Tok::Slash) {
                    let dpos = cur.pos();
                    match cur.next().map(|t| t.tok) {
                        Some(Tok::Num(d)) if d != 0.into() => Rational::new(n, d),
                        Some(Tok::Num(_)) => return Err(ParseError::new(dpos, "division by zero").into()),
                        _ => return Err(ParseError::new(dpos, "expected denominator").into()),
                    }
                } else {
                    Rational::from_integer(n)
                };
                Ok(Polynomial::constant(self.desc, F::from_rational(q)))
            }
            Some(Tok::Ident(name)) => {
                let k = cur.exponent()?;
                if let Some(i) = self.desc.index_of(&name) {
                    let mut e = vec![0; self.desc.len()];
                    e[i] = k;
                    return Ok(Polynomial::monomial(self.desc, Monomial::new(e), F::one()));
                }
                if let Some(order) = zeta_atom(&name) {
                    let z = Scalar::zeta(order).and_then(|s| F::from_scalar(&s));
                    let z = z.map_err(|e| ParseError::new(pos, e.to_string()))?;
                    let zk = z.pow(k as i64).map_err(|e| ParseError::new(pos, e.to_string()))?;
                    return Ok(Polynomial::constant(self.desc, zk));
                }
                Err(PolyError::UnknownVariable { name, position: Some(pos) })
            }
            Some(Tok::LParen) => {
                let inner = self.expr(cur)?;
                if !cur.eat(&Tok::RParen) {
                    return Err(ParseError::new(cur.pos(), "expected ')'").into());
                }
                let k = cur.exponent()?;
                Ok(inner.pow(k))
            }
            Some(Tok::Minus) => Ok(-&self.factor(cur)?),
            Some(t) => Err(ParseError::new(pos, format!("unexpected token {t:?}")).into()),
            None => Err(ParseError::new(pos, "unexpected end of input").into()),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, desc: &RingDescriptor) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", desc.var(i).name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Renders in the literal grammar; `parse(render(p)) == p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let desc = self.descriptor();
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.renders_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k == 0, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                if mag.is_compound() {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
                continue;
            }
            if !mag.is_one() {
                if mag.is_compound() {
                    write!(f, "({mag})*")?;
                } else {
                    write!(f, "{mag}*")?;
                }
            }
            write_monomial(f, m, desc)?;
        }
        Ok(())
    }
}

/// Parses `name = polynomial` lines; blank lines and `#` comments are skipped.
pub fn parse_named<F: Field>(text: &str, desc: &Arc<RingDescriptor>) -> Result<Vec<(String, Polynomial<F>)>, PolyError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let at_line = |e: PolyError| PolyError::Line { line: lineno + 1, source: Box::new(e) };
        let (name, body) = line
            .split_once('=')
            .ok_or_else(|| at_line(PolyError::InvalidDescriptor("expected 'name = polynomial'".into())))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(at_line(PolyError::InvalidDescriptor(format!("invalid name '{name}'"))));
        }
        out.push((name.to_string(), Polynomial::parse(body, desc).map_err(at_line)?));
    }
    Ok(out)
}
