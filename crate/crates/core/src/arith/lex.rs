//! Tokenizer shared by the scalar and polynomial literal grammars.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: usize,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push(Token { tok: Tok::Num(n), pos: start });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(text[start..i].to_string()), pos: start });
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::new(start, format!("unexpected character '{ch}'")));
            }
        };
        out.push(Token { tok, pos: start });
        i += 1;
    }
    Ok(out)
}

/// Cursor over a token stream with end-of-input position tracking.
pub(crate) struct Cursor {
    toks: Vec<Token>,
    idx: usize,
    end: usize,
}

impl Cursor {
    pub fn new(text: &str) -> Result<Self, ParseError> {
        let toks = tokenize(text)?;
        if toks.is_empty() {
            return Err(ParseError::new(0, "empty input"));
        }
        Ok(Cursor { toks, idx: 0, end: text.len() })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    pub fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |t| t.pos)
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.idx).cloned();
        self.idx += 1;
        t
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        match self.toks.get(self.idx) {
            None => Ok(()),
            Some(t) => Err(ParseError::new(t.pos, format!("unexpected token {:?}", t.tok))),
        }
    }

    /// Parses `'^' nat` if present, returning the exponent (1 otherwise).
    pub fn exponent(&mut self) -> Result<u32, ParseError> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let pos = self.pos();
        match self.next().map(|t| t.tok) {
            Some(Tok::Num(n)) => u32::try_from(n)
                .map_err(|_| ParseError::new(pos, "exponent too large")),
            _ => Err(ParseError::new(pos, "expected natural number exponent")),
        }
    }
}

/// Recognizes a cyclotomic atom name `z3`, `z4`, `z5`.
pub(crate) fn zeta_atom(name: &str) -> Option<u32> {
    match name {
        "z3" => Some(3),
        "z4" => Some(4),
        "z5" => Some(5),
        _ => None,
    }
}
