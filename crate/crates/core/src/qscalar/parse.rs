//! Parser for the scalar grammar used by the renderer and the CLI:
//! integers, the symbol `q`, `+ - * / ^`, parentheses, and integer
//! (possibly negative) exponents.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::QScalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..=i].iter().collect();
                out.push(Token::Int(lit.parse().map_err(|_| Error::Parse(lit.clone()))?));
            }
            'q' => out.push(Token::Q),
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<QScalar> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Token::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QScalar> {
        let mut acc = self.factor()?;
        while let Some(t) = self.peek() {
            match t {
                Token::Star => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Token::Slash => {
                    self.pos += 1;
                    acc = acc.checked_div(&self.factor()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<QScalar> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.base()?;
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    let e = self.exponent()?;
                    if e < 0 && base.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    Ok(base.pow(e))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let neg = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        match self.next() {
            Some(Token::Int(n)) => {
                let e: i64 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                Ok(if neg { -e } else { e })
            }
            t => Err(Error::Parse(format!("expected integer exponent, found {t:?}"))),
        }
    }

    fn base(&mut self) -> Result<QScalar> {
        match self.next() {
            Some(Token::Int(n)) => Ok(QScalar::from_bigint(n)),
            Some(Token::Q) => Ok(QScalar::q()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    t => Err(Error::Parse(format!("expected ')', found {t:?}"))),
                }
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

pub(crate) fn parse_qscalar(s: &str) -> Result<QScalar> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

/// Parse an exact rational such as `3/2`, `-5` or `(1+1)/3`; expressions
/// involving `q` are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let v = parse_qscalar(s)?;
    v.to_rational().ok_or_else(|| Error::Parse(format!("{s:?} is not a rational constant")))
}
