//! Element grammar: integers, `a/b` literals and polynomial expressions
//! built with `+ - * ^` and parentheses over declared variables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{MPoly, Monomial};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Op(char),
}

fn syntax(text: &str, reason: impl Into<String>) -> Error {
    Error::ElementSyntax {
        text: text.to_string(),
        reason: reason.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
            let mut value = BigRational::from_integer(num);
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let ds = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(syntax(text, "expected denominator after `/`"));
                }
                let den: BigInt = chars[ds..i].iter().collect::<String>().parse().unwrap();
                if den.is_zero() {
                    return Err(syntax(text, "zero denominator"));
                }
                value /= BigRational::from_integer(den);
            }
            out.push(Tok::Num(value));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(syntax(text, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MPoly> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) if n.is_integer() => {
                    self.pos += 1;
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| syntax(self.text, "exponent too large"))?;
                    return Ok(base.pow(e, self.vars.len()));
                }
                _ => return Err(syntax(self.text, "expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly> {
        let nv = self.vars.len();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MPoly::constant(nv, n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| syntax(self.text, format!("unknown variable `{name}`")))?;
                Ok(MPoly::term(BigRational::one(), Monomial::var(nv, i)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(syntax(self.text, "missing `)`"));
                }
                Ok(e)
            }
            Some(t) => Err(syntax(self.text, format!("unexpected token {t:?}"))),
            None => Err(syntax(self.text, "unexpected end of input")),
        }
    }
}

/// Parse an element expression into a polynomial over `QQ` in `vars`.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<MPoly> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(text, "empty expression"));
    }
    let mut p = Parser {
        text,
        toks,
        pos: 0,
        vars,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(text, "trailing input"));
    }
    Ok(e)
}
