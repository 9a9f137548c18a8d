use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::atom::{SAtom, SCombo};
use super::relations::{parse_relation_name, RelInstance};
use crate::error::{Error, Result};
use crate::series::ZPoly;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Int(text.parse().expect("digits")));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
            continue;
        }
        out.push(match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{b7}' => Tok::Star,
            '^' => Tok::Caret,
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        });
        i += 1;
    }
    Ok(out)
}

/// An opaque symbol inside an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symbol {
    Atom(SAtom),
    Relation(RelInstance),
}

/// Parsed expression: a polynomial, or an ordered linear form in symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(ZPoly),
    Linear(Vec<(ZPoly, Symbol)>),
}

impl Value {
    fn linear(self) -> Result<Vec<(ZPoly, Symbol)>> {
        match self {
            Value::Linear(v) => Ok(v),
            Value::Poly(p) if p.is_zero() => Ok(Vec::new()),
            Value::Poly(p) => Err(Error::Parse(format!("bare polynomial {p} outside a symbol"))),
        }
    }
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    modulus: Option<u32>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let mut rhs = self.term()?;
            if neg {
                rhs = mul(Value::Poly(ZPoly::constant(-1)), rhs)?;
            }
            acc = add(acc, rhs)?;
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = mul(acc, rhs)?;
                }
                Some(Tok::Ident(_) | Tok::LParen) => {
                    let rhs = self.power()?;
                    acc = mul(acc, rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                mul(Value::Poly(ZPoly::constant(-1)), self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let e = match self.next() {
            Some(Tok::Int(n)) => n.to_i64().ok_or_else(|| Error::Parse("exponent too large".into()))?,
            got => return Err(Error::Parse(format!("expected exponent, found {got:?}"))),
        };
        let p = match base {
            Value::Poly(p) => p,
            Value::Linear(_) => return Err(Error::Parse("cannot raise a symbol to a power".into())),
        };
        Ok(Value::Poly(power(&p, if neg { -e } else { e })?))
    }

    fn args(&mut self) -> Result<Vec<i64>> {
        self.expect(Tok::LParen)?;
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::RParen) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                true
            } else {
                false
            };
            let v = match self.next() {
                Some(Tok::Int(n)) => n.to_i64().ok_or_else(|| Error::Parse("argument too large".into()))?,
                got => return Err(Error::Parse(format!("expected integer argument, found {got:?}"))),
            };
            out.push(if neg { -v } else { v });
            match self.next() {
                Some(Tok::Comma) => {}
                Some(Tok::RParen) => return Ok(out),
                got => return Err(Error::Parse(format!("expected ',' or ')', found {got:?}"))),
            }
        }
    }

    fn modulus(&self, what: &str) -> Result<u32> {
        self.modulus
            .ok_or_else(|| Error::Parse(format!("{what} needs a modulus context")))
    }

    fn primary(&mut self) -> Result<Value> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Value::Poly(ZPoly::monomial(n, 0, 0))),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "z" => Ok(Value::Poly(ZPoly::z())),
                "q" => Ok(Value::Poly(ZPoly::q())),
                "S" => {
                    let m = self.modulus("S(...)")?;
                    let atom = SAtom::new(m, self.args()?).map_err(|e| Error::Parse(e.to_string()))?;
                    Ok(Value::Linear(vec![(ZPoly::one(), Symbol::Atom(atom))]))
                }
                _ if name.starts_with('R') => {
                    let m = self.modulus(&name)?;
                    let id = parse_relation_name(&name, m)?;
                    let args = self.args()?;
                    if !id.arities().contains(&args.len()) {
                        return Err(Error::ArityMismatch {
                            relation: id.to_string(),
                            expected: id.arities()[0],
                            got: args.len(),
                        });
                    }
                    Ok(Value::Linear(vec![(ZPoly::one(), Symbol::Relation(RelInstance { id, args }))]))
                }
                _ => Err(Error::Parse(format!("unknown identifier {name:?}"))),
            },
            got => Err(Error::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

fn power(p: &ZPoly, e: i64) -> Result<ZPoly> {
    if e >= 0 {
        return Ok(p.pow(e as u32));
    }
    let mut it = p.iter();
    match (it.next(), it.next()) {
        (Some((&(0, qd), c)), None) if c.abs().is_one() => {
            let sign = if c.is_negative() && e % 2 != 0 { -1 } else { 1 };
            Ok(ZPoly::monomial(BigInt::from(sign), 0, -qd * -e))
        }
        _ => Err(Error::Parse(format!("cannot invert {p}"))),
    }
}

fn add(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Poly(x), Value::Poly(y)) => Value::Poly(&x + &y),
        (x, y) => {
            let mut v = x.linear()?;
            v.extend(y.linear()?);
            Value::Linear(v)
        }
    })
}

fn mul(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Poly(x), Value::Poly(y)) => Value::Poly(&x * &y),
        (Value::Poly(c), Value::Linear(v)) | (Value::Linear(v), Value::Poly(c)) => {
            Value::Linear(v.into_iter().map(|(k, s)| (&c * &k, s)).filter(|(k, _)| !k.is_zero()).collect())
        }
        (Value::Linear(_), Value::Linear(_)) => {
            return Err(Error::Parse("product of two symbols is not linear".into()))
        }
    })
}

/// Parses a full expression; `modulus` is needed when it mentions `S(...)` or relations.
pub fn parse_value(src: &str, modulus: Option<u32>) -> Result<Value> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        modulus,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

pub fn parse_poly(src: &str) -> Result<ZPoly> {
    match parse_value(src, None)? {
        Value::Poly(p) => Ok(p),
        Value::Linear(_) => Err(Error::Parse("expected a polynomial".into())),
    }
}

/// Parses an `S(...)` combination such as `q*z*S(2, 1, 0, 1) + S(1, 0, 1, 1)`.
pub fn parse_combo(src: &str, modulus: u32) -> Result<SCombo> {
    let mut out = SCombo::zero();
    for (c, s) in parse_value(src, Some(modulus))?.linear()? {
        match s {
            Symbol::Atom(a) => out.add_term(a, c),
            Symbol::Relation(r) => return Err(Error::Parse(format!("relation {r} inside a combination"))),
        }
    }
    Ok(out)
}

pub(crate) fn parse_relations(src: &str, modulus: u32) -> Result<Vec<(ZPoly, RelInstance)>> {
    parse_value(src, Some(modulus))?
        .linear()?
        .into_iter()
        .map(|(c, s)| match s {
            Symbol::Relation(r) => Ok((c, r)),
            Symbol::Atom(a) => Err(Error::Parse(format!("bare atom {a} inside a certificate"))),
        })
        .collect()
}

impl std::str::FromStr for ZPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(ZPoly::zero());
        }
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn polynomials() {
        let p = parse_poly("(q^2*z - q)*(1 + z)").unwrap();
        assert_eq!(p.to_string(), "-q - z*q + z*q^2 + z^2*q^2");
        assert_eq!(parse_poly("-q^3z^2 + q^2z").unwrap(), parse_poly("-q^3*z^2+q^2*z").unwrap());
        assert_eq!(parse_poly("q^-2 * q^3").unwrap(), ZPoly::q());
        assert!(parse_poly("(1+q)^-1").is_err());
        assert!(parse_poly("z +").is_err());
    }

    #[test]
    fn combos() {
        let c = parse_combo("q*z*S(2, 1, 0, 1) + S(1, 0, 1, 1) - S(0, 1, 1, 1)", 10).unwrap();
        assert_eq!(c.len(), 3);
        let d = parse_combo("S(1,0,1,1) + z q S(2,1,0,1) - S(0,1,1,1) + S(3,3,3,3) - S(3,3,3,3)", 10).unwrap();
        assert_eq!(c, d);
        assert!(parse_combo("S(1,2,3)", 10).is_err());
        assert!(parse_combo("S(1,1,1,1)*S(0,0,0,0)", 10).is_err());
        assert!(parse_combo("0", 10).unwrap().is_zero());
    }

    #[test]
    fn relations() {
        let r = parse_relations("(2*z*q - 3)*R1(0) + z*q*R2(0) + 2*(1 - z*q)*R3(0)", 6).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r[2].0, parse_poly("2 - 2*z*q").unwrap());
        assert!(matches!(parse_relations("R1(0,1)", 6), Err(Error::ArityMismatch { .. })));
    }

    proptest! {
        #[test]
        fn display_roundtrip(terms in prop::collection::vec((-5i64..6, 0u32..4, -4i64..8), 0..8)) {
            let mut p = ZPoly::zero();
            for (c, z, q) in terms {
                p.add_term(z, q, BigInt::from(c));
            }
            let back: ZPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
