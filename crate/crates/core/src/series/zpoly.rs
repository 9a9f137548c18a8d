use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::qseries::QSeries;
use crate::error::Result;

/// Exact Laurent polynomial in `q`, polynomial in `z`; keys are `(zdeg, qdeg)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZPoly {
    terms: BTreeMap<(u32, i64), BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0, 0)
    }

    pub fn z() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(BigInt::one(), 0, e)
    }

    pub fn monomial(c: BigInt, zdeg: u32, qdeg: i64) -> Self {
        let mut p = ZPoly::zero();
        p.add_term(zdeg, qdeg, c);
        p
    }

    pub fn add_term(&mut self, zdeg: u32, qdeg: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (zdeg, qdeg);
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, zdeg: u32, qdeg: i64) -> BigInt {
        self.terms.get(&(zdeg, qdeg)).cloned().unwrap_or_default()
    }

    pub fn min_qdeg(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).min()
    }

    pub fn max_qdeg(&self) -> Option<i64> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn max_zdeg(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// `Some(±1)` when the polynomial is the constant ±1.
    pub fn unit_sign(&self) -> Option<i8> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if *k == (0, 0) && c.abs().is_one() {
            Some(if c.is_positive() { 1 } else { -1 })
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `z -> z q^j`.
    pub fn shift_z(&self, j: i64) -> ZPoly {
        ZPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(z, q), c)| ((z, q + j * z as i64), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `z -> 1`.
    pub fn eval_z_one(&self) -> ZPoly {
        let mut out = ZPoly::zero();
        for (&(_, q), c) in &self.terms {
            out.add_term(0, q, c.clone());
        }
        out
    }

    /// `(z q^a; q)_n = prod_{t<n} (1 - z q^(a+t))`.
    pub fn z_pochhammer(a: i64, n: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        for t in 0..n as i64 {
            let factor = &ZPoly::one() - &ZPoly::monomial(BigInt::one(), 1, a + t);
            acc = &acc * &factor;
        }
        acc
    }

    pub fn to_series(&self, order: i64) -> Result<QSeries> {
        QSeries::from_terms(order, self.terms.iter().map(|(&(z, q), c)| (q, z, c.clone())))
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (&(z, q), c) in &rhs.terms {
            out.add_term(z, q, c.clone());
        }
        out
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (&(z, q), c) in &rhs.terms {
            out.add_term(z, q, -c);
        }
        out
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (&(za, qa), a) in &self.terms {
            for (&(zb, qb), b) in &rhs.terms {
                out.add_term(za + zb, qa + qb, a * b);
            }
        }
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ZPoly {
            type Output = ZPoly;
            fn $m(self, rhs: ZPoly) -> ZPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for ZPoly {
    fn from(c: i64) -> Self {
        ZPoly::constant(c)
    }
}

pub(crate) fn format_monomial(zdeg: u32, qdeg: i64) -> String {
    let mut parts = Vec::new();
    match zdeg {
        0 => {}
        1 => parts.push("z".to_string()),
        d => parts.push(format!("z^{d}")),
    }
    match qdeg {
        0 => {}
        1 => parts.push("q".to_string()),
        d => parts.push(format!("q^{d}")),
    }
    parts.join("*")
}

pub(crate) fn format_term(c: &BigInt, zdeg: u32, qdeg: i64, first: bool) -> String {
    let mono = format_monomial(zdeg, qdeg);
    let neg = c.is_negative();
    let mag = c.abs();
    let body = if mono.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        mono
    } else {
        format!("{mag}*{mono}")
    };
    match (first, neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(z, q), c)) in self.terms.iter().enumerate() {
            f.write_str(&format_term(c, z, q, i == 0))?;
        }
        Ok(())
    }
}
