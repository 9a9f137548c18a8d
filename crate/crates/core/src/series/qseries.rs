use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::floor::check_exponent;
use super::zcoeffs::ZCoeffs;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Truncated Laurent series in `q` with polynomial coefficients in `z`.
///
/// Coefficients are exact for every exponent in `floor..=order`; the
/// series is unknown beyond `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    floor: i64,
    order: i64,
    coeffs: Vec<ZCoeffs>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZPoint {
    Zero,
    One,
}

/// First coefficient on which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub qexp: i64,
    pub zdeg: u32,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[z^{} q^{}]: {} vs {}",
            self.zdeg, self.qexp, self.left, self.right
        )
    }
}

impl QSeries {
    pub fn zero(order: i64) -> Self {
        Self::with_floor(0.min(order + 1), order)
    }

    fn with_floor(floor: i64, order: i64) -> Self {
        let floor = floor.min(order + 1);
        let len = (order - floor + 1).max(0) as usize;
        QSeries {
            floor,
            order,
            coeffs: vec![ZCoeffs::zero(); len],
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(BigInt::one(), 0, 0, order)
    }

    pub fn monomial(c: BigInt, zdeg: u32, qdeg: i64, order: i64) -> Self {
        let mut s = Self::with_floor(qdeg.min(0), order);
        if qdeg <= order {
            s.coeffs[(qdeg - s.floor) as usize] = ZCoeffs::monomial(zdeg, c);
        }
        s
    }

    /// Builds a series from `(qexp, zdeg, coefficient)` triples; terms beyond
    /// `order` are dropped.
    pub fn from_terms<I>(order: i64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, u32, BigInt)>,
    {
        let terms: Vec<_> = terms.into_iter().filter(|t| t.0 <= order).collect();
        let floor = terms.iter().map(|t| t.0).min().unwrap_or(0).min(0);
        check_exponent(floor)?;
        let mut s = Self::with_floor(floor, order);
        for (q, z, c) in terms {
            s.slot_mut(q).add_assign(&ZCoeffs::monomial(z, c));
        }
        Ok(s)
    }

    /// Series whose `q^n` slot is `slots[n - floor]`.
    pub fn from_slots(floor: i64, order: i64, mut slots: Vec<ZCoeffs>) -> Self {
        let len = (order - floor + 1).max(0) as usize;
        slots.resize(len, ZCoeffs::zero());
        QSeries {
            floor,
            order,
            coeffs: slots,
        }
    }

    /// Univariate series `sum c[n] q^(n + shift)`.
    pub fn from_univariate(c: &[BigInt], shift: i64, order: i64) -> Self {
        let mut s = Self::with_floor(shift.min(0), order);
        for (n, v) in c.iter().enumerate() {
            let e = n as i64 + shift;
            if e > order {
                break;
            }
            if !v.is_zero() {
                s.coeffs[(e - s.floor) as usize] = ZCoeffs::constant(v.clone());
            }
        }
        s
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.floor + i as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZCoeffs::is_zero)
    }

    pub fn z_degree(&self) -> Option<u32> {
        self.coeffs.iter().filter_map(ZCoeffs::degree).max()
    }

    pub fn slot(&self, qexp: i64) -> Option<&ZCoeffs> {
        if qexp < self.floor || qexp > self.order {
            None
        } else {
            Some(&self.coeffs[(qexp - self.floor) as usize])
        }
    }

    fn slot_mut(&mut self, qexp: i64) -> &mut ZCoeffs {
        if qexp < self.floor {
            let extra = (self.floor - qexp) as usize;
            let mut v = vec![ZCoeffs::zero(); extra];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.floor = qexp;
        }
        &mut self.coeffs[(qexp - self.floor) as usize]
    }

    pub fn coeff(&self, qexp: i64, zdeg: u32) -> BigInt {
        self.slot(qexp).map(|s| s.coeff(zdeg)).unwrap_or_default()
    }

    /// Nonzero `(qexp, zdeg, coefficient)` triples, ascending in `(qexp, zdeg)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &BigInt)> {
        let floor = self.floor;
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(move |(i, s)| s.iter().map(move |(z, c)| (floor + i as i64, z, c)))
    }

    pub fn truncate(&self, order: i64) -> Result<QSeries> {
        if order > self.order {
            return Err(Error::InsufficientOrder {
                requested: order,
                available: self.order,
            });
        }
        let mut s = self.clone();
        let len = (order - s.floor + 1).max(0) as usize;
        s.coeffs.truncate(len);
        s.order = order;
        s.floor = s.floor.min(order + 1);
        Ok(s)
    }

    pub fn scale(&self, c: &BigInt) -> QSeries {
        QSeries {
            floor: self.floor,
            order: self.order,
            coeffs: self.coeffs.iter().map(|s| s.scale(c)).collect(),
        }
    }

    /// Multiplies by the exact polynomial `p`.
    pub fn mul_zpoly(&self, p: &ZPoly) -> QSeries {
        let Some(dmin) = p.min_qdeg() else {
            return QSeries::zero(self.order);
        };
        let order = self.order + dmin;
        let mut out = Self::with_floor((self.floor + dmin).min(0), order);
        for ((zd, qd), c) in p.iter() {
            for (i, s) in self.coeffs.iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                let e = self.floor + i as i64 + qd;
                if e > order {
                    break;
                }
                out.slot_mut(e).add_scaled(s, c, *zd);
            }
        }
        out
    }

    /// Multiplies by `c z^zdeg q^qdeg`.
    pub fn mul_monomial(&self, c: &BigInt, zdeg: u32, qdeg: i64) -> QSeries {
        self.mul_zpoly(&ZPoly::monomial(c.clone(), zdeg, qdeg))
    }

    /// Multiplicative inverse; the lowest nonzero coefficient must be ±q^d.
    pub fn invert(&self) -> Result<QSeries> {
        let d = self.valuation().ok_or(Error::NonUnitLeadingTerm)?;
        let lead = self.slot(d).expect("valuation slot");
        let u = lead.unit_sign().ok_or(Error::NonUnitLeadingTerm)?;
        check_exponent(-d)?;
        let n = self.order - d;
        let unit = BigInt::from(u);
        let a: Vec<&ZCoeffs> = (0..=n).map(|i| self.slot(i + d).expect("slot")).collect();
        let mut b: Vec<ZCoeffs> = Vec::with_capacity(n as usize + 1);
        b.push(ZCoeffs::constant(unit.clone()));
        for m in 1..=n as usize {
            let mut acc = ZCoeffs::zero();
            for i in 1..=m {
                acc.add_product(a[i], &b[m - i]);
            }
            b.push(acc.scale(&-&unit));
        }
        let order = self.order - 2 * d;
        let mut out = Self::with_floor(-d, order);
        for (i, s) in b.into_iter().enumerate() {
            let e = i as i64 - d;
            if e > order {
                break;
            }
            *out.slot_mut(e) = s;
        }
        Ok(out)
    }

    /// Substitutes `z -> z q^j`.
    ///
    /// For `j < 0` the known range shrinks by `|j|` times the largest stored
    /// z-degree, which is exact when the unknown tail carries no higher
    /// z-degree (polynomial inputs, for instance).
    pub fn shift_z(&self, j: i64) -> Result<QSeries> {
        if j == 0 {
            return Ok(self.clone());
        }
        let order = if j > 0 {
            self.order
        } else {
            self.order + j * self.z_degree().unwrap_or(0) as i64
        };
        let mut lowest = self.floor.min(0);
        for (q, z, _) in self.terms() {
            let e = q + j * z as i64;
            if e <= order {
                lowest = lowest.min(e);
            }
        }
        check_exponent(lowest)?;
        let mut out = Self::with_floor(lowest, order);
        for (i, s) in self.coeffs.iter().enumerate() {
            let q = self.floor + i as i64;
            for (z, c) in s.iter() {
                let e = q + j * z as i64;
                if e <= order {
                    out.slot_mut(e).add_scaled(&ZCoeffs::constant(c.clone()), &BigInt::one(), z);
                }
            }
        }
        Ok(out)
    }

    pub fn eval_z(&self, point: ZPoint) -> QSeries {
        QSeries {
            floor: self.floor,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|s| {
                    ZCoeffs::constant(match point {
                        ZPoint::Zero => s.eval_zero(),
                        ZPoint::One => s.eval_one(),
                    })
                })
                .collect(),
        }
    }

    /// Coefficients of a z-free series from `q^0` through `q^order`.
    pub fn univariate(&self) -> Vec<BigInt> {
        (0..=self.order).map(|e| self.coeff(e, 0)).collect()
    }

    /// Compares through `q^n`; `Ok(None)` on agreement.
    pub fn equal_to_order(a: &QSeries, b: &QSeries, n: i64) -> Result<Option<Divergence>> {
        let available = a.order.min(b.order);
        if n > available {
            return Err(Error::InsufficientOrder {
                requested: n,
                available,
            });
        }
        let lo = a.floor.min(b.floor);
        let empty = ZCoeffs::zero();
        for e in lo..=n {
            let x = a.slot(e).unwrap_or(&empty);
            let y = b.slot(e).unwrap_or(&empty);
            if x != y {
                let top = x.as_slice().len().max(y.as_slice().len()) as u32;
                for z in 0..top {
                    let (l, r) = (x.coeff(z), y.coeff(z));
                    if l != r {
                        return Ok(Some(Divergence {
                            qexp: e,
                            zdeg: z,
                            left: l,
                            right: r,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    fn add_impl(&self, other: &QSeries, negate: bool) -> QSeries {
        let order = self.order.min(other.order);
        let mut out = Self::with_floor(self.floor.min(other.floor), order);
        for (src, neg) in [(self, false), (other, negate)] {
            for (i, s) in src.coeffs.iter().enumerate() {
                let e = src.floor + i as i64;
                if e > order {
                    break;
                }
                if neg {
                    out.slot_mut(e).sub_assign(s);
                } else {
                    out.slot_mut(e).add_assign(s);
                }
            }
        }
        out
    }

    fn mul_impl(&self, other: &QSeries) -> QSeries {
        let va = self.valuation().unwrap_or(self.order + 1);
        let vb = other.valuation().unwrap_or(other.order + 1);
        let order = self
            .order
            .min(other.order)
            .min(self.order + vb)
            .min(other.order + va);
        let mut out = Self::with_floor((self.floor + other.floor).min(0), order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.floor + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ea + other.floor + j as i64;
                if e > order {
                    break;
                }
                if !b.is_zero() {
                    out.slot_mut(e).add_product(a, b);
                }
            }
        }
        out
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.add_impl(rhs, false)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.add_impl(rhs, true)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.mul_impl(rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            floor: self.floor,
            order: self.order,
            coeffs: self.coeffs.iter().map(ZCoeffs::neg).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, z, c) in self.terms() {
            let body = super::zpoly::format_term(c, z, q, first);
            f.write_str(&body)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}
