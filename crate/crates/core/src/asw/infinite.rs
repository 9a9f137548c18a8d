use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::kernel::Kernels;
use super::spec::ModClass;
use crate::error::Result;
use crate::qfunctions::q_poch_inf;
use crate::series::{uni, QSeries, ZCoeffs, ZPoly};

/// Index of a semi-infinite shift vector `e_j`, `j >= -1`, with `e_inf = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EIndex {
    Finite(i64),
    Infinity,
}

impl EIndex {
    /// Entry `i >= 1` of `e_j`.
    fn entry(self, i: usize) -> i64 {
        match self {
            EIndex::Infinity => 0,
            EIndex::Finite(-1) => {
                if i == 1 {
                    2
                } else {
                    1
                }
            }
            EIndex::Finite(j) => {
                if (i as i64) <= j {
                    0
                } else {
                    1
                }
            }
        }
    }
}

/// Part of the profile `(inf, a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InfIndex {
    Finite(u32),
    Infinity,
}

impl InfIndex {
    fn e(self) -> EIndex {
        match self {
            InfIndex::Finite(a) => EIndex::Finite(a as i64),
            InfIndex::Infinity => EIndex::Infinity,
        }
    }

    fn e_pred(self) -> EIndex {
        match self {
            InfIndex::Finite(a) => EIndex::Finite(a as i64 - 1),
            InfIndex::Infinity => EIndex::Infinity,
        }
    }

    fn is_zero(self) -> bool {
        self == InfIndex::Finite(0)
    }
}

impl std::fmt::Display for InfIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InfIndex::Finite(a) => write!(f, "{a}"),
            InfIndex::Infinity => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for InfIndex {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(InfIndex::Infinity),
            t => t
                .parse()
                .map(InfIndex::Finite)
                .map_err(|_| crate::error::Error::Parse(format!("bad index {s:?}"))),
        }
    }
}

struct InfWalk {
    rho: EIndex,
    sigma: EIndex,
    order: i64,
    kernels: Kernels,
}

impl InfWalk {
    fn rec(
        &mut self,
        i: usize,
        prev: Option<(i64, i64)>,
        partial: i64,
        running: Option<Arc<Vec<BigInt>>>,
        r1: u32,
        sink: &mut dyn FnMut(u32, i64, &[BigInt]),
    ) {
        let budget = self.order - partial;
        let (cap_r, cap_s) = prev.unwrap_or_else(|| {
            let c = ((2.0 * budget.max(0) as f64).sqrt()).ceil() as i64 + 1;
            (c, c)
        });
        let (pr, ps) = prev.unwrap_or((0, 0));
        for r in 0..=cap_r {
            for s in 0..=cap_s {
                let f = r * r - r * s + s * s + self.rho.entry(i) * r + self.sigma.entry(i) * s;
                if f > budget {
                    continue;
                }
                let keep = (budget - f) as usize;
                let factor = if prev.is_some() {
                    let pp = self.kernels.pair((pr - r) as usize, (ps - s) as usize);
                    match &running {
                        None => Some(pp),
                        Some(run) => Some(Arc::new(uni::mul(run, &pp, keep))),
                    }
                } else {
                    running.clone()
                };
                let top = if prev.is_none() { r as u32 } else { r1 };
                if r == 0 && s == 0 {
                    match factor {
                        None => sink(top, partial, &[BigInt::one()]),
                        Some(k) => sink(top, partial, &k[..=keep.min(k.len() - 1)]),
                    }
                } else {
                    self.rec(i + 1, Some((r, s)), partial + f, factor, top, sink);
                }
            }
        }
    }
}

/// `S_inf(e_a | e_b)(z, q)` through `q^order`.
pub fn eval_s_infinite(a: EIndex, b: EIndex, order: i64) -> Result<QSeries> {
    let n = order.max(0) as usize;
    let mut w = InfWalk {
        rho: a,
        sigma: b,
        order,
        kernels: Kernels::new(n, ModClass::Plus),
    };
    let mut acc: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    w.rec(1, None, 0, None, 0, &mut |r1, e, k| {
        let row = acc.entry(r1).or_insert_with(|| vec![BigInt::zero(); n + 1]);
        uni::add_shifted(row, k, e as usize, &BigInt::one());
    });
    let mut slots = vec![Vec::new(); n + 1];
    for (r1, mut row) in acc {
        uni::div_one_minus(&mut row, 1);
        for (e, c) in row.into_iter().enumerate() {
            if !c.is_zero() {
                let slot: &mut Vec<BigInt> = &mut slots[e];
                slot.resize(slot.len().max(r1 as usize + 1), BigInt::zero());
                slot[r1 as usize] = c;
            }
        }
    }
    Ok(QSeries::from_slots(
        0,
        order,
        slots.into_iter().map(ZCoeffs::from_vec).collect(),
    ))
}

/// `H_(inf, a, b)(z, q)` from the semi-infinite seed expression.
pub fn eval_h_infinite(a: InfIndex, b: InfIndex, order: i64) -> Result<QSeries> {
    let minus_q = ZPoly::monomial(-BigInt::one(), 0, 1);
    let s = |x: EIndex, y: EIndex| eval_s_infinite(x, y, order);
    Ok(if !a.is_zero() && !b.is_zero() {
        &s(a.e(), b.e())? + &s(a.e_pred(), b.e_pred())?.mul_zpoly(&minus_q)
    } else if b.is_zero() {
        s(a.e(), EIndex::Finite(0))?
    } else {
        let coeff = &minus_q * &(&ZPoly::one() - &ZPoly::z());
        &s(EIndex::Finite(0), b.e())? + &s(EIndex::Finite(-1), b.e_pred())?.mul_zpoly(&coeff)
    })
}

/// `(1 - q^(a+1)) (1 - q^(b+1)) (1 - q^(a+b+2)) / (q; q)_inf^3` with `q^inf = 0`.
pub fn h_infinite_conjecture(a: InfIndex, b: InfIndex, order: i64) -> Result<QSeries> {
    let factor = |e: Option<u32>| match e {
        Some(e) => &ZPoly::one() - &ZPoly::q_pow(e as i64),
        None => ZPoly::one(),
    };
    let fa = match a {
        InfIndex::Finite(x) => Some(x),
        InfIndex::Infinity => None,
    };
    let fb = match b {
        InfIndex::Finite(x) => Some(x),
        InfIndex::Infinity => None,
    };
    let num = &(&factor(fa.map(|x| x + 1)) * &factor(fb.map(|x| x + 1)))
        * &factor(fa.zip(fb).map(|(x, y)| x + y + 2));
    let p = q_poch_inf(1, 1, order);
    let inv = (&(&p * &p) * &p).invert()?;
    inv.mul_zpoly(&num).truncate(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ZPoint;

    #[test]
    fn s_infinite_e0_e0_product() {
        // S_inf(e0|e0)(1,q) = 1/((q)_inf (q^2;q)_inf (q^3;q)_inf)
        let s = eval_s_infinite(EIndex::Finite(0), EIndex::Finite(0), 25)
            .unwrap()
            .eval_z(ZPoint::One);
        let den = &(&q_poch_inf(1, 1, 25) * &q_poch_inf(2, 1, 25)) * &q_poch_inf(3, 1, 25);
        let expected = den.invert().unwrap();
        assert_eq!(QSeries::equal_to_order(&s, &expected, 25).unwrap(), None);
    }

    #[test]
    fn s_infinite_symmetric_at_one() {
        let a = eval_s_infinite(EIndex::Finite(1), EIndex::Finite(-1), 18).unwrap();
        let b = eval_s_infinite(EIndex::Finite(-1), EIndex::Finite(1), 18).unwrap();
        let (a1, b1) = (a.eval_z(ZPoint::One), b.eval_z(ZPoint::One));
        assert_eq!(QSeries::equal_to_order(&a1, &b1, 18).unwrap(), None);
        assert_ne!(QSeries::equal_to_order(&a, &b, 18).unwrap(), None);
    }

    #[test]
    fn conjecture_at_far_indices() {
        let c = h_infinite_conjecture(InfIndex::Infinity, InfIndex::Infinity, 10).unwrap();
        let p = q_poch_inf(1, 1, 10);
        let expected = (&(&p * &p) * &p).invert().unwrap();
        assert_eq!(QSeries::equal_to_order(&c, &expected, 10).unwrap(), None);
    }
}
