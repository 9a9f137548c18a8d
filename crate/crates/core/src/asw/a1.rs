//! Rank-one identities: truncated Gordon-type sums, their finite
//! variants, the limits `X(k, t)` and a three-way bivariate identity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::infinite::InfIndex;
use crate::error::{Error, Result};
use crate::qfunctions::{pochhammer, q_poch_inf, Length, Monomial};
use crate::series::{uni, QSeries, ZCoeffs, ZPoly};

fn inv_zq_poch(a: i64, n: u32, order: i64) -> Result<QSeries> {
    pochhammer(Monomial::zq_pow(a), 1, Length::Finite(n), order)?.invert()
}

fn qbin(n: i64, k: i64) -> Vec<BigInt> {
    uni::qbinom_poly(n, k, 1)
}

/// Accumulates `z^zdeg q^shift * kernel` into per-degree univariate rows.
struct Rows {
    order: i64,
    rows: Vec<Vec<BigInt>>,
}

impl Rows {
    fn new(order: i64) -> Self {
        Rows { order, rows: Vec::new() }
    }

    fn add(&mut self, zdeg: usize, shift: i64, kernel: &[BigInt]) {
        if shift > self.order {
            return;
        }
        while self.rows.len() <= zdeg {
            self.rows.push(vec![BigInt::zero(); self.order as usize + 1]);
        }
        uni::add_shifted(&mut self.rows[zdeg], kernel, shift as usize, &BigInt::one());
    }

    fn into_series(self) -> QSeries {
        let n = self.order as usize + 1;
        let mut slots = vec![Vec::new(); n];
        for (z, row) in self.rows.into_iter().enumerate() {
            for (e, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    let slot: &mut Vec<BigInt> = &mut slots[e];
                    slot.resize(slot.len().max(z + 1), BigInt::zero());
                    slot[z] = c;
                }
            }
        }
        QSeries::from_slots(0, self.order, slots.into_iter().map(ZCoeffs::from_vec).collect())
    }
}

fn check_t(t: InfIndex) -> Result<()> {
    if t == InfIndex::Finite(0) {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    Ok(())
}

/// `sum over n0 >= n1 >= ... of prod z^(n_i) q^(n_i^2 + [i >= t] n_i) [n_(i-1), n_i]`.
pub fn trunc_infinite_ag(t: InfIndex, n0: u32, order: i64) -> Result<QSeries> {
    check_t(t)?;
    fn rec(i: u32, prev: i64, e: i64, z: usize, run: &[BigInt], t: InfIndex, rows: &mut Rows) {
        let order = rows.order;
        for n in 0..=prev {
            if n == 0 {
                rows.add(z, e, run);
                continue;
            }
            let linear = match t {
                InfIndex::Finite(t) if i >= t => n,
                _ => 0,
            };
            let ne = e + n * n + linear;
            if ne > order {
                break;
            }
            let keep = (order - ne) as usize;
            let next = uni::mul(run, &qbin(prev, n), keep);
            rec(i + 1, n, ne, z + n as usize, &next, t, rows);
        }
    }
    let mut rows = Rows::new(order);
    rec(1, n0 as i64, 0, 0, &uni::one(order as usize), t, &mut rows);
    Ok(rows.into_series())
}

/// `(1 - z q^(n0+1) - z^t q^t (1 - q^n0)) / (zq; q)_(n0+1)`.
pub fn trunc_infinite_ag_rhs(t: InfIndex, n0: u32, order: i64) -> Result<QSeries> {
    check_t(t)?;
    let mut num = &ZPoly::one() - &ZPoly::monomial(BigInt::one(), 1, n0 as i64 + 1);
    if let InfIndex::Finite(t) = t {
        let zt = ZPoly::monomial(BigInt::one(), t, t as i64);
        num = &num - &(&zt * &(&ZPoly::one() - &ZPoly::q_pow(n0 as i64)));
    }
    Ok(inv_zq_poch(1, n0 + 1, order)?.mul_zpoly(&num))
}

fn check_kt(k: u32, t: u32) -> Result<()> {
    if k == 0 || t == 0 || t > k + 1 {
        return Err(Error::InvalidArgument(format!("need k >= 1 and 1 <= t <= k + 1, got k = {k}, t = {t}")));
    }
    Ok(())
}

/// Shared walker for the finite Gordon-type sums and their `n0 -> inf` limit.
fn ag_walk(k: u32, t: u32, n0: Option<u32>, order: i64) -> Vec<BigInt> {
    let n = order as usize;
    let inv_q2 = uni::inv_poch_table(2, 1, n + 1, n);
    let inv_q = uni::inv_poch_table(1, 1, n + 1, n);
    let mut acc = vec![BigInt::zero(); n + 1];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: u32, k: u32, t: u32, prev: i64, e: i64, run: &[BigInt], order: i64,
        inv_q2: &[Vec<BigInt>], acc: &mut [BigInt],
    ) {
        if i > k {
            let tail = uni::mul(run, &inv_q2[prev as usize], (order - e) as usize);
            uni::add_shifted(acc, &tail, e as usize, &BigInt::one());
            return;
        }
        for n in 0..=prev {
            let ne = e + n * n + if i >= t { n } else { 0 };
            if ne > order {
                break;
            }
            let next = uni::mul(run, &qbin(prev, n), (order - ne) as usize);
            rec(i + 1, k, t, n, ne, &next, order, inv_q2, acc);
        }
    }
    match n0 {
        Some(n0) => rec(1, k, t, n0 as i64, 0, &uni::one(n), order, &inv_q2, &mut acc),
        None => {
            let top = ((order as f64).sqrt() as i64) + 2;
            for n1 in 0..=top {
                let e = n1 * n1 + if t <= 1 { n1 } else { 0 };
                if e > order {
                    break;
                }
                let run = inv_q[n1 as usize].clone();
                rec(2, k, t, n1, e, &run, order, &inv_q2, &mut acc);
            }
        }
    }
    acc
}

/// `sum q^(n_1^2 + ... + n_k^2 + n_t + ... + n_k) prod [n_(i-1), n_i] / (q^2; q)_(n_k)`.
pub fn ag_finite_sum(k: u32, t: u32, n0: u32, order: i64) -> Result<QSeries> {
    check_kt(k, t)?;
    Ok(QSeries::from_univariate(&ag_walk(k, t, Some(n0), order), 0, order))
}

/// `(1 - q^t - q^(n0+1) (1 - q^(t-1))) / (q; q)_(n0+1)`.
pub fn ag_finite_rhs(k: u32, t: u32, n0: u32, order: i64) -> Result<QSeries> {
    check_kt(k, t)?;
    let t = t as i64;
    let n0 = n0 as i64;
    let num = &(&ZPoly::one() - &ZPoly::q_pow(t))
        - &(&ZPoly::q_pow(n0 + 1) * &(&ZPoly::one() - &ZPoly::q_pow(t - 1)));
    let den = pochhammer(Monomial::q_pow(1), 1, Length::Finite(n0 as u32 + 1), order)?;
    Ok(den.invert()?.mul_zpoly(&num))
}

/// `X(k, t)`, the `n0 -> inf` limit of [`ag_finite_sum`].
pub fn x_limit(k: u32, t: u32, order: i64) -> Result<QSeries> {
    check_kt(k, t)?;
    Ok(QSeries::from_univariate(&ag_walk(k, t, None, order), 0, order))
}

/// `1/(q^2; q)_inf`.
pub fn x_limit_product(order: i64) -> Result<QSeries> {
    q_poch_inf(2, 1, order).invert()
}

/// The three expressions of the bivariate `(n, m)` identity, each equal to
/// the others.
pub fn war_gen_sides(n: u32, m: u32, order: i64) -> Result<[QSeries; 3]> {
    let term = |k: u32, top: u32, other: u32| -> Result<QSeries> {
        let num = &ZPoly::monomial(BigInt::one(), k, (k * k) as i64) * &poly(&qbin(top as i64, k as i64));
        Ok(inv_zq_poch(1, other + k, order)?.mul_zpoly(&num))
    };
    let mut first = QSeries::zero(order);
    for k in 0..=n {
        first = &first + &term(k, n, m)?;
    }
    let mut second = QSeries::zero(order);
    for k in 0..=m {
        second = &second + &term(k, m, n)?;
    }
    let mut inner = ZPoly::zero();
    for i in 0..=m {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let e = (i * n) as i64 + (i * (i + 1) / 2) as i64;
        let head = &ZPoly::monomial(sign, i, e) * &poly(&qbin(m as i64, i as i64));
        let mut sum = ZPoly::zero();
        for k in 0..=m - i {
            let t = &ZPoly::monomial(BigInt::one(), k, (k * (k + i)) as i64)
                * &poly(&qbin((m - i) as i64, k as i64));
            sum = &sum + &t;
        }
        inner = &inner + &(&head * &sum);
    }
    let third = inv_zq_poch(1, n + m, order)?.mul_zpoly(&inner);
    Ok([first, second, third])
}

/// Both sides of `sum z^k q^(k^2) [n, k] / (zq^2; q)_k = (1 + zq - zq^(n+1)) / (zq^2; q)_n`.
pub fn bincoeff_sides(n: u32, order: i64) -> Result<[QSeries; 2]> {
    let mut lhs = QSeries::zero(order);
    for k in 0..=n {
        let num = &ZPoly::monomial(BigInt::one(), k, (k * k) as i64) * &poly(&qbin(n as i64, k as i64));
        lhs = &lhs + &inv_zq_poch(2, k, order)?.mul_zpoly(&num);
    }
    let num = &(&ZPoly::one() + &ZPoly::monomial(BigInt::one(), 1, 1))
        - &ZPoly::monomial(BigInt::one(), 1, n as i64 + 1);
    let rhs = inv_zq_poch(2, n, order)?.mul_zpoly(&num);
    Ok([lhs, rhs])
}

fn poly(c: &[BigInt]) -> ZPoly {
    let mut p = ZPoly::zero();
    for (e, v) in c.iter().enumerate() {
        p.add_term(0, e as i64, v.clone());
    }
    p
}
