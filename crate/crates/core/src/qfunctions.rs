//! Pochhammer symbols, Jacobi theta products, Gaussian binomials and the
//! product sides of the cylindric partition generating functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{check_exponent, uni, QSeries, ZPoly};

/// `±z^zdeg q^qdeg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub negative: bool,
    pub zdeg: u32,
    pub qdeg: i64,
}

impl Monomial {
    pub fn q_pow(qdeg: i64) -> Self {
        Monomial { negative: false, zdeg: 0, qdeg }
    }

    pub fn zq_pow(qdeg: i64) -> Self {
        Monomial { negative: false, zdeg: 1, qdeg }
    }

    fn to_zpoly(self) -> ZPoly {
        let c = if self.negative { -BigInt::one() } else { BigInt::one() };
        ZPoly::monomial(c, self.zdeg, self.qdeg)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u32),
    Infinite,
}

/// `(a; q^base)_n = prod_{t<n} (1 - a q^(t*base))`.
pub fn pochhammer(a: Monomial, base: u32, n: Length, order: i64) -> Result<QSeries> {
    if base == 0 {
        return Err(Error::InvalidArgument("pochhammer base must be positive".into()));
    }
    let count = match n {
        Length::Finite(n) => n as i64,
        Length::Infinite => {
            let converges = a.qdeg >= 1 || (a.zdeg >= 1 && a.qdeg >= 0);
            if !converges {
                return Err(Error::DivergentProduct);
            }
            if a.qdeg > order {
                0
            } else {
                (order - a.qdeg) / base as i64 + 1
            }
        }
    };
    let mut lowest = 0i64;
    for t in 0..count {
        lowest += (a.qdeg + t * base as i64).min(0);
    }
    check_exponent(lowest)?;
    let work = order - lowest;
    let mut acc = QSeries::one(work);
    for t in 0..count {
        let e = a.qdeg + t * base as i64;
        if e > work {
            break;
        }
        let factor = &ZPoly::one() - &Monomial { qdeg: e, ..a }.to_zpoly();
        acc = acc.mul_zpoly(&factor);
    }
    acc.truncate(order.min(acc.order()))
}

/// `(q^a; q^b)_inf` as a z-free series, `a, b >= 1`.
pub fn q_poch_inf(a: u32, b: u32, order: i64) -> QSeries {
    QSeries::from_univariate(&uni::poch_inf(a as usize, b as usize, order.max(0) as usize), 0, order)
}

/// `theta(q^j; q^m) = (q^j; q^m)_inf (q^(m-j); q^m)_inf`.
///
/// Exponents outside `(0, m)` are reduced with
/// `theta(q^(tm) x) = (-1)^t x^(-t) q^(-m t(t-1)/2) theta(x)`.
pub fn theta(j: i64, m: i64, order: i64) -> Result<QSeries> {
    if m <= 0 {
        return Err(Error::InvalidArgument("theta modulus must be positive".into()));
    }
    let r = j.rem_euclid(m);
    if r == 0 {
        return Err(Error::ZeroTheta { j, modulus: m });
    }
    let t = (j - r) / m;
    let shift = -r * t - m * t * (t - 1) / 2;
    check_exponent(shift.min(0))?;
    let inner_order = order - shift;
    if inner_order < 0 {
        return Ok(QSeries::zero(order));
    }
    let n = inner_order as usize;
    let core = uni::mul(
        &uni::poch_inf(r as usize, m as usize, n),
        &uni::poch_inf((m - r) as usize, m as usize, n),
        n,
    );
    let sign = if t.rem_euclid(2) == 1 { -1 } else { 1 };
    let s = QSeries::from_univariate(&core, shift, order);
    Ok(if sign < 0 { -&s } else { s })
}

/// Product of `theta(q^j; q^m)^e` over the given `(j, e)` pairs.
pub fn theta_product(factors: &[(i64, i32)], m: i64, order: i64) -> Result<QSeries> {
    let mut acc = QSeries::one(order);
    for &(j, e) in factors {
        let th = theta(j, m, order + 2 * m)?;
        let f = if e >= 0 { th } else { th.invert()? };
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &f;
        }
    }
    acc.truncate(order.min(acc.order()))
}

/// Gaussian binomial `[n, k]_{q^base}`; zero unless `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64, base: u32) -> ZPoly {
    let mut p = ZPoly::zero();
    for (e, c) in uni::qbinom_poly(n, k, base as usize).into_iter().enumerate() {
        if !c.is_zero() {
            p.add_term(0, e as i64, c);
        }
    }
    p
}

fn power(s: &QSeries, e: u32) -> QSeries {
    let mut acc = QSeries::one(s.order());
    for _ in 0..e {
        acc = &acc * s;
    }
    acc
}

/// `(q^m; q^m)_inf^2 / (q; q)_inf^3`.
fn pi_prefactor(m: i64, order: i64) -> Result<QSeries> {
    let base = power(&q_poch_inf(m as u32, m as u32, order), 2);
    let inv = power(&q_poch_inf(1, 1, order), 3).invert()?;
    Ok(&base * &inv)
}

/// `F_c(1, q)` for a profile `c` of level `l`, as a product of theta
/// functions with modulus `l + 3`.
pub fn borodin_product(c: [u32; 3], order: i64) -> Result<QSeries> {
    let m = (c[0] + c[1] + c[2] + 3) as i64;
    let (c1, c2) = (c[1] as i64, c[2] as i64);
    let th = theta_product(&[(1 + c1, 1), (2 + c1 + c2, 1), (1 + c2, 1)], m, order)?;
    Ok(&pi_prefactor(m, order)? * &th)
}

/// `pi_c = (q^3k; q^3k)^2 / (q)^3 * theta(q^(c0+1), q^(c1+1), q^(c2+1); q^3k)`
/// for a composition `c` of `3k - 3`.
pub fn pi_product(k: u32, c: [u32; 3], order: i64) -> Result<QSeries> {
    check_pi_args(k, c)?;
    let m = 3 * k as i64;
    let f: Vec<(i64, i32)> = c.iter().map(|&ci| (ci as i64 + 1, 1)).collect();
    Ok(&pi_prefactor(m, order)? * &theta_product(&f, m, order)?)
}

/// Second form `theta(q^(c1+1), q^(c2+1), q^(c1+c2+2); q^3k)` of [`pi_product`].
pub fn pi_product_alt(k: u32, c: [u32; 3], order: i64) -> Result<QSeries> {
    check_pi_args(k, c)?;
    let m = 3 * k as i64;
    let (c1, c2) = (c[1] as i64, c[2] as i64);
    let f = [(c1 + 1, 1), (c2 + 1, 1), (c1 + c2 + 2, 1)];
    Ok(&pi_prefactor(m, order)? * &theta_product(&f, m, order)?)
}

fn check_pi_args(k: u32, c: [u32; 3]) -> Result<()> {
    if k == 0 || c.iter().sum::<u32>() + 3 != 3 * k {
        return Err(Error::InvalidArgument(format!(
            "pi_product needs c0 + c1 + c2 = 3k - 3, got k = {k}, c = {c:?}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ZPoint;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn same(a: &QSeries, c: &QSeries, n: i64) -> bool {
        QSeries::equal_to_order(a, c, n).unwrap().is_none()
    }

    #[test]
    fn finite_pochhammer_matches_product() {
        let p = pochhammer(Monomial::zq_pow(1), 1, Length::Finite(2), 10).unwrap();
        let expected = ZPoly::z_pochhammer(1, 2).to_series(10).unwrap();
        assert!(same(&p, &expected, 10));
        let empty = pochhammer(Monomial::q_pow(-3), 1, Length::Finite(0), 5).unwrap();
        assert!(same(&empty, &QSeries::one(5), 5));
    }

    #[test]
    fn laurent_pochhammer() {
        let p = pochhammer(Monomial::q_pow(-1), 1, Length::Finite(1), 5).unwrap();
        let expected = (&ZPoly::one() - &ZPoly::q_pow(-1)).to_series(5).unwrap();
        assert!(same(&p, &expected, 5));
        assert_eq!(p.floor(), -1);
    }

    #[test]
    fn divergent_infinite_products() {
        assert_eq!(
            pochhammer(Monomial::q_pow(0), 1, Length::Infinite, 5),
            Err(Error::DivergentProduct)
        );
        assert_eq!(
            pochhammer(Monomial::q_pow(-2), 1, Length::Infinite, 5),
            Err(Error::DivergentProduct)
        );
        assert!(pochhammer(Monomial::zq_pow(0), 1, Length::Infinite, 5).is_ok());
    }

    #[test]
    fn q_poch_agrees_with_general_pochhammer() {
        let a = pochhammer(Monomial::q_pow(2), 3, Length::Infinite, 25).unwrap();
        assert!(same(&a, &q_poch_inf(2, 3, 25), 25));
    }

    #[test]
    fn jacobi_triple_product_mod_one() {
        // theta(q; q^2) (q^2; q^2) = sum (-1)^n q^(n^2)
        let lhs = &theta(1, 2, 40).unwrap() * &q_poch_inf(2, 2, 40);
        let mut terms = Vec::new();
        for n in -7i64..=7 {
            terms.push((n * n, 0, b(if n % 2 == 0 { 1 } else { -1 })));
        }
        let rhs = QSeries::from_terms(40, terms).unwrap();
        assert!(same(&lhs, &rhs, 40));
    }

    #[test]
    fn theta_reflection_and_quasi_period() {
        let m = 9;
        let t4 = theta(4, m, 30).unwrap();
        let tm4 = theta(-4, m, 30).unwrap();
        let expected = t4.mul_monomial(&b(-1), 0, -4);
        assert!(same(&tm4, &expected, tm4.order().min(expected.order())));
        let t5 = theta(5, m, 30).unwrap();
        assert!(same(&t4, &t5, 30));
        let t13 = theta(13, m, 30).unwrap();
        let expected = t4.mul_monomial(&b(-1), 0, -4);
        assert!(same(&t13, &expected, 26));
        assert_eq!(theta(18, m, 10), Err(Error::ZeroTheta { j: 18, modulus: 9 }));
    }

    #[test]
    fn qbinom_symmetry_and_values() {
        assert_eq!(qbinom(5, 2, 1), qbinom(5, 3, 1));
        assert!(qbinom(3, -1, 1).is_zero());
        assert!(qbinom(3, 4, 1).is_zero());
        let p = qbinom(4, 2, 1);
        assert_eq!(p.to_string(), "1 + q + 2*q^2 + q^3 + q^4");
    }

    #[test]
    fn level_zero_and_one_products() {
        // F_(0,0,0)(1,q) = 1/(q^3; q^3), F_(1,0,0)(1,q) = 1/(q; q)
        let f0 = borodin_product([0, 0, 0], 30).unwrap();
        assert!(same(&f0, &q_poch_inf(3, 3, 30).invert().unwrap(), 30));
        let f1 = borodin_product([1, 0, 0], 30).unwrap();
        assert!(same(&f1, &q_poch_inf(1, 1, 30).invert().unwrap(), 30));
        let f1r = borodin_product([0, 0, 1], 30).unwrap();
        assert!(same(&f1r, &f1, 30));
    }

    #[test]
    fn pi_forms_agree() {
        for k in 2..=4u32 {
            let total = 3 * k - 3;
            for c0 in 0..=total {
                for c1 in 0..=total - c0 {
                    let c = [c0, c1, total - c0 - c1];
                    let a = pi_product(k, c, 30).unwrap();
                    let alt = pi_product_alt(k, c, 30).unwrap();
                    assert!(same(&a, &alt, 30), "k = {k}, c = {c:?}");
                }
            }
        }
        assert!(pi_product(3, [1, 1, 1], 10).is_err());
    }

    #[test]
    fn products_are_z_free() {
        let p = borodin_product([2, 1, 0], 20).unwrap();
        assert_eq!(p.z_degree(), Some(0));
        assert_eq!(p.eval_z(ZPoint::One), p);
    }
}
