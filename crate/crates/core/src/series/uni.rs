//! Dense univariate power series `sum c[n] q^n`, truncated by length.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Uni = Vec<BigInt>;

pub fn one(order: usize) -> Uni {
    let mut v = vec![BigInt::zero(); order + 1];
    v[0] = BigInt::one();
    v
}

/// Product truncated to exponents `0..=order`.
pub fn mul(a: &[BigInt], b: &[BigInt], order: usize) -> Uni {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `acc[n + shift] += c * a[n]` for all in-range `n`.
pub fn add_shifted(acc: &mut [BigInt], a: &[BigInt], shift: usize, c: &BigInt) {
    if shift >= acc.len() {
        return;
    }
    for (slot, x) in acc[shift..].iter_mut().zip(a) {
        if !x.is_zero() {
            *slot += c * x;
        }
    }
}

/// In-place multiplication by `1 / (1 - q^m)`.
pub fn div_one_minus(a: &mut [BigInt], m: usize) {
    for n in m..a.len() {
        let prev = a[n - m].clone();
        a[n] += prev;
    }
}

/// In-place multiplication by `(1 - q^m)`.
pub fn mul_one_minus(a: &mut [BigInt], m: usize) {
    for n in (m..a.len()).rev() {
        let prev = a[n - m].clone();
        a[n] -= prev;
    }
}

/// `1/(q^a; q^b)_n` for `n = 0..=max_n`, truncated at `order`.
pub fn inv_poch_table(a: usize, b: usize, max_n: usize, order: usize) -> Vec<Uni> {
    let mut table = Vec::with_capacity(max_n + 1);
    let mut cur = one(order);
    table.push(cur.clone());
    for t in 0..max_n {
        let m = a + t * b;
        assert!(m > 0, "1/(1 - 1) is undefined");
        div_one_minus(&mut cur, m);
        table.push(cur.clone());
    }
    table
}

/// `(q^a; q^b)_inf` truncated at `order`, `a, b >= 1`.
pub fn poch_inf(a: usize, b: usize, order: usize) -> Uni {
    let mut cur = one(order);
    let mut m = a;
    while m <= order {
        mul_one_minus(&mut cur, m);
        m += b;
    }
    cur
}

/// Gaussian binomial `[n, k]` in `q^base` as an exact polynomial.
pub fn qbinom_poly(n: i64, k: i64, base: usize) -> Uni {
    if k < 0 || k > n || n < 0 {
        return Vec::new();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    let deg = k * (n - k) * base;
    let mut p = one(deg);
    for i in 1..=k {
        mul_one_minus(&mut p, base * (n - k + i));
    }
    for i in 1..=k {
        div_one_minus(&mut p, base * i);
    }
    p
}
