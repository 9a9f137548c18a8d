use num_bigint::BigInt;

use super::spec::{k_and_class, SumSpec};
use super::sums::eval_s;
use crate::cylindric::Profile;
use crate::error::{Error, Result};
use crate::series::{QSeries, ZPoly};

/// `e_j` of length `len`: `j` zeros then ones, and `e_(-1) = (2, 1, ..., 1)`.
pub fn evec(j: i64, len: usize) -> Vec<i64> {
    if j < 0 {
        let mut v = vec![1; len];
        if let Some(first) = v.first_mut() {
            *first = 2;
        }
        return v;
    }
    (0..len).map(|i| if (i as i64) < j { 0 } else { 1 }).collect()
}

pub fn is_above_line(c: Profile) -> Result<bool> {
    let (k, _) = k_and_class(c.modulus())?;
    let [_, c1, c2] = c.parts();
    Ok(c1 < k && c2 < k)
}

/// Seed expression for `H_c` with `c1, c2 <= k - 1` as `(coefficient, sum)` pairs.
pub fn seed_terms(c: Profile) -> Result<Vec<(ZPoly, SumSpec)>> {
    let m = c.modulus();
    let (k, _) = k_and_class(m)?;
    if !is_above_line(c)? {
        return Err(Error::BelowTheLine(c.to_string()));
    }
    let len = k as usize - 1;
    let [_, c1, c2] = c.parts().map(i64::from);
    let s = |a: i64, b: i64| SumSpec::new(m, evec(a, len), evec(b, len));
    let minus_q = ZPoly::monomial(BigInt::from(-1), 0, 1);
    Ok(if c1 > 0 && c2 > 0 {
        vec![(ZPoly::one(), s(c1, c2)?), (minus_q, s(c1 - 1, c2 - 1)?)]
    } else if c2 == 0 {
        vec![(ZPoly::one(), s(c1, 0)?)]
    } else {
        let coeff = &minus_q * &(&ZPoly::one() - &ZPoly::z());
        vec![(ZPoly::one(), s(0, c2)?), (coeff, s(-1, c2 - 1)?)]
    })
}

/// `H_c(z, q)` from the seed expression.
pub fn eval_h_seed(c: Profile, order: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero(order);
    for (coeff, spec) in seed_terms(c)? {
        let lift = -coeff.min_qdeg().unwrap_or(0).min(0);
        acc = &acc + &eval_s(&spec, order + lift)?.mul_zpoly(&coeff);
    }
    acc.truncate(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylindric::solve_h_recursion;

    #[test]
    fn e_vectors() {
        assert_eq!(evec(0, 2), vec![1, 1]);
        assert_eq!(evec(1, 2), vec![0, 1]);
        assert_eq!(evec(2, 2), vec![0, 0]);
        assert_eq!(evec(5, 2), vec![0, 0]);
        assert_eq!(evec(-1, 3), vec![2, 1, 1]);
    }

    #[test]
    fn seed_shapes() {
        let t = seed_terms(Profile::new([6, 0, 1])).unwrap();
        assert_eq!(t[0].1.to_string(), "S10(1,1|0,1)");
        assert_eq!(t[1].1.to_string(), "S10(2,1|1,1)");
        assert_eq!(t[1].0.to_string(), "-q + z*q");
        assert!(matches!(seed_terms(Profile::new([4, 3, 0])), Err(Error::BelowTheLine(_))));
    }

    #[test]
    fn seeds_match_recursion_small_moduli() {
        for level in 2..=4 {
            let h = solve_h_recursion(level, 16).unwrap();
            for (c, s) in &h {
                if is_above_line(*c).unwrap() {
                    let seed = eval_h_seed(*c, 16).unwrap();
                    assert_eq!(QSeries::equal_to_order(&seed, s, 16).unwrap(), None, "{c}");
                }
            }
        }
    }
}
