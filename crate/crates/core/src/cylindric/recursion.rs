use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::profile::{all_profiles, canform, cj, nonzero_indices, subsets, Profile};
use crate::error::{Error, Result};
use crate::qfunctions::{pochhammer, q_poch_inf, Length, Monomial};
use crate::series::{QSeries, ZCoeffs, ZPoly};

/// One summand `sign * (zq; q)_(s-1) * H_target(z q^s)` of the recursion for a profile.
struct Summand {
    sign: i64,
    shift: i64,
    target: usize,
    prefactor: Vec<(u32, i64, BigInt)>,
}

fn summands(c: Profile, index: &BTreeMap<Profile, usize>) -> Vec<Summand> {
    subsets(nonzero_indices(c.parts()))
        .map(|j| {
            let s = j.count_ones() as i64;
            let target = canform(cj(c.parts(), j).expect("J within nonzero parts"));
            let prefactor = ZPoly::z_pochhammer(1, s as u32 - 1)
                .iter()
                .map(|(&(z, q), v)| (z, q, v.clone()))
                .collect();
            Summand {
                sign: if s % 2 == 1 { 1 } else { -1 },
                shift: s,
                target: index[&target],
                prefactor,
            }
        })
        .collect()
}

/// `G_c = (zq; q)_inf F_c` for every canonical profile of `level`, solved
/// coefficient by coefficient from `G_c(0, q) = 1`.
pub fn solve_g_recursion(level: u32, order: i64) -> Result<BTreeMap<Profile, QSeries>> {
    if level == 0 {
        return Err(Error::InvalidArgument(
            "the recursion is empty at level 0".into(),
        ));
    }
    let n_max = order.max(0) as usize;
    let profiles: Vec<Profile> = all_profiles(level).into_iter().collect();
    let index: BTreeMap<Profile, usize> =
        profiles.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let plans: Vec<Vec<Summand>> = profiles.iter().map(|&p| summands(p, &index)).collect();
    // g[p][n][r] = [z^r q^n] G_p, zero unless r <= n.
    let mut g: Vec<Vec<Vec<BigInt>>> = vec![Vec::with_capacity(n_max + 1); profiles.len()];
    for n in 0..=n_max {
        for (pi, plan) in plans.iter().enumerate() {
            let mut row = vec![BigInt::zero(); n + 1];
            row[0] = if n == 0 { BigInt::one() } else { BigInt::zero() };
            for (r, slot) in row.iter_mut().enumerate().skip(1) {
                let mut acc = BigInt::zero();
                for sm in plan {
                    for (a, b, p) in &sm.prefactor {
                        let a = *a as usize;
                        if a > r {
                            continue;
                        }
                        let rr = r - a;
                        let nn = n as i64 - b - sm.shift * rr as i64;
                        if nn < rr as i64 {
                            continue;
                        }
                        let v = &g[sm.target][nn as usize][rr];
                        if !v.is_zero() {
                            if sm.sign > 0 {
                                acc += p * v;
                            } else {
                                acc -= p * v;
                            }
                        }
                    }
                }
                *slot = acc;
            }
            g[pi].push(row);
        }
    }
    Ok(profiles
        .into_iter()
        .zip(g)
        .map(|(p, rows)| {
            let slots = rows.into_iter().map(ZCoeffs::from_vec).collect();
            (p, QSeries::from_slots(0, order, slots))
        })
        .collect())
}

/// `H_c = G_c / (q; q)_inf` for every canonical profile of `level`.
pub fn solve_h_recursion(level: u32, order: i64) -> Result<BTreeMap<Profile, QSeries>> {
    let inv = q_poch_inf(1, 1, order).invert()?;
    Ok(solve_g_recursion(level, order)?
        .into_iter()
        .map(|(p, g)| (p, &g * &inv))
        .collect())
}

/// `F_c = H_c (q; q)_inf / (zq; q)_inf`.
pub fn f_from_h(h: &QSeries) -> Result<QSeries> {
    let order = h.order();
    let zq = pochhammer(Monomial::zq_pow(1), 1, Length::Infinite, order)?;
    Ok(&(h * &q_poch_inf(1, 1, order)) * &zq.invert()?)
}

/// Right side minus left side of the recursion for `c`, evaluated on `h`.
pub fn recurrence_residual_series(c: Profile, h: &BTreeMap<Profile, QSeries>) -> Result<QSeries> {
    let lhs = h.get(&c).ok_or_else(|| Error::UnknownProfile(c.to_string()))?;
    let mut acc = -lhs;
    for j in subsets(nonzero_indices(c.parts())) {
        let s = j.count_ones() as i64;
        let target = canform(cj(c.parts(), j)?);
        let ht = h.get(&target).ok_or_else(|| Error::UnknownProfile(target.to_string()))?;
        let mut pre = ZPoly::z_pochhammer(1, s as u32 - 1);
        if s % 2 == 0 {
            pre = -&pre;
        }
        acc = &acc + &ht.shift_z(s)?.mul_zpoly(&pre);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_fc;
    use super::*;
    use crate::qfunctions::borodin_product;
    use crate::series::ZPoint;

    fn same(a: &QSeries, b: &QSeries, n: i64) -> bool {
        QSeries::equal_to_order(a, b, n).unwrap().is_none()
    }

    #[test]
    fn level_one_is_a_single_partition() {
        let h = solve_h_recursion(1, 20).unwrap();
        let p = Profile::new([1, 0, 0]);
        let f = f_from_h(&h[&p]).unwrap();
        let expected = pochhammer(Monomial::zq_pow(1), 1, Length::Infinite, 20)
            .unwrap()
            .invert()
            .unwrap();
        assert!(same(&f, &expected, 20));
    }

    #[test]
    fn boundary_values() {
        let h = solve_h_recursion(4, 20).unwrap();
        let inv = q_poch_inf(1, 1, 20).invert().unwrap();
        for (p, s) in &h {
            assert!(same(&s.eval_z(ZPoint::Zero), &inv, 20), "{p}");
            assert_eq!(s.coeff(0, 0), BigInt::one());
            for z in 1..5 {
                assert!(s.coeff(0, z).is_zero());
            }
        }
    }

    #[test]
    fn solution_satisfies_recursion() {
        let h = solve_h_recursion(5, 18).unwrap();
        for c in h.keys() {
            assert!(recurrence_residual_series(*c, &h).unwrap().is_zero(), "{c}");
        }
    }

    #[test]
    fn agrees_with_enumeration_and_product() {
        for level in 1..=3 {
            let h = solve_h_recursion(level, 10).unwrap();
            for (p, s) in &h {
                let f = f_from_h(s).unwrap();
                let brute = enumerate_fc(p.parts(), 10).unwrap();
                assert!(same(&f, &brute, 10), "{p}");
                let prod = borodin_product(p.parts(), 10).unwrap();
                assert!(same(&f.eval_z(ZPoint::One), &prod, 10), "{p}");
            }
        }
    }

    #[test]
    fn level_zero_rejected() {
        assert!(solve_h_recursion(0, 5).is_err());
    }
}
