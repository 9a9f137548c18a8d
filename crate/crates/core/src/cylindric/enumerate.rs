use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::series::QSeries;

pub const MAX_BRUTE_WEIGHT: u32 = 14;

fn partitions_up_to(max: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max, max, &mut Vec::new(), &mut out);
    out
}

fn part(l: &[u32], j: usize) -> u32 {
    l.get(j - 1).copied().unwrap_or(0)
}

/// `upper_j >= lower_(j + shift)` for all `j >= 1`.
fn interlaces(upper: &[u32], lower: &[u32], shift: u32) -> bool {
    let s = shift as usize;
    (1..=lower.len().saturating_sub(s)).all(|j| part(upper, j) >= part(lower, j + s))
}

/// `F_c(z, q) = sum z^(largest part) q^(weight)` over cylindric partitions of
/// profile `c` with weight at most `max_weight`.
pub fn enumerate_fc(c: [u32; 3], max_weight: u32) -> Result<QSeries> {
    if max_weight > MAX_BRUTE_WEIGHT {
        return Err(Error::ScaleExceeded {
            requested: max_weight,
            cap: MAX_BRUTE_WEIGHT,
        });
    }
    let parts = partitions_up_to(max_weight);
    let weight = |l: &Vec<u32>| l.iter().sum::<u32>();
    let mut terms = Vec::new();
    for l0 in &parts {
        let w0 = weight(l0);
        for l1 in parts.iter().filter(|l| w0 + weight(l) <= max_weight) {
            if !interlaces(l0, l1, c[1]) {
                continue;
            }
            let w1 = w0 + weight(l1);
            for l2 in parts.iter().filter(|l| w1 + weight(l) <= max_weight) {
                if interlaces(l1, l2, c[2]) && interlaces(l2, l0, c[0]) {
                    let top = [l0, l1, l2].iter().filter_map(|l| l.first()).max().copied();
                    let w = (w1 + weight(l2)) as i64;
                    terms.push((w, top.unwrap_or(0), BigInt::one()));
                }
            }
        }
    }
    QSeries::from_terms(max_weight as i64, terms)
}
