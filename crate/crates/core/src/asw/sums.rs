use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::kernel::Kernels;
use super::spec::{ModClass, SumSpec};
use crate::error::Result;
use crate::series::{check_exponent, uni, QSeries, ZCoeffs};

struct Walk<'a> {
    spec: &'a SumSpec,
    order: i64,
    tail: Vec<i64>,
    cap: i64,
    constrained: bool,
    kernels: Kernels,
}

impl Walk<'_> {
    fn pairs(&self) -> usize {
        self.spec.rho.len()
    }

    fn f(&self, i: usize, r: i64, s: i64) -> i64 {
        let mut v = r * r - r * s + s * s + self.spec.rho[i] * r + self.spec.sigma[i] * s;
        if i + 1 == self.pairs() && self.spec.class() == ModClass::Minus {
            v += 2 * r * s;
        }
        v
    }

    fn run(&mut self, sink: &mut dyn FnMut(u32, i64, &[BigInt])) {
        let mut rs = vec![(0i64, 0i64); self.pairs()];
        self.rec(0, 0, None, &mut rs, sink);
    }

    fn rec(
        &mut self,
        i: usize,
        partial: i64,
        running: Option<Arc<Vec<BigInt>>>,
        rs: &mut Vec<(i64, i64)>,
        sink: &mut dyn FnMut(u32, i64, &[BigInt]),
    ) {
        let budget = self.order - partial - self.tail[i + 1];
        let (cap_r, cap_s) = if self.constrained && i > 0 {
            rs[i - 1]
        } else {
            (self.cap, self.cap)
        };
        let last = i + 1 == self.pairs();
        for r in 0..=cap_r {
            for s in 0..=cap_s {
                let fi = self.f(i, r, s);
                if fi > budget {
                    continue;
                }
                let mut factor = running.clone();
                if i > 0 {
                    let (pr, ps) = rs[i - 1];
                    if r > pr || s > ps {
                        continue;
                    }
                    let pp = self.kernels.pair((pr - r) as usize, (ps - s) as usize);
                    factor = Some(match factor {
                        None => pp,
                        Some(run) => {
                            let keep = (budget - fi).max(0) as usize;
                            Arc::new(uni::mul(&run, &pp, keep))
                        }
                    });
                }
                rs[i] = (r, s);
                let next = partial + fi;
                if last {
                    let keep = (self.order - next) as usize;
                    let tailk = self.kernels.last(r as usize, s as usize);
                    let k = match factor {
                        None => tailk,
                        Some(run) => Arc::new(uni::mul(&run, &tailk, keep)),
                    };
                    let r1 = rs[0].0 as u32;
                    sink(r1, next, &k[..=keep.min(k.len() - 1)]);
                } else {
                    self.rec(i + 1, next, factor, rs, sink);
                }
            }
        }
    }
}

fn pair_minimum(spec: &SumSpec, i: usize, probe: &Walk) -> i64 {
    let b = spec.rho[i].abs().max(spec.sigma[i].abs());
    let top = 2 * b + 4;
    let mut best = 0;
    for r in 0..=top {
        for s in 0..=top {
            best = best.min(probe.f(i, r, s));
        }
    }
    best
}

fn walk(spec: &SumSpec, order: i64, extra: i64, constrained: bool) -> Walk<'_> {
    let n = spec.rho.len();
    let mut w = Walk {
        spec,
        order,
        tail: vec![0; n + 1],
        cap: 0,
        constrained,
        kernels: Kernels::new(0, spec.class()),
    };
    let mins: Vec<i64> = (0..n).map(|i| pair_minimum(spec, i, &w)).collect();
    for i in (0..n).rev() {
        w.tail[i] = w.tail[i + 1] + mins[i];
    }
    let b = spec.max_abs_shift() as f64;
    let slack = (order - w.tail[0]).max(0) as f64;
    w.cap = (b + (2.0 * b * b + 2.0 * slack).sqrt()).ceil() as i64 + 1 + extra;
    w
}

/// Evaluates `S_m(rho|sigma)` through `q^order`.
///
/// `extra` widens the outer summation bound and `constrained = false` drops
/// the monotonicity constraint in favour of `1/(q)_n = 0` for `n < 0`; both
/// leave the result unchanged and exist for self-checks.
pub fn eval_s_with(spec: &SumSpec, order: i64, extra: i64, constrained: bool) -> Result<QSeries> {
    let mut w = walk(spec, order, extra, constrained);
    let lowest = w.tail[0].min(0);
    check_exponent(lowest)?;
    let span = (order - lowest).max(0) as usize;
    w.kernels = Kernels::new(span, spec.class());
    let mut acc: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    let width = (order - lowest + 1).max(0) as usize;
    w.run(&mut |r1, e, k| {
        let row = acc.entry(r1).or_insert_with(|| vec![BigInt::zero(); width]);
        uni::add_shifted(row, k, (e - lowest) as usize, &BigInt::one());
    });
    let mut slots: Vec<Vec<BigInt>> = vec![Vec::new(); width];
    for (r1, row) in acc {
        for (idx, c) in row.into_iter().enumerate() {
            if !c.is_zero() {
                let slot = &mut slots[idx];
                if slot.len() <= r1 as usize {
                    slot.resize(r1 as usize + 1, BigInt::zero());
                }
                slot[r1 as usize] = c;
            }
        }
    }
    let slots = slots.into_iter().map(ZCoeffs::from_vec).collect();
    Ok(QSeries::from_slots(lowest, order, slots))
}

/// `S_m(rho|sigma)(z, q)` through `q^order`.
pub fn eval_s(spec: &SumSpec, order: i64) -> Result<QSeries> {
    eval_s_with(spec, order, 0, true)
}

/// `S_m(rho|sigma)(1, q)` through `q^order`.
pub fn eval_s_at_one(spec: &SumSpec, order: i64) -> Result<QSeries> {
    let mut w = walk(spec, order, 0, true);
    let lowest = w.tail[0].min(0);
    check_exponent(lowest)?;
    w.kernels = Kernels::new((order - lowest).max(0) as usize, spec.class());
    let mut acc = vec![BigInt::zero(); (order - lowest + 1).max(0) as usize];
    w.run(&mut |_, e, k| uni::add_shifted(&mut acc, k, (e - lowest) as usize, &BigInt::one()));
    Ok(QSeries::from_univariate(&acc, lowest, order))
}
