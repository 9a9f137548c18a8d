use std::collections::HashMap;
use std::sync::Arc;

use crate::series::uni::{self, Uni};

use super::spec::ModClass;

/// Memoized univariate factors `1/(q)_n`, their pairwise products and the
/// last-pair kernels, all truncated at a fixed order.
pub(crate) struct Kernels {
    order: usize,
    inv: Vec<Arc<Uni>>,
    pairs: HashMap<(usize, usize), Arc<Uni>>,
    last: HashMap<(usize, usize), Arc<Uni>>,
    class: ModClass,
}

impl Kernels {
    pub fn new(order: usize, class: ModClass) -> Self {
        Kernels {
            order,
            inv: vec![Arc::new(uni::one(order))],
            pairs: HashMap::new(),
            last: HashMap::new(),
            class,
        }
    }

    /// `1/(q; q)_n`.
    pub fn inv(&mut self, n: usize) -> Arc<Uni> {
        while self.inv.len() <= n {
            let m = self.inv.len();
            let mut next = (*self.inv[m - 1]).clone();
            uni::div_one_minus(&mut next, m);
            self.inv.push(Arc::new(next));
        }
        self.inv[n].clone()
    }

    /// `1/((q)_a (q)_b)`.
    pub fn pair(&mut self, a: usize, b: usize) -> Arc<Uni> {
        let key = (a.min(b), a.max(b));
        if let Some(v) = self.pairs.get(&key) {
            return v.clone();
        }
        let v = Arc::new(uni::mul(&self.inv(a), &self.inv(b), self.order));
        self.pairs.insert(key, v.clone());
        v
    }

    /// Kernel of the innermost pair `(r, s) = (r_(k-1), s_(k-1))`.
    pub fn last(&mut self, r: usize, s: usize) -> Arc<Uni> {
        if let Some(v) = self.last.get(&(r, s)) {
            return v.clone();
        }
        let v = match self.class {
            ModClass::Minus | ModClass::Plus => {
                let p = self.pair(r, s);
                uni::mul(&p, &self.inv(r + s + 1), self.order)
            }
            ModClass::Zero => {
                let p = self.pair(r + s, r + s + 1);
                let b = uni::qbinom_poly((r + s) as i64, r as i64, 3);
                uni::mul(&p, &b, self.order)
            }
        };
        let v = Arc::new(v);
        self.last.insert((r, s), v.clone());
        v
    }
}
