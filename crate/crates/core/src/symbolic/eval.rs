use std::collections::HashMap;

use super::atom::{SAtom, SCombo};
use crate::asw::{eval_s, eval_s_at_one};
use crate::error::Result;
use crate::series::QSeries;

/// Memoized atom evaluation at a fixed order.
#[derive(Debug)]
pub struct AtomCache {
    order: i64,
    lift: i64,
    cache: HashMap<SAtom, QSeries>,
}

impl AtomCache {
    /// `lift` extra q-orders are kept so that coefficients with negative q-powers stay exact.
    pub fn new(order: i64, lift: i64) -> Self {
        AtomCache {
            order,
            lift,
            cache: HashMap::new(),
        }
    }

    pub fn get(&mut self, a: &SAtom) -> Result<&QSeries> {
        if !self.cache.contains_key(a) {
            let s = eval_s(&a.spec(), self.order + self.lift)?;
            self.cache.insert(a.clone(), s);
        }
        Ok(&self.cache[a])
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }

    /// `sum coeff * S(atom)` truncated at the cache order.
    pub fn eval(&mut self, x: &SCombo) -> Result<QSeries> {
        let mut acc = QSeries::zero(self.order);
        for (a, c) in x.terms() {
            let need = -c.min_qdeg().unwrap_or(0).min(0);
            if need > self.lift {
                let s = eval_s(&a.spec(), self.order + need)?;
                acc = &acc + &s.mul_zpoly(c);
            } else {
                let s = self.get(a)?.mul_zpoly(c);
                acc = &acc + &s;
            }
        }
        acc.truncate(self.order)
    }
}

pub fn eval_combo(x: &SCombo, order: i64) -> Result<QSeries> {
    let lift = x.terms().filter_map(|(_, c)| c.min_qdeg()).min().unwrap_or(0).min(0);
    AtomCache::new(order, -lift).eval(x)
}

/// The combination at `z = 1`, through `q^order`.
pub fn eval_combo_at_one(x: &SCombo, order: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero(order);
    for (a, c) in x.terms() {
        let c1 = c.eval_z_one();
        if c1.is_zero() {
            continue;
        }
        let lift = -c1.min_qdeg().unwrap_or(0).min(0);
        let s = eval_s_at_one(&a.spec(), order + lift)?;
        acc = &acc + &s.mul_zpoly(&c1);
    }
    acc.truncate(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylindric::{solve_h_recursion, Profile};
    use crate::symbolic::{expand_relation, h_table, Family, RelationId};

    #[test]
    fn relations_vanish() {
        let id = RelationId::new(Family::R2, 8).unwrap();
        let s = eval_combo(&expand_relation(id, &[1, 1, 0, 1]).unwrap(), 30).unwrap();
        assert!(s.is_zero());
        for m in [5, 6, 7] {
            for id in RelationId::all(m).unwrap() {
                for a in -2..=2 {
                    let s = eval_combo(&expand_relation(id, &[a]).unwrap(), 25).unwrap();
                    assert!(s.is_zero(), "{id} mod {m} at {a}");
                }
            }
        }
        assert!(eval_combo(&SCombo::zero(), 10).unwrap().is_zero());
    }

    #[test]
    fn shift_commutes_with_evaluation() {
        let x = crate::symbolic::parse_combo("(1 - z)*S(1, 0, 0, 1) + z*q*S(1, 1, 1, 1)", 10).unwrap();
        for j in [1, 2] {
            let lhs = eval_combo(&x.shift_z(j), 20).unwrap();
            let rhs = eval_combo(&x, 20 + 4).unwrap().shift_z(j).unwrap().truncate(20).unwrap();
            assert_eq!(QSeries::equal_to_order(&lhs, &rhs, 20).unwrap(), None);
        }
    }

    #[test]
    fn table_matches_recursion_mod_seven() {
        let h = solve_h_recursion(4, 20).unwrap();
        for (c, (x, _)) in h_table(4).unwrap() {
            let s = eval_combo(&x, 20).unwrap();
            assert_eq!(QSeries::equal_to_order(&s, &h[&c], 20).unwrap(), None, "{c}");
        }
        let _ = Profile::new([4, 0, 0]);
    }

    #[test]
    fn evaluation_at_one_agrees() {
        let x = crate::symbolic::parse_combo("(1 - z*q)*S(2, 0, 0, 0) + z*q^2*S(2, 1, 0, 1) - S(1, 1, 0, 0)", 10).unwrap();
        let a = eval_combo_at_one(&x, 20).unwrap();
        let b = eval_combo(&x, 20).unwrap().eval_z(crate::series::ZPoint::One);
        assert_eq!(QSeries::equal_to_order(&a, &b, 20).unwrap(), None);
    }
}
