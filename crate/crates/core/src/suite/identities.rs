use crate::error::{Error, Result};
use crate::qfunctions::{pochhammer, q_poch_inf, theta_product, Length, Monomial};
use crate::series::{QSeries, ZPoly};
use crate::symbolic::{eval_combo_at_one, parse_combo};

use super::report::{Standing, VerificationReport};

/// Sum side of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumSide {
    /// `sum q^(n^2 + shift n) / (q)_n`.
    Single { shift: i64 },
    /// A combination of multisums, evaluated at `z = 1`.
    Combo { modulus: u32, text: &'static str },
}

/// Product side `theta(q^j; q^base)^e` over the factors, divided by `(q)_inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductSide {
    pub base: i64,
    pub factors: &'static [(i64, i32)],
    pub over_q_inf: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Identity {
    pub tag: &'static str,
    pub statement: &'static str,
    pub sum: SumSide,
    pub product: ProductSide,
}

const fn combo(modulus: u32, text: &'static str) -> SumSide {
    SumSide::Combo { modulus, text }
}

const fn prod(base: i64, factors: &'static [(i64, i32)]) -> ProductSide {
    ProductSide {
        base,
        factors,
        over_q_inf: true,
    }
}

pub const CATALOG: &[Identity] = &[
    Identity {
        tag: "RR1",
        statement: "first Rogers-Ramanujan identity",
        sum: SumSide::Single { shift: 0 },
        product: ProductSide {
            base: 5,
            factors: &[(1, -1)],
            over_q_inf: false,
        },
    },
    Identity {
        tag: "RR2",
        statement: "second Rogers-Ramanujan identity",
        sum: SumSide::Single { shift: 1 },
        product: ProductSide {
            base: 5,
            factors: &[(2, -1)],
            over_q_inf: false,
        },
    },
    Identity {
        tag: "300",
        statement: "mod 6 identity for (3,0,0)",
        sum: combo(6, "S(1, 1)"),
        product: prod(6, &[(2, -1), (3, -1)]),
    },
    Identity {
        tag: "210",
        statement: "mod 6 identity for (2,1,0)",
        sum: combo(6, "S(0, 1)"),
        product: prod(6, &[(1, -1), (2, -1)]),
    },
    Identity {
        tag: "111",
        statement: "mod 6 identity for (1,1,1)",
        sum: combo(6, "S(0, 0) - q*S(1, 1)"),
        product: prod(6, &[(2, 1), (1, -2), (3, -1)]),
    },
    Identity {
        tag: "700",
        statement: "mod 10 identity for (7,0,0)",
        sum: combo(10, "S(1, 1, 1, 1)"),
        product: prod(10, &[(2, -1), (3, -2), (4, -2), (5, -1)]),
    },
    Identity {
        tag: "610",
        statement: "mod 10 identity for (6,1,0)",
        sum: combo(10, "S(0, 1, 1, 1)"),
        product: prod(10, &[(1, -1), (2, -1), (3, -1), (4, -2), (5, -1)]),
    },
    Identity {
        tag: "520",
        statement: "mod 10 identity for (5,2,0)",
        sum: combo(10, "S(0, 0, 1, 1)"),
        product: prod(10, &[(1, -1), (2, -2), (3, -1), (4, -1), (5, -1)]),
    },
    Identity {
        tag: "511",
        statement: "mod 10 identity for (5,1,1)",
        sum: combo(10, "S(0, 1, 0, 1) - q*S(1, 1, 1, 1)"),
        product: prod(10, &[(1, -2), (3, -2), (4, -1), (5, -1)]),
    },
    Identity {
        tag: "421",
        statement: "mod 10 identity for (4,2,1)",
        sum: combo(10, "S(0, 0, 0, 1) - q*S(0, 1, 1, 1)"),
        product: prod(10, &[(1, -2), (2, -1), (3, -1), (4, -2)]),
    },
    Identity {
        tag: "322",
        statement: "mod 10 identity for (3,2,2)",
        sum: combo(10, "S(0, 0, 0, 0) - q*S(0, 1, 0, 1)"),
        product: prod(10, &[(1, -2), (2, -2), (4, -1), (5, -1)]),
    },
    Identity {
        tag: "430",
        statement: "mod 10 identity for (4,3,0), first sum",
        sum: combo(10, "S(-1, 0, 1, 1) - S(0, 1, 0, 1) + q*S(1, 1, 1, 1)"),
        product: prod(10, &[(1, -1), (2, -2), (3, -2), (4, -1)]),
    },
    Identity {
        tag: "430b",
        statement: "mod 10 identity for (4,3,0), second sum",
        sum: combo(
            10,
            "S(0, 0, 0, 1) - q*S(0, 1, 1, 1) - q*S(1, 0, 1, 1) - S(1, 1, 0, 0) \
             + (1 - q)*S(2, 0, 0, 0) + q^2*S(2, 1, 0, 1) + q*S(2, 1, 0, 0)",
        ),
        product: prod(10, &[(1, -1), (2, -2), (3, -2), (4, -1)]),
    },
    Identity {
        tag: "331",
        statement: "mod 10 identity for (3,3,1)",
        sum: combo(
            10,
            "S(-1, 0, 0, 1) - S(0, 1, 0, 0) + q*S(1, 1, 0, 1) - q*S(-1, 1, 1, 1) - S(0, 0, 1, 1)",
        ),
        product: prod(10, &[(1, -2), (2, -1), (3, -2), (5, -1)]),
    },
    Identity {
        tag: "330",
        statement: "mod 9 identity for (3,3,0)",
        sum: combo(9, "S(0, 1, 0, 1) - 2*q*S(1, 1, 1, 1)"),
        product: prod(9, &[(1, -1), (2, -2), (3, -2)]),
    },
];

pub fn lookup(tag: &str) -> Result<&'static Identity> {
    CATALOG
        .iter()
        .find(|i| i.tag == tag)
        .ok_or_else(|| Error::UnknownIdentity(tag.to_string()))
}

fn single_sum(shift: i64, order: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero(order);
    let mut n = 0i64;
    while n * n + shift * n <= order {
        let den = pochhammer(Monomial::q_pow(1), 1, Length::Finite(n as u32), order)?;
        let term = den.invert()?.mul_zpoly(&ZPoly::q_pow(n * n + shift * n));
        acc = &acc + &term;
        n += 1;
    }
    acc.truncate(order)
}

impl SumSide {
    pub fn eval(&self, order: i64) -> Result<QSeries> {
        match *self {
            SumSide::Single { shift } => single_sum(shift, order),
            SumSide::Combo { modulus, text } => eval_combo_at_one(&parse_combo(text, modulus)?, order),
        }
    }
}

impl ProductSide {
    pub fn eval(&self, order: i64) -> Result<QSeries> {
        let th = theta_product(self.factors, self.base, order)?;
        if self.over_q_inf {
            Ok(&th * &q_poch_inf(1, 1, order).invert()?)
        } else {
            Ok(th)
        }
    }
}

impl Identity {
    pub fn verify(&self, order: i64) -> VerificationReport {
        VerificationReport::compare(
            format!("identity-{}", self.tag),
            self.statement,
            Standing::Theorem,
            order,
            self.sum.eval(order),
            self.product.eval(order),
        )
    }

}

pub fn verify_sum_product(tag: &str, order: i64) -> Result<VerificationReport> {
    Ok(lookup(tag)?.verify(order))
}

/// Negative control: `tag` with its first product exponent off by one, expected to fail.
pub fn verify_corrupted(tag: &str, order: i64) -> Result<VerificationReport> {
    let id = lookup(tag)?;
    let (sum, product) = (id.sum, id.product);
    let mut factors = product.factors.to_vec();
    factors[0].1 -= 1;
    let rhs = theta_product(&factors, product.base, order).and_then(|th| {
        if product.over_q_inf {
            Ok(&th * &q_poch_inf(1, 1, order).invert()?)
        } else {
            Ok(th)
        }
    });
    Ok(VerificationReport::compare(
        format!("corrupted-{}", id.tag),
        format!("{} with a perturbed product", id.statement),
        Standing::Theorem,
        order,
        sum.eval(order),
        rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::Status;

    #[test]
    fn small_orders_pass() {
        for id in CATALOG {
            let r = id.verify(20);
            assert_eq!(r.status, Status::VerifiedToOrder, "{}", r.line());
        }
    }

    #[test]
    fn corrupted_fails_early() {
        let r = verify_corrupted("210", 30).unwrap();
        assert_eq!(r.status, Status::Failed);
        assert!(r.divergence.is_some());
        assert!(matches!(verify_sum_product("999", 10), Err(Error::UnknownIdentity(_))));
    }
}
