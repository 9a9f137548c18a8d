use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::asw::{k_and_class, SumSpec};
use crate::error::Result;
use crate::series::ZPoly;

/// Formal symbol `S_m(rho | sigma)` with `rho ++ sigma` stored flat.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SAtom {
    pub modulus: u32,
    pub shifts: Vec<i64>,
}

impl SAtom {
    pub fn new(modulus: u32, shifts: Vec<i64>) -> Result<Self> {
        SumSpec::from_flat(modulus, &shifts)?;
        Ok(SAtom { modulus, shifts })
    }

    pub fn from_parts(modulus: u32, rho: &[i64], sigma: &[i64]) -> Result<Self> {
        let mut shifts = rho.to_vec();
        shifts.extend_from_slice(sigma);
        Self::new(modulus, shifts)
    }

    pub fn spec(&self) -> SumSpec {
        SumSpec::from_flat(self.modulus, &self.shifts).expect("validated atom")
    }

    pub fn k(&self) -> u32 {
        k_and_class(self.modulus).expect("validated atom").0
    }

    /// `z -> z q^j` moves `rho_1` by `j`.
    pub fn shift_z(&self, j: i64) -> SAtom {
        let mut shifts = self.shifts.clone();
        shifts[0] += j;
        SAtom {
            modulus: self.modulus,
            shifts,
        }
    }
}

impl fmt::Display for SAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shifts.iter().map(i64::to_string).collect();
        write!(f, "S({})", parts.join(", "))
    }
}

/// Finite combination `sum coeff * S(...)` with exact polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SCombo {
    terms: BTreeMap<SAtom, ZPoly>,
}

impl SCombo {
    pub fn zero() -> Self {
        SCombo::default()
    }

    pub fn atom(a: SAtom) -> Self {
        let mut c = SCombo::zero();
        c.add_term(a, ZPoly::one());
        c
    }

    pub fn add_term(&mut self, a: SAtom, coeff: ZPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(a.clone()).or_default();
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn add_combo(&mut self, other: &SCombo, scale: &ZPoly) {
        for (a, c) in &other.terms {
            self.add_term(a.clone(), c * scale);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SAtom, &ZPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &SAtom) -> Option<&ZPoly> {
        self.terms.get(a)
    }

    pub fn scale(&self, c: &ZPoly) -> SCombo {
        let mut out = SCombo::zero();
        out.add_combo(self, c);
        out
    }

    pub fn neg(&self) -> SCombo {
        self.scale(&ZPoly::constant(-1))
    }

    pub fn sub(&self, other: &SCombo) -> SCombo {
        let mut out = self.clone();
        out.add_combo(other, &ZPoly::constant(-1));
        out
    }

    pub fn add(&self, other: &SCombo) -> SCombo {
        let mut out = self.clone();
        out.add_combo(other, &ZPoly::one());
        out
    }

    /// Image under `z -> z q^j`.
    pub fn shift_z(&self, j: i64) -> SCombo {
        let mut out = SCombo::zero();
        for (a, c) in &self.terms {
            out.add_term(a.shift_z(j), c.shift_z(j));
        }
        out
    }

    /// Single-term helper: `c * z^zdeg q^qdeg * S(...)`.
    pub fn monomial_term(c: i64, zdeg: u32, qdeg: i64, a: SAtom) -> SCombo {
        let mut out = SCombo::zero();
        out.add_term(a, ZPoly::monomial(BigInt::from(c), zdeg, qdeg));
        out
    }

    pub fn unit(a: SAtom) -> SCombo {
        Self::monomial_term(1, 0, 0, a)
    }

    pub fn unit_scaled(a: SAtom, c: &BigInt) -> SCombo {
        let mut out = SCombo::zero();
        out.add_term(a, ZPoly::monomial(c.clone(), 0, 0));
        out
    }

    pub fn one_term(a: SAtom, coeff: ZPoly) -> SCombo {
        let mut out = SCombo::zero();
        out.add_term(a, coeff);
        out
    }
}

impl fmt::Display for SCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            let sep = if i == 0 { "" } else { " + " };
            if c.is_zero() {
                continue;
            }
            match c.unit_sign() {
                Some(1) => write!(f, "{sep}{a}")?,
                Some(_) if i == 0 => write!(f, "-{a}")?,
                Some(_) => write!(f, " - {a}")?,
                None if c.len() == 1 => {
                    let text = c.to_string();
                    match text.strip_prefix('-') {
                        Some(rest) if i > 0 => write!(f, " - {rest}*{a}")?,
                        _ => write!(f, "{sep}{text}*{a}")?,
                    }
                }
                None => write!(f, "{sep}({c})*{a}")?,
            }
        }
        Ok(())
    }
}
