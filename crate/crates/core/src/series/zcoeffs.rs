use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `z`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZCoeffs(Vec<BigInt>);

impl ZCoeffs {
    pub fn zero() -> Self {
        ZCoeffs(Vec::new())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(zdeg: u32, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); zdeg as usize + 1];
        v[zdeg as usize] = c;
        ZCoeffs(v)
    }

    pub fn from_vec(v: Vec<BigInt>) -> Self {
        let mut p = ZCoeffs(v);
        p.trim();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() as u32 - 1)
        }
    }

    pub fn coeff(&self, zdeg: u32) -> BigInt {
        self.0.get(zdeg as usize).cloned().unwrap_or_default()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    /// Nonzero `(zdeg, coefficient)` pairs in ascending degree.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d as u32, c))
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn ensure_len(&mut self, len: usize) {
        if self.0.len() < len {
            self.0.resize(len, BigInt::zero());
        }
    }

    pub fn add_assign(&mut self, other: &ZCoeffs) {
        self.ensure_len(other.0.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
        self.trim();
    }

    pub fn sub_assign(&mut self, other: &ZCoeffs) {
        self.ensure_len(other.0.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a -= b;
        }
        self.trim();
    }

    /// `self += c * z^zshift * other`.
    pub fn add_scaled(&mut self, other: &ZCoeffs, c: &BigInt, zshift: u32) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let s = zshift as usize;
        self.ensure_len(other.0.len() + s);
        for (i, b) in other.0.iter().enumerate() {
            if !b.is_zero() {
                self.0[i + s] += c * b;
            }
        }
        self.trim();
    }

    /// `self += a * b` without intermediate allocation of the product.
    pub fn add_product(&mut self, a: &ZCoeffs, b: &ZCoeffs) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        self.ensure_len(a.0.len() + b.0.len() - 1);
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    self.0[i + j] += x * y;
                }
            }
        }
        self.trim();
    }

    pub fn mul(&self, other: &ZCoeffs) -> ZCoeffs {
        let mut out = ZCoeffs::zero();
        out.add_product(self, other);
        out
    }

    pub fn scale(&self, c: &BigInt) -> ZCoeffs {
        if c.is_zero() {
            return ZCoeffs::zero();
        }
        ZCoeffs(self.0.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> ZCoeffs {
        ZCoeffs(self.0.iter().map(|x| -x).collect())
    }

    pub fn eval_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn eval_zero(&self) -> BigInt {
        self.coeff(0)
    }

    /// `Some(±1)` when the polynomial is the z-free constant ±1.
    pub fn unit_sign(&self) -> Option<i8> {
        if self.0.len() == 1 && self.0[0].abs().is_one() {
            Some(if self.0[0].is_positive() { 1 } else { -1 })
        } else {
            None
        }
    }
}
