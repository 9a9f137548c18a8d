use std::fmt;

use crate::error::{Error, Result};

/// Residue class of the modulus: `m = 3k - 1`, `3k` or `3k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModClass {
    Minus,
    Zero,
    Plus,
}

/// `(k, class)` with `m = 3k + class`, for `m >= 5`.
pub fn k_and_class(m: u32) -> Result<(u32, ModClass)> {
    if m < 5 {
        return Err(Error::InvalidArgument(format!("modulus {m} must be at least 5")));
    }
    let k = (m + 1) / 3;
    let class = match m as i64 - 3 * k as i64 {
        -1 => ModClass::Minus,
        0 => ModClass::Zero,
        _ => ModClass::Plus,
    };
    Ok((k, class))
}

/// `S_m(rho | sigma)` with `rho, sigma` of length `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SumSpec {
    pub modulus: u32,
    pub rho: Vec<i64>,
    pub sigma: Vec<i64>,
}

impl SumSpec {
    pub fn new(modulus: u32, rho: Vec<i64>, sigma: Vec<i64>) -> Result<Self> {
        let (k, _) = k_and_class(modulus)?;
        let len = k as usize - 1;
        if rho.len() != len || sigma.len() != len {
            return Err(Error::InvalidArgument(format!(
                "S_{modulus} needs shift vectors of length {len}, got {} and {}",
                rho.len(),
                sigma.len()
            )));
        }
        Ok(SumSpec { modulus, rho, sigma })
    }

    /// Splits a flat `rho ++ sigma` vector.
    pub fn from_flat(modulus: u32, shifts: &[i64]) -> Result<Self> {
        let half = shifts.len() / 2;
        if !shifts.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument("odd number of shifts".into()));
        }
        Self::new(modulus, shifts[..half].to_vec(), shifts[half..].to_vec())
    }

    pub fn k(&self) -> u32 {
        self.rho.len() as u32 + 1
    }

    pub fn class(&self) -> ModClass {
        k_and_class(self.modulus).expect("validated modulus").1
    }

    pub fn max_abs_shift(&self) -> i64 {
        self.rho.iter().chain(&self.sigma).map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for SumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "S{}({}|{})", self.modulus, join(&self.rho), join(&self.sigma))
    }
}
