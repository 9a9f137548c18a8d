use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Composition `(c0, c1, c2)` in canonical rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile([u32; 3]);

impl Profile {
    pub fn new(c: [u32; 3]) -> Self {
        canform(c)
    }

    /// Accepts `c` only if it is already canonical.
    pub fn exact(c: [u32; 3]) -> Result<Self> {
        let p = canform(c);
        if p.0 == c {
            Ok(p)
        } else {
            Err(Error::InvalidArgument(format!(
                "({},{},{}) is not canonical; use {p}",
                c[0], c[1], c[2]
            )))
        }
    }

    pub fn parts(&self) -> [u32; 3] {
        self.0
    }

    pub fn level(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn modulus(&self) -> u32 {
        self.level() + 3
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl std::str::FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<u32> = trimmed
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad profile {s:?}")))?;
        match parts.as_slice() {
            [a, b, c] => Ok(canform([*a, *b, *c])),
            _ => Err(Error::Parse(format!("profile {s:?} needs three parts"))),
        }
    }
}

/// Canonical rotation: descending sort when two parts tie, otherwise the
/// rotation that puts the maximum first.
pub fn canform(c: [u32; 3]) -> Profile {
    if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
        let mut s = c;
        s.sort_unstable_by(|a, b| b.cmp(a));
        return Profile(s);
    }
    let max = *c.iter().max().unwrap();
    let s = c.iter().position(|&x| x == max).unwrap();
    Profile(match s {
        0 => c,
        1 => [c[1], c[2], c[0]],
        _ => [c[2], c[0], c[1]],
    })
}

/// Subset of `{0, 1, 2}` as a bitmask.
pub type Subset = u8;

pub fn nonzero_indices(c: [u32; 3]) -> Subset {
    (0..3).filter(|&i| c[i] != 0).fold(0, |m, i| m | (1 << i))
}

/// Nonempty subsets of `set`, in increasing bitmask order.
pub fn subsets(set: Subset) -> impl Iterator<Item = Subset> {
    (1u8..8).filter(move |j| j & !set == 0)
}

/// `c(J)`: parts in `J` whose cyclic predecessor is outside `J` lose one,
/// parts outside `J` whose predecessor is inside gain one.
pub fn cj(c: [u32; 3], j: Subset) -> Result<[u32; 3]> {
    if j == 0 || j & !nonzero_indices(c) != 0 {
        return Err(Error::InvalidArgument(format!(
            "J = {j:#05b} is not a nonempty subset of the nonzero parts of {c:?}"
        )));
    }
    let has = |i: usize| j & (1 << i) != 0;
    let mut out = c;
    for (i, o) in out.iter_mut().enumerate() {
        let prev = (i + 2) % 3;
        if has(i) && !has(prev) {
            *o -= 1;
        } else if !has(i) && has(prev) {
            *o += 1;
        }
    }
    Ok(out)
}

/// Canonical profiles of the given level.
pub fn all_profiles(level: u32) -> BTreeSet<Profile> {
    let mut set = BTreeSet::new();
    for a in 0..=level {
        for b in 0..=level - a {
            set.insert(canform([a, b, level - a - b]));
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_levels() {
        let l2: Vec<_> = all_profiles(2).into_iter().map(|p| p.parts()).collect();
        assert_eq!(l2, vec![[1, 1, 0], [2, 0, 0]]);
        let l3: Vec<_> = all_profiles(3).into_iter().map(|p| p.parts()).collect();
        assert_eq!(l3, vec![[1, 1, 1], [2, 0, 1], [2, 1, 0], [3, 0, 0]]);
        assert_eq!(all_profiles(7).len(), 12);
    }

    #[test]
    fn canform_examples() {
        assert_eq!(canform([0, 4, 3]).parts(), [4, 3, 0]);
        assert_eq!(canform([1, 2, 4]).parts(), [4, 1, 2]);
        assert_eq!(canform([3, 0, 3]).parts(), [3, 3, 0]);
        assert_eq!(canform([1, 1, 3]).parts(), [3, 1, 1]);
    }

    #[test]
    fn cj_examples() {
        assert_eq!(cj([5, 2, 0], 0b001).unwrap(), [4, 3, 0]);
        assert_eq!(cj([5, 2, 0], 0b010).unwrap(), [5, 1, 1]);
        assert_eq!(cj([5, 2, 0], 0b011).unwrap(), [4, 2, 1]);
        assert_eq!(cj([2, 1, 1], 0b111).unwrap(), [2, 1, 1]);
        assert!(cj([5, 2, 0], 0b100).is_err());
        assert!(cj([5, 2, 0], 0).is_err());
    }

    #[test]
    fn profile_parsing() {
        assert_eq!("0,4,3".parse::<Profile>().unwrap().parts(), [4, 3, 0]);
        assert_eq!("(3, 2, 2)".parse::<Profile>().unwrap().parts(), [3, 2, 2]);
        assert!("1,2".parse::<Profile>().is_err());
        assert!(Profile::exact([0, 4, 3]).is_err());
    }

    proptest! {
        #[test]
        fn canform_is_rotation_invariant(a in 0u32..7, b in 0u32..7, c in 0u32..7) {
            let p = canform([a, b, c]);
            prop_assert_eq!(canform([b, c, a]), p);
            prop_assert_eq!(canform([c, a, b]), p);
            prop_assert_eq!(canform(p.parts()), p);
            prop_assert_eq!(p.level(), a + b + c);
            let rotations = [[a, b, c], [b, c, a], [c, a, b]];
            prop_assert!(rotations.contains(&p.parts()));
        }

        #[test]
        fn cj_preserves_level(a in 0u32..6, b in 0u32..6, c in 0u32..6, j in 1u8..8) {
            let comp = [a, b, c];
            match cj(comp, j) {
                Ok(out) => prop_assert_eq!(out.iter().sum::<u32>(), a + b + c),
                Err(_) => prop_assert!(j & !nonzero_indices(comp) != 0),
            }
        }
    }
}
