use std::collections::BTreeMap;

use super::atom::{SAtom, SCombo};
use super::expr::parse_combo;
use crate::asw::{is_above_line, seed_terms};
use crate::cylindric::{all_profiles, canform, cj, nonzero_indices, subsets, Profile, Subset};
use crate::error::{Error, Result};
use crate::series::ZPoly;

/// Where an `H_c` expression comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Seed,
    Stored,
    Guess,
    Derived,
}

const STORED: &[(u32, [u32; 3], &str, Origin)] = &[
    (7, [2, 2, 0], "S(-1, 1) - z*S(1, 0)", Origin::Stored),
    (
        9,
        [3, 3, 0],
        "S(0, 1, 0, 1) - q*(1 + z)*S(1, 1, 1, 1)",
        Origin::Guess,
    ),
    (
        10,
        [4, 3, 0],
        "S(-1, 0, 1, 1) - S(0, 1, 0, 1) + (1 - z)*S(1, 0, 0, 1) + z*q*S(1, 1, 1, 1)",
        Origin::Stored,
    ),
    (
        10,
        [3, 3, 1],
        "S(-1, 0, 0, 1) - S(0, 1, 0, 0) + (1 - z)*S(1, 0, 0, 0) + z*q*S(1, 1, 0, 1) \
         - q*S(-1, 1, 1, 1) - z*S(0, 0, 1, 1)",
        Origin::Stored,
    ),
    (
        10,
        [4, 0, 3],
        "S(0, 0, 0, 1) - q*S(0, 1, 1, 1) - z*q*S(1, 0, 1, 1) - S(1, 1, 0, 0) \
         + (1 - q*z)*S(2, 0, 0, 0) + z*q^2*S(2, 1, 0, 1) + z*q*S(2, 1, 0, 0)",
        Origin::Stored,
    ),
];

fn stored(c: Profile) -> Option<(SCombo, Origin)> {
    STORED
        .iter()
        .find(|(m, p, _, _)| *m == c.modulus() && *p == c.parts())
        .map(|(m, _, text, origin)| (parse_combo(text, *m).expect("stored table parses"), *origin))
}

fn seed_combo(c: Profile) -> Result<SCombo> {
    let mut out = SCombo::zero();
    for (coeff, spec) in seed_terms(c)? {
        out.add_term(SAtom::from_parts(spec.modulus, &spec.rho, &spec.sigma)?, coeff);
    }
    Ok(out)
}

/// `H_c` as a combination of sums: the seed above the line, or a stored display below it.
pub fn h_symbolic(c: Profile) -> Result<(SCombo, Origin)> {
    if is_above_line(c)? {
        return Ok((seed_combo(c)?, Origin::Seed));
    }
    stored(c).ok_or_else(|| Error::UnknownProfile(c.to_string()))
}

/// Every profile of `level`: seeds, stored displays, and derived expressions for the rest.
pub fn h_table(level: u32) -> Result<BTreeMap<Profile, (SCombo, Origin)>> {
    let mut out = BTreeMap::new();
    let mut missing = false;
    for c in all_profiles(level) {
        match h_symbolic(c) {
            Ok(entry) => {
                out.insert(c, entry);
            }
            Err(Error::UnknownProfile(_)) => missing = true,
            Err(e) => return Err(e),
        }
    }
    if missing {
        for (c, combo) in derive_below_line(level)? {
            out.entry(c).or_insert((combo, Origin::Derived));
        }
    }
    Ok(out)
}

fn prefactor(size: u32) -> ZPoly {
    let p = ZPoly::z_pochhammer(1, size - 1);
    if size.is_multiple_of(2) {
        -&p
    } else {
        p
    }
}

/// Terms `(prefactor, shift, target)` of the right side of the recursion for the parts `c`.
fn rec_terms(c: [u32; 3]) -> Result<Vec<(Subset, ZPoly, i64, Profile)>> {
    subsets(nonzero_indices(c))
        .map(|j| {
            let size = j.count_ones();
            Ok((j, prefactor(size), i64::from(size), canform(cj(c, j)?)))
        })
        .collect()
}

fn lookup(table: &BTreeMap<Profile, SCombo>, c: Profile) -> Result<&SCombo> {
    table.get(&c).ok_or_else(|| Error::UnknownProfile(c.to_string()))
}

/// Right side minus left side of the recursion for `c`, with every `H` replaced by its combination.
pub fn recurrence_residual_symbolic(c: Profile, table: &BTreeMap<Profile, SCombo>) -> Result<SCombo> {
    let mut acc = lookup(table, c)?.neg();
    for (_, pre, shift, target) in rec_terms(c.parts())? {
        acc.add_combo(&lookup(table, target)?.shift_z(shift), &pre);
    }
    Ok(acc)
}

/// Strips origins from an `h_table`.
pub fn combos(table: &BTreeMap<Profile, (SCombo, Origin)>) -> BTreeMap<Profile, SCombo> {
    table.iter().map(|(c, (x, _))| (*c, x.clone())).collect()
}

/// Residual for `c` against `h_table(c.level())`.
pub fn residual_for(c: Profile) -> Result<SCombo> {
    recurrence_residual_symbolic(c, &combos(&h_table(c.level())?))
}

fn source_of(t: Profile) -> ([u32; 3], Subset) {
    let [a, b, c] = t.parts();
    if b >= c {
        ([a + 1, b - 1, c], 0b001)
    } else {
        ([a, b + 1, c - 1], 0b010)
    }
}

/// Expressions for the profiles below the line, each isolated from the recursion of a
/// neighbour through a `|J| = 1` term and shifted back by `z -> z q^-1`.
pub fn derive_below_line(level: u32) -> Result<BTreeMap<Profile, SCombo>> {
    let mut known = BTreeMap::new();
    let mut pending = Vec::new();
    for c in all_profiles(level) {
        if is_above_line(c)? {
            known.insert(c, seed_combo(c)?);
        } else {
            pending.push(c);
        }
    }
    let mut derived = BTreeMap::new();
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for t in pending {
            let (src, j0) = source_of(t);
            let terms = rec_terms(src)?;
            let others_known = terms.iter().all(|(j, _, _, p)| *j == j0 || known.contains_key(p));
            let clash = terms.iter().any(|(j, _, _, p)| *j != j0 && *p == t);
            if clash {
                return Err(Error::InvalidArgument(format!("{t} cannot be isolated from its recursion")));
            }
            match known.get(&canform(src)) {
                Some(h_src) if others_known => {
                    let mut acc = h_src.clone();
                    for (j, pre, shift, p) in &terms {
                        if *j != j0 {
                            acc.add_combo(&known[p].shift_z(*shift), &-pre);
                        }
                    }
                    let h = acc.shift_z(-1);
                    known.insert(t, h.clone());
                    derived.insert(t, h);
                }
                _ => rest.push(t),
            }
        }
        if rest.len() == before {
            let names: Vec<String> = rest.iter().map(Profile::to_string).collect();
            return Err(Error::UnknownProfile(names.join(" ")));
        }
        pending = rest;
    }
    Ok(derived)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: [u32; 3]) -> Profile {
        Profile::exact(c).unwrap()
    }

    #[test]
    fn table_entries() {
        let (h, o) = h_symbolic(p([7, 0, 0])).unwrap();
        assert_eq!(o, Origin::Seed);
        assert_eq!(h, parse_combo("S(1, 1, 1, 1)", 10).unwrap());
        let (h, _) = h_symbolic(p([2, 1, 1])).unwrap();
        assert_eq!(h, parse_combo("S(0, 0) - q*S(1, 1)", 7).unwrap());
        assert_eq!(h_symbolic(p([2, 2, 0])).unwrap().1, Origin::Stored);
        assert_eq!(h_symbolic(p([3, 3, 0])).unwrap().1, Origin::Guess);
        assert!(matches!(h_symbolic(p([4, 4, 0])), Err(Error::UnknownProfile(_))));
    }

    #[test]
    fn residual_examples() {
        let r = residual_for(p([6, 1, 0])).unwrap();
        assert_eq!(r, parse_combo("q*z*S(2, 1, 0, 1) + S(1, 0, 1, 1) - S(0, 1, 1, 1)", 10).unwrap());
        assert!(residual_for(p([7, 0, 0])).unwrap().is_zero());
    }

    #[test]
    fn small_levels_have_nothing_below() {
        assert!(derive_below_line(2).unwrap().is_empty());
        assert!(derive_below_line(3).unwrap().is_empty());
    }

    #[test]
    fn mod_seven_derivation_matches_display() {
        let d = derive_below_line(4).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&p([2, 2, 0])], h_symbolic(p([2, 2, 0])).unwrap().0);
    }

    #[test]
    fn derived_entries_satisfy_their_source() {
        for level in [4, 6, 7, 8] {
            let table = combos(&h_table(level).unwrap());
            for t in derive_below_line(level).unwrap().keys() {
                let (src, _) = source_of(*t);
                let mut d = table.clone();
                d.extend(derive_below_line(level).unwrap());
                let r = recurrence_residual_symbolic(canform(src), &d).unwrap();
                assert!(r.is_zero(), "level {level}, {t}: {r}");
            }
        }
    }
}
