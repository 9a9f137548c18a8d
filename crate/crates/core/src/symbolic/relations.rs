use std::fmt;

use num_bigint::BigInt;

use super::atom::{SAtom, SCombo};
use crate::asw::{k_and_class, ModClass};
use crate::error::{Error, Result};
use crate::series::ZPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    R1,
    R2,
    R3,
    R4,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::R1, Family::R2, Family::R3, Family::R4];

    pub fn number(self) -> u32 {
        match self {
            Family::R1 => 1,
            Family::R2 => 2,
            Family::R3 => 3,
            Family::R4 => 4,
        }
    }

    fn from_number(n: u32) -> Option<Family> {
        Family::ALL.get(n.checked_sub(1)? as usize).copied()
    }
}

/// One relation lemma at a given modulus. `index` selects `R1^(i)` or `R2^(i)` for `k >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationId {
    pub family: Family,
    pub modulus: u32,
    pub index: u32,
}

impl RelationId {
    pub fn new(family: Family, modulus: u32) -> Result<Self> {
        Self::with_index(family, modulus, 1)
    }

    pub fn with_index(family: Family, modulus: u32, index: u32) -> Result<Self> {
        let (k, class) = k_and_class(modulus)?;
        let id = RelationId {
            family,
            modulus,
            index,
        };
        let indexed = matches!(family, Family::R1 | Family::R2);
        if index != 1 && !(indexed && k >= 3 && index <= k - 2) {
            return Err(Error::InvalidArgument(format!("{id} has no index {index} at modulus {modulus}")));
        }
        let exists = match (k, class) {
            (2, ModClass::Minus) => family == Family::R1,
            (2, _) => family != Family::R4,
            _ => true,
        };
        if !exists {
            return Err(Error::InvalidArgument(format!("no relation {family:?} at modulus {modulus}")));
        }
        Ok(id)
    }

    pub fn k(&self) -> u32 {
        k_and_class(self.modulus).expect("validated modulus").0
    }

    pub fn class(&self) -> ModClass {
        k_and_class(self.modulus).expect("validated modulus").1
    }

    /// Argument counts accepted by `expand_relation`; the first is the canonical one.
    pub fn arities(&self) -> Vec<usize> {
        let k = self.k() as usize;
        if k == 2 {
            return vec![1];
        }
        let full = 2 * (k - 1);
        match (self.family, self.class()) {
            (Family::R3 | Family::R4, ModClass::Minus) => vec![full - 1, full],
            _ => vec![full],
        }
    }

    /// Every relation available at `modulus`.
    pub fn all(modulus: u32) -> Result<Vec<RelationId>> {
        let (k, _) = k_and_class(modulus)?;
        let mut out = Vec::new();
        for family in Family::ALL {
            let indices = match family {
                Family::R1 | Family::R2 if k >= 3 => 1..=k - 2,
                _ => 1..=1,
            };
            for i in indices {
                if let Ok(id) = RelationId::with_index(family, modulus, i) {
                    out.push(id);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.family.number())?;
        if self.index != 1 {
            write!(f, "_{}", self.index)?;
        }
        Ok(())
    }
}

/// Parses `R1`, `R2_3` and the like for the given modulus.
pub fn parse_relation_name(name: &str, modulus: u32) -> Result<RelationId> {
    let bad = || Error::Parse(format!("unknown relation name {name:?}"));
    let rest = name.strip_prefix('R').ok_or_else(bad)?;
    let (fam, idx) = match rest.split_once('_') {
        Some((a, b)) => (a, b.parse::<u32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let family = fam.parse::<u32>().ok().and_then(Family::from_number).ok_or_else(bad)?;
    RelationId::with_index(family, modulus, idx)
}

/// A relation with concrete integer arguments.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelInstance {
    pub id: RelationId,
    pub args: Vec<i64>,
}

impl RelInstance {
    pub fn expand(&self) -> Result<SCombo> {
        expand_relation(self.id, &self.args)
    }
}

impl fmt::Display for RelInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(i64::to_string).collect();
        write!(f, "{}({})", self.id, args.join(", "))
    }
}

struct Builder {
    modulus: u32,
    out: SCombo,
}

impl Builder {
    fn add(&mut self, coeff: ZPoly, shifts: Vec<i64>) -> Result<()> {
        self.out.add_term(SAtom::new(self.modulus, shifts)?, coeff);
        Ok(())
    }

    fn mono(&mut self, c: i64, zdeg: u32, qdeg: i64, shifts: Vec<i64>) -> Result<()> {
        self.add(ZPoly::monomial(BigInt::from(c), zdeg, qdeg), shifts)
    }
}

fn poly(terms: &[(i64, u32, i64)]) -> ZPoly {
    let mut p = ZPoly::zero();
    for &(c, z, q) in terms {
        p.add_term(z, q, BigInt::from(c));
    }
    p
}

fn rank_two(id: RelationId, a: i64) -> Result<SCombo> {
    let mut b = Builder {
        modulus: id.modulus,
        out: SCombo::zero(),
    };
    let s = |r: i64, t: i64| vec![r, t];
    match (id.modulus, id.family) {
        (5, Family::R1) => {
            b.mono(1, 1, 1, s(2, 1))?;
            b.mono(-1, 0, 0, s(0, 1))?;
            b.mono(1, 0, 0, s(1, 1))?;
        }
        (6, Family::R1) => {
            b.mono(1, 0, 0, s(0, 0))?;
            b.add(poly(&[(-1, 0, 0), (-1, 0, 1)]), s(1, 1))?;
            b.mono(-1, 1, 1, s(2, -1))?;
        }
        (6, Family::R2) => {
            b.mono(2, 0, 0, s(1, 1))?;
            b.mono(-1, 0, 0, s(2, -1))?;
            b.add(poly(&[(1, 0, 1), (-1, 1, 2)]), s(3, 0))?;
        }
        (6, Family::R3) => {
            b.mono(1, 0, 0, s(0, 0))?;
            b.mono(-1, 0, 1, s(1, 1))?;
            b.add(poly(&[(-1, 0, 0), (-1, 1, 2)]), s(3, 0))?;
            b.add(poly(&[(1, 0, 1), (-1, 1, 3)]), s(4, 1))?;
            b.mono(-1, 1, 1, s(2, -1))?;
        }
        (7, Family::R1) => {
            b.mono(1, 0, 0, s(0, 0))?;
            b.mono(-1, 0, 0, s(1, 0))?;
            b.mono(-1, 0, 1, s(1, 1))?;
            b.mono(1, 0, 1, s(2, 1))?;
            b.mono(-1, 1, 1, s(2, -1))?;
        }
        (7, Family::R2) => {
            b.mono(1, 0, 0, s(0, 1))?;
            b.mono(1, 0, 0, s(1, 0))?;
            b.mono(-1, 0, 0, s(1, -1))?;
            b.mono(1, 0, 1, s(2, 0))?;
            b.mono(-1, 0, 1, s(2, 1))?;
        }
        (7, Family::R3) => {
            b.mono(-1, 0, 0, s(0, 1))?;
            b.add(poly(&[(1, 0, 0), (1, 1, 1)]), s(2, 0))?;
            b.mono(1, 1, 2, s(3, 0))?;
            b.mono(-1, 0, 1, s(3, 1))?;
        }
        _ => return Err(Error::InvalidArgument(format!("no relation {id} at modulus {}", id.modulus))),
    }
    Ok(b.out.shift_z(a))
}

fn unit(n: usize, j: usize) -> Vec<i64> {
    (1..=n).map(|t| i64::from(t == j)).collect()
}

fn comb(base: &[i64], parts: &[(i64, Vec<i64>)]) -> Vec<i64> {
    let mut v = base.to_vec();
    for (c, d) in parts {
        for (x, y) in v.iter_mut().zip(d) {
            *x += c * y;
        }
    }
    v
}

fn prefix(n: usize, i: usize) -> Vec<i64> {
    (1..=n).map(|t| i64::from(t <= i)).collect()
}

fn cat(a: Vec<i64>, b: Vec<i64>) -> Vec<i64> {
    let mut v = a;
    v.extend(b);
    v
}

fn higher_rank(id: RelationId, args: &[i64]) -> Result<SCombo> {
    let n = id.k() as usize - 1;
    let mut full = args.to_vec();
    if args.len() == 2 * n - 1 {
        let at = match id.family {
            Family::R3 => 2 * n - 1,
            _ => n - 1,
        };
        full.insert(at, 0);
    } else if id.class() == ModClass::Minus {
        let (pos, what) = match id.family {
            Family::R3 => (2 * n - 1, "sigma"),
            Family::R4 => (n - 1, "rho"),
            _ => (usize::MAX, ""),
        };
        if pos != usize::MAX && full[pos] != 0 {
            return Err(Error::SideConditionViolated(format!(
                "{id} at modulus {} needs {what}_{n} = 0, got {}",
                id.modulus, full[pos]
            )));
        }
    }
    let rho = full[..n].to_vec();
    let sigma = full[n..].to_vec();
    let i = id.index as usize;
    let d = |j: usize| unit(n, j);
    let all = prefix(n, n);
    let mut b = Builder {
        modulus: id.modulus,
        out: SCombo::zero(),
    };
    let sum = |v: &[i64], upto: usize| v[..upto].iter().sum::<i64>();
    b.mono(1, 0, 0, cat(rho.clone(), sigma.clone()))?;
    match (id.family, id.class()) {
        (Family::R1, _) => {
            let p = prefix(n, i);
            b.mono(-1, 0, 0, cat(comb(&rho, &[(1, d(i)), (-1, d(i + 1))]), sigma.clone()))?;
            b.mono(
                -1,
                1,
                i as i64 + sum(&rho, i),
                cat(comb(&rho, &[(2, p.clone())]), comb(&sigma, &[(-1, p)])),
            )?;
        }
        (Family::R2, _) => {
            let p = prefix(n, i);
            b.mono(-1, 0, 0, cat(rho.clone(), comb(&sigma, &[(1, d(i)), (-1, d(i + 1))])))?;
            b.mono(
                -1,
                0,
                i as i64 + sum(&sigma, i),
                cat(comb(&rho, &[(-1, p.clone())]), comb(&sigma, &[(2, p)])),
            )?;
        }
        (Family::R3, ModClass::Plus) => {
            b.mono(-1, 0, 0, cat(rho.clone(), comb(&sigma, &[(1, d(n))])))?;
            b.mono(-1, 0, 1, cat(comb(&rho, &[(1, d(n))]), comb(&sigma, &[(1, d(n))])))?;
            b.mono(1, 0, 1, cat(comb(&rho, &[(1, d(n))]), comb(&sigma, &[(2, d(n))])))?;
            b.mono(
                -1,
                0,
                n as i64 + sum(&sigma, n),
                cat(comb(&rho, &[(-1, all.clone())]), comb(&sigma, &[(2, all)])),
            )?;
        }
        (Family::R4, ModClass::Plus) => {
            b.mono(-1, 0, 0, cat(comb(&rho, &[(1, d(n))]), sigma.clone()))?;
            b.mono(-1, 0, 1, cat(comb(&rho, &[(1, d(n))]), comb(&sigma, &[(1, d(n))])))?;
            b.mono(1, 0, 1, cat(comb(&rho, &[(2, d(n))]), comb(&sigma, &[(1, d(n))])))?;
            b.mono(
                -1,
                1,
                n as i64 + sum(&rho, n),
                cat(comb(&rho, &[(2, all.clone())]), comb(&sigma, &[(-1, all)])),
            )?;
        }
        (Family::R3, ModClass::Minus) => {
            b.mono(-1, 0, 0, cat(rho.clone(), comb(&sigma, &[(1, d(n))])))?;
            b.mono(-1, 0, 1, cat(comb(&rho, &[(1, d(n))]), comb(&sigma, &[(1, d(n))])))?;
            b.mono(1, 0, 1, cat(comb(&rho, &[(1, d(n))]), comb(&sigma, &[(1, d(n - 1)), (1, d(n))])))?;
        }
        (Family::R4, ModClass::Minus) => {
            b.mono(-1, 0, 0, cat(comb(&rho, &[(1, d(n))]), sigma.clone()))?;
            b.mono(-1, 0, 1, cat(comb(&rho, &[(1, d(n))]), comb(&sigma, &[(1, d(n))])))?;
            b.mono(1, 0, 1, cat(comb(&rho, &[(1, d(n - 1)), (1, d(n))]), comb(&sigma, &[(1, d(n))])))?;
        }
        (family, ModClass::Zero) => {
            let twice = cat(comb(&rho, &[(1, d(n))]), comb(&sigma, &[(1, d(n))]));
            b.add(poly(&[(-1, 0, 0), (-1, 0, 1)]), twice)?;
            b.mono(1, 0, 1, cat(comb(&rho, &[(2, d(n))]), comb(&sigma, &[(2, d(n))])))?;
            let head = prefix(n, n - 1);
            let bent = |v: &[i64]| comb(v, &[(-1, head.clone()), (2, d(n))]);
            let (z_sigma, q_rho) = if family == Family::R3 {
                (comb(&sigma, &[(-1, all.clone())]), bent(&rho))
            } else {
                (bent(&sigma), comb(&rho, &[(-1, all.clone())]))
            };
            b.mono(-1, 1, n as i64 + sum(&rho, n), cat(comb(&rho, &[(2, all.clone())]), z_sigma))?;
            b.mono(-1, 0, n as i64 + sum(&sigma, n), cat(q_rho, comb(&sigma, &[(2, all)])))?;
        }
    }
    Ok(b.out)
}

/// Left side of the relation lemma `id` at `args`, which the lemma asserts is zero.
pub fn expand_relation(id: RelationId, args: &[i64]) -> Result<SCombo> {
    let arities = id.arities();
    if !arities.contains(&args.len()) {
        return Err(Error::ArityMismatch {
            relation: id.to_string(),
            expected: arities[0],
            got: args.len(),
        });
    }
    if id.k() == 2 {
        rank_two(id, args[0])
    } else {
        higher_rank(id, args)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(m: u32, s: &[i64]) -> SAtom {
        SAtom::new(m, s.to_vec()).unwrap()
    }

    #[test]
    fn mod_ten_r1_example() {
        let id = RelationId::new(Family::R1, 10).unwrap();
        let c = expand_relation(id, &[0, 1, 1, 1]).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.coeff(&atom(10, &[0, 1, 1, 1])), Some(&ZPoly::one()));
        assert_eq!(c.coeff(&atom(10, &[1, 0, 1, 1])), Some(&ZPoly::constant(-1)));
        assert_eq!(
            c.coeff(&atom(10, &[2, 1, 0, 1])),
            Some(&ZPoly::monomial(BigInt::from(-1), 1, 1))
        );
    }

    #[test]
    fn mod_nine_r3_has_five_terms() {
        let id = RelationId::new(Family::R3, 9).unwrap();
        let c = expand_relation(id, &[1, 2, 0, -1]).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(
            c.coeff(&atom(9, &[3, 4, -1, -2])),
            Some(&ZPoly::monomial(BigInt::from(-1), 1, 5))
        );
        assert_eq!(
            c.coeff(&atom(9, &[1, 3, 0, 0])),
            Some(&(&ZPoly::constant(-1) - &ZPoly::q()))
        );
        assert_eq!(
            c.coeff(&atom(9, &[0, 4, 2, 1])),
            Some(&ZPoly::monomial(BigInt::from(-1), 0, 1))
        );
    }

    #[test]
    fn mod_eight_terminal_forms() {
        let r3 = RelationId::new(Family::R3, 8).unwrap();
        let short = expand_relation(r3, &[1, 0, 2]).unwrap();
        let long = expand_relation(r3, &[1, 0, 2, 0]).unwrap();
        assert_eq!(short, long);
        assert!(short.coeff(&atom(8, &[1, 1, 3, 1])).is_some());
        assert!(matches!(
            expand_relation(r3, &[1, 0, 2, 1]),
            Err(Error::SideConditionViolated(_))
        ));
        let r4 = RelationId::new(Family::R4, 8).unwrap();
        let c = expand_relation(r4, &[1, 0, 0]).unwrap();
        assert!(c.coeff(&atom(8, &[2, 1, 0, 1])).is_some());
        assert!(matches!(expand_relation(r4, &[1, 0]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn rank_two_shift() {
        let id = RelationId::new(Family::R1, 6).unwrap();
        let c = expand_relation(id, &[-1]).unwrap();
        assert_eq!(c.coeff(&atom(6, &[1, -1])), Some(&ZPoly::monomial(BigInt::from(-1), 1, 0)));
        assert!(RelationId::new(Family::R2, 5).is_err());
        assert!(RelationId::new(Family::R4, 7).is_err());
    }

    #[test]
    fn names() {
        let id = parse_relation_name("R2_2", 13).unwrap();
        assert_eq!(id.to_string(), "R2_2");
        assert_eq!(parse_relation_name("R1", 13).unwrap().index, 1);
        assert!(parse_relation_name("R1_2", 10).is_err());
        assert!(parse_relation_name("R5", 10).is_err());
        assert_eq!(RelationId::all(6).unwrap().len(), 3);
        assert_eq!(RelationId::all(13).unwrap().len(), 6);
    }
}
