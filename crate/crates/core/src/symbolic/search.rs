use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::atom::{SAtom, SCombo};
use super::certificate::{CertEntry, Certificate};
use super::relations::{RelInstance, RelationId};
use crate::error::{Error, Result};
use crate::series::ZPoly;

/// Search box: every argument ranges over `window`, coefficients over `z^a q^b`
/// with `0 <= a <= zdeg` and `|b| <= qdeg`.
#[derive(Clone, Debug)]
pub struct SearchBounds {
    pub window: (i64, i64),
    pub zdeg: u32,
    pub qdeg: i64,
    pub max_unknowns: usize,
    pub time_limit: Duration,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            window: (-2, 4),
            zdeg: 2,
            qdeg: 7,
            max_unknowns: 400_000,
            time_limit: Duration::from_secs(120),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchStats {
    pub instances: usize,
    pub kept: usize,
    pub unknowns: usize,
    pub equations: usize,
}

fn tuples(lo: i64, hi: i64, len: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (lo..=hi).map(move |v| {
                    let mut u = t.clone();
                    u.push(v);
                    u
                })
            })
            .collect();
    }
    out
}

fn candidates(modulus: u32, window: (i64, i64)) -> Result<Vec<(RelInstance, SCombo)>> {
    let mut insts = Vec::new();
    for id in RelationId::all(modulus)? {
        for args in tuples(window.0, window.1, id.arities()[0]) {
            insts.push(RelInstance { id, args });
        }
    }
    insts
        .into_par_iter()
        .map(|r| {
            let e = r.expand()?;
            Ok((r, e))
        })
        .filter(|x: &Result<(RelInstance, SCombo)>| !matches!(x, Ok((_, e)) if e.is_zero()))
        .collect()
}

/// Keeps instances connected to the target through shared atoms, then drops instances
/// owning an atom no other kept instance or the target touches.
fn prune(cands: &[(RelInstance, SCombo)], target: &SCombo) -> Vec<usize> {
    let mut by_atom: HashMap<&SAtom, Vec<usize>> = HashMap::new();
    for (i, (_, e)) in cands.iter().enumerate() {
        for (a, _) in e.terms() {
            by_atom.entry(a).or_default().push(i);
        }
    }
    let mut alive = vec![false; cands.len()];
    let mut seen: HashSet<&SAtom> = HashSet::new();
    let mut stack: Vec<&SAtom> = target.terms().map(|(a, _)| a).collect();
    while let Some(a) = stack.pop() {
        if !seen.insert(a) {
            continue;
        }
        for &i in by_atom.get(a).map(Vec::as_slice).unwrap_or(&[]) {
            if !alive[i] {
                alive[i] = true;
                stack.extend(cands[i].1.terms().map(|(b, _)| b));
            }
        }
    }
    loop {
        let mut count: HashMap<&SAtom, usize> = HashMap::new();
        for (i, (_, e)) in cands.iter().enumerate() {
            if alive[i] {
                for (a, _) in e.terms() {
                    *count.entry(a).or_default() += 1;
                }
            }
        }
        let mut changed = false;
        for (i, (_, e)) in cands.iter().enumerate() {
            if alive[i] && e.terms().any(|(a, _)| count[a] == 1 && target.coeff(a).is_none()) {
                alive[i] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..cands.len()).filter(|&i| alive[i]).collect()
}

type Row = BTreeMap<usize, BigRational>;

struct Echelon {
    pivots: BTreeMap<usize, (Row, BigRational)>,
    deadline: Instant,
}

impl Echelon {
    fn insert(&mut self, mut row: Row, mut rhs: BigRational) -> Result<bool> {
        loop {
            if Instant::now() > self.deadline {
                return Err(Error::SearchInconclusive("time limit reached during elimination".into()));
            }
            let hit = row.keys().copied().find(|c| self.pivots.contains_key(c));
            let Some(c) = hit else { break };
            let f = row[&c].clone();
            let (prow, prhs) = &self.pivots[&c];
            for (k, v) in prow {
                let e = row.entry(*k).or_insert_with(BigRational::zero);
                *e -= &f * v;
                if e.is_zero() {
                    row.remove(k);
                }
            }
            rhs -= &f * prhs;
        }
        let Some((&c, lead)) = row.iter().next() else {
            return Ok(rhs.is_zero());
        };
        let inv = lead.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        rhs *= &inv;
        self.pivots.insert(c, (row, rhs));
        Ok(true)
    }

    fn solve(&self) -> BTreeMap<usize, BigRational> {
        let mut x: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (&c, (row, rhs)) in self.pivots.iter().rev() {
            let mut v = rhs.clone();
            for (k, a) in row.range(c + 1..) {
                if let Some(xk) = x.get(k) {
                    v -= a * xk;
                }
            }
            if !v.is_zero() {
                x.insert(c, v);
            }
        }
        x
    }
}

/// Looks for a certificate whose expansion equals `target`, within `bounds`.
pub fn search_certificate(
    target: &SCombo,
    modulus: u32,
    bounds: &SearchBounds,
) -> Result<(Certificate, SearchStats)> {
    let mut stats = SearchStats::default();
    if target.is_zero() {
        return Ok((Certificate::empty(modulus), stats));
    }
    let deadline = Instant::now() + bounds.time_limit;
    let cands = candidates(modulus, bounds.window)?;
    stats.instances = cands.len();
    let kept = prune(&cands, target);
    stats.kept = kept.len();
    let monos: Vec<(u32, i64)> = {
        let mut v: Vec<(u32, i64)> = (0..=bounds.zdeg)
            .flat_map(|a| (-bounds.qdeg..=bounds.qdeg).map(move |b| (a, b)))
            .collect();
        v.sort_by_key(|&(a, b)| (a as i64 + b.abs(), a, b.abs(), b));
        v
    };
    let unknowns: Vec<(usize, u32, i64)> = monos
        .iter()
        .flat_map(|&(a, b)| kept.iter().map(move |&i| (i, a, b)))
        .collect();
    stats.unknowns = unknowns.len();
    if unknowns.len() > bounds.max_unknowns {
        return Err(Error::SearchInconclusive(format!(
            "{} unknowns exceed the cap {}",
            unknowns.len(),
            bounds.max_unknowns
        )));
    }
    let mut rows: HashMap<(SAtom, u32, i64), Row> = HashMap::new();
    for (col, &(i, a, b)) in unknowns.iter().enumerate() {
        for (atom, poly) in cands[i].1.terms() {
            for (&(zd, qd), c) in poly.iter() {
                let key = (atom.clone(), zd + a, qd + b);
                let e = rows.entry(key).or_default().entry(col).or_insert_with(BigRational::zero);
                *e += BigRational::from_integer(c.clone());
            }
        }
    }
    let mut rhs: HashMap<(SAtom, u32, i64), BigRational> = HashMap::new();
    for (atom, poly) in target.terms() {
        for (&(zd, qd), c) in poly.iter() {
            rhs.insert((atom.clone(), zd, qd), BigRational::from_integer(c.clone()));
        }
    }
    for key in rhs.keys() {
        if !rows.contains_key(key) {
            return Err(Error::NotFound(format!(
                "target term {} at z^{} q^{} is unreachable",
                key.0, key.1, key.2
            )));
        }
    }
    let mut system: Vec<((SAtom, u32, i64), Row)> = rows.into_iter().collect();
    for (_, r) in system.iter_mut() {
        r.retain(|_, v| !v.is_zero());
    }
    system.sort_by(|x, y| x.1.len().cmp(&y.1.len()).then_with(|| x.0.cmp(&y.0)));
    stats.equations = system.len();
    let mut ech = Echelon {
        pivots: BTreeMap::new(),
        deadline,
    };
    for (key, row) in system {
        let r = rhs.remove(&key).unwrap_or_else(BigRational::zero);
        if !ech.insert(row, r)? {
            return Err(Error::NotFound(format!("inconsistent system at {} z^{} q^{}", key.0, key.1, key.2)));
        }
    }
    let x = ech.solve();
    let mut coeffs: BTreeMap<usize, ZPoly> = BTreeMap::new();
    for (col, v) in x {
        if !v.is_integer() {
            return Err(Error::SearchInconclusive(format!("non-integral solution value {v}")));
        }
        let (i, a, b) = unknowns[col];
        let slot = coeffs.entry(i).or_default();
        *slot = &*slot + &ZPoly::monomial(v.to_integer(), a, b);
    }
    let entries = coeffs
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, coeff)| CertEntry {
            coeff,
            relation: cands[i].0.clone(),
        })
        .collect();
    let cert = Certificate { modulus, entries };
    let verdict = cert.check(target)?;
    if !verdict.valid {
        return Err(Error::SearchInconclusive(format!("solution failed re-check: {}", verdict.residual)));
    }
    Ok((cert, stats))
}
