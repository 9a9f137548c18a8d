use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::report::{Standing, Status, VerificationReport};
use crate::asw::a1::{
    ag_finite_rhs, ag_finite_sum, trunc_infinite_ag, trunc_infinite_ag_rhs, war_gen_sides, x_limit, x_limit_product,
};
use crate::asw::{eval_h_infinite, eval_h_seed, evec, h_infinite_conjecture, is_above_line, InfIndex};
use crate::cylindric::{all_profiles, enumerate_fc, solve_h_recursion, Profile};
use crate::error::{Error, Result};
use crate::qfunctions::{borodin_product, pi_product, pochhammer, q_poch_inf, theta, Length, Monomial};
use crate::series::{QSeries, ZPoint, ZPoly};
use crate::symbolic::{eval_combo, eval_combo_at_one, h_table, Origin, SAtom, SCombo};

type Check = (String, Result<QSeries>, Result<QSeries>);

/// Runs every comparison and reports the first disagreement, if any.
fn all_of(task: &str, statement: &str, standing: Standing, order: i64, checks: Vec<Check>) -> VerificationReport {
    let n = checks.len();
    for (label, l, r) in checks {
        let rep = VerificationReport::compare(task, statement, standing, order, l, r);
        if rep.status == Status::Failed {
            let why = rep.detail.clone();
            let mut rep = rep;
            rep.detail = Some(match why {
                Some(w) => format!("{label}: {w}"),
                None => label,
            });
            return rep;
        }
    }
    VerificationReport::compare(task, statement, standing, order, Ok(QSeries::zero(order)), Ok(QSeries::zero(order)))
        .with_detail(format!("{n} cases"))
}

fn zq_over_q(order: i64) -> Result<QSeries> {
    let zq = pochhammer(Monomial::zq_pow(1), 1, Length::Infinite, order)?;
    Ok(&zq * &q_poch_inf(1, 1, order).invert()?)
}

/// Brute force against the product formula at `z = 1` and against the recursion bivariately.
pub fn oracle_reports(max_level: u32, order: i64) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for level in 1..=max_level {
        let rec = solve_h_recursion(level, order);
        let mut product_checks = Vec::new();
        let mut rec_checks = Vec::new();
        for c in all_profiles(level) {
            let f = enumerate_fc(c.parts(), order as u32);
            let f1 = f.as_ref().map(|s| s.eval_z(ZPoint::One)).map_err(Clone::clone);
            product_checks.push((c.to_string(), f1, borodin_product(c.parts(), order)));
            let h = f.clone().and_then(|s| Ok(&zq_over_q(order)? * &s));
            let r = match &rec {
                Ok(m) => m.get(&c).cloned().ok_or_else(|| Error::UnknownProfile(c.to_string())),
                Err(e) => Err(e.clone()),
            };
            rec_checks.push((c.to_string(), h, r));
        }
        out.push(all_of(
            &format!("oracle-product-level{level}"),
            "brute-force enumeration equals the product formula at z = 1",
            Standing::Theorem,
            order,
            product_checks,
        ));
        out.push(all_of(
            &format!("oracle-recursion-level{level}"),
            "brute-force enumeration equals the recursion solution",
            Standing::Theorem,
            order,
            rec_checks,
        ));
    }
    out
}

fn standing_for(modulus: u32, origin: Origin) -> Standing {
    match (modulus, origin) {
        (5..=8 | 10, Origin::Seed | Origin::Stored | Origin::Derived) => Standing::Theorem,
        _ => Standing::Conjecture,
    }
}

/// Every `H_c` expression of the modulus against the recursion solution, bivariately.
pub fn table_vs_recursion(modulus: u32, order: i64) -> Vec<VerificationReport> {
    let level = modulus - 3;
    let table = match h_table(level) {
        Ok(t) => t,
        Err(e) => return vec![VerificationReport::failed(format!("table-m{modulus}"), "H table", order, e.to_string())],
    };
    let rec = solve_h_recursion(level, order);
    table
        .iter()
        .map(|(c, (x, origin))| {
            let r = match &rec {
                Ok(m) => Ok(m[c].clone()),
                Err(e) => Err(e.clone()),
            };
            VerificationReport::compare(
                format!("table-m{modulus}-{c}"),
                format!("{} expression for H{c} equals the recursion solution", format!("{origin:?}").to_lowercase()),
                standing_for(modulus, *origin),
                order,
                eval_combo(x, order),
                r,
            )
        })
        .collect()
}

/// Seeds above the line against the recursion solution.
pub fn seeds_vs_recursion(modulus: u32, order: i64) -> Vec<VerificationReport> {
    let level = modulus - 3;
    let rec = solve_h_recursion(level, order);
    all_profiles(level)
        .into_iter()
        .filter(|c| is_above_line(*c).unwrap_or(false))
        .map(|c| {
            let r = match &rec {
                Ok(m) => Ok(m[&c].clone()),
                Err(e) => Err(e.clone()),
            };
            VerificationReport::compare(
                format!("seed-m{modulus}-{c}"),
                format!("seed expression for H{c} equals the recursion solution"),
                standing_for(modulus, Origin::Seed),
                order,
                eval_h_seed(c, order),
                r,
            )
        })
        .collect()
}

fn inf_label(t: InfIndex) -> String {
    t.to_string()
}

pub fn a1_reports(order: i64) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let ts = [
        InfIndex::Finite(1),
        InfIndex::Finite(2),
        InfIndex::Finite(3),
        InfIndex::Finite(4),
        InfIndex::Infinity,
    ];
    for t in ts {
        let checks = (0..=8)
            .map(|n0| (format!("n0 = {n0}"), trunc_infinite_ag(t, n0, order), trunc_infinite_ag_rhs(t, n0, order)))
            .collect();
        out.push(all_of(
            &format!("a1-truncated-t{}", inf_label(t)),
            "truncated infinite-level A1 sum identity",
            Standing::Theorem,
            order,
            checks,
        ));
    }
    for k in 1..=4 {
        let mut checks = Vec::new();
        for t in 1..=k + 1 {
            for n0 in 0..=8 {
                checks.push((format!("t = {t}, n0 = {n0}"), ag_finite_sum(k, t, n0, order), ag_finite_rhs(k, t, n0, order)));
            }
        }
        out.push(all_of(
            &format!("a1-finite-k{k}"),
            "finite A1 sum-product identities",
            Standing::Theorem,
            order,
            checks,
        ));
    }
    let mut checks = Vec::new();
    for n in 0..=6 {
        for m in 0..=6 {
            match war_gen_sides(n, m, order) {
                Ok([a, b, c]) => {
                    checks.push((format!("n = {n}, m = {m}, first = second"), Ok(a.clone()), Ok(b.clone())));
                    checks.push((format!("n = {n}, m = {m}, second = third"), Ok(b), Ok(c)));
                }
                Err(e) => checks.push((format!("n = {n}, m = {m}"), Err(e.clone()), Err(e))),
            }
        }
    }
    out.push(all_of("a1-three-forms", "three forms of the bivariate (n, m) identity", Standing::Theorem, order, checks));
    let mut checks = Vec::new();
    for k in 1..=4 {
        checks.push((format!("X({k},1) product"), x_limit(k, 1, order), x_limit_product(order)));
        for t in 1..k {
            let rhs = x_limit(k, t + 1, order)
                .and_then(|a| Ok(&a - &x_limit(k, t, order)?.mul_zpoly(&ZPoly::q())));
            checks.push((format!("X({k},1) = X({k},{}) - q X({k},{t})", t + 1), x_limit(k, 1, order), rhs));
        }
    }
    out.push(all_of("a1-initial-conditions", "initial conditions X(k, t)", Standing::Theorem, order, checks));
    out
}

fn theta_or_zero(j: i64, m: i64, order: i64) -> Result<Option<QSeries>> {
    if j.rem_euclid(m) == 0 {
        return Ok(None);
    }
    theta(j, m, order).map(Some)
}

fn weierstrass_sum(a: &[i64], b: &[i64], m: i64, work: i64) -> Result<QSeries> {
    let mut acc = QSeries::zero(work);
    for (i, ai) in a.iter().enumerate() {
        let mut num = QSeries::one(work);
        let mut vanishes = false;
        for bj in b {
            match theta_or_zero(ai - bj, m, work)? {
                Some(t) => num = &num * &t,
                None => vanishes = true,
            }
        }
        if vanishes {
            continue;
        }
        let mut den = QSeries::one(work);
        for (j, aj) in a.iter().enumerate() {
            if j != i {
                den = &den * &theta(ai - aj, m, work)?;
            }
        }
        acc = &acc + &(&num * &den.invert()?);
    }
    Ok(acc)
}

/// The `n`-term theta-quotient sum with `a_i = q^(a[i])`, `b_j = q^(b[j])` in base `q^m`.
pub fn verify_weierstrass(a: &[i64], b: &[i64], m: i64, order: i64) -> Result<VerificationReport> {
    let task = format!("weierstrass-n{}-m{m}-a{a:?}-b{b:?}", a.len()).replace(' ', "");
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::InvalidArgument("a and b need the same positive length".into()));
    }
    if a.iter().sum::<i64>() != b.iter().sum::<i64>() {
        return Err(Error::SideConditionViolated("product of the a_i differs from product of the b_j".into()));
    }
    for i in 0..a.len() {
        for j in 0..i {
            if (a[i] - a[j]).rem_euclid(m) == 0 {
                return Err(Error::SideConditionViolated(format!("a_{} / a_{} is a power of q^{m}", i + 1, j + 1)));
            }
        }
    }
    let mut work = order + 4 * m * a.len() as i64;
    loop {
        let s = weierstrass_sum(a, b, m, work)?;
        if s.order() >= order {
            let cmp = QSeries::equal_to_order(&s, &QSeries::zero(order), order);
            return Ok(VerificationReport::from_comparison(
                task,
                "Weierstrass theta-quotient sum vanishes",
                Standing::Theorem,
                order,
                cmp,
            ));
        }
        work += order - s.order() + m;
    }
}

/// Random admissible instances at the given sizes and bases.
pub fn random_weierstrass(n: usize, m: i64, trials: usize, seed: u64, order: i64) -> Result<Vec<VerificationReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32 ^ m as u64);
    let mut out = Vec::new();
    while out.len() < trials {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-m..=m)).collect();
        let distinct = (0..n).all(|i| (0..i).all(|j| (a[i] - a[j]).rem_euclid(m) != 0));
        if !distinct {
            continue;
        }
        let mut b: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-m..=m)).collect();
        b.push(a.iter().sum::<i64>() - b.iter().sum::<i64>());
        out.push(verify_weierstrass(&a, &b, m, order)?);
    }
    Ok(out)
}

/// The arguments used for the mod-3k product relation.
pub fn weierstrass_mod3k_args(k: i64, c0: i64, c1: i64) -> ([i64; 3], [i64; 3]) {
    ([0, c1 - k + 1, 2 * k - c0 - 1], [k, c1 + 1, -c0 - 1])
}

fn mod3k_pre(k: u32, c: [u32; 3]) -> Result<()> {
    let [c0, c1, c2] = c;
    if k < 3 || !(c0 >= c1 && c1 >= c2) || c0 + c1 + c2 != 3 * k - 3 || c1 < k {
        return Err(Error::InvalidArgument(format!(
            "need k >= 3, c0 >= c1 >= c2, c0 + c1 + c2 = 3k - 3 and c1 >= k; got k = {k}, c = {c:?}"
        )));
    }
    Ok(())
}

/// `pi_c = pi_(2k-c2-2, 2k-c1-2, 2k-c0-2) - q^(c2+1) pi_(2k+c2, c0-k, c1-k)`.
pub fn verify_mod3k_relation(k: u32, c: [u32; 3], order: i64) -> Result<VerificationReport> {
    mod3k_pre(k, c)?;
    let [c0, c1, c2] = c;
    let first = [2 * k - c2 - 2, 2 * k - c1 - 2, 2 * k - c0 - 2];
    let second = [2 * k + c2, c0 - k, c1 - k];
    let rhs = pi_product(k, first, order).and_then(|p| {
        Ok(&p - &pi_product(k, second, order)?.mul_zpoly(&ZPoly::q_pow(c2 as i64 + 1)))
    });
    Ok(VerificationReport::compare(
        format!("mod3k-relation-k{k}-({c0},{c1},{c2})"),
        "mod 3k product relation",
        Standing::Theorem,
        order,
        pi_product(k, c, order),
        rhs,
    ))
}

/// Admissible `(k, c)` for [`verify_mod3k_relation`].
pub fn mod3k_relation_cases(k: u32) -> Vec<[u32; 3]> {
    let l = 3 * k - 3;
    let mut out = Vec::new();
    for c0 in 0..=l {
        for c1 in 0..=c0.min(l - c0) {
            let c2 = l - c0 - c1;
            if c2 <= c1 && mod3k_pre(k, [c0, c1, c2]).is_ok() {
                out.push([c0, c1, c2]);
            }
        }
    }
    out
}

fn s_atom(m: u32, a: i64, b: i64, len: usize) -> Result<SAtom> {
    SAtom::from_parts(m, &evec(a, len), &evec(b, len))
}

/// `X - q^(3k-2-2i) Y` for `H_(i, i, 3k-3-2i)(1, q)`.
pub fn mod3k_theorem_combo(k: u32, i: u32) -> Result<SCombo> {
    if k < 3 || i < k || 3 * k < 3 + 2 * i {
        return Err(Error::InvalidArgument(format!("need k >= 3, i >= k, 3k - 3 - 2i >= 0; got k = {k}, i = {i}")));
    }
    let m = 3 * k;
    let len = k as usize - 1;
    let (k, i) = (k as i64, i as i64);
    let mq = ZPoly::monomial(BigInt::from(-1), 0, 1);
    let mut x = SCombo::zero();
    if i < 2 * k - 2 {
        x.add_term(s_atom(m, 2 * k - i - 2, 2 * k - i - 2, len)?, ZPoly::one());
        x.add_term(s_atom(m, 2 * k - i - 3, 2 * k - i - 3, len)?, mq.clone());
    } else {
        x.add_term(s_atom(m, 2 * k - i - 2, 0, len)?, ZPoly::one());
    }
    let mut y = SCombo::zero();
    if i > k {
        y.add_term(s_atom(m, i - k, i - k, len)?, ZPoly::one());
        y.add_term(s_atom(m, i - k - 1, i - k - 1, len)?, mq);
    } else {
        y.add_term(s_atom(m, i - k, 0, len)?, ZPoly::one());
    }
    let mut out = x;
    out.add_combo(&y, &ZPoly::monomial(BigInt::from(-1), 0, 3 * k - 2 - 2 * i));
    Ok(out)
}

pub fn verify_mod3k_theorem(k: u32, i: u32, order: i64) -> Result<VerificationReport> {
    let combo = mod3k_theorem_combo(k, i)?;
    let c = [i, i, 3 * k - 3 - 2 * i];
    Ok(VerificationReport::compare(
        format!("mod3k-theorem-k{k}-i{i}"),
        format!("H{}(1, q) as X - q^{} Y", Profile::new(c), 3 * k - 2 - 2 * i),
        Standing::Theorem,
        order,
        borodin_product(c, order),
        eval_combo_at_one(&combo, order),
    ))
}

pub fn mod3k_theorem_cases(k: u32) -> Vec<u32> {
    (k..).take_while(|i| 3 * k >= 3 + 2 * i).collect()
}

/// `H_(k,k,k-3) = H_(k+1,k-2,k-2) - z q^(k-2) H_(3k-3,0,0)` on the recursion solution.
pub fn verify_bivariate_k_conjecture(k: u32, order: i64) -> VerificationReport {
    let task = format!("bivariate-k{k}");
    let statement = "H(k,k,k-3) = H(k+1,k-2,k-2) - z q^(k-2) H(3k-3,0,0)";
    if k < 3 {
        return VerificationReport::failed(task, statement, order, "k must be at least 3");
    }
    let (l, r) = match solve_h_recursion(3 * k - 3, order) {
        Ok(h) => {
            let get = |c: [u32; 3]| h[&Profile::new(c)].clone();
            let rhs = &get([k + 1, k - 2, k - 2])
                - &get([3 * k - 3, 0, 0]).mul_zpoly(&ZPoly::monomial(BigInt::from(1), 1, k as i64 - 2));
            (Ok(get([k, k, k - 3])), Ok(rhs))
        }
        Err(e) => (Err(e.clone()), Err(e)),
    };
    VerificationReport::compare(task, statement, Standing::Conjecture, order, l, r)
}

/// The infinite-level identity at `z = 1` for `a, b` in `{0, 1, 2, inf}`.
pub fn h_infinite_scan(order: i64) -> Vec<VerificationReport> {
    let vals = [InfIndex::Finite(0), InfIndex::Finite(1), InfIndex::Finite(2), InfIndex::Infinity];
    let proved = [
        (InfIndex::Finite(0), InfIndex::Finite(0)),
        (InfIndex::Infinity, InfIndex::Finite(0)),
        (InfIndex::Infinity, InfIndex::Infinity),
    ];
    let mut out = Vec::new();
    for a in vals {
        for b in vals {
            let standing = if proved.contains(&(a, b)) {
                Standing::Theorem
            } else {
                Standing::Conjecture
            };
            out.push(VerificationReport::compare(
                format!("infinite-level-({a},{b})"),
                "H(inf, a, b)(1, q) = (1-q^(a+1))(1-q^(b+1))(1-q^(a+b+2)) / (q)_inf^3",
                standing,
                order,
                eval_h_infinite(a, b, order).map(|s| s.eval_z(ZPoint::One)),
                h_infinite_conjecture(a, b, order),
            ));
        }
    }
    out
}

/// Profiles per level, handy for callers that batch the recursion.
pub fn recursion_cache(levels: &[u32], order: i64) -> Result<BTreeMap<u32, BTreeMap<Profile, QSeries>>> {
    levels.iter().map(|&l| Ok((l, solve_h_recursion(l, order)?))).collect()
}
