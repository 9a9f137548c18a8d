use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::certs::{StoredCertificate, STORED_CERTIFICATES};
use super::report::{Standing, Status, VerificationReport};
use crate::cylindric::{all_profiles, Profile};
use crate::error::{Error, Result};
use crate::series::QSeries;
use crate::symbolic::{
    eval_combo, residual_for, search_certificate, Certificate, RelInstance, RelationId, SCombo,
    SearchBounds,
};

pub const FUZZ_RANGE: (i64, i64) = (-2, 3);

/// Seeded random argument tuples for one relation; side-condition rejects are redrawn.
pub fn fuzz_relation(id: RelationId, trials: usize, order: i64, seed: u64) -> VerificationReport {
    let task = format!("relation-m{}-{id}", id.modulus);
    let statement = format!("{id} expands to a combination summing to zero");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((id.modulus as u64) << 40) ^ ((id.family.number() as u64) << 32) ^ id.index as u64);
    let arity = id.arities()[0];
    let mut done = 0;
    let mut rejected = 0;
    while done < trials {
        let args: Vec<i64> = (0..arity).map(|_| rng.gen_range(FUZZ_RANGE.0..=FUZZ_RANGE.1)).collect();
        let inst = RelInstance { id, args };
        let combo = match inst.expand() {
            Ok(c) => c,
            Err(Error::SideConditionViolated(_)) if rejected < 100 * trials => {
                rejected += 1;
                continue;
            }
            Err(e) => return VerificationReport::failed(task, statement, order, format!("{inst}: {e}")),
        };
        let cmp = eval_combo(&combo, order).and_then(|s| QSeries::equal_to_order(&s, &QSeries::zero(order), order));
        let rep = VerificationReport::from_comparison(&task, &statement, Standing::Theorem, order, cmp);
        if rep.status == Status::Failed {
            return rep.with_detail(inst.to_string());
        }
        done += 1;
    }
    VerificationReport::new(task, statement, Status::VerifiedToOrder, order)
        .with_detail(format!("{trials} trials, seed {seed}"))
}

pub fn verify_relations(modulus: u32, trials: usize, order: i64, seed: u64) -> Result<Vec<VerificationReport>> {
    Ok(RelationId::all(modulus)?.into_iter().map(|id| fuzz_relation(id, trials, order, seed)).collect())
}

/// Symbolic check of `cert` against the recurrence residual of `profile`.
pub fn check_certificate(task: &str, cert: &Certificate, profile: Profile) -> VerificationReport {
    let statement = format!("certificate expands to the recurrence residual for H{profile}");
    let verdict = residual_for(profile).and_then(|t| cert.check(&t));
    match verdict {
        Ok(v) if v.valid => VerificationReport::new(task, statement, Status::CertificateVerified, 0)
            .with_detail(format!("{} entries", cert.entries.len())),
        Ok(v) => VerificationReport::failed(task, statement, 0, format!("nonzero symbolic residual {}", v.residual)),
        Err(e) => VerificationReport::failed(task, statement, 0, e.to_string()),
    }
}

pub fn check_stored(s: &StoredCertificate) -> VerificationReport {
    match s.certificate() {
        Ok(c) => check_certificate(&s.tag(), &c, s.profile()),
        Err(e) => VerificationReport::failed(s.tag(), "stored certificate parses", 0, e.to_string()),
    }
}

fn negated(c: &Certificate) -> Certificate {
    let mut out = c.clone();
    for e in &mut out.entries {
        e.coeff = e.coeff.scale(&(-1).into());
    }
    out
}

/// Repaired forms of the two stored certificates that do not match exactly.
pub fn repaired_certificates() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    let fixed = Certificate::parse("-R1(0, 1, 1, 1)", 8);
    out.push(match fixed {
        Ok(c) => check_certificate("cert-m8-(4,1,0)-repaired", &c, Profile::new([4, 1, 0])),
        Err(e) => VerificationReport::failed("cert-m8-(4,1,0)-repaired", "parse", 0, e.to_string()),
    });
    let stored = STORED_CERTIFICATES.iter().find(|s| s.modulus == 10 && s.profile == [5, 1, 1]);
    if let Some(s) = stored {
        out.push(match s.certificate() {
            Ok(c) => check_certificate("cert-m10-(5,1,1)-negated", &negated(&c), s.profile()),
            Err(e) => VerificationReport::failed("cert-m10-(5,1,1)-negated", "parse", 0, e.to_string()),
        });
    }
    out
}

/// The empty certificate must fail for any profile with a nonzero residual.
pub fn empty_certificate_control(modulus: u32, profile: [u32; 3]) -> VerificationReport {
    let task = format!("control-empty-cert-m{modulus}-{}", Profile::new(profile));
    check_certificate(&task, &Certificate::empty(modulus), Profile::new(profile))
}

/// Runs the search and re-checks what it returns.
pub fn search_report(profile: Profile, bounds: &SearchBounds) -> VerificationReport {
    let m = profile.modulus();
    let task = format!("search-m{m}-{profile}");
    let statement = format!("search finds a certificate for H{profile}");
    let found = residual_for(profile).and_then(|t| search_certificate(&t, m, bounds).map(|(c, s)| (c, s, t)));
    match found {
        Ok((c, s, t)) => match c.check(&t) {
            Ok(v) if v.valid => VerificationReport::new(task, statement, Status::CertificateVerified, 0).with_detail(
                format!("{} entries, {} relation instances kept, {} unknowns", c.entries.len(), s.kept, s.unknowns),
            ),
            Ok(v) => VerificationReport::failed(task, statement, 0, format!("search returned a bad certificate: {}", v.residual)),
            Err(e) => VerificationReport::failed(task, statement, 0, e.to_string()),
        },
        Err(e @ (Error::SearchInconclusive(_) | Error::NotFound(_))) => {
            VerificationReport::new(task, statement, Status::Inconclusive, 0).with_detail(e.to_string())
        }
        Err(e) => VerificationReport::failed(task, statement, 0, e.to_string()),
    }
}

pub fn search_all(modulus: u32, bounds: &SearchBounds) -> Vec<VerificationReport> {
    all_profiles(modulus - 3).into_iter().map(|c| search_report(c, bounds)).collect()
}

/// The recurrence residual evaluates to zero as a series.
pub fn numeric_residual(profile: Profile, order: i64) -> VerificationReport {
    let task = format!("residual-m{}-{profile}", profile.modulus());
    let statement = format!("recurrence residual for H{profile} sums to zero");
    let cmp = residual_for(profile)
        .and_then(|r: SCombo| eval_combo(&r, order))
        .and_then(|s| QSeries::equal_to_order(&s, &QSeries::zero(order), order));
    VerificationReport::from_comparison(task, statement, Standing::Theorem, order, cmp)
}
