use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use super::checks::{
    check_stored, empty_certificate_control, numeric_residual, repaired_certificates, search_all, verify_relations,
};
use super::certs::STORED_CERTIFICATES;
use super::identities::{verify_corrupted, CATALOG};
use super::report::{Status, VerificationReport};
use super::theorems::{
    a1_reports, h_infinite_scan, mod3k_relation_cases, mod3k_theorem_cases, oracle_reports, random_weierstrass,
    seeds_vs_recursion, table_vs_recursion, verify_bivariate_k_conjecture, verify_mod3k_relation,
    verify_mod3k_theorem, verify_weierstrass, weierstrass_mod3k_args,
};
use crate::cylindric::all_profiles;
use crate::error::{Error, Result};
use crate::symbolic::SearchBounds;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Campaign {
    Oracles,
    Identities,
    Theorems,
    Relations,
    Certificates,
    Conjectures,
    All,
}

impl Campaign {
    pub const NAMES: &'static [&'static str] =
        &["oracles", "identities", "theorems", "relations", "certificates", "conjectures", "all"];

    pub fn default_order(self) -> i64 {
        match self {
            Campaign::Oracles => 12,
            Campaign::Identities => 60,
            Campaign::Theorems | Campaign::Certificates => 40,
            Campaign::Relations | Campaign::Conjectures => 30,
            Campaign::All => 0,
        }
    }
}

impl FromStr for Campaign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "oracles" => Campaign::Oracles,
            "identities" => Campaign::Identities,
            "theorems" => Campaign::Theorems,
            "relations" => Campaign::Relations,
            "certificates" => Campaign::Certificates,
            "conjectures" => Campaign::Conjectures,
            "all" => Campaign::All,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "unknown campaign {s:?}; expected one of {}",
                    Campaign::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct CampaignOptions {
    /// Overrides every task's default order.
    pub order: Option<i64>,
    pub jobs: usize,
    pub seed: u64,
    pub timings: bool,
    pub trials: usize,
    pub bounds: SearchBounds,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions {
            order: None,
            jobs: 1,
            seed: 0,
            timings: false,
            trials: 20,
            bounds: SearchBounds::default(),
        }
    }
}

type Job = Box<dyn Fn() -> Vec<VerificationReport> + Send + Sync>;

fn job(f: impl Fn() -> Vec<VerificationReport> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn one(r: Result<VerificationReport>, task: String, order: i64) -> Vec<VerificationReport> {
    vec![r.unwrap_or_else(|e| VerificationReport::failed(task, "task setup", order, e.to_string()))]
}

/// Accepts a negative control only when the corrupted statement is rejected with a divergence.
fn control(name: String, r: VerificationReport) -> VerificationReport {
    let ok = r.status == Status::Failed && (r.divergence.is_some() || r.detail.is_some());
    let why = r.divergence.clone().or(r.detail.clone()).unwrap_or_default();
    let status = if ok { Status::VerifiedToOrder } else { Status::Failed };
    let mut out = VerificationReport::new(name, format!("negative control rejected: {}", r.task), status, r.order);
    out.detail = Some(if ok { why } else { format!("control was not rejected ({})", r.status) });
    out
}

fn jobs_for(c: Campaign, o: &CampaignOptions) -> Vec<Job> {
    let order = o.order.unwrap_or(c.default_order());
    let mut v: Vec<Job> = Vec::new();
    match c {
        Campaign::Oracles => v.push(job(move || oracle_reports(4, order))),
        Campaign::Identities => {
            for id in CATALOG {
                v.push(job(move || vec![id.verify(order)]));
            }
            v.push(job(move || {
                vec![control("control-corrupted-210".into(), one_or(verify_corrupted("210", order), order))]
            }));
        }
        Campaign::Theorems => {
            for m in [5, 6, 7, 8, 10] {
                v.push(job(move || table_vs_recursion(m, order)));
            }
            v.push(job(move || a1_reports(order)));
            let seed = o.seed;
            v.push(job(move || {
                let (a, b) = weierstrass_mod3k_args(3, 3, 3);
                let mut out = one(verify_weierstrass(&a, &b, 9, order), "weierstrass".into(), order);
                for (n, m) in [(2, 9), (3, 9), (2, 12), (3, 12)] {
                    match random_weierstrass(n, m, 4, seed, order) {
                        Ok(r) => out.extend(r),
                        Err(e) => out.push(VerificationReport::failed("weierstrass-random", "setup", order, e.to_string())),
                    }
                }
                out
            }));
            for k in [3, 4] {
                for c in mod3k_relation_cases(k) {
                    v.push(job(move || one(verify_mod3k_relation(k, c, order), format!("mod3k-relation-k{k}"), order)));
                }
            }
            for k in [3, 4, 5] {
                for i in mod3k_theorem_cases(k) {
                    v.push(job(move || one(verify_mod3k_theorem(k, i, order), format!("mod3k-theorem-k{k}"), order)));
                }
            }
        }
        Campaign::Relations => {
            let (trials, seed) = (o.trials, o.seed);
            for m in 5..=13 {
                v.push(job(move || {
                    verify_relations(m, trials, order, seed).unwrap_or_else(|e| {
                        vec![VerificationReport::failed(format!("relation-m{m}"), "setup", order, e.to_string())]
                    })
                }));
            }
        }
        Campaign::Certificates => {
            for s in STORED_CERTIFICATES {
                v.push(job(move || vec![check_stored(s)]));
            }
            v.push(job(repaired_certificates));
            v.push(job(|| {
                vec![control("control-empty-cert-m6-(2,1,0)".into(), empty_certificate_control(6, [2, 1, 0]))]
            }));
            for m in [5, 6, 7] {
                let b = o.bounds.clone();
                v.push(job(move || search_all(m, &b)));
            }
            for m in [8, 10] {
                for p in all_profiles(m - 3) {
                    v.push(job(move || vec![numeric_residual(p, order)]));
                }
            }
        }
        Campaign::Conjectures => {
            v.push(job(move || h_infinite_scan(order)));
            for m in [9, 11] {
                v.push(job(move || seeds_vs_recursion(m, order)));
            }
            v.push(job(move || table_vs_recursion(9, order)));
            v.push(job(move || vec![verify_bivariate_k_conjecture(3, order)]));
            v.push(job(move || vec![verify_bivariate_k_conjecture(4, order.min(25))]));
        }
        Campaign::All => {
            for c in [
                Campaign::Oracles,
                Campaign::Identities,
                Campaign::Theorems,
                Campaign::Relations,
                Campaign::Certificates,
                Campaign::Conjectures,
            ] {
                v.extend(jobs_for(c, o));
            }
        }
    }
    v
}

fn one_or(r: Result<VerificationReport>, order: i64) -> VerificationReport {
    r.unwrap_or_else(|e| VerificationReport::failed("setup", "task setup", order, e.to_string()))
}

/// Runs a campaign on `jobs` workers; reports come back in task order.
pub fn run_campaign(c: Campaign, o: &CampaignOptions) -> Result<Vec<VerificationReport>> {
    let jobs = jobs_for(c, o);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(o.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let timings = o.timings;
    let out: Vec<Vec<VerificationReport>> = pool.install(|| {
        jobs.par_iter()
            .map(|j| {
                let t = Instant::now();
                let mut r = j();
                if timings {
                    let ms = t.elapsed().as_secs_f64() * 1e3;
                    for x in &mut r {
                        x.wall_ms = Some(ms);
                    }
                }
                r
            })
            .collect()
    });
    Ok(out.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        for n in Campaign::NAMES {
            assert!(n.parse::<Campaign>().is_ok());
        }
        assert!(matches!("nope".parse::<Campaign>(), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn oracles_in_parallel_match_serial() {
        let o = CampaignOptions { order: Some(8), ..Default::default() };
        let a = run_campaign(Campaign::Oracles, &o).unwrap();
        let b = run_campaign(Campaign::Oracles, &CampaignOptions { jobs: 4, ..o }).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.passed()));
    }
}
