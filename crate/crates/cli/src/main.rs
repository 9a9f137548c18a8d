use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use cylq_core::cylindric::{canform, enumerate_fc, solve_h_recursion};
use cylq_core::series::init_q_floor_from_env;
use cylq_core::suite::{
    check_certificate, fuzz_relation, run_campaign, search_report, verify_corrupted, verify_sum_product, Campaign,
    CampaignOptions,
};
use cylq_core::symbolic::{derive_below_line, residual_for, search_certificate, Certificate, RelationId, SearchBounds};
use cylq_core::{Error, Profile, VerificationReport, ZPoint};

#[derive(Parser)]
#[command(name = "cylq", version, about = "Exact q-series verification for A2 cylindric partition identities")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compare the sum and product sides of a catalogued identity at z = 1.
    VerifyIdentity {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 60)]
        order: i64,
        /// Perturb the product side first, as a negative control.
        #[arg(long)]
        corrupt: bool,
    },
    /// Evaluate seeded random instances of every relation at a modulus.
    VerifyRelations {
        #[arg(long)]
        modulus: u32,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 30)]
        order: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a certificate file against the recurrence residual of a profile.
    CheckCert {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_parser = parse_profile)]
        profile: [u32; 3],
        #[arg(long)]
        modulus: u32,
    },
    /// Search for a certificate within a bounded box.
    FindCert {
        #[arg(long, value_parser = parse_profile)]
        profile: [u32; 3],
        #[arg(long)]
        modulus: u32,
        #[arg(long, value_parser = parse_window, default_value = "-2:4")]
        window: (i64, i64),
        #[arg(long, default_value_t = 2)]
        zdeg: u32,
        #[arg(long, default_value_t = 7)]
        qdeg: i64,
        /// Seconds before giving up.
        #[arg(long, default_value_t = 120)]
        time_limit: u64,
    },
    /// Brute-force generating function of cylindric partitions of a profile.
    Enumerate {
        #[arg(long, value_parser = parse_profile)]
        profile: [u32; 3],
        #[arg(long, default_value_t = 12)]
        max_weight: u32,
        /// Set z = 1.
        #[arg(long)]
        z_one: bool,
    },
    /// Solve the functional recursion at a level.
    Solve {
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 20)]
        order: i64,
        /// Only print this profile.
        #[arg(long, value_parser = parse_profile)]
        profile: Option<[u32; 3]>,
    },
    /// Derive sum expressions for every profile below the line.
    DeriveBelowLine {
        #[arg(long)]
        level: u32,
    },
    /// Run a named suite of checks.
    Campaign {
        name: String,
        #[arg(long)]
        order: Option<i64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Include wall time per task.
        #[arg(long)]
        timings: bool,
    },
}

fn parse_profile(s: &str) -> Result<[u32; 3], String> {
    let parts: Vec<u32> = s
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| format!("bad profile part {p:?}")))
        .collect::<Result<_, _>>()?;
    parts.try_into().map_err(|_| "profile needs three parts".to_string())
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(':').ok_or("window must look like a:b")?;
    let lo = a.trim().parse().map_err(|_| format!("bad window start {a:?}"))?;
    let hi = b.trim().parse().map_err(|_| format!("bad window end {b:?}"))?;
    if lo > hi {
        return Err("window start exceeds end".into());
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidArgument(_)
            | Error::UnknownIdentity(_)
            | Error::UnknownProfile(_)
            | Error::ArityMismatch { .. }
            | Error::SideConditionViolated(_)
            | Error::ScaleExceeded { .. }
            | Error::BelowTheLine(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn emit_reports(reports: &[VerificationReport], json: bool) -> bool {
    if json {
        println!("{}", serde_json::to_string_pretty(reports).expect("reports serialize"));
    } else {
        for r in reports {
            println!("{}", r.line());
        }
    }
    reports.iter().all(|r| r.passed())
}

fn profile_of(c: [u32; 3], modulus: u32) -> Result<Profile, Failure> {
    let p = Profile::exact(c)?;
    if p.modulus() != modulus {
        return Err(Failure::Usage(format!("profile {p} has modulus {}, not {modulus}", p.modulus())));
    }
    Ok(p)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let json = cli.json;
    match cli.cmd {
        Cmd::VerifyIdentity { id, order, corrupt } => {
            let r = if corrupt { verify_corrupted(&id, order)? } else { verify_sum_product(&id, order)? };
            Ok(emit_reports(&[r], json))
        }
        Cmd::VerifyRelations { modulus, trials, order, seed } => {
            let reports: Vec<_> =
                RelationId::all(modulus)?.into_iter().map(|id| fuzz_relation(id, trials, order, seed)).collect();
            Ok(emit_reports(&reports, json))
        }
        Cmd::CheckCert { file, profile, modulus } => {
            let p = profile_of(profile, modulus)?;
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
            let cert = Certificate::parse(&text, modulus)?;
            let r = check_certificate(&format!("cert-m{modulus}-{p}"), &cert, p);
            Ok(emit_reports(&[r], json))
        }
        Cmd::FindCert { profile, modulus, window, zdeg, qdeg, time_limit } => {
            let p = profile_of(profile, modulus)?;
            let bounds = SearchBounds {
                window,
                zdeg,
                qdeg,
                time_limit: Duration::from_secs(time_limit),
                ..SearchBounds::default()
            };
            if json {
                return Ok(emit_reports(&[search_report(p, &bounds)], true));
            }
            let target = residual_for(p)?;
            match search_certificate(&target, modulus, &bounds) {
                Ok((cert, _)) => {
                    println!("{cert}");
                    Ok(true)
                }
                Err(e @ (Error::NotFound(_) | Error::SearchInconclusive(_))) => {
                    println!("inconclusive: {e}");
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Enumerate { profile, max_weight, z_one } => {
            let mut s = enumerate_fc(profile, max_weight)?;
            if z_one {
                s = s.eval_z(ZPoint::One);
            }
            println!("{}", if json { s.to_json() } else { s.to_string() });
            Ok(true)
        }
        Cmd::Solve { level, order, profile } => {
            let h = solve_h_recursion(level, order)?;
            let chosen: Vec<_> = match profile {
                Some(c) => {
                    let p = canform(c);
                    if p.level() != level {
                        return Err(Failure::Usage(format!("profile {p} is not of level {level}")));
                    }
                    vec![(p, &h[&p])]
                }
                None => h.iter().map(|(p, s)| (*p, s)).collect(),
            };
            if json {
                let m: serde_json::Map<String, serde_json::Value> = chosen
                    .iter()
                    .map(|(p, s)| (p.to_string(), serde_json::to_value(s).expect("series serializes")))
                    .collect();
                println!("{}", serde_json::Value::Object(m));
            } else {
                for (p, s) in chosen {
                    println!("H{p} = {s}");
                }
            }
            Ok(true)
        }
        Cmd::DeriveBelowLine { level } => {
            let table = derive_below_line(level)?;
            if json {
                let m: serde_json::Map<String, serde_json::Value> =
                    table.iter().map(|(p, c)| (p.to_string(), c.to_string().into())).collect();
                println!("{}", serde_json::Value::Object(m));
            } else {
                for (p, c) in &table {
                    println!("H{p} = {c}");
                }
            }
            Ok(true)
        }
        Cmd::Campaign { name, order, jobs, seed, trials, timings } => {
            let c: Campaign = name.parse()?;
            let opts = CampaignOptions { order, jobs, seed, timings, trials, ..CampaignOptions::default() };
            let reports = run_campaign(c, &opts)?;
            Ok(emit_reports(&reports, json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_q_floor_from_env() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
