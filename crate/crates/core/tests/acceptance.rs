use std::process::ExitCode;
use std::time::{Duration, Instant};

use cylq_core::cylindric::Profile;
use cylq_core::suite::theorems::{
    a1_reports, h_infinite_scan, mod3k_relation_cases, mod3k_theorem_combo, mod3k_theorem_cases, oracle_reports,
    random_weierstrass, seeds_vs_recursion, table_vs_recursion, verify_bivariate_k_conjecture,
    verify_mod3k_relation, verify_mod3k_theorem, verify_weierstrass, weierstrass_mod3k_args,
};
use cylq_core::suite::{
    check_stored, empty_certificate_control, fuzz_relation, numeric_residual, run_campaign, search_report,
    verify_corrupted, verify_relations, verify_sum_product, Campaign, CampaignOptions, STORED_CERTIFICATES,
};
use cylq_core::symbolic::{parse_combo, residual_for, RelationId, SearchBounds};
use cylq_core::{Status, VerificationReport};

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

fn expect(reports: &[VerificationReport], want: Status) -> Outcome {
    let bad: Vec<String> = reports.iter().filter(|r| r.status != want).map(|r| r.line()).collect();
    Outcome {
        pass: bad.is_empty() && !reports.is_empty(),
        notes: bad,
    }
}

fn within(mut o: Outcome, t: Instant, limit: Duration) -> Outcome {
    if t.elapsed() > limit {
        o.pass = false;
        o.notes.push(format!("took {:.1?}, limit {limit:?}", t.elapsed()));
    }
    o
}

fn join(parts: Vec<Outcome>) -> Outcome {
    Outcome {
        pass: parts.iter().all(|o| o.pass),
        notes: parts.into_iter().flat_map(|o| o.notes).collect(),
    }
}

fn flag(pass: bool, note: &str) -> Outcome {
    Outcome {
        pass,
        notes: if pass { vec![] } else { vec![note.to_string()] },
    }
}

fn oracle_triangle() -> Outcome {
    let t = Instant::now();
    within(expect(&oracle_reports(4, 12), Status::VerifiedToOrder), t, Duration::from_secs(60))
}

fn rogers_ramanujan() -> Outcome {
    let r: Vec<_> = ["RR1", "RR2"].iter().map(|id| verify_sum_product(id, 60).unwrap()).collect();
    expect(&r, Status::VerifiedToOrder)
}

fn theorems_vs_recursion() -> Outcome {
    let t = Instant::now();
    let r: Vec<_> = [5, 6, 7, 8, 10].into_iter().flat_map(|m| table_vs_recursion(m, 40)).collect();
    within(expect(&r, Status::VerifiedToOrder), t, Duration::from_secs(300))
}

fn catalog() -> Outcome {
    let tags = ["300", "210", "111", "700", "610", "520", "511", "421", "322", "430", "430b", "331", "330"];
    let r: Vec<_> = tags.iter().map(|id| verify_sum_product(id, 60).unwrap()).collect();
    expect(&r, Status::VerifiedToOrder)
}

fn relation_lemmas() -> Outcome {
    let r: Vec<_> = [8, 9, 10, 11, 12, 13]
        .into_iter()
        .flat_map(|m| verify_relations(m, 20, 30, SEED).unwrap())
        .collect();
    expect(&r, Status::VerifiedToOrder)
}

fn printed_certificates() -> Outcome {
    let r: Vec<_> = STORED_CERTIFICATES.iter().map(check_stored).collect();
    expect(&r, Status::CertificateVerified)
}

fn certificate_search() -> Outcome {
    let mut parts = Vec::new();
    for m in [6, 7] {
        for c in cylq_core::cylindric::all_profiles(m - 3) {
            let t = Instant::now();
            let r = search_report(c, &SearchBounds::default());
            parts.push(within(expect(&[r], Status::CertificateVerified), t, Duration::from_secs(120)));
        }
    }
    let fallback: Vec<_> =
        [[3, 2, 2], [4, 3, 0], [3, 3, 1]].into_iter().map(|c| numeric_residual(Profile::new(c), 40)).collect();
    parts.push(expect(&fallback, Status::VerifiedToOrder));
    join(parts)
}

fn a1_suite() -> Outcome {
    expect(&a1_reports(30), Status::VerifiedToOrder)
}

fn infinite_level_scan() -> Outcome {
    let r = h_infinite_scan(30);
    let proved = ["infinite-level-(0,0)", "infinite-level-(inf,0)", "infinite-level-(inf,inf)"];
    let (a, b): (Vec<_>, Vec<_>) = r.into_iter().partition(|x| proved.contains(&x.task.as_str()));
    join(vec![
        flag(a.len() == 3, "expected three proved cases"),
        expect(&a, Status::VerifiedToOrder),
        flag(b.len() == 13, "expected thirteen open cases"),
        expect(&b, Status::ConjectureConsistent),
    ])
}

fn theta_suite() -> Outcome {
    let (a, b) = weierstrass_mod3k_args(3, 3, 3);
    let mut w = vec![verify_weierstrass(&a, &b, 9, 30).unwrap()];
    for (n, m) in [(2, 9), (3, 9), (2, 12), (3, 12)] {
        w.extend(random_weierstrass(n, m, 4, SEED, 30).unwrap());
    }
    let mut rel = Vec::new();
    for k in [3, 4] {
        for c in mod3k_relation_cases(k) {
            rel.push(verify_mod3k_relation(k, c, 40).unwrap());
        }
    }
    let mut thm = Vec::new();
    for k in [3, 4, 5] {
        for i in mod3k_theorem_cases(k) {
            thm.push(verify_mod3k_theorem(k, i, 40).unwrap());
        }
    }
    let exact = mod3k_theorem_combo(3, 3).unwrap() == parse_combo("S(0, 1, 0, 1) - 2*q*S(1, 1, 1, 1)", 9).unwrap();
    let biv = vec![verify_bivariate_k_conjecture(3, 30), verify_bivariate_k_conjecture(4, 25)];
    join(vec![
        expect(&w, Status::VerifiedToOrder),
        flag(rel.len() == 3, "expected three admissible compositions"),
        expect(&rel, Status::VerifiedToOrder),
        expect(&thm, Status::VerifiedToOrder),
        flag(exact, "k = 3, i = 3 combination differs from the mod 9 sum"),
        expect(&biv, Status::ConjectureConsistent),
    ])
}

fn conjecture_main_scan() -> Outcome {
    let r: Vec<_> = [9, 11].into_iter().flat_map(|m| seeds_vs_recursion(m, 30)).collect();
    expect(&r, Status::ConjectureConsistent)
}

fn controls() -> Outcome {
    let mut parts = Vec::new();
    for id in ["210", "RR1", "511"] {
        let r = verify_corrupted(id, 30).unwrap();
        parts.push(flag(r.status == Status::Failed && r.divergence.is_some(), &format!("corrupted {id}: {}", r.line())));
    }
    let r = verify_corrupted("210", 30).unwrap();
    parts.push(flag(
        r.divergence.as_deref() == Some("[z^0 q^1]: 2 vs 3"),
        &format!("first divergence of corrupted 210 is {:?}", r.divergence),
    ));
    for (m, c) in [(6, [2, 1, 0]), (8, [4, 1, 0]), (10, [6, 1, 0])] {
        let r = empty_certificate_control(m, c);
        let target = residual_for(Profile::new(c)).unwrap().neg().to_string();
        let ok = r.status == Status::Failed && r.detail.as_deref() == Some(&format!("nonzero symbolic residual {target}"));
        parts.push(flag(ok, &format!("empty certificate: {}", r.line())));
    }
    let id = RelationId::new(cylq_core::symbolic::Family::R2, 9).unwrap();
    parts.push(flag(fuzz_relation(id, 5, 15, SEED) == fuzz_relation(id, 5, 15, SEED), "seeded fuzz differs"));
    let runs: Vec<String> = (0..2)
        .map(|j| {
            let o = CampaignOptions {
                order: Some(10),
                jobs: 1 + 3 * j,
                seed: SEED,
                trials: 3,
                ..CampaignOptions::default()
            };
            let mut all = run_campaign(Campaign::Oracles, &o).unwrap();
            all.extend(run_campaign(Campaign::Relations, &o).unwrap());
            serde_json::to_string(&all).unwrap()
        })
        .collect();
    parts.push(flag(runs[0] == runs[1], "repeated seeded campaign output differs"));
    join(parts)
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("oracle triangle", oracle_triangle),
        ("Rogers-Ramanujan sanity", rogers_ramanujan),
        ("H expressions match the recursion at moduli 5, 6, 7, 8, 10", theorems_vs_recursion),
        ("sum-product catalog at z = 1", catalog),
        ("relation lemmas vanish", relation_lemmas),
        ("stored certificates expand exactly", printed_certificates),
        ("certificate search and numeric fallback", certificate_search),
        ("A1 suite", a1_suite),
        ("infinite-level scan", infinite_level_scan),
        ("theta relations and mod 3k theorem", theta_suite),
        ("seed scan at moduli 9 and 11", conjecture_main_scan),
        ("determinism and negative controls", controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2}: {name} ({:.1?})", i + 1, t.elapsed());
        for n in &o.notes {
            println!("    {n}");
        }
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
