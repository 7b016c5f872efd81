//! Acceptance criteria 1-9, one PASS/FAIL line each.
//!
//! Criteria whose statement is false as written are evaluated exactly and
//! reported as FAIL; the run only errors if the set of failing criteria
//! differs from `EXPECTED_FAILING`.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use sp2g::catalog::{order, sp_order, universal_shape, Catalog, GroupId, LieFamily, LieGroup, Sporadic, Version};
use sp2g::enumerate::{enumerate_simple_below, g_of};
use sp2g::filter::{exceptional_inequalities, run_pipeline, verify_alt_chain};
use sp2g::flag::{flag_scan, golden_braid_scan, triple_product_check};
use sp2g::rank::{p_rank_upper_bound, GRID_FIELDS, GRID_MAX_RANK, GRID_PRIMES};

/// 2: 2E_6(2) survives at g = 6. 4: |2E_6(2)| < |Sp_12(2)|.
/// 8: the golden condition does not characterize the braid relation.
const EXPECTED_FAILING: [u32; 3] = [2, 4, 8];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

const SP_TABLE: [&str; 9] = [
    "720",
    "1451520",
    "47377612800",
    "24815256521932800",
    "208114637736580743168000",
    "27930968965434591767112450048000",
    "59980383884075203672726385914533642240000",
    "2060902435720151186326095525680721766346957783040000",
    "1132992015386677099994486205757869431795095310094129168384000000",
];

const SPORADIC_TABLE: [(&str, &str); 26] = [
    ("M11", "7920"),
    ("M12", "95040"),
    ("J1", "175560"),
    ("M22", "443520"),
    ("J2", "604800"),
    ("M23", "10200960"),
    ("HS", "44352000"),
    ("J3", "50232960"),
    ("M24", "244823040"),
    ("McL", "898128000"),
    ("He", "4030387200"),
    ("Ru", "145926144000"),
    ("Suz", "448345497600"),
    ("O'N", "460815505920"),
    ("Co3", "495766656000"),
    ("Co2", "42305421312000"),
    ("Fi22", "64561751654400"),
    ("HN", "273030912000000"),
    ("Ly", "51765179004000000"),
    ("Th", "90745943887872000"),
    ("Fi23", "4089470473293004800"),
    ("Co1", "4157776806543360000"),
    ("J4", "86775571046077562880"),
    ("Fi24'", "1255205709190661721292800"),
    ("B", "4154781481226426191177580544000000"),
    ("M", "808017424794512875886459904961710757005754368000000000"),
];

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    for (i, want) in SP_TABLE.iter().enumerate() {
        let g = i as u32 + 2;
        let by_formula = order(&GroupId::lie(LieFamily::C, g, 2).unwrap()).unwrap();
        if by_formula.to_string() != *want || sp_order(g).to_string() != *want {
            bad.push(format!("Sp_{}(2)", 2 * g));
        }
    }
    let cat = Catalog::embedded();
    for (tok, want) in SPORADIC_TABLE {
        let s = Sporadic::from_token(tok).unwrap();
        if cat.sporadic_order(s).to_string() != want {
            bad.push(tok.to_string());
        }
    }
    outcome(bad.is_empty(), format!("9 symplectic and 26 sporadic orders, mismatches: {bad:?}"))
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    for g in 3..=10 {
        let r = run_pipeline(g).expect("pipeline runs");
        let want = vec![GroupId::lie(LieFamily::C, g, 2).unwrap()];
        let failed = r.failed_witnesses();
        if r.survivors != want || !failed.is_empty() {
            let names: Vec<String> = r.survivors.iter().map(ToString::to_string).collect();
            bad.push(format!("g={g}: survivors {names:?}, failed witnesses {}", failed.len()));
        }
    }
    outcome(bad.is_empty(), format!("g = 3..10, deviations: {bad:?}"))
}

fn criterion_3() -> Outcome {
    let want = [
        ("McL", 4),
        ("Suz", 5),
        ("Co3", 5),
        ("Co2", 5),
        ("Fi22", 5),
        ("Fi23", 6),
        ("Co1", 6),
        ("J4", 6),
        ("Fi24'", 7),
        ("B", 8),
        ("M", 10),
    ];
    let cat = Catalog::embedded();
    let bad: Vec<String> = want
        .iter()
        .filter_map(|&(tok, g)| {
            let rec = cat.record(Sporadic::from_token(tok).unwrap());
            let got = g_of(&rec.order);
            (got != g || rec.g_k != Some(g)).then(|| format!("{tok}: {got}"))
        })
        .collect();
    outcome(bad.is_empty(), format!("11 groups, mismatches: {bad:?}"))
}

fn criterion_4() -> Outcome {
    let ineqs = exceptional_inequalities();
    let failed: Vec<&str> = ineqs[..5].iter().filter(|i| !i.holds()).map(|i| i.label).collect();
    // |3D_4(q)| = q^12 (q^8+q^4+1)(q^6-1)(q^2-1); |2F_4(q)| = q^12 (q^6+1)(q^4-1)(q^3+1)(q-1).
    let d4 = BigInt::from(4096u32) * 273u32 * 63u32 * 3u32;
    let f4 = BigInt::from(4096u32) * 65u32 * 15u32 * 9u32;
    let d4_ok = order(&GroupId::lie(LieFamily::TrialityD4, 4, 2).unwrap()).unwrap() == d4;
    let f4_ok = order(&GroupId::lie(LieFamily::ReeF4, 4, 2).unwrap()).unwrap() == f4;
    outcome(
        failed.is_empty() && d4_ok && f4_ok,
        format!("|3D_4(2)| = {d4}, |2F_4(2)| = {f4}, false inequalities: {failed:?}"),
    )
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    for g in 3..=12u32 {
        if let Err(e) = verify_alt_chain(g) {
            bad.push(format!("g={g}: {e}"));
        }
    }
    for g in 3..=8u32 {
        let n = (1u64 << (g - 1)) * ((1u64 << g) - 1);
        let alt = common::slow_factorial(n) / 2;
        if alt <= sp_order(g) * 2 {
            bad.push(format!("g={g}: |Alt_{n}| <= 2|Sp_{}(2)|", 2 * g));
        }
    }
    outcome(bad.is_empty(), format!("chains g = 3..12, factorials g = 3..8, failures: {bad:?}"))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for fam in LieFamily::ALL {
        let ranks = fam.fixed_rank().map_or(fam.min_rank()..=GRID_MAX_RANK, |r| r..=r);
        for rank in ranks {
            for f in universal_shape(fam, rank).factors {
                let fac = sp2g::arith::factor_cyclotomic(&f.polynomial()).unwrap();
                if fac.factors.values().any(|&e| e > 1) {
                    bad.push(format!("{} {rank}: {f:?}", fam.symbol()));
                }
            }
            for q in GRID_FIELDS {
                let Ok(g) = LieGroup::new(fam, rank, q, Version::Universal) else {
                    continue;
                };
                let ord = order(&GroupId::Lie(g)).unwrap();
                for p in GRID_PRIMES.into_iter().filter(|p| q % p != 0) {
                    let b = p_rank_upper_bound(&g, p).unwrap().bound;
                    cases += 1;
                    let pb: BigInt = Pow::pow(BigInt::from(p), b);
                    if b > rank || !(&ord % pb).is_zero() {
                        bad.push(format!("{g} p={p}: bound {b}"));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{cases} (group, prime) cases, violations: {bad:?}"))
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, q, count) in [(3, 2, 168), (3, 3, 11232), (4, 2, 20160)] {
        let s = flag_scan(n, q).unwrap();
        ok &= s.passes() && s.matrices == count;
        parts.push(format!("GL_{n}({q}): {}", s.summary()));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_8() -> Outcome {
    let triples = triple_product_check(7).unwrap();
    let triple_ok = triples.len() == 36 && triples.iter().all(|t| t.holds);
    let mut parts = vec![format!("triple product {}/36", triples.iter().filter(|t| t.holds).count())];
    let mut ok = triple_ok;
    for q in [2, 3, 5, 7, 9] {
        let s = golden_braid_scan(q).unwrap();
        ok &= s.passes();
        parts.push(format!("GF({q}) {} counterexamples", s.counterexamples));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_9() -> Outcome {
    let n = BigInt::from(1_000_000u32);
    let lib: Vec<(String, BigInt)> = enumerate_simple_below(&n)
        .unwrap()
        .groups
        .into_iter()
        .map(|(g, o)| (g.to_string(), o))
        .collect();
    let oracle = common::naive_simple_below(&n);
    let first_diff = lib.iter().zip(&oracle).position(|(a, b)| a != b);
    outcome(
        lib == oracle,
        format!("{} vs {} groups, first difference at {first_diff:?}", lib.len(), oracle.len()),
    )
}

fn main() {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 9] = [
        (1, "table reproduction", Duration::from_secs(1), criterion_1),
        (2, "pipeline survivors", Duration::from_secs(30), criterion_2),
        (3, "g(K) column", Duration::from_secs(1), criterion_3),
        (4, "exceptional inequalities", Duration::from_secs(1), criterion_4),
        (5, "alternating chain", Duration::from_secs(60), criterion_5),
        (6, "p-rank bound grid", Duration::from_secs(10), criterion_6),
        (7, "flag oracle scans", Duration::from_secs(300), criterion_7),
        (8, "matrix identities", Duration::from_secs(30), criterion_8),
        (9, "enumeration oracle", Duration::from_secs(10), criterion_9),
    ];
    let mut failing = Vec::new();
    for (k, name, limit, run) in criteria {
        let t = Instant::now();
        let o = run();
        let elapsed = t.elapsed();
        let pass = o.pass && elapsed <= limit;
        if !pass {
            failing.push(k);
        }
        println!(
            "{} criterion {k} ({name}): {} [{:.2?}, limit {:?}]",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            elapsed,
            limit
        );
    }
    println!("failing criteria: {failing:?}, expected {EXPECTED_FAILING:?}");
    if failing != EXPECTED_FAILING {
        eprintln!("the set of failing criteria changed");
        std::process::exit(1);
    }
}
