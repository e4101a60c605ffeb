//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod support;

use std::time::{Duration, Instant};

use bondle_core::algebra::affine::{search_m_values, units};
use bondle_core::algebra::axioms::{check_oriented_bondle, check_oriented_singquandle, check_r3_relations};
use bondle_core::algebra::group::symmetric_group;
use bondle_core::algebra::*;
use bondle_core::coloring::*;
use bondle_core::diagram::build_diagram;
use bondle_core::fixtures::*;
use bondle_core::gausscode::*;
use bondle_core::rewrite::*;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::*;

type Check = fn() -> Result<String, String>;

fn total_of(code: &str, b: &Bondle) -> Result<BigUint, String> {
    let d = build_diagram(&parse(code).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    Ok(count_colorings(&d, b).map_err(|e| e.to_string())?.total)
}

fn affine_total_of(code: &str, p: &AffineParams) -> Result<BigUint, String> {
    let d = build_diagram(&parse(code).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    Ok(count_colorings_affine(&d, p).map_err(|e| e.to_string())?.total)
}

fn example_pair(params: (u64, u64, u64, u64), codes: [&str; 2], expected: [u32; 2]) -> Result<String, String> {
    let (n, a, b, m) = params;
    let p = AffineParams::new(n, a, b, Some(m)).map_err(|e| e.to_string())?;
    let bondle = Bondle::affine(p).map_err(|e| e.to_string())?;
    let mut got = Vec::new();
    for (code, want) in codes.iter().zip(expected) {
        let generic = total_of(code, &bondle)?;
        let fast = affine_total_of(code, &p)?;
        if generic != BigUint::from(want) || fast != BigUint::from(want) {
            return Err(format!("{code}: expected {want}, backtracking {generic}, linear {fast}"));
        }
        got.push(generic.to_string());
    }
    Ok(format!("{} / {} under {}", got[0], got[1], p.label()))
}

fn example_one() -> Result<String, String> {
    example_pair((15, 8, 2, 6), [EXAMPLE1_P1, EXAMPLE1_P2], [45, 15])
}

fn example_two() -> Result<String, String> {
    example_pair((15, 7, 8, 6), [EXAMPLE2_P1, EXAMPLE2_P2], [75, 15])
}

fn affine_m_sets() -> Result<String, String> {
    let expected: [(u64, [u64; 2]); 4] = [(15, [6, 10]), (21, [7, 15]), (33, [12, 22]), (35, [15, 21])];
    let mut checked = 0;
    for (n, ms) in expected {
        let found = search_m_values(n);
        if found != ms {
            return Err(format!("n = {n}: m-set {found:?}, expected {ms:?}"));
        }
        for p in search_affine_bondles(n) {
            let (q, maps) = affine::from_params(&p).map_err(|e| e.to_string())?;
            let report = check_oriented_bondle(&q, &maps);
            if !report.passed {
                return Err(format!("{} fails {:?}", p.label(), report.failing()));
            }
            checked += 1;
        }
    }
    Ok(format!("m-sets match for 15, 21, 33, 35; {checked} bondles re-checked"))
}

fn d4_families() -> Result<String, String> {
    let d4 = dihedral_group(4);
    let mut passed = 0;
    for family in [GroupFamily::One, GroupFamily::Two, GroupFamily::Three] {
        for n in 1..=3 {
            for r3 in [R3Variant::SquareLeft, R3Variant::SquareRight] {
                let (q, maps) = group_bondle(&d4, family, n, r3);
                let report = check_oriented_bondle(&q, &maps);
                if !report.passed {
                    return Err(format!("{family:?} n={n} {r3:?} fails {:?}", report.failing()));
                }
                passed += 1;
            }
        }
    }
    Ok(format!("{passed}/18 pass"))
}

fn random_affine(rng: &mut ChaCha8Rng) -> AffineParams {
    loop {
        let n = rng.gen_range(2..=15u64);
        let us = units(n);
        let a = us[rng.gen_range(0..us.len())];
        let ms: Vec<u64> = (0..n).filter(|m| (m * (m + n - 1)) % n == 0).collect();
        let m = ms[rng.gen_range(0..ms.len())];
        if let Ok(p) = AffineParams::new(n, a, rng.gen_range(0..n), Some(m)) {
            return p;
        }
    }
}

fn oracle_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut instances = 0;
    while instances < 250 {
        let code = random_code(&mut rng, &GenParams::bonds_only(4, 2));
        let d = build_diagram(&code).map_err(|e| e.to_string())?;
        if d.arc_count() > 8 {
            continue;
        }
        let p = random_affine(&mut rng);
        let bondle = Bondle::affine(p).map_err(|e| e.to_string())?;
        let slow = count_colorings(&d, &bondle).map_err(|e| e.to_string())?;
        let fast = count_colorings_affine(&d, &p).map_err(|e| e.to_string())?;
        if (slow.total.clone(), slow.trivial.clone()) != (fast.total.clone(), fast.trivial.clone()) {
            return Err(format!("{code} under {}: brute force {} vs linear {}", p.label(), slow.total, fast.total));
        }
        instances += 1;
    }
    Ok(format!("{instances} instances, 0 mismatches"))
}

fn move_invariance() -> Result<String, String> {
    let battery = battery();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let params = GenParams { max_crossings: 4, max_bonds: 2, max_sheets: 1, max_sheet_strands: 3, max_helices: 1 };
    let mut pairs = 0;
    while pairs < 200 {
        let c = random_code(&mut rng, &params);
        let spec = random_move(&mut rng, &c);
        let Ok(after) = apply_move(&c, &spec) else { continue };
        let (x, y) = if matches!(spec, MoveSpec::VIIInsert { .. } | MoveSpec::VIIRemove { .. }) {
            (normalize(&c).map_err(|e| e.to_string())?, normalize(&after).map_err(|e| e.to_string())?)
        } else {
            (prepared(&c), prepared(&after))
        };
        if counts(&x, &battery) != counts(&y, &battery) {
            return Err(format!("{c} --{spec:?}--> {after}"));
        }
        pairs += 1;
    }
    for kind in [Planted::Triangle, Planted::PassOver, Planted::PassUnder, Planted::Twist] {
        for _ in 0..25 {
            let (c, spec) = planted_move(&mut rng, &GenParams::bonds_only(3, 2), kind);
            let after = apply_move(&c, &spec).map_err(|e| e.to_string())?;
            if counts(&c, &battery) != counts(&after, &battery) {
                return Err(format!("{c} --{spec:?}--> {after}"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs x {} bondles, 0 violations", battery.len()))
}

/// Small quandles with every constructed `(R1, R2)` that satisfies the
/// oriented singquandle relations.
fn small_structures() -> Vec<(String, FiniteQuandle, BondMaps)> {
    let mut out = Vec::new();
    let mut push_valid = |name: String, q: &FiniteQuandle, maps: BondMaps| {
        if check_oriented_singquandle(q, &maps).passed {
            out.push((name, q.clone(), maps));
        }
    };
    for n in 1..=6usize {
        for (qname, q) in [("trivial", FiniteQuandle::trivial(n)), ("dihedral", FiniteQuandle::dihedral_kei(n))] {
            let maps = BondMaps::from_fns(n, |x, _| x, |_, y| y).unwrap();
            push_valid(format!("{qname}({n}) projections"), &q, maps);
        }
    }
    for n in 2..=6u64 {
        for a in units(n) {
            for b in 0..n {
                let (q, maps) = affine_singquandle(n, a, b).unwrap();
                push_valid(format!("affine({n},{a},{b})"), &q, maps);
            }
        }
    }
    let s3 = symmetric_group(3);
    for family in [GroupFamily::One, GroupFamily::Two, GroupFamily::Three] {
        for k in 1..=3 {
            let (q, maps) = group_bondle(&s3, family, k, R3Variant::SquareLeft);
            push_valid(format!("S3 {family:?} n={k}"), &q, maps.without_r3());
        }
    }
    out
}

fn trivial_solutions() -> Result<String, String> {
    let structures = small_structures();
    let mut checked = 0;
    for (name, q, maps) in &structures {
        for (pname, proj) in [("x", (|x: usize, _: usize| x) as fn(usize, usize) -> usize), ("y", |_, y| y)] {
            let with = maps.clone().with_r3_fn(proj).map_err(|e| e.to_string())?;
            let report = check_r3_relations(q, &with);
            if !report.passed {
                return Err(format!("{name} with R3 = {pname} fails {:?}", report.failing()));
            }
            checked += 1;
        }
    }
    Ok(format!("{} structures, {checked} checks, 0 failures", structures.len()))
}

fn indistinguishable_models() -> Result<String, String> {
    let battery = battery();
    let normalized: Vec<GaussCode> = TRIO
        .iter()
        .map(|t| normalize(&parse(t).map_err(|e| e.to_string())?).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let table: Vec<Vec<BigUint>> = normalized.iter().map(|c| counts(c, &battery)).collect();
    if table.windows(2).any(|w| w[0] != w[1]) {
        return Err(format!("counts differ: {table:?}"));
    }
    Ok(format!("3 models agree under {} bondles", battery.len()))
}

fn round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let params = GenParams::default();
    for _ in 0..1000 {
        let c = random_code(&mut rng, &params);
        let back = parse(&serialize(&c)).map_err(|e| e.to_string())?;
        if back != c {
            return Err(format!("round trip changed {c}"));
        }
        let once = normalize(&c).map_err(|e| e.to_string())?;
        let twice = normalize(&once).map_err(|e| e.to_string())?;
        if once != twice {
            return Err(format!("normalize not idempotent on {c}"));
        }
    }
    Ok("1000 codes, 0 failures".into())
}

fn main() {
    let criteria: [(&str, Check, Duration); 9] = [
        ("First worked pair", example_one, Duration::from_secs(1)),
        ("Second worked pair", example_two, Duration::from_secs(1)),
        ("Affine bondle m-sets", affine_m_sets, Duration::from_secs(30)),
        ("D4 family verification", d4_families, Duration::from_secs(10)),
        ("Oracle equivalence", oracle_equivalence, Duration::MAX),
        ("Move invariance", move_invariance, Duration::MAX),
        ("Trivial R3 solutions", trivial_solutions, Duration::MAX),
        ("Indistinguishable models", indistinguishable_models, Duration::MAX),
        ("Round trip and idempotence", round_trip, Duration::MAX),
    ];
    let mut failures = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            r => r,
        };
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} of 9 criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
