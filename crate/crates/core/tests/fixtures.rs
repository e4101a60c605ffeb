use bondle_core::algebra::*;
use bondle_core::coloring::*;
use bondle_core::diagram::build_diagram;
use bondle_core::fixtures::*;
use bondle_core::gausscode::parse;
use bondle_core::rewrite::normalize;
use num_bigint::BigUint;

fn total(code: &str, b: &Bondle) -> u64 {
    let d = build_diagram(&parse(code).unwrap()).unwrap();
    let c = count_colorings(&d, b).unwrap();
    u64::try_from(c.total).unwrap()
}

fn affine(n: u64, a: u64, b: u64, m: u64) -> Bondle {
    Bondle::affine(AffineParams::new(n, a, b, Some(m)).unwrap()).unwrap()
}

fn relation_battery() -> Vec<Bondle> {
    let mut v: Vec<Bondle> = [(15, 8, 2, 6), (15, 7, 8, 6), (6, 5, 2, 3), (10, 3, 4, 5), (12, 5, 7, 4), (21, 2, 5, 7), (14, 3, 6, 7)]
        .into_iter()
        .map(|(n, a, b, m)| affine(n, a, b, m))
        .collect();
    let d4 = dihedral_group(4);
    for family in [GroupFamily::One, GroupFamily::Two, GroupFamily::Three] {
        for n in 1..=3 {
            for r3 in [R3Variant::SquareLeft, R3Variant::SquareRight] {
                v.push(Bondle::group(&d4, "D4", family, n, r3));
            }
        }
    }
    v
}

/// Number of pairs `(x, y)` satisfying `rel`.
fn relation_count(b: &Bondle, rel: impl Fn(&Bondle, usize, usize) -> bool) -> u64 {
    let n = b.order();
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| rel(b, x, y)).count() as u64
}

#[test]
fn first_example_counts() {
    let b = affine(15, 8, 2, 6);
    assert_eq!(total(EXAMPLE1_P1, &b), 45);
    assert_eq!(total(EXAMPLE1_P2, &b), 15);
    let p = AffineParams::new(15, 8, 2, Some(6)).unwrap();
    let d = build_diagram(&parse(EXAMPLE1_P1).unwrap()).unwrap();
    let fast = count_colorings_affine(&d, &p).unwrap();
    assert_eq!(fast.total, BigUint::from(45u32));
    assert_eq!(fast.trivial, BigUint::from(15u32));
}

#[test]
fn second_example_counts() {
    let b = affine(15, 7, 8, 6);
    assert_eq!(total(EXAMPLE2_P1, &b), 75);
    assert_eq!(total(EXAMPLE2_P2, &b), 15);
}

#[test]
fn first_example_relations() {
    for b in relation_battery() {
        let q = &b.quandle;
        let m = &b.maps;
        let p1 = relation_count(&b, |_, x, y| m.r2(y, x) == y);
        let p2 = relation_count(&b, |_, x, y| q.inv(m.r2(y, x), m.r1(y, x)) == y);
        assert_eq!(total(EXAMPLE1_P1, &b), p1, "{}", b.name);
        assert_eq!(total(EXAMPLE1_P2, &b), p2, "{}", b.name);
    }
}

#[test]
fn second_example_relations() {
    // After propagation both chains keep two free colors and one condition:
    // P1: t = R3(R1(x,t), R2(x,t)) ▷ x; P2: v = R3(R1(u,v), R2(u,v)).
    for b in relation_battery() {
        let q = &b.quandle;
        let m = &b.maps;
        let p1 = relation_count(&b, |_, x, t| t == q.op(m.r3(m.r1(x, t), m.r2(x, t)), x));
        let p2 = relation_count(&b, |_, u, v| v == m.r3(m.r1(u, v), m.r2(u, v)));
        assert_eq!(total(EXAMPLE2_P1, &b), p1, "{}", b.name);
        assert_eq!(total(EXAMPLE2_P2, &b), p2, "{}", b.name);
    }
}

#[test]
fn second_example_bracket_relation_count() {
    // The bracketed hollow-dot condition with α = x ▷⁻¹ y has the same
    // number of solutions as P1 under the second example's bondle.
    let b = affine(15, 7, 8, 6);
    let q = &b.quandle;
    let m = &b.maps;
    let n = relation_count(&b, |_, x, y| {
        let r = m.r3(x, y);
        let alpha = q.inv(x, y);
        y == q.inv(q.inv(m.r2(alpha, r), m.r1(alpha, r)), m.r3(y, x))
    });
    assert_eq!(n, 75);
    assert_eq!(total(EXAMPLE2_P1, &b), n);
}

#[test]
fn examples_are_distinguished() {
    let pairs = [(EXAMPLE1_P1, EXAMPLE1_P2, 45u32, 15u32), (EXAMPLE2_P1, EXAMPLE2_P2, 75, 15)];
    for (a, b, ca, cb) in pairs {
        let da = build_diagram(&parse(a).unwrap()).unwrap();
        let db = build_diagram(&parse(b).unwrap()).unwrap();
        match distinguish(&da, &db, &default_battery()).unwrap() {
            Verdict::Distinct { witness } => {
                assert_eq!((witness.first, witness.second), (BigUint::from(ca), BigUint::from(cb)));
            }
            v => panic!("expected a distinguisher, got {v:?}"),
        }
        assert!(search_distinguisher(&da, &db, AffineSearchSpace::up_to(15)).unwrap().is_distinct());
    }
}

#[test]
fn trio_segments_and_normalizes() {
    let sheet = parse(TRIO_SHEET).unwrap();
    assert!(sheet.is_well_formed());
    let seg = bondle_core::rewrite::segment_sheets(&sheet).unwrap();
    assert_eq!(seg.to_string(), TRIO_SEGMENTED);
    for t in TRIO {
        assert!(parse(t).unwrap().is_well_formed(), "{t}");
    }
}

#[test]
fn trio_counts_agree() {
    for b in relation_battery() {
        let counts: Vec<u64> = TRIO
            .iter()
            .map(|t| {
                let n = normalize(&parse(t).unwrap()).unwrap();
                let d = build_diagram(&n).unwrap();
                u64::try_from(count_best(&d, &b).unwrap().total).unwrap()
            })
            .collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "{}: {counts:?}", b.name);
    }
}
