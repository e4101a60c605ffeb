//! Shared generators for the rewrite and acceptance suites.
#![allow(dead_code)]

use bondle_core::algebra::*;
use bondle_core::coloring::*;
use bondle_core::diagram::build_diagram;
use bondle_core::gausscode::*;
use bondle_core::rewrite::*;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn battery() -> Vec<Bondle> {
    let mut v = default_battery();
    v.push(Bondle::affine(AffineParams::new(12, 5, 7, Some(4)).unwrap()).unwrap());
    v.push(Bondle::group(&dihedral_group(4), "D4", GroupFamily::Three, 2, R3Variant::SquareRight));
    v
}

pub fn counts(c: &GaussCode, battery: &[Bondle]) -> Vec<BigUint> {
    let d = build_diagram(c).unwrap();
    battery.iter().map(|b| count_best(&d, b).unwrap().total).collect()
}

/// Sheet-free, helix-free form with the ends left in place.
pub fn prepared(c: &GaussCode) -> GaussCode {
    normalize_helices(&segment_sheets(c).unwrap(), HelixMode::Drop).unwrap()
}

fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn random_insertion(rng: &mut ChaCha8Rng, c: &GaussCode) -> MoveSpec {
    let gap = |rng: &mut ChaCha8Rng| rng.gen_range(1..c.len());
    let s = sign(rng);
    match rng.gen_range(0..3) {
        0 => MoveSpec::IInsert { gap: gap(rng), sign: s, under_first: rng.gen() },
        1 => MoveSpec::IIInsert {
            over_gap: gap(rng),
            under_gap: gap(rng),
            sign: s,
            reversed: rng.gen(),
            under_first: rng.gen(),
        },
        _ => {
            let first = c.entries().iter().position(Entry::is_singular).unwrap_or(c.len() - 1);
            let last = c.entries().iter().rposition(Entry::is_singular).unwrap_or(0);
            let terminal_gap = if rng.gen() { rng.gen_range(1..=first) } else { rng.gen_range(last + 1..c.len()) };
            MoveSpec::VIIInsert { terminal_gap, other_gap: gap(rng), terminal_over: rng.gen(), sign: s, other_first: rng.gen() }
        }
    }
}

/// A random applicable move, biased towards the local moves when any apply.
pub fn random_move(rng: &mut ChaCha8Rng, c: &GaussCode) -> MoveSpec {
    let local = candidate_moves(c);
    if !local.is_empty() && rng.gen_bool(0.7) {
        local[rng.gen_range(0..local.len())].clone()
    } else {
        random_insertion(rng, c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Planted {
    Triangle,
    PassOver,
    PassUnder,
    Twist,
}

/// Inserts entries at gaps; entries sharing a gap keep their list order.
fn insert_entries(c: &GaussCode, mut items: Vec<(usize, Entry)>) -> GaussCode {
    items.sort_by_key(|&(g, _)| g);
    let mut out = Vec::new();
    let mut it = items.into_iter().peekable();
    for (i, e) in c.entries().iter().enumerate() {
        while it.peek().is_some_and(|&(g, _)| g == i) {
            out.push(it.next().unwrap().1);
        }
        out.push(*e);
    }
    GaussCode::new(out).renumbered()
}

fn bonds(c: &GaussCode, anti: Option<bool>) -> Vec<[usize; 2]> {
    let mut labels: Vec<Label> = c.entries().iter().filter_map(|e| match e {
        Entry::Bond { label, .. } => Some(*label),
        _ => None,
    }).collect();
    labels.sort_unstable();
    labels.dedup();
    labels
        .into_iter()
        .map(|l| {
            let p = c.positions_of(l);
            [p[0], p[1]]
        })
        .filter(|p| anti.is_none_or(|a| (c.entries()[p[1]].sign() == Some(Sign::Minus)) == a))
        .collect()
}

/// Adds the entries of a move pattern of the given kind at random places.
/// The result may still fail the move's side conditions.
pub fn plant(rng: &mut ChaCha8Rng, c: &GaussCode, kind: Planted) -> Option<GaussCode> {
    let k = c.max_label() + 1;
    let (i, j, l) = (k, k + 1, k + 2);
    let gap = |rng: &mut ChaCha8Rng| rng.gen_range(1..c.len());
    let o = |label, sign| Entry::Over { label, sign };
    let u = |label, sign| Entry::Under { label, sign };
    let mut items = Vec::new();
    match kind {
        Planted::Triangle => {
            let (s, r, t) = (sign(rng), sign(rng), sign(rng));
            let mut top = [o(i, s), o(j, r)];
            let mut middle = [u(i, s), o(l, t)];
            let mut bottom = [u(j, r), u(l, t)];
            for pair in [&mut top, &mut middle, &mut bottom] {
                if rng.gen() {
                    pair.swap(0, 1);
                }
            }
            for pair in [top, middle, bottom] {
                let g = gap(rng);
                items.push((g, pair[0]));
                items.push((g, pair[1]));
            }
        }
        Planted::PassOver => {
            let occ = *bonds(c, None).choose(rng)?;
            let s = sign(rng);
            let g = gap(rng);
            items.push((g, o(i, s)));
            items.push((g, o(j, s)));
            let shift = usize::from(rng.gen::<bool>());
            let (a, b) = if rng.gen() { (occ[0], occ[1]) } else { (occ[1], occ[0]) };
            items.push((a + shift, u(i, s)));
            items.push((b + shift, u(j, s)));
        }
        Planted::PassUnder => {
            let anti = rng.gen();
            let occ = *bonds(c, Some(anti)).choose(rng)?;
            let before = rng.gen::<bool>();
            // (passage, precedes) for the first and second passer.
            let (sp, sq, p, q) = if anti {
                let pa = rng.gen_range(0..2);
                (Sign::Plus, Sign::Minus, (pa, before), (1 - pa, !before))
            } else if rng.gen() {
                (Sign::Plus, Sign::Plus, (0, before), (1, before))
            } else {
                (Sign::Minus, Sign::Minus, (1, before), (0, before))
            };
            let g = gap(rng);
            items.push((g, u(i, sp)));
            items.push((g, u(j, sq)));
            let at = |(pass, pre): (usize, bool)| occ[pass] + usize::from(!pre);
            items.push((at(p), o(i, sp)));
            items.push((at(q), o(j, sq)));
        }
        Planted::Twist => {
            let occ = *bonds(c, Some(true)).choose(rng)?;
            let s = sign(rng);
            let (e1, e2) = if rng.gen() { (o(i, s), u(i, s)) } else { (u(i, s), o(i, s)) };
            if rng.gen() {
                items.push((occ[0], e1));
                items.push((occ[1] + 1, e2));
            } else {
                items.push((occ[0] + 1, e1));
                items.push((occ[1], e2));
            }
        }
    }
    let out = insert_entries(c, items);
    out.is_well_formed().then_some(out)
}

pub fn kind_matches(spec: &MoveSpec, kind: Planted) -> bool {
    matches!(
        (spec, kind),
        (MoveSpec::III { .. }, Planted::Triangle)
            | (MoveSpec::V { .. }, Planted::Twist)
            | (MoveSpec::IV { .. }, Planted::PassOver | Planted::PassUnder)
    )
}

/// A code holding an applicable move of the given kind, with that move.
pub fn planted_move(rng: &mut ChaCha8Rng, params: &GenParams, kind: Planted) -> (GaussCode, MoveSpec) {
    loop {
        let base = random_code(rng, params);
        let Some(c) = plant(rng, &base, kind) else { continue };
        let specs: Vec<MoveSpec> = candidate_moves(&c).into_iter().filter(|s| kind_matches(s, kind)).collect();
        if let Some(s) = specs.choose(rng) {
            return (c, s.clone());
        }
    }
}
