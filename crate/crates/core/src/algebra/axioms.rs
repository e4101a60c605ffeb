//! Exhaustive axiom verification over finite tables.
//!
//! Every axiom is an equation `lhs(x, y, z) = rhs(x, y, z)` checked over all
//! assignments of its free variables. Relations are named `SQ1`-`SQ11`
//! (involutory singquandles), `OSQ1`-`OSQ5` (oriented singquandles) and
//! `OB1`-`OB4` (the extra relations of an oriented bondle).

use serde::Serialize;

use super::{BondMaps, FiniteQuandle};

/// Upper bound on witnesses kept per relation.
pub const MAX_WITNESSES: usize = 10;

#[derive(Clone, Copy)]
struct Env<'a> {
    q: &'a FiniteQuandle,
    m: Option<&'a BondMaps>,
}

impl<'a> Env<'a> {
    fn o(&self, x: usize, y: usize) -> usize {
        self.q.op(x, y)
    }
    fn i(&self, x: usize, y: usize) -> usize {
        self.q.inv(x, y)
    }
    fn r1(&self, x: usize, y: usize) -> usize {
        self.m.expect("maps").r1(x, y)
    }
    fn r2(&self, x: usize, y: usize) -> usize {
        self.m.expect("maps").r2(x, y)
    }
    fn r3(&self, x: usize, y: usize) -> usize {
        self.m.expect("maps").r3(x, y)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Needs {
    Nothing,
    R12,
    R3,
}

pub struct Relation {
    pub name: &'static str,
    /// Number of free variables (1 to 3), used in x, y, z order.
    pub arity: u8,
    needs: Needs,
    eval: fn(&Env, usize, usize, usize) -> (usize, usize),
}

macro_rules! rel {
    ($name:expr, $arity:expr, $needs:expr, |$e:ident, $x:ident, $y:ident, $z:ident| $body:expr) => {
        Relation {
            name: $name,
            arity: $arity,
            needs: $needs,
            eval: {
                #[allow(unused_variables)]
                fn f($e: &Env, $x: usize, $y: usize, $z: usize) -> (usize, usize) {
                    $body
                }
                f
            },
        }
    };
}

pub static QUANDLE_AXIOMS: [Relation; 4] = [
    rel!("Q1", 1, Needs::Nothing, |e, x, y, z| (e.o(x, x), x)),
    rel!("Q2a", 2, Needs::Nothing, |e, x, y, z| (e.i(e.o(x, y), y), x)),
    rel!("Q2b", 2, Needs::Nothing, |e, x, y, z| (e.o(e.i(x, y), y), x)),
    rel!("Q3", 3, Needs::Nothing, |e, x, y, z| (e.o(e.o(x, y), z), e.o(e.o(x, z), e.o(y, z)))),
];

/// `(x ▷ y) ▷ y = x`.
pub static INVOLUTIVE: Relation = rel!("K", 2, Needs::Nothing, |e, x, y, z| (e.o(e.o(x, y), y), x));

/// Relations SQ1-SQ11, stated for an involutory quandle (so `▷⁻¹ = ▷`).
pub static SINGQUANDLE_RELATIONS: [Relation; 11] = [
    rel!("SQ1", 2, Needs::R12, |e, x, y, z| (x, e.r2(e.r2(x, y), e.r1(x, y)))),
    rel!("SQ2", 2, Needs::R12, |e, x, y, z| (y, e.r1(e.r2(x, y), e.r1(x, y)))),
    rel!("SQ3", 2, Needs::R12, |e, x, y, z| (x, e.r1(y, e.r2(x, y)))),
    rel!("SQ4", 2, Needs::R12, |e, x, y, z| (e.r1(x, y), e.r2(y, e.r2(x, y)))),
    rel!("SQ5", 2, Needs::R12, |e, x, y, z| (y, e.r2(e.r1(x, y), x))),
    rel!("SQ6", 2, Needs::R12, |e, x, y, z| (e.r2(x, y), e.r1(e.r1(x, y), x))),
    rel!("SQ7", 3, Needs::R12, |e, x, y, z| (
        e.o(e.o(y, z), e.r2(x, z)),
        e.o(e.o(y, x), e.r1(x, z))
    )),
    rel!("SQ8", 2, Needs::R12, |e, x, y, z| (e.r1(x, y), e.r2(e.o(y, x), x))),
    rel!("SQ9", 2, Needs::R12, |e, x, y, z| (
        e.r2(x, y),
        e.o(e.r1(e.o(y, x), x), e.r2(e.o(y, x), x))
    )),
    rel!("SQ10", 3, Needs::R12, |e, x, y, z| (e.o(e.r1(e.o(x, y), z), y), e.r1(x, e.o(z, y)))),
    rel!("SQ11", 3, Needs::R12, |e, x, y, z| (e.r2(e.o(x, y), z), e.o(e.r2(x, e.o(z, y)), y))),
];

/// Relations OSQ1-OSQ5.
pub static ORIENTED_SINGQUANDLE_RELATIONS: [Relation; 5] = [
    rel!("OSQ1", 3, Needs::R12, |e, x, y, z| (e.o(e.r1(e.i(x, y), z), y), e.r1(x, e.o(z, y)))),
    rel!("OSQ2", 3, Needs::R12, |e, x, y, z| (e.r2(e.i(x, y), z), e.i(e.r2(x, e.o(z, y)), y))),
    rel!("OSQ3", 3, Needs::R12, |e, x, y, z| (
        e.o(e.i(y, e.r1(x, z)), x),
        e.i(e.o(y, e.r2(x, z)), z)
    )),
    rel!("OSQ4", 2, Needs::R12, |e, x, y, z| (e.r2(x, y), e.r1(y, e.o(x, y)))),
    rel!("OSQ5", 2, Needs::R12, |e, x, y, z| (
        e.o(e.r1(x, y), e.r2(x, y)),
        e.r2(y, e.o(x, y))
    )),
];

/// Relations OB1-OB4, with `R4(x, y) = R3(y, x)` already substituted.
pub static ORIENTED_BOND_RELATIONS: [Relation; 4] = [
    rel!("OB1", 3, Needs::R3, |e, x, y, z| (e.r3(y, e.i(x, z)), e.i(e.r3(e.o(y, z), x), z))),
    rel!("OB2", 3, Needs::R3, |e, x, y, z| (e.r3(x, e.o(y, z)), e.o(e.r3(e.i(x, z), y), z))),
    rel!("OB3", 3, Needs::R3, |e, x, y, z| (
        e.o(e.i(z, e.r3(x, y)), x),
        e.o(e.i(z, y), e.r3(y, x))
    )),
    rel!("OB4", 2, Needs::R3, |e, x, y, z| (e.i(e.r3(x, y), y), e.r3(e.i(x, e.r3(y, x)), y))),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationOutcome {
    pub relation: &'static str,
    pub holds: bool,
    /// Number of failing assignments (0 when `holds`).
    pub failures: u64,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub schema: u32,
    pub structure: String,
    pub order: usize,
    pub passed: bool,
    pub relations: Vec<RelationOutcome>,
}

impl AxiomReport {
    pub fn outcome(&self, name: &str) -> Option<&RelationOutcome> {
        self.relations.iter().find(|r| r.relation == name)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.outcome(name).map(|r| r.holds).unwrap_or(false)
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.relations.iter().filter(|r| !r.holds).map(|r| r.relation).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn evaluate(rel: &Relation, env: Env, first_failure_only: bool) -> RelationOutcome {
    let missing = match rel.needs {
        Needs::Nothing => None,
        Needs::R12 if env.m.is_none() => Some("no bond maps supplied"),
        Needs::R3 if env.m.is_none_or(|m| !m.has_r3()) => Some("no R3 table supplied"),
        _ => None,
    };
    if let Some(note) = missing {
        return RelationOutcome {
            relation: rel.name,
            holds: false,
            failures: 0,
            witnesses: Vec::new(),
            note: Some(note.to_string()),
        };
    }

    let n = env.q.order();
    let ys = if rel.arity >= 2 { n } else { 1 };
    let zs = if rel.arity >= 3 { n } else { 1 };
    let mut failures = 0u64;
    let mut witnesses = Vec::new();
    'outer: for x in 0..n {
        for y in 0..ys {
            for z in 0..zs {
                let (lhs, rhs) = (rel.eval)(&env, x, y, z);
                if lhs != rhs {
                    failures += 1;
                    if witnesses.len() < MAX_WITNESSES {
                        witnesses.push(Witness {
                            x,
                            y: (rel.arity >= 2).then_some(y),
                            z: (rel.arity >= 3).then_some(z),
                            lhs,
                            rhs,
                        });
                    }
                    if first_failure_only {
                        break 'outer;
                    }
                }
            }
        }
    }
    RelationOutcome { relation: rel.name, holds: failures == 0, failures, witnesses, note: None }
}

fn run<'r>(
    structure: &str,
    q: &FiniteQuandle,
    m: Option<&BondMaps>,
    relations: impl IntoIterator<Item = &'r Relation>,
) -> AxiomReport {
    let env = Env { q, m };
    if let Some(m) = m {
        assert_eq!(m.order(), q.order(), "bond maps and quandle must share a carrier");
    }
    let relations: Vec<RelationOutcome> =
        relations.into_iter().map(|r| evaluate(r, env, false)).collect();
    AxiomReport {
        schema: 1,
        structure: structure.to_string(),
        order: q.order(),
        passed: relations.iter().all(|r| r.holds),
        relations,
    }
}

pub fn check_quandle(q: &FiniteQuandle) -> AxiomReport {
    run("quandle", q, None, QUANDLE_AXIOMS.iter())
}

/// Q1, Q3 and involutivity.
pub fn check_kei(q: &FiniteQuandle) -> AxiomReport {
    run("kei", q, None, [&QUANDLE_AXIOMS[0], &INVOLUTIVE, &QUANDLE_AXIOMS[3]])
}

/// Kei axioms plus SQ1-SQ11.
pub fn check_singquandle(q: &FiniteQuandle, maps: &BondMaps) -> AxiomReport {
    let kei = [&QUANDLE_AXIOMS[0], &INVOLUTIVE, &QUANDLE_AXIOMS[3]];
    run("singquandle", q, Some(maps), kei.into_iter().chain(SINGQUANDLE_RELATIONS.iter()))
}

/// Kei axioms plus SQ1, SQ2 and SQ7-SQ11.
pub fn check_involutory_bondle(q: &FiniteQuandle, maps: &BondMaps) -> AxiomReport {
    let kei = [&QUANDLE_AXIOMS[0], &INVOLUTIVE, &QUANDLE_AXIOMS[3]];
    let subset = [0usize, 1, 6, 7, 8, 9, 10].map(|i| &SINGQUANDLE_RELATIONS[i]);
    run("involutory-bondle", q, Some(maps), kei.into_iter().chain(subset))
}

/// Quandle axioms plus OSQ1-OSQ5.
pub fn check_oriented_singquandle(q: &FiniteQuandle, maps: &BondMaps) -> AxiomReport {
    run(
        "oriented-singquandle",
        q,
        Some(maps),
        QUANDLE_AXIOMS.iter().chain(ORIENTED_SINGQUANDLE_RELATIONS.iter()),
    )
}

/// Quandle axioms plus OSQ1-OSQ5 and OB1-OB4.
pub fn check_oriented_bondle(q: &FiniteQuandle, maps: &BondMaps) -> AxiomReport {
    run(
        "oriented-bondle",
        q,
        Some(maps),
        QUANDLE_AXIOMS
            .iter()
            .chain(ORIENTED_SINGQUANDLE_RELATIONS.iter())
            .chain(ORIENTED_BOND_RELATIONS.iter()),
    )
}

/// OB1-OB4 alone.
pub fn check_r3_relations(q: &FiniteQuandle, maps: &BondMaps) -> AxiomReport {
    run("oriented-bond-relations", q, Some(maps), ORIENTED_BOND_RELATIONS.iter())
}

/// Pass/fail for the full oriented bondle axioms, stopping at the first
/// failing assignment.
pub fn is_oriented_bondle(q: &FiniteQuandle, maps: &BondMaps) -> bool {
    let env = Env { q, m: Some(maps) };
    QUANDLE_AXIOMS
        .iter()
        .chain(ORIENTED_SINGQUANDLE_RELATIONS.iter())
        .chain(ORIENTED_BOND_RELATIONS.iter())
        .all(|r| evaluate(r, env, true).holds)
}

/// Looks up a relation by name, e.g. `"Q3"` or `"OSQ3"`.
pub fn relation(name: &str) -> Option<&'static Relation> {
    QUANDLE_AXIOMS
        .iter()
        .chain(std::iter::once(&INVOLUTIVE))
        .chain(SINGQUANDLE_RELATIONS.iter())
        .chain(ORIENTED_SINGQUANDLE_RELATIONS.iter())
        .chain(ORIENTED_BOND_RELATIONS.iter())
        .find(|r| r.name == name)
}
