//! Coloring constraint systems and exact coloring counts.
//!
//! Each arc is a variable. A classical crossing gives `out = in ▷ over`
//! (or `▷⁻¹` for a negative crossing); a parallel bond gives
//! `first_out = R1(x, y)`, `second_out = R2(x, y)` and an antiparallel bond
//! `first_out = R3(x, y)`, `second_out = R3(y, x)`, where `x` and `y` are the
//! incoming arcs of the first and second passage along the chain.

mod generic;
mod linear;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{search_affine_bondles, AffineParams, Bondle};
use crate::diagram::{ArcId, BondOrientation, Diagram, Site};
use crate::gausscode::Sign;

pub use generic::count_with_tables;
pub use linear::count_linear;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("diagram still contains {0}; normalize it first")]
    UnnormalizedDiagram(&'static str),
    #[error("diagram has an antiparallel bond but the bondle has no R3")]
    MissingR3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Equation {
    UnderPass { out_arc: ArcId, in_arc: ArcId, over_arc: ArcId, sign: Sign },
    ParallelBond { first_out: ArcId, second_out: ArcId, first_in: ArcId, second_in: ArcId },
    AntiparallelBond { first_out: ArcId, second_out: ArcId, first_in: ArcId, second_in: ArcId },
}

impl Equation {
    pub fn arcs(&self) -> Vec<ArcId> {
        match *self {
            Equation::UnderPass { out_arc, in_arc, over_arc, .. } => vec![out_arc, in_arc, over_arc],
            Equation::ParallelBond { first_out, second_out, first_in, second_in }
            | Equation::AntiparallelBond { first_out, second_out, first_in, second_in } => {
                vec![first_out, second_out, first_in, second_in]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintSystem {
    pub variables: usize,
    pub equations: Vec<Equation>,
}

impl ConstraintSystem {
    pub fn has_antiparallel(&self) -> bool {
        self.equations.iter().any(|e| matches!(e, Equation::AntiparallelBond { .. }))
    }
}

pub fn extract_constraints(d: &Diagram) -> Result<ConstraintSystem, ColoringError> {
    let mut equations = Vec::with_capacity(d.sites.len());
    for site in &d.sites {
        match *site {
            Site::ClassicalCrossing { sign, over_arc, under_in_arc, under_out_arc, .. } => {
                equations.push(Equation::UnderPass {
                    out_arc: under_out_arc,
                    in_arc: under_in_arc,
                    over_arc,
                    sign,
                });
            }
            Site::BondSite { orientation, first_in, first_out, second_in, second_out, .. } => {
                equations.push(match orientation {
                    BondOrientation::Parallel => {
                        Equation::ParallelBond { first_out, second_out, first_in, second_in }
                    }
                    BondOrientation::Antiparallel => {
                        Equation::AntiparallelBond { first_out, second_out, first_in, second_in }
                    }
                });
            }
            Site::SheetSite { .. } => return Err(ColoringError::UnnormalizedDiagram("a sheet")),
            Site::HelixSite { .. } => return Err(ColoringError::UnnormalizedDiagram("a helix")),
        }
    }
    Ok(ConstraintSystem { variables: d.arc_count(), equations })
}

fn biguint_as_number<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringCount {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<String>,
    pub bondle: String,
    #[serde(serialize_with = "biguint_as_number")]
    pub total: BigUint,
    /// Constant colorings.
    #[serde(serialize_with = "biguint_as_number")]
    pub trivial: BigUint,
}

impl ColoringCount {
    pub fn with_diagram(mut self, id: impl Into<String>) -> Self {
        self.diagram = Some(id.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("count serializes")
    }
}

/// Exact count by backtracking over the bondle's tables.
pub fn count_colorings(d: &Diagram, bondle: &Bondle) -> Result<ColoringCount, ColoringError> {
    let system = extract_constraints(d)?;
    if system.has_antiparallel() && !bondle.maps.has_r3() {
        return Err(ColoringError::MissingR3);
    }
    let (total, trivial) = count_with_tables(&system, &bondle.quandle, &bondle.maps);
    Ok(ColoringCount { schema: 1, diagram: None, bondle: bondle.name.clone(), total, trivial })
}

/// Exact count for an affine bondle by diagonalizing the linear system over
/// `Z_n`. Agrees with [`count_colorings`] on the same parameters.
pub fn count_colorings_affine(d: &Diagram, params: &AffineParams) -> Result<ColoringCount, ColoringError> {
    let system = extract_constraints(d)?;
    if system.has_antiparallel() && params.m.is_none() {
        return Err(ColoringError::MissingR3);
    }
    let (total, trivial) = count_linear(&system, params);
    Ok(ColoringCount { schema: 1, diagram: None, bondle: params.label(), total, trivial })
}

/// Uses the linear counter when the bondle carries affine parameters.
pub fn count_best(d: &Diagram, bondle: &Bondle) -> Result<ColoringCount, ColoringError> {
    match &bondle.affine {
        Some(p) => count_colorings_affine(d, p).map(|c| ColoringCount { bondle: bondle.name.clone(), ..c }),
        None => count_colorings(d, bondle),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountPair {
    pub bondle: String,
    #[serde(serialize_with = "biguint_as_number")]
    pub first: BigUint,
    #[serde(serialize_with = "biguint_as_number")]
    pub second: BigUint,
}

/// Outcome of comparing two diagrams. Equal counts never prove equivalence,
/// so there is no "equivalent" verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Distinct {
        #[serde(flatten)]
        witness: CountPair,
    },
    Inconclusive { counts: Vec<CountPair> },
}

impl Verdict {
    pub fn is_distinct(&self) -> bool {
        matches!(self, Verdict::Distinct { .. })
    }

    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("verdict serializes");
        v["schema"] = 1.into();
        serde_json::to_string(&v).expect("verdict serializes")
    }
}

/// Tries each bondle in order and stops at the first with differing counts.
pub fn distinguish(d1: &Diagram, d2: &Diagram, bondles: &[Bondle]) -> Result<Verdict, ColoringError> {
    let mut counts = Vec::new();
    for b in bondles {
        let pair = CountPair {
            bondle: b.name.clone(),
            first: count_best(d1, b)?.total,
            second: count_best(d2, b)?.total,
        };
        if pair.first != pair.second {
            return Ok(Verdict::Distinct { witness: pair });
        }
        counts.push(pair);
    }
    Ok(Verdict::Inconclusive { counts })
}

/// Moduli scanned by [`search_distinguisher`], inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineSearchSpace {
    pub min_n: u64,
    pub max_n: u64,
}

impl AffineSearchSpace {
    pub fn up_to(max_n: u64) -> Self {
        AffineSearchSpace { min_n: 2, max_n }
    }
}

/// Scans affine oriented bondles in lexicographic `(n, a, b, m)` order and
/// returns the first that separates the diagrams.
pub fn search_distinguisher(
    d1: &Diagram,
    d2: &Diagram,
    space: AffineSearchSpace,
) -> Result<Verdict, ColoringError> {
    let s1 = extract_constraints(d1)?;
    let s2 = extract_constraints(d2)?;
    let mut counts = Vec::new();
    for n in space.min_n.max(2)..=space.max_n {
        for p in search_affine_bondles(n) {
            let pair = CountPair {
                bondle: p.label(),
                first: count_linear(&s1, &p).0,
                second: count_linear(&s2, &p).0,
            };
            if pair.first != pair.second {
                return Ok(Verdict::Distinct { witness: pair });
            }
            counts.push(pair);
        }
    }
    Ok(Verdict::Inconclusive { counts })
}

/// Two bondles used to separate the worked examples, plus a dihedral one.
pub fn default_battery() -> Vec<Bondle> {
    use crate::algebra::{dihedral_group, GroupFamily, R3Variant};
    let ex1 = AffineParams::new(15, 8, 2, Some(6)).expect("valid parameters");
    let ex2 = AffineParams::new(15, 7, 8, Some(6)).expect("valid parameters");
    vec![
        Bondle::affine(ex1).expect("affine bondle"),
        Bondle::affine(ex2).expect("affine bondle"),
        Bondle::group(&dihedral_group(4), "D4", GroupFamily::One, 1, R3Variant::SquareLeft),
    ]
}

/// Every affine oriented bondle for `n`, as ready-made bondles.
pub fn affine_battery(n: u64) -> Vec<Bondle> {
    search_affine_bondles(n)
        .into_iter()
        .map(|p| Bondle::affine(p).expect("search returns valid parameters"))
        .collect()
}
