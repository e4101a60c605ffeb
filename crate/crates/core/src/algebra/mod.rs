//! Finite quandles, bond maps, exhaustive axiom checks and the standard
//! constructor families.

pub mod affine;
pub mod axioms;
pub mod group;
mod maps;
mod quandle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use affine::{affine_bondle, affine_quandle, affine_singquandle, search_affine_bondles, AffineParams};
pub use axioms::{AxiomReport, RelationOutcome, Witness};
pub use group::{conjugation_quandle, dihedral_group, group_bondle, FiniteGroup, GroupFamily, R3Variant};
pub use maps::BondMaps;
pub use quandle::FiniteQuandle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("table {name} has {found} entries, expected {expected}")]
    TableShape { name: &'static str, expected: usize, found: usize },
    #[error("table {name} contains {value}, outside a carrier of order {order}")]
    OutOfRange { name: &'static str, value: usize, order: usize },
    #[error("right translation by {y} is not a bijection")]
    NotInvertible { y: usize },
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("{a} is not a unit modulo {n}")]
    NonUnit { a: u64, n: u64 },
    #[error("m = {m} does not satisfy m(m-1) = 0 modulo {n}")]
    NotIdempotent { m: u64, n: u64 },
    #[error("not a group: {0}")]
    NotAGroup(&'static str),
    #[error("invalid bondle table: {0}")]
    BadTable(String),
}

/// On-disk form of a quandle with bond maps. Tables are nested row-major
/// arrays, `op[x][y] = x ▷ y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BondleTable {
    #[serde(default = "schema_one")]
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inv_op: Option<Vec<Vec<usize>>>,
    #[serde(rename = "R1", default, skip_serializing_if = "Option::is_none")]
    pub r1: Option<Vec<Vec<usize>>>,
    #[serde(rename = "R2", default, skip_serializing_if = "Option::is_none")]
    pub r2: Option<Vec<Vec<usize>>>,
    #[serde(rename = "R3", default, skip_serializing_if = "Option::is_none")]
    pub r3: Option<Vec<Vec<usize>>>,
}

fn schema_one() -> u32 {
    1
}

fn nest(order: usize, flat: &[usize]) -> Vec<Vec<usize>> {
    flat.chunks(order).map(<[usize]>::to_vec).collect()
}

fn flatten(order: usize, name: &str, rows: &[Vec<usize>]) -> Result<Vec<usize>, AlgebraError> {
    if rows.len() != order || rows.iter().any(|r| r.len() != order) {
        return Err(AlgebraError::BadTable(format!("{name} must be {order}x{order}")));
    }
    Ok(rows.concat())
}

impl BondleTable {
    pub fn from_structures(name: Option<String>, q: &FiniteQuandle, maps: Option<&BondMaps>) -> Self {
        let n = q.order();
        BondleTable {
            schema: 1,
            name,
            order: n,
            op: nest(n, q.op_table()),
            inv_op: Some(nest(n, q.inv_table())),
            r1: maps.map(|m| nest(n, m.r1_table())),
            r2: maps.map(|m| nest(n, m.r2_table())),
            r3: maps.and_then(|m| m.r3_table()).map(|t| nest(n, t)),
        }
    }

    pub fn quandle(&self) -> Result<FiniteQuandle, AlgebraError> {
        let op = flatten(self.order, "op", &self.op)?;
        match &self.inv_op {
            Some(inv) => FiniteQuandle::from_tables(self.order, op, flatten(self.order, "inv_op", inv)?),
            None => FiniteQuandle::from_op(self.order, op),
        }
    }

    /// Bond maps, if both `R1` and `R2` are present.
    pub fn bond_maps(&self) -> Result<Option<BondMaps>, AlgebraError> {
        let (Some(r1), Some(r2)) = (&self.r1, &self.r2) else {
            if self.r1.is_some() || self.r2.is_some() || self.r3.is_some() {
                return Err(AlgebraError::BadTable("R1 and R2 must be given together".into()));
            }
            return Ok(None);
        };
        let r3 = self.r3.as_ref().map(|t| flatten(self.order, "R3", t)).transpose()?;
        BondMaps::from_tables(self.order, flatten(self.order, "R1", r1)?, flatten(self.order, "R2", r2)?, r3)
            .map(Some)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::BadTable(e.to_string()))
    }
}

/// A named quandle with bond maps, the unit that colorings are counted by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bondle {
    pub name: String,
    pub quandle: FiniteQuandle,
    pub maps: BondMaps,
    /// Set when the tables come from the affine closed forms, which enables
    /// the linear-algebra counter.
    pub affine: Option<AffineParams>,
}

impl Bondle {
    pub fn new(name: impl Into<String>, quandle: FiniteQuandle, maps: BondMaps) -> Result<Self, AlgebraError> {
        if quandle.order() != maps.order() {
            return Err(AlgebraError::BadTable(format!(
                "quandle has order {} but bond maps have order {}",
                quandle.order(),
                maps.order()
            )));
        }
        Ok(Bondle { name: name.into(), quandle, maps, affine: None })
    }

    pub fn affine(params: AffineParams) -> Result<Self, AlgebraError> {
        let (quandle, maps) = affine::from_params(&params)?;
        Ok(Bondle { name: params.label(), quandle, maps, affine: Some(params) })
    }

    pub fn group(g: &FiniteGroup, group_name: &str, family: GroupFamily, n_param: u32, r3: R3Variant) -> Self {
        let (quandle, maps) = group_bondle(g, family, n_param, r3);
        let r3_name = match r3 {
            R3Variant::SquareLeft => "x^2y^-1",
            R3Variant::SquareRight => "x^-1y^2",
        };
        let name = format!("{group_name} family {} n={n_param} R3={r3_name}", family.index());
        Bondle { name, quandle, maps, affine: None }
    }

    pub fn from_table(name: impl Into<String>, table: &BondleTable) -> Result<Self, AlgebraError> {
        let quandle = table.quandle()?;
        let maps = table
            .bond_maps()?
            .ok_or_else(|| AlgebraError::BadTable("a bondle needs R1 and R2 tables".into()))?;
        Self::new(table.name.clone().unwrap_or_else(|| name.into()), quandle, maps)
    }

    pub fn order(&self) -> usize {
        self.quandle.order()
    }

    pub fn to_table(&self) -> BondleTable {
        BondleTable::from_structures(Some(self.name.clone()), &self.quandle, Some(&self.maps))
    }
}
