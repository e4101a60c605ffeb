//! Arc/site structure of a well-formed Gauss code.
//!
//! An arc runs along the chain and is cut at every under-passage and at every
//! bond or sheet passage. Over-passages and helices do not cut arcs, so a code
//! with `u` under entries, `b` bond entries and `s` sheet entries has exactly
//! `u + b + s + 1` arcs, numbered 0.. in traversal order from N to C.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::gausscode::{validate, Entry, GaussCode, Label, Sign, ValidationReport};

pub type ArcId = usize;

#[derive(Debug, Clone, Error)]
pub enum DiagramError {
    #[error("malformed code: {}", .0.errors.iter().map(|f| f.message.as_str()).collect::<Vec<_>>().join("; "))]
    MalformedCode(ValidationReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "at", rename_all = "snake_case")]
pub enum ArcEnd {
    NTerminal,
    CTerminal,
    /// `position` is the 0-based index of the cutting entry in the code.
    Site { label: Label, position: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub id: ArcId,
    pub start: ArcEnd,
    pub end: ArcEnd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BondOrientation {
    Parallel,
    Antiparallel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SheetStrand {
    pub strand_index: i32,
    pub sign: Sign,
    pub in_arc: ArcId,
    pub out_arc: ArcId,
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Site {
    ClassicalCrossing {
        label: Label,
        sign: Sign,
        over_arc: ArcId,
        under_in_arc: ArcId,
        under_out_arc: ArcId,
    },
    /// `first_*` is the passage met first along the chain.
    BondSite {
        label: Label,
        orientation: BondOrientation,
        first_in: ArcId,
        first_out: ArcId,
        second_in: ArcId,
        second_out: ArcId,
    },
    SheetSite { label: Label, strands: Vec<SheetStrand> },
    HelixSite { label: Label, handedness: Sign, through_arc: ArcId },
}

impl Site {
    pub fn label(&self) -> Label {
        match self {
            Site::ClassicalCrossing { label, .. }
            | Site::BondSite { label, .. }
            | Site::SheetSite { label, .. }
            | Site::HelixSite { label, .. } => *label,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SiteCensus {
    pub classical: usize,
    pub bond: usize,
    pub sheet: usize,
    pub helix: usize,
}

impl SiteCensus {
    pub fn total(&self) -> usize {
        self.classical + self.bond + self.sheet + self.helix
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagram {
    pub schema: u32,
    pub arcs: Vec<Arc>,
    /// Sorted by label.
    pub sites: Vec<Site>,
    pub traversal: Vec<ArcId>,
}

impl Diagram {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn site_census(&self) -> SiteCensus {
        let mut c = SiteCensus::default();
        for s in &self.sites {
            match s {
                Site::ClassicalCrossing { .. } => c.classical += 1,
                Site::BondSite { .. } => c.bond += 1,
                Site::SheetSite { .. } => c.sheet += 1,
                Site::HelixSite { .. } => c.helix += 1,
            }
        }
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }

    /// Same diagram with the two passages of every bond exchanged, so that the
    /// later passage takes the first-argument role.
    pub fn with_swapped_bond_roles(&self) -> Diagram {
        let mut d = self.clone();
        for s in &mut d.sites {
            if let Site::BondSite { first_in, first_out, second_in, second_out, .. } = s {
                std::mem::swap(first_in, second_in);
                std::mem::swap(first_out, second_out);
            }
        }
        d
    }
}

pub fn arc_count(diagram: &Diagram) -> usize {
    diagram.arc_count()
}

pub fn site_census(diagram: &Diagram) -> SiteCensus {
    diagram.site_census()
}

pub fn build_diagram(code: &GaussCode) -> Result<Diagram, DiagramError> {
    let report = validate(code);
    if !report.is_well_formed() {
        return Err(DiagramError::MalformedCode(report));
    }
    let entries = code.entries();

    // arc_at[i] is the arc carrying entry i (for cutting entries: the incoming arc)
    let mut arc_at = Vec::with_capacity(entries.len());
    let mut arcs = Vec::new();
    let mut current = Arc { id: 0, start: ArcEnd::NTerminal, end: ArcEnd::CTerminal };
    for (i, e) in entries.iter().enumerate() {
        arc_at.push(current.id);
        if e.breaks_arc() {
            let cut = ArcEnd::Site { label: e.label().expect("cutting entries are labelled"), position: i };
            let next = Arc { id: current.id + 1, start: cut, end: ArcEnd::CTerminal };
            current.end = cut;
            arcs.push(std::mem::replace(&mut current, next));
        }
    }
    arcs.push(current);

    let mut by_label: BTreeMap<Label, Vec<usize>> = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        if let Some(l) = e.label() {
            by_label.entry(l).or_default().push(i);
        }
    }

    let sites = by_label
        .into_iter()
        .map(|(label, positions)| match entries[positions[0]] {
            Entry::Over { .. } | Entry::Under { .. } => {
                let (over, under) = if matches!(entries[positions[0]], Entry::Over { .. }) {
                    (positions[0], positions[1])
                } else {
                    (positions[1], positions[0])
                };
                Site::ClassicalCrossing {
                    label,
                    sign: entries[under].sign().expect("signed"),
                    over_arc: arc_at[over],
                    under_in_arc: arc_at[under],
                    under_out_arc: arc_at[under] + 1,
                }
            }
            Entry::Bond { .. } => {
                let (p, q) = (positions[0], positions[1]);
                let orientation = match entries[q].sign() {
                    Some(Sign::Plus) => BondOrientation::Parallel,
                    _ => BondOrientation::Antiparallel,
                };
                Site::BondSite {
                    label,
                    orientation,
                    first_in: arc_at[p],
                    first_out: arc_at[p] + 1,
                    second_in: arc_at[q],
                    second_out: arc_at[q] + 1,
                }
            }
            Entry::Sheet { .. } => {
                let mut strands: Vec<SheetStrand> = positions
                    .iter()
                    .map(|&p| match entries[p] {
                        Entry::Sheet { sign, strand, .. } => SheetStrand {
                            strand_index: strand,
                            sign,
                            in_arc: arc_at[p],
                            out_arc: arc_at[p] + 1,
                            position: p,
                        },
                        _ => unreachable!("validated"),
                    })
                    .collect();
                strands.sort_by_key(|s| s.strand_index);
                Site::SheetSite { label, strands }
            }
            Entry::Helix { handedness, .. } => {
                Site::HelixSite { label, handedness, through_arc: arc_at[positions[0]] }
            }
            Entry::NTerminal | Entry::CTerminal => unreachable!("terminals are unlabelled"),
        })
        .collect();

    let traversal = (0..arcs.len()).collect();
    Ok(Diagram { schema: 1, arcs, sites, traversal })
}
