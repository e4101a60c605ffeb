//! Extended Gauss codes for folded linear chains.
//!
//! A code is a whitespace separated token stream read from the N terminus to
//! the C terminus:
//!
//! ```text
//! N S1+_0 O2+ O3- B4+ U3- S1+_1 U2+ O5- O6+ S1+_-2 S1-_-1 U6+ A7+ U5- B4- C
//! ```
//!
//! `O`/`U` are over/under passages of a classical crossing, `B` a passage
//! through a two-strand bond, `S` a strand of a beta sheet (with its strand
//! index after `_`) and `A` an alpha helix. The sign after a crossing label is
//! the crossing sign; after a bond or sheet label it records whether the
//! strand runs parallel (`+`) or anti-parallel (`-`) to the first strand of
//! that bond or sheet; after a helix label it is the handedness.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Label = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// `Plus` when both signs agree.
    pub fn relative(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    NTerminal,
    CTerminal,
    Over { label: Label, sign: Sign },
    Under { label: Label, sign: Sign },
    Bond { label: Label, sign: Sign },
    Sheet { label: Label, sign: Sign, strand: i32 },
    Helix { label: Label, handedness: Sign },
}

/// Kind of object a label names. Every label names exactly one object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Crossing,
    Bond,
    Sheet,
    Helix,
}

impl Entry {
    pub fn label(&self) -> Option<Label> {
        match *self {
            Entry::NTerminal | Entry::CTerminal => None,
            Entry::Over { label, .. }
            | Entry::Under { label, .. }
            | Entry::Bond { label, .. }
            | Entry::Sheet { label, .. }
            | Entry::Helix { label, .. } => Some(label),
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match *self {
            Entry::NTerminal | Entry::CTerminal => None,
            Entry::Over { sign, .. }
            | Entry::Under { sign, .. }
            | Entry::Bond { sign, .. }
            | Entry::Sheet { sign, .. } => Some(sign),
            Entry::Helix { handedness, .. } => Some(handedness),
        }
    }

    pub fn kind(&self) -> Option<LabelKind> {
        match self {
            Entry::NTerminal | Entry::CTerminal => None,
            Entry::Over { .. } | Entry::Under { .. } => Some(LabelKind::Crossing),
            Entry::Bond { .. } => Some(LabelKind::Bond),
            Entry::Sheet { .. } => Some(LabelKind::Sheet),
            Entry::Helix { .. } => Some(LabelKind::Helix),
        }
    }

    pub fn with_label(self, new: Label) -> Entry {
        match self {
            Entry::NTerminal | Entry::CTerminal => self,
            Entry::Over { sign, .. } => Entry::Over { label: new, sign },
            Entry::Under { sign, .. } => Entry::Under { label: new, sign },
            Entry::Bond { sign, .. } => Entry::Bond { label: new, sign },
            Entry::Sheet { sign, strand, .. } => Entry::Sheet { label: new, sign, strand },
            Entry::Helix { handedness, .. } => Entry::Helix { label: new, handedness },
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self, Entry::Over { .. } | Entry::Under { .. })
    }

    /// Bond and sheet passages: the singular sites of the chain.
    pub fn is_singular(&self) -> bool {
        matches!(self, Entry::Bond { .. } | Entry::Sheet { .. })
    }

    /// Entries at which a new arc starts.
    pub fn breaks_arc(&self) -> bool {
        matches!(self, Entry::Under { .. } | Entry::Bond { .. } | Entry::Sheet { .. })
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Entry::NTerminal => write!(f, "N"),
            Entry::CTerminal => write!(f, "C"),
            Entry::Over { label, sign } => write!(f, "O{label}{sign}"),
            Entry::Under { label, sign } => write!(f, "U{label}{sign}"),
            Entry::Bond { label, sign } => write!(f, "B{label}{sign}"),
            Entry::Sheet { label, sign, strand } => write!(f, "S{label}{sign}_{strand}"),
            Entry::Helix { label, handedness } => write!(f, "A{label}{handedness}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unrecognized token {fragment:?} at token {position}")]
    Lex { position: usize, fragment: String },
}

impl FromStr for Entry {
    type Err = ();

    fn from_str(token: &str) -> Result<Entry, ()> {
        match token {
            "N" => return Ok(Entry::NTerminal),
            "C" => return Ok(Entry::CTerminal),
            _ => {}
        }
        let mut chars = token.chars();
        let tag = chars.next().ok_or(())?;
        let rest = chars.as_str();
        let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
        let label = parse_label(&rest[..digits]).ok_or(())?;
        let mut tail = rest[digits..].chars();
        let sign = match tail.next() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(()),
        };
        let tail = tail.as_str();
        match (tag, tail) {
            ('O', "") => Ok(Entry::Over { label, sign }),
            ('U', "") => Ok(Entry::Under { label, sign }),
            ('B', "") => Ok(Entry::Bond { label, sign }),
            ('A', "") => Ok(Entry::Helix { label, handedness: sign }),
            ('S', t) => {
                let strand = parse_strand(t.strip_prefix('_').ok_or(())?).ok_or(())?;
                Ok(Entry::Sheet { label, sign, strand })
            }
            _ => Err(()),
        }
    }
}

fn parse_label(s: &str) -> Option<Label> {
    if s.is_empty() || s.starts_with('0') {
        return None;
    }
    s.parse().ok()
}

fn parse_strand(s: &str) -> Option<i32> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let value: i32 = if body == "0" { 0 } else { parse_label(body)?.try_into().ok()? };
    Some(if neg { -value } else { value })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussCode {
    entries: Vec<Entry>,
}

impl GaussCode {
    pub fn new(entries: Vec<Entry>) -> Self {
        GaussCode { entries }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Entry> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    pub fn is_well_formed(&self) -> bool {
        validate(self).is_well_formed()
    }

    pub fn max_label(&self) -> Label {
        self.entries.iter().filter_map(Entry::label).max().unwrap_or(0)
    }

    /// Positions of every entry carrying `label`, in sequence order.
    pub fn positions_of(&self, label: Label) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.label() == Some(label))
            .map(|(i, _)| i)
            .collect()
    }

    /// Relabels every object 1, 2, 3, ... in order of first appearance.
    pub fn renumbered(&self) -> GaussCode {
        let mut map: HashMap<Label, Label> = HashMap::new();
        let entries = self
            .entries
            .iter()
            .map(|e| match e.label() {
                Some(old) => {
                    let next = map.len() as Label + 1;
                    e.with_label(*map.entry(old).or_insert(next))
                }
                None => *e,
            })
            .collect();
        GaussCode { entries }
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}

/// Tokenizes `text`. Only lexical problems are reported here; structural
/// checks live in [`validate`].
pub fn parse(text: &str) -> Result<GaussCode, ParseError> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse::<Entry>().map_err(|_| ParseError::Lex {
                position: i + 1,
                fragment: tok.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(GaussCode::new)
}

pub fn serialize(code: &GaussCode) -> String {
    code.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub code: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<Label>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

impl Finding {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        Finding { code, message: message.into(), label: None, position: None }
    }

    fn at_label(mut self, label: Label) -> Self {
        self.label = Some(label);
        self
    }

    fn at_position(mut self, position: usize) -> Self {
        self.position = Some(position);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub schema: u32,
    pub well_formed: bool,
    pub errors: Vec<Finding>,
    pub warnings: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_well_formed(&self) -> bool {
        self.errors.is_empty()
    }

    pub fn has_error(&self, code: &str) -> bool {
        self.errors.iter().any(|f| f.code == code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub mod finding_codes {
    pub const EMPTY: &str = "empty-code";
    pub const MISSING_N: &str = "missing-n-terminal";
    pub const MISSING_C: &str = "missing-c-terminal";
    pub const TERMINAL_MISPLACED: &str = "terminal-misplaced";
    pub const LABEL_KIND_CONFLICT: &str = "label-kind-conflict";
    pub const CROSSING_OCCURRENCES: &str = "crossing-occurrences";
    pub const CROSSING_ROLES: &str = "crossing-roles";
    pub const CROSSING_SIGN_MISMATCH: &str = "crossing-sign-mismatch";
    pub const BOND_OCCURRENCES: &str = "bond-occurrences";
    pub const BOND_FIRST_SIGN: &str = "bond-first-sign";
    pub const SHEET_OCCURRENCES: &str = "sheet-occurrences";
    pub const SHEET_FIRST_STRAND: &str = "sheet-first-strand";
    pub const SHEET_SECOND_STRAND: &str = "sheet-second-strand";
    pub const SHEET_DUPLICATE_STRAND: &str = "sheet-duplicate-strand";
    pub const SHEET_STRAND_GAP: &str = "sheet-strand-gap";
    pub const HELIX_OCCURRENCES: &str = "helix-occurrences";
    pub const LABEL_ORDER: &str = "label-order";
    pub const PLANARITY_UNCHECKED: &str = "planarity-unchecked";
}

pub fn validate(code: &GaussCode) -> ValidationReport {
    use finding_codes::*;

    let entries = code.entries();
    let mut errors = Vec::new();

    if entries.is_empty() {
        errors.push(Finding::new(EMPTY, "code has no entries"));
    } else {
        if entries[0] != Entry::NTerminal {
            errors.push(Finding::new(MISSING_N, "code must start with N").at_position(1));
        }
        if entries[entries.len() - 1] != Entry::CTerminal || entries.len() < 2 {
            errors.push(
                Finding::new(MISSING_C, "code must end with C").at_position(entries.len()),
            );
        }
        for (i, e) in entries.iter().enumerate() {
            let interior = i != 0 && i != entries.len() - 1;
            if interior && matches!(e, Entry::NTerminal | Entry::CTerminal) {
                errors.push(
                    Finding::new(TERMINAL_MISPLACED, format!("terminal {e} inside the chain"))
                        .at_position(i + 1),
                );
            }
        }
    }

    // label -> (kind, positions)
    let mut groups: BTreeMap<Label, Vec<usize>> = BTreeMap::new();
    let mut first_seen: Vec<Label> = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        if let Some(l) = e.label() {
            let slot = groups.entry(l).or_default();
            if slot.is_empty() {
                first_seen.push(l);
            }
            slot.push(i);
        }
    }

    for (&label, positions) in &groups {
        let kinds: Vec<LabelKind> = positions.iter().filter_map(|&p| entries[p].kind()).collect();
        if kinds.iter().any(|k| *k != kinds[0]) {
            errors.push(
                Finding::new(LABEL_KIND_CONFLICT, format!("label {label} names different objects"))
                    .at_label(label),
            );
            continue;
        }
        let at = |p: usize| entries[p];
        match kinds[0] {
            LabelKind::Crossing => {
                if positions.len() != 2 {
                    errors.push(
                        Finding::new(
                            CROSSING_OCCURRENCES,
                            format!("crossing {label} appears {} times", positions.len()),
                        )
                        .at_label(label),
                    );
                    continue;
                }
                let (a, b) = (at(positions[0]), at(positions[1]));
                let roles_ok = matches!(
                    (a, b),
                    (Entry::Over { .. }, Entry::Under { .. }) | (Entry::Under { .. }, Entry::Over { .. })
                );
                if !roles_ok {
                    errors.push(
                        Finding::new(
                            CROSSING_ROLES,
                            format!("crossing {label} needs one over and one under passage"),
                        )
                        .at_label(label),
                    );
                }
                if a.sign() != b.sign() {
                    errors.push(
                        Finding::new(
                            CROSSING_SIGN_MISMATCH,
                            format!("crossing {label} has mismatched signs"),
                        )
                        .at_label(label),
                    );
                }
            }
            LabelKind::Bond => {
                if positions.len() != 2 {
                    errors.push(
                        Finding::new(
                            BOND_OCCURRENCES,
                            format!("bond {label} appears {} time(s)", positions.len()),
                        )
                        .at_label(label),
                    );
                    continue;
                }
                if at(positions[0]).sign() != Some(Sign::Plus) {
                    errors.push(
                        Finding::new(BOND_FIRST_SIGN, format!("first strand of bond {label} must be +"))
                            .at_label(label)
                            .at_position(positions[0] + 1),
                    );
                }
            }
            LabelKind::Sheet => check_sheet(label, positions, entries, &mut errors),
            LabelKind::Helix => {
                if positions.len() != 1 {
                    errors.push(
                        Finding::new(
                            HELIX_OCCURRENCES,
                            format!("helix {label} appears {} times", positions.len()),
                        )
                        .at_label(label),
                    );
                }
            }
        }
    }

    for (i, &l) in first_seen.iter().enumerate() {
        let expected = i as Label + 1;
        if l != expected {
            errors.push(
                Finding::new(
                    LABEL_ORDER,
                    format!("label {l} is introduced where label {expected} was expected"),
                )
                .at_label(l),
            );
            break;
        }
    }

    let warnings = vec![Finding::new(
        PLANARITY_UNCHECKED,
        "planarity and realizability of the code are not checked",
    )];
    ValidationReport { schema: 1, well_formed: errors.is_empty(), errors, warnings }
}

fn check_sheet(label: Label, positions: &[usize], entries: &[Entry], errors: &mut Vec<Finding>) {
    use finding_codes::*;

    if positions.len() < 2 {
        errors.push(
            Finding::new(SHEET_OCCURRENCES, format!("sheet {label} has fewer than two strands"))
                .at_label(label),
        );
        return;
    }
    let strands: Vec<(Sign, i32)> = positions
        .iter()
        .map(|&p| match entries[p] {
            Entry::Sheet { sign, strand, .. } => (sign, strand),
            _ => unreachable!("grouped by kind"),
        })
        .collect();
    if strands[0] != (Sign::Plus, 0) {
        errors.push(
            Finding::new(SHEET_FIRST_STRAND, format!("first strand of sheet {label} must be +_0"))
                .at_label(label)
                .at_position(positions[0] + 1),
        );
    }
    if strands[1].1 <= 0 {
        errors.push(
            Finding::new(
                SHEET_SECOND_STRAND,
                format!("second strand of sheet {label} must carry a positive index"),
            )
            .at_label(label)
            .at_position(positions[1] + 1),
        );
    }
    let mut indices: Vec<i32> = strands.iter().map(|s| s.1).collect();
    indices.sort_unstable();
    if indices.windows(2).any(|w| w[0] == w[1]) {
        errors.push(
            Finding::new(SHEET_DUPLICATE_STRAND, format!("sheet {label} repeats a strand index"))
                .at_label(label),
        );
    } else if indices.windows(2).any(|w| w[1] != w[0] + 1) || !indices.contains(&0) {
        errors.push(
            Finding::new(
                SHEET_STRAND_GAP,
                format!("strand indices of sheet {label} are not a contiguous range through 0"),
            )
            .at_label(label),
        );
    }
}

/// Shape of codes produced by [`random_code`].
#[derive(Clone, Debug)]
pub struct GenParams {
    pub max_crossings: usize,
    pub max_bonds: usize,
    pub max_sheets: usize,
    pub max_sheet_strands: usize,
    pub max_helices: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { max_crossings: 5, max_bonds: 3, max_sheets: 1, max_sheet_strands: 4, max_helices: 2 }
    }
}

impl GenParams {
    /// Codes without sheets or helices.
    pub fn bonds_only(max_crossings: usize, max_bonds: usize) -> Self {
        GenParams { max_crossings, max_bonds, max_sheets: 0, max_sheet_strands: 0, max_helices: 0 }
    }
}

/// Draws a well-formed code. Well-formedness holds by construction: objects
/// are placed as slots in a shuffled sequence and every per-object convention
/// is then fixed from the resulting order.
pub fn random_code<R: Rng + ?Sized>(rng: &mut R, params: &GenParams) -> GaussCode {
    #[derive(Clone, Copy)]
    enum Slot {
        Crossing(usize),
        Bond(usize),
        Sheet(usize),
        Helix(usize),
    }

    let crossings = rng.gen_range(0..=params.max_crossings);
    let bonds = rng.gen_range(0..=params.max_bonds);
    let sheets = if params.max_sheet_strands >= 2 { rng.gen_range(0..=params.max_sheets) } else { 0 };
    let helices = rng.gen_range(0..=params.max_helices);

    let mut slots = Vec::new();
    for c in 0..crossings {
        slots.extend([Slot::Crossing(c); 2]);
    }
    for b in 0..bonds {
        slots.extend([Slot::Bond(b); 2]);
    }
    let mut sheet_sizes = Vec::new();
    for s in 0..sheets {
        let k = rng.gen_range(2..=params.max_sheet_strands);
        sheet_sizes.push(k);
        slots.extend(std::iter::repeat_n(Slot::Sheet(s), k));
    }
    for h in 0..helices {
        slots.push(Slot::Helix(h));
    }
    slots.shuffle(rng);

    let crossing_signs: Vec<Sign> = (0..crossings).map(|_| random_sign(rng)).collect();
    let over_first: Vec<bool> = (0..crossings).map(|_| rng.gen()).collect();
    let bond_second: Vec<Sign> = (0..bonds).map(|_| random_sign(rng)).collect();
    let sheet_strands: Vec<Vec<(Sign, i32)>> =
        sheet_sizes.iter().map(|&k| random_sheet_strands(rng, k)).collect();

    let mut seen_crossing = vec![false; crossings];
    let mut seen_bond = vec![false; bonds];
    let mut seen_sheet = vec![0usize; sheets];
    let mut entries = vec![Entry::NTerminal];
    for slot in slots {
        // Labels are provisional; renumbering below makes them sequential.
        let e = match slot {
            Slot::Crossing(c) => {
                let over = over_first[c] != seen_crossing[c];
                seen_crossing[c] = true;
                let label = c as Label + 1;
                let sign = crossing_signs[c];
                if over {
                    Entry::Over { label, sign }
                } else {
                    Entry::Under { label, sign }
                }
            }
            Slot::Bond(b) => {
                let sign = if seen_bond[b] { bond_second[b] } else { Sign::Plus };
                seen_bond[b] = true;
                Entry::Bond { label: (crossings + b) as Label + 1, sign }
            }
            Slot::Sheet(s) => {
                let (sign, strand) = sheet_strands[s][seen_sheet[s]];
                seen_sheet[s] += 1;
                Entry::Sheet { label: (crossings + bonds + s) as Label + 1, sign, strand }
            }
            Slot::Helix(h) => Entry::Helix {
                label: (crossings + bonds + sheets + h) as Label + 1,
                handedness: random_sign(rng),
            },
        };
        entries.push(e);
    }
    entries.push(Entry::CTerminal);
    GaussCode::new(entries).renumbered()
}

pub(crate) fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Strand (sign, index) pairs in sequence order for a sheet with `k` strands.
fn random_sheet_strands<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<(Sign, i32)> {
    let k = k as i32;
    // index range [-below, k - 1 - below]; at least one positive index
    let below = rng.gen_range(0..=k - 2);
    let mut others: Vec<i32> = (-below..=k - 1 - below).filter(|&i| i != 0).collect();
    others.shuffle(rng);
    let pos = others.iter().position(|&i| i > 0).expect("a positive index exists");
    others.swap(0, pos);
    let mut out = vec![(Sign::Plus, 0)];
    out.extend(others.into_iter().map(|i| (random_sign(rng), i)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub const FULL_CHAIN: &str =
        "N S1+_0 O2+ O3- B4+ U3- S1+_1 U2+ O5- O6+ S1+_-2 S1-_-1 U6+ A7+ U5- B4- C";

    #[test]
    fn empty_chain_parses() {
        let code = parse("N C").unwrap();
        assert_eq!(code.entries(), &[Entry::NTerminal, Entry::CTerminal]);
        assert_eq!(serialize(&code), "N C");
        assert!(code.is_well_formed());
    }

    #[test]
    fn full_example_parses_to_seventeen_tokens() {
        let code = parse(FULL_CHAIN).unwrap();
        assert_eq!(code.len(), 17);
        assert_eq!(code.entries()[1], Entry::Sheet { label: 1, sign: Sign::Plus, strand: 0 });
        assert_eq!(code.entries()[10], Entry::Sheet { label: 1, sign: Sign::Plus, strand: -2 });
        assert_eq!(code.entries()[13], Entry::Helix { label: 7, handedness: Sign::Plus });
        assert_eq!(serialize(&code), FULL_CHAIN);
        let report = validate(&code);
        assert!(report.is_well_formed(), "{:?}", report.errors);
    }

    #[test]
    fn unknown_tag_is_a_lex_error_at_its_token() {
        let err = parse("N X9 C").unwrap_err();
        assert_eq!(err, ParseError::Lex { position: 2, fragment: "X9".into() });
    }

    #[test]
    fn malformed_tokens_are_rejected() {
        for bad in ["O0+", "O01+", "O1", "O1*", "S1+", "S1+_", "S1+_01", "B1+_2", "A1+x", "o1+", "NC"] {
            assert!(parse(&format!("N {bad} C")).is_err(), "{bad} accepted");
        }
        assert_eq!(
            parse("N S2-_-3 C").unwrap().entries()[1],
            Entry::Sheet { label: 2, sign: Sign::Minus, strand: -3 }
        );
    }

    #[test]
    fn whitespace_is_normalized() {
        let code = parse("  N\tO1+\n\nU1+   C ").unwrap();
        assert_eq!(serialize(&code), "N O1+ U1+ C");
    }

    #[test]
    fn sign_mismatch_reported() {
        let r = validate(&parse("N O1+ U1- C").unwrap());
        assert!(r.has_error(finding_codes::CROSSING_SIGN_MISMATCH));
    }

    #[test]
    fn lone_bond_reported() {
        let r = validate(&parse("N B1+ C").unwrap());
        assert!(r.has_error(finding_codes::BOND_OCCURRENCES));
    }

    #[test]
    fn structural_errors() {
        use finding_codes::*;
        let cases = [
            ("O1+ U1+ C", MISSING_N),
            ("N O1+ U1+", MISSING_C),
            ("N N C", TERMINAL_MISPLACED),
            ("N O1+ O1+ C", CROSSING_ROLES),
            ("N O1+ U1+ U1+ C", CROSSING_OCCURRENCES),
            ("N B1- B1+ C", BOND_FIRST_SIGN),
            ("N O1+ B1+ C", LABEL_KIND_CONFLICT),
            ("N S1+_0 C", SHEET_OCCURRENCES),
            ("N S1+_1 S1+_0 C", SHEET_FIRST_STRAND),
            ("N S1-_0 S1+_1 C", SHEET_FIRST_STRAND),
            ("N S1+_0 S1+_-1 C", SHEET_SECOND_STRAND),
            ("N S1+_0 S1+_1 S1+_1 C", SHEET_DUPLICATE_STRAND),
            ("N S1+_0 S1+_2 C", SHEET_STRAND_GAP),
            ("N A1+ A1+ C", HELIX_OCCURRENCES),
            ("N O2+ U2+ C", LABEL_ORDER),
            ("N B2+ O1+ U1+ B2+ C", LABEL_ORDER),
        ];
        for (text, code) in cases {
            let r = validate(&parse(text).unwrap());
            assert!(r.has_error(code), "{text}: expected {code}, got {:?}", r.errors);
        }
    }

    #[test]
    fn second_sheet_strand_may_sit_beyond_one() {
        let r = validate(&parse("N S1+_0 S1-_2 S1+_1 S1-_-1 C").unwrap());
        assert!(r.is_well_formed(), "{:?}", r.errors);
    }

    #[test]
    fn report_always_warns_about_planarity() {
        let r = validate(&parse("N C").unwrap());
        assert_eq!(r.warnings[0].code, finding_codes::PLANARITY_UNCHECKED);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["schema"], 1);
        assert!(json["errors"].as_array().unwrap().is_empty());
    }

    #[test]
    fn deleting_a_paired_entry_breaks_the_full_chain_code() {
        let code = parse(FULL_CHAIN).unwrap();
        for (i, e) in code.entries().iter().enumerate() {
            if e.is_crossing() || matches!(e, Entry::Bond { .. }) {
                let mut entries = code.entries().to_vec();
                entries.remove(i);
                assert!(!GaussCode::new(entries).is_well_formed(), "deleting {e} at {i} accepted");
            }
        }
    }

    #[test]
    fn renumber_restores_sequential_labels() {
        let code = parse("N O5+ B9+ U5+ B9- C").unwrap();
        assert_eq!(code.renumbered().to_string(), "N O1+ B2+ U1+ B2- C");
    }

    #[test]
    fn generator_emits_well_formed_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let code = random_code(&mut rng, &GenParams::default());
            let r = validate(&code);
            assert!(r.is_well_formed(), "{code}: {:?}", r.errors);
        }
    }
}
