use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{moves::in_end_segment, RewriteError};
use crate::gausscode::{Entry, GaussCode, Label, Sign};

/// How helices are treated by [`normalize_helices`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HelixMode {
    Drop,
    /// Each helix becomes this many kinks signed by its handedness.
    Kinks(usize),
}

fn check(code: &GaussCode) -> Result<(), RewriteError> {
    let report = code.validate();
    if report.is_well_formed() {
        Ok(())
    } else {
        Err(RewriteError::MalformedCode(report.errors.iter().map(|f| f.code).collect()))
    }
}

/// Replaces every sheet by bonds between strands adjacent in strand index.
///
/// Bond `(i, i+1)` sits higher than bond `(i-1, i)`, and strand 0 runs
/// downward. A strand with the same sign as strand 0 therefore meets its
/// upper bond first; an opposite strand meets its lower bond first.
pub fn segment_sheets(code: &GaussCode) -> Result<GaussCode, RewriteError> {
    check(code)?;
    let entries = code.entries();
    let mut sheets: BTreeMap<Label, Vec<(i32, Sign, usize)>> = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        if let Entry::Sheet { label, sign, strand } = *e {
            sheets.entry(label).or_default().push((strand, sign, i));
        }
    }
    if sheets.is_empty() {
        return Ok(code.clone());
    }

    // Entries replacing each sheet occurrence, keyed by position. Bond
    // labels are fresh; signs are fixed once traversal order is known.
    let mut next = code.max_label() + 1;
    let mut replacement: BTreeMap<usize, Vec<Label>> = BTreeMap::new();
    let mut parallel: BTreeMap<Label, bool> = BTreeMap::new();
    for strands in sheets.values_mut() {
        strands.sort_by_key(|s| s.0);
        let zero_sign = strands.iter().find(|s| s.0 == 0).map(|s| s.1).unwrap_or(Sign::Plus);
        let bonds: Vec<Label> = (0..strands.len() - 1).map(|t| next + t as Label).collect();
        next += bonds.len() as Label;
        for t in 0..strands.len() - 1 {
            parallel.insert(bonds[t], strands[t].1 == strands[t + 1].1);
        }
        for (t, &(_, sign, pos)) in strands.iter().enumerate() {
            let lower = t.checked_sub(1).map(|b| bonds[b]);
            let upper = bonds.get(t).copied();
            let order = if sign == zero_sign { [upper, lower] } else { [lower, upper] };
            replacement.insert(pos, order.into_iter().flatten().collect());
        }
    }

    let mut seen: BTreeMap<Label, ()> = BTreeMap::new();
    let mut out = Vec::with_capacity(entries.len() + replacement.len());
    for (i, e) in entries.iter().enumerate() {
        match replacement.get(&i) {
            Some(labels) => {
                for &l in labels {
                    let sign = if seen.insert(l, ()).is_none() || parallel[&l] {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    };
                    out.push(Entry::Bond { label: l, sign });
                }
            }
            None => out.push(*e),
        }
    }
    Ok(GaussCode::new(out).renumbered())
}

/// Deletes every crossing with a passage before the first or after the last
/// bond or sheet entry. With no such entries every crossing goes.
pub fn reduce_ends(code: &GaussCode) -> Result<GaussCode, RewriteError> {
    check(code)?;
    let doomed: Vec<Label> = code
        .entries()
        .iter()
        .enumerate()
        .filter(|(i, e)| e.is_crossing() && in_end_segment(code, *i))
        .filter_map(|(_, e)| e.label())
        .collect();
    let kept = code.entries().iter().filter(|e| !e.label().is_some_and(|l| e.is_crossing() && doomed.contains(&l)));
    Ok(GaussCode::new(kept.copied().collect()).renumbered())
}

pub fn normalize_helices(code: &GaussCode, mode: HelixMode) -> Result<GaussCode, RewriteError> {
    check(code)?;
    let mut next = code.max_label() + 1;
    let mut out = Vec::with_capacity(code.len());
    for e in code.entries() {
        match (*e, mode) {
            (Entry::Helix { .. }, HelixMode::Drop) => {}
            (Entry::Helix { handedness, .. }, HelixMode::Kinks(n)) => {
                for _ in 0..n {
                    out.push(Entry::Over { label: next, sign: handedness });
                    out.push(Entry::Under { label: next, sign: handedness });
                    next += 1;
                }
            }
            _ => out.push(*e),
        }
    }
    Ok(GaussCode::new(out).renumbered())
}

/// Segments sheets, drops helices, trims the ends and renumbers. The result
/// contains only crossing and bond entries and is a fixed point.
pub fn normalize(code: &GaussCode) -> Result<GaussCode, RewriteError> {
    let segmented = segment_sheets(code)?;
    let plain = normalize_helices(&segmented, HelixMode::Drop)?;
    reduce_ends(&plain)
}
