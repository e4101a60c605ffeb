use serde::{Deserialize, Serialize};

use super::RewriteError;
use crate::gausscode::{Entry, GaussCode, Label, Sign};

/// One syntactic move. Positions index the entry list with `N` at 0; a gap
/// `g` means "immediately before entry `g`", so valid gaps run from 1 to
/// `len - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move")]
pub enum MoveSpec {
    /// Adds a kink `Ok Uk` (or `Uk Ok`) at a gap.
    #[serde(rename = "I_insert")]
    IInsert {
        gap: usize,
        sign: Sign,
        #[serde(default)]
        under_first: bool,
    },
    /// Removes the kink whose first entry sits at `position`.
    #[serde(rename = "I_remove")]
    IRemove { position: usize },
    /// Adds a bigon: `Ok Ol` at `over_gap` and the matching unders at
    /// `under_gap`, with `k` carrying `sign` and `l` its opposite.
    #[serde(rename = "II_insert")]
    IIInsert {
        over_gap: usize,
        under_gap: usize,
        sign: Sign,
        /// Unders appear as `Ul Uk` instead of `Uk Ul`.
        #[serde(default)]
        reversed: bool,
        /// With equal gaps, put the unders before the overs.
        #[serde(default)]
        under_first: bool,
    },
    /// Removes the bigon whose adjacent over pair starts at `position`.
    #[serde(rename = "II_remove")]
    IIRemove { position: usize },
    /// Triangle move. Each field is the start of an adjacent pair: `top` holds
    /// two overs, `middle` an under and an over, `bottom` two unders. Every
    /// pair is reversed in place, so the move is its own inverse.
    III { top: usize, middle: usize, bottom: usize },
    /// Slides the adjacent crossing pair at `position` across a bond. Two
    /// overs pass above the bond, two unders pass below it.
    IV {
        position: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bond: Option<Label>,
    },
    /// Moves a twist between the two passages of an antiparallel bond to the
    /// other side of the bond: from below to above when `upward`.
    V { bond: Label, upward: bool },
    /// Swaps a helix with the neighbouring crossing entry.
    VI { position: usize },
    /// Adds a crossing with one passage on an end segment.
    #[serde(rename = "VII_insert")]
    VIIInsert {
        terminal_gap: usize,
        other_gap: usize,
        terminal_over: bool,
        sign: Sign,
        /// With equal gaps, put the other passage first.
        #[serde(default)]
        other_first: bool,
    },
    /// Removes the crossing whose entry at `position` lies on an end segment.
    #[serde(rename = "VII_remove")]
    VIIRemove { position: usize },
}

fn not_applicable(reason: impl Into<String>) -> RewriteError {
    RewriteError::NotApplicable(reason.into())
}

fn entry(code: &GaussCode, i: usize) -> Result<Entry, RewriteError> {
    let e = code.entries();
    if i == 0 || i + 1 >= e.len() {
        return Err(not_applicable(format!("position {i} is not an interior entry")));
    }
    Ok(e[i])
}

fn check_gap(code: &GaussCode, gap: usize) -> Result<(), RewriteError> {
    if gap == 0 || gap >= code.len() {
        return Err(not_applicable(format!("gap {gap} is outside the chain")));
    }
    Ok(())
}

/// Inserts the given entries; each item is `(gap, order, entry)` and items
/// sharing a gap are placed in `order`.
fn insert_at(code: &GaussCode, mut items: Vec<(usize, usize, Entry)>) -> GaussCode {
    items.sort_by_key(|&(g, o, _)| (g, o));
    let mut out = Vec::with_capacity(code.len() + items.len());
    let mut it = items.into_iter().peekable();
    for (i, e) in code.entries().iter().enumerate() {
        while let Some(&(g, _, new)) = it.peek() {
            if g != i {
                break;
            }
            out.push(new);
            it.next();
        }
        out.push(*e);
    }
    GaussCode::new(out)
}

fn remove_positions(code: &GaussCode, drop: &[usize]) -> GaussCode {
    GaussCode::new(
        code.entries()
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, e)| *e)
            .collect(),
    )
}

fn partner(code: &GaussCode, i: usize) -> usize {
    let label = code.entries()[i].label().expect("labelled entry");
    code.positions_of(label).into_iter().find(|&p| p != i).expect("paired entry")
}

fn crossing_sign(e: Entry) -> Option<Sign> {
    match e {
        Entry::Over { sign, .. } | Entry::Under { sign, .. } => Some(sign),
        _ => None,
    }
}

fn is_over(e: Entry) -> bool {
    matches!(e, Entry::Over { .. })
}

fn is_under(e: Entry) -> bool {
    matches!(e, Entry::Under { .. })
}

/// Index range of the chain strictly between the terminals and the first
/// (last) singular entry. Without singular entries the whole chain is an
/// end segment.
pub(crate) fn in_end_segment(code: &GaussCode, i: usize) -> bool {
    let e = code.entries();
    let first = e.iter().position(Entry::is_singular);
    let last = e.iter().rposition(Entry::is_singular);
    match (first, last) {
        (Some(f), Some(l)) => i < f || i > l,
        _ => true,
    }
}

fn gap_in_end_segment(code: &GaussCode, gap: usize) -> bool {
    let e = code.entries();
    let first = e.iter().position(Entry::is_singular);
    let last = e.iter().rposition(Entry::is_singular);
    match (first, last) {
        (Some(f), Some(l)) => gap <= f || gap > l,
        _ => true,
    }
}

/// Arc carrying the entry at `i`; an arc-breaking entry starts the arc it
/// names, so its incoming arc is `arc_at(i) - 1`.
fn arc_at(code: &GaussCode, i: usize) -> usize {
    code.entries()[1..=i].iter().filter(|e| e.breaks_arc()).count()
}

/// Arcs touched by the entry at `i`: both sides of a breaking entry, or the
/// one arc through any other entry.
fn arcs_around(code: &GaussCode, i: usize) -> Vec<usize> {
    let a = arc_at(code, i);
    if code.entries()[i].breaks_arc() {
        vec![a - 1, a]
    } else {
        vec![a]
    }
}

fn disjoint(groups: &[Vec<usize>]) -> bool {
    groups.iter().enumerate().all(|(i, g)| groups[i + 1..].iter().all(|h| g.iter().all(|a| !h.contains(a))))
}

fn swap_adjacent(code: &GaussCode, pairs: &[usize]) -> GaussCode {
    let mut e = code.entries().to_vec();
    for &p in pairs {
        e.swap(p, p + 1);
    }
    GaussCode::new(e)
}

/// Applies `spec` and returns the renumbered result.
pub fn apply_move(code: &GaussCode, spec: &MoveSpec) -> Result<GaussCode, RewriteError> {
    let report = code.validate();
    if !report.is_well_formed() {
        return Err(RewriteError::MalformedCode(report.errors.iter().map(|f| f.code).collect()));
    }
    let out = match *spec {
        MoveSpec::IInsert { gap, sign, under_first } => {
            check_gap(code, gap)?;
            let k = code.max_label() + 1;
            let (o, u) = (Entry::Over { label: k, sign }, Entry::Under { label: k, sign });
            let pair = if under_first { [u, o] } else { [o, u] };
            insert_at(code, vec![(gap, 0, pair[0]), (gap, 1, pair[1])])
        }
        MoveSpec::IRemove { position } => {
            let (a, b) = (entry(code, position)?, entry(code, position + 1)?);
            if !a.is_crossing() || a.label() != b.label() {
                return Err(not_applicable("no kink at this position"));
            }
            remove_positions(code, &[position, position + 1])
        }
        MoveSpec::IIInsert { over_gap, under_gap, sign, reversed, under_first } => {
            check_gap(code, over_gap)?;
            check_gap(code, under_gap)?;
            let k = code.max_label() + 1;
            let l = k + 1;
            let (ok, uk) = (Entry::Over { label: k, sign }, Entry::Under { label: k, sign });
            let (ol, ul) = (Entry::Over { label: l, sign: sign.flip() }, Entry::Under { label: l, sign: sign.flip() });
            let unders = if reversed { [ul, uk] } else { [uk, ul] };
            let (ob, ub) = if under_first && over_gap == under_gap { (2, 0) } else { (0, 2) };
            insert_at(
                code,
                vec![
                    (over_gap, ob, ok),
                    (over_gap, ob + 1, ol),
                    (under_gap, ub, unders[0]),
                    (under_gap, ub + 1, unders[1]),
                ],
            )
        }
        MoveSpec::IIRemove { position } => {
            let (a, b) = (entry(code, position)?, entry(code, position + 1)?);
            if !(is_over(a) && is_over(b)) {
                return Err(not_applicable("II_remove needs two adjacent over entries"));
            }
            if crossing_sign(a) == crossing_sign(b) {
                return Err(not_applicable("bigon crossings must have opposite signs"));
            }
            let (pa, pb) = (partner(code, position), partner(code, position + 1));
            if pa.abs_diff(pb) != 1 {
                return Err(not_applicable("the under passages are not adjacent"));
            }
            remove_positions(code, &[position, position + 1, pa, pb])
        }
        MoveSpec::III { top, middle, bottom } => apply_iii(code, top, middle, bottom)?,
        MoveSpec::IV { position, bond } => apply_iv(code, position, bond)?,
        MoveSpec::V { bond, upward } => super::twist::apply_v(code, bond, upward)?,
        MoveSpec::VI { position } => {
            let (a, b) = (entry(code, position)?, entry(code, position + 1)?);
            let helix_and_crossing = (matches!(a, Entry::Helix { .. }) && b.is_crossing())
                || (a.is_crossing() && matches!(b, Entry::Helix { .. }));
            if !helix_and_crossing {
                return Err(not_applicable("VI swaps a helix with an adjacent crossing entry"));
            }
            swap_adjacent(code, &[position])
        }
        MoveSpec::VIIInsert { terminal_gap, other_gap, terminal_over, sign, other_first } => {
            check_gap(code, terminal_gap)?;
            check_gap(code, other_gap)?;
            if !gap_in_end_segment(code, terminal_gap) {
                return Err(not_applicable("terminal gap is not on an end segment"));
            }
            let k = code.max_label() + 1;
            let (o, u) = (Entry::Over { label: k, sign }, Entry::Under { label: k, sign });
            let (t, other) = if terminal_over { (o, u) } else { (u, o) };
            let t_first = terminal_gap < other_gap || (terminal_gap == other_gap && !other_first);
            insert_at(code, vec![(terminal_gap, usize::from(!t_first), t), (other_gap, usize::from(t_first), other)])
        }
        MoveSpec::VIIRemove { position } => {
            let e = entry(code, position)?;
            if !e.is_crossing() {
                return Err(not_applicable("VII_remove needs a crossing entry"));
            }
            if !in_end_segment(code, position) {
                return Err(not_applicable("entry is not on an end segment"));
            }
            remove_positions(code, &[position, partner(code, position)])
        }
    };
    let out = out.renumbered();
    debug_assert!(out.is_well_formed(), "move produced a malformed code: {out}");
    Ok(out)
}

fn apply_iii(code: &GaussCode, top: usize, middle: usize, bottom: usize) -> Result<GaussCode, RewriteError> {
    let pair = |p: usize| -> Result<(Entry, Entry), RewriteError> { Ok((entry(code, p)?, entry(code, p + 1)?)) };
    let (t0, t1) = pair(top)?;
    let (m0, m1) = pair(middle)?;
    let (b0, b1) = pair(bottom)?;
    if !(is_over(t0) && is_over(t1)) || !(is_under(b0) && is_under(b1)) {
        return Err(not_applicable("III needs an over pair on top and an under pair at the bottom"));
    }
    let (mu, mo) = match (m0, m1) {
        (u @ Entry::Under { .. }, o @ Entry::Over { .. }) | (o @ Entry::Over { .. }, u @ Entry::Under { .. }) => (u, o),
        _ => return Err(not_applicable("III middle pair must be one under and one over")),
    };
    let (i, k) = (mu.label(), mo.label());
    let j = if t0.label() == i { t1.label() } else if t1.label() == i { t0.label() } else {
        return Err(not_applicable("middle under is not crossed by the top pair"));
    };
    let bottom_labels = [b0.label(), b1.label()];
    if !(bottom_labels.contains(&j) && bottom_labels.contains(&k)) {
        return Err(not_applicable("bottom pair must cross the top and middle strands"));
    }
    // When the middle strand meets the top strand first exactly when the
    // bottom strand does, the two top crossings share a sign; otherwise
    // their signs differ.
    let aligned = is_under(m0) == (b0.label() == j);
    let same = crossing_sign(mu) == crossing_sign(if t0.label() == j { t0 } else { t1 });
    if same != aligned {
        return Err(not_applicable("III sign pattern does not match the crossing order"));
    }
    let strand = |p: usize| -> Vec<usize> {
        let mut v = arcs_around(code, p);
        v.extend(arcs_around(code, p + 1));
        v
    };
    if !disjoint(&[strand(top), strand(middle), strand(bottom)]) {
        return Err(not_applicable("III strands share an arc"));
    }
    Ok(swap_adjacent(code, &[top, middle, bottom]))
}

/// Bond occurrences (0 or 1) adjacent to `p`, each with whether `p`
/// precedes it.
fn bond_neighbours(code: &GaussCode, p: usize, bond: Label) -> Vec<(usize, bool)> {
    let occ = code.positions_of(bond);
    let mut v = Vec::new();
    for (j, &b) in occ.iter().enumerate() {
        if b == p + 1 {
            v.push((j, true));
        }
        if p == b + 1 {
            v.push((j, false));
        }
    }
    v
}

fn apply_iv(code: &GaussCode, position: usize, bond: Option<Label>) -> Result<GaussCode, RewriteError> {
    let (a, b) = (entry(code, position)?, entry(code, position + 1)?);
    let over = match (a, b) {
        (Entry::Over { .. }, Entry::Over { .. }) => true,
        (Entry::Under { .. }, Entry::Under { .. }) => false,
        _ => return Err(not_applicable("IV needs two adjacent overs or two adjacent unders")),
    };
    let (pa, pb) = (partner(code, position), partner(code, position + 1));
    let bonds = match bond {
        Some(l) => vec![l],
        None => bond_labels(code),
    };
    for l in bonds {
        let occ = code.positions_of(l);
        if occ.len() != 2 || !matches!(code.entries()[occ[0]], Entry::Bond { .. }) {
            continue;
        }
        let anti = code.entries()[occ[1]].sign() == Some(Sign::Minus);
        let (sa, sb) = (crossing_sign(a).expect("crossing"), crossing_sign(b).expect("crossing"));
        let mut bond_arcs: Vec<usize> = arcs_around(code, occ[0]);
        bond_arcs.extend(arcs_around(code, occ[1]));
        let mut mover: Vec<usize> = arcs_around(code, position);
        mover.extend(arcs_around(code, position + 1));
        let mut partners = arcs_around(code, pa);
        partners.extend(arcs_around(code, pb));
        partners.retain(|x| !bond_arcs.contains(x));
        if !disjoint(&[mover, bond_arcs, partners]) {
            continue;
        }
        for &(ja, ba) in &bond_neighbours(code, pa, l) {
            for &(jb, bb) in &bond_neighbours(code, pb, l) {
                if ja == jb {
                    continue;
                }
                let ok = if over {
                    ba == bb && sa == sb
                } else {
                    iv_under_allowed(anti, (ja, ba, sa), (jb, bb, sb))
                };
                if ok {
                    let swaps: Vec<usize> =
                        [(pa, ba), (pb, bb)].iter().map(|&(p, before)| if before { p } else { p - 1 }).collect();
                    return Ok(swap_adjacent(code, &swaps));
                }
            }
        }
    }
    Err(not_applicable("no bond with a compatible passage pattern next to the partners"))
}

/// Sign and placement patterns for a strand passing under both passages of
/// a bond. Each side is `(passage, precedes_bond, sign)`.
fn iv_under_allowed(anti: bool, p: (usize, bool, Sign), q: (usize, bool, Sign)) -> bool {
    use Sign::{Minus, Plus};
    if !anti {
        if p.1 != q.1 {
            return false;
        }
        match (p.2, q.2) {
            (Plus, Plus) => p.0 == 0 && q.0 == 1,
            (Minus, Minus) => p.0 == 1 && q.0 == 0,
            _ => false,
        }
    } else {
        // The first passer is positive, the second negative, and they sit
        // on opposite sides of the bond.
        p.2 == Plus && q.2 == Minus && p.1 != q.1 && p.0 != q.0
    }
}

impl MoveSpec {
    /// The spec that undoes `self` on the code it produces from `before`.
    pub fn inverse(&self, before: &GaussCode) -> Result<MoveSpec, RewriteError> {
        let after = apply_move(before, self)?;
        let e = before.entries();
        let inv = match *self {
            MoveSpec::IInsert { gap, .. } => MoveSpec::IRemove { position: gap },
            MoveSpec::IRemove { position } => MoveSpec::IInsert {
                gap: position,
                sign: crossing_sign(e[position]).expect("kink entry"),
                under_first: is_under(e[position]),
            },
            MoveSpec::IIInsert { over_gap, under_gap, under_first, .. } => {
                let overs_first = over_gap < under_gap || (over_gap == under_gap && !under_first);
                MoveSpec::IIRemove { position: if overs_first { over_gap } else { over_gap + 2 } }
            }
            MoveSpec::IIRemove { position } => {
                let u = partner(before, position).min(partner(before, position + 1));
                let reversed = e[u].label() != e[position].label();
                let sign = crossing_sign(e[position]).expect("crossing entry");
                if u > position {
                    MoveSpec::IIInsert { over_gap: position, under_gap: u - 2, sign, reversed, under_first: false }
                } else {
                    MoveSpec::IIInsert { over_gap: position - 2, under_gap: u, sign, reversed, under_first: true }
                }
            }
            MoveSpec::III { .. } | MoveSpec::VI { .. } => self.clone(),
            MoveSpec::IV { position, .. } => {
                let target = before.renumbered();
                bond_labels(&after)
                    .into_iter()
                    .map(|l| MoveSpec::IV { position, bond: Some(l) })
                    .find(|s| apply_move(&after, s).as_ref() == Ok(&target))
                    .ok_or_else(|| not_applicable("IV has no inverse at this anchor"))?
            }
            MoveSpec::V { upward, .. } => {
                let target = before.renumbered();
                bond_labels(&after)
                    .into_iter()
                    .map(|l| MoveSpec::V { bond: l, upward: !upward })
                    .find(|s| apply_move(&after, s).as_ref() == Ok(&target))
                    .ok_or_else(|| not_applicable("V has no inverse at this anchor"))?
            }
            MoveSpec::VIIInsert { terminal_gap, other_gap, other_first, .. } => {
                let t_first = terminal_gap < other_gap || (terminal_gap == other_gap && !other_first);
                MoveSpec::VIIRemove { position: if t_first { terminal_gap } else { terminal_gap + 1 } }
            }
            MoveSpec::VIIRemove { position } => {
                let q = partner(before, position);
                let terminal_over = is_over(e[position]);
                let sign = crossing_sign(e[position]).expect("crossing entry");
                if q > position {
                    MoveSpec::VIIInsert { terminal_gap: position, other_gap: q - 1, terminal_over, sign, other_first: false }
                } else {
                    MoveSpec::VIIInsert { terminal_gap: position - 1, other_gap: q, terminal_over, sign, other_first: true }
                }
            }
        };
        Ok(inv)
    }
}

fn bond_labels(code: &GaussCode) -> Vec<Label> {
    let mut v: Vec<Label> = code
        .entries()
        .iter()
        .filter_map(|e| match e {
            Entry::Bond { label, .. } => Some(*label),
            _ => None,
        })
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Every applicable move that needs no fresh parameters: removals, III, IV,
/// V and VI, at every anchor where they apply.
pub fn candidate_moves(code: &GaussCode) -> Vec<MoveSpec> {
    let n = code.len();
    let e = code.entries();
    let mut specs = Vec::new();
    let interior = 1..n.saturating_sub(2);
    for p in interior.clone() {
        specs.push(MoveSpec::IRemove { position: p });
        specs.push(MoveSpec::IIRemove { position: p });
        specs.push(MoveSpec::IV { position: p, bond: None });
        specs.push(MoveSpec::VI { position: p });
    }
    for p in 1..n.saturating_sub(1) {
        specs.push(MoveSpec::VIIRemove { position: p });
    }
    for l in bond_labels(code) {
        specs.push(MoveSpec::V { bond: l, upward: true });
        specs.push(MoveSpec::V { bond: l, upward: false });
    }
    let pairs = |f: fn(Entry, Entry) -> bool| -> Vec<usize> { interior.clone().filter(|&p| f(e[p], e[p + 1])).collect() };
    let tops = pairs(|a, b| is_over(a) && is_over(b));
    let middles = pairs(|a, b| (is_over(a) && is_under(b)) || (is_under(a) && is_over(b)));
    let bottoms = pairs(|a, b| is_under(a) && is_under(b));
    for &top in &tops {
        for &middle in &middles {
            for &bottom in &bottoms {
                specs.push(MoveSpec::III { top, middle, bottom });
            }
        }
    }
    specs.retain(|s| apply_move(code, s).is_ok());
    specs
}
