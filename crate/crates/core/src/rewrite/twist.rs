use super::RewriteError;
use crate::gausscode::{Entry, GaussCode, Label, Sign};

/// Slots flanking an antiparallel bond. Below the bond a strand crosses
/// passage 1 before the bond and passage 2 after it; above, the reverse.
fn slots(occ: [usize; 2], below: bool) -> [usize; 2] {
    if below {
        [occ[0].wrapping_sub(1), occ[1] + 1]
    } else {
        [occ[0] + 1, occ[1].wrapping_sub(1)]
    }
}

/// Moves the twist crossing between the two passages of an antiparallel
/// bond from below the bond to above it (`upward`) or back, keeping which
/// passage goes over and the crossing sign.
pub(super) fn apply_v(code: &GaussCode, bond: Label, upward: bool) -> Result<GaussCode, RewriteError> {
    let na = |msg: &str| Err(RewriteError::NotApplicable(msg.to_string()));
    let entries = code.entries();
    let occ = code.positions_of(bond);
    if occ.len() != 2 || !matches!(entries[occ[0]], Entry::Bond { .. }) {
        return na("V needs a bond label");
    }
    if entries[occ[1]].sign() != Some(Sign::Minus) {
        return na("V applies to antiparallel bonds only");
    }
    let occ = [occ[0], occ[1]];
    let [s1, s2] = slots(occ, upward);
    if s2 >= entries.len() || s1 >= s2 {
        return na("no twist on that side of the bond");
    }
    let (e1, e2) = (entries[s1], entries[s2]);
    if !(e1.is_crossing() && e1.label() == e2.label()) {
        return na("no twist on that side of the bond");
    }
    // Rebuild with the twist entries placed on the other side.
    let mut out = Vec::with_capacity(entries.len());
    for (i, e) in entries.iter().enumerate() {
        if i == s1 || i == s2 {
            continue;
        }
        match (i == occ[0], i == occ[1], upward) {
            (true, _, true) => {
                out.push(*e);
                out.push(e1);
            }
            (_, true, true) => {
                out.push(e2);
                out.push(*e);
            }
            (true, _, false) => {
                out.push(e1);
                out.push(*e);
            }
            (_, true, false) => {
                out.push(*e);
                out.push(e2);
            }
            _ => out.push(*e),
        }
    }
    Ok(GaussCode::new(out))
}
