//! Reference codes for the two worked distinguishing examples and for the
//! sheet/bond/helix trio whose invariants coincide.
//!
//! The example pairs are chosen so that, once every forced arc color is
//! propagated, the coloring set is cut out by one relation in two free colors
//! `x` and `y`:
//!
//! | code | relation |
//! |------|----------|
//! | [`EXAMPLE1_P1`] | `R2(y,x) = y` |
//! | [`EXAMPLE1_P2`] | `R2(y,x) ▷⁻¹ R1(y,x) = y` |
//! | [`EXAMPLE2_P1`] | `y = R3(R1(x,y), R2(x,y)) ▷ x` |
//! | [`EXAMPLE2_P2`] | `y = R3(R1(x,y), R2(x,y))` |

/// First chain of the first example: 45 colorings under the affine bondle
/// `(n, a, b) = (15, 8, 2)`.
pub const EXAMPLE1_P1: &str = "N O1+ B2+ U1+ B2+ C";
/// Crossing change of [`EXAMPLE1_P1`]: only the 15 constant colorings.
pub const EXAMPLE1_P2: &str = "N U1+ B2+ O1+ B2+ C";
/// First chain of the second example: 75 colorings under `(15, 7, 8, 6)`.
pub const EXAMPLE2_P1: &str = "N O1+ B2+ B3+ U1+ B2+ B3- C";
/// Crossing change of [`EXAMPLE2_P1`]: 15 colorings.
pub const EXAMPLE2_P2: &str = "N U1+ B2+ B3+ O1+ B2+ B3- C";

/// A chain with a three-strand sheet, a crossing through the sheet region
/// and a closing bond.
pub const TRIO_SHEET: &str = "N S1+_0 O2+ S1-_1 U2+ O3- S1+_-1 U3- B4+ B4- C";
/// The sheet of [`TRIO_SHEET`] replaced by its staircase of two bonds.
pub const TRIO_SEGMENTED: &str = "N B1+ B2+ O3+ B1- U3+ O4- B2+ U4- B5+ B5- C";
/// [`TRIO_SEGMENTED`] with a helix inside the staircase and an extra kink
/// before the closing bond.
pub const TRIO_HELIX: &str = "N B1+ A2- B3+ O4+ B1- U4+ O5- B3+ U5- O6+ U6+ B7+ B7- C";

/// The three trio codes in order.
pub const TRIO: [&str; 3] = [TRIO_SHEET, TRIO_SEGMENTED, TRIO_HELIX];
