//! Solution counting for homogeneous linear systems over `Z_n`.
//!
//! The coefficient matrix is brought to diagonal form with unimodular integer
//! row and column operations, reduced modulo `n` throughout. A diagonal
//! system `d_i x_i = 0` has `gcd(d_i, n)` solutions per row and `n` per
//! remaining column.

use num_bigint::BigUint;

use super::{ConstraintSystem, Equation};
use crate::algebra::affine::gcd;
use crate::algebra::AffineParams;

/// Extended gcd on non-negative values: `(g, s, t)` with `s a + t b = g`.
/// When `a` divides `b` the result is `(a, 1, 0)`, so a pivot that already
/// divides an entry is left in place and elimination terminates.
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 || (a != 0 && b % a == 0) {
        (a, 1, 0)
    } else {
        let (g, s, t) = egcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

struct Matrix {
    n: i128,
    rows: Vec<Vec<i128>>,
    cols: usize,
}

impl Matrix {
    fn reduce(&self, v: i128) -> i128 {
        v.rem_euclid(self.n)
    }

    /// Replaces rows `i`, `j` by `(s ri + t rj, -(b/g) ri + (a/g) rj)`, which
    /// has determinant 1 and clears column `c` of row `j`.
    fn combine_rows(&mut self, i: usize, j: usize, c: usize) {
        let (a, b) = (self.rows[i][c], self.rows[j][c]);
        let (g, s, t) = egcd(a, b);
        let (u, v) = (-(b / g), a / g);
        for k in 0..self.cols {
            let (x, y) = (self.rows[i][k], self.rows[j][k]);
            self.rows[i][k] = self.reduce(s * x + t * y);
            self.rows[j][k] = self.reduce(u * x + v * y);
        }
    }

    fn combine_cols(&mut self, i: usize, j: usize, r: usize) {
        let (a, b) = (self.rows[r][i], self.rows[r][j]);
        let (g, s, t) = egcd(a, b);
        let (u, v) = (-(b / g), a / g);
        for row in &mut self.rows {
            let (x, y) = (row[i], row[j]);
            row[i] = (s * x + t * y).rem_euclid(self.n);
            row[j] = (u * x + v * y).rem_euclid(self.n);
        }
    }

    /// Diagonal entries after elimination; columns without a pivot are
    /// reported as zeros.
    fn diagonalize(mut self) -> Vec<i128> {
        let mut diag = Vec::new();
        let mut t = 0;
        while t < self.rows.len().min(self.cols) {
            let Some((pr, pc)) = (t..self.rows.len())
                .flat_map(|r| (t..self.cols).map(move |c| (r, c)))
                .find(|&(r, c)| self.rows[r][c] != 0)
            else {
                break;
            };
            self.rows.swap(t, pr);
            for row in &mut self.rows {
                row.swap(t, pc);
            }
            loop {
                for r in t + 1..self.rows.len() {
                    if self.rows[r][t] != 0 {
                        self.combine_rows(t, r, t);
                    }
                }
                for c in t + 1..self.cols {
                    if self.rows[t][c] != 0 {
                        self.combine_cols(t, c, t);
                    }
                }
                if (t + 1..self.rows.len()).all(|r| self.rows[r][t] == 0) {
                    break;
                }
            }
            diag.push(self.rows[t][t]);
            t += 1;
        }
        diag.resize(self.cols, 0);
        diag
    }
}

/// Total and constant solution counts for the affine bondle `p`.
pub fn count_linear(system: &ConstraintSystem, p: &AffineParams) -> (BigUint, BigUint) {
    let n = p.n as i128;
    let k = system.variables;
    let mut rows = Vec::new();
    // Each row encodes `out - cx * x - cy * y = 0`.
    let mut push = |out: usize, x: usize, y: usize, (cx, cy): (u64, u64)| {
        let mut row = vec![0i128; k];
        row[out] += 1;
        row[x] -= cx as i128;
        row[y] -= cy as i128;
        rows.push(row.into_iter().map(|v| v.rem_euclid(n)).collect::<Vec<_>>());
    };
    for eq in &system.equations {
        match *eq {
            Equation::UnderPass { out_arc, in_arc, over_arc, sign } => {
                let c = if sign.is_plus() { p.op_coeffs() } else { p.inv_coeffs() };
                push(out_arc, in_arc, over_arc, c);
            }
            Equation::ParallelBond { first_out, second_out, first_in, second_in } => {
                push(first_out, first_in, second_in, p.r1_coeffs());
                push(second_out, first_in, second_in, p.r2_coeffs());
            }
            Equation::AntiparallelBond { first_out, second_out, first_in, second_in } => {
                let c = p.r3_coeffs().expect("checked by caller");
                push(first_out, first_in, second_in, c);
                push(second_out, second_in, first_in, c);
            }
        }
    }

    // Constant vectors satisfy a row iff the row sum times c vanishes.
    let row_sums: Vec<u64> = rows.iter().map(|r| (r.iter().sum::<i128>().rem_euclid(n)) as u64).collect();
    let trivial = (0..p.n).filter(|&c| row_sums.iter().all(|&s| (s as u128 * c as u128).is_multiple_of(p.n as u128))).count();

    let diag = Matrix { n, rows, cols: k }.diagonalize();
    let total = diag
        .iter()
        .fold(BigUint::from(1u32), |acc, &d| acc * BigUint::from(gcd(d as u64, p.n)));
    (total, BigUint::from(trivial))
}
