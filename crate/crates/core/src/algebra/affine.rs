//! Affine structures on `Z_n`:
//!
//! ```text
//! x ▷ y    = a x + (1 - a) y
//! x ▷⁻¹ y  = a⁻¹ x + (1 - a⁻¹) y
//! R1(x, y) = b x + (1 - b) y
//! R2(x, y) = a (1 - b) x + (b + (1 - b)(1 - a)) y
//! R3(x, y) = m x + (1 - m) y
//! ```
//!
//! `R3` satisfies the anti-parallel bond relations exactly when
//! `m (m - 1) = 0` in `Z_n`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::axioms::is_oriented_bondle;
use super::{AlgebraError, BondMaps, FiniteQuandle};

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Inverse of `a` modulo `n`, if `a` is a unit.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % n as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(n as i128) as u64)
}

/// Coefficients of an affine bondle. All values are residues in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineParams {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

impl AffineParams {
    pub fn new(n: u64, a: u64, b: u64, m: Option<u64>) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::ModulusTooSmall(n));
        }
        let (a, b, m) = (a % n, b % n, m.map(|m| m % n));
        if gcd(a, n) != 1 {
            return Err(AlgebraError::NonUnit { a, n });
        }
        if let Some(m) = m {
            if !(m * (m + n - 1)).is_multiple_of(n) {
                return Err(AlgebraError::NotIdempotent { m, n });
            }
        }
        Ok(AffineParams { n, a, b, m })
    }

    pub fn a_inv(&self) -> u64 {
        mod_inverse(self.a, self.n).expect("a is a unit")
    }

    /// `(cx, cy)` with `x ▷ y = cx x + cy y`.
    pub fn op_coeffs(&self) -> (u64, u64) {
        (self.a, self.one_minus(self.a))
    }

    pub fn inv_coeffs(&self) -> (u64, u64) {
        let ai = self.a_inv();
        (ai, self.one_minus(ai))
    }

    pub fn r1_coeffs(&self) -> (u64, u64) {
        (self.b, self.one_minus(self.b))
    }

    pub fn r2_coeffs(&self) -> (u64, u64) {
        let n = self.n;
        let one_b = self.one_minus(self.b);
        let one_a = self.one_minus(self.a);
        ((self.a * one_b) % n, (self.b + one_b * one_a) % n)
    }

    pub fn r3_coeffs(&self) -> Option<(u64, u64)> {
        self.m.map(|m| (m, self.one_minus(m)))
    }

    fn one_minus(&self, v: u64) -> u64 {
        (1 + self.n - v % self.n) % self.n
    }

    pub fn label(&self) -> String {
        match self.m {
            Some(m) => format!("affine(n={}, a={}, b={}, m={})", self.n, self.a, self.b, m),
            None => format!("affine(n={}, a={}, b={})", self.n, self.a, self.b),
        }
    }
}

fn table(n: u64, (cx, cy): (u64, u64)) -> Vec<usize> {
    let n = n as usize;
    (0..n * n)
        .map(|i| (cx as usize * (i / n) + cy as usize * (i % n)) % n)
        .collect()
}

pub fn affine_quandle(n: u64, a: u64) -> Result<FiniteQuandle, AlgebraError> {
    let p = AffineParams::new(n, a, 0, None)?;
    quandle_of(&p)
}

fn quandle_of(p: &AffineParams) -> Result<FiniteQuandle, AlgebraError> {
    FiniteQuandle::from_tables(p.n as usize, table(p.n, p.op_coeffs()), table(p.n, p.inv_coeffs()))
}

pub fn affine_singquandle(n: u64, a: u64, b: u64) -> Result<(FiniteQuandle, BondMaps), AlgebraError> {
    let p = AffineParams::new(n, a, b, None)?;
    from_params(&p)
}

pub fn affine_bondle(n: u64, a: u64, b: u64, m: u64) -> Result<(FiniteQuandle, BondMaps), AlgebraError> {
    let p = AffineParams::new(n, a, b, Some(m))?;
    from_params(&p)
}

/// Tables for validated parameters; `R3` is present iff `m` is.
pub fn from_params(p: &AffineParams) -> Result<(FiniteQuandle, BondMaps), AlgebraError> {
    let q = quandle_of(p)?;
    let maps = BondMaps::from_tables(
        p.n as usize,
        table(p.n, p.r1_coeffs()),
        table(p.n, p.r2_coeffs()),
        p.r3_coeffs().map(|c| table(p.n, c)),
    )?;
    Ok((q, maps))
}

/// Values of `m` with `m (m - 1) = 0 (mod n)`, excluding the trivial 0 and 1.
pub fn nontrivial_idempotents(n: u64) -> Vec<u64> {
    (2..n).filter(|&m| (m * (m - 1)) % n == 0).collect()
}

pub fn units(n: u64) -> Vec<u64> {
    (1..n).filter(|&a| gcd(a, n) == 1).collect()
}

/// Every `(a, b, m)` with `a` a unit, `m` outside `{0, 1}`, whose affine
/// structure passes the full oriented bondle axioms. Sorted by `(a, b, m)`.
pub fn search_affine_bondles(n: u64) -> Vec<AffineParams> {
    assert!(n >= 2, "modulus must be at least 2");
    let ms = nontrivial_idempotents(n);
    let candidates: Vec<(u64, u64, u64)> = units(n)
        .into_iter()
        .flat_map(|a| (0..n).flat_map({ let ms = &ms; move |b| ms.iter().map(move |&m| (a, b, m)) }))
        .collect();
    candidates
        .into_par_iter()
        .filter_map(|(a, b, m)| {
            let p = AffineParams { n, a, b, m: Some(m) };
            let (q, maps) = from_params(&p).ok()?;
            is_oriented_bondle(&q, &maps).then_some(p)
        })
        .collect()
}

/// The distinct `m` values among [`search_affine_bondles`] results.
pub fn search_m_values(n: u64) -> Vec<u64> {
    let mut ms: Vec<u64> = search_affine_bondles(n).into_iter().filter_map(|p| p.m).collect();
    ms.sort_unstable();
    ms.dedup();
    ms
}
