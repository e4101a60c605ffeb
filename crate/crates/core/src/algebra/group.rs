use serde::{Deserialize, Serialize};

use super::{AlgebraError, BondMaps, FiniteQuandle};

/// A finite group given by its multiplication table. The group axioms are
/// verified when the table is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    names: Vec<String>,
}

impl FiniteGroup {
    pub fn from_table(order: usize, mul: Vec<usize>, names: Vec<String>) -> Result<Self, AlgebraError> {
        super::quandle::check_table("mul", order, &mul)?;
        let at = |x: usize, y: usize| mul[x * order + y];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(AlgebraError::NotAGroup("no identity element"))?;
        let mut inv = vec![0; order];
        for (x, slot) in inv.iter_mut().enumerate() {
            *slot = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or(AlgebraError::NotAGroup("an element has no inverse"))?;
        }
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if at(at(x, y), z) != at(x, at(y, z)) {
                        return Err(AlgebraError::NotAGroup("multiplication is not associative"));
                    }
                }
            }
        }
        let names = if names.len() == order { names } else { (0..order).map(|i| i.to_string()).collect() };
        Ok(FiniteGroup { order, mul, inv, identity, names })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn pow(&self, x: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(x) } else { x };
        let mut acc = self.identity;
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }
}

/// Dihedral group of order `2k`, elements `s^j r^i` named `r^i`, `sr^i`.
/// The product uses `r^i s = s r^-i`.
pub fn dihedral_group(k: usize) -> FiniteGroup {
    assert!(k >= 1, "dihedral group needs k >= 1");
    let idx = |j: usize, i: usize| j * k + i % k;
    let mut mul = vec![0; 4 * k * k];
    for j1 in 0..2 {
        for i1 in 0..k {
            for j2 in 0..2 {
                for i2 in 0..k {
                    // (s^j1 r^i1)(s^j2 r^i2) = s^(j1+j2) r^(±i1 + i2)
                    let i1_moved = if j2 == 1 { (k - i1) % k } else { i1 };
                    mul[idx(j1, i1) * 2 * k + idx(j2, i2)] = idx((j1 + j2) % 2, i1_moved + i2);
                }
            }
        }
    }
    let names = (0..2 * k)
        .map(|e| {
            let (j, i) = (e / k, e % k);
            let rot = match i {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{i}"),
            };
            match (j, rot.as_str()) {
                (0, "") => "1".to_string(),
                (0, _) => rot,
                (_, _) => format!("s{rot}"),
            }
        })
        .collect();
    FiniteGroup::from_table(2 * k, mul, names).expect("dihedral table is a group")
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    FiniteGroup::from_table(n, mul, (0..n).map(|i| i.to_string()).collect()).expect("cyclic group")
}

/// Symmetric group on `k` points, permutations in lexicographic order,
/// composed as functions: `(p q)(i) = p(q(i))`.
pub fn symmetric_group(k: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permutations(&mut (0..k).collect(), 0, &mut perms);
    perms.sort();
    let order = perms.len();
    let find = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
    let mut mul = vec![0; order * order];
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate() {
            let pq: Vec<usize> = (0..k).map(|i| p[q[i]]).collect();
            mul[a * order + b] = find(&pq);
        }
    }
    let names = perms.iter().map(|p| format!("{p:?}")).collect();
    FiniteGroup::from_table(order, mul, names).expect("symmetric group")
}

fn permutations(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, out);
        items.swap(start, i);
    }
}

/// `x ▷ y = y⁻¹ x y`, `x ▷⁻¹ y = y x y⁻¹`.
pub fn conjugation_quandle(g: &FiniteGroup) -> FiniteQuandle {
    let n = g.order();
    let op = (0..n * n).map(|i| g.product(&[g.inv(i % n), i / n, i % n])).collect();
    let inv = (0..n * n).map(|i| g.product(&[i % n, i / n, g.inv(i % n)])).collect();
    FiniteQuandle::from_tables(n, op, inv).expect("tables are total")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum R3Variant {
    /// `R3(x, y) = x² y⁻¹`
    #[serde(rename = "x2y-1")]
    SquareLeft,
    /// `R3(x, y) = x⁻¹ y²`
    #[serde(rename = "x-1y2")]
    SquareRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupFamily {
    /// `R1 = x (x y⁻¹)^n`, `R2 = y (x⁻¹ y)^n`
    One,
    /// `R1 = (x y⁻¹)^n x`, `R2 = (x⁻¹ y)^n y`
    Two,
    /// `R1 = x (y x⁻¹)^(n+1)`, `R2 = x (y⁻¹ x)^n`
    Three,
}

impl GroupFamily {
    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(GroupFamily::One),
            2 => Some(GroupFamily::Two),
            3 => Some(GroupFamily::Three),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            GroupFamily::One => 1,
            GroupFamily::Two => 2,
            GroupFamily::Three => 3,
        }
    }
}

/// Conjugation quandle of `g` with one of the three word families for
/// `R1`, `R2` and an `R3` variant. Whether the result is an oriented bondle
/// is left to the checker; on `D_4` it always is.
pub fn group_bondle(
    g: &FiniteGroup,
    family: GroupFamily,
    n_param: u32,
    r3: R3Variant,
) -> (FiniteQuandle, BondMaps) {
    let q = conjugation_quandle(g);
    let n = n_param as i64;
    let p = |x: usize, e: i64| g.pow(x, e);
    let m = |xs: &[usize]| g.product(xs);
    let iv = |x: usize| g.inv(x);
    type Word<'a> = Box<dyn Fn(usize, usize) -> usize + 'a>;
    let (r1, r2): (Word, Word) = match family {
        GroupFamily::One => (
            Box::new(move |x, y| m(&[x, p(m(&[x, iv(y)]), n)])),
            Box::new(move |x, y| m(&[y, p(m(&[iv(x), y]), n)])),
        ),
        GroupFamily::Two => (
            Box::new(move |x, y| m(&[p(m(&[x, iv(y)]), n), x])),
            Box::new(move |x, y| m(&[p(m(&[iv(x), y]), n), y])),
        ),
        GroupFamily::Three => (
            Box::new(move |x, y| m(&[x, p(m(&[y, iv(x)]), n + 1)])),
            Box::new(move |x, y| m(&[x, p(m(&[iv(y), x]), n)])),
        ),
    };
    let maps = BondMaps::from_fns(g.order(), r1, r2)
        .and_then(|b| {
            b.with_r3_fn(|x, y| match r3 {
                R3Variant::SquareLeft => m(&[p(x, 2), iv(y)]),
                R3Variant::SquareRight => m(&[iv(x), p(y, 2)]),
            })
        })
        .expect("word maps are total");
    (q, maps)
}
