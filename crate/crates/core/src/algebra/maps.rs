use super::quandle::check_table;
use super::AlgebraError;

/// Tables for the bond maps `R1`, `R2` and (optionally) `R3`.
///
/// `R4` is never stored: it is always `R4(x, y) = R3(y, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BondMaps {
    order: usize,
    r1: Vec<usize>,
    r2: Vec<usize>,
    r3: Option<Vec<usize>>,
}

impl BondMaps {
    pub fn from_tables(
        order: usize,
        r1: Vec<usize>,
        r2: Vec<usize>,
        r3: Option<Vec<usize>>,
    ) -> Result<Self, AlgebraError> {
        check_table("R1", order, &r1)?;
        check_table("R2", order, &r2)?;
        if let Some(t) = &r3 {
            check_table("R3", order, t)?;
        }
        Ok(BondMaps { order, r1, r2, r3 })
    }

    pub fn from_fns(
        order: usize,
        r1: impl Fn(usize, usize) -> usize,
        r2: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        let tab = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
            (0..order * order).map(|i| f(i / order, i % order)).collect()
        };
        Self::from_tables(order, tab(&r1), tab(&r2), None)
    }

    pub fn with_r3_fn(self, r3: impl Fn(usize, usize) -> usize) -> Result<Self, AlgebraError> {
        let n = self.order;
        let t = (0..n * n).map(|i| r3(i / n, i % n)).collect();
        self.with_r3_table(t)
    }

    pub fn with_r3_table(mut self, r3: Vec<usize>) -> Result<Self, AlgebraError> {
        check_table("R3", self.order, &r3)?;
        self.r3 = Some(r3);
        Ok(self)
    }

    pub fn without_r3(mut self) -> Self {
        self.r3 = None;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn r1(&self, x: usize, y: usize) -> usize {
        self.r1[x * self.order + y]
    }

    #[inline]
    pub fn r2(&self, x: usize, y: usize) -> usize {
        self.r2[x * self.order + y]
    }

    /// Panics when no `R3` table is present; see [`BondMaps::has_r3`].
    #[inline]
    pub fn r3(&self, x: usize, y: usize) -> usize {
        self.r3.as_ref().expect("R3 table present")[x * self.order + y]
    }

    #[inline]
    pub fn r4(&self, x: usize, y: usize) -> usize {
        self.r3(y, x)
    }

    pub fn has_r3(&self) -> bool {
        self.r3.is_some()
    }

    pub fn r1_table(&self) -> &[usize] {
        &self.r1
    }

    pub fn r2_table(&self) -> &[usize] {
        &self.r2
    }

    pub fn r3_table(&self) -> Option<&[usize]> {
        self.r3.as_deref()
    }

    /// `R(x, x) = x` for every stored map.
    pub fn fixes_diagonal(&self) -> bool {
        (0..self.order).all(|x| {
            self.r1(x, x) == x && self.r2(x, x) == x && (!self.has_r3() || self.r3(x, x) == x)
        })
    }
}
