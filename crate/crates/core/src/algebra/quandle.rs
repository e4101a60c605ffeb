use super::AlgebraError;

/// A finite quandle on `{0, .., order - 1}` given by explicit tables for the
/// operation and its right inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuandle {
    order: usize,
    op: Vec<usize>,
    inv_op: Vec<usize>,
}

impl FiniteQuandle {
    /// Builds from row-major tables (`op[x * order + y] = x ▷ y`). Only
    /// totality is checked; the axioms are the checkers' business.
    pub fn from_tables(order: usize, op: Vec<usize>, inv_op: Vec<usize>) -> Result<Self, AlgebraError> {
        check_table("op", order, &op)?;
        check_table("inv_op", order, &inv_op)?;
        Ok(FiniteQuandle { order, op, inv_op })
    }

    /// Builds from the operation alone, inverting each right translation.
    pub fn from_op(order: usize, op: Vec<usize>) -> Result<Self, AlgebraError> {
        check_table("op", order, &op)?;
        let mut inv_op = vec![usize::MAX; order * order];
        for y in 0..order {
            for x in 0..order {
                let z = op[x * order + y];
                if inv_op[z * order + y] != usize::MAX {
                    return Err(AlgebraError::NotInvertible { y });
                }
                inv_op[z * order + y] = x;
            }
        }
        Ok(FiniteQuandle { order, op, inv_op })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, AlgebraError> {
        let op = (0..order * order).map(|i| f(i / order, i % order)).collect();
        Self::from_op(order, op)
    }

    /// `x ▷ y = x`.
    pub fn trivial(order: usize) -> Self {
        Self::from_fn(order, |x, _| x).expect("projection is invertible")
    }

    /// `x ▷ y = 2y - x (mod n)`.
    pub fn dihedral_kei(n: usize) -> Self {
        Self::from_fn(n, |x, y| (2 * y + n - x) % n).expect("reflection is invertible")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize, y: usize) -> usize {
        self.inv_op[x * self.order + y]
    }

    /// `x ▷ y` for `sign = +`, `x ▷⁻¹ y` otherwise.
    #[inline]
    pub fn act(&self, x: usize, y: usize, positive: bool) -> usize {
        if positive {
            self.op(x, y)
        } else {
            self.inv(x, y)
        }
    }

    pub fn op_table(&self) -> &[usize] {
        &self.op
    }

    pub fn inv_table(&self) -> &[usize] {
        &self.inv_op
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.op(x, y) == x))
    }
}

pub(crate) fn check_table(name: &'static str, order: usize, table: &[usize]) -> Result<(), AlgebraError> {
    if order == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    if table.len() != order * order {
        return Err(AlgebraError::TableShape { name, expected: order * order, found: table.len() });
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= order) {
        return Err(AlgebraError::OutOfRange { name, value: bad, order });
    }
    Ok(())
}
