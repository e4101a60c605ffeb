use num_bigint::BigUint;

use super::{ConstraintSystem, Equation};
use crate::algebra::{BondMaps, FiniteQuandle};

const UNSET: usize = usize::MAX;

struct Solver<'a> {
    q: &'a FiniteQuandle,
    maps: &'a BondMaps,
    equations: &'a [Equation],
    /// Equations touching each arc.
    watch: Vec<Vec<usize>>,
    value: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    /// Arcs that occur in some equation, in traversal order.
    branch_order: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn assign(&mut self, arc: usize, v: usize) -> bool {
        if self.value[arc] != UNSET {
            return self.value[arc] == v;
        }
        self.value[arc] = v;
        self.trail.push(arc);
        self.queue.extend_from_slice(&self.watch[arc]);
        true
    }

    fn known(&self, arc: usize) -> Option<usize> {
        let v = self.value[arc];
        (v != UNSET).then_some(v)
    }

    /// Applies one equation: derives forced values or detects a conflict.
    fn fire(&mut self, eq: Equation) -> bool {
        match eq {
            Equation::UnderPass { out_arc, in_arc, over_arc, sign } => {
                let Some(over) = self.known(over_arc) else { return true };
                let positive = sign.is_plus();
                match (self.known(in_arc), self.known(out_arc)) {
                    (Some(i), _) => self.assign(out_arc, self.q.act(i, over, positive)),
                    (None, Some(o)) => self.assign(in_arc, self.q.act(o, over, !positive)),
                    (None, None) => true,
                }
            }
            Equation::ParallelBond { first_out, second_out, first_in, second_in } => {
                let (Some(x), Some(y)) = (self.known(first_in), self.known(second_in)) else { return true };
                self.assign(first_out, self.maps.r1(x, y)) && self.assign(second_out, self.maps.r2(x, y))
            }
            Equation::AntiparallelBond { first_out, second_out, first_in, second_in } => {
                let (Some(x), Some(y)) = (self.known(first_in), self.known(second_in)) else { return true };
                self.assign(first_out, self.maps.r3(x, y)) && self.assign(second_out, self.maps.r4(x, y))
            }
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(e) = self.queue.pop() {
            if !self.fire(self.equations[e]) {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let arc = self.trail.pop().expect("trail above mark");
            self.value[arc] = UNSET;
        }
    }

    fn count(&mut self, from: usize) -> u128 {
        let Some(pos) = (from..self.branch_order.len()).find(|&i| self.value[self.branch_order[i]] == UNSET) else {
            return 1;
        };
        let arc = self.branch_order[pos];
        let mut total = 0u128;
        for v in 0..self.q.order() {
            let mark = self.trail.len();
            if self.assign(arc, v) && self.propagate() {
                total += self.count(pos + 1);
            }
            self.undo(mark);
        }
        total
    }
}

/// Total and constant coloring counts by depth-first assignment in arc order
/// with forward propagation. Arcs in no equation contribute a factor of the
/// carrier order each.
pub fn count_with_tables(system: &ConstraintSystem, q: &FiniteQuandle, maps: &BondMaps) -> (BigUint, BigUint) {
    let n = q.order();
    let mut watch = vec![Vec::new(); system.variables];
    for (i, eq) in system.equations.iter().enumerate() {
        for arc in eq.arcs() {
            if !watch[arc].contains(&i) {
                watch[arc].push(i);
            }
        }
    }
    let branch_order: Vec<usize> = (0..system.variables).filter(|&a| !watch[a].is_empty()).collect();
    let isolated = system.variables - branch_order.len();
    let mut solver = Solver {
        q,
        maps,
        equations: &system.equations,
        watch,
        value: vec![UNSET; system.variables],
        trail: Vec::new(),
        queue: Vec::new(),
        branch_order,
    };
    let constrained = solver.count(0);
    let total = BigUint::from(constrained) * BigUint::from(n).pow(isolated as u32);

    let trivial = (0..n).filter(|&c| constant_is_coloring(system, q, maps, c)).count();
    (total, BigUint::from(trivial))
}

fn constant_is_coloring(system: &ConstraintSystem, q: &FiniteQuandle, maps: &BondMaps, c: usize) -> bool {
    system.equations.iter().all(|eq| match *eq {
        Equation::UnderPass { sign, .. } => q.act(c, c, sign.is_plus()) == c,
        Equation::ParallelBond { .. } => maps.r1(c, c) == c && maps.r2(c, c) == c,
        Equation::AntiparallelBond { .. } => maps.r3(c, c) == c,
    })
}
