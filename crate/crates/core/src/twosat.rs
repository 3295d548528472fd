//! 2-CNF satisfiability through the implication graph.
//!
//! Each clause `(a ∨ b)` contributes the implications `¬a → b` and `¬b → a`.
//! The formula is satisfiable iff no variable shares a strongly connected
//! component with its negation; a model sets `x` true when the component of
//! `x` comes after that of `¬x` in topological order.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A possibly negated variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit {
            var,
            positive: false,
        }
    }

    pub fn negate(self) -> Self {
        Lit {
            var: self.var,
            positive: !self.positive,
        }
    }

    /// Node index in the implication graph: `2v` for `v`, `2v+1` for `¬v`.
    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    pub fn eval(self, values: &[bool]) -> bool {
        values[self.var] == self.positive
    }

    /// 1-based signed DIMACS literal.
    pub fn dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "¬x{}", self.var)
        }
    }
}

/// A conjunction of clauses with at most two literals. Unit clauses are
/// stored as `(l, l)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatInstance {
    var_count: usize,
    clauses: Vec<(Lit, Lit)>,
}

/// Truth values indexed by variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl TwoSatInstance {
    pub fn new(var_count: usize) -> Self {
        TwoSatInstance {
            var_count,
            clauses: Vec::new(),
        }
    }

    pub fn with_clauses(var_count: usize, clauses: Vec<(Lit, Lit)>) -> Result<Self> {
        let mut inst = Self::new(var_count);
        for (a, b) in clauses {
            inst.add_clause(a, b)?;
        }
        Ok(inst)
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) -> Result<()> {
        for l in [a, b] {
            if l.var >= self.var_count {
                return Err(Error::VariableOutOfRange {
                    var: l.var,
                    var_count: self.var_count,
                });
            }
        }
        self.clauses.push((a, b));
        Ok(())
    }

    pub fn add_unit(&mut self, a: Lit) -> Result<()> {
        self.add_clause(a, a)
    }

    /// Some satisfying assignment, or `None` if the formula is unsatisfiable.
    pub fn solve(&self) -> Option<Assignment> {
        let nodes = 2 * self.var_count;
        let mut succ = vec![Vec::new(); nodes];
        for &(a, b) in &self.clauses {
            succ[a.negate().node()].push(b.node());
            succ[b.negate().node()].push(a.node());
        }
        let comp = tarjan(&succ);
        // Tarjan numbers components in reverse topological order.
        let mut values = Vec::with_capacity(self.var_count);
        for v in 0..self.var_count {
            let (p, n) = (comp[2 * v], comp[2 * v + 1]);
            if p == n {
                return None;
            }
            values.push(p < n);
        }
        Some(Assignment { values })
    }

    /// True iff every clause has a true literal under `a`.
    pub fn check(&self, a: &Assignment) -> Result<bool> {
        if a.values.len() != self.var_count {
            return Err(Error::LengthMismatch {
                expected: self.var_count,
                got: a.values.len(),
            });
        }
        Ok(self
            .clauses
            .iter()
            .all(|&(x, y)| x.eval(&a.values) || y.eval(&a.values)))
    }

    /// DIMACS CNF text. Unit clauses are written with a single literal.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.var_count, self.clauses.len());
        for &(a, b) in &self.clauses {
            if a == b {
                let _ = writeln!(out, "{} 0", a.dimacs());
            } else {
                let _ = writeln!(out, "{} {} 0", a.dimacs(), b.dimacs());
            }
        }
        out
    }
}

/// Iterative Tarjan; returns a component id per node, ids in reverse
/// topological order of the condensation.
fn tarjan(succ: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSET; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if let Some(&u) = succ[v].get(*edge) {
                *edge += 1;
                if index[u] == UNSET {
                    index[u] = next_index;
                    low[u] = next_index;
                    next_index += 1;
                    stack.push(u);
                    on_stack[u] = true;
                    call.push((u, 0));
                } else if on_stack[u] {
                    low[v] = low[v].min(index[u]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                while let Some(u) = stack.pop() {
                    on_stack[u] = false;
                    comp[u] = next_comp;
                    if u == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}
