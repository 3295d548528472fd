use crate::error::{Error, Result};

/// A positive ONE-IN-THREE SAT formula: each clause names three distinct
/// variables, exactly one of which must be true.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X13Formula {
    var_count: usize,
    clauses: Vec<[usize; 3]>,
}

impl X13Formula {
    pub fn new(var_count: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        if var_count == 0 {
            return Err(Error::InvalidFormula("no variables".into()));
        }
        for (i, c) in clauses.iter().enumerate() {
            if let Some(&v) = c.iter().find(|&&v| v >= var_count) {
                return Err(Error::InvalidFormula(format!(
                    "clause {i} uses variable {v} of {var_count}"
                )));
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(Error::InvalidFormula(format!(
                    "clause {i} repeats a variable"
                )));
            }
        }
        Ok(X13Formula { var_count, clauses })
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Number of clauses each variable occurs in.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.var_count];
        for c in &self.clauses {
            for &v in c {
                occ[v] += 1;
            }
        }
        occ
    }

    /// True iff the variable-clause incidence graph is connected, so every
    /// variable is reachable from every other through shared clauses.
    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.var_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in &self.clauses {
            for w in c.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (1..self.var_count).all(|v| find(&mut parent, v) == root)
    }

    /// True iff every clause has exactly one true variable.
    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        values.len() == self.var_count
            && self
                .clauses
                .iter()
                .all(|c| c.iter().filter(|&&v| values[v]).count() == 1)
    }
}

/// Tries all `2^v` assignments, reading variable `i` from bit `i` of a
/// counter that starts at zero, and returns the first that satisfies `phi`.
pub fn brute_force_x13(phi: &X13Formula) -> Result<Option<Vec<bool>>> {
    let v = phi.var_count();
    if v > 20 {
        return Err(Error::ParameterOutOfRange(format!(
            "brute force limited to 20 variables, got {v}"
        )));
    }
    let masks: Vec<u32> = phi
        .clauses()
        .iter()
        .map(|c| c.iter().fold(0, |m, &x| m | 1 << x))
        .collect();
    let found = (0..1u32 << v).find(|&a| masks.iter().all(|&m| (a & m).count_ones() == 1));
    Ok(found.map(|a| (0..v).map(|i| a >> i & 1 == 1).collect()))
}
