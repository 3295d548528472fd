//! Backtracking search for ordered homomorphisms between graphs.
//!
//! Vertices of the source are assigned in order. Every vertex keeps a bitset
//! domain of admissible targets; assigning `v -> t` intersects the domain of
//! each later neighbour of `v` with the neighbourhood of `t`, and the search
//! backs off as soon as some later vertex has no target `>= t` left.

use std::ops::ControlFlow;

use crate::graph::{MonotoneMap, OrderedGraph};

/// Order in which candidate targets are tried for each vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ValueOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Clone)]
struct Bits {
    words: usize,
}

impl Bits {
    fn new(n: usize) -> Self {
        Bits {
            words: n.div_ceil(64).max(1),
        }
    }

    fn set(&self, row: &mut [u64], i: usize) {
        row[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, row: &[u64], i: usize) -> bool {
        row[i / 64] >> (i % 64) & 1 == 1
    }

    /// Any bit `>= lo` set.
    fn any_from(&self, row: &[u64], lo: usize) -> bool {
        let w = lo / 64;
        if w >= self.words {
            return false;
        }
        if row[w] >> (lo % 64) != 0 {
            return true;
        }
        row[w + 1..].iter().any(|&x| x != 0)
    }
}

/// Configurable search for ordered homomorphisms `source -> target`.
pub struct HomSearch<'a> {
    source: &'a OrderedGraph,
    target: &'a OrderedGraph,
    order: ValueOrder,
    pinned: Vec<Option<usize>>,
    allowed: Option<Vec<bool>>,
    non_identity: bool,
}

impl<'a> HomSearch<'a> {
    pub fn new(source: &'a OrderedGraph, target: &'a OrderedGraph) -> Self {
        HomSearch {
            source,
            target,
            order: ValueOrder::Ascending,
            pinned: vec![None; source.vertex_count()],
            allowed: None,
            non_identity: false,
        }
    }

    pub fn order(mut self, order: ValueOrder) -> Self {
        self.order = order;
        self
    }

    /// Forces `f(v) = t`.
    pub fn pin(mut self, v: usize, t: usize) -> Self {
        self.pinned[v] = Some(t);
        self
    }

    /// Restricts every image to target vertices with `allowed[t]`.
    pub fn allowed_targets(mut self, allowed: Vec<bool>) -> Self {
        self.allowed = Some(allowed);
        self
    }

    /// Rejects the identity map. For endomorphisms this is exactly
    /// non-surjectivity, since the identity is the only monotone bijection.
    pub fn non_identity(mut self) -> Self {
        self.non_identity = true;
        self
    }

    pub fn first(&self) -> Option<MonotoneMap> {
        let mut found = None;
        self.for_each(|img| {
            found = Some(MonotoneMap::from_vec_unchecked(img.to_vec()));
            ControlFlow::Break(())
        });
        found
    }

    /// Visits every homomorphism in search order until `visit` breaks.
    /// Returns true if the visitor broke out.
    pub fn for_each<F>(&self, mut visit: F) -> bool
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.source.vertex_count();
        let nt = self.target.vertex_count();
        let bits = Bits::new(nt);
        let w = bits.words;

        let mut nbr = vec![0u64; nt * w];
        for t in 0..nt {
            for &u in self.target.neighbors(t) {
                bits.set(&mut nbr[t * w..(t + 1) * w], u);
            }
        }

        let mut dom = vec![0u64; n * w];
        for v in 0..n {
            let row = &mut dom[v * w..(v + 1) * w];
            for t in 0..nt {
                let ok_pin = self.pinned[v].is_none_or(|p| p == t);
                let ok_allowed = self.allowed.as_ref().is_none_or(|a| a[t]);
                // A vertex with a neighbour needs a target with one too.
                let ok_degree = self.source.degree(v) == 0 || self.target.degree(t) > 0;
                if ok_pin && ok_allowed && ok_degree {
                    bits.set(row, t);
                }
            }
        }

        let mut ctx = Ctx {
            src: self.source,
            bits,
            nt,
            nbr,
            dom,
            trail: Vec::new(),
            image: vec![0; n],
            order: self.order,
            non_identity: self.non_identity,
        };
        ctx.dfs(0, 0, false, &mut visit).is_break()
    }
}

struct Ctx<'a> {
    src: &'a OrderedGraph,
    bits: Bits,
    nt: usize,
    nbr: Vec<u64>,
    dom: Vec<u64>,
    trail: Vec<u64>,
    image: Vec<usize>,
    order: ValueOrder,
    non_identity: bool,
}

impl Ctx<'_> {
    fn dfs<F>(&mut self, v: usize, lo: usize, deviated: bool, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.src.vertex_count();
        if v == n {
            if self.non_identity && !deviated {
                return ControlFlow::Continue(());
            }
            return visit(&self.image);
        }
        let w = self.bits.words;
        let candidates: Vec<usize> = {
            let row = &self.dom[v * w..(v + 1) * w];
            let it = (lo..self.nt).filter(|&t| self.bits.contains(row, t));
            match self.order {
                ValueOrder::Ascending => it.collect(),
                ValueOrder::Descending => {
                    let mut c: Vec<usize> = it.collect();
                    c.reverse();
                    c
                }
            }
        };
        for t in candidates {
            self.image[v] = t;
            // Save domains of later vertices.
            let mark = self.trail.len();
            self.trail.extend_from_slice(&self.dom[(v + 1) * w..n * w]);
            if self.propagate(v, t) {
                self.dfs(v + 1, t, deviated || t != v, visit)?;
            }
            let saved = self.trail.split_off(mark);
            self.dom[(v + 1) * w..n * w].copy_from_slice(&saved);
        }
        ControlFlow::Continue(())
    }

    fn propagate(&mut self, v: usize, t: usize) -> bool {
        let w = self.bits.words;
        for &u in self.src.neighbors(v) {
            if u <= v {
                continue;
            }
            let row = &mut self.dom[u * w..(u + 1) * w];
            let nb = &self.nbr[t * w..(t + 1) * w];
            for (a, b) in row.iter_mut().zip(nb) {
                *a &= b;
            }
        }
        let n = self.src.vertex_count();
        (v + 1..n).all(|u| self.bits.any_from(&self.dom[u * w..(u + 1) * w], t))
    }
}
