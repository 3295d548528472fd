//! Independent brute-force oracles and instance generators shared by the
//! integration tests. Nothing here calls into the solvers under test.

#![allow(dead_code)]

use ordcore::{OrderedGraph, TwoSatInstance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// RNG seeded from `ORDCORE_SEED` when set, otherwise from `default`.
pub fn rng(default: u64) -> ChaCha8Rng {
    let seed = std::env::var("ORDCORE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(default);
    ChaCha8Rng::seed_from_u64(seed)
}

/// The pairs `(u, v)`, `u < v`, in a fixed order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every ordered graph on `n` vertices, indexed by edge-set bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = OrderedGraph> {
    let p = pairs(n);
    (0u64..1 << p.len()).map(move |mask| {
        OrderedGraph::new(
            n,
            p.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> OrderedGraph {
    OrderedGraph::new(n, pairs(n).into_iter().filter(|_| rng.gen_bool(density))).unwrap()
}

/// Visits every non-decreasing sequence of length `len` over `0..values`.
pub fn for_each_monotone(len: usize, values: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn go(
        seq: &mut Vec<usize>,
        len: usize,
        values: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if seq.len() == len {
            return visit(seq);
        }
        let lo = seq.last().copied().unwrap_or(0);
        for t in lo..values {
            seq.push(t);
            if go(seq, len, values, visit) {
                return true;
            }
            seq.pop();
        }
        false
    }
    go(&mut Vec::with_capacity(len), len, values, &mut visit);
}

/// True iff `img` sends every edge of `g` onto an edge of `h`.
pub fn preserves_edges(g: &OrderedGraph, h: &OrderedGraph, img: &[usize]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| img[u] != img[v] && h.has_edge(img[u], img[v]))
}

/// A monotone map `V(g) -> keep` that fixes `keep` and sends each edge onto
/// an edge with both ends in `keep`, found by enumerating all monotone maps.
pub fn brute_retraction(g: &OrderedGraph, keep: &[usize]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut in_keep = vec![false; n];
    for &v in keep {
        in_keep[v] = true;
    }
    let mut found = None;
    for_each_monotone(n, keep.len(), |seq| {
        let img: Vec<usize> = seq.iter().map(|&i| keep[i]).collect();
        let fixes = keep.iter().all(|&v| img[v] == v);
        let ok = fixes
            && g.edges().iter().all(|&(u, v)| {
                img[u] != img[v] && in_keep[img[u]] && in_keep[img[v]] && g.has_edge(img[u], img[v])
            });
        if ok {
            found = Some(img);
        }
        ok
    });
    found
}

/// A monotone endomorphism of `g` other than the identity.
pub fn brute_nonsurjective_endomorphism(g: &OrderedGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut found = None;
    for_each_monotone(n, n, |img| {
        let ok = img.iter().enumerate().any(|(i, &t)| i != t) && preserves_edges(g, g, img);
        if ok {
            found = Some(img.to_vec());
        }
        ok
    });
    found
}

/// Minimum number of independent intervals, by dynamic programming over
/// prefixes: `best[i]` is the optimum for vertices `0..i`.
pub fn chi_dp(g: &OrderedGraph) -> usize {
    let n = g.vertex_count();
    let independent = |lo: usize, hi: usize| !g.edges().iter().any(|&(u, v)| lo <= u && v < hi);
    let mut best = vec![usize::MAX; n + 1];
    best[0] = 0;
    for i in 1..=n {
        for j in 0..i {
            if best[j] != usize::MAX && independent(j, i) {
                best[i] = best[i].min(best[j] + 1);
            }
        }
    }
    best[n]
}

/// Minimum number of independent intervals over all `2^(n-1)` cut sets.
pub fn chi_by_cuts(g: &OrderedGraph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << (n - 1))
        .filter(|&cuts| {
            // A cut before vertex `i + 1` is bit `i`.
            g.edges()
                .iter()
                .all(|&(u, v)| (u..v).any(|i| cuts >> i & 1 == 1))
        })
        .map(|cuts| cuts.count_ones() as usize + 1)
        .min()
        .unwrap()
}

/// Satisfiability by enumerating all assignments.
pub fn truth_table(inst: &TwoSatInstance) -> bool {
    let n = inst.var_count();
    (0u64..1 << n).any(|m| {
        inst.clauses().iter().all(|&(a, b)| {
            (m >> a.var & 1 == 1) == a.positive || (m >> b.var & 1 == 1) == b.positive
        })
    })
}

/// Every subset of `0..n` as a sorted vertex list, by bitmask.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}
