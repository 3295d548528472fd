//! Line-oriented text formats.
//!
//! Every format starts with a header line naming the format and its sizes,
//! followed by one record per line. `#` starts a comment; blank lines are
//! ignored. Vertex indices are 0-based.
//!
//! | format | header          | record                      |
//! |--------|-----------------|-----------------------------|
//! | graph  | `og n m`        | `u v`                       |
//! | hyper  | `ohg n m k`     | `k` vertices                |
//! | x13    | `x13 v c`       | three variables             |
//! | mcg    | `mcg k l`       | `part_u idx_u part_v idx_v` |

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gadgets::{
    CliqueGadgetLayout, HyperGadgetLayout, PartitionedGraph, SliceGadget, X13Formula,
};
use crate::graph::OrderedGraph;
use crate::hypergraph::OrderedHypergraph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// A non-empty line: its 1-based number and whitespace-separated fields.
type Record<'a> = (usize, Vec<&'a str>);

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn records(text: &str) -> Vec<Record<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = body.split_whitespace().collect();
            (!fields.is_empty()).then_some((i + 1, fields))
        })
        .collect()
}

fn numbers(line: usize, fields: &[&str], expected: usize) -> Result<Vec<usize>> {
    if fields.len() != expected {
        return Err(parse_err(
            line,
            format!("expected {expected} fields, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(line, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

/// Splits off the header, checking its keyword and returning its numbers.
fn header<'a>(
    recs: &'a [Record<'a>],
    keyword: &str,
    count: usize,
) -> Result<(Vec<usize>, &'a [Record<'a>])> {
    let Some(((line, fields), body)) = recs.split_first() else {
        return Err(parse_err(1, format!("missing `{keyword}` header")));
    };
    if fields[0] != keyword {
        return Err(parse_err(
            *line,
            format!("expected `{keyword}` header, found `{}`", fields[0]),
        ));
    }
    Ok((numbers(*line, &fields[1..], count)?, body))
}

fn check_count(body: &[Record<'_>], expected: usize, text: &str) -> Result<()> {
    if body.len() > expected {
        return Err(parse_err(
            body[expected].0,
            format!("more than the {expected} declared records"),
        ));
    }
    if body.len() < expected {
        let line = text.lines().count() + 1;
        return Err(parse_err(
            line,
            format!("expected {expected} records, found {}", body.len()),
        ));
    }
    Ok(())
}

fn check_vertex(line: usize, v: usize, n: usize) -> Result<()> {
    if v >= n {
        return Err(parse_err(
            line,
            format!("vertex {v} out of range for {n} vertices"),
        ));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<OrderedGraph> {
    let recs = records(text);
    let (h, body) = header(&recs, "og", 2)?;
    let (n, m) = (h[0], h[1]);
    if n == 0 {
        return Err(parse_err(recs[0].0, "graph must have at least one vertex"));
    }
    check_count(body, m, text)?;
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for (line, fields) in body {
        let e = numbers(*line, fields, 2)?;
        let (u, v) = (e[0], e[1]);
        check_vertex(*line, u, n)?;
        check_vertex(*line, v, n)?;
        if u == v {
            return Err(parse_err(*line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(*line, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v));
    }
    OrderedGraph::new(n, edges)
}

pub fn write_graph(g: &OrderedGraph) -> String {
    let mut out = format!("og {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<OrderedHypergraph> {
    let recs = records(text);
    let (h, body) = header(&recs, "ohg", 3)?;
    let (n, m, k) = (h[0], h[1], h[2]);
    if n == 0 {
        return Err(parse_err(
            recs[0].0,
            "hypergraph must have at least one vertex",
        ));
    }
    if k < 2 {
        return Err(parse_err(recs[0].0, "uniformity must be at least 2"));
    }
    check_count(body, m, text)?;
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for (line, fields) in body {
        let mut e = numbers(*line, fields, k)?;
        for &v in &e {
            check_vertex(*line, v, n)?;
        }
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(*line, "hyperedge repeats a vertex"));
        }
        if !seen.insert(e.clone()) {
            return Err(parse_err(*line, "duplicate hyperedge"));
        }
        edges.push(e);
    }
    OrderedHypergraph::new(n, k, edges)
}

pub fn write_hypergraph(g: &OrderedHypergraph) -> String {
    let mut out = format!(
        "ohg {} {} {}\n",
        g.vertex_count(),
        g.edge_count(),
        g.uniformity()
    );
    for e in g.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn parse_x13(text: &str) -> Result<X13Formula> {
    let recs = records(text);
    let (h, body) = header(&recs, "x13", 2)?;
    let (v, c) = (h[0], h[1]);
    if v == 0 {
        return Err(parse_err(
            recs[0].0,
            "formula must have at least one variable",
        ));
    }
    check_count(body, c, text)?;
    let mut clauses = Vec::with_capacity(c);
    for (line, fields) in body {
        let x = numbers(*line, fields, 3)?;
        if let Some(&bad) = x.iter().find(|&&a| a >= v) {
            return Err(parse_err(
                *line,
                format!("variable {bad} out of range for {v} variables"),
            ));
        }
        if x[0] == x[1] || x[0] == x[2] || x[1] == x[2] {
            return Err(parse_err(*line, "clause repeats a variable"));
        }
        clauses.push([x[0], x[1], x[2]]);
    }
    X13Formula::new(v, clauses)
}

pub fn write_x13(phi: &X13Formula) -> String {
    let mut out = format!("x13 {} {}\n", phi.var_count(), phi.clauses().len());
    for [a, b, c] in phi.clauses() {
        let _ = writeln!(out, "{a} {b} {c}");
    }
    out
}

/// The edge list runs to the end of the input; the header gives only the
/// part count and part size.
pub fn parse_partitioned(text: &str) -> Result<PartitionedGraph> {
    let recs = records(text);
    let (h, body) = header(&recs, "mcg", 2)?;
    let (k, l) = (h[0], h[1]);
    if k == 0 || l == 0 {
        return Err(parse_err(
            recs[0].0,
            "part count and part size must be positive",
        ));
    }
    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(body.len());
    for (line, fields) in body {
        let x = numbers(*line, fields, 4)?;
        let (a, b) = ((x[0], x[1]), (x[2], x[3]));
        for (p, j) in [a, b] {
            if p >= k || j >= l {
                return Err(parse_err(
                    *line,
                    format!("vertex ({p}, {j}) outside {k} parts of size {l}"),
                ));
            }
        }
        if a.0 == b.0 {
            return Err(parse_err(*line, format!("edge inside part {}", a.0)));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(parse_err(*line, "duplicate edge"));
        }
        edges.push((a, b));
    }
    PartitionedGraph::new(k, l, edges)
}

pub fn write_partitioned(f: &PartitionedGraph) -> String {
    let mut out = format!("mcg {} {}\n", f.parts(), f.part_size());
    for &((pa, ja), (pb, jb)) in f.edges() {
        let _ = writeln!(out, "{pa} {ja} {pb} {jb}");
    }
    out
}

fn join(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Key-value description of the hypergraph gadget.
pub fn write_hyper_layout(layout: &HyperGadgetLayout) -> String {
    let mut out = format!("kind x13-hyper\nuniformity {}\n", layout.uniformity);
    for (x, vb) in layout.variables.iter().enumerate() {
        let _ = writeln!(
            out,
            "variable {x} first {} padding [{}] second {} third {} fourth {}",
            vb.first,
            join(vb.padding.iter().copied()),
            vb.second,
            vb.third,
            vb.fourth
        );
    }
    for (j, e) in layout.dynamic_edges.iter().enumerate() {
        let _ = writeln!(out, "dynamic {j} {}", join(e.iter().copied()));
    }
    for (j, group) in layout.static_edges.iter().enumerate() {
        for (t, e) in group.iter().enumerate() {
            let _ = writeln!(out, "static {j} {t} {}", join(e.iter().copied()));
        }
    }
    out
}

/// Key-value description of the slice gadget, including its targets.
pub fn write_slice_layout(sg: &SliceGadget) -> String {
    let mut out = format!(
        "kind slice\nclauses {}\ntarget_vertices {}\ntarget_edges {}\n",
        sg.layout.clause_count, sg.targets.vertices, sg.targets.edges
    );
    for gd in &sg.layout.gadgets {
        let _ = writeln!(
            out,
            "gadget clause {} variable {} first {}",
            gd.clause, gd.variable, gd.first
        );
    }
    for (kind, (u, v)) in &sg.layout.edges {
        let _ = writeln!(out, "edge {} {u} {v}", format!("{kind:?}").to_lowercase());
    }
    out
}

/// Key-value description of the clique gadget blocks and edge families.
pub fn write_clique_layout(layout: &CliqueGadgetLayout) -> String {
    let mut out = format!(
        "kind clique\nparts {}\npart_size {}\n",
        layout.c.len(),
        layout.instance.part_size()
    );
    let _ = writeln!(out, "p {}", join(layout.p.iter().copied()));
    for (name, blocks) in [("d", &layout.d), ("c", &layout.c), ("b", &layout.b)] {
        for (i, r) in blocks.iter().enumerate() {
            let _ = writeln!(out, "{name} {i} {} {}", r.start, r.end);
        }
    }
    for (kind, (u, v)) in &layout.edges {
        let _ = writeln!(out, "edge {} {u} {v}", format!("{kind:?}").to_lowercase());
    }
    out
}
