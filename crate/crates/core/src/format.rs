//! Line-oriented text format for graphs and their embeddings.
//!
//! ```text
//! # comments run to the end of the line
//! graph <n> <m>
//! e <tail> <head>          (m lines, edge ids 0..m-1 in order)
//! embedding                (optional)
//! rot <v> <dart>...        (one line per vertex, counterclockwise;
//!                           +e is the tail end of edge e, -e its head end)
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::planar::{Dart, PlaneGraph};

/// A parsed graph file. `plane` is present when the file has an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Multigraph,
    pub plane: Option<PlaneGraph>,
}

impl GraphFile {
    pub fn render(&self) -> String {
        match &self.plane {
            Some(pg) => render_plane_graph(pg),
            None => render_graph(&self.graph),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("expected {what}, found {tok:?}")))
}

fn parse_dart(tok: &str, line: usize) -> Result<Dart> {
    let (sign, digits) = tok.split_at(tok.chars().next().map_or(0, char::len_utf8));
    let edge: usize = digits
        .parse()
        .map_err(|_| syntax(line, format!("bad dart {tok:?}, expected +<edge> or -<edge>")))?;
    match sign {
        "+" => Ok(Dart::tail(edge)),
        "-" => Ok(Dart::head(edge)),
        _ => Err(syntax(line, format!("bad dart {tok:?}, expected +<edge> or -<edge>"))),
    }
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "empty file, expected `graph <n> <m>`"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("graph") {
        return Err(syntax(ln, "expected `graph <n> <m>`"));
    }
    let n = parse_usize(toks.next(), ln, "vertex count")?;
    let m = parse_usize(toks.next(), ln, "edge count")?;
    if let Some(extra) = toks.next() {
        return Err(syntax(ln, format!("unexpected token {extra:?}")));
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| syntax(ln, format!("expected {m} edge lines, found {}", edges.len())))?;
        let mut toks = l.split_whitespace();
        if toks.next() != Some("e") {
            return Err(syntax(ln, format!("expected `e <tail> <head>`, found {l:?}")));
        }
        let tail = parse_usize(toks.next(), ln, "tail vertex")?;
        let head = parse_usize(toks.next(), ln, "head vertex")?;
        if let Some(extra) = toks.next() {
            return Err(syntax(ln, format!("unexpected token {extra:?}")));
        }
        for v in [tail, head] {
            if v >= n {
                return Err(syntax(ln, format!("vertex {v} out of range for {n} vertices")));
            }
        }
        edges.push((tail, head));
    }
    let graph = Multigraph::new(n, edges)?;

    let Some((ln, l)) = lines.next() else {
        return Ok(GraphFile { graph, plane: None });
    };
    if l != "embedding" {
        return Err(syntax(ln, format!("expected `embedding` or end of file, found {l:?}")));
    }
    let mut rotation: Vec<Option<Vec<Dart>>> = vec![None; n];
    for (ln, l) in lines {
        let mut toks = l.split_whitespace();
        if toks.next() != Some("rot") {
            return Err(syntax(ln, format!("expected `rot <v> <dart>...`, found {l:?}")));
        }
        let v = parse_usize(toks.next(), ln, "vertex")?;
        if v >= n {
            return Err(syntax(ln, format!("vertex {v} out of range for {n} vertices")));
        }
        if rotation[v].is_some() {
            return Err(syntax(ln, format!("second rotation for vertex {v}")));
        }
        rotation[v] = Some(toks.map(|t| parse_dart(t, ln)).collect::<Result<_>>()?);
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::Embedding(format!("no rotation given for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    let plane = PlaneGraph::new(graph.clone(), rotation)?;
    Ok(GraphFile { graph, plane: Some(plane) })
}

pub fn render_graph(g: &Multigraph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.tail, e.head);
    }
    out
}

pub fn render_plane_graph(pg: &PlaneGraph) -> String {
    let mut out = render_graph(pg.graph());
    out.push_str("embedding\n");
    for (v, darts) in pg.rotation().iter().enumerate() {
        let _ = write!(out, "rot {v}");
        for d in darts {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    out
}
