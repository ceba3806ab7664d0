//! Plain-text file formats.
//!
//! ```text
//! graph <n> <m>            h3 <n> <m>           hedgehog <b> <s> <n_total>
//! u v      (m lines)       u v w  (m lines)     u v   (s lines: body pair of spike b+i)
//!
//! color3 <n> explicit      color3 <n> derived <graph-path>
//! <hex bytes>
//! ```
//!
//! Tokens are whitespace-separated; blank lines and lines starting with `#`
//! are ignored.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::colouring::TripleColouring;
use crate::error::{Error, Result};
use crate::graph::Graph2;
use crate::hedgehog::{Hedgehog, Spike};
use crate::hypergraph::Hypergraph3;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self { inner: text.lines().enumerate() }
    }

    /// Next meaningful line as (1-based line number, trimmed content).
    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        self.inner.by_ref().find_map(|(i, line)| {
            let t = line.trim();
            (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, t))
        })
    }

    fn expect_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next_line().ok_or_else(|| Error::parse(0, format!("unexpected end of input, expected {what}")))
    }

    fn finish(mut self) -> Result<()> {
        match self.next_line() {
            Some((line, _)) => Err(Error::parse(line, "trailing content")),
            None => Ok(()),
        }
    }
}

fn numbers(line: usize, text: &str, count: usize) -> Result<Vec<usize>> {
    let values: Vec<usize> = text
        .split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| Error::parse(line, format!("invalid integer {tok:?}"))))
        .collect::<Result<_>>()?;
    if values.len() != count {
        return Err(Error::parse(line, format!("expected {count} integers, found {}", values.len())));
    }
    Ok(values)
}

fn header<'a>(lines: &mut Lines<'a>, keyword: &str) -> Result<(usize, Vec<&'a str>)> {
    let (line, text) = lines.expect_line(keyword)?;
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(Error::parse(line, format!("expected header starting with {keyword:?}")));
    }
    Ok((line, tokens.collect()))
}

fn header_numbers(lines: &mut Lines<'_>, keyword: &str, count: usize) -> Result<Vec<usize>> {
    let (line, rest) = header(lines, keyword)?;
    numbers(line, &rest.join(" "), count)
}

pub fn parse_graph(text: &str) -> Result<Graph2> {
    let mut lines = Lines::new(text);
    let h = header_numbers(&mut lines, "graph", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut g = Graph2::new(n);
    for _ in 0..m {
        let (line, t) = lines.expect_line("an edge")?;
        let e = numbers(line, t, 2)?;
        if e[0] >= e[1] {
            return Err(Error::parse(line, "edge must satisfy u < v"));
        }
        g.add_edge(e[0], e[1]).map_err(|err| Error::parse(line, err.to_string()))?;
    }
    lines.finish()?;
    Ok(g)
}

pub fn format_graph(g: &Graph2) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph3> {
    let mut lines = Lines::new(text);
    let h = header_numbers(&mut lines, "h3", 2)?;
    let (n, m) = (h[0], h[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, t) = lines.expect_line("an edge")?;
        let e = numbers(line, t, 3)?;
        if !(e[0] < e[1] && e[1] < e[2]) {
            return Err(Error::parse(line, "edge must satisfy u < v < w"));
        }
        if e[2] >= n {
            return Err(Error::parse(line, format!("vertex {} out of range", e[2])));
        }
        edges.push([e[0], e[1], e[2]]);
    }
    lines.finish()?;
    let h = Hypergraph3::new(n, edges)?;
    if h.edge_count() != m {
        return Err(Error::parse(0, "duplicate edges"));
    }
    Ok(h)
}

pub fn format_hypergraph(h: &Hypergraph3) -> String {
    let mut out = format!("h3 {} {}\n", h.n(), h.edge_count());
    for [u, v, w] in h.edges() {
        let _ = writeln!(out, "{u} {v} {w}");
    }
    out
}

pub fn parse_hedgehog(text: &str) -> Result<Hedgehog> {
    let mut lines = Lines::new(text);
    let h = header_numbers(&mut lines, "hedgehog", 3)?;
    let (b, s, n_total) = (h[0], h[1], h[2]);
    let mut spikes = Vec::with_capacity(s);
    for i in 0..s {
        let (line, t) = lines.expect_line("a body pair")?;
        let p = numbers(line, t, 2)?;
        if p[0] >= b || p[1] >= b || p[0] == p[1] {
            return Err(Error::parse(line, format!("invalid body pair ({}, {})", p[0], p[1])));
        }
        spikes.push(Spike::new(b + i, p[0], p[1]));
    }
    lines.finish()?;
    Ok(Hedgehog::new((0..b).collect(), spikes, n_total)?)
}

/// Writes the canonical relabelling of `h` (body `0..b`, spikes from `b`).
pub fn format_hedgehog(h: &Hedgehog) -> String {
    let h = h.canonical();
    let mut out = format!("hedgehog {} {} {}\n", h.body().len(), h.spikes().len(), h.n_total());
    for s in h.spikes() {
        let _ = writeln!(out, "{} {}", s.pair.0, s.pair.1);
    }
    out
}

/// Contents of a colouring file before any referenced graph is loaded.
#[derive(Debug, Clone, PartialEq)]
pub enum ColouringFile {
    Explicit(TripleColouring),
    Derived { n: usize, graph_path: PathBuf },
}

pub fn parse_colouring_file(text: &str) -> Result<ColouringFile> {
    let mut lines = Lines::new(text);
    let (line, rest) = header(&mut lines, "color3")?;
    if rest.len() < 2 {
        return Err(Error::parse(line, "expected `color3 <n> explicit|derived ...`"));
    }
    let n: usize = rest[0].parse().map_err(|_| Error::parse(line, format!("invalid vertex count {:?}", rest[0])))?;
    match rest[1] {
        "explicit" => {
            if rest.len() != 2 {
                return Err(Error::parse(line, "unexpected tokens after `explicit`"));
            }
            let bytes = match lines.next_line() {
                Some((line, hex)) => decode_hex(hex).map_err(|m| Error::parse(line, m))?,
                None => Vec::new(),
            };
            lines.finish()?;
            let c = TripleColouring::from_bytes(n, &bytes).map_err(|e| Error::parse(line, e.to_string()))?;
            Ok(ColouringFile::Explicit(c))
        }
        "derived" => {
            if rest.len() < 3 {
                return Err(Error::parse(line, "derived colouring needs a graph path"));
            }
            lines.finish()?;
            Ok(ColouringFile::Derived { n, graph_path: PathBuf::from(rest[2..].join(" ")) })
        }
        other => Err(Error::parse(line, format!("unknown colouring kind {other:?}"))),
    }
}

/// Explicit serialisation; derived colourings are materialised first.
pub fn format_colouring_explicit(c: &TripleColouring) -> Result<String> {
    let explicit = crate::colouring::materialise(c)?;
    let bytes = explicit.to_bytes().expect("materialised colouring is explicit");
    Ok(format!("color3 {} explicit\n{}\n", c.n(), encode_hex(&bytes)))
}

pub fn format_colouring_derived(n: usize, graph_path: &Path) -> String {
    format!("color3 {n} derived {}\n", graph_path.display())
}

/// Loads a colouring file, resolving a relative graph path against the
/// colouring file's directory.
pub fn read_colouring(path: &Path) -> Result<TripleColouring> {
    let text = read(path)?;
    match parse_colouring_file(&text)? {
        ColouringFile::Explicit(c) => Ok(c),
        ColouringFile::Derived { n, graph_path } => {
            let resolved = if graph_path.is_relative() {
                path.parent().unwrap_or(Path::new("")).join(&graph_path)
            } else {
                graph_path
            };
            let g = parse_graph(&read(&resolved)?)?;
            if g.n() != n {
                return Err(Error::SizeMismatch { expected: n, actual: g.n() });
            }
            Ok(TripleColouring::derived(g))
        }
    }
}

pub fn read_graph(path: &Path) -> Result<Graph2> {
    parse_graph(&read(path)?)
}

pub fn read_hypergraph(path: &Path) -> Result<Hypergraph3> {
    parse_hypergraph(&read(path)?)
}

pub fn read_hedgehog(path: &Path) -> Result<Hedgehog> {
    parse_hedgehog(&read(path)?)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(0, format!("{}: {e}", path.display())))
}

fn encode_hex(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        let _ = write!(s, "{b:02x}");
    }
    s
}

fn decode_hex(text: &str) -> std::result::Result<Vec<u8>, String> {
    if !text.len().is_multiple_of(2) {
        return Err("hex string has odd length".into());
    }
    (0..text.len())
        .step_by(2)
        .map(|i| u8::from_str_radix(&text[i..i + 2], 16).map_err(|_| format!("invalid hex at offset {i}")))
        .collect()
}
