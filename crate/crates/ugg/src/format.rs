//! Line-oriented text formats.
//!
//! Every format is UTF-8, one record per line, with blank lines and lines
//! starting with `#` ignored. All indices are 0-based.
//!
//! ```text
//! ugg-graph v1          n 5                n 8            m 0 3
//! kind universal        e 0 1              h 2            m 1 1
//! n 7                   e 1 2              c 0 2          m 2 0
//! edges                 e 3 4              c 4 7
//! e 0 1
//! ```
//!
//! Host, forest (also used for caterpillars), chorded cycle and embedding,
//! left to right. A host's `edges` section is optional except for kind
//! `convex`, which has no implicit construction.

use std::fmt::Write as _;

use ugg_core::convex::{build_caterpillar_host, build_twochord_host};
use ugg_core::validate::{validate_embedding, GeometricHost};
use ugg_core::{
    ChordedCycle, ConvexHost, ConvexKind, Embedding, Forest, HostRef, UniversalGraph,
    ValidationReport,
};

use crate::error::{Result, WorkbenchError};

pub const HOST_MAGIC: &str = "ugg-graph v1";

/// Largest universal host that `build` accepts.
pub const UNIVERSAL_CAP: usize = 1 << 22;
/// Largest host whose edges are written out or materialized.
pub const EXPLICIT_CAP: usize = 1 << 16;
/// Largest convex host.
pub const CONVEX_CAP: usize = 1 << 14;

/// Host construction named on the command line and in host files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HostKind {
    Universal,
    Caterpillar,
    TwoChord,
    /// Convex host given only by its edge list.
    Convex,
}

impl HostKind {
    pub fn name(self) -> &'static str {
        match self {
            HostKind::Universal => "universal",
            HostKind::Caterpillar => "caterpillar",
            HostKind::TwoChord => "twochord",
            HostKind::Convex => "convex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "universal" => HostKind::Universal,
            "caterpillar" => HostKind::Caterpillar,
            "twochord" => HostKind::TwoChord,
            "convex" => HostKind::Convex,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone)]
pub enum Host {
    Universal(UniversalGraph),
    Convex(ConvexHost),
}

impl Host {
    /// Build a host of the given kind, enforcing the size caps.
    pub fn build(kind: HostKind, n: usize) -> Result<Host> {
        let cap = match kind {
            HostKind::Universal => UNIVERSAL_CAP,
            HostKind::Caterpillar | HostKind::TwoChord => CONVEX_CAP,
            HostKind::Convex => {
                return Err(WorkbenchError::Failed(
                    "kind convex has no implicit construction".into(),
                ))
            }
        };
        if n > cap {
            return Err(WorkbenchError::SizeCap { n, cap });
        }
        Ok(match kind {
            HostKind::Universal => Host::Universal(UniversalGraph::build(n)?),
            HostKind::Caterpillar => Host::Convex(build_caterpillar_host(n)?),
            _ => Host::Convex(build_twochord_host(n)?),
        })
    }

    pub fn n(&self) -> usize {
        match self {
            Host::Universal(g) => g.n(),
            Host::Convex(c) => c.n(),
        }
    }

    pub fn kind(&self) -> HostKind {
        match self {
            Host::Universal(_) => HostKind::Universal,
            Host::Convex(c) => match c.kind() {
                ConvexKind::Caterpillar => HostKind::Caterpillar,
                ConvexKind::TwoChord => HostKind::TwoChord,
                ConvexKind::Complete | ConvexKind::Custom => HostKind::Convex,
            },
        }
    }

    pub fn host_ref(&self) -> HostRef {
        match self {
            Host::Universal(g) => g.host_ref(),
            Host::Convex(c) => c.descriptor(),
        }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            Host::Universal(g) => g.edges(),
            Host::Convex(c) => c.edges(),
        }
    }

    pub fn validate(&self, n: usize, edges: &[(usize, usize)], phi: &Embedding) -> ValidationReport {
        match self {
            Host::Universal(g) => validate_embedding(g, n, edges, phi),
            Host::Convex(c) => validate_embedding(c, n, edges, phi),
        }
    }
}

/// Graph to embed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Forest(Forest),
    Chorded(ChordedCycle),
}

impl Input {
    pub fn n(&self) -> usize {
        match self {
            Input::Forest(f) => f.n(),
            Input::Chorded(g) => g.n(),
        }
    }

    /// All edges, including the implicit cycle of a chorded cycle.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            Input::Forest(f) => f.edges().to_vec(),
            Input::Chorded(g) => g.edges(),
        }
    }
}

/// Records of a text, as `(line number, tokens)`.
struct Records<'a> {
    lines: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Records<'a> {
    fn new(text: &'a str) -> Self {
        Records {
            lines: text.lines().enumerate().peekable(),
        }
    }

    fn skip_blank(&mut self) {
        while let Some((_, l)) = self.lines.peek() {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') {
                self.lines.next();
            } else {
                break;
            }
        }
    }

    fn peek_tag(&mut self) -> Option<&'a str> {
        self.skip_blank();
        self.lines.peek().and_then(|(_, l)| l.split_whitespace().next())
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        self.skip_blank();
        self.lines
            .next()
            .map(|(i, l)| (i + 1, l.split_whitespace().collect()))
    }

    /// Next record, which must start with `tag` followed by `arity` integers.
    fn expect(&mut self, tag: &str, arity: usize) -> Result<(usize, Vec<usize>)> {
        let Some((line, toks)) = self.next() else {
            return Err(WorkbenchError::malformed(0, format!("expected `{tag}`, found end of input")));
        };
        if toks[0] != tag {
            return Err(WorkbenchError::malformed(line, format!("expected `{tag}`, found `{}`", toks[0])));
        }
        if toks.len() != arity + 1 {
            return Err(WorkbenchError::malformed(
                line,
                format!("`{tag}` takes {arity} value(s), found {}", toks.len() - 1),
            ));
        }
        let vals = toks[1..]
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| WorkbenchError::malformed(line, format!("not a non-negative integer: `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((line, vals))
    }

    fn pairs(&mut self, tag: &str) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        while self.peek_tag() == Some(tag) {
            let (_, v) = self.expect(tag, 2)?;
            out.push((v[0], v[1]));
        }
        Ok(out)
    }

    fn finish(&mut self) -> Result<()> {
        match self.next() {
            None => Ok(()),
            Some((line, toks)) => Err(WorkbenchError::malformed(line, format!("unexpected record `{}`", toks[0]))),
        }
    }
}

fn edge_lines(out: &mut String, tag: &str, edges: &[(usize, usize)]) {
    for &(u, w) in edges {
        let _ = writeln!(out, "{tag} {u} {w}");
    }
}

pub fn write_host(host: &Host, explicit: bool) -> Result<String> {
    let kind = host.kind();
    let mut out = format!("{HOST_MAGIC}\nkind {}\nn {}\n", kind.name(), host.n());
    if explicit || kind == HostKind::Convex {
        if host.n() > EXPLICIT_CAP {
            return Err(WorkbenchError::SizeCap {
                n: host.n(),
                cap: EXPLICIT_CAP,
            });
        }
        out.push_str("edges\n");
        edge_lines(&mut out, "e", &host.edges());
    }
    Ok(out)
}

pub fn parse_host(text: &str) -> Result<Host> {
    let mut rec = Records::new(text);
    match rec.next() {
        Some((_, toks)) if toks.join(" ") == HOST_MAGIC => {}
        Some((line, _)) => return Err(WorkbenchError::malformed(line, format!("expected `{HOST_MAGIC}`"))),
        None => return Err(WorkbenchError::malformed(0, "empty host file")),
    }
    let (line, kind) = match rec.next() {
        Some((line, toks)) if toks.len() == 2 && toks[0] == "kind" => (line, toks[1]),
        Some((line, _)) => return Err(WorkbenchError::malformed(line, "expected `kind <name>`")),
        None => return Err(WorkbenchError::malformed(0, "missing `kind`")),
    };
    let kind = HostKind::parse(kind)
        .ok_or_else(|| WorkbenchError::malformed(line, format!("unknown host kind `{kind}`")))?;
    let (_, n) = rec.expect("n", 1)?;
    let n = n[0];
    let listed = if rec.peek_tag() == Some("edges") {
        rec.next();
        Some(rec.pairs("e")?)
    } else {
        None
    };
    rec.finish()?;

    let host = match (kind, &listed) {
        (HostKind::Convex, None) => return Err(WorkbenchError::malformed(line, "kind convex needs an `edges` section")),
        (HostKind::Convex, Some(edges)) => {
            if n > CONVEX_CAP {
                return Err(WorkbenchError::SizeCap { n, cap: CONVEX_CAP });
            }
            Host::Convex(ConvexHost::from_edges(n, edges)?)
        }
        _ => Host::build(kind, n)?,
    };
    if let (Some(edges), true) = (listed, kind != HostKind::Convex) {
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, w)| (u.min(w), u.max(w))).collect();
        edges.sort_unstable();
        edges.dedup();
        if edges != host.edges() {
            return Err(WorkbenchError::malformed(line, format!("edge list disagrees with kind {}", kind.name())));
        }
    }
    Ok(host)
}

pub fn write_forest(f: &Forest) -> String {
    let mut out = format!("n {}\n", f.n());
    edge_lines(&mut out, "e", f.edges());
    out
}

pub fn write_chorded(g: &ChordedCycle) -> String {
    let mut out = format!("n {}\nh {}\n", g.n(), g.h());
    edge_lines(&mut out, "c", g.chords());
    out
}

pub fn write_input(input: &Input) -> String {
    match input {
        Input::Forest(f) => write_forest(f),
        Input::Chorded(g) => write_chorded(g),
    }
}

fn parse_one_input(rec: &mut Records<'_>) -> Result<Input> {
    let (_, n) = rec.expect("n", 1)?;
    let n = n[0];
    if rec.peek_tag() == Some("h") {
        let (line, h) = rec.expect("h", 1)?;
        let chords = rec.pairs("c")?;
        if chords.len() != h[0] {
            return Err(WorkbenchError::malformed(
                line,
                format!("declared {} chords, found {}", h[0], chords.len()),
            ));
        }
        Ok(Input::Chorded(ChordedCycle::new(n, chords)?))
    } else {
        Ok(Input::Forest(Forest::new(n, rec.pairs("e")?)?))
    }
}

/// A single forest or chorded cycle.
pub fn parse_input(text: &str) -> Result<Input> {
    let mut rec = Records::new(text);
    let input = parse_one_input(&mut rec)?;
    rec.finish()?;
    Ok(input)
}

/// Concatenated inputs, each starting at its `n` record.
pub fn parse_inputs(text: &str) -> Result<Vec<Input>> {
    let mut rec = Records::new(text);
    let mut out = Vec::new();
    while rec.peek_tag().is_some() {
        out.push(parse_one_input(&mut rec)?);
    }
    Ok(out)
}

pub fn write_inputs(inputs: &[Input]) -> String {
    let mut out = String::new();
    for (k, input) in inputs.iter().enumerate() {
        let _ = writeln!(out, "# instance {k}");
        out.push_str(&write_input(input));
    }
    out
}

pub fn write_embedding(phi: &Embedding) -> String {
    let mut out = String::new();
    for (t, g) in phi.map.iter().enumerate() {
        let _ = writeln!(out, "m {t} {g}");
    }
    out
}

/// Embedding records in any order; every input vertex `0..k` must appear once.
pub fn parse_embedding(text: &str, target: HostRef) -> Result<Embedding> {
    let mut rec = Records::new(text);
    let mut slots: Vec<Option<usize>> = Vec::new();
    while rec.peek_tag().is_some() {
        let (line, v) = rec.expect("m", 2)?;
        let (t, g) = (v[0], v[1]);
        if t > EXPLICIT_CAP * 64 {
            return Err(WorkbenchError::SizeCap { n: t, cap: EXPLICIT_CAP * 64 });
        }
        if t >= slots.len() {
            slots.resize(t + 1, None);
        }
        if slots[t].replace(g).is_some() {
            return Err(WorkbenchError::malformed(line, format!("vertex {t} mapped twice")));
        }
    }
    let map = slots
        .iter()
        .enumerate()
        .map(|(t, g)| g.ok_or_else(|| WorkbenchError::malformed(0, format!("vertex {t} has no image"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Embedding::new(target, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn host_round_trip() {
        let host = Host::build(HostKind::Universal, 7).unwrap();
        let text = write_host(&host, true).unwrap();
        assert!(text.starts_with("ugg-graph v1\nkind universal\nn 7\nedges\ne 0 1\n"));
        let back = parse_host(&text).unwrap();
        assert_eq!(back.edges(), host.edges());
        let short = write_host(&host, false).unwrap();
        assert_eq!(short, "ugg-graph v1\nkind universal\nn 7\n");
    }

    #[test]
    fn tampered_edge_list_is_rejected() {
        let text = "ugg-graph v1\nkind universal\nn 3\nedges\ne 0 1\n";
        assert_eq!(parse_host(text).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a path\n\nn 3\ne 0 1\n  # middle\ne 1 2\n";
        let Input::Forest(f) = parse_input(text).unwrap() else { panic!() };
        assert_eq!(f.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn chorded_input() {
        let text = "n 8\nh 2\nc 0 2\nc 4 7\n";
        let Input::Chorded(g) = parse_input(text).unwrap() else { panic!() };
        assert_eq!(write_chorded(&g), text);
        assert!(parse_input("n 8\nh 2\nc 0 2\n").is_err());
    }

    #[test]
    fn embedding_records() {
        let phi = parse_embedding("m 1 5\nm 0 2\n", HostRef::Universal { n: 7 }).unwrap();
        assert_eq!(phi.map, [2, 5]);
        assert_eq!(write_embedding(&phi), "m 0 2\nm 1 5\n");
        assert!(parse_embedding("m 1 5\n", HostRef::Universal { n: 7 }).is_err());
        assert!(parse_embedding("m 0 5\nm 0 1\n", HostRef::Universal { n: 7 }).is_err());
    }

    #[test]
    fn bad_numbers_carry_line_numbers() {
        match parse_input("n 3\ne 0 x\n") {
            Err(WorkbenchError::Malformed { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn size_cap() {
        let err = Host::build(HostKind::Caterpillar, CONVEX_CAP + 1).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
