//! Line-oriented spec files.
//!
//! ```text
//! mode vertex            mode graph           mode face
//! [objects]              maxdeg 3             maxdeg 2
//! 0 1                    [vertices]           [vertices]
//! 1 1                    1                    1
//! [p]                    2                    [cells]
//! unit 0                 [edges]              a 1 1 1 1
//! 0 0 0 1                a 1 1                aa 1 1 2 1
//! ...                    b 1 2                [p]
//! [q]                                         a a aa 1
//! unit 0                                      [q]
//! ...                                         a a aa 1
//! [sigma]
//! 0 0
//! 1 1
//! ```
//!
//! `#` starts a comment. In face mode `[vertices]` is optional; 0-cells that
//! only occur as endpoints of 1-cells are added in order of appearance.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::facemodel::{DirectedGraph, OneCell, ProcategoryDimData};
use crate::hallfusion::{AntipodeMap, DimCategory, HallFusionSpec, PromonoidalDimData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecFile {
    Vertex(HallFusionSpec),
    Face { data: ProcategoryDimData, max_deg: u32 },
    Graph { graph: DirectedGraph, max_deg: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Vertex,
    Face,
    Graph,
}

struct Line<'a> {
    no: usize,
    fields: Vec<&'a str>,
}

type Sections<'a> = BTreeMap<&'static str, (usize, Vec<Line<'a>>)>;

fn take<'a>(sections: &mut Sections<'a>, name: &str) -> Option<(usize, Vec<Line<'a>>)> {
    sections.remove(name)
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Nonnegative integer field. Negative integers are `E_RANGE`, anything
/// else that is not an integer is `E_PARSE`.
fn nonneg(line: usize, text: &str) -> Result<u64> {
    match text.parse::<i128>() {
        Ok(v) if v < 0 => Err(Error::Range(format!("line {line}: negative value {v}"))),
        Ok(v) => u64::try_from(v).map_err(|_| Error::Range(format!("line {line}: value {v} too large"))),
        Err(_) => Err(parse_err(line, format!("expected an integer, found `{text}`"))),
    }
}

fn positive(line: usize, text: &str, what: &str) -> Result<u64> {
    let v = nonneg(line, text)?;
    if v == 0 {
        return Err(Error::Range(format!("line {line}: {what} must be at least 1")));
    }
    Ok(v)
}

fn expect_fields(l: &Line, n: usize, shape: &str) -> Result<()> {
    if l.fields.len() != n {
        return Err(parse_err(l.no, format!("expected `{shape}`")));
    }
    Ok(())
}

fn index_err(line: usize, e: Error) -> Error {
    match e {
        Error::Index(msg) => Error::Index(format!("line {line}: {msg}")),
        other => other,
    }
}

pub fn parse_spec_file(text: &str) -> Result<SpecFile> {
    let mut mode: Option<Mode> = None;
    let mut max_deg: Option<(usize, u64)> = None;
    let mut sections: Sections = BTreeMap::new();
    let mut current: Option<&'static str> = None;

    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| parse_err(no, "unterminated section header"))?
                .trim();
            let m = mode.ok_or_else(|| parse_err(no, "`mode` must come first"))?;
            let allowed: &[&'static str] = match m {
                Mode::Vertex => &["objects", "p", "q", "sigma"],
                Mode::Graph => &["vertices", "edges"],
                Mode::Face => &["vertices", "cells", "p", "q"],
            };
            let key = allowed
                .iter()
                .copied()
                .find(|s| *s == name)
                .ok_or_else(|| parse_err(no, format!("unknown section `[{name}]`")))?;
            if sections.contains_key(key) {
                return Err(parse_err(no, format!("section `[{name}]` repeated")));
            }
            sections.insert(key, (no, Vec::new()));
            current = Some(key);
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match current {
            Some(sec) => sections.get_mut(sec).unwrap().1.push(Line { no, fields }),
            None => match fields.as_slice() {
                ["mode", m] if mode.is_none() => {
                    mode = Some(match *m {
                        "vertex" => Mode::Vertex,
                        "face" => Mode::Face,
                        "graph" => Mode::Graph,
                        other => return Err(parse_err(no, format!("unknown mode `{other}`"))),
                    });
                }
                ["maxdeg", l] if mode.is_some() && max_deg.is_none() => {
                    max_deg = Some((no, nonneg(no, l)?));
                }
                _ => return Err(parse_err(no, format!("unexpected line `{content}`"))),
            },
        }
    }

    let mode = mode.ok_or_else(|| parse_err(1, "missing `mode` line"))?;

    match mode {
        Mode::Vertex => {
            if let Some((no, _)) = max_deg {
                return Err(parse_err(no, "`maxdeg` is not used in vertex mode"));
            }
            let (_, objects) = take(&mut sections, "objects").ok_or_else(|| parse_err(1, "missing [objects]"))?;
            let mut objs = Vec::new();
            for l in &objects {
                expect_fields(l, 2, "name dim")?;
                objs.push((l.fields[0].to_string(), positive(l.no, l.fields[1], "dimension")?));
            }
            let cat = DimCategory::new(objs)?;
            let structure = |sections: &mut Sections<'_>, name: &str| {
                let (start, lines) = take(sections, name).ok_or_else(|| parse_err(1, format!("missing [{name}]")))?;
                let (head, rest) = lines
                    .split_first()
                    .ok_or_else(|| parse_err(start, format!("[{name}] needs a `unit NAME` line")))?;
                let unit = match head.fields.as_slice() {
                    ["unit", u] => *u,
                    _ => return Err(parse_err(head.no, "expected `unit NAME`")),
                };
                cat.index(unit).map_err(|e| index_err(head.no, e))?;
                let mut entries = Vec::new();
                for l in rest {
                    expect_fields(l, 4, "a b u count")?;
                    let n = nonneg(l.no, l.fields[3])?;
                    for name in &l.fields[..3] {
                        cat.index(name).map_err(|e| index_err(l.no, e))?;
                    }
                    entries.push((l.fields[0], l.fields[1], l.fields[2], n));
                }
                PromonoidalDimData::new(cat.clone(), unit, entries)
            };
            let p = structure(&mut sections, "p")?;
            let q = structure(&mut sections, "q")?;
            let sigma = match take(&mut sections, "sigma") {
                Some((_, lines)) => {
                    let mut pairs = Vec::new();
                    for l in &lines {
                        expect_fields(l, 2, "a sigma(a)")?;
                        for name in &l.fields {
                            cat.index(name).map_err(|e| index_err(l.no, e))?;
                        }
                        pairs.push((l.fields[0], l.fields[1]));
                    }
                    Some(AntipodeMap::new(&cat, pairs)?)
                }
                None => None,
            };
            Ok(SpecFile::Vertex(HallFusionSpec::new(p, q, sigma)?))
        }
        Mode::Graph => {
            let (no, l) = max_deg.ok_or_else(|| parse_err(1, "missing `maxdeg` line"))?;
            if l == 0 {
                return Err(Error::Range(format!("line {no}: maxdeg must be at least 1 in graph mode")));
            }
            let max_deg = u32::try_from(l).map_err(|_| Error::Range(format!("line {no}: maxdeg too large")))?;
            let vertices = take(&mut sections, "vertices").map(|s| s.1).unwrap_or_default();
            let edges = take(&mut sections, "edges").map(|s| s.1).unwrap_or_default();
            let mut vs = Vec::new();
            for l in &vertices {
                expect_fields(l, 1, "name")?;
                vs.push(l.fields[0]);
            }
            let mut es = Vec::new();
            for l in &edges {
                expect_fields(l, 3, "name src dst")?;
                for v in &l.fields[1..] {
                    if !vs.contains(v) {
                        return Err(Error::Index(format!("line {}: undeclared vertex `{v}`", l.no)));
                    }
                }
                es.push((l.fields[0], l.fields[1], l.fields[2]));
            }
            Ok(SpecFile::Graph {
                graph: DirectedGraph::new(vs, es)?,
                max_deg,
            })
        }
        Mode::Face => {
            let (no, l) = max_deg.ok_or_else(|| parse_err(1, "missing `maxdeg` line"))?;
            let max_deg = u32::try_from(l).map_err(|_| Error::Range(format!("line {no}: maxdeg too large")))?;
            let mut zero: Vec<String> = Vec::new();
            if let Some((_, lines)) = take(&mut sections, "vertices") {
                for l in &lines {
                    expect_fields(l, 1, "name")?;
                    zero.push(l.fields[0].to_string());
                }
            }
            let zero_index = |name: &str, zero: &mut Vec<String>| match zero.iter().position(|z| z == name) {
                Some(i) => i,
                None => {
                    zero.push(name.to_string());
                    zero.len() - 1
                }
            };
            let mut cells = Vec::new();
            if let Some((_, lines)) = take(&mut sections, "cells") {
                for l in &lines {
                    expect_fields(l, 5, "name src dst deg dim")?;
                    let deg = nonneg(l.no, l.fields[3])?;
                    let dim = nonneg(l.no, l.fields[4])?;
                    cells.push(OneCell {
                        name: l.fields[0].to_string(),
                        src: zero_index(l.fields[1], &mut zero),
                        dst: zero_index(l.fields[2], &mut zero),
                        deg: u32::try_from(deg)
                            .map_err(|_| Error::Range(format!("line {}: degree too large", l.no)))?,
                        dim,
                    });
                }
            }
            let table = |sections: &mut Sections<'_>, name: &str| {
                let mut out = BTreeMap::new();
                if let Some((_, lines)) = take(sections, name) {
                    for l in &lines {
                        expect_fields(l, 4, "a b u count")?;
                        let mut idx = [0usize; 3];
                        for (slot, n) in idx.iter_mut().zip(&l.fields[..3]) {
                            *slot = cells.iter().position(|c: &OneCell| c.name == *n).ok_or_else(|| {
                                Error::Index(format!("line {}: undeclared 1-cell `{n}`", l.no))
                            })?;
                        }
                        out.insert((idx[0], idx[1], idx[2]), nonneg(l.no, l.fields[3])?);
                    }
                }
                Ok::<_, Error>(out)
            };
            let p = table(&mut sections, "p")?;
            let q = table(&mut sections, "q")?;
            Ok(SpecFile::Face {
                data: ProcategoryDimData::new(zero, cells, p, q)?,
                max_deg,
            })
        }
    }
}

pub fn render_spec_file(spec: &SpecFile) -> String {
    let mut out = String::new();
    let mut push = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match spec {
        SpecFile::Vertex(hf) => {
            let cat = hf.category();
            push("mode vertex".into());
            push("[objects]".into());
            for (i, name) in cat.names().iter().enumerate() {
                push(format!("{name} {}", cat.dim(i)));
            }
            for (tag, data) in [("p", hf.p()), ("q", hf.q())] {
                push(format!("[{tag}]"));
                push(format!("unit {}", cat.name(data.unit())));
                for (&(a, b, u), n) in data.entries() {
                    push(format!("{} {} {} {n}", cat.name(a), cat.name(b), cat.name(u)));
                }
            }
            if let Some(sigma) = hf.sigma() {
                push("[sigma]".into());
                for (a, &s) in sigma.images().iter().enumerate() {
                    push(format!("{} {}", cat.name(a), cat.name(s)));
                }
            }
        }
        SpecFile::Graph { graph, max_deg } => {
            push("mode graph".into());
            push(format!("maxdeg {max_deg}"));
            push("[vertices]".into());
            for v in graph.vertices() {
                push(v.clone());
            }
            push("[edges]".into());
            for (name, s, t) in graph.edges() {
                push(format!("{name} {} {}", graph.vertices()[*s], graph.vertices()[*t]));
            }
        }
        SpecFile::Face { data, max_deg } => {
            push("mode face".into());
            push(format!("maxdeg {max_deg}"));
            push("[vertices]".into());
            for z in data.zero_cells() {
                push(z.clone());
            }
            push("[cells]".into());
            let zc = data.zero_cells();
            for c in data.cells() {
                push(format!("{} {} {} {} {}", c.name, zc[c.src], zc[c.dst], c.deg, c.dim));
            }
            for (tag, table) in [("p", data.p()), ("q", data.q())] {
                push(format!("[{tag}]"));
                let cells = data.cells();
                for (&(a, b, u), n) in table {
                    push(format!("{} {} {} {n}", cells[a].name, cells[b].name, cells[u].name));
                }
            }
        }
    }
    out
}
