//! Built-in examples and their pinned audit outcomes.
//!
//! The expectation matrix lives in `data/expectations.txt` so that entries can
//! be added without touching the auditor.

use std::collections::BTreeMap;

use crate::audit::{AuditOptions, Status};
use crate::error::{Error, Result};
use crate::facemodel::DirectedGraph;
use crate::hallfusion::{AntipodeMap, DimCategory, HallFusionSpec, PromonoidalDimData};
use crate::suite::{run_graph, run_vertex, SuiteReport};

const EXPECTATIONS: &str = include_str!("../data/expectations.txt");

pub const CATALOG_NAMES: [&str; 9] = [
    "trivial",
    "z2-delta",
    "z3-delta",
    "z2-endo",
    "z3-endo",
    "fibonacci",
    "ising",
    "graph-2v",
    "graph-1loop",
];

/// Degree cap used by the graph entries.
pub const GRAPH_MAX_DEG: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntrySource {
    Vertex(HallFusionSpec),
    Graph { graph: DirectedGraph, max_deg: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub source: EntrySource,
    pub expected: BTreeMap<String, Status>,
}

/// A disagreement between a live audit and the pinned matrix. `None` means
/// the id is missing on that side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub id: String,
    pub expected: Option<Status>,
    pub actual: Option<Status>,
}

impl CatalogEntry {
    pub fn run(&self, opts: &AuditOptions) -> Result<SuiteReport> {
        match &self.source {
            EntrySource::Vertex(spec) => run_vertex(spec, opts),
            EntrySource::Graph { graph, max_deg } => run_graph(graph, *max_deg, opts),
        }
    }

    pub fn mismatches(&self, report: &SuiteReport) -> Vec<Mismatch> {
        let actual = report.statuses();
        let mut ids: Vec<&String> = self.expected.keys().chain(actual.keys()).collect();
        ids.sort();
        ids.dedup();
        ids.into_iter()
            .filter_map(|id| {
                let e = self.expected.get(id).copied();
                let a = actual.get(id).copied();
                (e != a).then(|| Mismatch {
                    id: id.clone(),
                    expected: e,
                    actual: a,
                })
            })
            .collect()
    }
}

fn parse_expectations() -> BTreeMap<String, BTreeMap<String, Status>> {
    let mut out: BTreeMap<String, BTreeMap<String, Status>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for line in EXPECTATIONS.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            current = Some(name.to_string());
            out.entry(name.to_string()).or_default();
            continue;
        }
        let (id, status) = line.split_once(' ').expect("`id status` line");
        let status = Status::parse(status.trim()).expect("valid status");
        let entry = current.as_ref().expect("line inside a block");
        out.get_mut(entry).unwrap().insert(id.to_string(), status);
    }
    out
}

fn object_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Group-delta data from a Cayley table over elements `0..n`: `d = 1`,
/// `P = Q = [u = ab]`, unit the identity element, antipode the inversion.
pub fn gen_group_delta(cayley: &[Vec<usize>]) -> Result<HallFusionSpec> {
    let n = cayley.len();
    if n == 0 {
        return Err(Error::Group("empty table".into()));
    }
    if cayley.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::Group("table is not an n x n table over 0..n".into()));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| cayley[e][a] == a && cayley[a][e] == a))
        .ok_or_else(|| Error::Group("no identity element".into()))?;
    let mut inverse = Vec::with_capacity(n);
    for a in 0..n {
        let inv = (0..n)
            .find(|&b| cayley[a][b] == identity && cayley[b][a] == identity)
            .ok_or_else(|| Error::Group(format!("element {a} has no inverse")))?;
        inverse.push(inv);
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                    return Err(Error::Group(format!("associativity fails at ({a},{b},{c})")));
                }
            }
        }
    }
    let names = object_names(n);
    let cat = DimCategory::new(names.iter().map(|s| (s.as_str(), 1)))?;
    let entries = (0..n).flat_map(|a| (0..n).map(move |b| ((a, b, cayley[a][b]), 1)));
    let p = PromonoidalDimData::from_indices(cat, identity, entries)?;
    HallFusionSpec::new(p.clone(), p, Some(AntipodeMap::from_indices(inverse)))
}

/// Cayley table of the cyclic group of order `n`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// One object `*` with `d = m` and `P = Q = m`.
pub fn gen_endo_group(m: u64) -> Result<HallFusionSpec> {
    if m == 0 {
        return Err(Error::Range("endomorphism dimension must be at least 1".into()));
    }
    let cat = DimCategory::new([("*", m)])?;
    let p = PromonoidalDimData::new(cat, "*", [("*", "*", "*", m)])?;
    HallFusionSpec::new(p.clone(), p, Some(AntipodeMap::identity(1)))
}

/// Fusion-rule data with `d = 1`: `P = Q = N`. The unit row and column must
/// follow the unit pattern `N[I,b,u] = N[a,I,u'] = 1` exactly on the
/// diagonal; anything else is `E_UNIT`. Associativity is not required.
pub fn gen_fusion_ring<'a>(
    objects: &[&str],
    table: impl IntoIterator<Item = (&'a str, &'a str, &'a str, u64)>,
    unit: &str,
    duality: &[(&str, &str)],
) -> Result<HallFusionSpec> {
    let cat = DimCategory::new(objects.iter().map(|&o| (o, 1)))?;
    let p = PromonoidalDimData::new(cat.clone(), unit, table)?;
    let i = p.unit();
    for b in 0..cat.len() {
        for u in 0..cat.len() {
            let want = u64::from(b == u);
            if p.get(i, b, u) != want || p.get(b, i, u) != want {
                return Err(Error::Unit(format!(
                    "unit row/column violated at ({}, {})",
                    cat.name(b),
                    cat.name(u)
                )));
            }
        }
    }
    let sigma = AntipodeMap::new(&cat, duality.iter().copied())?;
    HallFusionSpec::new(p.clone(), p, Some(sigma))
}

pub fn fibonacci() -> HallFusionSpec {
    gen_fusion_ring(
        &["I", "x"],
        [
            ("I", "I", "I", 1),
            ("I", "x", "x", 1),
            ("x", "I", "x", 1),
            ("x", "x", "I", 1),
            ("x", "x", "x", 1),
        ],
        "I",
        &[("I", "I"), ("x", "x")],
    )
    .expect("Fibonacci rules satisfy the unit pattern")
}

pub fn ising() -> HallFusionSpec {
    let mut table = Vec::new();
    for o in ["1", "eps", "sigma"] {
        table.push(("1", o, o, 1));
        if o != "1" {
            table.push((o, "1", o, 1));
        }
    }
    table.extend([
        ("sigma", "sigma", "1", 1),
        ("sigma", "sigma", "eps", 1),
        ("eps", "eps", "1", 1),
        ("sigma", "eps", "sigma", 1),
        ("eps", "sigma", "sigma", 1),
    ]);
    gen_fusion_ring(
        &["1", "eps", "sigma"],
        table,
        "1",
        &[("1", "1"), ("eps", "eps"), ("sigma", "sigma")],
    )
    .expect("Ising rules satisfy the unit pattern")
}

/// Loop `a` at vertex 1 and an edge `b: 1 -> 2`.
pub fn graph_two_vertex() -> DirectedGraph {
    DirectedGraph::new(["1", "2"], [("a", "1", "1"), ("b", "1", "2")]).expect("valid graph")
}

/// One vertex with one loop `x`.
pub fn graph_one_loop() -> DirectedGraph {
    DirectedGraph::new(["v"], [("x", "v", "v")]).expect("valid graph")
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    let source = match name {
        "trivial" => EntrySource::Vertex(gen_endo_group(1)?),
        "z2-delta" => EntrySource::Vertex(gen_group_delta(&cyclic_table(2))?),
        "z3-delta" => EntrySource::Vertex(gen_group_delta(&cyclic_table(3))?),
        "z2-endo" => EntrySource::Vertex(gen_endo_group(2)?),
        "z3-endo" => EntrySource::Vertex(gen_endo_group(3)?),
        "fibonacci" => EntrySource::Vertex(fibonacci()),
        "ising" => EntrySource::Vertex(ising()),
        "graph-2v" => EntrySource::Graph {
            graph: graph_two_vertex(),
            max_deg: GRAPH_MAX_DEG,
        },
        "graph-1loop" => EntrySource::Graph {
            graph: graph_one_loop(),
            max_deg: GRAPH_MAX_DEG,
        },
        other => return Err(Error::Name(other.to_string())),
    };
    let expected = parse_expectations()
        .remove(name)
        .ok_or_else(|| Error::Name(name.to_string()))?;
    Ok(CatalogEntry {
        name: name.to_string(),
        source,
        expected,
    })
}
