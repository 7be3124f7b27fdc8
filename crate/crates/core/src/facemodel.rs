//! Graded face algebras over procategory dimension data.
//!
//! 1-cells carry a source and target 0-cell, a positive degree and the
//! dimension of their endomorphism space. The algebra has a basis symbol
//! `e(a;b)` for every pair of 1-cells of equal degree (up to the cap `L`),
//! plus a degree-0 vacuum symbol `e(i;j)` for every pair of 0-cells. Vacuums
//! act as strict identities on the side where the 0-cells match.
//!
//! The directed-graph generator produces the path model: 1-cells are the
//! paths of length `1..=L`, and the promultiplications record concatenation.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::algebra::{AlgebraPresentation, PresentationBuilder};
use crate::audit::{
    audit_algebra, audit_bialgebra_compat, audit_coalgebra, AuditOptions, AuditReport, Axiom, Collector, Value,
};
use crate::basis::{BasisId, CellId, CellUniverse};
use crate::element::{Element, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneCell {
    pub name: String,
    pub src: usize,
    pub dst: usize,
    pub deg: u32,
    pub dim: u64,
}

/// 0-cells, 1-cells and the two promultiplication tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcategoryDimData {
    zero_cells: Vec<String>,
    cells: Vec<OneCell>,
    p: BTreeMap<(usize, usize, usize), u64>,
    q: BTreeMap<(usize, usize, usize), u64>,
}

type Triples = BTreeMap<(usize, usize, usize), u64>;

impl ProcategoryDimData {
    /// Validates and freezes the data. 1-cells reference 0-cells by index;
    /// tensor entries reference 1-cells by index.
    pub fn new(zero_cells: Vec<String>, cells: Vec<OneCell>, p: Triples, q: Triples) -> Result<Self> {
        let mut seen = HashSet::new();
        for z in &zero_cells {
            if !seen.insert(z.as_str()) {
                return Err(Error::Cell(format!("0-cell `{z}` declared twice")));
            }
        }
        let mut seen_cells = HashSet::new();
        for c in &cells {
            if !seen_cells.insert(c.name.as_str()) {
                return Err(Error::Cell(format!("name `{}` declared twice", c.name)));
            }
            if c.deg == 0 {
                return Err(Error::Cell(format!(
                    "1-cell `{}` has degree 0; degree 0 is reserved for vacuum cells",
                    c.name
                )));
            }
            if c.dim == 0 {
                return Err(Error::Cell(format!("1-cell `{}` has dimension 0", c.name)));
            }
            if c.src >= zero_cells.len() || c.dst >= zero_cells.len() {
                return Err(Error::Cell(format!("1-cell `{}` has an undeclared endpoint", c.name)));
            }
        }
        for (tag, table) in [("p", &p), ("q", &q)] {
            for &(a, b, u) in table.keys() {
                let get = |i: usize| {
                    cells
                        .get(i)
                        .ok_or_else(|| Error::Cell(format!("{tag}: 1-cell index {i} out of range")))
                };
                let (ca, cb, cu) = (get(a)?, get(b)?, get(u)?);
                let label = || format!("{tag}[{},{},{}]", ca.name, cb.name, cu.name);
                if ca.dst != cb.src || cu.src != ca.src || cu.dst != cb.dst {
                    return Err(Error::Cell(format!("{} is not composable", label())));
                }
                if cu.deg != ca.deg + cb.deg {
                    return Err(Error::Cell(format!("{} is not degree-additive", label())));
                }
            }
        }
        let strip = |t: Triples| t.into_iter().filter(|(_, n)| *n > 0).collect();
        Ok(ProcategoryDimData {
            zero_cells,
            cells,
            p: strip(p),
            q: strip(q),
        })
    }

    pub fn zero_cells(&self) -> &[String] {
        &self.zero_cells
    }

    pub fn cells(&self) -> &[OneCell] {
        &self.cells
    }

    pub fn p(&self) -> &Triples {
        &self.p
    }

    pub fn q(&self) -> &Triples {
        &self.q
    }

    pub fn cell_index(&self, name: &str) -> Option<usize> {
        self.cells.iter().position(|c| c.name == name)
    }

    pub fn zero_cell_index(&self, name: &str) -> Option<usize> {
        self.zero_cells.iter().position(|z| z == name)
    }
}

/// Vertices and labelled edges `(name, src, dst)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<(String, usize, usize)>,
}

impl DirectedGraph {
    pub fn new<'a>(
        vertices: impl IntoIterator<Item = &'a str>,
        edges: impl IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(str::to_string).collect();
        let mut names: HashSet<&str> = HashSet::new();
        for v in &vertices {
            if !names.insert(v) {
                return Err(Error::Cell(format!("vertex `{v}` declared twice")));
            }
        }
        let index = |v: &str| {
            vertices
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::Index(format!("undeclared vertex `{v}`")))
        };
        let mut out = Vec::new();
        for (name, s, t) in edges {
            out.push((name.to_string(), index(s)?, index(t)?));
        }
        let mut edge_names = HashSet::new();
        for (name, _, _) in &out {
            if !edge_names.insert(name.as_str()) {
                return Err(Error::Cell(format!("edge `{name}` declared twice")));
            }
        }
        Ok(DirectedGraph { vertices, edges: out })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(String, usize, usize)] {
        &self.edges
    }

    /// Edge-index sequences of every path of length `1..=max_len`, ordered
    /// by length and then lexicographically.
    pub fn paths(&self, max_len: u32) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = Vec::new();
        let mut frontier: Vec<Vec<usize>> = (0..self.edges.len()).map(|e| vec![e]).collect();
        for _ in 0..max_len {
            if frontier.is_empty() {
                break;
            }
            let mut next = Vec::new();
            for path in &frontier {
                let end = self.edges[*path.last().expect("non-empty path")].2;
                for (e, (_, s, _)) in self.edges.iter().enumerate() {
                    if *s == end {
                        let mut longer = path.clone();
                        longer.push(e);
                        next.push(longer);
                    }
                }
            }
            all.append(&mut frontier);
            frontier = next;
        }
        all
    }
}

/// Path model of `g` truncated at length `max_len`: each path of length
/// `1..=max_len` is a 1-cell of dimension 1, and `P = Q` record
/// concatenation `(p, q, pq)` whenever `|pq| <= max_len`.
pub fn graph_to_procategory(g: &DirectedGraph, max_len: u32) -> ProcategoryDimData {
    let paths = g.paths(max_len);
    let single_char = g.edges.iter().all(|(n, _, _)| n.chars().count() == 1);
    let sep = if single_char { "" } else { "." };
    let index: HashMap<&[usize], usize> = paths.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();

    let cells = paths
        .iter()
        .map(|p| OneCell {
            name: p.iter().map(|&e| g.edges[e].0.as_str()).collect::<Vec<_>>().join(sep),
            src: g.edges[p[0]].1,
            dst: g.edges[*p.last().expect("non-empty path")].2,
            deg: p.len() as u32,
            dim: 1,
        })
        .collect::<Vec<_>>();

    let mut table = Triples::new();
    for (i, a) in paths.iter().enumerate() {
        for (j, b) in paths.iter().enumerate() {
            if cells[i].dst != cells[j].src {
                continue;
            }
            let mut ab = a.clone();
            ab.extend_from_slice(b);
            if let Some(&k) = index.get(ab.as_slice()) {
                table.insert((i, j, k), 1);
            }
        }
    }
    ProcategoryDimData::new(g.vertices.clone(), cells, table.clone(), table)
        .expect("path data is composable and degree-additive")
}

/// Cell layout of a face algebra: vacuum cells first, then the 1-cells of
/// degree at most the cap.
struct Layout {
    vacuum: Vec<CellId>,
    cell: Vec<Option<CellId>>,
}

fn layout(pc: &ProcategoryDimData, cap: u32) -> Result<(CellUniverse, Layout)> {
    let mut universe = CellUniverse::new();
    let vacuum = pc.zero_cells.iter().map(|z| universe.intern(z)).collect();
    let mut cell = Vec::with_capacity(pc.cells.len());
    for c in &pc.cells {
        if c.deg > cap {
            cell.push(None);
            continue;
        }
        if universe.get(&c.name).is_some() {
            return Err(Error::Cell(format!("1-cell name `{}` clashes with a 0-cell", c.name)));
        }
        cell.push(Some(universe.intern(&c.name)));
    }
    Ok((universe, Layout { vacuum, cell }))
}

/// Builds the graded face algebra with degree cap `cap`.
pub fn build_face_algebra(pc: &ProcategoryDimData, cap: u32) -> Result<AlgebraPresentation> {
    let (universe, lay) = layout(pc, cap)?;
    let nz = pc.zero_cells.len();
    let kept: Vec<usize> = (0..pc.cells.len()).filter(|&i| lay.cell[i].is_some()).collect();
    let cid = |i: usize| lay.cell[i].expect("kept cell");
    let e = BasisId::new;

    let mut degree = BTreeMap::new();
    let mut builder = PresentationBuilder::new(universe);
    for &vi in &lay.vacuum {
        for &vj in &lay.vacuum {
            builder.add_basis(e(vi, vj));
            degree.insert(e(vi, vj), 0);
        }
    }
    let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for &i in &kept {
        by_degree.entry(pc.cells[i].deg).or_default().push(i);
    }
    for group in by_degree.values() {
        for &a in group {
            for &b in group {
                builder.add_basis(e(cid(a), cid(b)));
                degree.insert(e(cid(a), cid(b)), pc.cells[a].deg);
            }
        }
    }

    // vacuum * vacuum
    for i in 0..nz {
        for j in 0..nz {
            let x = e(lay.vacuum[i], lay.vacuum[j]);
            builder.set_mul(x, x, Element::basis(x));
        }
    }
    // vacuum * cell pair, cell pair * vacuum
    for group in by_degree.values() {
        for &a in group {
            for &c in group {
                let x = e(cid(a), cid(c));
                let (ca, cc) = (&pc.cells[a], &pc.cells[c]);
                let left = e(lay.vacuum[ca.src], lay.vacuum[cc.src]);
                builder.set_mul(left, x, Element::basis(x));
                let right = e(lay.vacuum[ca.dst], lay.vacuum[cc.dst]);
                builder.set_mul(x, right, Element::basis(x));
            }
        }
    }
    // cell pair * cell pair
    let rows = |t: &Triples| {
        let mut rows: BTreeMap<(usize, usize), Vec<(usize, u64)>> = BTreeMap::new();
        for (&(a, b, u), &n) in t {
            if lay.cell[u].is_some() {
                rows.entry((a, b)).or_default().push((u, n));
            }
        }
        rows
    };
    let p_rows = rows(&pc.p);
    let q_rows = rows(&pc.q);
    for (&(a, b), p_row) in &p_rows {
        for (&(c, d), q_row) in &q_rows {
            if pc.cells[a].deg != pc.cells[c].deg || pc.cells[b].deg != pc.cells[d].deg {
                continue;
            }
            let mut prod = Element::zero();
            for &(u, pu) in p_row {
                for &(v, qv) in q_row {
                    let coeff = Scalar::from(pu * qv) / Scalar::from(pc.cells[u].dim * pc.cells[v].dim);
                    prod.add_term(e(cid(u), cid(v)), coeff);
                }
            }
            builder.set_mul(e(cid(a), cid(c)), e(cid(b), cid(d)), prod);
        }
    }

    // unit, comultiplication, counit
    let unit: Element = lay
        .vacuum
        .iter()
        .flat_map(|&i| lay.vacuum.iter().map(move |&j| (e(i, j), Scalar::one())))
        .collect();
    builder.set_unit(unit);
    for &i in &lay.vacuum {
        for &j in &lay.vacuum {
            let delta: TensorElement = lay
                .vacuum
                .iter()
                .map(|&k| ((e(i, k), e(k, j)), Scalar::one()))
                .collect();
            builder.set_comul(e(i, j), delta);
        }
        builder.set_counit(e(i, i), Scalar::one());
    }
    for group in by_degree.values() {
        for &a in group {
            for &b in group {
                let delta: TensorElement = group
                    .iter()
                    .map(|&u| ((e(cid(a), cid(u)), e(cid(u), cid(b))), Scalar::one()))
                    .collect();
                builder.set_comul(e(cid(a), cid(b)), delta);
            }
            builder.set_counit(e(cid(a), cid(a)), Scalar::one());
        }
    }
    builder.set_grading(degree, Some(cap));
    builder.build()
}

/// Row idempotents `sum_j e(i;j)` and column idempotents `sum_i e(i;j)`,
/// listed in 0-cell order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceIdempotents {
    pub row: Vec<(String, Element)>,
    pub col: Vec<(String, Element)>,
}

pub fn face_idempotents(alg: &AlgebraPresentation, pc: &ProcategoryDimData) -> FaceIdempotents {
    let cells = alg.cells();
    let ids: Vec<CellId> = pc
        .zero_cells
        .iter()
        .map(|z| cells.get(z).expect("algebra built from this data"))
        .collect();
    let family = |rows: bool| {
        ids.iter()
            .zip(&pc.zero_cells)
            .map(|(&i, name)| {
                let el: Element = ids
                    .iter()
                    .map(|&j| {
                        let b = if rows { BasisId::new(i, j) } else { BasisId::new(j, i) };
                        (b, Scalar::one())
                    })
                    .collect();
                (name.clone(), el)
            })
            .collect()
    };
    FaceIdempotents {
        row: family(true),
        col: family(false),
    }
}

/// Counit multiplicativity in face form:
/// `eps(xy) = sum_k eps(x e_k) eps(dot-e_k y)`.
fn audit_face_eps(alg: &AlgebraPresentation, idem: &FaceIdempotents, opts: &AuditOptions) -> crate::audit::AxiomResult {
    let mut col = Collector::new(Axiom::EpsMult, opts);
    let eps = |x: &Element| alg.counit_of(x).expect("basis element");
    'outer: for &x in alg.basis() {
        let ex = Element::basis(x);
        let x_cols: Vec<Scalar> = idem
            .col
            .iter()
            .map(|(_, ek)| eps(&alg.multiply(&ex, ek).expect("basis element")))
            .collect();
        for &y in alg.basis() {
            if col.full() {
                break 'outer;
            }
            if !col.admit(alg, &[x, y]) {
                continue;
            }
            let ey = Element::basis(y);
            let lhs = eps(&alg.multiply(&ex, &ey).expect("basis element"));
            let rhs: Scalar = idem
                .row
                .iter()
                .zip(&x_cols)
                .filter(|(_, xc)| !xc.is_zero())
                .map(|((_, rk), xc)| xc * &eps(&alg.multiply(rk, &ey).expect("basis element")))
                .sum();
            col.compare(&[x, y], "", Value::Scalar(lhs), Value::Scalar(rhs));
        }
    }
    col.finish()
}

/// Full audit of a face algebra.
///
/// Runs the algebra, coalgebra and compatibility audits (tuples beyond the
/// degree cap are skipped and counted) with `eps_mult` evaluated in face
/// form, then the vacuum and face-idempotent checks:
///
/// * `vacuum_orth`: `e(i;j) e(k;l) = [i=k][j=l] e(i;j)`;
/// * `face_row_proj` / `face_col_proj`: the row (column) idempotents are
///   orthogonal idempotents;
/// * `face_commute`: every row idempotent commutes with every column one;
/// * `face_sum`: both families sum to the unit.
pub fn audit_face(alg: &AlgebraPresentation, pc: &ProcategoryDimData, opts: &AuditOptions) -> AuditReport {
    let idem = face_idempotents(alg, pc);
    let mut report = audit_algebra(alg, opts);
    report.merge(audit_coalgebra(alg, opts));
    report.merge(audit_bialgebra_compat(alg, opts));
    report.insert(audit_face_eps(alg, &idem, opts));

    let cells = alg.cells();
    let vac: Vec<CellId> = pc.zero_cells.iter().map(|z| cells.get(z).expect("vacuum")).collect();
    let mul = |x: &Element, y: &Element| alg.multiply(x, y).expect("basis element");

    let mut orth = Collector::new(Axiom::VacuumOrth, opts);
    'orth: for &i in &vac {
        for &j in &vac {
            for &k in &vac {
                for &l in &vac {
                    if orth.full() {
                        break 'orth;
                    }
                    let x = BasisId::new(i, j);
                    let y = BasisId::new(k, l);
                    let expected = if i == k && j == l { Element::basis(x) } else { Element::zero() };
                    orth.compare(
                        &[x, y],
                        "",
                        Value::Element(mul(&Element::basis(x), &Element::basis(y))),
                        Value::Element(expected),
                    );
                }
            }
        }
    }

    let projection = |axiom: Axiom, family: &[(String, Element)]| {
        let mut c = Collector::new(axiom, opts);
        for (a, (_, fa)) in family.iter().enumerate() {
            for (b, (_, fb)) in family.iter().enumerate() {
                let expected = if a == b { fa.clone() } else { Element::zero() };
                c.compare(
                    &[BasisId::new(vac[a], vac[b])],
                    "",
                    Value::Element(mul(fa, fb)),
                    Value::Element(expected),
                );
            }
        }
        c.finish()
    };
    let row_proj = projection(Axiom::FaceRowProj, &idem.row);
    let col_proj = projection(Axiom::FaceColProj, &idem.col);

    let mut commute = Collector::new(Axiom::FaceCommute, opts);
    for (a, (_, r)) in idem.row.iter().enumerate() {
        for (b, (_, c)) in idem.col.iter().enumerate() {
            commute.compare(
                &[BasisId::new(vac[a], vac[b])],
                "",
                Value::Element(mul(r, c)),
                Value::Element(mul(c, r)),
            );
        }
    }

    let mut sum = Collector::new(Axiom::FaceSum, opts);
    let total = |family: &[(String, Element)]| {
        family
            .iter()
            .fold(Element::zero(), |acc, (_, x)| acc.plus(x))
    };
    sum.compare(
        &[],
        "row",
        Value::Element(total(&idem.row)),
        Value::Element(alg.unit().clone()),
    );
    sum.compare(
        &[],
        "col",
        Value::Element(total(&idem.col)),
        Value::Element(alg.unit().clone()),
    );

    report.insert(orth.finish());
    report.insert(row_proj);
    report.insert(col_proj);
    report.insert(commute.finish());
    report.insert(sum.finish());
    report
}
