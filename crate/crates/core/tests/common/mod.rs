//! Independent brute-force oracle.
//!
//! Expands the structure maps straight from the raw input data (dimension
//! tensors, or graph edges) with `BigRational` arithmetic and evaluates every
//! law by direct substitution. Nothing here calls into the engine except to
//! read raw inputs and to convert between representations.
#![allow(dead_code)]

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use hfx_core::{
    tensor, AlgebraPresentation, AntipodeMap, AuditReport, Axiom, CellId, DimCategory, Element, FaceIdempotents,
    HallFusionSpec, LinearEndo, PromonoidalDimData, Scalar, Status, Tensor3Element, Value, Witness,
};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Q = BigRational;
pub type V1 = BTreeMap<usize, Q>;
pub type V2 = BTreeMap<(usize, usize), Q>;
pub type V3 = BTreeMap<(usize, usize, usize), Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn to_q(s: &Scalar) -> Q {
    s.to_string().parse().expect("scalars print as n or n/d")
}

fn add<K: Ord>(m: &mut BTreeMap<K, Q>, k: K, c: Q) {
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

fn e1(i: usize) -> V1 {
    BTreeMap::from([(i, Q::one())])
}

fn st(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

/// Structure maps of a finite-dimensional presentation, basis `0..n`.
#[derive(Debug, Clone)]
pub struct Dense {
    pub names: Vec<String>,
    pub mul: Vec<Vec<V1>>,
    pub comul: Vec<V2>,
    pub counit: Vec<Q>,
    pub unit: V1,
    pub deg: Vec<u32>,
    pub cap: Option<u32>,
    /// Basis permutation implementing the antipode.
    pub antipode: Option<Vec<usize>>,
    /// `vacuum[i][j]` is the basis index of `e(i;j)` for 0-cells `i, j`.
    pub vacuum: Option<Vec<Vec<usize>>>,
}

impl Dense {
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn index(&self, name: &str) -> usize {
        self.names.iter().position(|x| x == name).unwrap_or_else(|| panic!("no basis element {name}"))
    }

    pub fn mul1(&self, x: &V1, y: &V1) -> V1 {
        let mut out = V1::new();
        for (&i, a) in x {
            for (&j, b) in y {
                for (&k, c) in &self.mul[i][j] {
                    add(&mut out, k, a * b * c);
                }
            }
        }
        out
    }

    pub fn mul2(&self, x: &V2, y: &V2) -> V2 {
        let mut out = V2::new();
        for (&(i, j), a) in x {
            for (&(k, l), b) in y {
                for (&u, c) in &self.mul[i][k] {
                    for (&v, d) in &self.mul[j][l] {
                        add(&mut out, (u, v), a * b * c * d);
                    }
                }
            }
        }
        out
    }

    pub fn mul3(&self, x: &V3, y: &V3) -> V3 {
        let mut out = V3::new();
        for (&(i, j, k), a) in x {
            for (&(l, m, n), b) in y {
                for (&u, c) in &self.mul[i][l] {
                    for (&v, d) in &self.mul[j][m] {
                        for (&w, e) in &self.mul[k][n] {
                            add(&mut out, (u, v, w), a * b * c * d * e);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn comul1(&self, x: &V1) -> V2 {
        let mut out = V2::new();
        for (&i, a) in x {
            for (&k, c) in &self.comul[i] {
                add(&mut out, k, a * c);
            }
        }
        out
    }

    /// `(Δ ⊗ 1) Δ`.
    pub fn comul3(&self, x: &V1) -> V3 {
        let mut out = V3::new();
        for (&(l, r), a) in &self.comul1(x) {
            for (&(ll, lr), b) in &self.comul[l] {
                add(&mut out, (ll, lr, r), a * b);
            }
        }
        out
    }

    pub fn counit1(&self, x: &V1) -> Q {
        x.iter().map(|(&i, a)| a * &self.counit[i]).fold(Q::zero(), |s, t| s + t)
    }

    pub fn s1(&self, x: &V1) -> V1 {
        let s = self.antipode.as_ref().expect("antipode");
        x.iter().map(|(&i, a)| (s[i], a.clone())).collect()
    }

    fn within(&self, xs: &[usize]) -> bool {
        match self.cap {
            Some(cap) => xs.iter().map(|&x| self.deg[x]).sum::<u32>() <= cap,
            None => true,
        }
    }

    pub fn assoc(&self) -> bool {
        let n = self.n();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if !self.within(&[x, y, z]) {
                        continue;
                    }
                    let l = self.mul1(&self.mul[x][y], &e1(z));
                    let r = self.mul1(&e1(x), &self.mul[y][z]);
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn unit_law(&self) -> bool {
        (0..self.n()).all(|x| self.mul1(&self.unit, &e1(x)) == e1(x) && self.mul1(&e1(x), &self.unit) == e1(x))
    }

    pub fn coassoc(&self) -> bool {
        (0..self.n()).all(|x| {
            let d = &self.comul[x];
            let mut left = V3::new();
            let mut right = V3::new();
            for (&(l, r), a) in d {
                for (&(ll, lr), b) in &self.comul[l] {
                    add(&mut left, (ll, lr, r), a * b);
                }
                for (&(rl, rr), b) in &self.comul[r] {
                    add(&mut right, (l, rl, rr), a * b);
                }
            }
            left == right
        })
    }

    pub fn counit_law(&self) -> bool {
        (0..self.n()).all(|x| {
            let mut left = V1::new();
            let mut right = V1::new();
            for (&(l, r), a) in &self.comul[x] {
                add(&mut left, r, a * &self.counit[l]);
                add(&mut right, l, a * &self.counit[r]);
            }
            left == e1(x) && right == e1(x)
        })
    }

    pub fn delta_mult_at(&self, x: usize, y: usize) -> (V2, V2) {
        (self.comul1(&self.mul[x][y]), self.mul2(&self.comul[x], &self.comul[y]))
    }

    pub fn delta_mult(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| {
            (0..n).all(|y| {
                if !self.within(&[x, y]) {
                    return true;
                }
                let (l, r) = self.delta_mult_at(x, y);
                l == r
            })
        })
    }

    pub fn eps_mult_strict(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| {
            (0..n).all(|y| !self.within(&[x, y]) || self.counit1(&self.mul[x][y]) == &self.counit[x] * &self.counit[y])
        })
    }

    /// `ε(xy) = Σ_k ε(x e_k) ε(ė_k y)` with column idempotents `e_k` and row
    /// idempotents `ė_k`.
    pub fn eps_mult_face(&self) -> bool {
        let vac = self.vacuum.as_ref().expect("face algebra");
        let m = vac.len();
        let col = |k: usize| -> V1 { (0..m).map(|i| (vac[i][k], Q::one())).collect() };
        let row = |k: usize| -> V1 { (0..m).map(|j| (vac[k][j], Q::one())).collect() };
        let n = self.n();
        (0..n).all(|x| {
            (0..n).all(|y| {
                if !self.within(&[x, y]) {
                    return true;
                }
                let lhs = self.counit1(&self.mul[x][y]);
                let rhs = (0..m)
                    .map(|k| self.counit1(&self.mul1(&e1(x), &col(k))) * self.counit1(&self.mul1(&row(k), &e1(y))))
                    .fold(Q::zero(), |s, t| s + t);
                lhs == rhs
            })
        })
    }

    pub fn delta_unit(&self) -> bool {
        let mut rhs = V2::new();
        for (&i, a) in &self.unit {
            for (&j, b) in &self.unit {
                add(&mut rhs, (i, j), a * b);
            }
        }
        self.comul1(&self.unit) == rhs
    }

    pub fn weak_unit(&self) -> bool {
        let d1 = self.comul1(&self.unit);
        let lhs = self.comul3(&self.unit);
        let mut d1_1 = V3::new();
        let mut one_d1 = V3::new();
        for (&(i, j), a) in &d1 {
            for (&k, b) in &self.unit {
                add(&mut d1_1, (i, j, k), a * b);
                add(&mut one_d1, (k, i, j), a * b);
            }
        }
        lhs == self.mul3(&d1_1, &one_d1) && lhs == self.mul3(&one_d1, &d1_1)
    }

    pub fn antihom(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| {
            (0..n).all(|y| {
                !self.within(&[x, y]) || self.s1(&self.mul[x][y]) == self.mul1(&self.s1(&e1(y)), &self.s1(&e1(x)))
            })
        })
    }

    /// `μ(μ ⊗ 1)(1 ⊗ S ⊗ 1)(Δ ⊗ 1)Δ(x)`.
    pub fn von_neumann_image(&self, x: usize) -> V1 {
        let s = self.antipode.as_ref().expect("antipode");
        let mut out = V1::new();
        for (&(i, j, k), a) in &self.comul3(&e1(x)) {
            for (&u, b) in &self.mul[i][s[j]] {
                for (&w, c) in &self.mul[u][k] {
                    add(&mut out, w, a * b * c);
                }
            }
        }
        out
    }

    pub fn statuses(&self) -> BTreeMap<String, &'static str> {
        let mut out = BTreeMap::new();
        let assoc = self.assoc();
        let unit = self.unit_law();
        let coassoc = self.coassoc();
        let counit = self.counit_law();
        out.insert("assoc".into(), st(assoc));
        out.insert("unit".into(), st(unit));
        out.insert("coassoc".into(), st(coassoc));
        out.insert("counit".into(), st(counit));
        out.insert("delta_mult".into(), st(self.delta_mult()));
        let eps = if self.vacuum.is_some() {
            self.eps_mult_face()
        } else {
            self.eps_mult_strict()
        };
        out.insert("eps_mult".into(), st(eps));
        out.insert("delta_unit".into(), st(self.delta_unit()));
        out.insert("weak_unit".into(), st(self.weak_unit()));
        if let Some(s) = &self.antipode {
            out.insert("antipode_antihom".into(), st(self.antihom()));
            out.insert("antipode_unit".into(), st(self.s1(&self.unit) == self.unit));
            out.insert("antipode_involution".into(), st((0..self.n()).all(|x| s[s[x]] == x)));
            let vn = if assoc && unit && coassoc && counit {
                st((0..self.n()).all(|x| self.von_neumann_image(x) == e1(x)))
            } else {
                "skip"
            };
            out.insert("von_neumann".into(), vn);
        }
        if let Some(vac) = &self.vacuum {
            let m = vac.len();
            let orth = (0..m).all(|i| {
                (0..m).all(|j| {
                    (0..m).all(|k| {
                        (0..m).all(|l| {
                            let want = if i == k && j == l { e1(vac[i][j]) } else { V1::new() };
                            self.mul[vac[i][j]][vac[k][l]] == want
                        })
                    })
                })
            });
            out.insert("vacuum_orth".into(), st(orth));
            let row: Vec<V1> = (0..m).map(|k| (0..m).map(|j| (vac[k][j], Q::one())).collect()).collect();
            let col: Vec<V1> = (0..m).map(|k| (0..m).map(|i| (vac[i][k], Q::one())).collect()).collect();
            let proj = |f: &[V1]| {
                (0..m).all(|a| {
                    (0..m).all(|b| self.mul1(&f[a], &f[b]) == if a == b { f[a].clone() } else { V1::new() })
                })
            };
            out.insert("face_row_proj".into(), st(proj(&row)));
            out.insert("face_col_proj".into(), st(proj(&col)));
            let commute = row.iter().all(|r| col.iter().all(|c| self.mul1(r, c) == self.mul1(c, r)));
            out.insert("face_commute".into(), st(commute));
            let total = |f: &[V1]| {
                let mut t = V1::new();
                for x in f {
                    for (&i, a) in x {
                        add(&mut t, i, a.clone());
                    }
                }
                t
            };
            out.insert("face_sum".into(), st(total(&row) == self.unit && total(&col) == self.unit));
        }
        out
    }
}

/// Raw vertex-mode data: dims and flattened `P[a,b,u]`, `Q[a,b,u]`.
#[derive(Debug, Clone)]
pub struct VertexData {
    pub names: Vec<String>,
    pub dims: Vec<u64>,
    pub p: Vec<u64>,
    pub q: Vec<u64>,
    pub unit_p: usize,
    pub unit_q: usize,
    pub sigma: Option<Vec<usize>>,
}

impl VertexData {
    pub fn n(&self) -> usize {
        self.dims.len()
    }

    fn at(&self, a: usize, b: usize, u: usize) -> usize {
        let n = self.n();
        (a * n + b) * n + u
    }

    pub fn pv(&self, a: usize, b: usize, u: usize) -> u64 {
        self.p[self.at(a, b, u)]
    }

    pub fn qv(&self, a: usize, b: usize, u: usize) -> u64 {
        self.q[self.at(a, b, u)]
    }

    pub fn from_spec(spec: &HallFusionSpec) -> Self {
        let cat = spec.category();
        let n = cat.len();
        let flat = |d: &PromonoidalDimData| {
            let mut v = vec![0; n * n * n];
            for a in 0..n {
                for b in 0..n {
                    for u in 0..n {
                        v[(a * n + b) * n + u] = d.get(a, b, u);
                    }
                }
            }
            v
        };
        VertexData {
            names: cat.names().to_vec(),
            dims: (0..n).map(|i| cat.dim(i)).collect(),
            p: flat(spec.p()),
            q: flat(spec.q()),
            unit_p: spec.p().unit(),
            unit_q: spec.q().unit(),
            sigma: spec.sigma().map(|s| s.images().to_vec()),
        }
    }

    pub fn to_spec(&self) -> HallFusionSpec {
        let n = self.n();
        let cat = DimCategory::new(self.names.iter().cloned().zip(self.dims.iter().copied())).unwrap();
        let entries = |t: &[u64]| {
            let mut v = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for u in 0..n {
                        let x = t[(a * n + b) * n + u];
                        if x > 0 {
                            v.push(((a, b, u), x));
                        }
                    }
                }
            }
            v
        };
        let p = PromonoidalDimData::from_indices(cat.clone(), self.unit_p, entries(&self.p)).unwrap();
        let q = PromonoidalDimData::from_indices(cat, self.unit_q, entries(&self.q)).unwrap();
        HallFusionSpec::new(p, q, self.sigma.clone().map(AntipodeMap::from_indices)).unwrap()
    }

    fn d(&self, i: usize) -> Q {
        q(self.dims[i] as i64)
    }

    /// `Σ_u T[a,b,u] T[u,c,e] / d(u)` for `T = P` (`use_p`) or `Q`.
    pub fn chain3(&self, use_p: bool, a: usize, b: usize, c: usize, e: usize) -> Q {
        let t = |x, y, z| if use_p { self.pv(x, y, z) } else { self.qv(x, y, z) };
        (0..self.n())
            .map(|u| q((t(a, b, u) * t(u, c, e)) as i64) / self.d(u))
            .fold(Q::zero(), |s, x| s + x)
    }

    /// `Σ_w T[b,c,w] T[a,w,e] / d(w)`.
    pub fn chain3_right(&self, use_p: bool, a: usize, b: usize, c: usize, e: usize) -> Q {
        let t = |x, y, z| if use_p { self.pv(x, y, z) } else { self.qv(x, y, z) };
        (0..self.n())
            .map(|w| q((t(b, c, w) * t(a, w, e)) as i64) / self.d(w))
            .fold(Q::zero(), |s, x| s + x)
    }

    pub fn t(&self, u: usize, v: usize) -> Q {
        let n = self.n();
        let mut s = 0u64;
        for a in 0..n {
            for b in 0..n {
                s += self.pv(a, b, u) * self.qv(a, b, v);
            }
        }
        q(s as i64)
    }

    pub fn c4(&self, a: usize, b: usize, c: usize, d: usize) -> Q {
        (0..self.n())
            .map(|u| q((self.pv(a, b, u) * self.qv(c, d, u)) as i64) / (self.d(u) * self.d(u)))
            .fold(Q::zero(), |s, x| s + x)
    }

    /// `Σ_v p₃(a,σv,v;x)`.
    pub fn c6p(&self, a: usize, x: usize) -> Q {
        let s = self.sigma.as_ref().expect("sigma");
        (0..self.n()).map(|v| self.chain3(true, a, s[v], v, x)).fold(Q::zero(), |t, y| t + y)
    }

    /// `Σ_u q₃(u,σu,b;y)`.
    pub fn c6q(&self, b: usize, y: usize) -> Q {
        let s = self.sigma.as_ref().expect("sigma");
        (0..self.n()).map(|u| self.chain3(false, u, s[u], b, y)).fold(Q::zero(), |t, x| t + x)
    }

    pub fn conditions(&self) -> BTreeMap<String, &'static str> {
        let n = self.n();
        let r = 0..n;
        let mut out = BTreeMap::new();
        let c1 = |use_p: bool, unit: usize| {
            let t = |x, y, z| if use_p { self.pv(x, y, z) } else { self.qv(x, y, z) };
            (0..n).all(|x| {
                (0..n).all(|u| {
                    let want = if x == u { self.dims[x] } else { 0 };
                    t(unit, x, u) == want && t(x, unit, u) == want
                })
            })
        };
        out.insert("c1_unit".into(), st(c1(true, self.unit_p) && c1(false, self.unit_q)));
        let c2 = |use_p: bool| {
            (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| {
                        (0..n).all(|e| self.chain3(use_p, a, b, c, e) == self.chain3_right(use_p, a, b, c, e))
                    })
                })
            })
        };
        out.insert("c2_assoc".into(), st(c2(true) && c2(false)));
        let c3 = r.clone().all(|u| {
            r.clone().all(|v| self.t(u, v) == if u == v { self.d(u) * self.d(v) } else { Q::zero() })
        });
        out.insert("c3_compat".into(), st(c3));
        let c4 = (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| (0..n).all(|d| self.c4(a, b, c, d) == if a == c && b == d { q(1) } else { q(0) }))
            })
        });
        out.insert("c4_counit".into(), st(c4));
        if let Some(s) = &self.sigma {
            let c5 = (0..n).all(|a| (0..n).all(|b| (0..n).all(|u| self.pv(a, b, u) == self.qv(s[b], s[a], s[u]))));
            out.insert("c5_antipode".into(), st(c5));
            let c6 = (0..n).all(|a| {
                (0..n).all(|x| {
                    let want = if a == x { self.d(a) } else { Q::zero() };
                    self.c6p(a, x) == want && self.c6q(a, x) == want
                })
            });
            out.insert("c6_von_neumann".into(), st(c6));
        }
        out
    }

    /// `B(p,q)` expanded from its defining formulas.
    pub fn dense(&self) -> Dense {
        let n = self.n();
        let idx = |a: usize, b: usize| a * n + b;
        let names = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| format!("e({};{})", self.names[a], self.names[b]))
            .collect();
        let mut mul = vec![vec![V1::new(); n * n]; n * n];
        for a in 0..n {
            for c in 0..n {
                for b in 0..n {
                    for d in 0..n {
                        let m = &mut mul[idx(a, c)][idx(b, d)];
                        for u in 0..n {
                            for v in 0..n {
                                let num = self.pv(a, b, u) * self.qv(c, d, v);
                                if num > 0 {
                                    add(m, idx(u, v), q(num as i64) / (self.d(u) * self.d(v)));
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut comul = vec![V2::new(); n * n];
        let mut counit = vec![Q::zero(); n * n];
        for a in 0..n {
            for b in 0..n {
                for u in 0..n {
                    add(&mut comul[idx(a, b)], (idx(a, u), idx(u, b)), Q::one());
                }
            }
            counit[idx(a, a)] = Q::one();
        }
        Dense {
            names,
            mul,
            comul,
            counit,
            unit: e1(idx(self.unit_p, self.unit_q)),
            deg: vec![0; n * n],
            cap: None,
            antipode: self
                .sigma
                .as_ref()
                .map(|s| (0..n * n).map(|x| idx(s[x % n], s[x / n])).collect()),
            vacuum: None,
        }
    }

    pub fn statuses(&self) -> BTreeMap<String, &'static str> {
        let mut out = self.dense().statuses();
        out.extend(self.conditions());
        out
    }
}

/// Raw graph: vertex names and edges `(name, src, dst)` by vertex index.
#[derive(Debug, Clone)]
pub struct GraphData {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, usize, usize)>,
}

#[derive(Debug, Clone)]
struct Path {
    edges: Vec<usize>,
    src: usize,
    dst: usize,
}

impl GraphData {
    pub fn new(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Self {
        let vi = |v: &str| vertices.iter().position(|x| *x == v).unwrap();
        GraphData {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges.iter().map(|(e, s, d)| (e.to_string(), vi(s), vi(d))).collect(),
        }
    }

    fn paths(&self, cap: u32) -> Vec<Path> {
        let mut all: Vec<Path> = Vec::new();
        let mut frontier: Vec<Path> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(_, s, d))| Path { edges: vec![i], src: s, dst: d })
            .collect();
        for _ in 0..cap {
            all.extend(frontier.iter().cloned());
            let mut next = Vec::new();
            for p in &frontier {
                for (i, &(_, s, d)) in self.edges.iter().enumerate() {
                    if s == p.dst {
                        let mut edges = p.edges.clone();
                        edges.push(i);
                        next.push(Path { edges, src: p.src, dst: d });
                    }
                }
            }
            frontier = next;
        }
        all
    }

    pub fn path_names(&self, cap: u32) -> Vec<String> {
        self.paths(cap).iter().map(|p| self.path_name(p)).collect()
    }

    fn path_name(&self, p: &Path) -> String {
        let parts: Vec<&str> = p.edges.iter().map(|&e| self.edges[e].0.as_str()).collect();
        if parts.iter().any(|s| s.chars().count() > 1) {
            parts.join(".")
        } else {
            parts.concat()
        }
    }

    /// Graph face algebra truncated at path length `cap`.
    pub fn dense(&self, cap: u32) -> Dense {
        let paths = self.paths(cap);
        let nv = self.vertices.len();
        let mut names = Vec::new();
        let mut deg = Vec::new();
        let mut vacuum = vec![vec![0; nv]; nv];
        for i in 0..nv {
            for j in 0..nv {
                vacuum[i][j] = names.len();
                names.push(format!("e({};{})", self.vertices[i], self.vertices[j]));
                deg.push(0);
            }
        }
        let mut pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (a, pa) in paths.iter().enumerate() {
            for (b, pb) in paths.iter().enumerate() {
                if pa.edges.len() == pb.edges.len() {
                    pair.insert((a, b), names.len());
                    names.push(format!("e({};{})", self.path_name(pa), self.path_name(pb)));
                    deg.push(pa.edges.len() as u32);
                }
            }
        }
        let find = |edges: &[usize]| paths.iter().position(|p| p.edges == edges);
        let n = names.len();
        let mut mul = vec![vec![V1::new(); n]; n];
        for i in 0..nv {
            for j in 0..nv {
                let x = vacuum[i][j];
                mul[x][x] = e1(x);
                for (&(a, b), &y) in &pair {
                    if paths[a].src == i && paths[b].src == j {
                        mul[x][y] = e1(y);
                    }
                    if paths[a].dst == i && paths[b].dst == j {
                        mul[y][x] = e1(y);
                    }
                }
            }
        }
        for (&(a, c), &x) in &pair {
            for (&(b, d), &y) in &pair {
                if paths[a].dst != paths[b].src || paths[c].dst != paths[d].src {
                    continue;
                }
                let upper: Vec<usize> = paths[a].edges.iter().chain(&paths[b].edges).copied().collect();
                let lower: Vec<usize> = paths[c].edges.iter().chain(&paths[d].edges).copied().collect();
                if let (Some(u), Some(v)) = (find(&upper), find(&lower)) {
                    mul[x][y] = e1(pair[&(u, v)]);
                }
            }
        }
        let mut comul = vec![V2::new(); n];
        let mut counit = vec![Q::zero(); n];
        for i in 0..nv {
            for j in 0..nv {
                for k in 0..nv {
                    add(&mut comul[vacuum[i][j]], (vacuum[i][k], vacuum[k][j]), Q::one());
                }
            }
            counit[vacuum[i][i]] = Q::one();
        }
        for (&(a, b), &x) in &pair {
            for (u, pu) in paths.iter().enumerate() {
                if pu.edges.len() == paths[a].edges.len() {
                    add(&mut comul[x], (pair[&(a, u)], pair[&(u, b)]), Q::one());
                }
            }
            if a == b {
                counit[x] = Q::one();
            }
        }
        let unit = vacuum.iter().flatten().map(|&x| (x, Q::one())).collect();
        Dense {
            names,
            mul,
            comul,
            counit,
            unit,
            deg,
            cap: Some(cap),
            antipode: None,
            vacuum: Some(vacuum),
        }
    }
}

/// Compares every structure table of `alg` with `d`, matching basis
/// elements by their printed names.
pub fn tables_agree(alg: &AlgebraPresentation, d: &Dense) -> Result<(), String> {
    let cells = alg.cells();
    let name = |b| cells.render(b);
    let mut lib_names: Vec<String> = alg.basis().iter().map(|&b| name(b)).collect();
    let mut ours = d.names.clone();
    lib_names.sort();
    ours.sort();
    if lib_names != ours {
        return Err(format!("basis differs: {lib_names:?} vs {ours:?}"));
    }
    let el = |x: &Element| -> V1 { x.iter().map(|(k, c)| (d.index(&name(*k)), to_q(c))).collect() };
    for &x in alg.basis() {
        let xi = d.index(&name(x));
        for &y in alg.basis() {
            let yi = d.index(&name(y));
            let prod = alg.multiply(&Element::basis(x), &Element::basis(y)).unwrap();
            if el(&prod) != d.mul[xi][yi] {
                return Err(format!("product {} * {} differs", name(x), name(y)));
            }
        }
        let delta: V2 = alg
            .comultiply(&Element::basis(x))
            .unwrap()
            .iter()
            .map(|((l, r), c)| ((d.index(&name(*l)), d.index(&name(*r))), to_q(c)))
            .collect();
        if delta != d.comul[xi] {
            return Err(format!("coproduct of {} differs", name(x)));
        }
        if to_q(&alg.counit_of(&Element::basis(x)).unwrap()) != d.counit[xi] {
            return Err(format!("counit of {} differs", name(x)));
        }
    }
    if el(alg.unit()) != d.unit {
        return Err("unit differs".into());
    }
    Ok(())
}

pub fn status_strings(m: &BTreeMap<String, Status>) -> BTreeMap<String, &'static str> {
    m.iter().map(|(k, v)| (k.clone(), v.as_str())).collect()
}

/// Random vertex data: up to four objects, dims up to 3, entries up to 2,
/// object 0 the unit of both tensors with the unit rows forced to the
/// `P[I,x,u] = P[x,I,u] = [x=u] d(x)` pattern.
pub fn random_vertex<R: Rng>(rng: &mut R) -> VertexData {
    let n = rng.gen_range(1..=4);
    let dims: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let density = rng.gen_range(0.1..0.6);
    let tensor = |rng: &mut R| {
        let mut t = vec![0u64; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for u in 0..n {
                    let v = if a == 0 || b == 0 {
                        let x = if a == 0 { b } else { a };
                        if x == u {
                            dims[x]
                        } else {
                            0
                        }
                    } else if rng.gen_bool(density) {
                        rng.gen_range(1..=2)
                    } else {
                        0
                    };
                    t[(a * n + b) * n + u] = v;
                }
            }
        }
        t
    };
    let p = tensor(rng);
    let q = if rng.gen_bool(0.3) { p.clone() } else { tensor(rng) };
    let sigma = rng.gen_bool(0.5).then(|| (0..n).collect());
    VertexData {
        names: (0..n).map(|i| format!("o{i}")).collect(),
        dims,
        p,
        q,
        unit_p: 0,
        unit_q: 0,
        sigma,
    }
}

/// Recomputes both sides of a witness from its inputs with public
/// operations only. `face` selects the face form of `eps_mult` and enables
/// the idempotent axioms.
pub fn reevaluate(
    alg: &AlgebraPresentation,
    s: Option<&LinearEndo>,
    face: Option<&FaceIdempotents>,
    axiom: Axiom,
    w: &Witness,
) -> (Value, Value) {
    let mul = |x: &Element, y: &Element| alg.multiply(x, y).unwrap();
    let eps = |x: &Element| alg.counit_of(x).unwrap();
    let delta = |x: &Element| alg.comultiply(x).unwrap();
    let b = |i: usize| Element::basis(w.inputs[i]);
    let one = alg.unit();
    let sa = |x: &Element| s.expect("antipode").apply(x, alg.cells()).unwrap();
    let el = Value::Element;
    let left = w.label == "left";
    // position of a 0-cell among the idempotents
    let vpos = |c: CellId| {
        let name = alg.cells().name(c);
        face.unwrap().row.iter().position(|(n, _)| n == name).unwrap()
    };
    match axiom {
        Axiom::Assoc => (el(mul(&mul(&b(0), &b(1)), &b(2))), el(mul(&b(0), &mul(&b(1), &b(2))))),
        Axiom::Unit if left => (el(mul(one, &b(0))), el(b(0))),
        Axiom::Unit => (el(mul(&b(0), one)), el(b(0))),
        Axiom::Coassoc => {
            let d = delta(&b(0));
            (Value::Tensor3(alg.comul_left(&d)), Value::Tensor3(alg.comul_right(&d)))
        }
        Axiom::Counit if left => (el(alg.counit_left(&delta(&b(0)))), el(b(0))),
        Axiom::Counit => (el(alg.counit_right(&delta(&b(0)))), el(b(0))),
        Axiom::DeltaMult => (
            Value::Tensor(delta(&mul(&b(0), &b(1)))),
            Value::Tensor(alg.multiply_tensor(&delta(&b(0)), &delta(&b(1)))),
        ),
        Axiom::EpsMult => {
            let lhs = eps(&mul(&b(0), &b(1)));
            let rhs = match face {
                None => eps(&b(0)) * eps(&b(1)),
                Some(f) => f
                    .col
                    .iter()
                    .zip(&f.row)
                    .map(|((_, ek), (_, rk))| eps(&mul(&b(0), ek)) * eps(&mul(rk, &b(1))))
                    .sum(),
            };
            (Value::Scalar(lhs), Value::Scalar(rhs))
        }
        Axiom::DeltaUnit => (Value::Tensor(delta(one)), Value::Tensor(tensor(one, one))),
        Axiom::WeakUnit => {
            let d1 = delta(one);
            let mut d1_1 = Tensor3Element::zero();
            let mut one_d1 = Tensor3Element::zero();
            for ((x, y), c) in &d1 {
                for (u, cu) in one {
                    d1_1.add_term((*x, *y, *u), c * cu);
                    one_d1.add_term((*u, *x, *y), c * cu);
                }
            }
            let rhs = if left {
                alg.multiply_tensor3(&d1_1, &one_d1)
            } else {
                alg.multiply_tensor3(&one_d1, &d1_1)
            };
            (Value::Tensor3(alg.comul_left(&d1)), Value::Tensor3(rhs))
        }
        Axiom::AntipodeAntihom => (el(sa(&mul(&b(0), &b(1)))), el(mul(&sa(&b(1)), &sa(&b(0))))),
        Axiom::AntipodeUnit => (el(sa(one)), el(one.clone())),
        Axiom::AntipodeInvolution => (el(sa(&sa(&b(0)))), el(b(0))),
        Axiom::VonNeumann => {
            let d3 = alg.comultiply3(&b(0)).unwrap();
            (el(alg.multiply3(&s.unwrap().apply_middle(&d3))), el(b(0)))
        }
        Axiom::VacuumOrth => {
            let (x, y) = (w.inputs[0], w.inputs[1]);
            let want = if x == y { b(0) } else { Element::zero() };
            (el(mul(&b(0), &b(1))), el(want))
        }
        Axiom::FaceRowProj | Axiom::FaceColProj => {
            let f = face.unwrap();
            let fam = if axiom == Axiom::FaceRowProj { &f.row } else { &f.col };
            let (i, k) = (vpos(w.inputs[0].upper), vpos(w.inputs[0].lower));
            let want = if i == k { fam[i].1.clone() } else { Element::zero() };
            (el(mul(&fam[i].1, &fam[k].1)), el(want))
        }
        Axiom::FaceCommute => {
            let f = face.unwrap();
            let (i, k) = (vpos(w.inputs[0].upper), vpos(w.inputs[0].lower));
            (el(mul(&f.row[i].1, &f.col[k].1)), el(mul(&f.col[k].1, &f.row[i].1)))
        }
        Axiom::FaceSum => {
            let f = face.unwrap();
            let fam = if w.label == "row" { &f.row } else { &f.col };
            let total = fam.iter().fold(Element::zero(), |acc, (_, x)| acc.plus(x));
            (el(total), el(one.clone()))
        }
    }
}

/// Every witness in `report` re-evaluates to the recorded, unequal sides.
/// Returns the number of witnesses checked.
pub fn check_witnesses(
    alg: &AlgebraPresentation,
    s: Option<&LinearEndo>,
    face: Option<&FaceIdempotents>,
    report: &AuditReport,
) -> Result<usize, String> {
    let mut n = 0;
    for r in &report.results {
        for w in &r.witnesses {
            let (lhs, rhs) = reevaluate(alg, s, face, r.axiom, w);
            if lhs == rhs {
                return Err(format!("{}: witness sides agree on re-evaluation", r.axiom));
            }
            if lhs != w.lhs || rhs != w.rhs {
                return Err(format!("{}: recorded sides differ from re-evaluation", r.axiom));
            }
            n += 1;
        }
    }
    Ok(n)
}
