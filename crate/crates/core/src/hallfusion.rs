//! Hall-fusion algebras `B(p,q)` built from promonoidal dimension data.
//!
//! A skeletal category with no morphisms between distinct objects is recorded
//! by the dimensions `d(a) = dim A(a,a)`; a promonoidal structure by the
//! integer tensor `P[a,b,u] = dim p(a,b,u)` and its unit object. Two such
//! structures `p` (upper slots) and `q` (lower slots) over the same category
//! give the algebra with basis `e(a;b)` and
//!
//! ```text
//! e(a;c) * e(b;d) = sum_{u,v} P[a,b,u] Q[c,d,v] / (d(u) d(v)) e(u;v)
//! Delta e(a;b)    = sum_u e(a;u) (x) e(u;b)
//! eps e(a;b)      = [a = b]
//! 1               = e(I;J)
//! ```
//!
//! The `check_*` functions evaluate the coend conditions as exact contraction
//! identities over these tensors ("dimension shadows"); the audits in
//! [`crate::audit`] are the ground truth they are compared against.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{AlgebraPresentation, LinearEndo, PresentationBuilder};
use crate::audit::Status;
use crate::basis::{BasisId, CellId, CellUniverse};
use crate::element::{Element, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Objects with the dimensions of their endomorphism algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimCategory {
    names: Vec<String>,
    dims: Vec<u64>,
    lookup: HashMap<String, usize>,
}

impl DimCategory {
    pub fn new<S: Into<String>>(objects: impl IntoIterator<Item = (S, u64)>) -> Result<Self> {
        let mut cat = DimCategory {
            names: Vec::new(),
            dims: Vec::new(),
            lookup: HashMap::new(),
        };
        for (name, d) in objects {
            let name = name.into();
            if d == 0 {
                return Err(Error::Range(format!("object `{name}` has dimension 0")));
            }
            if cat.lookup.contains_key(&name) {
                return Err(Error::Index(format!("object `{name}` declared twice")));
            }
            cat.lookup.insert(name.clone(), cat.names.len());
            cat.names.push(name);
            cat.dims.push(d);
        }
        Ok(cat)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn dim(&self, i: usize) -> u64 {
        self.dims[i]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::Index(format!("undeclared object `{name}`")))
    }

    fn dim_scalar(&self, i: usize) -> Scalar {
        Scalar::from(self.dims[i])
    }
}

/// Sparse `P[a,b,u]` with a unit object, over a [`DimCategory`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromonoidalDimData {
    base: DimCategory,
    entries: BTreeMap<(usize, usize, usize), u64>,
    unit: usize,
}

impl PromonoidalDimData {
    /// Builds the tensor from named triples. Zero counts are dropped; a triple
    /// listed twice keeps the last count.
    pub fn new<'a>(
        base: DimCategory,
        unit: &str,
        entries: impl IntoIterator<Item = (&'a str, &'a str, &'a str, u64)>,
    ) -> Result<Self> {
        let unit = base.index(unit)?;
        let mut map = BTreeMap::new();
        for (a, b, u, n) in entries {
            let key = (base.index(a)?, base.index(b)?, base.index(u)?);
            if n == 0 {
                map.remove(&key);
            } else {
                map.insert(key, n);
            }
        }
        Ok(PromonoidalDimData {
            base,
            entries: map,
            unit,
        })
    }

    pub fn from_indices(
        base: DimCategory,
        unit: usize,
        entries: impl IntoIterator<Item = ((usize, usize, usize), u64)>,
    ) -> Result<Self> {
        let n = base.len();
        if unit >= n {
            return Err(Error::Index(format!("unit index {unit} out of range")));
        }
        let mut map = BTreeMap::new();
        for ((a, b, u), c) in entries {
            if a >= n || b >= n || u >= n {
                return Err(Error::Index(format!("entry ({a},{b},{u}) out of range")));
            }
            if c > 0 {
                map.insert((a, b, u), c);
            }
        }
        Ok(PromonoidalDimData {
            base,
            entries: map,
            unit,
        })
    }

    pub fn base(&self) -> &DimCategory {
        &self.base
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn get(&self, a: usize, b: usize, u: usize) -> u64 {
        self.entries.get(&(a, b, u)).copied().unwrap_or(0)
    }

    /// Nonzero entries in index order.
    pub fn entries(&self) -> &BTreeMap<(usize, usize, usize), u64> {
        &self.entries
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    /// Returns a copy with `P[a,b,u]` overwritten.
    pub fn with_entry(&self, a: &str, b: &str, u: &str, n: u64) -> Result<Self> {
        let mut out = self.clone();
        let key = (self.base.index(a)?, self.base.index(b)?, self.base.index(u)?);
        if n == 0 {
            out.entries.remove(&key);
        } else {
            out.entries.insert(key, n);
        }
        Ok(out)
    }

    fn scalar(&self, a: usize, b: usize, u: usize) -> Scalar {
        Scalar::from(self.get(a, b, u))
    }

    /// `(a, b) -> [(u, P[a,b,u])]`.
    fn rows(&self) -> BTreeMap<(usize, usize), Vec<(usize, u64)>> {
        let mut rows: BTreeMap<(usize, usize), Vec<(usize, u64)>> = BTreeMap::new();
        for (&(a, b, u), &n) in &self.entries {
            rows.entry((a, b)).or_default().push((u, n));
        }
        rows
    }
}

/// Object involution inducing `S e(a;b) = e(sigma b; sigma a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodeMap {
    sigma: Vec<usize>,
}

impl AntipodeMap {
    /// `pairs` lists `(a, sigma a)` for every object.
    pub fn new<'a>(base: &DimCategory, pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self> {
        let mut sigma = vec![None; base.len()];
        for (a, b) in pairs {
            let (a, b) = (base.index(a)?, base.index(b)?);
            if sigma[a].replace(b).is_some() {
                return Err(Error::Sigma(format!("object `{}` mapped twice", base.name(a))));
            }
        }
        let sigma = sigma
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::Sigma(format!("object `{}` has no image", base.name(i)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(AntipodeMap { sigma })
    }

    pub fn from_indices(sigma: Vec<usize>) -> Self {
        AntipodeMap { sigma }
    }

    pub fn identity(n: usize) -> Self {
        AntipodeMap {
            sigma: (0..n).collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.sigma[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.sigma
    }
}

/// The pair of structures `(p, I)` and `(q, J)` over one category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallFusionSpec {
    category: DimCategory,
    p: PromonoidalDimData,
    q: PromonoidalDimData,
    sigma: Option<AntipodeMap>,
}

impl HallFusionSpec {
    pub fn new(p: PromonoidalDimData, q: PromonoidalDimData, sigma: Option<AntipodeMap>) -> Result<Self> {
        if p.base != q.base {
            return Err(Error::Mismatch(
                "p and q are defined over different categories".into(),
            ));
        }
        if let Some(s) = &sigma {
            if s.sigma.len() != p.base.len() || s.sigma.iter().any(|&i| i >= p.base.len()) {
                return Err(Error::Sigma("antipode map does not match the object list".into()));
            }
        }
        Ok(HallFusionSpec {
            category: p.base.clone(),
            p,
            q,
            sigma,
        })
    }

    pub fn category(&self) -> &DimCategory {
        &self.category
    }

    pub fn p(&self) -> &PromonoidalDimData {
        &self.p
    }

    pub fn q(&self) -> &PromonoidalDimData {
        &self.q
    }

    pub fn sigma(&self) -> Option<&AntipodeMap> {
        self.sigma.as_ref()
    }

    /// The spec for `B(q,p)`.
    pub fn transposed(&self) -> HallFusionSpec {
        HallFusionSpec {
            category: self.category.clone(),
            p: self.q.clone(),
            q: self.p.clone(),
            sigma: self.sigma.clone(),
        }
    }

    pub fn with_p(&self, p: PromonoidalDimData) -> Result<Self> {
        HallFusionSpec::new(p, self.q.clone(), self.sigma.clone())
    }

    pub fn with_q(&self, q: PromonoidalDimData) -> Result<Self> {
        HallFusionSpec::new(self.p.clone(), q, self.sigma.clone())
    }

    pub fn with_sigma(&self, sigma: Option<AntipodeMap>) -> Result<Self> {
        HallFusionSpec::new(self.p.clone(), self.q.clone(), sigma)
    }

    /// `e(a;b)` for object indices.
    pub fn basis_id(a: usize, b: usize) -> BasisId {
        BasisId::new(CellId(a as u32), CellId(b as u32))
    }

    /// `e(a;b)` by object names.
    pub fn e(&self, a: &str, b: &str) -> Result<BasisId> {
        Ok(Self::basis_id(self.category.index(a)?, self.category.index(b)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Unit shadows `P[I,b,u] = [b=u] d(b)`, `P[a,I,u] = [a=u] d(a)`.
    C1Unit,
    /// Associativity shadow of the weighted triple tensor.
    C2Assoc,
    /// Compatibility contraction `T[u,v] = sum_{a,b} P[a,b,u] Q[a,b,v]`.
    C3Compat,
    /// Counit contraction.
    C4Counit,
    /// `P[a,b,u] = Q[sigma b, sigma a, sigma u]`.
    C5Antipode,
    /// Von Neumann contractions of `p_3` and `q_3`.
    C6VonNeumann,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::C1Unit,
        Condition::C2Assoc,
        Condition::C3Compat,
        Condition::C4Counit,
        Condition::C5Antipode,
        Condition::C6VonNeumann,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Condition::C1Unit => "c1_unit",
            Condition::C2Assoc => "c2_assoc",
            Condition::C3Compat => "c3_compat",
            Condition::C4Counit => "c4_counit",
            Condition::C5Antipode => "c5_antipode",
            Condition::C6VonNeumann => "c6_von_neumann",
        }
    }

    pub fn parse(id: &str) -> Option<Condition> {
        Condition::ALL.into_iter().find(|c| c.id() == id)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// An index tuple where a contraction differs from its required value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Object names of the index tuple.
    pub indices: Vec<String>,
    pub label: &'static str,
    pub value: Scalar,
    pub required: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionResult {
    pub condition: Condition,
    /// `"p"` or `"q"` for conditions evaluated on a single structure.
    pub scope: Option<&'static str>,
    pub status: Status,
    pub violations: Vec<Violation>,
    pub note: Option<String>,
}

impl ConditionResult {
    fn from_violations(condition: Condition, scope: Option<&'static str>, violations: Vec<Violation>) -> Self {
        ConditionResult {
            condition,
            scope,
            status: if violations.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            violations,
            note: None,
        }
    }
}

/// A named table of computed contraction values (nonzero entries only).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValueTable {
    pub entries: Vec<(Vec<String>, Scalar)>,
}

impl ValueTable {
    pub fn get(&self, indices: &[&str]) -> Scalar {
        self.entries
            .iter()
            .find(|(k, _)| k.iter().map(String::as_str).eq(indices.iter().copied()))
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Scalar::zero)
    }

    fn push(&mut self, indices: Vec<String>, value: Scalar) {
        if !value.is_zero() {
            self.entries.push((indices, value));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContractionReport {
    pub conditions: Vec<ConditionResult>,
    pub tables: BTreeMap<String, ValueTable>,
    /// Non-integral weighted sums, which no genuine coend of free actions
    /// would produce.
    pub warnings: Vec<String>,
}

impl ContractionReport {
    pub fn merge(&mut self, other: ContractionReport) {
        self.conditions.extend(other.conditions);
        self.tables.extend(other.tables);
        self.warnings.extend(other.warnings);
    }

    /// Combined status over all scopes of `condition`.
    pub fn status(&self, condition: Condition) -> Option<Status> {
        self.conditions
            .iter()
            .filter(|c| c.condition == condition)
            .map(|c| c.status)
            .reduce(Status::combine)
    }

    pub fn results(&self, condition: Condition) -> impl Iterator<Item = &ConditionResult> {
        self.conditions.iter().filter(move |c| c.condition == condition)
    }

    pub fn table(&self, name: &str) -> Option<&ValueTable> {
        self.tables.get(name)
    }

    pub fn any_fail(&self) -> bool {
        self.conditions.iter().any(|c| c.status == Status::Fail)
    }
}

fn names(cat: &DimCategory, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| cat.name(i).to_string()).collect()
}

fn kron(a: usize, b: usize) -> bool {
    a == b
}

/// `sum_w P[a,b,w] P[w,c,e] / d(w)`: the weighted dimension of the chained
/// coend `int^w p(a,b,w) (x) p(w,c,e)`.
pub fn triple_left(data: &PromonoidalDimData, a: usize, b: usize, c: usize, e: usize) -> Scalar {
    let cat = &data.base;
    (0..cat.len())
        .filter(|&w| data.get(a, b, w) != 0 && data.get(w, c, e) != 0)
        .map(|w| &(&data.scalar(a, b, w) * &data.scalar(w, c, e)) / &cat.dim_scalar(w))
        .sum()
}

/// `sum_w P[b,c,w] P[a,w,e] / d(w)`, the other bracketing.
pub fn triple_right(data: &PromonoidalDimData, a: usize, b: usize, c: usize, e: usize) -> Scalar {
    let cat = &data.base;
    (0..cat.len())
        .filter(|&w| data.get(b, c, w) != 0 && data.get(a, w, e) != 0)
        .map(|w| &(&data.scalar(b, c, w) * &data.scalar(a, w, e)) / &cat.dim_scalar(w))
        .sum()
}

/// `q_3(a,b,c;e) = sum_u Q[a,b,u] Q[u,c,e] / d(u)`, by object names.
pub fn compute_q3(data: &PromonoidalDimData, a: &str, b: &str, c: &str, e: &str) -> Result<Scalar> {
    let cat = &data.base;
    Ok(triple_left(
        data,
        cat.index(a)?,
        cat.index(b)?,
        cat.index(c)?,
        cat.index(e)?,
    ))
}

/// Unit (C1) and associativity (C2) shadows of one promonoidal structure.
/// `scope` tags the results (`"p"` or `"q"`).
pub fn validate_promonoidal_scoped(data: &PromonoidalDimData, scope: Option<&'static str>) -> ContractionReport {
    let cat = &data.base;
    let n = cat.len();
    let unit = data.unit;
    let prefix = scope.map(|s| format!("{s}.")).unwrap_or_default();

    let mut c1 = Vec::new();
    for x in 0..n {
        for u in 0..n {
            let req_left = if kron(x, u) { cat.dim(x) } else { 0 };
            let left = data.get(unit, x, u);
            if left != req_left {
                c1.push(Violation {
                    indices: names(cat, &[x, u]),
                    label: "left",
                    value: Scalar::from(left),
                    required: Scalar::from(req_left),
                });
            }
            let right = data.get(x, unit, u);
            if right != req_left {
                c1.push(Violation {
                    indices: names(cat, &[x, u]),
                    label: "right",
                    value: Scalar::from(right),
                    required: Scalar::from(req_left),
                });
            }
        }
    }

    let mut c2 = Vec::new();
    let mut left_table = ValueTable::default();
    let mut right_table = ValueTable::default();
    let mut warnings = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let l = triple_left(data, a, b, c, e);
                    let r = triple_right(data, a, b, c, e);
                    let idx = names(cat, &[a, b, c, e]);
                    for v in [&l, &r] {
                        if !v.is_integer() {
                            warnings.push(format!(
                                "{prefix}c2: non-integral weighted sum {v} at ({})",
                                idx.join(",")
                            ));
                        }
                    }
                    if l != r {
                        c2.push(Violation {
                            indices: idx.clone(),
                            label: "",
                            value: l.clone(),
                            required: r.clone(),
                        });
                    }
                    left_table.push(idx.clone(), l);
                    right_table.push(idx, r);
                }
            }
        }
    }

    let mut tables = BTreeMap::new();
    tables.insert(format!("{prefix}c2.left"), left_table);
    tables.insert(format!("{prefix}c2.right"), right_table);
    ContractionReport {
        conditions: vec![
            ConditionResult::from_violations(Condition::C1Unit, scope, c1),
            ConditionResult::from_violations(Condition::C2Assoc, scope, c2),
        ],
        tables,
        warnings,
    }
}

/// C1 and C2 for a single structure.
pub fn validate_promonoidal(data: &PromonoidalDimData) -> ContractionReport {
    validate_promonoidal_scoped(data, None)
}

/// Tensor product structure on pairs `(a,c)` with `d(a,c) = d(a) d(c)`,
/// entries `P[a,b,u] Q[c,d,v]` and unit `(I,J)`.
pub fn tensor_promonoidal(pd: &PromonoidalDimData, qd: &PromonoidalDimData) -> Result<PromonoidalDimData> {
    if pd.base != qd.base {
        return Err(Error::Mismatch(
            "tensor product needs both structures over the same category".into(),
        ));
    }
    let cat = &pd.base;
    let n = cat.len();
    let pair = |a: usize, c: usize| a * n + c;
    let objects = (0..n).flat_map(|a| {
        (0..n).map(move |c| (format!("({},{})", cat.name(a), cat.name(c)), cat.dim(a) * cat.dim(c)))
    });
    let base = DimCategory::new(objects)?;
    let mut entries = Vec::with_capacity(pd.entries.len() * qd.entries.len());
    for (&(a, b, u), &x) in &pd.entries {
        for (&(c, d, v), &y) in &qd.entries {
            entries.push(((pair(a, c), pair(b, d), pair(u, v)), x * y));
        }
    }
    PromonoidalDimData::from_indices(base, pair(pd.unit, qd.unit), entries)
}

/// Builds `B(p,q)`. No validation of the promonoidal data is performed, so
/// the auditor can be pointed at data that violates the axioms.
pub fn build_hall_fusion(spec: &HallFusionSpec) -> Result<AlgebraPresentation> {
    let cat = &spec.category;
    let n = cat.len();
    let mut cells = CellUniverse::new();
    for name in cat.names() {
        cells.intern(name);
    }
    let e = HallFusionSpec::basis_id;
    let mut builder = PresentationBuilder::new(cells);
    for a in 0..n {
        for b in 0..n {
            builder.add_basis(e(a, b));
        }
    }

    let p_rows = spec.p.rows();
    let q_rows = spec.q.rows();
    for (&(a, b), p_row) in &p_rows {
        for (&(c, d), q_row) in &q_rows {
            let mut prod = Element::zero();
            for &(u, pu) in p_row {
                for &(v, qv) in q_row {
                    let coeff = Scalar::from(pu * qv) / Scalar::from(cat.dim(u) * cat.dim(v));
                    prod.add_term(e(u, v), coeff);
                }
            }
            builder.set_mul(e(a, c), e(b, d), prod);
        }
    }

    for a in 0..n {
        for b in 0..n {
            let delta: TensorElement = (0..n).map(|u| ((e(a, u), e(u, b)), Scalar::one())).collect();
            builder.set_comul(e(a, b), delta);
        }
        builder.set_counit(e(a, a), Scalar::one());
    }
    builder.set_unit(Element::basis(e(spec.p.unit, spec.q.unit)));
    builder.build()
}

/// Compatibility contraction. Status uses the normalization
/// `T[u,v] = [u=v] d(u) d(v)`, which is equivalent to
/// Delta-multiplicativity; the table `c3.required_literal` carries the
/// alternative count `[u=v] d(u)` and the note records its verdict.
pub fn check_compat_contraction(spec: &HallFusionSpec) -> ContractionReport {
    let cat = &spec.category;
    let n = cat.len();
    let mut t = vec![vec![0u64; n]; n];
    for (&(a, b, u), &x) in &spec.p.entries {
        for v in 0..n {
            t[u][v] += x * spec.q.get(a, b, v);
        }
    }
    let mut violations = Vec::new();
    let mut literal_ok = true;
    let mut table = ValueTable::default();
    let mut literal = ValueTable::default();
    for u in 0..n {
        for v in 0..n {
            let value = Scalar::from(t[u][v]);
            let required = if u == v {
                Scalar::from(cat.dim(u) * cat.dim(v))
            } else {
                Scalar::zero()
            };
            let required_literal = if u == v { Scalar::from(cat.dim(u)) } else { Scalar::zero() };
            literal_ok &= value == required_literal;
            if value != required {
                violations.push(Violation {
                    indices: names(cat, &[u, v]),
                    label: "",
                    value: value.clone(),
                    required,
                });
            }
            table.push(names(cat, &[u, v]), value);
            literal.push(names(cat, &[u, v]), required_literal);
        }
    }
    let mut result = ConditionResult::from_violations(Condition::C3Compat, None, violations);
    result.note = Some(format!(
        "literal normalization [u=v] d(u): {}",
        if literal_ok { "pass" } else { "fail" }
    ));
    let mut tables = BTreeMap::new();
    tables.insert("c3.T".to_string(), table);
    tables.insert("c3.required_literal".to_string(), literal);
    ContractionReport {
        conditions: vec![result],
        tables,
        warnings: Vec::new(),
    }
}

/// Counit contraction: `sum_u P[a,b,u] Q[c,d,u] / d(u)^2 = [a=c][b=d]`.
pub fn check_counit_contraction(spec: &HallFusionSpec) -> ContractionReport {
    let cat = &spec.category;
    let n = cat.len();
    let mut violations = Vec::new();
    let mut table = ValueTable::default();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let value: Scalar = (0..n)
                        .filter(|&u| spec.p.get(a, b, u) != 0 && spec.q.get(c, d, u) != 0)
                        .map(|u| {
                            let du = cat.dim_scalar(u);
                            &(&spec.p.scalar(a, b, u) * &spec.q.scalar(c, d, u)) / &(&du * &du)
                        })
                        .sum();
                    let required = if a == c && b == d { Scalar::one() } else { Scalar::zero() };
                    let idx = names(cat, &[a, b, c, d]);
                    if value != required {
                        violations.push(Violation {
                            indices: idx.clone(),
                            label: "",
                            value: value.clone(),
                            required,
                        });
                    }
                    table.push(idx, value);
                }
            }
        }
    }
    let mut tables = BTreeMap::new();
    tables.insert("c4.value".to_string(), table);
    ContractionReport {
        conditions: vec![ConditionResult::from_violations(Condition::C4Counit, None, violations)],
        tables,
        warnings: Vec::new(),
    }
}

fn checked_sigma(spec: &HallFusionSpec) -> Result<&AntipodeMap> {
    let cat = &spec.category;
    let sigma = spec
        .sigma
        .as_ref()
        .ok_or_else(|| Error::Sigma("no antipode map given".into()))?;
    for a in 0..cat.len() {
        let s = sigma.apply(a);
        if sigma.apply(s) != a {
            return Err(Error::Sigma(format!(
                "sigma is not an involution at `{}`",
                cat.name(a)
            )));
        }
        if cat.dim(s) != cat.dim(a) {
            return Err(Error::Sigma(format!(
                "sigma changes the dimension of `{}`",
                cat.name(a)
            )));
        }
    }
    if spec.p.unit != sigma.apply(spec.q.unit) {
        return Err(Error::Sigma(format!(
            "unit condition fails: I = `{}` but sigma(J) = `{}`",
            cat.name(spec.p.unit),
            cat.name(sigma.apply(spec.q.unit))
        )));
    }
    Ok(sigma)
}

/// `S e(a;b) = e(sigma b; sigma a)`. Fails with `E_SIGMA` unless sigma is a
/// dimension-preserving involution with `I = sigma(J)`.
pub fn build_antipode(spec: &HallFusionSpec) -> Result<LinearEndo> {
    let sigma = checked_sigma(spec)?;
    let n = spec.category.len();
    let e = HallFusionSpec::basis_id;
    let images = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (e(a, b), Element::basis(e(sigma.apply(b), sigma.apply(a)))))
        .collect();
    Ok(LinearEndo::new(images))
}

/// C5: `P[a,b,u] = Q[sigma b, sigma a, sigma u]` for all triples.
pub fn check_antipode_contraction(spec: &HallFusionSpec) -> Result<ContractionReport> {
    let sigma = checked_sigma(spec)?;
    let cat = &spec.category;
    let n = cat.len();
    let mut violations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for u in 0..n {
                let lhs = spec.p.get(a, b, u);
                let rhs = spec.q.get(sigma.apply(b), sigma.apply(a), sigma.apply(u));
                if lhs != rhs {
                    violations.push(Violation {
                        indices: names(cat, &[a, b, u]),
                        label: "",
                        value: Scalar::from(lhs),
                        required: Scalar::from(rhs),
                    });
                }
            }
        }
    }
    Ok(ContractionReport {
        conditions: vec![ConditionResult::from_violations(Condition::C5Antipode, None, violations)],
        tables: BTreeMap::new(),
        warnings: Vec::new(),
    })
}

/// C6: `sum_v p_3(a, sigma v, v; x) = [a=x] d(a)` (label `"p"`) and
/// `sum_u q_3(u, sigma u, b; y) = [b=y] d(b)` (label `"q"`). The von Neumann
/// coefficient of `e(x;y)` in the image of `e(a;b)` is the product of the two
/// sums divided by `d(x) d(y)`.
pub fn check_vn_contractions(spec: &HallFusionSpec) -> Result<ContractionReport> {
    let sigma = checked_sigma(spec)?;
    let cat = &spec.category;
    let n = cat.len();
    let mut violations = Vec::new();
    let mut p_table = ValueTable::default();
    let mut q_table = ValueTable::default();
    let mut p3 = ValueTable::default();
    let mut q3 = ValueTable::default();
    let mut warnings = Vec::new();

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let idx = names(cat, &[a, b, c, e]);
                    let pv = triple_left(&spec.p, a, b, c, e);
                    let qv = triple_left(&spec.q, a, b, c, e);
                    for (tag, v) in [("p3", &pv), ("q3", &qv)] {
                        if !v.is_integer() {
                            warnings.push(format!(
                                "{tag}: non-integral weighted sum {v} at ({})",
                                idx.join(",")
                            ));
                        }
                    }
                    p3.push(idx.clone(), pv);
                    q3.push(idx, qv);
                }
            }
        }
    }

    for a in 0..n {
        for x in 0..n {
            let value: Scalar = (0..n)
                .map(|v| triple_left(&spec.p, a, sigma.apply(v), v, x))
                .sum();
            let required = if a == x { cat.dim_scalar(a) } else { Scalar::zero() };
            if value != required {
                violations.push(Violation {
                    indices: names(cat, &[a, x]),
                    label: "p",
                    value: value.clone(),
                    required,
                });
            }
            p_table.push(names(cat, &[a, x]), value);
        }
    }
    for b in 0..n {
        for y in 0..n {
            let value: Scalar = (0..n)
                .map(|u| triple_left(&spec.q, u, sigma.apply(u), b, y))
                .sum();
            let required = if b == y { cat.dim_scalar(b) } else { Scalar::zero() };
            if value != required {
                violations.push(Violation {
                    indices: names(cat, &[b, y]),
                    label: "q",
                    value: value.clone(),
                    required,
                });
            }
            q_table.push(names(cat, &[b, y]), value);
        }
    }

    let mut tables = BTreeMap::new();
    tables.insert("c6.p".to_string(), p_table);
    tables.insert("c6.q".to_string(), q_table);
    tables.insert("p3".to_string(), p3);
    tables.insert("q3".to_string(), q3);
    Ok(ContractionReport {
        conditions: vec![ConditionResult::from_violations(
            Condition::C6VonNeumann,
            None,
            violations,
        )],
        tables,
        warnings,
    })
}

/// Every contraction check that applies to `spec`: C1/C2 for both
/// structures, C3, C4, and C5/C6 when an antipode map is present.
pub fn check_all_contractions(spec: &HallFusionSpec) -> Result<ContractionReport> {
    let mut report = validate_promonoidal_scoped(&spec.p, Some("p"));
    report.merge(validate_promonoidal_scoped(&spec.q, Some("q")));
    report.merge(check_compat_contraction(spec));
    report.merge(check_counit_contraction(spec));
    if spec.sigma.is_some() {
        report.merge(check_antipode_contraction(spec)?);
        report.merge(check_vn_contractions(spec)?);
    }
    Ok(report)
}
