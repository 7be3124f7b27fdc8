//! Brute-force axiom auditing.
//!
//! Every audit enumerates basis tuples, evaluates both sides of an identity
//! through the public [`AlgebraPresentation`] operations and records unequal
//! pairs as [`Witness`]es. Scanning of an axiom stops once `witness_cap`
//! witnesses have been collected. In a graded presentation with a degree cap,
//! tuples whose total degree exceeds the cap are counted as truncated and
//! not compared.

use std::fmt;

use crate::algebra::{AlgebraPresentation, LinearEndo};
use crate::basis::BasisId;
use crate::element::{tensor, Element, Tensor3Element, TensorElement};
use crate::scalar::Scalar;

/// How many truncated tuples an [`AxiomResult`] lists explicitly.
pub const TRUNCATED_LISTED: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Assoc,
    Unit,
    Coassoc,
    Counit,
    DeltaMult,
    EpsMult,
    DeltaUnit,
    WeakUnit,
    AntipodeAntihom,
    AntipodeUnit,
    AntipodeInvolution,
    VonNeumann,
    VacuumOrth,
    FaceRowProj,
    FaceColProj,
    FaceCommute,
    FaceSum,
}

impl Axiom {
    pub const ALL: [Axiom; 17] = [
        Axiom::Assoc,
        Axiom::Unit,
        Axiom::Coassoc,
        Axiom::Counit,
        Axiom::DeltaMult,
        Axiom::EpsMult,
        Axiom::DeltaUnit,
        Axiom::WeakUnit,
        Axiom::AntipodeAntihom,
        Axiom::AntipodeUnit,
        Axiom::AntipodeInvolution,
        Axiom::VonNeumann,
        Axiom::VacuumOrth,
        Axiom::FaceRowProj,
        Axiom::FaceColProj,
        Axiom::FaceCommute,
        Axiom::FaceSum,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Axiom::Assoc => "assoc",
            Axiom::Unit => "unit",
            Axiom::Coassoc => "coassoc",
            Axiom::Counit => "counit",
            Axiom::DeltaMult => "delta_mult",
            Axiom::EpsMult => "eps_mult",
            Axiom::DeltaUnit => "delta_unit",
            Axiom::WeakUnit => "weak_unit",
            Axiom::AntipodeAntihom => "antipode_antihom",
            Axiom::AntipodeUnit => "antipode_unit",
            Axiom::AntipodeInvolution => "antipode_involution",
            Axiom::VonNeumann => "von_neumann",
            Axiom::VacuumOrth => "vacuum_orth",
            Axiom::FaceRowProj => "face_row_proj",
            Axiom::FaceColProj => "face_col_proj",
            Axiom::FaceCommute => "face_commute",
            Axiom::FaceSum => "face_sum",
        }
    }

    pub fn parse(id: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.id() == id)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s {
            "pass" => Some(Status::Pass),
            "fail" => Some(Status::Fail),
            "skip" => Some(Status::Skip),
            _ => None,
        }
    }

    /// Fail dominates, then pass; all-skip stays skip.
    pub fn combine(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Pass, _) | (_, Status::Pass) => Status::Pass,
            _ => Status::Skip,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One side of an audited identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Element(Element),
    Tensor(TensorElement),
    Tensor3(Tensor3Element),
}

/// A basis tuple on which an identity fails, with both evaluated sides.
///
/// `label` distinguishes the identities of a multi-part axiom (`"left"` /
/// `"right"` for the two unit or counit laws, for instance); it is empty for
/// single-identity axioms. For the face-idempotent axioms each input symbol
/// `e(i;k)` encodes the pair of 0-cells `(i, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<BasisId>,
    pub label: &'static str,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Number of identities evaluated.
    pub checked: usize,
    /// Number of tuples excluded because of degree truncation.
    pub truncated: usize,
    /// The first [`TRUNCATED_LISTED`] truncated tuples in scan order.
    pub truncated_tuples: Vec<Vec<BasisId>>,
    pub note: Option<String>,
}

impl AxiomResult {
    pub fn skipped(axiom: Axiom, note: impl Into<String>) -> Self {
        AxiomResult {
            axiom,
            status: Status::Skip,
            witnesses: Vec::new(),
            checked: 0,
            truncated: 0,
            truncated_tuples: Vec::new(),
            note: Some(note.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AuditReport {
    pub results: Vec<AxiomResult>,
}

impl AuditReport {
    pub fn get(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn status(&self, axiom: Axiom) -> Option<Status> {
        self.get(axiom).map(|r| r.status)
    }

    /// Appends `other`, replacing entries for axioms already present.
    pub fn merge(&mut self, other: AuditReport) {
        for r in other.results {
            self.insert(r);
        }
    }

    pub fn insert(&mut self, result: AxiomResult) {
        match self.results.iter_mut().find(|r| r.axiom == result.axiom) {
            Some(slot) => *slot = result,
            None => self.results.push(result),
        }
    }

    pub fn any_fail(&self) -> bool {
        self.results.iter().any(|r| r.status == Status::Fail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    /// Witnesses collected per axiom before scanning stops. Values below 1
    /// are treated as 1.
    pub witness_cap: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { witness_cap: 5 }
    }
}

/// Accumulates the outcome of scanning one axiom.
pub(crate) struct Collector {
    axiom: Axiom,
    cap: usize,
    witnesses: Vec<Witness>,
    checked: usize,
    truncated: usize,
    truncated_tuples: Vec<Vec<BasisId>>,
}

impl Collector {
    pub(crate) fn new(axiom: Axiom, opts: &AuditOptions) -> Self {
        Collector {
            axiom,
            cap: opts.witness_cap.max(1),
            witnesses: Vec::new(),
            checked: 0,
            truncated: 0,
            truncated_tuples: Vec::new(),
        }
    }

    pub(crate) fn full(&self) -> bool {
        self.witnesses.len() >= self.cap
    }

    /// Returns false (and records the tuple) when `tuple` lies beyond the
    /// degree cap of `alg`.
    pub(crate) fn admit(&mut self, alg: &AlgebraPresentation, tuple: &[BasisId]) -> bool {
        if alg.within_cap(tuple) {
            return true;
        }
        self.truncated += 1;
        if self.truncated_tuples.len() < TRUNCATED_LISTED {
            self.truncated_tuples.push(tuple.to_vec());
        }
        false
    }

    pub(crate) fn compare(&mut self, inputs: &[BasisId], label: &'static str, lhs: Value, rhs: Value) {
        self.checked += 1;
        if lhs != rhs && !self.full() {
            self.witnesses.push(Witness {
                inputs: inputs.to_vec(),
                label,
                lhs,
                rhs,
            });
        }
    }

    pub(crate) fn finish(mut self) -> AxiomResult {
        self.witnesses
            .sort_by(|a, b| (&a.inputs, a.label).cmp(&(&b.inputs, b.label)));
        AxiomResult {
            axiom: self.axiom,
            status: if self.witnesses.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            witnesses: self.witnesses,
            checked: self.checked,
            truncated: self.truncated,
            truncated_tuples: self.truncated_tuples,
            note: None,
        }
    }
}

fn el(b: BasisId) -> Element {
    Element::basis(b)
}

/// Associativity over all basis triples and two-sided unitality over all
/// basis elements.
pub fn audit_algebra(alg: &AlgebraPresentation, opts: &AuditOptions) -> AuditReport {
    let basis = alg.basis();

    let mut assoc = Collector::new(Axiom::Assoc, opts);
    'outer: for &x in basis {
        for &y in basis {
            let xy = alg.mul_basis(x, y);
            for &z in basis {
                if assoc.full() {
                    break 'outer;
                }
                if !assoc.admit(alg, &[x, y, z]) {
                    continue;
                }
                let lhs = alg.mul_unchecked(&xy, &el(z));
                let rhs = alg.mul_unchecked(&el(x), &alg.mul_basis(y, z));
                assoc.compare(&[x, y, z], "", Value::Element(lhs), Value::Element(rhs));
            }
        }
    }

    let mut unit = Collector::new(Axiom::Unit, opts);
    let one = alg.unit();
    for &x in basis {
        if unit.full() {
            break;
        }
        let ex = el(x);
        unit.compare(
            &[x],
            "left",
            Value::Element(alg.mul_unchecked(one, &ex)),
            Value::Element(ex.clone()),
        );
        unit.compare(
            &[x],
            "right",
            Value::Element(alg.mul_unchecked(&ex, one)),
            Value::Element(ex),
        );
    }

    AuditReport {
        results: vec![assoc.finish(), unit.finish()],
    }
}

/// Coassociativity and the two counit laws on every basis element.
pub fn audit_coalgebra(alg: &AlgebraPresentation, opts: &AuditOptions) -> AuditReport {
    let mut coassoc = Collector::new(Axiom::Coassoc, opts);
    let mut counit = Collector::new(Axiom::Counit, opts);
    for &x in alg.basis() {
        let d = alg.comul_basis(x);
        if !coassoc.full() {
            coassoc.compare(
                &[x],
                "",
                Value::Tensor3(alg.comul_left(&d)),
                Value::Tensor3(alg.comul_right(&d)),
            );
        }
        if !counit.full() {
            counit.compare(
                &[x],
                "left",
                Value::Element(alg.counit_left(&d)),
                Value::Element(el(x)),
            );
            counit.compare(
                &[x],
                "right",
                Value::Element(alg.counit_right(&d)),
                Value::Element(el(x)),
            );
        }
    }
    AuditReport {
        results: vec![coassoc.finish(), counit.finish()],
    }
}

/// Strict multiplicativity of the counit: `eps(xy) = eps(x) eps(y)`.
pub(crate) fn audit_eps_mult(alg: &AlgebraPresentation, opts: &AuditOptions) -> AxiomResult {
    let mut eps = Collector::new(Axiom::EpsMult, opts);
    'outer: for &x in alg.basis() {
        for &y in alg.basis() {
            if eps.full() {
                break 'outer;
            }
            if !eps.admit(alg, &[x, y]) {
                continue;
            }
            let lhs: Scalar = alg
                .mul_basis(x, y)
                .iter()
                .map(|(b, c)| c * &alg.counit_basis(*b))
                .sum();
            let rhs = alg.counit_basis(x) * alg.counit_basis(y);
            eps.compare(&[x, y], "", Value::Scalar(lhs), Value::Scalar(rhs));
        }
    }
    eps.finish()
}

/// Compatibility of product and coproduct:
///
/// * `delta_mult`: `Delta(xy) = Delta(x) Delta(y)` on basis pairs;
/// * `eps_mult`: `eps(xy) = eps(x) eps(y)` on basis pairs;
/// * `delta_unit`: `Delta(1) = 1 (x) 1`;
/// * `weak_unit`: `(Delta (x) 1) Delta(1)` equals both
///   `(Delta(1) (x) 1)(1 (x) Delta(1))` (label `"left"`) and
///   `(1 (x) Delta(1))(Delta(1) (x) 1)` (label `"right"`).
pub fn audit_bialgebra_compat(alg: &AlgebraPresentation, opts: &AuditOptions) -> AuditReport {
    let basis = alg.basis();

    let mut dmult = Collector::new(Axiom::DeltaMult, opts);
    'outer: for &x in basis {
        let dx = alg.comul_basis(x);
        for &y in basis {
            if dmult.full() {
                break 'outer;
            }
            if !dmult.admit(alg, &[x, y]) {
                continue;
            }
            let xy = alg.mul_basis(x, y);
            let lhs = alg.comultiply(&xy).expect("table products stay in the basis");
            let rhs = alg.multiply_tensor(&dx, &alg.comul_basis(y));
            dmult.compare(&[x, y], "", Value::Tensor(lhs), Value::Tensor(rhs));
        }
    }

    let one = alg.unit();
    let delta_one = alg.comultiply(one).expect("unit lies in the basis");

    let mut dunit = Collector::new(Axiom::DeltaUnit, opts);
    dunit.compare(
        &[],
        "",
        Value::Tensor(delta_one.clone()),
        Value::Tensor(tensor(one, one)),
    );

    let mut weak = Collector::new(Axiom::WeakUnit, opts);
    let lhs = alg.comul_left(&delta_one);
    let mut d1_then_1 = Tensor3Element::zero();
    let mut one_then_d1 = Tensor3Element::zero();
    for ((a, b), c) in &delta_one {
        for (u, cu) in one {
            d1_then_1.add_term((*a, *b, *u), c * cu);
            one_then_d1.add_term((*u, *a, *b), c * cu);
        }
    }
    weak.compare(
        &[],
        "left",
        Value::Tensor3(lhs.clone()),
        Value::Tensor3(alg.multiply_tensor3(&d1_then_1, &one_then_d1)),
    );
    weak.compare(
        &[],
        "right",
        Value::Tensor3(lhs),
        Value::Tensor3(alg.multiply_tensor3(&one_then_d1, &d1_then_1)),
    );

    AuditReport {
        results: vec![
            dmult.finish(),
            audit_eps_mult(alg, opts),
            dunit.finish(),
            weak.finish(),
        ],
    }
}

/// Antipode identities for a candidate `s`:
///
/// * `antipode_antihom`: `S(xy) = S(y) S(x)` on basis pairs;
/// * `antipode_unit`: `S(1) = 1`;
/// * `antipode_involution`: `S(S(x)) = x` on the basis;
/// * `von_neumann`: `mu_3 (1 (x) S (x) 1) Delta_3 (x) = x`, with
///   `mu_3 = mu(mu (x) 1)` and `Delta_3 = (Delta (x) 1) Delta`. Skipped
///   unless the algebra and coalgebra audits both pass.
pub fn audit_antipode(alg: &AlgebraPresentation, s: &LinearEndo, opts: &AuditOptions) -> AuditReport {
    let all = [
        Axiom::AntipodeAntihom,
        Axiom::AntipodeUnit,
        Axiom::AntipodeInvolution,
        Axiom::VonNeumann,
    ];
    if !s.is_total_on(alg) {
        return AuditReport {
            results: all
                .iter()
                .map(|&a| AxiomResult::skipped(a, "antipode is not defined on the whole basis"))
                .collect(),
        };
    }
    let cells = alg.cells();
    let apply = |x: &Element| s.apply(x, cells).expect("antipode is total");
    let basis = alg.basis();

    let mut antihom = Collector::new(Axiom::AntipodeAntihom, opts);
    'outer: for &x in basis {
        let sx = apply(&el(x));
        for &y in basis {
            if antihom.full() {
                break 'outer;
            }
            if !antihom.admit(alg, &[x, y]) {
                continue;
            }
            let lhs = apply(&alg.mul_basis(x, y));
            let rhs = alg.mul_unchecked(&apply(&el(y)), &sx);
            antihom.compare(&[x, y], "", Value::Element(lhs), Value::Element(rhs));
        }
    }

    let mut sunit = Collector::new(Axiom::AntipodeUnit, opts);
    sunit.compare(
        &[],
        "",
        Value::Element(apply(alg.unit())),
        Value::Element(alg.unit().clone()),
    );

    let mut invol = Collector::new(Axiom::AntipodeInvolution, opts);
    for &x in basis {
        if invol.full() {
            break;
        }
        invol.compare(
            &[x],
            "",
            Value::Element(apply(&apply(&el(x)))),
            Value::Element(el(x)),
        );
    }

    let structure_ok = !audit_algebra(alg, opts).any_fail() && !audit_coalgebra(alg, opts).any_fail();
    let vn = if structure_ok {
        let mut vn = Collector::new(Axiom::VonNeumann, opts);
        for &x in basis {
            if vn.full() {
                break;
            }
            if !vn.admit(alg, &[x, x, x]) {
                continue;
            }
            let d3 = alg.comultiply3(&el(x)).expect("basis element");
            let lhs = alg.multiply3(&s.apply_middle(&d3));
            vn.compare(&[x], "", Value::Element(lhs), Value::Element(el(x)));
        }
        vn.finish()
    } else {
        AxiomResult::skipped(
            Axiom::VonNeumann,
            "algebra or coalgebra audit failed; mu_3 and Delta_3 are ambiguous",
        )
    };

    AuditReport {
        results: vec![antihom.finish(), sunit.finish(), invol.finish(), vn],
    }
}
