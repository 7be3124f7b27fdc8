//! Structure-constant presentations of finite-dimensional (co)algebras.
//!
//! An [`AlgebraPresentation`] stores the multiplication, comultiplication,
//! unit and counit as sparse tables over a basis of symbols `e(a;b)`. All
//! operations extend the tables (bi)linearly. Tables are fixed once
//! [`PresentationBuilder::build`] returns.

use std::collections::{BTreeMap, BTreeSet};

use crate::basis::{BasisId, CellUniverse};
use crate::element::{Element, Tensor3Element, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Degree labels plus an optional truncation cap. Products whose degree would
/// exceed the cap are absent from the multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub degree: BTreeMap<BasisId, u32>,
    pub cap: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    cells: CellUniverse,
    basis: Vec<BasisId>,
    members: BTreeSet<BasisId>,
    mul: BTreeMap<(BasisId, BasisId), Element>,
    comul: BTreeMap<BasisId, TensorElement>,
    unit: Element,
    counit: BTreeMap<BasisId, Scalar>,
    grading: Option<Grading>,
}

/// Mutable staging area for a presentation.
#[derive(Debug, Clone, Default)]
pub struct PresentationBuilder {
    cells: CellUniverse,
    basis: BTreeSet<BasisId>,
    mul: BTreeMap<(BasisId, BasisId), Element>,
    comul: BTreeMap<BasisId, TensorElement>,
    unit: Element,
    counit: BTreeMap<BasisId, Scalar>,
    grading: Option<Grading>,
}

impl PresentationBuilder {
    pub fn new(cells: CellUniverse) -> Self {
        PresentationBuilder {
            cells,
            ..Default::default()
        }
    }

    pub fn cells(&self) -> &CellUniverse {
        &self.cells
    }

    pub fn add_basis(&mut self, b: BasisId) -> &mut Self {
        self.basis.insert(b);
        self
    }

    pub fn set_mul(&mut self, x: BasisId, y: BasisId, value: Element) -> &mut Self {
        if value.is_zero() {
            self.mul.remove(&(x, y));
        } else {
            self.mul.insert((x, y), value);
        }
        self
    }

    pub fn set_comul(&mut self, x: BasisId, value: TensorElement) -> &mut Self {
        if value.is_zero() {
            self.comul.remove(&x);
        } else {
            self.comul.insert(x, value);
        }
        self
    }

    pub fn set_unit(&mut self, unit: Element) -> &mut Self {
        self.unit = unit;
        self
    }

    pub fn set_counit(&mut self, x: BasisId, value: Scalar) -> &mut Self {
        if value.is_zero() {
            self.counit.remove(&x);
        } else {
            self.counit.insert(x, value);
        }
        self
    }

    pub fn set_grading(&mut self, degree: BTreeMap<BasisId, u32>, cap: Option<u32>) -> &mut Self {
        self.grading = Some(Grading { degree, cap });
        self
    }

    /// Freezes the tables. Fails with `E_BASIS` if any table mentions a symbol
    /// outside the basis and with `E_GRADING` if a grading is present and the
    /// tables do not respect it.
    pub fn build(self) -> Result<AlgebraPresentation> {
        let members = self.basis;
        let cells = self.cells;
        let check = |b: &BasisId| -> Result<()> {
            if members.contains(b) {
                Ok(())
            } else {
                Err(Error::Basis(cells.render(*b)))
            }
        };
        for ((x, y), v) in &self.mul {
            check(x)?;
            check(y)?;
            v.keys().try_for_each(check)?;
        }
        for (x, v) in &self.comul {
            check(x)?;
            for (l, r) in v.keys() {
                check(l)?;
                check(r)?;
            }
        }
        self.unit.keys().try_for_each(check)?;
        self.counit.keys().try_for_each(check)?;

        if let Some(g) = &self.grading {
            let deg = |b: &BasisId| -> Result<u32> {
                g.degree
                    .get(b)
                    .copied()
                    .ok_or_else(|| Error::Grading(format!("{} has no degree", cells.render(*b))))
            };
            for b in &members {
                deg(b)?;
            }
            for ((x, y), v) in &self.mul {
                let expected = deg(x)? + deg(y)?;
                for z in v.keys() {
                    if deg(z)? != expected {
                        return Err(Error::Grading(format!(
                            "{} * {} has a term {} of the wrong degree",
                            cells.render(*x),
                            cells.render(*y),
                            cells.render(*z)
                        )));
                    }
                }
                if let Some(cap) = g.cap {
                    if expected > cap {
                        return Err(Error::Grading(format!(
                            "{} * {} exceeds the degree cap {cap}",
                            cells.render(*x),
                            cells.render(*y)
                        )));
                    }
                }
            }
            for (x, v) in &self.comul {
                let d = deg(x)?;
                for (l, r) in v.keys() {
                    if deg(l)? != d || deg(r)? != d {
                        return Err(Error::Grading(format!(
                            "comultiplication of {} leaves degree {d}",
                            cells.render(*x)
                        )));
                    }
                }
            }
            for u in self.unit.keys() {
                if deg(u)? != 0 {
                    return Err(Error::Grading("unit has a term of positive degree".into()));
                }
            }
        }

        Ok(AlgebraPresentation {
            basis: members.iter().copied().collect(),
            members,
            cells,
            mul: self.mul,
            comul: self.comul,
            unit: self.unit,
            counit: self.counit,
            grading: self.grading,
        })
    }
}

impl AlgebraPresentation {
    pub fn cells(&self) -> &CellUniverse {
        &self.cells
    }

    /// Basis in `BasisId` order.
    pub fn basis(&self) -> &[BasisId] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, b: &BasisId) -> bool {
        self.members.contains(b)
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    pub fn degree(&self, b: BasisId) -> Option<u32> {
        self.grading.as_ref().and_then(|g| g.degree.get(&b).copied())
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.grading.as_ref().and_then(|g| g.cap)
    }

    /// False when the summed degree of `tuple` exceeds the truncation cap, i.e.
    /// products of these basis elements may have been cut off.
    pub fn within_cap(&self, tuple: &[BasisId]) -> bool {
        match &self.grading {
            Some(Grading {
                degree,
                cap: Some(cap),
            }) => {
                let total: u32 = tuple.iter().map(|b| degree.get(b).copied().unwrap_or(0)).sum();
                total <= *cap
            }
            _ => true,
        }
    }

    /// Basis elements grouped by degree (a single group when ungraded).
    pub fn degree_components(&self) -> BTreeMap<u32, Vec<BasisId>> {
        let mut out: BTreeMap<u32, Vec<BasisId>> = BTreeMap::new();
        for &b in &self.basis {
            out.entry(self.degree(b).unwrap_or(0)).or_default().push(b);
        }
        out
    }

    pub fn mul_table(&self) -> &BTreeMap<(BasisId, BasisId), Element> {
        &self.mul
    }

    pub fn comul_table(&self) -> &BTreeMap<BasisId, TensorElement> {
        &self.comul
    }

    pub fn counit_table(&self) -> &BTreeMap<BasisId, Scalar> {
        &self.counit
    }

    pub fn render(&self, b: BasisId) -> String {
        self.cells.render(b)
    }

    fn check_element(&self, x: &Element) -> Result<()> {
        for b in x.keys() {
            if !self.contains(b) {
                return Err(Error::Basis(self.cells.render(*b)));
            }
        }
        Ok(())
    }

    /// Product of two basis symbols. Assumes both belong to the basis.
    pub fn mul_basis(&self, x: BasisId, y: BasisId) -> Element {
        self.mul.get(&(x, y)).cloned().unwrap_or_default()
    }

    pub fn comul_basis(&self, x: BasisId) -> TensorElement {
        self.comul.get(&x).cloned().unwrap_or_default()
    }

    pub fn counit_basis(&self, x: BasisId) -> Scalar {
        self.counit.get(&x).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Bilinear extension of the multiplication table.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in x {
            for (b, cb) in y {
                if let Some(prod) = self.mul.get(&(*a, *b)) {
                    out.add_scaled(prod, &(ca * cb));
                }
            }
        }
        out
    }

    /// Linear extension of the comultiplication table.
    pub fn comultiply(&self, x: &Element) -> Result<TensorElement> {
        self.check_element(x)?;
        let mut out = TensorElement::zero();
        for (a, ca) in x {
            if let Some(d) = self.comul.get(a) {
                out.add_scaled(d, ca);
            }
        }
        Ok(out)
    }

    /// Linear extension of the counit.
    pub fn counit_of(&self, x: &Element) -> Result<Scalar> {
        self.check_element(x)?;
        Ok(x.iter().map(|(b, c)| c * &self.counit_basis(*b)).sum())
    }

    /// Product in `A (x) A`: `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn multiply_tensor(&self, s: &TensorElement, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((a, b), cs) in s {
            for ((c, d), ct) in t {
                let left = self.mul_basis(*a, *c);
                if left.is_zero() {
                    continue;
                }
                let right = self.mul_basis(*b, *d);
                let coeff = cs * ct;
                for (l, cl) in &left {
                    for (r, cr) in &right {
                        out.add_term((*l, *r), &(cl * cr) * &coeff);
                    }
                }
            }
        }
        out
    }

    /// Product in `A (x) A (x) A`, componentwise.
    pub fn multiply_tensor3(&self, s: &Tensor3Element, t: &Tensor3Element) -> Tensor3Element {
        let mut out = Tensor3Element::zero();
        for ((a, b, c), cs) in s {
            for ((x, y, z), ct) in t {
                let first = self.mul_basis(*a, *x);
                if first.is_zero() {
                    continue;
                }
                let second = self.mul_basis(*b, *y);
                if second.is_zero() {
                    continue;
                }
                let third = self.mul_basis(*c, *z);
                let coeff = cs * ct;
                for (p, cp) in &first {
                    for (q, cq) in &second {
                        let pq = &(cp * cq) * &coeff;
                        for (r, cr) in &third {
                            out.add_term((*p, *q, *r), &pq * cr);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(Delta (x) 1) t`.
    pub fn comul_left(&self, t: &TensorElement) -> Tensor3Element {
        let mut out = Tensor3Element::zero();
        for ((a, b), c) in t {
            for ((l, r), cd) in &self.comul_basis(*a) {
                out.add_term((*l, *r, *b), c * cd);
            }
        }
        out
    }

    /// `(1 (x) Delta) t`.
    pub fn comul_right(&self, t: &TensorElement) -> Tensor3Element {
        let mut out = Tensor3Element::zero();
        for ((a, b), c) in t {
            for ((l, r), cd) in &self.comul_basis(*b) {
                out.add_term((*a, *l, *r), c * cd);
            }
        }
        out
    }

    /// `Delta_3 = (Delta (x) 1) Delta`.
    pub fn comultiply3(&self, x: &Element) -> Result<Tensor3Element> {
        Ok(self.comul_left(&self.comultiply(x)?))
    }

    /// `mu_3 = mu (mu (x) 1)`.
    pub fn multiply3(&self, t: &Tensor3Element) -> Element {
        let mut out = Element::zero();
        for ((a, b, c), coeff) in t {
            let ab = self.mul_basis(*a, *b);
            if ab.is_zero() {
                continue;
            }
            let abc = self.mul_unchecked(&ab, &Element::basis(*c));
            out.add_scaled(&abc, coeff);
        }
        out
    }

    /// `(eps (x) 1) t`.
    pub fn counit_left(&self, t: &TensorElement) -> Element {
        let mut out = Element::zero();
        for ((a, b), c) in t {
            out.add_term(*b, c * &self.counit_basis(*a));
        }
        out
    }

    /// `(1 (x) eps) t`.
    pub fn counit_right(&self, t: &TensorElement) -> Element {
        let mut out = Element::zero();
        for ((a, b), c) in t {
            out.add_term(*a, c * &self.counit_basis(*b));
        }
        out
    }
}

/// Linear endomorphism given on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearEndo {
    images: BTreeMap<BasisId, Element>,
}

impl LinearEndo {
    pub fn new(images: BTreeMap<BasisId, Element>) -> Self {
        LinearEndo { images }
    }

    pub fn image(&self, b: BasisId) -> Option<&Element> {
        self.images.get(&b)
    }

    pub fn images(&self) -> &BTreeMap<BasisId, Element> {
        &self.images
    }

    /// Whether every basis element of `alg` has an image inside `alg`.
    pub fn is_total_on(&self, alg: &AlgebraPresentation) -> bool {
        alg.basis().iter().all(|b| {
            self.images
                .get(b)
                .is_some_and(|img| img.keys().all(|k| alg.contains(k)))
        })
    }

    /// Linear extension. Symbols without an image fail with `E_BASIS`.
    pub fn apply(&self, x: &Element, cells: &CellUniverse) -> Result<Element> {
        let mut out = Element::zero();
        for (b, c) in x {
            let img = self
                .images
                .get(b)
                .ok_or_else(|| Error::Basis(cells.render(*b)))?;
            out.add_scaled(img, c);
        }
        Ok(out)
    }

    /// `(1 (x) S (x) 1) t`, skipping symbols without an image.
    pub fn apply_middle(&self, t: &Tensor3Element) -> Tensor3Element {
        let mut out = Tensor3Element::zero();
        for ((a, b, c), coeff) in t {
            if let Some(img) = self.images.get(b) {
                for (s, cs) in img {
                    out.add_term((*a, *s, *c), coeff * cs);
                }
            }
        }
        out
    }
}
