//! One-call construction plus full audit for each input mode.

use std::collections::BTreeMap;

use crate::algebra::{AlgebraPresentation, LinearEndo};
use crate::audit::{audit_algebra, audit_antipode, audit_bialgebra_compat, audit_coalgebra, AuditOptions, AuditReport, Status};
use crate::error::Result;
use crate::facemodel::{audit_face, build_face_algebra, graph_to_procategory, DirectedGraph, ProcategoryDimData};
use crate::hallfusion::{build_antipode, build_hall_fusion, check_all_contractions, ContractionReport, HallFusionSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub algebra: AlgebraPresentation,
    pub audit: AuditReport,
    /// Present for vertex-mode inputs only.
    pub contractions: Option<ContractionReport>,
    pub antipode: Option<LinearEndo>,
}

impl SuiteReport {
    /// Status of every audited axiom and contraction condition, keyed by id.
    pub fn statuses(&self) -> BTreeMap<String, Status> {
        let mut out = BTreeMap::new();
        for r in &self.audit.results {
            out.insert(r.axiom.id().to_string(), r.status);
        }
        if let Some(c) = &self.contractions {
            for cond in &c.conditions {
                let id = cond.condition.id().to_string();
                let s = out.get(&id).map_or(cond.status, |s: &Status| s.combine(cond.status));
                out.insert(id, s);
            }
        }
        out
    }

    pub fn any_fail(&self) -> bool {
        self.statuses().values().any(|s| *s == Status::Fail)
    }

    /// Drops every axiom result and contraction condition whose id is not
    /// accepted by `keep`. Value tables and warnings are left alone.
    pub fn retain(&mut self, keep: impl Fn(&str) -> bool) {
        self.audit.results.retain(|r| keep(r.axiom.id()));
        if let Some(c) = &mut self.contractions {
            c.conditions.retain(|r| keep(r.condition.id()));
        }
    }
}

/// Builds `B(p,q)` and runs every audit and contraction check. The antipode
/// audits run when the spec carries an antipode map; an invalid map is an
/// `E_SIGMA` error.
pub fn run_vertex(spec: &HallFusionSpec, opts: &AuditOptions) -> Result<SuiteReport> {
    let algebra = build_hall_fusion(spec)?;
    let mut audit = audit_algebra(&algebra, opts);
    audit.merge(audit_coalgebra(&algebra, opts));
    audit.merge(audit_bialgebra_compat(&algebra, opts));
    let antipode = match spec.sigma() {
        Some(_) => {
            let s = build_antipode(spec)?;
            audit.merge(audit_antipode(&algebra, &s, opts));
            Some(s)
        }
        None => None,
    };
    let contractions = Some(check_all_contractions(spec)?);
    Ok(SuiteReport {
        algebra,
        audit,
        contractions,
        antipode,
    })
}

pub fn run_face(pc: &ProcategoryDimData, cap: u32, opts: &AuditOptions) -> Result<SuiteReport> {
    let algebra = build_face_algebra(pc, cap)?;
    let audit = audit_face(&algebra, pc, opts);
    Ok(SuiteReport {
        algebra,
        audit,
        contractions: None,
        antipode: None,
    })
}

pub fn run_graph(g: &DirectedGraph, cap: u32, opts: &AuditOptions) -> Result<SuiteReport> {
    run_face(&graph_to_procategory(g, cap), cap, opts)
}
