//! Exact structure-constant engine for Hall-fusion algebras `B(p,q)` and
//! their graded face versions.
//!
//! The crate builds presentations from promonoidal (or procategory)
//! dimension data, audits every algebra, coalgebra, bialgebra and antipode
//! axiom by brute force over exact rationals, and evaluates the coend
//! conditions on the data as contraction identities so the two can be
//! compared.
//!
//! ```
//! use hfx_core::{catalog_get, AuditOptions};
//!
//! let entry = catalog_get("z3-endo").unwrap();
//! let report = entry.run(&AuditOptions::default()).unwrap();
//! assert!(!report.any_fail());
//! ```

pub mod algebra;
pub mod audit;
pub mod basis;
pub mod catalog;
pub mod element;
pub mod error;
pub mod facemodel;
pub mod hallfusion;
pub mod io;
pub mod scalar;
pub mod suite;

pub use algebra::{AlgebraPresentation, Grading, LinearEndo, PresentationBuilder};
pub use audit::{
    audit_algebra, audit_antipode, audit_bialgebra_compat, audit_coalgebra, AuditOptions, AuditReport, Axiom,
    AxiomResult, Status, Value, Witness,
};
pub use basis::{BasisId, CellId, CellUniverse};
pub use catalog::{
    catalog_get, cyclic_table, gen_endo_group, gen_fusion_ring, gen_group_delta, CatalogEntry, EntrySource,
    Mismatch, CATALOG_NAMES,
};
pub use element::{tensor, Combination, Element, Tensor3Element, TensorElement};
pub use error::{Error, Result};
pub use facemodel::{
    audit_face, build_face_algebra, face_idempotents, graph_to_procategory, DirectedGraph, FaceIdempotents,
    OneCell, ProcategoryDimData,
};
pub use hallfusion::{
    build_antipode, build_hall_fusion, check_all_contractions, check_antipode_contraction,
    check_compat_contraction, check_counit_contraction, check_vn_contractions, compute_q3, tensor_promonoidal,
    validate_promonoidal, AntipodeMap, Condition, ConditionResult, ContractionReport, DimCategory,
    HallFusionSpec, PromonoidalDimData, Violation,
};
pub use scalar::Scalar;
pub use suite::{run_face, run_graph, run_vertex, SuiteReport};
