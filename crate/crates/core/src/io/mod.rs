//! Spec-file parsing and report rendering.

mod export;
mod specfile;

pub use export::{
    element_text, render_contractions_text, render_dimensions, render_export, render_report_json, render_report_text, render_table,
    value_text, TableOp,
};
pub use specfile::{parse_spec_file, render_spec_file, SpecFile};
