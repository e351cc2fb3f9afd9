//! The Atiyah-Hirzebruch spectral sequence for stable cohomotopy of real
//! projective space, through the `E_3` page.

mod equivariant;
mod hurewicz;
mod page;
mod render;
mod stems;

use thiserror::Error;

use crate::abelian::AbelianError;

pub use equivariant::{equivariant_to_nonequivariant, NonequivariantGroupDescriptor};
pub use hurewicz::{hurewicz_analysis, hurewicz_analysis_with, Caveat, HurewiczAnalysis, MAX_K};
pub use page::{
    apply_d2, build_e2, d2_rule, Bidegree, CellKind, CellValue, Differential, Mode, PageCell, RuleId,
    SpectralSequencePage, StemRow,
};
pub use render::{render_json, render_table};
pub use stems::{StemEntry, StemParseError, StemTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AhssError {
    #[error("InvalidDimension: d = {0} must be at least 2")]
    InvalidDimension(u32),
    #[error("InvalidWindow: lowest row {0} must be <= 0")]
    InvalidWindow(i64),
    #[error("StemTableIncomplete: no stem group for row {q}")]
    StemTableIncomplete { q: i64 },
    #[error("OutOfWindow: bidegree {0} is outside the page")]
    OutOfWindow(Bidegree),
    #[error("WrongPage: expected an E2 page, found E{0}")]
    WrongPage(u8),
    #[error("Malformed: {0}")]
    Malformed(String),
    #[error("UnsupportedK: k = {0} exceeds the supported range 0..=2")]
    UnsupportedK(u32),
    #[error("IndexTooSmall: i = {0} must be greater than 1")]
    IndexTooSmall(i64),
    #[error("DegreeOutOfRange: k = {k} leaves no degree for d = {d}")]
    DegreeOutOfRange { d: u32, k: u32 },
    #[error("Unbounded: cell {0} has no finite list of subquotients")]
    UnboundedCell(Bidegree),
    #[error(transparent)]
    Group(#[from] AbelianError),
    #[error(transparent)]
    StemParse(#[from] StemParseError),
}
