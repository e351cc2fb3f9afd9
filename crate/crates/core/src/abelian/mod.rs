//! Exact arithmetic for finitely generated abelian groups and the
//! homomorphisms between them.

mod finite;
mod group;
mod hom;
mod matrix;
mod snf;

use thiserror::Error;

pub use finite::{
    extensions, from_primary_parts, groups_of_order, iterated_extensions, primary_parts, subgroup_types,
    MAX_ENUMERATION_ORDER,
};
pub use group::{ext_group, gcd, hom_group, AbelianGroup, FinitelyGeneratedAbelianGroup};
pub use hom::{kernel_mod_image, GroupHom};
pub use matrix::IntegerMatrix;
pub use snf::{cokernel_factors, integer_kernel, lattice_quotient_factors, smith_normal_form, SmithDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("CompositionNonzero: outgoing map composed with incoming map is not zero")]
    CompositionNonzero,
    #[error("matrix shape {found:?} does not match generator counts {expected:?}")]
    DimensionMismatch { expected: (usize, usize), found: (usize, usize) },
    #[error("image of generator {generator} is not killed by its order")]
    NotWellDefined { generator: usize },
    #[error("maps do not compose: {left} vs {right}")]
    Incompatible { left: AbelianGroup, right: AbelianGroup },
    #[error("{0:?} is not an invariant-factor list")]
    NotNormalForm(Vec<u64>),
    #[error("cannot parse group {0:?}")]
    Parse(String),
    #[error("{0} is infinite")]
    Infinite(AbelianGroup),
    #[error("extensions of {quotient} by {sub} are not a finite family")]
    UnboundedExtension { sub: AbelianGroup, quotient: AbelianGroup },
    #[error("group of order {0} is too large to enumerate")]
    TooLarge(u64),
}
