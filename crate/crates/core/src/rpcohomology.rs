//! Cellular (co)homology of real projective spaces with cyclic coefficients
//! and the mod-2 Steenrod squares acting on `H*(RP^n; Z2)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{ext_group, hom_group, kernel_mod_image, AbelianGroup, GroupHom};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoefficientError {
    #[error("coefficient group {0} is not cyclic")]
    NotCyclic(AbelianGroup),
    #[error("coefficient group must be nontrivial")]
    Trivial,
}

/// A single cyclic coefficient group, `Z` or `Z/m` with `m >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AbelianGroup", into = "AbelianGroup")]
pub struct CoefficientGroup(AbelianGroup);

impl CoefficientGroup {
    pub fn integers() -> Self {
        CoefficientGroup(AbelianGroup::z())
    }

    pub fn mod_n(n: u64) -> Result<Self, CoefficientError> {
        AbelianGroup::cyclic(n).try_into()
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.0
    }
}

impl TryFrom<AbelianGroup> for CoefficientGroup {
    type Error = CoefficientError;

    fn try_from(g: AbelianGroup) -> Result<Self, Self::Error> {
        match g.generator_count() {
            0 => Err(CoefficientError::Trivial),
            1 => Ok(CoefficientGroup(g)),
            _ => Err(CoefficientError::NotCyclic(g)),
        }
    }
}

impl From<CoefficientGroup> for AbelianGroup {
    fn from(c: CoefficientGroup) -> Self {
        c.0
    }
}

/// Cellular boundary `C_k -> C_{k-1}` of `RP^n`: multiplication by `1 + (-1)^k`.
fn boundary(k: u32) -> GroupHom {
    let factor = if k.is_multiple_of(2) { 2 } else { 0 };
    GroupHom::cyclic(AbelianGroup::z(), AbelianGroup::z(), factor).expect("maps between free groups are well defined")
}

/// `H_p(RP^n; Z)` from the cellular chain complex with one cell per dimension.
pub fn homology_rp(n: u32, p: u32) -> AbelianGroup {
    assert!(n >= 1, "RP^n needs n >= 1");
    if p > n {
        return AbelianGroup::trivial();
    }
    let z = AbelianGroup::z;
    let outgoing = if p == 0 { GroupHom::zero(z(), AbelianGroup::trivial()) } else { boundary(p) };
    let incoming = if p == n { GroupHom::zero(AbelianGroup::trivial(), z()) } else { boundary(p + 1) };
    kernel_mod_image(&incoming, &outgoing).expect("cellular boundaries square to zero")
}

/// `H^p(RP^n; G)` by universal coefficients, `Hom(H_p, G) ⊕ Ext(H_{p-1}, G)`.
pub fn cohomology_rp(n: u32, p: i64, coefficients: &CoefficientGroup) -> AbelianGroup {
    assert!(n >= 1, "RP^n needs n >= 1");
    if p < 0 || p > n as i64 {
        return AbelianGroup::trivial();
    }
    let p = p as u32;
    let g = coefficients.group();
    let hom = hom_group(&homology_rp(n, p), g);
    let ext = if p == 0 { AbelianGroup::trivial() } else { ext_group(&homology_rp(n, p - 1), g) };
    hom.direct_sum(&ext)
}

/// `H^p(RP^n; A)` for an arbitrary finitely generated coefficient group,
/// summing over its cyclic factors.
pub fn cohomology_rp_any(n: u32, p: i64, coefficients: &AbelianGroup) -> AbelianGroup {
    coefficients
        .invariant_factors()
        .iter()
        .map(|&f| {
            let c = CoefficientGroup::try_from(AbelianGroup::cyclic(f)).expect("factors are never 1");
            cohomology_rp(n, p, &c)
        })
        .fold(AbelianGroup::trivial(), |acc, g| acc.direct_sum(&g))
}

/// Coefficient of `Sq^i` on the generator `x^j` of `H^j(RP^n; Z2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteenrodCoefficient {
    pub i: u32,
    pub j: u32,
    pub value: bool,
}

/// `binom(j, i) mod 2` by Lucas' theorem.
pub fn binomial_mod2(j: u32, i: u32) -> bool {
    i <= j && (j & i) == i
}

/// `Sq^i(x^j) = binom(j, i) x^{i+j}`, forced to 0 when `i + j > n`.
pub fn sq(i: u32, j: u32, n: u32) -> SteenrodCoefficient {
    let value = j <= n && i + j <= n && binomial_mod2(j, i);
    SteenrodCoefficient { i, j, value }
}
