//! Translating `Z2`-equivariant stable cohomotopy of a point with twisted
//! coefficients into nonequivariant cohomotopy of projective space.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::hurewicz::{hurewicz_analysis, HurewiczAnalysis, MAX_K};
use super::page::Mode;
use super::AhssError;
use crate::abelian::AbelianGroup;

/// `π^i_{Z2}(R̃^d)` rewritten as `π^{i-1}(RP^{d-1})` together with whatever is
/// known about that group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonequivariantGroupDescriptor {
    pub i: i64,
    pub d: u32,
    /// Cohomotopy degree `i - 1`.
    pub degree: i64,
    /// Codimension `d - i` of the degree below the top cell.
    pub k: i64,
    pub label: String,
    pub equivariant_label: String,
    /// Candidate groups; `None` when `k` is past the supported range.
    pub group_bound: Option<BTreeSet<AbelianGroup>>,
    pub group: Option<AbelianGroup>,
    pub hurewicz: Option<HurewiczAnalysis>,
}

pub fn equivariant_to_nonequivariant(i: i64, d: u32, mode: Mode) -> Result<NonequivariantGroupDescriptor, AhssError> {
    if i <= 1 {
        return Err(AhssError::IndexTooSmall(i));
    }
    if d < 2 {
        return Err(AhssError::InvalidDimension(d));
    }
    let degree = i - 1;
    let k = d as i64 - i;
    let (group_bound, hurewicz) = if k < 0 {
        (Some(BTreeSet::from([AbelianGroup::trivial()])), None)
    } else if k <= MAX_K as i64 {
        let analysis = hurewicz_analysis(d, k as u32, mode)?;
        (Some(analysis.cohomotopy_bound.clone()), Some(analysis))
    } else {
        (None, None)
    };
    let group = group_bound.as_ref().filter(|b| b.len() == 1).and_then(|b| b.iter().next().cloned());
    Ok(NonequivariantGroupDescriptor {
        i,
        d,
        degree,
        k,
        label: format!("π^{degree}(RP^{})", d - 1),
        equivariant_label: format!("π^{i}_{{Z2,H}}(*;R̃^{d})"),
        group_bound,
        group,
        hurewicz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let g = equivariant_to_nonequivariant(5, 6, Mode::FullSq2).unwrap();
        assert_eq!(g.label, "π^4(RP^5)");
        assert_eq!(g.equivariant_label, "π^5_{Z2,H}(*;R̃^6)");
        assert_eq!(g.k, 1);
        assert_eq!(g.degree, 4);
    }

    #[test]
    fn top_degree_matches_cohomology() {
        let g = equivariant_to_nonequivariant(6, 6, Mode::FullSq2).unwrap();
        assert_eq!(g.group, Some("Z".parse().unwrap()));
        let g = equivariant_to_nonequivariant(7, 7, Mode::FullSq2).unwrap();
        assert_eq!(g.group, Some("Z2".parse().unwrap()));
    }

    #[test]
    fn above_dimension_is_zero() {
        let g = equivariant_to_nonequivariant(9, 6, Mode::FullSq2).unwrap();
        assert_eq!(g.group, Some(AbelianGroup::trivial()));
        assert!(g.hurewicz.is_none());
    }

    #[test]
    fn unsupported_range() {
        let g = equivariant_to_nonequivariant(3, 10, Mode::FullSq2).unwrap();
        assert!(g.group_bound.is_none());
        assert_eq!(equivariant_to_nonequivariant(1, 6, Mode::FullSq2), Err(AhssError::IndexTooSmall(1)));
    }
}
