//! Kernel and cokernel of the Hurewicz map
//! `π^{d-1-k}(RP^{d-1}) -> H^{d-1-k}(RP^{d-1}; Z)` read off the `E_3` page.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::page::{apply_d2, build_e2, d2_rule, Bidegree, CellKind, CellValue, Mode, RuleId, SpectralSequencePage};
use super::stems::StemTable;
use super::AhssError;
use crate::abelian::{extensions, iterated_extensions, subgroup_types, AbelianGroup};

/// Largest `k` supported by the default stem window.
pub const MAX_K: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Caveat {
    /// A `d_r` with `r >= 3` may connect a relevant cell to a nonzero cell.
    PossibleHigherDifferential,
    /// Two or more nonzero filtration quotients stack into the kernel.
    ExtensionAmbiguity,
    /// A differential below row 0 from [`Mode::FullSq2`] was used.
    AssumedRuleUsed,
}

impl fmt::Display for Caveat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Caveat::PossibleHigherDifferential => "PossibleHigherDifferential",
            Caveat::ExtensionAmbiguity => "ExtensionAmbiguity",
            Caveat::AssumedRuleUsed => "AssumedRuleUsed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurewiczAnalysis {
    pub d: u32,
    pub k: u32,
    pub mode: Mode,
    /// Cohomological degree `d - 1 - k`.
    pub degree: u32,
    /// Reduced integral cohomology in that degree, the target of the map.
    pub cohomology: AbelianGroup,
    pub kernel_bound: BTreeSet<AbelianGroup>,
    pub cokernel_bound: BTreeSet<AbelianGroup>,
    /// Possible values of the cohomotopy group itself.
    pub cohomotopy_bound: BTreeSet<AbelianGroup>,
    pub exact: bool,
    pub caveats: BTreeSet<Caveat>,
    pub provenance: BTreeSet<RuleId>,
}

impl HurewiczAnalysis {
    pub fn kernel(&self) -> Option<&AbelianGroup> {
        singleton(&self.kernel_bound)
    }

    pub fn cokernel(&self) -> Option<&AbelianGroup> {
        singleton(&self.cokernel_bound)
    }

    pub fn cohomotopy(&self) -> Option<&AbelianGroup> {
        singleton(&self.cohomotopy_bound)
    }

    /// Orders that the kernel may have.
    pub fn kernel_orders(&self) -> BTreeSet<u64> {
        self.kernel_bound.iter().filter_map(AbelianGroup::order).collect()
    }
}

fn singleton(set: &BTreeSet<AbelianGroup>) -> Option<&AbelianGroup> {
    (set.len() == 1).then(|| set.iter().next().expect("nonempty"))
}

/// Whether some `d_r`, `r >= 3`, may enter or leave `b`.
fn higher_differential_possible(e3: &SpectralSequencePage, b: Bidegree) -> bool {
    let top = e3.top();
    let mut r = 3;
    loop {
        let source = b.source_of(r);
        let target = b.shift(r);
        let source_live = source.q <= 0 && source.p >= 0;
        let target_live = target.p <= top;
        if !source_live && !target_live {
            return false;
        }
        if source_live && !e3.is_known_zero(source) {
            return true;
        }
        if target_live && !e3.is_known_zero(target) {
            return true;
        }
        r += 1;
    }
}

/// Possible `E_∞` groups at a cell.
fn infinity_options(e3: &SpectralSequencePage, b: Bidegree, flags: &mut Flags) -> Result<BTreeSet<AbelianGroup>, AhssError> {
    let cell = e3.get(b).expect("relevant cells lie in the window");
    flags.provenance.extend(cell.provenance.iter().copied());
    if cell.is_known_zero() {
        return Ok(BTreeSet::from([AbelianGroup::trivial()]));
    }
    let base = match &cell.kind {
        CellKind::Exact(g) => BTreeSet::from([g.clone()]),
        CellKind::SubquotientOf(a) => bounded_subgroups(a, b)?,
    };
    if !higher_differential_possible(e3, b) {
        return Ok(base);
    }
    flags.higher = true;
    let mut out = BTreeSet::new();
    for g in &base {
        out.extend(bounded_subgroups(g, b)?);
    }
    Ok(out)
}

fn bounded_subgroups(g: &AbelianGroup, at: Bidegree) -> Result<BTreeSet<AbelianGroup>, AhssError> {
    subgroup_types(g).map_err(|_| AhssError::UnboundedCell(at))
}

#[derive(Default)]
struct Flags {
    higher: bool,
    provenance: BTreeSet<RuleId>,
}

/// Quotients of a cyclic group are cyclic; for other groups no filter applies.
fn could_be_quotient_of(g: &AbelianGroup, ambient: &AbelianGroup) -> bool {
    if !ambient.is_cyclic() {
        return true;
    }
    if !g.is_cyclic() {
        return false;
    }
    match (ambient.order(), g.order()) {
        (Some(n), Some(m)) => n % m == 0,
        (None, _) => true,
        (Some(_), None) => false,
    }
}

pub fn hurewicz_analysis(d: u32, k: u32, mode: Mode) -> Result<HurewiczAnalysis, AhssError> {
    hurewicz_analysis_with(d, k, mode, &StemTable::standard())
}

pub fn hurewicz_analysis_with(d: u32, k: u32, mode: Mode, stems: &StemTable) -> Result<HurewiczAnalysis, AhssError> {
    if k > MAX_K {
        return Err(AhssError::UnsupportedK(k));
    }
    if d < 2 {
        return Err(AhssError::InvalidDimension(d));
    }
    if k + 1 > d {
        return Err(AhssError::DegreeOutOfRange { d, k });
    }
    let q_min = stems.lowest_contiguous();
    if q_min > -(k as i64) {
        return Err(AhssError::StemTableIncomplete { q: q_min - 1 });
    }
    let e2 = build_e2(d, stems, q_min, mode)?;
    let e3 = apply_d2(&e2)?;
    analyse(&e2, &e3, d, k, mode)
}

fn analyse(
    e2: &SpectralSequencePage,
    e3: &SpectralSequencePage,
    d: u32,
    k: u32,
    mode: Mode,
) -> Result<HurewiczAnalysis, AhssError> {
    let degree = d - 1 - k;
    let t = degree as i64;
    let mut flags = Flags::default();
    let edge = Bidegree::new(t, 0);

    // Edge column: reduced cohomology, so column 0 contributes nothing.
    let (cohomology, cokernel_bound, image_options) = if t == 0 {
        let zero = BTreeSet::from([AbelianGroup::trivial()]);
        (AbelianGroup::trivial(), zero.clone(), zero)
    } else {
        let c = e2.get(edge).and_then(CellValue::as_exact).expect("E2 cells are exact").clone();
        let d2_image: BTreeSet<AbelianGroup> = if e3.outside_space(edge.shift(2)) {
            BTreeSet::from([AbelianGroup::trivial()])
        } else if !e2.in_window(edge.shift(2)) {
            bounded_subgroups(&c, edge)?
        } else {
            match d2_rule(e2, edge, mode)?.map() {
                Some(map) => BTreeSet::from([map.image()]),
                None => bounded_subgroups(&c, edge)?,
            }
        };
        let survivors = infinity_options(e3, edge, &mut flags)?;
        let e3_cell = e3.get(edge).expect("edge in window");
        let higher_image: BTreeSet<AbelianGroup> = if flags.higher {
            bounded_subgroups(e3_cell.ambient(), edge)?
        } else {
            BTreeSet::from([AbelianGroup::trivial()])
        };
        let mut cokernels = BTreeSet::new();
        for sub in &higher_image {
            for quot in &d2_image {
                cokernels.extend(extensions(sub, quot)?.into_iter().filter(|g| could_be_quotient_of(g, &c)));
            }
        }
        (c, cokernels, survivors)
    };

    // Kernel: F^{t+1} π^t, with quotients E_∞^{t+j,-j}, deepest first.
    let mut layer_options: Vec<BTreeSet<AbelianGroup>> = Vec::new();
    for j in (1..=k as i64).rev() {
        layer_options.push(infinity_options(e3, Bidegree::new(t + j, -j), &mut flags)?);
    }
    let mut kernel_bound = BTreeSet::new();
    let mut stacked = false;
    for choice in choices(&layer_options) {
        stacked |= choice.iter().filter(|g| !g.is_trivial()).count() >= 2;
        kernel_bound.extend(iterated_extensions(&choice)?);
    }

    let mut cohomotopy_bound = BTreeSet::new();
    for kernel in &kernel_bound {
        for image in &image_options {
            cohomotopy_bound.extend(extensions(kernel, image)?);
        }
    }

    let mut caveats = BTreeSet::new();
    if flags.higher {
        caveats.insert(Caveat::PossibleHigherDifferential);
    }
    if stacked {
        caveats.insert(Caveat::ExtensionAmbiguity);
    }
    if mode == Mode::FullSq2 && flags.provenance.iter().any(|r| r.is_assumed()) {
        caveats.insert(Caveat::AssumedRuleUsed);
    }
    let exact = kernel_bound.len() == 1
        && cokernel_bound.len() == 1
        && !caveats.contains(&Caveat::PossibleHigherDifferential)
        && !caveats.contains(&Caveat::ExtensionAmbiguity);

    Ok(HurewiczAnalysis {
        d,
        k,
        mode,
        degree,
        cohomology,
        kernel_bound,
        cokernel_bound,
        cohomotopy_bound,
        exact,
        caveats,
        provenance: flags.provenance,
    })
}

fn choices(options: &[BTreeSet<AbelianGroup>]) -> Vec<Vec<AbelianGroup>> {
    let mut acc: Vec<Vec<AbelianGroup>> = vec![Vec::new()];
    for opts in options {
        acc = acc
            .iter()
            .flat_map(|prefix| {
                opts.iter().map(move |g| {
                    let mut v = prefix.clone();
                    v.push(g.clone());
                    v
                })
            })
            .collect();
    }
    acc
}
