//! Index bookkeeping for `Pin^-(2)` monopole invariants of 4-manifolds with a
//! `Spin^{c-}` structure.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::AbelianGroup;
use crate::ahss::{equivariant_to_nonequivariant, AhssError, Mode, NonequivariantGroupDescriptor};
use crate::burnside::{res_s1_to_z2, BurnsideElement, EquivariantClassDescriptor, RepresentationDescriptor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("IndexNotIntegral: c1sq - sigma = {0} is not divisible by 4")]
    IndexNotIntegral(i64),
    #[error("HypothesisViolated: {0}")]
    HypothesisViolated(String),
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Ahss(#[from] AhssError),
}

/// Topological data of a `Spin^{c-}` structure. For untwisted data the
/// `_l` fields hold the ordinary Betti numbers and `c1sq` is `c_1(s)^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinCMinusDatum {
    #[serde(default)]
    pub name: String,
    pub twisted: bool,
    pub b1l: u32,
    pub bplus_l: u32,
    pub sigma: i64,
    pub c1sq: i64,
}

impl SpinCMinusDatum {
    pub fn twisted(name: impl Into<String>, b1l: u32, bplus_l: u32, sigma: i64, c1sq: i64) -> Self {
        SpinCMinusDatum { name: name.into(), twisted: true, b1l, bplus_l, sigma, c1sq }
    }

    pub fn untwisted(name: impl Into<String>, b1: u32, bplus: u32, sigma: i64, c1sq: i64) -> Self {
        SpinCMinusDatum { name: name.into(), twisted: false, b1l: b1, bplus_l: bplus, sigma, c1sq }
    }

    /// `b_0(X; l)`: twisted local coefficients on a connected manifold have no
    /// global sections.
    pub fn b0l(&self) -> i64 {
        if self.twisted {
            0
        } else {
            1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReportFlag {
    SWVanishes,
    IntegerValuedInvariantAvailable,
    ChamberDependent,
}

impl fmt::Display for ReportFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFlag::SWVanishes => "SWVanishes",
            ReportFlag::IntegerValuedInvariantAvailable => "IntegerValuedInvariantAvailable",
            ReportFlag::ChamberDependent => "ChamberDependent",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// Real index of the Dirac operator.
    pub d: i64,
    /// Expected dimension of the moduli space.
    pub dc: i64,
    pub k: i64,
    /// Where the invariant lives, when the reduction to projective space applies.
    pub target: Option<NonequivariantGroupDescriptor>,
    pub flags: BTreeSet<ReportFlag>,
}

impl InvariantReport {
    pub fn group(&self) -> Option<&AbelianGroup> {
        self.target.as_ref().and_then(|t| t.group.as_ref())
    }

    pub fn kernel(&self) -> Option<&AbelianGroup> {
        self.target.as_ref().and_then(|t| t.hurewicz.as_ref()).and_then(|h| h.kernel())
    }
}

pub fn dirac_index(datum: &SpinCMinusDatum) -> Result<i64, ManifoldError> {
    let numerator = datum.c1sq - datum.sigma;
    if numerator % 4 != 0 {
        return Err(ManifoldError::IndexNotIntegral(numerator));
    }
    Ok(numerator / 4)
}

/// `d(c) = ind - (b_0(X;l) - b_1(X;l) + b^+(X;l))`.
pub fn moduli_dimension(datum: &SpinCMinusDatum) -> Result<i64, ManifoldError> {
    Ok(dirac_index(datum)? - (datum.b0l() - datum.b1l as i64 + datum.bplus_l as i64))
}

fn reduction_applies(datum: &SpinCMinusDatum, d: i64) -> Result<(), String> {
    if !datum.twisted {
        return Err("datum is untwisted".to_string());
    }
    if datum.b1l != 0 {
        return Err(format!("b1l = {} must be 0", datum.b1l));
    }
    if datum.bplus_l <= 1 {
        return Err(format!("bplus_l = {} must exceed 1", datum.bplus_l));
    }
    if d < 2 {
        return Err(format!("index d = {d} must be at least 2"));
    }
    Ok(())
}

/// Index data for any datum, with the target group attached when the
/// reduction to `RP^{d-1}` applies.
pub fn report(datum: &SpinCMinusDatum, mode: Mode) -> Result<InvariantReport, ManifoldError> {
    let d = dirac_index(datum)?;
    let dc = moduli_dimension(datum)?;
    let k = d - datum.bplus_l as i64;
    let target = match reduction_applies(datum, d) {
        Ok(()) => Some(equivariant_to_nonequivariant(datum.bplus_l as i64, d as u32, mode)?),
        Err(_) => None,
    };
    let mut flags = BTreeSet::new();
    let infinite_top = target
        .as_ref()
        .and_then(|t| t.hurewicz.as_ref())
        .is_some_and(|h| h.cohomology == AbelianGroup::z());
    if k == 0 && infinite_top {
        flags.insert(ReportFlag::IntegerValuedInvariantAvailable);
    }
    if datum.bplus_l == 1 {
        flags.insert(ReportFlag::ChamberDependent);
    }
    Ok(InvariantReport { d, dc, k, target, flags })
}

pub fn target_group(datum: &SpinCMinusDatum, mode: Mode) -> Result<InvariantReport, ManifoldError> {
    let d = dirac_index(datum)?;
    reduction_applies(datum, d).map_err(ManifoldError::HypothesisViolated)?;
    report(datum, mode)
}

/// Descriptor of the invariant as a map of representation spheres. Twisted
/// data give `R̃^d -> R^{b+}`; untwisted data restricted from the circle
/// carry an extra trivial summand on both sides.
pub fn class_descriptor(datum: &SpinCMinusDatum) -> Result<EquivariantClassDescriptor, ManifoldError> {
    let d = dirac_index(datum)?;
    let twisted_dim = u32::try_from(d).map_err(|_| ManifoldError::PreconditionViolated(format!("index {d} is negative")))?;
    let b0 = datum.b0l() as u32;
    let label = if datum.twisted { format!("[μ_{}]", datum.name) } else { format!("Res[μ_{}]", datum.name) };
    Ok(EquivariantClassDescriptor::new(
        RepresentationDescriptor::new(b0, twisted_dim),
        RepresentationDescriptor::new(b0 + datum.bplus_l, 0),
        label,
    ))
}

/// Vanishing of the invariant of `x1 # x2`. `false` means no conclusion.
pub fn sw_vanishing_prediction(x1: &SpinCMinusDatum, x2: &SpinCMinusDatum) -> bool {
    let first_regime = x1.twisted && x1.b1l >= 1;
    let product_regime = x1.twisted && x1.b1l == 0 && !x2.twisted && x2.b1l == 0;
    let second_side = x2.bplus_l >= 1;
    (first_regime || product_regime) && second_side
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedSum {
    pub composite: SpinCMinusDatum,
    pub class: EquivariantClassDescriptor,
    /// Restriction of the circle-equivariant class when it is a multiple of
    /// the identity in `π^0_{S^1}(*)`.
    pub restriction: Option<BurnsideElement>,
    pub report: InvariantReport,
}

pub fn connected_sum(x1: &SpinCMinusDatum, x2: &SpinCMinusDatum, mode: Mode) -> Result<ConnectedSum, ManifoldError> {
    if !x1.twisted || x2.twisted {
        return Err(ManifoldError::PreconditionViolated(
            "first summand must be twisted and second untwisted".to_string(),
        ));
    }
    if x1.b1l != 0 {
        return Err(ManifoldError::PreconditionViolated(format!(
            "b1l = {} on the twisted summand is outside the supported gluing",
            x1.b1l
        )));
    }
    if x2.b1l != 0 {
        return Err(ManifoldError::PreconditionViolated(format!("b1 = {} on the untwisted summand must be 0", x2.b1l)));
    }
    dirac_index(x1)?;
    let d2 = dirac_index(x2)?;
    if d2 % 2 != 0 {
        return Err(ManifoldError::PreconditionViolated(format!(
            "untwisted index {d2} is odd, so it is not a complex index"
        )));
    }
    let composite = SpinCMinusDatum {
        name: format!("{}#{}", x1.name, x2.name),
        twisted: true,
        b1l: 0,
        bplus_l: x1.bplus_l + x2.bplus_l,
        sigma: x1.sigma + x2.sigma,
        c1sq: x1.c1sq + x2.c1sq,
    };
    let class = class_descriptor(x1)?.smash(&class_descriptor(x2)?);
    let restriction = (d2 == 0 && x2.bplus_l == 0).then(|| res_s1_to_z2(1));
    let mut report = report(&composite, mode)?;
    if sw_vanishing_prediction(x1, x2) {
        report.flags.insert(ReportFlag::SWVanishes);
    }
    Ok(ConnectedSum { composite, class, restriction, report })
}

/// Values a catalog entry is expected to reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedReport {
    pub d: i64,
    pub dc: i64,
    pub k: i64,
    pub group: Option<AbelianGroup>,
    pub kernel: Option<AbelianGroup>,
    pub flags: BTreeSet<ReportFlag>,
}

impl ExpectedReport {
    pub fn matches(&self, r: &InvariantReport) -> bool {
        self.d == r.d
            && self.dc == r.dc
            && self.k == r.k
            && self.group.as_ref() == r.group()
            && self.kernel.as_ref() == r.kernel()
            && self.flags == r.flags
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub datum: SpinCMinusDatum,
    pub aliases: Vec<String>,
    /// The two summands when the entry is a connected sum.
    pub summands: Option<(SpinCMinusDatum, SpinCMinusDatum)>,
    pub class_label: Option<String>,
    pub expected: ExpectedReport,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    pub fn recompute(&self, mode: Mode) -> Result<InvariantReport, ManifoldError> {
        match &self.summands {
            Some((x1, x2)) => Ok(connected_sum(x1, x2, mode)?.report),
            None => report(&self.datum, mode),
        }
    }

    pub fn answers_to(&self, name: &str) -> bool {
        self.datum.name.eq_ignore_ascii_case(name) || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
    }
}

fn expected(d: i64, dc: i64, k: i64, group: Option<&str>, kernel: Option<&str>, flags: &[ReportFlag]) -> ExpectedReport {
    let parse = |s: &str| s.parse::<AbelianGroup>().expect("catalog groups parse");
    ExpectedReport {
        d,
        dc,
        k,
        group: group.map(parse),
        kernel: kernel.map(parse),
        flags: flags.iter().copied().collect(),
    }
}

pub fn enriques() -> SpinCMinusDatum {
    SpinCMinusDatum::twisted("Enriques", 0, 2, -8, 0)
}

pub fn xhat(m: u32) -> SpinCMinusDatum {
    let n = 4 * m + 2;
    SpinCMinusDatum::twisted(format!("X̂({n})"), 0, n, -4 * n as i64, 0)
}

pub fn k3() -> SpinCMinusDatum {
    SpinCMinusDatum::untwisted("K3", 0, 3, -16, 0)
}

pub fn s4() -> SpinCMinusDatum {
    SpinCMinusDatum::untwisted("S4", 0, 0, 0, 0)
}

pub fn catalog() -> Vec<CatalogEntry> {
    use ReportFlag::*;
    let mut out = vec![CatalogEntry {
        datum: enriques(),
        aliases: vec!["N".to_string()],
        summands: None,
        class_label: Some("generator f: R̃^2 -> R^2".to_string()),
        expected: expected(2, 0, 0, Some("Z"), Some("0"), &[IntegerValuedInvariantAvailable]),
        notes: vec![
            "sigma = -8 from b+ = 1, b- = 9; c1sq = 0 since the canonical class is torsion".to_string(),
            "the invariant generates Z; on unit spheres it is nonequivariantly a map of degree 2".to_string(),
        ],
    }];
    for m in 1..=4 {
        let datum = xhat(m);
        let n = 4 * m as i64 + 2;
        out.push(CatalogEntry {
            aliases: vec![format!("Xhat({n})")],
            summands: None,
            class_label: Some(format!("collapse RP^{} -> S^{}", n - 2, n - 1)),
            expected: expected(n, 0, 0, Some("Z"), Some("0"), &[IntegerValuedInvariantAvailable]),
            notes: vec![
                format!("sigma and c1sq are calibrated so that (c1sq - sigma)/4 = {n}"),
                "integer invariant ±binom(2m,0) = ±1, so the class is a generator".to_string(),
            ],
            datum,
        });
    }
    out.push(CatalogEntry {
        datum: k3(),
        aliases: vec!["K".to_string()],
        summands: None,
        class_label: Some("Hopf-type generator".to_string()),
        expected: expected(4, 0, 1, None, None, &[]),
        notes: vec![
            "spin structure: sigma = -16, c1 = 0; real index 4 is C^2".to_string(),
            "the circle-equivariant class g: (R⊕C^2)^+ -> (R^4)^+ is nonequivariantly the Hopf map".to_string(),
        ],
    });
    out.push(CatalogEntry {
        datum: s4(),
        aliases: vec!["S^4".to_string()],
        summands: None,
        class_label: Some("identity".to_string()),
        expected: expected(0, -1, 0, None, None, &[]),
        notes: vec!["the class restricts to [pt] in the Burnside ring".to_string()],
    });
    let sum = connected_sum(&enriques(), &k3(), Mode::FullSq2).expect("catalog summands satisfy the gluing hypotheses");
    out.push(CatalogEntry {
        datum: sum.composite,
        aliases: vec!["K3#N".to_string(), "N#K3".to_string(), "K#N".to_string()],
        summands: Some((enriques(), k3())),
        class_label: Some(sum.class.label),
        expected: expected(6, 1, 1, None, Some("Z2"), &[SWVanishes]),
        notes: vec![
            "class f∧Res g in π^5_{Z2}(R̃^6), which corresponds to π^4(RP^5)".to_string(),
            "whether the underlying nonequivariant class is nontrivial is not decided".to_string(),
        ],
    });
    out
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.answers_to(name))
}
