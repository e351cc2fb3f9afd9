//! `E_2` and `E_3` pages of the spectral sequence
//! `H^p(RP^{d-1}; π^q_st) => π^{p+q}_st(RP^{d-1})`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::stems::StemTable;
use super::AhssError;
use crate::abelian::{kernel_mod_image, AbelianGroup, GroupHom};
use crate::rpcohomology::{cohomology_rp_any, sq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub p: i64,
    pub q: i64,
}

impl Bidegree {
    pub const fn new(p: i64, q: i64) -> Self {
        Bidegree { p, q }
    }

    /// Target of a `d_r` differential leaving this bidegree.
    pub const fn shift(self, r: i64) -> Self {
        Bidegree { p: self.p + r, q: self.q - r + 1 }
    }

    /// Source of a `d_r` differential arriving at this bidegree.
    pub const fn source_of(self, r: i64) -> Self {
        Bidegree { p: self.p - r, q: self.q + r - 1 }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Which `d_2` differentials below row 0 are treated as known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Only the row-0 differential (`Sq^2` on the mod-2 reduction) is used.
    Anchored,
    /// Rows -1 and -2 also use the `Sq^2`-detected multiplication by `η`.
    #[default]
    #[serde(rename = "full")]
    FullSq2,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Anchored => "anchored",
            Mode::FullSq2 => "full",
        })
    }
}

/// Differential rules a cell value can depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    /// Row 0 to row -1: `Sq^2` composed with reduction mod 2.
    #[serde(rename = "d2.sq2-reduction")]
    Sq2Reduction,
    /// Row -1 to row -2: multiplication by `η`, detected by `Sq^2`.
    #[serde(rename = "d2.eta-sq2")]
    EtaSq2,
    /// Row -2 to row -3: `Sq^2` followed by the inclusion of 2-torsion.
    #[serde(rename = "d2.eta2-sq2-torsion")]
    Eta2Sq2Torsion,
    /// A differential left undetermined.
    #[serde(rename = "d2.unresolved")]
    Unresolved,
}

impl RuleId {
    /// Rules that go beyond the row-0 differential.
    pub fn is_assumed(self) -> bool {
        matches!(self, RuleId::EtaSq2 | RuleId::Eta2Sq2Torsion)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Sq2Reduction => "d2.sq2-reduction",
            RuleId::EtaSq2 => "d2.eta-sq2",
            RuleId::Eta2Sq2Torsion => "d2.eta2-sq2-torsion",
            RuleId::Unresolved => "d2.unresolved",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "group")]
pub enum CellKind {
    Exact(AbelianGroup),
    /// The true value is some subquotient of the carried group.
    SubquotientOf(AbelianGroup),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellValue {
    #[serde(flatten)]
    pub kind: CellKind,
    #[serde(default)]
    pub provenance: BTreeSet<RuleId>,
}

impl CellValue {
    pub fn exact(group: AbelianGroup) -> Self {
        CellValue { kind: CellKind::Exact(group), provenance: BTreeSet::new() }
    }

    pub fn as_exact(&self) -> Option<&AbelianGroup> {
        match &self.kind {
            CellKind::Exact(g) => Some(g),
            CellKind::SubquotientOf(_) => None,
        }
    }

    /// The exact value or the ambient group of the bound.
    pub fn ambient(&self) -> &AbelianGroup {
        match &self.kind {
            CellKind::Exact(g) | CellKind::SubquotientOf(g) => g,
        }
    }

    pub fn is_known_zero(&self) -> bool {
        self.ambient().is_trivial()
    }

    pub fn uses_assumed_rule(&self) -> bool {
        self.provenance.iter().any(|r| r.is_assumed())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageCell {
    pub p: i64,
    pub q: i64,
    #[serde(flatten)]
    pub value: CellValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemRow {
    pub q: i64,
    pub group: AbelianGroup,
    pub label: String,
    pub standard: bool,
}

/// A page over `RP^{d-1}` on the window `0 <= p <= d-1`, `q_min <= q <= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralSequencePage {
    pub d: u32,
    pub page_index: u8,
    pub q_min: i64,
    pub mode: Mode,
    pub stems: Vec<StemRow>,
    /// Rows from `q = 0` downwards, columns ascending.
    pub cells: Vec<PageCell>,
}

/// A `d_2` map, or the marker that it is left undetermined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Differential {
    Known { map: GroupHom, rule: Option<RuleId> },
    Unknown,
}

impl Differential {
    fn zero(source: AbelianGroup, target: AbelianGroup) -> Self {
        Differential::Known { map: GroupHom::zero(source, target), rule: None }
    }

    pub fn map(&self) -> Option<&GroupHom> {
        match self {
            Differential::Known { map, .. } => Some(map),
            Differential::Unknown => None,
        }
    }

    fn rule(&self) -> Option<RuleId> {
        match self {
            Differential::Known { rule, .. } => *rule,
            Differential::Unknown => Some(RuleId::Unresolved),
        }
    }
}

impl SpectralSequencePage {
    /// Top cell dimension `d - 1` of the base space.
    pub fn top(&self) -> i64 {
        self.d as i64 - 1
    }

    pub fn in_window(&self, b: Bidegree) -> bool {
        (0..=self.top()).contains(&b.p) && (self.q_min..=0).contains(&b.q)
    }

    /// True where the page is zero for structural reasons: outside the
    /// columns of the base space or above row 0.
    pub fn outside_space(&self, b: Bidegree) -> bool {
        b.p < 0 || b.p > self.top() || b.q > 0
    }

    fn index(&self, b: Bidegree) -> usize {
        ((-b.q) * self.d as i64 + b.p) as usize
    }

    pub fn get(&self, b: Bidegree) -> Option<&CellValue> {
        self.in_window(b).then(|| &self.cells[self.index(b)].value)
    }

    /// True when the cell is zero on this page, including structurally zero
    /// positions. Cells below the window are not known.
    pub fn is_known_zero(&self, b: Bidegree) -> bool {
        if self.outside_space(b) {
            return true;
        }
        self.get(b).is_some_and(CellValue::is_known_zero)
    }

    pub fn stem_row(&self, q: i64) -> Option<&StemRow> {
        self.stems.iter().find(|r| r.q == q)
    }

    fn standard_rows(&self, qs: &[i64]) -> bool {
        qs.iter().all(|&q| self.stem_row(q).is_some_and(|r| r.standard))
    }

    pub fn columns(&self) -> impl Iterator<Item = i64> {
        0..self.d as i64
    }

    pub fn rows(&self) -> impl Iterator<Item = i64> {
        (self.q_min..=0).rev()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("page serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, AhssError> {
        let page: SpectralSequencePage =
            serde_json::from_str(text).map_err(|e| AhssError::Malformed(e.to_string()))?;
        let expected = page.d as usize * (1 - page.q_min) as usize;
        let ordered = page
            .cells
            .iter()
            .enumerate()
            .all(|(i, c)| page.in_window(Bidegree::new(c.p, c.q)) && page.index(Bidegree::new(c.p, c.q)) == i);
        if page.cells.len() != expected || !ordered {
            return Err(AhssError::Malformed("cells do not tile the window".to_string()));
        }
        Ok(page)
    }
}

/// The `E_2` page `E_2^{p,q} = H^p(RP^{d-1}; π^q_st)`.
pub fn build_e2(d: u32, stems: &StemTable, q_min: i64, mode: Mode) -> Result<SpectralSequencePage, AhssError> {
    if d < 2 {
        return Err(AhssError::InvalidDimension(d));
    }
    if q_min > 0 {
        return Err(AhssError::InvalidWindow(q_min));
    }
    let n = d - 1;
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for q in (q_min..=0).rev() {
        let entry = stems.entry(q).ok_or(AhssError::StemTableIncomplete { q })?;
        rows.push(StemRow {
            q,
            group: entry.group.clone(),
            label: entry.label.clone(),
            standard: stems.is_standard_row(q),
        });
        for p in 0..=n as i64 {
            let group = cohomology_rp_any(n, p, &entry.group);
            cells.push(PageCell { p, q, value: CellValue::exact(group) });
        }
    }
    Ok(SpectralSequencePage { d, page_index: 2, q_min, mode, stems: rows, cells })
}

/// The `d_2` leaving `source` on an `E_2` page.
///
/// Row 0 maps by `Sq^2` on the mod-2 reduction. In [`Mode::FullSq2`] rows -1
/// and -2 map by the `Sq^2` coefficient as well, into the 2-torsion of the
/// target on row -3. Anything else is [`Differential::Unknown`].
pub fn d2_rule(e2: &SpectralSequencePage, source: Bidegree, mode: Mode) -> Result<Differential, AhssError> {
    let target = source.shift(2);
    if !e2.in_window(source) {
        return Err(AhssError::OutOfWindow(source));
    }
    if !e2.in_window(target) {
        return Err(AhssError::OutOfWindow(target));
    }
    let src = e2.get(source).expect("in window").ambient().clone();
    let tgt = e2.get(target).expect("in window").ambient().clone();
    if src.is_trivial() || tgt.is_trivial() {
        return Ok(Differential::zero(src, tgt));
    }
    let n = e2.top() as u32;
    let coefficient = i64::from(sq(2, source.p as u32, n).value);
    let known = |multiplier: i64, rule| -> Result<Differential, AhssError> {
        let map = GroupHom::cyclic(src.clone(), tgt.clone(), coefficient * multiplier)?;
        Ok(Differential::Known { map, rule: Some(rule) })
    };
    match source.q {
        0 if e2.standard_rows(&[0, -1]) => known(1, RuleId::Sq2Reduction),
        -1 if mode == Mode::FullSq2 && e2.standard_rows(&[-1, -2]) => known(1, RuleId::EtaSq2),
        -2 if mode == Mode::FullSq2 && e2.standard_rows(&[-2, -3]) => {
            // generator of Z2 goes to the element of order 2
            let order = tgt.order().expect("row -3 is finite");
            known((order / 2) as i64, RuleId::Eta2Sq2Torsion)
        }
        _ => Ok(Differential::Unknown),
    }
}

/// The `d_2` arriving at or leaving `b`, including the structural zeros at
/// the edges of the window.
fn incident(e2: &SpectralSequencePage, b: Bidegree, outgoing: bool, mode: Mode) -> Result<Differential, AhssError> {
    let (source, target) = if outgoing { (b, b.shift(2)) } else { (b.source_of(2), b) };
    let group_at = |x: Bidegree| e2.get(x).map(|c| c.ambient().clone()).unwrap_or_default();
    if e2.outside_space(source) || e2.outside_space(target) {
        return Ok(Differential::zero(group_at(source), group_at(target)));
    }
    if !e2.in_window(target) {
        // target row lies below the stem window
        return Ok(if group_at(source).is_trivial() {
            Differential::zero(group_at(source), AbelianGroup::trivial())
        } else {
            Differential::Unknown
        });
    }
    d2_rule(e2, source, mode)
}

/// Passes from `E_2` to `E_3` using the page's mode.
pub fn apply_d2(e2: &SpectralSequencePage) -> Result<SpectralSequencePage, AhssError> {
    if e2.page_index != 2 {
        return Err(AhssError::WrongPage(e2.page_index));
    }
    let mode = e2.mode;
    let mut cells = Vec::with_capacity(e2.cells.len());
    for cell in &e2.cells {
        let b = Bidegree::new(cell.p, cell.q);
        let here = cell.value.ambient().clone();
        let incoming = incident(e2, b, false, mode)?;
        let outgoing = incident(e2, b, true, mode)?;
        let provenance: BTreeSet<RuleId> = [incoming.rule(), outgoing.rule()].into_iter().flatten().collect();
        let kind = match (incoming.map(), outgoing.map()) {
            (Some(i), Some(o)) => CellKind::Exact(kernel_mod_image(i, o)?),
            (Some(i), None) => CellKind::SubquotientOf(i.cokernel()),
            (None, Some(o)) => CellKind::SubquotientOf(o.kernel()),
            (None, None) => CellKind::SubquotientOf(here),
        };
        let kind = match kind {
            CellKind::SubquotientOf(g) if g.is_trivial() => CellKind::Exact(g),
            k => k,
        };
        cells.push(PageCell { p: cell.p, q: cell.q, value: CellValue { kind, provenance } });
    }
    Ok(SpectralSequencePage { page_index: 3, cells, ..e2.clone() })
}
