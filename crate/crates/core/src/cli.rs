//! Command-line front end. [`run`] does all the work and returns the exit
//! status with both output streams so it can be driven from tests.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::abelian::AbelianGroup;
use crate::ahss::{
    apply_d2, build_e2, hurewicz_analysis_with, render_table, AhssError, Caveat, HurewiczAnalysis, Mode, RuleId,
    SpectralSequencePage, StemTable,
};
use crate::fourmanifold::{catalog, catalog_entry, connected_sum, report, InvariantReport, ManifoldError, SpinCMinusDatum};

#[derive(Parser, Debug)]
#[command(name = "cohomotopy", version, about = "Stable cohomotopy of RP^n and Pin^-(2) monopole bookkeeping")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the E2 or E3 page for RP^{d-1}.
    Ahss {
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = PageArg::E3)]
        page: PageArg,
        #[command(flatten)]
        common: Common,
    },
    /// Kernel and cokernel of the Hurewicz map in degree d-1-k.
    Hurewicz {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        common: Common,
    },
    /// The k = 0, 1, 2 classification for a range of d.
    LemmaTable {
        #[arg(long, default_value_t = 4)]
        d_min: u32,
        #[arg(long)]
        d_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Index data and target group for one manifold.
    Manifold {
        #[arg(long, default_value = "X")]
        name: String,
        #[arg(long)]
        twisted: bool,
        #[arg(long, default_value_t = 0)]
        b1l: u32,
        #[arg(long, allow_negative_numbers = true)]
        bplusl: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        sigma: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        c1sq: Option<i64>,
        /// JSON file holding a datum; replaces the numeric flags.
        #[arg(long, conflicts_with_all = ["bplusl", "sigma", "c1sq", "twisted"])]
        datum: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Connected sum of a twisted and an untwisted summand.
    Consum {
        /// Catalog name or JSON datum file.
        #[arg(long)]
        x1: String,
        #[arg(long)]
        x2: String,
        #[command(flatten)]
        common: Common,
    },
    /// The built-in examples and their recomputed reports.
    Catalog {
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long, value_enum, default_value_t = ModeArg::Full)]
    mode: ModeArg,
    /// Extra stem rows, one `q|factors|label` per line.
    #[arg(long)]
    stems: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PageArg {
    E2,
    E3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Anchored,
    Full,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Anchored => Mode::Anchored,
            ModeArg::Full => Mode::FullSq2,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Ahss(AhssError),
    Manifold(ManifoldError),
}

impl From<AhssError> for CliError {
    fn from(e: AhssError) -> Self {
        CliError::Ahss(e)
    }
}

impl From<ManifoldError> for CliError {
    fn from(e: ManifoldError) -> Self {
        match e {
            ManifoldError::Ahss(a) => CliError::Ahss(a),
            e => CliError::Manifold(e),
        }
    }
}

/// Leading identifier of a `Debug` rendering, which is the variant name.
fn variant_name(debug: &str) -> String {
    debug.split(|c: char| !c.is_alphanumeric() && c != '_').next().unwrap_or_default().to_string()
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    fn name(&self) -> String {
        match self {
            CliError::Usage(_) => "UsageError".to_string(),
            CliError::Ahss(AhssError::Group(g)) => variant_name(&format!("{g:?}")),
            CliError::Ahss(AhssError::StemParse(_)) => "StemParseError".to_string(),
            CliError::Ahss(e) => variant_name(&format!("{e:?}")),
            CliError::Manifold(e) => variant_name(&format!("{e:?}")),
        }
    }

    fn message(&self) -> String {
        let text = match self {
            CliError::Usage(s) => s.clone(),
            CliError::Ahss(e) => e.to_string(),
            CliError::Manifold(e) => e.to_string(),
        };
        let name = self.name();
        if text.starts_with(&name) {
            text
        } else {
            format!("{name}: {text}")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutput { code: 0, stdout: text, stderr: String::new() },
                _ => CliOutput { code: 2, stdout: String::new(), stderr: format!("UsageError: {text}") },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => CliOutput { code: 0, stdout, stderr: String::new() },
        Err(e) => CliOutput { code: e.code(), stdout: String::new(), stderr: format!("{}\n", e.message()) },
    }
}

fn load_stems(path: Option<&Path>) -> Result<StemTable, CliError> {
    match path {
        Some(p) => Ok(StemTable::load(p).map_err(AhssError::from)?),
        None => Ok(StemTable::standard()),
    }
}

fn envelope(command: &str, inputs: Value, result: impl Serialize, caveats: &BTreeSet<String>, provenance: &BTreeSet<RuleId>) -> String {
    let doc = json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "caveats": caveats,
        "provenance": provenance.iter().map(|r| r.as_str()).collect::<Vec<_>>(),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("output serializes");
    text.push('\n');
    text
}

fn bound_text(set: &BTreeSet<AbelianGroup>) -> String {
    match set.len() {
        1 => set.iter().next().expect("one element").to_string(),
        _ => format!("{{{}}}", set.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
    }
}

fn caveat_strings(caveats: &BTreeSet<Caveat>) -> BTreeSet<String> {
    caveats.iter().map(ToString::to_string).collect()
}

fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::Ahss { d, page, common } => ahss(d, page, &common),
        Command::Hurewicz { d, k, common } => hurewicz(d, k, &common),
        Command::LemmaTable { d_min, d_max, common } => lemma_table(d_min, d_max, &common),
        Command::Manifold { name, twisted, b1l, bplusl, sigma, c1sq, datum, common } => {
            let datum = match datum {
                Some(path) => read_datum(&path)?,
                None => {
                    let missing = |flag: &str| CliError::Usage(format!("--{flag} is required without --datum"));
                    SpinCMinusDatum {
                        name,
                        twisted,
                        b1l,
                        bplus_l: bplusl.ok_or_else(|| missing("bplusl"))?,
                        sigma: sigma.ok_or_else(|| missing("sigma"))?,
                        c1sq: c1sq.ok_or_else(|| missing("c1sq"))?,
                    }
                }
            };
            manifold(datum, &common)
        }
        Command::Consum { x1, x2, common } => consum(&x1, &x2, &common),
        Command::Catalog { name, common } => catalog_cmd(name.as_deref(), &common),
    }
}

fn ahss(d: u32, which: PageArg, common: &Common) -> Result<String, CliError> {
    let stems = load_stems(common.stems.as_deref())?;
    let mode = Mode::from(common.mode);
    let e2 = build_e2(d, &stems, stems.lowest_contiguous(), mode)?;
    let page = match which {
        PageArg::E2 => e2,
        PageArg::E3 => apply_d2(&e2)?,
    };
    let provenance: BTreeSet<RuleId> = page.cells.iter().flat_map(|c| c.value.provenance.iter().copied()).collect();
    let mut caveats = BTreeSet::new();
    if mode == Mode::FullSq2 && provenance.iter().any(|r| r.is_assumed()) {
        caveats.insert(Caveat::AssumedRuleUsed.to_string());
    }
    Ok(match common.format {
        Format::Table => {
            let mut out = render_table(&page);
            for c in &caveats {
                writeln!(out, "caveat: {c}").expect("write to string");
            }
            out
        }
        Format::Json => envelope(
            "ahss",
            json!({"d": d, "page": page.page_index, "mode": mode}),
            &page,
            &caveats,
            &provenance,
        ),
    })
}

/// Re-renders the page carried in an `ahss --format json` document.
pub fn table_from_json(document: &str) -> Result<String, String> {
    let doc: Value = serde_json::from_str(document).map_err(|e| e.to_string())?;
    let page = doc.get("result").ok_or("missing result")?;
    let page = SpectralSequencePage::from_json(&page.to_string()).map_err(|e| e.to_string())?;
    Ok(render_table(&page))
}

fn hurewicz_text(a: &HurewiczAnalysis) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "d = {}, k = {}, degree {}, mode {}", a.d, a.k, a.degree, a.mode).unwrap();
    writeln!(w, "cohomology: {}", a.cohomology).unwrap();
    writeln!(w, "kernel: {}", bound_text(&a.kernel_bound)).unwrap();
    writeln!(w, "cokernel: {}", bound_text(&a.cokernel_bound)).unwrap();
    writeln!(w, "cohomotopy: {}", bound_text(&a.cohomotopy_bound)).unwrap();
    writeln!(w, "exact: {}", if a.exact { "yes" } else { "no" }).unwrap();
    for c in &a.caveats {
        writeln!(w, "caveat: {c}").unwrap();
    }
    out
}

fn hurewicz(d: u32, k: u32, common: &Common) -> Result<String, CliError> {
    let stems = load_stems(common.stems.as_deref())?;
    let mode = Mode::from(common.mode);
    let a = hurewicz_analysis_with(d, k, mode, &stems)?;
    Ok(match common.format {
        Format::Table => hurewicz_text(&a),
        Format::Json => envelope(
            "hurewicz",
            json!({"d": d, "k": k, "mode": mode}),
            &a,
            &caveat_strings(&a.caveats),
            &a.provenance,
        ),
    })
}

fn parity_class(d: u32) -> String {
    let m = d / 2;
    let m_parity = if m.is_multiple_of(2) { "even" } else { "odd" };
    if d.is_multiple_of(2) {
        format!("2m, m={m} {m_parity}")
    } else {
        format!("2m+1, m={m} {m_parity}")
    }
}

fn lemma_table(d_min: u32, d_max: u32, common: &Common) -> Result<String, CliError> {
    if d_min < 2 || d_min > d_max {
        return Err(CliError::Usage(format!("need 2 <= --d-min <= --d-max, got {d_min}..{d_max}")));
    }
    let stems = load_stems(common.stems.as_deref())?;
    let mode = Mode::from(common.mode);
    let mut rows = Vec::new();
    for d in d_min..=d_max {
        for k in 0..=2 {
            if k + 1 > d {
                continue;
            }
            rows.push(hurewicz_analysis_with(d, k, mode, &stems)?);
        }
    }
    Ok(match common.format {
        Format::Table => {
            let header = ["d", "class", "k", "kernel", "cokernel", "exact", "caveats"].map(String::from).to_vec();
            let mut grid = vec![header];
            for a in &rows {
                grid.push(vec![
                    a.d.to_string(),
                    parity_class(a.d),
                    a.k.to_string(),
                    bound_text(&a.kernel_bound),
                    bound_text(&a.cokernel_bound),
                    if a.exact { "yes" } else { "no" }.to_string(),
                    a.caveats.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
                ]);
            }
            left_aligned(&grid)
        }
        Format::Json => {
            let caveats: BTreeSet<String> = rows.iter().flat_map(|a| caveat_strings(&a.caveats)).collect();
            let provenance: BTreeSet<RuleId> = rows.iter().flat_map(|a| a.provenance.iter().copied()).collect();
            envelope(
                "lemma-table",
                json!({"d_min": d_min, "d_max": d_max, "mode": mode}),
                &rows,
                &caveats,
                &provenance,
            )
        }
    })
}

fn left_aligned(grid: &[Vec<String>]) -> String {
    let cols = grid.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols).map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in grid {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn read_datum(path: &Path) -> Result<SpinCMinusDatum, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn resolve_datum(source: &str) -> Result<SpinCMinusDatum, CliError> {
    if let Some(entry) = catalog_entry(source) {
        if entry.summands.is_none() {
            return Ok(entry.datum);
        }
    }
    let path = Path::new(source);
    if path.exists() {
        return read_datum(path);
    }
    Err(CliError::Usage(format!("{source:?} is neither a catalog entry nor a datum file")))
}

fn report_caveats(r: &InvariantReport) -> (BTreeSet<String>, BTreeSet<RuleId>) {
    match r.target.as_ref().and_then(|t| t.hurewicz.as_ref()) {
        Some(h) => (caveat_strings(&h.caveats), h.provenance.clone()),
        None => (BTreeSet::new(), BTreeSet::new()),
    }
}

fn report_text(name: &str, r: &InvariantReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "{name}: d = {}, d(c) = {}, k = {}", r.d, r.dc, r.k).unwrap();
    match &r.target {
        Some(t) => {
            writeln!(w, "group: {} = {}", t.equivariant_label, t.label).unwrap();
            match &t.group_bound {
                Some(b) => writeln!(w, "value: {}", bound_text(b)).unwrap(),
                None => writeln!(w, "value: unknown for k = {}", t.k).unwrap(),
            }
            if let Some(h) = &t.hurewicz {
                writeln!(w, "hurewicz kernel: {}", bound_text(&h.kernel_bound)).unwrap();
                writeln!(w, "hurewicz cokernel: {}", bound_text(&h.cokernel_bound)).unwrap();
                writeln!(w, "exact: {}", if h.exact { "yes" } else { "no" }).unwrap();
                for c in &h.caveats {
                    writeln!(w, "caveat: {c}").unwrap();
                }
            }
        }
        None => writeln!(w, "group: not reduced to projective space").unwrap(),
    }
    for f in &r.flags {
        writeln!(w, "flag: {f}").unwrap();
    }
    out
}

fn manifold(datum: SpinCMinusDatum, common: &Common) -> Result<String, CliError> {
    let r = report(&datum, common.mode.into())?;
    Ok(match common.format {
        Format::Table => report_text(&datum.name, &r),
        Format::Json => {
            let (caveats, provenance) = report_caveats(&r);
            envelope("manifold", json!(datum), &r, &caveats, &provenance)
        }
    })
}

fn consum(x1: &str, x2: &str, common: &Common) -> Result<String, CliError> {
    let (a, b) = (resolve_datum(x1)?, resolve_datum(x2)?);
    let sum = connected_sum(&a, &b, common.mode.into())?;
    Ok(match common.format {
        Format::Table => {
            let mut out = report_text(&sum.composite.name, &sum.report);
            writeln!(out, "class: {}", sum.class).unwrap();
            writeln!(out, "class group: {}", sum.class.group_home_label()).unwrap();
            if let Some(r) = sum.restriction {
                writeln!(out, "restriction: {r}").unwrap();
            }
            out
        }
        Format::Json => {
            let (caveats, provenance) = report_caveats(&sum.report);
            envelope("consum", json!({"x1": a, "x2": b}), &sum, &caveats, &provenance)
        }
    })
}

fn catalog_cmd(name: Option<&str>, common: &Common) -> Result<String, CliError> {
    let entries = match name {
        Some(n) => vec![catalog_entry(n).ok_or_else(|| CliError::Usage(format!("no catalog entry {n:?}")))?],
        None => catalog(),
    };
    let mode = common.mode.into();
    let mut reports = Vec::new();
    for e in &entries {
        reports.push(e.recompute(mode)?);
    }
    Ok(match common.format {
        Format::Table => {
            let mut out = String::new();
            for (e, r) in entries.iter().zip(&reports) {
                out.push_str(&report_text(&e.datum.name, r));
                if let Some(label) = &e.class_label {
                    writeln!(out, "class: {label}").unwrap();
                }
                for n in &e.notes {
                    writeln!(out, "note: {n}").unwrap();
                }
                writeln!(out, "matches expected: {}", if e.expected.matches(r) { "yes" } else { "no" }).unwrap();
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut caveats = BTreeSet::new();
            let mut provenance = BTreeSet::new();
            let result: Vec<Value> = entries
                .iter()
                .zip(&reports)
                .map(|(e, r)| {
                    let (c, p) = report_caveats(r);
                    caveats.extend(c);
                    provenance.extend(p);
                    json!({"entry": e, "report": r, "matches_expected": e.expected.matches(r)})
                })
                .collect();
            envelope("catalog", json!({"name": name, "mode": mode}), result, &caveats, &provenance)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &str) -> CliOutput {
        run(std::iter::once("cohomotopy").chain(args.split_whitespace()))
    }

    #[test]
    fn usage_errors_exit_two() {
        let out = go("hurewicz --d 14");
        assert_eq!(out.code, 2);
        assert!(out.stderr.starts_with("UsageError"));
        assert_eq!(go("frobnicate").code, 2);
    }

    #[test]
    fn domain_errors_exit_one() {
        let out = go("hurewicz --d 14 --k 3");
        assert_eq!(out.code, 1);
        assert!(out.stderr.starts_with("UnsupportedK"), "{}", out.stderr);
        let out = go("manifold --twisted --bplusl 2 --sigma -7 --c1sq 0");
        assert_eq!(out.code, 1);
        assert!(out.stderr.starts_with("IndexNotIntegral"), "{}", out.stderr);
    }

    #[test]
    fn variant_names() {
        assert_eq!(variant_name("UnsupportedK(3)"), "UnsupportedK");
        assert_eq!(variant_name("DegreeOutOfRange { d: 2, k: 2 }"), "DegreeOutOfRange");
        assert_eq!(variant_name("CompositionNonzero"), "CompositionNonzero");
    }
}
