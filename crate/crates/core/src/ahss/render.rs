//! Text and JSON output for spectral sequence pages.

use super::page::{Bidegree, CellKind, SpectralSequencePage};
use crate::abelian::AbelianGroup;

fn cell_text(kind: &CellKind) -> String {
    match kind {
        CellKind::Exact(g) => g.to_string(),
        CellKind::SubquotientOf(g) if *g == AbelianGroup::cyclic(2) => "*".to_string(),
        CellKind::SubquotientOf(g) => format!("*{g}"),
    }
}

/// A grid with rows `q = 0, -1, ...` from top to bottom and columns
/// `p = 0, 1, ...` from left to right. Entries are right-aligned; `*` marks a
/// cell known only up to a subquotient of `Z2`, `*G` of a larger group `G`.
pub fn render_table(page: &SpectralSequencePage) -> String {
    if page.cells.is_empty() {
        return String::new();
    }
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec![format!("E{}", page.page_index)];
    header.extend(page.columns().map(|p| p.to_string()));
    grid.push(header);
    for q in page.rows() {
        let mut row = vec![format!("q={q}")];
        for p in page.columns() {
            let value = page.get(Bidegree::new(p, q)).expect("rows and columns lie in the window");
            row.push(cell_text(&value.kind));
        }
        grid.push(row);
    }
    let ncols = grid[0].len();
    let widths: Vec<usize> =
        (0..ncols).map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{}{}", " ".repeat(w - s.chars().count()), s))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_json(page: &SpectralSequencePage) -> String {
    page.to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ahss::{apply_d2, build_e2, Mode, StemTable};

    #[test]
    fn table_layout() {
        let e2 = build_e2(4, &StemTable::standard(), -1, Mode::FullSq2).unwrap();
        let text = render_table(&e2);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "  E2  0  1  2  3");
        assert_eq!(lines[1], " q=0  Z  0 Z2  Z");
        assert_eq!(lines[2], "q=-1 Z2 Z2 Z2 Z2");
    }

    #[test]
    fn stars_for_undetermined_cells() {
        let e3 = apply_d2(&build_e2(8, &StemTable::standard(), -3, Mode::Anchored).unwrap()).unwrap();
        let text = render_table(&e3);
        assert!(text.starts_with("  E3"));
        assert!(text.contains('*'));
        assert!(text.contains("*Z24"));
    }

    #[test]
    fn empty_page_renders_nothing() {
        let mut e2 = build_e2(4, &StemTable::standard(), 0, Mode::FullSq2).unwrap();
        e2.cells.clear();
        assert_eq!(render_table(&e2), "");
    }

    #[test]
    fn json_round_trip() {
        let e3 = apply_d2(&build_e2(10, &StemTable::standard(), -3, Mode::FullSq2).unwrap()).unwrap();
        let back = SpectralSequencePage::from_json(&render_json(&e3)).unwrap();
        assert_eq!(back, e3);
    }
}
