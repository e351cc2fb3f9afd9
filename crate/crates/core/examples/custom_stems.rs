//! Layers a user stem table over the built-in one and compares E3 pages.

use cohomotopy::ahss::{apply_d2, build_e2, render_table, Mode, StemTable};

const TABLE: &str = "\
# q|factors|label
-3|8|ν'
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let custom = StemTable::standard_with(TABLE)?;
    for (q, entry) in custom.entries() {
        let origin = if entry.user_supplied { "user" } else { "built-in" };
        println!("q={q:<3} {:<4} {:<4} {origin}", entry.group.to_string(), entry.label);
    }
    for stems in [StemTable::standard(), custom] {
        let e3 = apply_d2(&build_e2(10, &stems, -3, Mode::FullSq2)?)?;
        println!("\n{}", render_table(&e3));
    }
    Ok(())
}
