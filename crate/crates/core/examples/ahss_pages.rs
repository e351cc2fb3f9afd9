//! E2 and E3 pages of the Atiyah-Hirzebruch spectral sequence for RP^{d-1}.
//!
//! `cargo run --example ahss_pages -- 14`

use cohomotopy::ahss::{apply_d2, build_e2, render_table, Mode, StemTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(14);
    let stems = StemTable::standard();
    for mode in [Mode::Anchored, Mode::FullSq2] {
        let e2 = build_e2(d, &stems, -3, mode)?;
        let e3 = apply_d2(&e2)?;
        println!("d = {d}, mode {mode}\n");
        println!("{}", render_table(&e2));
        println!("{}", render_table(&e3));
    }
    Ok(())
}
