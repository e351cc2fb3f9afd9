//! Kernel and cokernel of the Hurewicz map for k = 0, 1, 2 over a range of d.

use cohomotopy::ahss::{hurewicz_analysis, Mode};

fn show(set: &std::collections::BTreeSet<cohomotopy::abelian::AbelianGroup>) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    if items.len() == 1 { items[0].clone() } else { format!("{{{}}}", items.join(", ")) }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<4} {:<3} {:<18} {:<10} {:<16} exact", "d", "k", "kernel", "cokernel", "cohomotopy");
    for d in 8..=16 {
        for k in 0..=2 {
            let a = hurewicz_analysis(d, k, Mode::FullSq2)?;
            println!(
                "{d:<4} {k:<3} {:<18} {:<10} {:<16} {}",
                show(&a.kernel_bound),
                show(&a.cokernel_bound),
                show(&a.cohomotopy_bound),
                a.exact
            );
        }
    }
    Ok(())
}
