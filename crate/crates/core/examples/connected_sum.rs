//! Connected sum of a twisted and an untwisted datum: index bookkeeping,
//! the smashed class and the vanishing prediction.

use cohomotopy::ahss::Mode;
use cohomotopy::fourmanifold::{connected_sum, enriques, k3, sw_vanishing_prediction, xhat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for x1 in [enriques(), xhat(1)] {
        let x2 = k3();
        let sum = connected_sum(&x1, &x2, Mode::FullSq2)?;
        let r = &sum.report;
        println!("{}: d = {}, k = {}", sum.composite.name, r.d, r.k);
        println!("  class {}", sum.class);
        if let Some(t) = &r.target {
            println!("  {} = {}", t.equivariant_label, t.label);
        }
        if let Some(kernel) = r.kernel() {
            println!("  Hurewicz kernel {kernel}");
        }
        println!("  vanishing predicted: {}", sw_vanishing_prediction(&x1, &x2));
    }
    Ok(())
}
