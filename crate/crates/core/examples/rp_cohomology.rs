//! Cohomology of real projective space and the action of Sq^1, Sq^2.

use cohomotopy::rpcohomology::{cohomology_rp, sq, CoefficientGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 7;
    let integral = CoefficientGroup::integers();
    let mod2 = CoefficientGroup::mod_n(2)?;
    println!("p   H^p(RP^{n};Z)  H^p(RP^{n};Z2)  Sq1  Sq2");
    for p in 0..=n {
        println!(
            "{p:<3} {:<13} {:<15} {:<4} {}",
            cohomology_rp(n, p as i64, &integral).to_string(),
            cohomology_rp(n, p as i64, &mod2).to_string(),
            u8::from(sq(1, p, n).value),
            u8::from(sq(2, p, n).value),
        );
    }
    Ok(())
}
