//! Smith normal form, group arithmetic and extension enumeration.

use cohomotopy::abelian::{ext_group, extensions, hom_group, smith_normal_form, subgroup_types, AbelianGroup, IntegerMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&m);
    println!("invariant factors of {m:?}: {:?}", s.invariants);
    assert_eq!(&(&s.left * &m) * &s.right, s.diagonal_matrix());

    let a: AbelianGroup = "Z4⊕Z6⊕Z".parse()?;
    let b: AbelianGroup = "Z2⊕Z3".parse()?;
    println!("Z4⊕Z6⊕Z in invariant factor form: {a}");
    println!("Hom({a}, {b}) = {}", hom_group(&a, &b));
    println!("Ext({a}, {b}) = {}", ext_group(&a, &b));

    let z2: AbelianGroup = "Z2".parse()?;
    let kinds: Vec<String> = extensions(&z2, &z2)?.iter().map(ToString::to_string).collect();
    println!("extensions of Z2 by Z2: {}", kinds.join(", "));
    let subs: Vec<String> = subgroup_types(&"Z2⊕Z4".parse()?)?.iter().map(ToString::to_string).collect();
    println!("subgroup types of Z2⊕Z4: {}", subs.join(", "));
    Ok(())
}
