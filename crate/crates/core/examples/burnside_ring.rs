//! Arithmetic in the Burnside ring of Z2 and smash products of classes.

use cohomotopy::burnside::{res_s1_to_z2, BurnsideElement, EquivariantClassDescriptor, RepresentationDescriptor};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let free = BurnsideElement::FREE;
    println!("[Z2]·[Z2] = {}", free * free);
    let x = BurnsideElement::new(3, 2);
    println!("marks of {x}: {:?}", x.marks());
    println!("from degrees (8, 2): {}", BurnsideElement::from_degrees(8, 2)?);
    if let Err(e) = BurnsideElement::from_degrees(3, 2) {
        println!("from degrees (3, 2): {e}");
    }
    println!("restriction of 5 from S^1: {}", res_s1_to_z2(5));

    let f = EquivariantClassDescriptor::new(RepresentationDescriptor::new(0, 2), RepresentationDescriptor::new(2, 0), "f");
    let g = EquivariantClassDescriptor::new(RepresentationDescriptor::new(1, 4), RepresentationDescriptor::new(4, 0), "g");
    let fg = f.smash(&g);
    println!("{fg}");
    println!("lives in {}", fg.group_home_label());
    Ok(())
}
