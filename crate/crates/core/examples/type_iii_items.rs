//! One Type III grading of each item over its smallest group, with the
//! h <-> h² isomorphism.

use cayley_gradings::gradings::verify_grading;
use cayley_gradings::scalars::Rational;
use cayley_gradings::twisted::{
    h_square_isomorphism, identity_component_dim, minimal_label, tc_hurwitz, type_iii_iso_decision, TwistedTarget,
    TypeIIIItem,
};

fn main() {
    for item in TypeIIIItem::ALL {
        let label = minimal_label(item).unwrap();
        let (tc, g) = label.realize().unwrap();
        let ok = verify_grading(&g, &TwistedTarget::new(&tc, label.group(), &label.h)).passed();
        println!(
            "{item}: G = {}, verifies {ok}, dim V_e = {}",
            label.group().primary_name(),
            identity_component_dim(&g).unwrap()
        );
    }

    let label = minimal_label(TypeIIIItem::C2).unwrap();
    let mut squared = label.clone();
    squared.h = label.group().mul(2, &label.h).unwrap();
    println!("2.c with h and h^2 isomorphic: {}", type_iii_iso_decision(&label, &squared).unwrap());
    let (c, gc) = label.cayley.realize::<Rational>().unwrap();
    let w = h_square_isomorphism(&tc_hurwitz(&c).unwrap(), &gc, &label.h).unwrap();
    print!("{}", w.report);
}
