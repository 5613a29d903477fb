//! Universal groups of gradings, through the Smith normal form.

use cayley_gradings::composition::{octonions, split_cayley_good_basis};
use cayley_gradings::d4::{fine_type_iii, so_target, FineTypeIII};
use cayley_gradings::gradings::{cartan_grading, cd_grading, grading_universal_group};
use cayley_gradings::groups::FinAbGroup;
use cayley_gradings::scalars::Rational;

fn main() {
    let c = split_cayley_good_basis::<Rational>();
    let z2 = FinAbGroup::free(2);
    let (a, b) = (z2.generator(0), z2.generator(1));
    let gamma = [a.clone(), b.clone(), z2.neg(&z2.add(&a, &b).unwrap()).unwrap()];
    let cartan = cartan_grading::<Rational>(&z2, &gamma).unwrap();
    let (u, _) = grading_universal_group(&cartan, &c).unwrap();
    println!("Cartan grading: {}", u.group.primary_name());

    let o = octonions::<Rational>();
    let g = FinAbGroup::new(0, vec![2, 2, 2]).unwrap();
    let full = cd_grading(&o, &g, &g.generators()).unwrap();
    let (u, _) = grading_universal_group(&full, &o).unwrap();
    println!("Gamma_O(Z2^3): {}", u.group.primary_name());

    for which in FineTypeIII::ALL {
        let (model, gr) = fine_type_iii(which).unwrap();
        let (u, _) = grading_universal_group(&gr, &so_target(&model).unwrap()).unwrap();
        println!("{which}: {}", u.group.primary_name());
    }
}
