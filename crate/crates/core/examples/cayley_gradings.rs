//! Gradings on the real Cayley algebras: constructors, admissible sign maps
//! and the induced gradings on G2.

use cayley_gradings::composition::{octonions, split_cayley_good_basis};
use cayley_gradings::gradings::{admissible_sign_maps, cartan_grading, cd_grading, verify_grading, CayleyKind};
use cayley_gradings::groups::FinAbGroup;
use cayley_gradings::lie::induced_grading_on_der;
use cayley_gradings::scalars::Rational;

fn main() {
    for k in [2usize, 3] {
        let g = FinAbGroup::new(0, vec![2; k]).unwrap();
        let mus = admissible_sign_maps(CayleyKind::Os, &g, &g.generators()).unwrap();
        println!("|T| = {}: {} admissible sign maps over Os", 1 << k, mus.len());
    }

    let o = octonions::<Rational>();
    let z2_3 = FinAbGroup::new(0, vec![2, 2, 2]).unwrap();
    let full = cd_grading(&o, &z2_3, &z2_3.generators()).unwrap();
    println!("Gamma_O(Z2^3) verifies: {}", verify_grading(&full, &o).passed());
    let (_, dg) = induced_grading_on_der(&o, &full).unwrap();
    println!("induced on Der(O): dims {:?}", dg.dims());

    let c = split_cayley_good_basis::<Rational>();
    let z2 = FinAbGroup::free(2);
    let (a, b) = (z2.generator(0), z2.generator(1));
    let gamma = [a.clone(), b.clone(), z2.neg(&z2.add(&a, &b).unwrap()).unwrap()];
    let cartan = cartan_grading::<Rational>(&z2, &gamma).unwrap();
    println!("Cartan verifies: {}", verify_grading(&cartan, &c).passed());
    let (_, dg) = induced_grading_on_der(&c, &cartan).unwrap();
    println!("induced on Der(Os): census {:?}", dg.dim_census());
}
