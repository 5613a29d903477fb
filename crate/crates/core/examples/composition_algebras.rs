//! The real Hurwitz algebras, their norms and the para-Hurwitz products.

use cayley_gradings::composition::HurwitzKind;
use cayley_gradings::scalars::Rational;

fn main() {
    for kind in HurwitzKind::ALL {
        let a = kind.build::<Rational>();
        let para = a.para_hurwitz().unwrap();
        println!(
            "{:<3} dim {} norm {:?} composition {} associative {} para-Hurwitz symmetric {} identity on 100 pairs {}",
            kind.name(),
            a.dim(),
            a.norm_inertia().unwrap(),
            a.is_composition(),
            a.is_associative(),
            para.is_symmetric_composition(),
            para.symmetric_identity_witness(1, 100).is_none(),
        );
    }
}
