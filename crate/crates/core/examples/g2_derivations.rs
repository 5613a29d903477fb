//! Der(O) and Der(Os) with their Killing forms.

use cayley_gradings::composition::{octonions, split_octonions};
use cayley_gradings::lie::derivations;
use cayley_gradings::scalars::Rational;

fn main() {
    for (name, c) in [("O", octonions::<Rational>()), ("Os", split_octonions())] {
        let der = derivations(&c).unwrap();
        let k = der.killing_form().unwrap();
        println!("Der({name}): dim {}, Killing inertia {:?}", der.dim(), k.inertia());
    }
}
