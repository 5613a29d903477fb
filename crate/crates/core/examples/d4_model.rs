//! so(Ṽ₀, n) for both Cayley algebras and its comparison with Der_L(V, β, Q).

use cayley_gradings::composition::{octonions, split_octonions};
use cayley_gradings::d4::{der_of_twisted, first_component_span, so_tilde_v0};
use cayley_gradings::scalars::Rational;
use cayley_gradings::twisted::tc_hurwitz;

fn main() {
    for (name, c) in [("O", octonions::<Rational>()), ("Os", split_octonions())] {
        let model = so_tilde_v0(&c).unwrap();
        let der = der_of_twisted(&tc_hurwitz(&c).unwrap()).unwrap();
        let span = first_component_span(&der).unwrap();
        println!(
            "{name}: so(V0) dim {}, inertia {:?}, Der_L(V) dim {}, projection equals so(V0): {}",
            model.lie().dim(),
            model.inertia(),
            der.dim(),
            &span == model.span()
        );
    }
}
