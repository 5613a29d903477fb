//! tri(S) for the para-Cayley algebras and its splitting 14 + 7 + 7.

use cayley_gradings::composition::{octonions, split_octonions};
use cayley_gradings::lie::tri_decomposition;
use cayley_gradings::scalars::Rational;

fn main() {
    for (name, c) in [("O", octonions::<Rational>()), ("Os", split_octonions())] {
        let d = tri_decomposition(&c).unwrap();
        let injective: Vec<bool> = (0..3).map(|k| d.tri.projection_is_injective(k)).collect();
        println!("tri(para-{name}): dim {}, projections injective {injective:?}", d.tri.dim());
        for (fam, s) in d.families() {
            println!("  {fam}: dim {}", s.dim());
        }
        print!("{}", d.verify());
    }
}
