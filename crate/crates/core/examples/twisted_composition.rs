//! TC(C̄, R × C): the twisted composition axioms, similitudes, ε and the
//! Albert algebra.

use cayley_gradings::composition::{octonions, split_octonions};
use cayley_gradings::scalars::Rational;
use cayley_gradings::twisted::{
    tc_hurwitz, verify_epsilon, verify_similitude, verify_twisted_axioms, AlbertAlgebra, EtaleCubic,
};

fn main() {
    let l = EtaleCubic::RealComplex;
    for (name, c) in [("O", octonions::<Rational>()), ("Os", split_octonions())] {
        let tc = tc_hurwitz(&c).unwrap();
        println!("TC({name}-bar, L), dim {}", tc.dim());
        print!("{}", verify_twisted_axioms(&tc, None, 1, 100));
        print!("{}", verify_epsilon(&tc));
        print!("{}", AlbertAlgebra::new(&tc).verify(2, 20));
        let lam = [Rational::new(4, 3), Rational::new(1, 3), Rational::new(1, 3)];
        let ok = verify_similitude(&tc, &lam, &l.sharp(&lam), 3, 20).passed();
        let wrong = verify_similitude(&tc, &lam, &l.mul(&lam, &lam), 3, 20).passed();
        println!("lambda = (2,1): mu = lambda^# works {ok}, mu = lambda^2 works {wrong}");
    }
}
