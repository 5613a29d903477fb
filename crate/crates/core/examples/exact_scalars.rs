//! Arithmetic in Q(ζ₁₂) and Q(√3), and the coordinates of R × C.

use cayley_gradings::scalars::{Field, Rational, RealScalar, Scalar};
use cayley_gradings::twisted::{l_from_pair, l_to_pair, sqrt_minus_3};

fn main() {
    let w = Scalar::omega();
    println!("omega = {w}, omega^3 = {}", w.pow(3));
    println!("sqrt(-3) = omega - omega^2 = {}", sqrt_minus_3());
    let s = RealScalar::sqrt3();
    println!("sqrt3 = {s}, sign of 2 - sqrt3 = {:?}", (RealScalar::from_i64(2) - s.clone()).sign());

    let lam = l_from_pair(&Rational::from_integer(2), &Scalar::from(1)).unwrap();
    println!("(2, 1) in the basis 1, xi, xi^2: [{}, {}, {}]", lam[0], lam[1], lam[2]);
    let (b, c) = l_to_pair(&lam);
    println!("back to the pair: ({b}, {c})");
}
