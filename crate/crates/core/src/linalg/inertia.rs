use std::fmt;

use serde::{Deserialize, Serialize};

use super::Matrix;
use crate::scalars::{OrderedField, Sign};
use crate::{Error, Result};

/// Signature triple of a symmetric bilinear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub radical: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, radical: usize) -> Inertia {
        Inertia { positive, negative, radical }
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.radical
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical == 0
    }

    pub fn is_definite(&self) -> bool {
        self.radical == 0 && (self.positive == 0 || self.negative == 0)
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.radical)
    }
}

/// Signature by symmetric congruence diagonalization.
pub fn inertia_of<F: OrderedField>(g: &Matrix<F>) -> Result<Inertia> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(diagonal_signs(g).into_iter().fold(Inertia::default(), |mut acc, s| {
        match s {
            Sign::Positive => acc.positive += 1,
            Sign::Negative => acc.negative += 1,
            Sign::Zero => acc.radical += 1,
        }
        acc
    }))
}

impl Default for Inertia {
    fn default() -> Self {
        Inertia::new(0, 0, 0)
    }
}

/// Signs of a diagonal form congruent to the symmetric matrix `g`.
fn diagonal_signs<F: OrderedField>(g: &Matrix<F>) -> Vec<Sign> {
    let n = g.nrows();
    let mut a = g.clone();
    let mut signs = Vec::with_capacity(n);
    for i in 0..n {
        if a[(i, i)].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                a.swap_rows(i, j);
                a.swap_cols(i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !a[(i, j)].is_zero()) {
                // e_i ← e_i + e_j gives a new diagonal entry 2a_ij ≠ 0
                add_congruent(&mut a, i, j, &F::one());
            } else {
                signs.push(Sign::Zero);
                continue;
            }
        }
        let p = a[(i, i)].clone();
        let pinv = p.inv().expect("nonzero pivot");
        for k in i + 1..n {
            if a[(k, i)].is_zero() {
                continue;
            }
            let f = -(a[(k, i)].clone() * &pinv);
            add_congruent(&mut a, k, i, &f);
        }
        signs.push(p.sign());
    }
    signs
}

/// Row k += f·row j, then column k += f·column j.
fn add_congruent<F: OrderedField>(a: &mut Matrix<F>, k: usize, j: usize, f: &F) {
    let n = a.nrows();
    for c in 0..n {
        let v = a[(j, c)].clone() * f;
        if !v.is_zero() {
            let cur = std::mem::replace(&mut a[(k, c)], F::zero());
            a[(k, c)] = cur + v;
        }
    }
    for r in 0..n {
        let v = a[(r, j)].clone() * f;
        if !v.is_zero() {
            let cur = std::mem::replace(&mut a[(r, k)], F::zero());
            a[(r, k)] = cur + v;
        }
    }
}
