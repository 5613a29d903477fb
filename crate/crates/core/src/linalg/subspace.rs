use serde::{Deserialize, Serialize};

use super::matrix::{axpy, Matrix};
use crate::scalars::Field;
use crate::{Error, Result};

/// A linear subspace of F^n, stored by its reduced row echelon basis.
///
/// The RREF basis is unique, so derived equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SubspaceRepr<F>", into = "SubspaceRepr<F>")]
#[serde(bound(
    serialize = "F: Field",
    deserialize = "F: Field"
))]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
struct SubspaceRepr<F> {
    ambient_dim: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> TryFrom<SubspaceRepr<F>> for Subspace<F> {
    type Error = Error;
    fn try_from(r: SubspaceRepr<F>) -> Result<Self> {
        Subspace::try_from_vectors(r.ambient_dim, r.basis)
    }
}

impl<F: Field> From<Subspace<F>> for SubspaceRepr<F> {
    fn from(s: Subspace<F>) -> Self {
        SubspaceRepr { ambient_dim: s.ambient, basis: s.basis.to_rows() }
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Subspace<F> {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace<F> {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn try_from_vectors(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Subspace<F>> {
        let mut m = Matrix::from_rows_checked(vectors, ambient)?;
        let pivots = m.rref_in_place();
        let rows = m.rows_iter().take(pivots.len()).map(<[F]>::to_vec).collect();
        Ok(Subspace { ambient, basis: Matrix::from_rows(rows, ambient), pivots })
    }

    /// Span of the given vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<F>>) -> Subspace<F> {
        Subspace::try_from_vectors(ambient, vectors).expect("vector length must equal ambient dimension")
    }

    pub fn span_of_units(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Subspace<F> {
        let vectors = indices.into_iter().map(|k| super::unit_vector(ambient, k)).collect();
        Subspace::from_vectors(ambient, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<F>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (k, c) in coords.iter().enumerate() {
            axpy(&mut rest, &-c.clone(), self.basis.row(k));
        }
        rest.iter().all(F::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && other.basis.rows_iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check(other)?;
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Ok(Subspace::from_vectors(self.ambient, vs))
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // Σ xᵢaᵢ = Σ yⱼbⱼ  ⇔  (x, y) ∈ ker [Aᵀ | −Bᵀ]
        let at = self.basis.transpose();
        let bt = other.basis.transpose().map(|x| -x.clone());
        let k = at.hstack(&bt)?.kernel();
        let p = self.dim();
        let vectors = k
            .basis
            .rows_iter()
            .map(|sol| {
                let mut v = vec![F::zero(); self.ambient];
                for (i, x) in sol[..p].iter().enumerate() {
                    axpy(&mut v, x, self.basis.row(i));
                }
                v
            })
            .collect();
        Ok(Subspace::from_vectors(self.ambient, vectors))
    }

    /// Image under a matrix acting on column vectors.
    pub fn image(&self, m: &Matrix<F>) -> Result<Subspace<F>> {
        if m.ncols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: m.ncols() });
        }
        let vectors = self.basis.rows_iter().map(|v| m.mul_vec(v)).collect();
        Ok(Subspace::from_vectors(m.nrows(), vectors))
    }
}

/// Refines a parameter space by one batch of linear constraints.
///
/// `basis` spans the current solution space inside some parameter space and
/// `residual` is a linear map out of the parameter space; the result spans
/// the vectors of span(basis) annihilated by `residual`.
pub fn constrained_kernel<F: Field>(
    basis: Vec<Vec<F>>,
    residual: impl Fn(&[F]) -> Vec<F>,
) -> Vec<Vec<F>> {
    if basis.is_empty() {
        return basis;
    }
    let residuals: Vec<Vec<F>> = basis.iter().map(|b| residual(b)).collect();
    let m = residuals[0].len();
    // columns of the system are the residuals of the basis vectors
    let system = Matrix::from_fn(m, basis.len(), |r, c| residuals[c][r].clone());
    let combos = system.kernel();
    let n = basis[0].len();
    combos
        .basis()
        .rows_iter()
        .map(|c| {
            let mut v = vec![F::zero(); n];
            for (coef, b) in c.iter().zip(&basis) {
                axpy(&mut v, coef, b);
            }
            v
        })
        .collect()
}
