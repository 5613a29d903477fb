//! Structure-constant algebras, Hurwitz algebras and their para-Hurwitz
//! companions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{axpy, dot, inertia_of, scaled, unit_vector, Inertia, Matrix, Subspace};
use crate::scalars::{Field, OrderedField};
use crate::{Error, Result};

/// A quadratic form recorded by the Gram matrix of its polar form
/// b(x, y) = q(x + y) − q(x) − q(y), so q(x) = b(x, x)/2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
pub struct QuadForm<F> {
    pub gram: Matrix<F>,
}

impl<F: Field> QuadForm<F> {
    pub fn new(gram: Matrix<F>) -> Result<QuadForm<F>> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(QuadForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn polar(&self, x: &[F], y: &[F]) -> F {
        self.gram.bilinear(x, y)
    }

    pub fn value(&self, x: &[F]) -> F {
        self.polar(x, x) * F::from_rational(&crate::scalars::Rational::new(1, 2))
    }

    /// q on the basis vectors.
    pub fn diagonal(&self) -> Vec<F> {
        let half = F::from_rational(&crate::scalars::Rational::new(1, 2));
        (0..self.dim()).map(|i| self.gram[(i, i)].clone() * &half).collect()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// Orthogonal complement of a subspace.
    pub fn orthogonal(&self, s: &Subspace<F>) -> Subspace<F> {
        let rows: Vec<Vec<F>> = s.basis().rows_iter().map(|v| self.gram.mul_vec(v)).collect();
        Matrix::from_rows(rows, self.dim()).kernel()
    }

    /// Gram matrix of the restriction to a subspace, in its canonical basis.
    pub fn restrict(&self, s: &Subspace<F>) -> Matrix<F> {
        let b = s.basis();
        Matrix::from_fn(s.dim(), s.dim(), |i, j| self.polar(b.row(i), b.row(j)))
    }
}

impl<F: OrderedField> QuadForm<F> {
    pub fn inertia(&self) -> Inertia {
        inertia_of(&self.gram).expect("Gram matrix is symmetric")
    }
}

/// Witnesses for a failed symmetric-composition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymCompFailure {
    /// Basis indices (x, y, z, w) violating
    /// b(xy, zw) + b(xw, zy) = b(x, z)·b(y, w).
    Composition([usize; 4]),
    /// Basis indices (x, y, z) with b(xy, z) ≠ b(x, yz).
    Associativity([usize; 3]),
    MissingNorm,
}

impl fmt::Display for SymCompFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymCompFailure::Composition(w) => write!(f, "composition law fails on basis {w:?}"),
            SymCompFailure::Associativity(w) => write!(f, "polar form is not associative on basis {w:?}"),
            SymCompFailure::MissingNorm => write!(f, "algebra carries no norm"),
        }
    }
}

/// A finite-dimensional algebra given by structure constants:
/// e_i·e_j = Σ_k mult[i][j][k] e_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraRepr<F>", into = "AlgebraRepr<F>")]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
pub struct SCAlgebra<F> {
    dim: usize,
    mult: Vec<Vec<Vec<F>>>,
    unit: Option<Vec<F>>,
    norm: Option<QuadForm<F>>,
    names: Vec<String>,
    cd_params: Vec<F>,
    terms: Vec<(usize, usize, usize, F)>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
struct AlgebraRepr<F> {
    dim: usize,
    mult: Vec<Vec<Vec<F>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<F>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gram: Option<Matrix<F>>,
    #[serde(default)]
    names: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    cd_params: Vec<F>,
}

impl<F: Field> TryFrom<AlgebraRepr<F>> for SCAlgebra<F> {
    type Error = Error;
    fn try_from(r: AlgebraRepr<F>) -> Result<Self> {
        let norm = r.gram.map(QuadForm::new).transpose()?;
        let mut a = SCAlgebra::new(r.mult, r.unit, norm)?;
        if !r.names.is_empty() {
            if r.names.len() != a.dim {
                return Err(Error::DimensionMismatch { expected: a.dim, got: r.names.len() });
            }
            a.names = r.names;
        }
        a.cd_params = r.cd_params;
        Ok(a)
    }
}

impl<F: Field> From<SCAlgebra<F>> for AlgebraRepr<F> {
    fn from(a: SCAlgebra<F>) -> Self {
        AlgebraRepr {
            dim: a.dim,
            mult: a.mult,
            unit: a.unit,
            gram: a.norm.map(|q| q.gram),
            names: a.names,
            cd_params: a.cd_params,
        }
    }
}

impl<F: Field> SCAlgebra<F> {
    pub fn new(
        mult: Vec<Vec<Vec<F>>>,
        unit: Option<Vec<F>>,
        norm: Option<QuadForm<F>>,
    ) -> Result<SCAlgebra<F>> {
        let dim = mult.len();
        for row in &mult {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            for v in row {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
                }
            }
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: u.len() });
            }
        }
        if let Some(q) = &norm {
            if q.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: q.dim() });
            }
        }
        let mut terms = Vec::new();
        for (i, row) in mult.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                for (k, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        terms.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        let alg = SCAlgebra {
            dim,
            mult,
            unit,
            norm,
            names: (0..dim).map(|i| format!("e{i}")).collect(),
            cd_params: Vec::new(),
            terms,
        };
        if let Some(u) = &alg.unit {
            for i in 0..dim {
                let e = unit_vector(dim, i);
                if alg.mul(u, &e) != e || alg.mul(&e, u) != e {
                    return Err(Error::Invalid(format!("unit fails on basis vector {i}")));
                }
            }
        }
        Ok(alg)
    }

    fn from_table(
        dim: usize,
        table: impl Fn(usize, usize) -> Vec<F>,
        unit: Option<Vec<F>>,
        norm: Option<QuadForm<F>>,
    ) -> Result<SCAlgebra<F>> {
        let mult = (0..dim).map(|i| (0..dim).map(|j| table(i, j)).collect()).collect();
        SCAlgebra::new(mult, unit, norm)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&[F]> {
        self.unit.as_deref()
    }

    pub fn norm(&self) -> Option<&QuadForm<F>> {
        self.norm.as_ref()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> SCAlgebra<F> {
        assert_eq!(names.len(), self.dim);
        self.names = names;
        self
    }

    /// Parameters of the Cayley–Dickson chain that produced this algebra.
    pub fn cd_params(&self) -> &[F] {
        &self.cd_params
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<F>>] {
        &self.mult
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[F] {
        &self.mult[i][j]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, j, k, c) in &self.terms {
            let (a, b) = (&x[*i], &y[*j]);
            if !a.is_zero() && !b.is_zero() {
                let cur = std::mem::replace(&mut out[*k], F::zero());
                out[*k] = cur + &(a.clone() * b * c);
            }
        }
        out
    }

    /// Matrix of y ↦ x·y.
    pub fn left_mul(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, j, k, c) in &self.terms {
            if !x[*i].is_zero() {
                let cur = std::mem::replace(&mut m[(*k, *j)], F::zero());
                m[(*k, *j)] = cur + &(x[*i].clone() * c);
            }
        }
        m
    }

    /// Matrix of y ↦ y·x.
    pub fn right_mul(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, j, k, c) in &self.terms {
            if !x[*j].is_zero() {
                let cur = std::mem::replace(&mut m[(*k, *i)], F::zero());
                m[(*k, *i)] = cur + &(x[*j].clone() * c);
            }
        }
        m
    }

    fn require_norm(&self) -> Result<&QuadForm<F>> {
        self.norm.as_ref().ok_or_else(|| Error::Precondition("algebra carries no norm".into()))
    }

    fn require_unit(&self) -> Result<&[F]> {
        self.unit.as_deref().ok_or_else(|| Error::Precondition("algebra has no unit".into()))
    }

    /// x̄ = b(x, 1)·1 − x.
    pub fn conj(&self, x: &[F]) -> Result<Vec<F>> {
        let q = self.require_norm()?;
        let one = self.require_unit()?;
        let t = q.polar(x, one);
        Ok(one.iter().zip(x).map(|(u, v)| t.clone() * u - v).collect())
    }

    /// Matrix of the standard involution.
    pub fn conj_matrix(&self) -> Result<Matrix<F>> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.conj(&unit_vector(self.dim, j))).collect::<Result<_>>()?;
        Ok(Matrix::from_fn(self.dim, self.dim, |r, c| cols[c][r].clone()))
    }

    /// Trace-zero subspace C⁰ = 1^⊥.
    pub fn trace_zero(&self) -> Result<Subspace<F>> {
        let q = self.require_norm()?;
        let one = self.require_unit()?;
        Ok(Matrix::from_rows(vec![q.gram.mul_vec(one)], self.dim).kernel())
    }

    pub fn composition_witness(&self) -> Result<Option<[usize; 4]>> {
        let q = self.require_norm()?;
        let n = self.dim;
        // b(e_a e_b, e_c e_d) for all index pairs, via the Gram image of products
        let prods: Vec<Vec<F>> = (0..n * n).map(|ab| self.mult[ab / n][ab % n].clone()).collect();
        let gprods: Vec<Vec<F>> = prods.iter().map(|p| q.gram.mul_vec(p)).collect();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        let lhs = dot(&prods[x * n + y], &gprods[z * n + w])
                            + dot(&prods[x * n + w], &gprods[z * n + y]);
                        let rhs = q.gram[(x, z)].clone() * &q.gram[(y, w)];
                        if lhs != rhs {
                            return Ok(Some([x, y, z, w]));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_composition(&self) -> bool {
        matches!(self.composition_witness(), Ok(None))
    }

    /// Unital composition algebra with nondegenerate norm.
    pub fn is_hurwitz(&self) -> bool {
        self.unit.is_some()
            && self.norm.as_ref().is_some_and(QuadForm::is_nondegenerate)
            && self.is_composition()
    }

    pub fn associator(&self, x: &[F], y: &[F], z: &[F]) -> Vec<F> {
        let a = self.mul(&self.mul(x, y), z);
        let b = self.mul(x, &self.mul(y, z));
        a.iter().zip(&b).map(|(p, q)| p.clone() - q).collect()
    }

    pub fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mult[i][j].clone();
                for k in 0..n {
                    let lhs = self.mul(&ij, &unit_vector(n, k));
                    let rhs = self.mul(&unit_vector(n, i), &self.mult[j][k]);
                    if lhs != rhs {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// Linearized left and right alternative laws on basis triples.
    pub fn alternativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.dim;
        let e = |i| unit_vector::<F>(n, i);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = crate::linalg::vec_add(
                        &self.associator(&e(i), &e(j), &e(k)),
                        &self.associator(&e(j), &e(i), &e(k)),
                    );
                    let right = crate::linalg::vec_add(
                        &self.associator(&e(k), &e(i), &e(j)),
                        &self.associator(&e(k), &e(j), &e(i)),
                    );
                    if !crate::linalg::is_zero_vec(&left) || !crate::linalg::is_zero_vec(&right) {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    /// Checks the composition law and associativity of the polar form.
    pub fn symmetric_composition_check(&self) -> std::result::Result<(), SymCompFailure> {
        let q = self.norm.as_ref().ok_or(SymCompFailure::MissingNorm)?;
        match self.composition_witness() {
            Ok(Some(w)) => return Err(SymCompFailure::Composition(w)),
            Err(_) => return Err(SymCompFailure::MissingNorm),
            Ok(None) => {}
        }
        let n = self.dim;
        for x in 0..n {
            for y in 0..n {
                let xy = &self.mult[x][y];
                for z in 0..n {
                    let lhs = q.polar(xy, &unit_vector(n, z));
                    let rhs = q.polar(&unit_vector(n, x), &self.mult[y][z]);
                    if lhs != rhs {
                        return Err(SymCompFailure::Associativity([x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric_composition(&self) -> bool {
        self.symmetric_composition_check().is_ok()
    }

    /// The para-Hurwitz algebra: same space and norm, product x•y = x̄ȳ.
    pub fn para_hurwitz(&self) -> Result<SCAlgebra<F>> {
        if !self.is_hurwitz() {
            return Err(Error::Precondition("para-Hurwitz product needs a Hurwitz algebra".into()));
        }
        let bars: Vec<Vec<F>> = (0..self.dim).map(|i| self.conj(&unit_vector(self.dim, i))).collect::<Result<_>>()?;
        let mut p = SCAlgebra::from_table(self.dim, |i, j| self.mul(&bars[i], &bars[j]), None, self.norm.clone())?;
        p.names = self.names.clone();
        p.cd_params = self.cd_params.clone();
        Ok(p)
    }

    /// CD(A, α): (a + bu)(c + du) = (ac + α·d̄b) + (da + bc̄)u,
    /// n(a + bu) = n(a) − α·n(b).
    pub fn cayley_dickson(&self, alpha: &F) -> Result<SCAlgebra<F>> {
        if alpha.is_zero() {
            return Err(Error::Invalid("Cayley-Dickson parameter must be nonzero".into()));
        }
        if !matches!(self.dim, 1 | 2 | 4) {
            return Err(Error::Precondition(format!(
                "Cayley-Dickson doubling needs dimension 1, 2 or 4, got {}",
                self.dim
            )));
        }
        if !self.is_hurwitz() || !self.is_associative() {
            return Err(Error::Precondition("Cayley-Dickson doubling needs an associative Hurwitz algebra".into()));
        }
        let n = self.dim;
        let bars: Vec<Vec<F>> = (0..n).map(|i| self.conj(&unit_vector(n, i))).collect::<Result<_>>()?;
        let e = |i| unit_vector::<F>(n, i);
        let embed = |v: Vec<F>, second: bool| {
            let mut out = vec![F::zero(); 2 * n];
            let off = if second { n } else { 0 };
            out[off..off + n].clone_from_slice(&v);
            out
        };
        let table = |i: usize, j: usize| match (i < n, j < n) {
            (true, true) => embed(self.mul(&e(i), &e(j)), false),
            (true, false) => embed(self.mul(&e(j - n), &e(i)), true),
            (false, true) => embed(self.mul(&e(i - n), &bars[j]), true),
            (false, false) => embed(scaled(alpha, &self.mul(&bars[j - n], &e(i - n))), false),
        };
        let g = &self.require_norm()?.gram;
        let gram = Matrix::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
            (true, true) => g[(r, c)].clone(),
            (false, false) => -(alpha.clone() * &g[(r - n, c - n)]),
            _ => F::zero(),
        });
        let unit = embed(self.require_unit()?.to_vec(), false);
        let mut out = SCAlgebra::from_table(2 * n, table, Some(unit), Some(QuadForm::new(gram)?))?;
        let letter = ["u", "v", "w"][self.cd_params.len().min(2)];
        out.names = self
            .names
            .iter()
            .cloned()
            .chain(self.names.iter().map(|s| if s == "1" { letter.to_string() } else { format!("{s}{letter}") }))
            .collect();
        out.cd_params = self.cd_params.clone();
        out.cd_params.push(alpha.clone());
        Ok(out)
    }

    /// Change of scalars along a field embedding.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> SCAlgebra<G> {
        let mult = self.mult.iter().map(|r| r.iter().map(|v| v.iter().map(&f).collect()).collect()).collect();
        let unit = self.unit.as_ref().map(|u| u.iter().map(&f).collect());
        let norm = self.norm.as_ref().map(|q| QuadForm { gram: q.gram.map(&f) });
        let mut out = SCAlgebra::new(mult, unit, norm).expect("embedding preserves shape");
        out.names = self.names.clone();
        out.cd_params = self.cd_params.iter().map(&f).collect();
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim, i)
    }

    /// Linear combination Σ cᵢ eᵢ from (coefficient, index) pairs.
    pub fn combo(&self, terms: &[(F, usize)]) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        for (c, i) in terms {
            axpy(&mut v, c, &unit_vector(self.dim, *i));
        }
        v
    }
}

impl<F: OrderedField> SCAlgebra<F> {
    pub fn norm_inertia(&self) -> Option<Inertia> {
        self.norm.as_ref().map(QuadForm::inertia)
    }

    /// Division type over a real closed field means a definite norm.
    pub fn is_division(&self) -> bool {
        self.norm_inertia().is_some_and(|i| i.is_definite())
    }
}

/// The one-dimensional Hurwitz algebra F.
pub fn ground_field<F: Field>() -> SCAlgebra<F> {
    let mut a = SCAlgebra::new(
        vec![vec![vec![F::one()]]],
        Some(vec![F::one()]),
        Some(QuadForm { gram: Matrix::from_rows(vec![vec![F::from_i64(2)]], 1) }),
    )
    .expect("valid 1-dimensional algebra");
    a.names = vec!["1".into()];
    a
}

/// CD(F, α₁, …, α_k) for k ≤ 3.
pub fn cayley_dickson_chain<F: Field>(params: &[F]) -> Result<SCAlgebra<F>> {
    if params.len() > 3 {
        return Err(Error::Invalid("at most three doublings".into()));
    }
    params.iter().try_fold(ground_field(), |a, alpha| a.cayley_dickson(alpha))
}

fn chain_i64<F: Field>(params: &[i64]) -> SCAlgebra<F> {
    let ps: Vec<F> = params.iter().map(|&p| F::from_i64(p)).collect();
    cayley_dickson_chain(&ps).expect("valid doubling chain")
}

/// Named real Hurwitz algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HurwitzKind {
    R,
    C,
    Cs,
    H,
    Hs,
    O,
    Os,
}

impl HurwitzKind {
    pub const ALL: [HurwitzKind; 7] = [
        HurwitzKind::R,
        HurwitzKind::C,
        HurwitzKind::Cs,
        HurwitzKind::H,
        HurwitzKind::Hs,
        HurwitzKind::O,
        HurwitzKind::Os,
    ];

    pub fn params(self) -> &'static [i64] {
        match self {
            HurwitzKind::R => &[],
            HurwitzKind::C => &[-1],
            HurwitzKind::Cs => &[1],
            HurwitzKind::H => &[-1, -1],
            HurwitzKind::Hs => &[-1, 1],
            HurwitzKind::O => &[-1, -1, -1],
            HurwitzKind::Os => &[-1, -1, 1],
        }
    }

    pub fn build<F: Field>(self) -> SCAlgebra<F> {
        chain_i64(self.params())
    }

    pub fn is_division(self) -> bool {
        self.params().iter().all(|&p| p < 0)
    }

    pub fn name(self) -> &'static str {
        match self {
            HurwitzKind::R => "R",
            HurwitzKind::C => "C",
            HurwitzKind::Cs => "Cs",
            HurwitzKind::H => "H",
            HurwitzKind::Hs => "Hs",
            HurwitzKind::O => "O",
            HurwitzKind::Os => "Os",
        }
    }
}

impl std::str::FromStr for HurwitzKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        HurwitzKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown algebra {s:?}")))
    }
}

pub fn octonions<F: Field>() -> SCAlgebra<F> {
    HurwitzKind::O.build()
}

pub fn split_octonions<F: Field>() -> SCAlgebra<F> {
    HurwitzKind::Os.build()
}

/// Indices of the good basis {e₁, e₂, u₁, u₂, u₃, v₁, v₂, v₃}.
pub mod good {
    pub const E1: usize = 0;
    pub const E2: usize = 1;
    pub const U: [usize; 3] = [2, 3, 4];
    pub const V: [usize; 3] = [5, 6, 7];
}

fn levi_civita(j: usize, k: usize, l: usize) -> i64 {
    match (j, k, l) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// The split Cayley algebra in its good basis.
pub fn split_cayley_good_basis<F: Field>() -> SCAlgebra<F> {
    use good::*;
    let n = 8;
    let mut table = vec![vec![vec![F::zero(); n]; n]; n];
    let mut set = |i: usize, j: usize, k: usize, c: i64| table[i][j][k] = F::from_i64(c);
    set(E1, E1, E1, 1);
    set(E2, E2, E2, 1);
    for j in 0..3 {
        set(E1, U[j], U[j], 1);
        set(U[j], E2, U[j], 1);
        set(E2, V[j], V[j], 1);
        set(V[j], E1, V[j], 1);
        set(U[j], V[j], E1, -1);
        set(V[j], U[j], E2, -1);
        for k in 0..3 {
            for l in 0..3 {
                let s = levi_civita(j, k, l);
                if s != 0 {
                    set(U[j], U[k], V[l], s);
                    set(V[j], V[k], U[l], s);
                }
            }
        }
    }
    let gram = Matrix::from_fn(n, n, |r, c| {
        let pair = |a: usize, b: usize| (r == a && c == b) || (r == b && c == a);
        if pair(E1, E2) || (0..3).any(|j| pair(U[j], V[j])) {
            F::one()
        } else {
            F::zero()
        }
    });
    let mut unit = vec![F::zero(); n];
    unit[E1] = F::one();
    unit[E2] = F::one();
    let alg = SCAlgebra::new(table, Some(unit), Some(QuadForm { gram })).expect("valid good basis");
    alg.with_names(["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"].map(String::from).to_vec())
}

impl SCAlgebra<crate::scalars::Rational> {
    /// (x⋆y)⋆x = n(x)y = x⋆(y⋆x) on seeded random pairs; returns the first
    /// failing sample.
    pub fn symmetric_identity_witness(&self, seed: u64, samples: usize) -> Option<String> {
        let Some(q) = self.norm.as_ref() else {
            return Some("algebra carries no norm".into());
        };
        let mut rng = crate::sample::rng(seed);
        for k in 0..samples {
            let x = crate::sample::small_vector(&mut rng, self.dim);
            let y = crate::sample::small_vector(&mut rng, self.dim);
            let ny = scaled(&q.value(&x), &y);
            if self.mul(&self.mul(&x, &y), &x) != ny {
                return Some(format!("sample {k}: (x*y)*x differs from n(x)y"));
            }
            if self.mul(&x, &self.mul(&y, &x)) != ny {
                return Some(format!("sample {k}: x*(y*x) differs from n(x)y"));
            }
        }
        None
    }
}
