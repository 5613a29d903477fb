//! The model so(Ṽ₀, n) of so(7,1) and so(5,3), its Type III gradings, and
//! the derivation algebra of TC(C̄, L) as an independent check.
//!
//! Ṽ₀ = R(1⊗1) ⊕ (C⁰⊗i) has basis f₀ = 1⊗1 and f_k = b_k⊗i, where b₁, …, b₇
//! is the canonical basis of C⁰. Matrices act on coordinates in this basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{QuadForm, SCAlgebra};
use crate::gradings::{fingerprint, CayleyKind, Grading, Label};
use crate::groups::GroupElem;
use crate::lie::{derivations, induced_grading_on_der, LinearLieAlg};
use crate::linalg::{constrained_kernel, unit_vector, Inertia, Matrix, Subspace};
use crate::scalars::{Field, Rational, RealScalar};
use crate::twisted::{minimal_label, TwistedComposition, TypeIIIItem, TypeIIILabel, CARRIER_DIM};
use crate::{Error, Result};

fn real(r: &Rational) -> RealScalar {
    RealScalar::from_rational(r)
}

fn sqrt3() -> RealScalar {
    RealScalar::sqrt3()
}

/// so(Ṽ₀, n) spanned by d⊗1 (d ∈ Der C), A⁺_x and A⁻_x (x ∈ C⁰).
#[derive(Clone, Debug)]
pub struct TildeV0Model {
    cayley: SCAlgebra<Rational>,
    c0: Subspace<Rational>,
    der: LinearLieAlg<Rational>,
    form: QuadForm<RealScalar>,
    lie: LinearLieAlg<RealScalar>,
}

pub fn so_tilde_v0(c: &SCAlgebra<Rational>) -> Result<TildeV0Model> {
    CayleyKind::of(c)?;
    let c0 = c.trace_zero()?;
    let der = derivations(c)?;
    let q = c.norm().expect("Cayley algebra has a norm");
    let restricted = q.restrict(&c0);
    let gram = Matrix::from_fn(8, 8, |r, s| match (r, s) {
        (0, 0) => RealScalar::from_i64(2),
        (0, _) | (_, 0) => RealScalar::zero(),
        _ => -real(&restricted[(r - 1, s - 1)]),
    });
    let mut model = TildeV0Model {
        cayley: c.clone(),
        c0,
        der,
        form: QuadForm::new(gram)?,
        lie: LinearLieAlg::from_matrices(8, &[])?,
    };
    let mats: Vec<Matrix<RealScalar>> = model.families().into_iter().flat_map(|(_, m)| m).collect();
    model.lie = LinearLieAlg::from_matrices(8, &mats)?;
    Ok(model)
}

impl TildeV0Model {
    pub fn cayley(&self) -> &SCAlgebra<Rational> {
        &self.cayley
    }

    pub fn form(&self) -> &QuadForm<RealScalar> {
        &self.form
    }

    pub fn inertia(&self) -> Inertia {
        self.form.inertia()
    }

    pub fn lie(&self) -> &LinearLieAlg<RealScalar> {
        &self.lie
    }

    /// The Lie algebra Der(C) the first family comes from.
    pub fn derivations(&self) -> &LinearLieAlg<Rational> {
        &self.der
    }

    fn c0_coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.c0.coordinates(v).expect("vector lies in C⁰")
    }

    /// d⊗1 for an 8×8 derivation d of C.
    pub fn derivation_op(&self, d: &Matrix<Rational>) -> Matrix<RealScalar> {
        let b = self.c0.vectors();
        let cols: Vec<Vec<Rational>> = b.iter().map(|v| self.c0_coords(&d.mul_vec(v))).collect();
        Matrix::from_fn(8, 8, |r, s| {
            if r == 0 || s == 0 {
                RealScalar::zero()
            } else {
                real(&cols[s - 1][r - 1])
            }
        })
    }

    /// A^±_x = ad_x⊗1 ± √3 T_x⊗i for x ∈ C⁰, with T_x(y) = xy + yx.
    pub fn a_op(&self, x: &[Rational], plus: bool) -> Matrix<RealScalar> {
        let s3 = if plus { sqrt3() } else { -sqrt3() };
        let q = self.cayley.norm().expect("Cayley algebra has a norm");
        let b = self.c0.vectors();
        let xc = self.c0_coords(x);
        let mut m = Matrix::zeros(8, 8);
        for (k, xk) in xc.iter().enumerate() {
            m[(k + 1, 0)] = RealScalar::from_i64(2) * &s3 * &real(xk);
        }
        for (l, bl) in b.iter().enumerate() {
            let xy = self.cayley.mul(x, bl);
            let yx = self.cayley.mul(bl, x);
            let ad: Vec<Rational> = xy.iter().zip(&yx).map(|(p, q)| p.clone() - q).collect();
            for (k, v) in self.c0_coords(&ad).iter().enumerate() {
                m[(k + 1, l + 1)] = real(v);
            }
            m[(0, l + 1)] = s3.clone() * &real(&q.polar(x, bl));
        }
        m
    }

    /// The three generating families: d⊗1, A⁺_{b_k}, A⁻_{b_k}.
    pub fn families(&self) -> [(&'static str, Vec<Matrix<RealScalar>>); 3] {
        let ders = (0..self.der.dim()).map(|k| self.derivation_op(&self.der.basis_element(k)[0])).collect();
        let b = self.c0.vectors();
        [
            ("Der(C)", ders),
            ("A+", b.iter().map(|x| self.a_op(x, true)).collect()),
            ("A-", b.iter().map(|x| self.a_op(x, false)).collect()),
        ]
    }

    /// Coordinates in `lie` of a matrix.
    pub fn coords(&self, m: &Matrix<RealScalar>) -> Result<Vec<RealScalar>> {
        self.lie
            .coordinates(m.entries())
            .ok_or_else(|| Error::Invalid("matrix is not in so(V0)".into()))
    }

    /// The span of the generating families as matrices, in `lie`'s
    /// ambient coordinates.
    pub fn span(&self) -> &Subspace<RealScalar> {
        self.lie.space()
    }
}

/// The grading on so(Ṽ₀, n) with component Der(C)_g ⊕ A⁺(C⁰_{g+2h}) ⊕
/// A⁻(C⁰_{g+h}) at g, in the coordinates of `model.lie()`.
pub fn type_iii_so_grading(
    model: &TildeV0Model,
    gamma_c: &Grading<Rational>,
    h: &GroupElem,
) -> Result<Grading<RealScalar>> {
    let group = gamma_c.group();
    if group.elem_order(h)? != Some(3) {
        return Err(Error::Precondition(format!("h = {h} does not have order 3")));
    }
    let (der, der_grading) = induced_grading_on_der(&model.cayley, gamma_c)?;
    let mut pieces: BTreeMap<GroupElem, Vec<Vec<RealScalar>>> = BTreeMap::new();
    for (g, s) in der_grading.components() {
        let entry = pieces.entry(g.clone()).or_default();
        for v in s.vectors() {
            let d = der.split(&der.element(&v)).remove(0);
            entry.push(model.coords(&model.derivation_op(&d))?);
        }
    }
    for (d, s) in gamma_c.components() {
        let s0 = s.intersection(&model.c0)?;
        for x in s0.vectors() {
            let plus = group.sub(d, &group.mul(2, h)?)?;
            pieces.entry(plus).or_default().push(model.coords(&model.a_op(&x, true))?);
            let minus = group.sub(d, h)?;
            pieces.entry(minus).or_default().push(model.coords(&model.a_op(&x, false))?);
        }
    }
    let n = model.lie.dim();
    let comps = pieces
        .into_iter()
        .map(|(g, vs)| Ok((g, Subspace::try_from_vectors(n, vs)?)))
        .collect::<Result<Vec<_>>>()?;
    let grading = Grading::new(group.clone(), n, comps)?;
    Ok(match gamma_c.label() {
        Some(Label::Cayley(c)) => grading.with_label(Label::TypeIii(TypeIIILabel { h: h.clone(), cayley: c.clone() })),
        _ => grading,
    })
}

/// The structure algebra of so(Ṽ₀, n), with its Killing form, as a target for
/// [`crate::gradings::verify_grading`].
pub fn so_target(model: &TildeV0Model) -> Result<SCAlgebra<RealScalar>> {
    model.lie.structure_algebra()
}

/// One row of a census: a degree, the dimension of its component and the
/// inertia of the Killing form restricted to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub degree: GroupElem,
    pub dim: usize,
    pub inertia: Inertia,
}

pub fn census(grading: &Grading<RealScalar>, target: &SCAlgebra<RealScalar>) -> Result<Vec<CensusRow>> {
    let killing = target.norm().ok_or_else(|| Error::Precondition("target has no Killing form".into()))?;
    Ok(fingerprint(grading, &killing.gram)?
        .into_iter()
        .map(|(degree, (dim, inertia))| CensusRow { degree, dim, inertia })
        .collect())
}

/// Number of components of each dimension.
pub fn dim_summary(rows: &[CensusRow]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for r in rows {
        *out.entry(r.dim).or_insert(0) += 1;
    }
    out
}

/// The census as CSV with columns degree, dim, p, q, r; the degree is its
/// coordinates joined by semicolons.
pub fn census_csv(rows: &[CensusRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
    w.write_record(["degree", "dim", "p", "q", "r"]).map_err(io)?;
    for row in rows {
        let deg = row.degree.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(";");
        let i = &row.inertia;
        w.write_record([deg, row.dim.to_string(), i.positive.to_string(), i.negative.to_string(), i.radical.to_string()])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
}

/// The three fine Type III gradings on so(7,1) and so(5,3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FineTypeIII {
    OZ2Cubed,
    OsZ2Cubed,
    OsZ2,
}

impl FineTypeIII {
    pub const ALL: [FineTypeIII; 3] = [FineTypeIII::OZ2Cubed, FineTypeIII::OsZ2Cubed, FineTypeIII::OsZ2];

    pub fn name(self) -> &'static str {
        match self {
            FineTypeIII::OZ2Cubed => "O-Z2^3Z3",
            FineTypeIII::OsZ2Cubed => "Os-Z2^3Z3",
            FineTypeIII::OsZ2 => "Os-Z^2Z3",
        }
    }

    /// The label of Γ(G, Γ_C, h) it is built from.
    pub fn label(self) -> Result<TypeIIILabel> {
        minimal_label(match self {
            FineTypeIII::OZ2Cubed => TypeIIIItem::A1,
            FineTypeIII::OsZ2Cubed => TypeIIIItem::B1,
            FineTypeIII::OsZ2 => TypeIIIItem::C2,
        })
    }
}

impl fmt::Display for FineTypeIII {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FineTypeIII {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FineTypeIII::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown fine grading {s:?}")))
    }
}

/// Builds the model for the label's Cayley algebra and its Type III grading.
pub fn realize_so_grading(label: &TypeIIILabel) -> Result<(TildeV0Model, Grading<RealScalar>)> {
    let (c, gamma_c) = label.cayley.realize::<Rational>()?;
    let model = so_tilde_v0(&c)?;
    let g = type_iii_so_grading(&model, &gamma_c, &label.h)?;
    Ok((model, g))
}

pub fn fine_type_iii(which: FineTypeIII) -> Result<(TildeV0Model, Grading<RealScalar>)> {
    realize_so_grading(&which.label()?)
}

/// Der_L(V, β, Q): L-linear endomorphisms of the carrier, skew for b_Q and
/// satisfying d(β(x, y)) = β(dx, y) + β(x, dy).
pub fn der_of_twisted(tc: &TwistedComposition) -> Result<LinearLieAlg<Rational>> {
    let n = CARRIER_DIM;
    // L-linear maps: Σ E_{s's} ⊗ ξᵐ
    let mut basis = Vec::with_capacity(192);
    for s2 in 0..8 {
        for s in 0..8 {
            for m in 0..3 {
                let mut d = Matrix::zeros(n, n);
                for j in 0..3 {
                    d[(3 * s2 + (j + m) % 3, 3 * s + j)] = Rational::one();
                }
                basis.push(d.entries().to_vec());
            }
        }
    }
    let e: Vec<Vec<Rational>> = (0..n).map(|a| unit_vector(n, a)).collect();
    let grams: Vec<Matrix<Rational>> = (0..3)
        .map(|k| Matrix::from_fn(n, n, |a, b| tc.polar(&e[a], &e[b])[k].clone()))
        .collect();
    let as_matrix = |v: &[Rational]| Matrix::from_rows(v.chunks(n).map(<[Rational]>::to_vec).collect(), n);
    let basis = constrained_kernel(basis, |v| {
        let d = as_matrix(v);
        grams
            .iter()
            .flat_map(|g| {
                let m = d.transpose().mul(g).expect("square").add(&g.mul(&d).expect("square"));
                m.entries().to_vec()
            })
            .collect()
    });
    let beta: Vec<Vec<Vec<Rational>>> =
        (0..n).map(|a| (0..n).map(|b| tc.beta_polar(&e[a], &e[b])).collect()).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut basis = basis;
    for chunk in pairs.chunks(24) {
        basis = constrained_kernel(basis, |v| {
            let d = as_matrix(v);
            let mut out = Vec::with_capacity(chunk.len() * n);
            for &(a, b) in chunk {
                let mut r = d.mul_vec(&beta[a][b]);
                for c in 0..n {
                    let (da, db) = (&d[(c, a)], &d[(c, b)]);
                    for t in 0..n {
                        if !da.is_zero() {
                            r[t] = r[t].clone() - &(da.clone() * &beta[c][b][t]);
                        }
                        if !db.is_zero() {
                            r[t] = r[t].clone() - &(db.clone() * &beta[a][c][t]);
                        }
                    }
                }
                out.extend(r);
            }
            out
        });
    }
    LinearLieAlg::span(vec![n], basis)
}

/// The restriction of an L-linear operator on the carrier to the R-component
/// of V, written in the basis f₀, f_k of Ṽ₀.
pub fn first_component(d: &Matrix<Rational>) -> Matrix<RealScalar> {
    // (1, ξ, ξ²) summed within slot s spans the R-component; it is
    // 3 f₀ for s = 0 and 3√3 f_s otherwise.
    let n = CARRIER_DIM;
    let m = Matrix::from_fn(8, 8, |r, s| {
        let u: Vec<Rational> = (0..n).map(|i| if i / 3 == s { Rational::one() } else { Rational::zero() }).collect();
        d.mul_vec(&u)[3 * r].clone()
    });
    let scale = |k: usize| if k == 0 { RealScalar::one() } else { sqrt3() };
    Matrix::from_fn(8, 8, |r, s| {
        let v = real(&m[(r, s)]) * &scale(r);
        v.checked_div(&scale(s)).expect("nonzero scale")
    })
}

/// The image of Der_L(V, β, Q) in gl(Ṽ₀) under [`first_component`].
pub fn first_component_span(der: &LinearLieAlg<Rational>) -> Result<Subspace<RealScalar>> {
    let mats: Vec<Vec<RealScalar>> =
        (0..der.dim()).map(|k| first_component(&der.basis_element(k)[0]).entries().to_vec()).collect();
    Subspace::try_from_vectors(64, mats)
}

#[cfg(test)]
mod tests;
