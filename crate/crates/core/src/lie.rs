//! Lie algebras of operators: so(V, b), derivation algebras, triality
//! algebras, Killing forms and induced gradings.
//!
//! An element of a [`LinearLieAlg`] is a tuple of square matrices, stored
//! flattened block after block in row-major order. The bracket is the
//! componentwise commutator.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::composition::{QuadForm, SCAlgebra};
use crate::gradings::Grading;
use crate::linalg::{constrained_kernel, is_zero_vec, unit_vector, vec_add, Matrix, Subspace};
use crate::report::Report;
use crate::scalars::Field;
use crate::{Error, Result};

/// A Lie subalgebra of gl(n₁) × … × gl(n_k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LieRepr<F>", into = "LieRepr<F>")]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
pub struct LinearLieAlg<F> {
    blocks: Vec<usize>,
    space: Subspace<F>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
struct LieRepr<F> {
    ambient_dims: Vec<usize>,
    basis: Vec<Vec<Matrix<F>>>,
}

impl<F: Field> TryFrom<LieRepr<F>> for LinearLieAlg<F> {
    type Error = Error;
    fn try_from(r: LieRepr<F>) -> Result<Self> {
        let vectors = r
            .basis
            .iter()
            .map(|mats| {
                if mats.len() != r.ambient_dims.len() {
                    return Err(Error::DimensionMismatch { expected: r.ambient_dims.len(), got: mats.len() });
                }
                for (m, &n) in mats.iter().zip(&r.ambient_dims) {
                    if m.nrows() != n || m.ncols() != n {
                        return Err(Error::DimensionMismatch { expected: n, got: m.nrows() });
                    }
                }
                Ok(join(mats))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearLieAlg::span(r.ambient_dims, vectors)
    }
}

impl<F: Field> From<LinearLieAlg<F>> for LieRepr<F> {
    fn from(l: LinearLieAlg<F>) -> Self {
        let basis = l.space.basis().rows_iter().map(|v| l.split(v)).collect();
        LieRepr { ambient_dims: l.blocks, basis }
    }
}

/// Flattens a tuple of square matrices.
pub fn join<F: Field>(mats: &[Matrix<F>]) -> Vec<F> {
    mats.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

impl<F: Field> LinearLieAlg<F> {
    /// The span of the given flattened elements. Closure under the bracket
    /// is not assumed; see [`LinearLieAlg::closure_witness`].
    pub fn span(blocks: Vec<usize>, vectors: Vec<Vec<F>>) -> Result<LinearLieAlg<F>> {
        let ambient = blocks.iter().map(|n| n * n).sum();
        let space = Subspace::try_from_vectors(ambient, vectors)?;
        Ok(LinearLieAlg { blocks, space })
    }

    /// Span of single matrices of size n.
    pub fn from_matrices(n: usize, mats: &[Matrix<F>]) -> Result<LinearLieAlg<F>> {
        LinearLieAlg::span(vec![n], mats.iter().map(|m| m.entries().to_vec()).collect())
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    /// Canonical basis, flattened.
    pub fn basis(&self) -> Vec<Vec<F>> {
        self.space.vectors()
    }

    /// The k-th canonical basis element as a tuple of matrices.
    pub fn basis_element(&self, k: usize) -> Vec<Matrix<F>> {
        self.split(self.space.basis().row(k))
    }

    pub fn split(&self, v: &[F]) -> Vec<Matrix<F>> {
        let mut out = Vec::with_capacity(self.blocks.len());
        let mut off = 0;
        for &n in &self.blocks {
            out.push(Matrix::from_fn(n, n, |r, c| v[off + r * n + c].clone()));
            off += n * n;
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.space.contains(v)
    }

    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.space.coordinates(v)
    }

    /// Element with the given coordinates in the canonical basis.
    pub fn element(&self, coords: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient_dim()];
        for (c, b) in coords.iter().zip(self.space.basis().rows_iter()) {
            crate::linalg::axpy(&mut v, c, b);
        }
        v
    }

    /// Componentwise commutator of flattened elements.
    pub fn bracket(&self, x: &[F], y: &[F]) -> Vec<F> {
        let xs = self.split(x);
        let ys = self.split(y);
        let mats: Vec<Matrix<F>> = xs.iter().zip(&ys).map(|(a, b)| a.commutator(b)).collect();
        join(&mats)
    }

    /// First pair of basis indices whose bracket leaves the span.
    pub fn closure_witness(&self) -> Option<(usize, usize)> {
        let basis = self.basis();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !self.contains(&self.bracket(&basis[i], &basis[j])) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// c[i][j] = coordinates of [b_i, b_j].
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<F>>>> {
        let basis = self.basis();
        let n = basis.len();
        let mut c = vec![vec![vec![F::zero(); n]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket(&basis[i], &basis[j]);
                let coords = self
                    .coordinates(&v)
                    .ok_or_else(|| Error::Precondition(format!("bracket of basis elements {i} and {j} leaves the algebra")))?;
                c[j][i] = coords.iter().map(|x| -x.clone()).collect();
                c[i][j] = coords;
            }
        }
        Ok(c)
    }

    /// Matrices of ad(b_k) in the canonical basis.
    pub fn adjoint_matrices(&self) -> Result<Vec<Matrix<F>>> {
        let c = self.structure_constants()?;
        let n = c.len();
        Ok((0..n).map(|k| Matrix::from_fn(n, n, |r, s| c[k][s][r].clone())).collect())
    }

    /// K(a, b) = tr(ad a ∘ ad b) on the canonical basis.
    pub fn killing_form(&self) -> Result<QuadForm<F>> {
        let ads = self.adjoint_matrices()?;
        QuadForm::new(killing_gram(&ads))
    }

    /// The algebra in its own coordinates: bracket structure constants, with
    /// the Killing form as norm.
    pub fn structure_algebra(&self) -> Result<SCAlgebra<F>> {
        let c = self.structure_constants()?;
        let n = c.len();
        let ads: Vec<Matrix<F>> = (0..n).map(|k| Matrix::from_fn(n, n, |r, s| c[k][s][r].clone())).collect();
        let killing = QuadForm::new(killing_gram(&ads))?;
        SCAlgebra::new(c, None, Some(killing))
    }

    /// Image of the projection onto block k.
    pub fn projection(&self, k: usize) -> Subspace<F> {
        let n = self.blocks[k];
        let off: usize = self.blocks[..k].iter().map(|m| m * m).sum();
        let rows = self.space.basis().rows_iter().map(|v| v[off..off + n * n].to_vec()).collect();
        Subspace::from_vectors(n * n, rows)
    }

    pub fn projection_is_injective(&self, k: usize) -> bool {
        self.projection(k).dim() == self.dim()
    }

    /// Reorders blocks: slot i of the output is slot perm[i] of the input.
    pub fn permute_blocks(&self, v: &[F], perm: &[usize]) -> Vec<F> {
        let mats = self.split(v);
        let out: Vec<Matrix<F>> = perm.iter().map(|&p| mats[p].clone()).collect();
        join(&out)
    }

    /// K([a, b], c) + K(b, [a, c]) = 0 on basis triples; returns a failing triple.
    pub fn killing_invariance_witness(&self) -> Result<Option<(usize, usize, usize)>> {
        let c = self.structure_constants()?;
        let k = self.killing_form()?;
        let n = c.len();
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    let bd = k.polar(&c[a][b], &unit_vector(n, d));
                    let cd = k.polar(&unit_vector(n, b), &c[a][d]);
                    if !(bd + cd).is_zero() {
                        return Ok(Some((a, b, d)));
                    }
                }
            }
        }
        Ok(None)
    }
}

fn killing_gram<F: Field>(ads: &[Matrix<F>]) -> Matrix<F> {
    let n = ads.len();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut t = F::zero();
            for a in 0..n {
                for b in 0..n {
                    let (x, y) = (&ads[i][(a, b)], &ads[j][(b, a)]);
                    if !x.is_zero() && !y.is_zero() {
                        t = t + &(x.clone() * y);
                    }
                }
            }
            g[(i, j)] = t.clone();
            g[(j, i)] = t;
        }
    }
    g
}

fn unit_matrices<F: Field>(n: usize) -> Vec<Vec<F>> {
    (0..n * n).map(|k| unit_vector(n * n, k)).collect()
}

/// so(V, b) = {D : b(Dx, y) + b(x, Dy) = 0} for a nondegenerate form.
pub fn so_of_form<F: Field>(q: &QuadForm<F>) -> Result<LinearLieAlg<F>> {
    if !q.is_nondegenerate() {
        return Err(Error::Precondition("quadratic form is degenerate".into()));
    }
    let n = q.dim();
    let g = &q.gram;
    let sol = constrained_kernel(unit_matrices(n), |v: &[F]| {
        let d = Matrix::from_fn(n, n, |r, c| v[r * n + c].clone());
        let m = d.transpose().mul(g).expect("square").add(&g.mul(&d).expect("square"));
        m.entries().to_vec()
    });
    LinearLieAlg::span(vec![n], sol)
}

/// Der(A) = {d : d(xy) = d(x)y + x d(y)}.
pub fn derivations<F: Field>(a: &SCAlgebra<F>) -> Result<LinearLieAlg<F>> {
    let n = a.dim();
    let e: Vec<Vec<F>> = (0..n).map(|i| unit_vector(n, i)).collect();
    let sol = constrained_kernel(unit_matrices(n), |v: &[F]| {
        let d = Matrix::from_fn(n, n, |r, c| v[r * n + c].clone());
        let de: Vec<Vec<F>> = (0..n).map(|i| d.column(i)).collect();
        let mut out = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let lhs = d.mul_vec(a.basis_product(i, j));
                let rhs = vec_add(&a.mul(&de[i], &e[j]), &a.mul(&e[i], &de[j]));
                out.extend(lhs.into_iter().zip(rhs).map(|(x, y)| x - y));
            }
        }
        out
    });
    LinearLieAlg::span(vec![n], sol)
}

/// tri(S) = {(d₁, d₂, d₃) ∈ so(S)³ : d₁(x⋆y) = d₂(x)⋆y + x⋆d₃(y)}.
pub fn triality_algebra<F: Field>(s: &SCAlgebra<F>) -> Result<LinearLieAlg<F>> {
    s.symmetric_composition_check()
        .map_err(|f| Error::Precondition(format!("not a symmetric composition algebra: {f}")))?;
    let q = s.norm().ok_or_else(|| Error::Precondition("algebra carries no norm".into()))?;
    let n = s.dim();
    let so = so_of_form(q)?.basis();
    let k = so.len();
    let nn = n * n;
    let params: Vec<Vec<F>> = (0..3 * k).map(|i| unit_vector(3 * k, i)).collect();
    let to_mats = |p: &[F]| -> [Matrix<F>; 3] {
        std::array::from_fn(|slot| {
            let mut flat = vec![F::zero(); nn];
            for (c, b) in p[slot * k..(slot + 1) * k].iter().zip(&so) {
                crate::linalg::axpy(&mut flat, c, b);
            }
            Matrix::from_fn(n, n, |r, c| flat[r * n + c].clone())
        })
    };
    let e: Vec<Vec<F>> = (0..n).map(|i| unit_vector(n, i)).collect();
    let sol = constrained_kernel(params, |p| {
        let [d1, d2, d3] = to_mats(p);
        let mut out = Vec::with_capacity(n * n * n);
        for i in 0..n {
            let d2x = d2.column(i);
            for j in 0..n {
                let lhs = d1.mul_vec(s.basis_product(i, j));
                let rhs = vec_add(&s.mul(&d2x, &e[j]), &s.mul(&e[i], &d3.column(j)));
                out.extend(lhs.into_iter().zip(rhs).map(|(x, y)| x - y));
            }
        }
        out
    });
    let vectors = sol.iter().map(|p| join(&to_mats(p))).collect();
    LinearLieAlg::span(vec![n; 3], vectors)
}

/// The three families spanning tri of the para-Hurwitz algebra of a Hurwitz
/// algebra C, as subspaces of the flattened triples.
#[derive(Clone, Debug)]
pub struct TriDecomposition<F> {
    pub tri: LinearLieAlg<F>,
    /// (d, d, d) for d ∈ Der(C).
    pub derivations: Subspace<F>,
    /// (ad_x, −2L_x − R_x, L_x + 2R_x) for x ∈ C⁰.
    pub adjoint: Subspace<F>,
    /// (T_x, −R_x, −L_x) for x ∈ C⁰.
    pub symmetric: Subspace<F>,
}

/// L_x, R_x for x running over a basis of C⁰.
fn trace_zero_multiplications<F: Field>(c: &SCAlgebra<F>) -> Result<Vec<(Matrix<F>, Matrix<F>)>> {
    Ok(c.trace_zero()?.vectors().iter().map(|x| (c.left_mul(x), c.right_mul(x))).collect())
}

pub fn tri_decomposition<F: Field>(c: &SCAlgebra<F>) -> Result<TriDecomposition<F>> {
    let tri = triality_algebra(&c.para_hurwitz()?)?;
    let amb = tri.ambient_dim();
    let der = derivations(c)?;
    let ders = der
        .basis()
        .iter()
        .map(|d| {
            let m = der.split(d).remove(0);
            join(&[m.clone(), m.clone(), m])
        })
        .collect();
    let two = F::from_i64(2);
    let lr = trace_zero_multiplications(c)?;
    let adjoint = lr
        .iter()
        .map(|(l, r)| {
            join(&[l.sub(r), l.scale(&two).add(r).scale(&-F::one()), l.add(&r.scale(&two))])
        })
        .collect();
    let symmetric = lr
        .iter()
        .map(|(l, r)| join(&[l.add(r), r.scale(&-F::one()), l.scale(&-F::one())]))
        .collect();
    Ok(TriDecomposition {
        tri,
        derivations: Subspace::try_from_vectors(amb, ders)?,
        adjoint: Subspace::try_from_vectors(amb, adjoint)?,
        symmetric: Subspace::try_from_vectors(amb, symmetric)?,
    })
}

impl<F: Field> TriDecomposition<F> {
    pub fn families(&self) -> [(&'static str, &Subspace<F>); 3] {
        [("derivation", &self.derivations), ("adjoint", &self.adjoint), ("symmetric", &self.symmetric)]
    }

    /// Membership of each family in tri, directness of the sum, and equality
    /// of the sum with tri.
    pub fn verify(&self) -> Report {
        let mut r = Report::new();
        for (name, s) in self.families() {
            r.record(
                format!("{name} family lies in tri"),
                (!self.tri.space().contains_subspace(s)).then(|| format!("{name} family of dim {} leaves tri", s.dim())),
            );
        }
        let sum = self
            .derivations
            .sum(&self.adjoint)
            .and_then(|s| s.sum(&self.symmetric))
            .expect("same ambient");
        let total = self.derivations.dim() + self.adjoint.dim() + self.symmetric.dim();
        r.record(
            "families are independent",
            (sum.dim() != total).then(|| format!("span has dim {} but the families add up to {total}", sum.dim())),
        );
        r.record(
            "families span tri",
            (&sum != self.tri.space()).then(|| format!("span has dim {}, tri has dim {}", sum.dim(), self.tri.dim())),
        );
        r
    }
}

/// The grading induced on a Lie algebra of operators (single block) by a
/// grading of the space it acts on: L_g = {D ∈ L : D(V_h) ⊆ V_{g+h} ∀h}.
///
/// The result lives in the coordinate space of `lie`, so it can be checked
/// against [`LinearLieAlg::structure_algebra`].
pub fn induced_operator_grading<F: Field>(lie: &LinearLieAlg<F>, grading: &Grading<F>) -> Result<Grading<F>> {
    if lie.blocks().len() != 1 || lie.blocks()[0] != grading.ambient_dim() {
        return Err(Error::Precondition("operators must act on the graded space".into()));
    }
    let n = grading.ambient_dim();
    let group = grading.group();
    let graded = grading.graded_basis();
    if graded.len() != n {
        return Err(Error::Precondition("grading is not a direct sum decomposition".into()));
    }
    let p = Matrix::from_fn(n, n, |r, c| graded[c].1[r].clone());
    let pinv = p
        .inverse()
        .ok_or_else(|| Error::Precondition("grading is not a direct sum decomposition".into()))?;
    let degs: Vec<&crate::groups::GroupElem> = graded.iter().map(|(g, _)| g).collect();
    // operators in the homogeneous basis
    let conj: Vec<Matrix<F>> = (0..lie.dim())
        .map(|k| pinv.mul(&lie.basis_element(k)[0]).and_then(|m| m.mul(&p)))
        .collect::<Result<_>>()?;

    let support = grading.support();
    let mut candidates = BTreeSet::new();
    for a in &support {
        for b in &support {
            candidates.insert(group.sub(a, b)?);
        }
    }
    let mut comps = Vec::new();
    let mut total = 0;
    for g in candidates {
        let mut bad = Vec::new();
        for s in 0..n {
            let target = group.add(degs[s], &g)?;
            for r in 0..n {
                if *degs[r] != target {
                    bad.push((r, s));
                }
            }
        }
        let basis: Vec<Vec<F>> = (0..lie.dim()).map(|k| unit_vector(lie.dim(), k)).collect();
        let sol = constrained_kernel(basis, |c| {
            bad.iter()
                .map(|&(r, s)| {
                    let mut t = F::zero();
                    for (ck, m) in c.iter().zip(&conj) {
                        if !ck.is_zero() {
                            t = t + &(ck.clone() * &m[(r, s)]);
                        }
                    }
                    t
                })
                .collect()
        });
        if !sol.is_empty() {
            total += sol.len();
            comps.push((g, Subspace::try_from_vectors(lie.dim(), sol)?));
        }
    }
    if total != lie.dim() {
        return Err(Error::Precondition(format!(
            "homogeneous operators span dimension {total} of {}; the algebra is not graded by this grading",
            lie.dim()
        )));
    }
    Grading::new(group.clone(), lie.dim(), comps)
}

/// Grading on Der(C) induced by a grading on C.
pub fn induced_grading_on_der<F: Field>(c: &SCAlgebra<F>, grading: &Grading<F>) -> Result<(LinearLieAlg<F>, Grading<F>)> {
    let der = derivations(c)?;
    let g = induced_operator_grading(&der, grading)?;
    Ok((der, g))
}

/// Whether every element of `a` is skew for the given form.
pub fn is_skew_for<F: Field>(a: &LinearLieAlg<F>, q: &QuadForm<F>) -> bool {
    a.basis().iter().all(|v| {
        a.split(v).iter().all(|d| {
            let m = d.transpose().mul(&q.gram).expect("square").add(&q.gram.mul(d).expect("square"));
            is_zero_vec(m.entries())
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{ground_field, octonions, split_cayley_good_basis, split_octonions};
    use crate::gradings::{cartan_grading, cd_grading, trivial_grading, verify_grading};
    use crate::groups::FinAbGroup;
    use crate::linalg::Inertia;
    use crate::scalars::Rational;

    type Q = Rational;

    fn hyperbolic_plane() -> QuadForm<Q> {
        QuadForm::new(Matrix::from_rows(vec![vec![Q::zero(), Q::one()], vec![Q::one(), Q::zero()]], 2)).unwrap()
    }

    #[test]
    fn so_dimensions() {
        let q = octonions::<Q>().norm().unwrap().clone();
        let so = so_of_form(&q).unwrap();
        assert_eq!(so.dim(), 28);
        assert!(is_skew_for(&so, &q));
        assert_eq!(so_of_form(&hyperbolic_plane()).unwrap().dim(), 1);
    }

    #[test]
    fn so_rejects_degenerate_form() {
        let q = QuadForm::new(Matrix::<Q>::zeros(2, 2)).unwrap();
        assert!(so_of_form(&q).is_err());
    }

    #[test]
    fn derivation_dimensions() {
        let o = octonions::<Q>();
        let der = derivations(&o).unwrap();
        assert_eq!(der.dim(), 14);
        assert_eq!(der.closure_witness(), None);
        assert!(is_skew_for(&der, o.norm().unwrap()));
        assert_eq!(derivations(&split_octonions::<Q>()).unwrap().dim(), 14);
        assert_eq!(derivations(&ground_field::<Q>()).unwrap().dim(), 0);
    }

    #[test]
    fn killing_forms_of_g2() {
        let k = derivations(&octonions::<Q>()).unwrap().killing_form().unwrap();
        assert_eq!(k.inertia(), Inertia::new(0, 14, 0));
        let ks = derivations(&split_octonions::<Q>()).unwrap().killing_form().unwrap();
        let i = ks.inertia();
        assert!(i.is_nondegenerate() && i.positive > 0 && i.negative > 0);
        let abelian = LinearLieAlg::from_matrices(1, &[Matrix::<Q>::identity(1)]).unwrap();
        assert!(abelian.killing_form().unwrap().gram.is_zero());
    }

    #[test]
    fn killing_form_is_invariant() {
        let der = derivations(&split_cayley_good_basis::<Q>()).unwrap();
        assert_eq!(der.killing_invariance_witness().unwrap(), None);
    }

    #[test]
    fn triality_of_para_octonions() {
        let tri = triality_algebra(&octonions::<Q>().para_hurwitz().unwrap()).unwrap();
        assert_eq!(tri.dim(), 28);
        for k in 0..3 {
            assert!(tri.projection_is_injective(k));
        }
        for v in tri.basis() {
            assert!(tri.contains(&tri.permute_blocks(&v, &[2, 0, 1])));
        }
        assert_eq!(tri.closure_witness(), None);
    }

    #[test]
    fn triality_requires_symmetric_composition() {
        assert!(triality_algebra(&octonions::<Q>()).is_err());
    }

    #[test]
    fn tri_decomposition_of_split_octonions() {
        let c = split_octonions::<Q>();
        let d = tri_decomposition(&c).unwrap();
        assert_eq!(
            [d.derivations.dim(), d.adjoint.dim(), d.symmetric.dim()],
            [14, 7, 7]
        );
        let report = d.verify();
        assert!(report.passed(), "{report}");
        for (l, r) in trace_zero_multiplications(&c).unwrap() {
            let t = l.add(&r).scale(&-Q::one());
            assert!(d.tri.contains(&join(&[l, t, r])));
        }
    }

    #[test]
    fn der_grading_from_full_cd() {
        let o = octonions::<Q>();
        let g = FinAbGroup::new(0, vec![2, 2, 2]).unwrap();
        let grading = cd_grading(&o, &g, &g.generators()).unwrap();
        let (der, dg) = induced_grading_on_der(&o, &grading).unwrap();
        assert_eq!(dg.dims(), vec![2; 7]);
        assert!(!dg.support().contains(&g.identity()));
        let alg = der.structure_algebra().unwrap();
        assert!(verify_grading(&dg, &alg).passed());
    }

    #[test]
    fn der_grading_from_cartan() {
        let c = split_cayley_good_basis::<Q>();
        let z2 = FinAbGroup::free(2);
        let (a, b) = (z2.generator(0), z2.generator(1));
        let gamma = [a.clone(), b.clone(), z2.neg(&z2.add(&a, &b).unwrap()).unwrap()];
        let grading = cartan_grading::<Q>(&z2, &gamma).unwrap();
        let (der, dg) = induced_grading_on_der(&c, &grading).unwrap();
        assert_eq!(dg.component(&z2.identity()).map(Subspace::dim), Some(2));
        assert_eq!(dg.dim_census(), [(1, 12), (2, 1)].into_iter().collect());
        assert!(verify_grading(&dg, &der.structure_algebra().unwrap()).passed());
    }

    #[test]
    fn der_grading_from_trivial() {
        let o = octonions::<Q>();
        let g = FinAbGroup::cyclic(2);
        let (_, dg) = induced_grading_on_der(&o, &trivial_grading(&o, &g).unwrap()).unwrap();
        assert_eq!(dg.support(), vec![g.identity()]);
        assert_eq!(dg.dims(), vec![14]);
    }

    #[test]
    fn json_round_trip() {
        let so = so_of_form(&hyperbolic_plane()).unwrap();
        let s = serde_json::to_string(&so).unwrap();
        let back: LinearLieAlg<Q> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, so);
    }
}
