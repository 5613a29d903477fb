//! Group gradings: data structure, verification, induced gradings, universal
//! groups, and the gradings on Cayley algebras.

mod cayley;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::composition::SCAlgebra;
use crate::groups::{universal_group, FinAbGroup, GroupElem, GroupHom, UniversalGroup};
use crate::linalg::{inertia_of, is_zero_vec, Inertia, Matrix, Subspace};
use crate::report::Report;
use crate::scalars::{Field, OrderedField};
use crate::twisted::TypeIIILabel;
use crate::{Error, Result};

pub use cayley::{
    admissible, admissible_sign_maps, cartan_grading, cayley_for_mu, cd_grading, elementary_2_basis, elementary_2_subgroup,
    iso_decision, trivial_grading, CayleyKind, CayleyLabel, CayleyVariant, SignMap,
};
#[allow(unused_imports)]
pub(crate) use cayley::{triples_equivalent, PERMUTATIONS};

/// Classification data attached to a constructed grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Label {
    Cayley(CayleyLabel),
    TypeIii(TypeIIILabel),
}

/// A G-grading: a decomposition of F^n into homogeneous subspaces indexed by
/// distinct degrees. Zero components are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GradingRepr<F>", into = "GradingRepr<F>")]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
pub struct Grading<F> {
    group: FinAbGroup,
    ambient: usize,
    components: Vec<(GroupElem, Subspace<F>)>,
    label: Option<Label>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
struct ComponentRepr<F> {
    degree: GroupElem,
    basis: Vec<Vec<F>>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "F: Field", deserialize = "F: Field"))]
struct GradingRepr<F> {
    group: FinAbGroup,
    ambient_dim: usize,
    components: Vec<ComponentRepr<F>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<Label>,
}

impl<F: Field> TryFrom<GradingRepr<F>> for Grading<F> {
    type Error = Error;
    fn try_from(r: GradingRepr<F>) -> Result<Self> {
        let comps = r
            .components
            .into_iter()
            .map(|c| Ok((c.degree, Subspace::try_from_vectors(r.ambient_dim, c.basis)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut g = Grading::new(r.group, r.ambient_dim, comps)?;
        g.label = r.label;
        Ok(g)
    }
}

impl<F: Field> From<Grading<F>> for GradingRepr<F> {
    fn from(g: Grading<F>) -> Self {
        GradingRepr {
            group: g.group,
            ambient_dim: g.ambient,
            components: g
                .components
                .into_iter()
                .map(|(degree, s)| ComponentRepr { degree, basis: s.vectors() })
                .collect(),
            label: g.label,
        }
    }
}

impl<F: Field> Grading<F> {
    /// Builds a grading from (degree, subspace) pairs. Zero subspaces are
    /// dropped; degrees must be distinct elements of `group`. Whether the
    /// pieces form a direct sum is left to [`verify_grading`].
    pub fn new(
        group: FinAbGroup,
        ambient: usize,
        components: Vec<(GroupElem, Subspace<F>)>,
    ) -> Result<Grading<F>> {
        let mut comps: Vec<(GroupElem, Subspace<F>)> = Vec::new();
        for (g, s) in components {
            if !group.contains(&g) {
                return Err(Error::ParentMismatch);
            }
            if s.ambient_dim() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: s.ambient_dim() });
            }
            if !s.is_zero() {
                comps.push((g, s));
            }
        }
        comps.sort_by(|a, b| a.0.cmp(&b.0));
        if comps.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Invalid("repeated degree in grading".into()));
        }
        Ok(Grading { group, ambient, components: comps, label: None })
    }

    /// Grading in which every basis vector is homogeneous of the given degree.
    pub fn from_basis_degrees(group: FinAbGroup, degrees: &[GroupElem]) -> Result<Grading<F>> {
        let n = degrees.len();
        let mut by_degree: BTreeMap<GroupElem, Vec<usize>> = BTreeMap::new();
        for (i, d) in degrees.iter().enumerate() {
            by_degree.entry(d.clone()).or_default().push(i);
        }
        let comps = by_degree
            .into_iter()
            .map(|(d, idx)| (d, Subspace::span_of_units(n, idx)))
            .collect();
        Grading::new(group, n, comps)
    }

    pub fn with_label(mut self, label: Label) -> Grading<F> {
        self.label = Some(label);
        self
    }

    pub fn label(&self) -> Option<&Label> {
        self.label.as_ref()
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn components(&self) -> &[(GroupElem, Subspace<F>)] {
        &self.components
    }

    pub fn components_mut(&mut self) -> &mut Vec<(GroupElem, Subspace<F>)> {
        &mut self.components
    }

    pub fn support(&self) -> Vec<GroupElem> {
        self.components.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn component(&self, g: &GroupElem) -> Option<&Subspace<F>> {
        self.components
            .binary_search_by(|(d, _)| d.cmp(g))
            .ok()
            .map(|i| &self.components[i].1)
    }

    /// Sorted multiset of component dimensions.
    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.components.iter().map(|(_, s)| s.dim()).collect();
        d.sort_unstable();
        d
    }

    /// Histogram dim ↦ number of components of that dimension.
    pub fn dim_census(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for (_, s) in &self.components {
            *m.entry(s.dim()).or_insert(0) += 1;
        }
        m
    }

    /// Degree of a nonzero homogeneous vector.
    pub fn degree_of(&self, v: &[F]) -> Option<GroupElem> {
        if is_zero_vec(v) {
            return None;
        }
        self.components.iter().find(|(_, s)| s.contains(v)).map(|(g, _)| g.clone())
    }

    pub fn is_direct_sum(&self) -> bool {
        let total: usize = self.components.iter().map(|(_, s)| s.dim()).sum();
        if total != self.ambient {
            return false;
        }
        let all: Vec<Vec<F>> = self.components.iter().flat_map(|(_, s)| s.vectors()).collect();
        Subspace::from_vectors(self.ambient, all).dim() == self.ambient
    }

    /// Concatenated component bases with their degrees.
    pub fn graded_basis(&self) -> Vec<(GroupElem, Vec<F>)> {
        self.components
            .iter()
            .flat_map(|(g, s)| s.vectors().into_iter().map(move |v| (g.clone(), v)))
            .collect()
    }

    /// Grading ^αΓ: the component at h is the sum of the U_g with α(g) = h.
    pub fn induce(&self, alpha: &GroupHom) -> Result<Grading<F>> {
        if alpha.source != self.group {
            return Err(Error::ParentMismatch);
        }
        let mut merged: BTreeMap<GroupElem, Vec<Vec<F>>> = BTreeMap::new();
        for (g, s) in &self.components {
            merged.entry(alpha.apply(g)?).or_default().extend(s.vectors());
        }
        let comps = merged
            .into_iter()
            .map(|(h, vs)| (h, Subspace::from_vectors(self.ambient, vs)))
            .collect();
        let mut out = Grading::new(alpha.target.clone(), self.ambient, comps)?;
        if alpha.source == alpha.target && alpha.images == self.group.generators() {
            out.label = self.label.clone();
        }
        Ok(out)
    }

    /// Same components, degrees renamed through `f` into `group`.
    pub fn relabel(&self, group: FinAbGroup, f: impl Fn(&GroupElem) -> GroupElem) -> Result<Grading<F>> {
        let comps = self.components.iter().map(|(g, s)| (f(g), s.clone())).collect();
        Grading::new(group, self.ambient, comps)
    }

    /// Image of the grading under a linear isomorphism.
    pub fn transport(&self, m: &Matrix<F>) -> Result<Grading<F>> {
        let comps = self
            .components
            .iter()
            .map(|(g, s)| Ok((g.clone(), s.image(m)?)))
            .collect::<Result<Vec<_>>>()?;
        Grading::new(self.group.clone(), m.nrows(), comps)
    }
}

/// An operator on the graded space that shifts degrees by a fixed amount.
#[derive(Clone, Debug)]
pub struct GradedOperator<F> {
    pub name: String,
    /// `None` means degree e.
    pub degree: Option<GroupElem>,
    pub matrix: Matrix<F>,
}

/// The structure a grading must be compatible with.
pub trait GradedTarget<F: Field> {
    fn dim(&self) -> usize;

    /// Bilinear product V × V → V, required to be degree additive.
    fn product(&self, _x: &[F], _y: &[F]) -> Option<Vec<F>> {
        None
    }

    /// Scalar-valued bilinear form with b(V_g, V_h) = 0 unless g + h = e.
    fn form(&self, _x: &[F], _y: &[F]) -> Option<F> {
        None
    }

    fn operators(&self) -> Vec<GradedOperator<F>> {
        Vec::new()
    }

    /// Bilinear map into a graded space W, with b(V_g, V_h) ⊆ W_{g+h}.
    fn graded_form(&self, _x: &[F], _y: &[F]) -> Option<Vec<F>> {
        None
    }

    fn value_grading(&self) -> Option<Grading<F>> {
        None
    }
}

impl<F: Field> GradedTarget<F> for SCAlgebra<F> {
    fn dim(&self) -> usize {
        SCAlgebra::dim(self)
    }

    fn product(&self, x: &[F], y: &[F]) -> Option<Vec<F>> {
        Some(self.mul(x, y))
    }

    fn form(&self, x: &[F], y: &[F]) -> Option<F> {
        self.norm().map(|q| q.polar(x, y))
    }

    fn operators(&self) -> Vec<GradedOperator<F>> {
        match (self.unit(), self.conj_matrix()) {
            (Some(_), Ok(m)) => vec![GradedOperator { name: "involution".into(), degree: None, matrix: m }],
            _ => Vec::new(),
        }
    }
}

fn component_or_zero<'a, F: Field>(g: &'a Grading<F>, d: &GroupElem) -> Option<&'a Subspace<F>> {
    g.component(d)
}

fn lands_in<F: Field>(target: Option<&Subspace<F>>, v: &[F]) -> bool {
    match target {
        Some(s) => s.contains(v),
        None => is_zero_vec(v),
    }
}

/// Checks the decomposition and its compatibility with every structure the
/// target exposes. Failures carry a witness naming the offending degrees.
pub fn verify_grading<F: Field, T: GradedTarget<F> + ?Sized>(grading: &Grading<F>, target: &T) -> Report {
    let mut report = Report::new();
    let group = grading.group();

    if grading.ambient_dim() != target.dim() {
        report.fail(
            "dimension",
            format!("grading on dimension {}, target has dimension {}", grading.ambient_dim(), target.dim()),
        );
        return report;
    }
    report.record(
        "direct sum",
        (!grading.is_direct_sum()).then(|| {
            let total: usize = grading.components().iter().map(|(_, s)| s.dim()).sum();
            format!("component dimensions sum to {total} but the span is not the whole space of dimension {}", grading.ambient_dim())
        }),
    );

    let comps: Vec<(GroupElem, Vec<Vec<F>>)> =
        grading.components().iter().map(|(g, s)| (g.clone(), s.vectors())).collect();
    let add = |a: &GroupElem, b: &GroupElem| group.add(a, b).expect("degrees in group");

    let probe = comps.first().and_then(|(_, vs)| vs.first());
    if let Some(x) = probe {
        if target.product(x, x).is_some() {
            let mut witness = None;
            'outer: for (g, xs) in &comps {
                for (h, ys) in &comps {
                    let dest = component_or_zero(grading, &add(g, h));
                    for (i, x) in xs.iter().enumerate() {
                        for (j, y) in ys.iter().enumerate() {
                            let p = target.product(x, y).expect("product");
                            if !lands_in(dest, &p) {
                                witness = Some(format!(
                                    "product of basis vector {i} of degree {g} and basis vector {j} of degree {h} leaves degree {}",
                                    add(g, h)
                                ));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            report.record("product is degree additive", witness);
        }

        if target.form(x, x).is_some() {
            let mut witness = None;
            'outer2: for (g, xs) in &comps {
                for (h, ys) in &comps {
                    if group.is_identity(&add(g, h)) {
                        continue;
                    }
                    for x in xs {
                        for y in ys {
                            if !target.form(x, y).expect("form").is_zero() {
                                witness = Some(format!("form pairs degrees {g} and {h} nontrivially"));
                                break 'outer2;
                            }
                        }
                    }
                }
            }
            report.record("form pairs U_g with U_-g only", witness);
        }

        if let Some(wg) = target.value_grading() {
            let mut witness = None;
            'outer3: for (g, xs) in &comps {
                for (h, ys) in &comps {
                    let dest = wg.component(&add(g, h));
                    for x in xs {
                        for y in ys {
                            let v = target.graded_form(x, y).expect("graded form");
                            if !lands_in(dest, &v) {
                                witness = Some(format!("graded form on degrees {g}, {h} leaves degree {}", add(g, h)));
                                break 'outer3;
                            }
                        }
                    }
                }
            }
            report.record("graded form is degree additive", witness);
        }
    }

    for op in target.operators() {
        let shift = op.degree.clone().unwrap_or_else(|| group.identity());
        let mut witness = None;
        'ops: for (g, xs) in &comps {
            let dest = component_or_zero(grading, &add(g, &shift));
            for x in xs {
                if !lands_in(dest, &op.matrix.mul_vec(x)) {
                    witness = Some(format!("{} moves degree {g} outside degree {}", op.name, add(g, &shift)));
                    break 'ops;
                }
            }
        }
        report.record(format!("{} has degree {shift}", op.name), witness);
    }
    report
}

/// Relations s₁ + s₂ = s₃ read off the nonzero products of components.
pub fn product_relations<F: Field, T: GradedTarget<F> + ?Sized>(
    grading: &Grading<F>,
    target: &T,
) -> Result<Vec<(GroupElem, GroupElem, GroupElem)>> {
    let group = grading.group();
    let comps: Vec<(GroupElem, Vec<Vec<F>>)> =
        grading.components().iter().map(|(g, s)| (g.clone(), s.vectors())).collect();
    let mut rels = Vec::new();
    for (g, xs) in &comps {
        for (h, ys) in &comps {
            let nonzero = xs.iter().any(|x| {
                ys.iter().any(|y| target.product(x, y).is_some_and(|p| !is_zero_vec(&p)))
            });
            if nonzero {
                let s = group.add(g, h)?;
                if grading.component(&s).is_none() {
                    return Err(Error::Precondition(format!(
                        "product of degrees {g} and {h} is nonzero outside the support"
                    )));
                }
                rels.push((g.clone(), h.clone(), s));
            }
        }
    }
    Ok(rels)
}

/// The universal group of a grading and the grading realized over it.
pub fn grading_universal_group<F: Field, T: GradedTarget<F> + ?Sized>(
    grading: &Grading<F>,
    target: &T,
) -> Result<(UniversalGroup<GroupElem>, Grading<F>)> {
    let rels = product_relations(grading, target)?;
    let u = universal_group(&grading.support(), &rels)?;
    let mut relabeled = grading.relabel(u.group.clone(), |g| u.labels[g].clone())?;
    relabeled.label = grading.label.clone();
    Ok((u, relabeled))
}

/// Per-component dimension and inertia of the restricted form.
pub fn fingerprint<F: OrderedField>(
    grading: &Grading<F>,
    gram: &Matrix<F>,
) -> Result<BTreeMap<GroupElem, (usize, Inertia)>> {
    grading
        .components()
        .iter()
        .map(|(g, s)| {
            let b = s.basis();
            let r = Matrix::from_fn(s.dim(), s.dim(), |i, j| gram.bilinear(b.row(i), b.row(j)));
            Ok((g.clone(), (s.dim(), inertia_of(&r)?)))
        })
        .collect()
}

#[cfg(test)]
mod tests;
