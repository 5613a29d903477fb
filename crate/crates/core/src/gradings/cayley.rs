use std::fmt;

use serde::{Deserialize, Serialize};

use super::Grading;
use crate::composition::{cayley_dickson_chain, good, octonions, split_cayley_good_basis, split_octonions, SCAlgebra};
use crate::groups::{FinAbGroup, GroupElem, Subgroup};
use crate::linalg::{inertia_of, Inertia, Subspace};
use crate::scalars::OrderedField;
use crate::{Error, Result};

/// The two real Cayley algebras, told apart by the inertia of the norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CayleyKind {
    O,
    Os,
}

impl CayleyKind {
    pub fn of<F: OrderedField>(alg: &SCAlgebra<F>) -> Result<CayleyKind> {
        match (alg.dim(), alg.norm_inertia()) {
            (8, Some(i)) if i == Inertia::new(8, 0, 0) => Ok(CayleyKind::O),
            (8, Some(i)) if i == Inertia::new(4, 4, 0) => Ok(CayleyKind::Os),
            _ => Err(Error::Precondition("not a real Cayley algebra".into())),
        }
    }

    pub fn norm_inertia(self) -> Inertia {
        match self {
            CayleyKind::O => Inertia::new(8, 0, 0),
            CayleyKind::Os => Inertia::new(4, 4, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CayleyKind::O => "O",
            CayleyKind::Os => "Os",
        }
    }
}

impl std::str::FromStr for CayleyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" => Ok(CayleyKind::O),
            "Os" => Ok(CayleyKind::Os),
            _ => Err(Error::Invalid(format!("unknown Cayley algebra {s:?}, expected O or Os"))),
        }
    }
}

/// A homomorphism μ: T → {±1}, listed on every element of T.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(GroupElem, i8)>", into = "Vec<(GroupElem, i8)>")]
pub struct SignMap {
    values: Vec<(GroupElem, i8)>,
}

impl TryFrom<Vec<(GroupElem, i8)>> for SignMap {
    type Error = Error;
    fn try_from(mut values: Vec<(GroupElem, i8)>) -> Result<Self> {
        values.sort();
        if values.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Invalid("sign map lists an element twice".into()));
        }
        if values.iter().any(|(_, s)| s.abs() != 1) {
            return Err(Error::Invalid("sign map values must be 1 or -1".into()));
        }
        Ok(SignMap { values })
    }
}

impl From<SignMap> for Vec<(GroupElem, i8)> {
    fn from(m: SignMap) -> Self {
        m.values
    }
}

impl SignMap {
    /// Extends signs on independent generators of an elementary abelian
    /// 2-subgroup multiplicatively.
    pub fn from_generators(group: &FinAbGroup, gens: &[GroupElem], signs: &[i8]) -> Result<SignMap> {
        if gens.len() != signs.len() {
            return Err(Error::DimensionMismatch { expected: gens.len(), got: signs.len() });
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::Invalid("signs must be 1 or -1".into()));
        }
        elementary_2_subgroup(group, gens)?;
        let mut values = Vec::new();
        for mask in 0u32..(1 << gens.len()) {
            let mut x = group.identity();
            let mut s = 1i8;
            for (k, (g, sg)) in gens.iter().zip(signs).enumerate() {
                if mask >> k & 1 == 1 {
                    x = group.add(&x, g)?;
                    s *= sg;
                }
            }
            values.push((x, s));
        }
        SignMap::try_from(values)
    }

    pub fn trivial(elements: &[GroupElem]) -> SignMap {
        SignMap { values: elements.iter().map(|t| (t.clone(), 1)).collect() }
    }

    pub fn domain(&self) -> Vec<GroupElem> {
        self.values.iter().map(|(t, _)| t.clone()).collect()
    }

    pub fn get(&self, t: &GroupElem) -> Option<i8> {
        self.values.binary_search_by(|(x, _)| x.cmp(t)).ok().map(|i| self.values[i].1)
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|(_, s)| *s == 1)
    }

    pub fn values(&self) -> &[(GroupElem, i8)] {
        &self.values
    }

    /// Whether the domain is a subgroup and μ(st) = μ(s)μ(t).
    pub fn is_homomorphism(&self, group: &FinAbGroup) -> bool {
        self.values.iter().all(|(s, a)| {
            self.values.iter().all(|(t, b)| match group.add(s, t) {
                Ok(st) => self.get(&st) == Some(a * b),
                Err(_) => false,
            })
        })
    }
}

impl fmt::Display for SignMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.values.iter().map(|(t, s)| format!("{t}:{}", if *s > 0 { "+" } else { "-" })).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

/// Sorted elements of the subgroup generated by `gens`, which must be
/// independent elements of order 2.
pub fn elementary_2_subgroup(group: &FinAbGroup, gens: &[GroupElem]) -> Result<Vec<GroupElem>> {
    for g in gens {
        if group.elem_order(g)? != Some(2) {
            return Err(Error::Precondition(format!("{g} does not have order 2")));
        }
    }
    let t = Subgroup::generated(group, gens)?;
    if t.order() != Some(1u64 << gens.len()) {
        return Err(Error::Precondition("generators of T are not independent".into()));
    }
    t.elements()
}

/// Signature criterion for μ against the norm of the target algebra. The
/// prescribed form is n_D ⊥ μ(t₁)n_D ⊥ … with n_D positive definite on the
/// identity component D of dimension 8/|T|.
pub fn admissible(mu: &SignMap, group: &FinAbGroup, norm: Inertia) -> bool {
    let size = mu.values.len();
    if !matches!(size, 2 | 4 | 8) || !mu.is_homomorphism(group) || mu.get(&group.identity()) != Some(1) {
        return false;
    }
    let block = 8 / size;
    let positives = block * mu.values.iter().filter(|(_, s)| *s == 1).count();
    norm == Inertia::new(positives, 8 - positives, 0)
}

/// The parameters of a Cayley grading, as in the classification of gradings
/// on real Cayley algebras. T is stored as its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CayleyVariant {
    Trivial,
    Cartan { gamma: [GroupElem; 3] },
    Quaternion { t: Vec<GroupElem> },
    Quadratic { t: Vec<GroupElem>, mu: SignMap },
    Full { t: Vec<GroupElem>, mu: SignMap },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyLabel {
    pub group: FinAbGroup,
    pub algebra: CayleyKind,
    pub variant: CayleyVariant,
}

impl CayleyLabel {
    /// Cartan (e,e,e) is the trivial grading.
    pub fn normalized(&self) -> CayleyLabel {
        let mut out = self.clone();
        if let CayleyVariant::Cartan { gamma } = &self.variant {
            if gamma.iter().all(|g| self.group.is_identity(g)) {
                out.variant = CayleyVariant::Trivial;
            }
        }
        out
    }

    pub fn item_name(&self) -> &'static str {
        match self.normalized().variant {
            CayleyVariant::Trivial => "trivial",
            CayleyVariant::Cartan { .. } => "cartan",
            CayleyVariant::Quaternion { .. } => "quaternion",
            CayleyVariant::Quadratic { .. } => "quadratic",
            CayleyVariant::Full { .. } => "full",
        }
    }
}

/// Whether two Cayley gradings over the same group are isomorphic, decided
/// from their labels. Valid over real closed fields.
pub fn iso_decision(a: &CayleyLabel, b: &CayleyLabel) -> Result<bool> {
    if a.group != b.group {
        return Err(Error::Precondition("labels are over different groups".into()));
    }
    if a.algebra != b.algebra {
        return Ok(false);
    }
    let (a, b) = (a.normalized(), b.normalized());
    use CayleyVariant::*;
    Ok(match (&a.variant, &b.variant) {
        (Trivial, Trivial) => true,
        (Cartan { gamma: g }, Cartan { gamma: h }) => triples_equivalent(&a.group, g, h, None)?,
        (Quaternion { t }, Quaternion { t: s }) => t == s,
        (Quadratic { t, mu }, Quadratic { t: s, mu: nu }) | (Full { t, mu }, Full { t: s, mu: nu }) => {
            t == s && mu == nu
        }
        _ => false,
    })
}

pub(crate) const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// γ ∼ γ′: g′ᵢ = k·g_π(i) + j·h for some π ∈ Sym(3), k = ±1 and, when a
/// shift h is supplied, j ∈ {0, 1, 2}.
pub(crate) fn triples_equivalent(
    group: &FinAbGroup,
    g: &[GroupElem; 3],
    h: &[GroupElem; 3],
    shift: Option<&GroupElem>,
) -> Result<bool> {
    let shifts = match shift {
        Some(s) => vec![group.identity(), s.clone(), group.mul(2, s)?],
        None => vec![group.identity()],
    };
    for p in PERMUTATIONS {
        for k in [1, -1] {
            for s in &shifts {
                let mut ok = true;
                for i in 0..3 {
                    if group.add(&group.mul(k, &g[p[i]])?, s)? != h[i] {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// The grading with a single component at e.
pub fn trivial_grading<F: OrderedField>(alg: &SCAlgebra<F>, group: &FinAbGroup) -> Result<Grading<F>> {
    let kind = CayleyKind::of(alg)?;
    let g = Grading::new(group.clone(), 8, vec![(group.identity(), Subspace::full(8))])?;
    Ok(g.with_label(super::Label::Cayley(CayleyLabel {
        group: group.clone(),
        algebra: kind,
        variant: CayleyVariant::Trivial,
    })))
}

/// Γ_Cs(G, γ) on the good basis of the split Cayley algebra: e₁, e₂ in
/// degree e, uᵢ in degree gᵢ and vᵢ in degree −gᵢ.
pub fn cartan_grading<F: OrderedField>(group: &FinAbGroup, gamma: &[GroupElem; 3]) -> Result<Grading<F>> {
    if !group.is_identity(&group.sum(gamma.iter())?) {
        return Err(Error::Precondition("the Cartan triple must sum to the identity".into()));
    }
    let mut degrees = vec![group.identity(); 8];
    for j in 0..3 {
        degrees[good::U[j]] = gamma[j].clone();
        degrees[good::V[j]] = group.neg(&gamma[j])?;
    }
    let g = Grading::from_basis_degrees(group.clone(), &degrees)?;
    Ok(g.with_label(super::Label::Cayley(CayleyLabel {
        group: group.clone(),
        algebra: CayleyKind::Os,
        variant: CayleyVariant::Cartan { gamma: gamma.clone() },
    })))
}

/// Which doubling steps carry a degree, for |T| = 2, 4, 8.
fn graded_levels(rank: usize) -> Result<&'static [usize]> {
    match rank {
        1 => Ok(&[2]),
        2 => Ok(&[1, 2]),
        3 => Ok(&[0, 1, 2]),
        _ => Err(Error::Precondition("T must have 1, 2 or 3 generators".into())),
    }
}

/// The Cayley–Dickson grading on an algebra built as CD(F, α, β, γ): basis
/// vector with doubling bits b₀b₁b₂ gets degree Σ bₖ·t for the graded
/// levels. With one generator the identity component is the quaternion
/// subalgebra, with two it is the quadratic subalgebra; either must be a
/// division algebra.
pub fn cd_grading<F: OrderedField>(
    alg: &SCAlgebra<F>,
    group: &FinAbGroup,
    gens: &[GroupElem],
) -> Result<Grading<F>> {
    let kind = CayleyKind::of(alg)?;
    if alg.cd_params().len() != 3 {
        return Err(Error::Precondition("algebra was not built by a Cayley-Dickson chain".into()));
    }
    let levels = graded_levels(gens.len())?;
    let t = elementary_2_subgroup(group, gens)?;
    let mut degrees = Vec::with_capacity(8);
    for b in 0..8usize {
        let mut d = group.identity();
        for (gen, &lvl) in gens.iter().zip(levels) {
            if b >> lvl & 1 == 1 {
                d = group.add(&d, gen)?;
            }
        }
        degrees.push(d);
    }
    let grading = Grading::<F>::from_basis_degrees(group.clone(), &degrees)?;
    let norm = alg.norm().expect("Cayley algebra has a norm");
    let ident = grading.component(&group.identity()).expect("unit has degree e");
    let id_inertia = inertia_of(&norm.restrict(ident))?;
    if !(id_inertia.is_definite() && id_inertia.positive > 0) {
        return Err(Error::Precondition("identity component is not a division subalgebra".into()));
    }
    let mut signs = Vec::new();
    for tt in &t {
        let b = (0..8).find(|&b| &degrees[b] == tt).expect("every element of T occurs");
        let v = norm.value(&alg.basis_vector(b));
        signs.push((tt.clone(), v.sign().to_i8()));
    }
    let mu = SignMap::try_from(signs)?;
    if !admissible(&mu, group, kind.norm_inertia()) {
        return Err(Error::Invalid("sign map of the grading is not admissible".into()));
    }
    let variant = match gens.len() {
        1 => CayleyVariant::Quaternion { t },
        2 => CayleyVariant::Quadratic { t, mu },
        _ => CayleyVariant::Full { t, mu },
    };
    Ok(grading.with_label(super::Label::Cayley(CayleyLabel { group: group.clone(), algebra: kind, variant })))
}

/// A Cayley–Dickson chain realizing μ: the doubling parameters are −μ(tᵢ)
/// on the graded levels and −1 on the others.
pub fn cayley_for_mu<F: OrderedField>(
    kind: CayleyKind,
    group: &FinAbGroup,
    gens: &[GroupElem],
    signs: &[i8],
) -> Result<SCAlgebra<F>> {
    let mu = SignMap::from_generators(group, gens, signs)?;
    if !admissible(&mu, group, kind.norm_inertia()) {
        return Err(Error::Invalid(format!("sign map {mu} is not admissible for {}", kind.name())));
    }
    let levels = graded_levels(gens.len())?;
    let mut params = vec![F::from_i64(-1); 3];
    for (&lvl, &s) in levels.iter().zip(signs) {
        params[lvl] = F::from_i64(-(s as i64));
    }
    let alg = cayley_dickson_chain(&params)?;
    debug_assert_eq!(CayleyKind::of(&alg).ok(), Some(kind));
    Ok(alg)
}

/// Sign maps on T that are admissible for the given algebra.
pub fn admissible_sign_maps(kind: CayleyKind, group: &FinAbGroup, gens: &[GroupElem]) -> Result<Vec<SignMap>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << gens.len()) {
        let signs: Vec<i8> = (0..gens.len()).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
        let mu = SignMap::from_generators(group, gens, &signs)?;
        if admissible(&mu, group, kind.norm_inertia()) {
            out.push(mu);
        }
    }
    Ok(out)
}

/// A minimal generating set of an elementary abelian 2-subgroup given by its
/// element list.
pub fn elementary_2_basis(group: &FinAbGroup, t: &[GroupElem]) -> Result<Vec<GroupElem>> {
    let mut gens: Vec<GroupElem> = Vec::new();
    for x in t {
        if !Subgroup::generated(group, &gens)?.contains(x) {
            gens.push(x.clone());
        }
    }
    if elementary_2_subgroup(group, &gens)? != t {
        return Err(Error::Invalid("T is not an elementary abelian 2-subgroup".into()));
    }
    Ok(gens)
}

impl CayleyLabel {
    /// Builds a Cayley algebra and a grading on it carrying this label.
    pub fn realize<F: OrderedField>(&self) -> Result<(SCAlgebra<F>, Grading<F>)> {
        let group = &self.group;
        let (alg, grading) = match &self.variant {
            CayleyVariant::Trivial => {
                let alg = match self.algebra {
                    CayleyKind::O => octonions(),
                    CayleyKind::Os => split_octonions(),
                };
                let g = trivial_grading(&alg, group)?;
                (alg, g)
            }
            CayleyVariant::Cartan { gamma } => {
                if self.algebra != CayleyKind::Os {
                    return Err(Error::Precondition("Cartan gradings live on the split Cayley algebra".into()));
                }
                (split_cayley_good_basis(), cartan_grading(group, gamma)?)
            }
            CayleyVariant::Quaternion { t } => {
                let gens = elementary_2_basis(group, t)?;
                let sign = match self.algebra {
                    CayleyKind::O => 1,
                    CayleyKind::Os => -1,
                };
                let alg = cayley_for_mu(self.algebra, group, &gens, &[sign])?;
                let g = cd_grading(&alg, group, &gens)?;
                (alg, g)
            }
            CayleyVariant::Quadratic { t, mu } | CayleyVariant::Full { t, mu } => {
                let gens = elementary_2_basis(group, t)?;
                let signs = gens
                    .iter()
                    .map(|g| mu.get(g).ok_or_else(|| Error::Invalid("sign map is not defined on T".into())))
                    .collect::<Result<Vec<_>>>()?;
                let alg = cayley_for_mu(self.algebra, group, &gens, &signs)?;
                let g = cd_grading(&alg, group, &gens)?;
                (alg, g)
            }
        };
        match grading.label() {
            Some(super::Label::Cayley(l)) if l.normalized() == self.normalized() => Ok((alg, grading)),
            _ => Err(Error::Invalid(format!("label does not describe a realizable {} grading", self.item_name()))),
        }
    }
}
