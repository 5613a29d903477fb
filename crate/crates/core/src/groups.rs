//! Finitely generated abelian groups in invariant-factor form.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::linalg::{hermite_normal_form, smith_normal_form, IntMatrix, Matrix};
use crate::scalars::Rational;
use crate::{Error, Result};

/// Z^free_rank × Z_{n₁} × … × Z_{n_k} with n₁ | n₂ | … and every nᵢ ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr")]
pub struct FinAbGroup {
    free_rank: usize,
    torsion: Vec<i64>,
}

#[derive(Deserialize)]
struct GroupRepr {
    free_rank: usize,
    torsion: Vec<i64>,
}

impl TryFrom<GroupRepr> for FinAbGroup {
    type Error = Error;
    fn try_from(r: GroupRepr) -> Result<Self> {
        FinAbGroup::new(r.free_rank, r.torsion)
    }
}

/// An element, written additively; torsion residues are reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElem {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl GroupElem {
    /// All coordinates, free part first.
    pub fn coords(&self) -> Vec<i64> {
        self.free.iter().chain(&self.torsion).copied().collect()
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fr: Vec<String> = self.free.iter().map(i64::to_string).collect();
        let to: Vec<String> = self.torsion.iter().map(i64::to_string).collect();
        write!(f, "({};{})", fr.join(","), to.join(","))
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let n = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&m| m == n).count();
            parts.push(if run == 1 { format!("Z{n}") } else { format!("Z{n}^{run}") });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl FinAbGroup {
    pub fn new(free_rank: usize, torsion: Vec<i64>) -> Result<FinAbGroup> {
        if torsion.iter().any(|&n| n < 2) {
            return Err(Error::Invalid(format!("invariant factors must be >= 2, got {torsion:?}")));
        }
        if torsion.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::Invalid(format!("invariant factors must divide each other, got {torsion:?}")));
        }
        Ok(FinAbGroup { free_rank, torsion })
    }

    pub fn trivial() -> FinAbGroup {
        FinAbGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> FinAbGroup {
        FinAbGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(n: i64) -> FinAbGroup {
        if n == 0 {
            FinAbGroup::free(1)
        } else if n == 1 {
            FinAbGroup::trivial()
        } else {
            FinAbGroup { free_rank: 0, torsion: vec![n.abs()] }
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    /// Number of standard generators (free first, then torsion).
    pub fn ngens(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Orders of the cyclic factors in the primary decomposition, sorted.
    pub fn primary_factors(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for &n in &self.torsion {
            let mut m = n;
            let mut p = 2;
            while m > 1 {
                let mut q = 1;
                while m % p == 0 {
                    m /= p;
                    q *= p;
                }
                if q > 1 {
                    out.push(q);
                }
                p += 1;
            }
        }
        out.sort_unstable();
        out
    }

    /// Name in primary form, e.g. `Z^2 x Z2^3 x Z3`.
    pub fn primary_name(&self) -> String {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let f = self.primary_factors();
        let mut i = 0;
        while i < f.len() {
            let run = f[i..].iter().take_while(|&&m| m == f[i]).count();
            parts.push(if run == 1 { format!("Z{}", f[i]) } else { format!("Z{}^{run}", f[i]) });
            i += run;
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" x ")
        }
    }

    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().map(|&n| n as u64).product())
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem { free: vec![0; self.free_rank], torsion: vec![0; self.torsion.len()] }
    }

    /// Element from raw coordinates, reducing residues.
    pub fn elem(&self, free: &[i64], torsion: &[i64]) -> Result<GroupElem> {
        if free.len() != self.free_rank || torsion.len() != self.torsion.len() {
            return Err(Error::ParentMismatch);
        }
        Ok(GroupElem {
            free: free.to_vec(),
            torsion: torsion.iter().zip(&self.torsion).map(|(x, n)| x.rem_euclid(*n)).collect(),
        })
    }

    pub fn elem_from_coords(&self, coords: &[i64]) -> Result<GroupElem> {
        if coords.len() != self.ngens() {
            return Err(Error::ParentMismatch);
        }
        self.elem(&coords[..self.free_rank], &coords[self.free_rank..])
    }

    pub fn generator(&self, k: usize) -> GroupElem {
        let mut c = vec![0; self.ngens()];
        c[k] = 1;
        self.elem_from_coords(&c).expect("generator index in range")
    }

    pub fn generators(&self) -> Vec<GroupElem> {
        (0..self.ngens()).map(|k| self.generator(k)).collect()
    }

    pub fn contains(&self, x: &GroupElem) -> bool {
        x.free.len() == self.free_rank
            && x.torsion.len() == self.torsion.len()
            && x.torsion.iter().zip(&self.torsion).all(|(r, n)| (0..*n).contains(r))
    }

    fn check(&self, x: &GroupElem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn add(&self, x: &GroupElem, y: &GroupElem) -> Result<GroupElem> {
        self.check(x)?;
        self.check(y)?;
        let free = x
            .free
            .iter()
            .zip(&y.free)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("group element")))
            .collect::<Result<Vec<_>>>()?;
        let torsion = x
            .torsion
            .iter()
            .zip(&y.torsion)
            .zip(&self.torsion)
            .map(|((a, b), n)| (a + b).rem_euclid(*n))
            .collect();
        Ok(GroupElem { free, torsion })
    }

    pub fn neg(&self, x: &GroupElem) -> Result<GroupElem> {
        self.check(x)?;
        Ok(GroupElem {
            free: x.free.iter().map(|a| -a).collect(),
            torsion: x.torsion.iter().zip(&self.torsion).map(|(a, n)| (-a).rem_euclid(*n)).collect(),
        })
    }

    pub fn sub(&self, x: &GroupElem, y: &GroupElem) -> Result<GroupElem> {
        self.add(x, &self.neg(y)?)
    }

    /// k·x.
    pub fn mul(&self, k: i64, x: &GroupElem) -> Result<GroupElem> {
        self.check(x)?;
        Ok(GroupElem {
            free: x
                .free
                .iter()
                .map(|a| a.checked_mul(k).ok_or(Error::Overflow("group element")))
                .collect::<Result<Vec<_>>>()?,
            torsion: x
                .torsion
                .iter()
                .zip(&self.torsion)
                .map(|(a, n)| ((*a as i128 * k as i128).rem_euclid(*n as i128)) as i64)
                .collect(),
        })
    }

    pub fn sum<'a>(&self, xs: impl IntoIterator<Item = &'a GroupElem>) -> Result<GroupElem> {
        xs.into_iter().try_fold(self.identity(), |acc, x| self.add(&acc, x))
    }

    pub fn is_identity(&self, x: &GroupElem) -> bool {
        x.free.iter().all(|&a| a == 0) && x.torsion.iter().all(|&a| a == 0)
    }

    /// Order of x, or None when x has infinite order.
    pub fn elem_order(&self, x: &GroupElem) -> Result<Option<u64>> {
        self.check(x)?;
        if x.free.iter().any(|&a| a != 0) {
            return Ok(None);
        }
        let mut ord = 1i64;
        for (a, n) in x.torsion.iter().zip(&self.torsion) {
            let o = n / a.gcd(n);
            ord = ord.lcm(&o);
        }
        Ok(Some(ord as u64))
    }

    /// All elements, sorted; only for finite groups.
    pub fn elements(&self) -> Result<Vec<GroupElem>> {
        if !self.is_finite() {
            return Err(Error::Infinite("group"));
        }
        let mut out = vec![self.identity()];
        for (k, &n) in self.torsion.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..n).map(move |r| {
                        let mut e = e.clone();
                        e.torsion[k] = r;
                        e
                    })
                })
                .collect();
        }
        out.sort();
        Ok(out)
    }

    /// Z^free × Z_{m₁} × … × Z_{m_k} for arbitrary orders mᵢ ≥ 1, normalized,
    /// together with the images of the product's generators.
    pub fn product_of_cyclic(free_rank: usize, orders: &[i64]) -> Result<Presentation> {
        let n = free_rank + orders.len();
        let relations = orders
            .iter()
            .enumerate()
            .map(|(k, &m)| {
                let mut row = vec![0; n];
                row[free_rank + k] = m;
                row
            })
            .collect();
        Presentation::new(n, relations)
    }
}

/// An abelian group given by generators and relations, normalized through
/// the Smith normal form of the relation matrix.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: FinAbGroup,
    /// Image of each presentation generator.
    pub gen_images: Vec<GroupElem>,
    /// Each standard generator of `group` as a combination of presentation
    /// generators.
    pub gen_preimages: Vec<Vec<i64>>,
}

impl Presentation {
    pub fn new(ngens: usize, relations: Vec<Vec<i64>>) -> Result<Presentation> {
        let r = Matrix::from_rows_checked(relations, ngens)?;
        let (s, _u, v) = smith_normal_form(&r)?;
        let diag: Vec<i64> = (0..ngens).map(|j| if j < s.nrows() { s[(j, j)] } else { 0 }).collect();
        let free_cols: Vec<usize> = (0..ngens).filter(|&j| diag[j] == 0).collect();
        let tors_cols: Vec<usize> = (0..ngens).filter(|&j| diag[j] > 1).collect();
        let group = FinAbGroup::new(free_cols.len(), tors_cols.iter().map(|&j| diag[j]).collect())?;
        let gen_images = (0..ngens)
            .map(|i| {
                let free: Vec<i64> = free_cols.iter().map(|&j| v[(i, j)]).collect();
                let tors: Vec<i64> = tors_cols.iter().map(|&j| v[(i, j)]).collect();
                group.elem(&free, &tors)
            })
            .collect::<Result<Vec<_>>>()?;
        let vinv = int_inverse(&v)?;
        let gen_preimages = free_cols.iter().chain(&tors_cols).map(|&j| vinv.row(j).to_vec()).collect();
        Ok(Presentation { group, gen_images, gen_preimages })
    }

    /// Element given by coefficients on the presentation generators.
    pub fn elem(&self, coeffs: &[i64]) -> Result<GroupElem> {
        if coeffs.len() != self.gen_images.len() {
            return Err(Error::DimensionMismatch { expected: self.gen_images.len(), got: coeffs.len() });
        }
        let mut acc = self.group.identity();
        for (c, g) in coeffs.iter().zip(&self.gen_images) {
            acc = self.group.add(&acc, &self.group.mul(*c, g)?)?;
        }
        Ok(acc)
    }
}

fn int_inverse(v: &IntMatrix) -> Result<IntMatrix> {
    let q = v.map(|&x| Rational::from_integer(x));
    let inv = q.inverse().ok_or(Error::Invalid("matrix is not unimodular".into()))?;
    let mut out = Matrix::filled(v.nrows(), v.ncols(), 0i64);
    for r in 0..v.nrows() {
        for c in 0..v.ncols() {
            let x = &inv[(r, c)];
            match x.to_i64_pair() {
                Some((n, 1)) => out[(r, c)] = n,
                _ => return Err(Error::Invalid("matrix is not unimodular".into())),
            }
        }
    }
    Ok(out)
}

/// A subgroup, remembered together with its ambient group.
///
/// The generating set is the Hermite normal form of the lattice of
/// preimages in Z^n, so equal subgroups compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    ambient: FinAbGroup,
    lattice: Vec<Vec<i64>>,
}

impl Subgroup {
    pub fn generated(ambient: &FinAbGroup, gens: &[GroupElem]) -> Result<Subgroup> {
        let n = ambient.ngens();
        let mut rows = Vec::with_capacity(gens.len() + ambient.torsion.len());
        for g in gens {
            ambient.check(g)?;
            rows.push(g.coords());
        }
        for (k, &m) in ambient.torsion.iter().enumerate() {
            let mut row = vec![0; n];
            row[ambient.free_rank + k] = m;
            rows.push(row);
        }
        Ok(Subgroup { ambient: ambient.clone(), lattice: hermite_normal_form(rows, n)? })
    }

    pub fn whole(ambient: &FinAbGroup) -> Subgroup {
        Subgroup::generated(ambient, &ambient.generators()).expect("generators belong to the group")
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    /// Canonical generators: the nonzero HNF rows as group elements.
    pub fn generators(&self) -> Vec<GroupElem> {
        let mut out: Vec<GroupElem> = self
            .lattice
            .iter()
            .map(|row| self.ambient.elem_from_coords(row).expect("row length"))
            .filter(|g| !self.ambient.is_identity(g))
            .collect();
        out.dedup();
        out
    }

    pub fn contains(&self, x: &GroupElem) -> bool {
        if !self.ambient.contains(x) {
            return false;
        }
        let mut v = x.coords();
        for row in &self.lattice {
            let p = row.iter().position(|&a| a != 0).expect("HNF rows are nonzero");
            if v[p] % row[p] != 0 {
                return false;
            }
            let q = v[p] / row[p];
            for (a, b) in v.iter_mut().zip(row) {
                *a -= q * b;
            }
        }
        v.iter().all(|&a| a == 0)
    }

    /// Cardinality, or None for an infinite subgroup.
    pub fn order(&self) -> Option<u64> {
        let r = self.ambient.free_rank;
        let mut denom = 1u64;
        for row in &self.lattice {
            let p = row.iter().position(|&a| a != 0).expect("HNF rows are nonzero");
            if p < r {
                return None;
            }
            denom *= row[p] as u64;
        }
        let full: u64 = self.ambient.torsion.iter().map(|&n| n as u64).product();
        Some(full / denom)
    }

    /// Sorted element list; errors on infinite subgroups.
    pub fn elements(&self) -> Result<Vec<GroupElem>> {
        if self.order().is_none() {
            return Err(Error::Infinite("subgroup"));
        }
        let gens = self.generators();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([self.ambient.identity()]);
        seen.insert(self.ambient.identity());
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = self.ambient.add(&x, g)?;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// True when every nonidentity element has order 2.
    pub fn is_elementary_2(&self) -> bool {
        self.generators()
            .iter()
            .all(|g| self.ambient.elem_order(g).ok().flatten() == Some(2))
    }
}

/// Homomorphism determined by the images of the source's standard generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHom {
    pub source: FinAbGroup,
    pub target: FinAbGroup,
    pub images: Vec<GroupElem>,
}

impl GroupHom {
    pub fn new(source: FinAbGroup, target: FinAbGroup, images: Vec<GroupElem>) -> Result<GroupHom> {
        if images.len() != source.ngens() {
            return Err(Error::DimensionMismatch { expected: source.ngens(), got: images.len() });
        }
        for (k, img) in images.iter().enumerate() {
            target.check(img)?;
            if k >= source.free_rank {
                let n = source.torsion[k - source.free_rank];
                if !target.is_identity(&target.mul(n, img)?) {
                    return Err(Error::Invalid(format!(
                        "image of generator {k} has order not dividing {n}"
                    )));
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(g: &FinAbGroup) -> GroupHom {
        GroupHom { source: g.clone(), target: g.clone(), images: g.generators() }
    }

    pub fn zero(source: &FinAbGroup, target: &FinAbGroup) -> GroupHom {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            images: vec![target.identity(); source.ngens()],
        }
    }

    pub fn apply(&self, x: &GroupElem) -> Result<GroupElem> {
        self.source.check(x)?;
        let mut acc = self.target.identity();
        for (c, img) in x.coords().iter().zip(&self.images) {
            if *c != 0 {
                acc = self.target.add(&acc, &self.target.mul(*c, img)?)?;
            }
        }
        Ok(acc)
    }

    pub fn compose(&self, after: &GroupHom) -> Result<GroupHom> {
        if after.source != self.target {
            return Err(Error::ParentMismatch);
        }
        let images = self.images.iter().map(|x| after.apply(x)).collect::<Result<Vec<_>>>()?;
        Ok(GroupHom { source: self.source.clone(), target: after.target.clone(), images })
    }
}

/// The universal abelian group of a grading: generated by the support
/// labels with relations s₁ + s₂ = s₃.
#[derive(Clone, Debug)]
pub struct UniversalGroup<L> {
    pub group: FinAbGroup,
    pub labels: BTreeMap<L, GroupElem>,
    order: Vec<L>,
    presentation: Presentation,
}

impl<L: Ord + Clone> UniversalGroup<L> {
    /// Homomorphism to `target` sending each label to the given element.
    /// The assignment must respect the defining relations.
    pub fn hom_to(&self, target: &FinAbGroup, assign: impl Fn(&L) -> GroupElem) -> Result<GroupHom> {
        let label_imgs: Vec<GroupElem> = self.order.iter().map(&assign).collect();
        let images = self
            .presentation
            .gen_preimages
            .iter()
            .map(|pre| {
                let mut acc = target.identity();
                for (c, img) in pre.iter().zip(&label_imgs) {
                    if *c != 0 {
                        acc = target.add(&acc, &target.mul(*c, img)?)?;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        let hom = GroupHom::new(self.group.clone(), target.clone(), images)?;
        for (l, u) in &self.labels {
            if hom.apply(u)? != assign(l) {
                return Err(Error::Invalid("label assignment violates the relations".into()));
            }
        }
        Ok(hom)
    }
}

pub fn universal_group<L: Ord + Clone>(
    support: &[L],
    relations: &[(L, L, L)],
) -> Result<UniversalGroup<L>> {
    let order: Vec<L> = support.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let index: BTreeMap<&L, usize> = order.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let n = order.len();
    let mut rows = BTreeSet::new();
    for (a, b, c) in relations {
        let idx = |l: &L| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::Invalid("relation references a label outside the support".into()))
        };
        let mut row = vec![0i64; n];
        row[idx(a)?] += 1;
        row[idx(b)?] += 1;
        row[idx(c)?] -= 1;
        rows.insert(row);
    }
    let presentation = Presentation::new(n, rows.into_iter().collect())?;
    let labels = order
        .iter()
        .cloned()
        .zip(presentation.gen_images.iter().cloned())
        .collect();
    Ok(UniversalGroup { group: presentation.group.clone(), labels, order, presentation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primary_names() {
        let g = FinAbGroup::new(2, vec![2, 2, 6]).unwrap();
        assert_eq!(g.primary_name(), "Z^2 x Z2^3 x Z3");
        assert_eq!(FinAbGroup::cyclic(12).primary_factors(), vec![3, 4]);
        assert_eq!(FinAbGroup::trivial().primary_name(), "1");
    }

    #[test]
    fn element_orders() {
        let z3 = FinAbGroup::cyclic(3);
        assert_eq!(z3.elem_order(&z3.generator(0)).unwrap(), Some(3));
        let g = FinAbGroup::new(1, vec![2]).unwrap();
        assert_eq!(g.elem_order(&g.elem(&[1], &[0]).unwrap()).unwrap(), None);
        let v4 = FinAbGroup::new(0, vec![2, 2]).unwrap();
        let x = v4.elem(&[], &[1, 1]).unwrap();
        assert!(v4.is_identity(&v4.add(&x, &x).unwrap()));
    }

    #[test]
    fn parent_mismatch_is_an_error() {
        let a = FinAbGroup::cyclic(3);
        let b = FinAbGroup::new(0, vec![2, 2]).unwrap();
        assert!(matches!(a.add(&a.identity(), &b.generator(0)), Err(Error::ParentMismatch)));
        let z5 = FinAbGroup::cyclic(5);
        assert!(matches!(a.neg(&z5.elem(&[], &[4]).unwrap()), Err(Error::ParentMismatch)));
    }

    #[test]
    fn invariant_factor_normalization() {
        let p = FinAbGroup::product_of_cyclic(0, &[2, 2, 2, 3]).unwrap();
        assert_eq!(p.group.torsion(), &[2, 2, 6]);
        assert_eq!(p.group.order(), Some(24));
        let p = FinAbGroup::product_of_cyclic(2, &[3]).unwrap();
        assert_eq!((p.group.free_rank(), p.group.torsion()), (2, &[3][..]));
        // generator images have the expected orders
        assert_eq!(p.group.elem_order(&p.gen_images[2]).unwrap(), Some(3));
        assert!(FinAbGroup::new(0, vec![4, 2]).is_err());
    }

    #[test]
    fn subgroups() {
        let v4 = FinAbGroup::new(0, vec![2, 2]).unwrap();
        let s = Subgroup::generated(&v4, &v4.generators()).unwrap();
        assert_eq!(s.order(), Some(4));
        let z3 = FinAbGroup::cyclic(3);
        let h = Subgroup::generated(&z3, &[z3.generator(0)]).unwrap();
        assert_eq!(h.elements().unwrap().len(), 3);
        let z4 = FinAbGroup::cyclic(4);
        let two = z4.elem(&[], &[2]).unwrap();
        let s = Subgroup::generated(&z4, &[two.clone()]).unwrap();
        assert_eq!(s.order(), Some(2));
        assert!(s.contains(&two) && !s.contains(&z4.generator(0)));
        let z = FinAbGroup::free(1);
        let s = Subgroup::generated(&z, &[z.generator(0)]).unwrap();
        assert_eq!(s.order(), None);
        assert!(matches!(s.elements(), Err(Error::Infinite(_))));
    }

    #[test]
    fn equal_subgroups_compare_equal() {
        let g = FinAbGroup::new(0, vec![2, 6]).unwrap();
        let a = g.elem(&[], &[1, 3]).unwrap();
        let b = g.elem(&[], &[0, 2]).unwrap();
        let ab = g.add(&a, &b).unwrap();
        let s1 = Subgroup::generated(&g, &[a.clone(), b.clone()]).unwrap();
        let s2 = Subgroup::generated(&g, &[ab, b]).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.order(), Some(6));
    }

    #[test]
    fn universal_group_small_cases() {
        let u = universal_group(&["e"], &[("e", "e", "e")]).unwrap();
        assert_eq!(u.group, FinAbGroup::trivial());
        // a + a = e, e + e = e  gives Z2
        let u = universal_group(&["e", "a"], &[("a", "a", "e"), ("e", "e", "e"), ("e", "a", "a")]).unwrap();
        assert_eq!(u.group, FinAbGroup::cyclic(2));
        let hom = u
            .hom_to(&FinAbGroup::cyclic(4), |l| {
                FinAbGroup::cyclic(4).elem(&[], &[if *l == "a" { 2 } else { 0 }]).unwrap()
            })
            .unwrap();
        assert_eq!(hom.apply(&u.labels["a"]).unwrap(), FinAbGroup::cyclic(4).elem(&[], &[2]).unwrap());
    }

    #[test]
    fn hom_validation() {
        let z2 = FinAbGroup::cyclic(2);
        let z3 = FinAbGroup::cyclic(3);
        assert!(GroupHom::new(z2.clone(), z3.clone(), vec![z3.generator(0)]).is_err());
        assert!(GroupHom::new(z2.clone(), z3.clone(), vec![z3.identity()]).is_ok());
    }

    proptest! {
        #[test]
        fn universal_group_ignores_relation_order(
            rels in proptest::collection::vec((0usize..4, 0usize..4, 0usize..4), 0..8),
            perm_seed in 0usize..100,
        ) {
            let support = [0usize, 1, 2, 3];
            let a = universal_group(&support, &rels).unwrap();
            let mut shuffled = rels.clone();
            if !shuffled.is_empty() {
                let k = perm_seed % shuffled.len();
                shuffled.rotate_left(k);
                shuffled.reverse();
            }
            let b = universal_group(&support, &shuffled).unwrap();
            prop_assert_eq!(&a.group, &b.group);
            prop_assert_eq!(&a.labels, &b.labels);
            // relations hold in the universal group
            for (x, y, z) in &rels {
                let s = a.group.add(&a.labels[x], &a.labels[y]).unwrap();
                prop_assert_eq!(&s, &a.labels[z]);
            }
        }

        #[test]
        fn group_axioms_in_z2_z6(x in proptest::collection::vec(0i64..12, 2), y in proptest::collection::vec(0i64..12, 2)) {
            let g = FinAbGroup::new(1, vec![2, 6]).unwrap();
            let a = g.elem(&[x[0] - 5], &x).unwrap();
            let b = g.elem(&[y[0] + 3], &y).unwrap();
            prop_assert_eq!(g.add(&a, &b).unwrap(), g.add(&b, &a).unwrap());
            prop_assert!(g.is_identity(&g.add(&a, &g.neg(&a).unwrap()).unwrap()));
        }
    }
}
