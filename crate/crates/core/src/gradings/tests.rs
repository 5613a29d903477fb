use super::*;
use crate::composition::{good, octonions, split_cayley_good_basis, split_octonions, HurwitzKind};
use crate::groups::FinAbGroup;
use crate::scalars::Rational;

type Q = Rational;

fn z2(k: usize) -> FinAbGroup {
    FinAbGroup::new(0, vec![2; k]).unwrap()
}

fn z2_gens(k: usize) -> (FinAbGroup, Vec<GroupElem>) {
    let g = z2(k);
    let gens = g.generators();
    (g, gens)
}

fn cartan_z2() -> (FinAbGroup, Grading<Q>) {
    let g = FinAbGroup::free(2);
    let a = g.elem(&[1, 0], &[]).unwrap();
    let b = g.elem(&[0, 1], &[]).unwrap();
    let c = g.elem(&[-1, -1], &[]).unwrap();
    let gr = cartan_grading(&g, &[a, b, c]).unwrap();
    (g, gr)
}

#[test]
fn cartan_grading_verifies_and_has_universal_group_z2() {
    let (_, gr) = cartan_z2();
    let alg = split_cayley_good_basis::<Q>();
    let rep = verify_grading(&gr, &alg);
    assert!(rep.passed(), "{rep}");
    assert_eq!(gr.components().len(), 7);
    let (u, relabeled) = grading_universal_group(&gr, &alg).unwrap();
    assert_eq!(u.group, FinAbGroup::free(2));
    assert!(verify_grading(&relabeled, &alg).passed());
}

#[test]
fn cartan_degree_of_u3_is_minus_g1_g2() {
    let (g, gr) = cartan_z2();
    let u3 = split_cayley_good_basis::<Q>().basis_vector(good::U[2]);
    assert_eq!(gr.degree_of(&u3), Some(g.elem(&[-1, -1], &[]).unwrap()));
}

#[test]
fn cartan_with_trivial_triple_is_the_trivial_grading() {
    let g = FinAbGroup::free(2);
    let e = g.identity();
    let gr = cartan_grading::<Q>(&g, &[e.clone(), e.clone(), e]).unwrap();
    assert_eq!(gr.components().len(), 1);
    assert!(matches!(
        gr.label(),
        Some(Label::Cayley(l)) if l.normalized().variant == CayleyVariant::Trivial
    ));
}

#[test]
fn cartan_rejects_triples_not_summing_to_e() {
    let g = FinAbGroup::free(2);
    let a = g.elem(&[1, 0], &[]).unwrap();
    assert!(cartan_grading::<Q>(&g, &[a.clone(), a.clone(), a]).is_err());
}

#[test]
fn swapped_vector_is_caught_with_a_witness() {
    let (_, gr) = cartan_z2();
    let alg = split_cayley_good_basis::<Q>();
    let mut comps: Vec<(GroupElem, Subspace<Q>)> = gr.components().to_vec();
    // trade u1 and u2 between their components
    let find = |comps: &[(GroupElem, Subspace<Q>)], idx: usize| {
        comps.iter().position(|(_, s)| s.contains(&alg.basis_vector(idx))).unwrap()
    };
    let i = find(&comps, good::U[0]);
    let j = find(&comps, good::U[1]);
    comps[i].1 = Subspace::span_of_units(8, [good::U[1]]);
    comps[j].1 = Subspace::span_of_units(8, [good::U[0]]);
    let bad = Grading::new(gr.group().clone(), 8, comps).unwrap();
    let rep = verify_grading(&bad, &alg);
    assert!(!rep.passed());
    let f = rep.failures().next().unwrap();
    assert!(f.witness.as_ref().unwrap().contains("degree"), "{rep}");
}

#[test]
fn trivial_grading_passes_and_has_trivial_universal_group() {
    let alg = octonions::<Q>();
    let g = FinAbGroup::trivial();
    let gr = trivial_grading(&alg, &g).unwrap();
    assert!(verify_grading(&gr, &alg).passed());
    let (u, _) = grading_universal_group(&gr, &alg).unwrap();
    assert_eq!(u.group, FinAbGroup::trivial());
}

#[test]
fn full_cd_grading_on_o_has_eight_lines_and_group_z2_cubed() {
    let (g, gens) = z2_gens(3);
    let alg = octonions::<Q>();
    let gr = cd_grading(&alg, &g, &gens).unwrap();
    assert!(verify_grading(&gr, &alg).passed());
    assert_eq!(gr.dims(), vec![1; 8]);
    let (u, _) = grading_universal_group(&gr, &alg).unwrap();
    assert_eq!(u.group, z2(3));
    let Some(Label::Cayley(l)) = gr.label() else { panic!() };
    let CayleyVariant::Full { mu, .. } = &l.variant else { panic!() };
    assert!(mu.is_trivial());
}

#[test]
fn quaternion_grading_splits_o_into_h_and_its_complement() {
    let g = z2(1);
    let alg = octonions::<Q>();
    let gr = cd_grading(&alg, &g, &g.generators()).unwrap();
    assert!(verify_grading(&gr, &alg).passed());
    let h = Subspace::span_of_units(8, 0..4);
    assert_eq!(gr.component(&g.identity()), Some(&h));
    let q = alg.norm().unwrap();
    assert_eq!(gr.component(&g.generator(0)), Some(&q.orthogonal(&h)));
    let fp = fingerprint(&gr, &q.gram).unwrap();
    for (_, v) in fp {
        assert_eq!(v, (4, Inertia::new(4, 0, 0)));
    }
}

#[test]
fn split_cd_gradings_carry_nontrivial_sign_maps() {
    let (g, gens) = z2_gens(3);
    let alg = split_octonions::<Q>();
    let gr = cd_grading(&alg, &g, &gens).unwrap();
    assert!(verify_grading(&gr, &alg).passed());
    let Some(Label::Cayley(l)) = gr.label() else { panic!() };
    let CayleyVariant::Full { mu, .. } = &l.variant else { panic!() };
    assert!(!mu.is_trivial());
    assert_eq!(mu.get(&gens[2]), Some(-1));
    assert_eq!(mu.get(&gens[0]), Some(1));
}

#[test]
fn admissible_counts_on_the_split_algebra() {
    for (k, want) in [(2usize, 3usize), (3, 7)] {
        let (g, gens) = z2_gens(k);
        let os = admissible_sign_maps(CayleyKind::Os, &g, &gens).unwrap();
        assert_eq!(os.len(), want);
        assert!(os.iter().all(|m| !m.is_trivial()));
        let o = admissible_sign_maps(CayleyKind::O, &g, &gens).unwrap();
        assert_eq!(o.len(), 1);
        assert!(o[0].is_trivial());
    }
}

#[test]
fn every_admissible_sign_map_is_realized() {
    let (g, gens) = z2_gens(2);
    for mask in 1..4u32 {
        let signs: Vec<i8> = (0..2).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
        let alg = cayley_for_mu::<Q>(CayleyKind::Os, &g, &gens, &signs).unwrap();
        let gr = cd_grading(&alg, &g, &gens).unwrap();
        assert!(verify_grading(&gr, &alg).passed());
        let Some(Label::Cayley(l)) = gr.label() else { panic!() };
        let CayleyVariant::Quadratic { mu, .. } = &l.variant else { panic!() };
        assert_eq!(mu, &SignMap::from_generators(&g, &gens, &signs).unwrap());
    }
    assert!(cayley_for_mu::<Q>(CayleyKind::Os, &g, &gens, &[1, 1]).is_err());
    assert!(cayley_for_mu::<Q>(CayleyKind::O, &g, &gens, &[1, -1]).is_err());
}

#[test]
fn cd_grading_needs_a_division_identity_component() {
    // CD(F, 1, -1, -1): the quadratic subalgebra is split
    let alg = cayley_dickson_chain_q(&[1, -1, -1]);
    let (g, gens) = z2_gens(2);
    assert!(cd_grading(&alg, &g, &gens).is_err());
    let (g3, gens3) = z2_gens(3);
    assert!(cd_grading(&alg, &g3, &gens3).is_ok());
}

fn cayley_dickson_chain_q(p: &[i64]) -> SCAlgebra<Q> {
    let ps: Vec<Q> = p.iter().map(|&x| Q::from_integer(x)).collect();
    crate::composition::cayley_dickson_chain(&ps).unwrap()
}

#[test]
fn cd_grading_rejects_bad_subgroups() {
    let g = FinAbGroup::new(0, vec![2, 4]).unwrap();
    let alg = octonions::<Q>();
    let x = g.elem(&[], &[0, 1]).unwrap();
    assert!(cd_grading(&alg, &g, &[x]).is_err());
    let y = g.elem(&[], &[1, 0]).unwrap();
    assert!(cd_grading(&alg, &g, &[y.clone(), y]).is_err());
}

#[test]
fn induce_along_identity_and_zero() {
    let (g, gr) = cartan_z2();
    let id = GroupHom::identity(&g);
    assert_eq!(gr.induce(&id).unwrap().components(), gr.components());
    let z3 = FinAbGroup::cyclic(3);
    let zero = GroupHom::zero(&g, &z3);
    let t = gr.induce(&zero).unwrap();
    assert_eq!(t.components().len(), 1);
    assert_eq!(t.dims(), vec![8]);
}

#[test]
fn cartan_induced_to_z3_squared() {
    let (g, gr) = cartan_z2();
    let h = FinAbGroup::new(0, vec![3, 3]).unwrap();
    let alpha = GroupHom::new(g, h.clone(), h.generators()).unwrap();
    let ind = gr.induce(&alpha).unwrap();
    let alg = split_cayley_good_basis::<Q>();
    assert!(verify_grading(&ind, &alg).passed());
    // the seven degrees 0, ±a, ±b, ±(a+b) stay distinct mod 3
    assert_eq!(ind.components().len(), 7);
    assert!(ind.dims().iter().all(|&d| d <= 2));
}

#[test]
fn universal_projection_is_idempotent() {
    let (g, gens) = z2_gens(3);
    let big = FinAbGroup::new(1, vec![2, 2, 2]).unwrap();
    let emb = GroupHom::new(
        g.clone(),
        big.clone(),
        gens.iter().map(|x| big.elem(&[0], &x.torsion).unwrap()).collect(),
    )
    .unwrap();
    let alg = octonions::<Q>();
    let gr = cd_grading(&alg, &g, &gens).unwrap().induce(&emb).unwrap();
    let (u1, r1) = grading_universal_group(&gr, &alg).unwrap();
    let (u2, r2) = grading_universal_group(&r1, &alg).unwrap();
    assert_eq!(u1.group, u2.group);
    let spaces = |g: &Grading<Q>| {
        let mut v: Vec<Vec<Vec<Q>>> = g.components().iter().map(|(_, s)| s.vectors()).collect();
        v.sort();
        v
    };
    assert_eq!(spaces(&r1), spaces(&r2));
    let back = u1.hom_to(&big, |l| l.clone()).unwrap();
    assert_eq!(r1.induce(&back).unwrap().components(), gr.components());
}

#[test]
fn automorphism_of_universal_group_keeps_dimensions() {
    let (g, gr) = cartan_z2();
    let a = g.elem(&[1, 1], &[]).unwrap();
    let b = g.elem(&[0, 1], &[]).unwrap();
    let aut = GroupHom::new(g.clone(), g, vec![a, b]).unwrap();
    assert_eq!(gr.induce(&aut).unwrap().dims(), gr.dims());
}

#[test]
fn fingerprints() {
    let (g, gr) = cartan_z2();
    let gram = split_cayley_good_basis::<Q>().norm().unwrap().gram.clone();
    let fp = fingerprint(&gr, &gram).unwrap();
    assert_eq!(fp[&g.elem(&[1, 0], &[]).unwrap()], (1, Inertia::new(0, 0, 1)));
    assert_eq!(fp[&g.identity()], (2, Inertia::new(1, 1, 0)));
    let o = octonions::<Q>();
    let t = trivial_grading(&o, &FinAbGroup::trivial()).unwrap();
    let fp = fingerprint(&t, &o.norm().unwrap().gram).unwrap();
    assert_eq!(fp.values().next(), Some(&(8, Inertia::new(8, 0, 0))));
}

fn cayley_label(g: &FinAbGroup, gamma: [GroupElem; 3]) -> CayleyLabel {
    CayleyLabel { group: g.clone(), algebra: CayleyKind::Os, variant: CayleyVariant::Cartan { gamma } }
}

#[test]
fn cartan_iso_decisions() {
    let g = FinAbGroup::new(1, vec![5]).unwrap();
    let a = g.elem(&[1], &[2]).unwrap();
    let b = g.elem(&[2], &[1]).unwrap();
    let ab = g.add(&a, &b).unwrap();
    let l1 = cayley_label(&g, [a.clone(), b.clone(), g.neg(&ab).unwrap()]);
    let l2 = cayley_label(&g, [g.neg(&b).unwrap(), g.neg(&a).unwrap(), ab.clone()]);
    assert!(iso_decision(&l1, &l2).unwrap());
    assert!(iso_decision(&l1, &l1).unwrap());
    let l3 = cayley_label(&g, [a.clone(), g.neg(&a).unwrap(), g.identity()]);
    assert!(!iso_decision(&l1, &l3).unwrap());
    let other = FinAbGroup::free(1);
    let l4 = CayleyLabel { group: other, algebra: CayleyKind::Os, variant: CayleyVariant::Trivial };
    assert!(iso_decision(&l1, &l4).is_err());
}

#[test]
fn quaternion_labels_compare_by_subgroup() {
    let g = z2(2);
    let o = octonions::<Q>();
    let gens = g.generators();
    let a = cd_grading(&o, &g, &gens[..1]).unwrap();
    let b = cd_grading(&o, &g, &gens[1..]).unwrap();
    let (Some(Label::Cayley(la)), Some(Label::Cayley(lb))) = (a.label(), b.label()) else { panic!() };
    assert!(!iso_decision(la, lb).unwrap());
    assert!(iso_decision(la, la).unwrap());
    let c = cd_grading(&o, &g, &gens).unwrap();
    let Some(Label::Cayley(lc)) = c.label() else { panic!() };
    assert!(!iso_decision(la, lc).unwrap());
}

#[test]
fn iso_soundness_against_fingerprints() {
    // isomorphic Cartan labels have the same multiset of fingerprints
    let g = FinAbGroup::new(0, vec![6]).unwrap();
    let x = g.elem(&[], &[1]).unwrap();
    let y = g.elem(&[], &[2]).unwrap();
    let z = g.neg(&g.add(&x, &y).unwrap()).unwrap();
    let g1 = cartan_grading::<Q>(&g, &[x.clone(), y.clone(), z.clone()]).unwrap();
    let g2 = cartan_grading::<Q>(&g, &[g.neg(&y).unwrap(), g.neg(&x).unwrap(), g.neg(&z).unwrap()]).unwrap();
    let (Some(Label::Cayley(l1)), Some(Label::Cayley(l2))) = (g1.label(), g2.label()) else { panic!() };
    assert!(iso_decision(l1, l2).unwrap());
    let gram = split_cayley_good_basis::<Q>().norm().unwrap().gram.clone();
    let mut f1: Vec<_> = fingerprint(&g1, &gram).unwrap().into_values().collect();
    let mut f2: Vec<_> = fingerprint(&g2, &gram).unwrap().into_values().collect();
    f1.sort();
    f2.sort();
    assert_eq!(f1, f2);
}

#[test]
fn grading_json_round_trip_keeps_label() {
    let (g, gens) = z2_gens(3);
    let alg = HurwitzKind::Os.build::<Q>();
    let gr = cd_grading(&alg, &g, &gens).unwrap();
    let s = serde_json::to_string(&gr).unwrap();
    let back: Grading<Q> = serde_json::from_str(&s).unwrap();
    assert_eq!(back, gr);
}

#[test]
fn repeated_degrees_are_rejected() {
    let g = z2(1);
    let e = g.identity();
    let comps = vec![
        (e.clone(), Subspace::<Q>::span_of_units(2, [0])),
        (e, Subspace::span_of_units(2, [1])),
    ];
    assert!(Grading::new(g, 2, comps).is_err());
}
