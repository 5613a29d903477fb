use super::*;
use crate::composition::{octonions, split_octonions};
use crate::gradings::{grading_universal_group, trivial_grading, verify_grading};
use crate::groups::FinAbGroup;
use crate::twisted::tc_hurwitz;

#[test]
fn model_dimension_and_inertia() {
    let o = so_tilde_v0(&octonions()).unwrap();
    assert_eq!(o.lie().dim(), 28);
    assert_eq!(o.inertia(), Inertia::new(1, 7, 0));
    let os = so_tilde_v0(&split_octonions()).unwrap();
    assert_eq!(os.lie().dim(), 28);
    assert_eq!(os.inertia(), Inertia::new(5, 3, 0));
}

#[test]
fn generators_are_skew_and_close() {
    let m = so_tilde_v0(&split_octonions()).unwrap();
    let g = &m.form().gram;
    for (_, fam) in m.families() {
        for a in fam {
            assert!(a.transpose().mul(g).unwrap().add(&g.mul(&a).unwrap()).is_zero());
        }
    }
    assert_eq!(m.lie().closure_witness(), None);
}

#[test]
fn a_plus_on_unit() {
    // A⁺_x(1⊗1) = 2√3 x⊗i, computed from ad_x(1) = 0 and T_x(1) = 2x.
    let m = so_tilde_v0(&octonions()).unwrap();
    let b = m.cayley().trace_zero().unwrap().vectors();
    let a = m.a_op(&b[2], true);
    let img = a.mul_vec(&unit_vector(8, 0));
    let mut expected = vec![RealScalar::zero(); 8];
    expected[3] = RealScalar::from_i64(2) * &RealScalar::sqrt3();
    assert_eq!(img, expected);
}

#[test]
fn trivial_type_iii_grading() {
    let c = octonions::<Rational>();
    let m = so_tilde_v0(&c).unwrap();
    let g = FinAbGroup::cyclic(3);
    let h = g.generator(0);
    let gr = type_iii_so_grading(&m, &trivial_grading(&c, &g).unwrap(), &h).unwrap();
    let dims: BTreeMap<_, _> = gr.components().iter().map(|(d, s)| (d.clone(), s.dim())).collect();
    assert_eq!(dims[&g.identity()], 14);
    assert_eq!(dims[&h], 7);
    assert_eq!(dims[&g.mul(2, &h).unwrap()], 7);
    let target = so_target(&m).unwrap();
    assert!(verify_grading(&gr, &target).passed());
}

#[test]
fn whole_algebra_census() {
    let c = octonions::<Rational>();
    let m = so_tilde_v0(&c).unwrap();
    let target = so_target(&m).unwrap();
    let gr = Grading::new(FinAbGroup::trivial(), 28, vec![(FinAbGroup::trivial().identity(), Subspace::full(28))])
        .unwrap();
    let rows = census(&gr, &target).unwrap();
    assert_eq!(rows.len(), 1);
    // so(7,1): maximal compact so(7) has dim 21, so the Killing form is (7, 21).
    assert_eq!(rows[0].inertia, Inertia::new(7, 21, 0));
    let csv = census_csv(&rows).unwrap();
    assert_eq!(csv, "degree,dim,p,q,r\n,28,7,21,0\n");
}

#[test]
fn fine_censuses_and_groups() {
    let expected = [
        (FineTypeIII::OZ2Cubed, [(1, 14), (2, 7)].as_slice(), vec![2, 2, 6], 0),
        (FineTypeIII::OsZ2Cubed, [(1, 14), (2, 7)].as_slice(), vec![2, 2, 6], 0),
        (FineTypeIII::OsZ2, [(1, 26), (2, 1)].as_slice(), vec![3], 2),
    ];
    for (which, dims, torsion, free) in expected {
        let (m, gr) = fine_type_iii(which).unwrap();
        let target = so_target(&m).unwrap();
        let rep = verify_grading(&gr, &target);
        assert!(rep.passed(), "{which}: {rep:?}");
        let rows = census(&gr, &target).unwrap();
        assert_eq!(dim_summary(&rows), dims.iter().copied().collect(), "{which}");
        let (u, _) = grading_universal_group(&gr, &target).unwrap();
        assert_eq!(u.group, FinAbGroup::new(free, torsion).unwrap(), "{which}");
    }
}

#[test]
fn derivations_of_twisted_match_model() {
    for c in [octonions::<Rational>(), split_octonions()] {
        let tc = tc_hurwitz(&c).unwrap();
        let der = der_of_twisted(&tc).unwrap();
        assert_eq!(der.dim(), 28);
        let span = first_component_span(&der).unwrap();
        assert_eq!(span.dim(), 28);
        let model = so_tilde_v0(&c).unwrap();
        assert_eq!(&span, model.span());
    }
}

#[test]
fn order_two_h_rejected() {
    let c = octonions::<Rational>();
    let m = so_tilde_v0(&c).unwrap();
    let g = FinAbGroup::cyclic(2);
    assert!(type_iii_so_grading(&m, &trivial_grading(&c, &g).unwrap(), &g.generator(0)).is_err());
}

#[test]
fn names_parse() {
    for w in FineTypeIII::ALL {
        assert_eq!(w.name().parse::<FineTypeIII>().unwrap(), w);
    }
}
