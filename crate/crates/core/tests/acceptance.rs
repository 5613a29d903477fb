//! The ten acceptance criteria. Each prints one PASS or FAIL line; the test
//! fails if any criterion fails.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use cayley_gradings::composition::{octonions, split_cayley_good_basis, split_octonions, HurwitzKind};
use cayley_gradings::d4::{
    census, der_of_twisted, dim_summary, fine_type_iii, first_component_span, so_target, so_tilde_v0, FineTypeIII,
};
use cayley_gradings::gradings::{
    admissible_sign_maps, cartan_grading, cayley_for_mu, cd_grading, grading_universal_group, trivial_grading,
    verify_grading, CayleyKind, CayleyVariant,
};
use cayley_gradings::groups::FinAbGroup;
use cayley_gradings::lie::{derivations, induced_grading_on_der, tri_decomposition};
use cayley_gradings::linalg::Inertia;
use cayley_gradings::scalars::Rational;
use cayley_gradings::twisted::{
    h_square_isomorphism, identity_component_dim, minimal_label, tc_hurwitz, type_iii_iso_decision, verify_epsilon,
    verify_twisted_axioms, AlbertAlgebra, EtaleCubic, TwistedTarget, TypeIIIItem,
};

type Q = Rational;
type Outcome = Result<(), String>;

const SEED: u64 = 20_240_601;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn z2_gens(k: usize) -> (FinAbGroup, Vec<cayley_gradings::groups::GroupElem>) {
    let g = FinAbGroup::new(0, vec![2; k]).unwrap();
    let gens = g.generators();
    (g, gens)
}

fn cartan_z2() -> (FinAbGroup, [cayley_gradings::groups::GroupElem; 3]) {
    let z2 = FinAbGroup::free(2);
    let (a, b) = (z2.generator(0), z2.generator(1));
    let c = z2.neg(&z2.add(&a, &b).unwrap()).unwrap();
    (z2, [a, b, c])
}

fn composition_laws() -> Outcome {
    use HurwitzKind::*;
    for kind in [O, Os, H, Hs, C, Cs] {
        let a = kind.build::<Q>();
        let w = ok(a.composition_witness())?;
        ensure(w.is_none(), || format!("{}: polarized composition fails on {w:?}", kind.name()))?;
        let para = ok(a.para_hurwitz())?;
        let w = para.symmetric_identity_witness(SEED, 100);
        ensure(w.is_none(), || format!("para-{}: {}", kind.name(), w.clone().unwrap_or_default()))?;
    }
    Ok(())
}

fn g2_dimensions_and_forms() -> Outcome {
    let d = ok(derivations(&octonions::<Q>()))?;
    let ds = ok(derivations(&split_octonions::<Q>()))?;
    ensure(d.dim() == 14 && ds.dim() == 14, || format!("dims {} and {}", d.dim(), ds.dim()))?;
    let k = ok(d.killing_form())?.inertia();
    ensure(k == Inertia::new(0, 14, 0), || format!("Killing form of Der(O) has inertia {k:?}"))?;
    let ks = ok(ds.killing_form())?.inertia();
    ensure(ks.positive > 0 && ks.negative > 0 && ks.radical == 0, || {
        format!("Killing form of Der(Os) has inertia {ks:?}")
    })
}

fn triality() -> Outcome {
    for c in [octonions::<Q>(), split_octonions()] {
        let d = ok(tri_decomposition(&c))?;
        ensure(d.tri.dim() == 28, || format!("dim tri = {}", d.tri.dim()))?;
        for k in 0..3 {
            ensure(d.tri.projection_is_injective(k), || format!("projection {k} is not injective"))?;
        }
        let dims = d.families().map(|(_, s)| s.dim());
        ensure(dims == [14, 7, 7], || format!("family dims {dims:?}"))?;
        let r = d.verify();
        ensure(r.passed(), || r.to_string())?;
    }
    Ok(())
}

fn cayley_grading_layer() -> Outcome {
    for (kind, alg) in [(CayleyKind::O, octonions::<Q>()), (CayleyKind::Os, split_octonions())] {
        for n in [2, 3] {
            let g = FinAbGroup::cyclic(n);
            let r = verify_grading(&ok(trivial_grading(&alg, &g))?, &alg);
            ensure(r.passed(), || format!("trivial grading: {r}"))?;
        }
        for k in 1..=3 {
            let (g, gens) = z2_gens(k);
            let sign_sets: Vec<Vec<i8>> = if k == 1 {
                vec![vec![if kind == CayleyKind::O { 1 } else { -1 }]]
            } else {
                ok(admissible_sign_maps(kind, &g, &gens))?
                    .iter()
                    .map(|mu| gens.iter().map(|x| mu.get(x).unwrap()).collect())
                    .collect()
            };
            for signs in sign_sets {
                let c = ok(cayley_for_mu::<Q>(kind, &g, &gens, &signs))?;
                let gr = ok(cd_grading(&c, &g, &gens))?;
                let r = verify_grading(&gr, &c);
                ensure(r.passed(), || format!("{kind:?} Z2^{k} {signs:?}: {r}"))?;
            }
        }
    }
    let good = split_cayley_good_basis::<Q>();
    let (z2, gamma) = cartan_z2();
    let cartan = ok(cartan_grading::<Q>(&z2, &gamma))?;
    let r = verify_grading(&cartan, &good);
    ensure(r.passed(), || format!("Cartan: {r}"))?;

    for (k, want) in [(2, 3), (3, 7)] {
        let (g, gens) = z2_gens(k);
        let mus = ok(admissible_sign_maps(CayleyKind::Os, &g, &gens))?;
        ensure(mus.len() == want, || format!("|T| = {}: {} admissible", 1 << k, mus.len()))?;
    }

    let o = octonions::<Q>();
    let (g, gens) = z2_gens(3);
    let (der, dg) = ok(induced_grading_on_der(&o, &ok(cd_grading(&o, &g, &gens))?))?;
    ensure(dg.dims() == vec![2; 7], || format!("Der(O) dims {:?}", dg.dims()))?;
    let r = verify_grading(&dg, &ok(der.structure_algebra())?);
    ensure(r.passed(), || r.to_string())?;
    let (_, dc) = ok(induced_grading_on_der(&good, &cartan))?;
    let census: BTreeMap<usize, usize> = dc.dim_census();
    ensure(census == [(1, 12), (2, 1)].into_iter().collect(), || format!("Cartan on Der(Os): {census:?}"))
}

fn universal_groups() -> Outcome {
    let good = split_cayley_good_basis::<Q>();
    let (z2, gamma) = cartan_z2();
    let cartan = ok(cartan_grading::<Q>(&z2, &gamma))?;
    let u = ok(grading_universal_group(&cartan, &good))?.0.group;
    ensure(u == FinAbGroup::free(2), || format!("Cartan: {u}"))?;

    let o = octonions::<Q>();
    let (g, gens) = z2_gens(3);
    let u = ok(grading_universal_group(&ok(cd_grading(&o, &g, &gens))?, &o))?.0.group;
    ensure(u == g, || format!("Gamma(Z2^3): {u}"))?;

    for (which, want) in [
        (FineTypeIII::OZ2Cubed, "Z2^3 x Z3"),
        (FineTypeIII::OsZ2Cubed, "Z2^3 x Z3"),
        (FineTypeIII::OsZ2, "Z^2 x Z3"),
    ] {
        let (model, gr) = ok(fine_type_iii(which))?;
        let u = ok(grading_universal_group(&gr, &ok(so_target(&model))?))?.0.group;
        ensure(u.primary_name() == want, || format!("{which}: {}", u.primary_name()))?;
    }
    Ok(())
}

fn twisted_axioms() -> Outcome {
    let l = EtaleCubic::RealComplex;
    for c in [octonions::<Q>(), split_octonions()] {
        let tc = ok(tc_hurwitz(&c))?;
        let r = verify_twisted_axioms(&tc, None, SEED, 100);
        ensure(r.passed(), || r.to_string())?;
        let lam = [Q::new(4, 3), Q::new(1, 3), Q::new(1, 3)];
        let r = verify_twisted_axioms(&tc, Some(&lam), SEED + 1, 100);
        ensure(r.passed(), || format!("mu = lambda^#: {r}"))?;
        let r = cayley_gradings::twisted::verify_similitude(&tc, &lam, &l.mul(&lam, &lam), SEED + 2, 100);
        ensure(!r.passed(), || "mu = lambda^2 was accepted".into())?;
        let r = verify_epsilon(&tc);
        ensure(r.passed(), || r.to_string())?;
        let r = AlbertAlgebra::new(&tc).verify(SEED + 3, 20);
        ensure(r.passed(), || r.to_string())?;
    }
    Ok(())
}

fn type_iii_coverage() -> Outcome {
    for item in TypeIIIItem::ALL {
        let label = ok(minimal_label(item))?;
        ensure(label.item() == Some(item), || format!("{item}: label classifies as {:?}", label.item()))?;
        let (tc, g) = ok(label.realize())?;
        let r = verify_grading(&g, &TwistedTarget::new(&tc, label.group(), &label.h));
        ensure(r.passed(), || format!("{item}: {r}"))?;
        let d = ok(identity_component_dim(&g))?;
        ensure(d == item.numeral(), || format!("{item}: dim V_e = {d}"))?;

        let mut squared = label.clone();
        squared.h = ok(label.group().mul(2, &label.h))?;
        ensure(ok(type_iii_iso_decision(&label, &squared))?, || format!("{item}: h and h^2 not identified"))?;
        let (_, gc) = ok(label.cayley.realize::<Q>())?;
        let w = ok(h_square_isomorphism(&tc, &gc, &label.h))?;
        ensure(w.report.passed(), || format!("{item}: {}", w.report))?;
    }
    let label = ok(minimal_label(TypeIIIItem::C2))?;
    let group = label.group().clone();
    let mut shifted = label.clone();
    if let CayleyVariant::Cartan { gamma } = &mut shifted.cayley.variant {
        for g in gamma.iter_mut() {
            *g = ok(group.add(g, &label.h))?;
        }
    }
    ensure(shifted != label, || "shift did nothing".into())?;
    ensure(ok(type_iii_iso_decision(&label, &shifted))?, || "2.c h-shift not identified".into())
}

fn d4_model() -> Outcome {
    for (c, inertia) in [(octonions::<Q>(), Inertia::new(1, 7, 0)), (split_octonions(), Inertia::new(5, 3, 0))] {
        let m = ok(so_tilde_v0(&c))?;
        ensure(m.lie().dim() == 28, || format!("dim so(V0) = {}", m.lie().dim()))?;
        ensure(m.inertia() == inertia, || format!("inertia {:?}", m.inertia()))?;
        let der = ok(der_of_twisted(&ok(tc_hurwitz(&c))?))?;
        ensure(der.dim() == 28, || format!("dim Der_L(V) = {}", der.dim()))?;
        let span = ok(first_component_span(&der))?;
        ensure(&span == m.span(), || "first-component projection differs from so(V0)".into())?;
    }
    Ok(())
}

fn fine_censuses() -> Outcome {
    for (which, want) in [
        (FineTypeIII::OZ2Cubed, [(1, 14), (2, 7)]),
        (FineTypeIII::OsZ2, [(1, 26), (2, 1)]),
        (FineTypeIII::OsZ2Cubed, [(1, 14), (2, 7)]),
    ] {
        let (m, g) = ok(fine_type_iii(which))?;
        let target = ok(so_target(&m))?;
        let r = verify_grading(&g, &target);
        ensure(r.passed(), || format!("{which}: {r}"))?;
        let rows = ok(census(&g, &target))?;
        let got = dim_summary(&rows);
        ensure(got == want.into_iter().collect(), || format!("{which}: {got:?}"))?;
    }
    Ok(())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cayley-gradings");
    let dir = ok(tempfile::tempdir())?;
    let file = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let (tc, so) = (file("tc.json"), file("so.json"));
    let runs: Vec<Vec<String>> = [
        vec!["construct", "--twisted", "tc", "--cayley", "Os"],
        vec!["construct", "--twisted", "tc", "--cayley", "Os", "-o", &tc],
        vec!["verify", &tc, "--seed", "11", "--lambda", "(2,1)"],
        vec!["construct", "--grading", "typeIII-so", "--fine", "Os-Z^2Z3", "-o", &so],
        vec!["census", &so],
        vec!["universal", &so],
        vec!["list-fine", "--algebra", "G2-split"],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    for args in &runs {
        let go = || Command::new(bin).args(args).output().map_err(|e| e.to_string());
        let (a, b) = (go()?, go()?);
        ensure(a.status.success(), || format!("{args:?} exited with {}", a.status))?;
        ensure(a.stdout == b.stdout && a.stderr == b.stderr, || format!("{args:?} differs between runs"))?;
    }
    let (x, y) = (ok(std::fs::read(&so))?, ok(std::fs::read(&so))?);
    ensure(x == y, || "dump differs".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("composition laws", composition_laws),
        ("G2 dimensions and Killing forms", g2_dimensions_and_forms),
        ("triality algebra", triality),
        ("Cayley grading layer", cayley_grading_layer),
        ("universal groups", universal_groups),
        ("twisted composition axioms", twisted_axioms),
        ("Type III coverage", type_iii_coverage),
        ("D4 model", d4_model),
        ("fine Type III censuses", fine_censuses),
        ("CLI determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                println!("FAIL {:>2} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
