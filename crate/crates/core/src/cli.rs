//! The command-line interface: construct objects as JSON, verify them, print
//! censuses and universal groups, decide isomorphism of labels and list fine
//! gradings.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::composition::{split_cayley_good_basis, HurwitzKind, SCAlgebra};
use crate::d4::{self, CensusRow, FineTypeIII};
use crate::gradings::{
    elementary_2_subgroup, fingerprint, grading_universal_group, iso_decision, verify_grading, CayleyKind,
    CayleyLabel, CayleyVariant, Grading, Label, SignMap,
};
use crate::groups::{FinAbGroup, GroupElem};
use crate::lie::{derivations, induced_grading_on_der};
use crate::linalg::{unit_vector, Matrix};
use crate::report::Report;
use crate::sample::DEFAULT_SEED;
use crate::scalars::{Rational, RealScalar, Scalar};
use crate::twisted::{
    cayley_grading, l_from_pair, minimal_label, tc_hurwitz, type_iii_iso_decision, verify_epsilon,
    verify_twisted_axioms, AlbertAlgebra, EtaleCubic, TwistedComposition, TwistedTarget, TypeIIIItem,
    TypeIIILabel,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "cayley-gradings", version, about = "Gradings on real Cayley algebras, G2 and D4")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an algebra, a twisted composition or a grading and dump it as JSON.
    Construct(ConstructArgs),
    /// Run the invariant checks that apply to a dumped object.
    Verify(VerifyArgs),
    /// Per-component dimension and restricted-form inertia, as CSV.
    Census { file: PathBuf },
    /// Universal group of a dumped grading.
    Universal { file: PathBuf },
    /// Decide whether two labelled gradings are isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Fine gradings of a real form of G2 or D4, with universal groups and censuses.
    ListFine {
        #[arg(long, value_enum)]
        algebra: FineTable,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("object").required(true).args(["algebra", "grading", "twisted"])))]
pub struct ConstructArgs {
    /// R, C, Cs, H, Hs, O, Os, octonions, split-octonions or split-cayley (good basis).
    #[arg(long)]
    pub algebra: Option<String>,
    #[arg(long, value_enum)]
    pub grading: Option<GradingFamily>,
    /// Only `tc` is available.
    #[arg(long)]
    pub twisted: Option<String>,
    /// O or Os.
    #[arg(long, default_value = "O")]
    pub cayley: String,
    /// trivial, cartan or cd:Z2^k with k = 1, 2, 3.
    #[arg(long = "gammaC", default_value = "trivial")]
    pub gamma_c: String,
    /// Signs of μ on the generators of T, e.g. "+,+,-".
    #[arg(long)]
    pub mu: Option<String>,
    /// Order of h; Type III gradings need 3.
    #[arg(long)]
    pub h_order: Option<u32>,
    /// Adds k·h to each entry of a Cartan triple.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub shift: i64,
    /// A Type III item such as 2.c, over its minimal group.
    #[arg(long)]
    pub item: Option<String>,
    /// O-Z2^3Z3, Os-Z2^3Z3 or Os-Z^2Z3.
    #[arg(long)]
    pub fine: Option<String>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Rescale a twisted composition to (λβ, λ^♯Q) with λ = (b, c) ∈ R × C.
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GradingFamily {
    /// A grading on the Cayley algebra itself.
    Cayley,
    /// The induced grading on Der(C).
    G2,
    /// Γ(G, Γ_C, h) on the twisted composition TC(C̄, R × C).
    #[value(name = "typeIII")]
    TypeIii,
    /// The Type III grading on so(Ṽ₀, n).
    #[value(name = "typeIII-so")]
    TypeIiiSo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FineTable {
    #[value(name = "G2-compact")]
    G2Compact,
    #[value(name = "G2-split")]
    G2Split,
    #[value(name = "so71")]
    So71,
    #[value(name = "so53")]
    So53,
}

/// What a grading in a [`Document`] is a grading of.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Target {
    Cayley { algebra: SCAlgebra<Rational> },
    G2 { algebra: SCAlgebra<Rational> },
    TypeIii { cayley: SCAlgebra<Rational>, h: GroupElem },
}

/// The JSON files written by `construct`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "object", rename_all = "kebab-case")]
pub enum Document {
    Algebra { name: String, algebra: SCAlgebra<Rational> },
    Twisted { twisted: TwistedComposition },
    Grading { target: Target, grading: Grading<Rational> },
    SoGrading { cayley: SCAlgebra<Rational>, h: GroupElem, grading: Grading<RealScalar> },
}

impl Document {
    pub fn load(path: &Path) -> Result<Document> {
        let text = fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)? + "\n")
    }

    pub fn label(&self) -> Option<&Label> {
        match self {
            Document::Grading { grading, .. } => grading.label(),
            Document::SoGrading { grading, .. } => grading.label(),
            _ => None,
        }
    }
}

/// Parses and runs the command line, printing to `out`. Returns the exit
/// code: 0 on success, 1 when a verification fails.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Construct(args) => {
            let doc = construct(&args)?;
            let json = doc.to_json()?;
            match &args.output {
                Some(p) => fs::write(p, json)?,
                None => out.write_all(json.as_bytes())?,
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let doc = Document::load(&args.file)?;
            let lambda = args.lambda.as_deref().map(parse_lambda).transpose()?;
            let report = verify(&doc, lambda.as_ref(), args.seed, args.samples)?;
            write!(out, "{report}")?;
            let failed = report.failures().count();
            if failed == 0 {
                writeln!(out, "verified: {} checks passed", report.checks.len())?;
                Ok(0)
            } else {
                writeln!(out, "failed: {failed} of {} checks", report.checks.len())?;
                Ok(1)
            }
        }
        Command::Census { file } => {
            let rows = census(&Document::load(&file)?)?;
            out.write_all(d4::census_csv(&rows)?.as_bytes())?;
            Ok(0)
        }
        Command::Universal { file } => {
            let g = universal(&Document::load(&file)?)?;
            writeln!(out, "{}", g.primary_name())?;
            Ok(0)
        }
        Command::Iso { a, b } => {
            let decision = iso(&load_label(&a)?, &load_label(&b)?)?;
            writeln!(out, "{decision}")?;
            Ok(0)
        }
        Command::ListFine { algebra } => {
            out.write_all(list_fine(algebra)?.as_bytes())?;
            Ok(0)
        }
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub fn parse_algebra(name: &str) -> Result<SCAlgebra<Rational>> {
    Ok(match name {
        "octonions" => HurwitzKind::O.build(),
        "split-octonions" => HurwitzKind::Os.build(),
        "split-cayley" => split_cayley_good_basis(),
        other => other.parse::<HurwitzKind>()?.build(),
    })
}

fn parse_cayley(name: &str) -> Result<CayleyKind> {
    match name {
        "octonions" => Ok(CayleyKind::O),
        "split-octonions" | "split-cayley" => Ok(CayleyKind::Os),
        other => other.parse(),
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("cannot read {s:?} as a rational number"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = n.parse().map_err(|_| bad())?;
    let d: i64 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// λ = (b, c) ∈ R × C with b and c rational, written "(b,c)".
pub fn parse_lambda(s: &str) -> Result<[Rational; 3]> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (b, c) = inner
        .split_once(',')
        .ok_or_else(|| Error::Invalid(format!("expected (b,c), got {s:?}")))?;
    l_from_pair(&parse_rational(b)?, &Scalar::from(parse_rational(c)?))
}

fn parse_signs(s: &str) -> Result<Vec<i8>> {
    s.split(',')
        .map(|t| match t.trim() {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(Error::Invalid(format!("bad sign {other:?}"))),
        })
        .collect()
}

/// The Cayley label described by the construct flags, over its group times
/// Z₃ when `with_h`; also returns h.
fn cayley_label(args: &ConstructArgs, with_h: bool) -> Result<(CayleyLabel, Option<GroupElem>)> {
    let kind = parse_cayley(&args.cayley)?;
    let spec = args.gamma_c.as_str();
    let (free, rank) = match spec {
        "trivial" => (0, 0),
        "cartan" => (2, 0),
        _ => {
            let k = spec
                .strip_prefix("cd:Z2")
                .map(|r| if r.is_empty() { Ok(1) } else { r.trim_start_matches('^').parse::<usize>() })
                .ok_or_else(|| Error::Invalid(format!("unknown gammaC {spec:?}")))?
                .map_err(|_| Error::Invalid(format!("unknown gammaC {spec:?}")))?;
            if !(1..=3).contains(&k) {
                return Err(precondition("cd:Z2^k needs k = 1, 2 or 3"));
            }
            (0, k)
        }
    };
    let mut orders = vec![2; rank];
    if with_h {
        orders.push(3);
    }
    let p = FinAbGroup::product_of_cyclic(free, &orders)?;
    let group = p.group.clone();
    let h = with_h.then(|| p.gen_images[free + rank].clone());
    let variant = match spec {
        "trivial" => CayleyVariant::Trivial,
        "cartan" => {
            let (a, b) = (p.gen_images[0].clone(), p.gen_images[1].clone());
            let c = group.neg(&group.add(&a, &b)?)?;
            let mut gamma = [a, b, c];
            if args.shift != 0 {
                let s = group.mul(args.shift, h.as_ref().ok_or_else(|| precondition("--shift needs --h-order 3"))?)?;
                for g in &mut gamma {
                    *g = group.add(g, &s)?;
                }
            }
            CayleyVariant::Cartan { gamma }
        }
        _ => {
            let gens = p.gen_images[free..free + rank].to_vec();
            let t = elementary_2_subgroup(&group, &gens)?;
            if rank == 1 {
                if args.mu.is_some() {
                    return Err(precondition("--mu needs |T| >= 4"));
                }
                CayleyVariant::Quaternion { t }
            } else {
                let signs = match &args.mu {
                    Some(m) => parse_signs(m)?,
                    None => vec![1; rank],
                };
                if signs.len() != rank {
                    return Err(precondition(format!("--mu needs {rank} signs")));
                }
                let mu = SignMap::from_generators(&group, &gens, &signs)?;
                if rank == 2 {
                    CayleyVariant::Quadratic { t, mu }
                } else {
                    CayleyVariant::Full { t, mu }
                }
            }
        }
    };
    if args.shift != 0 && spec != "cartan" {
        return Err(precondition("--shift applies to Cartan triples only"));
    }
    Ok((CayleyLabel { group, algebra: kind, variant }, h))
}

fn type_iii_label(args: &ConstructArgs) -> Result<TypeIIILabel> {
    if let Some(item) = &args.item {
        return minimal_label(item.parse::<TypeIIIItem>()?);
    }
    if let Some(f) = &args.fine {
        return f.parse::<FineTypeIII>()?.label();
    }
    match args.h_order {
        Some(3) => {}
        Some(n) => return Err(precondition(format!("h must have order 3, not {n}"))),
        None => return Err(precondition("Type III gradings need --h-order 3, --item or --fine")),
    }
    let (cayley, h) = cayley_label(args, true)?;
    Ok(TypeIIILabel { h: h.expect("h requested"), cayley })
}

pub fn construct(args: &ConstructArgs) -> Result<Document> {
    if let Some(name) = &args.algebra {
        return Ok(Document::Algebra { name: name.clone(), algebra: parse_algebra(name)? });
    }
    if let Some(t) = &args.twisted {
        if t != "tc" {
            return Err(precondition(format!("unknown twisted composition {t:?}; use tc")));
        }
        let c = parse_cayley(&args.cayley)?;
        let alg = match c {
            CayleyKind::O => HurwitzKind::O.build(),
            CayleyKind::Os => HurwitzKind::Os.build(),
        };
        return Ok(Document::Twisted { twisted: tc_hurwitz(&alg)? });
    }
    let family = args.grading.expect("clap requires one object");
    if matches!(family, GradingFamily::Cayley | GradingFamily::G2) && (args.item.is_some() || args.fine.is_some()) {
        return Err(precondition("--item and --fine apply to Type III gradings"));
    }
    match family {
        GradingFamily::Cayley | GradingFamily::G2 => {
            if args.h_order.is_some() {
                return Err(precondition("--h-order applies to Type III gradings"));
            }
            let (label, _) = cayley_label(args, false)?;
            let (alg, grading) = label.realize::<Rational>()?;
            if family == GradingFamily::Cayley {
                Ok(Document::Grading { target: Target::Cayley { algebra: alg }, grading })
            } else {
                let (_, g) = induced_grading_on_der(&alg, &grading)?;
                Ok(Document::Grading { target: Target::G2 { algebra: alg }, grading: g.with_label(Label::Cayley(label)) })
            }
        }
        GradingFamily::TypeIii => {
            let label = type_iii_label(args)?;
            let (c, gamma_c) = label.cayley.realize::<Rational>()?;
            let tc = tc_hurwitz(&c)?;
            let grading = cayley_grading(&tc, &gamma_c, &label.h)?;
            Ok(Document::Grading { target: Target::TypeIii { cayley: c, h: label.h }, grading })
        }
        GradingFamily::TypeIiiSo => {
            let label = type_iii_label(args)?;
            let (model, grading) = d4::realize_so_grading(&label)?;
            Ok(Document::SoGrading { cayley: model.cayley().clone(), h: label.h, grading })
        }
    }
}

fn realized_label_check(report: &mut Report, grading: &Grading<Rational>, alg: &SCAlgebra<Rational>) {
    if let Some(Label::Cayley(l)) = grading.label() {
        let w = match l.realize::<Rational>() {
            Ok((a, g)) if &a == alg && g.components() == grading.components() => None,
            Ok(_) => Some("label realizes a different grading".to_string()),
            Err(e) => Some(e.to_string()),
        };
        report.record("label matches the grading", w);
    }
}

/// The checks that apply to a document.
pub fn verify(doc: &Document, lambda: Option<&[Rational; 3]>, seed: u64, samples: usize) -> Result<Report> {
    let mut r = Report::new();
    match doc {
        Document::Algebra { algebra, .. } => {
            let w = algebra.composition_witness()?;
            r.record("n(xy) = n(x)n(y) on basis 4-tuples", w.map(|t| format!("basis {t:?}")));
            if algebra.is_hurwitz() {
                let para = algebra.para_hurwitz()?;
                r.record(
                    "para-Hurwitz product is a symmetric composition",
                    para.symmetric_composition_check().err().map(|e| e.to_string()),
                );
                r.record("(x*y)*x = n(x)y = x*(y*x) on random pairs", para.symmetric_identity_witness(seed, samples));
            }
        }
        Document::Twisted { twisted } => {
            r.extend(verify_twisted_axioms(twisted, lambda, seed, samples));
            r.extend(verify_epsilon(twisted));
            r.extend(AlbertAlgebra::new(twisted).verify(seed, samples.min(20)));
        }
        Document::Grading { target, grading } => match target {
            Target::Cayley { algebra } => {
                r.extend(verify_grading(grading, algebra));
                realized_label_check(&mut r, grading, algebra);
            }
            Target::G2 { algebra } => {
                let der = derivations(algebra)?;
                r.extend(verify_grading(grading, &der.structure_algebra()?));
            }
            Target::TypeIii { cayley, h } => {
                let tc = tc_hurwitz(cayley)?;
                r.extend(verify_grading(grading, &TwistedTarget::new(&tc, grading.group(), h)));
            }
        },
        Document::SoGrading { cayley, grading, .. } => {
            let model = d4::so_tilde_v0(cayley)?;
            r.extend(verify_grading(grading, &d4::so_target(&model)?));
        }
    }
    Ok(r)
}

fn rows(fp: std::collections::BTreeMap<GroupElem, (usize, crate::linalg::Inertia)>) -> Vec<CensusRow> {
    fp.into_iter().map(|(degree, (dim, inertia))| CensusRow { degree, dim, inertia }).collect()
}

/// Census of a grading document: dimension and inertia of the natural form
/// (norm, Killing form, or T∘b_Q) restricted to each component.
pub fn census(doc: &Document) -> Result<Vec<CensusRow>> {
    match doc {
        Document::Grading { target, grading } => {
            let gram = match target {
                Target::Cayley { algebra } => {
                    algebra.norm().ok_or_else(|| precondition("algebra carries no norm"))?.gram.clone()
                }
                Target::G2 { algebra } => derivations(algebra)?.killing_form()?.gram,
                Target::TypeIii { cayley, .. } => {
                    let tc = tc_hurwitz(cayley)?;
                    let n = tc.dim();
                    let e: Vec<Vec<Rational>> = (0..n).map(|a| unit_vector(n, a)).collect();
                    Matrix::from_fn(n, n, |a, b| EtaleCubic::RealComplex.trace(&tc.polar(&e[a], &e[b])))
                }
            };
            Ok(rows(fingerprint(grading, &gram)?))
        }
        Document::SoGrading { cayley, grading, .. } => {
            let model = d4::so_tilde_v0(cayley)?;
            d4::census(grading, &d4::so_target(&model)?)
        }
        _ => Err(precondition("census needs a grading")),
    }
}

pub fn universal(doc: &Document) -> Result<FinAbGroup> {
    Ok(match doc {
        Document::Grading { target, grading } => match target {
            Target::Cayley { algebra } => grading_universal_group(grading, algebra)?.0.group,
            Target::G2 { algebra } => grading_universal_group(grading, &derivations(algebra)?.structure_algebra()?)?.0.group,
            Target::TypeIii { cayley, h } => {
                let tc = tc_hurwitz(cayley)?;
                grading_universal_group(grading, &TwistedTarget::new(&tc, grading.group(), h))?.0.group
            }
        },
        Document::SoGrading { cayley, grading, .. } => {
            let model = d4::so_tilde_v0(cayley)?;
            grading_universal_group(grading, &d4::so_target(&model)?)?.0.group
        }
        _ => return Err(precondition("universal needs a grading")),
    })
}

/// Reads a label from a grading document or from a bare label file.
pub fn load_label(path: &Path) -> Result<Label> {
    let text = fs::read_to_string(path)?;
    if let Ok(doc) = serde_json::from_str::<Document>(&text) {
        return doc.label().cloned().ok_or_else(|| precondition(format!("{} carries no label", path.display())));
    }
    Ok(serde_json::from_str(&text)?)
}

pub fn iso(a: &Label, b: &Label) -> Result<bool> {
    match (a, b) {
        (Label::Cayley(x), Label::Cayley(y)) => iso_decision(x, y),
        (Label::TypeIii(x), Label::TypeIii(y)) => type_iii_iso_decision(x, y),
        _ => Err(precondition("labels belong to different families")),
    }
}

fn summary(rows: &[CensusRow]) -> String {
    d4::dim_summary(rows).iter().map(|(d, n)| format!("{n}x{d}")).collect::<Vec<_>>().join(" + ")
}

fn g2_fine(kind: CayleyKind) -> Result<Vec<(String, CayleyLabel)>> {
    let mut out = Vec::new();
    let p = FinAbGroup::product_of_cyclic(0, &[2, 2, 2])?;
    let gens = p.gen_images.clone();
    let signs: &[i8] = if kind == CayleyKind::O { &[1, 1, 1] } else { &[1, 1, -1] };
    let mu = SignMap::from_generators(&p.group, &gens, signs)?;
    let t = elementary_2_subgroup(&p.group, &gens)?;
    out.push((
        format!("Gamma_{}(Z2^3, mu = {})", kind.name(), signs.iter().map(|s| if *s > 0 { "+" } else { "-" }).collect::<Vec<_>>().join(",")),
        CayleyLabel { group: p.group.clone(), algebra: kind, variant: CayleyVariant::Full { t, mu } },
    ));
    if kind == CayleyKind::Os {
        let z2 = FinAbGroup::free(2);
        let (a, b) = (z2.generator(0), z2.generator(1));
        let c = z2.neg(&z2.add(&a, &b)?)?;
        out.insert(
            0,
            ("Cartan".to_string(), CayleyLabel { group: z2, algebra: kind, variant: CayleyVariant::Cartan { gamma: [a, b, c] } }),
        );
    }
    Ok(out)
}

/// The fine gradings of a real form, each with its universal group and the
/// dimensions of its components, all recomputed from the constructions.
pub fn list_fine(which: FineTable) -> Result<String> {
    let mut s = String::new();
    let header = |s: &mut String, title: &str| {
        let _ = writeln!(s, "{title}");
        let _ = writeln!(s, "{:<28}{:<18}components", "grading", "universal group");
    };
    match which {
        FineTable::G2Compact | FineTable::G2Split => {
            let kind = if which == FineTable::G2Compact { CayleyKind::O } else { CayleyKind::Os };
            header(&mut s, &format!("fine gradings on Der({}), up to equivalence", kind.name()));
            for (name, label) in g2_fine(kind)? {
                let (alg, g) = label.realize::<Rational>()?;
                let (der, dg) = induced_grading_on_der(&alg, &g)?;
                let target = der.structure_algebra()?;
                let u = grading_universal_group(&dg, &target)?.0.group;
                let census = rows(fingerprint(&dg, &target.norm().expect("Killing form").gram)?);
                let _ = writeln!(s, "{:<28}{:<18}{}", name, u.primary_name(), summary(&census));
            }
        }
        FineTable::So71 | FineTable::So53 => {
            let list: &[FineTypeIII] = if which == FineTable::So71 {
                &[FineTypeIII::OZ2Cubed]
            } else {
                &[FineTypeIII::OsZ2Cubed, FineTypeIII::OsZ2]
            };
            let title = if which == FineTable::So71 { "so(7,1)" } else { "so(5,3)" };
            header(&mut s, &format!("fine Type III gradings on {title}, up to equivalence"));
            for &f in list {
                let (model, g) = d4::fine_type_iii(f)?;
                let target = d4::so_target(&model)?;
                let u = grading_universal_group(&g, &target)?.0.group;
                let census = d4::census(&g, &target)?;
                let _ = writeln!(s, "{:<28}{:<18}{}", f.name(), u.primary_name(), summary(&census));
            }
        }
    }
    Ok(s)
}
