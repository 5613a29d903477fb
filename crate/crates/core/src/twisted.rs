//! Cyclic and twisted compositions, the twisted Hurwitz composition
//! TC(C̄, L) over L = R × C, its Albert algebra, Cayley gradings and the
//! classification labels of Type III gradings.
//!
//! Elements of L = R × C are written in the basis 1, ξ, ξ² with ξ = (1, ω),
//! so ξ³ = 1 and multiplication is cyclic convolution. The carrier of
//! TC(C̄, L) has the 24 coordinates 3s + j: slot s = 0 is 1 ⊗ ξʲ ⊗ 1 and slot
//! s ≥ 1 is b_s ⊗ ξʲ ⊗ √−3, where b₁, …, b₇ is the canonical basis of C⁰.
//! Over R this is the same real form as the one spanned by b_s ⊗ ξʲ ⊗ i; the
//! factor √−3 = ω − ω² keeps β and Q defined over Q.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::{QuadForm, SCAlgebra};
use crate::gradings::{CayleyKind, CayleyLabel, CayleyVariant, GradedOperator, GradedTarget, Grading, Label};
use crate::groups::{FinAbGroup, GroupElem, Subgroup};
use crate::linalg::{unit_vector, Matrix, Subspace};
use crate::report::Report;
use crate::sample;
use crate::scalars::{Field, Rational, Scalar};
use crate::{Error, Result};

/// An element of a cubic étale algebra in its three coordinates.
pub type LElem<F> = [F; 3];

/// The two cubic étale algebras in play: F³ with ρ the cyclic shift, and
/// R × C in the basis 1, ξ, ξ².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EtaleCubic {
    Split,
    RealComplex,
}

impl EtaleCubic {
    pub fn one<F: Field>(self) -> LElem<F> {
        self.scalar(F::one())
    }

    /// The image of F in L.
    pub fn scalar<F: Field>(self, f: F) -> LElem<F> {
        match self {
            EtaleCubic::Split => [f.clone(), f.clone(), f],
            EtaleCubic::RealComplex => [f, F::zero(), F::zero()],
        }
    }

    /// The element of F an element of L comes from, if any.
    pub fn as_scalar<F: Field>(self, l: &LElem<F>) -> Option<F> {
        match self {
            EtaleCubic::Split => (l[0] == l[1] && l[1] == l[2]).then(|| l[0].clone()),
            EtaleCubic::RealComplex => (l[1].is_zero() && l[2].is_zero()).then(|| l[0].clone()),
        }
    }

    pub fn mul<F: Field>(self, x: &LElem<F>, y: &LElem<F>) -> LElem<F> {
        match self {
            EtaleCubic::Split => std::array::from_fn(|k| x[k].clone() * &y[k]),
            EtaleCubic::RealComplex => std::array::from_fn(|k| {
                let mut acc = F::zero();
                for i in 0..3 {
                    acc = acc + &(x[i].clone() * &y[(k + 3 - i) % 3]);
                }
                acc
            }),
        }
    }

    pub fn add<F: Field>(self, x: &LElem<F>, y: &LElem<F>) -> LElem<F> {
        std::array::from_fn(|k| x[k].clone() + &y[k])
    }

    /// The adjoint ℓ^♯, with ℓ·ℓ^♯ = N(ℓ).
    pub fn sharp<F: Field>(self, l: &LElem<F>) -> LElem<F> {
        let [a, b, c] = l;
        match self {
            EtaleCubic::Split => [b.clone() * c, c.clone() * a, a.clone() * b],
            EtaleCubic::RealComplex => [
                a.clone() * a - b.clone() * c,
                c.clone() * c - a.clone() * b,
                b.clone() * b - a.clone() * c,
            ],
        }
    }

    pub fn norm<F: Field>(self, l: &LElem<F>) -> F {
        let p = self.mul(l, &self.sharp(l));
        p[0].clone()
    }

    pub fn trace<F: Field>(self, l: &LElem<F>) -> F {
        match self {
            EtaleCubic::Split => l[0].clone() + &l[1] + &l[2],
            EtaleCubic::RealComplex => F::from_i64(3) * &l[0],
        }
    }

    /// ρ(ℓ₁, ℓ₂, ℓ₃) = (ℓ₂, ℓ₃, ℓ₁) on F³.
    pub fn rho<F: Field>(l: &LElem<F>) -> LElem<F> {
        [l[1].clone(), l[2].clone(), l[0].clone()]
    }

    /// The automorphism τ of R × C: complex conjugation on the second
    /// factor, so τ(ξ) = ξ².
    pub fn tau<F: Field>(l: &LElem<F>) -> LElem<F> {
        [l[0].clone(), l[2].clone(), l[1].clone()]
    }
}

/// ξ = (1, ω) ∈ R × C.
pub fn xi<F: Field>() -> LElem<F> {
    [F::zero(), F::one(), F::zero()]
}

/// √−3 = ω − ω².
pub fn sqrt_minus_3() -> Scalar {
    let w = Scalar::omega();
    w.clone() - w.pow(2)
}

fn omega_powers() -> [Scalar; 3] {
    let w = Scalar::omega();
    [Scalar::one(), w.clone(), w.pow(2)]
}

/// (b, c) ∈ R × C in the basis 1, ξ, ξ², for b rational and c ∈ Q(ζ₁₂)
/// with the result rational.
pub fn l_from_pair(b: &Rational, c: &Scalar) -> Result<LElem<Rational>> {
    let w = omega_powers();
    let images = [Scalar::from(b.clone()), c.clone(), c.conjugate()];
    from_psi(&w, &images)
}

/// The pair (b, c) of an element of R × C.
pub fn l_to_pair(l: &LElem<Rational>) -> (Rational, Scalar) {
    let w = omega_powers();
    let b = l[0].clone() + &l[1] + &l[2];
    let c = Scalar::from(l[0].clone()) + Scalar::from(l[1].clone()) * &w[1] + Scalar::from(l[2].clone()) * &w[2];
    (b, c)
}

fn scalar_to_rational(x: &Scalar) -> Result<Rational> {
    x.to_real()
        .filter(|r| r.is_rational())
        .map(|r| r.a)
        .ok_or_else(|| Error::Invalid(format!("{x} is not rational")))
}

/// Inverse of ψ: (c₁, c₂, c₃) ↦ coordinates aⱼ = (c₁ + ω⁻ʲc₂ + ω⁻²ʲc₃)/3.
fn from_psi(w: &[Scalar; 3], c: &[Scalar; 3]) -> Result<LElem<Rational>> {
    let third = Scalar::from(Rational::new(1, 3));
    let mut out = Vec::with_capacity(3);
    for j in 0..3 {
        let z = c[0].clone() + c[1].clone() * &w[(3 - j) % 3] + c[2].clone() * &w[(6 - 2 * j) % 3];
        out.push(scalar_to_rational(&(z * &third))?);
    }
    Ok(out.try_into().expect("three coordinates"))
}

/// The cyclic composition S ⊗ F³ = S × S × S with
/// (x₁, x₂, x₃) * (y₁, y₂, y₃) = (x₂⋆y₃, x₃⋆y₁, x₁⋆y₂) and Q = (n, n, n).
#[derive(Clone, Debug)]
pub struct CyclicComposition<F> {
    s: SCAlgebra<F>,
}

impl<F: Field> CyclicComposition<F> {
    pub fn from_symmetric(s: SCAlgebra<F>) -> Result<CyclicComposition<F>> {
        s.symmetric_composition_check()
            .map_err(|f| Error::Precondition(format!("not a symmetric composition algebra: {f}")))?;
        Ok(CyclicComposition { s })
    }

    pub fn rank(&self) -> usize {
        self.s.dim()
    }

    fn slot<'a>(&self, x: &'a [F], k: usize) -> &'a [F] {
        let n = self.rank();
        &x[k * n..(k + 1) * n]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = self.s.mul(self.slot(x, 1), self.slot(y, 2));
        out.extend(self.s.mul(self.slot(x, 2), self.slot(y, 0)));
        out.extend(self.s.mul(self.slot(x, 0), self.slot(y, 1)));
        out
    }

    pub fn polar(&self, x: &[F], y: &[F]) -> LElem<F> {
        let q = self.s.norm().expect("symmetric composition has a norm");
        std::array::from_fn(|k| q.polar(self.slot(x, k), self.slot(y, k)))
    }

    pub fn quad(&self, x: &[F]) -> LElem<F> {
        let half = F::from_rational(&Rational::new(1, 2));
        self.polar(x, x).map(|v| v * &half)
    }

    /// Componentwise action of F³.
    pub fn scale(&self, l: &LElem<F>, x: &[F]) -> Vec<F> {
        (0..3).flat_map(|k| self.slot(x, k).iter().map(move |v| l[k].clone() * v)).collect()
    }
}

impl CyclicComposition<Rational> {
    /// The defining identities and their consequences on seeded random inputs.
    pub fn verify(&self, seed: u64, samples: usize) -> Report {
        let l = EtaleCubic::Split;
        let mut rng = sample::rng(seed);
        let n = 3 * self.rank();
        let (mut quad, mut cyc, mut left, mut right) = (None, None, None, None);
        for k in 0..samples {
            let x = sample::small_vector(&mut rng, n);
            let y = sample::small_vector(&mut rng, n);
            let z = sample::small_vector(&mut rng, n);
            let qx = self.quad(&x);
            let qy = self.quad(&y);
            let xy = self.mul(&x, &y);
            if quad.is_none()
                && self.quad(&xy) != l.mul(&EtaleCubic::rho(&qx), &EtaleCubic::rho(&EtaleCubic::rho(&qy)))
            {
                quad = Some(format!("sample {k}"));
            }
            let a = self.polar(&xy, &z);
            let b = EtaleCubic::rho(&self.polar(&self.mul(&y, &z), &x));
            let c = EtaleCubic::rho(&EtaleCubic::rho(&self.polar(&self.mul(&z, &x), &y)));
            if cyc.is_none() && !(a == b && b == c) {
                cyc = Some(format!("sample {k}"));
            }
            if left.is_none() && self.mul(&xy, &x) != self.scale(&EtaleCubic::rho(&EtaleCubic::rho(&qx)), &y) {
                left = Some(format!("sample {k}"));
            }
            if right.is_none() && self.mul(&x, &self.mul(&y, &x)) != self.scale(&EtaleCubic::rho(&qx), &y) {
                right = Some(format!("sample {k}"));
            }
        }
        let mut r = Report::new();
        r.record("Q(x*y) = rho(Q(x)) rho^2(Q(y))", quad);
        r.record("b_Q(x*y, z) is cyclic", cyc);
        r.record("(x*y)*x = rho^2(Q(x)) y", left);
        r.record("x*(y*x) = rho(Q(x)) y", right);
        r
    }
}

pub const CARRIER_DIM: usize = 24;

/// TC(C̄, L) for L = R × C: the fixed points of ‾ ⊗ id ⊗ ι in C ⊗ L ⊗ C.
///
/// β is stored as the symmetric bilinear map B with β(v) = B(v, v), and Q
/// by the three L-coordinates of its polar form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TwistedRepr", into = "TwistedRepr")]
pub struct TwistedComposition {
    cayley: SCAlgebra<Rational>,
    c0: Subspace<Rational>,
    beta: Vec<Vec<Vec<Rational>>>,
    gram: [Matrix<Rational>; 3],
}

#[derive(Serialize, Deserialize)]
struct TwistedRepr {
    cayley: SCAlgebra<Rational>,
    basis_names: Vec<String>,
    beta: Vec<Vec<Vec<Rational>>>,
    gram_q: Vec<Matrix<Rational>>,
}

impl TryFrom<TwistedRepr> for TwistedComposition {
    type Error = Error;
    fn try_from(r: TwistedRepr) -> Result<Self> {
        let n = CARRIER_DIM;
        let shape_ok = r.beta.len() == n
            && r.beta.iter().all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
            && r.gram_q.len() == 3
            && r.gram_q.iter().all(|m| m.nrows() == n && m.ncols() == n);
        if !shape_ok {
            return Err(Error::Invalid("twisted composition tensors have the wrong shape".into()));
        }
        CayleyKind::of(&r.cayley)?;
        let c0 = r.cayley.trace_zero()?;
        let [g0, g1, g2]: [Matrix<Rational>; 3] = r.gram_q.try_into().expect("length checked");
        Ok(TwistedComposition { cayley: r.cayley, c0, beta: r.beta, gram: [g0, g1, g2] })
    }
}

impl From<TwistedComposition> for TwistedRepr {
    fn from(t: TwistedComposition) -> Self {
        TwistedRepr {
            basis_names: t.basis_names(),
            cayley: t.cayley,
            beta: t.beta,
            gram_q: t.gram.into_iter().collect(),
        }
    }
}

/// The complexified model C_ℂ³ used to compute β and Q.
struct Ambient {
    para: SCAlgebra<Scalar>,
    norm: QuadForm<Scalar>,
    /// C-coordinates of 1, b₁, …, b₇.
    slots: Vec<Vec<Scalar>>,
    /// C-coordinates to slot coordinates.
    to_slots: Matrix<Scalar>,
    w: [Scalar; 3],
}

impl Ambient {
    fn new(c: &SCAlgebra<Rational>, c0: &Subspace<Rational>) -> Result<Ambient> {
        let cs = c.map_field(|r| Scalar::from(r.clone()));
        let unit = c.unit().ok_or_else(|| Error::Precondition("algebra has no unit".into()))?;
        let mut slots_q = vec![unit.to_vec()];
        slots_q.extend(c0.vectors());
        let p = Matrix::from_fn(8, 8, |r, s| slots_q[s][r].clone());
        let pinv = p.inverse().ok_or_else(|| Error::Precondition("C⁰ and 1 do not span C".into()))?;
        Ok(Ambient {
            para: cs.para_hurwitz()?,
            norm: cs.norm().expect("Cayley algebra has a norm").clone(),
            slots: slots_q.iter().map(|v| v.iter().map(|r| Scalar::from(r.clone())).collect()).collect(),
            to_slots: pinv.map(|r| Scalar::from(r.clone())),
            w: omega_powers(),
        })
    }

    fn embed(&self, v: &[Rational]) -> [Vec<Scalar>; 3] {
        let root = sqrt_minus_3();
        std::array::from_fn(|k| {
            let mut x = vec![Scalar::zero(); 8];
            for s in 0..8 {
                for j in 0..3 {
                    let r = &v[3 * s + j];
                    if r.is_zero() {
                        continue;
                    }
                    let mut coef = Scalar::from(r.clone()) * &self.w[(k * j) % 3];
                    if s > 0 {
                        coef = coef * &root;
                    }
                    for (xe, be) in x.iter_mut().zip(&self.slots[s]) {
                        if !be.is_zero() {
                            *xe = xe.clone() + &(coef.clone() * be);
                        }
                    }
                }
            }
            x
        })
    }

    fn extract(&self, x: &[Vec<Scalar>; 3]) -> Result<Vec<Rational>> {
        let g: Vec<Vec<Scalar>> = x.iter().map(|xk| self.to_slots.mul_vec(xk)).collect();
        let inv_root = sqrt_minus_3() * &Scalar::from(Rational::new(-1, 3));
        let mut out = vec![Rational::zero(); CARRIER_DIM];
        for s in 0..8 {
            let mut c: [Scalar; 3] = std::array::from_fn(|k| g[k][s].clone());
            if s > 0 {
                c = c.map(|z| z * &inv_root);
            }
            let l = from_psi(&self.w, &c)?;
            out[3 * s..3 * s + 3].clone_from_slice(&l);
        }
        Ok(out)
    }

    fn star(&self, x: &[Vec<Scalar>; 3], y: &[Vec<Scalar>; 3]) -> [Vec<Scalar>; 3] {
        [self.para.mul(&x[1], &y[2]), self.para.mul(&x[2], &y[0]), self.para.mul(&x[0], &y[1])]
    }

    fn polar(&self, x: &[Vec<Scalar>; 3], y: &[Vec<Scalar>; 3]) -> Result<LElem<Rational>> {
        let c: [Scalar; 3] = std::array::from_fn(|k| self.norm.polar(&x[k], &y[k]));
        from_psi(&self.w, &c)
    }
}

/// TC(C̄, R × C) for a real Cayley algebra C over Q.
pub fn tc_hurwitz(c: &SCAlgebra<Rational>) -> Result<TwistedComposition> {
    CayleyKind::of(c)?;
    if !c.is_hurwitz() {
        return Err(Error::Precondition("input is not a Hurwitz algebra".into()));
    }
    let c0 = c.trace_zero()?;
    let amb = Ambient::new(c, &c0)?;
    let n = CARRIER_DIM;
    let embedded: Vec<[Vec<Scalar>; 3]> = (0..n).map(|a| amb.embed(&unit_vector(n, a))).collect();
    let half = Scalar::from(Rational::new(1, 2));
    let mut beta = vec![vec![Vec::new(); n]; n];
    let mut gram: [Matrix<Rational>; 3] = std::array::from_fn(|_| Matrix::zeros(n, n));
    for a in 0..n {
        for b in a..n {
            let (x, y) = (&embedded[a], &embedded[b]);
            let xy = amb.star(x, y);
            let yx = amb.star(y, x);
            let sym: [Vec<Scalar>; 3] = std::array::from_fn(|k| {
                xy[k].iter().zip(&yx[k]).map(|(p, q)| (p.clone() + q) * &half).collect()
            });
            let v = amb.extract(&sym)?;
            beta[a][b] = v.clone();
            beta[b][a] = v;
            let q = amb.polar(x, y)?;
            for k in 0..3 {
                gram[k][(a, b)] = q[k].clone();
                gram[k][(b, a)] = q[k].clone();
            }
        }
    }
    Ok(TwistedComposition { cayley: c.clone(), c0, beta, gram })
}

const L: EtaleCubic = EtaleCubic::RealComplex;

impl TwistedComposition {
    pub fn dim(&self) -> usize {
        CARRIER_DIM
    }

    pub fn cayley(&self) -> &SCAlgebra<Rational> {
        &self.cayley
    }

    pub fn kind(&self) -> CayleyKind {
        CayleyKind::of(&self.cayley).expect("checked on construction")
    }

    /// The canonical basis b₁, …, b₇ of C⁰.
    pub fn trace_zero_basis(&self) -> &Subspace<Rational> {
        &self.c0
    }

    pub fn basis_names(&self) -> Vec<String> {
        let xi = ["1", "xi", "xi^2"];
        let mut out = Vec::with_capacity(CARRIER_DIM);
        for s in 0..8 {
            for x in xi {
                out.push(if s == 0 { format!("1*{x}*1") } else { format!("b{s}*{x}*sqrt(-3)") });
            }
        }
        out
    }

    /// B(x, y) with β(v) = B(v, v).
    fn b(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); CARRIER_DIM];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa.clone() * yb;
                for (o, t) in out.iter_mut().zip(&self.beta[a][b]) {
                    if !t.is_zero() {
                        *o = o.clone() + &(c.clone() * t);
                    }
                }
            }
        }
        out
    }

    pub fn beta(&self, v: &[Rational]) -> Vec<Rational> {
        self.b(v, v)
    }

    /// β(x, y) = β(x + y) − β(x) − β(y).
    pub fn beta_polar(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.b(x, y).into_iter().map(|v| Rational::from_integer(2) * v).collect()
    }

    pub fn polar(&self, x: &[Rational], y: &[Rational]) -> LElem<Rational> {
        std::array::from_fn(|k| self.gram[k].bilinear(x, y))
    }

    pub fn quad(&self, v: &[Rational]) -> LElem<Rational> {
        self.polar(v, v).map(|x| x * Rational::new(1, 2))
    }

    /// N_V(v) = b_Q(v, β(v)), which lies in F.
    pub fn norm_v(&self, v: &[Rational]) -> LElem<Rational> {
        self.polar(v, &self.beta(v))
    }

    /// ℓ·v: ξ moves coordinate (s, j) to (s, j + 1).
    pub fn l_action(&self, l: &LElem<Rational>, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); CARRIER_DIM];
        for s in 0..8 {
            let x = [v[3 * s].clone(), v[3 * s + 1].clone(), v[3 * s + 2].clone()];
            let y = L.mul(l, &x);
            out[3 * s..3 * s + 3].clone_from_slice(&y);
        }
        out
    }

    pub fn l_action_matrix(&self, l: &LElem<Rational>) -> Matrix<Rational> {
        let cols: Vec<Vec<Rational>> =
            (0..CARRIER_DIM).map(|a| self.l_action(l, &unit_vector(CARRIER_DIM, a))).collect();
        Matrix::from_fn(CARRIER_DIM, CARRIER_DIM, |r, c| cols[c][r].clone())
    }

    /// ε = 1 ⊗ 1 ⊗ 1.
    pub fn epsilon(&self) -> Vec<Rational> {
        unit_vector(CARRIER_DIM, 0)
    }

    /// The carrier vectors coming from x ⊗ ξʲ: its R1 part and its C⁰ part.
    pub fn lift(&self, x: &[Rational], j: usize) -> Result<[Vec<Rational>; 2]> {
        let q = self.cayley.norm().expect("Cayley algebra has a norm");
        let one = self.cayley.unit().expect("Cayley algebra has a unit");
        let r = q.polar(x, one) * Rational::new(1, 2);
        let x0: Vec<Rational> = x.iter().zip(one).map(|(a, u)| a.clone() - &(r.clone() * u)).collect();
        let coords = self
            .c0
            .coordinates(&x0)
            .ok_or_else(|| Error::Invalid("vector does not split along R1 and C⁰".into()))?;
        let mut real = vec![Rational::zero(); CARRIER_DIM];
        real[j % 3] = r;
        let mut imag = vec![Rational::zero(); CARRIER_DIM];
        for (s, c) in coords.into_iter().enumerate() {
            imag[3 * (s + 1) + j % 3] = c;
        }
        Ok([real, imag])
    }

    /// The map x̄ ⊗ τ(ℓ) ⊗ c restricted to the carrier.
    pub fn conjugation_tau_matrix(&self) -> Matrix<Rational> {
        let n = CARRIER_DIM;
        let mut m = Matrix::zeros(n, n);
        for s in 0..8 {
            let sign = if s == 0 { Rational::one() } else { -Rational::one() };
            for j in 0..3 {
                m[(3 * s + (3 - j) % 3, 3 * s + j)] = sign.clone();
            }
        }
        m
    }
}

/// The axioms of a twisted composition for (λβ, μQ) on seeded random
/// inputs. With μ = λ^♯ they hold; see [`verify_twisted_axioms`].
pub fn verify_similitude(
    tc: &TwistedComposition,
    lambda: &LElem<Rational>,
    mu: &LElem<Rational>,
    seed: u64,
    samples: usize,
) -> Report {
    let beta = |v: &[Rational]| tc.l_action(lambda, &tc.beta(v));
    let quad = |v: &[Rational]| L.mul(mu, &tc.quad(v));
    let polar = |x: &[Rational], y: &[Rational]| L.mul(mu, &tc.polar(x, y));
    let mut rng = sample::rng(seed);
    let (mut semi, mut qsharp, mut scalar) = (None, None, None);
    for k in 0..samples {
        let v = sample::small_int_vector(&mut rng, CARRIER_DIM);
        let l = [sample::small_rational(&mut rng), sample::small_rational(&mut rng), sample::small_rational(&mut rng)];
        let bv = beta(&v);
        if semi.is_none() && beta(&tc.l_action(&l, &v)) != tc.l_action(&L.sharp(&l), &bv) {
            semi = Some(format!("sample {k}: beta(lv) differs from l^# beta(v)"));
        }
        if qsharp.is_none() && quad(&bv) != L.sharp(&quad(&v)) {
            qsharp = Some(format!("sample {k}: Q(beta(v)) = {:?}, Q(v)^# = {:?}", quad(&bv), L.sharp(&quad(&v))));
        }
        if scalar.is_none() && L.as_scalar(&polar(&v, &bv)).is_none() {
            scalar = Some(format!("sample {k}: b_Q(v, beta(v)) = {:?} is not in F", polar(&v, &bv)));
        }
    }
    let mut r = Report::new();
    r.record("beta(lv) = l^# beta(v)", semi);
    r.record("Q(beta(v)) = Q(v)^#", qsharp);
    r.record("b_Q(v, beta(v)) lies in F", scalar);
    r
}

/// The twisted composition axioms for (β, Q), or for (λβ, λ^♯Q).
pub fn verify_twisted_axioms(tc: &TwistedComposition, lambda: Option<&LElem<Rational>>, seed: u64, samples: usize) -> Report {
    let one = L.one();
    let lambda = lambda.unwrap_or(&one);
    verify_similitude(tc, lambda, &L.sharp(lambda), seed, samples)
}

/// β(ε) = ε and Q(ε) = 1.
pub fn verify_epsilon(tc: &TwistedComposition) -> Report {
    let e = tc.epsilon();
    let mut r = Report::new();
    let b = tc.beta(&e);
    r.record("beta(epsilon) = epsilon", (b != e).then(|| format!("beta(epsilon) = {b:?}")));
    let q = tc.quad(&e);
    r.record("Q(epsilon) = 1", (q != L.one()).then(|| format!("Q(epsilon) = {q:?}")));
    r
}

/// The Albert algebra J = L ⊕ V of a twisted composition.
#[derive(Clone, Copy, Debug)]
pub struct AlbertAlgebra<'a> {
    pub tc: &'a TwistedComposition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlbertElem {
    pub l: LElem<Rational>,
    pub v: Vec<Rational>,
}

impl AlbertElem {
    pub fn scale(&self, c: &Rational) -> AlbertElem {
        AlbertElem { l: self.l.clone().map(|x| x * c), v: self.v.iter().map(|x| x.clone() * c).collect() }
    }
}

impl<'a> AlbertAlgebra<'a> {
    pub fn new(tc: &'a TwistedComposition) -> AlbertAlgebra<'a> {
        AlbertAlgebra { tc }
    }

    /// (ℓ, v)^♯ = (ℓ^♯ − Q(v), β(v) − ℓv).
    pub fn sharp(&self, x: &AlbertElem) -> AlbertElem {
        let q = self.tc.quad(&x.v);
        let l = L.sharp(&x.l);
        let lv = self.tc.l_action(&x.l, &x.v);
        AlbertElem {
            l: std::array::from_fn(|k| l[k].clone() - &q[k]),
            v: self.tc.beta(&x.v).into_iter().zip(lv).map(|(a, b)| a - b).collect(),
        }
    }

    /// N(ℓ, v) = N(ℓ) + b_Q(v, β(v)) − T(ℓQ(v)).
    pub fn norm(&self, x: &AlbertElem) -> Result<Rational> {
        let nv = L
            .as_scalar(&self.tc.norm_v(&x.v))
            .ok_or_else(|| Error::Invalid("b_Q(v, beta(v)) is not a scalar".into()))?;
        Ok(L.norm(&x.l) + &nv - L.trace(&L.mul(&x.l, &self.tc.quad(&x.v))))
    }

    /// T((ℓ, v), (ℓ′, v′)) = T(ℓℓ′) + T(b_Q(v, v′)).
    pub fn trace_form(&self, x: &AlbertElem, y: &AlbertElem) -> Rational {
        L.trace(&L.mul(&x.l, &y.l)) + L.trace(&self.tc.polar(&x.v, &y.v))
    }

    /// (x^♯)^♯ = N(x)x on seeded random points, and ε^♯ = −1 + ε.
    pub fn verify(&self, seed: u64, samples: usize) -> Report {
        let mut r = Report::new();
        let eps = AlbertElem { l: [Rational::zero(), Rational::zero(), Rational::zero()], v: self.tc.epsilon() };
        let expected = AlbertElem { l: L.scalar(-Rational::one()), v: self.tc.epsilon() };
        let got = self.sharp(&eps);
        r.record("epsilon^# = -1 + epsilon", (got != expected).then(|| format!("epsilon^# = {got:?}")));
        let mut rng = sample::rng(seed);
        let mut witness = None;
        for k in 0..samples {
            let x = AlbertElem {
                l: std::array::from_fn(|_| sample::small_rational(&mut rng)),
                v: sample::small_int_vector(&mut rng, CARRIER_DIM),
            };
            let lhs = self.sharp(&self.sharp(&x));
            match self.norm(&x) {
                Ok(n) if lhs == x.scale(&n) => {}
                Ok(_) => {
                    witness = Some(format!("sample {k}"));
                    break;
                }
                Err(e) => {
                    witness = Some(format!("sample {k}: {e}"));
                    break;
                }
            }
        }
        r.record("(x^#)^# = N(x) x", witness);
        r
    }
}

/// A twisted composition together with the degree h of ξ, as a target for
/// [`crate::gradings::verify_grading`].
pub struct TwistedTarget<'a> {
    pub tc: &'a TwistedComposition,
    pub group: FinAbGroup,
    pub h: GroupElem,
}

impl<'a> TwistedTarget<'a> {
    pub fn new(tc: &'a TwistedComposition, group: &FinAbGroup, h: &GroupElem) -> TwistedTarget<'a> {
        TwistedTarget { tc, group: group.clone(), h: h.clone() }
    }
}

/// The grading of L with deg ξ = h.
pub fn l_grading(group: &FinAbGroup, h: &GroupElem) -> Result<Grading<Rational>> {
    let degrees = [group.identity(), h.clone(), group.mul(2, h)?];
    Grading::new(
        group.clone(),
        3,
        degrees.into_iter().enumerate().map(|(j, d)| (d, Subspace::span_of_units(3, [j]))).collect(),
    )
}

impl GradedTarget<Rational> for TwistedTarget<'_> {
    fn dim(&self) -> usize {
        CARRIER_DIM
    }

    fn product(&self, x: &[Rational], y: &[Rational]) -> Option<Vec<Rational>> {
        Some(self.tc.beta_polar(x, y))
    }

    fn operators(&self) -> Vec<GradedOperator<Rational>> {
        vec![GradedOperator {
            name: "multiplication by xi".into(),
            degree: Some(self.h.clone()),
            matrix: self.tc.l_action_matrix(&xi()),
        }]
    }

    fn graded_form(&self, x: &[Rational], y: &[Rational]) -> Option<Vec<Rational>> {
        Some(self.tc.polar(x, y).to_vec())
    }

    fn value_grading(&self) -> Option<Grading<Rational>> {
        l_grading(&self.group, &self.h).ok()
    }
}

fn require_order_3(group: &FinAbGroup, h: &GroupElem) -> Result<()> {
    if group.elem_order(h)? != Some(3) {
        return Err(Error::Precondition(format!("h = {h} does not have order 3")));
    }
    Ok(())
}

/// Γ(G, Γ_C, h): V_g is spanned by the ι̃-fixed parts of C_{g−jh} ⊗ ξʲ.
pub fn cayley_grading(tc: &TwistedComposition, gamma_c: &Grading<Rational>, h: &GroupElem) -> Result<Grading<Rational>> {
    let group = gamma_c.group();
    require_order_3(group, h)?;
    if gamma_c.ambient_dim() != 8 {
        return Err(Error::Precondition("Cayley grading must be on an 8-dimensional algebra".into()));
    }
    let mut pieces: std::collections::BTreeMap<GroupElem, Vec<Vec<Rational>>> = Default::default();
    for (g, s) in gamma_c.components() {
        for j in 0..3 {
            let deg = group.add(g, &group.mul(j as i64, h)?)?;
            let entry = pieces.entry(deg).or_default();
            for x in s.vectors() {
                entry.extend(tc.lift(&x, j)?);
            }
        }
    }
    let comps = pieces
        .into_iter()
        .map(|(d, vs)| Ok((d, Subspace::try_from_vectors(CARRIER_DIM, vs)?)))
        .collect::<Result<Vec<_>>>()?;
    let grading = Grading::new(group.clone(), CARRIER_DIM, comps)?;
    Ok(match gamma_c.label() {
        Some(Label::Cayley(c)) => {
            grading.with_label(Label::TypeIii(TypeIIILabel { h: h.clone(), cayley: c.clone() }))
        }
        _ => grading,
    })
}

/// a = (1, −1) ∈ R × C.
pub fn center_element() -> LElem<Rational> {
    [Rational::new(-1, 3), Rational::new(2, 3), Rational::new(2, 3)]
}

/// The grading V = ⊕ aV_g, a = (1, −1).
pub fn twist_by_center(tc: &TwistedComposition, grading: &Grading<Rational>) -> Result<Grading<Rational>> {
    grading.transport(&tc.l_action_matrix(&center_element()))
}

/// dim V_e, which is 1, 2, 4 or 8 for a Type III grading.
pub fn identity_component_dim(grading: &Grading<Rational>) -> Result<usize> {
    let d = grading.component(&grading.group().identity()).map_or(0, Subspace::dim);
    if matches!(d, 1 | 2 | 4 | 8) {
        Ok(d)
    } else {
        Err(Error::Precondition(format!("identity component has dimension {d}, not 1, 2, 4 or 8")))
    }
}

/// The automorphism ‾ ⊗ τ ⊗ id carrying Γ(G, Γ_C, h) onto Γ(G, Γ_C, h²),
/// with the checks that make it a witness.
#[derive(Clone, Debug)]
pub struct HSquareWitness {
    pub map: Matrix<Rational>,
    pub source: Grading<Rational>,
    pub target: Grading<Rational>,
    pub report: Report,
}

pub fn h_square_isomorphism(
    tc: &TwistedComposition,
    gamma_c: &Grading<Rational>,
    h: &GroupElem,
) -> Result<HSquareWitness> {
    let group = gamma_c.group();
    let source = cayley_grading(tc, gamma_c, h)?;
    let target = cayley_grading(tc, gamma_c, &group.mul(2, h)?)?;
    let phi = tc.conjugation_tau_matrix();
    let n = CARRIER_DIM;
    let e: Vec<Vec<Rational>> = (0..n).map(|a| unit_vector(n, a)).collect();
    let pe: Vec<Vec<Rational>> = e.iter().map(|v| phi.mul_vec(v)).collect();
    let mut report = Report::new();
    report.record("map is invertible", phi.inverse().is_none().then(|| "singular".to_string()));
    report.record(
        "map fixes epsilon",
        (phi.mul_vec(&tc.epsilon()) != tc.epsilon()).then(|| "epsilon moves".to_string()),
    );
    let mut beta_w = None;
    let mut q_w = None;
    'pairs: for a in 0..n {
        for b in a..n {
            if beta_w.is_none() && phi.mul_vec(&tc.beta_polar(&e[a], &e[b])) != tc.beta_polar(&pe[a], &pe[b]) {
                beta_w = Some(format!("basis pair ({a}, {b})"));
            }
            if q_w.is_none() && tc.polar(&pe[a], &pe[b]) != EtaleCubic::tau(&tc.polar(&e[a], &e[b])) {
                q_w = Some(format!("basis pair ({a}, {b})"));
            }
            if beta_w.is_some() && q_w.is_some() {
                break 'pairs;
            }
        }
    }
    report.record("map commutes with beta", beta_w);
    report.record("b_Q(phi x, phi y) = tau(b_Q(x, y))", q_w);
    let semi = (0..n).find(|&a| {
        phi.mul_vec(&tc.l_action(&xi(), &e[a])) != tc.l_action(&EtaleCubic::tau(&xi()), &pe[a])
    });
    report.record("map is tau-semilinear", semi.map(|a| format!("basis vector {a}")));
    let moved = source
        .components()
        .iter()
        .find(|(g, s)| s.image(&phi).ok().as_ref() != target.component(g))
        .map(|(g, _)| format!("component of degree {g}"));
    report.record("map carries components degreewise", moved);
    Ok(HSquareWitness { map: phi, source, target, report })
}

/// The items of the classification of Type III gradings on real twisted
/// compositions of rank 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeIIIItem {
    #[serde(rename = "1.a")]
    A1,
    #[serde(rename = "1.b")]
    B1,
    #[serde(rename = "2.a")]
    A2,
    #[serde(rename = "2.b")]
    B2,
    #[serde(rename = "2.c")]
    C2,
    #[serde(rename = "4.a")]
    A4,
    #[serde(rename = "4.b")]
    B4,
    #[serde(rename = "4.c")]
    C4,
    #[serde(rename = "8.a")]
    A8,
    #[serde(rename = "8.b")]
    B8,
    #[serde(rename = "8.c")]
    C8,
}

impl TypeIIIItem {
    pub const ALL: [TypeIIIItem; 11] = [
        TypeIIIItem::A1,
        TypeIIIItem::B1,
        TypeIIIItem::A2,
        TypeIIIItem::B2,
        TypeIIIItem::C2,
        TypeIIIItem::A4,
        TypeIIIItem::B4,
        TypeIIIItem::C4,
        TypeIIIItem::A8,
        TypeIIIItem::B8,
        TypeIIIItem::C8,
    ];

    /// dim V_e.
    pub fn numeral(self) -> usize {
        use TypeIIIItem::*;
        match self {
            A1 | B1 => 1,
            A2 | B2 | C2 => 2,
            A4 | B4 | C4 => 4,
            A8 | B8 | C8 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        use TypeIIIItem::*;
        match self {
            A1 => "1.a",
            B1 => "1.b",
            A2 => "2.a",
            B2 => "2.b",
            C2 => "2.c",
            A4 => "4.a",
            B4 => "4.b",
            C4 => "4.c",
            A8 => "8.a",
            B8 => "8.b",
            C8 => "8.c",
        }
    }
}

impl fmt::Display for TypeIIIItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TypeIIIItem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TypeIIIItem::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown Type III item {s:?}")))
    }
}

/// A Cayley grading Γ(G, Γ_C, h), recorded by h and the label of Γ_C.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeIIILabel {
    pub h: GroupElem,
    pub cayley: CayleyLabel,
}

/// Shape of a Cartan triple after the best shift by a multiple of h.
enum CartanShape {
    Trivial,
    Okubo,
    Split { g: GroupElem },
    Generic,
}

impl TypeIIILabel {
    pub fn group(&self) -> &FinAbGroup {
        &self.cayley.group
    }

    fn cartan_shape(&self, gamma: &[GroupElem; 3]) -> Result<CartanShape> {
        let group = self.group();
        let hg = Subgroup::generated(group, std::slice::from_ref(&self.h))?;
        for j in 0..3 {
            let shift = group.mul(j, &self.h)?;
            let g: Vec<GroupElem> = gamma.iter().map(|x| group.add(x, &shift)).collect::<Result<_>>()?;
            let Some(p) = g.iter().position(|x| group.is_identity(x)) else { continue };
            let others: Vec<&GroupElem> = (0..3).filter(|&i| i != p).map(|i| &g[i]).collect();
            return Ok(if group.is_identity(others[0]) {
                CartanShape::Trivial
            } else if hg.contains(others[0]) {
                CartanShape::Okubo
            } else {
                CartanShape::Split { g: others[0].clone() }
            });
        }
        Ok(CartanShape::Generic)
    }

    /// The item this grading belongs to; `None` when h does not have order 3.
    pub fn item(&self) -> Option<TypeIIIItem> {
        use TypeIIIItem::*;
        require_order_3(self.group(), &self.h).ok()?;
        let split = self.cayley.algebra == CayleyKind::Os;
        Some(match &self.cayley.normalized().variant {
            CayleyVariant::Full { .. } => if split { B1 } else { A1 },
            CayleyVariant::Quadratic { .. } => if split { B2 } else { A2 },
            CayleyVariant::Quaternion { .. } => if split { B4 } else { A4 },
            CayleyVariant::Trivial => if split { B8 } else { A8 },
            CayleyVariant::Cartan { gamma } => match self.cartan_shape(gamma).ok()? {
                CartanShape::Trivial => B8,
                CartanShape::Okubo => C8,
                CartanShape::Split { .. } => C4,
                CartanShape::Generic => C2,
            },
        })
    }

    /// Builds C, Γ_C, TC(C̄, L) and Γ(G, Γ_C, h).
    pub fn realize(&self) -> Result<(TwistedComposition, Grading<Rational>)> {
        let (c, gamma_c) = self.cayley.realize::<Rational>()?;
        let tc = tc_hurwitz(&c)?;
        let g = cayley_grading(&tc, &gamma_c, &self.h)?;
        Ok((tc, g))
    }
}

/// Whether two Type III Cayley gradings over the same group are isomorphic,
/// decided from their labels. Valid over real closed fields.
pub fn type_iii_iso_decision(a: &TypeIIILabel, b: &TypeIIILabel) -> Result<bool> {
    if a.group() != b.group() {
        return Err(Error::Precondition("labels are over different groups".into()));
    }
    let group = a.group();
    let (ia, ib) = match (a.item(), b.item()) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(Error::Precondition("h must have order 3".into())),
    };
    if ia != ib {
        return Ok(false);
    }
    if !Subgroup::generated(group, std::slice::from_ref(&a.h))?.contains(&b.h) {
        return Ok(false);
    }
    let (ca, cb) = (a.cayley.normalized(), b.cayley.normalized());
    use CayleyVariant::*;
    Ok(match (&ca.variant, &cb.variant) {
        (Full { t, mu }, Full { t: s, mu: nu }) | (Quadratic { t, mu }, Quadratic { t: s, mu: nu }) => t == s && mu == nu,
        (Quaternion { t }, Quaternion { t: s }) => t == s,
        (Cartan { gamma: g }, Cartan { gamma: k }) => match ia {
            TypeIIIItem::C2 => crate::gradings::triples_equivalent(group, g, k, Some(&a.h))?,
            TypeIIIItem::C4 => match (a.cartan_shape(g)?, b.cartan_shape(k)?) {
                (CartanShape::Split { g: x }, CartanShape::Split { g: y }) => x == y || group.neg(&x)? == y,
                _ => false,
            },
            _ => true,
        },
        _ => true,
    })
}

/// One representative label per item, over the smallest group carrying it:
/// Z₂ᵏ × Z₃ for the Cayley–Dickson items, Z² × Z₃ or Z × Z₃ for the Cartan
/// ones, and Z₃ for the rest.
pub fn minimal_label(item: TypeIIIItem) -> Result<TypeIIILabel> {
    use TypeIIIItem::*;
    let cd = |rank: usize, kind: CayleyKind, signs: &[i8]| -> Result<TypeIIILabel> {
        let mut orders = vec![2; rank];
        orders.push(3);
        let p = FinAbGroup::product_of_cyclic(0, &orders)?;
        let group = p.group.clone();
        let gens: Vec<GroupElem> = p.gen_images[..rank].to_vec();
        let h = p.gen_images[rank].clone();
        let t = crate::gradings::elementary_2_subgroup(&group, &gens)?;
        let variant = match rank {
            0 => CayleyVariant::Trivial,
            1 => CayleyVariant::Quaternion { t },
            _ => {
                let mu = crate::gradings::SignMap::from_generators(&group, &gens, signs)?;
                if rank == 2 {
                    CayleyVariant::Quadratic { t, mu }
                } else {
                    CayleyVariant::Full { t, mu }
                }
            }
        };
        Ok(TypeIIILabel { h, cayley: CayleyLabel { group, algebra: kind, variant } })
    };
    let cartan = |free: usize, gamma: &dyn Fn(&[GroupElem], &FinAbGroup) -> Result<[GroupElem; 3]>| {
        let p = FinAbGroup::product_of_cyclic(free, &[3])?;
        let group = p.group.clone();
        let h = p.gen_images[free].clone();
        let gamma = gamma(&p.gen_images[..free], &group)?;
        Ok::<_, Error>(TypeIIILabel {
            h,
            cayley: CayleyLabel { group, algebra: CayleyKind::Os, variant: CayleyVariant::Cartan { gamma } },
        })
    };
    match item {
        A1 => cd(3, CayleyKind::O, &[1, 1, 1]),
        B1 => cd(3, CayleyKind::Os, &[1, 1, -1]),
        A2 => cd(2, CayleyKind::O, &[1, 1]),
        B2 => cd(2, CayleyKind::Os, &[1, -1]),
        A4 => cd(1, CayleyKind::O, &[]),
        B4 => cd(1, CayleyKind::Os, &[]),
        A8 => cd(0, CayleyKind::O, &[]),
        B8 => cd(0, CayleyKind::Os, &[]),
        C2 => cartan(2, &|g, group| {
            let third = group.neg(&group.add(&g[0], &g[1])?)?;
            Ok([g[0].clone(), g[1].clone(), third])
        }),
        C4 => cartan(1, &|g, group| Ok([group.identity(), g[0].clone(), group.neg(&g[0])?])),
        C8 => {
            let p = FinAbGroup::product_of_cyclic(0, &[3])?;
            let group = p.group.clone();
            let h = p.gen_images[0].clone();
            let gamma = [group.identity(), h.clone(), group.mul(2, &h)?];
            Ok(TypeIIILabel {
                h,
                cayley: CayleyLabel { group, algebra: CayleyKind::Os, variant: CayleyVariant::Cartan { gamma } },
            })
        }
    }
}

#[cfg(test)]
mod tests;
