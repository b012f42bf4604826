//! Homogeneous line and SO(3)-bundles over the flag manifold: weights,
//! slopes, the invariant model of H² and H⁴, and characteristic classes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extalg::{
    approx_eq, type_project, Blade, CoframeIndex, Form, Rational, RealField, Scalar,
    StructureTable, HORIZONTAL_MASK,
};
use crate::flaggeom::build_structure;
use crate::params::{StructureParams, PARAM_TOL};

/// An integral weight `β = kβ₁ + lβ₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub k: i64,
    pub l: i64,
}

impl Weight {
    pub const fn new(k: i64, l: i64) -> Self {
        Weight { k, l }
    }

    pub fn root(self) -> Option<Root> {
        Root::ALL.into_iter().find(|r| r.weight() == self)
    }

    pub fn is_root(self) -> bool {
        self.root().is_some()
    }

    /// The 1-form `kβ₁ + lβ₂`.
    pub fn form<S: Scalar>(self) -> Form<S> {
        Form::generator(CoframeIndex::Beta1).scale(&S::from_i64(self.k))
            + Form::generator(CoframeIndex::Beta2).scale(&S::from_i64(self.l))
    }

    /// `d(kβ₁ + lβ₂)`.
    pub fn curvature<S: Scalar>(self) -> Form<S> {
        self.form::<S>().d(StructureTable::standard())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k, self.l)
    }
}

/// The three roots `r₁ = (1,2)`, `r₂ = (−2,−1)`, `r₃ = (1,−1)`; root `r_i`
/// lives on the i-th root space `(η_i, θ_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Root {
    R1,
    R2,
    R3,
}

impl Root {
    pub const ALL: [Root; 3] = [Root::R1, Root::R2, Root::R3];

    pub fn weight(self) -> Weight {
        match self {
            Root::R1 => Weight::new(1, 2),
            Root::R2 => Weight::new(-2, -1),
            Root::R3 => Weight::new(1, -1),
        }
    }

    /// Index of the root space, 0 for `r₁`.
    pub fn slot(self) -> usize {
        self as usize
    }

    pub fn from_slot(slot: usize) -> Option<Root> {
        Root::ALL.get(slot).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Root::R1 => "r1",
            Root::R2 => "r2",
            Root::R3 => "r3",
        }
    }

    pub fn parse(s: &str) -> Option<Root> {
        Root::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl TryFrom<Weight> for Root {
    type Error = Error;
    fn try_from(w: Weight) -> Result<Root> {
        w.root().ok_or(Error::NotARoot(w.k, w.l))
    }
}

/// `μ = (2/3)(−l/(ε₁A₁²) + k/(ε₂A₂²) − (k−l)/(ε₃A₃²))`.
pub fn slope_closed_form<R: RealField>(w: Weight, params: &StructureParams<R>) -> R {
    let (a, e) = (params.a(), params.eps());
    let q = |i: usize| e[i].clone() * a[i].clone() * a[i].clone();
    let k = R::from_i64(w.k);
    let l = R::from_i64(w.l);
    let inner = -(l.clone() / q(0)) + k.clone() / q(1) - (k - l) / q(2);
    R::from_i64(2) / R::from_i64(3) * inner
}

/// `μ = −⟨dβ∧ω²⟩/⟨ω³⟩`, the ratio of top-degree coefficients.
pub fn slope_top_form_ratio<R: RealField>(w: Weight, params: &StructureParams<R>) -> R {
    let s = build_structure(params);
    let omega2 = s.omega_squared();
    let top = Blade::from_bits(HORIZONTAL_MASK);
    let num = w.curvature::<R>().wedge(&omega2).coeff(top);
    let den = omega2.wedge(&s.omega).coeff(top);
    -(num / den)
}

/// Slope of `L_β`, computed both ways; errors if they disagree beyond `tol`.
pub fn slope<R: RealField>(w: Weight, params: &StructureParams<R>, tol: f64) -> Result<R> {
    let a = slope_closed_form(w, params);
    let b = slope_top_form_ratio(w, params);
    if !approx_eq(&a, &b, tol) {
        return Err(Error::Inconsistent {
            check: "slope",
            detail: format!("closed form {} vs top-form ratio {}", a.to_f64(), b.to_f64()),
        });
    }
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineConnectionReport {
    pub is_pseudo_holomorphic: bool,
    pub is_degree0_phym: bool,
}

/// `kε₁A₁²(A₂²ε₂ − A₃²ε₃) = lε₂A₂²(A₁²ε₁ − A₃²ε₃)`.
pub fn degree0_condition<R: RealField>(w: Weight, params: &StructureParams<R>, tol: f64) -> bool {
    let (a, e) = (params.a(), params.eps());
    let q = |i: usize| e[i].clone() * a[i].clone() * a[i].clone();
    let lhs = R::from_i64(w.k) * q(0) * (q(1) - q(2));
    let rhs = R::from_i64(w.l) * q(1) * (q(0) - q(2));
    approx_eq(&lhs, &rhs, tol)
}

/// Properties of the canonical connection `β` on `L_β`.
pub fn phym_line_connection<R: RealField>(
    w: Weight,
    params: &StructureParams<R>,
    tol: f64,
) -> Result<LineConnectionReport> {
    let f = w.curvature::<R>().complexify::<R::Complex>();
    let is_pseudo_holomorphic = type_project(&f, 0, 2, params)?.is_zero_within(tol);
    let is_degree0_phym = degree0_condition(w, params, PARAM_TOL);
    // dβ∧ω² is a top form: its single coefficient is −μ·⟨ω³⟩
    let mu = slope_top_form_ratio(w, params);
    let clear = R::EXACT || mu.to_f64().abs() > 1e-6 || mu.to_f64().abs() < 1e-12;
    if clear && mu.is_zero_within(1e-12) != is_degree0_phym {
        return Err(Error::Inconsistent {
            check: "degree0-phym",
            detail: format!("closed form says {is_degree0_phym}, dβ∧ω² gives slope {}", mu.to_f64()),
        });
    }
    Ok(LineConnectionReport {
        is_pseudo_holomorphic,
        is_degree0_phym,
    })
}

/// Unit tag for H² coordinates.
pub const H2_UNIT: &str = "1/(2π)";
/// Unit tag for H⁴ coordinates.
pub const H4_UNIT: &str = "1/(4π²)";

/// A class `x[dβ₁] + y[dβ₂]` in H².
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologyClass2 {
    #[serde(serialize_with = "serialize_rational")]
    pub x: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub y: Rational,
}

/// Integers become JSON numbers, other rationals strings `"n/d"`.
pub fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q.is_integer().then(|| q.to_integer().to_i64()).flatten() {
        Some(n) => s.serialize_i64(n),
        None => s.serialize_str(&q.to_string()),
    }
}

impl CohomologyClass2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        CohomologyClass2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(Rational::from_i64(x), Rational::from_i64(y))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    /// Cup product, reduced in H⁴.
    pub fn cup(&self, other: &Self) -> CohomologyClass4 {
        h4_reduce([
            self.x.clone() * other.x.clone(),
            self.y.clone() * other.y.clone(),
            self.x.clone() * other.y.clone() + self.y.clone() * other.x.clone(),
        ])
    }

    /// Residues mod 2 of integral coordinates.
    pub fn mod2(&self) -> Option<(u8, u8)> {
        let r = |q: &Rational| -> Option<u8> {
            q.is_integer().then(|| {
                let n = q.to_integer();
                u8::from(!(n % BigInt::from(2)).is_zero())
            })
        };
        Some((r(&self.x)?, r(&self.y)?))
    }
}

/// A class `p[dβ₁]² + q[dβ₂]²` in H⁴.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologyClass4 {
    #[serde(serialize_with = "serialize_rational")]
    pub p: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub q: Rational,
}

impl CohomologyClass4 {
    pub fn from_ints(p: i64, q: i64) -> Self {
        CohomologyClass4 {
            p: Rational::from_i64(p),
            q: Rational::from_i64(q),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CohomologyClass4 {
            p: self.p.clone() * c.clone(),
            q: self.q.clone() * c.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CohomologyClass4 {
            p: self.p.clone() + other.p.clone(),
            q: self.q.clone() + other.q.clone(),
        }
    }
}

/// Reduces `p[dβ₁]² + q[dβ₂]² + m[dβ₁][dβ₂]` using
/// `[dβ₁][dβ₂] = −[dβ₁]² − [dβ₂]²`.
pub fn h4_reduce(raw: [Rational; 3]) -> CohomologyClass4 {
    let [p, q, m] = raw;
    CohomologyClass4 {
        p: p - m.clone(),
        q: q - m,
    }
}

/// An exact primitive `ψ` with `dψ = target`, among semibasic 3-forms whose
/// differential has no vertical part.
#[derive(Clone, Debug, PartialEq)]
pub struct H4Certificate {
    pub target: Form<Rational>,
    pub primitive: Form<Rational>,
    /// `dψ − target`; empty for a valid certificate.
    pub residual: Form<Rational>,
    /// Dimension of the solution space.
    pub free_parameters: usize,
}

/// `p·dβ₁∧dβ₁ + q·dβ₂∧dβ₂ + m·dβ₁∧dβ₂` as a 4-form.
pub fn h4_target(raw: [i64; 3]) -> Form<Rational> {
    let t = StructureTable::standard();
    let d1 = t.derivative(CoframeIndex::Beta1);
    let d2 = t.derivative(CoframeIndex::Beta2);
    d1.wedge(d1).scale(&Rational::from_i64(raw[0]))
        + d2.wedge(d2).scale(&Rational::from_i64(raw[1]))
        + d1.wedge(d2).scale(&Rational::from_i64(raw[2]))
}

fn blades_of_degree(k: usize, mask: u8) -> Vec<Blade> {
    let mut out: Vec<Blade> = (0u16..256)
        .map(|b| b as u8)
        .filter(|b| b & !mask == 0 && b.count_ones() as usize == k)
        .map(Blade::from_bits)
        .collect();
    out.sort();
    out
}

/// Solves `dψ = target` exactly over the 20-dimensional space of semibasic
/// 3-forms.
pub fn solve_h4_primitive(target: &Form<Rational>) -> Result<H4Certificate> {
    let table = StructureTable::standard();
    let unknowns = blades_of_degree(3, HORIZONTAL_MASK);
    let rows = blades_of_degree(4, 0xff);
    let images: Vec<Form<Rational>> = unknowns
        .iter()
        .map(|b| Form::monomial(*b, Rational::from_i64(1)).d(table))
        .collect();
    let matrix: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| images.iter().map(|f| f.coeff(*r)).collect())
        .collect();
    let rhs: Vec<Rational> = rows.iter().map(|r| target.coeff(*r)).collect();
    let (solution, rank) = solve_linear(matrix, rhs).ok_or_else(|| {
        Error::NoSolution("target is not d of an invariant semibasic 3-form".into())
    })?;
    let primitive = Form::from_terms(unknowns.iter().copied().zip(solution));
    let residual = primitive.d(table) - target.clone();
    if !residual.is_empty() {
        return Err(Error::Inconsistent {
            check: "h4-primitive",
            detail: "eliminated system does not reproduce the target".into(),
        });
    }
    Ok(H4Certificate {
        target: target.clone(),
        primitive,
        residual,
        free_parameters: unknowns.len() - rank,
    })
}

/// Certificate for `[dβ₁]² + [dβ₂]² + [dβ₁][dβ₂] = 0` in H⁴.
pub fn verify_h4_relation() -> Result<H4Certificate> {
    solve_h4_primitive(&h4_target([1, 1, 1]))
}

/// Exact Gauss-Jordan elimination; free variables set to zero. Returns the
/// solution and the rank, or `None` if the system is inconsistent.
fn solve_linear(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<(Vec<Rational>, usize)> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        b.swap(r, p);
        let inv = Rational::from_i64(1) / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        b[r] = b[r].clone() * inv;
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - v;
                }
                b[i] = b[i].clone() - b[r].clone() * f;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::from_i64(0); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some((x, pivots.len()))
}

/// Chern, Stiefel-Whitney and Pontryagin data of `E_β = L_β ⊕ ℂ` and `V_β`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CharClassReport {
    pub weight: Weight,
    pub c1: CohomologyClass2,
    pub c2: CohomologyClass4,
    pub w2: (u8, u8),
    pub p1: CohomologyClass4,
    pub h2_unit: &'static str,
    pub h4_unit: &'static str,
}

/// Chern-Weil for the split connection `β ⊗ diag(i, 0)`: the matrix
/// `(i/2π)F` has entries in H², `c₁` is its trace and `c₂` its determinant.
pub fn char_classes(w: Weight) -> CharClassReport {
    // (i/2π)·(i dβ) = −dβ/2π
    let m = [
        [CohomologyClass2::from_ints(-w.k, -w.l), CohomologyClass2::zero()],
        [CohomologyClass2::zero(), CohomologyClass2::zero()],
    ];
    let c1 = CohomologyClass2::new(
        m[0][0].x.clone() + m[1][1].x.clone(),
        m[0][0].y.clone() + m[1][1].y.clone(),
    );
    let c2 = m[0][0].cup(&m[1][1]).add(&m[0][1].cup(&m[1][0]).scale(&Rational::from_i64(-1)));
    let w2 = c1.mod2().expect("integral weight gives integral c1");
    let p1 = c1.cup(&c1).add(&c2.scale(&Rational::from_i64(-4)));
    CharClassReport {
        weight: w,
        c1,
        c2,
        w2,
        p1,
        h2_unit: H2_UNIT,
        h4_unit: H4_UNIT,
    }
}

/// Expansion of `d(kβ₁ + lβ₂)` in the complex frame:
/// `(il/(ε₁A₁²))α₁∧ᾱ₁ − (ik/(ε₂A₂²))α₂∧ᾱ₂ + (i(k−l)/(ε₃A₃²))α₃∧ᾱ₃`;
/// returns the three real factors multiplying `i α_s∧ᾱ_s`.
pub fn weight_curvature_alpha_coefficients<R: RealField>(w: Weight, params: &StructureParams<R>) -> [R; 3] {
    let (a, e) = (params.a(), params.eps());
    let q = |i: usize| e[i].clone() * a[i].clone() * a[i].clone();
    let k = R::from_i64(w.k);
    let l = R::from_i64(w.l);
    [l.clone() / q(0), -(k.clone()) / q(1), (k - l) / q(2)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extalg::frame::{complex_frame_blade, ComplexFrameForm};
    use crate::extalg::{ratio, ExactComplex};

    fn pq(a: [(i64, i64); 3], e: [(i64, i64); 3]) -> StructureParams<Rational> {
        StructureParams::new(a.map(|(n, d)| ratio(n, d)), e.map(|(n, d)| ratio(n, d))).unwrap()
    }

    #[test]
    fn roots() {
        assert_eq!(Weight::new(1, 2).root(), Some(Root::R1));
        assert_eq!(Weight::new(-2, -1).root(), Some(Root::R2));
        assert_eq!(Weight::new(1, -1).root(), Some(Root::R3));
        assert!(!Weight::new(-1, -2).is_root());
        assert!(Root::try_from(Weight::new(2, 2)).is_err());
    }

    #[test]
    fn slope_examples() {
        let unit = pq([(1, 1); 3], [(1, 1); 3]);
        assert_eq!(slope(Weight::new(1, 2), &unit, 0.0).unwrap(), Rational::from_i64(0));
        let ke = StructureParams::from_f64([1.0, 1.0, 2f64.sqrt()], [1.0, 1.0, -1.0]).unwrap();
        assert!((slope(Weight::new(1, 2), &ke, 1e-12).unwrap() + 1.0).abs() < 1e-12);
        let p = pq([(3, 2), (1, 3), (5, 4)], [(2, 3), (-1, 1), (7, 5)]);
        assert_eq!(slope(Weight::new(0, 0), &p, 0.0).unwrap(), Rational::from_i64(0));
        assert!(slope(Weight::new(4, -7), &p, 0.0).is_ok());
    }

    #[test]
    fn weight_curvature_expansion() {
        let p = pq([(3, 2), (1, 3), (5, 4)], [(2, 3), (-1, 1), (7, 5)]);
        let w = Weight::new(3, -5);
        let f = w.curvature::<ExactComplex>();
        let cf = ComplexFrameForm::from_coframe(&f, &p).unwrap();
        let coeffs = weight_curvature_alpha_coefficients(w, &p);
        for s in 0..3 {
            let got = cf.coeff(complex_frame_blade(&[s], &[s]));
            assert_eq!(got, ExactComplex::i() * ExactComplex::from_real(coeffs[s].clone()));
        }
        assert_eq!(cf.0.len(), 3);
    }

    #[test]
    fn line_connections() {
        let unit = StructureParams::from_f64([1.0; 3], [1.0; 3]).unwrap();
        for (k, l) in [(1, 0), (0, 1), (3, -2)] {
            let r = phym_line_connection(Weight::new(k, l), &unit, 1e-10).unwrap();
            assert!(r.is_pseudo_holomorphic && r.is_degree0_phym);
        }
        let p = StructureParams::from_f64([1.0; 3], [1.0, 1.0, -1.0]).unwrap();
        let r = phym_line_connection(Weight::new(1, 0), &p, 1e-10).unwrap();
        assert!(r.is_pseudo_holomorphic && !r.is_degree0_phym);
    }

    #[test]
    fn h4_reduction() {
        assert_eq!(h4_reduce([ratio(1, 1), ratio(0, 1), ratio(0, 1)]), CohomologyClass4::from_ints(1, 0));
        assert_eq!(h4_reduce([ratio(0, 1), ratio(0, 1), ratio(1, 1)]), CohomologyClass4::from_ints(-1, -1));
        assert_eq!(h4_reduce([ratio(1, 1), ratio(1, 1), ratio(1, 1)]), CohomologyClass4::from_ints(0, 0));
    }

    #[test]
    fn h4_certificate() {
        let cert = verify_h4_relation().unwrap();
        assert!(cert.residual.is_empty());
        assert!(cert.primitive.is_semibasic());
        assert!(solve_h4_primitive(&h4_target([1, 0, 0])).is_err());
        let doubled = solve_h4_primitive(&h4_target([2, 2, 2])).unwrap();
        assert_eq!(doubled.primitive, cert.primitive.scale(&ratio(2, 1)));
    }

    #[test]
    fn characteristic_tables() {
        let r1 = char_classes(Root::R1.weight());
        let r2 = char_classes(Root::R2.weight());
        let r3 = char_classes(Root::R3.weight());
        assert_eq!((r1.w2, r2.w2, r3.w2), ((1, 0), (0, 1), (1, 1)));
        assert_eq!(r1.p1, CohomologyClass4::from_ints(-3, 0));
        assert_eq!(r2.p1, CohomologyClass4::from_ints(0, -3));
        assert_eq!(r3.p1, CohomologyClass4::from_ints(3, 3));
        assert_eq!(r1.c1, CohomologyClass2::from_ints(-1, -2));
        let zero = char_classes(Weight::new(0, 0));
        assert_eq!(zero.p1, CohomologyClass4::from_ints(0, 0));
        assert_eq!(zero.w2, (0, 0));
    }
}
