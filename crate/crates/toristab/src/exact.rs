//! Exact arithmetic substrate: unbounded rationals, real quadratic
//! irrationals with exact sign, spectral data of integer matrices, isolated
//! algebraic numbers, and Stern–Brocot direction search.
//!
//! Eigen-directions of an integer matrix live in a real quadratic field
//! `ℚ(√D)`; every comparison the stabilization pipeline makes against them
//! reduces to [`quad_sign`], which decides the sign of `a + b√D` by rational
//! case analysis (comparing `a²` with `b²D`), never by approximation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{det_sign, quadrant, sign_of, Int, Ray, Vec2};
use crate::matrix::MonomialMap;

/// Unbounded rational; `num_rational` keeps `gcd(num, den) = 1`, `den > 0`.
pub type Rat = num_rational::BigRational;

pub fn rat_int(n: impl Into<Int>) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat(num: impl Into<Int>, den: impl Into<Int>) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Floor square root test: `Some(s)` with `s² = n` when `n` is a perfect
/// square, `None` otherwise.
pub fn perfect_sqrt(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// QuadElem
// ---------------------------------------------------------------------------

/// An element `a + b·√d` of the real quadratic field `ℚ(√d)`, `d > 1` a
/// non-square integer.
///
/// `d` is stored as given, without squarefree reduction: all comparisons in
/// one pipeline share the discriminant of a single matrix, so normalization
/// across representations is never needed here.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: Rat,
    b: Rat,
    d: Int,
}

impl QuadElem {
    pub fn new(a: Rat, b: Rat, d: impl Into<Int>) -> Result<Self> {
        let d = d.into();
        if d <= Int::one() || perfect_sqrt(&d).is_some() {
            return Err(Error::InternalInvariant(format!(
                "quadratic field datum must be a non-square integer > 1, got {d}"
            )));
        }
        Ok(QuadElem { a, b, d })
    }

    /// A rational embedded in `ℚ(√d)`.
    pub fn from_rat(a: Rat, d: &Int) -> Self {
        QuadElem {
            a,
            b: Rat::zero(),
            d: d.clone(),
        }
    }

    /// `√d` itself.
    pub fn sqrt_d(d: &Int) -> Result<Self> {
        QuadElem::new(Rat::zero(), Rat::one(), d.clone())
    }

    pub fn parts(&self) -> (&Rat, &Rat, &Int) {
        (&self.a, &self.b, &self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign in `{-1, 0, 1}` by rational comparisons only: when the
    /// signs of `a` and `b` disagree, compare `a²` against `b²·d`. Equality
    /// of those squares is impossible for nonzero parts since `d` is not a
    /// square.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * rat_int(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => {
                debug_assert!(false, "a^2 = b^2 d with non-square d");
                0
            }
        }
    }

    pub fn abs(&self) -> QuadElem {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Field conjugate `a - b√d`.
    pub fn conj(&self) -> QuadElem {
        QuadElem {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// `a² - b²d`, the field norm; zero only for the zero element.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.b * &self.b * rat_int(self.d.clone())
    }

    pub fn inv(&self) -> QuadElem {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt {})", self.d);
        QuadElem {
            a: &self.a / &n,
            b: -&self.b / &n,
            d: self.d.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> QuadElem {
        let mut acc = QuadElem::from_rat(Rat::one(), &self.d);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Ordering within one field; panics when the field data differ.
    pub fn cmp_exact(&self, other: &QuadElem) -> Ordering {
        match (self - other).sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }

    fn assert_same_field(&self, other: &QuadElem) {
        assert_eq!(
            self.d, other.d,
            "QuadElem arithmetic across distinct field data"
        );
    }
}

pub(crate) fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact sign of `a + b√d` in `{-1, 0, +1}`.
pub fn quad_sign(x: &QuadElem) -> i32 {
    x.sign()
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl Add for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        QuadElem {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d.clone(),
        }
    }
}

impl Sub for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        QuadElem {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.d.clone(),
        }
    }
}

impl Mul for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        let d = rat_int(self.d.clone());
        QuadElem {
            a: &self.a * &rhs.a + &(&self.b * &rhs.b) * &d,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            d: self.d.clone(),
        }
    }
}

impl Div for &QuadElem {
    type Output = QuadElem;
    fn div(self, rhs: &QuadElem) -> QuadElem {
        self * &rhs.inv()
    }
}

// ---------------------------------------------------------------------------
// Spectral data
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenKind {
    RealDistinct,
    RealRepeated,
    Complex,
}

/// A real number that is either rational or a quadratic irrational.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactReal {
    Rational(Rat),
    Quadratic(QuadElem),
}

impl ExactReal {
    pub fn sign(&self) -> i32 {
        match self {
            ExactReal::Rational(r) => rat_sign(r),
            ExactReal::Quadratic(q) => q.sign(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactReal::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            ExactReal::Quadratic(q) => q.to_f64(),
        }
    }
}

/// An eigen-direction: an exact vector spanning an eigenline. Rational when
/// the discriminant is a perfect square (then reduced to a primitive lattice
/// vector), otherwise a pair of `ℚ(√disc)` coordinates normalized so that
/// one coordinate is 1.
#[derive(Clone, Debug, PartialEq)]
pub enum EigenVec {
    Rational(Vec2),
    Quadratic(QuadElem, QuadElem),
}

/// Exact eigen-data of a monomial map matrix.
#[derive(Clone, Debug)]
pub struct SpectralData {
    pub trace: Int,
    pub det: Int,
    /// `trace² - 4·det`.
    pub disc: Int,
    pub eigen_kind: EigenKind,
    /// Sign of `λ₁² - e` where `e = |det|`; always 0 or +1, and +1 exactly
    /// when `|ρ₁| > |ρ₂|`.
    pub rho1_sq_minus_e_sign: i32,
    /// `κ = ρ₂/ρ₁` for real spectra (`ρ₁` the max-modulus eigenvalue).
    pub kappa: Option<ExactReal>,
    /// `cos(2πθ) = (trace² - 2·det) / (2·det)` for complex spectra.
    pub cos_two_pi_theta: Option<Rat>,
    /// `[w₁ (dominant), w₂]` for `RealDistinct`.
    pub eigen_dirs: Option<[EigenVec; 2]>,
}

/// Exact spectral decomposition. Total on `MonomialMap` since the nonzero
/// determinant is enforced at construction.
pub fn eigen_decompose(m: &MonomialMap) -> SpectralData {
    let trace = m.trace();
    let det = m.det();
    let disc = m.disc();
    let [a, b, c, d] = m.entries().map(Clone::clone);

    let eigen_kind = match sign_of(&disc) {
        -1 => EigenKind::Complex,
        0 => EigenKind::RealRepeated,
        _ => EigenKind::RealDistinct,
    };

    let rho1_sq_minus_e_sign =
        if eigen_kind == EigenKind::RealDistinct && !trace.is_zero() { 1 } else { 0 };

    let cos_two_pi_theta = (eigen_kind == EigenKind::Complex).then(|| {
        let t2 = &trace * &trace;
        Rat::new(t2 - 2 * &det, 2 * &det)
    });

    let mut kappa = None;
    let mut eigen_dirs = None;

    match eigen_kind {
        EigenKind::Complex => {}
        EigenKind::RealRepeated => {
            kappa = Some(ExactReal::Rational(Rat::one()));
        }
        EigenKind::RealDistinct => {
            if trace.is_zero() {
                // Opposite pair rho, -rho: kappa = -1 whatever rho is.
                kappa = Some(ExactReal::Rational(-Rat::one()));
            }
            match perfect_sqrt(&disc) {
                Some(s) => {
                    // Rational (hence integer) eigenvalues.
                    let sigma: Int = if trace.is_negative() { -Int::one() } else { Int::one() };
                    let rho1 = (&trace + &sigma * &s) / 2;
                    let rho2 = (&trace - &sigma * &s) / 2;
                    if kappa.is_none() {
                        kappa = Some(ExactReal::Rational(Rat::new(rho2.clone(), rho1.clone())));
                    }
                    let dir = |rho: &Int| -> Vec2 {
                        let v = Vec2 {
                            x: b.clone(),
                            y: rho - &a,
                        };
                        let v = if v.is_zero() {
                            Vec2 {
                                x: rho - &d,
                                y: c.clone(),
                            }
                        } else {
                            v
                        };
                        Ray::from_vector(&v).expect("eigenvector of non-scalar matrix").into_vec()
                    };
                    eigen_dirs = Some([
                        EigenVec::Rational(dir(&rho1)),
                        EigenVec::Rational(dir(&rho2)),
                    ]);
                }
                None => {
                    // rho_{1,2} = (t ± σ√disc)/2 with σ = sign(t) picking the
                    // dominant one first.
                    let sigma = if trace.is_negative() { -Rat::one() } else { Rat::one() };
                    let half_t = rat(trace.clone(), 2);
                    let rho1 = QuadElem {
                        a: half_t.clone(),
                        b: &sigma / rat_int(2),
                        d: disc.clone(),
                    };
                    let rho2 = rho1.conj();
                    if kappa.is_none() {
                        // Rationalized: kappa = rho2² / det.
                        let rho2_sq = &rho2 * &rho2;
                        let det_q = QuadElem::from_rat(rat_int(det.clone()), &disc);
                        kappa = Some(ExactReal::Quadratic(&rho2_sq / &det_q));
                    }
                    // Non-square discriminant forces b ≠ 0 and c ≠ 0, so the
                    // eigenvector (1, (ρ - a)/b) is always available.
                    debug_assert!(!b.is_zero() && !c.is_zero());
                    let b_q = QuadElem::from_rat(rat_int(b.clone()), &disc);
                    let a_q = QuadElem::from_rat(rat_int(a.clone()), &disc);
                    let one = QuadElem::from_rat(Rat::one(), &disc);
                    let w = |rho: &QuadElem| {
                        EigenVec::Quadratic(one.clone(), &(rho - &a_q) / &b_q)
                    };
                    eigen_dirs = Some([w(&rho1), w(&rho2)]);
                }
            }
        }
    }

    SpectralData {
        trace,
        det,
        disc,
        eigen_kind,
        rho1_sq_minus_e_sign,
        kappa,
        cos_two_pi_theta,
        eigen_dirs,
    }
}

/// `cos(2πθ) = (tr² - 2 det)/(2 det)` for a complex-spectrum matrix, where
/// `ρ e^{±iπθ}` are the eigenvalues. Membership of the result in
/// `{0, ±1/2, ±1}` decides θ ∈ ℚ (Niven's theorem).
pub fn cos_two_pi_theta(m: &MonomialMap) -> Result<Rat> {
    let spec = eigen_decompose(m);
    spec.cos_two_pi_theta.ok_or(Error::NotComplexSpectrum)
}

// ---------------------------------------------------------------------------
// Algebraic numbers
// ---------------------------------------------------------------------------

/// Width bound for isolating intervals: 2⁻²⁰ resolves desk-scale
/// comparisons and the deg^{1/n} convergence test unambiguously.
fn interval_width_bound() -> Rat {
    Rat::new(Int::one(), Int::from(1u32 << 20))
}

/// A real algebraic number of degree at most two, as the max-modulus real
/// root of a monic integer polynomial together with an isolating interval.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicNumber {
    /// Ascending coefficients, monic: `[c0, 1]` or `[c0, c1, 1]`.
    min_poly: Vec<Int>,
    /// Open interval containing the selected root and no other root.
    interval: (Rat, Rat),
}

impl AlgebraicNumber {
    pub fn min_poly(&self) -> &[Int] {
        &self.min_poly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.interval.0, &self.interval.1)
    }

    pub fn approx(&self) -> f64 {
        let mid = (&self.interval.0 + &self.interval.1) / rat_int(2);
        mid.to_f64().unwrap_or(f64::NAN)
    }

    pub fn eval_at(&self, t: &Rat) -> Rat {
        eval_poly(&self.min_poly, t)
    }

    /// Exact membership test for a `ℚ(√d)` value: both a root of the
    /// minimal polynomial and inside the isolating interval.
    pub fn is_value(&self, x: &QuadElem) -> bool {
        let d = x.parts().2.clone();
        let mut acc = QuadElem::from_rat(Rat::zero(), &d);
        let mut power = QuadElem::from_rat(Rat::one(), &d);
        for coef in &self.min_poly {
            let term = &power * &QuadElem::from_rat(rat_int(coef.clone()), &d);
            acc = &acc + &term;
            power = &power * x;
        }
        if !acc.is_zero() {
            return false;
        }
        let lo = QuadElem::from_rat(self.interval.0.clone(), &d);
        let hi = QuadElem::from_rat(self.interval.1.clone(), &d);
        (x - &lo).sign() > 0 && (&hi - x).sign() > 0
    }

    /// Exact rational value (always an integer for monomial-map degrees:
    /// rational roots of a monic integer quadratic are integers).
    fn exact(value: Rat) -> AlgebraicNumber {
        assert!(value.denom().is_one());
        let eps = &interval_width_bound() / rat_int(2);
        AlgebraicNumber {
            min_poly: vec![-value.numer(), Int::one()],
            interval: (&value - &eps, &value + &eps),
        }
    }

    /// Dominant (max-modulus, here rightmost positive) root of the monic
    /// quadratic `t² + c1·t + c0`, assuming `p(lo) < 0` at the vertex-side
    /// start; isolates by bisection.
    fn dominant_quadratic_root(c0: Int, c1: Int) -> AlgebraicNumber {
        let poly = vec![c0.clone(), c1.clone(), Int::one()];
        let mut lo = rat(-&c1, 2); // vertex; p(vertex) < 0 when disc > 0
        let mut hi = rat_int(Int::one() + c1.abs() + c0.abs());
        debug_assert!(eval_poly(&poly, &lo).is_negative());
        debug_assert!(eval_poly(&poly, &hi).is_positive());
        let bound = interval_width_bound();
        while &hi - &lo > bound {
            let mid = (&lo + &hi) / rat_int(2);
            let v = eval_poly(&poly, &mid);
            debug_assert!(!v.is_zero(), "rational root of an irreducible quadratic");
            if v.is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        AlgebraicNumber {
            min_poly: poly,
            interval: (lo, hi),
        }
    }
}

pub(crate) fn eval_poly(poly: &[Int], t: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for coef in poly.iter().rev() {
        acc = acc * t + rat_int(coef.clone());
    }
    acc
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {:?} in ({}, {})", self.min_poly, self.interval.0, self.interval.1)
    }
}

/// First dynamical degree `λ₁ = max(|ρ₁|, |ρ₂|)`: the max-modulus root of
/// `t² - |tr|·t + det` for real spectra and `√det` for complex ones,
/// isolated to width ≤ 2⁻²⁰.
pub fn dynamical_degree(m: &MonomialMap) -> AlgebraicNumber {
    let trace = m.trace();
    let det = m.det();
    let disc = m.disc();
    if disc.is_negative() {
        // λ₁ = √det.
        match perfect_sqrt(&det) {
            Some(s) => AlgebraicNumber::exact(rat_int(s)),
            None => AlgebraicNumber::dominant_quadratic_root(-det, Int::zero()),
        }
    } else {
        match perfect_sqrt(&disc) {
            Some(s) => {
                // Integer eigenvalues; λ₁ = (|tr| + s)/2.
                AlgebraicNumber::exact(rat(trace.abs() + s, 2))
            }
            None => AlgebraicNumber::dominant_quadratic_root(det, -trace.abs()),
        }
    }
}

// ---------------------------------------------------------------------------
// Stern–Brocot direction search
// ---------------------------------------------------------------------------

/// A direction in the plane, either a lattice vector or an exact
/// quadratic-irrational vector (both coordinates in one field `ℚ(√d)`).
#[derive(Clone, Debug)]
pub enum Direction {
    Lattice(Vec2),
    Quad(QuadElem, QuadElem),
}

impl Direction {
    pub fn from_ray(r: &Ray) -> Direction {
        Direction::Lattice(r.vec().clone())
    }

    pub fn quad(x: QuadElem, y: QuadElem) -> Direction {
        assert_eq!(x.parts().2, y.parts().2);
        Direction::Quad(x, y)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Direction::Lattice(v) => v.is_zero(),
            Direction::Quad(x, y) => x.is_zero() && y.is_zero(),
        }
    }

    fn component_signs(&self) -> (i32, i32) {
        match self {
            Direction::Lattice(v) => (sign_of(&v.x), sign_of(&v.y)),
            Direction::Quad(x, y) => (x.sign(), y.sign()),
        }
    }

    /// Quadrant under the same classification as [`crate::lattice::quadrant`].
    fn quadrant(&self) -> u8 {
        match self {
            Direction::Lattice(v) => quadrant(v),
            Direction::Quad(..) => match self.component_signs() {
                (1, 0) | (1, 1) => 0,
                (0, 1) | (-1, 1) => 1,
                (-1, 0) | (-1, -1) => 2,
                _ => 3,
            },
        }
    }
}

/// Sign of the determinant of two directions; lattice vectors are lifted
/// into the quadratic field when mixed with quadratic directions.
pub fn direction_det_sign(a: &Direction, b: &Direction) -> i32 {
    match (a, b) {
        (Direction::Lattice(u), Direction::Lattice(v)) => det_sign(u, v),
        _ => {
            let field = |dir: &Direction| match dir {
                Direction::Quad(x, _) => Some(x.parts().2.clone()),
                Direction::Lattice(_) => None,
            };
            let d = field(a).or_else(|| field(b)).expect("one quadratic side");
            let lift = |dir: &Direction| -> (QuadElem, QuadElem) {
                match dir {
                    Direction::Lattice(v) => (
                        QuadElem::from_rat(rat_int(v.x.clone()), &d),
                        QuadElem::from_rat(rat_int(v.y.clone()), &d),
                    ),
                    Direction::Quad(x, y) => (x.clone(), y.clone()),
                }
            };
            let (ax, ay) = lift(a);
            let (bx, by) = lift(b);
            (&(&ax * &by) - &(&ay * &bx)).sign()
        }
    }
}

fn strictly_between_dirs(lo: &Direction, mid: &Vec2, hi: &Direction) -> bool {
    let m = Direction::Lattice(mid.clone());
    direction_det_sign(lo, &m) > 0 && direction_det_sign(&m, hi) > 0
}

/// Deterministic mediant descent: the primitive lattice ray strictly inside
/// the open counterclockwise arc from `lo` to `hi` (arc width < π) reached
/// first. Axis rays crossed by the arc are preferred, then the Stern–Brocot
/// bracket of `lo`'s quadrant is descended; the first qualifying mediant is
/// returned.
pub fn stern_brocot_between(lo: &Direction, hi: &Direction) -> Result<Ray> {
    if lo.is_zero() || hi.is_zero() {
        return Err(Error::ZeroVector);
    }
    if direction_det_sign(lo, hi) <= 0 {
        return Err(Error::EmptyInterval);
    }

    let axes = [
        Vec2::new(1, 0),
        Vec2::new(0, 1),
        Vec2::new(-1, 0),
        Vec2::new(0, -1),
    ];
    let q = lo.quadrant() as usize;
    for j in 1..=4 {
        let r = &axes[(q + j) % 4];
        if strictly_between_dirs(lo, r, hi) {
            return Ray::from_vector(r);
        }
    }

    // The arc lies within the closed quadrant of `lo`; descend from its
    // unimodular axis bracket. Mediants of a unimodular bracket stay
    // primitive.
    let mut p = axes[q].clone();
    let mut qv = axes[(q + 1) % 4].clone();
    for _ in 0..200_000 {
        let m = p.add(&qv);
        if strictly_between_dirs(lo, &m, hi) {
            return Ray::from_vector(&m);
        }
        if direction_det_sign(lo, &Direction::Lattice(m.clone())) <= 0 {
            p = m;
        } else {
            qv = m;
        }
    }
    Err(Error::InternalInvariant(
        "stern-brocot descent did not converge".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::MonomialMap;

    fn m(a: i64, b: i64, c: i64, d: i64) -> MonomialMap {
        MonomialMap::new(a, b, c, d).unwrap()
    }

    fn qe(a: (i64, i64), b: (i64, i64), d: i64) -> QuadElem {
        QuadElem::new(rat(a.0, a.1), rat(b.0, b.1), d).unwrap()
    }

    #[test]
    fn quad_sign_examples() {
        assert_eq!(quad_sign(&qe((0, 1), (0, 1), 2)), 0);
        assert_eq!(quad_sign(&qe((1, 1), (-1, 1), 2)), -1); // 1 - sqrt 2 < 0
        assert_eq!(quad_sign(&qe((3, 1), (-2, 1), 2)), 1); // 9 > 8
    }

    #[test]
    fn quad_field_ops() {
        let x = qe((1, 2), (1, 2), 5); // golden ratio (1+sqrt5)/2
        let y = &x * &x; // x^2 = x + 1
        let expect = &x + &QuadElem::from_rat(Rat::one(), &Int::from(5));
        assert_eq!(y, expect);
        let inv = x.inv();
        assert!((&x * &inv - &QuadElem::from_rat(Rat::one(), &Int::from(5))).is_zero());
        // 1/x = x - 1 for the golden ratio.
        assert_eq!(inv, qe((-1, 2), (1, 2), 5));
    }

    #[test]
    fn rejects_square_field_datum() {
        assert!(QuadElem::new(Rat::one(), Rat::one(), 4).is_err());
        assert!(QuadElem::new(Rat::one(), Rat::one(), 1).is_err());
    }

    #[test]
    fn quad_sign_agrees_with_floats_away_from_zero() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let ds = [2i64, 3, 5, 7, 10, 13];
        for _ in 0..10_000 {
            let d = ds[rng.gen_range(0..ds.len())];
            let x = qe(
                (rng.gen_range(-50..=50), rng.gen_range(1..=20)),
                (rng.gen_range(-50..=50), rng.gen_range(1..=20)),
                d,
            );
            let f = x.to_f64();
            if f.abs() > 1e-6 {
                assert_eq!(quad_sign(&x), if f > 0.0 { 1 } else { -1 }, "{x:?}");
            }
        }
    }

    #[test]
    fn quad_order_is_total_and_transitive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..2000 {
            let mut sample = || {
                qe(
                    (rng.gen_range(-6..=6), rng.gen_range(1..=4)),
                    (rng.gen_range(-6..=6), rng.gen_range(1..=4)),
                    5,
                )
            };
            let (x, y, z) = (sample(), sample(), sample());
            // Antisymmetry.
            assert_eq!(x.cmp_exact(&y), y.cmp_exact(&x).reverse());
            // Transitivity for <=.
            if x.cmp_exact(&y) != Ordering::Greater && y.cmp_exact(&z) != Ordering::Greater {
                assert_ne!(x.cmp_exact(&z), Ordering::Greater);
            }
        }
    }

    #[test]
    fn eigen_decompose_examples() {
        let s = eigen_decompose(&m(3, 0, 0, 3));
        assert_eq!(s.trace, Int::from(6));
        assert_eq!(s.det, Int::from(9));
        assert!(s.disc.is_zero());
        assert_eq!(s.eigen_kind, EigenKind::RealRepeated);
        assert_eq!(s.rho1_sq_minus_e_sign, 0);

        let s = eigen_decompose(&m(2, 1, 1, 1));
        assert_eq!(s.disc, Int::from(5));
        assert_eq!(s.eigen_kind, EigenKind::RealDistinct);
        assert_eq!(s.rho1_sq_minus_e_sign, 1);
        // kappa = rho2^2/det = ((3 - sqrt5)/2)^2 = (7 - 3 sqrt5)/2.
        match s.kappa.unwrap() {
            ExactReal::Quadratic(k) => assert_eq!(k, qe((7, 2), (-3, 2), 5)),
            other => panic!("expected quadratic kappa, got {other:?}"),
        }
        // Dominant eigen-direction (1, (rho1 - 2)) with rho1 = (3+sqrt5)/2.
        match &s.eigen_dirs.unwrap()[0] {
            EigenVec::Quadratic(x, y) => {
                assert!(x.parts().0.is_one() && x.parts().1.is_zero());
                assert_eq!(*y, qe((-1, 2), (1, 2), 5));
            }
            other => panic!("expected quadratic eigenvector, got {other:?}"),
        }

        let s = eigen_decompose(&m(1, 4, -1, 0));
        assert_eq!(s.trace, Int::one());
        assert_eq!(s.disc, Int::from(-15));
        assert_eq!(s.eigen_kind, EigenKind::Complex);
    }

    #[test]
    fn eigen_decompose_rational_directions() {
        // det -2, trace 1, disc 9: integer eigenvalues 2 and -1.
        let s = eigen_decompose(&m(0, 1, 2, 1));
        assert_eq!(s.eigen_kind, EigenKind::RealDistinct);
        assert_eq!(s.kappa, Some(ExactReal::Rational(rat(-1, 2))));
        let dirs = s.eigen_dirs.unwrap();
        assert_eq!(dirs[0], EigenVec::Rational(Vec2::new(1, 2)));
        assert_eq!(dirs[1], EigenVec::Rational(Vec2::new(1, -1)));
    }

    #[test]
    fn cayley_hamilton_residual_vanishes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 100 {
            let e: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-9..=9));
            let Ok(a) = MonomialMap::new(e[0], e[1], e[2], e[3]) else {
                continue;
            };
            checked += 1;
            let a2 = a.compose(&a);
            let t = a.trace();
            let det = a.det();
            // A² - tr·A + det·I = 0, entrywise.
            let res: Vec<Int> = a2
                .entries()
                .iter()
                .zip(a.entries())
                .enumerate()
                .map(|(i, (x, y))| {
                    let id: Int = if i == 0 || i == 3 { Int::one() } else { Int::zero() };
                    *x - &t * y + &det * id
                })
                .collect();
            assert!(res.iter().all(Zero::is_zero), "{a:?}");
        }
    }

    #[test]
    fn cos_two_pi_theta_examples() {
        assert_eq!(cos_two_pi_theta(&m(0, -1, 1, 0)).unwrap(), rat(-1, 1));
        assert_eq!(cos_two_pi_theta(&m(0, -8, 1, 4)).unwrap(), rat(0, 1));
        assert_eq!(cos_two_pi_theta(&m(1, 4, -1, 0)).unwrap(), rat(-7, 8));
        assert_eq!(
            cos_two_pi_theta(&m(2, 1, 1, 1)).unwrap_err(),
            Error::NotComplexSpectrum
        );
    }

    #[test]
    fn dynamical_degree_examples() {
        let one = dynamical_degree(&MonomialMap::identity());
        assert_eq!(one.min_poly(), &[-Int::one(), Int::one()]);

        let golden = dynamical_degree(&m(2, 1, 1, 1));
        assert_eq!(golden.min_poly(), &[Int::one(), Int::from(-3), Int::one()]);
        let (lo, hi) = golden.interval();
        assert!(lo > &rat(261, 100) && hi < &rat(262, 100));
        assert!(&(hi - lo) <= &interval_width_bound());
        // (3+sqrt5)/2 is the represented value, exactly.
        assert!(golden.is_value(&qe((3, 2), (1, 2), 5)));

        let sqrt8 = dynamical_degree(&m(0, -8, 1, 4));
        assert_eq!(sqrt8.min_poly(), &[Int::from(-8), Int::zero(), Int::one()]);
        let (lo, hi) = sqrt8.interval();
        assert!(lo > &rat(282, 100) && hi < &rat(283, 100));
        assert!(sqrt8.is_value(&qe((0, 1), (1, 1), 8)));
    }

    #[test]
    fn dynamical_degree_of_powers_matches_power_of_degree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(19);
        let mut checked = 0;
        while checked < 50 {
            let e: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-5..=5));
            let Ok(a) = MonomialMap::new(e[0], e[1], e[2], e[3]) else {
                continue;
            };
            checked += 1;
            // lambda1(A) as an exact field element.
            let disc = a.disc();
            let det = a.det();
            let tr_abs = a.trace().abs();
            let (mu, field): (QuadElem, Int) = if disc.is_negative() {
                match perfect_sqrt(&det) {
                    Some(s) => (QuadElem::from_rat(rat_int(s), &Int::from(2)), Int::from(2)),
                    None => (QuadElem::sqrt_d(&det).unwrap(), det.clone()),
                }
            } else {
                match perfect_sqrt(&disc) {
                    Some(s) => (
                        QuadElem::from_rat(rat(&tr_abs + s, 2), &Int::from(2)),
                        Int::from(2),
                    ),
                    None => (
                        QuadElem::new(rat(tr_abs.clone(), 2), rat(1, 2), disc.clone()).unwrap(),
                        disc.clone(),
                    ),
                }
            };
            let _ = field;
            for k in 1..=5u32 {
                let lam_k = dynamical_degree(&a.pow(k));
                assert!(
                    lam_k.is_value(&mu.pow(k)),
                    "lambda1(A^{k}) != lambda1(A)^{k} for {a:?}"
                );
            }
        }
    }

    #[test]
    fn stern_brocot_examples() {
        let lat = |x: i64, y: i64| Direction::Lattice(Vec2::new(x, y));
        assert_eq!(
            stern_brocot_between(&lat(1, 0), &lat(0, 1)).unwrap(),
            Ray::new(1, 1).unwrap()
        );
        assert_eq!(
            stern_brocot_between(&lat(1, 0), &lat(1, 1)).unwrap(),
            Ray::new(2, 1).unwrap()
        );
        assert_eq!(
            stern_brocot_between(&lat(1, 0), &lat(1, 0)).unwrap_err(),
            Error::EmptyInterval
        );
        // Wide arcs fall back to an axis ray.
        assert_eq!(
            stern_brocot_between(&lat(1, 1), &lat(-1, 1)).unwrap(),
            Ray::new(0, 1).unwrap()
        );
    }

    #[test]
    fn stern_brocot_against_golden_direction() {
        // Bounds: the dominant eigen-direction (1, (sqrt5 - 1)/2) of
        // [[2,1],[1,1]] (angle ~31.7°) up to the lattice ray (1,1) (45°).
        let five = Int::from(5);
        let golden = Direction::quad(
            QuadElem::from_rat(Rat::one(), &five),
            qe((-1, 2), (1, 2), 5),
        );
        let hi = Direction::Lattice(Vec2::new(1, 1));
        let found = stern_brocot_between(&golden, &hi).unwrap();
        // (3,2) is the first mediant inside; it is a Fibonacci convergent.
        assert_eq!(found, Ray::new(3, 2).unwrap());
        // Re-verify strict betweenness through quad_sign-based tests.
        let fd = Direction::from_ray(&found);
        assert_eq!(direction_det_sign(&golden, &fd), 1);
        assert_eq!(direction_det_sign(&fd, &hi), 1);
    }

    #[test]
    fn stern_brocot_outputs_are_primitive_and_between() {
        use rand::{Rng, SeedableRng};
        use num_integer::Integer;
        let mut rng = rand::rngs::StdRng::seed_from_u64(23);
        let mut checked = 0;
        while checked < 500 {
            let v = Vec2::new(rng.gen_range(-20i64..=20), rng.gen_range(-20i64..=20));
            let w = Vec2::new(rng.gen_range(-20i64..=20), rng.gen_range(-20i64..=20));
            if v.is_zero() || w.is_zero() || det_sign(&v, &w) <= 0 {
                continue;
            }
            checked += 1;
            let (lo, hi) = (Direction::Lattice(v.clone()), Direction::Lattice(w.clone()));
            let r = stern_brocot_between(&lo, &hi).unwrap();
            assert!(r.vec().x.gcd(&r.vec().y).is_one());
            assert!(strictly_between_dirs(&lo, r.vec(), &hi));
        }
    }
}
