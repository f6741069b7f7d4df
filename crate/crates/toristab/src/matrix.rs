//! The integer matrix behind a monomial map.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Int, Vec2};

/// A monomial map `φ(z, w) = (z^a w^b, z^c w^d)`, encoded by the matrix
/// `[[a, b], [c, d]]` acting on the lattice `N`. The determinant is nonzero
/// by construction, so every value of this type induces a dominant rational
/// self-map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    a: Int,
    b: Int,
    c: Int,
    d: Int,
}

impl MonomialMap {
    pub fn new(
        a: impl Into<Int>,
        b: impl Into<Int>,
        c: impl Into<Int>,
        d: impl Into<Int>,
    ) -> Result<Self> {
        let m = MonomialMap {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        if m.det().is_zero() {
            return Err(Error::ZeroDeterminant);
        }
        Ok(m)
    }

    /// Built from entries already known to have nonzero determinant.
    fn raw(a: Int, b: Int, c: Int, d: Int) -> Self {
        let m = MonomialMap { a, b, c, d };
        debug_assert!(!m.det().is_zero());
        m
    }

    pub fn identity() -> Self {
        MonomialMap::raw(Int::one(), Int::zero(), Int::zero(), Int::one())
    }

    pub fn entries(&self) -> [&Int; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn det(&self) -> Int {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> Int {
        &self.a + &self.d
    }

    /// `trace² − 4 det`, the discriminant of the characteristic polynomial.
    pub fn disc(&self) -> Int {
        let t = self.trace();
        &t * &t - 4 * self.det()
    }

    /// Topological degree `e = |det|`.
    pub fn topological_degree(&self) -> Int {
        self.det().abs()
    }

    /// Adjugate `[[d, -b], [-c, a]]`; satisfies `A · adj(A) = det(A) · I`.
    /// Up to the sign of the determinant this is the direction action of
    /// `A⁻¹`, which keeps all preimage tests in integer arithmetic.
    pub fn adjugate(&self) -> MonomialMap {
        MonomialMap::raw(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn transpose(&self) -> MonomialMap {
        MonomialMap::raw(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// True for `ρ·I`.
    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.a * &v.x + &self.b * &v.y,
            y: &self.c * &v.x + &self.d * &v.y,
        }
    }

    /// Matrix product `self · rhs`; realizes `φ_self ∘ φ_rhs = φ_{self·rhs}`.
    pub fn compose(&self, rhs: &MonomialMap) -> MonomialMap {
        MonomialMap::raw(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }

    /// Exact `n`-th power (unbounded integer entries).
    pub fn pow(&self, n: u32) -> MonomialMap {
        let mut acc = MonomialMap::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }
}

impl fmt::Debug for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Matrix product law for monomial maps (spec operation `compose`).
pub fn compose(a: &MonomialMap, b: &MonomialMap) -> MonomialMap {
    a.compose(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn m(a: i64, b: i64, c: i64, d: i64) -> MonomialMap {
        MonomialMap::new(a, b, c, d).unwrap()
    }

    #[test]
    fn rejects_zero_determinant() {
        assert_eq!(MonomialMap::new(1, 1, 2, 2).unwrap_err(), Error::ZeroDeterminant);
    }

    #[test]
    fn compose_matches_matrix_product() {
        let a = m(2, 1, 1, 1);
        assert_eq!(a.compose(&MonomialMap::identity()), a);
        assert_eq!(a.compose(&a), m(5, 3, 3, 2));
    }

    #[test]
    fn adjugate_inverts_up_to_determinant() {
        let a = m(2, 1, 1, 1);
        let prod = a.compose(&a.adjugate());
        assert_eq!(prod, MonomialMap::identity());
        let b = m(0, -8, 1, 4);
        let prod = b.compose(&b.adjugate());
        assert_eq!(prod.entries()[0], &b.det());
        assert!(prod.entries()[1].is_zero());
    }

    #[test]
    fn powers_are_exact() {
        let a = m(2, 1, 1, 1);
        assert_eq!(a.pow(0), MonomialMap::identity());
        assert_eq!(a.pow(2), m(5, 3, 3, 2));
        let a20 = a.pow(20);
        // Fibonacci entries: F(41), F(40), F(40), F(39).
        assert_eq!(a20.entries()[0].to_string(), "165580141");
    }
}
