//! Integer lattice vectors and exact planar orientation predicates.
//!
//! Everything downstream (fans, orbit traces, cone inclusions) reduces to
//! sign tests of 2x2 determinants over unbounded integers; no floating
//! point enters the kernel.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Unbounded integer. Matrix powers grow geometrically, so fixed-width
/// arithmetic would silently corrupt orbit traces.
pub type Int = num_bigint::BigInt;

/// A lattice vector in `N ≅ ℤ²`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub x: Int,
    pub y: Int,
}

impl Vec2 {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Self {
        Vec2 {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn neg(&self) -> Vec2 {
        Vec2 {
            x: -&self.x,
            y: -&self.y,
        }
    }

    pub fn add(&self, other: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Vec2 {
    fn from((x, y): (i64, i64)) -> Self {
        Vec2::new(x, y)
    }
}

/// `det(a, b) = a.x b.y - a.y b.x`, the signed area spanned by `a`, `b`.
pub fn det(a: &Vec2, b: &Vec2) -> Int {
    &a.x * &b.y - &a.y * &b.x
}

/// Sign of [`det`] in `{-1, 0, 1}`.
pub fn det_sign(a: &Vec2, b: &Vec2) -> i32 {
    sign_of(&det(a, b))
}

pub(crate) fn sign_of(n: &Int) -> i32 {
    if n.is_zero() {
        0
    } else if n.is_positive() {
        1
    } else {
        -1
    }
}

/// A primitive lattice direction: `(x, y) ≠ (0, 0)` with `gcd(|x|, |y|) = 1`.
/// Rays are one-dimensional cones `ℝ₊·v` and correspond to toric curves.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ray(Vec2);

impl Ray {
    /// Reduce an arbitrary nonzero vector to the primitive vector spanning
    /// the same ray.
    pub fn from_vector(v: &Vec2) -> Result<Ray> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = v.x.gcd(&v.y);
        Ok(Ray(Vec2 {
            x: &v.x / &g,
            y: &v.y / &g,
        }))
    }

    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Result<Ray> {
        Ray::from_vector(&Vec2::new(x, y))
    }

    pub fn vec(&self) -> &Vec2 {
        &self.0
    }

    pub fn into_vec(self) -> Vec2 {
        self.0
    }

    pub fn neg(&self) -> Ray {
        Ray(self.0.neg())
    }

    /// Canonical representative of the line `ℝ·v`: the one with `y > 0`,
    /// or `x > 0` when `y = 0`.
    pub fn line_rep(&self) -> Ray {
        let upper = match sign_of(&self.0.y) {
            1 => true,
            -1 => false,
            _ => self.0.x.is_positive(),
        };
        if upper {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// True when `self` and `other` span the same line.
    pub fn same_line(&self, other: &Ray) -> bool {
        self == other || *self == other.neg()
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Quadrant index used by the exact angular order: 0 for angles in
/// `[0, π/2)`, 1 for `[π/2, π)`, 2 for `[π, 3π/2)`, 3 for `[3π/2, 2π)`.
pub fn quadrant(v: &Vec2) -> u8 {
    let sx = sign_of(&v.x);
    let sy = sign_of(&v.y);
    debug_assert!(sx != 0 || sy != 0);
    match (sx, sy) {
        (1, 0) | (1, 1) => 0,
        (0, 1) | (-1, 1) => 1,
        (-1, 0) | (-1, -1) => 2,
        _ => 3,
    }
}

/// Exact counterclockwise angular order starting at direction `(1, 0)`:
/// quadrant first, then the cross product inside a quadrant.
pub fn angle_cmp(a: &Vec2, b: &Vec2) -> Ordering {
    let (qa, qb) = (quadrant(a), quadrant(b));
    if qa != qb {
        return qa.cmp(&qb);
    }
    match det_sign(a, b) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

/// `x` lies strictly inside the open counterclockwise arc from `lo` to `hi`.
/// Valid only for arcs of width `< π` (then both determinant tests are
/// conclusive).
pub fn strictly_between(lo: &Vec2, x: &Vec2, hi: &Vec2) -> bool {
    det_sign(lo, x) > 0 && det_sign(x, hi) > 0
}

/// `x` lies in the closed counterclockwise arc from `lo` to `hi`
/// (arc width `< π`). "Closed" admits positive multiples of the endpoints.
pub fn within_closed(lo: &Vec2, x: &Vec2, hi: &Vec2) -> bool {
    same_dir(x, lo) || same_dir(x, hi) || strictly_between(lo, x, hi)
}

fn dot_sign(a: &Vec2, b: &Vec2) -> i32 {
    sign_of(&(&a.x * &b.x + &a.y * &b.y))
}

/// `a` and `b` span the same ray (positive multiples of one another).
pub fn same_dir(a: &Vec2, b: &Vec2) -> bool {
    det_sign(a, b) == 0 && dot_sign(a, b) > 0
}
