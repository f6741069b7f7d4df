//! Complete two-dimensional fans over a rank-2 lattice.
//!
//! Only complete fans are representable: the rays are kept in
//! counterclockwise order and the two-dimensional cones are implicit
//! between consecutive rays, which rules out cone-list consistency bugs by
//! construction. Cone `i` is spanned by ray `i` and ray `i + 1 (mod n)`.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{angle_cmp, det, det_sign, same_dir, strictly_between, Int, Ray, Vec2};

/// A strictly convex two-dimensional cone, spanned by two rays in
/// counterclockwise order with `det(lo, hi) > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone2 {
    pub lo: Ray,
    pub hi: Ray,
}

impl Cone2 {
    pub fn new(lo: Ray, hi: Ray) -> Result<Cone2> {
        if det_sign(lo.vec(), hi.vec()) <= 0 {
            return Err(Error::InternalInvariant(format!(
                "cone ({lo}, {hi}) is not strictly convex and positively oriented"
            )));
        }
        Ok(Cone2 { lo, hi })
    }

    /// `|det(lo, hi)|`; the cone is regular (smooth) exactly when this is 1.
    pub fn det_abs(&self) -> Int {
        det(self.lo.vec(), self.hi.vec()).abs()
    }

    pub fn contains_strictly(&self, v: &Vec2) -> bool {
        strictly_between(self.lo.vec(), v, self.hi.vec())
    }
}

impl fmt::Display for Cone2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone({}, {})", self.lo, self.hi)
    }
}

/// Where a nonzero vector sits relative to a fan: on a ray, or in the open
/// interior of a two-dimensional cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    OnRay(usize),
    InteriorOfCone(usize),
}

/// A complete fan: at least three primitive rays, circularly ordered
/// counterclockwise, every consecutive pair positively oriented (so every
/// implicit cone is strict and the angular gaps are all below π, which
/// forces the support to be the whole plane).
#[derive(Clone, PartialEq, Eq)]
pub struct Fan {
    rays: Vec<Ray>,
}

impl Fan {
    /// Build a fan from arbitrary nonzero integer vectors: inputs are
    /// reduced to primitive rays, deduplicated, and sorted counterclockwise
    /// starting from the ray of smallest angle ≥ 0 against `(1, 0)`.
    pub fn new<I>(vectors: I) -> Result<Fan>
    where
        I: IntoIterator,
        I::Item: Into<Vec2>,
    {
        let mut rays = Vec::new();
        for v in vectors {
            rays.push(Ray::from_vector(&v.into())?);
        }
        Fan::from_rays(rays)
    }

    pub fn from_rays(mut rays: Vec<Ray>) -> Result<Fan> {
        rays.sort_by(|a, b| angle_cmp(a.vec(), b.vec()));
        rays.dedup();
        if rays.len() < 3 {
            return Err(Error::TooFewRays(rays.len()));
        }
        let fan = Fan { rays };
        for i in 0..fan.rays.len() {
            let c = det_sign(fan.rays[i].vec(), fan.rays[(i + 1) % fan.rays.len()].vec());
            if c <= 0 {
                return Err(Error::NotComplete);
            }
        }
        Ok(fan)
    }

    /// The fan of ℙ²: rays `(1,0), (0,1), (-1,-1)`.
    pub fn p2() -> Fan {
        Fan::new([(1, 0), (0, 1), (-1, -1)]).expect("static fan")
    }

    /// The fan of ℙ¹×ℙ¹: rays `±(1,0), ±(0,1)`.
    pub fn p1xp1() -> Fan {
        Fan::new([(1, 0), (0, 1), (-1, 0), (0, -1)]).expect("static fan")
    }

    /// The fan of the Hirzebruch surface `F_a`: rays
    /// `(1,0), (0,1), (-1,a), (0,-1)`.
    pub fn hirzebruch(a: u32) -> Fan {
        Fan::new([(1, 0), (0, 1), (-1, a as i64), (0, -1)]).expect("static fan")
    }

    pub fn ray_count(&self) -> usize {
        self.rays.len()
    }

    /// Number of two-dimensional cones; equals the ray count.
    pub fn cone_count(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &Ray {
        &self.rays[i]
    }

    pub fn cone(&self, i: usize) -> Cone2 {
        let n = self.rays.len();
        Cone2 {
            lo: self.rays[i % n].clone(),
            hi: self.rays[(i + 1) % n].clone(),
        }
    }

    pub fn index_of(&self, ray: &Ray) -> Option<usize> {
        self.rays
            .binary_search_by(|r| angle_cmp(r.vec(), ray.vec()))
            .ok()
    }

    pub fn contains_ray(&self, ray: &Ray) -> bool {
        self.index_of(ray).is_some()
    }

    /// True when the ray set is closed under negation.
    pub fn is_symmetric(&self) -> bool {
        self.rays.iter().all(|r| self.contains_ray(&r.neg()))
    }

    /// Locate a nonzero vector by exact determinant sign tests: either a
    /// positive multiple of some ray, or interior to the unique cone whose
    /// open interior contains it.
    pub fn locate(&self, v: &Vec2) -> Result<Location> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let n = self.rays.len();
        for (i, r) in self.rays.iter().enumerate() {
            if same_dir(v, r.vec()) {
                return Ok(Location::OnRay(i));
            }
        }
        for i in 0..n {
            if strictly_between(self.rays[i].vec(), v, self.rays[(i + 1) % n].vec()) {
                return Ok(Location::InteriorOfCone(i));
            }
        }
        unreachable!("complete fan covers the plane")
    }

    /// Star subdivision of cone `i`: insert the primitive vector of
    /// `lo + hi`, realizing the blow-up of the corresponding fixed point.
    /// The support is unchanged.
    pub fn star_subdivide(&self, i: usize) -> Fan {
        let c = self.cone(i);
        let m = Ray::from_vector(&c.lo.vec().add(c.hi.vec())).expect("sum of cone rays");
        self.with_rays([m])
    }

    /// Close the ray set under negation, allowing reasoning in terms of
    /// lines of rational slope.
    pub fn symmetrize(&self) -> Fan {
        let negs: Vec<Ray> = self.rays.iter().map(Ray::neg).collect();
        self.with_rays(negs)
    }

    /// Per-cone unimodularity report: `(cone index, |det(lo, hi)|)`. The
    /// fan is regular exactly when every entry is 1.
    pub fn is_regular(&self) -> Vec<(usize, Int)> {
        (0..self.cone_count()).map(|i| (i, self.cone(i).det_abs())).collect()
    }

    pub fn is_regular_all(&self) -> bool {
        self.is_regular().iter().all(|(_, d)| d.is_one())
    }

    /// Cones with `|det| > 1`.
    pub fn singular_cones(&self) -> Vec<(usize, Int)> {
        self.is_regular().into_iter().filter(|(_, d)| !d.is_one()).collect()
    }

    /// A new fan with extra rays inserted (already-present rays are merged).
    pub fn with_rays<I: IntoIterator<Item = Ray>>(&self, extra: I) -> Fan {
        let mut rays = self.rays.clone();
        rays.extend(extra);
        Fan::from_rays(rays).expect("refinement of a complete fan stays complete")
    }

    /// Insert the line `ℝ·v`: both rays `±v`.
    pub fn with_line(&self, v: &Ray) -> Fan {
        self.with_rays([v.clone(), v.neg()])
    }

    /// True when the line spanned by `v` is in the fan.
    pub fn contains_line(&self, v: &Ray) -> bool {
        self.contains_ray(v) || self.contains_ray(&v.neg())
    }

    /// Rewrite every ray in the coordinates of the finite-index sublattice
    /// `N' = ℤb₁ + ℤb₂`: the smallest positive multiple of the ray
    /// direction lying in `N'` is expressed in the basis and reduced to a
    /// primitive vector. Returns the reindexed fan and the covering degree
    /// `[N : N'] = |det B|`.
    pub fn reindex_sublattice(&self, basis: &SublatticeBasis) -> (Fan, Int) {
        let degree = basis.index();
        let rays: Vec<Ray> = self
            .rays
            .iter()
            .map(|r| basis.coordinates_of_smallest_multiple(r.vec()))
            .collect();
        let fan = Fan::from_rays(rays)
            .expect("linear change of coordinates preserves completeness");
        (fan, degree)
    }
}

impl fmt::Debug for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fan[")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A basis of a finite-index sublattice `N₁ ⊂ N`; the inclusion induces a
/// ramified cover of toric surfaces of degree `[N : N₁] = |det(b₁, b₂)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeBasis {
    pub b1: Vec2,
    pub b2: Vec2,
}

impl SublatticeBasis {
    pub fn new(b1: Vec2, b2: Vec2) -> Result<SublatticeBasis> {
        if det(&b1, &b2).is_zero() {
            return Err(Error::InternalInvariant(
                "sublattice basis must be nondegenerate".into(),
            ));
        }
        Ok(SublatticeBasis { b1, b2 })
    }

    pub fn identity() -> SublatticeBasis {
        SublatticeBasis {
            b1: Vec2::new(1, 0),
            b2: Vec2::new(0, 1),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.b1 == Vec2::new(1, 0) && self.b2 == Vec2::new(0, 1)
    }

    pub fn det(&self) -> Int {
        det(&self.b1, &self.b2)
    }

    /// `[N : N'] = |det|`.
    pub fn index(&self) -> Int {
        self.det().abs()
    }

    /// `k·v` expressed in this basis for the smallest `k ≥ 1` with
    /// `k·v ∈ N'`, reduced to a primitive vector. Searches the divisors of
    /// the index directly.
    pub fn coordinates_of_smallest_multiple(&self, v: &Vec2) -> Ray {
        let d = self.det();
        // adj(M)·v over the column matrix M = [b1 b2].
        let u = Vec2 {
            x: &self.b2.y * &v.x - &self.b2.x * &v.y,
            y: &self.b1.x * &v.y - &self.b1.y * &v.x,
        };
        let index = d.abs();
        let mut k = Int::one();
        while k <= index {
            if (&index % &k).is_zero() {
                let nx = &k * &u.x;
                let ny = &k * &u.y;
                if (&nx % &d).is_zero() && (&ny % &d).is_zero() {
                    let coords = Vec2 {
                        x: nx / &d,
                        y: ny / &d,
                    };
                    return Ray::from_vector(&coords).expect("nonzero coordinates");
                }
            }
            k += 1;
        }
        unreachable!("index·v always lies in the sublattice")
    }
}

/// All finite-index sublattices of `ℤ²` of index at most `max_index`, one
/// Hermite-normal-form basis `((a, 0), (c, d))` with `0 ≤ c < a` per
/// sublattice, enumerated by ascending index. Complete and duplicate-free;
/// the count up to index `n` is `Σ_{k ≤ n} σ(k)`.
pub fn enumerate_sublattices(max_index: u64) -> impl Iterator<Item = SublatticeBasis> {
    let mut queue = VecDeque::new();
    for n in 1..=max_index {
        for a in 1..=n {
            if n % a != 0 {
                continue;
            }
            let d = n / a;
            for c in 0..a {
                queue.push_back(SublatticeBasis {
                    b1: Vec2::new(a as i64, 0),
                    b2: Vec2::new(c as i64, d as i64),
                });
            }
        }
    }
    queue.into_iter()
}
