//! Exact two-dimensional lattice and rational cone geometry.
//!
//! Everything here is generic over the integer type so the same code runs on
//! machine integers and on `BigInt`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::LatticeInt;

/// A point of Z^2. Also used as a monomial exponent and as a weight vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T: LatticeInt> Vec2<T> {
    pub fn new(x: T, y: T) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2 { x: T::zero(), y: T::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// det(self; other), positive when `other` is counterclockwise of `self`.
    pub fn det(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Self {
        Vec2 { x: -self.y.clone(), y: self.x.clone() }
    }

    pub fn content(&self) -> T {
        self.x.gcd(&self.y)
    }

    /// Divides out the gcd of the entries. The zero vector is returned as is.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.content();
        Vec2 { x: self.x.clone() / g.clone(), y: self.y.clone() / g }
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one()
    }

    pub fn scale(&self, k: T) -> Self {
        Vec2 { x: self.x.clone() * k.clone(), y: self.y.clone() * k }
    }

    pub fn coord_sum(&self) -> T {
        self.x.clone() + self.y.clone()
    }
}

impl<T: LatticeInt> Add for Vec2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Vec2 { x: self.x + o.x, y: self.y + o.y }
    }
}

impl<T: LatticeInt> Sub for Vec2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Vec2 { x: self.x - o.x, y: self.y - o.y }
    }
}

impl<'a, T: LatticeInt> Add<&'a Vec2<T>> for &'a Vec2<T> {
    type Output = Vec2<T>;
    fn add(self, o: &Vec2<T>) -> Vec2<T> {
        Vec2 { x: self.x.clone() + o.x.clone(), y: self.y.clone() + o.y.clone() }
    }
}

impl<'a, T: LatticeInt> Sub<&'a Vec2<T>> for &'a Vec2<T> {
    type Output = Vec2<T>;
    fn sub(self, o: &Vec2<T>) -> Vec2<T> {
        Vec2 { x: self.x.clone() - o.x.clone(), y: self.y.clone() - o.y.clone() }
    }
}

impl<T: LatticeInt> Neg for Vec2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Vec2 { x: -self.x, y: -self.y }
    }
}

impl<T: LatticeInt> Mul<T> for Vec2<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        self.scale(k)
    }
}

impl<T: fmt::Display> fmt::Display for Vec2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl<T: Serialize> Serialize for Vec2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.x)?;
        t.serialize_element(&self.y)?;
        t.end()
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Vec2<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<T> = Vec::deserialize(d)?;
        let mut it = v.into_iter();
        match (it.next(), it.next(), it.next()) {
            (Some(x), Some(y), None) => Ok(Vec2 { x, y }),
            _ => Err(de::Error::custom("expected a pair [x, y]")),
        }
    }
}

/// Angular order of two vectors lying in a common pointed cone:
/// `Less` when `b` is strictly counterclockwise of `a`.
pub fn angular_cmp<T: LatticeInt>(a: &Vec2<T>, b: &Vec2<T>) -> Ordering {
    T::zero().cmp(&a.det(b))
}

/// A strongly convex, full-dimensional rational cone in R^2.
///
/// Rays are primitive and ordered so that det(ray1; ray2) > 0, which makes
/// equality of cones syntactic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cone2<T> {
    ray1: Vec2<T>,
    ray2: Vec2<T>,
}

impl<T: LatticeInt> Cone2<T> {
    /// Cone spanned by two (not necessarily primitive) generators, in either order.
    pub fn new(a: Vec2<T>, b: Vec2<T>) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::DegenerateCone(format!("zero generator in {a}, {b}")));
        }
        let (a, b) = (a.primitive(), b.primitive());
        let d = a.det(&b);
        if d.is_zero() {
            return Err(Error::DegenerateCone(format!("{a} and {b} are parallel")));
        }
        if d.is_positive() {
            Ok(Cone2 { ray1: a, ray2: b })
        } else {
            Ok(Cone2 { ray1: b, ray2: a })
        }
    }

    pub fn ray1(&self) -> &Vec2<T> {
        &self.ray1
    }

    pub fn ray2(&self) -> &Vec2<T> {
        &self.ray2
    }

    pub fn rays(&self) -> [&Vec2<T>; 2] {
        [&self.ray1, &self.ray2]
    }

    /// Inward facet normals: the first vanishes on ray1, the second on ray2.
    pub fn inward_normals(&self) -> [Vec2<T>; 2] {
        [self.ray1.perp(), -self.ray2.perp()]
    }

    /// {u : u·v >= 0 for all v in the cone}.
    pub fn dual(&self) -> Self {
        let [n1, n2] = self.inward_normals();
        Cone2::new(n1, n2).expect("normals of a full-dimensional cone are independent")
    }

    pub fn contains(&self, p: &Vec2<T>) -> bool {
        self.inward_normals().iter().all(|n| !n.dot(p).is_negative())
    }

    /// Strict interior membership.
    pub fn contains_interior(&self, p: &Vec2<T>) -> bool {
        self.inward_normals().iter().all(|n| n.dot(p).is_positive())
    }

    /// |det| of the primitive rays; 1 exactly for smooth cones.
    pub fn multiplicity(&self) -> T {
        self.ray1.det(&self.ray2).abs()
    }

    pub fn is_regular(&self) -> bool {
        self.multiplicity().is_one()
    }

    /// Minimal generating set of the semigroup of lattice points in the cone,
    /// sorted angularly from ray1 to ray2.
    pub fn hilbert_basis(&self) -> Vec<Vec2<T>> {
        let (s1, s2) = (&self.ray1, &self.ray2);
        let d = s1.det(s2);
        // Every irreducible element lies in the half-open fundamental parallelogram
        // spanned by the rays, together with the rays themselves.
        let xs = [T::zero(), s1.x.clone(), s2.x.clone(), s1.x.clone() + s2.x.clone()];
        let ys = [T::zero(), s1.y.clone(), s2.y.clone(), s1.y.clone() + s2.y.clone()];
        let (xlo, xhi) = min_max(&xs);
        let (ylo, yhi) = min_max(&ys);
        let mut cands = Vec::new();
        let mut x = xlo;
        while x <= xhi {
            let mut y = ylo.clone();
            while y <= yhi {
                let p = Vec2::new(x.clone(), y.clone());
                let l1 = p.det(s2);
                let l2 = s1.det(&p);
                if !p.is_zero() && !l1.is_negative() && !l2.is_negative() && l1 <= d && l2 <= d {
                    cands.push(p);
                }
                y = y + T::one();
            }
            x = x + T::one();
        }
        let mut basis: Vec<Vec2<T>> = cands
            .iter()
            .filter(|p| !cands.iter().any(|q| q != *p && self.contains(&(*p - q)) && !(*p - q).is_zero()))
            .cloned()
            .collect();
        basis.sort_by(angular_cmp);
        basis
    }
}

fn min_max<T: LatticeInt>(v: &[T]) -> (T, T) {
    let lo = v.iter().min().cloned().unwrap();
    let hi = v.iter().max().cloned().unwrap();
    (lo, hi)
}

impl<T: fmt::Display> fmt::Display for Cone2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone({}, {})", self.ray1, self.ray2)
    }
}

#[derive(Serialize, Deserialize)]
struct ConeRepr<T> {
    rays: [Vec2<T>; 2],
}

impl<T: LatticeInt + Serialize> Serialize for Cone2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ConeRepr { rays: [self.ray1.clone(), self.ray2.clone()] }.serialize(s)
    }
}

impl<'de, T: LatticeInt + Deserialize<'de>> Deserialize<'de> for Cone2<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ConeRepr::<T>::deserialize(d)?;
        let [a, b] = r.rays;
        Cone2::new(a, b).map_err(de::Error::custom)
    }
}

/// The cone {w in support : w·n >= 0 for every n in normals}.
pub fn cone_from_inequalities<T: LatticeInt>(normals: &[Vec2<T>], support: &Cone2<T>) -> Result<Cone2<T>> {
    let mut prim: Vec<Vec2<T>> = normals.iter().filter(|n| !n.is_zero()).map(Vec2::primitive).collect();
    prim.sort();
    prim.dedup();

    let feasible = |w: &Vec2<T>| support.contains(w) && prim.iter().all(|n| !n.dot(w).is_negative());

    // Extreme rays of the feasible cone lie on a support ray or on a constraint line.
    let mut cands = vec![support.ray1.clone(), support.ray2.clone()];
    for n in &prim {
        let p = n.perp();
        cands.push(-p.clone());
        cands.push(p);
    }
    cands.retain(|w| feasible(w));

    let first = cands.iter().min_by(|a, b| angular_cmp(a, b)).cloned();
    let last = cands.iter().max_by(|a, b| angular_cmp(a, b)).cloned();
    match (first, last) {
        (Some(a), Some(b)) if !a.det(&b).is_zero() => Cone2::new(a, b),
        _ => Err(Error::NotFullDimensional),
    }
}

/// A complete fan on a 2-D support cone, cones kept in angular order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan2<T> {
    support: Cone2<T>,
    cones: Vec<Cone2<T>>,
}

impl<T: LatticeInt> Fan2<T> {
    /// Sorts `cones` angularly; call [`Fan2::is_valid`] to check the tiling.
    pub fn new(support: Cone2<T>, mut cones: Vec<Cone2<T>>) -> Self {
        cones.sort_by(|a, b| angular_cmp(&a.ray1, &b.ray1).then_with(|| angular_cmp(&a.ray2, &b.ray2)));
        Fan2 { support, cones }
    }

    pub fn support(&self) -> &Cone2<T> {
        &self.support
    }

    pub fn cones(&self) -> &[Cone2<T>] {
        &self.cones
    }

    /// Rays in angular order, each listed once.
    pub fn rays(&self) -> Vec<Vec2<T>> {
        let mut rays: Vec<Vec2<T>> = self.cones.iter().map(|c| c.ray1.clone()).collect();
        if let Some(last) = self.cones.last() {
            rays.push(last.ray2.clone());
        }
        rays
    }

    /// True iff the cones tile the support face-to-face.
    pub fn is_valid(&self) -> bool {
        let (Some(first), Some(last)) = (self.cones.first(), self.cones.last()) else {
            return false;
        };
        if first.ray1 != self.support.ray1 || last.ray2 != self.support.ray2 {
            return false;
        }
        if !self.cones.iter().all(|c| self.support.contains(&c.ray1) && self.support.contains(&c.ray2)) {
            return false;
        }
        self.cones.windows(2).all(|w| w[0].ray2 == w[1].ray1)
    }
}

pub fn validate_fan<T: LatticeInt>(fan: &Fan2<T>) -> bool {
    fan.is_valid()
}

#[derive(Serialize)]
#[serde(bound(serialize = "T: LatticeInt + Serialize"))]
struct FanRepr<'a, T: LatticeInt> {
    support: &'a Cone2<T>,
    cones: &'a [Cone2<T>],
}

#[derive(Deserialize)]
#[serde(bound(deserialize = "T: LatticeInt + Deserialize<'de>"))]
struct FanOwned<T: LatticeInt> {
    support: Cone2<T>,
    cones: Vec<Cone2<T>>,
}

impl<T: LatticeInt + Serialize> Serialize for Fan2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FanRepr { support: &self.support, cones: &self.cones }.serialize(s)
    }
}

impl<'de, T: LatticeInt + Deserialize<'de>> Deserialize<'de> for Fan2<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = FanOwned::<T>::deserialize(d)?;
        Ok(Fan2::new(f.support, f.cones))
    }
}
