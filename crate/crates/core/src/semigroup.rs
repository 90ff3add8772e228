//! The saturated affine semigroup σ^∨ ∩ Z^2 whose elements index the monomials of S.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{Cone, LatticeVector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSemigroup {
    dual_cone: Cone,
    generators: Vec<LatticeVector>,
    support_cone: Cone,
}

impl AffineSemigroup {
    /// Lattice points of `dual_cone`, generated by its Hilbert basis.
    pub fn from_dual_cone(dual_cone: Cone) -> Self {
        let generators = dual_cone.hilbert_basis();
        let support_cone = dual_cone.dual();
        AffineSemigroup { dual_cone, generators, support_cone }
    }

    /// The semigroup of the affine toric variety of `sigma`.
    pub fn from_support_cone(sigma: &Cone) -> Self {
        Self::from_dual_cone(sigma.dual())
    }

    /// σ^∨ = cone((1,0),(3,4)): the A3 surface singularity z^4 = xy.
    pub fn a3() -> Self {
        Self::from_dual_cone(Cone::new(LatticeVector::new(1, 0), LatticeVector::new(3, 4)).unwrap())
    }

    pub fn dual_cone(&self) -> &Cone {
        &self.dual_cone
    }

    pub fn support_cone(&self) -> &Cone {
        &self.support_cone
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn is_member(&self, a: &LatticeVector) -> bool {
        self.dual_cone.contains(a)
    }

    /// Divisibility x^b | x^a inside S. Saturation makes this plain cone membership.
    pub fn divides(&self, b: &LatticeVector, a: &LatticeVector) -> bool {
        self.dual_cone.contains(&(*a - *b))
    }

    /// Divisibility-minimal elements of (a + σ_Z) ∩ (b + σ_Z), sorted.
    pub fn min_common_multiples(&self, a: &LatticeVector, b: &LatticeVector) -> Vec<LatticeVector> {
        if self.divides(a, b) {
            return vec![*b];
        }
        if self.divides(b, a) {
            return vec![*a];
        }
        let [n1, n2] = self.dual_cone.inward_normals();
        let (r1, r2) = (self.dual_cone.ray1(), self.dual_cone.ray2());
        let c1 = n1.dot(a).max(n1.dot(b));
        let c2 = n2.dot(a).max(n2.dot(b));
        // Subtracting a ray generator lowers exactly one facet slack, so every
        // minimal element has slacks below the ray heights.
        let h1 = n1.dot(r2);
        let h2 = n2.dot(r1);
        let d = n1.det(&n2);
        let mut cands = Vec::new();
        for s1 in 0..h1 {
            for s2 in 0..h2 {
                let (t1, t2) = (c1 + s1, c2 + s2);
                let xn = t1 * n2.y - t2 * n1.y;
                let yn = n1.x * t2 - n2.x * t1;
                if xn % d == 0 && yn % d == 0 {
                    cands.push(LatticeVector::new(xn / d, yn / d));
                }
            }
        }
        let mut out: Vec<LatticeVector> =
            cands.iter().filter(|p| !cands.iter().any(|q| q != *p && self.divides(q, p))).copied().collect();
        out.sort();
        out.dedup();
        out
    }

    /// Members a with a·weight <= bound, sorted by weight, then lexicographically.
    pub fn enumerate_below(&self, weight: &LatticeVector, bound: i64) -> Result<Vec<LatticeVector>> {
        let (r1, r2) = (self.dual_cone.ray1(), self.dual_cone.ray2());
        let (w1, w2) = (weight.dot(r1), weight.dot(r2));
        if w1 <= 0 || w2 <= 0 {
            return Err(Error::InvalidWeight(weight.to_string()));
        }
        if bound < 0 {
            return Ok(Vec::new());
        }
        // Bounding box of the triangle 0, r1·bound/w1, r2·bound/w2.
        let xs = [0, Integer::div_floor(&(r1.x * bound), &w1), Integer::div_floor(&(r2.x * bound), &w2)];
        let xs_hi = [0, Integer::div_ceil(&(r1.x * bound), &w1), Integer::div_ceil(&(r2.x * bound), &w2)];
        let ys = [0, Integer::div_floor(&(r1.y * bound), &w1), Integer::div_floor(&(r2.y * bound), &w2)];
        let ys_hi = [0, Integer::div_ceil(&(r1.y * bound), &w1), Integer::div_ceil(&(r2.y * bound), &w2)];
        let (xlo, xhi) = (*xs.iter().min().unwrap(), *xs_hi.iter().max().unwrap());
        let (ylo, yhi) = (*ys.iter().min().unwrap(), *ys_hi.iter().max().unwrap());
        let mut out = Vec::new();
        for x in xlo..=xhi {
            for y in ylo..=yhi {
                let p = LatticeVector::new(x, y);
                if self.is_member(&p) && p.dot(weight) <= bound {
                    out.push(p);
                }
            }
        }
        out.sort_by_key(|p| (p.dot(weight), *p));
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct SemigroupRepr {
    dual_cone: Cone,
    generators: Vec<LatticeVector>,
}

impl Serialize for AffineSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SemigroupRepr { dual_cone: self.dual_cone.clone(), generators: self.generators.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for AffineSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SemigroupRepr::deserialize(d)?;
        let sg = AffineSemigroup::from_dual_cone(r.dual_cone);
        if sg.generators != r.generators {
            return Err(serde::de::Error::custom("generators are not the Hilbert basis of dual_cone"));
        }
        Ok(sg)
    }
}
