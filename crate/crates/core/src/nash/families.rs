//! The explicit point families P_n (minimal generators of the initial ideal of
//! J_n) and D_n (its standard monomials) for the A3 singularity, and the
//! linear functionals used to study them.

use std::collections::BTreeSet;

use crate::LatticeVector;

fn v(x: i64, y: i64) -> LatticeVector {
    LatticeVector::new(x, y)
}

const STEP: LatticeVector = LatticeVector { x: 1, y: 2 };

/// P_n = {p} ∪ {q^i} ∪ {r^j} ∪ {s}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnFamily {
    pub n: u32,
    pub p: LatticeVector,
    pub q: Vec<LatticeVector>,
    pub r: Vec<LatticeVector>,
    pub s: LatticeVector,
}

impl PnFamily {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "P_n is defined for n >= 1");
        let k = i64::from(n);
        let (p, q0, q_count, r_count, s) = if n % 2 == 1 {
            let h = (k + 3) / 2;
            (v(h, 0), v(h, 1) + STEP * ((k - 1) / 2), (k - 1) / 2 + 1, (k - 1) / 2 + 1, v(3, 4) * ((k + 1) / 2))
        } else {
            let h = (k + 2) / 2;
            (v(h, 0), v(h, 0) + STEP * (k / 2), (k - 2) / 2 + 1, k / 2 + 1, v(3, 4) * ((k + 2) / 2))
        };
        let r0 = q0 + v(0, 1);
        let q = (0..q_count).map(|i| q0 - STEP * i).collect();
        let r = (0..r_count).map(|j| r0 + STEP * j).collect();
        PnFamily { n, p, q, r, s }
    }

    /// All points, ordered along the dividing broken line (by height).
    pub fn points(&self) -> Vec<LatticeVector> {
        let mut pts = vec![self.p];
        pts.extend(self.q.iter().rev());
        pts.extend(self.r.iter());
        pts.push(self.s);
        pts
    }

    pub fn as_set(&self) -> BTreeSet<LatticeVector> {
        self.points().into_iter().collect()
    }
}

pub fn pn_family(n: u32) -> PnFamily {
    PnFamily::new(n)
}

/// D_n through D_1 = {(0,0),(1,0),(1,1)} and D_n = D_{n-1} ⊔ (P_{n-1} \ P_n).
pub fn dn_set(n: u32) -> BTreeSet<LatticeVector> {
    assert!(n >= 1, "D_n is defined for n >= 1");
    let mut d: BTreeSet<LatticeVector> = [v(0, 0), v(1, 0), v(1, 1)].into_iter().collect();
    for m in 2..=n {
        let prev = pn_family(m - 1).as_set();
        let cur = pn_family(m).as_set();
        d.extend(prev.difference(&cur).copied());
    }
    d
}

/// θ(a) = a + (1,1).
pub fn theta(a: &LatticeVector) -> LatticeVector {
    *a + v(1, 1)
}

/// Φ(a) = (-1,1)·a, the exponent of λ under u ↦ λ^-1, v ↦ λ.
pub fn phi_linear(a: &LatticeVector) -> i64 {
    a.y - a.x
}

/// l_n: (2n-2, -n+2) for odd n, (2n, -n+1) for even n.
pub fn l_n(n: u32) -> LatticeVector {
    let k = i64::from(n);
    if n % 2 == 1 {
        v(2 * k - 2, -k + 2)
    } else {
        v(2 * k, -k + 1)
    }
}

/// Ψ_n(a) = l_n·a.
pub fn psi(n: u32, a: &LatticeVector) -> i64 {
    l_n(n).dot(a)
}
