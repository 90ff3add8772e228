#![allow(dead_code)]

pub mod lemmas;
pub mod oracles;

use std::collections::BTreeSet;

use nashfan::{LatticeVector, Rational};

pub fn v(x: i64, y: i64) -> LatticeVector {
    LatticeVector::new(x, y)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// a ∈ σ^∨ = cone((1,0),(3,4)), written out as the two facet inequalities.
pub fn in_a3_dual(a: &LatticeVector) -> bool {
    a.y >= 0 && 4 * a.x - 3 * a.y >= 0
}

/// b ∈ a + σ_Z in the A3 semigroup.
pub fn a3_divides(a: &LatticeVector, b: &LatticeVector) -> bool {
    in_a3_dual(&(*b - *a))
}

/// Lattice points of σ^∨ with coordinate sum at most `bound`.
pub fn a3_points(bound: i64) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    for x in 0..=bound {
        for y in 0..=bound - x {
            let a = v(x, y);
            if in_a3_dual(&a) {
                out.push(a);
            }
        }
    }
    out
}

pub fn set(pts: &[(i64, i64)]) -> BTreeSet<LatticeVector> {
    pts.iter().map(|&(x, y)| v(x, y)).collect()
}

fn falling(a: i64, k: i64) -> i64 {
    (0..k).map(|i| a - i).product()
}

/// Taylor jet of order n at the torus point u = v = 1: all derivatives
/// ∂_u^i ∂_v^j (i + j <= n) of a polynomial given by its terms.
pub fn jet<'a, I>(terms: I, n: i64) -> Vec<Rational>
where
    I: IntoIterator<Item = (&'a LatticeVector, &'a Rational)> + Clone,
{
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n - i {
            let mut s = q(0);
            for (e, c) in terms.clone() {
                s += c * q(falling(e.x, i) * falling(e.y, j));
            }
            out.push(s);
        }
    }
    out
}

/// Rank of a list of rational row vectors.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != q(0)) else { continue };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != q(0) {
                let f = &row[c] / &pivot[c];
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= p * &f;
                }
            }
        }
        r += 1;
    }
    r
}
