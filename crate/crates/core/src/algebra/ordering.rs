use std::cmp::Ordering;
use std::sync::Arc;

use crate::algebra::polynomial::{same_ctx, SemigroupPolynomial};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::semigroup::AffineSemigroup;
use crate::LatticeVector;

/// Monomial ordering on σ_Z given by an integer weight matrix.
///
/// a ≺ b iff the first row with (b - a)·row ≠ 0 has (b - a)·row > 0.
#[derive(Clone, Debug)]
pub struct MatrixOrdering {
    rows: Vec<LatticeVector>,
    // first nonzero row and first row independent of it; they decide every comparison
    effective: [LatticeVector; 2],
    ctx: Arc<AffineSemigroup>,
}

fn effective_rows(rows: &[LatticeVector]) -> Option<[LatticeVector; 2]> {
    let first = *rows.iter().find(|r| !r.is_zero())?;
    let second = *rows.iter().find(|r| first.det(r) != 0)?;
    Some([first, second])
}

impl PartialEq for MatrixOrdering {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && same_ctx(&self.ctx, &other.ctx)
    }
}

impl MatrixOrdering {
    pub fn new(ctx: &Arc<AffineSemigroup>, rows: Vec<LatticeVector>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidOrdering("no rows".into()));
        }
        let Some(effective) = effective_rows(&rows) else {
            return Err(Error::InvalidOrdering("rows do not span the plane".into()));
        };
        for g in ctx.generators() {
            match rows.iter().map(|r| r.dot(g)).find(|d| *d != 0) {
                Some(d) if d > 0 => {}
                _ => return Err(Error::InvalidOrdering(format!("generator {g} is not above 1"))),
            }
        }
        Ok(MatrixOrdering { rows, effective, ctx: ctx.clone() })
    }

    pub fn rows(&self) -> &[LatticeVector] {
        &self.rows
    }

    pub fn context(&self) -> &Arc<AffineSemigroup> {
        &self.ctx
    }

    pub fn compare(&self, a: &LatticeVector, b: &LatticeVector) -> Ordering {
        let d = *a - *b;
        for r in &self.effective {
            match r.dot(&d).cmp(&0) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Sort key: lexicographic comparison of keys agrees with `compare`.
    pub fn key(&self, a: &LatticeVector) -> Vec<i64> {
        self.rows.iter().map(|r| r.dot(a)).collect()
    }

    /// Two-entry sort key, additive in `a`, ordered like `compare`.
    pub fn compact_key(&self, a: &LatticeVector) -> [i64; 2] {
        [self.effective[0].dot(a), self.effective[1].dot(a)]
    }

    /// ≼_w: compare by w first, break ties with this ordering. Requires w ∈ σ.
    pub fn weight_refine(&self, w: &LatticeVector) -> Result<Self> {
        if !self.ctx.support_cone().contains(w) {
            return Err(Error::WeightOutsideSigma(w.to_string()));
        }
        let mut rows = Vec::with_capacity(self.rows.len() + 1);
        rows.push(*w);
        rows.extend_from_slice(&self.rows);
        let effective = effective_rows(&rows).expect("refining keeps the rows spanning");
        Ok(MatrixOrdering { rows, effective, ctx: self.ctx.clone() })
    }

    pub fn leading_monomial<C: Coefficient>(&self, f: &SemigroupPolynomial<C>) -> Result<LatticeVector> {
        f.support().copied().max_by(|a, b| self.compare(a, b)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coefficient<C: Coefficient>(&self, f: &SemigroupPolynomial<C>) -> Result<C> {
        Ok(f.coeff(&self.leading_monomial(f)?))
    }

    /// f divided by its leading coefficient.
    pub fn monic<C: Coefficient>(&self, f: &SemigroupPolynomial<C>) -> Result<SemigroupPolynomial<C>> {
        let lc = self.leading_coefficient(f)?;
        Ok(f.scale(&(C::one() / lc)))
    }

    /// Terms of `f` from ≼-largest to smallest.
    pub fn sorted_terms<'a, C: Coefficient>(&self, f: &'a SemigroupPolynomial<C>) -> Vec<(&'a LatticeVector, &'a C)> {
        let mut t: Vec<_> = f.terms().iter().collect();
        t.sort_by(|a, b| self.compare(b.0, a.0));
        t
    }
}
