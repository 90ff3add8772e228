//! Gröbner cones of marked bases and the full Gröbner fan over σ.

use crate::algebra::MatrixOrdering;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ideal, MarkedBasis};
use crate::lattice::cone_from_inequalities;
use crate::scalar::Coefficient;
use crate::{Cone, Fan, LatticeVector};

/// Safety valve on the number of cones a sweep may produce.
const MAX_SWEEP_CONES: usize = 100_000;

/// The closed cone C_G of a marked basis, together with the basis.
#[derive(Clone, Debug)]
pub struct GroebnerCone<C> {
    pub cone: Cone,
    pub basis: MarkedBasis<C>,
}

impl<C: Coefficient> PartialEq for GroebnerCone<C> {
    fn eq(&self, other: &Self) -> bool {
        self.cone == other.cone && self.basis == other.basis
    }
}

impl<C: Coefficient> GroebnerCone<C> {
    /// Sum of the primitive rays, which lies in the open cone.
    pub fn interior_weight(&self) -> LatticeVector {
        *self.cone.ray1() + *self.cone.ray2()
    }

    pub fn multiplicity(&self) -> i64 {
        self.cone.multiplicity()
    }
}

/// Weights w of the support with (mark - β)·w >= 0 for every term β of every element.
pub fn cone_of_basis<C: Coefficient>(basis: &MarkedBasis<C>, support: &Cone) -> Result<GroebnerCone<C>> {
    let normals: Vec<LatticeVector> =
        basis.elements().iter().flat_map(|e| e.tail().map(move |b| e.mark - *b)).collect();
    let cone = cone_from_inequalities(&normals, support)?;
    Ok(GroebnerCone { cone, basis: basis.clone() })
}

/// Reduced basis for the ordering ≼_w obtained by refining `base` with w.
pub fn basis_at_weight<C: Coefficient>(
    ideal: &Ideal<C>,
    w: &LatticeVector,
    base: &MatrixOrdering,
) -> Result<MarkedBasis<C>> {
    buchberger(ideal, &base.weight_refine(w)?)
}

/// All maximal cones of the Gröbner fan, swept counterclockwise across σ.
///
/// Each step computes the basis for the ordering [r, d], where r is the ray
/// reached so far and d turns counterclockwise, i.e. for a weight just past r.
pub fn groebner_fan<C: Coefficient>(ideal: &Ideal<C>) -> Result<Vec<GroebnerCone<C>>> {
    let ctx = ideal.context();
    let sigma = ctx.support_cone().clone();
    let (start, end) = (*sigma.ray1(), *sigma.ray2());
    let mut cones = Vec::new();
    let mut frontier = start;
    let mut second = end;
    loop {
        let ord = MatrixOrdering::new(ctx, vec![frontier, second])?;
        let gc = cone_of_basis(&buchberger(ideal, &ord)?, &sigma)?;
        if *gc.cone.ray1() != frontier {
            return Err(Error::SweepStalled(format!("expected a cone starting at {frontier}, got {}", gc.cone)));
        }
        frontier = *gc.cone.ray2();
        second = frontier.perp();
        cones.push(gc);
        if frontier == end {
            return Ok(cones);
        }
        if cones.len() >= MAX_SWEEP_CONES {
            return Err(Error::SweepStalled(format!("more than {MAX_SWEEP_CONES} cones")));
        }
    }
}

pub fn fan_of<C: Coefficient>(support: &Cone, cones: &[GroebnerCone<C>]) -> Fan {
    Fan::new(support.clone(), cones.iter().map(|c| c.cone.clone()).collect())
}
