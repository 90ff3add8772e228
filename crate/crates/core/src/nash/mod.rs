//! The A3 application layer: the ideals J_n, the point families that describe
//! their initial ideals, the specialization φ to Laurent polynomials, and the
//! fan of the normalized higher Nash blowup of an arbitrary toric surface.

pub mod families;
pub mod laurent;
pub mod verify;

use std::sync::Arc;

use crate::algebra::{MatrixOrdering, SemigroupPolynomial};
use crate::error::{Error, Result};
use crate::fan::{fan_of, groebner_fan, GroebnerCone};
use crate::groebner::Ideal;
use crate::scalar::Coefficient;
use crate::semigroup::AffineSemigroup;
use crate::{Cone, Fan, LatticeVector};

pub use families::{dn_set, l_n, phi_linear, pn_family, psi, theta, PnFamily};
pub use laurent::LaurentPolynomial;
pub use verify::{verify_paper, ClaimRecord, NReport, VerificationReport};

/// The A3 semigroup S = C[u, uv, u^3v^4] with the ordering given by rows (2,-1), (1,1).
#[derive(Clone, Debug)]
pub struct A3Context {
    semigroup: Arc<AffineSemigroup>,
    ordering: MatrixOrdering,
}

impl Default for A3Context {
    fn default() -> Self {
        Self::new()
    }
}

impl A3Context {
    pub fn new() -> Self {
        let semigroup = Arc::new(AffineSemigroup::a3());
        let rows = vec![LatticeVector::new(2, -1), LatticeVector::new(1, 1)];
        let ordering = MatrixOrdering::new(&semigroup, rows).expect("A3 ordering is valid");
        A3Context { semigroup, ordering }
    }

    pub fn semigroup(&self) -> &Arc<AffineSemigroup> {
        &self.semigroup
    }

    pub fn ordering(&self) -> &MatrixOrdering {
        &self.ordering
    }

    pub fn jn<C: Coefficient>(&self, n: u32) -> Ideal<C> {
        jn_generators(&self.semigroup, n).expect("J_n has generators")
    }
}

/// ⟨x^g - 1 : g a Hilbert basis element⟩^k, one generator per multiset of size k.
pub fn augmentation_power<C: Coefficient>(sg: &Arc<AffineSemigroup>, k: u32) -> Result<Ideal<C>> {
    let binomials: Vec<SemigroupPolynomial<C>> =
        sg.generators().iter().map(|g| SemigroupPolynomial::binomial_minus_one(sg, *g)).collect::<Result<_>>()?;
    // powers[i][e] = binomials[i]^e
    let powers: Vec<Vec<SemigroupPolynomial<C>>> = binomials
        .iter()
        .map(|b| {
            let mut row = vec![SemigroupPolynomial::one(sg)];
            for e in 1..=k as usize {
                let next = row[e - 1].mul_unchecked(b);
                row.push(next);
            }
            row
        })
        .collect();
    let mut gens = Vec::new();
    let mut exps = vec![0u32; binomials.len()];
    compositions(k, 0, &mut exps, &mut |e| {
        let p = e
            .iter()
            .enumerate()
            .fold(SemigroupPolynomial::one(sg), |acc, (i, &ei)| acc.mul_unchecked(&powers[i][ei as usize]));
        gens.push(p);
    });
    Ideal::new(gens)
}

/// Calls `f` on every exponent vector of total degree `left` over the remaining slots.
fn compositions(left: u32, i: usize, exps: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if i + 1 == exps.len() {
        exps[i] = left;
        f(exps);
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e;
        compositions(left - e, i + 1, exps, f);
    }
}

/// J_n = ⟨x^g - 1⟩^{n+1}. J_0 is the augmentation ideal itself.
pub fn jn_generators<C: Coefficient>(sg: &Arc<AffineSemigroup>, n: u32) -> Result<Ideal<C>> {
    augmentation_power(sg, n + 1)
}

/// φ: u ↦ λ^-1, v ↦ λ, so u^x v^y ↦ λ^{y-x}. Defined on the A3 semigroup only.
pub fn phi_specialize<C: Coefficient>(f: &SemigroupPolynomial<C>) -> Result<LaurentPolynomial<C>> {
    if **f.context() != AffineSemigroup::a3() {
        return Err(Error::ContextMismatch);
    }
    Ok(LaurentPolynomial::from_terms(f.terms().iter().map(|(a, c)| (phi_linear(a), c.clone()))))
}

/// Checks φ(J_n) = ⟨λ-1⟩^{n+1} from both sides: every φ(generator) is divisible
/// by (λ-1)^{n+1}, and (λ-1)^{n+1} is a rational combination of the φ(generators).
pub fn phi_image_is_power<C: Coefficient>(ideal: &Ideal<C>, n: u32) -> Result<bool> {
    let images: Vec<LaurentPolynomial<C>> = ideal.generators().iter().map(phi_specialize).collect::<Result<_>>()?;
    if !images.iter().all(|g| g.divisible_by_lambda_minus_one_power(n + 1)) {
        return Ok(false);
    }
    let target = LaurentPolynomial::<C>::lambda_minus_one().pow(n + 1);
    let lo = images.iter().chain([&target]).filter_map(|g| g.min_exp()).min().unwrap_or(0);
    let hi = images.iter().chain([&target]).filter_map(|g| g.max_exp()).max().unwrap_or(0);
    let column = |g: &LaurentPolynomial<C>| (lo..=hi).map(|e| g.coeff(e)).collect::<Vec<C>>();
    let columns: Vec<Vec<C>> = images.iter().map(column).collect();
    Ok(laurent::solve_in_span(&columns, &column(&target)).is_some())
}

/// Fan of the normalized n-th Nash blowup of the toric surface of a cone.
#[derive(Clone, Debug)]
pub struct NashFan<C> {
    pub semigroup: Arc<AffineSemigroup>,
    pub fan: Fan,
    pub cones: Vec<GroebnerCone<C>>,
    pub multiplicities: Vec<i64>,
    pub is_singular: bool,
}

impl<C> NashFan<C> {
    pub fn max_multiplicity(&self) -> i64 {
        self.multiplicities.iter().copied().max().unwrap_or(1)
    }
}

/// The Gröbner fan of J_n over `surface_cone`. The dual cone must lie in the
/// first quadrant; no change of coordinates is attempted.
pub fn nash_fan<C: Coefficient>(surface_cone: &Cone, n: u32) -> Result<NashFan<C>> {
    let sg = Arc::new(AffineSemigroup::from_support_cone(surface_cone));
    if let Some(g) = sg.generators().iter().find(|g| g.x < 0 || g.y < 0) {
        return Err(Error::DualNotNonnegative(format!("Hilbert basis element {g}")));
    }
    let ideal = jn_generators::<C>(&sg, n)?;
    let cones = groebner_fan(&ideal)?;
    let fan = fan_of(sg.support_cone(), &cones);
    let multiplicities: Vec<i64> = cones.iter().map(|c| c.multiplicity()).collect();
    let is_singular = multiplicities.iter().any(|&m| m > 1);
    Ok(NashFan { semigroup: sg, fan, cones, multiplicities, is_singular })
}
