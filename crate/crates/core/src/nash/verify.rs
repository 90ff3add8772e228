//! Regression report over n = 1..n_max for the initial ideals, standard
//! monomials and Gröbner cones of J_n on the A3 singularity.

use std::collections::BTreeSet;
use std::thread;

use serde::Serialize;

use super::{dn_set, l_n, phi_linear, phi_specialize, pn_family, A3Context};
use crate::error::Result;
use crate::fan::cone_of_basis;
use crate::groebner::{buchberger, ideal_membership, standard_monomials};
use crate::{LatticeVector, QMarkedBasis, QPolynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    pub statement: String,
    pub pass: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NReport {
    pub n: u32,
    pub claims: Vec<ClaimRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n_max: u32,
    pub results: Vec<NReport>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.claims.iter().all(|c| c.pass))
    }

    pub fn failures(&self) -> impl Iterator<Item = (u32, &ClaimRecord)> + '_ {
        self.results.iter().flat_map(|r| r.claims.iter().filter(|c| !c.pass).map(move |c| (r.n, c)))
    }
}

fn record(id: &str, statement: String, pass: bool, witness: String) -> ClaimRecord {
    ClaimRecord { claim_id: id.to_string(), statement, pass, witness }
}

fn fmt_set(s: &BTreeSet<LatticeVector>) -> String {
    let parts: Vec<String> = s.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Computes GB(J_0), ..., GB(J_{n_max}) in parallel, then checks claims (a)-(g) for each n.
pub fn verify_paper(n_max: u32) -> Result<VerificationReport> {
    let a3 = A3Context::new();
    let bases: Vec<QMarkedBasis> = thread::scope(|s| {
        let handles: Vec<_> = (0..=n_max)
            .map(|n| {
                let a3 = &a3;
                s.spawn(move || buchberger(&a3.jn(n), a3.ordering()))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("basis worker panicked")).collect::<Result<Vec<_>>>()
    })?;
    let results =
        (1..=n_max).map(|n| check_n(&a3, n, &bases[n as usize], &bases[n as usize - 1])).collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport { n_max, results })
}

fn check_n(a3: &A3Context, n: u32, gb: &QMarkedBasis, prev: &QMarkedBasis) -> Result<NReport> {
    let mut claims = Vec::new();
    let pn = pn_family(n);
    let pn_set = pn.as_set();

    let marks = gb.marks();
    claims.push(record(
        "a",
        "marks of GB(J_n) equal P_n".into(),
        marks == pn_set,
        format!("marks {} vs P_n {}", fmt_set(&marks), fmt_set(&pn_set)),
    ));

    let expected = ((n + 1) * (n + 2) / 2) as usize;
    let dn = dn_set(n);
    let witness_b = match standard_monomials(gb, 4 * expected + 16) {
        Ok(std) => (std == dn && std.len() == expected, format!("{} standard monomials {}", std.len(), fmt_set(&std))),
        Err(e) => (false, e.to_string()),
    };
    claims.push(record(
        "b",
        format!("standard monomials equal D_n and number (n+1)(n+2)/2 = {expected}"),
        witness_b.0,
        witness_b.1,
    ));

    let gc = cone_of_basis(gb, a3.semigroup().support_cone())?;
    let rays: BTreeSet<LatticeVector> = gc.cone.rays().into_iter().copied().collect();
    let want: BTreeSet<LatticeVector> = [LatticeVector::new(2, -1), l_n(n)].into_iter().collect();
    claims.push(record("c", format!("C_G has rays (2,-1) and {}", l_n(n)), rays == want, gc.cone.to_string()));
    claims.push(record(
        "d",
        "C_G has multiplicity 2".into(),
        gc.multiplicity() == 2,
        format!("{} has multiplicity {}", gc.cone, gc.multiplicity()),
    ));

    if n >= 2 {
        let prev_family = pn_family(n - 1);
        let (mark, needed) = if n.is_multiple_of(2) {
            (pn.p, prev_family.s)
        } else {
            (*pn.q.last().expect("q is nonempty"), *prev_family.r.last().expect("r is nonempty"))
        };
        let (pass, witness) = match gb.element_with_mark(&mark) {
            Some(e) => (e.poly.coeff(&needed) != num_traits::Zero::zero(), e.poly.to_string()),
            None => (false, format!("no element marked {mark}")),
        };
        claims.push(record("e", format!("element marked {mark} has {needed} in its support"), pass, witness));
    }

    let uv1 = QPolynomial::binomial_minus_one(a3.semigroup(), LatticeVector::new(1, 1))?;
    let mut offending = None;
    for e in prev.elements() {
        if !ideal_membership(&uv1.mul(&e.poly)?, gb) {
            offending = Some(e.poly.to_string());
            break;
        }
    }
    claims.push(record(
        "f",
        "(uv-1)·g lies in J_n for every g in GB(J_{n-1})".into(),
        offending.is_none(),
        offending.unwrap_or_else(|| format!("{} elements checked", prev.len())),
    ));

    if n.is_multiple_of(2) {
        // The marks of P_{n-1} \ P_n are standard for J_n, so the basis has no
        // element with such a mark. What carries the content is the support
        // bound: every monomial ≼ such a mark has Φ in [-n/2, n/2], so any f
        // with that leading monomial has φ(f) supported on a basis of
        // C[λ^±]/φ(J_n), and f ∈ J_n forces φ(f) = 0.
        let dropped: BTreeSet<LatticeVector> = pn_family(n - 1).as_set().difference(&pn_set).copied().collect();
        let half = i64::from(n / 2);
        let mut offending = None;
        for e in gb.elements().iter().filter(|e| dropped.contains(&e.mark)) {
            if !phi_specialize(&e.poly)?.is_zero() {
                offending = Some(e.poly.to_string());
                break;
            }
        }
        let height = LatticeVector::new(2, -1);
        let top = dropped.iter().map(|a| height.dot(a)).max().unwrap_or(0);
        let ord = a3.ordering();
        let mut below = 0;
        for b in a3.semigroup().enumerate_below(&height, top)? {
            if dropped.iter().any(|a| ord.compare(&b, a).is_le()) {
                below += 1;
                if phi_linear(&b).abs() > half && offending.is_none() {
                    offending = Some(format!("monomial {b} below a dropped mark has Φ = {}", phi_linear(&b)));
                }
            }
        }
        let standard = dn.is_superset(&dropped) && marks.is_disjoint(&dropped);
        if !standard && offending.is_none() {
            offending = Some(format!("{} are not all standard", fmt_set(&dropped)));
        }
        claims.push(record(
            "g",
            "φ vanishes on every element marked in P_{n-1} \\ P_n".into(),
            offending.is_none(),
            offending.unwrap_or_else(|| {
                format!(
                    "{} are standard, so no basis element is marked there; all {below} monomials below them have Φ in [-{half}, {half}]",
                    fmt_set(&dropped)
                )
            }),
        ));
    }
    Ok(NReport { n, claims })
}
