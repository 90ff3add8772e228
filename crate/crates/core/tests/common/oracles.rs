//! Seeded random checks of the engine against brute-force or textbook oracles.

use std::cmp::Ordering;
use std::sync::Arc;

use super::{a3_divides, in_a3_dual, jet, q, rank, v};
use nashfan::fan::{basis_at_weight, cone_of_basis, fan_of, groebner_fan};
use nashfan::groebner::{buchberger, normal_form, s_polynomials, standard_monomials};
use nashfan::nash::{dn_set, phi_specialize, A3Context};
use nashfan::{validate_fan, AffineSemigroup, Ideal, LatticeVector, MatrixOrdering, QIdeal, QPolynomial, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// p ∈ cone(r1, r2) for r1, r2 in counterclockwise order.
pub fn between(r1: &LatticeVector, r2: &LatticeVector, p: &LatticeVector) -> bool {
    r1.det(p) >= 0 && p.det(r2) >= 0
}

pub fn random_a3_point(r: &mut ChaCha8Rng, max: i64) -> LatticeVector {
    loop {
        let a = v(r.gen_range(0..=max), r.gen_range(0..=max));
        if in_a3_dual(&a) {
            return a;
        }
    }
}

pub fn random_poly(r: &mut ChaCha8Rng, ctx: &Arc<AffineSemigroup>, terms: usize, max: i64) -> QPolynomial {
    loop {
        let t: Vec<(LatticeVector, Rational)> = (0..terms)
            .map(|_| {
                let mut a;
                loop {
                    a = v(r.gen_range(0..=max), r.gen_range(0..=max));
                    if ctx.is_member(&a) {
                        break;
                    }
                }
                (a, q(r.gen_range(-3..=3)))
            })
            .collect();
        let f = QPolynomial::from_terms(ctx, t).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_orderings(ctx: &Arc<AffineSemigroup>, r: &mut ChaCha8Rng, count: usize) -> Vec<MatrixOrdering> {
    let mut out = Vec::new();
    while out.len() < count {
        let rows: Vec<LatticeVector> =
            (0..r.gen_range(1..=3)).map(|_| v(r.gen_range(-4..=4), r.gen_range(-4..=4))).collect();
        if let Ok(o) = MatrixOrdering::new(ctx, rows) {
            out.push(o);
        }
    }
    out
}

/// Minimal lattice points of (a + C) ∩ (b + C) for C = cone(r1, r2) inside the
/// first quadrant. They all lie below a + b + r1 + r2.
pub fn brute_mcm(r1: &LatticeVector, r2: &LatticeVector, a: &LatticeVector, b: &LatticeVector) -> Vec<LatticeVector> {
    let top = *a + *b + *r1 + *r2;
    let common: Vec<LatticeVector> = (0..=top.x)
        .flat_map(|x| (0..=top.y).map(move |y| v(x, y)))
        .filter(|m| between(r1, r2, &(*m - *a)) && between(r1, r2, &(*m - *b)))
        .collect();
    let mut out: Vec<LatticeVector> =
        common.iter().filter(|m| !common.iter().any(|c| c != *m && between(r1, r2, &(**m - *c)))).copied().collect();
    out.sort();
    out
}

pub fn a3_min_common_multiples(pairs: usize, seed: u64) {
    let sg = AffineSemigroup::a3();
    let mut r = rng(seed);
    let (r1, r2) = (v(1, 0), v(3, 4));
    for _ in 0..pairs {
        let a = random_a3_point(&mut r, 12);
        let b = random_a3_point(&mut r, 12);
        assert_eq!(sg.min_common_multiples(&a, &b), brute_mcm(&r1, &r2, &a, &b), "{a} {b}");
    }
}

pub fn ordering_axioms(triples: usize, seed: u64) {
    let a3 = A3Context::new();
    let ctx = a3.semigroup();
    let mut r = rng(seed);
    let mut ords = random_orderings(ctx, &mut r, 9);
    ords.push(a3.ordering().clone());
    for i in 0..triples {
        let ord = &ords[i % ords.len()];
        let (a, b, c) = (random_a3_point(&mut r, 10), random_a3_point(&mut r, 10), random_a3_point(&mut r, 10));
        // total and antisymmetric
        assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
        assert_eq!(ord.compare(&a, &b) == Ordering::Equal, a == b);
        // transitive
        if ord.compare(&a, &b) != Ordering::Greater && ord.compare(&b, &c) != Ordering::Greater {
            assert_ne!(ord.compare(&a, &c), Ordering::Greater);
        }
        // translation compatible
        assert_eq!(ord.compare(&(a + c), &(b + c)), ord.compare(&a, &b));
        // 1 is the minimum and divisibility is respected
        assert_ne!(ord.compare(&v(0, 0), &a), Ordering::Greater);
        if a3_divides(&a, &b) {
            assert_ne!(ord.compare(&a, &b), Ordering::Greater);
        }
    }
}

pub fn initial_forms_multiply(pairs: usize, seed: u64) {
    let a3 = A3Context::new();
    let ctx = a3.semigroup();
    let mut r = rng(seed);
    for _ in 0..pairs {
        let f = random_poly(&mut r, ctx, 4, 6);
        let g = random_poly(&mut r, ctx, 4, 6);
        // a weight of σ = cone((0,1),(4,-3)), boundary included
        let w = v(0, 1) * r.gen_range(0..5) + v(4, -3) * r.gen_range(0..5);
        let lhs = f.mul(&g).unwrap().initial_form(&w).unwrap();
        let rhs = f.initial_form(&w).unwrap().mul(&g.initial_form(&w).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "w={w} f={f} g={g}");
    }
}

fn random_small_ideal(r: &mut ChaCha8Rng, ctx: &Arc<AffineSemigroup>) -> QIdeal {
    let gens = (0..r.gen_range(2..=3)).map(|_| random_poly(r, ctx, 3, 4)).collect();
    Ideal::new(gens).unwrap()
}

/// Reduced bases do not depend on the order or choice of generators.
pub fn reduced_basis_uniqueness(seed: u64) {
    let a3 = A3Context::new();
    let ctx = a3.semigroup();
    let mut r = rng(seed);
    let mut ideals: Vec<QIdeal> = (1..=3).map(|n| a3.jn(n)).collect();
    ideals.extend((0..6).map(|_| random_small_ideal(&mut r, ctx)));
    let ords = random_orderings(ctx, &mut r, 2);
    for ideal in &ideals {
        for ord in ords.iter().chain([a3.ordering()]) {
            let gb = buchberger(ideal, ord).unwrap();
            assert!(gb.is_reduced());
            assert!(gb.satisfies_buchberger_criterion());
            for e in gb.elements() {
                assert!(normal_form(&e.poly, &gb).is_zero());
            }
            for g in ideal.generators() {
                assert!(normal_form(g, &gb).is_zero());
            }

            let mut shuffled = ideal.generators().to_vec();
            shuffled.shuffle(&mut r);
            assert_eq!(buchberger(&Ideal::new(shuffled).unwrap(), ord).unwrap(), gb);

            // the basis itself, plus random combinations of it, generates the same ideal
            let mut regen: Vec<QPolynomial> = gb.elements().iter().map(|e| e.poly.clone()).collect();
            for _ in 0..3 {
                let mut h = QPolynomial::zero(ctx);
                for e in gb.elements() {
                    let m = random_poly(&mut r, ctx, 2, 3);
                    h = h.add(&m.mul(&e.poly).unwrap()).unwrap();
                }
                if !h.is_zero() {
                    regen.push(h);
                }
            }
            regen.shuffle(&mut r);
            assert_eq!(buchberger(&Ideal::new(regen).unwrap(), ord).unwrap(), gb);
        }
    }
}

pub fn s_polynomials_reduce_to_zero(n_max: u32) {
    let a3 = A3Context::new();
    for n in 1..=n_max {
        let gb = buchberger(&a3.jn::<Rational>(n), a3.ordering()).unwrap();
        for (i, a) in gb.elements().iter().enumerate() {
            for b in &gb.elements()[i + 1..] {
                for s in s_polynomials(a, b, a3.semigroup()) {
                    assert!(normal_form(&s, &gb).is_zero(), "n={n} marks {} {}", a.mark, b.mark);
                }
            }
        }
    }
}

/// At interior weights of each cone of the fan of J_n, refining the standard
/// ordering gives back that cone's basis, and every initial form is the mark.
pub fn bases_stable_inside_cones(n_max: u32, per_cone: usize, seed: u64) {
    let a3 = A3Context::new();
    let ctx = a3.semigroup();
    let mut r = rng(seed);
    for n in 1..=n_max {
        let ideal = a3.jn::<Rational>(n);
        let cones = groebner_fan(&ideal).unwrap();
        assert!(validate_fan(&fan_of(ctx.support_cone(), &cones)));
        for gc in &cones {
            let (r1, r2) = (*gc.cone.ray1(), *gc.cone.ray2());
            for _ in 0..per_cone {
                let w = r1 * r.gen_range(1..40) + r2 * r.gen_range(1..40);
                assert!(gc.cone.contains_interior(&w));
                assert_eq!(basis_at_weight(&ideal, &w, a3.ordering()).unwrap(), gc.basis, "n={n} w={w}");
                for e in gc.basis.elements() {
                    let lead = QPolynomial::monomial(ctx, e.mark, q(1)).unwrap();
                    assert_eq!(e.poly.initial_form(&w).unwrap(), lead);
                }
            }
            // boundary weights still give the basis when refining one of its orderings
            let ord = MatrixOrdering::new(ctx, vec![r1 + r2, r1]).unwrap();
            for w in [r1, r2] {
                assert_eq!(basis_at_weight(&ideal, &w, &ord).unwrap(), gc.basis);
            }
        }
    }
}

/// J_n is the (n+1)-st power of the ideal of the torus point u = v = 1, so a
/// polynomial lies in J_n only if its jet of order n there vanishes.
pub fn quotient_dimension_matches_jets(n_max: u32) {
    let a3 = A3Context::new();
    let ctx = a3.semigroup();
    for n in 1..=n_max {
        let k = i64::from(n);
        let ideal = a3.jn::<Rational>(n);
        for g in ideal.generators() {
            assert!(jet(g.terms().iter(), k).iter().all(|c| *c == q(0)));
        }
        let gb = buchberger(&ideal, a3.ordering()).unwrap();
        let std = standard_monomials(&gb, 1000).unwrap();
        assert_eq!(std, dn_set(n));
        // the standard monomials are independent modulo the jet kernel
        let one = q(1);
        let rows: Vec<Vec<Rational>> = std.iter().map(|a| jet([(a, &one)], k)).collect();
        assert_eq!(rank(&rows), std.len());
        assert_eq!(rows[0].len(), std.len());
        // and every monomial reduces into their span without changing its jet
        for a in ctx.enumerate_below(&v(1, 1), 6 * k + 6).unwrap() {
            let m = QPolynomial::monomial(ctx, a, q(1)).unwrap();
            let nf = normal_form(&m, &gb);
            assert!(nf.support().all(|e| std.contains(e)));
            assert_eq!(jet(nf.terms().iter(), k), jet(m.terms().iter(), k), "monomial {a}");
        }
    }
}

pub fn first_row_in_groebner_cone(n_max: u32, seed: u64) {
    let a3 = A3Context::new();
    let ctx = a3.semigroup();
    let mut r = rng(seed);
    for ord in random_orderings(ctx, &mut r, 6).iter().chain([a3.ordering()]) {
        for n in 1..=n_max {
            let gb = buchberger(&a3.jn::<Rational>(n), ord).unwrap();
            let gc = cone_of_basis(&gb, ctx.support_cone()).unwrap();
            assert!(gc.cone.contains(&ord.rows()[0]), "rows {:?} cone {}", ord.rows(), gc.cone);
        }
    }
}

pub fn initial_ideals_not_nested(n_max: u32) {
    let a3 = A3Context::new();
    let ctx = a3.semigroup();
    for n in 1..=n_max {
        let cones = groebner_fan(&a3.jn::<Rational>(n)).unwrap();
        for a in &cones {
            for b in &cones {
                let contained = a.basis.marks().iter().all(|m| b.basis.marks().iter().any(|d| ctx.divides(d, m)));
                assert_eq!(contained, a.basis.marks() == b.basis.marks(), "{} vs {}", a.cone, b.cone);
            }
        }
    }
}

pub fn specialization_kernel(samples: usize, seed: u64) {
    let a3 = A3Context::new();
    let ctx = a3.semigroup();
    let uv1 = QPolynomial::binomial_minus_one(ctx, v(1, 1)).unwrap();
    let principal = buchberger(&Ideal::new(vec![uv1.clone()]).unwrap(), a3.ordering()).unwrap();
    let mut r = rng(seed);
    for i in 0..samples {
        let f = random_poly(&mut r, ctx, 3, 5);
        // half the samples are forced into the kernel
        let f = if i % 2 == 0 { f.mul(&uv1).unwrap() } else { f };
        assert_eq!(phi_specialize(&f).unwrap().is_zero(), normal_form(&f, &principal).is_zero(), "{f}");
    }
}

/// Every seeded check at the sizes used by the test suite.
pub fn all() {
    a3_min_common_multiples(200, 7);
    ordering_axioms(1000, 11);
    initial_forms_multiply(200, 13);
    reduced_basis_uniqueness(17);
    s_polynomials_reduce_to_zero(4);
    quotient_dimension_matches_jets(4);
    first_row_in_groebner_cone(2, 19);
    bases_stable_inside_cones(2, 20, 23);
    initial_ideals_not_nested(2);
    specialization_kernel(200, 29);
}
