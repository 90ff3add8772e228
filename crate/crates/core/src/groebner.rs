//! Division, Buchberger completion and reduced marked Gröbner bases in S.
//!
//! Divisibility is always divisibility inside the semigroup ring, and an
//! S-pair is formed at every minimal common multiple of two marks (in a
//! non-free semigroup there can be several).

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap, VecDeque};
use std::sync::Arc;

use crate::algebra::{same_ctx, MatrixOrdering, SemigroupPolynomial};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::semigroup::AffineSemigroup;
use crate::LatticeVector;

/// Upper bound on S-pair reductions per completion.
pub const MAX_PAIR_REDUCTIONS: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct Ideal<C> {
    generators: Vec<SemigroupPolynomial<C>>,
}

impl<C: Coefficient> PartialEq for Ideal<C> {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl<C: Coefficient> Ideal<C> {
    pub fn new(generators: Vec<SemigroupPolynomial<C>>) -> Result<Self> {
        let first = generators.first().ok_or_else(|| Error::Parse("an ideal needs at least one generator".into()))?;
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        if !generators.iter().all(|g| same_ctx(g.context(), first.context())) {
            return Err(Error::ContextMismatch);
        }
        Ok(Ideal { generators })
    }

    pub fn generators(&self) -> &[SemigroupPolynomial<C>] {
        &self.generators
    }

    pub fn context(&self) -> &Arc<AffineSemigroup> {
        self.generators[0].context()
    }
}

/// A monic polynomial together with its leading monomial.
#[derive(Clone, Debug)]
pub struct MarkedPolynomial<C> {
    pub poly: SemigroupPolynomial<C>,
    pub mark: LatticeVector,
}

impl<C: Coefficient> PartialEq for MarkedPolynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.mark == other.mark && self.poly == other.poly
    }
}

impl<C: Coefficient> MarkedPolynomial<C> {
    /// Terms other than the mark.
    pub fn tail(&self) -> impl Iterator<Item = &LatticeVector> + '_ {
        self.poly.support().filter(move |e| **e != self.mark)
    }
}

/// A reduced Gröbner basis with its marks, elements sorted by ascending mark.
///
/// Equality compares the set of (polynomial, mark) pairs and ignores which
/// ordering produced them.
#[derive(Clone, Debug)]
pub struct MarkedBasis<C> {
    elements: Vec<MarkedPolynomial<C>>,
    ordering: MatrixOrdering,
}

impl<C: Coefficient> PartialEq for MarkedBasis<C> {
    fn eq(&self, other: &Self) -> bool {
        fn sorted<C>(b: &MarkedBasis<C>) -> Vec<&MarkedPolynomial<C>> {
            let mut v: Vec<&MarkedPolynomial<C>> = b.elements.iter().collect();
            v.sort_by_key(|e| e.mark);
            v
        }
        sorted(self) == sorted(other)
    }
}

impl<C: Coefficient> MarkedBasis<C> {
    /// Checks monicity, marks and reducedness; does not check the Gröbner property.
    pub fn new(mut elements: Vec<MarkedPolynomial<C>>, ordering: MatrixOrdering) -> Result<Self> {
        for e in &elements {
            if !same_ctx(e.poly.context(), ordering.context()) {
                return Err(Error::ContextMismatch);
            }
            let lm = ordering.leading_monomial(&e.poly)?;
            if lm != e.mark || !e.poly.coeff(&lm).is_one() {
                return Err(Error::Parse(format!("element marked {} is not monic with that leading monomial", e.mark)));
            }
        }
        elements.sort_by(|a, b| ordering.compare(&a.mark, &b.mark));
        let basis = MarkedBasis { elements, ordering };
        if !basis.is_reduced() {
            return Err(Error::Parse("marked basis is not reduced".into()));
        }
        Ok(basis)
    }

    pub fn elements(&self) -> &[MarkedPolynomial<C>] {
        &self.elements
    }

    pub fn ordering(&self) -> &MatrixOrdering {
        &self.ordering
    }

    pub fn context(&self) -> &Arc<AffineSemigroup> {
        self.ordering.context()
    }

    pub fn marks(&self) -> BTreeSet<LatticeVector> {
        self.elements.iter().map(|e| e.mark).collect()
    }

    pub fn element_with_mark(&self, mark: &LatticeVector) -> Option<&MarkedPolynomial<C>> {
        self.elements.iter().find(|e| e.mark == *mark)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// No monomial of any element is divisible by the mark of another element.
    pub fn is_reduced(&self) -> bool {
        let sg = self.context();
        let marks: Vec<_> = self.elements.iter().map(|e| e.mark).collect();
        if marks.iter().collect::<BTreeSet<_>>().len() != marks.len() {
            return false;
        }
        self.elements
            .iter()
            .enumerate()
            .all(|(i, e)| e.poly.support().all(|m| marks.iter().enumerate().all(|(j, a)| i == j || !sg.divides(a, m))))
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let sg = self.context();
        for (i, a) in self.elements.iter().enumerate() {
            for b in &self.elements[i + 1..] {
                for s in s_polynomials(a, b, sg) {
                    if !normal_form(&s, self).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// One S-polynomial per minimal common multiple of the two marks.
pub fn s_polynomials<C: Coefficient>(
    p1: &MarkedPolynomial<C>,
    p2: &MarkedPolynomial<C>,
    sg: &AffineSemigroup,
) -> Vec<SemigroupPolynomial<C>> {
    let one = C::one();
    sg.min_common_multiples(&p1.mark, &p2.mark)
        .into_iter()
        .map(|m| {
            let a = p1.poly.shift_scale(&(m - p1.mark), &one);
            let b = p2.poly.shift_scale(&(m - p2.mark), &one);
            a.sub_unchecked(&b)
        })
        .collect()
}

type Key = [i64; 2];

fn add_key(a: &Key, b: &Key) -> Key {
    [a[0] + b[0], a[1] + b[1]]
}

/// A monic basis element with ordering keys precomputed; tail terms only.
struct Reducer<C> {
    mark: LatticeVector,
    tail: Vec<(Key, LatticeVector, C)>,
}

impl<C: Coefficient> Reducer<C> {
    fn new(p: &MarkedPolynomial<C>, ord: &MatrixOrdering) -> Self {
        let tail = p
            .poly
            .terms()
            .iter()
            .filter(|(e, _)| **e != p.mark)
            .map(|(e, c)| (ord.compact_key(e), *e, c.clone()))
            .collect();
        Reducer { mark: p.mark, tail }
    }
}

/// Polynomial keyed by ordering key for fast access to the leading term.
struct Work<C> {
    terms: BTreeMap<Key, (LatticeVector, C)>,
}

impl<C: Coefficient> Work<C> {
    fn from_poly(f: &SemigroupPolynomial<C>, ord: &MatrixOrdering) -> Self {
        let terms = f.terms().iter().map(|(e, c)| (ord.compact_key(e), (*e, c.clone()))).collect();
        Work { terms }
    }

    fn add(&mut self, key: Key, exp: LatticeVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some((_, old)) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(key, (exp, c));
            }
        }
    }
}

/// Full reduction of `f`. Reducers must be sorted by ascending mark.
fn reduce_full<C: Coefficient>(
    f: Work<C>,
    reducers: &[Reducer<C>],
    ord: &MatrixOrdering,
    ctx: &Arc<AffineSemigroup>,
) -> SemigroupPolynomial<C> {
    let mut work = f;
    let mut rem = SemigroupPolynomial::zero(ctx);
    while let Some((_, (e, c))) = work.terms.pop_last() {
        match reducers.iter().find(|r| ctx.divides(&r.mark, &e)) {
            Some(r) => {
                let shift = e - r.mark;
                let sk = ord.compact_key(&shift);
                for (k, t, tc) in &r.tail {
                    work.add(add_key(k, &sk), *t + shift, -(c.clone() * tc.clone()));
                }
            }
            None => rem.add_term(e, c),
        }
    }
    rem
}

fn reducers_of<C: Coefficient>(elements: &[MarkedPolynomial<C>], ord: &MatrixOrdering) -> Vec<Reducer<C>> {
    let mut sorted: Vec<&MarkedPolynomial<C>> = elements.iter().collect();
    sorted.sort_by(|a, b| ord.compare(&a.mark, &b.mark));
    sorted.into_iter().map(|p| Reducer::new(p, ord)).collect()
}

/// Remainder of `f` on division by `basis`.
///
/// The ≼-largest reducible monomial is always eliminated first, using the
/// element with the ≼-smallest mark that divides it; every monomial of the
/// result is a standard monomial.
pub fn normal_form<C: Coefficient>(f: &SemigroupPolynomial<C>, basis: &MarkedBasis<C>) -> SemigroupPolynomial<C> {
    let ord = &basis.ordering;
    let reducers = reducers_of(&basis.elements, ord);
    reduce_full(Work::from_poly(f, ord), &reducers, ord, f.context())
}

pub fn ideal_membership<C: Coefficient>(f: &SemigroupPolynomial<C>, basis: &MarkedBasis<C>) -> bool {
    normal_form(f, basis).is_zero()
}

/// Whether h lies in (I : f), i.e. h·f ∈ I.
pub fn colon_contains<C: Coefficient>(
    basis: &MarkedBasis<C>,
    f: &SemigroupPolynomial<C>,
    h: &SemigroupPolynomial<C>,
) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(ideal_membership(&h.mul(f)?, basis))
}

#[derive(PartialEq, Eq)]
struct Pair {
    key: Key,
    i: usize,
    j: usize,
    lcm: LatticeVector,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key).then_with(|| (self.i, self.j, self.lcm).cmp(&(other.i, other.j, other.lcm)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The reduced marked Gröbner basis of `ideal` with respect to `ord`.
pub fn buchberger<C: Coefficient>(ideal: &Ideal<C>, ord: &MatrixOrdering) -> Result<MarkedBasis<C>> {
    let ctx = ideal.context().clone();
    if !same_ctx(&ctx, ord.context()) {
        return Err(Error::ContextMismatch);
    }
    let mut basis: Vec<MarkedPolynomial<C>> = Vec::new();
    let mut reducers: Vec<Reducer<C>> = Vec::new();
    let mut queue: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();

    // unprocessed S-pairs per index pair (i, j), i < j
    let mut pending: HashMap<(usize, usize), usize> = HashMap::new();

    let push = |f: SemigroupPolynomial<C>,
                basis: &mut Vec<MarkedPolynomial<C>>,
                reducers: &mut Vec<Reducer<C>>,
                queue: &mut BinaryHeap<Reverse<Pair>>,
                pending: &mut HashMap<(usize, usize), usize>|
     -> Result<()> {
        let f = ord.monic(&f)?;
        let mark = ord.leading_monomial(&f)?;
        let new = MarkedPolynomial { poly: f, mark };
        let j = basis.len();
        for (i, old) in basis.iter().enumerate() {
            let mcms = ctx.min_common_multiples(&old.mark, &mark);
            pending.insert((i, j), mcms.len());
            for lcm in mcms {
                queue.push(Reverse(Pair { key: ord.compact_key(&lcm), i, j, lcm }));
            }
        }
        let r = Reducer::new(&new, ord);
        let pos = reducers.partition_point(|x| ord.compare(&x.mark, &mark) != Ordering::Greater);
        reducers.insert(pos, r);
        basis.push(new);
        Ok(())
    };

    for g in ideal.generators() {
        let r = reduce_full(Work::from_poly(g, ord), &reducers, ord, &ctx);
        if !r.is_zero() {
            push(r, &mut basis, &mut reducers, &mut queue, &mut pending)?;
        }
    }

    let mut reductions = 0usize;
    while let Some(Reverse(pair)) = queue.pop() {
        *pending.get_mut(&(pair.i, pair.j)).expect("pair is tracked") -= 1;
        // Chain criterion: if some mark divides the common multiple and both
        // pairs through it are done, this S-polynomial has a smaller representation.
        let done = |a: usize, b: usize| pending.get(&(a.min(b), a.max(b))).is_none_or(|&c| c == 0);
        let chained = (0..basis.len()).any(|k| {
            k != pair.i && k != pair.j && ctx.divides(&basis[k].mark, &pair.lcm) && done(pair.i, k) && done(pair.j, k)
        });
        if chained {
            continue;
        }
        reductions += 1;
        if reductions > MAX_PAIR_REDUCTIONS {
            return Err(Error::PairQueueExhausted(MAX_PAIR_REDUCTIONS));
        }
        let (a, b) = (&basis[pair.i], &basis[pair.j]);
        let mut work = Work { terms: BTreeMap::new() };
        let sa = pair.lcm - a.mark;
        let sb = pair.lcm - b.mark;
        let (ka, kb) = (ord.compact_key(&sa), ord.compact_key(&sb));
        for (e, c) in a.poly.terms() {
            if *e != a.mark {
                work.add(add_key(&ord.compact_key(e), &ka), *e + sa, c.clone());
            }
        }
        for (e, c) in b.poly.terms() {
            if *e != b.mark {
                work.add(add_key(&ord.compact_key(e), &kb), *e + sb, -c.clone());
            }
        }
        let r = reduce_full(work, &reducers, ord, &ctx);
        if !r.is_zero() {
            push(r, &mut basis, &mut reducers, &mut queue, &mut pending)?;
        }
    }

    Ok(MarkedBasis { elements: interreduce(basis, ord, &ctx), ordering: ord.clone() })
}

/// Drops elements with redundant marks and fully reduces the survivors.
fn interreduce<C: Coefficient>(
    mut basis: Vec<MarkedPolynomial<C>>,
    ord: &MatrixOrdering,
    ctx: &Arc<AffineSemigroup>,
) -> Vec<MarkedPolynomial<C>> {
    basis.sort_by(|a, b| ord.compare(&a.mark, &b.mark));
    let mut minimal: Vec<MarkedPolynomial<C>> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && ctx.divides(&q.mark, &p.mark) && (q.mark != p.mark || j < i));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    (0..minimal.len())
        .map(|i| {
            let others: Vec<MarkedPolynomial<C>> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
            let reducers = reducers_of(&others, ord);
            let poly = reduce_full(Work::from_poly(&minimal[i].poly, ord), &reducers, ord, ctx);
            MarkedPolynomial { poly, mark: minimal[i].mark }
        })
        .collect()
}

/// σ_Z minus the monomial ideal generated by the marks, if it has at most `cap` elements.
pub fn standard_monomials<C: Coefficient>(basis: &MarkedBasis<C>, cap: usize) -> Result<BTreeSet<LatticeVector>> {
    let sg = basis.context();
    let marks: Vec<LatticeVector> = basis.elements.iter().map(|e| e.mark).collect();
    let standard = |p: &LatticeVector| !marks.iter().any(|m| sg.divides(m, p));
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let origin = LatticeVector::zero();
    if standard(&origin) {
        seen.insert(origin);
        queue.push_back(origin);
    }
    // The complement of a monomial ideal is closed under taking divisors, so
    // walking generator steps from 1 reaches all of it.
    while let Some(p) = queue.pop_front() {
        for g in sg.generators() {
            let q = p + *g;
            if !seen.contains(&q) && standard(&q) {
                if seen.len() >= cap {
                    return Err(Error::QuotientNotFinite(cap));
                }
                seen.insert(q);
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}
