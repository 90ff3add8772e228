use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::semigroup::AffineSemigroup;
use crate::LatticeVector;

/// An element of the semigroup ring S = k[σ_Z].
///
/// Terms are keyed by exponent in lexicographic order; zero coefficients are
/// never stored.
#[derive(Clone, Debug)]
pub struct SemigroupPolynomial<C> {
    terms: BTreeMap<LatticeVector, C>,
    ctx: Arc<AffineSemigroup>,
}

pub(crate) fn same_ctx(a: &Arc<AffineSemigroup>, b: &Arc<AffineSemigroup>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<C: Coefficient> PartialEq for SemigroupPolynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ctx(&self.ctx, &other.ctx)
    }
}

impl<C: Coefficient> SemigroupPolynomial<C> {
    pub fn zero(ctx: &Arc<AffineSemigroup>) -> Self {
        SemigroupPolynomial { terms: BTreeMap::new(), ctx: ctx.clone() }
    }

    pub fn one(ctx: &Arc<AffineSemigroup>) -> Self {
        Self::constant(ctx, C::one())
    }

    pub fn constant(ctx: &Arc<AffineSemigroup>, c: C) -> Self {
        Self::term_unchecked(ctx, LatticeVector::zero(), c)
    }

    /// c·x^exp.
    pub fn monomial(ctx: &Arc<AffineSemigroup>, exp: LatticeVector, c: C) -> Result<Self> {
        if !ctx.is_member(&exp) {
            return Err(Error::NotInSemigroup(exp.to_string()));
        }
        Ok(Self::term_unchecked(ctx, exp, c))
    }

    pub(crate) fn term_unchecked(ctx: &Arc<AffineSemigroup>, exp: LatticeVector, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        SemigroupPolynomial { terms, ctx: ctx.clone() }
    }

    /// x^exp - 1.
    pub fn binomial_minus_one(ctx: &Arc<AffineSemigroup>, exp: LatticeVector) -> Result<Self> {
        let m = Self::monomial(ctx, exp, C::one())?;
        Ok(m.sub_unchecked(&Self::one(ctx)))
    }

    /// Sums coefficients of repeated exponents.
    pub fn from_terms<I>(ctx: &Arc<AffineSemigroup>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticeVector, C)>,
    {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            if !ctx.is_member(&e) {
                return Err(Error::NotInSemigroup(e.to_string()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn context(&self) -> &Arc<AffineSemigroup> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<LatticeVector, C> {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &LatticeVector> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, exp: &LatticeVector) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, exp: LatticeVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let s = old.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())).collect();
        SemigroupPolynomial { terms, ctx: self.ctx.clone() }
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, a)| (*e, -a.clone())).collect();
        SemigroupPolynomial { terms, ctx: self.ctx.clone() }
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// c·x^shift·self; `shift` must be a member.
    pub fn shift_scale(&self, shift: &LatticeVector, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(e, a)| (*e + *shift, a.clone() * c.clone())).collect();
        SemigroupPolynomial { terms, ctx: self.ctx.clone() }
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub(crate) fn sub_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(*e1 + *e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Terms of maximal w-degree; in_w(0) = 0. Requires w ∈ σ.
    pub fn initial_form(&self, w: &LatticeVector) -> Result<Self> {
        if !self.ctx.support_cone().contains(w) {
            return Err(Error::WeightOutsideSigma(w.to_string()));
        }
        let Some(m) = self.terms.keys().map(|e| e.dot(w)).max() else {
            return Ok(self.clone());
        };
        let terms = self.terms.iter().filter(|(e, _)| e.dot(w) == m).map(|(e, c)| (*e, c.clone())).collect();
        Ok(SemigroupPolynomial { terms, ctx: self.ctx.clone() })
    }

    /// Human-readable form in the variables u, v, terms in the given order.
    pub fn render_terms<'a, I>(order: I, highlight: Option<&LatticeVector>) -> String
    where
        I: IntoIterator<Item = (&'a LatticeVector, &'a C)>,
    {
        let mut out = String::new();
        for (i, (e, c)) in order.into_iter().enumerate() {
            let mut coeff = c.to_string();
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = render_monomial(e);
            let mono = if highlight == Some(e) { format!("[{mono}]") } else { mono };
            if e.is_zero() {
                if highlight == Some(e) {
                    out.push_str(&format!("[{coeff}]"));
                } else {
                    out.push_str(&coeff);
                }
            } else if coeff == "1" {
                out.push_str(&mono);
            } else if coeff.contains('/') {
                out.push_str(&format!("({coeff})*{mono}"));
            } else {
                out.push_str(&format!("{coeff}*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// u^a v^b, with exponent 1 elided.
pub fn render_monomial(e: &LatticeVector) -> String {
    fn var(name: char, k: i64) -> String {
        match k {
            0 => String::new(),
            1 => name.to_string(),
            k => format!("{name}^{k}"),
        }
    }
    if e.is_zero() {
        return "1".to_string();
    }
    format!("{}{}", var('u', e.x), var('v', e.y))
}

impl<C: Coefficient> fmt::Display for SemigroupPolynomial<C> {
    /// Terms in descending lexicographic exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Self::render_terms(self.terms.iter().rev(), None))
    }
}
