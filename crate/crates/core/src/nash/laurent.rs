//! One-variable Laurent polynomials k[λ, λ^-1].

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Coefficient;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPolynomial<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> LaurentPolynomial<C> {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }

    pub fn monomial(exp: i64, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// λ - 1.
    pub fn lambda_minus_one() -> Self {
        let mut p = Self::monomial(1, C::one());
        p.add_term(0, -C::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<i64, C> {
        &self.terms
    }

    pub fn coeff(&self, e: i64) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let s = self.coeff(e) + c;
        if s.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())))
    }

    /// λ^k · self.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Exact quotient by (λ - 1), or `None` if it leaves a remainder.
    pub fn div_lambda_minus_one(&self) -> Option<Self> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Some(Self::zero());
        };
        // synthetic division from the top coefficient down
        let mut q = Self::zero();
        let mut carry = C::zero();
        for e in (lo + 1..=hi).rev() {
            carry = carry + self.coeff(e);
            q.add_term(e - 1, carry.clone());
        }
        let rem = carry + self.coeff(lo);
        rem.is_zero().then_some(q)
    }

    /// Whether (λ - 1)^k divides self in the Laurent ring.
    pub fn divisible_by_lambda_minus_one_power(&self, k: u32) -> bool {
        let mut cur = self.clone();
        for _ in 0..k {
            match cur.div_lambda_minus_one() {
                Some(q) => cur = q,
                None => return false,
            }
        }
        true
    }
}

impl<C: Coefficient> fmt::Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| match e {
                0 => format!("{c}"),
                1 => format!("({c})*L"),
                e => format!("({c})*L^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Solves Σ x_i · columns[i] = target over the coefficient field, if solvable.
pub(crate) fn solve_in_span<C: Coefficient>(columns: &[Vec<C>], target: &[C]) -> Option<Vec<C>> {
    let rows = target.len();
    let ncols = columns.len();
    // augmented row-major matrix
    let mut m: Vec<Vec<C>> = (0..rows)
        .map(|r| {
            let mut row: Vec<C> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = C::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![C::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    Some(x)
}
