//! Polynomials with exact rational coefficients.

use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;

pub type Coef = BigRational;

/// A multivariate polynomial: a finite map from monomials to nonzero rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coef>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Coef::one())
    }

    pub fn constant(nvars: usize, c: Coef) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, Coef)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        Polynomial::from_terms(nvars, [(m, Coef::one())])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Polynomial::monomial(Monomial::var(i, nvars))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coef)> {
        self.terms.iter()
    }

    pub fn coef(&self, m: &Monomial) -> Option<&Coef> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coef) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coef) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coef) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in self.terms.iter() {
            for (mm, cc) in other.terms.iter() {
                out.add_term(m.mul(mm), c * cc);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Total degree; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.deg()).max().unwrap_or(0)
    }

    /// Leading term under `order`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coef)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.compare(a, b))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading(order).map(|(m, _)| m)
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Coef)> {
        let mut v: Vec<(Monomial, Coef)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|(a, _), (b, _)| order.compare(b, a));
        v
    }

    /// Divide by the leading coefficient so the leading term is monic.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Multiply by the unique positive rational that makes all coefficients
    /// coprime integers with positive leading coefficient under `order`.
    pub fn integer_primitive(&self, order: &MonomialOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * &den_lcm / c.denom();
            num_gcd = num::integer::gcd(num_gcd, n);
        }
        let mut factor = Coef::new(den_lcm, num_gcd);
        if self.leading(order).map(|(_, c)| c.is_negative()) == Some(true) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// True when every term is a constant multiple of a single monomial.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when all exponents of all monomials are 0 or 1.
    pub fn is_squarefree(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.exps().iter().all(|&e| e <= 1))
    }

    /// Rebuild in a ring with `new_nvars` variables via an injective variable map.
    pub fn map_vars(&self, new_nvars: usize, map: impl Fn(usize) -> usize + Copy) -> Polynomial {
        Polynomial {
            nvars: new_nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.map_vars(new_nvars, map), c.clone()))
                .collect(),
        }
    }

    /// Largest variable index actually used, if any term is nonconstant.
    pub fn max_used_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.support().into_iter().max())
            .max()
    }

    /// True when no monomial uses a variable for which `dropped` returns true.
    pub fn avoids_vars(&self, dropped: impl Fn(usize) -> bool + Copy) -> bool {
        self.terms
            .keys()
            .all(|m| m.support().iter().all(|&i| !dropped(i)))
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*{:?}", c, m)?;
            first = false;
        }
        Ok(())
    }
}
