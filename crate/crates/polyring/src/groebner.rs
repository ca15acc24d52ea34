//! Buchberger's algorithm with the product and chain criteria
//! (Gebauer-Moeller pair pruning) and the normal selection strategy.
//!
//! The public entry points are [`groebner_basis`], which returns the unique
//! reduced Groebner basis (monic, auto-reduced, sorted descending by leading
//! monomial), and [`normal_form`], the unique remainder on division by a
//! Groebner basis.

use crate::budget::Budget;
use crate::error::AlgebraError;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Coef, Polynomial};
use num::{One, Signed, Zero};
use std::cmp::Ordering;

/// Working representation: terms sorted strictly descending under the run's
/// order, no zero coefficients.
#[derive(Clone, Debug)]
struct WPoly {
    terms: Vec<(Monomial, Coef)>,
}

impl WPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        WPoly {
            terms: p.sorted_terms(order),
        }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Coef {
        &self.terms[0].1
    }

    /// Multiply through by the positive rational making all coefficients
    /// coprime integers with a positive leading coefficient. Keeps
    /// coefficient growth in check during long runs.
    fn normalize(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut den_lcm = num::BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = num::BigInt::zero();
        for (_, c) in &self.terms {
            num_gcd = num::integer::gcd(num_gcd, c.numer() * &den_lcm / c.denom());
        }
        let mut factor = Coef::new(den_lcm, num_gcd);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        if !factor.is_one() {
            for (_, c) in &mut self.terms {
                *c *= &factor;
            }
        }
    }

    fn make_monic(&mut self) {
        if let Some((_, c0)) = self.terms.first() {
            let inv = c0.recip();
            if !inv.is_one() {
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }
}

/// `a - (m * c) * b` as a merge of sorted term lists.
fn sub_mul(
    a: &[(Monomial, Coef)],
    b: &[(Monomial, Coef)],
    m: &Monomial,
    c: &Coef,
    order: &MonomialOrder,
) -> Vec<(Monomial, Coef)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.compare(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, -(&b[j].1 * c)));
                j += 1;
            }
            Ordering::Equal => {
                let coef = &a[i].1 - &b[j].1 * c;
                if !coef.is_zero() {
                    out.push((a[i].0.clone(), coef));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((b[j].0.mul(m), -(&b[j].1 * c)));
        j += 1;
    }
    out
}

/// Full normal form of `f` against `basis`: every term of the remainder is
/// reducible by no basis leading monomial.
fn reduce_full(f: WPoly, basis: &[WPoly], skip: Option<usize>, order: &MonomialOrder) -> WPoly {
    let mut head: Vec<(Monomial, Coef)> = Vec::new();
    let mut tail = f.terms;
    'outer: while let Some((lt, lc)) = tail.first().cloned() {
        let mut best: Option<usize> = None;
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip || g.is_zero() {
                continue;
            }
            if g.lm().deg() <= lt.deg() && g.lm().divides(&lt) {
                best = match best {
                    Some(b) if basis[b].terms.len() <= g.terms.len() => Some(b),
                    _ => Some(k),
                };
                if basis[k].terms.len() == 1 {
                    break;
                }
            }
        }
        match best {
            Some(k) => {
                let g = &basis[k];
                let m = lt.try_div(g.lm()).unwrap();
                let c = &lc / g.lc();
                tail = sub_mul(&tail, &g.terms, &m, &c, order);
                continue 'outer;
            }
            None => {
                head.push((lt, lc));
                tail.remove(0);
            }
        }
    }
    WPoly { terms: head }
}

/// S-polynomial of `f` and `g`.
fn s_poly(f: &WPoly, g: &WPoly, order: &MonomialOrder) -> WPoly {
    let lcm = f.lm().lcm(g.lm());
    let mf = lcm.try_div(f.lm()).unwrap();
    let mg = lcm.try_div(g.lm()).unwrap();
    // f/lc(f) * mf - g/lc(g) * mg, merged directly.
    let scaled_f: Vec<(Monomial, Coef)> = f
        .terms
        .iter()
        .map(|(m, c)| (m.mul(&mf), c / f.lc()))
        .collect();
    let c = Coef::one() / g.lc();
    let terms = sub_mul(&scaled_f, &g.terms, &mg, &c, order);
    WPoly { terms }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Moeller update: add element `t` to the pair set, applying the
/// product criterion and both chain criteria.
fn update_pairs(g: &[WPoly], pairs: &mut Vec<Pair>, t: usize) {
    let lt = g[t].lm().clone();

    // Chain criterion on old pairs: drop (i, j) when the new leading monomial
    // divides lcm(i, j) strictly on both sides.
    pairs.retain(|p| {
        !(lt.divides(&p.lcm)
            && g[p.i].lm().lcm(&lt) != p.lcm
            && g[p.j].lm().lcm(&lt) != p.lcm)
    });

    // Candidate new pairs (i, t).
    let mut cand: Vec<Pair> = (0..t)
        .filter(|&i| !g[i].is_zero())
        .map(|i| Pair {
            i,
            j: t,
            lcm: g[i].lm().lcm(&lt),
        })
        .collect();

    // First Gebauer-Moeller criterion: remove candidates whose lcm is a
    // proper multiple of another candidate's lcm; among equal lcms keep one,
    // preferring a pair that satisfies the product criterion (which is then
    // dropped wholesale below).
    let mut keep: Vec<bool> = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[a] {
                continue;
            }
            if keep[b] && cand[b].lcm.divides(&cand[a].lcm) && cand[b].lcm != cand[a].lcm {
                keep[a] = false;
            }
        }
    }
    // Equal-lcm classes: keep a single representative, preferring coprime
    // leading monomials so the product criterion can kill the whole class.
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in (a + 1)..cand.len() {
            if keep[b] && cand[a].lcm == cand[b].lcm {
                let a_coprime = g[cand[a].i].lm().coprime(&lt);
                let b_coprime = g[cand[b].i].lm().coprime(&lt);
                if b_coprime && !a_coprime {
                    keep[a] = false;
                } else {
                    keep[b] = false;
                }
            }
        }
    }
    // Product criterion.
    for (k, p) in cand.iter().enumerate() {
        if keep[k] && g[p.i].lm().coprime(&lt) {
            keep[k] = false;
        }
    }

    let mut k = 0;
    cand.retain(|_| {
        let r = keep[k];
        k += 1;
        r
    });
    pairs.extend(cand);
}

/// Compute a Groebner basis of the ideal generated by `gens` and return the
/// unique reduced basis: monic, auto-reduced, sorted descending by leading
/// monomial.
pub fn groebner_basis(
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Polynomial>, AlgebraError> {
    let nvars = gens.iter().map(|p| p.nvars()).max().unwrap_or(0);
    let mut g: Vec<WPoly> = Vec::new();

    // Seed with the interreduced input; repeated mutual reduction both
    // shrinks the system and performs any available linear substitutions.
    let mut seed: Vec<WPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| WPoly::from_poly(p, order))
        .collect();
    loop {
        let mut changed = false;
        for k in 0..seed.len() {
            let f = std::mem::replace(&mut seed[k], WPoly { terms: Vec::new() });
            if f.is_zero() {
                continue;
            }
            let before = f.terms.len();
            let before_lm = f.terms[0].0.clone();
            let mut r = reduce_full(f, &seed, Some(k), order);
            r.normalize();
            if r.is_zero() || r.terms.len() != before || r.terms[0].0 != before_lm {
                changed = true;
            }
            seed[k] = r;
        }
        seed.retain(|p| !p.is_zero());
        if !changed {
            break;
        }
    }

    let mut pairs: Vec<Pair> = Vec::new();
    for p in seed {
        g.push(p);
        update_pairs(&g, &mut pairs, g.len() - 1);
    }

    let mut max_degree_seen: u32 = 0;
    while !pairs.is_empty() {
        budget.check("groebner", max_degree_seen, g.len())?;

        // Normal selection: minimal lcm under the active order.
        let mut best = 0;
        for k in 1..pairs.len() {
            if order.compare(&pairs[k].lcm, &pairs[best].lcm) == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        max_degree_seen = max_degree_seen.max(pair.lcm.deg());

        let s = s_poly(&g[pair.i], &g[pair.j], order);
        let mut r = reduce_full(s, &g, None, order);
        if r.is_zero() {
            continue;
        }
        r.normalize();
        g.push(r);
        update_pairs(&g, &mut pairs, g.len() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another leading monomial.
    let mut keep = vec![true; g.len()];
    for i in 0..g.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..g.len() {
            if i != j
                && keep[j]
                && g[j].lm().divides(g[i].lm())
                && (g[j].lm() != g[i].lm() || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<WPoly> = g
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();

    // Interreduce tails and make monic.
    let snapshot = minimal.clone();
    for (k, p) in minimal.iter_mut().enumerate() {
        let f = std::mem::replace(p, WPoly { terms: Vec::new() });
        let mut r = reduce_full(f, &snapshot, Some(k), order);
        r.make_monic();
        *p = r;
    }
    minimal.retain(|p| !p.is_zero());
    minimal.sort_by(|a, b| order.compare(b.lm(), a.lm()));
    Ok(minimal.into_iter().map(|p| p.to_poly(nvars)).collect())
}

/// Unique remainder of `f` on division by `basis` (a Groebner basis for its
/// ideal under `order`).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    if basis.is_empty() {
        return f.clone();
    }
    let nvars = f.nvars();
    let w = WPoly::from_poly(f, order);
    let b: Vec<WPoly> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| WPoly::from_poly(p, order))
        .collect();
    reduce_full(w, &b, None, order).to_poly(nvars)
}

/// S-polynomial as a public helper (used by the Groebner-axiom tests).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let nvars = f.nvars();
    let wf = WPoly::from_poly(f, order);
    let wg = WPoly::from_poly(g, order);
    if wf.is_zero() || wg.is_zero() {
        return Polynomial::zero(nvars);
    }
    s_poly(&wf, &wg, order).to_poly(nvars)
}

/// Check the Buchberger criterion directly: every S-polynomial of `basis`
/// reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !normal_form(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn gb(ring: &Ring, gens: &[&str]) -> Vec<Polynomial> {
        let ps: Vec<Polynomial> = gens.iter().map(|s| ring.parse_poly(s).unwrap()).collect();
        groebner_basis(&ps, &MonomialOrder::DegRevLex, &Budget::unlimited()).unwrap()
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let ring = Ring::numbered("x", 2);
        let z = Polynomial::zero(2);
        let b = groebner_basis(&[z], &MonomialOrder::DegRevLex, &Budget::unlimited()).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn plucker_quadric_is_its_own_basis() {
        let ring = Ring::numbered("x", 6);
        let b = gb(&ring, &["x1*x6 - x2*x5 + x3*x4"]);
        assert_eq!(b.len(), 1);
        assert_eq!(ring.fmt_poly(&b[0]), "x3*x4 - x2*x5 + x1*x6");
        let lm = b[0].leading_monomial(&MonomialOrder::DegRevLex).unwrap();
        assert_eq!(lm.exps(), &[0, 0, 1, 1, 0, 0]);
    }

    #[test]
    fn normal_form_single_division_step() {
        let ring = Ring::numbered("x", 6);
        let b = gb(&ring, &["x1*x6 - x2*x5 + x3*x4"]);
        let f = ring.parse_poly("x1*x3*x4").unwrap();
        let r = normal_form(&f, &b, &MonomialOrder::DegRevLex);
        assert_eq!(ring.fmt_poly(&r), "x1*x2*x5 - x1^2*x6");
    }

    #[test]
    fn normal_form_leaves_irreducible_terms() {
        let ring = Ring::numbered("x", 6);
        let b = gb(&ring, &["x1*x6 - x2*x5 + x3*x4"]);
        let f = ring.parse_poly("x1*x6").unwrap();
        let r = normal_form(&f, &b, &MonomialOrder::DegRevLex);
        assert_eq!(r, f);
    }

    #[test]
    fn katsura_like_system_reduces() {
        let ring = Ring::numbered("x", 3);
        let b = gb(
            &ring,
            &["x1^2 - x2", "x1*x2 - x3", "x2^2 - x1*x3"],
        );
        assert!(is_groebner_basis(&b, &MonomialOrder::DegRevLex));
        // x2^2 - x1*x3 is an S-polynomial consequence of the first two.
        let f = ring.parse_poly("x2^2 - x1*x3").unwrap();
        assert!(normal_form(&f, &b, &MonomialOrder::DegRevLex).is_zero());
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let ring = Ring::numbered("x", 3);
        let gens: Vec<Polynomial> = ["x1^2 - x2*x3", "x1*x2 - x3^2"]
            .iter()
            .map(|s| ring.parse_poly(s).unwrap())
            .collect();
        let tight = Budget::unlimited().max_degree(0);
        match groebner_basis(&gens, &MonomialOrder::DegRevLex, &tight) {
            Err(AlgebraError::BudgetExceeded { stage, .. }) => assert_eq!(stage, "groebner"),
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
