//! Monomial orders: degrevlex, lex, and block elimination orders.

use crate::monomial::Monomial;
use std::cmp::Ordering;

/// A total, multiplicative well-order on monomials.
///
/// `Block { front }` is the elimination order whose front block consists of
/// the *first* `front` variables: monomials are compared degrevlex on the
/// front block first, then degrevlex on the rest. A polynomial free of
/// front-block variables therefore compares entirely within the inner order.
/// Callers that need to eliminate an arbitrary variable set permute the
/// variables into a front block first (see [`crate::Ideal::eliminate`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block { front: usize },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::DegRevLex => degrevlex(a.exps(), b.exps()),
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::Block { front } => {
                let f = *front;
                match degrevlex(&a.exps()[..f], &b.exps()[..f]) {
                    Ordering::Equal => degrevlex(&a.exps()[f..], &b.exps()[f..]),
                    ord => ord,
                }
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the monomial with the smaller exponent at the last
    // differing position is the larger one.
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degrevlex_on_plucker_monomials() {
        // x3*x4 > x2*x5 > x1*x6 under degrevlex with x1 > ... > x6.
        let ord = MonomialOrder::DegRevLex;
        let x3x4 = m(&[0, 0, 1, 1, 0, 0]);
        let x2x5 = m(&[0, 1, 0, 0, 1, 0]);
        let x1x6 = m(&[1, 0, 0, 0, 0, 1]);
        assert_eq!(ord.compare(&x3x4, &x2x5), Ordering::Greater);
        assert_eq!(ord.compare(&x2x5, &x1x6), Ordering::Greater);
        assert_eq!(ord.compare(&x3x4, &x1x6), Ordering::Greater);
    }

    #[test]
    fn one_is_minimal() {
        let ord = MonomialOrder::DegRevLex;
        let one = Monomial::one(3);
        for i in 0..3 {
            assert_eq!(ord.compare(&Monomial::var(i, 3), &one), Ordering::Greater);
        }
    }

    #[test]
    fn multiplicative() {
        let ord = MonomialOrder::DegRevLex;
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 1, 0]);
        let c = m(&[0, 3, 1]);
        let ab = a.mul(&c);
        let bb = b.mul(&c);
        assert_eq!(ord.compare(&a, &b), ord.compare(&ab, &bb));
    }

    #[test]
    fn block_order_eliminates_front() {
        // Front block = first variable. Any monomial containing it beats any
        // monomial without it.
        let ord = MonomialOrder::Block { front: 1 };
        let t = m(&[1, 0, 0]);
        let xy2 = m(&[0, 1, 2]);
        assert_eq!(ord.compare(&t, &xy2), Ordering::Greater);
        // Free of the front block: plain degrevlex on the rest.
        let x = m(&[0, 1, 0]);
        let y = m(&[0, 0, 1]);
        assert_eq!(ord.compare(&x, &y), Ordering::Greater);
    }
}
