//! Ring contexts: variable names plus canonical printing.

use crate::error::ParseError;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::parse;
use crate::poly::Polynomial;
use num::{One, Signed, Zero};
use std::collections::HashMap;

/// A polynomial ring context: an ordered list of variable names. The listed
/// order is the significance order used by every monomial order on the ring
/// (earlier variables are more significant).
#[derive(Clone, Debug)]
pub struct Ring {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Ring {
    pub fn new(names: Vec<String>) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Ring { names, index }
    }

    /// Ring with variables `x1..xn` (1-based), matching the usual Cox-ring
    /// presentation conventions.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn parse_poly(&self, input: &str) -> Result<Polynomial, ParseError> {
        parse::parse_polynomial(self, input)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 1 {
                parts.push(self.names[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.names[i], e));
            }
        }
        parts.join("*")
    }

    /// Canonical serialization: terms descending under `order`, explicit `*`
    /// between factors, rational coefficients as `p/q`.
    pub fn fmt_poly_with(&self, p: &Polynomial, order: &MonomialOrder) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&format!("{abs}"));
            } else if abs.is_one() {
                out.push_str(&self.fmt_monomial(&m));
            } else {
                out.push_str(&format!("{abs}*{}", self.fmt_monomial(&m)));
            }
        }
        out
    }

    /// Canonical serialization under degrevlex.
    pub fn fmt_poly(&self, p: &Polynomial) -> String {
        self.fmt_poly_with(p, &MonomialOrder::DegRevLex)
    }

    /// Extend this ring by prepending fresh variables (used by saturation and
    /// intersection constructions, which eliminate the fresh block).
    pub fn prepend_vars(&self, fresh: &[&str]) -> Ring {
        let mut names: Vec<String> = fresh.iter().map(|s| s.to_string()).collect();
        names.extend(self.names.iter().cloned());
        Ring::new(names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_canonical_form() {
        let ring = Ring::numbered("x", 6);
        let p = ring.parse_poly("x1*x6 - x2*x5 + x3*x4").unwrap();
        let s = ring.fmt_poly(&p);
        assert_eq!(s, "x3*x4 - x2*x5 + x1*x6");
        let q = ring.parse_poly(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rational_and_power_formatting() {
        let ring = Ring::numbered("x", 2);
        let p = ring.parse_poly("3/4*x1^2 - x2 + 2").unwrap();
        assert_eq!(ring.fmt_poly(&p), "3/4*x1^2 - x2 + 2");
    }
}
