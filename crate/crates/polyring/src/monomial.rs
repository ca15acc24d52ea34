//! Monomials as exponent vectors of fixed length.

use std::fmt;

/// A monomial `x^u` for an exponent vector `u` with nonnegative entries.
///
/// The vector length is fixed per ambient ring context; operations panic on a
/// length mismatch, which always indicates a programming error rather than bad
/// user input. The derived `Ord` is a structural order (lexicographic on the
/// exponent vector) used only for canonical storage; monomial *comparison* in
/// the algebraic sense goes through [`crate::MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    /// The monomial 1 in a ring with `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
        }
    }

    /// The single variable `x_i`.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0u16; nvars];
        exps[i] = 1;
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// Total degree.
    pub fn deg(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Degree in the first `front` variables (used by block orders).
    pub fn deg_front(&self, front: usize) -> u32 {
        self.exps[..front].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial::new(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u16) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e * k).collect(),
        }
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Rebuild the monomial in a ring with `new_nvars` variables, sending old
    /// variable `i` to `map(i)`. Distinct old variables must map to distinct
    /// new ones.
    pub fn map_vars(&self, new_nvars: usize, map: impl Fn(usize) -> usize) -> Monomial {
        let mut exps = vec![0u16; new_nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                let j = map(i);
                debug_assert_eq!(exps[j], 0);
                exps[j] = e;
            }
        }
        Monomial::new(exps)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}
