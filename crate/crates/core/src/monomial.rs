//! Dense exponent vectors and the three supported monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::ArithError;

/// A monomial as a dense vector of exponents, one entry per ring variable.
///
/// Exponents are fixed-width; any operation that would exceed `u32` is a
/// hard error, never a silent wraparound.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_dim(&self, other: &Monomial) -> Result<(), ArithError> {
        if self.nvars() != other.nvars() {
            return Err(ArithError::DimensionMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, ArithError> {
        self.check_dim(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(ArithError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial { exps })
    }

    /// Raises every exponent by the factor `k` (the monomial power m^k).
    pub fn try_pow(&self, k: u32) -> Result<Monomial, ArithError> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(ArithError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial { exps })
    }

    /// Componentwise `self >= other`, i.e. `other` divides `self`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a >= b)
    }

    /// Exact quotient, `None` when `other` does not divide `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divisible_by(other) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a.min(b) == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// `Some((var, exp))` when the monomial is a pure power x_var^exp, exp >= 1.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

/// A total, multiplicative order on monomials with 1 minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
}

impl MonomialOrder {
    /// Total-order comparison; errors on mismatched variable counts.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering, ArithError> {
        a.check_dim(b)?;
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::GrLex => a.degree().cmp(&b.degree()).then_with(|| lex_cmp(a, b)),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // ties: the last variable where they differ decides,
                // with the smaller exponent winning
                for (&x, &y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (&x, &y) in a.exps.iter().zip(&b.exps) {
        if x != y {
            return x.cmp(&y);
        }
    }
    Ordering::Equal
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(format!("unknown monomial order `{other}` (expected lex, grlex, grevlex)")),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GrevLex => "grevlex",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn lex_prefers_earlier_variables() {
        // x vs y^2 in k[x,y,z]
        let x = m(&[1, 0, 0]);
        let y2 = m(&[0, 2, 0]);
        assert_eq!(
            MonomialOrder::Lex.compare(&x, &y2).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        // y^2 vs xz, both degree 2: y^2 has the smaller last-variable exponent
        let y2 = m(&[0, 2, 0]);
        let xz = m(&[1, 0, 1]);
        assert_eq!(
            MonomialOrder::GrevLex.compare(&y2, &xz).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexivity() {
        let a = m(&[3, 1, 4]);
        for ord in [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex] {
            assert_eq!(ord.compare(&a, &a).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = m(&[1, 2]);
        let b = m(&[1, 2, 3]);
        assert!(matches!(
            MonomialOrder::Lex.compare(&a, &b),
            Err(ArithError::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn overflow_is_hard_error() {
        let a = m(&[u32::MAX, 0]);
        let b = m(&[1, 0]);
        assert_eq!(a.try_mul(&b), Err(ArithError::ExponentOverflow));
        assert_eq!(a.try_pow(2), Err(ArithError::ExponentOverflow));
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = m(&[3, 2]);
        let b = m(&[1, 2]);
        assert!(a.divisible_by(&b));
        assert_eq!(a.try_div(&b), Some(m(&[2, 0])));
        assert_eq!(b.try_div(&a), None);
        assert_eq!(a.lcm(&m(&[0, 5])), m(&[3, 5]));
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(m(&[0, 3, 0]).pure_power(), Some((1, 3)));
        assert_eq!(m(&[1, 1, 0]).pure_power(), None);
        assert_eq!(m(&[0, 0]).pure_power(), None);
    }
}
