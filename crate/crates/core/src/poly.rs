//! Sparse multivariate polynomials over F_p in canonical term order.
//!
//! A polynomial stores its terms strictly descending in the active monomial
//! order, with no zero coefficients; the zero polynomial is the empty term
//! list. Every operation returns canonical form.

use std::fmt;
use std::sync::Arc;

use crate::error::ArithError;
use crate::field::{check_modulus, FieldError, FieldScalar};
use crate::monomial::{Monomial, MonomialOrder};

/// Shared ring context: the characteristic and the variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    p: u32,
    vars: Vec<String>,
}

/// Hard cap on the number of variables; keeps dense exponent vectors and
/// the subset scans in `krull_dimension` cheap.
pub const MAX_VARS: usize = 16;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error(transparent)]
    Field(#[from] FieldError),

    #[error("ring needs at least one variable")]
    NoVariables,

    #[error("too many variables: {0} (max {MAX_VARS})")]
    TooManyVariables(usize),

    #[error("invalid variable name `{0}`")]
    BadVariableName(String),

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// Builds a ring context, checking that `p` is prime (trial division)
    /// and that the variable names are distinct identifiers.
    pub fn new(p: u32, vars: &[&str]) -> Result<Arc<PolyRing>, RingError> {
        check_modulus(p)?;
        if vars.is_empty() {
            return Err(RingError::NoVariables);
        }
        if vars.len() > MAX_VARS {
            return Err(RingError::TooManyVariables(vars.len()));
        }
        let mut seen: Vec<&str> = Vec::new();
        for v in vars {
            if !is_identifier(v) {
                return Err(RingError::BadVariableName((*v).to_string()));
            }
            if seen.contains(v) {
                return Err(RingError::DuplicateVariable((*v).to_string()));
            }
            seen.push(v);
        }
        Ok(Arc::new(PolyRing {
            p,
            vars: vars.iter().map(|s| s.to_string()).collect(),
        }))
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: FieldScalar,
    pub monomial: Monomial,
}

/// A polynomial in canonical form, tied to a ring and a monomial order.
#[derive(Debug, Clone)]
pub struct SparsePolynomial {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl PartialEq for SparsePolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.terms == other.terms
    }
}

impl Eq for SparsePolynomial {}

impl SparsePolynomial {
    pub fn zero(ring: &Arc<PolyRing>, order: MonomialOrder) -> Self {
        SparsePolynomial {
            ring: Arc::clone(ring),
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, order: MonomialOrder, c: i64) -> Self {
        let coeff = FieldScalar::new(c, ring.prime());
        if coeff.is_zero() {
            return Self::zero(ring, order);
        }
        SparsePolynomial {
            ring: Arc::clone(ring),
            order,
            terms: vec![Term {
                coeff,
                monomial: Monomial::one(ring.nvars()),
            }],
        }
    }

    pub fn variable(ring: &Arc<PolyRing>, order: MonomialOrder, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        let mut exps = vec![0; ring.nvars()];
        exps[index] = 1;
        SparsePolynomial {
            ring: Arc::clone(ring),
            order,
            terms: vec![Term {
                coeff: FieldScalar::one(ring.prime()),
                monomial: Monomial::new(exps),
            }],
        }
    }

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs,
    /// producing canonical form: sorted, merged, zero-free.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        order: MonomialOrder,
        pairs: Vec<(i64, Monomial)>,
    ) -> Result<Self, ArithError> {
        let nvars = ring.nvars();
        let mut terms: Vec<Term> = Vec::with_capacity(pairs.len());
        for (c, m) in pairs {
            if m.nvars() != nvars {
                return Err(ArithError::DimensionMismatch {
                    left: nvars,
                    right: m.nvars(),
                });
            }
            terms.push(Term {
                coeff: FieldScalar::new(c, ring.prime()),
                monomial: m,
            });
        }
        Ok(Self::canonicalize(ring, order, terms))
    }

    fn canonicalize(ring: &Arc<PolyRing>, order: MonomialOrder, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| order.cmp_unchecked(&b.monomial, &a.monomial));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = last.coeff.add(t.coeff);
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        SparsePolynomial {
            ring: Arc::clone(ring),
            order,
            terms: merged,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn prime(&self) -> u32 {
        self.ring.prime()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    /// Re-sorts the terms under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> SparsePolynomial {
        if order == self.order {
            return self.clone();
        }
        Self::canonicalize(&self.ring, order, self.terms.clone())
    }

    fn check_compatible(&self, other: &SparsePolynomial) -> Result<(), ArithError> {
        if self.ring != other.ring {
            return Err(ArithError::RingMismatch);
        }
        if self.order != other.order {
            return Err(ArithError::OrderMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SparsePolynomial) -> Result<SparsePolynomial, ArithError> {
        self.check_compatible(other)?;
        // merge of two sorted term lists
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match self.order.cmp_unchecked(&a.monomial, &b.monomial) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a.coeff.add(b.coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(SparsePolynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms: out,
        })
    }

    pub fn neg(&self) -> SparsePolynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.neg(),
                monomial: t.monomial.clone(),
            })
            .collect();
        SparsePolynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms,
        }
    }

    pub fn try_sub(&self, other: &SparsePolynomial) -> Result<SparsePolynomial, ArithError> {
        self.try_add(&other.neg())
    }

    /// Multiplies by a single term (coefficient times monomial).
    pub fn try_mul_term(
        &self,
        coeff: FieldScalar,
        monomial: &Monomial,
    ) -> Result<SparsePolynomial, ArithError> {
        if coeff.is_zero() {
            return Ok(Self::zero(&self.ring, self.order));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = t.coeff.mul(coeff);
            if c.is_zero() {
                continue;
            }
            terms.push(Term {
                coeff: c,
                monomial: t.monomial.try_mul(monomial)?,
            });
        }
        // multiplying by a fixed monomial preserves the order of terms
        Ok(SparsePolynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms,
        })
    }

    pub fn try_mul(&self, other: &SparsePolynomial) -> Result<SparsePolynomial, ArithError> {
        self.check_compatible(other)?;
        let mut terms: Vec<Term> = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term {
                    coeff: a.coeff.mul(b.coeff),
                    monomial: a.monomial.try_mul(&b.monomial)?,
                });
            }
        }
        Ok(Self::canonicalize(&self.ring, self.order, terms))
    }

    pub fn try_pow(&self, k: u32) -> Result<SparsePolynomial, ArithError> {
        let mut acc = Self::constant(&self.ring, self.order, 1);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The q-th power for q a power of the characteristic: coefficients are
    /// fixed by Frobenius, so only the exponents scale.
    pub fn frobenius_power(&self, q: u64) -> Result<SparsePolynomial, ArithError> {
        debug_assert!(is_power_of(q, u64::from(self.prime())) || q == 1);
        let k = u32::try_from(q).map_err(|_| ArithError::ExponentOverflow)?;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: t.coeff,
                    monomial: t.monomial.try_pow(k)?,
                })
            })
            .collect::<Result<Vec<_>, ArithError>>()?;
        // scaling exponents by a common factor preserves all three orders
        Ok(SparsePolynomial {
            ring: Arc::clone(&self.ring),
            order: self.order,
            terms,
        })
    }

    pub fn make_monic(&self) -> SparsePolynomial {
        match self.leading_term() {
            None => self.clone(),
            Some(lt) if lt.coeff.is_one() => self.clone(),
            Some(lt) => {
                let inv = lt.coeff.inv();
                let terms = self
                    .terms
                    .iter()
                    .map(|t| Term {
                        coeff: t.coeff.mul(inv),
                        monomial: t.monomial.clone(),
                    })
                    .collect();
                SparsePolynomial {
                    ring: Arc::clone(&self.ring),
                    order: self.order,
                    terms,
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t0) => {
                let d = t0.monomial.degree();
                self.terms.iter().all(|t| t.monomial.degree() == d)
            }
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Canonical-form validator used by the test suites.
    pub fn is_canonical(&self) -> bool {
        let p = self.prime();
        for t in &self.terms {
            if t.coeff.is_zero() || t.coeff.value() >= p || t.coeff.modulus() != p {
                return false;
            }
            if t.monomial.nvars() != self.nvars() {
                return false;
            }
        }
        self.terms.windows(2).all(|w| {
            self.order.cmp_unchecked(&w[0].monomial, &w[1].monomial)
                == std::cmp::Ordering::Greater
        })
    }
}

pub(crate) fn is_power_of(mut q: u64, p: u64) -> bool {
    if q == 0 {
        return false;
    }
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.ring.vars();
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if t.coeff.value() != 1 || t.monomial.is_one() {
                factors.push(t.coeff.value().to_string());
            }
            for (v, &e) in t.monomial.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[v].clone()),
                    _ => factors.push(format!("{}^{}", vars[v], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> Arc<PolyRing> {
        PolyRing::new(3, &["x", "y"]).unwrap()
    }

    #[test]
    fn ring_construction_rejects_bad_input() {
        assert!(matches!(
            PolyRing::new(4, &["x"]),
            Err(RingError::Field(FieldError::NotPrime(4)))
        ));
        assert!(matches!(PolyRing::new(3, &[]), Err(RingError::NoVariables)));
        assert!(matches!(
            PolyRing::new(3, &["x", "x"]),
            Err(RingError::DuplicateVariable(_))
        ));
        assert!(matches!(
            PolyRing::new(3, &["2x"]),
            Err(RingError::BadVariableName(_))
        ));
    }

    #[test]
    fn addition_cancels() {
        let r = ring3();
        let ord = MonomialOrder::GrevLex;
        let x2 = SparsePolynomial::from_terms(&r, ord, vec![(1, Monomial::new(vec![2, 0]))]).unwrap();
        let diff = x2.try_sub(&x2).unwrap();
        assert!(diff.is_zero());
        assert!(diff.is_canonical());
    }

    #[test]
    fn char_two_square_is_frobenius() {
        let r = PolyRing::new(2, &["x", "y"]).unwrap();
        let ord = MonomialOrder::GrevLex;
        let x = SparsePolynomial::variable(&r, ord, 0);
        let y = SparsePolynomial::variable(&r, ord, 1);
        let s = x.try_add(&y).unwrap();
        let sq = s.try_mul(&s).unwrap();
        let expected = SparsePolynomial::from_terms(
            &r,
            ord,
            vec![(1, Monomial::new(vec![2, 0])), (1, Monomial::new(vec![0, 2]))],
        )
        .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn difference_of_squares_mod_7() {
        let r = PolyRing::new(7, &["x"]).unwrap();
        let ord = MonomialOrder::Lex;
        let x = SparsePolynomial::variable(&r, ord, 0);
        let one = SparsePolynomial::constant(&r, ord, 1);
        let prod = x.try_add(&one).unwrap().try_mul(&x.try_sub(&one).unwrap()).unwrap();
        let expected =
            SparsePolynomial::from_terms(&r, ord, vec![(1, Monomial::new(vec![2])), (6, Monomial::new(vec![0]))])
                .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn ring_and_order_mismatches_error() {
        let r = ring3();
        let r5 = PolyRing::new(5, &["x", "y"]).unwrap();
        let a = SparsePolynomial::variable(&r, MonomialOrder::GrevLex, 0);
        let b = SparsePolynomial::variable(&r5, MonomialOrder::GrevLex, 0);
        assert_eq!(a.try_add(&b).unwrap_err(), ArithError::RingMismatch);
        let c = SparsePolynomial::variable(&r, MonomialOrder::Lex, 0);
        assert_eq!(a.try_add(&c).unwrap_err(), ArithError::OrderMismatch);
    }

    #[test]
    fn frobenius_scales_exponents_and_keeps_coefficients() {
        let r = PolyRing::new(3, &["x", "y", "z"]).unwrap();
        let ord = MonomialOrder::GrevLex;
        let f = SparsePolynomial::from_terms(
            &r,
            ord,
            vec![
                (2, Monomial::new(vec![1, 0, 0])),
                (1, Monomial::new(vec![0, 1, 1])),
            ],
        )
        .unwrap();
        let g = f.frobenius_power(3).unwrap();
        let expected = SparsePolynomial::from_terms(
            &r,
            ord,
            vec![
                (2, Monomial::new(vec![3, 0, 0])),
                (1, Monomial::new(vec![0, 3, 3])),
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn display_is_stable() {
        let r = ring3();
        let f = SparsePolynomial::from_terms(
            &r,
            MonomialOrder::GrevLex,
            vec![
                (1, Monomial::new(vec![2, 0])),
                (2, Monomial::new(vec![0, 1])),
                (1, Monomial::new(vec![0, 0])),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "x^2 + 2*y + 1");
        assert_eq!(SparsePolynomial::zero(&r, MonomialOrder::Lex).to_string(), "0");
    }
}
