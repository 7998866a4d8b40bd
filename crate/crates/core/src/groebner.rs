//! Buchberger's algorithm over F_p, normal forms, and the combinatorics of
//! initial ideals: zero-dimensionality, standard-monomial counting, and
//! Krull dimension.
//!
//! Output is deterministic: a fixed pair-selection strategy (minimal lcm
//! total degree, ties by the active order on the lcm, then by indices) and a
//! final inter-reduction pass make the returned basis canonical per
//! (ideal, order).

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use thiserror::Error;

use crate::error::ArithError;
use crate::ideal::IdealPresentation;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, SparsePolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error(transparent)]
    Arith(#[from] ArithError),

    #[error("work budget exceeded: {pairs} S-pairs processed (cap {cap})")]
    PairBudgetExceeded { pairs: usize, cap: usize },

    #[error("work budget exceeded: basis grew to {size} elements (cap {cap})")]
    BasisBudgetExceeded { size: usize, cap: usize },

    #[error("operation requires a zero-dimensional ideal")]
    PositiveDimensional,

    #[error("standard-monomial box has {points} points (enumeration cap {cap})")]
    EnumerationCapExceeded { points: u128, cap: u128 },

    #[error("internal soundness check failed: {0}")]
    Internal(String),
}

/// Work budgets for a Buchberger run. Exceeding a cap is an explicit
/// resource error, never a wrong answer.
#[derive(Debug, Clone)]
pub struct BuchbergerConfig {
    pub max_pairs: usize,
    pub max_basis: usize,
    /// Cap on the exponent-box size scanned by `count_standard_monomials`.
    pub max_box_points: u128,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig {
            max_pairs: 1_000_000,
            max_basis: 20_000,
            max_box_points: 100_000_000,
        }
    }
}

/// A reduced Groebner basis: monic elements, pairwise indivisible leading
/// terms, every tail monomial irreducible by the rest of the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    elements: Vec<SparsePolynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[SparsePolynomial] {
        &self.elements
    }

    pub fn leading_terms(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis contains a nonzero constant, i.e. the ideal is
    /// the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(|m| m.is_one())
    }
}

struct PairKey {
    degree: u64,
    lcm: Monomial,
    i: usize,
    j: usize,
    order: MonomialOrder,
}

impl PartialEq for PairKey {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for PairKey {}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.order.cmp_unchecked(&self.lcm, &other.lcm))
            .then_with(|| self.i.cmp(&other.i))
            .then_with(|| self.j.cmp(&other.j))
    }
}

fn reduce(
    f: &SparsePolynomial,
    basis: &[SparsePolynomial],
) -> Result<SparsePolynomial, ArithError> {
    let ring = f.ring();
    let order = f.order();
    let mut work = f.clone();
    let mut remainder: Vec<(i64, Monomial)> = Vec::new();
    'outer: while let Some(lt) = work.leading_term() {
        let lt_coeff = lt.coeff;
        let lt_mono = lt.monomial.clone();
        for g in basis {
            let glt = match g.leading_term() {
                Some(t) => t,
                None => continue,
            };
            if let Some(quot) = lt_mono.try_div(&glt.monomial) {
                let factor = lt_coeff.mul(glt.coeff.inv());
                let scaled = g.try_mul_term(factor, &quot)?;
                work = work.try_sub(&scaled)?;
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.push((i64::from(lt_coeff.value()), lt_mono));
        let tail = SparsePolynomial::from_terms(
            ring,
            order,
            work.terms()[1..]
                .iter()
                .map(|t| (i64::from(t.coeff.value()), t.monomial.clone()))
                .collect(),
        )?;
        work = tail;
    }
    SparsePolynomial::from_terms(ring, order, remainder)
}

/// Remainder of `f` on division by the basis: no term of the result is
/// divisible by any leading term of `G`, and `f - NF(f)` lies in the ideal.
pub fn normal_form(
    f: &SparsePolynomial,
    basis: &GroebnerBasis,
) -> Result<SparsePolynomial, GroebnerError> {
    if f.ring() != &basis.ring {
        return Err(ArithError::RingMismatch.into());
    }
    if f.order() != basis.order {
        return Err(ArithError::OrderMismatch.into());
    }
    Ok(reduce(f, &basis.elements)?)
}

/// Division with explicit cofactors: returns `(q, r)` with
/// `f = sum q_i g_i + r` and `r` fully reduced. Used by the membership
/// soundness tests.
pub fn reduce_with_cofactors(
    f: &SparsePolynomial,
    basis: &GroebnerBasis,
) -> Result<(Vec<SparsePolynomial>, SparsePolynomial), GroebnerError> {
    if f.ring() != &basis.ring {
        return Err(ArithError::RingMismatch.into());
    }
    if f.order() != basis.order {
        return Err(ArithError::OrderMismatch.into());
    }
    let ring = f.ring().clone();
    let order = f.order();
    let mut cofactors = vec![SparsePolynomial::zero(&ring, order); basis.elements.len()];
    let mut work = f.clone();
    let mut remainder: Vec<(i64, Monomial)> = Vec::new();
    'outer: while let Some(lt) = work.leading_term() {
        let lt_coeff = lt.coeff;
        let lt_mono = lt.monomial.clone();
        for (k, g) in basis.elements.iter().enumerate() {
            let glt = g.leading_term().expect("basis elements are nonzero");
            if let Some(quot) = lt_mono.try_div(&glt.monomial) {
                let factor = lt_coeff.mul(glt.coeff.inv());
                let scaled = g.try_mul_term(factor, &quot)?;
                work = work.try_sub(&scaled)?;
                let term = SparsePolynomial::from_terms(
                    &ring,
                    order,
                    vec![(i64::from(factor.value()), quot)],
                )?;
                cofactors[k] = cofactors[k].try_add(&term)?;
                continue 'outer;
            }
        }
        remainder.push((i64::from(lt_coeff.value()), lt_mono));
        work = SparsePolynomial::from_terms(
            &ring,
            order,
            work.terms()[1..]
                .iter()
                .map(|t| (i64::from(t.coeff.value()), t.monomial.clone()))
                .collect(),
        )?;
    }
    let r = SparsePolynomial::from_terms(&ring, order, remainder)?;
    Ok((cofactors, r))
}

fn s_polynomial(
    f: &SparsePolynomial,
    g: &SparsePolynomial,
) -> Result<SparsePolynomial, ArithError> {
    let flt = f.leading_term().expect("nonzero");
    let glt = g.leading_term().expect("nonzero");
    let lcm = flt.monomial.lcm(&glt.monomial);
    let fq = lcm.try_div(&flt.monomial).expect("lcm divisible");
    let gq = lcm.try_div(&glt.monomial).expect("lcm divisible");
    let a = f.try_mul_term(flt.coeff.inv(), &fq)?;
    let b = g.try_mul_term(glt.coeff.inv(), &gq)?;
    a.try_sub(&b)
}

/// Computes the reduced Groebner basis of `ideal` with respect to `order`.
///
/// Uses the normal selection strategy plus the coprime-leading-term and
/// chain criteria; membership of every input generator is verified by a
/// zero normal form before returning.
pub fn buchberger(
    ideal: &IdealPresentation,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    let ring = ideal.ring().clone();
    let input: Vec<SparsePolynomial> = ideal
        .with_order(order)
        .generators()
        .iter()
        .map(|g| g.make_monic())
        .collect();

    let mut basis: Vec<SparsePolynomial> = Vec::new();
    let mut heap: BinaryHeap<std::cmp::Reverse<PairKey>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let push_pairs = |basis: &[SparsePolynomial],
                          heap: &mut BinaryHeap<std::cmp::Reverse<PairKey>>,
                          t: usize| {
        let lt_t = basis[t].leading_monomial().unwrap();
        for (k, earlier) in basis.iter().enumerate().take(t) {
            let lt_k = earlier.leading_monomial().unwrap();
            let lcm = lt_k.lcm(lt_t);
            heap.push(std::cmp::Reverse(PairKey {
                degree: lcm.degree(),
                lcm,
                i: k,
                j: t,
                order,
            }));
        }
    };

    for g in input.iter() {
        // interreduce the inputs as they come in
        let r = reduce(g, &basis)?;
        if r.is_zero() {
            continue;
        }
        basis.push(r.make_monic());
        push_pairs(&basis, &mut heap, basis.len() - 1);
    }

    let mut pairs_processed = 0usize;
    while let Some(std::cmp::Reverse(key)) = heap.pop() {
        let (i, j) = (key.i, key.j);
        done.insert((i, j));
        pairs_processed += 1;
        if pairs_processed > config.max_pairs {
            return Err(GroebnerError::PairBudgetExceeded {
                pairs: pairs_processed,
                cap: config.max_pairs,
            });
        }

        let lt_i = basis[i].leading_monomial().unwrap();
        let lt_j = basis[j].leading_monomial().unwrap();

        // coprime leading terms: S-polynomial reduces to zero
        if lt_i.is_coprime_with(lt_j) {
            continue;
        }

        // chain criterion: a third element divides the lcm and both of its
        // pairs with i and j were already handled
        let lcm_ij = &key.lcm;
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lt_k = basis[k].leading_monomial().unwrap();
            if !lcm_ij.divisible_by(lt_k) {
                return false;
            }
            let pik = (i.min(k), i.max(k));
            let pjk = (j.min(k), j.max(k));
            done.contains(&pik) && done.contains(&pjk)
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = reduce(&s, &basis)?;
        if r.is_zero() {
            continue;
        }
        basis.push(r.make_monic());
        if basis.len() > config.max_basis {
            return Err(GroebnerError::BasisBudgetExceeded {
                size: basis.len(),
                cap: config.max_basis,
            });
        }
        push_pairs(&basis, &mut heap, basis.len() - 1);
    }

    let reduced = interreduce(order, basis)?;

    // soundness: every input generator must reduce to zero
    for g in &input {
        let nf = reduce(g, &reduced)?;
        if !nf.is_zero() {
            return Err(GroebnerError::Internal(format!(
                "input generator `{g}` does not reduce to zero against its own basis"
            )));
        }
    }

    let leading = reduced
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    Ok(GroebnerBasis {
        ring,
        order,
        elements: reduced,
        leading,
    })
}

fn interreduce(
    order: MonomialOrder,
    basis: Vec<SparsePolynomial>,
) -> Result<Vec<SparsePolynomial>, ArithError> {
    // drop elements whose leading term is divisible by another's
    let mut kept: Vec<SparsePolynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lt_g = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            if k == i {
                return false;
            }
            let lt_h = h.leading_monomial().unwrap();
            if lt_g == lt_h {
                // identical leading terms: keep the earliest
                return k < i;
            }
            lt_g.divisible_by(lt_h)
        });
        if !redundant {
            kept.push(g.clone());
        }
    }
    kept.sort_by(|a, b| {
        order.cmp_unchecked(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    // tail-reduce each element against all the others
    let mut out: Vec<SparsePolynomial> = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<SparsePolynomial> = kept
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, h)| h.clone())
            .collect();
        let g = reduce(&kept[i], &others)?;
        debug_assert!(!g.is_zero());
        out.push(g.make_monic());
    }
    Ok(out)
}

/// True iff every variable has a pure power among the leading terms, the
/// combinatorial criterion for the quotient being finite-dimensional.
pub fn is_zero_dimensional(basis: &GroebnerBasis) -> bool {
    if basis.is_unit_ideal() {
        return true;
    }
    let n = basis.ring.nvars();
    (0..n).all(|v| {
        basis
            .leading
            .iter()
            .any(|m| matches!(m.pure_power(), Some((var, _)) if var == v))
    })
}

/// Exact vector-space dimension of the quotient by a zero-dimensional ideal,
/// by enumerating the exponent box below the pure-power leading terms.
pub fn count_standard_monomials(
    basis: &GroebnerBasis,
    config: &BuchbergerConfig,
) -> Result<u64, GroebnerError> {
    if basis.is_unit_ideal() {
        return Ok(0);
    }
    if !is_zero_dimensional(basis) {
        return Err(GroebnerError::PositiveDimensional);
    }
    let n = basis.ring.nvars();
    let mut bounds = vec![u32::MAX; n];
    for m in &basis.leading {
        if let Some((v, e)) = m.pure_power() {
            bounds[v] = bounds[v].min(e);
        }
    }
    let points: u128 = bounds.iter().map(|&b| u128::from(b)).product();
    if points > config.max_box_points {
        return Err(GroebnerError::EnumerationCapExceeded {
            points,
            cap: config.max_box_points,
        });
    }

    // only leading terms that can divide an interior box point matter
    let relevant: Vec<&Monomial> = basis
        .leading
        .iter()
        .filter(|m| m.exps().iter().zip(&bounds).all(|(&e, &b)| e < b))
        .collect();

    let mut count: u64 = 0;
    let mut point = vec![0u32; n];
    loop {
        let covered = relevant.iter().any(|m| {
            m.exps()
                .iter()
                .zip(&point)
                .all(|(&ge, &pe)| pe >= ge)
        });
        if !covered {
            count += 1;
        }
        // odometer increment
        let mut v = 0;
        loop {
            if v == n {
                return Ok(count);
            }
            point[v] += 1;
            if point[v] < bounds[v] {
                break;
            }
            point[v] = 0;
            v += 1;
        }
    }
}

/// Krull dimension of the quotient: the largest cardinality of a variable
/// subset that contains the support of no leading term.
///
/// Returns 0 for the unit ideal (the zero ring) by convention.
pub fn krull_dimension(basis: &GroebnerBasis) -> usize {
    if basis.is_unit_ideal() {
        return 0;
    }
    let n = basis.ring.nvars();
    let supports: Vec<u32> = basis
        .leading
        .iter()
        .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0usize;
    for subset in 0u32..(1 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

/// Certificate check for a reduced basis: canonical shape plus zero normal
/// form of every S-polynomial. Intended for the test suites.
pub fn verify_reduced_basis(basis: &GroebnerBasis) -> Result<(), String> {
    for g in &basis.elements {
        if g.is_zero() {
            return Err("basis contains zero".to_string());
        }
        if !g.is_canonical() {
            return Err(format!("`{g}` is not in canonical form"));
        }
        if !g.leading_term().unwrap().coeff.is_one() {
            return Err(format!("`{g}` is not monic"));
        }
    }
    for (i, g) in basis.elements.iter().enumerate() {
        for (j, h) in basis.elements.iter().enumerate() {
            if i == j {
                continue;
            }
            let lt_h = h.leading_monomial().unwrap();
            // leading terms form an antichain, tails are irreducible
            for (k, t) in g.terms().iter().enumerate() {
                if t.monomial.divisible_by(lt_h) {
                    return Err(format!(
                        "term {k} of `{g}` is divisible by the leading term of `{h}`"
                    ));
                }
            }
        }
    }
    for i in 0..basis.elements.len() {
        for j in (i + 1)..basis.elements.len() {
            let s = s_polynomial(&basis.elements[i], &basis.elements[j])
                .map_err(|e| e.to_string())?;
            let r = reduce(&s, &basis.elements).map_err(|e| e.to_string())?;
            if !r.is_zero() {
                return Err(format!(
                    "S-polynomial of elements {i} and {j} does not reduce to zero"
                ));
            }
        }
    }
    Ok(())
}
