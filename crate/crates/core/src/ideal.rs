//! Ideal presentations: finite generator lists in a fixed ring.

use std::sync::Arc;

use crate::error::ArithError;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, SparsePolynomial};

/// A finitely generated ideal, given by its generator list.
///
/// Zero generators are dropped at construction; all generators must share
/// one ring and one monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    gens: Vec<SparsePolynomial>,
}

impl IdealPresentation {
    pub fn new(
        ring: &Arc<PolyRing>,
        order: MonomialOrder,
        gens: Vec<SparsePolynomial>,
    ) -> Result<Self, ArithError> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(ArithError::RingMismatch);
            }
            if g.order() != order {
                return Err(ArithError::OrderMismatch);
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        Ok(IdealPresentation {
            ring: Arc::clone(ring),
            order,
            gens: kept,
        })
    }

    /// The maximal ideal (x_1, ..., x_n) of the ambient polynomial ring.
    pub fn maximal_ideal(ring: &Arc<PolyRing>, order: MonomialOrder) -> Self {
        let gens = (0..ring.nvars())
            .map(|i| SparsePolynomial::variable(ring, order, i))
            .collect();
        IdealPresentation {
            ring: Arc::clone(ring),
            order,
            gens,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[SparsePolynomial] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Re-expresses all generators under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> IdealPresentation {
        if order == self.order {
            return self.clone();
        }
        IdealPresentation {
            ring: Arc::clone(&self.ring),
            order,
            gens: self.gens.iter().map(|g| g.with_order(order)).collect(),
        }
    }

    /// Generator-list union (the ideal sum I + J).
    pub fn joined(&self, other: &IdealPresentation) -> Result<IdealPresentation, ArithError> {
        if self.ring != other.ring {
            return Err(ArithError::RingMismatch);
        }
        let other = other.with_order(self.order);
        let mut gens = self.gens.clone();
        gens.extend(other.gens);
        Ok(IdealPresentation {
            ring: Arc::clone(&self.ring),
            order: self.order,
            gens,
        })
    }

    /// The n-th ideal power, generated by all n-fold products of generators.
    pub fn power(&self, n: u32) -> Result<IdealPresentation, ArithError> {
        if n == 0 {
            let one = SparsePolynomial::constant(&self.ring, self.order, 1);
            return IdealPresentation::new(&self.ring, self.order, vec![one]);
        }
        if self.gens.is_empty() {
            return Ok(self.clone());
        }
        let mut products = vec![SparsePolynomial::constant(&self.ring, self.order, 1)];
        for _ in 0..n {
            let mut next: Vec<SparsePolynomial> = Vec::new();
            let mut seen: Vec<String> = Vec::new();
            for prod in &products {
                for g in &self.gens {
                    let q = prod.try_mul(g)?;
                    let key = q.to_string();
                    if !seen.contains(&key) {
                        seen.push(key);
                        next.push(q);
                    }
                }
            }
            products = next;
        }
        IdealPresentation::new(&self.ring, self.order, products)
    }
}
