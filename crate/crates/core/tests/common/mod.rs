//! Shared test support: an independent linear-algebra colength oracle and
//! small construction helpers.
//!
//! The oracle computes lambda(S/I) by Gaussian elimination over F_p on the
//! finite box-monomial basis and deliberately never touches the Groebner
//! machinery it is used to cross-check.
#![allow(dead_code)] // each test binary uses a different subset

use std::sync::Arc;

use hk_core::field::FieldScalar;
use hk_core::ideal::IdealPresentation;
use hk_core::monomial::{Monomial, MonomialOrder};
use hk_core::parse::parse_polynomial;
use hk_core::poly::{PolyRing, SparsePolynomial};

pub const ORD: MonomialOrder = MonomialOrder::GrevLex;

pub fn ring(p: u32, vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(p, vars).unwrap()
}

pub fn poly(ring: &Arc<PolyRing>, text: &str) -> SparsePolynomial {
    parse_polynomial(text, ring, ORD).unwrap()
}

pub fn ideal(ring: &Arc<PolyRing>, gens: &[&str]) -> IdealPresentation {
    let polys = gens.iter().map(|s| poly(ring, s)).collect();
    IdealPresentation::new(ring, ORD, polys).unwrap()
}

/// Exact colength of S/I by row reduction, valid whenever the pure powers
/// x_i^{bounds[i]} all lie in I: the quotient is then spanned by the box
/// monomials below `bounds`, and the image of I in that finite space is
/// spanned by the products of generators with box monomials.
pub fn dense_colength(gens: &[SparsePolynomial], bounds: &[u32], p: u32) -> u64 {
    let n = bounds.len();
    let strides: Vec<usize> = {
        let mut s = vec![1usize; n];
        for i in 1..n {
            s[i] = s[i - 1] * bounds[i - 1] as usize;
        }
        s
    };
    let dim: usize = bounds.iter().map(|&b| b as usize).product();

    let to_col = |m: &Monomial| -> Option<usize> {
        let mut idx = 0usize;
        for (i, &e) in m.exps().iter().enumerate() {
            if e >= bounds[i] {
                return None; // absorbed by a box pure power
            }
            idx += e as usize * strides[i];
        }
        Some(idx)
    };

    // incremental echelon form indexed by pivot column
    let mut pivots: Vec<Option<Vec<u32>>> = vec![None; dim];
    let mut rank = 0usize;

    let mut add_row = |mut row: Vec<u32>| {
        for col in 0..dim {
            if row[col] == 0 {
                continue;
            }
            match &pivots[col] {
                Some(pivot) => {
                    let factor = row[col];
                    for c in col..dim {
                        if pivot[c] != 0 {
                            let sub = (u64::from(factor) * u64::from(pivot[c])) % u64::from(p);
                            row[c] = ((u64::from(row[c]) + u64::from(p) - sub) % u64::from(p))
                                as u32;
                        }
                    }
                }
                None => {
                    let inv = FieldScalar::from_residue(row[col], p).inv().value();
                    for entry in row.iter_mut().skip(col) {
                        *entry = ((u64::from(*entry) * u64::from(inv)) % u64::from(p)) as u32;
                    }
                    pivots[col] = Some(row);
                    rank += 1;
                    return;
                }
            }
        }
    };

    // enumerate b * g for every box monomial b and generator g
    let one = FieldScalar::one(p);
    let mut point = vec![0u32; n];
    loop {
        let b = Monomial::new(point.clone());
        for g in gens {
            let product = g.try_mul_term(one, &b).unwrap();
            let mut row = vec![0u32; dim];
            let mut nonzero = false;
            for t in product.terms() {
                if let Some(col) = to_col(&t.monomial) {
                    row[col] = (row[col] + t.coeff.value()) % p;
                    nonzero = true;
                }
            }
            if nonzero {
                add_row(row);
            }
        }
        let mut v = 0;
        loop {
            if v == n {
                return (dim - rank) as u64;
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
