//! Staircase volumes for m-primary monomial ideals.
//!
//! For a monomial ideal the Frobenius power scales the staircase by q, so the
//! Hilbert-Kunz multiplicity equals the volume of the box below the pure
//! powers minus the union of the shifted orthants over the generators. The
//! inclusion-exclusion volume is exact integer arithmetic; the lattice count
//! is the engine's independent cross-check oracle.

use num::BigRational;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StaircaseError {
    #[error("generator list is empty")]
    Empty,

    #[error("generators have inconsistent dimensions")]
    DimensionMismatch,

    #[error("not m-primary: variable {0} has no pure-power generator")]
    MissingPurePower(usize),

    #[error("{count} generators exceed the inclusion-exclusion cap of {cap}")]
    SubsetCapExceeded { count: usize, cap: usize },

    #[error("box of {points} lattice points exceeds the enumeration cap of {cap}")]
    EnumerationCapExceeded { points: u128, cap: u128 },
}

const SUBSET_CAP: usize = 20;
const ENUMERATION_CAP: u128 = 100_000_000;

/// An m-primary monomial ideal as exponent vectors, with the per-variable
/// pure-power bounds split out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseRegion {
    generators: Vec<Vec<u32>>,
    bounds: Vec<u32>,
}

impl StaircaseRegion {
    /// Validates m-primariness (a pure power for every variable) and keeps
    /// only the minimal generators.
    pub fn new(generators: Vec<Vec<u32>>) -> Result<Self, StaircaseError> {
        if generators.is_empty() {
            return Err(StaircaseError::Empty);
        }
        let n = generators[0].len();
        if n == 0 || generators.iter().any(|g| g.len() != n) {
            return Err(StaircaseError::DimensionMismatch);
        }
        // remove dominated generators (and duplicates)
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for g in &generators {
            let dominated = generators.iter().any(|h| {
                h != g && h.iter().zip(g).all(|(&a, &b)| a <= b)
            }) || minimal.contains(g);
            if !dominated {
                minimal.push(g.clone());
            }
        }
        let mut bounds = vec![0u32; n];
        for v in 0..n {
            let pure = minimal
                .iter()
                .filter(|g| g.iter().enumerate().all(|(i, &e)| (i == v) == (e > 0)))
                .map(|g| g[v])
                .min();
            match pure {
                Some(b) => bounds[v] = b,
                None => return Err(StaircaseError::MissingPurePower(v)),
            }
        }
        Ok(StaircaseRegion {
            generators: minimal,
            bounds,
        })
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    /// Exact Hilbert-Kunz multiplicity of the monomial ideal: the volume of
    /// the staircase complement, by inclusion-exclusion over generator
    /// subsets. Integer-valued for integer exponents.
    pub fn exact_hk_multiplicity(&self) -> Result<BigRational, StaircaseError> {
        let g = self.generators.len();
        if g > SUBSET_CAP {
            return Err(StaircaseError::SubsetCapExceeded {
                count: g,
                cap: SUBSET_CAP,
            });
        }
        let n = self.dim();
        let box_volume: i128 = self.bounds.iter().map(|&b| i128::from(b)).product();
        let mut union: i128 = 0;
        for mask in 1u32..(1 << g) {
            let mut join = vec![0u32; n];
            for (i, gen) in self.generators.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    for (j, &e) in gen.iter().enumerate() {
                        join[j] = join[j].max(e);
                    }
                }
            }
            let vol: i128 = join
                .iter()
                .zip(&self.bounds)
                .map(|(&j, &b)| i128::from(b.saturating_sub(j)))
                .product();
            if mask.count_ones() % 2 == 1 {
                union += vol;
            } else {
                union -= vol;
            }
        }
        Ok(BigRational::from_integer((box_volume - union).into()))
    }

    /// Lattice count for the q-scaled staircase: the number of box points
    /// not dominated by any scaled generator, i.e. the colength of the
    /// q-th Frobenius power.
    pub fn brute_force_colength(&self, q: u32) -> Result<u64, StaircaseError> {
        assert!(q >= 1, "scaling factor must be positive");
        let n = self.dim();
        let scaled_bounds: Vec<u64> = self
            .bounds
            .iter()
            .map(|&b| u64::from(b) * u64::from(q))
            .collect();
        let points: u128 = scaled_bounds.iter().map(|&b| u128::from(b)).product();
        if points > ENUMERATION_CAP {
            return Err(StaircaseError::EnumerationCapExceeded {
                points,
                cap: ENUMERATION_CAP,
            });
        }
        let scaled_gens: Vec<Vec<u64>> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|&e| u64::from(e) * u64::from(q)).collect())
            .collect();
        let mut count = 0u64;
        let mut point = vec![0u64; n];
        loop {
            let dominated = scaled_gens
                .iter()
                .any(|g| g.iter().zip(&point).all(|(&ge, &pe)| pe >= ge));
            if !dominated {
                count += 1;
            }
            let mut v = 0;
            loop {
                if v == n {
                    return Ok(count);
                }
                point[v] += 1;
                if point[v] < scaled_bounds[v] {
                    break;
                }
                point[v] = 0;
                v += 1;
            }
        }
    }
}
