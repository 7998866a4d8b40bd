//! Arithmetic in the prime field F_p for p < 2^16.
//!
//! Moduli are small enough that every product fits a 64-bit intermediate,
//! so all operations are exact with no bignum cost.

use thiserror::Error;

/// Largest admissible modulus (exclusive). Keeps `u64` intermediates safe.
pub const MAX_MODULUS: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("p must be prime, got {0}")]
    NotPrime(u32),

    #[error("p must satisfy 2 <= p < 2^16, got {0}")]
    OutOfRange(u32),
}

/// Trial-division primality test; moduli are < 2^16 so this is instant.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u32;
    while d.checked_mul(d).is_some_and(|dd| dd <= p) {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates a modulus for use as a coefficient field characteristic.
pub fn check_modulus(p: u32) -> Result<(), FieldError> {
    if !(2..MAX_MODULUS).contains(&p) {
        return Err(FieldError::OutOfRange(p));
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    Ok(())
}

/// A residue in F_p together with its modulus.
///
/// Mixing scalars of different moduli is a programming error and panics;
/// ring compatibility is checked once at the polynomial level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u32,
    modulus: u32,
}

// add/sub/mul/neg are the field vocabulary here, not operator sugar
#[allow(clippy::should_implement_trait)]
impl FieldScalar {
    /// Reduces an arbitrary signed integer into [0, p).
    pub fn new(value: i64, modulus: u32) -> Self {
        debug_assert!(modulus >= 2);
        let m = i64::from(modulus);
        let v = value.rem_euclid(m) as u32;
        FieldScalar { value: v, modulus }
    }

    pub fn from_residue(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        FieldScalar { value, modulus }
    }

    pub fn zero(modulus: u32) -> Self {
        FieldScalar { value: 0, modulus }
    }

    pub fn one(modulus: u32) -> Self {
        FieldScalar::new(1, modulus)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_one(self) -> bool {
        self.value == 1
    }

    fn check(self, other: FieldScalar) {
        assert_eq!(
            self.modulus, other.modulus,
            "field scalars with different moduli"
        );
    }

    pub fn add(self, other: FieldScalar) -> FieldScalar {
        self.check(other);
        let s = (u64::from(self.value) + u64::from(other.value)) % u64::from(self.modulus);
        FieldScalar::from_residue(s as u32, self.modulus)
    }

    pub fn sub(self, other: FieldScalar) -> FieldScalar {
        self.add(other.neg())
    }

    pub fn neg(self) -> FieldScalar {
        if self.value == 0 {
            self
        } else {
            FieldScalar::from_residue(self.modulus - self.value, self.modulus)
        }
    }

    pub fn mul(self, other: FieldScalar) -> FieldScalar {
        self.check(other);
        let m = (u64::from(self.value) * u64::from(other.value)) % u64::from(self.modulus);
        FieldScalar::from_residue(m as u32, self.modulus)
    }

    pub fn pow(self, mut e: u64) -> FieldScalar {
        let mut base = self;
        let mut acc = FieldScalar::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; panics on zero (a division-by-zero bug).
    pub fn inv(self) -> FieldScalar {
        assert!(!self.is_zero(), "inverse of zero in F_{}", self.modulus);
        self.pow(u64::from(self.modulus) - 2)
    }
}
