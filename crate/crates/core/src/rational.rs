//! Exact-rational helpers: construction and the canonical `num/den` text form.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_u64(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Serializes a rational as `num/den` with the denominator always present,
/// e.g. `3/2` and `2/1`. The exact-value wire form used by reports.
pub fn rat_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn rat_from_str(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("bad rational numerator in `{s}`"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("bad rational denominator in `{s}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(BigRational::new(n, d))
}

/// q^d as an exact rational.
pub fn pow_u64(base: u64, exp: usize) -> BigRational {
    let mut acc = BigRational::one();
    let b = rat_u64(base);
    for _ in 0..exp {
        acc *= b.clone();
    }
    acc
}

pub fn factorial(n: usize) -> BigRational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from_integer(acc)
}

pub fn abs(r: &BigRational) -> BigRational {
    r.abs()
}
