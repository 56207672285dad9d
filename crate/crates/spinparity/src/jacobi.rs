//! The Jacobi symbol (a/k) for odd positive k, evaluated by three
//! independent routes:
//!
//! - [`jacobi`]: the standard binary reciprocity algorithm (production path);
//! - [`eisenstein_sign`]: Eisenstein's lemma, (a/k) = (-1)^{sum floor(a*i/k)}
//!   for odd coprime a;
//! - [`gauss_schering_count`]: the Gauss-Schering count of least residues
//!   landing in the upper half, with (a/k) = (-1)^count.
//!
//! The counting routes never shortcut through the binary algorithm; they
//! exist to cross-validate it (and each other) over exhaustive ranges.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};
use crate::floorcount;
use crate::intmath::gcd;

/// An odd positive modulus k with m = (k - 1)/2 cached.
///
/// k = 1 is admitted as the degenerate case: every classical sum over
/// 1..=m is then empty and (a/1) = +1 for all a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddModulus {
    k: i64,
    m: i64,
}

impl OddModulus {
    pub fn new(k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidArgument(format!(
                "modulus {k} must be positive"
            )));
        }
        if k % 2 == 0 {
            return Err(Error::InvalidArgument(format!("modulus {k} must be odd")));
        }
        Ok(OddModulus { k, m: (k - 1) / 2 })
    }

    pub fn get(self) -> i64 {
        self.k
    }

    /// m = (k - 1)/2, the summation limit of the classical floor sums.
    pub fn half(self) -> i64 {
        self.m
    }
}

impl fmt::Display for OddModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.k.fmt(f)
    }
}

/// Value of a Jacobi symbol: -1, 0, or +1. Zero exactly when the inputs
/// share a nontrivial common factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JacobiValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl JacobiValue {
    pub fn value(self) -> i64 {
        match self {
            JacobiValue::MinusOne => -1,
            JacobiValue::Zero => 0,
            JacobiValue::PlusOne => 1,
        }
    }

    /// (-1)^exponent; never zero. Sign-insensitive in the exponent.
    pub fn from_parity(exponent: i64) -> Self {
        if exponent.rem_euclid(2) == 0 {
            JacobiValue::PlusOne
        } else {
            JacobiValue::MinusOne
        }
    }
}

impl Neg for JacobiValue {
    type Output = JacobiValue;

    fn neg(self) -> JacobiValue {
        match self {
            JacobiValue::MinusOne => JacobiValue::PlusOne,
            JacobiValue::Zero => JacobiValue::Zero,
            JacobiValue::PlusOne => JacobiValue::MinusOne,
        }
    }
}

impl Mul for JacobiValue {
    type Output = JacobiValue;

    fn mul(self, rhs: JacobiValue) -> JacobiValue {
        match (self, rhs) {
            (JacobiValue::Zero, _) | (_, JacobiValue::Zero) => JacobiValue::Zero,
            (a, b) if a == b => JacobiValue::PlusOne,
            _ => JacobiValue::MinusOne,
        }
    }
}

impl fmt::Display for JacobiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value().fmt(f)
    }
}

/// The Jacobi symbol (a/k) by the binary reciprocity algorithm.
///
/// Negative a is reduced modulo k first; the result is 0 iff gcd(a, k) > 1,
/// and (a/1) = +1 for every a.
pub fn jacobi(a: i64, k: OddModulus) -> JacobiValue {
    let mut num = a.rem_euclid(k.get());
    let mut den = k.get();
    let mut acc = JacobiValue::PlusOne;
    while num != 0 {
        while num % 2 == 0 {
            num /= 2;
            // (2/den) = -1 iff den = +-3 (mod 8)
            if matches!(den % 8, 3 | 5) {
                acc = -acc;
            }
        }
        // reciprocity: flip unless either side is 1 (mod 4)
        std::mem::swap(&mut num, &mut den);
        if num % 4 == 3 && den % 4 == 3 {
            acc = -acc;
        }
        num %= den;
    }
    if den == 1 {
        acc
    } else {
        JacobiValue::Zero
    }
}

/// (2/k) from the residue of k mod 8: +1 for k = +-1, -1 for k = +-3.
pub fn jacobi_two(k: OddModulus) -> JacobiValue {
    match k.get() % 8 {
        1 | 7 => JacobiValue::PlusOne,
        _ => JacobiValue::MinusOne,
    }
}

/// Eisenstein's route: (a/k) = (-1)^{S_k(a)} with S_k(a) = sum_{i=1}^{m}
/// floor(a*i/k), for odd a >= 1 coprime to k. The sum is delegated to
/// [`floorcount::s_k`].
pub fn eisenstein_sign(a: i64, k: OddModulus) -> Result<JacobiValue> {
    if a < 1 || a % 2 == 0 {
        return Err(Error::Precondition(format!(
            "eisenstein route requires an odd positive numerator, got {a}"
        )));
    }
    let g = gcd(a, k.get());
    if g != 1 {
        return Err(Error::Precondition(format!(
            "eisenstein route requires gcd(a, k) = 1, got gcd({a}, {k}) = {g}"
        )));
    }
    Ok(JacobiValue::from_parity(floorcount::s_k(a, k)?))
}

/// Gauss-Schering count m(a, k): the number of j in 1..=m whose least
/// nonnegative residue of a*j modulo k exceeds m. For coprime a >= 1,
/// (-1)^{m(a,k)} equals (a/k).
pub fn gauss_schering_count(a: i64, k: OddModulus) -> Result<u64> {
    if a < 1 {
        return Err(Error::Precondition(format!(
            "gauss-schering count requires a >= 1, got {a}"
        )));
    }
    let g = gcd(a, k.get());
    if g != 1 {
        return Err(Error::Precondition(format!(
            "gauss-schering count requires gcd(a, k) = 1, got gcd({a}, {k}) = {g}"
        )));
    }
    let modulus = k.get();
    let step = a.rem_euclid(modulus);
    let mut residue = 0i64;
    let mut count = 0u64;
    for _ in 1..=k.half() {
        residue += step;
        if residue >= modulus {
            residue -= modulus;
        }
        if residue > k.half() {
            count += 1;
        }
    }
    Ok(count)
}
