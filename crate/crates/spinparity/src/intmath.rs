//! Overflow-safe integer primitives: floor division, gcd, q-adic valuation,
//! and trial-division factorization.
//!
//! Everything works in signed 64-bit range with explicit guards; out-of-range
//! inputs are rejected with a capacity error instead of wrapping.

use crate::error::{Error, Result};

/// Largest integer accepted by [`factorize`] (and by the primality check
/// inside [`valuation`]). Trial division up to the square root stays cheap
/// below 2^48; anything larger is rejected with a capacity error.
pub const FACTORIZATION_BOUND: i64 = 1 << 48;

/// q-adic valuation: `Finite(v)` when q^v exactly divides the argument,
/// `Infinite` for the argument 0, which every prime power divides.
///
/// The derived order puts `Infinite` above every finite value, so
/// `min(Infinite, v) == v` holds through [`Ord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    /// The finite value, or `None` for `Infinite`.
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

/// A prime factorization as (prime, exponent) pairs, ascending by prime.
/// Factoring 1 yields the empty list.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(i64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(i64, u32)] {
        &self.pairs
    }

    /// Multiply the factorization back together.
    pub fn product(&self) -> i64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Floor division: the unique q with q*b <= a < q*b + |b| for b > 0, and
/// floor(a/b) in general. Rounds toward negative infinity, not toward zero.
pub fn floor_div(a: i64, b: i64) -> Result<i64> {
    if b == 0 {
        return Err(Error::DivisionByZero);
    }
    // floor(a/b) = floor((-a)/(-b)); Euclidean division matches floor once
    // the divisor is positive. Widen so i64::MIN negates cleanly.
    let (a, b) = if b < 0 {
        (-(a as i128), -(b as i128))
    } else {
        (a as i128, b as i128)
    };
    i64::try_from(a.div_euclid(b)).map_err(|_| Error::Capacity {
        what: "floor-division quotient",
        value: a.div_euclid(b),
        bound: i64::MAX as i128,
    })
}

/// gcd(|a|, |b|), with gcd(0, 0) = 0 and gcd(k, 0) = |k|.
///
/// Panics if both magnitudes are 2^63 (i.e. `i64::MIN` against itself or 0),
/// the one case whose gcd does not fit in `i64`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    i64::try_from(x).expect("gcd magnitude 2^63 does not fit in i64")
}

/// True for primes; callers keep n within [`FACTORIZATION_BOUND`] so the
/// trial divisor square below cannot overflow.
pub(crate) fn is_prime(n: i64) -> bool {
    debug_assert!(n <= FACTORIZATION_BOUND);
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// q-adic valuation of m: the largest v with q^v dividing |m|, or
/// [`Valuation::Infinite`] for m = 0.
pub fn valuation(q: i64, m: i64) -> Result<Valuation> {
    if q < 2 {
        return Err(Error::InvalidArgument(format!(
            "valuation base {q} must be a prime >= 2"
        )));
    }
    if q > FACTORIZATION_BOUND {
        return Err(Error::Capacity {
            what: "valuation base",
            value: q as i128,
            bound: FACTORIZATION_BOUND as i128,
        });
    }
    if !is_prime(q) {
        return Err(Error::InvalidArgument(format!(
            "valuation base {q} is not prime"
        )));
    }
    if m == 0 {
        return Ok(Valuation::Infinite);
    }
    let q = q as u64;
    let mut rest = m.unsigned_abs();
    let mut v = 0u32;
    while rest.is_multiple_of(q) {
        rest /= q;
        v += 1;
    }
    Ok(Valuation::Finite(v))
}

/// Complete prime factorization of k by trial division (2, then odd
/// candidates up to the square root).
pub fn factorize(k: i64) -> Result<Factorization> {
    if k <= 0 {
        return Err(Error::InvalidArgument(format!(
            "factorization input {k} must be positive"
        )));
    }
    if k > FACTORIZATION_BOUND {
        return Err(Error::Capacity {
            what: "factorization input",
            value: k as i128,
            bound: FACTORIZATION_BOUND as i128,
        });
    }
    let mut pairs = Vec::new();
    let mut rest = k;
    let mut twos = 0u32;
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    if twos > 0 {
        pairs.push((2, twos));
    }
    let mut d = 3i64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0u32;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            pairs.push((d, e));
        }
        d += 2;
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}
