//! The combinatorial core: the floor sums S_k(a) and F_k(a), a
//! logarithmic-time floor-sum engine, the pair count N_k(n) in three
//! independent forms, and the target parity floor((k+1)/4) mod 2.
//!
//! F_k(a) = sum_{i=1}^{m} floor((a*i + m)/k) with m = (k-1)/2, and
//! N_k(n) counts pairs (b1, b2) with 1 <= b1, b2 <= m, b1 + b2 >= m + 1,
//! and b2 = n*b1 (mod k). The two are tied together by
//! N_k(n) = F_k(n+1) - F_k(n), which holds with no coprimality hypothesis
//! and is what makes the O(log k) evaluation route possible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jacobi::OddModulus;

/// Bound accepted by [`floor_sum`] for count, modulus, |slope| and |offset|:
/// 2^31, so every intermediate product fits signed 64-bit with headroom.
pub const FLOOR_SUM_BOUND: i64 = 1 << 31;

/// Largest modulus accepted by the quadratic brute-force pair enumeration.
pub const BRUTE_PAIRS_BOUND: i64 = 100_000;

/// The three interchangeable algorithms behind [`n_count`]. They agree
/// pointwise; brute force exists to be an oracle, not to be fast.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairCountMethod {
    /// Enumerate all (b1, b2) pairs and test both conditions: O(m^2).
    BrutePairs,
    /// Per b1, test the unique candidate residue: O(m).
    LinearScan,
    /// F_k(n+1) - F_k(n) through the fast floor sum: O(log k).
    FloorIdentity,
}

/// Guard for the term-by-term sums: every a*i + m with i <= m must fit i64.
fn naive_term_guard(a: i64, m: i64) -> Result<()> {
    if m > 0 && a.unsigned_abs().saturating_add(1) > (i64::MAX as u64) / (m as u64) {
        return Err(Error::Capacity {
            what: "term-by-term floor-sum numerator |a|",
            value: a.unsigned_abs() as i128,
            bound: (i64::MAX / m - 1) as i128,
        });
    }
    Ok(())
}

/// S_k(a) = sum_{i=1}^{m} floor(a*i/k), term by term.
pub fn s_k(a: i64, k: OddModulus) -> Result<i64> {
    naive_term_guard(a, k.half())?;
    Ok((1..=k.half()).map(|i| (a * i).div_euclid(k.get())).sum())
}

/// F_k(a) = sum_{i=1}^{m} floor((a*i + m)/k), term by term.
pub fn f_k_naive(a: i64, k: OddModulus) -> Result<i64> {
    let m = k.half();
    naive_term_guard(a, m)?;
    Ok((1..=m).map(|i| (a * i + m).div_euclid(k.get())).sum())
}

/// sum_{i=0}^{count-1} floor((slope*i + offset)/modulus), exactly, in time
/// logarithmic in max(|slope|, modulus) regardless of count.
///
/// Negative slope and offset are shift-normalized first; the Euclidean-style
/// reduction then runs on nonnegative values. The accumulator works modulo
/// 2^64, which is exact because the true result is certified (up front, in
/// 128-bit) to fit in i64.
pub fn floor_sum(count: i64, modulus: i64, slope: i64, offset: i64) -> Result<i64> {
    if modulus <= 0 {
        return Err(Error::InvalidArgument(format!(
            "floor-sum modulus {modulus} must be positive"
        )));
    }
    if count < 0 {
        return Err(Error::InvalidArgument(format!(
            "floor-sum count {count} must be nonnegative"
        )));
    }
    for (what, value) in [
        ("floor-sum count", count as i128),
        ("floor-sum modulus", modulus as i128),
        ("floor-sum |slope|", (slope as i128).abs()),
        ("floor-sum |offset|", (offset as i128).abs()),
    ] {
        if value > FLOOR_SUM_BOUND as i128 {
            return Err(Error::Capacity {
                what,
                value,
                bound: FLOOR_SUM_BOUND as i128,
            });
        }
    }
    if count == 0 {
        return Ok(0);
    }
    // Certify |result| <= i64::MAX so the mod-2^64 accumulator is exact.
    {
        let (n, m) = (count as i128, modulus as i128);
        let max_numerator = (slope as i128).abs() * (n - 1) + (offset as i128).abs();
        if n * (max_numerator / m + 1) > i64::MAX as i128 {
            return Err(Error::Capacity {
                what: "floor-sum result magnitude",
                value: n * (max_numerator / m + 1),
                bound: i64::MAX as i128,
            });
        }
    }

    let n = count as u64;
    let mut acc = 0u64;
    let mut slope = slope;
    let mut offset = offset;
    if slope < 0 {
        let reduced = slope.rem_euclid(modulus);
        let lift = ((reduced - slope) / modulus) as u64;
        acc = acc.wrapping_sub((n * (n - 1) / 2).wrapping_mul(lift));
        slope = reduced;
    }
    if offset < 0 {
        let reduced = offset.rem_euclid(modulus);
        let lift = ((reduced - offset) / modulus) as u64;
        acc = acc.wrapping_sub(n.wrapping_mul(lift));
        offset = reduced;
    }
    acc = acc.wrapping_add(floor_sum_unsigned(
        n,
        modulus as u64,
        slope as u64,
        offset as u64,
    ));
    Ok(acc as i64)
}

/// Euclidean-style reduction for nonnegative parameters; result mod 2^64.
fn floor_sum_unsigned(mut n: u64, mut m: u64, mut a: u64, mut b: u64) -> u64 {
    let mut acc = 0u64;
    loop {
        if a >= m {
            acc = acc.wrapping_add((n * (n - 1) / 2).wrapping_mul(a / m));
            a %= m;
        }
        if b >= m {
            acc = acc.wrapping_add(n.wrapping_mul(b / m));
            b %= m;
        }
        // a < m and n stay below 2^31-ish through the swaps, so no overflow
        let y_max = a * n + b;
        if y_max < m {
            return acc;
        }
        n = y_max / m;
        b = y_max % m;
        std::mem::swap(&mut m, &mut a);
    }
}

/// F_k(a) through [`floor_sum`]: the i = 0 term floor(m/k) vanishes, so the
/// 0..=m range equals the classical 1..=m sum. Exact match with
/// [`f_k_naive`], in O(log k).
pub fn f_k(a: i64, k: OddModulus) -> Result<i64> {
    floor_sum(k.half() + 1, k.get(), a, k.half())
}

/// floor((k+1)/4) mod 2, read off the residue of k mod 8:
/// 0 for k = 1, 7 and 1 for k = 3, 5.
pub fn target_parity(k: OddModulus) -> u8 {
    match k.get() % 8 {
        1 | 7 => 0,
        _ => 1,
    }
}

/// N_k(n): the number of pairs (b1, b2) in [1, m]^2 with b1 + b2 >= m + 1
/// and b2 = n*b1 (mod k), computed by the requested method.
///
/// The definitional methods require n >= 0; the floor-identity route is
/// total in n. No coprimality of n and k is required by any route.
pub fn n_count(n: i64, k: OddModulus, method: PairCountMethod) -> Result<u64> {
    match method {
        PairCountMethod::BrutePairs => brute_pairs(n, k),
        PairCountMethod::LinearScan => linear_scan(n, k),
        PairCountMethod::FloorIdentity => {
            let next = n.checked_add(1).ok_or(Error::Capacity {
                what: "pair-count argument n + 1",
                value: n as i128 + 1,
                bound: i64::MAX as i128,
            })?;
            let diff = f_k(next, k)? - f_k(n, k)?;
            debug_assert!(diff >= 0, "pair counts are nonnegative");
            Ok(diff as u64)
        }
    }
}

fn require_nonnegative(n: i64) -> Result<()> {
    if n < 0 {
        return Err(Error::Precondition(format!(
            "the definitional pair enumerations require n >= 0, got {n}"
        )));
    }
    Ok(())
}

fn brute_pairs(n: i64, k: OddModulus) -> Result<u64> {
    require_nonnegative(n)?;
    if k.get() > BRUTE_PAIRS_BOUND {
        return Err(Error::Capacity {
            what: "brute-force pair-enumeration modulus k",
            value: k.get() as i128,
            bound: BRUTE_PAIRS_BOUND as i128,
        });
    }
    let modulus = k.get();
    let m = k.half();
    let step = n.rem_euclid(modulus);
    let mut residue = 0i64; // n*b1 mod k, maintained incrementally
    let mut count = 0u64;
    for b1 in 1..=m {
        residue += step;
        if residue >= modulus {
            residue -= modulus;
        }
        for b2 in 1..=m {
            if b1 + b2 > m && (b2 - residue).rem_euclid(modulus) == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

fn linear_scan(n: i64, k: OddModulus) -> Result<u64> {
    require_nonnegative(n)?;
    let modulus = k.get();
    let m = k.half();
    let step = n.rem_euclid(modulus);
    let mut residue = 0i64;
    let mut count = 0u64;
    for b1 in 1..=m {
        residue += step;
        if residue >= modulus {
            residue -= modulus;
        }
        // the congruence has a solution b2 in [1, m] iff residue <= m (and
        // nonzero); b2 = residue, and b1 + b2 >= m + 1 iff residue >= m+1-b1
        if residue <= m && residue >= m + 1 - b1 {
            count += 1;
        }
    }
    Ok(count)
}
