//! Stratum-signature arithmetic: validation of the order tuple, the P/Q
//! prime partition of k, the capped valuation sum nu_Q, the invariant
//! n_k(mu) in two provably equivalent forms, and the spin-parity classes
//! for genus zero and one.
//!
//! n_k(mu) counts the entries m_i whose capped valuation parity differs
//! from that of k itself; equivalently (and without any factorization),
//! the entries with (2/gcd(k, m_i)) != (2/k). The gcd form is the
//! production path; the valuation form exists so the equivalence can be
//! tested, not assumed.

use std::fmt;

use crate::error::{Error, Result};
use crate::intmath::{factorize, gcd, valuation, Valuation};
use crate::jacobi::{jacobi_two, OddModulus};

/// Genus of the underlying surface; only 0 and 1 are supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Genus {
    Zero,
    One,
}

impl Genus {
    pub fn value(self) -> i64 {
        match self {
            Genus::Zero => 0,
            Genus::One => 1,
        }
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value().fmt(f)
    }
}

/// A validated stratum signature: odd k, a nonempty tuple of orders
/// summing to k*(2*genus - 2), and a rotation number exactly when the
/// genus is one.
///
/// The rotation number is taken as given; no admissibility range is
/// checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    k: OddModulus,
    entries: Vec<i64>,
    genus: Genus,
    rotation: Option<i64>,
}

impl Signature {
    pub fn new(
        k: OddModulus,
        entries: Vec<i64>,
        genus: Genus,
        rotation: Option<i64>,
    ) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSignature(
                "the order tuple must be nonempty".into(),
            ));
        }
        match (genus, rotation) {
            (Genus::One, None) => {
                return Err(Error::InvalidSignature(
                    "genus 1 requires a rotation number".into(),
                ))
            }
            (Genus::Zero, Some(_)) => {
                return Err(Error::InvalidSignature(
                    "a rotation number is only meaningful for genus 1".into(),
                ))
            }
            _ => {}
        }
        let expected = k.get() as i128 * (2 * genus.value() as i128 - 2);
        let actual: i128 = entries.iter().map(|&m| m as i128).sum();
        if actual != expected {
            return Err(Error::InvalidSignature(format!(
                "orders for genus {genus} with k = {k} must sum to {expected}, got {actual}"
            )));
        }
        Ok(Signature {
            k,
            entries,
            genus,
            rotation,
        })
    }

    pub fn k(&self) -> OddModulus {
        self.k
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn rotation(&self) -> Option<i64> {
        self.rotation
    }
}

/// The factorization of k split by the residue mod 8: p-primes (1, 7 mod 8,
/// where (2/p) = +1) against q-primes (3, 5 mod 8, where (2/q) = -1),
/// together with nu_Q(k), the total q-prime exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePartition {
    p_primes: Vec<(i64, u32)>,
    q_primes: Vec<(i64, u32)>,
    nu_q_of_k: u32,
}

impl PrimePartition {
    pub fn p_primes(&self) -> &[(i64, u32)] {
        &self.p_primes
    }

    pub fn q_primes(&self) -> &[(i64, u32)] {
        &self.q_primes
    }

    pub fn nu_q_of_k(&self) -> u32 {
        self.nu_q_of_k
    }
}

/// Split the factorization of odd k into p-primes and q-primes.
pub fn partition_primes(k: OddModulus) -> Result<PrimePartition> {
    let factorization = factorize(k.get())?;
    let mut p_primes = Vec::new();
    let mut q_primes = Vec::new();
    let mut nu_q_of_k = 0u32;
    for &(p, e) in factorization.pairs() {
        if matches!(p % 8, 1 | 7) {
            p_primes.push((p, e));
        } else {
            q_primes.push((p, e));
            nu_q_of_k += e;
        }
    }
    Ok(PrimePartition {
        p_primes,
        q_primes,
        nu_q_of_k,
    })
}

/// nu_Q(m) = sum over q-primes of min(nu_q(m), nu_q(k)). For m = 0 every
/// valuation is infinite and each cap saturates, giving nu_Q(k).
pub fn nu_q(m: i64, partition: &PrimePartition) -> u32 {
    partition
        .q_primes()
        .iter()
        .map(|&(q, cap)| {
            let v = valuation(q, m).expect("partition primes are prime and in bounds");
            v.min(Valuation::Finite(cap))
                .finite()
                .expect("capped by a finite value")
        })
        .sum()
}

/// n_k(mu) in the valuation form: the number of entries whose nu_Q parity
/// differs from nu_Q(k)'s. Needs the factorization of k.
pub fn n_k_valuation(sig: &Signature) -> Result<u64> {
    let partition = partition_primes(sig.k())?;
    let base = partition.nu_q_of_k() % 2;
    Ok(sig
        .entries()
        .iter()
        .filter(|&&m| nu_q(m, &partition) % 2 != base)
        .count() as u64)
}

/// n_k(mu) in the Jacobi-gcd form: the number of entries with
/// (2/d_i) != (2/k) for d_i = gcd(k, |m_i|), where an entry 0 gives
/// d_i = k and so never counts. Needs no factorization; this is the
/// production path.
pub fn n_k_jacobi(sig: &Signature) -> u64 {
    let k = sig.k();
    let base = jacobi_two(k);
    sig.entries()
        .iter()
        .filter(|&&m| jacobi_two(divisor_modulus(k, m)) != base)
        .count() as u64
}

fn divisor_modulus(k: OddModulus, m: i64) -> OddModulus {
    // gcd(k, 0) = k, so zero entries fall out of the same expression
    OddModulus::new(gcd(k.get(), m)).expect("divisors of an odd k are odd and positive")
}

/// The residue class separating spin components: n_k(mu) mod 2 for genus
/// zero, and n_k(mu) + d + 1 mod 2 for genus one with rotation number d.
///
/// This is a component-distinguishing label, not an assignment of even or
/// odd spin to either residue.
pub fn spin_parity_class(sig: &Signature) -> u8 {
    let n_k = n_k_jacobi(sig);
    match sig.genus() {
        Genus::Zero => (n_k % 2) as u8,
        Genus::One => {
            let d = sig
                .rotation()
                .expect("validated signature: genus one carries a rotation number");
            ((n_k as i64 % 2 + d.rem_euclid(2) + 1) % 2) as u8
        }
    }
}
