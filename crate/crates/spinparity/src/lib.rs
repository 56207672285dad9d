//! Number-theoretic core behind the `spinparity` toolkit.
//!
//! - [`intmath`]: overflow-safe floor division, gcd, q-adic valuations, and
//!   trial-division factorization;
//! - [`jacobi`]: the Jacobi symbol by the binary algorithm and by the two
//!   classical counting routes (Eisenstein, Gauss-Schering);
//! - [`floorcount`]: the floor sums S_k and F_k, a logarithmic-time
//!   floor-sum engine, and the pair count N_k(n) in three forms;
//! - [`strata`]: stratum signatures, the P/Q prime partition, n_k(mu), and
//!   the genus-0/1 spin-parity classes;
//! - [`sweep`]: exhaustive, deterministic verification campaigns over
//!   ranges of k, parallelized per k.

pub mod error;
pub mod floorcount;
pub mod intmath;
pub mod jacobi;
pub mod strata;
pub mod sweep;

pub use error::{Error, Result};
pub use floorcount::{
    f_k, f_k_naive, floor_sum, n_count, s_k, target_parity, PairCountMethod, BRUTE_PAIRS_BOUND,
    FLOOR_SUM_BOUND,
};
pub use intmath::{
    factorize, floor_div, gcd, valuation, Factorization, Valuation, FACTORIZATION_BOUND,
};
pub use jacobi::{
    eisenstein_sign, gauss_schering_count, jacobi, jacobi_two, JacobiValue, OddModulus,
};
pub use strata::{
    n_k_jacobi, n_k_valuation, nu_q, partition_primes, spin_parity_class, Genus, PrimePartition,
    Signature,
};
pub use sweep::{
    default_workers, sweep_conjecture, sweep_identity, sweep_laws, Counterexample, NPolicy,
    SweepConfig, SweepReport, Verdict,
};
