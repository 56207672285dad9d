//! Acceptance suite: one test per criterion, every tolerance pinned in code.
//!
//! Run with `cargo test -p spinparity-cli --test acceptance` (add
//! `-- --nocapture` to see the per-criterion PASS lines; the harness prints
//! one ok/FAILED line per criterion either way).

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spinparity::{
    eisenstein_sign, f_k, f_k_naive, floor_div, floor_sum, gauss_schering_count, gcd,
    jacobi, jacobi_two, n_count, n_k_jacobi, n_k_valuation, nu_q, partition_primes, s_k,
    spin_parity_class, sweep_conjecture, sweep_identity, sweep_laws, target_parity, Genus,
    JacobiValue, NPolicy, OddModulus, PairCountMethod, Signature, SweepConfig, Verdict,
};

fn km(k: i64) -> OddModulus {
    OddModulus::new(k).unwrap()
}

fn coprime_config(k_min: i64, k_max: i64, method: PairCountMethod, workers: usize) -> SweepConfig {
    SweepConfig {
        k_min,
        k_max,
        n_policy: NPolicy::CoprimePairs,
        method,
        workers,
    }
}

/// Conjecture sweep: every odd k in [3, 2001], every doubly-coprime n in
/// [1, k-1], N_k(n) mod 2 equals floor((k+1)/4) mod 2. Zero counterexamples,
/// single-threaded, under 60 seconds.
#[test]
fn criterion_01_conjecture_sweep() {
    let started = Instant::now();
    let report =
        sweep_conjecture(&coprime_config(3, 2001, PairCountMethod::FloorIdentity, 1)).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(report.verdict, Verdict::Pass);
    assert_eq!(report.counterexamples.len(), 0);
    assert!(
        elapsed < Duration::from_secs(60),
        "single-threaded sweep took {elapsed:?}"
    );
    println!(
        "ACCEPTANCE 1 PASS: conjecture holds for odd k in [3, 2001] ({} checks in {elapsed:?})",
        report.checks_run
    );
}

/// Identity sweep: brute-force pair enumeration equals the floor identity
/// for every odd k in [3, 401] and every n in [0, 2k], coprime or not.
#[test]
fn criterion_02_identity_sweep() {
    let mut checks = 0u64;
    for k in (3..=401i64).step_by(2) {
        let cfg = SweepConfig {
            k_min: k,
            k_max: k,
            n_policy: NPolicy::AllN { n_max: 2 * k },
            method: PairCountMethod::FloorIdentity,
            workers: 1,
        };
        let report = sweep_identity(&cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "k={k}");
        assert_eq!(report.checks_run, (2 * k + 1) as u64, "k={k}");
        checks += report.checks_run;
    }
    println!("ACCEPTANCE 2 PASS: pair count equals floor identity on {checks} checks");
}

/// Eisenstein cross-check: (-1)^{S_k(a)} equals the binary-algorithm Jacobi
/// symbol for every odd k in [3, 301] and odd coprime a in [1, 2k].
#[test]
fn criterion_03_eisenstein_cross_check() {
    let mut checks = 0u64;
    for k in (3..=301i64).step_by(2) {
        let modulus = km(k);
        for a in (1..=2 * k).step_by(2) {
            if gcd(a, k) != 1 {
                continue;
            }
            let sign = JacobiValue::from_parity(s_k(a, modulus).unwrap());
            assert_eq!(sign, jacobi(a, modulus), "a={a} k={k}");
            assert_eq!(sign, eisenstein_sign(a, modulus).unwrap(), "a={a} k={k}");
            checks += 1;
        }
    }
    println!("ACCEPTANCE 3 PASS: eisenstein route matches on {checks} pairs");
}

/// Gauss-Schering cross-check: (-1)^{m(a,k)} equals the binary-algorithm
/// Jacobi symbol for every odd k in [3, 301] and coprime a in [1, k-1].
#[test]
fn criterion_04_gauss_schering_cross_check() {
    let mut checks = 0u64;
    for k in (3..=301i64).step_by(2) {
        let modulus = km(k);
        for a in 1..k {
            if gcd(a, k) != 1 {
                continue;
            }
            let count = gauss_schering_count(a, modulus).unwrap();
            assert_eq!(
                JacobiValue::from_parity(count as i64),
                jacobi(a, modulus),
                "a={a} k={k}"
            );
            checks += 1;
        }
    }
    println!("ACCEPTANCE 4 PASS: gauss-schering route matches on {checks} pairs");
}

/// Supplementary law: jacobi(2, k) = jacobi_two(k) = (-1)^{(k^2-1)/8} for
/// every odd k in [1, 10^5].
#[test]
fn criterion_05_supplementary_law() {
    let mut checks = 0u64;
    for k in (1..=99_999i64).step_by(2) {
        let modulus = km(k);
        let closed_form = JacobiValue::from_parity((k * k - 1) / 8);
        assert_eq!(jacobi(2, modulus), jacobi_two(modulus), "k={k}");
        assert_eq!(jacobi_two(modulus), closed_form, "k={k}");
        checks += 1;
    }
    println!("ACCEPTANCE 5 PASS: supplementary law matches on {checks} moduli");
}

/// Parity law: for every odd k in [3, 301] and coprime a in [1, 2k],
/// F_k(a) is even for odd a and has parity floor((k+1)/4) for even a.
#[test]
fn criterion_06_parity_law() {
    let mut checks = 0u64;
    for k in (3..=301i64).step_by(2) {
        let modulus = km(k);
        let target = i64::from(target_parity(modulus));
        for a in 1..=2 * k {
            if gcd(a, k) != 1 {
                continue;
            }
            let expected = if a % 2 == 1 { 0 } else { target };
            assert_eq!(f_k(a, modulus).unwrap().rem_euclid(2), expected, "a={a} k={k}");
            checks += 1;
        }
    }
    println!("ACCEPTANCE 6 PASS: parity law holds on {checks} pairs");
}

/// n_k equivalence: the capped-valuation form equals the Jacobi-gcd form on
/// 1000 randomized valid signatures (odd k <= 10^5, entries in
/// [-10^6, 10^6] with the last entry adjusted to satisfy the sum rule) and
/// exhaustively for odd k <= 45 with single entries in [-100, 100].
#[test]
fn criterion_07_n_k_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0007);
    for trial in 0..1_000 {
        let k = km(2 * rng.gen_range(0..=49_999i64) + 1);
        let genus = if rng.gen_bool(0.5) { Genus::Zero } else { Genus::One };
        let len = rng.gen_range(1..=8usize);
        let mut entries: Vec<i64> = (0..len.saturating_sub(1))
            .map(|_| rng.gen_range(-1_000_000..=1_000_000i64))
            .collect();
        let target = k.get() * (2 * genus.value() - 2);
        let partial: i64 = entries.iter().sum();
        entries.push(target - partial);
        let rotation = matches!(genus, Genus::One).then(|| rng.gen_range(-10..=10i64));
        let sig = Signature::new(k, entries, genus, rotation).unwrap();
        assert_eq!(
            n_k_valuation(&sig).unwrap(),
            n_k_jacobi(&sig),
            "trial={trial} k={k}"
        );
    }
    for k in (1..=45i64).step_by(2) {
        for m in -100..=100i64 {
            let sig = Signature::new(km(k), vec![m, -2 * k - m], Genus::Zero, None).unwrap();
            assert_eq!(n_k_valuation(&sig).unwrap(), n_k_jacobi(&sig), "k={k} m={m}");
        }
    }
    println!("ACCEPTANCE 7 PASS: n_k forms agree on randomized and exhaustive signatures");
}

fn floor_sum_by_terms(count: i64, modulus: i64, slope: i64, offset: i64) -> i64 {
    (0..count)
        .map(|i| floor_div(slope * i + offset, modulus).unwrap())
        .sum()
}

/// Floor-sum correctness: 10^4 randomized instances (count <= 10^4,
/// negative slopes and offsets included) and exhaustively for all
/// parameters in [-20, 20] with modulus in [1, 20].
#[test]
fn criterion_08_floor_sum_correctness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0008);
    for _ in 0..10_000 {
        let count = rng.gen_range(0..=10_000i64);
        let modulus = rng.gen_range(1..=100_000i64);
        let slope = rng.gen_range(-100_000..=100_000i64);
        let offset = rng.gen_range(-100_000..=100_000i64);
        assert_eq!(
            floor_sum(count, modulus, slope, offset).unwrap(),
            floor_sum_by_terms(count, modulus, slope, offset),
            "count={count} modulus={modulus} slope={slope} offset={offset}"
        );
    }
    for count in 0..=20i64 {
        for modulus in 1..=20i64 {
            for slope in -20..=20i64 {
                for offset in -20..=20i64 {
                    assert_eq!(
                        floor_sum(count, modulus, slope, offset).unwrap(),
                        floor_sum_by_terms(count, modulus, slope, offset),
                        "count={count} modulus={modulus} slope={slope} offset={offset}"
                    );
                }
            }
        }
    }
    println!("ACCEPTANCE 8 PASS: floor_sum matches term-by-term summation");
}

/// Fast-path performance: 10^6 evaluations of F_k at k = 10^9 + 7 with
/// random |a| <= 10^9 finish in under 5 seconds, and every result obeys the
/// parity law (k = 7 mod 8, so every coprime value is even).
#[test]
fn criterion_09_fast_path_performance() {
    let k = km(1_000_000_007);
    assert_eq!(target_parity(k), 0);
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0009);
    let inputs: Vec<i64> = (0..1_000_000)
        .map(|_| rng.gen_range(-1_000_000_000..=1_000_000_000i64))
        .collect();
    let started = Instant::now();
    let mut parity_violations = 0u64;
    for &a in &inputs {
        let value = f_k(a, k).unwrap();
        // k is prime and |a| < k, so a = 0 is the only non-coprime input
        if a != 0 && value.rem_euclid(2) != 0 {
            parity_violations += 1;
        }
    }
    let elapsed = started.elapsed();
    assert_eq!(parity_violations, 0);
    assert!(
        elapsed < Duration::from_secs(5),
        "10^6 evaluations took {elapsed:?}"
    );
    println!("ACCEPTANCE 9 PASS: 10^6 fast F_k evaluations in {elapsed:?}, parity law intact");
}

/// Determinism: `verify conjecture --k-min 3 --k-max 501` produces
/// byte-identical output (excluding timing) for --jobs 1 and --jobs 8, and
/// exits 0.
#[test]
fn criterion_10_cli_determinism() {
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_spinparity"))
            .args(["verify", "conjecture", "--k-min", "3", "--k-max", "501", "--jobs", jobs])
            .output()
            .expect("failed to spawn the spinparity binary");
        assert_eq!(out.status.code(), Some(0), "jobs={jobs}");
        String::from_utf8(out.stdout).unwrap()
    };
    let strip = |text: String| {
        text.lines()
            .filter(|line| !line.contains("elapsed_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let one = strip(run("1"));
    let eight = strip(run("8"));
    assert_eq!(one, eight);
    assert!(one.contains("verdict: PASS"));
    println!("ACCEPTANCE 10 PASS: --jobs 1 and --jobs 8 outputs are byte-identical");
}

/// Worked-example table: every concrete example value, reproduced exactly.
/// Each value was first confirmed by an independent brute-force oracle
/// (direct summation for the floor sums, pair enumeration for the counts,
/// residue tables and factorization for the symbols).
#[test]
fn criterion_11_worked_examples() {
    // jacobi
    assert_eq!(jacobi(2, km(3)).value(), -1);
    assert_eq!(jacobi(1, km(9)).value(), 1);
    assert_eq!(jacobi(5, km(21)).value(), 1);
    assert_eq!(jacobi(2, km(15)).value(), 1);
    assert_eq!(jacobi(2, km(5)).value(), -1);

    // jacobi_two
    assert_eq!(jacobi_two(km(7)).value(), 1);
    assert_eq!(jacobi_two(km(3)).value(), -1);
    assert_eq!(jacobi_two(km(15)).value(), 1);
    assert_eq!(jacobi_two(km(15)), jacobi(2, km(15)));

    // eisenstein_sign and its sum
    assert_eq!(s_k(3, km(5)).unwrap(), 1);
    assert_eq!(s_k(0, km(9)).unwrap(), 0);
    assert_eq!(s_k(5, km(21)).unwrap(), 8);
    assert_eq!(eisenstein_sign(3, km(5)).unwrap().value(), -1);
    assert_eq!(eisenstein_sign(1, km(9)).unwrap().value(), 1);
    assert_eq!(eisenstein_sign(5, km(21)).unwrap().value(), 1);

    // gauss_schering_count
    assert_eq!(gauss_schering_count(3, km(5)).unwrap(), 1);
    assert_eq!(gauss_schering_count(1, km(7)).unwrap(), 0);
    assert_eq!(gauss_schering_count(2, km(5)).unwrap(), 1);

    // f_k_naive
    assert_eq!(f_k_naive(2, km(5)).unwrap(), 1);
    assert_eq!(f_k_naive(3, km(5)).unwrap(), 2);
    assert_eq!(f_k_naive(0, km(7)).unwrap(), 0);

    // floor_sum; the third case pins the oracle-confirmed value of
    // 0 + floor(-2/3) + floor(-4/3) + floor(-6/3) = 0 - 1 - 2 - 2
    assert_eq!(floor_sum(3, 5, 2, 2).unwrap(), 1);
    assert_eq!(floor_sum(10, 1, 0, 0).unwrap(), 0);
    assert_eq!(floor_sum(4, 3, -2, 0).unwrap(), -5);
    assert_eq!(floor_sum_by_terms(4, 3, -2, 0), -5);

    // f_k
    assert_eq!(f_k(2, km(5)).unwrap(), 1);
    assert_eq!(f_k(7, km(5)).unwrap(), 4);
    assert_eq!(f_k(2, km(1_000_000_007)).unwrap().rem_euclid(2), 0);

    // target_parity
    assert_eq!(target_parity(km(3)), 1);
    assert_eq!(target_parity(km(7)), 0);
    assert_eq!(target_parity(km(1)), 0);

    // n_count on all three methods
    for method in [
        PairCountMethod::BrutePairs,
        PairCountMethod::LinearScan,
        PairCountMethod::FloorIdentity,
    ] {
        assert_eq!(n_count(2, km(5), method).unwrap(), 1);
        assert_eq!(n_count(0, km(9), method).unwrap(), 0);
        assert_eq!(n_count(2, km(7), method).unwrap(), 0);
    }
    assert_eq!(f_k(3, km(5)).unwrap() - f_k(2, km(5)).unwrap(), 1);
    assert_eq!(f_k(3, km(7)).unwrap() - f_k(2, km(7)).unwrap(), 0);

    // partition_primes
    let p15 = partition_primes(km(15)).unwrap();
    assert_eq!(p15.p_primes(), &[]);
    assert_eq!(p15.q_primes(), &[(3, 1), (5, 1)]);
    assert_eq!(p15.nu_q_of_k(), 2);
    let p7 = partition_primes(km(7)).unwrap();
    assert_eq!(p7.p_primes(), &[(7, 1)]);
    assert_eq!(p7.q_primes(), &[]);
    let p1 = partition_primes(km(1)).unwrap();
    assert!(p1.p_primes().is_empty() && p1.q_primes().is_empty() && p1.nu_q_of_k() == 0);

    // nu_q
    assert_eq!(nu_q(6, &p15), 1);
    assert_eq!(nu_q(2, &p15), 0);
    assert_eq!(nu_q(0, &p15), 2);

    // n_k in both forms
    let sig15 = Signature::new(km(15), vec![6, 2, -38], Genus::Zero, None).unwrap();
    let sig3 = Signature::new(km(3), vec![1, -7], Genus::Zero, None).unwrap();
    let sig7 = Signature::new(km(7), vec![2, -16], Genus::Zero, None).unwrap();
    let sig9 = Signature::new(km(9), vec![-9, -9], Genus::Zero, None).unwrap();
    assert_eq!(n_k_valuation(&sig15).unwrap(), 1);
    assert_eq!(n_k_valuation(&sig3).unwrap(), 2);
    assert_eq!(n_k_valuation(&sig7).unwrap(), 0);
    assert_eq!(n_k_jacobi(&sig15), 1);
    assert_eq!(n_k_jacobi(&sig3), 2);
    assert_eq!(n_k_jacobi(&sig9), 0);

    // spin_parity_class
    let g1 = |d| Signature::new(km(3), vec![1, -1], Genus::One, Some(d)).unwrap();
    assert_eq!(spin_parity_class(&sig15), 1);
    assert_eq!(spin_parity_class(&g1(0)), 1);
    assert_eq!(spin_parity_class(&g1(1)), 0);

    // sweep examples
    let report = sweep_conjecture(&coprime_config(3, 101, PairCountMethod::FloorIdentity, 1)).unwrap();
    assert_eq!(report.verdict, Verdict::Pass);
    let report = sweep_conjecture(&coprime_config(3, 101, PairCountMethod::BrutePairs, 1)).unwrap();
    assert_eq!(report.verdict, Verdict::Pass);
    let report = sweep_conjecture(&coprime_config(5, 5, PairCountMethod::FloorIdentity, 1)).unwrap();
    assert_eq!(report.checks_run, 3);
    let report = sweep_conjecture(&coprime_config(1, 1, PairCountMethod::FloorIdentity, 1)).unwrap();
    assert_eq!(report.checks_run, 0);
    assert_eq!(report.verdict, Verdict::Pass);

    let identity_cfg = |k_min, k_max, n_max| SweepConfig {
        k_min,
        k_max,
        n_policy: NPolicy::AllN { n_max },
        method: PairCountMethod::FloorIdentity,
        workers: 1,
    };
    assert_eq!(
        sweep_identity(&identity_cfg(3, 51, 102)).unwrap().verdict,
        Verdict::Pass
    );
    let report = sweep_identity(&identity_cfg(9, 9, 0)).unwrap();
    assert_eq!(report.checks_run, 1);
    assert_eq!(report.verdict, Verdict::Pass);
    assert_eq!(
        sweep_identity(&identity_cfg(15, 15, 30)).unwrap().verdict,
        Verdict::Pass
    );

    assert_eq!(sweep_laws(101, 1).unwrap().verdict, Verdict::Pass);
    let report = sweep_laws(3, 1).unwrap();
    assert_eq!(report.verdict, Verdict::Pass);
    assert!(report.checks_run > 0);
    assert_eq!(sweep_laws(301, 1).unwrap().verdict, Verdict::Pass);

    println!("ACCEPTANCE 11 PASS: every worked example value reproduced exactly");
}
