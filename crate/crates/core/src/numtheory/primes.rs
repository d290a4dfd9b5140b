use std::sync::OnceLock;

use super::modular::{mul_mod, pow_mod};

/// Bound of the cached prime table used for trial division.
pub(crate) const TRIAL_LIMIT: u64 = 1_000_000;

/// Witness set that makes Miller-Rabin deterministic below 2^64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// All primes `<= limit`, by a plain sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Primes below one million, computed once.
pub fn small_primes() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| primes_up_to(TRIAL_LIMIT))
}

/// Deterministic primality test valid for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_values() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
    }

    #[test]
    fn agrees_with_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_and_large_primes() {
        // strong pseudoprime to the prime bases 2 through 23
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest 64-bit prime
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime((1u64 << 61) + 1));
    }

    #[test]
    fn table_matches_count() {
        assert_eq!(small_primes().len(), 78_498);
        assert_eq!(primes_up_to(100).len(), 25);
    }
}
