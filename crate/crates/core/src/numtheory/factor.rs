use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modular::mul_mod;
use super::primes::{is_prime, small_primes};
use super::NumberError;

const RHO_SEED: u64 = 0x5EED_F00D;

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// Number of positive divisors.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Full factorization: trial division by the primes below one million,
/// then Brent's variant of Pollard rho on whatever remains.
pub fn factor(n: u64) -> Result<FactoredInteger, NumberError> {
    if n == 0 {
        return Err(NumberError::Zero);
    }
    let mut primes: Vec<u64> = Vec::new();
    let mut rem = n;
    for &p in small_primes() {
        if rem == 1 || p.saturating_mul(p) > rem {
            break;
        }
        if rem.is_multiple_of(p) {
            while rem.is_multiple_of(p) {
                rem /= p;
                primes.push(p);
            }
            if is_prime(rem) {
                break;
            }
        }
    }
    if rem > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(RHO_SEED);
        split_into(rem, &mut rng, &mut primes);
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(FactoredInteger { n, factors })
}

pub fn big_omega(n: u64) -> Result<u32, NumberError> {
    Ok(factor(n)?.big_omega())
}

pub fn divisor_count(n: u64) -> Result<u64, NumberError> {
    Ok(factor(n)?.divisor_count())
}

fn split_into(n: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = loop {
        let d = brent_rho(n, rng.gen_range(1..n), rng.gen_range(1..n));
        if d != n {
            break d;
        }
    };
    split_into(d, rng, out);
    split_into(n / d, rng, out);
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One Brent cycle-finding run; returns a nontrivial divisor or `n` on failure.
fn brent_rho(n: u64, y0: u64, c: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    const BATCH: u64 = 128;
    let step = |v: u64| ((mul_mod(v, v, n) as u128 + c as u128) % n as u128) as u64;
    let (mut y, mut x, mut ys) = (y0, y0, y0);
    let mut g = 1;
    let mut r = 1u64;
    let mut q = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = step(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: u64) -> Vec<(u64, u32)> {
        factor(n).unwrap().factors().to_vec()
    }

    #[test]
    fn examples() {
        assert_eq!(pairs(12), vec![(2, 2), (3, 1)]);
        assert_eq!(pairs(97), vec![(97, 1)]);
        assert_eq!(pairs(2014), vec![(2, 1), (19, 1), (53, 1)]);
        assert!(pairs(1).is_empty());
        assert_eq!(factor(0), Err(NumberError::Zero));
    }

    #[test]
    fn counts() {
        assert_eq!(big_omega(1), Ok(0));
        assert_eq!(big_omega(98), Ok(3));
        assert_eq!(divisor_count(98), Ok(6));
        assert_eq!(divisor_count(8), Ok(4));
        assert_eq!(divisor_count(1), Ok(1));
        assert_eq!(divisor_count(720_720), Ok(240));
    }

    #[test]
    fn large_semiprimes_use_rho() {
        assert_eq!(
            pairs(1_470_626_929_934_143_021),
            vec![(1_206_429_347, 1), (1_218_991_343, 1)]
        );
        let p = 4_294_967_291u64;
        assert_eq!(pairs(p * p), vec![(p, 2)]);
        assert_eq!(
            pairs(u64::MAX),
            vec![(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65_537, 1), (6_700_417, 1)]
        );
        // three factors above the trial-division limit
        let (a, b, c) = (1_000_003u64, 1_000_033u64, 1_000_037u64);
        assert_eq!(pairs(a * b * c), vec![(a, 1), (b, 1), (c, 1)]);
    }

    #[test]
    fn display() {
        assert_eq!(factor(360).unwrap().to_string(), "2^3 * 3^2 * 5");
        assert_eq!(factor(1).unwrap().to_string(), "1");
    }
}
