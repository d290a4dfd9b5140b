use std::fmt;

use super::factor::factor;
use super::modular::isqrt;
use super::primes::{primes_up_to, small_primes, TRIAL_LIMIT};
use super::NumberError;

/// Exponent of the short-interval length `x^(101/232)`.
pub const WU_THETA_NUM: u64 = 101;
pub const WU_THETA_DEN: u64 = 232;
pub const WU_THETA: f64 = WU_THETA_NUM as f64 / WU_THETA_DEN as f64;

/// Slack toward inclusion when comparing a gap with `x^theta`.
const BOUNDARY_GUARD: f64 = 1e-9;

/// Points per sieve segment in [`wu_scan`].
const SEGMENT: u64 = 1 << 16;

/// Above this stride the scan probes each point directly instead of sieving.
const DIRECT_STRIDE: u64 = 64;

/// True iff `n` has one or two prime factors counted with multiplicity.
pub fn is_p2(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    // Ω(n) >= 3 forces a factor <= cbrt(n); anything else is prime or a semiprime.
    let mut rem = n;
    let mut omega = 0;
    for &p in small_primes() {
        if p.saturating_mul(p).saturating_mul(p) > rem {
            break;
        }
        while rem.is_multiple_of(p) {
            rem /= p;
            omega += 1;
            if omega > 2 {
                return false;
            }
        }
    }
    if p_cubed_exceeds_table(rem) {
        // rem may still hold three factors above the table: fall back to full factorization
        return factor(n).map(|f| f.big_omega() <= 2).unwrap_or(false);
    }
    omega + omega_small_tail(rem) <= 2
}

fn p_cubed_exceeds_table(rem: u64) -> bool {
    (TRIAL_LIMIT as u128).pow(3) <= rem as u128
}

/// Ω of a number with no prime factor at or below its cube root.
fn omega_small_tail(rem: u64) -> u32 {
    if rem == 1 {
        0
    } else if super::is_prime(rem) {
        1
    } else {
        2
    }
}

/// `x - x^theta`, the open lower end of the short interval below `x`.
fn interval_lo(x: u64) -> f64 {
    x as f64 - interval_len(x)
}

fn interval_len(x: u64) -> f64 {
    (x as f64).powf(WU_THETA)
}

/// Does `x - gap` lie inside `(x - x^theta, x]`?
fn within_interval(x: u64, gap: u64) -> bool {
    (gap as f64) < interval_len(x) + BOUNDARY_GUARD
}

/// Result of [`find_p2_at_or_below`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct P2Selection {
    pub q: u64,
    /// Whether `q > x - x^(101/232)`.
    pub in_interval: bool,
}

/// Largest `q <= x` with at most two prime factors.
pub fn find_p2_at_or_below(x: u64) -> Result<P2Selection, NumberError> {
    if x < 2 {
        return Err(NumberError::BadRange(format!("x = {x} must be at least 2")));
    }
    let q = (2..=x).rev().find(|&q| is_p2(q)).expect("2 is prime");
    Ok(P2Selection {
        q,
        in_interval: within_interval(x, x - q),
    })
}

/// Largest almost-prime in `(x - x^(101/232), x]`, or a record of its absence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlmostPrimeWitness {
    pub x: u64,
    pub interval_lo: f64,
    pub q: Option<u64>,
}

impl AlmostPrimeWitness {
    pub fn theta(&self) -> (u64, u64) {
        (WU_THETA_NUM, WU_THETA_DEN)
    }

    pub fn gap(&self) -> Option<u64> {
        self.q.map(|q| self.x - q)
    }

    fn new(x: u64, q: Option<u64>) -> Self {
        Self {
            x,
            interval_lo: interval_lo(x),
            q,
        }
    }
}

/// Scan output lines: `x q gap`, with `-` marking an absent witness.
impl fmt::Display for AlmostPrimeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.q, self.gap()) {
            (Some(q), Some(gap)) => write!(f, "{} {} {}", self.x, q, gap),
            _ => write!(f, "{} - -", self.x),
        }
    }
}

fn check_x(x: u64) -> Result<(), NumberError> {
    if x < 16 {
        return Err(NumberError::BadRange(format!("x = {x} must be at least 16")));
    }
    Ok(())
}

pub fn wu_witness(x: u64) -> Result<AlmostPrimeWitness, NumberError> {
    check_x(x)?;
    let q = (0..=x)
        .take_while(|&gap| within_interval(x, gap))
        .map(|gap| x - gap)
        .find(|&q| is_p2(q));
    Ok(AlmostPrimeWitness::new(x, q))
}

#[derive(Debug, Clone, PartialEq)]
pub struct WuScan {
    pub records: Vec<AlmostPrimeWitness>,
}

impl WuScan {
    pub fn absent(&self) -> usize {
        self.records.iter().filter(|r| r.q.is_none()).count()
    }

    /// Summary line for the scan output.
    pub fn summary(&self) -> String {
        format!(
            "# records={} absent={} theta={}/{}",
            self.records.len(),
            self.absent(),
            WU_THETA_NUM,
            WU_THETA_DEN
        )
    }
}

/// Witness for every `x = lo, lo + stride, ... <= hi`, ascending.
pub fn wu_scan(lo: u64, hi: u64, stride: u64) -> Result<WuScan, NumberError> {
    if stride == 0 {
        return Err(NumberError::ZeroStride);
    }
    check_x(lo)?;
    if lo > hi {
        return Err(NumberError::BadRange(format!("lo = {lo} exceeds hi = {hi}")));
    }
    let xs = (lo..=hi).step_by(stride as usize);
    if stride >= DIRECT_STRIDE {
        let records = xs.map(wu_witness).collect::<Result<_, _>>()?;
        return Ok(WuScan { records });
    }

    let start = (interval_lo(lo).floor() as u64).max(2);
    let sieve = OmegaSieve::new(hi);
    let mut records = Vec::with_capacity(((hi - lo) / stride + 1) as usize);
    let mut xs = xs;
    let mut next = xs.next();
    let mut last_p2: Option<u64> = None;
    let mut seg_lo = start;
    let mut omega = Vec::new();
    while next.is_some() {
        let seg_hi = (seg_lo + SEGMENT - 1).min(hi);
        sieve.fill(seg_lo, seg_hi, &mut omega);
        for (n, &w) in (seg_lo..).zip(&omega) {
            if (1..=2).contains(&w) {
                last_p2 = Some(n);
            }
            if next == Some(n) {
                let q = last_p2.filter(|&q| within_interval(n, n - q));
                records.push(AlmostPrimeWitness::new(n, q));
                next = xs.next();
            }
        }
        seg_lo = seg_hi + 1;
    }
    Ok(WuScan { records })
}

/// Segmented sieve of Ω(n), capped at 3.
struct OmegaSieve {
    primes: Vec<u64>,
}

impl OmegaSieve {
    fn new(hi: u64) -> Self {
        let root = isqrt(hi);
        let primes = if root <= TRIAL_LIMIT {
            small_primes().iter().copied().take_while(|&p| p <= root).collect()
        } else {
            primes_up_to(root)
        };
        Self { primes }
    }

    fn fill(&self, lo: u64, hi: u64, omega: &mut Vec<u8>) {
        let len = (hi - lo + 1) as usize;
        let mut rem: Vec<u64> = (lo..=hi).collect();
        omega.clear();
        omega.resize(len, 0);
        for &p in &self.primes {
            if p * p > hi {
                break;
            }
            let mut pk = p;
            loop {
                let first = lo.div_ceil(pk) * pk;
                let mut m = first;
                while m <= hi {
                    let i = (m - lo) as usize;
                    rem[i] /= p;
                    omega[i] = omega[i].saturating_add(1);
                    m += pk;
                }
                match pk.checked_mul(p) {
                    Some(next) if next <= hi => pk = next,
                    _ => break,
                }
            }
        }
        for (w, r) in omega.iter_mut().zip(&rem) {
            if *r > 1 {
                *w = w.saturating_add(1);
            }
            *w = (*w).min(3);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega_by_trial(mut n: u64) -> u32 {
        let mut count = 0;
        let mut d = 2;
        while d * d <= n {
            while n.is_multiple_of(d) {
                n /= d;
                count += 1;
            }
            d += 1;
        }
        count + u32::from(n > 1)
    }

    #[test]
    fn p2_predicate() {
        assert!(is_p2(97));
        assert!(is_p2(95));
        assert!(!is_p2(98));
        assert!(!is_p2(1));
        assert!(!is_p2(0));
        assert!(is_p2(4));
        for n in 1..5000 {
            let w = omega_by_trial(n);
            assert_eq!(is_p2(n), (1..=2).contains(&w), "n = {n}");
        }
    }

    #[test]
    fn p2_large() {
        let (a, b, c) = (1_000_003u64, 1_000_033u64, 1_000_037u64);
        assert!(!is_p2(a * b * c));
        assert!(is_p2(a * b));
        assert!(is_p2(18_446_744_073_709_551_557));
    }

    #[test]
    fn find_below() {
        assert_eq!(find_p2_at_or_below(100).unwrap().q, 97);
        assert_eq!(find_p2_at_or_below(50).unwrap().q, 49);
        assert_eq!(find_p2_at_or_below(3).unwrap().q, 3);
        assert_eq!(find_p2_at_or_below(2).unwrap().q, 2);
        assert!(find_p2_at_or_below(1).is_err());
        assert!(find_p2_at_or_below(100).unwrap().in_interval);
    }

    #[test]
    fn witness_examples() {
        // 1000 and 999 have Ω >= 3, 998 = 2 * 499
        let w = wu_witness(1000).unwrap();
        assert_eq!((w.q, w.gap()), (Some(998), Some(2)));
        assert!((w.interval_lo - 979.768_201_882_618_3).abs() < 1e-9);
        // 999999 = 3^3 * 7 * 11 * 13 * 37, 999998 = 2 * 31 * 127^2, 999997 = 757 * 1321
        let big = wu_witness(1_000_000).unwrap();
        assert_eq!((big.q, big.gap()), (Some(999_997), Some(3)));
        assert_eq!(wu_witness(17).unwrap().q, Some(17));
        assert!(wu_witness(15).is_err());
        assert_eq!(w.to_string(), "1000 998 2");
        let absent = AlmostPrimeWitness::new(20, None);
        assert_eq!(absent.to_string(), "20 - -");
    }

    #[test]
    fn sieve_matches_direct_witness() {
        let scan = wu_scan(16, 3000, 1).unwrap();
        assert_eq!(scan.records.len(), 2985);
        for r in &scan.records {
            assert_eq!(*r, wu_witness(r.x).unwrap());
        }
        let strided = wu_scan(100, 200_000, 997).unwrap();
        let sieved = wu_scan(100, 200_000, 7).unwrap();
        for r in strided.records.iter().chain(&sieved.records) {
            assert_eq!(*r, wu_witness(r.x).unwrap());
        }
    }

    #[test]
    fn scan_shapes() {
        assert_eq!(wu_scan(16, 100, 1).unwrap().records.len(), 85);
        assert_eq!(wu_scan(16, 100, 1).unwrap().absent(), 0);
        assert_eq!(wu_scan(1_000_000, 1_000_000, 1).unwrap().records.len(), 1);
        assert_eq!(wu_scan(16, 100, 0), Err(NumberError::ZeroStride));
        assert!(wu_scan(20, 19, 1).is_err());
        assert!(wu_scan(10, 19, 1).is_err());
        // segment boundaries
        let long = wu_scan(1_000, 200_000, 3).unwrap();
        assert_eq!(long.records.len(), (200_000 - 1_000) / 3 + 1);
        assert!(long.records.windows(2).all(|w| w[1].x == w[0].x + 3));
    }
}
