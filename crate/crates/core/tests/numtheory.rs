use exforge::numtheory::{
    big_omega, divisor_count, factor, find_p2_at_or_below, four_squares, inv_mod, is_p2, is_prime, legendre, mul_mod,
    pow_mod, primes_up_to, sqrt_mod, wu_scan, wu_witness, NumberError,
};
use proptest::prelude::*;

fn trial_is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn trial_omega(mut n: u64) -> u32 {
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
fn primality_matches_trial_division() {
    for n in 0..20_000 {
        assert_eq!(is_prime(n), trial_is_prime(n), "{n}");
    }
    assert_eq!(primes_up_to(100).len(), 25);
}

#[test]
fn large_primes_and_pseudoprimes() {
    // Carmichael numbers and strong pseudoprimes to several small bases
    for n in [561u64, 1105, 3_215_031_751, 3_825_123_056_546_413_051] {
        assert!(!is_prime(n), "{n}");
    }
    for p in [18_446_744_073_709_551_557u64, 1_000_000_007, 4_294_967_291] {
        assert!(is_prime(p), "{p}");
    }
}

#[test]
fn factoring_hard_semiprimes() {
    let n = 4_294_967_291u64 * 4_294_967_279;
    let f = factor(n).unwrap();
    assert_eq!(f.factors(), &[(4_294_967_279, 1), (4_294_967_291, 1)]);
    assert_eq!(f.big_omega(), 2);
    assert!(is_p2(n));
    assert_eq!(factor(0).unwrap_err(), NumberError::Zero);
    assert_eq!(factor(1).unwrap().factors(), &[]);
}

#[test]
fn omega_and_divisors_small() {
    for n in 1..5000u64 {
        assert_eq!(big_omega(n).unwrap(), trial_omega(n), "{n}");
        let d = (1..=n).filter(|d| n % d == 0).count() as u64;
        assert_eq!(divisor_count(n).unwrap(), d, "{n}");
        assert_eq!(is_p2(n), matches!(trial_omega(n), 1 | 2), "{n}");
    }
}

#[test]
fn p2_spot_values() {
    assert_eq!(find_p2_at_or_below(100).unwrap().q, 97);
    assert_eq!(find_p2_at_or_below(50).unwrap().q, 49);
    assert_eq!(find_p2_at_or_below(2).unwrap().q, 2);
    assert!(find_p2_at_or_below(1).is_err());
}

#[test]
fn witnesses() {
    let w = wu_witness(1000).unwrap();
    assert_eq!((w.q, w.gap()), (Some(998), Some(2)));
    let w = wu_witness(1_000_000).unwrap();
    assert_eq!((w.q, w.gap()), (Some(999_997), Some(3)));
    assert!(wu_witness(15).is_err());
}

#[test]
fn sieve_agrees_with_direct_witnesses() {
    let sieved = wu_scan(100_000, 102_000, 1).unwrap();
    for r in &sieved.records {
        assert_eq!(r, &wu_witness(r.x).unwrap());
    }
    let strided = wu_scan(100_000, 102_000, 100).unwrap();
    assert_eq!(strided.records.len(), 21);
    for r in &strided.records {
        assert_eq!(r, &sieved.records[(r.x - 100_000) as usize]);
    }
    assert!(wu_scan(20, 19, 1).is_err());
    assert!(wu_scan(20, 30, 0).is_err());
}

#[test]
fn four_square_counts_small() {
    for p in [5u64, 13, 17, 29, 37, 41] {
        assert_eq!(four_squares(p).unwrap().len() as u64, p + 1);
    }
    assert!(four_squares(7).is_err());
    assert!(four_squares(21).is_err());
}

#[test]
fn sqrt_of_non_residue_fails() {
    assert!(matches!(sqrt_mod(2, 13), Err(NumberError::NonResidue { .. })));
    assert_eq!(sqrt_mod(12, 13).unwrap(), 5);
    assert_eq!(legendre(0, 13).unwrap(), 0);
}

fn odd_prime() -> impl Strategy<Value = u64> {
    (3u64..200_000).prop_filter("prime", |&p| is_prime(p))
}

proptest! {
    #[test]
    fn factor_recomposes(n in 1u64..=u64::MAX) {
        let f = factor(n).unwrap();
        let mut product: u128 = 1;
        let mut last = 0;
        for &(p, e) in f.factors() {
            prop_assert!(is_prime(p));
            prop_assert!(p > last);
            last = p;
            product *= u128::from(p).pow(e);
        }
        prop_assert_eq!(product, u128::from(n));
    }

    #[test]
    fn semiprime_products_factor(a in 2u64..1u64 << 31, b in 2u64..1u64 << 31) {
        let n = a * b;
        prop_assert_eq!(big_omega(n).unwrap(), big_omega(a).unwrap() + big_omega(b).unwrap());
    }

    #[test]
    fn modular_inverse(m in 2u64..1 << 40, a in 1u64..1 << 40) {
        match inv_mod(a, m) {
            Ok(x) => prop_assert_eq!(mul_mod(a % m, x, m), 1 % m),
            Err(_) => prop_assert!(gcd(a, m) != 1),
        }
    }

    #[test]
    fn euler_criterion_matches_square_roots(p in odd_prime(), a in 1u64..1_000_000) {
        let a = a % p;
        prop_assume!(a != 0);
        let l = legendre(a, p).unwrap();
        prop_assert_eq!(l == 1, pow_mod(a, (p - 1) / 2, p) == 1);
        match sqrt_mod(a, p) {
            Ok(r) => {
                prop_assert_eq!(l, 1);
                prop_assert_eq!(mul_mod(r, r, p), a);
                prop_assert!(r <= p - r);
            }
            Err(_) => prop_assert_eq!(l, -1),
        }
    }

    #[test]
    fn four_squares_closed_under_sign_changes(p in (5u64..3000).prop_filter("p = 1 mod 4", |&p| p % 4 == 1 && is_prime(p))) {
        let sols = four_squares(p).unwrap();
        prop_assert_eq!(sols.len() as u64, p + 1);
        for s in &sols {
            prop_assert!(s[0] > 0 && s[0] % 2 == 1);
            prop_assert!(s[1..].iter().all(|x| x % 2 == 0));
            prop_assert_eq!(s.iter().map(|x| x * x).sum::<i64>(), p as i64);
            for i in 1..4 {
                let mut t = *s;
                t[i] = -t[i];
                prop_assert!(sols.binary_search(&t).is_ok());
            }
        }
    }

    #[test]
    fn p2_selection_is_maximal(x in 2u64..10_000_000) {
        let sel = find_p2_at_or_below(x).unwrap();
        prop_assert!(is_p2(sel.q) && sel.q <= x);
        prop_assert!(((sel.q + 1)..=x).all(|y| !is_p2(y)));
        let gap = (x - sel.q) as f64;
        prop_assert_eq!(sel.in_interval, gap < (x as f64).powf(101.0 / 232.0) + 1e-9);
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
