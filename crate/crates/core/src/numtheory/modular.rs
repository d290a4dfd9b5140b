use super::{is_prime, NumberError};

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Modular inverse by the extended Euclidean algorithm.
pub fn inv_mod(a: u64, m: u64) -> Result<u64, NumberError> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(NumberError::NotInvertible { a, m });
    }
    Ok(t0.rem_euclid(m as i128) as u64)
}

fn require_odd_prime(p: u64) -> Result<(), NumberError> {
    if p == 2 || !is_prime(p) {
        return Err(NumberError::NotOddPrime(p));
    }
    Ok(())
}

/// Legendre symbol `(a / p)` by Euler's criterion.
pub fn legendre(a: u64, p: u64) -> Result<i8, NumberError> {
    require_odd_prime(p)?;
    Ok(match pow_mod(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    })
}

/// Square root of a quadratic residue mod an odd prime (Tonelli-Shanks).
///
/// Of the two roots `r` and `p - r` the smaller one is returned.
pub fn sqrt_mod(a: u64, p: u64) -> Result<u64, NumberError> {
    let a = a % p.max(1);
    match legendre(a, p)? {
        0 => return Err(NumberError::ZeroResidue { a, p }),
        -1 => return Err(NumberError::NonResidue { a, p }),
        _ => {}
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Ok(r.min(p - r))
}

/// All `(a0, a1, a2, a3)` with `a0^2 + a1^2 + a2^2 + a3^2 = p`, `a0 > 0`
/// odd and `a1, a2, a3` even. There are exactly `p + 1` of them.
///
/// Solutions are listed in lexicographic order of the tuple.
pub fn four_squares(p: u64) -> Result<Vec<[i64; 4]>, NumberError> {
    require_odd_prime(p)?;
    if p % 4 != 1 {
        return Err(NumberError::NotOneModFour(p));
    }
    let p = p as i64;
    let bound = isqrt(p as u64) as i64;
    let even_range = || (-bound..=bound).filter(|v| v % 2 == 0);
    let mut out = Vec::new();
    for a0 in (1..=bound).step_by(2) {
        for a1 in even_range() {
            for a2 in even_range() {
                let rest = p - a0 * a0 - a1 * a1 - a2 * a2;
                if rest < 0 {
                    continue;
                }
                let r = isqrt(rest as u64) as i64;
                if r * r != rest || r % 2 != 0 {
                    continue;
                }
                if r == 0 {
                    out.push([a0, a1, a2, 0]);
                } else {
                    out.push([a0, a1, a2, -r]);
                    out.push([a0, a1, a2, r]);
                }
            }
        }
    }
    Ok(out)
}

pub(crate) fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(5, 13), Ok(-1));
        assert_eq!(legendre(12, 13), Ok(1));
        assert_eq!(legendre(26, 13), Ok(0));
        assert_eq!(legendre(3, 15), Err(NumberError::NotOddPrime(15)));
        assert_eq!(legendre(3, 2), Err(NumberError::NotOddPrime(2)));
    }

    #[test]
    fn sqrt_mod_canonical() {
        assert_eq!(sqrt_mod(12, 13), Ok(5));
        assert_eq!(sqrt_mod(5, 13), Err(NumberError::NonResidue { a: 5, p: 13 }));
        assert_eq!(sqrt_mod(13, 13), Err(NumberError::ZeroResidue { a: 0, p: 13 }));
        // p = 1 mod 8 exercises the Tonelli-Shanks loop
        for p in [17u64, 41, 73, 97, 113, 257, 65537] {
            for a in 1..p.min(500) {
                if legendre(a, p) == Ok(1) {
                    let r = sqrt_mod(a, p).unwrap();
                    assert_eq!(mul_mod(r, r, p), a % p);
                    assert!(r <= p - r);
                }
            }
        }
    }

    #[test]
    fn four_squares_of_five() {
        let sols = four_squares(5).unwrap();
        assert_eq!(
            sols,
            vec![
                [1, -2, 0, 0],
                [1, 0, -2, 0],
                [1, 0, 0, -2],
                [1, 0, 0, 2],
                [1, 0, 2, 0],
                [1, 2, 0, 0],
            ]
        );
        assert_eq!(four_squares(7), Err(NumberError::NotOneModFour(7)));
        assert_eq!(four_squares(9), Err(NumberError::NotOddPrime(9)));
    }

    #[test]
    fn inverse() {
        assert_eq!(inv_mod(3, 7), Ok(5));
        assert!(inv_mod(6, 9).is_err());
    }

    #[test]
    fn isqrt_edges() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }
}
