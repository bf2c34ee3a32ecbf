//! Exact elementary number theory.
//!
//! Factorization, the Euler totient, the quadratic character of -3, and the
//! two quadratic-congruence counting functions that drive the action counts:
//!
//! - `tau1(m, d)`: nonzero solutions of x^2 + 2x = 0 (mod m) whose gcd with
//!   m is m/d, i.e. solutions of additive order d;
//! - `tau2(n)`: nonzero solutions of x^2 + x + 1 = 0 (mod n).
//!
//! Each comes in a closed form and a literal brute-force count; the two are
//! kept as independent routes and cross-checked by the test suite.

use crate::error::{Error, Result};

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. Callers keep arguments small enough not to overflow.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin primality test, valid for all u64 inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
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

/// Canonical prime-power decomposition of a positive integer.
///
/// Primes are stored strictly increasing and the product of the prime powers
/// reconstructs the value; `1` factors as the empty product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    parts: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// The (prime, exponent) pairs, primes strictly increasing.
    pub fn parts(&self) -> &[(u64, u32)] {
        &self.parts
    }

    /// Number of distinct primes.
    pub fn num_primes(&self) -> usize {
        self.parts.len()
    }

    /// Exponent of `p`, zero when `p` does not divide the value.
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.parts
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// All divisors, sorted ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, a) in &self.parts {
            let prev = out.clone();
            let mut pk = 1u64;
            for _ in 0..a {
                pk *= p;
                out.extend(prev.iter().map(|d| d * pk));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Factors `n >= 1` by trial division, confirming each factor prime.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut parts = Vec::new();
    let mut m = n;
    let mut push = |p: u64, e: u32| {
        assert!(is_prime(p), "trial division produced composite {p}");
        parts.push((p, e));
    };
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            push(d, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        push(m, 1);
    }
    Ok(Factorization { value: n, parts })
}

/// Euler's totient of `n >= 1`.
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.parts()
        .iter()
        .map(|&(p, a)| p.pow(a - 1) * (p - 1))
        .product())
}

/// Quadratic character of -3 modulo an odd prime: 1 when p = 1 (mod 6),
/// 0 when p = 3, and -1 when p = 5 (mod 6).
pub fn legendre_minus_three(p: u64) -> Result<i32> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotAnOddPrime(p));
    }
    Ok(match p % 6 {
        1 => 1,
        3 => 0, // p = 3 itself; no other odd prime is 3 mod 6
        _ => -1,
    })
}

/// Closed form for the number of nonzero solutions of x^2 + x + 1 = 0 (mod n),
/// for odd `n`. Multiplicative over the factorization; each odd prime power
/// contributes 2 when p = 1 (mod 6), 1 when p^a = 3, and 0 otherwise.
pub fn tau2_closed(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    if n == 1 {
        // No nonzero residues exist mod 1.
        return Ok(0);
    }
    let mut count = 1u64;
    for &(p, a) in factorize(n)?.parts() {
        count *= match (p % 6, a) {
            (1, _) => 2,
            (3, 1) => 1,
            _ => 0,
        };
        if count == 0 {
            break;
        }
    }
    Ok(count)
}

/// Literal count of x in 1..n with x^2 + x + 1 = 0 (mod n).
pub fn tau2_oracle(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let n128 = n as u128;
    Ok((1..n)
        .filter(|&x| {
            let x = x as u128;
            (x * x + x + 1).is_multiple_of(n128)
        })
        .count() as u64)
}

/// Closed form for the number of nonzero solutions of x^2 + 2x = 0 (mod m)
/// with gcd(x, m) = m/d, for a divisor d of m.
///
/// By CRT the solutions split over the prime powers of m. At an odd prime
/// power p^k the roots are x = 0 and x = -2, forcing the exponent of p in d
/// to be 0 or k (one solution each). At 2^k the roots are x = 0 (exponent 0
/// in d), x = 2^(k-1) for k >= 2 (exponent 1), and the pair 2^(k-1) - 2,
/// 2^k - 2 for k >= 3 (exponent k-1); mod 2 there is no odd root, so when
/// k = 1 the exponent of 2 in d must be 0. The globally-zero combination is
/// the excluded solution x = 0, which occurs exactly when d = 1.
pub fn tau1_closed(m: u64, d: u64) -> Result<u64> {
    if m == 0 || d == 0 {
        return Err(Error::ZeroInput);
    }
    if !m.is_multiple_of(d) {
        return Err(Error::NotADivisor { m, d });
    }
    let fm = factorize(m)?;
    let fd = factorize(d)?;
    for &(p, k) in fm.parts() {
        if p == 2 {
            continue;
        }
        let h = fd.exponent_of(p);
        if h != 0 && h != k {
            return Ok(0);
        }
    }
    let k0 = fm.exponent_of(2);
    let h0 = fd.exponent_of(2);
    let two_part: u64 = match k0 {
        0 => 1,
        1 => {
            if h0 == 0 {
                1
            } else {
                0
            }
        }
        2 => {
            if h0 <= 1 {
                1
            } else {
                0
            }
        }
        _ => {
            if h0 <= 1 {
                1
            } else if h0 == k0 - 1 {
                2
            } else {
                0
            }
        }
    };
    Ok(if d == 1 { two_part - 1 } else { two_part })
}

/// Literal count of x in 1..m with x^2 + 2x = 0 (mod m) and gcd(x, m) = m/d.
pub fn tau1_oracle(m: u64, d: u64) -> Result<u64> {
    if m == 0 || d == 0 {
        return Err(Error::ZeroInput);
    }
    if !m.is_multiple_of(d) {
        return Err(Error::NotADivisor { m, d });
    }
    let target = m / d;
    let m128 = m as u128;
    Ok((1..m)
        .filter(|&x| {
            let y = x as u128;
            (y * y + 2 * y).is_multiple_of(m128) && gcd(x, m) == target
        })
        .count() as u64)
}

/// The weight f(p^k) of a prime-power layer inside a modulus p^a:
/// 1 at k = 0, phi(p^k) in mid-range, and p^(a-1)(p-2) at the top
/// (which degenerates to p - 2 when a = 1).
pub fn f_value(p: u64, k: u32, a: u32) -> Result<u64> {
    if a == 0 {
        return Err(Error::ZeroInput);
    }
    if !is_prime(p) {
        return Err(Error::NotAPrime(p));
    }
    if k > a {
        return Err(Error::ExponentOutOfRange { k, a });
    }
    Ok(if k == 0 {
        1
    } else if k == a {
        p.pow(a - 1) * (p - 2)
    } else {
        p.pow(k - 1) * (p - 1)
    })
}
