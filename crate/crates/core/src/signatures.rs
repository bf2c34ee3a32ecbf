//! Admissible quasiplatonic signatures and the Riemann-Hurwitz genus.
//!
//! A signature here is an unordered triple of branching periods for a cyclic
//! action of order n with quotient genus zero. Admissibility means each
//! period divides n, each pair of periods has least common multiple n, the
//! count of periods carrying the full 2-power of n is even when n is even,
//! and the triple is hyperbolic (reciprocal sum below 1, so the acted-on
//! surface has genus at least two). The hyperbolicity condition is what
//! excludes the spherical and toroidal triples such as (2, 3, 6).

use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, gcd, lcm};
use crate::rational::{integer, ratio, Rational};

/// Unordered triple of periods, stored sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    periods: [u64; 3],
}

impl Signature {
    /// Builds the signature from periods in any order.
    pub fn new(a: u64, b: u64, c: u64) -> Self {
        let mut periods = [a, b, c];
        periods.sort_unstable();
        Signature { periods }
    }

    /// Periods sorted ascending.
    pub fn periods(&self) -> [u64; 3] {
        self.periods
    }

    /// Number of distinct period values (1, 2, or 3).
    pub fn distinct_count(&self) -> usize {
        let [a, b, c] = self.periods;
        1 + usize::from(a != b) + usize::from(b != c)
    }

    /// gcd of the three periods.
    pub fn gcd(&self) -> u64 {
        let [a, b, c] = self.periods;
        gcd(gcd(a, b), c)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.periods;
        write!(f, "({a}, {b}, {c})")
    }
}

/// True iff `sig` is an admissible signature for a cyclic action of order `n`.
pub fn is_admissible(n: u64, sig: Signature) -> bool {
    let [a, b, c] = sig.periods();
    if n < 2 || a < 2 {
        return false;
    }
    if !n.is_multiple_of(a) || !n.is_multiple_of(b) || !n.is_multiple_of(c) {
        return false;
    }
    if lcm(a, b) != n || lcm(a, c) != n || lcm(b, c) != n {
        return false;
    }
    if n.is_multiple_of(2) {
        let full_two_power = 1u64 << n.trailing_zeros();
        let count = [a, b, c]
            .iter()
            .filter(|&&x| x % full_two_power == 0)
            .count();
        if count % 2 != 0 {
            return false;
        }
    }
    // Hyperbolic: 1/a + 1/b + 1/c < 1, compared exactly as bc + ac + ab < abc.
    let (a, b, c) = (a as u128, b as u128, c as u128);
    b * c + a * c + a * b < a * b * c
}

/// All admissible signatures for `n`, sorted lexicographically.
///
/// Unordered triples of divisors of n are filtered through `is_admissible`;
/// the divisor count is small at the supported scale, so the O(d(n)^3) scan
/// (pruned on the first pair) is fine.
pub fn enumerate_signatures(n: u64) -> Vec<Signature> {
    if n < 2 {
        return Vec::new();
    }
    let divisors = factorize(n).expect("n >= 2").divisors();
    let mut out = Vec::new();
    for (i, &a) in divisors.iter().enumerate() {
        for (j, &b) in divisors.iter().enumerate().skip(i) {
            if lcm(a, b) != n {
                continue;
            }
            for &c in &divisors[j..] {
                let sig = Signature::new(a, b, c);
                if is_admissible(n, sig) {
                    out.push(sig);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Riemann-Hurwitz genus of the surface acted on with the given signature:
/// 1 + (n/2)(1 - 1/n1 - 1/n2 - 1/n3), computed exactly and required to be
/// an integer at least 2.
pub fn genus(n: u64, sig: Signature) -> Result<u64> {
    if !is_admissible(n, sig) {
        return Err(Error::Inadmissible { n, signature: sig });
    }
    let [a, b, c] = sig.periods();
    let deficiency: Rational = integer(1) - ratio(1, a) - ratio(1, b) - ratio(1, c);
    let g = integer(1) + ratio(1, 2) * integer(n) * deficiency;
    if !g.is_integer() {
        return Err(Error::NonIntegral {
            context: "genus",
            value: g,
        });
    }
    let g = g.to_integer().to_u64().expect("genus fits u64");
    if g < 2 {
        return Err(Error::GenusNotHyperbolic { n, signature: sig });
    }
    Ok(g)
}
