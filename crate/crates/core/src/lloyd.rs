//! Truncated power series over exact rationals, and the generating function
//! whose x^rho coefficient counts cyclic prime-order actions with rho
//! branching periods.
//!
//! For an odd prime p the series assembled here is
//!
//! ```text
//! 1/(p-1) * [ (1/p) * ( (1-x)^-(p-1) + (p-1)(1-x)/(1-x^p) )
//!             + sum over l*l' = p-1, l != 1 of phi(l) * (1-x^l)^-l' ]
//! ```
//!
//! and its x^3 coefficient equals QC(p) for p >= 5. The series engine is
//! generic truncated arithmetic; the hand-expanded binomial shortcuts live
//! in the tests as cross-checks, not in the code path.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factorize, is_prime};
use crate::rational::{integer, ratio, Rational};

/// Dense truncated power series: coefficients for x^0 ..= x^order.
/// Operations on order-N series are exact through degree N.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coefficients: Vec<Rational>,
}

impl PowerSeries {
    pub fn from_coefficients(coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "series needs a constant term");
        PowerSeries { coefficients }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coefficients: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coefficients[0] = Rational::one();
        s
    }

    /// 1 - x^l, truncated (the monomial vanishes when l exceeds the order).
    pub fn one_minus_x_power(l: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if l <= order {
            s.coefficients[l] = -Rational::one();
        }
        s
    }

    /// Truncation degree.
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficient of x^k; zero beyond the truncation order.
    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients
            .get(k)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|k| self.coefficient(k) + other.coefficient(k))
            .collect();
        PowerSeries { coefficients }
    }

    pub fn scale(&self, factor: &Rational) -> PowerSeries {
        PowerSeries {
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coefficients = vec![Rational::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if i > order || a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coefficients[i + j] += a * b;
            }
        }
        PowerSeries { coefficients }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> PowerSeries {
        let c0 = &self.coefficients[0];
        assert!(!c0.is_zero(), "reciprocal of a non-unit series");
        let order = self.order();
        let mut inv = vec![Rational::zero(); order + 1];
        inv[0] = Rational::one() / c0;
        for k in 1..=order {
            let mut acc = Rational::zero();
            for i in 1..=k {
                acc += self.coefficient(i) * &inv[k - i];
            }
            inv[k] = -acc / c0;
        }
        PowerSeries { coefficients: inv }
    }

    /// Integer power by repeated squaring, truncation-consistent.
    pub fn pow(&self, mut exp: u64) -> PowerSeries {
        let mut acc = PowerSeries::one(self.order());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitution x -> x^l: coefficient k moves to degree k*l; degrees
    /// beyond the truncation order are dropped.
    pub fn substitute_power(&self, l: usize) -> PowerSeries {
        assert!(l >= 1, "substitution exponent must be positive");
        let order = self.order();
        let mut coefficients = vec![Rational::zero(); order + 1];
        for (k, c) in self.coefficients.iter().enumerate() {
            match k.checked_mul(l) {
                Some(deg) if deg <= order => coefficients[deg] = c.clone(),
                _ => break,
            }
        }
        PowerSeries { coefficients }
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotAnOddPrime(p));
    }
    Ok(())
}

/// The assembled generating-function series for the odd prime p, exact
/// through the requested order (at least 3).
pub fn lloyd_series(p: u64, order: usize) -> Result<PowerSeries> {
    require_odd_prime(p)?;
    if order < 3 {
        return Err(Error::OrderTooSmall { order, min: 3 });
    }
    let one_minus_x = PowerSeries::one_minus_x_power(1, order);
    let geometric_pow = one_minus_x.pow(p - 1).recip();
    let telescoped = one_minus_x.mul(&PowerSeries::one_minus_x_power(p as usize, order).recip());
    let mut inner = geometric_pow
        .add(&telescoped.scale(&integer(p - 1)))
        .scale(&ratio(1, p));
    for l in factorize(p - 1)?.divisors() {
        if l == 1 {
            continue;
        }
        let l_prime = (p - 1) / l;
        let term = PowerSeries::one_minus_x_power(l as usize, order)
            .pow(l_prime)
            .recip()
            .scale(&integer(euler_phi(l)?));
        inner = inner.add(&term);
    }
    Ok(inner.scale(&ratio(1, p - 1)))
}

/// Coefficient of x^rho in the assembled series; for rho = 3 this equals
/// QC(p) whenever p >= 5.
pub fn lloyd_coefficient(p: u64, rho: usize) -> Result<Rational> {
    if rho < 3 {
        return Err(Error::OrderTooSmall { order: rho, min: 3 });
    }
    Ok(lloyd_series(p, rho)?.coefficient(rho))
}

/// Reports a coefficient as a nonnegative integer, or `None` when it is not.
pub fn coefficient_as_count(c: &Rational) -> Option<u64> {
    if c.is_integer() && !c.is_negative() {
        use num_traits::ToPrimitive;
        c.to_integer().to_u64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::qc_sum;

    #[test]
    fn coefficient_examples() {
        assert_eq!(lloyd_coefficient(5, 3).unwrap(), integer(1));
        assert_eq!(lloyd_coefficient(7, 3).unwrap(), integer(2));
        assert_eq!(lloyd_coefficient(13, 3).unwrap(), integer(3));
    }

    #[test]
    fn input_validation() {
        assert!(lloyd_series(2, 5).is_err());
        assert!(lloyd_series(9, 5).is_err());
        assert!(lloyd_series(5, 2).is_err());
        assert!(lloyd_coefficient(5, 2).is_err());
    }

    #[test]
    fn low_order_coefficients_reported() {
        // The assembled series does not vanish below x^3; the low
        // coefficients are still exact nonnegative integers.
        let s = lloyd_series(5, 4).unwrap();
        assert_eq!(s.coefficient(0), integer(1));
        assert_eq!(s.coefficient(1), integer(0));
        assert_eq!(s.coefficient(2), integer(1));
        assert_eq!(s.coefficient(3), integer(1));
        assert_eq!(s.coefficient(4), integer(3));
    }

    #[test]
    fn p_three_is_outside_the_identity() {
        // At p = 3 the x^3 coefficient is 1 while no hyperbolic triple
        // exists, so the QC identity genuinely starts at p = 5.
        assert_eq!(lloyd_coefficient(3, 3).unwrap(), integer(1));
        assert_eq!(qc_sum(3).unwrap(), 0);
    }

    #[test]
    fn series_algebra() {
        for order in [3usize, 7, 12] {
            let one_minus_x = PowerSeries::one_minus_x_power(1, order);
            let product = one_minus_x.mul(&one_minus_x.recip());
            assert_eq!(product, PowerSeries::one(order));
        }
        // (1 - x^l)^-l' equals (1 - x)^-l' composed with x -> x^l.
        for (l, lp) in [(2usize, 3u64), (3, 4), (4, 2)] {
            let order = 12;
            let direct = PowerSeries::one_minus_x_power(l, order).pow(lp).recip();
            let composed = PowerSeries::one_minus_x_power(1, order)
                .pow(lp)
                .recip()
                .substitute_power(l);
            for k in 0..=order {
                assert_eq!(direct.coefficient(k), composed.coefficient(k));
                if k % l != 0 {
                    assert!(direct.coefficient(k).is_zero());
                }
            }
        }
    }

    #[test]
    fn coefficients_from_three_count_actions() {
        for p in [5u64, 7, 11, 13, 19] {
            let s = lloyd_series(p, 10).unwrap();
            for k in 3..=10 {
                let c = s.coefficient(k);
                assert!(
                    coefficient_as_count(&c).is_some(),
                    "p = {p}, k = {k}, c = {c}"
                );
            }
        }
    }

    #[test]
    fn identity_with_qc_small() {
        let mut p = 5u64;
        while p <= 47 {
            if is_prime(p) {
                assert_eq!(
                    lloyd_coefficient(p, 3).unwrap(),
                    integer(qc_sum(p).unwrap()),
                    "p = {p}"
                );
            }
            p += 2;
        }
    }

    #[test]
    fn fourth_coefficient_matches_orbit_count() {
        // Independent route: orbits of zero-sum nonzero quadruples mod p
        // under units and position permutations.
        fn quadruple_classes(p: u64) -> u64 {
            let mut tuples = Vec::new();
            for a in 1..p {
                for b in 1..p {
                    for c in 1..p {
                        let d = (3 * p - a - b - c) % p;
                        if d != 0 {
                            tuples.push([a, b, c, d]);
                        }
                    }
                }
            }
            let mut visited = std::collections::HashSet::new();
            let mut count = 0u64;
            for t in &tuples {
                if visited.contains(t) {
                    continue;
                }
                count += 1;
                for u in 1..p {
                    let mut scaled = t.map(|x| u * x % p);
                    scaled.sort_unstable();
                    // all 4! arrangements of a sorted quadruple
                    permute_all(&scaled, &mut visited);
                }
            }
            count
        }
        fn permute_all(e: &[u64; 4], out: &mut std::collections::HashSet<[u64; 4]>) {
            let mut idx = [0usize, 1, 2, 3];
            loop {
                out.insert([e[idx[0]], e[idx[1]], e[idx[2]], e[idx[3]]]);
                if !next_permutation(&mut idx) {
                    break;
                }
            }
        }
        fn next_permutation(idx: &mut [usize; 4]) -> bool {
            let i = match (0..3).rev().find(|&i| idx[i] < idx[i + 1]) {
                Some(i) => i,
                None => return false,
            };
            let j = (i + 1..4).rev().find(|&j| idx[j] > idx[i]).unwrap();
            idx.swap(i, j);
            idx[i + 1..].reverse();
            true
        }

        for (p, expected) in [(5u64, 3u64), (7, 4), (11, 8)] {
            assert_eq!(quadruple_classes(p), expected);
            assert_eq!(lloyd_coefficient(p, 4).unwrap(), integer(expected));
        }
    }
}
