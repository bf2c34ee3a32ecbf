//! Property-based invariants over the exact-arithmetic kernel.

use num_bigint::BigInt;
use proptest::prelude::*;
use quasicount::numtheory::{euler_phi, gcd};
use quasicount::rational::Rational;
use quasicount::signatures::{enumerate_signatures, is_admissible, Signature};
use quasicount::PowerSeries;

proptest! {
    #[test]
    fn rational_addition_is_exact(a in -10_000i64..10_000, b in 1u64..10_000,
                                  c in -10_000i64..10_000, d in 1u64..10_000) {
        let x = Rational::new(BigInt::from(a), BigInt::from(b));
        let y = Rational::new(BigInt::from(c), BigInt::from(d));
        let sum = x.clone() + y.clone();
        // exact cross-multiplied identity
        let lhs = sum * BigInt::from(b) * BigInt::from(d);
        let rhs = Rational::from_integer(BigInt::from(a) * BigInt::from(d)
            + BigInt::from(c) * BigInt::from(b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_reduction_is_idempotent(a in -100_000i64..100_000, b in 1u64..100_000) {
        let r = Rational::new(BigInt::from(a), BigInt::from(b));
        let again = Rational::new(r.numer().clone(), r.denom().clone());
        prop_assert_eq!(&r, &again);
        prop_assert!(r.denom() > &BigInt::from(0));
    }

    #[test]
    fn admissibility_ignores_period_order(n in 2u64..600, i in 0usize..6) {
        let sigs = enumerate_signatures(n);
        for sig in sigs {
            let [a, b, c] = sig.periods();
            let perms = [[a,b,c],[a,c,b],[b,a,c],[b,c,a],[c,a,b],[c,b,a]];
            let [x, y, z] = perms[i];
            prop_assert!(is_admissible(n, Signature::new(x, y, z)));
        }
    }

    #[test]
    fn phi_is_multiplicative(a in 1u64..700, b in 1u64..700) {
        prop_assume!(gcd(a, b) == 1);
        prop_assert_eq!(
            euler_phi(a * b).unwrap(),
            euler_phi(a).unwrap() * euler_phi(b).unwrap()
        );
    }

    #[test]
    fn series_truncation_is_consistent(order in 3usize..12, seed in 0u64..1000) {
        // multiplying at a higher order then truncating agrees with
        // multiplying at the lower order
        let coeffs = |n: usize| -> Vec<Rational> {
            (0..=n).map(|k| {
                let v = ((seed + k as u64 * 37) % 19) as i64 - 9;
                Rational::new(BigInt::from(v), BigInt::from(1 + (k as u64 % 5)))
            }).collect()
        };
        let a_lo = PowerSeries::from_coefficients(coeffs(order));
        let b_lo = PowerSeries::from_coefficients(coeffs(order + 3));
        let product = a_lo.mul(&b_lo);
        prop_assert_eq!(product.order(), order);
        let a_hi = PowerSeries::from_coefficients(coeffs(order + 5));
        let b_hi = PowerSeries::from_coefficients(coeffs(order + 3));
        // a_lo is a_hi truncated; products must agree through `order`
        let wide = a_hi.mul(&b_hi);
        for k in 0..=order {
            prop_assert_eq!(product.coefficient(k), wide.coefficient(k));
        }
    }
}

#[test]
fn genus_sweep_is_integral() {
    for n in 2..=2000u64 {
        for sig in enumerate_signatures(n) {
            let g = quasicount::genus(n, sig).unwrap();
            assert!(g >= 2, "n = {n}, sig {sig}");
        }
    }
}

#[test]
fn phi_matches_direct_scan_to_ten_thousand() {
    for n in 1..=10_000u64 {
        let direct = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
        assert_eq!(euler_phi(n).unwrap(), direct, "phi({n})");
    }
}

#[test]
fn dessin_orbits_match_formula_to_500() {
    for n in 1..=500u64 {
        assert_eq!(
            quasicount::dessin_pairs_oracle(n).unwrap(),
            quasicount::r_cyclic(n),
            "n = {n}"
        );
    }
}
