//! Recursive identities satisfied by QC(n), verified by evaluating both
//! sides with the summation route.
//!
//! Each identity relates the count for an extended modulus to the count for
//! a base modulus. Hypotheses require every base to lie in the regular
//! closed-form domain (even base >= 8 or odd base >= 5): the small moduli
//! 1..4 and 6 carry Euclidean triples whose exclusion breaks the patterns,
//! so identities instantiated on them are vacuous, not failures.

use std::collections::HashMap;

use crate::error::Result;
use crate::numtheory::{factorize, is_prime};
use crate::rational::{integer, ratio, Rational};

use super::qc_sum;

/// The seven verified identity families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// n = 2 mod 4 with >= 2 primes, extended by a coprime odd prime power:
    /// QC(n q^b) = (QC(n) + 1 - 2^(r-2)) q^(b-1)(q+1) - 1 + 2^(r-1).
    ExtendSinglyEven,
    /// QC(2 p^a q^b) = QC(2 p^a) q^(b-1)(q+1) + 1 for odd primes p != q,
    /// with base 2 p^a >= 8.
    ExtendTwicePrimePower,
    /// QC(2^a m) = 2 QC(2^(a-1) m) + 1 (a in {2,3}) or + 1 - 2^r (a >= 4),
    /// with n/2 >= 8.
    DoubleEven,
    /// All primes of n equal to 1 mod 6, extended by such a prime power:
    /// QC(n q^b) = (QC(n) + 1 - (5/3) 2^(r-1)) q^(b-1)(q+1) - 1 + (5/3) 2^r.
    ExtendOneModSix,
    /// All primes of n equal to 1 mod 6: QC(3n) = 4 QC(n) + 3 - 2^(r+1).
    TripleOneModSix,
    /// All primes of n equal to 1 mod 6, a >= 2:
    /// QC(3^a n) = 4*3^(a-1) QC(n) + 4*3^(a-1) - 1 + (1 - 10*3^(a-2)) 2^r.
    TriplePowerOneModSix,
    /// Odd n with >= 3 primes, one equal to 5 mod 6 retained in the base,
    /// peeled by any other prime power q^v with r = omega(n) - 2:
    /// QC(n) = (QC(n / q^v) + 1 - 2^r) q^(v-1)(q+1) - 1 + 2^(r+1).
    ExtendFiveModSixBase,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::ExtendSinglyEven,
        Identity::ExtendTwicePrimePower,
        Identity::DoubleEven,
        Identity::ExtendOneModSix,
        Identity::TripleOneModSix,
        Identity::TriplePowerOneModSix,
        Identity::ExtendFiveModSixBase,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::ExtendSinglyEven => "extend-singly-even",
            Identity::ExtendTwicePrimePower => "extend-twice-prime-power",
            Identity::DoubleEven => "double-even",
            Identity::ExtendOneModSix => "extend-one-mod-six",
            Identity::TripleOneModSix => "triple-one-mod-six",
            Identity::TriplePowerOneModSix => "triple-power-one-mod-six",
            Identity::ExtendFiveModSixBase => "extend-five-mod-six-base",
        }
    }
}

impl std::fmt::Display for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One instance whose two sides disagreed.
#[derive(Debug, Clone, PartialEq)]
pub struct FailedInstance {
    pub identity: Identity,
    pub base: u64,
    pub extended: u64,
    pub lhs: u64,
    pub rhs: Rational,
}

/// Outcome of checking every instance of one identity family.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityOutcome {
    pub identity: Identity,
    pub instances: usize,
    pub failures: Vec<FailedInstance>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Report over every instantiable case with all moduli at most `n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecursionReport {
    pub n_max: u64,
    pub outcomes: Vec<IdentityOutcome>,
}

impl RecursionReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }

    pub fn total_instances(&self) -> usize {
        self.outcomes.iter().map(|o| o.instances).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.outcomes.iter().map(|o| o.failures.len()).sum()
    }
}

struct Checker {
    qc: HashMap<u64, u64>,
}

impl Checker {
    fn new(n_max: u64) -> Result<Self> {
        let mut qc = HashMap::new();
        for n in 1..=n_max {
            qc.insert(n, qc_sum(n)?);
        }
        Ok(Checker { qc })
    }

    fn qc(&self, n: u64) -> u64 {
        self.qc[&n]
    }

    fn check(&self, outcome: &mut IdentityOutcome, base: u64, extended: u64, rhs: Rational) {
        outcome.instances += 1;
        let lhs = self.qc(extended);
        if integer(lhs) != rhs {
            outcome.failures.push(FailedInstance {
                identity: outcome.identity,
                base,
                extended,
                lhs,
                rhs,
            });
        }
    }
}

fn odd_primes_up_to(n_max: u64) -> Vec<u64> {
    (3..=n_max).step_by(2).filter(|&p| is_prime(p)).collect()
}

fn omega(n: u64) -> u32 {
    factorize(n).expect("positive").num_primes() as u32
}

fn all_primes_one_mod_six(n: u64) -> bool {
    n % 2 == 1
        && factorize(n)
            .expect("positive")
            .parts()
            .iter()
            .all(|&(p, _)| p % 6 == 1)
}

/// q^(b-1) (q + 1) for the prime power q^b.
fn extension_factor(q: u64, b: u32) -> u64 {
    q.pow(b - 1) * (q + 1)
}

/// Checks every instance of the seven identities with all moduli at most
/// `n_max` (which must be at least 10) and reports per-identity pass/fail.
pub fn verify_recursions(n_max: u64) -> Result<RecursionReport> {
    assert!(n_max >= 10, "n_max must be at least 10");
    let checker = Checker::new(n_max)?;
    let primes = odd_primes_up_to(n_max);
    let mut outcomes: Vec<IdentityOutcome> = Identity::ALL
        .iter()
        .map(|&identity| IdentityOutcome {
            identity,
            instances: 0,
            failures: Vec::new(),
        })
        .collect();
    let [singly_even, twice_power, double_even, one_mod_six, triple, triple_power, five_mod_six] =
        &mut outcomes[..]
    else {
        unreachable!()
    };

    // Extension of a singly even base by a coprime odd prime power.
    for base in (10..=n_max).step_by(4) {
        debug_assert_eq!(base % 4, 2);
        let r = omega(base);
        if r < 2 {
            continue;
        }
        for &q in &primes {
            if base % q == 0 {
                continue;
            }
            let mut qb = q;
            let mut b = 1u32;
            while let Some(extended) = base.checked_mul(qb).filter(|&x| x <= n_max) {
                let rhs = (integer(checker.qc(base)) + integer(1) - integer(1u64 << (r - 2)))
                    * integer(extension_factor(q, b))
                    - integer(1)
                    + integer(1u64 << (r - 1));
                checker.check(singly_even, base, extended, rhs);
                qb *= q;
                b += 1;
            }
        }
    }

    // Twice an odd prime power, extended by a second odd prime power.
    for &p in &primes {
        let mut pa = p;
        while 2 * pa <= n_max {
            let base = 2 * pa;
            if base >= 8 {
                for &q in &primes {
                    if q == p {
                        continue;
                    }
                    let mut qb = q;
                    let mut b = 1u32;
                    while base * qb <= n_max {
                        let extended = base * qb;
                        let rhs = integer(checker.qc(base) * extension_factor(q, b)) + integer(1);
                        checker.check(twice_power, base, extended, rhs);
                        qb *= q;
                        b += 1;
                    }
                }
            }
            pa *= p;
        }
    }

    // Doubling the 2-part.
    for extended in (16..=n_max).step_by(4) {
        let base = extended / 2;
        if base < 8 {
            continue;
        }
        let a1 = extended.trailing_zeros();
        let r = omega(extended);
        let tail = if a1 <= 3 {
            integer(0)
        } else {
            -integer(1u64 << r)
        };
        let rhs = integer(2 * checker.qc(base)) + integer(1) + tail;
        checker.check(double_even, base, extended, rhs);
    }

    // Extension within the primes-one-mod-six world.
    for base in (7..=n_max).step_by(2) {
        if !all_primes_one_mod_six(base) {
            continue;
        }
        let r = omega(base);
        for &q in &primes {
            if q % 6 != 1 || base % q == 0 {
                continue;
            }
            let mut qb = q;
            let mut b = 1u32;
            while let Some(extended) = base.checked_mul(qb).filter(|&x| x <= n_max) {
                let rhs = (integer(checker.qc(base)) + integer(1)
                    - ratio(5, 3) * integer(1u64 << (r - 1)))
                    * integer(extension_factor(q, b))
                    - integer(1)
                    + ratio(5, 3) * integer(1u64 << r);
                checker.check(one_mod_six, base, extended, rhs);
                qb *= q;
                b += 1;
            }
        }
    }

    // Multiplying a primes-one-mod-six modulus by 3, then by higher powers.
    for base in (7..=n_max / 3).step_by(2) {
        if !all_primes_one_mod_six(base) {
            continue;
        }
        let r = omega(base);
        let rhs = integer(4 * checker.qc(base)) + integer(3) - integer(1u64 << (r + 1));
        checker.check(triple, base, 3 * base, rhs);

        let mut three_a = 9u64;
        let mut a = 2u32;
        while let Some(extended) = base.checked_mul(three_a).filter(|&x| x <= n_max) {
            let lead = 4 * 3u64.pow(a - 1);
            let rhs = integer(lead * checker.qc(base)) + integer(lead) - integer(1)
                + (integer(1) - integer(10 * 3u64.pow(a - 2))) * integer(1u64 << r);
            checker.check(triple_power, base, extended, rhs);
            three_a *= 3;
            a += 1;
        }
    }

    // Peeling one odd prime power off an odd modulus that keeps a prime
    // congruent to 5 mod 6 in its base.
    for extended in (15..=n_max).step_by(2) {
        let fac = factorize(extended)?;
        if fac.num_primes() < 3 {
            continue;
        }
        let has_five = fac.parts().iter().any(|&(p, _)| p % 6 == 5);
        if !has_five {
            continue;
        }
        let r = fac.num_primes() as u32 - 2;
        for &(p5, _) in fac.parts().iter().filter(|&&(p, _)| p % 6 == 5) {
            for &(q, v) in fac.parts() {
                if q == p5 {
                    continue;
                }
                let base = extended / q.pow(v);
                let rhs = (integer(checker.qc(base)) + integer(1) - integer(1u64 << r))
                    * integer(extension_factor(q, v))
                    - integer(1)
                    + integer(1u64 << (r + 1));
                checker.check(five_mod_six, base, extended, rhs);
            }
        }
    }

    Ok(RecursionReport { n_max, outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_instances() {
        // QC(24) from QC(12) by doubling the 2-part.
        assert_eq!(qc_sum(24).unwrap(), 2 * qc_sum(12).unwrap() + 1);
        // QC(21) from QC(7) by tripling.
        assert_eq!(qc_sum(21).unwrap(), 4 * qc_sum(7).unwrap() + 3 - 4);
        // QC(30) from QC(10) extended by the prime 3.
        assert_eq!(qc_sum(30).unwrap(), qc_sum(10).unwrap() * 4 + 1);
    }

    #[test]
    fn sweep_to_150_passes() {
        let report = verify_recursions(150).unwrap();
        assert!(report.all_pass(), "failures: {:?}", report.total_failures());
        for outcome in &report.outcomes {
            assert!(
                outcome.instances > 0,
                "no instances for {}",
                outcome.identity
            );
        }
    }
}
