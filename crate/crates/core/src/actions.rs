//! Counting topological actions: per-signature T-values, QC(n) by summation
//! and by closed form, the regular-dessin count r(C_n), and the constant by
//! which QC(n) differs from r(C_n)/6.
//!
//! The T-value of an admissible signature splits into three cases by the
//! multiset shape of the periods:
//!
//! - all periods distinct:    T = phi(gcd) * prod
//! - two equal, (n1, n, n):   T = (tau1(n, n1) + phi(n1) * prod) / 2
//! - all equal, (n, n, n):    T = (3 + 2 tau2(n) + phi(n) * prod) / 6
//!
//! where `prod` runs over the w-set: the primes p of n whose full power
//! p^(v_p(n)) divides every period (equivalently, divides the gcd of the
//! periods), each contributing (p-2)/(p-1). Everything is evaluated in exact
//! rationals and the result is asserted to be a nonnegative integer.

pub mod recursions;

use num_traits::One;

use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factorize, tau1_closed, tau2_closed, Factorization};
use crate::oracle;
use crate::rational::{integer, ratio, to_exact_u64, Rational};
use crate::signatures::{enumerate_signatures, genus, is_admissible, Signature};

/// Multiset shape of a signature's periods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    AllDistinct,
    TwoEqual,
    AllEqual,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::AllDistinct => "all-distinct",
            CaseTag::TwoEqual => "two-equal",
            CaseTag::AllEqual => "all-equal",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Full audit trail of one T-value evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct TValueBreakdown {
    pub signature: Signature,
    pub case_tag: CaseTag,
    /// tau1(n, n1) term; present only in the two-equal case.
    pub tau1_term: Option<u64>,
    /// tau2(n) term; present only in the all-equal case.
    pub tau2_term: Option<u64>,
    /// The totient factor: phi(gcd), phi(n1), or phi(n) by case.
    pub phi_term: u64,
    /// Product of (p-2)/(p-1) over the w-set primes.
    pub product_term: Rational,
    /// The w-set: primes of n whose full power divides all three periods.
    pub w_primes: Vec<u64>,
    /// The assembled count, an exact nonnegative integer.
    pub value: u64,
}

fn w_set(fac_n: &Factorization, sig: Signature) -> (Vec<u64>, Rational) {
    let g = sig.gcd();
    let mut primes = Vec::new();
    let mut product = Rational::one();
    for &(p, a) in fac_n.parts() {
        if g.is_multiple_of(p.pow(a)) {
            primes.push(p);
            product *= ratio(p as i64 - 2, p - 1);
        }
    }
    (primes, product)
}

/// Number of distinct topological actions with the given signature.
pub fn t_value(n: u64, sig: Signature) -> Result<TValueBreakdown> {
    if !is_admissible(n, sig) {
        return Err(Error::Inadmissible { n, signature: sig });
    }
    let fac_n = factorize(n)?;
    let (w_primes, product_term) = w_set(&fac_n, sig);
    let [a, b, c] = sig.periods();

    let (case_tag, tau1_term, tau2_term, phi_term, exact): (
        CaseTag,
        Option<u64>,
        Option<u64>,
        u64,
        Rational,
    ) = if a != b && b != c {
        let phi = euler_phi(sig.gcd())?;
        let t = integer(phi) * product_term.clone();
        (CaseTag::AllDistinct, None, None, phi, t)
    } else if a == c {
        // Pairwise lcm = n forces the triple (n, n, n); n is odd here since
        // an even n would put the full 2-power in all three periods.
        debug_assert_eq!(a, n);
        let tau2 = tau2_closed(n)?;
        let phi = euler_phi(n)?;
        let t =
            ratio(1, 6) * (integer(3) + integer(2 * tau2) + integer(phi) * product_term.clone());
        (CaseTag::AllEqual, None, Some(tau2), phi, t)
    } else {
        // Exactly two equal: the repeated period is n itself (a pair of
        // equal periods below n would have lcm below n), so the odd one
        // out is the smallest entry.
        debug_assert!(b == c && b == n && a != n);
        let tau1 = tau1_closed(n, a)?;
        let phi = euler_phi(a)?;
        let t = ratio(1, 2) * (integer(tau1) + integer(phi) * product_term.clone());
        (CaseTag::TwoEqual, Some(tau1), None, phi, t)
    };

    let value = to_exact_u64(&exact).ok_or(Error::NonIntegral {
        context: "t_value",
        value: exact,
    })?;
    Ok(TValueBreakdown {
        signature: sig,
        case_tag,
        tau1_term,
        tau2_term,
        phi_term,
        product_term,
        w_primes,
        value,
    })
}

/// QC(n): the sum of T-values over all admissible signatures.
pub fn qc_sum(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut total = 0u64;
    for sig in enumerate_signatures(n) {
        total += t_value(n, sig)?.value;
    }
    Ok(total)
}

fn odd_prime_part_product(fac: &Factorization) -> Rational {
    fac.parts()
        .iter()
        .filter(|&&(p, _)| p != 2)
        .map(|&(p, a)| integer(p.pow(a - 1) * (p + 1)))
        .product()
}

/// QC(n) by the explicit piecewise formulas, where they apply: even n >= 8
/// or odd n >= 5. Outside that domain (including n = 6, whose lone Euclidean
/// triple breaks the pattern) the summation is the source of truth and this
/// returns `None`.
pub fn qc_closed(n: u64) -> Option<u64> {
    let fac = factorize(n).ok()?;
    let r = fac.num_primes() as u32;
    let value = if n.is_multiple_of(2) {
        if n < 8 {
            return None;
        }
        let a1 = fac.exponent_of(2);
        // 2^(a1-2) is 1/2 when a1 = 1; the odd-part product is even then.
        let lead = if a1 >= 2 {
            integer(1u64 << (a1 - 2))
        } else {
            ratio(1, 2)
        };
        let tail = match a1 {
            1 => integer(1u64 << (r - 2)),
            2 => integer(1u64 << (r - 1)),
            _ => integer(1u64 << r),
        };
        lead * odd_prime_part_product(&fac) - integer(1) + tail
    } else {
        if n < 5 {
            return None;
        }
        let half = 1u64 << (r - 1);
        let some_five_mod_six = fac.parts().iter().any(|&(p, _)| p % 6 == 5);
        let tail = if some_five_mod_six || fac.exponent_of(3) >= 2 {
            integer(half)
        } else if fac.exponent_of(3) == 1 {
            ratio(4, 3) * integer(half)
        } else {
            ratio(5, 3) * integer(half)
        };
        ratio(1, 6) * odd_prime_part_product(&fac) - integer(1) + tail
    };
    Some(to_exact_u64(&value).expect("closed form is integral on its domain"))
}

/// r(C_n): the number of regular dessins with cyclic automorphism group of
/// order n, as the exact integer n * prod_(p | n) (1 + 1/p).
pub fn r_cyclic(n: u64) -> u64 {
    let fac = factorize(n).expect("n >= 1");
    fac.parts()
        .iter()
        .map(|&(p, a)| p.pow(a - 1) * (p + 1))
        .product()
}

/// The correction constant `a` in QC(n) = r(C_n)/6 - 1 + a * 2^r, selected
/// from the seven arithmetic cases of n.
fn unified_constant(fac: &Factorization) -> Rational {
    if fac.value().is_multiple_of(2) {
        match fac.exponent_of(2) {
            1 => ratio(1, 4),
            2 => ratio(1, 2),
            _ => integer(1),
        }
    } else if fac.parts().iter().any(|&(p, _)| p % 6 == 5) {
        ratio(1, 2)
    } else {
        match fac.exponent_of(3) {
            0 => ratio(5, 6),
            1 => ratio(2, 3),
            _ => ratio(1, 2),
        }
    }
}

/// The unified form of the count: QC(n) = (1/6) n prod(1 + 1/p) - 1 + a 2^r.
/// Returns the constant `a` and the value; same domain as `qc_closed`.
pub fn qc_unified(n: u64) -> Option<(Rational, u64)> {
    if n.is_multiple_of(2) {
        if n < 8 {
            return None;
        }
    } else if n < 5 {
        return None;
    }
    let fac = factorize(n).ok()?;
    let r = fac.num_primes() as u32;
    let a = unified_constant(&fac);
    let value = ratio(1, 6) * integer(r_cyclic(n)) - integer(1) + a.clone() * integer(1u64 << r);
    let value = to_exact_u64(&value).expect("unified form is integral on its domain");
    Some((a, value))
}

/// Predicted value of QC(n) - r(C_n)/6, an exact rational equal to
/// -1 + a * 2^r on the closed-form domain; `None` outside it.
pub fn corollary_constant(n: u64) -> Option<Rational> {
    if n.is_multiple_of(2) {
        if n < 8 {
            return None;
        }
    } else if n < 5 {
        return None;
    }
    let fac = factorize(n).ok()?;
    let r = fac.num_primes() as u32;
    Some(unified_constant(&fac) * integer(1u64 << r) - integer(1))
}

/// One signature row of a per-n report.
#[derive(Debug, Clone, PartialEq)]
pub struct QCRow {
    pub signature: Signature,
    pub genus: u64,
    pub breakdown: TValueBreakdown,
}

/// Per-n dossier: signatures with genera and T-values, the summed count,
/// the closed form and brute-force count where available, and whether all
/// present methods agree.
#[derive(Debug, Clone, PartialEq)]
pub struct QCReport {
    pub n: u64,
    pub rows: Vec<QCRow>,
    pub qc_sum: u64,
    pub qc_closed: Option<u64>,
    pub r_cyclic: u64,
    pub oracle_value: Option<u64>,
    pub consistent: bool,
}

/// Builds the dossier for `n`. The brute-force generating-vector count is
/// only computed when requested; it is subject to the oracle bound.
pub fn qc_report(n: u64, with_oracle: bool) -> Result<QCReport> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut rows = Vec::new();
    let mut total = 0u64;
    for sig in enumerate_signatures(n) {
        let breakdown = t_value(n, sig)?;
        total += breakdown.value;
        rows.push(QCRow {
            signature: sig,
            genus: genus(n, sig)?,
            breakdown,
        });
    }
    let closed = qc_closed(n);
    let oracle_value = if with_oracle {
        Some(oracle::qc_oracle(n)?)
    } else {
        None
    };
    let consistent = closed.is_none_or(|c| c == total) && oracle_value.is_none_or(|o| o == total);
    Ok(QCReport {
        n,
        rows,
        qc_sum: total,
        qc_closed: closed,
        r_cyclic: r_cyclic(n),
        oracle_value,
        consistent,
    })
}

/// Recomputes the case formula from the recorded parts; used to audit that
/// `value` is exactly the assembled rational with denominator one.
pub fn reassemble(breakdown: &TValueBreakdown) -> Rational {
    let phi = integer(breakdown.phi_term);
    let prod = breakdown.product_term.clone();
    match breakdown.case_tag {
        CaseTag::AllDistinct => phi * prod,
        CaseTag::TwoEqual => ratio(1, 2) * (integer(breakdown.tau1_term.unwrap_or(0)) + phi * prod),
        CaseTag::AllEqual => {
            ratio(1, 6) * (integer(3) + integer(2 * breakdown.tau2_term.unwrap_or(0)) + phi * prod)
        }
    }
}
