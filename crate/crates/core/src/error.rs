//! Error type shared by all library modules.

use std::fmt;

use crate::rational::Rational;
use crate::signatures::Signature;

/// Errors produced by the library's fallible operations.
///
/// Input-validation variants report bad arguments; `NonIntegral` and
/// `GenusNotHyperbolic` report broken internal invariants (an exact
/// computation that should have produced an integer did not), which
/// indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument that must be positive was zero.
    ZeroInput,
    /// A modulus that must be odd was even.
    EvenModulus(u64),
    /// An argument that must be an odd prime was not.
    NotAnOddPrime(u64),
    /// An argument that must be prime was not.
    NotAPrime(u64),
    /// `d` does not divide `m`.
    NotADivisor { m: u64, d: u64 },
    /// Prime-power exponent `k` exceeds the modulus exponent `a`.
    ExponentOutOfRange { k: u32, a: u32 },
    /// The signature is not admissible for a cyclic action of order `n`.
    Inadmissible { n: u64, signature: Signature },
    /// An exact rational that must be a nonnegative integer was not.
    NonIntegral {
        context: &'static str,
        value: Rational,
    },
    /// The Riemann-Hurwitz genus came out below 2.
    GenusNotHyperbolic { n: u64, signature: Signature },
    /// Brute-force enumeration was requested above the configured bound.
    AboveOracleBound { n: u64, bound: u64 },
    /// Series order below the minimum required by the operation.
    OrderTooSmall { order: usize, min: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroInput => write!(f, "argument must be a positive integer"),
            Error::EvenModulus(n) => write!(f, "modulus {n} must be odd"),
            Error::NotAnOddPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::NotAPrime(p) => write!(f, "{p} is not prime"),
            Error::NotADivisor { m, d } => write!(f, "{d} does not divide {m}"),
            Error::ExponentOutOfRange { k, a } => {
                write!(f, "exponent {k} out of range 0..={a}")
            }
            Error::Inadmissible { n, signature } => {
                write!(f, "signature {signature} is not admissible for n = {n}")
            }
            Error::NonIntegral { context, value } => {
                write!(f, "{context}: expected a nonnegative integer, got {value}")
            }
            Error::GenusNotHyperbolic { n, signature } => {
                write!(f, "signature {signature} for n = {n} yields genus below 2")
            }
            Error::AboveOracleBound { n, bound } => {
                write!(f, "n = {n} exceeds the brute-force bound {bound}")
            }
            Error::OrderTooSmall { order, min } => {
                write!(f, "series order {order} below minimum {min}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
