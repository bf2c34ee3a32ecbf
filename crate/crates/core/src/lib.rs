//! Exact enumeration of quasiplatonic topological cyclic-group actions.
//!
//! For a cyclic group of order n acting on a surface of genus at least two
//! with genus-zero quotient and three branch points, this crate computes the
//! number QC(n) of distinct topological actions three independent ways:
//!
//! - by enumerating admissible signatures and summing per-signature counts
//!   ([`actions::qc_sum`], the source of truth);
//! - by closed-form product formulas over the factorization of n
//!   ([`actions::qc_closed`], [`actions::qc_unified`]);
//! - by brute-force orbit counting of generating triples of Z/nZ
//!   ([`oracle::qc_oracle`]).
//!
//! Related quantities: the regular-dessin count r(C_n) with its own
//! brute-force counterpart, the recursive identities QC satisfies
//! ([`actions::recursions`]), and the prime-order generating function whose
//! x^3 coefficient recovers QC(p) ([`lloyd`]).
//!
//! All arithmetic is exact; integrality of every final count is asserted,
//! never assumed.

pub mod actions;
pub mod error;
pub mod lloyd;
pub mod numtheory;
pub mod oracle;
pub mod rational;
pub mod signatures;

pub use actions::recursions::{verify_recursions, Identity, RecursionReport};
pub use actions::{
    corollary_constant, qc_closed, qc_report, qc_sum, qc_unified, r_cyclic, t_value, CaseTag,
    QCReport, QCRow, TValueBreakdown,
};
pub use error::{Error, Result};
pub use lloyd::{lloyd_coefficient, lloyd_series, PowerSeries};
pub use numtheory::{
    euler_phi, f_value, factorize, is_prime, legendre_minus_three, tau1_closed, tau1_oracle,
    tau2_closed, tau2_oracle, Factorization,
};
pub use oracle::{
    count_classes, dessin_pairs_oracle, enumerate_triples, oracle_max, qc_oracle, GeneratingTriple,
    OrbitClass, DEFAULT_ORACLE_MAX,
};
pub use rational::Rational;
pub use signatures::{enumerate_signatures, genus, is_admissible, Signature};
