//! The consistency suites behind `quasicount verify`.
//!
//! Each suite sweeps an identity against the summation route and reports
//! check/failure counts. Default sweep ceilings are chosen so the whole run
//! stays interactive; each suite also has a hard cap, because the brute
//! force suites grow quadratically.

use quasicount::rational::{integer, ratio};
use quasicount::{
    corollary_constant, dessin_pairs_oracle, lloyd_coefficient, numtheory, oracle, qc_oracle,
    qc_sum, r_cyclic, verify_recursions,
};
use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub n_max: u64,
    pub checks: u64,
    pub failures: u64,
    /// Per-identity lines for the recursion suite; failure notes otherwise.
    pub detail: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub struct SuiteBounds {
    pub default: u64,
    pub cap: u64,
}

pub fn recursion_bounds() -> SuiteBounds {
    SuiteBounds {
        default: 500,
        cap: 2000,
    }
}

pub fn oracle_bounds() -> SuiteBounds {
    SuiteBounds {
        default: 200,
        cap: oracle::oracle_max(),
    }
}

pub fn corollary_bounds() -> SuiteBounds {
    SuiteBounds {
        default: 2000,
        cap: 100_000,
    }
}

pub fn lloyd_bounds() -> SuiteBounds {
    SuiteBounds {
        default: 97,
        cap: 499,
    }
}

pub fn run_recursions(n_max: u64) -> Result<SuiteResult, quasicount::Error> {
    let report = verify_recursions(n_max)?;
    let mut detail = Vec::new();
    for outcome in &report.outcomes {
        detail.push(format!(
            "identity={} instances={} failures={}",
            outcome.identity,
            outcome.instances,
            outcome.failures.len()
        ));
        for failure in &outcome.failures {
            detail.push(format!(
                "  failed: {} base={} extended={} lhs={} rhs={}",
                failure.identity, failure.base, failure.extended, failure.lhs, failure.rhs
            ));
        }
    }
    Ok(SuiteResult {
        name: "recursions",
        n_max,
        checks: report.total_instances() as u64,
        failures: report.total_failures() as u64,
        detail,
    })
}

pub fn run_oracle(n_max: u64) -> Result<SuiteResult, quasicount::Error> {
    let mut checks = 0;
    let mut failures = 0;
    let mut detail = Vec::new();
    for n in 2..=n_max {
        checks += 1;
        let brute = qc_oracle(n)?;
        let summed = qc_sum(n)?;
        if brute != summed {
            failures += 1;
            detail.push(format!("qc mismatch at n={n}: oracle={brute} sum={summed}"));
        }
    }
    for n in 1..=n_max {
        checks += 1;
        let brute = dessin_pairs_oracle(n)?;
        let formula = r_cyclic(n);
        if brute != formula {
            failures += 1;
            detail.push(format!(
                "dessin mismatch at n={n}: oracle={brute} formula={formula}"
            ));
        }
    }
    Ok(SuiteResult {
        name: "oracle",
        n_max,
        checks,
        failures,
        detail,
    })
}

pub fn run_corollary(n_max: u64) -> Result<SuiteResult, quasicount::Error> {
    let mut checks = 0;
    let mut failures = 0;
    let mut detail = Vec::new();
    for n in 1..=n_max {
        if let Some(predicted) = corollary_constant(n) {
            checks += 1;
            let actual = integer(qc_sum(n)?) - ratio(1, 6) * integer(r_cyclic(n));
            if predicted != actual {
                failures += 1;
                detail.push(format!(
                    "constant mismatch at n={n}: predicted={predicted} actual={actual}"
                ));
            }
        }
    }
    Ok(SuiteResult {
        name: "corollary",
        n_max,
        checks,
        failures,
        detail,
    })
}

pub fn run_lloyd(n_max: u64) -> Result<SuiteResult, quasicount::Error> {
    let mut checks = 0;
    let mut failures = 0;
    let mut detail = Vec::new();
    let mut p = 5u64;
    while p <= n_max {
        if numtheory::is_prime(p) {
            checks += 1;
            let coefficient = lloyd_coefficient(p, 3)?;
            let expected = integer(qc_sum(p)?);
            if coefficient != expected {
                failures += 1;
                detail.push(format!(
                    "coefficient mismatch at p={p}: series={coefficient} qc={expected}"
                ));
            }
        }
        p += 2;
    }
    Ok(SuiteResult {
        name: "lloyd",
        n_max,
        checks,
        failures,
        detail,
    })
}

pub fn render_table(results: &[SuiteResult], quiet: bool) -> String {
    let mut out = String::new();
    for r in results {
        let status = if r.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "suite={} n_max={} checks={} failures={} status={status}\n",
            r.name, r.n_max, r.checks, r.failures
        ));
        if !quiet {
            for line in &r.detail {
                out.push_str(&format!("  {line}\n"));
            }
        } else {
            for line in r
                .detail
                .iter()
                .filter(|l| l.contains("mismatch") || l.contains("failed"))
            {
                out.push_str(&format!("  {line}\n"));
            }
        }
    }
    let all_pass = results.iter().all(SuiteResult::passed);
    out.push_str(if all_pass {
        "verify: pass\n"
    } else {
        "verify: FAIL\n"
    });
    out
}

pub fn render_csv(results: &[SuiteResult]) -> String {
    let mut lines = vec!["suite,n_max,checks,failures,status".to_string()];
    for r in results {
        lines.push(format!(
            "{},{},{},{},{}",
            r.name,
            r.n_max,
            r.checks,
            r.failures,
            if r.passed() { "pass" } else { "fail" }
        ));
    }
    lines.join("\n") + "\n"
}

pub fn render_json(results: &[SuiteResult]) -> String {
    let suites: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "n_max": r.n_max.to_string(),
                "checks": r.checks.to_string(),
                "failures": r.failures.to_string(),
                "status": if r.passed() { "pass" } else { "fail" },
                "detail": r.detail,
            })
        })
        .collect();
    let all_pass = results.iter().all(SuiteResult::passed);
    serde_json::to_string_pretty(&json!({
        "suites": suites,
        "status": if all_pass { "pass" } else { "fail" },
    }))
    .expect("serializable")
        + "\n"
}
