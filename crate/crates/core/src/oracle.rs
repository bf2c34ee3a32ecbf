//! Brute-force ground truth: generating triples of Z/nZ and their orbits.
//!
//! A triple (e1, e2, e3) of residues mod n generates an orbit-counting
//! instance when the entries sum to zero, their additive orders realize the
//! target signature, and the orders' lcm is n (which for a cyclic group is
//! exactly the generation condition). Two triples describe the same action
//! when one maps to the other by multiplying every entry by a unit, combined
//! with a permutation of positions; counting orbits of that action
//! independently reproduces the closed-form T-values.
//!
//! Everything here is quadratic in n per signature, so operations are gated
//! by a bound (default 2000, overridable through QUASICOUNT_ORACLE_MAX).

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::numtheory::{gcd, lcm};
use crate::signatures::{enumerate_signatures, is_admissible, Signature};

/// Default ceiling for brute-force enumeration.
pub const DEFAULT_ORACLE_MAX: u64 = 2000;

/// Parses an override of the oracle bound; falls back to the default on
/// anything unset or unparsable.
pub fn oracle_max_from(raw: Option<&str>) -> u64 {
    raw.and_then(|s| s.trim().parse().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_ORACLE_MAX)
}

/// The effective oracle bound, honoring QUASICOUNT_ORACLE_MAX.
pub fn oracle_max() -> u64 {
    oracle_max_from(std::env::var("QUASICOUNT_ORACLE_MAX").ok().as_deref())
}

fn check_bound(n: u64) -> Result<()> {
    let bound = oracle_max();
    if n > bound {
        return Err(Error::AboveOracleBound { n, bound });
    }
    Ok(())
}

/// A zero-sum triple of residues with prescribed orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratingTriple {
    entries: [u64; 3],
    modulus: u64,
}

impl GeneratingTriple {
    pub fn entries(&self) -> [u64; 3] {
        self.entries
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Additive orders of the entries, in entry order.
    pub fn orders(&self) -> [u64; 3] {
        let n = self.modulus;
        self.entries.map(|e| n / gcd(e, n))
    }

    /// True when the triple sums to zero, realizes `sig`, and generates.
    pub fn is_valid_for(&self, sig: Signature) -> bool {
        let n = self.modulus;
        let [e1, e2, e3] = self.entries;
        if (e1 + e2 + e3) % n != 0 {
            return false;
        }
        let mut orders = self.orders();
        orders.sort_unstable();
        orders == sig.periods() && lcm(lcm(orders[0], orders[1]), orders[2]) == n
    }
}

impl std::fmt::Display for GeneratingTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c] = self.entries;
        write!(f, "({a}, {b}, {c})")
    }
}

/// One equivalence class of triples under units times entry permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    /// Lexicographically least member of the orbit.
    pub canonical: GeneratingTriple,
    /// Number of distinct triples in the orbit.
    pub size: u64,
}

/// Every valid triple for (n, sig), in lexicographic entry order.
pub fn enumerate_triples(n: u64, sig: Signature) -> Result<Vec<GeneratingTriple>> {
    check_bound(n)?;
    if !is_admissible(n, sig) {
        return Err(Error::Inadmissible { n, signature: sig });
    }
    let target = sig.periods();
    let mut out = Vec::new();
    for e1 in 0..n {
        let o1 = n / gcd(e1, n);
        if !target.contains(&o1) {
            continue;
        }
        for e2 in 0..n {
            let e3 = (2 * n - e1 - e2) % n;
            let mut orders = [o1, n / gcd(e2, n), n / gcd(e3, n)];
            orders.sort_unstable();
            if orders != target {
                continue;
            }
            // lcm of the orders equals n: generation in a cyclic group.
            if lcm(lcm(orders[0], orders[1]), orders[2]) != n {
                continue;
            }
            out.push(GeneratingTriple {
                entries: [e1, e2, e3],
                modulus: n,
            });
        }
    }
    Ok(out)
}

fn units(n: u64) -> Vec<u64> {
    (1..n.max(2)).filter(|&u| gcd(u, n) == 1).collect()
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Orbit decomposition of the valid triples under the full acting group.
pub fn orbit_classes(n: u64, sig: Signature) -> Result<Vec<OrbitClass>> {
    let triples = enumerate_triples(n, sig)?;
    let units = units(n);
    let mut visited: HashSet<[u64; 3]> = HashSet::with_capacity(triples.len());
    let mut classes = Vec::new();
    for t in &triples {
        if visited.contains(&t.entries) {
            continue;
        }
        let mut orbit: HashSet<[u64; 3]> = HashSet::new();
        for &u in &units {
            let scaled = t.entries.map(|e| u * e % n);
            for perm in PERMS {
                orbit.insert([scaled[perm[0]], scaled[perm[1]], scaled[perm[2]]]);
            }
        }
        let canonical = *orbit.iter().min().expect("orbit nonempty");
        let size = orbit.len() as u64;
        visited.extend(orbit);
        classes.push(OrbitClass {
            canonical: GeneratingTriple {
                entries: canonical,
                modulus: n,
            },
            size,
        });
    }
    classes.sort_by_key(|c| c.canonical.entries);
    Ok(classes)
}

/// Number of orbits for (n, sig).
pub fn count_classes(n: u64, sig: Signature) -> Result<u64> {
    Ok(orbit_classes(n, sig)?.len() as u64)
}

/// QC(n) by brute force: orbit counts summed over admissible signatures.
pub fn qc_oracle(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    check_bound(n)?;
    let mut total = 0;
    for sig in enumerate_signatures(n) {
        total += count_classes(n, sig)?;
    }
    Ok(total)
}

/// Counts regular dessins with cyclic symmetry group of order n by brute
/// force: orbits of pairs (s0, s1) with gcd(s0, s1, n) = 1 under
/// simultaneous multiplication by units.
pub fn dessin_pairs_oracle(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    check_bound(n)?;
    if n == 1 {
        return Ok(1);
    }
    let units = units(n);
    let mut visited = vec![false; (n * n) as usize];
    let mut count = 0u64;
    for a in 0..n {
        for b in 0..n {
            if visited[(a * n + b) as usize] || gcd(gcd(a, b), n) != 1 {
                continue;
            }
            count += 1;
            for &u in &units {
                visited[((u * a % n) * n + u * b % n) as usize] = true;
            }
        }
    }
    Ok(count)
}
