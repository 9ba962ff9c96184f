//! Independent brute-force decompositions for the classically known
//! fully-split cases: projective spaces and products of projective lines.
//!
//! On P^n the pushforward F^r_* O(d) splits as a direct sum of line bundles
//! O(e), and the multiplicity of O(e) counts exponent vectors
//! a in [0, p^r - 1]^{n+1} with sum(a) = d - p^r e. That count is computed
//! here by inclusion-exclusion over the upper bounds, with exhaustive
//! enumeration kept in the tests as the oracle-of-the-oracle. Nothing in this
//! module touches root-system code, so it cross-checks the criterion-based
//! enumeration through an entirely different route.

use crate::error::{Error, Result};
use crate::frobenius::Characteristic;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A decomposition of a Frobenius pushforward into line bundles, keyed by
/// degree vector (length 1 for P^n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleDecomposition {
    entries: BTreeMap<Vec<i64>, BigUint>,
}

impl OracleDecomposition {
    pub fn entries(&self) -> &BTreeMap<Vec<i64>, BigUint> {
        &self.entries
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.entries.keys()
    }

    /// Multiplicity of the given degree vector, zero if absent.
    pub fn multiplicity(&self, degree: &[i64]) -> BigUint {
        self.entries.get(degree).cloned().unwrap_or_default()
    }

    /// Total rank, the sum of all multiplicities.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }
}

/// Number of vectors a in Z^parts with 0 <= a_i <= bound and sum(a) = total,
/// by inclusion-exclusion:
/// sum_k (-1)^k C(parts, k) C(total - k(bound+1) + parts - 1, parts - 1).
pub fn bounded_compositions(total: i64, parts: u32, bound: i64) -> BigUint {
    assert!(parts >= 1, "parts must be at least 1");
    assert!(bound >= 0, "bound must be nonnegative");
    let mut acc = BigInt::zero();
    for k in 0..=parts {
        let remaining = total - k as i64 * (bound + 1);
        if remaining < 0 {
            break;
        }
        let term = BigInt::from(choose(parts as i64, k))
            * BigInt::from(choose(remaining + parts as i64 - 1, parts - 1));
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    assert!(!acc.is_negative(), "inclusion-exclusion went negative");
    acc.to_biguint().unwrap()
}

/// Binomial coefficient C(n, k) with the counting convention: 0 when n < k
/// (in particular for negative n).
pub fn choose(n: i64, k: u32) -> BigUint {
    if n < k as i64 {
        return BigUint::zero();
    }
    let mut result = BigUint::one();
    for i in 0..k as u64 {
        result = result * (n as u64 - i) / (i + 1);
    }
    result
}

/// Thomsen decomposition of F^r_* O(d) on P^n: multiplicity of O(e) is the
/// number of exponent vectors a in [0, p^r - 1]^{n+1} with sum = d - p^r e.
pub fn decompose_projective_space(
    n: u32,
    ch: Characteristic,
    r: u32,
    d: i64,
) -> Result<OracleDecomposition> {
    assert!(n >= 1, "projective space dimension must be at least 1");
    if r == 0 {
        return Err(Error::ZeroFrobeniusPower);
    }
    let q = ch.power(r)?;
    let max_sum = (n as i64 + 1) * (q - 1);
    let lo = Integer::div_ceil(&(d - max_sum), &q);
    let hi = Integer::div_floor(&d, &q);
    let mut entries = BTreeMap::new();
    for e in lo..=hi {
        let m = bounded_compositions(d - q * e, n + 1, q - 1);
        if !m.is_zero() {
            entries.insert(vec![e], m);
        }
    }
    let decomposition = OracleDecomposition { entries };
    debug_assert_eq!(
        decomposition.total(),
        BigUint::from(ch.get()).pow(r * n),
        "pushforward rank mismatch on P^{n}"
    );
    Ok(decomposition)
}

/// Decomposition of F^r_* O(d_1, ..., d_n) on (P^1)^n as the coordinatewise
/// product of the P^1 decompositions.
pub fn decompose_product_of_lines(
    n: u32,
    ch: Characteristic,
    r: u32,
    d: &[i64],
) -> Result<OracleDecomposition> {
    assert!(n >= 1, "need at least one line factor");
    if d.len() != n as usize {
        return Err(Error::DimensionMismatch {
            expected: n as usize,
            got: d.len(),
        });
    }
    let mut entries: BTreeMap<Vec<i64>, BigUint> = BTreeMap::new();
    entries.insert(Vec::new(), BigUint::one());
    for &di in d {
        let line = decompose_projective_space(1, ch, r, di)?;
        let mut next = BTreeMap::new();
        for (prefix, m) in &entries {
            for (e, me) in line.entries() {
                let mut key = prefix.clone();
                key.push(e[0]);
                next.insert(key, m * me);
            }
        }
        entries = next;
    }
    Ok(OracleDecomposition { entries })
}
