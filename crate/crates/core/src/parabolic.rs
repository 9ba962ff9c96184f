//! Parabolic subgroup data: the Levi subset I of the simple roots, the
//! character sublattice X(P), the integral weight 2 rho_P, and dim G/P.
//!
//! rho_P itself is half-integral and is never materialized; everything is
//! phrased in terms of 2 rho_P = sum of the positive roots outside the Levi.
//! Levi indices are 0-based internally; the CLI converts from the 1-based
//! convention at the boundary.

use crate::error::{Error, Result};
use crate::rootsys::RootSystemData;
use crate::weight::Weight;
use std::collections::BTreeSet;
use std::sync::Arc;

/// A parabolic P >= B, determined by the subset I of simple roots of its Levi.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    rs: Arc<RootSystemData>,
    levi: BTreeSet<usize>,
    two_rho_p: Weight,
    dim_gp: usize,
}

impl ParabolicData {
    /// Build the parabolic for 0-based Levi indices. `levi` empty gives
    /// P = B; `levi` = all indices gives the degenerate P = G.
    pub fn new(rs: Arc<RootSystemData>, levi: BTreeSet<usize>) -> Result<Self> {
        if let Some(&index) = levi.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::LeviIndexOutOfRange {
                index: index + 1,
                rank: rs.rank(),
            });
        }
        let mut sum = vec![0i64; rs.rank()];
        let mut dim_gp = 0usize;
        for root in rs.positive_roots() {
            if !root.supported_on(&levi) {
                dim_gp += 1;
                for (acc, &m) in sum.iter_mut().zip(&root.root_coords) {
                    *acc += m;
                }
            }
        }
        let two_rho_p = rs.root_to_weight(&sum);
        // 2 rho_P lies in X(P) and pairs positively with every coroot outside I.
        for (i, &c) in two_rho_p.coords().iter().enumerate() {
            if levi.contains(&i) {
                assert_eq!(c, 0, "2 rho_P has nonzero coordinate on the Levi");
            } else {
                assert!(c >= 1, "2 rho_P fails positivity outside the Levi");
            }
        }
        Ok(ParabolicData {
            rs,
            levi,
            two_rho_p,
            dim_gp,
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystemData> {
        &self.rs
    }

    /// 0-based simple-root indices of the Levi.
    pub fn levi(&self) -> &BTreeSet<usize> {
        &self.levi
    }

    /// Sum of the positive roots outside the Levi, in fundamental-weight
    /// coordinates. Equals 2 rho when I is empty.
    pub fn two_rho_p(&self) -> &Weight {
        &self.two_rho_p
    }

    /// dim G/P = number of positive roots outside the Levi.
    pub fn dim_gp(&self) -> usize {
        self.dim_gp
    }

    /// mu lies in X(P) iff its coordinate vanishes at every Levi index.
    pub fn in_xp(&self, mu: &Weight) -> bool {
        assert_eq!(mu.len(), self.rs.rank(), "weight rank mismatch");
        self.levi.iter().all(|&i| mu.coords()[i] == 0)
    }

    /// First Levi index where mu fails to lie in X(P), if any.
    pub fn xp_violation(&self, mu: &Weight) -> Option<usize> {
        self.levi.iter().copied().find(|&i| mu.coords()[i] != 0)
    }
}

/// Parse a Levi spec: `none` (or empty) for I = {}, else comma-separated
/// 1-based indices. Returns 0-based indices validated against `rank`.
pub fn parse_levi(spec: &str, rank: usize) -> Result<BTreeSet<usize>> {
    let spec = spec.trim();
    if spec.is_empty() || spec.eq_ignore_ascii_case("none") {
        return Ok(BTreeSet::new());
    }
    let mut levi = BTreeSet::new();
    for token in spec.split(',') {
        let index: usize = token
            .trim()
            .parse()
            .map_err(|_| Error::ParseLevi(spec.to_string()))?;
        if index == 0 || index > rank {
            return Err(Error::LeviIndexOutOfRange { index, rank });
        }
        levi.insert(index - 1);
    }
    Ok(levi)
}
