//! Integral weights in fundamental-weight coordinates.
//!
//! A weight mu = sum_i c_i omega_i is stored as its coordinate vector
//! `(c_1, ..., c_n)` in the fundamental-weight basis of X(T), so the pairing
//! with the i-th simple coroot is simply `c_i`, and the pairing with an
//! arbitrary coroot of simple-coroot coordinates `m` is the dot product
//! `sum_i c_i m_i`.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A weight of X(T) in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    /// The zero weight of the given rank.
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// mu is dominant iff every fundamental-weight coordinate is >= 0.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Canonical pairing <mu, v> where `coroot_coords` are the coordinates of
    /// v in the simple-coroot basis. Exact integer, bilinear in both slots.
    pub fn pairing(&self, coroot_coords: &[i64]) -> Result<i64> {
        if self.0.len() != coroot_coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.0.len(),
                got: coroot_coords.len(),
            });
        }
        let sum: i128 = self
            .0
            .iter()
            .zip(coroot_coords)
            .map(|(&c, &m)| c as i128 * m as i128)
            .sum();
        Ok(sum.try_into().expect("pairing overflows i64"))
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * k).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.0.len(), rhs.0.len(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.0.len(), rhs.0.len(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|&c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parse a comma-separated coordinate vector, e.g. `1,0,-2`.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let coords = s
        .split(',')
        .map(|tok| tok.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::ParseWeight(s.to_string()))?;
    Ok(Weight::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pairing_with_zero_weight_is_zero() {
        let zero = Weight::zero(3);
        assert_eq!(zero.pairing(&[4, -1, 7]).unwrap(), 0);
    }

    #[test]
    fn pairing_dimension_mismatch_is_usage_error() {
        let w = Weight::new(vec![1, 0]);
        let err = w.pairing(&[1, 1, 1]).unwrap_err();
        assert!(err.is_usage());
    }

    #[test]
    fn highest_root_coroot_pairing_in_a2() {
        // mu = omega_1, highest coroot = alpha_1^vee + alpha_2^vee.
        let mu = Weight::new(vec![1, 0]);
        assert_eq!(mu.pairing(&[1, 1]).unwrap(), 1);
    }

    #[test]
    fn display_and_parse() {
        let w = Weight::new(vec![3, -1, 0]);
        assert_eq!(w.to_string(), "(3,-1,0)");
        assert_eq!(parse_weight("3, -1, 0").unwrap(), w);
        assert!(parse_weight("3,x").is_err());
    }

    proptest! {
        #[test]
        fn pairing_is_bilinear(
            w1 in proptest::collection::vec(-50i64..50, 4),
            w2 in proptest::collection::vec(-50i64..50, 4),
            v in proptest::collection::vec(-50i64..50, 4),
            a in -20i64..20,
            b in -20i64..20,
        ) {
            let w1 = Weight::new(w1);
            let w2 = Weight::new(w2);
            let combo = &w1.scaled(a) + &w2.scaled(b);
            let lhs = combo.pairing(&v).unwrap();
            let rhs = a * w1.pairing(&v).unwrap() + b * w2.pairing(&v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
