//! Exact root-system arithmetic for all finite types and their products.
//!
//! Conventions, fixed once for the whole crate:
//!
//! - The Cartan matrix is stored as `A[i][j] = <alpha_j, alpha_i^vee>`, so the
//!   expansion of the simple root alpha_j in the fundamental-weight basis is
//!   column j of A. (B/C and G2 transposes are a classic bug source; all
//!   tables below were derived from this convention and are cross-checked by
//!   the dimension formula in the tests.)
//! - Simple-root numbering follows Bourbaki. In particular G2 has alpha_1
//!   short, so its Cartan matrix here is [[2,-3],[-1,2]].
//! - Weights live in fundamental-weight coordinates ([`Weight`]); positive
//!   roots additionally carry simple-root coordinates and simple-coroot
//!   coordinates of their coroot.
//!
//! Positive roots are generated by the root-string closure: starting from the
//! simple roots, alpha + alpha_i is a root iff q > 0 in the alpha_i-string
//! through alpha, where p - q = <alpha, alpha_i^vee> and p is the number of
//! steps one can walk down. Coroot coordinates come from the symmetrizers d_i
//! with d_i A[i][j] = d_j A[j][i]: for alpha = sum m_i alpha_i one has
//! alpha^vee = sum (2 d_i m_i / (alpha,alpha)) alpha_i^vee.

use crate::error::{Error, Result};
use crate::weight::Weight;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use std::collections::BTreeSet;
use std::fmt;

/// Simple-factor family of an irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_char(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    /// Ranks admitted for this family: A n>=1, B n>=2, C n>=2, D n>=3,
    /// E 6..8, F 4, G 2. Redundant low-rank labels (B1, C1, D2) are rejected;
    /// write the isomorphic A-type product instead.
    pub fn rank_allowed(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Number of positive roots of the irreducible system of this family.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1) / 2,
            Family::B | Family::C => rank * rank,
            Family::D => rank * (rank - 1),
            Family::E => match rank {
                6 => 36,
                7 => 63,
                8 => 120,
                _ => unreachable!("invalid E rank"),
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A positive root: coordinates in the simple-root basis, and the coordinates
/// of its coroot in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    /// m with alpha = sum_i m_i alpha_i; all entries >= 0.
    pub root_coords: Vec<i64>,
    /// m^vee with alpha^vee = sum_i m^vee_i alpha_i^vee; all entries >= 0.
    pub coroot_coords: Vec<i64>,
}

impl PositiveRoot {
    /// Height of the root, sum of its simple-root coordinates.
    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }

    /// True iff every simple root occurring in alpha has its (0-based) index
    /// in `indices`.
    pub fn supported_on(&self, indices: &BTreeSet<usize>) -> bool {
        self.root_coords
            .iter()
            .enumerate()
            .all(|(i, &m)| m == 0 || indices.contains(&i))
    }
}

/// Cartan data of a semi-simple root system: a product of irreducible
/// factors with block-diagonal Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    factors: Vec<(Family, usize)>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<PositiveRoot>,
}

impl RootSystemData {
    /// Build the root system for a nonempty list of (family, rank) factors.
    pub fn build(factors: &[(Family, usize)]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::ParseType(String::new()));
        }
        for &(family, rank) in factors {
            if !family.rank_allowed(rank) {
                return Err(Error::InvalidFactor(format!("{family}{rank}")));
            }
        }
        let rank: usize = factors.iter().map(|&(_, n)| n).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut symmetrizer = vec![0i64; rank];
        let mut offset = 0;
        for &(family, n) in factors {
            let (block, d) = factor_cartan(family, n);
            for i in 0..n {
                symmetrizer[offset + i] = d[i];
                for j in 0..n {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            offset += n;
        }
        let positive_roots = closure_positive_roots(&cartan, &symmetrizer);
        let expected: usize = factors
            .iter()
            .map(|&(f, n)| f.positive_root_count(n))
            .sum();
        assert_eq!(
            positive_roots.len(),
            expected,
            "positive-root closure disagrees with the classical count"
        );
        Ok(RootSystemData {
            factors: factors.to_vec(),
            rank,
            cartan,
            symmetrizer,
            positive_roots,
        })
    }

    /// Parse a spec string such as `A2`, `b3`, or `A1xA1xG2` (factors joined
    /// by `x`, case-insensitive) and build the system.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for token in spec.split(['x', 'X']) {
            let token = token.trim();
            let mut chars = token.chars();
            let family = chars
                .next()
                .and_then(Family::from_char)
                .ok_or_else(|| Error::ParseType(token.to_string()))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::ParseType(token.to_string()))?;
            if !family.rank_allowed(rank) {
                return Err(Error::InvalidFactor(format!("{family}{rank}")));
            }
            factors.push((family, rank));
        }
        Self::build(&factors)
    }

    /// Canonical spec string, e.g. `A1xG2`.
    pub fn type_string(&self) -> String {
        self.factors
            .iter()
            .map(|&(f, n)| format!("{f}{n}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn factors(&self) -> &[(Family, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `A[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// rho = sum of fundamental weights; all coordinates 1.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank])
    }

    /// Fundamental-weight coordinates of sum_i m_i alpha_i, i.e. A * m.
    pub fn root_to_weight(&self, root_coords: &[i64]) -> Weight {
        assert_eq!(root_coords.len(), self.rank, "root coordinate length");
        let coords = self
            .cartan
            .iter()
            .map(|row| row.iter().zip(root_coords).map(|(a, m)| a * m).sum())
            .collect();
        Weight::new(coords)
    }

    /// Weyl's dimension formula: dim H^0(mu) =
    /// prod_{alpha in R_+} <mu + rho, alpha^vee> / <rho, alpha^vee>,
    /// evaluated as one exact rational product and reduced at the end.
    ///
    /// Errors with [`Error::NotDominant`] when some coordinate is negative;
    /// callers that want the H^0 = 0 convention handle that case themselves.
    pub fn weyl_dimension(&self, mu: &Weight) -> Result<BigUint> {
        if mu.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: mu.len(),
            });
        }
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.clone()));
        }
        let shifted = mu + &self.rho();
        let mut numerator = BigUint::one();
        let mut denominator = BigUint::one();
        for root in &self.positive_roots {
            let num = shifted.pairing(&root.coroot_coords)?;
            let den = root.height_of_coroot();
            debug_assert!(num > 0 && den > 0);
            numerator *= num as u64;
            denominator *= den as u64;
        }
        let (quotient, remainder) = numerator.div_rem(&denominator);
        assert!(
            remainder == BigUint::ZERO,
            "Weyl dimension product is not an integer"
        );
        Ok(quotient)
    }
}

impl PositiveRoot {
    /// <rho, alpha^vee>, the height of the coroot.
    pub fn height_of_coroot(&self) -> i64 {
        self.coroot_coords.iter().sum()
    }
}

/// Cartan matrix block and symmetrizer d (with d_i A[i][j] = d_j A[j][i]) for
/// one irreducible factor, Bourbaki numbering, 0-based indices.
fn factor_cartan(family: Family, n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |edges: &[(usize, usize)], a: &mut Vec<Vec<i64>>| {
        for &(i, j) in edges {
            a[i][j] = -1;
            a[j][i] = -1;
        }
    };
    let d;
    match family {
        Family::A => {
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            link(&edges, &mut a);
            d = vec![1; n];
        }
        Family::B => {
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            link(&edges, &mut a);
            a[n - 1][n - 2] = -2;
            let mut dv = vec![2; n];
            dv[n - 1] = 1;
            d = dv;
        }
        Family::C => {
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            link(&edges, &mut a);
            a[n - 2][n - 1] = -2;
            let mut dv = vec![1; n];
            dv[n - 1] = 2;
            d = dv;
        }
        Family::D => {
            let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
            edges.push((n - 3, n - 1));
            link(&edges, &mut a);
            d = vec![1; n];
        }
        Family::E => {
            // Chain 1-3-4-5-...-n with node 2 attached to node 4 (1-based).
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1)));
            link(&edges, &mut a);
            d = vec![1; n];
        }
        Family::F => {
            // 1 - 2 => 3 - 4 with alpha_1, alpha_2 long.
            link(&[(0, 1), (1, 2), (2, 3)], &mut a);
            a[2][1] = -2;
            d = vec![2, 2, 1, 1];
        }
        Family::G => {
            // alpha_1 short: <alpha_2, alpha_1^vee> = -3.
            a[0][1] = -3;
            a[1][0] = -1;
            d = vec![1, 3];
        }
    }
    debug_assert!((0..n).all(|i| (0..n).all(|j| d[i] * a[i][j] == d[j] * a[j][i])));
    (a, d)
}

/// Generate all positive roots of the (possibly block-diagonal) Cartan matrix
/// by height, adding alpha + alpha_i whenever the alpha_i-string through
/// alpha admits it. Returned sorted by height, then lexicographically.
fn closure_positive_roots(cartan: &[Vec<i64>], symmetrizer: &[i64]) -> Vec<PositiveRoot> {
    let n = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut current: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut m = vec![0i64; n];
            m[i] = 1;
            m
        })
        .collect();
    known.extend(current.iter().cloned());
    let mut all: Vec<Vec<i64>> = current.clone();
    while !current.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for m in &current {
            for i in 0..n {
                // <alpha, alpha_i^vee> = (A * m)_i.
                let pair: i64 = cartan[i].iter().zip(m).map(|(a, c)| a * c).sum();
                // Walk down the alpha_i-string as far as it stays a root.
                let mut down = 0i64;
                let mut probe = m.clone();
                while probe[i] > 0 {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        down += 1;
                    } else {
                        break;
                    }
                }
                if down - pair > 0 {
                    let mut up = m.clone();
                    up[i] += 1;
                    if !known.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        known.extend(next.iter().cloned());
        current = next.into_iter().collect();
        all.extend(current.iter().cloned());
    }
    all.sort_by_key(|m| (m.iter().sum::<i64>(), m.clone()));
    all.into_iter()
        .map(|m| {
            let coroot = coroot_coords(cartan, symmetrizer, &m);
            PositiveRoot {
                root_coords: m,
                coroot_coords: coroot,
            }
        })
        .collect()
}

/// Coroot coordinates of alpha = sum m_i alpha_i:
/// m^vee_i = 2 d_i m_i / (alpha, alpha) with
/// (alpha, alpha) = sum_{i,j} m_i m_j d_i A[i][j].
fn coroot_coords(cartan: &[Vec<i64>], symmetrizer: &[i64], m: &[i64]) -> Vec<i64> {
    let n = cartan.len();
    let mut norm2 = 0i64;
    for i in 0..n {
        for j in 0..n {
            norm2 += m[i] * m[j] * symmetrizer[i] * cartan[i][j];
        }
    }
    assert!(norm2 > 0, "root has nonpositive norm");
    m.iter()
        .enumerate()
        .map(|(i, &mi)| {
            let num = 2 * symmetrizer[i] * mi;
            assert_eq!(num % norm2, 0, "coroot coordinate is not integral");
            num / norm2
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Independent oracle: generate all roots as the orbit of the simple
    /// roots under simple reflections s_i(m) = m - (A m)_i e_i, then keep the
    /// positive ones. Exercises none of the root-string logic.
    fn roots_by_reflection(cartan: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
        let n = cartan.len();
        let mut orbit: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut m = vec![0i64; n];
                m[i] = 1;
                m
            })
            .collect();
        orbit.extend(frontier.iter().cloned());
        while let Some(m) = frontier.pop() {
            for i in 0..n {
                let pair: i64 = cartan[i].iter().zip(&m).map(|(a, c)| a * c).sum();
                let mut refl = m.clone();
                refl[i] -= pair;
                if orbit.insert(refl.clone()) {
                    frontier.push(refl);
                }
            }
        }
        orbit
            .into_iter()
            .filter(|m| m.iter().all(|&c| c >= 0))
            .collect()
    }

    fn assert_matches_reflection_oracle(spec: &str) {
        let rs = RootSystemData::parse(spec).unwrap();
        let closure: BTreeSet<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.root_coords.clone())
            .collect();
        assert_eq!(closure, roots_by_reflection(rs.cartan()), "type {spec}");
    }

    #[test]
    fn closure_agrees_with_reflection_oracle() {
        for spec in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "A1xB2"] {
            assert_matches_reflection_oracle(spec);
        }
    }

    #[test]
    fn classical_positive_root_counts() {
        let cases = [
            ("A1", 1),
            ("A2", 3),
            ("A4", 10),
            ("B2", 4),
            ("B4", 16),
            ("C3", 9),
            ("D3", 6),
            ("D4", 12),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
            ("A1xA1xA1", 3),
            ("A2xG2", 9),
        ];
        for (spec, count) in cases {
            let rs = RootSystemData::parse(spec).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "type {spec}");
        }
    }

    #[test]
    fn a1_cartan_and_root() {
        let rs = RootSystemData::parse("A1").unwrap();
        assert_eq!(rs.cartan(), &[vec![2]]);
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.positive_roots()[0].root_coords, vec![1]);
    }

    #[test]
    fn a2_positive_roots_are_the_three_expected() {
        let rs = RootSystemData::parse("A2").unwrap();
        let roots: BTreeSet<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.root_coords.clone())
            .collect();
        let expected: BTreeSet<Vec<i64>> =
            [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(roots, expected);
    }

    #[test]
    fn g2_cartan_fixed_convention() {
        // Bourbaki numbering (alpha_1 short) under A[i][j] = <alpha_j, alpha_i^vee>.
        let rs = RootSystemData::parse("G2").unwrap();
        assert_eq!(rs.cartan(), &[vec![2, -3], vec![-1, 2]]);
        assert_eq!(rs.positive_roots().len(), 6);
    }

    #[test]
    fn cartan_invariants_every_type() {
        for spec in ["A3", "B3", "C4", "D4", "E6", "F4", "G2", "B2xA1"] {
            let rs = RootSystemData::parse(spec).unwrap();
            let a = rs.cartan();
            for (i, row) in a.iter().enumerate() {
                for (j, &entry) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(entry, 2);
                    } else {
                        assert!(entry <= 0);
                        assert_eq!(entry == 0, a[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn simple_roots_have_unit_vectors_and_height_one() {
        let rs = RootSystemData::parse("B3xA2").unwrap();
        let n = rs.rank();
        for i in 0..n {
            let mut unit = vec![0i64; n];
            unit[i] = 1;
            let found = rs
                .positive_roots()
                .iter()
                .find(|r| r.root_coords == unit)
                .expect("simple root missing");
            assert_eq!(found.coroot_coords, unit);
        }
        // <rho, alpha^vee> >= 1 with equality exactly for the simple roots.
        let rho = rs.rho();
        for root in rs.positive_roots() {
            let pairing = rho.pairing(&root.coroot_coords).unwrap();
            assert!(pairing >= 1);
            let simple = root.root_coords.iter().sum::<i64>() == 1;
            assert_eq!(pairing == 1, simple, "root {:?}", root.root_coords);
        }
    }

    #[test]
    fn invalid_factors_are_rejected() {
        for spec in ["H3", "E5", "E9", "F3", "G4", "B1", "C1", "D2", "A0", ""] {
            let err = RootSystemData::parse(spec).unwrap_err();
            assert!(err.is_usage(), "spec {spec}");
        }
        // The offending factor is named.
        let err = RootSystemData::parse("A2xE9").unwrap_err();
        assert!(err.to_string().contains("E9"));
    }

    #[test]
    fn parse_is_case_insensitive_and_canonicalizes() {
        let rs = RootSystemData::parse("a1Xg2").unwrap();
        assert_eq!(rs.type_string(), "A1xG2");
    }

    #[test]
    fn weyl_dimension_a1_counts_binary_forms() {
        // dim H^0(P^1, O(d)) = d + 1 monomials of degree d in two variables.
        let rs = RootSystemData::parse("A1").unwrap();
        for d in 0..20 {
            let dim = rs.weyl_dimension(&Weight::new(vec![d])).unwrap();
            assert_eq!(dim.to_i64().unwrap(), d + 1);
        }
    }

    /// Independent A2 closed form (a+1)(b+1)(a+b+2)/2.
    fn a2_dim(a: u64, b: u64) -> u64 {
        (a + 1) * (b + 1) * (a + b + 2) / 2
    }

    #[test]
    fn weyl_dimension_a2_matches_closed_form() {
        let rs = RootSystemData::parse("A2").unwrap();
        for a in 0..8 {
            for b in 0..8 {
                let dim = rs
                    .weyl_dimension(&Weight::new(vec![a as i64, b as i64]))
                    .unwrap();
                assert_eq!(dim.to_u64().unwrap(), a2_dim(a, b));
            }
        }
        // mu = rho gives 8 = 2^3, the Andersen-Haboush rank for p = 2, r = 1.
        assert_eq!(
            rs.weyl_dimension(&rs.rho()).unwrap().to_u64().unwrap(),
            8
        );
    }

    #[test]
    fn weyl_dimension_of_zero_is_one() {
        for spec in ["A1", "B3", "D4", "E8", "G2", "A1xF4"] {
            let rs = RootSystemData::parse(spec).unwrap();
            let dim = rs.weyl_dimension(&Weight::zero(rs.rank())).unwrap();
            assert!(dim.is_one(), "type {spec}");
        }
    }

    #[test]
    fn weyl_dimension_known_small_representations() {
        // Stringent convention checks: fundamental representations whose
        // dimensions are classical.
        let cases: &[(&str, Vec<i64>, u64)] = &[
            ("B2", vec![1, 0], 5),   // vector rep of Spin(5)
            ("B2", vec![0, 1], 4),   // spin rep
            ("G2", vec![1, 0], 7),   // short-root fundamental
            ("G2", vec![0, 1], 14),  // adjoint
            ("A3", vec![0, 1, 0], 6),
            ("D4", vec![1, 0, 0, 0], 8),
            ("F4", vec![1, 0, 0, 0], 52), // adjoint
            ("F4", vec![0, 0, 0, 1], 26),
            ("E6", vec![1, 0, 0, 0, 0, 0], 27),
            ("E7", vec![0, 0, 0, 0, 0, 0, 1], 56),
            ("E8", vec![0, 0, 0, 0, 0, 0, 0, 1], 248), // adjoint
        ];
        for (spec, coords, expected) in cases {
            let rs = RootSystemData::parse(spec).unwrap();
            let dim = rs.weyl_dimension(&Weight::new(coords.clone())).unwrap();
            assert_eq!(dim.to_u64().unwrap(), *expected, "type {spec}");
        }
    }

    #[test]
    fn weyl_dimension_rejects_non_dominant() {
        let rs = RootSystemData::parse("A2").unwrap();
        let err = rs.weyl_dimension(&Weight::new(vec![1, -1])).unwrap_err();
        assert!(!err.is_usage());
    }

    #[test]
    fn weyl_dimension_is_multiplicative_on_products() {
        let a2 = RootSystemData::parse("A2").unwrap();
        let g2 = RootSystemData::parse("G2").unwrap();
        let prod = RootSystemData::parse("A2xG2").unwrap();
        let left = a2.weyl_dimension(&Weight::new(vec![2, 1])).unwrap();
        let right = g2.weyl_dimension(&Weight::new(vec![1, 1])).unwrap();
        let joint = prod
            .weyl_dimension(&Weight::new(vec![2, 1, 1, 1]))
            .unwrap();
        assert_eq!(joint, left * right);
    }

    proptest! {
        #[test]
        fn weyl_dimension_symmetric_under_a2_diagram_flip(a in 0i64..12, b in 0i64..12) {
            let rs = RootSystemData::parse("A2").unwrap();
            let lhs = rs.weyl_dimension(&Weight::new(vec![a, b])).unwrap();
            let rhs = rs.weyl_dimension(&Weight::new(vec![b, a])).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn weyl_dimension_symmetric_under_a3_diagram_flip(
            a in 0i64..6, b in 0i64..6, c in 0i64..6,
        ) {
            let rs = RootSystemData::parse("A3").unwrap();
            let lhs = rs.weyl_dimension(&Weight::new(vec![a, b, c])).unwrap();
            let rhs = rs.weyl_dimension(&Weight::new(vec![c, b, a])).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn weyl_dimension_symmetric_under_d4_triality(
            a in 0i64..4, b in 0i64..4, c in 0i64..4, d in 0i64..4,
        ) {
            // Nodes 1, 3, 4 are the outer nodes of D4.
            let rs = RootSystemData::parse("D4").unwrap();
            let base = rs.weyl_dimension(&Weight::new(vec![a, b, c, d])).unwrap();
            for perm in [[c, b, d, a], [d, b, a, c], [a, b, d, c]] {
                let other = rs.weyl_dimension(&Weight::new(perm.to_vec())).unwrap();
                prop_assert_eq!(&base, &other);
            }
        }

        #[test]
        fn weyl_dimension_at_least_one_on_dominant(
            coords in proptest::collection::vec(0i64..10, 3),
        ) {
            let rs = RootSystemData::parse("B3").unwrap();
            let dim = rs.weyl_dimension(&Weight::new(coords)).unwrap();
            prop_assert!(dim >= BigUint::one());
        }
    }
}
