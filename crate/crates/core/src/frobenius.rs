//! Rank-one summands of Frobenius pushforwards of line bundles on G/P.
//!
//! The central facts, phrased over the fundamental-weight coordinates:
//!
//! - L(lambda) is a direct summand of F^r_* L(mu) iff for every simple root
//!   alpha one has 0 <= <mu - p^r lambda, alpha^vee> <= (p^r - 1) <2 rho_P, alpha^vee>.
//!   Per coordinate outside the Levi this is an integer interval for
//!   lambda's coordinate, so the full summand set is a finite box.
//! - When 0 <= <mu, alpha^vee> <= p^r - 1 everywhere, the multiplicity of the
//!   trivial summand O is dim H^0(mu), Weyl's dimension formula.
//! - (F^r_* L(mu))^vee = F^r_* L((p^r - 1) 2 rho_P - mu), an involution on
//!   weights that negates summand sets.
//! - Writing mu = mu_0 + p^r mu_1 with mu_0 restricted and mu_1 dominant, the
//!   projection formula attaches the exact multiplicity dim H^0(mu_0) to the
//!   summand L(mu_1); applying the same to the dual and negating attaches a
//!   second exact multiplicity. All other multiplicities are reported
//!   Unknown: the library does not invent numbers the theory does not give.

use crate::error::{Error, Result};
use crate::parabolic::ParabolicData;
use crate::rootsys::RootSystemData;
use crate::weight::Weight;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A validated characteristic: prime by default, composite only through the
/// explicit exploration constructor (the inequalities are pure arithmetic,
/// but Frobenius itself only exists for primes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Characteristic(u64);

impl Characteristic {
    /// Validate p as a prime by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::CharacteristicTooSmall(p));
        }
        let mut f = 2u64;
        while f <= p / f {
            if p.is_multiple_of(f) {
                return Err(Error::NotPrime(p));
            }
            f += 1;
        }
        Ok(Characteristic(p))
    }

    /// Accept any p >= 2, for exploring the inequalities at composite "p".
    pub fn composite_allowed(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::CharacteristicTooSmall(p));
        }
        Ok(Characteristic(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// p^r as a machine integer, or an overflow error.
    pub fn power(self, r: u32) -> Result<i64> {
        i64::try_from(self.0)
            .ok()
            .and_then(|p| p.checked_pow(r))
            .ok_or(Error::PowerOverflow { p: self.0, r })
    }
}

/// A validated query (P, p, r, mu) about F^r_* L^P(mu).
#[derive(Debug, Clone)]
pub struct FrobeniusQuery {
    pd: Arc<ParabolicData>,
    p: u64,
    r: u32,
    /// p^r, precomputed.
    q: i64,
    mu: Weight,
}

impl FrobeniusQuery {
    pub fn new(pd: Arc<ParabolicData>, ch: Characteristic, r: u32, mu: Weight) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroFrobeniusPower);
        }
        let rank = pd.root_system().rank();
        if mu.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: mu.len(),
            });
        }
        if let Some(index) = pd.xp_violation(&mu) {
            return Err(Error::NotInXP {
                weight: mu,
                index: index + 1,
            });
        }
        let q = ch.power(r)?;
        Ok(FrobeniusQuery {
            pd,
            p: ch.get(),
            r,
            q,
            mu,
        })
    }

    pub fn parabolic(&self) -> &Arc<ParabolicData> {
        &self.pd
    }

    pub fn root_system(&self) -> &Arc<RootSystemData> {
        self.pd.root_system()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// p^r.
    pub fn prime_power(&self) -> i64 {
        self.q
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    /// Same parabolic and characteristic, different weight.
    pub fn with_mu(&self, mu: Weight) -> Result<Self> {
        let rank = self.pd.root_system().rank();
        if mu.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: mu.len(),
            });
        }
        if let Some(index) = self.pd.xp_violation(&mu) {
            return Err(Error::NotInXP {
                weight: mu,
                index: index + 1,
            });
        }
        Ok(FrobeniusQuery {
            pd: Arc::clone(&self.pd),
            p: self.p,
            r: self.r,
            q: self.q,
            mu,
        })
    }
}

/// Multiplicity of a summand in the Remak decomposition, as far as the
/// theory determines it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplicity {
    Exact(BigUint),
    Unknown,
    /// Both determination routes claimed the same summand with different
    /// values. Not expected to occur; reported rather than resolved.
    Conflict { direct: BigUint, dual: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandEntry {
    pub lambda: Weight,
    pub multiplicity: Multiplicity,
}

/// Full rank-one report for one query: every summand weight, the exactly
/// known multiplicities, and the rank bookkeeping.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub query: FrobeniusQuery,
    /// Sorted lexicographically by the coordinates of lambda.
    pub summands: Vec<SummandEntry>,
    /// p^{r dim G/P}, the rank of the pushforward.
    pub total_rank: BigUint,
    /// Sum of the exactly known line-bundle multiplicities.
    pub accounted_rank: BigUint,
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Exact(m) => write!(f, "{m}"),
            Multiplicity::Unknown => write!(f, "unknown"),
            Multiplicity::Conflict { direct, dual } => {
                write!(f, "conflict({direct},{dual})")
            }
        }
    }
}

/// Is L(lambda) a direct summand of F^r_* L(mu)? Checks the coordinatewise
/// inequality 0 <= <mu - p^r lambda, alpha^vee> <= (p^r - 1)<2 rho_P, alpha^vee>
/// at every simple root outside the Levi; on the Levi both weights lie in
/// X(P), so the difference is asserted to vanish there.
pub fn is_summand(query: &FrobeniusQuery, lambda: &Weight) -> Result<bool> {
    let rank = query.root_system().rank();
    if lambda.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            got: lambda.len(),
        });
    }
    if let Some(index) = query.parabolic().xp_violation(lambda) {
        return Err(Error::NotInXP {
            weight: lambda.clone(),
            index: index + 1,
        });
    }
    let q = query.prime_power() as i128;
    let two_rho_p = query.parabolic().two_rho_p().coords();
    for (i, &c) in two_rho_p.iter().enumerate() {
        let t = query.mu().coords()[i] as i128 - q * lambda.coords()[i] as i128;
        if query.parabolic().levi().contains(&i) {
            assert_eq!(t, 0, "X(P) member pairs nonzero with a Levi coroot");
        } else if t < 0 || t > (q - 1) * c as i128 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All weights lambda with L(lambda) a direct summand of F^r_* L(mu):
/// the product of the per-coordinate integer ranges
/// [ceil((<mu,a^vee> - (p^r-1)<2rho_P,a^vee>)/p^r), floor(<mu,a^vee>/p^r)],
/// with Levi coordinates pinned to zero. Sorted lexicographically; always
/// nonempty.
pub fn enumerate_summands(query: &FrobeniusQuery) -> Vec<Weight> {
    let rank = query.root_system().rank();
    let q = query.prime_power() as i128;
    let two_rho_p = query.parabolic().two_rho_p().coords();
    let mut ranges: Vec<(i64, i64)> = Vec::with_capacity(rank);
    for (i, &c) in two_rho_p.iter().enumerate() {
        if query.parabolic().levi().contains(&i) {
            ranges.push((0, 0));
        } else {
            let mu_i = query.mu().coords()[i] as i128;
            let lo = Integer::div_ceil(&(mu_i - (q - 1) * c as i128), &q);
            let hi = Integer::div_floor(&mu_i, &q);
            debug_assert!(lo <= hi, "summand range is empty");
            ranges.push((lo as i64, hi as i64));
        }
    }
    let mut result = Vec::new();
    let mut current: Vec<i64> = ranges.iter().map(|&(lo, _)| lo).collect();
    loop {
        result.push(Weight::new(current.clone()));
        // Odometer with the last coordinate fastest: emits in lex order.
        let mut pos = rank;
        loop {
            if pos == 0 {
                debug_assert!(result.windows(2).all(|w| w[0] < w[1]));
                return result;
            }
            pos -= 1;
            if current[pos] < ranges[pos].1 {
                current[pos] += 1;
                break;
            }
            current[pos] = ranges[pos].0;
        }
    }
}

/// Multiplicity of the trivial summand O in F^r_* L(mu), which equals
/// dim H^0(mu) provided 0 <= <mu, alpha^vee> <= p^r - 1 for every simple
/// alpha. Outside that range the multiplicity is not determined and a
/// precondition error is returned.
pub fn multiplicity_of_trivial(query: &FrobeniusQuery) -> Result<BigUint> {
    let bound = query.prime_power() - 1;
    for (i, &c) in query.mu().coords().iter().enumerate() {
        if c < 0 || c > bound {
            return Err(Error::OutsideRestrictedRange {
                weight: query.mu().clone(),
                index: i + 1,
                value: c,
                bound,
            });
        }
    }
    query.root_system().weyl_dimension(query.mu())
}

/// The weight mu^vee with (F^r_* L(mu))^vee = F^r_* L(mu^vee), namely
/// (p^r - 1) * 2 rho_P - mu. An involution on X(P).
pub fn serre_dual_weight(query: &FrobeniusQuery) -> Weight {
    let scale = query.prime_power() - 1;
    &query.parabolic().two_rho_p().scaled(scale) - query.mu()
}

/// Coordinatewise Euclidean split of a dominant weight as
/// mu = mu_0 + p^r mu_1 with mu_0 restricted (coordinates in [0, p^r - 1])
/// and mu_1 dominant. The split is unique; if mu is in X(P) so are both
/// parts.
pub fn padic_split(query: &FrobeniusQuery) -> Result<(Weight, Weight)> {
    if !query.mu().is_dominant() {
        return Err(Error::NotDominant(query.mu().clone()));
    }
    Ok(split_restricted(query.mu(), query.prime_power()))
}

fn split_restricted(mu: &Weight, q: i64) -> (Weight, Weight) {
    let mut low = Vec::with_capacity(mu.len());
    let mut high = Vec::with_capacity(mu.len());
    for &c in mu.coords() {
        let rem = c.rem_euclid(q);
        low.push(rem);
        high.push((c - rem) / q);
    }
    let (mu0, mu1) = (Weight::new(low), Weight::new(high));
    debug_assert_eq!(&(&mu1.scaled(q) + &mu0), mu);
    (mu0, mu1)
}

/// Which Frobenius powers a stable-summand request ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StableRange {
    /// A single finite power r >= 1.
    Finite(u32),
    /// The union over all r >= 1, which stabilizes.
    Limit,
}

/// Result of [`stable_line_summands_of_structure_sheaf`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableSummands {
    /// Sorted lexicographically.
    pub weights: Vec<Weight>,
    /// For [`StableRange::Limit`]: the smallest r whose summand set already
    /// equals the limit set. `None` for finite requests.
    pub stabilizes_at: Option<u32>,
}

/// Line-bundle summands of F^r_* O_{G/P}. For finite r this is the mu = 0
/// summand box, per coordinate {0, -1, ..., -floor((p^r-1)c/p^r)} where
/// c = <2 rho_P, alpha^vee>. The union over all r is the box with per-
/// coordinate floor c - 1, reached as soon as p^r >= c for every c; the
/// smallest such r is reported alongside.
pub fn stable_line_summands_of_structure_sheaf(
    pd: &Arc<ParabolicData>,
    ch: Characteristic,
    range: StableRange,
) -> Result<StableSummands> {
    match range {
        StableRange::Finite(r) => {
            let rank = pd.root_system().rank();
            let query = FrobeniusQuery::new(Arc::clone(pd), ch, r, Weight::zero(rank))?;
            Ok(StableSummands {
                weights: enumerate_summands(&query),
                stabilizes_at: None,
            })
        }
        StableRange::Limit => {
            let rank = pd.root_system().rank();
            let mut ranges = Vec::with_capacity(rank);
            let mut max_pairing = 1i64;
            for i in 0..rank {
                if pd.levi().contains(&i) {
                    ranges.push((0, 0));
                } else {
                    let c = pd.two_rho_p().coords()[i];
                    ranges.push((-(c - 1), 0));
                    max_pairing = max_pairing.max(c);
                }
            }
            let mut r = 1u32;
            while ch.power(r)? < max_pairing {
                r += 1;
            }
            let weights = box_weights(&ranges);
            Ok(StableSummands {
                weights,
                stabilizes_at: Some(r),
            })
        }
    }
}

fn box_weights(ranges: &[(i64, i64)]) -> Vec<Weight> {
    let mut result = Vec::new();
    let mut current: Vec<i64> = ranges.iter().map(|&(lo, _)| lo).collect();
    loop {
        result.push(Weight::new(current.clone()));
        let mut pos = ranges.len();
        loop {
            if pos == 0 {
                return result;
            }
            pos -= 1;
            if current[pos] < ranges[pos].1 {
                current[pos] += 1;
                break;
            }
            current[pos] = ranges[pos].0;
        }
    }
}

/// Multiplicity of L(-rho) as a summand of F^r_* O on the full flag variety:
/// dim H^0((p^r - 2) rho).
pub fn gros_kaneda_multiplicity(
    rs: &RootSystemData,
    ch: Characteristic,
    r: u32,
) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::ZeroFrobeniusPower);
    }
    let q = ch.power(r)?;
    let mu = Weight::new(vec![q - 2; rs.rank()]);
    rs.weyl_dimension(&mu)
}

/// Full report: summand list from the criterion, exact multiplicities where
/// the theory determines them (the p-adic projection-formula summand and its
/// dual twist), Unknown elsewhere, plus rank accounting.
pub fn decompose(query: &FrobeniusQuery) -> Result<DecompositionReport> {
    let summand_weights = enumerate_summands(query);
    let mut known: BTreeMap<Weight, Multiplicity> = BTreeMap::new();

    if query.mu().is_dominant() {
        let (mu0, mu1) = padic_split(query)?;
        let direct = query.root_system().weyl_dimension(&mu0)?;
        attach(&mut known, mu1, direct, false);

        // The dual route applies when mu itself is restricted.
        let restricted = query
            .mu()
            .coords()
            .iter()
            .all(|&c| c < query.prime_power());
        if restricted {
            let dual_weight = serre_dual_weight(query);
            debug_assert!(dual_weight.is_dominant());
            let (nu0, nu1) = split_restricted(&dual_weight, query.prime_power());
            let dual = query.root_system().weyl_dimension(&nu0)?;
            attach(&mut known, -&nu1, dual, true);
        }
    }

    let mut accounted = BigUint::zero();
    let summands: Vec<SummandEntry> = summand_weights
        .into_iter()
        .map(|lambda| {
            let multiplicity = known.remove(&lambda).unwrap_or(Multiplicity::Unknown);
            if let Multiplicity::Exact(m) = &multiplicity {
                accounted += m;
            }
            SummandEntry {
                lambda,
                multiplicity,
            }
        })
        .collect();
    assert!(
        known.is_empty(),
        "an exactly known summand fell outside the enumerated set"
    );

    let dim = u32::try_from(query.parabolic().dim_gp()).expect("dim G/P fits in u32");
    let total_rank = BigUint::from(query.p()).pow(query.r() * dim);
    assert!(accounted <= total_rank, "accounted rank exceeds total rank");
    Ok(DecompositionReport {
        query: query.clone(),
        summands,
        total_rank,
        accounted_rank: accounted,
    })
}

fn attach(
    known: &mut BTreeMap<Weight, Multiplicity>,
    lambda: Weight,
    value: BigUint,
    from_dual: bool,
) {
    match known.remove(&lambda) {
        None => {
            known.insert(lambda, Multiplicity::Exact(value));
        }
        Some(Multiplicity::Exact(previous)) if previous == value => {
            known.insert(lambda, Multiplicity::Exact(value));
        }
        Some(Multiplicity::Exact(previous)) => {
            // Two routes disagree on the same summand; report, don't resolve.
            let (direct, dual) = if from_dual {
                (previous, value)
            } else {
                (value, previous)
            };
            known.insert(lambda, Multiplicity::Conflict { direct, dual });
        }
        Some(other) => {
            known.insert(lambda, other);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::ParabolicData;
    use crate::rootsys::RootSystemData;
    use num_traits::One;
    use std::collections::BTreeSet;

    fn query(
        spec: &str,
        levi: &[usize],
        p: u64,
        r: u32,
        mu: Vec<i64>,
    ) -> FrobeniusQuery {
        let rs = Arc::new(RootSystemData::parse(spec).unwrap());
        let pd = Arc::new(
            ParabolicData::new(rs, levi.iter().copied().collect::<BTreeSet<_>>()).unwrap(),
        );
        FrobeniusQuery::new(pd, Characteristic::prime(p).unwrap(), r, Weight::new(mu)).unwrap()
    }

    fn weights(coords: &[&[i64]]) -> Vec<Weight> {
        let mut v: Vec<Weight> = coords.iter().map(|c| Weight::new(c.to_vec())).collect();
        v.sort();
        v
    }

    #[test]
    fn characteristic_validation() {
        assert!(Characteristic::prime(2).is_ok());
        assert!(Characteristic::prime(97).is_ok());
        assert_eq!(Characteristic::prime(6).unwrap_err(), Error::NotPrime(6));
        assert_eq!(
            Characteristic::prime(1).unwrap_err(),
            Error::CharacteristicTooSmall(1)
        );
        assert!(Characteristic::composite_allowed(6).is_ok());
        assert!(Characteristic::composite_allowed(1).is_err());
    }

    #[test]
    fn query_validation() {
        let rs = Arc::new(RootSystemData::parse("A2").unwrap());
        let pd = Arc::new(ParabolicData::new(rs, [1].into_iter().collect()).unwrap());
        let ch = Characteristic::prime(2).unwrap();
        assert!(matches!(
            FrobeniusQuery::new(Arc::clone(&pd), ch, 0, Weight::zero(2)).unwrap_err(),
            Error::ZeroFrobeniusPower
        ));
        assert!(matches!(
            FrobeniusQuery::new(Arc::clone(&pd), ch, 1, Weight::new(vec![1])).unwrap_err(),
            Error::DimensionMismatch { .. }
        ));
        // mu must lie in X(P).
        assert!(matches!(
            FrobeniusQuery::new(Arc::clone(&pd), ch, 1, Weight::new(vec![0, 2])).unwrap_err(),
            Error::NotInXP { .. }
        ));
    }

    #[test]
    fn is_summand_projective_line() {
        // F_* O_{P^1} at p = 3: lambda = -omega passes (0 <= 3 <= 4).
        let q = query("A1", &[], 3, 1, vec![0]);
        assert!(is_summand(&q, &Weight::new(vec![-1])).unwrap());
        // F_* O(2) at p = 3 is free: lambda = -omega fails (5 > 4).
        let q = query("A1", &[], 3, 1, vec![2]);
        assert!(!is_summand(&q, &Weight::new(vec![-1])).unwrap());
        // mu = p^r lambda always passes (projection formula twist).
        let q = query("A1", &[], 3, 1, vec![-6]);
        assert!(is_summand(&q, &Weight::new(vec![-2])).unwrap());
    }

    #[test]
    fn is_summand_rejects_weights_outside_xp() {
        let q = query("A2", &[1], 2, 1, vec![0, 0]);
        let err = is_summand(&q, &Weight::new(vec![0, 1])).unwrap_err();
        assert!(matches!(err, Error::NotInXP { .. }));
    }

    #[test]
    fn enumerate_full_flag_structure_sheaf() {
        let q = query("A2", &[], 2, 1, vec![0, 0]);
        assert_eq!(
            enumerate_summands(&q),
            weights(&[&[0, 0], &[-1, 0], &[0, -1], &[-1, -1]])
        );
    }

    #[test]
    fn enumerate_projective_plane_structure_sheaf() {
        // Criterion 0 <= -2c <= 3 leaves c in {0, -1}.
        let q = query("A2", &[1], 2, 1, vec![0, 0]);
        assert_eq!(enumerate_summands(&q), weights(&[&[0, 0], &[-1, 0]]));
    }

    #[test]
    fn enumerate_andersen_haboush_is_free() {
        let q = query("A1", &[], 3, 1, vec![2]);
        assert_eq!(enumerate_summands(&q), weights(&[&[0]]));
    }

    #[test]
    fn enumerate_point_yields_zero_only() {
        let q = query("A2", &[0, 1], 3, 1, vec![0, 0]);
        assert_eq!(enumerate_summands(&q), weights(&[&[0, 0]]));
    }

    /// Independent route: filter a bounding box through is_summand.
    fn enumerate_by_filter(q: &FrobeniusQuery) -> Vec<Weight> {
        let rank = q.root_system().rank();
        let pr = q.prime_power();
        let ranges: Vec<(i64, i64)> = (0..rank)
            .map(|i| {
                if q.parabolic().levi().contains(&i) {
                    (0, 0)
                } else {
                    let center = q.mu().coords()[i] / pr;
                    let c = q.parabolic().two_rho_p().coords()[i];
                    (center - c - 2, center + c + 2)
                }
            })
            .collect();
        box_weights(&ranges)
            .into_iter()
            .filter(|w| is_summand(q, w).unwrap())
            .collect()
    }

    #[test]
    fn enumeration_agrees_with_criterion_filter() {
        let cases = [
            ("A2", vec![], 2, 1, vec![0, 0]),
            ("A2", vec![1], 2, 1, vec![3, 0]),
            ("A2", vec![1], 3, 2, vec![-5, 0]),
            ("B2", vec![], 5, 1, vec![2, 7]),
            ("B2", vec![0], 3, 1, vec![0, -4]),
            ("G2", vec![], 2, 2, vec![1, 2]),
        ];
        for (spec, levi, p, r, mu) in cases {
            let q = query(spec, &levi, p, r, mu);
            assert_eq!(enumerate_summands(&q), enumerate_by_filter(&q));
        }
    }

    #[test]
    fn multiplicity_of_trivial_examples() {
        // F-splitness: mu = 0 gives 1 on any parabolic.
        let q = query("B2", &[0], 3, 1, vec![0, 0]);
        assert!(multiplicity_of_trivial(&q).unwrap().is_one());
        // F_* O_{P^1}(3) at p = 5: 4 trivial summands.
        let q = query("A1", &[], 5, 1, vec![3]);
        assert_eq!(multiplicity_of_trivial(&q).unwrap(), BigUint::from(4u32));
        // A2, mu = rho at p = 3.
        let q = query("A2", &[], 3, 1, vec![1, 1]);
        assert_eq!(multiplicity_of_trivial(&q).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn multiplicity_of_trivial_requires_restricted_weight() {
        let q = query("A1", &[], 3, 1, vec![3]);
        let err = multiplicity_of_trivial(&q).unwrap_err();
        assert!(matches!(err, Error::OutsideRestrictedRange { .. }));
        assert!(!err.is_usage());
        let q = query("A1", &[], 3, 1, vec![-1]);
        assert!(multiplicity_of_trivial(&q).is_err());
    }

    #[test]
    fn serre_dual_examples() {
        let q = query("A1", &[], 3, 1, vec![0]);
        assert_eq!(serre_dual_weight(&q), Weight::new(vec![4]));
        let q = query("A2", &[1], 2, 1, vec![1, 0]);
        assert_eq!(serre_dual_weight(&q), Weight::new(vec![2, 0]));
    }

    #[test]
    fn serre_dual_is_an_involution() {
        let q = query("B2", &[1], 3, 2, vec![5, 0]);
        let dual = q.with_mu(serre_dual_weight(&q)).unwrap();
        assert_eq!(&serre_dual_weight(&dual), q.mu());
    }

    #[test]
    fn padic_split_examples() {
        let q = query("A1", &[], 3, 1, vec![7]);
        let (mu0, mu1) = padic_split(&q).unwrap();
        assert_eq!(mu0, Weight::new(vec![1]));
        assert_eq!(mu1, Weight::new(vec![2]));

        // Restricted weights split trivially.
        let q = query("A2", &[], 3, 1, vec![2, 1]);
        let (mu0, mu1) = padic_split(&q).unwrap();
        assert_eq!(mu0, Weight::new(vec![2, 1]));
        assert!(mu1.is_zero());

        let q = query("A2", &[], 2, 2, vec![5, 4]);
        let (mu0, mu1) = padic_split(&q).unwrap();
        assert_eq!(mu0, Weight::new(vec![1, 0]));
        assert_eq!(mu1, Weight::new(vec![1, 1]));

        let q = query("A1", &[], 2, 1, vec![-1]);
        assert!(matches!(
            padic_split(&q).unwrap_err(),
            Error::NotDominant(_)
        ));
    }

    #[test]
    fn stable_summands_of_flag_varieties() {
        // Any G/B: per-coordinate set {0, -1} for every p and r.
        for (spec, p, r) in [("A2", 2u64, 1u32), ("A2", 5, 2), ("B2", 3, 1)] {
            let rs = Arc::new(RootSystemData::parse(spec).unwrap());
            let pd = Arc::new(ParabolicData::new(rs, BTreeSet::new()).unwrap());
            let ch = Characteristic::prime(p).unwrap();
            let finite =
                stable_line_summands_of_structure_sheaf(&pd, ch, StableRange::Finite(r)).unwrap();
            assert_eq!(finite.weights.len(), 4);
            let limit =
                stable_line_summands_of_structure_sheaf(&pd, ch, StableRange::Limit).unwrap();
            assert_eq!(limit.weights, finite.weights);
            assert_eq!(limit.stabilizes_at, Some(1));
        }
    }

    #[test]
    fn stable_summands_of_projective_plane() {
        let rs = Arc::new(RootSystemData::parse("A2").unwrap());
        let pd = Arc::new(ParabolicData::new(rs, [1].into_iter().collect()).unwrap());
        let ch = Characteristic::prime(2).unwrap();
        let finite =
            stable_line_summands_of_structure_sheaf(&pd, ch, StableRange::Finite(1)).unwrap();
        assert_eq!(finite.weights, weights(&[&[0, 0], &[-1, 0]]));
        let limit =
            stable_line_summands_of_structure_sheaf(&pd, ch, StableRange::Limit).unwrap();
        assert_eq!(
            limit.weights,
            weights(&[&[0, 0], &[-1, 0], &[-2, 0]])
        );
        assert_eq!(limit.stabilizes_at, Some(2));
    }

    #[test]
    fn stable_summands_of_a_point() {
        let rs = Arc::new(RootSystemData::parse("A1").unwrap());
        let pd = Arc::new(ParabolicData::new(rs, [0].into_iter().collect()).unwrap());
        let ch = Characteristic::prime(5).unwrap();
        let limit =
            stable_line_summands_of_structure_sheaf(&pd, ch, StableRange::Limit).unwrap();
        assert_eq!(limit.weights, weights(&[&[0]]));
    }

    #[test]
    fn gros_kaneda_values() {
        let a1 = RootSystemData::parse("A1").unwrap();
        let a2 = RootSystemData::parse("A2").unwrap();
        let five = Characteristic::prime(5).unwrap();
        let three = Characteristic::prime(3).unwrap();
        let two = Characteristic::prime(2).unwrap();
        assert_eq!(
            gros_kaneda_multiplicity(&a1, five, 1).unwrap(),
            BigUint::from(4u32)
        );
        assert!(gros_kaneda_multiplicity(&a2, two, 1).unwrap().is_one());
        assert_eq!(
            gros_kaneda_multiplicity(&a2, three, 1).unwrap(),
            BigUint::from(8u32)
        );
    }

    #[test]
    fn decompose_projective_line_twist() {
        // F_* O_{P^1}(1) at p = 3 is O^2 + O(-1).
        let q = query("A1", &[], 3, 1, vec![1]);
        let report = decompose(&q).unwrap();
        assert_eq!(report.total_rank, BigUint::from(3u32));
        assert_eq!(report.accounted_rank, BigUint::from(3u32));
        assert_eq!(report.summands.len(), 2);
        assert_eq!(report.summands[0].lambda, Weight::new(vec![-1]));
        assert_eq!(
            report.summands[0].multiplicity,
            Multiplicity::Exact(BigUint::one())
        );
        assert_eq!(report.summands[1].lambda, Weight::new(vec![0]));
        assert_eq!(
            report.summands[1].multiplicity,
            Multiplicity::Exact(BigUint::from(2u32))
        );
    }

    #[test]
    fn decompose_full_flag_structure_sheaf() {
        let q = query("A2", &[], 2, 1, vec![0, 0]);
        let report = decompose(&q).unwrap();
        assert_eq!(report.total_rank, BigUint::from(8u32));
        assert_eq!(report.accounted_rank, BigUint::from(2u32));
        let by_lambda: BTreeMap<Weight, Multiplicity> = report
            .summands
            .iter()
            .map(|s| (s.lambda.clone(), s.multiplicity.clone()))
            .collect();
        assert_eq!(
            by_lambda[&Weight::new(vec![0, 0])],
            Multiplicity::Exact(BigUint::one())
        );
        assert_eq!(
            by_lambda[&Weight::new(vec![-1, -1])],
            Multiplicity::Exact(BigUint::one())
        );
        assert_eq!(by_lambda[&Weight::new(vec![-1, 0])], Multiplicity::Unknown);
        assert_eq!(by_lambda[&Weight::new(vec![0, -1])], Multiplicity::Unknown);
    }

    #[test]
    fn decompose_attaches_the_gros_kaneda_value_to_minus_rho() {
        // On G/B with mu = 0 the dual twist lands on lambda = -rho with
        // multiplicity dim H^0((p^r - 2) rho), the same number
        // gros_kaneda_multiplicity computes directly.
        for (p, r) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
            let q = query("A2", &[], p, r, vec![0, 0]);
            let report = decompose(&q).unwrap();
            let entry = report
                .summands
                .iter()
                .find(|s| s.lambda == Weight::new(vec![-1, -1]))
                .expect("-rho is always a summand of F^r_* O");
            let ch = Characteristic::prime(p).unwrap();
            let expected = gros_kaneda_multiplicity(q.root_system(), ch, r).unwrap();
            assert_eq!(entry.multiplicity, Multiplicity::Exact(expected), "p={p} r={r}");
        }
    }

    #[test]
    fn decompose_point() {
        let q = query("A1", &[0], 5, 2, vec![0]);
        let report = decompose(&q).unwrap();
        assert!(report.total_rank.is_one());
        assert_eq!(report.summands.len(), 1);
        assert_eq!(
            report.summands[0].multiplicity,
            Multiplicity::Exact(BigUint::one())
        );
    }

    #[test]
    fn decompose_non_dominant_reports_unknowns() {
        let q = query("A1", &[], 3, 1, vec![-2]);
        let report = decompose(&q).unwrap();
        assert!(report.accounted_rank.is_zero());
        assert!(report
            .summands
            .iter()
            .all(|s| s.multiplicity == Multiplicity::Unknown));
    }

    #[test]
    fn decompose_andersen_haboush_accounts_everything() {
        // mu = (p^r - 1) rho on G/B: both routes attach to lambda = 0 and agree.
        let q = query("A2", &[], 2, 1, vec![1, 1]);
        let report = decompose(&q).unwrap();
        assert_eq!(report.total_rank, BigUint::from(8u32));
        let trivial = report
            .summands
            .iter()
            .find(|s| s.lambda.is_zero())
            .unwrap();
        assert_eq!(trivial.multiplicity, Multiplicity::Exact(BigUint::from(8u32)));
        assert_eq!(report.accounted_rank, BigUint::from(8u32));
    }
}
