//! Self-verification suites: identity sweeps, oracle cross-checks, and
//! seeded randomized property checks, surfaced through the CLI `verify`
//! command. Random sampling is deterministic for a fixed seed.

use crate::error::Result;
use crate::frobenius::{
    decompose, enumerate_summands, gros_kaneda_multiplicity, is_summand, multiplicity_of_trivial,
    serre_dual_weight, stable_line_summands_of_structure_sheaf, Characteristic, FrobeniusQuery,
    StableRange,
};
use crate::oracle::{choose, decompose_product_of_lines, decompose_projective_space};
use crate::parabolic::ParabolicData;
use crate::rootsys::RootSystemData;
use crate::weight::Weight;
use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::str::FromStr;
use std::sync::Arc;

/// How many failure descriptions to keep per check; the failure count is
/// always exact.
const MAX_RECORDED_FAILURES: usize = 10;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Rank bound for type sweeps.
    pub max_rank: usize,
    /// Dimension bound for the projective-space oracle.
    pub max_n: u32,
    pub primes: Vec<u64>,
    pub max_r: u32,
    /// Sample count for the randomized suites.
    pub samples: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0xF0B5,
            max_rank: 4,
            max_n: 3,
            primes: vec![2, 3, 5],
            max_r: 2,
            samples: 1000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    AndersenHaboush,
    StructureSheaf,
    Oracle,
    Duality,
    Transitivity,
    FSplit,
    Stable,
    GrosKaneda,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::AndersenHaboush => "andersen-haboush",
            Suite::StructureSheaf => "structure-sheaf",
            Suite::Oracle => "oracle",
            Suite::Duality => "duality",
            Suite::Transitivity => "transitivity",
            Suite::FSplit => "f-split",
            Suite::Stable => "stable",
            Suite::GrosKaneda => "gros-kaneda",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Suite::All),
            "andersen-haboush" | "ah" => Ok(Suite::AndersenHaboush),
            "structure-sheaf" => Ok(Suite::StructureSheaf),
            "oracle" => Ok(Suite::Oracle),
            "duality" => Ok(Suite::Duality),
            "transitivity" => Ok(Suite::Transitivity),
            "f-split" => Ok(Suite::FSplit),
            "stable" => Ok(Suite::Stable),
            "gros-kaneda" => Ok(Suite::GrosKaneda),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub checks: u64,
    pub failed: u64,
    /// First few failure descriptions.
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            checks: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(describe());
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> u64 {
        self.outcomes.iter().map(|o| o.checks - o.failed).sum()
    }

    pub fn failed(&self) -> u64 {
        self.outcomes.iter().map(|o| o.failed).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

/// Run one suite (or all of them) and report per-check pass/fail counts.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut outcomes = Vec::new();
    let selected = |s: Suite| suite == Suite::All || suite == s;
    if selected(Suite::AndersenHaboush) {
        outcomes.push(andersen_haboush(opts)?);
    }
    if selected(Suite::StructureSheaf) {
        outcomes.push(structure_sheaf(opts)?);
    }
    if selected(Suite::Oracle) {
        outcomes.push(oracle_projective_spaces(opts)?);
        outcomes.push(oracle_products_of_lines(opts)?);
    }
    if selected(Suite::Duality) {
        outcomes.push(duality(opts)?);
    }
    if selected(Suite::Transitivity) {
        outcomes.push(transitivity(opts)?);
    }
    if selected(Suite::FSplit) {
        outcomes.push(f_split(opts)?);
    }
    if selected(Suite::Stable) {
        outcomes.push(stable_sets(opts)?);
    }
    if selected(Suite::GrosKaneda) {
        outcomes.push(gros_kaneda(opts)?);
    }
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        seed: opts.seed,
        outcomes,
    })
}

/// All irreducible labels of rank at most `max_rank`.
pub fn irreducible_labels(max_rank: usize) -> Vec<String> {
    let mut labels = Vec::new();
    for n in 1..=max_rank {
        labels.push(format!("A{n}"));
    }
    for n in 2..=max_rank {
        labels.push(format!("B{n}"));
        labels.push(format!("C{n}"));
    }
    for n in 3..=max_rank {
        labels.push(format!("D{n}"));
    }
    for n in 6..=max_rank.min(8) {
        labels.push(format!("E{n}"));
    }
    if max_rank >= 4 {
        labels.push("F4".to_string());
    }
    if max_rank >= 2 {
        labels.push("G2".to_string());
    }
    labels
}

fn prime_powers(opts: &VerifyOptions) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for &p in &opts.primes {
        for r in 1..=opts.max_r {
            out.push((p, r));
        }
    }
    out
}

/// weyl_dimension((p^r - 1) rho) = p^{r |R_+|} on every supported type.
fn andersen_haboush(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("andersen-haboush identity");
    for label in irreducible_labels(opts.max_rank) {
        let rs = RootSystemData::parse(&label)?;
        for (p, r) in prime_powers(opts) {
            let q = Characteristic::prime(p)?.power(r)?;
            let mu = Weight::new(vec![q - 1; rs.rank()]);
            let dim = rs.weyl_dimension(&mu)?;
            let expected = BigUint::from(p).pow(r * rs.positive_roots().len() as u32);
            outcome.check(dim == expected, || {
                format!("{label} p={p} r={r}: dim {dim} != p^(r|R+|) {expected}")
            });
        }
    }
    Ok(outcome)
}

/// Summands of F^r_* O on G/B are exactly the 2^n subset sums of negated
/// fundamental weights.
fn structure_sheaf(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("structure-sheaf summands on G/B");
    for label in irreducible_labels(opts.max_rank) {
        let rs = Arc::new(RootSystemData::parse(&label)?);
        let n = rs.rank();
        let pd = Arc::new(ParabolicData::new(Arc::clone(&rs), BTreeSet::new())?);
        let mut expected: Vec<Weight> = (0..(1u32 << n))
            .map(|mask| {
                Weight::new(
                    (0..n)
                        .map(|i| if mask & (1 << i) != 0 { -1 } else { 0 })
                        .collect(),
                )
            })
            .collect();
        expected.sort();
        for (p, r) in prime_powers(opts) {
            let query = FrobeniusQuery::new(
                Arc::clone(&pd),
                Characteristic::prime(p)?,
                r,
                Weight::zero(n),
            )?;
            let got = enumerate_summands(&query);
            outcome.check(got == expected, || {
                format!("{label} p={p} r={r}: summand set differs from the 2^n pattern")
            });
        }
    }
    Ok(outcome)
}

/// P^n as A_n with Levi {alpha_2, ..., alpha_n}.
fn projective_space_parabolic(n: u32) -> Result<Arc<ParabolicData>> {
    let rs = Arc::new(RootSystemData::parse(&format!("A{n}"))?);
    let levi: BTreeSet<usize> = (1..n as usize).collect();
    Ok(Arc::new(ParabolicData::new(rs, levi)?))
}

/// Criterion-based enumeration vs. the Thomsen oracle on P^n.
fn oracle_projective_spaces(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("oracle agreement on projective spaces");
    for n in 1..=opts.max_n {
        let pd = projective_space_parabolic(n)?;
        for (p, r) in prime_powers(opts) {
            let ch = Characteristic::prime(p)?;
            let q = ch.power(r)?;
            for d in 0..=(q - 1) {
                let thomsen = decompose_projective_space(n, ch, r, d)?;
                let mut mu = vec![0i64; n as usize];
                mu[0] = d;
                let query = FrobeniusQuery::new(Arc::clone(&pd), ch, r, Weight::new(mu))?;
                let support: BTreeSet<i64> = enumerate_summands(&query)
                    .iter()
                    .map(|w| w.coords()[0])
                    .collect();
                let oracle_support: BTreeSet<i64> =
                    thomsen.support().map(|e| e[0]).collect();
                outcome.check(support == oracle_support, || {
                    format!("P^{n} p={p} r={r} d={d}: summand support mismatch")
                });

                let trivial = multiplicity_of_trivial(&query)?;
                let m0 = thomsen.multiplicity(&[0]);
                let sections = choose(d + n as i64, n);
                outcome.check(trivial == m0 && m0 == sections, || {
                    format!(
                        "P^{n} p={p} r={r} d={d}: trivial multiplicity {trivial} vs oracle {m0} vs C(d+n,n) {sections}"
                    )
                });

                let expected_total = BigUint::from(p).pow(r * n);
                outcome.check(thomsen.total() == expected_total, || {
                    format!("P^{n} p={p} r={r} d={d}: rank not conserved")
                });
            }
        }
    }
    Ok(outcome)
}

/// Criterion-based enumeration vs. the product oracle on (P^1)^n.
fn oracle_products_of_lines(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("oracle agreement on products of lines");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e3779b97f4a7c15);
    for n in 1..=opts.max_n {
        let rs = Arc::new(RootSystemData::parse(
            &vec!["A1"; n as usize].join("x"),
        )?);
        let pd = Arc::new(ParabolicData::new(rs, BTreeSet::new())?);
        for (p, r) in prime_powers(opts) {
            let ch = Characteristic::prime(p)?;
            let q = ch.power(r)?;
            // Exhaustive over restricted degrees for n <= 2, sampled beyond.
            let degree_vectors: Vec<Vec<i64>> = if n <= 2 {
                let mut all = vec![Vec::new()];
                for _ in 0..n {
                    all = all
                        .into_iter()
                        .flat_map(|prefix: Vec<i64>| {
                            (0..q).map(move |d| {
                                let mut next = prefix.clone();
                                next.push(d);
                                next
                            })
                        })
                        .collect();
                }
                all
            } else {
                (0..16)
                    .map(|_| (0..n).map(|_| rng.gen_range(-q..2 * q)).collect())
                    .collect()
            };
            for d in degree_vectors {
                let product = decompose_product_of_lines(n, ch, r, &d)?;
                let query =
                    FrobeniusQuery::new(Arc::clone(&pd), ch, r, Weight::new(d.clone()))?;
                let support: BTreeSet<Vec<i64>> = enumerate_summands(&query)
                    .iter()
                    .map(|w| w.coords().to_vec())
                    .collect();
                let oracle_support: BTreeSet<Vec<i64>> =
                    product.support().cloned().collect();
                outcome.check(support == oracle_support, || {
                    format!("(P^1)^{n} p={p} r={r} d={d:?}: support mismatch")
                });
                let expected_total = BigUint::from(p).pow(r * n);
                outcome.check(product.total() == expected_total, || {
                    format!("(P^1)^{n} p={p} r={r} d={d:?}: rank not conserved")
                });
                if d.iter().all(|&c| (0..q).contains(&c)) {
                    let trivial = multiplicity_of_trivial(&query)?;
                    let m0 = product.multiplicity(&vec![0; n as usize]);
                    outcome.check(trivial == m0, || {
                        format!(
                            "(P^1)^{n} p={p} r={r} d={d:?}: trivial multiplicity mismatch"
                        )
                    });
                }
            }
        }
    }
    Ok(outcome)
}

/// Sampler over small types, random parabolics, and random X(P) weights.
struct QuerySampler {
    systems: Vec<Arc<RootSystemData>>,
    primes: Vec<u64>,
    max_r: u32,
}

impl QuerySampler {
    fn new(opts: &VerifyOptions) -> Result<Self> {
        let systems = ["A1", "A2", "A3", "B2"]
            .iter()
            .map(|s| RootSystemData::parse(s).map(Arc::new))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuerySampler {
            systems,
            primes: opts.primes.clone(),
            max_r: opts.max_r,
        })
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Result<FrobeniusQuery> {
        let rs = self.systems.choose(rng).unwrap();
        let n = rs.rank();
        let levi: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let pd = Arc::new(ParabolicData::new(Arc::clone(rs), levi)?);
        let p = *self.primes.choose(rng).unwrap();
        let r = rng.gen_range(1..=self.max_r);
        let ch = Characteristic::prime(p)?;
        let q = ch.power(r)?;
        let mu = self.sample_weight(rng, &pd, q);
        FrobeniusQuery::new(pd, ch, r, mu)
    }

    fn sample_weight(&self, rng: &mut ChaCha8Rng, pd: &ParabolicData, q: i64) -> Weight {
        let coords = (0..pd.root_system().rank())
            .map(|i| {
                if pd.levi().contains(&i) {
                    0
                } else {
                    let spread = 2 * (q - 1) * pd.two_rho_p().coords()[i];
                    rng.gen_range(-spread..=spread)
                }
            })
            .collect();
        Weight::new(coords)
    }
}

fn describe(query: &FrobeniusQuery) -> String {
    format!(
        "type={} levi={:?} p={} r={} mu={}",
        query.root_system().type_string(),
        query
            .parabolic()
            .levi()
            .iter()
            .map(|&i| i + 1)
            .collect::<Vec<_>>(),
        query.p(),
        query.r(),
        query.mu()
    )
}

/// Negated summand set of the dual weight equals the original summand set.
fn duality(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("duality symmetry");
    let sampler = QuerySampler::new(opts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xd0a1);
    for _ in 0..opts.samples {
        let query = sampler.sample(&mut rng)?;
        let dual = query.with_mu(serre_dual_weight(&query))?;
        let mut negated: Vec<Weight> =
            enumerate_summands(&query).iter().map(|w| -w).collect();
        negated.sort();
        let ok = negated == enumerate_summands(&dual);
        outcome.check(ok, || format!("{}: dual summand set differs", describe(&query)));
    }
    Ok(outcome)
}

/// lambda in S_r(mu) and nu in S_s(lambda) imply nu in S_{r+s}(mu).
fn transitivity(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("transitivity under Frobenius composition");
    let sampler = QuerySampler::new(opts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x7a25);
    for _ in 0..opts.samples {
        let query = sampler.sample(&mut rng)?;
        let lambda = enumerate_summands(&query)
            .choose(&mut rng)
            .cloned()
            .expect("summand set is never empty");
        let s = rng.gen_range(1..=opts.max_r);
        let ch = Characteristic::prime(query.p())?;
        let inner = FrobeniusQuery::new(
            Arc::clone(query.parabolic()),
            ch,
            s,
            lambda.clone(),
        )?;
        let nu = enumerate_summands(&inner)
            .choose(&mut rng)
            .cloned()
            .expect("summand set is never empty");
        let composed = FrobeniusQuery::new(
            Arc::clone(query.parabolic()),
            ch,
            query.r() + s,
            query.mu().clone(),
        )?;
        let ok = is_summand(&composed, &nu)?;
        outcome.check(ok, || {
            format!(
                "{} lambda={lambda} s={s} nu={nu}: composition not a summand",
                describe(&query)
            )
        });
    }
    Ok(outcome)
}

/// O is a summand of F^r_* O for every parabolic in every supported type.
fn f_split(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("F-splitness across all parabolics");
    for label in irreducible_labels(opts.max_rank) {
        let rs = Arc::new(RootSystemData::parse(&label)?);
        let n = rs.rank();
        for mask in 0..(1u32 << n) {
            let levi: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let pd = Arc::new(ParabolicData::new(Arc::clone(&rs), levi)?);
            for (p, r) in prime_powers(opts) {
                let query = FrobeniusQuery::new(
                    Arc::clone(&pd),
                    Characteristic::prime(p)?,
                    r,
                    Weight::zero(n),
                )?;
                let ok = enumerate_summands(&query).contains(&Weight::zero(n));
                outcome.check(ok, || {
                    format!("{label} levi mask {mask:#b} p={p} r={r}: 0 missing")
                });
            }
        }
    }
    Ok(outcome)
}

/// Frozen stable-set cases plus the 2^n limit count on full flags.
fn stable_sets(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("stable summand sets");
    let a2 = Arc::new(RootSystemData::parse("A2")?);
    let p2 = Arc::new(ParabolicData::new(Arc::clone(&a2), [1].into_iter().collect())?);
    let two = Characteristic::prime(2)?;
    let finite = stable_line_summands_of_structure_sheaf(&p2, two, StableRange::Finite(1))?;
    outcome.check(
        finite.weights == vec![Weight::new(vec![-1, 0]), Weight::new(vec![0, 0])],
        || "P^2 p=2 r=1: expected {0, -w1}".to_string(),
    );
    let limit = stable_line_summands_of_structure_sheaf(&p2, two, StableRange::Limit)?;
    outcome.check(
        limit.weights
            == vec![
                Weight::new(vec![-2, 0]),
                Weight::new(vec![-1, 0]),
                Weight::new(vec![0, 0]),
            ]
            && limit.stabilizes_at == Some(2),
        || "P^2 p=2 limit: expected {0, -w1, -2w1} at r*=2".to_string(),
    );
    for label in irreducible_labels(opts.max_rank) {
        let rs = Arc::new(RootSystemData::parse(&label)?);
        let n = rs.rank();
        let pd = Arc::new(ParabolicData::new(rs, BTreeSet::new())?);
        for &p in &opts.primes {
            let limit = stable_line_summands_of_structure_sheaf(
                &pd,
                Characteristic::prime(p)?,
                StableRange::Limit,
            )?;
            outcome.check(limit.weights.len() == 1 << n, || {
                format!("{label} p={p}: limit set is not 2^n")
            });
        }
    }
    Ok(outcome)
}

/// Frozen Gros-Kaneda values with independent cross-checks.
fn gros_kaneda(opts: &VerifyOptions) -> Result<CheckOutcome> {
    let _ = opts;
    let mut outcome = CheckOutcome::new("gros-kaneda multiplicity");
    let a1 = RootSystemData::parse("A1")?;
    let a2 = RootSystemData::parse("A2")?;
    let cases: [(&RootSystemData, u64, u32, u64); 3] =
        [(&a1, 5, 1, 4), (&a2, 2, 1, 1), (&a2, 3, 1, 8)];
    for (rs, p, r, expected) in cases {
        let ch = Characteristic::prime(p)?;
        let got = gros_kaneda_multiplicity(rs, ch, r)?;
        outcome.check(got == BigUint::from(expected), || {
            format!("{} p={p} r={r}: got {got}, expected {expected}", rs.type_string())
        });
    }
    // A1 cross-check: L(-rho) = O(-1) on P^1, so the value must match the
    // Thomsen multiplicity of O(-1) in F_* O.
    let ch5 = Characteristic::prime(5)?;
    let thomsen = decompose_projective_space(1, ch5, 1, 0)?;
    let direct = gros_kaneda_multiplicity(&a1, ch5, 1)?;
    outcome.check(thomsen.multiplicity(&[-1]) == direct, || {
        "A1 p=5: disagrees with the P^1 oracle".to_string()
    });
    // A2 cross-check against the closed form (a+1)(b+1)(a+b+2)/2 at a = b = p^r - 2.
    for (p, r) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
        let ch = Characteristic::prime(p)?;
        let q = ch.power(r)?;
        let a = (q - 2) as u64;
        let closed = (a + 1) * (a + 1) * (2 * a + 2) / 2;
        let got = gros_kaneda_multiplicity(&a2, ch, r)?;
        outcome.check(got == BigUint::from(closed), || {
            format!("A2 p={p} r={r}: closed form mismatch")
        });
    }
    Ok(outcome)
}

/// Every decomposition invariant that `decompose` itself asserts, exercised
/// on random queries. Used by the test suite; cheap enough to run anywhere.
pub fn spot_check_decompose(seed: u64, samples: u64) -> Result<u64> {
    let opts = VerifyOptions {
        seed,
        ..VerifyOptions::default()
    };
    let sampler = QuerySampler::new(&opts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let query = sampler.sample(&mut rng)?;
        let report = decompose(&query)?;
        assert!(report.accounted_rank <= report.total_rank);
        if query.mu().is_zero() {
            let trivial = report
                .summands
                .iter()
                .find(|s| s.lambda.is_zero())
                .expect("F-splitness");
            assert!(matches!(
                &trivial.multiplicity,
                crate::frobenius::Multiplicity::Exact(m) if m.is_one()
            ));
        }
    }
    Ok(samples)
}
