//! Exact arithmetic for rank-one summands of Frobenius pushforwards of line
//! bundles on partial flag varieties G/P.
//!
//! Given a root-system datum, a parabolic subset, a prime p, and a power r,
//! this crate enumerates every line bundle L(lambda) that is a direct
//! summand of F^r_* L(mu), computes the multiplicity of the trivial summand
//! (and of one dual-twisted companion) where the theory pins it down exactly,
//! and cross-checks everything against independent brute-force oracles on
//! projective spaces and products of projective lines.
//!
//! Everything is exact: weights are integer vectors in fundamental-weight
//! coordinates, ranks and multiplicities are arbitrary-precision integers,
//! and no floating point appears anywhere.
//!
//! Quick tour:
//!
//! ```
//! use frobsum::{
//!     decompose, Characteristic, FrobeniusQuery, ParabolicData, RootSystemData, Weight,
//! };
//! use std::sync::Arc;
//!
//! // P^2 as A2 modulo the parabolic with Levi {alpha_2}.
//! let rs = Arc::new(RootSystemData::parse("A2")?);
//! let pd = Arc::new(ParabolicData::new(rs, [1].into_iter().collect())?);
//! let query = FrobeniusQuery::new(pd, Characteristic::prime(2)?, 1, Weight::new(vec![0, 0]))?;
//! let report = decompose(&query)?;
//! // F_* O = O + O(-1)^3, all 4 = 2^2 ranks accounted for.
//! assert_eq!(report.summands.len(), 2);
//! assert_eq!(report.total_rank, report.accounted_rank);
//! # Ok::<(), frobsum::Error>(())
//! ```

mod error;
pub mod frobenius;
pub mod json;
pub mod oracle;
pub mod parabolic;
pub mod rootsys;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use frobenius::{
    decompose, enumerate_summands, gros_kaneda_multiplicity, is_summand, multiplicity_of_trivial,
    padic_split, serre_dual_weight, stable_line_summands_of_structure_sheaf, Characteristic,
    DecompositionReport, FrobeniusQuery, Multiplicity, StableRange, StableSummands, SummandEntry,
};
pub use parabolic::{parse_levi, ParabolicData};
pub use rootsys::{Family, PositiveRoot, RootSystemData};
pub use weight::{parse_weight, Weight};
