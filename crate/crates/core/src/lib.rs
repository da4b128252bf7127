//! Exact symbolic engine for the motivic decomposition of semismall maps
//! attached to surfaces.
//!
//! A semismall map f: X → Y (Hilbert–Chow morphisms, nested and parabolic
//! Hilbert–Chow, wreath-product resolutions) decomposes the motive of X into
//! twisted summands indexed by the relevant strata of Y. This crate builds
//! those decompositions combinatorially — one record per relevant stratum
//! carrying the stratum/fiber dimensions, the Tate twist, and a product of
//! symmetric powers of named building blocks — and realizes them as exact
//! Poincaré, Hodge, or Euler data over arbitrary-precision rationals.
//!
//! The three layers:
//!
//! * formal motives ([`motive`]) over Hodge-diamond atoms ([`hodge`]), with
//!   realization through Macdonald-type symmetric-power products;
//! * theorem engines ([`decomp`]) enumerating the strata of each family of
//!   maps, plus the closed-form generating functions they must reproduce;
//! * the projector algebra ([`correspondence`]) of self-correspondences on a
//!   resolution with a negative-definite exceptional configuration.
//!
//! Everything is exact (no floats), deterministic (stable orderings
//! throughout), and cross-checked: [`selfcheck::run_selfcheck`] replays the
//! decomposition-vs-generating-function identities end to end.

pub mod combinatorics;
pub mod correspondence;
pub mod decomp;
pub mod error;
pub mod hodge;
pub mod motive;
pub mod poly;
pub mod rational;
pub mod selfcheck;
pub mod series;

pub use combinatorics::{
    compositions, curve_labeled_partitions, parabolic_chis, partitions, Composition,
    CurveLabeledPartition, ParabolicChi, ParabolicIndex, Partition,
};
pub use correspondence::{
    ade_intersection_matrix, check_orthogonality, compose, mumford_projector, AdeKind, Context,
    Correspondence, IntersectionMatrix, RatMatrix,
};
pub use decomp::{
    check_semismall, decompose_hilbert, decompose_nested, decompose_parabolic, decompose_wreath,
    decomposition_to_json, fibre_product_dim_bound, goettsche_motive_series, goettsche_series,
    goettsche_series_from_betti, hilbert_map_descriptor, literal_monomial_count,
    nested_map_descriptor, parabolic_motive_series, parabolic_series, parabolic_stratum_stats,
    realization_to_json, realize_in_mode, record_to_json, records_to_csv, summands_to_json,
    supesymm_strata, wreath_class_count, Decomposition, MapDescriptor, RealizationMode,
    StratumIndex, StratumRecord, Verdict,
};
pub use error::{Error, Result};
pub use hodge::{Atom, HodgeDatum};
pub use motive::{
    realize_euler, realize_hodge, realize_poincare, realize_rank, sym_euler, sym_hodge,
    sym_poincare, MotiveSeries, MotiveSum, MotiveTerm,
};
pub use poly::{GradedPoly, PolyVars};
pub use rational::{binomial, format_rational, parse_rational, rat, rat_frac, Rational};
pub use selfcheck::{run_selfcheck, CheckResult};
pub use series::{euler_factor, product, Coeff, TruncatedSeries};
