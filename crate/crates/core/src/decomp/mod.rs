//! The theorem engines.
//!
//! Each family of semismall maps — Hilbert–Chow, nested Hilbert–Chow,
//! parabolic Hilbert–Chow, and the symmetrized resolutions of surfaces with
//! quotient singularities — gets an enumerator that walks the strata of the
//! target and emits one [`StratumRecord`] per stratum: its dimension, the
//! fiber dimension over it, the codimension, the Tate twist of the summand it
//! contributes, whether it is relevant (2·fiber = codim), and the summand
//! itself as a [`MotiveTerm`]. The relevant records add up to the motivic
//! decomposition of the source.
//!
//! Alongside the enumerators live the closed-form generating functions (the
//! Göttsche product and its parabolic refinement, in Poincaré, Hodge and
//! Euler gradings, plus the motive-level products) and the semismallness
//! validators; everything cross-checks against everything.

mod hilbert;
mod nested;
mod parabolic;
mod report;
mod strata;
mod wreath;

use std::fmt;

use crate::combinatorics::{CurveLabeledPartition, ParabolicChi, Partition};
use crate::error::Result;
use crate::hodge::Atom;
use crate::motive::{realize_euler, realize_hodge, realize_poincare, MotiveSum, MotiveTerm};
use crate::poly::{GradedPoly, PolyVars};
use crate::rational::Rational;

pub use hilbert::{
    decompose_hilbert, goettsche_motive_series, goettsche_series, goettsche_series_from_betti,
};
pub use nested::decompose_nested;
pub use parabolic::{
    decompose_parabolic, parabolic_motive_series, parabolic_series, parabolic_stratum_stats,
};
pub use report::{
    decomposition_to_json, realization_to_json, record_to_json, records_to_csv, summands_to_json,
};
pub use strata::{
    check_semismall, fibre_product_dim_bound, hilbert_map_descriptor, nested_map_descriptor,
    MapDescriptor, Verdict,
};
pub use wreath::{
    decompose_wreath, literal_monomial_count, supesymm_strata, wreath_class_count,
};

/// Which realization functor to apply to a decomposition or to build a
/// generating function in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizationMode {
    Poincare,
    Hodge,
    Euler,
}

impl RealizationMode {
    /// The polynomial-variable mode the realization lives in.
    pub fn poly_vars(self) -> PolyVars {
        match self {
            RealizationMode::Poincare | RealizationMode::Euler => PolyVars::Z,
            RealizationMode::Hodge => PolyVars::XY,
        }
    }
}

impl fmt::Display for RealizationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizationMode::Poincare => write!(f, "poincare"),
            RealizationMode::Hodge => write!(f, "hodge"),
            RealizationMode::Euler => write!(f, "euler"),
        }
    }
}

/// Realize a motive sum in the chosen mode; the Euler characteristic comes
/// back as a constant polynomial so all three modes compare uniformly against
/// series coefficients.
pub fn realize_in_mode(sum: &MotiveSum, mode: RealizationMode) -> Result<GradedPoly> {
    match mode {
        RealizationMode::Poincare => realize_poincare(sum),
        RealizationMode::Hodge => realize_hodge(sum),
        RealizationMode::Euler => Ok(GradedPoly::constant(Rational::from_integer(
            realize_euler(sum),
        ))),
    }
}

/// The combinatorial address of one stratum, per family of maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StratumIndex {
    /// Symmetric-product stratum of cycle type ν.
    Hilbert { nu: Partition },
    /// Nested stratum: cycle type a plus the multiplicity j ≥ 1 the marked
    /// point lands on (j = 0 for a free marked point).
    Nested { a: Partition, j: u32 },
    /// Parabolic stratum: a support function over the index lattice.
    Parabolic { chi: ParabolicChi },
    /// Stratum of a symmetrized surface resolution: weight i carried by ν
    /// distinct smooth points, the rest distributed over the special points
    /// with one component label per special point.
    Surface {
        i: u32,
        nu: Partition,
        labels: Vec<CurveLabeledPartition>,
    },
}

impl fmt::Display for StratumIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StratumIndex::Hilbert { nu } => write!(f, "nu={nu}"),
            StratumIndex::Nested { a, j } => write!(f, "a={a} j={j}"),
            StratumIndex::Parabolic { chi } => write!(f, "chi={chi}"),
            StratumIndex::Surface { i, nu, labels } => {
                let ls: Vec<String> = labels.iter().map(|c| c.to_string()).collect();
                write!(f, "i={i} nu={nu} labels=[{}]", ls.join(";"))
            }
        }
    }
}

/// Everything known about one stratum of a semismall map: dimensions, the
/// twist of the summand it contributes, and the summand itself.
#[derive(Clone, Debug)]
pub struct StratumRecord {
    pub index: StratumIndex,
    pub stratum_dim: usize,
    pub fiber_dim: usize,
    pub codim: usize,
    pub twist: u32,
    pub relevant: bool,
    pub cover: MotiveTerm,
}

/// A full decomposition: the stratum table plus the motive sum contributed by
/// the relevant strata.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub ambient_dim: usize,
    pub records: Vec<StratumRecord>,
    pub sum: MotiveSum,
}

impl Decomposition {
    pub(crate) fn from_records(ambient_dim: usize, records: Vec<StratumRecord>) -> Self {
        let mut sum = MotiveSum::zero();
        for record in &records {
            if record.relevant {
                sum.insert(record.cover.clone(), 1);
            }
        }
        Decomposition {
            ambient_dim,
            records,
            sum,
        }
    }

    pub fn relevant_count(&self) -> usize {
        self.records.iter().filter(|r| r.relevant).count()
    }
}

/// Factor list of the ν-symmetrized product X^{(ν)} = Π_i X^{(a_i)} in
/// exponent form; the empty partition gives the empty product.
pub(crate) fn symmetrized_factors(atom: &Atom, nu: &Partition) -> Vec<(Atom, u32)> {
    nu.exponents()
        .iter()
        .filter(|&&a| a > 0)
        .map(|&a| (atom.clone(), a))
        .collect()
}
