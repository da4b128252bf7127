//! Symmetrized resolutions: Hilbert schemes of a resolved surface over the
//! symmetric product of the singular one.
//!
//! For a resolution X → Y whose special points y_1, …, y_N carry exceptional
//! curve configurations H_k, the induced map X^[n] → Y^(n) stratifies by
//! (i, ν, m̄): weight i spread over l(ν) distinct smooth points with cycle
//! type ν ∈ P(i), the remaining n − i distributed over the special points by
//! m̄ ∈ Q_N(n−i). Every stratum is relevant with fiber dimension n − l(ν),
//! and over it the top-dimensional fiber components are counted by one
//! labeled partition per special point — a partition of m_k whose parts each
//! carry one of the curves of H_k. The labeled count has generating function
//! Π_m (1 − t^m)^{−|H_k|}; a plain degree-m_k monomial in H_k undercounts as
//! soon as one curve absorbs multiplicity ≥ 2.
//!
//! For the wreath quotient C^{2n}/(G ≀ S_n) with G of ADE rank r, the strata
//! summands are contractible affine quotients C^{2l(ν)}/Π G_{a_j}, the record
//! count equals the number of conjugacy classes of G ≀ S_n, and only
//! rank/Euler realizations are certified (the atoms are open).

use num::bigint::BigInt;

use crate::combinatorics::{
    compositions, curve_labeled_partitions, partitions, CurveLabeledPartition,
};
use crate::decomp::{symmetrized_factors, Decomposition, StratumIndex, StratumRecord};
use crate::hodge::{Atom, HodgeDatum};
use crate::motive::MotiveTerm;
use crate::poly::GradedPoly;
use crate::rational::{binomial, rat};
use crate::series::{euler_factor, product};

/// Stratum records of X^[n] → Y^(n) for a resolution with the given
/// exceptional-curve label sets over its special points; the summand over
/// (i, ν, labels) is X^{(ν)} twisted by n − l(ν). With no special points this
/// is exactly the Hilbert–Chow stratification.
pub fn supesymm_strata(x: &Atom, special_points: &[Vec<String>], n: u32) -> Vec<StratumRecord> {
    let ambient = 2 * n as usize;
    let mut records = Vec::new();
    for i in 0..=n {
        for nu in partitions(i) {
            let l = nu.len();
            let twist = n - l;
            let cover = MotiveTerm::new(symmetrized_factors(x, &nu), twist);
            for mbar in compositions(special_points.len(), n - i) {
                let per_point: Vec<Vec<CurveLabeledPartition>> = special_points
                    .iter()
                    .zip(mbar.entries())
                    .map(|(curves, &mk)| curve_labeled_partitions(curves, mk))
                    .collect();
                for labels in cartesian(&per_point) {
                    records.push(StratumRecord {
                        index: StratumIndex::Surface {
                            i,
                            nu: nu.clone(),
                            labels,
                        },
                        stratum_dim: 2 * l as usize,
                        fiber_dim: (n - l) as usize,
                        codim: ambient - 2 * l as usize,
                        twist,
                        relevant: true,
                        cover: cover.clone(),
                    });
                }
            }
        }
    }
    records
}

/// Decomposition of the n-point Hilbert scheme of the minimal resolution of
/// C²/G over C^{2n}/(G ≀ S_n), where G has r nontrivial conjugacy classes
/// matched to r exceptional curves. Summands are affine quotients, so the
/// decomposition carries rank and Euler data only.
pub fn decompose_wreath(r: usize, n: u32) -> Decomposition {
    let curves: Vec<String> = (1..=r).map(|k| format!("E{k}")).collect();
    let ambient = 2 * n as usize;
    let mut records = Vec::new();
    for i in 0..=n {
        for nu in partitions(i) {
            let l = nu.len();
            let atom = HodgeDatum::affine_quotient(l as usize);
            let twist = n - l;
            for clp in curve_labeled_partitions(&curves, n - i) {
                records.push(StratumRecord {
                    index: StratumIndex::Surface {
                        i,
                        nu: nu.clone(),
                        labels: vec![clp],
                    },
                    stratum_dim: 2 * l as usize,
                    fiber_dim: (n - l) as usize,
                    codim: ambient - 2 * l as usize,
                    twist,
                    relevant: true,
                    cover: MotiveTerm::new(vec![(atom.clone(), 1)], twist),
                });
            }
        }
    }
    Decomposition::from_records(ambient, records)
}

/// Number of conjugacy classes of G ≀ S_n for |G_*| = r + 1, computed
/// independently of any stratum enumeration as the t^n coefficient of
/// Π_{m≥1} (1 − t^m)^{−(r+1)}.
pub fn wreath_class_count(r: usize, n: u32) -> BigInt {
    let bounds = [n];
    let mut factors = Vec::new();
    for m in 1..=n {
        factors.push(
            euler_factor(&bounds, &[m], &GradedPoly::constant(rat(-1)), -(r as i64 + 1))
                .expect("t-degree m >= 1"),
        );
    }
    let series = product(&bounds, factors).expect("uniform bounds");
    let c = series.coefficient(&[n]).expect("within bounds");
    c.coeff((0, 0)).to_integer()
}

/// How many strata labels a plain monomial reading would produce:
/// Σ_i p(i) · #{degree-(n−i) monomials in r variables}. Documented for
/// comparison only; it undercounts the fiber components (4 vs. 5 already for
/// r = 1, n = 2).
pub fn literal_monomial_count(r: usize, n: u32) -> BigInt {
    let mut total = BigInt::from(0);
    for i in 0..=n {
        let d = n - i;
        let monomials = if r == 0 {
            BigInt::from(u32::from(d == 0))
        } else {
            binomial(&BigInt::from(d as i64 + r as i64 - 1), d)
        };
        total += BigInt::from(partitions(i).len()) * monomials;
    }
    total
}

fn cartesian(choices: &[Vec<CurveLabeledPartition>]) -> Vec<Vec<CurveLabeledPartition>> {
    let mut acc: Vec<Vec<CurveLabeledPartition>> = vec![Vec::new()];
    for options in choices {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for option in options {
                let mut row = prefix.clone();
                row.push(option.clone());
                next.push(row);
            }
        }
        acc = next;
    }
    acc
}
