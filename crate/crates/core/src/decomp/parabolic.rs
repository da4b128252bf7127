//! The parabolic Hilbert scheme: n free points on a surface X together with
//! length-l_α filtration quotients along h fixed disjoint divisors D_α.
//!
//! Strata of the parabolic Hilbert–Chow map are support functions χ over the
//! index lattice with Φ(χ) = (n, l_1, …, l_h). Over χ the fiber has dimension
//! d = n − Σ_{v_*=0} χ(v) and the stratum codimension is
//! c = 2d + Σ_α l_α − Σ_{v_*≠0} χ(v); the stratum is relevant exactly when
//! the support of χ lies in the relevance cone, which is also exactly when
//! c = 2d. A relevant χ contributes
//! [Π_{v_*=0} X^{(χ(v))} × Π_{v_*≠0} D^{(χ(v))}](d).

use crate::combinatorics::{parabolic_chis, ParabolicChi};
use crate::decomp::{Decomposition, RealizationMode, StratumIndex, StratumRecord};
use crate::error::{Error, Result};
use crate::hodge::Atom;
use crate::motive::{MotiveSeries, MotiveSum, MotiveTerm};
use crate::poly::GradedPoly;
use crate::rational::rat;
use crate::series::{euler_factor, product, TruncatedSeries};

/// Dimension and summand bookkeeping for a single support function, which
/// must lie over (n, l_1, …, l_h).
pub fn parabolic_stratum_stats(
    chi: &ParabolicChi,
    n: u32,
    l: &[u32],
    x: &Atom,
    d: &Atom,
) -> Result<StratumRecord> {
    let mut target = Vec::with_capacity(1 + l.len());
    target.push(n);
    target.extend_from_slice(l);
    if chi.arity() != target.len() || chi.phi() != target {
        return Err(Error::Domain(format!(
            "support function {chi} does not lie over (n; l) = ({n}; {l:?})"
        )));
    }
    let sum_l: u32 = l.iter().sum();
    let ambient = (2 * n + sum_l) as usize;
    let fiber_dim = (n - chi.point_weight()) as usize;
    let codim = 2 * fiber_dim + (sum_l - chi.divisor_factor_count()) as usize;
    let twist = n - chi.point_weight();
    let factors = chi
        .entries()
        .iter()
        .map(|(v, m)| {
            let atom = if v.is_point_type() { x } else { d };
            (atom.clone(), *m)
        })
        .collect();
    Ok(StratumRecord {
        index: StratumIndex::Parabolic { chi: chi.clone() },
        stratum_dim: ambient - codim,
        fiber_dim,
        codim,
        twist,
        relevant: chi.is_relevant(),
        cover: MotiveTerm::new(factors, twist),
    })
}

/// Decomposition of the parabolic Hilbert scheme of type (n; l_1, …, l_h);
/// records cover every stratum (ordered by fiber dimension, then
/// codimension, matching the dense stratum first), the motive sum only the
/// relevant ones.
pub fn decompose_parabolic(n: u32, l: &[u32], x: &Atom, d: &Atom) -> Result<Decomposition> {
    if l.is_empty() {
        return Err(Error::Domain(
            "parabolic type needs h >= 1 divisors; use the plain Hilbert scheme for h = 0"
                .to_string(),
        ));
    }
    let sum_l: u32 = l.iter().sum();
    let ambient = (2 * n + sum_l) as usize;
    let mut records: Vec<StratumRecord> = parabolic_chis(n, l)
        .iter()
        .map(|chi| parabolic_stratum_stats(chi, n, l, x, d))
        .collect::<Result<_>>()?;
    records.sort_by_key(|r| (r.fiber_dim, r.codim));
    Ok(Decomposition::from_records(ambient, records))
}

/// The closed-form parabolic generating function in variables
/// (t, s_1, …, s_h): the Göttsche factor for X times, for each divisor, the
/// factor Π_{m≥0} (1 + z^{2m+1} t^m s_α)^{b_1(D)} /
/// [(1 − z^{2m} t^m s_α)^{b_0(D)} (1 − z^{2m+2} t^m s_α)^{b_2(D)}] — and its
/// Hodge and Euler counterparts.
pub fn parabolic_series(
    x: &Atom,
    d: &Atom,
    t_bound: u32,
    s_bounds: &[u32],
    mode: RealizationMode,
) -> Result<TruncatedSeries> {
    if s_bounds.is_empty() {
        return Err(Error::Domain(
            "parabolic series needs h >= 1 divisor variables".to_string(),
        ));
    }
    if mode != RealizationMode::Euler {
        for atom in [x, d] {
            if !atom.is_proper() {
                return Err(Error::RankOnly {
                    atom: atom.name().to_string(),
                });
            }
        }
    }
    let mut bounds = Vec::with_capacity(1 + s_bounds.len());
    bounds.push(t_bound);
    bounds.extend_from_slice(s_bounds);
    let h = s_bounds.len();

    let mut factors = Vec::new();
    let mut push = |exps: &[u32], coeff: GradedPoly, exponent: i64| -> Result<()> {
        factors.push(euler_factor(&bounds, exps, &coeff, exponent)?);
        Ok(())
    };

    // X part: one factor family per m ≥ 1, weight shift 2(m−1).
    for m in 1..=t_bound {
        let mut exps = vec![0u32; 1 + h];
        exps[0] = m;
        match mode {
            RealizationMode::Poincare => {
                for (i, &b) in x.betti_vector().iter().enumerate() {
                    if b == 0 {
                        continue;
                    }
                    let w = 2 * (m - 1) + i as u32;
                    if i % 2 == 0 {
                        push(&exps, GradedPoly::z_monomial(w, rat(-1)), -(b as i64))?;
                    } else {
                        push(&exps, GradedPoly::z_monomial(w, rat(1)), b as i64)?;
                    }
                }
            }
            RealizationMode::Hodge => {
                for p in 0..=x.dim() {
                    for q in 0..=x.dim() {
                        let hpq = x.hodge_number(p, q) as i64;
                        if hpq == 0 {
                            continue;
                        }
                        let eps: i64 = if (p + q) % 2 == 0 { -1 } else { 1 };
                        let coeff =
                            GradedPoly::xy_monomial(p as u32 + m - 1, q as u32 + m - 1, rat(eps));
                        push(&exps, coeff, eps * hpq)?;
                    }
                }
            }
            RealizationMode::Euler => {
                push(&exps, GradedPoly::constant(rat(-1)), -x.euler())?;
            }
        }
    }

    // Divisor part: per divisor α and m ≥ 0, weight shift 2m, degree t^m s_α.
    for alpha in 0..h {
        for m in 0..=t_bound {
            let mut exps = vec![0u32; 1 + h];
            exps[0] = m;
            exps[1 + alpha] = 1;
            match mode {
                RealizationMode::Poincare => {
                    for (i, &b) in d.betti_vector().iter().enumerate() {
                        if b == 0 {
                            continue;
                        }
                        let w = 2 * m + i as u32;
                        if i % 2 == 0 {
                            push(&exps, GradedPoly::z_monomial(w, rat(-1)), -(b as i64))?;
                        } else {
                            push(&exps, GradedPoly::z_monomial(w, rat(1)), b as i64)?;
                        }
                    }
                }
                RealizationMode::Hodge => {
                    for p in 0..=d.dim() {
                        for q in 0..=d.dim() {
                            let hpq = d.hodge_number(p, q) as i64;
                            if hpq == 0 {
                                continue;
                            }
                            let eps: i64 = if (p + q) % 2 == 0 { -1 } else { 1 };
                            let coeff =
                                GradedPoly::xy_monomial(p as u32 + m, q as u32 + m, rat(eps));
                            push(&exps, coeff, eps * hpq)?;
                        }
                    }
                }
                RealizationMode::Euler => {
                    push(&exps, GradedPoly::constant(rat(-1)), -d.euler())?;
                }
            }
        }
    }

    product(&bounds, factors)
}

/// The motive-level parabolic product
/// Π_{i≥1} (Σ_m [X^{(m)}]((i−1)m) t^{im}) ×
/// Π_α Π_{i≥0} (Σ_m [D^{(m)}](im) t^{im} s_α^m); its coefficient at
/// t^n Π s_α^{l_α} equals decompose_parabolic(n, l) as an exact motive sum.
pub fn parabolic_motive_series(
    x: &Atom,
    d: &Atom,
    t_bound: u32,
    s_bounds: &[u32],
) -> Result<MotiveSeries> {
    if s_bounds.is_empty() {
        return Err(Error::Domain(
            "parabolic series needs h >= 1 divisor variables".to_string(),
        ));
    }
    let mut bounds = Vec::with_capacity(1 + s_bounds.len());
    bounds.push(t_bound);
    bounds.extend_from_slice(s_bounds);
    let h = s_bounds.len();

    let mut factors = Vec::new();
    for i in 1..=t_bound {
        let mut factor = MotiveSeries::zero(&bounds);
        let mut m = 0;
        while i * m <= t_bound {
            let exps = {
                let mut e = vec![0u32; 1 + h];
                e[0] = i * m;
                e
            };
            let term = MotiveTerm::new(vec![(x.clone(), m)], (i - 1) * m);
            factor = factor
                .add(&MotiveSeries::monomial(&bounds, &exps, MotiveSum::from_term(term))?)?;
            m += 1;
        }
        factors.push(factor);
    }
    for alpha in 0..h {
        for i in 0..=t_bound {
            let mut factor = MotiveSeries::zero(&bounds);
            let mut m = 0;
            while i * m <= t_bound && m <= s_bounds[alpha] {
                let mut exps = vec![0u32; 1 + h];
                exps[0] = i * m;
                exps[1 + alpha] = m;
                let term = MotiveTerm::new(vec![(d.clone(), m)], i * m);
                factor = factor
                    .add(&MotiveSeries::monomial(&bounds, &exps, MotiveSum::from_term(term))?)?;
                m += 1;
            }
            factors.push(factor);
        }
    }
    product(&bounds, factors)
}
