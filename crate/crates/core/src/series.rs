//! Truncated multivariate power series with exact coefficients.
//!
//! Series variables are t, s_1, …, s_h in that order; truncation is a
//! per-variable box of exponent bounds, not a total-degree cap, because the
//! parabolic generating functions are naturally boxed in (n, l_1, …, l_h).
//! Arithmetic never reports a coefficient beyond the box: multiplication
//! discards overflowing exponent tuples, which cannot influence any
//! coefficient at or below the box.
//!
//! Coefficients are any [`Coeff`]: graded polynomials for the Poincaré,
//! Hodge, and Euler realizations, or formal motive sums for termwise
//! motive-level identities.

use std::collections::BTreeMap;

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::GradedPoly;
use crate::rational::binomial;

/// Coefficient ring of a truncated series.
pub trait Coeff: Clone + Eq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiply by an integer (binomial coefficients of Euler factors are
    /// always integers, so this is the only scalar action the series needs).
    fn scale_int(&self, k: &BigInt) -> Self;
}

impl Coeff for GradedPoly {
    fn zero() -> Self {
        GradedPoly::zero()
    }
    fn one() -> Self {
        GradedPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        GradedPoly::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        GradedPoly::mul(self, other)
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        GradedPoly::scale_int(self, k)
    }
}

/// Exact power series truncated to a per-variable exponent box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coeff = GradedPoly> {
    bounds: Vec<u32>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(bounds: &[u32]) -> Self {
        TruncatedSeries {
            bounds: bounds.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bounds: &[u32]) -> Self {
        let mut s = TruncatedSeries::zero(bounds);
        s.terms.insert(vec![0; bounds.len()], C::one());
        s
    }

    /// A single term coeff·t^{exps}; silently the zero series when the
    /// exponent tuple lies beyond the box.
    pub fn monomial(bounds: &[u32], exps: &[u32], coeff: C) -> Result<Self> {
        if exps.len() != bounds.len() {
            return Err(Error::VarMismatch {
                left: exps.len(),
                right: bounds.len(),
            });
        }
        let mut s = TruncatedSeries::zero(bounds);
        if !coeff.is_zero() && exps.iter().zip(bounds).all(|(e, b)| e <= b) {
            s.terms.insert(exps.to_vec(), coeff);
        }
        Ok(s)
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn num_vars(&self) -> usize {
        self.bounds.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    /// Stored coefficient at a multidegree inside the box (zero if absent);
    /// a multidegree beyond the box is a range error, never a silent zero.
    pub fn coefficient(&self, exps: &[u32]) -> Result<C> {
        if exps.len() != self.bounds.len() || exps.iter().zip(&self.bounds).any(|(e, b)| e > b) {
            return Err(Error::OutOfBounds {
                requested: exps.to_vec(),
                bounds: self.bounds.clone(),
            });
        }
        Ok(self.terms.get(exps).cloned().unwrap_or_else(C::zero))
    }

    fn common_bounds(&self, other: &Self) -> Result<Vec<u32>> {
        if self.bounds.len() != other.bounds.len() {
            return Err(Error::VarMismatch {
                left: self.bounds.len(),
                right: other.bounds.len(),
            });
        }
        Ok(self
            .bounds
            .iter()
            .zip(&other.bounds)
            .map(|(a, b)| *a.min(b))
            .collect())
    }

    /// Sum, truncated to the componentwise minimum of the two boxes.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let bounds = self.common_bounds(other)?;
        let mut terms: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            if e.iter().zip(&bounds).any(|(x, b)| x > b) {
                continue;
            }
            let entry = terms.entry(e.clone()).or_insert_with(C::zero);
            *entry = entry.add(c);
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries { bounds, terms })
    }

    /// Exact Cauchy product, truncated to the componentwise minimum box.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let bounds = self.common_bounds(other)?;
        let mut terms: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            if ea.iter().zip(&bounds).any(|(x, b)| x > b) {
                continue;
            }
            for (eb, cb) in &other.terms {
                let mut key = Vec::with_capacity(bounds.len());
                let mut inside = true;
                for i in 0..bounds.len() {
                    let e = ea[i] + eb[i];
                    if e > bounds[i] {
                        inside = false;
                        break;
                    }
                    key.push(e);
                }
                if !inside {
                    continue;
                }
                let prod = ca.mul(cb);
                if prod.is_zero() {
                    continue;
                }
                let entry = terms.entry(key).or_insert_with(C::zero);
                *entry = entry.add(&prod);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(TruncatedSeries { bounds, terms })
    }

    /// Whole-series scalar action.
    pub fn map_coeffs<F: Fn(&C) -> C>(&self, f: F) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                terms.insert(e.clone(), v);
            }
        }
        TruncatedSeries {
            bounds: self.bounds.clone(),
            terms,
        }
    }
}

/// Exact truncated expansion of one Euler-product factor (1 + coeff·t^{exps})^exponent.
///
/// The expansion is Σ_k C(exponent, k)·coeff^k·t^{k·exps}, with generalized
/// binomial coefficients, terminating once k·exps leaves the box; negative
/// exponents therefore yield the geometric/binomial series. A monomial of
/// series-degree zero never terminates and is rejected.
pub fn euler_factor<C: Coeff>(
    bounds: &[u32],
    exps: &[u32],
    coeff: &C,
    exponent: i64,
) -> Result<TruncatedSeries<C>> {
    if exps.len() != bounds.len() {
        return Err(Error::VarMismatch {
            left: exps.len(),
            right: bounds.len(),
        });
    }
    if exps.iter().all(|&e| e == 0) {
        return Err(Error::NonTerminating);
    }
    let kmax = exps
        .iter()
        .zip(bounds)
        .filter(|(e, _)| **e > 0)
        .map(|(e, b)| b / e)
        .min()
        .expect("some exponent is positive");
    let e_big = BigInt::from(exponent);
    let mut out = TruncatedSeries::one(bounds);
    let mut coeff_pow = C::one();
    for k in 1..=kmax {
        coeff_pow = coeff_pow.mul(coeff);
        let value = coeff_pow.scale_int(&binomial(&e_big, k));
        if value.is_zero() {
            continue;
        }
        let key: Vec<u32> = exps.iter().map(|e| e * k).collect();
        out.terms.insert(key, value);
    }
    Ok(out)
}

/// Product of a sequence of series over a shared box.
pub fn product<C: Coeff>(bounds: &[u32], factors: impl IntoIterator<Item = TruncatedSeries<C>>) -> Result<TruncatedSeries<C>> {
    let mut acc = TruncatedSeries::one(bounds);
    for f in factors {
        acc = acc.mul(&f)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn t_poly(c: i64) -> GradedPoly {
        GradedPoly::constant(rat(c))
    }

    fn z_pow(d: u32) -> GradedPoly {
        GradedPoly::z_monomial(d, rat(1))
    }

    #[test]
    fn difference_of_squares() {
        let b = [2u32];
        let one_plus_t = TruncatedSeries::one(&b)
            .add(&TruncatedSeries::monomial(&b, &[1], t_poly(1)).unwrap())
            .unwrap();
        let one_minus_t = TruncatedSeries::one(&b)
            .add(&TruncatedSeries::monomial(&b, &[1], t_poly(-1)).unwrap())
            .unwrap();
        let prod = one_plus_t.mul(&one_minus_t).unwrap();
        assert_eq!(prod.coefficient(&[0]).unwrap(), GradedPoly::one());
        assert!(prod.coefficient(&[1]).unwrap().is_zero());
        assert_eq!(prod.coefficient(&[2]).unwrap(), t_poly(-1));
    }

    #[test]
    fn multiplicative_identity() {
        let b = [3u32];
        let mut s = TruncatedSeries::one(&b);
        for m in 1..=3 {
            s = s
                .add(&TruncatedSeries::monomial(&b, &[m], t_poly(1)).unwrap())
                .unwrap();
        }
        let prod = s.mul(&TruncatedSeries::one(&b)).unwrap();
        assert_eq!(prod, s);
    }

    #[test]
    fn binomial_square_with_poly_coeffs() {
        let b = [2u32];
        let f = TruncatedSeries::one(&b)
            .add(&TruncatedSeries::monomial(&b, &[1], z_pow(2)).unwrap())
            .unwrap();
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.coefficient(&[1]).unwrap(), z_pow(2).scale_int(&2.into()));
        assert_eq!(sq.coefficient(&[2]).unwrap(), z_pow(4));
    }

    #[test]
    fn euler_factor_geometric() {
        // (1 - t)^{-1} = 1 + t + t^2 + …
        let s = euler_factor(&[3], &[1], &t_poly(-1), -1).unwrap();
        for k in 0..=3u32 {
            assert_eq!(s.coefficient(&[k]).unwrap(), GradedPoly::one());
        }
        // (1 + t)^{-1} alternates.
        let a = euler_factor(&[3], &[1], &t_poly(1), -1).unwrap();
        assert_eq!(a.coefficient(&[2]).unwrap(), GradedPoly::one());
        assert_eq!(a.coefficient(&[3]).unwrap(), t_poly(-1));
    }

    #[test]
    fn euler_factor_binomial() {
        let s = euler_factor(&[2], &[1], &z_pow(2), 2).unwrap();
        assert_eq!(s.coefficient(&[0]).unwrap(), GradedPoly::one());
        assert_eq!(s.coefficient(&[1]).unwrap(), z_pow(2).scale_int(&2.into()));
        assert_eq!(s.coefficient(&[2]).unwrap(), z_pow(4));
    }

    #[test]
    fn euler_factor_two_variables() {
        // (1 - z^2 t s)^{-1} up to box (2,2).
        let s = euler_factor(&[2, 2], &[1, 1], &z_pow(2).neg(), -1).unwrap();
        assert_eq!(s.coefficient(&[1, 1]).unwrap(), z_pow(2));
        assert_eq!(s.coefficient(&[2, 2]).unwrap(), z_pow(4));
        assert!(s.coefficient(&[1, 0]).unwrap().is_zero());
    }

    #[test]
    fn euler_factor_rejects_constant_monomial() {
        assert!(matches!(
            euler_factor(&[2], &[0], &t_poly(1), -1),
            Err(Error::NonTerminating)
        ));
    }

    #[test]
    fn coefficient_out_of_bounds() {
        let s: TruncatedSeries = TruncatedSeries::one(&[2]);
        assert!(matches!(
            s.coefficient(&[3]),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn mul_var_mismatch() {
        let a: TruncatedSeries = TruncatedSeries::one(&[2]);
        let b: TruncatedSeries = TruncatedSeries::one(&[2, 2]);
        assert!(matches!(a.mul(&b), Err(Error::VarMismatch { .. })));
    }

    #[test]
    fn mixed_bounds_take_componentwise_min() {
        let a: TruncatedSeries = TruncatedSeries::one(&[4]);
        let b = euler_factor(&[2], &[1], &t_poly(1), -1).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.bounds(), &[2]);
        assert!(p.coefficient(&[3]).is_err());
    }
}
