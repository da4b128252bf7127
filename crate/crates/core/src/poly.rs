//! Graded polynomials with exact rational coefficients.
//!
//! Two realization gradings occur in the engine: one-variable Poincaré
//! polynomials P(z) = Σ b_i z^i and two-variable Hodge polynomials
//! h(x,y) = Σ h^{p,q} x^p y^q. Both live in [`GradedPoly`], tagged by a
//! variable mode; constants are mode-agnostic, so the zero polynomial
//! unifies with either side of any operation.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::rational::{format_rational, rat, Rational};

/// Which variable set a polynomial is graded by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PolyVars {
    /// One variable z; exponent tuples are (degree, 0).
    Z,
    /// Two variables x, y; exponent tuples are (p, q).
    XY,
}

/// Sparse exact polynomial in the z- or (x,y)-grading.
///
/// Invariants: no stored zero coefficients; `vars` is `None` exactly when the
/// polynomial is constant; Z-mode terms always carry a zero second exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct GradedPoly {
    vars: Option<PolyVars>,
    terms: BTreeMap<(u32, u32), Rational>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly::default()
    }

    pub fn one() -> Self {
        GradedPoly::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        GradedPoly { vars: None, terms }
    }

    /// c·z^d.
    pub fn z_monomial(d: u32, c: Rational) -> Self {
        if d == 0 {
            return GradedPoly::constant(c);
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((d, 0), c);
        }
        GradedPoly {
            vars: if terms.is_empty() { None } else { Some(PolyVars::Z) },
            terms,
        }
    }

    /// c·x^p·y^q.
    pub fn xy_monomial(p: u32, q: u32, c: Rational) -> Self {
        if p == 0 && q == 0 {
            return GradedPoly::constant(c);
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        GradedPoly {
            vars: if terms.is_empty() { None } else { Some(PolyVars::XY) },
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars(&self) -> Option<PolyVars> {
        self.vars
    }

    /// Coefficient at an exponent tuple ((d,0) in Z-mode, (p,q) in XY-mode).
    pub fn coeff(&self, exps: (u32, u32)) -> Rational {
        self.terms.get(&exps).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn unified_vars(&self, other: &GradedPoly) -> Option<PolyVars> {
        match (self.vars, other.vars) {
            (Some(a), Some(b)) => {
                assert_eq!(a, b, "mixed z- and (x,y)-graded polynomials");
                Some(a)
            }
            (Some(a), None) => Some(a),
            (None, v) => v,
        }
    }

    fn normalized(vars: Option<PolyVars>, terms: BTreeMap<(u32, u32), Rational>) -> Self {
        let constant_only = terms.keys().all(|&k| k == (0, 0));
        GradedPoly {
            vars: if constant_only { None } else { vars },
            terms,
        }
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        let vars = self.unified_vars(other);
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let entry = terms.entry(*k).or_insert_with(|| rat(0));
            *entry += v;
        }
        terms.retain(|_, v| !v.is_zero());
        GradedPoly::normalized(vars, terms)
    }

    pub fn neg(&self) -> GradedPoly {
        let terms = self.terms.iter().map(|(k, v)| (*k, -v.clone())).collect();
        GradedPoly { vars: self.vars, terms }
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        let vars = self.unified_vars(other);
        let mut terms: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((a0, a1), ca) in &self.terms {
            for ((b0, b1), cb) in &other.terms {
                let key = (a0 + b0, a1 + b1);
                let prod = ca * cb;
                let entry = terms.entry(key).or_insert_with(|| rat(0));
                *entry += prod;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        GradedPoly::normalized(vars, terms)
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return GradedPoly::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        GradedPoly { vars: self.vars, terms }
    }

    pub fn scale_int(&self, k: &BigInt) -> GradedPoly {
        self.scale(&Rational::from_integer(k.clone()))
    }

    /// Value at z = −1 (Z-mode) or x = y = −1 (XY-mode): the signed sum
    /// Σ (−1)^{total degree}·coeff, i.e. the Euler-characteristic evaluation.
    pub fn eval_signed_unit(&self) -> Rational {
        let mut acc = rat(0);
        for (&(e0, e1), c) in &self.terms {
            if (e0 + e1) % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Value at z = 1 (or x = y = 1): the total-rank evaluation.
    pub fn eval_unit(&self) -> Rational {
        let mut acc = rat(0);
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Substitute x = y = z, turning an (x,y)-graded polynomial into the
    /// z-graded one with coefficients summed along p+q = degree.
    pub fn substitute_diagonal(&self) -> GradedPoly {
        let mut out = GradedPoly::zero();
        for (&(p, q), c) in &self.terms {
            out = out.add(&GradedPoly::z_monomial(p + q, c.clone()));
        }
        out
    }

    /// Largest total degree among stored terms (0 for the zero polynomial).
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    /// Whether coeff(k) = coeff(d−k) for all k, as a Z-mode polynomial of
    /// (formal) degree d.
    pub fn is_palindromic_of_degree(&self, d: u32) -> bool {
        assert!(self.vars != Some(PolyVars::XY), "palindromy is a z-grading check");
        if self.terms.keys().any(|&(e, _)| e > d) {
            return false;
        }
        (0..=d).all(|k| self.coeff((k, 0)) == self.coeff((d - k, 0)))
    }

    /// Coefficient map keyed by exponent text: `"d"` in Z-mode, `"p,q"` in
    /// XY-mode; values in canonical `p/q` form.
    pub fn to_coeff_map(&self, mode: PolyVars) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(&(e0, e1), c)| {
                let key = match mode {
                    PolyVars::Z => e0.to_string(),
                    PolyVars::XY => format!("{e0},{e1}"),
                };
                (key, format_rational(c))
            })
            .collect()
    }

    /// Render with explicit variables (`z` or `x`,`y`); constants render bare.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(e0, e1), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (e0 == 0 && e1 == 0) {
                factors.push(format_rational(&mag));
            }
            match self.vars {
                Some(PolyVars::Z) | None => {
                    if e0 > 0 {
                        factors.push(if e0 == 1 { "z".into() } else { format!("z^{e0}") });
                    }
                }
                Some(PolyVars::XY) => {
                    if e0 > 0 {
                        factors.push(if e0 == 1 { "x".into() } else { format!("x^{e0}") });
                    }
                    if e1 > 0 {
                        factors.push(if e1 == 1 { "y".into() } else { format!("y^{e1}") });
                    }
                }
            }
            let body = factors.join("*");
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        out
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_frac;

    #[test]
    fn constants_are_mode_agnostic() {
        let z = GradedPoly::z_monomial(2, rat(1));
        let c = GradedPoly::constant(rat(3));
        assert_eq!(z.add(&c).coeff((0, 0)), rat(3));
        let xy = GradedPoly::xy_monomial(1, 1, rat(1));
        assert_eq!(xy.add(&c).coeff((1, 1)), rat(1));
        // A difference collapsing to a constant loses its mode tag.
        let diff = z.sub(&z);
        assert!(diff.is_zero());
        assert_eq!(diff.vars(), None);
        assert_eq!(diff, GradedPoly::zero());
    }

    #[test]
    fn mul_and_render() {
        let p = GradedPoly::one().add(&GradedPoly::z_monomial(2, rat(1)));
        let sq = p.mul(&p);
        assert_eq!(sq.coeff((2, 0)), rat(2));
        assert_eq!(sq.render(), "1 + 2*z^2 + z^4");
        let h = GradedPoly::xy_monomial(1, 0, rat_frac(-1, 2));
        assert_eq!(h.render(), "-1/2*x");
    }

    #[test]
    fn palindrome_and_evaluations() {
        // 1 + 2z + z^2 is palindromic of degree 2; value 4 at z=1, 0 at z=-1.
        let p = GradedPoly::one()
            .add(&GradedPoly::z_monomial(1, rat(2)))
            .add(&GradedPoly::z_monomial(2, rat(1)));
        assert!(p.is_palindromic_of_degree(2));
        assert!(!p.is_palindromic_of_degree(3));
        assert_eq!(p.eval_unit(), rat(4));
        assert_eq!(p.eval_signed_unit(), rat(0));
    }

    #[test]
    fn diagonal_substitution() {
        // x + y + xy -> 2z + z^2.
        let h = GradedPoly::xy_monomial(1, 0, rat(1))
            .add(&GradedPoly::xy_monomial(0, 1, rat(1)))
            .add(&GradedPoly::xy_monomial(1, 1, rat(1)));
        let p = h.substitute_diagonal();
        assert_eq!(p.coeff((1, 0)), rat(2));
        assert_eq!(p.coeff((2, 0)), rat(1));
    }

    #[test]
    fn coeff_map_keys() {
        let h = GradedPoly::xy_monomial(2, 1, rat_frac(1, 3));
        let m = h.to_coeff_map(PolyVars::XY);
        assert_eq!(m.get("2,1").map(String::as_str), Some("1/3"));
        let p = GradedPoly::z_monomial(4, rat(7));
        let m = p.to_coeff_map(PolyVars::Z);
        assert_eq!(m.get("4").map(String::as_str), Some("7"));
    }
}
