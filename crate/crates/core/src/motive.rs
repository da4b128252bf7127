//! The formal motive layer: integer combinations of products of symmetric
//! powers of named atoms, each with a Tate twist, together with the
//! realization functors.
//!
//! A term [A^{(m_1)} × B^{(m_2)} × …](k) realizes as
//! Π sym(atom, m) · (Lefschetz)^k, where the Lefschetz factor is z² in the
//! Poincaré grading and xy in the Hodge grading. Symmetric powers realize
//! through the exact Macdonald-type products
//!
//!   Σ_m P(A^{(m)}) t^m = Π_i (1 + z^i t)^{b_i}^{(-1)^i}   and
//!   Σ_m h(A^{(m)}) t^m = Π_{p,q} (1 + ε x^p y^q t)^{ε h^{p,q}},  ε = (−1)^{p+q−1}.
//!
//! Graded realizations are certified for proper atoms only; open atoms (ALE
//! surfaces, affine quotients) are served by `realize_euler` and rank
//! counting, where no grading convention enters.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::hodge::{Atom, HodgeDatum};
use crate::poly::GradedPoly;
use crate::rational::{binomial, rat};
use crate::series::{euler_factor, product, Coeff, TruncatedSeries};

/// One product of symmetric powers with a Tate twist, in canonical form:
/// factors sorted, point factors (m = 0) dropped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MotiveTerm {
    factors: Vec<(Atom, u32)>,
    twist: u32,
}

impl MotiveTerm {
    pub fn new(factors: Vec<(Atom, u32)>, twist: u32) -> Self {
        let mut factors: Vec<(Atom, u32)> = factors.into_iter().filter(|(_, m)| *m > 0).collect();
        factors.sort_by(|(a, ma), (b, mb)| (a.name(), ma).cmp(&(b.name(), mb)).then_with(|| a.cmp(b)));
        MotiveTerm { factors, twist }
    }

    /// The unit term [pt].
    pub fn unit() -> Self {
        MotiveTerm {
            factors: Vec::new(),
            twist: 0,
        }
    }

    pub fn factors(&self) -> &[(Atom, u32)] {
        &self.factors
    }

    pub fn twist(&self) -> u32 {
        self.twist
    }

    pub fn twisted(&self, k: u32) -> MotiveTerm {
        MotiveTerm {
            factors: self.factors.clone(),
            twist: self.twist + k,
        }
    }

    /// Σ m·dim(atom) + twist.
    pub fn realized_dim(&self) -> usize {
        self.factors
            .iter()
            .map(|(a, m)| a.dim() * (*m as usize))
            .sum::<usize>()
            + self.twist as usize
    }

    pub fn mul(&self, other: &MotiveTerm) -> MotiveTerm {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        MotiveTerm::new(factors, self.twist + other.twist)
    }
}

impl fmt::Display for MotiveTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = if self.factors.is_empty() {
            "pt".to_string()
        } else {
            self.factors
                .iter()
                .map(|(a, m)| {
                    if *m == 1 {
                        a.name().to_string()
                    } else {
                        format!("{}^({})", a.name(), m)
                    }
                })
                .collect::<Vec<_>>()
                .join(" x ")
        };
        if self.twist == 0 {
            write!(f, "[{body}]")
        } else {
            write!(f, "[{body}]({})", self.twist)
        }
    }
}

/// Formal integer combination of motive terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MotiveSum {
    terms: BTreeMap<MotiveTerm, i64>,
}

impl MotiveSum {
    pub fn zero() -> Self {
        MotiveSum::default()
    }

    pub fn from_term(term: MotiveTerm) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(term, 1);
        MotiveSum { terms }
    }

    pub fn unit() -> Self {
        MotiveSum::from_term(MotiveTerm::unit())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MotiveTerm, &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn multiplicity(&self, term: &MotiveTerm) -> i64 {
        self.terms.get(term).copied().unwrap_or(0)
    }

    /// Number of direct summands counted with multiplicity.
    pub fn summand_count(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn insert(&mut self, term: MotiveTerm, multiplicity: i64) {
        if multiplicity == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(term) {
            Entry::Vacant(slot) => {
                slot.insert(multiplicity);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += multiplicity;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MotiveSum) -> MotiveSum {
        let mut terms = self.terms.clone();
        for (t, m) in &other.terms {
            let entry = terms.entry(t.clone()).or_insert(0);
            *entry += m;
        }
        terms.retain(|_, m| *m != 0);
        MotiveSum { terms }
    }

    pub fn scale(&self, k: i64) -> MotiveSum {
        if k == 0 {
            return MotiveSum::zero();
        }
        MotiveSum {
            terms: self.terms.iter().map(|(t, m)| (t.clone(), m * k)).collect(),
        }
    }

    /// Bilinear product: term products join factor multisets and add twists.
    pub fn mul(&self, other: &MotiveSum) -> MotiveSum {
        let mut out = MotiveSum::zero();
        for (ta, ma) in &self.terms {
            for (tb, mb) in &other.terms {
                out.insert(ta.mul(tb), ma * mb);
            }
        }
        out
    }

    pub fn tate_twist(&self, k: u32) -> MotiveSum {
        MotiveSum {
            terms: self
                .terms
                .iter()
                .map(|(t, m)| (t.twisted(k), *m))
                .collect(),
        }
    }
}

impl fmt::Display for MotiveSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (term, mult)) in self.terms.iter().enumerate() {
            let mag = mult.unsigned_abs();
            if i == 0 {
                if *mult < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if *mult < 0 { " - " } else { " + " })?;
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

impl Coeff for MotiveSum {
    fn zero() -> Self {
        MotiveSum::zero()
    }
    fn one() -> Self {
        MotiveSum::unit()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        MotiveSum::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MotiveSum::mul(self, other)
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        let k: i64 = i64::try_from(k.clone()).expect("motive multiplicities fit in i64");
        self.scale(k)
    }
}

// -- symmetric-power realizations -------------------------------------------

/// Poincaré polynomial of Sym^m(atom): coefficient of t^m in
/// Π_i (1 + z^i t)^{b_i} (i odd) / Π_i (1 − z^i t)^{b_i} (i even).
pub fn sym_poincare(atom: &HodgeDatum, m: u32) -> GradedPoly {
    if m == 0 {
        return GradedPoly::one();
    }
    let bounds = [m];
    let mut factors = Vec::new();
    for i in 0..=2 * atom.dim() {
        let b = atom.betti(i) as i64;
        if b == 0 {
            continue;
        }
        let (coeff, exponent) = if i % 2 == 0 {
            (GradedPoly::z_monomial(i as u32, rat(-1)), -b)
        } else {
            (GradedPoly::z_monomial(i as u32, rat(1)), b)
        };
        factors.push(euler_factor(&bounds, &[1], &coeff, exponent).expect("t has positive degree"));
    }
    let series = product(&bounds, factors).expect("uniform bounds");
    series.coefficient(&[m]).expect("within bounds")
}

/// Hodge polynomial of Sym^m(atom): coefficient of t^m in
/// Π_{p,q} (1 + ε(p,q) x^p y^q t)^{ε(p,q)·h^{p,q}}, ε(p,q) = (−1)^{p+q−1}.
pub fn sym_hodge(atom: &HodgeDatum, m: u32) -> GradedPoly {
    if m == 0 {
        return GradedPoly::one();
    }
    let bounds = [m];
    let mut factors = Vec::new();
    for p in 0..=atom.dim() {
        for q in 0..=atom.dim() {
            let h = atom.hodge_number(p, q) as i64;
            if h == 0 {
                continue;
            }
            let eps: i64 = if (p + q) % 2 == 0 { -1 } else { 1 };
            let coeff = GradedPoly::xy_monomial(p as u32, q as u32, rat(eps));
            factors.push(
                euler_factor(&bounds, &[1], &coeff, eps * h).expect("t has positive degree"),
            );
        }
    }
    let series = product(&bounds, factors).expect("uniform bounds");
    series.coefficient(&[m]).expect("within bounds")
}

/// Euler characteristic of Sym^m(atom): coefficient of t^m in
/// (1 − t)^{−e(atom)}, i.e. C(e + m − 1, m). Valid for every atom.
pub fn sym_euler(atom: &HodgeDatum, m: u32) -> BigInt {
    let e = BigInt::from(atom.euler());
    let sign = if m % 2 == 0 { 1 } else { -1 };
    binomial(&-e, m) * BigInt::from(sign)
}

fn require_proper(term: &MotiveTerm) -> Result<()> {
    for (atom, _) in term.factors() {
        if !atom.is_proper() {
            return Err(Error::RankOnly {
                atom: atom.name().to_string(),
            });
        }
    }
    Ok(())
}

/// Σ multiplicity · Π sym_poincare(atom, m) · z^{2·twist}; proper atoms only.
pub fn realize_poincare(sum: &MotiveSum) -> Result<GradedPoly> {
    let mut acc = GradedPoly::zero();
    for (term, &mult) in sum.terms() {
        require_proper(term)?;
        let mut poly = GradedPoly::z_monomial(2 * term.twist(), rat(mult));
        for (atom, m) in term.factors() {
            poly = poly.mul(&sym_poincare(atom, *m));
        }
        acc = acc.add(&poly);
    }
    Ok(acc)
}

/// Σ multiplicity · Π sym_hodge(atom, m) · (xy)^{twist}; proper atoms only.
pub fn realize_hodge(sum: &MotiveSum) -> Result<GradedPoly> {
    let mut acc = GradedPoly::zero();
    for (term, &mult) in sum.terms() {
        require_proper(term)?;
        let mut poly = GradedPoly::xy_monomial(term.twist(), term.twist(), rat(mult));
        for (atom, m) in term.factors() {
            poly = poly.mul(&sym_hodge(atom, *m));
        }
        acc = acc.add(&poly);
    }
    Ok(acc)
}

/// Σ multiplicity · Π e(Sym^m atom); twists contribute factor 1. Valid for
/// all atoms, proper or not.
pub fn realize_euler(sum: &MotiveSum) -> BigInt {
    let mut acc = BigInt::from(0);
    for (term, &mult) in sum.terms() {
        let mut value = BigInt::from(mult);
        for (atom, m) in term.factors() {
            value *= sym_euler(atom, *m);
        }
        acc += value;
    }
    acc
}

/// Total cohomology rank Σ multiplicity · Π rank(Sym^m atom), where
/// rank(Sym^m A) counts monomials in the super-symmetric algebra. Valid for
/// all atoms; used for the rank-level statements about open strata.
pub fn realize_rank(sum: &MotiveSum) -> BigInt {
    // rank(Sym^m A) = coefficient of t^m in (1+t)^{b_odd} / (1-t)^{b_even}.
    fn sym_rank(atom: &HodgeDatum, m: u32) -> BigInt {
        let b_even: i64 = (0..=2 * atom.dim())
            .step_by(2)
            .map(|i| atom.betti(i) as i64)
            .sum();
        let b_odd: i64 = (1..=2 * atom.dim())
            .step_by(2)
            .map(|i| atom.betti(i) as i64)
            .sum();
        let mut acc = BigInt::from(0);
        for k in 0..=m {
            // choose k odd generators, m-k even with repetition
            let odd = binomial(&BigInt::from(b_odd), k);
            let even_sign = if (m - k) % 2 == 0 { 1 } else { -1 };
            let even = binomial(&BigInt::from(-b_even), m - k) * BigInt::from(even_sign);
            acc += odd * even;
        }
        acc
    }
    let mut acc = BigInt::from(0);
    for (term, &mult) in sum.terms() {
        let mut value = BigInt::from(mult);
        for (atom, m) in term.factors() {
            value *= sym_rank(atom, *m);
        }
        acc += value;
    }
    acc
}

/// A MotiveSum-valued series over shared bounds, used by decompositions for
/// the termwise motive-level generating-function identities.
pub type MotiveSeries = TruncatedSeries<MotiveSum>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_frac;

    fn p2() -> Atom {
        HodgeDatum::projective_plane()
    }

    #[test]
    fn projective_line_decomposes_as_two_points() {
        // [pt] ⊕ [pt](1) realizes to 1 + z².
        let sum = MotiveSum::unit().add(&MotiveSum::unit().tate_twist(1));
        let p = realize_poincare(&sum).unwrap();
        assert_eq!(p, HodgeDatum::projective_line().poincare_poly());
        assert_eq!(realize_euler(&sum), BigInt::from(2));
    }

    #[test]
    fn tate_twist_is_additive_and_graded() {
        let x = MotiveSum::from_term(MotiveTerm::new(vec![(p2(), 1)], 0));
        assert_eq!(x.tate_twist(0), x);
        assert_eq!(x.tate_twist(1).tate_twist(1), x.tate_twist(2));
        let p0 = realize_poincare(&x).unwrap();
        let p2r = realize_poincare(&x.tate_twist(2)).unwrap();
        assert_eq!(p2r, p0.mul(&GradedPoly::z_monomial(4, rat(1))));
    }

    #[test]
    fn sym_poincare_of_p2() {
        // Frozen: coefficient of t² in (1-t)^{-1}(1-z²t)^{-1}(1-z⁴t)^{-1}.
        let s = sym_poincare(&p2(), 2);
        assert_eq!(s.render(), "1 + z^2 + 2*z^4 + z^6 + z^8");
        assert_eq!(sym_poincare(&p2(), 0), GradedPoly::one());
        assert_eq!(sym_poincare(&HodgeDatum::point(), 5), GradedPoly::one());
    }

    #[test]
    fn sym_hodge_of_rational_curve() {
        // Frozen: t² in (1-t)^{-1}(1-xyt)^{-1} is 1 + xy + x²y².
        let s = sym_hodge(&HodgeDatum::projective_line(), 2);
        assert_eq!(s.render(), "1 + x*y + x^2*y^2");
        // Sym¹ is the atom itself.
        let a = HodgeDatum::abelian_surface();
        assert_eq!(sym_hodge(&a, 1), a.hodge_poly());
    }

    #[test]
    fn sym_hodge_diagonal_matches_sym_poincare() {
        for atom in [
            p2(),
            HodgeDatum::abelian_surface(),
            HodgeDatum::curve("C2", 2),
            HodgeDatum::projective_line(),
        ] {
            for m in 0..=3 {
                assert_eq!(
                    sym_hodge(&atom, m).substitute_diagonal(),
                    sym_poincare(&atom, m),
                    "atom {} m {}",
                    atom.name(),
                    m
                );
            }
        }
    }

    #[test]
    fn sym_euler_handles_negative_euler_characteristics() {
        let c2 = HodgeDatum::curve("C2", 2); // e = -2
        assert_eq!(sym_euler(&c2, 0), BigInt::from(1));
        assert_eq!(sym_euler(&c2, 1), BigInt::from(-2));
        assert_eq!(sym_euler(&c2, 2), BigInt::from(1)); // (1-t)^2
        assert_eq!(sym_euler(&c2, 3), BigInt::from(0));
        let p2 = p2();
        assert_eq!(sym_euler(&p2, 2), BigInt::from(6)); // C(3+2-1, 2)
    }

    #[test]
    fn graded_realization_refuses_open_atoms() {
        let open = MotiveSum::from_term(MotiveTerm::new(vec![(HodgeDatum::ale_surface(1), 1)], 0));
        assert!(matches!(
            realize_poincare(&open),
            Err(Error::RankOnly { .. })
        ));
        assert!(matches!(realize_hodge(&open), Err(Error::RankOnly { .. })));
        assert_eq!(realize_euler(&open), BigInt::from(2));
        assert_eq!(realize_rank(&open), BigInt::from(2));
    }

    #[test]
    fn hodge_at_minus_one_is_euler() {
        let sum = MotiveSum::from_term(MotiveTerm::new(vec![(p2(), 2), (HodgeDatum::curve("C1", 1), 1)], 1))
            .add(&MotiveSum::unit().scale(3));
        let h = realize_hodge(&sum).unwrap();
        assert_eq!(h.eval_signed_unit(), rat(realize_euler(&sum).try_into().unwrap()));
        // And the ring product respects realization.
        let a = MotiveSum::from_term(MotiveTerm::new(vec![(p2(), 1)], 1));
        let b = MotiveSum::from_term(MotiveTerm::new(vec![(p2(), 2)], 0)).scale(2);
        let lhs = realize_poincare(&a.mul(&b)).unwrap();
        let rhs = realize_poincare(&a).unwrap().mul(&realize_poincare(&b).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn term_canonical_form() {
        let x = p2();
        let d = HodgeDatum::projective_line();
        let t1 = MotiveTerm::new(vec![(x.clone(), 2), (d.clone(), 1), (x.clone(), 0)], 1);
        let t2 = MotiveTerm::new(vec![(d, 1), (x, 2)], 1);
        assert_eq!(t1, t2);
        assert_eq!(t1.to_string(), "[P1 x P2^(2)](1)");
        assert_eq!(MotiveTerm::unit().to_string(), "[pt]");
    }

    #[test]
    fn rank_counts_super_dimension() {
        // Total rank agrees with the z = 1 value of the Poincaré realization.
        let a = HodgeDatum::abelian_surface();
        let sum = MotiveSum::from_term(MotiveTerm::new(vec![(a.clone(), 2)], 0));
        let via_poly = realize_poincare(&sum).unwrap().eval_unit();
        assert_eq!(via_poly, rat_frac(realize_rank(&sum).try_into().unwrap(), 1));
    }
}
