//! The nested Hilbert scheme X^[n, n+1].
//!
//! The map X^[n,n+1] → X^(n) × X (cycle of the n-point subscheme, location of
//! the added point) is semismall. Strata are pairs (a, j): the cycle type
//! a ∈ P(n) together with the multiplicity j the added point lands on, j = 0
//! meaning a free point. The stratum has dimension 2l(a)+2 for j = 0 and
//! 2l(a) otherwise; the summand is [X^{(a)} × X](n−l(a)) resp.
//! [X^{(a−e_j)} × X](n−l(a)+1). For n = 1 this is the blowup of X × X along
//! the diagonal.

use crate::decomp::{symmetrized_factors, Decomposition, StratumIndex, StratumRecord};
use crate::error::{Error, Result};
use crate::hodge::Atom;
use crate::motive::MotiveTerm;
use crate::partitions;

/// Decomposition of X^[n,n+1] over X^(n) × X; needs n ≥ 1.
pub fn decompose_nested(n: u32, x: &Atom) -> Result<Decomposition> {
    if n == 0 {
        return Err(Error::Domain(
            "the nested Hilbert scheme X^[n,n+1] needs n >= 1".to_string(),
        ));
    }
    let ambient = (2 * n + 2) as usize;
    let mut records = Vec::new();
    for a in partitions(n) {
        let l = a.len();
        // j = 0: the added point is free; the stratum picks up two dimensions.
        {
            let twist = n - l;
            let stratum_dim = (2 * l + 2) as usize;
            let mut factors = symmetrized_factors(x, &a);
            factors.push((x.clone(), 1));
            records.push(StratumRecord {
                index: StratumIndex::Nested { a: a.clone(), j: 0 },
                stratum_dim,
                fiber_dim: (n - l) as usize,
                codim: ambient - stratum_dim,
                twist,
                relevant: true,
                cover: MotiveTerm::new(factors, twist),
            });
        }
        // j ≥ 1: the added point sits on a cycle point of multiplicity j.
        let mut sizes: Vec<u32> = a.parts().to_vec();
        sizes.sort_unstable();
        sizes.dedup();
        for j in sizes {
            let twist = n - l + 1;
            let stratum_dim = 2 * l as usize;
            let mut factors = symmetrized_factors(x, &a.remove_part(j));
            factors.push((x.clone(), 1));
            records.push(StratumRecord {
                index: StratumIndex::Nested { a: a.clone(), j },
                stratum_dim,
                fiber_dim: (n - l + 1) as usize,
                codim: ambient - stratum_dim,
                twist,
                relevant: true,
                cover: MotiveTerm::new(factors, twist),
            });
        }
    }
    Ok(Decomposition::from_records(ambient, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::HodgeDatum;
    use crate::motive::{realize_poincare, MotiveSum};

    fn p2() -> Atom {
        HodgeDatum::projective_plane()
    }

    #[test]
    fn one_point_is_the_diagonal_blowup() {
        let x = p2();
        let d = decompose_nested(1, &x).unwrap();
        let mut expected = MotiveSum::zero();
        expected.insert(MotiveTerm::new(vec![(x.clone(), 1), (x.clone(), 1)], 0), 1);
        expected.insert(MotiveTerm::new(vec![(x.clone(), 1)], 1), 1);
        assert_eq!(d.sum, expected);
        assert_eq!(d.records.len(), 2);
    }

    #[test]
    fn two_point_structure_doubles_the_middle_term() {
        let x = p2();
        let d = decompose_nested(2, &x).unwrap();
        let mut expected = MotiveSum::zero();
        expected.insert(MotiveTerm::new(vec![(x.clone(), 2), (x.clone(), 1)], 0), 1);
        expected.insert(MotiveTerm::new(vec![(x.clone(), 1), (x.clone(), 1)], 1), 2);
        expected.insert(MotiveTerm::new(vec![(x.clone(), 1)], 2), 1);
        assert_eq!(d.sum, expected);
    }

    #[test]
    fn realizations_are_palindromic_of_the_right_degree() {
        let x = p2();
        for n in 1..=3 {
            let d = decompose_nested(n, &x).unwrap();
            let p = realize_poincare(&d.sum).unwrap();
            assert_eq!(p.max_degree(), 2 * (2 * n + 2));
            assert!(p.is_palindromic_of_degree(4 * n + 4), "n = {n}");
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(
            decompose_nested(0, &p2()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn exactly_one_dense_stratum() {
        let d = decompose_nested(3, &p2()).unwrap();
        let dense: Vec<_> = d
            .records
            .iter()
            .filter(|r| r.stratum_dim == d.ambient_dim)
            .collect();
        assert_eq!(dense.len(), 1);
        assert_eq!(dense[0].fiber_dim, 0);
        for r in &d.records {
            assert_eq!(r.codim, 2 * r.fiber_dim);
            assert_eq!(r.twist as usize, r.fiber_dim);
        }
    }
}
