//! Index sets labeling the strata of every decomposition: partitions (with
//! exponent form), compositions, finitely supported parabolic support
//! functions, and per-curve labeled partitions.
//!
//! All enumerations are complete, duplicate-free, and deterministic; the
//! order is fixed (descending lexicographic for partitions, ascending for
//! compositions, lexicographic on the canonical encoding elsewhere) so that
//! every downstream decomposition and table is byte-stable.

use std::collections::BTreeMap;
use std::fmt;

/// Partition ν of n: weakly decreasing positive parts.
///
/// The exponent form a = (a_1,…,a_n) with a_i = multiplicity of part i
/// satisfies Σ i·a_i = n and l(ν) = Σ a_i.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// n = Σ parts.
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// l(ν) = number of parts.
    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Exponent form a = (a_1,…,a_n) of length n (empty for n = 0).
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.total() as usize;
        let mut a = vec![0u32; n];
        for &p in &self.parts {
            a[(p - 1) as usize] += 1;
        }
        a
    }

    /// Rebuild from exponent form; trailing zeros are harmless.
    pub fn from_exponents(a: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (i, &mult) in a.iter().enumerate() {
            for _ in 0..mult {
                parts.push((i + 1) as u32);
            }
        }
        Partition::new(parts)
    }

    /// Remove one part equal to `j`; panics if absent.
    pub fn remove_part(&self, j: u32) -> Partition {
        let pos = self
            .parts
            .iter()
            .position(|&p| p == j)
            .expect("partition does not contain the requested part");
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// All partitions of n in descending lexicographic order:
/// partitions(2) = [(2), (1,1)].
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Composition m̄ = (m_1,…,m_N) of h into N ordered nonnegative slots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Composition {
    entries: Vec<u32>,
}

impl Composition {
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// All of Q_N(h) in ascending lexicographic order; Q_0(0) = {()} and
/// Q_0(h) = ∅ for h > 0.
pub fn compositions(n_slots: usize, total: u32) -> Vec<Composition> {
    fn rec(slots_left: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots_left == 0 {
            if remaining == 0 {
                out.push(Composition {
                    entries: prefix.clone(),
                });
            }
            return;
        }
        if slots_left == 1 {
            prefix.push(remaining);
            out.push(Composition {
                entries: prefix.clone(),
            });
            prefix.pop();
            return;
        }
        for first in 0..=remaining {
            prefix.push(first);
            rec(slots_left - 1, remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n_slots, total, &mut Vec::new(), &mut out);
    out
}

/// A lattice index v = (v_0, v_1, …, v_h) ∈ Z_{≥0}^{1+h}; v_0 counts free
/// point length, v_α the α-th filtration quotient along the divisor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParabolicIndex {
    entries: Vec<u32>,
}

impl ParabolicIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "a parabolic index needs at least the v_0 slot");
        ParabolicIndex { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn v0(&self) -> u32 {
        self.entries[0]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Σ_{α≥1} v_α.
    pub fn divisor_weight(&self) -> u32 {
        self.entries[1..].iter().sum()
    }

    /// Point type: v_* = 0, i.e. the index only carries free point length.
    pub fn is_point_type(&self) -> bool {
        self.divisor_weight() == 0
    }

    /// Membership in the relevance cone
    /// C = {m·e_0 : m ≥ 1} ∪ {m·e_0 + e_α : m ≥ 0, 1 ≤ α ≤ h}.
    pub fn in_relevance_cone(&self) -> bool {
        !self.is_zero() && self.divisor_weight() <= 1
    }
}

impl fmt::Display for ParabolicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// Finitely supported χ: A′ → Z_{≥0}, stored as a sorted association list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParabolicChi {
    arity: usize,
    entries: Vec<(ParabolicIndex, u32)>,
}

impl ParabolicChi {
    /// Build from (index, multiplicity) pairs; zero multiplicities drop, the
    /// zero index is rejected (A′ excludes the origin), duplicates merge.
    pub fn new(arity: usize, pairs: Vec<(ParabolicIndex, u32)>) -> Self {
        let mut merged: BTreeMap<ParabolicIndex, u32> = BTreeMap::new();
        for (v, m) in pairs {
            assert_eq!(v.arity(), arity, "index arity mismatch");
            assert!(!v.is_zero(), "the origin is not in A'");
            if m > 0 {
                *merged.entry(v).or_insert(0) += m;
            }
        }
        ParabolicChi {
            arity,
            entries: merged.into_iter().collect(),
        }
    }

    pub fn zero(arity: usize) -> Self {
        ParabolicChi {
            arity,
            entries: Vec::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> &[(ParabolicIndex, u32)] {
        &self.entries
    }

    /// Φ(χ) = Σ_v χ(v)·v, as a vector of length `arity`.
    pub fn phi(&self) -> Vec<u32> {
        let mut acc = vec![0u32; self.arity];
        for (v, m) in &self.entries {
            for (slot, &e) in acc.iter_mut().zip(v.entries()) {
                *slot += m * e;
            }
        }
        acc
    }

    /// Σ over point-type indices of χ(v): the length already fixed in X.
    pub fn point_weight(&self) -> u32 {
        self.entries
            .iter()
            .filter(|(v, _)| v.is_point_type())
            .map(|(_, m)| m)
            .sum()
    }

    /// Σ over divisor-type indices of χ(v): the number of divisor factors.
    pub fn divisor_factor_count(&self) -> u32 {
        self.entries
            .iter()
            .filter(|(v, _)| !v.is_point_type())
            .map(|(_, m)| m)
            .sum()
    }

    /// χ is relevant iff its support lies in the relevance cone C.
    pub fn is_relevant(&self) -> bool {
        self.entries.iter().all(|(v, _)| v.in_relevance_cone())
    }
}

impl fmt::Display for ParabolicChi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let inner: Vec<String> = self
            .entries
            .iter()
            .map(|(v, m)| {
                if *m == 1 {
                    v.to_string()
                } else {
                    format!("{m}{v}")
                }
            })
            .collect();
        write!(f, "{}", inner.join("+"))
    }
}

/// Complete enumeration of S(A′, l_*(n)) = Φ^{-1}(n, l_1, …, l_h), sorted by
/// the canonical encoding. Supports automatically lie in the box
/// {v : v_0 ≤ n, v_α ≤ l_α}.
pub fn parabolic_chis(n: u32, l: &[u32]) -> Vec<ParabolicChi> {
    assert!(!l.is_empty(), "parabolic type needs h >= 1 filtration levels");
    let arity = 1 + l.len();
    let mut target = Vec::with_capacity(arity);
    target.push(n);
    target.extend_from_slice(l);

    // Box of candidate indices in ascending lexicographic order, origin
    // excluded.
    let mut indices: Vec<ParabolicIndex> = Vec::new();
    fn build(slot: usize, target: &[u32], current: &mut Vec<u32>, out: &mut Vec<ParabolicIndex>) {
        if slot == target.len() {
            if current.iter().any(|&e| e > 0) {
                out.push(ParabolicIndex::new(current.clone()));
            }
            return;
        }
        for e in 0..=target[slot] {
            current.push(e);
            build(slot + 1, target, current, out);
            current.pop();
        }
    }
    build(0, &target, &mut Vec::new(), &mut indices);

    fn search(
        indices: &[ParabolicIndex],
        pos: usize,
        remaining: &mut Vec<u32>,
        acc: &mut Vec<(ParabolicIndex, u32)>,
        arity: usize,
        out: &mut Vec<ParabolicChi>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(ParabolicChi::new(arity, acc.clone()));
            return;
        }
        if pos == indices.len() {
            return;
        }
        let v = indices[pos].entries();
        let max_mult = v
            .iter()
            .zip(remaining.iter())
            .filter(|(e, _)| **e > 0)
            .map(|(e, r)| r / e)
            .min()
            .expect("box indices are nonzero");
        for mult in 0..=max_mult {
            if mult > 0 {
                for (slot, &e) in remaining.iter_mut().zip(v) {
                    *slot -= e;
                }
                acc.push((indices[pos].clone(), mult));
            }
            search(indices, pos + 1, remaining, acc, arity, out);
            if mult > 0 {
                acc.pop();
            }
        }
        // Restore the target weight consumed by the final multiplicity.
        for (slot, &e) in remaining.iter_mut().zip(v) {
            *slot += e * max_mult;
        }
    }

    let mut out = Vec::new();
    let mut remaining = target.clone();
    search(&indices, 0, &mut remaining, &mut Vec::new(), arity, &mut out);
    out.sort();
    out.dedup();
    out
}

/// One partition per curve label (empty partitions omitted); the refined
/// component label for a fiber configuration of total degree m over a finite
/// curve set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurveLabeledPartition {
    assignments: BTreeMap<String, Partition>,
}

impl CurveLabeledPartition {
    pub fn new(assignments: BTreeMap<String, Partition>) -> Self {
        let assignments = assignments
            .into_iter()
            .filter(|(_, p)| !p.is_empty())
            .collect();
        CurveLabeledPartition { assignments }
    }

    pub fn empty() -> Self {
        CurveLabeledPartition {
            assignments: BTreeMap::new(),
        }
    }

    pub fn assignments(&self) -> &BTreeMap<String, Partition> {
        &self.assignments
    }

    pub fn degree(&self) -> u32 {
        self.assignments.values().map(Partition::total).sum()
    }
}

impl fmt::Display for CurveLabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.assignments.is_empty() {
            return write!(f, "{{}}");
        }
        let inner: Vec<String> = self
            .assignments
            .iter()
            .map(|(c, p)| format!("{c}:{p}"))
            .collect();
        write!(f, "{{{}}}", inner.join(" "))
    }
}

/// All degree-m labelings of the given curves; the count has generating
/// function Π_{k≥1} (1−t^k)^{−|curves|}. Curve labels must be distinct.
pub fn curve_labeled_partitions(curves: &[String], m: u32) -> Vec<CurveLabeledPartition> {
    {
        let mut seen = curves.to_vec();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), curves.len(), "curve labels must be distinct");
    }
    let mut out = Vec::new();
    for comp in compositions(curves.len(), m) {
        // Cartesian product of per-curve partitions of the composition parts.
        let mut stack: Vec<BTreeMap<String, Partition>> = vec![BTreeMap::new()];
        for (curve, &deg) in curves.iter().zip(comp.entries()) {
            let choices = partitions(deg);
            let mut next = Vec::with_capacity(stack.len() * choices.len());
            for base in &stack {
                for p in &choices {
                    let mut m = base.clone();
                    if !p.is_empty() {
                        m.insert(curve.clone(), p.clone());
                    }
                    next.push(m);
                }
            }
            stack = next;
        }
        out.extend(stack.into_iter().map(CurveLabeledPartition::new));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_two_in_order() {
        let ps = partitions(2);
        assert_eq!(ps, vec![Partition::new(vec![2]), Partition::new(vec![1, 1])]);
    }

    #[test]
    fn empty_partition_of_zero() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
    }

    #[test]
    fn exponent_form_round_trips() {
        let p = Partition::new(vec![3, 1, 1]);
        assert_eq!(p.exponents(), vec![2, 0, 1, 0, 0]);
        assert_eq!(Partition::from_exponents(&p.exponents()), p);
        assert_eq!(p.len(), 3);
        assert_eq!(p.total(), 5);
    }

    #[test]
    fn compositions_order_and_edge_cases() {
        let cs = compositions(2, 2);
        let entries: Vec<&[u32]> = cs.iter().map(|c| c.entries()).collect();
        assert_eq!(entries, vec![&[0, 2][..], &[1, 1], &[2, 0]]);
        assert_eq!(compositions(0, 0).len(), 1);
        assert!(compositions(0, 0)[0].entries().is_empty());
        assert!(compositions(0, 1).is_empty());
    }

    #[test]
    fn parabolic_chis_example_sizes() {
        // Type (1, h=1, l=(1)): exactly the two support functions
        // δ_{(1,0)} + δ_{(0,1)} and δ_{(1,1)}.
        let chis = parabolic_chis(1, &[1]);
        assert_eq!(chis.len(), 2);
        for chi in &chis {
            assert_eq!(chi.phi(), vec![1, 1]);
        }
        // Type (1, h=1, l=(2)) has four support functions.
        assert_eq!(parabolic_chis(1, &[2]).len(), 4);
        // The fiber over the origin is the zero function alone.
        let zero = parabolic_chis(0, &[0]);
        assert_eq!(zero.len(), 1);
        assert!(zero[0].entries().is_empty());
    }

    #[test]
    fn relevance_cone_membership() {
        assert!(ParabolicIndex::new(vec![3, 0]).in_relevance_cone());
        assert!(ParabolicIndex::new(vec![0, 1]).in_relevance_cone());
        assert!(ParabolicIndex::new(vec![2, 1]).in_relevance_cone());
        assert!(!ParabolicIndex::new(vec![0, 2]).in_relevance_cone());
        assert!(!ParabolicIndex::new(vec![1, 1, 1]).in_relevance_cone());
        assert!(!ParabolicIndex::new(vec![0, 0]).in_relevance_cone());
    }

    #[test]
    fn curve_labelings_single_curve() {
        let curves = vec!["E".to_string()];
        let ls = curve_labeled_partitions(&curves, 2);
        assert_eq!(ls.len(), 2);
        let degrees: Vec<u32> = ls.iter().map(|l| l.degree()).collect();
        assert_eq!(degrees, vec![2, 2]);
    }

    #[test]
    fn curve_labelings_edge_cases() {
        assert_eq!(curve_labeled_partitions(&[], 0).len(), 1);
        assert!(curve_labeled_partitions(&[], 1).is_empty());
        let two = vec!["C".to_string(), "D".to_string()];
        // Frozen: coefficient of t^2 in (1-t)^{-2} (1-t^2)^{-2} is 5.
        assert_eq!(curve_labeled_partitions(&two, 2).len(), 5);
    }
}
