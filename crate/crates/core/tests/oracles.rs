//! Independent oracles: every value here is computed by a route that shares
//! no code with the engine (explicit group-element enumeration, brute-force
//! multiset counting, frozen literature values), then compared against it.

use num::bigint::BigInt;
use semismall_core::{
    decompose_hilbert, decompose_nested, decompose_parabolic, decompose_wreath, parabolic_chis,
    rat, realize_poincare, sym_hodge, sym_poincare, wreath_class_count, GradedPoly, HodgeDatum,
    ParabolicChi, ParabolicIndex,
};

// -- wreath-product conjugacy classes by explicit enumeration ----------------

/// An element of (Z/(r+1)) ≀ S_n: a color vector and a permutation (stored as
/// the image map i → σ(i)).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct WreathElement {
    colors: Vec<u32>,
    perm: Vec<usize>,
}

fn wreath_mul(a: &WreathElement, b: &WreathElement, modulus: u32) -> WreathElement {
    let n = a.perm.len();
    // (v, σ)(w, τ) = (v + σ·w, στ) with (σ·w)_i = w_{σ⁻¹(i)}.
    let mut sigma_inv = vec![0usize; n];
    for (i, &si) in a.perm.iter().enumerate() {
        sigma_inv[si] = i;
    }
    let colors = (0..n)
        .map(|i| (a.colors[i] + b.colors[sigma_inv[i]]) % modulus)
        .collect();
    let perm = (0..n).map(|i| a.perm[b.perm[i]]).collect();
    WreathElement { colors, perm }
}

fn wreath_inv(a: &WreathElement, modulus: u32) -> WreathElement {
    let n = a.perm.len();
    let mut perm = vec![0usize; n];
    for (i, &si) in a.perm.iter().enumerate() {
        perm[si] = i;
    }
    // (v, σ)⁻¹ = (−σ⁻¹·v, σ⁻¹) and (σ⁻¹·v)_i = v_{σ(i)}.
    let colors = (0..n)
        .map(|i| (modulus - a.colors[a.perm[i]]) % modulus)
        .collect();
    WreathElement { colors, perm }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for shorter in permutations(n - 1) {
        for slot in 0..=shorter.len() {
            let mut p = shorter.clone();
            p.insert(slot, n - 1);
            out.push(p);
        }
    }
    out
}

fn all_wreath_elements(r: usize, n: usize) -> Vec<WreathElement> {
    let modulus = r as u32 + 1;
    let mut out = Vec::new();
    for perm in permutations(n) {
        let mut colors = vec![0u32; n];
        'colors: loop {
            out.push(WreathElement {
                colors: colors.clone(),
                perm: perm.clone(),
            });
            let mut pos = n;
            loop {
                if pos == 0 {
                    break 'colors;
                }
                pos -= 1;
                if colors[pos] + 1 < modulus {
                    colors[pos] += 1;
                    for c in &mut colors[pos + 1..] {
                        *c = 0;
                    }
                    break;
                }
            }
        }
    }
    out
}

fn brute_force_class_count(r: usize, n: usize) -> usize {
    let modulus = r as u32 + 1;
    let elements = all_wreath_elements(r, n);
    let index: std::collections::HashMap<&WreathElement, usize> =
        elements.iter().zip(0..).collect();
    let mut seen = vec![false; elements.len()];
    let mut classes = 0;
    for a in &elements {
        if seen[index[a]] {
            continue;
        }
        classes += 1;
        for h in &elements {
            let conj = wreath_mul(&wreath_mul(h, a, modulus), &wreath_inv(h, modulus), modulus);
            seen[index[&conj]] = true;
        }
    }
    classes
}

#[test]
fn wreath_group_axioms_hold_in_the_oracle() {
    let elements = all_wreath_elements(1, 3);
    assert_eq!(elements.len(), 48);
    let id = WreathElement {
        colors: vec![0; 3],
        perm: vec![0, 1, 2],
    };
    for a in elements.iter().take(12) {
        assert_eq!(wreath_mul(a, &wreath_inv(a, 2), 2), id);
        assert_eq!(wreath_mul(&id, a, 2), *a);
        for b in elements.iter().take(8) {
            for c in elements.iter().take(5) {
                let left = wreath_mul(&wreath_mul(a, b, 2), c, 2);
                let right = wreath_mul(a, &wreath_mul(b, c, 2), 2);
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn class_counts_match_explicit_conjugacy_enumeration() {
    for (r, n) in [(1usize, 2usize), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        let brute = brute_force_class_count(r, n);
        assert_eq!(
            wreath_class_count(r, n as u32),
            BigInt::from(brute),
            "r={r} n={n}"
        );
        assert_eq!(
            decompose_wreath(r, n as u32).records.len(),
            brute,
            "r={r} n={n}"
        );
    }
}

// -- symmetric powers by brute-force super-multiset enumeration --------------

/// Basis of H^*(Sym^m) as size-m multisets of basis classes of H^*, where a
/// class of odd total degree may appear at most once.
fn brute_force_sym(atom: &HodgeDatum, m: u32) -> (GradedPoly, GradedPoly) {
    let mut basis: Vec<(u32, u32)> = Vec::new();
    for p in 0..=atom.dim() {
        for q in 0..=atom.dim() {
            for _ in 0..atom.hodge_number(p, q) {
                basis.push((p as u32, q as u32));
            }
        }
    }
    let mut poincare = GradedPoly::zero();
    let mut hodge = GradedPoly::zero();
    let mut stack: Vec<(usize, u32, u32, u32)> = vec![(0, 0, 0, 0)];
    while let Some((next, size, psum, qsum)) = stack.pop() {
        if size == m {
            poincare = poincare.add(&GradedPoly::z_monomial(psum + qsum, rat(1)));
            hodge = hodge.add(&GradedPoly::xy_monomial(psum, qsum, rat(1)));
            continue;
        }
        if next == basis.len() {
            continue;
        }
        let (p, q) = basis[next];
        let cap = if (p + q) % 2 == 1 { 1 } else { m - size };
        for count in 0..=cap.min(m - size) {
            stack.push((next + 1, size + count, psum + count * p, qsum + count * q));
        }
    }
    (poincare, hodge)
}

#[test]
fn symmetric_powers_match_multiset_enumeration() {
    let atoms = [
        HodgeDatum::point(),
        HodgeDatum::projective_line(),
        HodgeDatum::projective_plane(),
        HodgeDatum::abelian_surface(),
        HodgeDatum::curve("C2", 2),
    ];
    for atom in &atoms {
        for m in 0..=3u32 {
            let (poincare, hodge) = brute_force_sym(atom, m);
            assert_eq!(sym_poincare(atom, m), poincare, "{} m={m}", atom.name());
            assert_eq!(sym_hodge(atom, m), hodge, "{} m={m}", atom.name());
        }
    }
}

// -- parabolic support functions by exhaustive box search --------------------

fn brute_force_chis(n: u32, l: &[u32]) -> Vec<ParabolicChi> {
    // All lattice points of the box except the origin.
    let mut points: Vec<Vec<u32>> = vec![Vec::new()];
    for &bound in std::iter::once(&n).chain(l) {
        let mut next = Vec::new();
        for prefix in &points {
            for v in 0..=bound {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        points = next;
    }
    points.retain(|v| v.iter().any(|&e| e > 0));
    // Odometer over multiplicity assignments with per-point caps.
    let caps: Vec<u32> = points
        .iter()
        .map(|v| {
            let mut cap = u32::MAX;
            if v[0] > 0 {
                cap = cap.min(n / v[0]);
            }
            for (va, &la) in v[1..].iter().zip(l) {
                if *va > 0 {
                    cap = cap.min(la / va);
                }
            }
            cap
        })
        .collect();
    let target: Vec<u32> = std::iter::once(n).chain(l.iter().copied()).collect();
    let mut out = Vec::new();
    let mut mults = vec![0u32; points.len()];
    'grid: loop {
        let mut phi = vec![0u32; target.len()];
        for (v, &m) in points.iter().zip(&mults) {
            for (slot, &coord) in phi.iter_mut().zip(v) {
                *slot += m * coord;
            }
        }
        if phi == target {
            let pairs = points
                .iter()
                .zip(&mults)
                .filter(|(_, &m)| m > 0)
                .map(|(v, &m)| (ParabolicIndex::new(v.clone()), m))
                .collect();
            out.push(ParabolicChi::new(1 + l.len(), pairs));
        }
        let mut pos = mults.len();
        loop {
            if pos == 0 {
                break 'grid;
            }
            pos -= 1;
            if mults[pos] < caps[pos] {
                mults[pos] += 1;
                for e in &mut mults[pos + 1..] {
                    *e = 0;
                }
                break;
            }
        }
    }
    out.sort();
    out
}

#[test]
fn support_function_enumeration_is_complete() {
    for (n, l) in [
        (2u32, vec![1u32]),
        (1, vec![2]),
        (2, vec![2]),
        (3, vec![1]),
        (1, vec![1, 1]),
        (1, vec![2, 1]),
        (0, vec![2]),
    ] {
        let mut engine = parabolic_chis(n, &l);
        engine.sort();
        let brute = brute_force_chis(n, &l);
        assert_eq!(engine, brute, "(n, l) = ({n}, {l:?})");
    }
}

// -- frozen literature values -------------------------------------------------

fn poly_from_even_coeffs(coeffs: &[i64]) -> GradedPoly {
    let mut acc = GradedPoly::zero();
    for (k, &c) in coeffs.iter().enumerate() {
        acc = acc.add(&GradedPoly::z_monomial(2 * k as u32, rat(c)));
    }
    acc
}

#[test]
fn hilbert_scheme_of_the_plane_has_the_known_betti_numbers() {
    let x = HodgeDatum::projective_plane();
    let p2 = realize_poincare(&decompose_hilbert(2, &x).sum).unwrap();
    assert_eq!(p2, poly_from_even_coeffs(&[1, 2, 3, 2, 1]));
    let p3 = realize_poincare(&decompose_hilbert(3, &x).sum).unwrap();
    assert_eq!(p3, poly_from_even_coeffs(&[1, 2, 5, 6, 5, 2, 1]));
}

#[test]
fn euler_numbers_of_plane_hilbert_schemes() {
    use semismall_core::realize_euler;
    let x = HodgeDatum::projective_plane();
    let expected = [1i64, 3, 9, 22, 51, 108];
    for (n, &e) in expected.iter().enumerate() {
        let sum = decompose_hilbert(n as u32, &x).sum;
        assert_eq!(realize_euler(&sum), BigInt::from(e), "n={n}");
    }
}

#[test]
fn two_colored_and_three_colored_partition_numbers() {
    // A000712 and A000716.
    let two: [i64; 6] = [1, 2, 5, 10, 20, 36];
    let three: [i64; 6] = [1, 3, 9, 22, 51, 108];
    for n in 0..6u32 {
        assert_eq!(wreath_class_count(1, n), BigInt::from(two[n as usize]));
        assert_eq!(wreath_class_count(2, n), BigInt::from(three[n as usize]));
    }
}

#[test]
fn nested_hilbert_n1_is_the_blowup_of_the_diagonal() {
    let x = HodgeDatum::projective_plane();
    let d = decompose_nested(1, &x).unwrap();
    let p = realize_poincare(&d.sum).unwrap();
    // b(P2 × P2) plus one exceptional class in each of degrees 2, 4, 6.
    assert_eq!(p, poly_from_even_coeffs(&[1, 3, 4, 3, 1]));
}

#[test]
fn smallest_parabolic_case_realizes_exactly() {
    let x = HodgeDatum::projective_plane();
    let dc = HodgeDatum::projective_line();
    let d = decompose_parabolic(1, &[1], &x, &dc).unwrap();
    let p = realize_poincare(&d.sum).unwrap();
    // [X × D] ⊕ [D](1) with X = P2, D = P1.
    assert_eq!(p, poly_from_even_coeffs(&[1, 3, 3, 1]));
}
