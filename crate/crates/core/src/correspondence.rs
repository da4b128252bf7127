//! The formal algebra of self-correspondences supported on a resolution's
//! exceptional configuration.
//!
//! A configuration is a list of exceptional curve labels E_1..E_r with a
//! symmetric negative-definite intersection matrix M. The modeled span is
//! q·Δ + Σ c_{ij} E_i×E_j, closed under composition by the rule
//!
//!   Δ∘Δ = Δ,   Δ∘(E_i×E_j) = (E_i×E_j)∘Δ = E_i×E_j,
//!   (E_k×E_l)∘(E_i×E_j) = (E_j·E_k)·(E_i×E_l),
//!
//! so that the Mumford projector Δ − Σ Λ_{ij} E_i×E_j (Λ = M^{-1}) is
//! idempotent: its off-diagonal part composes to ΛMΛ = Λ.

use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat, Rational};

/// Dense exact rational matrix. Small (exceptional configurations are tiny),
/// so all operations are simple quadratic/cubic loops over `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![rat(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        m
    }

    pub fn from_rows(rows_in: Vec<Vec<Rational>>) -> Self {
        let rows = rows_in.len();
        let cols = rows_in.first().map_or(0, Vec::len);
        assert!(rows_in.iter().all(|r| r.len() == cols), "ragged matrix rows");
        RatMatrix {
            rows,
            cols,
            data: rows_in.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Exact determinant by Gaussian elimination with row swaps.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut work = self.clone();
        let mut det = rat(1);
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !work.get(r, col).is_zero()) {
                Some(r) => r,
                None => return rat(0),
            };
            if pivot_row != col {
                for j in 0..n {
                    let tmp = work.get(col, j).clone();
                    let other = work.get(pivot_row, j).clone();
                    work.set(col, j, other);
                    work.set(pivot_row, j, tmp);
                }
                det = -det;
            }
            let pivot = work.get(col, col).clone();
            det *= pivot.clone();
            for r in (col + 1)..n {
                let factor = work.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = work.get(r, j) - &factor * work.get(col, j);
                    work.set(r, j, v);
                }
            }
        }
        det
    }

    /// Leading principal k×k submatrix.
    pub fn leading_minor(&self, k: usize) -> RatMatrix {
        let mut out = RatMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !work.get(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot_row != col {
                for j in 0..n {
                    let (a, b) = (work.get(col, j).clone(), work.get(pivot_row, j).clone());
                    work.set(col, j, b);
                    work.set(pivot_row, j, a);
                    let (a, b) = (inv.get(col, j).clone(), inv.get(pivot_row, j).clone());
                    inv.set(col, j, b);
                    inv.set(pivot_row, j, a);
                }
            }
            let pivot = work.get(col, col).clone();
            for j in 0..n {
                work.set(col, j, work.get(col, j) / &pivot);
                inv.set(col, j, inv.get(col, j) / &pivot);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = work.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let w = work.get(r, j) - &factor * work.get(col, j);
                    work.set(r, j, w);
                    let v = inv.get(r, j) - &factor * inv.get(col, j);
                    inv.set(r, j, v);
                }
            }
        }
        Ok(inv)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| format_rational(self.get(i, j))).collect())
            .collect()
    }
}

/// Exceptional configuration: curve labels plus their symmetric
/// negative-definite intersection matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionMatrix {
    labels: Vec<String>,
    matrix: RatMatrix,
}

#[derive(Serialize, Deserialize)]
struct IntersectionMatrixDto {
    labels: Vec<String>,
    matrix: Vec<Vec<String>>,
}

impl IntersectionMatrix {
    /// Validates: square with one row per label, symmetric, negative definite
    /// via the leading-principal-minor signs (−1)^k det M_k > 0.
    pub fn new(labels: Vec<String>, matrix: RatMatrix) -> Result<Self> {
        if matrix.rows() != labels.len() || matrix.cols() != labels.len() {
            return Err(Error::Validation(format!(
                "intersection matrix is {}x{} but there are {} labels",
                matrix.rows(),
                matrix.cols(),
                labels.len()
            )));
        }
        for i in 0..matrix.rows() {
            for j in (i + 1)..matrix.cols() {
                if matrix.get(i, j) != matrix.get(j, i) {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        for k in 1..=matrix.rows() {
            let d = matrix.leading_minor(k).det();
            let sign_ok = if k % 2 == 0 {
                d.is_positive()
            } else {
                d.is_negative()
            };
            if !sign_ok {
                return Err(Error::NotNegativeDefinite { k });
            }
        }
        Ok(IntersectionMatrix { labels, matrix })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// Λ = M^{-1}, exact.
    pub fn invert(&self) -> Result<RatMatrix> {
        self.matrix.inverse()
    }

    pub fn from_json_str(text: &str, context: &str) -> Result<Self> {
        let dto: IntersectionMatrixDto = serde_json::from_str(text).map_err(|source| Error::Json {
            context: context.to_string(),
            source,
        })?;
        let mut rows = Vec::with_capacity(dto.matrix.len());
        for row in &dto.matrix {
            let mut out = Vec::with_capacity(row.len());
            for cell in row {
                out.push(parse_rational(cell)?);
            }
            rows.push(out);
        }
        if rows.iter().any(|r| r.len() != dto.labels.len()) || rows.len() != dto.labels.len() {
            return Err(Error::Validation(
                "intersection matrix rows do not match the label count".to_string(),
            ));
        }
        IntersectionMatrix::new(dto.labels, RatMatrix::from_rows(rows))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "labels": self.labels,
            "matrix": self.matrix.to_string_rows(),
        })
    }
}

/// ADE families of exceptional configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdeKind {
    A,
    D,
    E,
}

impl fmt::Display for AdeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeKind::A => write!(f, "A"),
            AdeKind::D => write!(f, "D"),
            AdeKind::E => write!(f, "E"),
        }
    }
}

/// Dynkin-tree adjacency as 1-based node pairs. Conventions: A_r is the path
/// 1−2−…−r; D_r puts the trivalent node last (adjacent to 1, 2, 3) with the
/// tail 3−4−…−(r−1); E_r is the path 1−…−(r−1) with node r attached to 3.
fn dynkin_edges(kind: AdeKind, rank: usize) -> Result<Vec<(usize, usize)>> {
    let invalid = || {
        Err(Error::Domain(format!(
            "no {kind}-type configuration of rank {rank}: A needs rank >= 1, D rank >= 4, E rank in {{6,7,8}}"
        )))
    };
    match kind {
        AdeKind::A => {
            if rank < 1 {
                return invalid();
            }
            Ok((1..rank).map(|i| (i, i + 1)).collect())
        }
        AdeKind::D => {
            if rank < 4 {
                return invalid();
            }
            let mut edges = vec![(1, rank), (2, rank), (3, rank)];
            edges.extend((3..rank - 1).map(|i| (i, i + 1)));
            Ok(edges)
        }
        AdeKind::E => {
            if !(6..=8).contains(&rank) {
                return invalid();
            }
            let mut edges: Vec<(usize, usize)> = (1..rank - 1).map(|i| (i, i + 1)).collect();
            edges.push((3, rank));
            Ok(edges)
        }
    }
}

/// Intersection matrix of the minimal resolution of the corresponding simple
/// singularity: E_i² = −2, E_i·E_j = 1 exactly for Dynkin-adjacent curves.
pub fn ade_intersection_matrix(kind: AdeKind, rank: usize) -> Result<IntersectionMatrix> {
    let edges = dynkin_edges(kind, rank)?;
    let mut m = RatMatrix::zeros(rank, rank);
    for i in 0..rank {
        m.set(i, i, rat(-2));
    }
    for (a, b) in edges {
        m.set(a - 1, b - 1, rat(1));
        m.set(b - 1, a - 1, rat(1));
    }
    let labels = (1..=rank).map(|i| format!("E{i}")).collect();
    IntersectionMatrix::new(labels, m)
}

/// Shared configuration context for correspondences.
pub type Context = Arc<IntersectionMatrix>;

/// q·Δ + Σ c_{ij} E_i×E_j over a fixed configuration.
#[derive(Clone, Debug)]
pub struct Correspondence {
    context: Context,
    diagonal: Rational,
    curves: RatMatrix,
}

impl PartialEq for Correspondence {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.diagonal == other.diagonal && self.curves == other.curves
    }
}
impl Eq for Correspondence {}

impl Correspondence {
    pub fn new(context: Context, diagonal: Rational, curves: RatMatrix) -> Self {
        assert_eq!(curves.rows(), context.rank());
        assert_eq!(curves.cols(), context.rank());
        Correspondence {
            context,
            diagonal,
            curves,
        }
    }

    pub fn diagonal_cycle(context: Context) -> Self {
        let r = context.rank();
        Correspondence::new(context, rat(1), RatMatrix::zeros(r, r))
    }

    pub fn zero(context: Context) -> Self {
        let r = context.rank();
        Correspondence::new(context, rat(0), RatMatrix::zeros(r, r))
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn diagonal_coeff(&self) -> &Rational {
        &self.diagonal
    }

    pub fn curve_coeffs(&self) -> &RatMatrix {
        &self.curves
    }

    fn same_context(&self, other: &Correspondence) -> bool {
        Arc::ptr_eq(&self.context, &other.context) || *self.context == *other.context
    }

    pub fn add(&self, other: &Correspondence) -> Result<Correspondence> {
        self.require_context(other)?;
        Ok(Correspondence::new(
            self.context.clone(),
            &self.diagonal + &other.diagonal,
            self.curves.add(&other.curves),
        ))
    }

    pub fn sub(&self, other: &Correspondence) -> Result<Correspondence> {
        self.require_context(other)?;
        Ok(Correspondence::new(
            self.context.clone(),
            &self.diagonal - &other.diagonal,
            self.curves.sub(&other.curves),
        ))
    }

    pub fn scale(&self, c: &Rational) -> Correspondence {
        Correspondence::new(self.context.clone(), &self.diagonal * c, self.curves.scale(c))
    }

    fn require_context(&self, other: &Correspondence) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.context.labels().join(","),
                right: other.context.labels().join(","),
            })
        }
    }

    pub fn is_idempotent(&self) -> bool {
        compose(self, self).map(|sq| sq == *self).unwrap_or(false)
    }

    pub fn is_zero(&self) -> bool {
        self.diagonal.is_zero() && self.curves.is_zero()
    }
}

impl fmt::Display for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.diagonal.is_zero() {
            if self.diagonal.is_one() {
                parts.push("D".to_string());
            } else {
                parts.push(format!("{}*D", format_rational(&self.diagonal)));
            }
        }
        let labels = self.context.labels();
        for i in 0..self.curves.rows() {
            for j in 0..self.curves.cols() {
                let c = self.curves.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let body = format!("{}x{}", labels[i], labels[j]);
                if c.is_one() {
                    parts.push(body);
                } else {
                    parts.push(format!("{}*{}", format_rational(c), body));
                }
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

/// Mumford's projector Δ − Σ Λ_{ij} E_i×E_j with Λ the inverse intersection
/// matrix; the empty configuration gives Δ itself.
pub fn mumford_projector(context: &Context) -> Result<Correspondence> {
    let r = context.rank();
    if r == 0 {
        return Ok(Correspondence::diagonal_cycle(context.clone()));
    }
    let lambda = context.invert()?;
    Ok(Correspondence::new(
        context.clone(),
        rat(1),
        lambda.scale(&rat(-1)),
    ))
}

/// Composition "apply `first`, then `second`": bilinear extension of
/// Δ∘Δ = Δ, Δ∘(E_i×E_j) = (E_i×E_j)∘Δ = E_i×E_j, and
/// (E_k×E_l)∘(E_i×E_j) = (E_j·E_k)(E_i×E_l). In coefficients with
/// (q₁,c₁) = `first`: q = q₁q₂, c = q₂c₁ + q₁c₂ + c₁·M·c₂.
pub fn compose(second: &Correspondence, first: &Correspondence) -> Result<Correspondence> {
    first.require_context(second)?;
    let m = first.context().matrix();
    let q = &first.diagonal * &second.diagonal;
    let c = first
        .curves
        .scale(&second.diagonal)
        .add(&second.curves.scale(&first.diagonal))
        .add(&first.curves.mul(m).mul(&second.curves));
    Ok(Correspondence::new(first.context.clone(), q, c))
}

/// The orthogonality identity at the matrix level: Λ·M = identity, exactly.
pub fn check_orthogonality(lambda: &RatMatrix, m: &IntersectionMatrix) -> bool {
    lambda.rows() == m.rank()
        && lambda.cols() == m.rank()
        && lambda.mul(m.matrix()) == RatMatrix::identity(m.rank())
}
