//! Crate-wide error type.
//!
//! Every fallible operation in the engine reports through [`Error`]. The
//! variants distinguish structural misuse (mismatched variable sets,
//! out-of-range coefficient requests) from domain rejections (asymmetric
//! Hodge grids, non-proper atoms in a graded realization, invalid ADE data).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A piece of text did not parse as the expected value.
    #[error("cannot parse {what} from {text:?}: {reason}")]
    Parse {
        what: &'static str,
        text: String,
        reason: String,
    },

    /// JSON input was syntactically or structurally invalid.
    #[error("invalid JSON{}: {source}", context_suffix(.context))]
    Json {
        context: String,
        #[source]
        source: serde_json::Error,
    },

    /// A Hodge grid had the wrong shape (row count or row length).
    #[error("Hodge grid of {name:?} is malformed: {detail}")]
    HodgeGrid { name: String, detail: String },

    /// A Hodge grid violated h^{p,q} = h^{q,p}.
    #[error("Hodge grid of {name:?} is asymmetric at (p,q) = ({p},{q}): h^{{{p},{q}}} = {found} but h^{{{q},{p}}} = {mirror}")]
    AsymmetricHodge {
        name: String,
        p: usize,
        q: usize,
        found: u64,
        mirror: u64,
    },

    /// A graded (Poincaré/Hodge) realization was requested for a non-proper
    /// atom; only rank-level data is certified there.
    #[error("atom {atom:?} is not proper: graded realizations are rank-only for open atoms; use realize_euler or the rank table instead")]
    RankOnly { atom: String },

    /// Two series with different variable sets were combined.
    #[error("series variable sets differ: {left} vs {right} variables")]
    VarMismatch { left: usize, right: usize },

    /// A coefficient outside the truncation box was requested.
    #[error("multidegree {requested:?} lies outside the truncation bounds {bounds:?}")]
    OutOfBounds {
        requested: Vec<u32>,
        bounds: Vec<u32>,
    },

    /// An Euler-product factor whose monomial has series-degree zero can
    /// never terminate under expansion.
    #[error("euler_factor monomial has series-degree 0; its expansion does not terminate")]
    NonTerminating,

    /// Matrix inversion met a zero pivot.
    #[error("matrix is singular; no exact inverse exists")]
    SingularMatrix,

    /// An intersection matrix failed symmetry.
    #[error("intersection matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },

    /// An intersection matrix failed the leading-principal-minor sign test
    /// for negative definiteness.
    #[error("intersection matrix is not negative definite: leading {k}x{k} minor has the wrong sign")]
    NotNegativeDefinite { k: usize },

    /// Two correspondences over different exceptional configurations were
    /// composed.
    #[error("correspondence contexts differ: {left:?} vs {right:?}")]
    ContextMismatch { left: String, right: String },

    /// A precondition on mathematical input data failed.
    #[error("{0}")]
    Domain(String),

    /// A validator rejected its input.
    #[error("validation failed: {0}")]
    Validation(String),
}

fn context_suffix(context: &str) -> String {
    if context.is_empty() {
        String::new()
    } else {
        format!(" in {context}")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
